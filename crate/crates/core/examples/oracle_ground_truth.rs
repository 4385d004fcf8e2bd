//! Exhaustive enumeration of the n = 10, w = 4 domain, with and without an
//! anchored first bond, plus the all-H bound check.

use sawfold::hpfold::{target_energy, HpProblem, Plan};
use sawfold::oracle::{enumerate_optimum, Domain, DEFAULT_DOMAIN_CAP};

fn main() -> sawfold::Result<()> {
    for anchored in [false, true] {
        let p = HpProblem::builder(Plan::C, 10).weight(4).anchored(anchored).build()?;
        let r = enumerate_optimum(&p, DEFAULT_DOMAIN_CAP)?;
        println!(
            "anchored={anchored}: {} pairs, min {:?}, {} at or below -3",
            r.evaluations,
            r.min_value,
            r.count_at_or_below(-3)
        );
        for (b, t) in &r.argmin {
            println!("  {b}.{t}");
        }
    }

    for n in 4..=12 {
        let p = HpProblem::builder(Plan::A, n).fixed_binary("1".repeat(n)).build()?;
        let r = enumerate_optimum(&p, DEFAULT_DOMAIN_CAP)?;
        println!("all-H n={n:>2}: oracle {:?}, target_energy {}", r.min_value.unwrap(), target_energy(n));
    }

    let big = HpProblem::builder(Plan::C, 25).weight(9).build()?;
    println!("n=25 w=9 domain: {:?} pairs", Domain::of(&big).size());
    if let Err(e) = enumerate_optimum(&big, DEFAULT_DOMAIN_CAP) {
        println!("  {e}");
    }
    Ok(())
}
