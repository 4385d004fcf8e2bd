//! The standard 20-, 24- and 25-bead benchmark sequences under plan A, and
//! the plan C variant that only fixes their weight.
//!
//! cargo run --release --example literature_benchmarks [seeds]

use sawfold::harness::{run_experiment, ExperimentConfig};
use sawfold::hpfold::{InstanceSpec, Plan};

const BENCHMARKS: [(&str, &str, i64); 3] = [
    ("S1-20", "HPHPPHHPHPPHPHHPPHPH", -9),
    ("S1-24", "HHPPHPPHPPHPPHPPHPPHPPHH", -9),
    ("S1-25", "PPHPPHHPPPPHHPPPPHHPPPPHH", -8),
];

fn main() -> sawfold::Result<()> {
    let seeds = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    for (name, hp, target) in BENCHMARKS {
        let coord_b: String = hp.chars().map(|c| if c == 'H' { '1' } else { '0' }).collect();
        let n = coord_b.len();
        let w = coord_b.matches('1').count();
        let plans = [
            ("A", InstanceSpec::new(Plan::A, n).fixed_binary(coord_b.clone()).energy_target(target)),
            ("C", InstanceSpec::new(Plan::C, n).weight(w).energy_target(target)),
        ];
        for (plan, instance) in plans {
            let e = run_experiment(&ExperimentConfig::new(instance).with_sample_size(seeds))?;
            let best = e.rows.iter().map(|r| r.value).min().unwrap();
            println!(
                "{name} plan {plan}: {}/{seeds} reached {target}, best {best}, beyond {}, median walkLength {}",
                e.stats.completed, e.stats.beyond_target, e.stats.walk_length.median
            );
        }
    }
    Ok(())
}
