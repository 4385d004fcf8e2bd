//! Plan A: fold a fixed HP sequence. Only the turn digits move.

use sawfold::engine::{run_search, SearchConfig};
use sawfold::harness::render_ascii;
use sawfold::hpfold::{HpProblem, Plan};
use sawfold::rng;

fn main() -> sawfold::Result<()> {
    let problem = HpProblem::builder(Plan::A, 10).fixed_binary("1001001001").build()?;
    println!("instance: {}", problem.instance());

    for seed in 1901..1906 {
        let config = SearchConfig::default().with_seed(seed);
        let r = run_search(&config, &problem, &mut rng::stream(seed));
        let (b, t) = problem.split(&r.best);
        println!(
            "seed {seed}: {b}.{t} value {} after {} steps, {} probes, {} restarts",
            r.best_value, r.walk_length, r.probes, r.restarts
        );
    }

    let config = SearchConfig::default();
    let r = run_search(&config, &problem, &mut rng::stream(config.seed));
    let (b, t) = problem.split(&r.best);
    print!("{}", render_ascii(&b, &t)?);
    Ok(())
}
