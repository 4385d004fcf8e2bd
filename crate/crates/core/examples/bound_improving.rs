//! Bound-improving mode: stop at the first value strictly below a known
//! bound rather than at the target.

use sawfold::engine::{run_search, Outcome, SearchConfig, SearchMode};
use sawfold::hpfold::{HpProblem, Plan};
use sawfold::rng;

fn main() -> sawfold::Result<()> {
    let problem = HpProblem::builder(Plan::C, 16).weight(8).build()?;
    let mut bound = 0;
    for seed in 0..12 {
        let config = SearchConfig::default()
            .with_seed(seed)
            .with_probe_limit(1 << 20)
            .with_mode(SearchMode::BoundImproving { upper_bound: bound });
        let r = run_search(&config, &problem, &mut rng::stream(seed));
        if r.outcome == Outcome::ImprovedBound {
            let (b, t) = problem.split(&r.best);
            println!("seed {seed}: {b}.{t} improves {bound} to {} in {} steps", r.best_value, r.walk_length);
            bound = r.best_value;
        } else {
            println!("seed {seed}: {:?} at {} after {} probes", r.outcome, r.best_value, r.probes);
        }
    }
    println!("final bound {bound}, closed-form target {}", problem.energy_target);
    Ok(())
}
