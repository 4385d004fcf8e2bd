//! Plan C: search sequence and fold together. Sweeps weight and target on
//! the n = 10 chain and prints a campaign table.
//!
//! cargo run --release --example plan_c_campaign [seeds]

use sawfold::harness::{run_experiment, ExperimentConfig};
use sawfold::hpfold::{InstanceSpec, Plan};

fn main() -> sawfold::Result<()> {
    let seeds = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);
    println!("  w target beyond unique   walk median    mean   stdev   probes/step median");
    for (w, target) in [(4, -4), (4, -3), (5, -4), (5, -3), (6, -4), (6, -3)] {
        let instance = InstanceSpec::new(Plan::C, 10).weight(w).energy_target(target);
        let s = run_experiment(&ExperimentConfig::new(instance).with_sample_size(seeds))?.stats;
        println!(
            "{w:>3} {target:>6} {:>6} {:>6} {:>13} {:>7.1} {:>7.1} {:>20.2}",
            s.beyond_target,
            s.unique_solutions,
            s.walk_length.median,
            s.walk_length.mean,
            s.walk_length.stdev,
            s.probes_per_step.map_or(f64::NAN, |p| p.median)
        );
    }
    Ok(())
}
