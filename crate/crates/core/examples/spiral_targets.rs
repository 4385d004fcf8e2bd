//! All-H chains folded toward the maximum-contact bound.

use sawfold::harness::{run_experiment, ExperimentConfig};

fn main() -> sawfold::Result<()> {
    println!(" L target  solved  walk median  probes median");
    for len in 9..=20 {
        let problem = sawfold::hpfold::spiral_instance(len)?;
        let config = ExperimentConfig::new(problem.instance())
            .with_sample_size(20)
            .with_probe_limit(1 << 22);
        let s = run_experiment(&config)?.stats;
        println!(
            "{len:>2} {:>6} {:>4}/20 {:>12} {:>14}",
            problem.energy_target, s.completed, s.walk_length.median, s.cnt_probe.median
        );
    }
    Ok(())
}
