//! Plan B, the inverse problem: fix the fold, search for a weight-4 HP
//! sequence that reaches the target energy on it.

use sawfold::harness::{run_experiment, ExperimentConfig};
use sawfold::hpfold::{InstanceSpec, Plan};

fn main() -> sawfold::Result<()> {
    for coord_t in ["211011011", "200100100"] {
        let instance = InstanceSpec::new(Plan::B, 10).weight(4).fixed_ternary(coord_t).energy_target(-4);
        let e = run_experiment(&ExperimentConfig::new(instance).with_sample_size(200))?;
        let mut sequences: Vec<&str> = e.rows.iter().map(|r| r.coord_b.as_str()).collect();
        sequences.sort();
        sequences.dedup();
        println!(
            "fold {coord_t}: median walkLength {}, max probesPerStep {:.0}, sequences {:?}",
            e.stats.walk_length.median,
            e.stats.probes_per_step.map_or(0.0, |s| s.max),
            sequences
        );
    }
    Ok(())
}
