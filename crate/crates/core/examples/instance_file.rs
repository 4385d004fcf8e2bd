//! Reads key=value instance records and solves each one.
//!
//! cargo run --example instance_file [path]

use sawfold::engine::{run_search, SearchConfig};
use sawfold::hpfold;
use sawfold::rng;

const DEFAULT_INSTANCES: &str = "\
# plan A: fixed sequence
plan=A n=10 coord_b=1001001001 target=-4
# plan B: fixed fold, find a sequence
plan=B n=10 w=4 coord_t=200100100 target=-4
# plan C with an anchored first bond
plan=C n=10 w=4 target=-4 anchored=true
plan=C n=12 w=6 target=-4 weight_cap=6
";

fn main() -> sawfold::Result<()> {
    let specs = match std::env::args().nth(1) {
        Some(path) => hpfold::read_instances(path.as_ref())?,
        None => hpfold::parse_instances(DEFAULT_INSTANCES)?,
    };
    for spec in specs {
        let problem = spec.build()?;
        let config = SearchConfig::default();
        let r = run_search(&config, &problem, &mut rng::stream(config.seed));
        let (b, t) = problem.split(&r.best);
        println!("{}\n  -> {b}.{t} value {} walkLength {} cntProbe {}", problem.instance(), r.best_value, r.walk_length, r.probes);
    }
    Ok(())
}
