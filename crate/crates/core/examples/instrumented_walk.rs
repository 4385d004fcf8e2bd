//! Step-by-step trace of one walk through a custom observer.

use sawfold::engine::{run_search_observed, SearchConfig, StepKind, WalkObserver, WalkState};
use sawfold::hpfold::{HpProblem, Plan};
use sawfold::mixedradix::Coordinate;
use sawfold::rng;

#[derive(Default)]
struct Trace {
    lines: Vec<String>,
}

impl WalkObserver for Trace {
    fn on_start(&mut self, pivot: &Coordinate, value: i64) {
        self.lines.push(format!("start   {pivot} value {value}"));
    }

    fn on_step(&mut self, state: &WalkState, kind: StepKind) {
        let what = match kind {
            StepKind::Advanced { probes } => format!("step    ({probes:>2} probes)"),
            StepKind::Restarted => "restart".to_string(),
        };
        self.lines.push(format!("{what} {} value {}", state.pivot, state.pivot_value));
    }
}

fn main() -> sawfold::Result<()> {
    let problem = HpProblem::builder(Plan::A, 10).fixed_binary("1001001001").build()?;
    let config = SearchConfig::default().with_buffer_capacity(8);
    let mut trace = Trace::default();
    let r = run_search_observed(&config, &problem, &mut rng::stream(config.seed), &mut trace);
    for line in &trace.lines {
        println!("{line}");
    }
    println!("best {} value {} walkLength {} cntProbe {}", r.best, r.best_value, r.walk_length, r.probes);
    Ok(())
}
