//! Self-avoiding walk search.
//!
//! A walk marks its initial pivot, probes every admissible unmarked neighbor
//! of the current pivot, and steps to the one with the smallest value (ties
//! random), even when that is uphill. When every admissible neighbor is
//! already marked the walk is trapped and restarts from a fresh random
//! coordinate. Marked pivots live in a FIFO [`VisitedBuffer`] of bounded
//! capacity. A run stops when the best value reaches the stopping value or
//! the probe counter reaches its limit (a censored run).

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::mixedradix::{self, Coordinate, DigitMove, RadixSpec};
use crate::rng::{WalkRng, DEFAULT_BASE_SEED};

pub const DEFAULT_PROBE_LIMIT: u64 = 1 << 24;
pub const DEFAULT_BUFFER_CAPACITY: usize = 1 << 20;

/// An objective over a mixed-radix space, with its move filter and side
/// constraint.
pub trait Problem: Sync {
    fn space(&self) -> &Arc<RadixSpec>;

    /// Objective value; smaller is better.
    fn evaluate(&self, c: &Coordinate) -> i64;

    /// Whether `mv` may be taken from `pivot`.
    fn admits(&self, _pivot: &Coordinate, _mv: DigitMove) -> bool {
        true
    }

    /// Side constraint a coordinate must meet to count as a solution (and to
    /// be recorded as best-so-far).
    fn accepts(&self, _c: &Coordinate) -> bool {
        true
    }

    /// Stopping value in fixed-target mode.
    fn target(&self) -> i64;

    /// A random initial pivot. Must satisfy [`Problem::accepts`].
    fn initial(&self, rng: &mut WalkRng) -> Coordinate;
}

/// Insertion-ordered set of marked pivots with FIFO eviction.
#[derive(Clone, Debug)]
pub struct VisitedBuffer {
    capacity: usize,
    order: VecDeque<Coordinate>,
    members: HashSet<Coordinate>,
}

impl VisitedBuffer {
    pub fn new(capacity: usize) -> Self {
        assert!(capacity >= 1, "visited buffer needs capacity >= 1");
        VisitedBuffer {
            capacity,
            order: VecDeque::new(),
            members: HashSet::new(),
        }
    }

    pub fn unbounded() -> Self {
        Self::new(usize::MAX)
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn contains(&self, c: &Coordinate) -> bool {
        self.members.contains(c)
    }

    /// Marks `c`; returns `false` if it was already marked.
    pub fn insert(&mut self, c: Coordinate) -> bool {
        if !self.members.insert(c.clone()) {
            return false;
        }
        self.order.push_back(c);
        if self.order.len() > self.capacity {
            if let Some(old) = self.order.pop_front() {
                self.members.remove(&old);
            }
        }
        true
    }

    /// Oldest first.
    pub fn iter(&self) -> impl Iterator<Item = &Coordinate> {
        self.order.iter()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchMode {
    /// Stop once the best value is at or below the problem's target.
    FixedTarget,
    /// Stop once the best value is at or below `upper_bound`; a strictly
    /// lower value is reported as an improved bound.
    BoundImproving { upper_bound: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub seed: u64,
    pub probe_limit: u64,
    pub buffer_capacity: usize,
    pub mode: SearchMode,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: DEFAULT_BASE_SEED,
            probe_limit: DEFAULT_PROBE_LIMIT,
            buffer_capacity: DEFAULT_BUFFER_CAPACITY,
            mode: SearchMode::FixedTarget,
        }
    }
}

impl SearchConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_probe_limit(mut self, limit: u64) -> Self {
        self.probe_limit = limit.max(1);
        self
    }

    pub fn with_buffer_capacity(mut self, capacity: usize) -> Self {
        self.buffer_capacity = capacity.max(1);
        self
    }

    pub fn with_mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    /// Stopping value reached (possibly beaten).
    Reached,
    /// Bound-improving mode found a value strictly below the bound.
    ImprovedBound,
    /// Probe limit hit first.
    Censored,
}

/// One tabled run: `(seed, best coordinate, best value, cntProbe, walkLength, isCensored)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub seed: u64,
    pub best: Coordinate,
    pub best_value: i64,
    pub probes: u64,
    pub walk_length: u64,
    pub censored: bool,
    pub restarts: u64,
    pub outcome: Outcome,
}

impl SearchResult {
    /// `probes / walk_length`, or `probes` for a zero-length walk.
    pub fn probes_per_step(&self) -> f64 {
        if self.walk_length == 0 {
            self.probes as f64
        } else {
            self.probes as f64 / self.walk_length as f64
        }
    }
}

/// Current pivot, walk length, marked pivots and restart count.
#[derive(Clone, Debug)]
pub struct WalkState {
    pub pivot: Coordinate,
    pub pivot_value: i64,
    pub walk_length: u64,
    pub visited: VisitedBuffer,
    pub restarts: u64,
}

impl WalkState {
    /// Marks `pivot` as the initial pivot of a fresh walk.
    pub fn new(pivot: Coordinate, pivot_value: i64, buffer_capacity: usize) -> Self {
        let mut visited = VisitedBuffer::new(buffer_capacity);
        visited.insert(pivot.clone());
        WalkState {
            pivot,
            pivot_value,
            walk_length: 0,
            visited,
            restarts: 0,
        }
    }
}

/// Objective-evaluation counter with a hard limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeCounter {
    pub count: u64,
    pub limit: u64,
}

impl ProbeCounter {
    pub fn new(limit: u64) -> Self {
        ProbeCounter { count: 0, limit }
    }

    pub fn exhausted(&self) -> bool {
        self.count >= self.limit
    }
}

/// Every admissible neighbor of the pivot is already marked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Trapped;

/// Admissible unmarked neighbors of `pivot`, in a uniformly permuted order.
pub fn open_neighborhood(
    pivot: &Coordinate,
    problem: &dyn Problem,
    visited: &VisitedBuffer,
    rng: &mut WalkRng,
) -> Vec<Coordinate> {
    let all = mixedradix::moves(pivot);
    mixedradix::permuted_indices(all.len(), rng)
        .into_iter()
        .map(|i| all[i])
        .filter(|&mv| problem.admits(pivot, mv))
        .map(|mv| pivot.apply(mv))
        .filter(|c| !visited.contains(c))
        .collect()
}

/// Probes the open neighborhood of `pivot` and returns its best member.
///
/// Members are probed in random order and the first minimum wins, which
/// breaks ties uniformly. Probing stops early if the counter hits its limit;
/// the best of the probed members is returned. The returned count is the
/// number of probes made.
pub fn best_neighbor(
    pivot: &Coordinate,
    problem: &dyn Problem,
    visited: &VisitedBuffer,
    rng: &mut WalkRng,
    probes: &mut ProbeCounter,
) -> Result<(Coordinate, i64, u64), Trapped> {
    let candidates = open_neighborhood(pivot, problem, visited, rng);
    pick_best(candidates, problem, probes)
}

fn pick_best(
    candidates: Vec<Coordinate>,
    problem: &dyn Problem,
    probes: &mut ProbeCounter,
) -> Result<(Coordinate, i64, u64), Trapped> {
    let mut best: Option<(Coordinate, i64)> = None;
    let mut made = 0;
    for c in candidates {
        if probes.exhausted() {
            break;
        }
        let v = problem.evaluate(&c);
        probes.count += 1;
        made += 1;
        if best.as_ref().is_none_or(|(_, bv)| v < *bv) {
            best = Some((c, v));
        }
    }
    match best {
        Some((c, v)) => Ok((c, v, made)),
        None => Err(Trapped),
    }
}

/// What a single step did.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// Moved to a neighbor after `probes` evaluations.
    Advanced { probes: u64 },
    /// Trapped; jumped to a fresh random pivot (one evaluation).
    Restarted,
}

/// One walk step: advance to the best open neighbor, or restart when trapped.
pub fn saw_step(
    state: &mut WalkState,
    problem: &dyn Problem,
    rng: &mut WalkRng,
    probes: &mut ProbeCounter,
) -> StepKind {
    state.walk_length += 1;
    match best_neighbor(&state.pivot, problem, &state.visited, rng, probes) {
        Ok((next, value, made)) => {
            state.visited.insert(next.clone());
            state.pivot = next;
            state.pivot_value = value;
            StepKind::Advanced { probes: made }
        }
        Err(Trapped) => {
            let fresh = problem.initial(rng);
            state.pivot_value = problem.evaluate(&fresh);
            probes.count += 1;
            state.visited.insert(fresh.clone());
            state.pivot = fresh;
            state.restarts += 1;
            StepKind::Restarted
        }
    }
}

/// Hook for instrumented runs.
pub trait WalkObserver {
    fn on_start(&mut self, _pivot: &Coordinate, _value: i64) {}
    fn on_step(&mut self, _state: &WalkState, _kind: StepKind) {}
}

impl WalkObserver for () {}

pub fn run_search(config: &SearchConfig, problem: &dyn Problem, rng: &mut WalkRng) -> SearchResult {
    run_search_observed(config, problem, rng, &mut ())
}

/// [`run_search`] reporting every step to `observer`.
pub fn run_search_observed(
    config: &SearchConfig,
    problem: &dyn Problem,
    rng: &mut WalkRng,
    observer: &mut dyn WalkObserver,
) -> SearchResult {
    let start = problem.initial(rng);
    debug_assert!(problem.accepts(&start), "initial pivot violates the side constraint");
    let start_value = problem.evaluate(&start);
    let mut probes = ProbeCounter::new(config.probe_limit.max(1));
    probes.count = 1;
    observer.on_start(&start, start_value);

    let stop_at = match config.mode {
        SearchMode::FixedTarget => problem.target(),
        SearchMode::BoundImproving { upper_bound } => upper_bound,
    };
    let mut best = start.clone();
    let mut best_value = start_value;
    let mut state = WalkState::new(start, start_value, config.buffer_capacity.max(1));
    let mut censored = false;

    while best_value > stop_at {
        if probes.exhausted() {
            censored = true;
            break;
        }
        let kind = saw_step(&mut state, problem, rng, &mut probes);
        observer.on_step(&state, kind);
        if state.pivot_value <= best_value && problem.accepts(&state.pivot) {
            best = state.pivot.clone();
            best_value = state.pivot_value;
        }
    }

    let outcome = if censored {
        Outcome::Censored
    } else if matches!(config.mode, SearchMode::BoundImproving { .. }) && best_value < stop_at {
        Outcome::ImprovedBound
    } else {
        Outcome::Reached
    };
    SearchResult {
        seed: config.seed,
        best,
        best_value,
        probes: probes.count,
        walk_length: state.walk_length,
        censored,
        restarts: state.restarts,
        outcome,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;

    /// Objective read from a table indexed by odometer rank.
    struct Table {
        spec: Arc<RadixSpec>,
        values: Vec<i64>,
        target: i64,
    }

    impl Table {
        fn rank(&self, c: &Coordinate) -> usize {
            c.digits()
                .iter()
                .enumerate()
                .fold(0, |acc, (p, &d)| acc * self.spec.base_at(p) as usize + d as usize)
        }
    }

    impl Problem for Table {
        fn space(&self) -> &Arc<RadixSpec> {
            &self.spec
        }
        fn evaluate(&self, c: &Coordinate) -> i64 {
            self.values[self.rank(c)]
        }
        fn target(&self) -> i64 {
            self.target
        }
        fn initial(&self, rng: &mut WalkRng) -> Coordinate {
            mixedradix::random_coordinate(&self.spec, rng, None).unwrap()
        }
    }

    #[test]
    fn visited_buffer_fifo_eviction() {
        let spec = RadixSpec::new([(3, 1)]).unwrap();
        let c: Vec<Coordinate> = spec.enumerate(10).unwrap().collect();
        let mut buf = VisitedBuffer::new(2);
        assert!(buf.insert(c[0].clone()));
        assert!(buf.insert(c[1].clone()));
        assert!(!buf.insert(c[0].clone()));
        assert!(buf.insert(c[2].clone()));
        assert_eq!(buf.len(), 2);
        assert!(!buf.contains(&c[0]));
        assert!(buf.contains(&c[1]) && buf.contains(&c[2]));
        assert_eq!(buf.iter().cloned().collect::<Vec<_>>(), vec![c[1].clone(), c[2].clone()]);
    }

    #[test]
    fn single_neighbor_is_taken_even_uphill() {
        let spec = RadixSpec::new([(2, 1)]).unwrap();
        let p = Table { spec: spec.clone(), values: vec![0, 5], target: -1 };
        let pivot = Coordinate::parse(&spec, "0").unwrap();
        let visited = VisitedBuffer::unbounded();
        let mut probes = ProbeCounter::new(10);
        let (next, v, made) = best_neighbor(&pivot, &p, &visited, &mut rng::stream(1), &mut probes).unwrap();
        assert_eq!((next.to_string().as_str(), v, made, probes.count), ("1", 5, 1, 1));
    }

    #[test]
    fn exhausted_neighborhood_is_trapped() {
        let spec = RadixSpec::new([(2, 1)]).unwrap();
        let p = Table { spec: spec.clone(), values: vec![0, 5], target: -1 };
        let pivot = Coordinate::parse(&spec, "0").unwrap();
        let mut visited = VisitedBuffer::unbounded();
        visited.insert(Coordinate::parse(&spec, "1").unwrap());
        let mut probes = ProbeCounter::new(10);
        assert_eq!(
            best_neighbor(&pivot, &p, &visited, &mut rng::stream(1), &mut probes),
            Err(Trapped)
        );
        assert_eq!(probes.count, 0);
    }

    #[test]
    fn tie_break_is_uniform() {
        // pivot 1 has neighbors 0 and 2, both valued 0
        let spec = RadixSpec::new([(3, 1)]).unwrap();
        let p = Table { spec: spec.clone(), values: vec![0, 9, 0], target: -1 };
        let pivot = Coordinate::parse(&spec, "1").unwrap();
        let visited = VisitedBuffer::unbounded();
        let trials = 10_000;
        let mut picked_zero = 0;
        for seed in 0..trials {
            let mut probes = ProbeCounter::new(10);
            let (next, _, _) = best_neighbor(&pivot, &p, &visited, &mut rng::stream(seed), &mut probes).unwrap();
            if next.digits() == [0] {
                picked_zero += 1;
            }
        }
        let freq = picked_zero as f64 / trials as f64;
        assert!((freq - 0.5).abs() <= 0.05, "frequency {freq}");
    }

    #[test]
    fn trapped_step_restarts() {
        let spec = RadixSpec::new([(2, 1)]).unwrap();
        let p = Table { spec: spec.clone(), values: vec![3, 4], target: -1 };
        let start = Coordinate::parse(&spec, "0").unwrap();
        let mut state = WalkState::new(start, 3, 16);
        let mut r = rng::stream(5);
        let mut probes = ProbeCounter::new(100);
        probes.count = 1;
        assert_eq!(saw_step(&mut state, &p, &mut r, &mut probes), StepKind::Advanced { probes: 1 });
        assert_eq!(saw_step(&mut state, &p, &mut r, &mut probes), StepKind::Restarted);
        assert_eq!((state.walk_length, state.restarts, probes.count), (2, 1, 3));
    }

    #[test]
    fn initial_pivot_meeting_target_returns_immediately() {
        let spec = RadixSpec::new([(2, 3)]).unwrap();
        let p = Table { spec, values: vec![0; 8], target: 0 };
        let r = run_search(&SearchConfig::default(), &p, &mut rng::stream(1));
        assert_eq!((r.walk_length, r.probes, r.censored), (0, 1, false));
        assert_eq!(r.outcome, Outcome::Reached);
    }

    #[test]
    fn probe_limit_one_censors_immediately() {
        let spec = RadixSpec::new([(2, 3)]).unwrap();
        let p = Table { spec, values: vec![1; 8], target: 0 };
        let cfg = SearchConfig::default().with_probe_limit(1);
        let r = run_search(&cfg, &p, &mut rng::stream(1));
        assert_eq!((r.walk_length, r.probes, r.censored), (0, 1, true));
        assert_eq!(r.outcome, Outcome::Censored);
    }

    #[test]
    fn probe_limit_is_never_exceeded() {
        let spec = RadixSpec::new([(3, 6)]).unwrap();
        let p = Table { spec, values: vec![1; 729], target: 0 };
        for limit in [2, 7, 50, 333] {
            let cfg = SearchConfig::default().with_probe_limit(limit);
            let r = run_search(&cfg, &p, &mut rng::stream(limit));
            assert!(r.censored);
            assert_eq!(r.probes, limit);
        }
    }

    #[test]
    fn bound_improving_mode_reports_strict_improvement() {
        let spec = RadixSpec::new([(2, 4)]).unwrap();
        let mut values = vec![3; 16];
        values[15] = -2;
        let p = Table { spec, values, target: -100 };
        let cfg = SearchConfig::default().with_mode(SearchMode::BoundImproving { upper_bound: 0 });
        let r = run_search(&cfg, &p, &mut rng::stream(11));
        assert_eq!((r.best_value, r.outcome), (-2, Outcome::ImprovedBound));
        assert_eq!(r.best.to_string(), "1111");

        let cfg = cfg.with_mode(SearchMode::BoundImproving { upper_bound: -2 });
        let r = run_search(&cfg, &p, &mut rng::stream(11));
        assert_eq!(r.outcome, Outcome::Reached);
    }

    #[test]
    fn probes_per_step_zero_walk() {
        let spec = RadixSpec::new([(2, 1)]).unwrap();
        let r = SearchResult {
            seed: 0,
            best: spec.origin(),
            best_value: 0,
            probes: 1,
            walk_length: 0,
            censored: false,
            restarts: 0,
            outcome: Outcome::Reached,
        };
        assert_eq!(r.probes_per_step(), 1.0);
        let r = SearchResult { probes: 30, walk_length: 4, ..r };
        assert_eq!(r.probes_per_step(), 7.5);
    }
}
