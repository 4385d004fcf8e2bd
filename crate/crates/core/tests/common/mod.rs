//! Checks shared by the acceptance runner and the property tests. Each
//! returns `Err` with a description of the first violation.
#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use sawfold::engine::{self, Problem, SearchConfig, StepKind, WalkObserver, WalkState};
use sawfold::harness::{self, ExperimentConfig};
use sawfold::hpfold::{HpProblem, InstanceSpec, Plan};
use sawfold::mixedradix::{self, Coordinate, RadixSpec};
use sawfold::rng;

pub type Check = Result<(), String>;

/// One- and two-segment spaces with bases 2..=6, lengths 1..=5 and at most
/// `max_size` vertices.
pub fn small_spaces(max_size: u128) -> Vec<Arc<RadixSpec>> {
    let mut out = Vec::new();
    let singles: Vec<(u8, usize)> = (2..=6).flat_map(|b| (1..=5).map(move |l| (b, l))).collect();
    for &a in &singles {
        out.push(RadixSpec::new([a]).unwrap());
        for &b in &singles {
            out.push(RadixSpec::new([a, b]).unwrap());
        }
    }
    out.retain(|s| s.size().is_some_and(|n| n <= max_size));
    out
}

fn rank(c: &Coordinate) -> u64 {
    c.digits()
        .iter()
        .enumerate()
        .fold(0, |acc, (p, &d)| acc * c.spec().base_at(p) as u64 + d as u64)
}

/// Every neighbor relation is symmetric, at rank distance 1, and each
/// vertex has the degree the formula predicts.
pub fn neighbor_reciprocity(spec: &Arc<RadixSpec>) -> Check {
    let mut seen: HashMap<(u64, u64), u8> = HashMap::new();
    let mut degree_sum = 0usize;
    for v in spec.enumerate(u128::MAX).map_err(|e| e.to_string())? {
        let ns = mixedradix::neighbors(&v);
        if ns.len() != v.degree() {
            return Err(format!("{spec}: {v} has {} neighbors, formula says {}", ns.len(), v.degree()));
        }
        let expected: usize = v
            .digits()
            .iter()
            .enumerate()
            .map(|(p, &d)| if d == 0 || d + 1 == spec.base_at(p) { 1 } else { 2 })
            .sum();
        if expected != v.degree() {
            return Err(format!("{spec}: degree of {v} is {}, expected {expected}", v.degree()));
        }
        degree_sum += ns.len();
        let rv = rank(&v);
        for u in ns {
            if mixedradix::rank_distance(&u, &v).unwrap() != 1 {
                return Err(format!("{spec}: {u} and {v} are not at distance 1"));
            }
            let ru = rank(&u);
            *seen.entry((rv.min(ru), rv.max(ru))).or_default() += 1;
        }
    }
    if let Some(((a, b), _)) = seen.iter().find(|(_, &c)| c != 2) {
        return Err(format!("{spec}: edge {a}-{b} is not reciprocal"));
    }
    let stats = mixedradix::hasse_stats(spec, u128::MAX).map_err(|e| e.to_string())?;
    if stats.edge_count as usize * 2 != degree_sum {
        return Err(format!("{spec}: {} edges but degree sum {degree_sum}", stats.edge_count));
    }
    Ok(())
}

/// Hasse edge count against an all-pairs rank-distance scan.
pub fn hasse_matches_brute_force(spec: &Arc<RadixSpec>) -> Check {
    let all: Vec<Coordinate> = spec.enumerate(u128::MAX).map_err(|e| e.to_string())?.collect();
    let mut edges = 0u64;
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            if mixedradix::rank_distance(a, b).unwrap() == 1 {
                edges += 1;
            }
        }
    }
    let stats = mixedradix::hasse_stats(spec, u128::MAX).map_err(|e| e.to_string())?;
    if stats.vertex_count != all.len() as u64 || stats.edge_count != edges {
        return Err(format!("{spec}: stats {stats:?}, brute force {} vertices {edges} edges", all.len()));
    }
    Ok(())
}

/// Records each walk segment (pivots between restarts) and the probes
/// reported by each step.
#[derive(Default)]
pub struct Recorder {
    pub segments: Vec<Vec<Coordinate>>,
    pub probes: u64,
}

impl WalkObserver for Recorder {
    fn on_start(&mut self, pivot: &Coordinate, _value: i64) {
        self.segments.push(vec![pivot.clone()]);
        self.probes += 1;
    }

    fn on_step(&mut self, state: &WalkState, kind: StepKind) {
        match kind {
            StepKind::Advanced { probes } => {
                self.probes += probes;
                self.segments.last_mut().unwrap().push(state.pivot.clone());
            }
            StepKind::Restarted => {
                self.probes += 1;
                self.segments.push(vec![state.pivot.clone()]);
            }
        }
    }
}

/// Instrumented runs: segments never revisit a coordinate (as long as the
/// buffer holds the whole segment), consecutive pivots are at distance 1,
/// and the observed probes add up to the reported count.
pub fn instrumented_walks(problem: &dyn Problem, seeds: std::ops::Range<u64>, config: &SearchConfig) -> Check {
    for seed in seeds {
        let mut rec = Recorder::default();
        let cfg = config.clone().with_seed(seed);
        let r = engine::run_search_observed(&cfg, problem, &mut rng::stream(seed), &mut rec);
        if rec.probes != r.probes {
            return Err(format!("seed {seed}: observed {} probes, reported {}", rec.probes, r.probes));
        }
        let steps: usize = rec.segments.iter().map(|s| s.len()).sum::<usize>() - 1;
        if steps as u64 != r.walk_length {
            return Err(format!("seed {seed}: {steps} observed steps, walk length {}", r.walk_length));
        }
        for seg in &rec.segments {
            for w in seg.windows(2) {
                if mixedradix::rank_distance(&w[0], &w[1]).unwrap() != 1 {
                    return Err(format!("seed {seed}: step {} -> {} is not a unit move", w[0], w[1]));
                }
            }
            if seg.len() <= cfg.buffer_capacity {
                let mut sorted = seg.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != seg.len() {
                    return Err(format!("seed {seed}: walk segment revisits a coordinate"));
                }
            }
        }
    }
    Ok(())
}

/// Left/right mirror (`0 <-> 1` on turn digits) preserves the objective.
pub fn mirror_symmetry(problem: &HpProblem, samples: usize, seed: u64) -> Check {
    let mut stream = rng::stream(seed);
    for _ in 0..samples {
        let c = problem.initial(&mut stream);
        let mirrored: Vec<u8> = problem
            .ternary(&c)
            .iter()
            .map(|&d| match d {
                0 => 1,
                1 => 0,
                d => d,
            })
            .collect();
        let (a, b) = (problem.evaluate(&c), problem.value_of(problem.binary(&c), &mirrored));
        if a != b {
            return Err(format!("{c}: value {a}, mirror value {b}"));
        }
    }
    Ok(())
}

pub fn small_campaign() -> ExperimentConfig {
    ExperimentConfig::new(InstanceSpec::new(Plan::C, 8).weight(3).energy_target(-2)).with_sample_size(40)
}

/// Same configuration, byte-identical CSV.
pub fn deterministic_csv(config: &ExperimentConfig) -> Check {
    let csv = |cfg: &ExperimentConfig| -> Result<Vec<u8>, String> {
        let e = harness::run_experiment(cfg).map_err(|e| e.to_string())?;
        let mut buf = Vec::new();
        harness::write_csv(&e.rows, &mut buf).map_err(|e| e.to_string())?;
        Ok(buf)
    };
    let first = csv(config)?;
    let again = csv(config)?;
    let threaded = csv(&config.clone().with_parallelism(3))?;
    if first != again || first != threaded {
        return Err("repeated campaigns produced different CSV".into());
    }
    let rows = harness::read_csv(first.as_slice()).map_err(|e| e.to_string())?;
    if rows.len() != config.sample_size {
        return Err(format!("CSV parsed to {} rows", rows.len()));
    }
    Ok(())
}

/// Shards `[0, a)`, `[a, b)`, `[b, n)`, merged in any order, give the
/// single-shot rows and stats.
pub fn shard_merge(config: &ExperimentConfig, cuts: (u64, u64)) -> Check {
    let n = config.sample_size as u64;
    let whole = harness::run_experiment(config).map_err(|e| e.to_string())?;
    let run = |r: std::ops::Range<u64>| harness::run_shard(config, r).map_err(|e| e.to_string());
    let shards = vec![run(cuts.1..n)?, run(0..cuts.0)?, run(cuts.0..cuts.1)?];
    let merged = harness::Shard::merge(shards).map_err(|e| e.to_string())?;
    let target = config.instance.build().map_err(|e| e.to_string())?.energy_target;
    let stats = harness::ExperimentStats::from_rows(&merged.rows, target).map_err(|e| e.to_string())?;
    if merged.rows != whole.rows || stats != whole.stats {
        return Err("sharded campaign differs from single-shot".into());
    }
    Ok(())
}
