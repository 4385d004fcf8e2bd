mod common;

use std::collections::HashMap;

use proptest::prelude::*;
use sawfold::engine::{self, Problem, SearchConfig, VisitedBuffer};
use sawfold::hpfold::{self, decode_fold, decode_fold_with_heading, HpProblem, Plan};
use sawfold::mixedradix::{self, Coordinate, RadixSpec};
use sawfold::oracle::{self, DEFAULT_DOMAIN_CAP};
use sawfold::rng;

#[test]
fn neighbor_reciprocity_and_degree_formula() {
    let spaces = common::small_spaces(10_000);
    assert!(spaces.len() > 300);
    for spec in &spaces {
        common::neighbor_reciprocity(spec).unwrap();
    }
}

#[test]
fn hasse_edges_match_brute_force() {
    for spec in common::small_spaces(300) {
        common::hasse_matches_brute_force(&spec).unwrap();
    }
}

#[test]
fn walk_segments_are_self_avoiding_unit_chains() {
    let c = HpProblem::builder(Plan::C, 10).weight(4).build().unwrap();
    common::instrumented_walks(&c, 0..40, &SearchConfig::default()).unwrap();
    let a = HpProblem::builder(Plan::A, 12).fixed_binary("110010010011").energy_target(-5).build().unwrap();
    common::instrumented_walks(&a, 100..140, &SearchConfig::default()).unwrap();
    // a tiny buffer forces eviction; chaining and probe counts still hold
    common::instrumented_walks(&c, 0..20, &SearchConfig::default().with_buffer_capacity(3).with_probe_limit(20_000)).unwrap();
}

#[test]
fn probe_limit_truncates_exactly() {
    let p = HpProblem::builder(Plan::C, 14).weight(7).energy_target(-7).build().unwrap();
    for limit in [1, 2, 7, 50, 333] {
        let cfg = SearchConfig::default().with_probe_limit(limit);
        let r = engine::run_search(&cfg, &p, &mut rng::stream(limit));
        assert!(r.probes <= limit);
        if r.censored {
            assert_eq!(r.probes, limit);
        }
    }
}

#[test]
fn mirror_symmetry_of_objective() {
    for p in [
        HpProblem::builder(Plan::C, 10).weight(4).build().unwrap(),
        HpProblem::builder(Plan::C, 16).weight(9).build().unwrap(),
    ] {
        common::mirror_symmetry(&p, 1000, 11).unwrap();
    }
}

#[test]
fn rotation_invariance_of_initial_heading() {
    let p = HpProblem::builder(Plan::C, 12).weight(6).build().unwrap();
    let mut stream = rng::stream(5);
    for _ in 0..1000 {
        let c = p.initial(&mut stream);
        let t = p.ternary(&c);
        let up = decode_fold(t).unwrap();
        let east = decode_fold_with_heading(t, (1, 0)).unwrap();
        assert_eq!(up.first_collision, east.first_collision);
        assert_eq!(up.collision_count, east.collision_count);
        // rotating the start heading by -90 degrees rotates every bead the same way
        for (a, b) in up.positions.iter().zip(&east.positions) {
            assert_eq!((a.1, -a.0), *b);
        }
        if up.feasible() {
            let b = p.binary(&c);
            assert_eq!(hpfold::contacts(&up, b).unwrap(), hpfold::contacts(&east, b).unwrap());
        }
    }
}

#[test]
fn reversal_preserves_energy_multiset() {
    // reading the chain from the other end reverses the binary string; the
    // multiset of feasible energies over all folds is unchanged
    for (n, b) in [(6, "110100"), (7, "1001101"), (8, "11000101")] {
        let fwd = HpProblem::builder(Plan::A, n).fixed_binary(b).build().unwrap();
        let rev_b: String = b.chars().rev().collect();
        let rev = HpProblem::builder(Plan::A, n).fixed_binary(rev_b).build().unwrap();
        let feasible = |p: &HpProblem| -> HashMap<i64, u64> {
            let r = oracle::enumerate_optimum(p, DEFAULT_DOMAIN_CAP).unwrap();
            r.histogram.into_iter().filter(|(v, _)| *v <= 0).collect()
        };
        assert_eq!(feasible(&fwd), feasible(&rev), "{b}");
    }
}

#[test]
fn feasible_energies_within_bound_exhaustively() {
    for n in 4..=8 {
        let all_h = HpProblem::builder(Plan::A, n).fixed_binary("1".repeat(n)).build().unwrap();
        let r = oracle::enumerate_optimum(&all_h, DEFAULT_DOMAIN_CAP).unwrap();
        assert_eq!(r.histogram.values().sum::<u64>(), 3u64.pow(n as u32 - 1));
        let lowest = *r.histogram.keys().next().unwrap();
        assert!(lowest >= hpfold::target_energy(n));
        for w in 0..=n {
            let c = HpProblem::builder(Plan::C, n).weight(w).build().unwrap();
            let r = oracle::enumerate_optimum(&c, DEFAULT_DOMAIN_CAP).unwrap();
            assert!(r.min_value.unwrap() >= hpfold::target_energy(n));
            // positive values are penalties, at most n - 1 collisions past the first
            assert!(*r.histogram.keys().last().unwrap() < 2 * n as i64);
        }
    }
}

#[test]
fn oracle_bounds_solver_results() {
    let p = HpProblem::builder(Plan::C, 8).weight(4).energy_target(-2).build().unwrap();
    let min = oracle::enumerate_optimum(&p, DEFAULT_DOMAIN_CAP).unwrap().min_value.unwrap();
    for seed in 0..50 {
        let r = engine::run_search(&SearchConfig::default().with_seed(seed), &p, &mut rng::stream(seed));
        assert!(!r.censored);
        assert!(min <= r.best_value);
        assert!(p.is_solution(&r.best));
    }
}

#[test]
fn deterministic_csv_and_shard_merge() {
    let cfg = common::small_campaign();
    common::deterministic_csv(&cfg).unwrap();
    common::shard_merge(&cfg, (1, 39)).unwrap();
    common::shard_merge(&cfg, (20, 20)).unwrap();
}

/// Two-segment toy objective: distance to a fixed far corner.
struct Corner {
    spec: std::sync::Arc<RadixSpec>,
}

impl Problem for Corner {
    fn space(&self) -> &std::sync::Arc<RadixSpec> {
        &self.spec
    }
    fn evaluate(&self, c: &Coordinate) -> i64 {
        c.digits().iter().filter(|&&d| d == 0).count() as i64
    }
    fn target(&self) -> i64 {
        i64::MIN
    }
    fn initial(&self, rng: &mut rng::WalkRng) -> Coordinate {
        mixedradix::random_coordinate(&self.spec, rng, None).unwrap()
    }
}

#[test]
fn unbounded_buffer_eventually_covers_the_space() {
    // the stop value is unreachable, so the walk keeps marking pivots; with
    // an unbounded buffer every restart lands somewhere new or inherits a mark
    let problem = Corner { spec: RadixSpec::new([(2, 4), (3, 3)]).unwrap() };
    let size = problem.spec.size().unwrap() as usize;
    let cfg = SearchConfig::default().with_probe_limit(200_000).with_buffer_capacity(usize::MAX);
    let mut rec = common::Recorder::default();
    let r = engine::run_search_observed(&cfg, &problem, &mut rng::stream(3), &mut rec);
    assert!(r.censored);
    let mut buffer = VisitedBuffer::unbounded();
    for c in rec.segments.iter().flatten() {
        buffer.insert(c.clone());
    }
    assert_eq!(buffer.len(), size);
}

#[test]
fn best_neighbor_of_known_pivot() {
    let p = HpProblem::builder(Plan::A, 10).fixed_binary("1100101001").build().unwrap();
    let pivot = p.coordinate("1100101001", "221101111").unwrap();
    let visited = VisitedBuffer::new(16);
    let mut probes = engine::ProbeCounter::new(u64::MAX);
    let (best, value, made) =
        engine::best_neighbor(&pivot, &p, &visited, &mut rng::stream(1901), &mut probes).unwrap();
    assert_eq!(made, 15);
    assert_eq!(value, -4);
    assert_eq!(p.split(&best).1, "221101211");
}

proptest! {
    #[test]
    fn rank_distance_is_a_metric(a in prop::collection::vec(0u8..5, 6), b in prop::collection::vec(0u8..5, 6),
                                 c in prop::collection::vec(0u8..5, 6)) {
        let spec = RadixSpec::new([(5, 6)]).unwrap();
        let [a, b, c] = [a, b, c].map(|d| Coordinate::new(&spec, d).unwrap());
        let d = |x: &Coordinate, y: &Coordinate| mixedradix::rank_distance(x, y).unwrap();
        prop_assert_eq!(d(&a, &b), d(&b, &a));
        prop_assert_eq!(d(&a, &a), 0);
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c));
    }

    #[test]
    fn objective_matches_contacts(t in prop::collection::vec(0u8..3, 11), bits in prop::collection::vec(0u8..2, 12)) {
        let fold = decode_fold(&t).unwrap();
        let v = hpfold::objective(&bits, &t, &hpfold::CollisionPenalty).unwrap().0;
        if fold.feasible() {
            prop_assert_eq!(v, -(hpfold::contacts(&fold, &bits).unwrap() as i64));
        } else {
            prop_assert!(v >= 1);
            prop_assert!(hpfold::contacts(&fold, &bits).is_err());
        }
    }
}
