//! Decoding ternary turn strings into square-lattice folds, and the HP
//! contact energy.

use std::fmt;

use crate::error::{Error, Result};

/// Integer lattice point.
pub type Point = (i32, i32);

pub const TURN_LEFT: u8 = 0;
pub const TURN_RIGHT: u8 = 1;
pub const FORWARD: u8 = 2;

/// Heading of the walk before the first digit is read.
pub const INITIAL_HEADING: Point = (0, 1);

/// Lattice positions of a decoded chain and its collision report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldOutcome {
    pub positions: Vec<Point>,
    /// Index of the first bead that landed on an occupied point.
    pub first_collision: Option<usize>,
    /// Total number of beads that landed on an occupied point.
    pub collision_count: usize,
}

impl FoldOutcome {
    pub fn feasible(&self) -> bool {
        self.collision_count == 0
    }

    pub fn chain_length(&self) -> usize {
        self.positions.len()
    }
}

/// Value of the folding objective: `<= 0` is the energy of a feasible fold,
/// `> 0` an infeasibility penalty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectiveValue(pub i64);

impl ObjectiveValue {
    pub fn is_feasible(self) -> bool {
        self.0 <= 0
    }
}

impl fmt::Display for ObjectiveValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Scores an infeasible fold. Must return a value `>= 1`.
pub trait PenaltySchedule: Send + Sync + fmt::Debug {
    fn penalty(&self, outcome: &FoldOutcome) -> i64;
}

/// `(n - first_collision) + (collision_count - 1)`: earlier and more
/// numerous collisions cost more.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CollisionPenalty;

impl PenaltySchedule for CollisionPenalty {
    fn penalty(&self, outcome: &FoldOutcome) -> i64 {
        let first = outcome
            .first_collision
            .expect("penalty of a feasible fold");
        (outcome.chain_length() - first) as i64 + outcome.collision_count as i64 - 1
    }
}

/// Constant penalty, for comparing schedules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlatPenalty(pub i64);

impl PenaltySchedule for FlatPenalty {
    fn penalty(&self, _outcome: &FoldOutcome) -> i64 {
        self.0.max(1)
    }
}

/// Number of H (`1`) beads.
pub fn weight(binary: &[u8]) -> usize {
    binary.iter().filter(|&&d| d == 1).count()
}

/// Digits of a text string in base `base` (`"1021"` → `[1, 0, 2, 1]`).
pub fn parse_digits(text: &str, base: u8) -> Result<Vec<u8>> {
    text.trim()
        .chars()
        .map(|ch| match ch.to_digit(base as u32) {
            Some(d) => Ok(d as u8),
            None => Err(Error::Parse {
                text: text.to_string(),
                reason: format!("{ch:?} is not a base-{base} digit"),
            }),
        })
        .collect()
}

fn turn(heading: Point, digit: u8) -> Point {
    let (x, y) = heading;
    match digit {
        TURN_LEFT => (-y, x),
        TURN_RIGHT => (y, -x),
        _ => heading,
    }
}

/// Folds a chain of `ternary.len() + 1` beads. Bead 0 sits at the origin
/// heading `+y`; each digit turns the heading (0 left, 1 right, 2 straight)
/// and places the next bead one unit ahead. Placement continues past
/// collisions so the count is total.
pub fn decode_fold(ternary: &[u8]) -> Result<FoldOutcome> {
    decode_fold_with_heading(ternary, INITIAL_HEADING)
}

/// Decode for a chain of exactly `n` beads.
pub fn decode_fold_n(n: usize, ternary: &[u8]) -> Result<FoldOutcome> {
    if ternary.len() + 1 != n {
        return Err(Error::Decode(format!(
            "a chain of {n} beads needs {} ternary digits, got {}",
            n.saturating_sub(1),
            ternary.len()
        )));
    }
    decode_fold(ternary)
}

/// [`decode_fold`] from an arbitrary unit initial heading.
pub fn decode_fold_with_heading(ternary: &[u8], heading: Point) -> Result<FoldOutcome> {
    if heading.0.abs() + heading.1.abs() != 1 {
        return Err(Error::Decode(format!("{heading:?} is not a unit heading")));
    }
    if let Some(&bad) = ternary.iter().find(|&&d| d > FORWARD) {
        return Err(Error::Decode(format!("{bad} is not a ternary digit")));
    }
    Ok(decode_with_heading(ternary, heading))
}

fn decode_with_heading(ternary: &[u8], heading: Point) -> FoldOutcome {
    let mut positions = Vec::with_capacity(ternary.len() + 1);
    positions.push((0, 0));
    let mut heading = heading;
    let mut first_collision = None;
    let mut collision_count = 0;
    let mut at = (0, 0);
    for &d in ternary {
        heading = turn(heading, d);
        at = (at.0 + heading.0, at.1 + heading.1);
        if positions.contains(&at) {
            collision_count += 1;
            first_collision.get_or_insert(positions.len());
        }
        positions.push(at);
    }
    FoldOutcome {
        positions,
        first_collision,
        collision_count,
    }
}

fn adjacent(a: Point, b: Point) -> bool {
    a.0.abs_diff(b.0) + a.1.abs_diff(b.1) == 1
}

fn count_contacts(positions: &[Point], binary: &[u8]) -> u32 {
    let mut total = 0;
    for i in 0..positions.len() {
        if binary[i] != 1 {
            continue;
        }
        // lattice is bipartite, so only odd index gaps of 3 or more can touch
        for j in (i + 3..positions.len()).step_by(2) {
            if binary[j] == 1 && adjacent(positions[i], positions[j]) {
                total += 1;
            }
        }
    }
    total
}

/// Non-consecutive H-H lattice contacts of a feasible fold.
pub fn contacts(outcome: &FoldOutcome, binary: &[u8]) -> Result<u32> {
    if let Some(first) = outcome.first_collision {
        return Err(Error::Infeasible(first));
    }
    if binary.len() != outcome.positions.len() {
        return Err(Error::Decode(format!(
            "binary string has {} beads, fold has {}",
            binary.len(),
            outcome.positions.len()
        )));
    }
    Ok(count_contacts(&outcome.positions, binary))
}

/// Energy `-contacts` for a feasible fold, otherwise the schedule's penalty.
pub fn objective(binary: &[u8], ternary: &[u8], schedule: &dyn PenaltySchedule) -> Result<ObjectiveValue> {
    let outcome = decode_fold_n(binary.len(), ternary)?;
    if outcome.feasible() {
        Ok(ObjectiveValue(-(count_contacts(&outcome.positions, binary) as i64)))
    } else {
        Ok(ObjectiveValue(schedule.penalty(&outcome)))
    }
}

/// Unchecked objective for validated digit strings.
pub(crate) fn objective_unchecked(binary: &[u8], ternary: &[u8], schedule: &dyn PenaltySchedule) -> i64 {
    let outcome = decode_with_heading(ternary, INITIAL_HEADING);
    if outcome.feasible() {
        -(count_contacts(&outcome.positions, binary) as i64)
    } else {
        schedule.penalty(&outcome)
    }
}

/// Maximum-contact bound for a chain of `n` beads on the square lattice:
/// `-(n + 1 - ceil(2 sqrt(n)))`.
pub fn target_energy(n: usize) -> i64 {
    let mut k = 0usize;
    while k * k < 4 * n {
        k += 1;
    }
    -((n + 1) as i64 - k as i64).max(0)
}
