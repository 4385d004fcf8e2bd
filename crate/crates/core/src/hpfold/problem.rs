use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::fold::{self, CollisionPenalty, PenaltySchedule, FORWARD};
use crate::engine::Problem;
use crate::error::{Error, Result};
use crate::mixedradix::{digits_text, Coordinate, DigitMove, RadixSpec};
use crate::rng::WalkRng;

/// Which segments the search may change.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Plan {
    /// Fixed sequence, search the fold.
    A,
    /// Fixed fold, search the sequence (inverse folding).
    B,
    /// Search sequence and fold together.
    C,
}

impl fmt::Display for Plan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Plan::A => "A",
            Plan::B => "B",
            Plan::C => "C",
        })
    }
}

impl FromStr for Plan {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Plan::A),
            "B" | "b" => Ok(Plan::B),
            "C" | "c" => Ok(Plan::C),
            other => Err(Error::Config(format!("unknown plan {other:?}"))),
        }
    }
}

/// Unresolved description of an HP instance; also the record type of
/// instance files. Unset fields take defaults in [`InstanceSpec::build`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub plan: Plan,
    pub n: usize,
    pub weight: Option<usize>,
    pub energy_target: Option<i64>,
    pub coord_b: Option<String>,
    pub coord_t: Option<String>,
    pub weight_cap: Option<usize>,
    /// Freeze the first ternary digit at forward, so every fold starts with
    /// the same bond direction.
    pub anchored: bool,
}

impl InstanceSpec {
    pub fn new(plan: Plan, n: usize) -> Self {
        InstanceSpec {
            plan,
            n,
            weight: None,
            energy_target: None,
            coord_b: None,
            coord_t: None,
            weight_cap: None,
            anchored: false,
        }
    }

    pub fn weight(mut self, w: usize) -> Self {
        self.weight = Some(w);
        self
    }

    pub fn energy_target(mut self, target: i64) -> Self {
        self.energy_target = Some(target);
        self
    }

    pub fn fixed_binary(mut self, coord_b: impl Into<String>) -> Self {
        self.coord_b = Some(coord_b.into());
        self
    }

    pub fn fixed_ternary(mut self, coord_t: impl Into<String>) -> Self {
        self.coord_t = Some(coord_t.into());
        self
    }

    pub fn weight_cap(mut self, cap: usize) -> Self {
        self.weight_cap = Some(cap);
        self
    }

    pub fn anchored(mut self, anchored: bool) -> Self {
        self.anchored = anchored;
        self
    }

    pub fn build(&self) -> Result<HpProblem> {
        self.build_with_penalty(Arc::new(CollisionPenalty))
    }

    pub fn build_with_penalty(&self, penalty: Arc<dyn PenaltySchedule>) -> Result<HpProblem> {
        let n = self.n;
        if n < 3 {
            return Err(Error::Config(format!("chain length {n} is below 3")));
        }
        let fixed_binary = match &self.coord_b {
            Some(text) => Some(checked_segment(text, 2, n, "coord_b")?),
            None => None,
        };
        let fixed_ternary = match &self.coord_t {
            Some(text) => Some(checked_segment(text, 3, n - 1, "coord_t")?),
            None => None,
        };
        match self.plan {
            Plan::A if fixed_binary.is_none() => {
                return Err(Error::Config("plan A needs a fixed coord_b".into()))
            }
            Plan::B if fixed_ternary.is_none() => {
                return Err(Error::Config("plan B needs a fixed coord_t".into()))
            }
            _ => {}
        }
        if self.anchored {
            if let Some(t) = &fixed_ternary {
                if t[0] != FORWARD {
                    return Err(Error::Config(
                        "anchored instances need coord_t to start with 2".into(),
                    ));
                }
            }
        }

        let weight = match (self.plan, &fixed_binary, self.weight) {
            (Plan::A, Some(b), Some(w)) if fold::weight(b) != w => {
                return Err(Error::Config(format!(
                    "coord_b has weight {}, instance says {w}",
                    fold::weight(b)
                )))
            }
            (Plan::A, Some(b), _) => fold::weight(b),
            (_, _, Some(w)) => w,
            (_, _, None) => {
                return Err(Error::Config(format!("plan {} needs a weight", self.plan)))
            }
        };
        if weight > n {
            return Err(Error::Config(format!("weight {weight} exceeds chain length {n}")));
        }
        let weight_cap = self.weight_cap.unwrap_or(weight + 1).min(n);
        if weight_cap < weight {
            return Err(Error::Config(format!(
                "weight cap {weight_cap} is below the weight target {weight}"
            )));
        }
        let energy_target = self.energy_target.unwrap_or_else(|| fold::target_energy(n));
        if energy_target > 0 {
            return Err(Error::Config(format!("energy target {energy_target} is positive")));
        }

        Ok(HpProblem {
            spec: RadixSpec::new([(2, n), (3, n - 1)])?,
            plan: self.plan,
            n,
            weight,
            energy_target,
            weight_cap,
            fixed_binary,
            fixed_ternary,
            anchored: self.anchored,
            penalty,
        })
    }
}

fn checked_segment(text: &str, base: u8, len: usize, name: &str) -> Result<Vec<u8>> {
    let digits = fold::parse_digits(text, base)?;
    if digits.len() != len {
        return Err(Error::Config(format!(
            "{name} {text:?} has {} digits, expected {len}",
            digits.len()
        )));
    }
    Ok(digits)
}

/// An HP folding instance over the space `2^n ⊕ 3^(n-1)`, specialised to a plan.
#[derive(Clone, Debug)]
pub struct HpProblem {
    spec: Arc<RadixSpec>,
    pub plan: Plan,
    pub n: usize,
    pub weight: usize,
    pub energy_target: i64,
    pub weight_cap: usize,
    pub fixed_binary: Option<Vec<u8>>,
    pub fixed_ternary: Option<Vec<u8>>,
    pub anchored: bool,
    penalty: Arc<dyn PenaltySchedule>,
}

impl HpProblem {
    pub fn builder(plan: Plan, n: usize) -> InstanceSpec {
        InstanceSpec::new(plan, n)
    }

    pub fn spec(&self) -> &Arc<RadixSpec> {
        &self.spec
    }

    pub fn penalty(&self) -> &dyn PenaltySchedule {
        self.penalty.as_ref()
    }

    pub fn binary<'a>(&self, c: &'a Coordinate) -> &'a [u8] {
        c.segment(0)
    }

    pub fn ternary<'a>(&self, c: &'a Coordinate) -> &'a [u8] {
        c.segment(1)
    }

    /// Objective of a digit pair; lengths must match the instance.
    pub fn value_of(&self, binary: &[u8], ternary: &[u8]) -> i64 {
        debug_assert_eq!((binary.len(), ternary.len()), (self.n, self.n - 1));
        fold::objective_unchecked(binary, ternary, self.penalty.as_ref())
    }

    /// Coordinate from its two segment strings.
    pub fn coordinate(&self, coord_b: &str, coord_t: &str) -> Result<Coordinate> {
        Coordinate::parse(&self.spec, &format!("{}.{}", coord_b.trim(), coord_t.trim()))
    }

    /// The `(coordB, coordT)` text pair of a coordinate.
    pub fn split(&self, c: &Coordinate) -> (String, String) {
        (digits_text(c.segment(0)), digits_text(c.segment(1)))
    }

    /// The instance record that rebuilds this problem.
    pub fn instance(&self) -> InstanceSpec {
        InstanceSpec {
            plan: self.plan,
            n: self.n,
            weight: Some(self.weight),
            energy_target: Some(self.energy_target),
            coord_b: self.fixed_binary.as_deref().map(digits_text),
            coord_t: self.fixed_ternary.as_deref().map(digits_text),
            weight_cap: Some(self.weight_cap),
            anchored: self.anchored,
        }
    }

    /// Termination test: target energy reached at the exact weight.
    pub fn is_solution(&self, c: &Coordinate) -> bool {
        self.accepts(c) && self.evaluate(c) <= self.energy_target
    }

    /// Whether ternary position `i` (0-based within the segment) may change.
    pub fn ternary_digit_free(&self, i: usize) -> bool {
        self.plan != Plan::B && !(self.anchored && i == 0)
    }

    fn random_binary(&self, rng: &mut WalkRng) -> Vec<u8> {
        let mut bits = vec![0u8; self.n];
        for i in index::sample(rng, self.n, self.weight) {
            bits[i] = 1;
        }
        bits
    }

    fn random_ternary(&self, rng: &mut WalkRng) -> Vec<u8> {
        let mut digits: Vec<u8> = (0..self.n - 1).map(|_| rng.random_range(0..3)).collect();
        if self.anchored {
            digits[0] = FORWARD;
        }
        digits
    }
}

impl Problem for HpProblem {
    fn space(&self) -> &Arc<RadixSpec> {
        &self.spec
    }

    fn evaluate(&self, c: &Coordinate) -> i64 {
        self.value_of(c.segment(0), c.segment(1))
    }

    fn admits(&self, pivot: &Coordinate, mv: DigitMove) -> bool {
        if mv.position < self.n {
            if self.plan == Plan::A {
                return false;
            }
            let w = fold::weight(pivot.segment(0));
            let after = if mv.digit == 1 { w + 1 } else { w - 1 };
            after <= self.weight_cap
        } else {
            self.ternary_digit_free(mv.position - self.n)
        }
    }

    fn accepts(&self, c: &Coordinate) -> bool {
        fold::weight(c.segment(0)) == self.weight
    }

    fn target(&self) -> i64 {
        self.energy_target
    }

    fn initial(&self, rng: &mut WalkRng) -> Coordinate {
        let binary = match &self.fixed_binary {
            Some(b) if self.plan == Plan::A => b.clone(),
            _ => self.random_binary(rng),
        };
        let ternary = match &self.fixed_ternary {
            Some(t) if self.plan == Plan::B => t.clone(),
            _ => self.random_ternary(rng),
        };
        let mut digits = binary;
        digits.extend(ternary);
        Coordinate::new(&self.spec, digits).expect("digits generated in range")
    }
}

/// Builds a plan-specialised problem from raw parts.
pub fn make_problem(
    plan: Plan,
    n: usize,
    weight: Option<usize>,
    energy_target: i64,
    coord_b: Option<&str>,
    coord_t: Option<&str>,
    weight_cap: Option<usize>,
) -> Result<HpProblem> {
    InstanceSpec {
        plan,
        n,
        weight,
        energy_target: Some(energy_target),
        coord_b: coord_b.map(str::to_string),
        coord_t: coord_t.map(str::to_string),
        weight_cap,
        anchored: false,
    }
    .build()
}

/// All-H chain of length `len` folded under plan A toward the
/// maximum-contact bound.
pub fn spiral_instance(len: usize) -> Result<HpProblem> {
    if !(9..=36).contains(&len) {
        return Err(Error::Config(format!("spiral length {len} outside 9..=36")));
    }
    HpProblem::builder(Plan::A, len)
        .fixed_binary("1".repeat(len))
        .energy_target(fold::target_energy(len))
        .build()
}
