//! Exhaustive enumeration of small HP instances.
//!
//! The admissible domain of an instance is `binaries × ternaries`:
//!
//! - binaries: the fixed `coord_b` under plan A, otherwise every string of the
//!   target weight, in combinatorial-number-system order (colex: the rank of
//!   a subset `c_1 < ... < c_w` is `Σ C(c_i, i)`).
//! - ternaries: the fixed `coord_t` under plan B, otherwise every turn string
//!   in odometer order (last digit fastest). Anchored instances keep the
//!   first digit at forward.
//!
//! Domain index `i` maps to binary rank `i / |ternaries|` and ternary rank
//! `i % |ternaries|`, so any index range can be enumerated on its own and
//! partial reports merged; a run interrupted at offset `k` resumes with
//! [`enumerate_range`] from `k`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::ops::Range;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hpfold::{HpProblem, Plan, FORWARD};
use crate::mixedradix::digits_text;

pub const DEFAULT_DOMAIN_CAP: u128 = 100_000_000;

const CHUNK: u64 = 1 << 16;

/// Exact minimum, minimizers and value histogram over a domain (or a slice of it).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub min_value: Option<i64>,
    /// `(coordB, coordT)` text pairs attaining the minimum.
    pub argmin: BTreeSet<(String, String)>,
    pub evaluations: u64,
    pub histogram: BTreeMap<i64, u64>,
}

impl OracleReport {
    fn record(&mut self, value: i64, binary: &[u8], ternary: &[u8]) {
        self.evaluations += 1;
        *self.histogram.entry(value).or_default() += 1;
        match self.min_value {
            Some(m) if value > m => {}
            Some(m) if value == m => {
                self.argmin.insert((digits_text(binary), digits_text(ternary)));
            }
            _ => {
                self.min_value = Some(value);
                self.argmin.clear();
                self.argmin.insert((digits_text(binary), digits_text(ternary)));
            }
        }
    }

    /// Associative merge of two partial reports.
    pub fn merge(mut self, other: OracleReport) -> OracleReport {
        self.evaluations += other.evaluations;
        for (v, c) in other.histogram {
            *self.histogram.entry(v).or_default() += c;
        }
        match (self.min_value, other.min_value) {
            (_, None) => {}
            (None, Some(_)) => {
                self.min_value = other.min_value;
                self.argmin = other.argmin;
            }
            (Some(a), Some(b)) if b < a => {
                self.min_value = Some(b);
                self.argmin = other.argmin;
            }
            (Some(a), Some(b)) if b == a => self.argmin.extend(other.argmin),
            _ => {}
        }
        self
    }

    /// Number of enumerated pairs valued at most `threshold`.
    pub fn count_at_or_below(&self, threshold: i64) -> u64 {
        self.histogram.range(..=threshold).map(|(_, c)| c).sum()
    }

    /// Key/value text form; see [`OracleReport::parse`].
    pub fn to_text(&self, problem: Option<&HpProblem>) -> String {
        let mut out = String::from("# sawfold oracle report\n");
        if let Some(p) = problem {
            writeln!(out, "instance={}", p.instance()).unwrap();
        }
        writeln!(out, "evaluations={}", self.evaluations).unwrap();
        match self.min_value {
            Some(m) => writeln!(out, "min_value={m}").unwrap(),
            None => writeln!(out, "min_value=none").unwrap(),
        }
        writeln!(out, "argmin_count={}", self.argmin.len()).unwrap();
        out.push_str("[histogram]\n");
        for (v, c) in &self.histogram {
            writeln!(out, "{v} {c}").unwrap();
        }
        out.push_str("[argmin]\n");
        for (b, t) in &self.argmin {
            writeln!(out, "{b} {t}").unwrap();
        }
        out
    }

    /// Parses [`OracleReport::to_text`] output. The `instance` line is ignored.
    pub fn parse(text: &str) -> Result<OracleReport> {
        let bad = |msg: String| Error::Format(format!("oracle report: {msg}"));
        let mut report = OracleReport::default();
        let mut section = "";
        let mut argmin_count = None;
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if line.starts_with('[') {
                section = line;
                continue;
            }
            match section {
                "" => {
                    let (k, v) = line.split_once('=').ok_or_else(|| bad(format!("bad line {line:?}")))?;
                    match k {
                        "instance" => {}
                        "evaluations" => report.evaluations = v.parse().map_err(|_| bad(line.into()))?,
                        "min_value" if v == "none" => report.min_value = None,
                        "min_value" => report.min_value = Some(v.parse().map_err(|_| bad(line.into()))?),
                        "argmin_count" => argmin_count = Some(v.parse::<usize>().map_err(|_| bad(line.into()))?),
                        _ => return Err(bad(format!("unknown key {k:?}"))),
                    }
                }
                "[histogram]" => {
                    let (v, c) = line.split_once(' ').ok_or_else(|| bad(line.into()))?;
                    report.histogram.insert(
                        v.parse().map_err(|_| bad(line.into()))?,
                        c.trim().parse().map_err(|_| bad(line.into()))?,
                    );
                }
                "[argmin]" => {
                    let (b, t) = line.split_once(' ').ok_or_else(|| bad(line.into()))?;
                    report.argmin.insert((b.to_string(), t.trim().to_string()));
                }
                other => return Err(bad(format!("unknown section {other}"))),
            }
        }
        if argmin_count.is_some_and(|c| c != report.argmin.len()) {
            return Err(bad("argmin_count does not match the argmin list".into()));
        }
        Ok(report)
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Shape of an instance's admissible domain.
#[derive(Clone, Debug)]
pub struct Domain {
    n: usize,
    weight: usize,
    fixed_binary: Option<Vec<u8>>,
    fixed_ternary: Option<Vec<u8>>,
    anchored: bool,
    binaries: u128,
    ternaries: u128,
}

impl Domain {
    pub fn of(problem: &HpProblem) -> Domain {
        let fixed_binary = (problem.plan == Plan::A).then(|| problem.fixed_binary.clone().unwrap());
        let fixed_ternary = (problem.plan == Plan::B).then(|| problem.fixed_ternary.clone().unwrap());
        let binaries = if fixed_binary.is_some() {
            1
        } else {
            binomial(problem.n, problem.weight)
        };
        let free_ternary = problem.n - 1 - usize::from(problem.anchored);
        let ternaries = if fixed_ternary.is_some() {
            1
        } else {
            3u128.checked_pow(free_ternary as u32).unwrap_or(u128::MAX)
        };
        Domain {
            n: problem.n,
            weight: problem.weight,
            fixed_binary,
            fixed_ternary,
            anchored: problem.anchored,
            binaries,
            ternaries,
        }
    }

    pub fn binary_count(&self) -> u128 {
        self.binaries
    }

    pub fn ternary_count(&self) -> u128 {
        self.ternaries
    }

    /// `None` when the size overflows `u128`.
    pub fn size(&self) -> Option<u128> {
        self.binaries.checked_mul(self.ternaries)
    }

    fn check_cap(&self, cap: u128) -> Result<u64> {
        match self.size() {
            Some(s) if s <= cap && s <= u64::MAX as u128 => Ok(s as u64),
            Some(s) => Err(Error::TooLarge { size: s.to_string(), cap }),
            None => Err(Error::TooLarge { size: "more than 2^128".into(), cap }),
        }
    }

    /// Binary string of colex rank `rank`.
    pub fn binary_at(&self, rank: u128) -> Vec<u8> {
        if let Some(b) = &self.fixed_binary {
            return b.clone();
        }
        let mut bits = vec![0u8; self.n];
        let mut r = rank;
        for k in (1..=self.weight).rev() {
            let mut c = k - 1;
            while binomial(c + 1, k) <= r {
                c += 1;
            }
            bits[c] = 1;
            r -= binomial(c, k);
        }
        bits
    }

    /// Colex rank of a weight-`w` binary string.
    pub fn binary_rank(&self, bits: &[u8]) -> u128 {
        bits.iter()
            .enumerate()
            .filter(|(_, &b)| b == 1)
            .enumerate()
            .map(|(i, (pos, _))| binomial(pos, i + 1))
            .sum()
    }

    /// Ternary string of odometer rank `rank`.
    pub fn ternary_at(&self, rank: u128) -> Vec<u8> {
        if let Some(t) = &self.fixed_ternary {
            return t.clone();
        }
        let mut digits = vec![0u8; self.n - 1];
        let mut r = rank;
        let lo = usize::from(self.anchored);
        for d in digits[lo..].iter_mut().rev() {
            *d = (r % 3) as u8;
            r /= 3;
        }
        if self.anchored {
            digits[0] = FORWARD;
        }
        digits
    }

    /// Advances a ternary string in odometer order; `false` on wrap-around.
    fn next_ternary(&self, digits: &mut [u8]) -> bool {
        if self.fixed_ternary.is_some() {
            return false;
        }
        let lo = usize::from(self.anchored);
        for d in digits[lo..].iter_mut().rev() {
            if *d < 2 {
                *d += 1;
                return true;
            }
            *d = 0;
        }
        false
    }
}

/// Enumerates domain indices `range` sequentially.
pub fn enumerate_range(problem: &HpProblem, range: Range<u64>) -> OracleReport {
    let domain = Domain::of(problem);
    let mut report = OracleReport::default();
    if range.is_empty() {
        return report;
    }
    let stride = domain.ternaries;
    let mut b_rank = range.start as u128 / stride;
    let mut binary = domain.binary_at(b_rank);
    let mut ternary = domain.ternary_at(range.start as u128 % stride);
    for _ in range {
        report.record(problem.value_of(&binary, &ternary), &binary, &ternary);
        if !domain.next_ternary(&mut ternary) {
            b_rank += 1;
            if b_rank < domain.binaries {
                binary = domain.binary_at(b_rank);
            }
            ternary = domain.ternary_at(0);
        }
    }
    report
}

/// Exhaustive minimum over the admissible domain, in parallel chunks.
pub fn enumerate_optimum(problem: &HpProblem, domain_cap: u128) -> Result<OracleReport> {
    let size = Domain::of(problem).check_cap(domain_cap)?;
    let chunks = size.div_ceil(CHUNK);
    Ok((0..chunks)
        .into_par_iter()
        .map(|i| enumerate_range(problem, i * CHUNK..((i + 1) * CHUNK).min(size)))
        .reduce(OracleReport::default, OracleReport::merge))
}

/// Number of admissible pairs valued at most `threshold`.
pub fn count_at_or_below(problem: &HpProblem, threshold: i64, domain_cap: u128) -> Result<u64> {
    Ok(enumerate_optimum(problem, domain_cap)?.count_at_or_below(threshold))
}
