//! Mixed-radix coordinate spaces.
//!
//! A [`RadixSpec`] is a concatenation of fixed-base digit segments, e.g.
//! `2^2+3^2` for two binary digits followed by two ternary digits. A
//! [`Coordinate`] is one point of such a space, written with `.` between
//! segments (`"00.10"`). Two coordinates are adjacent when their rank
//! distance is 1, which makes the space a graph (its Hasse graph).

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// Default vertex cap for Hasse graph enumeration.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// One run of digits sharing a base.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub base: u8,
    pub len: usize,
}

/// Ordered list of digit segments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RadixSpec {
    segments: Vec<Segment>,
    bases: Vec<u8>,
    offsets: Vec<usize>,
}

impl RadixSpec {
    /// Builds a spec from `(base, length)` pairs.
    pub fn new(segments: impl IntoIterator<Item = (u8, usize)>) -> Result<Arc<Self>> {
        let segments: Vec<Segment> = segments
            .into_iter()
            .map(|(base, len)| Segment { base, len })
            .collect();
        if segments.is_empty() {
            return Err(Error::InvalidSpec("at least one segment is required".into()));
        }
        let mut bases = Vec::new();
        let mut offsets = Vec::with_capacity(segments.len() + 1);
        for seg in &segments {
            if !(2..=36).contains(&seg.base) {
                return Err(Error::InvalidSpec(format!(
                    "base {} outside 2..=36",
                    seg.base
                )));
            }
            if seg.len == 0 {
                return Err(Error::InvalidSpec("segment length must be at least 1".into()));
            }
            offsets.push(bases.len());
            bases.extend(std::iter::repeat_n(seg.base, seg.len));
        }
        offsets.push(bases.len());
        Ok(Arc::new(RadixSpec {
            segments,
            bases,
            offsets,
        }))
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Total number of digits.
    pub fn width(&self) -> usize {
        self.bases.len()
    }

    pub fn base_at(&self, position: usize) -> u8 {
        self.bases[position]
    }

    /// Digit positions of segment `index`.
    pub fn segment_range(&self, index: usize) -> std::ops::Range<usize> {
        self.offsets[index]..self.offsets[index + 1]
    }

    /// Number of coordinates in the space, or `None` if it does not fit in a `u128`.
    pub fn size(&self) -> Option<u128> {
        self.bases
            .iter()
            .try_fold(1u128, |acc, &b| acc.checked_mul(b as u128))
    }

    /// Human readable size, exact when it fits in a `u128`.
    pub fn size_text(&self) -> String {
        match self.size() {
            Some(s) => s.to_string(),
            None => {
                let log10: f64 = self.bases.iter().map(|&b| (b as f64).log10()).sum();
                format!("~1e{log10:.1}")
            }
        }
    }

    /// The all-zero coordinate.
    pub fn origin(self: &Arc<Self>) -> Coordinate {
        Coordinate {
            spec: Arc::clone(self),
            digits: vec![0; self.width()].into_boxed_slice(),
        }
    }

    /// Iterates every coordinate in odometer order (last digit fastest),
    /// refusing spaces above `cap`.
    pub fn enumerate(self: &Arc<Self>, cap: u128) -> Result<Odometer> {
        match self.size() {
            Some(size) if size <= cap => Ok(Odometer {
                spec: Arc::clone(self),
                next: Some(vec![0; self.width()]),
            }),
            _ => Err(Error::TooLarge {
                size: self.size_text(),
                cap,
            }),
        }
    }
}

impl fmt::Display for RadixSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, seg) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{}^{}", seg.base, seg.len)?;
        }
        Ok(())
    }
}

/// Parses `"2^2,3^2"` (base^length, comma separated).
pub fn parse_spec(text: &str) -> Result<Arc<RadixSpec>> {
    let mut segments = Vec::new();
    for part in text.trim().split(',') {
        let part = part.trim();
        let (base, len) = part
            .split_once('^')
            .ok_or_else(|| Error::InvalidSpec(format!("expected base^length, got {part:?}")))?;
        let base: u8 = base
            .trim()
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("bad base in {part:?}")))?;
        let len: usize = len
            .trim()
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("bad length in {part:?}")))?;
        segments.push((base, len));
    }
    RadixSpec::new(segments)
}

/// Odometer enumeration of a whole space.
pub struct Odometer {
    spec: Arc<RadixSpec>,
    next: Option<Vec<u8>>,
}

impl Iterator for Odometer {
    type Item = Coordinate;

    fn next(&mut self) -> Option<Coordinate> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried_out = true;
        for pos in (0..succ.len()).rev() {
            succ[pos] += 1;
            if succ[pos] < self.spec.base_at(pos) {
                carried_out = false;
                break;
            }
            succ[pos] = 0;
        }
        if !carried_out {
            self.next = Some(succ);
        }
        Some(Coordinate {
            spec: Arc::clone(&self.spec),
            digits: current.into_boxed_slice(),
        })
    }
}

/// A point of a mixed-radix space.
#[derive(Clone)]
pub struct Coordinate {
    spec: Arc<RadixSpec>,
    digits: Box<[u8]>,
}

impl Coordinate {
    pub fn new(spec: &Arc<RadixSpec>, digits: impl Into<Vec<u8>>) -> Result<Self> {
        let digits = digits.into();
        if digits.len() != spec.width() {
            return Err(Error::Parse {
                text: format!("{digits:?}"),
                reason: format!("expected {} digits, got {}", spec.width(), digits.len()),
            });
        }
        if let Some(pos) = (0..digits.len()).find(|&p| digits[p] >= spec.base_at(p)) {
            return Err(Error::Parse {
                text: format!("{digits:?}"),
                reason: format!("digit {} at position {pos} out of range", digits[pos]),
            });
        }
        Ok(Coordinate {
            spec: Arc::clone(spec),
            digits: digits.into_boxed_slice(),
        })
    }

    /// Parses the canonical `.`-separated text form.
    pub fn parse(spec: &Arc<RadixSpec>, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let parts: Vec<&str> = trimmed.split('.').collect();
        let err = |reason: String| Error::Parse {
            text: text.to_string(),
            reason,
        };
        if parts.len() != spec.segments().len() {
            return Err(err(format!(
                "expected {} segments, got {}",
                spec.segments().len(),
                parts.len()
            )));
        }
        let mut digits = Vec::with_capacity(spec.width());
        for (part, seg) in parts.iter().zip(spec.segments()) {
            if part.chars().count() != seg.len {
                return Err(err(format!(
                    "segment {part:?} should have {} digits",
                    seg.len
                )));
            }
            for ch in part.chars() {
                match ch.to_digit(36) {
                    Some(d) if d < seg.base as u32 => digits.push(d as u8),
                    _ => return Err(err(format!("digit {ch:?} invalid for base {}", seg.base))),
                }
            }
        }
        Coordinate::new(spec, digits)
    }

    pub fn spec(&self) -> &Arc<RadixSpec> {
        &self.spec
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn segment(&self, index: usize) -> &[u8] {
        &self.digits[self.spec.segment_range(index)]
    }

    /// Text of one segment, without separators.
    pub fn segment_text(&self, index: usize) -> String {
        digits_text(self.segment(index))
    }

    pub fn apply(&self, mv: DigitMove) -> Coordinate {
        let mut digits = self.digits.clone();
        digits[mv.position] = mv.digit;
        Coordinate {
            spec: Arc::clone(&self.spec),
            digits,
        }
    }

    /// Closed-form neighbor count: end digits have one in-range move, inner digits two.
    pub fn degree(&self) -> usize {
        self.digits
            .iter()
            .enumerate()
            .map(|(pos, &d)| {
                let top = self.spec.base_at(pos) - 1;
                if d == 0 || d == top {
                    1
                } else {
                    2
                }
            })
            .sum()
    }

    fn same_space(&self, other: &Coordinate) -> bool {
        Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec
    }
}

/// Renders digits as text (`[1, 0, 2]` → `"102"`).
pub fn digits_text(digits: &[u8]) -> String {
    digits
        .iter()
        .map(|&d| char::from_digit(d as u32, 36).expect("digit below 36"))
        .collect()
}

impl PartialEq for Coordinate {
    fn eq(&self, other: &Self) -> bool {
        self.digits == other.digits && self.same_space(other)
    }
}

impl Eq for Coordinate {}

impl Hash for Coordinate {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.digits.hash(state);
    }
}

impl PartialOrd for Coordinate {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coordinate {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.digits.cmp(&other.digits)
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.spec.segments().len() {
            if i > 0 {
                f.write_char('.')?;
            }
            f.write_str(&self.segment_text(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coordinate({self})")
    }
}

/// Sum of absolute per-digit differences. Not cyclic: `d(3210, 0123) = 8`.
pub fn rank_distance(a: &Coordinate, b: &Coordinate) -> Result<u64> {
    if !a.same_space(b) {
        return Err(Error::SpecMismatch);
    }
    Ok(a.digits
        .iter()
        .zip(b.digits.iter())
        .map(|(&x, &y)| x.abs_diff(y) as u64)
        .sum())
}

/// Sets digit `position` to `digit`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DigitMove {
    pub position: usize,
    pub digit: u8,
}

/// All distance-1 moves from `c`, by position, `-1` before `+1`.
pub fn moves(c: &Coordinate) -> Vec<DigitMove> {
    let mut out = Vec::with_capacity(2 * c.digits.len());
    for (position, &d) in c.digits.iter().enumerate() {
        if d > 0 {
            out.push(DigitMove {
                position,
                digit: d - 1,
            });
        }
        if d + 1 < c.spec.base_at(position) {
            out.push(DigitMove {
                position,
                digit: d + 1,
            });
        }
    }
    out
}

/// The distance-1 neighborhood of `c`.
pub fn neighbors(c: &Coordinate) -> Vec<Coordinate> {
    moves(c).into_iter().map(|mv| c.apply(mv)).collect()
}

/// Uniform random permutation of `0..count` (Fisher-Yates).
pub fn permuted_indices<R: Rng + ?Sized>(count: usize, rng: &mut R) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..count).collect();
    idx.shuffle(rng);
    idx
}

/// Exact number of ones required in a binary segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightConstraint {
    pub segment: usize,
    pub weight: usize,
}

/// Uniform random coordinate. With a constraint, the designated binary
/// segment is a uniform string of exactly the requested weight.
pub fn random_coordinate<R: Rng + ?Sized>(
    spec: &Arc<RadixSpec>,
    rng: &mut R,
    constraint: Option<WeightConstraint>,
) -> Result<Coordinate> {
    if let Some(wc) = constraint {
        let seg = spec
            .segments()
            .get(wc.segment)
            .ok_or_else(|| Error::InvalidConstraint(format!("no segment {}", wc.segment)))?;
        if seg.base != 2 {
            return Err(Error::InvalidConstraint(format!(
                "segment {} has base {}, weight needs base 2",
                wc.segment, seg.base
            )));
        }
        if wc.weight > seg.len {
            return Err(Error::InvalidConstraint(format!(
                "weight {} exceeds segment length {}",
                wc.weight, seg.len
            )));
        }
    }
    let mut digits: Vec<u8> = (0..spec.width())
        .map(|pos| rng.random_range(0..spec.base_at(pos)))
        .collect();
    if let Some(wc) = constraint {
        let range = spec.segment_range(wc.segment);
        let len = range.len();
        let block = &mut digits[range];
        block.fill(0);
        for i in rand::seq::index::sample(rng, len, wc.weight) {
            block[i] = 1;
        }
    }
    Coordinate::new(spec, digits)
}

/// Degree structure of a Hasse graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HasseStats {
    pub vertex_count: u64,
    pub edge_count: u64,
    pub degree_histogram: BTreeMap<usize, u64>,
}

pub fn hasse_stats(spec: &Arc<RadixSpec>, cap: u128) -> Result<HasseStats> {
    let mut stats = HasseStats::default();
    let mut degree_sum = 0u64;
    for c in spec.enumerate(cap)? {
        let d = c.degree();
        stats.vertex_count += 1;
        degree_sum += d as u64;
        *stats.degree_histogram.entry(d).or_default() += 1;
    }
    stats.edge_count = degree_sum / 2;
    Ok(stats)
}

/// DOT text of the Hasse graph, one `rank=same` layer per rank distance from
/// the origin. Vertices inside a layer appear in lexicographic order. When
/// `label` is given, each vertex is shown as `coordinate:label`.
pub fn hasse_dot(
    spec: &Arc<RadixSpec>,
    cap: u128,
    label: Option<&dyn Fn(&Coordinate) -> String>,
) -> Result<String> {
    let vertices: Vec<Coordinate> = spec.enumerate(cap)?.collect();
    let origin = spec.origin();
    let mut layers: BTreeMap<u64, Vec<&Coordinate>> = BTreeMap::new();
    for v in &vertices {
        let rank = rank_distance(&origin, v)?;
        layers.entry(rank).or_default().push(v);
    }

    let mut out = String::new();
    writeln!(out, "graph hasse {{").unwrap();
    writeln!(out, "  // radix {spec}: {} vertices", vertices.len()).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for (rank, layer) in &layers {
        let mut layer = layer.clone();
        layer.sort();
        write!(out, "  {{ rank=same; // rank {rank}\n   ").unwrap();
        for v in layer {
            match label {
                Some(f) => write!(out, " \"{v}\" [label=\"{v}:{}\"];", f(v)).unwrap(),
                None => write!(out, " \"{v}\";").unwrap(),
            }
        }
        writeln!(out, "\n  }}").unwrap();
    }
    for v in &vertices {
        for mv in moves(v) {
            // emit each edge once, from its lower endpoint
            if mv.digit > v.digits[mv.position] {
                let w = v.apply(mv);
                writeln!(out, "  \"{v}\" -- \"{w}\";").unwrap();
            }
        }
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}
