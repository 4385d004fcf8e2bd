//! Instance files.
//!
//! One instance per line, as whitespace-separated `key=value` pairs. Blank
//! lines and lines starting with `#` are ignored.
//!
//! ```text
//! # plan  length  weight  energy target  fixed segments
//! plan=A n=10 target=-4 coord_b=1001001001
//! plan=B n=10 w=4 target=-4 coord_t=211011011
//! plan=C n=20 w=10 target=-9 weight_cap=11
//! ```
//!
//! Keys: `plan` (A, B or C, required), `n` (required), `w`, `target`,
//! `coord_b`, `coord_t`, `weight_cap`, `anchored` (`true`/`false`).

use std::fmt;
use std::path::Path;

use super::problem::InstanceSpec;
use crate::error::{Error, Result};

fn bad(line_no: usize, msg: impl fmt::Display) -> Error {
    Error::Format(format!("instance line {line_no}: {msg}"))
}

/// Parses one record.
pub fn parse_instance_line(line: &str) -> Result<InstanceSpec> {
    parse_record(line, 1)
}

fn parse_record(line: &str, line_no: usize) -> Result<InstanceSpec> {
    let mut plan = None;
    let mut n = None;
    let mut rest: Vec<(&str, &str)> = Vec::new();
    for field in line.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| bad(line_no, format!("expected key=value, got {field:?}")))?;
        match key {
            "plan" => plan = Some(value.parse().map_err(|e| bad(line_no, e))?),
            "n" => n = Some(value.parse::<usize>().map_err(|e| bad(line_no, e))?),
            _ => rest.push((key, value)),
        }
    }
    let plan = plan.ok_or_else(|| bad(line_no, "missing plan"))?;
    let n = n.ok_or_else(|| bad(line_no, "missing n"))?;
    let mut spec = InstanceSpec::new(plan, n);
    for (key, value) in rest {
        match key {
            "w" => spec.weight = Some(value.parse().map_err(|e| bad(line_no, e))?),
            "target" => spec.energy_target = Some(value.parse().map_err(|e| bad(line_no, e))?),
            "coord_b" => spec.coord_b = Some(value.to_string()),
            "coord_t" => spec.coord_t = Some(value.to_string()),
            "weight_cap" => spec.weight_cap = Some(value.parse().map_err(|e| bad(line_no, e))?),
            "anchored" => spec.anchored = value.parse().map_err(|e| bad(line_no, e))?,
            other => return Err(bad(line_no, format!("unknown key {other:?}"))),
        }
    }
    Ok(spec)
}

/// Parses every record of an instance file's text.
pub fn parse_instances(text: &str) -> Result<Vec<InstanceSpec>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| parse_record(l, i + 1))
        .collect()
}

pub fn read_instances(path: &Path) -> Result<Vec<InstanceSpec>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_instances(&text)
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "plan={} n={}", self.plan, self.n)?;
        if let Some(w) = self.weight {
            write!(f, " w={w}")?;
        }
        if let Some(t) = self.energy_target {
            write!(f, " target={t}")?;
        }
        if let Some(b) = &self.coord_b {
            write!(f, " coord_b={b}")?;
        }
        if let Some(t) = &self.coord_t {
            write!(f, " coord_t={t}")?;
        }
        if let Some(c) = self.weight_cap {
            write!(f, " weight_cap={c}")?;
        }
        if self.anchored {
            write!(f, " anchored=true")?;
        }
        Ok(())
    }
}
