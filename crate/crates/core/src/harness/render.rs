//! ASCII and SVG drawings of feasible folds.
//!
//! In the ASCII grid `H`/`P` are beads (bead 0 lower-case), `-` and `|`
//! are chain bonds, and `*` marks an H-H contact. North is `+y`.

use std::fmt::Write as _;

use crate::error::Result;
use crate::hpfold::{contacts, decode_fold_n, parse_digits, weight, Point};

/// A decoded, feasible fold ready to draw.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conformation {
    pub binary: Vec<u8>,
    pub positions: Vec<Point>,
    pub energy: i64,
    pub weight: usize,
}

impl Conformation {
    pub fn new(coord_b: &str, coord_t: &str) -> Result<Conformation> {
        let binary = parse_digits(coord_b, 2)?;
        let ternary = parse_digits(coord_t, 3)?;
        let fold = decode_fold_n(binary.len(), &ternary)?;
        let energy = -(contacts(&fold, &binary)? as i64);
        Ok(Conformation {
            weight: weight(&binary),
            binary,
            positions: fold.positions,
            energy,
        })
    }

    fn bounds(&self) -> (i32, i32, i32, i32) {
        let xs = self.positions.iter().map(|p| p.0);
        let ys = self.positions.iter().map(|p| p.1);
        (xs.clone().min().unwrap(), xs.max().unwrap(), ys.clone().min().unwrap(), ys.max().unwrap())
    }

    fn contact_pairs(&self) -> Vec<(Point, Point)> {
        let mut out = Vec::new();
        for i in 0..self.positions.len() {
            for j in i + 3..self.positions.len() {
                let (a, b) = (self.positions[i], self.positions[j]);
                if self.binary[i] == 1 && self.binary[j] == 1 && a.0.abs_diff(b.0) + a.1.abs_diff(b.1) == 1 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn caption(&self) -> String {
        format!("energy {} weight {}", self.energy, self.weight)
    }

    pub fn to_ascii(&self) -> String {
        let (x0, x1, y0, y1) = self.bounds();
        let cols = (2 * (x1 - x0) + 1) as usize;
        let rows = (2 * (y1 - y0) + 1) as usize;
        let mut grid = vec![vec![' '; cols]; rows];
        let cell = |p: Point| ((2 * (y1 - p.1)) as usize, (2 * (p.0 - x0)) as usize);
        let mark = |grid: &mut Vec<Vec<char>>, a: Point, b: Point, horizontal: char, vertical: char| {
            let (r0, c0) = cell(a);
            let (r1, c1) = cell(b);
            grid[(r0 + r1) / 2][(c0 + c1) / 2] = if r0 == r1 { horizontal } else { vertical };
        };
        for w in self.positions.windows(2) {
            mark(&mut grid, w[0], w[1], '-', '|');
        }
        for (a, b) in self.contact_pairs() {
            mark(&mut grid, a, b, '*', '*');
        }
        for (i, &p) in self.positions.iter().enumerate() {
            let (r, c) = cell(p);
            let ch = if self.binary[i] == 1 { 'H' } else { 'P' };
            grid[r][c] = if i == 0 { ch.to_ascii_lowercase() } else { ch };
        }
        let mut out = self.caption();
        out.push('\n');
        for row in grid {
            let line: String = row.into_iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_svg(&self) -> String {
        const UNIT: i32 = 40;
        const MARGIN: i32 = 30;
        let (x0, x1, y0, y1) = self.bounds();
        let width = (x1 - x0) * UNIT + 2 * MARGIN;
        let height = (y1 - y0) * UNIT + 2 * MARGIN + 20;
        let at = |p: Point| ((p.0 - x0) * UNIT + MARGIN, (y1 - p.1) * UNIT + MARGIN + 20);
        let mut s = String::new();
        writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#).unwrap();
        writeln!(s, r#"<text x="{MARGIN}" y="18" font-family="monospace" font-size="14">{}</text>"#, self.caption()).unwrap();
        for (a, b) in self.contact_pairs() {
            let ((ax, ay), (bx, by)) = (at(a), at(b));
            writeln!(s, r##"<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="#d62728" stroke-width="2" stroke-dasharray="4 3"/>"##).unwrap();
        }
        let points: Vec<String> = self.positions.iter().map(|&p| {
            let (x, y) = at(p);
            format!("{x},{y}")
        }).collect();
        writeln!(s, r#"<polyline points="{}" fill="none" stroke="black" stroke-width="3"/>"#, points.join(" ")).unwrap();
        for (i, &p) in self.positions.iter().enumerate() {
            let (x, y) = at(p);
            let fill = if self.binary[i] == 1 { "black" } else { "white" };
            let r = if i == 0 { 11 } else { 9 };
            writeln!(s, r#"<circle cx="{x}" cy="{y}" r="{r}" fill="{fill}" stroke="black" stroke-width="2"/>"#).unwrap();
        }
        s.push_str("</svg>\n");
        s
    }
}

pub fn render_ascii(coord_b: &str, coord_t: &str) -> Result<String> {
    Ok(Conformation::new(coord_b, coord_t)?.to_ascii())
}

pub fn render_svg(coord_b: &str, coord_t: &str) -> Result<String> {
    Ok(Conformation::new(coord_b, coord_t)?.to_svg())
}

/// Both drawings; an infeasible fold is an [`Error::Infeasible`].
pub fn render_conformation(coord_b: &str, coord_t: &str) -> Result<(String, String)> {
    let c = Conformation::new(coord_b, coord_t)?;
    Ok((c.to_ascii(), c.to_svg()))
}
