//! Indeterminacy subgroups coming from tubing Whitney disks into 2-spheres.
//!
//! The order 1 relations and the order 2 relations with vanishing
//! intersection form are images of integer matrices. With a nonzero form
//! `Q` the order 2 set is the image of a quadratic map, explored here on a
//! box of inputs.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::lattice::{solve, LatticeSubgroup};
use crate::linear::{gcd, gcd_all};
use crate::parse::{content_lines, Cursor, ParseError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IntError {
    #[error("MissingPattern: no vector for a {0}")]
    MissingPattern(String),
    #[error("BadData: {0}")]
    BadData(String),
    #[error("BudgetExceeded: {needed} evaluations needed, budget {budget}; partial report uses bound {}", partial.bound)]
    BudgetExceeded { needed: u128, budget: u128, partial: Box<QuadImageReport> },
}

impl IntError {
    pub fn name(&self) -> &'static str {
        match self {
            IntError::MissingPattern(_) => "MissingPattern",
            IntError::BadData(_) => "BadData",
            IntError::BudgetExceeded { .. } => "BudgetExceeded",
        }
    }
}

/// Which pairing a vector records: `a ij` or `a ij,k`. Pairs are unordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    Pair(u8, u8),
    Triple(u8, u8, u8),
}

impl Pattern {
    pub fn pair(i: u8, j: u8) -> Pattern {
        Pattern::Pair(i.min(j), i.max(j))
    }

    pub fn triple(i: u8, j: u8, k: u8) -> Pattern {
        Pattern::Triple(i.min(j), i.max(j), k)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Pair(i, j) => write!(f, "{i}{j}"),
            Pattern::Triple(i, j, k) => write!(f, "{i}{j},{k}"),
        }
    }
}

/// Pairings of a basis of `π₂X` mod torsion (rank `r`) with the surfaces,
/// and the intersection matrix `Q` of that basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionData {
    pub r: usize,
    pub a: BTreeMap<Pattern, Vec<i64>>,
    pub q: Vec<Vec<i64>>,
}

impl IntersectionData {
    pub fn new(r: usize) -> Self {
        IntersectionData { r, a: BTreeMap::new(), q: vec![vec![0; r]; r] }
    }

    pub fn set(&mut self, p: Pattern, v: Vec<i64>) -> &mut Self {
        self.a.insert(p, v);
        self
    }

    pub fn get(&self, p: Pattern) -> Result<&[i64], IntError> {
        self.a.get(&p).map(Vec::as_slice).ok_or_else(|| IntError::MissingPattern(p.to_string()))
    }

    fn get_or_zero(&self, p: Pattern) -> Vec<i64> {
        self.a.get(&p).cloned().unwrap_or_else(|| vec![0; self.r])
    }

    pub fn validate(&self) -> Result<(), IntError> {
        for (p, v) in &self.a {
            if v.len() != self.r {
                return Err(IntError::BadData(format!("a {p} has length {}, r = {}", v.len(), self.r)));
            }
        }
        if self.q.len() != self.r || self.q.iter().any(|row| row.len() != self.r) {
            return Err(IntError::BadData(format!("Q must be {0}x{0}", self.r)));
        }
        Ok(())
    }

    pub fn q_is_zero(&self) -> bool {
        self.q.iter().flatten().all(|&x| x == 0)
    }

    /// `x Q y^T`.
    fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                s += xi * self.q[i][j] * yj;
            }
        }
        s
    }

    /// Data file: `r = INT`, `Q = row; row; ...`, `a ij = v...`,
    /// `a ij,k = v...`. Indices are single digits.
    pub fn parse(text: &str) -> Result<IntersectionData, ParseError> {
        let mut r = None;
        let mut q = None;
        let mut a = BTreeMap::new();
        for (n, line) in content_lines(text) {
            parse_data_line(line, &mut r, &mut q, &mut a).map_err(|e| e.at_line(n))?;
        }
        let r = r.ok_or_else(|| ParseError::new(1, 1, "missing `r = INT` line"))?;
        let q = q.unwrap_or_else(|| vec![vec![0; r]; r]);
        Ok(IntersectionData { r, a, q })
    }
}

fn ints_to_end(c: &mut Cursor<'_>) -> Result<Vec<i64>, ParseError> {
    let mut v = Vec::new();
    loop {
        c.skip_ws();
        if c.at_end() || c.peek() == Some(';') {
            return Ok(v);
        }
        v.push(c.int()?);
    }
}

fn digit(c: &mut Cursor<'_>) -> Result<u8, ParseError> {
    match c.peek() {
        Some(d @ '1'..='9') => {
            c.bump();
            Ok(d as u8 - b'0')
        }
        _ => Err(c.error("expected an index digit 1-9")),
    }
}

fn parse_data_line(
    line: &str,
    r: &mut Option<usize>,
    q: &mut Option<Vec<Vec<i64>>>,
    a: &mut BTreeMap<Pattern, Vec<i64>>,
) -> Result<(), ParseError> {
    let mut c = Cursor::new(line);
    match c.bump() {
        Some('r') => {
            c.expect('=')?;
            c.skip_ws();
            *r = Some(c.uint()? as usize);
        }
        Some('Q') => {
            c.expect('=')?;
            let mut rows = vec![ints_to_end(&mut c)?];
            while c.peek() == Some(';') {
                c.bump();
                rows.push(ints_to_end(&mut c)?);
            }
            rows.retain(|row| !row.is_empty());
            *q = Some(rows);
        }
        Some('a') => {
            c.skip_ws();
            let i = digit(&mut c)?;
            let j = digit(&mut c)?;
            if i == j {
                return Err(c.error("pair indices must differ"));
            }
            let p = if c.peek() == Some(',') {
                c.bump();
                Pattern::triple(i, j, digit(&mut c)?)
            } else {
                Pattern::pair(i, j)
            };
            c.expect('=')?;
            let v = ints_to_end(&mut c)?;
            if !c.at_end() {
                return Err(c.error("unexpected `;` in a vector"));
            }
            a.insert(p, v);
        }
        _ => return Err(ParseError::new(1, 1, "expected a line starting with `r`, `Q` or `a`")),
    }
    c.skip_ws();
    if !c.at_end() {
        return Err(c.error("trailing input"));
    }
    Ok(())
}

/// `Λ₁(3)/INT₁ ≅ Z/d`; `d = 0` is the infinite quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TripleQuotient {
    pub d: i64,
}

impl fmt::Display for TripleQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = match self.d {
            0 => "Z".to_string(),
            1 => "0".to_string(),
            d => format!("Z/{d}"),
        };
        write!(f, "d = {}\nquotient: {q}", self.d)
    }
}

/// The gcd of all entries of `a 12`, `a 31` and `a 23`. Absent vectors
/// contribute no relations.
pub fn int1_triple(data: &IntersectionData) -> TripleQuotient {
    let vals = [Pattern::pair(1, 2), Pattern::pair(3, 1), Pattern::pair(2, 3)]
        .into_iter()
        .flat_map(|p| data.get_or_zero(p));
    TripleQuotient { d: gcd_all(vals) }
}

/// The matrix of a linear INT map and the subgroup its columns span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearImage {
    /// Row-major, `rows × 6r`.
    pub matrix: Vec<Vec<i64>>,
    pub image: LatticeSubgroup,
}

impl LinearImage {
    fn from_blocks(r: usize, rows: Vec<Vec<Vec<i64>>>) -> Self {
        let matrix: Vec<Vec<i64>> = rows.into_iter().map(|blocks| blocks.concat()).collect();
        let dim = matrix.len();
        let cols: Vec<Vec<i64>> =
            (0..6 * r).map(|j| matrix.iter().map(|row| row[j]).collect()).collect();
        let image = LatticeSubgroup::from_generators(dim, &cols);
        LinearImage { matrix, image }
    }

    pub fn columns(&self) -> Vec<Vec<i64>> {
        let n = self.matrix.first().map_or(0, Vec::len);
        (0..n).map(|j| self.matrix.iter().map(|row| row[j]).collect()).collect()
    }
}

impl fmt::Display for LinearImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matrix:")?;
        for row in &self.matrix {
            let s: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "  [{}]", s.join(" "))?;
        }
        write!(f, "{}", self.image)
    }
}

/// `INT₁(A1,A2,A3,A4)` in `Λ₁(4) ≅ Z⁴`, with columns grouped as
/// `x12, x13, x41, x23, x24, x34` and rows the label sets
/// `{1,2,3}, {1,2,4}, {1,3,4}, {2,3,4}`.
pub fn int1_quadruple(data: &IntersectionData) -> Result<LinearImage, IntError> {
    data.validate()?;
    let z = vec![0; data.r];
    let a = |i, j, k| data.get(Pattern::triple(i, j, k)).map(<[i64]>::to_vec);
    let neg = |v: Vec<i64>| v.into_iter().map(|x| -x).collect::<Vec<_>>();
    let rows = vec![
        vec![a(1, 2, 3)?, neg(a(1, 3, 2)?), z.clone(), a(2, 3, 1)?, z.clone(), z.clone()],
        vec![a(1, 2, 4)?, z.clone(), a(4, 1, 2)?, z.clone(), a(2, 4, 1)?, z.clone()],
        vec![z.clone(), a(1, 3, 4)?, a(4, 1, 3)?, z.clone(), z.clone(), a(3, 4, 1)?],
        vec![z.clone(), z.clone(), z.clone(), a(2, 3, 4)?, neg(a(2, 4, 3)?), a(3, 4, 2)?],
    ];
    Ok(LinearImage::from_blocks(data.r, rows))
}

/// The linear order 2 relations in the basis `{t1, t2}` of `Λ₂(4)`, with
/// columns grouped as `x12, x34, x13, x24, x14, x23`.
pub fn int2_linear(data: &IntersectionData) -> Result<LinearImage, IntError> {
    data.validate()?;
    let z = vec![0; data.r];
    let a = |i, j| data.get(Pattern::pair(i, j)).map(<[i64]>::to_vec);
    let rows = vec![
        vec![a(1, 2)?, a(3, 4)?, z.clone(), z.clone(), a(1, 4)?, a(2, 3)?],
        vec![z.clone(), z.clone(), a(1, 3)?, a(2, 4)?, a(1, 4)?, a(2, 3)?],
    ];
    Ok(LinearImage::from_blocks(data.r, rows))
}

fn dot(a: &[i64], x: &[i64]) -> i64 {
    a.iter().zip(x).map(|(p, q)| p * q).sum()
}

/// The quadratic INT₂ map at `x = (x12, x34, x13, x24, x14, x23)`.
pub fn int2_quadratic_map(data: &IntersectionData, x: &[i64]) -> Result<(i64, i64), IntError> {
    data.validate()?;
    let r = data.r;
    if x.len() != 6 * r {
        return Err(IntError::BadData(format!("x has length {}, expected {}", x.len(), 6 * r)));
    }
    let b = |k: usize| &x[k * r..(k + 1) * r];
    let a = |i, j| data.get(Pattern::pair(i, j));
    let cross = dot(a(1, 4)?, b(4)) + dot(a(2, 3)?, b(5)) + data.form(b(4), b(5));
    let first = dot(a(1, 2)?, b(0)) + dot(a(3, 4)?, b(1)) + data.form(b(0), b(1)) + cross;
    let second = dot(a(1, 3)?, b(2)) + dot(a(2, 4)?, b(3)) + data.form(b(2), b(3)) + cross;
    Ok((first, second))
}

/// Values of `a·x + b·y + x Q y^T` over `x, y ∈ [-B, B]^r`, each with its
/// lexicographically first witness `(x, y)`.
fn pair_values(data: &IntersectionData, a: &[i64], b: &[i64], bound: i64) -> BTreeMap<i64, Vec<i64>> {
    let r = data.r;
    let mut out = BTreeMap::new();
    let mut xy = vec![-bound; 2 * r];
    loop {
        let (x, y) = xy.split_at(r);
        let v = dot(a, x) + dot(b, y) + data.form(x, y);
        out.entry(v).or_insert_with(|| xy.clone());
        let Some(p) = (0..2 * r).rev().find(|&p| xy[p] < bound) else { break };
        xy[p] += 1;
        for t in &mut xy[p + 1..] {
            *t = -bound;
        }
    }
    out
}

/// Bounded exploration of the quadratic INT₂ image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadImageReport {
    pub bound: i64,
    /// False when the budget forced a smaller bound than requested.
    pub exhaustive: bool,
    xmin: i64,
    ymin: i64,
    width: usize,
    rows: Vec<Vec<u64>>,
    /// gcd of the attained first and second coordinates.
    pub projection_gcds: (i64, i64),
    /// Multiples of the projection gcd in `[-B, B]` that no attained point
    /// projects to.
    pub projection_gaps: (Vec<i64>, Vec<i64>),
    /// Pairs of attained points in `[-B, B]²` whose sum lies in the window
    /// but is not attained. At most [`MAX_LISTED_VIOLATIONS`] are listed.
    pub closure_violations: Vec<((i64, i64), (i64, i64))>,
    pub closure_violation_count: usize,
    u: BTreeMap<i64, Vec<i64>>,
    v: BTreeMap<i64, Vec<i64>>,
    c: BTreeMap<i64, Vec<i64>>,
}

pub const MAX_LISTED_VIOLATIONS: usize = 32;

/// Cap on the size of the attained-point grid, in bits.
const MAX_GRID_BITS: u128 = 1 << 32;

impl QuadImageReport {
    pub fn contains(&self, p: (i64, i64)) -> bool {
        let (dx, dy) = (p.0 - self.xmin, p.1 - self.ymin);
        if dx < 0 || dy < 0 || dx as usize >= self.rows.len() || dy as usize >= self.width {
            return false;
        }
        let (dx, dy) = (dx as usize, dy as usize);
        self.rows[dx][dy / 64] >> (dy % 64) & 1 == 1
    }

    /// Attained points in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            row.iter().enumerate().flat_map(move |(w, &bits)| {
                (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| {
                    (self.xmin + i as i64, self.ymin + (w * 64 + b) as i64)
                })
            })
        })
    }

    pub fn len(&self) -> usize {
        self.rows.iter().flatten().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// An input `x = (x12, x34, x13, x24, x14, x23)` in the box reaching `p`.
    pub fn witness(&self, p: (i64, i64)) -> Option<Vec<i64>> {
        for (cv, cw) in &self.c {
            if let (Some(uw), Some(vw)) = (self.u.get(&(p.0 - cv)), self.v.get(&(p.1 - cv))) {
                return Some([uw.as_slice(), vw, cw].concat());
            }
        }
        None
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pts: Vec<[i64; 2]> = self.points().map(|(x, y)| [x, y]).collect();
        json!({
            "bound": self.bound,
            "exhaustive": self.exhaustive,
            "point_count": pts.len(),
            "points": pts,
            "projection_gcds": [self.projection_gcds.0, self.projection_gcds.1],
            "projection_gaps": [self.projection_gaps.0, self.projection_gaps.1],
            "closure_violation_count": self.closure_violation_count,
            "closure_violations": self.closure_violations.iter()
                .map(|(p, q)| [[p.0, p.1], [q.0, q.1]]).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for QuadImageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bound: {}", self.bound)?;
        writeln!(f, "exhaustive: {}", self.exhaustive)?;
        writeln!(f, "points: {}", self.len())?;
        writeln!(f, "projection gcds: ({}, {})", self.projection_gcds.0, self.projection_gcds.1)?;
        writeln!(f, "projection gaps: {:?} {:?}", self.projection_gaps.0, self.projection_gaps.1)?;
        write!(f, "closure violations: {}", self.closure_violation_count)?;
        for (p, q) in &self.closure_violations {
            write!(f, "\n  {p:?} + {q:?}")?;
        }
        Ok(())
    }
}

fn evaluations(r: usize, bound: i64) -> u128 {
    3 * ((2 * bound as u128 + 1).pow(2 * r as u32))
}

/// Every value of the quadratic INT₂ map on `x ∈ [-B, B]^{6r}`.
///
/// The map splits as `(u + c, v + c)` with `u` depending on `(x12, x34)`,
/// `v` on `(x13, x24)` and `c` on `(x14, x23)`, so the three value sets are
/// enumerated separately and combined on a bit grid, one grid row per
/// thread task.
pub fn int2_quadratic_image(
    data: &IntersectionData,
    bound: i64,
    budget: u128,
) -> Result<QuadImageReport, IntError> {
    data.validate()?;
    if bound < 1 {
        return Err(IntError::BadData("bound must be at least 1".into()));
    }
    for p in [(1, 2), (3, 4), (1, 3), (2, 4), (1, 4), (2, 3)] {
        data.get(Pattern::pair(p.0, p.1))?;
    }
    let needed = evaluations(data.r, bound);
    if needed <= budget {
        return explore(data, bound, true);
    }
    let fallback = (0..bound).rev().find(|&b| evaluations(data.r, b) <= budget).unwrap_or(0);
    Err(IntError::BudgetExceeded { needed, budget, partial: Box::new(explore(data, fallback, false)?) })
}

fn explore(data: &IntersectionData, bound: i64, exhaustive: bool) -> Result<QuadImageReport, IntError> {
    let a = |i, j| data.get_or_zero(Pattern::pair(i, j));
    let u = pair_values(data, &a(1, 2), &a(3, 4), bound);
    let v = pair_values(data, &a(1, 3), &a(2, 4), bound);
    let c = pair_values(data, &a(1, 4), &a(2, 3), bound);
    let lo = |s: &BTreeMap<i64, Vec<i64>>| *s.keys().next().expect("value sets are nonempty");
    let hi = |s: &BTreeMap<i64, Vec<i64>>| *s.keys().next_back().expect("value sets are nonempty");
    let (xmin, xmax) = (lo(&u) + lo(&c), hi(&u) + hi(&c));
    let (ymin, ymax) = (lo(&v) + lo(&c), hi(&v) + hi(&c));
    let height = (xmax - xmin + 1) as usize;
    let width = (ymax - ymin + 1) as usize;
    if height as u128 * width as u128 > MAX_GRID_BITS {
        return Err(IntError::BadData(format!("attained values span a {height}x{width} grid")));
    }
    let words = width.div_ceil(64);
    let vmin = lo(&v);
    let mut vbits = vec![0u64; words];
    for &val in v.keys() {
        let k = (val - vmin) as usize;
        vbits[k / 64] |= 1 << (k % 64);
    }
    let cvals: Vec<i64> = c.keys().copied().collect();
    let rows: Vec<Vec<u64>> = (0..height)
        .into_par_iter()
        .map(|i| {
            let x = xmin + i as i64;
            let mut row = vec![0u64; words];
            for &cv in &cvals {
                if u.contains_key(&(x - cv)) {
                    or_shifted(&mut row, &vbits, (vmin + cv - ymin) as usize);
                }
            }
            row
        })
        .collect();
    let mut report = QuadImageReport {
        bound,
        exhaustive,
        xmin,
        ymin,
        width,
        rows,
        projection_gcds: (0, 0),
        projection_gaps: (Vec::new(), Vec::new()),
        closure_violations: Vec::new(),
        closure_violation_count: 0,
        u,
        v,
        c,
    };
    summarize(&mut report);
    Ok(report)
}

/// `dst |= src << shift`, bitwise over little-endian words.
fn or_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    for (k, &w) in src.iter().enumerate() {
        if w == 0 {
            continue;
        }
        if let Some(d) = dst.get_mut(k + ws) {
            *d |= w << bs;
        }
        if bs != 0 {
            if let Some(d) = dst.get_mut(k + ws + 1) {
                *d |= w >> (64 - bs);
            }
        }
    }
}

fn summarize(rep: &mut QuadImageReport) {
    let pts: Vec<(i64, i64)> = rep.points().collect();
    let gx = pts.iter().fold(0, |g, p| gcd(g, p.0));
    let gy = pts.iter().fold(0, |g, p| gcd(g, p.1));
    rep.projection_gcds = (gx, gy);
    let b = rep.bound;
    let xs: std::collections::BTreeSet<i64> = pts.iter().map(|p| p.0).collect();
    let ys: std::collections::BTreeSet<i64> = pts.iter().map(|p| p.1).collect();
    let gaps = |g: i64, seen: &std::collections::BTreeSet<i64>| -> Vec<i64> {
        if g == 0 {
            return Vec::new();
        }
        (-b..=b).filter(|k| k % g == 0 && !seen.contains(k)).collect()
    };
    rep.projection_gaps = (gaps(gx, &xs), gaps(gy, &ys));
    let inside = |p: (i64, i64)| p.0.abs() <= b && p.1.abs() <= b;
    let window: Vec<(i64, i64)> = pts.into_iter().filter(|&p| inside(p)).collect();
    for (i, &p) in window.iter().enumerate() {
        for &q in &window[i..] {
            let s = (p.0 + q.0, p.1 + q.1);
            if inside(s) && !rep.contains(s) {
                rep.closure_violation_count += 1;
                if rep.closure_violations.len() < MAX_LISTED_VIOLATIONS {
                    rep.closure_violations.push((p, q));
                }
            }
        }
    }
}

/// A membership answer. Membership is only ever confirmed, never refuted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// An input vector `(x12, x34, x13, x24, x14, x23)` reaching the target.
    Yes(Vec<i64>),
    UnknownWithinBound,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Membership::Yes(x) => {
                let s: Vec<String> = x.iter().map(i64::to_string).collect();
                write!(f, "yes\nwitness: {}", s.join(" "))
            }
            Membership::UnknownWithinBound => write!(f, "unknown within bound"),
        }
    }
}

/// Whether `target` lies in the INT₂ set. With `Q = 0` the set is a
/// subgroup and the answer comes from an exact solve, so the witness need
/// not lie in the box; otherwise the box `[-B, B]^{6r}` is searched.
pub fn int2_membership(
    target: (i64, i64),
    data: &IntersectionData,
    bound: i64,
    budget: u128,
) -> Result<Membership, IntError> {
    if data.q_is_zero() {
        let lin = int2_linear(data)?;
        return Ok(match solve(&lin.columns(), &[target.0, target.1]) {
            Some(x) => Membership::Yes(x),
            None => Membership::UnknownWithinBound,
        });
    }
    let rep = match int2_quadratic_image(data, bound, budget) {
        Ok(r) => r,
        Err(IntError::BudgetExceeded { partial, .. }) => *partial,
        Err(e) => return Err(e),
    };
    Ok(rep.witness(target).map_or(Membership::UnknownWithinBound, Membership::Yes))
}

/// True when the sphere pairings have gcd 1, which suffices to pull the
/// surfaces apart.
pub fn gcd_pullapart_check(pairings: &BTreeMap<(usize, u32), i64>) -> bool {
    gcd_all(pairings.values().copied()) == 1
}
