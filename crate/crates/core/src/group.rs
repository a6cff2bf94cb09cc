//! Edge decorations: elements of the trivial group, of a free abelian group
//! `Z^k`, or of a free group `F_k`, together with their integral group rings.

use std::collections::BTreeMap;
use std::fmt;

use crate::linear::add_coeff;
use crate::parse::{Cursor, ParseError};

/// The group that edge decorations live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Trivial,
    FreeAbelian(usize),
    Free(usize),
}

impl GroupKind {
    /// Parses `trivial`, `zk:K` or `free:K`.
    pub fn from_flag(s: &str) -> Option<GroupKind> {
        if s == "trivial" {
            return Some(GroupKind::Trivial);
        }
        if let Some(k) = s.strip_prefix("zk:") {
            return k.parse().ok().map(GroupKind::FreeAbelian);
        }
        if let Some(k) = s.strip_prefix("free:") {
            return k.parse().ok().map(GroupKind::Free);
        }
        None
    }

    pub fn rank(self) -> usize {
        match self {
            GroupKind::Trivial => 0,
            GroupKind::FreeAbelian(k) | GroupKind::Free(k) => k,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Trivial => write!(f, "trivial"),
            GroupKind::FreeAbelian(k) => write!(f, "zk:{k}"),
            GroupKind::Free(k) => write!(f, "free:{k}"),
        }
    }
}

/// A letter of a free-group word: `+g` is `x_g`, `-g` is `x_g^-1` (`g >= 1`).
pub type Letter = i32;

/// An element of one of the supported groups.
///
/// Free words are kept freely reduced by every constructor except
/// [`GroupElement::free_unreduced`], which exists so that validation can be
/// exercised on malformed input.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Trivial,
    Abelian(Vec<i64>),
    Free(Vec<Letter>),
}

impl GroupElement {
    pub fn identity(kind: GroupKind) -> GroupElement {
        match kind {
            GroupKind::Trivial => GroupElement::Trivial,
            GroupKind::FreeAbelian(k) => GroupElement::Abelian(vec![0; k]),
            GroupKind::Free(_) => GroupElement::Free(Vec::new()),
        }
    }

    /// The identity of the group this element lives in.
    pub fn identity_like(&self) -> GroupElement {
        match self {
            GroupElement::Trivial => GroupElement::Trivial,
            GroupElement::Abelian(v) => GroupElement::Abelian(vec![0; v.len()]),
            GroupElement::Free(_) => GroupElement::Free(Vec::new()),
        }
    }

    /// The `g`-th generator (1-based).
    pub fn generator(kind: GroupKind, g: usize) -> GroupElement {
        assert!(g >= 1 && g <= kind.rank(), "generator x{g} not in {kind}");
        match kind {
            GroupKind::Trivial => unreachable!(),
            GroupKind::FreeAbelian(k) => {
                let mut v = vec![0; k];
                v[g - 1] = 1;
                GroupElement::Abelian(v)
            }
            GroupKind::Free(_) => GroupElement::Free(vec![g as Letter]),
        }
    }

    pub fn abelian(exponents: Vec<i64>) -> GroupElement {
        GroupElement::Abelian(exponents)
    }

    pub fn free(letters: impl IntoIterator<Item = Letter>) -> GroupElement {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            assert!(l != 0, "free letter 0");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupElement::Free(out)
    }

    pub fn free_unreduced(letters: Vec<Letter>) -> GroupElement {
        GroupElement::Free(letters)
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Trivial => true,
            GroupElement::Abelian(v) => v.iter().all(|&x| x == 0),
            GroupElement::Free(w) => w.is_empty(),
        }
    }

    pub fn is_reduced(&self) -> bool {
        match self {
            GroupElement::Free(w) => w.windows(2).all(|p| p[0] != -p[1]) && !w.contains(&0),
            _ => true,
        }
    }

    /// Whether this element can be a decoration for `kind`.
    pub fn fits(&self, kind: GroupKind) -> bool {
        match (self, kind) {
            (GroupElement::Trivial, GroupKind::Trivial) => true,
            (GroupElement::Abelian(v), GroupKind::FreeAbelian(k)) => v.len() == k,
            (GroupElement::Free(w), GroupKind::Free(k)) => {
                w.iter().all(|&l| l != 0 && (l.unsigned_abs() as usize) <= k)
            }
            _ => false,
        }
    }

    /// Group product `self * other`.
    ///
    /// Panics if the two elements belong to different group kinds.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        match (self, other) {
            (GroupElement::Trivial, GroupElement::Trivial) => GroupElement::Trivial,
            (GroupElement::Abelian(a), GroupElement::Abelian(b)) => {
                assert_eq!(a.len(), b.len(), "abelian rank mismatch");
                GroupElement::Abelian(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (GroupElement::Free(a), GroupElement::Free(b)) => {
                GroupElement::free(a.iter().chain(b.iter()).copied())
            }
            _ => panic!("multiplying decorations of different group kinds"),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        match self {
            GroupElement::Trivial => GroupElement::Trivial,
            GroupElement::Abelian(a) => GroupElement::Abelian(a.iter().map(|x| -x).collect()),
            GroupElement::Free(w) => GroupElement::Free(w.iter().rev().map(|l| -l).collect()),
        }
    }

    /// Parses the `gword` grammar: `e` or `x3 x1^-2 ...`.
    pub fn parse(s: &str, kind: GroupKind) -> Result<GroupElement, ParseError> {
        let mut c = Cursor::new(s);
        let g = parse_gword(&mut c, kind)?;
        c.skip_ws();
        if !c.at_end() {
            return Err(c.error("trailing input after group word"));
        }
        Ok(g)
    }
}

/// Parses a group word at the cursor, stopping before `]` or end of input.
pub(crate) fn parse_gword(c: &mut Cursor<'_>, kind: GroupKind) -> Result<GroupElement, ParseError> {
    c.skip_ws();
    if c.peek() == Some('e') {
        c.bump();
        return Ok(GroupElement::identity(kind));
    }
    let mut acc = GroupElement::identity(kind);
    let mut any = false;
    loop {
        c.skip_ws();
        match c.peek() {
            Some('x') => {}
            _ => break,
        }
        let start = c.clone();
        c.bump();
        let g = c.uint()? as usize;
        let mut exp: i64 = 1;
        if c.peek() == Some('^') {
            c.bump();
            exp = c.int()?;
        }
        if g == 0 || g > kind.rank() {
            return Err(start.error(&format!("generator x{g} is not in group {kind}")));
        }
        let gen = GroupElement::generator(kind, g);
        let step = if exp < 0 { gen.inverse() } else { gen };
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&step);
        }
        any = true;
    }
    if !any {
        return Err(c.error("expected group word (`e` or `x<INT>` terms)"));
    }
    Ok(acc)
}

fn write_power(f: &mut fmt::Formatter<'_>, first: &mut bool, g: usize, e: i64) -> fmt::Result {
    if !*first {
        write!(f, " ")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "x{g}")
    } else {
        write!(f, "x{g}^{e}")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let mut first = true;
        match self {
            GroupElement::Trivial => unreachable!(),
            GroupElement::Abelian(v) => {
                for (i, &e) in v.iter().enumerate() {
                    if e != 0 {
                        write_power(f, &mut first, i + 1, e)?;
                    }
                }
            }
            GroupElement::Free(w) => {
                let mut i = 0;
                while i < w.len() {
                    let l = w[i];
                    let mut j = i;
                    while j < w.len() && w[j] == l {
                        j += 1;
                    }
                    let e = (j - i) as i64 * l.signum() as i64;
                    write_power(f, &mut first, l.unsigned_abs() as usize, e)?;
                    i = j;
                }
            }
        }
        Ok(())
    }
}

/// An element of the integral group ring `Z[pi^k]`: integer combinations of
/// `k`-tuples of group elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupRingElement {
    terms: BTreeMap<Vec<GroupElement>, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(tuple: Vec<GroupElement>, coeff: i64) -> Self {
        let mut r = Self::zero();
        r.add_term(tuple, coeff);
        r
    }

    pub fn add_term(&mut self, tuple: Vec<GroupElement>, coeff: i64) {
        add_coeff(&mut self.terms, tuple, coeff);
    }

    pub fn add_assign(&mut self, other: &GroupRingElement) {
        for (t, &c) in &other.terms {
            self.add_term(t.clone(), c);
        }
    }

    pub fn scaled(&self, k: i64) -> GroupRingElement {
        let mut r = Self::zero();
        for (t, &c) in &self.terms {
            r.add_term(t.clone(), c * k);
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, tuple: &[GroupElement]) -> i64 {
        self.terms.get(tuple).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<GroupElement>, i64)> {
        self.terms.iter().map(|(t, &c)| (t, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "(")?;
            for (j, g) in t.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{g}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_words_reduce() {
        let g = GroupElement::free([1, 2, -2, -1, 3]);
        assert_eq!(g, GroupElement::Free(vec![3]));
        assert!(g.is_reduced());
        assert!(!GroupElement::free_unreduced(vec![1, -1]).is_reduced());
    }

    #[test]
    fn inverse_and_identity() {
        let k = GroupKind::Free(2);
        let g = GroupElement::parse("x1 x2^-1 x1", k).unwrap();
        assert!(g.mul(&g.inverse()).is_identity());
        assert_eq!(g.mul(&GroupElement::identity(k)), g);
        let a = GroupElement::parse("x1^3 x2^-1", GroupKind::FreeAbelian(2)).unwrap();
        assert_eq!(a, GroupElement::Abelian(vec![3, -1]));
    }

    #[test]
    fn display_round_trips() {
        for (s, k) in [
            ("x1^2 x2^-1 x1", GroupKind::Free(2)),
            ("x1 x3^-4", GroupKind::FreeAbelian(3)),
            ("e", GroupKind::Trivial),
        ] {
            let g = GroupElement::parse(s, k).unwrap();
            assert_eq!(GroupElement::parse(&g.to_string(), k).unwrap(), g);
        }
    }

    #[test]
    fn generator_out_of_range_is_rejected() {
        assert!(GroupElement::parse("x3", GroupKind::Free(2)).is_err());
        assert!(GroupElement::parse("x1", GroupKind::Trivial).is_err());
    }

    #[test]
    fn group_ring_cancels() {
        let k = GroupKind::FreeAbelian(1);
        let g = GroupElement::generator(k, 1);
        let mut r = GroupRingElement::monomial(vec![g.clone()], 2);
        r.add_term(vec![g], -2);
        assert!(r.is_zero());
    }
}
