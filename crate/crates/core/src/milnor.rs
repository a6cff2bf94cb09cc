//! Magnus expansions of longitude words and the non-repeating Milnor
//! invariants they determine.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::group::{GroupElement, GroupKind, Letter};
use crate::lie::{eta, lie_normalize, Bracket, LieElement};
use crate::linear::add_coeff;
use crate::parse::{content_lines, Cursor, ParseError};
use crate::tree::{forest_to_sum, normalize_lambda, IntersectionForest, Label};


#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MilnorError {
    #[error("LowerOrderNonzero: longitude {0} has nonzero coefficient on {1}")]
    LowerOrderNonzero(Label, String),
    #[error("NonLieLeadingTerm: leading part of longitude {0} is not a Lie element")]
    NonLieLeadingTerm(Label),
    #[error("ContextMismatch: {0}")]
    ContextMismatch(String),
}

impl MilnorError {
    pub fn name(&self) -> &'static str {
        match self {
            MilnorError::LowerOrderNonzero(..) => "LowerOrderNonzero",
            MilnorError::NonLieLeadingTerm(_) => "NonLieLeadingTerm",
            MilnorError::ContextMismatch(_) => "ContextMismatch",
        }
    }
}

/// The longitude of one component as a reduced word in the meridians.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeridianWord {
    pub component: Label,
    letters: Vec<Letter>,
}

impl MeridianWord {
    pub fn new(component: Label, letters: impl IntoIterator<Item = Letter>) -> Self {
        let GroupElement::Free(letters) = GroupElement::free(letters) else { unreachable!() };
        MeridianWord { component, letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn parse(component: Label, s: &str, m: Label) -> Result<Self, ParseError> {
        match GroupElement::parse(s, GroupKind::Free(m as usize))? {
            GroupElement::Free(w) => Ok(MeridianWord { component, letters: w }),
            _ => unreachable!(),
        }
    }

    /// Sets every meridian in `gone` to the identity.
    pub fn without(&self, gone: &BTreeSet<Label>) -> MeridianWord {
        MeridianWord::new(
            self.component,
            self.letters.iter().copied().filter(|l| !gone.contains(&l.unsigned_abs())),
        )
    }
}

impl fmt::Display for MeridianWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {}", self.component, GroupElement::Free(self.letters.clone()))
    }
}

/// Longitude file: `i : word` lines over meridians `x1..xm`. Components
/// that are not listed get the empty word.
pub fn parse_longitudes(text: &str, m: Label) -> Result<Vec<MeridianWord>, ParseError> {
    let mut found: BTreeMap<Label, MeridianWord> = BTreeMap::new();
    for (n, line) in content_lines(text) {
        let mut c = Cursor::new(line);
        let i = c.uint().map_err(|e| e.at_line(n))?;
        if i == 0 || i > m as u64 {
            return Err(ParseError::new(n, 1, format!("component {i} not in 1..={m}")));
        }
        c.expect(':').map_err(|e| e.at_line(n))?;
        let rest = line.split_once(':').map(|x| x.1).unwrap_or("");
        let w = MeridianWord::parse(i as Label, rest, m).map_err(|e| e.at_line(n))?;
        if found.insert(i as Label, w).is_some() {
            return Err(ParseError::new(n, 1, format!("component {i} listed twice")));
        }
    }
    Ok((1..=m)
        .map(|i| found.remove(&i).unwrap_or_else(|| MeridianWord::new(i, [])))
        .collect())
}

/// Deletes the components not in `keep`.
pub fn sublink(longitudes: &[MeridianWord], keep: &[Label]) -> Vec<MeridianWord> {
    let gone: BTreeSet<Label> = longitudes
        .iter()
        .map(|w| w.component)
        .filter(|c| !keep.contains(c))
        .collect();
    longitudes
        .iter()
        .filter(|w| keep.contains(&w.component))
        .map(|w| w.without(&gone))
        .collect()
}

/// A truncated polynomial in non-commuting variables `X_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnusPolynomial {
    pub degree: usize,
    pub non_repeating: bool,
    terms: BTreeMap<Vec<Label>, i64>,
}

impl MagnusPolynomial {
    pub fn one(degree: usize, non_repeating: bool) -> Self {
        MagnusPolynomial { degree, non_repeating, terms: BTreeMap::from([(Vec::new(), 1)]) }
    }

    /// `x_k ↦ 1 + X_k`, `x_k^-1 ↦ 1 - X_k + X_k^2 - ...`.
    fn letter(l: Letter, degree: usize, non_repeating: bool) -> Self {
        let k = l.unsigned_abs();
        let mut p = Self::one(degree, non_repeating);
        let top = if non_repeating { degree.min(1) } else { degree };
        for d in 1..=top {
            let c = if l > 0 { if d == 1 { 1 } else { 0 } } else if d % 2 == 1 { -1 } else { 1 };
            add_coeff(&mut p.terms, vec![k; d], c);
        }
        p
    }

    fn keeps(&self, w: &[Label]) -> bool {
        w.len() <= self.degree
            && (!self.non_repeating || w.iter().collect::<BTreeSet<_>>().len() == w.len())
    }

    pub fn mul(&self, other: &MagnusPolynomial) -> MagnusPolynomial {
        let mut out = MagnusPolynomial { terms: BTreeMap::new(), ..*self };
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if u.len() + v.len() > self.degree {
                    continue;
                }
                let mut w = u.clone();
                w.extend_from_slice(v);
                if out.keeps(&w) {
                    add_coeff(&mut out.terms, w, a * b);
                }
            }
        }
        out
    }

    pub fn coefficient(&self, w: &[Label]) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Label>, i64)> {
        self.terms.iter().map(|(w, &k)| (w, k))
    }

    /// Terms of one degree.
    pub fn homogeneous(&self, d: usize) -> BTreeMap<Vec<Label>, i64> {
        self.iter().filter(|(w, _)| w.len() == d).map(|(w, k)| (w.clone(), k)).collect()
    }
}

fn monomial(w: &[Label]) -> String {
    w.iter().map(|k| format!("X{k}")).collect()
}

impl fmt::Display for MagnusPolynomial {
    /// Terms by degree, then lexicographically.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut ts: Vec<_> = self.iter().collect();
        ts.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        if ts.is_empty() {
            return write!(f, "0");
        }
        for (n, (w, k)) in ts.into_iter().enumerate() {
            match (n == 0, k < 0) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{}", k.abs())?;
            } else {
                if k.abs() != 1 {
                    write!(f, "{}", k.abs())?;
                }
                write!(f, "{}", monomial(w))?;
            }
        }
        Ok(())
    }
}

pub fn magnus_expand(w: &MeridianWord, degree: usize, non_repeating: bool) -> MagnusPolynomial {
    w.letters.iter().fold(MagnusPolynomial::one(degree, non_repeating), |acc, &l| {
        acc.mul(&MagnusPolynomial::letter(l, degree, non_repeating))
    })
}

/// The order `n` invariants `μ^i_n` for every component, as elements of the
/// reduced free Lie algebra on the other meridians.
///
/// Every length `n+1` square-free coefficient of `ℓ_i` avoiding `i` is read
/// on a word `w`; words ending in their largest letter give the coordinate
/// of `[X_w1,[...,X_max]]`, and the assembled element must reproduce all of
/// the coefficients.
pub fn mu_invariants(
    longitudes: &[MeridianWord],
    n: usize,
) -> Result<BTreeMap<Label, LieElement>, MilnorError> {
    let mut out = BTreeMap::new();
    for l in longitudes {
        let i = l.component;
        let p = magnus_expand(l, n + 1, true);
        let avoid = |w: &Vec<Label>| !w.contains(&i);
        for d in 1..=n {
            if let Some((w, _)) = p.homogeneous(d).iter().find(|(w, _)| avoid(w)) {
                return Err(MilnorError::LowerOrderNonzero(i, monomial(w)));
            }
        }
        let top: BTreeMap<Vec<Label>, i64> =
            p.homogeneous(n + 1).into_iter().filter(|(w, _)| avoid(w)).collect();
        let mut mu = LieElement::zero();
        for (w, &k) in &top {
            if w.last() == w.iter().max() {
                mu.add_term(Bracket::right_nested(w), k);
            }
        }
        let mut check = BTreeMap::new();
        for (b, k) in mu.iter() {
            for (w, c) in b.expand() {
                add_coeff(&mut check, w, k * c);
            }
        }
        if check != top {
            return Err(MilnorError::NonLieLeadingTerm(i));
        }
        out.insert(i, mu);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Order(usize, BTreeMap<Label, LieElement>),
    AllVanish,
}

/// Scans orders `0..=m-2` for the first nonzero invariant.
pub fn first_nonvanishing_order(longitudes: &[MeridianWord]) -> Result<Verdict, MilnorError> {
    let m = longitudes.len();
    for n in 0..m.saturating_sub(1) {
        let mu = mu_invariants(longitudes, n)?;
        if mu.values().any(|e| !e.is_zero()) {
            return Ok(Verdict::Order(n, mu));
        }
    }
    Ok(Verdict::AllVanish)
}

/// Compares `η^i(λ_n)` of the forest with `μ^i_n` of the longitudes for
/// every label `i`.
pub fn verify_eta_identity(
    f: &IntersectionForest,
    longitudes: &[MeridianWord],
) -> Result<Vec<bool>, crate::Error> {
    let m = f.ctx.labels;
    if let Some(w) = longitudes.iter().find(|w| w.component == 0 || w.component > m) {
        return Err(MilnorError::ContextMismatch(format!(
            "longitude of component {} but the forest has {m} labels",
            w.component
        ))
        .into());
    }
    let lambda = normalize_lambda(&forest_to_sum(f)?)?;
    let trees = lambda.to_tree_sum();
    let mu = mu_invariants(longitudes, f.ctx.order)?;
    let mut out = Vec::new();
    for i in 1..=m {
        let lhs = lie_normalize(&eta(i, &trees)?)?;
        let rhs = match mu.get(&i) {
            Some(e) => lie_normalize(e)?,
            None => Default::default(),
        };
        out.push(lhs == rhs);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(i: Label, s: &str, m: Label) -> MeridianWord {
        MeridianWord::parse(i, s, m).unwrap()
    }

    #[test]
    fn commutator_expansion() {
        let p = magnus_expand(&w(1, "x2 x3 x2^-1 x3^-1", 3), 2, true);
        assert_eq!(p.to_string(), "1 + X2X3 - X3X2");
        let p = magnus_expand(&w(1, "x2 x3 x2^-1 x3^-1", 3), 2, false);
        assert_eq!(p.to_string(), "1 + X2X3 - X3X2");
    }

    #[test]
    fn inverse_letters() {
        let p = magnus_expand(&w(1, "x2^-1", 2), 3, false);
        assert_eq!(p.to_string(), "1 - X2 + X2X2 - X2X2X2");
        let q = magnus_expand(&w(1, "x2", 2), 3, false);
        assert_eq!(p.mul(&q), MagnusPolynomial::one(3, false));
        assert_eq!(magnus_expand(&MeridianWord::new(1, [2, -2]), 4, true).to_string(), "1");
    }

    #[test]
    fn linking_number() {
        let ls = vec![w(1, "x2", 2), w(2, "x1", 2)];
        let mu = mu_invariants(&ls, 0).unwrap();
        assert_eq!(mu[&1], LieElement::generator(2));
        assert_eq!(first_nonvanishing_order(&ls).unwrap(), Verdict::Order(0, mu));
    }

    #[test]
    fn borromean() {
        let ls = parse_longitudes("1 : x2 x3 x2^-1 x3^-1\n2 : x3 x1 x3^-1 x1^-1\n3 : x1 x2 x1^-1 x2^-1\n", 3).unwrap();
        let mu = mu_invariants(&ls, 1).unwrap();
        assert_eq!(mu[&1].to_string(), "[X2,X3]");
        assert!(matches!(mu_invariants(&ls, 2), Err(MilnorError::LowerOrderNonzero(1, _))));
        assert!(matches!(first_nonvanishing_order(&ls).unwrap(), Verdict::Order(1, _)));
    }

    #[test]
    fn lower_order_witness() {
        let ls = vec![w(1, "x2", 3)];
        assert_eq!(
            mu_invariants(&ls, 1),
            Err(MilnorError::LowerOrderNonzero(1, "X2".into()))
        );
    }

    #[test]
    fn unlink_vanishes() {
        let ls = parse_longitudes("", 4).unwrap();
        assert_eq!(ls.len(), 4);
        assert_eq!(first_nonvanishing_order(&ls).unwrap(), Verdict::AllVanish);
    }

    #[test]
    fn longitude_file_errors() {
        assert_eq!(parse_longitudes("1 : x2\n1 : x3\n", 3).unwrap_err().line, 2);
        assert!(parse_longitudes("4 : x2\n", 3).is_err());
        assert!(parse_longitudes("1 : x5\n", 3).is_err());
    }
}
