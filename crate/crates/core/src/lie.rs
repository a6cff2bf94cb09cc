//! The reduced free Lie algebra: brackets with a repeated generator vanish.
//!
//! Normal forms use the right-nested basis `[X_s1,[X_s2,...,[X_sn,X_max]...]]`
//! anchored at the largest generator, which lines up with the simple-tree
//! basis of the tree groups.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::group::{GroupElement, GroupKind};
use crate::linear::add_coeff;
use crate::parse::{content_lines, Cursor, ParseError};
use crate::tree::{
    DecoratedTree, Label, LambdaVector, Node, TreeContext, TreeError, TreeSum,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("MixedDegree: terms of degrees {0} and {1}")]
    MixedDegree(usize, usize),
    #[error("GroupKindUnsupported: eta is defined for the trivial group only, got {0}")]
    GroupKindUnsupported(GroupKind),
    #[error("GeneratorClash: X{0} occurs in the element")]
    GeneratorClash(Label),
    #[error("RepeatingTree: {0}")]
    RepeatingTree(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

impl LieError {
    pub fn name(&self) -> &'static str {
        match self {
            LieError::MixedDegree(..) => "MixedDegree",
            LieError::GroupKindUnsupported(_) => "GroupKindUnsupported",
            LieError::GeneratorClash(_) => "GeneratorClash",
            LieError::RepeatingTree(_) => "RepeatingTree",
            LieError::Tree(e) => e.name(),
        }
    }
}

/// A bracket expression: a full binary tree over generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bracket {
    Gen(Label),
    Br(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    pub fn br(a: Bracket, b: Bracket) -> Bracket {
        Bracket::Br(Box::new(a), Box::new(b))
    }

    /// `[X_w1,[X_w2,...,X_wk]]`.
    pub fn right_nested(word: &[Label]) -> Bracket {
        let (&last, rest) = word.split_last().expect("nonempty word");
        rest.iter()
            .rev()
            .fold(Bracket::Gen(last), |acc, &g| Bracket::br(Bracket::Gen(g), acc))
    }

    pub fn degree(&self) -> usize {
        match self {
            Bracket::Gen(_) => 1,
            Bracket::Br(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn generators(&self, out: &mut Vec<Label>) {
        match self {
            Bracket::Gen(g) => out.push(*g),
            Bracket::Br(a, b) => {
                a.generators(out);
                b.generators(out);
            }
        }
    }

    pub fn contains(&self, g: Label) -> bool {
        match self {
            Bracket::Gen(x) => *x == g,
            Bracket::Br(a, b) => a.contains(g) || b.contains(g),
        }
    }

    pub fn is_square_free(&self) -> bool {
        let mut v = Vec::new();
        self.generators(&mut v);
        v.iter().collect::<BTreeSet<_>>().len() == v.len()
    }

    pub fn max_generator(&self) -> Label {
        let mut v = Vec::new();
        self.generators(&mut v);
        v.into_iter().max().expect("brackets are nonempty")
    }

    /// Forgets the decorations of a tree body.
    pub fn from_node(n: &Node) -> Bracket {
        match n {
            Node::Leaf { label, .. } => Bracket::Gen(*label),
            Node::Branch { left, right, .. } => {
                Bracket::br(Bracket::from_node(left), Bracket::from_node(right))
            }
        }
    }

    /// The tree body with every decoration trivial.
    pub fn to_node(&self, kind: GroupKind) -> Node {
        let e = GroupElement::identity(kind);
        match self {
            Bracket::Gen(g) => Node::leaf(*g, e),
            Bracket::Br(a, b) => Node::branch(a.to_node(kind), b.to_node(kind), e),
        }
    }

    /// The full associative expansion, `[a,b] = ab - ba`.
    pub fn expand(&self) -> BTreeMap<Vec<Label>, i64> {
        match self {
            Bracket::Gen(g) => BTreeMap::from([(vec![*g], 1)]),
            Bracket::Br(a, b) => {
                let (ea, eb) = (a.expand(), b.expand());
                let mut out = BTreeMap::new();
                concat_into(&mut out, &ea, &eb, 1);
                concat_into(&mut out, &eb, &ea, -1);
                out
            }
        }
    }

    /// The part of the associative expansion made of words ending in `last`.
    fn expand_ending(&self, last: Label) -> BTreeMap<Vec<Label>, i64> {
        match self {
            Bracket::Gen(g) if *g == last => BTreeMap::from([(vec![*g], 1)]),
            Bracket::Gen(_) => BTreeMap::new(),
            Bracket::Br(a, b) => {
                let mut out = BTreeMap::new();
                if b.contains(last) {
                    concat_into(&mut out, &a.expand(), &b.expand_ending(last), 1);
                } else if a.contains(last) {
                    concat_into(&mut out, &b.expand(), &a.expand_ending(last), -1);
                }
                out
            }
        }
    }

    pub fn parse(s: &str) -> Result<Bracket, ParseError> {
        let mut c = Cursor::new(s);
        let b = bracket_at(&mut c)?;
        c.skip_ws();
        if !c.at_end() {
            return Err(c.error("trailing input after bracket"));
        }
        Ok(b)
    }
}

fn concat_into(
    out: &mut BTreeMap<Vec<Label>, i64>,
    a: &BTreeMap<Vec<Label>, i64>,
    b: &BTreeMap<Vec<Label>, i64>,
    sign: i64,
) {
    for (u, x) in a {
        for (v, y) in b {
            let mut w = u.clone();
            w.extend_from_slice(v);
            add_coeff(out, w, sign * x * y);
        }
    }
}

fn bracket_at(c: &mut Cursor<'_>) -> Result<Bracket, ParseError> {
    c.skip_ws();
    match c.peek() {
        Some('X') => {
            c.bump();
            let start = c.clone();
            let g = c.uint()?;
            if g == 0 || g > Label::MAX as u64 {
                return Err(start.error("generator index must be positive"));
            }
            Ok(Bracket::Gen(g as Label))
        }
        Some('[') => {
            c.bump();
            let a = bracket_at(c)?;
            c.expect(',')?;
            let b = bracket_at(c)?;
            c.expect(']')?;
            Ok(Bracket::br(a, b))
        }
        Some(ch) => Err(c.error(&format!("expected `X` or `[`, found `{ch}`"))),
        None => Err(c.error("expected a bracket, found end of input")),
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Gen(g) => write!(f, "X{g}"),
            Bracket::Br(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// An integer combination of square-free brackets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieElement {
    terms: BTreeMap<Bracket, i64>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(g: Label) -> Self {
        Self::from_bracket(Bracket::Gen(g), 1)
    }

    pub fn from_bracket(b: Bracket, k: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(b, k);
        e
    }

    /// Adds `k·b`; brackets with a repeated generator are zero and dropped.
    pub fn add_term(&mut self, b: Bracket, k: i64) {
        if b.is_square_free() {
            add_coeff(&mut self.terms, b, k);
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut e = self.clone();
        for (b, k) in other.iter() {
            e.add_term(b.clone(), k);
        }
        e
    }

    pub fn scaled(&self, k: i64) -> LieElement {
        let mut e = Self::zero();
        for (b, c) in self.iter() {
            e.add_term(b.clone(), c * k);
        }
        e
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Bracket, i64)> {
        self.terms.iter().map(|(b, &k)| (b, k))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of the terms; `None` for zero.
    pub fn degree(&self) -> Result<Option<usize>, LieError> {
        let mut d = None;
        for b in self.terms.keys() {
            let bd = b.degree();
            match d {
                None => d = Some(bd),
                Some(x) if x != bd => return Err(LieError::MixedDegree(x, bd)),
                _ => {}
            }
        }
        Ok(d)
    }

    /// `INT expr` lines.
    pub fn parse_sum(text: &str) -> Result<LieElement, ParseError> {
        let mut e = LieElement::zero();
        for (n, line) in content_lines(text) {
            let mut c = Cursor::new(line);
            let k = c.int().map_err(|e| e.at_line(n))?;
            let b = bracket_at(&mut c).map_err(|e| e.at_line(n))?;
            c.skip_ws();
            if !c.at_end() {
                return Err(c.error("trailing input after bracket").at_line(n));
            }
            e.add_term(b, k);
        }
        Ok(e)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_sum(f, self.iter().map(|(b, k)| (b.to_string(), k)))
    }
}

pub(crate) fn write_signed_sum(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, i64)>,
) -> fmt::Result {
    let mut any = false;
    for (s, k) in terms {
        match (any, k < 0) {
            (false, false) => {}
            (false, true) => write!(f, "-")?,
            (true, false) => write!(f, " + ")?,
            (true, true) => write!(f, " - ")?,
        }
        if k.abs() != 1 {
            write!(f, "{}", k.abs())?;
        }
        write!(f, "{s}")?;
        any = true;
    }
    if !any {
        write!(f, "0")?;
    }
    Ok(())
}

/// Bilinear bracket of two elements.
pub fn bracket(a: &LieElement, b: &LieElement) -> LieElement {
    let mut e = LieElement::zero();
    for (x, i) in a.iter() {
        for (y, j) in b.iter() {
            e.add_term(Bracket::br(x.clone(), y.clone()), i * j);
        }
    }
    e
}

/// Coordinates in the right-nested basis, keyed by the full generator word
/// `(s1,...,sn,max)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieNormalForm {
    pub coords: BTreeMap<Vec<Label>, i64>,
}

impl LieNormalForm {
    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// The element `Σ k·[X_s1,[...,X_max]]` these coordinates describe.
    pub fn to_element(&self) -> LieElement {
        let mut e = LieElement::zero();
        for (w, &k) in &self.coords {
            e.add_term(Bracket::right_nested(w), k);
        }
        e
    }
}

impl fmt::Display for LieNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_sum(f, self.coords.iter().map(|(w, &k)| (Bracket::right_nested(w).to_string(), k)))
    }
}

/// Rewrites an element in the right-nested basis.
///
/// The coordinate on `[X_s1,[...,[X_sn,X_max]]]` is the coefficient of the
/// word `s1...sn max` in the associative expansion, since that basis element
/// is the only one whose expansion has a word ending in `max` with those
/// leading letters.
pub fn lie_normalize(a: &LieElement) -> Result<LieNormalForm, LieError> {
    a.degree()?;
    let mut coords = BTreeMap::new();
    for (b, k) in a.iter() {
        for (w, c) in b.expand_ending(b.max_generator()) {
            add_coeff(&mut coords, w, k * c);
        }
    }
    Ok(LieNormalForm { coords })
}

/// Reads each tree containing an `i`-leaf as the bracket seen from that leaf.
pub fn eta(i: Label, s: &TreeSum) -> Result<LieElement, LieError> {
    let kind = s.ctx().kind;
    if kind != GroupKind::Trivial {
        return Err(LieError::GroupKindUnsupported(kind));
    }
    let mut e = LieElement::zero();
    for (t, k) in s.iter() {
        if !t.is_non_repeating() {
            return Err(LieError::RepeatingTree(t.to_string()));
        }
        if let Some(body) = t.rooted_at_label(i) {
            e.add_term(Bracket::from_node(&body), k);
        }
    }
    Ok(e)
}

pub fn eta_lambda(i: Label, v: &LambdaVector) -> Result<LieElement, LieError> {
    eta(i, &v.to_tree_sum())
}

/// Puts an `i`-leaf in place of the root of each bracket.
pub fn eta_left_inverse(i: Label, a: &LieElement, ctx: TreeContext) -> Result<TreeSum, LieError> {
    let mut s = TreeSum::zero(ctx);
    for (b, k) in a.iter() {
        if b.contains(i) {
            return Err(LieError::GeneratorClash(i));
        }
        s.add_tree(DecoratedTree::rooted(i, b.to_node(ctx.kind)), k)?;
    }
    Ok(s)
}
