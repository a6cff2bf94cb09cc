//! Canonical coordinates in the non-repeating tree groups.
//!
//! Decorations are pushed to the leaves: the element on a leaf edge becomes
//! the product of all decorations on the path from that leaf to the
//! minimal-label root, and every other edge becomes trivial. The undecorated
//! shape is then rewritten by antisymmetry and IHX into simple trees
//! `(min,(s1,(s2,...,(sn,max))))`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use super::{DecoratedTree, Label, Node, TreeContext, TreeError, TreeSum};
use crate::group::{GroupElement, GroupRingElement};
use crate::linear::add_coeff;

/// A simple tree: its sorted label set and the order of the labels strictly
/// between its minimal and maximal ones along the spine.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    pub labels: Vec<Label>,
    pub middle: Vec<Label>,
}

impl BasisIndex {
    pub fn min(&self) -> Label {
        self.labels[0]
    }

    pub fn max(&self) -> Label {
        *self.labels.last().expect("basis labels are nonempty")
    }

    /// The simple tree with the given leaf decorations, listed for the
    /// non-minimal labels in increasing order.
    pub fn tree(&self, decos: &[GroupElement]) -> DecoratedTree {
        let deco = |l: Label| {
            let p = self.labels[1..].iter().position(|&x| x == l).expect("label in basis");
            decos[p].clone()
        };
        let id = GroupElement::identity_like(&decos[0]);
        let spine = self.middle.iter().rev().fold(Node::leaf(self.max(), deco(self.max())), |acc, &s| {
            Node::branch(Node::leaf(s, deco(s)), acc, id.clone())
        });
        DecoratedTree::rooted(self.min(), spine)
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},", self.min())?;
        for s in &self.middle {
            write!(f, "({s},")?;
        }
        write!(f, "{}{})", self.max(), ")".repeat(self.middle.len()))
    }
}

/// All basis indices for order `n` trees on labels `1..=m`, in increasing
/// order.
pub fn basis_indices(n: usize, m: Label) -> Vec<BasisIndex> {
    let mut out = Vec::new();
    for labels in (1..=m).combinations(n + 2) {
        let inner = &labels[1..labels.len() - 1];
        for middle in inner.iter().copied().permutations(n) {
            out.push(BasisIndex { labels: labels.clone(), middle });
        }
    }
    out.sort();
    out
}

/// `C(m, n+2)·n!`, the number of simple trees.
pub fn lambda_rank(n: usize, m: Label) -> u128 {
    let m = m as u128;
    let k = n as u128 + 2;
    if k > m {
        return 0;
    }
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * (m - i) / (i + 1);
    }
    (1..=n as u128).fold(c, |acc, i| acc * i)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaVector {
    ctx: TreeContext,
    coords: BTreeMap<BasisIndex, GroupRingElement>,
}

impl LambdaVector {
    pub fn zero(ctx: TreeContext) -> Self {
        LambdaVector { ctx, coords: BTreeMap::new() }
    }

    /// The basis element with all decorations trivial.
    pub fn basis(ctx: TreeContext, idx: BasisIndex) -> Self {
        let e = GroupElement::identity(ctx.kind);
        let mut v = Self::zero(ctx);
        v.add_coeff(idx.clone(), GroupRingElement::monomial(vec![e; idx.labels.len() - 1], 1));
        v
    }

    pub fn ctx(&self) -> TreeContext {
        self.ctx
    }

    pub fn coords(&self) -> &BTreeMap<BasisIndex, GroupRingElement> {
        &self.coords
    }

    pub fn coefficient(&self, idx: &BasisIndex) -> GroupRingElement {
        self.coords.get(idx).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add_coeff(&mut self, idx: BasisIndex, c: GroupRingElement) {
        let slot = self.coords.entry(idx.clone()).or_default();
        slot.add_assign(&c);
        if slot.is_zero() {
            self.coords.remove(&idx);
        }
    }

    pub fn add(&self, other: &LambdaVector) -> LambdaVector {
        let mut v = self.clone();
        for (idx, c) in &other.coords {
            v.add_coeff(idx.clone(), c.clone());
        }
        v
    }

    pub fn scaled(&self, k: i64) -> LambdaVector {
        let mut v = Self::zero(self.ctx);
        for (idx, c) in &self.coords {
            v.add_coeff(idx.clone(), c.scaled(k));
        }
        v
    }

    /// The combination of decorated simple trees these coordinates stand for.
    pub fn to_tree_sum(&self) -> TreeSum {
        let mut s = TreeSum::zero(self.ctx);
        for (idx, c) in &self.coords {
            for (decos, k) in c.iter() {
                s.add_tree(idx.tree(decos), k).expect("basis trees fit their context");
            }
        }
        s
    }
}

impl fmt::Display for LambdaVector {
    /// One line per basis tree: the coefficient (an integer when decorations
    /// are trivial), then the tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, c) in &self.coords {
            if self.ctx.kind == crate::group::GroupKind::Trivial {
                let k: i64 = c.iter().map(|(_, k)| k).sum();
                writeln!(f, "{k} {idx}")?;
            } else {
                writeln!(f, "[{c}] {idx}")?;
            }
        }
        Ok(())
    }
}

/// An undecorated tree body.
#[derive(Clone)]
enum Shape {
    Leaf(Label),
    Br(Box<Shape>, Box<Shape>),
}

impl Shape {
    fn contains(&self, l: Label) -> bool {
        match self {
            Shape::Leaf(x) => *x == l,
            Shape::Br(a, b) => a.contains(l) || b.contains(l),
        }
    }
}

fn push_down(n: &Node, above: &GroupElement, hol: &mut BTreeMap<Label, GroupElement>) -> Shape {
    let here = n.deco().mul(above);
    match n {
        Node::Leaf { label, .. } => {
            hol.insert(*label, here);
            Shape::Leaf(*label)
        }
        Node::Branch { left, right, .. } => Shape::Br(
            Box::new(push_down(left, &here, hol)),
            Box::new(push_down(right, &here, hol)),
        ),
    }
}

type Words = BTreeMap<Vec<Label>, i64>;

/// Coordinates of a bracket shape containing `max` on the spine basis.
fn reduce(s: &Shape, max: Label) -> Words {
    match s {
        Shape::Leaf(_) => BTreeMap::from([(Vec::new(), 1)]),
        Shape::Br(p, q) if p.contains(max) => {
            reduce(&Shape::Br(q.clone(), p.clone()), max)
                .into_iter()
                .map(|(w, k)| (w, -k))
                .collect()
        }
        Shape::Br(p, q) => insert(p, &reduce(q, max)),
    }
}

/// Applies `ad(P)` to a combination of spine words: `[P, Y]`.
fn insert(p: &Shape, s: &Words) -> Words {
    match p {
        Shape::Leaf(a) => s
            .iter()
            .map(|(w, &k)| {
                let mut v = Vec::with_capacity(w.len() + 1);
                v.push(*a);
                v.extend_from_slice(w);
                (v, k)
            })
            .collect(),
        Shape::Br(p1, p2) => {
            let mut out = insert(p1, &insert(p2, s));
            for (w, k) in insert(p2, &insert(p1, s)) {
                add_coeff(&mut out, w, -k);
            }
            out
        }
    }
}

fn normalize_tree(t: &DecoratedTree, out: &mut LambdaVector, k: i64) {
    let kind = out.ctx.kind;
    let mut hol = BTreeMap::new();
    let shape = push_down(t.body(), &GroupElement::identity(kind), &mut hol);
    let labels: Vec<Label> = t.labels().into_iter().sorted().collect();
    let max = *labels.last().expect("trees have leaves");
    let decos: Vec<GroupElement> = labels[1..].iter().map(|l| hol[l].clone()).collect();
    for (middle, c) in reduce(&shape, max) {
        let idx = BasisIndex { labels: labels.clone(), middle };
        out.add_coeff(idx, GroupRingElement::monomial(decos.clone(), k * c));
    }
}

/// Canonical coordinates of a sum of non-repeating trees.
pub fn normalize_lambda(s: &TreeSum) -> Result<LambdaVector, TreeError> {
    let mut v = LambdaVector::zero(s.ctx());
    for (t, k) in s.iter() {
        if !t.is_non_repeating() {
            return Err(TreeError::RepeatingTree(t.to_string()));
        }
        normalize_tree(t, &mut v, k);
    }
    Ok(v)
}
