//! Formal integer sums of trees and the operations induced by surface
//! modifications: parallel copies, band sums, orientation reversal and
//! deletion.

use std::collections::BTreeMap;
use std::fmt;

use super::{DecoratedTree, Label, TreeError};
use crate::group::GroupKind;
use crate::linear::add_coeff;

/// Order, number of labels, and decoration group shared by the terms of a sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TreeContext {
    pub order: usize,
    pub labels: Label,
    pub kind: GroupKind,
}

impl TreeContext {
    pub fn new(order: usize, labels: Label, kind: GroupKind) -> Self {
        TreeContext { order, labels, kind }
    }

    pub fn check(&self, t: &DecoratedTree) -> Result<(), TreeError> {
        if t.order() != self.order {
            return Err(TreeError::ContextMismatch(format!(
                "{t} has order {}, expected {}",
                t.order(),
                self.order
            )));
        }
        if let Some(&l) = t.labels().iter().find(|&&l| l == 0 || l > self.labels) {
            return Err(TreeError::LabelOutOfRange(l, self.labels));
        }
        if !t.kind_fits(self.kind) {
            return Err(TreeError::ContextMismatch(format!(
                "{t} has decorations outside {}",
                self.kind
            )));
        }
        Ok(())
    }

    fn check_label(&self, i: Label) -> Result<(), TreeError> {
        if i == 0 || i > self.labels {
            Err(TreeError::LabelOutOfRange(i, self.labels))
        } else {
            Ok(())
        }
    }
}

/// The signed trees of the intersection points of a tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForest {
    pub ctx: TreeContext,
    pub entries: Vec<(i64, DecoratedTree)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeSum {
    ctx: TreeContext,
    terms: BTreeMap<DecoratedTree, i64>,
}

impl TreeSum {
    pub fn zero(ctx: TreeContext) -> Self {
        TreeSum { ctx, terms: BTreeMap::new() }
    }

    pub fn from_terms(
        ctx: TreeContext,
        terms: impl IntoIterator<Item = (DecoratedTree, i64)>,
    ) -> Result<Self, TreeError> {
        let mut s = TreeSum::zero(ctx);
        for (t, k) in terms {
            s.add_tree(t, k)?;
        }
        Ok(s)
    }

    pub fn add_tree(&mut self, t: DecoratedTree, k: i64) -> Result<(), TreeError> {
        self.ctx.check(&t)?;
        add_coeff(&mut self.terms, t, k);
        Ok(())
    }

    fn push(&mut self, t: DecoratedTree, k: i64) {
        add_coeff(&mut self.terms, t, k);
    }

    pub fn ctx(&self) -> TreeContext {
        self.ctx
    }

    pub fn coefficient(&self, t: &DecoratedTree) -> i64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DecoratedTree, i64)> {
        self.terms.iter().map(|(t, &k)| (t, k))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TreeSum) -> Result<TreeSum, TreeError> {
        if self.ctx != other.ctx {
            return Err(TreeError::ContextMismatch("adding sums with different contexts".into()));
        }
        let mut s = self.clone();
        for (t, k) in other.iter() {
            s.push(t.clone(), k);
        }
        Ok(s)
    }

    pub fn scaled(&self, k: i64) -> TreeSum {
        let mut s = TreeSum::zero(self.ctx);
        for (t, c) in self.iter() {
            s.push(t.clone(), c * k);
        }
        s
    }

    /// The same terms viewed in another context. Fails if some term does not
    /// fit.
    pub fn with_ctx(&self, ctx: TreeContext) -> Result<TreeSum, TreeError> {
        TreeSum::from_terms(ctx, self.iter().map(|(t, k)| (t.clone(), k)))
    }
}

impl fmt::Display for TreeSum {
    /// One `coefficient tree` line per term, in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, k) in self.iter() {
            writeln!(f, "{k} {t}")?;
        }
        Ok(())
    }
}

/// Sums the signed trees of a forest, merging isomorphic entries.
pub fn forest_to_sum(f: &IntersectionForest) -> Result<TreeSum, TreeError> {
    TreeSum::from_terms(f.ctx, f.entries.iter().map(|(s, t)| (t.clone(), *s)))
}

/// Replaces each `i`-leaf by either `i` or the new label `m+1`, summing over
/// all choices.
pub fn op_parallel(s: &TreeSum, i: Label) -> Result<TreeSum, TreeError> {
    s.ctx.check_label(i)?;
    let new = s.ctx.labels + 1;
    let mut out = TreeSum::zero(TreeContext { labels: new, ..s.ctx });
    for (t, k) in s.iter() {
        let labels = t.labels();
        let spots: Vec<usize> = (0..labels.len()).filter(|&p| labels[p] == i).collect();
        for mask in 0u32..(1 << spots.len()) {
            let mut ls = labels.clone();
            for (b, &p) in spots.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    ls[p] = new;
                }
            }
            out.push(t.with_labels(&ls), k);
        }
    }
    Ok(out)
}

/// Relabels every `i`-leaf as `j`.
pub fn op_sum(s: &TreeSum, i: Label, j: Label) -> Result<TreeSum, TreeError> {
    s.ctx.check_label(i)?;
    s.ctx.check_label(j)?;
    if i == j {
        return Err(TreeError::EqualLabels(i));
    }
    let mut out = TreeSum::zero(s.ctx);
    for (t, k) in s.iter() {
        out.push(t.relabel(|l| if l == i { j } else { l }), k);
    }
    Ok(out)
}

/// Multiplies each term by `(-1)^r` where `r` counts its `i`-leaves.
pub fn op_reverse(s: &TreeSum, i: Label) -> Result<TreeSum, TreeError> {
    s.ctx.check_label(i)?;
    let mut out = TreeSum::zero(s.ctx);
    for (t, k) in s.iter() {
        let sign = if t.count_label(i) % 2 == 0 { 1 } else { -1 };
        out.push(t.clone(), sign * k);
    }
    Ok(out)
}

/// Drops every term with an `i`-leaf.
pub fn op_delete(s: &TreeSum, i: Label) -> Result<TreeSum, TreeError> {
    s.ctx.check_label(i)?;
    let mut out = TreeSum::zero(s.ctx);
    for (t, k) in s.iter().filter(|(t, _)| t.count_label(i) == 0) {
        out.push(t.clone(), k);
    }
    Ok(out)
}
