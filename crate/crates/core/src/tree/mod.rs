//! Decorated unitrivalent trees and their formal sums.
//!
//! A tree is stored rooted at one of its leaves. Every edge carries a group
//! element read in the direction pointing toward the root leaf, so the
//! orientation relation is built into the representation. The canonical
//! rooting is the least one under the derived ordering, which makes equality
//! of [`DecoratedTree`] values the same thing as isomorphism of trees
//! respecting labels, cyclic orders and decorations.

mod lambda;
mod parse;
mod sum;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::group::{GroupElement, GroupKind};

pub use lambda::{basis_indices, lambda_rank, normalize_lambda, BasisIndex, LambdaVector};
pub use parse::{parse_forest, parse_tree, parse_tree_graph, parse_tree_sum};
pub use sum::{
    forest_to_sum, op_delete, op_parallel, op_reverse, op_sum, IntersectionForest, TreeContext,
    TreeSum,
};

pub type Label = u32;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("NotATree: {0}")]
    NotATree(String),
    #[error("BadValence: vertex {0} has valence {1}")]
    BadValence(usize, usize),
    #[error("LabelOutOfRange: label {0} not in 1..={1}")]
    LabelOutOfRange(Label, Label),
    #[error("UnreducedWord: decoration {0} is not freely reduced")]
    UnreducedWord(String),
    #[error("RepeatingTree: {0} has a repeated label")]
    RepeatingTree(String),
    #[error("ContextMismatch: {0}")]
    ContextMismatch(String),
    #[error("EqualLabels: cannot merge label {0} into itself")]
    EqualLabels(Label),
}

impl TreeError {
    pub fn name(&self) -> &'static str {
        match self {
            TreeError::NotATree(_) => "NotATree",
            TreeError::BadValence(..) => "BadValence",
            TreeError::LabelOutOfRange(..) => "LabelOutOfRange",
            TreeError::UnreducedWord(_) => "UnreducedWord",
            TreeError::RepeatingTree(_) => "RepeatingTree",
            TreeError::ContextMismatch(_) => "ContextMismatch",
            TreeError::EqualLabels(_) => "EqualLabels",
        }
    }
}

/// A subtree hanging below an edge. `deco` is the element on the edge above
/// the node, read from the node toward the root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Leaf { label: Label, deco: GroupElement },
    Branch { left: Box<Node>, right: Box<Node>, deco: GroupElement },
}

impl Node {
    pub fn leaf(label: Label, deco: GroupElement) -> Node {
        Node::Leaf { label, deco }
    }

    /// A trivalent vertex whose cyclic order is (left, right, edge above).
    pub fn branch(left: Node, right: Node, deco: GroupElement) -> Node {
        Node::Branch { left: Box::new(left), right: Box::new(right), deco }
    }

    pub fn deco(&self) -> &GroupElement {
        match self {
            Node::Leaf { deco, .. } | Node::Branch { deco, .. } => deco,
        }
    }

    pub fn with_deco(self, d: GroupElement) -> Node {
        match self {
            Node::Leaf { label, .. } => Node::Leaf { label, deco: d },
            Node::Branch { left, right, .. } => Node::Branch { left, right, deco: d },
        }
    }

    pub fn labels(&self, out: &mut Vec<Label>) {
        match self {
            Node::Leaf { label, .. } => out.push(*label),
            Node::Branch { left, right, .. } => {
                left.labels(out);
                right.labels(out);
            }
        }
    }

    pub fn contains(&self, l: Label) -> bool {
        match self {
            Node::Leaf { label, .. } => *label == l,
            Node::Branch { left, right, .. } => left.contains(l) || right.contains(l),
        }
    }

    fn map_labels(&self, f: &impl Fn(Label) -> Label) -> Node {
        match self {
            Node::Leaf { label, deco } => Node::leaf(f(*label), deco.clone()),
            Node::Branch { left, right, deco } => {
                Node::branch(left.map_labels(f), right.map_labels(f), deco.clone())
            }
        }
    }

    fn set_labels(&self, it: &mut impl Iterator<Item = Label>) -> Node {
        match self {
            Node::Leaf { deco, .. } => Node::leaf(it.next().expect("enough labels"), deco.clone()),
            Node::Branch { left, right, deco } => {
                let l = left.set_labels(it);
                let r = right.set_labels(it);
                Node::branch(l, r, deco.clone())
            }
        }
    }

    fn write_graph(&self, g: &mut TreeGraph) -> usize {
        match self {
            Node::Leaf { label, .. } => {
                g.vertices.push(Vertex::Leaf(*label));
                g.vertices.len() - 1
            }
            Node::Branch { left, right, .. } => {
                let v = g.vertices.len();
                g.vertices.push(Vertex::Internal(Vec::new()));
                for child in [left, right] {
                    let c = child.write_graph(g);
                    g.edges.push(Edge { tail: c, head: v, deco: child.deco().clone() });
                    let e = g.edges.len() - 1;
                    g.attach(v, e);
                    g.attach(c, e);
                }
                v
            }
        }
    }
}

/// A tree in canonical rooted form: the leaf labeled `root` is joined by one
/// edge to `body`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedTree {
    root: Label,
    body: Node,
}

impl DecoratedTree {
    /// Builds the tree with root leaf `root` attached to `body`, then
    /// canonicalizes the rooting.
    pub fn rooted(root: Label, body: Node) -> DecoratedTree {
        let g = DecoratedTree { root, body }.to_graph();
        canonical(&g)
    }

    /// Validates a raw graph against the label bound and returns its
    /// canonical form.
    pub fn from_graph(g: &TreeGraph, m: Label) -> Result<DecoratedTree, TreeError> {
        validate_tree(g, m)?;
        Ok(canonical(g))
    }

    pub fn root(&self) -> Label {
        self.root
    }

    pub fn body(&self) -> &Node {
        &self.body
    }

    /// Number of trivalent vertices.
    pub fn order(&self) -> usize {
        self.leaf_count() - 2
    }

    pub fn leaf_count(&self) -> usize {
        self.labels().len()
    }

    /// All leaf labels, root first, the rest in left-to-right order.
    pub fn labels(&self) -> Vec<Label> {
        let mut v = vec![self.root];
        self.body.labels(&mut v);
        v
    }

    pub fn count_label(&self, l: Label) -> usize {
        self.labels().iter().filter(|&&x| x == l).count()
    }

    pub fn is_non_repeating(&self) -> bool {
        let ls = self.labels();
        ls.iter().collect::<BTreeSet<_>>().len() == ls.len()
    }

    pub fn max_label(&self) -> Label {
        self.labels().into_iter().max().unwrap_or(0)
    }

    pub fn kind_fits(&self, kind: GroupKind) -> bool {
        self.to_graph().edges.iter().all(|e| e.deco.fits(kind))
    }

    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> DecoratedTree {
        DecoratedTree::rooted(f(self.root), self.body.map_labels(&f))
    }

    /// Replaces the leaf labels, given in the order of [`DecoratedTree::labels`].
    pub fn with_labels(&self, labels: &[Label]) -> DecoratedTree {
        assert_eq!(labels.len(), self.leaf_count(), "label count");
        let mut it = labels[1..].iter().copied();
        DecoratedTree::rooted(labels[0], self.body.set_labels(&mut it))
    }

    /// The tree rooted at its first leaf labeled `l`, as (root, body), if any.
    pub fn rooted_at_label(&self, l: Label) -> Option<Node> {
        let g = self.to_graph();
        let v = g.vertices.iter().position(|v| *v == Vertex::Leaf(l))?;
        Some(rooted_at(&g, v).body)
    }

    pub fn to_graph(&self) -> TreeGraph {
        let mut g = TreeGraph::default();
        g.vertices.push(Vertex::Leaf(self.root));
        let b = self.body.write_graph(&mut g);
        g.edges.push(Edge { tail: b, head: 0, deco: self.body.deco().clone() });
        let e = g.edges.len() - 1;
        g.attach(b, e);
        g.attach(0, e);
        g
    }
}

impl fmt::Display for DecoratedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.root, NodeDisplay(&self.body))
    }
}

struct NodeDisplay<'a>(&'a Node);

impl fmt::Display for NodeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Node::Leaf { label, .. } => write!(f, "{label}")?,
            Node::Branch { left, right, .. } => {
                write!(f, "({},{})", NodeDisplay(left), NodeDisplay(right))?
            }
        }
        let d = self.0.deco();
        if !d.is_identity() {
            write!(f, "[{d}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Vertex {
    Leaf(Label),
    /// Incident edges in cyclic order.
    Internal(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    /// Read in the direction tail to head.
    pub deco: GroupElement,
}

impl Edge {
    fn other(&self, v: usize) -> usize {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }

    /// The decoration read leaving `v`.
    fn deco_from(&self, v: usize) -> GroupElement {
        if self.tail == v {
            self.deco.clone()
        } else {
            self.deco.inverse()
        }
    }
}

/// An unrooted tree as plain graph data. Nothing is checked until
/// [`validate_tree`] runs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl TreeGraph {
    fn attach(&mut self, v: usize, e: usize) {
        if let Vertex::Internal(cyc) = &mut self.vertices[v] {
            cyc.push(e);
        }
    }

    fn incident(&self, v: usize) -> Vec<usize> {
        match &self.vertices[v] {
            Vertex::Internal(cyc) => cyc.clone(),
            Vertex::Leaf(_) => self
                .edges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.tail == v || e.head == v)
                .map(|(i, _)| i)
                .collect(),
        }
    }
}

/// Checks that `g` is a unitrivalent tree with labels in `1..=m` and reduced
/// decorations.
pub fn validate_tree(g: &TreeGraph, m: Label) -> Result<(), TreeError> {
    let nv = g.vertices.len();
    for e in &g.edges {
        if e.tail >= nv || e.head >= nv {
            return Err(TreeError::NotATree("edge endpoint out of range".into()));
        }
        if e.tail == e.head {
            return Err(TreeError::NotATree("loop edge".into()));
        }
    }
    let mut valence = vec![0usize; nv];
    let mut seen = vec![Vec::new(); nv];
    for (i, e) in g.edges.iter().enumerate() {
        valence[e.tail] += 1;
        valence[e.head] += 1;
        seen[e.tail].push(i);
        seen[e.head].push(i);
    }
    for (v, vert) in g.vertices.iter().enumerate() {
        match vert {
            Vertex::Leaf(l) => {
                if valence[v] != 1 {
                    return Err(TreeError::BadValence(v, valence[v]));
                }
                if *l == 0 || *l > m {
                    return Err(TreeError::LabelOutOfRange(*l, m));
                }
            }
            Vertex::Internal(cyc) => {
                if valence[v] != 3 {
                    return Err(TreeError::BadValence(v, valence[v]));
                }
                let mut a = cyc.clone();
                a.sort_unstable();
                seen[v].sort_unstable();
                if a != seen[v] {
                    return Err(TreeError::NotATree(format!(
                        "cyclic order at vertex {v} does not list its incident edges"
                    )));
                }
            }
        }
    }
    if nv < 2 || g.edges.len() != nv - 1 {
        return Err(TreeError::NotATree(format!(
            "{nv} vertices and {} edges",
            g.edges.len()
        )));
    }
    let mut reached = vec![false; nv];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(v) = stack.pop() {
        for &e in &seen[v] {
            let w = g.edges[e].other(v);
            if !reached[w] {
                reached[w] = true;
                stack.push(w);
            }
        }
    }
    if reached.iter().any(|r| !r) {
        return Err(TreeError::NotATree("graph is disconnected".into()));
    }
    for e in &g.edges {
        if !e.deco.is_reduced() {
            return Err(TreeError::UnreducedWord(format!("{:?}", e.deco)));
        }
    }
    Ok(())
}

fn build(g: &TreeGraph, v: usize, via: usize) -> Node {
    let up = g.edges[via].deco_from(v);
    match &g.vertices[v] {
        Vertex::Leaf(l) => Node::leaf(*l, up),
        Vertex::Internal(cyc) => {
            let k = cyc.iter().position(|&e| e == via).expect("edge incident to vertex");
            let p = cyc[(k + 1) % 3];
            let q = cyc[(k + 2) % 3];
            let left = build(g, g.edges[p].other(v), p);
            let right = build(g, g.edges[q].other(v), q);
            Node::branch(left, right, up)
        }
    }
}

fn rooted_at(g: &TreeGraph, leaf: usize) -> DecoratedTree {
    let Vertex::Leaf(root) = g.vertices[leaf] else {
        unreachable!("rooting at an internal vertex")
    };
    let e = g.incident(leaf)[0];
    DecoratedTree { root, body: build(g, g.edges[e].other(leaf), e) }
}

/// The least rooting of a valid tree graph.
fn canonical(g: &TreeGraph) -> DecoratedTree {
    let min = g
        .vertices
        .iter()
        .filter_map(|v| match v {
            Vertex::Leaf(l) => Some(*l),
            Vertex::Internal(_) => None,
        })
        .min()
        .expect("tree has leaves");
    g.vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| **v == Vertex::Leaf(min))
        .map(|(i, _)| rooted_at(g, i))
        .min()
        .expect("tree has leaves")
}
