//! Independent oracles and random generators shared by the integration
//! tests. Nothing here calls the library's normalization, Magnus, lattice
//! or exploration code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;
use nonrep::tree::{DecoratedTree, Label, Node, TreeContext, TreeSum};
use nonrep::{GroupElement, GroupKind};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Relation lattice oracle for trivial decorations.

/// A planar rooted binary tree: the body of a tree rooted at a leaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pb {
    L(Label),
    B(Box<Pb>, Box<Pb>),
}

fn pb(a: Pb, b: Pb) -> Pb {
    Pb::B(Box::new(a), Box::new(b))
}

/// Every planar binary tree whose leaves are exactly `labels`.
fn planar(labels: &[Label]) -> Vec<Pb> {
    if labels.len() == 1 {
        return vec![Pb::L(labels[0])];
    }
    let mut out = Vec::new();
    let n = labels.len();
    for mask in 1..(1u32 << n) - 1 {
        let (l, r): (Vec<Label>, Vec<Label>) = labels
            .iter()
            .enumerate()
            .partition_map(|(i, &x)| if mask >> i & 1 == 1 { itertools::Either::Left(x) } else { itertools::Either::Right(x) });
        for a in planar(&l) {
            for b in planar(&r) {
                out.push(pb(a.clone(), b));
            }
        }
    }
    out
}

/// A tree string in the `(A,B)` grammar with trivial decorations, rooted
/// at its least label as `(root, body)`.
pub fn oracle_root(s: &str) -> (Label, Pb) {
    // Undirected graph with cyclic neighbour lists.
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut leaf: HashMap<usize, Label> = HashMap::new();
    let bytes: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    fn sub(b: &[char], i: &mut usize, adj: &mut Vec<Vec<usize>>, leaf: &mut HashMap<usize, Label>) -> usize {
        if b[*i] == '(' {
            *i += 1;
            let p = sub(b, i, adj, leaf);
            assert_eq!(b[*i], ',');
            *i += 1;
            let q = sub(b, i, adj, leaf);
            assert_eq!(b[*i], ')');
            *i += 1;
            let v = adj.len();
            adj.push(vec![p, q]);
            adj[p].push(v);
            adj[q].push(v);
            v
        } else {
            let start = *i;
            while b[*i].is_ascii_digit() {
                *i += 1;
            }
            let l: Label = b[start..*i].iter().collect::<String>().parse().unwrap();
            let v = adj.len();
            adj.push(vec![]);
            leaf.insert(v, l);
            v
        }
    }
    let mut i = 1;
    let a = sub(&bytes, &mut i, &mut adj, &mut leaf);
    i += 1;
    let b = sub(&bytes, &mut i, &mut adj, &mut leaf);
    adj[a].push(b);
    adj[b].push(a);
    let (&rv, &root) = leaf.iter().min_by_key(|(_, &l)| l).unwrap();
    fn walk(v: usize, from: usize, adj: &[Vec<usize>], leaf: &HashMap<usize, Label>) -> Pb {
        if let Some(&l) = leaf.get(&v) {
            return Pb::L(l);
        }
        let k = adj[v].iter().position(|&u| u == from).unwrap();
        let p = adj[v][(k + 1) % 3];
        let q = adj[v][(k + 2) % 3];
        pb(walk(p, v, adj, leaf), walk(q, v, adj, leaf))
    }
    (root, walk(adj[rv][0], rv, &adj, &leaf))
}

fn flip_at(t: &Pb, path: &mut dyn Iterator<Item = bool>) -> Pb {
    match (t, path.next()) {
        (Pb::B(a, b), None) => pb((**b).clone(), (**a).clone()),
        (Pb::B(a, b), Some(false)) => pb(flip_at(a, path), (**b).clone()),
        (Pb::B(a, b), Some(true)) => pb((**a).clone(), flip_at(b, path)),
        (Pb::L(_), _) => unreachable!(),
    }
}

fn internal_paths(t: &Pb, here: Vec<bool>, out: &mut Vec<Vec<bool>>) {
    if let Pb::B(a, b) = t {
        out.push(here.clone());
        let mut l = here.clone();
        l.push(false);
        internal_paths(a, l, out);
        let mut r = here;
        r.push(true);
        internal_paths(b, r, out);
    }
}

fn replace_at(t: &Pb, path: &[bool], f: &dyn Fn(&Pb) -> Vec<(Pb, i64)>) -> Vec<(Pb, i64)> {
    match path.split_first() {
        None => f(t),
        Some((&right, rest)) => {
            let Pb::B(a, b) = t else { unreachable!() };
            if right {
                replace_at(b, rest, f).into_iter().map(|(x, k)| (pb((**a).clone(), x), k)).collect()
            } else {
                replace_at(a, rest, f).into_iter().map(|(x, k)| (pb(x, (**b).clone()), k)).collect()
            }
        }
    }
}

/// Generators and relations of the free abelian group on planar trees
/// modulo AS and IHX, for order `n` on labels `1..=m`.
pub struct RelationLattice {
    pub index: BTreeMap<(Label, Pb), usize>,
    pub relations: Vec<BTreeMap<usize, i64>>,
}

impl RelationLattice {
    pub fn new(n: usize, m: Label) -> Self {
        let mut index = BTreeMap::new();
        for set in (1..=m).combinations(n + 2) {
            for body in planar(&set[1..]) {
                let k = index.len();
                index.insert((set[0], body), k);
            }
        }
        let mut relations = Vec::new();
        for (root, t) in index.keys() {
            let mut paths = Vec::new();
            internal_paths(t, Vec::new(), &mut paths);
            for p in &paths {
                // Antisymmetry at one vertex.
                let flipped = flip_at(t, &mut p.iter().copied());
                let mut r = BTreeMap::new();
                *r.entry(index[&(*root, t.clone())]).or_insert(0) += 1;
                *r.entry(index[&(*root, flipped)]).or_insert(0) += 1;
                r.retain(|_, v| *v != 0);
                relations.push(r);
                // IHX on the edge to an internal left child: the Jacobi
                // identity [[a,b],c] = [a,[b,c]] - [b,[a,c]].
                let jac = |x: &Pb| -> Vec<(Pb, i64)> {
                    let Pb::B(l, c) = x else { unreachable!() };
                    let Pb::B(a, b) = &**l else { return vec![] };
                    let (a, b, c) = ((**a).clone(), (**b).clone(), (**c).clone());
                    vec![
                        (x.clone(), 1),
                        (pb(a.clone(), pb(b.clone(), c.clone())), -1),
                        (pb(b, pb(a, c)), 1),
                    ]
                };
                let terms = replace_at(t, p, &jac);
                if !terms.is_empty() {
                    let mut r = BTreeMap::new();
                    for (x, k) in terms {
                        *r.entry(index[&(*root, x)]).or_insert(0) += k;
                    }
                    r.retain(|_, v| *v != 0);
                    relations.push(r);
                }
            }
        }
        RelationLattice { index, relations }
    }

    pub fn generators(&self) -> usize {
        self.index.len()
    }

    /// Free rank of the quotient.
    pub fn free_rank(&self) -> usize {
        self.generators() - modular_rank(&self.relations, self.generators())
    }

    /// The vector of a sum of trees with trivial decorations.
    pub fn vector(&self, s: &TreeSum) -> BTreeMap<usize, i64> {
        let mut v = BTreeMap::new();
        for (t, k) in s.iter() {
            *v.entry(self.index[&oracle_root(&t.to_string())]).or_insert(0) += k;
        }
        v.retain(|_, x| *x != 0);
        v
    }

    /// Whether `a - b` lies in the rational span of the relations. The
    /// quotient is torsion free, so this is the integral coset test.
    pub fn same_coset(&self, a: &TreeSum, b: &TreeSum) -> bool {
        let mut d = self.vector(a);
        for (k, x) in self.vector(b) {
            *d.entry(k).or_insert(0) -= x;
        }
        d.retain(|_, x| *x != 0);
        if d.is_empty() {
            return true;
        }
        let base = modular_rank(&self.relations, self.generators());
        let mut more = self.relations.clone();
        more.push(d);
        modular_rank(&more, self.generators()) == base
    }
}

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn to_fp(x: i64) -> u64 {
    (x as i128).rem_euclid(P as i128) as u64
}

/// Rank over the prime field of order `2^61 - 1`.
pub fn modular_rank(rows: &[BTreeMap<usize, i64>], cols: usize) -> usize {
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; cols];
    let mut rank = 0;
    for r in rows {
        let mut v = vec![0u64; cols];
        for (&c, &x) in r {
            v[c] = to_fp(x);
        }
        for c in 0..cols {
            if v[c] == 0 {
                continue;
            }
            match &pivots[c] {
                Some(p) => {
                    let f = v[c];
                    for j in c..cols {
                        v[j] = (v[j] + P - mulmod(f, p[j])) % P;
                    }
                }
                None => {
                    let inv = powmod(v[c], P - 2);
                    for x in v.iter_mut() {
                        *x = mulmod(*x, inv);
                    }
                    pivots[c] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

pub fn binomial(m: u128, k: u128) -> u128 {
    if k > m {
        return 0;
    }
    (0..k).fold(1, |c, i| c * (m - i) / (i + 1))
}

// ---------------------------------------------------------------------------
// Magnus expansion oracle.

/// Coefficients of the Magnus expansion of a word, up to degree `d`, with
/// letters `±k` standing for `x_k^{±1}`. Built one letter at a time from
/// `x ↦ 1 + X` and `x^{-1} ↦ 1 - X + X² - ...`.
pub fn magnus_oracle(word: &[i32], d: usize) -> BTreeMap<Vec<Label>, i64> {
    let mut acc: BTreeMap<Vec<Label>, i64> = BTreeMap::from([(vec![], 1)]);
    for &l in word {
        let g = l.unsigned_abs();
        let mut next: BTreeMap<Vec<Label>, i64> = BTreeMap::new();
        for (w, &c) in &acc {
            for k in 0..=d - w.len() {
                let coef = if l > 0 {
                    if k > 1 { 0 } else { 1 }
                } else if k % 2 == 0 {
                    1
                } else {
                    -1
                };
                if coef == 0 {
                    continue;
                }
                let mut w2 = w.clone();
                w2.extend(std::iter::repeat_n(g, k));
                *next.entry(w2).or_insert(0) += c * coef;
            }
        }
        next.retain(|_, c| *c != 0);
        acc = next;
    }
    acc
}

// ---------------------------------------------------------------------------
// Lattice oracles.

fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] as i128 * det(&minor)
        })
        .sum()
}

fn gcd128(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd128(b, a % b) }
}

/// Nonzero invariant factors from determinantal divisors: `d_k` is the gcd
/// of the `k×k` minors and the `k`-th factor is `d_k / d_{k-1}`.
pub fn smith_by_minors(a: &[Vec<i64>], cols: usize) -> Vec<i64> {
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=a.len().min(cols) {
        let mut g = 0i128;
        for rs in (0..a.len()).combinations(k) {
            for cs in (0..cols).combinations(k) {
                let m: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| a[r][c]).collect()).collect();
                g = gcd128(g, det(&m));
            }
        }
        if g == 0 {
            break;
        }
        out.push((g / prev) as i64);
        prev = g;
    }
    out
}

/// `{Σ k_j·col_j : |k_j| ≤ b}` by repeated sumsets.
pub fn box_sumset(cols: &[Vec<i64>], b: i64) -> BTreeSet<Vec<i64>> {
    let dim = cols.first().map_or(0, Vec::len);
    let mut s: BTreeSet<Vec<i64>> = BTreeSet::from([vec![0; dim]]);
    for c in cols {
        let mut n = BTreeSet::new();
        for p in &s {
            for k in -b..=b {
                n.insert(p.iter().zip(c).map(|(x, y)| x + k * y).collect());
            }
        }
        s = n;
    }
    s
}

// ---------------------------------------------------------------------------
// Random trees.

pub fn random_element(rng: &mut ChaCha8Rng, kind: GroupKind) -> GroupElement {
    match kind {
        GroupKind::Trivial => GroupElement::Trivial,
        GroupKind::FreeAbelian(k) => GroupElement::abelian((0..k).map(|_| rng.gen_range(-2..=2)).collect()),
        GroupKind::Free(k) => {
            let len = rng.gen_range(0..=3);
            GroupElement::free((0..len).map(|_| {
                let g = rng.gen_range(1..=k as i32);
                if rng.gen_bool(0.5) { g } else { -g }
            }))
        }
    }
}

fn random_body(rng: &mut ChaCha8Rng, labels: &[Label], kind: GroupKind) -> Node {
    if labels.len() == 1 {
        return Node::leaf(labels[0], random_element(rng, kind));
    }
    let cut = rng.gen_range(1..labels.len());
    Node::branch(
        random_body(rng, &labels[..cut], kind),
        random_body(rng, &labels[cut..], kind),
        random_element(rng, kind),
    )
}

/// A random non-repeating tree of order `n` on labels from `1..=m`.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize, m: Label, kind: GroupKind) -> DecoratedTree {
    let mut pool: Vec<Label> = (1..=m).collect();
    pool.shuffle(rng);
    let ls = &pool[..n + 2];
    DecoratedTree::rooted(ls[0], random_body(rng, &ls[1..], kind))
}

pub fn random_sum(rng: &mut ChaCha8Rng, ctx: TreeContext, terms: usize) -> TreeSum {
    let mut s = TreeSum::zero(ctx);
    for _ in 0..terms {
        let t = random_tree(rng, ctx.order, ctx.labels, ctx.kind);
        s.add_tree(t, rng.gen_range(-3..=3)).unwrap();
    }
    s
}

pub const KINDS: [GroupKind; 3] = [GroupKind::Trivial, GroupKind::FreeAbelian(2), GroupKind::Free(2)];

// ---------------------------------------------------------------------------
// Relation instances: pairs of sums that differ by one AS, IHX, OR or HOL
// move.

fn branches(n: &Node, here: Vec<bool>, out: &mut Vec<Vec<bool>>) {
    if let Node::Branch { left, right, .. } = n {
        out.push(here.clone());
        let mut l = here.clone();
        l.push(false);
        branches(left, l, out);
        let mut r = here;
        r.push(true);
        branches(right, r, out);
    }
}

fn rewrite(n: &Node, path: &[bool], f: &dyn Fn(&Node) -> Vec<(Node, i64)>) -> Vec<(Node, i64)> {
    match path.split_first() {
        None => f(n),
        Some((&right, rest)) => {
            let Node::Branch { left, right: r, deco } = n else { unreachable!() };
            if right {
                rewrite(r, rest, f).into_iter().map(|(x, k)| (Node::branch((**left).clone(), x, deco.clone()), k)).collect()
            } else {
                rewrite(left, rest, f).into_iter().map(|(x, k)| (Node::branch(x, (**r).clone(), deco.clone()), k)).collect()
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    As,
    Ihx,
    Or,
    Hol,
}

/// `t` rewritten by one move, as a sum equal to `t` in the quotient.
pub fn apply_move(rng: &mut ChaCha8Rng, t: &DecoratedTree, mv: Move, kind: GroupKind) -> Vec<(DecoratedTree, i64)> {
    let mut paths = Vec::new();
    branches(t.body(), Vec::new(), &mut paths);
    let path = paths.choose(rng).unwrap().clone();
    let root = t.root();
    let wrap = |v: Vec<(Node, i64)>| v.into_iter().map(|(b, k)| (DecoratedTree::rooted(root, b), k)).collect();
    match mv {
        Move::As => wrap(rewrite(t.body(), &path, &|n| {
            let Node::Branch { left, right, deco } = n else { unreachable!() };
            vec![(Node::branch((**right).clone(), (**left).clone(), deco.clone()), -1)]
        })),
        Move::Ihx => {
            // [[a,b],c] = [a,[b,c]] - [b,[a,c]] with a trivial middle edge;
            // antisymmetry first brings an internal child to the left.
            let e = GroupElement::identity(kind);
            let out = rewrite(t.body(), &path, &|n| {
                let Node::Branch { left, right, deco } = n else { unreachable!() };
                let (x, c, sign) = match (&**left, &**right) {
                    (Node::Branch { .. }, _) => (&**left, &**right, 1),
                    (_, Node::Branch { .. }) => (&**right, &**left, -1),
                    _ => return vec![(n.clone(), 1)],
                };
                let Node::Branch { left: a, right: b, deco: mid } = x else { unreachable!() };
                let (a, b) = ((**a).clone(), (**b).clone());
                // Push the middle decoration onto a and b first (holonomy).
                let a = a.clone().with_deco(a.deco().mul(mid));
                let b = b.clone().with_deco(b.deco().mul(mid));
                let bc = Node::branch(b.clone(), c.clone(), e.clone());
                let ac = Node::branch(a.clone(), c.clone(), e.clone());
                vec![
                    (Node::branch(a, bc, deco.clone()), sign),
                    (Node::branch(b, ac, deco.clone()), -sign),
                ]
            });
            wrap(out)
        }
        Move::Or | Move::Hol => {
            let mut g = t.to_graph();
            if mv == Move::Or {
                let k = rng.gen_range(0..g.edges.len());
                let ed = &mut g.edges[k];
                std::mem::swap(&mut ed.tail, &mut ed.head);
                ed.deco = ed.deco.inverse();
            } else {
                let internal: Vec<usize> = g
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| matches!(v, nonrep::tree::Vertex::Internal(_)))
                    .map(|(i, _)| i)
                    .collect();
                let v = *internal.choose(rng).unwrap();
                let h = random_element(rng, kind);
                for ed in &mut g.edges {
                    if ed.head == v {
                        ed.deco = ed.deco.mul(&h);
                    } else if ed.tail == v {
                        ed.deco = h.inverse().mul(&ed.deco);
                    }
                }
            }
            vec![(DecoratedTree::from_graph(&g, Label::MAX).unwrap(), 1)]
        }
    }
}
