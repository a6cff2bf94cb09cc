//! The tree grammar.
//!
//! ```text
//! tree  := leaf | "(" tree "," tree ")" deco?
//! leaf  := INT deco?
//! deco  := "[" gword "]"
//! ```
//!
//! A decoration is the element on the edge above its subtree, read toward
//! the rest of the tree. At top level `(A,B)` joins the tops of `A` and `B`
//! by a single edge.

use super::{DecoratedTree, Edge, IntersectionForest, Label, TreeContext, TreeGraph, TreeSum, Vertex};
use crate::group::{parse_gword, GroupElement, GroupKind};
use crate::parse::{content_lines, Cursor, ParseError};
use crate::Error;

fn deco(c: &mut Cursor<'_>, kind: GroupKind) -> Result<GroupElement, ParseError> {
    c.skip_ws();
    if c.peek() != Some('[') {
        return Ok(GroupElement::identity(kind));
    }
    c.bump();
    let g = parse_gword(c, kind)?;
    c.expect(']')?;
    Ok(g)
}

fn link(g: &mut TreeGraph, tail: usize, head: usize, d: GroupElement) {
    g.edges.push(Edge { tail, head, deco: d });
    let e = g.edges.len() - 1;
    g.attach(tail, e);
    g.attach(head, e);
}

/// Parses a subtree, returning its top vertex and the decoration above it.
fn subtree(
    c: &mut Cursor<'_>,
    kind: GroupKind,
    g: &mut TreeGraph,
) -> Result<(usize, GroupElement), ParseError> {
    c.skip_ws();
    match c.peek() {
        Some('(') => {
            c.bump();
            let (l, dl) = subtree(c, kind, g)?;
            c.expect(',')?;
            let (r, dr) = subtree(c, kind, g)?;
            c.expect(')')?;
            let v = g.vertices.len();
            g.vertices.push(Vertex::Internal(Vec::new()));
            link(g, l, v, dl);
            link(g, r, v, dr);
            Ok((v, deco(c, kind)?))
        }
        Some(ch) if ch.is_ascii_digit() => {
            let start = c.clone();
            let l = c.uint()?;
            if l == 0 || l > Label::MAX as u64 {
                return Err(start.error("leaf labels must be positive"));
            }
            g.vertices.push(Vertex::Leaf(l as Label));
            Ok((g.vertices.len() - 1, deco(c, kind)?))
        }
        Some(ch) => Err(c.error(&format!("expected `(` or a leaf label, found `{ch}`"))),
        None => Err(c.error("expected a tree, found end of input")),
    }
}

fn tree_at(c: &mut Cursor<'_>, kind: GroupKind) -> Result<TreeGraph, ParseError> {
    let mut g = TreeGraph::default();
    c.expect('(')?;
    let (a, da) = subtree(c, kind, &mut g)?;
    c.expect(',')?;
    let (b, db) = subtree(c, kind, &mut g)?;
    c.expect(')')?;
    c.skip_ws();
    if c.peek() == Some('[') {
        return Err(c.error("a whole tree takes no decoration"));
    }
    link(&mut g, a, b, da.mul(&db.inverse()));
    Ok(g)
}

pub fn parse_tree_graph(s: &str, kind: GroupKind) -> Result<TreeGraph, ParseError> {
    let mut c = Cursor::new(s);
    let g = tree_at(&mut c, kind)?;
    c.skip_ws();
    if !c.at_end() {
        return Err(c.error("trailing input after tree"));
    }
    Ok(g)
}

/// Parses one tree into canonical form. Labels are only checked to be
/// positive; bounds are checked against a context later.
pub fn parse_tree(s: &str, kind: GroupKind) -> Result<DecoratedTree, ParseError> {
    let g = parse_tree_graph(s, kind)?;
    Ok(DecoratedTree::from_graph(&g, Label::MAX).expect("parsed trees are well formed"))
}

/// Forest file: one `+ tree` or `- tree` per line, `#` comments.
pub fn parse_forest(text: &str, ctx: TreeContext) -> Result<IntersectionForest, ParseError> {
    let mut entries = Vec::new();
    for (n, line) in content_lines(text) {
        let mut c = Cursor::new(line);
        let sign = match c.bump() {
            Some('+') => 1,
            Some('-') => -1,
            _ => return Err(ParseError::new(n, 1, "expected `+` or `-`")),
        };
        let t = tree_line(&mut c, ctx.kind).map_err(|e| e.at_line(n))?;
        entries.push((sign, t));
    }
    Ok(IntersectionForest { ctx, entries })
}

/// TreeSum file: one `INT tree` per line, `#` comments.
pub fn parse_tree_sum(text: &str, ctx: TreeContext) -> Result<TreeSum, Error> {
    let mut terms = Vec::new();
    for (n, line) in content_lines(text) {
        let mut c = Cursor::new(line);
        let k = c.int().map_err(|e| e.at_line(n))?;
        let t = tree_line(&mut c, ctx.kind).map_err(|e| e.at_line(n))?;
        terms.push((t, k));
    }
    Ok(TreeSum::from_terms(ctx, terms)?)
}

fn tree_line(c: &mut Cursor<'_>, kind: GroupKind) -> Result<DecoratedTree, ParseError> {
    c.skip_ws();
    let g = tree_at(c, kind)?;
    c.skip_ws();
    if !c.at_end() {
        return Err(c.error("trailing input after tree"));
    }
    Ok(DecoratedTree::from_graph(&g, Label::MAX).expect("parsed trees are well formed"))
}
