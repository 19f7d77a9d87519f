//! Minimal triangulations.
//!
//! A triangulation is produced by the elimination game along a vertex order
//! and then thinned: fill edges are dropped one at a time, in lexicographic
//! order and over repeated passes, while the graph stays chordal. When no
//! single fill edge can be dropped the triangulation is minimal.
//!
//! Dropping an edge `ab` from a chordal graph keeps it chordal exactly when the
//! common neighbors of `a` and `b` form a clique, so each attempt is a local
//! test rather than a full chordality check.

use crate::chordal::is_chordal;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// A chordal supergraph `(V, E ∪ F)` of a base graph with subset-minimal fill `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    pub base: Graph,
    /// Fill edges `(a, b)` with `a < b`, sorted.
    pub fill: Vec<(usize, usize)>,
    pub filled: Graph,
}

impl Triangulation {
    pub fn fill_at(&self, v: usize) -> usize {
        self.fill.iter().filter(|&&(a, b)| a == v || b == v).count()
    }
}

/// A minimal triangulation obtained by eliminating vertices along `order`
/// and thinning the fill.
pub fn minimal_triangulation(g: &Graph, order: &[usize]) -> Result<Triangulation> {
    check_permutation(g.n(), order)?;
    Ok(triangulate(g, order, &[]))
}

/// A minimal triangulation in which no fill edge touches `u`.
///
/// Eliminates along `(A, u, X)` with `X = N(u)` and `A = V \ N[u]`. Since `u`
/// has no neighbor in `A`, no elimination step ever joins `u` to anything, and
/// thinning only removes edges.
pub fn minimal_triangulation_avoiding(g: &Graph, u: usize) -> Triangulation {
    triangulate(g, &avoiding_order(g, u), &[])
}

pub(crate) fn avoiding_order(g: &Graph, u: usize) -> Vec<usize> {
    assert!(u < g.n(), "vertex {u} out of range");
    let mut order: Vec<usize> = g
        .vertices()
        .filter(|&v| v != u && !g.has_edge(u, v))
        .collect();
    order.push(u);
    order.extend_from_slice(g.neighbors(u));
    order
}

/// Same as [`minimal_triangulation_avoiding`], but first adds the fill edges of
/// `seed` that have both ends in `A = V \ N[u]`, reusing a shared triangulation
/// for the part of the graph away from `u`.
pub(crate) fn minimal_triangulation_avoiding_seeded(g: &Graph, u: usize, seed: &Triangulation) -> Triangulation {
    let away = g.closed_neighborhood(u).complement();
    let prefill: Vec<(usize, usize)> = seed
        .fill
        .iter()
        .copied()
        .filter(|&(a, b)| away.contains(a) && away.contains(b))
        .collect();
    triangulate(g, &avoiding_order(g, u), &prefill)
}

fn check_permutation(n: usize, order: &[usize]) -> Result<()> {
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut seen = VertexSet::new(n);
    for &v in order {
        if v >= n || !seen.insert(v) {
            return Err(Error::NotAPermutation);
        }
    }
    Ok(())
}

fn triangulate(g: &Graph, order: &[usize], prefill: &[(usize, usize)]) -> Triangulation {
    let n = g.n();
    let mut rows = g.adjacency_rows();
    for &(a, b) in prefill {
        rows[a].insert(b);
        rows[b].insert(a);
    }

    // Elimination game.
    let mut eliminated = VertexSet::new(n);
    for &v in order {
        eliminated.insert(v);
        let mut later = rows[v].clone();
        later.difference_with(&eliminated);
        let later = later.to_vec();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                rows[a].insert(b);
                rows[b].insert(a);
            }
        }
    }

    let mut fill: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| rows[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
        .filter(|&(a, b)| !g.has_edge(a, b))
        .collect();

    // Thinning passes until nothing more can be removed.
    loop {
        let before = fill.len();
        fill.retain(|&(a, b)| {
            if removable(&rows, a, b) {
                rows[a].remove(b);
                rows[b].remove(a);
                false
            } else {
                true
            }
        });
        if fill.len() == before {
            break;
        }
    }

    Triangulation {
        base: g.clone(),
        filled: Graph::from_rows(&rows),
        fill,
    }
}

/// `ab` can leave the chordal graph `rows` iff `N(a) ∩ N(b)` is a clique.
fn removable(rows: &[VertexSet], a: usize, b: usize) -> bool {
    let mut common = rows[a].clone();
    common.intersect_with(&rows[b]);
    let common = common.to_vec();
    common
        .iter()
        .enumerate()
        .all(|(i, &c)| common[i + 1..].iter().all(|&d| rows[c].contains(d)))
}

/// Checks both triangulation invariants from scratch: the filled graph is
/// chordal, and removing any single fill edge destroys chordality.
pub fn is_minimal_triangulation(g: &Graph, t: &Triangulation) -> bool {
    if &t.base != g || t.filled.n() != g.n() {
        return false;
    }
    let mut expected = g.clone();
    for &(a, b) in &t.fill {
        if a >= g.n() || b >= g.n() || g.has_edge(a, b) {
            return false;
        }
        match expected.add_edge(a, b) {
            Ok((h, true)) => expected = h,
            _ => return false,
        }
    }
    if expected != t.filled || !is_chordal(&t.filled) {
        return false;
    }
    t.fill
        .iter()
        .all(|&f| !is_chordal(&t.filled.remove_edges(&[f])))
}

/// Vertices whose neighborhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    VertexSet::from_iter(g.n(), g.vertices().filter(|&v| g.is_clique(g.neighbors(v))))
}
