//! Avoidable edges and avoidable induced paths.
//!
//! An edge `xy` is avoidable when every induced `P4` with middle edge `xy`
//! lies on an induced cycle. Removing the common neighbors `B(x, y)` does not
//! change that, and in the resulting graph the edge is avoidable iff it is
//! protected, which takes one excluded-path search per private neighbor of the
//! endpoint with fewer private neighbors.
//!
//! An induced path with at least three vertices reduces to an edge: join its
//! endpoints and delete the closed neighborhood of its interior.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::excluded_path::reaches_all;
use crate::graph::{induced_on, Graph};
use crate::set::VertexSet;

/// The neighbors of an edge `xy` split into common and private parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeNeighborhood {
    pub x: usize,
    pub y: usize,
    /// `N(x) ∩ N(y)`.
    pub common: VertexSet,
    /// `N(x) \ (B ∪ {y})`.
    pub private_x: VertexSet,
    /// `N(y) \ (B ∪ {x})`.
    pub private_y: VertexSet,
}

fn check_edge(g: &Graph, x: usize, y: usize) -> Result<()> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y || !g.has_edge(x, y) {
        return Err(Error::NotAnEdge(x, y));
    }
    Ok(())
}

/// Computes `B(x, y)`, `A_x` and `A_y` in `O(d(x) + d(y))` set operations.
pub fn neighbor_partition(g: &Graph, x: usize, y: usize) -> Result<EdgeNeighborhood> {
    check_edge(g, x, y)?;
    let nx = g.neighborhood(x);
    let ny = g.neighborhood(y);
    let mut common = nx.clone();
    common.intersect_with(&ny);
    let mut private_x = nx;
    private_x.difference_with(&common);
    private_x.remove(y);
    let mut private_y = ny;
    private_y.difference_with(&common);
    private_y.remove(x);
    Ok(EdgeNeighborhood {
        x,
        y,
        common,
        private_x,
        private_y,
    })
}

/// No induced `P4` has `xy` as its middle edge: `A_x` and `A_y` are
/// completely joined (or one of them is empty).
pub fn is_simplicial_edge(g: &Graph, x: usize, y: usize) -> Result<bool> {
    let nb = neighbor_partition(g, x, y)?;
    Ok(private_sides_joined(g, &nb))
}

fn private_sides_joined(g: &Graph, nb: &EdgeNeighborhood) -> bool {
    nb.private_x
        .iter()
        .all(|a| nb.private_y.iter().all(|b| g.has_edge(a, b)))
}

/// Whether the edge `xy` is avoidable.
pub fn is_avoidable_edge(g: &Graph, x: usize, y: usize) -> Result<bool> {
    let nb = neighbor_partition(g, x, y)?;
    if private_sides_joined(g, &nb) {
        return Ok(true);
    }
    // Symmetric in x and y; search from the smaller private side.
    let (small, large) = if nb.private_x.len() <= nb.private_y.len() {
        (&nb.private_x, &nb.private_y)
    } else {
        (&nb.private_y, &nb.private_x)
    };
    // Work in H = G - B and additionally drop x, y and the other vertices of
    // the small side for each search.
    let mut removed = nb.common.clone();
    removed.union_with(small);
    removed.insert(x);
    removed.insert(y);
    Ok(small.iter().all(|a| {
        removed.remove(a);
        let ok = reaches_all(g, a, large, &removed);
        removed.insert(a);
        ok
    }))
}

/// Whether `xy` is protected in `h`: every neighbor of `x` and every neighbor
/// of `y` are joined by a path with no internal vertex in `N[x] ∪ N[y]`.
pub fn is_protected_edge(h: &Graph, x: usize, y: usize) -> Result<bool> {
    check_edge(h, x, y)?;
    let mut closed = h.closed_neighborhood(x);
    closed.union_with(&h.closed_neighborhood(y));
    let ny = h.neighborhood(y);
    Ok(h.neighbors(x).iter().all(|&p| {
        let mut targets = ny.clone();
        targets.remove(p);
        // Internal vertices must avoid N[x] ∪ N[y]; targets are never expanded
        // by the search, so only the non-target part is deleted.
        let mut removed = closed.clone();
        removed.difference_with(&targets);
        removed.remove(p);
        reaches_all(h, p, &targets, &removed)
    }))
}

/// Every avoidable edge `(x, y)`, `x < y`, in lexicographic order.
pub fn list_avoidable_edges(g: &Graph) -> Vec<(usize, usize)> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    edges
        .into_par_iter()
        .filter(|&(x, y)| is_avoidable_edge(g, x, y).expect("listed edges exist"))
        .collect()
}

/// An induced path `v_1 - ... - v_k` with `k >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InducedPath {
    vertices: Vec<usize>,
}

impl InducedPath {
    /// Validates that `vertices` is an induced path of `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        check_induced_path(g, &vertices)?;
        Ok(InducedPath { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    /// Internal vertices, i.e. all but the two endpoints.
    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// Orientation with the smaller endpoint first.
    pub fn canonical(&self) -> InducedPath {
        let mut vertices = self.vertices.clone();
        if vertices[0] > *vertices.last().unwrap() {
            vertices.reverse();
        }
        InducedPath { vertices }
    }

    pub fn reversed(&self) -> InducedPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        InducedPath { vertices }
    }
}

pub(crate) fn check_induced_path(g: &Graph, vs: &[usize]) -> Result<()> {
    if vs.len() < 2 {
        return Err(Error::NotInducedPath("a path needs at least two vertices".into()));
    }
    let mut seen = VertexSet::new(g.n());
    for &v in vs {
        g.check_vertex(v)?;
        if !seen.insert(v) {
            return Err(Error::NotInducedPath(format!("vertex {v} repeats")));
        }
    }
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            let adjacent = g.has_edge(a, b);
            if j == i + 1 && !adjacent {
                return Err(Error::NotInducedPath(format!("{a}-{b} is not an edge")));
            }
            if j > i + 1 && adjacent {
                return Err(Error::NotInducedPath(format!("chord {a}-{b}")));
            }
        }
    }
    Ok(())
}

/// Whether the induced path `p` is avoidable in `g`.
///
/// Two-vertex paths are edges. Longer paths with endpoints `x, y` are tested
/// as the edge `xy` of `G + xy - I`, where `I = N[interior] \ {x, y}`.
pub fn is_avoidable_path(g: &Graph, p: &InducedPath) -> Result<bool> {
    check_induced_path(g, p.vertices())?;
    let (x, y) = p.endpoints();
    if p.len() == 2 {
        return is_avoidable_edge(g, x, y);
    }
    let (h, hx, hy) = reduce_path(g, p);
    is_avoidable_edge(&h, hx, hy)
}

/// `G + xy - I[P]` together with the new ids of `x` and `y`.
fn reduce_path(g: &Graph, p: &InducedPath) -> (Graph, usize, usize) {
    let (x, y) = p.endpoints();
    let mut interior_hood = VertexSet::new(g.n());
    for &v in p.interior() {
        interior_hood.insert(v);
        for &w in g.neighbors(v) {
            interior_hood.insert(w);
        }
    }
    interior_hood.remove(x);
    interior_hood.remove(y);
    let keep: Vec<usize> = g.vertices().filter(|&v| !interior_hood.contains(v)).collect();
    let (sub, ids) = induced_on(g, &keep);
    let hx = ids.binary_search(&x).expect("endpoint kept");
    let hy = ids.binary_search(&y).expect("endpoint kept");
    let (h, added) = sub.add_edge(hx, hy).expect("distinct endpoints");
    assert!(added, "endpoints of an induced path with k >= 3 are non-adjacent");
    (h, hx, hy)
}

/// Limits for the exponential path routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathCaps {
    pub max_k: usize,
    pub max_n: usize,
}

impl Default for PathCaps {
    fn default() -> Self {
        PathCaps { max_k: 6, max_n: 64 }
    }
}

/// All induced paths on `k` vertices, each once, smaller endpoint first.
/// Runs in `O(n^k)`.
pub fn enumerate_induced_paths(g: &Graph, k: usize, caps: PathCaps) -> Result<Vec<InducedPath>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("path length {k} is below 2")));
    }
    if k > caps.max_k {
        return Err(Error::PathLengthExceedsCap { k, cap: caps.max_k });
    }
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(k);
    for s in g.vertices() {
        path.push(s);
        extend_paths(g, k, &mut path, &mut out);
        path.pop();
    }
    out.sort();
    Ok(out)
}

fn extend_paths(g: &Graph, k: usize, path: &mut Vec<usize>, out: &mut Vec<InducedPath>) {
    if path.len() == k {
        if path[0] < path[k - 1] {
            out.push(InducedPath { vertices: path.clone() });
        }
        return;
    }
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if path.contains(&w) {
            continue;
        }
        if path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        path.push(w);
        extend_paths(g, k, path, out);
        path.pop();
    }
}

/// The induced paths that `p` can be shifted to: drop one endpoint and extend
/// the other, so that the union induces a path on `k + 1` vertices. Returned
/// in canonical orientation, sorted.
pub fn shifts(g: &Graph, p: &InducedPath) -> Vec<InducedPath> {
    let vs = p.vertices();
    let k = vs.len();
    let mut out = Vec::new();
    for forward in [true, false] {
        let oriented: Vec<usize> = if forward { vs.to_vec() } else { vs.iter().rev().copied().collect() };
        let last = oriented[k - 1];
        for &w in g.neighbors(last) {
            if oriented.contains(&w) || oriented[..k - 1].iter().any(|&q| g.has_edge(q, w)) {
                continue;
            }
            let mut next = oriented[1..].to_vec();
            next.push(w);
            out.push(InducedPath { vertices: next }.canonical());
        }
    }
    out.sort();
    out.dedup();
    out
}

/// A shortest shift sequence from a path to an avoidable path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSequence {
    pub distance: usize,
    /// Paths from the start to the avoidable end, both included, canonical.
    pub witness: Vec<InducedPath>,
}

/// Breadth-first search over the shift graph, built lazily, from `p` to the
/// nearest avoidable induced path.
pub fn min_shift_distance(g: &Graph, p: &InducedPath, caps: PathCaps) -> Result<ShiftSequence> {
    check_induced_path(g, p.vertices())?;
    if p.len() > caps.max_k {
        return Err(Error::PathLengthExceedsCap { k: p.len(), cap: caps.max_k });
    }
    if g.n() > caps.max_n {
        return Err(Error::GraphTooLarge { n: g.n(), cap: caps.max_n });
    }
    let start = p.canonical();
    let mut parent: HashMap<InducedPath, Option<InducedPath>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if is_avoidable_path(g, &cur)? {
            let mut witness = vec![cur.clone()];
            let mut at = cur;
            while let Some(Some(prev)) = parent.get(&at) {
                witness.push(prev.clone());
                at = prev.clone();
            }
            witness.reverse();
            return Ok(ShiftSequence {
                distance: witness.len() - 1,
                witness,
            });
        }
        for next in shifts(g, &cur) {
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some(cur.clone()));
                queue.push_back(next);
            }
        }
    }
    Err(Error::InvalidParameter("no avoidable path is reachable by shifts".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_graph, cycle_graph, path_graph, random_graph};

    #[test]
    fn partition_of_clique_and_path() {
        let nb = neighbor_partition(&complete_graph(4), 0, 1).unwrap();
        assert_eq!(nb.common.to_vec(), vec![2, 3]);
        assert!(nb.private_x.is_empty() && nb.private_y.is_empty());
        let nb = neighbor_partition(&path_graph(4), 1, 2).unwrap();
        assert!(nb.common.is_empty());
        assert_eq!(nb.private_x.to_vec(), vec![0]);
        assert_eq!(nb.private_y.to_vec(), vec![3]);
        assert_eq!(neighbor_partition(&path_graph(4), 0, 2), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn partition_matches_set_algebra() {
        let g = random_graph(25, 0.3, 4).unwrap();
        for (x, y) in g.edges() {
            let nb = neighbor_partition(&g, x, y).unwrap();
            for v in g.vertices() {
                let (ax, ay) = (g.has_edge(x, v), g.has_edge(y, v));
                assert_eq!(nb.common.contains(v), ax && ay);
                assert_eq!(nb.private_x.contains(v), ax && !ay && v != y);
                assert_eq!(nb.private_y.contains(v), ay && !ax && v != x);
            }
        }
    }

    #[test]
    fn simplicial_edges() {
        assert!(is_simplicial_edge(&complete_graph(5), 1, 3).unwrap());
        assert!(!is_simplicial_edge(&path_graph(4), 1, 2).unwrap());
        assert!(is_simplicial_edge(&path_graph(4), 0, 1).unwrap());
    }

    #[test]
    fn simplicial_edge_matches_p4_scan() {
        for seed in 0..30 {
            let g = random_graph(14, 0.35, seed).unwrap();
            for (x, y) in g.edges() {
                let has_p4 = g.neighbors(x).iter().any(|&a| {
                    a != y
                        && !g.has_edge(a, y)
                        && g.neighbors(y).iter().any(|&b| b != x && !g.has_edge(b, x) && !g.has_edge(a, b))
                });
                assert_eq!(is_simplicial_edge(&g, x, y).unwrap(), !has_p4);
            }
        }
    }

    #[test]
    fn avoidable_edges_on_cycles_and_paths() {
        let c5 = cycle_graph(5);
        assert!(c5.edges().all(|(x, y)| is_avoidable_edge(&c5, x, y).unwrap()));
        let p4 = path_graph(4);
        assert!(!is_avoidable_edge(&p4, 1, 2).unwrap());
        assert!(is_avoidable_edge(&p4, 0, 1).unwrap());
        assert_eq!(list_avoidable_edges(&p4), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn avoidable_edge_is_symmetric() {
        for seed in 0..20 {
            let g = random_graph(16, 0.3, seed).unwrap();
            for (x, y) in g.edges() {
                assert_eq!(is_avoidable_edge(&g, x, y).unwrap(), is_avoidable_edge(&g, y, x).unwrap());
            }
        }
    }

    #[test]
    fn induced_path_validation() {
        let g = cycle_graph(5);
        assert!(InducedPath::new(&g, vec![0, 1, 2, 3]).is_ok());
        assert!(matches!(InducedPath::new(&g, vec![0, 1, 2, 3, 4]), Err(Error::NotInducedPath(_))));
        assert!(matches!(InducedPath::new(&g, vec![0, 2]), Err(Error::NotInducedPath(_))));
        assert!(matches!(InducedPath::new(&g, vec![0]), Err(Error::NotInducedPath(_))));
        assert!(matches!(InducedPath::new(&g, vec![0, 1, 0]), Err(Error::NotInducedPath(_))));
        assert!(InducedPath::new(&g, vec![0, 9]).is_err());
    }

    #[test]
    fn two_vertex_paths_are_edges() {
        let g = random_graph(14, 0.3, 8).unwrap();
        for (x, y) in g.edges() {
            let p = InducedPath::new(&g, vec![x, y]).unwrap();
            assert_eq!(is_avoidable_path(&g, &p).unwrap(), is_avoidable_edge(&g, x, y).unwrap());
        }
    }

    #[test]
    fn middle_of_p5_is_not_avoidable() {
        // a-b-c-d-e: the P3 b-c-d sits inside the P5 itself, and a tree has no
        // induced cycles to close it.
        let g = path_graph(5);
        let p = InducedPath::new(&g, vec![1, 2, 3]).unwrap();
        assert!(!is_avoidable_path(&g, &p).unwrap());
        // On a long cycle every induced path of length below n - 1 closes.
        let c = cycle_graph(7);
        let p = InducedPath::new(&c, vec![1, 2, 3]).unwrap();
        assert!(is_avoidable_path(&c, &p).unwrap());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_induced_paths(&cycle_graph(5), 3, PathCaps::default()).unwrap().len(), 5);
        assert!(enumerate_induced_paths(&complete_graph(4), 3, PathCaps::default()).unwrap().is_empty());
        assert_eq!(
            enumerate_induced_paths(&complete_graph(4), 7, PathCaps::default()),
            Err(Error::PathLengthExceedsCap { k: 7, cap: 6 })
        );
        let g = random_graph(10, 0.3, 2).unwrap();
        let paths = enumerate_induced_paths(&g, 2, PathCaps::default()).unwrap();
        assert_eq!(paths.len(), g.m());
    }

    #[test]
    fn shifts_of_a_path_edge() {
        let g = path_graph(6);
        let p = InducedPath::new(&g, vec![2, 3]).unwrap();
        let s: Vec<Vec<usize>> = shifts(&g, &p).iter().map(|q| q.vertices().to_vec()).collect();
        assert_eq!(s, vec![vec![1, 2], vec![3, 4]]);
    }

    #[test]
    fn shift_distance_basic() {
        let g = path_graph(6);
        let pendant = InducedPath::new(&g, vec![0, 1]).unwrap();
        assert_eq!(min_shift_distance(&g, &pendant, PathCaps::default()).unwrap().distance, 0);
        let middle = InducedPath::new(&g, vec![2, 3]).unwrap();
        let r = min_shift_distance(&g, &middle, PathCaps::default()).unwrap();
        assert_eq!(r.distance, 2);
        let (a, b) = r.witness.last().unwrap().endpoints();
        assert!(g.degree(a) == 1 || g.degree(b) == 1);
        let big = path_graph(70);
        let p = InducedPath::new(&big, vec![0, 1]).unwrap();
        assert_eq!(
            min_shift_distance(&big, &p, PathCaps::default()),
            Err(Error::GraphTooLarge { n: 70, cap: 64 })
        );
    }
}
