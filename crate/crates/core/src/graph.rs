//! Simple undirected graphs over dense vertex ids and the structural
//! operations the recognizers are built from.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// An immutable simple undirected graph on the vertices `0..n`.
///
/// Neighbor lists are kept sorted, so adjacency tests are a binary search.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, out-of-range
    /// endpoints and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
            m2 += list.len();
        }
        Ok(Graph { adj, m: m2 / 2 })
    }

    /// Builds a graph from symmetric neighbor lists. Lists are sorted here.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut m2 = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, l)| l.iter().all(|&v| v != u && adj[v].binary_search(&u).is_ok())));
        Graph { adj, m: m2 / 2 }
    }

    /// Builds a graph from bitset rows; rows must be symmetric and loop-free.
    pub(crate) fn from_rows(rows: &[VertexSet]) -> Self {
        Graph::from_adjacency(rows.iter().map(VertexSet::to_vec).collect())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of edges of the complement.
    pub fn complement_m(&self) -> usize {
        let n = self.n();
        n * n.saturating_sub(1) / 2 - self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Open neighborhood as a bitset.
    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_iter(self.n(), self.adj[v].iter().copied())
    }

    /// Closed neighborhood as a bitset.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.neighborhood(v);
        s.insert(v);
        s
    }

    /// Bitset adjacency rows, one per vertex.
    pub fn adjacency_rows(&self) -> Vec<VertexSet> {
        self.vertices().map(|v| self.neighborhood(v)).collect()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || connected_components(self).len() == 1
    }

    /// Whether `a` and `b` are joined by a path that avoids `blocked`.
    ///
    /// The endpoints themselves are never treated as blocked.
    pub fn connected_avoiding(&self, a: usize, b: usize, blocked: &VertexSet) -> bool {
        if a == b {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([a]);
        seen[a] = true;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if w == b {
                    return true;
                }
                if !seen[w] && !blocked.contains(w) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        false
    }

    /// `G + xy`. The flag is false when the edge was already present.
    pub fn add_edge(&self, x: usize, y: usize) -> Result<(Graph, bool)> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::SelfLoop(x));
        }
        if self.has_edge(x, y) {
            return Ok((self.clone(), false));
        }
        let mut adj = self.adj.clone();
        adj[x].push(y);
        adj[y].push(x);
        Ok((Graph::from_adjacency(adj), true))
    }

    /// `G - S`, renumbered; the map sends new ids to original ids.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        let keep = VertexSet::from_iter(self.n(), self.vertices().filter(|&v| !s.contains(v)));
        if let Some(v) = s.iter().find(|&v| v >= self.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        induced_subgraph(self, &keep)
    }

    /// `G \ R` on the same vertex set. Pairs of `r` that are not edges are ignored.
    pub fn remove_edges(&self, r: &[(usize, usize)]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in r {
            if u < self.n() && v < self.n() {
                adj[u].retain(|&w| w != v);
                adj[v].retain(|&w| w != u);
            }
        }
        Graph::from_adjacency(adj)
    }
}

/// A partition of a ground set into disjoint blocks.
///
/// Blocks are sorted lists of vertex ids, ordered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    fn from_labels(labels: Vec<usize>, count: usize) -> Self {
        let mut blocks = vec![Vec::new(); count];
        for (v, &b) in labels.iter().enumerate() {
            blocks[b].push(v);
        }
        Partition {
            blocks,
            block_of: labels,
        }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn block_set(&self, i: usize) -> VertexSet {
        VertexSet::from_iter(self.block_of.len(), self.blocks[i].iter().copied())
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

pub fn connected_components(g: &Graph) -> Partition {
    const UNSEEN: usize = usize::MAX;
    let mut label = vec![UNSEEN; g.n()];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        if label[s] != UNSEEN {
            continue;
        }
        label[s] = count;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if label[w] == UNSEEN {
                    label[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    Partition::from_labels(label, count)
}

/// Connected components of the complement, without building it.
///
/// Breadth-first search over the complement keeps the not-yet-visited vertices
/// in one list; scanning a vertex splits that list into its neighbors (which
/// stay) and its non-neighbors (which join the current co-component). Each scan
/// costs the degree plus the number of removed vertices, so the whole pass is
/// `O(n + m)`.
pub fn co_components(g: &Graph) -> Partition {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut unvisited: Vec<usize> = (0..n).rev().collect();
    let mut mark = vec![false; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    let mut keep = Vec::with_capacity(n);
    while let Some(s) = unvisited.pop() {
        label[s] = count;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                mark[w] = true;
            }
            keep.clear();
            for &w in &unvisited {
                if mark[w] {
                    keep.push(w);
                } else {
                    label[w] = count;
                    queue.push_back(w);
                }
            }
            std::mem::swap(&mut unvisited, &mut keep);
            for &w in g.neighbors(v) {
                mark[w] = false;
            }
        }
        count += 1;
    }
    // Labels follow the discovery order of the smallest vertex, like
    // `connected_components`, because `unvisited` pops the smallest id first.
    Partition::from_labels(label, count)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let adj = (0..n)
        .map(|v| {
            let mut out = Vec::with_capacity(n - 1 - g.degree(v));
            let mut it = g.neighbors(v).iter().peekable();
            for w in 0..n {
                if it.peek() == Some(&&w) {
                    it.next();
                } else if w != v {
                    out.push(w);
                }
            }
            out
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// `G[S]` with vertices renumbered by increasing original id. The returned map
/// sends each new id to its original id.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    if let Some(v) = s.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(induced_on(g, &s.to_vec()))
}

/// `G[vs]` for a sorted, duplicate-free, in-range list of vertices.
pub(crate) fn induced_on(g: &Graph, vs: &[usize]) -> (Graph, Vec<usize>) {
    let mut new_id = vec![usize::MAX; g.n()];
    for (i, &v) in vs.iter().enumerate() {
        new_id[v] = i;
    }
    let adj = vs
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter_map(|&w| (new_id[w] != usize::MAX).then_some(new_id[w]))
                .collect()
        })
        .collect();
    (Graph::from_adjacency(adj), vs.to_vec())
}

/// What a vertex of a [`ContractedGraph`] stands for in the original graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContractedVertex {
    Center(usize),
    Neighbor(usize),
    /// Index into [`ContractedGraph::components`].
    Component(usize),
}

/// `G_u(X, C)`: every component of `G - N[u]` contracted to one vertex.
///
/// Layout: `u` is vertex 0, the neighbors `X` follow in increasing original id,
/// then one vertex per contracted component.
#[derive(Debug, Clone)]
pub struct ContractedGraph {
    pub graph: Graph,
    center: usize,
    x_original: Vec<usize>,
    components: Vec<Vec<usize>>,
}

impl ContractedGraph {
    /// Contracted id of `u`.
    pub fn u(&self) -> usize {
        0
    }

    pub fn center_original(&self) -> usize {
        self.center
    }

    /// Contracted ids of `X = N(u)`.
    pub fn x_ids(&self) -> std::ops::Range<usize> {
        1..1 + self.x_original.len()
    }

    /// Contracted ids of the component vertices `C`.
    pub fn c_ids(&self) -> std::ops::Range<usize> {
        let start = 1 + self.x_original.len();
        start..start + self.components.len()
    }

    pub fn x_set(&self) -> VertexSet {
        VertexSet::from_iter(self.graph.n(), self.x_ids())
    }

    pub fn x_original(&self) -> &[usize] {
        &self.x_original
    }

    /// Original vertex sets of the contracted components, in `c_ids` order.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn origin(&self, id: usize) -> ContractedVertex {
        if id == 0 {
            ContractedVertex::Center(self.center)
        } else if self.x_ids().contains(&id) {
            ContractedVertex::Neighbor(self.x_original[id - 1])
        } else {
            ContractedVertex::Component(id - self.c_ids().start)
        }
    }
}

/// Builds `G_u(X, C)` in `O(n + m)`.
pub fn contract_neighborhood(g: &Graph, u: usize) -> ContractedGraph {
    let n = g.n();
    assert!(u < n, "vertex {u} out of range");
    let x_original = g.neighbors(u).to_vec();
    let k = x_original.len();
    let mut new_id = vec![usize::MAX; n];
    new_id[u] = 0;
    for (i, &x) in x_original.iter().enumerate() {
        new_id[x] = 1 + i;
    }

    // Components of G - N[u], discovered in order of their smallest vertex.
    let mut comp_of = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if new_id[s] != usize::MAX || comp_of[s] != usize::MAX {
            continue;
        }
        let c = components.len();
        let mut members = vec![s];
        comp_of[s] = c;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if new_id[w] == usize::MAX && comp_of[w] == usize::MAX {
                    comp_of[w] = c;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }

    let total = 1 + k + components.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    adj[0] = (1..=k).collect();
    for (i, &x) in x_original.iter().enumerate() {
        let xi = 1 + i;
        for &w in g.neighbors(x) {
            if w == u {
                adj[xi].push(0);
            } else if new_id[w] != usize::MAX {
                adj[xi].push(new_id[w]);
            } else {
                let ci = 1 + k + comp_of[w];
                adj[xi].push(ci);
                adj[ci].push(xi);
            }
        }
    }
    ContractedGraph {
        graph: Graph::from_adjacency(adj),
        center: u,
        x_original,
        components,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_graph, cycle_graph, path_graph};

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn components_of_two_triangles() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let p = connected_components(&g);
        assert_eq!(p.sizes(), vec![3, 3]);
        assert_eq!(connected_components(&complete_graph(5)).sizes(), vec![5]);
    }

    #[test]
    fn co_components_of_small_graphs() {
        let c4 = cycle_graph(4);
        assert_eq!(co_components(&c4).blocks(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(co_components(&complete_graph(4)).sizes(), vec![1, 1, 1, 1]);
        assert_eq!(co_components(&Graph::empty(0)).len(), 0);
    }

    #[test]
    fn complement_of_edgeless_and_p4() {
        assert_eq!(complement(&Graph::empty(4)), complete_graph(4));
        // a-b-c-d maps to c-a-d-b
        let p4 = path_graph(4);
        let expected = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(complement(&p4), expected);
    }

    #[test]
    fn induced_subgraph_of_cycle() {
        let c5 = cycle_graph(5);
        let (h, map) = induced_subgraph(&c5, &VertexSet::from_iter(5, [1, 2, 3])).unwrap();
        assert_eq!(h, path_graph(3));
        assert_eq!(map, vec![1, 2, 3]);
        let (e, map) = induced_subgraph(&c5, &VertexSet::new(5)).unwrap();
        assert_eq!(e.n(), 0);
        assert!(map.is_empty());
        assert!(induced_subgraph(&c5, &VertexSet::from_iter(8, [7])).is_err());
    }

    #[test]
    fn add_and_remove() {
        let p3 = path_graph(3);
        let (c3, added) = p3.add_edge(0, 2).unwrap();
        assert!(added);
        assert_eq!(c3, complete_graph(3));
        let (same, added) = c3.add_edge(0, 1).unwrap();
        assert!(!added);
        assert_eq!(same, c3);
        assert_eq!(p3.add_edge(1, 1), Err(Error::SelfLoop(1)));

        let (k3, _) = complete_graph(4)
            .remove_vertices(&VertexSet::from_iter(4, [2]))
            .unwrap();
        assert_eq!(k3, complete_graph(3));

        let g = complete_graph(4).remove_edges(&[(0, 1), (2, 3), (0, 1)]);
        assert_eq!(g.m(), 4);
    }

    #[test]
    fn contraction_of_p5_center() {
        // a b c d e = 0 1 2 3 4
        let g = path_graph(5);
        let cg = contract_neighborhood(&g, 2);
        assert_eq!(cg.x_original(), &[1, 3]);
        assert_eq!(cg.components(), &[vec![0], vec![4]]);
        let h = &cg.graph;
        assert_eq!(h.n(), 5);
        // u=0, b=1, d=2, {a}=3, {e}=4
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3), (2, 4)]);
        assert_eq!(cg.origin(3), ContractedVertex::Component(0));
        assert_eq!(cg.origin(1), ContractedVertex::Neighbor(1));
    }

    #[test]
    fn contraction_at_universal_vertex() {
        let g = complete_graph(5);
        let cg = contract_neighborhood(&g, 3);
        assert!(cg.components().is_empty());
        assert_eq!(cg.graph.m(), g.m());
    }
}
