//! Reductions that settle avoidability from the component structure of the
//! graph and of its complement, and the cotree algorithm for cographs.
//!
//! The decomposition recurses directly on components and co-components
//! (`O(n (n + m))` in the worst case) instead of computing a linear-time
//! modular decomposition tree; the verdicts are the same.

use crate::error::{Error, Result};
use crate::graph::{co_components, connected_components, induced_on, Graph};
use crate::set::VertexSet;

/// An induced subgraph of the input that could not be resolved structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub graph: Graph,
    /// Original id of each member vertex.
    pub ids: Vec<usize>,
}

/// Vertex-disjoint members that are connected and co-connected with at least
/// as many edges and complement edges as vertices, plus verdicts for every
/// vertex outside the members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypicalCollection {
    pub members: Vec<Member>,
    /// `Some(verdict)` for resolved vertices, `None` for member vertices.
    pub resolved: Vec<Option<bool>>,
}

impl TypicalCollection {
    /// Combines the resolved verdicts with per-member verdicts, given in the
    /// member's local ids.
    pub fn merge(&self, member_verdicts: &[Vec<bool>]) -> Vec<bool> {
        let mut out: Vec<bool> = self.resolved.iter().map(|r| r.unwrap_or(false)).collect();
        for (member, local) in self.members.iter().zip(member_verdicts) {
            for (i, &orig) in member.ids.iter().enumerate() {
                out[orig] = local[i];
            }
        }
        out
    }
}

/// Splits `g` on components and co-components, resolving complete graphs,
/// universal vertices, trees and complements of trees on the way.
pub fn decompose(g: &Graph) -> TypicalCollection {
    let mut out = TypicalCollection {
        members: Vec::new(),
        resolved: vec![None; g.n()],
    };
    let all: Vec<usize> = g.vertices().collect();
    let mut stack = vec![(g.clone(), all)];
    while let Some((h, ids)) = stack.pop() {
        let n = h.n();
        if n == 1 {
            out.resolved[ids[0]] = Some(true);
            continue;
        }
        let comps = connected_components(&h);
        if comps.len() > 1 {
            push_blocks(&mut stack, &h, &ids, comps.blocks().iter());
            continue;
        }
        let co = co_components(&h);
        if co.len() > 1 {
            if co.len() == n {
                // Complete graph: every vertex is simplicial.
                ids.iter().for_each(|&v| out.resolved[v] = Some(true));
                continue;
            }
            // A universal vertex of a non-complete graph is never avoidable,
            // and removing it does not change the other verdicts.
            for block in co.blocks().iter().filter(|b| b.len() == 1) {
                out.resolved[ids[block[0]]] = Some(false);
            }
            push_blocks(&mut stack, &h, &ids, co.blocks().iter().filter(|b| b.len() > 1));
            continue;
        }
        if h.m() == n - 1 {
            // Tree: exactly the leaves.
            for v in h.vertices() {
                out.resolved[ids[v]] = Some(h.degree(v) <= 1);
            }
        } else if h.complement_m() == n - 1 {
            // Complement of a tree: exactly the non-leaves of that tree.
            for v in h.vertices() {
                out.resolved[ids[v]] = Some(n - 1 - h.degree(v) >= 2);
            }
        } else {
            out.members.push(Member { graph: h, ids });
        }
    }
    out.members.sort_by_key(|m| m.ids[0]);
    out
}

fn push_blocks<'a>(
    stack: &mut Vec<(Graph, Vec<usize>)>,
    h: &Graph,
    ids: &[usize],
    blocks: impl Iterator<Item = &'a Vec<usize>>,
) {
    for block in blocks {
        let (sub, local) = induced_on(h, block);
        stack.push((sub, local.iter().map(|&v| ids[v]).collect()));
    }
}

/// Kind of a cotree node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CotreeKind {
    Leaf(usize),
    /// Disjoint union of the children.
    Zero,
    /// Join of the children.
    One,
}

impl CotreeKind {
    /// Swaps `Zero` and `One`; leaves are unchanged.
    pub fn opposite(self) -> Self {
        match self {
            CotreeKind::Zero => CotreeKind::One,
            CotreeKind::One => CotreeKind::Zero,
            leaf => leaf,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotreeNode {
    pub kind: CotreeKind,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// The cotree of a cograph: leaves are vertices, two vertices are adjacent
/// iff their lowest common ancestor is a 1-node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cotree {
    nodes: Vec<CotreeNode>,
    root: usize,
    leaf_of: Vec<usize>,
}

#[derive(Debug, Default)]
pub(crate) struct CotreeBuilder {
    nodes: Vec<CotreeNode>,
}

impl CotreeBuilder {
    pub(crate) fn push(&mut self, kind: CotreeKind, children: Vec<usize>) -> usize {
        let id = self.nodes.len();
        for &c in &children {
            self.nodes[c].parent = Some(id);
        }
        self.nodes.push(CotreeNode {
            kind,
            parent: None,
            children,
        });
        id
    }

    pub(crate) fn finish(self, root: usize, n: usize) -> Cotree {
        let mut leaf_of = vec![usize::MAX; n];
        for (i, node) in self.nodes.iter().enumerate() {
            if let CotreeKind::Leaf(v) = node.kind {
                leaf_of[v] = i;
            }
        }
        Cotree {
            nodes: self.nodes,
            root,
            leaf_of,
        }
    }
}

impl Cotree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn nodes(&self) -> &[CotreeNode] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &CotreeNode {
        &self.nodes[i]
    }

    /// Number of leaves, i.e. of graph vertices.
    pub fn vertex_count(&self) -> usize {
        self.leaf_of.len()
    }

    /// Node index of the leaf for vertex `v`.
    pub fn leaf(&self, v: usize) -> usize {
        self.leaf_of[v]
    }

    /// Vertices below node `i`.
    pub fn leaves_below(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![i];
        while let Some(x) = stack.pop() {
            match self.nodes[x].kind {
                CotreeKind::Leaf(v) => out.push(v),
                _ => stack.extend(&self.nodes[x].children),
            }
        }
        out.sort_unstable();
        out
    }

    /// Checks that leaves biject with vertices, every internal node has at
    /// least two children, and no two adjacent internal nodes share a kind.
    pub fn is_valid(&self) -> bool {
        let mut seen = VertexSet::new(self.vertex_count());
        for (i, node) in self.nodes.iter().enumerate() {
            match node.kind {
                CotreeKind::Leaf(v) => {
                    if v >= self.vertex_count() || !seen.insert(v) || !node.children.is_empty() {
                        return false;
                    }
                }
                kind => {
                    if node.children.len() < 2 {
                        return false;
                    }
                    for &c in &node.children {
                        if self.nodes[c].kind == kind || self.nodes[c].parent != Some(i) {
                            return false;
                        }
                    }
                }
            }
        }
        seen.len() == self.vertex_count() && self.nodes[self.root].parent.is_none()
    }

    /// Realizes the cograph: joins every two child subtrees of each 1-node.
    pub fn to_graph(&self) -> Graph {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for node in &self.nodes {
            if node.kind != CotreeKind::One {
                continue;
            }
            let groups: Vec<Vec<usize>> = node.children.iter().map(|&c| self.leaves_below(c)).collect();
            for (a, ga) in groups.iter().enumerate() {
                for gb in &groups[a + 1..] {
                    for &x in ga {
                        for &y in gb {
                            adj[x].push(y);
                            adj[y].push(x);
                        }
                    }
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Label-preserving canonical form; equal for two cotrees iff they are the
    /// same tree up to the order of children.
    pub fn canonical_form(&self) -> String {
        fn go(t: &Cotree, i: usize) -> String {
            let node = &t.nodes[i];
            match node.kind {
                CotreeKind::Leaf(v) => v.to_string(),
                kind => {
                    let mut parts: Vec<String> = node.children.iter().map(|&c| go(t, c)).collect();
                    parts.sort();
                    let tag = if kind == CotreeKind::Zero { '0' } else { '1' };
                    format!("{tag}({})", parts.join(","))
                }
            }
        }
        go(self, self.root)
    }
}

/// Builds the cotree by alternating component and co-component splits.
///
/// Fails on the first subgraph with more than one vertex that is both
/// connected and co-connected, and reports an induced `P4` inside it.
pub fn build_cotree(g: &Graph) -> Result<Cotree> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("the empty graph has no cotree".into()));
    }
    let mut b = CotreeBuilder::default();
    let all: Vec<usize> = g.vertices().collect();
    let root = build_node(g, &all, &mut b)?;
    Ok(b.finish(root, g.n()))
}

fn build_node(g: &Graph, vs: &[usize], b: &mut CotreeBuilder) -> Result<usize> {
    if vs.len() == 1 {
        return Ok(b.push(CotreeKind::Leaf(vs[0]), Vec::new()));
    }
    let (h, ids) = induced_on(g, vs);
    let comps = connected_components(&h);
    let (kind, blocks) = if comps.len() > 1 {
        (CotreeKind::Zero, comps)
    } else {
        let co = co_components(&h);
        if co.len() == 1 {
            let [a, b, c, d] = find_induced_p4(&h).expect("a prime graph contains an induced P4");
            return Err(Error::NotACograph([ids[a], ids[b], ids[c], ids[d]]));
        }
        (CotreeKind::One, co)
    };
    let mut children = Vec::with_capacity(blocks.len());
    for block in blocks.blocks() {
        let orig: Vec<usize> = block.iter().map(|&v| ids[v]).collect();
        children.push(build_node(g, &orig, b)?);
    }
    Ok(b.push(kind, children))
}

/// Some induced path `a - b - c - d`, found by trying every edge as the middle.
pub fn find_induced_p4(g: &Graph) -> Option<[usize; 4]> {
    for (b, c) in g.edges() {
        for &a in g.neighbors(b) {
            if a == c || g.has_edge(a, c) {
                continue;
            }
            for &d in g.neighbors(c) {
                if d != b && !g.has_edge(d, b) && !g.has_edge(a, d) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Result of the cotree pass with per-node visit counts.
#[derive(Debug, Clone)]
pub struct CographPass {
    pub avoidable: VertexSet,
    /// How many times each cotree node was visited.
    pub visits: Vec<u32>,
}

/// Avoidable vertices of a cograph: those whose parent in the cotree is a
/// 0-node or a 1-node with only leaf children.
pub fn cograph_avoidable(t: &Cotree) -> VertexSet {
    cograph_avoidable_traced(t).avoidable
}

/// [`cograph_avoidable`] with visit counting: one bottom-up pass marks full
/// 1-nodes, then one scan over the leaves reads their parent.
pub fn cograph_avoidable_traced(t: &Cotree) -> CographPass {
    let count = t.nodes.len();
    let mut visits = vec![0u32; count];
    let mut full = vec![false; count];

    // Post-order via an explicit stack; each node is finalized exactly once.
    let mut stack = vec![(t.root, false)];
    while let Some((i, expanded)) = stack.pop() {
        let node = &t.nodes[i];
        if !expanded && !node.children.is_empty() {
            stack.push((i, true));
            stack.extend(node.children.iter().map(|&c| (c, false)));
            continue;
        }
        visits[i] += 1;
        full[i] = node.kind == CotreeKind::One
            && node
                .children
                .iter()
                .all(|&c| matches!(t.nodes[c].kind, CotreeKind::Leaf(_)));
    }

    let mut avoidable = VertexSet::new(t.vertex_count());
    for v in 0..t.vertex_count() {
        let leaf = t.leaf_of[v];
        visits[leaf] += 1;
        let ok = match t.nodes[leaf].parent {
            None => true,
            Some(p) => t.nodes[p].kind == CotreeKind::Zero || full[p],
        };
        if ok {
            avoidable.insert(v);
        }
    }
    CographPass { avoidable, visits }
}
