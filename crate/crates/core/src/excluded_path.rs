//! Breadth-first search for `S`-excluded paths: paths whose internal vertices
//! all lie outside a target set `S`.
//!
//! The search runs from a start vertex and marks target vertices when they are
//! discovered but never enqueues them, so targets can only be leaves of the
//! search tree. Every target is reached iff each has an `S`-excluded path from
//! the start.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcludedPathResult {
    /// Targets discovered by the search.
    pub reached: VertexSet,
    /// Search-tree parents; only present when requested.
    pub parent: Option<Vec<Option<usize>>>,
    pub all_reached: bool,
}

impl ExcludedPathResult {
    /// The tree path from the start to `v`, if `v` was discovered and the tree
    /// was kept.
    pub fn path_to(&self, start: usize, v: usize) -> Option<Vec<usize>> {
        let parent = self.parent.as_ref()?;
        let mut path = vec![v];
        let mut cur = v;
        while cur != start {
            cur = parent[cur]?;
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }
}

/// Searches from `x` for `S`-excluded paths to every vertex of `targets`.
pub fn excluded_path_search(g: &Graph, x: usize, targets: &VertexSet) -> Result<ExcludedPathResult> {
    search(g, x, targets, None, false)
}

/// Like [`excluded_path_search`] but also keeps the search tree.
pub fn excluded_path_search_with_tree(g: &Graph, x: usize, targets: &VertexSet) -> Result<ExcludedPathResult> {
    search(g, x, targets, None, true)
}

/// The search on `g - removed`, without materializing the subgraph.
pub fn excluded_path_search_without(
    g: &Graph,
    x: usize,
    targets: &VertexSet,
    removed: &VertexSet,
) -> Result<ExcludedPathResult> {
    search(g, x, targets, Some(removed), false)
}

fn search(
    g: &Graph,
    x: usize,
    targets: &VertexSet,
    removed: Option<&VertexSet>,
    keep_tree: bool,
) -> Result<ExcludedPathResult> {
    g.check_vertex(x)?;
    if let Some(v) = targets.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if targets.contains(x) {
        return Err(Error::StartInTargets(x));
    }
    let mut reached = VertexSet::new(g.n());
    let mut parent = keep_tree.then(|| vec![None; g.n()]);
    let found = bfs(g, x, targets, removed, |v, p, is_target| {
        if is_target {
            reached.insert(v);
        }
        if let Some(parent) = parent.as_mut() {
            parent[v] = Some(p);
        }
    });
    Ok(ExcludedPathResult {
        reached,
        parent,
        all_reached: found == targets.len(),
    })
}

/// Core loop. Calls `visit(v, parent, is_target)` for each newly marked vertex
/// and returns the number of targets discovered. Stops early once every target
/// has been found.
#[inline]
fn bfs(
    g: &Graph,
    x: usize,
    targets: &VertexSet,
    removed: Option<&VertexSet>,
    mut visit: impl FnMut(usize, usize, bool),
) -> usize {
    let total = targets.len();
    if total == 0 {
        return 0;
    }
    let mut marked = vec![false; g.n()];
    if let Some(r) = removed {
        for v in r {
            marked[v] = true;
        }
    }
    marked[x] = true;
    let mut found = 0;
    let mut queue = VecDeque::from([x]);
    while let Some(s) = queue.pop_front() {
        for &v in g.neighbors(s) {
            if marked[v] {
                continue;
            }
            marked[v] = true;
            if targets.contains(v) {
                visit(v, s, true);
                found += 1;
                if found == total {
                    return found;
                }
            } else {
                visit(v, s, false);
                queue.push_back(v);
            }
        }
    }
    found
}

/// Boolean-only search on `g - removed` used by the recognizers' inner loops.
/// Targets inside `removed` are unreachable.
#[inline]
pub(crate) fn reaches_all(g: &Graph, x: usize, targets: &VertexSet, removed: &VertexSet) -> bool {
    debug_assert!(!targets.contains(x));
    let total = targets.len();
    total == 0 || bfs(g, x, targets, Some(removed), |_, _, _| {}) == total
}

/// Whether `x` protects `y`: `x` has an `N[y]`-excluded path to every
/// neighbor of `y`. Runs the search on `g - y` with targets `N(y) \ {x}`.
///
/// # Panics
///
/// Panics if `x == y` or either vertex is out of range.
pub fn protects(g: &Graph, x: usize, y: usize) -> bool {
    assert!(x != y, "a vertex does not protect itself");
    assert!(x < g.n() && y < g.n(), "vertex out of range");
    let mut targets = g.neighborhood(y);
    targets.remove(x);
    let removed = VertexSet::from_iter(g.n(), [y]);
    reaches_all(g, x, &targets, &removed)
}
