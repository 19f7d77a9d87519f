//! Chordality testing by maximum cardinality search.

use crate::graph::Graph;

/// Maximum cardinality search. Returns vertices in visit order; its reverse is
/// a perfect elimination ordering whenever the graph is chordal.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    // Buckets with lazy deletion: stale entries are skipped on pop.
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    buckets[0] = (0..n).rev().collect();
    let mut top = 0;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !numbered[v] && weight[v] == top => break v,
                Some(_) => {}
                None => top -= 1,
            }
        };
        numbered[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
                buckets[weight[w]].push(w);
                top = top.max(weight[w]);
            }
        }
    }
    order
}

/// Checks that `peo` (first vertex eliminated first) is a perfect elimination
/// ordering: for every vertex, its later neighbors form a clique.
///
/// Uses the parent test: only the earliest later neighbor needs to be adjacent
/// to all other later neighbors.
pub fn is_perfect_elimination_ordering(g: &Graph, peo: &[usize]) -> bool {
    let n = g.n();
    if peo.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in peo.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    for &v in peo {
        let later = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]);
        let Some(parent) = later.clone().min_by_key(|&w| pos[w]) else {
            continue;
        };
        if !later.filter(|&w| w != parent).all(|w| g.has_edge(parent, w)) {
            return false;
        }
    }
    true
}

/// A perfect elimination ordering, or `None` when the graph is not chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    is_perfect_elimination_ordering(g, &order).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}
