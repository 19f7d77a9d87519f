//! Graph families and seed-deterministic random generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::OvInstance;
use crate::preprocess::{Cotree, CotreeBuilder, CotreeKind};
use crate::set::VertexSet;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must lie in [0, 1], got {p}")))
    }
}

/// The path `0 - 1 - ... - (n-1)`.
pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
}

/// The cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid clique")
}

/// Star with center 0 and `leaves` leaves.
pub fn star_graph(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability("edge probability", p)?;
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Uniform random labelled tree on `n` vertices (random attachment to earlier vertices
/// of a shuffled order).
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let edges = (1..n).map(|i| (order[rng.gen_range(0..i)], order[i]));
    Graph::from_edges(n, edges).expect("valid tree")
}

/// A random chordal graph: `G(n, density)` filled along a random elimination
/// order, so the order becomes a perfect elimination ordering.
pub fn random_chordal(n: usize, density: f64, seed: u64) -> Result<Graph> {
    let base = random_graph(n, density, seed)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng(seed ^ 0x9e37_79b9_7f4a_7c15));
    let mut rows = base.adjacency_rows();
    let mut eliminated = VertexSet::new(n);
    for &v in &order {
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
    Ok(Graph::from_rows(&rows))
}

/// A random cograph on `leaves` vertices together with its cotree.
///
/// The cotree has depth at most five; every internal node gets between two
/// and four children and kinds alternate along every root path.
pub fn random_cograph(leaves: usize, seed: u64) -> Result<(Graph, Cotree)> {
    if leaves == 0 {
        return Err(Error::InvalidParameter("a cograph needs at least one leaf".into()));
    }
    let mut rng = rng(seed);
    let mut labels: Vec<usize> = (0..leaves).collect();
    labels.shuffle(&mut rng);
    let mut builder = CotreeBuilder::default();
    let root_kind = if rng.gen_bool(0.5) { CotreeKind::One } else { CotreeKind::Zero };
    let root = grow(&mut builder, &mut rng, &labels, root_kind, 0);
    let tree = builder.finish(root, leaves);
    Ok((tree.to_graph(), tree))
}

const MAX_COTREE_DEPTH: usize = 5;

fn grow(b: &mut CotreeBuilder, rng: &mut ChaCha8Rng, vs: &[usize], kind: CotreeKind, depth: usize) -> usize {
    if vs.len() == 1 {
        return b.push(CotreeKind::Leaf(vs[0]), Vec::new());
    }
    let children = if depth + 1 >= MAX_COTREE_DEPTH {
        vs.iter().map(|&v| b.push(CotreeKind::Leaf(v), Vec::new())).collect()
    } else {
        let parts = rng.gen_range(2..=vs.len().min(4));
        // Random cut points give `parts` non-empty consecutive slices.
        let mut cuts: Vec<usize> = (1..vs.len()).collect();
        cuts.shuffle(rng);
        let mut cuts = cuts[..parts - 1].to_vec();
        cuts.sort_unstable();
        cuts.push(vs.len());
        let child_kind = kind.opposite();
        let mut start = 0;
        cuts.into_iter()
            .map(|end| {
                let id = grow(b, rng, &vs[start..end], child_kind, depth + 1);
                start = end;
                id
            })
            .collect()
    };
    b.push(kind, children)
}

/// A random Orthogonal-Vector instance: `n` sets per family over a universe of
/// `universe <= 64` elements, each element present with probability `density`.
pub fn random_ov(n: usize, universe: usize, density: f64, seed: u64) -> Result<OvInstance> {
    check_probability("density", density)?;
    if universe > 64 {
        return Err(Error::InvalidParameter(format!("universe of {universe} exceeds 64 elements")));
    }
    let mut rng = rng(seed);
    let family = |rng: &mut ChaCha8Rng| -> Vec<u64> {
        (0..n)
            .map(|_| (0..universe).filter(|_| rng.gen_bool(density)).fold(0u64, |m, c| m | 1 << c))
            .collect()
    };
    let a = family(&mut rng);
    let b = family(&mut rng);
    OvInstance::new(universe, a, b)
}
