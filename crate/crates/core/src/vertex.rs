//! Recognizing and listing avoidable vertices.
//!
//! A vertex `u` is avoidable when every induced `P3` with middle vertex `u`
//! lies on an induced cycle: equivalently, `d(u) <= 1` or every two
//! neighbors `x, y` of `u` are connected in `G - (N[u] \ {x, y})`.
//!
//! Four interchangeable recognizers are provided:
//!
//! * [`is_avoidable_naive`] tests every non-adjacent neighbor pair directly.
//! * [`is_avoidable_protect`] asks whether every neighbor protects `u`, one
//!   excluded-path search per neighbor.
//! * [`is_avoidable_triangulation`] checks whether `u` is simplicial in a
//!   minimal triangulation without fill edges at `u`.
//! * [`is_avoidable_matmul`] contracts the components of `G - N[u]` and
//!   checks that the neighbors of `u` are pairwise adjacent or at distance two
//!   through contracted vertices, using a boolean matrix square.
//!
//! The matrix square is computed with word-parallel rows, `O(n^3 / w)`, not a
//! sub-cubic multiplication algorithm.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bitmatrix::BitMatrix;
use crate::error::{Error, Result};
use crate::excluded_path::reaches_all;
use crate::graph::{contract_neighborhood, Graph};
use crate::preprocess::decompose;
use crate::set::VertexSet;
use crate::triangulation::{
    is_minimal_triangulation, minimal_triangulation, minimal_triangulation_avoiding,
    minimal_triangulation_avoiding_seeded, Triangulation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Naive,
    Protect,
    Triangulation,
    Matmul,
    /// Protect when `m <= n * sqrt(n)`, matmul otherwise.
    Auto,
}

impl Algorithm {
    /// The four concrete recognizers.
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Naive,
        Algorithm::Protect,
        Algorithm::Triangulation,
        Algorithm::Matmul,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Protect => "protect",
            Algorithm::Triangulation => "triangulation",
            Algorithm::Matmul => "matmul",
            Algorithm::Auto => "auto",
        }
    }

    /// Replaces `Auto` by the recognizer it selects for `g`.
    pub fn resolve(self, g: &Graph) -> Algorithm {
        match self {
            Algorithm::Auto => {
                let n = g.n() as f64;
                if g.m() as f64 <= n * n.sqrt() {
                    Algorithm::Protect
                } else {
                    Algorithm::Matmul
                }
            }
            other => other,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Algorithm::Naive),
            "protect" => Ok(Algorithm::Protect),
            "triangulation" => Ok(Algorithm::Triangulation),
            "matmul" => Ok(Algorithm::Matmul),
            "auto" => Ok(Algorithm::Auto),
            other => Err(Error::UnknownAlgorithm(other.to_string())),
        }
    }
}

/// A pair of neighbors of `u`, non-adjacent and separated by `N[u] \ {x, y}`.
pub fn non_avoidability_witness(g: &Graph, u: usize) -> Option<(usize, usize)> {
    let nb = g.neighbors(u);
    if nb.len() <= 1 {
        return None;
    }
    let closed = g.closed_neighborhood(u);
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            if g.has_edge(x, y) {
                continue;
            }
            let mut blocked = closed.clone();
            blocked.remove(x);
            blocked.remove(y);
            if !g.connected_avoiding(x, y, &blocked) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Direct test of every non-adjacent pair of neighbors.
pub fn is_avoidable_naive(g: &Graph, u: usize) -> bool {
    assert!(u < g.n(), "vertex {u} out of range");
    non_avoidability_witness(g, u).is_none()
}

/// `u` is avoidable iff every neighbor `x` protects it: on `G - u`, `x` has
/// an excluded path to every vertex of `N(u) \ {x}`.
pub fn is_avoidable_protect(g: &Graph, u: usize) -> bool {
    assert!(u < g.n(), "vertex {u} out of range");
    let nb = g.neighbors(u);
    if nb.len() <= 1 {
        return true;
    }
    let removed = VertexSet::from_iter(g.n(), [u]);
    let mut targets = g.neighborhood(u);
    nb.iter().all(|&x| {
        targets.remove(x);
        let ok = reaches_all(g, x, &targets, &removed);
        targets.insert(x);
        ok
    })
}

/// `u` is avoidable iff it is simplicial in a minimal triangulation with no
/// fill edge at `u`.
///
/// With `precomputed`, its fill away from `N[u]` seeds the construction; the
/// supplied triangulation must be a minimal triangulation of `g`.
pub fn is_avoidable_triangulation(g: &Graph, u: usize, precomputed: Option<&Triangulation>) -> Result<bool> {
    g.check_vertex(u)?;
    if let Some(t) = precomputed {
        if !is_minimal_triangulation(g, t) {
            return Err(Error::NotMinimalTriangulation);
        }
    }
    Ok(triangulation_verdict(g, u, precomputed))
}

fn triangulation_verdict(g: &Graph, u: usize, seed: Option<&Triangulation>) -> bool {
    if g.degree(u) <= 1 {
        return true;
    }
    let h = match seed {
        Some(t) => minimal_triangulation_avoiding_seeded(g, u, t),
        None => minimal_triangulation_avoiding(g, u),
    };
    debug_assert_eq!(h.fill_at(u), 0);
    h.filled.is_clique(g.neighbors(u))
}

/// `u` is avoidable iff in the contracted graph `G_u(X, C)` every two
/// vertices of `X` are adjacent or share a contracted neighbor.
///
/// With `G1 = G_u - u` and `G2` the bipartite graph left after deleting the
/// edges inside `X`, that is the condition that `M1 + M2²` has no zero
/// off-diagonal entry on `X × X`.
pub fn is_avoidable_matmul(g: &Graph, u: usize) -> bool {
    assert!(u < g.n(), "vertex {u} out of range");
    if g.degree(u) <= 1 {
        return true;
    }
    let cg = contract_neighborhood(g, u);
    let (g1, _) = cg
        .graph
        .remove_vertices(&VertexSet::from_iter(cg.graph.n(), [cg.u()]))
        .expect("center is in range");
    // Removing vertex 0 shifts X to 0..|X| and C after it.
    let k = cg.x_original().len();
    let inside_x: Vec<(usize, usize)> = g1.edges().filter(|&(a, b)| a < k && b < k).collect();
    let g2 = g1.remove_edges(&inside_x);
    let m1 = BitMatrix::adjacency(&g1);
    let m2 = BitMatrix::adjacency(&g2);
    let m3 = m1.or(&m2.square());
    (0..k).all(|x| (0..k).all(|y| x == y || m3.get(x, y)))
}

/// Runs one recognizer on one vertex.
pub fn is_avoidable(g: &Graph, u: usize, algo: Algorithm) -> bool {
    match algo.resolve(g) {
        Algorithm::Naive => is_avoidable_naive(g, u),
        Algorithm::Protect => is_avoidable_protect(g, u),
        Algorithm::Triangulation => triangulation_verdict(g, u, None),
        Algorithm::Matmul => is_avoidable_matmul(g, u),
        Algorithm::Auto => unreachable!("resolved above"),
    }
}

#[derive(Debug, Clone, Default)]
pub struct ListOptions {
    /// Split the graph by the component/co-component reductions first and
    /// only run the recognizer on the remaining members.
    pub preprocess: bool,
    /// Attach a separating neighbor pair to every non-avoidable vertex.
    pub witnesses: bool,
    /// Compute one minimal triangulation up front and reuse it for every
    /// vertex (triangulation recognizer only).
    pub shared_triangulation: bool,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct AvoidabilityReport {
    pub verdicts: Vec<bool>,
    pub algorithm: Algorithm,
    /// Present when requested; `Some((x, y))` for each non-avoidable vertex.
    pub witnesses: Option<Vec<Option<(usize, usize)>>>,
    pub elapsed: Vec<(&'static str, Duration)>,
}

impl AvoidabilityReport {
    /// Avoidable vertices in increasing order.
    pub fn avoidable(&self) -> Vec<usize> {
        self.verdicts.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect()
    }

    pub fn avoidable_set(&self) -> VertexSet {
        VertexSet::from_iter(self.verdicts.len(), self.avoidable())
    }

    pub fn total_elapsed(&self) -> Duration {
        self.elapsed.iter().map(|(_, d)| *d).sum()
    }
}

/// Verdicts for every vertex of `g` using `algo`.
pub fn list_avoidable(g: &Graph, algo: Algorithm, options: &ListOptions) -> Result<AvoidabilityReport> {
    with_threads(options.threads, || list_in_pool(g, algo, options))?
}

/// Runs `f` on a dedicated pool of `threads` workers, or on the global pool
/// when `threads` is `None`.
pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match threads {
        Some(t) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(f)),
        None => Ok(f()),
    }
}

fn list_in_pool(g: &Graph, algo: Algorithm, options: &ListOptions) -> Result<AvoidabilityReport> {
    let algorithm = algo.resolve(g);
    let mut elapsed = Vec::new();
    let verdicts = if options.preprocess {
        let start = Instant::now();
        let collection = decompose(g);
        elapsed.push(("preprocess", start.elapsed()));
        let start = Instant::now();
        let mut verdicts: Vec<bool> = collection
            .resolved
            .iter()
            .map(|r| r.unwrap_or(false))
            .collect();
        for member in &collection.members {
            let local = recognize_all(&member.graph, algorithm, options)?;
            for (i, &orig) in member.ids.iter().enumerate() {
                verdicts[orig] = local[i];
            }
        }
        elapsed.push(("recognize", start.elapsed()));
        verdicts
    } else {
        let start = Instant::now();
        let verdicts = recognize_all(g, algorithm, options)?;
        elapsed.push(("recognize", start.elapsed()));
        verdicts
    };

    let witnesses = options.witnesses.then(|| {
        let start = Instant::now();
        let w = verdicts
            .par_iter()
            .enumerate()
            .map(|(u, &ok)| if ok { None } else { non_avoidability_witness(g, u) })
            .collect();
        elapsed.push(("witness", start.elapsed()));
        w
    });

    Ok(AvoidabilityReport {
        verdicts,
        algorithm,
        witnesses,
        elapsed,
    })
}

fn recognize_all(g: &Graph, algo: Algorithm, options: &ListOptions) -> Result<Vec<bool>> {
    let shared = if algo == Algorithm::Triangulation && options.shared_triangulation {
        let order: Vec<usize> = g.vertices().collect();
        Some(minimal_triangulation(g, &order)?)
    } else {
        None
    };
    Ok(g
        .vertices()
        .into_par_iter()
        .map(|u| match algo {
            Algorithm::Triangulation => triangulation_verdict(g, u, shared.as_ref()),
            other => is_avoidable(g, u, other),
        })
        .collect())
}

/// Checks the separator condition of a witness pair for `u`.
pub fn is_valid_witness(g: &Graph, u: usize, (x, y): (usize, usize)) -> bool {
    if x == y || !g.has_edge(u, x) || !g.has_edge(u, y) || g.has_edge(x, y) {
        return false;
    }
    let mut blocked = g.closed_neighborhood(u);
    blocked.remove(x);
    blocked.remove(y);
    !g.connected_avoiding(x, y, &blocked)
}
