//! End-to-end acceptance checks. Runs as a plain binary and prints one
//! PASS/FAIL line per criterion; exits nonzero if any criterion fails.

use std::collections::{HashMap, VecDeque};
use std::time::{Duration, Instant};

use avoid_core::chordal::is_chordal;
use avoid_core::edges::{InducedPath, PathCaps};
use avoid_core::generate::{random_chordal, random_cograph, random_graph, random_ov, random_tree};
use avoid_core::preprocess::cograph_avoidable_traced;
use avoid_core::triangulation::simplicial_vertices;
use avoid_core::vertex::is_avoidable_naive;
use avoid_core::*;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

const DENSITIES: [f64; 4] = [0.1, 0.3, 0.5, 0.8];

fn naive_verdicts(g: &Graph) -> Vec<bool> {
    g.vertices().map(|u| is_avoidable_naive(g, u)).collect()
}

fn verdicts(g: &Graph, algo: Algorithm) -> Vec<bool> {
    list_avoidable(g, algo, &ListOptions::default()).unwrap().verdicts
}

/// The 500-graph corpus: sizes 5..=60, four densities, fixed seeds.
fn corpus() -> Vec<Graph> {
    (0..500u64)
        .map(|i| {
            let n = 5 + (i as usize * 37) % 56;
            random_graph(n, DENSITIES[i as usize % 4], 1000 + i).unwrap()
        })
        .collect()
}

fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let edges = a.edges().chain(b.edges().map(|(x, y)| (x + shift, y + shift)));
    Graph::from_edges(a.n() + b.n(), edges).unwrap()
}

fn join(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let across = (0..a.n()).flat_map(|x| (0..b.n()).map(move |y| (x, y + shift)));
    let edges = a.edges().chain(b.edges().map(|(x, y)| (x + shift, y + shift))).chain(across);
    Graph::from_edges(a.n() + b.n(), edges).unwrap()
}

fn fnv1a(bits: &[bool]) -> u64 {
    bits.iter().fold(0xcbf29ce484222325u64, |h, &b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

fn c1_four_way(corpus: &[Graph]) -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (i, g) in corpus.iter().enumerate() {
        let naive = naive_verdicts(g);
        for algo in [Algorithm::Protect, Algorithm::Triangulation, Algorithm::Matmul] {
            if verdicts(g, algo) != naive {
                bad.push(format!("graph {i} ({algo})"));
            }
        }
    }
    let elapsed = start.elapsed();
    if !bad.is_empty() {
        return Err(format!("{} disagreements: {}", bad.len(), bad.join(", ")));
    }
    if elapsed > Duration::from_secs(120) {
        return Err(format!("runtime {:.1}s exceeds 120s", elapsed.as_secs_f64()));
    }
    Ok(format!("{} graphs, 0 disagreements, {:.1}s", corpus.len(), elapsed.as_secs_f64()))
}

/// Corpus plus chordal graphs, cographs, trees and the edgeless graphs.
fn mixed_corpus(corpus: &[Graph]) -> Vec<Graph> {
    let mut all = corpus.to_vec();
    for s in 0..50 {
        all.push(random_chordal(5 + s as usize % 40, 0.2, s).unwrap());
        all.push(random_cograph(1 + s as usize % 50, s).unwrap().0);
        all.push(random_tree(1 + s as usize % 30, s));
        all.push(Graph::empty(1 + s as usize % 7));
    }
    all
}

fn c2_existence(all: &[Graph]) -> Outcome {
    let mut violations = 0;
    for g in all {
        if g.n() > 0 && !verdicts(g, Algorithm::Protect).contains(&true) {
            violations += 1;
        }
        // Stops at the first avoidable edge.
        if g.m() > 0 && !g.edges().any(|(x, y)| is_avoidable_edge(g, x, y).unwrap()) {
            violations += 1;
        }
    }
    if violations > 0 {
        return Err(format!("{violations} violations"));
    }
    Ok(format!("{} graphs, 0 violations", all.len()))
}

fn c3_complement(all: &[Graph]) -> Outcome {
    let mut checked = 0;
    let mut violations = 0;
    for g in all.iter().filter(|g| g.n() <= 40) {
        let c = complement(g);
        for u in g.vertices().filter(|&u| !is_avoidable_naive(g, u)) {
            checked += 1;
            if !is_avoidable_naive(&c, u) {
                violations += 1;
            }
        }
    }
    if violations > 0 {
        return Err(format!("{violations} of {checked} non-avoidable vertices fail in the complement"));
    }
    Ok(format!("{checked} non-avoidable vertices, 0 violations"))
}

fn c4_chordal() -> Outcome {
    let mut bad = Vec::new();
    for s in 0..100u64 {
        let n = 1 + (s as usize * 13) % 50;
        let g = random_chordal(n, [0.05, 0.15, 0.3, 0.6][s as usize % 4], 7000 + s).unwrap();
        if !is_chordal(&g) {
            bad.push(format!("seed {s} not chordal"));
            continue;
        }
        // Simplicial set computed directly: the neighborhood is a clique.
        let simplicial: Vec<bool> = g
            .vertices()
            .map(|v| {
                let nb = g.neighbors(v);
                nb.iter().all(|&a| nb.iter().all(|&b| a == b || g.has_edge(a, b)))
            })
            .collect();
        let lib_simplicial = simplicial_vertices(&g);
        if g.vertices().any(|v| lib_simplicial.contains(v) != simplicial[v]) {
            bad.push(format!("seed {s} simplicial listing"));
        }
        for algo in Algorithm::ALL {
            if verdicts(&g, algo) != simplicial {
                bad.push(format!("seed {s} ({algo})"));
            }
        }
    }
    if !bad.is_empty() {
        return Err(bad.join(", "));
    }
    Ok("100 chordal graphs, avoidable == simplicial".into())
}

fn c5_cographs() -> Outcome {
    let mut bad = Vec::new();
    let mut max_visits = 0;
    for s in 0..100u64 {
        let leaves = 1 + (s as usize * 17) % 60;
        let (g, _) = random_cograph(leaves, 300 + s).unwrap();
        let t = match build_cotree(&g) {
            Ok(t) => t,
            Err(e) => {
                bad.push(format!("seed {s}: {e}"));
                continue;
            }
        };
        let pass = cograph_avoidable_traced(&t);
        max_visits = max_visits.max(pass.visits.iter().copied().max().unwrap_or(0));
        if pass.visits.len() != t.nodes().len() || pass.visits.iter().any(|&v| v > 2) {
            bad.push(format!("seed {s}: node visited more than twice"));
        }
        let naive = naive_verdicts(&g);
        if g.vertices().any(|v| pass.avoidable.contains(v) != naive[v]) {
            bad.push(format!("seed {s}: verdict mismatch"));
        }
    }
    if !bad.is_empty() {
        return Err(bad.join(", "));
    }
    Ok(format!("100 cographs, 0 mismatches, at most {max_visits} visits per node"))
}

fn decomposition_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for s in 0..200u64 {
        let n = 5 + (s as usize * 11) % 36;
        let g = match s % 4 {
            0 => random_graph(n, 0.08, s).unwrap(),
            1 => random_graph(n, 0.85, s).unwrap(),
            2 => {
                // Union of a join and extra pieces: several decomposition levels.
                let a = random_graph(n / 3 + 2, 0.4, s).unwrap();
                let b = random_graph(n / 3 + 2, 0.5, s + 1).unwrap();
                let c = random_tree(n / 4 + 2, s);
                disjoint_union(&join(&a, &b), &c)
            }
            _ => {
                let a = random_graph(n / 2 + 2, 0.3, s).unwrap();
                let b = complement(&random_tree(n / 3 + 3, s));
                let c = random_chordal(n / 4 + 2, 0.3, s).unwrap();
                join(&disjoint_union(&a, &Graph::empty(1)), &disjoint_union(&b, &c))
            }
        };
        out.push(g);
    }
    out
}

fn c6_decomposition() -> Outcome {
    let graphs = decomposition_corpus();
    let mut bad = Vec::new();
    let mut members = 0;
    for (i, g) in graphs.iter().enumerate() {
        let c = decompose(g);
        let mut owner = vec![None; g.n()];
        let mut local = Vec::new();
        for (k, m) in c.members.iter().enumerate() {
            members += 1;
            let h = &m.graph;
            let typical = h.is_connected() && complement(h).is_connected() && h.m() >= h.n() && h.complement_m() >= h.n();
            if !typical {
                bad.push(format!("graph {i} member {k} not typical"));
            }
            for (a, &va) in m.ids.iter().enumerate() {
                if owner[va].replace(k).is_some() || c.resolved[va].is_some() {
                    bad.push(format!("graph {i} vertex {va} in two places"));
                }
                if m.ids.iter().enumerate().any(|(b, &vb)| h.has_edge(a, b) != g.has_edge(va, vb)) {
                    bad.push(format!("graph {i} member {k} not induced"));
                }
            }
            local.push(naive_verdicts(h));
        }
        if g.vertices().any(|v| owner[v].is_none() && c.resolved[v].is_none()) {
            bad.push(format!("graph {i} has an unresolved vertex"));
        }
        if c.merge(&local) != naive_verdicts(g) {
            bad.push(format!("graph {i} merged verdicts differ"));
        }
    }
    if !bad.is_empty() {
        return Err(bad.join(", "));
    }
    Ok(format!("200 graphs, {members} members, all typical, merged == naive"))
}

fn c7_gadget() -> Outcome {
    let mut bad = Vec::new();
    let mut yes = 0;
    for s in 0..200u64 {
        let n = 1 + s as usize % 12;
        let universe = 1 + (s as usize / 12) % 6;
        let inst = random_ov(n, universe, [0.5, 0.7, 0.85][s as usize % 3], 500 + s).unwrap();
        let gadget = ov_gadget(&inst);
        if gadget.graph.n() != 2 * n + universe + 3 {
            bad.push(format!("seed {s}: vertex count {}", gadget.graph.n()));
        }
        // Orthogonality by the pairwise AND, written out here.
        let orthogonal = inst.a().iter().any(|&a| inst.b().iter().any(|&b| a & b == 0));
        yes += orthogonal as usize;
        if orthogonal == is_avoidable_naive(&gadget.graph, gadget.u) {
            bad.push(format!("seed {s}: equivalence fails"));
        }
    }
    if !bad.is_empty() {
        return Err(bad.join(", "));
    }
    Ok(format!("200 instances ({yes} with an orthogonal pair), equivalence holds"))
}

fn c8_edges() -> Outcome {
    let mut edges = 0;
    let mut bad = Vec::new();
    for s in 0..300u64 {
        let n = 2 + s as usize % 17;
        let g = random_graph(n, DENSITIES[s as usize % 4], 9000 + s).unwrap();
        for (x, y) in g.edges() {
            edges += 1;
            let fast = is_avoidable_edge(&g, x, y).unwrap();
            let nb = neighbor_partition(&g, x, y).unwrap();
            let (h, ids) = g.remove_vertices(&nb.common).unwrap();
            let hx = ids.iter().position(|&v| v == x).unwrap();
            let hy = ids.iter().position(|&v| v == y).unwrap();
            if fast != edge_oracle(&g, x, y).unwrap() || fast != is_protected_edge(&h, hx, hy).unwrap() {
                bad.push(format!("seed {s} edge {x}-{y}"));
            }
        }
    }
    if !bad.is_empty() {
        return Err(format!("{} disagreements: {}", bad.len(), bad.join(", ")));
    }
    Ok(format!("{edges} edges over 300 graphs, 0 disagreements"))
}

fn c9_paths() -> Outcome {
    let mut checked = [0usize; 6];
    let mut bad = Vec::new();
    for s in 0..200u64 {
        let n = 4 + s as usize % 11;
        let g = random_graph(n, [0.2, 0.3, 0.4, 0.5][s as usize % 4], 4000 + s).unwrap();
        for (k, count) in checked.iter_mut().enumerate().skip(2) {
            for p in enumerate_induced_paths(&g, k, PathCaps::default()).unwrap() {
                *count += 1;
                if is_avoidable_path(&g, &p).unwrap() != path_oracle(&g, &p).unwrap() {
                    bad.push(format!("seed {s} path {:?}", p.vertices()));
                }
            }
        }
    }
    if !bad.is_empty() {
        return Err(format!("{} disagreements: {}", bad.len(), bad.join(", ")));
    }
    Ok(format!(
        "P2/P3/P4/P5 counts {}/{}/{}/{}, 0 disagreements",
        checked[2], checked[3], checked[4], checked[5]
    ))
}

fn c10_triangulation() -> Outcome {
    let mut bad = Vec::new();
    let mut pairs = 0;
    for s in 0..50u64 {
        let n = 2 + (s as usize * 7) % 39;
        let g = random_graph(n, DENSITIES[s as usize % 4], 6000 + s).unwrap();
        for u in g.vertices() {
            pairs += 1;
            let t = minimal_triangulation_avoiding(&g, u);
            let mut filled = g.clone();
            for &(a, b) in &t.fill {
                filled = filled.add_edge(a, b).unwrap().0;
            }
            let ok = filled == t.filled
                && is_chordal(&filled)
                && t.fill.iter().all(|&(a, b)| a != u && b != u)
                && t.fill.iter().all(|&f| !is_chordal(&filled.remove_edges(&[f])));
            if !ok {
                bad.push(format!("seed {s} u {u}"));
            }
        }
    }
    if !bad.is_empty() {
        return Err(bad.join(", "));
    }
    Ok(format!("{pairs} (graph, u) pairs, all chordal, minimal, no fill at u"))
}

/// Induced `P3`s by brute force over ordered triples, smaller end first.
fn brute_p3s(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in g.vertices() {
        for b in g.vertices() {
            for c in a + 1..g.n() {
                if b != a && b != c && g.has_edge(a, b) && g.has_edge(b, c) && !g.has_edge(a, c) {
                    out.push(vec![a, b, c]);
                }
            }
        }
    }
    out
}

/// Whether vertex set `s` induces a path.
fn induces_path(g: &Graph, s: &[usize]) -> bool {
    let degs: Vec<usize> = s.iter().map(|&v| s.iter().filter(|&&w| g.has_edge(v, w)).count()).collect();
    let m: usize = degs.iter().sum::<usize>() / 2;
    if m + 1 != s.len() || degs.iter().any(|&d| d > 2) {
        return false;
    }
    let blocked = VertexSet::from_iter(g.n(), g.vertices().filter(|v| !s.contains(v)));
    s.iter().all(|&v| g.connected_avoiding(s[0], v, &blocked))
}

/// Distance from `start` to the nearest avoidable node in the fully built
/// shift graph on induced `P3`s.
fn materialized_shift_distance(g: &Graph, start: &[usize]) -> Option<usize> {
    let nodes = brute_p3s(g);
    let index: HashMap<&Vec<usize>, usize> = nodes.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let adj: Vec<Vec<usize>> = nodes
        .iter()
        .map(|p| {
            (0..nodes.len())
                .filter(|&j| {
                    let mut union: Vec<usize> = p.iter().chain(&nodes[j]).copied().collect();
                    union.sort_unstable();
                    union.dedup();
                    union.len() == 4 && induces_path(g, &union)
                })
                .collect()
        })
        .collect();
    let marked: Vec<bool> = nodes
        .iter()
        .map(|p| path_oracle(g, &InducedPath::new(g, p.clone()).unwrap()).unwrap())
        .collect();
    let s = index[&start.to_vec()];
    let mut dist = vec![usize::MAX; nodes.len()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(i) = queue.pop_front() {
        if marked[i] {
            return Some(dist[i]);
        }
        for &j in &adj[i] {
            if dist[j] == usize::MAX {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    None
}

fn c11_shifts() -> Outcome {
    let mut bad = Vec::new();
    let mut queries = 0;
    let mut max_distance = 0;
    let mut seed = 0u64;
    while queries < 50 {
        seed += 1;
        let n = 6 + seed as usize % 7;
        let g = random_graph(n, [0.2, 0.3, 0.4][seed as usize % 3], 2000 + seed).unwrap();
        let p3s = brute_p3s(&g);
        if p3s.is_empty() {
            continue;
        }
        queries += 1;
        // Prefer starts that are not avoidable themselves, so the search moves.
        let hard: Vec<&Vec<usize>> = p3s
            .iter()
            .filter(|p| !path_oracle(&g, &InducedPath::new(&g, p.to_vec()).unwrap()).unwrap())
            .collect();
        let start = if hard.is_empty() {
            &p3s[(seed as usize * 7) % p3s.len()]
        } else {
            hard[(seed as usize * 7) % hard.len()]
        };
        let p = InducedPath::new(&g, start.clone()).unwrap();
        let r = min_shift_distance(&g, &p, PathCaps::default()).unwrap();
        max_distance = max_distance.max(r.distance);
        let last = r.witness.last().unwrap();
        let valid_steps = r.witness.windows(2).all(|w| {
            let mut union: Vec<usize> = w[0].vertices().iter().chain(w[1].vertices()).copied().collect();
            union.sort_unstable();
            union.dedup();
            union.len() == 4 && induces_path(&g, &union)
        });
        let expected = materialized_shift_distance(&g, start);
        if !path_oracle(&g, last).unwrap()
            || r.witness[0].vertices() != start.as_slice()
            || r.witness.len() != r.distance + 1
            || !valid_steps
            || expected != Some(r.distance)
        {
            bad.push(format!("seed {seed} start {start:?}: got {}, expected {expected:?}", r.distance));
        }
    }
    if !bad.is_empty() {
        return Err(bad.join(", "));
    }
    Ok(format!("50 queries, distances match, max distance {max_distance}"))
}

/// Soft: reports a warning instead of failing.
fn c12_scaling() -> Outcome {
    println!("  n,m,algo,ms,verdict_hash");
    let mut times = Vec::new();
    for (i, n) in [1000usize, 2000, 4000].into_iter().enumerate() {
        let g = random_graph(n, 4.0 / (n as f64 - 1.0), 77 + i as u64).unwrap();
        let opts = ListOptions {
            threads: Some(1),
            ..ListOptions::default()
        };
        let start = Instant::now();
        let r = list_avoidable(&g, Algorithm::Protect, &opts).unwrap();
        let ms = start.elapsed().as_secs_f64() * 1000.0;
        println!("  {},{},protect,{:.3},{:016x}", n, g.m(), ms, fnv1a(&r.verdicts));
        times.push(ms);
    }
    let ratios: Vec<f64> = times.windows(2).map(|w| w[1] / w[0].max(1e-3)).collect();
    let summary = format!("doubling ratios {:.2}, {:.2}", ratios[0], ratios[1]);
    if ratios.iter().all(|&r| r <= 5.0) {
        Ok(summary)
    } else {
        println!("  WARNING: {summary} exceed 5");
        Ok(format!("{summary} (warning only)"))
    }
}

fn main() {
    let corpus = corpus();
    let mixed = mixed_corpus(&corpus);
    let criteria: Vec<Criterion> = vec![
        ("four-way recognizer agreement", Box::new(|| c1_four_way(&corpus))),
        ("existence of avoidable vertices and edges", Box::new(|| c2_existence(&mixed))),
        ("complement direction", Box::new(|| c3_complement(&mixed))),
        ("chordal graphs: avoidable == simplicial", Box::new(c4_chordal)),
        ("cotree listing", Box::new(c5_cographs)),
        ("decomposition soundness", Box::new(c6_decomposition)),
        ("orthogonal-vector gadget", Box::new(c7_gadget)),
        ("edge equivalence", Box::new(c8_edges)),
        ("path reduction", Box::new(c9_paths)),
        ("avoiding triangulation contract", Box::new(c10_triangulation)),
        ("shift distance", Box::new(c11_shifts)),
        ("protect listing scaling (soft)", Box::new(c12_scaling)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
