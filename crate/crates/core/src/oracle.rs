//! Brute-force reference checks and the Orthogonal-Vector gadget.
//!
//! The edge and path oracles work straight from the definitions: enumerate
//! every induced extension and ask whether its two ends are still connected
//! once everything adjacent to the inner part has been deleted. A connecting
//! path found that way closes the extension into an induced cycle.

use std::fmt;
use std::str::FromStr;

use crate::edges::{check_induced_path, neighbor_partition, InducedPath};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Two families of `n` sets each over the universe `{0, .., universe - 1}`,
/// stored as bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OvInstance {
    universe: usize,
    a: Vec<u64>,
    b: Vec<u64>,
}

impl OvInstance {
    pub fn new(universe: usize, a: Vec<u64>, b: Vec<u64>) -> Result<Self> {
        if universe > 64 {
            return Err(Error::InvalidParameter(format!("universe of {universe} exceeds 64 elements")));
        }
        if a.len() != b.len() {
            return Err(Error::InvalidParameter(format!(
                "families have different sizes {} and {}",
                a.len(),
                b.len()
            )));
        }
        let mask = universe_mask(universe);
        if let Some(s) = a.iter().chain(&b).find(|&&s| s & !mask != 0) {
            return Err(Error::InvalidParameter(format!("set {s:#x} leaves the universe")));
        }
        Ok(OvInstance { universe, a, b })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    pub fn b(&self) -> &[u64] {
        &self.b
    }

    /// The first pair `(i, j)` with `A_i ∩ B_j = ∅`, by the quadratic scan.
    pub fn orthogonal_pair(&self) -> Option<(usize, usize)> {
        (0..self.n())
            .flat_map(|i| (0..self.n()).map(move |j| (i, j)))
            .find(|&(i, j)| self.a[i] & self.b[j] == 0)
    }

    pub fn has_orthogonal_pair(&self) -> bool {
        self.orthogonal_pair().is_some()
    }
}

fn universe_mask(universe: usize) -> u64 {
    if universe == 64 {
        u64::MAX
    } else {
        (1u64 << universe) - 1
    }
}

/// Text form: a header `n universe`, then the `n` sets of `A` and the `n` sets
/// of `B`, one hexadecimal bitmask per line.
impl fmt::Display for OvInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n(), self.universe)?;
        for s in self.a.iter().chain(&self.b) {
            writeln!(f, "{s:x}")?;
        }
        Ok(())
    }
}

impl FromStr for OvInstance {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let parse_err = |line, message: String| Error::Parse { line, message };
        let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing header".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [n, universe] = fields[..] else {
            return Err(parse_err(line, format!("expected `n universe`, got `{header}`")));
        };
        let n: usize = n.parse().map_err(|_| parse_err(line, format!("bad set count `{n}`")))?;
        let universe: usize = universe
            .parse()
            .map_err(|_| parse_err(line, format!("bad universe size `{universe}`")))?;
        let mut sets = Vec::with_capacity(2 * n);
        for (line, l) in lines.by_ref().take(2 * n) {
            let digits = l.strip_prefix("0x").unwrap_or(l);
            let s = u64::from_str_radix(digits, 16).map_err(|_| parse_err(line, format!("bad bitmask `{l}`")))?;
            sets.push(s);
        }
        if sets.len() < 2 * n {
            return Err(parse_err(line, format!("expected {} bitmasks, found {}", 2 * n, sets.len())));
        }
        if let Some((line, l)) = lines.next() {
            return Err(parse_err(line, format!("unexpected trailing line `{l}`")));
        }
        let b = sets.split_off(n);
        OvInstance::new(universe, sets, b)
    }
}

/// What a gadget vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OvRole {
    Center,
    HubA,
    HubB,
    SetA(usize),
    SetB(usize),
    Element(usize),
}

/// The reduction graph: `u` is non-avoidable iff the instance has an
/// orthogonal pair.
#[derive(Debug, Clone)]
pub struct OvGadget {
    pub graph: Graph,
    pub u: usize,
    pub roles: Vec<OvRole>,
}

impl OvGadget {
    pub fn vertex_of(&self, role: OvRole) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }
}

/// Builds the gadget. Vertex layout: `u = 0`, `c_A = 1`, `c_B = 2`, then the
/// sets of `A`, the sets of `B`, and the universe elements.
///
/// With `|C| = O(log n)` the gadget has `O(n log n)` edges; larger universes
/// are accepted but give no such bound.
pub fn ov_gadget(inst: &OvInstance) -> OvGadget {
    let n = inst.n();
    let first_a = 3;
    let first_b = first_a + n;
    let first_c = first_b + n;
    let total = first_c + inst.universe();
    let mut roles = vec![OvRole::Center, OvRole::HubA, OvRole::HubB];
    roles.extend((0..n).map(OvRole::SetA));
    roles.extend((0..n).map(OvRole::SetB));
    roles.extend((0..inst.universe()).map(OvRole::Element));

    let mut edges = Vec::new();
    for (side, hub, first) in [(inst.a(), 1, first_a), (inst.b(), 2, first_b)] {
        for (i, &s) in side.iter().enumerate() {
            let v = first + i;
            edges.push((0, v));
            edges.push((hub, v));
            for c in 0..inst.universe() {
                if s >> c & 1 == 1 {
                    edges.push((v, first_c + c));
                }
            }
        }
    }
    let graph = Graph::from_edges(total, edges).expect("gadget edges are distinct");
    OvGadget { graph, u: 0, roles }
}

/// Edge avoidability from the definition: each `a ∈ A_x`, `b ∈ A_y` with
/// `ab ∉ E` must be connected once `N[x] ∪ N[y]` (minus `a`, `b`) is deleted.
pub fn edge_oracle(g: &Graph, x: usize, y: usize) -> Result<bool> {
    let nb = neighbor_partition(g, x, y)?;
    let mut closed = g.closed_neighborhood(x);
    closed.union_with(&g.closed_neighborhood(y));
    Ok(nb.private_x.iter().all(|a| {
        nb.private_y
            .iter()
            .all(|b| g.has_edge(a, b) || g.connected_avoiding(a, b, &closed))
    }))
}

/// Path avoidability from the definition: every induced extension `a - P - b`
/// must have `a` and `b` connected once `N[V(P)]` (minus `a`, `b`) is deleted.
pub fn path_oracle(g: &Graph, p: &InducedPath) -> Result<bool> {
    check_induced_path(g, p.vertices())?;
    Ok(path_extensions(g, p).iter().all(|&(a, b)| {
        let mut blocked = VertexSet::new(g.n());
        for &v in p.vertices() {
            blocked.insert(v);
            for &w in g.neighbors(v) {
                blocked.insert(w);
            }
        }
        g.connected_avoiding(a, b, &blocked)
    }))
}

/// Pairs `(a, b)` such that `a - P - b` is an induced path on `k + 2` vertices.
pub fn path_extensions(g: &Graph, p: &InducedPath) -> Vec<(usize, usize)> {
    let vs = p.vertices();
    let (first, last) = p.endpoints();
    let on_path = VertexSet::from_iter(g.n(), vs.iter().copied());
    let touches_only = |w: usize, end: usize| {
        !on_path.contains(w) && vs.iter().all(|&q| g.has_edge(q, w) == (q == end))
    };
    let fronts: Vec<usize> = g.neighbors(first).iter().copied().filter(|&a| touches_only(a, first)).collect();
    let backs: Vec<usize> = g.neighbors(last).iter().copied().filter(|&b| touches_only(b, last)).collect();
    let mut out = Vec::new();
    for &a in &fronts {
        for &b in &backs {
            if a != b && !g.has_edge(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}
