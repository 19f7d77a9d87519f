//! Command implementations. Each returns a [`Report`] plus any disagreements
//! found by `--check`; rendering and exit codes live in the crate root.

use std::io::Read;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use avoid_core::edges::is_avoidable_path;
use avoid_core::generate::{random_chordal, random_cograph, random_graph, random_ov};
use avoid_core::vertex::is_avoidable_naive;
use avoid_core::{
    edge_oracle, list_avoidable, list_avoidable_edges, min_shift_distance, ov_gadget, path_oracle, with_threads,
    Algorithm, Graph, InducedPath, ListOptions, OvInstance, OvRole, PathCaps,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{Command, GenSpec, RunConfig};
use crate::dimacs::{parse_graph_bytes, to_dimacs};

/// Machine-readable result of one command.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub algorithm: Option<String>,
    pub n: usize,
    pub m: usize,
    pub results: Vec<Value>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    /// Plain-text rendering, one result per line.
    pub lines: Vec<String>,
    /// Disagreements found by `--check`.
    pub failures: Vec<String>,
}

pub fn execute(cfg: &RunConfig) -> Result<Outcome> {
    match cfg.command {
        Command::Vertices => cmd_vertices(cfg),
        Command::Edges => cmd_edges(cfg),
        Command::CheckPath => cmd_check_path(cfg),
        Command::Gadget => cmd_gadget(cfg),
        Command::Bench => cmd_bench(cfg),
    }
}

fn read_input(path: &std::path::Path) -> Result<Vec<u8>> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).context("reading stdin")?;
        Ok(buf)
    } else {
        std::fs::read(path).with_context(|| format!("reading {}", path.display()))
    }
}

pub fn load_graph(cfg: &RunConfig) -> Result<Graph> {
    match (&cfg.input, &cfg.gen) {
        (Some(path), None) => {
            let bytes = read_input(path)?;
            parse_graph_bytes(&bytes).with_context(|| format!("parsing {}", path.display()))
        }
        (None, Some(spec)) => Ok(match *spec {
            GenSpec::Gnp { n, p, seed } => random_graph(n, p, seed)?,
            GenSpec::Chordal { n, density, seed } => random_chordal(n, density, seed)?,
            GenSpec::Cograph { leaves, seed } => random_cograph(leaves, seed)?.0,
            GenSpec::Ov {
                n,
                universe,
                density,
                seed,
            } => ov_gadget(&random_ov(n, universe, density, seed)?).graph,
        }),
        (None, None) => bail!("no input: pass --input FILE or --gen SPEC"),
        (Some(_), Some(_)) => bail!("pass only one of --input and --gen"),
    }
}

fn load_ov(cfg: &RunConfig) -> Result<OvInstance> {
    match (&cfg.input, &cfg.gen) {
        (Some(path), None) => {
            let bytes = read_input(path)?;
            let text = std::str::from_utf8(&bytes).context("instance is not valid UTF-8")?;
            text.parse().with_context(|| format!("parsing {}", path.display()))
        }
        (None, Some(GenSpec::Ov {
            n,
            universe,
            density,
            seed,
        })) => Ok(random_ov(*n, *universe, *density, *seed)?),
        (None, Some(_)) => bail!("gadget needs an ov:n,universe,density,seed generator"),
        (None, None) => bail!("no input: pass --input FILE or --gen ov:..."),
        (Some(_), Some(_)) => bail!("pass only one of --input and --gen"),
    }
}

fn ms_since(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

fn cmd_vertices(cfg: &RunConfig) -> Result<Outcome> {
    let g = load_graph(cfg)?;
    let start = Instant::now();
    let options = ListOptions {
        preprocess: cfg.preprocess,
        threads: cfg.threads(),
        ..ListOptions::default()
    };
    let report = list_avoidable(&g, cfg.algo, &options)?;
    let elapsed_ms = ms_since(start);
    let avoidable = report.avoidable();

    let mut failures = Vec::new();
    if cfg.check {
        for u in g.vertices() {
            let expected = is_avoidable_naive(&g, u);
            if report.verdicts[u] != expected {
                failures.push(format!(
                    "vertex {}: {} says {}, naive says {}",
                    u + 1,
                    report.algorithm,
                    report.verdicts[u],
                    expected
                ));
            }
        }
    }
    Ok(Outcome {
        lines: avoidable.iter().map(|v| (v + 1).to_string()).collect(),
        report: Report {
            command: cfg.command.name(),
            algorithm: Some(report.algorithm.name().to_string()),
            n: g.n(),
            m: g.m(),
            results: avoidable.iter().map(|v| json!(v + 1)).collect(),
            elapsed_ms,
        },
        failures,
    })
}

fn cmd_edges(cfg: &RunConfig) -> Result<Outcome> {
    let g = load_graph(cfg)?;
    let start = Instant::now();
    let edges = with_threads(cfg.threads(), || list_avoidable_edges(&g))?;
    let elapsed_ms = ms_since(start);

    let mut failures = Vec::new();
    if cfg.check {
        let expected: Vec<(usize, usize)> = g.edges().filter(|&(x, y)| edge_oracle(&g, x, y).unwrap()).collect();
        if expected != edges {
            for &(x, y) in expected.iter().filter(|e| !edges.contains(e)) {
                failures.push(format!("edge {}-{}: missed", x + 1, y + 1));
            }
            for &(x, y) in edges.iter().filter(|e| !expected.contains(e)) {
                failures.push(format!("edge {}-{}: reported but not avoidable", x + 1, y + 1));
            }
        }
    }
    Ok(Outcome {
        lines: edges.iter().map(|(x, y)| format!("{} {}", x + 1, y + 1)).collect(),
        report: Report {
            command: cfg.command.name(),
            algorithm: Some("protected-edge".into()),
            n: g.n(),
            m: g.m(),
            results: edges.iter().map(|(x, y)| json!([x + 1, y + 1])).collect(),
            elapsed_ms,
        },
        failures,
    })
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn joined(vs: &[usize]) -> String {
    one_based(vs).iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_check_path(cfg: &RunConfig) -> Result<Outcome> {
    let g = load_graph(cfg)?;
    let ids = cfg.path.as_ref().context("check-path needs --path v1,v2,...")?;
    if let Some(&bad) = ids.iter().find(|&&v| v == 0 || v > g.n()) {
        bail!("path vertex {bad} is outside 1..={}", g.n());
    }
    let p = InducedPath::new(&g, ids.iter().map(|v| v - 1).collect())?;
    let caps = PathCaps {
        max_k: cfg.max_k as usize,
        max_n: cfg.max_n as usize,
    };

    let start = Instant::now();
    let avoidable = is_avoidable_path(&g, &p)?;
    let shift = if cfg.shift {
        Some(min_shift_distance(&g, &p, caps)?)
    } else {
        None
    };
    let elapsed_ms = ms_since(start);

    let mut failures = Vec::new();
    if cfg.check {
        let expected = path_oracle(&g, &p)?;
        if expected != avoidable {
            failures.push(format!("path {}: reduction says {avoidable}, oracle says {expected}", joined(p.vertices())));
        }
        if let Some(s) = &shift {
            let last = s.witness.last().expect("witness starts at the query");
            if !path_oracle(&g, last)? {
                failures.push(format!("shift witness ends at non-avoidable path {}", joined(last.vertices())));
            }
        }
    }

    let mut lines = vec![if avoidable { "avoidable" } else { "non-avoidable" }.to_string()];
    let mut result = json!({ "path": one_based(p.vertices()), "avoidable": avoidable });
    if let Some(s) = &shift {
        lines.push(format!("shift-distance {}", s.distance));
        lines.extend(s.witness.iter().map(|q| joined(q.vertices())));
        result["shift_distance"] = json!(s.distance);
        result["witness"] = json!(s.witness.iter().map(|q| one_based(q.vertices())).collect::<Vec<_>>());
    }
    Ok(Outcome {
        lines,
        report: Report {
            command: cfg.command.name(),
            algorithm: Some("path-reduction".into()),
            n: g.n(),
            m: g.m(),
            results: vec![result],
            elapsed_ms,
        },
        failures,
    })
}

fn role_name(role: OvRole) -> String {
    match role {
        OvRole::Center => "u".into(),
        OvRole::HubA => "c_A".into(),
        OvRole::HubB => "c_B".into(),
        OvRole::SetA(i) => format!("A{}", i + 1),
        OvRole::SetB(i) => format!("B{}", i + 1),
        OvRole::Element(j) => format!("C{}", j + 1),
    }
}

fn cmd_gadget(cfg: &RunConfig) -> Result<Outcome> {
    let inst = load_ov(cfg)?;
    let start = Instant::now();
    let gadget = ov_gadget(&inst);
    let elapsed_ms = ms_since(start);
    let g = &gadget.graph;

    let mut failures = Vec::new();
    if cfg.check {
        let orthogonal = inst.has_orthogonal_pair();
        if orthogonal == is_avoidable_naive(g, gadget.u) {
            failures.push(format!(
                "orthogonal pair {}, but u is {}",
                if orthogonal { "exists" } else { "absent" },
                if orthogonal { "avoidable" } else { "non-avoidable" }
            ));
        }
    }

    let mut lines = vec![format!("c u {}", gadget.u + 1)];
    lines.extend(
        gadget
            .roles
            .iter()
            .enumerate()
            .map(|(v, &r)| format!("c role {} {}", v + 1, role_name(r))),
    );
    lines.extend(to_dimacs(g).lines().map(str::to_string));
    let results = gadget
        .roles
        .iter()
        .enumerate()
        .map(|(v, &r)| json!({ "vertex": v + 1, "role": role_name(r), "neighbors": one_based(g.neighbors(v)) }))
        .collect();
    Ok(Outcome {
        lines,
        report: Report {
            command: cfg.command.name(),
            algorithm: None,
            n: g.n(),
            m: g.m(),
            results,
            elapsed_ms,
        },
        failures,
    })
}

/// FNV-1a over the verdict bits, so runs can be compared at a glance.
pub fn verdict_hash(verdicts: &[bool]) -> u64 {
    verdicts
        .iter()
        .fold(0xcbf29ce484222325u64, |h, &b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

fn cmd_bench(cfg: &RunConfig) -> Result<Outcome> {
    if cfg.sizes.is_empty() || cfg.sizes.contains(&0) {
        bail!("--sizes must list positive graph sizes");
    }
    let graphs: Vec<Graph> = if cfg.input.is_some() || cfg.gen.is_some() {
        vec![load_graph(cfg)?]
    } else {
        cfg.sizes
            .iter()
            .enumerate()
            .map(|(i, &n)| random_graph(n, cfg.density, cfg.seed + i as u64))
            .collect::<Result<_, _>>()?
    };
    let options = ListOptions {
        preprocess: cfg.preprocess,
        threads: cfg.threads(),
        ..ListOptions::default()
    };

    let start = Instant::now();
    let mut lines = vec!["n,m,algo,ms,verdict_hash".to_string()];
    let mut results = Vec::new();
    let mut failures = Vec::new();
    for g in &graphs {
        let mut hashes = Vec::new();
        for algo in Algorithm::ALL {
            let t = Instant::now();
            let report = list_avoidable(g, algo, &options)?;
            let ms = ms_since(t);
            let hash = verdict_hash(&report.verdicts);
            hashes.push((algo, hash));
            lines.push(format!("{},{},{},{:.3},{:016x}", g.n(), g.m(), algo, ms, hash));
            results.push(json!({
                "n": g.n(), "m": g.m(), "algo": algo.name(), "ms": ms, "verdict_hash": format!("{hash:016x}"),
            }));
        }
        if cfg.check {
            let (_, reference) = hashes[0];
            for &(algo, h) in &hashes[1..] {
                if h != reference {
                    failures.push(format!("n={} m={}: {algo} disagrees with naive", g.n(), g.m()));
                }
            }
        }
    }
    let last = graphs.last().expect("at least one graph");
    Ok(Outcome {
        lines,
        report: Report {
            command: cfg.command.name(),
            algorithm: Some("all".into()),
            n: last.n(),
            m: last.m(),
            results,
            elapsed_ms: ms_since(start),
        },
        failures,
    })
}
