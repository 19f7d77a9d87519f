//! Command-line grammar and input selection.

use std::path::PathBuf;
use std::str::FromStr;

use avoid_core::Algorithm;
use clap::{Parser, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// List avoidable vertices.
    Vertices,
    /// List avoidable edges.
    Edges,
    /// Test whether an induced path is avoidable.
    CheckPath,
    /// Emit the orthogonal-vector reduction graph.
    Gadget,
    /// Time the vertex recognizers over a generator sweep.
    Bench,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Vertices => "vertices",
            Command::Edges => "edges",
            Command::CheckPath => "check-path",
            Command::Gadget => "gadget",
            Command::Bench => "bench",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

/// A seeded generator, written `family:arg,arg,...`.
#[derive(Debug, Clone, PartialEq)]
pub enum GenSpec {
    Gnp { n: usize, p: f64, seed: u64 },
    Chordal { n: usize, density: f64, seed: u64 },
    Cograph { leaves: usize, seed: u64 },
    Ov { n: usize, universe: usize, density: f64, seed: u64 },
}

fn field<T: FromStr>(family: &str, name: &str, text: &str) -> Result<T, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("{family}: `{text}` is not a valid {name}"))
}

impl FromStr for GenSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (family, args) = s
            .split_once(':')
            .ok_or_else(|| format!("expected `family:args`, got `{s}`"))?;
        let args: Vec<&str> = args.split(',').collect();
        let arity = |k: usize, shape: &str| {
            if args.len() == k {
                Ok(())
            } else {
                Err(format!("{family} takes {shape}"))
            }
        };
        match family {
            "gnp" => {
                arity(3, "n,p,seed")?;
                Ok(GenSpec::Gnp {
                    n: field(family, "n", args[0])?,
                    p: field(family, "p", args[1])?,
                    seed: field(family, "seed", args[2])?,
                })
            }
            "chordal" => {
                arity(3, "n,density,seed")?;
                Ok(GenSpec::Chordal {
                    n: field(family, "n", args[0])?,
                    density: field(family, "density", args[1])?,
                    seed: field(family, "seed", args[2])?,
                })
            }
            "cograph" => {
                arity(2, "leaves,seed")?;
                Ok(GenSpec::Cograph {
                    leaves: field(family, "leaves", args[0])?,
                    seed: field(family, "seed", args[1])?,
                })
            }
            "ov" => {
                arity(4, "n,universe,density,seed")?;
                Ok(GenSpec::Ov {
                    n: field(family, "n", args[0])?,
                    universe: field(family, "universe", args[1])?,
                    density: field(family, "density", args[2])?,
                    seed: field(family, "seed", args[3])?,
                })
            }
            other => Err(format!("unknown generator `{other}` (gnp, chordal, cograph, ov)")),
        }
    }
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: avoid_core::Error| e.to_string())
}

#[derive(Debug, Clone, Parser)]
#[command(name = "avoid", version, about = "Avoidable vertices, edges and induced paths")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,

    /// Graph file in DIMACS edge format (`-` for stdin); for `gadget`, an
    /// orthogonal-vector instance file.
    #[arg(long, conflicts_with = "gen")]
    pub input: Option<PathBuf>,

    /// Generator: gnp:n,p,seed | chordal:n,density,seed | cograph:leaves,seed |
    /// ov:n,universe,density,seed.
    #[arg(long)]
    pub gen: Option<GenSpec>,

    /// naive | protect | triangulation | matmul | auto.
    #[arg(long, default_value = "auto", value_parser = parse_algorithm)]
    pub algo: Algorithm,

    /// Resolve what the component/co-component reductions can before testing.
    #[arg(long)]
    pub preprocess: bool,

    /// Cross-check every verdict against the brute-force oracle.
    #[arg(long)]
    pub check: bool,

    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,

    /// Induced path for `check-path`, as 1-based ids.
    #[arg(long, value_delimiter = ',')]
    pub path: Option<Vec<usize>>,

    /// Also report the minimum number of shifts to an avoidable path.
    #[arg(long)]
    pub shift: bool,

    /// Worker threads (default: all cores).
    #[arg(long, env = "AVOID_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    /// Base seed for `bench` sweeps.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,

    /// Graph sizes swept by `bench`.
    #[arg(long, value_delimiter = ',', default_value = "50,100,200")]
    pub sizes: Vec<usize>,

    /// Edge probability used by `bench`.
    #[arg(long, default_value_t = 0.1)]
    pub density: f64,

    /// Longest path accepted by the path routines.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(2..))]
    pub max_k: u32,

    /// Largest graph accepted by the shift search.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_n: u32,
}

impl RunConfig {
    pub fn threads(&self) -> Option<usize> {
        self.threads.map(|t| t as usize)
    }
}
