//! `diwidth`: compute directed width measures, check and convert witnesses,
//! and run the property sweeps.
//!
//! Results go to standard output as JSON (graphs from `generate` use the text
//! format); diagnostics go to standard error.

mod witness;

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use diwidth::expressions::{
    exact_dlcw_with, exact_dlnlc_with, exact_lcw_with, exact_lnlc_with, layout_to_rank_decomposition, Expression,
};
use diwidth::families::{generate, FamilySpec};
use diwidth::format::{parse_any, write_digraph, AnyGraph};
use diwidth::harness::{check_biorientation_equalities, check_table1, sweep};
use diwidth::layout::{solve_exact_with, undirected_measure_with};
use diwidth::pathdecomp::from_layout;
use diwidth::threshold::recognize_threshold_with;
use diwidth::{Digraph, Error, MeasureKind, SolverConfig, UndirectedGraph};

pub const SCHEMA: &str = "diwidth/1";

#[derive(Parser)]
#[command(name = "diwidth", version, about = "Directed width measures of small digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a width measure exactly, with a witness.
    Compute {
        measure: Measure,
        /// Graph file (`-` for standard input).
        file: String,
        /// Largest order handled by the subset dynamic programs.
        #[arg(long, default_value_t = SolverConfig::default().dp_limit)]
        dp_limit: usize,
        /// Largest order handled by the expression searches.
        #[arg(long, default_value_t = SolverConfig::default().search_limit)]
        search_limit: usize,
    },
    /// Print a member of a named family in the graph text format.
    Generate {
        family: Family,
        /// Family parameters: `n`, `n k` for path powers, `n m` for complete
        /// bipartite, or a string of `>`/`<` for oriented paths.
        params: Vec<String>,
        /// Emit JSON instead of the text format.
        #[arg(long)]
        json: bool,
    },
    /// Decide membership in a graph class, with a certificate.
    Recognize {
        class: Class,
        file: String,
        /// Disallow bidirectional steps.
        #[arg(long)]
        oriented: bool,
    },
    /// Check a witness against a graph. Exits 1 if it does not verify.
    WitnessVerify {
        kind: witness::Kind,
        graph: String,
        witness: String,
    },
    /// Transform a witness into another representation.
    Convert {
        conversion: witness::Conversion,
        witness: String,
        /// Graph file, needed by the layout conversions.
        #[arg(long)]
        graph: Option<String>,
    },
    /// Check the width relations over all small digraphs. Exits 1 on any
    /// violation.
    Sweep {
        #[arg(long)]
        n: usize,
        /// One digraph per isomorphism class.
        #[arg(long)]
        iso: bool,
        /// Comma-separated property ids to check (default: all).
        #[arg(long, value_delimiter = ',')]
        properties: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Suite::Properties)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Measure {
    Dpw,
    DvsnOut,
    Dcutw,
    DcutwBwd,
    Dnw,
    Dlrw,
    Dlnlc,
    Dlcw,
    Pw,
    Cutw,
    Nw,
    Lrw,
    Lnlc,
    Lcw,
}

impl Measure {
    fn layout_kind(self) -> Option<MeasureKind> {
        use Measure::*;
        Some(match self {
            Dpw => MeasureKind::DvsnIn,
            DvsnOut => MeasureKind::DvsnOut,
            Dcutw => MeasureKind::DcutwFwd,
            DcutwBwd => MeasureKind::DcutwBwd,
            Dnw => MeasureKind::Dnw,
            Dlrw => MeasureKind::Dlrw,
            Pw => MeasureKind::UVsn,
            Cutw => MeasureKind::UCutw,
            Nw => MeasureKind::UNw,
            Lrw => MeasureKind::ULrw,
            Dlnlc | Dlcw | Lnlc | Lcw => return None,
        })
    }

    fn is_undirected(self) -> bool {
        matches!(self, Measure::Lnlc | Measure::Lcw) || self.layout_kind().is_some_and(MeasureKind::is_undirected)
    }

    fn name(self) -> String {
        self.to_possible_value().unwrap().get_name().replace('-', "_")
    }
}

/// Maps a measure name as written in witness files to its measure.
pub fn measure_by_name(name: &str) -> Option<MeasureKind> {
    Measure::from_str(&name.replace('_', "-"), true).ok()?.layout_kind()
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    DirectedPath,
    DirectedCycle,
    BidirectionalComplete,
    PathPower,
    BiorientedGrid,
    BiorientedStar,
    BiorientedCompleteBipartite,
    TransitiveTournament,
    OrientedPath,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Threshold,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Every property on every digraph of order `n`.
    Properties,
    /// Family values and growth up to order `n`.
    Table1,
    /// Undirected measures against their biorientations up to order `n`.
    Biorientation,
}

/// Why a command did not succeed, with its exit status.
pub enum Failure {
    /// The result is printed, but a check failed.
    Verification(Value),
    Library(Error),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

pub type Outcome = Result<Value, Failure>;

pub fn read_text(path: &str) -> Result<String, Failure> {
    let read = if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    read.map_err(|e| Failure::Input(format!("{path}: {e}")))
}

pub fn read_graph(path: &str) -> Result<AnyGraph, Failure> {
    parse_any(&read_text(path)?).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

pub fn read_digraph(path: &str) -> Result<Digraph, Failure> {
    match read_graph(path)? {
        AnyGraph::Directed(p) => Ok(p.graph),
        AnyGraph::Undirected(_) => Err(Failure::Input(format!("{path}: expected a digraph"))),
    }
}

pub fn read_json(path: &str) -> Result<Value, Failure> {
    serde_json::from_str(&read_text(path)?).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn compute(measure: Measure, file: &str, config: &SolverConfig) -> Outcome {
    let graph = read_graph(file)?;
    let directed = match &graph {
        AnyGraph::Directed(p) => Some(&p.graph),
        AnyGraph::Undirected(_) => None,
    };
    let undirected: UndirectedGraph = match &graph {
        AnyGraph::Directed(p) => p.graph.underlying_undirected(),
        AnyGraph::Undirected(p) => p.graph.clone(),
    };
    let digraph = || {
        directed.ok_or_else(|| Failure::Input(format!("{} needs a digraph; {file} is undirected", measure.name())))
    };
    let mut out = json!({ "measure": measure.name() });
    if let Some(kind) = measure.layout_kind() {
        let r = if measure.is_undirected() {
            undirected_measure_with(&undirected, kind, config)?
        } else {
            solve_exact_with(digraph()?, kind, config)?
        };
        out["value"] = json!(r.value);
        match measure {
            Measure::Dpw => out["dpd"] = json!(from_layout(digraph()?, &r.layout)?),
            Measure::Dlrw => out["caterpillar"] = json!(layout_to_rank_decomposition(digraph()?, &r.layout)?),
            _ => {}
        }
        out["layout"] = json!(r.layout);
        return Ok(out);
    }
    let (k, x) = match measure {
        Measure::Dlnlc => exact_dlnlc_with(digraph()?, config).map(|(k, x)| (k, Expression::Nlc(x)))?,
        Measure::Dlcw => exact_dlcw_with(digraph()?, config).map(|(k, x)| (k, Expression::Cw(x)))?,
        Measure::Lnlc => exact_lnlc_with(&undirected, config).map(|(k, x)| (k, Expression::UndirectedNlc(x)))?,
        _ => exact_lcw_with(&undirected, config).map(|(k, x)| (k, Expression::UndirectedCw(x)))?,
    };
    out["value"] = json!(k);
    out["layout"] = json!(witness::expression_layout(&x));
    out["expression"] = json!(x);
    Ok(out)
}

fn family_spec(family: Family, params: &[String]) -> Result<FamilySpec, Failure> {
    let count = |i: usize| -> Result<usize, Failure> {
        let p = params
            .get(i)
            .ok_or_else(|| Failure::Input(format!("missing parameter {}", i + 1)))?;
        p.parse()
            .map_err(|_| Failure::Input(format!("parameter `{p}` is not a nonnegative integer")))
    };
    let arity = match family {
        Family::PathPower | Family::BiorientedCompleteBipartite => 2,
        _ => 1,
    };
    if params.len() != arity {
        return Err(Failure::Input(format!("expected {arity} parameter(s), got {}", params.len())));
    }
    use Family::*;
    Ok(match family {
        DirectedPath => FamilySpec::DirectedPath { n: count(0)? },
        DirectedCycle => FamilySpec::DirectedCycle { n: count(0)? },
        BidirectionalComplete => FamilySpec::BidirectionalComplete { n: count(0)? },
        PathPower => FamilySpec::PathPower { n: count(0)?, k: count(1)? },
        BiorientedGrid => FamilySpec::BiorientedGrid { n: count(0)? },
        BiorientedStar => FamilySpec::BiorientedStar { n: count(0)? },
        BiorientedCompleteBipartite => FamilySpec::BiorientedCompleteBipartite { n: count(0)?, m: count(1)? },
        TransitiveTournament => FamilySpec::TransitiveTournament { n: count(0)? },
        OrientedPath => FamilySpec::OrientedPath {
            orientation: params[0]
                .chars()
                .map(|c| match c {
                    '>' | '1' => Ok(true),
                    '<' | '0' => Ok(false),
                    _ => Err(Failure::Input(format!("orientation `{c}` is not one of > < 1 0"))),
                })
                .collect::<Result<_, _>>()?,
        },
    })
}

fn run_sweep(n: usize, iso: bool, properties: Option<Vec<String>>, suite: Suite) -> Outcome {
    if suite != Suite::Properties && (iso || properties.is_some()) {
        return Err(Failure::Input("--iso and --properties apply to the properties suite only".into()));
    }
    let report = match suite {
        Suite::Properties => sweep(n, iso, properties.as_deref())?,
        Suite::Table1 => check_table1(n)?,
        Suite::Biorientation => {
            if n > 5 {
                return Err(Failure::Library(Error::Capacity {
                    what: "biorientation sweep order",
                    actual: n,
                    limit: 5,
                }));
            }
            check_biorientation_equalities(n)?
        }
    };
    let out = json!(report);
    if report.is_clean() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Compute {
            measure,
            file,
            dp_limit,
            search_limit,
        } => compute(measure, &file, &SolverConfig { dp_limit, search_limit }),
        Command::Generate { .. } => unreachable!("handled before dispatch"),
        Command::Recognize {
            class: Class::Threshold,
            file,
            oriented,
        } => {
            let r = recognize_threshold_with(&read_digraph(&file)?, oriented)?;
            let mut out = json!(r);
            out["class"] = json!(if oriented { "oriented_threshold" } else { "threshold" });
            Ok(out)
        }
        Command::WitnessVerify { kind, graph, witness } => witness::verify(kind, &graph, &witness),
        Command::Convert {
            conversion,
            witness,
            graph,
        } => witness::convert(conversion, &witness, graph.as_deref()),
        Command::Sweep {
            n,
            iso,
            properties,
            suite,
        } => run_sweep(n, iso, properties, suite),
    }
}

fn print_json(mut v: Value) {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), json!(SCHEMA));
    }
    // A closed pipe is not worth a panic; the exit status still reports the outcome.
    let _ = writeln!(std::io::stdout().lock(), "{v}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Generate { family, params, json } = &cli.command {
        return match family_spec(*family, params).and_then(|s| Ok((generate(&s)?, s))) {
            Ok((g, spec)) => {
                if *json {
                    print_json(json!({ "family": spec, "n": g.order(), "arcs": g.arcs().collect::<Vec<_>>() }));
                } else {
                    let _ = write!(std::io::stdout().lock(), "{}", write_digraph(&g));
                }
                ExitCode::SUCCESS
            }
            Err(f) => report(f),
        };
    }
    match run(cli.command) {
        Ok(v) => {
            print_json(v);
            ExitCode::SUCCESS
        }
        Err(f) => report(f),
    }
}

fn report(f: Failure) -> ExitCode {
    match f {
        Failure::Verification(v) => {
            eprintln!("diwidth: verification failed");
            print_json(v);
            ExitCode::from(1)
        }
        Failure::Input(msg) | Failure::Library(Error::Input(msg)) => {
            eprintln!("diwidth: {msg}");
            ExitCode::from(2)
        }
        Failure::Library(e @ Error::Capacity { .. }) => {
            eprintln!("diwidth: {e}");
            ExitCode::from(3)
        }
    }
}
