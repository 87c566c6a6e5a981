//! The `starcolor` command line.
//!
//! Exit codes: 0 for a positive answer or a successful write, 1 for a
//! negative answer, 2 for usage and input errors, 3 when the solver budget
//! runs out.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand};

use starcolor::dot::export_dot;
use starcolor::instances::{k6, lemma1_graph, random_maximal_outerplanar, random_outerpath, random_outerplanar};
use starcolor::outerpath::color_outerpath_traced;
use starcolor::reductions::{naesat_to_2star, parse_dimacs_cnf, threecolor_to_3star2};
use starcolor::{
    decide, decide_outerplanar_2star, validate, Coloring, DiameterBound, Graph, SolveBudget, SolveOutcome, Verdict,
};

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "starcolor", version, about = "Star colorings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check whether a coloring is a (kappa,lambda)-coloring.
    Check {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        kappa: u32,
        #[arg(long)]
        lambda: u32,
    },
    /// Decide (kappa,lambda)-colorability by exhaustive search.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        kappa: u32,
        #[arg(long)]
        lambda: u32,
        #[arg(long, default_value_t = 10_000_000)]
        node_limit: u64,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        time_limit: Option<f64>,
        /// Write the certificate here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide (2,2)-colorability of an outerplanar graph.
    SolveOuterplanar {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Produce a (2,2)-coloring of a biconnected outerpath.
    ColorOuterpath {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print the state of the coloring machine after every step.
        #[arg(long)]
        trace: bool,
    },
    /// Build the graph of a hardness reduction.
    Reduce {
        #[arg(value_enum)]
        kind: ReductionKind,
        /// DIMACS CNF for `naesat`, an edge list for `3col`.
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Where to write the vertex map.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Generate a graph.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Triangulate every inner face (random kinds only).
        #[arg(long)]
        maximal: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write Graphviz DOT, bolding monochromatic edges.
    ExportDot {
        graph: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum ReductionKind {
    Naesat,
    #[value(name = "3col")]
    ThreeCol,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum GenKind {
    Outerplanar,
    Outerpath,
    Lemma1,
    K6,
}

/// A failure that maps to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<i32, UsageError>;

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_POSITIVE };
            let text = e.render().to_string();
            let _ = if code == EXIT_POSITIVE {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn read(path: &Path) -> Result<String, UsageError> {
    fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, UsageError> {
    Graph::parse_edge_list(&read(path)?).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn read_coloring(path: &Path) -> Result<Coloring, UsageError> {
    Coloring::parse(&read(path)?).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

/// Writes `text` to `path`, or to `out` when no path is given.
fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<(), UsageError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| UsageError(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Check {
            graph,
            coloring,
            kappa,
            lambda,
        } => {
            let g = read_graph(&graph)?;
            let c = read_coloring(&coloring)?;
            match validate(&g, &c, kappa, DiameterBound::try_from(lambda)?)? {
                Verdict::Valid => {
                    writeln!(out, "VALID")?;
                    Ok(EXIT_POSITIVE)
                }
                Verdict::Invalid(v) => {
                    writeln!(out, "INVALID: {v}")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Solve {
            graph,
            kappa,
            lambda,
            node_limit,
            time_limit,
            output,
        } => {
            let g = read_graph(&graph)?;
            let time_limit = match time_limit {
                Some(s) if !(s.is_finite() && s >= 0.0) => return Err(UsageError(format!("bad time limit {s}"))),
                other => other.map(Duration::from_secs_f64),
            };
            let budget = SolveBudget { node_limit, time_limit };
            match decide(&g, kappa, DiameterBound::try_from(lambda)?, budget)? {
                SolveOutcome::Colorable(c) => {
                    writeln!(out, "COLORABLE")?;
                    emit(&c.to_text(), output.as_deref(), out)?;
                    Ok(EXIT_POSITIVE)
                }
                SolveOutcome::Uncolorable => {
                    writeln!(out, "UNCOLORABLE")?;
                    Ok(EXIT_NEGATIVE)
                }
                SolveOutcome::Unknown => {
                    writeln!(out, "UNKNOWN (budget exhausted)")?;
                    Ok(EXIT_BUDGET)
                }
            }
        }
        Command::SolveOuterplanar { graph, output } => {
            let g = read_graph(&graph)?;
            match decide_outerplanar_2star(&g)? {
                Some(c) => {
                    writeln!(out, "COLORABLE")?;
                    emit(&c.to_text(), output.as_deref(), out)?;
                    Ok(EXIT_POSITIVE)
                }
                None => {
                    writeln!(out, "UNCOLORABLE")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::ColorOuterpath { graph, output, trace } => {
            let g = read_graph(&graph)?;
            let (c, t) = color_outerpath_traced(&g)?;
            if trace {
                for s in &t.steps {
                    writeln!(
                        out,
                        "step {}: {} -> {} (|f_i| = {}, |f_i+1| = {})",
                        s.i, s.before, s.after, s.fan_len, s.next_fan_len
                    )?;
                }
            }
            emit(&c.to_text(), output.as_deref(), out)?;
            Ok(EXIT_POSITIVE)
        }
        Command::Reduce {
            kind,
            input,
            output,
            map,
        } => {
            let art = match kind {
                ReductionKind::Naesat => naesat_to_2star(&parse_dimacs_cnf(&read(&input)?)?),
                ReductionKind::ThreeCol => threecolor_to_3star2(&read_graph(&input)?)?,
            };
            emit(&art.graph.to_edge_list(), Some(&output), out)?;
            if let Some(m) = map {
                emit(&art.to_map_text(), Some(&m), out)?;
            }
            writeln!(
                out,
                "wrote {} vertices, {} edges, max degree {}",
                art.graph.vertex_count(),
                art.graph.edge_count(),
                art.graph.max_degree()
            )?;
            Ok(EXIT_POSITIVE)
        }
        Command::Gen {
            kind,
            n,
            seed,
            maximal,
            output,
        } => {
            let g = match kind {
                GenKind::Outerplanar | GenKind::Outerpath if n < 3 => {
                    return Err(UsageError(format!("--n must be at least 3, got {n}")))
                }
                GenKind::Outerplanar if maximal => random_maximal_outerplanar(n, seed),
                GenKind::Outerplanar => random_outerplanar(n, seed),
                GenKind::Outerpath => random_outerpath(n, seed, maximal),
                GenKind::Lemma1 => lemma1_graph(),
                GenKind::K6 => k6(),
            };
            emit(&g.to_edge_list(), output.as_deref(), out)?;
            Ok(EXIT_POSITIVE)
        }
        Command::ExportDot {
            graph,
            coloring,
            output,
        } => {
            let g = read_graph(&graph)?;
            let c = coloring.as_deref().map(read_coloring).transpose()?;
            if let Some(c) = &c {
                if c.len() != g.vertex_count() {
                    return Err(UsageError(format!(
                        "coloring has {} entries but the graph has {} vertices",
                        c.len(),
                        g.vertex_count()
                    )));
                }
            }
            emit(&export_dot(&g, c.as_ref()), output.as_deref(), out)?;
            Ok(EXIT_POSITIVE)
        }
    }
}
