//! Command-line front end. [`run`] parses arguments, executes one command and
//! returns the process exit code:
//!
//! | code | meaning                                            |
//! |------|----------------------------------------------------|
//! | 0    | success                                            |
//! | 1    | negative but correct result (invalid coloring, certified nonexistence) |
//! | 2    | usage or input error                               |
//! | 3    | internal invariant breach                          |
//! | 4    | search budget exhausted                            |

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cache::BaseCache;
use crate::complete::{CompleteBuilder, CompleteError};
use crate::document::{to_csv, to_dot, ColoringDocument};
use crate::graph::{verify_kaleidoscope, SimpleGraph};
use crate::regular3::{construct_regular3, Regular3Error};
use crate::search::{search_kaleidoscope, SearchBudget, SearchStatus};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "kaleido",
    version,
    about = "Kaleidoscopic edge-colorings of regular graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// k-kaleidoscopic coloring of the complete graph K_n
    ConstructComplete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// r-regular 3-kaleidoscope of order C(r-1,2)-1, r ≡ 3 (mod 4)
    ConstructRegular3 {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring document and print its multiset-colors
    Verify { input: PathBuf },
    /// Convert a coloring document to DOT or CSV
    Export {
        input: PathBuf,
        #[arg(long)]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact search for a k-kaleidoscopic coloring of K_n
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        nodes: Option<u64>,
        /// Seconds
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Csv,
}

/// Runs one command; `out` gets results, `err` diagnostics.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::ConstructComplete { n, k, out: path } => {
            cmd_construct_complete(n, k, path.as_deref(), out, err)
        }
        Command::ConstructRegular3 { r, out: path } => {
            cmd_construct_regular3(r, path.as_deref(), out, err)
        }
        Command::Verify { input } => cmd_verify(&input, out, err),
        Command::Export {
            input,
            format,
            out: path,
        } => cmd_export(&input, &format, path.as_deref(), out, err),
        Command::Search {
            n,
            k,
            seed,
            nodes,
            time_limit,
            exhaustive,
            out: path,
        } => cmd_search(
            n,
            k,
            seed,
            nodes,
            time_limit,
            exhaustive,
            path.as_deref(),
            out,
            err,
        ),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "io error: {e}");
        EXIT_USAGE
    })
}

type CmdResult = std::io::Result<i32>;

fn write_doc(
    doc: &ColoringDocument,
    path: Option<&Path>,
    err: &mut dyn Write,
) -> std::io::Result<bool> {
    if let Some(path) = path {
        if let Err(e) = doc.save(path) {
            writeln!(err, "cannot write {}: {e}", path.display())?;
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn cmd_construct_complete(
    n: usize,
    k: usize,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let builder = CompleteBuilder::new().with_cache(BaseCache::from_env());
    let (g, trace) = match builder.build(n, k) {
        Ok(x) => x,
        Err(e @ CompleteError::RangeViolation { .. }) => {
            writeln!(err, "{e}")?;
            return Ok(EXIT_USAGE);
        }
        Err(e) => {
            writeln!(err, "construction failed: {e}")?;
            return Ok(EXIT_INTERNAL);
        }
    };
    let report = verify_kaleidoscope(&g);
    writeln!(out, "K_{n}, k={k}")?;
    writeln!(out, "case: {}", trace.line())?;
    writeln!(out, "edges: {}", g.edge_count())?;
    write!(out, "{report}")?;
    let doc = ColoringDocument::from_graph(&g)
        .with_labels(trace.labels.clone())
        .with_trace(trace.summary());
    if !write_doc(&doc, path, err)? {
        return Ok(EXIT_USAGE);
    }
    Ok(EXIT_OK)
}

pub fn cmd_construct_regular3(
    r: usize,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let built = match construct_regular3(r) {
        Ok(b) => b,
        Err(e @ Regular3Error::BadDegree(_)) => {
            writeln!(err, "{e}")?;
            return Ok(EXIT_USAGE);
        }
        Err(e) => {
            writeln!(err, "construction failed: {e}")?;
            return Ok(EXIT_INTERNAL);
        }
    };
    let g = &built.graph;
    let report = verify_kaleidoscope(g);
    let coords_match = g
        .multiset_colors()
        .iter()
        .zip(&built.coords)
        .all(|(t, x)| t.counts() == x.as_array());
    writeln!(out, "r={r}, n={}, edges={}", g.n(), g.edge_count())?;
    write!(out, "{report}")?;
    if !report.valid || report.regular_degree != Some(r) || !coords_match {
        writeln!(err, "construction does not meet its invariants:\n{report}")?;
        return Ok(EXIT_INTERNAL);
    }
    let doc = ColoringDocument::from_graph(g).with_labels(built.labels());
    if !write_doc(&doc, path, err)? {
        return Ok(EXIT_USAGE);
    }
    Ok(EXIT_OK)
}

fn load_doc(path: &Path, err: &mut dyn Write) -> std::io::Result<Option<ColoringDocument>> {
    let doc = match ColoringDocument::load(path) {
        Ok(d) => d,
        Err(e) => {
            writeln!(err, "{}: {e}", path.display())?;
            return Ok(None);
        }
    };
    if let Err(e) = doc.to_graph() {
        writeln!(err, "{}: {e}", path.display())?;
        return Ok(None);
    }
    Ok(Some(doc))
}

pub fn cmd_verify(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let Some(doc) = load_doc(path, err)? else {
        return Ok(EXIT_USAGE);
    };
    let g = doc.to_graph().expect("checked by load_doc");
    writeln!(out, "vertex\tmultiset-color\tlabel")?;
    for (i, t) in g.multiset_colors().iter().enumerate() {
        let label = doc
            .labels
            .as_ref()
            .and_then(|l| l.get(&(i + 1)))
            .map(String::as_str)
            .unwrap_or("");
        writeln!(out, "{}\t{t}\t{label}", i + 1)?;
    }
    let report = verify_kaleidoscope(&g);
    write!(out, "{report}")?;
    Ok(if report.valid { EXIT_OK } else { EXIT_NEGATIVE })
}

pub fn cmd_export(
    path: &Path,
    format: &str,
    dest: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let format = match ExportFormat::from_str(format, true) {
        Ok(f) => f,
        Err(_) => {
            writeln!(err, "unknown format '{format}' (expected dot or csv)")?;
            return Ok(EXIT_USAGE);
        }
    };
    let Some(doc) = load_doc(path, err)? else {
        return Ok(EXIT_USAGE);
    };
    let g = doc.to_graph().expect("checked by load_doc");
    let text = match format {
        ExportFormat::Csv => to_csv(&g),
        ExportFormat::Dot => to_dot(&g, doc.labels.as_ref()),
    };
    match dest {
        Some(p) => {
            if let Err(e) = std::fs::write(p, text) {
                writeln!(err, "cannot write {}: {e}", p.display())?;
                return Ok(EXIT_USAGE);
            }
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_search(
    n: usize,
    k: usize,
    seed: u64,
    nodes: Option<u64>,
    time_limit: Option<f64>,
    exhaustive: bool,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    if n < 2 || k == 0 {
        writeln!(err, "need n >= 2 and k >= 1")?;
        return Ok(EXIT_USAGE);
    }
    let time_limit = match time_limit {
        Some(t) if !(t.is_finite() && t > 0.0) => {
            writeln!(err, "time limit must be a positive number of seconds")?;
            return Ok(EXIT_USAGE);
        }
        t => t.map(Duration::from_secs_f64),
    };
    let mut budget = SearchBudget {
        seed,
        exhaustive,
        time_limit,
        ..SearchBudget::default()
    };
    if let Some(limit) = nodes {
        budget.node_limit = limit;
    }
    let outcome = match search_kaleidoscope(&SimpleGraph::complete(n), k, &budget) {
        Ok(o) => o,
        Err(e) => {
            writeln!(err, "{e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    writeln!(out, "status: {:?}", outcome.status)?;
    writeln!(out, "nodes: {}", outcome.nodes)?;
    Ok(match outcome.status {
        SearchStatus::Found => {
            let g = outcome.witness.expect("found implies witness");
            for (i, t) in g.multiset_colors().iter().enumerate() {
                writeln!(out, "{}\t{t}", i + 1)?;
            }
            if !write_doc(&ColoringDocument::from_graph(&g), path, err)? {
                return Ok(EXIT_USAGE);
            }
            EXIT_OK
        }
        SearchStatus::ExhaustedNoSolution => EXIT_NEGATIVE,
        SearchStatus::BudgetExceeded => EXIT_BUDGET,
    })
}
