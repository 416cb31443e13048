//! Argument parsing and the subcommands.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use lrp_core::loops::{dual_loop, loop_boundary_sublattice, twelve_w_check, validate_loop};
use lrp_core::polytope3::{
    dual_scaled_3, edge_lattice, is_l_reflexive_3, one_reflexive_on_vertex_lattice, sum_24,
    vertex_lattice, Polytope3,
};
use lrp_core::reflexive::{enumerate_1_reflexive, representatives, LReflexiveRecord};
use rayon::ThreadPool;
use serde::{Deserialize, Serialize};

use crate::exit;
use crate::record::{ClassificationTable, RecordJson};
use crate::suites::{dim3_fixtures, run_suite, SUITES};
use crate::tables;
use crate::CliError;

const DEFAULT_MAX_INDEX: i64 = 59;
const EXTENDED_MAX_INDEX: i64 = 200;

#[derive(Debug, Parser)]
#[command(name = "lrp", version, about = "Reflexive polygons of higher index")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Range {
    /// Largest index to include.
    #[arg(long, default_value_t = DEFAULT_MAX_INDEX)]
    max_index: i64,
    /// Allow indices above 59 (up to 200).
    #[arg(long)]
    extended: bool,
    /// Worker threads; LRP_JOBS takes precedence when set.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Which {
    N,
    SelfDual,
    #[value(name = "3k")]
    ThreeK,
    Orders,
    HexagonI,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify l-reflexive polygons for every odd index up to the bound.
    Classify {
        #[command(flatten)]
        range: Range,
        /// Write all records as JSON to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print one of the tables as CSV.
    Tables {
        /// Which table to print.
        #[arg(long, value_enum)]
        which: Which,
        #[command(flatten)]
        range: Range,
    },
    /// Run an invariant suite.
    Verify {
        /// Name of the suite.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[command(flatten)]
        range: Range,
        /// Check records read from a JSON file instead of classifying.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Enumerate the sixteen reflexive polygons from scratch.
    Oracle16 {
        /// Write the normalized polygons as JSON to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a loop given as {"l": int, "points": [[x, y], ...]}.
    Loop {
        /// JSON file holding the loop.
        #[arg(long)]
        check: PathBuf,
    },
    /// Report on the 3-dimensional examples.
    Dim3 {
        /// Run the built-in examples.
        #[arg(long)]
        examples: bool,
    },
}

/// A loop as read from JSON.
#[derive(Debug, Serialize, Deserialize)]
pub struct LoopJson {
    pub l: i64,
    pub points: Vec<[i64; 2]>,
}

/// Parses `args` and runs the command, writing to `out` and `err`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Classify { range, out: path } => {
            classify_cmd(&pool(&range)?, range.max_index, path.as_deref(), out)
        }
        Command::Tables { which, range } => tables_cmd(&pool(&range)?, which, range.max_index, out),
        Command::Verify {
            suite,
            range,
            input,
        } => verify_cmd(
            &pool(&range)?,
            &suite,
            range.max_index,
            input.as_deref(),
            out,
        ),
        Command::Oracle16 { out: path } => oracle_cmd(path.as_deref(), out),
        Command::Loop { check } => loop_cmd(&check, out),
        Command::Dim3 { examples } => {
            if !examples {
                return Err(CliError::Usage("dim3 needs --examples".into()));
            }
            dim3_cmd(out)
        }
    }
}

fn jobs(range: &Range) -> Result<Option<usize>, CliError> {
    match std::env::var("LRP_JOBS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!(
                "LRP_JOBS must be a positive integer, got {v:?}"
            ))),
        },
        Err(_) if range.jobs == Some(0) => Err(CliError::Usage("--jobs must be positive".into())),
        Err(_) => Ok(range.jobs),
    }
}

/// Checks the index range and builds the worker pool for it.
fn pool(range: &Range) -> Result<ThreadPool, CliError> {
    if range.max_index < 1 {
        return Err(CliError::Usage("--max-index must be at least 1".into()));
    }
    if range.max_index > DEFAULT_MAX_INDEX && !range.extended {
        return Err(CliError::Usage(format!(
            "--max-index above {DEFAULT_MAX_INDEX} requires --extended"
        )));
    }
    if range.max_index > EXTENDED_MAX_INDEX {
        return Err(CliError::Usage(format!(
            "--max-index is limited to {EXTENDED_MAX_INDEX}"
        )));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs(range)? {
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| CliError::Usage(e.to_string()))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn classify_cmd(
    pool: &ThreadPool,
    max_l: i64,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let table = pool.install(|| ClassificationTable::odd_up_to(max_l));
    for (l, row) in &table.rows {
        writeln!(out, "l={l} n={} self_dual={}", row.count, row.self_dual)?;
    }
    if let Some(path) = path {
        let json = serde_json::to_string_pretty(&table.to_json()).expect("records serialize");
        write_file(path, &(json + "\n"))?;
    }
    Ok(exit::OK)
}

fn tables_cmd(
    pool: &ThreadPool,
    which: Which,
    max_l: i64,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let odd = || pool.install(|| ClassificationTable::odd_up_to(max_l));
    let csv = match which {
        Which::N => tables::counts_csv(&odd()),
        Which::SelfDual => tables::self_dual_csv(&odd()),
        Which::Orders => tables::orders_csv(&odd()),
        Which::ThreeK => tables::three_k_csv(
            &pool.install(|| ClassificationTable::compute((3..=max_l).step_by(6))),
        ),
        Which::HexagonI => tables::hexagon_i_csv(max_l / 3)?,
    };
    out.write_all(csv.as_bytes())?;
    Ok(exit::OK)
}

/// Reads records written by `classify --out`, checking each against its vertices.
pub fn load_records(path: &Path) -> Result<Vec<LReflexiveRecord>, CliError> {
    let text = read_file(path)?;
    let rows: Vec<RecordJson> = serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })?;
    rows.iter().map(RecordJson::to_record).collect()
}

fn verify_cmd(
    pool: &ThreadPool,
    suite: &str,
    max_l: i64,
    input: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let table = match input {
        Some(path) => ClassificationTable::from_records(load_records(path)?),
        None => pool.install(|| ClassificationTable::odd_up_to(max_l)),
    };
    let report = pool
        .install(|| run_suite(suite, &table, max_l))
        .ok_or_else(|| CliError::Usage(format!("unknown suite {suite}")))?;
    for f in &report.failures {
        writeln!(out, "FAIL {f}")?;
    }
    let status = if report.passed() { "pass" } else { "FAIL" };
    writeln!(
        out,
        "suite {}: {} checks, {} failures: {status}",
        report.name,
        report.checks,
        report.failures.len()
    )?;
    Ok(if report.passed() {
        exit::OK
    } else {
        exit::VERIFY_FAILED
    })
}

#[derive(Serialize)]
struct OracleEntry {
    id: usize,
    vertices: Vec<[i64; 2]>,
    normalized_vertices: Vec<[i64; 2]>,
    b: i64,
}

fn oracle_cmd(path: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    let found = enumerate_1_reflexive();
    let entries: Vec<OracleEntry> = found
        .iter()
        .zip(representatives())
        .enumerate()
        .map(|(k, (p, q))| OracleEntry {
            id: k + 1,
            vertices: p.vertices().iter().map(|v| v.0).collect(),
            normalized_vertices: q.vertices().iter().map(|v| v.0).collect(),
            b: p.num_boundary_points(),
        })
        .collect();
    let json = serde_json::to_string_pretty(&entries).expect("entries serialize") + "\n";
    match path {
        Some(path) => write_file(path, &json)?,
        None => out.write_all(json.as_bytes())?,
    }
    writeln!(out, "{} reflexive polygons", entries.len())?;
    Ok(if entries.len() == 16 {
        exit::OK
    } else {
        exit::VERIFY_FAILED
    })
}

fn loop_cmd(path: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = read_file(path)?;
    let input: LoopJson = serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })?;
    if input.l < 1 {
        return Err(CliError::Usage("loop index must be positive".into()));
    }
    let lp = match validate_loop(input.points.iter().map(|&p| p.into()).collect(), input.l) {
        Ok(lp) => lp,
        Err(e) => {
            writeln!(out, "invalid loop: {e}")?;
            return Ok(exit::VERIFY_FAILED);
        }
    };
    let m = lp.metrics();
    let dual = dual_loop(&lp);
    writeln!(
        out,
        "points={} length={} winding={}",
        m.boundary_count, m.length, m.winding
    )?;
    writeln!(
        out,
        "dual points={} dual length={}",
        dual.len(),
        dual.metrics().length
    )?;
    writeln!(
        out,
        "boundary lattice index={}",
        loop_boundary_sublattice(&lp)?.index
    )?;
    let ok = twelve_w_check(&lp);
    writeln!(
        out,
        "length + dual length = 12·winding: {}",
        if ok { "yes" } else { "no" }
    )?;
    Ok(if ok { exit::OK } else { exit::VERIFY_FAILED })
}

fn describe(out: &mut dyn Write, name: &str, p: &Polytope3) -> Result<(), CliError> {
    let l = is_l_reflexive_3(p);
    write!(out, "{name}: vertices={:?}", p.vertices())?;
    match l {
        Some(l) => write!(out, " index={l} sum={}", sum_24(p, l)?)?,
        None => write!(out, " not reflexive of any index")?,
    }
    writeln!(
        out,
        " edge_lattice={} vertex_lattice={} reflexive_on_vertex_lattice={}",
        edge_lattice(p)?.index,
        vertex_lattice(p)?.index,
        one_reflexive_on_vertex_lattice(p)?
    )?;
    Ok(())
}

fn dim3_cmd(out: &mut dyn Write) -> Result<i32, CliError> {
    let (family, p, s) = dim3_fixtures();
    for (l, t) in &family {
        describe(out, &format!("tetrahedron(l={l})"), t)?;
    }
    describe(out, "P", &p)?;
    describe(out, "2P*", &dual_scaled_3(&p, 2)?)?;
    describe(out, "S", &s)?;
    let report = run_suite("dim3", &ClassificationTable::default(), 1).expect("dim3 is a suite");
    for f in &report.failures {
        writeln!(out, "FAIL {f}")?;
    }
    writeln!(
        out,
        "dim3 checks: {} of {} pass",
        report.checks - report.failures.len(),
        report.checks
    )?;
    Ok(if report.passed() {
        exit::OK
    } else {
        exit::VERIFY_FAILED
    })
}
