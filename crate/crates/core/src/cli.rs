//! The `randic` command-line tool.
//!
//! Exit codes are shared by every subcommand: 0 on success, 2 for usage or
//! input errors, 3 when a bound or identity fails on some graph.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{bounds_report, BoundsReport};
use crate::constructions::{build_biregular, build_family_graph, minimal_biregular_scale};
use crate::edge_list::{parse_edge_list, to_edge_list};
use crate::enumeration::{
    extremal_scan_with, verify_theorems, EnumerationSummary, MAX_ORDER, SLOW_ORDER,
};
use crate::error::Error;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::numeric::{
    format_real, serialize_real, Tolerances, IDENTITY_TOLERANCE, SLACK_TOLERANCE,
};
use crate::randic::{caporossi_with_degrees, direct_with_degrees, positive_degrees};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_VIOLATION: u8 = 3;

/// Environment variable supplying the default for `--jobs`.
pub const JOBS_ENV: &str = "RANDIC_JOBS";

#[derive(Debug, Parser)]
#[command(
    name = "randic",
    version,
    about = "Randić index, degree bounds and extremal graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the Randić index of each input graph by two formulas.
    Compute(InputArgs),
    /// Evaluate the min/max-degree bounds and their equality certificates.
    Bounds(InputArgs),
    /// Build an extremal graph.
    Construct(ConstructArgs),
    /// Check every bound and identity on all small graphs.
    Verify(VerifyArgs),
    /// Per-(n, d, D) extremal statistics over all small graphs.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// Edge list if the first line is a bare integer, graph6 otherwise.
    Auto,
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct ToleranceArgs {
    /// Tolerance for algebraic identities.
    #[arg(long, default_value_t = IDENTITY_TOLERANCE)]
    pub tolerance: f64,
    /// Tolerance for inequality slacks.
    #[arg(long, default_value_t = SLACK_TOLERANCE)]
    pub slack_tolerance: f64,
}

impl ToleranceArgs {
    fn tolerances(&self) -> Tolerances {
        Tolerances {
            identity: self.tolerance,
            slack: self.slack_tolerance,
        }
    }
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file, or `-` for stdin. graph6 input may hold one graph per line.
    #[arg(short, long, default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub tolerances: ToleranceArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    /// Round-robin (d, D)-biregular graph.
    Biregular,
    /// Chained block graph for odd d < D.
    Family,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub kind: ConstructKind,
    /// Minimum degree.
    pub d: usize,
    /// Maximum degree.
    #[arg(value_name = "D")]
    pub big_d: usize,
    /// Size multiplier for biregular graphs; defaults to the smallest feasible.
    #[arg(long)]
    pub scale: Option<usize>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    pub format: GraphFormat,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Largest order to enumerate.
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    /// Worker threads; 0 uses every core.
    #[arg(long, env = JOBS_ENV, default_value_t = 1)]
    pub jobs: usize,
    /// Required for orders that take tens of minutes.
    #[arg(long)]
    pub allow_slow: bool,
}

impl ScanArgs {
    fn check(&self) -> Result<(), CliError> {
        if self.max_n > MAX_ORDER {
            return Err(CliError::Usage(format!(
                "--max-n {} exceeds the enumeration cap of {MAX_ORDER}",
                self.max_n
            )));
        }
        if self.max_n == 0 {
            return Err(CliError::Usage("--max-n must be at least 1".into()));
        }
        if self.max_n >= SLOW_ORDER && !self.allow_slow {
            return Err(CliError::Usage(format!(
                "--max-n {} takes tens of minutes; pass --allow-slow to run it",
                self.max_n
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub scan: ScanArgs,
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub tolerances: ToleranceArgs,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub scan: ScanArgs,
    /// Only connected graphs.
    #[arg(long)]
    pub connected: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Violation(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("i/o error: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Usage(format!("csv error: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(format!("json error: {e}"))
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute(a) => cmd_compute(a, stdin, stdout),
        Command::Bounds(a) => cmd_bounds(a, stdin, stdout),
        Command::Construct(a) => cmd_construct(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout),
        Command::Enumerate(a) => cmd_enumerate(a, stdout),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Violation(msg)) => {
            let _ = writeln!(stderr, "violation: {msg}");
            EXIT_VIOLATION
        }
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))
    }
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.bytes().all(|b| b.is_ascii_digit()))
}

/// One graph for edge lists; one graph per non-empty line for graph6.
fn parse_graphs(text: &str, format: InputFormat) -> Result<Vec<Graph>, CliError> {
    let edge_list = match format {
        InputFormat::Auto => looks_like_edge_list(text),
        InputFormat::Edgelist => true,
        InputFormat::Graph6 => false,
    };
    if edge_list {
        return Ok(vec![parse_edge_list(text)?]);
    }
    let graphs = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().trim_start_matches(">>graph6<<")))
        .filter(|(_, l)| !l.is_empty())
        .map(|(line, l)| parse_graph6(l).map_err(|e| CliError::Usage(format!("line {line}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if graphs.is_empty() {
        return Err(CliError::Usage("no graphs in input".into()));
    }
    Ok(graphs)
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct ComputeRecord {
    n: usize,
    edges: usize,
    #[serde(serialize_with = "serialize_real")]
    randic: f64,
    #[serde(serialize_with = "serialize_real")]
    identity: f64,
    #[serde(serialize_with = "serialize_real")]
    residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pair_multiset: Option<Vec<[usize; 3]>>,
}

fn pairs_text(pairs: &BTreeMap<(usize, usize), usize>) -> String {
    pairs
        .iter()
        .map(|(&(i, j), &c)| format!("{i},{j}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_compute(
    args: &InputArgs,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let graphs = parse_graphs(&read_input(&args.input, stdin)?, args.format)?;
    let tolerance = args.tolerances.tolerance;
    let mut csv_out = args
        .output
        .csv
        .then(|| csv::WriterBuilder::new().from_writer(Vec::new()));
    let mut failures = Vec::new();

    for (k, g) in graphs.iter().enumerate() {
        let degrees = positive_degrees(g)?;
        let direct = direct_with_degrees(g, &degrees);
        let identity = caporossi_with_degrees(g, &degrees);
        let residual = (direct.value - identity).abs();
        if residual > tolerance {
            failures.push(format!(
                "graph {}: residual {residual:e} exceeds {tolerance:e}",
                k + 1
            ));
        }
        let mut record = ComputeRecord {
            n: g.order(),
            edges: g.size(),
            randic: direct.value,
            identity,
            residual,
            pair_multiset: Some(
                direct
                    .pair_multiset
                    .iter()
                    .map(|(&(i, j), &c)| [i, j, c])
                    .collect(),
            ),
        };
        if let Some(w) = csv_out.as_mut() {
            record.pair_multiset = None;
            w.serialize(&record)?;
        } else if args.output.json {
            writeln!(out, "{}", serde_json::to_string(&record)?)?;
        } else {
            if k > 0 {
                writeln!(out)?;
            }
            writeln!(out, "n {}", record.n)?;
            writeln!(out, "edges {}", record.edges)?;
            writeln!(out, "randic {}", format_real(record.randic))?;
            writeln!(out, "identity {}", format_real(record.identity))?;
            writeln!(out, "residual {}", format_real(record.residual))?;
            writeln!(out, "pairs {}", pairs_text(&direct.pair_multiset))?;
        }
    }
    if let Some(w) = csv_out {
        out.write_all(&w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?)?;
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Violation(failures.join("; ")))
    }
}

#[derive(Debug, Serialize)]
struct BoundsRow {
    n: usize,
    d: usize,
    #[serde(rename = "D")]
    big_d: usize,
    connected: bool,
    #[serde(serialize_with = "serialize_real")]
    randic: f64,
    #[serde(rename = "lowerBound", serialize_with = "serialize_real")]
    lower_bound: f64,
    #[serde(rename = "upperBound")]
    upper_bound: String,
    #[serde(rename = "baselineBound", serialize_with = "serialize_real")]
    baseline_bound: f64,
    #[serde(rename = "lowerSlack", serialize_with = "serialize_real")]
    lower_slack: f64,
    #[serde(rename = "upperSlack")]
    upper_slack: String,
    #[serde(rename = "lowerEquality")]
    lower_equality: bool,
    #[serde(rename = "upperEquality")]
    upper_equality: bool,
}

impl From<&BoundsReport> for BoundsRow {
    fn from(r: &BoundsReport) -> Self {
        BoundsRow {
            n: r.n,
            d: r.d,
            big_d: r.big_d,
            connected: r.connected,
            randic: r.randic,
            lower_bound: r.lower_bound,
            upper_bound: r.upper_bound.map(format_real).unwrap_or_default(),
            baseline_bound: r.baseline_bound,
            lower_slack: r.lower_slack,
            upper_slack: r.upper_slack.map(format_real).unwrap_or_default(),
            lower_equality: r.lower_equality.is_some(),
            upper_equality: r.upper_equality.is_some(),
        }
    }
}

fn bounds_text(r: &BoundsReport) -> String {
    let mut s = String::new();
    let opt = |x: Option<f64>| x.map_or_else(|| "n/a".to_string(), format_real);
    let _ = writeln!(s, "n {}", r.n);
    let _ = writeln!(s, "d {}", r.d);
    let _ = writeln!(s, "D {}", r.big_d);
    let _ = writeln!(s, "connected {}", r.connected);
    let _ = writeln!(s, "randic {}", format_real(r.randic));
    let _ = writeln!(s, "lower_bound {}", format_real(r.lower_bound));
    let _ = writeln!(s, "upper_bound {}", opt(r.upper_bound));
    if let Some(note) = &r.upper_bound_note {
        let _ = writeln!(s, "note {note}");
    }
    let _ = writeln!(s, "baseline_bound {}", format_real(r.baseline_bound));
    let _ = writeln!(s, "lower_slack {}", format_real(r.lower_slack));
    let _ = writeln!(s, "upper_slack {}", opt(r.upper_slack));
    match &r.lower_equality {
        Some(c) => {
            let _ = writeln!(
                s,
                "lower_equality ({}, {})-biregular, parts {:?} / {:?}",
                c.low_degree, c.high_degree, c.low_part, c.high_part
            );
        }
        None => {
            let _ = writeln!(s, "lower_equality none");
        }
    }
    match &r.upper_equality {
        Some(c) => {
            let links: Vec<_> = c
                .class_path
                .iter()
                .map(|l| format!("{}-{}", l.lower_vertex, l.upper_vertex))
                .collect();
            let _ = writeln!(s, "upper_equality class chain {}", links.join(" "));
        }
        None => {
            let _ = writeln!(s, "upper_equality none");
        }
    }
    s
}

fn cmd_bounds(args: &InputArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), CliError> {
    let graphs = parse_graphs(&read_input(&args.input, stdin)?, args.format)?;
    let slack = args.tolerances.slack_tolerance;
    let mut csv_out = args
        .output
        .csv
        .then(|| csv::WriterBuilder::new().from_writer(Vec::new()));
    let mut failures = Vec::new();

    for (k, g) in graphs.iter().enumerate() {
        let report = bounds_report(g)?;
        let violated = report.violations(slack);
        if !violated.is_empty() {
            failures.push(format!(
                "graph {} ({}): {} bound violated",
                k + 1,
                to_graph6(g).unwrap_or_default(),
                violated.join(", ")
            ));
        }
        if let Some(w) = csv_out.as_mut() {
            w.serialize(BoundsRow::from(&report))?;
        } else if args.output.json {
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
        } else {
            if k > 0 {
                writeln!(out)?;
            }
            write!(out, "{}", bounds_text(&report))?;
        }
    }
    if let Some(w) = csv_out {
        out.write_all(&w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?)?;
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Violation(failures.join("; ")))
    }
}

#[derive(Debug, Serialize)]
struct ConstructRecord {
    graph6: String,
    n: usize,
    degrees: BTreeMap<usize, usize>,
    #[serde(serialize_with = "serialize_real")]
    randic: f64,
    certificate: &'static str,
}

fn cmd_construct(args: &ConstructArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = match args.kind {
        ConstructKind::Biregular => {
            let scale = args
                .scale
                .unwrap_or_else(|| minimal_biregular_scale(args.d, args.big_d).max(1));
            build_biregular(args.d, args.big_d, scale)?
        }
        ConstructKind::Family => {
            if args.scale.is_some() {
                return Err(CliError::Usage(
                    "--scale applies to biregular graphs only".into(),
                ));
            }
            build_family_graph(args.d, args.big_d)?
        }
    };
    let report = bounds_report(&g)?;
    let certificate = if report.lower_equality.is_some() {
        "lower bound tight"
    } else if report.upper_equality.is_some() {
        "upper bound tight"
    } else {
        "no equality certificate"
    };
    let mut degrees = BTreeMap::new();
    for k in g.degrees() {
        *degrees.entry(k).or_insert(0) += 1;
    }
    let record = ConstructRecord {
        graph6: to_graph6(&g)?,
        n: g.order(),
        degrees,
        randic: report.randic,
        certificate,
    };
    if args.json {
        writeln!(out, "{}", serde_json::to_string(&record)?)?;
        return Ok(());
    }
    match args.format {
        GraphFormat::Graph6 => writeln!(out, "{}", record.graph6)?,
        GraphFormat::Edgelist => write!(out, "{}", to_edge_list(&g))?,
    }
    let degrees: Vec<_> = record
        .degrees
        .iter()
        .map(|(k, c)| format!("{k}^{c}"))
        .collect();
    writeln!(out, "n {}", record.n)?;
    writeln!(out, "degrees {}", degrees.join(" "))?;
    writeln!(out, "randic {}", format_real(record.randic))?;
    writeln!(out, "certificate {}", record.certificate)?;
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    args.scan.check()?;
    let report = verify_theorems(
        args.scan.max_n,
        args.scan.jobs,
        args.tolerances.tolerances(),
    )?;
    if args.json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        writeln!(
            out,
            "examined {} graphs with 2 <= n <= {} in {:.2} s",
            report.graphs_examined, report.max_n, report.elapsed_seconds
        )?;
        for c in &report.checks {
            write!(
                out,
                "{:<24} checked {:>10} failed {}",
                c.name, c.checked, c.failed
            )?;
            if let Some(g) = &c.first_counterexample {
                write!(out, " counterexample {g}")?;
            }
            writeln!(out)?;
        }
        if report.all_passed() {
            writeln!(out, "all theorems verified")?;
        }
    }
    if report.all_passed() {
        Ok(())
    } else {
        let failed: Vec<_> = report
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.name.as_str())
            .collect();
        Err(CliError::Violation(format!(
            "failed checks: {}",
            failed.join(", ")
        )))
    }
}

fn summary_text(rows: &[EnumerationSummary]) -> String {
    let mut s = format!(
        "{:>2} {:>2} {:>2} {:>9} {:>17} {:>17} {:>10} {:>10} {:>4} {:>4} {:>5} {:>5}\n",
        "n", "d", "D", "graphs", "min R", "max R", "argmin", "argmax", "lo!", "up!", "lo=", "up="
    );
    for r in rows {
        let _ = writeln!(
            s,
            "{:>2} {:>2} {:>2} {:>9} {:>17} {:>17} {:>10} {:>10} {:>4} {:>4} {:>5} {:>5}",
            r.n,
            r.d,
            r.big_d,
            r.class_count,
            format_real(r.min_r),
            format_real(r.max_r),
            r.argmin,
            r.argmax,
            r.lower_violations,
            r.upper_violations,
            r.lower_equality_witnesses,
            r.upper_equality_witnesses
        );
    }
    s
}

fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    args.scan.check()?;
    let rows = extremal_scan_with(
        args.scan.max_n,
        args.connected,
        args.scan.jobs,
        Tolerances::default(),
    )?;
    if args.output.csv {
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        for r in &rows {
            w.serialize(r)?;
        }
        out.write_all(&w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?)?;
    } else if args.output.json {
        writeln!(out, "{}", serde_json::to_string(&rows)?)?;
    } else {
        write!(out, "{}", summary_text(&rows))?;
    }
    let violations: u64 = rows
        .iter()
        .map(|r| r.lower_violations + r.upper_violations)
        .sum();
    if violations == 0 {
        Ok(())
    } else {
        Err(CliError::Violation(format!(
            "{violations} bound violations found"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_with(args: &[&str], input: &str) -> (u8, String, String) {
        let mut stdin = input.as_bytes();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("randic").chain(args.iter().copied());
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn detects_formats() {
        assert!(looks_like_edge_list("4\n0 1\n"));
        assert!(looks_like_edge_list("\n  12 \n"));
        assert!(!looks_like_edge_list("C~\n"));
        assert_eq!(
            parse_graphs("C~\nA_\n", InputFormat::Auto).unwrap().len(),
            2
        );
    }

    #[test]
    fn compute_star_edge_list() {
        let (code, out, _) = run_with(&["compute"], "4\n0 1\n0 2\n0 3\n");
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("randic 1.73205080756888"));
        assert!(out.contains("pairs 1,3:3"));
    }

    #[test]
    fn compute_rejects_malformed_input() {
        let (code, _, err) = run_with(&["compute"], "3\n0 1\n1 1\n");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("line 3"));
        let (code, _, err) = run_with(&["compute"], "3\n0 1\n");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("isolated"));
    }

    #[test]
    fn compute_csv_has_header_once() {
        let (code, out, _) = run_with(&["compute", "--csv"], "A_\nBw\n");
        assert_eq!(code, EXIT_OK);
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines[0], "n,edges,randic,identity,residual");
        assert_eq!(lines.len(), 3);
    }

    #[test]
    fn construct_errors_exit_two() {
        let (code, _, err) = run_with(&["construct", "family", "2", "4"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("odd"));
        let (code, _, _) = run_with(&["construct", "biregular", "2", "4", "--scale", "1"], "");
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn scan_caps() {
        let (code, _, err) = run_with(&["verify", "--max-n", "9"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("cap"));
        let (code, _, err) = run_with(&["enumerate", "--max-n", "8"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--allow-slow"));
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let (code, _, _) = run_with(&["frobnicate"], "");
        assert_eq!(code, EXIT_USAGE);
        let (code, out, _) = run_with(&["--help"], "");
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("compute"));
    }
}
