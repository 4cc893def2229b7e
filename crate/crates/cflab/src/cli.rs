//! Command-line surface: generate graphs, run colorings, verify them,
//! compute exact chromatic numbers, and drive experiment sweeps.
//!
//! The entry point is [`run`], which takes the argument vector and two
//! output streams and returns the process exit code, so the whole surface
//! is testable in-process.  Exit codes: `0` success, `1` algorithm or data
//! failure (with a one-line `{"schema":1,...}` JSON object on stderr),
//! `2` usage error.  All randomness flows through `--seed`; identical
//! invocations produce byte-identical output.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::clawfree_cfcn::{color_clawfree_cfcn, CfcnOutcome, CfcnParams};
use crate::clawfree_cfon::color_clawfree_cfon;
use crate::coloring::Coloring;
use crate::generate::{line_graph, random_geometric, GraphFamily};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::io::{
    parse_coloring, parse_graph, parse_hypergraph, sniff_kind, write_coloring, write_graph,
    FileKind,
};
use crate::layered::{run_lab, LayeredParams};
use crate::mindeg::{color_mindeg_cfon, MinDegParams};
use crate::oracle::{
    chi_cf_exact, chi_cn_exact, chi_cn_witness, chi_on_exact, chi_on_witness, verify, VerifyMode,
};

#[derive(Parser)]
#[command(
    name = "cflab",
    version,
    about = "Conflict-free coloring laboratory",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph from a named family and write it in `p edge` format.
    Gen(GenArgs),
    /// Color a graph and optionally emit a certificate JSON.
    Color(ColorArgs),
    /// Check a coloring; exit 0 iff every neighborhood is served.
    Verify(VerifyArgs),
    /// Print an exact conflict-free chromatic number.
    Chi(ChiArgs),
    /// Generate a layered weighted instance and print its diagnostics.
    Lab(LabArgs),
    /// Run a coloring algorithm over ranges of n and seeds; emit CSV.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Complete,
    Star,
    Path,
    Cycle,
    SubdividedComplete,
    Gnp,
    Geometric,
}

impl FamilyArg {
    fn label(self) -> &'static str {
        match self {
            FamilyArg::Complete => "complete",
            FamilyArg::Star => "star",
            FamilyArg::Path => "path",
            FamilyArg::Cycle => "cycle",
            FamilyArg::SubdividedComplete => "subdivided-complete",
            FamilyArg::Gnp => "gnp",
            FamilyArg::Geometric => "geometric",
        }
    }

    fn build(self, n: usize, p: f64, radius: f64, seed: u64) -> Result<Graph, CliFailure> {
        let g = match self {
            FamilyArg::Complete => GraphFamily::Complete { n }.generate(),
            FamilyArg::Star => GraphFamily::Star { leaves: n }.generate(),
            FamilyArg::Path => GraphFamily::Path { n }.generate(),
            FamilyArg::Cycle => GraphFamily::Cycle { n }.generate(),
            FamilyArg::SubdividedComplete => GraphFamily::SubdividedComplete { n }.generate(),
            FamilyArg::Gnp => GraphFamily::Gnp { n, p, seed }.generate(),
            FamilyArg::Geometric => random_geometric(n, radius, seed),
        };
        g.map_err(fail)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    CfonClawfree,
    CfcnClawfree,
    Mindeg,
    ExactOn,
    ExactCn,
}

impl AlgoArg {
    fn label(self) -> &'static str {
        match self {
            AlgoArg::CfonClawfree => "cfon-clawfree",
            AlgoArg::CfcnClawfree => "cfcn-clawfree",
            AlgoArg::Mindeg => "mindeg",
            AlgoArg::ExactOn => "exact-on",
            AlgoArg::ExactCn => "exact-cn",
        }
    }

    /// Which neighborhoods the produced coloring is expected to serve.
    fn verify_mode(self) -> VerifyMode {
        match self {
            AlgoArg::CfonClawfree | AlgoArg::Mindeg | AlgoArg::ExactOn => VerifyMode::Open,
            AlgoArg::CfcnClawfree | AlgoArg::ExactCn => VerifyMode::Closed,
        }
    }
}

#[derive(clap::Args)]
struct GenArgs {
    /// Graph family; `--n` is its size parameter (leaves for star,
    /// vertices otherwise, base clique size for subdivided-complete).
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    /// Edge probability for gnp.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Connection radius for geometric.
    #[arg(long, default_value_t = 0.3)]
    radius: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Replace the generated graph by its line graph.
    #[arg(long)]
    line: bool,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ColorArgs {
    /// Input graph file.
    input: PathBuf,
    #[arg(long, value_enum)]
    algo: AlgoArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Star-freeness parameter for the claw-free algorithms
    /// (default: claw number + 1).
    #[arg(long)]
    k: Option<usize>,
    /// Constant: progress rate for cfcn-clawfree (default 0.02), degree
    /// scale for mindeg (default 1).
    #[arg(long)]
    c: Option<f64>,
    /// Slack exponent for mindeg.
    #[arg(long, default_value_t = 0.0)]
    eps: f64,
    /// Coloring output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Write the certificate JSON here.
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Input graph file.
    graph: PathBuf,
    /// Coloring file to check.
    coloring: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Open,
    Closed,
}

#[derive(clap::Args)]
struct ChiArgs {
    /// on/cn take a graph; cf takes a hypergraph, or a graph whose edge set
    /// is read as the hypergraph.
    #[arg(long, value_enum)]
    which: WhichChi,
    input: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichChi {
    On,
    Cn,
    Cf,
}

#[derive(clap::Args)]
struct LabArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    eps: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Relative degree-deviation threshold for flagging.
    #[arg(long, default_value_t = 0.25)]
    alpha: f64,
    /// Palette sizes to probe with random colorings.
    #[arg(long, value_delimiter = ',', default_values_t = vec![1, 2, 3])]
    r: Vec<usize>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Also write the probe rows as CSV to this file.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// JSON report file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct SweepArgs {
    /// Comma-separated families to sweep.
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    family: Vec<FamilyArg>,
    /// Vertex-parameter range `a:b` or `a:b:step` (inclusive).
    #[arg(long, value_parser = parse_sweep_range)]
    n: SweepRange,
    /// Seed range `a:b` or `a:b:step` (inclusive).
    #[arg(long, value_parser = parse_sweep_range, default_value = "0:0")]
    seeds: SweepRange,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0.3)]
    radius: f64,
    /// Apply the line-graph transform to every generated instance.
    #[arg(long)]
    line: bool,
    #[arg(long, value_enum)]
    algo: AlgoArg,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    eps: f64,
    /// CSV output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Debug)]
struct SweepRange {
    lo: usize,
    hi: usize,
    step: usize,
}

impl SweepRange {
    fn values(&self) -> impl Iterator<Item = usize> + '_ {
        (self.lo..=self.hi).step_by(self.step)
    }
}

fn parse_sweep_range(s: &str) -> Result<SweepRange, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let parse = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| format!("range component `{t}` is not a non-negative integer"))
    };
    let (lo, hi, step) = match parts.as_slice() {
        [a] => (parse(a)?, parse(a)?, 1),
        [a, b] => (parse(a)?, parse(b)?, 1),
        [a, b, s] => (parse(a)?, parse(b)?, parse(s)?),
        _ => return Err(format!("`{s}` is not of the form a, a:b, or a:b:step")),
    };
    if step == 0 {
        return Err("range step must be positive".into());
    }
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok(SweepRange { lo, hi, step })
}

/// A failure that maps to exit code 1 and a structured JSON line on stderr.
struct CliFailure {
    message: String,
    detail: Option<serde_json::Value>,
}

fn fail(e: impl Display) -> CliFailure {
    CliFailure {
        message: e.to_string(),
        detail: None,
    }
}

/// Parses and runs the argument vector against the provided streams and
/// returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let target: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    match dispatch(cli.cmd, stdout) {
        Ok(()) => 0,
        Err(f) => {
            let mut obj = json!({ "schema": 1, "error": f.message });
            if let Some(detail) = f.detail {
                obj["detail"] = detail;
            }
            let _ = writeln!(stderr, "{obj}");
            1
        }
    }
}

fn dispatch(cmd: Cmd, out: &mut dyn Write) -> Result<(), CliFailure> {
    match cmd {
        Cmd::Gen(a) => cmd_gen(a, out),
        Cmd::Color(a) => cmd_color(a, out),
        Cmd::Verify(a) => cmd_verify(a, out),
        Cmd::Chi(a) => cmd_chi(a, out),
        Cmd::Lab(a) => cmd_lab(a, out),
        Cmd::Sweep(a) => cmd_sweep(a, out),
    }
}

fn read_file(path: &Path) -> Result<String, CliFailure> {
    std::fs::read_to_string(path)
        .map_err(|e| fail(format!("cannot read {}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliFailure> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| fail(format!("cannot write {}: {e}", p.display()))),
        None => {
            out.write_all(text.as_bytes())
                .map_err(|e| fail(format!("stdout: {e}")))
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, CliFailure> {
    let text = read_file(path)?;
    match sniff_kind(&text) {
        Some(FileKind::Graph) | None => parse_graph(&text).map_err(fail),
        Some(other) => Err(fail(format!(
            "{} holds a {other:?} file, expected a graph",
            path.display()
        ))),
    }
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> Result<(), CliFailure> {
    let mut g = a.family.build(a.n, a.p, a.radius, a.seed)?;
    if a.line {
        g = line_graph(&g);
    }
    write_output(a.output.as_deref(), &write_graph(&g), out)
}

/// Runs one algorithm on one graph; returns the coloring and its
/// certificate JSON (always carrying `schema` and `algo` fields).
fn run_algo(
    g: &Graph,
    algo: AlgoArg,
    seed: u64,
    k: Option<usize>,
    c: Option<f64>,
    eps: f64,
) -> Result<(Coloring, serde_json::Value), CliFailure> {
    match algo {
        AlgoArg::CfonClawfree => {
            let (coloring, cert) = color_clawfree_cfon(g, k, seed, true).map_err(fail)?;
            let value = json!({
                "schema": 1,
                "algo": "cfon-clawfree",
                "certificate": serde_json::to_value(&cert).map_err(fail)?,
            });
            Ok((coloring, value))
        }
        AlgoArg::CfcnClawfree => {
            let k = k.unwrap_or_else(|| (g.claw_number() + 1).max(2));
            let mut params = CfcnParams::new(k, seed).map_err(fail)?;
            if let Some(c) = c {
                if !c.is_finite() || c <= 0.0 {
                    return Err(fail(format!("c must be a finite real > 0, got {c}")));
                }
                params.c = c;
            }
            let outcome = color_clawfree_cfcn(g, &params).map_err(fail)?;
            let value = json!({
                "schema": 1,
                "algo": "cfcn-clawfree",
                "k": k,
                "rounds_used": outcome.rounds_used,
                "colors_used": outcome.colors_used,
                "leftover_color": outcome.leftover_color,
                "k_warning": outcome.k_warning,
                "dw_violations": outcome.dw_violations,
                "color_bound": CfcnOutcome::color_bound(g.n(), &params),
                "mean_satisfied_fraction": outcome.mean_satisfied_fraction(),
                "history": serde_json::to_value(&outcome.history).map_err(fail)?,
            });
            Ok((outcome.coloring, value))
        }
        AlgoArg::Mindeg => {
            let params = MinDegParams::new(c.unwrap_or(1.0), eps, seed).map_err(fail)?;
            let outcome = color_mindeg_cfon(g, &params).map_err(fail)?;
            let value = json!({
                "schema": 1,
                "algo": "mindeg",
                "window_set_size": outcome.a.len(),
                "palette_size": outcome.palette_size,
                "leftover_color": outcome.leftover_color,
                "colors_used": outcome.colors_used,
                "used_fallback": outcome.used_fallback,
            });
            Ok((outcome.coloring, value))
        }
        AlgoArg::ExactOn => {
            let (k, coloring) = chi_on_witness(g).map_err(fail)?;
            Ok((coloring, json!({ "schema": 1, "algo": "exact-on", "colors": k })))
        }
        AlgoArg::ExactCn => {
            let (k, coloring) = chi_cn_witness(g);
            Ok((coloring, json!({ "schema": 1, "algo": "exact-cn", "colors": k })))
        }
    }
}

fn cmd_color(a: ColorArgs, out: &mut dyn Write) -> Result<(), CliFailure> {
    let g = load_graph(&a.input)?;
    let (coloring, cert) = run_algo(&g, a.algo, a.seed, a.k, a.c, a.eps)?;
    if let Some(path) = &a.cert {
        let text = format!("{}\n", serde_json::to_string_pretty(&cert).map_err(fail)?);
        std::fs::write(path, text)
            .map_err(|e| fail(format!("cannot write {}: {e}", path.display())))?;
    }
    write_output(a.output.as_deref(), &write_coloring(&coloring), out)
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<(), CliFailure> {
    let g = load_graph(&a.graph)?;
    let f = parse_coloring(&read_file(&a.coloring)?).map_err(fail)?;
    if f.len() != g.n() {
        return Err(fail(format!(
            "coloring has {} vertices but the graph has {}",
            f.len(),
            g.n()
        )));
    }
    let mode = match a.mode {
        ModeArg::Open => VerifyMode::Open,
        ModeArg::Closed => VerifyMode::Closed,
    };
    let report = verify(&g, &f, mode).map_err(fail)?;
    if report.ok {
        writeln!(out, "ok").map_err(|e| fail(format!("stdout: {e}")))
    } else {
        Err(CliFailure {
            message: format!(
                "coloring violates the {} condition",
                match mode {
                    VerifyMode::Open => "open-neighborhood",
                    VerifyMode::Closed => "closed-neighborhood",
                }
            ),
            detail: Some(json!({ "violating": report.violating })),
        })
    }
}

fn cmd_chi(a: ChiArgs, out: &mut dyn Write) -> Result<(), CliFailure> {
    let text = read_file(&a.input)?;
    let value = match a.which {
        WhichChi::On => chi_on_exact(&parse_graph(&text).map_err(fail)?).map_err(fail)?,
        WhichChi::Cn => chi_cn_exact(&parse_graph(&text).map_err(fail)?),
        WhichChi::Cf => {
            let h = match sniff_kind(&text) {
                Some(FileKind::Hypergraph) => parse_hypergraph(&text).map_err(fail)?,
                _ => {
                    let g = parse_graph(&text).map_err(fail)?;
                    let edges = g.edges().into_iter().map(|(u, v)| vec![u, v]).collect();
                    Hypergraph::new(g.n(), edges).map_err(fail)?
                }
            };
            chi_cf_exact(&h)
        }
    };
    writeln!(out, "{value}").map_err(|e| fail(format!("stdout: {e}")))
}

fn cmd_lab(a: LabArgs, out: &mut dyn Write) -> Result<(), CliFailure> {
    let params = LayeredParams::new(a.n, a.eps, a.seed).map_err(fail)?;
    if a.r.is_empty() || a.r.contains(&0) {
        return Err(fail("probe palette sizes must be positive"));
    }
    if a.trials == 0 {
        return Err(fail("trials must be positive"));
    }
    let report = run_lab(&params, a.alpha, &a.r, a.trials).map_err(fail)?;
    if let Some(path) = &a.csv {
        let mut csv = String::from("r,trials,min_uncovered,mean_uncovered,exact_chi_cn,r_colors_reference\n");
        for p in &report.probes {
            csv.push_str(&format!(
                "{},{},{},{},{},{}\n",
                p.r,
                p.trials,
                p.min_uncovered,
                p.mean_uncovered,
                p.exact_chi_cn.map_or(String::new(), |v| v.to_string()),
                p.r_colors_reference.map_or(String::new(), |v| v.to_string()),
            ));
        }
        std::fs::write(path, csv)
            .map_err(|e| fail(format!("cannot write {}: {e}", path.display())))?;
    }
    let text = format!("{}\n", serde_json::to_string_pretty(&report).map_err(fail)?);
    write_output(a.output.as_deref(), &text, out)
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cmd_sweep(a: SweepArgs, out: &mut dyn Write) -> Result<(), CliFailure> {
    let mut rows = String::from("family,n,seed,algo,colors,verified,error\n");
    for &family in &a.family {
        for n in a.n.values() {
            for seed in a.seeds.values() {
                let cell = sweep_cell(&a, family, n, seed as u64);
                let (colors, verified, error) = match cell {
                    Ok((colors, verified)) => (colors.to_string(), verified.to_string(), String::new()),
                    Err(f) => (String::new(), String::new(), f.message),
                };
                rows.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    family.label(),
                    n,
                    seed,
                    a.algo.label(),
                    colors,
                    verified,
                    csv_escape(&error),
                ));
            }
        }
    }
    write_output(a.output.as_deref(), &rows, out)
}

/// One sweep cell: generate, color, verify. Errors are reported per-cell,
/// never aborting the sweep.
fn sweep_cell(
    a: &SweepArgs,
    family: FamilyArg,
    n: usize,
    seed: u64,
) -> Result<(usize, bool), CliFailure> {
    let mut g = family.build(n, a.p, a.radius, seed)?;
    if a.line {
        g = line_graph(&g);
    }
    let (coloring, _) = run_algo(&g, a.algo, seed, a.k, a.c, a.eps)?;
    let report = verify(&g, &coloring, a.algo.verify_mode()).map_err(fail)?;
    Ok((coloring.num_distinct(), report.ok))
}
