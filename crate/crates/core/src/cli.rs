//! Command-line front end.
//!
//! Every artifact is assembled in memory and written once, so a failed run
//! never leaves a partial file behind.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::campaigns::{self, CampaignSummary};
use crate::coherence::{convex_roof_l1_search, roof_report, CoherenceBasis};
use crate::concurrence::{
    component_concurrences, highdim_lower_bound, pure_concurrence, rank2_concurrence_2qubit,
    triangle_check_concurrence, wootters_concurrence,
};
use crate::decompositions::{example_endpoint, linspace, sweep_example, SweepPoint};
use crate::error::{Error, Result};
use crate::statefile::{load_basis, load_state, StateFile};
use crate::states::BipartiteShape;
use crate::tolerances::INEQUALITY_SLACK;

/// Environment variable consulted when `--seed` is absent.
pub const SEED_ENV: &str = "RANK2_TRIANGLE_SEED";

pub const FIGURE_HEADER: &str = "P,C_rho,sample_id,theta,gamma,phi,sum_C,diff_C,violates_upper,violates_lower";
pub const SUMMARY_HEADER: &str =
    "P,C_rho,min_sum_C,max_sum_C,min_diff_C,max_diff_C,coa_estimate,violations_upper,violations_lower";

/// Default figure grid lies on `[FIGURE_P_MIN, FIGURE_P_MAX]`; `P = 0` and
/// `P = 1` are added as pure-state rows.
pub const FIGURE_P_MIN: f64 = 0.01;
pub const FIGURE_P_MAX: f64 = 0.99;

#[derive(Debug, Parser)]
#[command(
    name = "rank2-triangle",
    version,
    about = "Triangle inequalities for coherence and concurrence of rank-2 states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// ||t11| - |t22|| <= s1 - s2 on random complex symmetric 2x2 matrices
    VerifyLemma1 {
        #[arg(long, default_value_t = 100_000, value_parser = positive)]
        samples: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// |C(Psi1) - C(Psi2)| <= C(rho) <= C(Psi1) + C(Psi2) on random rank-2 ensembles
    ///
    /// Two qubits use the exact rank-2 concurrence. Other shapes check
    /// |C1 - C2| <= sqrt(sum C_mn^2) <= the smallest decomposition average
    /// found over --remixes Haar remixes.
    VerifyTriangleConcurrence {
        /// Local dimensions, e.g. 2x2 or 3x3
        #[arg(long, default_value = "2x2", value_parser = parse_dims)]
        dims: BipartiteShape,
        /// Defaults to 100000 for two qubits and 10000 otherwise
        #[arg(long, value_parser = positive)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 100)]
        remixes: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// l1 coherence triangle chain on random pairs of mixed states
    VerifyTriangleL1 {
        /// Dimension of the system: 2, 3 or a bipartite shape such as 2x2
        #[arg(long, default_value = "2", value_parser = parse_dims)]
        dims: BipartiteShape,
        #[arg(long, default_value_t = 100_000, value_parser = positive)]
        samples: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// |C1 - C2| <= C_l1(rho) <= roof estimate <= sampled averages <= C1 + C2
    VerifyRoofSandwich {
        #[arg(long, default_value = "2", value_parser = parse_dims)]
        dims: BipartiteShape,
        #[arg(long, default_value_t = 10_000, value_parser = positive)]
        samples: usize,
        /// Decompositions searched per ensemble
        #[arg(long, default_value_t = 20, value_parser = positive)]
        remixes: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Sweep data: C(rho) against C(Psi1') + C(Psi2') over random decompositions
    #[command(name = "figure-1")]
    Figure1(FigureArgs),
    /// Sweep data: C(rho) against |C(Psi1') - C(Psi2')| over random decompositions
    #[command(name = "figure-2")]
    Figure2(FigureArgs),
    /// Evaluate the measures on a state file
    Eval {
        /// JSON state file
        #[arg(long)]
        state: PathBuf,
        /// JSON unitary mapping states into the coherence reference basis
        #[arg(long)]
        basis: Option<PathBuf>,
        /// Decompositions searched for the convex-roof l1 estimate
        #[arg(long, default_value_t = 1000, value_parser = positive)]
        samples: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, env = SEED_ENV, default_value_t = 1)]
    pub seed: u64,
    /// Write the artifact here instead of (or, for figures, besides) stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    /// Number of P values on [0.01, 0.99]
    #[arg(long, default_value_t = 101, value_parser = parse_grid)]
    pub grid: usize,
    /// Random decompositions per P
    #[arg(long, default_value_t = 200, value_parser = positive)]
    pub samples: usize,
    #[arg(long, env = SEED_ENV, default_value_t = 1)]
    pub seed: u64,
    /// Row file; the per-P summary goes next to it as <stem>_summary.<ext>.
    /// Defaults to figure-1.<ext> or figure-2.<ext>.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    VerifyLemma1,
    VerifyTriangleConcurrence,
    VerifyTriangleL1,
    VerifyRoofSandwich,
    Figure1,
    Figure2,
    Eval,
}

/// A fully resolved invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub dims: BipartiteShape,
    pub samples: usize,
    pub grid_points: usize,
    pub remixes: usize,
    pub seed: u64,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub state: Option<PathBuf>,
    pub basis: Option<PathBuf>,
}

impl RunConfig {
    fn base(command: Command, dims: BipartiteShape, samples: usize, common: CommonArgs) -> Self {
        Self {
            command,
            dims,
            samples,
            grid_points: 0,
            remixes: 0,
            seed: common.seed,
            output_path: common.output,
            format: common.format,
            state: None,
            basis: None,
        }
    }

    fn figure(command: Command, args: FigureArgs) -> Self {
        Self {
            command,
            dims: BipartiteShape::qubits(),
            samples: args.samples,
            grid_points: args.grid,
            remixes: 0,
            seed: args.seed,
            output_path: args.output,
            format: args.format,
            state: None,
            basis: None,
        }
    }
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        match cli.command {
            CliCommand::VerifyLemma1 { samples, common } => {
                Self::base(Command::VerifyLemma1, BipartiteShape::qubits(), samples, common)
            }
            CliCommand::VerifyTriangleConcurrence {
                dims,
                samples,
                remixes,
                common,
            } => {
                let samples = samples.unwrap_or(if dims.is_two_qubit() { 100_000 } else { 10_000 });
                Self {
                    remixes,
                    ..Self::base(Command::VerifyTriangleConcurrence, dims, samples, common)
                }
            }
            CliCommand::VerifyTriangleL1 { dims, samples, common } => {
                Self::base(Command::VerifyTriangleL1, dims, samples, common)
            }
            CliCommand::VerifyRoofSandwich {
                dims,
                samples,
                remixes,
                common,
            } => Self {
                remixes,
                ..Self::base(Command::VerifyRoofSandwich, dims, samples, common)
            },
            CliCommand::Figure1(args) => Self::figure(Command::Figure1, args),
            CliCommand::Figure2(args) => Self::figure(Command::Figure2, args),
            CliCommand::Eval {
                state,
                basis,
                samples,
                common,
            } => Self {
                state: Some(state),
                basis,
                ..Self::base(Command::Eval, BipartiteShape::qubits(), samples, common)
            },
        }
    }
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_grid(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 3 => Ok(n),
        Ok(_) => Err("figure grids need at least 3 points".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// `"2x3"` or `"3"`.
pub fn parse_dims(s: &str) -> std::result::Result<BipartiteShape, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    let shape = match s.split_once(['x', 'X']) {
        Some((a, b)) => BipartiteShape::new(num(a)?, num(b)?),
        None => BipartiteShape::single(num(s)?),
    };
    shape.map_err(|e| e.to_string())
}

/// Process exit status of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    Violations,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::Violations => 1,
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn io_stdout(e: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

fn f(x: f64) -> String {
    format!("{x:.16e}")
}

/// Executes `config`, printing human-readable lines to `out` and any
/// violation report to `err`.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status> {
    match config.command {
        Command::VerifyLemma1
        | Command::VerifyTriangleConcurrence
        | Command::VerifyTriangleL1
        | Command::VerifyRoofSandwich => {
            let summary = run_campaign(config)?;
            report_campaign(config, &summary, out, err)
        }
        Command::Figure1 | Command::Figure2 => run_figure(config, out),
        Command::Eval => run_eval(config, out),
    }
}

/// Runs the campaign named by a verification command.
pub fn run_campaign(config: &RunConfig) -> Result<CampaignSummary> {
    let (n, seed) = (config.samples, config.seed);
    match config.command {
        Command::VerifyLemma1 => Ok(campaigns::lemma1(n, seed)),
        Command::VerifyTriangleConcurrence => campaigns::triangle_concurrence(config.dims, n, config.remixes, seed),
        Command::VerifyTriangleL1 => Ok(campaigns::l1_triangle(config.dims, n, seed)),
        Command::VerifyRoofSandwich => Ok(campaigns::roof_sandwich(config.dims, n, config.remixes, seed)),
        other => Err(Error::Parse {
            context: "command".into(),
            message: format!("{other:?} is not a verification command"),
        }),
    }
}

fn report_campaign(
    config: &RunConfig,
    summary: &CampaignSummary,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Status> {
    let report = serde_json::to_string_pretty(summary).expect("summary serializes") + "\n";
    if let Some(path) = &config.output_path {
        let contents = match config.format {
            Format::Json => report.clone(),
            Format::Csv => format!(
                "campaign,seed,samples,violations,worst_margin\n{},{},{},{},{}\n",
                summary.name,
                summary.seed,
                summary.samples,
                summary.violations,
                f(summary.worst_margin)
            ),
        };
        write_file(path, &contents)?;
    }
    writeln!(out, "{}", summary.name).map_err(io_stdout)?;
    writeln!(out, "worst margin: {}", f(summary.worst_margin)).map_err(io_stdout)?;
    writeln!(out, "{}", summary.summary_line()).map_err(io_stdout)?;
    if summary.passed() {
        Ok(Status::Success)
    } else {
        err.write_all(report.as_bytes()).map_err(io_stdout)?;
        Ok(Status::Violations)
    }
}

/// One CSV row per `(P, sample)`.
#[derive(Debug, Clone, Serialize)]
pub struct FigureRow {
    pub p: f64,
    pub c_rho: f64,
    pub sample_id: usize,
    pub theta: f64,
    pub gamma: f64,
    pub phi: f64,
    pub sum_c: f64,
    pub diff_c: f64,
    /// The sum fell below `C(ρ)`.
    pub violates_upper: bool,
    /// The difference rose above `C(ρ)`.
    pub violates_lower: bool,
}

/// Per-`P` aggregate of the figure rows.
#[derive(Debug, Clone, Serialize)]
pub struct FigureSummaryRow {
    pub p: f64,
    pub c_rho: f64,
    pub min_sum_c: f64,
    pub max_sum_c: f64,
    pub min_diff_c: f64,
    pub max_diff_c: f64,
    pub coa_estimate: f64,
    pub violations_upper: usize,
    pub violations_lower: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct FigureData {
    pub rows: Vec<FigureRow>,
    pub summary: Vec<FigureSummaryRow>,
}

impl FigureData {
    pub fn violations(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.violates_upper || r.violates_lower)
            .count()
    }

    pub fn rows_csv(&self) -> String {
        let mut s = String::from(FIGURE_HEADER);
        s.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{},{},{}",
                f(r.p),
                f(r.c_rho),
                r.sample_id,
                f(r.theta),
                f(r.gamma),
                f(r.phi),
                f(r.sum_c),
                f(r.diff_c),
                r.violates_upper,
                r.violates_lower
            );
        }
        s
    }

    pub fn summary_csv(&self) -> String {
        let mut s = String::from(SUMMARY_HEADER);
        s.push('\n');
        for r in &self.summary {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{},{}",
                f(r.p),
                f(r.c_rho),
                f(r.min_sum_c),
                f(r.max_sum_c),
                f(r.min_diff_c),
                f(r.max_diff_c),
                f(r.coa_estimate),
                r.violations_upper,
                r.violations_lower
            );
        }
        s
    }
}

fn endpoint_summary(p: f64) -> Result<FigureSummaryRow> {
    let c = example_endpoint(p)?;
    Ok(FigureSummaryRow {
        p,
        c_rho: c,
        min_sum_c: c,
        max_sum_c: c,
        min_diff_c: c,
        max_diff_c: c,
        coa_estimate: c,
        violations_upper: 0,
        violations_lower: 0,
    })
}

/// Flattens sweep output into rows and per-`P` summaries, bracketed by the
/// pure endpoints `P = 0` and `P = 1`.
pub fn emit_figure_data(points: &[SweepPoint]) -> Result<FigureData> {
    let mut rows = Vec::new();
    let mut summary = vec![endpoint_summary(0.0)?];
    for point in points {
        let mut s = FigureSummaryRow {
            p: point.p,
            c_rho: point.c_rho,
            min_sum_c: f64::INFINITY,
            max_sum_c: f64::NEG_INFINITY,
            min_diff_c: f64::INFINITY,
            max_diff_c: f64::NEG_INFINITY,
            coa_estimate: point.coa_estimate(),
            violations_upper: 0,
            violations_lower: 0,
        };
        for (id, sample) in point.samples.iter().enumerate() {
            let sum_c = sample.concurrence_sum().unwrap_or(f64::NAN);
            let diff_c = sample.concurrence_difference().unwrap_or(f64::NAN);
            let violates_upper = sum_c.is_nan() || sum_c < point.c_rho - INEQUALITY_SLACK;
            let violates_lower = diff_c.is_nan() || diff_c > point.c_rho + INEQUALITY_SLACK;
            s.min_sum_c = s.min_sum_c.min(sum_c);
            s.max_sum_c = s.max_sum_c.max(sum_c);
            s.min_diff_c = s.min_diff_c.min(diff_c);
            s.max_diff_c = s.max_diff_c.max(diff_c);
            s.violations_upper += usize::from(violates_upper);
            s.violations_lower += usize::from(violates_lower);
            rows.push(FigureRow {
                p: point.p,
                c_rho: point.c_rho,
                sample_id: id,
                theta: sample.unitary.theta,
                gamma: sample.unitary.gamma,
                phi: sample.unitary.phi,
                sum_c,
                diff_c,
                violates_upper,
                violates_lower,
            });
        }
        summary.push(s);
    }
    summary.push(endpoint_summary(1.0)?);
    Ok(FigureData { rows, summary })
}

/// The figure sweep for `grid_points` values of `P` on `[0.01, 0.99]`.
pub fn figure_data(grid_points: usize, samples: usize, seed: u64) -> Result<FigureData> {
    let grid = linspace(FIGURE_P_MIN, FIGURE_P_MAX, grid_points);
    emit_figure_data(&sweep_example(&grid, samples, seed)?)
}

fn summary_path(rows: &Path) -> PathBuf {
    let stem = rows
        .file_stem()
        .map_or_else(|| "figure".into(), |s| s.to_string_lossy().into_owned());
    let ext = rows
        .extension()
        .map_or_else(String::new, |e| format!(".{}", e.to_string_lossy()));
    rows.with_file_name(format!("{stem}_summary{ext}"))
}

fn run_figure(config: &RunConfig, out: &mut dyn Write) -> Result<Status> {
    let data = figure_data(config.grid_points, config.samples, config.seed)?;
    let name = if config.command == Command::Figure1 {
        "figure-1"
    } else {
        "figure-2"
    };
    let path = config
        .output_path
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{name}.{}", config.format.extension())));
    match config.format {
        Format::Csv => {
            let summary = summary_path(&path);
            write_file(&path, &data.rows_csv())?;
            write_file(&summary, &data.summary_csv())?;
            writeln!(out, "wrote {} and {}", path.display(), summary.display()).map_err(io_stdout)?;
        }
        Format::Json => {
            let text = serde_json::to_string_pretty(&data).expect("figure data serializes") + "\n";
            write_file(&path, &text)?;
            writeln!(out, "wrote {}", path.display()).map_err(io_stdout)?;
        }
    }
    writeln!(out, "violations: {}/{}", data.violations(), data.rows.len()).map_err(io_stdout)?;
    Ok(Status::Success)
}

fn opt(x: Option<f64>) -> Value {
    x.map_or(Value::Null, |v| json!(v))
}

/// Measures of a state file as a flat JSON object.
pub fn evaluate_state(
    state: &StateFile,
    basis: Option<&CoherenceBasis>,
    samples: usize,
    seed: u64,
) -> Result<Map<String, Value>> {
    let shape = state.shape();
    let basis = match basis {
        Some(b) => b.clone(),
        None => CoherenceBasis::computational(shape.dim())?,
    };
    let mut m = Map::new();
    m.insert("shape".into(), json!(shape.to_string()));
    match state {
        StateFile::Pure(psi) => {
            m.insert("kind".into(), json!("pure"));
            m.insert("weight".into(), json!(psi.weight()));
            let c = if shape.is_bipartite() {
                Some(pure_concurrence(psi)?)
            } else {
                None
            };
            m.insert("concurrence".into(), opt(c));
            m.insert("l1_coherence".into(), json!(basis.l1_coherence_pure(psi)?));
        }
        StateFile::Ensemble(e) => {
            m.insert("kind".into(), json!("rank2_ensemble"));
            m.insert("p1".into(), json!(e.p1()));
            let rho = e.density()?;
            let l1 = basis.l1_coherence(&rho)?;
            let comp_l1 = [
                basis.l1_coherence_pure(&e.subnormalized(0))?,
                basis.l1_coherence_pure(&e.subnormalized(1))?,
            ];
            m.insert("l1_coherence".into(), json!(l1));
            m.insert("component_l1".into(), json!(comp_l1));
            if basis.change().is_none() {
                let search = convex_roof_l1_search(e, samples, seed)?;
                m.insert("convex_roof_l1_estimate".into(), json!(search.estimate));
                m.insert("triangle_convex_roof_l1".into(), json!(roof_report(e, &search)));
            }
            if shape.is_bipartite() {
                let comps = component_concurrences(e)?;
                m.insert("component_concurrences".into(), json!(comps));
                m.insert("concurrence_lower_bound".into(), json!(highdim_lower_bound(e)?));
                if shape.is_two_qubit() {
                    m.insert("concurrence".into(), json!(rank2_concurrence_2qubit(e)?));
                    m.insert("wootters_concurrence".into(), json!(wootters_concurrence(&rho)?));
                } else {
                    m.insert("concurrence".into(), Value::Null);
                }
                m.insert("triangle_concurrence".into(), json!(triangle_check_concurrence(e)?));
            } else {
                m.insert("concurrence".into(), Value::Null);
            }
        }
    }
    Ok(m)
}

fn run_eval(config: &RunConfig, out: &mut dyn Write) -> Result<Status> {
    let path = config.state.as_ref().ok_or_else(|| Error::Parse {
        context: "eval".into(),
        message: "--state is required".into(),
    })?;
    let state = load_state(path)?;
    let basis = config.basis.as_ref().map(load_basis).transpose()?;
    let report = evaluate_state(&state, basis.as_ref(), config.samples, config.seed)?;
    let text = match config.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Csv => {
            let mut s = String::from("quantity,value\n");
            for (k, v) in &report {
                if let Some(x) = v.as_f64() {
                    let _ = writeln!(s, "{k},{}", f(x));
                }
            }
            s
        }
    };
    match &config.output_path {
        Some(p) => write_file(p, &text)?,
        None => out.write_all(text.as_bytes()).map_err(io_stdout)?,
    }
    Ok(Status::Success)
}

/// Parses `args`, runs, and returns the process exit code (2 on usage or
/// I/O errors).
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match run(&RunConfig::from(cli), out, err) {
        Ok(status) => status.code(),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn dims_parsing() {
        assert_eq!(parse_dims("2x3").unwrap(), BipartiteShape::new(2, 3).unwrap());
        assert_eq!(parse_dims("3X3").unwrap(), BipartiteShape::new(3, 3).unwrap());
        assert_eq!(parse_dims("3").unwrap(), BipartiteShape::single(3).unwrap());
        assert!(parse_dims("1x2").is_err());
        assert!(parse_dims("axb").is_err());
    }

    #[test]
    fn figure_summary_brackets_endpoints() {
        let data = figure_data(3, 20, 1).unwrap();
        assert_eq!(data.rows.len(), 60);
        assert_eq!(data.summary.len(), 5);
        assert_eq!(data.summary[0].p, 0.0);
        assert_abs_diff_eq!(data.summary[0].c_rho, 0.5, epsilon = 1e-12);
        assert_eq!(data.summary[4].p, 1.0);
        assert_abs_diff_eq!(data.summary[4].c_rho, 1.0, epsilon = 1e-12);
        // middle grid point is P = 1/2 where C(ρ) = √7/4
        assert_abs_diff_eq!(data.summary[2].c_rho, 7f64.sqrt() / 4.0, epsilon = 1e-12);
        assert_eq!(data.violations(), 0);
        let csv = data.rows_csv();
        assert!(csv.starts_with(FIGURE_HEADER));
        assert_eq!(csv.lines().count(), 61);
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn summary_path_naming() {
        assert_eq!(
            summary_path(Path::new("out/fig.csv")),
            PathBuf::from("out/fig_summary.csv")
        );
        assert_eq!(summary_path(Path::new("fig")), PathBuf::from("fig_summary"));
    }

    #[test]
    fn usage_errors_exit_2() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(
            main_with_args(["rank2-triangle", "verify-lemma1", "--samples", "0"], &mut o, &mut e),
            2
        );
        assert_eq!(
            main_with_args(["rank2-triangle", "figure-1", "--grid", "2"], &mut o, &mut e),
            2
        );
        assert_eq!(main_with_args(["rank2-triangle", "bogus"], &mut o, &mut e), 2);
    }

    #[test]
    fn small_lemma_run() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = main_with_args(
            ["rank2-triangle", "verify-lemma1", "--samples", "500", "--seed", "7"],
            &mut o,
            &mut e,
        );
        assert_eq!(code, 0);
        assert!(String::from_utf8(o).unwrap().contains("violations: 0/500"));
        assert!(e.is_empty());
    }
}
