//! The `subdivide` command line.

use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use subdivide_core::analysis::{
    bell_intervals, continuity_intervals_with_width, contractivity_norm, generation_degree,
    gibbs_intervals_with_width, reproduction_degree, shape_report, support,
};
use subdivide_core::io::{
    bell_document, continuity_document, degree_document, gibbs_document, mask_document,
    parse_points_csv, shape_document, support_document, write_curve, write_grid, ReportRow,
};
use subdivide_core::rational::{format_significant, parse_rational, pow2, to_literal};
use subdivide_core::refine::{
    basic_limit_samples, refine_curve_opts, refine_surface_opts, RefinedGrid, RefinedPolygon,
};
use subdivide_core::{
    AnalysisReportDocument, ControlNet, Error, Format, NumericMode, Polygon, Rational,
    RefineOptions, SchemeSpec, Topology,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "subdivide",
    version,
    about = "Exact analysis and refinement for the combined (2n+2)-point subdivision family"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    /// Width of the enclosures of irrational interval endpoints.
    #[arg(long, global = true, value_parser = positive_rational, default_value = "1e-12")]
    pub tolerance: Rational,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

impl From<ReportFormat> for Format {
    fn from(f: ReportFormat) -> Format {
        match f {
            ReportFormat::Json => Format::Json,
            ReportFormat::Text => Format::Text,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Double,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the refinement rules and symbol coefficients.
    Mask {
        #[arg(long)]
        n: u32,
        /// Fixed tension; omit for the rules as polynomials in alpha.
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        alpha: Option<Rational>,
    },
    /// Analyse the family.
    #[command(subcommand)]
    Analyze(Analysis),
    /// Refine a control net read from a points file.
    #[command(subcommand)]
    Refine(RefineTarget),
    /// Sample the basic limit function by refining a delta.
    Basis {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        alpha: Rational,
        #[arg(long)]
        levels: u32,
        /// Output file; `.csv` or `.svg`.
        #[arg(long)]
        output: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum Analysis {
    /// Smoothness ranges from contractive difference schemes.
    Continuity {
        #[arg(long)]
        n: u32,
        /// Number of difference-scheme steps combined in the norm.
        #[arg(long = "L", default_value_t = 1)]
        levels: u32,
        /// Test a single tension value instead of solving for ranges.
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        alpha: Option<Rational>,
    },
    /// Degree of polynomial generation.
    Generation {
        #[arg(long)]
        n: u32,
    },
    /// Degree of polynomial reproduction.
    Reproduction {
        #[arg(long)]
        n: u32,
    },
    /// Ranges without overshoot next to a jump.
    Gibbs {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Ranges with a bell-shaped mask.
    Bell {
        #[arg(long)]
        n: u32,
    },
    /// Ranges preserving monotonicity and convexity.
    Shape {
        #[arg(long)]
        n: u32,
    },
    /// Support of the basic limit function.
    Support {
        #[arg(long)]
        n: u32,
        /// Also list the nonzero index range after these many levels.
        #[arg(long, default_value_t = 4)]
        levels: u32,
    },
}

#[derive(Debug, Args)]
pub struct RefineArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    pub alpha: Rational,
    #[arg(long, default_value_t = 1)]
    pub levels: u32,
    /// Points file (`x,y[,z]` CSV).
    #[arg(long)]
    pub input: String,
    /// Output file; the format follows the extension.
    #[arg(long)]
    pub output: String,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
}

#[derive(Debug, Subcommand)]
pub enum RefineTarget {
    /// Refine a polygon; writes `.csv` or `.svg`.
    Curve(RefineArgs),
    /// Refine a tensor-product grid; writes `.csv` or `.obj`.
    Surface(RefineArgs),
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn positive_rational(s: &str) -> Result<Rational, String> {
    let r = rational(s)?;
    if r > Rational::from_integer(0.into()) {
        Ok(r)
    } else {
        Err(format!("'{s}' must be positive"))
    }
}

/// A failure with its exit code and a one-line message.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::UnsupportedFormat(_) => EXIT_USAGE,
            Error::BadIndex(_)
            | Error::NonDivisible { .. }
            | Error::ZeroPolynomial
            | Error::TooFewPoints { .. }
            | Error::NonNumericAlpha => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn failure(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

/// Runs the command line and returns the process exit code.
pub fn run_cli<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            if stdout.write_all(text.as_bytes()).is_err() {
                return EXIT_IO;
            }
            EXIT_OK
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

/// Executes a parsed command, returning what goes to standard output.
pub fn execute(cli: &Cli) -> Result<String, Failure> {
    let format = Format::from(cli.format);
    match &cli.command {
        Command::Mask { n, alpha } => Ok(mask_document(*n, alpha.as_ref())?.render(format)?),
        Command::Analyze(a) => Ok(analysis_document(a, &cli.tolerance)?.render(format)?),
        Command::Refine(target) => refine(target),
        Command::Basis {
            n,
            alpha,
            levels,
            output,
        } => basis(*n, alpha, *levels, output),
    }
}

fn analysis_document(a: &Analysis, width: &Rational) -> Result<AnalysisReportDocument, Failure> {
    Ok(match a {
        Analysis::Continuity {
            n,
            levels,
            alpha: None,
        } => continuity_document(&continuity_intervals_with_width(*n, *levels, width)?),
        Analysis::Continuity {
            n,
            levels,
            alpha: Some(alpha),
        } => continuity_at(*n, *levels, alpha)?,
        Analysis::Generation { n } => degree_document(*n, &generation_degree(*n)?),
        Analysis::Reproduction { n } => degree_document(*n, &reproduction_degree(*n)?),
        Analysis::Gibbs { n, k } => gibbs_document(&gibbs_intervals_with_width(*n, *k, width)?),
        Analysis::Bell { n } => bell_document(&bell_intervals(*n)?),
        Analysis::Shape { n } => shape_document(&shape_report(*n)?),
        Analysis::Support { n, levels } => {
            let ks: Vec<u32> = (1..=*levels).collect();
            support_document(&support(*n)?, &ks)
        }
    })
}

/// Norms of the difference schemes at one α, order by order.
fn continuity_at(n: u32, levels: u32, alpha: &Rational) -> Result<AnalysisReportDocument, Failure> {
    if levels == 0 {
        return Err(Error::BadIndex("L must be at least 1".into()).into());
    }
    let mut doc = AnalysisReportDocument::new(n, "continuity");
    doc.parameters.insert("L".into(), levels as i64);
    let one = Rational::from_integer(1.into());
    let mut order = None;
    let mut broken = false;
    for j in 0..=4 * n + 1 {
        let Some(norm) = contractivity_norm(n, levels, j, alpha)? else {
            break;
        };
        let contractive = norm < one;
        if contractive && !broken {
            order = Some(j);
        }
        broken |= !contractive;
        doc.rows.push(ReportRow {
            label: format!("C{j}"),
            intervals: Vec::new(),
            value: Some(format!("norm={}", format_significant(&norm, 10))),
            note: Some(
                if contractive {
                    "contractive"
                } else {
                    "not contractive"
                }
                .into(),
            ),
        });
    }
    doc.rows.push(ReportRow {
        label: format!("alpha={}", to_literal(alpha)),
        intervals: Vec::new(),
        value: Some(order.map_or("none".to_string(), |o| format!("C{o}"))),
        note: None,
    });
    Ok(doc)
}

fn output_format(path: &str) -> Result<Format, Failure> {
    Format::from_path(path).ok_or_else(|| {
        failure(
            EXIT_USAGE,
            format!("cannot infer an output format from '{path}'"),
        )
    })
}

fn read_input(path: &str) -> Result<ControlNet, Failure> {
    let text = fs::read_to_string(path).map_err(|e| failure(EXIT_PARSE, format!("{path}: {e}")))?;
    parse_points_csv(&text).map_err(|e| failure(EXIT_PARSE, format!("{path}: {e}")))
}

fn write_output(path: &str, content: &str) -> Result<String, Failure> {
    fs::write(path, content).map_err(|e| failure(EXIT_IO, format!("{path}: {e}")))?;
    Ok(String::new())
}

fn refine(target: &RefineTarget) -> Result<String, Failure> {
    let (args, want_surface) = match target {
        RefineTarget::Curve(a) => (a, false),
        RefineTarget::Surface(a) => (a, true),
    };
    let spec = SchemeSpec::with_alpha(args.n, args.alpha.clone())?;
    let opts = RefineOptions {
        levels: args.levels,
        mode: match args.mode {
            Mode::Exact => NumericMode::Exact,
            Mode::Double => NumericMode::Double,
        },
    };
    let format = output_format(&args.output)?;
    let content = match (read_input(&args.input)?, want_surface) {
        (ControlNet::Curve(p), false) => match refine_curve_opts(&p, &spec, opts)? {
            RefinedPolygon::Exact(q) => write_curve(&q, format)?,
            RefinedPolygon::Double(q) => write_curve(&q, format)?,
        },
        (ControlNet::Surface(g), true) => match refine_surface_opts(&g, &spec, opts)? {
            RefinedGrid::Exact(q) => write_grid(&q, format)?,
            RefinedGrid::Double(q) => write_grid(&q, format)?,
        },
        (ControlNet::Curve(_), true) => {
            return Err(failure(
                EXIT_PARSE,
                format!("{}: expected a '# grid: RxC' surface file", args.input),
            ))
        }
        (ControlNet::Surface(_), false) => {
            return Err(failure(
                EXIT_PARSE,
                format!("{}: expected a curve, found a grid", args.input),
            ))
        }
    };
    write_output(&args.output, &content)
}

fn basis(n: u32, alpha: &Rational, levels: u32, output: &str) -> Result<String, Failure> {
    let format = output_format(output)?;
    let samples = basic_limit_samples(n, alpha, levels)?;
    let scale = pow2(levels);
    let points = samples
        .iter()
        .map(|(i, v)| vec![Rational::from_integer((*i).into()) / &scale, v.clone()])
        .collect();
    let curve = Polygon::new(points, Topology::Open);
    write_output(output, &write_curve(&curve, format)?)
}
