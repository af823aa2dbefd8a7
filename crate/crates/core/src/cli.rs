//! The `lbp` command line: table generation, verification scenarios and OEIS
//! fixture checks.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 math error
//! (a zero parameter, an inapplicable route, a vanishing determinant).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{parse_rational, Rational, RationalFunction, Scalar};
use crate::cfrac::{ContinuedFraction, JFraction, SFraction, TFraction};
use crate::error::Error;
use crate::hankel_toeplitz::{extend_moments, hankel_transform, toeplitz_dets};
use crate::lbp::{CoefficientSeq, LbpFamily, MomentRoute};
use crate::oeis::{default_fixture_dir, oeis_check};
use crate::orthopoly::{OrthoFamily, OrthoKind};
use crate::report::ScenarioReport;
use crate::scenarios::{Scenario, DEFAULT_ORDER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MATH: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "lbp",
    version,
    about = "Exact tables and identity checks for constant-coefficient Laurent biorthogonal polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a table of exact values.
    Generate(GenerateArgs),
    /// Run a verification scenario.
    Verify {
        #[arg(value_parser = parse_scenario)]
        scenario: Scenario,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Compare a generator against a vendored OEIS fixture.
    OeisCheck {
        id: String,
        /// Generator name; defaults to the first one registered for the id.
        #[arg(long)]
        generator: Option<String>,
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Parser, Debug)]
struct GenerateArgs {
    #[arg(value_enum)]
    kind: Kind,
    /// A rational (`3/2`), `sym`, or a comma list cycled periodically.
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    b: String,
    /// A rational (`3/2`), `sym`, or a comma list cycled periodically.
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    c: String,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    /// Moment route for `moments`.
    #[arg(long, value_parser = parse_route, default_value = "matrix-inverse")]
    route: MomentRoute,
    /// Continued-fraction shape for `cfrac-expand`.
    #[arg(long, value_enum, default_value_t = Shape::T)]
    shape: Shape,
    /// Orthogonal family for `ortho-array`.
    #[arg(long, value_parser = parse_family, default_value = "q")]
    family: OrthoKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    LbpCoeffs,
    Moments,
    Production,
    Hankel,
    Toeplitz,
    CfracExpand,
    OrthoArray,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Shape {
    S,
    J,
    T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn parse_scenario(s: &str) -> Result<Scenario, String> {
    Scenario::from_name(s).ok_or_else(|| {
        let names: Vec<_> = Scenario::ALL.iter().map(|s| s.name()).collect();
        format!("unknown scenario `{s}`; expected one of {}", names.join(", "))
    })
}

fn parse_route(s: &str) -> Result<MomentRoute, String> {
    MomentRoute::from_name(s).ok_or_else(|| {
        let names: Vec<_> = MomentRoute::ALL.iter().map(|r| r.name()).collect();
        format!("unknown route `{s}`; expected one of {}", names.join(", "))
    })
}

fn parse_family(s: &str) -> Result<OrthoKind, String> {
    OrthoKind::from_name(s).ok_or_else(|| format!("unknown family `{s}`; expected q, q-tilde or q-hat"))
}

#[derive(Clone, Debug, PartialEq)]
enum Param {
    Sym,
    Values(Vec<Rational>),
}

impl Param {
    fn parse(s: &str) -> Result<Self, Error> {
        if s == "sym" {
            return Ok(Param::Sym);
        }
        let values = s
            .split(',')
            .map(|v| parse_rational(v).ok_or_else(|| Error::Parse(format!("`{v}` is not a rational or `sym`"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Param::Values(values))
    }

    fn seq<S: Scalar>(&self, symbol: impl Fn() -> S) -> CoefficientSeq<S> {
        match self {
            Param::Sym => CoefficientSeq::Constant(symbol()),
            Param::Values(v) if v.len() == 1 => CoefficientSeq::Constant(S::from_rational(&v[0])),
            Param::Values(v) => CoefficientSeq::Periodic(v.iter().map(S::from_rational).collect()),
        }
    }
}

enum Table {
    Sequence(Vec<String>),
    Rows(Vec<Vec<String>>),
}

fn strings<S: Scalar>(v: &[S]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn constants<S: Scalar>(family: &LbpFamily<S>, what: &'static str) -> Result<(S, S), Error> {
    family
        .constants()
        .map(|(b, c)| (b.clone(), c.clone()))
        .ok_or(Error::RouteInapplicable(what))
}

fn generate_table<S: Scalar>(args: &GenerateArgs, b: CoefficientSeq<S>, c: CoefficientSeq<S>) -> Result<Table, Error> {
    let n = args.order;
    let family = LbpFamily::new(b, c, n)?;
    Ok(match args.kind {
        Kind::LbpCoeffs => Table::Rows(family.coefficient_matrix()?.rows().iter().map(|r| strings(r)).collect()),
        Kind::Moments => Table::Sequence(strings(&family.moments(args.route)?.values)),
        Kind::Production => {
            let bigger = LbpFamily::new(family.b_seq().clone(), family.c_seq().clone(), n + 1)?;
            let p = bigger.moment_matrix()?.production_matrix()?;
            Table::Rows(p.rows().iter().map(|r| strings(r)).collect())
        }
        Kind::Hankel => {
            let h = hankel_transform(&family.moments(MomentRoute::MatrixInverse)?.values, n / 2)?;
            Table::Sequence(strings(&h))
        }
        Kind::Toeplitz => {
            let (_, c) = constants(&family, "toeplitz")?;
            let n_max = n / 2;
            let mu = LbpFamily::new(family.b_seq().clone(), family.c_seq().clone(), n_max + 2)?
                .moments(MomentRoute::MatrixInverse)?;
            let bm = extend_moments(&mu.values, &c, n_max)?;
            let (t, tp) = toeplitz_dets(&bm, n_max)?;
            Table::Rows(vec![strings(&t), strings(&tp)])
        }
        Kind::CfracExpand => {
            let (b, c) = constants(&family, "cfrac-expand")?;
            let series = match args.shape {
                Shape::S => SFraction::lbp(&b, &c, n).expand(n)?,
                Shape::J => JFraction::lbp(&b, &c, JFraction::<S>::levels_for(n)).expand(n)?,
                Shape::T => TFraction::constant(&b, &c, n).expand(n)?,
            };
            Table::Sequence(strings(series.coeffs()))
        }
        Kind::OrthoArray => {
            let (b, c) = constants(&family, "ortho-array")?;
            let fam = OrthoFamily::new(args.family, b, c, n)?;
            Table::Rows(fam.array.matrix().rows().iter().map(|r| strings(r)).collect())
        }
    })
}

fn kind_name(kind: Kind) -> String {
    kind.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn render(args: &GenerateArgs, table: Table) -> String {
    match args.format {
        TableFormat::Csv => match table {
            Table::Sequence(v) => format!("{}\n", v.join(",")),
            Table::Rows(rows) => rows.iter().map(|r| format!("{}\n", r.join(","))).collect(),
        },
        TableFormat::Json => {
            let mut params = json!({ "b": args.b, "c": args.c });
            match args.kind {
                Kind::Moments => params["route"] = json!(args.route.name()),
                Kind::CfracExpand => params["shape"] = json!(format!("{:?}", args.shape).to_lowercase()),
                Kind::OrthoArray => params["family"] = json!(args.family.name()),
                _ => {}
            }
            let data = match table {
                Table::Sequence(v) => json!(v),
                Table::Rows(r) => json!(r),
            };
            let doc = json!({ "kind": kind_name(args.kind), "params": params, "order": args.order, "data": data });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("json value serializes")
            )
        }
    }
}

fn report_out(report: &ScenarioReport, format: ReportFormat, out: &mut dyn Write) -> std::io::Result<i32> {
    match format {
        ReportFormat::Text => writeln!(out, "{report}")?,
        ReportFormat::Json => writeln!(out, "{}", report.to_json())?,
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn math_error(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    match e {
        Error::Parse(_) | Error::Fixture(_) => EXIT_USAGE,
        _ => EXIT_MATH,
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Generate(args) => {
            let (b, c) = match (Param::parse(&args.b), Param::parse(&args.c)) {
                (Ok(b), Ok(c)) => (b, c),
                (Err(e), _) | (_, Err(e)) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            };
            let table = if b == Param::Sym || c == Param::Sym {
                generate_table::<RationalFunction>(&args, b.seq(RationalFunction::b), c.seq(RationalFunction::c))
            } else {
                generate_table::<Rational>(&args, b.seq(|| unreachable!()), c.seq(|| unreachable!()))
            };
            match table {
                Ok(t) => write!(out, "{}", render(&args, t)).map(|_| EXIT_OK),
                Err(e) => return math_error(err, &e),
            }
        }
        Command::Verify {
            scenario,
            order,
            format,
        } => report_out(&scenario.run(order), format, out),
        Command::OeisCheck {
            id,
            generator,
            fixtures,
            format,
        } => {
            let dir = fixtures.unwrap_or_else(default_fixture_dir);
            match oeis_check(&dir, &id, generator.as_deref()) {
                Ok(report) => report_out(&report, format, out),
                Err(e) => return math_error(err, &e),
            }
        }
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_FAILED
    })
}
