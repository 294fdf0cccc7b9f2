//! `sumrank`: sum-rank sphere, ball and intersection volumes from the
//! command line, plus the formula-vs-oracle verification harness.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sumrank_core::compositions::enumerate_uniform;
use sumrank_core::intersections::{
    sumrank_intersection_exact, theorem1_literal, theorem2_literal, theorem2_per_profile,
    theorem3_aggregate, theorem3_literal, IntersectionQuery,
};
use sumrank_core::oracle::{Oracle, DEFAULT_BUDGET};
use sumrank_core::report::{exit, FormulaVariant, MatchStatus, Query, Record, Report, Value};
use sumrank_core::verify;
use sumrank_core::volumes::{ball_volume, sphere_volume, weight_distribution};
use sumrank_core::{Error, Params, RankProfile, Strategy};

#[derive(Parser)]
#[command(name = "sumrank", version, about = "Exact volumes of balls and ball intersections in the sum-rank metric")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sphere or ball volume, or the full weight distribution.
    Volume(VolumeArgs),
    /// Volume of the intersection of two balls.
    Intersect(IntersectArgs),
    /// Compare every formula against brute-force enumeration on a grid.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct SpaceArgs {
    /// Field size.
    #[arg(long)]
    q: u64,
    /// Extension degree.
    #[arg(long)]
    m: u32,
    /// Block length.
    #[arg(long)]
    eta: u32,
    /// Number of blocks.
    #[arg(long)]
    ell: u32,
}

#[derive(Args, Clone)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Oracle enumeration budget (number of vectors).
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Also write the report to this file.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    /// `t,count` table; only for `volume --kind distribution`.
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Kind {
    Sphere,
    Ball,
    Distribution,
}

#[derive(Args)]
struct VolumeArgs {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long, value_enum)]
    kind: Kind,
    /// Radius (required for sphere and ball).
    #[arg(long)]
    t: Option<u32>,
    /// Also count by brute force and report the comparison.
    #[arg(long)]
    oracle: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Variant {
    Exact,
    #[value(name = "thm1-literal")]
    Thm1Literal,
    Thm2,
    Thm3,
}

#[derive(Args)]
struct IntersectArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// Radius of the first ball (gamma for thm3).
    #[arg(long)]
    u: Option<u32>,
    /// Radius of the second ball.
    #[arg(long)]
    s: Option<u32>,
    /// Per-block rank distances between the centers, e.g. `2,0`.
    #[arg(long, value_delimiter = ',', conflicts_with = "t")]
    profile: Option<Vec<u32>>,
    /// Scalar sum-rank distance between the centers.
    #[arg(long, required_unless_present = "profile")]
    t: Option<u32>,
    #[arg(long, value_enum, default_value_t = Variant::Exact)]
    variant: Variant,
    /// Also count by brute force (requires --profile).
    #[arg(long)]
    oracle: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// `default`, `none`, or comma-separated `q:m:eta:ell` cells.
    #[arg(long)]
    grid: Option<String>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    eta: Option<u32>,
    #[arg(long)]
    ell: Option<u32>,
    /// Disable the parallel evaluation path.
    #[arg(long)]
    sequential: bool,
    #[command(flatten)]
    out: OutputArgs,
}

/// A failed command with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::BudgetExceeded { .. } => exit::BUDGET_REFUSAL,
            Error::Inconsistency(_) => exit::REQUIRED_CHECK_FAILED,
            Error::InvalidArgument(_) | Error::NotPrime(_) => exit::INVALID_ARGUMENTS,
        };
        Failure { code, message: err.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: exit::INVALID_ARGUMENTS, message: message.into() }
}

fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

fn params(space: &SpaceArgs) -> Result<Params, Failure> {
    Ok(Params::new(space.q, space.m, space.eta, space.ell)?)
}

fn emit(report: &Report, out: &OutputArgs, csv: Option<String>) -> Result<(), Failure> {
    let text = match out.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
        Format::Csv => csv.ok_or_else(|| invalid("--format csv is only available for --kind distribution"))?,
    };
    print!("{text}");
    if let Some(path) = &out.output {
        fs::write(path, &text).map_err(|e| invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn cmd_volume(args: VolumeArgs) -> Result<i32, Failure> {
    let p = params(&args.space)?;
    let oracle = Oracle::new(args.out.budget);
    let mut report = Report::new(timestamp(), Some(p));
    let mut csv = None;
    match args.kind {
        Kind::Distribution => {
            let dist = weight_distribution(&p);
            let mut table = String::from("t,count\n");
            for (t, c) in dist.iter().enumerate() {
                table.push_str(&format!("{t},{c}\n"));
            }
            csv = Some(table);
            let value = Value::counts(&dist);
            let record = if args.oracle {
                let hist = oracle.weight_histogram(&p)?;
                let mut r = Record::computed(None, Query::default(), FormulaVariant::Sphere, value.clone());
                let counted: Vec<String> = hist.iter().map(ToString::to_string).collect();
                r.matched = if Value::Many(counted.clone()) == value {
                    MatchStatus::Yes
                } else {
                    MatchStatus::No
                };
                r.oracle_value = Some(counted.join(","));
                r
            } else {
                Record::computed(None, Query::default(), FormulaVariant::Sphere, value)
            };
            report.records.push(record);
        }
        Kind::Sphere | Kind::Ball => {
            let t = args.t.ok_or_else(|| invalid("--t is required for sphere and ball volumes"))?;
            let query = Query { t: Some(t), ..Query::default() };
            let (variant, value) = if args.kind == Kind::Sphere {
                (FormulaVariant::Sphere, sphere_volume(&p, t))
            } else {
                (FormulaVariant::Ball, ball_volume(&p, t))
            };
            let record = if args.oracle {
                let hist = oracle.weight_histogram(&p)?;
                let counted: u64 = if args.kind == Kind::Sphere {
                    hist.get(t as usize).copied().unwrap_or(0)
                } else {
                    hist.iter().take(t as usize + 1).sum()
                };
                Record::compared(None, query, variant, Value::count(&value), &counted.into())
            } else {
                Record::computed(None, query, variant, Value::count(&value))
            };
            report.records.push(record);
        }
    }
    emit(&report, &args.out, csv)?;
    Ok(report.exit_code())
}

fn cmd_intersect(args: IntersectArgs) -> Result<i32, Failure> {
    let p = params(&args.space)?;
    let oracle = Oracle::new(args.out.budget);
    let profile = args.profile.clone().map(RankProfile::new);
    if args.oracle && profile.is_none() {
        return Err(invalid("--oracle needs a concrete --profile"));
    }
    let need = |v: Option<u32>, name: &str| {
        v.ok_or_else(|| invalid(format!("--{name} is required for this variant")))
    };
    // Profiles to evaluate per-profile variants on.
    let profiles: Vec<RankProfile> = match (&profile, args.t) {
        (Some(prof), _) => vec![prof.clone()],
        (None, Some(t)) => {
            if t > p.max_weight() {
                return Err(invalid(format!("t = {t} exceeds ell*mu = {}", p.max_weight())));
            }
            enumerate_uniform(t, p.ell(), p.mu()).collect()
        }
        (None, None) => unreachable!("clap requires --t or --profile"),
    };
    let scalar_t = args.t.or_else(|| profile.as_ref().map(RankProfile::total)).unwrap_or(0);
    let mut report = Report::new(timestamp(), Some(p));

    let push = |report: &mut Report,
                    query: Query,
                    variant: FormulaVariant,
                    value: Value,
                    oracle_radii: Option<(u32, u32)>|
     -> Result<(), Failure> {
        let record = match (args.oracle, oracle_radii, &query.profile) {
            (true, Some((u, s)), Some(prof)) => {
                let counted = oracle.count_intersection(&p, u, s, prof)?;
                Record::compared(None, query, variant, value, &counted)
            }
            _ => Record::computed(None, query, variant, value),
        };
        report.records.push(record);
        Ok(())
    };

    match args.variant {
        Variant::Exact => {
            let (u, s) = (need(args.u, "u")?, need(args.s, "s")?);
            for prof in &profiles {
                let q = IntersectionQuery::new(p, u, s, prof.clone())?;
                let value = sumrank_intersection_exact(&q)?;
                let query = Query { u: Some(u), s: Some(s), profile: Some(prof.clone()), ..Query::default() };
                push(&mut report, query, FormulaVariant::Exact, Value::count(&value), Some((u, s)))?;
            }
        }
        Variant::Thm1Literal => {
            let (u, s) = (need(args.u, "u")?, need(args.s, "s")?);
            let value = theorem1_literal(&p, u, s, scalar_t)?;
            let query = Query { t: Some(scalar_t), u: Some(u), s: Some(s), profile: profile.clone(), ..Query::default() };
            push(&mut report, query, FormulaVariant::Thm1Literal, Value::count(&value), Some((u, s)))?;
        }
        Variant::Thm2 => {
            if scalar_t == 0 {
                return Err(invalid("thm2 needs distinct centers (distance at least 1)"));
            }
            if profile.is_none() {
                let literal = theorem2_literal(&p, scalar_t)?;
                let query = Query { delta: Some(scalar_t), ..Query::default() };
                push(&mut report, query, FormulaVariant::Thm2Literal, Value::signed(&literal), None)?;
            }
            for prof in &profiles {
                let value = theorem2_per_profile(&p, prof)?;
                let query = Query { delta: Some(scalar_t), profile: Some(prof.clone()), ..Query::default() };
                push(&mut report, query, FormulaVariant::Thm2Profile, Value::count(&value), Some((scalar_t, 1)))?;
            }
        }
        Variant::Thm3 => {
            let gamma = need(args.u, "u")?;
            if gamma > scalar_t {
                return Err(invalid(format!("thm3 needs u (gamma) <= distance {scalar_t}")));
            }
            if profile.is_none() {
                let literal = theorem3_literal(&p, gamma, scalar_t)?;
                let query = Query { gamma: Some(gamma), delta: Some(scalar_t), ..Query::default() };
                push(&mut report, query, FormulaVariant::Thm3Literal, Value::count(&literal), None)?;
            }
            for prof in &profiles {
                let value = theorem3_aggregate(&p, gamma, prof)?;
                let query = Query {
                    gamma: Some(gamma),
                    delta: Some(scalar_t),
                    profile: Some(prof.clone()),
                    ..Query::default()
                };
                push(
                    &mut report,
                    query,
                    FormulaVariant::Thm3Aggregate,
                    Value::count(&value),
                    Some((gamma, scalar_t - gamma)),
                )?;
            }
        }
    }
    emit(&report, &args.out, None)?;
    Ok(report.exit_code())
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, Failure> {
    let single = match (args.q, args.m, args.eta, args.ell) {
        (Some(q), Some(m), Some(eta), Some(ell)) => Some(Params::new(q, m, eta, ell)?),
        (None, None, None, None) => None,
        _ => return Err(invalid("give all of --q --m --eta --ell, or none of them")),
    };
    let grid = match (&args.grid, single) {
        (Some(spec), _) => {
            let mut cells = verify::parse_grid(spec)?;
            cells.extend(single);
            cells
        }
        (None, Some(p)) => vec![p],
        (None, None) => verify::default_grid(),
    };
    let strategy = if args.sequential { Strategy::Sequential } else { Strategy::default() };
    let oracle = Oracle::new(args.out.budget).with_strategy(strategy);
    let report = verify::run(&grid, oracle, strategy, &timestamp());
    emit(&report, &args.out, None)?;
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Volume(args) => cmd_volume(args),
        Command::Intersect(args) => cmd_intersect(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code as u8)
        }
    }
}
