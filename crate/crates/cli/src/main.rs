//! `hesse`: exact verification suites for the Hesse pencil varieties.
//!
//! Exit codes: 0 when no check fails, 1 when a check fails, 2 on usage
//! errors (unknown flags, malformed polynomials, bad field specs).

mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hesse_core::forms::{BinaryQuartic, TernaryCubic};
use hesse_core::hessegeom::parse_points;
use hesse_core::multidegree::MdVariety;
use hesse_core::report::Report;
use hesse_core::FieldSpec;
use suites::{Ctx, PencilInput};

#[derive(Parser)]
#[command(
    name = "hesse",
    version,
    about = "Exact-arithmetic verification of Hesse pencil varieties: invariants, membership, ranks, orbits, configurations and multidegrees"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Base field: q | fp:<p> | qw | fpw:<p>
    #[arg(long, global = true, default_value = "q")]
    field: String,

    /// Seed for all randomized, reproducible checks
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Pencil generators "f;g": two cubics in x,y,z or two quartics in x,y
    #[arg(long, global = true)]
    pencil: Option<String>,

    /// Points file: one point per line, three coordinates (integers or
    /// n/d rationals), # comments
    #[arg(long, global = true)]
    points: Option<PathBuf>,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum VarietyArg {
    H3,
    H8,
}

#[derive(Subcommand)]
enum Cmd {
    /// Symbolic identity certificates for R, Rbar, the n-vector and the
    /// Hessian closure property, plus recorded table discrepancies
    Identities,
    /// Membership of pencils in N and H3
    Membership,
    /// Jacobian ranks (smooth and singular) and through-point kernels
    Rank,
    /// Orbit catalog: dimensions, ranks, singular locus
    Orbits,
    /// The eight explicit degeneration families and their limits
    Degenerations,
    /// Hesse configurations: figures, counts, induced pencils
    Configs,
    /// The fifteen triangles through six general points
    Triangles,
    /// Multidegree coefficients and totals
    Multidegree {
        #[arg(long, value_enum, default_value_t = VarietyArg::H8)]
        variety: VarietyArg,
    },
    /// Decomposition of the third wedge of the cubic space
    Decompose,
    /// Run every suite
    Report,
}

fn parse_pencil(src: &str) -> Result<PencilInput, String> {
    let (f, g) = src
        .split_once(';')
        .ok_or_else(|| "expected two generators separated by ';'".to_string())?;
    let q = FieldSpec::Q;
    if let (Ok(fc), Ok(gc)) = (TernaryCubic::parse(f, q), TernaryCubic::parse(g, q)) {
        return Ok(PencilInput::Cubics(fc, gc));
    }
    match (BinaryQuartic::parse(f, q), BinaryQuartic::parse(g, q)) {
        (Ok(fq), Ok(gq)) => Ok(PencilInput::Quartics(fq, gq)),
        (Err(e), _) | (_, Err(e)) => Err(format!(
            "generators are neither two cubics in x,y,z nor two quartics in x,y: {e}"
        )),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let field: FieldSpec = cli
        .field
        .parse()
        .map_err(|e| format!("invalid --field: {e}"))?;
    let pencil = cli.pencil.as_deref().map(parse_pencil).transpose()?;
    let points = match &cli.points {
        Some(path) => {
            let src = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read points file {}: {e}", path.display()))?;
            Some(parse_points(&src, field).map_err(|e| format!("invalid points file: {e}"))?)
        }
        None => None,
    };
    let ctx = Ctx {
        field,
        seed: cli.seed,
        pencil,
        points,
    };

    let checks = match cli.cmd {
        Cmd::Identities => suites::identities(&ctx),
        Cmd::Membership => suites::membership_suite(&ctx),
        Cmd::Rank => suites::rank_suite(&ctx),
        Cmd::Orbits => suites::orbits_and_degenerations().0,
        Cmd::Degenerations => suites::orbits_and_degenerations().1,
        Cmd::Configs => suites::configs_suite(&ctx),
        Cmd::Triangles => suites::triangles_suite(&ctx),
        Cmd::Multidegree { variety } => match variety {
            VarietyArg::H3 => suites::multidegree_suite(MdVariety::H3, cli.seed),
            VarietyArg::H8 => suites::multidegree_suite(MdVariety::H8, cli.seed),
        },
        Cmd::Decompose => suites::decompose_suite(),
        Cmd::Report => {
            // canonical ordering: suites by name, checks in suite order
            let (orbit_checks, degen_checks) = suites::orbits_and_degenerations();
            let mut all = Vec::new();
            all.extend(suites::configs_suite(&ctx));
            all.extend(suites::decompose_suite());
            all.extend(degen_checks);
            all.extend(suites::identities(&ctx));
            all.extend(suites::membership_suite(&ctx));
            all.extend(suites::multidegree_suite(MdVariety::H3, cli.seed));
            all.extend(suites::multidegree_suite(MdVariety::H8, cli.seed));
            all.extend(orbit_checks);
            all.extend(suites::rank_suite(&ctx));
            all.extend(suites::triangles_suite(&ctx));
            all
        }
    };

    let report = Report::new(cli.seed, field, checks);
    let rendered = match cli.format {
        Format::Json => report.to_json(),
        Format::Md => report.to_markdown(),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(if report.has_failures() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
