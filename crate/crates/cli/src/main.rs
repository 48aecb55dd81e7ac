//! Command-line front end: construct collections, compute distance
//! profiles, run the built-in verification suites, simulate informed
//! receivers, and search Piret pair parameters.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

mod io;
mod verify;

use clap::{Args, Parser, Subcommand};
use eccir_core::code::DistanceConfig;
use eccir_core::constructions::{
    concatenate, coset_partition_eccir, cubic_residue_triple, irreducible_inner, mdsir_from_grs,
    piret_pair, piret_search, piret_targeted_search, primitive_pair, quadratic_residue_pair,
    ConcatConfig,
};
use eccir_core::cyclic::generator_matrix_of;
use eccir_core::eccir::{dbt_baseline_split, Eccir};
use eccir_core::gf::FieldSpec;
use eccir_core::sim::{run_trials, ErrorModel};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "eccir", version, about = "Codes for informed receivers: construct, profile, verify, simulate")]
struct Cli {
    /// Worker threads (accepted for compatibility; computation is
    /// currently single-threaded).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Exhaustive-enumeration limit in bits (q^dim <= 2^limit); overrides
    /// the ECCIR_DIM_LIMIT environment variable.
    #[arg(long, global = true)]
    dim_limit: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a collection and write it as JSON.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Compute the full subset distance profile of a collection file.
    Profile {
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        #[arg(long, default_value = "json", value_parser = ["json", "csv"])]
        format: String,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Run a named verification suite, or all of them.
    Verify {
        /// Suite name or "all".
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Seeded informed-receiver decoding trials.
    Simulate {
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        /// Known components, comma-separated 1-based indices (may be empty).
        #[arg(long, default_value = "")]
        side_info: String,
        /// Exact error weight per trial.
        #[arg(long, conflicts_with = "bsc")]
        errors: Option<usize>,
        /// Independent per-coordinate corruption probability.
        #[arg(long)]
        bsc: Option<f64>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Search the pair parameter beta maximizing the component distance.
    SearchPiret {
        /// Inner code length (irreducible cyclic code, nonzeroes C_1).
        #[arg(long)]
        inner_n: u64,
        /// Stop at the first beta reaching this component distance.
        #[arg(long)]
        target: Option<u64>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Punctured systematic Reed-Solomon collection (k = 1), optimal at
    /// every subset; requires q > n + L.
    GrsMdsir(GrsArgs),
    /// Concatenate a punctured-RS outer collection over F_{2^m} with the
    /// irreducible cyclic inner code of the given length.
    Concat(ConcatArgs),
    /// Two-component pair over an irreducible cyclic inner code; searches
    /// beta when not given.
    Piret(PiretArgs),
    /// Pair with nonzeroes C_1 and C_3 at n = 2^m - 1.
    PrimitivePair {
        #[arg(long)]
        m: u32,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Quadratic-residue pair at prime n = +-1 mod 8.
    Qr {
        #[arg(long)]
        n: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Cubic-residue triple at prime n with 3 | n-1 and 2 a cube.
    Cr {
        #[arg(long)]
        n: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Cyclic collection from disjoint coset unions, e.g.
    /// --parts "1,3;5,15;7,11".
    CosetPartition(CosetArgs),
    /// Split a systematic [n + kL, kL] generator file into L components.
    DbtSplit(DbtArgs),
}

#[derive(Args)]
struct GrsArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    l: usize,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConcatArgs {
    #[arg(long)]
    outer_q: u64,
    #[arg(long)]
    n_out: usize,
    #[arg(long)]
    l: usize,
    #[arg(long)]
    inner_n: u64,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PiretArgs {
    #[arg(long)]
    inner_n: u64,
    #[arg(long)]
    beta: Option<u64>,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CosetArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, default_value_t = 2)]
    q: u64,
    /// Semicolon-separated components, each a comma-separated list of
    /// coset representatives.
    #[arg(long)]
    parts: String,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DbtArgs {
    /// Generator-matrix JSON file {"q": ..., "rows": [[...], ...]}.
    #[arg(long, value_name = "FILE")]
    r#in: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: usize,
    /// Minimum distance of the mother code (drives the guarantees).
    #[arg(long)]
    d: u64,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limit = cli
        .dim_limit
        .or_else(|| {
            std::env::var("ECCIR_DIM_LIMIT")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(28);
    let cfg = DistanceConfig::with_limit(limit);
    match run(cli.command, &cfg, limit) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, cfg: &DistanceConfig, limit: u32) -> Result<ExitCode, String> {
    match command {
        Command::Construct { family } => cmd_construct(family, cfg),
        Command::Profile { r#in, format, out } => cmd_profile(&r#in, &format, out.as_deref(), cfg),
        Command::Verify { suite } => cmd_verify(&suite, cfg),
        Command::Simulate { r#in, side_info, errors, bsc, trials, seed, out } => {
            cmd_simulate(&r#in, &side_info, errors, bsc, trials, seed, out.as_deref(), limit)
        }
        Command::SearchPiret { inner_n, target, out } => {
            cmd_search_piret(inner_n, target, out.as_deref())
        }
    }
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("writing {path:?}: {e}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_eccir(e: &Eccir, out: Option<&std::path::Path>) -> Result<ExitCode, String> {
    let file = io::eccir_to_file(e);
    emit(&io::to_json_string(&file), out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_construct(family: Family, _cfg: &DistanceConfig) -> Result<ExitCode, String> {
    match family {
        Family::GrsMdsir(a) => {
            let e = mdsir_from_grs(a.q, a.n, a.l).map_err(|e| e.to_string())?;
            write_eccir(&e, a.out.as_deref())
        }
        Family::Concat(a) => {
            let outer = mdsir_from_grs(a.outer_q, a.n_out, a.l).map_err(|e| e.to_string())?;
            let inner_spec = irreducible_inner(a.inner_n).map_err(|e| e.to_string())?;
            let inner = generator_matrix_of(&inner_spec).map_err(|e| e.to_string())?;
            let e = concatenate(&ConcatConfig { outer, inner }).map_err(|e| e.to_string())?;
            write_eccir(&e, a.out.as_deref())
        }
        Family::Piret(a) => {
            let inner = irreducible_inner(a.inner_n).map_err(|e| e.to_string())?;
            let e = match a.beta {
                Some(beta) => piret_pair(&inner, beta).map_err(|e| e.to_string())?.eccir,
                None => piret_search(&inner).map_err(|e| e.to_string())?.pair.eccir,
            };
            write_eccir(&e, a.out.as_deref())
        }
        Family::PrimitivePair { m, out } => {
            let e = primitive_pair(m).map_err(|e| e.to_string())?;
            write_eccir(&e, out.as_deref())
        }
        Family::Qr { n, out } => {
            let e = quadratic_residue_pair(n).map_err(|e| e.to_string())?;
            write_eccir(&e, out.as_deref())
        }
        Family::Cr { n, out } => {
            let e = cubic_residue_triple(n).map_err(|e| e.to_string())?;
            write_eccir(&e, out.as_deref())
        }
        Family::CosetPartition(a) => {
            let parts = parse_parts(&a.parts)?;
            let e = coset_partition_eccir(a.n, a.q, &parts).map_err(|e| e.to_string())?;
            write_eccir(&e, a.out.as_deref())
        }
        Family::DbtSplit(a) => {
            let text = std::fs::read_to_string(&a.r#in)
                .map_err(|e| format!("reading {:?}: {e}", a.r#in))?;
            let mf: io::GeneratorMatrixFile =
                serde_json::from_str(&text).map_err(|e| format!("parsing {:?}: {e}", a.r#in))?;
            let field = FieldSpec::of_order(mf.q).map_err(|e| e.to_string())?;
            let g = eccir_core::code::GeneratorMatrix::new(field, mf.rows)
                .map_err(|e| e.to_string())?;
            let (e, bounds) = dbt_baseline_split(&g, a.k, a.l, a.d).map_err(|e| e.to_string())?;
            eprintln!("guaranteed distance bounds by subset size: {bounds:?}");
            write_eccir(&e, a.out.as_deref())
        }
    }
}

fn parse_parts(s: &str) -> Result<Vec<Vec<u64>>, String> {
    s.split(';')
        .map(|part| {
            part.split(',')
                .map(|x| x.trim().parse::<u64>().map_err(|e| format!("bad part '{x}': {e}")))
                .collect()
        })
        .collect()
}

fn cmd_profile(
    path: &std::path::Path,
    format: &str,
    out: Option<&std::path::Path>,
    cfg: &DistanceConfig,
) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("reading {path:?}: {e}"))?;
    let file: io::EccirFile =
        serde_json::from_str(&text).map_err(|e| format!("parsing {path:?}: {e}"))?;
    let e = io::eccir_from_file(&file)?;
    let profile = e.distance_profile(cfg);
    let rendered = match format {
        "csv" => io::profile_csv(&profile),
        _ => io::to_json_string(&io::profile_rows(&profile)),
    };
    emit(&rendered, out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite: &str, cfg: &DistanceConfig) -> Result<ExitCode, String> {
    let suites: Vec<&str> = if suite == "all" {
        verify::SUITES.to_vec()
    } else {
        vec![suite]
    };
    let mut failures = 0usize;
    let mut total = 0usize;
    for s in suites {
        let checks = verify::run_suite(s, cfg)?;
        for c in &checks {
            total += 1;
            let mark = if c.passed { "PASS" } else { "FAIL" };
            println!("{mark} {}: {}", c.name, c.detail);
            if !c.passed {
                failures += 1;
            }
        }
    }
    println!("{} checks, {failures} failures", total);
    Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[allow(clippy::too_many_arguments)]
fn cmd_simulate(
    path: &std::path::Path,
    side_info: &str,
    errors: Option<usize>,
    bsc: Option<f64>,
    trials: u64,
    seed: u64,
    out: Option<&std::path::Path>,
    limit: u32,
) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("reading {path:?}: {e}"))?;
    let file: io::EccirFile =
        serde_json::from_str(&text).map_err(|e| format!("parsing {path:?}: {e}"))?;
    let e = io::eccir_from_file(&file)?;
    let s: Vec<usize> = side_info
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let v: usize = t.trim().parse().map_err(|err| format!("bad index '{t}': {err}"))?;
            if v == 0 || v > e.l() {
                return Err(format!("component index {v} out of range 1..={}", e.l()));
            }
            Ok(v - 1)
        })
        .collect::<Result<_, String>>()?;
    let model = match (errors, bsc) {
        (Some(t), None) => ErrorModel::FixedWeight(t),
        (None, Some(p)) => ErrorModel::Bsc(p),
        (None, None) => ErrorModel::FixedWeight(0),
        (Some(_), Some(_)) => unreachable!("clap conflict"),
    };
    let report = run_trials(&e, &s, model, trials, seed, limit).map_err(|e| e.to_string())?;
    emit(&io::to_json_string(&io::TrialReportJson::from(&report)), out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_search_piret(
    inner_n: u64,
    target: Option<u64>,
    out: Option<&std::path::Path>,
) -> Result<ExitCode, String> {
    let inner = irreducible_inner(inner_n).map_err(|e| e.to_string())?;
    let found = match target {
        Some(t) => piret_targeted_search(&inner, t).map_err(|e| e.to_string())?,
        None => piret_search(&inner).map_err(|e| e.to_string())?,
    };
    eprintln!(
        "beta={} component distance={} maximizers={:?}",
        found.pair.beta, found.component_distance, found.maximizers
    );
    write_eccir(&found.pair.eccir, out)
}
