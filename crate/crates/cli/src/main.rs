//! `projinv`: evaluate, verify and certify first-order projective
//! invariants of points with gradients.

mod input;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use projinv_core::imaging::{
    load_pgm, signature_deviation, signature_extract, warp_raster,
};
use projinv_core::invariants::{
    evaluate, generating_set, solve_weight_system, z_invariant, zn_weight,
};
use projinv_core::scalar::{rational_to_string, Rational};
use projinv_core::verification::{
    check_absolute, check_zn_weight, invariant_jacobian_rank, jacobian_rank_at,
    prolongation_consistency, seven_point_witness, Mode,
};
use projinv_core::{Configuration, Error, Signature};

use input::{load_config, load_homography, load_keypoints, parse_omega, FromJson};

const EXIT_FAILURE: u8 = 1;
const EXIT_NON_GENERIC: u8 = 2;
const EXIT_RANK_DEFICIENT: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "projinv", version, about = "First-order projective invariants of points with gradients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Float => Mode::Float,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the generating set and z_n on a configuration file.
    Eval {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value = "float")]
        mode: ModeArg,
        /// Write JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check invariance laws on random configurations (JSON lines).
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, env = "PROJINV_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
    },
    /// Certify the Jacobian rank of the generating set.
    Rank {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..), required_unless_present = "paper_witness")]
        n: Option<u64>,
        #[arg(long, env = "PROJINV_SEED", default_value_t = 0)]
        seed: u64,
        /// Use the fixed seven-point witness configuration.
        #[arg(long, conflicts_with = "n")]
        paper_witness: bool,
    },
    /// Solve the weight system for exponents of Δ products.
    Weights {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        n: u64,
        #[arg(long, value_parser = parse_omega, allow_hyphen_values = true)]
        omega: Rational,
    },
    /// Compare raster signatures before and after a homography warp.
    Demo {
        #[arg(long)]
        image: PathBuf,
        #[arg(long)]
        homography: PathBuf,
        #[arg(long)]
        keypoints: PathBuf,
    },
}

/// JSON encoding of a scalar: strings for rationals, numbers for floats.
trait JsonScalar: FromJson {
    fn to_json(&self) -> Value;
}

impl JsonScalar for Rational {
    fn to_json(&self) -> Value {
        Value::String(rational_to_string(self))
    }
}

impl JsonScalar for f64 {
    fn to_json(&self) -> Value {
        json!(self)
    }
}

fn emit(value: &Value, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => Ok(std::io::stdout().write_all(text.as_bytes())?),
    }
}

fn signature_json<S: JsonScalar>(sig: &Signature<S>) -> Value {
    sig.entries()
        .iter()
        .map(|(d, v)| json!({"name": d.name(), "indices": d.indices(), "value": v.to_json()}))
        .collect()
}

fn eval_config<S: JsonScalar>(c: &Configuration<S>, out: Option<&Path>) -> Result<u8> {
    let violations = c.genericity_violations();
    if !violations.is_empty() {
        for v in &violations {
            eprintln!("non-generic: {v}");
        }
        return Ok(EXIT_NON_GENERIC);
    }
    let n = c.len();
    let sig = evaluate(c, &generating_set(n)?)?;
    let (zn, weight) = if n < 3 {
        (Value::Null, Value::Null)
    } else {
        let zn = match z_invariant(c) {
            Ok(v) => v.to_json(),
            Err(Error::SingularConfiguration(_)) => json!("singular"),
            Err(e) => return Err(e.into()),
        };
        (zn, json!(rational_to_string(&zn_weight(n))))
    };
    emit(
        &json!({"n": n, "generators": signature_json(&sig), "zn": zn, "zn_weight": weight}),
        out,
    )?;
    Ok(0)
}

fn cmd_eval(config: &Path, mode: ModeArg, out: Option<&Path>) -> Result<u8> {
    match mode {
        ModeArg::Exact => eval_config(&load_config::<Rational>(config)?, out),
        ModeArg::Float => eval_config(&load_config::<f64>(config)?, out),
    }
}

fn cmd_verify(n: usize, trials: usize, seed: u64, mode: Mode) -> Result<u8> {
    let mut reports = check_absolute(n, trials, seed, mode)?;
    if n >= 3 {
        reports.push(check_zn_weight(n, trials, seed, mode)?);
    }
    reports.push(prolongation_consistency(trials, seed)?);
    let mut stdout = std::io::stdout().lock();
    for r in &reports {
        writeln!(stdout, "{}", serde_json::to_string(r)?)?;
    }
    Ok(if reports.iter().all(|r| r.passed()) {
        0
    } else {
        EXIT_FAILURE
    })
}

fn cmd_rank(n: Option<usize>, seed: u64, witness: bool) -> Result<u8> {
    let cert = if witness {
        jacobian_rank_at(&seven_point_witness())?
    } else {
        invariant_jacobian_rank(n.expect("clap requires --n"), seed)?
    };
    emit(&serde_json::to_value(&cert)?, None)?;
    Ok(if cert.passed() { 0 } else { EXIT_RANK_DEFICIENT })
}

fn cmd_weights(n: usize, omega: &Rational) -> Result<u8> {
    let sol = match solve_weight_system(n, omega) {
        Ok(s) => s,
        Err(Error::Infeasible) => {
            eprintln!("error: {}", Error::Infeasible);
            return Ok(EXIT_FAILURE);
        }
        Err(e) => return Err(e.into()),
    };
    let exponents: Map<String, Value> = sol
        .exponents
        .iter()
        .map(|(s, m)| (s.key(), json!(rational_to_string(m))))
        .collect();
    emit(
        &json!({
            "n": n,
            "omega": rational_to_string(omega),
            "exponents": exponents,
            "pivots": sol.pivots.iter().map(|s| s.key()).collect::<Vec<_>>(),
            "integral": sol.integral,
            "verified": sol.satisfies_system(),
        }),
        None,
    )?;
    Ok(0)
}

fn cmd_demo(image: &Path, homography: &Path, keypoints: &Path) -> Result<u8> {
    let bytes = std::fs::read(image).with_context(|| format!("cannot read {}", image.display()))?;
    let raster = load_pgm(&bytes)?;
    let h = load_homography::<f64>(homography)?;
    let pts = load_keypoints(keypoints)?;
    let before = signature_extract(&raster, &pts).context("original image")?;
    let moved = pts.transform(&h)?;
    let after = signature_extract(&warp_raster(&h, &raster), &moved).context("warped image")?;
    let deviations = signature_deviation(&before, &after);
    let mut sorted: Vec<f64> = deviations.iter().map(|(_, r)| *r).collect();
    sorted.sort_by(|a, b| a.total_cmp(b));
    let mean = sorted.iter().sum::<f64>() / sorted.len() as f64;
    let rows: Vec<Value> = deviations
        .iter()
        .map(|(d, r)| {
            json!({
                "name": d.name(),
                "indices": d.indices(),
                "before": before.get(d),
                "after": after.get(d),
                "relative_deviation": r,
            })
        })
        .collect();
    emit(
        &json!({
            "n": pts.len(),
            "deviations": rows,
            "summary": {
                "max": sorted.last(),
                "median": sorted[sorted.len() / 2],
                "mean": mean,
            },
        }),
        None,
    )?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Eval { config, mode, out } => cmd_eval(&config, mode, out.as_deref()),
        Command::Verify {
            n,
            trials,
            seed,
            mode,
        } => cmd_verify(n as usize, trials as usize, seed, mode.into()),
        Command::Rank {
            n,
            seed,
            paper_witness,
        } => cmd_rank(n.map(|n| n as usize), seed, paper_witness),
        Command::Weights { n, omega } => cmd_weights(n as usize, &omega),
        Command::Demo {
            image,
            homography,
            keypoints,
        } => cmd_demo(&image, &homography, &keypoints),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
