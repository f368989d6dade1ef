//! Thin command-line front end over the numrad library.
//!
//! Exit codes: 0 success, 1 usage/IO/parse errors, 2 certified-inequality
//! violation or internal inconsistency.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::PathBuf;

use numrad::bounds::{self, BoundReport, Params, Side, Target};
use numrad::certify::{run_certification, CertConfig};
use numrad::corpus::Family;
use numrad::io::{read_matrix, sig12};
use numrad::linalg::op_norm;
use numrad::matrix::CMatrix;
use numrad::radius::{nr_profile, numerical_radius};
use numrad::{tol, Error};

#[derive(Parser)]
#[command(
    name = "numrad",
    version,
    about = "Numerical radius computation and certified bound evaluation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate bounds on a matrix (and optionally a companion matrix)
    Eval(EvalArgs),
    /// Sample the theta profile or the alpha bound curve to CSV
    Sweep(SweepArgs),
    /// Run the certification suite and print the JSON report
    Certify(CertifyArgs),
    /// Reproduce the worked 3x3 example
    PaperExample,
}

#[derive(Args)]
struct EvalArgs {
    /// Path to a JSON matrix file {"n": ..., "entries": [[re, im], ...]}
    #[arg(long)]
    matrix: PathBuf,
    /// Companion matrix B for product and commutator bounds
    #[arg(long)]
    second: Option<PathBuf>,
    /// Comma-separated bound ids to evaluate (default: all applicable)
    #[arg(long, value_delimiter = ',')]
    bounds: Option<Vec<String>>,
    /// Power parameter for product bounds (r >= 1)
    #[arg(long, default_value_t = 2.0)]
    r: f64,
    /// Exponent for the two-sided moduli bound (0 <= alpha <= 1)
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    /// Emit machine-readable JSON instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Path to a JSON matrix file
    #[arg(long)]
    matrix: PathBuf,
    /// Which curve to sample
    #[arg(long, value_enum)]
    mode: SweepMode,
    /// Number of grid points
    #[arg(long, default_value_t = 257)]
    grid: usize,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepMode {
    /// alpha,value rows of the moduli-power upper bound over [0, 1]
    Alpha,
    /// theta,lambda_max rows of the rotation profile over [0, 2pi)
    Theta,
}

#[derive(Args)]
struct CertifyArgs {
    /// Comma-separated families
    #[arg(long, value_delimiter = ',')]
    families: Option<Vec<String>>,
    /// Comma-separated matrix sizes
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Matrices per (family, size) cell
    #[arg(long, default_value_t = 17)]
    count: usize,
    /// Corpus seed
    #[arg(long, default_value_t = 7919)]
    seed: u64,
    /// Comma-separated r values for product bounds
    #[arg(long, value_delimiter = ',')]
    r: Option<Vec<f64>>,
    /// Perturb one bound to prove the harness can fail (forces exit 2)
    #[arg(long)]
    self_test_fail: bool,
}

fn main() {
    // Restore the default SIGPIPE disposition so pipelines like
    // `numrad certify | head` terminate quietly instead of panicking on a
    // closed stdout.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let tolerance = match resolve_tolerance() {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };
    let outcome = match cli.command {
        Command::Eval(args) => cmd_eval(args, tolerance),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Certify(args) => cmd_certify(args, tolerance),
        Command::PaperExample => cmd_paper_example(),
    };
    match outcome {
        Ok(code) => code,
        Err(Error::Inconsistent(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Default check tolerance, overridable through NUMRAD_TOL.
fn resolve_tolerance() -> Result<f64, String> {
    match std::env::var("NUMRAD_TOL") {
        Err(std::env::VarError::NotPresent) => Ok(tol::CHECK),
        Err(e) => Err(format!("NUMRAD_TOL is not valid unicode: {e}")),
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
            _ => Err(format!(
                "NUMRAD_TOL must be a positive finite number, got '{raw}'"
            )),
        },
    }
}

/// One evaluated bound next to the target it constrains.
#[derive(Serialize)]
struct ReportRow {
    #[serde(flatten)]
    report: BoundReport,
    target_value: f64,
    slack: f64,
}

#[derive(Serialize)]
struct EvalOutput {
    n: usize,
    w: f64,
    w_squared: f64,
    tolerance: f64,
    targets: BTreeMap<String, f64>,
    reports: Vec<ReportRow>,
    pass: bool,
}

fn slack_for(report: &BoundReport, target: f64) -> f64 {
    let scale = report.value.abs().max(target.abs());
    match report.side {
        Side::Lower => (target - report.value) / (1.0 + scale),
        Side::Upper => (report.value - target) / (1.0 + scale),
    }
}

const SINGLE_IDS: [&str; 13] = [
    "lower_half_norm",
    "upper_norm",
    "lower_kittaneh",
    "upper_kittaneh",
    "upper_kittaneh_power",
    "upper_yamazaki",
    "lower_rotated_cartesian",
    "lower_cartesian_parts",
    "lower_sq_rotated_cartesian",
    "lower_sq_cartesian_parts",
    "upper_aluthge_refined",
    "upper_alpha_moduli",
    "upper_alpha_moduli_min",
];

const PAIR_IDS: [&str; 9] = [
    "prod_upper_dragomir_half_norm",
    "prod_upper_dragomir",
    "prod_upper_heydarbeygi",
    "prod_upper_complex_moduli",
    "prod_upper_anticommutator",
    "comm_upper_refined",
    "comm_upper_fong_holbrook",
    "comm_upper_hirzallah_kittaneh",
    "upper_axxa_fong",
];

fn cmd_eval(args: EvalArgs, tolerance: f64) -> numrad::Result<i32> {
    let a = read_matrix(&args.matrix)?;
    let second = match &args.second {
        Some(path) => Some(read_matrix(path)?),
        None => None,
    };

    let selected: Vec<String> = match &args.bounds {
        None => {
            let mut ids: Vec<String> = SINGLE_IDS.iter().map(|s| s.to_string()).collect();
            if second.is_some() {
                ids.extend(PAIR_IDS.iter().map(|s| s.to_string()));
            }
            ids
        }
        Some(list) => {
            for id in list {
                if !SINGLE_IDS.contains(&id.as_str()) && !PAIR_IDS.contains(&id.as_str()) {
                    return Err(Error::InvalidArgument(format!("unknown bound id '{id}'")));
                }
                if PAIR_IDS.contains(&id.as_str()) && second.is_none() {
                    return Err(Error::InvalidArgument(format!(
                        "bound '{id}' needs a companion matrix (--second)"
                    )));
                }
            }
            list.clone()
        }
    };
    let wants = |id: &str| selected.iter().any(|s| s == id);

    let w = numerical_radius(&a, tol::RADIUS)?.value;
    let w2 = w * w;
    let mut targets = BTreeMap::new();
    targets.insert("w".to_string(), w);
    targets.insert("w_squared".to_string(), w2);

    let mut reports: Vec<ReportRow> = Vec::new();
    let push = |report: BoundReport, target: f64, reports: &mut Vec<ReportRow>| {
        let slack = slack_for(&report, target);
        reports.push(ReportRow {
            report,
            target_value: target,
            slack,
        });
    };

    if wants("lower_half_norm") {
        push(bounds::lower_half_norm(&a)?, w, &mut reports);
    }
    if wants("upper_norm") {
        push(bounds::upper_norm(&a)?, w, &mut reports);
    }
    if wants("lower_kittaneh") || wants("upper_kittaneh") {
        let (lo, hi) = bounds::kittaneh_pair(&a)?;
        if wants("lower_kittaneh") {
            push(lo, w2, &mut reports);
        }
        if wants("upper_kittaneh") {
            push(hi, w2, &mut reports);
        }
    }
    if wants("upper_kittaneh_power") {
        push(bounds::upper_kittaneh_power(&a)?, w, &mut reports);
    }
    if wants("upper_yamazaki") {
        push(bounds::upper_yamazaki(&a)?, w, &mut reports);
    }
    if wants("lower_rotated_cartesian") {
        push(bounds::lower_rotated_cartesian(&a)?, w, &mut reports);
    }
    if wants("lower_cartesian_parts") {
        push(bounds::lower_cartesian_parts(&a)?, w, &mut reports);
    }
    if wants("lower_sq_rotated_cartesian") {
        push(bounds::lower_sq_rotated_cartesian(&a)?, w2, &mut reports);
    }
    if wants("lower_sq_cartesian_parts") {
        push(bounds::lower_sq_cartesian_parts(&a)?, w2, &mut reports);
    }
    if wants("upper_aluthge_refined") {
        push(bounds::upper_aluthge_refined(&a)?, w, &mut reports);
    }
    if wants("upper_alpha_moduli") {
        push(bounds::upper_alpha_moduli(&a, args.alpha)?, w2, &mut reports);
    }
    if wants("upper_alpha_moduli_min") {
        let curve =
            bounds::upper_alpha_moduli_min(&a, bounds::ALPHA_GRID_DEFAULT, bounds::ALPHA_REFINE_WIDTH)?;
        let report = BoundReport {
            id: "upper_alpha_moduli_min".to_string(),
            side: Side::Upper,
            target: Target::WSquared,
            value: curve.min_value,
            params: Some(Params {
                alpha: Some(curve.argmin),
                r: None,
                sign: None,
            }),
            paper_anchor: "min over alpha of the two-sided moduli power bound".to_string(),
        };
        push(report, w2, &mut reports);
    }

    if let Some(b) = &second {
        let r = args.r;
        let bsa = (&b.conj_transpose()) * &a;
        let w_bta = numerical_radius(&bsa, tol::RADIUS)?.value;
        let ab = &a * b;
        let ba = b * &a;
        let w_plus = numerical_radius(&(&ab + &ba), tol::RADIUS)?.value;
        let w_minus = numerical_radius(&(&ab - &ba), tol::RADIUS)?.value;
        let axxa = &(&a.conj_transpose() * b) + &(b * &a);
        let w_axxa = numerical_radius(&axxa, tol::RADIUS)?.value;
        targets.insert("w_bta_pow_r".to_string(), w_bta.powf(r));
        targets.insert("w_bta_pow_2r".to_string(), w_bta.powf(2.0 * r));
        targets.insert("w_comm_plus".to_string(), w_plus);
        targets.insert("w_comm_minus".to_string(), w_minus);
        targets.insert("w_axxa".to_string(), w_axxa);

        if wants("prod_upper_dragomir_half_norm") {
            let raw = bounds::prod_upper_dragomir_half_norm(&a, b, r)?;
            let report = BoundReport {
                id: "prod_upper_dragomir_half_norm".to_string(),
                side: Side::Upper,
                target: Target::WPower2r,
                value: raw,
                params: Some(Params {
                    alpha: None,
                    r: Some(r),
                    sign: None,
                }),
                paper_anchor: "w^r(B*A) <= |||A|^(2r) + |B|^(2r)||/2 (Dragomir 2009)".to_string(),
            };
            // this one targets w^r, not w^{2r}
            push(report, w_bta.powf(r), &mut reports);
        }
        if wants("prod_upper_dragomir") {
            push(
                bounds::prod_upper_dragomir(&a, b, r)?,
                w_bta.powf(2.0 * r),
                &mut reports,
            );
        }
        if wants("prod_upper_heydarbeygi") {
            push(
                bounds::prod_upper_heydarbeygi(&a, b, r)?,
                w_bta.powf(2.0 * r),
                &mut reports,
            );
        }
        if wants("prod_upper_complex_moduli") {
            push(
                bounds::prod_upper_complex_moduli(&a, b, r)?,
                w_bta.powf(2.0 * r),
                &mut reports,
            );
        }
        if wants("prod_upper_anticommutator") {
            push(
                bounds::prod_upper_anticommutator(&a, b, r)?,
                w_bta.powf(2.0 * r),
                &mut reports,
            );
        }
        if wants("comm_upper_refined") {
            push(
                bounds::comm_upper_refined(&a, b, bounds::Sign::Plus)?,
                w_plus.max(w_minus),
                &mut reports,
            );
        }
        if wants("comm_upper_fong_holbrook") {
            push(bounds::comm_upper_fong_holbrook(&a, b)?, w_plus, &mut reports);
        }
        if wants("comm_upper_hirzallah_kittaneh") {
            push(
                bounds::comm_upper_hirzallah_kittaneh(&a, b, bounds::Sign::Plus)?,
                w_plus.max(w_minus),
                &mut reports,
            );
        }
        if wants("upper_axxa_fong") {
            push(bounds::upper_axxa_fong(&a, b)?, w_axxa, &mut reports);
        }
    }

    let pass = reports.iter().all(|row| row.slack >= -tolerance);
    let output = EvalOutput {
        n: a.dim(),
        w,
        w_squared: w2,
        tolerance,
        targets,
        reports,
        pass,
    };

    if args.json {
        println!("{}", serde_json::to_string(&output)?);
    } else {
        print_eval_table(&output);
    }
    if output.pass {
        Ok(0)
    } else {
        eprintln!(
            "error: {} bound(s) violated beyond tolerance {}; this signals an implementation bug",
            output.reports.iter().filter(|r| r.slack < -tolerance).count(),
            output.tolerance
        );
        Ok(2)
    }
}

fn print_eval_table(out: &EvalOutput) {
    println!("matrix: {0}x{0}", out.n);
    println!("w          {}", sig12(out.w));
    println!("w^2        {}", sig12(out.w_squared));
    for (name, value) in &out.targets {
        if name != "w" && name != "w_squared" {
            println!("{:<10} {}", name, sig12(*value));
        }
    }
    println!();
    println!(
        "{:<30} {:<6} {:<12} {:>18} {:>18}",
        "bound", "side", "target", "value", "slack"
    );
    for row in &out.reports {
        let side = match row.report.side {
            Side::Lower => "lower",
            Side::Upper => "upper",
        };
        let target = match row.report.target {
            Target::W => "w",
            Target::WSquared => "w_squared",
            Target::WPower2r => "w_power_2r",
            Target::WOfExpression => "w_of_expr",
        };
        println!(
            "{:<30} {:<6} {:<12} {:>18} {:>18}",
            row.report.id,
            side,
            target,
            sig12(row.report.value),
            sig12(row.slack)
        );
    }
}

fn cmd_sweep(args: SweepArgs) -> numrad::Result<i32> {
    let a = read_matrix(&args.matrix)?;
    let mut csv = String::new();
    match args.mode {
        SweepMode::Theta => {
            csv.push_str("theta,lambda_max\n");
            for (theta, value) in nr_profile(&a, args.grid)? {
                csv.push_str(&format!("{},{}\n", sig12(theta), sig12(value)));
            }
        }
        SweepMode::Alpha => {
            let curve =
                bounds::upper_alpha_moduli_min(&a, args.grid, bounds::ALPHA_REFINE_WIDTH)?;
            csv.push_str("alpha,value\n");
            for (alpha, value) in &curve.samples {
                csv.push_str(&format!("{},{}\n", sig12(*alpha), sig12(*value)));
            }
        }
    }
    std::fs::write(&args.out, csv)?;
    Ok(0)
}

fn cmd_certify(args: CertifyArgs, tolerance: f64) -> numrad::Result<i32> {
    let defaults = CertConfig::default();
    let families = match &args.families {
        None => defaults.families,
        Some(names) => names
            .iter()
            .map(|s| s.parse::<Family>())
            .collect::<numrad::Result<Vec<_>>>()?,
    };
    let cfg = CertConfig {
        families,
        sizes: args.sizes.unwrap_or(defaults.sizes),
        count: args.count,
        seed: args.seed,
        r_values: args.r.unwrap_or(defaults.r_values),
        alpha_grid: defaults.alpha_grid,
        tol: tolerance,
        self_test_fail: args.self_test_fail,
    };
    let report = run_certification(&cfg)?;
    println!("{}", serde_json::to_string(&report)?);
    if report.pass {
        Ok(0)
    } else {
        Ok(2)
    }
}

fn cmd_paper_example() -> numrad::Result<i32> {
    use num_complex::Complex64 as C64;
    let z = C64::new(0.0, 0.0);
    let a = CMatrix::new(
        3,
        vec![
            z,
            C64::new(1.0, 0.0),
            z,
            z,
            z,
            C64::new(2.0, 0.0),
            z,
            z,
            z,
        ],
    )?;
    let w = numerical_radius(&a, tol::RADIUS)?.value;
    let half = bounds::upper_alpha_moduli(&a, 0.5)?.value;
    let curve =
        bounds::upper_alpha_moduli_min(&a, bounds::ALPHA_GRID_DEFAULT, bounds::ALPHA_REFINE_WIDTH)?;
    let crossover = (1.0 + 65f64.sqrt()) / 2.0;
    let r0 = crossover.ln() / 16f64.ln();

    println!("worked 3x3 example: A = [[0,1,0],[0,0,2],[0,0,0]]");
    println!("w(A)                          {}", sig12(w));
    println!("w^2(A)                        {}", sig12(w * w));
    println!("norm(A)                       {}", sig12(op_norm(&a)));
    println!("upper bound at alpha = 1/2    {}", sig12(half));
    println!("minimized upper bound         {}", sig12(curve.min_value));
    println!("argmin alpha                  {}", sig12(curve.argmin));
    println!("branch crossover r0           {}", sig12(r0));
    println!(
        "improvement at the minimum:   {} < {} (strict: {})",
        sig12(curve.min_value),
        sig12(half),
        curve.min_value < half
    );
    Ok(0)
}
