//! Evaluating the full sheet of single-matrix bounds on one operator.
//!
//! Lower bounds target `w` or `w^2` from below, upper bounds from above;
//! `slack = (rhs - lhs) / (1 + scale)` is the normalized margin, so every
//! row of a valid sheet has nonnegative slack up to floating-point noise.
//!
//! Run with: `cargo run --example bound_sheet`

use num_complex::Complex64 as C64;

use numrad::bounds::{
    kittaneh_pair, lower_cartesian_parts, lower_half_norm, lower_rotated_cartesian,
    lower_sq_cartesian_parts, lower_sq_rotated_cartesian, upper_aluthge_refined,
    upper_alpha_moduli, upper_alpha_moduli_min, upper_kittaneh_power, upper_norm, upper_yamazaki,
    BoundReport, Side, Target,
};
use numrad::matrix::CMatrix;
use numrad::radius::numerical_radius;
use numrad::tol;

fn row(report: &BoundReport, w: f64, w2: f64) {
    let target = match report.target {
        Target::W => w,
        Target::WSquared => w2,
        _ => unreachable!("single-matrix bounds target w or w^2"),
    };
    let (lhs, rhs, tgt) = match report.side {
        Side::Lower => (report.value, target, "w"),
        Side::Upper => (target, report.value, "w"),
    };
    let name = match report.target {
        Target::WSquared => "w^2",
        _ => tgt,
    };
    let slack = (rhs - lhs) / (1.0 + lhs.abs().max(rhs.abs()));
    println!(
        "{:<28} {:<5} {:<4} {:>16.12} {:>12.3e}",
        report.id,
        match report.side {
            Side::Lower => "lower",
            Side::Upper => "upper",
        },
        name,
        report.value,
        slack
    );
}

fn main() -> numrad::Result<()> {
    let a = CMatrix::new(
        4,
        vec![
            C64::new(0.8, 0.3),
            C64::new(-1.1, 0.0),
            C64::new(0.2, 0.9),
            C64::new(0.0, -0.4),
            C64::new(0.5, 0.5),
            C64::new(-0.3, 0.1),
            C64::new(1.4, 0.0),
            C64::new(0.7, -0.2),
            C64::new(0.0, 1.2),
            C64::new(0.6, 0.0),
            C64::new(-0.9, 0.8),
            C64::new(0.1, 0.1),
            C64::new(1.0, -0.5),
            C64::new(0.0, 0.3),
            C64::new(0.4, 0.0),
            C64::new(-0.6, -0.6),
        ],
    )?;

    let w = numerical_radius(&a, tol::RADIUS)?.value;
    let w2 = w * w;
    println!("w(A)   = {w:.12}");
    println!("w^2(A) = {w2:.12}");
    println!();
    println!(
        "{:<28} {:<5} {:<4} {:>16} {:>12}",
        "bound", "side", "of", "value", "slack"
    );

    let (kit_lo, kit_hi) = kittaneh_pair(&a)?;
    let sheet = vec![
        lower_half_norm(&a)?,
        lower_rotated_cartesian(&a)?,
        lower_cartesian_parts(&a)?,
        kit_lo,
        lower_sq_rotated_cartesian(&a)?,
        lower_sq_cartesian_parts(&a)?,
        upper_norm(&a)?,
        upper_kittaneh_power(&a)?,
        upper_yamazaki(&a)?,
        upper_aluthge_refined(&a)?,
        kit_hi,
        upper_alpha_moduli(&a, 0.5)?,
    ];
    for report in &sheet {
        row(report, w, w2);
    }

    // The minimized alpha bound is reported with its argmin attached.
    let curve = upper_alpha_moduli_min(&a, 65, 1e-10)?;
    row(
        &BoundReport {
            id: "upper_alpha_moduli_min".into(),
            side: Side::Upper,
            target: Target::WSquared,
            value: curve.min_value,
            params: None,
            paper_anchor: "min over alpha of the two-sided moduli power bound".into(),
        },
        w,
        w2,
    );
    println!();
    println!("alpha minimizer: {:.12}", curve.argmin);
    Ok(())
}
