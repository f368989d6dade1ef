//! Computing the numerical radius and reading the solver's certificate.
//!
//! The numerical radius `w(A) = max_x |<Ax, x>|` over unit vectors is
//! computed by rotating the matrix and tracking the top eigenvalue of the
//! Hermitian part. It always sits in the envelope `||A||/2 <= w(A) <= ||A||`.
//!
//! Run with: `cargo run --example radius_basics`

use nalgebra::DVector;
use num_complex::Complex64 as C64;

use numrad::linalg::op_norm;
use numrad::matrix::CMatrix;
use numrad::radius::numerical_radius;
use numrad::tol;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn describe(label: &str, a: &CMatrix) -> numrad::Result<()> {
    let r = numerical_radius(a, tol::RADIUS)?;
    let norm = op_norm(a);

    // The witness is a unit vector attaining the radius: |<Ax, x>| = w(A).
    let x = DVector::from_vec(r.witness.clone());
    let attained = x.dotc(&(a.dense() * &x)).norm();

    println!("{label}");
    println!("  w(A)           = {:.12}", r.value);
    println!("  ||A||/2, ||A|| = {:.12}, {:.12}", norm / 2.0, norm);
    println!("  best angle     = {:.12} rad", r.theta);
    println!("  |<Ax, x>| at the witness = {attained:.12}");
    println!();
    Ok(())
}

fn main() -> numrad::Result<()> {
    // The 2x2 shift: w = 1/2 exactly, the lower end of the envelope. Its
    // rotation profile is constant, so every angle is optimal.
    let shift = CMatrix::new(2, vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])?;
    describe("2x2 shift [[0,1],[0,0]]", &shift)?;

    // A normal matrix: w = ||A||, the upper end of the envelope.
    let normal = CMatrix::from_diag(&[c(1.0, 1.0), c(-2.0, 0.5), c(0.0, -1.0)]);
    describe("normal diag(1+i, -2+i/2, -i)", &normal)?;

    // A dense non-normal matrix sits strictly inside the envelope.
    let dense = CMatrix::new(
        3,
        vec![
            c(1.0, 0.2),
            c(-0.5, 1.1),
            c(0.3, 0.0),
            c(0.0, -0.7),
            c(0.4, 0.4),
            c(1.2, -0.3),
            c(0.9, 0.1),
            c(-0.2, 0.6),
            c(-1.0, 0.0),
        ],
    )?;
    describe("dense 3x3", &dense)?;

    Ok(())
}
