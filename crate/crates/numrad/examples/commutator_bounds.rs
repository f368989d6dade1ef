//! Upper bounds on commutator and anticommutator radii `w(AB ± BA)`.
//!
//! The refined bound subtracts a correction built from the rotated
//! Cartesian parts of `A`; it is never worse than the Fong–Holbrook form
//! `2√2 ‖B‖ w(A)` it refines, and it is genuinely incomparable with the
//! Hirzallah–Kittaneh form `2√2 ‖B‖ √(w²(A) − ¼|‖ℜA‖² − ‖ℑA‖²|)`:
//! each one wins on a diagonal witness shown at the end.
//!
//! Run with: `cargo run --example commutator_bounds`

use num_complex::Complex64 as C64;
use numrad::bounds::{
    comm_upper_fong_holbrook, comm_upper_generalized, comm_upper_hirzallah_kittaneh,
    comm_upper_refined, Sign,
};
use numrad::corpus::{sample, Family};
use numrad::matrix::CMatrix;
use numrad::radius::numerical_radius;
use numrad::tol;

fn w_of(m: &nalgebra::DMatrix<C64>) -> numrad::Result<f64> {
    Ok(numerical_radius(&CMatrix::from_dense(m.clone())?, tol::RADIUS)?.value)
}

fn main() -> numrad::Result<()> {
    let a = sample(Family::Ginibre, 3, 21)?;
    let b = sample(Family::Ginibre, 3, 22)?;

    let ab = a.dense() * b.dense();
    let ba = b.dense() * a.dense();
    let w_plus = w_of(&(&ab + &ba))?;
    let w_minus = w_of(&(&ab - &ba))?;

    println!("seeded 3x3 pair:");
    println!("  w(AB + BA) = {w_plus:.12}");
    println!("  w(AB - BA) = {w_minus:.12}");
    println!();

    let refined_p = comm_upper_refined(&a, &b, Sign::Plus)?.value;
    let refined_m = comm_upper_refined(&a, &b, Sign::Minus)?.value;
    let fong = comm_upper_fong_holbrook(&a, &b)?.value;
    let hirz_p = comm_upper_hirzallah_kittaneh(&a, &b, Sign::Plus)?.value;

    println!("{:<44} {:>14}", "bound", "value");
    println!("{:<44} {refined_p:>14.6}", "refined (rotated-parts correction), +");
    println!("{:<44} {refined_m:>14.6}", "refined (rotated-parts correction), -");
    println!("{:<44} {fong:>14.6}", "Fong-Holbrook 2*sqrt(2)*||B||*w(A)");
    println!("{:<44} {hirz_p:>14.6}", "Hirzallah-Kittaneh (Cartesian correction)");
    assert!(w_plus <= refined_p + 1e-12 && w_minus <= refined_m + 1e-12);
    assert!(refined_p <= fong * (1.0 + 1e-12));
    println!();

    // The generalized form w(AXB ± BYA) with inner weights X, Y.
    let x = sample(Family::Unitary, 3, 23)?;
    let y = sample(Family::Unitary, 3, 24)?;
    let axb = a.dense() * x.dense() * b.dense();
    let bya = b.dense() * y.dense() * a.dense();
    let w_gen = w_of(&(&axb + &bya))?;
    let gen = comm_upper_generalized(&a, &b, &x, &y, Sign::Plus)?.value;
    println!("with unitary inner weights X, Y:");
    println!("  w(AXB + BYA) = {w_gen:.12}  <=  {gen:.6}");
    assert!(w_gen <= gen + 1e-12);
    println!();

    // Neither correction dominates the other: two diagonal witnesses.
    println!("incomparability of the two corrections (B = I):");
    let id = CMatrix::from_diag(&[C64::new(1.0, 0.0), C64::new(1.0, 0.0)]);
    for (label, d) in [
        ("A = diag(1+i, 0)", vec![C64::new(1.0, 1.0), C64::new(0.0, 0.0)]),
        ("A = diag(1, -1) ", vec![C64::new(1.0, 0.0), C64::new(-1.0, 0.0)]),
    ] {
        let a = CMatrix::from_diag(&d);
        let refined = comm_upper_refined(&a, &id, Sign::Plus)?.value;
        let hirz = comm_upper_hirzallah_kittaneh(&a, &id, Sign::Plus)?.value;
        let winner = if refined < hirz { "refined wins" } else { "Hirzallah-Kittaneh wins" };
        println!("  {label}: refined = {refined:.6}, Hirzallah-Kittaneh = {hirz:.6}  ({winner})");
    }
    Ok(())
}
