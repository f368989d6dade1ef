//! Polar decomposition and the Aluthge transform.
//!
//! The Aluthge transform `Ã = |A|^{1/2} U |A|^{1/2}` (with `A = U|A|`
//! polar) preserves the spectrum but contracts both the operator norm and
//! the numerical radius. Iterating it drives a matrix toward normality,
//! which makes the Yamazaki bound `w(A) ≤ ½(‖A‖ + w(Ã))` and its cross-term
//! refinement strictly sharper than the plain norm bound `w(A) ≤ ‖A‖`.
//!
//! Run with: `cargo run --example aluthge_transform`

use numrad::bounds::{upper_aluthge_refined, upper_norm, upper_yamazaki};
use numrad::corpus::{sample, Family};
use numrad::linalg::op_norm;
use numrad::radius::numerical_radius;
use numrad::transform::{aluthge, polar};
use numrad::tol;

fn main() -> numrad::Result<()> {
    let a = sample(Family::Ginibre, 4, 31)?;

    // Polar decomposition reconstructs A = U P with P = |A| PSD.
    let pol = polar(&a)?;
    let recon = pol.u.dense() * pol.p.dense();
    let err = op_norm(&numrad::matrix::CMatrix::from_dense(recon - a.dense())?);
    println!("polar decomposition A = U P: reconstruction error = {err:.3e}");
    assert!(err <= 1e-10 * (1.0 + op_norm(&a)));
    println!();

    // Iterating the transform contracts w and the norm toward normality,
    // where w = norm and the transform is a fixed point.
    println!("{:<6} {:>16} {:>16} {:>16}", "iter", "w", "norm", "norm - w");
    let mut t = a.clone();
    let mut prev_w = f64::INFINITY;
    for k in 0..8 {
        let w = numerical_radius(&t, tol::RADIUS)?.value;
        let nrm = op_norm(&t);
        println!("{k:<6} {w:>16.12} {nrm:>16.12} {:>16.3e}", nrm - w);
        assert!(w <= prev_w + 1e-10);
        prev_w = w;
        t = aluthge(&t)?;
    }
    println!();

    // The transform feeds two upper bounds, both sharper than the norm.
    let w = numerical_radius(&a, tol::RADIUS)?.value;
    let norm = upper_norm(&a)?;
    let yama = upper_yamazaki(&a)?;
    let refined = upper_aluthge_refined(&a)?;
    println!("w(A)                         = {w:.12}");
    println!("{:<28} = {:.12}", norm.id, norm.value);
    println!("{:<28} = {:.12}", yama.id, yama.value);
    println!("{:<28} = {:.12}", refined.id, refined.value);
    assert!(w <= refined.value && refined.value <= yama.value + 1e-12);
    assert!(yama.value <= norm.value + 1e-12);
    Ok(())
}
