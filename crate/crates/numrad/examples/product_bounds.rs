//! Upper bounds on powers of the product radius `w(B*A)`.
//!
//! Four families of bounds control `w^{2r}(B*A)` through the moduli
//! `|A|, |B|` alone (no product radius computation needed), and the raw
//! half-norm form controls `w^r(B*A)`. The anticommutator refinement is
//! never worse than the additive form it refines.
//!
//! Run with: `cargo run --example product_bounds`

use numrad::bounds::{
    prod_upper_anticommutator, prod_upper_complex_moduli, prod_upper_dragomir,
    prod_upper_dragomir_half_norm, prod_upper_heydarbeygi,
};
use numrad::corpus::{sample, Family};
use numrad::matrix::CMatrix;
use numrad::radius::numerical_radius;
use numrad::tol;

fn main() -> numrad::Result<()> {
    let a = sample(Family::Ginibre, 4, 11)?;
    let b = sample(Family::Ginibre, 4, 12)?;

    // Target: the radius of B*A, raised to the powers the bounds control.
    let bsa = CMatrix::from_dense(b.dense().adjoint() * a.dense())?;
    let w = numerical_radius(&bsa, tol::RADIUS)?.value;
    println!("two seeded 4x4 matrices; w(B*A) = {w:.12}");
    println!();
    println!(
        "{:<6} {:>14} {:>14} {:>14} {:>14} {:>14}",
        "r", "w^2r(B*A)", "dragomir", "heydarbeygi", "complex-mod", "anticommut."
    );

    for r in [1.0, 1.5, 2.0, 3.0] {
        let target = w.powf(2.0 * r);
        let drag = prod_upper_dragomir(&a, &b, r)?.value;
        let hey = prod_upper_heydarbeygi(&a, &b, r)?.value;
        let cm = prod_upper_complex_moduli(&a, &b, r)?.value;
        let anti = prod_upper_anticommutator(&a, &b, r)?.value;
        println!("{r:<6} {target:>14.6} {drag:>14.6} {hey:>14.6} {cm:>14.6} {anti:>14.6}");
        assert!(target <= drag && target <= hey && target <= cm && target <= anti);
        // The anticommutator form refines the additive one.
        assert!(anti <= hey * (1.0 + 1e-12));
    }
    println!();

    // The raw half-norm form bounds the r-th power directly.
    println!("{:<6} {:>14} {:>14}", "r", "w^r(B*A)", "half-norm");
    for r in [1.0, 2.0, 4.0] {
        let raw = prod_upper_dragomir_half_norm(&a, &b, r)?;
        println!("{r:<6} {:>14.6} {raw:>14.6}", w.powf(r));
    }
    Ok(())
}
