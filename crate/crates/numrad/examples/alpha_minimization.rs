//! Minimizing the two-sided moduli power bound over its exponent split.
//!
//! The family `w^2(A) <= 1/4 || |A|^{4a} + |A*|^{4(1-a)} || + 1/2 w(|A*|^{2(1-a)} |A|^{2a})`
//! is a valid upper bound for every `a` in `[0, 1]`; minimizing over `a`
//! strictly improves on the classical midpoint `a = 1/2` whenever the two
//! branch terms are unbalanced. The worked 3x3 example below has a closed
//! form for the crossover: `16^a = (1 + sqrt(65)) / 2` at the kink.
//!
//! Run with: `cargo run --example alpha_minimization`

use num_complex::Complex64 as C64;

use numrad::bounds::{upper_alpha_moduli, upper_alpha_moduli_min};
use numrad::matrix::CMatrix;
use numrad::radius::numerical_radius;
use numrad::tol;

fn main() -> numrad::Result<()> {
    let c = |re: f64| C64::new(re, 0.0);
    let a = CMatrix::new(
        3,
        vec![
            c(0.0),
            c(1.0),
            c(0.0),
            c(0.0),
            c(0.0),
            c(2.0),
            c(0.0),
            c(0.0),
            c(0.0),
        ],
    )?;

    let w = numerical_radius(&a, tol::RADIUS)?.value;
    println!("A = [[0,1,0],[0,0,2],[0,0,0]]");
    println!("w(A)   = {w:.12}  (exactly sqrt(5)/2)");
    println!("w^2(A) = {:.12}", w * w);
    println!();

    // Sample the curve coarsely for display; the minimizer is refined to
    // 1e-10 regardless of the grid.
    let curve = upper_alpha_moduli_min(&a, 33, 1e-10)?;
    println!("alpha      bound value");
    for &(alpha, value) in curve.samples.iter().step_by(4) {
        let marker = if (alpha - 0.5).abs() < 1e-12 { "  <- midpoint" } else { "" };
        println!("{alpha:<10.4} {value:.12}{marker}");
    }
    println!();

    let at_half = upper_alpha_moduli(&a, 0.5)?.value;
    println!("bound at alpha = 1/2 : {at_half:.12}  (exactly 9/4)");
    println!("minimized bound      : {:.12}", curve.min_value);
    println!("argmin alpha         : {:.12}", curve.argmin);
    println!(
        "improvement          : {:.12} ({}% tighter)",
        at_half - curve.min_value,
        ((at_half - curve.min_value) / at_half * 100.0).round()
    );
    println!();

    // At the kink the two branch terms balance: 16^a = (1 + sqrt(65)) / 2.
    let crossover = 16f64.powf(curve.argmin);
    let exact = (1.0 + 65f64.sqrt()) / 2.0;
    println!("16^argmin            : {crossover:.12}");
    println!("(1 + sqrt(65)) / 2   : {exact:.12}");
    Ok(())
}
