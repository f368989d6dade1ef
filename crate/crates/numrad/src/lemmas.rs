//! Scalar and vector inequalities underlying the bound derivations.
//!
//! Each function evaluates both sides of one classical inequality (or the
//! residual of an identity) on concrete inputs, so the certification harness
//! can spot-check the algebra the bounds are built on. Inner products are
//! linear in the first argument and conjugate-linear in the second.

use nalgebra::DVector;
use num_complex::Complex64 as C64;

use crate::linalg::{psd_power, ModuliFactors};
use crate::matrix::CMatrix;
use crate::{Error, Result};

/// Both sides of an inequality `lhs ≤ rhs`.
#[derive(Clone, Copy, Debug)]
pub struct LemmaSample {
    pub lhs: f64,
    pub rhs: f64,
}

impl LemmaSample {
    /// Normalized signed slack; negative means the inequality is violated.
    pub fn slack(&self) -> f64 {
        (self.rhs - self.lhs) / (1.0 + self.lhs.abs().max(self.rhs.abs()))
    }

    pub fn holds(&self, tol: f64) -> bool {
        self.slack() >= -tol
    }
}

/// `⟨u, v⟩ = Σ uᵢ conj(vᵢ)`.
fn inner(u: &DVector<C64>, v: &DVector<C64>) -> C64 {
    v.dotc(u)
}

fn check_dim(a: &CMatrix, v: &DVector<C64>) -> Result<()> {
    if v.len() != a.dim() {
        return Err(Error::DimMismatch(a.dim(), v.len()));
    }
    Ok(())
}

/// Residual of the polarization identity
/// `⟨Ax, y⟩ = (Q(x+y) − Q(x−y))/4 + i(Q(x+iy) − Q(x−iy))/4`
/// with `Q(z) = ⟨Az, z⟩`; exact up to rounding for every `A, x, y`.
pub fn polarization_residual(a: &CMatrix, x: &DVector<C64>, y: &DVector<C64>) -> Result<f64> {
    check_dim(a, x)?;
    check_dim(a, y)?;
    let d = a.dense();
    let q = |z: &DVector<C64>| -> C64 { inner(&(d * z), z) };
    let iy = y * C64::new(0.0, 1.0);
    let recovered = (q(&(x + y)) - q(&(x - y))) * 0.25
        + (q(&(x + &iy)) - q(&(x - &iy))) * C64::new(0.0, 0.25);
    let direct = inner(&(d * x), y);
    Ok((recovered - direct).norm())
}

/// Mixed Schwarz inequality
/// `|⟨Ax, y⟩|² ≤ ⟨|A|^{2α} x, x⟩ · ⟨|A*|^{2(1−α)} y, y⟩`, `α ∈ [0, 1]`.
pub fn heinz(a: &CMatrix, x: &DVector<C64>, y: &DVector<C64>, alpha: f64) -> Result<LemmaSample> {
    check_dim(a, x)?;
    check_dim(a, y)?;
    if !(alpha.is_finite() && (0.0..=1.0).contains(&alpha)) {
        return Err(Error::InvalidArgument(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )));
    }
    let f = ModuliFactors::new(a)?;
    let lhs = inner(&(a.dense() * x), y).norm_sqr();
    let qx = inner(&(f.abs_pow(2.0 * alpha).dense() * x), x).re;
    let qy = inner(&(f.abs_star_pow(2.0 * (1.0 - alpha)).dense() * y), y).re;
    Ok(LemmaSample { lhs, rhs: qx * qy })
}

/// Buzano's extension of Cauchy-Schwarz:
/// `|⟨a, e⟩⟨e, b⟩| ≤ (|⟨a, b⟩| + ‖a‖‖b‖)/2` for unit `e`
/// (`e` is normalized here; a zero `e` is rejected).
pub fn buzano(a: &DVector<C64>, b: &DVector<C64>, e: &DVector<C64>) -> Result<LemmaSample> {
    if a.len() != b.len() || a.len() != e.len() {
        return Err(Error::DimMismatch(a.len(), b.len().max(e.len())));
    }
    let norm_e = e.norm();
    if norm_e <= 0.0 {
        return Err(Error::InvalidArgument(
            "Buzano reference vector must be nonzero".into(),
        ));
    }
    let e = e / C64::new(norm_e, 0.0);
    let lhs = (inner(a, &e) * inner(&e, b)).norm();
    let rhs = 0.5 * (inner(a, b).norm() + a.norm() * b.norm());
    Ok(LemmaSample { lhs, rhs })
}

/// Power-mean (McCarthy) inequality for positive semidefinite `A`:
/// `⟨Ax, x⟩^r ≤ ⟨A^r x, x⟩` for unit `x` and `r ≥ 1`
/// (`x` is normalized here).
pub fn power_mean(a: &CMatrix, x: &DVector<C64>, r: f64) -> Result<LemmaSample> {
    check_dim(a, x)?;
    if !(r.is_finite() && r >= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "power parameter must satisfy r >= 1, got {r}"
        )));
    }
    let norm_x = x.norm();
    if norm_x <= 0.0 {
        return Err(Error::InvalidArgument(
            "power-mean vector must be nonzero".into(),
        ));
    }
    let x = x / C64::new(norm_x, 0.0);
    let ar = psd_power(a, r)?;
    let base = inner(&(a.dense() * &x), &x).re.max(0.0);
    Ok(LemmaSample {
        lhs: base.powf(r),
        rhs: inner(&(ar.dense() * &x), &x).re,
    })
}

/// Scalar rotation bound `|a + b| ≤ √2 |a + ib|` for real `a, b`.
pub fn scalar_rotation(a: f64, b: f64) -> LemmaSample {
    LemmaSample {
        lhs: (a + b).abs(),
        rhs: 2f64.sqrt() * a.hypot(b),
    }
}

/// Norm convexity for positive semidefinite `A, B` and `r ≥ 1`:
/// `‖((A + B)/2)^r‖ ≤ ‖(A^r + B^r)/2‖`.
pub fn convex_norm(a: &CMatrix, b: &CMatrix, r: f64) -> Result<LemmaSample> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch(a.dim(), b.dim()));
    }
    if !(r.is_finite() && r >= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "power parameter must satisfy r >= 1, got {r}"
        )));
    }
    let mean = (&(a + b)).scale(C64::new(0.5, 0.0));
    let lhs = crate::linalg::op_norm(&psd_power(&mean, r)?);
    let pow_mean = (&(&psd_power(a, r)? + &psd_power(b, r)?)).scale(C64::new(0.5, 0.0));
    Ok(LemmaSample {
        lhs,
        rhs: crate::linalg::op_norm(&pow_mean),
    })
}
