//! Certified lower and upper bound evaluators for the numerical radius.
//!
//! Every evaluator returns a [`BoundReport`] carrying a stable id, the side
//! of the estimate, the target quantity it bounds, and the formula it
//! implements. Values are compared against solver-computed targets by the
//! certification harness; nothing in this module assumes an inequality, it
//! only evaluates the closed-form side.

use serde::{Deserialize, Serialize};
use std::cell::RefCell;
use std::fmt;

use crate::linalg::{op_norm, ModuliFactors};
use crate::matrix::CMatrix;
use crate::radius::{golden_max, numerical_radius};
use crate::transform::{aluthge, cartesian};
use crate::{tol, Error, Result};

/// Default α-grid for [`upper_alpha_moduli_min`].
pub const ALPHA_GRID_DEFAULT: usize = 257;
/// Default golden-section bracket width for the α-minimization.
pub const ALPHA_REFINE_WIDTH: f64 = 1e-10;

/// Which side of the target quantity a bound estimates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

/// The quantity a bound constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// `w(A)` of the primary operand.
    W,
    /// `w^2(A)` of the primary operand.
    WSquared,
    /// `w^{2r}(B*A)` for a pair of operands.
    #[serde(rename = "w_power_2r")]
    WPower2r,
    /// `w` of a named derived expression (commutators, `A*X + XA`).
    WOfExpression,
}

/// Sign choice in `AXB ± BYA` style expressions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Optional bound parameters; absent fields are omitted from JSON.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
}

/// One evaluated bound.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    pub id: String,
    pub side: Side,
    pub target: Target,
    pub value: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Params>,
    /// Formula implemented by this evaluator (plus the classical citation
    /// when the inequality has an established name).
    pub paper_anchor: String,
}

impl BoundReport {
    fn new(id: &str, side: Side, target: Target, value: f64, anchor: &str) -> Self {
        Self {
            id: id.to_string(),
            side,
            target,
            value,
            params: None,
            paper_anchor: anchor.to_string(),
        }
    }

    fn with(mut self, params: Params) -> Self {
        self.params = Some(params);
        self
    }
}

/// Sampled α-objective with its certified minimizer.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlphaCurve {
    /// `(α, value)` pairs on the uniform grid over `[0, 1]`.
    pub samples: Vec<(f64, f64)>,
    /// Refined minimizer.
    pub argmin: f64,
    /// Refined minimum; never exceeds any sample.
    pub min_value: f64,
}

fn wrad(a: &CMatrix) -> Result<f64> {
    Ok(numerical_radius(a, tol::RADIUS)?.value)
}

/// `‖A*A + AA*‖`.
fn gram_pair_norm(a: &CMatrix) -> f64 {
    let d = a.dense();
    let g = d.adjoint() * d + d * d.adjoint();
    op_norm(&CMatrix::from_dense_unchecked(g))
}

fn rotated_part_norms(a: &CMatrix) -> (f64, f64) {
    let p = cartesian(a);
    let plus = &p.re + &p.im;
    let minus = &p.re - &p.im;
    (op_norm(&plus), op_norm(&minus))
}

fn part_norms(a: &CMatrix) -> (f64, f64) {
    let p = cartesian(a);
    (op_norm(&p.re), op_norm(&p.im))
}

fn check_r(r: f64) -> Result<()> {
    if !(r.is_finite() && r >= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "power parameter must satisfy r >= 1, got {r}"
        )));
    }
    Ok(())
}

fn check_pair(a: &CMatrix, b: &CMatrix) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch(a.dim(), b.dim()));
    }
    Ok(())
}

/// `w(A) ≥ ‖A‖/2`.
pub fn lower_half_norm(a: &CMatrix) -> Result<BoundReport> {
    Ok(BoundReport::new(
        "lower_half_norm",
        Side::Lower,
        Target::W,
        op_norm(a) / 2.0,
        "w(A) >= ||A||/2, sharp when A^2 = 0",
    ))
}

/// `w(A) ≤ ‖A‖`.
pub fn upper_norm(a: &CMatrix) -> Result<BoundReport> {
    Ok(BoundReport::new(
        "upper_norm",
        Side::Upper,
        Target::W,
        op_norm(a),
        "w(A) <= ||A||, sharp for normal A",
    ))
}

/// `¼‖A*A+AA*‖ ≤ w²(A) ≤ ½‖A*A+AA*‖` (Kittaneh 2005), as a (lower, upper)
/// pair of reports targeting `w²`.
pub fn kittaneh_pair(a: &CMatrix) -> Result<(BoundReport, BoundReport)> {
    let s = gram_pair_norm(a);
    Ok((
        BoundReport::new(
            "lower_kittaneh",
            Side::Lower,
            Target::WSquared,
            s / 4.0,
            "w^2(A) >= ||A*A + AA*||/4 (Kittaneh 2005)",
        ),
        BoundReport::new(
            "upper_kittaneh",
            Side::Upper,
            Target::WSquared,
            s / 2.0,
            "w^2(A) <= ||A*A + AA*||/2 (Kittaneh 2005)",
        ),
    ))
}

/// `w(A) ≤ ½(‖A‖ + ‖A²‖^{1/2})` (Kittaneh 2003).
pub fn upper_kittaneh_power(a: &CMatrix) -> Result<BoundReport> {
    let sq = a * a;
    Ok(BoundReport::new(
        "upper_kittaneh_power",
        Side::Upper,
        Target::W,
        0.5 * (op_norm(a) + op_norm(&sq).sqrt()),
        "w(A) <= (||A|| + ||A^2||^(1/2))/2 (Kittaneh 2003)",
    ))
}

/// `w(A) ≤ ½(‖A‖ + w(Ã))` (Yamazaki 2007), `Ã` the Aluthge transform.
pub fn upper_yamazaki(a: &CMatrix) -> Result<BoundReport> {
    let t = aluthge(a)?;
    Ok(BoundReport::new(
        "upper_yamazaki",
        Side::Upper,
        Target::W,
        0.5 * (op_norm(a) + wrad(&t)?),
        "w(A) <= (||A|| + w(Aluthge(A)))/2 (Yamazaki 2007)",
    ))
}

/// `w(A) ≥ ‖A‖/2 + |‖ℜ(A)+ℑ(A)‖ − ‖ℜ(A)−ℑ(A)‖| / (2√2)`.
pub fn lower_rotated_cartesian(a: &CMatrix) -> Result<BoundReport> {
    let (np, nm) = rotated_part_norms(a);
    Ok(BoundReport::new(
        "lower_rotated_cartesian",
        Side::Lower,
        Target::W,
        op_norm(a) / 2.0 + (np - nm).abs() / (2.0 * 2f64.sqrt()),
        "w(A) >= ||A||/2 + |(||Re A + Im A|| - ||Re A - Im A||)|/(2*sqrt(2))",
    ))
}

/// `w(A) ≥ ‖A‖/2 + |‖ℜ(A)‖ − ‖ℑ(A)‖| / 2` (comparison baseline).
pub fn lower_cartesian_parts(a: &CMatrix) -> Result<BoundReport> {
    let (nr, ni) = part_norms(a);
    Ok(BoundReport::new(
        "lower_cartesian_parts",
        Side::Lower,
        Target::W,
        op_norm(a) / 2.0 + (nr - ni).abs() / 2.0,
        "w(A) >= ||A||/2 + |(||Re A|| - ||Im A||)|/2",
    ))
}

/// `w²(A) ≥ ¼‖A*A+AA*‖ + ¼|‖ℜ(A)+ℑ(A)‖² − ‖ℜ(A)−ℑ(A)‖²|`.
pub fn lower_sq_rotated_cartesian(a: &CMatrix) -> Result<BoundReport> {
    let (np, nm) = rotated_part_norms(a);
    Ok(BoundReport::new(
        "lower_sq_rotated_cartesian",
        Side::Lower,
        Target::WSquared,
        gram_pair_norm(a) / 4.0 + (np * np - nm * nm).abs() / 4.0,
        "w^2(A) >= ||A*A + AA*||/4 + |(||Re A + Im A||^2 - ||Re A - Im A||^2)|/4",
    ))
}

/// `w²(A) ≥ ¼‖A*A+AA*‖ + ½|‖ℜ(A)‖² − ‖ℑ(A)‖²|` (comparison baseline).
pub fn lower_sq_cartesian_parts(a: &CMatrix) -> Result<BoundReport> {
    let (nr, ni) = part_norms(a);
    Ok(BoundReport::new(
        "lower_sq_cartesian_parts",
        Side::Lower,
        Target::WSquared,
        gram_pair_norm(a) / 4.0 + (nr * nr - ni * ni).abs() / 2.0,
        "w^2(A) >= ||A*A + AA*||/4 + |(||Re A||^2 - ||Im A||^2)|/2",
    ))
}

/// `w(A) ≤ ½(‖A‖² + w²(Ã) + w(|A|Ã + Ã|A|))^{1/2}`.
pub fn upper_aluthge_refined(a: &CMatrix) -> Result<BoundReport> {
    let t = aluthge(a)?;
    let abs_a = ModuliFactors::new(a)?.abs_pow(1.0);
    let cross = &(&abs_a * &t) + &(&t * &abs_a);
    let n = op_norm(a);
    let wt = wrad(&t)?;
    let value = 0.5 * (n * n + wt * wt + wrad(&cross)?).sqrt();
    Ok(BoundReport::new(
        "upper_aluthge_refined",
        Side::Upper,
        Target::W,
        value,
        "w(A) <= (||A||^2 + w^2(T) + w(|A|T + T|A|))^(1/2)/2, T = Aluthge(A)",
    ))
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha.is_finite() && (0.0..=1.0).contains(&alpha)) {
        return Err(Error::InvalidArgument(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )));
    }
    Ok(())
}

fn alpha_value(f: &ModuliFactors, alpha: f64) -> Result<f64> {
    let norm_term = {
        let m = &f.abs_pow(4.0 * alpha) + &f.abs_star_pow(4.0 * (1.0 - alpha));
        op_norm(&m) / 4.0
    };
    // order matters: the |A*| power multiplies from the left
    let prod = &f.abs_star_pow(2.0 * (1.0 - alpha)) * &f.abs_pow(2.0 * alpha);
    Ok(norm_term + wrad(&prod)? / 2.0)
}

const ALPHA_ANCHOR: &str =
    "w^2(A) <= |||A|^(4a) + |A*|^(4(1-a))||/4 + w(|A*|^(2(1-a)) |A|^(2a))/2";

/// `w²(A) ≤ ¼‖|A|^{4α} + |A*|^{4(1−α)}‖ + ½ w(|A*|^{2(1−α)}|A|^{2α})`,
/// `α ∈ [0,1]`. Zeroth powers follow the range-projection convention.
pub fn upper_alpha_moduli(a: &CMatrix, alpha: f64) -> Result<BoundReport> {
    check_alpha(alpha)?;
    let f = ModuliFactors::new(a)?;
    Ok(BoundReport::new(
        "upper_alpha_moduli",
        Side::Upper,
        Target::WSquared,
        alpha_value(&f, alpha)?,
        ALPHA_ANCHOR,
    )
    .with(Params {
        alpha: Some(alpha),
        ..Params::default()
    }))
}

/// Minimizes the α-objective of [`upper_alpha_moduli`] over `[0, 1]`:
/// uniform grid of `grid` points, then golden-section refinement of the
/// best (up to three) local-minimum brackets down to `refine_width`.
///
/// Every sampled or refined value is itself a valid upper bound on `w²`,
/// so `min_value` is certified regardless of refinement depth.
pub fn upper_alpha_moduli_min(a: &CMatrix, grid: usize, refine_width: f64) -> Result<AlphaCurve> {
    if grid < 16 {
        return Err(Error::InvalidArgument(format!(
            "alpha grid must have at least 16 points, got {grid}"
        )));
    }
    if !(refine_width.is_finite() && refine_width > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "refinement width must be positive, got {refine_width}"
        )));
    }
    let f = ModuliFactors::new(a)?;
    let step = 1.0 / (grid - 1) as f64;
    let mut samples = Vec::with_capacity(grid);
    for k in 0..grid {
        let alpha = (k as f64 * step).min(1.0);
        samples.push((alpha, alpha_value(&f, alpha)?));
    }

    let mut best = samples
        .iter()
        .copied()
        .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
        .unwrap();
    // swap (alpha, value) -> (argmin, min)
    let mut argmin = best.0;
    let mut min_value = best.1;

    // interior or boundary local minima, best three
    let mut locs: Vec<usize> = (0..grid)
        .filter(|&k| {
            (k == 0 || samples[k].1 <= samples[k - 1].1)
                && (k + 1 == grid || samples[k].1 <= samples[k + 1].1)
        })
        .collect();
    locs.sort_by(|&i, &j| samples[i].1.partial_cmp(&samples[j].1).unwrap());
    locs.truncate(3);

    let err: RefCell<Option<Error>> = RefCell::new(None);
    for &k in &locs {
        let lo = if k == 0 { 0.0 } else { samples[k - 1].0 };
        let hi = if k + 1 == grid { 1.0 } else { samples[k + 1].0 };
        let (x, neg_v) = golden_max(
            |al| match alpha_value(&f, al) {
                Ok(v) => -v,
                Err(e) => {
                    let mut slot = err.borrow_mut();
                    if slot.is_none() {
                        *slot = Some(e);
                    }
                    f64::NEG_INFINITY
                }
            },
            lo,
            hi,
            refine_width,
        );
        if let Some(e) = err.borrow_mut().take() {
            return Err(e);
        }
        if -neg_v < min_value {
            argmin = x;
            min_value = -neg_v;
        }
    }
    best = (argmin, min_value);
    Ok(AlphaCurve {
        samples,
        argmin: best.0,
        min_value: best.1,
    })
}

/// Raw product bound `w^r(B*A) ≤ ½‖|A|^{2r} + |B|^{2r}‖` (Dragomir 2009);
/// returns the right-hand side.
pub fn prod_upper_dragomir_half_norm(a: &CMatrix, b: &CMatrix, r: f64) -> Result<f64> {
    check_pair(a, b)?;
    check_r(r)?;
    let fa = ModuliFactors::new(a)?;
    let fb = ModuliFactors::new(b)?;
    let m = &fa.abs_pow(2.0 * r) + &fb.abs_pow(2.0 * r);
    Ok(op_norm(&m) / 2.0)
}

/// Squared form of the Dragomir product bound, targeting `w^{2r}(B*A)` so it
/// is directly comparable with the other product bounds.
pub fn prod_upper_dragomir(a: &CMatrix, b: &CMatrix, r: f64) -> Result<BoundReport> {
    let half = prod_upper_dragomir_half_norm(a, b, r)?;
    Ok(BoundReport::new(
        "prod_upper_dragomir",
        Side::Upper,
        Target::WPower2r,
        half * half,
        "w^r(B*A) <= |||A|^(2r) + |B|^(2r)||/2 (Dragomir 2009), squared to target w^(2r)",
    )
    .with(Params {
        r: Some(r),
        ..Params::default()
    }))
}

/// `w^{2r}(B*A) ≤ ½ w^r(|B|²|A|²) + ¼‖|B|^{4r} + |A|^{4r}‖`
/// (Heydarbeygi et al. 2020).
pub fn prod_upper_heydarbeygi(a: &CMatrix, b: &CMatrix, r: f64) -> Result<BoundReport> {
    check_pair(a, b)?;
    check_r(r)?;
    let fa = ModuliFactors::new(a)?;
    let fb = ModuliFactors::new(b)?;
    let base = wrad(&(&fb.abs_pow(2.0) * &fa.abs_pow(2.0)))?;
    let tail = &fb.abs_pow(4.0 * r) + &fa.abs_pow(4.0 * r);
    Ok(BoundReport::new(
        "prod_upper_heydarbeygi",
        Side::Upper,
        Target::WPower2r,
        0.5 * base.powf(r) + 0.25 * op_norm(&tail),
        "w^(2r)(B*A) <= w^r(|B|^2 |A|^2)/2 + |||B|^(4r) + |A|^(4r)||/4 (Heydarbeygi et al. 2020)",
    )
    .with(Params {
        r: Some(r),
        ..Params::default()
    }))
}

/// `w^{2r}(B*A) ≤ ½ w²(|A|^{2r} + i|B|^{2r})`.
pub fn prod_upper_complex_moduli(a: &CMatrix, b: &CMatrix, r: f64) -> Result<BoundReport> {
    check_pair(a, b)?;
    check_r(r)?;
    let fa = ModuliFactors::new(a)?;
    let fb = ModuliFactors::new(b)?;
    let m = fa.abs_pow(2.0 * r).dense()
        + fb.abs_pow(2.0 * r).dense() * num_complex::Complex64::new(0.0, 1.0);
    let wm = wrad(&CMatrix::from_dense_unchecked(m))?;
    Ok(BoundReport::new(
        "prod_upper_complex_moduli",
        Side::Upper,
        Target::WPower2r,
        0.5 * wm * wm,
        "w^(2r)(B*A) <= w^2(|A|^(2r) + i|B|^(2r))/2",
    )
    .with(Params {
        r: Some(r),
        ..Params::default()
    }))
}

/// `w^{2r}(B*A) ≤ ½(‖|B|²|A|² + |A|²|B|²‖/2)^r + ¼‖|B|^{4r} + |A|^{4r}‖`.
pub fn prod_upper_anticommutator(a: &CMatrix, b: &CMatrix, r: f64) -> Result<BoundReport> {
    check_pair(a, b)?;
    check_r(r)?;
    let fa = ModuliFactors::new(a)?;
    let fb = ModuliFactors::new(b)?;
    let p = &fb.abs_pow(2.0) * &fa.abs_pow(2.0);
    let anti = &p + &p.conj_transpose();
    let tail = &fb.abs_pow(4.0 * r) + &fa.abs_pow(4.0 * r);
    Ok(BoundReport::new(
        "prod_upper_anticommutator",
        Side::Upper,
        Target::WPower2r,
        0.5 * (op_norm(&anti) / 2.0).powf(r) + 0.25 * op_norm(&tail),
        "w^(2r)(B*A) <= (|||B|^2|A|^2 + |A|^2|B|^2||/2)^r / 2 + |||B|^(4r) + |A|^(4r)||/4",
    )
    .with(Params {
        r: Some(r),
        ..Params::default()
    }))
}

/// `w²(A) − ¼|‖ℜ+ℑ‖² − ‖ℜ−ℑ‖²|`, the radicand shared by the commutator
/// bounds. A small negative from rounding clamps to zero; a negative beyond
/// tolerance contradicts the certified squared lower bound and is an
/// internal-consistency error.
fn comm_radicand(w2: f64, corr: f64) -> Result<f64> {
    let rad = w2 - corr;
    if rad >= 0.0 {
        Ok(rad)
    } else if rad >= -tol::at(tol::CHECK, w2.abs() + corr.abs()) {
        Ok(0.0)
    } else {
        Err(Error::Inconsistent(format!(
            "commutator radicand {rad:.3e} negative beyond tolerance (w^2 = {w2:.6e}, correction = {corr:.6e})"
        )))
    }
}

const COMM_ANCHOR: &str = "w(AXB +/- BYA) <= 2*sqrt(2)*||B||*max(||X||,||Y||)*sqrt(w^2(A) - |(||Re A + Im A||^2 - ||Re A - Im A||^2)|/4)";

/// `w(AXB ± BYA) ≤ 2√2 ‖B‖ max{‖X‖,‖Y‖} √(w²(A) − ¼|‖ℜ+ℑ‖² − ‖ℜ−ℑ‖²|)`.
pub fn comm_upper_generalized(
    a: &CMatrix,
    b: &CMatrix,
    x: &CMatrix,
    y: &CMatrix,
    sign: Sign,
) -> Result<BoundReport> {
    check_pair(a, b)?;
    check_pair(a, x)?;
    check_pair(a, y)?;
    let w = wrad(a)?;
    let (np, nm) = rotated_part_norms(a);
    let rad = comm_radicand(w * w, (np * np - nm * nm).abs() / 4.0)?;
    let value = 2.0 * 2f64.sqrt() * op_norm(b) * op_norm(x).max(op_norm(y)) * rad.sqrt();
    Ok(
        BoundReport::new("comm_upper_generalized", Side::Upper, Target::WOfExpression, value, COMM_ANCHOR)
            .with(Params {
                sign: Some(sign),
                ..Params::default()
            }),
    )
}

/// `w(AB ± BA) ≤ 2√2 ‖B‖ √(w²(A) − ¼|‖ℜ+ℑ‖² − ‖ℜ−ℑ‖²|)`
/// (the `X = Y = I` case of [`comm_upper_generalized`]).
pub fn comm_upper_refined(a: &CMatrix, b: &CMatrix, sign: Sign) -> Result<BoundReport> {
    check_pair(a, b)?;
    let w = wrad(a)?;
    let (np, nm) = rotated_part_norms(a);
    let rad = comm_radicand(w * w, (np * np - nm * nm).abs() / 4.0)?;
    let value = 2.0 * 2f64.sqrt() * op_norm(b) * rad.sqrt();
    Ok(BoundReport::new(
        "comm_upper_refined",
        Side::Upper,
        Target::WOfExpression,
        value,
        "w(AB +/- BA) <= 2*sqrt(2)*||B||*sqrt(w^2(A) - |(||Re A + Im A||^2 - ||Re A - Im A||^2)|/4)",
    )
    .with(Params {
        sign: Some(sign),
        ..Params::default()
    }))
}

/// `w(AB + BA) ≤ 2√2 ‖B‖ w(A)` (Fong–Holbrook 1983).
pub fn comm_upper_fong_holbrook(a: &CMatrix, b: &CMatrix) -> Result<BoundReport> {
    check_pair(a, b)?;
    Ok(BoundReport::new(
        "comm_upper_fong_holbrook",
        Side::Upper,
        Target::WOfExpression,
        2.0 * 2f64.sqrt() * op_norm(b) * wrad(a)?,
        "w(AB + BA) <= 2*sqrt(2)*||B||*w(A) (Fong-Holbrook 1983)",
    )
    .with(Params {
        sign: Some(Sign::Plus),
        ..Params::default()
    }))
}

/// `w(AB ± BA) ≤ 2√2 ‖B‖ √(w²(A) − ½|‖ℜ(A)‖² − ‖ℑ(A)‖²|)`
/// (Hirzallah–Kittaneh 2011).
pub fn comm_upper_hirzallah_kittaneh(a: &CMatrix, b: &CMatrix, sign: Sign) -> Result<BoundReport> {
    check_pair(a, b)?;
    let w = wrad(a)?;
    let (nr, ni) = part_norms(a);
    let rad = comm_radicand(w * w, (nr * nr - ni * ni).abs() / 2.0)?;
    let value = 2.0 * 2f64.sqrt() * op_norm(b) * rad.sqrt();
    Ok(BoundReport::new(
        "comm_upper_hirzallah_kittaneh",
        Side::Upper,
        Target::WOfExpression,
        value,
        "w(AB +/- BA) <= 2*sqrt(2)*||B||*sqrt(w^2(A) - |(||Re A||^2 - ||Im A||^2)|/2) (Hirzallah-Kittaneh 2011)",
    )
    .with(Params {
        sign: Some(sign),
        ..Params::default()
    }))
}

/// `w(A*X + XA) ≤ 2‖A‖ w(X)` (Fong–Holbrook 1983).
pub fn upper_axxa_fong(a: &CMatrix, x: &CMatrix) -> Result<BoundReport> {
    check_pair(a, x)?;
    Ok(BoundReport::new(
        "upper_axxa_fong",
        Side::Upper,
        Target::WOfExpression,
        2.0 * op_norm(a) * wrad(x)?,
        "w(A*X + XA) <= 2*||A||*w(X) (Fong-Holbrook 1983)",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::tests::{fixture_m1, fixture_m2};
    use num_complex::Complex64 as C64;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn jordan2() -> CMatrix {
        CMatrix::new(2, vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap()
    }

    fn shift3() -> CMatrix {
        CMatrix::new(
            3,
            vec![
                c(0.0, 0.0),
                c(1.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(2.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
            ],
        )
        .unwrap()
    }

    fn diag_1i0() -> CMatrix {
        CMatrix::from_diag(&[c(1.0, 1.0), c(0.0, 0.0)])
    }

    fn diag_1m1() -> CMatrix {
        CMatrix::from_diag(&[c(1.0, 0.0), c(-1.0, 0.0)])
    }

    fn near(x: f64, y: f64, eps: f64) {
        assert!((x - y).abs() < eps, "{x} vs {y}");
    }

    fn near_rel(x: f64, y: f64, eps: f64) {
        assert!((x - y).abs() < eps * (1.0 + y.abs()), "{x} vs {y}");
    }

    #[test]
    fn envelope_bounds() {
        near(lower_half_norm(&jordan2()).unwrap().value, 0.5, 1e-15);
        near(upper_norm(&jordan2()).unwrap().value, 1.0, 1e-14);
        near(lower_half_norm(&shift3()).unwrap().value, 1.0, 1e-14);
        near(upper_norm(&shift3()).unwrap().value, 2.0, 1e-14);
        assert_eq!(upper_norm(&CMatrix::zeros(3)).unwrap().value, 0.0);
    }

    #[test]
    fn kittaneh_pair_values() {
        let (lo, hi) = kittaneh_pair(&jordan2()).unwrap();
        near(lo.value, 0.25, 1e-14);
        near(hi.value, 0.5, 1e-14);
        assert_eq!(lo.side, Side::Lower);
        assert_eq!(hi.target, Target::WSquared);
        let (lo, hi) = kittaneh_pair(&diag_1i0()).unwrap();
        near(lo.value, 1.0, 1e-13);
        near(hi.value, 2.0, 1e-13);
        let (lo, hi) = kittaneh_pair(&fixture_m1()).unwrap();
        near_rel(lo.value, 3.6842112440054824, 1e-11);
        near_rel(hi.value, 7.368422488010965, 1e-11);
    }

    #[test]
    fn kittaneh_power_values() {
        near(
            upper_kittaneh_power(&shift3()).unwrap().value,
            0.5 * (2.0 + 2f64.sqrt()),
            1e-12,
        );
        near_rel(
            upper_kittaneh_power(&fixture_m1()).unwrap().value,
            2.7416144286191932,
            1e-11,
        );
    }

    #[test]
    fn yamazaki_values() {
        near(upper_yamazaki(&jordan2()).unwrap().value, 0.5, 1e-11);
        // normal matrix: Aluthge transform fixes it, bound collapses to the norm
        let d = CMatrix::from_diag(&[c(1.0, 1.0), c(2.0, 0.0)]);
        near(upper_yamazaki(&d).unwrap().value, 2.0, 1e-10);
        near_rel(
            upper_yamazaki(&fixture_m1()).unwrap().value,
            2.6217472130200603,
            1e-9,
        );
    }

    #[test]
    fn rotated_cartesian_lower_values() {
        near(
            lower_rotated_cartesian(&diag_1i0()).unwrap().value,
            2f64.sqrt(),
            1e-12,
        );
        near(lower_rotated_cartesian(&diag_1m1()).unwrap().value, 0.5, 1e-12);
        near(lower_rotated_cartesian(&jordan2()).unwrap().value, 0.5, 1e-12);
        near_rel(
            lower_rotated_cartesian(&fixture_m1()).unwrap().value,
            1.6268673430681142,
            1e-11,
        );
    }

    #[test]
    fn cartesian_parts_lower_values() {
        near(
            lower_cartesian_parts(&diag_1i0()).unwrap().value,
            2f64.sqrt() / 2.0,
            1e-12,
        );
        near(lower_cartesian_parts(&diag_1m1()).unwrap().value, 1.0, 1e-12);
        near_rel(
            lower_cartesian_parts(&fixture_m1()).unwrap().value,
            1.9995927248588368,
            1e-11,
        );
    }

    #[test]
    fn squared_lower_values() {
        near(lower_sq_rotated_cartesian(&diag_1i0()).unwrap().value, 2.0, 1e-12);
        near(lower_sq_rotated_cartesian(&diag_1m1()).unwrap().value, 0.5, 1e-12);
        near(lower_sq_cartesian_parts(&diag_1i0()).unwrap().value, 1.0, 1e-12);
        near(lower_sq_cartesian_parts(&diag_1m1()).unwrap().value, 1.0, 1e-12);
        near_rel(
            lower_sq_rotated_cartesian(&fixture_m1()).unwrap().value,
            4.343080696489573,
            1e-11,
        );
        near_rel(
            lower_sq_cartesian_parts(&fixture_m1()).unwrap().value,
            5.797539832206599,
            1e-11,
        );
    }

    #[test]
    fn non_comparability_witnesses() {
        // the two lower bounds beat each other on different matrices
        let a = diag_1i0();
        let h = diag_1m1();
        let rot_a = lower_rotated_cartesian(&a).unwrap().value;
        let parts_a = lower_cartesian_parts(&a).unwrap().value;
        assert!(rot_a > parts_a + 0.5);
        let rot_h = lower_rotated_cartesian(&h).unwrap().value;
        let parts_h = lower_cartesian_parts(&h).unwrap().value;
        assert!(parts_h > rot_h + 0.4);
        // same pattern for the squared pair
        assert!(
            lower_sq_rotated_cartesian(&a).unwrap().value
                > lower_sq_cartesian_parts(&a).unwrap().value + 0.9
        );
        assert!(
            lower_sq_cartesian_parts(&h).unwrap().value
                > lower_sq_rotated_cartesian(&h).unwrap().value + 0.4
        );
        // and for the commutator refinements (B = I)
        let id = CMatrix::identity(2);
        let ref_a = comm_upper_refined(&a, &id, Sign::Plus).unwrap().value;
        let hk_a = comm_upper_hirzallah_kittaneh(&a, &id, Sign::Plus).unwrap().value;
        near(ref_a, 2.0 * 2f64.sqrt(), 1e-10);
        near(hk_a, 4.0, 1e-10);
        let ref_h = comm_upper_refined(&h, &id, Sign::Plus).unwrap().value;
        let hk_h = comm_upper_hirzallah_kittaneh(&h, &id, Sign::Plus).unwrap().value;
        near(ref_h, 2.0 * 2f64.sqrt(), 1e-10);
        near(hk_h, 2.0, 1e-10);
    }

    #[test]
    fn aluthge_refined_values() {
        near(upper_aluthge_refined(&jordan2()).unwrap().value, 0.5, 1e-11);
        near(
            upper_aluthge_refined(&diag_1i0()).unwrap().value,
            2f64.sqrt(),
            1e-10,
        );
        near_rel(
            upper_aluthge_refined(&fixture_m1()).unwrap().value,
            2.5770001296698304,
            1e-9,
        );
    }

    #[test]
    fn alpha_moduli_worked_example() {
        let a = shift3();
        // midpoint value is exactly 9/4
        near(upper_alpha_moduli(&a, 0.5).unwrap().value, 2.25, 1e-12);
        // endpoints pin the range-projection convention for the zeroth power
        near(upper_alpha_moduli(&a, 0.0).unwrap().value, 6.25, 1e-10);
        near(upper_alpha_moduli(&a, 1.0).unwrap().value, 4.5, 1e-10);
        // interior branch formula (1 + 16^(1-a))/4 + 4^(1-a)/2 below the crossover
        for alpha in [0.2, 0.4] {
            let expect =
                (1.0 + 16f64.powf(1.0 - alpha)) / 4.0 + 4f64.powf(1.0 - alpha) / 2.0;
            near(upper_alpha_moduli(&a, alpha).unwrap().value, expect, 1e-9);
        }
        near_rel(
            upper_alpha_moduli(&fixture_m1(), 0.5).unwrap().value,
            6.880558909833666,
            1e-9,
        );
    }

    #[test]
    fn alpha_minimization_worked_example() {
        let a = shift3();
        let curve = upper_alpha_moduli_min(&a, 257, 1e-10).unwrap();
        near(curve.min_value, 2.07234712770396, 1e-9);
        // the minimizer is the branch crossover: 16^a = (1 + sqrt(65))/2
        let crossover = (1.0 + 65f64.sqrt()) / 2.0;
        near(16f64.powf(curve.argmin), crossover, 1e-6);
        assert!(curve.min_value < 2.25);
        assert!(curve
            .samples
            .iter()
            .all(|&(_, v)| curve.min_value <= v + 1e-12));
        assert_eq!(curve.samples.len(), 257);
        assert!((curve.samples[128].0 - 0.5).abs() < 1e-15);
    }

    #[test]
    fn alpha_minimization_frozen_dense() {
        let curve = upper_alpha_moduli_min(&fixture_m1(), 129, 1e-9).unwrap();
        near_rel(curve.min_value, 6.8763150078750535, 1e-8);
        near(curve.argmin, 0.4910233526446066, 1e-5);
    }

    #[test]
    fn alpha_min_zero_matrix_is_zero() {
        let curve = upper_alpha_moduli_min(&CMatrix::zeros(3), 17, 1e-6).unwrap();
        assert_eq!(curve.min_value, 0.0);
        assert!(curve.samples.iter().all(|&(_, v)| v == 0.0));
    }

    #[test]
    fn dragomir_values() {
        let j = jordan2();
        let raw = prod_upper_dragomir_half_norm(&j, &j, 1.0).unwrap();
        near(raw, 1.0, 1e-13);
        near(prod_upper_dragomir(&j, &j, 1.0).unwrap().value, 1.0, 1e-13);
        let raw = prod_upper_dragomir_half_norm(&fixture_m1(), &fixture_m2(), 2.0).unwrap();
        near_rel(raw, 901.9290660398483, 1e-11);
        let rep = prod_upper_dragomir(&fixture_m1(), &fixture_m2(), 2.0).unwrap();
        near_rel(rep.value, 901.9290660398483 * 901.9290660398483, 1e-10);
        assert_eq!(rep.params.unwrap().r, Some(2.0));
    }

    #[test]
    fn heydarbeygi_frozen() {
        let rep = prod_upper_heydarbeygi(&fixture_m1(), &fixture_m2(), 1.5).unwrap();
        near_rel(rep.value, 20023.201311338526, 1e-9);
        // identity pair collapses to 1
        let id = CMatrix::identity(3);
        near(prod_upper_heydarbeygi(&id, &id, 1.0).unwrap().value, 1.0, 1e-11);
    }

    #[test]
    fn complex_moduli_frozen() {
        let rep = prod_upper_complex_moduli(&fixture_m1(), &fixture_m2(), 2.0).unwrap();
        near_rel(rep.value, 1578626.9530241587, 1e-9);
        let id = CMatrix::identity(3);
        near(prod_upper_complex_moduli(&id, &id, 1.0).unwrap().value, 1.0, 1e-10);
    }

    #[test]
    fn anticommutator_frozen() {
        let rep = prod_upper_anticommutator(&fixture_m1(), &fixture_m2(), 1.5).unwrap();
        near_rel(rep.value, 20023.201257878838, 1e-10);
        // refinement relation against the w-based tail holds on the fixtures
        let hey = prod_upper_heydarbeygi(&fixture_m1(), &fixture_m2(), 1.5).unwrap();
        assert!(rep.value <= hey.value + 1e-8 * (1.0 + hey.value));
    }

    #[test]
    fn commutator_bound_values() {
        let a = fixture_m1();
        let b = fixture_m2();
        let refined = comm_upper_refined(&a, &b, Sign::Plus).unwrap();
        near_rel(refined.value, 43.95326694160626, 1e-9);
        let gen4 = comm_upper_generalized(&a, &b, &CMatrix::identity(4), &CMatrix::identity(4), Sign::Minus)
            .unwrap();
        near_rel(gen4.value, 43.95326694160626, 1e-9);
        // scaling X doubles the max factor
        let two_x = CMatrix::identity(4).scale(c(2.0, 0.0));
        let gen_scaled =
            comm_upper_generalized(&a, &b, &two_x, &CMatrix::identity(4), Sign::Plus).unwrap();
        near_rel(gen_scaled.value, 2.0 * 43.95326694160626, 1e-9);
        near_rel(
            comm_upper_fong_holbrook(&a, &b).unwrap().value,
            46.41188762961064,
            1e-9,
        );
        near_rel(
            comm_upper_hirzallah_kittaneh(&a, &b, Sign::Minus).unwrap().value,
            37.966297458865284,
            1e-9,
        );
        near_rel(
            upper_axxa_fong(&a, &b).unwrap().value,
            29.308017749984902,
            1e-9,
        );
        // the refined bound really does dominate the frozen commutator radii
        assert!(refined.value > 10.414307228878982);
        assert!(refined.value > 10.16621236973269);
    }

    #[test]
    fn rejects_bad_parameters() {
        let a = fixture_m1();
        let b = fixture_m2();
        assert!(matches!(
            upper_alpha_moduli(&a, 1.5),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            upper_alpha_moduli_min(&a, 8, 1e-8),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            prod_upper_dragomir(&a, &b, 0.5),
            Err(Error::InvalidArgument(_))
        ));
        let small = CMatrix::identity(2);
        assert!(matches!(
            prod_upper_heydarbeygi(&a, &small, 1.0),
            Err(Error::DimMismatch(4, 2))
        ));
    }

    #[test]
    fn report_serialization_shape() {
        let rep = upper_alpha_moduli(&jordan2(), 0.5).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("\"id\":\"upper_alpha_moduli\""));
        assert!(json.contains("\"side\":\"upper\""));
        assert!(json.contains("\"target\":\"w_squared\""));
        assert!(json.contains("\"alpha\":0.5"));
        assert!(!json.contains("\"r\":"));
        let back: BoundReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.id, rep.id);
        assert_eq!(back.params.unwrap().alpha, Some(0.5));
        // pair target serializes with the documented name
        let rep = prod_upper_dragomir(&jordan2(), &jordan2(), 1.0).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("\"target\":\"w_power_2r\""));
        let rep = comm_upper_refined(&jordan2(), &jordan2(), Sign::Minus).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("\"sign\":\"minus\""));
    }

    #[test]
    fn zero_matrix_gives_zero_bounds() {
        let z = CMatrix::zeros(3);
        for rep in [
            lower_half_norm(&z).unwrap(),
            upper_norm(&z).unwrap(),
            upper_kittaneh_power(&z).unwrap(),
            upper_yamazaki(&z).unwrap(),
            lower_rotated_cartesian(&z).unwrap(),
            lower_sq_rotated_cartesian(&z).unwrap(),
            upper_aluthge_refined(&z).unwrap(),
            upper_alpha_moduli(&z, 0.3).unwrap(),
            prod_upper_heydarbeygi(&z, &z, 2.0).unwrap(),
            comm_upper_refined(&z, &z, Sign::Plus).unwrap(),
        ] {
            assert_eq!(rep.value, 0.0, "{}", rep.id);
        }
    }
}
