//! Numerical radius solver.
//!
//! Uses the rotation identity `w(A) = max_θ λ_max(Re(e^{iθ}A))` with
//! `Re(e^{iθ}A) = cos θ · Re(A) - sin θ · Im(A)`: a coarse cyclic grid
//! locates every near-best local maximum of the profile, and golden-section
//! refinement polishes each bracket. The profile is `‖A‖`-Lipschitz in `θ`,
//! which turns the final bracket width into a certified value tolerance.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::corpus::random_unit_vector;
use crate::linalg::{herm_eig, lambda_max_sym, op_norm};
use crate::matrix::CMatrix;
use crate::transform::cartesian;
use crate::{tol, Error, Result};

const INV_PHI: f64 = 0.618_033_988_749_894_9;
/// Local maxima within `2 L h` of the grid max are candidate brackets; more
/// than this many means the profile is nearly flat and the best suffice.
const MAX_BRACKETS: usize = 48;

/// Options for [`numerical_radius_with`].
#[derive(Clone, Debug)]
pub struct RadiusOptions {
    /// Certified absolute tolerance on the returned value.
    pub tol: f64,
    /// Coarse grid size over `[0, 2π)`.
    pub grid: usize,
}

impl Default for RadiusOptions {
    fn default() -> Self {
        Self {
            tol: tol::RADIUS,
            grid: 1024,
        }
    }
}

/// Result of a numerical radius computation.
#[derive(Clone, Debug)]
pub struct NumRadResult {
    /// The numerical radius `w(A)`.
    pub value: f64,
    /// Maximizing rotation angle in `[0, 2π)`.
    pub theta: f64,
    /// Unit vector with `⟨Ax, x⟩ = e^{-iθ} w(A)`, so `|⟨Ax, x⟩|` attains the
    /// radius.
    pub witness: Vec<C64>,
}

struct Rotator {
    re: DMatrix<C64>,
    im: DMatrix<C64>,
}

impl Rotator {
    fn new(a: &CMatrix) -> Self {
        let parts = cartesian(a);
        Self {
            re: parts.re.into_dense(),
            im: parts.im.into_dense(),
        }
    }

    fn herm_at(&self, theta: f64) -> DMatrix<C64> {
        &self.re * C64::new(theta.cos(), 0.0) - &self.im * C64::new(theta.sin(), 0.0)
    }

    fn at(&self, theta: f64) -> f64 {
        lambda_max_sym(&self.herm_at(theta))
    }
}

/// Numerical radius with the default coarse grid (1024 points).
pub fn numerical_radius(a: &CMatrix, tol: f64) -> Result<NumRadResult> {
    numerical_radius_with(
        a,
        &RadiusOptions {
            tol,
            ..RadiusOptions::default()
        },
    )
}

/// Numerical radius with explicit options.
pub fn numerical_radius_with(a: &CMatrix, opts: &RadiusOptions) -> Result<NumRadResult> {
    if !(opts.tol.is_finite() && opts.tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "solver tolerance must be positive and finite, got {}",
            opts.tol
        )));
    }
    if opts.grid < 8 {
        return Err(Error::InvalidArgument(format!(
            "coarse grid must have at least 8 points, got {}",
            opts.grid
        )));
    }

    // Hermitian fast path: w(H) = max(λ_max, -λ_min), attained at θ = 0 or π.
    if a.herm_deviation() <= tol::at(tol::HERM_FAST, a.max_abs()) {
        let eig = herm_eig(a)?;
        let hi = eig.values[0];
        let lo = *eig.values.last().unwrap();
        let (value, theta, col) = if hi >= -lo {
            (hi, 0.0, 0)
        } else {
            (-lo, std::f64::consts::PI, a.dim() - 1)
        };
        let witness: Vec<C64> = eig.vectors.dense().column(col).iter().copied().collect();
        return Ok(NumRadResult {
            value,
            theta,
            witness,
        });
    }

    let rot = Rotator::new(a);
    let n = opts.grid;
    let h = std::f64::consts::TAU / n as f64;
    let fs: Vec<f64> = (0..n).map(|k| rot.at(k as f64 * h)).collect();

    let (kmax, &fmax) = fs
        .iter()
        .enumerate()
        .max_by(|(_, x), (_, y)| x.partial_cmp(y).unwrap())
        .unwrap();
    let fmin = fs.iter().fold(f64::INFINITY, |m, &x| m.min(x));

    // Plateau shortcut: a flat profile (e.g. nilpotent blocks) needs no
    // refinement and would otherwise bracket everywhere.
    if fmax - fmin <= tol::at(1e-14, fmax.abs()) {
        return finish(&rot, kmax as f64 * h, fmax);
    }

    // Every strict-or-flat local max within the Lipschitz margin of the grid
    // max can hide the true maximizer.
    let lipschitz = op_norm(a);
    let margin = 2.0 * lipschitz * h + tol::at(1e-12, fmax.abs());
    let mut brackets: Vec<usize> = (0..n)
        .filter(|&k| {
            let prev = fs[(k + n - 1) % n];
            let next = fs[(k + 1) % n];
            fs[k] >= prev && fs[k] >= next && fs[k] >= fmax - margin
        })
        .collect();
    brackets.sort_by(|&i, &j| fs[j].partial_cmp(&fs[i]).unwrap());
    brackets.truncate(MAX_BRACKETS);

    let width = (opts.tol / lipschitz.max(f64::MIN_POSITIVE)).min(h);
    let mut best = (kmax as f64 * h, fmax);
    for &k in &brackets {
        let lo = (k as f64 - 1.0) * h;
        let hi = (k as f64 + 1.0) * h;
        let (theta, val) = golden_max(|t| rot.at(t), lo, hi, width);
        if val > best.1 {
            best = (theta, val);
        }
    }

    finish(&rot, best.0, best.1)
}

fn finish(rot: &Rotator, theta: f64, value: f64) -> Result<NumRadResult> {
    let theta = theta.rem_euclid(std::f64::consts::TAU);
    let h = CMatrix::from_dense_unchecked(rot.herm_at(theta));
    let eig = herm_eig(&h)?;
    let witness: Vec<C64> = eig.vectors.dense().column(0).iter().copied().collect();
    Ok(NumRadResult {
        value: value.max(eig.values[0]),
        theta,
        witness,
    })
}

/// Golden-section search for a local maximum of `f` on `[a, b]`, refined to
/// the given bracket width. Returns `(argmax, max)`.
pub(crate) fn golden_max(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, width: f64) -> (f64, f64) {
    let (mut a, mut b) = (a, b);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut guard = 0usize;
    while b - a > width && guard < 400 {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        }
        guard += 1;
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// The rotation profile `θ_k ↦ λ_max(Re(e^{iθ_k}A))` sampled on a uniform
/// grid over `[0, 2π)`. This is the curve whose maximum is `w(A)`.
pub fn nr_profile(a: &CMatrix, grid: usize) -> Result<Vec<(f64, f64)>> {
    if grid < 2 {
        return Err(Error::InvalidArgument(format!(
            "profile grid must have at least 2 points, got {grid}"
        )));
    }
    let rot = Rotator::new(a);
    let h = std::f64::consts::TAU / grid as f64;
    Ok((0..grid)
        .map(|k| {
            let t = k as f64 * h;
            (t, rot.at(t))
        })
        .collect())
}

/// Monte Carlo lower bound `max_i |⟨A x_i, x_i⟩|` over seeded random unit
/// vectors. Never exceeds `w(A)`; useful as an independent cross-check.
pub fn nr_lower_random(a: &CMatrix, draws: usize, seed: u64) -> f64 {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let d = a.dense();
    let mut best = 0.0f64;
    for _ in 0..draws {
        let x = random_unit_vector(&mut rng, a.dim());
        let ax = d * &x;
        let form = x.dotc(&ax);
        best = best.max(form.norm());
    }
    best
}
