//! Seeded random matrix families for stress-testing the bound inventory.
//!
//! Sampling is deterministic: the same `(family, n, seed)` triple always
//! produces the same matrix, on every platform, because draws go through a
//! counter-based ChaCha stream in a fixed order.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::matrix::CMatrix;
use crate::{Error, Result};

/// Matrix distribution families available to the corpus sampler.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Independent complex Gaussian entries, unit variance.
    Ginibre,
    /// `U diag(λ) U*` with Gaussian eigenvalues; normal by construction.
    Normal,
    /// `(G + G*)/2`; Hermitian bit-exactly.
    Hermitian,
    /// Strictly block upper-triangular `[[0, M], [0, 0]]`; `A² = 0` exactly.
    NilpotentSquareZero,
    /// Product of an `n×k` and a `k×n` Gaussian factor, `k = max(1, n/2)`.
    RankDeficient,
    /// Unitary factor of a Ginibre sample.
    Unitary,
}

impl Family {
    /// All families, in the canonical certification order.
    pub const ALL: [Family; 6] = [
        Family::Ginibre,
        Family::Normal,
        Family::Hermitian,
        Family::NilpotentSquareZero,
        Family::RankDeficient,
        Family::Unitary,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Ginibre => "ginibre",
            Family::Normal => "normal",
            Family::Hermitian => "hermitian",
            Family::NilpotentSquareZero => "nilpotent_square_zero",
            Family::RankDeficient => "rank_deficient",
            Family::Unitary => "unitary",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown family '{s}' (expected one of: {})",
                    Family::ALL.map(|f| f.as_str()).join(", ")
                ))
            })
    }
}

/// One standard complex Gaussian: `(x + iy)/√2` with `x, y ~ N(0, 1)`.
fn complex_gaussian(rng: &mut impl Rng) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

fn ginibre(rng: &mut impl Rng, rows: usize, cols: usize) -> DMatrix<C64> {
    DMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

/// Draws one matrix of size `n` from `family`, advancing `rng`.
pub fn random_matrix(family: Family, n: usize, rng: &mut impl Rng) -> Result<CMatrix> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let d = match family {
        Family::Ginibre => ginibre(rng, n, n),
        Family::Normal => {
            let u = unitary_factor(rng, n);
            let lambda = DVector::from_fn(n, |_, _| complex_gaussian(rng));
            &u * DMatrix::from_diagonal(&lambda) * u.adjoint()
        }
        Family::Hermitian => {
            let g = ginibre(rng, n, n);
            let mut h = DMatrix::zeros(n, n);
            for i in 0..n {
                h[(i, i)] = C64::new(g[(i, i)].re, 0.0);
                for j in (i + 1)..n {
                    let v = (g[(i, j)] + g[(j, i)].conj()) * 0.5;
                    h[(i, j)] = v;
                    h[(j, i)] = v.conj();
                }
            }
            h
        }
        Family::NilpotentSquareZero => {
            let k = n / 2;
            let mut m = DMatrix::zeros(n, n);
            if k > 0 {
                let block = ginibre(rng, k, n - k);
                m.view_mut((0, k), (k, n - k)).copy_from(&block);
            }
            m
        }
        Family::RankDeficient => {
            let k = (n / 2).max(1);
            ginibre(rng, n, k) * ginibre(rng, k, n)
        }
        Family::Unitary => unitary_factor(rng, n),
    };
    Ok(CMatrix::from_dense_unchecked(d))
}

/// Unitary `UV*` from the singular value decomposition of a Ginibre draw.
fn unitary_factor(rng: &mut impl Rng, n: usize) -> DMatrix<C64> {
    let g = ginibre(rng, n, n);
    let svd = g.svd(true, true);
    let u = svd.u.expect("svd vectors requested");
    let vt = svd.v_t.expect("svd vectors requested");
    u * vt
}

/// Draws a unitary matrix directly.
pub fn random_unitary(rng: &mut impl Rng, n: usize) -> Result<CMatrix> {
    if n == 0 {
        return Err(Error::Empty);
    }
    Ok(CMatrix::from_dense_unchecked(unitary_factor(rng, n)))
}

/// Draws a positive semidefinite matrix `G*G` (scaled by `1/n`).
pub fn random_psd(rng: &mut impl Rng, n: usize) -> Result<CMatrix> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let g = ginibre(rng, n, n);
    Ok(CMatrix::from_dense_unchecked(
        g.adjoint() * &g * C64::new(1.0 / n as f64, 0.0),
    ))
}

/// Draws a uniformly random unit vector.
pub fn random_unit_vector(rng: &mut impl Rng, n: usize) -> DVector<C64> {
    loop {
        let v = DVector::from_fn(n, |_, _| complex_gaussian(rng));
        let norm = v.norm();
        if norm > 1e-12 {
            return v / C64::new(norm, 0.0);
        }
    }
}

/// Deterministic sample: seeds a fresh stream for `(family, n, seed)`.
pub fn sample(family: Family, n: usize, seed: u64) -> Result<CMatrix> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    random_matrix(family, n, &mut rng)
}

/// SplitMix64 finalizer; used to derive independent sub-seeds.
pub(crate) fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
