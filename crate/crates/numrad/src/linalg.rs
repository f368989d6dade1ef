//! Hermitian eigendecompositions, singular value decompositions, and the
//! positive-semidefinite functional calculus the bound evaluators rely on.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64 as C64;

use crate::matrix::CMatrix;
use crate::{tol, Error, Result};

const MAX_ITER: usize = 100_000;

/// Hermitian eigendecomposition `H = V diag(values) V*`, eigenvalues sorted
/// descending, eigenvector columns orthonormal.
#[derive(Clone, Debug)]
pub struct HermEig {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

/// Singular value decomposition `A = U diag(sigma) V*`, singular values
/// sorted descending and nonnegative, `U`/`V` columns orthonormal.
#[derive(Clone, Debug)]
pub struct Svd {
    pub u: CMatrix,
    pub sigma: Vec<f64>,
    pub v: CMatrix,
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Inputs farther than `tol::HERM_GATE` (relative) from their own adjoint are
/// rejected; inside the gate the matrix is symmetrized first so the
/// decomposition is exactly Hermitian-consistent.
pub fn herm_eig(h: &CMatrix) -> Result<HermEig> {
    let gate = tol::at(tol::HERM_GATE, h.max_abs());
    let dev = h.herm_deviation();
    if dev > gate {
        return Err(Error::NotHermitian {
            deviation: dev,
            gate,
        });
    }
    let hs = (h.dense() + h.dense().adjoint()) * C64::new(0.5, 0.0);
    let se = SymmetricEigen::try_new(hs, f64::EPSILON, MAX_ITER).ok_or(Error::Convergence)?;

    let n = se.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| se.eigenvalues[j].partial_cmp(&se.eigenvalues[i]).unwrap());

    let values: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vectors = DMatrix::<C64>::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &se.eigenvectors.column(src));
    }
    Ok(HermEig {
        values,
        vectors: CMatrix::from_dense_unchecked(vectors),
    })
}

/// Full singular value decomposition.
///
/// Computed from the Hermitian eigendecomposition of the Gram matrix `A*A`
/// (`sigma = sqrt(eig)`, `V` its eigenvectors, `u_k = A v_k / sigma_k`)
/// rather than bidiagonalization: nalgebra's bidiagonal SVD can mis-converge
/// on rank-deficient complex inputs (inflated top singular value, factors
/// that do not reconstruct the matrix), while the Gram spectrum stays correct
/// and keeps every rank decision consistent with `op_norm`. Singular values
/// below the route's resolution `n*sqrt(eps)*sigma_0` are reported as exactly
/// zero; every consumer bands that region away regardless.
pub fn svd(a: &CMatrix) -> Result<Svd> {
    let n = a.dim();
    let ad = a.dense();
    let gram = ad.adjoint() * ad;
    let eig = herm_eig(&CMatrix::from_dense_unchecked(gram))?;
    let mut sigma: Vec<f64> = eig.values.iter().map(|&l| l.max(0.0).sqrt()).collect();
    let vs = eig.vectors.into_dense();
    let top = sigma.first().copied().unwrap_or(0.0);
    // The Gram spectrum cannot resolve singular values below
    // ~sqrt(eps)*sigma_0 (their squares drown in eigenvalue round-off), so
    // report everything under that resolution as exactly zero instead of as
    // round-off noise.
    let resolution = top * f64::EPSILON.sqrt() * n as f64;
    for s in &mut sigma {
        if *s <= resolution {
            *s = 0.0;
        }
    }

    // Left singular vectors: normalized images of the right ones. Images of
    // distinct right singular vectors are orthogonal by construction
    // ((Av_i)*(Av_j) = v_i* A*A v_j = sigma_j^2 delta_ij), so one
    // Gram-Schmidt sweep only removes floating-point drift. Directions whose
    // image is too small to normalize reliably get a deterministic
    // orthonormal completion from the standard basis instead.
    let mut us = DMatrix::<C64>::zeros(n, n);
    let mut filled: Vec<usize> = Vec::with_capacity(n);
    let mut deferred: Vec<usize> = Vec::new();
    let formable = tol::at(tol::RANK_CUTOFF, top);
    for k in 0..n {
        let mut w = ad * vs.column(k);
        if sigma[k] > formable {
            for &j in &filled {
                let overlap = us.column(j).dotc(&w);
                w -= us.column(j) * overlap;
            }
            let norm = w.norm();
            if norm > 0.0 {
                us.set_column(k, &(w / C64::new(norm, 0.0)));
                filled.push(k);
                continue;
            }
        }
        deferred.push(k);
    }
    let mut basis = 0usize;
    for &k in &deferred {
        while basis < n {
            let mut w = DVector::<C64>::zeros(n);
            w[basis] = C64::new(1.0, 0.0);
            basis += 1;
            for &j in &filled {
                let overlap = us.column(j).dotc(&w);
                w -= us.column(j) * overlap;
            }
            let norm = w.norm();
            if norm > 0.5 {
                us.set_column(k, &(w / C64::new(norm, 0.0)));
                filled.push(k);
                break;
            }
        }
    }

    Ok(Svd {
        u: CMatrix::from_dense_unchecked(us),
        sigma,
        v: CMatrix::from_dense_unchecked(vs),
    })
}

/// Largest eigenvalue of a matrix that is Hermitian by construction.
/// Hot path of the radius solver: no eigenvectors, no sorting.
pub(crate) fn lambda_max_sym(h: &DMatrix<C64>) -> f64 {
    h.symmetric_eigenvalues()
        .iter()
        .fold(f64::NEG_INFINITY, |m, &x| m.max(x))
}

/// Operator (spectral) norm, computed as `sqrt(lambda_max(A* A))`.
pub fn op_norm(a: &CMatrix) -> f64 {
    let g = a.dense().adjoint() * a.dense();
    let g = (&g + g.adjoint()) * C64::new(0.5, 0.0);
    lambda_max_sym(&g).max(0.0).sqrt()
}

/// Fractional power of a positive semidefinite matrix via functional
/// calculus, `p >= 0`.
///
/// Eigenvalues inside the relative band `tol::PSD_BAND` of zero count as
/// exact zeros, and the zeroth power follows the `0^0 := 0` convention, so
/// `psd_power(M, 0)` is the projection onto the numerical range of `M`.
/// Eigenvalues below the band raise [`Error::NotPsd`].
pub fn psd_power(m: &CMatrix, p: f64) -> Result<CMatrix> {
    if !p.is_finite() || p < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "power must be finite and nonnegative, got {p}"
        )));
    }
    let eig = herm_eig(m)?;
    let scale = eig
        .values
        .iter()
        .fold(0.0f64, |acc, &x| acc.max(x.abs()));
    let band = tol::at(tol::PSD_BAND, scale);
    if let Some(&min) = eig
        .values
        .iter()
        .min_by(|a, b| a.partial_cmp(b).unwrap())
    {
        if min < -band {
            return Err(Error::NotPsd { min_eig: min, band });
        }
    }
    let powered: Vec<f64> = eig.values.iter().map(|&x| eig_pow(x, p, band)).collect();
    Ok(rebuild(&eig.vectors, &powered))
}

/// Positive square root of a PSD matrix.
pub fn psd_sqrt(m: &CMatrix) -> Result<CMatrix> {
    psd_power(m, 0.5)
}

#[inline]
fn eig_pow(x: f64, p: f64, band: f64) -> f64 {
    if x.abs() <= band {
        0.0
    } else if p == 0.0 {
        1.0
    } else {
        x.max(0.0).powf(p)
    }
}

fn rebuild(vectors: &CMatrix, values: &[f64]) -> CMatrix {
    let v = vectors.dense();
    let d = DMatrix::<C64>::from_fn(values.len(), values.len(), |i, j| {
        if i == j {
            C64::new(values[i], 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    CMatrix::from_dense_unchecked(v * d * v.adjoint())
}

/// Shared spectral factors of `|A|` and `|A*|` drawn from one SVD.
///
/// `|A|^p = V diag(sigma^p) V*` and `|A*|^p = U diag(sigma^p) U*`; the zero
/// band matches the one `psd_power` applies to `A* A`, so both routes make
/// identical rank decisions.
pub(crate) struct ModuliFactors {
    u: DMatrix<C64>,
    v: DMatrix<C64>,
    sigma: Vec<f64>,
    band: f64,
}

impl ModuliFactors {
    pub fn new(a: &CMatrix) -> Result<Self> {
        let s = svd(a)?;
        let top = s.sigma.first().copied().unwrap_or(0.0);
        let band = tol::at(tol::PSD_BAND, top * top);
        Ok(Self {
            u: s.u.into_dense(),
            v: s.v.into_dense(),
            sigma: s.sigma,
            band,
        })
    }

    fn powered(&self, basis: &DMatrix<C64>, p: f64) -> CMatrix {
        let vals: Vec<f64> = self
            .sigma
            .iter()
            .map(|&s| eig_pow(s * s, p / 2.0, self.band))
            .collect();
        let d = DMatrix::<C64>::from_fn(vals.len(), vals.len(), |i, j| {
            if i == j {
                C64::new(vals[i], 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        });
        CMatrix::from_dense_unchecked(basis * d * basis.adjoint())
    }

    /// `|A|^p`.
    pub fn abs_pow(&self, p: f64) -> CMatrix {
        self.powered(&self.v, p)
    }

    /// `|A*|^p`.
    pub fn abs_star_pow(&self, p: f64) -> CMatrix {
        self.powered(&self.u, p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn shift3() -> CMatrix {
        // weighted shift: e1 <- e2, 2 e2 <- e3
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

    #[test]
    fn herm_eig_diagonal_is_exact() {
        let d = CMatrix::from_diag(&[c(3.0, 0.0), c(-1.0, 0.0), c(0.5, 0.0)]);
        let e = herm_eig(&d).unwrap();
        assert_eq!(e.values, vec![3.0, 0.5, -1.0]);
    }

    #[test]
    fn herm_eig_reconstructs_and_orders() {
        let h = CMatrix::new(
            3,
            vec![
                c(2.0, 0.0),
                c(0.0, 1.0),
                c(0.5, 0.0),
                c(0.0, -1.0),
                c(-1.0, 0.0),
                c(0.0, 0.3),
                c(0.5, 0.0),
                c(0.0, -0.3),
                c(0.7, 0.0),
            ],
        )
        .unwrap();
        let e = herm_eig(&h).unwrap();
        assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
        let rec = rebuild(&e.vectors, &e.values);
        assert!(rec.approx_eq(&h, 1e-12));
        let vtv = &e.vectors.conj_transpose() * &e.vectors;
        assert!(vtv.approx_eq(&CMatrix::identity(3), 1e-12));
    }

    #[test]
    fn herm_eig_rejects_non_hermitian() {
        let a = shift3();
        assert!(matches!(herm_eig(&a), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn svd_of_weighted_shift() {
        let s = svd(&shift3()).unwrap();
        assert!((s.sigma[0] - 2.0).abs() < 1e-12);
        assert!((s.sigma[1] - 1.0).abs() < 1e-12);
        assert!(s.sigma[2].abs() < 1e-12);
        let d = CMatrix::from_diag(&[c(s.sigma[0], 0.0), c(s.sigma[1], 0.0), c(s.sigma[2], 0.0)]);
        let rec = &(&s.u * &d) * &s.v.conj_transpose();
        assert!(rec.approx_eq(&shift3(), 1e-12));
    }

    #[test]
    fn op_norm_values() {
        assert!((op_norm(&shift3()) - 2.0).abs() < 1e-12);
        assert_eq!(op_norm(&CMatrix::zeros(3)), 0.0);
        assert!((op_norm(&CMatrix::identity(4)) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn psd_power_zeroth_is_range_projection() {
        let m = CMatrix::from_diag(&[c(4.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let p = psd_power(&m, 0.0).unwrap();
        let expect = CMatrix::from_diag(&[c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        assert!(p.approx_eq(&expect, 1e-14));
        // 0^0 = 0: the zero matrix has empty range.
        let z = psd_power(&CMatrix::zeros(2), 0.0).unwrap();
        assert!(z.approx_eq(&CMatrix::zeros(2), 0.0));
    }

    #[test]
    fn psd_power_semigroup_and_sqrt() {
        let g = CMatrix::new(
            3,
            vec![
                c(1.0, 0.2),
                c(0.3, -0.4),
                c(0.0, 1.0),
                c(-0.5, 0.1),
                c(2.0, 0.0),
                c(0.7, 0.7),
                c(0.2, 0.0),
                c(0.0, -0.3),
                c(1.5, 0.5),
            ],
        )
        .unwrap();
        let m = &g.conj_transpose() * &g;
        let h = psd_sqrt(&m).unwrap();
        assert!((&h * &h).approx_eq(&m, 1e-10));
        let p = psd_power(&m, 0.7).unwrap();
        let q = psd_power(&m, 0.3).unwrap();
        assert!((&p * &q).approx_eq(&m, 1e-9));
    }

    #[test]
    fn psd_power_rejects_negative_spectrum_and_negative_power() {
        let m = CMatrix::from_diag(&[c(1.0, 0.0), c(-1.0, 0.0)]);
        assert!(matches!(psd_power(&m, 0.5), Err(Error::NotPsd { .. })));
        let id = CMatrix::identity(2);
        assert!(matches!(
            psd_power(&id, -1.0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn moduli_factors_match_psd_power() {
        let a = shift3();
        let f = ModuliFactors::new(&a).unwrap();
        let gram = &a.conj_transpose() * &a;
        for p in [0.0, 0.5, 1.0, 2.0, 3.0] {
            let via_eig = psd_power(&gram, p / 2.0).unwrap();
            assert!(f.abs_pow(p).approx_eq(&via_eig, 1e-10));
        }
        // |A|, |A*| of the weighted shift are diagonal
        let abs_a = CMatrix::from_diag(&[c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)]);
        let abs_as = CMatrix::from_diag(&[c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)]);
        assert!(f.abs_pow(1.0).approx_eq(&abs_a, 1e-12));
        assert!(f.abs_star_pow(1.0).approx_eq(&abs_as, 1e-12));
    }
}
