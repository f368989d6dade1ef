//! Operator transforms: Cartesian decomposition, polar decomposition, and
//! the Aluthge transform.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::linalg::{svd, ModuliFactors};
use crate::matrix::CMatrix;
use crate::{tol, Result};

/// Hermitian real and imaginary parts of `A = Re + i Im`.
#[derive(Clone, Debug)]
pub struct Cartesian {
    pub re: CMatrix,
    pub im: CMatrix,
}

/// Polar decomposition `A = U P` with `P = |A|` PSD and `U` a partial
/// isometry supported on the range of `P`.
#[derive(Clone, Debug)]
pub struct Polar {
    pub u: CMatrix,
    pub p: CMatrix,
}

/// `Re(A) = (A + A*)/2`, `Im(A) = (A - A*)/2i`; both Hermitian.
pub fn cartesian(a: &CMatrix) -> Cartesian {
    let d = a.dense();
    let adj = d.adjoint();
    let re = (d + &adj) * C64::new(0.5, 0.0);
    let im = (d - &adj) * C64::new(0.0, -0.5);
    Cartesian {
        re: CMatrix::from_dense_unchecked(re),
        im: CMatrix::from_dense_unchecked(im),
    }
}

/// Polar decomposition via the SVD `A = U_s diag(sigma) V*`:
/// the partial isometry keeps only directions with `sigma` above the
/// relative rank cutoff, so `U` vanishes on the kernel of `|A|`.
pub fn polar(a: &CMatrix) -> Result<Polar> {
    let s = svd(a)?;
    let top = s.sigma.first().copied().unwrap_or(0.0);
    let cutoff = tol::at(tol::RANK_CUTOFF, top);
    let n = a.dim();
    let us = s.u.dense();
    let vs = s.v.dense();
    let mut u = DMatrix::<C64>::zeros(n, n);
    let mut p = DMatrix::<C64>::zeros(n, n);
    for k in 0..n {
        let sk = s.sigma[k];
        let vk = vs.column(k);
        if sk > cutoff {
            let uk = us.column(k);
            // u += u_k v_k*
            for i in 0..n {
                for j in 0..n {
                    u[(i, j)] += uk[i] * vk[j].conj();
                }
            }
        }
        let w = C64::new(sk, 0.0);
        for i in 0..n {
            for j in 0..n {
                p[(i, j)] += w * vk[i] * vk[j].conj();
            }
        }
    }
    Ok(Polar {
        u: CMatrix::from_dense_unchecked(u),
        p: CMatrix::from_dense_unchecked(p),
    })
}

/// Aluthge transform `|A|^{1/2} U |A|^{1/2}` where `A = U |A|` is the polar
/// decomposition. Shares one SVD between the square-root factors and the
/// partial isometry.
pub fn aluthge(a: &CMatrix) -> Result<CMatrix> {
    let s = svd(a)?;
    let top = s.sigma.first().copied().unwrap_or(0.0);
    let cutoff = tol::at(tol::RANK_CUTOFF, top);
    let n = a.dim();
    let us = s.u.dense();
    let vs = s.v.dense();
    let mut u = DMatrix::<C64>::zeros(n, n);
    for k in 0..n {
        if s.sigma[k] > cutoff {
            let uk = us.column(k);
            let vk = vs.column(k);
            for i in 0..n {
                for j in 0..n {
                    u[(i, j)] += uk[i] * vk[j].conj();
                }
            }
        }
    }
    let f = ModuliFactors::new(a)?;
    let half = f.abs_pow(0.5).into_dense();
    Ok(CMatrix::from_dense_unchecked(&half * u * &half))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::linalg::op_norm;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    // 4x4 dense complex fixture used across the test suite.
    pub(crate) fn fixture_m1() -> CMatrix {
        CMatrix::new(
            4,
            vec![
                c(0.70, 0.20),
                c(-1.10, 0.50),
                c(0.30, -0.40),
                c(0.25, 0.0),
                c(0.0, 1.30),
                c(0.40, -0.10),
                c(-0.60, 0.70),
                c(1.20, -0.30),
                c(-0.80, 0.10),
                c(0.90, 0.0),
                c(0.05, -1.00),
                c(0.0, 0.60),
                c(0.50, -0.70),
                c(-0.20, 0.25),
                c(1.00, 0.80),
                c(-0.45, 0.0),
            ],
        )
        .unwrap()
    }

    // Rank-2 4x4 fixture: rows 2 and 3 are combinations of rows 0 and 1.
    pub(crate) fn fixture_m2() -> CMatrix {
        let r0 = [c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0), c(0.5, 0.0)];
        let r1 = [c(2.0, -1.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, -0.25)];
        let mut rows = Vec::with_capacity(16);
        rows.extend_from_slice(&r0);
        rows.extend_from_slice(&r1);
        for j in 0..4 {
            rows.push(r0[j] + r1[j]);
        }
        for j in 0..4 {
            rows.push(r0[j] - r1[j] * c(2.0, 0.0));
        }
        CMatrix::new(4, rows).unwrap()
    }

    #[test]
    fn cartesian_reassembles() {
        let a = fixture_m1();
        let parts = cartesian(&a);
        assert!(parts.re.herm_deviation() < 1e-15);
        assert!(parts.im.herm_deviation() < 1e-15);
        let re = parts.re.dense();
        let im = parts.im.dense() * c(0.0, 1.0);
        let back = CMatrix::from_dense_unchecked(re + im);
        assert!(back.approx_eq(&a, 1e-15));
    }

    #[test]
    fn polar_reassembles_full_rank() {
        let a = fixture_m1();
        let pd = polar(&a).unwrap();
        let back = &pd.u * &pd.p;
        assert!(back.approx_eq(&a, 1e-12));
        // full rank: U is unitary
        let uu = &pd.u.conj_transpose() * &pd.u;
        assert!(uu.approx_eq(&CMatrix::identity(4), 1e-12));
        assert!(pd.p.herm_deviation() < 1e-12);
    }

    #[test]
    fn polar_partial_isometry_on_rank_deficient() {
        let a = fixture_m2();
        let pd = polar(&a).unwrap();
        let back = &pd.u * &pd.p;
        assert!(back.approx_eq(&a, 1e-12));
        // U*U is the projection onto range(|A|), rank 2
        let uu = (&pd.u.conj_transpose() * &pd.u).into_dense();
        let trace: f64 = (0..4).map(|i| uu[(i, i)].re).sum();
        assert!((trace - 2.0).abs() < 1e-10);
        let proj = CMatrix::from_dense_unchecked(&uu * &uu);
        assert!(proj.approx_eq(&CMatrix::from_dense_unchecked(uu), 1e-10));
        // frozen oracle entries for the partial isometry (row-major)
        let expect = [
            c(0.21000767833956704, -0.14808716120399304),
            c(-0.12906679187504005, 0.42194893657647425),
            c(-0.10597062911845381, -0.13857697653951648),
            c(0.24561871242311623, 0.038040738657906595),
            c(0.33510299360344975, -0.15022937473428524),
            c(0.10403704922111306, -0.011548081378293218),
            c(0.17332553749087146, -0.023096162756586068),
            c(0.0, -0.008687140237838686),
            c(0.5451106719430168, -0.29831653593827834),
            c(-0.02502974265392673, 0.41040085519818126),
            c(0.0673549083724175, -0.16167313929610247),
            c(0.24561871242311625, 0.029353598420067732),
            c(-0.46019830886733243, 0.1523715882645775),
            c(-0.3371408903172662, 0.44504509933306075),
            c(-0.45262170410019664, -0.09238465102634431),
            c(0.2456187124231164, 0.055415019133583945),
        ];
        let got = pd.u.entries_row_major();
        for (g, e) in got.iter().zip(expect.iter()) {
            assert!((g - e).norm() < 1e-9, "got {g}, expected {e}");
        }
    }

    #[test]
    fn aluthge_matches_frozen_entries() {
        let a = fixture_m1();
        let t = aluthge(&a).unwrap();
        let expect = [
            c(0.33844140096897884, -0.09909351017514884),
            c(-0.8958359555178776, 0.6006320541925697),
            c(0.6286179523103267, -0.8643235659422579),
            c(0.0559446366691766, 0.23265789128827025),
            c(-0.15665660403449252, 0.8694332560058375),
            c(0.5426975568898812, 0.006699255182829326),
            c(-0.27844436341428735, 0.7032820330321025),
            c(0.9985191976082547, -0.26756550957661285),
            c(-0.40933171760117604, 0.1980638058053479),
            c(0.9149520003869323, 0.1775646460755147),
            c(-0.03306382196923147, -1.0804674726695345),
            c(-0.10922704860398175, 0.5117556072738499),
            c(0.24595640384339387, -0.26570426427616656),
            c(-0.27494019919886514, -0.17809828351217163),
            c(0.7280883660412586, 0.8283414809204397),
            c(-0.1480751358896306, 0.2728617276618513),
        ];
        let got = t.entries_row_major();
        for (g, e) in got.iter().zip(expect.iter()) {
            assert!((g - e).norm() < 1e-9, "got {g}, expected {e}");
        }
    }

    #[test]
    fn aluthge_fixes_normal_matrices() {
        // diagonal (hence normal): transform is the identity map
        let d = CMatrix::from_diag(&[c(2.0, 1.0), c(-1.0, 0.5), c(0.0, -3.0)]);
        let t = aluthge(&d).unwrap();
        assert!(t.approx_eq(&d, 1e-10));
    }

    #[test]
    fn aluthge_of_nilpotent_jordan_block_is_zero() {
        let j = CMatrix::new(
            2,
            vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        let t = aluthge(&j).unwrap();
        assert!(op_norm(&t) < 1e-12);
    }
}
