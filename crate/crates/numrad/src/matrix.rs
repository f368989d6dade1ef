//! Dense complex square matrices with validated entries.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{Error, Result};

pub type C64 = Complex64;

/// Dense complex square matrix. Construction validates squareness and
/// finiteness; every arithmetic result stays inside the type.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    m: DMatrix<C64>,
}

impl CMatrix {
    /// Builds an `n x n` matrix from row-major entries.
    pub fn new(n: usize, entries: Vec<C64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        Self::from_dense(DMatrix::from_row_slice(n, n, &entries))
    }

    /// Builds from a slice of equally sized rows.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NonSquare {
                rows: n,
                cols: rows.iter().map(|r| r.len()).max().unwrap_or(0),
            });
        }
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            entries.extend_from_slice(r);
        }
        Self::new(n, entries)
    }

    /// Validates and wraps a dense nalgebra matrix.
    pub fn from_dense(m: DMatrix<C64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::NonSquare {
                rows: m.nrows(),
                cols: m.ncols(),
            });
        }
        if m.nrows() == 0 {
            return Err(Error::Empty);
        }
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { m })
    }

    /// Wraps a matrix produced by internal arithmetic on validated operands.
    pub(crate) fn from_dense_unchecked(m: DMatrix<C64>) -> Self {
        debug_assert_eq!(m.nrows(), m.ncols());
        Self { m }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            m: DMatrix::zeros(n.max(1), n.max(1)),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            m: DMatrix::identity(n.max(1), n.max(1)),
        }
    }

    /// Diagonal matrix from the given entries.
    pub fn from_diag(d: &[C64]) -> Self {
        let n = d.len().max(1);
        let mut m = DMatrix::zeros(n, n);
        for (i, z) in d.iter().enumerate() {
            m[(i, i)] = *z;
        }
        Self { m }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.m[(i, j)]
    }

    pub fn dense(&self) -> &DMatrix<C64> {
        &self.m
    }

    pub fn into_dense(self) -> DMatrix<C64> {
        self.m
    }

    /// Conjugate transpose `A*`.
    pub fn conj_transpose(&self) -> CMatrix {
        Self {
            m: self.m.adjoint(),
        }
    }

    pub fn scale(&self, z: C64) -> CMatrix {
        Self { m: &self.m * z }
    }

    /// Largest entry modulus; the scale reference for entrywise comparisons.
    pub fn max_abs(&self) -> f64 {
        self.m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Entrywise comparison: max modulus difference within `eps`.
    pub fn approx_eq(&self, other: &CMatrix, eps: f64) -> bool {
        self.dim() == other.dim()
            && self
                .m
                .iter()
                .zip(other.m.iter())
                .all(|(a, b)| (a - b).norm() <= eps)
    }

    /// Max entry modulus of `A - A*`.
    pub fn herm_deviation(&self) -> f64 {
        let n = self.dim();
        let mut dev: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                dev = dev.max((self.m[(i, j)] - self.m[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, rel_gate: f64) -> bool {
        self.herm_deviation() <= rel_gate * (1.0 + self.max_abs())
    }

    pub fn entries_row_major(&self) -> Vec<C64> {
        let n = self.dim();
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                out.push(self.m[(i, j)]);
            }
        }
        out
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait<&CMatrix> for &CMatrix {
            type Output = CMatrix;
            fn $method(self, rhs: &CMatrix) -> CMatrix {
                assert_eq!(self.dim(), rhs.dim(), "operand dimensions must agree");
                CMatrix::from_dense_unchecked(&self.m $op &rhs.m)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);

impl std::ops::Mul<&CMatrix> for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim(), rhs.dim(), "operand dimensions must agree");
        CMatrix::from_dense_unchecked(&self.m * &rhs.m)
    }
}

impl std::ops::Neg for &CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        CMatrix::from_dense_unchecked(-&self.m)
    }
}
