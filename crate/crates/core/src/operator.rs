//! Dense complex operators and the calculus shared by every other module.
//!
//! Operators are stored densely even when they are bidiagonal; the matrices
//! handled here stay at a few hundred rows at most.
//!
//! `matrix_exponential` delegates to nalgebra's scaling-and-squaring Padé
//! implementation.

use std::cmp::Ordering;

use nalgebra::{DMatrix, Schur, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const I: C64 = C64::new(0.0, 1.0);

/// Default tolerance for identities that hold exactly in exact arithmetic.
pub const EXACT_TOLERANCE: f64 = 1e-12;

/// A labeled dense complex square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    label: String,
    entries: DMatrix<C64>,
}

impl OperatorMatrix {
    pub fn new(label: impl Into<String>, entries: DMatrix<C64>) -> Result<Self> {
        let (rows, cols) = entries.shape();
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        if rows == 0 {
            return Err(Error::InvalidParameter(
                "operator dimension must be >= 1".into(),
            ));
        }
        for col in 0..cols {
            for row in 0..rows {
                let z = entries[(row, col)];
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::NonFinite { row, col });
                }
            }
        }
        Ok(Self {
            label: label.into(),
            entries,
        })
    }

    /// Wraps a matrix produced by internal arithmetic on valid operators.
    pub(crate) fn from_parts(label: impl Into<String>, entries: DMatrix<C64>) -> Self {
        debug_assert!(entries.is_square());
        Self {
            label: label.into(),
            entries,
        }
    }

    pub fn zeros(label: impl Into<String>, dim: usize) -> Self {
        Self::from_parts(label, DMatrix::zeros(dim, dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_parts("1", DMatrix::identity(dim, dim))
    }

    /// Real diagonal operator.
    pub fn diagonal(label: impl Into<String>, diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_parts(
            label,
            DMatrix::from_fn(n, n, |r, c| {
                if r == c {
                    C64::new(diag[r], 0.0)
                } else {
                    C64::new(0.0, 0.0)
                }
            }),
        )
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<C64> {
        &self.entries
    }

    pub fn into_entries(self) -> DMatrix<C64> {
        self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[(row, col)]
    }

    pub fn diagonal_entries(&self) -> Vec<C64> {
        self.entries.diagonal().iter().copied().collect()
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(Self::from_parts(
            format!("{}·{}", self.label, other.label),
            &self.entries * &other.entries,
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(Self::from_parts(
            format!("{}+{}", self.label, other.label),
            &self.entries + &other.entries,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(Self::from_parts(
            format!("{}-{}", self.label, other.label),
            &self.entries - &other.entries,
        ))
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self::from_parts(self.label.clone(), &self.entries * factor)
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(C64::new(factor, 0.0))
    }

    /// Adds `shift` times the identity.
    pub fn shift(&self, shift: C64) -> Self {
        let mut entries = self.entries.clone();
        for d in 0..self.dim() {
            entries[(d, d)] += shift;
        }
        Self::from_parts(self.label.clone(), entries)
    }

    /// Applies `f` to every diagonal entry of a diagonal operator.
    pub fn map_diagonal(&self, label: impl Into<String>, f: impl Fn(C64) -> C64) -> Self {
        let n = self.dim();
        let mut entries = DMatrix::zeros(n, n);
        for d in 0..n {
            entries[(d, d)] = f(self.entries[(d, d)]);
        }
        Self::from_parts(label, entries)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |acc, z| acc.max(z.norm()))
    }

    /// Euclidean norm of the image of basis state `col`.
    pub fn column_norm(&self, col: usize) -> f64 {
        self.entries
            .column(col)
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        let n = self.dim();
        (0..n).all(|c| (0..n).all(|r| r == c || self.entries[(r, c)].norm() <= tol))
    }

    /// Max entrywise distance between `self` and its adjoint.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst: f64 = 0.0;
        for c in 0..n {
            for r in 0..n {
                worst = worst.max((self.entries[(r, c)] - self.entries[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// Principal submatrix on the given basis indices, in the given order.
    pub fn restrict(&self, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.dim()) {
            return Err(Error::OutOfRange(format!(
                "basis index {bad} (dim {})",
                self.dim()
            )));
        }
        let n = indices.len();
        Ok(Self::from_parts(
            self.label.clone(),
            DMatrix::from_fn(n, n, |r, c| self.entries[(indices[r], indices[c])]),
        ))
    }

    /// Principal submatrix on the first `size` basis states.
    pub fn leading_block(&self, size: usize) -> Result<Self> {
        let idx: Vec<usize> = (0..size).collect();
        self.restrict(&idx)
    }

    /// Integer power by repeated squaring.
    pub fn power(&self, exponent: u32) -> Self {
        let mut result = DMatrix::identity(self.dim(), self.dim());
        let mut base = self.entries.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Self::from_parts(format!("{}^{exponent}", self.label), result)
    }
}

/// `[A, B] = AB - BA`
pub fn commutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    a.same_dim(b)?;
    Ok(OperatorMatrix::from_parts(
        format!("[{},{}]", a.label, b.label),
        &a.entries * &b.entries - &b.entries * &a.entries,
    ))
}

/// `{A, B} = AB + BA`
pub fn anticommutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    a.same_dim(b)?;
    Ok(OperatorMatrix::from_parts(
        format!("{{{},{}}}", a.label, b.label),
        &a.entries * &b.entries + &b.entries * &a.entries,
    ))
}

pub fn adjoint(a: &OperatorMatrix) -> OperatorMatrix {
    let label = match a.label.strip_suffix('†') {
        Some(base) => base.to_string(),
        None => format!("{}†", a.label),
    };
    OperatorMatrix::from_parts(label, a.entries.adjoint())
}

pub fn matrix_exponential(a: &OperatorMatrix) -> OperatorMatrix {
    OperatorMatrix::from_parts(format!("exp({})", a.label), a.entries.clone().exp())
}

/// Max-entry distance `‖A - B‖`.
pub fn max_abs_diff(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<f64> {
    Ok(a.sub(b)?.max_abs())
}

/// Eigenvalues of an operator, sorted by real then imaginary part.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<C64>,
    pub hermitian_flag: bool,
}

impl Spectrum {
    /// Real eigenvalues; `hermitian_flag` is set.
    pub fn from_real(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
        Self {
            eigenvalues: values.into_iter().map(|v| C64::new(v, 0.0)).collect(),
            hermitian_flag: true,
        }
    }

    /// Dense eigensolve. Hermitian inputs (within `tol`) use the symmetric
    /// solver and report purely real eigenvalues; others go through Schur.
    pub fn of(op: &OperatorMatrix, tol: f64) -> Self {
        if op.is_hermitian(tol) {
            let eig = SymmetricEigen::new(op.entries.clone());
            return Self::from_real(eig.eigenvalues.iter().copied().collect());
        }
        let schur = Schur::new(op.entries.clone());
        // a complex Schur form is triangular, so eigenvalues always exist
        let mut eigenvalues: Vec<C64> = schur
            .eigenvalues()
            .map(|v| v.iter().copied().collect())
            .unwrap_or_else(|| schur.unpack().1.diagonal().iter().copied().collect());
        eigenvalues.sort_by(|a, b| {
            a.re.partial_cmp(&b.re)
                .unwrap_or(Ordering::Equal)
                .then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
        });
        Self {
            eigenvalues,
            hermitian_flag: false,
        }
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn real_parts(&self) -> Vec<f64> {
        self.eigenvalues.iter().map(|z| z.re).collect()
    }
}
