//! Linear maps between finite-dimensional coordinate spaces.

use crate::scalar::Scalar;
use crate::tensor::{SparseTensor, TensorError};

/// A matrix whose column `j` is the image of basis vector `j`.
///
/// The matrix is stored as an arity-2 [`SparseTensor`] indexed `[row, column]`;
/// a per-column cache makes `apply` proportional to the number of nonzeros.
#[derive(Debug, Clone)]
pub struct LinearOperator<F> {
    matrix: SparseTensor<F>,
    columns: Vec<Vec<(usize, F)>>,
}

impl<F: Scalar> PartialEq for LinearOperator<F> {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl<F: Scalar> Eq for LinearOperator<F> {}

impl<F: Scalar> LinearOperator<F> {
    pub fn from_matrix(matrix: SparseTensor<F>) -> Result<Self, TensorError> {
        if matrix.arity() != 2 {
            return Err(TensorError::DimensionMismatch(format!(
                "operator matrix must have arity 2, got {}",
                matrix.arity()
            )));
        }
        let mut columns = vec![Vec::new(); matrix.dims()[1]];
        for (k, c) in matrix.iter() {
            columns[k[1]].push((k[0], c.clone()));
        }
        Ok(LinearOperator { matrix, columns })
    }

    /// Builds an operator from the images of the basis vectors (one dense column each).
    pub fn from_columns(codim: usize, images: &[Vec<F>]) -> Result<Self, TensorError> {
        let mut m = SparseTensor::zeros(vec![codim, images.len()]);
        for (j, col) in images.iter().enumerate() {
            if col.len() != codim {
                return Err(TensorError::DimensionMismatch(format!(
                    "column {j} has length {}, expected {codim}",
                    col.len()
                )));
            }
            for (i, c) in col.iter().enumerate() {
                m.add_at(vec![i, j], c.clone());
            }
        }
        Self::from_matrix(m)
    }

    /// The operator sending `e_j` to `e_{images[j]}`.
    pub fn from_basis_map(codim: usize, images: &[usize]) -> Result<Self, TensorError> {
        SparseTensor::from_entries(
            vec![codim, images.len()],
            images.iter().enumerate().map(|(j, &i)| (vec![i, j], F::one())),
        )
        .and_then(Self::from_matrix)
    }

    pub fn identity(dim: usize) -> Self {
        let m = SparseTensor::from_entries(vec![dim, dim], (0..dim).map(|i| (vec![i, i], F::one())))
            .expect("diagonal indices are in range");
        Self::from_matrix(m).expect("arity 2")
    }

    pub fn zero(codim: usize, dim: usize) -> Self {
        Self::from_matrix(SparseTensor::zeros(vec![codim, dim])).expect("arity 2")
    }

    /// Rank-one map `x ↦ ⟨row, x⟩ · col`, e.g. `x ↦ ε(x)·1`.
    pub fn rank_one(col: &[F], row: &[F]) -> Self {
        let mut m = SparseTensor::zeros(vec![col.len(), row.len()]);
        m.add_outer(&[col, row], &F::one());
        Self::from_matrix(m).expect("arity 2")
    }

    /// Dimension of the domain (number of columns).
    pub fn dim(&self) -> usize {
        self.matrix.dims()[1]
    }

    /// Dimension of the codomain (number of rows).
    pub fn codim(&self) -> usize {
        self.matrix.dims()[0]
    }

    pub fn is_square(&self) -> bool {
        self.dim() == self.codim()
    }

    pub fn matrix(&self) -> &SparseTensor<F> {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> F {
        self.matrix.get(&[row, col])
    }

    /// Sparse image of basis vector `j`.
    pub fn column(&self, j: usize) -> &[(usize, F)] {
        &self.columns[j]
    }

    /// Dense image of basis vector `j`.
    pub fn image(&self, j: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.codim()];
        for (i, c) in &self.columns[j] {
            v[*i] = c.clone();
        }
        v
    }

    pub fn apply(&self, v: &[F]) -> Result<Vec<F>, TensorError> {
        if v.len() != self.dim() {
            return Err(TensorError::DimensionMismatch(format!(
                "applying a {}x{} operator to a vector of length {}",
                self.codim(),
                self.dim(),
                v.len()
            )));
        }
        Ok(self.apply_unchecked(v))
    }

    /// `apply` for callers that already know the lengths agree.
    pub(crate) fn apply_unchecked(&self, v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.codim()];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, c) in &self.columns[j] {
                out[*i] = out[*i].clone() + c.clone() * x.clone();
            }
        }
        out
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self, TensorError> {
        if self.dim() != inner.codim() {
            return Err(TensorError::DimensionMismatch(format!(
                "composing {}x{} after {}x{}",
                self.codim(),
                self.dim(),
                inner.codim(),
                inner.dim()
            )));
        }
        Self::from_matrix(self.matrix.contract(&inner.matrix, &[(1, 0)])?)
    }

    pub fn add(&self, other: &Self) -> Result<Self, TensorError> {
        Self::from_matrix(self.matrix.add(&other.matrix)?)
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::from_matrix(self.matrix.scale(s)).expect("arity 2")
    }

    pub fn transpose(&self) -> Self {
        Self::from_matrix(self.matrix.permute(&[1, 0]).expect("arity 2")).expect("arity 2")
    }

    /// Kronecker product: basis pair `(i, j)` of the tensor space has index `i·dim₂ + j`.
    pub fn kron(&self, other: &Self) -> Self {
        let (r2, c2) = (other.codim(), other.dim());
        let mut m = SparseTensor::zeros(vec![self.codim() * r2, self.dim() * c2]);
        for (k1, a) in self.matrix.iter() {
            for (k2, b) in other.matrix.iter() {
                m.add_at(vec![k1[0] * r2 + k2[0], k1[1] * c2 + k2[1]], a.clone() * b.clone());
            }
        }
        Self::from_matrix(m).expect("arity 2")
    }

    /// Kronecker product of a list of operators, left to right.
    pub fn kron_all(ops: &[Self]) -> Option<Self> {
        let (first, rest) = ops.split_first()?;
        Some(rest.iter().fold(first.clone(), |acc, op| acc.kron(op)))
    }

    /// Dense column images, handy for serialisation and tests.
    pub fn dense_columns(&self) -> Vec<Vec<F>> {
        (0..self.dim()).map(|j| self.image(j)).collect()
    }

    /// True when every column is a basis vector with coefficient one.
    pub fn as_basis_map(&self) -> Option<Vec<usize>> {
        self.columns
            .iter()
            .map(|col| match col.as_slice() {
                [(i, c)] if c.is_one() => Some(*i),
                _ => None,
            })
            .collect()
    }
}
