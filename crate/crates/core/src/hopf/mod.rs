//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Every identity checked in this crate is multilinear in its free variables,
//! so each verifier loops over basis tuples only; that is equivalent to
//! checking the identity on all elements.

mod build;
mod grouplike;
mod maps;
pub(crate) mod verify;

pub use build::{build_dual_group_algebra, build_group_algebra, linear_dual, tensor_product};
pub use grouplike::{grouplike_group_structure, grouplikes, GrouplikeSearch, GROUPLIKE_SEARCH_MAX_DIM};
pub use maps::{is_algebra_map, is_coalgebra_map};
pub use verify::verify_hopf;

use thiserror::Error;

use crate::operator::LinearOperator;
use crate::scalar::Scalar;
use crate::tensor::{SparseTensor, TensorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("structure mismatch: {0}")]
    Shape(String),
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
}

/// Structure constants of a finite-dimensional Hopf algebra on a fixed basis.
///
/// * `mult[i, j, k]`: coefficient of `e_k` in `e_i · e_j`
/// * `comult[i, j, k]`: coefficient of `e_j ⊗ e_k` in `Δ(e_i)`
/// * `unit[i]`, `counit[i] = ε(e_i)`
/// * `antipode`: matrix with column `j` equal to `S(e_j)`
///
/// Values are immutable; the commutativity flags are computed on construction.
/// Construction checks shapes only; the axioms are checked by [`verify_hopf`].
#[derive(Debug, Clone)]
pub struct FiniteHopfAlgebra<F> {
    labels: Vec<String>,
    mult: SparseTensor<F>,
    unit: Vec<F>,
    comult: SparseTensor<F>,
    counit: Vec<F>,
    antipode: LinearOperator<F>,
    is_commutative: bool,
    is_cocommutative: bool,
    // products[i][j] and coproducts[i] unpacked from the tensors.
    products: Vec<Vec<Vec<(usize, F)>>>,
    coproducts: Vec<Vec<(usize, usize, F)>>,
}

impl<F: Scalar> PartialEq for FiniteHopfAlgebra<F> {
    /// Entrywise equality of all structure tensors (labels are ignored).
    fn eq(&self, other: &Self) -> bool {
        self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl<F: Scalar> FiniteHopfAlgebra<F> {
    pub fn from_parts(
        labels: Vec<String>,
        mult: SparseTensor<F>,
        unit: Vec<F>,
        comult: SparseTensor<F>,
        counit: Vec<F>,
        antipode: LinearOperator<F>,
    ) -> Result<Self, HopfError> {
        let n = labels.len();
        if let Some(dup) = itertools::Itertools::duplicates(labels.iter()).next() {
            return Err(HopfError::DuplicateLabel(dup.clone()));
        }
        if mult.dims() != [n, n, n] {
            return Err(HopfError::Shape(format!("mult has dims {:?}, expected [{n}, {n}, {n}]", mult.dims())));
        }
        if comult.dims() != [n, n, n] {
            return Err(HopfError::Shape(format!("comult has dims {:?}, expected [{n}, {n}, {n}]", comult.dims())));
        }
        if unit.len() != n || counit.len() != n {
            return Err(HopfError::Shape(format!(
                "unit/counit have lengths {}/{}, expected {n}",
                unit.len(),
                counit.len()
            )));
        }
        if antipode.dim() != n || antipode.codim() != n {
            return Err(HopfError::Shape(format!(
                "antipode is {}x{}, expected {n}x{n}",
                antipode.codim(),
                antipode.dim()
            )));
        }
        let mut products = vec![vec![Vec::new(); n]; n];
        for (k, c) in mult.iter() {
            products[k[0]][k[1]].push((k[2], c.clone()));
        }
        let mut coproducts = vec![Vec::new(); n];
        for (k, c) in comult.iter() {
            coproducts[k[0]].push((k[1], k[2], c.clone()));
        }
        let is_commutative = mult.permute(&[1, 0, 2])? == mult;
        let is_cocommutative = comult.permute(&[0, 2, 1])? == comult;
        Ok(FiniteHopfAlgebra {
            labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
            is_commutative,
            is_cocommutative,
            products,
            coproducts,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mult_tensor(&self) -> &SparseTensor<F> {
        &self.mult
    }

    pub fn comult_tensor(&self) -> &SparseTensor<F> {
        &self.comult
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    pub fn antipode(&self) -> &LinearOperator<F> {
        &self.antipode
    }

    pub fn is_commutative(&self) -> bool {
        self.is_commutative
    }

    pub fn is_cocommutative(&self) -> bool {
        self.is_cocommutative
    }

    /// Copy of `self` with a different antipode (used to build corrupted fixtures).
    pub fn with_antipode(&self, antipode: LinearOperator<F>) -> Result<Self, HopfError> {
        Self::from_parts(
            self.labels.clone(),
            self.mult.clone(),
            self.unit.clone(),
            self.comult.clone(),
            self.counit.clone(),
            antipode,
        )
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self, HopfError> {
        Self::from_parts(
            labels,
            self.mult.clone(),
            self.unit.clone(),
            self.comult.clone(),
            self.counit.clone(),
            self.antipode.clone(),
        )
    }

    // ----- element arithmetic on dense coordinate vectors -----

    pub fn zero_vec(&self) -> Vec<F> {
        vec![F::zero(); self.dim()]
    }

    pub fn basis(&self, i: usize) -> Vec<F> {
        let mut v = self.zero_vec();
        v[i] = F::one();
        v
    }

    /// Sparse product of two basis vectors.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.products[i][j]
    }

    /// Sparse coproduct `Δ(e_i)` as `(j, k, c)` triples.
    pub fn basis_coproduct(&self, i: usize) -> &[(usize, usize, F)] {
        &self.coproducts[i]
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = self.zero_vec();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a.clone() * b.clone();
                for (k, c) in &self.products[i][j] {
                    out[*k] = out[*k].clone() + ab.clone() * c.clone();
                }
            }
        }
        out
    }

    /// Product of a sequence of elements, left to right; the empty product is `1`.
    pub fn mul_all(&self, xs: &[&[F]]) -> Vec<F> {
        xs.iter().fold(self.unit.clone(), |acc, x| self.mul(&acc, x))
    }

    pub fn counit_of(&self, x: &[F]) -> F {
        x.iter()
            .zip(&self.counit)
            .fold(F::zero(), |acc, (a, e)| acc + a.clone() * e.clone())
    }

    pub fn antipode_of(&self, x: &[F]) -> Vec<F> {
        self.antipode.apply_unchecked(x)
    }

    pub fn comult_of(&self, x: &[F]) -> SparseTensor<F> {
        let n = self.dim();
        let mut t = SparseTensor::zeros(vec![n, n]);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, k, c) in &self.coproducts[i] {
                t.add_at(vec![*j, *k], a.clone() * c.clone());
            }
        }
        t
    }

    /// `x₁ ⊗ … ⊗ xₙ`, computed by repeatedly applying `Δ` to the first leg.
    ///
    /// `n = 1` returns `x` itself and `n = 0` returns `ε(x)` as an arity-zero tensor.
    pub fn iterated_comult(&self, x: &[F], n: usize) -> SparseTensor<F> {
        if n == 0 {
            return SparseTensor::scalar(self.counit_of(x));
        }
        let mut t = SparseTensor::vector(x);
        for _ in 1..n {
            t = self.comult_leg(&t, 0);
        }
        t
    }

    /// Same expansion as [`iterated_comult`](Self::iterated_comult) but splitting the last leg each time.
    pub fn iterated_comult_right(&self, x: &[F], n: usize) -> SparseTensor<F> {
        if n == 0 {
            return SparseTensor::scalar(self.counit_of(x));
        }
        let mut t = SparseTensor::vector(x);
        for k in 1..n {
            t = self.comult_leg(&t, k - 1);
        }
        t
    }

    /// Applies `Δ` to leg `leg` of `t`, which must be a leg of this algebra.
    pub fn comult_leg(&self, t: &SparseTensor<F>, leg: usize) -> SparseTensor<F> {
        let mut dims = t.dims().to_vec();
        dims.insert(leg + 1, self.dim());
        let mut out = SparseTensor::zeros(dims);
        for (k, c) in t.iter() {
            for (j1, j2, d) in &self.coproducts[k[leg]] {
                let mut idx = Vec::with_capacity(k.len() + 1);
                idx.extend_from_slice(&k[..leg]);
                idx.push(*j1);
                idx.push(*j2);
                idx.extend_from_slice(&k[leg + 1..]);
                out.add_at(idx, c.clone() * d.clone());
            }
        }
        out
    }

    /// Sweedler expansion of `x` into `n` legs as `(basis indices, coefficient)` terms.
    pub fn sweedler(&self, x: &[F], n: usize) -> Vec<(Vec<usize>, F)> {
        self.iterated_comult(x, n)
            .iter()
            .map(|(k, c)| (k.to_vec(), c.clone()))
            .collect()
    }

    /// Sweedler expansion of a basis vector.
    pub fn sweedler_basis(&self, i: usize, n: usize) -> Vec<(Vec<usize>, F)> {
        self.sweedler(&self.basis(i), n)
    }

    /// The rank-one map `x ↦ ε(x)·1`.
    pub fn counit_unit_map(&self) -> LinearOperator<F> {
        LinearOperator::rank_one(&self.unit, &self.counit)
    }
}

/// Index of the basis pair `(i, j)` in a tensor product whose second factor has dimension `dim2`.
pub fn pair_index(i: usize, j: usize, dim2: usize) -> usize {
    i * dim2 + j
}

/// Dense coordinates of `x ⊗ y` under the row-major pairing.
pub fn kron_vec<F: Scalar>(x: &[F], y: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); x.len() * y.len()];
    for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            out[i * y.len() + j] = a.clone() * b.clone();
        }
    }
    out
}

pub(crate) fn scaled<F: Scalar>(v: &[F], s: &F) -> Vec<F> {
    v.iter().map(|x| x.clone() * s.clone()).collect()
}

pub(crate) fn add_scaled<F: Scalar>(acc: &mut [F], v: &[F], s: &F) {
    if s.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a = a.clone() + b.clone() * s.clone();
        }
    }
}
