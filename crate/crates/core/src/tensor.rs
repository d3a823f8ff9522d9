//! Sparse multi-index coefficient arrays.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index:?} out of range for dims {dims:?}")]
    IndexOutOfRange { index: Vec<usize>, dims: Vec<usize> },
}

/// A tensor over `F` with one dimension per leg and no stored zeros.
///
/// Entries are kept in a `BTreeMap`, so iteration order is lexicographic on the
/// multi-index and therefore deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseTensor<F> {
    dims: Vec<usize>,
    entries: BTreeMap<Vec<usize>, F>,
}

impl<F: Scalar> SparseTensor<F> {
    pub fn zeros(dims: Vec<usize>) -> Self {
        SparseTensor {
            dims,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a tensor, summing repeated indices and dropping zeros.
    pub fn from_entries<I>(dims: Vec<usize>, entries: I) -> Result<Self, TensorError>
    where
        I: IntoIterator<Item = (Vec<usize>, F)>,
    {
        let mut t = SparseTensor::zeros(dims);
        for (index, c) in entries {
            t.check_index(&index)?;
            t.add_at(index, c);
        }
        Ok(t)
    }

    /// A rank-one tensor holding a dense vector.
    pub fn vector(v: &[F]) -> Self {
        let mut t = SparseTensor::zeros(vec![v.len()]);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                t.entries.insert(vec![i], c.clone());
            }
        }
        t
    }

    /// The arity-zero tensor holding one scalar.
    pub fn scalar(c: F) -> Self {
        let mut t = SparseTensor::zeros(vec![]);
        t.add_at(vec![], c);
        t
    }

    /// Basis vector `e_i` of dimension `dim`.
    pub fn basis_vector(dim: usize, i: usize) -> Self {
        let mut t = SparseTensor::zeros(vec![dim]);
        t.add_at(vec![i], F::one());
        t
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: &[usize]) -> F {
        self.entries.get(index).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize], &F)> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn check_index(&self, index: &[usize]) -> Result<(), TensorError> {
        if index.len() != self.dims.len() || index.iter().zip(&self.dims).any(|(i, d)| i >= d) {
            return Err(TensorError::IndexOutOfRange {
                index: index.to_vec(),
                dims: self.dims.clone(),
            });
        }
        Ok(())
    }

    /// Adds `c` at `index`; callers guarantee the index is in range.
    pub fn add_at(&mut self, index: Vec<usize>, c: F) {
        debug_assert!(self.check_index(&index).is_ok(), "{index:?} vs {:?}", self.dims);
        if c.is_zero() {
            return;
        }
        match self.entries.entry(index) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `coeff · f₁ ⊗ f₂ ⊗ … ⊗ fₙ` for dense factors matching the legs.
    pub fn add_outer(&mut self, factors: &[&[F]], coeff: &F) {
        debug_assert_eq!(factors.len(), self.dims.len());
        if coeff.is_zero() {
            return;
        }
        let supports: Vec<Vec<usize>> = factors
            .iter()
            .map(|f| (0..f.len()).filter(|&i| !f[i].is_zero()).collect())
            .collect();
        if supports.is_empty() {
            self.add_at(vec![], coeff.clone());
            return;
        }
        for index in supports.iter().map(|s| s.iter().copied()).multi_cartesian_product() {
            let mut c = coeff.clone();
            for (leg, &i) in index.iter().enumerate() {
                c = c * factors[leg][i].clone();
            }
            self.add_at(index, c);
        }
    }

    /// Dense view of a rank-one tensor.
    pub fn to_dense_vector(&self) -> Vec<F> {
        assert_eq!(self.arity(), 1, "to_dense_vector needs a rank-one tensor");
        let mut v = vec![F::zero(); self.dims[0]];
        for (k, c) in &self.entries {
            v[k[0]] = c.clone();
        }
        v
    }

    /// All coordinates in row-major order, last index fastest.
    pub fn flatten(&self) -> Vec<F> {
        let mut v = vec![F::zero(); self.dims.iter().product()];
        for (k, c) in &self.entries {
            let pos = k.iter().zip(&self.dims).fold(0, |acc, (i, d)| acc * d + i);
            v[pos] = c.clone();
        }
        v
    }

    fn same_dims(&self, other: &Self, op: &str) -> Result<(), TensorError> {
        if self.dims != other.dims {
            return Err(TensorError::DimensionMismatch(format!(
                "{op}: {:?} vs {:?}",
                self.dims, other.dims
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, TensorError> {
        self.same_dims(other, "add")?;
        let mut out = self.clone();
        for (k, c) in &other.entries {
            out.add_at(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TensorError> {
        self.add(&other.scale(&-F::one()))
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return SparseTensor::zeros(self.dims.clone());
        }
        SparseTensor {
            dims: self.dims.clone(),
            entries: self
                .entries
                .iter()
                .map(|(k, c)| (k.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }

    /// Tensor (outer) product; legs of `self` come first.
    pub fn outer(&self, other: &Self) -> Self {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut out = SparseTensor::zeros(dims);
        for (k1, c1) in &self.entries {
            for (k2, c2) in &other.entries {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                out.add_at(k, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Reorders legs: leg `k` of the result is leg `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self, TensorError> {
        if perm.len() != self.arity() || !perm.iter().copied().sorted().eq(0..self.arity()) {
            return Err(TensorError::DimensionMismatch(format!(
                "permutation {perm:?} does not fit arity {}",
                self.arity()
            )));
        }
        let dims = perm.iter().map(|&p| self.dims[p]).collect();
        let entries = self
            .entries
            .iter()
            .map(|(k, c)| (perm.iter().map(|&p| k[p]).collect(), c.clone()))
            .collect();
        Ok(SparseTensor { dims, entries })
    }

    /// Replaces leg `leg` by its image under the linear map sending basis index `i` to `image(i)`.
    pub fn map_leg<G>(&self, leg: usize, dim: usize, image: G) -> Self
    where
        G: Fn(usize) -> Vec<(usize, F)>,
    {
        let mut dims = self.dims.clone();
        dims[leg] = dim;
        let mut out = SparseTensor::zeros(dims);
        for (k, c) in &self.entries {
            for (j, d) in image(k[leg]) {
                let mut idx = k.clone();
                idx[leg] = j;
                out.add_at(idx, c.clone() * d);
            }
        }
        out
    }

    /// Replaces leg `leg` by two legs of dimensions `dims.0`, `dims.1` using `image(i) = Σ c·(j ⊗ k)`.
    pub fn split_leg<G>(&self, leg: usize, dims: (usize, usize), image: G) -> Self
    where
        G: Fn(usize) -> Vec<(usize, usize, F)>,
    {
        let mut new_dims = self.dims.clone();
        new_dims[leg] = dims.0;
        new_dims.insert(leg + 1, dims.1);
        let mut out = SparseTensor::zeros(new_dims);
        for (k, c) in &self.entries {
            for (j1, j2, d) in image(k[leg]) {
                let mut idx = k.clone();
                idx[leg] = j1;
                idx.insert(leg + 1, j2);
                out.add_at(idx, c.clone() * d);
            }
        }
        out
    }

    /// Combines legs `first` and `second` into one leg of dimension `dim` placed where `first` was.
    pub fn merge_legs<G>(&self, first: usize, second: usize, dim: usize, product: G) -> Self
    where
        G: Fn(usize, usize) -> Vec<(usize, F)>,
    {
        debug_assert_ne!(first, second);
        let mut dims = self.dims.clone();
        dims[first] = dim;
        dims.remove(second);
        let mut out = SparseTensor::zeros(dims);
        for (k, c) in &self.entries {
            for (j, d) in product(k[first], k[second]) {
                let mut idx = k.clone();
                idx[first] = j;
                idx.remove(second);
                out.add_at(idx, c.clone() * d);
            }
        }
        out
    }

    /// Pairs leg `leg` with the functional `weights`, removing the leg.
    pub fn contract_leg(&self, leg: usize, weights: &[F]) -> Self {
        let mut dims = self.dims.clone();
        dims.remove(leg);
        let mut out = SparseTensor::zeros(dims);
        for (k, c) in &self.entries {
            let w = &weights[k[leg]];
            if w.is_zero() {
                continue;
            }
            let mut idx = k.clone();
            idx.remove(leg);
            out.add_at(idx, c.clone() * w.clone());
        }
        out
    }

    /// Contracts leg `p.0` of `self` against leg `p.1` of `other` for every pair.
    ///
    /// The free legs of `self` come first (in order), followed by the free
    /// legs of `other`.
    pub fn contract(&self, other: &Self, pairs: &[(usize, usize)]) -> Result<Self, TensorError> {
        for &(a, b) in pairs {
            if a >= self.arity() || b >= other.arity() {
                return Err(TensorError::DimensionMismatch(format!(
                    "contraction pair ({a},{b}) out of range for arities {} and {}",
                    self.arity(),
                    other.arity()
                )));
            }
            if self.dims[a] != other.dims[b] {
                return Err(TensorError::DimensionMismatch(format!(
                    "contracting leg {a} (dim {}) with leg {b} (dim {})",
                    self.dims[a], other.dims[b]
                )));
            }
        }
        if !pairs.iter().map(|p| p.0).all_unique() || !pairs.iter().map(|p| p.1).all_unique() {
            return Err(TensorError::DimensionMismatch(
                "a leg appears in more than one contraction pair".into(),
            ));
        }
        let free_self: Vec<usize> = (0..self.arity()).filter(|i| pairs.iter().all(|p| p.0 != *i)).collect();
        let free_other: Vec<usize> = (0..other.arity()).filter(|i| pairs.iter().all(|p| p.1 != *i)).collect();
        let dims = free_self
            .iter()
            .map(|&i| self.dims[i])
            .chain(free_other.iter().map(|&i| other.dims[i]))
            .collect();

        // Group the entries of `other` by their contracted indices.
        let mut buckets: HashMap<Vec<usize>, Vec<(&Vec<usize>, &F)>> = HashMap::new();
        for (k, c) in &other.entries {
            let key = pairs.iter().map(|p| k[p.1]).collect();
            buckets.entry(key).or_default().push((k, c));
        }
        let mut out = SparseTensor::zeros(dims);
        for (k1, c1) in &self.entries {
            let key: Vec<usize> = pairs.iter().map(|p| k1[p.0]).collect();
            let Some(matches) = buckets.get(&key) else { continue };
            for (k2, c2) in matches {
                let index = free_self
                    .iter()
                    .map(|&i| k1[i])
                    .chain(free_other.iter().map(|&i| k2[i]))
                    .collect();
                out.add_at(index, c1.clone() * (*c2).clone());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use num_traits::One;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn identity(n: usize) -> SparseTensor<Rational> {
        SparseTensor::from_entries(vec![n, n], (0..n).map(|i| (vec![i, i], Rational::one()))).unwrap()
    }

    #[test]
    fn identity_contracts_to_vector() {
        let v = SparseTensor::vector(&[q(1), q(0)]);
        let out = identity(2).contract(&v, &[(1, 0)]).unwrap();
        assert_eq!(out, v);
    }

    #[test]
    fn zero_tensor_annihilates() {
        let z = SparseTensor::<Rational>::zeros(vec![2, 3]);
        let t = SparseTensor::from_entries(vec![3, 4], [(vec![1, 2], q(5))]).unwrap();
        let out = z.contract(&t, &[(1, 0)]).unwrap();
        assert!(out.is_zero());
        assert_eq!(out.dims(), &[2, 4]);
    }

    #[test]
    fn cyclic_multiplication_contracts_to_square() {
        // m(i, j; k) for C3 = {1, h, h²} with indices 0, 1, 2.
        let m = SparseTensor::from_entries(
            vec![3, 3, 3],
            (0..3).flat_map(|i| (0..3).map(move |j| (vec![i, j, (i + j) % 3], Rational::one()))),
        )
        .unwrap();
        let eh = SparseTensor::basis_vector(3, 1);
        let partial = m.contract(&eh, &[(0, 0)]).unwrap();
        let out = partial.contract(&eh, &[(0, 0)]).unwrap();
        assert_eq!(out, SparseTensor::basis_vector(3, 2));
    }

    #[test]
    fn contraction_dimension_mismatch() {
        let a = SparseTensor::<Rational>::zeros(vec![2, 3]);
        let b = SparseTensor::<Rational>::zeros(vec![2]);
        assert!(matches!(
            a.contract(&b, &[(1, 0)]),
            Err(TensorError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn out_of_range_index_rejected() {
        let r = SparseTensor::from_entries(vec![2], [(vec![2], q(1))]);
        assert!(matches!(r, Err(TensorError::IndexOutOfRange { .. })));
    }

    #[test]
    fn no_stored_zeros_after_cancellation() {
        let t = SparseTensor::from_entries(vec![2], [(vec![0], q(3)), (vec![0], q(-3))]).unwrap();
        assert_eq!(t.nnz(), 0);
        let a = SparseTensor::vector(&[q(1), q(2)]);
        assert!(a.add(&a.scale(&q(-1))).unwrap().is_zero());
    }

    #[test]
    fn permute_swaps_legs() {
        let t = SparseTensor::from_entries(vec![2, 3], [(vec![1, 2], q(7))]).unwrap();
        let p = t.permute(&[1, 0]).unwrap();
        assert_eq!(p.dims(), &[3, 2]);
        assert_eq!(p.get(&[2, 1]), q(7));
        assert!(t.permute(&[0, 0]).is_err());
    }

    #[test]
    fn leg_operations_agree_with_contraction() {
        let t = SparseTensor::from_entries(vec![2, 3], [(vec![0, 1], q(2)), (vec![1, 2], q(-1))]).unwrap();
        let m = SparseTensor::from_entries(vec![3, 2], [(vec![1, 0], q(3)), (vec![2, 0], q(1)), (vec![2, 1], q(5))])
            .unwrap();
        let mapped = t.map_leg(1, 2, |i| m.iter().filter(|(k, _)| k[0] == i).map(|(k, c)| (k[1], c.clone())).collect());
        assert_eq!(mapped, t.contract(&m, &[(1, 0)]).unwrap());

        let split = t.split_leg(0, (2, 2), |i| vec![(i, i, q(1)), (1 - i, i, q(1))]);
        assert_eq!(split.dims(), &[2, 2, 3]);
        let merged = split.merge_legs(0, 1, 2, |x, y| vec![((x + y) % 2, q(1))]);
        assert_eq!(merged.get(&[0, 1]), q(2));
        assert_eq!(merged.get(&[1, 1]), q(2));
        assert_eq!(t.contract_leg(0, &[q(1), q(1)]), SparseTensor::vector(&[q(0), q(2), q(-1)]));
    }

    // Dense reference used by the property tests below.
    fn dense_contract(a: &SparseTensor<Rational>, b: &SparseTensor<Rational>) -> Vec<Vec<Rational>> {
        // a: [n, k], b: [k, m] contracted on a.1 / b.0.
        let (n, k, m) = (a.dims()[0], a.dims()[1], b.dims()[1]);
        let mut out = vec![vec![q(0); m]; n];
        for i in 0..n {
            for j in 0..m {
                for l in 0..k {
                    out[i][j] = out[i][j].clone() + a.get(&[i, l]) * b.get(&[l, j]);
                }
            }
        }
        out
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = SparseTensor<Rational>> {
        proptest::collection::vec(-3i64..4, rows * cols).prop_map(move |vals| {
            SparseTensor::from_entries(
                vec![rows, cols],
                vals.into_iter()
                    .enumerate()
                    .map(|(n, v)| (vec![n / cols, n % cols], q(v))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn contraction_matches_dense_reference(a in small_matrix(3, 2), b in small_matrix(2, 4)) {
            let sparse = a.contract(&b, &[(1, 0)]).unwrap();
            let dense = dense_contract(&a, &b);
            for (i, row) in dense.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    prop_assert_eq!(&sparse.get(&[i, j]), v);
                }
            }
        }

        #[test]
        fn contraction_is_bilinear(a in small_matrix(2, 3), a2 in small_matrix(2, 3), b in small_matrix(3, 2), s in -4i64..5) {
            let lhs = a.scale(&q(s)).add(&a2).unwrap().contract(&b, &[(1, 0)]).unwrap();
            let rhs = a.contract(&b, &[(1, 0)]).unwrap().scale(&q(s))
                .add(&a2.contract(&b, &[(1, 0)]).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn contraction_is_associative(a in small_matrix(2, 3), b in small_matrix(3, 2), c in small_matrix(2, 2)) {
            let left = a.contract(&b, &[(1, 0)]).unwrap().contract(&c, &[(1, 0)]).unwrap();
            let right = a.contract(&b.contract(&c, &[(1, 0)]).unwrap(), &[(1, 0)]).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
