use itertools::Itertools;

use super::FiniteHopfAlgebra;
use crate::group::{FiniteGroup, GroupError};
use crate::scalar::Scalar;
use crate::tensor::SparseTensor;

/// Largest dimension for which the search goes beyond basis vectors.
pub const GROUPLIKE_SEARCH_MAX_DIM: usize = 8;

/// Grouplike elements found by [`grouplikes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrouplikeSearch<F> {
    pub elements: Vec<Vec<F>>,
    /// Set when only basis vectors were examined.
    pub basis_restricted: bool,
}

fn is_grouplike<F: Scalar>(h: &FiniteHopfAlgebra<F>, x: &[F]) -> bool {
    if h.counit_of(x) != F::one() {
        return false;
    }
    let mut xx = SparseTensor::zeros(vec![h.dim(), h.dim()]);
    xx.add_outer(&[x, x], &F::one());
    h.comult_of(x) == xx
}

/// Grouplikes `Δ(x) = x⊗x`, `ε(x) = 1` among basis vectors and, up to
/// [`GROUPLIKE_SEARCH_MAX_DIM`], among all vectors with coefficients in `{-1, 0, 1}`.
///
/// Elements are ordered by first appearance: basis vectors first, then the
/// coefficient patterns in lexicographic order.
pub fn grouplikes<F: Scalar>(h: &FiniteHopfAlgebra<F>) -> GrouplikeSearch<F> {
    let n = h.dim();
    let mut elements: Vec<Vec<F>> = (0..n).map(|i| h.basis(i)).filter(|x| is_grouplike(h, x)).collect();
    let basis_restricted = n > GROUPLIKE_SEARCH_MAX_DIM;
    if !basis_restricted {
        let coeffs = [F::zero(), F::one(), -F::one()];
        for pattern in (0..n).map(|_| coeffs.iter().cloned()).multi_cartesian_product() {
            if pattern.iter().filter(|c| !c.is_zero()).count() < 2 {
                continue;
            }
            if is_grouplike(h, &pattern) {
                elements.push(pattern);
            }
        }
    }
    GrouplikeSearch { elements, basis_restricted }
}

/// The group formed by the grouplikes under multiplication.
///
/// Labels are those of the basis for basis grouplikes and `g<k>` otherwise.
pub fn grouplike_group_structure<F: Scalar>(h: &FiniteHopfAlgebra<F>) -> Result<FiniteGroup, GroupError> {
    let found = grouplikes(h);
    let els = &found.elements;
    let labels = els
        .iter()
        .enumerate()
        .map(|(k, x)| match x.iter().positions(|c| !c.is_zero()).exactly_one() {
            Ok(i) => h.label(i).to_string(),
            Err(_) => format!("g{k}"),
        })
        .collect();
    let mut table = Vec::with_capacity(els.len());
    for (r, x) in els.iter().enumerate() {
        let mut row = Vec::with_capacity(els.len());
        for (c, y) in els.iter().enumerate() {
            let xy = h.mul(x, y);
            let k = els
                .iter()
                .position(|z| *z == xy)
                .ok_or(GroupError::EntryOutOfRange { row: r, col: c, value: els.len() })?;
            row.push(k);
        }
        table.push(row);
    }
    FiniteGroup::new(labels, table)
}
