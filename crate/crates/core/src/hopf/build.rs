
use super::{verify_hopf, FiniteHopfAlgebra, HopfError};
use crate::group::FiniteGroup;
use crate::operator::LinearOperator;
use crate::scalar::Scalar;
use crate::tensor::SparseTensor;

/// The group algebra `k[G]`: basis `e_g`, `Δ(e_g) = e_g ⊗ e_g`, `ε(e_g) = 1`, `S(e_g) = e_{g⁻¹}`.
pub fn build_group_algebra<F: Scalar>(g: &FiniteGroup) -> FiniteHopfAlgebra<F> {
    let n = g.order();
    let mult = SparseTensor::from_entries(
        vec![n, n, n],
        itertools::iproduct!(0..n, 0..n).map(|(a, b)| (vec![a, b, g.mul(a, b)], F::one())),
    )
    .expect("group table in range");
    let comult = SparseTensor::from_entries(vec![n, n, n], (0..n).map(|a| (vec![a, a, a], F::one())))
        .expect("diagonal in range");
    let mut unit = vec![F::zero(); n];
    unit[g.identity()] = F::one();
    let counit = vec![F::one(); n];
    let inverses: Vec<usize> = (0..n).map(|a| g.inverse(a)).collect();
    let antipode = LinearOperator::from_basis_map(n, &inverses).expect("inverse map in range");
    FiniteHopfAlgebra::from_parts(g.labels().to_vec(), mult, unit, comult, counit, antipode)
        .expect("group algebra shapes agree")
}

/// The dual group algebra `k^G` of functions on `G`, on the basis `p_g` of point indicators.
///
/// `p_g p_h = δ_{g,h} p_g`, `1 = Σ p_g`, `Δ(p_g) = Σ_{xy=g} p_x ⊗ p_y`, `ε(p_g) = δ_{g,e}`,
/// `S(p_g) = p_{g⁻¹}`. Labels are `p_<g>`.
pub fn build_dual_group_algebra<F: Scalar>(g: &FiniteGroup) -> FiniteHopfAlgebra<F> {
    let n = g.order();
    let mult = SparseTensor::from_entries(vec![n, n, n], (0..n).map(|a| (vec![a, a, a], F::one())))
        .expect("diagonal in range");
    let comult = SparseTensor::from_entries(
        vec![n, n, n],
        itertools::iproduct!(0..n, 0..n).map(|(x, y)| (vec![g.mul(x, y), x, y], F::one())),
    )
    .expect("group table in range");
    let unit = vec![F::one(); n];
    let mut counit = vec![F::zero(); n];
    counit[g.identity()] = F::one();
    let inverses: Vec<usize> = (0..n).map(|a| g.inverse(a)).collect();
    let antipode = LinearOperator::from_basis_map(n, &inverses).expect("inverse map in range");
    let labels = g.labels().iter().map(|l| format!("p_{l}")).collect();
    FiniteHopfAlgebra::from_parts(labels, mult, unit, comult, counit, antipode)
        .expect("dual group algebra shapes agree")
}

/// The dual Hopf algebra on the dual basis: every structure tensor is transposed.
///
/// Fails with the verification report when `h` is not a Hopf algebra.
pub fn linear_dual<F: Scalar>(h: &FiniteHopfAlgebra<F>) -> Result<FiniteHopfAlgebra<F>, crate::Error> {
    let report = verify_hopf(h);
    if !report.passed() {
        return Err(crate::Error::Precondition {
            context: "linear_dual needs a verified Hopf algebra".into(),
            report: Box::new(report),
        });
    }
    Ok(transpose_structure(h)?)
}

pub(crate) fn transpose_structure<F: Scalar>(h: &FiniteHopfAlgebra<F>) -> Result<FiniteHopfAlgebra<F>, HopfError> {
    // m*(i, j; k) = Δ(k; i, j) and Δ*(k; i, j) = m(i, j; k).
    let mult = h.comult_tensor().permute(&[1, 2, 0])?;
    let comult = h.mult_tensor().permute(&[2, 0, 1])?;
    let labels = h.labels().iter().map(|l| format!("{l}*")).collect();
    FiniteHopfAlgebra::from_parts(
        labels,
        mult,
        h.counit().to_vec(),
        comult,
        h.unit().to_vec(),
        h.antipode().transpose(),
    )
}

/// The tensor-product Hopf algebra `A ⊗ H` with componentwise structure, basis pairs row-major.
pub fn tensor_product<F: Scalar>(a: &FiniteHopfAlgebra<F>, h: &FiniteHopfAlgebra<F>) -> FiniteHopfAlgebra<F> {
    let (na, nh) = (a.dim(), h.dim());
    let n = na * nh;
    let idx = |i: usize, j: usize| i * nh + j;
    let mut mult = SparseTensor::zeros(vec![n, n, n]);
    for (ka, ca) in a.mult_tensor().iter() {
        for (kh, ch) in h.mult_tensor().iter() {
            mult.add_at(
                vec![idx(ka[0], kh[0]), idx(ka[1], kh[1]), idx(ka[2], kh[2])],
                ca.clone() * ch.clone(),
            );
        }
    }
    let mut comult = SparseTensor::zeros(vec![n, n, n]);
    for (ka, ca) in a.comult_tensor().iter() {
        for (kh, ch) in h.comult_tensor().iter() {
            comult.add_at(
                vec![idx(ka[0], kh[0]), idx(ka[1], kh[1]), idx(ka[2], kh[2])],
                ca.clone() * ch.clone(),
            );
        }
    }
    let unit = super::kron_vec(a.unit(), h.unit());
    let counit = super::kron_vec(a.counit(), h.counit());
    let antipode = a.antipode().kron(h.antipode());
    let labels = itertools::iproduct!(a.labels(), h.labels())
        .map(|(x, y)| format!("{x}⊗{y}"))
        .collect();
    FiniteHopfAlgebra::from_parts(labels, mult, unit, comult, counit, antipode)
        .expect("tensor product shapes agree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    #[test]
    fn c2_group_algebra_antipode_is_identity() {
        let h = build_group_algebra::<Q>(&FiniteGroup::cyclic(2, "g"));
        assert_eq!(h.dim(), 2);
        assert_eq!(*h.antipode(), LinearOperator::identity(2));
        assert!(h.is_commutative() && h.is_cocommutative());
    }

    #[test]
    fn c3_antipode_inverts() {
        let h = build_group_algebra::<Q>(&FiniteGroup::cyclic(3, "h"));
        assert_eq!(h.antipode_of(&h.basis(1)), h.basis(2));
    }

    #[test]
    fn s3_flags() {
        let h = build_group_algebra::<Q>(&FiniteGroup::symmetric(3));
        assert!(!h.is_commutative());
        assert!(h.is_cocommutative());
        let d = build_dual_group_algebra::<Q>(&FiniteGroup::symmetric(3));
        assert!(d.is_commutative());
        assert!(!d.is_cocommutative());
    }

    #[test]
    fn dual_c2_comultiplication() {
        let d = build_dual_group_algebra::<Q>(&FiniteGroup::cyclic(2, "g"));
        // Δ(p_g) = p_1 ⊗ p_g + p_g ⊗ p_1
        let expected = SparseTensor::from_entries(vec![2, 2], [(vec![0, 1], q(1)), (vec![1, 0], q(1))]).unwrap();
        assert_eq!(d.comult_of(&d.basis(1)), expected);
        assert_eq!(*d.antipode(), LinearOperator::identity(2));
    }

    #[test]
    fn dual_c3_unit_and_idempotents() {
        let d = build_dual_group_algebra::<Q>(&FiniteGroup::cyclic(3, "h"));
        assert_eq!(d.unit(), &[q(1), q(1), q(1)]);
        assert_eq!(d.mul(&d.basis(1), &d.basis(1)), d.basis(1));
        assert_eq!(d.mul(&d.basis(1), &d.basis(2)), d.zero_vec());
    }

    #[test]
    fn dual_of_c3_matches_function_algebra() {
        let c3 = FiniteGroup::cyclic(3, "h");
        let dual = linear_dual(&build_group_algebra::<Q>(&c3)).unwrap();
        assert_eq!(dual, build_dual_group_algebra::<Q>(&c3));
    }

    #[test]
    fn double_dual_of_s3_is_identical() {
        let h = build_group_algebra::<Q>(&FiniteGroup::symmetric(3));
        let dd = linear_dual(&linear_dual(&h).unwrap()).unwrap();
        assert_eq!(dd, h);
    }

    #[test]
    fn dual_counit_is_unit_coefficients() {
        let h = build_group_algebra::<Q>(&FiniteGroup::cyclic(2, "g"));
        let d = linear_dual(&h).unwrap();
        assert_eq!(d.counit(), h.unit());
    }

    #[test]
    fn linear_dual_refuses_non_hopf() {
        let h = build_group_algebra::<Q>(&FiniteGroup::cyclic(3, "h"));
        let bad = h.with_antipode(LinearOperator::identity(3)).unwrap();
        assert!(matches!(linear_dual(&bad), Err(crate::Error::Precondition { .. })));
    }

    #[test]
    fn tensor_product_of_c2_c3_is_c6() {
        let a = build_group_algebra::<Q>(&FiniteGroup::cyclic(3, "h"));
        let h = build_group_algebra::<Q>(&FiniteGroup::cyclic(2, "g"));
        let t = tensor_product(&a, &h);
        assert_eq!(t.dim(), 6);
        assert!(verify_hopf(&t).passed());
        let direct = build_group_algebra::<Q>(&FiniteGroup::cyclic(3, "h").direct_product(&FiniteGroup::cyclic(2, "g")));
        assert_eq!(t, direct);
    }
}
