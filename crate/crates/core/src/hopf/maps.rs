use super::FiniteHopfAlgebra;
use crate::operator::LinearOperator;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tensor::{SparseTensor, TensorError};

fn check_dims<F: Scalar>(
    h: &FiniteHopfAlgebra<F>,
    k: &FiniteHopfAlgebra<F>,
    f: &LinearOperator<F>,
) -> Result<(), crate::Error> {
    if f.dim() != h.dim() || f.codim() != k.dim() {
        return Err(TensorError::DimensionMismatch(format!(
            "map is {}x{} but the algebras have dimensions {} -> {}",
            f.codim(),
            f.dim(),
            h.dim(),
            k.dim()
        ))
        .into());
    }
    Ok(())
}

/// Checks `f(xy) = f(x)f(y)` on all basis pairs and `f(1) = 1`.
pub fn is_algebra_map<F: Scalar>(
    h: &FiniteHopfAlgebra<F>,
    k: &FiniteHopfAlgebra<F>,
    f: &LinearOperator<F>,
) -> Result<VerificationReport, crate::Error> {
    check_dims(h, k, f)?;
    let mut r = VerificationReport::new("algebra map");
    let b = h.labels();
    r.check("multiplicative", "f(xy) = f(x)f(y)", &[b, b], |t| {
        let xy = h.mul(&h.basis(t[0]), &h.basis(t[1]));
        (
            SparseTensor::vector(&f.apply_unchecked(&xy)),
            SparseTensor::vector(&k.mul(&f.image(t[0]), &f.image(t[1]))),
        )
    });
    r.check("unital", "f(1) = 1", &[], |_| {
        (SparseTensor::vector(&f.apply_unchecked(h.unit())), SparseTensor::vector(k.unit()))
    });
    Ok(r)
}

/// Checks `Δf = (f⊗f)Δ` on all basis elements and `ε∘f = ε`.
pub fn is_coalgebra_map<F: Scalar>(
    h: &FiniteHopfAlgebra<F>,
    k: &FiniteHopfAlgebra<F>,
    f: &LinearOperator<F>,
) -> Result<VerificationReport, crate::Error> {
    check_dims(h, k, f)?;
    let mut r = VerificationReport::new("coalgebra map");
    let b = h.labels();
    r.check("comultiplicative", "Δ(f(x)) = f(x₁)⊗f(x₂)", &[b], |t| {
        let mut rhs = SparseTensor::zeros(vec![k.dim(), k.dim()]);
        for (j, l, c) in h.basis_coproduct(t[0]) {
            rhs.add_outer(&[&f.image(*j), &f.image(*l)], c);
        }
        (k.comult_of(&f.image(t[0])), rhs)
    });
    r.check("counital", "ε(f(x)) = ε(x)", &[b], |t| {
        (
            SparseTensor::scalar(k.counit_of(&f.image(t[0]))),
            SparseTensor::scalar(h.counit()[t[0]].clone()),
        )
    });
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::{build_dual_group_algebra, build_group_algebra};
    use crate::scalar::Rational;

    type Q = Rational;

    fn c3() -> FiniteHopfAlgebra<Q> {
        build_group_algebra(&FiniteGroup::cyclic(3, "h"))
    }

    #[test]
    fn identity_is_algebra_map() {
        let h = c3();
        assert!(is_algebra_map(&h, &h, &LinearOperator::identity(3)).unwrap().passed());
    }

    #[test]
    fn counit_projection_is_algebra_map() {
        let h = c3();
        assert!(is_algebra_map(&h, &h, &h.counit_unit_map()).unwrap().passed());
    }

    #[test]
    fn swap_fails_unit() {
        let h = c3();
        let swap = LinearOperator::from_basis_map(3, &[1, 0, 2]).unwrap();
        let r = is_algebra_map(&h, &h, &swap).unwrap();
        assert!(!r.get("unital").unwrap().passed);
    }

    #[test]
    fn set_maps_are_coalgebra_maps() {
        let h = c3();
        for images in itertools::iproduct!(0..3, 0..3, 0..3) {
            let f = LinearOperator::from_basis_map(3, &[images.0, images.1, images.2]).unwrap();
            assert!(is_coalgebra_map(&h, &h, &f).unwrap().passed());
        }
    }

    #[test]
    fn sum_image_is_not_coalgebra_map() {
        let h = c3();
        let one = Q::from_i64(1);
        let zero = Q::from_i64(0);
        let f = LinearOperator::from_columns(
            3,
            &[
                vec![one.clone(), zero.clone(), zero.clone()],
                vec![one.clone(), one.clone(), zero.clone()],
                vec![zero.clone(), zero, one],
            ],
        )
        .unwrap();
        let r = is_coalgebra_map(&h, &h, &f).unwrap();
        assert!(!r.get("comultiplicative").unwrap().passed);
    }

    #[test]
    fn s3_antipode_is_coalgebra_map() {
        let h = build_group_algebra::<Q>(&FiniteGroup::symmetric(3));
        assert!(is_coalgebra_map(&h, &h, h.antipode()).unwrap().passed());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let h = c3();
        let k = build_dual_group_algebra::<Q>(&FiniteGroup::cyclic(2, "g"));
        assert!(is_algebra_map(&h, &k, &LinearOperator::identity(3)).is_err());
    }
}
