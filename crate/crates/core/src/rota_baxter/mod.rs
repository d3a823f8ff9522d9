//! Rota-Baxter operators on cocommutative Hopf algebras, co-operators on
//! commutative ones, and their lifts to smash products and coproducts.

mod coproduct;
pub(crate) mod expr;
mod product;

use std::sync::Arc;

pub use coproduct::*;
pub use product::*;

use crate::hopf::{is_algebra_map, is_coalgebra_map, FiniteHopfAlgebra};
use crate::operator::LinearOperator;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tensor::SparseTensor;
use expr::Legs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RBKind {
    /// `B(x)B(y) = B(x₁B(x₂)yS(B(x₃)))`, a coalgebra map on a cocommutative carrier.
    Operator,
    /// `B(x₁)⊗B(x₂) = B(x)₁B(B(x)₂S(B(x)₄))⊗B(x)₃`, an algebra map on a commutative carrier.
    CoOperator,
}

impl std::fmt::Display for RBKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RBKind::Operator => "operator",
            RBKind::CoOperator => "co-operator",
        })
    }
}

/// A linear endomorphism together with its carrier, checked for the structure its kind needs.
#[derive(Debug, Clone)]
pub struct RBOperatorCandidate<F> {
    carrier: Arc<FiniteHopfAlgebra<F>>,
    map: LinearOperator<F>,
    kind: RBKind,
}

impl<F: Scalar> RBOperatorCandidate<F> {
    /// Fails unless the carrier has the right (co)commutativity and `map` is a
    /// coalgebra map (operators) or an algebra map (co-operators).
    pub fn new(carrier: Arc<FiniteHopfAlgebra<F>>, map: LinearOperator<F>, kind: RBKind) -> Result<Self, crate::Error> {
        match kind {
            RBKind::Operator => {
                if !carrier.is_cocommutative() {
                    return Err(crate::Error::NotCocommutative("Rota-Baxter operator carrier".into()));
                }
                crate::require(is_coalgebra_map(&carrier, &carrier, &map)?, "a Rota-Baxter operator must be a coalgebra map")?;
            }
            RBKind::CoOperator => {
                if !carrier.is_commutative() {
                    return Err(crate::Error::NotCommutative("Rota-Baxter co-operator carrier".into()));
                }
                crate::require(is_algebra_map(&carrier, &carrier, &map)?, "a Rota-Baxter co-operator must be an algebra map")?;
            }
        }
        Ok(RBOperatorCandidate { carrier, map, kind })
    }

    pub fn carrier(&self) -> &Arc<FiniteHopfAlgebra<F>> {
        &self.carrier
    }

    pub fn map(&self) -> &LinearOperator<F> {
        &self.map
    }

    pub fn kind(&self) -> RBKind {
        self.kind
    }
}

fn expect_kind<F>(cand: &RBOperatorCandidate<F>, kind: RBKind) -> Result<(), crate::Error> {
    if cand.kind != kind {
        return Err(crate::Error::KindMismatch(format!("expected a {kind} candidate, got a {}", cand.kind)));
    }
    Ok(())
}

/// `B(x)B(y)` and `B(x₁B(x₂)yS(B(x₃)))` for basis elements.
pub(crate) fn rb_operator_sides<F: Scalar>(
    h: &FiniteHopfAlgebra<F>,
    b: &LinearOperator<F>,
    x: usize,
    y: usize,
) -> (SparseTensor<F>, SparseTensor<F>) {
    let lhs = h.mul(&b.image(x), &b.image(y));
    let rhs = Legs::vector("x", &h.basis(x))
        .delta("x", h, &["x1", "x2", "x3"])
        .op("x2", b)
        .ops("x3", &[b, h.antipode()])
        .with("y", &h.basis(y))
        .mul(&["x1", "x2", "y", "x3"], h, "z")
        .op("z", b)
        .finish(&["z"]);
    (SparseTensor::vector(&lhs), rhs)
}

/// `B(x₁)⊗B(x₂)` and `B(x)₁B(B(x)₂S(B(x)₄))⊗B(x)₃` for a basis element.
pub(crate) fn rb_co_operator_sides<F: Scalar>(
    h: &FiniteHopfAlgebra<F>,
    b: &LinearOperator<F>,
    x: usize,
) -> (SparseTensor<F>, SparseTensor<F>) {
    let lhs = Legs::vector("x", &h.basis(x))
        .delta("x", h, &["x1", "x2"])
        .op("x1", b)
        .op("x2", b)
        .finish(&["x1", "x2"]);
    let rhs = Legs::vector("y", &b.image(x))
        .delta("y", h, &["y1", "y2", "y3", "y4"])
        .op("y4", h.antipode())
        .mul(&["y2", "y4"], h, "z")
        .op("z", b)
        .mul(&["y1", "z"], h, "w")
        .finish(&["w", "y3"]);
    (lhs, rhs)
}

pub(crate) fn push_rb_operator_identity<F: Scalar>(
    r: &mut VerificationReport,
    label: &str,
    h: &FiniteHopfAlgebra<F>,
    b: &LinearOperator<F>,
) {
    r.check(label, "B(x)B(y) = B(x₁B(x₂)yS(B(x₃)))", &[h.labels(), h.labels()], |t| {
        rb_operator_sides(h, b, t[0], t[1])
    });
}

pub(crate) fn push_rb_co_operator_identity<F: Scalar>(
    r: &mut VerificationReport,
    label: &str,
    h: &FiniteHopfAlgebra<F>,
    b: &LinearOperator<F>,
) {
    r.check(label, "B(x₁)⊗B(x₂) = B(x)₁B(B(x)₂S(B(x)₄))⊗B(x)₃", &[h.labels()], |t| {
        rb_co_operator_sides(h, b, t[0])
    });
}

/// Checks the Rota-Baxter operator identity on all basis pairs.
pub fn is_rb_operator<F: Scalar>(cand: &RBOperatorCandidate<F>) -> Result<VerificationReport, crate::Error> {
    expect_kind(cand, RBKind::Operator)?;
    let mut r = VerificationReport::new("Rota-Baxter operator");
    push_rb_operator_identity(&mut r, "RB", &cand.carrier, &cand.map);
    Ok(r)
}

/// Checks the Rota-Baxter co-operator identity on every basis element.
pub fn is_rb_co_operator<F: Scalar>(cand: &RBOperatorCandidate<F>) -> Result<VerificationReport, crate::Error> {
    expect_kind(cand, RBKind::CoOperator)?;
    let mut r = VerificationReport::new("Rota-Baxter co-operator");
    push_rb_co_operator_identity(&mut r, "3a", &cand.carrier, &cand.map);
    Ok(r)
}

/// The full verdict for an arbitrary map: structure entries and the identity.
///
/// Unlike [`RBOperatorCandidate::new`] this never fails, so it can judge maps
/// that are not even coalgebra maps.
pub fn assess_rb_operator<F: Scalar>(h: &FiniteHopfAlgebra<F>, b: &LinearOperator<F>) -> VerificationReport {
    let mut r = VerificationReport::new("Rota-Baxter operator, with structure");
    r.check("cocommutative", "x₁⊗x₂ = x₂⊗x₁", &[], |_| {
        (SparseTensor::scalar(bool_scalar::<F>(h.is_cocommutative())), SparseTensor::scalar(F::one()))
    });
    match is_coalgebra_map(h, h, b) {
        Ok(sub) => r.absorb("coalgebra-map", "B is a coalgebra map", &sub),
        Err(e) => r.absorb("coalgebra-map", &e.to_string(), &failed_report()),
    }
    if b.dim() == h.dim() && b.codim() == h.dim() {
        push_rb_operator_identity(&mut r, "RB", h, b);
    }
    r
}

/// The co-operator counterpart of [`assess_rb_operator`].
pub fn assess_rb_co_operator<F: Scalar>(h: &FiniteHopfAlgebra<F>, b: &LinearOperator<F>) -> VerificationReport {
    let mut r = VerificationReport::new("Rota-Baxter co-operator, with structure");
    r.check("commutative", "xy = yx", &[], |_| {
        (SparseTensor::scalar(bool_scalar::<F>(h.is_commutative())), SparseTensor::scalar(F::one()))
    });
    match is_algebra_map(h, h, b) {
        Ok(sub) => r.absorb("algebra-map", "B is an algebra map", &sub),
        Err(e) => r.absorb("algebra-map", &e.to_string(), &failed_report()),
    }
    if b.dim() == h.dim() && b.codim() == h.dim() {
        push_rb_co_operator_identity(&mut r, "3a", h, b);
    }
    r
}

pub(crate) fn bool_scalar<F: Scalar>(b: bool) -> F {
    if b { F::one() } else { F::zero() }
}

fn failed_report() -> VerificationReport {
    let mut r = VerificationReport::new("not evaluated");
    r.check::<crate::Q, _>("shape", "dimensions agree", &[], |_| {
        (SparseTensor::scalar(crate::Q::from_i64(0)), SparseTensor::scalar(crate::Q::from_i64(1)))
    });
    r
}

/// Checks `ε(B(e_i)) = ε(e_i)` for every basis element.
pub fn check_prop_32<F: Scalar>(cand: &RBOperatorCandidate<F>) -> VerificationReport {
    let h = &cand.carrier;
    let mut r = VerificationReport::new("counit preservation");
    r.check("counit-preserving", "ε∘B = ε", &[h.labels()], |t| {
        (SparseTensor::scalar(h.counit_of(&cand.map.image(t[0]))), SparseTensor::scalar(h.counit()[t[0]].clone()))
    });
    r
}

/// Records "conditions hold" against "the lift is a Rota-Baxter (co-)operator".
pub(crate) fn push_equivalence<F: Scalar>(r: &mut VerificationReport, label: &str, conditions: bool, lifted: bool) {
    r.check(label, "conditions hold ⇔ the lift is Rota-Baxter", &[], |_| {
        (SparseTensor::scalar(bool_scalar::<F>(conditions)), SparseTensor::scalar(bool_scalar::<F>(lifted)))
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::{build_dual_group_algebra, build_group_algebra};
    use crate::scalar::Rational;

    type Q = Rational;

    fn op(h: &Arc<FiniteHopfAlgebra<Q>>, m: LinearOperator<Q>) -> RBOperatorCandidate<Q> {
        RBOperatorCandidate::new(h.clone(), m, RBKind::Operator).unwrap()
    }

    fn coop(h: &Arc<FiniteHopfAlgebra<Q>>, m: LinearOperator<Q>) -> RBOperatorCandidate<Q> {
        RBOperatorCandidate::new(h.clone(), m, RBKind::CoOperator).unwrap()
    }

    #[test]
    fn s3_counit_unit_and_antipode_are_operators() {
        let h = Arc::new(build_group_algebra::<Q>(&FiniteGroup::symmetric(3)));
        assert!(is_rb_operator(&op(&h, h.counit_unit_map())).unwrap().passed());
        let r = is_rb_operator(&op(&h, h.antipode().clone())).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks[0].cases, 36);
    }

    #[test]
    fn s3_identity_fails_on_noncommuting_pair() {
        let g = FiniteGroup::symmetric(3);
        let h = Arc::new(build_group_algebra::<Q>(&g));
        let r = is_rb_operator(&op(&h, LinearOperator::identity(6))).unwrap();
        let w = r.get("RB").unwrap().witness.clone().unwrap();
        let (x, y) = (w.inputs[0], w.inputs[1]);
        assert_ne!(g.mul(x, y), g.mul(y, x));
    }

    #[test]
    fn co_operators_on_dual_groups() {
        let c3 = Arc::new(build_dual_group_algebra::<Q>(&FiniteGroup::cyclic(3, "h")));
        assert!(is_rb_co_operator(&coop(&c3, c3.counit_unit_map())).unwrap().passed());
        let c2 = Arc::new(build_dual_group_algebra::<Q>(&FiniteGroup::cyclic(2, "g")));
        assert_eq!(*c2.antipode(), LinearOperator::identity(2));
        assert!(is_rb_co_operator(&coop(&c2, c2.antipode().clone())).unwrap().passed());
    }

    #[test]
    fn kind_and_carrier_are_enforced() {
        let c3 = Arc::new(build_group_algebra::<Q>(&FiniteGroup::cyclic(3, "h")));
        let cand = op(&c3, c3.antipode().clone());
        assert!(matches!(is_rb_co_operator(&cand), Err(crate::Error::KindMismatch(_))));
        let d = Arc::new(build_dual_group_algebra::<Q>(&FiniteGroup::symmetric(3)));
        assert!(matches!(
            RBOperatorCandidate::new(d.clone(), d.counit_unit_map(), RBKind::Operator),
            Err(crate::Error::NotCocommutative(_))
        ));
        let s3 = Arc::new(build_group_algebra::<Q>(&FiniteGroup::symmetric(3)));
        assert!(matches!(
            RBOperatorCandidate::new(s3.clone(), s3.counit_unit_map(), RBKind::CoOperator),
            Err(crate::Error::NotCommutative(_))
        ));
        let not_coalgebra = LinearOperator::zero(3, 3);
        assert!(matches!(
            RBOperatorCandidate::new(c3, not_coalgebra, RBKind::Operator),
            Err(crate::Error::Precondition { .. })
        ));
    }

    #[test]
    fn counit_preservation_for_counit_unit_map() {
        let c3 = Arc::new(build_dual_group_algebra::<Q>(&FiniteGroup::cyclic(3, "h")));
        assert!(check_prop_32(&coop(&c3, c3.counit_unit_map())).passed());
    }

    #[test]
    fn assess_matches_candidate_path() {
        let h = build_group_algebra::<Q>(&FiniteGroup::symmetric(3));
        assert!(assess_rb_operator(&h, h.antipode()).passed());
        assert!(!assess_rb_operator(&h, &LinearOperator::identity(6)).passed());
        assert!(!assess_rb_operator(&h, &LinearOperator::zero(6, 6)).passed());
    }
}
