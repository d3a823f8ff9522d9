use super::expr::Legs;
use super::{assess_rb_operator, is_rb_operator, push_equivalence, push_rb_operator_identity, RBKind, RBOperatorCandidate};
use crate::action::BimoduleAction;
use crate::hopf::{is_coalgebra_map, pair_index};
use crate::operator::LinearOperator;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::smash::{smash_product_preconditions, smash_product_unchecked};
use crate::tensor::{SparseTensor, TensorError};

fn expect_square<F: Scalar>(m: &LinearOperator<F>, n: usize, what: &str) -> Result<(), crate::Error> {
    if m.dim() != n || m.codim() != n {
        return Err(TensorError::DimensionMismatch(format!(
            "{what} is {}x{}, expected {n}x{n}",
            m.codim(),
            m.dim()
        ))
        .into());
    }
    Ok(())
}

fn expect_dims<F: Scalar>(r: &LinearOperator<F>, b: &LinearOperator<F>, act: &BimoduleAction<F>) -> Result<(), crate::Error> {
    expect_square(r, act.algebra().dim(), "R")?;
    expect_square(b, act.hopf().dim(), "B")
}

/// `B̄(a⊗h) = B(h₁)▷R(a)◁B(h₂) ⊗ B(h₃)` without any hypothesis checks.
pub(crate) fn lift_formula<F: Scalar>(r: &LinearOperator<F>, b: &LinearOperator<F>, act: &BimoduleAction<F>) -> LinearOperator<F> {
    let (h, a) = (&**act.hopf(), &**act.algebra());
    let (na, nh) = (a.dim(), h.dim());
    let mut columns = vec![Vec::new(); na * nh];
    for (ai, hi) in itertools::iproduct!(0..na, 0..nh) {
        let t = Legs::vector("h", &h.basis(hi))
            .delta("h", h, &["h1", "h2", "h3"])
            .op("h1", b)
            .op("h2", b)
            .op("h3", b)
            .with("a", &r.image(ai))
            .act_left("h1", "a", act, "a")
            .act_right("a", "h2", act, "a")
            .finish(&["a", "h3"]);
        columns[pair_index(ai, hi, nh)] = t.flatten();
    }
    LinearOperator::from_columns(na * nh, &columns).expect("column lengths")
}

/// The lift `B̄` on `A⋊H`, on the row-major `A⊗H` basis.
///
/// Requires the smash product hypotheses and `B` a Rota-Baxter operator on `H`.
pub fn lift_rb_operator<F: Scalar>(
    r: &LinearOperator<F>,
    b: &RBOperatorCandidate<F>,
    act: &BimoduleAction<F>,
) -> Result<LinearOperator<F>, crate::Error> {
    if b.kind() != RBKind::Operator {
        return Err(crate::Error::KindMismatch("the lift needs B of operator kind".into()));
    }
    expect_dims(r, b.map(), act)?;
    if **b.carrier() != **act.hopf() {
        return Err(crate::Error::KindMismatch("B lives on a different Hopf algebra than the action".into()));
    }
    crate::require(smash_product_preconditions(act), "L-R smash product preconditions")?;
    crate::require(is_rb_operator(b)?, "B must be a Rota-Baxter operator on H")?;
    Ok(lift_formula(r, b.map(), act))
}

/// `B̄(a⊗h) = S_H(h₁)▷R(a)◁S_H(h₂) ⊗ S_H(h₃)`.
pub fn lift_rb_operator_cor24<F: Scalar>(r: &LinearOperator<F>, act: &BimoduleAction<F>) -> Result<LinearOperator<F>, crate::Error> {
    let s = act.hopf().antipode().clone();
    expect_dims(r, &s, act)?;
    crate::require(smash_product_preconditions(act), "L-R smash product preconditions")?;
    Ok(lift_formula(r, &s, act))
}

/// `R[((a₁R(a₂))◁h₁) b (h₂▷S_A(R(a₃)))]`, the left side shared by two condition sets.
fn twisted_rb_lhs<F: Scalar>(r: &LinearOperator<F>, act: &BimoduleAction<F>, a: usize, b: usize, h: usize) -> SparseTensor<F> {
    let (hh, aa) = (&**act.hopf(), &**act.algebra());
    Legs::vector("a", &aa.basis(a))
        .delta("a", aa, &["a1", "a2", "a3"])
        .op("a2", r)
        .mul(&["a1", "a2"], aa, "p")
        .with("h", &hh.basis(h))
        .delta("h", hh, &["h1", "h2"])
        .act_right("p", "h1", act, "p")
        .with("b", &aa.basis(b))
        .ops("a3", &[r, aa.antipode()])
        .act_left("h2", "a3", act, "q")
        .mul(&["p", "b", "q"], aa, "z")
        .op("z", r)
        .finish(&["z"])
}

/// The hypotheses of the lifting theorem: `R` a coalgebra map, `R` Rota-Baxter on `A`,
/// "2a" over all `(a, b, h)` and "2b" over all `(b, g)`.
pub fn check_thm22_conditions<F: Scalar>(
    r: &LinearOperator<F>,
    b: &LinearOperator<F>,
    act: &BimoduleAction<F>,
) -> Result<VerificationReport, crate::Error> {
    expect_dims(r, b, act)?;
    let (h, a) = (&**act.hopf(), &**act.algebra());
    let v = |x: Vec<F>| SparseTensor::vector(&x);
    let mut rep = VerificationReport::new("lifting conditions for B̄");
    rep.absorb("R-coalgebra-map", "R is a coalgebra map", &is_coalgebra_map(a, a, r)?);
    push_rb_operator_identity(&mut rep, "R-RB", a, r);
    let sb = h.antipode().compose(b)?;
    rep.check(
        "2a",
        "R[((a₁R(a₂))◁h₁) b (h₂▷S_A(R(a₃)))] = (S_H(B(h))▷R(a))R(b)",
        &[a.labels(), a.labels(), h.labels()],
        |t| {
            let rhs = a.mul(&act.act_left(&sb.image(t[2]), &r.image(t[0])), &r.image(t[1]));
            (twisted_rb_lhs(r, act, t[0], t[1], t[2]), v(rhs))
        },
    );
    rep.check("2b", "R(g₁B(g₂)▷b◁S_H(B(g₃))) = R(b)◁S_H(B(g))", &[a.labels(), h.labels()], |t| {
        let lhs = Legs::vector("g", &h.basis(t[1]))
            .delta("g", h, &["g1", "g2", "g3"])
            .op("g2", b)
            .mul(&["g1", "g2"], h, "k")
            .ops("g3", &[b, h.antipode()])
            .with("b", &a.basis(t[0]))
            .act_left("k", "b", act, "b")
            .act_right("b", "g3", act, "b")
            .op("b", r)
            .finish(&["b"]);
        (lhs, v(act.act_right(&r.image(t[0]), &sb.image(t[1]))))
    });
    Ok(rep)
}

/// Intermediate identities from the proof of the lifting theorem, "2c" and "2d".
/// Diagnostic only: they are not part of the equivalence.
pub fn check_internal_2c2d<F: Scalar>(
    r: &LinearOperator<F>,
    b: &LinearOperator<F>,
    act: &BimoduleAction<F>,
) -> Result<VerificationReport, crate::Error> {
    expect_dims(r, b, act)?;
    let (h, a) = (&**act.hopf(), &**act.algebra());
    let sb = h.antipode().compose(b)?;
    let v = |x: Vec<F>| SparseTensor::vector(&x);
    let mut rep = VerificationReport::new("internal identities for B̄");
    rep.check(
        "2c",
        "R[(a₁◁B(g₁)h₁S(B(g₂)))(g₃B(g₄)▷[(R(a₂)◁B(g₅)h₂S(B(g₆)))(b◁S(B(g₇)))(h₃▷S_A(R(a₃)))])] \
         = (S(B(h))▷R(a))(R(b)◁S(B(g)))",
        &[a.labels(), a.labels(), h.labels(), h.labels()],
        |t| {
            let lhs = Legs::vector("g", &h.basis(t[2]))
                .delta("g", h, &["g1", "g2", "g3", "g4", "g5", "g6", "g7"])
                .op("g1", b)
                .op("g2", &sb)
                .op("g4", b)
                .op("g5", b)
                .op("g6", &sb)
                .op("g7", &sb)
                .with("h", &h.basis(t[3]))
                .delta("h", h, &["h1", "h2", "h3"])
                .with("a", &a.basis(t[0]))
                .delta("a", a, &["a1", "a2", "a3"])
                .with("b", &a.basis(t[1]))
                .mul(&["g1", "h1", "g2"], h, "k1")
                .act_right("a1", "k1", act, "x")
                .mul(&["g3", "g4"], h, "k2")
                .mul(&["g5", "h2", "g6"], h, "k3")
                .op("a2", r)
                .act_right("a2", "k3", act, "y1")
                .act_right("b", "g7", act, "y2")
                .ops("a3", &[r, a.antipode()])
                .act_left("h3", "a3", act, "y3")
                .mul(&["y1", "y2", "y3"], a, "inner")
                .act_left("k2", "inner", act, "z")
                .mul(&["x", "z"], a, "w")
                .op("w", r)
                .finish(&["w"]);
            let rhs = a.mul(
                &act.act_left(&sb.image(t[3]), &r.image(t[0])),
                &act.act_right(&r.image(t[1]), &sb.image(t[2])),
            );
            (lhs, v(rhs))
        },
    );
    rep.check("2d", "R(a)◁B(g) = R(S_H(g₁B(g₂))▷a◁B(g₃))", &[a.labels(), h.labels()], |t| {
        let rhs = Legs::vector("g", &h.basis(t[1]))
            .delta("g", h, &["g1", "g2", "g3"])
            .op("g2", b)
            .mul(&["g1", "g2"], h, "k")
            .op("k", h.antipode())
            .op("g3", b)
            .with("a", &a.basis(t[0]))
            .act_left("k", "a", act, "a")
            .act_right("a", "g3", act, "a")
            .op("a", r)
            .finish(&["a"]);
        (v(act.act_right(&r.image(t[0]), &b.image(t[1]))), rhs)
    });
    Ok(rep)
}

/// The sufficient conditions for the `B = S_H` lift, "COR24-A" and "COR24-B".
pub fn check_cor24_conditions<F: Scalar>(r: &LinearOperator<F>, act: &BimoduleAction<F>) -> Result<VerificationReport, crate::Error> {
    let (h, a) = (&**act.hopf(), &**act.algebra());
    expect_square(r, a.dim(), "R")?;
    let v = |x: Vec<F>| SparseTensor::vector(&x);
    let mut rep = VerificationReport::new("conditions for the antipode lift");
    rep.check(
        "COR24-A",
        "R[((a₁R(a₂))◁h₁) b (h₂▷S_A(R(a₃)))] = (h▷R(a))R(b)",
        &[a.labels(), a.labels(), h.labels()],
        |t| {
            let rhs = a.mul(&act.act_left(&h.basis(t[2]), &r.image(t[0])), &r.image(t[1]));
            (twisted_rb_lhs(r, act, t[0], t[1], t[2]), v(rhs))
        },
    );
    rep.check("COR24-B", "R(a◁h) = R(a)◁h", &[a.labels(), h.labels()], |t| {
        let lhs = r.apply_unchecked(&act.act_right(&a.basis(t[0]), &h.basis(t[1])));
        (v(lhs), v(act.act_right(&r.image(t[0]), &h.basis(t[1]))))
    });
    Ok(rep)
}

/// The conditions for the `R = S_A` lift, "COR25-A" and "COR25-B", plus "COR25-iff"
/// comparing them with the Rota-Baxter status of `B̄(a⊗h) = B(h₁)▷S_A(a)◁B(h₂) ⊗ B(h₃)`.
pub fn check_cor25_conditions<F: Scalar>(b: &LinearOperator<F>, act: &BimoduleAction<F>) -> Result<VerificationReport, crate::Error> {
    let (h, a) = (&**act.hopf(), &**act.algebra());
    expect_square(b, h.dim(), "B")?;
    let v = |x: Vec<F>| SparseTensor::vector(&x);
    let sb = h.antipode().compose(b)?;
    let mut rep = VerificationReport::new("conditions for the antipode-of-A lift");
    rep.check("COR25-A", "h▷S_A(a) = S_H(B(h))▷S_A(a)", &[h.labels(), a.labels()], |t| {
        let sa = a.antipode().image(t[1]);
        (v(act.act_left(&h.basis(t[0]), &sa)), v(act.act_left(&sb.image(t[0]), &sa)))
    });
    rep.check("COR25-B", "h₁B(h₂)▷a = ε(h)a", &[h.labels(), a.labels()], |t| {
        let lhs = Legs::vector("h", &h.basis(t[0]))
            .delta("h", h, &["h1", "h2"])
            .op("h2", b)
            .mul(&["h1", "h2"], h, "k")
            .with("a", &a.basis(t[1]))
            .act_left("k", "a", act, "a")
            .finish(&["a"]);
        (lhs, v(crate::hopf::scaled(&a.basis(t[1]), &h.counit()[t[0]])))
    });
    let conditions = rep.passed();
    let smash = smash_product_unchecked(act);
    let lifted = assess_rb_operator(&smash, &lift_formula(a.antipode(), b, act)).passed();
    push_equivalence::<F>(&mut rep, "COR25-iff", conditions, lifted);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fixtures;
    use crate::scalar::Rational;

    type Q = Rational;

    fn swap_r() -> LinearOperator<Q> {
        LinearOperator::from_basis_map(3, &[0, 2, 1]).unwrap()
    }

    fn antipode_candidate(act: &BimoduleAction<Q>) -> RBOperatorCandidate<Q> {
        let h = act.hopf().clone();
        let s = h.antipode().clone();
        RBOperatorCandidate::new(h, s, RBKind::Operator).unwrap()
    }

    #[test]
    fn counit_unit_lift_sends_g_column_to_one_g() {
        let act = fixtures::example_action::<Q>();
        let a = act.algebra().clone();
        let lift = lift_rb_operator(&a.counit_unit_map(), &antipode_candidate(&act), &act).unwrap();
        for i in 1..3 {
            assert_eq!(lift.image(pair_index(i, 1, 2)), crate::hopf::kron_vec(&a.basis(0), &act.hopf().basis(1)));
        }
    }

    #[test]
    fn swap_lift_fixes_g_column_but_not_unit_column() {
        let act = fixtures::example_action::<Q>();
        let lift = lift_rb_operator(&swap_r(), &antipode_candidate(&act), &act).unwrap();
        for i in 0..3 {
            assert_eq!(lift.image(pair_index(i, 1, 2)), LinearOperator::<Q>::identity(6).image(pair_index(i, 1, 2)));
        }
        assert_ne!(lift, LinearOperator::identity(6));
        assert_eq!(lift.image(pair_index(1, 0, 2)), LinearOperator::<Q>::identity(6).image(pair_index(2, 0, 2)));
        assert_eq!(lift, lift_rb_operator_cor24(&swap_r(), &act).unwrap());
    }

    #[test]
    fn swap_satisfies_all_conditions() {
        let act = fixtures::example_action::<Q>();
        let s = act.hopf().antipode().clone();
        assert!(check_thm22_conditions(&swap_r(), &s, &act).unwrap().passed());
        assert!(check_internal_2c2d(&swap_r(), &s, &act).unwrap().passed());
        assert!(check_cor24_conditions(&swap_r(), &act).unwrap().passed());
    }

    #[test]
    fn trivial_everything_passes() {
        let act = fixtures::example_action::<Q>();
        let trivial = BimoduleAction::trivial(act.hopf().clone(), act.algebra().clone());
        let r = act.algebra().counit_unit_map();
        let b = act.hopf().counit_unit_map();
        assert!(check_thm22_conditions(&r, &b, &trivial).unwrap().passed());
        assert!(check_internal_2c2d(&r, &b, &trivial).unwrap().passed());
        assert!(check_cor24_conditions(&r, &trivial).unwrap().passed());
    }

    #[test]
    fn trivial_lift_is_counit_unit() {
        let act = fixtures::example_action::<Q>();
        let h = act.hopf().clone();
        let b = RBOperatorCandidate::new(h.clone(), h.counit_unit_map(), RBKind::Operator).unwrap();
        let lift = lift_rb_operator(&act.algebra().counit_unit_map(), &b, &act).unwrap();
        let smash = smash_product_unchecked(&act);
        assert_eq!(lift, smash.counit_unit_map());
    }

    #[test]
    fn antipode_example_passes_cor25() {
        let act = fixtures::example_action::<Q>();
        let rep = check_cor25_conditions(act.hopf().antipode(), &act).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn counit_unit_fails_cor25_under_inversion() {
        let act = fixtures::inversion_action::<Q>();
        let rep = check_cor25_conditions(&act.hopf().counit_unit_map(), &act).unwrap();
        let c = rep.get("COR25-B").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_ref().unwrap().input_labels, ["g", "h"]);
        assert!(rep.get("COR25-iff").unwrap().passed);
    }

    #[test]
    fn wrong_kind_or_carrier_rejected() {
        let act = fixtures::example_action::<Q>();
        let other = Arc::new(crate::hopf::build_group_algebra::<Q>(&crate::group::FiniteGroup::cyclic(3, "h")));
        let b = RBOperatorCandidate::new(other.clone(), other.antipode().clone(), RBKind::Operator).unwrap();
        assert!(lift_rb_operator(&swap_r(), &b, &act).is_err());
    }
}
