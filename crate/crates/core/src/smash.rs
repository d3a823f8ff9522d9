//! The L-R smash product `A⋊H` and the L-R smash coproduct `C⋉H`.
//!
//! Both live on the tensor space with the row-major pairing
//! `(x, h) ↦ x·dim(H) + h`, the first factor being major.

use crate::action::{
    verify_antipode_bicolinear, verify_antipode_bilinear, verify_bicomodule_bialgebra, verify_bimodule_bialgebra,
    BicomoduleCoaction, BimoduleAction,
};
use crate::hopf::{add_scaled, pair_index, verify_hopf, FiniteHopfAlgebra};
use crate::operator::LinearOperator;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tensor::SparseTensor;

/// Checks `h₁▷a⊗h₂ = h₂▷a⊗h₁` ("1a") and `a◁h₁⊗h₂ = a◁h₂⊗h₁` ("1b") on all basis pairs.
pub fn check_conditions_1ab<F: Scalar>(act: &BimoduleAction<F>) -> VerificationReport {
    let (h, a) = (&**act.hopf(), &**act.algebra());
    let mut r = VerificationReport::new("smash product compatibility");
    let both = |t: &[usize], hi: usize, ai: usize, left: bool| {
        let mut l = SparseTensor::zeros(vec![a.dim(), h.dim()]);
        let mut rr = SparseTensor::zeros(vec![a.dim(), h.dim()]);
        for (h1, h2, c) in h.basis_coproduct(t[hi]) {
            let (x1, x2) = if left {
                (act.act_left(&h.basis(*h1), &a.basis(t[ai])), act.act_left(&h.basis(*h2), &a.basis(t[ai])))
            } else {
                (act.act_right(&a.basis(t[ai]), &h.basis(*h1)), act.act_right(&a.basis(t[ai]), &h.basis(*h2)))
            };
            l.add_outer(&[&x1, &h.basis(*h2)], c);
            rr.add_outer(&[&x2, &h.basis(*h1)], c);
        }
        (l, rr)
    };
    r.check("1a", "h₁▷a ⊗ h₂ = h₂▷a ⊗ h₁", &[h.labels(), a.labels()], |t| both(t, 0, 1, true));
    r.check("1b", "a◁h₁ ⊗ h₂ = a◁h₂ ⊗ h₁", &[a.labels(), h.labels()], |t| both(t, 1, 0, false));
    r
}

/// Checks `c₍₋₁₎h⊗c₍₀₎ = hc₍₋₁₎⊗c₍₀₎` ("1c") and `c₍₀₎'⊗c₍₁₎h = c₍₀₎'⊗hc₍₁₎` ("1d") on all basis pairs.
pub fn check_conditions_1cd<F: Scalar>(co: &BicomoduleCoaction<F>) -> VerificationReport {
    let (h, c) = (&**co.hopf(), &**co.coalgebra());
    let nh = h.dim();
    let prod = |i: usize, j: usize| h.basis_product(i, j).to_vec();
    let mut r = VerificationReport::new("smash coproduct compatibility");
    r.check("1c", "c₍₋₁₎h ⊗ c₍₀₎ = hc₍₋₁₎ ⊗ c₍₀₎", &[c.labels(), h.labels()], |t| {
        let rho = co.coact_left(&c.basis(t[0]));
        (
            rho.map_leg(0, nh, |i| prod(i, t[1])),
            rho.map_leg(0, nh, |i| prod(t[1], i)),
        )
    });
    r.check("1d", "c₍₀₎' ⊗ c₍₁₎h = c₍₀₎' ⊗ hc₍₁₎", &[c.labels(), h.labels()], |t| {
        let rho = co.coact_right(&c.basis(t[0]));
        (
            rho.map_leg(1, nh, |i| prod(i, t[1])),
            rho.map_leg(1, nh, |i| prod(t[1], i)),
        )
    });
    r
}

fn cocommutativity_check<F: Scalar>(r: &mut VerificationReport, label: &str, x: &FiniteHopfAlgebra<F>) {
    r.check(label, "x₁⊗x₂ = x₂⊗x₁", &[x.labels()], |t| {
        let d = x.comult_of(&x.basis(t[0]));
        let swapped = d.permute(&[1, 0]).expect("arity 2");
        (d, swapped)
    });
}

fn commutativity_check<F: Scalar>(r: &mut VerificationReport, label: &str, x: &FiniteHopfAlgebra<F>) {
    r.check(label, "xy = yx", &[x.labels(), x.labels()], |t| {
        let (a, b) = (x.basis(t[0]), x.basis(t[1]));
        (SparseTensor::vector(&x.mul(&a, &b)), SparseTensor::vector(&x.mul(&b, &a)))
    });
}

/// Every hypothesis of the smash product construction, one entry each.
pub fn smash_product_preconditions<F: Scalar>(act: &BimoduleAction<F>) -> VerificationReport {
    let (h, a) = (&**act.hopf(), &**act.algebra());
    let mut r = VerificationReport::new("smash product preconditions");
    r.absorb("A-hopf", "A is a Hopf algebra", &verify_hopf(a));
    r.absorb("H-hopf", "H is a Hopf algebra", &verify_hopf(h));
    r.absorb("bimodule-bialgebra", "A is an H-bimodule bialgebra", &verify_bimodule_bialgebra(act));
    r.absorb("antipode-bilinear", "S_A is H-bilinear", &verify_antipode_bilinear(act));
    r.extend_prefixed("", check_conditions_1ab(act));
    cocommutativity_check(&mut r, "A-cocommutative", a);
    r
}

/// Every hypothesis of the smash coproduct construction, one entry each.
pub fn smash_coproduct_preconditions<F: Scalar>(co: &BicomoduleCoaction<F>) -> VerificationReport {
    let (h, c) = (&**co.hopf(), &**co.coalgebra());
    let mut r = VerificationReport::new("smash coproduct preconditions");
    r.absorb("C-hopf", "C is a Hopf algebra", &verify_hopf(c));
    r.absorb("H-hopf", "H is a Hopf algebra", &verify_hopf(h));
    r.absorb("bicomodule-bialgebra", "C is an H-bicomodule bialgebra", &verify_bicomodule_bialgebra(co));
    r.absorb("antipode-bicolinear", "S_C is H-bicolinear", &verify_antipode_bicolinear(co));
    r.extend_prefixed("", check_conditions_1cd(co));
    commutativity_check(&mut r, "C-commutative", c);
    r
}

/// `A⋊H` together with the action it was built from.
#[derive(Debug, Clone)]
pub struct SmashProductAlgebra<F> {
    pub algebra: FiniteHopfAlgebra<F>,
    pub action: BimoduleAction<F>,
}

/// `C⋉H` together with the coaction it was built from.
#[derive(Debug, Clone)]
pub struct SmashCoproductAlgebra<F> {
    pub algebra: FiniteHopfAlgebra<F>,
    pub coaction: BicomoduleCoaction<F>,
}

/// Builds `A⋊H` with `(a⊗h)(b⊗g) = (a◁g₂)(h₁▷b) ⊗ h₂g₁`, the tensor-product coalgebra,
/// and `S(a⊗h) = S_H(h₃)▷S_A(a)◁S_H(h₂) ⊗ S_H(h₁)`.
///
/// Refuses to build unless [`smash_product_preconditions`] passes.
pub fn lr_smash_product<F: Scalar>(act: &BimoduleAction<F>) -> Result<SmashProductAlgebra<F>, crate::Error> {
    crate::require(smash_product_preconditions(act), "L-R smash product preconditions")?;
    Ok(SmashProductAlgebra { algebra: smash_product_unchecked(act), action: act.clone() })
}

pub(crate) fn smash_product_unchecked<F: Scalar>(act: &BimoduleAction<F>) -> FiniteHopfAlgebra<F> {
    let (h, a) = (&**act.hopf(), &**act.algebra());
    let (na, nh) = (a.dim(), h.dim());
    let n = na * nh;
    let idx = |x: usize, y: usize| pair_index(x, y, nh);

    let mut mult = SparseTensor::zeros(vec![n, n, n]);
    for (ai, hi, bi, gi) in itertools::iproduct!(0..na, 0..nh, 0..na, 0..nh) {
        for (g1, g2, c) in h.basis_coproduct(gi) {
            let left = act.act_right(&a.basis(ai), &h.basis(*g2));
            for (h1, h2, d) in h.basis_coproduct(hi) {
                let x = a.mul(&left, &act.act_left(&h.basis(*h1), &a.basis(bi)));
                let y = h.basis_product(*h2, *g1);
                let coeff = c.clone() * d.clone();
                for (p, xp) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    for (q, yq) in y {
                        mult.add_at(vec![idx(ai, hi), idx(bi, gi), idx(p, *q)], coeff.clone() * xp.clone() * yq.clone());
                    }
                }
            }
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

    let mut columns = Vec::with_capacity(n);
    for (ai, hi) in itertools::iproduct!(0..na, 0..nh) {
        let sa = a.antipode().image(ai);
        let mut col = vec![F::zero(); n];
        for (k, c) in h.iterated_comult(&h.basis(hi), 3).iter() {
            let x = act.act_right(&act.act_left(&h.antipode().image(k[2]), &sa), &h.antipode().image(k[1]));
            let y = h.antipode().image(k[0]);
            add_scaled(&mut col, &crate::hopf::kron_vec(&x, &y), c);
        }
        columns.push(col);
    }
    let antipode = LinearOperator::from_columns(n, &columns).expect("column lengths");

    let labels = itertools::iproduct!(a.labels(), h.labels())
        .map(|(x, y)| format!("{x}⊗{y}"))
        .collect();
    FiniteHopfAlgebra::from_parts(
        labels,
        mult,
        crate::hopf::kron_vec(a.unit(), h.unit()),
        comult,
        crate::hopf::kron_vec(a.counit(), h.counit()),
        antipode,
    )
    .expect("smash product shapes")
}

/// Builds `C⋉H` with componentwise multiplication,
/// `Δ(c⊗h) = (c₁₍₀₎'⊗c₂₍₋₁₎h₁) ⊗ (c₂₍₀₎⊗h₂c₁₍₁₎)` and
/// `S(c⊗h) = S_C(c₍₀₎₍₀₎') ⊗ S_H(c₍₋₁₎c₍₀₎₍₁₎h)`.
///
/// Refuses to build unless [`smash_coproduct_preconditions`] passes.
pub fn lr_smash_coproduct<F: Scalar>(co: &BicomoduleCoaction<F>) -> Result<SmashCoproductAlgebra<F>, crate::Error> {
    crate::require(smash_coproduct_preconditions(co), "L-R smash coproduct preconditions")?;
    Ok(SmashCoproductAlgebra { algebra: smash_coproduct_unchecked(co), coaction: co.clone() })
}

pub(crate) fn smash_coproduct_unchecked<F: Scalar>(co: &BicomoduleCoaction<F>) -> FiniteHopfAlgebra<F> {
    let (h, c) = (&**co.hopf(), &**co.coalgebra());
    let (nc, nh) = (c.dim(), h.dim());
    let n = nc * nh;
    let idx = |x: usize, y: usize| pair_index(x, y, nh);

    let mut mult = SparseTensor::zeros(vec![n, n, n]);
    for (kc, xc) in c.mult_tensor().iter() {
        for (kh, xh) in h.mult_tensor().iter() {
            mult.add_at(
                vec![idx(kc[0], kh[0]), idx(kc[1], kh[1]), idx(kc[2], kh[2])],
                xc.clone() * xh.clone(),
            );
        }
    }

    let mut comult = SparseTensor::zeros(vec![n, n, n]);
    for (ci, hi) in itertools::iproduct!(0..nc, 0..nh) {
        for (c1, c2, x) in c.basis_coproduct(ci) {
            for (c1r, hr, y) in co.right_basis(*c1) {
                for (hl, c2l, z) in co.left_basis(*c2) {
                    for (h1, h2, w) in h.basis_coproduct(hi) {
                        let coeff = x.clone() * y.clone() * z.clone() * w.clone();
                        for (p, u) in h.basis_product(*hl, *h1) {
                            for (q, v) in h.basis_product(*h2, *hr) {
                                comult.add_at(
                                    vec![idx(ci, hi), idx(*c1r, *p), idx(*c2l, *q)],
                                    coeff.clone() * u.clone() * v.clone(),
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    let mut columns = Vec::with_capacity(n);
    for (ci, hi) in itertools::iproduct!(0..nc, 0..nh) {
        let mut col = vec![F::zero(); n];
        for (hl, c0, x) in co.left_basis(ci) {
            for (c00, hr, y) in co.right_basis(*c0) {
                let hh = h.mul_all(&[&h.basis(*hl), &h.basis(*hr), &h.basis(hi)]);
                let v = crate::hopf::kron_vec(&c.antipode().image(*c00), &h.antipode_of(&hh));
                add_scaled(&mut col, &v, &(x.clone() * y.clone()));
            }
        }
        columns.push(col);
    }
    let antipode = LinearOperator::from_columns(n, &columns).expect("column lengths");

    let labels = itertools::iproduct!(c.labels(), h.labels())
        .map(|(x, y)| format!("{x}⊗{y}"))
        .collect();
    FiniteHopfAlgebra::from_parts(
        labels,
        mult,
        crate::hopf::kron_vec(c.unit(), h.unit()),
        comult,
        crate::hopf::kron_vec(c.counit(), h.counit()),
        antipode,
    )
    .expect("smash coproduct shapes")
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fixtures;
    use crate::group::FiniteGroup;
    use crate::hopf::{build_dual_group_algebra, build_group_algebra, grouplike_group_structure, tensor_product};
    use crate::scalar::Rational;

    type Q = Rational;

    #[test]
    fn example_smash_product_is_s3() {
        let sp = lr_smash_product(&fixtures::example_action::<Q>()).unwrap();
        let x = &sp.algebra;
        assert_eq!(x.dim(), 6);
        assert!(verify_hopf(x).passed());
        let g = grouplike_group_structure(x).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn example_product_of_basis_elements() {
        let sp = lr_smash_product(&fixtures::example_action::<Q>()).unwrap();
        let x = &sp.algebra;
        // (e_h⊗e_g)(e_h⊗1) = (h◁1)(g▷h)⊗g = e_{h²}⊗e_g
        let eh_g = x.basis(pair_index(1, 1, 2));
        let eh_1 = x.basis(pair_index(1, 0, 2));
        assert_eq!(x.mul(&eh_g, &eh_1), x.basis(pair_index(2, 1, 2)));
    }

    #[test]
    fn trivial_action_gives_tensor_product() {
        let h = Arc::new(build_group_algebra::<Q>(&FiniteGroup::cyclic(2, "g")));
        let a = Arc::new(build_group_algebra::<Q>(&FiniteGroup::cyclic(3, "h")));
        let sp = lr_smash_product(&BimoduleAction::trivial(h.clone(), a.clone())).unwrap();
        assert_eq!(sp.algebra, tensor_product(&a, &h));
    }

    #[test]
    fn example_smash_coproduct_is_commutative_hopf() {
        let sc = lr_smash_coproduct(&fixtures::example_coaction::<Q>()).unwrap();
        assert_eq!(sc.algebra.dim(), 6);
        assert!(verify_hopf(&sc.algebra).passed());
        assert!(sc.algebra.is_commutative());
    }

    #[test]
    fn trivial_coaction_gives_tensor_product() {
        let h = Arc::new(build_dual_group_algebra::<Q>(&FiniteGroup::cyclic(2, "g")));
        let c = Arc::new(build_dual_group_algebra::<Q>(&FiniteGroup::cyclic(3, "h")));
        let sc = lr_smash_coproduct(&BicomoduleCoaction::trivial(h.clone(), c.clone())).unwrap();
        assert_eq!(sc.algebra, tensor_product(&c, &h));
    }

    #[test]
    fn noncocommutative_acting_algebra_breaks_compatibility() {
        let act = fixtures::regular_dual_s3_action::<Q>();
        let r = check_conditions_1ab(&act);
        assert!(!r.get("1a").unwrap().passed);
        assert!(r.get("1b").unwrap().passed);
    }

    #[test]
    fn noncommutative_coacting_algebra_breaks_compatibility() {
        let co = fixtures::comultiplication_s3_coaction::<Q>();
        let r = check_conditions_1cd(&co);
        assert!(!r.get("1c").unwrap().passed);
        assert!(r.get("1d").unwrap().passed);
    }

    #[test]
    fn failed_preconditions_carry_a_report() {
        let act = fixtures::regular_dual_s3_action::<Q>();
        let err = lr_smash_product(&act).unwrap_err();
        assert!(!err.report().unwrap().passed());
    }

    #[test]
    fn dual_of_smash_product_is_smash_coproduct() {
        let act = fixtures::example_action::<Q>();
        let sp = lr_smash_product(&act).unwrap();
        let co = crate::action::dualize_action(&act).unwrap();
        let sc = lr_smash_coproduct(&co).unwrap();
        assert_eq!(crate::hopf::linear_dual(&sp.algebra).unwrap(), sc.algebra);
    }
}
