//! Recorded outcomes of the lifting harnesses and the worked C3-by-C2 examples.

use std::sync::Arc;

use hopfrb_core::search::{iff_harness_thm22, iff_harness_thm33, HarnessSummary};
use hopfrb_core::worked;
use hopfrb_core::{fixtures, BimoduleAction, FiniteHopfAlgebra, LinearOperator, RBKind, RBOperatorCandidate, Q};
use hopfrb_core::hopf::build_group_algebra;

fn with_b(h: &Arc<FiniteHopfAlgebra<Q>>, kind: RBKind) -> RBOperatorCandidate<Q> {
    RBOperatorCandidate::new(h.clone(), h.antipode().clone(), kind).unwrap()
}

fn holding(s: &HarnessSummary) -> Vec<Vec<usize>> {
    s.rows.iter().filter(|r| r.conditions).map(|r| r.images.clone()).collect()
}

#[test]
fn passing_candidates_fix_the_unit() {
    let act = fixtures::example_action::<Q>();
    let s = iff_harness_thm22(&act, &with_b(act.hopf(), RBKind::Operator)).unwrap();
    assert!(s.equivalent);
    assert_eq!(holding(&s), vec![vec![0, 0, 0], vec![0, 2, 1]]);
    assert!(s.rows.iter().filter(|r| r.images[0] != 0).all(|r| !r.conditions && !r.lifted));
}

#[test]
fn coproduct_harness_mirrors_the_product_side() {
    let co = fixtures::example_coaction::<Q>();
    let s = iff_harness_thm33(&co, &with_b(co.hopf(), RBKind::CoOperator)).unwrap();
    assert!(s.equivalent);
    assert_eq!(holding(&s), vec![vec![0, 0, 0], vec![0, 2, 1]]);
}

#[test]
fn trivial_actions_accept_exactly_the_group_maps() {
    let (kc3, kc2) = (Arc::new(build_group_algebra::<Q>(&fixtures::c3())), Arc::new(build_group_algebra::<Q>(&fixtures::c2())));
    let act = BimoduleAction::trivial(kc2.clone(), kc3);
    let s = iff_harness_thm22(&act, &with_b(&kc2, RBKind::Operator)).unwrap();
    assert_eq!(holding(&s), vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]]);
}

#[test]
fn worked_records_are_stable() {
    let reports = worked::all_reports::<Q>();
    let summary: Vec<(bool, bool)> = reports.iter().map(|r| (r.agrees, r.lift_is_rota_baxter)).collect();
    assert_eq!(summary, vec![(true, true), (false, true), (false, false), (false, false), (false, true), (false, true)]);
    let swap = &reports[4];
    let d = worked::first_disagreement(swap).unwrap();
    assert_eq!((d.input.as_str(), d.computed.as_str()), ("p_h⊗p_1", "p_h2⊗p_1"));
    // On k^{C2} the antipode is the identity, so both readings of B coincide.
    assert_eq!(reports[2].comparisons, reports[3].comparisons);
    assert_eq!(reports[4].comparisons, reports[5].comparisons);
}

#[test]
fn antipode_of_dual_c2_is_the_identity() {
    let co = fixtures::example_coaction::<Q>();
    assert_eq!(co.hopf().antipode(), &LinearOperator::identity(2));
}
