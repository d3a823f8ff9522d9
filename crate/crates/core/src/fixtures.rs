//! Small named examples built from group data.
//!
//! Group indices follow [`FiniteGroup::cyclic`]: in `C2` `0 = 1`, `1 = g`;
//! in `C3` `0 = 1`, `1 = h`, `2 = h²`.

use std::sync::Arc;

use crate::action::{BicomoduleCoaction, BimoduleAction};
use crate::group::FiniteGroup;
use crate::hopf::{build_dual_group_algebra, build_group_algebra, FiniteHopfAlgebra};
use crate::scalar::Scalar;
use crate::tensor::SparseTensor;

pub fn c2() -> FiniteGroup {
    FiniteGroup::cyclic(2, "g")
}

pub fn c3() -> FiniteGroup {
    FiniteGroup::cyclic(3, "h")
}

/// `k[G]` acting on `k[K]` through permutations of `K`:
/// `e_g ▷ e_a = e_{left(g, a)}` and `e_a ◁ e_g = e_{right(a, g)}`.
pub fn permutation_action<F: Scalar>(
    g: &FiniteGroup,
    k: &FiniteGroup,
    left: impl Fn(usize, usize) -> usize,
    right: impl Fn(usize, usize) -> usize,
) -> BimoduleAction<F> {
    let (ng, nk) = (g.order(), k.order());
    let l = SparseTensor::from_entries(
        vec![ng, nk, nk],
        itertools::iproduct!(0..ng, 0..nk).map(|(x, a)| (vec![x, a, left(x, a)], F::one())),
    )
    .expect("left action in range");
    let r = SparseTensor::from_entries(
        vec![nk, ng, nk],
        itertools::iproduct!(0..nk, 0..ng).map(|(a, x)| (vec![a, x, right(a, x)], F::one())),
    )
    .expect("right action in range");
    BimoduleAction::new(Arc::new(build_group_algebra(g)), Arc::new(build_group_algebra(k)), l, r)
        .expect("action shapes")
}

/// The coaction of `k^G` on `k^K` dual to [`permutation_action`]:
/// `ρˡ(p_c) = Σ_{left(g,a)=c} p_g ⊗ p_a` and `ρʳ(p_c) = Σ_{right(a,g)=c} p_a ⊗ p_g`.
pub fn permutation_coaction<F: Scalar>(
    g: &FiniteGroup,
    k: &FiniteGroup,
    left: impl Fn(usize, usize) -> usize,
    right: impl Fn(usize, usize) -> usize,
) -> BicomoduleCoaction<F> {
    let (ng, nk) = (g.order(), k.order());
    let l = SparseTensor::from_entries(
        vec![nk, ng, nk],
        itertools::iproduct!(0..ng, 0..nk).map(|(x, a)| (vec![left(x, a), x, a], F::one())),
    )
    .expect("left coaction in range");
    let r = SparseTensor::from_entries(
        vec![nk, nk, ng],
        itertools::iproduct!(0..nk, 0..ng).map(|(a, x)| (vec![right(a, x), a, x], F::one())),
    )
    .expect("right coaction in range");
    BicomoduleCoaction::new(Arc::new(build_dual_group_algebra(g)), Arc::new(build_dual_group_algebra(k)), l, r)
        .expect("coaction shapes")
}

fn invert_if_nontrivial(k: &FiniteGroup, a: usize, g: usize) -> usize {
    if g == 0 { a } else { k.inverse(a) }
}

/// `k[C2]` on `k[C3]`: trivial left action, `h ◁ g = h²`.
pub fn example_action<F: Scalar>() -> BimoduleAction<F> {
    let k = c3();
    permutation_action(&c2(), &k, |_, a| a, |a, g| invert_if_nontrivial(&k, a, g))
}

/// `k[C2]` on `k[C3]`: `g ▷ h = h²`, trivial right action.
pub fn inversion_action<F: Scalar>() -> BimoduleAction<F> {
    let k = c3();
    permutation_action(&c2(), &k, |g, a| invert_if_nontrivial(&k, a, g), |a, _| a)
}

/// `k^{C2}` on `k^{C3}`, dual to [`example_action`]: `ρˡ(q) = 1⊗q`,
/// `ρʳ(q_h) = q_h⊗p_1 + q_{h²}⊗p_g`.
pub fn example_coaction<F: Scalar>() -> BicomoduleCoaction<F> {
    let k = c3();
    permutation_coaction(&c2(), &k, |_, a| a, |a, g| invert_if_nontrivial(&k, a, g))
}

/// Dual to [`inversion_action`]: nontrivial left coaction, trivial right coaction.
pub fn inversion_coaction<F: Scalar>() -> BicomoduleCoaction<F> {
    let k = c3();
    permutation_coaction(&c2(), &k, |g, a| invert_if_nontrivial(&k, a, g), |a, _| a)
}

/// `k^{S3}` acting on itself by left multiplication, trivial right action.
///
/// Not a module algebra; used where only the compatibility identities matter.
pub fn regular_dual_s3_action<F: Scalar>() -> BimoduleAction<F> {
    let h = Arc::new(build_dual_group_algebra::<F>(&FiniteGroup::symmetric(3)));
    let n = h.dim();
    let mut left = SparseTensor::zeros(vec![n, n, n]);
    for (k, c) in h.mult_tensor().iter() {
        left.add_at(k.to_vec(), c.clone());
    }
    BimoduleAction::new(h.clone(), h.clone(), left, SparseTensor::zeros(vec![n, n, n]))
        .expect("shapes")
        .with_trivial_right()
}

/// `k[S3]` coacting on itself by `ρˡ = Δ`, trivial right coaction.
pub fn comultiplication_s3_coaction<F: Scalar>() -> BicomoduleCoaction<F> {
    let h = Arc::new(build_group_algebra::<F>(&FiniteGroup::symmetric(3)));
    let n = h.dim();
    let left = h.comult_tensor().clone();
    BicomoduleCoaction::new(h.clone(), h.clone(), left, SparseTensor::zeros(vec![n, n, n]))
        .expect("shapes")
        .with_trivial_right()
}

/// `k[C3]` with labels `e_<g>`, for display.
pub fn labelled_group_algebra<F: Scalar>(g: &FiniteGroup) -> FiniteHopfAlgebra<F> {
    let h = build_group_algebra::<F>(g);
    let labels = g.labels().iter().map(|l| format!("e_{l}")).collect();
    h.with_labels(labels).expect("same length")
}
