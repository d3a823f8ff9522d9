//! Exhaustive searches: Rota-Baxter maps on finite groups, basis-permuting
//! (co)algebra endomorphisms, transpose duality and the two equivalence harnesses.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::action::{BicomoduleCoaction, BimoduleAction};
use crate::group::FiniteGroup;
use crate::hopf::{build_group_algebra, grouplikes, linear_dual, FiniteHopfAlgebra};
use crate::operator::LinearOperator;
use crate::report::VerificationReport;
use crate::rota_baxter::{
    assess_rb_co_operator, assess_rb_operator, check_thm22_conditions, check_thm33_conditions, is_rb_co_operator,
    is_rb_operator, RBKind, RBOperatorCandidate,
};
use crate::scalar::Scalar;
use crate::smash::{smash_coproduct_preconditions, smash_coproduct_unchecked, smash_product_preconditions, smash_product_unchecked};

/// Largest group order [`enumerate_group_rb`] accepts by default.
pub const DEFAULT_GROUP_BOUND: usize = 8;

/// Largest dimension for which all `n^n` basis maps are materialized.
pub const ENDOMORPHISM_MAX_DIM: usize = 6;

/// A set map `B(g_i) = g_{images[i]}` with `B(g)B(h) = B(gB(g)hB(g)⁻¹)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupRBMap {
    #[serde(skip)]
    pub group: FiniteGroup,
    pub images: Vec<usize>,
}

impl GroupRBMap {
    /// Labels of the images, in element order.
    pub fn image_labels(&self) -> Vec<String> {
        self.images.iter().map(|&i| self.group.labels()[i].clone()).collect()
    }
}

/// Whether every pair whose terms are already assigned satisfies the identity.
fn consistent(g: &FiniteGroup, images: &[Option<usize>]) -> bool {
    let n = g.order();
    for x in 0..n {
        let Some(bx) = images[x] else { continue };
        let conj = |y: usize| g.mul(g.mul(g.mul(x, bx), y), g.inverse(bx));
        for y in 0..n {
            let Some(by) = images[y] else { continue };
            if let Some(bz) = images[conj(y)] {
                if g.mul(bx, by) != bz {
                    return false;
                }
            }
        }
    }
    true
}

fn extend(g: &FiniteGroup, images: &mut Vec<Option<usize>>, next: usize, out: &mut Vec<Vec<usize>>) {
    let n = g.order();
    if next == n {
        out.push(images.iter().map(|i| i.expect("assigned")).collect());
        return;
    }
    for v in 0..n {
        images[next] = Some(v);
        if consistent(g, images) {
            extend(g, images, next + 1, out);
        }
    }
    images[next] = None;
}

/// Every set map `B: G → G` with `B(g)B(h) = B(gB(g)hB(g)⁻¹)`, lexicographic in the images.
///
/// Fails when `|G|` exceeds `bound`.
pub fn enumerate_group_rb(g: &FiniteGroup, bound: usize) -> Result<Vec<GroupRBMap>, crate::Error> {
    let n = g.order();
    if n > bound {
        return Err(crate::Error::BoundExceeded { size: n, bound });
    }
    let per_first: Vec<Vec<Vec<usize>>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut images = vec![None; n];
            images[0] = Some(first);
            let mut out = Vec::new();
            if consistent(g, &images) {
                extend(g, &mut images, 1, &mut out);
            }
            out
        })
        .collect();
    Ok(per_first
        .into_iter()
        .flatten()
        .map(|images| GroupRBMap { group: g.clone(), images })
        .collect())
}

/// The linear extension of a group map to `k[G]`, as an operator candidate.
pub fn linearize_group_rb<F: Scalar>(m: &GroupRBMap) -> RBOperatorCandidate<F> {
    let h = Arc::new(build_group_algebra::<F>(&m.group));
    let map = LinearOperator::from_basis_map(h.dim(), &m.images).expect("images in range");
    RBOperatorCandidate::new(h, map, RBKind::Operator).expect("set maps on grouplikes are coalgebra maps")
}

fn all_basis_maps(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).map(|_| 0..n).multi_cartesian_product().collect()
}

fn require_grouplike_basis<F: Scalar>(h: &FiniteHopfAlgebra<F>, what: &str) -> Result<(), crate::Error> {
    if h.dim() > ENDOMORPHISM_MAX_DIM {
        return Err(crate::Error::BoundExceeded { size: h.dim(), bound: ENDOMORPHISM_MAX_DIM });
    }
    let found = grouplikes(h).elements;
    let basis_grouplike = (0..h.dim()).all(|i| found.contains(&h.basis(i)));
    if !basis_grouplike {
        return Err(crate::Error::KindMismatch(format!("{what}: the basis is not made of grouplikes")));
    }
    Ok(())
}

/// All `n^n` linear extensions of set maps on a grouplike basis, lexicographic in the images.
pub fn enumerate_coalgebra_endos_pointed<F: Scalar>(h: &FiniteHopfAlgebra<F>) -> Result<Vec<LinearOperator<F>>, crate::Error> {
    require_grouplike_basis(h, "coalgebra endomorphisms")?;
    let n = h.dim();
    Ok(all_basis_maps(n)
        .into_iter()
        .map(|m| LinearOperator::from_basis_map(n, &m).expect("in range"))
        .collect())
}

/// Transposes of the maps from [`enumerate_coalgebra_endos_pointed`] on the dual of `c`:
/// the algebra endomorphisms of a function algebra `k^G` pulled back from set maps.
pub fn enumerate_algebra_endos_copointed<F: Scalar>(c: &FiniteHopfAlgebra<F>) -> Result<Vec<LinearOperator<F>>, crate::Error> {
    let dual = linear_dual(c)?;
    Ok(enumerate_coalgebra_endos_pointed(&dual)?.iter().map(LinearOperator::transpose).collect())
}

/// Checks whether the transpose of an operator on `k[G]`, `G` abelian, is a co-operator on the dual.
pub fn transpose_duality_check<F: Scalar>(b: &RBOperatorCandidate<F>) -> Result<VerificationReport, crate::Error> {
    let h = b.carrier();
    if !h.is_commutative() {
        return Err(crate::Error::NotCommutative("the group algebra of a nonabelian group".into()));
    }
    let dual = linear_dual(h)?;
    let mut r = VerificationReport::new("transpose duality");
    r.absorb("operator", "B is a Rota-Baxter operator", &is_rb_operator(b)?);
    r.absorb(
        "transpose-co-operator",
        "Bᵀ is a Rota-Baxter co-operator on the dual",
        &assess_rb_co_operator(&dual, &b.map().transpose()),
    );
    Ok(r)
}

/// One verdict of [`transpose_duality_sweep`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityVerdict {
    pub images: Vec<usize>,
    pub transpose_passes: bool,
}

/// [`transpose_duality_check`] over every group Rota-Baxter map of an abelian group.
pub fn transpose_duality_sweep<F: Scalar>(g: &FiniteGroup) -> Result<Vec<DualityVerdict>, crate::Error> {
    enumerate_group_rb(g, DEFAULT_GROUP_BOUND)?
        .par_iter()
        .map(|m| {
            let rep = transpose_duality_check(&linearize_group_rb::<F>(m))?;
            Ok(DualityVerdict { images: m.images.clone(), transpose_passes: rep.passed() })
        })
        .collect()
}

/// One candidate of an equivalence harness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessRow {
    pub agree: bool,
    pub candidate: usize,
    pub conditions: bool,
    /// Column images of `R` on the basis when it permutes basis vectors,
    /// and the images of the transposed map for co-side candidates.
    pub images: Vec<usize>,
    pub lifted: bool,
}

/// Truth table of "conditions hold" against "the lift is Rota-Baxter".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessSummary {
    pub equivalent: bool,
    pub exceptions: usize,
    pub rows: Vec<HarnessRow>,
    pub subject: String,
}

impl HarnessSummary {
    fn new(subject: &str, rows: Vec<HarnessRow>) -> Self {
        let exceptions = rows.iter().filter(|r| !r.agree).count();
        HarnessSummary { equivalent: exceptions == 0, exceptions, rows, subject: subject.to_string() }
    }
}

fn row(candidate: usize, images: Vec<usize>, conditions: bool, lifted: bool) -> HarnessRow {
    HarnessRow { agree: conditions == lifted, candidate, conditions, images, lifted }
}

/// For every coalgebra endomorphism `R` of `A` permuting the grouplike basis, compares the
/// lifting conditions with the Rota-Baxter status of `B̄` on `A⋊H`.
pub fn iff_harness_thm22<F: Scalar>(act: &BimoduleAction<F>, b: &RBOperatorCandidate<F>) -> Result<HarnessSummary, crate::Error> {
    crate::require(smash_product_preconditions(act), "L-R smash product preconditions")?;
    crate::require(is_rb_operator(b)?, "B must be a Rota-Baxter operator on H")?;
    let candidates = enumerate_coalgebra_endos_pointed(act.algebra())?;
    let smash = smash_product_unchecked(act);
    let rows = candidates
        .par_iter()
        .enumerate()
        .map(|(k, r)| {
            let conditions = check_thm22_conditions(r, b.map(), act)?.passed();
            let lifted = assess_rb_operator(&smash, &crate::rota_baxter::lift_formula(r, b.map(), act)).passed();
            Ok(row(k, r.as_basis_map().expect("basis map"), conditions, lifted))
        })
        .collect::<Result<Vec<_>, crate::Error>>()?;
    Ok(HarnessSummary::new("lifting equivalence on the smash product", rows))
}

/// The co-side mirror of [`iff_harness_thm22`] over [`enumerate_algebra_endos_copointed`].
pub fn iff_harness_thm33<F: Scalar>(co: &BicomoduleCoaction<F>, b: &RBOperatorCandidate<F>) -> Result<HarnessSummary, crate::Error> {
    crate::require(smash_coproduct_preconditions(co), "L-R smash coproduct preconditions")?;
    crate::require(is_rb_co_operator(b)?, "B must be a Rota-Baxter co-operator on H")?;
    let candidates = enumerate_algebra_endos_copointed(co.coalgebra())?;
    let smash = smash_coproduct_unchecked(co);
    let rows = candidates
        .par_iter()
        .enumerate()
        .map(|(k, r)| {
            let conditions = check_thm33_conditions(r, b.map(), co)?.passed();
            let lifted = assess_rb_co_operator(&smash, &crate::rota_baxter::colift_formula(r, b.map(), co)).passed();
            Ok(row(k, r.transpose().as_basis_map().expect("basis map"), conditions, lifted))
        })
        .collect::<Result<Vec<_>, crate::Error>>()?;
    Ok(HarnessSummary::new("co-lifting equivalence on the smash coproduct", rows))
}
