//! The worked C3-by-C2 examples recomputed exactly, each stated value set
//! against the computed one. A disagreement is recorded, never raised.

use serde::Serialize;

use crate::fixtures;
use crate::hopf::{kron_vec, pair_index, FiniteHopfAlgebra};
use crate::operator::LinearOperator;
use crate::rota_baxter::{assess_rb_co_operator, assess_rb_operator, colift_formula, lift_formula};
use crate::scalar::Scalar;
use crate::smash::{smash_coproduct_unchecked, smash_product_unchecked};

/// One input of a lift with the stated and the computed image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValueComparison {
    pub agrees: bool,
    pub computed: String,
    pub input: String,
    pub stated: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    /// Every stated value agrees with the computation.
    pub agrees: bool,
    pub comparisons: Vec<ValueComparison>,
    pub example: String,
    /// The lift passes the Rota-Baxter identity of its side, checked directly.
    pub lift_is_rota_baxter: bool,
    pub maps: String,
}

/// `2 x + y - z` style rendering on the given labels; `0` for the zero vector.
pub fn render_vector<F: Scalar>(v: &[F], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels).filter(|(c, _)| !c.is_zero()) {
        let negative = c.to_exact_string().starts_with('-');
        let magnitude = if negative { -c.clone() } else { c.clone() };
        let sign = match (out.is_empty(), negative) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        out.push_str(sign);
        if !magnitude.is_one() {
            let m = magnitude.to_exact_string();
            out.push_str(m.strip_suffix("/1").unwrap_or(&m));
            out.push(' ');
        }
        out.push_str(l);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn compare<F: Scalar>(
    smash: &FiniteHopfAlgebra<F>,
    lift: &LinearOperator<F>,
    stated: impl Fn(usize) -> Option<Vec<F>>,
) -> Vec<ValueComparison> {
    (0..smash.dim())
        .filter_map(|x| {
            let expected = stated(x)?;
            let computed = lift.image(x);
            Some(ValueComparison {
                agrees: computed == expected,
                computed: render_vector(&computed, smash.labels()),
                input: smash.label(x).to_string(),
                stated: render_vector(&expected, smash.labels()),
            })
        })
        .collect()
}

fn report(example: &str, maps: &str, comparisons: Vec<ValueComparison>, lift_is_rota_baxter: bool) -> DiscrepancyReport {
    DiscrepancyReport {
        agrees: comparisons.iter().all(|c| c.agrees),
        comparisons,
        example: example.to_string(),
        lift_is_rota_baxter,
        maps: maps.to_string(),
    }
}

/// `R(hⁱ) = h^{-i}` on `k[C3]`.
pub fn swap_r<F: Scalar>() -> LinearOperator<F> {
    LinearOperator::from_basis_map(3, &[0, 2, 1]).expect("in range")
}

/// Product side, `R = ε·1`, `B = S`: stated `B̄(hⁱ⊗g) = 1⊗g` for `i = 1, 2`.
pub fn product_counit_unit<F: Scalar>() -> DiscrepancyReport {
    let act = fixtures::example_action::<F>();
    let (a, h) = (act.algebra(), act.hopf());
    let smash = smash_product_unchecked(&act);
    let lift = lift_formula(&a.counit_unit_map(), h.antipode(), &act);
    let comparisons = compare(&smash, &lift, |x| {
        let (i, j) = (x / h.dim(), x % h.dim());
        (j == 1 && i > 0).then(|| kron_vec(&a.basis(0), &h.basis(1)))
    });
    let rb = assess_rb_operator(&smash, &lift).passed();
    report("C3 by C2 smash product", "R = ε·1, B = S", comparisons, rb)
}

/// Product side, `R(h) = h²`, `B = S`: stated `B̄(hⁱ⊗g) = hⁱ⊗g` and, globally, `B̄ = id`.
pub fn product_swap<F: Scalar>() -> DiscrepancyReport {
    let act = fixtures::example_action::<F>();
    let smash = smash_product_unchecked(&act);
    let lift = lift_formula(&swap_r(), act.hopf().antipode(), &act);
    let id = LinearOperator::<F>::identity(smash.dim());
    let comparisons = compare(&smash, &lift, |x| Some(id.image(x)));
    let rb = assess_rb_operator(&smash, &lift).passed();
    report("C3 by C2 smash product", "R(h) = h², B = S (claimed B̄ = id)", comparisons, rb)
}

/// Coproduct side with `B` either the antipode or the identity of `k^{C2}`.
fn coproduct<F: Scalar>(r: LinearOperator<F>, antipode: bool, stated_constant: bool) -> DiscrepancyReport {
    let co = fixtures::example_coaction::<F>();
    let (c, h) = (co.coalgebra(), co.hopf());
    let b = if antipode { h.antipode().clone() } else { LinearOperator::identity(h.dim()) };
    let smash = smash_coproduct_unchecked(&co);
    let lift = colift_formula(&r, &b, &co);
    let id = LinearOperator::<F>::identity(smash.dim());
    let comparisons = compare(&smash, &lift, |x| {
        Some(if stated_constant { kron_vec(c.unit(), &h.basis(x % h.dim())) } else { id.image(x) })
    });
    let rb = assess_rb_co_operator(&smash, &lift).passed();
    let maps = match (stated_constant, antipode) {
        (true, true) => "R = id, B = S (claimed B̃(q⊗p) = 1⊗p)",
        (true, false) => "R = id, B = id (claimed B̃(q⊗p) = 1⊗p)",
        (false, true) => "R(q_h) = q_h², B = S (claimed B̃ = id)",
        (false, false) => "R(q_h) = q_h², B = id (claimed B̃ = id)",
    };
    report("C3 by C2 smash coproduct", maps, comparisons, rb)
}

/// Coproduct side, `R = id`: stated `B̃(q⊗p) = 1⊗p`.
pub fn coproduct_identity<F: Scalar>(antipode: bool) -> DiscrepancyReport {
    coproduct::<F>(LinearOperator::identity(3), antipode, true)
}

/// Coproduct side, `R(q_h) = q_{h²}`: stated `B̃ = id`.
pub fn coproduct_swap<F: Scalar>(antipode: bool) -> DiscrepancyReport {
    coproduct::<F>(swap_r(), antipode, false)
}

/// All worked-example records in a fixed order.
pub fn all_reports<F: Scalar>() -> Vec<DiscrepancyReport> {
    vec![
        product_counit_unit::<F>(),
        product_swap::<F>(),
        coproduct_identity::<F>(true),
        coproduct_identity::<F>(false),
        coproduct_swap::<F>(true),
        coproduct_swap::<F>(false),
    ]
}

/// The first disagreeing input of a report, by smash basis index.
pub fn first_disagreement(r: &DiscrepancyReport) -> Option<&ValueComparison> {
    r.comparisons.iter().find(|c| !c.agrees)
}

/// Basis index of `a_i ⊗ h_j` in a smash algebra with `dim_h` columns.
pub fn smash_index(i: usize, j: usize, dim_h: usize) -> usize {
    pair_index(i, j, dim_h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn rendering() {
        let labels: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let v = [Q::from_i64(2), Q::from_i64(1), -Q::from_i64(1)];
        assert_eq!(render_vector(&v, &labels), "2 x + y - z");
        assert_eq!(render_vector(&vec![Q::from_i64(0); 3], &labels), "0");
        assert_eq!(render_vector(&[-Q::new(1.into(), 2.into()), Q::from_i64(0), Q::from_i64(0)], &labels), "-1/2 x");
    }

    #[test]
    fn counit_unit_values_agree() {
        let r = product_counit_unit::<Q>();
        assert_eq!(r.comparisons.len(), 2);
        assert!(r.agrees, "{r:?}");
        assert!(r.lift_is_rota_baxter);
    }

    #[test]
    fn swap_lift_is_not_the_identity() {
        let r = product_swap::<Q>();
        assert!(r.lift_is_rota_baxter);
        assert!(!r.agrees);
        for i in 0..3 {
            assert!(r.comparisons[smash_index(i, 1, 2)].agrees);
        }
        let d = first_disagreement(&r).unwrap();
        assert_eq!(d.input, "h⊗1");
        assert_eq!(d.computed, "h2⊗1");
    }

    #[test]
    fn identity_colift_is_not_constant() {
        let r = coproduct_identity::<Q>(true);
        assert!(!r.agrees);
        let d = &r.comparisons[smash_index(1, 0, 2)];
        assert!(!d.agrees);
        assert_eq!(d.computed, d.input);
    }
}
