use super::expr::Legs;
use super::{
    assess_rb_co_operator, is_rb_co_operator, push_equivalence, push_rb_co_operator_identity, RBKind,
    RBOperatorCandidate,
};
use crate::action::BicomoduleCoaction;
use crate::hopf::{is_algebra_map, pair_index, FiniteHopfAlgebra};
use crate::operator::LinearOperator;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::smash::{smash_coproduct_preconditions, smash_coproduct_unchecked};
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

/// `B̃(c⊗h) = R(c₍₀₎₍₀₎') ⊗ B(c₍₋₁₎c₍₀₎₍₁₎h)` without any hypothesis checks.
pub(crate) fn colift_formula<F: Scalar>(
    r: &LinearOperator<F>,
    b: &LinearOperator<F>,
    co: &BicomoduleCoaction<F>,
) -> LinearOperator<F> {
    let (h, c) = (&**co.hopf(), &**co.coalgebra());
    let (nc, nh) = (c.dim(), h.dim());
    let mut columns = vec![Vec::new(); nc * nh];
    for (ci, hi) in itertools::iproduct!(0..nc, 0..nh) {
        let t = Legs::vector("c", &c.basis(ci))
            .coact_left("c", co, ("l", "c0"))
            .coact_right("c0", co, ("c00", "r"))
            .op("c00", r)
            .with("h", &h.basis(hi))
            .mul(&["l", "r", "h"], h, "k")
            .op("k", b)
            .finish(&["c00", "k"]);
        columns[pair_index(ci, hi, nh)] = t.flatten();
    }
    LinearOperator::from_columns(nc * nh, &columns).expect("column lengths")
}

/// The lift `B̃` on `C⋉H`, on the row-major `C⊗H` basis.
///
/// Requires the smash coproduct hypotheses and `B` a Rota-Baxter co-operator on `H`.
pub fn lift_rb_co_operator<F: Scalar>(
    r: &LinearOperator<F>,
    b: &RBOperatorCandidate<F>,
    co: &BicomoduleCoaction<F>,
) -> Result<LinearOperator<F>, crate::Error> {
    if b.kind() != RBKind::CoOperator {
        return Err(crate::Error::KindMismatch("the colift needs B of co-operator kind".into()));
    }
    expect_square(r, co.coalgebra().dim(), "R")?;
    expect_square(b.map(), co.hopf().dim(), "B")?;
    if **b.carrier() != **co.hopf() {
        return Err(crate::Error::KindMismatch("B lives on a different Hopf algebra than the coaction".into()));
    }
    crate::require(smash_coproduct_preconditions(co), "L-R smash coproduct preconditions")?;
    crate::require(is_rb_co_operator(b)?, "B must be a Rota-Baxter co-operator on H")?;
    Ok(colift_formula(r, b.map(), co))
}

fn push_r_structure<F: Scalar>(rep: &mut VerificationReport, c: &FiniteHopfAlgebra<F>, r: &LinearOperator<F>) -> Result<(), crate::Error> {
    rep.absorb("R-algebra-map", "R is an algebra map", &is_algebra_map(c, c, r)?);
    push_rb_co_operator_identity(rep, "R-3a", c, r);
    Ok(())
}

/// `R(c)₁₍₀₎'₁ R(R(c)₁₍₀₎'₂ S_C(R(c)₃₍₀₎)) ⊗ R(c)₂ ⊗ R(c)₁₍₁₎R(c)₃₍₋₁₎`.
fn three_leg_lhs<F: Scalar>(r: &LinearOperator<F>, co: &BicomoduleCoaction<F>, ci: usize) -> SparseTensor<F> {
    let (h, c) = (&**co.hopf(), &**co.coalgebra());
    Legs::vector("x", &r.image(ci))
        .delta("x", c, &["x1", "x2", "x3"])
        .coact_right("x1", co, ("x1c", "x1h"))
        .delta("x1c", c, &["y1", "y2"])
        .coact_left("x3", co, ("x3h", "x3c"))
        .op("x3c", c.antipode())
        .mul(&["y2", "x3c"], c, "z")
        .op("z", r)
        .mul(&["y1", "z"], c, "first")
        .mul(&["x1h", "x3h"], h, "k")
        .finish(&["first", "x2", "k"])
}

/// `R(c₁₍₀₎) ⊗ R(c₂) ⊗ T(c₁₍₋₁₎)` for the given map `T` on `H`.
fn three_leg_rhs<F: Scalar>(r: &LinearOperator<F>, t: &LinearOperator<F>, co: &BicomoduleCoaction<F>, ci: usize) -> SparseTensor<F> {
    let c = &**co.coalgebra();
    Legs::vector("c", &c.basis(ci))
        .delta("c", c, &["c1", "c2"])
        .coact_left("c1", co, ("l", "c1c"))
        .op("c1c", r)
        .op("c2", r)
        .op("l", t)
        .finish(&["c1c", "c2", "l"])
}

/// The hypotheses of the co-lifting theorem: `R` an algebra map, `R` satisfying "3a" on `C`,
/// "3c" and "3d" on every basis element.
pub fn check_thm33_conditions<F: Scalar>(
    r: &LinearOperator<F>,
    b: &LinearOperator<F>,
    co: &BicomoduleCoaction<F>,
) -> Result<VerificationReport, crate::Error> {
    let (h, c) = (&**co.hopf(), &**co.coalgebra());
    expect_square(r, c.dim(), "R")?;
    expect_square(b, h.dim(), "B")?;
    let bs = b.compose(h.antipode())?;
    let mut rep = VerificationReport::new("co-lifting conditions for B̃");
    push_r_structure(&mut rep, c, r)?;
    rep.check(
        "3c",
        "R(c)₁₍₀₎'₁R(R(c)₁₍₀₎'₂S_C(R(c)₃₍₀₎)) ⊗ R(c)₂ ⊗ R(c)₁₍₁₎R(c)₃₍₋₁₎ = R(c₁₍₀₎) ⊗ R(c₂) ⊗ B(S_H(c₁₍₋₁₎))",
        &[c.labels()],
        |t| (three_leg_lhs(r, co, t[0]), three_leg_rhs(r, &bs, co, t[0])),
    );
    rep.check(
        "3d",
        "R(c)₍₀₎'₍₋₁₎₁B(R(c)₍₀₎'₍₋₁₎₂S_H(R(c)₍₁₎)) ⊗ R(c)₍₀₎'₍₀₎ = B(S_H(c₍₁₎)) ⊗ R(c₍₀₎')",
        &[c.labels()],
        |t| {
            let lhs = Legs::vector("x", &r.image(t[0]))
                .coact_right("x", co, ("x0", "x1"))
                .coact_left("x0", co, ("xh", "xc"))
                .delta("xh", h, &["u1", "u2"])
                .op("x1", h.antipode())
                .mul(&["u2", "x1"], h, "v")
                .op("v", b)
                .mul(&["u1", "v"], h, "k")
                .finish(&["k", "xc"]);
            let rhs = Legs::vector("c", &c.basis(t[0]))
                .coact_right("c", co, ("c0", "c1"))
                .op("c1", &bs)
                .op("c0", r)
                .finish(&["c1", "c0"]);
            (lhs, rhs)
        },
    );
    Ok(rep)
}

/// The expanded four-leg identity "3b" from the proof of the co-lifting theorem. Diagnostic only.
pub fn check_internal_3b<F: Scalar>(
    r: &LinearOperator<F>,
    b: &LinearOperator<F>,
    co: &BicomoduleCoaction<F>,
) -> Result<VerificationReport, crate::Error> {
    let (h, c) = (&**co.hopf(), &**co.coalgebra());
    expect_square(r, c.dim(), "R")?;
    expect_square(b, h.dim(), "B")?;
    let bs = b.compose(h.antipode())?;
    let mut rep = VerificationReport::new("internal identity for B̃");
    rep.check(
        "3b",
        "four-leg expansion of the co-operator identity on C⋉H = R(c₁₍₀₎) ⊗ B(S_H(c₂₍₁₎)) ⊗ R(c₂₍₀₎') ⊗ B(S_H(c₁₍₋₁₎))",
        &[c.labels()],
        |t| {
            let lhs = Legs::vector("x", &r.image(t[0]))
                .delta("x", c, &["x1", "x2"])
                .coact_right("x1", co, ("x1c", "x1h"))
                .delta("x1h", h, &["u1", "u2", "u3"])
                .coact_left("x2", co, ("x2h", "x2c"))
                .delta("x2h", h, &["v1", "v2"])
                .delta("x2c", c, &["w1", "w2", "w3"])
                .coact_right("w1", co, ("w1c", "w1h"))
                .delta("w1h", h, &["s1", "s2", "s3"])
                .coact_right("w2", co, ("w2c", "w2h"))
                .coact_left("w3", co, ("w3h", "w3c"))
                .op("w1c", r)
                .ops("w3c", &[c.antipode(), r])
                .mul(&["x1c", "w1c", "w3c"], c, "C1")
                .op("u1", b)
                .op("u3", &bs)
                .op("v2", b)
                .op("s1", b)
                .op("s3", &bs)
                .op("w2h", &bs)
                .mul(&["u1", "u3", "v1", "v2", "s1", "s3", "w2h"], h, "H1")
                .mul(&["u2", "s2", "w3h"], h, "H2")
                .finish(&["C1", "H1", "w2c", "H2"]);
            let rhs = Legs::vector("c", &c.basis(t[0]))
                .delta("c", c, &["c1", "c2"])
                .coact_left("c1", co, ("c1h", "c1c"))
                .coact_right("c2", co, ("c2c", "c2h"))
                .op("c1c", r)
                .op("c2h", &bs)
                .op("c2c", r)
                .op("c1h", &bs)
                .finish(&["c1c", "c2h", "c2c", "c1h"]);
            (lhs, rhs)
        },
    );
    Ok(rep)
}

fn require_trivial_right<F: Scalar>(co: &BicomoduleCoaction<F>) -> Result<(), crate::Error> {
    let mut rep = VerificationReport::new("specialization");
    let trivial = BicomoduleCoaction::with_trivial_right(co);
    rep.check("right-coaction-trivial", "c₍₀₎'⊗c₍₁₎ = c⊗1", &[], |_| {
        (co.right_tensor().clone(), trivial.right_tensor().clone())
    });
    crate::require(rep, "this specialization needs a trivial right coaction")
}

/// Trivial right coaction: "3f", "3g", the structure of `R`, and "COR34-iff".
pub fn check_cor34_conditions<F: Scalar>(
    r: &LinearOperator<F>,
    b: &LinearOperator<F>,
    co: &BicomoduleCoaction<F>,
) -> Result<VerificationReport, crate::Error> {
    let (h, c) = (&**co.hopf(), &**co.coalgebra());
    expect_square(r, c.dim(), "R")?;
    expect_square(b, h.dim(), "B")?;
    require_trivial_right(co)?;
    let bs = b.compose(h.antipode())?;
    let mut rep = VerificationReport::new("co-lifting conditions, trivial right coaction");
    push_r_structure(&mut rep, c, r)?;
    rep.check(
        "3f",
        "R(c)₁R(R(c)₂S_C(R(c)₄₍₀₎)) ⊗ R(c)₃ ⊗ R(c)₄₍₋₁₎ = R(c₁₍₀₎) ⊗ R(c₂) ⊗ B(S_H(c₁₍₋₁₎))",
        &[c.labels()],
        |t| {
            let lhs = Legs::vector("x", &r.image(t[0]))
                .delta("x", c, &["x1", "x2", "x3", "x4"])
                .coact_left("x4", co, ("x4h", "x4c"))
                .op("x4c", c.antipode())
                .mul(&["x2", "x4c"], c, "z")
                .op("z", r)
                .mul(&["x1", "z"], c, "first")
                .finish(&["first", "x3", "x4h"]);
            (lhs, three_leg_rhs(r, &bs, co, t[0]))
        },
    );
    rep.check("3g", "R(c)₍₋₁₎₁B(R(c)₍₋₁₎₂) ⊗ R(c)₍₀₎ = 1_H ⊗ R(c)", &[c.labels()], |t| {
        let rc = r.image(t[0]);
        (convolve_left_leg(&rc, b, co), unit_left(&rc, h))
    });
    let conditions = rep.passed();
    push_colift_equivalence(&mut rep, "COR34-iff", conditions, r, b, co);
    Ok(rep)
}

/// `x₍₋₁₎₁B(x₍₋₁₎₂) ⊗ x₍₀₎`.
fn convolve_left_leg<F: Scalar>(x: &[F], b: &LinearOperator<F>, co: &BicomoduleCoaction<F>) -> SparseTensor<F> {
    let h = &**co.hopf();
    Legs::vector("x", x)
        .coact_left("x", co, ("xh", "xc"))
        .delta("xh", h, &["u1", "u2"])
        .op("u2", b)
        .mul(&["u1", "u2"], h, "k")
        .finish(&["k", "xc"])
}

fn unit_left<F: Scalar>(x: &[F], h: &FiniteHopfAlgebra<F>) -> SparseTensor<F> {
    SparseTensor::vector(h.unit()).outer(&SparseTensor::vector(x))
}

fn push_colift_equivalence<F: Scalar>(
    rep: &mut VerificationReport,
    label: &str,
    conditions: bool,
    r: &LinearOperator<F>,
    b: &LinearOperator<F>,
    co: &BicomoduleCoaction<F>,
) {
    let smash = smash_coproduct_unchecked(co);
    let lifted = assess_rb_co_operator(&smash, &colift_formula(r, b, co)).passed();
    push_equivalence::<F>(rep, label, conditions, lifted);
}

/// `R = S_C`: "3h", "3i" and "COR35-iff".
///
/// "3h" is read without the spurious coproduct index:
/// `S_C(c₍₀₎) ⊗ c₍₋₁₎ = S_C(c₍₀₎) ⊗ B(S_H(c₍₋₁₎))`.
pub fn check_cor35_conditions<F: Scalar>(b: &LinearOperator<F>, co: &BicomoduleCoaction<F>) -> Result<VerificationReport, crate::Error> {
    let (h, c) = (&**co.hopf(), &**co.coalgebra());
    expect_square(b, h.dim(), "B")?;
    let bs = b.compose(h.antipode())?;
    let mut rep = VerificationReport::new("co-lifting conditions, R = S_C");
    rep.check("3h", "S_C(c₍₀₎) ⊗ c₍₋₁₎ = S_C(c₍₀₎) ⊗ B(S_H(c₍₋₁₎))", &[c.labels()], |t| {
        let base = Legs::vector("c", &c.basis(t[0]))
            .coact_left("c", co, ("l", "c0"))
            .op("c0", c.antipode());
        let rhs = Legs::vector("c", &c.basis(t[0]))
            .coact_left("c", co, ("l", "c0"))
            .op("c0", c.antipode())
            .op("l", &bs)
            .finish(&["c0", "l"]);
        (base.finish(&["c0", "l"]), rhs)
    });
    rep.check("3i", "c₍₋₁₎₁B(c₍₋₁₎₂) ⊗ c₍₀₎ = 1_H ⊗ c", &[c.labels()], |t| {
        let x = c.basis(t[0]);
        (convolve_left_leg(&x, b, co), unit_left(&x, h))
    });
    let conditions = rep.passed();
    push_colift_equivalence(&mut rep, "COR35-iff", conditions, c.antipode(), b, co);
    Ok(rep)
}

/// `B = S_H`: the structure of `R`, "3j", "3k" and "COR36-iff".
pub fn check_cor36_conditions<F: Scalar>(r: &LinearOperator<F>, co: &BicomoduleCoaction<F>) -> Result<VerificationReport, crate::Error> {
    let (h, c) = (&**co.hopf(), &**co.coalgebra());
    expect_square(r, c.dim(), "R")?;
    let id = LinearOperator::identity(h.dim());
    let mut rep = VerificationReport::new("co-lifting conditions, B = S_H");
    push_r_structure(&mut rep, c, r)?;
    rep.check(
        "3j",
        "R(c)₁₍₀₎'₁R(R(c)₁₍₀₎'₂S_C(R(c)₃₍₀₎)) ⊗ R(c)₂ ⊗ R(c)₁₍₁₎R(c)₃₍₋₁₎ = R(c₁₍₀₎) ⊗ R(c₂) ⊗ c₁₍₋₁₎",
        &[c.labels()],
        |t| (three_leg_lhs(r, co, t[0]), three_leg_rhs(r, &id, co, t[0])),
    );
    rep.check("3k", "R(c)₍₁₎ ⊗ R(c)₍₀₎' = c₍₁₎ ⊗ R(c₍₀₎')", &[c.labels()], |t| {
        let lhs = Legs::vector("x", &r.image(t[0])).coact_right("x", co, ("x0", "x1")).finish(&["x1", "x0"]);
        let rhs = Legs::vector("c", &c.basis(t[0]))
            .coact_right("c", co, ("c0", "c1"))
            .op("c0", r)
            .finish(&["c1", "c0"]);
        (lhs, rhs)
    });
    let conditions = rep.passed();
    push_colift_equivalence(&mut rep, "COR36-iff", conditions, r, h.antipode(), co);
    Ok(rep)
}
