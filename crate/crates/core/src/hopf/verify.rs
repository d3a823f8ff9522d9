use super::FiniteHopfAlgebra;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tensor::SparseTensor;

/// Stacks dense vectors of equal length into an arity-2 tensor `[which, coordinate]`.
pub(crate) fn stack<F: Scalar>(vs: &[Vec<F>]) -> SparseTensor<F> {
    let n = vs.first().map_or(0, Vec::len);
    let mut t = SparseTensor::zeros(vec![vs.len(), n]);
    for (s, v) in vs.iter().enumerate() {
        for (i, c) in v.iter().enumerate() {
            t.add_at(vec![s, i], c.clone());
        }
    }
    t
}

/// Legwise product of two tensors whose legs live in the given algebras.
pub(crate) fn legwise_product<F: Scalar>(
    x: &SparseTensor<F>,
    y: &SparseTensor<F>,
    algebras: &[&FiniteHopfAlgebra<F>],
) -> SparseTensor<F> {
    debug_assert_eq!(x.dims(), y.dims());
    let mut out = SparseTensor::zeros(x.dims().to_vec());
    for (kx, cx) in x.iter() {
        for (ky, cy) in y.iter() {
            let factors: Vec<&[(usize, F)]> = algebras
                .iter()
                .enumerate()
                .map(|(leg, h)| h.basis_product(kx[leg], ky[leg]))
                .collect();
            let coeff = cx.clone() * cy.clone();
            push_products(&mut out, &factors, &coeff);
        }
    }
    out
}

fn push_products<F: Scalar>(out: &mut SparseTensor<F>, factors: &[&[(usize, F)]], coeff: &F) {
    fn rec<F: Scalar>(out: &mut SparseTensor<F>, factors: &[&[(usize, F)]], idx: &mut Vec<usize>, c: F) {
        let leg = idx.len();
        if leg == factors.len() {
            out.add_at(idx.clone(), c);
            return;
        }
        for (k, d) in factors[leg] {
            idx.push(*k);
            rec(out, factors, idx, c.clone() * d.clone());
            idx.pop();
        }
    }
    rec(out, factors, &mut Vec::with_capacity(factors.len()), coeff.clone());
}

/// Checks every Hopf algebra axiom on all basis tuples.
///
/// Entries: `associativity`, `unit`, `coassociativity`, `counit`,
/// `comult-multiplicative`, `comult-unit`, `counit-multiplicative`,
/// `counit-unit`, `antipode`.
pub fn verify_hopf<F: Scalar>(h: &FiniteHopfAlgebra<F>) -> VerificationReport {
    let mut r = VerificationReport::new("hopf algebra axioms");
    let b = h.labels();
    let n = h.dim();

    r.check("associativity", "(xy)z = x(yz)", &[b, b, b], |t| {
        let (x, y, z) = (h.basis(t[0]), h.basis(t[1]), h.basis(t[2]));
        (
            SparseTensor::vector(&h.mul(&h.mul(&x, &y), &z)),
            SparseTensor::vector(&h.mul(&x, &h.mul(&y, &z))),
        )
    });

    r.check("unit", "1x = x = x1", &[b], |t| {
        let x = h.basis(t[0]);
        (stack(&[h.mul(h.unit(), &x), h.mul(&x, h.unit())]), stack(&[x.clone(), x]))
    });

    r.check("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ", &[b], |t| {
        let x = h.basis(t[0]);
        (h.iterated_comult(&x, 3), h.iterated_comult_right(&x, 3))
    });

    r.check("counit", "(ε⊗id)Δ = id = (id⊗ε)Δ", &[b], |t| {
        let d = h.comult_of(&h.basis(t[0]));
        let mut left = h.zero_vec();
        let mut right = h.zero_vec();
        for (k, c) in d.iter() {
            left[k[1]] = left[k[1]].clone() + c.clone() * h.counit()[k[0]].clone();
            right[k[0]] = right[k[0]].clone() + c.clone() * h.counit()[k[1]].clone();
        }
        let x = h.basis(t[0]);
        (stack(&[left, right]), stack(&[x.clone(), x]))
    });

    r.check("comult-multiplicative", "Δ(xy) = Δ(x)Δ(y)", &[b, b], |t| {
        let (x, y) = (h.basis(t[0]), h.basis(t[1]));
        (
            h.comult_of(&h.mul(&x, &y)),
            legwise_product(&h.comult_of(&x), &h.comult_of(&y), &[h, h]),
        )
    });

    r.check("comult-unit", "Δ(1) = 1⊗1", &[], |_| {
        let mut one_one = SparseTensor::zeros(vec![n, n]);
        one_one.add_outer(&[h.unit(), h.unit()], &F::one());
        (h.comult_of(h.unit()), one_one)
    });

    r.check("counit-multiplicative", "ε(xy) = ε(x)ε(y)", &[b, b], |t| {
        let (x, y) = (h.basis(t[0]), h.basis(t[1]));
        (
            SparseTensor::scalar(h.counit_of(&h.mul(&x, &y))),
            SparseTensor::scalar(h.counit_of(&x) * h.counit_of(&y)),
        )
    });

    r.check("counit-unit", "ε(1) = 1", &[], |_| {
        (SparseTensor::scalar(h.counit_of(h.unit())), SparseTensor::scalar(F::one()))
    });

    r.check("antipode", "S(x₁)x₂ = ε(x)1 = x₁S(x₂)", &[b], |t| {
        let mut left = h.zero_vec();
        let mut right = h.zero_vec();
        for (j, k, c) in h.basis_coproduct(t[0]) {
            let l = h.mul(&h.antipode().image(*j), &h.basis(*k));
            let r = h.mul(&h.basis(*j), &h.antipode().image(*k));
            super::add_scaled(&mut left, &l, c);
            super::add_scaled(&mut right, &r, c);
        }
        let e = super::scaled(h.unit(), &h.counit()[t[0]]);
        (stack(&[left, right]), stack(&[e.clone(), e]))
    });

    r
}
