//! Bimodule actions `▷`, `◁` of a Hopf algebra `H` on `A`, and bicomodule
//! coactions `ρˡ`, `ρʳ` of `H` on `C`.

use std::sync::Arc;

use crate::hopf::{linear_dual, FiniteHopfAlgebra};
use crate::hopf::verify::legwise_product;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tensor::{SparseTensor, TensorError};

type Terms<F> = Vec<(usize, F)>;

fn expect_dims<F: Scalar>(t: &SparseTensor<F>, dims: &[usize], what: &str) -> Result<(), TensorError> {
    if t.dims() != dims {
        return Err(TensorError::DimensionMismatch(format!("{what} has dims {:?}, expected {dims:?}", t.dims())));
    }
    Ok(())
}

/// `h ▷ a` and `a ◁ h` as structure tensors.
///
/// * `left[h, a, a']`: coefficient of `e_{a'}` in `e_h ▷ e_a`
/// * `right[a, h, a']`: coefficient of `e_{a'}` in `e_a ◁ e_h`
#[derive(Debug, Clone)]
pub struct BimoduleAction<F> {
    h: Arc<FiniteHopfAlgebra<F>>,
    a: Arc<FiniteHopfAlgebra<F>>,
    left: SparseTensor<F>,
    right: SparseTensor<F>,
    left_terms: Vec<Vec<Terms<F>>>,
    right_terms: Vec<Vec<Terms<F>>>,
}

impl<F: Scalar> BimoduleAction<F> {
    /// Checks shapes only; the axioms are checked by [`verify_bimodule_bialgebra`].
    pub fn new(
        h: Arc<FiniteHopfAlgebra<F>>,
        a: Arc<FiniteHopfAlgebra<F>>,
        left: SparseTensor<F>,
        right: SparseTensor<F>,
    ) -> Result<Self, TensorError> {
        let (nh, na) = (h.dim(), a.dim());
        expect_dims(&left, &[nh, na, na], "left action")?;
        expect_dims(&right, &[na, nh, na], "right action")?;
        let mut left_terms = vec![vec![Vec::new(); na]; nh];
        for (k, c) in left.iter() {
            left_terms[k[0]][k[1]].push((k[2], c.clone()));
        }
        let mut right_terms = vec![vec![Vec::new(); nh]; na];
        for (k, c) in right.iter() {
            right_terms[k[0]][k[1]].push((k[2], c.clone()));
        }
        Ok(BimoduleAction { h, a, left, right, left_terms, right_terms })
    }

    /// `h ▷ a = ε(h)a` and `a ◁ h = ε(h)a`.
    pub fn trivial(h: Arc<FiniteHopfAlgebra<F>>, a: Arc<FiniteHopfAlgebra<F>>) -> Self {
        let left = trivial_action(&h, &a, false);
        let right = trivial_action(&h, &a, true);
        Self::new(h, a, left, right).expect("trivial action shapes")
    }

    /// The same left action with the right action made trivial.
    pub fn with_trivial_right(&self) -> Self {
        let right = trivial_action(&self.h, &self.a, true);
        Self::new(self.h.clone(), self.a.clone(), self.left.clone(), right).expect("shapes unchanged")
    }

    pub fn hopf(&self) -> &Arc<FiniteHopfAlgebra<F>> {
        &self.h
    }

    pub fn algebra(&self) -> &Arc<FiniteHopfAlgebra<F>> {
        &self.a
    }

    pub fn left_tensor(&self) -> &SparseTensor<F> {
        &self.left
    }

    pub fn right_tensor(&self) -> &SparseTensor<F> {
        &self.right
    }

    pub fn left_basis(&self, h: usize, a: usize) -> &[(usize, F)] {
        &self.left_terms[h][a]
    }

    pub fn right_basis(&self, a: usize, h: usize) -> &[(usize, F)] {
        &self.right_terms[a][h]
    }

    /// `h ▷ a` on dense coordinates.
    pub fn act_left(&self, h: &[F], a: &[F]) -> Vec<F> {
        let mut out = self.a.zero_vec();
        for (i, x) in h.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in a.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x.clone() * y.clone();
                for (k, c) in &self.left_terms[i][j] {
                    out[*k] = out[*k].clone() + xy.clone() * c.clone();
                }
            }
        }
        out
    }

    /// `a ◁ h` on dense coordinates.
    pub fn act_right(&self, a: &[F], h: &[F]) -> Vec<F> {
        let mut out = self.a.zero_vec();
        for (j, y) in a.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            for (i, x) in h.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let xy = x.clone() * y.clone();
                for (k, c) in &self.right_terms[j][i] {
                    out[*k] = out[*k].clone() + xy.clone() * c.clone();
                }
            }
        }
        out
    }

    pub fn is_right_trivial(&self) -> bool {
        self.right == trivial_action(&self.h, &self.a, true)
    }

    pub fn is_left_trivial(&self) -> bool {
        self.left == trivial_action(&self.h, &self.a, false)
    }
}

fn trivial_action<F: Scalar>(h: &FiniteHopfAlgebra<F>, a: &FiniteHopfAlgebra<F>, right: bool) -> SparseTensor<F> {
    let (nh, na) = (h.dim(), a.dim());
    let dims = if right { vec![na, nh, na] } else { vec![nh, na, na] };
    let mut t = SparseTensor::zeros(dims);
    for (i, e) in h.counit().iter().enumerate() {
        for j in 0..na {
            let idx = if right { vec![j, i, j] } else { vec![i, j, j] };
            t.add_at(idx, e.clone());
        }
    }
    t
}

/// Checks the module, bimodule algebra and bimodule coalgebra axioms on all basis tuples.
pub fn verify_bimodule_bialgebra<F: Scalar>(act: &BimoduleAction<F>) -> VerificationReport {
    let (h, a) = (&*act.h, &*act.a);
    let (bh, ba) = (h.labels(), a.labels());
    let v = |x: Vec<F>| SparseTensor::vector(&x);
    let mut r = VerificationReport::new("bimodule bialgebra");

    r.check("left-module-assoc", "(gh)▷a = g▷(h▷a)", &[bh, bh, ba], |t| {
        let (g, k, x) = (h.basis(t[0]), h.basis(t[1]), a.basis(t[2]));
        (v(act.act_left(&h.mul(&g, &k), &x)), v(act.act_left(&g, &act.act_left(&k, &x))))
    });
    r.check("left-module-unit", "1▷a = a", &[ba], |t| {
        let x = a.basis(t[0]);
        (v(act.act_left(h.unit(), &x)), v(x))
    });
    r.check("right-module-assoc", "a◁(gh) = (a◁g)◁h", &[ba, bh, bh], |t| {
        let (x, g, k) = (a.basis(t[0]), h.basis(t[1]), h.basis(t[2]));
        (v(act.act_right(&x, &h.mul(&g, &k))), v(act.act_right(&act.act_right(&x, &g), &k)))
    });
    r.check("right-module-unit", "a◁1 = a", &[ba], |t| {
        let x = a.basis(t[0]);
        (v(act.act_right(&x, h.unit())), v(x))
    });
    r.check("bimodule-compat", "(h▷a)◁g = h▷(a◁g)", &[bh, ba, bh], |t| {
        let (k, x, g) = (h.basis(t[0]), a.basis(t[1]), h.basis(t[2]));
        (v(act.act_right(&act.act_left(&k, &x), &g)), v(act.act_left(&k, &act.act_right(&x, &g))))
    });
    r.check("left-measuring", "h▷(ab) = (h₁▷a)(h₂▷b)", &[bh, ba, ba], |t| {
        let (x, y) = (a.basis(t[1]), a.basis(t[2]));
        let mut rhs = a.zero_vec();
        for (i, j, c) in h.basis_coproduct(t[0]) {
            let p = a.mul(&act.act_left(&h.basis(*i), &x), &act.act_left(&h.basis(*j), &y));
            crate::hopf::add_scaled(&mut rhs, &p, c);
        }
        (v(act.act_left(&h.basis(t[0]), &a.mul(&x, &y))), v(rhs))
    });
    r.check("left-unit-preserving", "h▷1 = ε(h)1", &[bh], |t| {
        (v(act.act_left(&h.basis(t[0]), a.unit())), v(crate::hopf::scaled(a.unit(), &h.counit()[t[0]])))
    });
    r.check("right-measuring", "(ab)◁h = (a◁h₁)(b◁h₂)", &[ba, ba, bh], |t| {
        let (x, y) = (a.basis(t[0]), a.basis(t[1]));
        let mut rhs = a.zero_vec();
        for (i, j, c) in h.basis_coproduct(t[2]) {
            let p = a.mul(&act.act_right(&x, &h.basis(*i)), &act.act_right(&y, &h.basis(*j)));
            crate::hopf::add_scaled(&mut rhs, &p, c);
        }
        (v(act.act_right(&a.mul(&x, &y), &h.basis(t[2]))), v(rhs))
    });
    r.check("right-unit-preserving", "1◁h = ε(h)1", &[bh], |t| {
        (v(act.act_right(a.unit(), &h.basis(t[0]))), v(crate::hopf::scaled(a.unit(), &h.counit()[t[0]])))
    });
    r.check("left-coalgebra", "Δ(h▷a) = h₁▷a₁ ⊗ h₂▷a₂", &[bh, ba], |t| {
        let mut rhs = SparseTensor::zeros(vec![a.dim(), a.dim()]);
        for (h1, h2, c) in h.basis_coproduct(t[0]) {
            for (a1, a2, d) in a.basis_coproduct(t[1]) {
                let l = act.act_left(&h.basis(*h1), &a.basis(*a1));
                let rr = act.act_left(&h.basis(*h2), &a.basis(*a2));
                rhs.add_outer(&[&l, &rr], &(c.clone() * d.clone()));
            }
        }
        (a.comult_of(&act.act_left(&h.basis(t[0]), &a.basis(t[1]))), rhs)
    });
    r.check("right-coalgebra", "Δ(a◁h) = a₁◁h₁ ⊗ a₂◁h₂", &[ba, bh], |t| {
        let mut rhs = SparseTensor::zeros(vec![a.dim(), a.dim()]);
        for (a1, a2, d) in a.basis_coproduct(t[0]) {
            for (h1, h2, c) in h.basis_coproduct(t[1]) {
                let l = act.act_right(&a.basis(*a1), &h.basis(*h1));
                let rr = act.act_right(&a.basis(*a2), &h.basis(*h2));
                rhs.add_outer(&[&l, &rr], &(c.clone() * d.clone()));
            }
        }
        (a.comult_of(&act.act_right(&a.basis(t[0]), &h.basis(t[1]))), rhs)
    });
    r.check("counit-compat", "ε(h▷a) = ε(a)ε(h) = ε(a◁h)", &[bh, ba], |t| {
        let (k, x) = (h.basis(t[0]), a.basis(t[1]));
        let e = a.counit()[t[1]].clone() * h.counit()[t[0]].clone();
        (
            v(vec![a.counit_of(&act.act_left(&k, &x)), a.counit_of(&act.act_right(&x, &k))]),
            v(vec![e.clone(), e]),
        )
    });
    r
}

/// Checks `S_A(h▷a) = h▷S_A(a)` and `S_A(a◁h) = S_A(a)◁h` on all basis pairs.
pub fn verify_antipode_bilinear<F: Scalar>(act: &BimoduleAction<F>) -> VerificationReport {
    let (h, a) = (&*act.h, &*act.a);
    let (bh, ba) = (h.labels(), a.labels());
    let v = |x: Vec<F>| SparseTensor::vector(&x);
    let mut r = VerificationReport::new("antipode bilinearity");
    r.check("left-antipode-linear", "S_A(h▷a) = h▷S_A(a)", &[bh, ba], |t| {
        let k = h.basis(t[0]);
        (
            v(a.antipode_of(&act.act_left(&k, &a.basis(t[1])))),
            v(act.act_left(&k, &a.antipode().image(t[1]))),
        )
    });
    r.check("right-antipode-linear", "S_A(a◁h) = S_A(a)◁h", &[ba, bh], |t| {
        let k = h.basis(t[1]);
        (
            v(a.antipode_of(&act.act_right(&a.basis(t[0]), &k))),
            v(act.act_right(&a.antipode().image(t[0]), &k)),
        )
    });
    r
}

/// `ρˡ(c) = c₍₋₁₎ ⊗ c₍₀₎` and `ρʳ(c) = c₍₀₎' ⊗ c₍₁₎` as structure tensors.
///
/// * `left[c, h, c']`: coefficient of `e_h ⊗ e_{c'}` in `ρˡ(e_c)`
/// * `right[c, c', h]`: coefficient of `e_{c'} ⊗ e_h` in `ρʳ(e_c)`
#[derive(Debug, Clone)]
pub struct BicomoduleCoaction<F> {
    h: Arc<FiniteHopfAlgebra<F>>,
    c: Arc<FiniteHopfAlgebra<F>>,
    left: SparseTensor<F>,
    right: SparseTensor<F>,
    left_terms: Vec<Vec<(usize, usize, F)>>,
    right_terms: Vec<Vec<(usize, usize, F)>>,
}

impl<F: Scalar> BicomoduleCoaction<F> {
    /// Checks shapes only; the axioms are checked by [`verify_bicomodule_bialgebra`].
    pub fn new(
        h: Arc<FiniteHopfAlgebra<F>>,
        c: Arc<FiniteHopfAlgebra<F>>,
        left: SparseTensor<F>,
        right: SparseTensor<F>,
    ) -> Result<Self, TensorError> {
        let (nh, nc) = (h.dim(), c.dim());
        expect_dims(&left, &[nc, nh, nc], "left coaction")?;
        expect_dims(&right, &[nc, nc, nh], "right coaction")?;
        let mut left_terms = vec![Vec::new(); nc];
        for (k, x) in left.iter() {
            left_terms[k[0]].push((k[1], k[2], x.clone()));
        }
        let mut right_terms = vec![Vec::new(); nc];
        for (k, x) in right.iter() {
            right_terms[k[0]].push((k[1], k[2], x.clone()));
        }
        Ok(BicomoduleCoaction { h, c, left, right, left_terms, right_terms })
    }

    /// `ρˡ(c) = 1⊗c` and `ρʳ(c) = c⊗1`.
    pub fn trivial(h: Arc<FiniteHopfAlgebra<F>>, c: Arc<FiniteHopfAlgebra<F>>) -> Self {
        let left = trivial_coaction(&h, &c, false);
        let right = trivial_coaction(&h, &c, true);
        Self::new(h, c, left, right).expect("trivial coaction shapes")
    }

    /// The same left coaction with the right coaction made trivial.
    pub fn with_trivial_right(&self) -> Self {
        let right = trivial_coaction(&self.h, &self.c, true);
        Self::new(self.h.clone(), self.c.clone(), self.left.clone(), right).expect("shapes unchanged")
    }

    pub fn hopf(&self) -> &Arc<FiniteHopfAlgebra<F>> {
        &self.h
    }

    pub fn coalgebra(&self) -> &Arc<FiniteHopfAlgebra<F>> {
        &self.c
    }

    pub fn left_tensor(&self) -> &SparseTensor<F> {
        &self.left
    }

    pub fn right_tensor(&self) -> &SparseTensor<F> {
        &self.right
    }

    /// `ρˡ(e_c)` as `(h, c', coefficient)` triples.
    pub fn left_basis(&self, c: usize) -> &[(usize, usize, F)] {
        &self.left_terms[c]
    }

    /// `ρʳ(e_c)` as `(c', h, coefficient)` triples.
    pub fn right_basis(&self, c: usize) -> &[(usize, usize, F)] {
        &self.right_terms[c]
    }

    /// `ρˡ(x)` as a tensor on `H ⊗ C`.
    pub fn coact_left(&self, x: &[F]) -> SparseTensor<F> {
        SparseTensor::vector(x).split_leg(0, (self.h.dim(), self.c.dim()), |i| self.left_terms[i].clone())
    }

    /// `ρʳ(x)` as a tensor on `C ⊗ H`.
    pub fn coact_right(&self, x: &[F]) -> SparseTensor<F> {
        SparseTensor::vector(x).split_leg(0, (self.c.dim(), self.h.dim()), |i| self.right_terms[i].clone())
    }

    pub fn is_right_trivial(&self) -> bool {
        self.right == trivial_coaction(&self.h, &self.c, true)
    }

    pub fn is_left_trivial(&self) -> bool {
        self.left == trivial_coaction(&self.h, &self.c, false)
    }
}

fn trivial_coaction<F: Scalar>(h: &FiniteHopfAlgebra<F>, c: &FiniteHopfAlgebra<F>, right: bool) -> SparseTensor<F> {
    let (nh, nc) = (h.dim(), c.dim());
    let dims = if right { vec![nc, nc, nh] } else { vec![nc, nh, nc] };
    let mut t = SparseTensor::zeros(dims);
    for (i, u) in h.unit().iter().enumerate() {
        for j in 0..nc {
            let idx = if right { vec![j, j, i] } else { vec![j, i, j] };
            t.add_at(idx, u.clone());
        }
    }
    t
}

/// Checks the comodule, bicomodule algebra and bicomodule coalgebra axioms on all basis tuples.
pub fn verify_bicomodule_bialgebra<F: Scalar>(co: &BicomoduleCoaction<F>) -> VerificationReport {
    let (h, c) = (&*co.h, &*co.c);
    let (nh, nc) = (h.dim(), c.dim());
    let bc = c.labels();
    let lt = |i: usize| co.left_terms[i].clone();
    let rt = |i: usize| co.right_terms[i].clone();
    let hco = |i: usize| h.basis_coproduct(i).to_vec();
    let cco = |i: usize| c.basis_coproduct(i).to_vec();
    let mut r = VerificationReport::new("bicomodule bialgebra");

    r.check("left-coassoc", "(Δ⊗id)ρˡ = (id⊗ρˡ)ρˡ", &[bc], |t| {
        let rho = co.coact_left(&c.basis(t[0]));
        (rho.split_leg(0, (nh, nh), hco), rho.split_leg(1, (nh, nc), lt))
    });
    r.check("left-counit", "(ε⊗id)ρˡ = id", &[bc], |t| {
        (co.coact_left(&c.basis(t[0])).contract_leg(0, h.counit()), SparseTensor::basis_vector(nc, t[0]))
    });
    r.check("right-coassoc", "(ρʳ⊗id)ρʳ = (id⊗Δ)ρʳ", &[bc], |t| {
        let rho = co.coact_right(&c.basis(t[0]));
        (rho.split_leg(0, (nc, nh), rt), rho.split_leg(1, (nh, nh), hco))
    });
    r.check("right-counit", "(id⊗ε)ρʳ = id", &[bc], |t| {
        (co.coact_right(&c.basis(t[0])).contract_leg(1, h.counit()), SparseTensor::basis_vector(nc, t[0]))
    });
    r.check("bicomodule-compat", "(ρˡ⊗id)ρʳ = (id⊗ρʳ)ρˡ", &[bc], |t| {
        let x = c.basis(t[0]);
        (
            co.coact_right(&x).split_leg(0, (nh, nc), lt),
            co.coact_left(&x).split_leg(1, (nc, nh), rt),
        )
    });
    r.check("left-multiplicative", "(ab)₍₋₁₎⊗(ab)₍₀₎ = a₍₋₁₎b₍₋₁₎⊗a₍₀₎b₍₀₎", &[bc, bc], |t| {
        let (x, y) = (c.basis(t[0]), c.basis(t[1]));
        (co.coact_left(&c.mul(&x, &y)), legwise_product(&co.coact_left(&x), &co.coact_left(&y), &[h, c]))
    });
    r.check("right-multiplicative", "(ab)₍₀₎'⊗(ab)₍₁₎ = a₍₀₎'b₍₀₎'⊗a₍₁₎b₍₁₎", &[bc, bc], |t| {
        let (x, y) = (c.basis(t[0]), c.basis(t[1]));
        (co.coact_right(&c.mul(&x, &y)), legwise_product(&co.coact_right(&x), &co.coact_right(&y), &[c, h]))
    });
    r.check("left-unit", "ρˡ(1) = 1⊗1", &[], |_| {
        let mut one = SparseTensor::zeros(vec![nh, nc]);
        one.add_outer(&[h.unit(), c.unit()], &F::one());
        (co.coact_left(c.unit()), one)
    });
    r.check("right-unit", "ρʳ(1) = 1⊗1", &[], |_| {
        let mut one = SparseTensor::zeros(vec![nc, nh]);
        one.add_outer(&[c.unit(), h.unit()], &F::one());
        (co.coact_right(c.unit()), one)
    });
    r.check("left-comult", "c₍₋₁₎⊗c₍₀₎₁⊗c₍₀₎₂ = c₁₍₋₁₎c₂₍₋₁₎⊗c₁₍₀₎⊗c₂₍₀₎", &[bc], |t| {
        let x = c.basis(t[0]);
        let lhs = co.coact_left(&x).split_leg(1, (nc, nc), cco);
        // Δ(c) → [h, c1, h, c2] → multiply the two H legs.
        let rhs = c
            .comult_of(&x)
            .split_leg(0, (nh, nc), lt)
            .split_leg(2, (nh, nc), lt)
            .merge_legs(0, 2, nh, |i, j| h.basis_product(i, j).to_vec());
        (lhs, rhs)
    });
    r.check("right-comult", "c₍₀₎'₁⊗c₍₀₎'₂⊗c₍₁₎ = c₁₍₀₎'⊗c₂₍₀₎'⊗c₁₍₁₎c₂₍₁₎", &[bc], |t| {
        let x = c.basis(t[0]);
        let lhs = co.coact_right(&x).split_leg(0, (nc, nc), cco);
        // Δ(c) → [c1, h, c2, h] → [c1, c2, h].
        let rhs = c
            .comult_of(&x)
            .split_leg(0, (nc, nh), rt)
            .split_leg(2, (nc, nh), rt)
            .merge_legs(1, 3, nh, |i, j| h.basis_product(i, j).to_vec())
            .permute(&[0, 2, 1])
            .expect("arity 3");
        (lhs, rhs)
    });
    r.check("left-counit-compat", "ε(c₍₀₎)c₍₋₁₎ = ε(c)1", &[bc], |t| {
        (
            co.coact_left(&c.basis(t[0])).contract_leg(1, c.counit()),
            SparseTensor::vector(&crate::hopf::scaled(h.unit(), &c.counit()[t[0]])),
        )
    });
    r.check("right-counit-compat", "ε(c₍₀₎')c₍₁₎ = ε(c)1", &[bc], |t| {
        (
            co.coact_right(&c.basis(t[0])).contract_leg(0, c.counit()),
            SparseTensor::vector(&crate::hopf::scaled(h.unit(), &c.counit()[t[0]])),
        )
    });
    r
}

/// Checks `ρˡ∘S_C = (id⊗S_C)∘ρˡ` and `ρʳ∘S_C = (S_C⊗id)∘ρʳ` on all basis elements.
pub fn verify_antipode_bicolinear<F: Scalar>(co: &BicomoduleCoaction<F>) -> VerificationReport {
    let c = &*co.c;
    let nc = c.dim();
    let s = |i: usize| c.antipode().column(i).to_vec();
    let mut r = VerificationReport::new("antipode bicolinearity");
    r.check("left-antipode-colinear", "ρˡ(S_C(c)) = c₍₋₁₎⊗S_C(c₍₀₎)", &[c.labels()], |t| {
        (co.coact_left(&c.antipode().image(t[0])), co.coact_left(&c.basis(t[0])).map_leg(1, nc, s))
    });
    r.check("right-antipode-colinear", "ρʳ(S_C(c)) = S_C(c₍₀₎')⊗c₍₁₎", &[c.labels()], |t| {
        (co.coact_right(&c.antipode().image(t[0])), co.coact_right(&c.basis(t[0])).map_leg(0, nc, s))
    });
    r
}

/// Transposes an action into a coaction of `H*` on `A*`:
/// `ρˡ(c; h, c') = ▷(h, c'; c)` and `ρʳ(c; c', h) = ◁(c', h; c)`.
///
/// Both algebras must be Hopf algebras and the action must pass [`verify_bimodule_bialgebra`].
pub fn dualize_action<F: Scalar>(act: &BimoduleAction<F>) -> Result<BicomoduleCoaction<F>, crate::Error> {
    crate::require(verify_bimodule_bialgebra(act), "dualize_action needs a verified bimodule bialgebra")?;
    let h = Arc::new(linear_dual(&act.h)?);
    let c = Arc::new(linear_dual(&act.a)?);
    let left = act.left.permute(&[2, 0, 1])?;
    let right = act.right.permute(&[2, 0, 1])?;
    Ok(BicomoduleCoaction::new(h, c, left, right)?)
}

/// Transposes a coaction back into an action of `H*` on `C*`; inverse of [`dualize_action`].
pub fn dualize_coaction<F: Scalar>(co: &BicomoduleCoaction<F>) -> Result<BimoduleAction<F>, crate::Error> {
    crate::require(verify_bicomodule_bialgebra(co), "dualize_coaction needs a verified bicomodule bialgebra")?;
    let h = Arc::new(linear_dual(&co.h)?);
    let a = Arc::new(linear_dual(&co.c)?);
    let left = co.left.permute(&[1, 2, 0])?;
    let right = co.right.permute(&[1, 2, 0])?;
    Ok(BimoduleAction::new(h, a, left, right)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::group::FiniteGroup;
    use crate::hopf::{build_dual_group_algebra, build_group_algebra};
    use crate::scalar::Rational;

    type Q = Rational;

    #[test]
    fn example_action_is_bimodule_hopf() {
        let act = fixtures::example_action::<Q>();
        let r = verify_bimodule_bialgebra(&act);
        assert!(r.passed(), "{r}");
        assert!(verify_antipode_bilinear(&act).passed());
    }

    #[test]
    fn trivial_action_passes_everywhere() {
        for g in [FiniteGroup::cyclic(2, "g"), FiniteGroup::symmetric(3)] {
            let h = Arc::new(build_group_algebra::<Q>(&g));
            let a = Arc::new(build_dual_group_algebra::<Q>(&FiniteGroup::cyclic(3, "h")));
            let act = BimoduleAction::trivial(h, a);
            assert!(verify_bimodule_bialgebra(&act).passed());
            assert!(verify_antipode_bilinear(&act).passed());
            assert!(act.is_left_trivial() && act.is_right_trivial());
        }
    }

    #[test]
    fn broken_right_action_is_caught() {
        let act = fixtures::example_action::<Q>();
        let (a, h) = (act.algebra(), act.hopf());
        // h ◁ g redefined to h: now h and h² both go to h under g.
        let mut right = act.right_tensor().clone();
        right.add_at(vec![1, 1, 2], -Q::from_i64(1));
        right.add_at(vec![1, 1, 1], Q::from_i64(1));
        let bad = BimoduleAction::new(h.clone(), a.clone(), act.left_tensor().clone(), right).unwrap();
        let r = verify_bimodule_bialgebra(&bad);
        assert!(!r.passed());
        assert!(r.failures().all(|c| c.witness.is_some()));
    }

    #[test]
    fn example_coaction_is_bicomodule_hopf() {
        let co = fixtures::example_coaction::<Q>();
        let r = verify_bicomodule_bialgebra(&co);
        assert!(r.passed(), "{r}");
        assert!(verify_antipode_bicolinear(&co).passed());
        assert!(co.is_left_trivial());
    }

    #[test]
    fn swapped_right_coaction_fails() {
        let co = fixtures::example_coaction::<Q>();
        // ρʳ(q_h) = q_h⊗p_g + q_{h²}⊗p_1
        let mut right = co.right_tensor().clone();
        right.add_at(vec![1, 1, 0], -Q::from_i64(1));
        right.add_at(vec![1, 2, 1], -Q::from_i64(1));
        right.add_at(vec![1, 1, 1], Q::from_i64(1));
        right.add_at(vec![1, 2, 0], Q::from_i64(1));
        let bad = BicomoduleCoaction::new(co.hopf().clone(), co.coalgebra().clone(), co.left_tensor().clone(), right)
            .unwrap();
        let r = verify_bicomodule_bialgebra(&bad);
        assert!(!r.passed());
        assert!(r.failures().all(|c| c.witness.is_some()));
    }

    #[test]
    fn trivial_coaction_passes() {
        let h = Arc::new(build_dual_group_algebra::<Q>(&FiniteGroup::symmetric(3)));
        let c = Arc::new(build_dual_group_algebra::<Q>(&FiniteGroup::cyclic(3, "h")));
        let co = BicomoduleCoaction::trivial(h, c);
        assert!(verify_bicomodule_bialgebra(&co).passed());
        assert!(verify_antipode_bicolinear(&co).passed());
    }

    #[test]
    fn dualized_example_action_is_the_example_coaction() {
        let act = fixtures::example_action::<Q>();
        let co = dualize_action(&act).unwrap();
        assert!(verify_bicomodule_bialgebra(&co).passed());
        let expected = fixtures::example_coaction::<Q>();
        assert_eq!(co.left_tensor(), expected.left_tensor());
        assert_eq!(co.right_tensor(), expected.right_tensor());
        assert_eq!(**co.hopf(), **expected.hopf());
    }

    #[test]
    fn double_dualization_returns_the_action() {
        let act = fixtures::example_action::<Q>();
        let back = dualize_coaction(&dualize_action(&act).unwrap()).unwrap();
        assert_eq!(back.left_tensor(), act.left_tensor());
        assert_eq!(back.right_tensor(), act.right_tensor());
    }

    #[test]
    fn dualized_trivial_action_is_trivial() {
        let h = Arc::new(build_group_algebra::<Q>(&FiniteGroup::cyclic(2, "g")));
        let a = Arc::new(build_group_algebra::<Q>(&FiniteGroup::cyclic(3, "h")));
        let co = dualize_action(&BimoduleAction::trivial(h, a)).unwrap();
        assert!(co.is_left_trivial() && co.is_right_trivial());
    }
}
