//! Sweedler-style expressions evaluated on tensors with named legs.
//!
//! Each Sweedler component is one leg; products, actions and coactions
//! merge or split legs by name, and [`Legs::finish`] orders the survivors.

use crate::action::{BicomoduleCoaction, BimoduleAction};
use crate::hopf::FiniteHopfAlgebra;
use crate::operator::LinearOperator;
use crate::scalar::Scalar;
use crate::tensor::SparseTensor;

pub(crate) struct Legs<F> {
    t: SparseTensor<F>,
    names: Vec<String>,
}

impl<F: Scalar> Legs<F> {
    pub fn vector(name: &str, v: &[F]) -> Self {
        Legs { t: SparseTensor::vector(v), names: vec![name.to_string()] }
    }

    fn pos(&self, name: &str) -> usize {
        self.names
            .iter()
            .position(|n| n == name)
            .unwrap_or_else(|| panic!("no leg named {name} among {:?}", self.names))
    }

    /// Appends a leg holding `v`.
    pub fn with(mut self, name: &str, v: &[F]) -> Self {
        self.t = self.t.outer(&SparseTensor::vector(v));
        self.names.push(name.to_string());
        self
    }

    pub fn map(mut self, name: &str, dim: usize, image: impl Fn(usize) -> Vec<(usize, F)>) -> Self {
        let p = self.pos(name);
        self.t = self.t.map_leg(p, dim, image);
        self
    }

    pub fn op(self, name: &str, op: &LinearOperator<F>) -> Self {
        let d = op.codim();
        self.map(name, d, |i| op.column(i).to_vec())
    }

    /// Applies several operators in turn.
    pub fn ops(self, name: &str, ops: &[&LinearOperator<F>]) -> Self {
        ops.iter().fold(self, |l, o| l.op(name, o))
    }

    pub fn split(
        mut self,
        name: &str,
        dims: (usize, usize),
        into: (&str, &str),
        image: impl Fn(usize) -> Vec<(usize, usize, F)>,
    ) -> Self {
        let p = self.pos(name);
        self.t = self.t.split_leg(p, dims, image);
        self.names[p] = into.0.to_string();
        self.names.insert(p + 1, into.1.to_string());
        self
    }

    /// Iterated comultiplication of one leg into `into.len()` legs.
    pub fn delta(self, name: &str, h: &FiniteHopfAlgebra<F>, into: &[&str]) -> Self {
        let n = h.dim();
        let mut l = self;
        let mut current = name.to_string();
        for k in 0..into.len() - 1 {
            let rest = if k + 2 == into.len() { into[k + 1].to_string() } else { format!("{name}#{k}") };
            l = l.split(&current, (n, n), (into[k], &rest), |i| h.basis_coproduct(i).to_vec());
            current = rest;
        }
        l
    }

    fn merge(
        mut self,
        first: &str,
        second: &str,
        into: &str,
        dim: usize,
        product: impl Fn(usize, usize) -> Vec<(usize, F)>,
    ) -> Self {
        let (p, q) = (self.pos(first), self.pos(second));
        self.t = self.t.merge_legs(p, q, dim, product);
        self.names[p] = into.to_string();
        self.names.remove(q);
        self
    }

    /// Multiplies the named legs left to right into `into`.
    pub fn mul(self, factors: &[&str], h: &FiniteHopfAlgebra<F>, into: &str) -> Self {
        let mut l = self;
        let mut acc = factors[0].to_string();
        for f in &factors[1..] {
            l = l.merge(&acc, f, into, h.dim(), |i, j| h.basis_product(i, j).to_vec());
            acc = into.to_string();
        }
        if factors.len() == 1 {
            let p = l.pos(&acc);
            l.names[p] = into.to_string();
        }
        l
    }

    /// `h ▷ a`, the result replacing the `a` leg under the name `into`.
    pub fn act_left(self, h: &str, a: &str, act: &BimoduleAction<F>, into: &str) -> Self {
        let d = act.algebra().dim();
        self.merge(a, h, into, d, |x, y| act.left_basis(y, x).to_vec())
    }

    /// `a ◁ h`, the result replacing the `a` leg under the name `into`.
    pub fn act_right(self, a: &str, h: &str, act: &BimoduleAction<F>, into: &str) -> Self {
        let d = act.algebra().dim();
        self.merge(a, h, into, d, |x, y| act.right_basis(x, y).to_vec())
    }

    /// `c ↦ c₍₋₁₎ ⊗ c₍₀₎`.
    pub fn coact_left(self, c: &str, co: &BicomoduleCoaction<F>, into: (&str, &str)) -> Self {
        let dims = (co.hopf().dim(), co.coalgebra().dim());
        self.split(c, dims, into, |i| co.left_basis(i).to_vec())
    }

    /// `c ↦ c₍₀₎' ⊗ c₍₁₎`.
    pub fn coact_right(self, c: &str, co: &BicomoduleCoaction<F>, into: (&str, &str)) -> Self {
        let dims = (co.coalgebra().dim(), co.hopf().dim());
        self.split(c, dims, into, |i| co.right_basis(i).to_vec())
    }

    /// The tensor with legs in the given order; every remaining leg must be named.
    pub fn finish(self, order: &[&str]) -> SparseTensor<F> {
        assert_eq!(order.len(), self.names.len(), "legs left: {:?}", self.names);
        let perm: Vec<usize> = order.iter().map(|n| self.pos(n)).collect();
        self.t.permute(&perm).expect("permutation of the legs")
    }
}
