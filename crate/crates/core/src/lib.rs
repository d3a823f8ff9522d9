//! Exact computations with finite-dimensional Hopf algebras given by structure
//! constants: L-R smash products and coproducts, Rota-Baxter operators and
//! co-operators, their lifts, and brute-force oracles for all of them.
//!
//! Everything is generic over an exact [`Scalar`]; [`Q`] and [`Fp`] are the
//! two provided fields.

pub mod action;
pub mod fixtures;
pub mod format;
pub mod group;
pub mod hopf;
pub mod operator;
pub mod report;
pub mod rota_baxter;
pub mod scalar;
pub mod search;
pub mod smash;
pub mod tensor;
pub mod worked;

use thiserror::Error;

pub use action::{BicomoduleCoaction, BimoduleAction};
pub use group::{FiniteGroup, GroupError};
pub use hopf::{FiniteHopfAlgebra, HopfError};
pub use operator::LinearOperator;
pub use report::{Check, VerificationReport, Witness};
pub use smash::{lr_smash_coproduct, lr_smash_product, SmashCoproductAlgebra, SmashProductAlgebra};
pub use rota_baxter::{RBKind, RBOperatorCandidate};
pub use scalar::{FieldKind, Fp, Rational, Scalar, ScalarError};
pub use tensor::{SparseTensor, TensorError};

pub type Q = Rational;
pub type HopfAlgebraQ = FiniteHopfAlgebra<Q>;
pub type OperatorQ = LinearOperator<Q>;
pub type TensorQ = SparseTensor<Q>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    /// A required hypothesis failed; the report says which one and where.
    #[error("precondition failed: {context}")]
    Precondition { context: String, report: Box<VerificationReport> },
    #[error("{0}")]
    KindMismatch(String),
    #[error("{0} is not cocommutative")]
    NotCocommutative(String),
    #[error("{0} is not commutative")]
    NotCommutative(String),
    #[error("size {size} exceeds the bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// The report attached to a precondition failure.
    pub fn report(&self) -> Option<&VerificationReport> {
        match self {
            Error::Precondition { report, .. } => Some(report),
            _ => None,
        }
    }
}

/// Wraps a failed report as a precondition error.
pub(crate) fn require(report: VerificationReport, context: impl Into<String>) -> Result<(), Error> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Precondition { context: context.into(), report: Box::new(report) })
    }
}
