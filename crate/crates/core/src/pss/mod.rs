//! Positive spanning: Stiemke and Gordan alternatives, circuits, negative
//! row echelon matrices and the IN/INA decomposition.

mod alternatives;
mod circuit;
mod decompose;
mod nem;
mod simplex;

pub use alternatives::{
    acyclic_positive_form, gordan_alternative, is_acyclic, is_pss, stiemke_alternative,
    GordanOutcome, SpanVerdict, StiemkeOutcome,
};
pub use circuit::{
    canonical_pss_form, find_circuit, find_circuit_with_combination, is_circuit,
    non_acyclic_witness, CanonicalPss, NonAcyclicWitness,
};
pub use decompose::{decompose_in_ina, Decomposition, InForm, InaForm};
pub use nem::{nem_positive_combination, validate_nem, NemShape};

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exact::{ExactError, Mat, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PssError {
    #[error("matrix is not a positive spanning set of its span")]
    NotPss,
    #[error("matrix is acyclic")]
    IsAcyclic,
    #[error("matrix is not a negative row echelon matrix")]
    NotNem,
    #[error("matrix is zero")]
    ZeroMatrix,
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("self-check failed: {0}")]
    SelfCheck(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Strictly positive `x` with `D x = 0`, scaled so that `min x = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveCombination {
    pub x: Vec<Rat>,
}

impl PositiveCombination {
    pub fn verify(&self, d: &Mat) -> bool {
        self.x.len() == d.cols()
            && self.x.iter().all(Signed::is_positive)
            && d.mul_vec(&self.x).iter().all(Zero::is_zero)
    }
}

/// `y` with `yᵀD ≥ 0` and `yᵀD ≠ 0`: the columns of `D` do not positively
/// span their own span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingVector {
    pub y: Vec<Rat>,
}

impl SeparatingVector {
    pub fn verify(&self, d: &Mat) -> bool {
        if self.y.len() != d.rows() {
            return false;
        }
        let p = d.left_mul_vec(&self.y);
        p.iter().all(|v| !v.is_negative()) && p.iter().any(Signed::is_positive)
    }
}

/// `y` with `yᵀA ≥ 1` componentwise: `A` is acyclic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GordanVector {
    pub y: Vec<Rat>,
}

impl GordanVector {
    pub fn verify(&self, a: &Mat) -> bool {
        self.y.len() == a.rows()
            && self.y.iter().any(|v| !v.is_zero())
            && a.left_mul_vec(&self.y)
                .iter()
                .all(|v| *v >= Rat::from_integer(1.into()))
    }
}
