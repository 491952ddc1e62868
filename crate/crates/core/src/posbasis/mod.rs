//! Positive bases: critical vectors, the critical structure of an IN matrix,
//! recognition, generators and the canonical forms of sizes `2ℓ − 1` and
//! `ℓ + 2`.

mod critical;
mod generate;
mod near_extreme;
mod recognize;
mod structure;

pub use critical::{
    is_critical_matrix_low_dim, is_critical_vector, replacement_oracle, CriticalCone,
    CriticalVerdict,
};
pub use generate::{
    gen_maximal_pb, gen_minimal_pb, gen_pb_2l_minus_1, gen_pb_l_plus_2, random_pb_2l_minus_1,
    random_pb_l_plus_2, random_x_entry,
};
pub use near_extreme::{reduce_to_near_extreme_form, NearExtremeForm};
pub use recognize::{
    is_positive_basis, removal_oracle, BasisMethod, BasisWitness, ColumnNecessity, PosBasisReport,
    RemovalOutcome,
};
pub use structure::{critical_structure, normalize_two_row_blocks, CriticalStructure};

use thiserror::Error;

use crate::pss::PssError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosBasisError {
    #[error("critical vectors need dimension at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("criticality is only decided for 1 or 2 rows, got {0}")]
    UnsupportedDimension(usize),
    #[error("malformed IN form: {0}")]
    MalformedInForm(String),
    #[error("matrix is not a positive basis")]
    NotPositiveBasis,
    #[error("bad dimensions: {0}")]
    BadDimensions(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error(transparent)]
    Pss(#[from] PssError),
}
