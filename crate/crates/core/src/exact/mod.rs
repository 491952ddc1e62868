//! Exact rational linear algebra: matrices, Gauss-Jordan elimination and
//! structural-equivalence witnesses `M′ = B⁻¹ M P Δ`.

mod equiv;
mod mat;
mod rat;
mod text;

pub use equiv::{apply_equiv, verify_equiv, EquivWitness};
pub use mat::Mat;
pub use rat::{
    dot, format_rat, inf_norm, normalize_min_one, parse_rat, primitive_integer_vector, rat,
    rat_vec, ratio, Rat,
};
pub use text::{parse_matrix, read_matrix_file};

use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("witness basis is singular")]
    SingularBasis,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("malformed rational token {0:?}")]
    BadToken(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

/// Output of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// Reduced row-echelon form `basis_change⁻¹ · M`.
    pub reduced: Mat,
    /// Pivot columns in increasing order; their count is the rank.
    pub pivots: Vec<usize>,
    /// Nonsingular `B` with `M = B · reduced`.
    pub basis_change: Mat,
}

/// Gauss-Jordan elimination with lowest-index pivoting.
pub fn rref(m: &Mat) -> Rref {
    let (n, cols) = m.shape();
    let mut r = m.clone();
    let mut b = Mat::identity(n);
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        if row == n {
            break;
        }
        let Some(p) = (row..n).find(|&i| !r[(i, c)].is_zero()) else {
            continue;
        };
        if p != row {
            r.swap_rows(row, p);
            b.swap_columns(row, p);
        }
        let piv = r[(row, c)].clone();
        if !piv.is_one() {
            r.scale_row(row, &piv.recip());
            b.scale_column(row, &piv);
        }
        for i in 0..n {
            if i == row || r[(i, c)].is_zero() {
                continue;
            }
            let f = -r[(i, c)].clone();
            r.add_row_multiple(i, row, &f);
            // B ← B (I − f e_i e_rowᵀ): column `row` -= f · column `i`.
            for k in 0..n {
                let delta = &b[(k, i)] * &f;
                b[(k, row)] -= delta;
            }
        }
        pivots.push(c);
        row += 1;
    }
    Rref {
        reduced: r,
        pivots,
        basis_change: b,
    }
}

/// Completes the linearly independent columns `vecs` (length-`n` vectors)
/// to a basis of `Qⁿ` with unit vectors, returning the basis matrix with
/// `vecs` as its leading columns.
pub fn complete_basis(n: usize, vecs: &[Vec<Rat>]) -> Mat {
    let mut cols: Vec<Vec<Rat>> = vecs.to_vec();
    let mut rank = Mat::from_columns(n, &cols).rank();
    debug_assert_eq!(rank, vecs.len(), "vectors are not independent");
    for i in 0..n {
        if cols.len() == n {
            break;
        }
        let mut e = vec![Rat::zero(); n];
        e[i] = Rat::one();
        cols.push(e);
        let r = Mat::from_columns(n, &cols).rank();
        if r > rank {
            rank = r;
        } else {
            cols.pop();
        }
    }
    Mat::from_columns(n, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_rank_one() {
        let m = Mat::from_ints(&[[2, 4], [1, 2]]);
        let r = rref(&m);
        assert_eq!(r.reduced, Mat::from_ints(&[[1, 2], [0, 0]]));
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(&r.basis_change * &r.reduced, m);
    }

    #[test]
    fn rref_identity() {
        let r = rref(&Mat::identity(3));
        assert_eq!(r.reduced, Mat::identity(3));
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.basis_change, Mat::identity(3));
    }

    #[test]
    fn rref_zero_matrix() {
        let r = rref(&Mat::zeros(2, 3));
        assert!(r.pivots.is_empty());
        assert_eq!(r.basis_change, Mat::identity(2));
    }

    #[test]
    fn complete_basis_appends_units() {
        let b = complete_basis(3, &[rat_vec(&[1, 1, 0])]);
        assert!(b.is_nonsingular());
        assert_eq!(b.column(0), rat_vec(&[1, 1, 0]));
    }
}
