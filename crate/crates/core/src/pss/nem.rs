use num_traits::{One, Signed, Zero};

use super::{PositiveCombination, PssError};
use crate::exact::{inf_norm, normalize_min_one, rat, Mat, Rat};

/// Breakpoints of a negative row echelon matrix.
///
/// `starts[j]` is the 0-based row where the `−1` run of column `j` begins,
/// so `starts[0] == 0` and the sequence is strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NemShape {
    pub s: usize,
    pub starts: Vec<usize>,
}

impl NemShape {
    /// Breakpoints `z₀ = 1 < z₁ < … < z_{s−1}` in 1-based row numbering.
    pub fn breakpoints(&self) -> Vec<usize> {
        self.starts.iter().map(|z| z + 1).collect()
    }

    /// Row counts of the blocks delimited by the breakpoints of an `n`-row NEM.
    pub fn block_sizes(&self, n: usize) -> Vec<usize> {
        let mut ends: Vec<usize> = self.starts[1..].to_vec();
        ends.push(n);
        self.starts.iter().zip(ends).map(|(a, b)| b - a).collect()
    }
}

/// Recognizes a negative row echelon matrix and returns its unique shape.
pub fn validate_nem(n_mat: &Mat) -> Option<NemShape> {
    let (n, s) = n_mat.shape();
    if s == 0 || s > n {
        return None;
    }
    let minus_one = -Rat::one();
    let mut starts = vec![0];
    for j in 0..s - 1 {
        let z = starts[j];
        let end = (z..n).find(|&i| n_mat[(i, j)] != minus_one).unwrap_or(n);
        if end == z || end >= n {
            return None;
        }
        if (end..n).any(|i| !n_mat[(i, j)].is_zero()) {
            return None;
        }
        starts.push(end);
    }
    let last = starts[s - 1];
    if (last..n).any(|i| n_mat[(i, s - 1)] != minus_one) {
        return None;
    }
    Some(NemShape { s, starts })
}

/// Positive `x` with `[Iₙ N] x = 0`, built from the recursion
/// `w₁ = u_s`, `w_{i+1} = w_i + 2‖w_i‖∞ u_{s−i}`.
pub fn nem_positive_combination(n_mat: &Mat) -> Result<PositiveCombination, PssError> {
    let shape = validate_nem(n_mat).ok_or(PssError::NotNem)?;
    let s = shape.s;
    let u: Vec<Vec<Rat>> = n_mat.columns();
    let mut coef = vec![Rat::zero(); s];
    coef[s - 1] = Rat::one();
    let mut w = u[s - 1].clone();
    for i in 1..s {
        let c = rat(2) * inf_norm(&w);
        for (wk, uk) in w.iter_mut().zip(&u[s - 1 - i]) {
            *wk += &c * uk;
        }
        coef[s - 1 - i] = c;
    }
    if !w.iter().all(Signed::is_negative) {
        return Err(PssError::SelfCheck(
            "recursion did not produce a negative vector".into(),
        ));
    }
    let x: Vec<Rat> = w.into_iter().map(|v| -v).chain(coef).collect();
    Ok(PositiveCombination {
        x: normalize_min_one(&x),
    })
}
