use num_traits::{One, Signed, Zero};

use super::PosBasisError;
use crate::exact::{Mat, Rat};
use crate::pss::is_pss;

/// One of the cones whose union is the set of critical vectors. Indices are
/// 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CriticalCone {
    /// `Kᵢ`: non-positive vectors with coordinate `i` equal to zero.
    Single(usize),
    /// `K_{i,j}`: vectors whose maximum is non-negative and attained at
    /// both `i` and `j`.
    Pair(usize, usize),
}

impl CriticalCone {
    pub fn contains(&self, v: &[Rat]) -> bool {
        let n = v.len();
        match *self {
            CriticalCone::Single(i) => {
                (1..=n).contains(&i) && v[i - 1].is_zero() && v.iter().all(|x| !x.is_positive())
            }
            CriticalCone::Pair(i, j) => {
                if !(1 <= i && i < j && j <= n) {
                    return false;
                }
                let max = v.iter().max().expect("non-empty");
                !max.is_negative() && v[i - 1] == *max && v[j - 1] == *max
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalVerdict {
    pub is_critical: bool,
    pub cone: Option<CriticalCone>,
}

/// A vector is critical iff its maximum is zero, or positive and attained
/// at least twice.
///
/// The reported cone is `Kᵢ` for the first zero coordinate when the maximum
/// is zero, and `K_{i,j}` for the first two maximal coordinates otherwise.
pub fn is_critical_vector(v: &[Rat]) -> Result<CriticalVerdict, PosBasisError> {
    if v.len() < 2 {
        return Err(PosBasisError::DimensionTooSmall(v.len()));
    }
    let max = v.iter().max().expect("non-empty");
    let at_max: Vec<usize> = (0..v.len()).filter(|&i| v[i] == *max).collect();
    let cone = if max.is_zero() {
        Some(CriticalCone::Single(at_max[0] + 1))
    } else if max.is_positive() && at_max.len() >= 2 {
        Some(CriticalCone::Pair(at_max[0] + 1, at_max[1] + 1))
    } else {
        None
    };
    Ok(CriticalVerdict {
        is_critical: cone.is_some(),
        cone,
    })
}

/// True iff no replacement of a column of `[Iₙ −1ₙ]` by `v` gives a
/// positive spanning set of `Rⁿ`.
pub fn replacement_oracle(v: &[Rat]) -> Result<bool, PosBasisError> {
    let n = v.len();
    if n < 2 {
        return Err(PosBasisError::DimensionTooSmall(n));
    }
    let mut base = Mat::identity(n).columns();
    base.push(vec![-Rat::one(); n]);
    for k in 0..=n {
        let mut cols = base.clone();
        cols[k] = v.to_vec();
        if is_pss(&Mat::from_columns(n, &cols)).is_pss_of_space() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Criticality of a matrix with one or two rows: zero for one row, all
/// columns inside a single cone `K₁`, `K₂` or `K_{1,2}` for two.
pub fn is_critical_matrix_low_dim(x: &Mat) -> Result<bool, PosBasisError> {
    match x.rows() {
        1 => Ok(x.is_zero()),
        2 => {
            let cols = x.columns();
            Ok([
                CriticalCone::Single(1),
                CriticalCone::Single(2),
                CriticalCone::Pair(1, 2),
            ]
            .iter()
            .any(|cone| cols.iter().all(|c| cone.contains(c))))
        }
        r => Err(PosBasisError::UnsupportedDimension(r)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_vec;

    #[test]
    fn vector_examples() {
        let v = is_critical_vector(&rat_vec(&[-1, 0])).unwrap();
        assert_eq!(v.cone, Some(CriticalCone::Single(2)));
        let v = is_critical_vector(&rat_vec(&[2, 2, -1])).unwrap();
        assert_eq!(v.cone, Some(CriticalCone::Pair(1, 2)));
        assert!(!is_critical_vector(&rat_vec(&[3, 1])).unwrap().is_critical);
        assert!(!is_critical_vector(&rat_vec(&[-1, -2])).unwrap().is_critical);
        assert_eq!(
            is_critical_vector(&rat_vec(&[0])),
            Err(PosBasisError::DimensionTooSmall(1))
        );
    }

    #[test]
    fn oracle_examples() {
        assert!(!replacement_oracle(&rat_vec(&[3, 1])).unwrap());
        assert!(replacement_oracle(&rat_vec(&[-1, 0])).unwrap());
        assert!(replacement_oracle(&rat_vec(&[0, 0])).unwrap());
        // The combination from the proof for (3, 1): v − 3·1 + 2e₂ = 0.
        let m = Mat::from_ints(&[[3, 0, -1], [1, 1, -1]]);
        assert_eq!(m.mul_vec(&rat_vec(&[1, 2, 3])), rat_vec(&[0, 0]));
    }

    #[test]
    fn cone_membership_matches_verdict() {
        for a in -2..=2 {
            for b in -2..=2 {
                for c in -2..=2 {
                    let v = rat_vec(&[a, b, c]);
                    let verdict = is_critical_vector(&v).unwrap();
                    if let Some(cone) = verdict.cone {
                        assert!(cone.contains(&v));
                    }
                }
            }
        }
    }

    #[test]
    fn low_dimensional_matrices() {
        assert!(is_critical_matrix_low_dim(&Mat::zeros(1, 3)).unwrap());
        assert!(!is_critical_matrix_low_dim(&Mat::from_ints(&[[0, 1]])).unwrap());
        assert!(is_critical_matrix_low_dim(&Mat::from_ints(&[[0, 0], [-1, -2]])).unwrap());
        assert!(!is_critical_matrix_low_dim(&Mat::from_ints(&[[0, -1], [-1, 0]])).unwrap());
        assert!(is_critical_matrix_low_dim(&Mat::from_ints(&[[2, 0], [2, 0]])).unwrap());
        assert!(is_critical_matrix_low_dim(&Mat::zeros(2, 0)).unwrap());
        assert_eq!(
            is_critical_matrix_low_dim(&Mat::zeros(3, 1)),
            Err(PosBasisError::UnsupportedDimension(3))
        );
    }
}
