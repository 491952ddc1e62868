use num_traits::{One, Signed, Zero};

use super::simplex::{feasibility, Feasibility};
use super::{GordanVector, PositiveCombination, PssError, SeparatingVector};
use crate::exact::{
    normalize_min_one, primitive_integer_vector, rat, rref, EquivWitness, Mat, Rat,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StiemkeOutcome {
    Positive(PositiveCombination),
    Separating(SeparatingVector),
}

impl StiemkeOutcome {
    pub fn is_positive(&self) -> bool {
        matches!(self, StiemkeOutcome::Positive(_))
    }

    pub fn verify(&self, d: &Mat) -> bool {
        match self {
            StiemkeOutcome::Positive(c) => c.verify(d),
            StiemkeOutcome::Separating(s) => s.verify(d),
        }
    }
}

/// Either a strictly positive null combination of the columns of `d`, or a
/// vector `y` with `yᵀD ≥ 0, yᵀD ≠ 0`.
pub fn stiemke_alternative(d: &Mat) -> StiemkeOutcome {
    let m = d.cols();
    // x = 1 + x′ with x′ ≥ 0 turns x ≥ 1 into D x′ = −D 1.
    let ones = vec![Rat::one(); m];
    let rhs: Vec<Rat> = d.mul_vec(&ones).into_iter().map(|v| -v).collect();
    match feasibility(d, &rhs) {
        Feasibility::Feasible(xp) => {
            let x: Vec<Rat> = xp.into_iter().map(|v| v + Rat::one()).collect();
            StiemkeOutcome::Positive(PositiveCombination {
                x: normalize_min_one(&x),
            })
        }
        Feasibility::Infeasible(y) => StiemkeOutcome::Separating(SeparatingVector {
            y: primitive_integer_vector(&y),
        }),
    }
}

/// Outcome of [`is_pss`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanVerdict {
    /// Positive spanning set of the whole space.
    Spans(PositiveCombination),
    /// Positive spanning set of a proper subspace of dimension `rank`;
    /// `normal` is a nonzero vector orthogonal to every column.
    SpansSubspace {
        combination: PositiveCombination,
        rank: usize,
        normal: Vec<Rat>,
    },
    /// Not a positive spanning set of its own span.
    NotPss(SeparatingVector),
}

impl SpanVerdict {
    pub fn is_pss_of_span(&self) -> bool {
        !matches!(self, SpanVerdict::NotPss(_))
    }

    pub fn is_pss_of_space(&self) -> bool {
        matches!(self, SpanVerdict::Spans(_))
    }

    pub fn verify(&self, d: &Mat) -> bool {
        match self {
            SpanVerdict::Spans(c) => c.verify(d) && d.rank() == d.rows(),
            SpanVerdict::SpansSubspace {
                combination,
                rank,
                normal,
            } => {
                combination.verify(d)
                    && d.rank() == *rank
                    && normal.len() == d.rows()
                    && normal.iter().any(|v| !v.is_zero())
                    && d.left_mul_vec(normal).iter().all(Zero::is_zero)
            }
            SpanVerdict::NotPss(s) => s.verify(d),
        }
    }
}

/// Decides whether `d` positively spans its own span and whether that span is
/// the whole space.
pub fn is_pss(d: &Mat) -> SpanVerdict {
    match stiemke_alternative(d) {
        StiemkeOutcome::Separating(s) => SpanVerdict::NotPss(s),
        StiemkeOutcome::Positive(combination) => {
            let r = rref(d);
            let rank = r.pivots.len();
            if rank == d.rows() {
                return SpanVerdict::Spans(combination);
            }
            // Rows of B⁻¹ past the rank annihilate every column of D.
            let inv = r
                .basis_change
                .inverse()
                .expect("elimination basis is nonsingular");
            SpanVerdict::SpansSubspace {
                combination,
                rank,
                normal: primitive_integer_vector(inv.row(rank)),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GordanOutcome {
    Acyclic(GordanVector),
    /// Nonzero `x ≥ 0` with `A x = 0`, as a primitive integer vector.
    Dependent(Vec<Rat>),
}

impl GordanOutcome {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, GordanOutcome::Acyclic(_))
    }

    pub fn verify(&self, a: &Mat) -> bool {
        match self {
            GordanOutcome::Acyclic(g) => g.verify(a),
            GordanOutcome::Dependent(x) => {
                x.len() == a.cols()
                    && x.iter().all(|v| !v.is_negative())
                    && x.iter().any(Signed::is_positive)
                    && a.mul_vec(x).iter().all(Zero::is_zero)
            }
        }
    }
}

/// Either `y` with `yᵀA ≥ 1`, or a nonzero nonnegative null vector of `A`.
pub fn gordan_alternative(a: &Mat) -> GordanOutcome {
    let (n, m) = a.shape();
    let ones = Mat::from_rows(vec![vec![Rat::one(); m]]);
    let sys = Mat::vstack(m, &[a, &ones]);
    let mut rhs = vec![Rat::zero(); n];
    rhs.push(Rat::one());
    match feasibility(&sys, &rhs) {
        Feasibility::Feasible(x) => GordanOutcome::Dependent(primitive_integer_vector(&x)),
        Feasibility::Infeasible(yt) => {
            // yt = (p, t) with pᵀA_j ≥ −t > 0.
            let p = &yt[..n];
            let mut y = primitive_integer_vector(p);
            if let Some(min) = a.left_mul_vec(&y).into_iter().min() {
                y = y.into_iter().map(|v| v / &min).collect();
            }
            GordanOutcome::Acyclic(GordanVector { y })
        }
    }
}

/// Acyclicity with its certificate.
pub fn is_acyclic(a: &Mat) -> (bool, GordanOutcome) {
    let g = gordan_alternative(a);
    (g.is_acyclic(), g)
}

/// Row transform `1 yᵀ + η I` making every entry of an acyclic matrix
/// strictly positive, returned as an equivalence witness with identity
/// permutation and unit scaling.
pub fn acyclic_positive_form(a: &Mat, y: &GordanVector) -> Result<EquivWitness, PssError> {
    let (n, m) = a.shape();
    if y.y.len() != n {
        return Err(PssError::InvalidCertificate(format!(
            "vector has length {}, matrix has {n} rows",
            y.y.len()
        )));
    }
    let ya = a.left_mul_vec(&y.y);
    if ya.iter().any(|v| !v.is_positive()) || (m == 0 && y.y.iter().all(Zero::is_zero)) {
        return Err(PssError::InvalidCertificate(
            "yᵀA is not strictly positive".into(),
        ));
    }
    let min = ya.iter().min().cloned().unwrap_or_else(Rat::one);
    let col_sum_max = (0..m)
        .map(|j| (0..n).map(|i| a[(i, j)].abs()).sum::<Rat>())
        .max()
        .unwrap_or_else(Rat::zero);
    let mut eta = min / (col_sum_max + Rat::one()) / rat(2);
    let y_sum: Rat = y.y.iter().sum();
    loop {
        let mut t = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                t[(i, j)] = y.y[j].clone();
            }
            t[(i, i)] += &eta;
        }
        let nonsingular = !(&eta + &y_sum).is_zero();
        if nonsingular && all_positive(&(&t * a)) {
            return Ok(EquivWitness::from_transform(
                &t,
                (0..m).collect(),
                vec![Rat::one(); m],
            )?);
        }
        eta /= rat(2);
    }
}

fn all_positive(m: &Mat) -> bool {
    (0..m.rows()).all(|i| m.row(i).iter().all(Signed::is_positive))
}
