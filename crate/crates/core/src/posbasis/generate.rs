use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::PosBasisError;
use crate::exact::{rat, Mat, Rat};

fn check_dims(ell: usize, n: usize, min_ell: usize) -> Result<(), PosBasisError> {
    if ell < min_ell || ell > n {
        return Err(PosBasisError::BadDimensions(format!(
            "need {min_ell} ≤ ℓ ≤ n, got ℓ = {ell}, n = {n}"
        )));
    }
    Ok(())
}

fn check_non_positive(x: &[Rat]) -> Result<(), PosBasisError> {
    match x.iter().find(|v| v.is_positive()) {
        Some(v) => Err(PosBasisError::BadParameters(format!(
            "x must be non-positive, found {v}"
        ))),
        None => Ok(()),
    }
}

/// `[Iℓ N; 0 0]` with `n` rows.
fn with_identity(n: usize, nem: &Mat) -> Mat {
    let ell = nem.rows();
    let top = Mat::hstack(ell, &[&Mat::identity(ell), nem]);
    Mat::vstack(top.cols(), &[&top, &Mat::zeros(n - ell, top.cols())])
}

/// `[Iℓ −1ℓ]` padded with zero rows to `n` rows.
pub fn gen_minimal_pb(ell: usize, n: usize) -> Result<Mat, PosBasisError> {
    check_dims(ell, n, 1)?;
    let nem = Mat::from_columns(ell, &[vec![-Rat::one(); ell]]);
    Ok(with_identity(n, &nem))
}

/// `[Iℓ −Iℓ]` padded with zero rows to `n` rows.
pub fn gen_maximal_pb(ell: usize, n: usize) -> Result<Mat, PosBasisError> {
    check_dims(ell, n, 1)?;
    Ok(with_identity(n, &Mat::identity(ell).neg()))
}

/// Positive basis of size `2ℓ − 1` with
/// `N = [−1 0ᵀ; −1 xᵀ; 0 −I_{ℓ−2}]`.
pub fn gen_pb_2l_minus_1(ell: usize, n: usize, x: &[Rat]) -> Result<Mat, PosBasisError> {
    check_dims(ell, n, 2)?;
    if x.len() != ell - 2 {
        return Err(PosBasisError::BadParameters(format!(
            "x must have ℓ − 2 = {} entries, got {}",
            ell - 2,
            x.len()
        )));
    }
    check_non_positive(x)?;
    let mut nem = Mat::zeros(ell, ell - 1);
    nem[(0, 0)] = -Rat::one();
    nem[(1, 0)] = -Rat::one();
    for (j, v) in x.iter().enumerate() {
        nem[(1, j + 1)] = v.clone();
        nem[(j + 2, j + 1)] = -Rat::one();
    }
    Ok(with_identity(n, &nem))
}

/// Positive basis of size `ℓ + 2` with `N = [−1_k x; 0 −1_{ℓ−k}]`.
pub fn gen_pb_l_plus_2(ell: usize, n: usize, k: usize, x: &[Rat]) -> Result<Mat, PosBasisError> {
    check_dims(ell, n, 2)?;
    if k == 0 || k >= ell {
        return Err(PosBasisError::BadParameters(format!(
            "need 1 ≤ k ≤ ℓ − 1, got k = {k}"
        )));
    }
    if x.len() != k {
        return Err(PosBasisError::BadParameters(format!(
            "x must have k = {k} entries, got {}",
            x.len()
        )));
    }
    check_non_positive(x)?;
    if !x[0].is_zero() {
        return Err(PosBasisError::BadParameters("x₁ must be zero".into()));
    }
    let mut nem = Mat::zeros(ell, 2);
    for i in 0..ell {
        if i < k {
            nem[(i, 0)] = -Rat::one();
            nem[(i, 1)] = x[i].clone();
        } else {
            nem[(i, 1)] = -Rat::one();
        }
    }
    Ok(with_identity(n, &nem))
}

/// Free entry drawn uniformly from `{−3, …, 0}`.
pub fn random_x_entry<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    rat(rng.gen_range(-3..=0))
}

/// [`gen_pb_2l_minus_1`] with random `x`; returns the matrix and `x`.
pub fn random_pb_2l_minus_1<R: Rng + ?Sized>(
    ell: usize,
    n: usize,
    rng: &mut R,
) -> Result<(Mat, Vec<Rat>), PosBasisError> {
    check_dims(ell, n, 2)?;
    let x: Vec<Rat> = (0..ell - 2).map(|_| random_x_entry(rng)).collect();
    Ok((gen_pb_2l_minus_1(ell, n, &x)?, x))
}

/// [`gen_pb_l_plus_2`] with random `k` and `x`; returns the matrix, `k`
/// and `x`.
pub fn random_pb_l_plus_2<R: Rng + ?Sized>(
    ell: usize,
    n: usize,
    rng: &mut R,
) -> Result<(Mat, usize, Vec<Rat>), PosBasisError> {
    check_dims(ell, n, 2)?;
    let k = rng.gen_range(1..ell);
    let mut x: Vec<Rat> = (0..k).map(|_| random_x_entry(rng)).collect();
    x[0] = Rat::zero();
    Ok((gen_pb_l_plus_2(ell, n, k, &x)?, k, x))
}
