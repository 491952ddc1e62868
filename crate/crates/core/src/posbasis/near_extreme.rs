use num_traits::{One, Signed, Zero};

use super::generate::{gen_pb_2l_minus_1, gen_pb_l_plus_2};
use super::recognize::{full_rank_rows, is_positive_basis};
use super::structure::{critical_structure, normalize_two_row_blocks, CriticalStructure};
use crate::exact::{EquivWitness, Mat, Rat};
use crate::pss::{decompose_in_ina, Decomposition, InForm};

/// A positive basis brought to one of the two near-extreme canonical forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NearExtremeForm {
    /// Size `2ℓ − 1`: `N = [−1 0ᵀ; −1 xᵀ; 0 −I_{ℓ−2}]`.
    TwoEllMinusOne {
        ell: usize,
        x: Vec<Rat>,
        canonical: Mat,
        witness: EquivWitness,
    },
    /// Size `ℓ + 2`: `N = [−1_k x; 0 −1_{ℓ−k}]`.
    EllPlusTwo {
        ell: usize,
        k: usize,
        x: Vec<Rat>,
        canonical: Mat,
        witness: EquivWitness,
    },
}

impl NearExtremeForm {
    pub fn canonical(&self) -> &Mat {
        match self {
            NearExtremeForm::TwoEllMinusOne { canonical, .. }
            | NearExtremeForm::EllPlusTwo { canonical, .. } => canonical,
        }
    }

    pub fn witness(&self) -> &EquivWitness {
        match self {
            NearExtremeForm::TwoEllMinusOne { witness, .. }
            | NearExtremeForm::EllPlusTwo { witness, .. } => witness,
        }
    }

    /// The canonical matrix is the family member for the stored parameters
    /// and the witness maps `d` onto it.
    pub fn verify(&self, d: &Mat) -> bool {
        let n = d.rows();
        let expected = match self {
            NearExtremeForm::TwoEllMinusOne { ell, x, .. } => gen_pb_2l_minus_1(*ell, n, x),
            NearExtremeForm::EllPlusTwo { ell, k, x, .. } => gen_pb_l_plus_2(*ell, n, *k, x),
        };
        matches!(expected, Ok(ref e) if e == self.canonical())
            && self.witness().verify(d, self.canonical()) == Ok(true)
    }
}

/// An `ℓ`-row matrix together with the witness that produced it.
struct Work {
    current: Mat,
    witness: EquivWitness,
}

impl Work {
    fn step(&mut self, transform: &Mat, perm: Vec<usize>) {
        let m = perm.len();
        let step = EquivWitness::from_transform(transform, perm.clone(), vec![Rat::one(); m])
            .expect("invertible transform");
        self.current = (transform * &self.current).select_columns(&perm);
        self.witness = self.witness.then(&step);
    }

    /// Reorders rows as `rows` and moves the matching identity columns
    /// along, followed by the NEM columns in the order `nem`.
    fn reorder(&mut self, rows: &[usize], nem: &[usize]) {
        let ell = rows.len();
        let mut transform = Mat::zeros(ell, ell);
        for (a, &r) in rows.iter().enumerate() {
            transform[(a, r)] = Rat::one();
        }
        let perm = rows
            .iter()
            .copied()
            .chain(nem.iter().map(|j| ell + j))
            .collect();
        self.step(&transform, perm);
    }
}

/// Brings a positive basis of size `2ℓ − 1` or `ℓ + 2` (with `ℓ` the rank)
/// to its canonical form. For `ℓ = 3` the sizes coincide and both forms are
/// returned. The result is empty when `d` is not a positive basis of one of
/// these sizes.
pub fn reduce_to_near_extreme_form(d: &Mat) -> Vec<NearExtremeForm> {
    let m = d.cols();
    let (rr, top) = full_rank_rows(d);
    let ell = top.rows();
    if ell < 2 || (m != 2 * ell - 1 && m != ell + 2) || !is_positive_basis(d).verdict {
        return Vec::new();
    }
    let form = match decompose_in_ina(&top) {
        Ok(Decomposition::In(f)) => f,
        _ => return Vec::new(),
    };
    let Ok(cs) = critical_structure(&form) else {
        return Vec::new();
    };
    let lift = EquivWitness::new(rr.basis_change, (0..m).collect(), vec![Rat::one(); m])
        .expect("elimination basis is nonsingular");
    let mut out = Vec::new();
    if m == 2 * ell - 1 {
        out.extend(two_ell_minus_one(&form, &cs).map(|(x, w)| {
            let canonical = gen_pb_2l_minus_1(ell, d.rows(), &x).expect("valid parameters");
            NearExtremeForm::TwoEllMinusOne {
                ell,
                x,
                canonical,
                witness: lift.then(&w.pad_rows(d.rows())),
            }
        }));
    }
    if m == ell + 2 {
        out.extend(ell_plus_two(&form, &cs).map(|(k, x, w)| {
            let canonical = gen_pb_l_plus_2(ell, d.rows(), k, &x).expect("valid parameters");
            NearExtremeForm::EllPlusTwo {
                ell,
                k,
                x,
                canonical,
                witness: lift.then(&w.pad_rows(d.rows())),
            }
        }));
    }
    debug_assert!(out.iter().all(|f| f.verify(d)));
    out
}

/// One two-row block and `ℓ − 2` one-row blocks: normalize the two-row
/// block into `K₁` and move it to the top.
fn two_ell_minus_one(form: &InForm, cs: &CriticalStructure) -> Option<(Vec<Rat>, EquivWitness)> {
    let ell = form.ell;
    let i = cs.block_sizes.iter().position(|&b| b == 2)?;
    if cs.s() != ell - 1 {
        return None;
    }
    let (normalized, _) = normalize_two_row_blocks(form, cs).ok()?;
    let mut work = Work {
        current: normalized.canonical,
        witness: normalized.witness,
    };
    let r = cs.row_offsets[i];
    let rows: Vec<usize> = [r, r + 1]
        .into_iter()
        .chain((0..ell).filter(|&p| p != r && p != r + 1))
        .collect();
    let nem: Vec<usize> = std::iter::once(i)
        .chain((0..cs.s()).filter(|&j| j != i))
        .collect();
    work.reorder(&rows, &nem);
    let x: Vec<Rat> = (1..ell - 1)
        .map(|j| work.current[(1, ell + j)].clone())
        .collect();
    let expected = gen_pb_2l_minus_1(ell, ell, &x).ok()?;
    (work.current == expected).then_some((x, work.witness))
}

/// Two NEM columns `u` and `v = (w; −1)`: if the maximum of `w` is positive
/// it is attained at two rows `i` and `j`, and the basis
/// `{u, e₁, …, eℓ} \ {eᵢ}` turns `w` non-positive with a zero at `j`.
fn ell_plus_two(form: &InForm, cs: &CriticalStructure) -> Option<(usize, Vec<Rat>, EquivWitness)> {
    let ell = form.ell;
    if cs.s() != 2 {
        return None;
    }
    let k = cs.block_sizes[0];
    let mut work = Work {
        current: form.canonical.clone(),
        witness: form.witness.clone(),
    };
    let w: Vec<Rat> = (0..k).map(|p| work.current[(p, ell + 1)].clone()).collect();
    let max = w.iter().max()?.clone();
    let at_max: Vec<usize> = (0..k).filter(|&p| w[p] == max).collect();
    let zero_row = if max.is_positive() {
        if at_max.len() < 2 {
            return None;
        }
        let (i, j) = (at_max[0], at_max[1]);
        let mut basis = Mat::identity(ell);
        for p in 0..ell {
            basis[(p, i)] = work.current[(p, ell)].clone();
        }
        let transform = basis.inverse()?;
        let mut perm: Vec<usize> = (0..ell + 2).collect();
        perm.swap(i, ell);
        work.step(&transform, perm);
        j
    } else {
        w.iter().position(Zero::is_zero)?
    };
    let rows: Vec<usize> = std::iter::once(zero_row)
        .chain((0..ell).filter(|&p| p != zero_row))
        .collect();
    work.reorder(&rows, &[0, 1]);
    let x: Vec<Rat> = (0..k).map(|p| work.current[(p, ell + 1)].clone()).collect();
    let expected = gen_pb_l_plus_2(ell, ell, k, &x).ok()?;
    (work.current == expected).then_some((k, x, work.witness))
}
