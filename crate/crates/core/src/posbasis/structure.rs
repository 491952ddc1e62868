use num_traits::{One, Zero};

use super::critical::{is_critical_matrix_low_dim, CriticalCone};
use super::PosBasisError;
use crate::exact::{EquivWitness, Mat, Rat};
use crate::pss::{validate_nem, InForm, NemShape};

/// Block decomposition of an IN matrix `[Iₙ N]` along the breakpoints of
/// its NEM. Block `i` spans rows `row_offsets[i] .. row_offsets[i] +
/// block_sizes[i]`; `blocks[i]` is the free part `Xᵢ` in NEM columns
/// `i + 1 ..`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalStructure {
    pub block_sizes: Vec<usize>,
    pub row_offsets: Vec<usize>,
    pub blocks: Vec<Mat>,
}

fn malformed(msg: impl Into<String>) -> PosBasisError {
    PosBasisError::MalformedInForm(msg.into())
}

impl CriticalStructure {
    /// Reads the structure off a matrix that is literally `[Iₙ N]`.
    pub fn from_in_matrix(m: &Mat) -> Result<CriticalStructure, PosBasisError> {
        let n = m.rows();
        if m.cols() <= n {
            return Err(malformed("no NEM columns"));
        }
        if m.block(0, n, 0, n) != Mat::identity(n) {
            return Err(malformed("leading block is not the identity"));
        }
        let nem = m.block(0, n, n, m.cols());
        let shape = validate_nem(&nem).ok_or_else(|| malformed("trailing block is not a NEM"))?;
        Ok(Self::from_nem(&nem, &shape))
    }

    fn from_nem(nem: &Mat, shape: &NemShape) -> CriticalStructure {
        let n = nem.rows();
        let s = shape.s;
        let block_sizes = shape.block_sizes(n);
        let row_offsets = shape.starts.clone();
        let blocks = (0..s - 1)
            .map(|i| {
                let r0 = row_offsets[i];
                nem.block(r0, r0 + block_sizes[i], i + 1, s)
            })
            .collect();
        CriticalStructure {
            block_sizes,
            row_offsets,
            blocks,
        }
    }

    /// Number of NEM columns.
    pub fn s(&self) -> usize {
        self.block_sizes.len()
    }

    pub fn dimension(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    /// Rebuilds `[Iₙ N]` from the blocks.
    pub fn reassemble(&self) -> Mat {
        let n = self.dimension();
        let s = self.s();
        let mut m = Mat::zeros(n, n + s);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        for (i, (&r0, &size)) in self.row_offsets.iter().zip(&self.block_sizes).enumerate() {
            for r in r0..r0 + size {
                m[(r, n + i)] = -Rat::one();
                if let Some(x) = self.blocks.get(i) {
                    for c in 0..x.cols() {
                        m[(r, n + i + 1 + c)] = x[(r - r0, c)].clone();
                    }
                }
            }
        }
        m
    }

    /// Criticality of every `Xᵢ`, or `None` if some `Xᵢ` has three or more
    /// rows.
    pub fn low_dim_verdicts(&self) -> Option<Vec<bool>> {
        self.blocks
            .iter()
            .map(|x| is_critical_matrix_low_dim(x).ok())
            .collect()
    }
}

/// Critical structure of an IN form with `ℓ = n` and no extra columns.
pub fn critical_structure(form: &InForm) -> Result<CriticalStructure, PosBasisError> {
    let n = form.nem.rows();
    if form.ell != n {
        return Err(malformed(format!("ℓ = {} but n = {n}", form.ell)));
    }
    if form.tail.cols() != 0 {
        return Err(malformed(format!(
            "{} columns beyond the NEM",
            form.tail.cols()
        )));
    }
    let shape = match (&form.nem_shape, form.k) {
        (Some(shape), k) if k > 0 => shape,
        _ => return Err(malformed("empty NEM block")),
    };
    Ok(CriticalStructure::from_nem(&form.nem, shape))
}

/// Brings every two-row block into the form `cols(Xᵢ) ⊂ K₁(R²)`.
///
/// Blocks are handled from last to first, since the `K_{1,2}` case clears
/// entries in the rows above the block.
pub fn normalize_two_row_blocks(
    form: &InForm,
    cs: &CriticalStructure,
) -> Result<(InForm, CriticalStructure), PosBasisError> {
    if critical_structure(form)? != *cs {
        return Err(malformed("critical structure does not match the IN form"));
    }
    let n = form.nem.rows();
    let total = form.canonical.cols();
    let mut current = form.canonical.clone();
    let mut witness = form.witness.clone();
    for i in (0..cs.blocks.len()).rev() {
        let x = &CriticalStructure::from_in_matrix(&current)?.blocks[i];
        let size = cs.block_sizes[i];
        if size > 2 {
            continue;
        }
        if !is_critical_matrix_low_dim(x)? {
            return Err(PosBasisError::NotPositiveBasis);
        }
        if size == 1 {
            continue;
        }
        let cols = x.columns();
        let in_cone = |cone: CriticalCone| cols.iter().all(|c| cone.contains(c));
        let r = cs.row_offsets[i];
        let mut transform = Mat::identity(n);
        let mut perm: Vec<usize> = (0..total).collect();
        if in_cone(CriticalCone::Single(1)) {
            continue;
        } else if in_cone(CriticalCone::Single(2)) {
            transform.swap_rows(r, r + 1);
            perm.swap(r, r + 1);
        } else {
            // r₂ ← −r₂, r₁ ← r₁ + r₂; the old NEM column becomes the unit
            // vector of row r + 1 once the rows above are cleared.
            transform.scale_row(r + 1, &-Rat::one());
            transform.add_row_multiple(r, r + 1, &Rat::one());
            for p in 0..r {
                let a = current[(p, n + i)].clone();
                if !a.is_zero() {
                    transform.add_row_multiple(p, r + 1, &-a);
                }
            }
            perm.swap(r + 1, n + i);
        }
        let step = EquivWitness::from_transform(&transform, perm.clone(), vec![Rat::one(); total])
            .expect("elementary row operations are invertible");
        current = (&transform * &current).select_columns(&perm);
        witness = witness.then(&step);
    }
    let structure = CriticalStructure::from_in_matrix(&current)?;
    let nem = current.block(0, n, n, total);
    let normalized = InForm {
        ell: n,
        k: form.k,
        nem_shape: validate_nem(&nem),
        nem,
        tail: Mat::zeros(n, 0),
        witness,
        canonical: current,
    };
    Ok((normalized, structure))
}
