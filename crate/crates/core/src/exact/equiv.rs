use num_traits::{One, Signed};

use super::{ExactError, Mat, Rat};

/// Certificate of structural equivalence `canonical = B⁻¹ · M · P · Δ`.
///
/// `perm[j]` names the column of `M` that lands in position `j`, and
/// `scale[j]` is the positive factor applied to it there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivWitness {
    pub basis: Mat,
    pub perm: Vec<usize>,
    pub scale: Vec<Rat>,
}

impl EquivWitness {
    pub fn identity(rows: usize, cols: usize) -> EquivWitness {
        EquivWitness {
            basis: Mat::identity(rows),
            perm: (0..cols).collect(),
            scale: vec![Rat::one(); cols],
        }
    }

    /// Validated constructor.
    pub fn new(basis: Mat, perm: Vec<usize>, scale: Vec<Rat>) -> Result<EquivWitness, ExactError> {
        let w = EquivWitness { basis, perm, scale };
        w.check_shape(w.basis.rows(), w.perm.len())?;
        if !w.basis.is_nonsingular() {
            return Err(ExactError::SingularBasis);
        }
        Ok(w)
    }

    /// Builds a witness from the row transform `B⁻¹` instead of `B`.
    pub fn from_transform(
        transform: &Mat,
        perm: Vec<usize>,
        scale: Vec<Rat>,
    ) -> Result<EquivWitness, ExactError> {
        let basis = transform.inverse().ok_or(ExactError::SingularBasis)?;
        EquivWitness::new(basis, perm, scale)
    }

    /// Witness that only permutes columns.
    pub fn permutation(rows: usize, perm: Vec<usize>) -> EquivWitness {
        let m = perm.len();
        EquivWitness {
            basis: Mat::identity(rows),
            perm,
            scale: vec![Rat::one(); m],
        }
    }

    fn check_shape(&self, rows: usize, cols: usize) -> Result<(), ExactError> {
        if self.basis.rows() != rows || self.basis.cols() != rows {
            return Err(ExactError::DimensionMismatch(format!(
                "basis is {}x{}, matrix has {rows} rows",
                self.basis.rows(),
                self.basis.cols()
            )));
        }
        if self.perm.len() != cols || self.scale.len() != cols {
            return Err(ExactError::DimensionMismatch(format!(
                "witness has {} permutation / {} scale entries, matrix has {cols} columns",
                self.perm.len(),
                self.scale.len()
            )));
        }
        let mut seen = vec![false; cols];
        for &p in &self.perm {
            if p >= cols || std::mem::replace(&mut seen[p], true) {
                return Err(ExactError::InvalidWitness(format!(
                    "{:?} is not a permutation",
                    self.perm
                )));
            }
        }
        if let Some(s) = self.scale.iter().find(|s| !s.is_positive()) {
            return Err(ExactError::InvalidWitness(format!(
                "scale entry {s} is not positive"
            )));
        }
        Ok(())
    }

    /// Computes `B⁻¹ M P Δ` exactly.
    pub fn apply(&self, m: &Mat) -> Result<Mat, ExactError> {
        self.check_shape(m.rows(), m.cols())?;
        let transform = self.basis.inverse().ok_or(ExactError::SingularBasis)?;
        let mut out = &transform * &m.select_columns(&self.perm);
        for (j, s) in self.scale.iter().enumerate() {
            if !s.is_one() {
                out.scale_column(j, s);
            }
        }
        Ok(out)
    }

    /// True iff `apply(m) == canonical` entrywise.
    pub fn verify(&self, m: &Mat, canonical: &Mat) -> Result<bool, ExactError> {
        if canonical.shape() != m.shape() {
            return Err(ExactError::DimensionMismatch(format!(
                "canonical form is {:?}, matrix is {:?}",
                canonical.shape(),
                m.shape()
            )));
        }
        Ok(&self.apply(m)? == canonical)
    }

    /// Witness for applying `self` and then `next`:
    /// `next.apply(self.apply(M)) == self.then(next).apply(M)`.
    pub fn then(&self, next: &EquivWitness) -> EquivWitness {
        let perm = next.perm.iter().map(|&j| self.perm[j]).collect();
        let scale = next
            .perm
            .iter()
            .zip(&next.scale)
            .map(|(&j, s)| &self.scale[j] * s)
            .collect();
        EquivWitness {
            basis: &self.basis * &next.basis,
            perm,
            scale,
        }
    }

    /// Lifts a witness on the top `k` rows to `n ≥ k` rows with an identity
    /// lower-right block.
    pub fn pad_rows(&self, n: usize) -> EquivWitness {
        let k = self.basis.rows();
        let mut basis = Mat::identity(n);
        for i in 0..k {
            for j in 0..k {
                basis[(i, j)] = self.basis[(i, j)].clone();
            }
        }
        EquivWitness {
            basis,
            perm: self.perm.clone(),
            scale: self.scale.clone(),
        }
    }
}

/// `B⁻¹ M P Δ` for the witness `w`.
pub fn apply_equiv(m: &Mat, w: &EquivWitness) -> Result<Mat, ExactError> {
    w.apply(m)
}

/// True iff `w` maps `m` onto `canonical` exactly.
pub fn verify_equiv(m: &Mat, canonical: &Mat, w: &EquivWitness) -> Result<bool, ExactError> {
    w.verify(m, canonical)
}
