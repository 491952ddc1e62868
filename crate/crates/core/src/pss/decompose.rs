use num_traits::{One, Zero};

use super::alternatives::{gordan_alternative, GordanOutcome};
use super::circuit::find_circuit_with_combination;
use super::nem::{validate_nem, NemShape};
use super::{GordanVector, PssError};
use crate::exact::{complete_basis, EquivWitness, Mat, Rat};

/// `[I_{n,ℓ} N X]` with `N` a negative row echelon matrix of width `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InForm {
    pub ell: usize,
    pub k: usize,
    pub nem: Mat,
    pub tail: Mat,
    pub nem_shape: Option<NemShape>,
    pub witness: EquivWitness,
    pub canonical: Mat,
}

/// `[Iℓ N X Z; 0 0 A 0]` with `N` a negative row echelon matrix of width
/// `k`, `A` acyclic and `Z` the columns whose lower part vanishes.
///
/// Without `Z` the form cannot describe every matrix: in `[e₁ −e₁ e₁]` the
/// third column reduces to zero below the circuit, and a zero column is
/// never acyclic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InaForm {
    pub ell: usize,
    pub k: usize,
    pub nem: Mat,
    pub tail: Mat,
    pub acyclic: Mat,
    pub null_tail: Mat,
    pub nem_shape: Option<NemShape>,
    pub acyclic_certificate: GordanVector,
    pub witness: EquivWitness,
    pub canonical: Mat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    In(InForm),
    Ina(InaForm),
}

impl Decomposition {
    /// True iff this is an IN form with `ℓ = n` and `k > 0`, i.e. the
    /// decomposed matrix positively spans the whole space.
    pub fn certifies_pss(&self) -> bool {
        match self {
            Decomposition::In(f) => f.ell == f.canonical.rows() && f.k > 0,
            Decomposition::Ina(_) => false,
        }
    }

    pub fn witness(&self) -> &EquivWitness {
        match self {
            Decomposition::In(f) => &f.witness,
            Decomposition::Ina(f) => &f.witness,
        }
    }

    pub fn canonical(&self) -> &Mat {
        match self {
            Decomposition::In(f) => &f.canonical,
            Decomposition::Ina(f) => &f.canonical,
        }
    }

    pub fn verify(&self, m: &Mat) -> Result<(), String> {
        match self {
            Decomposition::In(f) => f.verify(m),
            Decomposition::Ina(f) => f.verify(m),
        }
    }
}

fn check_nem(nem: &Mat, k: usize, shape: &Option<NemShape>) -> Result<(), String> {
    if k == 0 {
        return match shape {
            None => Ok(()),
            Some(_) => Err("shape given for an empty NEM block".into()),
        };
    }
    match validate_nem(nem) {
        Some(s) if Some(&s) == shape.as_ref() && s.s == k => Ok(()),
        Some(_) => Err("stored NEM shape does not match the block".into()),
        None => Err("N block is not a negative row echelon matrix".into()),
    }
}

impl InForm {
    pub fn assemble(&self) -> Mat {
        let n = self.nem.rows();
        let ident = Mat::identity(n).block(0, n, 0, self.ell);
        Mat::hstack(n, &[&ident, &self.nem, &self.tail])
    }

    pub fn verify(&self, m: &Mat) -> Result<(), String> {
        if !self
            .witness
            .verify(m, &self.canonical)
            .map_err(|e| e.to_string())?
        {
            return Err("witness does not reproduce the canonical form".into());
        }
        if self.assemble() != self.canonical {
            return Err("blocks do not assemble to the canonical form".into());
        }
        check_nem(&self.nem, self.k, &self.nem_shape)
    }
}

impl InaForm {
    pub fn assemble(&self) -> Mat {
        let ell = self.ell;
        let n = ell + self.acyclic.rows();
        let top = Mat::hstack(
            ell,
            &[&Mat::identity(ell), &self.nem, &self.tail, &self.null_tail],
        );
        let bottom = Mat::hstack(
            n - ell,
            &[
                &Mat::zeros(n - ell, ell + self.k),
                &self.acyclic,
                &Mat::zeros(n - ell, self.null_tail.cols()),
            ],
        );
        Mat::vstack(top.cols(), &[&top, &bottom])
    }

    pub fn verify(&self, m: &Mat) -> Result<(), String> {
        if self.ell >= m.rows() || self.k > self.ell {
            return Err(format!("invalid dimensions ℓ={}, k={}", self.ell, self.k));
        }
        if !self
            .witness
            .verify(m, &self.canonical)
            .map_err(|e| e.to_string())?
        {
            return Err("witness does not reproduce the canonical form".into());
        }
        if self.assemble() != self.canonical {
            return Err("blocks do not assemble to the canonical form".into());
        }
        if !self.acyclic_certificate.verify(&self.acyclic) {
            return Err("acyclic block certificate does not verify".into());
        }
        check_nem(&self.nem, self.k, &self.nem_shape)
    }
}

/// Decomposes a nonzero matrix into an IN form (exactly when it positively
/// spans the whole space) or an INA form, by repeatedly extracting a circuit
/// from the part not yet covered by pivots.
pub fn decompose_in_ina(m: &Mat) -> Result<Decomposition, PssError> {
    if m.is_zero() {
        return Err(PssError::ZeroMatrix);
    }
    let (n, cols) = m.shape();
    // Invariant: t = l · m · diag(scale).
    let mut t = m.clone();
    let mut l = Mat::identity(n);
    let mut scale = vec![Rat::one(); cols];
    let mut used = vec![false; cols];
    let mut pivots = Vec::new();
    let mut nems = Vec::new();
    let mut starts = Vec::new();
    let mut r0 = 0;

    let tail_cert = loop {
        if r0 == n {
            break None;
        }
        let live: Vec<usize> = (0..cols)
            .filter(|&j| !used[j] && (r0..n).any(|i| !t[(i, j)].is_zero()))
            .collect();
        let sub = t.block(r0, n, 0, cols).select_columns(&live);
        let Some((circuit, x)) = find_circuit_with_combination(&sub) else {
            let GordanOutcome::Acyclic(y) = gordan_alternative(&sub) else {
                return Err(PssError::SelfCheck(
                    "circuit search and Gordan disagree".into(),
                ));
            };
            break Some((live, y));
        };
        let circuit: Vec<usize> = circuit.into_iter().map(|k| live[k]).collect();
        for (&j, xj) in circuit.iter().zip(&x) {
            t.scale_column(j, xj);
            scale[j] *= xj;
        }
        let ell = circuit.len() - 1;
        let heads: Vec<Vec<Rat>> = circuit[..ell]
            .iter()
            .map(|&j| t.column(j)[r0..].to_vec())
            .collect();
        let g = complete_basis(n - r0, &heads)
            .inverse()
            .expect("completed basis is nonsingular");
        transform_rows(&mut t, r0, &g);
        transform_rows(&mut l, r0, &g);
        for (k, &col) in circuit[..ell].iter().enumerate() {
            let row = r0 + k;
            for r in 0..r0 {
                let f = -t[(r, col)].clone();
                if !f.is_zero() {
                    t.add_row_multiple(r, row, &f);
                    l.add_row_multiple(r, row, &f);
                }
            }
        }
        for &j in &circuit {
            used[j] = true;
        }
        pivots.extend_from_slice(&circuit[..ell]);
        nems.push(circuit[ell]);
        starts.push(r0);
        r0 += ell;
    };

    let ell = r0;
    let k = nems.len();
    let nem_shape = (k > 0).then_some(NemShape { s: k, starts });
    let basis = l.inverse().expect("row transform is nonsingular");
    let build = |perm: Vec<usize>| -> Result<(EquivWitness, Mat), PssError> {
        let sc = perm.iter().map(|&j| scale[j].clone()).collect();
        let canonical = t.select_columns(&perm);
        Ok((EquivWitness::new(basis.clone(), perm, sc)?, canonical))
    };

    let decomposition = match tail_cert {
        None => {
            let rest: Vec<usize> = (0..cols).filter(|&j| !used[j]).collect();
            let mut perm = pivots.clone();
            perm.extend(&nems);
            perm.extend(&rest);
            let (witness, canonical) = build(perm)?;
            Decomposition::In(InForm {
                ell,
                k,
                nem: canonical.block(0, n, ell, ell + k),
                tail: canonical.block(0, n, ell + k, cols),
                nem_shape,
                witness,
                canonical,
            })
        }
        Some((live, y)) => {
            let null: Vec<usize> = (0..cols)
                .filter(|&j| !used[j] && !live.contains(&j))
                .collect();
            let mut perm = pivots.clone();
            perm.extend(&nems);
            perm.extend(&live);
            perm.extend(&null);
            let (witness, canonical) = build(perm)?;
            let a0 = ell + k;
            let z0 = a0 + live.len();
            Decomposition::Ina(InaForm {
                ell,
                k,
                nem: canonical.block(0, ell, ell, a0),
                tail: canonical.block(0, ell, a0, z0),
                acyclic: canonical.block(ell, n, a0, z0),
                null_tail: canonical.block(0, ell, z0, cols),
                nem_shape,
                acyclic_certificate: y,
                witness,
                canonical,
            })
        }
    };
    decomposition.verify(m).map_err(PssError::SelfCheck)?;
    Ok(decomposition)
}

/// Replaces rows `r0..` of `m` by `g` times those rows.
fn transform_rows(m: &mut Mat, r0: usize, g: &Mat) {
    let (n, cols) = m.shape();
    let lower = g * &m.block(r0, n, 0, cols);
    for i in r0..n {
        for j in 0..cols {
            m[(i, j)] = lower[(i - r0, j)].clone();
        }
    }
}
