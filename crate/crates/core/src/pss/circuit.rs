use num_traits::{Signed, Zero};

use super::alternatives::{gordan_alternative, stiemke_alternative, GordanOutcome, StiemkeOutcome};
use super::PssError;
use crate::exact::{complete_basis, rref, EquivWitness, Mat, Rat};

/// Inclusion-minimal non-acyclic column subset, or `None` if `d` is acyclic.
pub fn find_circuit(d: &Mat) -> Option<Vec<usize>> {
    find_circuit_with_combination(d).map(|(c, _)| c)
}

/// Like [`find_circuit`], also returning the strictly positive combination
/// `x` (indexed like the circuit) with `D[:, C] x = 0`.
pub fn find_circuit_with_combination(d: &Mat) -> Option<(Vec<usize>, Vec<Rat>)> {
    if let Some(j) = (0..d.cols()).find(|&j| d.column_is_zero(j)) {
        return Some((vec![j], vec![Rat::from_integer(1.into())]));
    }
    let GordanOutcome::Dependent(x) = gordan_alternative(d) else {
        return None;
    };
    let mut support: Vec<usize> = (0..d.cols()).filter(|&j| x[j].is_positive()).collect();
    let mut comb: Vec<Rat> = support.iter().map(|&j| x[j].clone()).collect();
    'shrink: loop {
        for drop in 0..support.len() {
            let rest: Vec<usize> = support
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != drop)
                .map(|(_, &j)| j)
                .collect();
            if let GordanOutcome::Dependent(y) = gordan_alternative(&d.select_columns(&rest)) {
                let keep: Vec<usize> = (0..rest.len()).filter(|&k| y[k].is_positive()).collect();
                support = keep.iter().map(|&k| rest[k]).collect();
                comb = keep.iter().map(|&k| y[k].clone()).collect();
                continue 'shrink;
            }
        }
        break;
    }
    Some((support, comb))
}

/// True iff `d` positively spans its own span and has exactly one more
/// column than its rank.
pub fn is_circuit(d: &Mat) -> bool {
    d.cols() >= 1 && d.cols() == d.rank() + 1 && stiemke_alternative(d).is_positive()
}

/// Structured proof that a matrix is not acyclic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonAcyclicWitness {
    ZeroColumn(usize),
    /// `witness` maps the matrix to `[Iℓ −1ℓ X; 0 0 Y]`.
    Circuit {
        ell: usize,
        witness: EquivWitness,
        canonical: Mat,
    },
}

impl NonAcyclicWitness {
    pub fn verify(&self, m: &Mat) -> bool {
        match self {
            NonAcyclicWitness::ZeroColumn(j) => *j < m.cols() && m.column_is_zero(*j),
            NonAcyclicWitness::Circuit {
                ell,
                witness,
                canonical,
            } => {
                let ell = *ell;
                let n = m.rows();
                if ell == 0 || ell > n || m.cols() < ell + 1 {
                    return false;
                }
                let mut expected = Mat::zeros(n, ell + 1);
                for i in 0..ell {
                    expected[(i, i)] = Rat::from_integer(1.into());
                    expected[(i, ell)] = Rat::from_integer((-1).into());
                }
                witness.verify(m, canonical).unwrap_or(false)
                    && canonical.block(0, n, 0, ell + 1) == expected
            }
        }
    }
}

pub fn non_acyclic_witness(m: &Mat) -> Result<NonAcyclicWitness, PssError> {
    let Some((circuit, x)) = find_circuit_with_combination(m) else {
        return Err(PssError::IsAcyclic);
    };
    if circuit.len() == 1 {
        return Ok(NonAcyclicWitness::ZeroColumn(circuit[0]));
    }
    let n = m.rows();
    let ell = circuit.len() - 1;
    let mut perm = circuit.clone();
    perm.extend((0..m.cols()).filter(|j| !circuit.contains(j)));
    let mut scale = vec![Rat::from_integer(1.into()); m.cols()];
    scale[..=ell].clone_from_slice(&x);
    let pivots: Vec<Vec<Rat>> = (0..ell)
        .map(|k| {
            m.column(circuit[k])
                .into_iter()
                .map(|v| v * &x[k])
                .collect()
        })
        .collect();
    let witness = EquivWitness::new(complete_basis(n, &pivots), perm, scale)?;
    let canonical = witness.apply(m)?;
    Ok(NonAcyclicWitness::Circuit {
        ell,
        witness,
        canonical,
    })
}

/// Equivalence of a positive spanning set of an `ℓ`-dimensional span to
/// `[Iℓ v₁ … v_{m−ℓ}; 0 0 … 0]` with `Σ vᵢ = −1ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalPss {
    pub ell: usize,
    pub vectors: Vec<Vec<Rat>>,
    pub witness: EquivWitness,
    pub canonical: Mat,
}

pub fn canonical_pss_form(d: &Mat) -> Result<CanonicalPss, PssError> {
    let StiemkeOutcome::Positive(comb) = stiemke_alternative(d) else {
        return Err(PssError::NotPss);
    };
    let (n, m) = d.shape();
    let mut scaled = d.clone();
    for (j, s) in comb.x.iter().enumerate() {
        scaled.scale_column(j, s);
    }
    let pivots = rref(&scaled).pivots;
    let ell = pivots.len();
    let mut perm = pivots.clone();
    perm.extend((0..m).filter(|j| !pivots.contains(j)));
    let basis = complete_basis(
        n,
        &pivots.iter().map(|&j| scaled.column(j)).collect::<Vec<_>>(),
    );
    let scale = perm.iter().map(|&j| comb.x[j].clone()).collect();
    let witness = EquivWitness::new(basis, perm, scale)?;
    let canonical = witness.apply(d)?;
    let vectors = (ell..m)
        .map(|j| canonical.column(j)[..ell].to_vec())
        .collect();
    Ok(CanonicalPss {
        ell,
        vectors,
        witness,
        canonical,
    })
}

impl CanonicalPss {
    pub fn verify(&self, d: &Mat) -> bool {
        let (n, m) = d.shape();
        let ell = self.ell;
        if !self.witness.verify(d, &self.canonical).unwrap_or(false)
            || self.vectors.len() != m - ell
        {
            return false;
        }
        let identity_ok = (0..n).all(|i| {
            (0..ell).all(|j| self.canonical[(i, j)] == if i == j { one() } else { Rat::zero() })
        });
        let bottom_zero = (ell..n).all(|i| self.canonical.row(i).iter().all(Zero::is_zero));
        let columns_ok = self
            .vectors
            .iter()
            .enumerate()
            .all(|(k, v)| v[..] == self.canonical.column(ell + k)[..ell]);
        let sum_ok = (0..ell).all(|i| self.vectors.iter().map(|v| &v[i]).sum::<Rat>() == -one());
        identity_ok && bottom_zero && columns_ok && sum_ok
    }
}

fn one() -> Rat {
    Rat::from_integer(1.into())
}
