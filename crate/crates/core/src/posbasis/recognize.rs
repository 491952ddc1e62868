use super::structure::{critical_structure, CriticalStructure};
use crate::exact::{rref, Mat, Rref};
use crate::pss::{
    decompose_in_ina, stiemke_alternative, Decomposition, InForm, PositiveCombination,
    SeparatingVector, StiemkeOutcome,
};

/// Why a column of a positive basis cannot be dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColumnNecessity {
    /// The remaining columns span a smaller space.
    RankDrop,
    /// The remaining columns do not positively span their span.
    Separated(SeparatingVector),
}

/// Result of trying every single-column deletion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RemovalOutcome {
    NotPss(SeparatingVector),
    /// Deleting `column` leaves a positive spanning set of the same span;
    /// `combination` is indexed by the remaining columns.
    Removable {
        column: usize,
        combination: PositiveCombination,
    },
    /// Every column is needed.
    Minimal {
        combination: PositiveCombination,
        columns: Vec<ColumnNecessity>,
    },
}

fn without_column(d: &Mat, j: usize) -> Mat {
    let keep: Vec<usize> = (0..d.cols()).filter(|&c| c != j).collect();
    d.select_columns(&keep)
}

/// Positive combination of `d` if it positively spans its span.
fn positive_combination(d: &Mat) -> Result<PositiveCombination, SeparatingVector> {
    if d.cols() == 0 {
        return Ok(PositiveCombination { x: Vec::new() });
    }
    match stiemke_alternative(d) {
        StiemkeOutcome::Positive(c) => Ok(c),
        StiemkeOutcome::Separating(s) => Err(s),
    }
}

/// Decides minimality directly from the definition: a positive spanning set
/// is a positive basis iff no single column can be deleted without losing
/// the span or the positive spanning property.
pub fn removal_oracle(d: &Mat) -> RemovalOutcome {
    let combination = match positive_combination(d) {
        Ok(c) => c,
        Err(s) => return RemovalOutcome::NotPss(s),
    };
    let rank = d.rank();
    let mut columns = Vec::with_capacity(d.cols());
    for j in 0..d.cols() {
        let rest = without_column(d, j);
        if rest.rank() < rank {
            columns.push(ColumnNecessity::RankDrop);
            continue;
        }
        match positive_combination(&rest) {
            Ok(c) => {
                return RemovalOutcome::Removable {
                    column: j,
                    combination: c,
                }
            }
            Err(s) => columns.push(ColumnNecessity::Separated(s)),
        }
    }
    RemovalOutcome::Minimal {
        combination,
        columns,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisMethod {
    /// The matrix is not a positive spanning set of its span.
    Separation,
    CriticalStructure,
    RemovalOracle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisWitness {
    NotPss(SeparatingVector),
    /// IN form of the full-row-rank part of the matrix and the criticality
    /// of each free block. A negative verdict also names a removable column
    /// with a positive combination of the others.
    Structure {
        form: InForm,
        structure: CriticalStructure,
        block_verdicts: Vec<bool>,
        removable: Option<(usize, PositiveCombination)>,
    },
    Removable {
        column: usize,
        combination: PositiveCombination,
    },
    Minimal {
        combination: PositiveCombination,
        columns: Vec<ColumnNecessity>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosBasisReport {
    pub verdict: bool,
    pub method: BasisMethod,
    pub witness: BasisWitness,
}

/// Elimination data for `d` and the nonzero rows of its reduced form, which
/// have the same column dependencies as `d` and full row rank.
pub(crate) fn full_rank_rows(d: &Mat) -> (Rref, Mat) {
    let r = rref(d);
    let rank = r.pivots.len();
    let top = r.reduced.block(0, rank, 0, d.cols());
    (r, top)
}

impl PosBasisReport {
    fn from_removal(outcome: RemovalOutcome) -> PosBasisReport {
        let (verdict, method, witness) = match outcome {
            RemovalOutcome::NotPss(s) => (false, BasisMethod::Separation, BasisWitness::NotPss(s)),
            RemovalOutcome::Removable {
                column,
                combination,
            } => (
                false,
                BasisMethod::RemovalOracle,
                BasisWitness::Removable {
                    column,
                    combination,
                },
            ),
            RemovalOutcome::Minimal {
                combination,
                columns,
            } => (
                true,
                BasisMethod::RemovalOracle,
                BasisWitness::Minimal {
                    combination,
                    columns,
                },
            ),
        };
        PosBasisReport {
            verdict,
            method,
            witness,
        }
    }

    /// Re-checks the witness against `d` from scratch.
    pub fn verify(&self, d: &Mat) -> Result<(), String> {
        let fail = |msg: &str| Err(msg.to_string());
        match &self.witness {
            BasisWitness::NotPss(s) => {
                if self.verdict || self.method != BasisMethod::Separation {
                    return fail("a separated matrix is never a positive basis");
                }
                if !s.verify(d) {
                    return fail("separating vector does not verify");
                }
            }
            BasisWitness::Removable {
                column,
                combination,
            } => {
                if self.verdict || *column >= d.cols() {
                    return fail("removable column is inconsistent with the verdict");
                }
                let rest = without_column(d, *column);
                if rest.rank() != d.rank() {
                    return fail("removing the column loses rank");
                }
                if !combination.verify(&rest) {
                    return fail("combination of the remaining columns does not verify");
                }
            }
            BasisWitness::Minimal {
                combination,
                columns,
            } => {
                if !self.verdict || columns.len() != d.cols() {
                    return fail("minimality certificate is inconsistent with the verdict");
                }
                if !combination.verify(d) {
                    return fail("positive combination does not verify");
                }
                let rank = d.rank();
                for (j, why) in columns.iter().enumerate() {
                    let rest = without_column(d, j);
                    let ok = match why {
                        ColumnNecessity::RankDrop => rest.rank() < rank,
                        ColumnNecessity::Separated(s) => s.verify(&rest),
                    };
                    if !ok {
                        return Err(format!("column {j} is not shown to be necessary"));
                    }
                }
            }
            BasisWitness::Structure {
                form,
                structure,
                block_verdicts,
                removable,
            } => {
                if let Some((column, combination)) = removable {
                    if *column >= d.cols() || self.verdict {
                        return fail("removable column is inconsistent with the verdict");
                    }
                    let rest = without_column(d, *column);
                    if rest.rank() != d.rank() || !combination.verify(&rest) {
                        return fail("removable column does not verify");
                    }
                }
                let (_, top) = full_rank_rows(d);
                form.verify(&top)?;
                if critical_structure(form).map_err(|e| e.to_string())? != *structure {
                    return fail("critical structure does not match the IN form");
                }
                if structure.low_dim_verdicts().as_ref() != Some(block_verdicts) {
                    return fail("block verdicts do not match the blocks");
                }
                if self.verdict != block_verdicts.iter().all(|&b| b) {
                    return fail("verdict does not follow from the block verdicts");
                }
            }
        }
        Ok(())
    }
}

/// Decides whether the columns of `d` form a positive basis of their span.
///
/// A positive spanning set is reduced to full row rank and decomposed into
/// an IN form `[I N X]`. Extra columns `X` are removable. Otherwise the free
/// blocks of the critical structure decide when each has at most two rows,
/// and the removal oracle decides in all remaining cases.
pub fn is_positive_basis(d: &Mat) -> PosBasisReport {
    if let Err(s) = positive_combination(d) {
        return PosBasisReport::from_removal(RemovalOutcome::NotPss(s));
    }
    let (_, top) = full_rank_rows(d);
    if top.rows() == 0 {
        return PosBasisReport::from_removal(removal_oracle(d));
    }
    let form = match decompose_in_ina(&top) {
        Ok(Decomposition::In(f)) if f.ell == top.rows() && f.k > 0 => f,
        _ => return PosBasisReport::from_removal(removal_oracle(d)),
    };
    let ell = form.ell;
    if form.tail.cols() > 0 {
        let column = form.witness.perm[ell + form.k];
        if let Ok(combination) = positive_combination(&without_column(d, column)) {
            return PosBasisReport {
                verdict: false,
                method: BasisMethod::RemovalOracle,
                witness: BasisWitness::Removable {
                    column,
                    combination,
                },
            };
        }
        return PosBasisReport::from_removal(removal_oracle(d));
    }
    let structure = critical_structure(&form).expect("IN form of a basis candidate");
    match structure.low_dim_verdicts() {
        Some(block_verdicts) => {
            let verdict = block_verdicts.iter().all(|&b| b);
            let removable = match verdict {
                true => None,
                false => match removal_oracle(d) {
                    RemovalOutcome::Removable {
                        column,
                        combination,
                    } => Some((column, combination)),
                    _ => None,
                },
            };
            PosBasisReport {
                verdict,
                method: BasisMethod::CriticalStructure,
                witness: BasisWitness::Structure {
                    form,
                    structure,
                    block_verdicts,
                    removable,
                },
            }
        }
        None => PosBasisReport::from_removal(removal_oracle(d)),
    }
}
