//! Exact Phase-1 simplex for `A x = b, x ≥ 0` with Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::exact::{Mat, Rat};

pub(crate) enum Feasibility {
    /// `x ≥ 0` with `A x = b`.
    Feasible(Vec<Rat>),
    /// Farkas certificate `y` with `yᵀA ≥ 0` and `yᵀb < 0`.
    Infeasible(Vec<Rat>),
}

pub(crate) fn feasibility(a: &Mat, b: &[Rat]) -> Feasibility {
    let (k, m) = a.shape();
    assert_eq!(b.len(), k, "right-hand side length");
    let width = m + k;

    // Rows flipped so that the right-hand side is nonnegative.
    let sign: Vec<Rat> = b
        .iter()
        .map(|v| {
            if v.is_negative() {
                -Rat::one()
            } else {
                Rat::one()
            }
        })
        .collect();
    let mut tab: Vec<Vec<Rat>> = (0..k)
        .map(|i| {
            let mut row: Vec<Rat> = a.row(i).iter().map(|v| v * &sign[i]).collect();
            row.extend((0..k).map(|j| if j == i { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    let mut rhs: Vec<Rat> = b.iter().zip(&sign).map(|(v, s)| v * s).collect();
    let mut basis: Vec<usize> = (m..width).collect();

    // Reduced costs of the auxiliary objective `Σ artificials`.
    let mut cost = vec![Rat::zero(); width];
    for row in &tab {
        for (c, v) in cost.iter_mut().zip(&row[..m]) {
            *c -= v;
        }
    }
    let mut neg_value: Rat = -rhs.iter().sum::<Rat>();

    while let Some(e) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..k {
            if !tab[i][e].is_positive() {
                continue;
            }
            let r = &rhs[i] / &tab[i][e];
            let better = match &leave {
                None => true,
                Some((l, best)) => r < *best || (r == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, r));
            }
        }
        // The auxiliary problem is bounded below by zero.
        let (r, _) = leave.expect("phase-1 objective is bounded");

        let piv = tab[r][e].recip();
        for v in tab[r].iter_mut() {
            *v *= &piv;
        }
        rhs[r] *= &piv;
        let prow = tab[r].clone();
        let prhs = rhs[r].clone();
        for i in 0..k {
            if i == r || tab[i][e].is_zero() {
                continue;
            }
            let f = tab[i][e].clone();
            for (v, p) in tab[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            rhs[i] -= &f * &prhs;
        }
        let f = cost[e].clone();
        for (v, p) in cost.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
        neg_value -= &f * &prhs;
        basis[r] = e;
    }

    if neg_value.is_zero() {
        let mut x = vec![Rat::zero(); m];
        for (i, &j) in basis.iter().enumerate() {
            if j < m {
                x[j] = rhs[i].clone();
            }
        }
        Feasibility::Feasible(x)
    } else {
        // Duals of the flipped system: π_i = 1 − (reduced cost of artificial i).
        let y = (0..k)
            .map(|i| -(&sign[i] * (Rat::one() - &cost[m + i])))
            .collect();
        Feasibility::Infeasible(y)
    }
}
