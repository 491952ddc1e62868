//! Positive basis recognition and critical vectors.
//!
//! Run with `cargo run --example positive_basis`.

use posspan::exact::{rat_vec, Mat};
use posspan::posbasis::{is_critical_vector, is_positive_basis, replacement_oracle, BasisWitness};

fn main() {
    for v in [[-1, 0, -2], [1, 1, -3], [2, 1, 0], [-1, -1, -1]] {
        let v = rat_vec(&v);
        let verdict = is_critical_vector(&v).expect("dimension at least 2");
        println!(
            "{:?}: critical = {} (cone {:?}), replacement oracle agrees: {}",
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            verdict.is_critical,
            verdict.cone,
            replacement_oracle(&v).expect("dimension at least 2") == verdict.is_critical
        );
    }

    let candidates = [
        (
            "[I2 -e1 -1]",
            Mat::from_ints(&[[1, 0, -1, -1], [0, 1, 0, -1]]),
        ),
        (
            "[I3 -1]",
            Mat::from_ints(&[[1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]]),
        ),
        (
            "D5,8",
            Mat::from_ints(&[
                [1, 0, 0, 0, 0, -1, 0, 0],
                [0, 1, 0, 0, 0, -1, -1, 1],
                [0, 0, 1, 0, 0, -1, -1, 1],
                [0, 0, 0, 1, 0, 0, -1, 0],
                [0, 0, 0, 0, 1, 0, 0, -1],
            ]),
        ),
        (
            "[I2 -I2 e1]",
            Mat::from_ints(&[[1, 0, -1, 0, 1], [0, 1, 0, -1, 0]]),
        ),
    ];
    for (name, d) in candidates {
        let report = is_positive_basis(&d);
        report.verify(&d).expect("certificate verifies");
        print!(
            "{name}: positive basis = {} via {:?}",
            report.verdict, report.method
        );
        match &report.witness {
            BasisWitness::Removable { column, .. } => print!(", column {column} is redundant"),
            BasisWitness::Structure {
                removable: Some((column, _)),
                ..
            } => {
                print!(", column {column} is redundant")
            }
            _ => {}
        }
        println!();
    }
}
