//! IN / INA decomposition with an equivalence witness.
//!
//! Run with `cargo run --example decomposition`.

use posspan::exact::Mat;
use posspan::pss::{decompose_in_ina, Decomposition};

fn show(d: &Mat) {
    let dec = decompose_in_ina(d).expect("nonzero matrix");
    dec.verify(d).expect("decomposition verifies");
    match &dec {
        Decomposition::In(f) => {
            println!("IN form, ell = {}, k = {}", f.ell, f.k);
            if let Some(shape) = &f.nem_shape {
                println!("NEM breakpoints {:?}", shape.breakpoints());
            }
        }
        Decomposition::Ina(f) => {
            println!("INA form, ell = {}, k = {}", f.ell, f.k);
            println!(
                "acyclic block:\n{}Gordan vector {:?}",
                f.acyclic,
                f.acyclic_certificate
                    .y
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
            );
        }
    }
    let w = dec.witness();
    println!("canonical = B^-1 D P Delta with column order {:?}", w.perm);
    println!("{}", dec.canonical());
    assert_eq!(w.apply(d).expect("shapes agree"), *dec.canonical());
}

fn main() {
    // Positively spans R^3: rows of [I3 -1 e3] mixed by an invertible matrix.
    show(&Mat::from_ints(&[
        [1, 1, 0, -2, 0],
        [0, 1, 0, -1, 0],
        [1, 0, 1, -2, 1],
    ]));
    // Network matrix of a digraph that is not strongly connected.
    show(&Mat::from_ints(&[
        [1, 0, 0, 0, 0, 0, -1, 1, 0, 0],
        [0, 1, 0, 0, 0, 0, 1, -1, 1, 0],
        [0, 0, 1, 0, 0, 0, -1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, -1, 1, -1, -1],
        [0, 0, 0, 0, 1, 0, -1, 1, 0, -1],
        [0, 0, 0, 0, 0, 1, -1, 0, 0, 0],
    ]));
}
