//! Decide positive spanning with exact certificates.
//!
//! Run with `cargo run --example check_pss`.

use posspan::exact::{parse_matrix, Mat};
use posspan::pss::{is_pss, SpanVerdict};

fn describe(name: &str, d: &Mat) {
    println!("{name}:\n{d}");
    match is_pss(d) {
        SpanVerdict::Spans(c) => {
            println!(
                "  spans R^{} with D x = 0, x = {:?}",
                d.rows(),
                strings(&c.x)
            );
            assert!(c.verify(d));
        }
        SpanVerdict::SpansSubspace {
            combination,
            rank,
            normal,
        } => {
            println!(
                "  positively spans a subspace of dimension {rank}; x = {:?}, normal = {:?}",
                strings(&combination.x),
                strings(&normal)
            );
        }
        SpanVerdict::NotPss(s) => {
            println!(
                "  not a PSS: y^T D = {:?} with y = {:?}",
                strings(&d.left_mul_vec(&s.y)),
                strings(&s.y)
            );
            assert!(s.verify(d));
        }
    }
}

fn strings(v: &[posspan::exact::Rat]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn main() {
    let m1 = Mat::from_ints(&[
        [1, 0, 0, 0, -1, 0],
        [0, 1, 0, 0, -1, 0],
        [0, 0, 1, 0, -1, -1],
        [0, 0, 0, 1, 0, -1],
    ]);
    describe("network matrix of a strongly connected digraph", &m1);

    let half_plane = parse_matrix("2 3\n1 -1 0\n0 0 1\n").expect("valid matrix");
    describe("three vectors in a half-plane", &half_plane);

    let line = parse_matrix("2 2\n1 -1\n2 -2\n").expect("valid matrix");
    describe("a line through the origin", &line);

    let rational = parse_matrix("2 3\n1/2 -1 0\n1/3 1/3 -2/7\n").expect("valid matrix");
    describe("rational entries", &rational);
}
