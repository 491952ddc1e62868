//! Reducing positive bases of size 2ℓ − 1 and ℓ + 2 to canonical form.
//!
//! Run with `cargo run --example near_extreme`.

use posspan::exact::{rat, rat_vec, EquivWitness, Mat, Rat};
use posspan::posbasis::{
    gen_pb_2l_minus_1, gen_pb_l_plus_2, reduce_to_near_extreme_form, NearExtremeForm,
};

fn entries(x: &[Rat]) -> Vec<String> {
    x.iter().map(|v| v.to_string()).collect()
}

/// Hides a canonical basis behind a row mix, a column shuffle and positive
/// column scalings.
fn disguise(m: &Mat, basis: Mat, perm: Vec<usize>) -> Mat {
    let scale = (0..perm.len()).map(|j| rat(1 + (j as i64 % 3))).collect();
    EquivWitness::new(basis, perm, scale)
        .expect("invertible basis")
        .apply(m)
        .expect("shapes agree")
}

fn main() {
    let five_in_r3 = disguise(
        &gen_pb_2l_minus_1(3, 3, &rat_vec(&[-1])).expect("valid x"),
        Mat::from_ints(&[[1, 1, 0], [0, 1, 0], [2, 0, 1]]),
        vec![3, 0, 4, 2, 1],
    );
    let six_in_r4 = disguise(
        &gen_pb_l_plus_2(4, 4, 2, &rat_vec(&[0, -2])).expect("valid x"),
        Mat::from_ints(&[[1, 0, 0, 1], [0, 1, 0, 0], [1, 0, 1, 0], [0, 0, 1, 1]]),
        vec![5, 1, 0, 3, 4, 2],
    );
    // Maximal positive basis of R^3: six vectors, neither 2l-1 nor l+2.
    let not_near_extreme = Mat::from_ints(&[
        [1, 0, 0, -1, 0, 0],
        [0, 1, 0, 0, -1, 0],
        [0, 0, 1, 0, 0, -1],
    ]);
    for d in [five_in_r3, six_in_r4, not_near_extreme] {
        println!("input:\n{d}");
        let forms = reduce_to_near_extreme_form(&d);
        if forms.is_empty() {
            println!("no near-extreme form\n");
            continue;
        }
        for f in &forms {
            match f {
                NearExtremeForm::TwoEllMinusOne { ell, x, .. } => {
                    println!("size 2l-1 family, l = {ell}, x = {:?}", entries(x))
                }
                NearExtremeForm::EllPlusTwo { ell, k, x, .. } => {
                    println!("size l+2 family, l = {ell}, k = {k}, x = {:?}", entries(x))
                }
            }
            assert!(f.verify(&d));
            println!("{}", f.canonical());
        }
    }
}
