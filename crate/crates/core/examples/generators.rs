//! Seeded generators for positive bases and minimally strongly connected
//! digraphs.
//!
//! Run with `cargo run --example generators`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use posspan::digraph::{
    format_digraph, gen_min_sc_n_plus_1, gen_min_sc_two_n_minus_3, is_minimally_strongly_connected,
    random_min_sc_two_n_minus_3, TreeSpec,
};
use posspan::exact::rat_vec;
use posspan::posbasis::{
    gen_maximal_pb, gen_minimal_pb, gen_pb_l_plus_2, is_positive_basis, random_pb_2l_minus_1,
};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (pb, x) = random_pb_2l_minus_1(4, 4, &mut rng).expect("valid dimensions");
    let matrices = [
        (
            "minimal, l = 3 in R^4",
            gen_minimal_pb(3, 4).expect("valid dimensions"),
        ),
        (
            "maximal, l = 3",
            gen_maximal_pb(3, 3).expect("valid dimensions"),
        ),
        (
            "size l+2, l = 4, k = 2",
            gen_pb_l_plus_2(4, 4, 2, &rat_vec(&[0, -1])).expect("valid x"),
        ),
        ("size 2l-1, l = 4, seed 7", pb),
    ];
    println!(
        "seeded x = {:?}",
        x.iter().map(|v| v.to_string()).collect::<Vec<_>>()
    );
    for (name, m) in matrices {
        println!(
            "{name}: positive basis = {}\n{m}",
            is_positive_basis(&m).verdict
        );
    }

    let two_circuits = gen_min_sc_n_plus_1(5, 1, 2).expect("valid parameters");
    let with_tree =
        gen_min_sc_two_n_minus_3(6, 2, &[TreeSpec::path(0, 2)]).expect("valid parameters");
    let random = random_min_sc_two_n_minus_3(8, &mut rng).expect("n >= 3");
    for g in [two_circuits, with_tree, random] {
        println!(
            "{} vertices, {} arcs, minimally strongly connected = {}\n{}",
            g.vertex_count(),
            g.arc_count(),
            is_minimally_strongly_connected(&g),
            format_digraph(&g)
        );
    }
}
