//! Strong connectivity of a digraph through its network matrices.
//!
//! Run with `cargo run --example digraphs`.

use posspan::digraph::{
    cut_separating_vector, ear_decompose, enumerate_spanning_trees, find_oriented_cut,
    is_minimally_strongly_connected, network_matrix, Digraph, SpanningTree,
};
use posspan::pss::is_pss;

fn main() {
    let g = Digraph::new(
        6,
        vec![(0, 1), (1, 2), (2, 3), (3, 0), (1, 5), (5, 4), (4, 2)],
    )
    .expect("valid digraph");
    let ears = ear_decompose(&g).expect("strongly connected");
    println!("ears (arc indices): {:?}", ears.ears);
    println!(
        "minimally strongly connected: {}",
        is_minimally_strongly_connected(&g)
    );

    let trees = enumerate_spanning_trees(&g);
    println!(
        "{} spanning trees; every network matrix positively spans:",
        trees.len()
    );
    for t in trees.iter().take(3) {
        let m = network_matrix(&g, t);
        println!("tree {:?}\n{m}", t.arcs());
        assert!(is_pss(&m).is_pss_of_space());
    }

    let weak = Digraph::new(
        7,
        vec![
            (4, 6),
            (2, 1),
            (0, 1),
            (2, 3),
            (3, 4),
            (5, 0),
            (6, 5),
            (1, 6),
            (3, 1),
            (4, 2),
        ],
    )
    .expect("valid digraph");
    let cut = find_oriented_cut(&weak)
        .expect("connected")
        .expect("not strongly connected");
    println!(
        "oriented cut {:?} -> {:?} through arcs {:?}",
        cut.v1, cut.v2, cut.cut_arcs
    );
    let t = SpanningTree::new(&weak, (0..6).collect()).expect("spanning tree");
    let m = network_matrix(&weak, &t);
    let y = cut_separating_vector(&t, &cut);
    println!(
        "y = {:?} separates the network matrix: y^T M = {:?}",
        y.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        m.left_mul_vec(&y)
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
    );
}
