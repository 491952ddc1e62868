use rand::seq::SliceRandom;
use rand::Rng;

use super::{Digraph, OrientedCut, SpanningTree, UnionFind};
use crate::exact::{rat, EquivWitness, Mat, Rat};

/// Tree rooted at vertex 0: parent vertex, connecting arc and depth.
struct Rooted {
    parent: Vec<Option<(usize, usize)>>,
    depth: Vec<usize>,
}

fn root_tree(g: &Digraph, t: &SpanningTree) -> Rooted {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for &a in t.arcs() {
        let (u, v) = g.arc(a);
        adj[u].push((v, a));
        adj[v].push((u, a));
    }
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &(w, a) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((v, a));
                depth[w] = depth[v] + 1;
                stack.push(w);
            }
        }
    }
    Rooted { parent, depth }
}

/// `(n−1) × m` matrix whose column `j` encodes the tree path from the tail
/// to the head of arc `j`: `+1` for tree arcs traversed forward, `−1` for
/// tree arcs traversed backward. Rows follow the sorted tree arcs.
pub fn network_matrix(g: &Digraph, t: &SpanningTree) -> Mat {
    let rooted = root_tree(g, t);
    let mut m = Mat::zeros(g.vertex_count() - 1, g.arc_count());
    for (j, &(mut u, mut v)) in g.arcs().iter().enumerate() {
        // Climb from both ends to the common ancestor.
        while u != v {
            if rooted.depth[u] >= rooted.depth[v] {
                let (p, a) = rooted.parent[u].expect("non-root vertex has a parent");
                let row = t.row_of(a).expect("tree arc");
                // Travelling u → p.
                m[(row, j)] += if g.arc(a) == (u, p) { rat(1) } else { rat(-1) };
                u = p;
            } else {
                let (p, a) = rooted.parent[v].expect("non-root vertex has a parent");
                let row = t.row_of(a).expect("tree arc");
                // Travelling p → v.
                m[(row, j)] += if g.arc(a) == (p, v) { rat(1) } else { rat(-1) };
                v = p;
            }
        }
    }
    m
}

/// All spanning trees of `g` (as arc subsets), in lexicographic order.
pub fn enumerate_spanning_trees(g: &Digraph) -> Vec<SpanningTree> {
    let n = g.vertex_count();
    let m = g.arc_count();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n - 1);
    fn rec(
        g: &Digraph,
        start: usize,
        need: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<SpanningTree>,
    ) {
        if chosen.len() == need {
            if let Ok(t) = SpanningTree::new(g, chosen.clone()) {
                out.push(t);
            }
            return;
        }
        let remaining = need - chosen.len();
        for a in start..g.arc_count() {
            if g.arc_count() - a < remaining {
                break;
            }
            chosen.push(a);
            // Prune subsets that already contain a cycle.
            let mut uf = UnionFind::new(g.vertex_count());
            let acyclic = chosen.iter().all(|&b| uf.union(g.arc(b).0, g.arc(b).1));
            if acyclic {
                rec(g, a + 1, need, chosen, out);
            }
            chosen.pop();
        }
    }
    if m + 1 >= n {
        rec(g, 0, n - 1, &mut chosen, &mut out);
    }
    out
}

fn sorted_columns(m: &Mat) -> Vec<Vec<Rat>> {
    let mut cols = m.columns();
    cols.sort();
    cols
}

/// A spanning tree whose network matrix equals `m` up to a column
/// permutation, found by exhaustive search.
pub fn verify_sign_is_network_matrix(g: &Digraph, m: &Mat) -> Option<SpanningTree> {
    let n = g.vertex_count();
    if m.shape() != (n - 1, g.arc_count()) {
        return None;
    }
    let allowed = [rat(-1), rat(0), rat(1)];
    if (0..m.rows()).any(|i| m.row(i).iter().any(|v| !allowed.contains(v))) {
        return None;
    }
    let target = sorted_columns(m);
    enumerate_spanning_trees(g)
        .into_iter()
        .find(|t| sorted_columns(&network_matrix(g, t)) == target)
}

/// Witness `M′ = B⁻¹ M` between the network matrices of two spanning trees,
/// where `B` collects the columns of `M` indexed by the arcs of `t2`.
pub fn tree_change_witness(g: &Digraph, t1: &SpanningTree, t2: &SpanningTree) -> EquivWitness {
    let m = network_matrix(g, t1);
    let basis = m.select_columns(t2.arcs());
    let cols = g.arc_count();
    EquivWitness::new(basis, (0..cols).collect(), vec![rat(1); cols])
        .expect("tree arcs give a basis")
}

/// Characteristic vector of the tree arcs crossing an oriented cut, indexed
/// by network-matrix rows. It separates the network matrix.
pub fn cut_separating_vector(t: &SpanningTree, cut: &OrientedCut) -> Vec<Rat> {
    t.arcs()
        .iter()
        .map(|a| {
            if cut.cut_arcs.contains(a) {
                rat(1)
            } else {
                rat(0)
            }
        })
        .collect()
}

/// Uniformly shuffled Kruskal tree of the underlying undirected graph, or
/// `None` if it is disconnected.
pub fn random_spanning_tree<R: Rng + ?Sized>(g: &Digraph, rng: &mut R) -> Option<SpanningTree> {
    let mut order: Vec<usize> = (0..g.arc_count()).collect();
    order.shuffle(rng);
    let mut uf = UnionFind::new(g.vertex_count());
    let arcs: Vec<usize> = order
        .into_iter()
        .filter(|&a| uf.union(g.arc(a).0, g.arc(a).1))
        .collect();
    SpanningTree::new(g, arcs).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::find_oriented_cut;
    use crate::exact::rat_vec;

    fn two_circuits() -> (Digraph, SpanningTree) {
        let g = Digraph::new(5, vec![(4, 0), (0, 1), (1, 3), (2, 1), (3, 4), (3, 2)]).unwrap();
        let t = SpanningTree::new(&g, vec![0, 1, 2, 3]).unwrap();
        (g, t)
    }

    #[test]
    fn example_network_matrix() {
        let (g, t) = two_circuits();
        let expected = Mat::from_ints(&[
            [1, 0, 0, 0, -1, 0],
            [0, 1, 0, 0, -1, 0],
            [0, 0, 1, 0, -1, -1],
            [0, 0, 0, 1, 0, -1],
        ]);
        assert_eq!(network_matrix(&g, &t), expected);
        assert_eq!(verify_sign_is_network_matrix(&g, &expected), Some(t));
        let mut bad = expected.clone();
        bad[(0, 4)] = rat(2);
        assert_eq!(verify_sign_is_network_matrix(&g, &bad), None);
    }

    #[test]
    fn circuit_with_path_tree() {
        let g = Digraph::circuit(4);
        let t = SpanningTree::new(&g, vec![0, 1, 2]).unwrap();
        let expected = Mat::from_ints(&[[1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]]);
        assert_eq!(network_matrix(&g, &t), expected);
        assert_eq!(verify_sign_is_network_matrix(&g, &expected), Some(t));
    }

    #[test]
    fn changing_trees() {
        let (g, t1) = two_circuits();
        for t2 in enumerate_spanning_trees(&g) {
            let w = tree_change_witness(&g, &t1, &t2);
            let m1 = network_matrix(&g, &t1);
            let m2 = network_matrix(&g, &t2);
            assert!(w.verify(&m1, &m2).unwrap());
        }
    }

    #[test]
    fn cut_vector_separates() {
        let g = Digraph::new(
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
        .unwrap();
        let t = SpanningTree::new(&g, (0..6).collect()).unwrap();
        let cut = find_oriented_cut(&g).unwrap().unwrap();
        let y = cut_separating_vector(&t, &cut);
        assert_eq!(y, rat_vec(&[1, 1, 0, 0, 0, 0]));
        let m = network_matrix(&g, &t);
        let p = m.left_mul_vec(&y);
        assert!(p.iter().all(|v| *v >= rat(0)) && p.iter().any(|v| *v > rat(0)));
    }
}
