use rand::seq::SliceRandom;
use rand::Rng;

use super::{Digraph, DigraphError};

/// Strongly connected, and deleting any single arc destroys that.
pub fn is_minimally_strongly_connected(g: &Digraph) -> bool {
    g.is_strongly_connected()
        && (0..g.arc_count()).all(|a| !g.without_arc(a).is_strongly_connected())
}

/// A tree hanging off one circuit vertex.
///
/// `anchor` is a circuit vertex: `0` is `u`, `1` is `v`, `2 + i` is `wᵢ`.
/// Tree vertex `k` is attached to `parents[k]`, where `0` names the anchor
/// and `p ≥ 1` names tree vertex `p − 1` (so `parents[k] ≤ k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeSpec {
    pub anchor: usize,
    pub parents: Vec<usize>,
}

impl TreeSpec {
    /// Path of `size` vertices hanging from `anchor`.
    pub fn path(anchor: usize, size: usize) -> TreeSpec {
        TreeSpec {
            anchor,
            parents: (0..size).collect(),
        }
    }
}

fn inconsistent(msg: impl Into<String>) -> DigraphError {
    DigraphError::InconsistentParameters(msg.into())
}

/// `c` circuits `u → v → wᵢ → u` sharing the arc `u → v`, with bi-directed
/// trees attached to distinct circuit vertices. Vertices: `u = 0`, `v = 1`,
/// `wᵢ = 2 + i`, then tree vertices in order. The result has `2n − 3` arcs.
pub fn gen_min_sc_two_n_minus_3(
    n: usize,
    c: usize,
    trees: &[TreeSpec],
) -> Result<Digraph, DigraphError> {
    if c == 0 {
        return Err(inconsistent("at least one circuit is required"));
    }
    let core = c + 2;
    let extra: usize = trees.iter().map(|t| t.parents.len()).sum();
    if n != core + extra {
        return Err(inconsistent(format!(
            "{c} circuits and {extra} tree vertices give {} vertices, not {n}",
            core + extra
        )));
    }
    let mut anchors: Vec<usize> = trees.iter().map(|t| t.anchor).collect();
    anchors.sort_unstable();
    if anchors.windows(2).any(|w| w[0] == w[1]) {
        return Err(inconsistent("two trees share a circuit vertex"));
    }
    if anchors.last().is_some_and(|&a| a >= core) {
        return Err(inconsistent("tree anchor is not a circuit vertex"));
    }
    let mut arcs = vec![(0, 1)];
    for i in 0..c {
        arcs.push((1, 2 + i));
        arcs.push((2 + i, 0));
    }
    let mut next = core;
    for t in trees {
        if t.parents.is_empty() {
            return Err(inconsistent("empty tree"));
        }
        let base = next;
        for (k, &p) in t.parents.iter().enumerate() {
            if p > k {
                return Err(inconsistent(format!(
                    "tree parent {p} of vertex {k} is not earlier"
                )));
            }
            let parent = if p == 0 { t.anchor } else { base + p - 1 };
            let child = base + k;
            arcs.push((parent, child));
            arcs.push((child, parent));
        }
        next += t.parents.len();
    }
    Digraph::new(n, arcs)
}

/// Two circuits sharing an elementary path of `shared` arcs (a single vertex
/// when `shared == 0`), closed by return paths of `q1, q2 ≥ 2` arcs with
/// `q1 + q2 = n + 1 − shared`. Vertices: the shared path is `0 → … → shared`,
/// then the interior vertices of the two return paths.
pub fn gen_min_sc_n_plus_1(n: usize, shared: usize, q1: usize) -> Result<Digraph, DigraphError> {
    let total = (n + 1)
        .checked_sub(shared)
        .ok_or_else(|| inconsistent("shared path longer than the digraph"))?;
    let q2 = total
        .checked_sub(q1)
        .ok_or_else(|| inconsistent("first return path too long"))?;
    // A one-arc return path is a chord of the other circuit (or a self-loop
    // when nothing is shared), so deleting it keeps strong connectivity.
    if q1 < 2 || q2 < 2 {
        return Err(inconsistent(format!(
            "return paths of {q1} and {q2} arcs; each needs at least 2"
        )));
    }
    let mut arcs: Vec<(usize, usize)> = (0..shared).map(|i| (i, i + 1)).collect();
    let mut next = shared + 1;
    for q in [q1, q2] {
        let mut prev = shared;
        for _ in 1..q {
            arcs.push((prev, next));
            prev = next;
            next += 1;
        }
        arcs.push((prev, 0));
    }
    debug_assert_eq!(next, n);
    Digraph::new(n, arcs)
}

/// Random member of the `2n − 3` family on `n ≥ 3` vertices.
pub fn random_min_sc_two_n_minus_3<R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<Digraph, DigraphError> {
    if n < 3 {
        return Err(inconsistent("the family needs n ≥ 3"));
    }
    let c = rng.gen_range(1..=n - 2);
    let core = c + 2;
    let mut remaining = n - core;
    let mut anchors: Vec<usize> = (0..core).collect();
    anchors.shuffle(rng);
    let mut trees = Vec::new();
    for (idx, &anchor) in anchors.iter().enumerate() {
        if remaining == 0 {
            break;
        }
        let size = if idx + 1 == anchors.len() {
            remaining
        } else {
            rng.gen_range(0..=remaining)
        };
        if size == 0 {
            continue;
        }
        let parents = (0..size).map(|k| rng.gen_range(0..=k)).collect();
        trees.push(TreeSpec { anchor, parents });
        remaining -= size;
    }
    gen_min_sc_two_n_minus_3(n, c, &trees)
}

/// Random member of the `n + 1` family on `n ≥ 3` vertices.
pub fn random_min_sc_n_plus_1<R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<Digraph, DigraphError> {
    if n < 3 {
        return Err(inconsistent("the family needs n ≥ 3"));
    }
    let shared = rng.gen_range(0..=n - 3);
    let total = n + 1 - shared;
    let q1 = rng.gen_range(2..=total - 2);
    gen_min_sc_n_plus_1(n, shared, q1)
}

/// Random weakly connected digraph: a randomly oriented random tree plus
/// `extra` random arcs.
pub fn random_connected_digraph<R: Rng + ?Sized>(n: usize, extra: usize, rng: &mut R) -> Digraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut arcs = Vec::new();
    for k in 1..n {
        let a = order[rng.gen_range(0..k)];
        let b = order[k];
        arcs.push(if rng.gen_bool(0.5) { (a, b) } else { (b, a) });
    }
    if n >= 2 {
        for _ in 0..extra {
            let t = rng.gen_range(0..n);
            let mut h = rng.gen_range(0..n - 1);
            if h >= t {
                h += 1;
            }
            arcs.push((t, h));
        }
    }
    arcs.shuffle(rng);
    Digraph::new(n, arcs).expect("valid random arcs")
}
