use std::collections::VecDeque;

use super::{Digraph, DigraphError};
use crate::exact::{rat, Rat};

/// Bipartition `(v1, v2)` with every crossing arc directed from `v1` to `v2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedCut {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub cut_arcs: Vec<usize>,
}

impl OrientedCut {
    pub fn verify(&self, g: &Digraph) -> bool {
        let n = g.vertex_count();
        let mut side = vec![None; n];
        for (s, set) in [(1, &self.v1), (2, &self.v2)] {
            for &v in set {
                if v >= n || side[v].is_some() {
                    return false;
                }
                side[v] = Some(s);
            }
        }
        if self.v1.is_empty() || self.v2.is_empty() || side.contains(&None) {
            return false;
        }
        let crossing: Vec<usize> = (0..g.arc_count())
            .filter(|&a| {
                let (t, h) = g.arc(a);
                side[t] == Some(1) && side[h] == Some(2)
            })
            .collect();
        let backwards = g
            .arcs()
            .iter()
            .any(|&(t, h)| side[t] == Some(2) && side[h] == Some(1));
        !backwards && crossing == self.cut_arcs
    }
}

/// `None` when `g` is strongly connected; otherwise the cut with `v2` the
/// vertices reachable from the first vertex that does not reach everything.
pub fn find_oriented_cut(g: &Digraph) -> Result<Option<OrientedCut>, DigraphError> {
    if !g.is_weakly_connected() {
        return Err(DigraphError::NotConnected);
    }
    let n = g.vertex_count();
    for v in 0..n {
        let reach = g.reach(v, false);
        if reach.iter().all(|&b| b) {
            continue;
        }
        let v2: Vec<usize> = (0..n).filter(|&u| reach[u]).collect();
        let v1: Vec<usize> = (0..n).filter(|&u| !reach[u]).collect();
        let cut_arcs = (0..g.arc_count())
            .filter(|&a| {
                let (t, h) = g.arc(a);
                !reach[t] && reach[h]
            })
            .collect();
        return Ok(Some(OrientedCut { v1, v2, cut_arcs }));
    }
    Ok(None)
}

/// Ears as ordered arc-index paths; the first ear is a circuit through
/// `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EarDecomposition {
    pub start: usize,
    pub ears: Vec<Vec<usize>>,
}

pub fn ear_decompose(g: &Digraph) -> Result<EarDecomposition, DigraphError> {
    if !g.is_strongly_connected() {
        return Err(DigraphError::NotStronglyConnected);
    }
    let n = g.vertex_count();
    let m = g.arc_count();
    let mut out_arcs = vec![Vec::new(); n];
    for (a, &(t, _)) in g.arcs().iter().enumerate() {
        out_arcs[t].push(a);
    }
    let mut ears = Vec::new();
    if m == 0 {
        return Ok(EarDecomposition { start: 0, ears });
    }

    // Shortest circuit through vertex 0.
    let parent = bfs_tree(g, &out_arcs, 0, |_| true);
    let closing = (0..m)
        .filter(|&a| g.arc(a).1 == 0 && parent[g.arc(a).0].is_some())
        .min_by_key(|&a| (path_to(g, &parent, g.arc(a).0).len(), a))
        .expect("strongly connected digraph has a circuit through 0");
    let mut first = path_to(g, &parent, g.arc(closing).0);
    first.push(closing);

    let mut used = vec![false; m];
    let mut in_union = vec![false; n];
    in_union[0] = true;
    let absorb = |ear: &[usize], used: &mut Vec<bool>, in_union: &mut Vec<bool>| {
        for &a in ear {
            used[a] = true;
            in_union[g.arc(a).0] = true;
            in_union[g.arc(a).1] = true;
        }
    };
    absorb(&first, &mut used, &mut in_union);
    ears.push(first);

    while let Some(a) = (0..m).find(|&a| !used[a] && in_union[g.arc(a).0]) {
        let (_, h) = g.arc(a);
        let mut ear = vec![a];
        if !in_union[h] {
            // Shortest path from h back into the union through new vertices.
            let parent = bfs_tree(g, &out_arcs, h, |v| !in_union[v]);
            let back = (0..m)
                .filter(|&b| {
                    let (t, hh) = g.arc(b);
                    !used[b] && b != a && in_union[hh] && !in_union[t] && parent[t].is_some()
                })
                .min_by_key(|&b| (path_to(g, &parent, g.arc(b).0).len(), b))
                .expect("strong connectivity gives a way back");
            ear.extend(path_to(g, &parent, g.arc(back).0));
            ear.push(back);
        }
        absorb(&ear, &mut used, &mut in_union);
        ears.push(ear);
    }
    Ok(EarDecomposition { start: 0, ears })
}

/// BFS from `root` through vertices accepted by `allowed`; `parent[v]` is
/// the arc used to reach `v` (the root maps to `Some(usize::MAX)`).
fn bfs_tree(
    g: &Digraph,
    out_arcs: &[Vec<usize>],
    root: usize,
    allowed: impl Fn(usize) -> bool,
) -> Vec<Option<usize>> {
    let mut parent = vec![None; g.vertex_count()];
    parent[root] = Some(usize::MAX);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &a in &out_arcs[v] {
            let h = g.arc(a).1;
            if parent[h].is_none() && allowed(h) {
                parent[h] = Some(a);
                queue.push_back(h);
            }
        }
    }
    parent
}

fn path_to(g: &Digraph, parent: &[Option<usize>], mut v: usize) -> Vec<usize> {
    let mut path = Vec::new();
    while let Some(a) = parent[v] {
        if a == usize::MAX {
            break;
        }
        path.push(a);
        v = g.arc(a).0;
    }
    path.reverse();
    path
}

/// Checks the structural conditions of an ear decomposition.
pub fn validate_ears(g: &Digraph, d: &EarDecomposition) -> Result<(), String> {
    let n = g.vertex_count();
    let m = g.arc_count();
    if d.start >= n {
        return Err(format!("start vertex {} out of range", d.start));
    }
    let mut used = vec![false; m];
    let mut in_union = vec![false; n];
    in_union[d.start] = true;
    for (k, ear) in d.ears.iter().enumerate() {
        if ear.is_empty() {
            return Err(format!("ear {k} is empty"));
        }
        for &a in ear {
            if a >= m || std::mem::replace(&mut used[a], true) {
                return Err(format!("arc {a} missing or used twice"));
            }
        }
        if ear.windows(2).any(|w| g.arc(w[0]).1 != g.arc(w[1]).0) {
            return Err(format!("ear {k} is not a directed path"));
        }
        let first = g.arc(ear[0]).0;
        let last = g.arc(ear[ear.len() - 1]).1;
        if !in_union[first] || !in_union[last] {
            return Err(format!(
                "ear {k} does not start and end in the current union"
            ));
        }
        if k == 0 && (first != d.start || last != d.start) {
            return Err("first ear is not a circuit through the start vertex".into());
        }
        let mut seen_internal = Vec::new();
        for &a in &ear[..ear.len() - 1] {
            let v = g.arc(a).1;
            if in_union[v] || seen_internal.contains(&v) {
                return Err(format!("ear {k} revisits vertex {v}"));
            }
            seen_internal.push(v);
        }
        for v in seen_internal {
            in_union[v] = true;
        }
    }
    if used.iter().any(|&u| !u) {
        return Err("ears do not cover every arc".into());
    }
    if in_union.iter().any(|&b| !b) {
        return Err("ears do not reach every vertex".into());
    }
    Ok(())
}

/// Positive circulation (arc multiplicities) obtained by closing every ear
/// with a path inside the earlier ears. It lies in the kernel of every
/// network matrix of `g`.
pub fn circulation_from_ears(g: &Digraph, d: &EarDecomposition) -> Vec<Rat> {
    let n = g.vertex_count();
    let mut count = vec![0i64; g.arc_count()];
    let mut union_arcs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for ear in &d.ears {
        let first = g.arc(ear[0]).0;
        let last = g.arc(ear[ear.len() - 1]).1;
        for &a in ear {
            count[a] += 1;
        }
        if last != first {
            let parent = bfs_tree(g, &union_arcs, last, |_| true);
            for a in path_to(g, &parent, first) {
                count[a] += 1;
            }
        }
        for &a in ear {
            union_arcs[g.arc(a).0].push(a);
        }
    }
    count.into_iter().map(rat).collect()
}
