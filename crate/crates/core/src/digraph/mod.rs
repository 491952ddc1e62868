//! Digraphs, strong connectivity, oriented cuts, ear decompositions,
//! network matrices and minimally strongly connected families.

mod ears;
mod generate;
mod network;

pub use ears::{
    circulation_from_ears, ear_decompose, find_oriented_cut, validate_ears, EarDecomposition,
    OrientedCut,
};
pub use generate::{
    gen_min_sc_n_plus_1, gen_min_sc_two_n_minus_3, is_minimally_strongly_connected,
    random_connected_digraph, random_min_sc_n_plus_1, random_min_sc_two_n_minus_3, TreeSpec,
};
pub use network::{
    cut_separating_vector, enumerate_spanning_trees, network_matrix, random_spanning_tree,
    tree_change_witness, verify_sign_is_network_matrix,
};

use std::collections::VecDeque;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigraphError {
    #[error("a digraph needs at least one vertex")]
    NoVertices,
    #[error("arc {0} is a self-loop")]
    SelfLoop(usize),
    #[error("arc {arc} uses vertex {vertex} outside 0..{n}")]
    VertexOutOfRange { arc: usize, vertex: usize, n: usize },
    #[error("underlying undirected graph is disconnected")]
    NotConnected,
    #[error("digraph is not strongly connected")]
    NotStronglyConnected,
    #[error("invalid spanning tree: {0}")]
    InvalidTree(String),
    #[error("inconsistent parameters: {0}")]
    InconsistentParameters(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

/// Directed multigraph without self-loops. Arc order fixes the column order
/// of network matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Digraph, DigraphError> {
        if n == 0 {
            return Err(DigraphError::NoVertices);
        }
        for (i, &(t, h)) in arcs.iter().enumerate() {
            for vertex in [t, h] {
                if vertex >= n {
                    return Err(DigraphError::VertexOutOfRange { arc: i, vertex, n });
                }
            }
            if t == h {
                return Err(DigraphError::SelfLoop(i));
            }
        }
        Ok(Digraph { n, arcs })
    }

    /// Directed circuit `0 → 1 → … → n−1 → 0`.
    pub fn circuit(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("n ≥ 2")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc(&self, i: usize) -> (usize, usize) {
        self.arcs[i]
    }

    /// Copy without arc `i`.
    pub fn without_arc(&self, i: usize) -> Digraph {
        let mut arcs = self.arcs.clone();
        arcs.remove(i);
        Digraph { n: self.n, arcs }
    }

    /// Vertices reachable from `start` along arcs (or against them when
    /// `reverse` is set).
    pub fn reach(&self, start: usize, reverse: bool) -> Vec<bool> {
        let mut adj = vec![Vec::new(); self.n];
        for &(t, h) in &self.arcs {
            if reverse {
                adj[h].push(t);
            } else {
                adj[t].push(h);
            }
        }
        bfs(&adj, start)
    }

    pub fn is_weakly_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.n];
        for &(t, h) in &self.arcs {
            adj[t].push(h);
            adj[h].push(t);
        }
        bfs(&adj, 0).into_iter().all(|b| b)
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.reach(0, false).into_iter().all(|b| b) && self.reach(0, true).into_iter().all(|b| b)
    }
}

fn bfs(adj: &[Vec<usize>], start: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Arc indices of an oriented spanning tree, kept sorted. The sorted order
/// is the row order of the associated network matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    arcs: Vec<usize>,
}

impl SpanningTree {
    /// Checks that `arcs` are `n − 1` distinct arcs of `g` forming a tree
    /// when orientation is ignored.
    pub fn new(g: &Digraph, mut arcs: Vec<usize>) -> Result<SpanningTree, DigraphError> {
        arcs.sort_unstable();
        let n = g.vertex_count();
        if arcs.len() != n - 1 {
            return Err(DigraphError::InvalidTree(format!(
                "{} arcs given, a spanning tree on {n} vertices has {}",
                arcs.len(),
                n - 1
            )));
        }
        if arcs.windows(2).any(|w| w[0] == w[1]) {
            return Err(DigraphError::InvalidTree("repeated arc".into()));
        }
        if let Some(&bad) = arcs.iter().find(|&&a| a >= g.arc_count()) {
            return Err(DigraphError::InvalidTree(format!("no arc {bad}")));
        }
        let mut uf = UnionFind::new(n);
        for &a in &arcs {
            let (t, h) = g.arc(a);
            if !uf.union(t, h) {
                return Err(DigraphError::InvalidTree(format!("arc {a} closes a cycle")));
            }
        }
        Ok(SpanningTree { arcs })
    }

    pub fn arcs(&self) -> &[usize] {
        &self.arcs
    }

    /// Row of `arc` in the network matrix, if it is a tree arc.
    pub fn row_of(&self, arc: usize) -> Option<usize> {
        self.arcs.binary_search(&arc).ok()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

fn parse_usizes(line: usize, body: &str) -> Result<Vec<usize>, DigraphError> {
    body.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| DigraphError::Parse {
                line,
                message: format!("expected a nonnegative integer, found {tok:?}"),
            })
        })
        .collect()
}

/// Parses `n m` followed by `m` lines `tail head` (0-indexed).
pub fn parse_digraph(text: &str) -> Result<Digraph, DigraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(DigraphError::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    let dims = parse_usizes(hline, header)?;
    let [n, m] = dims[..] else {
        return Err(DigraphError::Parse {
            line: hline,
            message: format!("expected `n m`, found {header:?}"),
        });
    };
    let mut arcs = Vec::with_capacity(m);
    for (line, body) in lines {
        let pair = parse_usizes(line, body)?;
        let [t, h] = pair[..] else {
            return Err(DigraphError::Parse {
                line,
                message: format!("expected `tail head`, found {body:?}"),
            });
        };
        if arcs.len() == m {
            return Err(DigraphError::Parse {
                line,
                message: format!("more than {m} arcs"),
            });
        }
        arcs.push((t, h));
    }
    if arcs.len() != m {
        return Err(DigraphError::Parse {
            line: text.lines().count().max(1),
            message: format!("expected {m} arcs, found {}", arcs.len()),
        });
    }
    Digraph::new(n, arcs)
}

pub fn format_digraph(g: &Digraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.arc_count());
    for &(t, h) in g.arcs() {
        out.push_str(&format!("{t} {h}\n"));
    }
    out
}

/// Parses a spanning tree file: one line of arc indices.
pub fn parse_tree(g: &Digraph, text: &str) -> Result<SpanningTree, DigraphError> {
    let body: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let arcs = match body.as_slice() {
        [] => Vec::new(),
        [(line, l)] => parse_usizes(*line, l)?,
        [_, (line, _), ..] => {
            return Err(DigraphError::Parse {
                line: *line,
                message: "tree file must have a single line".into(),
            })
        }
    };
    SpanningTree::new(g, arcs)
}

pub fn format_tree(t: &SpanningTree) -> String {
    let parts: Vec<String> = t.arcs().iter().map(ToString::to_string).collect();
    format!("{}\n", parts.join(" "))
}

fn read(path: &Path) -> Result<String, DigraphError> {
    std::fs::read_to_string(path).map_err(|e| DigraphError::Io(format!("{}: {e}", path.display())))
}

pub fn read_digraph_file(path: impl AsRef<Path>) -> Result<Digraph, DigraphError> {
    parse_digraph(&read(path.as_ref())?)
}

pub fn read_tree_file(g: &Digraph, path: impl AsRef<Path>) -> Result<SpanningTree, DigraphError> {
    parse_tree(g, &read(path.as_ref())?)
}
