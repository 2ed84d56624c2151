//! Simple graphs on vertices `1..=n`, DIMACS I/O, clique search and the
//! brute-force coloring oracle.

mod dimacs;
mod oracle;
mod partition;

pub use dimacs::{parse_dimacs, parse_dimacs_with_warnings, render_dimacs, DimacsReport};
pub use oracle::{enumerate_colorings, ColoringCensus, OracleBudget};
pub use partition::ColorPartition;

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: malformed header `{text}` (expected `p edge <n> <m>`)")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: missing or repeated problem line")]
    MissingHeader { line: usize },
    #[error("line {line}: malformed edge line `{text}`")]
    BadEdge { line: usize, text: String },
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has {n} vertices, above the oracle budget of {max}")]
    BudgetExceeded { n: usize, max: usize },
    #[error("invalid partition: {0}")]
    BadPartition(String),
}

/// A simple undirected graph. Edges are stored as `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n);
        for (i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
        Graph { n, edges: edges.collect() }
    }

    pub fn path(n: usize) -> Graph {
        Graph { n, edges: (1..n).map(|i| (i, i + 1)).collect() }
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.edges.insert((1, n));
        }
        g
    }

    /// Adds `{i, j}`; returns false when the edge was already present.
    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<bool, GraphError> {
        for v in [i, j] {
            if v == 0 || v > self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        if i == j {
            return Err(GraphError::SelfLoop(i));
        }
        Ok(self.edges.insert((i.min(j), i.max(j))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// Adjacency lists indexed by vertex label (index 0 unused).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    /// The graph with vertex `v` renamed to `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|&(i, j)| {
            let (a, b) = (perm[i - 1], perm[j - 1]);
            (a.min(b), a.max(b))
        });
        Graph { n: self.n, edges: edges.collect() }
    }

    /// The graph polynomial `∏ (x_i − x_j)` kept as its list of factors.
    pub fn poly_factors(&self) -> GraphPolyFactors {
        GraphPolyFactors(self.edges.iter().copied().collect())
    }
}

/// The factors `(i, j)`, `i < j`, of the graph polynomial, one per edge.
/// Never expanded unless a caller does so explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphPolyFactors(pub Vec<(usize, usize)>);

impl GraphPolyFactors {
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Whether some `size` vertices are pairwise adjacent.
pub fn has_clique(g: &Graph, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    let adj = g.adjacency();
    let candidates: Vec<usize> = (1..=g.n).collect();
    extend_clique(g, &adj, &candidates, size)
}

fn extend_clique(g: &Graph, adj: &[Vec<usize>], candidates: &[usize], needed: usize) -> bool {
    if needed == 0 {
        return true;
    }
    if candidates.len() < needed {
        return false;
    }
    for (idx, &v) in candidates.iter().enumerate() {
        if adj[v].len() + 1 < needed {
            continue;
        }
        let next: Vec<usize> = candidates[idx + 1..].iter().copied().filter(|&u| g.has_edge(u, v)).collect();
        if extend_clique(g, adj, &next, needed - 1) {
            return true;
        }
    }
    false
}

/// Xu's lower bound `(k − 1)·n − k(k − 1)/2` on the edge count of a
/// uniquely `k`-colorable graph on `n` vertices.
pub fn xu_bound_edges(n: usize, k: usize) -> i64 {
    let (n, k) = (n as i64, k as i64);
    (k - 1) * n - k * (k - 1) / 2
}
