//! Simple undirected graphs with a fixed edge order.
//!
//! Edge order matters: every labeling in this crate is a plain vector aligned
//! with [`Graph::edges`], so a graph is never reordered after construction.

use std::collections::HashSet;

use thiserror::Error;

/// Index of an edge in [`Graph::edges`].
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index} ({u}, {v}) is a self-loop")]
    SelfLoop { index: usize, u: usize, v: usize },
    #[error("edge {index} ({u}, {v}) duplicates edge {first}")]
    DuplicateEdge {
        index: usize,
        first: usize,
        u: usize,
        v: usize,
    },
    #[error("edge {index} references vertex {vertex}, but the graph has {n} vertices")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        n: usize,
    },
    #[error("expected {expected} {what}, got {actual}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error("label 0 on {what} {index}; labels must be positive")]
    ZeroLabel { what: &'static str, index: usize },
    #[error("label {label} on {what} {index} exceeds the declared maximum {s}")]
    LabelExceedsMax {
        what: &'static str,
        index: usize,
        label: u64,
        s: u64,
    },
    #[error("declared maximum label must be at least 1")]
    ZeroMaxLabel,
    #[error("vertex {vertex} is isolated")]
    IsolatedVertex { vertex: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("arithmetic overflow while summing labels at vertex {vertex}")]
    Overflow { vertex: usize },
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<EdgeId>>,
}

impl Graph {
    /// Builds a graph, keeping edges in the given order.
    ///
    /// Pairs are stored as given; `(1, 0)` and `(0, 1)` are the same edge for
    /// the duplicate check.
    pub fn new<I>(n: usize, edge_list: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        let mut first_index = std::collections::HashMap::new();
        for (index, (u, v)) in edge_list.into_iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { index, vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, u, v });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge {
                    index,
                    first: first_index[&key],
                    u,
                    v,
                });
            }
            first_index.insert(key, index);
            adjacency[u].push(index);
            adjacency[v].push(index);
            edges.push((u, v));
        }
        Ok(Self {
            n,
            edges,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    /// Edge ids incident to `v`, in edge order.
    pub fn incident_edges(&self, v: usize) -> &[EdgeId] {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(move |&e| {
            let (a, b) = self.edges[e];
            if a == v {
                b
            } else {
                a
            }
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Minimum degree; `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).min()
    }

    /// Maximum degree; `None` for the empty graph.
    pub fn max_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).max()
    }

    /// Errors with the first isolated vertex, or if the graph is empty.
    pub fn require_no_isolated(&self) -> Result<(), GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        match self.adjacency.iter().position(Vec::is_empty) {
            Some(vertex) => Err(GraphError::IsolatedVertex { vertex }),
            None => Ok(()),
        }
    }

    pub fn is_regular(&self, r: usize) -> bool {
        self.adjacency.iter().all(|a| a.len() == r)
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Index of the edge joining `u` and `v`, if any.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.adjacency.get(u)?.iter().copied().find(|&e| {
            let (a, b) = self.edges[e];
            (a == u && b == v) || (a == v && b == u)
        })
    }
}
