//! Simple undirected graphs with bitset adjacency.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::Scalar;

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Build from an edge list. Duplicate pairs collapse; self-loops and
    /// out-of-range endpoints are input errors.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![BitSet::new(n); n];
        for &(u, v) in pairs {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in adj[u].iter() {
                if v > u {
                    edges.push((u, v));
                }
            }
        }
        Ok(Graph { n, adj, edges })
    }

    pub fn complete(n: usize) -> Self {
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        Graph::from_edge_list(n, &pairs).expect("complete graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Edges as ordered pairs (u, v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Common neighborhood of a set of vertices; the full vertex set when
    /// `verts` is empty.
    pub fn common_neighborhood(&self, verts: &[usize]) -> BitSet {
        let mut acc = BitSet::full(self.n);
        for &v in verts {
            acc.intersect_with(&self.adj[v]);
        }
        acc
    }

    /// True iff the listed vertices induce a complete subgraph.
    pub fn is_clique(&self, verts: &[usize]) -> bool {
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = BitSet::new(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.adj[v].iter() {
                if !seen.contains(u) {
                    seen.insert(u);
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Unnormalized graph Laplacian: degree on the diagonal, -1 on edges.
    pub fn laplacian<T: Scalar>(&self) -> Matrix<T> {
        let mut m: Matrix<T> = Matrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            let one = T::one();
            *m.at_mut(u, u) = m.at(u, u).clone() + one.clone();
            *m.at_mut(v, v) = m.at(v, v).clone() + one.clone();
            *m.at_mut(u, v) = m.at(u, v).clone() - one.clone();
            *m.at_mut(v, u) = m.at(v, u).clone() - one;
        }
        m
    }
}
