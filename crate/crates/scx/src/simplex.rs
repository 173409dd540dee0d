//! Canonical simplices: strictly ascending vertex sequences.
//!
//! The ascending order fixes one representative per orientation class; all
//! sign bookkeeping happens at matrix-assembly time from face positions and
//! insertion parities.

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Simplex {
    verts: Vec<usize>,
}

impl Simplex {
    /// Build from strictly ascending vertices.
    pub fn new(verts: Vec<usize>) -> Result<Self> {
        if verts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid(format!(
                "simplex vertices must be strictly ascending, got {verts:?}"
            )));
        }
        if verts.is_empty() {
            return Err(Error::invalid("a simplex needs at least one vertex"));
        }
        Ok(Simplex { verts })
    }

    /// Build from vertices in any order; duplicates are an error.
    pub fn from_unsorted(mut verts: Vec<usize>) -> Result<Self> {
        verts.sort_unstable();
        if verts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(verts));
        }
        Simplex::new(verts)
    }

    pub fn vertex(v: usize) -> Self {
        Simplex { verts: vec![v] }
    }

    pub fn dim(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn max_vertex(&self) -> usize {
        *self.verts.last().unwrap()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.binary_search(&v).is_ok()
    }

    /// The j-th face: this simplex with its j-th vertex removed.
    pub fn face(&self, j: usize) -> Simplex {
        debug_assert!(self.verts.len() > 1);
        let mut verts = self.verts.clone();
        verts.remove(j);
        Simplex { verts }
    }

    /// All faces of codimension one, lowest removed vertex first.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.verts.len()).map(|j| self.face(j))
    }

    /// Insert a vertex not already present; returns the enlarged simplex and
    /// the position the vertex landed in (the sign of the insertion is
    /// `(-1)^position`).
    pub fn with_inserted(&self, v: usize) -> (Simplex, usize) {
        debug_assert!(!self.contains(v));
        let pos = self.verts.partition_point(|&u| u < v);
        let mut verts = Vec::with_capacity(self.verts.len() + 1);
        verts.extend_from_slice(&self.verts[..pos]);
        verts.push(v);
        verts.extend_from_slice(&self.verts[pos..]);
        (Simplex { verts }, pos)
    }

    /// Remove a vertex; `None` if it is not present.
    pub fn without(&self, v: usize) -> Option<Simplex> {
        let pos = self.verts.binary_search(&v).ok()?;
        if self.verts.len() == 1 {
            return None;
        }
        Some(self.face(pos))
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        if self.verts.len() > other.verts.len() {
            return false;
        }
        self.verts.iter().all(|&v| other.contains(v))
    }

    /// Vertices of `self` not in `other`.
    pub fn difference(&self, other: &Simplex) -> Vec<usize> {
        self.verts.iter().copied().filter(|&v| !other.contains(v)).collect()
    }

    pub fn is_disjoint_from(&self, other: &Simplex) -> bool {
        self.verts.iter().all(|&v| !other.contains(v))
    }

    /// Disjoint union as a canonical simplex.
    pub fn union(&self, other: &Simplex) -> Result<Simplex> {
        let mut verts = self.verts.clone();
        verts.extend_from_slice(&other.verts);
        Simplex::from_unsorted(verts)
    }
}

impl std::fmt::Display for Simplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.verts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
