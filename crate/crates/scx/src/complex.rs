//! Finite simplicial complexes bucketed by dimension, with constructors for
//! clique complexes, neighborhood complexes, links, and skeletons.
//!
//! Every stored family is downward closed, each simplex appears once, and the
//! per-dimension buckets are sorted lexicographically, so positions in a
//! bucket define the canonical cochain basis.

use std::collections::{HashMap, HashSet};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::simplex::Simplex;

const MAX_FACE_VERTICES: usize = 25;

static NO_FACES: [Simplex; 0] = [];

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    /// Vertex ids live in `0..ambient`; not every id has to be a vertex.
    ambient: usize,
    /// `faces[d]` holds the d-dimensional faces, lex sorted. No trailing
    /// empty buckets.
    faces: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.faces == other.faces
    }
}
impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    pub fn empty(ambient: usize) -> Self {
        SimplicialComplex { ambient, faces: Vec::new(), index: Vec::new() }
    }

    /// Build from arbitrary faces; the downward closure is taken, so the
    /// input may list maximal faces only or any redundant mix.
    pub fn from_faces<I>(ambient: usize, input: I) -> Result<Self>
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut all: HashSet<Simplex> = HashSet::new();
        for face in input {
            if face.max_vertex() >= ambient {
                return Err(Error::VertexOutOfRange { v: face.max_vertex(), n: ambient });
            }
            let verts = face.vertices();
            if verts.len() > MAX_FACE_VERTICES {
                return Err(Error::invalid(format!(
                    "face with {} vertices exceeds the closure limit of {MAX_FACE_VERTICES}",
                    verts.len()
                )));
            }
            for mask in 1u32..(1u32 << verts.len()) {
                let sub: Vec<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                all.insert(Simplex::new(sub).expect("subsequence stays ascending"));
            }
        }
        let mut buckets: Vec<Vec<Simplex>> = Vec::new();
        for s in all {
            let d = s.dim();
            if buckets.len() <= d {
                buckets.resize(d + 1, Vec::new());
            }
            buckets[d].push(s);
        }
        Ok(Self::from_buckets(ambient, buckets))
    }

    /// Internal constructor for families already known to be downward closed.
    fn from_buckets(ambient: usize, mut buckets: Vec<Vec<Simplex>>) -> Self {
        while buckets.last().is_some_and(|b| b.is_empty()) {
            buckets.pop();
        }
        for b in &mut buckets {
            b.sort_unstable();
        }
        let index = buckets
            .iter()
            .map(|b| {
                b.iter()
                    .enumerate()
                    .map(|(i, s)| (s.clone(), i))
                    .collect::<HashMap<_, _>>()
            })
            .collect();
        SimplicialComplex { ambient, faces: buckets, index }
    }

    /// Clique complex of a graph up to `max_dim`: the d-faces are exactly the
    /// (d+1)-cliques.
    pub fn clique_complex(g: &Graph, max_dim: usize) -> Result<Self> {
        if max_dim < 1 {
            return Err(Error::invalid("clique complex needs max_dim >= 1"));
        }
        let n = g.vertex_count();
        // frontier carries each clique's common adjacency set
        let mut frontier: Vec<(Simplex, BitSet)> = (0..n)
            .map(|v| (Simplex::vertex(v), g.neighbors(v).clone()))
            .collect();
        let mut buckets: Vec<Vec<Simplex>> =
            vec![frontier.iter().map(|(s, _)| s.clone()).collect()];
        for _d in 1..=max_dim {
            let mut next: Vec<(Simplex, BitSet)> = Vec::new();
            for (s, adj) in &frontier {
                for u in adj.iter() {
                    if u <= s.max_vertex() {
                        continue;
                    }
                    let (bigger, _) = s.with_inserted(u);
                    next.push((bigger, adj.and(g.neighbors(u))));
                }
            }
            if next.is_empty() {
                break;
            }
            buckets.push(next.iter().map(|(s, _)| s.clone()).collect());
            frontier = next;
        }
        Ok(Self::from_buckets(n, buckets))
    }

    /// Neighborhood complex of a graph: faces are the vertex sets with a
    /// common neighbor, up to `max_dim` when given. Vertices without any
    /// neighbor are in no face and are excluded.
    pub fn neighborhood_complex(g: &Graph, max_dim: Option<usize>) -> Self {
        let n = g.vertex_count();
        let cap = max_dim.unwrap_or(n.saturating_sub(1));
        // frontier carries each face's common neighborhood
        let mut frontier: Vec<(Simplex, BitSet)> = (0..n)
            .filter(|&v| !g.neighbors(v).is_empty())
            .map(|v| (Simplex::vertex(v), g.neighbors(v).clone()))
            .collect();
        if frontier.is_empty() {
            return Self::empty(n);
        }
        let mut buckets: Vec<Vec<Simplex>> =
            vec![frontier.iter().map(|(s, _)| s.clone()).collect()];
        for _d in 1..=cap {
            let mut next: Vec<(Simplex, BitSet)> = Vec::new();
            for (s, common) in &frontier {
                for u in s.max_vertex() + 1..n {
                    if common.intersects(g.neighbors(u)) {
                        let (bigger, _) = s.with_inserted(u);
                        next.push((bigger, common.and(g.neighbors(u))));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            buckets.push(next.iter().map(|(s, _)| s.clone()).collect());
            frontier = next;
        }
        Self::from_buckets(n, buckets)
    }

    pub fn ambient_vertices(&self) -> usize {
        self.ambient
    }

    /// Highest dimension with a face, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self, d: usize) -> &[Simplex] {
        self.faces.get(d).map_or(&NO_FACES, |b| b.as_slice())
    }

    pub fn num_faces(&self, d: usize) -> usize {
        self.faces.get(d).map_or(0, |b| b.len())
    }

    pub fn total_faces(&self) -> usize {
        self.faces.iter().map(|b| b.len()).sum()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.position(s).is_some()
    }

    /// Position of a face in the canonical ordering of its dimension.
    pub fn position(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim()).and_then(|m| m.get(s).copied())
    }

    pub fn vertex_count(&self) -> usize {
        self.num_faces(0)
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.faces(0).iter().map(|s| s.vertices()[0])
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.contains(&Simplex::vertex(v))
    }

    /// Number of cofaces of `s` of one dimension higher.
    pub fn degree(&self, s: &Simplex) -> Result<usize> {
        if !self.contains(s) {
            return Err(Error::FaceNotInComplex(s.vertices().to_vec()));
        }
        let mut count = 0;
        for v in self.vertex_ids() {
            if !s.contains(v) {
                let (coface, _) = s.with_inserted(v);
                if self.contains(&coface) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// The link of `s`: all faces disjoint from `s` whose union with `s` is a
    /// face, over the same ambient vertex set.
    pub fn link(&self, s: &Simplex) -> Result<SimplicialComplex> {
        if !self.contains(s) {
            return Err(Error::FaceNotInComplex(s.vertices().to_vec()));
        }
        let base = s.vertices().len();
        let mut buckets: Vec<Vec<Simplex>> = Vec::new();
        for d in base..self.faces.len() {
            for face in &self.faces[d] {
                if s.is_subset_of(face) {
                    let rest = face.difference(s);
                    let eta = Simplex::new(rest).expect("difference stays ascending");
                    let dim = eta.dim();
                    if buckets.len() <= dim {
                        buckets.resize(dim + 1, Vec::new());
                    }
                    buckets[dim].push(eta);
                }
            }
        }
        Ok(Self::from_buckets(self.ambient, buckets))
    }

    /// Sub complex of all faces of dimension at most `k`.
    pub fn skeleton(&self, k: usize) -> SimplicialComplex {
        let buckets: Vec<Vec<Simplex>> =
            self.faces.iter().take(k + 1).cloned().collect();
        Self::from_buckets(self.ambient, buckets)
    }

    /// True iff every (k+1)-subset of the vertex set is a face. Faces only
    /// ever use vertices of the complex, so a count comparison suffices.
    pub fn is_full_skeleton(&self, k: usize) -> bool {
        binomial(self.vertex_count(), k + 1) == self.num_faces(k) as u128
    }

    /// The 1-skeleton as a graph on `vertex_count()` relabeled vertices
    /// (position in the sorted vertex list), plus the position -> vertex id
    /// map. For a complex whose vertices are exactly `0..n` the relabeling is
    /// the identity.
    pub fn one_skeleton(&self) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = self.vertex_ids().collect();
        let pos: HashMap<usize, usize> =
            labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<(usize, usize)> = self
            .faces(1)
            .iter()
            .map(|e| (pos[&e.vertices()[0]], pos[&e.vertices()[1]]))
            .collect();
        let g = Graph::from_edge_list(labels.len(), &edges)
            .expect("1-skeleton is a valid graph");
        (g, labels)
    }

    /// Connectivity of the 1-skeleton; vacuously true for the empty complex.
    pub fn is_connected(&self) -> bool {
        self.one_skeleton().0.is_connected()
    }

    /// Checks the complex agrees with the clique complex of its 1-skeleton in
    /// all dimensions up to `d`. Downward closure already forces every face
    /// to span a clique, so only the counts need comparing.
    pub fn is_clique_complex_through(&self, d: usize) -> bool {
        let (g, _) = self.one_skeleton();
        if d <= 1 {
            return true;
        }
        let clique_counts = clique_counts(&g, d);
        (2..=d).all(|i| clique_counts.get(i).copied().unwrap_or(0) == self.num_faces(i))
    }

    /// Every face of `self` must be a face of `other`.
    pub fn verify_subcomplex_of(&self, other: &SimplicialComplex) -> Result<()> {
        for (d, bucket) in self.faces.iter().enumerate() {
            for s in bucket {
                if !other.contains(s) {
                    return Err(Error::NotSubcomplex { dim: d, face: s.vertices().to_vec() });
                }
            }
        }
        Ok(())
    }

    /// Faces with no coface; writing these to a face list reproduces the
    /// complex after closure.
    pub fn maximal_faces(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for (d, bucket) in self.faces.iter().enumerate() {
            for s in bucket {
                let has_coface = self
                    .faces
                    .get(d + 1)
                    .is_some_and(|up| up.iter().any(|t| s.is_subset_of(t)));
                if !has_coface {
                    out.push(s.clone());
                }
            }
        }
        out.sort_unstable_by(|a, b| a.vertices().cmp(b.vertices()));
        out
    }

    /// Face-by-face equality ignoring the ambient vertex count.
    pub fn same_faces(&self, other: &SimplicialComplex) -> bool {
        self.faces == other.faces
    }
}

/// Number of cliques of each size in `g`, indexed by dimension (index d
/// counts the (d+1)-cliques), up to dimension `max_dim`.
fn clique_counts(g: &Graph, max_dim: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut counts = vec![n];
    let mut frontier: Vec<(usize, BitSet)> =
        (0..n).map(|v| (v, g.neighbors(v).clone())).collect();
    for _d in 1..=max_dim {
        let mut next = Vec::new();
        for (maxv, adj) in &frontier {
            for u in adj.iter() {
                if u > *maxv {
                    next.push((u, adj.and(g.neighbors(u))));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        counts.push(next.len());
        frontier = next;
    }
    counts
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
