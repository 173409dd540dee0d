//! Coboundary operators, reduced Laplacians, spectra, and reduced cohomology
//! dimensions.
//!
//! The reduced dimension-k cohomology of a complex is computed two
//! independent ways: as the number of near-zero eigenvalues of the reduced
//! Laplacian (the harmonic route) and as an exact rank computation over the
//! rationals (the integer route). The two must agree on every input; the
//! test suite leans on that cross-check heavily.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::eigen::symmetric_eigenvalues;
use crate::error::{Error, Result};
use crate::exact::sparse_rank;
use crate::graph::Graph;
use crate::matrix::Matrix;
use crate::simplex::Simplex;
use crate::{Real, Scalar};

/// Matrix of a coboundary operator in the canonical bases: entries are in
/// {-1, 0, +1}, one row per (k+1)-face with the alternating signs of its
/// faces. The k = -1 operator is the all-ones column over the vertices.
#[derive(Clone, Debug)]
pub struct SignedIncidenceMatrix {
    rows: usize,
    cols: usize,
    /// Per row, `(column, sign)` sorted by column.
    entries: Vec<Vec<(usize, i8)>>,
}

impl SignedIncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_entries(&self, r: usize) -> &[(usize, i8)] {
        &self.entries[r]
    }

    pub fn to_dense<T: Scalar>(&self) -> Matrix<T> {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (r, row) in self.entries.iter().enumerate() {
            for &(c, s) in row {
                *m.at_mut(r, c) = if s > 0 { T::one() } else { -T::one() };
            }
        }
        m
    }

    /// Rows as sparse i64 vectors, the exact-rank input format.
    pub fn sparse_rows(&self) -> Vec<Vec<(usize, i64)>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&(c, s)| (c, s as i64)).collect())
            .collect()
    }

    /// Dense `D^T D` (acts on the domain side).
    pub fn gram_cols<T: Scalar>(&self) -> Matrix<T> {
        let mut m: Matrix<T> = Matrix::zeros(self.cols, self.cols);
        for row in &self.entries {
            for &(c1, s1) in row {
                for &(c2, s2) in row {
                    let prod = if s1 * s2 > 0 { T::one() } else { -T::one() };
                    *m.at_mut(c1, c2) = m.at(c1, c2).clone() + prod;
                }
            }
        }
        m
    }

    /// Dense `D D^T` (acts on the codomain side).
    pub fn gram_rows<T: Scalar>(&self) -> Matrix<T> {
        let mut cols: Vec<Vec<(usize, i8)>> = vec![Vec::new(); self.cols];
        for (r, row) in self.entries.iter().enumerate() {
            for &(c, s) in row {
                cols[c].push((r, s));
            }
        }
        let mut m: Matrix<T> = Matrix::zeros(self.rows, self.rows);
        for col in &cols {
            for &(r1, s1) in col {
                for &(r2, s2) in col {
                    let prod = if s1 * s2 > 0 { T::one() } else { -T::one() };
                    *m.at_mut(r1, r2) = m.at(r1, r2).clone() + prod;
                }
            }
        }
        m
    }

    /// Apply to a coefficient vector on the domain.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols);
        self.entries
            .iter()
            .map(|row| row.iter().map(|&(c, s)| s as f64 * x[c]).sum())
            .collect()
    }

    /// Apply the transpose to a coefficient vector on the codomain.
    pub fn apply_transpose(&self, y: &[f64]) -> Vec<f64> {
        assert_eq!(y.len(), self.rows);
        let mut out = vec![0.0; self.cols];
        for (r, row) in self.entries.iter().enumerate() {
            for &(c, s) in row {
                out[c] += s as f64 * y[r];
            }
        }
        out
    }
}

/// Matrix of the coboundary operator from k-cochains to (k+1)-cochains.
/// `k = -1` is allowed and yields the all-ones column over the vertices.
pub fn coboundary_matrix(x: &SimplicialComplex, k: isize) -> Result<SignedIncidenceMatrix> {
    if k < -1 {
        return Err(Error::invalid(format!("coboundary dimension {k} below -1")));
    }
    if k == -1 {
        let rows = x.vertex_count();
        return Ok(SignedIncidenceMatrix {
            rows,
            cols: 1,
            entries: vec![vec![(0, 1)]; rows],
        });
    }
    let k = k as usize;
    let domain = x.faces(k);
    let codomain = x.faces(k + 1);
    let mut entries = Vec::with_capacity(codomain.len());
    for tau in codomain {
        let mut row: Vec<(usize, i8)> = tau
            .facets()
            .enumerate()
            .map(|(j, face)| {
                let col = x.position(&face).expect("downward closure");
                let sign = if j % 2 == 0 { 1 } else { -1 };
                (col, sign)
            })
            .collect();
        row.sort_unstable_by_key(|&(c, _)| c);
        entries.push(row);
    }
    Ok(SignedIncidenceMatrix { rows: codomain.len(), cols: domain.len(), entries })
}

/// The reduced k-Laplacian as a dense matrix over any scalar:
/// `D_{k-1} D_{k-1}^T + D_k^T D_k` in the canonical basis of the k-faces.
/// An empty cochain space gives the 0x0 matrix; callers should flag it
/// rather than read a spectrum off it.
pub fn laplacian<T: Scalar>(x: &SimplicialComplex, k: usize) -> Matrix<T> {
    if x.num_faces(k) == 0 {
        return Matrix::zeros(0, 0);
    }
    let down = coboundary_matrix(x, k as isize - 1).expect("k >= 0");
    let up = coboundary_matrix(x, k as isize).expect("k >= 0");
    down.gram_rows::<T>().add(&up.gram_cols::<T>())
}

/// Ascending spectrum of a symmetric real matrix.
pub fn eigenvalues_sym(m: &Matrix<Real>) -> Result<Vec<Real>> {
    symmetric_eigenvalues(m)
}

/// Second smallest eigenvalue of the graph Laplacian.
pub fn spectral_gap(g: &Graph) -> Result<Real> {
    if g.vertex_count() < 2 {
        return Err(Error::invalid(format!(
            "spectral gap needs at least 2 vertices, got {}",
            g.vertex_count()
        )));
    }
    let eig = symmetric_eigenvalues(&g.laplacian::<Real>())?;
    Ok(eig[1])
}

/// Per-dimension eigenvalue report for a reduced Laplacian.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralSummary {
    pub k: usize,
    pub eigenvalues: Vec<Real>,
    /// Smallest eigenvalue; absent when the cochain space is empty.
    pub mu_k: Option<Real>,
    /// Eigenvalues below `tolerance`.
    pub zero_count: usize,
    pub tolerance: Real,
}

/// Default zero-eigenvalue tolerance: `1e-8 * max(1, lambda_max)`.
fn default_tolerance(eigenvalues: &[Real]) -> Real {
    let lambda_max = eigenvalues.last().copied().unwrap_or(0.0);
    1e-8 * lambda_max.max(1.0)
}

/// Assemble and diagonalize the reduced k-Laplacian.
pub fn spectral_summary(
    x: &SimplicialComplex,
    k: usize,
    tol: Option<Real>,
) -> Result<SpectralSummary> {
    let m: Matrix<Real> = laplacian(x, k);
    let eigenvalues = symmetric_eigenvalues(&m)?;
    let tolerance = match tol {
        Some(t) if t > 0.0 => t,
        Some(t) => return Err(Error::invalid(format!("tolerance must be positive, got {t}"))),
        None => default_tolerance(&eigenvalues),
    };
    let zero_count = eigenvalues.iter().filter(|&&e| e < tolerance).count();
    Ok(SpectralSummary { k, eigenvalues: eigenvalues.clone(), mu_k: eigenvalues.first().copied(), zero_count, tolerance })
}

/// Smallest eigenvalue of the reduced k-Laplacian, `None` when X(k) is empty.
pub fn mu_k(x: &SimplicialComplex, k: usize) -> Result<Option<Real>> {
    Ok(spectral_summary(x, k, None)?.mu_k)
}

/// Dimension of the kernel of the reduced k-Laplacian: the harmonic route to
/// the reduced k-th cohomology dimension.
pub fn hodge_kernel_dim(x: &SimplicialComplex, k: usize, tol: Option<Real>) -> Result<usize> {
    Ok(spectral_summary(x, k, tol)?.zero_count)
}

fn rank_of_coboundary(x: &SimplicialComplex, k: isize) -> usize {
    if k == -1 {
        return usize::from(x.vertex_count() > 0);
    }
    let d = coboundary_matrix(x, k).expect("k >= -1");
    if d.rows() == 0 || d.cols() == 0 {
        return 0;
    }
    sparse_rank(&d.sparse_rows())
}

/// Reduced k-th cohomology dimension by exact rank over the rationals:
/// `|X(k)| - rank D_k - rank D_{k-1}`, with the k = 0 case including the
/// augmentation column so the result counts components minus one.
pub fn betti_reduced_exact(x: &SimplicialComplex, k: usize) -> usize {
    let faces_k = x.num_faces(k);
    if faces_k == 0 {
        return 0;
    }
    let rank_up = rank_of_coboundary(x, k as isize);
    let rank_down = rank_of_coboundary(x, k as isize - 1);
    let betti = faces_k as isize - rank_up as isize - rank_down as isize;
    debug_assert!(betti >= 0, "rank bookkeeping produced negative betti");
    betti.max(0) as usize
}

/// Real-valued cochain over the canonical k-face basis; for `k = -1` a
/// single real.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain {
    pub k: isize,
    pub values: Vec<Real>,
}

impl Cochain {
    fn expected_len(x: &SimplicialComplex, k: isize) -> usize {
        if k == -1 {
            1
        } else {
            x.num_faces(k as usize)
        }
    }

    pub fn zeros(x: &SimplicialComplex, k: isize) -> Result<Self> {
        if k < -1 {
            return Err(Error::invalid(format!("cochain dimension {k} below -1")));
        }
        Ok(Cochain { k, values: vec![0.0; Self::expected_len(x, k)] })
    }

    pub fn from_values(x: &SimplicialComplex, k: isize, values: Vec<Real>) -> Result<Self> {
        if k < -1 {
            return Err(Error::invalid(format!("cochain dimension {k} below -1")));
        }
        let expected = Self::expected_len(x, k);
        if values.len() != expected {
            return Err(Error::CochainLength { k, expected, got: values.len() });
        }
        Ok(Cochain { k, values })
    }

    /// Indicator cochain of a single face.
    pub fn indicator(x: &SimplicialComplex, s: &Simplex) -> Result<Self> {
        let pos = x
            .position(s)
            .ok_or_else(|| Error::FaceNotInComplex(s.vertices().to_vec()))?;
        let mut c = Cochain::zeros(x, s.dim() as isize)?;
        c.values[pos] = 1.0;
        Ok(c)
    }

    pub fn dot(&self, other: &Cochain) -> Real {
        debug_assert_eq!(self.k, other.k);
        self.values.iter().zip(&other.values).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> Real {
        self.values.iter().map(|v| v * v).sum()
    }

    /// Value on a face, via its canonical position.
    pub fn value_on(&self, x: &SimplicialComplex, s: &Simplex) -> Option<Real> {
        if s.dim() as isize != self.k {
            return None;
        }
        x.position(s).map(|i| self.values[i])
    }
}

/// Apply the coboundary operator to a k-cochain.
pub fn apply_coboundary(x: &SimplicialComplex, phi: &Cochain) -> Result<Cochain> {
    let d = coboundary_matrix(x, phi.k)?;
    if phi.values.len() != d.cols() {
        return Err(Error::CochainLength { k: phi.k, expected: d.cols(), got: phi.values.len() });
    }
    Ok(Cochain { k: phi.k + 1, values: d.apply(&phi.values) })
}

/// Apply the adjoint coboundary via the link sum: for a (k-1)-face `tau`,
/// sum `sign(v, tau) * phi(tau + v)` over the vertices `v` of the link of
/// `tau`, where the sign is the parity of the insertion position. Agrees
/// exactly with the transpose-matrix action.
pub fn apply_adjoint(x: &SimplicialComplex, phi: &Cochain) -> Result<Cochain> {
    let k = phi.k;
    if k < 0 {
        return Err(Error::invalid("adjoint needs a cochain of dimension >= 0"));
    }
    let expected = Cochain::expected_len(x, k);
    if phi.values.len() != expected {
        return Err(Error::CochainLength { k, expected, got: phi.values.len() });
    }
    if k == 0 {
        // the augmentation adjoint sums over the vertices
        return Ok(Cochain { k: -1, values: vec![phi.values.iter().sum()] });
    }
    let k = k as usize;
    let mut out = Cochain::zeros(x, k as isize - 1)?;
    for (i, tau) in x.faces(k - 1).iter().enumerate() {
        let mut acc = 0.0;
        for v in x.vertex_ids() {
            if tau.contains(v) {
                continue;
            }
            let (sigma, pos) = tau.with_inserted(v);
            if let Some(j) = x.position(&sigma) {
                let sign = if pos % 2 == 0 { 1.0 } else { -1.0 };
                acc += sign * phi.values[j];
            }
        }
        out.values[i] = acc;
    }
    Ok(out)
}

/// Restriction of a k-cochain at a vertex: `phi_u(tau) = phi(u tau)` when
/// `u` is in the link of `tau`, else 0, with `u tau` evaluated through the
/// canonical representative and the insertion sign.
pub fn restrict_cochain(x: &SimplicialComplex, phi: &Cochain, u: usize) -> Result<Cochain> {
    if !x.has_vertex(u) {
        return Err(Error::invalid(format!("{u} is not a vertex of the complex")));
    }
    let k = phi.k;
    if k < 0 {
        return Err(Error::invalid("restriction needs a cochain of dimension >= 0"));
    }
    let expected = Cochain::expected_len(x, k);
    if phi.values.len() != expected {
        return Err(Error::CochainLength { k, expected, got: phi.values.len() });
    }
    if k == 0 {
        // the (-1)-restriction reads the value on {u}
        let v = phi
            .value_on(x, &Simplex::vertex(u))
            .expect("u is a vertex");
        return Ok(Cochain { k: -1, values: vec![v] });
    }
    let k = k as usize;
    let mut out = Cochain::zeros(x, k as isize - 1)?;
    for (i, tau) in x.faces(k - 1).iter().enumerate() {
        if tau.contains(u) {
            continue;
        }
        let (sigma, pos) = tau.with_inserted(u);
        if let Some(j) = x.position(&sigma) {
            let sign = if pos % 2 == 0 { 1.0 } else { -1.0 };
            out.values[i] = sign * phi.values[j];
        }
    }
    Ok(out)
}
