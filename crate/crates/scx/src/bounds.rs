//! Combinatorial difference quantities, spectral-gap inequality checkers,
//! and cohomology-vanishing certificates.
//!
//! Each checker evaluates one proven inequality on concrete data and returns
//! a [`BoundsReport`] with both sides, the residual, and every ingredient
//! that entered the computation. A residual below `-1e-9` would contradict a
//! theorem and is treated by the test suite as a build-stopping bug.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::spectral::{mu_k, spectral_gap};
use crate::Real;

/// Slack tolerated on theorem residuals (floating spectra of exact claims).
pub const RESIDUAL_TOL: Real = 1e-9;

/// Outcome of one inequality check.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    /// Which inequality was evaluated.
    pub check: String,
    pub k: usize,
    pub lhs: Real,
    pub rhs: Real,
    /// `lhs - rhs`; nonnegative (up to tolerance) when the inequality holds.
    pub residual: Real,
    pub holds: bool,
    /// Every named quantity used to form `lhs` and `rhs`.
    pub ingredients: BTreeMap<String, Real>,
}

impl BoundsReport {
    fn new(check: &str, k: usize, lhs: Real, rhs: Real, ingredients: BTreeMap<String, Real>) -> Self {
        let residual = lhs - rhs;
        BoundsReport {
            check: check.to_string(),
            k,
            lhs,
            rhs,
            residual,
            holds: residual >= -RESIDUAL_TOL,
            ingredients,
        }
    }
}

/// Vanishing certificate: when `condition_holds`, the spectral gap is large
/// enough to force the reduced k-th cohomology to vanish.
#[derive(Clone, Debug, Serialize)]
pub struct VanishingCertificate {
    pub k: usize,
    pub lambda_2: Real,
    pub threshold: Real,
    pub condition_holds: bool,
    /// Mirrors `condition_holds`: a fired certificate asserts betti_k = 0.
    pub implied_betti_zero: bool,
    pub ingredients: BTreeMap<String, Real>,
}

/// Max over k-faces of the subcomplex of the number of (k+1)-cofaces present
/// in the ambient complex but missing from the subcomplex.
pub fn s_k(x: &SimplicialComplex, sub: &SimplicialComplex, k: usize) -> Result<usize> {
    if k < 1 {
        return Err(Error::invalid("s_k needs k >= 1"));
    }
    sub.verify_subcomplex_of(x)?;
    let mut missing_cofaces = vec![0usize; sub.num_faces(k)];
    for tau in x.faces(k + 1) {
        if sub.contains(tau) {
            continue;
        }
        for sigma in tau.facets() {
            if let Some(i) = sub.position(&sigma) {
                missing_cofaces[i] += 1;
            }
        }
    }
    Ok(missing_cofaces.into_iter().max().unwrap_or(0))
}

/// Max over k-faces `sigma` of the number of vertices `u` outside the link
/// of `sigma` that lie in the link of `sigma` minus `v` for exactly `j`
/// vertices `v` of `sigma`. Returns 0 when there are no k-faces.
pub fn d_k(x: &SimplicialComplex, k: usize, j: usize) -> Result<usize> {
    if k < 1 {
        return Err(Error::invalid("d_k needs k >= 1"));
    }
    if j < 1 || j > k + 1 {
        return Err(Error::invalid(format!("d_k needs 1 <= j <= k + 1, got j = {j}")));
    }
    let vertices: Vec<usize> = x.vertex_ids().collect();
    let mut best = 0usize;
    for sigma in x.faces(k) {
        let mut local = 0usize;
        for &u in &vertices {
            let in_sigma = sigma.contains(u);
            if !in_sigma {
                let (coface, _) = sigma.with_inserted(u);
                if x.contains(&coface) {
                    continue; // u is in the link of sigma
                }
            }
            let count = if in_sigma {
                // u itself lies in the link of sigma minus u and nothing else
                1
            } else {
                sigma
                    .facets()
                    .filter(|facet| {
                        let (candidate, _) = facet.with_inserted(u);
                        x.contains(&candidate)
                    })
                    .count()
            };
            if count == j {
                local += 1;
            }
        }
        best = best.max(local);
    }
    Ok(best)
}

/// Number of (k+2)-vertex subsets whose (k+1)-subsets are all faces while the
/// subset itself is not: induced hollow boundaries of a (k+1)-simplex.
pub fn count_boundary_subcomplexes(x: &SimplicialComplex, k: usize) -> Result<usize> {
    if k < 1 {
        return Err(Error::invalid("boundary subcomplex count needs k >= 1"));
    }
    let vertices: Vec<usize> = x.vertex_ids().collect();
    let mut count = 0usize;
    // each candidate set appears once: as its k+1 smallest vertices (a face)
    // plus its maximum
    for sigma in x.faces(k) {
        for &u in &vertices {
            if u <= sigma.max_vertex() {
                continue;
            }
            let (top, _) = sigma.with_inserted(u);
            if x.contains(&top) {
                continue;
            }
            if top.facets().all(|f| x.contains(&f)) {
                count += 1;
            }
        }
    }
    Ok(count)
}

fn require_mu(x: &SimplicialComplex, k: usize, check: &str) -> Result<Real> {
    mu_k(x, k)?.ok_or_else(|| {
        Error::not_applicable(check, format!("no {k}-dimensional faces, mu_{k} undefined"))
    })
}

fn require_gap(x: &SimplicialComplex, check: &str) -> Result<Real> {
    if x.vertex_count() < 2 {
        return Err(Error::not_applicable(check, "fewer than 2 vertices, spectral gap undefined"));
    }
    let (g, _) = x.one_skeleton();
    spectral_gap(&g)
}

/// For a clique complex, `k * mu_k >= (k+1) * mu_{k-1} - n`.
pub fn check_clique_recursion(x: &SimplicialComplex, k: usize) -> Result<BoundsReport> {
    const CHECK: &str = "clique_recursion";
    if k < 1 {
        return Err(Error::invalid("clique recursion needs k >= 1"));
    }
    if !x.is_clique_complex_through(k + 1) {
        return Err(Error::NotCliqueComplex(k + 1));
    }
    let mu_lo = require_mu(x, k - 1, CHECK)?;
    let mu_hi = require_mu(x, k, CHECK)?;
    let n = x.vertex_count() as Real;
    let lhs = k as Real * mu_hi;
    let rhs = (k + 1) as Real * mu_lo - n;
    let mut ing = BTreeMap::new();
    ing.insert("mu_k".into(), mu_hi);
    ing.insert("mu_km1".into(), mu_lo);
    ing.insert("n".into(), n);
    Ok(BoundsReport::new(CHECK, k, lhs, rhs, ing))
}

/// For a subcomplex, `mu_k(X') >= mu_k(X) - (k+2) * S_k(X, X')`.
pub fn check_subcomplex_bound(
    x: &SimplicialComplex,
    sub: &SimplicialComplex,
    k: usize,
) -> Result<BoundsReport> {
    const CHECK: &str = "subcomplex_bound";
    let s = s_k(x, sub, k)? as Real;
    let mu_x = require_mu(x, k, CHECK)?;
    let mu_sub = require_mu(sub, k, CHECK)?;
    let lhs = mu_sub;
    let rhs = mu_x - (k + 2) as Real * s;
    let mut ing = BTreeMap::new();
    ing.insert("mu_k_sub".into(), mu_sub);
    ing.insert("mu_k".into(), mu_x);
    ing.insert("s_k".into(), s);
    Ok(BoundsReport::new(CHECK, k, lhs, rhs, ing))
}

/// For any complex,
/// `k * mu_k >= (k+1) * mu_{k-1} - n - sum_{j=2}^{k+1} (k(k+1)+j) * D_k(X, j)`.
pub fn check_general_bound(x: &SimplicialComplex, k: usize) -> Result<BoundsReport> {
    const CHECK: &str = "general_bound";
    if k < 1 {
        return Err(Error::invalid("general bound needs k >= 1"));
    }
    let mu_lo = require_mu(x, k - 1, CHECK)?;
    let mu_hi = require_mu(x, k, CHECK)?;
    let n = x.vertex_count() as Real;
    let mut ing = BTreeMap::new();
    ing.insert("mu_k".into(), mu_hi);
    ing.insert("mu_km1".into(), mu_lo);
    ing.insert("n".into(), n);
    let mut defect = 0.0;
    for j in 2..=k + 1 {
        let d = d_k(x, k, j)? as Real;
        ing.insert(format!("d_k_j{j}"), d);
        defect += ((k * (k + 1) + j) as Real) * d;
    }
    let lhs = k as Real * mu_hi;
    let rhs = (k + 1) as Real * mu_lo - n - defect;
    Ok(BoundsReport::new(CHECK, k, lhs, rhs, ing))
}

/// Certificate from the subcomplex comparison: `X` a clique complex, `X'` a
/// subcomplex on the same 1-skeleton; if
/// `lambda_2 > k n / (k+1) + (k+2)/(k+1) * S_k(X, X')` then the reduced k-th
/// cohomology of `X'` vanishes.
pub fn vanishing_certificate_subcomplex(
    x: &SimplicialComplex,
    sub: &SimplicialComplex,
    k: usize,
) -> Result<VanishingCertificate> {
    const CHECK: &str = "certificate_subcomplex";
    if k < 1 {
        return Err(Error::invalid("subcomplex certificate needs k >= 1"));
    }
    if !x.is_clique_complex_through(k + 1) {
        return Err(Error::NotCliqueComplex(k + 1));
    }
    if x.faces(0) != sub.faces(0) || x.faces(1) != sub.faces(1) {
        return Err(Error::SkeletonMismatch(1));
    }
    let s = s_k(x, sub, k)? as Real;
    let lambda_2 = require_gap(x, CHECK)?;
    let n = x.vertex_count() as Real;
    let kf = k as Real;
    let threshold = kf * n / (kf + 1.0) + (kf + 2.0) / (kf + 1.0) * s;
    let fired = lambda_2 > threshold;
    let mut ing = BTreeMap::new();
    ing.insert("lambda_2".into(), lambda_2);
    ing.insert("n".into(), n);
    ing.insert("s_k".into(), s);
    Ok(VanishingCertificate {
        k,
        lambda_2,
        threshold,
        condition_holds: fired,
        implied_betti_zero: fired,
        ingredients: ing,
    })
}

/// Certificate from the clique comparison: the k-skeleton of `X` must match
/// the k-skeleton of the clique complex of its 1-skeleton; if
/// `lambda_2 > k n / (k+1) + (k+1) * D_k(X, k+1)` then the reduced k-th
/// cohomology of `X` vanishes.
pub fn vanishing_certificate_general(
    x: &SimplicialComplex,
    k: usize,
) -> Result<VanishingCertificate> {
    const CHECK: &str = "certificate_general";
    if k < 1 {
        return Err(Error::invalid("general certificate needs k >= 1"));
    }
    if !x.is_clique_complex_through(k) {
        return Err(Error::SkeletonMismatch(k));
    }
    let d_top = d_k(x, k, k + 1)? as Real;
    let lambda_2 = require_gap(x, CHECK)?;
    let n = x.vertex_count() as Real;
    let kf = k as Real;
    let threshold = kf * n / (kf + 1.0) + (kf + 1.0) * d_top;
    let fired = lambda_2 > threshold;
    let mut ing = BTreeMap::new();
    ing.insert("lambda_2".into(), lambda_2);
    ing.insert("n".into(), n);
    ing.insert("d_k_top".into(), d_top);
    Ok(VanishingCertificate {
        k,
        lambda_2,
        threshold,
        condition_holds: fired,
        implied_betti_zero: fired,
        ingredients: ing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::simplex::Simplex;
    use crate::spectral::betti_reduced_exact;

    fn sx(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_faces(3, vec![sx(&[0, 1]), sx(&[0, 2]), sx(&[1, 2])]).unwrap()
    }

    fn full_triangle() -> SimplicialComplex {
        SimplicialComplex::from_faces(3, vec![sx(&[0, 1, 2])]).unwrap()
    }

    fn boundary_tetrahedron() -> SimplicialComplex {
        SimplicialComplex::clique_complex(&Graph::complete(4), 2).unwrap()
    }

    #[test]
    fn s_k_examples() {
        let full = full_triangle();
        let hollow = hollow_triangle();
        assert_eq!(s_k(&full, &full, 1).unwrap(), 0);
        assert_eq!(s_k(&full, &hollow, 1).unwrap(), 1);

        let k4 = SimplicialComplex::clique_complex(&Graph::complete(4), 3).unwrap();
        assert_eq!(s_k(&k4, &boundary_tetrahedron(), 2).unwrap(), 1);

        assert!(s_k(&hollow, &full, 1).is_err());
        assert!(s_k(&full, &hollow, 0).is_err());
    }

    #[test]
    fn d_k_examples() {
        let hollow = hollow_triangle();
        assert_eq!(d_k(&hollow, 1, 2).unwrap(), 1);
        let bt = boundary_tetrahedron();
        assert_eq!(d_k(&bt, 2, 3).unwrap(), 1);
        // clique complexes have no defect for j >= 2
        let g = Graph::from_edge_list(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (2, 4), (1, 4)]).unwrap();
        let x = SimplicialComplex::clique_complex(&g, 3).unwrap();
        for k in 1..=2 {
            for j in 2..=k + 1 {
                assert_eq!(d_k(&x, k, j).unwrap(), 0, "k={k} j={j}");
            }
        }
        assert!(d_k(&hollow, 1, 3).is_err());
        assert!(d_k(&hollow, 0, 1).is_err());
    }

    #[test]
    fn boundary_subcomplex_counts() {
        assert_eq!(count_boundary_subcomplexes(&boundary_tetrahedron(), 2).unwrap(), 1);
        let solid = SimplicialComplex::clique_complex(&Graph::complete(4), 3).unwrap();
        assert_eq!(count_boundary_subcomplexes(&solid, 2).unwrap(), 0);
        assert_eq!(count_boundary_subcomplexes(&hollow_triangle(), 1).unwrap(), 1);
    }

    #[test]
    fn clique_recursion_equality_cases() {
        let k3 = SimplicialComplex::clique_complex(&Graph::complete(3), 2).unwrap();
        let r = check_clique_recursion(&k3, 1).unwrap();
        assert!(r.holds);
        assert!((r.lhs - 3.0).abs() < 1e-9);
        assert!((r.rhs - 3.0).abs() < 1e-9);

        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let x = SimplicialComplex::clique_complex(&c4, 2).unwrap();
        let r = check_clique_recursion(&x, 1).unwrap();
        assert!(r.holds);
        assert!(r.lhs.abs() < 1e-9);
        assert!(r.rhs.abs() < 1e-9);
    }

    #[test]
    fn clique_recursion_rejects_non_clique() {
        assert!(matches!(
            check_clique_recursion(&hollow_triangle(), 1),
            Err(Error::NotCliqueComplex(2))
        ));
    }

    #[test]
    fn subcomplex_bound_tight_on_triangles() {
        let r = check_subcomplex_bound(&full_triangle(), &hollow_triangle(), 1).unwrap();
        assert!(r.holds);
        assert!(r.residual.abs() < 1e-9, "expected a tight case, residual {}", r.residual);

        let full = full_triangle();
        let same = check_subcomplex_bound(&full, &full, 1).unwrap();
        assert!(same.holds);
        assert!(same.residual.abs() < 1e-9);
    }

    #[test]
    fn general_bound_on_hollow_triangle() {
        let r = check_general_bound(&hollow_triangle(), 1).unwrap();
        assert!(r.holds);
        assert!(r.lhs.abs() < 1e-9);
        assert!((r.rhs - -1.0).abs() < 1e-9);
    }

    #[test]
    fn general_bound_reduces_to_recursion_for_cliques() {
        let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (1, 3), (3, 4), (2, 4)]).unwrap();
        let x = SimplicialComplex::clique_complex(&g, 2).unwrap();
        let gen = check_general_bound(&x, 1).unwrap();
        let rec = check_clique_recursion(&x, 1).unwrap();
        assert!((gen.rhs - rec.rhs).abs() < 1e-9);
        assert!((gen.lhs - rec.lhs).abs() < 1e-9);
    }

    #[test]
    fn subcomplex_certificate_on_complete_graphs() {
        for n in 4..=6 {
            let x = SimplicialComplex::clique_complex(&Graph::complete(n), 3).unwrap();
            for k in 1..=2 {
                let cert = vanishing_certificate_subcomplex(&x, &x, k).unwrap();
                assert!(cert.condition_holds, "K_{n} k={k} should fire");
                assert_eq!(betti_reduced_exact(&x, k), 0);
            }
        }
    }

    #[test]
    fn subcomplex_certificate_does_not_fire_on_tight_triangle() {
        let cert = vanishing_certificate_subcomplex(&full_triangle(), &hollow_triangle(), 1).unwrap();
        assert!(!cert.condition_holds);
        assert!((cert.lambda_2 - 3.0).abs() < 1e-9);
        assert!((cert.threshold - 3.0).abs() < 1e-9);
        assert_eq!(betti_reduced_exact(&hollow_triangle(), 1), 1);
    }

    #[test]
    fn general_certificate_examples() {
        let bt = boundary_tetrahedron();
        let cert = vanishing_certificate_general(&bt, 2).unwrap();
        assert!(!cert.condition_holds);
        assert!((cert.lambda_2 - 4.0).abs() < 1e-9);
        assert!((cert.threshold - (8.0 / 3.0 + 3.0)).abs() < 1e-9);
        assert_eq!(betti_reduced_exact(&bt, 2), 1);

        let k5 = SimplicialComplex::clique_complex(&Graph::complete(5), 2).unwrap();
        let cert = vanishing_certificate_general(&k5, 1).unwrap();
        assert!(cert.condition_holds);
        assert!((cert.lambda_2 - 5.0).abs() < 1e-9);
        assert_eq!(betti_reduced_exact(&k5, 1), 0);
    }

    #[test]
    fn certificate_skeleton_hypotheses_enforced() {
        // hollow triangle: 1-skeleton's clique complex has the 2-face, so the
        // through-2 check fails for the subcomplex certificate
        assert!(matches!(
            vanishing_certificate_subcomplex(&hollow_triangle(), &hollow_triangle(), 1),
            Err(Error::NotCliqueComplex(2))
        ));
        // but the general certificate only needs the 1-skeleton at k = 1
        let cert = vanishing_certificate_general(&hollow_triangle(), 1).unwrap();
        assert!(!cert.condition_holds);

        // mismatched vertex sets
        let full = full_triangle();
        let edge_only = SimplicialComplex::from_faces(3, vec![sx(&[0, 1])]).unwrap();
        assert!(matches!(
            vanishing_certificate_subcomplex(&full, &edge_only, 1),
            Err(Error::SkeletonMismatch(1))
        ));
    }

    #[test]
    fn not_applicable_when_faces_missing() {
        // a single edge has no 2-faces: mu_2 undefined
        let edge = SimplicialComplex::from_faces(2, vec![sx(&[0, 1])]).unwrap();
        assert!(matches!(
            check_general_bound(&edge, 2),
            Err(Error::NotApplicable { .. })
        ));
    }
}
