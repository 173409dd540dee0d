//! Shared fixtures and independent oracles for the integration suites.
//!
//! The cochain-identity evaluators here re-derive the link-sum formulas from
//! scratch so they stay independent of the matrix assembly they are used to
//! check.

#![allow(dead_code)]

use scx::complex::SimplicialComplex;
use scx::graph::Graph;
use scx::lab::{gnp, SplitMix64};
use scx::simplex::Simplex;
use scx::spectral::Cochain;

pub fn sx(v: &[usize]) -> Simplex {
    Simplex::new(v.to_vec()).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &pairs).unwrap()
}

pub fn path_graph(n: usize) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::from_edge_list(n, &pairs).unwrap()
}

pub fn hollow_triangle() -> SimplicialComplex {
    SimplicialComplex::from_faces(3, vec![sx(&[0, 1]), sx(&[0, 2]), sx(&[1, 2])]).unwrap()
}

pub fn full_triangle() -> SimplicialComplex {
    SimplicialComplex::from_faces(3, vec![sx(&[0, 1, 2])]).unwrap()
}

/// Boundary of the tetrahedron: all proper faces of {0,1,2,3}.
pub fn boundary_tetrahedron() -> SimplicialComplex {
    SimplicialComplex::clique_complex(&Graph::complete(4), 2).unwrap()
}

/// Remove each top-dimensional face with probability ~0.4; closure survives.
pub fn delete_random_top_faces(x: &SimplicialComplex, rng: &mut SplitMix64) -> SimplicialComplex {
    let Some(d) = x.dim() else {
        return x.clone();
    };
    let mut faces: Vec<Simplex> = Vec::new();
    for lower in 0..d {
        faces.extend(x.faces(lower).iter().cloned());
    }
    for f in x.faces(d) {
        if rng.next_f64() < 0.6 {
            faces.push(f.clone());
        }
    }
    SimplicialComplex::from_faces(x.ambient_vertices(), faces).unwrap()
}

/// A randomized complex: clique complex, neighborhood complex, or a
/// top-face-deleted subcomplex of one of those, on at most `max_n` vertices.
pub fn random_complex(rng: &mut SplitMix64, max_n: usize, cap: usize) -> SimplicialComplex {
    let n = 4 + rng.below(max_n.saturating_sub(3));
    let p = 0.3 + 0.5 * rng.next_f64();
    let g = gnp(n, p, rng.next_u64()).unwrap();
    match rng.below(3) {
        0 => SimplicialComplex::clique_complex(&g, cap).unwrap(),
        1 => SimplicialComplex::neighborhood_complex(&g, Some(cap)),
        _ => {
            let base = SimplicialComplex::clique_complex(&g, cap).unwrap();
            delete_random_top_faces(&base, rng)
        }
    }
}

/// Random cochain with entries in [-1, 1).
pub fn random_cochain(x: &SimplicialComplex, k: isize, rng: &mut SplitMix64) -> Cochain {
    let len = if k == -1 { 1 } else { x.num_faces(k as usize) };
    let values: Vec<f64> = (0..len).map(|_| 2.0 * rng.next_f64() - 1.0).collect();
    Cochain::from_values(x, k, values).unwrap()
}

/// Oriented evaluation `phi(v eta)`: `v` prepended to the canonical simplex
/// `eta`; zero when the union is not a face.
pub fn eval_prepend(x: &SimplicialComplex, phi: &Cochain, v: usize, eta: &Simplex) -> f64 {
    if eta.contains(v) {
        return 0.0;
    }
    let (sigma, pos) = eta.with_inserted(v);
    match x.position(&sigma) {
        Some(i) => {
            let sign = if pos % 2 == 0 { 1.0 } else { -1.0 };
            sign * phi.values[i]
        }
        None => 0.0,
    }
}

/// Oriented evaluation `phi(v u eta)` with `u` then `v` prepended.
pub fn eval_prepend2(
    x: &SimplicialComplex,
    phi: &Cochain,
    v: usize,
    u: usize,
    eta: &Simplex,
) -> f64 {
    if eta.contains(u) || eta.contains(v) || u == v {
        return 0.0;
    }
    let (ueta, pos_u) = eta.with_inserted(u);
    let sign_u = if pos_u % 2 == 0 { 1.0 } else { -1.0 };
    sign_u * eval_prepend(x, phi, v, &ueta)
}

/// Vertices of `eta` evaluated against: pairs {v, w} forming a 1-simplex of
/// the link of `eta` (or of the whole complex when `eta` is the empty
/// simplex marker).
fn for_link_edges(
    x: &SimplicialComplex,
    eta: Option<&Simplex>,
    mut f: impl FnMut(usize, usize),
) {
    let verts: Vec<usize> = x.vertex_ids().collect();
    for (i, &v) in verts.iter().enumerate() {
        if eta.is_some_and(|e| e.contains(v)) {
            continue;
        }
        for &w in &verts[i + 1..] {
            if eta.is_some_and(|e| e.contains(w)) {
                continue;
            }
            let joined = match eta {
                Some(e) => {
                    let (ve, _) = e.with_inserted(v);
                    ve.with_inserted(w).0
                }
                None => sx(&[v, w]),
            };
            if x.contains(&joined) {
                f(v, w);
            }
        }
    }
}

/// Number of cofaces of one dimension higher; the empty simplex has every
/// vertex as a coface.
fn degree_or_vertex_count(x: &SimplicialComplex, eta: Option<&Simplex>) -> f64 {
    match eta {
        Some(e) => x.degree(e).unwrap() as f64,
        None => x.vertex_count() as f64,
    }
}

/// Independent right-hand side of the coboundary-norm identity:
/// `sum_sigma deg(sigma) phi(sigma)^2
///  - 2 sum_eta sum_{vw in lk(eta)} phi(v eta) phi(w eta)`
/// over eta of dimension k-1 (the empty simplex when k = 0).
pub fn coboundary_norm_rhs(x: &SimplicialComplex, phi: &Cochain) -> f64 {
    let k = phi.k as usize;
    let mut first = 0.0;
    for (i, sigma) in x.faces(k).iter().enumerate() {
        first += x.degree(sigma).unwrap() as f64 * phi.values[i] * phi.values[i];
    }
    let mut second = 0.0;
    if k == 0 {
        for_link_edges(x, None, |v, w| {
            second += phi.value_on(x, &sx(&[v])).unwrap() * phi.value_on(x, &sx(&[w])).unwrap();
        });
    } else {
        for eta in x.faces(k - 1) {
            for_link_edges(x, Some(eta), |v, w| {
                second += eval_prepend(x, phi, v, eta) * eval_prepend(x, phi, w, eta);
            });
        }
    }
    first - 2.0 * second
}

/// Independent right-hand side of the restricted-coboundary identity:
/// `sum_sigma (sum_{tau facet of sigma} deg(tau)) phi(sigma)^2
///  - 2 sum_eta sum_{vw in lk(eta)} sum_{u in lk(v eta) and lk(w eta)}
///      phi(v u eta) phi(w u eta)`
/// over eta of dimension k-2 (the empty simplex when k = 1). Needs k >= 1.
pub fn restricted_coboundary_rhs(x: &SimplicialComplex, phi: &Cochain) -> f64 {
    let k = phi.k as usize;
    assert!(k >= 1);
    let verts: Vec<usize> = x.vertex_ids().collect();
    let mut first = 0.0;
    for (i, sigma) in x.faces(k).iter().enumerate() {
        let facet_degrees: usize = sigma.facets().map(|t| x.degree(&t).unwrap()).sum();
        first += facet_degrees as f64 * phi.values[i] * phi.values[i];
    }

    let mut second = 0.0;
    let mut handle_eta = |eta: Option<&Simplex>| {
        let mut local = 0.0;
        for_link_edges(x, eta, |v, w| {
            for &u in &verts {
                if u == v || u == w || eta.is_some_and(|e| e.contains(u)) {
                    continue;
                }
                // u must lie in the links of both v-eta and w-eta
                let in_both = match eta {
                    Some(e) => {
                        let (ve, _) = e.with_inserted(v);
                        let (we, _) = e.with_inserted(w);
                        x.contains(&ve.with_inserted(u).0) && x.contains(&we.with_inserted(u).0)
                    }
                    None => x.contains(&sx(&[u.min(v), u.max(v)])) && x.contains(&sx(&[u.min(w), u.max(w)])),
                };
                if !in_both {
                    continue;
                }
                let (a, b) = match eta {
                    Some(e) => (
                        eval_prepend2(x, phi, v, u, e),
                        eval_prepend2(x, phi, w, u, e),
                    ),
                    None => (
                        eval_prepend(x, phi, v, &sx(&[u])),
                        eval_prepend(x, phi, w, &sx(&[u])),
                    ),
                };
                local += a * b;
            }
        });
        local
    };
    if k == 1 {
        second += handle_eta(None);
    } else {
        for eta in x.faces(k - 2) {
            second += handle_eta(Some(eta));
        }
    }
    first - 2.0 * second
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
