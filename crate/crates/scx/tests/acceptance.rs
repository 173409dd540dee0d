//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured numbers (run with `--nocapture` to see them). Criterion 8
//! (byte-identical CLI reruns) lives in the CLI crate's acceptance test.

mod common;

use std::time::Instant;

use common::*;
use scx::bounds::{
    check_clique_recursion, check_general_bound, check_subcomplex_bound,
    vanishing_certificate_general, vanishing_certificate_subcomplex,
};
use scx::complex::SimplicialComplex;
use scx::graph::Graph;
use scx::lab::{
    gnp, mc_nonvanishing, mc_vanishing, ExperimentConfig, Mode, PSpec, SplitMix64,
};
use scx::matrix::Matrix;
use scx::spectral::{
    apply_adjoint, apply_coboundary, betti_reduced_exact, coboundary_matrix, eigenvalues_sym,
    hodge_kernel_dim, laplacian, restrict_cochain, spectral_gap,
};

/// Criterion 1: the harmonic and exact-rank routes agree, integer for
/// integer, on at least 200 randomized complexes within 60 seconds.
#[test]
fn criterion_1_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(1001);
    let mut complexes = 0;
    let mut comparisons = 0;
    while complexes < 200 {
        let x = random_complex(&mut rng, 10, 3);
        if x.is_empty() {
            continue;
        }
        complexes += 1;
        let top = x.dim().unwrap();
        for k in 0..=top.min(2) {
            let exact = betti_reduced_exact(&x, k);
            let harmonic = hodge_kernel_dim(&x, k, None).unwrap();
            assert_eq!(
                exact, harmonic,
                "route disagreement at k={k} on a complex with {} faces",
                x.total_faces()
            );
            comparisons += 1;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 60.0, "oracle equivalence took {elapsed:.1}s");
    println!(
        "ACCEPTANCE 1 PASS - harmonic == exact rank on {complexes} complexes \
         ({comparisons} dimension checks) in {elapsed:.1}s"
    );
}

/// Criterion 2: the coboundary composes to zero exactly, and the three
/// link-sum identities hold to relative 1e-10 on 50 random instances each.
#[test]
fn criterion_2_operator_identities() {
    // exact integer: delta o delta = 0
    let mut rng = SplitMix64::new(2002);
    let mut composed = 0;
    let mut pool: Vec<SimplicialComplex> = vec![
        hollow_triangle(),
        full_triangle(),
        boundary_tetrahedron(),
        SimplicialComplex::neighborhood_complex(&cycle_graph(5), None),
    ];
    for _ in 0..20 {
        pool.push(random_complex(&mut rng, 9, 3));
    }
    for x in &pool {
        let Some(dim) = x.dim() else { continue };
        for k in -1..dim as isize {
            let lo: Matrix<i64> = coboundary_matrix(x, k).unwrap().to_dense();
            let hi: Matrix<i64> = coboundary_matrix(x, k + 1).unwrap().to_dense();
            assert!(hi.matmul(&lo).is_zero(), "delta o delta != 0 at k={k}");
            composed += 1;
        }
    }

    // identity instances: random (X, k, phi)
    let mut instances = 0;
    let mut rng = SplitMix64::new(2003);
    while instances < 50 {
        let x = random_complex(&mut rng, 9, 3);
        let Some(dim) = x.dim() else { continue };
        if dim < 1 {
            continue;
        }
        let k = 1 + rng.below(dim.min(2));
        if x.num_faces(k) == 0 {
            continue;
        }
        let phi = random_cochain(&x, k as isize, &mut rng);

        // coboundary-norm identity
        let lhs = apply_coboundary(&x, &phi).unwrap().norm_sq();
        let rhs = coboundary_norm_rhs(&x, &phi);
        assert!(rel_close(lhs, rhs, 1e-10), "norm identity: {lhs} vs {rhs}");

        // restricted-coboundary identity
        let lhs: f64 = x
            .vertex_ids()
            .map(|u| {
                let ru = restrict_cochain(&x, &phi, u).unwrap();
                apply_coboundary(&x, &ru).unwrap().norm_sq()
            })
            .sum();
        let rhs = restricted_coboundary_rhs(&x, &phi);
        assert!(rel_close(lhs, rhs, 1e-10), "restricted identity: {lhs} vs {rhs}");

        // restricted-adjoint identity
        let lhs: f64 = x
            .vertex_ids()
            .map(|u| {
                let ru = restrict_cochain(&x, &phi, u).unwrap();
                apply_adjoint(&x, &ru).unwrap().norm_sq()
            })
            .sum();
        let rhs = k as f64 * apply_adjoint(&x, &phi).unwrap().norm_sq();
        assert!(rel_close(lhs, rhs, 1e-10), "adjoint identity: {lhs} vs {rhs}");

        instances += 1;
    }
    println!(
        "ACCEPTANCE 2 PASS - delta o delta == 0 on {composed} operators, \
         3 identities x {instances} random instances at rel 1e-10"
    );
}

/// Criterion 3: the three inequality checkers hold on 100 randomized valid
/// instances each, and the triangle pair reproduces the tight case.
#[test]
fn criterion_3_theorem_suites() {
    let mut rng = SplitMix64::new(3003);

    let mut recursion = 0;
    while recursion < 100 {
        let n = 5 + rng.below(5);
        let p = 0.4 + 0.5 * rng.next_f64();
        let g = gnp(n, p, rng.next_u64()).unwrap();
        let k = 1 + rng.below(2);
        let x = SimplicialComplex::clique_complex(&g, k + 1).unwrap();
        if x.num_faces(k) == 0 {
            continue;
        }
        let rep = check_clique_recursion(&x, k).unwrap();
        assert!(rep.holds, "clique recursion violated: residual {}", rep.residual);
        recursion += 1;
    }

    let mut subcomplex = 0;
    while subcomplex < 100 {
        let x = random_complex(&mut rng, 9, 3);
        let Some(dim) = x.dim() else { continue };
        if dim < 2 {
            continue;
        }
        let sub = delete_random_top_faces(&x, &mut rng);
        let k = 1 + rng.below(dim.min(2));
        if sub.num_faces(k) == 0 || x.num_faces(k) == 0 {
            continue;
        }
        let rep = check_subcomplex_bound(&x, &sub, k).unwrap();
        assert!(rep.holds, "subcomplex bound violated: residual {}", rep.residual);
        subcomplex += 1;
    }

    let mut general = 0;
    while general < 100 {
        let x = random_complex(&mut rng, 9, 3);
        let Some(dim) = x.dim() else { continue };
        if dim < 1 {
            continue;
        }
        let k = 1 + rng.below(dim.min(2));
        if x.num_faces(k) == 0 || x.num_faces(k - 1) == 0 {
            continue;
        }
        let rep = check_general_bound(&x, k).unwrap();
        assert!(rep.holds, "general bound violated: residual {}", rep.residual);
        general += 1;
    }

    let tight = check_subcomplex_bound(&full_triangle(), &hollow_triangle(), 1).unwrap();
    assert!(
        tight.residual.abs() <= 1e-9,
        "tight case residual {} out of tolerance",
        tight.residual
    );
    println!(
        "ACCEPTANCE 3 PASS - recursion x{recursion}, subcomplex x{subcomplex}, \
         general x{general} all hold; triangle tight case residual {:.2e}",
        tight.residual
    );
}

/// Criterion 4: the small named cases come out exactly as computed by hand.
#[test]
fn criterion_4_named_small_cases() {
    for n in 3..=8 {
        let gap = spectral_gap(&Graph::complete(n)).unwrap();
        assert!((gap - n as f64).abs() <= 1e-9, "lambda_2(K_{n}) = {gap}");
    }

    let hollow: Matrix<f64> = laplacian(&hollow_triangle(), 1);
    let eig = eigenvalues_sym(&hollow).unwrap();
    for (got, want) in eig.iter().zip([0.0, 3.0, 3.0]) {
        assert!((got - want).abs() <= 1e-9, "hollow spectrum {eig:?}");
    }

    assert_eq!(betti_reduced_exact(&boundary_tetrahedron(), 2), 1);

    let nc5 = SimplicialComplex::neighborhood_complex(&cycle_graph(5), Some(2));
    assert_eq!(betti_reduced_exact(&nc5, 1), 1);

    let nk4 = SimplicialComplex::neighborhood_complex(&Graph::complete(4), None);
    assert_eq!(nk4, boundary_tetrahedron(), "N(K_4) must equal the tetrahedron boundary");

    println!(
        "ACCEPTANCE 4 PASS - lambda_2(K_n)=n for n=3..8, hollow-triangle spectrum \
         {{0,3,3}}, betti_2(dTet)=1, betti_1(N(C_5))=1, N(K_4)==dTet"
    );
}

/// Criterion 5: across an aggregate of at least 500 Monte-Carlo trials, a
/// fired certificate never meets a nonzero exact Betti number and a witness
/// never meets a zero one (on budget-feasible trials).
#[test]
fn criterion_5_certificate_soundness() {
    let mut total_trials = 0;
    let mut fired_checked = 0;
    let mut witness_checked = 0;

    for (c, seed) in [(-4.0, 51u64), (0.0, 52), (6.0, 53)] {
        let cfg = ExperimentConfig::new(30, 1, PSpec::Threshold(c), 100, seed, Mode::Vanishing);
        let run = mc_vanishing(&cfg).unwrap();
        assert_eq!(
            run.summary.soundness_violations, 0,
            "certificate fired against nonzero betti at c={c}"
        );
        for rec in &run.records {
            if rec.certificate_fired == Some(true) && rec.betti_k.is_some() {
                assert_eq!(rec.betti_k, Some(0));
                fired_checked += 1;
            }
        }
        total_trials += run.records.len();
    }

    for (n, alpha, seed) in [(50usize, -0.75f64, 54u64), (40, -0.8, 55)] {
        let cfg = ExperimentConfig::new(n, 1, PSpec::Power(alpha), 100, seed, Mode::NonVanishing);
        let run = mc_nonvanishing(&cfg).unwrap();
        assert_eq!(
            run.summary.witness_violations, 0,
            "witness against zero betti at n={n}, alpha={alpha}"
        );
        for rec in &run.records {
            if rec.lambda_r_found == Some(true) && rec.betti_k.is_some() {
                assert!(rec.betti_k.unwrap() >= 1);
                witness_checked += 1;
            }
        }
        total_trials += run.records.len();
    }

    assert!(total_trials >= 500, "aggregate too small: {total_trials}");
    assert!(fired_checked > 0, "no fired certificate was cross-checked");
    assert!(witness_checked > 0, "no witness was cross-checked");
    println!(
        "ACCEPTANCE 5 PASS - {total_trials} trials, {fired_checked} fired certificates \
         and {witness_checked} witnesses cross-checked against exact Betti, 0 violations"
    );
}

/// Criterion 6: vanishing frequency sweeps the threshold window
/// nondecreasing in c (up to Wilson overlap), with a spread of at least 0.2
/// between the endpoints, within the runtime target.
#[test]
fn criterion_6_threshold_trend() {
    let start = Instant::now();
    let offsets = [-12.0, -6.0, 0.0, 6.0, 12.0];
    let mut stats = Vec::new();
    for (i, &c) in offsets.iter().enumerate() {
        let cfg = ExperimentConfig::new(
            40,
            1,
            PSpec::Threshold(c),
            200,
            2024 + i as u64,
            Mode::Vanishing,
        );
        let run = mc_vanishing(&cfg).unwrap();
        assert_eq!(run.summary.soundness_violations, 0);
        let f = run.summary.frequencies["vanishing"].clone();
        println!(
            "ACCEPTANCE 6 point c={c:>5}: p={:.4} vanishing {}/{} = {:.3} wilson [{:.3}, {:.3}]",
            run.summary.p, f.count, f.total, f.frequency, f.wilson_low, f.wilson_high
        );
        stats.push(f);
    }
    for w in stats.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        let nondecreasing = hi.frequency + 1e-12 >= lo.frequency;
        let overlap = hi.wilson_low <= lo.wilson_high;
        assert!(
            nondecreasing || overlap,
            "vanishing frequency dropped beyond interval overlap: {} -> {}",
            lo.frequency,
            hi.frequency
        );
    }
    let spread = stats.last().unwrap().frequency - stats[0].frequency;
    assert!(spread >= 0.2, "endpoint spread {spread} below 0.2");
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 900.0, "threshold sweep took {elapsed:.0}s");
    println!(
        "ACCEPTANCE 6 PASS - trend nondecreasing, endpoint spread {spread:.3} >= 0.2, \
         {elapsed:.1}s"
    );
}

/// Criterion 7: witness frequency in the power-law window, reported with its
/// interval; the hard requirement is the witness/Betti implication.
#[test]
fn criterion_7_witness_signal() {
    let cfg = ExperimentConfig::new(60, 1, PSpec::Power(-0.75), 100, 777, Mode::NonVanishing);
    let run = mc_nonvanishing(&cfg).unwrap();
    assert_eq!(run.summary.witness_violations, 0, "witness implication failed");
    let f = &run.summary.frequencies["lambda_r_found"];
    let b = &run.summary.frequencies["betti_k_positive"];
    let target_met = f.frequency >= 0.5;
    println!(
        "ACCEPTANCE 7 PASS - witness frequency {}/{} = {:.3} wilson [{:.3}, {:.3}] \
         (target >= 0.5: {}), betti_1 > 0 frequency {:.3}, implication violations 0",
        f.count, f.total, f.frequency, f.wilson_low, f.wilson_high,
        if target_met { "met" } else { "NOT met" },
        b.frequency
    );
}
