//! Seeded G(n, p) sampling and Monte-Carlo experiments on neighborhood
//! complexes: vanishing-threshold sweeps and unextendable-clique witness
//! searches.
//!
//! All randomness is counter-based: the coin for edge (u, v) depends only on
//! (seed, u, v), so identical configurations reproduce identical graphs no
//! matter how trials are scheduled. Trials run in parallel and are reduced
//! in trial order, making every summary bit-identical across reruns.

use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

use crate::bits::BitSet;
use crate::bounds::{count_boundary_subcomplexes, d_k};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{betti_reduced_exact, spectral_gap};
use crate::Real;

/// Default cap on `|X(i)| * |X(i+1)|` above which per-trial exact Betti
/// numbers are skipped.
pub const DEFAULT_BETTI_BUDGET: u64 = 50_000_000;

/// Default cap on the number of candidate cliques the witness search visits.
pub const DEFAULT_ENUM_BUDGET: usize = 1_000_000;

/// SplitMix64 finalizer; the basis of all sampling in this module.
pub fn mix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

fn unit_f64(bits: u64) -> f64 {
    (bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Small deterministic sequential generator for tests and sampling helpers.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    pub fn next_f64(&mut self) -> f64 {
        unit_f64(self.next_u64())
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// Erdos-Renyi graph: every pair (u, v) is an edge independently with
/// probability `p`, driven by a counter-based coin keyed on (seed, u, v).
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(Error::InvalidProbability(p));
    }
    let key = mix64(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let coin = unit_f64(mix64(key ^ ((u as u64) << 32 | v as u64)));
            if coin < p {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &pairs)
}

/// Edge probability `(((k+1) ln n + c) / n)^(1/(k+2))` of the vanishing
/// threshold window. A c so negative that the numerator drops below zero
/// clamps to p = 0 (the sweep has left the window entirely); a result above
/// one is an input error.
pub fn vanishing_threshold_p(n: usize, k: usize, c: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::invalid("threshold needs n >= 1"));
    }
    let numerator = ((k + 1) as f64 * (n as f64).ln() + c).max(0.0);
    let p = (numerator / n as f64).powf(1.0 / (k + 2) as f64);
    if p > 1.0 {
        return Err(Error::ThresholdAboveOne { n, k, c, p });
    }
    Ok(p)
}

/// How the edge probability of a run is specified.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum PSpec {
    /// Fixed p.
    Explicit(f64),
    /// Threshold window offset c, resolved via [`vanishing_threshold_p`].
    Threshold(f64),
    /// Power law p = n^alpha.
    Power(f64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Vanishing,
    NonVanishing,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub n: usize,
    /// Target cohomology dimension; the witness search uses r = k + 2.
    pub k: usize,
    pub p_spec: PSpec,
    pub trials: usize,
    pub seed: u64,
    pub mode: Mode,
    /// Cap on `|X(i)| * |X(i+1)|` for per-trial exact Betti numbers.
    pub betti_budget: u64,
    /// Count every witness instead of stopping at the first.
    pub full_count: bool,
}

impl ExperimentConfig {
    pub fn new(n: usize, k: usize, p_spec: PSpec, trials: usize, seed: u64, mode: Mode) -> Self {
        ExperimentConfig {
            n,
            k,
            p_spec,
            trials,
            seed,
            mode,
            betti_budget: DEFAULT_BETTI_BUDGET,
            full_count: false,
        }
    }

    /// Resolve the edge probability and collect configuration warnings.
    pub fn resolve(&self) -> Result<(f64, Vec<String>)> {
        if self.trials == 0 {
            return Err(Error::invalid("trials must be >= 1"));
        }
        if self.k < 1 {
            return Err(Error::invalid("experiments need k >= 1"));
        }
        let mut warnings = Vec::new();
        let p = match self.p_spec {
            PSpec::Explicit(p) => {
                if !(0.0..=1.0).contains(&p) || p.is_nan() {
                    return Err(Error::InvalidProbability(p));
                }
                p
            }
            PSpec::Threshold(c) => {
                let p = vanishing_threshold_p(self.n, self.k, c)?;
                if p == 0.0 {
                    warnings.push(format!(
                        "threshold offset c = {c} clamps p to 0 at n = {}: trials will be degenerate",
                        self.n
                    ));
                }
                p
            }
            PSpec::Power(alpha) => {
                let lo = -2.0 / (self.k + 1) as f64;
                let hi = -1.0 / (self.k + 1) as f64;
                if self.mode == Mode::NonVanishing && !(alpha > lo && alpha < hi) {
                    warnings.push(format!(
                        "alpha = {alpha} is outside the witness window ({lo}, {hi}) for k = {}",
                        self.k
                    ));
                }
                let p = (self.n as f64).powf(alpha);
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::InvalidProbability(p));
                }
                p
            }
        };
        Ok((p, warnings))
    }
}

/// Everything observed in one trial. Fields are `None` when the quantity was
/// not computed (degenerate complex, hypothesis failure, or budget).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    /// Per-trial graph seed derived from the run seed.
    pub seed: u64,
    /// Neighborhood complex came out empty.
    pub degenerate: bool,
    /// 1-skeleton of the neighborhood complex is disconnected.
    pub disconnected: Option<bool>,
    /// k-skeleton of the neighborhood complex is complete.
    pub full_skeleton: Option<bool>,
    pub lambda2: Option<Real>,
    /// D_k(N, k+1).
    pub d_k_top: Option<usize>,
    /// Number of hollow (k+1)-simplex boundaries.
    pub b_k: Option<usize>,
    pub certificate_fired: Option<bool>,
    pub betti_k: Option<usize>,
    /// All reduced Betti numbers below k vanish (exact).
    pub betti_below_zero: Option<bool>,
    pub lambda_r_found: Option<bool>,
    pub lambda_r_lower: Option<usize>,
    pub over_budget: bool,
    /// Vanishing verdict for dimensions <= k where determinable.
    pub vanishing: Option<bool>,
    /// Wall time; excluded from deterministic output paths.
    pub runtime_ms: u64,
}

impl TrialRecord {
    fn empty(trial: usize, seed: u64) -> Self {
        TrialRecord {
            trial,
            seed,
            degenerate: false,
            disconnected: None,
            full_skeleton: None,
            lambda2: None,
            d_k_top: None,
            b_k: None,
            certificate_fired: None,
            betti_k: None,
            betti_below_zero: None,
            lambda_r_found: None,
            lambda_r_lower: None,
            over_budget: false,
            vanishing: None,
            runtime_ms: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FreqStat {
    pub count: usize,
    pub total: usize,
    pub frequency: f64,
    pub wilson_low: f64,
    pub wilson_high: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountStat {
    pub observed: usize,
    pub mean: f64,
    pub max: f64,
}

/// Aggregates over a run; deterministic for a fixed (config, seed).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentSummary {
    pub config: ExperimentConfig,
    pub p: f64,
    pub frequencies: BTreeMap<String, FreqStat>,
    pub counts: BTreeMap<String, CountStat>,
    /// Trials where a fired certificate met a nonzero exact betti_k.
    pub soundness_violations: usize,
    /// Trials where a witness met an exact betti_k of zero.
    pub witness_violations: usize,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct ExperimentRun {
    pub records: Vec<TrialRecord>,
    pub summary: ExperimentSummary,
}

/// 95% Wilson score interval.
pub fn wilson_interval(count: usize, total: usize) -> (f64, f64) {
    if total == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959963984540054_f64;
    let n = total as f64;
    let p = count as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = p + z2 / (2.0 * n);
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    let lo = if count == 0 { 0.0 } else { ((center - half) / denom).max(0.0) };
    let hi = if count == total { 1.0 } else { ((center + half) / denom).min(1.0) };
    (lo, hi)
}

fn freq_stat(count: usize, total: usize) -> FreqStat {
    let (lo, hi) = wilson_interval(count, total);
    FreqStat {
        count,
        total,
        frequency: if total == 0 { 0.0 } else { count as f64 / total as f64 },
        wilson_low: lo,
        wilson_high: hi,
    }
}

fn trial_seed(seed: u64, trial: usize) -> u64 {
    mix64(seed ^ (trial as u64).wrapping_mul(0xD6E8FEB86659FD93))
}

/// Work proxy for the exact Betti computation through dimension k.
fn betti_cost(x: &SimplicialComplex, k: usize) -> u64 {
    (0..=k)
        .map(|i| x.num_faces(i) as u64 * x.num_faces(i + 1) as u64)
        .max()
        .unwrap_or(0)
}

fn vanishing_trial(cfg: &ExperimentConfig, p: f64, trial: usize) -> TrialRecord {
    let start = std::time::Instant::now();
    let seed = trial_seed(cfg.seed, trial);
    let mut rec = TrialRecord::empty(trial, seed);
    let k = cfg.k;
    let g = gnp(cfg.n, p, seed).expect("p validated");
    let nb = SimplicialComplex::neighborhood_complex(&g, Some(k + 1));
    if nb.is_empty() {
        rec.degenerate = true;
        rec.vanishing = Some(false);
        rec.runtime_ms = start.elapsed().as_millis() as u64;
        return rec;
    }
    let (skel, _) = nb.one_skeleton();
    rec.disconnected = Some(!skel.is_connected());
    rec.full_skeleton = Some(nb.is_full_skeleton(k));
    if skel.vertex_count() >= 2 {
        rec.lambda2 = spectral_gap(&skel).ok();
    }
    rec.d_k_top = d_k(&nb, k, k + 1).ok();
    rec.b_k = count_boundary_subcomplexes(&nb, k).ok();

    // certificate from the clique comparison, when its hypothesis holds
    if let (Some(lambda2), Some(d_top)) = (rec.lambda2, rec.d_k_top) {
        if nb.is_clique_complex_through(k) {
            let m = nb.vertex_count() as f64;
            let kf = k as f64;
            let threshold = kf * m / (kf + 1.0) + (kf + 1.0) * d_top as f64;
            rec.certificate_fired = Some(lambda2 > threshold);
        }
    }

    if betti_cost(&nb, k) <= cfg.betti_budget {
        rec.betti_k = Some(betti_reduced_exact(&nb, k));
        rec.betti_below_zero =
            Some((0..k).all(|i| betti_reduced_exact(&nb, i) == 0));
    } else {
        rec.over_budget = true;
    }

    rec.vanishing = match (rec.betti_k, rec.betti_below_zero) {
        (Some(bk), Some(below)) => {
            Some(below && (bk == 0 || rec.certificate_fired == Some(true)))
        }
        _ => match (rec.certificate_fired, rec.full_skeleton) {
            (Some(true), Some(true)) => Some(true),
            _ => None,
        },
    };
    rec.runtime_ms = start.elapsed().as_millis() as u64;
    rec
}

fn nonvanishing_trial(cfg: &ExperimentConfig, p: f64, trial: usize) -> TrialRecord {
    let start = std::time::Instant::now();
    let seed = trial_seed(cfg.seed, trial);
    let mut rec = TrialRecord::empty(trial, seed);
    let k = cfg.k;
    let r = k + 2;
    let g = gnp(cfg.n, p, seed).expect("p validated");

    let search = find_unextendable_clique_with(&g, r, cfg.full_count, DEFAULT_ENUM_BUDGET)
        .expect("r >= 2");
    rec.lambda_r_found = Some(search.found);
    rec.lambda_r_lower = Some(search.count_lower);

    let nb = SimplicialComplex::neighborhood_complex(&g, Some(k + 1));
    if nb.is_empty() {
        rec.degenerate = true;
        rec.runtime_ms = start.elapsed().as_millis() as u64;
        return rec;
    }
    let (skel, _) = nb.one_skeleton();
    rec.disconnected = Some(!skel.is_connected());
    rec.full_skeleton = Some(nb.is_full_skeleton(k));
    if skel.vertex_count() >= 2 {
        rec.lambda2 = spectral_gap(&skel).ok();
    }
    rec.d_k_top = d_k(&nb, k, k + 1).ok();
    rec.b_k = count_boundary_subcomplexes(&nb, k).ok();

    if betti_cost(&nb, k) <= cfg.betti_budget {
        rec.betti_k = Some(betti_reduced_exact(&nb, k));
        rec.betti_below_zero =
            Some((0..k).all(|i| betti_reduced_exact(&nb, i) == 0));
    } else {
        rec.over_budget = true;
    }
    rec.runtime_ms = start.elapsed().as_millis() as u64;
    rec
}

fn summarize(
    cfg: &ExperimentConfig,
    p: f64,
    warnings: Vec<String>,
    records: &[TrialRecord],
) -> ExperimentSummary {
    let total = records.len();
    let count_true = |f: &dyn Fn(&TrialRecord) -> Option<bool>| {
        let observed: Vec<bool> = records.iter().filter_map(f).collect();
        (observed.iter().filter(|b| **b).count(), observed.len())
    };

    let mut frequencies = BTreeMap::new();
    frequencies.insert(
        "degenerate".to_string(),
        freq_stat(records.iter().filter(|r| r.degenerate).count(), total),
    );
    frequencies.insert(
        "over_budget".to_string(),
        freq_stat(records.iter().filter(|r| r.over_budget).count(), total),
    );
    let (c, t) = count_true(&|r| r.disconnected);
    frequencies.insert("disconnected".to_string(), freq_stat(c, t));
    let (c, t) = count_true(&|r| r.full_skeleton);
    frequencies.insert("full_skeleton".to_string(), freq_stat(c, t));
    let (c, t) = count_true(&|r| r.betti_k.map(|b| b == 0));
    frequencies.insert("betti_k_zero".to_string(), freq_stat(c, t));
    if cfg.mode == Mode::Vanishing {
        let (c, t) = count_true(&|r| r.certificate_fired);
        frequencies.insert("certificate_fired".to_string(), freq_stat(c, t));
        // vanishing frequency is over all trials: undetermined counts as false
        let c = records.iter().filter(|r| r.vanishing == Some(true)).count();
        frequencies.insert("vanishing".to_string(), freq_stat(c, total));
    }
    if cfg.mode == Mode::NonVanishing {
        let (c, t) = count_true(&|r| r.lambda_r_found);
        frequencies.insert("lambda_r_found".to_string(), freq_stat(c, t));
        let (c, t) = count_true(&|r| r.betti_k.map(|b| b >= 1));
        frequencies.insert("betti_k_positive".to_string(), freq_stat(c, t));
    }

    let mut counts = BTreeMap::new();
    let count_stat = |f: &dyn Fn(&TrialRecord) -> Option<f64>| {
        let vals: Vec<f64> = records.iter().filter_map(f).collect();
        CountStat {
            observed: vals.len(),
            mean: if vals.is_empty() { 0.0 } else { vals.iter().sum::<f64>() / vals.len() as f64 },
            max: vals.iter().copied().fold(0.0, f64::max),
        }
    };
    counts.insert("d_k_top".to_string(), count_stat(&|r| r.d_k_top.map(|v| v as f64)));
    counts.insert("b_k".to_string(), count_stat(&|r| r.b_k.map(|v| v as f64)));
    counts.insert("lambda2".to_string(), count_stat(&|r| r.lambda2));
    if cfg.mode == Mode::NonVanishing {
        counts.insert(
            "lambda_r_lower".to_string(),
            count_stat(&|r| r.lambda_r_lower.map(|v| v as f64)),
        );
    }

    let soundness_violations = records
        .iter()
        .filter(|r| r.certificate_fired == Some(true) && matches!(r.betti_k, Some(b) if b != 0))
        .count();
    let witness_violations = records
        .iter()
        .filter(|r| r.lambda_r_found == Some(true) && r.betti_k == Some(0))
        .count();

    ExperimentSummary {
        config: cfg.clone(),
        p,
        frequencies,
        counts,
        soundness_violations,
        witness_violations,
        warnings,
    }
}

/// Vanishing-mode Monte-Carlo run: per trial, build the neighborhood complex
/// of G(n, p) capped at dimension k+1, record skeleton/gap/defect statistics
/// and the general vanishing certificate, and (within budget) exact reduced
/// Betti numbers through dimension k.
pub fn mc_vanishing(cfg: &ExperimentConfig) -> Result<ExperimentRun> {
    if cfg.mode != Mode::Vanishing {
        return Err(Error::invalid("config mode must be vanishing"));
    }
    let (p, warnings) = cfg.resolve()?;
    let records: Vec<TrialRecord> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| vanishing_trial(cfg, p, t))
        .collect();
    let summary = summarize(cfg, p, warnings, &records);
    Ok(ExperimentRun { records, summary })
}

/// Witness-mode Monte-Carlo run with p = n^alpha: per trial, search for a
/// maximal (k+2)-clique with no matched extension and cross-check against
/// the exact reduced Betti number in dimension k when affordable.
pub fn mc_nonvanishing(cfg: &ExperimentConfig) -> Result<ExperimentRun> {
    if cfg.mode != Mode::NonVanishing {
        return Err(Error::invalid("config mode must be nonvanishing"));
    }
    let (p, warnings) = cfg.resolve()?;
    let records: Vec<TrialRecord> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| nonvanishing_trial(cfg, p, t))
        .collect();
    let summary = summarize(cfg, p, warnings, &records);
    Ok(ExperimentRun { records, summary })
}

/// Dispatch on the configured mode.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentRun> {
    match cfg.mode {
        Mode::Vanishing => mc_vanishing(cfg),
        Mode::NonVanishing => mc_nonvanishing(cfg),
    }
}

/// Can the clique on `a` be extended by |a| matched co-neighbors? True iff
/// there are distinct vertices v_1..v_r outside `a` with v_i adjacent to
/// every a_j except possibly a_i. Decided by an augmenting-path matching
/// between clique positions and their candidate sets.
pub fn is_matching_extendable(g: &Graph, a: &[usize]) -> Result<bool> {
    if !g.is_clique(a) {
        return Err(Error::invalid(format!("{a:?} does not induce a clique")));
    }
    let r = a.len();
    let in_a = |v: usize| a.contains(&v);
    // candidates[i]: vertices adjacent to every a_j with j != i
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(r);
    for i in 0..r {
        let others: Vec<usize> = a
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &u)| u)
            .collect();
        let mut common = g.common_neighborhood(&others);
        for &u in a {
            if common.contains(u) {
                common.remove(u);
            }
        }
        let cand: Vec<usize> = common.iter().filter(|&v| !in_a(v)).collect();
        if cand.is_empty() {
            return Ok(false);
        }
        candidates.push(cand);
    }

    // Kuhn's augmenting paths
    let n = g.vertex_count();
    let mut matched_to: Vec<Option<usize>> = vec![None; n];
    fn augment(
        i: usize,
        candidates: &[Vec<usize>],
        matched_to: &mut [Option<usize>],
        visited: &mut BitSet,
    ) -> bool {
        for &v in &candidates[i] {
            if visited.contains(v) {
                continue;
            }
            visited.insert(v);
            if matched_to[v].is_none()
                || augment(matched_to[v].unwrap(), candidates, matched_to, visited)
            {
                matched_to[v] = Some(i);
                return true;
            }
        }
        false
    }
    for i in 0..r {
        let mut visited = BitSet::new(n);
        if !augment(i, &candidates, &mut matched_to, &mut visited) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of the unextendable-clique search.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessSearch {
    pub found: bool,
    pub witness: Option<Vec<usize>>,
    /// Number of witnesses seen; a lower bound unless the search ran to
    /// completion with `count_all`.
    pub count_lower: usize,
    pub budget_exhausted: bool,
    /// Candidate r-cliques visited.
    pub examined: usize,
}

/// Search maximal r-cliques in lexicographic order for one that cannot be
/// extended by matched co-neighbors. Such a clique forces nonvanishing
/// reduced cohomology of the neighborhood complex in dimension r - 2.
pub fn find_unextendable_clique(g: &Graph, r: usize) -> Result<WitnessSearch> {
    find_unextendable_clique_with(g, r, false, DEFAULT_ENUM_BUDGET)
}

pub fn find_unextendable_clique_with(
    g: &Graph,
    r: usize,
    count_all: bool,
    enum_budget: usize,
) -> Result<WitnessSearch> {
    if r < 2 {
        return Err(Error::invalid("witness search needs r >= 2"));
    }
    let mut out = WitnessSearch {
        found: false,
        witness: None,
        count_lower: 0,
        budget_exhausted: false,
        examined: 0,
    };
    let n = g.vertex_count();
    let mut stack: Vec<usize> = Vec::with_capacity(r);

    // depth-first lexicographic enumeration of r-cliques
    fn dfs(
        g: &Graph,
        r: usize,
        start: usize,
        common: &BitSet,
        stack: &mut Vec<usize>,
        out: &mut WitnessSearch,
        count_all: bool,
        enum_budget: usize,
    ) -> bool {
        if stack.len() == r {
            out.examined += 1;
            if out.examined > enum_budget {
                out.budget_exhausted = true;
                return true; // stop
            }
            // maximal iff no vertex is adjacent to the whole clique
            if common.is_empty() {
                let extendable = is_matching_extendable(g, stack).expect("stack is a clique");
                if !extendable {
                    out.count_lower += 1;
                    if !out.found {
                        out.found = true;
                        out.witness = Some(stack.clone());
                    }
                    if !count_all {
                        return true; // stop at the first witness
                    }
                }
            }
            return false;
        }
        for v in start..g.vertex_count() {
            let admissible = stack.is_empty() || common.contains(v);
            if !admissible {
                continue;
            }
            let next_common = if stack.is_empty() {
                g.neighbors(v).clone()
            } else {
                common.and(g.neighbors(v))
            };
            stack.push(v);
            let stop = dfs(g, r, v + 1, &next_common, stack, out, count_all, enum_budget);
            stack.pop();
            if stop {
                return true;
            }
        }
        false
    }

    let empty = BitSet::new(n);
    dfs(g, r, 0, &empty, &mut stack, &mut out, count_all, enum_budget);
    Ok(out)
}
