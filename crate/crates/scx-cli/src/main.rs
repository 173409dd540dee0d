//! Command-line interface: complex construction, spectra, Betti numbers,
//! spectral-gap bound reports, and Monte-Carlo experiments.
//!
//! Exit codes: 0 success, 1 input error, 2 budget exhaustion.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use scx::bounds::{
    check_clique_recursion, check_general_bound, check_subcomplex_bound,
    count_boundary_subcomplexes, d_k, s_k, vanishing_certificate_general,
    vanishing_certificate_subcomplex, BoundsReport, VanishingCertificate,
};
use scx::complex::SimplicialComplex;
use scx::error::Error;
use scx::io::{
    read_complex, read_graph, render_face_list, round_sig, trial_csv_row, TRIAL_CSV_HEADER,
};
use scx::lab::{
    run_experiment, ExperimentConfig, ExperimentRun, Mode, PSpec, TrialRecord,
    DEFAULT_BETTI_BUDGET,
};
use scx::spectral::{
    betti_reduced_exact, eigenvalues_sym, spectral_gap, spectral_summary, SpectralSummary,
};
use scx::Result;

const BANNER: &str = concat!("# scx ", env!("CARGO_PKG_VERSION"));

#[derive(Parser)]
#[command(name = "scx", version, about = "Simplicial spectra, exact cohomology, and random neighborhood-complex experiments", disable_help_subcommand = true)]
struct Cli {
    /// Suppress the version banner on stdout.
    #[arg(long, global = true)]
    no_banner: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    Json,
    Csv,
    #[default]
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Vanishing,
    Nonvanishing,
}

#[derive(Subcommand)]
enum Command {
    /// Build the clique complex of a graph and print its face list.
    Build {
        /// Edge-list file ("n m" header, then "u v" lines).
        #[arg(long)]
        graph: PathBuf,
        /// Highest face dimension to build.
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the neighborhood complex of a graph and print its face list.
    Nbhd {
        #[arg(long)]
        graph: PathBuf,
        /// Cap the face dimension (default: unbounded).
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spectrum of the reduced k-Laplacian (and, for graphs, of the graph
    /// Laplacian).
    Spectrum {
        /// Edge-list input: reports the graph Laplacian spectrum plus the
        /// reduced k-Laplacian of the clique complex (capped at k+1).
        #[arg(long, conflicts_with = "complex")]
        graph: Option<PathBuf>,
        /// Face-list input: reports the reduced k-Laplacian summary.
        #[arg(long)]
        complex: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exact reduced Betti number over the rationals.
    Betti {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        k: usize,
        /// Entry-op budget for the exact computation (overrides SCX_BUDGET).
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Evaluate the spectral-gap inequalities and vanishing certificates.
    Bounds {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        k: usize,
        /// Face-list of a subcomplex to compare against.
        #[arg(long)]
        subcomplex: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Monte-Carlo experiments on neighborhood complexes of G(n, p).
    Mc {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Explicit edge probability.
        #[arg(long, conflicts_with_all = ["c", "alpha"])]
        p: Option<f64>,
        /// Threshold-window offset: p = (((k+1) ln n + c)/n)^(1/(k+2)).
        #[arg(long, conflicts_with = "alpha", allow_hyphen_values = true)]
        c: Option<f64>,
        /// Power law: p = n^alpha.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
        #[arg(long)]
        trials: usize,
        /// Required: all randomness is explicitly seeded.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Exact-Betti entry-op budget (overrides SCX_BUDGET).
        #[arg(long)]
        budget: Option<u64>,
        /// Count all witnesses instead of stopping at the first.
        #[arg(long)]
        full_count: bool,
        /// Populate per-trial wall times (breaks byte-identical reruns).
        #[arg(long)]
        timings: bool,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests print and succeed; usage mistakes are
            // input errors
            let kind = e.kind();
            use clap::error::ErrorKind::*;
            if matches!(kind, DisplayHelp | DisplayVersion) {
                let _ = e.print();
                std::process::exit(0);
            }
            let _ = e.print();
            std::process::exit(1);
        }
    };
    if let Err(err) = run(&cli) {
        eprintln!("error: {err}");
        let code = match err {
            Error::BudgetExceeded { .. } => 2,
            _ => 1,
        };
        std::process::exit(code);
    }
}

fn banner(cli: &Cli, format: Format) {
    if !cli.no_banner && format != Format::Json {
        println!("{BANNER}");
    }
}

fn warn_complex(x: &SimplicialComplex) {
    if x.is_empty() {
        eprintln!("warning: complex is empty (degenerate)");
    } else if !x.is_connected() {
        eprintln!("warning: 1-skeleton is disconnected");
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn budget_from(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("SCX_BUDGET") {
        Ok(raw) => raw
            .parse()
            .map_err(|_| Error::invalid(format!("SCX_BUDGET must be an integer, got {raw:?}"))),
        Err(_) => Ok(DEFAULT_BETTI_BUDGET),
    }
}

fn fmt6(x: f64) -> String {
    let r = round_sig(x, 6);
    if r != 0.0 && (r.abs() < 1e-4 || r.abs() >= 1e9) {
        format!("{r:e}")
    } else {
        r.to_string()
    }
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Build { graph, max_dim, out } => {
            let g = read_graph(graph)?;
            let x = SimplicialComplex::clique_complex(&g, *max_dim)?;
            warn_complex(&x);
            emit(out, &render_face_list(&x))
        }
        Command::Nbhd { graph, max_dim, out } => {
            let g = read_graph(graph)?;
            let x = SimplicialComplex::neighborhood_complex(&g, *max_dim);
            warn_complex(&x);
            emit(out, &render_face_list(&x))
        }
        Command::Spectrum { graph, complex, k, format } => {
            banner(cli, *format);
            run_spectrum(graph.as_deref(), complex.as_deref(), *k, *format)
        }
        Command::Betti { complex, k, budget, format } => {
            banner(cli, *format);
            run_betti(complex, *k, budget_from(*budget)?, *format)
        }
        Command::Bounds { complex, k, subcomplex, format } => {
            banner(cli, *format);
            run_bounds(complex, *k, subcomplex.as_deref(), *format)
        }
        Command::Mc {
            mode,
            n,
            k,
            p,
            c,
            alpha,
            trials,
            seed,
            format,
            budget,
            full_count,
            timings,
        } => {
            let seed = seed.ok_or_else(|| {
                Error::invalid("--seed is required: all randomness is explicitly seeded")
            })?;
            let p_spec = match (p, c, alpha) {
                (Some(p), None, None) => PSpec::Explicit(*p),
                (None, Some(c), None) => PSpec::Threshold(*c),
                (None, None, Some(a)) => PSpec::Power(*a),
                _ => {
                    return Err(Error::invalid(
                        "exactly one of --p, --c, --alpha must be given",
                    ))
                }
            };
            let mode = match mode {
                ModeArg::Vanishing => Mode::Vanishing,
                ModeArg::Nonvanishing => Mode::NonVanishing,
            };
            let mut cfg = ExperimentConfig::new(*n, *k, p_spec, *trials, seed, mode);
            cfg.betti_budget = budget_from(*budget)?;
            cfg.full_count = *full_count;
            banner(cli, *format);
            run_mc(&cfg, *format, *timings)
        }
    }
}

#[derive(Serialize)]
struct GraphSpectrumOut {
    lambda_2: f64,
    laplacian_eigenvalues: Vec<f64>,
    delta: SpectralSummary,
}

fn run_spectrum(
    graph: Option<&std::path::Path>,
    complex: Option<&std::path::Path>,
    k: usize,
    format: Format,
) -> Result<()> {
    match (graph, complex) {
        (Some(path), None) => {
            let g = read_graph(path)?;
            let lap = g.laplacian::<f64>();
            let laplacian_eigenvalues = eigenvalues_sym(&lap)?;
            let lambda_2 = spectral_gap(&g)?;
            let x = SimplicialComplex::clique_complex(&g, k.max(1) + 1)?;
            let delta = spectral_summary(&x, k, None)?;
            if delta.eigenvalues.is_empty() {
                eprintln!("warning: no {k}-dimensional faces; empty spectrum");
            }
            let out = GraphSpectrumOut { lambda_2, laplacian_eigenvalues, delta };
            match format {
                Format::Json | Format::Csv => println!("{}", serde_json::to_string(&out).expect("serializable")),
                Format::Table => {
                    println!("lambda_2: {}", fmt6(out.lambda_2));
                    let evs: Vec<String> =
                        out.laplacian_eigenvalues.iter().map(|e| fmt6(*e)).collect();
                    println!("graph laplacian spectrum: [{}]", evs.join(", "));
                    print_summary_table(&out.delta);
                }
            }
        }
        (None, Some(path)) => {
            let x = read_complex(path)?;
            warn_complex(&x);
            let summary = spectral_summary(&x, k, None)?;
            if summary.eigenvalues.is_empty() {
                eprintln!("warning: no {k}-dimensional faces; empty spectrum");
            }
            match format {
                Format::Json | Format::Csv => println!("{}", serde_json::to_string(&summary).expect("serializable")),
                Format::Table => print_summary_table(&summary),
            }
        }
        _ => return Err(Error::invalid("give exactly one of --graph or --complex")),
    }
    Ok(())
}

fn print_summary_table(s: &SpectralSummary) {
    let evs: Vec<String> = s.eigenvalues.iter().map(|e| fmt6(*e)).collect();
    println!("k: {}", s.k);
    println!("eigenvalues: [{}]", evs.join(", "));
    match s.mu_k {
        Some(mu) => println!("mu_k: {}", fmt6(mu)),
        None => println!("mu_k: undefined (no faces)"),
    }
    println!("zero_count: {}", s.zero_count);
    println!("tolerance: {:e}", s.tolerance);
}

fn betti_cost(x: &SimplicialComplex, k: usize) -> u64 {
    (0..=k)
        .map(|i| x.num_faces(i) as u64 * x.num_faces(i + 1) as u64)
        .max()
        .unwrap_or(0)
}

fn run_betti(path: &std::path::Path, k: usize, budget: u64, format: Format) -> Result<()> {
    let x = read_complex(path)?;
    warn_complex(&x);
    let needed = betti_cost(&x, k);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let betti = betti_reduced_exact(&x, k);
    match format {
        Format::Json => println!("{}", serde_json::json!({ "k": k, "betti": betti })),
        _ => println!("{betti}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct BoundsOut {
    k: usize,
    quantities: BTreeMap<String, f64>,
    reports: Vec<BoundsReport>,
    certificates: Vec<VanishingCertificate>,
    not_applicable: Vec<String>,
}

fn run_bounds(
    path: &std::path::Path,
    k: usize,
    subcomplex: Option<&std::path::Path>,
    format: Format,
) -> Result<()> {
    let x = read_complex(path)?;
    warn_complex(&x);
    let mut out = BoundsOut {
        k,
        quantities: BTreeMap::new(),
        reports: Vec::new(),
        certificates: Vec::new(),
        not_applicable: Vec::new(),
    };
    if k >= 1 {
        for j in 1..=k + 1 {
            out.quantities
                .insert(format!("d_k_j{j}"), d_k(&x, k, j)? as f64);
        }
        out.quantities
            .insert("b_k".into(), count_boundary_subcomplexes(&x, k)? as f64);
    }

    let push = |res: std::result::Result<BoundsReport, Error>, out: &mut BoundsOut| match res {
        Ok(rep) => out.reports.push(rep),
        Err(Error::NotApplicable { check, reason }) => {
            out.not_applicable.push(format!("{check}: {reason}"))
        }
        Err(Error::NotCliqueComplex(d)) => out
            .not_applicable
            .push(format!("clique_recursion: not a clique complex through dimension {d}")),
        Err(e) => out.not_applicable.push(e.to_string()),
    };
    push(check_general_bound(&x, k), &mut out);
    push(check_clique_recursion(&x, k), &mut out);
    match vanishing_certificate_general(&x, k) {
        Ok(cert) => out.certificates.push(cert),
        Err(e) => out.not_applicable.push(format!("certificate_general: {e}")),
    }

    if let Some(sub_path) = subcomplex {
        let sub = read_complex(sub_path)?;
        sub.verify_subcomplex_of(&x)?;
        out.quantities.insert("s_k".into(), s_k(&x, &sub, k)? as f64);
        push(check_subcomplex_bound(&x, &sub, k), &mut out);
        match vanishing_certificate_subcomplex(&x, &sub, k) {
            Ok(cert) => out.certificates.push(cert),
            Err(e) => out
                .not_applicable
                .push(format!("certificate_subcomplex: {e}")),
        }
    }

    match format {
        Format::Json | Format::Csv => println!("{}", serde_json::to_string(&out).expect("serializable")),
        Format::Table => {
            println!("k = {}", out.k);
            for (name, v) in &out.quantities {
                println!("{name} = {}", fmt6(*v));
            }
            if !out.reports.is_empty() {
                println!("{:<18} {:>14} {:>14} {:>14}  holds", "check", "lhs", "rhs", "residual");
                for r in &out.reports {
                    println!(
                        "{:<18} {:>14} {:>14} {:>14}  {}",
                        r.check,
                        fmt6(r.lhs),
                        fmt6(r.rhs),
                        fmt6(r.residual),
                        r.holds
                    );
                }
            }
            for c in &out.certificates {
                println!(
                    "certificate k={}: lambda_2 = {} vs threshold {} -> fired = {}",
                    c.k,
                    fmt6(c.lambda_2),
                    fmt6(c.threshold),
                    c.condition_holds
                );
            }
            for note in &out.not_applicable {
                println!("n/a: {note}");
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct McJsonOut<'a> {
    summary: &'a scx::lab::ExperimentSummary,
    trials: Vec<TrialRecord>,
}

fn run_mc(cfg: &ExperimentConfig, format: Format, timings: bool) -> Result<()> {
    let run: ExperimentRun = run_experiment(cfg)?;
    for w in &run.summary.warnings {
        eprintln!("warning: {w}");
    }
    let sanitized: Vec<TrialRecord> = run
        .records
        .iter()
        .map(|r| {
            let mut r = r.clone();
            if !timings {
                r.runtime_ms = 0;
            }
            r
        })
        .collect();
    match format {
        Format::Csv => {
            println!("{TRIAL_CSV_HEADER}");
            for rec in &run.records {
                println!("{}", trial_csv_row(rec, cfg, run.summary.p, timings));
            }
            println!("# summary: {}", serde_json::to_string(&run.summary).expect("serializable"));
        }
        Format::Json => {
            let out = McJsonOut { summary: &run.summary, trials: sanitized };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Table => {
            let s = &run.summary;
            println!("mode: {:?}   n = {}   k = {}   p = {}   trials = {}   seed = {}",
                cfg.mode, cfg.n, cfg.k, fmt6(s.p), cfg.trials, cfg.seed);
            println!("{:<20} {:>6} {:>6} {:>10} {:>22}", "statistic", "count", "total", "freq", "wilson 95%");
            for (name, f) in &s.frequencies {
                println!(
                    "{:<20} {:>6} {:>6} {:>10} [{}, {}]",
                    name,
                    f.count,
                    f.total,
                    fmt6(f.frequency),
                    fmt6(f.wilson_low),
                    fmt6(f.wilson_high)
                );
            }
            for (name, c) in &s.counts {
                println!("{name}: mean = {}, max = {} (over {} trials)", fmt6(c.mean), fmt6(c.max), c.observed);
            }
            println!("soundness_violations: {}", s.soundness_violations);
            println!("witness_violations: {}", s.witness_violations);
        }
    }
    Ok(())
}
