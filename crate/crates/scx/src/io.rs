//! Text formats: edge lists, face lists, and the per-trial CSV schema.

use std::path::Path;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lab::{ExperimentConfig, TrialRecord};
use crate::simplex::Simplex;

/// Edge-list format: first line `n m`, then `m` lines `u v` (0-based).
/// Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "missing 'n m' header".into() })?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), line_no, "vertex count")?;
    let m: usize = parse_field(parts.next(), line_no, "edge count")?;
    if parts.next().is_some() {
        return Err(Error::Parse { line: line_no, msg: "header must be exactly 'n m'".into() });
    }
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("expected {m} edge lines, found {}", pairs.len()),
            })?;
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(parts.next(), line_no, "edge endpoint")?;
        let v: usize = parse_field(parts.next(), line_no, "edge endpoint")?;
        if parts.next().is_some() {
            return Err(Error::Parse { line: line_no, msg: "edge line must be 'u v'".into() });
        }
        pairs.push((u, v));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse { line: line_no, msg: "content after the declared edges".into() });
    }
    Graph::from_edge_list(n, &pairs)
}

fn parse_field<T: std::str::FromStr>(
    field: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T> {
    let raw = field.ok_or_else(|| Error::Parse { line, msg: format!("missing {what}") })?;
    raw.parse().map_err(|_| Error::Parse { line, msg: format!("bad {what}: {raw:?}") })
}

pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Face-list format: one face per line as space-separated vertex ids, in any
/// order; the downward closure is taken on load. The ambient vertex count is
/// the largest id plus one.
pub fn parse_face_list(text: &str) -> Result<SimplicialComplex> {
    let mut faces = Vec::new();
    let mut ambient = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let line_no = i + 1;
        let mut verts = Vec::new();
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("bad vertex id: {tok:?}"),
            })?;
            ambient = ambient.max(v + 1);
            verts.push(v);
        }
        let face = Simplex::from_unsorted(verts).map_err(|e| Error::Parse {
            line: line_no,
            msg: e.to_string(),
        })?;
        faces.push(face);
    }
    SimplicialComplex::from_faces(ambient, faces)
}

/// Render the maximal faces, one per line, ascending ids; reloading and
/// closing reproduces the complex exactly.
pub fn render_face_list(x: &SimplicialComplex) -> String {
    let mut out = String::new();
    for face in x.maximal_faces() {
        let words: Vec<String> = face.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    parse_face_list(&std::fs::read_to_string(path)?)
}

/// Header of the per-trial CSV schema.
pub const TRIAL_CSV_HEADER: &str =
    "trial,seed,n,p,k,full_skeleton,lambda2,d_k,b_k,certificate,betti_k,lambda_r,runtime_ms";

fn opt_bool(b: Option<bool>) -> String {
    b.map(|v| v.to_string()).unwrap_or_default()
}

fn opt_num<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// One CSV row. `with_timings` controls whether the volatile wall-time field
/// is populated; leaving it empty keeps reruns byte-identical.
pub fn trial_csv_row(rec: &TrialRecord, cfg: &ExperimentConfig, p: f64, with_timings: bool) -> String {
    let runtime = if with_timings { rec.runtime_ms.to_string() } else { String::new() };
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{}",
        rec.trial,
        rec.seed,
        cfg.n,
        p,
        cfg.k,
        opt_bool(rec.full_skeleton),
        opt_num(rec.lambda2),
        opt_num(rec.d_k_top),
        opt_num(rec.b_k),
        opt_bool(rec.certificate_fired),
        opt_num(rec.betti_k),
        opt_bool(rec.lambda_r_found),
        runtime,
    )
}

/// Round to `digits` significant digits (table rendering; JSON keeps full
/// precision).
pub fn round_sig(x: f64, digits: i32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(digits - 1 - magnitude);
    (x * factor).round() / factor
}
