//! Report rows, summaries and CSV/JSON emission.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use kobayashi_core::lab::{PairMetrics, VerificationRecord};
use kobayashi_core::numeric::{linear_fit, median};
use kobayashi_core::Point;
use serde::Serialize;

/// One verification outcome in report form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub id: String,
    pub domain: String,
    pub m: u32,
    pub x: Vec<[f64; 2]>,
    pub y: Vec<[f64; 2]>,
    pub lhs: f64,
    pub rhs: f64,
    pub constant: f64,
    pub measured_constant: f64,
    pub pass: bool,
    pub skipped: bool,
    pub notes: String,
    pub dist_euclid: f64,
    pub delta_x: f64,
    pub delta_y: f64,
    pub depth: Option<f64>,
    pub l_e: Option<f64>,
    pub k_up: Option<f64>,
    pub k_low_best: Option<f64>,
    pub g_xy: Option<f64>,
    pub c_vis: Option<f64>,
    pub c_gh: Option<f64>,
    pub lambda_cert: Option<f64>,
}

fn coords(p: &Point) -> Vec<[f64; 2]> {
    p.coords().iter().map(|z| [z.re, z.im]).collect()
}

impl Row {
    pub fn from_record(r: &VerificationRecord) -> Self {
        let m = &r.metrics;
        Self {
            id: r.id.clone(),
            domain: r.domain.clone(),
            m: r.m,
            x: coords(&r.x),
            y: coords(&r.y),
            lhs: r.lhs,
            rhs: r.rhs,
            constant: r.constant,
            measured_constant: r.measured_constant,
            pass: r.pass,
            skipped: r.skipped,
            notes: r.notes.clone(),
            dist_euclid: m.dist_euclid,
            delta_x: m.delta_x,
            delta_y: m.delta_y,
            depth: m.depth,
            l_e: m.l_e,
            k_up: m.k_up,
            k_low_best: m.k_low_best,
            g_xy: m.g_xy,
            c_vis: m.c_vis,
            c_gh: m.c_gh,
            lambda_cert: m.lambda_cert,
        }
    }

    /// A row built outside the core verifiers.
    #[allow(clippy::too_many_arguments)]
    pub fn custom(
        id: &str,
        domain: &str,
        m: u32,
        x: &Point,
        y: &Point,
        lhs: f64,
        rhs: f64,
        measured: f64,
        pass: bool,
        metrics: PairMetrics,
    ) -> Self {
        let rec = VerificationRecord {
            id: id.into(),
            domain: domain.into(),
            m,
            x: *x,
            y: *y,
            lhs,
            rhs,
            constant: f64::NAN,
            measured_constant: measured,
            pass,
            skipped: false,
            notes: String::new(),
            metrics,
        };
        Self::from_record(&rec)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantStats {
    pub id: String,
    pub n: usize,
    pub min: f64,
    pub median: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitSummary {
    pub name: String,
    pub slope: f64,
    pub stderr: f64,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub violations: usize,
    pub skipped: usize,
    pub constants: Vec<ConstantStats>,
    pub fits: Vec<FitSummary>,
    pub notes: Vec<String>,
}

/// The subset of row fields the summary depends on; recoverable from CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryInput {
    pub id: String,
    pub measured_constant: f64,
    pub pass: bool,
    pub skipped: bool,
    pub dist_euclid: f64,
    pub depth: Option<f64>,
    pub l_e: Option<f64>,
    pub g_xy: Option<f64>,
}

impl From<&Row> for SummaryInput {
    fn from(r: &Row) -> Self {
        Self {
            id: r.id.clone(),
            measured_constant: r.measured_constant,
            pass: r.pass,
            skipped: r.skipped,
            dist_euclid: r.dist_euclid,
            depth: r.depth,
            l_e: r.l_e,
            g_xy: r.g_xy,
        }
    }
}

/// `(log x, log y)` pairs of the two log-log relations that are plotted and
/// fitted: depth against separation, Euclidean length against g.
pub fn fit_points(rows: &[SummaryInput], which: &str) -> Vec<(f64, f64)> {
    rows.iter()
        .filter(|r| !r.skipped)
        .filter_map(|r| match which {
            "visibility" if r.id == "visibility" => r.depth.map(|d| (r.dist_euclid, d)),
            "gehring_hayman" if r.id == "gehring_hayman" => r.g_xy.zip(r.l_e),
            _ => None,
        })
        .filter(|(a, b)| *a > 0.0 && *b > 0.0)
        .map(|(a, b)| (a.ln(), b.ln()))
        .collect()
}

pub const FITS: [&str; 2] = ["visibility", "gehring_hayman"];

impl Summary {
    pub fn from_rows(rows: &[Row]) -> Self {
        Self::from_inputs(&rows.iter().map(SummaryInput::from).collect::<Vec<_>>())
    }

    pub fn from_inputs(rows: &[SummaryInput]) -> Self {
        let mut by_id: BTreeMap<&str, Vec<f64>> = BTreeMap::new();
        for r in rows.iter().filter(|r| !r.skipped && r.measured_constant.is_finite()) {
            by_id.entry(&r.id).or_default().push(r.measured_constant);
        }
        let constants = by_id
            .into_iter()
            .map(|(id, v)| ConstantStats {
                id: id.into(),
                n: v.len(),
                min: v.iter().copied().fold(f64::INFINITY, f64::min),
                median: median(&v).unwrap_or(f64::NAN),
                max: v.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            })
            .collect();
        let mut fits = Vec::new();
        let mut notes = Vec::new();
        for name in FITS {
            let pts = fit_points(rows, name);
            if pts.is_empty() {
                continue;
            }
            if pts.len() < 3 {
                notes.push(format!("{name}: {} points, fit and plot skipped", pts.len()));
                continue;
            }
            let (xs, ys): (Vec<f64>, Vec<f64>) = pts.into_iter().unzip();
            match linear_fit(&xs, &ys) {
                Some(f) => fits.push(FitSummary { name: name.into(), slope: f.slope, stderr: f.slope_stderr, n: f.n }),
                None => notes.push(format!("{name}: degenerate abscissae, fit skipped")),
            }
        }
        Self {
            rows: rows.len(),
            violations: rows.iter().filter(|r| !r.pass).count(),
            skipped: rows.iter().filter(|r| r.skipped).count(),
            constants,
            fits,
            notes,
        }
    }

    pub fn fit(&self, name: &str) -> Option<&FitSummary> {
        self.fits.iter().find(|f| f.name == name)
    }

    pub fn constant(&self, id: &str) -> Option<&ConstantStats> {
        self.constants.iter().find(|c| c.id == id)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub experiment: String,
    pub seed: u64,
    /// SHA-256 of the canonical JSON form of the configuration.
    pub config_hash: String,
    pub core_version: String,
    pub lab_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportBundle {
    pub rows: Vec<Row>,
    pub summary: Summary,
    pub provenance: Provenance,
}

impl ReportBundle {
    pub fn exit_code(&self) -> i32 {
        if self.summary.violations == 0 {
            0
        } else {
            1
        }
    }
}

/// Labels are free text; keep them to one CSV field.
fn field(s: &str) -> String {
    s.replace([',', '\n', '\r'], ";")
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Number of complex coordinates in the CSV (the widest row).
fn csv_dim(rows: &[Row]) -> usize {
    rows.iter().map(|r| r.x.len().max(r.y.len())).max().unwrap_or(1)
}

pub fn csv_header(dim: usize) -> String {
    let mut cols: Vec<String> = vec!["id".into(), "domain".into(), "m".into()];
    for p in ["x", "y"] {
        for k in 0..dim {
            let name = if k == 0 { p.to_string() } else { format!("{p}{}", k + 1) };
            cols.push(format!("{name}_re"));
            cols.push(format!("{name}_im"));
        }
    }
    for c in [
        "lhs", "rhs", "constant", "measured_constant", "skipped", "dist_euclid", "delta_x", "delta_y", "D", "L_e",
        "k_up", "k_low_best", "g_xy", "c_vis", "C_gh", "lambda_cert", "pass",
    ] {
        cols.push(c.into());
    }
    cols.join(",")
}

/// CSV text: LF line endings, shortest round-trip float formatting, empty
/// fields for absent values.
pub fn csv_string(rows: &[Row]) -> String {
    let dim = csv_dim(rows);
    let mut out = csv_header(dim);
    out.push('\n');
    for r in rows {
        let mut cols: Vec<String> = vec![field(&r.id), field(&r.domain), r.m.to_string()];
        for p in [&r.x, &r.y] {
            for k in 0..dim {
                match p.get(k) {
                    Some(z) => {
                        cols.push(z[0].to_string());
                        cols.push(z[1].to_string());
                    }
                    None => cols.extend([String::new(), String::new()]),
                }
            }
        }
        cols.extend([
            r.lhs.to_string(),
            r.rhs.to_string(),
            r.constant.to_string(),
            r.measured_constant.to_string(),
            r.skipped.to_string(),
            r.dist_euclid.to_string(),
            r.delta_x.to_string(),
            r.delta_y.to_string(),
            opt(r.depth),
            opt(r.l_e),
            opt(r.k_up),
            opt(r.k_low_best),
            opt(r.g_xy),
            opt(r.c_vis),
            opt(r.c_gh),
            opt(r.lambda_cert),
            r.pass.to_string(),
        ]);
        let _ = writeln!(out, "{}", cols.join(","));
    }
    out
}

pub fn emit_csv(bundle: &ReportBundle, path: &Path) -> std::io::Result<()> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(csv_string(&bundle.rows).as_bytes())
}

pub fn emit_json(bundle: &ReportBundle, path: &Path) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(bundle).map_err(std::io::Error::other)?;
    std::fs::write(path, text + "\n")
}

/// Parses an emitted CSV back into summary inputs.
pub fn summary_inputs_from_csv(text: &str) -> Result<Vec<SummaryInput>, String> {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().ok_or("empty CSV")?.split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name).ok_or(format!("missing column {name}"));
    let (id, measured, pass, skipped, dist, depth, le, g) = (
        col("id")?,
        col("measured_constant")?,
        col("pass")?,
        col("skipped")?,
        col("dist_euclid")?,
        col("D")?,
        col("L_e")?,
        col("g_xy")?,
    );
    let num = |s: &str| s.parse::<f64>().map_err(|e| format!("{s:?}: {e}"));
    let opt_num = |s: &str| if s.is_empty() { Ok(None) } else { num(s).map(Some) };
    lines
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            if f.len() != header.len() {
                return Err(format!("row has {} columns, header {}", f.len(), header.len()));
            }
            Ok(SummaryInput {
                id: f[id].into(),
                measured_constant: num(f[measured])?,
                pass: f[pass] == "true",
                skipped: f[skipped] == "true",
                dist_euclid: num(f[dist])?,
                depth: opt_num(f[depth])?,
                l_e: opt_num(f[le])?,
                g_xy: opt_num(f[g])?,
            })
        })
        .collect()
}
