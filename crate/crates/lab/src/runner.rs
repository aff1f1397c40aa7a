//! Runs an experiment configuration into a report bundle.

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use kobayashi_core::geodesic::{GeodesicResult, GeodesicSolver};
use kobayashi_core::lab::{
    measure_lower_constants, shell_decompose, verify_gehring_hayman, verify_lower_bounds, verify_shells,
    verify_visibility, KReference, PairMetrics, VerificationRecord, VerifyParams,
};
use kobayashi_core::metric::{exact_distance, BoundParams};
use kobayashi_core::{Direction, DomainModel, GoldilocksProfile, Point};

use crate::config::{ConfigError, ExperimentConfig, ExperimentKind, ReferenceDesc, Resolved};
use crate::report::{Provenance, ReportBundle, Row, Summary};

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("computation failed on pair {index}: {source}")]
    Compute { index: usize, source: kobayashi_core::Error },
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl RunError {
    /// Exit code of the CLI contract. Anything that prevents a verdict is
    /// reported like a usage error.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Parallelism cap from `KOBAYASHI_LAB_THREADS` (unset or invalid: rayon's
/// default).
pub fn thread_pool() -> rayon::ThreadPool {
    let n = std::env::var("KOBAYASHI_LAB_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).unwrap_or(0);
    rayon::ThreadPoolBuilder::new().num_threads(n).build().expect("thread pool")
}

/// SHA-256 of the canonical JSON of the configuration. Output settings are
/// left out: they do not change the rows.
pub fn config_hash(config: &ExperimentConfig) -> String {
    let mut c = config.clone();
    c.output = Default::default();
    let canonical = serde_json::to_string(&c).expect("config serializes");
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

struct Ctx<'a> {
    kind: ExperimentKind,
    r: &'a Resolved,
    solver: Option<GeodesicSolver>,
    bounds: BoundParams,
    verify: VerifyParams,
    reference: ReferenceDesc,
}

fn rows_of(recs: impl IntoIterator<Item = VerificationRecord>) -> Vec<Row> {
    recs.into_iter().map(|r| Row::from_record(&r)).collect()
}

fn base_metrics(domain: &DomainModel, x: &Point, y: &Point) -> kobayashi_core::Result<PairMetrics> {
    Ok(PairMetrics {
        dist_euclid: x.dist(y),
        delta_x: domain.boundary_distance(x)?,
        delta_y: domain.boundary_distance(y)?,
        ..PairMetrics::default()
    })
}

impl Ctx<'_> {
    fn profile(&self) -> &GoldilocksProfile {
        self.r.profile.as_ref().expect("profile checked at resolve time")
    }

    fn solve(&self, x: &Point, y: &Point) -> kobayashi_core::Result<GeodesicResult> {
        self.solver.as_ref().expect("solver built for this experiment").solve(x, y)
    }

    fn geodesic_row(&self, g: &GeodesicResult) -> kobayashi_core::Result<Row> {
        let domain = &self.r.domain;
        let (x, y) = (g.curve.start(), g.curve.end());
        let mut m = base_metrics(domain, &x, &y)?;
        m.depth = Some(kobayashi_core::geodesic::penetration_depth(&g.curve, domain)?.depth);
        m.l_e = Some(g.curve.euclid_length());
        m.k_up = Some(g.upper_length);
        m.k_low_best = Some(g.lower_distance);
        m.lambda_cert = Some(g.lambda_cert);
        let pass = g.lower_distance <= g.upper_length + 1e-6 && g.lambda_cert >= 1.0 - 1e-6;
        Ok(Row::custom(
            "geodesic",
            domain.label(),
            domain.exponent(),
            &x,
            &y,
            g.lower_distance,
            g.upper_length,
            g.lambda_cert,
            pass,
            m,
        ))
    }

    fn metric_rows(&self, z: &Point, w: &Point) -> kobayashi_core::Result<Vec<Row>> {
        let field = &self.r.field;
        let domain = &self.r.domain;
        if z == w {
            return Ok(Vec::new());
        }
        let v = Direction::new(*w - *z)?;
        let dv = domain.directional_boundary_distance(z, &v)?;
        let est = field.kappa_bounds(z, &v)?;
        let m = base_metrics(domain, z, w)?;
        let (label, exp) = (domain.label(), domain.exponent());
        if field.is_exact() {
            let k = est.upper;
            Ok(vec![
                Row::custom("kappa_sandwich_lower", label, exp, z, w, 0.5 / dv, k, k * dv, 0.5 / dv <= k, m),
                Row::custom("kappa_sandwich_upper", label, exp, z, w, k, 1.0 / dv, k * dv, k <= 1.0 / dv + 1e-9, m),
            ])
        } else {
            let ok = est.lower <= est.upper;
            Ok(vec![Row::custom("kappa_bounds", label, exp, z, w, est.lower, est.upper, est.upper * dv, ok, m)])
        }
    }

    fn rows_for(&self, x: &Point, y: &Point) -> kobayashi_core::Result<Vec<Row>> {
        let domain = &self.r.domain;
        Ok(match self.kind {
            ExperimentKind::MetricEval => self.metric_rows(x, y)?,
            ExperimentKind::Geodesic => vec![self.geodesic_row(&self.solve(x, y)?)?],
            ExperimentKind::Visibility => {
                let g = self.solve(x, y)?;
                rows_of(verify_visibility(&g, domain, self.profile(), &self.verify)?)
            }
            ExperimentKind::GehringHayman => {
                let g = self.solve(x, y)?;
                rows_of(verify_gehring_hayman(&g, domain, self.profile(), &self.verify)?.into_iter().flatten())
            }
            ExperimentKind::Sweep => {
                let g = self.solve(x, y)?;
                let mut rows = vec![self.geodesic_row(&g)?];
                rows.extend(rows_of(verify_visibility(&g, domain, self.profile(), &self.verify)?));
                rows.extend(rows_of(verify_gehring_hayman(&g, domain, self.profile(), &self.verify)?.into_iter().flatten()));
                rows
            }
            ExperimentKind::Shells => {
                let g = self.solve(x, y)?;
                if g.curve.is_degenerate() {
                    return Ok(Vec::new());
                }
                let decomp = shell_decompose(&g.curve, domain)?;
                let check = decomp.check(domain, 10)?;
                let mut m = base_metrics(domain, x, y)?;
                m.depth = Some(decomp.depth);
                m.l_e = Some(decomp.length);
                let (label, exp) = (domain.label(), domain.exponent());
                let mut rows = vec![
                    Row::custom(
                        "shell_invariants",
                        label,
                        exp,
                        x,
                        y,
                        1.0 + check.worst_excess,
                        1.0 + 1e-9,
                        check.worst_excess,
                        check.worst_excess <= 1e-9,
                        m,
                    ),
                    Row::custom(
                        "shell_concat",
                        label,
                        exp,
                        x,
                        y,
                        check.concat_error,
                        1e-9,
                        check.concat_error,
                        check.concat_error <= 1e-9,
                        m,
                    ),
                ];
                rows.extend(rows_of(verify_shells(&decomp, domain, self.profile(), &self.verify)?));
                rows
            }
            ExperimentKind::LowerBounds => {
                let pair = [(*x, *y)];
                let reference = match self.reference_value(x, y)? {
                    None => KReference::Oracle,
                    Some(k) => KReference::Upper(vec![k]),
                };
                rows_of(verify_lower_bounds(&self.r.field, &pair, &reference, &self.bounds)?)
            }
        })
    }

    /// `None` for the oracle, otherwise a solver upper length.
    fn reference_value(&self, x: &Point, y: &Point) -> kobayashi_core::Result<Option<f64>> {
        let exact = self.r.field.is_exact();
        match self.reference {
            ReferenceDesc::Oracle => Ok(None),
            ReferenceDesc::Auto if exact => Ok(None),
            _ => Ok(Some(self.solve(x, y)?.upper_length)),
        }
    }

    fn needs_solver(&self) -> bool {
        match self.kind {
            ExperimentKind::MetricEval => false,
            ExperimentKind::LowerBounds => {
                self.reference == ReferenceDesc::CurveUpper || (self.reference == ReferenceDesc::Auto && !self.r.field.is_exact())
            }
            _ => true,
        }
    }
}

/// Computes all rows. Rows of each pair are produced in parallel and
/// concatenated in pair order, then stably sorted by id.
pub fn run(config: &ExperimentConfig) -> Result<ReportBundle, RunError> {
    let resolved = config.resolve()?;
    let mut ctx = Ctx {
        kind: config.experiment,
        r: &resolved,
        solver: None,
        bounds: config.bounds.into(),
        verify: config.verify.params(),
        reference: config.reference,
    };
    if ctx.needs_solver() {
        let solver = GeodesicSolver::new(resolved.field.clone(), resolved.solver.clone())
            .map_err(|source| RunError::Compute { index: 0, source })?;
        ctx.solver = Some(solver);
    }
    let pool = thread_pool();
    let per_pair: Vec<Result<Vec<Row>, RunError>> = pool.install(|| {
        resolved
            .pairs
            .par_iter()
            .enumerate()
            .map(|(index, (x, y))| ctx.rows_for(x, y).map_err(|source| RunError::Compute { index, source }))
            .collect()
    });
    let mut rows = Vec::new();
    for r in per_pair {
        rows.extend(r?);
    }
    if let (ExperimentKind::LowerBounds, Some(c_max)) = (config.experiment, config.measure_constants) {
        rows.extend(measured_constant_rows(&ctx, c_max)?);
    }
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    let summary = Summary::from_rows(&rows);
    Ok(ReportBundle {
        rows,
        summary,
        provenance: Provenance {
            experiment: config.experiment.name().into(),
            seed: config.seed,
            config_hash: config_hash(config),
            core_version: kobayashi_core_version(),
            lab_version: env!("CARGO_PKG_VERSION").into(),
        },
    })
}

fn kobayashi_core_version() -> String {
    // both crates are versioned together in this workspace
    env!("CARGO_PKG_VERSION").into()
}

/// Report-only rows with the largest passing constant of each bound.
fn measured_constant_rows(ctx: &Ctx, c_max: f64) -> Result<Vec<Row>, RunError> {
    let r = ctx.r;
    let pairs: Vec<(Point, Point)> = r.pairs.iter().filter(|(x, y)| x.dist(y) >= 1e-9).copied().collect();
    let reference: Vec<f64> = pairs
        .iter()
        .enumerate()
        .map(|(index, (x, y))| match ctx.reference_value(x, y) {
            Ok(Some(k)) => Ok(k),
            Ok(None) => Ok(exact_distance(&r.field, x, y).unwrap_or(f64::NAN)),
            Err(source) => Err(RunError::Compute { index, source }),
        })
        .collect::<Result<_, _>>()?;
    let found =
        measure_lower_constants(&r.field, &pairs, &reference, c_max).map_err(|source| RunError::Compute { index: 0, source })?;
    let Some((x, y)) = pairs.first() else { return Ok(Vec::new()) };
    let m = base_metrics(&r.domain, x, y).map_err(|source| RunError::Compute { index: 0, source })?;
    Ok(found
        .into_iter()
        .map(|(name, c)| {
            let mut row = Row::custom(&format!("max_c_{name}"), r.domain.label(), r.domain.exponent(), x, y, c, c_max, c, true, m);
            row.skipped = true;
            row.notes = format!("largest passing constant over {} pairs", pairs.len());
            row
        })
        .collect())
}

/// Writes `<stem>.json`, `<stem>.csv` and the SVG plots into `dir`.
pub fn write_outputs(bundle: &ReportBundle, dir: &std::path::Path, stem: &str, plots: bool) -> Result<Vec<std::path::PathBuf>, RunError> {
    std::fs::create_dir_all(dir)?;
    let json = dir.join(format!("{stem}.json"));
    let csv = dir.join(format!("{stem}.csv"));
    crate::report::emit_json(bundle, &json)?;
    crate::report::emit_csv(bundle, &csv)?;
    let mut out = vec![json, csv];
    if plots {
        out.extend(crate::plots::emit_plots(bundle, dir, stem)?);
    }
    Ok(out)
}
