//! JSON experiment configuration.

use std::path::{Path, PathBuf};

use kobayashi_core::geodesic::SolverConfig;
use kobayashi_core::goldilocks::calibrate_omega;
use kobayashi_core::lab::VerifyParams;
use kobayashi_core::metric::BoundParams;
use kobayashi_core::{DomainModel, Estimator, Face, GoldilocksProfile, MetricField, OmegaSpec, PairRule, Point, Separation};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Errors that make a configuration unusable (exit code 2).
#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("invalid config: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid config: {0}")]
    Invalid(String),
    #[error("invalid config: {0}")]
    Model(#[from] kobayashi_core::Error),
}

fn invalid(msg: impl Into<String>) -> ConfigError {
    ConfigError::Invalid(msg.into())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DomainDesc {
    Disc,
    Ball { n: usize },
    Ellipsoid { m: u32 },
    Cube { n: usize, s: f64 },
    /// Faces `Re⟨z, a⟩ < b`; normals are lists of `[re, im]` pairs.
    Halfspaces { faces: Vec<FaceDesc> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceDesc {
    pub normal: Vec<[f64; 2]>,
    pub offset: f64,
}

impl DomainDesc {
    pub fn build(&self) -> Result<DomainModel, ConfigError> {
        Ok(match self {
            DomainDesc::Disc => DomainModel::unit_disc(),
            DomainDesc::Ball { n } => DomainModel::unit_ball(*n)?,
            DomainDesc::Ellipsoid { m } => DomainModel::ellipsoid(*m)?,
            DomainDesc::Cube { n, s } => DomainModel::cube(*n, *s)?,
            DomainDesc::Halfspaces { faces } => {
                let faces = faces
                    .iter()
                    .map(|f| Ok(Face { normal: point(&f.normal)?, offset: f.offset }))
                    .collect::<Result<Vec<_>, ConfigError>>()?;
                DomainModel::halfspaces(&faces)?
            }
        })
    }
}

pub fn point(coords: &[[f64; 2]]) -> Result<Point, ConfigError> {
    let cs: Vec<Complex64> = coords.iter().map(|c| Complex64::new(c[0], c[1])).collect();
    Ok(Point::new(&cs)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ProfileDesc {
    /// `ω(t) = c·t^a`.
    Power {
        c: f64,
        a: f64,
        #[serde(default = "one")]
        c_metric: f64,
    },
    /// Samples of ω, inline or from a two-column whitespace/comma file
    /// (path relative to the config file).
    Tabulated {
        #[serde(default)]
        t: Vec<f64>,
        #[serde(default)]
        w: Vec<f64>,
        #[serde(default)]
        path: Option<PathBuf>,
        #[serde(default = "one")]
        c_metric: f64,
    },
    /// Power law fitted to the domain's directional boundary distances.
    Calibrated {
        #[serde(default = "default_samples")]
        samples: usize,
        bands: Vec<[f64; 2]>,
        #[serde(default = "one")]
        c_metric: f64,
    },
}

fn one() -> f64 {
    1.0
}

fn default_samples() -> usize {
    200
}

fn read_table(path: &Path) -> Result<(Vec<f64>, Vec<f64>), ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read { path: path.into(), source })?;
    let mut t = Vec::new();
    let mut w = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let cols: Vec<&str> = line.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
        let [a, b] = cols.as_slice() else { return Err(invalid(format!("table line {line:?} needs two columns"))) };
        t.push(a.parse().map_err(|_| invalid(format!("bad number {a:?}")))?);
        w.push(b.parse().map_err(|_| invalid(format!("bad number {b:?}")))?);
    }
    Ok((t, w))
}

impl ProfileDesc {
    pub fn build(&self, domain: &DomainModel, base: &Path, seed: u64) -> Result<GoldilocksProfile, ConfigError> {
        let spec = match self {
            ProfileDesc::Power { c, a, c_metric } => OmegaSpec::power(*c, *a, *c_metric)?,
            ProfileDesc::Tabulated { t, w, path, c_metric } => {
                let (t, w) = match path {
                    Some(p) => read_table(&base.join(p))?,
                    None => (t.clone(), w.clone()),
                };
                OmegaSpec::tabulated(t, w, *c_metric)?
            }
            ProfileDesc::Calibrated { samples, bands, c_metric } => {
                let bands: Vec<(f64, f64)> = bands.iter().map(|b| (b[0], b[1])).collect();
                let mut spec = calibrate_omega(domain, *samples, &bands, seed)?.spec;
                spec.c_metric = *c_metric;
                spec
            }
        };
        Ok(GoldilocksProfile::new(spec)?.with_domain_link(domain.label()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EstimatorDesc {
    ExactDisc,
    ExactBall,
    ConvexSandwich,
    SgLower,
}

impl From<EstimatorDesc> for Estimator {
    fn from(e: EstimatorDesc) -> Self {
        match e {
            EstimatorDesc::ExactDisc => Estimator::ExactDisc,
            EstimatorDesc::ExactBall => Estimator::ExactBall,
            EstimatorDesc::ConvexSandwich => Estimator::ConvexSandwich,
            EstimatorDesc::SgLower => Estimator::SgLowerConvexUpper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    MetricEval,
    Geodesic,
    Visibility,
    GehringHayman,
    LowerBounds,
    Shells,
    Sweep,
}

impl ExperimentKind {
    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::MetricEval => "metric-eval",
            ExperimentKind::Geodesic => "geodesic",
            ExperimentKind::Visibility => "visibility",
            ExperimentKind::GehringHayman => "gehring-hayman",
            ExperimentKind::LowerBounds => "lower-bounds",
            ExperimentKind::Shells => "shells",
            ExperimentKind::Sweep => "sweep",
        }
    }

    pub fn needs_profile(self) -> bool {
        matches!(
            self,
            ExperimentKind::Visibility | ExperimentKind::GehringHayman | ExperimentKind::Shells | ExperimentKind::Sweep
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SeparationDesc {
    Independent,
    Within { max: f64 },
    Apart { min: f64 },
}

/// Where the point pairs come from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PairsDesc {
    /// Seeded pairs with both boundary distances in `band`.
    Random {
        count: usize,
        band: [f64; 2],
        #[serde(default = "independent")]
        separation: SeparationDesc,
    },
    /// `x = r·e^{iθ}`, `y = r·e^{−iθ}` in coordinate `axis` (others zero),
    /// for `count` angles in `theta`.
    Boundary {
        radius: f64,
        theta: [f64; 2],
        count: usize,
        #[serde(default)]
        axis: usize,
        #[serde(default)]
        spacing: Spacing,
    },
    /// Explicit pairs of points, each a list of `[re, im]`.
    Explicit { pairs: Vec<[Vec<[f64; 2]>; 2]> },
}

fn independent() -> SeparationDesc {
    SeparationDesc::Independent
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Spacing {
    #[default]
    Log,
    Linear,
}

impl PairsDesc {
    pub fn build(&self, domain: &DomainModel, seed: u64) -> Result<Vec<(Point, Point)>, ConfigError> {
        match self {
            PairsDesc::Random { count, band, separation } => {
                let separation = match *separation {
                    SeparationDesc::Independent => Separation::Independent,
                    SeparationDesc::Within { max } => Separation::Within { max },
                    SeparationDesc::Apart { min } => Separation::Apart { min },
                };
                Ok(domain.sample_pairs(&PairRule { count: *count, band: (band[0], band[1]), separation, seed })?)
            }
            PairsDesc::Boundary { radius, theta, count, axis, spacing } => {
                if *axis >= domain.dim() {
                    return Err(invalid(format!("axis {axis} out of range for dimension {}", domain.dim())));
                }
                if *count == 0 || !(theta[0] > 0.0 && theta[0] <= theta[1]) {
                    return Err(invalid("boundary sweep needs count ≥ 1 and 0 < θ₀ ≤ θ₁"));
                }
                let angles: Vec<f64> = (0..*count)
                    .map(|k| {
                        let f = if *count == 1 { 0.0 } else { k as f64 / (*count - 1) as f64 };
                        match spacing {
                            Spacing::Log => (theta[0].ln() + f * (theta[1] / theta[0]).ln()).exp(),
                            Spacing::Linear => theta[0] + f * (theta[1] - theta[0]),
                        }
                    })
                    .collect();
                angles
                    .into_iter()
                    .map(|t| {
                        let mut x = Point::zero(domain.dim());
                        let mut y = x;
                        x.set_coord(*axis, Complex64::from_polar(*radius, t));
                        y.set_coord(*axis, Complex64::from_polar(*radius, -t));
                        for p in [&x, &y] {
                            if !domain.contains(p)? {
                                return Err(invalid("boundary sweep point outside the domain"));
                            }
                        }
                        Ok((x, y))
                    })
                    .collect()
            }
            PairsDesc::Explicit { pairs } => pairs.iter().map(|[a, b]| Ok((point(a)?, point(b)?))).collect(),
        }
    }
}

/// Solver overrides; unset fields keep the per-domain defaults.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverDesc {
    pub h0: Option<f64>,
    pub beta: Option<f64>,
    pub h_min: Option<f64>,
    pub k_neighbors: Option<usize>,
    pub refine_iterations: Option<usize>,
    pub segment_target: Option<f64>,
    pub max_vertices: Option<usize>,
    pub certify_pairs: Option<usize>,
    pub max_nodes: Option<usize>,
    pub certify_lattice: Option<bool>,
}

impl SolverDesc {
    pub fn apply(&self, mut c: SolverConfig) -> SolverConfig {
        macro_rules! set {
            ($($f:ident),*) => { $(if let Some(v) = self.$f { c.$f = v; })* };
        }
        set!(h0, beta, h_min, k_neighbors, refine_iterations, segment_target, max_vertices, certify_pairs, max_nodes, certify_lattice);
        c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsDesc {
    #[serde(default = "one")]
    pub c_ntr: f64,
    #[serde(default = "one")]
    pub c_good: f64,
    #[serde(default = "one")]
    pub c_ugly: f64,
}

impl Default for BoundsDesc {
    fn default() -> Self {
        Self { c_ntr: 1.0, c_good: 1.0, c_ugly: 1.0 }
    }
}

impl From<BoundsDesc> for BoundParams {
    fn from(b: BoundsDesc) -> Self {
        BoundParams { c_ntr: b.c_ntr, c_good: b.c_good, c_ugly: b.c_ugly, curve_up: None }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyDesc {
    pub c_shell: Option<f64>,
    pub c_shell_bound: Option<f64>,
    pub visibility_floor: Option<f64>,
    pub c_gh: Option<f64>,
    pub c_dmax: Option<f64>,
}

impl VerifyDesc {
    pub fn params(&self) -> VerifyParams {
        let d = VerifyParams::default();
        VerifyParams {
            c_shell: self.c_shell.unwrap_or(d.c_shell),
            c_shell_bound: self.c_shell_bound.unwrap_or(d.c_shell_bound),
            visibility_floor: self.visibility_floor.unwrap_or(d.visibility_floor),
            c_gh: self.c_gh.unwrap_or(d.c_gh),
            c_dmax: self.c_dmax.unwrap_or(d.c_dmax),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReferenceDesc {
    /// Exact oracle on disc/ball, solver upper length elsewhere.
    #[default]
    Auto,
    Oracle,
    CurveUpper,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputDesc {
    #[serde(default = "default_dir")]
    pub dir: PathBuf,
    #[serde(default = "default_stem")]
    pub stem: String,
    #[serde(default = "yes")]
    pub plots: bool,
}

fn default_dir() -> PathBuf {
    PathBuf::from("out")
}

fn default_stem() -> String {
    "report".into()
}

fn yes() -> bool {
    true
}

impl Default for OutputDesc {
    fn default() -> Self {
        Self { dir: default_dir(), stem: default_stem(), plots: true }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub domain: DomainDesc,
    #[serde(default)]
    pub profile: Option<ProfileDesc>,
    #[serde(default)]
    pub estimator: Option<EstimatorDesc>,
    pub pairs: PairsDesc,
    #[serde(default)]
    pub solver: SolverDesc,
    #[serde(default)]
    pub bounds: BoundsDesc,
    #[serde(default)]
    pub verify: VerifyDesc,
    #[serde(default)]
    pub reference: ReferenceDesc,
    /// Lower-bounds only: also report the largest passing constant of each
    /// bound, searched in `[0, c_max]`.
    #[serde(default)]
    pub measure_constants: Option<f64>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub output: OutputDesc,
    /// Directory that relative paths resolve against (set on load).
    #[serde(skip)]
    pub base_dir: PathBuf,
}

/// Fully built models of a configuration.
pub struct Resolved {
    pub domain: DomainModel,
    pub profile: Option<GoldilocksProfile>,
    pub field: MetricField,
    pub pairs: Vec<(Point, Point)>,
    pub solver: SolverConfig,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read { path: path.into(), source })?;
        let mut c = Self::from_json(&text)?;
        c.base_dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok(c)
    }

    pub fn resolve(&self) -> Result<Resolved, ConfigError> {
        let domain = self.domain.build()?;
        let profile = match &self.profile {
            Some(p) => Some(p.build(&domain, &self.base_dir, self.seed)?),
            None if self.experiment.needs_profile() => {
                return Err(invalid(format!("experiment {} needs a profile", self.experiment.name())))
            }
            None => None,
        };
        let field = match self.estimator {
            Some(e) => MetricField::new(domain.clone(), e.into(), profile.clone())?,
            None => MetricField::default_for(domain.clone(), profile.clone())?,
        };
        let pairs = self.pairs.build(&domain, self.seed)?;
        let solver = self.solver.apply(SolverConfig::for_field(&field));
        solver.validate()?;
        if self.reference == ReferenceDesc::Oracle && !field.is_exact() {
            return Err(invalid("oracle reference needs an exact field (disc or ball)"));
        }
        Ok(Resolved { domain, profile, field, pairs, solver })
    }
}
