//! Weights ω, the gauge `g(x) = ∫₀ˣ (ω(t)/t)·log(ω(t)/t) dt`, its inverse,
//! the h-functions and empirical calibration probes.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::domain::DomainModel;
use crate::error::{Error, Result};
use crate::metric::{self, MetricField};
use crate::numeric::{bisect, integrate, linear_fit, LinearFit};
use crate::point::{Direction, Point};

#[derive(Debug, Clone, PartialEq)]
pub enum OmegaForm {
    /// `ω(t) = C·t^a`.
    PowerLaw { c: f64, a: f64 },
    /// Samples `(tᵢ, ωᵢ)` with `tᵢ` increasing, interpolated linearly in
    /// log–log coordinates (piecewise power law, so monotone data stays
    /// monotone). Below the first node the first piece is extended.
    Tabulated { t: Vec<f64>, w: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct OmegaSpec {
    pub form: OmegaForm,
    /// The constant `c` in `κ ≥ c‖v‖/ω(δ)`.
    pub c_metric: f64,
    pub t_max: f64,
    /// Allows exponents above 1/2 (and inadmissible weights) through.
    pub override_checks: bool,
}

/// Default upper end of the ω domain; larger than the diameter of every
/// shipped model.
pub const DEFAULT_T_MAX: f64 = 4.0;

/// Closed-form `g` for `ω = C·t^a`, `0 < a < 1`.
pub fn g_power(c: f64, a: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let lc = libm::log(c);
    c * libm::pow(x, a) / (a * a) * (a * lc + (1.0 - a) * (1.0 - a * libm::log(x)))
}

impl OmegaSpec {
    pub fn power(c: f64, a: f64, c_metric: f64) -> Result<Self> {
        Self::power_with(c, a, c_metric, DEFAULT_T_MAX, false)
    }

    pub fn power_with(c: f64, a: f64, c_metric: f64, t_max: f64, override_checks: bool) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidOmega(format!("C = {c} must be positive")));
        }
        if !(a > 0.0 && a <= 1.0) {
            return Err(Error::InvalidOmega(format!("exponent {a} not in (0, 1]")));
        }
        if a > 0.5 + 1e-12 && !override_checks {
            return Err(Error::InvalidOmega(format!(
                "exponent {a} exceeds 1/2; pass the override flag to allow it"
            )));
        }
        if !(c_metric > 0.0) || !(t_max > 0.0) {
            return Err(Error::InvalidOmega("c_metric and t_max must be positive".into()));
        }
        Ok(Self { form: OmegaForm::PowerLaw { c, a }, c_metric, t_max, override_checks })
    }

    pub fn tabulated(t: Vec<f64>, w: Vec<f64>, c_metric: f64) -> Result<Self> {
        if t.len() < 2 || t.len() != w.len() {
            return Err(Error::InvalidOmega("table needs ≥ 2 matching samples".into()));
        }
        if t.windows(2).any(|p| !(p[1] > p[0])) || t[0] <= 0.0 {
            return Err(Error::InvalidOmega("table abscissae must be positive and increasing".into()));
        }
        if w.iter().any(|v| !(*v > 0.0 && v.is_finite())) {
            return Err(Error::InvalidOmega("ω must be positive".into()));
        }
        if w.windows(2).any(|p| p[1] < p[0]) {
            return Err(Error::InvalidOmega("tabulated ω must be nondecreasing".into()));
        }
        let t_max = *t.last().expect("nonempty");
        Ok(Self { form: OmegaForm::Tabulated { t, w }, c_metric, t_max, override_checks: false })
    }

    /// ω(t) for `t ∈ (0, t_max]`.
    pub fn omega(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) {
            return Err(Error::OutOfRange(format!("ω needs t > 0, got {t}")));
        }
        if t > self.t_max * (1.0 + 1e-12) {
            return Err(Error::OutOfRange(format!("t = {t} exceeds t_max = {}", self.t_max)));
        }
        Ok(self.omega_unchecked(t))
    }

    pub(crate) fn omega_unchecked(&self, t: f64) -> f64 {
        match &self.form {
            OmegaForm::PowerLaw { c, a } => c * libm::pow(t, *a),
            OmegaForm::Tabulated { t: ts, w } => {
                let n = ts.len();
                let i = ts.partition_point(|&x| x <= t).clamp(1, n - 1) - 1;
                let (l0, l1) = (libm::log(ts[i]), libm::log(ts[i + 1]));
                let (w0, w1) = (libm::log(w[i]), libm::log(w[i + 1]));
                let s = (libm::log(t) - l0) / (l1 - l0);
                libm::exp(w0 + s * (w1 - w0))
            }
        }
    }

    /// Local log–log slope of ω at `t`.
    fn local_exponent(&self, t: f64) -> f64 {
        match &self.form {
            OmegaForm::PowerLaw { a, .. } => *a,
            OmegaForm::Tabulated { .. } => {
                let h = 1e-3;
                let (lo, hi) = (t * libm::exp(-h), (t * libm::exp(h)).min(self.t_max));
                (libm::log(self.omega_unchecked(hi)) - libm::log(self.omega_unchecked(lo)))
                    / (libm::log(hi) - libm::log(lo))
            }
        }
    }

    /// `(ω(t)/t)·log(ω(t)/t)`.
    pub fn integrand(&self, t: f64) -> f64 {
        let q = self.omega_unchecked(t) / t;
        q * libm::log(q)
    }

    /// The point where `ω(t) = t`, past which the integrand turns negative
    /// and `g` decreases; `t_max` if it is not reached.
    pub fn g_peak(&self) -> f64 {
        match &self.form {
            OmegaForm::PowerLaw { c, a } => {
                if *a >= 1.0 {
                    return self.t_max;
                }
                libm::pow(*c, 1.0 / (1.0 - a)).min(self.t_max)
            }
            OmegaForm::Tabulated { t, .. } => {
                let f = |s: f64| self.omega_unchecked(libm::exp(s)) - libm::exp(s);
                let Some(k) = t.iter().position(|&x| self.omega_unchecked(x) <= x) else {
                    return self.t_max;
                };
                if k == 0 {
                    return t[0];
                }
                libm::exp(bisect(f, libm::log(t[k - 1]), libm::log(t[k]), 1e-15, 200))
            }
        }
    }

    /// 64 log-spaced points covering the small-t regime where the
    /// admissibility conditions are meaningful.
    pub fn default_grid(&self) -> Vec<f64> {
        let hi = match &self.form {
            OmegaForm::PowerLaw { c, a } if *a < 1.0 => {
                // ω·log(ω/t) is increasing below this point
                let xb = libm::exp((a * libm::log(*c) - (1.0 - a)) / (a * (1.0 - a)));
                (0.5 * xb).min(self.t_max)
            }
            _ => (1e-2f64).min(self.t_max),
        };
        log_grid(hi * 1e-10, hi, 64)
    }

    pub fn check_admissibility(&self, grid: &[f64]) -> AdmissibilityReport {
        let tol = 1e-12;
        let mut a_ok = true;
        let mut b_ok = true;
        for w in grid.windows(2) {
            let (x0, x1) = (w[0], w[1]);
            let (o0, o1) = (self.omega_unchecked(x0), self.omega_unchecked(x1));
            if o1 / x1 > o0 / x0 * (1.0 + tol) {
                a_ok = false;
            }
            let b0 = o0 * libm::log(o0 / x0);
            let b1 = o1 * libm::log(o1 / x1);
            if b1 < b0 - tol * b0.abs().max(1e-300) {
                b_ok = false;
            }
        }
        let x_small = grid.first().copied().unwrap_or(self.t_max * 1e-10);
        let degenerate = grid.iter().all(|&x| self.integrand(x).abs() < 1e-12);
        // Tail: near 0 the integrand behaves like t^{b−1}·log(1/t) with b the
        // local exponent, integrable iff b > 0. The check extrapolates from
        // the smallest grid point.
        let b = self.local_exponent(x_small);
        let c_ok = b > 0.0;
        let sqrt_ok = b <= 0.5 + 1e-9;
        AdmissibilityReport {
            a_decreasing: a_ok,
            b_increasing: b_ok,
            c_integrable: c_ok,
            extrapolated: true,
            dominates_sqrt: sqrt_ok,
            degenerate,
            grid_lo: x_small,
            grid_hi: grid.last().copied().unwrap_or(self.t_max),
        }
    }
}

pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (libm::log(lo), libm::log(hi));
    (0..n)
        .map(|k| libm::exp(a + (b - a) * k as f64 / (n - 1).max(1) as f64))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdmissibilityReport {
    /// ω(x)/x nonincreasing.
    pub a_decreasing: bool,
    /// ω(x)·log(ω(x)/x) nondecreasing.
    pub b_increasing: bool,
    /// ∫₀^ε (ω/x)·log(ω/x) dx finite.
    pub c_integrable: bool,
    /// The integrability verdict comes from tail extrapolation.
    pub extrapolated: bool,
    /// ω ⪰ √x near 0.
    pub dominates_sqrt: bool,
    /// Integrand vanishes on the grid (g ≡ 0).
    pub degenerate: bool,
    pub grid_lo: f64,
    pub grid_hi: f64,
}

impl AdmissibilityReport {
    pub fn all_pass(&self) -> bool {
        self.a_decreasing && self.b_increasing && self.c_integrable && self.dominates_sqrt && !self.degenerate
    }
}

/// Which h-function attains the maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HBranch {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HValues {
    pub h1: f64,
    pub h2: f64,
    pub h: f64,
    pub branch: HBranch,
    /// `c‖x−y‖` exceeded the range of g; g⁻¹ was clamped.
    pub saturated: bool,
}

/// An admissible weight with its tabulated gauge.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldilocksProfile {
    pub omega: OmegaSpec,
    pub admissibility: AdmissibilityReport,
    /// `(x, g(x))` on a log-spaced grid up to the peak of g.
    pub g_table: Vec<(f64, f64)>,
    pub closed_form: bool,
    pub domain_link: Option<String>,
    x_hi: f64,
    g_hi: f64,
}

impl GoldilocksProfile {
    pub fn new(omega: OmegaSpec) -> Result<Self> {
        let admissibility = omega.check_admissibility(&omega.default_grid());
        if !admissibility.all_pass() && !omega.override_checks {
            return Err(Error::InvalidOmega(format!("weight is not admissible: {admissibility:?}")));
        }
        if admissibility.degenerate {
            return Err(Error::InvalidOmega("g vanishes identically".into()));
        }
        let closed_form = matches!(omega.form, OmegaForm::PowerLaw { a, .. } if a < 1.0);
        let x_hi = omega.g_peak();
        let mut p = Self {
            omega,
            admissibility,
            g_table: Vec::new(),
            closed_form,
            domain_link: None,
            x_hi,
            g_hi: 0.0,
        };
        p.g_hi = p.g_unchecked(x_hi);
        p.g_table = log_grid(x_hi * 1e-12, x_hi, 256)
            .into_iter()
            .map(|x| (x, p.g_unchecked(x)))
            .collect();
        Ok(p)
    }

    /// Profile for `ω = C·t^a` with the given metric constant.
    pub fn power(c: f64, a: f64, c_metric: f64) -> Result<Self> {
        Self::new(OmegaSpec::power(c, a, c_metric)?)
    }

    pub fn with_domain_link(mut self, label: impl Into<String>) -> Self {
        self.domain_link = Some(label.into());
        self
    }

    pub fn c_metric(&self) -> f64 {
        self.omega.c_metric
    }

    pub fn omega(&self, t: f64) -> Result<f64> {
        self.omega.omega(t)
    }

    /// Largest x on which g is increasing (and invertible).
    pub fn x_peak(&self) -> f64 {
        self.x_hi
    }

    /// `g(x_peak)`, the top of the range of g⁻¹.
    pub fn g_max(&self) -> f64 {
        self.g_hi
    }

    pub fn g_eval(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Err(Error::OutOfRange(format!("g needs x > 0, got {x}")));
        }
        if x > self.omega.t_max * (1.0 + 1e-12) {
            return Err(Error::OutOfRange(format!("x = {x} exceeds t_max = {}", self.omega.t_max)));
        }
        Ok(self.g_unchecked(x))
    }

    fn g_unchecked(&self, x: f64) -> f64 {
        match self.omega.form {
            OmegaForm::PowerLaw { c, a } if a < 1.0 => g_power(c, a, x),
            _ => self.g_quadrature(x),
        }
    }

    /// g by adaptive quadrature in `s = log t` over `[ε, x]`, `ε = 10⁻⁶x`,
    /// with the head `[0, ε]` replaced by the power law matching ω at ε.
    pub fn g_quadrature(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let eps = 1e-6 * x;
        let b = self.omega.local_exponent(eps);
        let head = if b > 0.0 && b < 1.0 {
            let k = self.omega.omega_unchecked(eps) / libm::pow(eps, b);
            g_power(k, b, eps)
        } else {
            0.0
        };
        let spec = &self.omega;
        let (body, _) = integrate(
            |s| {
                let t = libm::exp(s);
                let w = spec.omega_unchecked(t);
                w * libm::log(w / t)
            },
            libm::log(eps),
            libm::log(x),
            1e-13,
            1e-300,
            2000,
        );
        head + body
    }

    /// `g⁻¹(y)` for `0 ≤ y ≤ g_max`, by bisection in `log x`.
    pub fn g_inverse(&self, y: f64) -> Result<f64> {
        if !(y >= 0.0) || y > self.g_hi * (1.0 + 1e-12) {
            return Err(Error::OutOfRange(format!("g⁻¹ argument {y} outside [0, {}]", self.g_hi)));
        }
        if y == 0.0 {
            return Ok(0.0);
        }
        // g is flat at its peak, so bisection cannot resolve x there
        if y >= self.g_hi {
            return Ok(self.x_hi);
        }
        let hi = libm::log(self.x_hi);
        let lo = hi - 700.0;
        let s = bisect(|s| self.g_unchecked(libm::exp(s)) - y, lo, hi, 1e-16, 400);
        Ok(libm::exp(s))
    }

    /// g⁻¹ clamped to `x_peak` with a saturation flag.
    pub fn g_inverse_clamped(&self, y: f64) -> (f64, bool) {
        if y > self.g_hi {
            (self.x_hi, true)
        } else {
            (self.g_inverse(y.max(0.0)).unwrap_or(self.x_hi), false)
        }
    }

    /// `h₁ = c‖x−y‖/g(δ(x))`, `h₂ = g⁻¹(c‖x−y‖)/δ(x)`, `h = max`.
    pub fn h_eval(&self, x: &Point, y: &Point, c: f64, domain: &DomainModel) -> Result<HValues> {
        if !(c > 0.0) {
            return Err(Error::OutOfRange("h needs c > 0".into()));
        }
        let dx = domain.boundary_distance(x)?;
        domain.boundary_distance(y)?;
        let d = x.dist(y);
        if d == 0.0 {
            return Ok(HValues { h1: 0.0, h2: 0.0, h: 0.0, branch: HBranch::First, saturated: false });
        }
        let h1 = c * d / self.g_eval(dx)?;
        let (inv, saturated) = self.g_inverse_clamped(c * d);
        let h2 = inv / dx;
        let (h, branch) = if h1 >= h2 { (h1, HBranch::First) } else { (h2, HBranch::Second) };
        Ok(HValues { h1, h2, h, branch, saturated })
    }
}

fn random_unit<R: Rng>(dim: usize, rng: &mut R) -> Point {
    loop {
        let mut re = [0.0f64; 6];
        for r in re.iter_mut().take(2 * dim) {
            *r = rng.gen_range(-1.0..1.0);
        }
        let p = Point::from_reals(&re[..2 * dim]).expect("finite");
        let n = p.norm();
        if n > 1e-3 && n <= 1.0 {
            return p * (1.0 / n);
        }
    }
}

/// Points at depths `tₖ` below random boundary points, with a direction.
fn depth_samples(
    domain: &DomainModel,
    depths: &[f64],
    per_depth: usize,
    seed: u64,
) -> Vec<(Point, f64, Point)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for &t in depths {
        let mut got = 0;
        let mut tries = 0;
        while got < per_depth && tries < 100 * per_depth {
            tries += 1;
            let u = domain.sample_interior(&mut rng);
            let Ok((q, n, _)) = domain.project_to_boundary(&u) else { continue };
            let p = q - n * t;
            let Ok(d) = domain.boundary_distance(&p) else { continue };
            out.push((p, d, random_unit(domain.dim(), &mut rng)));
            got += 1;
        }
    }
    out
}

/// Running-max profile `M(r) = sup{1/κ_up(x; v) : ‖v‖ = 1, δ(x) ≤ r}` at
/// each `r` in `radii`, over one shared sample set.
pub fn m_sup_profile(field: &MetricField, radii: &[f64], n_samples: usize, seed: u64) -> Result<Vec<f64>> {
    let domain = field.domain();
    if radii.iter().any(|&r| !(r > 0.0 && r < domain.inradius())) {
        return Err(Error::OutOfRange("radius outside (0, inradius)".into()));
    }
    let per = (n_samples / radii.len().max(1)).max(1);
    let mut depths: Vec<f64> = Vec::new();
    for &r in radii {
        for k in 0..per {
            depths.push(r * (k + 1) as f64 / per as f64);
        }
    }
    let samples = depth_samples(domain, &depths, 1, seed);
    let mut vals: Vec<(f64, f64)> = Vec::with_capacity(samples.len());
    for (p, d, v) in &samples {
        let est = field.kappa_bounds(p, &Direction::new(*v)?)?;
        vals.push((*d, 1.0 / est.upper));
    }
    let mut out = Vec::with_capacity(radii.len());
    for &r in radii {
        let m = vals
            .iter()
            .filter(|(d, _)| *d <= r * (1.0 + 1e-12))
            .map(|x| x.1)
            .fold(f64::NEG_INFINITY, f64::max);
        if !m.is_finite() {
            return Err(Error::InsufficientData(format!("no samples with δ ≤ {r}")));
        }
        out.push(m);
    }
    // enforce monotonicity in r for unsorted input
    let mut order: Vec<usize> = (0..radii.len()).collect();
    order.sort_by(|&i, &j| radii[i].total_cmp(&radii[j]));
    let mut run = f64::NEG_INFINITY;
    for &i in &order {
        run = run.max(out[i]);
        out[i] = run;
    }
    Ok(out)
}

pub fn m_sup_estimate(field: &MetricField, r: f64, n_samples: usize, seed: u64) -> Result<f64> {
    Ok(m_sup_profile(field, &[r], n_samples, seed)?[0])
}

/// `sup_{‖v‖=1} δ(p; v)` by evaluating complex-tangential candidates and a
/// seeded local search.
pub fn sup_directional<R: Rng>(domain: &DomainModel, p: &Point, rng: &mut R) -> Result<f64> {
    let dim = domain.dim();
    let (_, n, _) = domain.project_to_boundary(p)?;
    let mut cands: Vec<Point> = alloc::vec![n];
    // complex orthogonal complement of n
    for k in 0..dim {
        let e = Point::basis(dim, k);
        let mut t = e - n.scale_c(e.hermitian(&n));
        for c in &cands[1..] {
            t = t - c.scale_c(t.hermitian(c));
        }
        if t.norm() > 1e-6 {
            cands.push(t * (1.0 / t.norm()));
        }
    }
    for _ in 0..8 {
        cands.push(random_unit(dim, rng));
    }
    let eval = |v: &Point| -> Result<f64> { domain.directional_boundary_distance(p, &Direction::new(*v)?) };
    let mut best_v = cands[0];
    let mut best = eval(&best_v)?;
    for c in &cands[1..] {
        let val = eval(c)?;
        if val > best {
            best = val;
            best_v = *c;
        }
    }
    if dim > 1 {
        let mut sigma = 0.3;
        for _ in 0..30 {
            let trial = best_v + random_unit(dim, rng) * sigma;
            let trial = trial * (1.0 / trial.norm());
            let val = eval(&trial)?;
            if val > best {
                best = val;
                best_v = trial;
            } else {
                sigma *= 0.85;
            }
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BandFit {
    pub band: (f64, f64),
    pub n: usize,
    pub fit: Option<LinearFit>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Calibration {
    pub spec: OmegaSpec,
    pub raw_exponent: f64,
    pub raw_stderr: f64,
    pub snapped: bool,
    /// The fitted exponent exceeded 1/2 and was lowered to 1/2.
    pub clamped: bool,
    pub per_band: Vec<BandFit>,
}

/// Fits `log sup_v δ(x; v) ≈ log C + a·log δ(x)` over near-boundary samples.
/// The exponent snaps to the nearest `1/m` (`m ≤ 8`) within 0.05 and is
/// capped at 1/2; `C` is then the smallest constant with
/// `sup_v δ(x; v) ≤ C·δ(x)^a` on every sample.
pub fn calibrate_omega(domain: &DomainModel, n_samples: usize, bands: &[(f64, f64)], seed: u64) -> Result<Calibration> {
    if !domain.is_convex() {
        return Err(Error::IncompatibleEstimator("calibration needs a convex model".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut per_band = Vec::new();
    for &band in bands {
        let mut bx = Vec::new();
        let mut by = Vec::new();
        for _ in 0..n_samples {
            let p = domain.sample_in_band(band, &mut rng)?;
            let d = domain.boundary_distance(&p)?;
            let s = sup_directional(domain, &p, &mut rng)?;
            bx.push(libm::log(d));
            by.push(libm::log(s));
        }
        per_band.push(BandFit { band, n: bx.len(), fit: linear_fit(&bx, &by) });
        xs.extend(bx);
        ys.extend(by);
    }
    let fit = linear_fit(&xs, &ys)
        .ok_or_else(|| Error::InsufficientData("no spread in boundary distance".into()))?;
    if fit.slope.is_nan() || xs.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b)) - xs.iter().fold(f64::INFINITY, |a, &b| a.min(b)) < 0.5 {
        return Err(Error::InsufficientData("boundary distances span less than half a decade".into()));
    }
    let raw = fit.slope;
    let mut a = raw;
    let mut snapped = false;
    for m in 1..=8u32 {
        let cand = 1.0 / m as f64;
        if (raw - cand).abs() <= 0.05 {
            a = cand;
            snapped = true;
            break;
        }
    }
    let clamped = a > 0.5;
    if clamped {
        a = 0.5;
    }
    if !(a > 0.0) {
        return Err(Error::InsufficientData(format!("fitted exponent {raw} is not positive")));
    }
    let c = xs
        .iter()
        .zip(&ys)
        .map(|(lx, ly)| libm::exp(ly - a * lx))
        .fold(0.0, f64::max);
    let spec = OmegaSpec::power_with(c, a, 0.5, DEFAULT_T_MAX, false)?;
    Ok(Calibration { spec, raw_exponent: raw, raw_stderr: fit.slope_stderr, snapped, clamped, per_band })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaProbe {
    pub alpha_fit: f64,
    pub alpha_stderr: f64,
    /// `sup_z (k_up(x₀, z) − α·log(1/δ(z)))` over the samples.
    pub sup_residual: f64,
    pub finite: bool,
}

/// Least-squares α in `k_up(x₀, z) ≈ α·log(1/δ(z)) + const` over samples
/// with `δ(z)` log-uniform in `[10⁻⁶, 10⁻¹]`.
pub fn alpha_growth_probe(field: &MetricField, base: &Point, n_samples: usize, seed: u64) -> Result<AlphaProbe> {
    let domain = field.domain();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for _ in 0..n_samples {
        let z = domain.sample_in_band((1e-6, 1e-1), &mut rng)?;
        let d = domain.boundary_distance(&z)?;
        let k = metric::distance_upper(field, base, &z)?;
        xs.push(libm::log(1.0 / d));
        ys.push(k);
    }
    let fit = linear_fit(&xs, &ys).ok_or_else(|| Error::InsufficientData("alpha probe".into()))?;
    let sup = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| y - fit.slope * x)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(AlphaProbe { alpha_fit: fit.slope, alpha_stderr: fit.slope_stderr, sup_residual: sup, finite: sup.is_finite() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_examples() {
        let s = OmegaSpec::power(1.0, 0.5, 0.5).unwrap();
        assert!((s.omega(0.25).unwrap() - 0.5).abs() < 1e-15);
        let s = OmegaSpec::power(1.0, 1.0 / 3.0, 0.5).unwrap();
        assert!((s.omega(0.001).unwrap() - 0.1).abs() < 1e-12);
        let s = OmegaSpec::power(2.0, 0.5, 0.5).unwrap();
        assert!((s.omega(0.01).unwrap() - 0.2).abs() < 1e-15);
        assert!(s.omega(0.0).is_err());
    }

    #[test]
    fn admissibility_examples() {
        for a in [0.5, 1.0 / 3.0] {
            let s = OmegaSpec::power(1.0, a, 0.5).unwrap();
            assert!(s.check_admissibility(&s.default_grid()).all_pass());
        }
        let lin = OmegaSpec::power_with(1.0, 1.0, 0.5, DEFAULT_T_MAX, true).unwrap();
        let r = lin.check_admissibility(&lin.default_grid());
        assert!(!r.dominates_sqrt && r.degenerate);
        assert!(OmegaSpec::power(1.0, 0.75, 0.5).is_err());
    }

    #[test]
    fn g_examples() {
        let p = GoldilocksProfile::power(1.0, 0.5, 0.5).unwrap();
        assert!((p.g_eval(1.0).unwrap() - 2.0).abs() < 1e-14);
        let e = core::f64::consts::E;
        assert!((p.g_eval(libm::exp(-2.0)).unwrap() - 4.0 / e).abs() < 1e-14);
        let q = GoldilocksProfile::power(1.0, 1.0 / 3.0, 0.5).unwrap();
        assert!((q.g_eval(libm::exp(-3.0)).unwrap() - 12.0 / e).abs() < 1e-13);
    }

    #[test]
    fn g_inverse_examples() {
        let p = GoldilocksProfile::power(1.0, 0.5, 0.5).unwrap();
        assert_eq!(p.g_inverse(0.0).unwrap(), 0.0);
        // y = 2 sits at the peak of g where g′ = 0, so x is only determined
        // to about √ε
        let x = p.g_inverse(2.0).unwrap();
        assert!((x - 1.0).abs() < 1e-7, "{x}");
        assert!((p.g_eval(x).unwrap() - 2.0).abs() < 1e-10);
        assert!(p.g_inverse(p.g_max() * 1.01).is_err());
    }

    #[test]
    fn tabulated_matches_power_law() {
        let t = log_grid(1e-9, 1.0, 200);
        let w: Vec<f64> = t.iter().map(|x| libm::sqrt(*x)).collect();
        let tab = GoldilocksProfile::new(OmegaSpec::tabulated(t, w, 0.5).unwrap()).unwrap();
        for x in [1e-6, 1e-3, 0.3, 1.0] {
            let exact = g_power(1.0, 0.5, x);
            assert!((tab.g_eval(x).unwrap() - exact).abs() < 1e-9 * exact, "{x}");
        }
    }
}
