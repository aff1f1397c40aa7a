//! Shell decompositions of curves and verifiers for the geometric
//! inequalities, each producing records with measured constants.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::curve::Curve;
use crate::domain::DomainModel;
use crate::error::Result;
use crate::geodesic::{penetration_depth, GeodesicResult};
use crate::goldilocks::GoldilocksProfile;
use crate::metric::{
    dini_upper_distance, exact_distance, lower_distance_bundle, measure_max_c, pisa_bound, BoundKind, BoundParams,
    MetricField,
};
use crate::numeric::{golden_max, linear_fit, LinearFit};
use crate::point::Point;

const E: f64 = core::f64::consts::E;

/// Pass rule shared by all records: `lhs ≤ rhs` up to a relative 1e-6
/// (absolute 1e-6 for right-hand sides below 1).
pub fn within(lhs: f64, rhs: f64) -> bool {
    lhs <= rhs + 1e-6 * rhs.abs().max(1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShellPiece {
    pub index: i32,
    pub d_i: f64,
    pub curve: Curve,
    /// Arc-length parameters of the piece inside the decomposed curve.
    pub s0: f64,
    pub s1: f64,
    pub starts_at_endpoint: bool,
    pub ends_at_endpoint: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShellDecomposition {
    pub depth: f64,
    pub n_x: u32,
    pub n_y: u32,
    pub pieces: Vec<ShellPiece>,
    pub length: f64,
}

/// Outcome of [`ShellDecomposition::check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellCheck {
    pub holds: bool,
    /// Largest relative excess over the shell inequalities (≤ 0 when they
    /// hold strictly).
    pub worst_excess: f64,
    /// `|Σ L_e(γ_i) − L_e(γ)|`.
    pub concat_error: f64,
}

/// Smallest `N ≥ 0` with `D·e^{−N} ≤ δ < D·e^{−(N−1)}`.
fn shell_count(depth: f64, delta: f64) -> u32 {
    if delta >= depth * (1.0 - 1e-12) {
        return 0;
    }
    let mut n = libm::ceil(libm::log(depth / delta)).max(0.0) as u32;
    while depth * libm::exp(-(n as f64)) > delta {
        n += 1;
    }
    while n > 0 && depth * libm::exp(-(n as f64 - 1.0)) <= delta {
        n -= 1;
    }
    n
}

/// First parameter in `[a, b]` where `f ≥ target`, located to 1e-13 in
/// arc length. `f` is 1-Lipschitz, so an interval whose endpoint values
/// cannot reach the target in between is discarded whole.
fn first_hit<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64, target: f64, tol: f64) -> Option<f64> {
    if fa >= target {
        return Some(a);
    }
    if 0.5 * (fa + fb + (b - a)) < target {
        return None;
    }
    if b - a <= tol {
        return (fb >= target).then_some(b);
    }
    let m = 0.5 * (a + b);
    let fm = f(m);
    first_hit(f, a, fa, m, fm, target, tol).or_else(|| first_hit(f, m, fm, b, fb, target, tol))
}

/// [`first_hit`] for `f` concave on `[a, b]` (δ along a segment of a
/// convex domain): the superlevel set is an interval, so locate the
/// maximum and bisect on its increasing side.
fn first_hit_concave<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64, target: f64, tol: f64) -> Option<f64> {
    if fa >= target {
        return Some(a);
    }
    if 0.5 * (fa + fb + (b - a)) < target {
        return None;
    }
    let (mut peak, mut fpeak) = golden_max(f, a, b, tol, 200);
    if fb > fpeak {
        (peak, fpeak) = (b, fb);
    }
    if fpeak < target {
        return None;
    }
    let (mut lo, mut hi) = (a, peak);
    while hi - lo > tol {
        let m = 0.5 * (lo + hi);
        if m <= lo || m >= hi {
            break;
        }
        if f(m) >= target {
            hi = m;
        } else {
            lo = m;
        }
    }
    Some(hi)
}

struct Walker<'a> {
    curve: &'a Curve,
    domain: &'a DomainModel,
    deltas: Vec<f64>,
    tol: f64,
    concave: bool,
}

impl Walker<'_> {
    fn delta_at(&self, s: f64) -> f64 {
        self.domain.boundary_distance(&self.curve.point_at(s)).unwrap_or(0.0)
    }

    fn hit<F: Fn(f64) -> f64>(&self, f: &F, a: f64, fa: f64, b: f64, fb: f64, target: f64) -> Option<f64> {
        if self.concave {
            first_hit_concave(f, a, fa, b, fb, target, self.tol)
        } else {
            first_hit(f, a, fa, b, fb, target, self.tol)
        }
    }

    /// First `s ≥ from` with `δ ≥ target`.
    fn first(&self, from: f64, target: f64) -> Option<f64> {
        let cum = self.curve.cum_param();
        let f = |s: f64| self.delta_at(s);
        let mut a = from;
        let mut fa = f(a);
        for k in 0..cum.len() {
            if cum[k] <= a {
                continue;
            }
            if let Some(s) = self.hit(&f, a, fa, cum[k], self.deltas[k], target) {
                return Some(s);
            }
            a = cum[k];
            fa = self.deltas[k];
        }
        None
    }

    /// Last `s ≤ to` with `δ ≥ target`.
    fn last(&self, to: f64, target: f64) -> Option<f64> {
        let cum = self.curve.cum_param();
        let f = |r: f64| self.delta_at(-r);
        let mut a = -to;
        let mut fa = f(a);
        for k in (0..cum.len()).rev() {
            if -cum[k] <= a {
                continue;
            }
            if let Some(r) = self.hit(&f, a, fa, -cum[k], self.deltas[k], target) {
                return Some(-r);
            }
            a = -cum[k];
            fa = self.deltas[k];
        }
        None
    }
}

/// Cuts the curve at the first points (from `x`) and last points (towards
/// `y`) where δ equals `D·e^{i}`, `D` the penetration depth.
pub fn shell_decompose(curve: &Curve, domain: &DomainModel) -> Result<ShellDecomposition> {
    let pen = penetration_depth(curve, domain)?;
    let depth = pen.depth;
    let deltas: Vec<f64> = curve.vertices().iter().map(|v| domain.boundary_distance(v)).collect::<Result<_>>()?;
    let length = curve.euclid_length();
    let (dx, dy) = (deltas[0], deltas[deltas.len() - 1]);
    let n_x = shell_count(depth, dx);
    let n_y = shell_count(depth, dy);
    let walker = Walker { curve, domain, deltas, tol: 1e-13 * length.max(1.0), concave: domain.is_convex() };
    // the maximum is touched rather than crossed; aim just below it
    let top = depth * (1.0 - 1e-10);

    let mut xs = alloc::vec![0.0];
    let mut at = 0.0;
    for i in (-(n_x as i32) + 1)..=0 {
        let target = if i == 0 { top } else { depth * libm::exp(i as f64) };
        at = walker.first(at, target).unwrap_or(pen.param);
        xs.push(at);
    }
    let mut ys = alloc::vec![length];
    let mut at = length;
    for i in (0..n_y as i32).rev() {
        let target = if i == 0 { top } else { depth * libm::exp(-(i as f64)) };
        at = walker.last(at, target).unwrap_or(pen.param);
        ys.push(at);
    }
    ys.reverse();
    // xs[k] is x_{k−N_x}; ys[k] is y_k
    let mut pieces = Vec::with_capacity((n_x + n_y + 1) as usize);
    let mut push = |index: i32, d_i: f64, s0: f64, s1: f64| {
        let s1 = s1.max(s0);
        pieces.push(ShellPiece {
            index,
            d_i,
            curve: curve.sub_curve(s0, s1),
            s0,
            s1,
            starts_at_endpoint: s0 == 0.0,
            ends_at_endpoint: s1 == length,
        });
    };
    for k in 0..n_x as usize {
        let i = k as i32 - n_x as i32;
        push(i, depth * libm::exp(i as f64), xs[k], xs[k + 1]);
    }
    push(0, depth, xs[n_x as usize], ys[0]);
    for i in 1..=n_y as usize {
        push(i as i32, depth * libm::exp(-(i as f64)), ys[i - 1], ys[i]);
    }
    Ok(ShellDecomposition { depth, n_x, n_y, pieces, length })
}

impl ShellDecomposition {
    /// Checks `δ ≤ e·D_i` on every piece (sampled on a `subdiv`-fold
    /// subdivision) and `D_i ≤ δ ≤ e·D_i` at every piece endpoint, with a
    /// relative slack of 1e-9, plus concatenation of lengths.
    pub fn check(&self, domain: &DomainModel, subdiv: usize) -> Result<ShellCheck> {
        let slack = 1e-9;
        let mut worst = f64::NEG_INFINITY;
        let mut total = 0.0;
        for p in &self.pieces {
            total += p.curve.euclid_length();
            let hi = E * p.d_i;
            for v in p.curve.subdivided(subdiv).vertices() {
                worst = worst.max(domain.boundary_distance(v)? / hi - 1.0);
            }
            for v in [p.curve.start(), p.curve.end()] {
                let d = domain.boundary_distance(&v)?;
                worst = worst.max(1.0 - d / p.d_i).max(d / hi - 1.0);
            }
        }
        let concat_error = (total - self.length).abs();
        Ok(ShellCheck { holds: worst <= slack && concat_error <= 1e-9, worst_excess: worst, concat_error })
    }
}

/// Per-pair quantities carried by a record (also the CSV columns).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PairMetrics {
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

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub id: String,
    pub domain: String,
    pub m: u32,
    pub x: Point,
    pub y: Point,
    pub lhs: f64,
    pub rhs: f64,
    /// The constant stated in the checked inequality.
    pub constant: f64,
    pub measured_constant: f64,
    pub pass: bool,
    /// Excluded from statistics (degenerate logarithm, saturation).
    pub skipped: bool,
    pub notes: String,
    pub metrics: PairMetrics,
}

impl VerificationRecord {
    #[allow(clippy::too_many_arguments)]
    fn new(
        id: impl Into<String>,
        domain: &DomainModel,
        x: &Point,
        y: &Point,
        lhs: f64,
        rhs: f64,
        constant: f64,
        measured: f64,
        metrics: PairMetrics,
    ) -> Self {
        Self {
            id: id.into(),
            domain: domain.label().into(),
            m: domain.exponent(),
            x: *x,
            y: *y,
            lhs,
            rhs,
            constant,
            measured_constant: measured,
            pass: within(lhs, rhs) && measured.is_finite(),
            skipped: false,
            notes: String::new(),
            metrics,
        }
    }

    fn skip(mut self, note: &str) -> Self {
        self.skipped = true;
        self.pass = true;
        self.notes = note.into();
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        if !self.notes.is_empty() {
            self.notes.push_str("; ");
        }
        self.notes.push_str(&note);
        self
    }
}

/// Constants stated in the checked inequalities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyParams {
    /// `L_e(γ_i) ≤ C ω(D_i) log(ω(D_i)/D_i)`.
    pub c_shell: f64,
    /// `min{L_e(γ_{x,z}), L_e(γ_{z,y})} ≤ C g(D_i)`.
    pub c_shell_bound: f64,
    /// Visibility passes when `D/g⁻¹(‖x−y‖)` is at least this floor.
    pub visibility_floor: f64,
    /// `L_e(γ) ≤ C g(‖x−y‖)`.
    pub c_gh: f64,
    /// `D ≤ C‖x−y‖ + √(δ(x)δ(y))`.
    pub c_dmax: f64,
}

impl Default for VerifyParams {
    fn default() -> Self {
        Self { c_shell: 10.0, c_shell_bound: 10.0, visibility_floor: 1e-3, c_gh: 10.0, c_dmax: 2.0 }
    }
}

fn base_metrics(domain: &DomainModel, x: &Point, y: &Point) -> Result<PairMetrics> {
    Ok(PairMetrics {
        dist_euclid: x.dist(y),
        delta_x: domain.boundary_distance(x)?,
        delta_y: domain.boundary_distance(y)?,
        ..PairMetrics::default()
    })
}

fn result_metrics(domain: &DomainModel, r: &GeodesicResult, profile: &GoldilocksProfile) -> Result<PairMetrics> {
    let (x, y) = (r.curve.start(), r.curve.end());
    let mut m = base_metrics(domain, &x, &y)?;
    let pen = penetration_depth(&r.curve, domain)?;
    m.depth = Some(pen.depth);
    m.l_e = Some(r.curve.euclid_length());
    m.k_up = Some(r.upper_length);
    m.k_low_best = Some(r.lower_distance);
    m.lambda_cert = Some(r.lambda_cert);
    m.g_xy = profile.g_eval(m.dist_euclid).ok();
    let (gi, _) = profile.g_inverse_clamped(m.dist_euclid);
    m.c_vis = (gi > 0.0).then(|| pen.depth / gi);
    m.c_gh = m.g_xy.filter(|g| *g > 0.0).map(|g| r.curve.euclid_length() / g);
    Ok(m)
}

/// Per-shell length constants and the cumulative-half bound.
pub fn verify_shells(
    decomp: &ShellDecomposition,
    domain: &DomainModel,
    profile: &GoldilocksProfile,
    params: &VerifyParams,
) -> Result<Vec<VerificationRecord>> {
    let Some(first) = decomp.pieces.first() else { return Ok(Vec::new()) };
    let x = first.curve.start();
    let y = decomp.pieces[decomp.pieces.len() - 1].curve.end();
    let mut metrics = base_metrics(domain, &x, &y)?;
    metrics.depth = Some(decomp.depth);
    metrics.l_e = Some(decomp.length);
    let mut out = Vec::new();
    for p in &decomp.pieces {
        let le = p.curve.euclid_length();
        let w = profile.omega(p.d_i)?;
        let log = libm::log(w / p.d_i);
        let denom = w * log;
        let id = format!("shell_length[{}]", p.index);
        let rec = if !(log > 0.0) {
            VerificationRecord::new(id, domain, &x, &y, le, 0.0, params.c_shell, f64::NAN, metrics)
                .skip("log_degenerate")
        } else {
            VerificationRecord::new(id, domain, &x, &y, le, params.c_shell * denom, params.c_shell, le / denom, metrics)
        };
        out.push(rec.note(format!("D_i={:e}", p.d_i)));

        // largest min{L_e(γ_{x,z}), L_e(γ_{z,y})} over z sampled on the piece
        let mut worst: f64 = 0.0;
        let sub = p.curve.subdivided(10);
        let mut s = p.s0;
        let vs = sub.vertices();
        for (k, v) in vs.iter().enumerate() {
            if k > 0 {
                s += vs[k - 1].dist(v);
            }
            worst = worst.max(s.min(decomp.length - s).max(0.0));
        }
        let g = profile.g_eval(p.d_i)?;
        let id = format!("shell_bound[{}]", p.index);
        out.push(
            VerificationRecord::new(id, domain, &x, &y, worst, params.c_shell_bound * g, params.c_shell_bound, worst / g, metrics)
                .note(format!("D_i={:e}", p.d_i)),
        );
    }
    Ok(out)
}

/// `D ≥ c·g⁻¹(‖x−y‖)` with `c` the configured floor; `None` for `x = y`.
pub fn verify_visibility(
    result: &GeodesicResult,
    domain: &DomainModel,
    profile: &GoldilocksProfile,
    params: &VerifyParams,
) -> Result<Option<VerificationRecord>> {
    let (x, y) = (result.curve.start(), result.curve.end());
    if x.dist(&y) < 1e-9 {
        return Ok(None);
    }
    let m = result_metrics(domain, result, profile)?;
    let (gi, saturated) = profile.g_inverse_clamped(m.dist_euclid);
    let depth = m.depth.unwrap_or(0.0);
    let rec = VerificationRecord::new(
        "visibility",
        domain,
        &x,
        &y,
        params.visibility_floor * gi,
        depth,
        params.visibility_floor,
        depth / gi,
        m,
    );
    Ok(Some(if saturated { rec.note("g_inverse_saturated") } else { rec }))
}

/// `L_e(γ) ≤ C g(‖x−y‖)` and the depth sub-check
/// `D ≤ C‖x−y‖ + √(δ(x)δ(y))`; `None` for `x = y`.
pub fn verify_gehring_hayman(
    result: &GeodesicResult,
    domain: &DomainModel,
    profile: &GoldilocksProfile,
    params: &VerifyParams,
) -> Result<Option<[VerificationRecord; 2]>> {
    let (x, y) = (result.curve.start(), result.curve.end());
    if x.dist(&y) < 1e-9 {
        return Ok(None);
    }
    let m = result_metrics(domain, result, profile)?;
    let d = m.dist_euclid;
    let le = result.curve.euclid_length();
    let gh = match m.g_xy {
        Some(g) if g > 0.0 => VerificationRecord::new("gehring_hayman", domain, &x, &y, le, params.c_gh * g, params.c_gh, le / g, m),
        _ => VerificationRecord::new("gehring_hayman", domain, &x, &y, le, 0.0, params.c_gh, f64::NAN, m).skip("g_saturated"),
    };
    let depth = m.depth.unwrap_or(0.0);
    let root = libm::sqrt(m.delta_x * m.delta_y);
    let dmax = VerificationRecord::new(
        "depth_bound",
        domain,
        &x,
        &y,
        depth,
        params.c_dmax * d + root,
        params.c_dmax,
        ((depth - root) / d).max(0.0),
        m,
    );
    Ok(Some([gh, dmax]))
}

/// Reference distance for lower-bound checks.
#[derive(Debug, Clone, PartialEq)]
pub enum KReference {
    /// Exact oracle (disc and ball).
    Oracle,
    /// Upper estimates of `k`, one per pair (e.g. solver upper lengths).
    Upper(Vec<f64>),
}

/// Every closed-form lower bound against the reference distance, the best
/// lower bound against the Dini upper bound, and (for `m ≥ 2`) the ratio of
/// the comparison bound to the reference. Degenerate pairs are skipped.
pub fn verify_lower_bounds(
    field: &MetricField,
    pairs: &[(Point, Point)],
    reference: &KReference,
    params: &BoundParams,
) -> Result<Vec<VerificationRecord>> {
    let domain = field.domain();
    let mut out = Vec::new();
    for (idx, (x, y)) in pairs.iter().enumerate() {
        if x.dist(y) < 1e-9 {
            continue;
        }
        let (k_ref, label) = match reference {
            KReference::Oracle => match exact_distance(field, x, y) {
                Some(k) => (k, "oracle"),
                None => return Err(crate::error::Error::IncompatibleEstimator("no oracle for this field".into())),
            },
            KReference::Upper(v) => (v[idx], "upper_estimate"),
        };
        let bundle = lower_distance_bundle(field, x, y, params)?;
        let mut metrics = base_metrics(domain, x, y)?;
        metrics.k_up = Some(k_ref);
        metrics.k_low_best = Some(bundle.best_lower());
        for b in &bundle.lower {
            out.push(
                VerificationRecord::new(b.name, domain, x, y, b.value, k_ref, b.constant, b.constant, metrics)
                    .note(format!("reference={label}")),
            );
        }
        if domain.is_smooth() {
            let dini = dini_upper_distance(domain, x, y)?;
            let best = bundle.best_lower();
            out.push(VerificationRecord::new("best_lower_vs_dini", domain, x, y, best, dini, 2.0, 2.0, metrics));
        }
        let m = domain.exponent();
        if m >= 2 {
            let pisa = pisa_bound(domain, m, x, y, 1.0)?;
            out.push(
                VerificationRecord::new("pisa_ratio", domain, x, y, pisa, k_ref, 1.0, pisa / k_ref, metrics)
                    .skip("ratio only")
                    .note(format!("reference={label}")),
            );
        }
    }
    Ok(out)
}

/// Largest constant of each bound that passes on the whole sweep.
pub fn measure_lower_constants(
    field: &MetricField,
    pairs: &[(Point, Point)],
    reference: &[f64],
    c_max: f64,
) -> Result<Vec<(&'static str, f64)>> {
    let mut out = Vec::new();
    for kind in [BoundKind::Ntr, BoundKind::Good1, BoundKind::Ugly1, BoundKind::FinalH] {
        out.push((kind.name(), measure_max_c(kind, field, pairs, reference, c_max)?));
    }
    Ok(out)
}

/// Least-squares slope of `log D` against `log ‖x−y‖` over visibility
/// records.
pub fn visibility_slope(records: &[VerificationRecord]) -> Option<LinearFit> {
    let (xs, ys): (Vec<f64>, Vec<f64>) = records
        .iter()
        .filter(|r| !r.skipped && r.metrics.dist_euclid > 0.0)
        .filter_map(|r| r.metrics.depth.map(|d| (libm::log(r.metrics.dist_euclid), libm::log(d))))
        .unzip();
    linear_fit(&xs, &ys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{PairRule, Separation};
    use crate::geodesic::{exact_disc_geodesic, Diagnostics};
    use crate::metric::{curve_kappa_length, Side};
    use num_complex::Complex64;

    fn sqrt_profile() -> GoldilocksProfile {
        GoldilocksProfile::power(1.0, 0.5, 1.0).unwrap()
    }

    fn as_result(curve: Curve) -> GeodesicResult {
        let field = MetricField::default_for(DomainModel::unit_disc(), None).unwrap();
        let up = curve_kappa_length(&field, &curve, Side::Upper).unwrap();
        GeodesicResult {
            curve,
            upper_length: up,
            lower_distance: up,
            lambda_cert: 1.0,
            diagnostics: Diagnostics {
                lattice_nodes: 0,
                lattice_coarsened: false,
                lattice_hops: 0,
                initial_length: up,
                initial_source: "segment",
                lambda_lattice: None,
                vertices: 0,
                lower_source: "oracle",
            },
        }
    }

    #[test]
    fn shell_counts() {
        assert_eq!(shell_count(1.0, 0.1), 3);
        assert_eq!(shell_count(1.0, 1.0), 0);
        assert_eq!(shell_count(1.0, libm::exp(-2.0)), 2);
    }

    #[test]
    fn constant_delta_curve_is_one_shell() {
        // δ ≡ 0.5 along a segment parallel to a side of the square |Re|,|Im| < 1
        let d = DomainModel::cube(1, 1.0).unwrap();
        let c = Curve::straight(Point::c1(-0.3, 0.5), Point::c1(0.3, 0.5), 5).unwrap();
        let s = shell_decompose(&c, &d).unwrap();
        assert_eq!((s.n_x, s.n_y, s.pieces.len()), (0, 0, 1));
        assert!((s.pieces[0].d_i - 0.5).abs() < 1e-9);
        assert!(s.check(&d, 10).unwrap().holds);

        let recs = verify_shells(&s, &d, &sqrt_profile(), &VerifyParams::default()).unwrap();
        let le = s.pieces[0].curve.euclid_length();
        let w = libm::sqrt(0.5);
        let want = le / (w * libm::log(w / 0.5));
        assert!((recs[0].measured_constant - want).abs() < 1e-6 * want);
    }

    #[test]
    fn diameter_has_seven_shells() {
        let d = DomainModel::unit_disc();
        let c = Curve::straight(Point::c1(-0.9, 0.0), Point::c1(0.9, 0.0), 7).unwrap();
        let s = shell_decompose(&c, &d).unwrap();
        assert_eq!((s.n_x, s.n_y, s.pieces.len()), (3, 3, 7));
        let check = s.check(&d, 10).unwrap();
        assert!(check.holds, "{check:?}");
        assert!(check.concat_error < 1e-12);
        let idx: Vec<i32> = s.pieces.iter().map(|p| p.index).collect();
        assert_eq!(idx, [-3, -2, -1, 0, 1, 2, 3]);
        // the cut between pieces −1 and 0 sits at δ = D = 1, pieces −2/−1 at δ = e⁻¹
        assert!((1.0 - s.pieces[1].curve.end().norm() - libm::exp(-1.0)).abs() < 1e-9);
    }

    #[test]
    fn visibility_on_exact_arc() {
        let d = DomainModel::unit_disc();
        let a = Complex64::from_polar(0.9, core::f64::consts::FRAC_PI_3);
        let r = as_result(exact_disc_geodesic(a, a.conj(), 1025).unwrap());
        let rec = verify_visibility(&r, &d, &sqrt_profile(), &VerifyParams::default()).unwrap().unwrap();
        // independent g⁻¹ for ω = √t: g(x) = √x(2 − log x), bisection on (0, 1]
        let target = 1.8 * libm::sin(core::f64::consts::FRAC_PI_3);
        let (mut lo, mut hi) = (1e-12f64, 1.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if libm::sqrt(mid) * (2.0 - libm::log(mid)) < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!((lo - 0.171).abs() < 1e-3, "{lo}");
        let cc = (0.81 + 1.0) / (2.0 * 0.9 * 0.5);
        let depth = 1.0 - (cc - libm::sqrt(cc * cc - 1.0));
        let want = depth / lo;
        assert!((rec.measured_constant - want).abs() < 1e-6 * want, "{} vs {want}", rec.measured_constant);
        assert!((rec.measured_constant - 4.29).abs() < 0.02);
        assert!(rec.pass);
    }

    #[test]
    fn gehring_hayman_on_diameter() {
        let d = DomainModel::unit_disc();
        let r = as_result(Curve::straight(Point::c1(-0.9, 0.0), Point::c1(0.9, 0.0), 9).unwrap());
        let [gh, dmax] = verify_gehring_hayman(&r, &d, &sqrt_profile(), &VerifyParams::default()).unwrap().unwrap();
        assert!((gh.measured_constant - 0.9500).abs() < 1e-4, "{}", gh.measured_constant);
        assert!((dmax.measured_constant - 0.5).abs() < 1e-9);
        assert!(gh.pass && dmax.pass);
        let x = Point::c1(0.1, 0.0);
        let same = as_result(Curve::new(alloc::vec![x]).unwrap());
        assert!(verify_gehring_hayman(&same, &d, &sqrt_profile(), &VerifyParams::default()).unwrap().is_none());
    }

    #[test]
    fn disc_lower_bounds_sound() {
        let d = DomainModel::unit_disc();
        let f = MetricField::default_for(d.clone(), Some(sqrt_profile())).unwrap();
        let pairs = d
            .sample_pairs(&PairRule { count: 100, band: (1e-3, 1.0), separation: Separation::Independent, seed: 2 })
            .unwrap();
        let recs = verify_lower_bounds(&f, &pairs, &KReference::Oracle, &BoundParams::default()).unwrap();
        for r in &recs {
            if r.id == "convex_ratio" || r.id == "ugly1" || r.id == "best_lower_vs_dini" {
                assert!(r.pass, "{r:?}");
            }
        }
    }
}
