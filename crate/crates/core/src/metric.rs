//! Kobayashi–Royden estimates, curve lengths and closed-form distance
//! bounds.

use alloc::format;
use alloc::vec::Vec;
use core::cell::Cell;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::Curve;
use crate::domain::{DomainKind, DomainModel};
use crate::error::{Error, Result};
use crate::goldilocks::GoldilocksProfile;
use crate::numeric::{integrate, GL6};
use crate::point::{Direction, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Estimator {
    ExactDisc,
    ExactBall,
    /// `1/(2δ(z;v)) ≤ κ ≤ 1/δ(z;v)` on convex models.
    ConvexSandwich,
    /// Convex sandwich with the lower side raised to `c‖v‖/ω(δ(z))`.
    SgLowerConvexUpper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

/// Two-sided estimate of `κ(z; v)` or of a length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricEstimate {
    pub lower: f64,
    pub upper: f64,
    pub provenance: &'static str,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricField {
    domain: DomainModel,
    estimator: Estimator,
    profile: Option<GoldilocksProfile>,
}

impl MetricField {
    pub fn new(domain: DomainModel, estimator: Estimator, profile: Option<GoldilocksProfile>) -> Result<Self> {
        let ok = match estimator {
            Estimator::ExactDisc => matches!(domain.kind(), DomainKind::UnitDisc),
            Estimator::ExactBall => matches!(domain.kind(), DomainKind::UnitDisc | DomainKind::UnitBall { .. }),
            Estimator::ConvexSandwich => domain.is_convex(),
            Estimator::SgLowerConvexUpper => domain.is_convex() && profile.is_some(),
        };
        if !ok {
            return Err(Error::IncompatibleEstimator(format!("{estimator:?} on {}", domain.label())));
        }
        Ok(Self { domain, estimator, profile })
    }

    /// Exact field for disc and balls, convex sandwich otherwise.
    pub fn default_for(domain: DomainModel, profile: Option<GoldilocksProfile>) -> Result<Self> {
        let est = match domain.kind() {
            DomainKind::UnitDisc => Estimator::ExactDisc,
            DomainKind::UnitBall { .. } => Estimator::ExactBall,
            _ if profile.is_some() => Estimator::SgLowerConvexUpper,
            _ => Estimator::ConvexSandwich,
        };
        Self::new(domain, est, profile)
    }

    pub fn domain(&self) -> &DomainModel {
        &self.domain
    }

    pub fn estimator(&self) -> Estimator {
        self.estimator
    }

    pub fn profile(&self) -> Option<&GoldilocksProfile> {
        self.profile.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.estimator, Estimator::ExactDisc | Estimator::ExactBall)
    }

    pub fn kappa_exact(&self, z: &Point, v: &Point) -> Result<f64> {
        if !self.is_exact() {
            return Err(Error::IncompatibleEstimator("no exact κ for this field".into()));
        }
        if !self.domain.contains(z)? {
            return Err(Error::OutsideDomain);
        }
        Ok(ball_kappa(z, v))
    }

    /// `κ` on the requested side; `v = 0` gives 0.
    pub fn kappa_side(&self, z: &Point, v: &Point, side: Side) -> Result<f64> {
        if v.norm_sqr() == 0.0 {
            self.domain.boundary_distance(z)?;
            return Ok(0.0);
        }
        if self.is_exact() {
            return self.kappa_exact(z, v);
        }
        let e = self.kappa_bounds(z, &Direction::new(*v)?)?;
        Ok(match side {
            Side::Lower => e.lower,
            Side::Upper => e.upper,
        })
    }

    pub fn kappa_bounds(&self, z: &Point, v: &Direction) -> Result<MetricEstimate> {
        if self.is_exact() {
            let k = self.kappa_exact(z, v.vector())?;
            return Ok(MetricEstimate { lower: k, upper: k, provenance: "exact" });
        }
        let dv = self.domain.directional_boundary_distance(z, v)?;
        let upper = 1.0 / dv;
        let mut lower = 0.5 / dv;
        let mut provenance = "convex-sandwich";
        if let (Estimator::SgLowerConvexUpper, Some(p)) = (self.estimator, &self.profile) {
            let d = self.domain.boundary_distance(z)?;
            let sg = p.c_metric() * v.norm() / p.omega(d)?;
            if sg > lower {
                lower = sg.min(upper);
                provenance = "sg-lower";
            }
        }
        Ok(MetricEstimate { lower, upper, provenance })
    }
}

/// `√((1−‖z‖²)‖v‖² + |⟨v,z⟩|²)/(1−‖z‖²)`; the disc case is `|v|/(1−|z|²)`.
fn ball_kappa(z: &Point, v: &Point) -> f64 {
    let s = 1.0 - z.norm_sqr();
    libm::sqrt(s * v.norm_sqr() + v.hermitian(z).norm_sqr()) / s
}

/// κ-length of the segment `[a, b]` by six-point Gauss–Legendre. Returns
/// `None` when a node leaves the domain.
pub fn segment_length_gl6(field: &MetricField, a: &Point, b: &Point, side: Side) -> Option<f64> {
    let v = *b - *a;
    if v.norm_sqr() == 0.0 {
        return Some(0.0);
    }
    let mut acc = 0.0;
    for (x, w) in GL6 {
        acc += w * field.kappa_side(&a.lerp(b, x), &v, side).ok()?;
    }
    Some(acc)
}

/// κ-length of the segment `[a, b]` by adaptive Gauss–Kronrod.
pub fn segment_length(field: &MetricField, a: &Point, b: &Point, side: Side) -> Result<f64> {
    let v = *b - *a;
    if v.norm_sqr() == 0.0 {
        return Ok(0.0);
    }
    let failed = Cell::new(false);
    let (val, _) = integrate(
        |t| match field.kappa_side(&a.lerp(b, t), &v, side) {
            Ok(k) => k,
            Err(_) => {
                failed.set(true);
                0.0
            }
        },
        0.0,
        1.0,
        1e-10,
        0.0,
        200,
    );
    if failed.get() {
        return Err(Error::CurveExitsDomain);
    }
    Ok(val)
}

/// `∫ κ(γ; γ′)` along the polyline on the requested side.
pub fn curve_kappa_length(field: &MetricField, curve: &Curve, side: Side) -> Result<f64> {
    for v in curve.vertices() {
        if !field.domain().contains(v)? {
            return Err(Error::CurveExitsDomain);
        }
    }
    let mut total = 0.0;
    for w in curve.vertices().windows(2) {
        total += segment_length(field, &w[0], &w[1], side)?;
    }
    Ok(total)
}

pub fn curve_euclid_length(curve: &Curve) -> f64 {
    curve.euclid_length()
}

/// `tanh⁻¹(|a−b|/|1−āb|)`.
pub fn disc_distance_oracle(a: Complex64, b: Complex64) -> Result<f64> {
    if a.norm() >= 1.0 || b.norm() >= 1.0 {
        return Err(Error::OutsideDomain);
    }
    Ok(ball_distance_oracle(&Point::new(&[a])?, &Point::new(&[b])?)?)
}

/// Kobayashi distance of the unit ball,
/// `tanh⁻¹ √(1 − (1−‖a‖²)(1−‖b‖²)/|1−⟨a,b⟩|²)`.
pub fn ball_distance_oracle(a: &Point, b: &Point) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: b.dim() });
    }
    if a.norm_sqr() >= 1.0 || b.norm_sqr() >= 1.0 {
        return Err(Error::OutsideDomain);
    }
    let den = (Complex64::new(1.0, 0.0) - a.hermitian(b)).norm_sqr();
    // |1−⟨a,b⟩|² − (1−‖a‖²)(1−‖b‖²) = ‖a−b‖² − Σ_{j<k}|a_j b_k − a_k b_j|²
    let mut wedge = 0.0;
    for j in 0..a.dim() {
        for k in j + 1..a.dim() {
            wedge += (a.coord(j) * b.coord(k) - a.coord(k) * b.coord(j)).norm_sqr();
        }
    }
    let s2 = ((*a - *b).norm_sqr() - wedge).max(0.0) / den;
    let s = libm::sqrt(s2).min(1.0);
    let q = (1.0 - a.norm_sqr()) * (1.0 - b.norm_sqr()) / den;
    // tanh⁻¹ s = ½log((1+s)/(1−s)) and 1 − s² = q
    Ok(libm::log((1.0 + s) / libm::sqrt(q)))
}

/// Exact Kobayashi distance when the field has an oracle.
pub fn exact_distance(field: &MetricField, x: &Point, y: &Point) -> Option<f64> {
    if field.is_exact() {
        ball_distance_oracle(x, y).ok()
    } else {
        None
    }
}

/// Best cheap upper estimate of `k(x, y)`: the oracle when exact, otherwise
/// the smaller of the Dini bound (smooth models) and the κ-upper length of
/// the straight segment.
pub fn distance_upper(field: &MetricField, x: &Point, y: &Point) -> Result<f64> {
    if let Some(k) = exact_distance(field, x, y) {
        return Ok(k);
    }
    let seg = segment_length(field, x, y, Side::Upper)?;
    if field.domain().is_smooth() {
        Ok(seg.min(dini_upper_distance(field.domain(), x, y)?))
    } else {
        Ok(seg)
    }
}

/// `log(1 + 2‖x−y‖/√(δ(x)δ(y)))`.
pub fn dini_upper_distance(domain: &DomainModel, x: &Point, y: &Point) -> Result<f64> {
    if !domain.is_smooth() {
        return Err(Error::NonSmooth);
    }
    let dx = domain.boundary_distance(x)?;
    let dy = domain.boundary_distance(y)?;
    Ok(libm::log1p(2.0 * x.dist(y) / libm::sqrt(dx * dy)))
}

/// `(m/2)·log((1 + c‖x−y‖/δ(x)^{1/m})(1 + c‖x−y‖/δ(y)^{1/m}))`.
pub fn pisa_bound(domain: &DomainModel, m: u32, x: &Point, y: &Point, c: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::OutOfRange("m ≥ 1 required".into()));
    }
    let dx = domain.boundary_distance(x)?;
    let dy = domain.boundary_distance(y)?;
    let d = x.dist(y);
    let inv = 1.0 / m as f64;
    Ok(0.5 * m as f64 * (libm::log1p(c * d / libm::pow(dx, inv)) + libm::log1p(c * d / libm::pow(dy, inv))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BoundKind {
    ConvexRatio,
    Ntr,
    Good1,
    Ugly1,
    FinalH,
}

impl BoundKind {
    pub const LOWER: [BoundKind; 5] =
        [BoundKind::ConvexRatio, BoundKind::Ntr, BoundKind::Good1, BoundKind::Ugly1, BoundKind::FinalH];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::ConvexRatio => "convex_ratio",
            BoundKind::Ntr => "ntr",
            BoundKind::Good1 => "good1",
            BoundKind::Ugly1 => "ugly1",
            BoundKind::FinalH => "final_h",
        }
    }
}

/// Constants of the lower bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundParams {
    /// Constant in `½log(1 + c/min{δ(y;x−y), δ(x;x−y)})`.
    pub c_ntr: f64,
    /// Constant `c` of the g⁻¹ bound.
    pub c_good: f64,
    /// Constant `c′` of the ω bound.
    pub c_ugly: f64,
    /// κ-upper length of a curve joining the pair, if known.
    pub curve_up: Option<f64>,
}

impl Default for BoundParams {
    fn default() -> Self {
        Self { c_ntr: 1.0, c_good: 1.0, c_ugly: 1.0, curve_up: None }
    }
}

impl BoundParams {
    /// `c″ = min{1, c/4, c′/2}`.
    pub fn c_final(&self) -> f64 {
        1.0f64.min(self.c_good / 4.0).min(self.c_ugly / 2.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NamedBound {
    pub name: &'static str,
    pub value: f64,
    pub constant: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundBundle {
    pub lower: Vec<NamedBound>,
    pub upper: Vec<NamedBound>,
    pub omitted: Vec<(&'static str, &'static str)>,
}

impl BoundBundle {
    pub fn best_lower(&self) -> f64 {
        self.lower.iter().map(|b| b.value).fold(0.0, f64::max)
    }

    pub fn best_upper(&self) -> f64 {
        self.upper.iter().map(|b| b.value).fold(f64::INFINITY, f64::min)
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.lower.iter().chain(&self.upper).find(|b| b.name == name).map(|b| b.value)
    }

    /// Every lower bound is below every upper bound up to `slack`.
    pub fn is_consistent(&self, slack: f64) -> bool {
        self.best_lower() <= self.best_upper() + slack
    }
}

/// One lower bound with constant `c` (ignored by `ConvexRatio`; for
/// `FinalH` it is `c″` itself). `Ok(None)` means the bound does not apply.
pub fn lower_bound_value(
    kind: BoundKind,
    field: &MetricField,
    x: &Point,
    y: &Point,
    c: f64,
) -> Result<Option<f64>> {
    let domain = field.domain();
    let dx = domain.boundary_distance(x)?;
    let dy = domain.boundary_distance(y)?;
    let d = x.dist(y);
    if d == 0.0 {
        return Ok(Some(0.0));
    }
    let profile = field.profile();
    Ok(match kind {
        BoundKind::ConvexRatio => Some(0.5 * libm::log(dx / dy).abs()),
        BoundKind::Ntr => {
            let v = Direction::new(*x - *y)?;
            let m = domain
                .directional_boundary_distance(x, &v)?
                .min(domain.directional_boundary_distance(y, &v)?);
            Some(0.5 * libm::log1p(c / m))
        }
        BoundKind::Good1 => {
            let Some(p) = profile else { return Ok(None) };
            if d > p.g_max() {
                return Ok(None);
            }
            let gi = p.g_inverse(d)?;
            let one = |del: f64| (0.5 * libm::log(c * gi / del)).max(0.0);
            Some(one(dx).max(one(dy)))
        }
        BoundKind::Ugly1 => {
            let Some(p) = profile else { return Ok(None) };
            let one = |del: f64| -> Result<f64> { Ok(0.5 * libm::log1p(c * d / p.omega(del)?)) };
            Some(one(dx)?.max(one(dy)?))
        }
        BoundKind::FinalH => {
            let Some(p) = profile else { return Ok(None) };
            let hx = p.h_eval(x, y, c, domain)?;
            let hy = p.h_eval(y, x, c, domain)?;
            if hx.saturated || hy.saturated {
                return Ok(None);
            }
            Some(0.5 * (libm::log1p(hx.h) + libm::log1p(hy.h)))
        }
    })
}

/// All applicable lower bounds together with the Dini and curve upper
/// bounds.
pub fn lower_distance_bundle(field: &MetricField, x: &Point, y: &Point, params: &BoundParams) -> Result<BoundBundle> {
    let mut b = BoundBundle { lower: Vec::new(), upper: Vec::new(), omitted: Vec::new() };
    for kind in BoundKind::LOWER {
        let c = match kind {
            BoundKind::ConvexRatio => 0.0,
            BoundKind::Ntr => params.c_ntr,
            BoundKind::Good1 => params.c_good,
            BoundKind::Ugly1 => params.c_ugly,
            BoundKind::FinalH => params.c_final(),
        };
        match lower_bound_value(kind, field, x, y, c)? {
            Some(value) => b.lower.push(NamedBound { name: kind.name(), value, constant: c }),
            None if field.profile().is_none() => b.omitted.push((kind.name(), "no profile")),
            None => b.omitted.push((kind.name(), "g⁻¹ saturated")),
        }
    }
    if field.domain().is_smooth() {
        b.upper.push(NamedBound { name: "dini", value: dini_upper_distance(field.domain(), x, y)?, constant: 2.0 });
    } else {
        b.omitted.push(("dini", "non-smooth boundary"));
    }
    if let Some(v) = params.curve_up {
        b.upper.push(NamedBound { name: "curve_up", value: v, constant: 1.0 });
    }
    Ok(b)
}

/// Largest `c ∈ [0, c_max]` (to relative precision 1e-6) for which the
/// bound stays below the reference distance on every pair.
pub fn measure_max_c(
    kind: BoundKind,
    field: &MetricField,
    pairs: &[(Point, Point)],
    reference: &[f64],
    c_max: f64,
) -> Result<f64> {
    let passes = |c: f64| -> Result<bool> {
        for ((x, y), k) in pairs.iter().zip(reference) {
            if let Some(v) = lower_bound_value(kind, field, x, y, c)? {
                if v > k + 1e-9 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    };
    if passes(c_max)? {
        return Ok(c_max);
    }
    let (mut lo, mut hi) = (0.0, c_max);
    while hi - lo > 1e-6 * c_max {
        let mid = 0.5 * (lo + hi);
        if passes(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Four-point Gromov δ: max over quadruples of
/// `min((x|z)_o, (z|y)_o) − (x|y)_o` for the precomputed distance matrix,
/// enumerated when there are at most 2000 quadruples and sampled otherwise.
pub fn gromov_delta_estimate(dist: &[Vec<f64>], seed: u64) -> f64 {
    let n = dist.len();
    if n < 4 {
        return 0.0;
    }
    let quad = |x: usize, y: usize, z: usize, o: usize| -> f64 {
        let gp = |a: usize, b: usize| 0.5 * (dist[a][o] + dist[o][b] - dist[a][b]);
        // all three pairings of the four-point condition
        let mut worst: f64 = 0.0;
        for (a, b, c) in [(x, y, z), (x, z, y), (z, y, x)] {
            worst = worst.max(gp(a, c).min(gp(c, b)) - gp(a, b));
        }
        worst
    };
    let total = n * (n - 1) * (n - 2) * (n - 3) / 24;
    let mut best: f64 = 0.0;
    if total <= 2000 {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        for (x, y, z, o) in [(a, b, c, d), (a, b, d, c), (a, c, d, b), (b, c, d, a)] {
                            best = best.max(quad(x, y, z, o));
                        }
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..4000 {
            let mut idx = [0usize; 4];
            let mut k = 0;
            while k < 4 {
                let r = rng.gen_range(0..n);
                if !idx[..k].contains(&r) {
                    idx[k] = r;
                    k += 1;
                }
            }
            best = best.max(quad(idx[0], idx[1], idx[2], idx[3]));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disc() -> MetricField {
        MetricField::default_for(DomainModel::unit_disc(), None).unwrap()
    }

    fn ball2() -> MetricField {
        MetricField::default_for(DomainModel::unit_ball(2).unwrap(), None).unwrap()
    }

    fn c2(a: f64, b: f64) -> Point {
        Point::from_reals(&[a, 0.0, b, 0.0]).unwrap()
    }

    #[test]
    fn kappa_examples() {
        let f = disc();
        assert_eq!(f.kappa_exact(&Point::c1(0.0, 0.0), &Point::c1(1.0, 0.0)).unwrap(), 1.0);
        assert!((f.kappa_exact(&Point::c1(0.5, 0.0), &Point::c1(1.0, 0.0)).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        let b = ball2();
        let k = b.kappa_exact(&c2(0.5, 0.0), &c2(0.0, 1.0)).unwrap();
        assert!((k - 2.0 / libm::sqrt(3.0)).abs() < 1e-15);
    }

    #[test]
    fn sandwich_examples() {
        let sand = MetricField::new(DomainModel::unit_disc(), Estimator::ConvexSandwich, None).unwrap();
        let e = sand.kappa_bounds(&Point::c1(0.0, 0.0), &Direction::new(Point::c1(1.0, 0.0)).unwrap()).unwrap();
        assert_eq!((e.lower, e.upper), (0.5, 1.0));
        let ell = MetricField::new(DomainModel::ellipsoid(2).unwrap(), Estimator::ConvexSandwich, None).unwrap();
        let e = ell.kappa_bounds(&c2(0.0, 0.0), &Direction::new(c2(0.0, 1.0)).unwrap()).unwrap();
        assert!((e.lower - 0.5).abs() < 1e-9 && (e.upper - 1.0).abs() < 1e-9);
        assert!(MetricField::new(DomainModel::ellipsoid(2).unwrap(), Estimator::ExactBall, None).is_err());
    }

    #[test]
    fn segment_lengths() {
        let f = disc();
        let c = Curve::segment(Point::c1(-0.5, 0.0), Point::c1(0.5, 0.0)).unwrap();
        let l = curve_kappa_length(&f, &c, Side::Upper).unwrap();
        assert!((l - 2.0 * libm::atanh(0.5)).abs() < 1e-10);
        let c = Curve::segment(Point::c1(-0.9, 0.0), Point::c1(0.9, 0.0)).unwrap();
        let l = curve_kappa_length(&f, &c, Side::Upper).unwrap();
        assert!((l - 2.0 * libm::atanh(0.9)).abs() < 1e-9);
        let single = Curve::new(alloc::vec![Point::c1(0.2, 0.0)]).unwrap();
        assert_eq!(curve_kappa_length(&f, &single, Side::Upper).unwrap(), 0.0);
    }

    #[test]
    fn oracles() {
        let z = Complex64::new(0.0, 0.0);
        assert_eq!(disc_distance_oracle(z, z).unwrap(), 0.0);
        let h = Complex64::new(0.5, 0.0);
        assert!((disc_distance_oracle(z, h).unwrap() - libm::atanh(0.5)).abs() < 1e-15);
        let a = Complex64::new(-0.9, 0.0);
        let b = Complex64::new(0.9, 0.0);
        assert!((disc_distance_oracle(a, b).unwrap() - libm::atanh(1.8 / 1.81)).abs() < 1e-13);
    }

    #[test]
    fn dini_examples() {
        let d = DomainModel::unit_disc();
        let v = dini_upper_distance(&d, &Point::c1(0.0, 0.0), &Point::c1(0.5, 0.0)).unwrap();
        assert!((v - libm::log(1.0 + libm::sqrt(2.0))).abs() < 1e-15);
        let b = DomainModel::unit_ball(2).unwrap();
        let v = dini_upper_distance(&b, &c2(0.0, 0.0), &c2(0.9, 0.0)).unwrap();
        assert!((v - libm::log(1.0 + 1.8 / libm::sqrt(0.1))).abs() < 1e-14);
        let cube = DomainModel::cube(1, 1.0).unwrap();
        assert_eq!(dini_upper_distance(&cube, &Point::c1(0.0, 0.0), &Point::c1(0.1, 0.0)), Err(Error::NonSmooth));
    }

    #[test]
    fn bundle_examples() {
        let prof = GoldilocksProfile::power(1.0, 0.5, 0.5).unwrap();
        let f = MetricField::default_for(DomainModel::unit_disc(), Some(prof)).unwrap();
        let x = Point::c1(0.9, 0.0);
        let y = Point::c1(-0.9, 0.0);
        let b = lower_distance_bundle(&f, &x, &y, &BoundParams::default()).unwrap();
        assert!(b.get("convex_ratio").unwrap().abs() < 1e-12);
        let ugly = b.get("ugly1").unwrap();
        assert!((ugly - 0.5 * libm::log(1.0 + 1.8 / libm::sqrt(0.1))).abs() < 1e-12, "{ugly}");
        assert!(b.is_consistent(1e-9));
        let same = lower_distance_bundle(&f, &x, &x, &BoundParams::default()).unwrap();
        assert!(same.lower.iter().all(|b| b.value == 0.0));
    }

    #[test]
    fn pisa_m1() {
        let d = DomainModel::unit_disc();
        let v = pisa_bound(&d, 1, &Point::c1(0.0, 0.0), &Point::c1(0.5, 0.0), 1.0).unwrap();
        assert!((v - 0.5 * libm::log(3.0)).abs() < 1e-15);
    }

    #[test]
    fn gromov_degenerate_and_tree() {
        assert_eq!(gromov_delta_estimate(&alloc::vec![alloc::vec![0.0; 3]; 3], 1), 0.0);
        let xs = [-0.8, -0.3, 0.2, 0.7];
        let dist: Vec<Vec<f64>> = xs
            .iter()
            .map(|a| xs.iter().map(|b| disc_distance_oracle(Complex64::new(*a, 0.0), Complex64::new(*b, 0.0)).unwrap()).collect())
            .collect();
        assert!(gromov_delta_estimate(&dist, 1) < 1e-6);
    }
}
