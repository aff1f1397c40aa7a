//! Near-geodesic polylines with a certified quasi-geodesic factor.
//!
//! A boundary-graded lattice gives a shortest path under upper κ-weights;
//! the path is then refined by local descent and its factor λ is certified
//! on sampled sub-pairs against the best available lower distance bound.

mod kdtree;
mod lattice;
mod refine;

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::Curve;
use crate::domain::DomainModel;
use crate::error::{Error, Result};
use crate::metric::{
    curve_kappa_length, exact_distance, lower_distance_bundle, segment_length, segment_length_gl6, BoundParams,
    MetricField, Side,
};
use crate::numeric::golden_max;
use crate::point::Point;

pub use lattice::{build_lattice, Lattice};
pub use refine::{refine_curve, refine_curve_with, RefineParams};

use lattice::key_of;

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// Lattice spacing away from the boundary.
    pub h0: f64,
    /// Spacing is graded as `max(h_min, β·δ)`.
    pub beta: f64,
    pub h_min: f64,
    pub k_neighbors: usize,
    pub refine_iterations: usize,
    /// Target κ-length of refined segments.
    pub segment_target: f64,
    pub max_vertices: usize,
    /// Random sub-pairs added to the dyadic ones in λ certification.
    pub certify_pairs: usize,
    pub max_nodes: usize,
    /// Certify the unrefined lattice path too (diagnostic only).
    pub certify_lattice: bool,
    /// Constants of the lower bounds used when no exact oracle exists.
    pub bounds: BoundParams,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            h0: 0.1,
            beta: 0.5,
            h_min: 0.0125,
            k_neighbors: 12,
            refine_iterations: 40,
            segment_target: 0.25,
            max_vertices: 400,
            certify_pairs: 32,
            max_nodes: 40_000,
            certify_lattice: true,
            bounds: BoundParams::default(),
        }
    }
}

impl SolverConfig {
    /// Default configuration scaled to the real dimension of the field's
    /// domain and to the cost of its κ estimate.
    pub fn for_field(field: &MetricField) -> Self {
        let base = Self::default();
        match (field.domain().dim(), field.is_exact()) {
            (1, _) => base,
            (2, true) => Self { h0: 0.25, h_min: 0.125, k_neighbors: 24, ..base },
            (2, false) => Self { h0: 0.3, h_min: 0.3, k_neighbors: 24, refine_iterations: 24, ..base },
            _ => Self { h0: 0.5, h_min: 0.5, k_neighbors: 32, refine_iterations: 24, ..base },
        }
    }

    /// Same configuration with lattice spacings halved.
    pub fn doubled(&self) -> Self {
        Self { h0: 0.5 * self.h0, h_min: 0.5 * self.h_min, ..self.clone() }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |s: &str| Err(Error::OutOfRange(s.into()));
        if !(self.h_min > 0.0 && self.h0 >= self.h_min && self.h0.is_finite()) {
            return bad("need 0 < h_min ≤ h0");
        }
        if !(self.beta > 0.0 && self.beta <= 1.0) {
            return bad("β must lie in (0, 1]");
        }
        if self.k_neighbors == 0 || self.max_nodes == 0 {
            return bad("k_neighbors and max_nodes must be positive");
        }
        if self.certify_pairs < 10 {
            return bad("certification needs at least 10 pairs");
        }
        if !(self.segment_target > 0.0) || self.max_vertices < 2 {
            return bad("segment_target must be positive and max_vertices ≥ 2");
        }
        Ok(())
    }

    fn refine_params(&self) -> RefineParams {
        RefineParams {
            iterations: self.refine_iterations,
            segment_target: self.segment_target,
            max_vertices: self.max_vertices,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostics {
    pub lattice_nodes: usize,
    pub lattice_coarsened: bool,
    /// Lattice nodes on the shortest path.
    pub lattice_hops: usize,
    /// Upper κ-length of the path that seeded refinement.
    pub initial_length: f64,
    /// Where the initial curve came from: `lattice`, `segment`, `seed`, or
    /// `given` for wrapped curves.
    pub initial_source: &'static str,
    pub lambda_lattice: Option<f64>,
    pub vertices: usize,
    /// `oracle` or the name of the best closed-form bound.
    pub lower_source: &'static str,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicResult {
    pub curve: Curve,
    pub upper_length: f64,
    pub lower_distance: f64,
    pub lambda_cert: f64,
    pub diagnostics: Diagnostics,
}

impl GeodesicResult {
    /// Wraps a given curve (for instance an exact geodesic) with the same
    /// length, lower-bound and λ data the solver attaches to its own curves.
    pub fn from_curve(curve: Curve, field: &MetricField, certify_pairs: usize, bounds: &BoundParams) -> Result<Self> {
        let (x, y) = (curve.start(), curve.end());
        let (upper_length, (lower_distance, lower_source), lambda_cert) = if x == y {
            (0.0, (0.0, "degenerate"), 1.0)
        } else {
            (
                curve_kappa_length(field, &curve, Side::Upper)?,
                best_lower(field, &x, &y, bounds)?,
                certify_lambda_with(&curve, field, certify_pairs, bounds)?,
            )
        };
        Ok(GeodesicResult {
            upper_length,
            lower_distance,
            lambda_cert,
            diagnostics: Diagnostics {
                lattice_nodes: 0,
                lattice_coarsened: false,
                lattice_hops: 0,
                initial_length: upper_length,
                initial_source: "given",
                lambda_lattice: None,
                vertices: curve.len(),
                lower_source,
            },
            curve,
        })
    }
}

#[derive(Clone, Copy, PartialEq)]
struct Key(f64, usize, usize);

impl Eq for Key {}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0).then(self.1.cmp(&other.1)).then(self.2.cmp(&other.2))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn canonical_less(a: &Point, b: &Point) -> bool {
    for j in 0..2 * a.dim() {
        match a.real(j).total_cmp(&b.real(j)) {
            Ordering::Less => return true,
            Ordering::Greater => return false,
            Ordering::Equal => {}
        }
    }
    false
}

/// A lattice built once per field and reused across solves.
pub struct GeodesicSolver {
    field: MetricField,
    config: SolverConfig,
    lattice: Lattice,
}

impl GeodesicSolver {
    pub fn new(field: MetricField, config: SolverConfig) -> Result<Self> {
        let lattice = build_lattice(&field, &config)?;
        Ok(Self { field, config, lattice })
    }

    pub fn field(&self) -> &MetricField {
        &self.field
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn solve(&self, x: &Point, y: &Point) -> Result<GeodesicResult> {
        self.solve_seeded(x, y, None)
    }

    /// Like [`solve`](Self::solve) with an extra candidate initial curve
    /// (for instance the result at a coarser resolution).
    pub fn solve_seeded(&self, x: &Point, y: &Point, seed: Option<&Curve>) -> Result<GeodesicResult> {
        let domain = self.field.domain();
        for p in [x, y] {
            if !domain.contains(p)? {
                return Err(Error::OutsideDomain);
            }
        }
        // solve in a canonical orientation so that swapping endpoints only
        // reverses the curve
        if canonical_less(y, x) {
            let seed = seed.map(Curve::reversed);
            let mut r = self.solve_canonical(y, x, seed.as_ref())?;
            r.curve = r.curve.reversed();
            return Ok(r);
        }
        self.solve_canonical(x, y, seed)
    }

    fn solve_canonical(&self, x: &Point, y: &Point, seed: Option<&Curve>) -> Result<GeodesicResult> {
        let field = &self.field;
        if x == y {
            return Ok(GeodesicResult {
                curve: Curve::new(alloc::vec![*x])?,
                upper_length: 0.0,
                lower_distance: 0.0,
                lambda_cert: 1.0,
                diagnostics: Diagnostics {
                    lattice_nodes: self.lattice.nodes.len(),
                    lattice_coarsened: self.lattice.coarsened,
                    lattice_hops: 0,
                    initial_length: 0.0,
                    initial_source: "segment",
                    lambda_lattice: Some(1.0),
                    vertices: 1,
                    lower_source: "degenerate",
                },
            });
        }
        let path = self.shortest_path(x, y);
        let mut candidates: Vec<(&'static str, Curve)> = Vec::new();
        let hops = path.as_ref().map_or(0, Vec::len);
        if let Some(path) = path {
            let mut vs = alloc::vec![*x];
            vs.extend(path.iter().map(|&i| self.lattice.nodes[i]));
            vs.push(*y);
            candidates.push(("lattice", Curve::new(vs)?));
        }
        candidates.push(("segment", Curve::segment(*x, *y)?));
        if let Some(s) = seed {
            if s.start() == *x && s.end() == *y {
                candidates.push(("seed", s.clone()));
            }
        }
        let mut best: Option<(&'static str, Curve, f64)> = None;
        for (name, c) in candidates {
            let Ok(l) = curve_kappa_length(field, &c, Side::Upper) else { continue };
            if best.as_ref().map_or(true, |b| l < b.2) {
                best = Some((name, c, l));
            }
        }
        let (initial_source, initial, initial_length) = best.ok_or(Error::Disconnected)?;

        let curve = refine_curve_with(&initial, field, &self.config.refine_params());
        let upper_length = curve_kappa_length(field, &curve, Side::Upper)?;
        let (lower_distance, lower_source) = best_lower(field, x, y, &self.config.bounds)?;
        let lambda_cert = certify_lambda_with(&curve, field, self.config.certify_pairs, &self.config.bounds)?;
        let lambda_lattice = if self.config.certify_lattice {
            Some(certify_lambda_with(&initial, field, self.config.certify_pairs, &self.config.bounds)?)
        } else {
            None
        };
        Ok(GeodesicResult {
            upper_length,
            lower_distance,
            lambda_cert,
            diagnostics: Diagnostics {
                lattice_nodes: self.lattice.nodes.len(),
                lattice_coarsened: self.lattice.coarsened,
                lattice_hops: hops,
                initial_length,
                initial_source,
                lambda_lattice,
                vertices: curve.len(),
                lower_source,
            },
            curve,
        })
    }

    /// Dijkstra from `x` to `y` through the lattice, with the endpoints
    /// stitched to their nearest nodes. Ties are broken on (weight, hops,
    /// node id). Returns the interior lattice nodes of the path, or `None`
    /// when the endpoints are not connected through the lattice.
    fn shortest_path(&self, x: &Point, y: &Point) -> Option<Vec<usize>> {
        let n = self.lattice.nodes.len();
        if n == 0 {
            return None;
        }
        let (src, dst) = (n, n + 1);
        let k = self.config.k_neighbors;
        let stitch = |p: &Point| -> Vec<(usize, f64)> {
            self.lattice
                .tree
                .nearest(&key_of(p), k, None)
                .into_iter()
                .filter_map(|(_, j)| {
                    segment_length_gl6(&self.field, p, &self.lattice.nodes[j], Side::Upper).map(|w| (j, w))
                })
                .collect()
        };
        let from_src = stitch(x);
        let mut to_dst = alloc::vec![None; n];
        for (j, w) in stitch(y) {
            to_dst[j] = Some(w);
        }
        let mut dist = alloc::vec![(f64::INFINITY, usize::MAX); n + 2];
        let mut pred = alloc::vec![usize::MAX; n + 2];
        let mut heap = BinaryHeap::new();
        dist[src] = (0.0, 0);
        heap.push(Reverse(Key(0.0, 0, src)));
        while let Some(Reverse(Key(d, h, u))) = heap.pop() {
            if (d, h) != dist[u] {
                continue;
            }
            if u == dst {
                break;
            }
            let mut relax = |v: usize, w: f64, heap: &mut BinaryHeap<Reverse<Key>>| {
                let cand = (d + w, h + 1);
                let cur = dist[v];
                if cand.0 < cur.0 || (cand.0 == cur.0 && (cand.1 < cur.1 || (cand.1 == cur.1 && u < pred[v]))) {
                    dist[v] = cand;
                    pred[v] = u;
                    heap.push(Reverse(Key(cand.0, cand.1, v)));
                }
            };
            if u == src {
                for &(j, w) in &from_src {
                    relax(j, w, &mut heap);
                }
                continue;
            }
            for &(j, w) in &self.lattice.adj[u] {
                relax(j, w, &mut heap);
            }
            if let Some(w) = to_dst[u] {
                relax(dst, w, &mut heap);
            }
        }
        if !dist[dst].0.is_finite() {
            return None;
        }
        let mut path = Vec::new();
        let mut v = pred[dst];
        while v != src {
            path.push(v);
            v = pred[v];
        }
        path.reverse();
        Some(path)
    }
}

/// One-shot solve with a freshly built lattice.
pub fn solve_geodesic(field: &MetricField, x: &Point, y: &Point, config: &SolverConfig) -> Result<GeodesicResult> {
    GeodesicSolver::new(field.clone(), config.clone())?.solve(x, y)
}

/// Solves at `config` and then at doubled resolution seeded with the coarse
/// curve, so the fine result is never longer than the coarse one.
pub fn solve_multires(field: &MetricField, x: &Point, y: &Point, config: &SolverConfig) -> Result<(GeodesicResult, GeodesicResult)> {
    let coarse = solve_geodesic(field, x, y, config)?;
    let fine = GeodesicSolver::new(field.clone(), config.doubled())?.solve_seeded(x, y, Some(&coarse.curve))?;
    Ok((coarse, fine))
}

/// Best lower bound on `k(x, y)`: the oracle when the field has one,
/// otherwise the largest closed-form bound.
fn best_lower(field: &MetricField, x: &Point, y: &Point, params: &BoundParams) -> Result<(f64, &'static str)> {
    if x == y {
        return Ok((0.0, "degenerate"));
    }
    if let Some(k) = exact_distance(field, x, y) {
        return Ok((k, "oracle"));
    }
    let bundle = lower_distance_bundle(field, x, y, params)?;
    Ok(bundle
        .lower
        .iter()
        .fold((0.0, "none"), |acc, b| if b.value > acc.0 { (b.value, b.name) } else { acc }))
}

fn dyadic_pairs(i: usize, j: usize, out: &mut Vec<(usize, usize)>) {
    out.push((i, j));
    if j - i >= 2 {
        let mid = (i + j) / 2;
        dyadic_pairs(i, mid, out);
        dyadic_pairs(mid, j, out);
    }
}

/// [`certify_lambda_with`] using default bound constants.
pub fn certify_lambda(curve: &Curve, field: &MetricField, n_pairs: usize) -> Result<f64> {
    certify_lambda_with(curve, field, n_pairs, &BoundParams::default())
}

/// Largest ratio `L_κ^up(γ|[u,w]) / k_low(u, w)` over vertex pairs: all
/// dyadic splits of the vertex range, every pair containing an endpoint,
/// and `n_pairs` seeded random pairs. A zero lower bound for distinct
/// points gives `+∞`; a degenerate curve gives 1.
pub fn certify_lambda_with(curve: &Curve, field: &MetricField, n_pairs: usize, params: &BoundParams) -> Result<f64> {
    let vs = curve.vertices();
    let n = vs.len();
    if n < 2 {
        return Ok(1.0);
    }
    let mut prefix = alloc::vec![0.0; n];
    for i in 1..n {
        prefix[i] = prefix[i - 1] + segment_length(field, &vs[i - 1], &vs[i], Side::Upper)?;
    }
    let mut pairs = Vec::new();
    dyadic_pairs(0, n - 1, &mut pairs);
    for k in 1..n - 1 {
        pairs.push((0, k));
        pairs.push((k, n - 1));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9 ^ n as u64);
    for _ in 0..n_pairs {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            pairs.push((a.min(b), a.max(b)));
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    let mut lambda: f64 = 1.0;
    let mut any = false;
    for (i, j) in pairs {
        if vs[i] == vs[j] {
            continue;
        }
        let (k_low, _) = best_lower(field, &vs[i], &vs[j], params)?;
        if !(k_low > 0.0) {
            return Ok(f64::INFINITY);
        }
        let ratio = (prefix[j] - prefix[i]) / k_low;
        lambda = if any { lambda.max(ratio) } else { ratio };
        any = true;
    }
    Ok(if any { lambda } else { 1.0 })
}

/// `n` vertices at equal hyperbolic spacing on the disc geodesic from `a`
/// to `b`: the Möbius map `z ↦ (z − a)/(1 − āz)` sends it to a radius.
pub fn exact_disc_geodesic(a: Complex64, b: Complex64, n: usize) -> Result<Curve> {
    if a.norm() >= 1.0 || b.norm() >= 1.0 {
        return Err(Error::OutsideDomain);
    }
    let one = Complex64::new(1.0, 0.0);
    if a == b {
        return Curve::new(alloc::vec![Point::new(&[a])?]);
    }
    let w = (b - a) / (one - a.conj() * b);
    let r = w.norm();
    let u = w / r;
    let s = libm::atanh(r);
    let n = n.max(2);
    let mut vs = Vec::with_capacity(n);
    for k in 0..n {
        let z = if k == 0 {
            a
        } else if k == n - 1 {
            b
        } else {
            let t = u * libm::tanh(s * k as f64 / (n - 1) as f64);
            (t + a) / (one + a.conj() * t)
        };
        vs.push(Point::new(&[z])?);
    }
    Curve::new(vs)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Penetration {
    pub depth: f64,
    pub at: Point,
    /// Arc-length parameter of `at` along the curve.
    pub param: f64,
}

/// `max_t δ(γ(t))`. On convex domains δ is concave along each segment, so
/// a golden-section search per segment finds the exact maximum; segments
/// whose Lipschitz bound cannot beat the current best are skipped.
pub fn penetration_depth(curve: &Curve, domain: &DomainModel) -> Result<Penetration> {
    let vs = curve.vertices();
    let cum = curve.cum_param();
    let deltas: Vec<f64> = vs.iter().map(|v| domain.boundary_distance(v)).collect::<Result<_>>()?;
    let mut best = Penetration { depth: deltas[0], at: vs[0], param: 0.0 };
    for (i, &d) in deltas.iter().enumerate() {
        if d > best.depth {
            best = Penetration { depth: d, at: vs[i], param: cum[i] };
        }
    }
    let mut order: Vec<usize> = (0..vs.len().saturating_sub(1)).collect();
    let bound = |i: usize| 0.5 * (deltas[i] + deltas[i + 1] + vs[i].dist(&vs[i + 1]));
    order.sort_by(|&a, &b| bound(b).total_cmp(&bound(a)).then(a.cmp(&b)));
    for i in order {
        if bound(i) <= best.depth {
            break;
        }
        let (a, b) = (vs[i], vs[i + 1]);
        let (t, d) = golden_max(|t| domain.boundary_distance(&a.lerp(&b, t)).unwrap_or(0.0), 0.0, 1.0, 1e-12, 200);
        if d > best.depth {
            best = Penetration { depth: d, at: a.lerp(&b, t), param: cum[i] + t * (cum[i + 1] - cum[i]) };
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::disc_distance_oracle;

    fn disc_field() -> MetricField {
        MetricField::default_for(DomainModel::unit_disc(), None).unwrap()
    }

    #[test]
    fn disc_lattice_size() {
        let l = build_lattice(&disc_field(), &SolverConfig::default()).unwrap();
        assert!((200..=5000).contains(&l.nodes().len()), "{}", l.nodes().len());
        assert!(!l.coarsened);
        let d = DomainModel::unit_disc();
        assert!(l.nodes().iter().all(|p| d.contains(p).unwrap()));
    }

    #[test]
    fn disc_diameter() {
        let f = disc_field();
        let x = Point::c1(-0.9, 0.0);
        let y = Point::c1(0.9, 0.0);
        let r = solve_geodesic(&f, &x, &y, &SolverConfig::default()).unwrap();
        let k = disc_distance_oracle(Complex64::new(-0.9, 0.0), Complex64::new(0.9, 0.0)).unwrap();
        assert!((k - 2.944439).abs() < 1e-6);
        assert!(r.upper_length <= 1.02 * k, "{} vs {k}", r.upper_length);
        assert!(r.upper_length >= k - 1e-9);
        for v in r.curve.vertices() {
            assert!(v.coord(0).im.abs() < 0.05);
        }
        assert!(r.lambda_cert >= 1.0 - 1e-6 && r.lambda_cert <= 1.1, "{}", r.lambda_cert);
    }

    #[test]
    fn degenerate_pair() {
        let f = disc_field();
        let x = Point::c1(0.2, 0.1);
        let r = solve_geodesic(&f, &x, &x, &SolverConfig::default()).unwrap();
        assert_eq!((r.upper_length, r.lambda_cert), (0.0, 1.0));
    }

    #[test]
    fn exact_geodesic_arc() {
        let a = Complex64::from_polar(0.9, core::f64::consts::FRAC_PI_3);
        let c = exact_disc_geodesic(a, a.conj(), 2049).unwrap();
        let pen = penetration_depth(&c, &DomainModel::unit_disc()).unwrap();
        let cc = (0.81 + 1.0) / (2.0 * 0.9 * 0.5);
        let rmin = cc - libm::sqrt(cc * cc - 1.0);
        assert!((pen.depth - (1.0 - rmin)).abs() < 1e-6, "{}", pen.depth);
        let straight = exact_disc_geodesic(Complex64::new(-0.9, 0.0), Complex64::new(0.9, 0.0), 9).unwrap();
        assert!(straight.vertices().iter().all(|v| v.coord(0).im == 0.0));
    }

    #[test]
    fn exact_geodesic_certifies() {
        let f = disc_field();
        let a = Complex64::from_polar(0.9, core::f64::consts::FRAC_PI_3);
        let c = exact_disc_geodesic(a, a.conj(), 512).unwrap();
        let len = curve_kappa_length(&f, &c, Side::Upper).unwrap();
        let k = disc_distance_oracle(a, a.conj()).unwrap();
        assert!(len / k <= 1.001 && len / k >= 1.0 - 1e-9);
        let lam = certify_lambda(&c, &f, 16).unwrap();
        assert!((1.0 - 1e-9..=1.001).contains(&lam), "{lam}");
    }

    #[test]
    fn refine_reduces_v_detour() {
        let f = disc_field();
        let c = Curve::new(alloc::vec![Point::c1(-0.5, 0.0), Point::c1(0.0, 0.6), Point::c1(0.5, 0.0)]).unwrap();
        let before = curve_kappa_length(&f, &c, Side::Upper).unwrap();
        let r = refine_curve(&c, &f, 50);
        let after = curve_kappa_length(&f, &r, Side::Upper).unwrap();
        assert!(after <= 0.95 * before, "{before} -> {after}");
        assert!(after >= 1.098612 - 1e-6 && after <= 1.098612 * 1.001, "{after}");
    }

    #[test]
    fn refine_keeps_straight_diameter() {
        let f = disc_field();
        let c = Curve::straight(Point::c1(-0.9, 0.0), Point::c1(0.9, 0.0), 40).unwrap();
        let before = curve_kappa_length(&f, &c, Side::Upper).unwrap();
        let after = curve_kappa_length(&f, &refine_curve(&c, &f, 20), Side::Upper).unwrap();
        assert!(after <= before && before - after < 1e-9);
    }

    #[test]
    fn penetration_of_diameter_and_circle() {
        let d = DomainModel::unit_disc();
        let c = Curve::segment(Point::c1(-0.9, 0.0), Point::c1(0.9, 0.0)).unwrap();
        let p = penetration_depth(&c, &d).unwrap();
        assert!((p.depth - 1.0).abs() < 1e-9 && p.at.norm() < 1e-6);
        let arc: Vec<Point> = (0..200)
            .map(|k| {
                let z = Complex64::from_polar(0.5, k as f64 * 0.01);
                Point::new(&[z]).unwrap()
            })
            .collect();
        let p = penetration_depth(&Curve::new(arc).unwrap(), &d).unwrap();
        assert!((p.depth - 0.5).abs() < 1e-4);
    }
}
