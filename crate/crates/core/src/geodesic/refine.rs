//! Local descent of polyline κ-length.

use alloc::vec::Vec;

use crate::curve::Curve;
use crate::metric::{curve_kappa_length, segment_length_gl6, MetricField, Side};
use crate::point::Point;

/// Knobs of [`refine_curve_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefineParams {
    pub iterations: usize,
    /// Target κ-length of one segment at the finest level.
    pub segment_target: f64,
    pub max_vertices: usize,
}

impl Default for RefineParams {
    fn default() -> Self {
        Self { iterations: 40, segment_target: 0.25, max_vertices: 400 }
    }
}

fn weight(field: &MetricField, a: &Point, b: &Point) -> f64 {
    segment_length_gl6(field, a, b, Side::Upper).unwrap_or(f64::INFINITY)
}

/// Midpoint splits until each segment is κ-short and no longer than the
/// boundary distance at its ends (so six-point quadrature resolves it).
fn subdivide(field: &MetricField, vs: &mut Vec<Point>, target: f64, max_vertices: usize) {
    let domain = field.domain();
    let delta = |p: &Point| domain.boundary_distance(p).unwrap_or(0.0);
    loop {
        let mut out = Vec::with_capacity(2 * vs.len());
        let mut split = false;
        let mut budget = max_vertices.saturating_sub(vs.len());
        out.push(vs[0]);
        for w in vs.windows(2) {
            let long = weight(field, &w[0], &w[1]) > target || w[0].dist(&w[1]) > delta(&w[0]).min(delta(&w[1]));
            if long && budget > 0 {
                out.push(w[0].lerp(&w[1], 0.5));
                budget -= 1;
                split = true;
            }
            out.push(w[1]);
        }
        *vs = out;
        if !split {
            return;
        }
    }
}

struct Sweep<'a> {
    field: &'a MetricField,
    step: Vec<f64>,
}

impl Sweep<'_> {
    fn local(&self, a: &Point, p: &Point, b: &Point) -> f64 {
        weight(self.field, a, p) + weight(self.field, p, b)
    }

    /// One Gauss–Seidel pass; every accepted move strictly lowers the local
    /// (and hence the total) quadrature length.
    fn pass(&mut self, vs: &mut Vec<Point>, shortcut_cap: f64) -> bool {
        let domain = self.field.domain();
        let d = 2 * domain.dim();
        let mut moved = false;
        let mut i = 1;
        while i + 1 < vs.len() {
            let (a, p, b) = (vs[i - 1], vs[i], vs[i + 1]);
            let f0 = self.local(&a, &p, &b);
            // shortcut: drop the vertex when the chord is strictly shorter
            let chord = weight(self.field, &a, &b);
            if chord < f0 && chord <= shortcut_cap {
                vs.remove(i);
                self.step.remove(i);
                moved = true;
                continue;
            }
            let scale = p.dist(&a).min(p.dist(&b));
            let h = 1e-5 * scale;
            let mut g = [0.0f64; 6];
            for (j, gj) in g.iter_mut().enumerate().take(d) {
                let mut hi = p;
                hi.set_real(j, p.real(j) + h);
                let mut lo = p;
                lo.set_real(j, p.real(j) - h);
                *gj = (self.local(&a, &hi, &b) - self.local(&a, &lo, &b)) / (2.0 * h);
            }
            let gn = libm::sqrt(g.iter().map(|v| v * v).sum::<f64>());
            if !(gn > 0.0) || !gn.is_finite() {
                i += 1;
                continue;
            }
            let cap = 0.5 * scale;
            if self.step[i] <= 0.0 || self.step[i] > cap {
                self.step[i] = 0.25 * cap;
            }
            for _ in 0..4 {
                let mut q = p;
                for (j, gj) in g.iter().enumerate().take(d) {
                    q.set_real(j, p.real(j) - self.step[i] * gj / gn);
                }
                if domain.contains_unchecked(&q) && self.local(&a, &q, &b) < f0 {
                    vs[i] = q;
                    self.step[i] = (self.step[i] * 1.5).min(cap);
                    moved = true;
                    break;
                }
                self.step[i] *= 0.3;
            }
            i += 1;
        }
        moved
    }
}

/// [`refine_curve_with`] using default targets.
pub fn refine_curve(curve: &Curve, field: &MetricField, iterations: usize) -> Curve {
    refine_curve_with(curve, field, &RefineParams { iterations, ..RefineParams::default() })
}

/// Coarse-to-fine descent of the upper κ-length with fixed endpoints. The
/// output is returned only if its adaptive-quadrature length is strictly
/// below that of the input, so the length never increases.
pub fn refine_curve_with(curve: &Curve, field: &MetricField, params: &RefineParams) -> Curve {
    if curve.is_degenerate() || params.iterations == 0 {
        return curve.clone();
    }
    let Ok(l_in) = curve_kappa_length(field, curve, Side::Upper) else { return curve.clone() };
    let mut vs = curve.vertices().to_vec();
    let targets = [4.0 * params.segment_target, 2.0 * params.segment_target, params.segment_target];
    let per_level = params.iterations.div_ceil(targets.len());
    let mut left = params.iterations;
    for &t in &targets {
        subdivide(field, &mut vs, t, params.max_vertices);
        let mut sweep = Sweep { field, step: alloc::vec![0.0; vs.len()] };
        for _ in 0..per_level.min(left) {
            left -= 1;
            if !sweep.pass(&mut vs, 1.5 * t) {
                break;
            }
        }
    }
    let Ok(out) = Curve::new(vs) else { return curve.clone() };
    match curve_kappa_length(field, &out, Side::Upper) {
        Ok(l_out) if l_out < l_in => out,
        _ => curve.clone(),
    }
}
