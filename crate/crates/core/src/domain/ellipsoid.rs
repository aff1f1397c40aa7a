//! Oracles for the complex ellipsoid `{|z₁|² + |z₂|^{2m} < 1}`.
//!
//! The domain is Reinhardt, so the nearest boundary point of `(z₁, z₂)`
//! keeps the arguments of the coordinates and the problem reduces to the
//! real quadrant curve `x² + y^{2m} = 1`.

use core::cell::Cell;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::{brent_min, golden_min, powi};
use crate::point::Point;

/// `|z₁|² + |z₂|^{2m} − 1`.
#[inline]
pub(crate) fn defining(p: &Point, m: u32) -> f64 {
    p.coord(0).norm_sqr() + powi(p.coord(1).norm_sqr(), m) - 1.0
}

const CHART_SAMPLES: usize = 64;

/// Nearest point `(x, y)` on `x² + y^{2m} = 1`, `x, y ≥ 0`, to `(r1, r2)`,
/// together with the distance and whether a second, distinct minimiser
/// attains the same distance.
pub(crate) fn nearest_on_curve(r1: f64, r2: f64, m: u32) -> (f64, f64, f64, bool) {
    let inv = 1.0 / (2.0 * m as f64);
    let chart_a = move |y: f64| (libm::sqrt((1.0 - powi(y * y, m)).max(0.0)), y);
    let chart_b = move |x: f64| (x, libm::pow((1.0 - x * x).max(0.0), inv));
    let y_split = libm::pow(0.5, inv);
    let x_split = core::f64::consts::FRAC_1_SQRT_2;
    let d2 = |(x, y): (f64, f64)| (x - r1) * (x - r1) + (y - r2) * (y - r2);

    // (value, x, y) for each local minimum of the two scans
    let mut minima: [(f64, f64, f64); 4] = [(f64::INFINITY, 0.0, 0.0); 4];
    let mut push = |v: f64, x: f64, y: f64| {
        let slot = minima
            .iter()
            .enumerate()
            .max_by(|a, b| a.1 .0.total_cmp(&b.1 .0))
            .map(|(i, _)| i)
            .unwrap_or(0);
        if v < minima[slot].0 {
            minima[slot] = (v, x, y);
        }
    };
    for chart in 0..2 {
        let hi = if chart == 0 { y_split } else { x_split };
        let eval = |t: f64| if chart == 0 { chart_a(t) } else { chart_b(t) };
        let step = hi / CHART_SAMPLES as f64;
        let vals: [f64; CHART_SAMPLES + 1] =
            core::array::from_fn(|k| d2(eval(k as f64 * step)));
        for k in 0..=CHART_SAMPLES {
            let left = if k > 0 { vals[k - 1] } else { f64::INFINITY };
            let right = if k < CHART_SAMPLES { vals[k + 1] } else { f64::INFINITY };
            if vals[k] <= left && vals[k] <= right {
                let a = (k as f64 - 1.0).max(0.0) * step;
                let b = ((k + 1) as f64).min(CHART_SAMPLES as f64) * step;
                let (t, v) = golden_min(|t| d2(eval(t)), a, b, 1e-14, 120);
                let (x, y) = eval(t);
                push(v, x, y);
            }
        }
    }
    let mut best = minima[0];
    for c in &minima[1..] {
        if c.0 < best.0 {
            best = *c;
        }
    }
    let non_unique = minima.iter().any(|c| {
        c.0.is_finite()
            && (c.0 - best.0).abs() <= 1e-12 * best.0.max(1e-300)
            && libm::hypot(c.1 - best.1, c.2 - best.2) > 1e-6
    });
    (best.1, best.2, libm::sqrt(best.0), non_unique)
}

fn lift(r: f64, z: Complex64) -> Complex64 {
    let n = z.norm();
    if n > 0.0 {
        z * (r / n)
    } else {
        Complex64::new(r, 0.0)
    }
}

/// Boundary distance, nearest boundary point and an ambiguity flag.
pub(crate) fn project(p: &Point, m: u32) -> (f64, Point, bool) {
    let (z1, z2) = (p.coord(0), p.coord(1));
    let (x, y, dist, mut non_unique) = nearest_on_curve(z1.norm(), z2.norm(), m);
    // a zero coordinate with a nonzero projected modulus leaves a circle of
    // nearest points
    if (z1.norm() == 0.0 && x > 1e-9) || (z2.norm() == 0.0 && y > 1e-9) {
        non_unique = true;
    }
    let mut q = *p;
    q.set_coord(0, lift(x, z1));
    q.set_coord(1, lift(y, z2));
    (dist, q, non_unique)
}

/// Smallest `r > 0` with `p + r·w` on the boundary, warm-started at `guess`.
fn radial_root(p: &Point, w: &Point, m: u32, guess: f64) -> Result<f64> {
    let g = |r: f64| -> (f64, f64) {
        let z1 = p.coord(0) + w.coord(0) * r;
        let z2 = p.coord(1) + w.coord(1) * r;
        let s = z2.norm_sqr();
        let val = z1.norm_sqr() + powi(s, m) - 1.0;
        let d1 = 2.0 * (z1 * w.coord(0).conj()).re;
        let d2 = 2.0 * m as f64 * powi(s, m - 1) * (z2 * w.coord(1).conj()).re;
        (val, d1 + d2)
    };
    let mut lo = 0.0;
    let mut hi = guess.max(1e-12);
    let mut guard = 0;
    while g(hi).0 <= 0.0 {
        lo = hi;
        hi *= 1.5;
        guard += 1;
        if guard > 200 {
            return Err(Error::UnboundedRay);
        }
    }
    // g is convex along the ray with g(0) < 0, so Newton from the right
    // decreases monotonically onto the root.
    let mut r = hi;
    for _ in 0..200 {
        let (val, der) = g(r);
        if val <= 0.0 {
            // rounding put us on the root
            return Ok(r);
        }
        let next = r - val / der;
        if !(next > lo) || !next.is_finite() {
            r = 0.5 * (lo + r);
            continue;
        }
        if r - next <= 1e-15 * r {
            return Ok(next);
        }
        r = next;
    }
    Ok(r)
}

const POLAR_ANGLES: usize = 64;

/// `δ(p; u)` for a unit direction `u`: minimum over `arg λ` of the radial
/// exit distance.
pub(crate) fn directional(p: &Point, u: &Point, m: u32) -> Result<f64> {
    let ray = |theta: f64| u.scale_c(Complex64::from_polar(1.0, theta));
    let mut radii = [0.0f64; POLAR_ANGLES];
    let mut guess = 0.5;
    for (k, r) in radii.iter_mut().enumerate() {
        let theta = 2.0 * PI * k as f64 / POLAR_ANGLES as f64;
        *r = radial_root(p, &ray(theta), m, guess)?;
        guess = *r;
    }
    let mut cands: [(f64, usize); 3] = [(f64::INFINITY, 0); 3];
    for k in 0..POLAR_ANGLES {
        let prev = radii[(k + POLAR_ANGLES - 1) % POLAR_ANGLES];
        let next = radii[(k + 1) % POLAR_ANGLES];
        if radii[k] <= prev && radii[k] <= next {
            let worst = (0..3).max_by(|&a, &b| cands[a].0.total_cmp(&cands[b].0)).unwrap_or(0);
            if radii[k] < cands[worst].0 {
                cands[worst] = (radii[k], k);
            }
        }
    }
    let mut best = radii.iter().copied().fold(f64::INFINITY, f64::min);
    let step = 2.0 * PI / POLAR_ANGLES as f64;
    let failed = Cell::new(false);
    // a sampled local minimum 20% above the best cannot win after refinement
    // on a 64-angle grid of a smooth function
    let cutoff = 1.2 * best;
    for &(v, k) in cands.iter().filter(|c| c.0 <= cutoff) {
        let warm = Cell::new(v);
        let theta0 = k as f64 * step;
        let (_, val) = brent_min(
            |t| match radial_root(p, &ray(t), m, warm.get()) {
                Ok(r) => {
                    warm.set(r);
                    r
                }
                Err(_) => {
                    failed.set(true);
                    f64::INFINITY
                }
            },
            theta0 - step,
            theta0 + step,
            1e-10,
            100,
        );
        best = best.min(val);
    }
    if failed.get() {
        return Err(Error::UnboundedRay);
    }
    Ok(best)
}

/// Largest Euclidean norm on the domain; the diameter is twice this by
/// central symmetry.
pub(crate) fn max_norm(m: u32) -> f64 {
    if m == 1 {
        return 1.0;
    }
    // maximise 1 − y^{2m} + y²: critical point y^{2m−2} = 1/m
    let y = libm::pow(1.0 / m as f64, 1.0 / (2.0 * m as f64 - 2.0));
    libm::sqrt(1.0 - powi(y * y, m) + y * y)
}
