//! Seeded sampling of point pairs in a boundary-distance band.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::DomainModel;
use crate::error::{Error, Result};
use crate::point::Point;

/// How the second point of a pair relates to the first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Separation {
    Independent,
    /// `‖x − y‖ ≤ max`.
    Within { max: f64 },
    /// `‖x − y‖ ≥ min`.
    Apart { min: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairRule {
    pub count: usize,
    pub band: (f64, f64),
    pub separation: Separation,
    pub seed: u64,
}

const MAX_ATTEMPTS: usize = 10_000;

impl DomainModel {
    /// Uniform sample of the domain by rejection from its bounding box.
    pub fn sample_interior<R: Rng>(&self, rng: &mut R) -> Point {
        let d = 2 * self.dim();
        loop {
            let mut reals = [0.0f64; 6];
            for (j, r) in reals.iter_mut().enumerate().take(d) {
                let (lo, hi) = self.bbox()[j];
                *r = rng.gen_range(lo..hi);
            }
            if let Ok(p) = Point::from_reals(&reals[..d]) {
                if self.contains_unchecked(&p) {
                    return p;
                }
            }
        }
    }

    /// Moves an interior point onto the inward normal line of its nearest
    /// boundary point at a log-uniform depth in `band`.
    fn offset_into_band<R: Rng>(&self, u: &Point, band: (f64, f64), rng: &mut R) -> Option<Point> {
        let (q, n, _) = self.project_to_boundary(u).ok()?;
        let t = libm::exp(rng.gen_range(libm::log(band.0)..=libm::log(band.1)));
        let p = q - n * t;
        let d = self.boundary_distance(&p).ok()?;
        (d >= band.0 && d <= band.1).then_some(p)
    }

    pub(crate) fn sample_in_band<R: Rng>(&self, band: (f64, f64), rng: &mut R) -> Result<Point> {
        for _ in 0..MAX_ATTEMPTS {
            let u = self.sample_interior(rng);
            if let Some(p) = self.offset_into_band(&u, band, rng) {
                return Ok(p);
            }
        }
        Err(Error::InfeasibleBand { lo: band.0, hi: band.1 })
    }

    fn sample_near<R: Rng>(&self, x: &Point, radius: f64, band: (f64, f64), rng: &mut R) -> Result<Point> {
        let d = 2 * self.dim();
        for _ in 0..MAX_ATTEMPTS {
            let mut w = [0.0f64; 6];
            for r in w.iter_mut().take(d) {
                *r = rng.gen_range(-radius..radius);
            }
            let Ok(w) = Point::from_reals(&w[..d]) else { continue };
            let u = *x + w;
            if !self.contains_unchecked(&u) {
                continue;
            }
            if let Some(p) = self.offset_into_band(&u, band, rng) {
                if p.dist(x) <= radius {
                    return Ok(p);
                }
            }
        }
        Err(Error::InfeasibleBand { lo: band.0, hi: band.1 })
    }

    /// `rule.count` pairs with both points in the band
    /// `δ ∈ [band.0, band.1]`; deterministic in `rule.seed`.
    pub fn sample_pairs(&self, rule: &PairRule) -> Result<Vec<(Point, Point)>> {
        let (lo, hi) = rule.band;
        if !(lo > 0.0 && lo <= hi && hi <= self.inradius()) {
            return Err(Error::InfeasibleBand { lo, hi });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(rule.seed);
        let mut out = Vec::with_capacity(rule.count);
        while out.len() < rule.count {
            let x = self.sample_in_band(rule.band, &mut rng)?;
            let y = match rule.separation {
                Separation::Independent => self.sample_in_band(rule.band, &mut rng)?,
                Separation::Within { max } => self.sample_near(&x, max, rule.band, &mut rng)?,
                Separation::Apart { min } => {
                    let mut found = None;
                    for _ in 0..MAX_ATTEMPTS {
                        let y = self.sample_in_band(rule.band, &mut rng)?;
                        if y.dist(&x) >= min {
                            found = Some(y);
                            break;
                        }
                    }
                    found.ok_or(Error::InfeasibleBand { lo, hi })?
                }
            };
            out.push((x, y));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disc_band_and_determinism() {
        let d = DomainModel::unit_disc();
        let rule = PairRule { count: 2, band: (0.05, 0.15), separation: Separation::Independent, seed: 7 };
        let a = d.sample_pairs(&rule).unwrap();
        assert_eq!(a.len(), 2);
        for (x, y) in &a {
            for p in [x, y] {
                let del = 1.0 - p.norm();
                assert!((0.05..=0.15).contains(&del));
            }
        }
        assert_eq!(a, d.sample_pairs(&rule).unwrap());
    }

    #[test]
    fn band_outside_inradius_rejected() {
        let d = DomainModel::unit_disc();
        let rule = PairRule { count: 1, band: (0.5, 1.5), separation: Separation::Independent, seed: 1 };
        assert!(matches!(d.sample_pairs(&rule), Err(Error::InfeasibleBand { .. })));
    }

    #[test]
    fn within_separation() {
        let d = DomainModel::unit_ball(2).unwrap();
        let rule = PairRule { count: 20, band: (1e-3, 1e-2), separation: Separation::Within { max: 0.05 }, seed: 3 };
        for (x, y) in d.sample_pairs(&rule).unwrap() {
            assert!(x.dist(&y) <= 0.05);
        }
    }
}
