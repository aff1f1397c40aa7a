//! Polylines in ℂⁿ.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::point::Point;

/// An ordered polyline with cumulative Euclidean arc length.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    vertices: Vec<Point>,
    cum: Vec<f64>,
}

impl Curve {
    /// Builds a curve, dropping consecutive duplicate vertices.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let Some(first) = vertices.first() else {
            return Err(Error::InsufficientData("curve needs at least one vertex".into()));
        };
        let dim = first.dim();
        let mut vs: Vec<Point> = Vec::with_capacity(vertices.len());
        for v in vertices {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: v.dim() });
            }
            if !v.is_finite() {
                return Err(Error::OutOfRange("non-finite vertex".into()));
            }
            if vs.last().map_or(true, |l: &Point| *l != v) {
                vs.push(v);
            }
        }
        let mut cum = Vec::with_capacity(vs.len());
        let mut acc = 0.0;
        cum.push(0.0);
        for w in vs.windows(2) {
            acc += w[0].dist(&w[1]);
            cum.push(acc);
        }
        Ok(Self { vertices: vs, cum })
    }

    pub fn segment(a: Point, b: Point) -> Result<Self> {
        Self::new(alloc::vec![a, b])
    }

    /// `n ≥ 2` equally spaced vertices on the segment `[a, b]`.
    pub fn straight(a: Point, b: Point, n: usize) -> Result<Self> {
        let n = n.max(2);
        Self::new((0..n).map(|k| a.lerp(&b, k as f64 / (n - 1) as f64)).collect())
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn cum_param(&self) -> &[f64] {
        &self.cum
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Single-vertex curve.
    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 2
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn start(&self) -> Point {
        self.vertices[0]
    }

    pub fn end(&self) -> Point {
        *self.vertices.last().expect("nonempty")
    }

    pub fn euclid_length(&self) -> f64 {
        *self.cum.last().expect("nonempty")
    }

    pub fn reversed(&self) -> Self {
        let mut vs = self.vertices.clone();
        vs.reverse();
        Self::new(vs).expect("reversal of a valid curve")
    }

    /// Point at arc-length parameter `s`, clamped to `[0, L]`.
    pub fn point_at(&self, s: f64) -> Point {
        let (i, t) = self.locate(s);
        if i + 1 >= self.vertices.len() {
            return self.end();
        }
        self.vertices[i].lerp(&self.vertices[i + 1], t)
    }

    /// Segment index and local fraction for arc-length `s`.
    pub fn locate(&self, s: f64) -> (usize, f64) {
        let l = self.euclid_length();
        if self.vertices.len() < 2 || s <= 0.0 {
            return (0, 0.0);
        }
        if s >= l {
            return (self.vertices.len() - 2, 1.0);
        }
        let i = self.cum.partition_point(|&c| c <= s).saturating_sub(1);
        let i = i.min(self.vertices.len() - 2);
        let seg = self.cum[i + 1] - self.cum[i];
        (i, if seg > 0.0 { (s - self.cum[i]) / seg } else { 0.0 })
    }

    /// The sub-curve between arc-length parameters `s0 ≤ s1`, with the cut
    /// points inserted as new end vertices.
    pub fn sub_curve(&self, s0: f64, s1: f64) -> Self {
        let (s0, s1) = (s0.max(0.0), s1.min(self.euclid_length()));
        let mut vs = alloc::vec![self.point_at(s0)];
        for (v, &c) in self.vertices.iter().zip(&self.cum) {
            if c > s0 && c < s1 {
                vs.push(*v);
            }
        }
        vs.push(self.point_at(s1.max(s0)));
        Self::new(vs).expect("sub-curve of a valid curve")
    }

    /// Sub-curve between vertex indices `i ≤ j`.
    pub fn slice(&self, i: usize, j: usize) -> Self {
        Self::new(self.vertices[i..=j].to_vec()).expect("slice of a valid curve")
    }

    /// Inserts `k − 1` evenly spaced points inside every segment.
    pub fn subdivided(&self, k: usize) -> Self {
        let k = k.max(1);
        let mut vs = Vec::with_capacity(self.vertices.len() * k);
        for w in self.vertices.windows(2) {
            for j in 0..k {
                vs.push(w[0].lerp(&w[1], j as f64 / k as f64));
            }
        }
        vs.push(self.end());
        Self::new(vs).expect("subdivision of a valid curve")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths() {
        let single = Curve::new(alloc::vec![Point::c1(0.3, 0.0)]).unwrap();
        assert_eq!(single.euclid_length(), 0.0);
        let c = Curve::new(alloc::vec![Point::c1(0.0, 0.0), Point::c1(0.0, 1.0), Point::c1(1.0, 1.0)]).unwrap();
        assert_eq!(c.euclid_length(), 2.0);
    }

    #[test]
    fn sub_curves_concatenate() {
        let c = Curve::new(alloc::vec![Point::c1(0.0, 0.0), Point::c1(0.0, 1.0), Point::c1(1.0, 1.0)]).unwrap();
        let a = c.sub_curve(0.0, 0.7);
        let b = c.sub_curve(0.7, 1.6);
        let d = c.sub_curve(1.6, 2.0);
        let total = a.euclid_length() + b.euclid_length() + d.euclid_length();
        assert!((total - 2.0).abs() < 1e-15);
        assert_eq!(b.len(), 3);
    }

    #[test]
    fn duplicates_removed() {
        let p = Point::c1(0.1, 0.0);
        let c = Curve::new(alloc::vec![p, p, Point::c1(0.2, 0.0)]).unwrap();
        assert_eq!(c.len(), 2);
    }
}
