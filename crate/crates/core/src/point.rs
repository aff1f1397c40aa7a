//! Points and direction vectors in ℂⁿ for n ≤ 3.

use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest supported complex dimension.
pub const MAX_DIM: usize = 3;

/// A vector of `dim` complex coordinates. Used both for points of a domain
/// and for tangent vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    coords: [Complex64; MAX_DIM],
    dim: usize,
}

impl Point {
    pub fn new(coords: &[Complex64]) -> Result<Self> {
        let dim = coords.len();
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::OutOfRange(alloc::format!(
                "point dimension {dim} not in 1..={MAX_DIM}"
            )));
        }
        if coords.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::OutOfRange("non-finite coordinate".into()));
        }
        let mut c = [Complex64::new(0.0, 0.0); MAX_DIM];
        c[..dim].copy_from_slice(coords);
        Ok(Self { coords: c, dim })
    }

    /// Builds a point from interleaved `[re₁, im₁, re₂, im₂, …]`.
    pub fn from_reals(reals: &[f64]) -> Result<Self> {
        if reals.len() % 2 != 0 {
            return Err(Error::OutOfRange("odd number of real coordinates".into()));
        }
        let mut c = [Complex64::new(0.0, 0.0); MAX_DIM];
        let dim = reals.len() / 2;
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::OutOfRange(alloc::format!(
                "point dimension {dim} not in 1..={MAX_DIM}"
            )));
        }
        for k in 0..dim {
            c[k] = Complex64::new(reals[2 * k], reals[2 * k + 1]);
        }
        Self::new(&c[..dim])
    }

    pub fn zero(dim: usize) -> Self {
        debug_assert!(dim >= 1 && dim <= MAX_DIM);
        Self { coords: [Complex64::new(0.0, 0.0); MAX_DIM], dim }
    }

    /// The real point `x` of ℂ¹.
    pub fn c1(re: f64, im: f64) -> Self {
        let mut p = Self::zero(1);
        p.coords[0] = Complex64::new(re, im);
        p
    }

    /// Unit basis vector `e_k` (0-based `k`).
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut p = Self::zero(dim);
        p.coords[k] = Complex64::new(1.0, 0.0);
        p
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn coords(&self) -> &[Complex64] {
        &self.coords[..self.dim]
    }

    #[inline]
    pub fn coord(&self, k: usize) -> Complex64 {
        self.coords[k]
    }

    #[inline]
    pub fn set_coord(&mut self, k: usize, z: Complex64) {
        self.coords[k] = z;
    }

    /// Real coordinate `j` of the underlying ℝ²ⁿ vector.
    #[inline]
    pub fn real(&self, j: usize) -> f64 {
        let z = self.coords[j / 2];
        if j % 2 == 0 {
            z.re
        } else {
            z.im
        }
    }

    #[inline]
    pub fn set_real(&mut self, j: usize, value: f64) {
        let z = &mut self.coords[j / 2];
        if j % 2 == 0 {
            z.re = value;
        } else {
            z.im = value;
        }
    }

    pub fn to_reals(&self) -> alloc::vec::Vec<f64> {
        self.coords().iter().flat_map(|z| [z.re, z.im]).collect()
    }

    #[inline]
    pub fn norm_sqr(&self) -> f64 {
        self.coords().iter().map(|z| z.norm_sqr()).sum()
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    /// Hermitian product ⟨self, other⟩ = Σ selfₖ·conj(otherₖ).
    #[inline]
    pub fn hermitian(&self, other: &Point) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..self.dim {
            acc += self.coords[k] * other.coords[k].conj();
        }
        acc
    }

    #[inline]
    pub fn dist(&self, other: &Point) -> f64 {
        (*self - *other).norm()
    }

    #[inline]
    pub fn scale_c(&self, c: Complex64) -> Point {
        let mut out = *self;
        for k in 0..self.dim {
            out.coords[k] = self.coords[k] * c;
        }
        out
    }

    /// `self + t·(other − self)`.
    #[inline]
    pub fn lerp(&self, other: &Point, t: f64) -> Point {
        *self + (*other - *self) * t
    }

    pub fn is_finite(&self) -> bool {
        self.coords()
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(mut self, rhs: Point) -> Point {
        for k in 0..self.dim {
            self.coords[k] += rhs.coords[k];
        }
        self
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(mut self, rhs: Point) -> Point {
        for k in 0..self.dim {
            self.coords[k] -= rhs.coords[k];
        }
        self
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(mut self, rhs: f64) -> Point {
        for k in 0..self.dim {
            self.coords[k] *= rhs;
        }
        self
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        self * -1.0
    }
}

/// A nonzero tangent vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction(Point);

impl Direction {
    pub fn new(v: Point) -> Result<Self> {
        let n = v.norm();
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::ZeroDirection);
        }
        Ok(Self(v))
    }

    #[inline]
    pub fn vector(&self) -> &Point {
        &self.0
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    /// Unit vector with the phase fixed so that the largest-modulus
    /// coordinate is real and positive. Complex multiples of `self` map to
    /// the same representative.
    pub fn canonical_unit(&self) -> Point {
        let v = self.0;
        let mut best = 0;
        let mut best_mod = -1.0;
        for (k, z) in v.coords().iter().enumerate() {
            // ties resolved toward the lower index; 1e-12 margin keeps the
            // choice stable under rounding of complex rescaling
            let m = z.norm();
            if m > best_mod * (1.0 + 1e-12) {
                best = k;
                best_mod = m;
            }
        }
        let z = v.coord(best);
        let phase = z.conj() / z.norm();
        v.scale_c(phase) * (1.0 / v.norm())
    }
}

impl From<Direction> for Point {
    fn from(d: Direction) -> Point {
        d.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermitian_product_conjugates_second_argument() {
        let a = Point::new(&[Complex64::new(0.0, 1.0)]).unwrap();
        let b = Point::new(&[Complex64::new(0.0, 1.0)]).unwrap();
        assert_eq!(a.hermitian(&b), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert!(Point::new(&[]).is_err());
        assert!(Point::from_reals(&[1.0; 8]).is_err());
        assert!(Point::from_reals(&[1.0; 3]).is_err());
    }

    #[test]
    fn canonical_unit_is_phase_invariant() {
        let v = Point::new(&[Complex64::new(0.3, -0.2), Complex64::new(0.1, 0.9)]).unwrap();
        let c = Complex64::new(-2.0, 0.7);
        let a = Direction::new(v).unwrap().canonical_unit();
        let b = Direction::new(v.scale_c(c)).unwrap().canonical_unit();
        assert!((a - b).norm() < 1e-14);
        assert!((a.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zero_direction_rejected() {
        assert_eq!(Direction::new(Point::zero(2)), Err(Error::ZeroDirection));
    }
}
