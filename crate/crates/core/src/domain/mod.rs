//! Concrete bounded domains in ℂⁿ with boundary-distance oracles.

mod ellipsoid;
mod polytope;
mod sampling;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::point::{Direction, Point};

pub use sampling::{PairRule, Separation};

/// One real half-space `Re⟨z, a⟩ < b` with `‖a‖ = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Face {
    pub normal: Point,
    pub offset: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum DomainKind {
    UnitDisc,
    UnitBall { n: usize },
    /// `{|z₁|² + |z₂|^{2m} < 1}` in ℂ².
    Ellipsoid { m: u32 },
    HalfspaceIntersection { faces: Vec<Face> },
}

/// Euclidean diameter, either exact or an upper bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Diameter {
    pub value: f64,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DomainModel {
    kind: DomainKind,
    label: String,
    dim: usize,
    /// A point with a certified inner ball of radius `inradius`.
    center: Point,
    inradius: f64,
    diameter: Diameter,
    /// Half-widths of an axis box containing the closure (for sampling).
    bbox: Vec<(f64, f64)>,
}

impl DomainModel {
    pub fn unit_disc() -> Self {
        Self {
            kind: DomainKind::UnitDisc,
            label: "disc".into(),
            dim: 1,
            center: Point::zero(1),
            inradius: 1.0,
            diameter: Diameter { value: 2.0, exact: true },
            bbox: alloc::vec![(-1.0, 1.0); 2],
        }
    }

    pub fn unit_ball(n: usize) -> Result<Self> {
        if !(1..=crate::point::MAX_DIM).contains(&n) {
            return Err(Error::InvalidDomain(format!("ball dimension {n} not in 1..=3")));
        }
        if n == 1 {
            return Ok(Self::unit_disc());
        }
        Ok(Self {
            kind: DomainKind::UnitBall { n },
            label: format!("ball{n}"),
            dim: n,
            center: Point::zero(n),
            inradius: 1.0,
            diameter: Diameter { value: 2.0, exact: true },
            bbox: alloc::vec![(-1.0, 1.0); 2 * n],
        })
    }

    pub fn ellipsoid(m: u32) -> Result<Self> {
        if m == 0 || m > 32 {
            return Err(Error::InvalidDomain(format!("ellipsoid exponent {m} not in 1..=32")));
        }
        Ok(Self {
            kind: DomainKind::Ellipsoid { m },
            label: format!("ellipsoid{m}"),
            dim: 2,
            center: Point::zero(2),
            inradius: 1.0,
            diameter: Diameter { value: 2.0 * ellipsoid::max_norm(m), exact: true },
            bbox: alloc::vec![(-1.0, 1.0); 4],
        })
    }

    /// Intersection of half-spaces `Re⟨z, aⱼ⟩ < bⱼ`. The co-vectors are
    /// normalised; the result must be bounded with nonempty interior.
    pub fn halfspaces(faces: &[Face]) -> Result<Self> {
        let Some(first) = faces.first() else {
            return Err(Error::InvalidDomain("no faces".into()));
        };
        let dim = first.normal.dim();
        let mut normed = Vec::with_capacity(faces.len());
        for f in faces {
            if f.normal.dim() != dim {
                return Err(Error::InvalidDomain("faces of mixed dimension".into()));
            }
            let n = f.normal.norm();
            if !(n > 0.0) || !f.offset.is_finite() {
                return Err(Error::InvalidDomain("degenerate face".into()));
            }
            normed.push(Face { normal: f.normal * (1.0 / n), offset: f.offset / n });
        }
        let d = 2 * dim;
        if normed.len() > 16 {
            return Err(Error::InvalidDomain("more than 16 faces".into()));
        }
        if !polytope::is_bounded(&normed, d) {
            return Err(Error::InvalidDomain("half-space intersection is unbounded".into()));
        }
        let verts = polytope::vertices(&normed, d);
        if verts.is_empty() {
            return Err(Error::InvalidDomain("half-space intersection is empty".into()));
        }
        let (center, inradius) = polytope::chebyshev_center(&normed, d)
            .ok_or_else(|| Error::InvalidDomain("no interior ball".into()))?;
        if !(inradius > 1e-9) {
            return Err(Error::InvalidDomain("no interior ball".into()));
        }
        let mut diam: f64 = 0.0;
        for (i, a) in verts.iter().enumerate() {
            for b in &verts[i + 1..] {
                diam = diam.max(a.dist(b));
            }
        }
        let bbox = (0..d)
            .map(|j| {
                let lo = verts.iter().map(|v| v.real(j)).fold(f64::INFINITY, f64::min);
                let hi = verts.iter().map(|v| v.real(j)).fold(f64::NEG_INFINITY, f64::max);
                (lo, hi)
            })
            .collect();
        Ok(Self {
            kind: DomainKind::HalfspaceIntersection { faces: normed },
            label: format!("halfspaces{}", faces.len()),
            dim,
            center,
            inradius,
            diameter: Diameter { value: diam, exact: true },
            bbox,
        })
    }

    /// The box `|Re zₖ| < s, |Im zₖ| < s` in ℂⁿ.
    pub fn cube(n: usize, s: f64) -> Result<Self> {
        let mut faces = Vec::new();
        for k in 0..n {
            for unit in [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)] {
                for sign in [1.0, -1.0] {
                    let mut a = Point::zero(n);
                    a.set_coord(k, unit * sign);
                    faces.push(Face { normal: a, offset: s });
                }
            }
        }
        Self::halfspaces(&faces)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn kind(&self) -> &DomainKind {
        &self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn inradius(&self) -> f64 {
        self.inradius
    }

    pub fn diameter(&self) -> Diameter {
        self.diameter
    }

    /// The exponent `m` of the model (1 for disc, ball and polytopes).
    pub fn exponent(&self) -> u32 {
        match self.kind {
            DomainKind::Ellipsoid { m } => m,
            _ => 1,
        }
    }

    /// Dini-smooth boundary. Polytopes are not.
    pub fn is_smooth(&self) -> bool {
        !matches!(self.kind, DomainKind::HalfspaceIntersection { .. })
    }

    /// Every shipped model is convex.
    pub fn is_convex(&self) -> bool {
        true
    }

    pub(crate) fn bbox(&self) -> &[(f64, f64)] {
        &self.bbox
    }

    fn check_dim(&self, p: &Point) -> Result<()> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: p.dim() });
        }
        Ok(())
    }

    pub fn contains(&self, p: &Point) -> Result<bool> {
        self.check_dim(p)?;
        Ok(self.contains_unchecked(p))
    }

    #[inline]
    pub(crate) fn contains_unchecked(&self, p: &Point) -> bool {
        match &self.kind {
            DomainKind::UnitDisc | DomainKind::UnitBall { .. } => p.norm_sqr() < 1.0,
            DomainKind::Ellipsoid { m } => ellipsoid::defining(p, *m) < 0.0,
            DomainKind::HalfspaceIntersection { faces } => {
                faces.iter().all(|f| p.hermitian(&f.normal).re < f.offset)
            }
        }
    }

    fn check_interior(&self, p: &Point) -> Result<()> {
        self.check_dim(p)?;
        if !self.contains_unchecked(p) {
            return Err(Error::OutsideDomain);
        }
        Ok(())
    }

    /// `δ(p)`: Euclidean distance to the boundary.
    pub fn boundary_distance(&self, p: &Point) -> Result<f64> {
        self.check_interior(p)?;
        Ok(match &self.kind {
            DomainKind::UnitDisc | DomainKind::UnitBall { .. } => 1.0 - p.norm(),
            DomainKind::Ellipsoid { m } => ellipsoid::project(p, *m).0,
            DomainKind::HalfspaceIntersection { faces } => faces
                .iter()
                .map(|f| f.offset - p.hermitian(&f.normal).re)
                .fold(f64::INFINITY, f64::min),
        })
    }

    /// Nearest boundary point together with the outward unit normal
    /// `(q − p)/‖q − p‖` and an ambiguity flag.
    pub fn project_to_boundary(&self, p: &Point) -> Result<(Point, Point, bool)> {
        self.check_interior(p)?;
        match &self.kind {
            DomainKind::UnitDisc | DomainKind::UnitBall { .. } => {
                let r = p.norm();
                if r == 0.0 {
                    let e = Point::basis(self.dim, 0);
                    return Ok((e, e, true));
                }
                let u = *p * (1.0 / r);
                Ok((u, u, false))
            }
            DomainKind::Ellipsoid { m } => {
                let (dist, q, non_unique) = ellipsoid::project(p, *m);
                let n = (q - *p) * (1.0 / dist);
                Ok((q, n, non_unique))
            }
            DomainKind::HalfspaceIntersection { faces } => {
                let slacks: Vec<f64> =
                    faces.iter().map(|f| f.offset - p.hermitian(&f.normal).re).collect();
                let (j, s) = slacks
                    .iter()
                    .copied()
                    .enumerate()
                    .fold((0, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
                let ties = slacks.iter().filter(|&&t| t - s <= 1e-12 * s.max(1.0)).count();
                let n = faces[j].normal;
                Ok((*p + n * s, n, ties > 1))
            }
        }
    }

    /// Unit direction `v` with `δ(p; v) = δ(p)` and a flag set when the
    /// minimiser is not unique.
    pub fn nearest_boundary_direction(&self, p: &Point) -> Result<(Direction, bool)> {
        let (_, n, non_unique) = self.project_to_boundary(p)?;
        Ok((Direction::new(n)?, non_unique))
    }

    /// `δ(p; v)`: smallest `|λ|`, `λ ∈ ℂ`, with `p + λv ∈ ∂Ω`.
    pub fn directional_boundary_distance(&self, p: &Point, v: &Direction) -> Result<f64> {
        self.check_interior(p)?;
        self.check_dim(v.vector())?;
        let vv = v.vector();
        Ok(match &self.kind {
            DomainKind::UnitDisc | DomainKind::UnitBall { .. } => {
                let nv2 = vv.norm_sqr();
                let pv = p.hermitian(vv);
                // slice {λ : ‖p + λv‖ < 1} is a disc with centre −⟨p,v⟩/‖v‖²
                let c = pv.norm() / nv2;
                let r = libm::sqrt((1.0 - p.norm_sqr()) * nv2 + pv.norm_sqr()) / nv2;
                r - c
            }
            DomainKind::Ellipsoid { m } => {
                let u = v.canonical_unit();
                ellipsoid::directional(p, &u, *m)? / v.norm()
            }
            DomainKind::HalfspaceIntersection { faces } => {
                let mut best = f64::INFINITY;
                for f in faces {
                    let av = vv.hermitian(&f.normal).norm();
                    if av > 0.0 {
                        best = best.min((f.offset - p.hermitian(&f.normal).re) / av);
                    }
                }
                if !best.is_finite() {
                    return Err(Error::UnboundedRay);
                }
                best
            }
        })
    }

    /// Convenience: `δ(p; b − a)` for a pair of points.
    pub fn chord_distance(&self, p: &Point, a: &Point, b: &Point) -> Result<f64> {
        self.directional_boundary_distance(p, &Direction::new(*b - *a)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2(a: f64, b: f64) -> Point {
        Point::from_reals(&[a, 0.0, b, 0.0]).unwrap()
    }

    #[test]
    fn membership() {
        let d = DomainModel::unit_disc();
        assert!(d.contains(&Point::c1(0.0, 0.0)).unwrap());
        assert!(!d.contains(&Point::c1(1.0, 0.0)).unwrap());
        let e = DomainModel::ellipsoid(2).unwrap();
        assert!(e.contains(&c2(0.9, 0.5)).unwrap());
        assert!(matches!(
            d.contains(&c2(0.0, 0.0)),
            Err(Error::DimensionMismatch { expected: 1, got: 2 })
        ));
    }

    #[test]
    fn boundary_distances() {
        let d = DomainModel::unit_disc();
        assert_eq!(d.boundary_distance(&Point::c1(0.0, 0.0)).unwrap(), 1.0);
        let cube = DomainModel::cube(1, 1.0).unwrap();
        assert!((cube.boundary_distance(&Point::c1(0.0, 0.0)).unwrap() - 1.0).abs() < 1e-15);
        let b = DomainModel::unit_ball(2).unwrap();
        assert!((b.boundary_distance(&c2(0.6, 0.0)).unwrap() - 0.4).abs() < 1e-15);
        assert_eq!(d.boundary_distance(&Point::c1(1.0, 0.0)), Err(Error::OutsideDomain));
    }

    #[test]
    fn directional_examples() {
        let d = DomainModel::unit_disc();
        let one = Direction::new(Point::c1(1.0, 0.0)).unwrap();
        assert!((d.directional_boundary_distance(&Point::c1(0.0, 0.0), &one).unwrap() - 1.0).abs() < 1e-15);
        let cube = DomainModel::cube(1, 1.0).unwrap();
        assert!((cube.directional_boundary_distance(&Point::c1(0.0, 0.0), &one).unwrap() - 1.0).abs() < 1e-15);
        let b = DomainModel::unit_ball(2).unwrap();
        let e2 = Direction::new(c2(0.0, 1.0)).unwrap();
        let got = b.directional_boundary_distance(&c2(0.5, 0.0), &e2).unwrap();
        assert!((got - libm::sqrt(0.75)).abs() < 1e-15);
    }

    #[test]
    fn ellipsoid_m1_matches_ball() {
        let e = DomainModel::ellipsoid(1).unwrap();
        let b = DomainModel::unit_ball(2).unwrap();
        let p = Point::new(&[Complex64::new(0.3, -0.2), Complex64::new(0.1, 0.5)]).unwrap();
        let v = Direction::new(Point::new(&[Complex64::new(0.7, 0.1), Complex64::new(-0.2, 0.4)]).unwrap()).unwrap();
        let de = e.directional_boundary_distance(&p, &v).unwrap();
        let db = b.directional_boundary_distance(&p, &v).unwrap();
        assert!((de - db).abs() < 1e-8 * db, "{de} {db}");
        let pe = e.boundary_distance(&p).unwrap();
        let pb = b.boundary_distance(&p).unwrap();
        assert!((pe - pb).abs() < 1e-10);
    }

    #[test]
    fn nearest_directions() {
        let d = DomainModel::unit_disc();
        let (v, nu) = d.nearest_boundary_direction(&Point::c1(0.5, 0.0)).unwrap();
        assert!((*v.vector() - Point::c1(1.0, 0.0)).norm() < 1e-15 && !nu);
        let b = DomainModel::unit_ball(2).unwrap();
        let (v, _) = b.nearest_boundary_direction(&c2(0.6, 0.0)).unwrap();
        assert!((*v.vector() - c2(1.0, 0.0)).norm() < 1e-15);
        let e = DomainModel::ellipsoid(2).unwrap();
        let (v, nu) = e.nearest_boundary_direction(&c2(0.9, 0.0)).unwrap();
        assert!((*v.vector() - c2(1.0, 0.0)).norm() < 1e-6 && !nu, "{v:?}");
        let (_, nu) = d.nearest_boundary_direction(&Point::c1(0.0, 0.0)).unwrap();
        assert!(nu);
    }

    #[test]
    fn diameters() {
        assert_eq!(DomainModel::unit_disc().diameter().value, 2.0);
        assert_eq!(DomainModel::unit_ball(2).unwrap().diameter().value, 2.0);
        let cube = DomainModel::cube(1, 1.0).unwrap();
        assert!((cube.diameter().value - 2.0 * core::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn unbounded_halfspaces_rejected() {
        let f = Face { normal: Point::c1(1.0, 0.0), offset: 1.0 };
        assert!(matches!(DomainModel::halfspaces(&[f]), Err(Error::InvalidDomain(_))));
    }
}
