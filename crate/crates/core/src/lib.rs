//! Numerical Kobayashi geometry on concrete model domains in ℂⁿ.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! - [`domain`]: model domains (disc, ball, complex ellipsoid, polytopes)
//!   with boundary-distance and directional boundary-distance oracles.
//! - [`goldilocks`]: the ω/g calculus of strongly Goldilocks weights,
//!   admissibility checks, g-inversion, h-functions and calibration probes.
//! - [`metric`]: Kobayashi–Royden estimates, curve lengths, closed-form
//!   distance bounds and exact disc/ball oracles.
//! - [`geodesic`]: lattice shortest paths refined into λ-geodesics with a
//!   certified λ.
//! - [`lab`]: shell decompositions and inequality verifiers producing
//!   [`lab::VerificationRecord`]s.
//!
//! All computations are pure and operate on immutable values, so every type
//! here can be shared across threads for read-only use.

#![no_std]

extern crate alloc;

pub mod curve;
pub mod domain;
pub mod error;
pub mod geodesic;
pub mod goldilocks;
pub mod lab;

pub mod metric;
pub mod numeric;
pub mod point;

pub use curve::Curve;
pub use domain::{DomainKind, DomainModel, Face, PairRule, Separation};
pub use error::{Error, Result};
pub use geodesic::{GeodesicResult, GeodesicSolver, SolverConfig};
pub use goldilocks::{GoldilocksProfile, OmegaForm, OmegaSpec};
pub use metric::{BoundBundle, Estimator, MetricEstimate, MetricField};
pub use point::{Direction, Point};
