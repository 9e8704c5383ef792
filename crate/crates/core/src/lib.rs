//! Numerical toolkit for barycenters of measures on hyperbolic space H^d.
//!
//! The public data model is the upper half-space chart: a point is a vector
//! of chart coordinates whose last entry is the height. Internally the exact
//! geometric primitives (exponential and logarithm maps, parallel transport,
//! projections) route through the Minkowski hyperboloid model, where they
//! have elementary closed forms; chart conversion round-trips to 1e-12.
//!
//! Modules:
//! - [`geometry`]: points, tangent vectors, boundary points, measures, and
//!   the closed-form Riemannian primitives.
//! - [`jacobi`]: Jacobi fields along geodesics and the endpoint-derivative
//!   operators used by the barycenter equations.
//! - [`barycenter`]: the exponential-barycenter field and solver.
//! - [`busemann`]: Busemann functions, the boundary-measure gradient field,
//!   and the Busemann-barycenter solver with its closed-form oracles.
//! - [`dynamics`]: Brownian motion in the half-space chart, the midpoint and
//!   n-particle barycenter SDEs, and the Monte-Carlo experiment drivers.
//! - [`rng`]: seeded, stream-split random number generation so parallel and
//!   serial runs agree bit for bit.

pub mod barycenter;
pub mod busemann;
pub mod dynamics;
pub mod geometry;
pub mod jacobi;
pub mod linalg;
pub mod rng;

pub use geometry::{
    BoundaryMeasure, BoundaryPoint, DiscreteMeasure, Endpoint, GeomError, Point, TangentVector,
};
