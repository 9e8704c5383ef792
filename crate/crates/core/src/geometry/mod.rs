//! Exact Riemannian primitives on H^d in the upper half-space chart.
//!
//! Points are chart coordinate vectors whose last entry is the height.
//! Near-field operations route through the Minkowski hyperboloid (in
//! light-cone coordinates, which keep the chart conversion free of
//! cancellation); boundary targets and widely separated pairs use explicit
//! half-circle / vertical-line constructions in the chart, where the
//! geodesic has a uniformly stable arclength parametrization.

mod chart;
mod hyperboloid;
mod measure;
mod ops;
mod point;

pub use chart::ChartGeodesic;
pub use measure::{BoundaryMeasure, ClassUViolation, DiscreteMeasure, MeasureError};
pub use ops::{
    adapted_frame, distance, exp_map, geodesic_coords, geodesic_point, log_map,
    parallel_transport, project_to_geodesic, split_tangent, theta_projection, unit_direction,
};
pub use point::{BoundaryPoint, Endpoint, GeomError, Point, TangentVector};

/// Distances below this are treated as coincident points.
pub const COINCIDENT_TOL: f64 = 1e-13;

/// A point is accepted as lying on a geodesic if it is within this distance.
pub const ON_GEODESIC_TOL: f64 = 1e-9;

/// Gram-Schmidt residual threshold below which a candidate is skipped when
/// completing an adapted frame.
pub const FRAME_SKIP_TOL: f64 = 1e-8;

/// Separation beyond which operations leave the hyperboloid model for the
/// chart constructions. Hyperboloid round trips lose ~e^rho * eps of relative
/// accuracy, so 20 keeps them at ~5e-8 worst case while the chart route
/// covers the far regime.
pub(crate) const FAR_ROUTE_RHO: f64 = 20.0;
