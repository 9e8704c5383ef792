use nalgebra::DVector;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum GeomError {
    #[error("chart dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("height must be positive, got {0}")]
    NonPositiveHeight(f64),
    #[error("operation undefined for coincident points")]
    CoincidentPoints,
    #[error("geodesic endpoints must be distinct")]
    DegenerateGeodesic,
    #[error("point lies off the geodesic: distance {0:.3e} exceeds tolerance {1:.3e}")]
    OffGeodesic(f64, f64),
    #[error("tangent vectors must share a base point")]
    MismatchedBase,
}

/// A point of H^d in the upper half-space chart. The last coordinate is the
/// height and is strictly positive.
#[derive(Debug, Clone)]
pub struct Point {
    coords: DVector<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self, GeomError> {
        Self::from_vector(DVector::from_vec(coords))
    }

    pub fn from_vector(coords: DVector<f64>) -> Result<Self, GeomError> {
        if coords.len() < 2 {
            return Err(GeomError::DimensionTooSmall(coords.len()));
        }
        if !coords.iter().all(|c| c.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let h = coords[coords.len() - 1];
        if h <= 0.0 {
            return Err(GeomError::NonPositiveHeight(h));
        }
        Ok(Self { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn height(&self) -> f64 {
        self.coords[self.coords.len() - 1]
    }

    /// Chart coordinates of the boundary hyperplane part (all but the height).
    pub fn horizontal(&self) -> DVector<f64> {
        DVector::from_iterator(self.dim() - 1, self.coords.iter().take(self.dim() - 1).copied())
    }

    pub fn coords(&self) -> &DVector<f64> {
        &self.coords
    }

    pub(crate) fn check_same_dim(&self, other: &Point) -> Result<(), GeomError> {
        if self.dim() != other.dim() {
            return Err(GeomError::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(())
    }
}

/// A tangent vector at a base point, stored as chart components. The
/// hyperbolic inner product at base height h is the Euclidean one divided
/// by h^2.
#[derive(Debug, Clone)]
pub struct TangentVector {
    base: Point,
    comps: DVector<f64>,
}

impl TangentVector {
    pub fn new(base: Point, comps: Vec<f64>) -> Result<Self, GeomError> {
        Self::from_vector(base, DVector::from_vec(comps))
    }

    pub fn from_vector(base: Point, comps: DVector<f64>) -> Result<Self, GeomError> {
        if comps.len() != base.dim() {
            return Err(GeomError::DimensionMismatch(base.dim(), comps.len()));
        }
        if !comps.iter().all(|c| c.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        Ok(Self { base, comps })
    }

    pub fn zero(base: Point) -> Self {
        let comps = DVector::zeros(base.dim());
        Self { base, comps }
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn comps(&self) -> &DVector<f64> {
        &self.comps
    }

    /// Hyperbolic norm: Euclidean norm of the components over the base height.
    pub fn norm(&self) -> f64 {
        self.comps.norm() / self.base.height()
    }

    /// Hyperbolic inner product with another vector at the same base.
    pub fn inner(&self, other: &TangentVector) -> f64 {
        debug_assert_eq!(self.comps.len(), other.comps.len());
        let h = self.base.height();
        self.comps.dot(&other.comps) / (h * h)
    }

    pub fn scaled(&self, a: f64) -> TangentVector {
        TangentVector { base: self.base.clone(), comps: &self.comps * a }
    }

    pub fn plus(&self, other: &TangentVector) -> TangentVector {
        debug_assert_eq!(self.comps.len(), other.comps.len());
        TangentVector { base: self.base.clone(), comps: &self.comps + &other.comps }
    }

    pub fn minus(&self, other: &TangentVector) -> TangentVector {
        debug_assert_eq!(self.comps.len(), other.comps.len());
        TangentVector { base: self.base.clone(), comps: &self.comps - &other.comps }
    }
}

/// A point of the visibility boundary of H^d in the half-space chart: a
/// point of the boundary hyperplane, or the point at infinity.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundaryPoint {
    Finite(DVector<f64>),
    Infinity,
}

impl BoundaryPoint {
    pub fn finite(xi: Vec<f64>) -> Self {
        BoundaryPoint::Finite(DVector::from_vec(xi))
    }

    pub fn approx_eq(&self, other: &BoundaryPoint, tol: f64) -> bool {
        match (self, other) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => true,
            (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => {
                a.len() == b.len() && (a - b).amax() <= tol
            }
            _ => false,
        }
    }
}

/// Either endpoint type a geodesic can be aimed at.
#[derive(Debug, Clone)]
pub enum Endpoint {
    Interior(Point),
    Boundary(BoundaryPoint),
}

impl From<Point> for Endpoint {
    fn from(p: Point) -> Self {
        Endpoint::Interior(p)
    }
}

impl From<BoundaryPoint> for Endpoint {
    fn from(b: BoundaryPoint) -> Self {
        Endpoint::Boundary(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_rejects_bad_input() {
        assert!(matches!(Point::new(vec![1.0]), Err(GeomError::DimensionTooSmall(1))));
        assert!(matches!(Point::new(vec![0.0, 0.0]), Err(GeomError::NonPositiveHeight(_))));
        assert!(matches!(Point::new(vec![0.0, -1.0]), Err(GeomError::NonPositiveHeight(_))));
        assert!(matches!(Point::new(vec![f64::NAN, 1.0]), Err(GeomError::NonFinite)));
        assert!(Point::new(vec![3.0, 0.5]).is_ok());
    }

    #[test]
    fn tangent_norm_uses_height() {
        let p = Point::new(vec![0.0, 2.0]).unwrap();
        let v = TangentVector::new(p, vec![2.0, 0.0]).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn inner_product_scaling() {
        let p = Point::new(vec![0.0, 3.0]).unwrap();
        let u = TangentVector::new(p.clone(), vec![3.0, 0.0]).unwrap();
        let w = TangentVector::new(p, vec![0.0, 3.0]).unwrap();
        assert!((u.inner(&u) - 1.0).abs() < 1e-15);
        assert!(u.inner(&w).abs() < 1e-15);
    }
}
