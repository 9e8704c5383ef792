use thiserror::Error;

use super::ops::distance;
use super::point::{BoundaryPoint, Point};
use super::COINCIDENT_TOL;

/// Weights must sum to 1 within this tolerance.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum MeasureError {
    #[error("a measure needs at least one atom")]
    Empty,
    #[error("atom {index} has non-positive weight {weight}")]
    NonPositiveWeight { index: usize, weight: f64 },
    #[error("weights sum to {sum}, expected 1 within {tol}", tol = WEIGHT_SUM_TOL)]
    NotNormalized { sum: f64 },
    #[error("atom {index} has dimension {got}, expected {expected}")]
    DimensionMismatch { index: usize, expected: usize, got: usize },
}

/// A boundary atom of weight >= 1/2 that breaks the class-U condition.
#[derive(Debug, Clone)]
pub struct ClassUViolation {
    pub point: BoundaryPoint,
    pub weight: f64,
}

/// A normalized weighted atom list on H^d.
#[derive(Debug, Clone)]
pub struct DiscreteMeasure {
    atoms: Vec<(f64, Point)>,
}

impl DiscreteMeasure {
    pub fn new(atoms: Vec<(f64, Point)>) -> Result<Self, MeasureError> {
        if atoms.is_empty() {
            return Err(MeasureError::Empty);
        }
        let dim = atoms[0].1.dim();
        let mut sum = 0.0;
        for (index, (w, p)) in atoms.iter().enumerate() {
            if *w <= 0.0 {
                return Err(MeasureError::NonPositiveWeight { index, weight: *w });
            }
            if p.dim() != dim {
                return Err(MeasureError::DimensionMismatch { index, expected: dim, got: p.dim() });
            }
            sum += *w;
        }
        if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(MeasureError::NotNormalized { sum });
        }
        Ok(Self { atoms })
    }

    pub fn dirac(point: Point) -> Self {
        Self { atoms: vec![(1.0, point)] }
    }

    pub fn uniform(points: Vec<Point>) -> Result<Self, MeasureError> {
        let n = points.len();
        if n == 0 {
            return Err(MeasureError::Empty);
        }
        let w = 1.0 / n as f64;
        Self::new(points.into_iter().map(|p| (w, p)).collect())
    }

    pub fn atoms(&self) -> &[(f64, Point)] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.atoms[0].1.dim()
    }

    /// Same measure with coincident atoms (distance below the degenerate
    /// guard) merged, weights summed.
    pub fn merged(&self) -> DiscreteMeasure {
        let mut out: Vec<(f64, Point)> = Vec::with_capacity(self.atoms.len());
        for (w, p) in &self.atoms {
            match out.iter_mut().find(|(_, q)| distance(p, q).unwrap_or(f64::MAX) < COINCIDENT_TOL)
            {
                Some((wq, _)) => *wq += w,
                None => out.push((*w, p.clone())),
            }
        }
        DiscreteMeasure { atoms: out }
    }
}

/// A normalized weighted atom list on the boundary of H^d.
#[derive(Debug, Clone)]
pub struct BoundaryMeasure {
    atoms: Vec<(f64, BoundaryPoint)>,
}

impl BoundaryMeasure {
    pub fn new(atoms: Vec<(f64, BoundaryPoint)>) -> Result<Self, MeasureError> {
        if atoms.is_empty() {
            return Err(MeasureError::Empty);
        }
        let xi_dim = atoms.iter().find_map(|(_, b)| match b {
            BoundaryPoint::Finite(xi) => Some(xi.len()),
            BoundaryPoint::Infinity => None,
        });
        let mut sum = 0.0;
        for (index, (w, b)) in atoms.iter().enumerate() {
            if *w <= 0.0 {
                return Err(MeasureError::NonPositiveWeight { index, weight: *w });
            }
            if let (BoundaryPoint::Finite(xi), Some(expected)) = (b, xi_dim) {
                if xi.len() != expected {
                    return Err(MeasureError::DimensionMismatch {
                        index,
                        expected,
                        got: xi.len(),
                    });
                }
            }
            sum += *w;
        }
        if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(MeasureError::NotNormalized { sum });
        }
        Ok(Self { atoms })
    }

    pub fn uniform(points: Vec<BoundaryPoint>) -> Result<Self, MeasureError> {
        let n = points.len();
        if n == 0 {
            return Err(MeasureError::Empty);
        }
        let w = 1.0 / n as f64;
        Self::new(points.into_iter().map(|b| (w, b)).collect())
    }

    pub fn atoms(&self) -> &[(f64, BoundaryPoint)] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Same measure with duplicate boundary atoms merged, weights summed.
    pub fn merged(&self) -> BoundaryMeasure {
        let mut out: Vec<(f64, BoundaryPoint)> = Vec::with_capacity(self.atoms.len());
        for (w, b) in &self.atoms {
            match out.iter_mut().find(|(_, q)| b.approx_eq(q, 1e-12)) {
                Some((wq, _)) => *wq += w,
                None => out.push((*w, b.clone())),
            }
        }
        BoundaryMeasure { atoms: out }
    }

    /// Class U: after merging duplicates, every atom has weight < 1/2. Since
    /// weights sum to one this forces at least three distinct atoms.
    pub fn in_class_u(&self) -> bool {
        self.class_u_violation().is_none()
    }

    /// The first merged atom with weight >= 1/2, if any.
    pub fn class_u_violation(&self) -> Option<ClassUViolation> {
        self.merged()
            .atoms
            .iter()
            .find(|(w, _)| *w >= 0.5 - 1e-15)
            .map(|(w, b)| ClassUViolation { point: b.clone(), weight: *w })
    }
}
