//! Dense real vectors of arbitrary dimension.
//!
//! Curves live in the plane, but position vectors, magnetization paths and the
//! dilate tests are dimension-agnostic, so the vector type is too.

use crate::error::{Error, Result};

/// A finite real vector. Coordinates are validated once at construction;
/// every operation may then assume them finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    coords: Vec<f64>,
}

impl Vector {
    /// Builds a vector, rejecting NaN/infinite coordinates and dimension 0.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Argument("vector needs at least one coordinate".into()));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::Argument("vector coordinates must be finite".into()));
        }
        Ok(Self { coords })
    }

    /// Planar convenience constructor. Panics on non-finite input, which is a
    /// programming error at call sites that use literals.
    pub fn xy(x: f64, y: f64) -> Self {
        assert!(x.is_finite() && y.is_finite(), "non-finite planar coordinate");
        Self { coords: vec![x, y] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension { expected: self.dim(), actual: other.dim() });
        }
        Ok(())
    }

    /// Euclidean inner product; errors on dimension mismatch.
    pub fn dot(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum())
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// `self - other`; errors on dimension mismatch.
    pub fn sub(&self, other: &Self) -> Result<Vector> {
        self.check_dim(other)?;
        Ok(Vector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, k: f64) -> Vector {
        Vector { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    /// Angle between two nonzero vectors, in [0, π]. Uses atan2 on the Gram
    /// cross term rather than acos, which keeps precision near 0 and π.
    pub fn angle_between(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        let na = self.norm();
        let nb = other.norm();
        if na == 0.0 || nb == 0.0 {
            return Err(Error::DegenerateMagnet);
        }
        let dot = self.dot(other)?;
        // ‖a‖²‖b‖² − (a·b)² = ‖a×b‖² by Lagrange's identity; clamp the
        // floating-point dust so the sqrt is defined.
        let cross2 = (na * na) * (nb * nb) - dot * dot;
        Ok(cross2.max(0.0).sqrt().atan2(dot))
    }
}

impl std::ops::Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.coords[i]
    }
}

/// |v·u| / (‖v‖‖u‖): how far the pair deviates from the (never enforced)
/// orthogonality condition. Defined as 0 when either vector is zero, and
/// clamped into [0, 1] against rounding.
pub fn ortho_residual(v: &Vector, u: &Vector) -> Result<f64> {
    let nv = v.norm();
    let nu = u.norm();
    if nv == 0.0 || nu == 0.0 {
        return Ok(0.0);
    }
    Ok((v.dot(u)?.abs() / (nv * nu)).min(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_basic() {
        let a = Vector::new(vec![1.0, 2.0, 3.0]).unwrap();
        let b = Vector::new(vec![4.0, 5.0, 6.0]).unwrap();
        assert_eq!(a.dot(&b).unwrap(), 32.0);
    }

    #[test]
    fn dot_dimension_mismatch() {
        let a = Vector::new(vec![1.0]).unwrap();
        let b = Vector::xy(1.0, 2.0);
        assert_eq!(a.dot(&b), Err(Error::Dimension { expected: 1, actual: 2 }));
    }

    #[test]
    fn norm_345() {
        assert_eq!(Vector::xy(3.0, 4.0).norm(), 5.0);
        assert_eq!(Vector::new(vec![0.0, 0.0]).unwrap().norm(), 0.0);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(Vector::new(vec![f64::NAN]).is_err());
        assert!(Vector::new(vec![1.0, f64::INFINITY]).is_err());
        assert!(Vector::new(vec![]).is_err());
    }

    #[test]
    fn angle_between_axes() {
        let e1 = Vector::xy(1.0, 0.0);
        let e2 = Vector::xy(0.0, 1.0);
        assert_eq!(e1.angle_between(&e2).unwrap(), std::f64::consts::FRAC_PI_2);
        assert_eq!(e1.angle_between(&e1).unwrap(), 0.0);
        let neg = Vector::xy(-2.0, 0.0);
        assert_eq!(e1.angle_between(&neg).unwrap(), std::f64::consts::PI);
    }

    #[test]
    fn ortho_residual_examples() {
        // Radial pair: fully aligned.
        let v = Vector::xy(0.25, 0.0);
        let u = Vector::xy(1.0, 0.0);
        assert_eq!(ortho_residual(&v, &u).unwrap(), 1.0);
        // Perpendicular pair: residual 0.
        let w = Vector::xy(0.0, 3.0);
        assert_eq!(ortho_residual(&u, &w).unwrap(), 0.0);
        // Zero vector: defined as 0.
        let z = Vector::new(vec![0.0, 0.0]).unwrap();
        assert_eq!(ortho_residual(&z, &u).unwrap(), 0.0);
    }
}
