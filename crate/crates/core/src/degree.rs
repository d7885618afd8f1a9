use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Extended, Scalar};

/// A point of the parameter poset with componentwise order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Degree<T> {
    coords: Vec<T>,
}

pub type ExtendedDegree<T> = Extended<Degree<T>>;

impl<T: Scalar> Degree<T> {
    pub fn new(coords: Vec<T>) -> Result<Self> {
        if coords.iter().any(|c| *c < T::zero()) {
            return Err(Error::NegativeCoordinate);
        }
        Ok(Degree { coords })
    }

    pub fn zero(r: usize) -> Self {
        Degree { coords: vec![T::zero(); r] }
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    /// Componentwise `self <= other`. Dimensions are assumed equal.
    pub fn leq(&self, other: &Self) -> bool {
        self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    pub fn try_leq(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.leq(other))
    }

    pub fn comparable(&self, other: &Self) -> bool {
        self.leq(other) || other.leq(self)
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Degree { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.min_of(*b)).collect() })
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Degree { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.max_of(*b)).collect() })
    }

    pub fn add(&self, other: &Self) -> Self {
        Degree { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| *a + *b).collect() }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add(other))
    }

    /// `t * self`; `t` must be non-negative.
    pub fn scale(&self, t: T) -> Self {
        Degree { coords: self.coords.iter().map(|c| *c * t).collect() }
    }

    /// Coordinates swapped (2D only); used for the opposite order.
    pub fn swapped(&self) -> Self {
        let mut coords = self.coords.clone();
        coords.reverse();
        Degree { coords }
    }
}

impl<T: Scalar> std::ops::Index<usize> for Degree<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.coords[i]
    }
}

impl<T: Scalar> fmt::Display for Degree<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
