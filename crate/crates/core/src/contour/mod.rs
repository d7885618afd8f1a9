//! Multipersistence contours: lax actions `C(x, eps)` of the non-negative reals on
//! the extended positive orthant.

mod axioms;
mod componentwise;
mod curve;
mod distance;
mod multivariate;
mod quadrature;

use std::fmt::{Debug, Display};
use std::sync::Arc;

use num_traits::{Float, FromPrimitive};

use crate::error::{Error, Result};
use crate::scalar::Extended;

pub use axioms::{check_contour_axioms, random_samples, Axiom, AxiomReport, Sample};
pub use componentwise::Componentwise;
pub use curve::Curve;
pub use distance::{DistanceType, Region};
pub use multivariate::MultivariateShift;

pub trait Real: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}

impl<T: Float + FromPrimitive + Debug + Display + Send + Sync + 'static> Real for T {}

/// Density on `R^r`.
pub type Density<F> = Arc<dyn Fn(&[F]) -> F + Send + Sync>;
/// Density on the line, or any other scalar callback.
pub type Density1<F> = Arc<dyn Fn(F) -> F + Send + Sync>;

pub type Value<F> = Extended<Vec<F>>;

#[derive(Debug, Clone, PartialEq)]
pub struct ContourResult<F> {
    pub value: Value<F>,
    /// 0 for the exact families.
    pub accuracy: F,
}

impl<F: Real> ContourResult<F> {
    fn exact(value: Value<F>) -> Self {
        ContourResult { value, accuracy: F::zero() }
    }
}

#[derive(Clone)]
pub enum ContourSpec<F> {
    Standard { v: Vec<F> },
    Truncated { inner: Box<ContourSpec<F>>, alpha: Vec<F> },
    Curve(Curve<F>),
    DistanceType(DistanceType<F>),
    Componentwise(Componentwise<F>),
    MultivariateShift(MultivariateShift<F>),
}

impl<F: Real> ContourSpec<F> {
    pub fn standard(v: Vec<F>) -> Result<Self> {
        if v.is_empty() || v.iter().any(|c| !(*c >= F::zero())) {
            return Err(Error::NegativeShift);
        }
        Ok(ContourSpec::Standard { v })
    }

    pub fn truncated(inner: ContourSpec<F>, alpha: Vec<F>) -> Result<Self> {
        if alpha.len() != inner.dim() {
            return Err(Error::DimensionMismatch { expected: inner.dim(), found: alpha.len() });
        }
        Ok(ContourSpec::Truncated { inner: Box::new(inner), alpha })
    }

    pub fn dim(&self) -> usize {
        match self {
            ContourSpec::Standard { v } => v.len(),
            ContourSpec::Truncated { inner, .. } => inner.dim(),
            ContourSpec::Curve(c) => c.dim(),
            ContourSpec::DistanceType(c) => c.dim(),
            ContourSpec::Componentwise(c) => c.dim(),
            ContourSpec::MultivariateShift(c) => c.dim(),
        }
    }

    pub fn eval(&self, x: &[F], eps: F) -> Result<ContourResult<F>> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.len() });
        }
        if !(eps >= F::zero()) {
            return Err(Error::NegativeEpsilon);
        }
        match self {
            ContourSpec::Standard { v } => {
                let y = x.iter().zip(v).map(|(a, b)| *a + eps * *b).collect();
                Ok(ContourResult::exact(Extended::Finite(y)))
            }
            ContourSpec::Truncated { inner, alpha } => {
                let mut r = inner.eval(x, eps)?;
                if let Extended::Finite(y) = &r.value {
                    if alpha.iter().zip(y).all(|(a, b)| a <= b) {
                        r.value = Extended::Infinite;
                    }
                }
                Ok(r)
            }
            ContourSpec::Curve(c) => c.eval(x, eps),
            ContourSpec::DistanceType(c) => c.eval(x, eps),
            ContourSpec::Componentwise(c) => c.eval(x, eps),
            ContourSpec::MultivariateShift(c) => c.eval(x, eps),
        }
    }

    /// As [`eval`](Self::eval), with `C(inf, eps) = inf`.
    pub fn eval_extended(&self, x: &Value<F>, eps: F) -> Result<ContourResult<F>> {
        match x {
            Extended::Finite(x) => self.eval(x, eps),
            Extended::Infinite => Ok(ContourResult::exact(Extended::Infinite)),
        }
    }
}

/// Smallest `t` in `[lo, hi]` with `pred(t)`, given `pred(hi)` and a monotone `pred`.
pub(crate) fn bisect_first<F: Real>(mut lo: F, mut hi: F, pred: impl Fn(F) -> bool) -> F {
    if pred(lo) {
        return lo;
    }
    let two = F::one() + F::one();
    for _ in 0..200 {
        let mid = lo + (hi - lo) / two;
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}
