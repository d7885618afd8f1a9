use std::fmt::{Debug, Display};

use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};

/// Coordinate type for degrees: exact rationals or binary floats.
pub trait Scalar:
    Copy + PartialOrd + Num + Signed + Debug + Display + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;
    fn to_f64(self) -> f64;
    fn ceil(self) -> Self;
    fn floor(self) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min_of(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn ceil(self) -> Self {
        f64::ceil(self)
    }
    fn floor(self) -> Self {
        f64::floor(self)
    }
}

impl Scalar for f32 {
    fn from_int(n: i64) -> Self {
        n as f32
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
    fn ceil(self) -> Self {
        f32::ceil(self)
    }
    fn floor(self) -> Self {
        f32::floor(self)
    }
}

impl Scalar for Ratio<i64> {
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n)
    }
    fn to_f64(self) -> f64 {
        ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
    fn ceil(self) -> Self {
        Ratio::ceil(&self)
    }
    fn floor(self) -> Self {
        Ratio::floor(&self)
    }
}

/// A value or the top element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended<T> {
    Finite(T),
    Infinite,
}

impl<T> Extended<T> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn finite(self) -> Option<T> {
        match self {
            Extended::Finite(t) => Some(t),
            Extended::Infinite => None,
        }
    }

    pub fn as_ref(&self) -> Extended<&T> {
        match self {
            Extended::Finite(t) => Extended::Finite(t),
            Extended::Infinite => Extended::Infinite,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Extended<U> {
        match self {
            Extended::Finite(t) => Extended::Finite(f(t)),
            Extended::Infinite => Extended::Infinite,
        }
    }
}

impl<T: std::ops::Add<Output = T>> std::ops::Add for Extended<T> {
    type Output = Extended<T>;
    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Extended::Finite(a), Extended::Finite(b)) => Extended::Finite(a + b),
            _ => Extended::Infinite,
        }
    }
}

impl<T: Display> Display for Extended<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Extended::Finite(t) => write!(f, "{t}"),
            Extended::Infinite => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_top() {
        assert!(Extended::Finite(10u64) < Extended::Infinite);
        assert_eq!(Extended::Finite(2u64) + Extended::Infinite, Extended::Infinite);
        assert_eq!(Extended::Finite(2u64) + Extended::Finite(3), Extended::Finite(5));
    }

    #[test]
    fn rational_rounding() {
        let r = Ratio::new(7i64, 2);
        assert_eq!(Scalar::ceil(r), Ratio::from_integer(4));
        assert_eq!(Scalar::floor(r), Ratio::from_integer(3));
        assert_eq!(Scalar::to_f64(r), 3.5);
    }
}
