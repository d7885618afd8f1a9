use crate::error::{Error, Result};
use crate::scalar::{Extended, Scalar};
use crate::step::{StepFunction, Value};

/// Hierarchical stabilization over a finite metric space:
/// `tau -> min { f(y) : d(x, y) <= tau }`.
pub fn stabilize<T: Scalar>(d: &[Vec<Extended<T>>], f: &[Value], x: usize) -> Result<StepFunction<T>> {
    let n = d.len();
    if f.len() != n || x >= n || d.iter().any(|row| row.len() != n) {
        return Err(Error::BadMetric);
    }
    for i in 0..n {
        if d[i][i] != Extended::Finite(T::zero()) {
            return Err(Error::BadMetric);
        }
        for j in 0..i {
            if d[i][j] != d[j][i] || d[i][j].as_ref().finite().is_some_and(|v| *v < T::zero()) {
                return Err(Error::BadMetric);
            }
        }
    }
    let mut order: Vec<(T, Value)> = (0..n).filter_map(|y| d[x][y].finite().map(|t| (t, f[y]))).collect();
    order.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut breakpoints: Vec<T> = Vec::new();
    let mut values: Vec<Value> = Vec::new();
    let mut best = Extended::Infinite;
    for (t, v) in order {
        best = best.min(v);
        if breakpoints.last() == Some(&t) {
            *values.last_mut().unwrap() = best;
        } else {
            breakpoints.push(t);
            values.push(best);
        }
    }
    StepFunction::new(breakpoints, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64) -> Extended<Rational> {
        Extended::Finite(Rational::from_integer(n))
    }

    #[test]
    fn two_points() {
        let d = vec![vec![r(0), r(1)], vec![r(1), r(0)]];
        let f = [Extended::Finite(3), Extended::Finite(5)];
        let b = stabilize(&d, &f, 1).unwrap();
        assert_eq!(b.values(), &[Extended::Finite(5), Extended::Finite(3)]);
        assert_eq!(b.breakpoints()[1], Rational::from_integer(1));
        let a = stabilize(&d, &f, 0).unwrap();
        assert_eq!(a.values(), &[Extended::Finite(3)]);
    }

    #[test]
    fn singleton_and_infinite_distance() {
        let s = stabilize(&[vec![r(0)]], &[Extended::Finite(4)], 0).unwrap();
        assert_eq!(s.values(), &[Extended::Finite(4)]);
        let d = vec![vec![r(0), Extended::Infinite], vec![Extended::Infinite, r(0)]];
        let s = stabilize(&d, &[Extended::Finite(4), Extended::Finite(1)], 0).unwrap();
        assert_eq!(s.values(), &[Extended::Finite(4)]);
    }

    #[test]
    fn asymmetric_rejected() {
        let d = vec![vec![r(0), r(1)], vec![r(2), r(0)]];
        assert_eq!(stabilize(&d, &[Extended::Finite(1), Extended::Finite(1)], 0), Err(Error::BadMetric));
    }
}
