use super::{ContourResult, Real};
use crate::error::{Error, Result};
use crate::scalar::Extended;

/// Contour that moves along translates of a monotone polyline.
///
/// Knots carry an explicit, strictly increasing parameter; the curve is linear in
/// the parameter between knots and ends at the last knot.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve<F> {
    params: Vec<F>,
    knots: Vec<Vec<F>>,
    free: usize,
}

impl<F: Real> Curve<F> {
    pub fn new(knots: Vec<(F, Vec<F>)>, translation_axes: &[usize]) -> Result<Self> {
        let bad = |m: &str| Err(Error::Contour(m.into()));
        let Some(r) = knots.first().map(|k| k.1.len()) else {
            return bad("curve needs at least two knots");
        };
        if knots.len() < 2 || r == 0 {
            return bad("curve needs at least two knots");
        }
        if knots.iter().any(|k| k.1.len() != r) {
            return Err(Error::DimensionMismatch { expected: r, found: knots.iter().map(|k| k.1.len()).max().unwrap() });
        }
        let mut axes = translation_axes.to_vec();
        axes.sort_unstable();
        axes.dedup();
        if axes.len() != r - 1 || axes.iter().any(|&a| a >= r) {
            return bad("need r - 1 distinct translation axes");
        }
        let free = (0..r).find(|a| !axes.contains(a)).unwrap();
        for w in knots.windows(2) {
            if !(w[0].0 < w[1].0) {
                return bad("knot parameters must increase");
            }
            if w[0].1.iter().zip(&w[1].1).any(|(a, b)| !(a <= b)) {
                return bad("curve must be monotone");
            }
        }
        let start = &knots[0].1;
        if start.iter().any(|c| *c < F::zero()) || start.iter().filter(|c| **c != F::zero()).count() > 1 {
            return bad("curve must start on a coordinate axis");
        }
        let (params, knots) = knots.into_iter().unzip();
        Ok(Curve { params, knots, free })
    }

    pub fn dim(&self) -> usize {
        self.knots[0].len()
    }

    fn at(&self, t: F) -> Option<Vec<F>> {
        let k = self.params.partition_point(|p| *p <= t);
        if k == 0 || (k == self.params.len() && t > *self.params.last().unwrap()) {
            return None;
        }
        let k = k.min(self.params.len() - 1);
        let (a, b) = (k - 1, k);
        let s = (t - self.params[a]) / (self.params[b] - self.params[a]);
        Some(self.knots[a].iter().zip(&self.knots[b]).map(|(p, q)| *p + s * (*q - *p)).collect())
    }

    /// Parameter at which the base reaches free coordinate `c`.
    fn locate(&self, c: F) -> Result<F> {
        let f = self.free;
        let first = self.knots[0][f];
        let last = self.knots.last().unwrap()[f];
        if c < first || c > last {
            return Err(Error::Contour(format!("no translate of the curve passes through free coordinate {c}")));
        }
        let k = self.knots.partition_point(|p| p[f] < c);
        if self.knots[k][f] == c {
            if self.knots.get(k + 1).is_some_and(|q| q[f] == c) {
                return Err(Error::Contour("curve is flat at the queried point".into()));
            }
            return Ok(self.params[k]);
        }
        let (p, q) = (&self.knots[k - 1], &self.knots[k]);
        let s = (c - p[f]) / (q[f] - p[f]);
        Ok(self.params[k - 1] + s * (self.params[k] - self.params[k - 1]))
    }

    pub fn eval(&self, x: &[F], eps: F) -> Result<ContourResult<F>> {
        let t0 = self.locate(x[self.free])?;
        if eps == F::zero() {
            return Ok(ContourResult { value: Extended::Finite(x.to_vec()), accuracy: F::zero() });
        }
        let base = self.at(t0).unwrap();
        let value = match self.at(t0 + eps) {
            None => Extended::Infinite,
            Some(mut y) => {
                for a in (0..y.len()).filter(|a| *a != self.free) {
                    y[a] = y[a] + (x[a] - base[a]);
                }
                Extended::Finite(y)
            }
        };
        Ok(ContourResult { value, accuracy: F::zero() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(v: &[f64]) -> Extended<Vec<f64>> {
        Extended::Finite(v.to_vec())
    }

    #[test]
    fn diagonal_ray() {
        let c = Curve::new(vec![(0.0, vec![0.0, 0.0]), (100.0, vec![100.0, 100.0])], &[1]).unwrap();
        assert_eq!(c.eval(&[1.0, 3.0], 2.0).unwrap().value, fin(&[3.0, 5.0]));
        assert_eq!(c.eval(&[1.0, 3.0], 0.0).unwrap().value, fin(&[1.0, 3.0]));
        assert_eq!(c.eval(&[1.0, 3.0], 200.0).unwrap().value, Extended::Infinite);
    }

    #[test]
    fn two_segments() {
        let c = Curve::new(vec![(0.0, vec![0.0, 0.0]), (1.0, vec![1.0, 0.0]), (2.0, vec![1.0, 1.0])], &[1]).unwrap();
        assert_eq!(c.eval(&[0.5, 0.0], 1.0).unwrap().value, fin(&[1.0, 0.5]));
        assert!(c.eval(&[1.0, 0.2], 0.5).is_err());
        assert!(c.eval(&[2.0, 0.0], 0.5).is_err());
    }

    #[test]
    fn validation() {
        assert!(Curve::new(vec![(0.0, vec![1.0, 1.0]), (1.0, vec![2.0, 2.0])], &[1]).is_err());
        assert!(Curve::new(vec![(0.0, vec![0.0, 1.0]), (1.0, vec![1.0, 0.0])], &[1]).is_err());
        assert!(Curve::new(vec![(0.0, vec![0.0, 0.0]), (1.0, vec![1.0, 1.0])], &[0, 1]).is_err());
    }
}
