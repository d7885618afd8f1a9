use std::sync::Arc;

use super::quadrature::Table;
use super::{bisect_first, ContourResult, Density, Real};
use crate::error::{Error, Result};
use crate::scalar::Extended;

/// Contour built from `r` densities on `R^r` through their rectangle masses
/// `F_j(y) = mass of [0, y]`.
///
/// `b(x)` is the meet of `{ y : F_j(y) >= x_j for all j }`, found per axis on
/// grids of pitch `grid0 / 2^l` and then bisected inside the last grid cell.
#[derive(Clone)]
pub struct MultivariateShift<F> {
    v: Vec<F>,
    fine: Vec<Arc<Table<F>>>,
    coarse: Vec<Arc<Table<F>>>,
    grid0: F,
    levels: u32,
}

impl<F: Real> MultivariateShift<F> {
    pub fn new(densities: Vec<Density<F>>, v: Vec<F>, extent: F, depth: u32, grid0: F, levels: u32) -> Result<Self> {
        let r = v.len();
        if densities.len() != r {
            return Err(Error::DimensionMismatch { expected: r, found: densities.len() });
        }
        if r == 0 || v.iter().any(|c| !(*c >= F::zero())) {
            return Err(Error::NegativeShift);
        }
        if depth == 0 || !(grid0 > F::zero()) {
            return Err(Error::Contour("need depth >= 1 and a positive grid pitch".into()));
        }
        let mut fine = Vec::with_capacity(r);
        let mut coarse = Vec::with_capacity(r);
        for f in &densities {
            fine.push(Arc::new(Table::new(r, extent, depth, &**f)?));
            coarse.push(Arc::new(Table::new(r, extent, depth - 1, &**f)?));
        }
        Ok(MultivariateShift { v, fine, coarse, grid0, levels })
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    fn extent(&self) -> F {
        self.fine[0].extent()
    }

    fn member(tables: &[Arc<Table<F>>], x: &[F], y: &[F]) -> bool {
        tables.iter().zip(x).all(|(t, xj)| t.cumulative(y) >= *xj)
    }

    fn on_line(&self, axis: usize, t: F) -> Vec<F> {
        let mut y = vec![self.extent(); self.dim()];
        y[axis] = t;
        y
    }

    /// Grid estimate of `b(x)` at every refinement level, coarsest first; None if
    /// `B(x)` misses the box.
    pub fn meet_estimates(&self, x: &[F]) -> Option<Vec<Vec<F>>> {
        self.estimates(&self.fine, x).map(|(levels, _)| levels)
    }

    fn estimates(&self, tables: &[Arc<Table<F>>], x: &[F]) -> Option<(Vec<Vec<F>>, Vec<F>)> {
        let e = self.extent();
        if !Self::member(tables, x, &vec![e; self.dim()]) {
            return None;
        }
        let mut levels = Vec::new();
        let mut pitch = self.grid0;
        for _ in 0..=self.levels {
            let n = (e / pitch).ceil().to_usize().unwrap_or(usize::MAX).max(1);
            let node = |k: usize| (pitch * F::from(k).unwrap()).min(e);
            let b: Vec<F> = (0..self.dim())
                .map(|a| {
                    let k = partition(n, |k| Self::member(tables, x, &self.on_line(a, node(k))));
                    node(k)
                })
                .collect();
            levels.push(b);
            pitch = pitch / (F::one() + F::one());
        }
        let last = levels.last().unwrap();
        let pitch = pitch * (F::one() + F::one());
        let exact = (0..self.dim())
            .map(|a| {
                let lo = (last[a] - pitch).max(F::zero());
                bisect_first(lo, last[a], |t| Self::member(tables, x, &self.on_line(a, t)))
            })
            .collect();
        Some((levels, exact))
    }

    fn value(&self, tables: &[Arc<Table<F>>], x: &[F], eps: F) -> Option<Vec<F>> {
        let (_, b) = self.estimates(tables, x)?;
        let e = self.extent();
        let y: Vec<F> = b.iter().zip(&self.v).map(|(p, q)| *p + eps * *q).collect();
        if y.iter().any(|c| *c > e) {
            return None;
        }
        Some(tables.iter().zip(x).map(|(t, xj)| t.cumulative(&y).max(*xj)).collect())
    }

    pub fn eval(&self, x: &[F], eps: F) -> Result<ContourResult<F>> {
        let Some(y) = self.value(&self.fine, x, eps) else {
            return Ok(ContourResult { value: Extended::Infinite, accuracy: F::zero() });
        };
        let accuracy = match self.value(&self.coarse, x, eps) {
            Some(c) => y.iter().zip(&c).fold(F::zero(), |m, (a, b)| m.max((*a - *b).abs())),
            None => F::zero(),
        };
        Ok(ContourResult { value: Extended::Finite(y), accuracy })
    }
}

/// First `k` in `0..=n` with `pred(k)`, given `pred(n)` and a monotone `pred`.
fn partition(n: usize, pred: impl Fn(usize) -> bool) -> usize {
    let (mut lo, mut hi) = (0, n);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform() -> MultivariateShift<f64> {
        let one: Density<f64> = Arc::new(|_: &[f64]| 1.0);
        MultivariateShift::new(vec![one.clone(), one], vec![1.0, 1.0], 8.0, 4, 1.0, 6).unwrap()
    }

    #[test]
    fn closed_form_square() {
        let c = uniform();
        for eps in [0.0, 0.5, 1.0, 1.7] {
            let Extended::Finite(y) = c.eval(&[0.0, 0.0], eps).unwrap().value else { panic!() };
            assert!((y[0] - eps * eps).abs() < 1e-9 && (y[1] - eps * eps).abs() < 1e-9);
        }
    }

    #[test]
    fn estimates_decrease() {
        let c = uniform();
        let est = c.meet_estimates(&[2.0, 3.0]).unwrap();
        for w in est.windows(2) {
            assert!(w[1].iter().zip(&w[0]).all(|(a, b)| a <= b));
        }
        // meet of { y1 y2 >= 3 } in [0,8]^2 is (3/8, 3/8)
        let last = est.last().unwrap();
        assert!(last.iter().all(|b| *b >= 0.375 && *b - 0.375 <= 1.0 / 64.0));
    }

    #[test]
    fn mass_out_of_reach() {
        let bump: Density<f64> = Arc::new(|y: &[f64]| if y[0] < 1.0 && y[1] < 1.0 { 1.0 } else { 0.0 });
        let c = MultivariateShift::new(vec![bump.clone(), bump], vec![1.0, 1.0], 4.0, 4, 0.5, 3).unwrap();
        assert_eq!(c.eval(&[2.0, 0.0], 0.1).unwrap().value, Extended::Infinite);
    }
}
