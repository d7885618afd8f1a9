use super::quadrature::Table;
use super::{bisect_first, ContourResult, Density, Real};
use crate::error::{Error, Result};
use crate::scalar::Extended;

/// Region whose mass is matched against `eps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// `{ y >= x, y not >= x + delta v }`
    LShape,
    /// `[x, x + delta v]`; does not give a lax action.
    Rectangle,
}

/// Moves `x` along `v` until the region between `x` and the new point has mass `eps`.
#[derive(Clone)]
pub struct DistanceType<F> {
    v: Vec<F>,
    region: Region,
    fine: std::sync::Arc<Table<F>>,
    coarse: std::sync::Arc<Table<F>>,
    shell: F,
    tail_tol: F,
}

impl<F: Real> DistanceType<F> {
    /// Tabulates `f` on `[0, extent]^r` with `2^depth` cells per axis.
    pub fn new(v: Vec<F>, f: Density<F>, extent: F, depth: u32, tail_tol: F, region: Region) -> Result<Self> {
        if v.is_empty() || v.iter().any(|c| !(*c >= F::zero())) {
            return Err(Error::NegativeShift);
        }
        if v.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroShift);
        }
        if depth == 0 || !(tail_tol > F::zero()) {
            return Err(Error::Contour("need depth >= 1 and a positive tolerance".into()));
        }
        let fine = Table::new(v.len(), extent, depth, &*f)?;
        let coarse = Table::new(v.len(), extent, depth - 1, &*f)?;
        let shell = extent / F::from(8).unwrap();
        Ok(DistanceType { v, region, fine: fine.into(), coarse: coarse.into(), shell, tail_tol })
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    fn corners(&self, x: &[F], delta: F, top: F) -> (Vec<F>, Vec<F>) {
        let end: Vec<F> = x.iter().zip(&self.v).map(|(a, b)| *a + delta * *b).collect();
        (end, vec![top; x.len()])
    }

    fn mass(&self, t: &Table<F>, x: &[F], delta: F, top: F) -> F {
        let (end, top) = self.corners(x, delta, top);
        match self.region {
            Region::LShape => t.box_mass(x, &top) - t.box_mass(&end, &top),
            Region::Rectangle => {
                let hi: Vec<F> = end.iter().map(|e| e.min(top[0])).collect();
                t.box_mass(x, &hi)
            }
        }
    }

    /// Lower and upper mass from node-aligned boxes.
    fn mass_bounds(&self, t: &Table<F>, x: &[F], delta: F) -> (F, F) {
        let (end, top) = self.corners(x, delta, t.extent());
        match self.region {
            Region::LShape => {
                let (all_in, all_out) = t.box_mass_bounds(x, &top);
                let (cut_in, cut_out) = t.box_mass_bounds(&end, &top);
                (all_in - cut_out, all_out - cut_in)
            }
            Region::Rectangle => {
                let hi: Vec<F> = end.iter().map(|e| e.min(top[0])).collect();
                t.box_mass_bounds(x, &hi)
            }
        }
    }

    fn reach(&self, t: &Table<F>, x: &[F]) -> F {
        x.iter()
            .zip(&self.v)
            .filter(|(_, c)| **c > F::zero())
            .map(|(a, c)| (t.extent() - *a).max(F::zero()) / *c)
            .fold(F::infinity(), F::min)
    }

    /// Smallest delta whose region has mass `eps`, or None if it never does.
    fn solve(&self, t: &Table<F>, x: &[F], eps: F) -> Option<F> {
        let e = t.extent();
        let reach = self.reach(t, x);
        if self.mass(t, x, reach, e) < eps {
            return None;
        }
        Some(bisect_first(F::zero(), reach, |d| self.mass(t, x, d, e) >= eps))
    }

    pub fn eval(&self, x: &[F], eps: F) -> Result<ContourResult<F>> {
        if eps == F::zero() {
            return Ok(ContourResult { value: Extended::Finite(x.to_vec()), accuracy: F::zero() });
        }
        let Some(delta) = self.solve(&self.fine, x, eps) else {
            return Ok(ContourResult { value: Extended::Infinite, accuracy: F::zero() });
        };
        // mass the truncation box cuts off is estimated from its outer shell
        let e = self.fine.extent();
        let tail = self.mass(&self.fine, x, delta, e) - self.mass(&self.fine, x, delta, e - self.shell);
        if tail > self.tail_tol {
            return Ok(ContourResult { value: Extended::Infinite, accuracy: tail });
        }
        let coarse = self.solve(&self.coarse, x, eps).unwrap_or(delta);
        let reach = self.reach(&self.fine, x);
        let below = bisect_first(F::zero(), reach, |d| self.mass_bounds(&self.fine, x, d).1 >= eps);
        let above = if self.mass_bounds(&self.fine, x, reach).0 >= eps {
            bisect_first(F::zero(), reach, |d| self.mass_bounds(&self.fine, x, d).0 >= eps)
        } else {
            reach
        };
        let spread = (delta - below).max(above - delta).max((delta - coarse).abs());
        let vmax = self.v.iter().fold(F::zero(), |a, b| a.max(*b));
        let accuracy = spread * vmax + tail.max(F::zero());
        let y = x.iter().zip(&self.v).map(|(a, b)| *a + delta * *b).collect();
        Ok(ContourResult { value: Extended::Finite(y), accuracy })
    }
}
