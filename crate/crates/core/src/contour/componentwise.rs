use std::sync::Arc;

use super::quadrature::Table;
use super::{bisect_first, ContourResult, Density1, Real};
use crate::error::{Error, Result};
use crate::scalar::Extended;

/// Each coordinate moves independently: invert its cumulative density, add
/// `m_i(eps)`, map back.
#[derive(Clone)]
pub struct Componentwise<F> {
    axes: Vec<Axis<F>>,
}

#[derive(Clone)]
struct Axis<F> {
    fine: Arc<Table<F>>,
    coarse: Arc<Table<F>>,
    m: Density1<F>,
}

impl<F: Real> Componentwise<F> {
    /// One `(density, shift)` pair per coordinate, tabulated on `[0, extent]`.
    pub fn new(axes: Vec<(Density1<F>, Density1<F>)>, extent: F, depth: u32) -> Result<Self> {
        if axes.is_empty() || depth == 0 {
            return Err(Error::Contour("need at least one axis and depth >= 1".into()));
        }
        let mut out = Vec::with_capacity(axes.len());
        for (i, (f, m)) in axes.into_iter().enumerate() {
            check_super_additive(&*m, extent).map_err(|_| Error::NotSuperAdditive(i))?;
            let g = |y: &[F]| f(y[0]);
            out.push(Axis { fine: Table::new(1, extent, depth, &g)?.into(), coarse: Table::new(1, extent, depth - 1, &g)?.into(), m });
        }
        Ok(Componentwise { axes: out })
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    fn solve(t: &Table<F>, x: F, shift: F) -> Option<F> {
        let e = t.extent();
        let total = t.cumulative(&[e]);
        if x > total {
            return None;
        }
        let y = bisect_first(F::zero(), e, |s| t.cumulative(&[s]) >= x);
        let s = y + shift;
        (s <= e).then(|| t.cumulative(&[s]).max(x))
    }

    pub fn eval(&self, x: &[F], eps: F) -> Result<ContourResult<F>> {
        if eps == F::zero() {
            return Ok(ContourResult { value: Extended::Finite(x.to_vec()), accuracy: F::zero() });
        }
        let mut y = Vec::with_capacity(x.len());
        let mut accuracy = F::zero();
        for (a, xi) in self.axes.iter().zip(x) {
            let shift = (a.m)(eps);
            if !(shift >= F::zero()) {
                return Err(Error::Contour(format!("shift {shift} is negative")));
            }
            let Some(fine) = Self::solve(&a.fine, *xi, shift) else {
                return Ok(ContourResult { value: Extended::Infinite, accuracy: F::zero() });
            };
            if let Some(coarse) = Self::solve(&a.coarse, *xi, shift) {
                accuracy = accuracy.max((fine - coarse).abs());
            }
            y.push(fine);
        }
        Ok(ContourResult { value: Extended::Finite(y), accuracy })
    }
}

/// Sampled check of `m(a + b) >= m(a) + m(b)` and `m >= 0` on `[0, extent]`.
fn check_super_additive<F: Real>(m: &(dyn Fn(F) -> F + Send + Sync), extent: F) -> Result<()> {
    let n = 16;
    let at = |k: usize| extent * F::from(k).unwrap() / F::from(n).unwrap();
    let slack = F::from(1e-9).unwrap();
    for i in 0..=n {
        let a = m(at(i));
        if !(a >= F::zero()) {
            return Err(Error::NotSuperAdditive(0));
        }
        for j in 0..=n - i {
            let lhs = m(at(i + j));
            let rhs = a + m(at(j));
            if lhs < rhs - slack * (F::one() + rhs.abs()) {
                return Err(Error::NotSuperAdditive(0));
            }
        }
    }
    Ok(())
}
