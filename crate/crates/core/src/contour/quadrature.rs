use super::Real;
use crate::error::{Error, Result};

/// Cumulative integral of a density over `[0, extent]^r`, tabulated by the dyadic
/// midpoint rule and interpolated multilinearly between nodes.
///
/// Box masses are inclusion-exclusion sums of the interpolant, so they are exactly
/// additive and never negative beyond rounding.
pub(crate) struct Table<F> {
    dim: usize,
    cells: usize,
    pitch: F,
    extent: F,
    nodes: Vec<F>,
}

impl<F: Real> Table<F> {
    pub fn new(dim: usize, extent: F, depth: u32, f: &(dyn Fn(&[F]) -> F + Send + Sync)) -> Result<Self> {
        if !(extent > F::zero()) {
            return Err(Error::Contour("extent must be positive".into()));
        }
        let cells = 1usize << depth;
        let pitch = extent / F::from(cells).unwrap();
        let side = cells + 1;
        let total = side.pow(dim as u32);
        let mut nodes = vec![F::zero(); total];
        let volume = pitch.powi(dim as i32);
        let half = F::from(0.5).unwrap();
        let mut mid = vec![F::zero(); dim];
        let mut idx = vec![0usize; dim];
        'cells: loop {
            for (m, &k) in mid.iter_mut().zip(&idx) {
                *m = (F::from(k).unwrap() + half) * pitch;
            }
            let y = f(&mid);
            if !(y >= F::zero()) {
                return Err(Error::NegativeDensity(format!("{y} at {mid:?}")));
            }
            let at: usize = idx.iter().fold(0, |acc, &k| acc * side + k + 1);
            nodes[at] = y * volume;
            for a in (0..dim).rev() {
                idx[a] += 1;
                if idx[a] < cells {
                    continue 'cells;
                }
                idx[a] = 0;
            }
            break;
        }
        // prefix sums along each axis in turn
        let mut stride = 1;
        for _ in 0..dim {
            for i in 0..total {
                if (i / stride) % side != 0 {
                    nodes[i] = nodes[i] + nodes[i - stride];
                }
            }
            stride *= side;
        }
        Ok(Table { dim, cells, pitch, extent, nodes })
    }

    pub fn extent(&self) -> F {
        self.extent
    }

    /// Integral over `[0, y]`, with `y` clipped to the table.
    pub fn cumulative(&self, y: &[F]) -> F {
        let side = self.cells + 1;
        let mut base = vec![0usize; self.dim];
        let mut frac = vec![F::zero(); self.dim];
        for a in 0..self.dim {
            let t = (y[a].max(F::zero()).min(self.extent)) / self.pitch;
            let k = t.floor().to_usize().unwrap_or(0).min(self.cells - 1);
            base[a] = k;
            frac[a] = t - F::from(k).unwrap();
        }
        let mut acc = F::zero();
        for corner in 0..1usize << self.dim {
            let mut w = F::one();
            let mut at = 0;
            for a in 0..self.dim {
                let up = (corner >> a) & 1 == 1;
                w = w * if up { frac[a] } else { F::one() - frac[a] };
                at = at * side + base[a] + usize::from(up);
            }
            if w != F::zero() {
                acc = acc + w * self.nodes[at];
            }
        }
        acc
    }

    fn snap(&self, y: &[F], up: bool) -> Vec<F> {
        y.iter()
            .map(|c| {
                let t = c.max(F::zero()).min(self.extent) / self.pitch;
                (if up { t.ceil() } else { t.floor() }) * self.pitch
            })
            .collect()
    }

    /// Masses of the largest node-aligned box inside `[lo, hi]` and the smallest
    /// one around it; for a non-negative density they bracket the true mass up to
    /// the midpoint error.
    pub fn box_mass_bounds(&self, lo: &[F], hi: &[F]) -> (F, F) {
        let inner = self.box_mass(&self.snap(lo, true), &self.snap(hi, false));
        let outer = self.box_mass(&self.snap(lo, false), &self.snap(hi, true));
        (inner, outer)
    }

    /// Integral over the box `[lo, hi]`, empty when `hi < lo` somewhere.
    pub fn box_mass(&self, lo: &[F], hi: &[F]) -> F {
        if lo.iter().zip(hi).any(|(a, b)| b <= a) {
            return F::zero();
        }
        let mut acc = F::zero();
        let mut y = vec![F::zero(); self.dim];
        for corner in 0..1usize << self.dim {
            let mut odd = false;
            for a in 0..self.dim {
                if (corner >> a) & 1 == 1 {
                    y[a] = hi[a];
                } else {
                    y[a] = lo[a];
                    odd = !odd;
                }
            }
            let g = self.cumulative(&y);
            acc = if odd { acc - g } else { acc + g };
        }
        acc
    }
}
