use itertools::Itertools;
use rayon::prelude::*;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::interval::IntervalModule;
use crate::scalar::{Extended, Scalar};
use crate::step::StepFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Order {
    /// Generators by increasing first coordinate.
    #[default]
    FromAbove,
    /// Generators by increasing second coordinate.
    FromBelow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftDimResult<T> {
    pub dimension: Extended<usize>,
    pub basis: Vec<Degree<T>>,
    pub iterations: usize,
}

fn check_shift<T: Scalar>(m: &IntervalModule<T>, v: &Degree<T>) -> Result<()> {
    if v.dim() != m.dim() {
        return Err(Error::DimensionMismatch { expected: m.dim(), found: v.dim() });
    }
    if v.coords().iter().any(|c| *c < T::zero()) {
        return Err(Error::NegativeShift);
    }
    Ok(())
}

/// dim_v of a bivariate interval module together with a v-basis of minimal generators.
pub fn shift_dimension_2d<T: Scalar>(
    m: &IntervalModule<T>,
    v: &Degree<T>,
    order: Order,
) -> Result<ShiftDimResult<T>> {
    if m.dim() != 2 {
        return Err(Error::UnsupportedDimension(m.dim()));
    }
    check_shift(m, v)?;
    if v.is_zero() {
        let basis = m.generators().points().to_vec();
        return Ok(ShiftDimResult { dimension: Extended::Finite(basis.len()), basis, iterations: 0 });
    }
    match order {
        Order::FromAbove => Ok(cluster(m, v)),
        Order::FromBelow => {
            let mut r = cluster(&m.swapped(), &v.swapped());
            r.basis = r.basis.iter().rev().map(|d| d.swapped()).collect();
            Ok(r)
        }
    }
}

fn cluster<T: Scalar>(m: &IntervalModule<T>, v: &Degree<T>) -> ShiftDimResult<T> {
    let g = m.generators().points();
    let rels = m.relations().points();
    let n = g.len();
    let (v0, v1) = (v[0], v[1]);

    // nonzero shifts; g_j + v moves right as j grows, so one pointer suffices
    let mut nz = vec![false; n];
    let mut k = 0;
    for j in 0..n {
        let (t0, t1) = (g[j][0] + v0, g[j][1] + v1);
        while k < rels.len() && rels[k][0] <= t0 {
            k += 1;
        }
        nz[j] = !(k > 0 && rels[k - 1][1] <= t1);
    }

    // g_i <= g_j + v  iff  lo[j] <= i <= hi[j]
    let mut hi = vec![0; n];
    let mut lo = vec![0; n];
    let (mut r, mut l) = (0, 0);
    for j in 0..n {
        while r + 1 < n && g[r + 1][0] <= g[j][0] + v0 {
            r += 1;
        }
        hi[j] = r.max(j);
        while g[l][1] > g[j][1] + v1 {
            l += 1;
        }
        lo[j] = l;
    }

    let mut basis = Vec::new();
    let mut live = 0;
    let mut j = 0;
    loop {
        j = j.max(live);
        while j < n && !nz[j] {
            j += 1;
        }
        if j == n {
            break;
        }
        let chosen = hi[j];
        basis.push(g[chosen].clone());
        while live < n && lo[live] <= chosen {
            live += 1;
        }
    }
    ShiftDimResult { dimension: Extended::Finite(basis.len()), iterations: basis.len(), basis }
}

fn ratio_max<T: Scalar>(num: impl Iterator<Item = (T, T)>) -> Option<T> {
    let mut best: Option<T> = None;
    for (diff, vc) in num {
        let t = diff / vc;
        best = Some(best.map_or(t, |b| b.max_of(t)));
    }
    best
}

/// Every tau >= 0 at which a comparison used by the algorithm can change.
pub fn critical_taus<T: Scalar>(m: &IntervalModule<T>, v: &Degree<T>) -> Result<Vec<T>> {
    check_shift(m, v)?;
    if v.is_zero() {
        return Err(Error::ZeroShift);
    }
    let r = m.dim();
    let pos: Vec<usize> = (0..r).filter(|&c| v[c] > T::zero()).collect();
    let zero: Vec<usize> = (0..r).filter(|&c| v[c].is_zero()).collect();
    let mut taus = vec![T::zero()];
    let gens = m.generators().points();
    // first tau with a + tau v >= b, when reachable
    let event = |a: &Degree<T>, b: &Degree<T>| -> Option<T> {
        if zero.iter().any(|&c| a[c] < b[c]) {
            return None;
        }
        ratio_max(pos.iter().map(|&c| (b[c] - a[c], v[c]))).filter(|t| *t >= T::zero())
    };
    for g in gens {
        for rho in m.relations().points() {
            taus.extend(event(g, rho));
        }
        for h in gens {
            if h != g {
                taus.extend(event(g, h));
            }
        }
    }
    taus.sort_by(|a, b| a.partial_cmp(b).unwrap());
    taus.dedup();
    Ok(taus)
}

/// tau -> dim_{tau v}(M) as a right-continuous step function.
pub fn stable_rank_curve<T: Scalar>(m: &IntervalModule<T>, v: &Degree<T>) -> Result<StepFunction<T>> {
    if m.dim() != 2 {
        return Err(Error::UnsupportedDimension(m.dim()));
    }
    let taus = critical_taus(m, v)?;
    let dim_at = |t: T| -> usize {
        let r = cluster_or_all(m, &v.scale(t));
        r.basis.len()
    };
    let checked: Vec<(u64, bool)> = taus
        .par_iter()
        .enumerate()
        .map(|(k, &t)| {
            let here = dim_at(t);
            let next = match taus.get(k + 1) {
                Some(&u) => (t + u) / T::from_int(2),
                None => t + T::one(),
            };
            (here as u64, dim_at(next) == here)
        })
        .collect();
    if let Some(k) = checked.iter().position(|(_, ok)| !ok) {
        return Err(Error::Internal(format!("missed event after tau = {}", taus[k])));
    }
    StepFunction::new(taus, checked.into_iter().map(|(d, _)| Extended::Finite(d)).collect())
}

fn cluster_or_all<T: Scalar>(m: &IntervalModule<T>, v: &Degree<T>) -> ShiftDimResult<T> {
    if v.is_zero() {
        let basis = m.generators().points().to_vec();
        ShiftDimResult { dimension: Extended::Finite(basis.len()), basis, iterations: 0 }
    } else {
        cluster(m, v)
    }
}

/// Exhaustive search over subsets of minimal generators, in any dimension.
pub fn subset_oracle<T: Scalar>(m: &IntervalModule<T>, v: &Degree<T>) -> Result<ShiftDimResult<T>> {
    check_shift(m, v)?;
    let g = m.generators().points();
    let targets: Vec<Degree<T>> = g
        .iter()
        .map(|x| x.add(v))
        .filter(|t| m.contains_unchecked(t))
        .collect();
    let words = targets.len().div_ceil(64).max(1);
    let covers: Vec<Vec<u64>> = g
        .iter()
        .map(|s| {
            let mut bits = vec![0u64; words];
            for (j, t) in targets.iter().enumerate() {
                if s.leq(t) {
                    bits[j / 64] |= 1 << (j % 64);
                }
            }
            bits
        })
        .collect();
    let mut full = vec![0u64; words];
    for j in 0..targets.len() {
        full[j / 64] |= 1 << (j % 64);
    }
    let mut examined = 0;
    for k in 0..=g.len() {
        for subset in (0..g.len()).combinations(k) {
            examined += 1;
            let mut acc = vec![0u64; words];
            for &i in &subset {
                for (a, b) in acc.iter_mut().zip(&covers[i]) {
                    *a |= b;
                }
            }
            if acc == full {
                let basis: Vec<_> = subset.iter().map(|&i| g[i].clone()).collect();
                return Ok(ShiftDimResult { dimension: Extended::Finite(k), basis, iterations: examined });
            }
        }
    }
    Err(Error::Internal("generator set does not v-generate".into()))
}
