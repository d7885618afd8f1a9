//! Exhaustive shift-dimension search on grid modules.

use rayon::prelude::*;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::field::{Field, Subspace};
use crate::grid::{GridModule, HomogeneousElement, Point};
use crate::scalar::{Extended, Scalar};
use crate::step::StepFunction;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// None when no set of at most `cap` elements works.
    pub dimension: Option<usize>,
    pub basis: Vec<HomogeneousElement>,
}

struct Candidate {
    element: HomogeneousElement,
    /// push into each target point, None where the candidate is not below it
    pushes: Vec<Option<Vec<u32>>>,
}

struct Search {
    field: Field,
    dims: Vec<usize>,
    /// (index into points, vector)
    targets: Vec<(usize, Vec<u32>)>,
    /// per point, every target pushed forward from at or below it
    required: Vec<Vec<Vec<u32>>>,
    candidates: Vec<Candidate>,
}

fn below(a: Point, b: Point) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

impl Search {
    fn new<T: Scalar>(m: &GridModule<T>, v: &Degree<T>) -> Self {
        let field = m.field();
        let mut raw: Vec<(Point, Vec<u32>)> = Vec::new();
        for g in m.generators() {
            let to = m.locate(&m.degree(g.at).add(v)).expect("shift stays on the grid");
            let mut w = m.push(g.at, &g.vector, to);
            if field.normalize(&mut w) {
                raw.push((to, w));
            }
        }
        raw.sort_by(|a, b| (a.0 .1, a.0 .0, &a.1).cmp(&(b.0 .1, b.0 .0, &b.1)));
        raw.dedup();
        let mut points: Vec<Point> = raw.iter().map(|t| t.0).collect();
        points.dedup();
        let dims = points.iter().map(|&p| m.dim_at(p)).collect();
        let required = points
            .iter()
            .map(|&t| raw.iter().filter(|(q, _)| below(*q, t)).map(|(q, w)| m.push(*q, w, t)).collect())
            .collect();
        let targets = raw.into_iter().map(|(p, w)| (points.iter().position(|q| *q == p).unwrap(), w)).collect();

        let mut candidates = Vec::new();
        for j in 0..m.ny() {
            for i in 0..m.nx() {
                let at = (i, j);
                let n = m.dim_at(at);
                if n == 0 || !points.iter().any(|&t| below(at, t)) {
                    continue;
                }
                let left = (i > 0).then(|| m.hmap((i - 1, j)));
                let down = (j > 0).then(|| m.vmap((i, j - 1)));
                let span = |mat: Option<&crate::field::Matrix>| {
                    let mut s = Subspace::new(n);
                    for c in mat.map(|x| x.columns()).unwrap_or_default() {
                        s.insert(&field, c);
                    }
                    s
                };
                let (from_left, from_below) = (span(left), span(down));
                for vec in field.normalized_vectors(n) {
                    // an element in an incoming image is dominated by its preimage
                    if from_left.contains(&field, &vec) || from_below.contains(&field, &vec) {
                        continue;
                    }
                    let pushes: Vec<Option<Vec<u32>>> = points
                        .iter()
                        .map(|&t| below(at, t).then(|| m.push(at, &vec, t)))
                        .collect();
                    if pushes.iter().flatten().all(|w| w.iter().all(|x| *x == 0)) {
                        continue;
                    }
                    candidates.push(Candidate { element: HomogeneousElement { at, vector: vec }, pushes });
                }
            }
        }
        Search { field, dims, targets, required, candidates }
    }

    fn spans(&self, chosen: &[usize]) -> Vec<Subspace> {
        let mut spans: Vec<Subspace> = self.dims.iter().map(|&n| Subspace::new(n)).collect();
        for &c in chosen {
            for (s, w) in spans.iter_mut().zip(&self.candidates[c].pushes) {
                if let Some(w) = w {
                    s.insert(&self.field, w.clone());
                }
            }
        }
        spans
    }

    /// First uncovered target point with the current span there, plus a lower
    /// bound on the number of elements still needed.
    fn uncovered(&self, chosen: &[usize]) -> Option<(usize, Subspace, usize)> {
        let mut spans = self.spans(chosen);
        let p = self.targets.iter().find(|(p, w)| !spans[*p].contains(&self.field, w))?.0;
        // one element raises the rank at each point by at most one
        let need = spans
            .iter()
            .zip(&self.required)
            .map(|(s, req)| {
                let mut grown = s.clone();
                req.iter().filter(|w| grown.insert(&self.field, w.to_vec())).count()
            })
            .max()
            .unwrap_or(0);
        Some((p, std::mem::replace(&mut spans[p], Subspace::new(0)), need))
    }

    /// Candidates that enlarge the span at point `p`, in enumeration order.
    fn branches(&self, p: usize, span: &Subspace) -> Vec<usize> {
        (0..self.candidates.len())
            .filter(|&c| {
                self.candidates[c].pushes[p].as_ref().is_some_and(|w| !span.contains(&self.field, w))
            })
            .collect()
    }

    fn dfs(&self, chosen: &mut Vec<usize>, left: usize) -> bool {
        let Some((p, span, need)) = self.uncovered(chosen) else {
            return true;
        };
        if need > left {
            return false;
        }
        for c in self.branches(p, &span) {
            chosen.push(c);
            if self.dfs(chosen, left - 1) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// First witness of size at most `k` in enumeration order.
    fn find(&self, k: usize) -> Option<Vec<usize>> {
        let Some((p, span, need)) = self.uncovered(&[]) else {
            return Some(Vec::new());
        };
        if need > k {
            return None;
        }
        self.branches(p, &span).into_par_iter().find_map_first(|c| {
            let mut chosen = vec![c];
            self.dfs(&mut chosen, k - 1).then_some(chosen)
        })
    }

    fn result(&self, found: Vec<usize>) -> OracleResult {
        OracleResult {
            dimension: Some(found.len()),
            basis: found.into_iter().map(|c| self.candidates[c].element.clone()).collect(),
        }
    }
}

/// Minimal number of homogeneous elements generating a submodule that contains `v * M`.
pub fn shift_dimension_bruteforce<T: Scalar>(m: &GridModule<T>, v: &Degree<T>, cap: usize) -> Result<OracleResult> {
    bounded(m, v, cap, usize::MAX)
}

/// As [`shift_dimension_bruteforce`], given that the answer is at most `upper`.
fn bounded<T: Scalar>(m: &GridModule<T>, v: &Degree<T>, cap: usize, upper: usize) -> Result<OracleResult> {
    if v.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: v.dim() });
    }
    if v.coords().iter().any(|c| *c < T::zero()) {
        return Err(Error::NegativeShift);
    }
    let s = Search::new(m, v);
    let mut k = upper.min(s.targets.len()).min(cap);
    let Some(mut best) = s.find(k) else {
        if k == cap {
            return Ok(OracleResult { dimension: None, basis: Vec::new() });
        }
        return Err(Error::Internal(format!("no witness within the upper bound {k}")));
    };
    k = best.len();
    while k > 0 {
        match s.find(k - 1) {
            Some(w) => {
                k = w.len();
                best = w;
            }
            None => break,
        }
    }
    Ok(s.result(best))
}

/// Stable rank curve of a grid module along `v`, by the oracle at every event.
pub fn stable_rank_curve_grid<T: Scalar>(m: &GridModule<T>, v: &Degree<T>, cap: usize) -> Result<StepFunction<T>> {
    if v.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: v.dim() });
    }
    if v.is_zero() {
        return Err(Error::ZeroShift);
    }
    let mut taus = vec![T::zero()];
    for g in m.generators() {
        let base = m.degree(g.at);
        for (c, coords) in [(0, m.xs()), (1, m.ys())] {
            if v[c] > T::zero() {
                taus.extend(coords.iter().filter(|x| **x > base[c]).map(|x| (*x - base[c]) / v[c]));
            }
        }
    }
    taus.sort_by(|a, b| a.partial_cmp(b).unwrap());
    taus.dedup();
    let beta0 = m.beta0();
    if beta0 > cap {
        return Err(Error::CapExceeded(cap));
    }
    let mut values = vec![Extended::Finite(beta0 as u64)];
    let mut last = beta0;
    let mut used = 1;
    for &t in &taus[1..] {
        if last == 0 {
            break;
        }
        let r = bounded(m, &v.scale(t), cap, last)?;
        last = r.dimension.ok_or(Error::CapExceeded(cap))?;
        values.push(Extended::Finite(last as u64));
        used += 1;
    }
    taus.truncate(used);
    StepFunction::new(taus, values)
}
