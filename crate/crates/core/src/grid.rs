use std::collections::HashMap;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::field::{Field, Matrix, Subspace};
use crate::interval::IntervalModule;
use crate::scalar::Scalar;

pub type Point = (usize, usize);

/// Finitely presented two-parameter module on a rectangular grid over F_p.
///
/// Fibers sit at `(xs[i], ys[j])`. The module at an arbitrary degree equals the
/// fiber at the largest grid point below it; it is zero below the first coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct GridModule<T> {
    field: Field,
    xs: Vec<T>,
    ys: Vec<T>,
    dims: Vec<Vec<usize>>,
    hmaps: Vec<Vec<Matrix>>,
    vmaps: Vec<Vec<Matrix>>,
}

/// A nonzero vector in one fiber, leading entry 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousElement {
    pub at: Point,
    pub vector: Vec<u32>,
}

fn strictly_sorted<T: Scalar>(v: &[T]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

impl<T: Scalar> GridModule<T> {
    /// `hmaps[(i,j)]` maps fiber (i,j) to (i+1,j); `vmaps[(i,j)]` maps (i,j) to (i,j+1).
    /// Maps touching a zero fiber may be omitted.
    pub fn new(
        p: u32,
        xs: Vec<T>,
        ys: Vec<T>,
        dims: Vec<Vec<usize>>,
        mut hmaps: HashMap<Point, Matrix>,
        mut vmaps: HashMap<Point, Matrix>,
    ) -> Result<Self> {
        let field = Field::new(p)?;
        let (nx, ny) = (xs.len(), ys.len());
        if nx == 0 || ny == 0 || !strictly_sorted(&xs) || !strictly_sorted(&ys) {
            return Err(Error::Grid("coordinates must be nonempty and strictly increasing".into()));
        }
        if xs[0] < T::zero() || ys[0] < T::zero() {
            return Err(Error::NegativeCoordinate);
        }
        if dims.len() != nx || dims.iter().any(|c| c.len() != ny) {
            return Err(Error::Grid(format!("dims must be {nx}x{ny}")));
        }
        let take = |maps: &mut HashMap<Point, Matrix>, from: Point, to: Point| -> Result<Matrix> {
            let (s, t) = (dims[from.0][from.1], dims[to.0][to.1]);
            match maps.remove(&from) {
                Some(m) if m.rows() == t && m.cols() == s => {
                    if m.data().iter().any(|x| *x >= p) {
                        return Err(Error::Grid(format!("entry out of range at {from:?}")));
                    }
                    Ok(m)
                }
                Some(m) => Err(Error::Grid(format!(
                    "map at {from:?} is {}x{}, expected {t}x{s}",
                    m.rows(),
                    m.cols()
                ))),
                None if s == 0 || t == 0 => Ok(Matrix::zero(t, s)),
                None => Err(Error::Grid(format!("missing map at {from:?}"))),
            }
        };
        let mut h = vec![Vec::with_capacity(ny); nx.saturating_sub(1)];
        for (i, col) in h.iter_mut().enumerate() {
            for j in 0..ny {
                col.push(take(&mut hmaps, (i, j), (i + 1, j))?);
            }
        }
        let mut v = vec![Vec::with_capacity(ny.saturating_sub(1)); nx];
        for (i, col) in v.iter_mut().enumerate() {
            for j in 0..ny - 1 {
                col.push(take(&mut vmaps, (i, j), (i, j + 1))?);
            }
        }
        if let Some(k) = hmaps.keys().chain(vmaps.keys()).next() {
            return Err(Error::Grid(format!("map at {k:?} leaves the grid")));
        }
        let m = GridModule { field, xs, ys, dims, hmaps: h, vmaps: v };
        m.check_commutative()?;
        Ok(m)
    }

    fn check_commutative(&self) -> Result<()> {
        let f = &self.field;
        for i in 0..self.nx() - 1 {
            for j in 0..self.ny() - 1 {
                let a = self.vmaps[i + 1][j].mul(f, &self.hmaps[i][j]);
                let b = self.hmaps[i][j + 1].mul(f, &self.vmaps[i][j]);
                if a != b {
                    return Err(Error::NonCommuting(i, j));
                }
            }
        }
        Ok(())
    }

    /// Direct sum of interval modules (dimension 2) on the grid of their critical coordinates.
    pub fn from_intervals(summands: &[IntervalModule<T>], p: u32) -> Result<Self> {
        if let Some(m) = summands.iter().find(|m| m.dim() != 2) {
            return Err(Error::UnsupportedDimension(m.dim()));
        }
        let mut xs = vec![T::zero()];
        let mut ys = vec![T::zero()];
        for m in summands {
            for d in m.generators().points().iter().chain(m.relations().points()) {
                xs.push(d[0]);
                ys.push(d[1]);
            }
        }
        for c in [&mut xs, &mut ys] {
            c.sort_by(|a, b| a.partial_cmp(b).unwrap());
            c.dedup();
        }
        let alive = |i: usize, j: usize| -> Vec<usize> {
            let d = Degree::new(vec![xs[i], ys[j]]).unwrap();
            (0..summands.len()).filter(|&k| summands[k].contains_unchecked(&d)).collect()
        };
        let live: Vec<Vec<Vec<usize>>> = (0..xs.len()).map(|i| (0..ys.len()).map(|j| alive(i, j)).collect()).collect();
        let dims = live.iter().map(|c| c.iter().map(|a| a.len()).collect()).collect();
        let block = |from: &[usize], to: &[usize]| -> Matrix {
            let mut m = Matrix::zero(to.len(), from.len());
            for (c, k) in from.iter().enumerate() {
                if let Some(r) = to.iter().position(|x| x == k) {
                    m.set(r, c, 1);
                }
            }
            m
        };
        let mut hmaps = HashMap::new();
        let mut vmaps = HashMap::new();
        for i in 0..xs.len() {
            for j in 0..ys.len() {
                if i + 1 < xs.len() {
                    hmaps.insert((i, j), block(&live[i][j], &live[i + 1][j]));
                }
                if j + 1 < ys.len() {
                    vmaps.insert((i, j), block(&live[i][j], &live[i][j + 1]));
                }
            }
        }
        GridModule::new(p, xs, ys, dims, hmaps, vmaps)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn xs(&self) -> &[T] {
        &self.xs
    }

    pub fn ys(&self) -> &[T] {
        &self.ys
    }

    pub fn nx(&self) -> usize {
        self.xs.len()
    }

    pub fn ny(&self) -> usize {
        self.ys.len()
    }

    pub fn dim_at(&self, at: Point) -> usize {
        self.dims[at.0][at.1]
    }

    pub fn dims(&self) -> &[Vec<usize>] {
        &self.dims
    }

    pub fn hmap(&self, at: Point) -> &Matrix {
        &self.hmaps[at.0][at.1]
    }

    pub fn vmap(&self, at: Point) -> &Matrix {
        &self.vmaps[at.0][at.1]
    }

    pub fn degree(&self, at: Point) -> Degree<T> {
        Degree::new(vec![self.xs[at.0], self.ys[at.1]]).unwrap()
    }

    /// Grid point carrying the fiber at `d`, or None where the module is zero.
    pub fn locate(&self, d: &Degree<T>) -> Option<Point> {
        let i = self.xs.partition_point(|x| *x <= d[0]);
        let j = self.ys.partition_point(|y| *y <= d[1]);
        (i > 0 && j > 0).then(|| (i - 1, j - 1))
    }

    /// Image of `vec` at `from` under the structure map to `to >= from`.
    pub fn push(&self, from: Point, vec: &[u32], to: Point) -> Vec<u32> {
        let f = &self.field;
        let mut v = vec.to_vec();
        for i in from.0..to.0 {
            v = self.hmaps[i][from.1].apply(f, &v);
        }
        for j in from.1..to.1 {
            v = self.vmaps[to.0][j].apply(f, &v);
        }
        v
    }

    fn incoming(&self, at: Point) -> Subspace {
        let f = &self.field;
        let mut s = Subspace::new(self.dim_at(at));
        if at.0 > 0 {
            for c in self.hmaps[at.0 - 1][at.1].columns() {
                s.insert(f, c);
            }
        }
        if at.1 > 0 {
            for c in self.vmaps[at.0][at.1 - 1].columns() {
                s.insert(f, c);
            }
        }
        s
    }

    /// A minimal homogeneous generating set: at each point, unit vectors completing
    /// the incoming images to a basis.
    pub fn generators(&self) -> Vec<HomogeneousElement> {
        let f = &self.field;
        let mut out = Vec::new();
        for j in 0..self.ny() {
            for i in 0..self.nx() {
                let n = self.dim_at((i, j));
                let mut s = self.incoming((i, j));
                for k in 0..n {
                    let mut e = vec![0; n];
                    e[k] = 1;
                    if s.insert(f, e.clone()) {
                        out.push(HomogeneousElement { at: (i, j), vector: e });
                    }
                }
            }
        }
        out
    }

    /// Minimal number of homogeneous generators.
    pub fn beta0(&self) -> usize {
        let mut total = 0;
        for i in 0..self.nx() {
            for j in 0..self.ny() {
                total += self.dim_at((i, j)) - self.incoming((i, j)).rank();
            }
        }
        total
    }

    /// Fiberwise subspaces of the submodule generated by `s`.
    pub fn submodule_closure(&self, s: &[HomogeneousElement]) -> Vec<Vec<Subspace>> {
        let f = &self.field;
        let mut sub: Vec<Vec<Subspace>> =
            (0..self.nx()).map(|i| (0..self.ny()).map(|j| Subspace::new(self.dim_at((i, j)))).collect()).collect();
        let mut work: Vec<(Point, Vec<u32>)> = s.iter().map(|e| (e.at, e.vector.clone())).collect();
        while let Some(((i, j), v)) = work.pop() {
            if !sub[i][j].insert(f, v.clone()) {
                continue;
            }
            if i + 1 < self.nx() {
                work.push(((i + 1, j), self.hmaps[i][j].apply(f, &v)));
            }
            if j + 1 < self.ny() {
                work.push(((i, j + 1), self.vmaps[i][j].apply(f, &v)));
            }
        }
        sub
    }

    fn shifted(&self, at: Point, v: &Degree<T>) -> Point {
        self.locate(&self.degree(at).add(v)).expect("shift of a grid point stays on the grid")
    }

    /// Whether `v * M` lies in the submodule generated by `s`.
    pub fn is_v_annihilating(&self, s: &[HomogeneousElement], v: &Degree<T>) -> Result<bool> {
        if v.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: v.dim() });
        }
        let f = &self.field;
        let sub = self.submodule_closure(s);
        for i in 0..self.nx() {
            for j in 0..self.ny() {
                let t = self.shifted((i, j), v);
                let n = self.dim_at((i, j));
                for k in 0..n {
                    let mut e = vec![0; n];
                    e[k] = 1;
                    if !sub[t.0][t.1].contains(f, &self.push((i, j), &e, t)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Same module on a finer grid; `xs`, `ys` must contain the current coordinates.
    pub fn refine(&self, xs: &[T], ys: &[T]) -> Result<Self> {
        if !strictly_sorted(xs) || !strictly_sorted(ys) {
            return Err(Error::Grid("refined coordinates must increase".into()));
        }
        if self.xs.iter().any(|x| !xs.contains(x)) || self.ys.iter().any(|y| !ys.contains(y)) {
            return Err(Error::Grid("refinement must contain the original coordinates".into()));
        }
        let fx = |x: T| self.xs.partition_point(|a| *a <= x).checked_sub(1);
        let fy = |y: T| self.ys.partition_point(|a| *a <= y).checked_sub(1);
        let old = |i: usize, j: usize| fx(xs[i]).zip(fy(ys[j]));
        let dims = (0..xs.len())
            .map(|i| (0..ys.len()).map(|j| old(i, j).map_or(0, |o| self.dim_at(o))).collect())
            .collect::<Vec<Vec<usize>>>();
        let link = |a: Option<Point>, b: Option<Point>| -> Matrix {
            match (a, b) {
                (Some(a), Some(b)) if a == b => Matrix::identity(self.dim_at(a)),
                (Some(a), Some(b)) if a.0 < b.0 => self.hmaps[a.0][a.1].clone(),
                (Some(a), Some(b)) if a.1 < b.1 => self.vmaps[a.0][a.1].clone(),
                (a, b) => Matrix::zero(b.map_or(0, |b| self.dim_at(b)), a.map_or(0, |a| self.dim_at(a))),
            }
        };
        let mut hmaps = HashMap::new();
        let mut vmaps = HashMap::new();
        for i in 0..xs.len() {
            for j in 0..ys.len() {
                if i + 1 < xs.len() {
                    hmaps.insert((i, j), link(old(i, j), old(i + 1, j)));
                }
                if j + 1 < ys.len() {
                    vmaps.insert((i, j), link(old(i, j), old(i, j + 1)));
                }
            }
        }
        GridModule::new(self.p(), xs.to_vec(), ys.to_vec(), dims, hmaps, vmaps)
    }

    /// Block-diagonal direct sum over the union of the coordinate lists.
    pub fn direct_sum(parts: &[GridModule<T>]) -> Result<Self> {
        let first = parts.first().ok_or_else(|| Error::Grid("empty direct sum".into()))?;
        if parts.iter().any(|m| m.p() != first.p()) {
            return Err(Error::Grid("summands over different fields".into()));
        }
        let mut xs: Vec<T> = parts.iter().flat_map(|m| m.xs.iter().copied()).collect();
        let mut ys: Vec<T> = parts.iter().flat_map(|m| m.ys.iter().copied()).collect();
        for c in [&mut xs, &mut ys] {
            c.sort_by(|a, b| a.partial_cmp(b).unwrap());
            c.dedup();
        }
        let refined: Vec<_> = parts.iter().map(|m| m.refine(&xs, &ys)).collect::<Result<_>>()?;
        let dims: Vec<Vec<usize>> = (0..xs.len())
            .map(|i| (0..ys.len()).map(|j| refined.iter().map(|m| m.dim_at((i, j))).sum()).collect())
            .collect();
        let diag = |pick: &dyn Fn(&GridModule<T>) -> &Matrix| -> Matrix {
            let blocks: Vec<&Matrix> = refined.iter().map(pick).collect();
            let rows = blocks.iter().map(|b| b.rows()).sum();
            let cols = blocks.iter().map(|b| b.cols()).sum();
            let mut m = Matrix::zero(rows, cols);
            let (mut r0, mut c0) = (0, 0);
            for b in blocks {
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        m.set(r0 + r, c0 + c, b.get(r, c));
                    }
                }
                r0 += b.rows();
                c0 += b.cols();
            }
            m
        };
        let mut hmaps = HashMap::new();
        let mut vmaps = HashMap::new();
        for i in 0..xs.len() {
            for j in 0..ys.len() {
                if i + 1 < xs.len() {
                    hmaps.insert((i, j), diag(&|m| m.hmap((i, j))));
                }
                if j + 1 < ys.len() {
                    vmaps.insert((i, j), diag(&|m| m.vmap((i, j))));
                }
            }
        }
        GridModule::new(first.p(), xs, ys, dims, hmaps, vmaps)
    }
}
