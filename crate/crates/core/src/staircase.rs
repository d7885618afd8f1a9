use std::cmp::Ordering;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Finite antichain of degrees, the minimal elements of a monomial upset.
///
/// In dimension 2 the points are sorted by increasing first coordinate,
/// so second coordinates are strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Staircase<T> {
    dim: usize,
    points: Vec<Degree<T>>,
}

fn lex<T: Scalar>(a: &Degree<T>, b: &Degree<T>) -> Ordering {
    for (x, y) in a.coords().iter().zip(b.coords()) {
        match x.partial_cmp(y).unwrap_or(Ordering::Equal) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

impl<T: Scalar> Staircase<T> {
    /// Minimal elements of `points`, deduplicated and sorted.
    pub fn new(dim: usize, points: Vec<Degree<T>>) -> Result<Self> {
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
            }
        }
        let mut points = points;
        points.sort_by(lex);
        points.dedup();
        let points = if dim == 2 {
            // sorted by (a, b): keep a point iff its b beats every earlier b
            let mut kept: Vec<Degree<T>> = Vec::with_capacity(points.len());
            for p in points {
                if kept.last().map_or(true, |q| p[1] < q[1]) {
                    kept.push(p);
                }
            }
            kept
        } else {
            let minimal: Vec<bool> = points
                .iter()
                .map(|p| !points.iter().any(|q| q != p && q.leq(p)))
                .collect();
            points.into_iter().zip(minimal).filter(|(_, m)| *m).map(|(p, _)| p).collect()
        };
        Ok(Staircase { dim, points })
    }

    pub fn empty(dim: usize) -> Self {
        Staircase { dim, points: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Degree<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains_point(&self, d: &Degree<T>) -> bool {
        self.points.iter().any(|p| p == d)
    }

    /// Whether `d` lies in the upset, i.e. some point is `<= d`.
    pub fn covers(&self, d: &Degree<T>) -> bool {
        if self.dim == 2 {
            let k = self.points.partition_point(|p| p[0] <= d[0]);
            k > 0 && self.points[k - 1][1] <= d[1]
        } else {
            self.points.iter().any(|p| p.leq(d))
        }
    }

    pub fn is_antichain(&self) -> bool {
        self.points
            .iter()
            .enumerate()
            .all(|(i, p)| self.points[i + 1..].iter().all(|q| !p.comparable(q)))
    }

    /// Union of the two upsets, re-minimised.
    pub fn union(&self, other: &Self) -> Result<Self> {
        let mut pts = self.points.clone();
        pts.extend(other.points.iter().cloned());
        Staircase::new(self.dim, pts)
    }

    pub fn swapped(&self) -> Self {
        let mut points: Vec<_> = self.points.iter().map(|p| p.swapped()).collect();
        points.reverse();
        Staircase { dim: self.dim, points }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn pts(c: &[[i64; 2]]) -> Vec<Degree<Rational>> {
        c.iter().map(|p| Degree::from_ints(p).unwrap()).collect()
    }

    #[test]
    fn minimises_and_sorts() {
        let s = Staircase::new(2, pts(&[[4, 4], [3, 1], [1, 3], [3, 1], [5, 5]])).unwrap();
        assert_eq!(s.points(), &pts(&[[1, 3], [3, 1]])[..]);
        assert!(s.is_antichain());
    }

    #[test]
    fn upset_membership() {
        let s = Staircase::new(2, pts(&[[1, 3], [3, 1]])).unwrap();
        assert!(s.covers(&Degree::from_ints(&[2, 3]).unwrap()));
        assert!(!s.covers(&Degree::from_ints(&[2, 2]).unwrap()));
        assert!(s.covers(&Degree::from_ints(&[3, 1]).unwrap()));
    }

    #[test]
    fn three_dimensional() {
        let p: Vec<Degree<Rational>> = [[2, 0, 0], [0, 3, 0], [2, 1, 0], [0, 0, 5]]
            .iter()
            .map(|c| Degree::from_ints(c).unwrap())
            .collect();
        let s = Staircase::new(3, p).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.covers(&Degree::from_ints(&[2, 1, 0]).unwrap()));
    }
}
