//! Worked examples as ready-made modules.

use std::collections::HashMap;

use crate::degree::Degree;
use crate::field::Matrix;
use crate::grid::{GridModule, Point};
use crate::interval::IntervalModule;
use crate::{Rational, RationalDegree};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn degree(c: &[(i64, i64)]) -> RationalDegree {
    Degree::new(c.iter().map(|&(n, d)| q(n, d)).collect()).unwrap()
}

fn ints(c: &[i64]) -> RationalDegree {
    Degree::from_ints(c).unwrap()
}

fn interval(gens: &[&[i64]], rels: &[&[i64]]) -> IntervalModule<Rational> {
    let r = gens[0].len();
    IntervalModule::new(r, gens.iter().map(|g| ints(g)).collect(), rels.iter().map(|g| ints(g)).collect()).unwrap()
}

/// Coordinates given in tenths.
fn tenths(gens: &[[i64; 2]], rels: &[[i64; 2]]) -> IntervalModule<Rational> {
    let d = |p: &[i64; 2]| degree(&[(p[0], 10), (p[1], 10)]);
    IntervalModule::new(2, gens.iter().map(d).collect(), rels.iter().map(d).collect()).unwrap()
}

/// Free staircase with generators (0,8), (4,6), (6,4), (8,2), (11,0).
pub fn staircase_five() -> IntervalModule<Rational> {
    interval(&[&[0, 8], &[4, 6], &[6, 4], &[8, 2], &[11, 0]], &[])
}

/// `<x^3 y, x y^3> / <x^4 y^4>`.
pub fn monomial_quotient() -> IntervalModule<Rational> {
    interval(&[&[3, 1], &[1, 3]], &[&[4, 4]])
}

/// `<x y^4, x^3 y^2, x^5 y>`.
pub fn ideal() -> IntervalModule<Rational> {
    interval(&[&[1, 4], &[3, 2], &[5, 1]], &[])
}

/// Square of [`ideal`].
pub fn ideal_squared() -> IntervalModule<Rational> {
    interval(&[&[2, 8], &[4, 6], &[6, 4], &[8, 3], &[10, 2]], &[])
}

/// `<x^2, y^3, z^5>`.
pub fn ideal_3d() -> IntervalModule<Rational> {
    interval(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]], &[])
}

/// Two-generator interval module paired with the quiver in the curve example.
pub fn m2() -> IntervalModule<Rational> {
    IntervalModule::new(
        2,
        vec![ints(&[0, 5]), degree(&[(5, 1), (3, 2)])],
        vec![ints(&[2, 6]), degree(&[(9, 1), (3, 2)])],
    )
    .unwrap()
}

/// `<x>/<x y^2>` and `<y>/<x^2 y>`.
pub fn additivity_pair() -> [IntervalModule<Rational>; 2] {
    [interval(&[&[1, 0]], &[&[1, 2]]), interval(&[&[0, 1]], &[&[2, 1]])]
}

pub fn three_summands() -> [IntervalModule<Rational>; 3] {
    [
        interval(&[&[2, 0]], &[&[6, 0], &[2, 4]]),
        interval(&[&[1, 1]], &[&[5, 1], &[1, 5]]),
        interval(&[&[0, 2]], &[&[4, 2], &[0, 6]]),
    ]
}

/// Four single-generator summands whose direct sum is non-additive on `[3, 4.3)`
/// along `v = (1, 1)`.
pub fn rectangle_summands() -> [IntervalModule<Rational>; 4] {
    [
        tenths(&[[0, 36]], &[[43, 39], [57, 36]]),
        tenths(&[[7, 16]], &[[36, 72], [50, 30]]),
        tenths(&[[14, 9]], &[[30, 66], [43, 52], [57, 9]]),
        tenths(&[[21, 0]], &[[36, 72], [37, 46], [50, 45], [66, 0]]),
    ]
}

/// Indecomposable module on the grid `0..=12 x 0..=7` over F_2 with five generators.
pub fn indecomposable() -> GridModule<Rational> {
    let rows: [&[(usize, usize)]; 7] = [
        &[(8, 1), (9, 1), (10, 1), (11, 1)],
        &[(6, 1), (7, 1), (8, 2), (9, 1), (10, 1), (11, 1)],
        &[(4, 1), (5, 1), (6, 2), (7, 2), (8, 2), (9, 1), (10, 1), (11, 1)],
        &[(4, 1), (6, 1)],
        &[(0, 1), (1, 1), (2, 2), (3, 2), (4, 2), (5, 1), (6, 1)],
        &[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)],
        &[(0, 1), (1, 1), (2, 1)],
    ];
    let (nx, ny) = (13, 8);
    let mut dims = vec![vec![0; ny]; nx];
    for (j, row) in rows.iter().enumerate() {
        for &(i, d) in row.iter() {
            dims[i][j] = d;
        }
    }
    let col = |a: u32, b: u32| Matrix::new(2, 1, vec![a, b]).unwrap();
    let row = |a: u32, b: u32| Matrix::new(1, 2, vec![a, b]).unwrap();
    let special_h: HashMap<Point, Matrix> = [
        ((7, 1), col(0, 1)),
        ((8, 1), row(0, 1)),
        ((5, 2), col(1, 0)),
        ((8, 2), row(0, 1)),
        ((1, 4), col(1, 0)),
        ((4, 4), row(0, 1)),
        ((1, 5), col(1, 0)),
        ((2, 5), row(1, 0)),
    ]
    .into();
    let special_v: HashMap<Point, Matrix> = [
        ((8, 0), col(1, 1)),
        ((6, 1), col(0, 1)),
        ((7, 1), col(0, 1)),
        ((6, 2), row(0, 1)),
        ((4, 3), col(1, 0)),
        ((3, 4), row(1, 0)),
        ((4, 4), row(1, 0)),
        ((2, 5), row(1, 1)),
    ]
    .into();
    let fill = |special: HashMap<Point, Matrix>, step: fn(Point) -> Point| -> HashMap<Point, Matrix> {
        let mut out = special;
        for i in 0..nx {
            for j in 0..ny {
                let (a, b) = ((i, j), step((i, j)));
                if b.0 >= nx || b.1 >= ny || out.contains_key(&a) {
                    continue;
                }
                let (s, t) = (dims[a.0][a.1], dims[b.0][b.1]);
                if s > 0 && s == t {
                    out.insert(a, Matrix::identity(s));
                }
            }
        }
        out
    };
    let h = fill(special_h, |(i, j)| (i + 1, j));
    let v = fill(special_v, |(i, j)| (i, j + 1));
    let xs = (0..nx as i64).map(Rational::from_integer).collect();
    let ys = (0..ny as i64).map(Rational::from_integer).collect();
    GridModule::new(2, xs, ys, dims, h, v).expect("the quiver commutes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quiver_generators() {
        let m = indecomposable();
        assert_eq!(m.beta0(), 5);
        let at: Vec<Point> = m.generators().iter().map(|g| g.at).collect();
        let mut at = at;
        at.sort();
        assert_eq!(at, vec![(0, 4), (2, 4), (4, 2), (6, 1), (8, 0)]);
    }

    #[test]
    fn fixtures_are_well_formed() {
        assert_eq!(staircase_five().beta0(), 5);
        assert_eq!(m2().beta0(), 2);
        assert!(rectangle_summands().iter().all(|m| m.beta0() == 1));
        assert_eq!(ideal_3d().dim(), 3);
    }
}
