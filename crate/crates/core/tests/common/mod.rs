#![allow(dead_code)]

use proptest::prelude::*;
use shiftdim::{Degree, GridModule, IntervalModule, Rational, RationalDegree};

pub fn deg(a: i64, b: i64) -> RationalDegree {
    Degree::from_ints(&[a, b]).unwrap()
}

pub fn half(a: i64, b: i64) -> RationalDegree {
    Degree::new(vec![Rational::new(a, 2), Rational::new(b, 2)]).unwrap()
}

/// Random bivariate interval module with integer corners in `[0, side]`.
pub fn interval(max_gens: usize, max_rels: usize, side: i64) -> impl Strategy<Value = IntervalModule<Rational>> {
    (
        prop::collection::vec((0..=side, 0..=side), 1..=max_gens),
        prop::collection::vec((any::<prop::sample::Index>(), 0..=side, 0..=side), 0..=max_rels),
    )
        .prop_map(move |(gens, rels)| {
            let rels = rels
                .iter()
                .map(|(k, dx, dy)| {
                    let g = gens[k.index(gens.len())];
                    deg((g.0 + dx).min(side), (g.1 + dy).min(side))
                })
                .collect();
            IntervalModule::new(2, gens.iter().map(|g| deg(g.0, g.1)).collect(), rels).unwrap()
        })
}

/// Shift vector with half-integer coordinates in `(0, 5]`.
pub fn shift() -> impl Strategy<Value = RationalDegree> {
    (1..=10i64, 1..=10i64).prop_map(|(a, b)| half(a, b))
}

/// Shift vector with half-integer coordinates in `[0, 5]`, not both zero.
pub fn shift_with_zeros() -> impl Strategy<Value = RationalDegree> {
    (0..=10i64, 0..=10i64).prop_filter("nonzero", |(a, b)| a + b > 0).prop_map(|(a, b)| half(a, b))
}

pub fn grid(parts: &[IntervalModule<Rational>]) -> GridModule<Rational> {
    GridModule::from_intervals(parts, 2).unwrap()
}
