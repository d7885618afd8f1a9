use proptest::prelude::*;
use shiftdim::step::Value;
use shiftdim::{err_vp, locus_nonadditivity, stabilize, Extended, Rational, Scalar, StepFunction};

/// Shortest-path metric of a random weighted graph; missing edges may leave components apart.
fn metric() -> impl Strategy<Value = (Vec<Vec<Extended<Rational>>>, Vec<Value>)> {
    (1..=20usize).prop_flat_map(|n| {
        (
            prop::collection::vec(prop::option::weighted(0.6, 1..=40i64), n * n),
            prop::collection::vec(prop::option::weighted(0.9, 0..=9u64), n),
        )
            .prop_map(move |(w, f)| {
                let mut d = vec![vec![Extended::Infinite; n]; n];
                for i in 0..n {
                    d[i][i] = Extended::Finite(Rational::from_integer(0));
                    for j in 0..i {
                        if let Some(x) = w[i * n + j] {
                            let x = Extended::Finite(Rational::new(x, 4));
                            d[i][j] = x;
                            d[j][i] = x;
                        }
                    }
                }
                for k in 0..n {
                    for i in 0..n {
                        for j in 0..n {
                            if let (Extended::Finite(a), Extended::Finite(b)) = (d[i][k], d[k][j]) {
                                if d[i][j] > Extended::Finite(a + b) {
                                    d[i][j] = Extended::Finite(a + b);
                                }
                            }
                        }
                    }
                }
                let f = f.into_iter().map(|v| v.map_or(Extended::Infinite, Extended::Finite)).collect();
                (d, f)
            })
    })
}

fn curve() -> impl Strategy<Value = StepFunction<Rational>> {
    prop::collection::vec((1..=8i64, 0..=3u64), 0..6).prop_map(|steps| {
        let mut t = Rational::from_integer(0);
        let mut breaks = vec![t];
        let mut total: u64 = steps.iter().map(|s| s.1).sum();
        let mut values = vec![Extended::Finite(total)];
        for (dt, drop) in steps {
            t += Rational::new(dt, 2);
            total -= drop;
            breaks.push(t);
            values.push(Extended::Finite(total));
        }
        StepFunction::new(breaks, values).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn stabilization_is_one_lipschitz((d, f) in metric()) {
        let n = d.len();
        let curves: Vec<_> = (0..n).map(|x| stabilize(&d, &f, x).unwrap()).collect();
        for x in 0..n {
            prop_assert_eq!(curves[x].eval(Rational::from_integer(0)), f[x]);
            prop_assert!(curves[x].values().windows(2).all(|w| w[1] <= w[0]));
            for y in 0..n {
                prop_assert!(curves[x].interleaving_distance(&curves[y]) <= d[x][y]);
            }
        }
    }

    #[test]
    fn stabilized_value_is_the_ball_minimum((d, f) in metric(), t in 0..=60i64) {
        let t = Rational::new(t, 4);
        let c = stabilize(&d, &f, 0).unwrap();
        let ball = (0..d.len()).filter(|&y| d[0][y] <= Extended::Finite(t)).map(|y| f[y]).min().unwrap();
        prop_assert_eq!(c.eval(t), ball);
    }

    #[test]
    fn error_vanishes_exactly_off_the_locus(parts in prop::collection::vec(curve(), 1..4), cut in 0..=3u64, at in 1..=10i64) {
        let total = StepFunction::sum(&parts);
        let lowered: Vec<Value> = total
            .breakpoints()
            .iter()
            .zip(total.values())
            .map(|(b, v)| match v {
                Extended::Finite(x) if *b >= Rational::new(at, 2) => Extended::Finite(x.saturating_sub(cut)),
                v => *v,
            })
            .collect();
        let sum_curve = StepFunction::new(total.breakpoints().to_vec(), lowered).unwrap();
        let loc = locus_nonadditivity(&parts, &sum_curve);
        let err = err_vp(&parts, &sum_curve, 1.0).unwrap();
        prop_assert_eq!(err == 0.0, loc.is_empty());
        let measure: f64 = loc
            .iter()
            .map(|(a, b)| b.finite().map_or(f64::INFINITY, |b| (b - *a).to_f64()))
            .sum();
        prop_assert!(measure <= err || err.is_infinite());
    }
}
