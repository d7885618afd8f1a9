use std::sync::Arc;

use proptest::prelude::*;
use shiftdim::contour::{
    check_contour_axioms, random_samples, Componentwise, ContourSpec, Density, Density1, DistanceType,
    MultivariateShift, Region,
};
use shiftdim::Extended;

fn finite(v: &Extended<Vec<f64>>) -> Vec<f64> {
    match v {
        Extended::Finite(y) => y.clone(),
        Extended::Infinite => panic!("expected a finite value"),
    }
}

fn gauss() -> Density<f64> {
    Arc::new(|y: &[f64]| (-((y[0] - 2.0).powi(2) + (y[1] - 1.0).powi(2)) / 4.5).exp())
}

fn unit_componentwise() -> ContourSpec<f64> {
    let one: Density1<f64> = Arc::new(|_| 1.0);
    let id: Density1<f64> = Arc::new(|t| t);
    ContourSpec::Componentwise(Componentwise::new(vec![(one.clone(), id.clone()), (one, id)], 40.0, 10).unwrap())
}

fn flat_multivariate(levels: u32) -> MultivariateShift<f64> {
    let one: Density<f64> = Arc::new(|_: &[f64]| 1.0);
    MultivariateShift::new(vec![one.clone(), one], vec![1.0, 1.0], 8.0, 4, 1.0, levels).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn standard_and_truncated_are_exact(x in prop::array::uniform2(0.0..10.0f64), eps in 0.0..5.0f64, a in prop::array::uniform2(0.0..20.0f64)) {
        let s = ContourSpec::standard(vec![1.0, 0.5]).unwrap();
        let r = s.eval(&x, eps).unwrap();
        prop_assert_eq!(r.accuracy, 0.0);
        prop_assert_eq!(finite(&r.value), vec![x[0] + eps, x[1] + 0.5 * eps]);
        let t = ContourSpec::truncated(s, a.to_vec()).unwrap();
        let r = t.eval(&x, eps).unwrap();
        prop_assert_eq!(r.accuracy, 0.0);
        let reached = x[0] + eps >= a[0] && x[1] + 0.5 * eps >= a[1];
        prop_assert_eq!(r.value == Extended::Infinite, reached);
    }

    #[test]
    fn unit_componentwise_is_standard(x in prop::array::uniform2(0.0..15.0f64), eps in 0.0..10.0f64) {
        let c = finite(&unit_componentwise().eval(&x, eps).unwrap().value);
        prop_assert!((c[0] - x[0] - eps).abs() < 1e-6);
        prop_assert!((c[1] - x[1] - eps).abs() < 1e-6);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn finer_quadrature_stays_within_reported_accuracy(x in prop::array::uniform2(0.0..4.0f64), eps in 0.05..1.5f64) {
        let coarse = DistanceType::new(vec![1.0, 1.0], gauss(), 30.0, 8, 1e-6, Region::LShape).unwrap();
        let fine = DistanceType::new(vec![1.0, 1.0], gauss(), 30.0, 9, 1e-6, Region::LShape).unwrap();
        let a = coarse.eval(&x, eps).unwrap();
        let b = fine.eval(&x, eps).unwrap();
        prop_assume!(a.value.is_finite() && b.value.is_finite());
        let (p, q) = (finite(&a.value), finite(&b.value));
        for k in 0..2 {
            prop_assert!((p[k] - q[k]).abs() <= a.accuracy + 1e-12, "{} vs {} with accuracy {}", p[k], q[k], a.accuracy);
        }
    }

    #[test]
    fn meet_estimates_refine_monotonically(x in prop::array::uniform2(0.0..40.0f64)) {
        let m = flat_multivariate(6);
        let levels = m.meet_estimates(&x).unwrap();
        // with f = 1 the cumulative mass of [0, y] is y1 * y2, so b_a = max(x) / extent
        let exact = x[0].max(x[1]) / 8.0;
        let mut pitch = 1.0;
        for (k, b) in levels.iter().enumerate() {
            for a in 0..2 {
                prop_assert!(b[a] >= exact - 1e-12);
                prop_assert!(b[a] - exact <= pitch + 1e-12);
                if k > 0 {
                    prop_assert!(b[a] <= levels[k - 1][a]);
                }
            }
            pitch /= 2.0;
        }
    }
}

#[test]
fn multivariate_closed_form_across_levels() {
    for levels in 0..=8 {
        let m = flat_multivariate(levels);
        for eps in [0.0, 0.5, 1.0, 1.5, 2.0, 2.5] {
            let y = finite(&m.eval(&[0.0, 0.0], eps).unwrap().value);
            assert!((y[0] - eps * eps).abs() < 1e-6 && (y[1] - eps * eps).abs() < 1e-6, "{levels} {eps} {y:?}");
        }
    }
}

#[test]
fn rectangles_break_the_lax_axiom() {
    let f: Density<f64> = Arc::new(|y: &[f64]| 0.5 * (-0.5 * (y[0] + y[1])).exp());
    let c = ContourSpec::DistanceType(DistanceType::new(vec![1.0, 1.0], f, 30.0, 8, 1e-6, Region::Rectangle).unwrap());
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(7);
    let samples = random_samples(&mut rng, 2, 200, 0.0, 5.0, 2.0, 1.0);
    let report = check_contour_axioms(&c, &samples, 1e-6).unwrap();
    assert!(!report.passed());
}

#[test]
fn single_precision_evaluation() {
    let s: ContourSpec<f32> = ContourSpec::standard(vec![2.0, 1.0]).unwrap();
    assert_eq!(s.eval(&[1.0, 1.0], 0.5).unwrap().value, Extended::Finite(vec![2.0, 1.5]));
}
