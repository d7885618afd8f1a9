mod common;

use common::{deg, interval};
use proptest::prelude::*;
use shiftdim::{Degree, IntervalModule, Staircase};

fn point() -> impl Strategy<Value = (i64, i64)> {
    (0..=24i64, 0..=24i64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn staircases_are_antichains(pts in prop::collection::vec((0..=9i64, 0..=9i64, 0..=9i64), 0..12)) {
        let pts: Vec<shiftdim::RationalDegree> = pts.iter().map(|p| Degree::from_ints(&[p.0, p.1, p.2]).unwrap()).collect();
        let s = Staircase::new(3, pts.clone()).unwrap();
        prop_assert!(s.is_antichain());
        for p in &pts {
            prop_assert!(s.covers(p));
        }
    }

    #[test]
    fn interval_and_truncation_keep_antichains(m in interval(12, 6, 20), a in point()) {
        prop_assert!(m.generators().is_antichain());
        prop_assert!(m.relations().is_antichain());
        let t = m.truncate(&deg(a.0, a.1)).unwrap();
        prop_assert!(t.generators().is_antichain());
        prop_assert!(t.relations().is_antichain());
    }

    #[test]
    fn support_is_order_convex(m in interval(12, 6, 20), d in point(), s in point(), e in point()) {
        let d = deg(d.0, d.1);
        let f = d.add(&deg(s.0, s.1));
        let e = f.add(&deg(e.0, e.1));
        if m.support_contains(&d).unwrap() && m.support_contains(&e).unwrap() {
            prop_assert!(m.support_contains(&f).unwrap());
        }
    }

    #[test]
    fn truncation_removes_the_upset(m in interval(12, 6, 20), a in point(), probes in prop::collection::vec(point(), 32)) {
        let alpha = deg(a.0, a.1);
        let t = m.truncate(&alpha).unwrap();
        for p in probes {
            let p = deg(p.0, p.1);
            prop_assert_eq!(t.support_contains(&p).unwrap(), m.support_contains(&p).unwrap() && !alpha.leq(&p));
        }
        prop_assert!(t.generators().points().iter().all(|g| m.generators().contains_point(g)));
        prop_assert!(t.beta0() <= m.beta0());
    }

    #[test]
    fn stored_parts_rebuild_the_same_module(m in interval(12, 6, 20), a in point()) {
        let t = m.truncate(&deg(a.0, a.1)).unwrap();
        let again = IntervalModule::new(2, t.generators().points().to_vec(), t.relations().points().to_vec()).unwrap();
        prop_assert_eq!(again, t);
    }

    #[test]
    fn swapping_twice_is_identity(m in interval(12, 6, 20)) {
        prop_assert_eq!(m.swapped().swapped(), m);
    }
}

#[test]
fn zero_module_is_accepted_everywhere() {
    let z = IntervalModule::zero(2);
    assert_eq!(z.beta0(), 0);
    assert!(!z.support_contains(&deg(1, 1)).unwrap());
    assert!(z.truncate(&deg(0, 0)).unwrap().is_zero());
    let r = shiftdim::shift_dimension_2d(&z, &deg(1, 1), shiftdim::Order::FromAbove).unwrap();
    assert_eq!(r.dimension, shiftdim::Extended::Finite(0));
}
