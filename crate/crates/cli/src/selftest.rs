use shiftdim::catalog::*;
use shiftdim::contour::{check_contour_axioms, random_samples, ContourSpec, Density, DistanceType, Region};
use shiftdim::{
    err_vp, locus_nonadditivity, shift_dimension_2d, shift_dimension_bruteforce, stable_rank_curve,
    stable_rank_curve_grid, subset_oracle, Degree, Extended, GridModule, HomogeneousElement, IntervalModule, Order,
    Rational, RationalDegree, StepFunction,
};

pub struct Row {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

fn row(name: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Row {
    let (expected, computed) = (expected.to_string(), computed.to_string());
    Row { name: name.into(), passed: expected == computed, expected, computed }
}

fn d(c: &[i64]) -> RationalDegree {
    Degree::from_ints(c).unwrap()
}

fn fast(m: &IntervalModule<Rational>, v: &RationalDegree) -> String {
    shift_dimension_2d(m, v, Order::FromAbove).map_or_else(|e| e.to_string(), |r| r.dimension.to_string())
}

fn sequence(m: &IntervalModule<Rational>, n: i64) -> String {
    let r = m.dim();
    let out: Vec<String> = (0..=n)
        .map(|k| {
            let v = d(&vec![k; r]);
            if r == 2 {
                fast(m, &v)
            } else {
                subset_oracle(m, &v).map_or_else(|e| e.to_string(), |x| x.dimension.to_string())
            }
        })
        .collect();
    out.join(",")
}

fn show(f: &StepFunction<Rational>) -> String {
    let parts: Vec<String> = f.breakpoints().iter().zip(f.values()).map(|(t, v)| format!("{v}@{t}")).collect();
    parts.join(" ")
}

fn oracle(g: &GridModule<Rational>, v: &RationalDegree) -> String {
    match shift_dimension_bruteforce(g, v, 8) {
        Ok(r) => r.dimension.map_or("unknown".into(), |k| k.to_string()),
        Err(e) => e.to_string(),
    }
}

pub fn run() -> Vec<Row> {
    let mut rows = Vec::new();
    let [m, n] = additivity_pair();
    rows.push(row("support of <x>/<xy^2> at (1,1)", true, m.support_contains(&d(&[1, 1])).unwrap()));
    rows.push(row("beta0 of the five-generator staircase", 5, staircase_five().beta0()));
    rows.push(row("meet((3,1),(1,3))", "(1,1)", d(&[3, 1]).meet(&d(&[1, 3])).unwrap()));
    rows.push(row("dim_(4,4) of the five-generator staircase", 2, fast(&staircase_five(), &d(&[4, 4]))));
    rows.push(row(
        "subset oracle dim_(4,4), five-generator staircase",
        2,
        subset_oracle(&staircase_five(), &d(&[4, 4])).unwrap().dimension,
    ));
    rows.push(row("dim_n of <x^3y,xy^3>/<x^4y^4>", "2,2,1,0,0", sequence(&monomial_quotient(), 4)));
    rows.push(row("dim_n of <xy^4,x^3y^2,x^5y>", "3,3,1,1", sequence(&ideal(), 3)));
    rows.push(row("dim_n of its square", "5,5,1,1", sequence(&ideal_squared(), 3)));
    rows.push(row("dim_n of <x^2,y^3,z^5>", "3,3,1,1,1", sequence(&ideal_3d(), 4)));

    let v = d(&[2, 1]);
    let quiver = indecomposable();
    rows.push(row("beta0 of the indecomposable quiver", 5, quiver.beta0()));
    rows.push(row("dim_(2,1) of the indecomposable quiver", 2, oracle(&quiver, &v)));
    let c1 = stable_rank_curve_grid(&quiver, &v, 8).unwrap();
    let c2 = stable_rank_curve(&m2(), &v).unwrap();
    let g2 = GridModule::from_intervals(&[m2()], 2).unwrap();
    let sum = stable_rank_curve_grid(&GridModule::direct_sum(&[quiver, g2]).unwrap(), &v, 10).unwrap();
    rows.push(row("curve of the quiver along (2,1)", "5@0 2@1 0@2", show(&c1)));
    rows.push(row("curve of M2 along (2,1)", "2@0 1@1 0@2", show(&c2)));
    rows.push(row("curve of the sum along (2,1)", "7@0 3@1 2@3/2 0@2", show(&sum)));
    let pair = [c1, c2];
    rows.push(row("Loc of the pair", "[3/2, 2)", loc(&locus_nonadditivity(&pair, &sum))));
    rows.push(row("err_(v,1) of the pair", 0.5, err_vp(&pair, &sum, 1.0).unwrap()));

    let w = d(&[1, 1]);
    let g = GridModule::from_intervals(&[m.clone(), n.clone()], 2).unwrap();
    rows.push(row("dim_(1,1) of M+N (non-additive pair)", 1, oracle(&g, &w)));
    let elem = HomogeneousElement { at: g.locate(&w).unwrap(), vector: vec![1, 1] };
    rows.push(row("(1,1) at (1,1) annihilates M+N along (1,1)", true, g.is_v_annihilating(&[elem], &w).unwrap()));
    let three = GridModule::from_intervals(&three_summands(), 2).unwrap();
    rows.push(row("dim_(3,3) of the three-summand sum", 1, oracle(&three, &d(&[3, 3]))));

    let rect = rectangle_summands();
    let curves: Vec<_> = rect.iter().map(|m| stable_rank_curve(m, &w).unwrap()).collect();
    let rsum = stable_rank_curve_grid(&GridModule::from_intervals(&rect, 2).unwrap(), &w, 8).unwrap();
    rows.push(row("Loc of the rectangle family", "[3, 43/10)", loc(&locus_nonadditivity(&curves, &rsum))));
    for p in [1.0, 2.0, 3.0] {
        let expected = (0.6 * 2f64.powf(p) + 0.7 * 3f64.powf(p)).powf(1.0 / p);
        let got = err_vp(&curves, &rsum, p).unwrap();
        rows.push(row(format!("err_(v,{p}) of the rectangle family"), true, (got - expected).abs() < 1e-9));
    }

    let c = ContourSpec::standard(vec![4.0, 4.0]).unwrap();
    let y = c.eval(&[0.0, 8.0], 1.0).unwrap().value;
    rows.push(row("standard contour along (4,4) from (0,8)", "[4.0, 12.0]", fmt_value(&y)));
    let f: Density<f64> = std::sync::Arc::new(|y: &[f64]| (-(y[0] + y[1]) / 2.0).exp());
    let rect_contour =
        ContourSpec::DistanceType(DistanceType::new(vec![1.0, 1.0], f, 30.0, 7, 1e-6, Region::Rectangle).unwrap());
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(3);
    let samples = random_samples::<f64, _>(&mut rng, 2, 200, 0.0, 3.0, 1.0, 1.0);
    let report = check_contour_axioms(&rect_contour, &samples, 1e-6).unwrap();
    rows.push(row("rectangle distance variant is not a lax action", false, report.passed()));
    rows
}

fn loc(l: &[(Rational, Extended<Rational>)]) -> String {
    let parts: Vec<String> = l.iter().map(|(a, b)| format!("[{a}, {b})")).collect();
    parts.join(" ")
}

fn fmt_value(v: &Extended<Vec<f64>>) -> String {
    match v {
        Extended::Finite(y) => format!("{y:?}"),
        Extended::Infinite => "inf".into(),
    }
}

pub fn table(rows: &[Row]) -> String {
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut s = String::new();
    for r in rows {
        let mark = if r.passed { "pass" } else { "FAIL" };
        s.push_str(&format!("{mark}  {:width$}  expected {}  got {}\n", r.name, r.expected, r.computed));
    }
    s
}
