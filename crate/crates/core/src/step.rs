use crate::error::{Error, Result};
use crate::scalar::{Extended, Scalar};

pub type Value = Extended<u64>;

/// Right-continuous, non-increasing step function on [0, inf).
///
/// `values[k]` holds on `[breakpoints[k], breakpoints[k+1])`, the last one on
/// `[breakpoints[last], inf)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepFunction<T> {
    breakpoints: Vec<T>,
    values: Vec<Value>,
}

impl<T: Scalar> StepFunction<T> {
    pub fn new(breakpoints: Vec<T>, values: Vec<Value>) -> Result<Self> {
        if breakpoints.is_empty() || breakpoints.len() != values.len() {
            return Err(Error::StepFunction("need one value per breakpoint".into()));
        }
        if !breakpoints[0].is_zero() {
            return Err(Error::StepFunction("first breakpoint must be 0".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::StepFunction("breakpoints must increase".into()));
        }
        if values.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::StepFunction("values must not increase".into()));
        }
        Ok(Self::canonical(breakpoints, values))
    }

    fn canonical(breakpoints: Vec<T>, values: Vec<Value>) -> Self {
        let mut b = Vec::with_capacity(breakpoints.len());
        let mut v: Vec<Value> = Vec::with_capacity(values.len());
        for (t, x) in breakpoints.into_iter().zip(values) {
            if v.last() != Some(&x) {
                b.push(t);
                v.push(x);
            }
        }
        StepFunction { breakpoints: b, values: v }
    }

    pub fn constant(value: Value) -> Self {
        StepFunction { breakpoints: vec![T::zero()], values: vec![value] }
    }

    pub fn breakpoints(&self) -> &[T] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    pub fn eval(&self, t: T) -> Value {
        let k = self.breakpoints.partition_point(|b| *b <= t);
        self.values[k.saturating_sub(1)]
    }

    /// First time the function drops to `y` or below.
    fn first_at_most(&self, y: Value) -> Extended<T> {
        self.values
            .iter()
            .position(|x| *x <= y)
            .map_or(Extended::Infinite, |k| Extended::Finite(self.breakpoints[k]))
    }

    fn merged_breakpoints(fs: &[&Self]) -> Vec<T> {
        let mut b: Vec<T> = fs.iter().flat_map(|f| f.breakpoints.iter().copied()).collect();
        b.sort_by(|x, y| x.partial_cmp(y).unwrap());
        b.dedup();
        b
    }

    /// Pointwise sum.
    pub fn sum(fs: &[Self]) -> Self {
        if fs.is_empty() {
            return Self::constant(Extended::Finite(0));
        }
        let refs: Vec<&Self> = fs.iter().collect();
        let b = Self::merged_breakpoints(&refs);
        let v = b
            .iter()
            .map(|&t| fs.iter().map(|f| f.eval(t)).fold(Extended::Finite(0), |a, x| a + x))
            .collect();
        Self::canonical(b, v)
    }

    /// Pieces `(start, end, f, g)` over the merged breakpoints; `end` is None on the last piece.
    fn pieces<'a>(&'a self, g: &'a Self) -> impl Iterator<Item = (T, Option<T>, Value, Value)> + 'a {
        let b = Self::merged_breakpoints(&[self, g]);
        let n = b.len();
        (0..n).map(move |k| (b[k], b.get(k + 1).copied(), self.eval(b[k]), g.eval(b[k])))
    }

    /// Exact value of the integral of |f - g|^p for integer p >= 1.
    pub fn lp_integral(&self, g: &Self, p: u32) -> Result<Extended<T>> {
        if p == 0 {
            return Err(Error::BadExponent);
        }
        let mut acc = T::zero();
        for (a, b, x, y) in self.pieces(g) {
            if x == y {
                continue;
            }
            let (Extended::Finite(x), Extended::Finite(y), Some(b)) = (x, y, b) else {
                return Ok(Extended::Infinite);
            };
            let diff = T::from_int(x.abs_diff(y) as i64);
            acc = acc + (b - a) * num_traits::pow(diff, p as usize);
        }
        Ok(Extended::Finite(acc))
    }

    /// (integral of |f - g|^p)^(1/p); the root is the only inexact step for integer p.
    pub fn lp_distance(&self, g: &Self, p: f64) -> Result<f64> {
        if !(p >= 1.0) {
            return Err(Error::BadExponent);
        }
        if p.fract() == 0.0 && p <= u32::MAX as f64 {
            return Ok(match self.lp_integral(g, p as u32)? {
                Extended::Finite(v) => v.to_f64().powf(1.0 / p),
                Extended::Infinite => f64::INFINITY,
            });
        }
        let mut acc = 0.0;
        for (a, b, x, y) in self.pieces(g) {
            if x == y {
                continue;
            }
            let (Extended::Finite(x), Extended::Finite(y), Some(b)) = (x, y, b) else {
                return Ok(f64::INFINITY);
            };
            acc += (b - a).to_f64() * (x.abs_diff(y) as f64).powf(p);
        }
        Ok(acc.powf(1.0 / p))
    }

    /// Smallest e with f(t + e) <= g(t) for all t.
    fn one_sided(&self, g: &Self) -> Extended<T> {
        let mut worst = T::zero();
        for (s, y) in g.breakpoints.iter().zip(&g.values) {
            match self.first_at_most(*y) {
                Extended::Infinite => return Extended::Infinite,
                Extended::Finite(t) => worst = worst.max_of(t - *s),
            }
        }
        Extended::Finite(worst)
    }

    /// Shift-interleaving distance, exact over breakpoints.
    pub fn interleaving_distance(&self, g: &Self) -> Extended<T> {
        match (self.one_sided(g), g.one_sided(self)) {
            (Extended::Finite(a), Extended::Finite(b)) => Extended::Finite(a.max_of(b)),
            _ => Extended::Infinite,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("tau,value\n");
        for (t, v) in self.breakpoints.iter().zip(&self.values) {
            s.push_str(&format!("{t},{v}\n"));
        }
        s
    }

    /// Axis-aligned polyline plot over [0, tau_max].
    pub fn to_svg(&self, tau_max: f64) -> String {
        let (w, h, pad) = (480.0, 240.0, 30.0);
        let vmax = self
            .values
            .iter()
            .filter_map(|v| v.finite())
            .max()
            .unwrap_or(1)
            .max(1) as f64;
        let x = |t: f64| pad + (t / tau_max).min(1.0) * (w - 2.0 * pad);
        let y = |v: Value| match v {
            Extended::Finite(v) => h - pad - v as f64 / (vmax * 1.1) * (h - 2.0 * pad),
            Extended::Infinite => pad,
        };
        let mut pts = Vec::new();
        for (k, (t, v)) in self.breakpoints.iter().zip(&self.values).enumerate() {
            let t0 = t.to_f64();
            if t0 > tau_max {
                break;
            }
            if k > 0 {
                pts.push((x(t0), y(self.values[k - 1])));
            }
            pts.push((x(t0), y(*v)));
        }
        pts.push((x(tau_max), y(*self.values.last().unwrap())));
        let path: Vec<String> = pts.iter().map(|(a, b)| format!("{a:.2},{b:.2}")).collect();
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\">\n\
             <line x1=\"{pad}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"black\"/>\n\
             <line x1=\"{pad}\" y1=\"{pad}\" x2=\"{pad}\" y2=\"{b}\" stroke=\"black\"/>\n\
             <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"{}\"/>\n\
             </svg>\n",
            path.join(" "),
            b = h - pad,
            r = w - pad,
        )
    }
}

/// Half-open interval `[start, end)`; `end` may be infinite.
pub type Interval<T> = (T, Extended<T>);

/// Where the summed curves differ from the curve of the sum, as maximal intervals.
pub fn locus_nonadditivity<T: Scalar>(summands: &[StepFunction<T>], sum_curve: &StepFunction<T>) -> Vec<Interval<T>> {
    let total = StepFunction::sum(summands);
    let mut out: Vec<Interval<T>> = Vec::new();
    for (a, b, x, y) in total.pieces(sum_curve) {
        if x == y {
            continue;
        }
        let end = b.map_or(Extended::Infinite, Extended::Finite);
        match out.last_mut() {
            Some(last) if last.1 == Extended::Finite(a) => last.1 = end,
            _ => out.push((a, end)),
        }
    }
    out
}

/// L^p distance between the summed summand curves and the curve of the sum.
pub fn err_vp<T: Scalar>(summands: &[StepFunction<T>], sum_curve: &StepFunction<T>, p: f64) -> Result<f64> {
    let total = StepFunction::sum(summands);
    for (a, _, x, y) in total.pieces(sum_curve) {
        if y > x {
            return Err(Error::SubadditivityViolated(a.to_string()));
        }
    }
    total.lp_distance(sum_curve, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn sf(b: &[Rational], v: &[u64]) -> StepFunction<Rational> {
        StepFunction::new(b.to_vec(), v.iter().map(|&x| Extended::Finite(x)).collect()).unwrap()
    }

    #[test]
    fn canonical_merge() {
        let f = sf(&[q(0, 1), q(1, 1), q(2, 1)], &[3, 3, 1]);
        assert_eq!(f.breakpoints(), &[q(0, 1), q(2, 1)]);
        assert_eq!(f.eval(q(2, 1)), Extended::Finite(1));
        assert_eq!(f.eval(q(19, 10)), Extended::Finite(3));
    }

    #[test]
    fn rejects_increasing() {
        let r = StepFunction::new(vec![q(0, 1), q(1, 1)], vec![Extended::Finite(1), Extended::Finite(2)]);
        assert!(r.is_err());
    }

    #[test]
    fn interleaving_examples() {
        let f = sf(&[q(0, 1), q(1, 1)], &[5, 0]);
        let g = sf(&[q(0, 1), q(2, 1)], &[5, 0]);
        assert_eq!(f.interleaving_distance(&f), Extended::Finite(q(0, 1)));
        assert_eq!(f.interleaving_distance(&g), Extended::Finite(q(1, 1)));
        let inf = StepFunction::<Rational>::constant(Extended::Infinite);
        assert_eq!(inf.interleaving_distance(&g), Extended::Infinite);
    }

    #[test]
    fn revisited_pair() {
        let m1 = sf(&[q(0, 1), q(1, 1), q(2, 1)], &[5, 2, 0]);
        let m2 = sf(&[q(0, 1), q(1, 1), q(2, 1)], &[2, 1, 0]);
        let both = sf(&[q(0, 1), q(1, 1), q(3, 2), q(2, 1)], &[7, 3, 2, 0]);
        let parts = [m1, m2];
        assert_eq!(locus_nonadditivity(&parts, &both), vec![(q(3, 2), Extended::Finite(q(2, 1)))]);
        assert_eq!(err_vp(&parts, &both, 1.0).unwrap(), 0.5);
        assert_eq!(StepFunction::sum(&parts).lp_integral(&both, 3).unwrap(), Extended::Finite(q(1, 2)));
    }

    #[test]
    fn infinite_tail() {
        let f = sf(&[q(0, 1)], &[1]);
        let g = sf(&[q(0, 1), q(1, 1)], &[1, 0]);
        assert_eq!(f.lp_distance(&g, 2.0).unwrap(), f64::INFINITY);
        assert!(f.lp_distance(&g, 0.5).is_err());
        assert!(err_vp(&[g.clone()], &f, 1.0).is_err());
    }
}
