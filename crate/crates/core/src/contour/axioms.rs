use rand::Rng;

use super::{ContourSpec, Real, Value};
use crate::error::Result;
use crate::scalar::Extended;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `x <= C(x, eps)`
    Extensive,
    /// `C(C(x, eps), tau) <= C(x, eps + tau)`
    Lax,
    /// `x <= x'`, `eps <= eps'` give `C(x, eps) <= C(x', eps')`
    Monotone,
}

/// One probe: `x <= x2` and `eps <= eps2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample<F> {
    pub x: Vec<F>,
    pub x2: Vec<F>,
    pub eps: F,
    pub eps2: F,
    pub tau: F,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub samples: usize,
    pub failures: usize,
    /// Largest coordinate excess over all checks; infinite when a finite bound was
    /// exceeded by infinity.
    pub worst: f64,
    pub worst_axiom: Option<Axiom>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// How far `a <= b` fails, coordinatewise; 0 when it holds.
fn excess<F: Real>(a: &Value<F>, b: &Value<F>) -> f64 {
    match (a, b) {
        (_, Extended::Infinite) => 0.0,
        (Extended::Infinite, Extended::Finite(_)) => f64::INFINITY,
        (Extended::Finite(a), Extended::Finite(b)) => {
            a.iter().zip(b).map(|(p, q)| (*p - *q).to_f64().unwrap()).fold(0.0, f64::max)
        }
    }
}

pub fn check_contour_axioms<F: Real>(c: &ContourSpec<F>, samples: &[Sample<F>], tol: f64) -> Result<AxiomReport> {
    let mut report = AxiomReport { samples: samples.len(), failures: 0, worst: 0.0, worst_axiom: None };
    let mut record = |axiom: Axiom, e: f64| {
        if e > tol {
            report.failures += 1;
        }
        if e > report.worst {
            report.worst = e;
            report.worst_axiom = Some(axiom);
        }
    };
    for s in samples {
        let x = Extended::Finite(s.x.clone());
        let y = c.eval(&s.x, s.eps)?.value;
        record(Axiom::Extensive, excess(&x, &y));
        let twice = c.eval_extended(&y, s.tau)?.value;
        let once = c.eval(&s.x, s.eps + s.tau)?.value;
        record(Axiom::Lax, excess(&twice, &once));
        let far = c.eval(&s.x2, s.eps2)?.value;
        record(Axiom::Monotone, excess(&y, &far));
    }
    Ok(report)
}

/// Samples with `x` in `[lo, hi]^r`, `x2 - x` in `[0, spread]^r` and all shifts in `[0, eps_max]`.
pub fn random_samples<F: Real, R: Rng>(
    rng: &mut R,
    dim: usize,
    n: usize,
    lo: f64,
    hi: f64,
    spread: f64,
    eps_max: f64,
) -> Vec<Sample<F>> {
    let f = |t: f64| F::from_f64(t).unwrap();
    (0..n)
        .map(|_| {
            let x: Vec<f64> = (0..dim).map(|_| rng.gen_range(lo..=hi)).collect();
            let x2 = x.iter().map(|a| f(a + rng.gen_range(0.0..=spread))).collect();
            let eps = rng.gen_range(0.0..=eps_max);
            Sample {
                x: x.into_iter().map(f).collect(),
                x2,
                eps: f(eps),
                eps2: f(eps + rng.gen_range(0.0..=eps_max)),
                tau: f(rng.gen_range(0.0..=eps_max)),
            }
        })
        .collect()
}
