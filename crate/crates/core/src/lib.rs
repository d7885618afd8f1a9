//! Shift-dimension (stabilized zeroth multigraded Betti number) of multiparameter
//! persistence modules.
//!
//! Bivariate interval modules go through a linear-time clustering algorithm;
//! arbitrary finitely presented modules on a grid go through an exhaustive oracle.

pub mod algorithm;
pub mod catalog;
pub mod contour;
pub mod degree;
pub mod error;
pub mod field;
pub mod grid;
pub mod interval;
pub mod json;
pub mod oracle;
pub mod scalar;
pub mod stabilize;
pub mod staircase;
pub mod step;

pub use algorithm::{critical_taus, shift_dimension_2d, stable_rank_curve, subset_oracle, Order, ShiftDimResult};
pub use degree::{Degree, ExtendedDegree};
pub use error::{Error, Result};
pub use grid::{GridModule, HomogeneousElement};
pub use interval::{DirectSum, IntervalModule};
pub use oracle::{shift_dimension_bruteforce, stable_rank_curve_grid, OracleResult};
pub use scalar::{Extended, Scalar};
pub use stabilize::stabilize;
pub use staircase::Staircase;
pub use step::{err_vp, locus_nonadditivity, StepFunction};

pub type Rational = num_rational::Ratio<i64>;
pub type RationalDegree = Degree<Rational>;
pub type RationalInterval = IntervalModule<Rational>;
pub type RationalGrid = GridModule<Rational>;
pub type RationalStep = StepFunction<Rational>;
