//! JSON formats for modules, results, step functions and contour specs.
//!
//! Rationals are written as integers when integral and as `[num, den]` otherwise;
//! on input decimal numbers and `"a/b"` strings are accepted as well. Objects are
//! emitted with sorted keys.

use std::collections::HashMap;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::algorithm::ShiftDimResult;
use crate::contour::{Componentwise, ContourSpec, Curve, Density, Density1, DistanceType, MultivariateShift, Region};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::field::Matrix;
use crate::grid::{GridModule, HomogeneousElement, Point};
use crate::interval::{DirectSum, IntervalModule};
use crate::oracle::OracleResult;
use crate::scalar::Extended;
use crate::step::{Interval, StepFunction, Value as StepValue};
use crate::{Rational, RationalDegree};

/// Any module accepted on input.
#[derive(Debug, Clone, PartialEq)]
pub enum Module {
    Interval(IntervalModule<Rational>),
    DirectSum(DirectSum<Rational>),
    Grid(GridModule<Rational>),
}

impl Module {
    pub fn beta0(&self) -> usize {
        match self {
            Module::Interval(m) => m.beta0(),
            Module::DirectSum(m) => m.beta0(),
            Module::Grid(m) => m.beta0(),
        }
    }

    /// Summands as interval modules, if the module is given that way.
    pub fn summands(&self) -> Option<Vec<IntervalModule<Rational>>> {
        match self {
            Module::Interval(m) => Some(vec![m.clone()]),
            Module::DirectSum(m) => Some(m.summands().to_vec()),
            Module::Grid(_) => None,
        }
    }

    /// Grid form over F_p; grid input keeps its own field.
    pub fn to_grid(&self, p: u32) -> Result<GridModule<Rational>> {
        match self {
            Module::Grid(g) => Ok(g.clone()),
            _ => GridModule::from_intervals(&self.summands().unwrap(), p),
        }
    }
}

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| err(format!("missing field \"{key}\"")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(format!("{what} must be an array")))
}

fn uint(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| err(format!("{what} must be a non-negative integer")))
}

fn real(v: &Value, what: &str) -> Result<f64> {
    v.as_f64().ok_or_else(|| err(format!("{what} must be a number")))
}

pub fn parse_rational_str(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || err(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let negative = int.starts_with('-');
    let whole: i64 = if int.is_empty() || int == "-" { 0 } else { int.parse().map_err(|_| bad())? };
    let den = 10i64.pow(frac.len() as u32);
    let part: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    let num = whole.checked_mul(den).and_then(|w| if negative { w.checked_sub(part) } else { w.checked_add(part) });
    Ok(Rational::new(num.ok_or_else(bad)?, den))
}

pub fn parse_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from_integer(i)),
            None => parse_rational_str(&n.to_string()),
        },
        Value::String(s) => parse_rational_str(s),
        Value::Array(a) if a.len() == 2 => {
            let (n, d) = (a[0].as_i64(), a[1].as_i64());
            match (n, d) {
                (Some(n), Some(d)) if d != 0 => Ok(Rational::new(n, d)),
                _ => Err(err(format!("bad rational pair {v}"))),
            }
        }
        _ => Err(err(format!("not a rational number: {v}"))),
    }
}

pub fn rational_to_json(q: Rational) -> Value {
    if q.is_integer() {
        json!(q.to_integer())
    } else {
        json!([q.numer(), q.denom()])
    }
}

pub fn parse_degree(v: &Value) -> Result<RationalDegree> {
    let coords = array(v, "degree")?.iter().map(parse_rational).collect::<Result<Vec<_>>>()?;
    Degree::new(coords)
}

/// Comma-separated rationals, as on the command line: `3/2,1`.
pub fn parse_degree_list(s: &str) -> Result<RationalDegree> {
    Degree::new(s.split(',').map(parse_rational_str).collect::<Result<Vec<_>>>()?)
}

pub fn degree_to_json(d: &RationalDegree) -> Value {
    Value::Array(d.coords().iter().map(|c| rational_to_json(*c)).collect())
}

fn degrees(v: &Value, what: &str) -> Result<Vec<RationalDegree>> {
    array(v, what)?.iter().map(parse_degree).collect()
}

fn parse_interval(v: &Value) -> Result<IntervalModule<Rational>> {
    let gens = degrees(field(v, "generators")?, "generators")?;
    let rels = match v.get("relations") {
        Some(r) => degrees(r, "relations")?,
        None => Vec::new(),
    };
    let r = match v.get("r") {
        Some(r) => uint(r, "r")? as usize,
        None => gens.first().map(|g| g.dim()).ok_or_else(|| err("empty module needs \"r\""))?,
    };
    IntervalModule::new(r, gens, rels)
}

fn point_key(k: &str) -> Result<Point> {
    let (i, j) = k.split_once(',').ok_or_else(|| err(format!("map key {k:?} is not \"i,j\"")))?;
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| err(format!("map key {k:?} is not \"i,j\"")));
    Ok((parse(i)?, parse(j)?))
}

/// Nested rows, or a flat row-major list shaped by the fiber dimensions.
fn parse_matrix(v: &Value, rows: usize, cols: usize, p: u32) -> Result<Matrix> {
    let entries = array(v, "matrix")?;
    let reduce = |x: &Value| -> Result<u32> {
        let i = x.as_i64().ok_or_else(|| err("matrix entries must be integers"))?;
        Ok(i.rem_euclid(p as i64) as u32)
    };
    let nested = entries.iter().all(|e| e.is_array()) && !entries.is_empty();
    let data: Vec<u32> = if nested {
        let mut d = Vec::new();
        for row in entries {
            let row = array(row, "matrix row")?;
            if row.len() != cols {
                return Err(Error::Grid(format!("matrix row has {} entries, expected {cols}", row.len())));
            }
            for x in row {
                d.push(reduce(x)?);
            }
        }
        d
    } else {
        entries.iter().map(reduce).collect::<Result<_>>()?
    };
    Matrix::new(if nested { entries.len() } else { rows }, cols, data)
}

fn parse_grid(v: &Value) -> Result<GridModule<Rational>> {
    let p = match v.get("p") {
        Some(p) => u32::try_from(uint(p, "p")?).map_err(|_| err("p is too large"))?,
        None => 2,
    };
    let coords = |key: &str| -> Result<Vec<Rational>> { array(field(v, key)?, key)?.iter().map(parse_rational).collect() };
    let (xs, ys) = (coords("xs")?, coords("ys")?);
    let dims: Vec<Vec<usize>> = array(field(v, "dims")?, "dims")?
        .iter()
        .map(|c| array(c, "dims column")?.iter().map(|d| Ok(uint(d, "fiber dimension")? as usize)).collect())
        .collect::<Result<_>>()?;
    let dim_at = |pt: Point| dims.get(pt.0).and_then(|c| c.get(pt.1)).copied();
    let maps = |key: &str, step: fn(Point) -> Point| -> Result<HashMap<Point, Matrix>> {
        let mut out = HashMap::new();
        let Some(obj) = v.get(key) else { return Ok(out) };
        let obj = obj.as_object().ok_or_else(|| err(format!("{key} must be an object")))?;
        for (k, m) in obj {
            let from = point_key(k)?;
            let (Some(s), Some(t)) = (dim_at(from), dim_at(step(from))) else {
                return Err(Error::Grid(format!("{key} entry {k:?} leaves the grid")));
            };
            out.insert(from, parse_matrix(m, t, s, p)?);
        }
        Ok(out)
    };
    let h = maps("hmaps", |(i, j)| (i + 1, j))?;
    let vm = maps("vmaps", |(i, j)| (i, j + 1))?;
    GridModule::new(p, xs, ys, dims, h, vm)
}

pub fn parse_module(v: &Value) -> Result<Module> {
    match field(v, "type")?.as_str() {
        Some("interval") => Ok(Module::Interval(parse_interval(v)?)),
        Some("direct_sum") => {
            let parts = array(field(v, "summands")?, "summands")?
                .iter()
                .map(|s| match parse_module(s)? {
                    Module::Interval(m) => Ok(m),
                    _ => Err(err("direct_sum summands must be interval modules")),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Module::DirectSum(DirectSum::new(parts)?))
        }
        Some("grid") => Ok(Module::Grid(parse_grid(v)?)),
        _ => Err(err("\"type\" must be interval, direct_sum or grid")),
    }
}

pub fn parse_module_str(s: &str) -> Result<Module> {
    parse_module(&serde_json::from_str(s).map_err(|e| err(e.to_string()))?)
}

pub fn interval_to_json(m: &IntervalModule<Rational>) -> Value {
    json!({
        "type": "interval",
        "r": m.dim(),
        "generators": m.generators().points().iter().map(degree_to_json).collect::<Vec<_>>(),
        "relations": m.relations().points().iter().map(degree_to_json).collect::<Vec<_>>(),
    })
}

fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| json!((0..m.cols()).map(|c| m.get(r, c)).collect::<Vec<_>>())).collect())
}

pub fn grid_to_json(g: &GridModule<Rational>) -> Value {
    let mut h = Map::new();
    let mut v = Map::new();
    for i in 0..g.nx() {
        for j in 0..g.ny() {
            let live = g.dim_at((i, j)) > 0;
            if i + 1 < g.nx() && live && g.dim_at((i + 1, j)) > 0 {
                h.insert(format!("{i},{j}"), matrix_to_json(g.hmap((i, j))));
            }
            if j + 1 < g.ny() && live && g.dim_at((i, j + 1)) > 0 {
                v.insert(format!("{i},{j}"), matrix_to_json(g.vmap((i, j))));
            }
        }
    }
    json!({
        "type": "grid",
        "p": g.p(),
        "xs": g.xs().iter().map(|x| rational_to_json(*x)).collect::<Vec<_>>(),
        "ys": g.ys().iter().map(|y| rational_to_json(*y)).collect::<Vec<_>>(),
        "dims": g.dims(),
        "hmaps": h,
        "vmaps": v,
    })
}

pub fn module_to_json(m: &Module) -> Value {
    match m {
        Module::Interval(m) => interval_to_json(m),
        Module::DirectSum(s) => json!({
            "type": "direct_sum",
            "summands": s.summands().iter().map(interval_to_json).collect::<Vec<_>>(),
        }),
        Module::Grid(g) => grid_to_json(g),
    }
}

fn step_value_to_json(v: StepValue) -> Value {
    match v {
        Extended::Finite(n) => json!(n),
        Extended::Infinite => json!("inf"),
    }
}

pub fn step_to_json(f: &StepFunction<Rational>) -> Value {
    json!({
        "breakpoints": f.breakpoints().iter().map(|t| rational_to_json(*t)).collect::<Vec<_>>(),
        "values": f.values().iter().map(|v| step_value_to_json(*v)).collect::<Vec<_>>(),
    })
}

pub fn parse_step(v: &Value) -> Result<StepFunction<Rational>> {
    let b = array(field(v, "breakpoints")?, "breakpoints")?.iter().map(parse_rational).collect::<Result<_>>()?;
    let vals = array(field(v, "values")?, "values")?
        .iter()
        .map(|x| match x {
            Value::String(s) if s == "inf" => Ok(Extended::Infinite),
            _ => Ok(Extended::Finite(uint(x, "step value")?)),
        })
        .collect::<Result<_>>()?;
    StepFunction::new(b, vals)
}

pub fn intervals_to_json(loc: &[Interval<Rational>]) -> Value {
    let end = |e: &Extended<Rational>| match e {
        Extended::Finite(t) => rational_to_json(*t),
        Extended::Infinite => json!("inf"),
    };
    Value::Array(loc.iter().map(|(a, b)| json!([rational_to_json(*a), end(b)])).collect())
}

pub fn shiftdim_to_json(r: &ShiftDimResult<Rational>) -> Value {
    json!({
        "dimension": step_value_to_json(r.dimension.map(|d| d as u64)),
        "basis": r.basis.iter().map(degree_to_json).collect::<Vec<_>>(),
        "iterations": r.iterations,
    })
}

pub fn element_to_json(g: &GridModule<Rational>, e: &HomogeneousElement) -> Value {
    json!({ "degree": degree_to_json(&g.degree(e.at)), "vector": e.vector })
}

/// `dimension` is null when the search cap was hit.
pub fn oracle_to_json(g: &GridModule<Rational>, r: &OracleResult) -> Value {
    json!({
        "dimension": r.dimension,
        "basis": r.basis.iter().map(|e| element_to_json(g, e)).collect::<Vec<_>>(),
    })
}

fn reals(v: &Value, what: &str) -> Result<Vec<f64>> {
    array(v, what)?.iter().map(|x| real(x, what)).collect()
}

fn opt_real(v: &Value, key: &str, default: f64) -> Result<f64> {
    v.get(key).map_or(Ok(default), |x| real(x, key))
}

fn opt_uint(v: &Value, key: &str, default: u64) -> Result<u64> {
    v.get(key).map_or(Ok(default), |x| uint(x, key))
}

/// Builtin densities on `R^r`: `const`, `exp_decay`, `gauss`.
pub fn parse_density(v: &Value, r: usize) -> Result<Density<f64>> {
    let name = field(v, "name")?.as_str().ok_or_else(|| err("density name must be a string"))?;
    let per_axis = |key: &str, default: f64| -> Result<Vec<f64>> {
        match v.get(key) {
            None => Ok(vec![default; r]),
            Some(x) if x.is_number() => Ok(vec![real(x, key)?; r]),
            Some(x) => {
                let w = reals(x, key)?;
                if w.len() != r {
                    return Err(Error::DimensionMismatch { expected: r, found: w.len() });
                }
                Ok(w)
            }
        }
    };
    let scale = opt_real(v, "scale", 1.0)?;
    match name {
        "const" => {
            let c = opt_real(v, "value", 1.0)?;
            Ok(Arc::new(move |_: &[f64]| c))
        }
        "exp_decay" => {
            let w = per_axis("rate", 1.0)?;
            Ok(Arc::new(move |y: &[f64]| scale * (-y.iter().zip(&w).map(|(a, b)| a * b).sum::<f64>()).exp()))
        }
        "gauss" => {
            let c = per_axis("center", 0.0)?;
            let s = opt_real(v, "sigma", 1.0)?;
            if !(s > 0.0) {
                return Err(err("sigma must be positive"));
            }
            Ok(Arc::new(move |y: &[f64]| {
                let d2: f64 = y.iter().zip(&c).map(|(a, b)| (a - b) * (a - b)).sum();
                scale * (-d2 / (2.0 * s * s)).exp()
            }))
        }
        _ => Err(err(format!("unknown density {name:?}"))),
    }
}

/// Shift callbacks for the componentwise family: `linear` (`slope * e`) and
/// `quadratic` (`a * e + b * e^2`).
fn parse_shift(v: &Value) -> Result<Density1<f64>> {
    let name = field(v, "name")?.as_str().ok_or_else(|| err("shift name must be a string"))?;
    match name {
        "linear" => {
            let s = opt_real(v, "slope", 1.0)?;
            Ok(Arc::new(move |e| s * e))
        }
        "quadratic" => {
            let (a, b) = (opt_real(v, "a", 1.0)?, opt_real(v, "b", 1.0)?);
            Ok(Arc::new(move |e| a * e + b * e * e))
        }
        _ => Err(err(format!("unknown shift {name:?}"))),
    }
}

pub fn parse_contour(v: &Value) -> Result<ContourSpec<f64>> {
    let family = field(v, "family")?.as_str().ok_or_else(|| err("family must be a string"))?;
    let depth = || -> Result<u32> { Ok(opt_uint(v, "depth", 8)? as u32) };
    let extent = || opt_real(v, "extent", 20.0);
    match family {
        "standard" => ContourSpec::standard(reals(field(v, "v")?, "v")?),
        "truncated" => ContourSpec::truncated(parse_contour(field(v, "inner")?)?, reals(field(v, "alpha")?, "alpha")?),
        "curve" => {
            let knots = array(field(v, "knots")?, "knots")?
                .iter()
                .map(|k| {
                    let k = array(k, "knot")?;
                    if k.len() != 2 {
                        return Err(err("knot must be [t, point]"));
                    }
                    Ok((real(&k[0], "knot parameter")?, reals(&k[1], "knot point")?))
                })
                .collect::<Result<Vec<_>>>()?;
            let axes = array(field(v, "translation_axes")?, "translation_axes")?
                .iter()
                .map(|a| Ok(uint(a, "axis")? as usize))
                .collect::<Result<Vec<_>>>()?;
            Ok(ContourSpec::Curve(Curve::new(knots, &axes)?))
        }
        "distance_type" => {
            let dir = reals(field(v, "v")?, "v")?;
            let f = parse_density(field(v, "density")?, dir.len())?;
            let region = match v.get("region").and_then(Value::as_str).unwrap_or("l_shape") {
                "l_shape" => Region::LShape,
                "rectangle" => Region::Rectangle,
                other => return Err(err(format!("unknown region {other:?}"))),
            };
            let tol = opt_real(v, "tail_tol", 1e-6)?;
            Ok(ContourSpec::DistanceType(DistanceType::new(dir, f, extent()?, depth()?, tol, region)?))
        }
        "componentwise" => {
            let axes = array(field(v, "axes")?, "axes")?
                .iter()
                .map(|a| Ok((parse_density1(field(a, "density")?)?, parse_shift(field(a, "shift")?)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(ContourSpec::Componentwise(Componentwise::new(axes, extent()?, depth()?)?))
        }
        "multivariate_shift" => {
            let dir = reals(field(v, "v")?, "v")?;
            let fs = array(field(v, "densities")?, "densities")?
                .iter()
                .map(|d| parse_density(d, dir.len()))
                .collect::<Result<Vec<_>>>()?;
            let grid0 = opt_real(v, "grid0", 1.0)?;
            let levels = opt_uint(v, "refine_levels", 4)? as u32;
            Ok(ContourSpec::MultivariateShift(MultivariateShift::new(fs, dir, extent()?, depth()?, grid0, levels)?))
        }
        _ => Err(err(format!("unknown contour family {family:?}"))),
    }
}

fn parse_density1(v: &Value) -> Result<Density1<f64>> {
    let f = parse_density(v, 1)?;
    Ok(Arc::new(move |t| f(&[t])))
}

pub fn contour_value_to_json(v: &Extended<Vec<f64>>) -> Value {
    match v {
        Extended::Finite(y) => json!(y),
        Extended::Infinite => json!("inf"),
    }
}
