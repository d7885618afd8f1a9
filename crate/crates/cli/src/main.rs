use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use serde_json::{json, Value};
use shiftdim::contour::{check_contour_axioms, random_samples};
use shiftdim::json::{self as sj, Module};
use shiftdim::{
    err_vp, locus_nonadditivity, shift_dimension_2d, shift_dimension_bruteforce, stable_rank_curve,
    stable_rank_curve_grid, subset_oracle, Error, GridModule, Order, Rational, RationalDegree, StepFunction,
};

mod selftest;

#[derive(Parser)]
#[command(name = "shiftdim", version, about = "Shift-dimension and stable rank of multiparameter persistence modules")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Above,
    Below,
    /// exhaustive search over generator subsets, any dimension
    Subset,
}

#[derive(Subcommand)]
enum Command {
    /// dim_v of an interval module
    Shiftdim {
        module: PathBuf,
        #[arg(long, value_parser = degree)]
        v: RationalDegree,
        #[arg(long, value_enum, default_value_t = OrderArg::Above)]
        order: OrderArg,
    },
    /// stable rank curve tau -> dim_{tau v}
    Curve {
        module: PathBuf,
        #[arg(long, value_parser = degree)]
        v: RationalDegree,
        /// right end of the SVG plot
        #[arg(long)]
        tau_max: Option<f64>,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    /// brute-force dim_v on the grid form of any module
    Oracle {
        module: PathBuf,
        #[arg(long, value_parser = degree)]
        v: RationalDegree,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    Beta0 {
        module: PathBuf,
    },
    /// quotient by everything at or above alpha
    Truncate {
        module: PathBuf,
        #[arg(long, value_parser = degree)]
        alpha: RationalDegree,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// where the direct sum of the given modules is not additive, and by how much
    Locus {
        #[arg(required = true)]
        modules: Vec<PathBuf>,
        #[arg(long, value_parser = degree)]
        v: RationalDegree,
        /// field characteristic for the grid oracle
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 8)]
        cap: usize,
        /// L^p exponent of the error
        #[arg(long, default_value_t = 1.0)]
        exponent: f64,
    },
    /// evaluate C(x, eps)
    Contour {
        spec: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Vec<f64>,
        #[arg(long)]
        eps: f64,
    },
    /// check the contour axioms on random samples
    ContourCheck {
        spec: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// samples x from [0, box]^r
        #[arg(long = "box", default_value_t = 3.0)]
        bound: f64,
        #[arg(long, default_value_t = 1.0)]
        eps_max: f64,
    },
    /// reproduce the worked examples
    Selftest,
}

fn degree(s: &str) -> Result<RationalDegree, String> {
    sj::parse_degree_list(s).map_err(|e| e.to_string())
}

enum Failure {
    Input(String),
    Refused(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_refusal() {
            Failure::Refused(e.to_string())
        } else if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome = Result<String, Failure>;

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_module(path: &Path) -> Result<Module, Failure> {
    Ok(sj::parse_module(&read_json(path)?)?)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn only_json(format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => Ok(()),
        _ => Err(Failure::Input("this command only emits json".into())),
    }
}

fn curve_of(m: &Module, v: &RationalDegree, p: u32, cap: usize) -> Result<StepFunction<Rational>, Failure> {
    Ok(match m {
        Module::Interval(i) => stable_rank_curve(i, v)?,
        _ => stable_rank_curve_grid(&m.to_grid(p)?, v, cap)?,
    })
}

fn render_curve(f: &StepFunction<Rational>, format: Format, tau_max: Option<f64>) -> String {
    match format {
        Format::Json => pretty(&sj::step_to_json(f)),
        Format::Csv => f.to_csv(),
        Format::Svg => {
            let last = f.breakpoints().last().map_or(1.0, |t| shiftdim::Scalar::to_f64(*t));
            f.to_svg(tau_max.unwrap_or(if last > 0.0 { last * 1.25 } else { 1.0 }))
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Shiftdim { module, v, order } => {
            only_json(format)?;
            let Module::Interval(m) = read_module(&module)? else {
                return Err(Failure::Refused("shiftdim needs an interval module; use oracle".into()));
            };
            let r = match order {
                OrderArg::Above => shift_dimension_2d(&m, &v, Order::FromAbove)?,
                OrderArg::Below => shift_dimension_2d(&m, &v, Order::FromBelow)?,
                OrderArg::Subset => subset_oracle(&m, &v)?,
            };
            Ok(pretty(&sj::shiftdim_to_json(&r)))
        }
        Command::Curve { module, v, tau_max, p, cap } => {
            let f = curve_of(&read_module(&module)?, &v, p, cap)?;
            Ok(render_curve(&f, format, tau_max))
        }
        Command::Oracle { module, v, p, cap } => {
            only_json(format)?;
            let g = read_module(&module)?.to_grid(p)?;
            let r = shift_dimension_bruteforce(&g, &v, cap)?;
            if r.dimension.is_none() {
                return Err(Failure::Refused(format!("no v-generating set of at most {cap} elements")));
            }
            Ok(pretty(&sj::oracle_to_json(&g, &r)))
        }
        Command::Beta0 { module } => {
            only_json(format)?;
            Ok(pretty(&json!({ "beta0": read_module(&module)?.beta0() })))
        }
        Command::Truncate { module, alpha, out } => {
            only_json(format)?;
            let Module::Interval(m) = read_module(&module)? else {
                return Err(Failure::Refused("truncate needs an interval module".into()));
            };
            let text = pretty(&sj::interval_to_json(&m.truncate(&alpha)?));
            match out {
                Some(path) => {
                    std::fs::write(&path, &text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Locus { modules, v, p, cap, exponent } => {
            let parts = modules.iter().map(|m| read_module(m)).collect::<Result<Vec<_>, _>>()?;
            let curves = parts.iter().map(|m| curve_of(m, &v, p, cap)).collect::<Result<Vec<_>, _>>()?;
            let grids = parts.iter().map(|m| m.to_grid(p)).collect::<Result<Vec<_>, Error>>()?;
            let sum = stable_rank_curve_grid(&GridModule::direct_sum(&grids)?, &v, cap)?;
            let loc = locus_nonadditivity(&curves, &sum);
            let err = err_vp(&curves, &sum, exponent)?;
            match format {
                Format::Json => Ok(pretty(&json!({
                    "locus": sj::intervals_to_json(&loc),
                    "err": if err.is_finite() { json!(err) } else { json!("inf") },
                    "summand_curves": curves.iter().map(sj::step_to_json).collect::<Vec<_>>(),
                    "sum_curve": sj::step_to_json(&sum),
                }))),
                Format::Csv => {
                    let mut s = String::from("start,end\n");
                    for (a, b) in &loc {
                        s.push_str(&format!("{a},{b}\n"));
                    }
                    Ok(s)
                }
                Format::Svg => Ok(render_curve(&sum, format, None)),
            }
        }
        Command::Contour { spec, x, eps } => {
            only_json(format)?;
            let c = sj::parse_contour(&read_json(&spec)?)?;
            let r = c.eval(&x, eps)?;
            Ok(pretty(&json!({ "value": sj::contour_value_to_json(&r.value), "accuracy": r.accuracy })))
        }
        Command::ContourCheck { spec, samples, tol, seed, bound, eps_max } => {
            only_json(format)?;
            let c = sj::parse_contour(&read_json(&spec)?)?;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let s = random_samples::<f64, _>(&mut rng, c.dim(), samples, 0.0, bound, bound / 3.0, eps_max);
            let r = check_contour_axioms(&c, &s, tol)?;
            Ok(pretty(&json!({
                "passed": r.passed(),
                "samples": r.samples,
                "failures": r.failures,
                "worst": if r.worst.is_finite() { json!(r.worst) } else { json!("inf") },
                "worst_axiom": r.worst_axiom.map(|a| format!("{a:?}")),
            })))
        }
        Command::Selftest => {
            only_json(format)?;
            let rows = selftest::run();
            let table = selftest::table(&rows);
            if rows.iter().all(|r| r.passed) {
                Ok(table)
            } else {
                print!("{table}");
                Err(Failure::Internal(format!("{} of {} checks failed", rows.iter().filter(|r| !r.passed).count(), rows.len())))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = std::env::var("SHIFTDIM_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Refused(m)) => {
            eprintln!("refused: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}
