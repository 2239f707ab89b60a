use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gamma_series::boettcher::boettcher;
use gamma_series::decompose::{enumerate_classes, kalmar_count};
use gamma_series::io::{parse_json, parse_series_text, scalar_to_json, series_from_value, series_to_json};
use gamma_series::semigroup::{commute_check, monomialize};
use gamma_series::solvers::{factor_through, solve_joint, solve_left, solve_right};
use gamma_series::symmetry::{decompose_symmetric, detect_symmetry};
use gamma_series::transition::transition_group;
use gamma_series::{selftest, Error, Field, GammaSeries, Result, TruncatedSeries};

#[derive(Parser)]
#[command(name = "gamma", version, about = "Composition of formal power series of order at least two")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Truncation N for series given as text: coefficients are known mod z^{N+1}.
    #[arg(long, global = true, default_value_t = 32, value_parser = clap::value_parser!(u16).range(4..=256))]
    trunc: u16,
    /// Conductor L of the exact field Q(ζ_L).
    #[arg(long, global = true, default_value_t = 24)]
    conductor: usize,
    /// Relative tolerance of the approximate backend.
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = positive_f64)]
    tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Backend::Exact)]
    field: Backend,
    /// Seed for randomized self-tests.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    Exact,
    Approx,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Output {
    Json,
    Pretty,
}

fn positive_f64(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("{s:?} is not a positive number")),
    }
}

/// Series arguments are text such as `"z^2 + 3*z^5"`, series JSON, `@path`
/// to read either from a file, or `-` for standard input.
#[derive(Subcommand)]
enum Command {
    /// Böttcher function of a series.
    Boettcher {
        series: String,
        /// Branch index in 0..n−1.
        #[arg(long, default_value_t = 0)]
        branch: usize,
    },
    /// Transition group of a series.
    Transition { series: String },
    /// Classes of decompositions, one per ordered factorization of the order.
    Decompose {
        series: String,
        /// Print only the number of classes.
        #[arg(long)]
        count_only: bool,
    },
    /// Compositional equations.
    Solve {
        #[command(subcommand)]
        equation: Equation,
    },
    /// Symmetry profile z^r R(z^m) of a series.
    Symmetry {
        series: String,
        /// Decompose along the factor pair A = A1∘A2.
        #[arg(long, num_args = 2, value_names = ["A1", "A2"])]
        decompose: Option<Vec<String>>,
        /// Modulus m for --decompose (default: the largest m found).
        #[arg(long)]
        modulus: Option<usize>,
    },
    /// Conjugate generators simultaneously onto monomials c·z^m.
    Monomialize {
        /// Generators, or a single JSON array of series.
        #[arg(required = true)]
        series: Vec<String>,
    },
    /// Whether two series commute under composition.
    Commute { a: String, b: String },
    /// Seeded property checks of every module.
    Selftest {
        #[arg(long, default_value_t = 10)]
        cases: usize,
    },
}

#[derive(Subcommand)]
enum Equation {
    /// X∘A = F.
    Right { f: String, a: String },
    /// A∘X = F.
    Left { f: String, a: String },
    /// X∘A = Y∘B.
    Joint { a: String, b: String },
    /// A∘C = X∘D.
    Factor { a: String, c: String, d: String },
}

enum Outcome {
    Ok(Value),
    /// A mathematically meaningful "no"; still printed, exit code 2.
    Negative(Value),
}

struct Ctx {
    field: Field,
    trunc: usize,
}

fn read_arg(arg: &str) -> Result<String> {
    let io_err = |what: &str, e: std::io::Error| Error::Parse {
        position: what.to_string(),
        message: e.to_string(),
    };
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| io_err("stdin", e))?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| io_err(path, e))
    } else {
        Ok(arg.to_string())
    }
}

impl Ctx {
    fn from_value(&self, v: &Value) -> Result<TruncatedSeries> {
        let s = series_from_value(v, Some(&self.field))?;
        if s.field() == &self.field {
            Ok(s)
        } else {
            s.embed(&self.field)
        }
    }

    fn series(&self, arg: &str) -> Result<TruncatedSeries> {
        let text = read_arg(arg)?;
        if text.trim_start().starts_with('{') {
            self.from_value(&parse_json(&text)?)
        } else {
            parse_series_text(&self.field, text.trim(), self.trunc)
        }
    }

    fn gamma(&self, arg: &str) -> Result<GammaSeries> {
        GammaSeries::new(self.series(arg)?)
    }

    fn generators(&self, args: &[String]) -> Result<Vec<GammaSeries>> {
        if let [one] = args {
            let text = read_arg(one)?;
            if text.trim_start().starts_with('[') {
                let v = parse_json(&text)?;
                let items = v.as_array().expect("checked array");
                return items.iter().map(|x| GammaSeries::new(self.from_value(x)?)).collect();
            }
        }
        args.iter().map(|a| self.gamma(a)).collect()
    }
}

fn negative(e: &Error) -> Value {
    let mut v = json!({"status": "no", "reason": e.to_string()});
    if let Error::NotConjugate { index } = e {
        v["index"] = json!(index);
    }
    v
}

/// Runs a computation whose negative answers are reported rather than
/// raised.
fn answer(r: Result<Value>) -> Result<Outcome> {
    match r {
        Ok(v) => Ok(Outcome::Ok(v)),
        Err(e) if e.is_negative_result() => Ok(Outcome::Negative(negative(&e))),
        Err(e) => Err(e),
    }
}

fn solutions(list: &[(TruncatedSeries, Option<TruncatedSeries>, bool)]) -> Value {
    let items: Vec<Value> = list
        .iter()
        .map(|(x, y, ok)| {
            let mut v = json!({"x": series_to_json(x), "residual_ok": ok});
            if let Some(y) = y {
                v["y"] = series_to_json(y);
            }
            v
        })
        .collect();
    json!({"status": "ok", "solutions": items})
}

fn solve(ctx: &Ctx, eq: &Equation) -> Result<Outcome> {
    match eq {
        Equation::Right { f, a } => {
            let (f, a) = (ctx.gamma(f)?, ctx.gamma(a)?);
            answer(solve_right(&f, &a).and_then(|x| {
                let ok = x.compose(&a)?.equiv(&f);
                Ok(solutions(&[(x, None, ok)]))
            }))
        }
        Equation::Left { f, a } => {
            let (f, a) = (ctx.gamma(f)?, ctx.gamma(a)?);
            answer(solve_left(&f, &a).and_then(|xs| {
                let list = xs
                    .into_iter()
                    .map(|x| {
                        let ok = a.compose(&x)?.equiv(&f);
                        Ok((x, None, ok))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(solutions(&list))
            }))
        }
        Equation::Joint { a, b } => {
            let (a, b) = (ctx.gamma(a)?, ctx.gamma(b)?);
            answer(solve_joint(&a, &b).and_then(|(x, y)| {
                let ok = x.compose(&a)?.equiv(&y.compose(&b)?);
                Ok(solutions(&[(x, Some(y), ok)]))
            }))
        }
        Equation::Factor { a, c, d } => {
            let (a, c, d) = (ctx.gamma(a)?, ctx.series(c)?, ctx.gamma(d)?);
            answer(factor_through(&a, &c, &d).and_then(|x| {
                let ok = a.compose(&c)?.equiv(&x.compose(&d)?);
                Ok(solutions(&[(x, None, ok)]))
            }))
        }
    }
}

fn run(ctx: &Ctx, cmd: &Command, seed: u64) -> Result<Outcome> {
    match cmd {
        Command::Boettcher { series, branch } => {
            let d = boettcher(&ctx.gamma(series)?)?.with_branch(*branch)?;
            Ok(Outcome::Ok(json!({
                "status": "ok",
                "n": d.order(),
                "branch": d.branch(),
                "beta": series_to_json(d.beta()),
                "residual_ok": d.residual_ok(),
            })))
        }
        Command::Transition { series } => {
            let g = transition_group(&boettcher(&ctx.gamma(series)?)?)?;
            let elements: Vec<Value> = g.elements().iter().map(|e| series_to_json(e)).collect();
            Ok(Outcome::Ok(json!({
                "status": "ok",
                "order": g.order(),
                "generator_index": 1,
                "generator": series_to_json(g.generator()),
                "elements": elements,
            })))
        }
        Command::Decompose { series, count_only } => {
            let a = ctx.gamma(series)?;
            if *count_only {
                return Ok(Outcome::Ok(json!(kalmar_count(a.order()))));
            }
            let classes = enumerate_classes(&boettcher(&a)?)?;
            let out: Vec<Value> = classes
                .iter()
                .map(|c| Value::Array(c.factors.iter().map(|f| series_to_json(f)).collect()))
                .collect();
            Ok(Outcome::Ok(json!({"status": "ok", "count": out.len(), "classes": out})))
        }
        Command::Solve { equation } => solve(ctx, equation),
        Command::Symmetry {
            series,
            decompose,
            modulus,
        } => {
            let a = ctx.gamma(series)?;
            let profile = detect_symmetry(&a);
            let pairs: Vec<Value> = profile.pairs.iter().map(|(m, r)| json!({"m": m, "r": r})).collect();
            let Some(parts) = decompose else {
                return Ok(Outcome::Ok(json!({
                    "status": "ok",
                    "pairs": pairs,
                    "maximal_m": profile.maximal_m,
                })));
            };
            let (a1, a2) = (ctx.gamma(&parts[0])?, ctx.gamma(&parts[1])?);
            let m = match modulus.or(profile.maximal_m) {
                Some(m) => m,
                None => return Ok(Outcome::Negative(negative(&Error::NotSymmetric { m: 2, index: a.order() }))),
            };
            let r = a.order() % m;
            answer(decompose_symmetric(&a, &a1, &a2, m, r).map(|sd| {
                json!({
                    "status": "ok",
                    "m": m,
                    "r": r,
                    "mu": series_to_json(&sd.mu),
                    "r1": sd.r1,
                    "R1": series_to_json(&sd.big_r1),
                    "r2": sd.r2,
                    "R2": series_to_json(&sd.big_r2),
                    "m1": sd.m1,
                })
            }))
        }
        Command::Monomialize { series } => {
            let gens = ctx.generators(series)?;
            answer(monomialize(&gens).map(|(beta, images)| {
                let images: Vec<Value> = images
                    .iter()
                    .map(|i| json!({"c": scalar_to_json(&i.coefficient), "m": i.exponent}))
                    .collect();
                json!({"status": "ok", "beta": series_to_json(&beta), "images": images})
            }))
        }
        Command::Commute { a, b } => {
            let (a, b) = (ctx.gamma(a)?, ctx.gamma(b)?);
            let v = commute_check(&a, &b)?;
            let body = json!({
                "status": if v.commute { "yes" } else { "no" },
                "commute": v.commute,
                "c": v.c.as_ref().map(scalar_to_json),
                "check": v.check.as_str(),
            });
            Ok(if v.commute { Outcome::Ok(body) } else { Outcome::Negative(body) })
        }
        Command::Selftest { cases } => {
            let results = selftest::run(&ctx.field, ctx.trunc, seed, *cases);
            let all = results.iter().all(|r| r.ok());
            let suites: Vec<Value> = results
                .iter()
                .map(|r| json!({"name": r.name, "passed": r.passed, "total": r.total, "failures": r.failures}))
                .collect();
            let body = json!({"status": if all { "ok" } else { "fail" }, "seed": seed, "suites": suites});
            if all {
                Ok(Outcome::Ok(body))
            } else {
                Err(Error::VerificationFailed(body.to_string()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let field = match cli.run.field {
        Backend::Exact => Field::exact(cli.run.conductor),
        Backend::Approx => Field::approx(cli.run.tol),
    };
    let result = field.and_then(|field| {
        let ctx = Ctx {
            field,
            trunc: cli.run.trunc as usize,
        };
        run(&ctx, &cli.command, cli.run.seed)
    });
    let print = |v: &Value| {
        if cli.run.output == Output::Pretty {
            println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
        } else {
            println!("{v}");
        }
    };
    match result {
        Ok(Outcome::Ok(v)) => {
            print(&v);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Negative(v)) => {
            print(&v);
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
