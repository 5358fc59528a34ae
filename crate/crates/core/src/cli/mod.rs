//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `verify` fails or `decompose
//! --expect-some` finds nothing, 2 on usage, parse or library errors.

pub mod expr;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value as Json};

use crate::decompose::{enumerate_decompositions, enumerate_polynomial, trig_decompose, Decomposition, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::exactfield::Angle;
use crate::moments::{poly_moments_vanish, trig_moments_vanish, MomentReport};
use crate::rings::{phi_inverse, phi_map, ComplexPoly, LaurentPoly, RealPoly};
use crate::ritt::{
    classify_solution_with_cap, gen_family, gen_laurent_family, verify_solution, CaseLabel, FamilyParams,
    LaurentParams, SolutionWitness, WitnessInner, DEFAULT_CLASSIFY_CAP,
};
pub use expr::{parse_expression, parse_value, Parsed, Ring};
use expr::{parse_laurent, parse_poly, parse_real_poly, parse_trig, values_equal};

/// Version of every JSON document read or written.
pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "trigdecomp",
    version,
    about = "Exact decompositions of trigonometric and Laurent polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Laurent image of a trigonometric polynomial, or the inverse with --inverse.
    Phi {
        expr: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Composes a polynomial with an inner from the chosen ring.
    Compose {
        outer: String,
        inner: String,
        #[arg(long, value_enum, default_value = "trig")]
        ring: Ring,
    },
    /// Lists every decomposition up to equivalence.
    Decompose {
        expr: String,
        #[arg(long, value_enum, default_value = "trig")]
        ring: Ring,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_degree: u32,
        #[arg(long)]
        json: bool,
        /// Exit with status 1 when nothing is found.
        #[arg(long)]
        expect_some: bool,
    },
    /// Builds a solution of P1 @ w1 = P2 @ w2 from a family.
    Family {
        /// a, b, c, d or laurent-1 .. laurent-5.
        case: String,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, default_value_t = 2)]
        l: u32,
        #[arg(long, default_value_t = 0)]
        s: u32,
        /// R in case a, S in case c.
        #[arg(long)]
        poly: Option<String>,
        /// Common left factor U.
        #[arg(long)]
        outer: Option<String>,
        /// Inners are evaluated at k*t + b.
        #[arg(long)]
        shift_k: Option<u32>,
        /// Shift angle, a multiple of pi/12 such as pi/4.
        #[arg(long)]
        shift_b: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Classifies a solution P1 w1 P2 w2 and prints the witness as JSON.
    Classify {
        exprs: Vec<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CLASSIFY_CAP)]
        max_degree: u32,
    },
    /// Checks LHS = RHS, or P1 @ w1 = P2 @ w2 given four expressions or --file.
    Verify {
        exprs: Vec<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Moments of p^i dq for i = 0..=max-i.
    Moments {
        p: String,
        q: String,
        #[arg(long, value_enum, default_value = "trig")]
        ring: MomentRing,
        #[arg(long, default_value_t = 10)]
        max_i: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum MomentRing {
    Trig,
    Poly,
}

/// Exit status and captured output of one invocation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Quadruple document read by `classify --file` and `verify --file`.
#[derive(Deserialize, Debug)]
struct Quadruple {
    schema: u32,
    #[serde(default)]
    ring: Option<String>,
    p1: String,
    w1: String,
    p2: String,
    w2: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}

/// Runs an already parsed command.
pub fn execute(cmd: &Command) -> Outcome {
    match dispatch(cmd) {
        Ok((ok, stdout)) => Outcome {
            code: if ok { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn pretty(v: &Json) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

fn dispatch(cmd: &Command) -> Result<(bool, String)> {
    match cmd {
        Command::Phi { expr, inverse } => {
            let out = if *inverse {
                phi_inverse(&parse_laurent(expr)?)?.to_string()
            } else {
                phi_map(&parse_trig(expr)?).to_string()
            };
            Ok((true, out + "\n"))
        }
        Command::Compose { outer, inner, ring } => Ok((true, compose(outer, inner, *ring)?.to_string() + "\n")),
        Command::Decompose {
            expr,
            ring,
            max_degree,
            json,
            expect_some,
        } => {
            let input = parse_expression(expr, *ring)?;
            let found = match &input {
                Parsed::Trig(p) => trig_decompose(p, *max_degree)?,
                Parsed::Laurent(l) => enumerate_decompositions(l, *max_degree)?,
                Parsed::Poly(f) => enumerate_polynomial(f, *max_degree)?,
            };
            let text = if *json {
                decompositions_json(*ring, &input, &found)
            } else {
                decompositions_text(&found)
            };
            Ok((!(*expect_some && found.is_empty()), text))
        }
        Command::Family {
            case,
            n,
            m,
            r,
            l,
            s,
            poly,
            outer,
            shift_k,
            shift_b,
            json,
        } => {
            let poly = poly.as_deref().map(parse_real_poly).transpose()?;
            let outer = outer.as_deref().map(parse_real_poly).transpose()?;
            if let Some(k) = case.strip_prefix("laurent-") {
                let k: u8 = k.parse().map_err(|_| usage(format!("unknown case {case:?}")))?;
                if shift_k.is_some() || shift_b.is_some() {
                    return Err(usage("--shift-k and --shift-b apply to the trigonometric cases"));
                }
                let params = LaurentParams {
                    n: *n,
                    m: *m,
                    r: *r,
                    l: *l,
                    poly,
                    outer,
                    ..Default::default()
                };
                let f = gen_laurent_family(k, &params)?;
                let mut doc = quadruple_json(
                    case,
                    Ring::Laurent,
                    [
                        &f.p1.to_string(),
                        &f.w1.to_string(),
                        &f.p2.to_string(),
                        &f.w2.to_string(),
                    ],
                );
                if let Some(eps) = &f.eps {
                    doc["eps"] = json!(eps.to_string());
                }
                return Ok((true, if *json { pretty(&doc) } else { quadruple_text(&doc) }));
            }
            let label: CaseLabel = case.parse()?;
            let shift = match (shift_k, shift_b) {
                (None, None) => None,
                (k, b) => Some((
                    k.unwrap_or(1),
                    b.as_deref().map(parse_angle).transpose()?.unwrap_or_else(Angle::zero),
                )),
            };
            let params = FamilyParams {
                n: *n,
                m: *m,
                r: *r,
                l: *l,
                s: *s,
                poly,
                outer,
                shift,
                ..Default::default()
            };
            let f = gen_family(label, &params)?;
            let doc = quadruple_json(
                case,
                Ring::Trig,
                [
                    &f.p1.to_string(),
                    &f.w1.to_string(),
                    &f.p2.to_string(),
                    &f.w2.to_string(),
                ],
            );
            Ok((true, if *json { pretty(&doc) } else { quadruple_text(&doc) }))
        }
        Command::Classify {
            exprs,
            file,
            max_degree,
        } => {
            let q = read_quadruple(exprs, file.as_ref())?;
            if q.ring.as_deref().is_some_and(|r| r != "trig") {
                return Err(usage("classification needs trigonometric inners"));
            }
            let (p1, w1, p2, w2) = (
                parse_real_poly(&q.p1)?,
                parse_trig(&q.w1)?,
                parse_real_poly(&q.p2)?,
                parse_trig(&q.w2)?,
            );
            let w = classify_solution_with_cap(&p1, &w1, &p2, &w2, *max_degree)?;
            Ok((true, pretty(&witness_json(&w))))
        }
        Command::Verify { exprs, file } => {
            if file.is_none() && exprs.len() == 3 && exprs[1] == "=" {
                let ok = values_equal(parse_value(&exprs[0])?, parse_value(&exprs[2])?);
                return Ok((ok, format!("{ok}\n")));
            }
            let q = read_quadruple(exprs, file.as_ref())?;
            let ok = verify_quadruple(&q)?;
            Ok((ok, format!("{ok}\n")))
        }
        Command::Moments {
            p,
            q,
            ring,
            max_i,
            json,
        } => {
            let report = match ring {
                MomentRing::Trig => trig_moments_vanish(&parse_trig(p)?, &parse_trig(q)?, *max_i),
                MomentRing::Poly => poly_moments_vanish(&parse_real_poly(p)?, &parse_real_poly(q)?, *max_i),
            };
            let ring = match ring {
                MomentRing::Trig => "trig",
                MomentRing::Poly => "poly",
            };
            Ok((
                true,
                if *json {
                    pretty(&moments_json(ring, p, q, &report))
                } else {
                    moments_text(&report)
                },
            ))
        }
    }
}

fn compose(outer: &str, inner: &str, ring: Ring) -> Result<Parsed> {
    let a = parse_poly(outer)?;
    Ok(match parse_expression(inner, ring)? {
        Parsed::Trig(w) => {
            let a = a.to_real().ok_or_else(|| usage("outer must have real coefficients"))?;
            Parsed::Trig(crate::rings::TrigPoly::compose(&a, &w))
        }
        Parsed::Laurent(l) => Parsed::Laurent(LaurentPoly::compose_outer(&a, &l)),
        Parsed::Poly(b) => Parsed::Poly(a.compose(&b)),
    })
}

/// `0`, `pi`, `-pi/2`, `3*pi/4`, `pi/12`.
pub fn parse_angle(text: &str) -> Result<Angle> {
    let bad = || Error::Syntax {
        offset: 0,
        expected: "an angle such as 3*pi/4".into(),
    };
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "0" {
        return Ok(Angle::zero());
    }
    let (head, tail) = t.split_once("pi").ok_or_else(bad)?;
    let num: i64 = match head {
        "" => 1,
        "-" => -1,
        _ => head.strip_suffix('*').ok_or_else(bad)?.parse().map_err(|_| bad())?,
    };
    let den: i64 = match tail {
        "" => 1,
        _ => tail.strip_prefix('/').ok_or_else(bad)?.parse().map_err(|_| bad())?,
    };
    if den == 0 {
        return Err(Error::DivisionByZero);
    }
    Angle::from_pi_fraction(num, den)
}

fn read_quadruple(exprs: &[String], file: Option<&PathBuf>) -> Result<Quadruple> {
    match (file, exprs.len()) {
        (Some(path), 0) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let q: Quadruple = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            if q.schema != SCHEMA {
                return Err(usage(format!("unsupported schema {}", q.schema)));
            }
            Ok(q)
        }
        (None, 4) => Ok(Quadruple {
            schema: SCHEMA,
            ring: None,
            p1: exprs[0].clone(),
            w1: exprs[1].clone(),
            p2: exprs[2].clone(),
            w2: exprs[3].clone(),
        }),
        _ => Err(usage("expected four expressions P1 w1 P2 w2 or --file")),
    }
}

fn verify_quadruple(q: &Quadruple) -> Result<bool> {
    let laurent = match q.ring.as_deref() {
        Some("laurent") => true,
        Some("trig") => false,
        Some(other) => return Err(usage(format!("unknown ring {other:?}"))),
        None => !matches!(parse_value(&q.w1)?, expr::Value::Trig(_)),
    };
    if laurent {
        let (p1, p2): (ComplexPoly, ComplexPoly) = (parse_poly(&q.p1)?, parse_poly(&q.p2)?);
        let (w1, w2) = (parse_laurent(&q.w1)?, parse_laurent(&q.w2)?);
        return Ok(LaurentPoly::compose_outer(&p1, &w1) == LaurentPoly::compose_outer(&p2, &w2));
    }
    let (p1, p2): (RealPoly, RealPoly) = (parse_real_poly(&q.p1)?, parse_real_poly(&q.p2)?);
    Ok(verify_solution(&p1, &parse_trig(&q.w1)?, &p2, &parse_trig(&q.w2)?))
}

fn quadruple_json(case: &str, ring: Ring, [p1, w1, p2, w2]: [&String; 4]) -> Json {
    json!({ "schema": SCHEMA, "case": case, "ring": ring.as_str(), "p1": p1, "w1": w1, "p2": p2, "w2": w2 })
}

fn quadruple_text(doc: &Json) -> String {
    let mut out = String::new();
    for (label, key) in [
        ("case", "case"),
        ("P1", "p1"),
        ("w1", "w1"),
        ("P2", "p2"),
        ("w2", "w2"),
        ("eps", "eps"),
    ] {
        if let Some(v) = doc.get(key).and_then(Json::as_str) {
            out += &format!("{label}: {v}\n");
        }
    }
    out
}

fn decompositions_text(found: &[Decomposition]) -> String {
    if found.is_empty() {
        return "no decompositions\n".into();
    }
    found.iter().map(|d| format!("{}: {d}\n", d.kind.as_str())).collect()
}

fn decompositions_json(ring: Ring, input: &Parsed, found: &[Decomposition]) -> String {
    let list: Vec<Json> = found
        .iter()
        .map(|d| {
            json!({
                "kind": d.kind.as_str(),
                "outer": d.outer.to_string(),
                "inner": d.inner.to_string(),
                "adjuster": d.adjuster.to_string(),
            })
        })
        .collect();
    pretty(&json!({ "schema": SCHEMA, "ring": ring.as_str(), "input": input.to_string(), "decompositions": list }))
}

fn witness_json(w: &SolutionWitness) -> Json {
    let inner = match &w.inner {
        WitnessInner::Common { w1, w2, w } => {
            json!({ "type": "common", "W1": w1.to_string(), "W2": w2.to_string(), "w": w.to_string() })
        }
        WitnessInner::Shifted { w1, w2, k, b } => {
            json!({ "type": "shifted", "w1": w1.to_string(), "w2": w2.to_string(), "k": k, "b": b.to_string() })
        }
    };
    let p = &w.params;
    json!({
        "schema": SCHEMA,
        "case_label": w.case_label.as_str(),
        "swapped": w.swapped,
        "U": w.u.to_string(),
        "P1": w.p1.to_string(),
        "P2": w.p2.to_string(),
        "inner": inner,
        "mu": [w.mu[0].to_string(), w.mu[1].to_string()],
        "params": {
            "n": p.n, "m": p.m, "r": p.r, "l": p.l, "s": p.s,
            "poly": p.poly.as_ref().map(ToString::to_string),
        },
    })
}

fn moments_json(ring: &str, p: &str, q: &str, r: &MomentReport) -> Json {
    let values: Vec<String> = r.moments.iter().map(ToString::to_string).collect();
    json!({
        "schema": SCHEMA,
        "ring": ring,
        "p": p,
        "q": q,
        "moments": values,
        "all_vanish": r.all_vanish,
        "first_nonzero": r.first_nonzero,
    })
}

fn moments_text(r: &MomentReport) -> String {
    let mut out: String = r
        .moments
        .iter()
        .enumerate()
        .map(|(i, m)| format!("i = {i}: {m}\n"))
        .collect();
    match r.first_nonzero {
        None => out += "all vanish\n",
        Some(i) => out += &format!("first nonzero: i = {i}\n"),
    }
    out
}
