//! Expression parser shared by the command line and the tests.
//!
//! ```text
//! expr  := sum ['@' expr]
//! sum   := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ['^' ['-'] INT]
//! atom  := INT | z | i | sqrt2 | sqrt3 | sqrt6 | sqrt '(' expr ')'
//!        | (cos | sin) '(' [INT ['*']] t ')' | '(' expr ')'
//! ```
//!
//! `θ` is accepted for `t`. Offsets in errors count characters.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactfield::roots::sqrt_all;
use crate::exactfield::{RealSubElem, TowerElem};
use crate::rings::{ComplexPoly, LaurentPoly, RealPoly, TrigPoly};

const MAX_EXPONENT: i64 = 4096;

/// Target ring of an expression.
#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Ring {
    Trig,
    Laurent,
    Poly,
}

impl Ring {
    pub fn as_str(self) -> &'static str {
        match self {
            Ring::Trig => "trig",
            Ring::Laurent => "laurent",
            Ring::Poly => "poly",
        }
    }
}

/// A parsed expression in its declared ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Parsed {
    Trig(TrigPoly),
    Laurent(LaurentPoly),
    Poly(ComplexPoly),
}

impl std::fmt::Display for Parsed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parsed::Trig(p) => write!(f, "{p}"),
            Parsed::Laurent(l) => write!(f, "{l}"),
            Parsed::Poly(p) => write!(f, "{p}"),
        }
    }
}

/// Value of a subexpression before it is assigned a ring.
#[derive(Clone, PartialEq, Eq, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Value {
    Scalar(TowerElem),
    Laurent(LaurentPoly),
    Trig(TrigPoly),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "a constant",
            Value::Laurent(_) => "an expression in z",
            Value::Trig(_) => "an expression in t",
        }
    }

    fn laurent(self) -> Option<LaurentPoly> {
        match self {
            Value::Scalar(c) => Some(LaurentPoly::constant(c)),
            Value::Laurent(l) => Some(l),
            Value::Trig(_) => None,
        }
    }

    fn trig(self) -> std::result::Result<TrigPoly, &'static str> {
        match self {
            Value::Scalar(c) if c.is_real() => Ok(TrigPoly::constant(c.real_part())),
            Value::Scalar(_) => Err("a real constant"),
            Value::Trig(p) => Ok(p),
            Value::Laurent(_) => Err("an expression in t"),
        }
    }

    /// Converts to the given ring.
    pub fn into_ring(self, ring: Ring) -> Result<Parsed> {
        let found = self.kind();
        let mismatch = |want: &str| Error::Evaluation(format!("expected {want}, found {found}"));
        match ring {
            Ring::Trig => self
                .trig()
                .map(Parsed::Trig)
                .map_err(|_| mismatch("a real trigonometric polynomial")),
            Ring::Laurent => self
                .laurent()
                .map(Parsed::Laurent)
                .ok_or_else(|| mismatch("a Laurent polynomial in z")),
            Ring::Poly => self
                .laurent()
                .and_then(|l| l.to_poly())
                .map(Parsed::Poly)
                .ok_or_else(|| mismatch("a polynomial in z")),
        }
    }
}

#[derive(Clone, Debug)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = vec![];
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let start = k;
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            out.push((Tok::Int(digits.parse().expect("digits")), start));
        } else if c.is_alphabetic() {
            while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            let word: String = chars[start..k].iter().collect();
            out.push((Tok::Ident(if word == "θ" { "t".into() } else { word }), start));
        } else if "+-*/^@()∘".contains(c) {
            out.push((Tok::Sym(if c == '∘' { '@' } else { c }), start));
            k += 1;
        } else {
            return Err(syntax(start, "a number, a name or an operator"));
        }
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

fn syntax(offset: usize, expected: &str) -> Error {
    Error::Syntax {
        offset,
        expected: expected.into(),
    }
}

fn eval_err(offset: usize, msg: impl std::fmt::Display) -> Error {
    Error::Evaluation(format!("at offset {offset}: {msg}"))
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if !matches!(t.0, Tok::End) {
            self.pos += 1;
        }
        t
    }

    fn at_sym(&self, c: char) -> bool {
        matches!(self.peek(), Tok::Sym(s) if *s == c)
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.at_sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.offset(), &format!("'{c}'")))
        }
    }

    fn expect_int(&mut self) -> Result<BigInt> {
        match self.bump() {
            (Tok::Int(n), _) => Ok(n),
            (_, off) => Err(syntax(off, "an integer")),
        }
    }

    fn small_int(&mut self, limit: i64) -> Result<i64> {
        let off = self.offset();
        let n = self.expect_int()?;
        i64::try_from(&n)
            .ok()
            .filter(|v| *v <= limit)
            .ok_or_else(|| eval_err(off, format!("{n} exceeds {limit}")))
    }

    fn expr(&mut self) -> Result<Value> {
        let lhs = self.sum()?;
        if !self.at_sym('@') {
            return Ok(lhs);
        }
        let off = self.offset();
        self.bump();
        let rhs = self.expr()?;
        compose(lhs, rhs, off)
    }

    fn sum(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        while self.at_sym('+') || self.at_sym('-') {
            let (Tok::Sym(op), off) = self.bump() else {
                unreachable!()
            };
            let rhs = self.term()?;
            acc = arith(op, acc, rhs, off)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        while self.at_sym('*') || self.at_sym('/') {
            let (Tok::Sym(op), off) = self.bump() else {
                unreachable!()
            };
            let rhs = self.unary()?;
            acc = if op == '/' {
                let Value::Scalar(d) = rhs else {
                    return Err(eval_err(off, "division is only by constants"));
                };
                let inv = d.inv().ok_or(Error::DivisionByZero)?;
                arith('*', acc, Value::Scalar(inv), off)?
            } else {
                arith('*', acc, rhs, off)?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value> {
        if self.at_sym('-') {
            let off = self.offset();
            self.bump();
            let v = self.unary()?;
            return arith('*', Value::Scalar(TowerElem::from_int(-1)), v, off);
        }
        if self.at_sym('+') {
            self.bump();
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if !self.at_sym('^') {
            return Ok(base);
        }
        let off = self.offset();
        self.bump();
        let neg = self.at_sym('-');
        if neg {
            self.bump();
        }
        let e = self.small_int(MAX_EXPONENT)?;
        power(base, if neg { -e } else { e }, off)
    }

    fn atom(&mut self) -> Result<Value> {
        let (tok, off) = self.bump();
        match tok {
            Tok::Int(n) => Ok(Value::Scalar(TowerElem::from_rat(BigRational::from_integer(n)))),
            Tok::Sym('(') => {
                let v = self.expr()?;
                self.expect_sym(')')?;
                Ok(v)
            }
            Tok::Ident(name) => match name.as_str() {
                "z" => Ok(Value::Laurent(LaurentPoly::z())),
                "i" => Ok(Value::Scalar(TowerElem::i())),
                "sqrt2" => Ok(Value::Scalar(TowerElem::from_real(RealSubElem::sqrt2()))),
                "sqrt3" => Ok(Value::Scalar(TowerElem::from_real(RealSubElem::sqrt3()))),
                "sqrt6" => Ok(Value::Scalar(TowerElem::from_real(RealSubElem::sqrt6()))),
                "sqrt" => {
                    self.expect_sym('(')?;
                    let arg_off = self.offset();
                    let v = self.expr()?;
                    self.expect_sym(')')?;
                    sqrt(v, arg_off)
                }
                "cos" | "sin" => {
                    self.expect_sym('(')?;
                    let k = self.frequency()?;
                    self.expect_sym(')')?;
                    Ok(Value::Trig(if name == "cos" {
                        TrigPoly::cos(k)
                    } else {
                        TrigPoly::sin(k)
                    }))
                }
                _ => Err(syntax(off, "z, i, sqrt, cos, sin or a number")),
            },
            _ => Err(syntax(off, "an expression")),
        }
    }

    /// `t`, `k*t`, `k t` or `t*k` with `k >= 1`.
    fn frequency(&mut self) -> Result<u32> {
        let is_t = |t: &Tok| matches!(t, Tok::Ident(s) if s == "t");
        let off = self.offset();
        let k = if is_t(self.peek()) {
            self.bump();
            if self.at_sym('*') {
                self.bump();
                self.small_int(u32::MAX as i64)?
            } else {
                1
            }
        } else {
            let k = self.small_int(u32::MAX as i64)?;
            if self.at_sym('*') {
                self.bump();
            }
            if !is_t(self.peek()) {
                return Err(syntax(self.offset(), "'t'"));
            }
            self.bump();
            k
        };
        if k == 0 {
            return Err(eval_err(off, "frequency must be positive"));
        }
        Ok(k as u32)
    }
}

fn apply<T>(op: char, a: T, b: T) -> T
where
    T: std::ops::Add<Output = T> + std::ops::Sub<Output = T> + std::ops::Mul<Output = T>,
{
    match op {
        '+' => a + b,
        '-' => a - b,
        _ => a * b,
    }
}

fn arith(op: char, a: Value, b: Value, off: usize) -> Result<Value> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(apply(op, x, y))),
        (a @ Value::Trig(_), b) | (a, b @ Value::Trig(_)) => {
            let mix = |v: Value| {
                v.trig().map_err(|w| {
                    eval_err(
                        off,
                        format!("cannot combine an expression in t with {w}; compose with @"),
                    )
                })
            };
            let found_z = matches!(a, Value::Laurent(_)) || matches!(b, Value::Laurent(_));
            if found_z {
                return Err(eval_err(off, "cannot combine z and t; compose with @"));
            }
            Ok(Value::Trig(apply(op, mix(a)?, mix(b)?)))
        }
        (a, b) => Ok(Value::Laurent(apply(
            op,
            a.laurent().expect("z"),
            b.laurent().expect("z"),
        ))),
    }
}

fn power(base: Value, e: i64, off: usize) -> Result<Value> {
    match base {
        Value::Scalar(x) => x.powi(e).map(Value::Scalar).ok_or(Error::DivisionByZero),
        Value::Laurent(l) if e >= 0 => Ok(Value::Laurent(l.pow(e as u32))),
        Value::Laurent(l) => {
            let terms = l.terms();
            if terms.len() != 1 {
                return Err(eval_err(off, "negative powers need a single term"));
            }
            let (&k, c) = terms.iter().next().expect("one term");
            let c = c.powi(e).ok_or(Error::DivisionByZero)?;
            Ok(Value::Laurent(LaurentPoly::monomial(c, k * e)))
        }
        Value::Trig(p) if e >= 0 => Ok(Value::Trig(p.pow(e as u32))),
        Value::Trig(_) => Err(eval_err(off, "negative powers of trigonometric polynomials")),
    }
}

fn sqrt(v: Value, off: usize) -> Result<Value> {
    let Value::Scalar(x) = v else {
        return Err(eval_err(off, "sqrt takes a constant"));
    };
    if !x.is_real() || x.real_part().signum() < 0 {
        return Err(eval_err(off, "sqrt takes a nonnegative real constant"));
    }
    sqrt_all(&x)
        .into_iter()
        .find(|r| r.is_real() && r.real_part().signum() >= 0)
        .map(Value::Scalar)
        .ok_or_else(|| Error::OutsideTower {
            what: "sqrt",
            detail: x.to_string(),
        })
}

fn compose(outer: Value, inner: Value, off: usize) -> Result<Value> {
    let p = match outer {
        Value::Scalar(c) => return Ok(Value::Scalar(c)),
        Value::Laurent(l) => l
            .to_poly()
            .ok_or_else(|| eval_err(off, "the left side of @ must be a polynomial in z"))?,
        Value::Trig(_) => return Err(eval_err(off, "the left side of @ must be a polynomial in z")),
    };
    match inner {
        Value::Scalar(x) => Ok(Value::Scalar(p.eval(&x))),
        Value::Laurent(l) => Ok(Value::Laurent(LaurentPoly::compose_outer(&p, &l))),
        Value::Trig(w) => {
            let real = p
                .to_real()
                .ok_or_else(|| eval_err(off, "a polynomial applied to t must have real coefficients"))?;
            Ok(Value::Trig(TrigPoly::compose(&real, &w)))
        }
    }
}

/// Parses `text` without fixing the ring.
pub fn parse_value(text: &str) -> Result<Value> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let v = p.expr()?;
    match p.peek() {
        Tok::End => Ok(v),
        _ => Err(syntax(p.offset(), "an operator or end of input")),
    }
}

/// Parses `text` as an element of `ring`.
pub fn parse_expression(text: &str, ring: Ring) -> Result<Parsed> {
    parse_value(text)?.into_ring(ring)
}

pub fn parse_trig(text: &str) -> Result<TrigPoly> {
    match parse_expression(text, Ring::Trig)? {
        Parsed::Trig(p) => Ok(p),
        _ => unreachable!(),
    }
}

pub fn parse_laurent(text: &str) -> Result<LaurentPoly> {
    match parse_expression(text, Ring::Laurent)? {
        Parsed::Laurent(l) => Ok(l),
        _ => unreachable!(),
    }
}

pub fn parse_poly(text: &str) -> Result<ComplexPoly> {
    match parse_expression(text, Ring::Poly)? {
        Parsed::Poly(p) => Ok(p),
        _ => unreachable!(),
    }
}

/// A polynomial in `z` with real coefficients.
pub fn parse_real_poly(text: &str) -> Result<RealPoly> {
    parse_poly(text)?
        .to_real()
        .ok_or_else(|| Error::Evaluation(format!("{text:?} has non-real coefficients")))
}

/// Exact equality of two expressions, comparing constants across rings.
pub fn values_equal(a: Value, b: Value) -> bool {
    match (a, b) {
        (Value::Trig(p), v) | (v, Value::Trig(p)) => v.trig().map(|q| q == p).unwrap_or(false),
        (a, b) => a.laurent() == b.laurent(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    #[test]
    fn examples() {
        assert_eq!(parse_trig("cos(2*t)").unwrap(), TrigPoly::cos(2));
        let half = TowerElem::from_rat(rat(1, 2));
        let u1 = LaurentPoly::from_terms([(1, half.clone()), (-1, half)]);
        assert_eq!(parse_laurent("1/2*(z + z^-1)").unwrap(), u1);
        assert_eq!(
            parse_trig("cos(t"),
            Err(Error::Syntax {
                offset: 5,
                expected: "')'".into()
            })
        );
        assert_eq!(parse_trig("cos(θ)^2 + sin(θ)^2").unwrap(), TrigPoly::one());
    }

    #[test]
    fn composition_and_constants() {
        assert_eq!(parse_trig("(2*z^2 - 1) @ cos(t)").unwrap(), TrigPoly::cos(2));
        assert_eq!(
            parse_trig("z^2 @ cos(t)").unwrap(),
            parse_trig("(1 - z^2) @ sin(t)").unwrap()
        );
        assert_eq!(parse_poly("z^2 @ z + 1").unwrap().to_string(), "z^2 + 2*z + 1");
        assert_eq!(parse_laurent("sqrt(8) - 2*sqrt2").unwrap(), LaurentPoly::zero());
        assert_eq!(parse_laurent("sqrt(12)").unwrap().to_string(), "2*sqrt(3)");
        assert_eq!(parse_laurent("(2*z)^-2").unwrap().to_string(), "1/4*z^-2");
        assert_eq!(parse_laurent("i^2").unwrap().to_string(), "-1");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_trig("i*cos(t)"), Err(Error::Evaluation(_))));
        assert!(matches!(parse_trig("z + cos(t)"), Err(Error::Evaluation(_))));
        assert!(matches!(parse_poly("z^-1"), Err(Error::Evaluation(_))));
        assert!(matches!(parse_laurent("1/0"), Err(Error::DivisionByZero)));
        assert!(matches!(parse_laurent("sqrt(5)"), Err(Error::OutsideTower { .. })));
        assert_eq!(
            parse_trig("cos(2*t) +"),
            Err(Error::Syntax {
                offset: 10,
                expected: "an expression".into()
            })
        );
        assert_eq!(
            parse_trig("cos(x)"),
            Err(Error::Syntax {
                offset: 4,
                expected: "an integer".into()
            })
        );
        assert!(matches!(parse_trig("2 $"), Err(Error::Syntax { offset: 2, .. })));
    }

    #[test]
    fn printed_forms_round_trip() {
        let texts = [
            "1/2*cos(3*t) - sqrt(2)*sin(t) + 2/3",
            "(1 + i*sqrt(6))*z^2 - 1/2*z^-3",
            "-z^4 + (-i + sqrt(3))*z + 5",
        ];
        for text in texts {
            let v = parse_value(text).unwrap();
            let printed = match &v {
                Value::Trig(p) => p.to_string(),
                Value::Laurent(l) => l.to_string(),
                Value::Scalar(c) => c.to_string(),
            };
            assert_eq!(printed, text);
        }
    }
}
