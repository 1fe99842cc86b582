//! Element, descriptor and ideal syntax.
//!
//! Elements:
//!
//! ```text
//! expr     := term ('+' term)*
//! term     := factor (('*' | '/') factor | factor)*     juxtaposition before X, Y or '('
//! factor   := atom ('^' exponent)?
//! atom     := number | '-' number | 'inf' | 'X' | 'Y' | '(' expr ')'
//! exponent := ['-'] number | '(' ['-'] number ['/' number] ')'
//! ```
//!
//! Whitespace is ignored. A quotient of two literals is read as a rational
//! literal first, so `1/2` is a `qnn` constant and `(1)/(2)` a fraction.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideals::{FinGenIdeal, Ideal, IntervalIdeal};
use crate::instances::{Element, ExponentMonoid, Semiring, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: expected {}, found {}",
            self.pos, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    X,
    Y,
    Inf,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "number `{n}`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::X => write!(f, "`X`"),
            Tok::Y => write!(f, "`Y`"),
            Tok::Inf => write!(f, "`inf`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(input: &str) -> std::result::Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'X' | b'x' => Tok::X,
            b'Y' | b'y' => Tok::Y,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = input[start..i].parse().expect("digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            _ if input[i..].starts_with("inf") => {
                i += 3;
                out.push((start, Tok::Inf));
                continue;
            }
            _ => {
                let found = input[i..].chars().next().unwrap_or(' ');
                return Err(ParseError {
                    pos: i,
                    expected: "a number, `inf`, `X`, `Y`, an operator or a parenthesis".into(),
                    found: format!("`{found}`"),
                });
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((input.len(), Tok::End));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
enum Expr {
    Num(BigRational),
    Inf,
    X,
    Y,
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, BigRational),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            pos: self.pos(),
            expected: expected.into(),
            found: self.peek().to_string(),
        }
    }

    fn expect(&mut self, tok: Tok) -> std::result::Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&tok.to_string()))
        }
    }

    fn expr(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let rhs = self.factor()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                Tok::Slash => {
                    self.bump();
                    let rhs = self.factor()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
                }
                Tok::X | Tok::Y | Tok::LParen => {
                    let rhs = self.factor()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> std::result::Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn signed_number(&mut self) -> std::result::Result<BigInt, ParseError> {
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        match self.bump() {
            Tok::Num(n) => Ok(if negative { -n } else { n }),
            _ => {
                self.at -= 1;
                Err(self.error("a number"))
            }
        }
    }

    fn exponent(&mut self) -> std::result::Result<BigRational, ParseError> {
        if *self.peek() == Tok::LParen {
            self.bump();
            let num = self.signed_number()?;
            let mut den = BigInt::one();
            if *self.peek() == Tok::Slash {
                self.bump();
                let pos = self.pos();
                den = self.signed_number()?;
                if den.is_zero() {
                    return Err(ParseError {
                        pos,
                        expected: "a nonzero denominator".into(),
                        found: "`0`".into(),
                    });
                }
            }
            self.expect(Tok::RParen)?;
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(self.signed_number()?))
    }

    fn atom(&mut self) -> std::result::Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(Expr::Num(BigRational::from_integer(n)))
            }
            Tok::Minus => {
                self.bump();
                match self.peek().clone() {
                    Tok::Num(n) => {
                        self.bump();
                        Ok(Expr::Num(BigRational::from_integer(-n)))
                    }
                    _ => Err(self.error("a number after unary `-`")),
                }
            }
            Tok::Inf => {
                self.bump();
                Ok(Expr::Inf)
            }
            Tok::X => {
                self.bump();
                Ok(Expr::X)
            }
            Tok::Y => {
                self.bump();
                Ok(Expr::Y)
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => Err(self.error("a number, `inf`, `X`, `Y` or `(`")),
        }
    }
}

fn parse_expr(input: &str) -> std::result::Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("an operator or end of input"));
    }
    Ok(e)
}

/// Value algebra an expression is evaluated in.
trait Target {
    type V: Clone;
    fn num(&self, q: &BigRational) -> Result<Self::V>;
    fn inf(&self) -> Result<Self::V>;
    fn x_pow(&self, e: &BigRational) -> Result<Self::V>;
    fn y_pow(&self, n: usize) -> Result<Self::V>;
    fn one(&self) -> Self::V;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn inverse(&self, a: &Self::V) -> Result<Self::V>;
}

const MAX_POWER: u64 = 4096;

fn eval<T: Target>(t: &T, e: &Expr) -> Result<T::V> {
    match e {
        Expr::Num(q) => t.num(q),
        Expr::Inf => t.inf(),
        Expr::X => t.x_pow(&BigRational::one()),
        Expr::Y => t.y_pow(1),
        Expr::Add(a, b) => Ok(t.add(&eval(t, a)?, &eval(t, b)?)),
        Expr::Mul(a, b) => Ok(t.mul(&eval(t, a)?, &eval(t, b)?)),
        Expr::Div(a, b) => {
            if let (Expr::Num(n), Expr::Num(d)) = (a.as_ref(), b.as_ref()) {
                if !d.is_zero() {
                    match t.num(&(n / d)) {
                        Ok(v) => return Ok(v),
                        Err(err) => {
                            let num = t.num(n)?;
                            let den = t.num(d)?;
                            return t
                                .inverse(&den)
                                .map(|inv| t.mul(&num, &inv))
                                .map_err(|_| err);
                        }
                    }
                }
            }
            let num = eval(t, a)?;
            let den = eval(t, b)?;
            Ok(t.mul(&num, &t.inverse(&den)?))
        }
        Expr::Pow(base, q) => match base.as_ref() {
            Expr::X => t.x_pow(q),
            _ => {
                if !q.is_integer() {
                    return Err(Error::InvalidArgument(
                        "fractional exponents apply only to X".into(),
                    ));
                }
                let n = q.to_integer();
                let k = n
                    .abs()
                    .to_u64()
                    .filter(|k| *k <= MAX_POWER)
                    .ok_or_else(|| Error::InvalidArgument(format!("exponent {n} is too large")))?;
                if let Expr::Y = base.as_ref() {
                    if n.is_negative() {
                        return Err(Error::InvalidArgument(
                            "Y takes nonnegative exponents only".into(),
                        ));
                    }
                    return t.y_pow(k as usize);
                }
                let mut b = eval(t, base)?;
                if n.is_negative() {
                    b = t.inverse(&b)?;
                }
                let mut acc = t.one();
                for _ in 0..k {
                    acc = t.mul(&acc, &b);
                }
                Ok(acc)
            }
        },
    }
}

struct InstanceTarget<'a>(&'a Semiring);

impl Target for InstanceTarget<'_> {
    type V = Value;

    fn num(&self, q: &BigRational) -> Result<Value> {
        self.0.literal(q)
    }

    fn inf(&self) -> Result<Value> {
        self.0.infinity()
    }

    fn x_pow(&self, e: &BigRational) -> Result<Value> {
        self.0.monomial(e)
    }

    fn y_pow(&self, _: usize) -> Result<Value> {
        Err(Error::InvalidArgument(
            "`Y` is reserved for content polynomials".into(),
        ))
    }

    fn one(&self) -> Value {
        self.0.one()
    }

    fn add(&self, a: &Value, b: &Value) -> Value {
        self.0.add(a, b)
    }

    fn mul(&self, a: &Value, b: &Value) -> Value {
        self.0.mul(a, b)
    }

    fn inverse(&self, a: &Value) -> Result<Value> {
        self.0
            .inverse(a)
            .ok_or_else(|| Error::NotInvertible(self.0.fmt_value(a)))
    }
}

/// Polynomials in `Y` with coefficients in an instance, lowest degree first.
struct ContentTarget<'a>(&'a Semiring);

impl ContentTarget<'_> {
    fn trim(&self, mut v: Vec<Value>) -> Vec<Value> {
        while v.last().is_some_and(|c| self.0.is_zero(c)) {
            v.pop();
        }
        v
    }
}

impl Target for ContentTarget<'_> {
    type V = Vec<Value>;

    fn num(&self, q: &BigRational) -> Result<Vec<Value>> {
        Ok(self.trim(vec![self.0.literal(q)?]))
    }

    fn inf(&self) -> Result<Vec<Value>> {
        Ok(self.trim(vec![self.0.infinity()?]))
    }

    fn x_pow(&self, e: &BigRational) -> Result<Vec<Value>> {
        Ok(vec![self.0.monomial(e)?])
    }

    fn y_pow(&self, n: usize) -> Result<Vec<Value>> {
        let mut v = vec![self.0.zero(); n];
        v.push(self.0.one());
        Ok(v)
    }

    fn one(&self) -> Vec<Value> {
        vec![self.0.one()]
    }

    fn add(&self, a: &Vec<Value>, b: &Vec<Value>) -> Vec<Value> {
        let n = a.len().max(b.len());
        let zero = self.0.zero();
        let out = (0..n)
            .map(|i| {
                self.0
                    .add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero))
            })
            .collect();
        self.trim(out)
    }

    fn mul(&self, a: &Vec<Value>, b: &Vec<Value>) -> Vec<Value> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.0.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.0.add(&out[i + j], &self.0.mul(x, y));
            }
        }
        self.trim(out)
    }

    fn inverse(&self, a: &Vec<Value>) -> Result<Vec<Value>> {
        match a.as_slice() {
            [c] => self
                .0
                .inverse(c)
                .map(|i| vec![i])
                .ok_or_else(|| Error::NotInvertible(self.0.fmt_value(c))),
            _ => Err(Error::NotInvertible("a polynomial in Y".into())),
        }
    }
}

/// Parses an element expression into a canonical element of `semiring`.
pub fn parse_element(input: &str, semiring: &Arc<Semiring>) -> Result<Element> {
    let expr = parse_expr(input)?;
    let value = eval(&InstanceTarget(semiring.ambient()), &expr)?;
    Element::new(semiring.clone(), semiring.canonical(&value))
}

/// Coefficients (lowest `Y` degree first) of a polynomial in `Y`.
pub(crate) fn parse_content(input: &str, semiring: &Semiring) -> Result<Vec<Value>> {
    let expr = parse_expr(input)?;
    let coeffs = eval(&ContentTarget(semiring.ambient()), &expr)?;
    for c in &coeffs {
        semiring.check(c)?;
    }
    Ok(coeffs.iter().map(|c| semiring.canonical(c)).collect())
}

/// Splits on commas outside any brackets.
pub(crate) fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts
}

fn call(s: &str) -> Option<(&str, Vec<&str>)> {
    let open = s.find('(')?;
    let inner = s[open + 1..].strip_suffix(')')?;
    Some((s[..open].trim(), split_top_level(inner)))
}

impl FromStr for Semiring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Semiring> {
        let t = s.trim();
        let unknown = || Error::UnknownDescriptor(t.to_string());
        let sr = match t {
            "nat" => Semiring::Nat,
            "qnn" => Semiring::Qnn,
            "bool-poly" => Semiring::BoolPoly,
            "fuzzy" => Semiring::Fuzzy,
            "tropical-nat" => Semiring::TropicalNat,
            "tropical-int" => Semiring::TropicalInt,
            "ideals-z" => Semiring::IdealsZ,
            _ => {
                let (name, args) = call(t).ok_or_else(unknown)?;
                match (name, args.as_slice()) {
                    ("poly", [b]) => Semiring::poly(b.parse()?),
                    ("laurent", [b]) => Semiring::laurent(b.parse()?),
                    ("fractions", [b]) => Semiring::fractions(b.parse()?),
                    ("monoid", [b, m]) => {
                        let m = match *m {
                            "N0" => ExponentMonoid::N0,
                            "Z" => ExponentMonoid::Z,
                            "Q" => ExponentMonoid::Q,
                            other => {
                                return Err(Error::InvalidDescriptor {
                                    descriptor: t.to_string(),
                                    reason: format!("unknown exponent monoid `{other}`"),
                                })
                            }
                        };
                        Semiring::monoid(b.parse()?, m)
                    }
                    ("sv", [k, r]) => Semiring::sv(k.parse()?, r.parse()?),
                    _ => return Err(unknown()),
                }
            }
        };
        sr.validate()?;
        Ok(sr)
    }
}

/// Parses `ideal[e1, e2, ...]` over `semiring`, or an interval ideal
/// `fuzzy[0,a]` / `fuzzy[0,a)`.
pub fn parse_ideal(input: &str, semiring: &Arc<Semiring>) -> Result<Ideal> {
    let t = input.trim();
    let bad = |expected: &str| {
        Error::Parse(ParseError {
            pos: 0,
            expected: expected.into(),
            found: format!("`{t}`"),
        })
    };
    if let Some(rest) = t.strip_prefix("ideal[") {
        let inner = rest.strip_suffix(']').ok_or_else(|| bad("`]`"))?;
        let gens = split_top_level(inner)
            .into_iter()
            .filter(|g| !g.is_empty())
            .map(|g| parse_element(g, semiring))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Ideal::FinGen(FinGenIdeal::new(semiring.clone(), gens)?));
    }
    if let Some(rest) = t.strip_prefix("fuzzy[") {
        let (inner, closed) = if let Some(i) = rest.strip_suffix(']') {
            (i, true)
        } else if let Some(i) = rest.strip_suffix(')') {
            (i, false)
        } else {
            return Err(bad("`]` or `)`"));
        };
        let parts = split_top_level(inner);
        let [lo, hi] = parts.as_slice() else {
            return Err(bad("two interval endpoints"));
        };
        let fuzzy = Arc::new(Semiring::Fuzzy);
        let lo = parse_element(lo, &fuzzy)?;
        if !lo.is_zero() {
            return Err(bad("an interval starting at 0"));
        }
        let hi = parse_element(hi, &fuzzy)?;
        let Value::Rat(a) = hi.into_value() else {
            unreachable!("fuzzy payloads are rationals")
        };
        return Ok(Ideal::Interval(IntervalIdeal::new(a, closed)?));
    }
    Err(bad("`ideal[...]` or `fuzzy[0,a]`"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sr(s: &str) -> Arc<Semiring> {
        Arc::new(s.parse().unwrap())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn polynomial_literal() {
        let p = sr("poly(nat)");
        let e = parse_element("3*X^2 + X", &p).unwrap();
        let Value::Poly(t) = e.value() else { panic!() };
        assert_eq!(t.len(), 2);
        assert_eq!(t[&q(1, 1)], p.as_monoid().unwrap().0.one());
        assert_eq!(t[&q(2, 1)], Value::Nat(3u32.into()));
        assert_eq!(e.to_string(), "X + 3*X^2");
    }

    #[test]
    fn fraction_literal() {
        let f = sr("fractions(qnn)");
        let e = parse_element("(50)/(3)", &f).unwrap();
        let expected = Element::new(f.clone(), f.literal(&q(50, 3)).unwrap()).unwrap();
        assert_eq!(e, expected);
        let fp = sr("fractions(poly(nat))");
        let x = parse_element("(X)/(1+X)", &fp).unwrap();
        assert_eq!(x.to_string(), "(X)/(1 + X)");
        assert_eq!(parse_element(&x.to_string(), &fp).unwrap(), x);
    }

    #[test]
    fn exponent_domain_is_enforced() {
        let p = sr("poly(nat)");
        assert!(matches!(
            parse_element("X^-1", &p),
            Err(Error::NotInCarrier { .. })
        ));
        let l = sr("laurent(nat)");
        let e = parse_element("X^-2 + 3*X", &l).unwrap();
        assert_eq!(e.to_string(), "X^-2 + 3*X");
        let m = sr("monoid(nat, Q)");
        assert_eq!(parse_element("X^(1/2)", &m).unwrap().to_string(), "X^(1/2)");
    }

    #[test]
    fn syntax_errors_report_position() {
        let n = sr("nat");
        let Err(Error::Parse(e)) = parse_element("2 + * 3", &n) else {
            panic!()
        };
        assert_eq!(e.pos, 4);
        let Err(Error::Parse(e)) = parse_element("(2 + 3", &n) else {
            panic!()
        };
        assert_eq!(e.pos, 6);
        assert!(e.expected.contains(')'));
        assert!(matches!(parse_element("2 $", &n), Err(Error::Parse(_))));
    }

    #[test]
    fn inf_is_reserved_for_tropical_carriers() {
        assert!(parse_element("inf", &sr("tropical-int")).is_ok());
        assert!(parse_element("min", &sr("tropical-int")).is_err());
        assert!(matches!(
            parse_element("inf", &sr("nat")),
            Err(Error::NotInCarrier { .. })
        ));
        assert_eq!(
            parse_element("-3", &sr("tropical-int"))
                .unwrap()
                .to_string(),
            "-3"
        );
        assert!(parse_element("-3", &sr("tropical-nat")).is_err());
    }

    #[test]
    fn whitespace_insensitive() {
        let p = sr("poly(nat)");
        assert_eq!(
            parse_element("3*X^2+X", &p).unwrap(),
            parse_element("  3 * X ^ 2 +   X ", &p).unwrap()
        );
        assert_eq!(
            parse_element("2X", &p).unwrap(),
            parse_element("2*X", &p).unwrap()
        );
    }

    #[test]
    fn operators_follow_the_instance() {
        let t = sr("tropical-int");
        assert_eq!(parse_element("3 + 5", &t).unwrap().to_string(), "3");
        assert_eq!(parse_element("3 * 5", &t).unwrap().to_string(), "8");
        let z = sr("ideals-z");
        assert_eq!(parse_element("4 + 6", &z).unwrap().to_string(), "2");
        let q5 = sr("sv(qnn, vp:5)");
        assert_eq!(parse_element("(50)/(5)", &q5).unwrap().to_string(), "10");
        assert!(parse_element("1/5", &q5).is_err());
    }

    #[test]
    fn descriptors_round_trip() {
        for d in [
            "nat",
            "poly(nat)",
            "laurent(qnn)",
            "monoid(nat, Q)",
            "fractions(poly(nat))",
            "fractions(ideals-z)",
            "sv(qnn, vp:5)",
            "sv(fractions(poly(nat)), deg-frac)",
            "sv(fractions(poly(nat)), ext(low-order))",
        ] {
            assert_eq!(sr(d).to_string(), d);
        }
        assert!(matches!(
            "matrix(nat)".parse::<Semiring>(),
            Err(Error::UnknownDescriptor(_))
        ));
        assert!(matches!(
            "fractions(fuzzy)".parse::<Semiring>(),
            Err(Error::InvalidDescriptor { .. })
        ));
        assert!(matches!(
            "poly(poly(nat))".parse::<Semiring>(),
            Err(Error::InvalidDescriptor { .. })
        ));
        assert!("sv(nat, deg-frac)".parse::<Semiring>().is_err());
    }

    #[test]
    fn content_polynomials() {
        let n = Semiring::Nat;
        let c = parse_content("2 + 3*Y", &n).unwrap();
        assert_eq!(c, vec![Value::Nat(2u32.into()), Value::Nat(3u32.into())]);
        assert_eq!(parse_content("(1+Y)^2", &n).unwrap().len(), 3);
        assert!(parse_content("0*Y", &n).unwrap().is_empty());
        assert!(parse_element("Y", &sr("nat")).is_err());
    }

    #[test]
    fn ideal_literals() {
        let n = sr("nat");
        let Ideal::FinGen(i) = parse_ideal("ideal[2, 3]", &n).unwrap() else {
            panic!()
        };
        assert_eq!(i.generators().len(), 2);
        let Ideal::Interval(a) = parse_ideal("fuzzy[0,1/2)", &sr("fuzzy")).unwrap() else {
            panic!()
        };
        assert_eq!(a.endpoint(), &q(1, 2));
        assert!(!a.closed());
        assert!(parse_ideal("ideal(2)", &n).is_err());
    }
}
