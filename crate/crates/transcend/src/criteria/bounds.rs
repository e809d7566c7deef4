//! Exponent bounds as functions of a scan parameter `c`, parameter grids, and the
//! minimum of a criterion's transcendence base over a grid.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{base_values, BaseKind, CriterionParams, Theorem};
use crate::numberfield::parse_rat;
use crate::{BigRat, Error, Result};

/// Rational expression in `c`: `+ - * /`, integer powers `^`, `max(·,·)`, `min(·,·)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundExpr {
    Num(BigRat),
    C,
    Neg(Box<BoundExpr>),
    Add(Box<BoundExpr>, Box<BoundExpr>),
    Sub(Box<BoundExpr>, Box<BoundExpr>),
    Mul(Box<BoundExpr>, Box<BoundExpr>),
    Div(Box<BoundExpr>, Box<BoundExpr>),
    Pow(Box<BoundExpr>, Box<BoundExpr>),
    Max(Box<BoundExpr>, Box<BoundExpr>),
    Min(Box<BoundExpr>, Box<BoundExpr>),
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.i, msg: msg.into() })
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.i += 1;
            Ok(())
        } else {
            self.err(&format!("expected '{}'", c as char))
        }
    }

    fn expr(&mut self) -> Result<BoundExpr> {
        let mut e = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    e = BoundExpr::Add(e.into(), self.term()?.into());
                }
                Some(b'-') => {
                    self.i += 1;
                    e = BoundExpr::Sub(e.into(), self.term()?.into());
                }
                _ => return Ok(e),
            }
        }
    }

    fn term(&mut self) -> Result<BoundExpr> {
        let mut e = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    e = BoundExpr::Mul(e.into(), self.unary()?.into());
                }
                Some(b'/') => {
                    self.i += 1;
                    e = BoundExpr::Div(e.into(), self.unary()?.into());
                }
                _ => return Ok(e),
            }
        }
    }

    fn unary(&mut self) -> Result<BoundExpr> {
        if self.peek() == Some(b'-') {
            self.i += 1;
            return Ok(BoundExpr::Neg(self.unary()?.into()));
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            return Ok(BoundExpr::Pow(base.into(), self.unary()?.into()));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BoundExpr> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                self.eat(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.i]).unwrap();
                Ok(BoundExpr::Num(BigRat::from_integer(text.parse::<BigInt>().unwrap())))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_alphanumeric() {
                    self.i += 1;
                }
                match &self.s[start..self.i] {
                    b"c" => Ok(BoundExpr::C),
                    name @ (b"max" | b"min") => {
                        let is_max = name == b"max";
                        self.eat(b'(')?;
                        let a = self.expr()?;
                        self.eat(b',')?;
                        let b = self.expr()?;
                        self.eat(b')')?;
                        Ok(if is_max { BoundExpr::Max(a.into(), b.into()) } else { BoundExpr::Min(a.into(), b.into()) })
                    }
                    _ => {
                        self.i = start;
                        self.err("unknown name; only c, max and min are allowed")
                    }
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("expected an expression"),
        }
    }
}

impl FromStr for BoundExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { s: s.as_bytes(), i: 0 };
        let e = p.expr()?;
        if p.peek().is_some() {
            return p.err("unexpected trailing input");
        }
        Ok(e)
    }
}

impl BoundExpr {
    pub fn constant(r: BigRat) -> Self {
        BoundExpr::Num(r)
    }

    pub fn eval(&self, c: &BigRat) -> Result<BigRat> {
        use BoundExpr::*;
        Ok(match self {
            Num(r) => r.clone(),
            C => c.clone(),
            Neg(a) => -a.eval(c)?,
            Add(a, b) => a.eval(c)? + b.eval(c)?,
            Sub(a, b) => a.eval(c)? - b.eval(c)?,
            Mul(a, b) => a.eval(c)? * b.eval(c)?,
            Div(a, b) => {
                let den = b.eval(c)?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                a.eval(c)? / den
            }
            Pow(a, b) => {
                let e = b.eval(c)?;
                if !e.is_integer() {
                    return Err(Error::Eval("bound exponents must be integers".into()));
                }
                let k = e.to_integer().to_i32().ok_or_else(|| Error::Eval("bound exponent too large".into()))?;
                let base = a.eval(c)?;
                if k < 0 && base.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                num_traits::pow::Pow::pow(base, k)
            }
            Max(a, b) => a.eval(c)?.max(b.eval(c)?),
            Min(a, b) => a.eval(c)?.min(b.eval(c)?),
        })
    }
}

impl fmt::Display for BoundExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use BoundExpr::*;
        match self {
            Num(r) if r.is_negative() || !r.is_integer() => write!(f, "({r})"),
            Num(r) => write!(f, "{r}"),
            C => write!(f, "c"),
            Neg(a) => write!(f, "-{a}"),
            Add(a, b) => write!(f, "({a} + {b})"),
            Sub(a, b) => write!(f, "({a} - {b})"),
            Mul(a, b) => write!(f, "{a}*{b}"),
            Div(a, b) => write!(f, "{a}/{b}"),
            Pow(a, b) => write!(f, "{a}^{b}"),
            Max(a, b) => write!(f, "max({a}, {b})"),
            Min(a, b) => write!(f, "min({a}, {b})"),
        }
    }
}

/// Lower bounds for `β, y, y₁, y₂, η₂` and an upper bound for `η₁`. Missing bounds take the
/// least restrictive admissible value: `β = 0`, `y = y₁ = η₂ = 1`, `y₂ = β`, and `η₁` at
/// its ceiling `(d−1)y + β` (or `(d−1)y₁ + y₂`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExponentBounds {
    pub beta: Option<BoundExpr>,
    pub y: Option<BoundExpr>,
    pub y1: Option<BoundExpr>,
    pub y2: Option<BoundExpr>,
    pub eta1: Option<BoundExpr>,
    pub eta2: Option<BoundExpr>,
    pub delta: BigRat,
}

impl ExponentBounds {
    fn params_at(&self, theorem: Theorem, d: usize, c: &BigRat) -> Result<CriterionParams> {
        let ev = |e: &Option<BoundExpr>, default: BigRat| e.as_ref().map_or(Ok(default), |e| e.eval(c));
        let one = BigRat::one();
        let dm1 = BigRat::from_integer(BigInt::from(d) - 1);
        let mut p = CriterionParams::new(theorem);
        p.beta = ev(&self.beta, BigRat::zero())?;
        p.y = ev(&self.y, one.clone())?;
        p.y1 = ev(&self.y1, one.clone())?;
        p.y2 = ev(&self.y2, p.beta.clone())?;
        p.eta2 = ev(&self.eta2, one)?;
        let eta1_cap = match theorem {
            Theorem::General => &dm1 * &p.y1 + &p.y2,
            _ => &dm1 * &p.y + &p.beta,
        };
        p.eta1 = ev(&self.eta1, eta1_cap)?;
        p.delta = self.delta.clone();
        if p.beta >= BigRat::one() || p.beta.is_negative() {
            return Err(Error::ConstraintViolated(format!("β = {} outside [0, 1) at c = {c}", p.beta)));
        }
        Ok(p)
    }
}

/// Evenly spaced scan points between two endpoints, each end open or closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub start: BigRat,
    pub end: BigRat,
    pub step: BigRat,
    pub open_start: bool,
    pub open_end: bool,
}

const MAX_GRID_POINTS: usize = 1_000_000;

impl Grid {
    pub fn point(c: BigRat) -> Self {
        Grid { start: c.clone(), end: c, step: BigRat::one(), open_start: false, open_end: false }
    }

    pub fn points(&self) -> Result<Vec<BigRat>> {
        if !self.step.is_positive() {
            return Err(Error::Invalid("grid step must be positive".into()));
        }
        let mut out = Vec::new();
        let mut c = self.start.clone();
        if self.open_start {
            c += &self.step;
        }
        while c < self.end || (c == self.end && !self.open_end) {
            out.push(c.clone());
            if out.len() > MAX_GRID_POINTS {
                return Err(Error::Invalid("grid has too many points".into()));
            }
            c += &self.step;
        }
        Ok(out)
    }
}

impl FromStr for Grid {
    type Err = Error;
    /// `(-1,3]:1/10`, `[0,1):1/10`, or a single value such as `5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Invalid(format!("grid {s:?}; expected e.g. \"(-1,3]:1/10\" or a single value"));
        if !s.starts_with(['(', '[']) {
            return Ok(Grid::point(parse_rat(s)?));
        }
        let (interval, step) = s.split_once(':').ok_or_else(bad)?;
        let open_start = interval.starts_with('(');
        let open_end = interval.ends_with(')');
        if !interval.ends_with([')', ']']) {
            return Err(bad());
        }
        let inner = &interval[1..interval.len() - 1];
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        Ok(Grid { start: parse_rat(a)?, end: parse_rat(b)?, step: parse_rat(step)?, open_start, open_end })
    }
}

/// Smallest transcendence base over the grid and the first point attaining it. When a
/// criterion has several transcendence bases the largest is used, since all must be outgrown.
pub fn min_required_base(
    theorem: Theorem,
    d: usize,
    bounds: &ExponentBounds,
    grid: &[BigRat],
) -> Result<(BigRat, BigRat)> {
    let mut best: Option<(BigRat, BigRat)> = None;
    for c in grid {
        let p = bounds.params_at(theorem, d, c)?;
        let base = base_values(theorem, d, &p)
            .into_iter()
            .filter(|b| b.kind == BaseKind::Transcendence)
            .map(|b| b.value)
            .max()
            .ok_or_else(|| Error::Invalid(format!("criterion {theorem} has no transcendence base")))?;
        if best.as_ref().is_none_or(|(m, _)| base < *m) {
            best = Some((base, c.clone()));
        }
    }
    best.ok_or(Error::EmptyGrid)
}
