//! Sequence definition language.
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := factor (("*"|"/") factor)*
//! factor := atom ("^" atom)?
//! atom   := integer | "n" | "phi" | "phibar" | "sqrt" "(" integer ")"
//!         | "F" "(" expr ")" | "(" expr ")" | "theta"
//! ```
//!
//! `theta` is the field generator.
//!
//! Symbols are resolved against the field when parsing, so `phi` in a field without `√5`
//! is rejected up front. Callers may bind extra names (such as `x`) to field elements.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::fib;
use crate::exactmath::{IntervalComplex, IntervalReal, Precision};
use crate::numberfield::{FieldElement, NumberField};
use crate::{BigRat, Error, Result};

/// Largest index for which `F(k)` is computed exactly inside the interval evaluator.
const EXACT_FIB_LIMIT: u64 = 20_000;
/// Exact intermediate values beyond this many bits switch to enclosures.
const EXACT_BITS_LIMIT: u64 = 20_000;

#[derive(Clone, Debug, PartialEq)]
pub enum SeqExpr {
    Int(BigInt),
    N,
    /// named field constant (`phi`, `phibar`, `sqrt(k)` or a caller binding)
    Const(String, FieldElement),
    Fib(Box<SeqExpr>),
    Add(Box<SeqExpr>, Box<SeqExpr>),
    Sub(Box<SeqExpr>, Box<SeqExpr>),
    Mul(Box<SeqExpr>, Box<SeqExpr>),
    Div(Box<SeqExpr>, Box<SeqExpr>),
    Pow(Box<SeqExpr>, Box<SeqExpr>),
}

impl fmt::Display for SeqExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqExpr::Int(i) => write!(f, "{i}"),
            SeqExpr::N => write!(f, "n"),
            SeqExpr::Const(name, _) => write!(f, "{name}"),
            SeqExpr::Fib(e) => write!(f, "F({e})"),
            SeqExpr::Add(a, b) => write!(f, "({a} + {b})"),
            SeqExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            SeqExpr::Mul(a, b) => write!(f, "({a} * {b})"),
            SeqExpr::Div(a, b) => write!(f, "({a} / {b})"),
            SeqExpr::Pow(a, b) => write!(f, "{a}^{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((st, Tok::Int(s[st..i].parse().unwrap())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((st, Tok::Ident(s[st..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
    field: &'a NumberField,
    bindings: &'a [(&'a str, FieldElement)],
}

impl Parser<'_> {
    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |t| t.0)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.i += 1;
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn expr(&mut self) -> Result<SeqExpr> {
        let mut lhs = self.term()?;
        while let Some(Tok::Sym(c @ ('+' | '-'))) = self.peek().cloned() {
            self.i += 1;
            let rhs = self.term()?;
            lhs = if c == '+' { SeqExpr::Add(lhs.into(), rhs.into()) } else { SeqExpr::Sub(lhs.into(), rhs.into()) };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<SeqExpr> {
        let mut lhs = self.factor()?;
        while let Some(Tok::Sym(c @ ('*' | '/'))) = self.peek().cloned() {
            self.i += 1;
            let rhs = self.factor()?;
            lhs = if c == '*' { SeqExpr::Mul(lhs.into(), rhs.into()) } else { SeqExpr::Div(lhs.into(), rhs.into()) };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<SeqExpr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Sym('^')) {
            self.i += 1;
            let e = self.atom()?;
            return Ok(SeqExpr::Pow(base.into(), e.into()));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<SeqExpr> {
        let Some(tok) = self.peek().cloned() else { return self.err("expected an expression") };
        self.i += 1;
        match tok {
            Tok::Int(v) => Ok(SeqExpr::Int(v)),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "n" => Ok(SeqExpr::N),
                "F" => {
                    self.expect('(')?;
                    let e = self.expr()?;
                    self.expect(')')?;
                    Ok(SeqExpr::Fib(e.into()))
                }
                "phi" => {
                    let phi = self.field.phi()?.ok_or_else(|| Error::UndefinedSymbol("phi".into()))?;
                    Ok(SeqExpr::Const(name, phi))
                }
                "phibar" => {
                    let phi = self.field.phi()?.ok_or_else(|| Error::UndefinedSymbol("phibar".into()))?;
                    Ok(SeqExpr::Const(name, self.field.one() - &phi))
                }
                "sqrt" => {
                    self.expect('(')?;
                    let Some(Tok::Int(k)) = self.peek().cloned() else { return self.err("expected an integer") };
                    self.i += 1;
                    self.expect(')')?;
                    let r = self.field.sqrt_int(&k)?.ok_or_else(|| Error::UndefinedSymbol(format!("sqrt({k})")))?;
                    Ok(SeqExpr::Const(format!("sqrt({k})"), r))
                }
                other => match self.bindings.iter().find(|(b, _)| *b == other) {
                    Some((_, v)) => Ok(SeqExpr::Const(name.clone(), v.clone())),
                    None if other == "theta" => Ok(SeqExpr::Const(name, self.field.generator())),
                    None => Err(Error::UndefinedSymbol(name)),
                },
            },
            Tok::Sym(c) => {
                self.i -= 1;
                self.err(format!("unexpected '{c}'"))
            }
        }
    }
}

/// Parse a sequence definition against `field`.
pub fn parse_seq(dsl: &str, field: &NumberField) -> Result<SeqExpr> {
    parse_seq_with(dsl, field, &[])
}

/// Parse with extra named constants.
pub fn parse_seq_with(dsl: &str, field: &NumberField, bindings: &[(&str, FieldElement)]) -> Result<SeqExpr> {
    let toks = lex(dsl)?;
    let mut p = Parser { toks, i: 0, end: dsl.len(), field, bindings };
    let e = p.expr()?;
    if p.i < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

#[derive(Clone, Debug)]
enum Val {
    Rat(BigRat),
    Elem(FieldElement),
}

impl Val {
    fn into_elem(self, k: &NumberField) -> FieldElement {
        match self {
            Val::Rat(r) => k.from_rat(r),
            Val::Elem(e) => e,
        }
    }
}

fn nonneg_int(v: &Val, what: &str) -> Result<BigInt> {
    let r = match v {
        Val::Rat(r) => Some(r.clone()),
        Val::Elem(e) => e.as_rational(),
    };
    match r {
        Some(r) if r.is_integer() && !r.is_negative() => Ok(r.to_integer()),
        _ => Err(Error::Eval(format!("{what} must be a nonnegative integer"))),
    }
}

fn small_index(k: &BigInt, what: &str) -> Result<u64> {
    k.to_u64().ok_or_else(|| Error::Eval(format!("{what} {k} is too large")))
}

/// `F_k θ0 + F_{k-1}` for `θ0` a root of `X² − X − 1`.
fn golden_power(root: &FieldElement, k: u64) -> FieldElement {
    let (fk, fk1) = (fib(k), if k == 0 { BigInt::one() } else { fib(k - 1) });
    root * &root.field().from_int(fk) + root.field().from_int(fk1)
}

fn is_golden_root(x: &FieldElement) -> bool {
    let k = x.field();
    !x.is_zero() && (x * x) == (x + &k.one())
}

impl SeqExpr {
    /// Exact value at index `n`.
    pub fn eval(&self, n: u64, field: &NumberField) -> Result<FieldElement> {
        Ok(self.eval_val(n, field)?.into_elem(field))
    }

    fn eval_val(&self, n: u64, k: &NumberField) -> Result<Val> {
        Ok(match self {
            SeqExpr::Int(i) => Val::Rat(BigRat::from_integer(i.clone())),
            SeqExpr::N => Val::Rat(BigRat::from_integer(n.into())),
            SeqExpr::Const(_, e) => match e.as_rational() {
                Some(r) => Val::Rat(r),
                None => Val::Elem(e.clone()),
            },
            SeqExpr::Fib(e) => {
                let m = nonneg_int(&e.eval_val(n, k)?, "F argument")?;
                Val::Rat(BigRat::from_integer(fib(small_index(&m, "F argument")?)))
            }
            SeqExpr::Add(a, b) => match (a.eval_val(n, k)?, b.eval_val(n, k)?) {
                (Val::Rat(x), Val::Rat(y)) => Val::Rat(x + y),
                (x, y) => Val::Elem(x.into_elem(k) + y.into_elem(k)),
            },
            SeqExpr::Sub(a, b) => match (a.eval_val(n, k)?, b.eval_val(n, k)?) {
                (Val::Rat(x), Val::Rat(y)) => Val::Rat(x - y),
                (x, y) => Val::Elem(x.into_elem(k) - y.into_elem(k)),
            },
            SeqExpr::Mul(a, b) => match (a.eval_val(n, k)?, b.eval_val(n, k)?) {
                (Val::Rat(x), Val::Rat(y)) => Val::Rat(x * y),
                (Val::Rat(x), Val::Elem(y)) | (Val::Elem(y), Val::Rat(x)) => Val::Elem(y.scale(&x)),
                (Val::Elem(x), Val::Elem(y)) => Val::Elem(x * y),
            },
            SeqExpr::Div(a, b) => match (a.eval_val(n, k)?, b.eval_val(n, k)?) {
                (_, Val::Rat(y)) if y.is_zero() => return Err(Error::DivisionByZero),
                (Val::Rat(x), Val::Rat(y)) => Val::Rat(x / y),
                (Val::Elem(x), Val::Rat(y)) => Val::Elem(x.scale(&y.recip())),
                (x, Val::Elem(y)) => Val::Elem(x.into_elem(k).checked_div(&y)?),
            },
            SeqExpr::Pow(a, b) => {
                let e = nonneg_int(&b.eval_val(n, k)?, "exponent")?;
                match a.eval_val(n, k)? {
                    Val::Rat(x) => {
                        let ee = e.to_usize().ok_or_else(|| Error::Eval("exponent too large".into()))?;
                        Val::Rat(num_traits::pow(x, ee))
                    }
                    Val::Elem(x) => {
                        let ee = small_index(&e, "exponent")?;
                        if ee > 64 && is_golden_root(&x) {
                            Val::Elem(golden_power(&x, ee))
                        } else {
                            Val::Elem(x.pow_u(&e))
                        }
                    }
                }
            }
        })
    }

    /// Enclosure of the value at index `n` under the distinguished embedding, without
    /// forming huge exact intermediates.
    pub fn eval_interval(&self, n: u64, prec: Precision) -> Result<IntervalComplex> {
        let w = prec.extra(64);
        Ok(match self.iv(n, w)? {
            IVal::Exact(r) => IntervalComplex::from_rat(&r, w),
            IVal::Approx(z) => z,
        })
    }

    fn iv(&self, n: u64, w: Precision) -> Result<IVal> {
        Ok(match self {
            SeqExpr::Int(i) => IVal::Exact(BigRat::from_integer(i.clone())),
            SeqExpr::N => IVal::Exact(BigRat::from_integer(n.into())),
            SeqExpr::Const(_, e) => match e.as_rational() {
                Some(r) => IVal::Exact(r),
                None => IVal::Approx(e.value(w)?),
            },
            SeqExpr::Fib(e) => {
                let m = e.iv(n, w)?.exact_index("F argument")?;
                if m <= EXACT_FIB_LIMIT {
                    IVal::Exact(BigRat::from_integer(fib(m)))
                } else {
                    IVal::Approx(IntervalComplex::real(binet(m, w)?))
                }
            }
            SeqExpr::Add(a, b) => IVal::combine(a.iv(n, w)?, b.iv(n, w)?, w, |x, y| x + y, |x, y, p| x.add(y, p)),
            SeqExpr::Sub(a, b) => IVal::combine(a.iv(n, w)?, b.iv(n, w)?, w, |x, y| x - y, |x, y, p| x.sub(y, p)),
            SeqExpr::Mul(a, b) => IVal::combine(a.iv(n, w)?, b.iv(n, w)?, w, |x, y| x * y, |x, y, p| x.mul(y, p)),
            SeqExpr::Div(a, b) => {
                let (x, y) = (a.iv(n, w)?, b.iv(n, w)?);
                match (x, y) {
                    (_, IVal::Exact(y)) if y.is_zero() => return Err(Error::DivisionByZero),
                    (IVal::Exact(x), IVal::Exact(y)) => IVal::Exact(x / y).settle(w),
                    (x, y) => IVal::Approx(x.approx(w).div(&y.approx(w), w)?),
                }
            }
            SeqExpr::Pow(a, b) => {
                let e = b.iv(n, w)?.exact_index("exponent")?;
                match a.iv(n, w)? {
                    IVal::Exact(x) => {
                        let bits = x.numer().bits().max(x.denom().bits());
                        if bits.saturating_mul(e) <= EXACT_BITS_LIMIT {
                            IVal::Exact(num_traits::pow(x, e as usize))
                        } else {
                            IVal::Approx(IntervalComplex::real(real_pow(&IntervalReal::from_rat(&x, w), e, w)?))
                        }
                    }
                    IVal::Approx(z) => {
                        if z.is_real() {
                            IVal::Approx(IntervalComplex::real(real_pow(&z.re, e, w)?))
                        } else if e <= 1 << 16 {
                            IVal::Approx(z.powi(e, w))
                        } else {
                            return Err(Error::Eval("large power of a non-real value".into()));
                        }
                    }
                }
            }
        })
    }
}

/// `x^e` for a real enclosure, through `2^{e·log₂|x|}` when `e` is large.
fn real_pow(x: &IntervalReal, e: u64, w: Precision) -> Result<IntervalReal> {
    if e <= 64 || x.contains_zero() {
        return Ok(x.powi(e, w));
    }
    let guard = w.extra(128 - e.leading_zeros());
    let mag = x.abs().log2(guard)?.mul(&IntervalReal::from_bigint(&e.into()), guard).exp2(guard);
    Ok(if x.is_negative() && e % 2 == 1 { mag.neg() } else { mag }.round(w))
}

/// `F_m` for large `m` from `φ^m/√5` with error at most `1/√5`.
fn binet(m: u64, w: Precision) -> Result<IntervalReal> {
    let g = w.extra(128 - m.leading_zeros());
    let five = IntervalReal::from_int(5);
    let s5 = five.sqrt(g)?;
    let phi = s5.add(&IntervalReal::one(), g).mul_2exp(-1);
    let pm = real_pow(&phi, m, g)?;
    let err = s5.recip(g)?;
    let lo = pm.sub(&err, g).div(&s5, g)?;
    let hi = pm.add(&err, g).div(&s5, g)?;
    Ok(IntervalReal::new(lo.lo().clone(), hi.hi().clone()).round(w))
}

enum IVal {
    Exact(BigRat),
    Approx(IntervalComplex),
}

impl IVal {
    fn approx(&self, w: Precision) -> IntervalComplex {
        match self {
            IVal::Exact(r) => IntervalComplex::from_rat(r, w),
            IVal::Approx(z) => z.clone(),
        }
    }

    fn settle(self, w: Precision) -> IVal {
        match self {
            IVal::Exact(r) if r.numer().bits().max(r.denom().bits()) > EXACT_BITS_LIMIT => {
                IVal::Approx(IntervalComplex::from_rat(&r, w))
            }
            v => v,
        }
    }

    fn exact_index(self, what: &str) -> Result<u64> {
        match self {
            IVal::Exact(r) if r.is_integer() && !r.is_negative() => small_index(&r.to_integer(), what),
            _ => Err(Error::Eval(format!("{what} must be a nonnegative integer"))),
        }
    }

    fn combine(
        x: IVal,
        y: IVal,
        w: Precision,
        exact: impl Fn(BigRat, BigRat) -> BigRat,
        approx: impl Fn(&IntervalComplex, &IntervalComplex, Precision) -> IntervalComplex,
    ) -> IVal {
        match (x, y) {
            (IVal::Exact(a), IVal::Exact(b)) => IVal::Exact(exact(a, b)).settle(w),
            (a, b) => IVal::Approx(approx(&a.approx(w), &b.approx(w), w)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::rat;

    #[test]
    fn parse_and_evaluate() {
        let k = NumberField::golden();
        let e = parse_seq("F(9^n) * F(9^n + 1)", &k).unwrap();
        assert_eq!(e.eval(1, &k).unwrap(), k.from_int(1870));
        let p = parse_seq("phi^(2*14^n)", &k).unwrap();
        assert_eq!(p.eval(1, &k).unwrap().coords(), vec![rat(196418), rat(317811)]);
    }

    #[test]
    fn parse_errors() {
        let k = NumberField::golden();
        assert_eq!(parse_seq("F(", &k).unwrap_err(), Error::Parse { pos: 2, msg: "expected an expression".into() });
        assert!(matches!(parse_seq("1 + * 2", &k), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_seq("2 $", &k), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_seq("(1", &k), Err(Error::Parse { pos: 2, .. })));
        assert_eq!(parse_seq("y + 1", &k), Err(Error::UndefinedSymbol("y".into())));
        assert_eq!(parse_seq("sqrt(3)", &k), Err(Error::UndefinedSymbol("sqrt(3)".into())));
        let q = NumberField::rationals();
        assert_eq!(parse_seq("phi", &q), Err(Error::UndefinedSymbol("phi".into())));
    }

    #[test]
    fn exponent_must_be_integer() {
        let k = NumberField::golden();
        let e = parse_seq("2^(1/2)", &k).unwrap();
        assert!(matches!(e.eval(1, &k), Err(Error::Eval(_))));
        let z = parse_seq("1/(n-1)", &k).unwrap();
        assert_eq!(z.eval(1, &k), Err(Error::DivisionByZero));
    }

    #[test]
    fn interval_matches_exact() {
        let k = NumberField::golden();
        let p = Precision::default();
        for src in ["F(9^n) * F(9^n + 1)", "phi^(2*14^n) / (F(14^n) + phi)", "n^(5^n) * phi^n", "F(7^n)/phi^(7^n)", "sqrt(5) - phibar"] {
            let e = parse_seq(src, &k).unwrap();
            for n in 1..=2 {
                let exact = e.eval(n, &k).unwrap().value(p).unwrap();
                let iv = e.eval_interval(n, p).unwrap();
                assert!(iv.overlaps(&exact), "{src} at {n}");
            }
        }
    }

    #[test]
    fn large_terms_stay_approximate() {
        let k = NumberField::golden();
        let e = parse_seq("F(14^n) + phi", &k).unwrap();
        let v = e.eval_interval(5, Precision::default()).unwrap();
        let l = v.re.log2(Precision::default()).unwrap().to_f64();
        // log2 F_m ≈ m·log2 φ − log2 √5
        let want = 537824.0 * 1.618033988749895f64.log2() - 5f64.sqrt().log2();
        assert!((l - want).abs() < 1e-6);
        let ex = parse_seq("F(25000)", &k).unwrap().eval(1, &k).unwrap().value(Precision::default()).unwrap();
        assert!(parse_seq("F(25000)", &k).unwrap().eval_interval(1, Precision::default()).unwrap().overlaps(&ex));
    }
}
