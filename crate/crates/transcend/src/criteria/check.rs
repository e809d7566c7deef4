//! Per-index hypothesis checks. Every comparison is certified by interval arithmetic
//! or decided exactly; precision that runs out yields `Undecided`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{assemble_report, required_bases, CriterionParams, HypothesisOutcome, Theorem, VerificationReport};
use crate::exactmath::{certify, le, lt, IntervalComplex, IntervalReal, Precision, Verdict};
use crate::numberfield::{conjugates, denominator, integer_coords, minimal_polynomial, norms, FieldElement};
use crate::sequences::{SequenceSpec, Term, Zeta};
use crate::{BigRat, Error, Result};

/// The three earlier criteria.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalVariant {
    Erdos,
    Hancl,
    AndersenKristensen,
}

impl ClassicalVariant {
    pub fn theorem(self) -> Theorem {
        match self {
            ClassicalVariant::Erdos => Theorem::Erdos,
            ClassicalVariant::Hancl => Theorem::Hancl,
            ClassicalVariant::AndersenKristensen => Theorem::AndersenKristensen,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassicalVariant::Erdos => "erdos",
            ClassicalVariant::Hancl => "hancl",
            ClassicalVariant::AndersenKristensen => "andersen_kristensen",
        }
    }
}

impl fmt::Display for ClassicalVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassicalVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "erdos" | "1.1" => Ok(ClassicalVariant::Erdos),
            "hancl" | "1.2" => Ok(ClassicalVariant::Hancl),
            "andersen_kristensen" | "1.3" => Ok(ClassicalVariant::AndersenKristensen),
            _ => Err(Error::Invalid(format!("unknown classical criterion {s:?}"))),
        }
    }
}

/// `∏_{i=1}^{n−1} (dⁱ + d)⁻¹`.
pub fn ak_exponent(d: u32, n: u32) -> BigRat {
    let dd = BigInt::from(d);
    (1..n).fold(BigRat::one(), |acc, i| acc / BigRat::from_integer(num_traits::pow(dd.clone(), i as usize) + &dd))
}

fn iv(r: &BigRat, p: Precision) -> IntervalReal {
    IntervalReal::from_rat(r, p)
}

/// `log₂ |x|` for a nonzero rational.
fn log2_rat(r: &BigRat, p: Precision) -> Result<IntervalReal> {
    iv(&r.abs(), p).log2(p)
}

/// `e·ℓ ± max(ℓ,0)^α`: the base-2 logarithm of `|a|^e 2^{±log₂^α |a|}` given `ℓ = log₂|a|`.
fn bound_log2(l: &IntervalReal, e: &BigRat, alpha: &BigRat, plus: bool, p: Precision) -> Result<IntervalReal> {
    let t = l.mul(&iv(e, p), p);
    let corr = l.clamp_nonneg().pow_nonneg(alpha, p)?;
    Ok(if plus { t.add(&corr, p) } else { t.sub(&corr, p) })
}

/// `|v| ≤ |a|^e 2^{log₂^α |a|}` (or `<` when `strict`), for an exact rational `v`.
fn rat_below(v: &BigRat, l: &IntervalReal, e: &BigRat, alpha: &BigRat, strict: bool, sign_plus: bool, p: Precision) -> Result<Verdict> {
    if v.is_zero() {
        return Ok(Verdict::Holds);
    }
    let lhs = log2_rat(v, p)?;
    let rhs = bound_log2(l, e, alpha, sign_plus, p)?;
    Ok(if strict { lt(&lhs, &rhs) } else { le(&lhs, &rhs) })
}

/// Shared evaluation context for one family and parameter set.
struct Ctx<'a> {
    spec: &'a SequenceSpec,
    params: &'a CriterionParams,
    prec: Precision,
}

impl Ctx<'_> {
    fn a_val(&self, n: u64, p: Precision) -> Result<IntervalComplex> {
        self.spec.a.eval_interval(n, p)
    }

    fn b_val(&self, n: u64, p: Precision) -> Result<IntervalComplex> {
        self.spec.b.eval_interval(n, p)
    }

    fn log_abs_a(&self, n: u64, p: Precision) -> Result<IntervalReal> {
        self.a_val(n, p)?.abs(p).log2(p)
    }

    /// `n^{1+ε} ≤ |a_n|` (strict when asked), exactly when `a_n` is rational.
    fn lower_growth(&self, n: u64, a: &FieldElement, strict: bool) -> Result<Verdict> {
        let e1 = BigRat::one() + &self.params.epsilon;
        if let Some(r) = a.as_rational() {
            if let Some(v) = exact_power_cmp(n, &e1, &r.abs(), strict) {
                return Ok(v);
            }
        }
        certify(self.prec, |p| {
            let lhs = if n == 1 { IntervalReal::zero() } else { IntervalReal::from_int(n as i64).log2(p)?.mul(&iv(&e1, p), p) };
            let rhs = self.log_abs_a(n, p)?;
            Ok(if strict { lt(&lhs, &rhs) } else { le(&lhs, &rhs) })
        })
    }

    /// `|a_n| ≤ |a_{n+1}|`, or `<` when `strict`.
    fn monotone(&self, n: u64, a: &FieldElement, strict: bool) -> Result<Verdict> {
        let next = match self.spec.check_ceiling(n + 1) {
            Ok(()) => Some(self.spec.a.eval(n + 1, &self.spec.field)?),
            Err(Error::BeyondCeiling { .. }) => None,
            Err(e) => return Err(e),
        };
        if let Some(b) = &next {
            if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
                let (x, y) = (x.abs(), y.abs());
                return Ok(if strict { (x < y).into() } else { (x <= y).into() });
            }
            if b == a || *b == -a {
                return Ok(if strict { Verdict::Fails } else { Verdict::Holds });
            }
        }
        certify(self.prec, |p| {
            let x = self.a_val(n, p)?.abs(p);
            let y = self.a_val(n + 1, p)?.abs(p);
            Ok(if strict { lt(&x, &y) } else { le(&x, &y) })
        })
    }

    /// `|N_K(a)| ≥ |a|^{η₁} 2^{−log₂^α|a|}`.
    fn norm_lower(&self, n: u64, a: &FieldElement) -> Result<Verdict> {
        let (_, nk) = norms(a);
        certify(self.prec, |p| {
            let l = self.log_abs_a(n, p)?;
            let rhs = bound_log2(&l, &self.params.eta1, &self.params.alpha, false, p)?;
            Ok(le(&rhs, &log2_rat(&nk, p)?))
        })
    }

    /// `r |N(a/r)| ≤ |a|^{η₂} 2^{log₂^α|a|}` with `r` the gcd of the coordinates.
    fn norm_upper(&self, n: u64, a: &FieldElement) -> Result<Verdict> {
        let (_, r) = integer_coords(a, &self.spec.basis)?;
        let rq = BigRat::from_integer(r);
        let (nn, _) = norms(&a.scale(&rq.recip()));
        let lhs = &rq * nn.abs();
        certify(self.prec, |p| {
            let l = self.log_abs_a(n, p)?;
            rat_below(&lhs, &l, &self.params.eta2, &self.params.alpha, false, true, p)
        })
    }

    /// Every integer coordinate of `x` is at most `|a_n|^e 2^{log₂^α|a_n|}`.
    fn coords_below(&self, n: u64, x: &FieldElement, e: &BigRat) -> Result<Verdict> {
        let (cs, _) = integer_coords(x, &self.spec.basis)?;
        let largest = cs.iter().map(|c| c.abs()).max().unwrap_or_default();
        let v = BigRat::from_integer(largest);
        certify(self.prec, |p| {
            let l = self.log_abs_a(n, p)?;
            rat_below(&v, &l, e, &self.params.alpha, false, true, p)
        })
    }

    /// `|b_n| ≤ |a_n|^β 2^{±log₂^α|a_n|}`.
    fn b_below(&self, n: u64, b: &FieldElement, e: &BigRat, strict: bool, plus: bool) -> Result<Verdict> {
        if let Some(r) = b.as_rational() {
            return certify(self.prec, |p| {
                let l = self.log_abs_a(n, p)?;
                rat_below(&r, &l, e, &self.params.alpha, strict, plus, p)
            });
        }
        let cmp = |lhs: IntervalReal, p: Precision| -> Result<Verdict> {
            let l = self.log_abs_a(n, p)?;
            let rhs = bound_log2(&l, e, &self.params.alpha, plus, p)?;
            let lhs = lhs.log2(p)?;
            Ok(if strict { lt(&lhs, &rhs) } else { le(&lhs, &rhs) })
        };
        let v = certify(self.prec, |p| cmp(self.b_val(n, p)?.abs(p), p))?;
        if v.is_decided() {
            return Ok(v);
        }
        // a small b_n with large coordinates cancels; evaluate the exact element with
        // enough bits to cover its coordinates
        let bits = b.power_coords().iter().map(|c| c.numer().bits().max(c.denom().bits())).max().unwrap_or(0);
        let start = self.prec.bits.max(u32::try_from(bits).unwrap_or(u32::MAX / 4).saturating_add(64));
        let sized = Precision { bits: start, max_bits: self.prec.max_bits.max(start.saturating_mul(4)) };
        certify(sized, |p| cmp(b.modulus(p)?, p))
    }
}

/// Exact `n^{e} ≤ x` for rational `e ≥ 1` and `x ≥ 0`, when the integers stay small enough.
fn exact_power_cmp(n: u64, e: &BigRat, x: &BigRat, strict: bool) -> Option<Verdict> {
    let (p, q) = (e.numer(), e.denom());
    let q_us: usize = num_traits::ToPrimitive::to_usize(q)?;
    let p_us: usize = num_traits::ToPrimitive::to_usize(p)?;
    let size = (x.numer().bits() + x.denom().bits()) as usize;
    if q_us.saturating_mul(size) > 4_000_000 || p_us > 4096 {
        return None;
    }
    // n^{p/q} ≤ u/v  ⇔  n^p v^q ≤ u^q
    let lhs = num_traits::pow(BigInt::from(n), p_us) * num_traits::pow(x.denom().clone(), q_us);
    let rhs = num_traits::pow(x.numer().clone(), q_us);
    Some(if strict { (lhs < rhs).into() } else { (lhs <= rhs).into() })
}

fn positive_integer(x: &FieldElement) -> Option<BigInt> {
    x.as_rational().filter(|r| r.is_integer() && r.is_positive()).map(|r| r.to_integer())
}

fn check_range(n_range: (u64, u64)) -> Result<()> {
    if n_range.0 == 0 || n_range.0 > n_range.1 {
        return Err(Error::Invalid(format!("index range {}..{} must satisfy 1 ≤ start ≤ end", n_range.0, n_range.1)));
    }
    Ok(())
}

fn terms(spec: &SequenceSpec, n_range: (u64, u64)) -> Result<Vec<(u64, Term)>> {
    (n_range.0..=n_range.1).map(|n| Ok((n, spec.term(n)?))).collect()
}

/// Which quantity the positivity hypothesis constrains.
#[derive(Clone, Copy)]
enum Rotated {
    B,
    A,
    AOverB,
}

/// The `ζ` candidates in order: explicit ones, then `1`, `−i·ℑ(x)`, `x − φ̄`.
fn zeta_candidates(spec: &SequenceSpec, params: &CriterionParams, prec: Precision) -> Vec<Zeta> {
    if let Some(z) = params.zeta.clone().or_else(|| spec.zeta.clone()) {
        return vec![z];
    }
    let mut out = vec![Zeta::one()];
    if let Some(x) = &spec.x {
        let nonreal = x.value(prec).map(|v| !v.im.contains_zero()).unwrap_or(false);
        if nonreal {
            out.push(Zeta::NegImag(x.clone()));
        }
        if spec.field.phi().ok().flatten().is_some() {
            out.push(Zeta::MinusPhibar(x.clone()));
        }
    }
    out
}

/// `ℜ(ζ·q_n) > 0` over the range, trying each `ζ` candidate until one holds throughout.
fn positivity(ctx: &Ctx, which: Rotated, ns: &[u64], label: &str, description: &str) -> Result<(HypothesisOutcome, Option<String>)> {
    let mut fallback: Option<(HypothesisOutcome, String)> = None;
    for z in zeta_candidates(ctx.spec, ctx.params, ctx.prec) {
        let mut o = HypothesisOutcome::new(label, description);
        for &n in ns {
            let v = certify(ctx.prec, |p| {
                let w = p.extra(16);
                let q = match which {
                    Rotated::B => ctx.b_val(n, w)?,
                    Rotated::A => ctx.a_val(n, w)?,
                    Rotated::AOverB => ctx.a_val(n, w)?.div(&ctx.b_val(n, w)?, w)?,
                };
                let re = z.value(w)?.mul(&q, w).re;
                Ok(lt(&IntervalReal::zero(), &re))
            })?;
            o.verdicts.push((n, v));
        }
        let desc = z.describe();
        match o.verdict() {
            Verdict::Holds => {
                o.note = Some(format!("ζ = {desc}"));
                return Ok((o, Some(desc)));
            }
            Verdict::Undecided if fallback.is_none() => fallback = Some((o, desc)),
            _ => {}
        }
    }
    if let Some((mut o, desc)) = fallback {
        o.note = Some(format!("ζ = {desc}; not certified on every index"));
        return Ok((o, Some(desc)));
    }
    // a failure for the listed choices does not rule out every ζ
    let mut o = HypothesisOutcome::new(label, description);
    o.verdicts = ns.iter().map(|&n| (n, Verdict::Undecided)).collect();
    o.note = Some("no listed choice of ζ made the real part positive".into());
    Ok((o, None))
}

/// Per-index verdicts for one inequality.
fn outcome<F>(label: &str, description: &str, items: &[(u64, Term)], mut f: F) -> Result<HypothesisOutcome>
where
    F: FnMut(u64, &Term) -> Result<Verdict>,
{
    let mut o = HypothesisOutcome::new(label, description);
    for (n, t) in items {
        o.verdicts.push((*n, f(*n, t)?));
    }
    Ok(o)
}

/// Check every hypothesis of `params.theorem` on `n_range` (inclusive).
pub fn check_hypotheses(
    spec: &SequenceSpec,
    params: &CriterionParams,
    n_range: (u64, u64),
    prec: Precision,
) -> Result<Vec<HypothesisOutcome>> {
    Ok(check_with_zeta(spec, params, n_range, prec)?.0)
}

fn check_with_zeta(
    spec: &SequenceSpec,
    params: &CriterionParams,
    n_range: (u64, u64),
    prec: Precision,
) -> Result<(Vec<HypothesisOutcome>, Option<String>)> {
    let classical = match params.theorem {
        Theorem::Erdos => Some(ClassicalVariant::Erdos),
        Theorem::Hancl => Some(ClassicalVariant::Hancl),
        Theorem::AndersenKristensen => Some(ClassicalVariant::AndersenKristensen),
        _ => None,
    };
    if let Some(v) = classical {
        return Ok((check_classical(spec, v, params, n_range, prec)?, None));
    }
    check_range(n_range)?;
    params.validate(spec.field.degree())?;
    let items = terms(spec, n_range)?;
    let ns: Vec<u64> = items.iter().map(|(n, _)| *n).collect();
    let ctx = Ctx { spec, params, prec };
    let p = params;
    let mut out = Vec::new();
    let mut zeta = None;
    match p.theorem {
        Theorem::RationalA => {
            for (n, t) in &items {
                if positive_integer(&t.a).is_none() {
                    return Err(Error::NotRationalA(format!("a_{n} = {}", t.a)));
                }
            }
            out.push(outcome("(2)", "n^{1+ε} ≤ a_n ≤ a_{n+1}", &items, |n, t| {
                Ok(ctx.lower_growth(n, &t.a, false)?.and(ctx.monotone(n, &t.a, false)?))
            })?);
            out.push(outcome("(3)", "|b_n| ≤ a_n^β 2^{log₂^α a_n}, |b_{i,n}| ≤ a_n^y 2^{log₂^α a_n}", &items, |n, t| {
                Ok(ctx.b_below(n, &t.b, &p.beta, false, true)?.and(ctx.coords_below(n, &t.b, &p.y)?))
            })?);
            let (o, z) = positivity(&ctx, Rotated::B, &ns, "(4)", "ℜ(ζ b_n) > 0")?;
            out.push(o);
            zeta = z;
        }
        Theorem::IntegerB => {
            for (n, t) in &items {
                if positive_integer(&t.b).is_none() {
                    return Err(Error::IntegralityViolated(format!("b_{n} = {} is not a positive integer", t.b)));
                }
            }
            push_norm_checks(&ctx, &items, &mut out)?;
            out.push(outcome("b_n bound", "b_n ≤ |a_n|^β 2^{log₂^α |a_n|}", &items, |n, t| {
                ctx.b_below(n, &t.b, &p.beta, false, true)
            })?);
            out.push(outcome("a_{i,n} bound", "|a_{i,n}| ≤ |a_n|^y 2^{log₂^α |a_n|}", &items, |n, t| {
                ctx.coords_below(n, &t.a, &p.y)
            })?);
            let (o, z) = positivity(&ctx, Rotated::A, &ns, "ℜ(ζ a_n) > 0", "ℜ(ζ a_n) > 0")?;
            out.push(o);
            zeta = z;
        }
        Theorem::General => {
            push_norm_checks(&ctx, &items, &mut out)?;
            out.push(outcome("(9)", "|a_{i,n}| ≤ |a_n|^{y₁} 2^{log₂^α |a_n|}, |b_{i,n}| ≤ |a_n|^{y₂} 2^{log₂^α |a_n|}", &items, |n, t| {
                Ok(ctx.coords_below(n, &t.a, &p.y1)?.and(ctx.coords_below(n, &t.b, &p.y2)?))
            })?);
            out.push(outcome("(10)", "|b_n| ≤ |a_n|^β 2^{log₂^α |a_n|}", &items, |n, t| {
                ctx.b_below(n, &t.b, &p.beta, false, true)
            })?);
            let (o, z) = positivity(&ctx, Rotated::AOverB, &ns, "(11)", "ℜ(ζ a_n/b_n) > 0")?;
            out.push(o);
            zeta = z;
        }
        Theorem::DegreeOne => {
            for (n, t) in &items {
                if positive_integer(&t.a).is_none() || positive_integer(&t.b).is_none() {
                    return Err(Error::IntegralityViolated(format!("a_{n} and b_{n} must be positive integers")));
                }
            }
            out.push(outcome("growth", "n^{1+ε} ≤ a_n ≤ a_{n+1}", &items, |n, t| {
                Ok(ctx.lower_growth(n, &t.a, false)?.and(ctx.monotone(n, &t.a, false)?))
            })?);
            out.push(outcome("(47)", "b_n ≤ a_n^β 2^{log₂^α a_n}", &items, |n, t| {
                ctx.b_below(n, &t.b, &p.beta, false, true)
            })?);
        }
        Theorem::Erdos | Theorem::Hancl | Theorem::AndersenKristensen => unreachable!(),
    }
    Ok((out, zeta))
}

/// The growth and norm inequalities shared by the two number-field criteria.
fn push_norm_checks(ctx: &Ctx, items: &[(u64, Term)], out: &mut Vec<HypothesisOutcome>) -> Result<()> {
    out.push(outcome("(6)", "n^{1+ε} ≤ |a_n| ≤ |a_{n+1}|", items, |n, t| {
        Ok(ctx.lower_growth(n, &t.a, false)?.and(ctx.monotone(n, &t.a, false)?))
    })?);
    out.push(outcome("(7)", "|N_K(a_n)| ≥ |a_n|^{η₁} 2^{−log₂^α |a_n|}", items, |n, t| ctx.norm_lower(n, &t.a))?);
    out.push(outcome("(8)", "r_n |N(a_n/r_n)| ≤ |a_n|^{η₂} 2^{log₂^α |a_n|}", items, |n, t| ctx.norm_upper(n, &t.a))?);
    Ok(())
}

/// Hypotheses of the integer-sequence, rational-sequence and algebraic-integer criteria.
pub fn check_classical(
    spec: &SequenceSpec,
    variant: ClassicalVariant,
    params: &CriterionParams,
    n_range: (u64, u64),
    prec: Precision,
) -> Result<Vec<HypothesisOutcome>> {
    check_range(n_range)?;
    let mut params = params.clone();
    params.theorem = variant.theorem();
    params.validate(spec.field.degree())?;
    let items = terms(spec, n_range)?;
    let ctx = Ctx { spec, params: &params, prec };
    let mut out = Vec::new();
    match variant {
        ClassicalVariant::Erdos => {
            for (n, t) in &items {
                if positive_integer(&t.a).is_none() || !t.b.is_one() {
                    return Err(Error::PrecondViolated(format!("needs positive integers a_n and b_n = 1 (n = {n})")));
                }
            }
            out.push(outcome("growth", "a_n ≥ n^{1+ε}", &items, |n, t| ctx.lower_growth(n, &t.a, false))?);
            out.push(outcome("increasing", "a_n < a_{n+1}", &items, |n, t| ctx.monotone(n, &t.a, true))?);
        }
        ClassicalVariant::Hancl => {
            for (n, t) in &items {
                if positive_integer(&t.a).is_none() || positive_integer(&t.b).is_none() {
                    return Err(Error::IntegralityViolated(format!("a_{n} and b_{n} must be positive integers")));
                }
            }
            out.push(outcome("growth", "n^{1+ε} < a_n ≤ a_{n+1}", &items, |n, t| {
                Ok(ctx.lower_growth(n, &t.a, true)?.and(ctx.monotone(n, &t.a, false)?))
            })?);
            let e = &params.epsilon / (BigRat::one() + &params.epsilon);
            out.push(outcome("(1)", "b_n < a_n^{ε/(1+ε)} 2^{−log₂^α a_n}", &items, |n, t| {
                ctx.b_below(n, &t.b, &e, true, false)
            })?);
        }
        ClassicalVariant::AndersenKristensen => {
            out.push(outcome("integral", "a_n is an algebraic integer", &items, |_, t| {
                Ok(denominator(&t.a).is_one().into())
            })?);
            out.push(outcome("house", "n^{1+ε} ≤ house(a_n) = |a_n| ≤ |a_{n+1}|", &items, |n, t| {
                let h = house_is_modulus(&t.a, prec)?;
                Ok(h.and(ctx.lower_growth(n, &t.a, false)?).and(ctx.monotone(n, &t.a, false)?))
            })?);
            let ns: Vec<u64> = items.iter().map(|(n, _)| *n).collect();
            let mut re = HypothesisOutcome::new("positivity", "ℜ(a_n) > 0 for all n, or ℑ(a_n) > 0 for all n");
            let mut im = re.clone();
            for &n in &ns {
                let sign = |take_re: bool| {
                    certify(prec, |p| {
                        let v = ctx.a_val(n, p)?;
                        Ok(lt(&IntervalReal::zero(), if take_re { &v.re } else { &v.im }))
                    })
                };
                re.verdicts.push((n, sign(true)?));
                im.verdicts.push((n, sign(false)?));
            }
            let pick = if re.verdict() == Verdict::Holds || im.verdict() == Verdict::Fails { re } else { im };
            out.push(pick);
            let d = spec.field.degree() as u32;
            let mut note = HypothesisOutcome::new("exponent", "∏_{i=1}^{n−1} (dⁱ+d)⁻¹");
            note.note = Some(format!("exponent at n = {}: {}", n_range.1, ak_exponent(d, n_range.1 as u32)));
            note.verdicts = ns.iter().map(|&n| (n, Verdict::Holds)).collect();
            out.push(note);
        }
    }
    Ok(out)
}

/// Certify that no conjugate of `a` exceeds it in modulus. Conjugates equal to `±a` or
/// `±ā` are recognised exactly; the rest are separated by interval comparison.
fn house_is_modulus(a: &FieldElement, prec: Precision) -> Result<Verdict> {
    // −a is a conjugate exactly when it shares the minimal polynomial of a
    let neg_is_root = minimal_polynomial(&-a) == minimal_polynomial(a);
    certify(prec, |p| {
        let roots = conjugates(a, p)?;
        let v = a.value(p)?;
        let mut same: Vec<usize> = Vec::new();
        let cands = if neg_is_root { vec![v.clone(), v.conj(), v.neg(), v.conj().neg()] } else { vec![v.clone(), v.conj()] };
        for w in &cands {
            let hits: Vec<usize> = (0..roots.len()).filter(|&i| roots[i].overlaps(w)).collect();
            if hits.len() != 1 {
                return Ok(Verdict::Undecided);
            }
            same.push(hits[0]);
        }
        let m = v.abs(p);
        let mut verdict = Verdict::Holds;
        for (i, r) in roots.iter().enumerate() {
            if same.contains(&i) {
                continue;
            }
            verdict = verdict.and(le(&r.abs(p), &m));
        }
        Ok(verdict)
    })
}

/// Run the hypothesis checks, compute the bases and growth verdicts, and fold them into a report.
pub fn verify(
    spec: &SequenceSpec,
    params: &CriterionParams,
    n_range: (u64, u64),
    prec: Precision,
) -> Result<VerificationReport> {
    let d = spec.field.degree();
    let (outcomes, zeta) = check_with_zeta(spec, params, n_range, prec)?;
    let bases = required_bases(params.theorem, d, params)?;
    let mut r = assemble_report(params.theorem, outcomes, bases, &spec.profile);
    r.sequence = spec.name.clone();
    r.n_range = n_range;
    r.zeta = zeta;
    r.index_convention = spec.convention;
    r.precision_bits = prec.bits;
    r.delta = params.delta.clone();
    Ok(r)
}
