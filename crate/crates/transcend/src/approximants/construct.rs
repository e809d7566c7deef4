//! The `(q, p₁, …, p_d)` approximants: the rational-`a_n` construction with its checks
//! (14) and (15), and the Galois construction with `κ`, `r_n`, `ã_n` and checks (20)–(22).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::{partial_sum, tail_enclosure};
use crate::criteria::CriterionParams;
use crate::exactmath::{certify, le, lt, Dyadic, IntervalReal, Precision, Round, Verdict};
use crate::numberfield::{
    denominator, house, house_linear_constant, integer_coords, mahler_and_height, norms, rational_coords,
    Automorphism, FieldElement,
};
use crate::sequences::SequenceSpec;
use crate::{BigRat, Error, Result};

/// Largest number of Galois products enumerated for `κ`.
const KAPPA_LIMIT: usize = 200_000;

/// One approximant `(p, q)` at truncation `N`, with its certified error and checks.
#[derive(Clone, Debug, PartialEq)]
pub struct Approximant {
    pub n: u64,
    pub q: BigInt,
    pub p: Vec<BigInt>,
    /// enclosure of `|Σ − Σ p_i x_i / q|`
    pub err: IntervalReal,
    pub checks: BTreeMap<String, Verdict>,
    pub kappa: Option<BigInt>,
    pub a_tilde: Vec<BigInt>,
    pub r: Vec<BigInt>,
    /// `log₂` of the smallest power-of-two `E` satisfying (15) at this `N`
    pub min_e_log2: Option<i64>,
}

fn dyadic_text(d: &Dyadic, dir: Round) -> String {
    d.to_sci_string(20, dir)
}

impl Approximant {
    pub fn to_json(&self) -> Value {
        let checks: serde_json::Map<String, Value> =
            self.checks.iter().map(|(k, v)| (k.clone(), Value::String(v.as_str().into()))).collect();
        let mut v = json!({
            "N": self.n,
            "q": self.q.to_string(),
            "p": self.p.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "err": {"lo": dyadic_text(self.err.lo(), Round::Down), "hi": dyadic_text(self.err.hi(), Round::Up)},
            "checks": checks,
        });
        if let Some(k) = &self.kappa {
            v["kappa"] = Value::String(k.to_string());
            v["a_tilde"] = self.a_tilde.iter().map(|x| Value::String(x.to_string())).collect();
            v["r"] = self.r.iter().map(|x| Value::String(x.to_string())).collect();
        }
        if let Some(e) = self.min_e_log2 {
            v["min_E_log2"] = json!(e);
        }
        v
    }

    /// Every check certified to hold.
    pub fn all_hold(&self) -> bool {
        self.checks.values().all(|v| *v == Verdict::Holds)
    }
}

/// Caller-supplied constants for (14) and (15).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalParams {
    pub m: BigRat,
    pub e: BigRat,
    /// one exponent per basis element, or a single one for all
    pub y: Vec<BigRat>,
    pub alpha: BigRat,
}

fn theta(alpha: &BigRat) -> BigRat {
    (BigRat::one() + alpha * BigRat::from_integer(2.into())) / BigRat::from_integer(3.into())
}

fn iv(r: &BigRat, p: Precision) -> IntervalReal {
    IntervalReal::from_rat(r, p)
}

fn log2_int(x: &BigInt, p: Precision) -> Result<IntervalReal> {
    IntervalReal::from_bigint(&x.abs()).log2(p)
}

/// Exact check that `q s_N = Σ p_i x_i`.
fn assert_identity(qs: &FieldElement, p: &[BigInt], basis: &[FieldElement]) -> Result<()> {
    let mut acc = qs.field().zero();
    for (pi, xi) in p.iter().zip(basis) {
        acc = &acc + &xi.scale(&BigRat::from_integer(pi.clone()));
    }
    if &acc != qs {
        return Err(Error::IntegralityViolated("q·s_N differs from Σ p_i x_i".into()));
    }
    Ok(())
}

fn integer_vector(v: Vec<BigRat>, what: &str) -> Result<Vec<BigInt>> {
    v.into_iter()
        .enumerate()
        .map(|(i, c)| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::IntegralityViolated(format!("{what}_{} = {c} is not an integer", i + 1)))
            }
        })
        .collect()
}

/// `log₂|err| + t < 0` certified from the upper end of `err`, where `t(p)` is the
/// log of the remaining factors. Vanishing error holds trivially.
fn error_below<F>(err: &IntervalReal, prec: Precision, t: F) -> Result<Verdict>
where
    F: Fn(Precision) -> Result<IntervalReal>,
{
    if !err.hi().is_positive() {
        return Ok(Verdict::Holds);
    }
    certify(prec, |p| {
        let l = IntervalReal::point(err.hi().clone()).log2(p)?;
        Ok(lt(&l.add(&t(p)?, p), &IntervalReal::zero()))
    })
}

/// Approximants for families with positive rational integer `a_n`:
/// `q = L ∏_{n<N} a_n c_n` with `L` clearing the coordinate denominators of the `b_n`,
/// and `p_i` the coordinates of `q s_N`.
pub fn build_q_p_rational(spec: &SequenceSpec, n: u64, rp: &RationalParams, prec: Precision) -> Result<Approximant> {
    if n == 0 {
        return Err(Error::Invalid("N must be at least 1".into()));
    }
    let basis = &spec.basis;
    let d = basis.len();
    let ys: Vec<BigRat> = match rp.y.len() {
        1 => vec![rp.y[0].clone(); d],
        l if l == d => rp.y.clone(),
        l => return Err(Error::Invalid(format!("expected 1 or {d} exponents y_i, got {l}"))),
    };
    if !rp.e.is_positive() {
        return Err(Error::ConstraintViolated("E must be positive".into()));
    }
    let mut q = BigInt::one();
    let mut scale = BigInt::one();
    for m in 1..n {
        let t = spec.term(m)?;
        let a = match t.a.as_rational() {
            Some(r) if r.is_integer() && r.is_positive() => r.to_integer(),
            _ => return Err(Error::NotRationalA(format!("a_{m} = {}", t.a))),
        };
        q *= a * &t.c;
        for c in rational_coords(&t.b, basis)? {
            scale = scale.lcm(c.denom());
        }
    }
    q *= scale;
    let qs = partial_sum(spec, n)?.scale(&BigRat::from_integer(q.clone()));
    let coords = rational_coords(&qs, basis)?;
    if coords.iter().any(|c| !c.is_integer()) {
        return Err(Error::NotIntegerCoords);
    }
    let p: Vec<BigInt> = coords.into_iter().map(|c| c.to_integer()).collect();
    assert_identity(&qs, &p, basis)?;

    let err = tail_enclosure(spec, n, prec)?.abs(prec);
    let th = theta(&rp.alpha);
    let lq = |w: Precision| log2_int(&q, w);
    let mut checks = BTreeMap::new();
    let v14 = if q.is_one() {
        Verdict::Holds
    } else {
        error_below(&err, prec, |w| {
            let l = lq(w)?;
            let ll = l.log2(w)?.mul_2exp(1);
            let spread = l.pow_nonneg(&th, w)?.mul(&IntervalReal::from_int(d as i64), w);
            Ok(ll.add(&spread, w).add(&l.mul(&iv(&rp.m, w), w), w))
        })?
    };
    checks.insert("(14)".to_string(), v14);
    let mut v15 = Verdict::Holds;
    let mut need: Option<i64> = None;
    for (pi, yi) in p.iter().zip(&ys) {
        if pi.is_zero() {
            continue;
        }
        let slack = |w: Precision| -> Result<IntervalReal> {
            let l = lq(w)?;
            let allowed = l.clamp_nonneg().pow_nonneg(&th, w)?.add(&l.mul(&iv(yi, w), w), w);
            Ok(log2_int(pi, w)?.sub(&allowed, w))
        };
        v15 = v15.and(certify(prec, |w| Ok(le(&slack(w)?, &iv(&rp.e, w).log2(w)?)))?);
        let k = slack(prec)?.hi().ceil_int().to_i64().unwrap_or(i64::MAX);
        need = Some(need.map_or(k, |x| x.max(k)));
    }
    checks.insert("(15)".to_string(), v15);
    Ok(Approximant { n, q, p, err, checks, kappa: None, a_tilde: vec![], r: vec![], min_e_log2: need })
}

/// Smallest positive integer clearing the coordinate denominators of every product of
/// `d'` Galois images of basis elements, for each `d' | d`.
fn galois_kappa(basis: &[FieldElement], auts: &[Automorphism]) -> Result<BigInt> {
    let d = basis.len();
    let images: Vec<FieldElement> = auts.iter().flat_map(|g| basis.iter().map(move |x| g.apply(x))).collect();
    let mut kappa = BigInt::one();
    for dp in (1..=d).filter(|k| d.is_multiple_of(*k)) {
        let count = multiset_count(images.len(), dp);
        if count > KAPPA_LIMIT {
            return Err(Error::Invalid(format!("κ needs {count} Galois products; the limit is {KAPPA_LIMIT}")));
        }
        let one = basis[0].field().one();
        let mut stack = vec![(0usize, 0usize, one)];
        while let Some((start, depth, prod)) = stack.pop() {
            if depth == dp {
                for c in rational_coords(&prod, basis)? {
                    kappa = kappa.lcm(c.denom());
                }
                continue;
            }
            for (i, img) in images.iter().enumerate().skip(start) {
                stack.push((i, depth + 1, &prod * img));
            }
        }
    }
    Ok(kappa)
}

/// Number of size-`k` multisets from `n` items, saturating.
fn multiset_count(n: usize, k: usize) -> usize {
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c.saturating_mul(n as u128 + i) / (i + 1);
    }
    c.min(usize::MAX as u128) as usize
}

/// Smallest `|ã|` with `|ã|·|P| ≥ |A|^{η₂}`, returned with the sign of `P`.
fn a_tilde(big_a: &FieldElement, eta2: &BigRat, pr: &BigRat, prec: Precision) -> Result<BigInt> {
    let sign = if pr.is_negative() { -BigInt::one() } else { BigInt::one() };
    if eta2.is_integer() {
        if let Some(e) = eta2.to_integer().to_i64() {
            if let Some(v) = big_a.pow(e)?.as_rational() {
                return Ok(sign * (v.abs() / pr.abs()).ceil().to_integer());
            }
        }
    }
    let target = |w: Precision| -> Result<IntervalReal> {
        big_a.modulus(w)?.pow_rat(eta2, w)?.div(&iv(&pr.abs(), w), w)
    };
    let coarse = Precision { bits: 64, max_bits: 64 };
    let size = target(coarse)?.hi().top().unwrap_or(0).max(0) as u32;
    let start = prec.bits.max(size + 96);
    let cap = prec.max_bits.max(start.saturating_mul(8));
    let mut w = Precision { bits: start, max_bits: cap };
    loop {
        let x = target(w)?;
        let (lo, hi) = (x.lo().ceil_int(), x.hi().ceil_int());
        if lo == hi {
            return Ok(sign * lo);
        }
        w = w.doubled().ok_or(Error::PrecisionExhausted(w.bits))?;
    }
}

/// Approximants for families over a Galois field:
/// `q_N = κ ∏_{n<N} ã_n r_n 𝒩(A_n/r_n)` and `p_{i,N} = π_i(q_N s_N)` with `A_n = a_n c_n`.
/// Integrality of `q_N` and every `p_{i,N}` is asserted exactly.
pub fn build_q_p_general(spec: &SequenceSpec, n: u64, params: &CriterionParams, prec: Precision) -> Result<Approximant> {
    if n == 0 {
        return Err(Error::Invalid("N must be at least 1".into()));
    }
    let k = &spec.field;
    let auts = k.automorphisms().ok_or(Error::NotGalois)?;
    let basis = &spec.basis;
    let d = basis.len();
    if d != k.degree() {
        return Err(Error::Invalid(format!("the basis has {d} elements but the field has degree {}", k.degree())));
    }
    let kappa = galois_kappa(basis, &auts)?;
    let alpha = &params.alpha;
    let eta2 = &params.eta2;
    let mut q = BigRat::from_integer(kappa.clone());
    let mut tildes = Vec::new();
    let mut rs = Vec::new();
    let mut v22 = Verdict::Holds;
    for m in 1..n {
        let t = spec.term(m)?;
        let big_a = t.a.scale(&BigRat::from_integer(t.c.clone()));
        let (_, r) = integer_coords(&big_a, basis)?;
        let (nrm, _) = norms(&big_a.scale(&BigRat::new(BigInt::one(), r.clone())));
        let pr = BigRat::from_integer(r.clone()) * nrm;
        let at = a_tilde(&big_a, eta2, &pr, prec)?;
        let prod = BigRat::from_integer(at.clone()) * &pr;
        // ã·|P| exceeds |A|^{η₂} by less than |P|, so the comparison needs about log₂|A| bits
        let coarse = Precision { bits: 64, max_bits: 64 };
        let size = big_a.modulus(coarse)?.hi().top().unwrap_or(0).max(0) as u32;
        let start = prec.bits.max(size.saturating_mul(eta2.ceil().to_integer().to_u32().unwrap_or(1).max(1)) + 96);
        let sized = Precision { bits: start, max_bits: prec.max_bits.max(start.saturating_mul(8)) };
        let lower = certify(sized, |w| {
            let l = big_a.modulus(w)?.log2(w)?.mul(&iv(eta2, w), w);
            Ok(le(&l, &iv(&prod, w).log2(w)?))
        })?;
        let upper = certify(prec, |w| {
            let l = big_a.modulus(w)?.log2(w)?;
            let bound = l.mul(&iv(eta2, w), w).add(&l.clamp_nonneg().pow_nonneg(alpha, w)?, w).add(&IntervalReal::one(), w);
            Ok(le(&iv(&prod, w).log2(w)?, &bound))
        })?;
        v22 = v22.and(lower).and(upper);
        q *= prod;
        tildes.push(at);
        rs.push(r);
    }
    if !q.is_integer() || !q.is_positive() {
        return Err(Error::IntegralityViolated(format!("q_{n} = {q} is not a positive integer")));
    }
    let q = q.to_integer();
    let qs = partial_sum(spec, n)?.scale(&BigRat::from_integer(q.clone()));
    let p = integer_vector(rational_coords(&qs, basis)?, &format!("p_{{N={n}}}"))?;
    assert_identity(&qs, &p, basis)?;

    let err = tail_enclosure(spec, n, prec)?.abs(prec);
    let th = theta(alpha);
    let dr = BigRat::from_integer((d as i64).into());
    let spread = (&dr - BigRat::one()) * &params.y1 + &params.y2 - &params.eta1;
    let e21 = BigRat::one() + &spread / eta2;
    let e20 = &dr + BigRat::one() + &dr * &spread / eta2;
    let lq = |w: Precision| log2_int(&q, w);
    let mut checks = BTreeMap::new();
    let v20 = if q.is_one() {
        Verdict::Holds
    } else {
        error_below(&err, prec, |w| {
            let l = lq(w)?;
            let s = l.pow_nonneg(&th, w)?.mul(&iv(&dr, w), w);
            Ok(s.add(&l.mul(&iv(&e20, w), w), w))
        })?
    };
    checks.insert("(20)".to_string(), v20);
    let mut v21 = Verdict::Holds;
    for pi in p.iter().filter(|x| !x.is_zero()) {
        v21 = v21.and(certify(prec, |w| {
            let l = lq(w)?;
            let bound = l.clamp_nonneg().pow_nonneg(&th, w)?.add(&l.mul(&iv(&e21, w), w), w);
            Ok(le(&log2_int(pi, w)?, &bound))
        })?);
    }
    checks.insert("(21)".to_string(), v21);
    checks.insert("(22)".to_string(), v22);
    Ok(Approximant { n, q, p, err, checks, kappa: Some(kappa), a_tilde: tildes, r: rs, min_e_log2: None })
}

/// Certify `H(s_N) ≤ c ∏_{n<N} a_n · max(1, |s_N|‾) ≤ C₁ ∏_{n<N} a_n · max(1, max_i |π_i(s_N)|)`
/// with `c` the lcm of the basis denominators and `C₁ = c·max(1, C)` for the
/// house-linear constant `C` of the basis.
pub fn height_bound_sn(spec: &SequenceSpec, n: u64, prec: Precision) -> Result<Verdict> {
    let mut prod = BigInt::one();
    for m in 1..n {
        let t = spec.term(m)?;
        match t.a.as_rational() {
            Some(r) if r.is_integer() && r.is_positive() => prod *= r.to_integer(),
            _ => return Err(Error::NotRationalA(format!("a_{m} = {}", t.a))),
        }
    }
    let basis = &spec.basis;
    let c = basis.iter().fold(BigInt::one(), |acc, x| acc.lcm(&denominator(x)));
    let s = partial_sum(spec, n)?;
    let coords = rational_coords(&s, basis)?;
    let top = coords.iter().map(|x| x.abs()).fold(BigRat::one(), |m, x| if x > m { x } else { m });
    let scale = BigRat::from_integer(&c * &prod);
    certify(prec, |w| {
        let h = mahler_and_height(&s, w)?.1;
        let one = IntervalReal::one();
        let middle = house(&s, w)?.max(&one).mul(&iv(&scale, w), w);
        let c1 = house_linear_constant(basis, w)?.max(&one);
        let right = c1.mul(&iv(&(&scale * &top), w), w);
        Ok(le(&h, &middle).and(le(&middle, &right)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::Theorem;
    use crate::numberfield::{rat, NumberField};
    use crate::sequences::{builtin_example, ExampleId, ExampleOptions, GrowthProfile};

    fn prec() -> Precision {
        Precision { bits: 256, max_bits: 4096 }
    }

    fn rp() -> RationalParams {
        RationalParams { m: rat(1), e: rat(1), y: vec![rat(1)], alpha: BigRat::new(1.into(), 2.into()) }
    }

    #[test]
    fn doubly_exponential_family() {
        let s = SequenceSpec::from_dsl("f", &NumberField::rationals(), "2^(2^n)", "1", GrowthProfile::pure(2, 1.0)).unwrap();
        // 1/4 + 1/16 = 20/64
        let ap = build_q_p_rational(&s, 3, &rp(), prec()).unwrap();
        assert_eq!(ap.q, BigInt::from(64));
        assert_eq!(ap.p, vec![BigInt::from(20)]);
        let one = build_q_p_rational(&s, 1, &rp(), prec()).unwrap();
        assert_eq!((one.q, one.p), (BigInt::one(), vec![BigInt::zero()]));
    }

    #[test]
    fn two_series_rational_construction() {
        let ex = builtin_example(ExampleId::TwoSeries, &ExampleOptions::default()).unwrap();
        let ap = build_q_p_rational(&ex, 3, &rp(), prec()).unwrap();
        assert_eq!(ap.checks["(15)"], Verdict::Holds);
        assert_eq!(height_bound_sn(&ex, 3, prec()).unwrap(), Verdict::Holds);
        assert_eq!(height_bound_sn(&ex, 1, prec()).unwrap(), Verdict::Holds);
    }

    #[test]
    fn golden_power_general_construction() {
        let ex = builtin_example(ExampleId::GoldenPower, &ExampleOptions::default()).unwrap();
        let params = CriterionParams::new(Theorem::IntegerB).with_declared(&ex.exponents);
        let ap = build_q_p_general(&ex, 2, &params, prec()).unwrap();
        assert_eq!(ap.r, vec![BigInt::one()]);
        assert_eq!(ap.kappa, Some(BigInt::one()));
        // 𝒩(φ⁷) = −1, so ã_1 = −⌈φ⁷⌉ = −30
        assert_eq!(ap.a_tilde, vec![BigInt::from(-30)]);
        assert_eq!(ap.q, BigInt::from(30));
        assert_eq!(ap.checks["(22)"], Verdict::Holds);
        assert!(matches!(
            build_q_p_rational(&ex, 2, &rp(), prec()),
            Err(Error::NotRationalA(_))
        ));
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(multiset_count(4, 2), 10);
        assert_eq!(multiset_count(4, 1), 4);
    }
}
