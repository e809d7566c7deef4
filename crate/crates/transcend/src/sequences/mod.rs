//! Exact generators for Fibonacci-index and golden-power sequences, a definition
//! language, declared growth profiles and the built-in example families.

mod builtin;
mod dsl;
mod io;

pub use builtin::{builtin_example, builtin_variant, ExampleId, ExampleOptions};
pub use dsl::{parse_seq, parse_seq_with, SeqExpr};
pub use io::{ProfileSpec, SequenceFile};

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exactmath::{IntervalComplex, IntervalReal, Precision};
use crate::numberfield::{FieldElement, NumberField};
use crate::{BigRat, Error, Result};

/// Terms whose estimated size exceeds this many bits are refused.
pub const TERM_BITS_CEILING: f64 = 3.0e5;

/// `F_m` by fast doubling.
pub fn fib(m: u64) -> BigInt {
    fib_pair(m).0
}

/// `(F_m, F_{m+1})`.
pub fn fib_pair(m: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for i in (0..64 - m.leading_zeros()).rev() {
        // F_{2k} = F_k (2F_{k+1} − F_k), F_{2k+1} = F_k² + F_{k+1}²
        let c = &a * (&b * 2 - &a);
        let d = &a * &a + &b * &b;
        if (m >> i) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

/// `φ^m` as `F_m φ + F_{m−1}`; negative `m` goes through the field inverse.
pub fn phi_power(k: &NumberField, m: i64) -> Result<FieldElement> {
    let phi = k.phi()?.ok_or(Error::FieldMismatch)?;
    let e = m.unsigned_abs();
    let (fm1, fm) = if e == 0 { (BigInt::one(), BigInt::zero()) } else { fib_pair(e - 1) };
    let pos = &phi * &k.from_int(fm) + k.from_int(fm1);
    if m < 0 {
        pos.inv()
    } else {
        Ok(pos)
    }
}

/// Reading of the ambiguous subscripts `F_{9^{n+1}}` in the two-index examples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum IndexConvention {
    /// `F_{9^n}` and `F_{9^n + 1}`
    #[default]
    Adjacent,
    /// `F_{9^n}` and `F_{9^{n+1}}`
    Nested,
}

impl fmt::Display for IndexConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexConvention::Adjacent => "adjacent",
            IndexConvention::Nested => "nested",
        })
    }
}

impl std::str::FromStr for IndexConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjacent" => Ok(IndexConvention::Adjacent),
            "nested" => Ok(IndexConvention::Nested),
            _ => Err(Error::Invalid(format!("unknown index convention {s:?}"))),
        }
    }
}

/// Declared asymptotics `ln|a_n| = gⁿ(A + A_L ln n) + B n + C ln n + D + o(1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthProfile {
    pub g: BigRat,
    pub a: f64,
    pub a_l: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl GrowthProfile {
    pub fn new(g: BigRat, a: f64, a_l: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if g <= BigRat::one() {
            return Err(Error::InvalidSequence(format!("growth base must exceed 1, got {g}")));
        }
        Ok(GrowthProfile { g, a, a_l, b, c, d })
    }

    /// Doubly exponential profile `ln|a_n| ≈ A·gⁿ`.
    pub fn pure(g: i64, a: f64) -> Self {
        GrowthProfile { g: BigRat::from_integer(g.into()), a, a_l: 0.0, b: 0.0, c: 0.0, d: 0.0 }
    }

    pub fn predict_ln(&self, n: u64) -> f64 {
        let nf = n as f64;
        let g = self.g.to_f64().unwrap_or(f64::INFINITY);
        g.powf(nf) * (self.a + self.a_l * nf.ln()) + self.b * nf + self.c * nf.ln() + self.d
    }

    /// Compare against measured `ln|a_n|` on `ns`; fails above 5% relative error.
    pub fn validate(&self, measured: &[(u64, f64)]) -> Result<()> {
        for &(n, m) in measured {
            let p = self.predict_ln(n);
            if m.abs() >= 1.0 && ((p - m) / m).abs() > 0.05 {
                return Err(Error::InvalidSequence(format!(
                    "growth profile predicts ln|a_{n}| = {p:.4}, measured {m:.4}"
                )));
            }
        }
        Ok(())
    }
}

/// Exponents a family is declared to satisfy, matching the parameters used for it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeclaredExponents {
    pub beta: Option<BigRat>,
    pub y: Option<BigRat>,
    pub y1: Option<BigRat>,
    pub y2: Option<BigRat>,
    pub eta1: Option<BigRat>,
    pub eta2: Option<BigRat>,
}

/// The constant `ζ` of the positivity hypotheses.
#[derive(Clone, Debug, PartialEq)]
pub enum Zeta {
    Element(FieldElement),
    Constant { re: BigRat, im: BigRat },
    /// `−i·ℑ(x)`
    NegImag(FieldElement),
    /// `x − φ̄` with `φ̄ = (1 − √5)/2`
    MinusPhibar(FieldElement),
}

impl Zeta {
    pub fn one() -> Self {
        Zeta::Constant { re: BigRat::one(), im: BigRat::zero() }
    }

    pub fn value(&self, prec: Precision) -> Result<IntervalComplex> {
        Ok(match self {
            Zeta::Element(e) => e.value(prec)?,
            Zeta::Constant { re, im } => {
                IntervalComplex::new(IntervalReal::from_rat(re, prec), IntervalReal::from_rat(im, prec))
            }
            Zeta::NegImag(x) => IntervalComplex::new(IntervalReal::zero(), x.value(prec)?.im.neg()),
            Zeta::MinusPhibar(x) => {
                let p = prec.extra(8);
                let s5 = IntervalReal::from_int(5).sqrt(p)?;
                let phibar = IntervalReal::one().sub(&s5, p).mul_2exp(-1);
                x.value(p)?.sub(&IntervalComplex::real(phibar), p)
            }
        })
    }

    pub fn describe(&self) -> String {
        match self {
            Zeta::Element(e) => format!("{e}"),
            Zeta::Constant { re, im } if im.is_zero() => re.to_string(),
            Zeta::Constant { re, im } => format!("{re} + {im}i"),
            Zeta::NegImag(_) => "-i*Im(x)".into(),
            Zeta::MinusPhibar(_) => "x - phibar".into(),
        }
    }
}

/// Positive integer multipliers `c_n`.
#[derive(Clone, Debug, PartialEq)]
pub enum CSeq {
    /// every `c_n = 1`
    Free,
    Expr(String, SeqExpr),
}

/// One generated triple.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: BigInt,
}

/// A family `(a_n, b_n, c_n)` with its declared growth.
#[derive(Clone, Debug)]
pub struct SequenceSpec {
    pub name: String,
    pub field: NumberField,
    pub basis: Vec<FieldElement>,
    pub basis_names: Vec<String>,
    pub a_src: String,
    pub a: SeqExpr,
    pub b_src: String,
    pub b: SeqExpr,
    pub c: CSeq,
    pub profile: GrowthProfile,
    pub exponents: DeclaredExponents,
    pub zeta: Option<Zeta>,
    /// the element `x` of the two-series family, for the `ζ` recipes
    pub x: Option<FieldElement>,
    pub convention: Option<IndexConvention>,
}

impl SequenceSpec {
    /// Spec from definition strings, with the field's declared basis.
    pub fn from_dsl(name: &str, field: &NumberField, a: &str, b: &str, profile: GrowthProfile) -> Result<Self> {
        let d = field.degree();
        Ok(SequenceSpec {
            name: name.into(),
            field: field.clone(),
            basis: field.basis_elements(),
            basis_names: (1..=d).map(|i| format!("x_{i}")).collect(),
            a_src: a.into(),
            a: parse_seq(a, field)?,
            b_src: b.into(),
            b: parse_seq(b, field)?,
            c: CSeq::Free,
            profile,
            exponents: DeclaredExponents::default(),
            zeta: None,
            x: None,
            convention: None,
        })
    }

    /// Estimated `log₂` of the larger of `|a_n|` and `|b_n|`.
    pub fn size_bits(&self, n: u64) -> Result<f64> {
        let p = Precision { bits: 64, max_bits: 64 };
        let mut best = 0.0f64;
        for e in [&self.a, &self.b] {
            let v = e.eval_interval(n, p)?;
            let m = v.abs(p);
            if m.hi().is_positive() {
                best = best.max(m.hi().top().unwrap_or(0) as f64);
            }
        }
        Ok(best)
    }

    /// Refuse indices whose terms are too large to form exactly.
    pub fn check_ceiling(&self, n: u64) -> Result<()> {
        let bits = self.size_bits(n)?;
        if bits > TERM_BITS_CEILING {
            return Err(Error::BeyondCeiling { n, bits: bits as u64 });
        }
        Ok(())
    }

    pub fn c_at(&self, n: u64) -> Result<BigInt> {
        match &self.c {
            CSeq::Free => Ok(BigInt::one()),
            CSeq::Expr(_, e) => {
                let v = e.eval(n, &self.field)?.as_rational();
                match v {
                    Some(r) if r.is_integer() && r.is_positive() => Ok(r.to_integer()),
                    _ => Err(Error::InvalidSequence(format!("c_{n} is not a positive integer"))),
                }
            }
        }
    }

    /// Exact triple at index `n`.
    pub fn term(&self, n: u64) -> Result<Term> {
        self.check_ceiling(n)?;
        let a = self.a.eval(n, &self.field)?;
        let b = self.b.eval(n, &self.field)?;
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidSequence(format!("a_{n} and b_{n} must be nonzero")));
        }
        Ok(Term { a, b, c: self.c_at(n)? })
    }

    /// Enclosure of `b_n / (a_n c_n)` under the distinguished embedding, never forming huge terms.
    pub fn summand(&self, n: u64, prec: Precision) -> Result<IntervalComplex> {
        let w = prec.extra(16);
        let a = self.a.eval_interval(n, w)?;
        let b = self.b.eval_interval(n, w)?;
        let c = IntervalComplex::real(IntervalReal::from_bigint(&self.c_at(n)?));
        b.div(&a.mul(&c, w), w)
    }

    /// Enclosure of `|a_n|` under the distinguished embedding.
    pub fn abs_a(&self, n: u64, prec: Precision) -> Result<IntervalReal> {
        Ok(self.a.eval_interval(n, prec)?.abs(prec))
    }

    /// Measured `ln|a_n|` on the checkable prefix `2..` (at most `n_max`).
    pub fn measure_profile(&self, n_max: u64) -> Result<Vec<(u64, f64)>> {
        let p = Precision { bits: 64, max_bits: 64 };
        let mut out = Vec::new();
        for n in 2..=n_max {
            if self.size_bits(n)? > TERM_BITS_CEILING {
                break;
            }
            let l = self.abs_a(n, p)?.ln(p)?;
            out.push((n, l.to_f64()));
        }
        Ok(out)
    }

    /// Check the declared profile against the measured prefix.
    pub fn validate_profile(&self) -> Result<()> {
        self.profile.validate(&self.measure_profile(6)?)
    }
}

/// Guess a growth profile from measured sizes: `g` from consecutive log ratios, rounded to
/// the nearest integer when within 1%, and `A` from the last measurement.
pub fn infer_profile(spec: &SequenceSpec) -> Result<GrowthProfile> {
    let m = spec.measure_profile(6)?;
    if m.len() < 2 {
        return Err(Error::InvalidSequence("too few measurable terms to infer a growth profile".into()));
    }
    let (n1, l1) = m[m.len() - 2];
    let (n2, l2) = m[m.len() - 1];
    let ratio = (l2 / l1).powf(1.0 / (n2 - n1) as f64);
    let g = if (ratio - ratio.round()).abs() < 0.01 * ratio {
        BigRat::from_integer(BigInt::from(ratio.round() as i64))
    } else {
        BigRat::from_float(ratio).ok_or_else(|| Error::InvalidSequence("growth ratio is not finite".into()))?
    };
    let a = l2 / g.to_f64().unwrap().powf(n2 as f64);
    GrowthProfile::new(g, a, 0.0, 0.0, 0.0, 0.0)
}

/// Permutation (1-based) ordering `vals` by modulus under the distinguished embedding,
/// ties of equal modulus broken by index.
pub fn sort_elements_by_modulus(vals: &[FieldElement], prec: Precision) -> Result<Vec<usize>> {
    let mut cache: Vec<IntervalReal> = vals.iter().map(|v| v.modulus(prec)).collect::<Result<_>>()?;
    let mut order: Vec<usize> = (0..vals.len()).collect();
    // insertion sort with a fallible comparison
    for i in 1..order.len() {
        let mut j = i;
        while j > 0 {
            let (x, y) = (order[j - 1], order[j]);
            let ord = compare_modulus(vals, &mut cache, x, y, prec)?;
            if ord == Ordering::Greater {
                order.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
    }
    Ok(order.into_iter().map(|i| i + 1).collect())
}

fn compare_modulus(
    vals: &[FieldElement],
    cache: &mut [IntervalReal],
    i: usize,
    j: usize,
    prec: Precision,
) -> Result<Ordering> {
    if vals[i] == vals[j] || vals[i] == -&vals[j] {
        return Ok(i.cmp(&j));
    }
    let mut p = prec;
    loop {
        if cache[i].hi() < cache[j].lo() {
            return Ok(Ordering::Less);
        }
        if cache[i].lo() > cache[j].hi() {
            return Ok(Ordering::Greater);
        }
        p = p.doubled().ok_or(Error::PrecisionExhausted(p.bits))?;
        cache[i] = vals[i].modulus(p)?;
        cache[j] = vals[j].modulus(p)?;
    }
}

/// Permutation sorting `|a_n c_n|` for `n = 1..=count`.
pub fn sort_by_modulus(spec: &SequenceSpec, c: &[BigInt], count: usize, prec: Precision) -> Result<Vec<usize>> {
    let vals = (1..=count)
        .map(|n| {
            let a = spec.term(n as u64)?.a;
            let cn = c.get(n - 1).cloned().unwrap_or_else(BigInt::one);
            Ok(a.scale(&BigRat::from_integer(cn)))
        })
        .collect::<Result<Vec<_>>>()?;
    sort_elements_by_modulus(&vals, prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::rat;

    fn iterative(m: u64) -> BigInt {
        let (mut a, mut b) = (BigInt::zero(), BigInt::one());
        for _ in 0..m {
            let t = &a + &b;
            a = b;
            b = t;
        }
        a
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fib(0), BigInt::zero());
        assert_eq!(fib(1), BigInt::one());
        assert_eq!(fib(9), BigInt::from(34));
        assert_eq!(fib(14), BigInt::from(377));
        assert_eq!(fib(100).to_string(), "354224848179261915075");
        for m in 0..300 {
            assert_eq!(fib(m), iterative(m));
        }
    }

    #[test]
    fn golden_powers() {
        let k = NumberField::golden();
        assert_eq!(phi_power(&k, 1).unwrap().coords(), vec![rat(0), rat(1)]);
        assert_eq!(phi_power(&k, 5).unwrap().coords(), vec![rat(3), rat(5)]);
        assert_eq!(phi_power(&k, 5).unwrap(), k.generator().pow(5).unwrap());
        assert_eq!(phi_power(&k, 0).unwrap(), k.one());
        assert_eq!(&phi_power(&k, -7).unwrap() * &phi_power(&k, 7).unwrap(), k.one());
        assert_eq!(phi_power(&NumberField::rationals(), 2), Err(Error::FieldMismatch));
    }

    #[test]
    fn modulus_sorting() {
        let k = NumberField::golden();
        let p = Precision::default();
        let v = |xs: &[i64]| xs.iter().map(|&x| k.from_int(x)).collect::<Vec<_>>();
        assert_eq!(sort_elements_by_modulus(&v(&[10, 2, 5]), p).unwrap(), vec![2, 3, 1]);
        assert_eq!(sort_elements_by_modulus(&v(&[1, 2, 3]), p).unwrap(), vec![1, 2, 3]);
        assert_eq!(sort_elements_by_modulus(&v(&[6, 4]), p).unwrap(), vec![2, 1]);
        assert_eq!(sort_elements_by_modulus(&v(&[-3, 3, 1]), p).unwrap(), vec![3, 1, 2]);
        let phi = k.generator();
        let vals = vec![phi.clone(), k.one() - &phi, k.from_int(1)];
        assert_eq!(sort_elements_by_modulus(&vals, p).unwrap(), vec![2, 3, 1]);
    }

    #[test]
    fn spec_sort_with_multipliers() {
        let k = NumberField::golden();
        let spec = SequenceSpec::from_dsl("t", &k, "2", "1", GrowthProfile::pure(2, 1.0)).unwrap();
        let c = vec![BigInt::from(3), BigInt::from(2)];
        assert_eq!(sort_by_modulus(&spec, &c, 2, Precision::default()).unwrap(), vec![2, 1]);
    }

    #[test]
    fn profile_inference() {
        let k = NumberField::golden();
        let mut spec =
            SequenceSpec::from_dsl("t", &k, "F(10^n)*F(10^n+1)", "1", GrowthProfile::pure(2, 1.0)).unwrap();
        let g = infer_profile(&spec).unwrap();
        assert_eq!(g.g, rat(10));
        spec.profile = g;
        spec.validate_profile().unwrap();
    }

    #[test]
    fn ceiling_refuses_huge_terms() {
        let k = NumberField::golden();
        let spec = SequenceSpec::from_dsl("t", &k, "F(14^n)", "1", GrowthProfile::pure(14, 0.48)).unwrap();
        assert!(spec.term(4).is_ok());
        assert!(matches!(spec.term(6), Err(Error::BeyondCeiling { n: 6, .. })));
    }
}
