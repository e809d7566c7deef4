//! Real intervals with dyadic endpoints and outward rounding.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::dyadic::{Dyadic, Round};
use crate::{BigRat, Error, Result};

/// Working precision in bits plus the ceiling used by refinement loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    pub bits: u32,
    pub max_bits: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision { bits: 256, max_bits: 16384 }
    }
}

impl Precision {
    pub fn new(bits: u32, max_bits: u32) -> Result<Self> {
        if bits < 8 || bits > max_bits {
            return Err(Error::Invalid(format!(
                "precision needs 8 <= bits <= max_bits, got {bits} and {max_bits}"
            )));
        }
        Ok(Precision { bits, max_bits })
    }

    /// Same ceiling, different working bits (not clamped).
    pub fn with_bits(self, bits: u32) -> Self {
        Precision { bits, max_bits: self.max_bits.max(bits) }
    }

    /// Add guard bits.
    pub fn extra(self, more: u32) -> Self {
        self.with_bits(self.bits.saturating_add(more))
    }

    /// Next step of a refinement loop, or `None` once the ceiling is reached.
    pub fn doubled(self) -> Option<Self> {
        if self.bits >= self.max_bits {
            None
        } else {
            Some(Precision { bits: (self.bits * 2).min(self.max_bits), max_bits: self.max_bits })
        }
    }
}

/// Outcome of comparing two enclosures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Less,
    Greater,
    Undecided,
}

/// Closed interval `[lo, hi]` known to contain the quantity it encloses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalReal {
    lo: Dyadic,
    hi: Dyadic,
}

fn down(d: Dyadic, prec: Precision) -> Dyadic {
    d.round(prec.bits, Round::Down)
}

fn up(d: Dyadic, prec: Precision) -> Dyadic {
    d.round(prec.bits, Round::Up)
}

/// Power of a nonnegative dyadic with directed rounding at every step.
fn pow_dir(base: &Dyadic, mut k: u64, bits: u32, dir: Round) -> Dyadic {
    let mut acc = Dyadic::one();
    let mut b = base.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = acc.mul(&b).round(bits, dir);
        }
        k >>= 1;
        if k > 0 {
            b = b.mul(&b).round(bits, dir);
        }
    }
    acc
}

impl IntervalReal {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        assert!(lo <= hi, "interval with lo > hi");
        IntervalReal { lo, hi }
    }

    pub fn point(d: Dyadic) -> Self {
        IntervalReal { lo: d.clone(), hi: d }
    }

    pub fn zero() -> Self {
        Self::point(Dyadic::zero())
    }

    pub fn one() -> Self {
        Self::point(Dyadic::one())
    }

    pub fn from_int(i: i64) -> Self {
        Self::point(Dyadic::from_int(i))
    }

    pub fn from_bigint(i: &BigInt) -> Self {
        Self::point(Dyadic::from_bigint(i))
    }

    /// Enclosure of a rational; exact when the rational is dyadic and fits.
    pub fn from_rat(q: &BigRat, prec: Precision) -> Self {
        if q.denom().is_one() && q.numer().bits() <= prec.bits as u64 {
            return Self::point(Dyadic::from_bigint(q.numer()));
        }
        IntervalReal {
            lo: Dyadic::from_rat(q, prec.bits, Round::Down),
            hi: Dyadic::from_rat(q, prec.bits, Round::Up),
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn mid(&self) -> Dyadic {
        self.lo.add(&self.hi).mul_2exp(-1)
    }

    pub fn contains_rat(&self, q: &BigRat) -> bool {
        self.lo.to_rat() <= *q && *q <= self.hi.to_rat()
    }

    pub fn contains_dyadic(&self, d: &Dyadic) -> bool {
        &self.lo <= d && d <= &self.hi
    }

    pub fn contains(&self, o: &IntervalReal) -> bool {
        self.lo <= o.lo && o.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn overlaps(&self, o: &IntervalReal) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    pub fn neg(&self) -> Self {
        IntervalReal { lo: self.hi.neg(), hi: self.lo.neg() }
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let m = if self.lo.neg() > self.hi { self.lo.neg() } else { self.hi.clone() };
            IntervalReal { lo: Dyadic::zero(), hi: m }
        }
    }

    pub fn add(&self, o: &IntervalReal, prec: Precision) -> Self {
        IntervalReal { lo: down(self.lo.add(&o.lo), prec), hi: up(self.hi.add(&o.hi), prec) }
    }

    pub fn sub(&self, o: &IntervalReal, prec: Precision) -> Self {
        IntervalReal { lo: down(self.lo.sub(&o.hi), prec), hi: up(self.hi.sub(&o.lo), prec) }
    }

    pub fn mul(&self, o: &IntervalReal, prec: Precision) -> Self {
        if !self.lo.is_negative() && !o.lo.is_negative() {
            return IntervalReal {
                lo: down(self.lo.mul(&o.lo), prec),
                hi: up(self.hi.mul(&o.hi), prec),
            };
        }
        let c = [self.lo.mul(&o.lo), self.lo.mul(&o.hi), self.hi.mul(&o.lo), self.hi.mul(&o.hi)];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        IntervalReal { lo: down(lo, prec), hi: up(hi, prec) }
    }

    /// Exact scaling by `2^k`.
    pub fn mul_2exp(&self, k: i64) -> Self {
        IntervalReal { lo: self.lo.mul_2exp(k), hi: self.hi.mul_2exp(k) }
    }

    pub fn sqr(&self, prec: Precision) -> Self {
        self.powi(2, prec)
    }

    pub fn recip(&self, prec: Precision) -> Result<Self> {
        if self.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        let one = Dyadic::one();
        Ok(IntervalReal {
            lo: one.div(&self.hi, prec.bits, Round::Down),
            hi: one.div(&self.lo, prec.bits, Round::Up),
        })
    }

    pub fn div(&self, o: &IntervalReal, prec: Precision) -> Result<Self> {
        if o.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        if o.is_point() {
            let c = [
                self.lo.div(&o.lo, prec.bits, Round::Down),
                self.hi.div(&o.lo, prec.bits, Round::Down),
                self.lo.div(&o.lo, prec.bits, Round::Up),
                self.hi.div(&o.lo, prec.bits, Round::Up),
            ];
            let lo = c.iter().min().unwrap().clone();
            let hi = c.iter().max().unwrap().clone();
            return Ok(IntervalReal { lo, hi });
        }
        Ok(self.mul(&o.recip(prec.extra(4))?, prec))
    }

    /// Integer power; even powers are nonnegative.
    pub fn powi(&self, k: u64, prec: Precision) -> Self {
        if k == 0 {
            return Self::one();
        }
        if k.is_multiple_of(2) {
            let a = self.abs();
            return IntervalReal {
                lo: pow_dir(&a.lo, k, prec.bits, Round::Down),
                hi: pow_dir(&a.hi, k, prec.bits, Round::Up),
            };
        }
        let lo = if self.lo.is_negative() {
            pow_dir(&self.lo.neg(), k, prec.bits, Round::Up).neg()
        } else {
            pow_dir(&self.lo, k, prec.bits, Round::Down)
        };
        let hi = if self.hi.is_negative() {
            pow_dir(&self.hi.neg(), k, prec.bits, Round::Down).neg()
        } else {
            pow_dir(&self.hi, k, prec.bits, Round::Up)
        };
        IntervalReal { lo, hi }
    }

    pub fn sqrt(&self, prec: Precision) -> Result<Self> {
        if self.hi.is_negative() {
            return Err(Error::NonPositiveInput);
        }
        let lo = if self.lo.is_negative() { Dyadic::zero() } else { self.lo.sqrt(prec.bits, Round::Down) };
        Ok(IntervalReal { lo, hi: self.hi.sqrt(prec.bits, Round::Up) })
    }

    pub fn max(&self, o: &IntervalReal) -> Self {
        IntervalReal {
            lo: if self.lo > o.lo { self.lo.clone() } else { o.lo.clone() },
            hi: if self.hi > o.hi { self.hi.clone() } else { o.hi.clone() },
        }
    }

    pub fn min(&self, o: &IntervalReal) -> Self {
        IntervalReal {
            lo: if self.lo < o.lo { self.lo.clone() } else { o.lo.clone() },
            hi: if self.hi < o.hi { self.hi.clone() } else { o.hi.clone() },
        }
    }

    pub fn hull(&self, o: &IntervalReal) -> Self {
        IntervalReal {
            lo: if self.lo < o.lo { self.lo.clone() } else { o.lo.clone() },
            hi: if self.hi > o.hi { self.hi.clone() } else { o.hi.clone() },
        }
    }

    pub fn intersect(&self, o: &IntervalReal) -> Option<Self> {
        let lo = if self.lo > o.lo { self.lo.clone() } else { o.lo.clone() };
        let hi = if self.hi < o.hi { self.hi.clone() } else { o.hi.clone() };
        if lo <= hi {
            Some(IntervalReal { lo, hi })
        } else {
            None
        }
    }

    /// Replace a negative lower endpoint by zero (for quantities known to be nonnegative).
    pub fn clamp_nonneg(&self) -> Self {
        if self.lo.is_negative() {
            IntervalReal { lo: Dyadic::zero(), hi: if self.hi.is_negative() { Dyadic::zero() } else { self.hi.clone() } }
        } else {
            self.clone()
        }
    }

    pub fn compare(&self, o: &IntervalReal) -> Cmp {
        if self.hi < o.lo {
            Cmp::Less
        } else if self.lo > o.hi {
            Cmp::Greater
        } else {
            Cmp::Undecided
        }
    }

    /// `log2` of a strictly positive interval.
    pub fn log2(&self, prec: Precision) -> Result<Self> {
        if !self.lo.is_positive() {
            return Err(Error::NonPositiveInput);
        }
        if self.is_point() {
            return Ok(log2_point(&self.lo, prec));
        }
        let lo = log2_point(&self.lo, prec).lo;
        let hi = log2_point(&self.hi, prec).hi;
        Ok(IntervalReal { lo, hi })
    }

    /// Natural logarithm of a strictly positive interval.
    pub fn ln(&self, prec: Precision) -> Result<Self> {
        let w = prec.extra(16);
        Ok(self.log2(w)?.mul(&ln2(w), prec))
    }

    /// `2^self`.
    pub fn exp2(&self, prec: Precision) -> Self {
        if self.is_point() {
            return exp2_point(&self.lo, prec);
        }
        let lo = exp2_point(&self.lo, prec).lo;
        let hi = exp2_point(&self.hi, prec).hi;
        IntervalReal { lo, hi }
    }

    /// `self^e` for a strictly positive base, computed as `2^(e·log2 self)`.
    pub fn pow(&self, e: &IntervalReal, prec: Precision) -> Result<Self> {
        if !self.lo.is_positive() {
            return Err(Error::NonPositiveBase);
        }
        if e.is_point() && e.lo.is_zero() {
            return Ok(Self::one());
        }
        let l = self.log2(prec.extra(16))?;
        let w = guard_for(&l, e, prec);
        let l = if w.bits > prec.bits + 16 { self.log2(w)? } else { l };
        Ok(e.mul(&l, w).exp2(w).round(prec))
    }

    /// `self^q` for a rational exponent.
    pub fn pow_rat(&self, q: &BigRat, prec: Precision) -> Result<Self> {
        if q.is_integer() && !q.is_negative() && q.numer().bits() <= 32 {
            let k: u64 = num_traits::ToPrimitive::to_u64(q.numer()).unwrap();
            return Ok(self.powi(k, prec));
        }
        self.pow(&IntervalReal::from_rat(q, prec.extra(32)), prec)
    }

    /// `self^q` for `self >= 0` and `q > 0`; a lower endpoint at zero maps to zero.
    pub fn pow_nonneg(&self, q: &BigRat, prec: Precision) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::Invalid("pow_nonneg needs a positive exponent".into()));
        }
        if self.hi.is_negative() {
            return Err(Error::NonPositiveBase);
        }
        if self.lo.is_positive() {
            return self.pow_rat(q, prec);
        }
        let hi = if self.hi.is_zero() {
            Dyadic::zero()
        } else {
            IntervalReal::point(self.hi.clone()).pow_rat(q, prec)?.hi
        };
        Ok(IntervalReal { lo: Dyadic::zero(), hi })
    }

    /// Outward rounding of both endpoints to `prec`.
    pub fn round(&self, prec: Precision) -> Self {
        IntervalReal { lo: down(self.lo.clone(), prec), hi: up(self.hi.clone(), prec) }
    }

    pub fn to_f64(&self) -> f64 {
        self.mid().to_f64()
    }
}

/// Extra bits so that `2^(e·l)` keeps roughly `prec` relative bits.
fn guard_for(l: &IntervalReal, e: &IntervalReal, prec: Precision) -> Precision {
    let mag = |d: &Dyadic| d.top().unwrap_or(0).max(0);
    let t = mag(&l.lo).max(mag(&l.hi)) + mag(&e.lo).max(mag(&e.hi));
    prec.extra(16 + t.max(0) as u32)
}

impl fmt::Display for IntervalReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            self.lo.to_sci_string(12, Round::Down),
            self.hi.to_sci_string(12, Round::Up)
        )
    }
}

pub fn iv_from_rat(q: &BigRat, prec: Precision) -> IntervalReal {
    IntervalReal::from_rat(q, prec)
}

pub fn iv_log2(x: &IntervalReal, prec: Precision) -> Result<IntervalReal> {
    x.log2(prec)
}

pub fn iv_pow(x: &IntervalReal, e: &IntervalReal, prec: Precision) -> Result<IntervalReal> {
    x.pow(e, prec)
}

pub fn iv_compare(x: &IntervalReal, y: &IntervalReal) -> Cmp {
    x.compare(y)
}

/// Bounds `lo <= 2^w·atanh(1/m) <= hi`, using exact nested floors.
fn atanh_inv_fixed(m: u64, w: u64) -> (BigInt, BigInt) {
    let one = BigInt::one() << w as usize;
    let m = BigInt::from(m);
    let m2 = &m * &m;
    let mut p = &one / &m;
    let mut sum = BigInt::zero();
    let mut j: u64 = 0;
    while !p.is_zero() {
        sum += &p / BigInt::from(2 * j + 1);
        p = &p / &m2;
        j += 1;
    }
    let hi = &sum + BigInt::from(j + 2);
    (sum, hi)
}

/// Enclosure of `ln 2`, cached per bit budget.
pub fn ln2(prec: Precision) -> IntervalReal {
    static CACHE: OnceLock<Mutex<HashMap<u64, (BigInt, BigInt)>>> = OnceLock::new();
    let w = (prec.bits as u64 + 32).div_ceil(64) * 64;
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let hit = cache.lock().unwrap().get(&w).cloned();
    let (lo, hi) = match hit {
        Some(v) => v,
        None => {
            // ln 2 = 18 atanh(1/26) - 2 atanh(1/4801) + 8 atanh(1/8749)
            let (a_lo, a_hi) = atanh_inv_fixed(26, w);
            let (b_lo, b_hi) = atanh_inv_fixed(4801, w);
            let (c_lo, c_hi) = atanh_inv_fixed(8749, w);
            let lo: BigInt = a_lo * 18 - b_hi * 2 + c_lo * 8;
            let hi: BigInt = a_hi * 18 - b_lo * 2 + c_hi * 8;
            cache.lock().unwrap().insert(w, (lo.clone(), hi.clone()));
            (lo, hi)
        }
    };
    IntervalReal::new(Dyadic::new(lo, -(w as i64)), Dyadic::new(hi, -(w as i64))).round(prec.extra(8))
}

fn reduction_steps(bits: u32) -> u32 {
    ((bits as f64).sqrt() / 2.0) as u32
}

/// `log2` of a positive dyadic.
fn log2_point(x: &Dyadic, prec: Precision) -> IntervalReal {
    let k = x.top().unwrap() - 1;
    let t = x.mul_2exp(-k);
    let kk = IntervalReal::from_bigint(&BigInt::from(k));
    if t == Dyadic::one() {
        return kk;
    }
    let s = reduction_steps(prec.bits);
    let w = prec.extra(24 + s + 2 * (64 - (k.unsigned_abs() | 1).leading_zeros()));
    let mut tt = IntervalReal::point(t);
    for _ in 0..s {
        tt = tt.sqrt(w).expect("positive");
    }
    let one = IntervalReal::one();
    let z = tt.sub(&one, w).div(&tt.add(&one, w), w).expect("nonzero");
    let z = z.clamp_nonneg();
    let z2 = z.sqr(w);
    let mut pw = z.clone();
    let mut sum = IntervalReal::zero();
    let eps = Dyadic::pow2(-(w.bits as i64) - 8);
    let mut j: u64 = 0;
    loop {
        let term = pw.div(&IntervalReal::from_int((2 * j + 1) as i64), w).expect("nonzero");
        sum = sum.add(&term, w);
        pw = pw.mul(&z2, w);
        j += 1;
        if pw.hi <= eps {
            break;
        }
    }
    // remainder of the odd series for z <= 1/3 is at most (9/8) z^(2j+1)
    let rem = pw.hi.mul(&Dyadic::new(BigInt::from(9), -3)).round(w.bits, Round::Up);
    let sum = IntervalReal { lo: sum.lo, hi: up(sum.hi.add(&rem), w) };
    let ln_t = sum.mul_2exp(s as i64 + 1);
    let l2 = ln_t.div(&ln2(w), w).expect("ln2 > 0");
    kk.add(&l2, w).round(prec.extra(4))
}

/// `2^y` for a dyadic `y`.
fn exp2_point(y: &Dyadic, prec: Precision) -> IntervalReal {
    let k = y.floor_int();
    let k: i64 = num_traits::ToPrimitive::to_i64(&k).expect("exponent out of range");
    let f = y.sub(&Dyadic::from_int(k));
    if f.is_zero() {
        return IntervalReal::point(Dyadic::pow2(k));
    }
    let s = reduction_steps(prec.bits);
    let w = prec.extra(24 + 2 * s);
    let u = IntervalReal::point(f).mul(&ln2(w), w).mul_2exp(-(s as i64));
    let eps = Dyadic::pow2(-(w.bits as i64) - 8);
    let mut sum = IntervalReal::one();
    let mut term = IntervalReal::one();
    let mut j: i64 = 1;
    loop {
        term = term.mul(&u, w).div(&IntervalReal::from_int(j), w).expect("nonzero");
        sum = sum.add(&term, w);
        j += 1;
        if term.hi <= eps {
            break;
        }
    }
    let next = term.mul(&u, w).div(&IntervalReal::from_int(j), w).expect("nonzero");
    let rem = next.hi.mul_2exp(1);
    let mut e = IntervalReal { lo: sum.lo, hi: up(sum.hi.add(&rem), w) };
    for _ in 0..s {
        e = e.sqr(w);
    }
    e.mul_2exp(k).round(prec.extra(4))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    fn p(bits: u32) -> Precision {
        Precision::new(bits, 16384).unwrap()
    }

    #[test]
    fn one_third_at_eight_bits() {
        let x = iv_from_rat(&rat(1, 3), p(8));
        assert!(x.contains_rat(&rat(1, 3)));
        assert!(x.width() <= Dyadic::pow2(-7));
    }

    #[test]
    fn two_is_exact() {
        assert!(iv_from_rat(&rat(2, 1), p(8)).is_point());
    }

    #[test]
    fn ln2_digits() {
        let l = ln2(p(200));
        let q = BigRat::new(
            "6931471805599453094172321214581765680755001343602552".parse().unwrap(),
            BigInt::from(10u32).pow(52),
        );
        let eps = BigRat::new(1.into(), BigInt::from(10u32).pow(50));
        assert!(l.lo().to_rat() < &q + &eps && &q - &eps < l.hi().to_rat());
        assert!(l.width() < Dyadic::pow2(-190));
    }

    #[test]
    fn log2_of_powers_of_two_is_exact() {
        let x = IntervalReal::from_int(8).log2(p(64)).unwrap();
        assert!(x.is_point() && x.contains_rat(&rat(3, 1)));
        assert!(IntervalReal::one().log2(p(64)).unwrap().contains_rat(&rat(0, 1)));
    }

    #[test]
    fn log2_of_34() {
        let x = IntervalReal::from_int(34).log2(p(128)).unwrap();
        assert!(x.width() < Dyadic::pow2(-110));
        let f = x.to_f64();
        assert!((f - 5.087462841250339).abs() < 1e-14);
    }

    #[test]
    fn powers() {
        let half = IntervalReal::from_rat(&rat(1, 2), p(64));
        assert!(IntervalReal::from_int(4).pow(&half, p(64)).unwrap().contains_rat(&rat(2, 1)));
        let one = IntervalReal::one();
        assert!(IntervalReal::from_int(34).pow(&one, p(64)).unwrap().contains_rat(&rat(34, 1)));
        let r = IntervalReal::from_int(34).pow(&half, p(64)).unwrap();
        assert!((r.to_f64() - 5.830951894845301).abs() < 1e-12);
        assert!(IntervalReal::zero().pow(&half, p(64)).is_err());
    }

    #[test]
    fn exp2_of_integers_is_exact() {
        let x = IntervalReal::from_int(-5).exp2(p(64));
        assert!(x.is_point() && x.contains_rat(&rat(1, 32)));
    }

    #[test]
    fn compare_cases() {
        let a = IntervalReal::new(Dyadic::from_int(1), Dyadic::from_int(2));
        let b = IntervalReal::new(Dyadic::from_int(3), Dyadic::from_int(4));
        let c = IntervalReal::new(Dyadic::from_int(2), Dyadic::from_int(4));
        let d = IntervalReal::new(Dyadic::from_int(1), Dyadic::from_int(3));
        assert_eq!(iv_compare(&a, &b), Cmp::Less);
        assert_eq!(iv_compare(&b, &a), Cmp::Greater);
        assert_eq!(iv_compare(&d, &c), Cmp::Undecided);
    }

    #[test]
    fn golden_ratio_exceeds_1618() {
        let prec = p(128);
        let five = IntervalReal::from_int(5).sqrt(prec).unwrap();
        let phi = five.add(&IntervalReal::one(), prec).mul_2exp(-1);
        let approx = IntervalReal::from_rat(&rat(1618, 1000), prec);
        assert_eq!(iv_compare(&phi, &approx), Cmp::Greater);
    }

    #[test]
    fn pow_nonneg_touching_zero() {
        let x = IntervalReal::new(Dyadic::zero(), Dyadic::from_int(4));
        let r = x.pow_nonneg(&rat(1, 2), p(64)).unwrap();
        assert!(r.lo().is_zero() && r.contains_rat(&rat(2, 1)));
    }

    #[test]
    fn high_precision_log_and_exp_round_trip() {
        let prec = p(4096);
        let x = IntervalReal::from_int(7);
        let y = x.log2(prec).unwrap().exp2(prec);
        assert!(y.contains_rat(&rat(7, 1)));
        assert!(y.width() < Dyadic::pow2(-4000));
    }
}
