//! Dyadic rationals `m·2^e` with directed rounding to a bit budget.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::BigRat;

/// Rounding direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

impl Round {
    pub fn flip(self) -> Round {
        match self {
            Round::Down => Round::Up,
            Round::Up => Round::Down,
        }
    }
}

/// `man · 2^exp`, normalized so that `man` is odd (or the value is zero with `exp = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

/// floor or ceil of `m / 2^s`.
fn shr_round(m: &BigInt, s: u64, dir: Round) -> BigInt {
    if s == 0 {
        return m.clone();
    }
    let mag = m.magnitude();
    let q = mag >> s;
    let exact = mag.trailing_zeros().is_none_or(|tz| tz >= s);
    let away = !exact
        && match (m.sign(), dir) {
            (Sign::Minus, Round::Down) => true,
            (Sign::Minus, Round::Up) => false,
            (_, Round::Up) => true,
            (_, Round::Down) => false,
        };
    let q = if away { q + BigUint::one() } else { q };
    BigInt::from_biguint(if m.is_negative() { Sign::Minus } else { Sign::Plus }, q)
}

impl Dyadic {
    pub fn new(man: BigInt, exp: i64) -> Self {
        if man.is_zero() {
            return Dyadic { man, exp: 0 };
        }
        let tz = man.trailing_zeros().unwrap_or(0);
        if tz == 0 {
            Dyadic { man, exp }
        } else {
            Dyadic { man: man >> tz, exp: exp + tz as i64 }
        }
    }

    pub fn zero() -> Self {
        Dyadic { man: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { man: BigInt::one(), exp: 0 }
    }

    pub fn from_int(i: i64) -> Self {
        Dyadic::new(BigInt::from(i), 0)
    }

    pub fn from_bigint(i: &BigInt) -> Self {
        Dyadic::new(i.clone(), 0)
    }

    /// `2^k`.
    pub fn pow2(k: i64) -> Self {
        Dyadic { man: BigInt::one(), exp: k }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.man.is_positive()
    }

    pub fn signum(&self) -> i32 {
        match self.man.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// `t` with `2^(t-1) <= |x| < 2^t`; `None` for zero.
    pub fn top(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.man.bits() as i64 + self.exp)
        }
    }

    pub fn neg(&self) -> Self {
        Dyadic { man: -&self.man, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Dyadic { man: self.man.abs(), exp: self.exp }
    }

    pub fn add(&self, o: &Dyadic) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(o.exp);
        let a = &self.man << (self.exp - e) as usize;
        let b = &o.man << (o.exp - e) as usize;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, o: &Dyadic) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Dyadic) -> Self {
        Dyadic::new(&self.man * &o.man, self.exp + o.exp)
    }

    /// Exact multiplication by `2^k`.
    pub fn mul_2exp(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic { man: self.man.clone(), exp: self.exp + k }
    }

    /// Round to at most `bits` significant bits in direction `dir`.
    pub fn round(&self, bits: u32, dir: Round) -> Self {
        let len = self.man.bits();
        if len <= bits as u64 {
            return self.clone();
        }
        let s = len - bits as u64;
        Dyadic::new(shr_round(&self.man, s, dir), self.exp + s as i64)
    }

    /// Quotient rounded to `bits` significant bits.
    pub fn div(&self, o: &Dyadic, bits: u32, dir: Round) -> Self {
        assert!(!o.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let k = (bits as i64 + 2 + o.man.bits() as i64 - self.man.bits() as i64).max(0);
        let num = &self.man << k as usize;
        let (q, r) = num.div_mod_floor(&o.man);
        let q = if dir == Round::Up && !r.is_zero() { q + 1 } else { q };
        Dyadic::new(q, self.exp - o.exp - k).round(bits, dir)
    }

    /// Square root of a nonnegative value, rounded to `bits` bits.
    pub fn sqrt(&self, bits: u32, dir: Round) -> Self {
        assert!(!self.is_negative(), "square root of a negative dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let mut k = (2 * bits as i64 + 4 - self.man.bits() as i64).max(0);
        if (self.exp - k).rem_euclid(2) != 0 {
            k += 1;
        }
        let m = &self.man << k as usize;
        let s = m.sqrt();
        let s = if dir == Round::Up && &s * &s != m { s + 1 } else { s };
        Dyadic::new(s, (self.exp - k) / 2).round(bits, dir)
    }

    pub fn from_rat(q: &BigRat, bits: u32, dir: Round) -> Self {
        let n = Dyadic::from_bigint(q.numer());
        if q.denom().is_one() {
            return n.round(bits, dir);
        }
        n.div(&Dyadic::from_bigint(q.denom()), bits, dir)
    }

    pub fn to_rat(&self) -> BigRat {
        if self.exp >= 0 {
            BigRat::from_integer(&self.man << self.exp as usize)
        } else {
            BigRat::new(self.man.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    pub fn floor_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.man << self.exp as usize
        } else {
            shr_round(&self.man, (-self.exp) as u64, Round::Down)
        }
    }

    pub fn ceil_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.man << self.exp as usize
        } else {
            shr_round(&self.man, (-self.exp) as u64, Round::Up)
        }
    }

    /// Nearest `f64`, saturating to infinities or zero outside the range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let len = self.man.bits() as i64;
        let shift = (len - 60).max(0);
        let m = (&self.man >> shift as usize).to_f64().unwrap_or(0.0);
        let e = self.exp + shift;
        if e > 2000 {
            return m.signum() * f64::INFINITY;
        }
        if e < -2200 {
            return 0.0;
        }
        m * 2f64.powi(e as i32)
    }

    /// Scientific notation with `digits` significant digits, rounded in direction `dir`.
    pub fn to_sci_string(&self, digits: u32, dir: Round) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let digits = digits.max(1);
        let top = self.top().unwrap();
        let mut e10 = ((top - 1) as f64 * std::f64::consts::LOG10_2).floor() as i64;
        let lower = BigInt::from(10u32).pow(digits - 1);
        let upper = &lower * 10;
        loop {
            let p = digits as i64 - 1 - e10;
            let mut num = self.man.clone();
            let mut den = BigInt::one();
            if p >= 0 {
                num *= BigInt::from(10u32).pow(p as u32);
            } else {
                den *= BigInt::from(10u32).pow((-p) as u32);
            }
            if self.exp >= 0 {
                num <<= self.exp as usize;
            } else {
                den <<= (-self.exp) as usize;
            }
            let (q, r) = num.div_mod_floor(&den);
            let q = if dir == Round::Up && !r.is_zero() { q + 1 } else { q };
            let mag = q.abs();
            if mag >= upper {
                e10 += 1;
                continue;
            }
            if mag < lower {
                e10 -= 1;
                continue;
            }
            let s = mag.to_string();
            let sign = if q.is_negative() { "-" } else { "" };
            let (head, tail) = s.split_at(1);
            return if tail.is_empty() {
                format!("{sign}{head}e{e10}")
            } else {
                format!("{sign}{head}.{tail}e{e10}")
            };
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, o: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), o.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let (ta, tb) = (self.top().unwrap(), o.top().unwrap());
        if ta != tb {
            let mag = ta.cmp(&tb);
            return if sa > 0 { mag } else { mag.reverse() };
        }
        let e = self.exp.min(o.exp);
        let a = &self.man << (self.exp - e) as usize;
        let b = &o.man << (o.exp - e) as usize;
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci_string(20, Round::Down))
    }
}
