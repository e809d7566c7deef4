//! Rectangular complex intervals.

use std::fmt;

use super::dyadic::Dyadic;
use super::interval::{IntervalReal, Precision};
use crate::{BigRat, Error, Result};

/// `re + i·im` with each part an enclosure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalComplex {
    pub re: IntervalReal,
    pub im: IntervalReal,
}

impl IntervalComplex {
    pub fn new(re: IntervalReal, im: IntervalReal) -> Self {
        IntervalComplex { re, im }
    }

    pub fn real(re: IntervalReal) -> Self {
        IntervalComplex { re, im: IntervalReal::zero() }
    }

    pub fn zero() -> Self {
        Self::real(IntervalReal::zero())
    }

    pub fn one() -> Self {
        Self::real(IntervalReal::one())
    }

    pub fn i() -> Self {
        IntervalComplex { re: IntervalReal::zero(), im: IntervalReal::one() }
    }

    pub fn from_rat(q: &BigRat, prec: Precision) -> Self {
        Self::real(IntervalReal::from_rat(q, prec))
    }

    /// Imaginary part is exactly zero.
    pub fn is_real(&self) -> bool {
        self.im.is_point() && self.im.lo().is_zero()
    }

    pub fn add(&self, o: &Self, prec: Precision) -> Self {
        IntervalComplex { re: self.re.add(&o.re, prec), im: self.im.add(&o.im, prec) }
    }

    pub fn sub(&self, o: &Self, prec: Precision) -> Self {
        IntervalComplex { re: self.re.sub(&o.re, prec), im: self.im.sub(&o.im, prec) }
    }

    pub fn neg(&self) -> Self {
        IntervalComplex { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn conj(&self) -> Self {
        IntervalComplex { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &Self, prec: Precision) -> Self {
        if self.is_real() && o.is_real() {
            return Self::real(self.re.mul(&o.re, prec));
        }
        let re = self.re.mul(&o.re, prec).sub(&self.im.mul(&o.im, prec), prec);
        let im = self.re.mul(&o.im, prec).add(&self.im.mul(&o.re, prec), prec);
        IntervalComplex { re, im }
    }

    pub fn scale(&self, r: &IntervalReal, prec: Precision) -> Self {
        IntervalComplex { re: self.re.mul(r, prec), im: self.im.mul(r, prec) }
    }

    pub fn mul_2exp(&self, k: i64) -> Self {
        IntervalComplex { re: self.re.mul_2exp(k), im: self.im.mul_2exp(k) }
    }

    /// `|z|^2`.
    pub fn norm_sqr(&self, prec: Precision) -> IntervalReal {
        self.re.sqr(prec).add(&self.im.sqr(prec), prec)
    }

    /// Modulus; exact `|re|` when the imaginary part is zero.
    pub fn abs(&self, prec: Precision) -> IntervalReal {
        if self.is_real() {
            return self.re.abs();
        }
        if self.re.is_point() && self.re.lo().is_zero() {
            return self.im.abs();
        }
        self.norm_sqr(prec).sqrt(prec).expect("nonnegative")
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn recip(&self, prec: Precision) -> Result<Self> {
        if self.is_real() {
            return Ok(Self::real(self.re.recip(prec)?));
        }
        let n = self.norm_sqr(prec.extra(8));
        if n.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = n.recip(prec.extra(8))?;
        Ok(IntervalComplex { re: self.re.mul(&inv, prec), im: self.im.neg().mul(&inv, prec) })
    }

    pub fn div(&self, o: &Self, prec: Precision) -> Result<Self> {
        if o.is_real() {
            return Ok(IntervalComplex { re: self.re.div(&o.re, prec)?, im: self.im.div(&o.re, prec)? });
        }
        Ok(self.mul(&o.recip(prec.extra(8))?, prec))
    }

    pub fn powi(&self, mut k: u64, prec: Precision) -> Self {
        if self.is_real() {
            return Self::real(self.re.powi(k, prec));
        }
        let mut acc = Self::one();
        let mut b = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b, prec);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b, prec);
            }
        }
        acc
    }

    pub fn overlaps(&self, o: &Self) -> bool {
        self.re.overlaps(&o.re) && self.im.overlaps(&o.im)
    }

    pub fn intersect(&self, o: &Self) -> Option<Self> {
        Some(IntervalComplex { re: self.re.intersect(&o.re)?, im: self.im.intersect(&o.im)? })
    }

    pub fn hull(&self, o: &Self) -> Self {
        IntervalComplex { re: self.re.hull(&o.re), im: self.im.hull(&o.im) }
    }

    /// Grow both parts by `r` on each side (the real part only when `real_only`).
    pub fn inflate(&self, r: &Dyadic, real_only: bool) -> Self {
        let grow = |x: &IntervalReal| IntervalReal::new(x.lo().sub(r), x.hi().add(r));
        IntervalComplex {
            re: grow(&self.re),
            im: if real_only { self.im.clone() } else { grow(&self.im) },
        }
    }

    /// Midpoint as a point enclosure.
    pub fn mid(&self) -> Self {
        IntervalComplex { re: IntervalReal::point(self.re.mid()), im: IntervalReal::point(self.im.mid()) }
    }

    /// Largest of the two part widths.
    pub fn width(&self) -> Dyadic {
        let (a, b) = (self.re.width(), self.im.width());
        if a > b {
            a
        } else {
            b
        }
    }
}

impl fmt::Display for IntervalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{} + i{}", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let p = Precision::default();
        let m = IntervalComplex::i().mul(&IntervalComplex::i(), p);
        assert!(m.re.contains_rat(&BigRat::from_integer((-1).into())));
        assert!(m.im.contains_rat(&BigRat::from_integer(0.into())));
    }

    #[test]
    fn modulus_of_three_four() {
        let p = Precision::default();
        let z = IntervalComplex::new(IntervalReal::from_int(3), IntervalReal::from_int(4));
        assert!(z.abs(p).contains_rat(&BigRat::from_integer(5.into())));
        assert_eq!(IntervalComplex::real(IntervalReal::from_int(-3)).abs(p), IntervalReal::from_int(3));
    }

    #[test]
    fn division_inverts_multiplication() {
        let p = Precision::default();
        let a = IntervalComplex::new(IntervalReal::from_int(2), IntervalReal::from_int(-7));
        let b = IntervalComplex::new(IntervalReal::from_int(1), IntervalReal::from_int(3));
        let q = a.mul(&b, p).div(&b, p).unwrap();
        assert!(q.re.contains_rat(&BigRat::from_integer(2.into())));
        assert!(q.im.contains_rat(&BigRat::from_integer((-7).into())));
    }
}
