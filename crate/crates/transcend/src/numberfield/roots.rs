//! Certified isolation of the complex roots of an integer polynomial.
//!
//! Approximations come from a Durand–Kerner pass in `f64`, are polished by Newton
//! steps at increasing precision, and are then certified with Gershgorin discs of
//! the Weierstrass corrections: every connected component of the discs holds as many
//! roots as discs, so pairwise disjoint discs isolate one root each.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exactmath::{Dyadic, IntervalComplex, IntervalReal, Precision, Round};
use crate::{BigRat, ZPoly};

#[derive(Clone, Copy, Debug)]
pub(crate) struct C64 {
    pub re: f64,
    pub im: f64,
}

impl C64 {
    pub fn add(self, o: C64) -> C64 {
        C64 { re: self.re + o.re, im: self.im + o.im }
    }
    pub fn sub(self, o: C64) -> C64 {
        C64 { re: self.re - o.re, im: self.im - o.im }
    }
    pub fn mul(self, o: C64) -> C64 {
        C64 { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
    pub fn div(self, o: C64) -> C64 {
        let n = o.re * o.re + o.im * o.im;
        C64 { re: (self.re * o.re + self.im * o.im) / n, im: (self.im * o.re - self.re * o.im) / n }
    }
    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// Durand–Kerner approximations of all roots.
fn approximate(f: &ZPoly) -> Vec<C64> {
    let n = f.degree();
    let lc = f.leading().to_f64().unwrap_or(f64::MAX);
    let a: Vec<f64> = f.coeffs().iter().map(|c| c.to_f64().unwrap_or(0.0) / lc).collect();
    let bound = 1.0 + a[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let eval = |z: C64| a.iter().rev().fold(C64 { re: 0.0, im: 0.0 }, |acc, &c| acc.mul(z).add(C64 { re: c, im: 0.0 }));
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            C64 { re: 0.5 * bound * t.cos(), im: 0.5 * bound * t.sin() }
        })
        .collect();
    for _ in 0..2000 {
        let mut step = 0.0f64;
        for i in 0..n {
            let mut den = C64 { re: 1.0, im: 0.0 };
            for j in 0..n {
                if i != j {
                    den = den.mul(z[i].sub(z[j]));
                }
            }
            let d = eval(z[i]).div(den);
            if d.re.is_finite() && d.im.is_finite() {
                z[i] = z[i].sub(d);
                step = step.max(d.abs() / z[i].abs().max(1.0));
            }
        }
        if step < 1e-15 {
            break;
        }
    }
    z
}

fn lift(c: &BigInt) -> IntervalComplex {
    IntervalComplex::real(IntervalReal::from_bigint(c))
}

/// Horner evaluation of `f` at an enclosure.
pub(crate) fn eval_poly(f: &ZPoly, z: &IntervalComplex, prec: Precision) -> IntervalComplex {
    let mut acc = IntervalComplex::zero();
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(z, prec).add(&lift(c), prec);
    }
    acc
}

fn derivative(f: &ZPoly) -> ZPoly {
    ZPoly::new(f.coeffs().iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
}

fn point(re: f64, im: f64) -> IntervalComplex {
    let d = |x: f64| {
        if x == 0.0 {
            return Dyadic::zero();
        }
        let (m, e) = frexp(x);
        Dyadic::new(BigInt::from(m), e)
    };
    IntervalComplex::new(IntervalReal::point(d(re)), IntervalReal::point(d(im)))
}

/// Exact decomposition `x = m · 2^e` with integer `m`.
fn frexp(x: f64) -> (i64, i64) {
    let bits = x.to_bits();
    let sign = if bits >> 63 == 0 { 1 } else { -1 };
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = (bits & 0xf_ffff_ffff_ffff) as i64;
    if exp == 0 {
        (sign * frac, -1074)
    } else {
        (sign * (frac | 1 << 52), exp - 1075)
    }
}

fn newton(f: &ZPoly, df: &ZPoly, z: &IntervalComplex, prec: Precision) -> Option<IntervalComplex> {
    let num = eval_poly(f, z, prec);
    let den = eval_poly(df, z, prec);
    let step = num.div(&den, prec).ok()?;
    let next = z.sub(&step, prec).mid();
    Some(if z.is_real() { IntervalComplex::real(next.re) } else { next })
}

fn disjoint_all(boxes: &[IntervalComplex]) -> bool {
    for i in 0..boxes.len() {
        for j in i + 1..boxes.len() {
            if boxes[i].overlaps(&boxes[j]) {
                return false;
            }
        }
    }
    true
}

/// Gershgorin discs of the Weierstrass corrections, as boxes.
fn certify(f: &ZPoly, z: &[IntervalComplex], prec: Precision) -> Option<Vec<IntervalComplex>> {
    let n = z.len();
    let lc = lift(&f.leading());
    let mut boxes = Vec::with_capacity(n);
    for i in 0..n {
        let mut den = lc.clone();
        for j in 0..n {
            if i != j {
                den = den.mul(&z[i].sub(&z[j], prec), prec);
            }
        }
        let w = eval_poly(f, &z[i], prec).div(&den, prec).ok()?;
        let center = z[i].sub(&w, prec);
        let r = w.abs(prec).hi().mul(&Dyadic::from_int(n as i64 - 1)).round(prec.bits, Round::Up);
        let mut b = center.inflate(&r, z[i].is_real() && w.is_real());
        if z[i].is_real() && !b.is_real() {
            let h = b.im.abs().hi().clone();
            b = IntervalComplex::new(b.re.clone(), IntervalReal::new(h.neg(), h));
        }
        boxes.push(b);
    }
    if !disjoint_all(&boxes) {
        return None;
    }
    // a box symmetric about the real axis holding a single root of a real polynomial holds a real root
    Some(boxes.into_iter().map(|b| if b.im.contains_zero() && b.im.lo().neg() == *b.im.hi() { IntervalComplex::real(b.re) } else { b }).collect())
}

/// Canonical order: real roots descending, then the rest by real part and imaginary part descending.
fn canonical_order(boxes: &mut [IntervalComplex]) {
    boxes.sort_by(|a, b| {
        let ka = (!a.is_real(), a.re.mid().neg(), a.im.mid().neg());
        let kb = (!b.is_real(), b.re.mid().neg(), b.im.mid().neg());
        ka.cmp(&kb)
    });
}

/// Certified, pairwise disjoint root enclosures of `f` at about `prec.bits` bits,
/// refined from `start` when given (keeping its order).
pub(crate) fn isolate(f: &ZPoly, start: Option<&[IntervalComplex]>, prec: Precision) -> Option<Vec<IntervalComplex>> {
    let n = f.degree();
    if n == 1 {
        let r = BigRat::new(-f.coeff(0), f.coeff(1));
        return Some(vec![IntervalComplex::from_rat(&r, prec)]);
    }
    let df = derivative(f);
    let mut z: Vec<IntervalComplex> = match start {
        Some(s) => s.iter().map(|b| b.mid()).collect(),
        None => approximate(f).into_iter().map(|c| point(c.re, c.im)).collect(),
    };
    let target = prec.bits + 32;
    let mut ws = 64u32;
    loop {
        let p = prec.with_bits(ws);
        for _ in 0..3 {
            for zi in z.iter_mut() {
                if let Some(nz) = newton(f, &df, zi, p) {
                    *zi = nz;
                }
            }
        }
        if ws >= target {
            break;
        }
        ws = (ws * 2).min(target);
    }
    let wp = prec.with_bits(target);
    if let Some(b) = certify(f, &z, wp) {
        return Some(b);
    }
    // snap near-real approximations onto the real axis and retry
    let tiny = Dyadic::pow2(-(prec.bits as i64) / 2);
    let snapped: Vec<IntervalComplex> = z
        .iter()
        .map(|zi| {
            let scale = zi.re.abs().hi().clone().max(Dyadic::one());
            if zi.im.abs().hi() <= &tiny.mul(&scale) {
                let mut r = IntervalComplex::real(zi.re.clone());
                for _ in 0..4 {
                    if let Some(nr) = newton(f, &df, &r, wp) {
                        r = nr;
                    }
                }
                r
            } else {
                zi.clone()
            }
        })
        .collect();
    certify(f, &snapped, wp)
}

/// Initial isolation in canonical order, snapping real roots first.
pub(crate) fn anchor_roots(f: &ZPoly, prec: Precision) -> Option<Vec<IntervalComplex>> {
    let n = f.degree();
    if n == 1 {
        return isolate(f, None, prec);
    }
    let df = derivative(f);
    let approx = approximate(f);
    let scale = approx.iter().fold(1.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<IntervalComplex> = approx
        .iter()
        .map(|c| if c.im.abs() < 1e-7 * scale { point(c.re, 0.0) } else { point(c.re, c.im) })
        .collect();
    for _ in 0..6 {
        for zi in z.iter_mut() {
            if let Some(nz) = newton(f, &df, zi, prec.with_bits(64)) {
                *zi = nz;
            }
        }
    }
    let mut boxes = isolate(f, Some(&z), prec).or_else(|| isolate(f, None, prec))?;
    canonical_order(&mut boxes);
    Some(boxes)
}

/// Refine anchors to `prec`, checking that box `i` still matches anchor `i` only.
pub(crate) fn refine_roots(f: &ZPoly, anchors: &[IntervalComplex], prec: Precision) -> Option<Vec<IntervalComplex>> {
    let boxes = isolate(f, Some(anchors), prec)?;
    for (i, b) in boxes.iter().enumerate() {
        for (j, a) in anchors.iter().enumerate() {
            if (i == j) != b.overlaps(a) {
                return None;
            }
        }
    }
    let boxes = boxes.iter().zip(anchors).map(|(b, a)| b.intersect(a).unwrap_or_else(|| b.clone())).collect();
    Some(boxes)
}

#[cfg(test)]
/// Is the root enclosure tight enough: width at most `2^-bits · max(1, |z|)`.
pub(crate) fn tight(z: &IntervalComplex, bits: u32) -> bool {
    let mag = z.re.abs().hi().clone().max(z.im.abs().hi().clone()).max(Dyadic::one());
    z.width() <= mag.mul(&Dyadic::pow2(-(bits as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        ZPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn golden_roots_are_real_and_ordered() {
        let p = Precision::default();
        let r = anchor_roots(&z(&[-1, -1, 1]), p).unwrap();
        assert!(r.iter().all(|b| b.is_real()));
        assert!((r[0].re.to_f64() - 1.618033988749895).abs() < 1e-12);
        assert!((r[1].re.to_f64() + 0.618033988749895).abs() < 1e-12);
        assert!(tight(&r[0], 200));
    }

    #[test]
    fn gaussian_roots() {
        let p = Precision::default();
        let r = anchor_roots(&z(&[1, 0, 1]), p).unwrap();
        assert!(!r[0].is_real());
        assert!(r[0].im.to_f64() > 0.9 && r[1].im.to_f64() < -0.9);
    }

    #[test]
    fn cubic_mixed_roots_refine() {
        let f = z(&[-2, 0, 0, 1]);
        let a = anchor_roots(&f, Precision::new(64, 4096).unwrap()).unwrap();
        assert!(a[0].is_real());
        let r = refine_roots(&f, &a, Precision::new(1024, 4096).unwrap()).unwrap();
        assert!(tight(&r[0], 1000));
        let c = r[0].re.powi(3, Precision::new(1100, 4096).unwrap());
        assert!(c.contains_rat(&BigRat::from_integer(2.into())));
    }

    #[test]
    fn frexp_is_exact() {
        for x in [1.5f64, -0.1, 3e-30, 12345.678] {
            let (m, e) = frexp(x);
            assert_eq!(m as f64 * 2f64.powi(e as i32), x);
        }
    }
}
