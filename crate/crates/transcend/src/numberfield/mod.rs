//! Exact arithmetic in a number field `Q(θ)` given by the minimal polynomial of `θ`
//! and a declared basis, plus the heights, norms and bound lemmas built on it.

mod galois;
mod invariants;
mod io;
mod roots;

pub use galois::Automorphism;
pub use invariants::{
    basis_change, conjugates, denominator, house, house_linear_constant, integer_coords, liouville_check,
    linear_form_bound, mahler_and_height, minimal_polynomial, mult_matrix, norms, rational_coords, BasisChange,
};
pub use io::{parse_rat, FieldSpec, Literal};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactmath::{Dyadic, IntervalComplex, IntervalReal, Precision};
use crate::{BigRat, Error, QMatrix, Result, ZPoly};

/// A number field of degree `d` with a declared basis and a distinguished embedding.
#[derive(Clone)]
pub struct NumberField(Arc<FieldInner>);

struct FieldInner {
    minpoly: ZPoly,
    d: usize,
    /// columns are the basis elements in power coordinates
    basis: QMatrix,
    basis_inv: QMatrix,
    power_basis: bool,
    /// `X^(d+k) mod minpoly` for `k < d - 1`, in power coordinates
    reduction: Vec<Vec<BigRat>>,
    dist: usize,
    assume_irreducible: bool,
    anchors: Vec<IntervalComplex>,
    roots: Mutex<BTreeMap<u32, Arc<Vec<IntervalComplex>>>>,
    /// images of `θ` under the automorphisms, in power coordinates
    galois: OnceLock<Option<Vec<Vec<BigRat>>>>,
}

fn q(i: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(i))
}

fn rat_poly_rem(p: &[BigRat], f: &[BigRat]) -> Vec<BigRat> {
    let d = f.len() - 1;
    let mut r = p.to_vec();
    let lc = f[d].clone();
    for k in (d..r.len()).rev() {
        if r[k].is_zero() {
            continue;
        }
        let c = &r[k] / &lc;
        for j in 0..=d {
            let v = &r[k - d + j] - &c * &f[j];
            r[k - d + j] = v;
        }
    }
    r.truncate(d);
    r.resize(d, BigRat::zero());
    r
}

/// Does the polynomial (degree 2 or 3) have a rational root?
fn has_rational_root(f: &ZPoly, anchors: &[IntervalComplex]) -> Result<bool> {
    let lc = f.leading();
    let lc_u = lc.to_u64().ok_or_else(|| {
        Error::InvalidField("leading coefficient too large for the rational-root test; set assume_irreducible".into())
    })?;
    if lc_u > 1_000_000_000_000 {
        return Err(Error::InvalidField(
            "leading coefficient too large for the rational-root test; set assume_irreducible".into(),
        ));
    }
    let divisors: Vec<u64> = (1..=((lc_u as f64).sqrt() as u64 + 1))
        .filter(|k| *k <= lc_u && lc_u % k == 0)
        .flat_map(|k| [k, lc_u / k])
        .collect();
    let fq = f.to_rational();
    for r in anchors.iter().filter(|r| r.is_real()) {
        for &den in &divisors {
            let den_b = BigInt::from(den);
            let lo: BigInt = r.re.lo().mul(&Dyadic::from_bigint(&den_b)).floor_int() - 1;
            let hi: BigInt = r.re.hi().mul(&Dyadic::from_bigint(&den_b)).ceil_int() + 1;
            let mut p = lo;
            while p <= hi {
                if fq.eval(&BigRat::new(p.clone(), den_b.clone())).is_zero() {
                    return Ok(true);
                }
                p += 1;
            }
        }
    }
    Ok(false)
}

impl NumberField {
    /// Build a field from the integer coefficients `c_0..c_d` of the minimal polynomial of `θ`,
    /// the basis as rational vectors in powers of `θ` (power basis when `None`), and the index
    /// of the distinguished embedding (largest real root when `None`).
    pub fn new(
        minpoly: Vec<BigInt>,
        basis: Option<Vec<Vec<BigRat>>>,
        dist: Option<usize>,
        assume_irreducible: bool,
    ) -> Result<Self> {
        let f = ZPoly::new(minpoly).primitive();
        if f.is_zero() || f.degree() == 0 {
            return Err(Error::InvalidField("minimal polynomial must have degree at least 1".into()));
        }
        let d = f.degree();
        let anchor_prec = Precision::new(64, 1 << 16).unwrap();
        let anchors = roots::anchor_roots(&f, anchor_prec)
            .ok_or_else(|| Error::InvalidField("could not isolate the roots of the minimal polynomial".into()))?;
        match d {
            1 => {}
            2 | 3 => {
                if has_rational_root(&f, &anchors)? {
                    return Err(Error::InvalidField(format!("{f} is reducible over the rationals")));
                }
            }
            _ if !assume_irreducible => {
                return Err(Error::InvalidField(
                    "irreducibility is only checked up to degree 3; set assume_irreducible".into(),
                ))
            }
            _ => {}
        }
        let (basis_m, power_basis) = match basis {
            None => (QMatrix::identity(d), true),
            Some(b) => {
                if b.len() != d || b.iter().any(|v| v.len() != d) {
                    return Err(Error::InvalidField(format!("basis must be {d} vectors of length {d}")));
                }
                let m = QMatrix::from_cols(&b);
                let id = m == QMatrix::identity(d);
                (m, id)
            }
        };
        let basis_inv = basis_m
            .inverse()
            .ok_or_else(|| Error::InvalidField("basis vectors are linearly dependent".into()))?;
        let dist = match dist {
            Some(k) if k < d => k,
            Some(k) => return Err(Error::InvalidField(format!("embedding index {k} out of range"))),
            None => {
                if anchors[0].is_real() {
                    0
                } else {
                    return Err(Error::InvalidField(
                        "no real embedding; choose distinguished_embedding explicitly".into(),
                    ));
                }
            }
        };
        let fq: Vec<BigRat> = f.coeffs().iter().map(|c| BigRat::from_integer(c.clone())).collect();
        let reduction = (0..d.saturating_sub(1))
            .map(|k| {
                let mut mono = vec![BigRat::zero(); d + k + 1];
                mono[d + k] = BigRat::one();
                rat_poly_rem(&mono, &fq)
            })
            .collect();
        Ok(NumberField(Arc::new(FieldInner {
            minpoly: f,
            d,
            basis: basis_m,
            basis_inv,
            power_basis,
            reduction,
            dist,
            assume_irreducible,
            anchors,
            roots: Mutex::new(BTreeMap::new()),
            galois: OnceLock::new(),
        })))
    }

    /// `Q(√5)` generated by the golden ratio `φ`, basis `{1, φ}`, real embedding `φ ≈ 1.618`.
    pub fn golden() -> Self {
        NumberField::new(vec![(-1).into(), (-1).into(), 1.into()], None, None, false).expect("golden field")
    }

    /// The rationals as a degree-one field.
    pub fn rationals() -> Self {
        NumberField::new(vec![0.into(), 1.into()], None, None, false).expect("rational field")
    }

    pub fn degree(&self) -> usize {
        self.0.d
    }

    pub fn minpoly(&self) -> &ZPoly {
        &self.0.minpoly
    }

    pub fn distinguished(&self) -> usize {
        self.0.dist
    }

    pub fn assumes_irreducible(&self) -> bool {
        self.0.assume_irreducible
    }

    pub fn is_power_basis(&self) -> bool {
        self.0.power_basis
    }

    /// Basis vectors in powers of `θ`.
    pub fn basis_vectors(&self) -> Vec<Vec<BigRat>> {
        (0..self.0.d).map(|j| self.0.basis.col(j)).collect()
    }

    pub fn same(&self, o: &NumberField) -> bool {
        Arc::ptr_eq(&self.0, &o.0)
            || (self.0.minpoly == o.0.minpoly && self.0.basis == o.0.basis && self.0.dist == o.0.dist)
    }

    /// Copy of this field with another distinguished embedding.
    pub fn with_distinguished(&self, k: usize) -> Result<Self> {
        NumberField::new(
            self.0.minpoly.coeffs().to_vec(),
            Some(self.basis_vectors()),
            Some(k),
            self.0.assume_irreducible,
        )
    }

    /// Certified root enclosures (one per embedding, canonical order) at about `bits` bits.
    pub fn roots(&self, bits: u32) -> Result<Arc<Vec<IntervalComplex>>> {
        if let Some((_, r)) = self.0.roots.lock().unwrap().range(bits..).next() {
            return Ok(r.clone());
        }
        let prec = Precision { bits, max_bits: bits.max(1 << 16) };
        let r = if self.0.d == 1 {
            roots::isolate(&self.0.minpoly, None, prec)
        } else {
            roots::refine_roots(&self.0.minpoly, &self.0.anchors, prec)
        }
        .ok_or(Error::PrecisionExhausted(bits))?;
        let r = Arc::new(r);
        self.0.roots.lock().unwrap().insert(bits, r.clone());
        Ok(r)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), pc: vec![BigRat::zero(); self.0.d] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rat(BigRat::one())
    }

    pub fn from_int(&self, i: impl Into<BigInt>) -> FieldElement {
        self.from_rat(BigRat::from_integer(i.into()))
    }

    pub fn from_rat(&self, r: BigRat) -> FieldElement {
        let mut pc = vec![BigRat::zero(); self.0.d];
        pc[0] = r;
        FieldElement { field: self.clone(), pc }
    }

    /// The generator `θ`.
    pub fn generator(&self) -> FieldElement {
        let mut pc = vec![BigRat::zero(); self.0.d];
        if self.0.d == 1 {
            pc[0] = BigRat::new(-self.0.minpoly.coeff(0), self.0.minpoly.coeff(1));
        } else {
            pc[1] = BigRat::one();
        }
        FieldElement { field: self.clone(), pc }
    }

    /// The `i`-th declared basis element.
    pub fn basis_element(&self, i: usize) -> FieldElement {
        FieldElement { field: self.clone(), pc: self.0.basis.col(i) }
    }

    pub fn basis_elements(&self) -> Vec<FieldElement> {
        (0..self.0.d).map(|i| self.basis_element(i)).collect()
    }

    /// Element with the given coordinates over the declared basis.
    pub fn from_coords(&self, coords: Vec<BigRat>) -> Result<FieldElement> {
        if coords.len() != self.0.d {
            return Err(Error::Invalid(format!("expected {} coordinates", self.0.d)));
        }
        let pc = if self.0.power_basis { coords } else { self.0.basis.mul_vec(&coords) };
        Ok(FieldElement { field: self.clone(), pc })
    }

    pub fn from_int_coords(&self, coords: &[BigInt]) -> Result<FieldElement> {
        self.from_coords(coords.iter().map(|c| BigRat::from_integer(c.clone())).collect())
    }

    /// Element with the given coordinates in powers of `θ`.
    pub fn from_power_coords(&self, pc: Vec<BigRat>) -> Result<FieldElement> {
        if pc.len() != self.0.d {
            return Err(Error::Invalid(format!("expected {} coordinates", self.0.d)));
        }
        Ok(FieldElement { field: self.clone(), pc })
    }

    /// A square root of the integer `k` inside the field, positive (or upper half-plane)
    /// under the distinguished embedding; `None` when `√k` is not in the field.
    pub fn sqrt_int(&self, k: &BigInt) -> Result<Option<FieldElement>> {
        if k.is_zero() {
            return Ok(Some(self.zero()));
        }
        if !k.is_negative() {
            let s = num_integer::Roots::sqrt(k);
            if &(&s * &s) == k {
                return Ok(Some(self.from_int(s)));
            }
        }
        if self.0.d != 2 {
            return Ok(None);
        }
        // (2aθ + b)^2 = b^2 - 4ac
        let (c, b, a) = (self.0.minpoly.coeff(0), self.0.minpoly.coeff(1), self.0.minpoly.coeff(2));
        let disc = &b * &b - BigInt::from(4) * &a * &c;
        let ratio = BigRat::new(k.clone(), disc.clone());
        if ratio.is_negative() {
            return Ok(None);
        }
        let (n, dd) = (ratio.numer(), ratio.denom());
        let (sn, sd) = (num_integer::Roots::sqrt(n), num_integer::Roots::sqrt(dd));
        if &(&sn * &sn) != n || &(&sd * &sd) != dd {
            return Ok(None);
        }
        let scale = BigRat::new(sn, sd);
        let root_disc = self.from_power_coords(vec![BigRat::from_integer(b), BigRat::from_integer(&a * 2)])?;
        let mut s = root_disc * &self.from_rat(scale);
        let v = s.value(Precision::new(64, 4096).unwrap())?;
        let flip = if v.is_real() { v.re.is_negative() } else { v.im.is_negative() };
        if flip {
            s = -s;
        }
        Ok(Some(s))
    }

    /// Golden ratio `(1 + √5)/2` as an element, when `√5` is in the field.
    pub fn phi(&self) -> Result<Option<FieldElement>> {
        Ok(self.sqrt_int(&BigInt::from(5))?.map(|s| (s + self.one()) * &self.from_rat(BigRat::new(1.into(), 2.into()))))
    }

    /// Automorphisms of the field when it is Galois, `None` otherwise.
    pub fn automorphisms(&self) -> Option<Vec<Automorphism>> {
        let images = self.0.galois.get_or_init(|| galois::automorphism_images(self)).clone()?;
        Some(images.into_iter().map(|pc| Automorphism::new(FieldElement { field: self.clone(), pc })).collect())
    }

    fn mul_pc(&self, a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
        let d = self.0.d;
        let mut prod = vec![BigRat::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        let mut out: Vec<BigRat> = prod[..d].to_vec();
        for (k, c) in prod[d..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(&self.0.reduction[k]) {
                if !r.is_zero() {
                    *o += c * r;
                }
            }
        }
        out
    }
}

impl PartialEq for NumberField {
    fn eq(&self, o: &Self) -> bool {
        self.same(o)
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({}, embedding {})", self.0.minpoly, self.0.dist)
    }
}

/// Exact element of a [`NumberField`].
#[derive(Clone)]
pub struct FieldElement {
    field: NumberField,
    /// coordinates in powers of `θ`
    pc: Vec<BigRat>,
}

/// Arithmetic selector for [`elem_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic.
pub fn elem_arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn power_coords(&self) -> &[BigRat] {
        &self.pc
    }

    /// Coordinates over the declared basis.
    pub fn coords(&self) -> Vec<BigRat> {
        if self.field.0.power_basis {
            self.pc.clone()
        } else {
            self.field.0.basis_inv.mul_vec(&self.pc)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.pc.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.pc[0].is_one() && self.pc[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRat> {
        if self.field.0.d == 1 {
            return Some(self.pc[0].clone());
        }
        self.pc[1..].iter().all(|c| c.is_zero()).then(|| self.pc[0].clone())
    }

    fn check(&self, o: &FieldElement) -> Result<()> {
        if self.field.same(&o.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, o: &FieldElement) -> Result<FieldElement> {
        self.check(o)?;
        Ok(FieldElement { field: self.field.clone(), pc: self.pc.iter().zip(&o.pc).map(|(a, b)| a + b).collect() })
    }

    pub fn checked_sub(&self, o: &FieldElement) -> Result<FieldElement> {
        self.check(o)?;
        Ok(FieldElement { field: self.field.clone(), pc: self.pc.iter().zip(&o.pc).map(|(a, b)| a - b).collect() })
    }

    pub fn checked_mul(&self, o: &FieldElement) -> Result<FieldElement> {
        self.check(o)?;
        if let Some(r) = o.as_rational() {
            return Ok(self.scale(&r));
        }
        if let Some(r) = self.as_rational() {
            return Ok(o.scale(&r));
        }
        Ok(FieldElement { field: self.field.clone(), pc: self.field.mul_pc(&self.pc, &o.pc) })
    }

    pub fn checked_div(&self, o: &FieldElement) -> Result<FieldElement> {
        self.check(o)?;
        self.checked_mul(&o.inv()?)
    }

    pub fn scale(&self, r: &BigRat) -> FieldElement {
        FieldElement { field: self.field.clone(), pc: self.pc.iter().map(|c| c * r).collect() }
    }

    /// Multiplicative inverse by an exact linear solve with the multiplication matrix.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(self.field.from_rat(r.recip()));
        }
        let d = self.field.0.d;
        let cols: Vec<Vec<BigRat>> = (0..d)
            .map(|j| {
                let mut e = vec![BigRat::zero(); d];
                e[j] = BigRat::one();
                self.field.mul_pc(&self.pc, &e)
            })
            .collect();
        let m = QMatrix::from_cols(&cols);
        let mut rhs = vec![BigRat::zero(); d];
        rhs[0] = BigRat::one();
        let x = m.solve(&rhs).ok_or(Error::DivisionByZero)?;
        Ok(FieldElement { field: self.field.clone(), pc: x })
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(base.pow_u(&BigInt::from(e.unsigned_abs())))
    }

    /// Nonnegative power by repeated squaring.
    pub fn pow_u(&self, e: &BigInt) -> FieldElement {
        if let Some(r) = self.as_rational() {
            let k = e.to_u32().expect("exponent too large for a rational power");
            return self.field.from_rat(num_traits::pow(r, k as usize));
        }
        let mut acc = self.field.one();
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = &acc * &acc;
            if e.bit(i) {
                acc = &acc * self;
            }
        }
        acc
    }

    fn eval_at(&self, root: &IntervalComplex, w: Precision) -> IntervalComplex {
        let mut acc = IntervalComplex::zero();
        for c in self.pc.iter().rev() {
            acc = acc.mul(root, w).add(&IntervalComplex::from_rat(c, w), w);
        }
        acc
    }

    fn coord_bits(&self) -> u32 {
        self.pc.iter().map(|c| c.numer().bits().max(c.denom().bits())).max().unwrap_or(0) as u32
    }

    /// Value under embedding `k`, refined until its relative width is below `2^-bits`
    /// or the working precision reaches `max_bits` plus the coordinate size.
    pub fn embed(&self, k: usize, prec: Precision) -> Result<IntervalComplex> {
        if let Some(r) = self.as_rational() {
            return Ok(IntervalComplex::from_rat(&r, prec.extra(8)));
        }
        let cb = self.coord_bits();
        let cap = prec.max_bits.saturating_add(cb);
        let mut w = (prec.bits + 32 + cb).min(cap);
        loop {
            let roots = self.field.roots(w + 16)?;
            let v = self.eval_at(&roots[k], prec.with_bits(w));
            if rel_tight(&v, prec.bits) || w >= cap {
                return Ok(v);
            }
            w = w.saturating_mul(2).min(cap);
        }
    }

    /// Value under the distinguished embedding.
    pub fn value(&self, prec: Precision) -> Result<IntervalComplex> {
        self.embed(self.field.0.dist, prec)
    }

    /// `|a|` under the distinguished embedding.
    pub fn modulus(&self, prec: Precision) -> Result<IntervalReal> {
        Ok(self.value(prec)?.abs(prec))
    }

    /// Values under all embeddings, with accuracy relative to the largest modulus.
    pub fn embeddings(&self, prec: Precision) -> Result<Vec<IntervalComplex>> {
        let d = self.field.0.d;
        if let Some(r) = self.as_rational() {
            return Ok(vec![IntervalComplex::from_rat(&r, prec.extra(8)); d]);
        }
        let cb = self.coord_bits();
        let cap = prec.max_bits.saturating_add(cb);
        let mut w = (prec.bits + 32 + cb).min(cap);
        loop {
            let roots = self.field.roots(w + 16)?;
            let vals: Vec<IntervalComplex> = roots.iter().map(|r| self.eval_at(r, prec.with_bits(w))).collect();
            let p64 = prec.with_bits(64);
            let big = vals.iter().max_by(|a, b| a.abs(p64).hi().cmp(b.abs(p64).hi())).unwrap();
            if rel_tight(big, prec.bits) || w >= cap {
                return Ok(vals);
            }
            w = w.saturating_mul(2).min(cap);
        }
    }
}

/// Nonzero enclosure whose width is at most `2^-bits` times its smallest modulus.
fn rel_tight(v: &IntervalComplex, bits: u32) -> bool {
    if v.contains_zero() {
        return false;
    }
    let mag = v.abs(Precision { bits: 64, max_bits: 64 });
    v.width() <= mag.lo().mul(&Dyadic::pow2(-(bits as i64)))
}

impl PartialEq for FieldElement {
    fn eq(&self, o: &Self) -> bool {
        self.field.same(&o.field) && self.pc == o.pc
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.pc.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "θ".to_string(),
                _ => format!("θ^{i}"),
            };
            let coef = if c.is_one() && i > 0 { String::new() } else if *c == -BigRat::one() && i > 0 { "-".into() } else { c.to_string() };
            parts.push(format!("{coef}{mono}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            /// Panics when the operands live in different fields.
            fn $m(self, o: &FieldElement) -> FieldElement {
                self.$checked(o).expect("field mismatch")
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: &FieldElement) -> FieldElement {
                (&self).$m(o)
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement {
                (&self).$m(&o)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field, pc: self.pc.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -(self.clone())
    }
}

/// Integer as a rational.
pub fn rat(i: i64) -> BigRat {
    q(i)
}

/// `p/q` as a rational.
pub fn ratio(p: i64, d: i64) -> BigRat {
    BigRat::new(p.into(), d.into())
}
