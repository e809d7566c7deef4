//! Minimal polynomials, norms, heights and the bound lemmas built on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{FieldElement, NumberField};
use crate::exactmath::{le, refine_verdict, IntervalComplex, IntervalReal, Precision, Verdict};
use crate::{BigRat, Error, QMatrix, QPoly, Result, ZPoly};

/// Primitive integer minimal polynomial, found as the first linear dependence among `1, a, a², …`.
pub fn minimal_polynomial(a: &FieldElement) -> ZPoly {
    let k = a.field();
    let mut cols = vec![k.one().pc];
    let mut cur = k.one();
    for _ in 0..k.degree() {
        cur = &cur * a;
        cols.push(cur.pc.clone());
        let ns = QMatrix::from_cols(&cols).null_space();
        if let Some(v) = ns.into_iter().next() {
            return ZPoly::from_rational(&QPoly::new(v));
        }
    }
    unreachable!("every element satisfies a polynomial of degree at most d")
}

/// Leading coefficient of the minimal polynomial.
pub fn denominator(a: &FieldElement) -> BigInt {
    minimal_polynomial(a).leading()
}

/// Matrix of `v ↦ a·v` in coordinates over the declared basis.
pub fn mult_matrix(a: &FieldElement) -> QMatrix {
    let cols: Vec<Vec<BigRat>> = a.field().basis_elements().iter().map(|x| (a * x).coords()).collect();
    QMatrix::from_cols(&cols)
}

/// `(𝒩(a), 𝒩_K(a))`: product of the conjugates, and its `d/deg a` power.
pub fn norms(a: &FieldElement) -> (BigRat, BigRat) {
    let f = minimal_polynomial(a);
    let deg = f.degree();
    let mut conjprod = BigRat::new(f.coeff(0), f.leading());
    if deg % 2 == 1 {
        conjprod = -conjprod;
    }
    let field_norm = num_traits::pow(conjprod.clone(), a.field().degree() / deg);
    (conjprod, field_norm)
}

/// Group overlapping enclosures; each group is a list of indices.
fn clusters(vals: &[IntervalComplex]) -> Vec<Vec<usize>> {
    let n = vals.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if vals[i].overlaps(&vals[j]) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|g| find(&mut parent, g[0]) == r) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    groups
}

/// The `deg a` distinct conjugates, from the field embeddings with repeats merged.
pub fn conjugates(a: &FieldElement, prec: Precision) -> Result<Vec<IntervalComplex>> {
    let d = a.field().degree();
    let deg = minimal_polynomial(a).degree();
    if deg == d {
        return a.embeddings(prec);
    }
    let mut p = prec;
    loop {
        let vals = a.embeddings(p)?;
        let groups = clusters(&vals);
        if groups.len() == deg && groups.iter().all(|g| g.len() == d / deg) {
            return Ok(groups
                .iter()
                .map(|g| g[1..].iter().fold(vals[g[0]].clone(), |acc, &i| acc.intersect(&vals[i]).unwrap_or(acc)))
                .collect());
        }
        p = p.doubled().ok_or(Error::PrecisionExhausted(p.bits))?;
    }
}

/// Largest modulus over all conjugates.
pub fn house(a: &FieldElement, prec: Precision) -> Result<IntervalReal> {
    let vals = a.embeddings(prec)?;
    Ok(vals.iter().map(|v| v.abs(prec)).reduce(|m, x| m.max(&x)).unwrap())
}

/// Mahler measure `M(a)` and absolute Weil height `H(a) = M(a)^{1/deg a}`.
pub fn mahler_and_height(a: &FieldElement, prec: Precision) -> Result<(IntervalReal, IntervalReal)> {
    let f = minimal_polynomial(a);
    let deg = f.degree();
    let d = a.field().degree();
    let w = prec.extra(16);
    let m = if let Some(r) = a.as_rational() {
        IntervalReal::from_bigint(&r.numer().abs().max(r.denom().clone()))
    } else {
        let one = IntervalReal::one();
        let prod = a
            .embeddings(w)?
            .iter()
            .map(|v| v.abs(w).max(&one))
            .fold(IntervalReal::one(), |acc, x| acc.mul(&x, w));
        let prod = if deg == d { prod } else { prod.pow_rat(&BigRat::new(deg.into(), d.into()), w)? };
        prod.mul(&IntervalReal::from_bigint(&f.leading()), w)
    };
    let h = if deg == 1 { m.clone() } else { m.pow_rat(&BigRat::new(1.into(), deg.into()), w)? };
    Ok((m.round(prec), h.round(prec)))
}

/// Certify `|a − b| ≥ (2H(a)H(b))^{−deg a·deg b}` under the distinguished embedding.
pub fn liouville_check(a: &FieldElement, b: &FieldElement, prec: Precision) -> Result<Verdict> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if a == b {
        return Err(Error::EqualInputs);
    }
    let (fa, fb) = (minimal_polynomial(a), minimal_polynomial(b));
    if fa == fb {
        return Err(Error::ConjugatePair);
    }
    let e = (fa.degree() * fb.degree()) as u64;
    let diff = a - b;
    refine_verdict(prec, |p| {
        let lhs = diff.modulus(p)?;
        let (_, ha) = mahler_and_height(a, p)?;
        let (_, hb) = mahler_and_height(b, p)?;
        let rhs = ha.mul(&hb, p).mul_2exp(1).powi(e, p).recip(p)?;
        Ok(le(&rhs, &lhs))
    })
}

/// Certify `|a + bx| ≥ C·max{|a|, |b|, 1}^{−2 deg x}` with `C = min{(2H(x))^{−deg x}, |x|}`.
pub fn linear_form_bound(x: &FieldElement, a: &BigInt, b: &BigInt, prec: Precision) -> Result<Verdict> {
    if x.is_zero() {
        return Err(Error::Invalid("x must be nonzero".into()));
    }
    let k = x.field();
    let form = k.from_int(a.clone()) + &(x * &k.from_int(b.clone()));
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    let deg = minimal_polynomial(x).degree() as u64;
    let big = a.abs().max(b.abs()).max(BigInt::one());
    refine_verdict(prec, |p| {
        let lhs = form.modulus(p)?;
        let (_, h) = mahler_and_height(x, p)?;
        let c = h.mul_2exp(1).powi(deg, p).recip(p)?.min(&x.modulus(p)?);
        let rhs = c.div(&IntervalReal::from_bigint(&big).powi(2 * deg, p), p)?;
        Ok(le(&rhs, &lhs))
    })
}

/// `count · max house`, a constant for `house(Σ c_i a_i) ≤ C·max|c_i|`.
pub fn house_linear_constant(elems: &[FieldElement], prec: Precision) -> Result<IntervalReal> {
    let mut best: Option<IntervalReal> = None;
    for e in elems {
        let h = house(e, prec)?;
        best = Some(match best {
            Some(b) => b.max(&h),
            None => h,
        });
    }
    let best = best.ok_or_else(|| Error::Invalid("empty element list".into()))?;
    Ok(best.mul(&IntervalReal::from_int(elems.len() as i64), prec))
}

/// Greedy independent subset of `xs` extended by powers of `θ` to a basis.
/// Returns the chosen indices into `xs` and the inverse of the extended basis matrix.
fn extended_basis(k: &NumberField, xs: &[FieldElement]) -> Result<(Vec<usize>, QMatrix)> {
    let d = k.degree();
    let mut cols: Vec<Vec<BigRat>> = Vec::new();
    let mut chosen = Vec::new();
    for (i, x) in xs.iter().enumerate() {
        if x.field() != k {
            return Err(Error::FieldMismatch);
        }
        cols.push(x.pc.clone());
        if QMatrix::from_cols(&cols).rank() == cols.len() {
            chosen.push(i);
        } else {
            cols.pop();
        }
        if cols.len() == d {
            break;
        }
    }
    for j in 0..d {
        if cols.len() == d {
            break;
        }
        let mut e = vec![BigRat::zero(); d];
        e[j] = BigRat::one();
        cols.push(e);
        if QMatrix::from_cols(&cols).rank() < cols.len() {
            cols.pop();
        }
    }
    let inv = QMatrix::from_cols(&cols).inverse().expect("extended basis is invertible");
    Ok((chosen, inv))
}

/// Rational coordinates of `a` over `xs` (zero on dependent members), or `NotInSpan`.
fn span_coords(a: &FieldElement, chosen: &[usize], inv: &QMatrix, n: usize) -> Result<Vec<BigRat>> {
    let full = inv.mul_vec(&a.pc);
    if full[chosen.len()..].iter().any(|c| !c.is_zero()) {
        return Err(Error::NotInSpan);
    }
    let mut out = vec![BigRat::zero(); n];
    for (slot, &i) in chosen.iter().enumerate() {
        out[i] = full[slot].clone();
    }
    Ok(out)
}

/// Result of rewriting one generating family over another with a common integer denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChange {
    pub q: BigInt,
    /// row `i` holds the integer coefficients of `x_i` over `x'_j / Q`
    pub transform: QMatrix,
}

/// Express each `x_i` as `Σ_j T_ij · x'_j / Q` with integer `T_ij`, where `Q` is the product
/// of the denominators of the rational expansion coefficients.
pub fn basis_change(x: &[FieldElement], xp: &[FieldElement]) -> Result<BasisChange> {
    let k = xp.first().or(x.first()).ok_or_else(|| Error::Invalid("empty element list".into()))?.field().clone();
    let (chosen, inv) = extended_basis(&k, xp)?;
    let mut rows = Vec::with_capacity(x.len());
    for xi in x {
        if xi.field() != &k {
            return Err(Error::FieldMismatch);
        }
        rows.push(span_coords(xi, &chosen, &inv, xp.len())?);
    }
    let q = rows.iter().flatten().fold(BigInt::one(), |acc, r| acc * r.denom());
    let qr = BigRat::from_integer(q.clone());
    let transform = QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|c| c * &qr).collect()).collect());
    for (i, xi) in x.iter().enumerate() {
        let mut acc = k.zero();
        for (j, xj) in xp.iter().enumerate() {
            acc = acc + xj.scale(&(&transform[(i, j)] / &qr));
        }
        if &acc != xi {
            return Err(Error::Invalid("basis change failed its exactness check".into()));
        }
    }
    Ok(BasisChange { q, transform })
}

/// Rational coordinates of `a` over `basis` (zero on dependent members), or `NotInSpan`.
pub fn rational_coords(a: &FieldElement, basis: &[FieldElement]) -> Result<Vec<BigRat>> {
    let (chosen, inv) = extended_basis(a.field(), basis)?;
    span_coords(a, &chosen, &inv, basis.len())
}

/// Integer coordinates of `a` over `basis` and their gcd (zero for the zero element).
pub fn integer_coords(a: &FieldElement, basis: &[FieldElement]) -> Result<(Vec<BigInt>, BigInt)> {
    let (chosen, inv) = extended_basis(a.field(), basis)?;
    let rc = span_coords(a, &chosen, &inv, basis.len())?;
    if rc.iter().any(|c| !c.is_integer()) {
        return Err(Error::NotIntegerCoords);
    }
    let ic: Vec<BigInt> = rc.into_iter().map(|c| c.to_integer()).collect();
    let r = ic.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    Ok((ic, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::{rat, ratio};

    fn golden() -> (NumberField, FieldElement, FieldElement) {
        let k = NumberField::golden();
        let phi = k.generator();
        let s5 = k.sqrt_int(&5.into()).unwrap().unwrap();
        (k, phi, s5)
    }

    fn zp(c: &[i64]) -> ZPoly {
        ZPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn minimal_polynomials() {
        let (k, phi, s5) = golden();
        assert_eq!(minimal_polynomial(&phi), zp(&[-1, -1, 1]));
        assert_eq!(minimal_polynomial(&k.from_int(2)), zp(&[-2, 1]));
        let half = s5.scale(&ratio(1, 2));
        assert_eq!(minimal_polynomial(&half), zp(&[-5, 0, 4]));
        assert_eq!(denominator(&half), BigInt::from(4));
        assert_eq!(denominator(&k.from_rat(ratio(1, 2))), BigInt::from(2));
        assert_eq!(denominator(&phi), BigInt::one());
    }

    #[test]
    fn norm_values() {
        let (k, phi, _) = golden();
        assert_eq!(norms(&phi), (rat(-1), rat(-1)));
        assert_eq!(norms(&k.from_int(3)), (rat(3), rat(9)));
        let a = k.from_int(7) - &phi.scale(&rat(3));
        assert_eq!(norms(&a).1, mult_matrix(&a).determinant());
    }

    #[test]
    fn conjugates_and_house() {
        let p = Precision::default();
        let (k, phi, s5) = golden();
        let c = conjugates(&phi, p).unwrap();
        assert!((c[0].re.to_f64() - 1.6180339887).abs() < 1e-9);
        assert!((c[1].re.to_f64() + 0.6180339887).abs() < 1e-9);
        let three = conjugates(&k.from_int(3), p).unwrap();
        assert_eq!(three.len(), 1);
        assert!(three[0].re.contains_rat(&rat(3)));
        assert!((house(&s5, p).unwrap().to_f64() - 5f64.sqrt()).abs() < 1e-12);
        assert!(house(&k.from_int(-2), p).unwrap().contains_rat(&rat(2)));
        assert!((house(&phi, p).unwrap().to_f64() - 1.6180339887).abs() < 1e-9);
    }

    #[test]
    fn mahler_measures() {
        let p = Precision::default();
        let (k, phi, _) = golden();
        let (m, h) = mahler_and_height(&phi, p).unwrap();
        assert!((m.to_f64() - 1.618033988749895).abs() < 1e-12);
        assert!((h.to_f64() - 1.272019649514069).abs() < 1e-12);
        let (m2, h2) = mahler_and_height(&k.from_int(2), p).unwrap();
        assert!(m2.contains_rat(&rat(2)) && h2.contains_rat(&rat(2)));
        let (mh, _) = mahler_and_height(&k.from_rat(ratio(1, 2)), p).unwrap();
        assert!(mh.contains_rat(&rat(2)));
    }

    #[test]
    fn liouville_cases() {
        let p = Precision::default();
        let (k, phi, _) = golden();
        let phibar = k.one() - &phi;
        assert_eq!(liouville_check(&phi, &k.one(), p), Ok(Verdict::Holds));
        assert_eq!(liouville_check(&phi, &phibar, p), Err(Error::ConjugatePair));
        assert_eq!(liouville_check(&phi, &phi, p), Err(Error::EqualInputs));
        assert_eq!(liouville_check(&k.from_int(2), &k.from_int(3), p), Ok(Verdict::Holds));
    }

    #[test]
    fn linear_forms() {
        let p = Precision::default();
        let (_, _, s5) = golden();
        let b = |a: i64, bb: i64| linear_form_bound(&s5, &a.into(), &bb.into(), p);
        assert_eq!(b(0, 1), Ok(Verdict::Holds));
        assert_eq!(b(1, 0), Ok(Verdict::Holds));
        assert_eq!(b(9, -4), Ok(Verdict::Holds));
        let k = s5.field().clone();
        assert_eq!(linear_form_bound(&k.from_int(2), &2.into(), &(-1).into(), p), Err(Error::ZeroForm));
    }

    #[test]
    fn house_constants() {
        let p = Precision::default();
        let (k, phi, s5) = golden();
        let c = house_linear_constant(&[k.one(), s5], p).unwrap();
        assert!((c.to_f64() - 2.0 * 5f64.sqrt()).abs() < 1e-12);
        assert!(house_linear_constant(&[k.one()], p).unwrap().contains_rat(&rat(1)));
        let phibar = k.one() - &phi;
        let c2 = house_linear_constant(&[phi, phibar], p).unwrap();
        assert!((c2.to_f64() - 2.0 * 1.618033988749895).abs() < 1e-12);
    }

    #[test]
    fn basis_changes() {
        let (k, phi, s5) = golden();
        let one = k.one();
        let id = basis_change(&[one.clone(), phi.clone()], &[one.clone(), phi.clone()]).unwrap();
        assert_eq!(id.q, BigInt::one());
        assert_eq!(id.transform, QMatrix::identity(2));
        let two = k.from_int(2);
        let halved = basis_change(&[one.clone(), phi.clone()], &[two.clone(), &phi * &two]).unwrap();
        assert_eq!(halved.q, BigInt::from(4));
        assert_eq!(halved.transform, QMatrix::from_rows(vec![vec![rat(2), rat(0)], vec![rat(0), rat(2)]]));
        let r = basis_change(&[one.clone(), s5], &[one.clone(), phi.clone()]).unwrap();
        assert_eq!(r.q, BigInt::one());
        assert_eq!(r.transform, QMatrix::from_rows(vec![vec![rat(1), rat(0)], vec![rat(-1), rat(2)]]));
        assert_eq!(basis_change(&[phi], &[one]), Err(Error::NotInSpan));
    }

    #[test]
    fn integer_coordinates() {
        let (k, phi, _) = golden();
        let basis = [k.one(), phi.clone()];
        let a = phi.pow(5).unwrap();
        assert_eq!(integer_coords(&a, &basis), Ok((vec![3.into(), 5.into()], BigInt::one())));
        assert_eq!(integer_coords(&k.from_int(6), &basis), Ok((vec![6.into(), 0.into()], 6.into())));
        assert_eq!(integer_coords(&phi.scale(&ratio(1, 2)), &basis), Err(Error::NotIntegerCoords));
        assert_eq!(integer_coords(&phi, &[k.one()]), Err(Error::NotInSpan));
    }
}
