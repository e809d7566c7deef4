use num_traits::{One, Zero};
use proptest::prelude::*;

use transcend::exactmath::{Precision, Verdict};
use transcend::numberfield::{
    basis_change, conjugates, denominator, house, house_linear_constant, integer_coords, liouville_check,
    linear_form_bound, mahler_and_height, minimal_polynomial, mult_matrix, norms, FieldElement, NumberField,
};
use transcend::{BigInt, BigRat, Error};

fn prec() -> Precision {
    Precision::new(128, 4096).unwrap()
}

fn q(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

fn golden() -> (NumberField, FieldElement, FieldElement) {
    let k = NumberField::golden();
    let phi = k.phi().unwrap().unwrap();
    let phibar = k.one() - phi.clone();
    (k, phi, phibar)
}

/// `u + vφ` over the basis `{1, φ}`.
fn elem(k: &NumberField, u: &BigRat, v: &BigRat) -> FieldElement {
    k.from_coords(vec![u.clone(), v.clone()]).unwrap()
}

fn coord() -> impl Strategy<Value = BigRat> {
    (-1000i64..=1000, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

fn pair() -> impl Strategy<Value = (BigRat, BigRat)> {
    (coord(), coord()).prop_filter("nonzero", |(u, v)| !(u.is_zero() && v.is_zero()))
}

#[test]
fn golden_arithmetic() {
    let (k, phi, phibar) = golden();
    assert_eq!(&phi * &phibar, k.from_int(-1));
    assert_eq!(&phi + &phibar, k.one());
    assert_eq!(phi.pow(5).unwrap(), elem(&k, &q(3, 1), &q(5, 1)));
    assert_eq!(k.zero().inv(), Err(Error::DivisionByZero));
}

#[test]
fn minimal_polynomials_and_denominators() {
    let (k, phi, _) = golden();
    let half_root5 = k.sqrt_int(&BigInt::from(5)).unwrap().unwrap().scale(&q(1, 2));
    let coeffs = |a: &FieldElement| minimal_polynomial(a).coeffs().to_vec();
    assert_eq!(coeffs(&phi), vec![BigInt::from(-1), BigInt::from(-1), BigInt::from(1)]);
    assert_eq!(coeffs(&k.from_int(2)), vec![BigInt::from(-2), BigInt::from(1)]);
    assert_eq!(coeffs(&half_root5), vec![BigInt::from(-5), BigInt::from(0), BigInt::from(4)]);
    assert_eq!(denominator(&half_root5), BigInt::from(4));
    assert_eq!(denominator(&k.from_rat(q(1, 2))), BigInt::from(2));
}

#[test]
fn conjugates_norms_and_heights() {
    let (k, phi, _) = golden();
    let c: Vec<f64> = conjugates(&phi, prec()).unwrap().iter().map(|z| z.re.to_f64()).collect();
    assert!(c.iter().any(|x| (x - 1.618_033_988_749_895).abs() < 1e-12));
    assert!(c.iter().any(|x| (x + 0.618_033_988_749_895).abs() < 1e-12));
    assert!((house(&k.from_int(-2), prec()).unwrap().to_f64() - 2.0).abs() < 1e-30);
    assert_eq!(norms(&phi), (q(-1, 1), q(-1, 1)));
    assert_eq!(norms(&k.from_int(3)), (q(3, 1), q(9, 1)));
    let (m, h) = mahler_and_height(&phi, prec()).unwrap();
    assert!((m.to_f64() - 1.618_033_988_749_895).abs() < 1e-12);
    assert!((h.to_f64() - 1.272_019_649_514_069).abs() < 1e-12);
    let (m, _) = mahler_and_height(&k.from_rat(q(1, 2)), prec()).unwrap();
    assert!((m.to_f64() - 2.0).abs() < 1e-30);
}

#[test]
fn liouville_and_linear_forms() {
    let (k, phi, phibar) = golden();
    assert_eq!(liouville_check(&phi, &k.one(), prec()).unwrap(), Verdict::Holds);
    assert_eq!(liouville_check(&phi, &phibar, prec()), Err(Error::ConjugatePair));
    assert_eq!(liouville_check(&k.from_int(2), &k.from_int(3), prec()).unwrap(), Verdict::Holds);
    let root5 = k.sqrt_int(&BigInt::from(5)).unwrap().unwrap();
    for (a, b) in [(0, 1), (1, 0), (9, -4)] {
        assert_eq!(linear_form_bound(&root5, &BigInt::from(a), &BigInt::from(b), prec()).unwrap(), Verdict::Holds);
    }
    assert_eq!(linear_form_bound(&k.from_int(2), &BigInt::from(-2), &BigInt::from(1), prec()), Err(Error::ZeroForm));
}

#[test]
fn house_constants_and_basis_changes() {
    let (k, phi, phibar) = golden();
    let root5 = k.sqrt_int(&BigInt::from(5)).unwrap().unwrap();
    let c = house_linear_constant(&[k.one(), root5.clone()], prec()).unwrap();
    assert!((c.to_f64() - 2.0 * 5f64.sqrt()).abs() < 1e-12);
    let c = house_linear_constant(&[phi.clone(), phibar], prec()).unwrap();
    assert!((c.to_f64() - 2.0 * 1.618_033_988_749_895).abs() < 1e-12);

    let ch = basis_change(&[k.one(), phi.clone()], &[k.from_int(2), phi.scale(&q(2, 1))]).unwrap();
    assert_eq!(ch.q, BigInt::from(4));
    let ch = basis_change(&[k.one(), root5], &[k.one(), phi.clone()]).unwrap();
    assert_eq!(ch.q, BigInt::one());

    let (cs, r) = integer_coords(&phi.pow(5).unwrap(), &[k.one(), phi.clone()]).unwrap();
    assert_eq!((cs, r), (vec![BigInt::from(3), BigInt::from(5)], BigInt::one()));
    assert_eq!(integer_coords(&phi.scale(&q(1, 2)), &[k.one(), phi]), Err(Error::NotIntegerCoords));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn field_norm_matches_the_determinant_oracle((u, v) in pair(), (s, t) in pair()) {
        let (k, _, _) = golden();
        let a = elem(&k, &u, &v);
        let b = elem(&k, &s, &t);
        // multiplication by u + vφ on {1, φ} has matrix [[u, v], [v, u + v]]
        let det = &u * (&u + &v) - &v * &v;
        prop_assert_eq!(norms(&a).1, det.clone());
        prop_assert_eq!(mult_matrix(&a).determinant(), det);
        prop_assert_eq!(norms(&(&a * &b)).1, norms(&a).1 * norms(&b).1);
    }

    #[test]
    fn height_lemmas_are_never_refuted((u, v) in pair(), (s, t) in pair()) {
        let (k, _, _) = golden();
        let a = elem(&k, &u, &v);
        let b = elem(&k, &s, &t);
        let w = prec();
        let (m, h) = mahler_and_height(&a, w).unwrap();
        let deg = minimal_polynomial(&a).degree() as u64;
        prop_assert!(h.powi(deg, w).overlaps(&m));
        let cap = house(&a, w).unwrap().max(&transcend::exactmath::IntervalReal::one()).powi(deg, w);
        let cap = cap.mul(&transcend::exactmath::IntervalReal::from_bigint(&denominator(&a)), w);
        prop_assert!(m.lo() <= cap.hi());

        let hb = mahler_and_height(&b, w).unwrap().1;
        let hab = mahler_and_height(&(&a * &b), w).unwrap().1;
        prop_assert!(hab.lo() <= h.mul(&hb, w).hi());
        let sum = &a + &b;
        if !sum.is_zero() {
            let hs = mahler_and_height(&sum, w).unwrap().1;
            prop_assert!(hs.lo() <= h.mul(&hb, w).mul_2exp(1).hi());
        }
        let hinv = mahler_and_height(&a.inv().unwrap(), w).unwrap().1;
        prop_assert!(hinv.overlaps(&h));
    }

    #[test]
    fn liouville_never_certified_violated((u, v) in pair(), (s, t) in pair()) {
        let (k, _, _) = golden();
        let a = elem(&k, &u, &v);
        let b = elem(&k, &s, &t);
        match liouville_check(&a, &b, prec()) {
            Ok(v) => prop_assert_ne!(v, Verdict::Fails),
            Err(e) => prop_assert!(matches!(e, Error::EqualInputs | Error::ConjugatePair)),
        }
    }

    #[test]
    fn house_of_a_combination_is_bounded(c1 in -1000i64..=1000, c2 in -1000i64..=1000) {
        let (k, phi, _) = golden();
        let basis = [k.one(), phi];
        let comb = &basis[0].scale(&q(c1, 1)) + &basis[1].scale(&q(c2, 1));
        let w = prec();
        let top = transcend::exactmath::IntervalReal::from_int(c1.abs().max(c2.abs()));
        let bound = house_linear_constant(&basis, w).unwrap().mul(&top, w);
        prop_assert!(house(&comb, w).unwrap().lo() <= bound.hi());
    }
}
