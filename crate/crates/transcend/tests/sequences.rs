use num_traits::{One, Zero};
use proptest::prelude::*;

use transcend::exactmath::Precision;
use transcend::numberfield::{rational_coords, NumberField};
use transcend::sequences::{
    builtin_example, fib, fib_pair, parse_seq, phi_power, sort_elements_by_modulus, ExampleId, ExampleOptions,
    IndexConvention,
};
use transcend::{BigInt, BigRat, Error};

fn int(i: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(i))
}

#[test]
fn fast_doubling_matches_the_recurrence() {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for m in 0..=3000u64 {
        assert_eq!(fib(m), a, "F({m})");
        let t = &a + &b;
        a = std::mem::replace(&mut b, t);
    }
    assert_eq!(fib(9), BigInt::from(34));
    assert_eq!(fib(14), BigInt::from(377));
}

#[test]
fn phi_powers_step_by_multiplication() {
    let k = NumberField::golden();
    let phi = k.phi().unwrap().unwrap();
    let mut acc = k.one();
    for m in 0..=1000i64 {
        let p = phi_power(&k, m).unwrap();
        assert_eq!(p, acc, "φ^{m}");
        acc = &acc * &phi;
    }
    assert_eq!(phi_power(&k, -7).unwrap(), &phi.scale(&int(13)) - &k.from_int(21));
}

#[test]
fn dsl_examples() {
    let k = NumberField::golden();
    let e = parse_seq("F(9^n) * F(9^n + 1)", &k).unwrap();
    assert_eq!(e.eval(1, &k).unwrap(), k.from_int(1870));
    let e = parse_seq("phi^(2*14^n)", &k).unwrap();
    let basis = k.basis_elements();
    let c = rational_coords(&e.eval(1, &k).unwrap(), &basis).unwrap();
    assert_eq!(c, vec![int(196_418), int(317_811)]);
    assert_eq!(parse_seq("F(", &k).unwrap_err(), Error::Parse { pos: 2, msg: "expected an expression".into() });
    assert!(matches!(parse_seq("sqrt(3)", &k), Err(Error::UndefinedSymbol(_))));
}

#[test]
fn two_series_with_phibar_collapses_to_a_power() {
    let opts = ExampleOptions { x: Some("phibar".into()), ..Default::default() };
    let s = builtin_example(ExampleId::TwoSeries, &opts).unwrap();
    let k = &s.field;
    let phibar = k.one() - k.phi().unwrap().unwrap();
    for n in 1..=2u32 {
        let m = 9i64.pow(n) + 1;
        assert_eq!(s.term(n as u64).unwrap().b, phibar.pow(m).unwrap());
    }
}

#[test]
fn builtin_profiles_match_measured_growth() {
    for id in ExampleId::ALL {
        for conv in [IndexConvention::Adjacent, IndexConvention::Nested] {
            let opts = ExampleOptions { convention: conv, ..Default::default() };
            let s = builtin_example(id, &opts).unwrap();
            s.validate_profile().unwrap_or_else(|e| panic!("{id} {conv}: {e}"));
        }
    }
}

#[test]
fn modulus_ordering() {
    let k = NumberField::rationals();
    let v: Vec<_> = [10, 2, 5].iter().map(|&x| k.from_int(x)).collect();
    assert_eq!(sort_elements_by_modulus(&v, Precision::default()).unwrap(), vec![2, 3, 1]);
    let v: Vec<_> = [6, 4].iter().map(|&x| k.from_int(x)).collect();
    assert_eq!(sort_elements_by_modulus(&v, Precision::default()).unwrap(), vec![2, 1]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn doubling_identities(k in 0u64..5000) {
        let (fk, fk1) = fib_pair(k);
        prop_assert_eq!(fib(2 * k), &fk * (&fk1 * 2 - &fk));
        prop_assert_eq!(fib(2 * k + 1), &fk * &fk + &fk1 * &fk1);
    }
}
