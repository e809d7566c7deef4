use num_traits::Zero;
use proptest::prelude::*;

use transcend::exactmath::{iv_compare, iv_from_rat, iv_log2, iv_pow, Cmp, IntervalReal, Precision};
use transcend::{BigInt, BigRat};

fn p(bits: u32) -> Precision {
    Precision::new(bits, 4096).unwrap()
}

fn q(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

fn rat() -> impl Strategy<Value = BigRat> {
    (-10_000i64..10_000, 1i64..500).prop_map(|(n, d)| q(n, d))
}

#[derive(Clone, Debug)]
enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![Just(Op::Add), Just(Op::Sub), Just(Op::Mul), Just(Op::Div)]
}

/// Apply the op sequence exactly and with intervals side by side.
fn run(start: &BigRat, steps: &[(Op, BigRat)], prec: Precision) -> Option<(BigRat, IntervalReal)> {
    let mut exact = start.clone();
    let mut iv = iv_from_rat(start, prec);
    for (o, r) in steps {
        let y = iv_from_rat(r, prec);
        match o {
            Op::Add => {
                exact = &exact + r;
                iv = iv.add(&y, prec);
            }
            Op::Sub => {
                exact = &exact - r;
                iv = iv.sub(&y, prec);
            }
            Op::Mul => {
                exact = &exact * r;
                iv = iv.mul(&y, prec);
            }
            Op::Div => {
                if r.is_zero() {
                    return None;
                }
                exact = &exact / r;
                iv = iv.div(&y, prec).ok()?;
            }
        }
    }
    Some((exact, iv))
}

#[test]
fn known_values() {
    assert!(iv_log2(&IntervalReal::from_int(8), p(64)).unwrap().contains_rat(&q(3, 1)));
    assert!(iv_log2(&IntervalReal::one(), p(64)).unwrap().contains_rat(&BigRat::zero()));
    // log₂ 34 = 5.087462841250339…
    let l = iv_log2(&IntervalReal::from_int(34), p(128)).unwrap();
    assert!(l.width().to_f64() < 1e-30);
    assert!((l.to_f64() - 5.087_462_841_250_339).abs() < 1e-14);
    let half = IntervalReal::from_rat(&q(1, 2), p(64));
    assert!(iv_pow(&IntervalReal::from_int(4), &half, p(64)).unwrap().contains_rat(&q(2, 1)));
    let r = iv_pow(&IntervalReal::from_int(34), &half, p(128)).unwrap();
    assert!((r.to_f64() - 5.830_951_894_845_301).abs() < 1e-14);
    assert!(iv_log2(&IntervalReal::zero(), p(64)).is_err());
}

#[test]
fn rational_enclosure_width() {
    let third = iv_from_rat(&q(1, 3), Precision::new(8, 64).unwrap());
    assert!(third.contains_rat(&q(1, 3)));
    assert!(third.width().to_f64() <= 2f64.powi(-7));
    assert!(iv_from_rat(&q(2, 1), p(8)).is_point());
}

#[test]
fn golden_ratio_beats_its_truncation() {
    let sqrt5 = IntervalReal::from_int(5).sqrt(p(128)).unwrap();
    let phi = sqrt5.add(&IntervalReal::one(), p(128)).mul_2exp(-1);
    assert_eq!(iv_compare(&phi, &iv_from_rat(&q(809, 500), p(128))), Cmp::Greater);
    assert_eq!(iv_compare(&IntervalReal::from_int(1), &IntervalReal::from_int(3)), Cmp::Less);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn exact_result_lies_in_the_enclosure(start in rat(), steps in prop::collection::vec((op(), rat()), 1..8)) {
        if let Some((exact, iv)) = run(&start, &steps, p(64)) {
            prop_assert!(iv.contains_rat(&exact), "{exact} not in {iv:?}");
        }
    }

    #[test]
    fn doubling_precision_never_widens(start in rat(), steps in prop::collection::vec((op(), rat()), 1..6)) {
        let lo = run(&start, &steps, p(64));
        let hi = run(&start, &steps, p(128));
        if let (Some((_, a)), Some((_, b))) = (lo, hi) {
            prop_assert!(b.width() <= a.width());
        }
    }

    #[test]
    fn compare_is_antisymmetric(a in rat(), b in rat(), wa in 0i64..50, wb in 0i64..50) {
        let x = iv_from_rat(&a, p(64)).hull(&iv_from_rat(&(&a + q(wa, 10)), p(64)));
        let y = iv_from_rat(&b, p(64)).hull(&iv_from_rat(&(&b + q(wb, 10)), p(64)));
        let swapped = match iv_compare(&x, &y) {
            Cmp::Less => Cmp::Greater,
            Cmp::Greater => Cmp::Less,
            Cmp::Undecided => Cmp::Undecided,
        };
        prop_assert_eq!(iv_compare(&y, &x), swapped);
    }

    #[test]
    fn log_and_power_contain_float_values(n in 1i64..100_000, e in 1i64..40) {
        let x = IntervalReal::from_int(n);
        let l = iv_log2(&x, p(96)).unwrap();
        prop_assert!((l.to_f64() - (n as f64).log2()).abs() < 1e-9);
        let ex = IntervalReal::from_rat(&q(e, 8), p(96));
        let pw = iv_pow(&x, &ex, p(96)).unwrap();
        let want = (n as f64).powf(e as f64 / 8.0);
        prop_assert!((pw.to_f64() - want).abs() <= 1e-9 * want.max(1.0));
    }
}
