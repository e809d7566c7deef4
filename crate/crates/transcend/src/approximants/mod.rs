//! Partial sums, certified sum enclosures, the `Z_N` quantity and the tail lemmas used in
//! the transcendence proofs. The `(q, p)` approximant constructions live in `construct`.

mod construct;

pub use construct::{build_q_p_general, build_q_p_rational, height_bound_sn, Approximant, RationalParams};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactmath::{certify, le, lt, IntervalComplex, IntervalReal, Precision, Verdict};
use crate::numberfield::FieldElement;
use crate::sequences::SequenceSpec;
use crate::{BigRat, Error, Result};

/// Number of consecutive ratios checked before a geometric tail majorant is trusted.
const RATIO_WINDOW: u64 = 3;
/// Give up on closing the tail after this many explicit terms.
const MAX_EXPLICIT_TERMS: u64 = 64;
/// Stop chasing the width target after this many explicit terms once the ratio is certified.
const SOFT_EXPLICIT_TERMS: u64 = 8;

/// Exact `s_N = Σ_{n<N} b_n/(a_n c_n)`.
pub fn partial_sum(spec: &SequenceSpec, n: u64) -> Result<FieldElement> {
    if n == 0 {
        return Err(Error::Invalid("N must be at least 1".into()));
    }
    let mut s = spec.field.zero();
    for m in 1..n {
        let t = spec.term(m)?;
        let den = t.a.scale(&BigRat::from_integer(t.c));
        s = &s + &t.b.checked_div(&den)?;
    }
    Ok(s)
}

/// Enclosure of the summand at `n`. When the direct enclosure is too loose (cancellation
/// inside `b_n`), the term is formed exactly, provided it is small enough to form.
pub(crate) fn summand_value(spec: &SequenceSpec, n: u64, prec: Precision) -> Result<IntervalComplex> {
    let direct = spec.summand(n, prec);
    if let Ok(z) = &direct {
        let m = z.abs(prec);
        if m.lo().is_positive() && m.width() <= m.lo().mul_2exp(-((prec.bits / 2) as i64)) {
            return direct;
        }
    }
    if spec.check_ceiling(n).is_ok() {
        let t = spec.term(n)?;
        let v = t.b.checked_div(&t.a.scale(&BigRat::from_integer(t.c)))?;
        return v.value(prec);
    }
    direct
}

/// `|t_{m+1}| ≤ |t_m|/2` for every `m` in `[n, n + RATIO_WINDOW)`.
fn ratio_certified(spec: &SequenceSpec, n: u64, prec: Precision) -> Result<bool> {
    for m in n..n + RATIO_WINDOW {
        let v = certify(prec, |p| {
            let cur = summand_value(spec, m, p)?.abs(p).mul_2exp(-1);
            let next = summand_value(spec, m + 1, p)?.abs(p);
            Ok(le(&next, &cur))
        });
        match v {
            Ok(Verdict::Holds) => {}
            Ok(_) | Err(Error::Eval(_)) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// Enclosure of `Σ_{n≥N} b_n/(a_n c_n)`: explicit terms up to some `N₁`, then a disk of
/// radius `2|t_{N₁}|`. The majorant is used only once the term ratio is certified below
/// `1/2` on a window starting at `N₁`; beyond the window the declared double-exponential
/// growth profile keeps the ratio falling.
pub fn tail_enclosure(spec: &SequenceSpec, n: u64, prec: Precision) -> Result<IntervalComplex> {
    if n == 0 {
        return Err(Error::Invalid("N must be at least 1".into()));
    }
    let first = summand_value(spec, n, prec)?.abs(prec);
    let target = first.lo().mul_2exp(-(prec.bits as i64));
    let mut acc = IntervalComplex::zero();
    let mut real = true;
    for n1 in n..n + MAX_EXPLICIT_TERMS {
        let t = summand_value(spec, n1, prec)?;
        real &= t.is_real();
        let radius = t.abs(prec).hi().mul_2exp(1);
        let small = target.is_positive() && radius <= target;
        if (small || n1 - n >= SOFT_EXPLICIT_TERMS) && ratio_certified(spec, n1, prec)? {
            return Ok(acc.inflate(&radius, real));
        }
        acc = acc.add(&t, prec);
    }
    Err(Error::RatioNotCertified(format!(
        "no index in [{n}, {}] starts a window of ratios below 1/2",
        n + MAX_EXPLICIT_TERMS - 1
    )))
}

/// Enclosure of the whole sum.
pub fn sum_enclosure(spec: &SequenceSpec, prec: Precision) -> Result<IntervalComplex> {
    tail_enclosure(spec, 1, prec)
}

/// Parameters of `Z_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZParams {
    pub m: BigRat,
    pub c: BigRat,
    pub beta: BigRat,
}

impl ZParams {
    pub fn new(m: BigRat, c: BigRat, beta: BigRat) -> Result<Self> {
        if m < BigRat::one() {
            return Err(Error::ConstraintViolated("M must be at least 1".into()));
        }
        if !c.is_positive() || c >= BigRat::one() {
            return Err(Error::ConstraintViolated("c must lie in (0, 1)".into()));
        }
        Ok(ZParams { m, c, beta })
    }
}

/// `Z_N = 2^{N² log₂^c a_{N−1}} (∏_{n<N} a_n^M) Σ_{n≥N} b_n/a_n`, evaluated in the log
/// domain. `Z₁` is the bare tail.
pub fn z_value(spec: &SequenceSpec, zp: &ZParams, n: u64, prec: Precision) -> Result<IntervalReal> {
    let tail = tail_enclosure(spec, n, prec)?.abs(prec);
    if n == 1 {
        return Ok(tail);
    }
    let w = prec.extra(32);
    let mut e = IntervalReal::zero();
    let m = IntervalReal::from_rat(&zp.m, w);
    for k in 1..n {
        let l = spec.abs_a(k, w)?.log2(w)?;
        e = e.add(&l.mul(&m, w), w);
    }
    let last = spec.abs_a(n - 1, w)?.log2(w)?.clamp_nonneg().pow_nonneg(&zp.c, w)?;
    let nn = IntervalReal::from_int((n * n) as i64);
    e = e.add(&nn.mul(&last, w), w);
    e = e.add(&tail.log2(w)?, w);
    Ok(e.exp2(w).round(prec).clamp_nonneg())
}

/// Which tail lemma a check instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TailKind {
    /// `Σ_{n≥N} ≤ a_N^{−γ}`
    #[serde(rename = "gamma")]
    Gamma,
    /// `Σ_{n≥N} ≤ 2^{log₂^Γ a_N} / a_N^{1−β}`, for `a_n ≥ 2ⁿ`
    #[serde(rename = "Gamma")]
    CapGamma,
    /// the same bound for the finite window `Σ_{n=N}^{Q}`
    #[serde(rename = "window")]
    Window,
}

impl fmt::Display for TailKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TailKind::Gamma => "gamma",
            TailKind::CapGamma => "Gamma",
            TailKind::Window => "window",
        })
    }
}

impl FromStr for TailKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma" => Ok(TailKind::Gamma),
            "Gamma" => Ok(TailKind::CapGamma),
            "window" => Ok(TailKind::Window),
            _ => Err(Error::Invalid(format!("unknown tail bound {s:?}; expected gamma, Gamma or window"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailReport {
    pub n: u64,
    pub q: Option<u64>,
    pub kind: TailKind,
    pub exponent: BigRat,
    pub verdict: Verdict,
}

/// `|a_m| ≥ 2^m`, exactly for rational terms.
fn at_least_pow2(spec: &SequenceSpec, m: u64, prec: Precision) -> Result<Verdict> {
    if spec.check_ceiling(m).is_ok() {
        if let Some(r) = spec.term(m)?.a.as_rational() {
            let two = BigRat::from_integer(BigInt::one() << m as usize);
            return Ok((r.abs() >= two).into());
        }
    }
    certify(prec, |p| {
        let l = spec.abs_a(m, p)?.log2(p)?;
        Ok(le(&IntervalReal::from_int(m as i64), &l))
    })
}

/// Certify one of the tail bounds for a caller-supplied exponent (`γ` or `Γ`).
pub fn tail_checks(
    spec: &SequenceSpec,
    kind: TailKind,
    exponent: &BigRat,
    beta: &BigRat,
    n: u64,
    q: Option<u64>,
    prec: Precision,
) -> Result<TailReport> {
    if n == 0 {
        return Err(Error::Invalid("N must be at least 1".into()));
    }
    let pre_range = match kind {
        TailKind::Gamma => None,
        TailKind::CapGamma => Some((n, n + RATIO_WINDOW)),
        TailKind::Window => {
            let q = q.ok_or_else(|| Error::Invalid("the window bound needs Q".into()))?;
            if q < n {
                return Err(Error::Invalid(format!("window end Q = {q} is below N = {n}")));
            }
            Some((n, q))
        }
    };
    if let Some((lo, hi)) = pre_range {
        for m in lo..=hi {
            if at_least_pow2(spec, m, prec)? != Verdict::Holds {
                return Err(Error::PrecondViolated(format!("a_n ≥ 2^n fails at n={m}")));
            }
        }
    }
    let verdict = certify(prec, |p| {
        let sum = match (kind, q) {
            (TailKind::Window, Some(q)) => {
                let mut acc = IntervalComplex::zero();
                for m in n..=q {
                    acc = acc.add(&summand_value(spec, m, p)?, p);
                }
                acc
            }
            _ => tail_enclosure(spec, n, p)?,
        };
        let lhs = sum.abs(p).log2(p)?;
        let l = spec.abs_a(n, p)?.log2(p)?;
        let rhs = match kind {
            TailKind::Gamma => l.mul(&IntervalReal::from_rat(exponent, p), p).neg(),
            _ => {
                let corr = l.clamp_nonneg().pow_nonneg(exponent, p)?;
                let keep = IntervalReal::from_rat(&(BigRat::one() - beta), p);
                corr.sub(&l.mul(&keep, p), p)
            }
        };
        Ok(le(&lhs, &rhs))
    })?;
    Ok(TailReport { n, q, kind, exponent: exponent.clone(), verdict })
}

/// Indices found by a record scan, 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecordScan {
    pub records: Vec<usize>,
    pub undecided: Vec<usize>,
}

/// Indices `N ≤ N_max` with `y_N > (1 + 1/N²) max_{n<N} y_n`, where `ys[0]` is `y_1`.
pub fn record_indices(ys: &[IntervalReal], n_max: usize) -> RecordScan {
    let mut out = RecordScan::default();
    let Some(first) = ys.first() else {
        return out;
    };
    let prec = Precision { bits: 128, max_bits: 128 };
    let mut running = first.clone();
    for (i, y) in ys.iter().enumerate().skip(1).take(n_max.saturating_sub(1)) {
        let big_n = (i + 1) as i64;
        let factor = IntervalReal::from_rat(&BigRat::new((big_n * big_n + 1).into(), (big_n * big_n).into()), prec);
        let bar = running.mul(&factor, prec);
        match lt(&bar, y) {
            Verdict::Holds => out.records.push(i + 1),
            Verdict::Undecided => out.undecided.push(i + 1),
            Verdict::Fails => {}
        }
        running = running.max(y);
    }
    out
}

/// `(M+1+δ)^N = (M+1+δ)^k + (M+δ) Σ_{n=k}^{N−1} (M+1+δ)^n`, checked exactly.
pub fn identity_23(m: &BigRat, delta: &BigRat, k: u32, n: u32) -> Result<bool> {
    if k >= n {
        return Err(Error::Invalid(format!("need k < N, got k = {k}, N = {n}")));
    }
    let base = m + BigRat::one() + delta;
    let pw = |e: u32| num_traits::pow(base.clone(), e as usize);
    let sum = (k..n).fold(BigRat::zero(), |acc, e| acc + pw(e));
    Ok(pw(n) == pw(k) + (m + delta) * sum)
}

/// `(max_{k≤n<N} a_n B^{−n}) B^N > (M/(1−β)) Σ_{n=k}^{N−1} a_n` with `B = M/(1−β) + 1`,
/// for positive `a_n` given as `a[n−1]`.
pub fn lemma_6_5(a: &[IntervalReal], m: &BigRat, beta: &BigRat, k: usize, n: usize, prec: Precision) -> Result<Verdict> {
    if k == 0 || k >= n || n - 1 > a.len() {
        return Err(Error::Invalid(format!("need 1 ≤ k < N ≤ {} + 1, got k = {k}, N = {n}", a.len())));
    }
    if beta >= &BigRat::one() {
        return Err(Error::ConstraintViolated("β must be below 1".into()));
    }
    if a[k - 1..n - 1].iter().any(|x| !x.is_positive()) {
        return Err(Error::Invalid("the sequence must be positive".into()));
    }
    let ratio = m / (BigRat::one() - beta);
    let b = &ratio + BigRat::one();
    let w = prec.extra(32);
    let mut best: Option<IntervalReal> = None;
    let mut sum = IntervalReal::zero();
    for i in k..n {
        let x = &a[i - 1];
        let scaled = x.mul(&IntervalReal::from_rat(&num_traits::pow(b.recip(), i), w), w);
        best = Some(match best {
            Some(v) => v.max(&scaled),
            None => scaled,
        });
        sum = sum.add(x, w);
    }
    let lhs = best.unwrap().mul(&IntervalReal::from_rat(&num_traits::pow(b, n), w), w);
    let rhs = sum.mul(&IntervalReal::from_rat(&ratio, w), w);
    Ok(lt(&rhs, &lhs))
}

/// Outcome of the partial-sum separation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separation {
    Separated,
    /// the first pair `(N, M)` whose difference could not be shown nonzero
    RepeatRisk { n: u64, m: u64 },
}

impl Separation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Separation::Separated => "Separated",
            Separation::RepeatRisk { .. } => "RepeatRisk",
        }
    }
}

/// Certify `s_N ≠ s_M` for all `1 ≤ N < M ≤ N_max` by showing every window sum
/// `Σ_{n=N}^{M−1} t_n` excludes zero.
pub fn partial_sum_separation(spec: &SequenceSpec, n_max: u64, prec: Precision) -> Result<Separation> {
    let mut p = prec;
    loop {
        let terms = (1..n_max).map(|n| summand_value(spec, n, p)).collect::<Result<Vec<_>>>()?;
        let mut bad = None;
        'outer: for n in 1..n_max {
            let mut acc = IntervalComplex::zero();
            for m in n + 1..=n_max {
                acc = acc.add(&terms[(m - 2) as usize], p);
                if acc.contains_zero() {
                    bad = Some((n, m));
                    break 'outer;
                }
            }
        }
        match (bad, p.doubled()) {
            (None, _) => return Ok(Separation::Separated),
            (Some(_), Some(q)) => p = q,
            (Some((n, m)), None) => return Ok(Separation::RepeatRisk { n, m }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::{rat, ratio, NumberField};
    use crate::sequences::{builtin_example, ExampleId, ExampleOptions, GrowthProfile};

    fn prec() -> Precision {
        Precision { bits: 256, max_bits: 4096 }
    }

    fn rational(a: &str, b: &str) -> SequenceSpec {
        SequenceSpec::from_dsl("t", &NumberField::rationals(), a, b, GrowthProfile::pure(2, 1.0)).unwrap()
    }

    #[test]
    fn partial_sums() {
        let s = rational("n + 1", "1");
        assert!(partial_sum(&s, 1).unwrap().is_zero());
        assert_eq!(partial_sum(&s, 3).unwrap().as_rational(), Some(ratio(5, 6)));
        let ex = builtin_example(ExampleId::GoldenPower, &ExampleOptions::default()).unwrap();
        let k = &ex.field;
        let phi = k.generator();
        let expect = &(&phi.scale(&rat(13)) - &k.from_int(21));
        assert_eq!(&partial_sum(&ex, 2).unwrap(), expect);
    }

    #[test]
    fn golden_power_sum_matches_float_oracle() {
        let ex = builtin_example(ExampleId::GoldenPower, &ExampleOptions::default()).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let oracle: f64 = (1..4).map(|n| phi.powi(-(7i32.pow(n)))).sum();
        let v = sum_enclosure(&ex, prec()).unwrap();
        assert!((v.re.to_f64() - oracle).abs() < 1e-15);
        assert!(v.re.width() < crate::exactmath::Dyadic::pow2(-200));
    }

    #[test]
    fn z_one_is_the_whole_sum() {
        let ex = builtin_example(ExampleId::GoldenPower, &ExampleOptions::default()).unwrap();
        let zp = ZParams::new(rat(5), ratio(1, 2), rat(0)).unwrap();
        let z = z_value(&ex, &zp, 1, prec()).unwrap();
        assert!(z.overlaps(&sum_enclosure(&ex, prec()).unwrap().re));
        assert!(ZParams::new(rat(1), rat(1), rat(0)).is_err());
    }

    #[test]
    fn tail_bounds() {
        let ex = builtin_example(ExampleId::GoldenPower, &ExampleOptions::default()).unwrap();
        let r = tail_checks(&ex, TailKind::Gamma, &ratio(1, 2), &rat(0), 2, None, prec()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        let w = tail_checks(&ex, TailKind::Window, &ratio(1, 2), &rat(0), 2, Some(2), prec()).unwrap();
        assert_eq!(w.verdict, Verdict::Holds);
        let slow = rational("n + 1", "1");
        let e = tail_checks(&slow, TailKind::CapGamma, &ratio(1, 2), &rat(0), 2, None, prec());
        assert!(matches!(e, Err(Error::PrecondViolated(m)) if m.contains("n=2")));
    }

    #[test]
    fn records() {
        let doubling: Vec<IntervalReal> = (0..8).map(|i| IntervalReal::from_int(1 << i)).collect();
        assert_eq!(record_indices(&doubling, 8).records, (2..=8).collect::<Vec<_>>());
        let flat = vec![IntervalReal::from_int(3); 6];
        assert_eq!(record_indices(&flat, 6), RecordScan::default());
    }

    #[test]
    fn identity_examples() {
        assert!(identity_23(&rat(1), &rat(0), 1, 3).unwrap());
        assert!(identity_23(&ratio(3, 2), &ratio(1, 3), 2, 5).unwrap());
        assert!(identity_23(&rat(2), &rat(1), 4, 5).unwrap());
        assert!(identity_23(&rat(2), &rat(1), 5, 5).is_err());
        let a: Vec<IntervalReal> = (1..=6).map(|i| IntervalReal::from_int(i * i)).collect();
        assert_eq!(lemma_6_5(&a, &rat(2), &ratio(1, 2), 2, 6, prec()).unwrap(), Verdict::Holds);
    }

    #[test]
    fn separation_of_positive_terms() {
        let s = rational("2^n", "1");
        assert_eq!(partial_sum_separation(&s, 5, prec()).unwrap(), Separation::Separated);
    }
}
