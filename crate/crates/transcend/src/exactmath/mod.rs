//! Exact integers and rationals plus certified real and complex enclosures.

mod complex;
mod dyadic;
mod interval;

pub use complex::IntervalComplex;
pub use dyadic::{Dyadic, Round};
pub use interval::{iv_compare, iv_from_rat, iv_log2, iv_pow, ln2, Cmp, IntervalReal, Precision};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Three-valued outcome of a certified check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Holds,
    Fails,
    Undecided,
}

impl Verdict {
    pub fn is_decided(self) -> bool {
        self != Verdict::Undecided
    }

    /// Conjunction: any failure wins, then any undecided.
    pub fn and(self, o: Verdict) -> Verdict {
        match (self, o) {
            (Verdict::Fails, _) | (_, Verdict::Fails) => Verdict::Fails,
            (Verdict::Undecided, _) | (_, Verdict::Undecided) => Verdict::Undecided,
            _ => Verdict::Holds,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "Holds",
            Verdict::Fails => "Fails",
            Verdict::Undecided => "Undecided",
        }
    }
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

/// `x <= y`: Holds when `x.hi <= y.lo`, Fails when `x.lo > y.hi`.
pub fn le(x: &IntervalReal, y: &IntervalReal) -> Verdict {
    if x.hi() <= y.lo() {
        Verdict::Holds
    } else if x.lo() > y.hi() {
        Verdict::Fails
    } else {
        Verdict::Undecided
    }
}

/// `x < y`: Holds when `x.hi < y.lo`, Fails when `x.lo >= y.hi`.
pub fn lt(x: &IntervalReal, y: &IntervalReal) -> Verdict {
    if x.hi() < y.lo() {
        Verdict::Holds
    } else if x.lo() >= y.hi() {
        Verdict::Fails
    } else {
        Verdict::Undecided
    }
}

/// Re-run `f` with doubled precision until it returns a decided verdict or the ceiling is hit.
pub fn refine_verdict<F>(prec: Precision, mut f: F) -> Result<Verdict>
where
    F: FnMut(Precision) -> Result<Verdict>,
{
    let mut p = prec;
    loop {
        let v = f(p)?;
        if v.is_decided() {
            return Ok(v);
        }
        match p.doubled() {
            Some(q) => p = q,
            None => return Ok(Verdict::Undecided),
        }
    }
}

/// Re-run `f` with doubled precision until it yields a value or the ceiling is hit.
pub fn refine<T, F>(prec: Precision, mut f: F) -> Result<Option<T>>
where
    F: FnMut(Precision) -> Result<Option<T>>,
{
    let mut p = prec;
    loop {
        if let Some(v) = f(p)? {
            return Ok(Some(v));
        }
        match p.doubled() {
            Some(q) => p = q,
            None => return Ok(None),
        }
    }
}

/// Errors that only mean "not enough bits yet".
pub fn transient(e: &Error) -> bool {
    matches!(e, Error::NonPositiveInput | Error::NonPositiveBase | Error::DivisionByZero | Error::PrecisionExhausted(_))
}

/// Like `refine_verdict`, but enclosures still too wide to take a logarithm also trigger
/// refinement. Running out of precision gives `Undecided`.
pub fn certify<F>(prec: Precision, mut f: F) -> Result<Verdict>
where
    F: FnMut(Precision) -> Result<Verdict>,
{
    let mut p = prec;
    loop {
        match f(p) {
            Ok(v) if v.is_decided() => return Ok(v),
            Ok(_) => {}
            Err(e) if transient(&e) => {}
            Err(e) => return Err(e),
        }
        match p.doubled() {
            Some(q) => p = q,
            None => return Ok(Verdict::Undecided),
        }
    }
}
