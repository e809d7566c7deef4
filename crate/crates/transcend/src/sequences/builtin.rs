//! Built-in example families over `Q(√5)` and `Q(x)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::{
    parse_seq_with, CSeq, DeclaredExponents, GrowthProfile, IndexConvention, SequenceSpec,
};
use crate::numberfield::{minimal_polynomial, rat, FieldElement, NumberField};
use crate::{BigRat, Error, Result};

const LN_PHI: f64 = 0.481_211_825_059_603_4;
const LN_5: f64 = 1.609_437_912_434_100_3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExampleId {
    /// `x Σ 1/(F_{9ⁿ} c_n) + Σ 1/(F_{9ⁿ⁺¹} c_n)`
    TwoSeries,
    /// `n^{5ⁿ} φⁿ`
    PolyPower,
    /// `φ^{7ⁿ}`
    GoldenPower,
    /// `F_{9ⁿ⁺¹} φ^{9ⁿ} / F_{9ⁿ}`
    FibRatio,
    /// `φ^{2·14ⁿ} / (F_{14ⁿ} + φ)`
    Mixed,
}

impl ExampleId {
    pub const ALL: [ExampleId; 5] =
        [ExampleId::TwoSeries, ExampleId::PolyPower, ExampleId::GoldenPower, ExampleId::FibRatio, ExampleId::Mixed];

    pub fn as_str(self) -> &'static str {
        match self {
            ExampleId::TwoSeries => "2.1",
            ExampleId::PolyPower => "2.4",
            ExampleId::GoldenPower => "2.5",
            ExampleId::FibRatio => "2.6",
            ExampleId::Mixed => "2.7",
        }
    }

    /// Decompositions available for this family; the first is the primary one.
    pub fn variants(self) -> &'static [&'static str] {
        match self {
            ExampleId::TwoSeries | ExampleId::Mixed => &["primary"],
            ExampleId::PolyPower | ExampleId::GoldenPower => &["primary", "rewrite"],
            ExampleId::FibRatio => &["primary", "alternative"],
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExampleId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ExampleId::ALL
            .into_iter()
            .find(|e| e.as_str() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown example {s:?}; expected one of 2.1, 2.4, 2.5, 2.6, 2.7")))
    }
}

#[derive(Clone, Debug, Default)]
pub struct ExampleOptions {
    pub convention: IndexConvention,
    /// definition-language expression for `x` (two-series family only), default `sqrt(5)`
    pub x: Option<String>,
    /// field in which to read `x`; inferred when absent
    pub field: Option<NumberField>,
}

fn r(p: i64, q: i64) -> Option<BigRat> {
    Some(BigRat::new(p.into(), q.into()))
}

/// Square-root radicands mentioned in an expression.
fn radicands(src: &str) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = Vec::new();
    let mut rest = src;
    while let Some(i) = rest.find("sqrt") {
        rest = &rest[i + 4..];
        let inner = rest.trim_start().strip_prefix('(').unwrap_or("");
        let digits: String = inner.trim_start().chars().take_while(|c| c.is_ascii_digit()).collect();
        if let Ok(k) = digits.parse::<BigInt>() {
            if !out.contains(&k) {
                out.push(k);
            }
        }
    }
    out
}

/// Field and value of `x`: read in the caller's field, else `Q(√5)`, else `Q(√k)`.
fn resolve_x(opts: &ExampleOptions) -> Result<(NumberField, FieldElement, String)> {
    let src = opts.x.clone().unwrap_or_else(|| "sqrt(5)".into());
    let read = |k: &NumberField| parse_seq_with(&src, k, &[]).and_then(|e| e.eval(1, k));
    let (k, x) = match &opts.field {
        Some(k) => (k.clone(), read(k)?),
        None => {
            let golden = NumberField::golden();
            match read(&golden) {
                Ok(x) => (golden, x),
                Err(Error::UndefinedSymbol(_)) => {
                    let ks = radicands(&src);
                    if ks.len() != 1 {
                        return Err(Error::UnsupportedX(format!(
                            "cannot infer a field for {src:?}; supply one explicitly"
                        )));
                    }
                    let k = NumberField::new(vec![-&ks[0], 0.into(), 1.into()], None, None, false)
                        .or_else(|_| Ok::<_, Error>(NumberField::rationals()))?;
                    let x = read(&k)?;
                    (k, x)
                }
                Err(e) => return Err(e),
            }
        }
    };
    let deg = minimal_polynomial(&x).degree();
    if deg > 2 {
        return Err(Error::UnsupportedX(format!("x = {src} has degree {deg}; at most 2 is allowed")));
    }
    Ok((k, x, src))
}

fn golden_spec(
    name: &str,
    basis_phibar: bool,
    a: &str,
    b: &str,
    profile: GrowthProfile,
    exponents: DeclaredExponents,
) -> Result<SequenceSpec> {
    let k = NumberField::golden();
    let phi = k.phi()?.ok_or(Error::FieldMismatch)?;
    let (x2, x2_name) = if basis_phibar { (k.one() - &phi, "phibar") } else { (phi, "phi") };
    let spec = SequenceSpec {
        name: name.into(),
        field: k.clone(),
        basis: vec![k.one(), x2],
        basis_names: vec!["1".into(), x2_name.into()],
        a_src: a.into(),
        a: parse_seq_with(a, &k, &[])?,
        b_src: b.into(),
        b: parse_seq_with(b, &k, &[])?,
        c: CSeq::Free,
        profile,
        exponents,
        zeta: None,
        x: None,
        convention: None,
    };
    Ok(spec)
}

/// Primary decomposition of a built-in family.
pub fn builtin_example(id: ExampleId, opts: &ExampleOptions) -> Result<SequenceSpec> {
    builtin_variant(id, "primary", opts)
}

/// A named decomposition of a built-in family (see [`ExampleId::variants`]).
pub fn builtin_variant(id: ExampleId, variant: &str, opts: &ExampleOptions) -> Result<SequenceSpec> {
    if !id.variants().contains(&variant) {
        return Err(Error::Invalid(format!("example {id} has no variant {variant:?}")));
    }
    let nested = opts.convention == IndexConvention::Nested;
    let next = if nested { "9^(n+1)" } else { "9^n+1" };
    let name = format!("{id}/{variant}");
    let none = DeclaredExponents::default;
    let spec = match (id, variant) {
        (ExampleId::TwoSeries, _) => {
            let (k, x, src) = resolve_x(opts)?;
            let a = format!("F(9^n) * F({next})");
            let b = format!("F({next})*x + F(9^n)");
            let bind = [("x", x.clone())];
            let profile = if nested {
                GrowthProfile::new(rat(9), 10.0 * LN_PHI, 0.0, 0.0, 0.0, -LN_5)?
            } else {
                GrowthProfile::new(rat(9), 2.0 * LN_PHI, 0.0, 0.0, 0.0, LN_PHI - LN_5)?
            };
            SequenceSpec {
                name,
                field: k.clone(),
                basis: vec![k.one(), x.clone()],
                basis_names: vec!["1".into(), format!("x = {src}")],
                a_src: a.clone(),
                a: parse_seq_with(&a, &k, &bind)?,
                b_src: b.replace('x', &format!("({src})")),
                b: parse_seq_with(&b, &k, &bind)?,
                c: CSeq::Free,
                profile,
                exponents: DeclaredExponents { beta: r(1, 2), y: r(1, 1), ..none() },
                zeta: None,
                x: Some(x),
                convention: Some(opts.convention),
            }
        }
        (ExampleId::PolyPower, "primary") => golden_spec(
            &name,
            false,
            "n^(5^n) * phi^n",
            "1",
            GrowthProfile::new(rat(5), 0.0, 1.0, LN_PHI, 0.0, 0.0)?,
            DeclaredExponents { beta: r(0, 1), y: r(1, 1), eta1: r(1, 1), eta2: r(1, 1), ..none() },
        )?,
        (ExampleId::PolyPower, _) => golden_spec(
            &name,
            true,
            "n^(5^n)",
            "1/phi^n",
            GrowthProfile::new(rat(5), 0.0, 1.0, 0.0, 0.0, 0.0)?,
            DeclaredExponents { beta: r(0, 1), y: r(1, 1), ..none() },
        )?,
        (ExampleId::GoldenPower, "primary") => golden_spec(
            &name,
            false,
            "phi^(7^n)",
            "1",
            GrowthProfile::pure(7, LN_PHI),
            DeclaredExponents { beta: r(0, 1), eta1: r(0, 1), eta2: r(1, 1), y: r(1, 1), ..none() },
        )?,
        (ExampleId::GoldenPower, _) => golden_spec(
            &name,
            true,
            "F(7^n)",
            "F(7^n)/phi^(7^n)",
            GrowthProfile::new(rat(7), LN_PHI, 0.0, 0.0, 0.0, -0.5 * LN_5)?,
            DeclaredExponents { beta: r(0, 1), y: r(2, 1), ..none() },
        )?,
        (ExampleId::FibRatio, _) => {
            let profile = if nested {
                GrowthProfile::new(rat(9), 9.0 * LN_PHI, 0.0, 0.0, 0.0, -0.5 * LN_5)?
            } else {
                GrowthProfile::new(rat(9), LN_PHI, 0.0, 0.0, 0.0, LN_PHI - 0.5 * LN_5)?
            };
            let exponents = if variant == "primary" {
                DeclaredExponents { beta: r(0, 1), y: r(2, 1), ..none() }
            } else {
                DeclaredExponents { beta: r(0, 1), eta1: r(1, 1), eta2: r(1, 1), y1: r(1, 1), y2: r(2, 1), ..none() }
            };
            let mut s =
                golden_spec(&name, true, &format!("F({next})"), "F(9^n)/phi^(9^n)", profile, exponents)?;
            s.convention = Some(opts.convention);
            s
        }
        (ExampleId::Mixed, _) => golden_spec(
            &name,
            false,
            "phi^(2*14^n)",
            "F(14^n) + phi",
            GrowthProfile::pure(14, 2.0 * LN_PHI),
            DeclaredExponents { eta1: r(0, 1), beta: r(1, 2), y1: r(1, 1), y2: r(1, 2), eta2: r(1, 1), ..none() },
        )?,
    };
    spec.validate_profile()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::rat;
    use crate::sequences::{fib, phi_power};

    fn opts() -> ExampleOptions {
        ExampleOptions::default()
    }

    #[test]
    fn golden_power_profile() {
        let s = builtin_example(ExampleId::GoldenPower, &opts()).unwrap();
        assert_eq!(s.profile.g, rat(7));
        assert!((s.profile.a - 5f64.sqrt().mul_add(0.5, 0.5).ln()).abs() < 1e-12);
        assert_eq!((s.profile.a_l, s.profile.b, s.profile.c, s.profile.d), (0.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn poly_power_profile() {
        let s = builtin_example(ExampleId::PolyPower, &opts()).unwrap();
        assert_eq!(s.profile.g, rat(5));
        assert_eq!((s.profile.a, s.profile.a_l), (0.0, 1.0));
        assert!((s.profile.b - LN_PHI).abs() < 1e-15);
    }

    #[test]
    fn mixed_first_term() {
        let s = builtin_example(ExampleId::Mixed, &opts()).unwrap();
        let t = s.term(1).unwrap();
        assert_eq!(t.a, phi_power(&s.field, 28).unwrap());
        assert_eq!(t.a.coords(), vec![rat(196418), rat(317811)]);
        assert_eq!(fib(14), BigInt::from(377));
        assert_eq!(t.b, s.field.from_int(377) + s.field.phi().unwrap().unwrap());
    }

    #[test]
    fn two_series_terms() {
        let s = builtin_example(ExampleId::TwoSeries, &opts()).unwrap();
        let t = s.term(1).unwrap();
        assert_eq!(t.a, s.field.from_int(34 * 55));
        let root5 = s.field.sqrt_int(&5.into()).unwrap().unwrap();
        assert_eq!(t.b, &root5 * &s.field.from_int(55) + s.field.from_int(34));

        let nested = ExampleOptions { convention: IndexConvention::Nested, ..opts() };
        let s = builtin_example(ExampleId::TwoSeries, &nested).unwrap();
        let t = s.term(1).unwrap();
        assert_eq!(t.a, s.field.from_int(fib(9) * fib(81)));
    }

    #[test]
    fn phibar_identity() {
        let o = ExampleOptions { x: Some("phibar".into()), ..opts() };
        let s = builtin_example(ExampleId::TwoSeries, &o).unwrap();
        let phibar = s.field.one() - s.field.phi().unwrap().unwrap();
        for n in 1..=3 {
            let m = 9u64.pow(n as u32) + 1;
            assert_eq!(s.term(n).unwrap().b, phibar.pow(m as i64).unwrap());
        }
    }

    #[test]
    fn other_quadratic_x() {
        let o = ExampleOptions { x: Some("1 + sqrt(2)".into()), ..opts() };
        let s = builtin_example(ExampleId::TwoSeries, &o).unwrap();
        assert_eq!(s.field.degree(), 2);
        let o = ExampleOptions { x: Some("3".into()), ..opts() };
        assert!(builtin_example(ExampleId::TwoSeries, &o).is_ok());
    }

    #[test]
    fn cubic_x_is_rejected() {
        let k = NumberField::new(vec![(-2).into(), 0.into(), 0.into(), 1.into()], None, None, false).unwrap();
        let o = ExampleOptions { x: Some("theta".into()), field: Some(k), ..opts() };
        assert!(matches!(builtin_example(ExampleId::TwoSeries, &o), Err(Error::UnsupportedX(_))));
    }

    #[test]
    fn all_variants_build_and_match_profiles() {
        for conv in [IndexConvention::Adjacent, IndexConvention::Nested] {
            for id in ExampleId::ALL {
                for v in id.variants() {
                    let o = ExampleOptions { convention: conv, ..opts() };
                    builtin_variant(id, v, &o).unwrap_or_else(|e| panic!("{id}/{v}: {e}"));
                }
            }
        }
        assert!(builtin_variant(ExampleId::Mixed, "rewrite", &opts()).is_err());
        assert_eq!("2.6".parse::<ExampleId>().unwrap(), ExampleId::FibRatio);
        assert!("2.3".parse::<ExampleId>().is_err());
    }
}
