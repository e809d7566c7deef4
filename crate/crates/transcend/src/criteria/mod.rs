//! Finite-prefix verification of the irrationality and transcendence criteria:
//! parameter validation, required growth bases, per-index hypothesis checks,
//! growth verdicts from declared profiles, and the base-minimisation used to show
//! that a criterion cannot apply to a family.

mod bounds;
mod check;
mod report;

pub use bounds::{min_required_base, BoundExpr, ExponentBounds, Grid};
pub use check::{ak_exponent, check_classical, check_hypotheses, ClassicalVariant};
pub use check::verify;
pub use report::{report_json, report_text, report_value};

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exactmath::{IntervalReal, Precision, Verdict};
use crate::sequences::{DeclaredExponents, GrowthProfile, IndexConvention, Zeta};
use crate::{BigRat, Error, Result};

/// The criteria that can be checked. Identifiers follow the usual numbering (`"1.4"` etc.).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// integer sequences, base 2
    Erdos,
    /// rational `a_n / b_n` with small integer `b_n`, base `3 + γ`
    Hancl,
    /// algebraic integers whose house equals the modulus
    AndersenKristensen,
    /// rational integer `a_n`, `b_n` in a number field
    RationalA,
    /// `a_n` in a number field, positive integer `b_n`
    IntegerB,
    /// both `a_n` and `b_n` in a number field
    General,
    /// degree-one specialisation with base `(2+δ)/(1−β) + 1`
    DegreeOne,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::Erdos,
        Theorem::Hancl,
        Theorem::AndersenKristensen,
        Theorem::RationalA,
        Theorem::IntegerB,
        Theorem::General,
        Theorem::DegreeOne,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Erdos => "1.1",
            Theorem::Hancl => "1.2",
            Theorem::AndersenKristensen => "1.3",
            Theorem::RationalA => "1.4",
            Theorem::IntegerB => "1.6",
            Theorem::General => "1.7",
            Theorem::DegreeOne => "7.1",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown criterion {s:?}; expected 1.1-1.4, 1.6, 1.7 or 7.1")))
    }
}

/// Parameters of one criterion. Unused fields are ignored by the theorem at hand.
#[derive(Clone, Debug, PartialEq)]
pub struct CriterionParams {
    pub theorem: Theorem,
    pub epsilon: BigRat,
    pub alpha: BigRat,
    pub beta: BigRat,
    pub delta: BigRat,
    pub y: BigRat,
    pub y1: BigRat,
    pub y2: BigRat,
    pub eta1: BigRat,
    pub eta2: BigRat,
    pub gamma: Option<BigRat>,
    pub zeta: Option<Zeta>,
}

fn q(p: i64, d: i64) -> BigRat {
    BigRat::new(p.into(), d.into())
}

impl CriterionParams {
    /// Defaults: `ε = 1`, `α = 1/2`, `δ = 1/100`, `β = η₁ = y₂ = 0`, `y = y₁ = η₂ = 1`.
    pub fn new(theorem: Theorem) -> Self {
        CriterionParams {
            theorem,
            epsilon: q(1, 1),
            alpha: q(1, 2),
            beta: BigRat::zero(),
            delta: q(1, 100),
            y: q(1, 1),
            y1: q(1, 1),
            y2: BigRat::zero(),
            eta1: BigRat::zero(),
            eta2: q(1, 1),
            gamma: None,
            zeta: None,
        }
    }

    /// Overlay a family's declared exponents.
    pub fn with_declared(mut self, e: &DeclaredExponents) -> Self {
        let set = |dst: &mut BigRat, src: &Option<BigRat>| {
            if let Some(v) = src {
                *dst = v.clone();
            }
        };
        set(&mut self.beta, &e.beta);
        set(&mut self.y, &e.y);
        set(&mut self.y1, &e.y1);
        set(&mut self.y2, &e.y2);
        set(&mut self.eta1, &e.eta1);
        set(&mut self.eta2, &e.eta2);
        self
    }

    /// Check the theorem's parameter constraints for a field of degree `d`.
    pub fn validate(&self, d: usize) -> Result<()> {
        let bad = |m: &str| Err(Error::ConstraintViolated(m.into()));
        let one = BigRat::one();
        let dq = BigRat::from_integer(d.into());
        if !self.epsilon.is_positive() {
            return bad("ε > 0");
        }
        if self.theorem != Theorem::Erdos && self.theorem != Theorem::AndersenKristensen
            && !(self.alpha.is_positive() && self.alpha < one) {
                return bad("0 < α < 1");
            }
        let beta_cap = &self.epsilon / (&self.epsilon + &one);
        let beta_ok = !self.beta.is_negative() && self.beta < beta_cap;
        match self.theorem {
            Theorem::Erdos | Theorem::AndersenKristensen => {}
            Theorem::Hancl => {
                let Some(g) = &self.gamma else { return bad("γ must be given") };
                if *g <= &self.epsilon * BigRat::from_integer(2.into()) {
                    return bad("γ > 2ε");
                }
                // α > log(3+2ε)/log(3+γ), certified
                let p = Precision::default();
                let three = q(3, 1);
                let num = IntervalReal::from_rat(&(&three + &self.epsilon * q(2, 1)), p).ln(p)?;
                let den = IntervalReal::from_rat(&(&three + g), p).ln(p)?;
                let ratio = num.div(&den, p)?;
                if !(ratio.hi() < IntervalReal::from_rat(&self.alpha, p).lo()) {
                    return bad("α > log(3+2ε)/log(3+γ)");
                }
            }
            Theorem::RationalA => {
                if !beta_ok {
                    return bad("0 ≤ β < ε/(1+ε)");
                }
                if self.y < one {
                    return bad("y ≥ 1");
                }
            }
            Theorem::IntegerB => {
                if !beta_ok {
                    return bad("0 ≤ β < ε/(1+ε)");
                }
                if !self.delta.is_positive() {
                    return bad("δ > 0");
                }
                if self.y < one || self.eta2 < one {
                    return bad("η₂, y ≥ 1");
                }
                if self.eta1.is_negative() {
                    return bad("η₁ ≥ 0");
                }
                if self.eta1 > (&dq - &one) * &self.y + &self.beta {
                    return bad("η₁ ≤ (d−1)y + β");
                }
            }
            Theorem::General => {
                if !beta_ok {
                    return bad("0 ≤ β < ε/(1+ε)");
                }
                if !self.delta.is_positive() {
                    return bad("δ > 0");
                }
                if self.y1 < one || self.eta2 < one {
                    return bad("y₁, η₂ ≥ 1");
                }
                if self.y2 < self.beta {
                    return bad("y₂ ≥ β");
                }
                if self.eta1.is_negative() {
                    return bad("η₁ ≥ 0");
                }
                if self.eta1 > (&dq - &one) * &self.y1 + &self.y2 {
                    return bad("η₁ ≤ (d−1)y₁ + y₂");
                }
            }
            Theorem::DegreeOne => {
                if !beta_ok {
                    return bad("0 ≤ β < ε/(1+ε)");
                }
                if !self.delta.is_positive() {
                    return bad("δ > 0");
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseKind {
    Irrationality,
    Transcendence,
}

/// A required growth base `constant + delta_coeff·δ`, with its value at the chosen `δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedBase {
    pub name: String,
    pub kind: BaseKind,
    pub constant: BigRat,
    pub delta_coeff: BigRat,
    pub value: BigRat,
}

impl NamedBase {
    fn new(name: &str, kind: BaseKind, constant: BigRat, delta_coeff: BigRat, delta: &BigRat) -> Self {
        let value = &constant + &delta_coeff * delta;
        NamedBase { name: name.into(), kind, constant, delta_coeff, value }
    }

    /// Rendering such as `13+2δ`.
    pub fn symbolic(&self) -> String {
        if self.delta_coeff.is_zero() {
            self.constant.to_string()
        } else if self.delta_coeff.is_one() {
            format!("{}+δ", self.constant)
        } else {
            format!("{}+{}δ", self.constant, self.delta_coeff)
        }
    }
}

/// Growth bases a family must outgrow for the criterion to apply.
pub fn required_bases(theorem: Theorem, d: usize, p: &CriterionParams) -> Result<Vec<NamedBase>> {
    if d == 0 {
        return Err(Error::ConstraintViolated("d ≥ 1".into()));
    }
    let mut pp = p.clone();
    pp.theorem = theorem;
    pp.validate(d)?;
    Ok(base_values(theorem, d, p))
}

/// The base formulas without parameter validation (needs `β ≠ 1`).
pub(crate) fn base_values(theorem: Theorem, d: usize, p: &CriterionParams) -> Vec<NamedBase> {
    let one = BigRat::one();
    let zero = BigRat::zero();
    let dq = BigRat::from_integer(d.into());
    let d2 = &dq * &dq;
    let inv = &one / (&one - &p.beta);
    let base = |num: BigRat| &num * &inv + &one;
    use BaseKind::*;
    match theorem {
        Theorem::Erdos => vec![NamedBase::new("irrationality", Irrationality, q(2, 1), zero, &p.delta)],
        Theorem::Hancl => {
            let g = p.gamma.clone().unwrap_or_default();
            vec![NamedBase::new("transcendence", Transcendence, q(3, 1) + g, zero, &p.delta)]
        }
        Theorem::AndersenKristensen => {
            if d == 1 {
                vec![NamedBase::new("irrationality", Irrationality, q(2, 1), zero, &p.delta)]
            } else {
                vec![]
            }
        }
        Theorem::RationalA => vec![
            NamedBase::new("irrationality", Irrationality, base(&dq * &p.y), zero.clone(), &p.delta),
            NamedBase::new("transcendence", Transcendence, base(&d2 * &p.y), zero, &p.delta),
        ],
        Theorem::IntegerB => {
            let yb = &p.y + &p.beta;
            let t1 = &p.eta2 + &dq * ((&dq - &one) * &p.y + &p.beta + &p.eta2 - &p.eta1);
            vec![
                NamedBase::new("irrationality", Irrationality, base(&dq * &yb), zero.clone(), &p.delta),
                NamedBase::new("transcendence_1", Transcendence, base(t1), inv.clone(), &p.delta),
                NamedBase::new("transcendence_2", Transcendence, base(&d2 * &yb), zero, &p.delta),
            ]
        }
        Theorem::General => {
            let ys = &p.y1 + &p.y2;
            let t1 = &p.eta2 + &dq * ((&dq - &one) * &p.y1 + &p.y2 + &p.eta2 - &p.eta1);
            vec![
                NamedBase::new("irrationality", Irrationality, base(&dq * &ys), zero.clone(), &p.delta),
                NamedBase::new("transcendence_1", Transcendence, base(t1), inv.clone(), &p.delta),
                NamedBase::new("transcendence_2", Transcendence, base(&d2 * &ys), zero, &p.delta),
            ]
        }
        Theorem::DegreeOne => {
            vec![NamedBase::new("transcendence", Transcendence, base(q(2, 1)), inv.clone(), &p.delta)]
        }
    }
}

/// Whether `limsup |a_n|^{base^{-n}} = ∞` under a declared growth profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GrowthVerdict {
    Diverges,
    BoundaryDiverges,
    BoundaryBounded,
    Bounded,
}

impl GrowthVerdict {
    pub fn diverges(self) -> bool {
        matches!(self, GrowthVerdict::Diverges | GrowthVerdict::BoundaryDiverges)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GrowthVerdict::Diverges => "Diverges",
            GrowthVerdict::BoundaryDiverges => "BoundaryDiverges",
            GrowthVerdict::BoundaryBounded => "BoundaryBounded",
            GrowthVerdict::Bounded => "Bounded",
        }
    }
}

/// `base < g` diverges, `base > g` is bounded; at `base = g` the `gⁿ ln n` term decides.
pub fn divergence_verdict(profile: &GrowthProfile, base: &BigRat) -> GrowthVerdict {
    use std::cmp::Ordering::*;
    match base.cmp(&profile.g) {
        Less => GrowthVerdict::Diverges,
        Greater => GrowthVerdict::Bounded,
        Equal if profile.a_l > 0.0 => GrowthVerdict::BoundaryDiverges,
        Equal => GrowthVerdict::BoundaryBounded,
    }
}

/// Per-index verdicts for one hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisOutcome {
    pub label: String,
    pub description: String,
    pub verdicts: Vec<(u64, Verdict)>,
    pub note: Option<String>,
}

impl HypothesisOutcome {
    pub fn new(label: &str, description: &str) -> Self {
        HypothesisOutcome { label: label.into(), description: description.into(), verdicts: vec![], note: None }
    }

    pub fn first_failure(&self) -> Option<u64> {
        self.verdicts.iter().find(|(_, v)| *v == Verdict::Fails).map(|(n, _)| *n)
    }

    pub fn verdict(&self) -> Verdict {
        self.verdicts.iter().fold(Verdict::Holds, |acc, (_, v)| acc.and(*v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Overall {
    TranscendenceCriteriaMet,
    IrrationalityCriteriaMet,
    NotApplicable(Vec<String>),
    Inconclusive,
}

impl Overall {
    pub fn name(&self) -> &'static str {
        match self {
            Overall::TranscendenceCriteriaMet => "TranscendenceCriteriaMet",
            Overall::IrrationalityCriteriaMet => "IrrationalityCriteriaMet",
            Overall::NotApplicable(_) => "NotApplicable",
            Overall::Inconclusive => "Inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub sequence: String,
    pub n_range: (u64, u64),
    pub hypotheses: Vec<HypothesisOutcome>,
    pub bases: Vec<NamedBase>,
    pub growth: Vec<(String, GrowthVerdict)>,
    /// `g` of the family's growth profile
    pub growth_base: BigRat,
    pub overall: Overall,
    pub zeta: Option<String>,
    pub index_convention: Option<IndexConvention>,
    pub precision_bits: u32,
    pub delta: BigRat,
}

impl VerificationReport {
    /// Worst growth verdict among bases of one kind (`None` when there are none).
    pub fn growth_for(&self, kind: BaseKind) -> Option<GrowthVerdict> {
        self.bases
            .iter()
            .zip(&self.growth)
            .filter(|(b, _)| b.kind == kind)
            .map(|(_, (_, g))| *g)
            .max()
    }

    /// Combined growth verdict: transcendence bases when present, else irrationality.
    pub fn growth_overall(&self) -> Option<GrowthVerdict> {
        self.growth_for(BaseKind::Transcendence).or_else(|| self.growth_for(BaseKind::Irrationality))
    }
}

/// Fold outcomes and growth verdicts into an overall verdict. Certified failures and
/// bounded growth make the criterion inapplicable; otherwise any undecided check leaves it open.
pub fn assemble_report(
    theorem: Theorem,
    outcomes: Vec<HypothesisOutcome>,
    bases: Vec<NamedBase>,
    profile: &GrowthProfile,
) -> VerificationReport {
    let growth: Vec<(String, GrowthVerdict)> =
        bases.iter().map(|b| (b.name.clone(), divergence_verdict(profile, &b.value))).collect();
    let worst = |kind: BaseKind| {
        bases.iter().zip(&growth).filter(|(b, _)| b.kind == kind).map(|(_, (_, g))| *g).max()
    };
    let trans = worst(BaseKind::Transcendence);
    let irr = worst(BaseKind::Irrationality);
    let mut reasons: Vec<String> = outcomes
        .iter()
        .filter_map(|o| o.first_failure().map(|n| format!("hypothesis {} fails at n={n}", o.label)))
        .collect();
    let undecided = outcomes.iter().any(|o| o.verdict() == Verdict::Undecided);
    let trans_ok = trans.map(GrowthVerdict::diverges);
    let irr_ok = irr.map(GrowthVerdict::diverges);
    let overall = if !reasons.is_empty() {
        for (b, (_, g)) in bases.iter().zip(&growth) {
            if !g.diverges() {
                reasons.push(format!("growth: {} base {} is {}", b.name, b.symbolic(), g.as_str()));
            }
        }
        Overall::NotApplicable(reasons)
    } else if trans_ok == Some(true) {
        if undecided {
            Overall::Inconclusive
        } else {
            Overall::TranscendenceCriteriaMet
        }
    } else if irr_ok == Some(true) {
        if undecided {
            Overall::Inconclusive
        } else {
            Overall::IrrationalityCriteriaMet
        }
    } else if trans_ok.is_none() && irr_ok.is_none() {
        // no geometric base: the growth condition cannot be met by a finite-base profile
        Overall::NotApplicable(vec!["growth: the limsup condition is not met by any doubly exponential profile".into()])
    } else {
        for (b, (_, g)) in bases.iter().zip(&growth) {
            if !g.diverges() {
                reasons.push(format!("growth: {} base {} is {}", b.name, b.symbolic(), g.as_str()));
            }
        }
        Overall::NotApplicable(reasons)
    };
    VerificationReport {
        theorem,
        sequence: String::new(),
        n_range: outcomes
            .iter()
            .flat_map(|o| o.verdicts.iter().map(|(n, _)| *n))
            .fold(None, |acc: Option<(u64, u64)>, n| Some(acc.map_or((n, n), |(a, b)| (a.min(n), b.max(n)))))
            .unwrap_or((0, 0)),
        hypotheses: outcomes,
        bases,
        growth,
        growth_base: profile.g.clone(),
        overall,
        zeta: None,
        index_convention: None,
        precision_bits: Precision::default().bits,
        delta: BigRat::zero(),
    }
}

/// Approximate value of a rational, for display.
pub fn approx(r: &BigRat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::{rat, ratio};

    fn params(theorem: Theorem) -> CriterionParams {
        CriterionParams::new(theorem)
    }

    fn value(bases: &[NamedBase], name: &str) -> BigRat {
        bases.iter().find(|b| b.name == name).unwrap().value.clone()
    }

    #[test]
    fn rational_a_bases() {
        let mut p = params(Theorem::RationalA);
        p.epsilon = rat(2);
        p.beta = ratio(1, 2);
        let b = required_bases(Theorem::RationalA, 2, &p).unwrap();
        assert_eq!(value(&b, "transcendence"), rat(9));
        assert!(value(&b, "transcendence") > rat(7));
        let p = params(Theorem::RationalA);
        let b = required_bases(Theorem::RationalA, 1, &p).unwrap();
        assert_eq!(value(&b, "transcendence"), rat(2));
    }

    #[test]
    fn general_bases_for_mixed_family() {
        let mut p = params(Theorem::General);
        p.epsilon = rat(2);
        p.beta = ratio(1, 2);
        p.y1 = rat(1);
        p.y2 = ratio(1, 2);
        p.eta1 = rat(0);
        p.eta2 = rat(1);
        let b = required_bases(Theorem::General, 2, &p).unwrap();
        let t1 = b.iter().find(|b| b.name == "transcendence_1").unwrap();
        assert_eq!((t1.constant.clone(), t1.delta_coeff.clone()), (rat(13), rat(2)));
        assert_eq!(t1.symbolic(), "13+2δ");
        assert_eq!(value(&b, "transcendence_2"), rat(13));
        assert_eq!(value(&b, "transcendence_1"), ratio(1302, 100));
    }

    #[test]
    fn constraints() {
        let mut p = params(Theorem::RationalA);
        p.y = ratio(1, 2);
        assert!(matches!(p.validate(2), Err(Error::ConstraintViolated(_))));
        let mut p = params(Theorem::RationalA);
        p.beta = ratio(1, 2);
        assert!(p.validate(2).is_err());
        let mut p = params(Theorem::IntegerB);
        p.eta1 = rat(2);
        assert!(p.validate(2).is_err());
        p.eta1 = rat(1);
        assert!(p.validate(2).is_ok());
        let mut p = params(Theorem::General);
        p.y1 = ratio(1, 2);
        assert!(p.validate(2).is_err());
        let mut p = params(Theorem::Hancl);
        p.epsilon = ratio(1, 10);
        p.gamma = Some(rat(1));
        p.alpha = ratio(9, 10);
        assert!(p.validate(1).is_ok());
        p.alpha = ratio(1, 10);
        assert!(p.validate(1).is_err());
    }

    #[test]
    fn degree_one_agrees_with_general_criterion() {
        // at d = 1 with η₂ = 1 and η₁ = y₂ = β the general base collapses to (2+δ)/(1−β) + 1
        for (b, dl) in [(ratio(1, 3), ratio(1, 7)), (rat(0), ratio(1, 100)), (ratio(1, 5), rat(1))] {
            let mut p = params(Theorem::General);
            p.beta = b.clone();
            p.y2 = b.clone();
            p.eta1 = b.clone();
            p.delta = dl.clone();
            p.epsilon = rat(3);
            let g = required_bases(Theorem::General, 1, &p).unwrap();
            let c = required_bases(Theorem::DegreeOne, 1, &p).unwrap();
            assert_eq!(value(&g, "transcendence_1"), value(&c, "transcendence"));
        }
    }

    #[test]
    fn growth_verdicts() {
        let g14 = GrowthProfile::pure(14, 0.96);
        assert_eq!(divergence_verdict(&g14, &rat(13)), GrowthVerdict::Diverges);
        let g5 = GrowthProfile::new(rat(5), 0.0, 1.0, 0.48, 0.0, 0.0).unwrap();
        assert_eq!(divergence_verdict(&g5, &rat(5)), GrowthVerdict::BoundaryDiverges);
        let g7 = GrowthProfile::pure(7, 0.48);
        assert_eq!(divergence_verdict(&g7, &rat(9)), GrowthVerdict::Bounded);
        let g9 = GrowthProfile::pure(9, 0.96);
        assert_eq!(divergence_verdict(&g9, &rat(9)), GrowthVerdict::BoundaryBounded);
    }

    fn outcome(vs: &[Verdict]) -> HypothesisOutcome {
        let mut o = HypothesisOutcome::new("(2)", "test");
        o.verdicts = vs.iter().enumerate().map(|(i, v)| (i as u64 + 1, *v)).collect();
        o
    }

    #[test]
    fn report_assembly() {
        let p = params(Theorem::RationalA);
        let bases = required_bases(Theorem::RationalA, 1, &p).unwrap();
        let fast = GrowthProfile::pure(3, 1.0);
        let r = assemble_report(Theorem::RationalA, vec![outcome(&[Verdict::Holds; 3])], bases.clone(), &fast);
        assert_eq!(r.overall, Overall::TranscendenceCriteriaMet);
        assert_eq!(r.n_range, (1, 3));
        let slow = GrowthProfile::pure(2, 1.0);
        let r = assemble_report(Theorem::RationalA, vec![outcome(&[Verdict::Holds])], bases.clone(), &GrowthProfile::pure(3, 1.0));
        assert_eq!(r.overall.name(), "TranscendenceCriteriaMet");
        let mut p4 = params(Theorem::RationalA);
        p4.y = rat(3);
        let b4 = required_bases(Theorem::RationalA, 1, &p4).unwrap();
        let r = assemble_report(Theorem::RationalA, vec![outcome(&[Verdict::Holds])], b4, &slow);
        assert!(matches!(r.overall, Overall::NotApplicable(ref v) if v.iter().any(|s| s.contains("growth"))));
        let r = assemble_report(Theorem::RationalA, vec![outcome(&[Verdict::Holds, Verdict::Undecided])], bases.clone(), &fast);
        assert_eq!(r.overall, Overall::Inconclusive);
        let r = assemble_report(Theorem::RationalA, vec![outcome(&[Verdict::Fails, Verdict::Undecided])], bases, &fast);
        assert!(matches!(r.overall, Overall::NotApplicable(_)));
    }
}
