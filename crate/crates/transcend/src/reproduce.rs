//! Runs the built-in example families against every criterion they are discussed under,
//! comparing each outcome with the stated conclusion, plus the applicability scans for the
//! two-series family under the general criterion.

use std::cmp::Ordering;

use serde_json::{json, Value};

use crate::approximants::{partial_sum_separation, Separation};
use crate::criteria::{
    assemble_report, divergence_verdict, min_required_base, report_text, report_value, verify, BoundExpr,
    CriterionParams, ExponentBounds, Grid, GrowthVerdict, HypothesisOutcome, Overall, Theorem, VerificationReport,
};
use crate::exactmath::{Precision, Verdict};
use crate::numberfield::{rat, ratio};
use crate::sequences::{builtin_variant, ExampleId, ExampleOptions, GrowthProfile, IndexConvention, SequenceSpec};
use crate::{BigRat, Result};

/// Conclusion stated for one family under one criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    Applicable,
    NotApplicable,
}

impl Claim {
    pub fn as_str(self) -> &'static str {
        match self {
            Claim::Applicable => "applicable",
            Claim::NotApplicable => "not applicable",
        }
    }
}

/// Best-case exponent scan for a criterion the family is claimed not to satisfy.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessScan {
    pub theorem: Theorem,
    pub d: usize,
    pub bounds: Vec<(String, String)>,
    pub grid: String,
    pub min: BigRat,
    pub at: BigRat,
    pub growth_base: BigRat,
    pub growth: GrowthVerdict,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExampleEntry {
    pub theorem: Theorem,
    pub variant: String,
    pub claim: Claim,
    pub report: Option<VerificationReport>,
    pub scan: Option<WitnessScan>,
    pub separation: Option<Separation>,
    pub agrees: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExampleRun {
    pub id: ExampleId,
    pub convention: IndexConvention,
    pub x: Option<String>,
    pub entries: Vec<ExampleEntry>,
}

/// Range, precision and `δ` for an example run.
#[derive(Clone, Debug)]
pub struct RunSettings {
    pub n_range: (u64, u64),
    pub prec: Precision,
    pub delta: BigRat,
}

impl Default for RunSettings {
    fn default() -> Self {
        RunSettings { n_range: (2, 4), prec: Precision { bits: 256, max_bits: 1024 }, delta: ratio(1, 100) }
    }
}

impl ExampleRun {
    /// Some criterion could not be decided.
    pub fn inconclusive(&self) -> bool {
        self.entries.iter().any(|e| e.report.as_ref().is_some_and(|r| r.overall == Overall::Inconclusive))
    }

    pub fn discrepancies(&self) -> usize {
        self.entries.iter().filter(|e| !e.agrees).count()
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                json!({
                    "theorem": e.theorem.id(),
                    "variant": e.variant,
                    "claim": e.claim.as_str(),
                    "agrees": e.agrees,
                    "note": e.note,
                    "report": e.report.as_ref().map(report_value),
                    "scan": e.scan.as_ref().map(scan_value),
                    "separation": e.separation.as_ref().map(|s| s.as_str()),
                })
            })
            .collect();
        json!({
            "example": self.id.as_str(),
            "index_convention": self.convention.to_string(),
            "x": self.x,
            "entries": entries,
            "discrepancies": self.discrepancies(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("example {} ({} indexing)\n", self.id, self.convention);
        if let Some(x) = &self.x {
            s += &format!("x = {x}\n");
        }
        for e in &self.entries {
            s += &format!(
                "\n== criterion {} on the {} decomposition: claimed {}, {}\n",
                e.theorem,
                e.variant,
                e.claim.as_str(),
                if e.agrees { "agrees" } else { "DISCREPANCY" }
            );
            if let Some(r) = &e.report {
                s += &report_text(r);
            }
            if let Some(w) = &e.scan {
                s += &scan_text(w);
            }
            if let Some(sep) = &e.separation {
                s += &format!("partial-sum separation: {}\n", sep.as_str());
            }
            if let Some(n) = &e.note {
                s += &format!("note: {n}\n");
            }
        }
        s += &format!("\n{} discrepancies\n", self.discrepancies());
        s
    }
}

fn scan_value(w: &WitnessScan) -> Value {
    let bounds: serde_json::Map<String, Value> =
        w.bounds.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
    json!({
        "theorem": w.theorem.id(),
        "d": w.d,
        "bounds": bounds,
        "grid": w.grid,
        "min_base": w.min.to_string(),
        "at": w.at.to_string(),
        "growth_base": w.growth_base.to_string(),
        "growth": w.growth.as_str(),
    })
}

fn scan_text(w: &WitnessScan) -> String {
    let b: Vec<String> = w.bounds.iter().map(|(k, v)| format!("{k} = {v}")).collect();
    format!(
        "best-case scan over c in {}: {}\n  smallest required base {} (at c = {}) vs g = {}: {}\n",
        w.grid,
        b.join(", "),
        w.min,
        w.at,
        w.growth_base,
        w.growth.as_str()
    )
}

fn params_for(theorem: Theorem, spec: &SequenceSpec, epsilon: BigRat, delta: &BigRat) -> CriterionParams {
    let mut p = CriterionParams::new(theorem).with_declared(&spec.exponents);
    p.epsilon = epsilon;
    p.delta = delta.clone();
    p
}

/// Overall verdict recomputed after replacing hypotheses.
fn reassemble(old: &VerificationReport, hyps: Vec<HypothesisOutcome>, profile: &GrowthProfile) -> VerificationReport {
    let mut r = assemble_report(old.theorem, hyps, old.bases.clone(), profile);
    r.sequence = old.sequence.clone();
    r.n_range = old.n_range;
    r.zeta = old.zeta.clone();
    r.index_convention = old.index_convention;
    r.precision_bits = old.precision_bits;
    r.delta = old.delta.clone();
    r
}

fn report_entry(theorem: Theorem, variant: &str, claim: Claim, report: VerificationReport) -> ExampleEntry {
    let agrees = matches!(
        (&report.overall, claim),
        (Overall::TranscendenceCriteriaMet, Claim::Applicable)
            | (Overall::NotApplicable(_) | Overall::IrrationalityCriteriaMet, Claim::NotApplicable)
    );
    let note = if agrees {
        (claim == Claim::NotApplicable).then(|| "the transcendence growth condition is not met".to_string())
    } else {
        Some(match &report.overall {
            Overall::IrrationalityCriteriaMet => format!(
                "only the irrationality base is outgrown; the transcendence growth is {}",
                report.growth_overall().map_or("n/a", |g| g.as_str())
            ),
            Overall::Inconclusive => "some hypotheses could not be decided at this precision".into(),
            Overall::NotApplicable(reasons) => reasons.join("; "),
            Overall::TranscendenceCriteriaMet => "every hypothesis holds and the growth condition is met".into(),
        })
    };
    ExampleEntry {
        theorem,
        variant: variant.into(),
        claim,
        report: Some(report),
        scan: None,
        separation: None,
        agrees,
        note,
    }
}

struct Witness<'a> {
    theorem: Theorem,
    bounds: &'a [(&'a str, &'a str)],
    grid: &'a str,
}

fn witness_entry(w: &Witness, profile: &GrowthProfile, d: usize, delta: &BigRat) -> Result<ExampleEntry> {
    let mut eb = ExponentBounds { delta: delta.clone(), ..Default::default() };
    for (name, src) in w.bounds {
        let e: Option<BoundExpr> = Some(src.parse()?);
        match *name {
            "beta" => eb.beta = e,
            "y" => eb.y = e,
            "y1" => eb.y1 = e,
            "y2" => eb.y2 = e,
            "eta1" => eb.eta1 = e,
            _ => eb.eta2 = e,
        }
    }
    let points = w.grid.parse::<Grid>()?.points()?;
    let (min, at) = min_required_base(w.theorem, d, &eb, &points)?;
    let growth = divergence_verdict(profile, &min);
    let agrees = !growth.diverges();
    let note = (!agrees).then(|| {
        format!("the scan finds exponents with required base {min} below the growth base {}", profile.g)
    });
    Ok(ExampleEntry {
        theorem: w.theorem,
        variant: "best-case exponents".into(),
        claim: Claim::NotApplicable,
        report: None,
        scan: Some(WitnessScan {
            theorem: w.theorem,
            d,
            bounds: w.bounds.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
            grid: w.grid.into(),
            min,
            at,
            growth_base: profile.g.clone(),
            growth,
        }),
        separation: None,
        agrees,
        note,
    })
}

fn is_phibar(spec: &SequenceSpec) -> bool {
    match (&spec.x, spec.field.phi()) {
        (Some(x), Ok(Some(phi))) => *x == &spec.field.one() - &phi,
        _ => false,
    }
}

/// Replace a failed positivity condition (4) by the partial-sum separation check.
fn apply_separation(
    entry: &mut ExampleEntry,
    spec: &SequenceSpec,
    n_max: u64,
    prec: Precision,
) -> Result<()> {
    let Some(report) = &entry.report else {
        return Ok(());
    };
    let Some(idx) = report.hypotheses.iter().position(|o| o.label == "(4)") else {
        return Ok(());
    };
    if report.hypotheses[idx].verdict() == Verdict::Holds {
        return Ok(());
    }
    let sep = partial_sum_separation(spec, n_max, prec)?;
    let v = if sep == Separation::Separated { Verdict::Holds } else { Verdict::Undecided };
    let mut hyps = report.hypotheses.clone();
    let mut o = HypothesisOutcome::new("(4)", "partial sums s_N pairwise distinct (replaces the positivity condition)");
    o.verdicts = (report.n_range.0..=report.n_range.1).map(|n| (n, v)).collect();
    o.note = Some(format!("no choice of ζ makes ℜ(ζ b_n) positive; checked s_N ≠ s_M for N < M ≤ {n_max}"));
    hyps[idx] = o;
    let fixed = reassemble(report, hyps, &spec.profile);
    let claim = entry.claim;
    let mut rebuilt = report_entry(entry.theorem, &entry.variant, claim, fixed);
    rebuilt.separation = Some(sep);
    *entry = rebuilt;
    Ok(())
}

/// Check a built-in family against every criterion it is discussed under.
pub fn run_example(id: ExampleId, opts: &ExampleOptions, s: &RunSettings) -> Result<ExampleRun> {
    let half = ratio(1, 2);
    let two = rat(2);
    let spec_of = |variant: &str| builtin_variant(id, variant, opts);
    let check = |theorem: Theorem, variant: &str, claim: Claim, epsilon: &BigRat| -> Result<ExampleEntry> {
        let spec = spec_of(variant)?;
        let p = params_for(theorem, &spec, epsilon.clone(), &s.delta);
        let report = verify(&spec, &p, s.n_range, s.prec)?;
        Ok(report_entry(theorem, variant, claim, report))
    };
    let primary = spec_of("primary")?;
    let d = primary.field.degree();
    let mut entries = Vec::new();
    match id {
        ExampleId::TwoSeries => {
            let mut e = check(Theorem::RationalA, "primary", Claim::Applicable, &two)?;
            if is_phibar(&primary) {
                apply_separation(&mut e, &primary, s.n_range.1.max(4), s.prec)?;
            }
            entries.push(e);
        }
        ExampleId::PolyPower => {
            entries.push(check(Theorem::IntegerB, "primary", Claim::Applicable, &half)?);
            entries.push(check(Theorem::RationalA, "rewrite", Claim::Applicable, &half)?);
        }
        ExampleId::GoldenPower => {
            entries.push(check(Theorem::IntegerB, "primary", Claim::Applicable, &half)?);
            entries.push(check(Theorem::RationalA, "rewrite", Claim::NotApplicable, &half)?);
            let w = Witness { theorem: Theorem::RationalA, bounds: &[("y", "2 - c"), ("beta", "c")], grid: "[0,1):1/10" };
            entries.push(witness_entry(&w, &primary.profile, d, &s.delta)?);
        }
        ExampleId::FibRatio => {
            entries.push(check(Theorem::RationalA, "primary", Claim::Applicable, &half)?);
            entries.push(check(Theorem::General, "alternative", Claim::Applicable, &half)?);
            let beta = if opts.convention == IndexConvention::Nested { "(1 + c)/(10 + c)" } else { "(1 + c)/(2 + c)" };
            let bounds = [("y", "1"), ("beta", beta)];
            let w = Witness { theorem: Theorem::IntegerB, bounds: &bounds, grid: "[0,10]:1/10" };
            entries.push(witness_entry(&w, &primary.profile, d, &s.delta)?);
        }
        ExampleId::Mixed => {
            entries.push(check(Theorem::General, "primary", Claim::Applicable, &two)?);
            let w = Witness {
                theorem: Theorem::RationalA,
                bounds: &[("y", "1 + 3/c"), ("beta", "max(0, 1 - 1/c)")],
                grid: "(0,10]:1/10",
            };
            entries.push(witness_entry(&w, &primary.profile, d, &s.delta)?);
            let w = Witness { theorem: Theorem::IntegerB, bounds: &[("y", "1"), ("beta", "(2 + c)/(3 + c)")], grid: "[0,10]:1/10" };
            entries.push(witness_entry(&w, &primary.profile, d, &s.delta)?);
        }
    }
    Ok(ExampleRun { id, convention: opts.convention, x: opts.x.clone(), entries })
}

/// One branch of an applicability scan.
#[derive(Clone, Debug)]
pub struct Branch {
    pub name: String,
    pub theorem: Theorem,
    pub d: usize,
    pub bounds: ExponentBounds,
    pub grid: Grid,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BranchResult {
    pub name: String,
    pub theorem: Theorem,
    pub d: usize,
    pub min: BigRat,
    pub at: BigRat,
    pub growth_base: BigRat,
    pub ordering: Ordering,
}

impl BranchResult {
    pub fn verdict(&self) -> &'static str {
        match self.ordering {
            Ordering::Less => "applicable",
            Ordering::Equal => "boundary",
            Ordering::Greater => "not immediately applicable",
        }
    }
}

/// Minimum required base per branch, compared with the growth base `g`.
pub fn run_applicability(branches: &[Branch], g: &BigRat) -> Result<Vec<BranchResult>> {
    branches
        .iter()
        .map(|b| {
            let (min, at) = min_required_base(b.theorem, b.d, &b.bounds, &b.grid.points()?)?;
            let ordering = min.cmp(g);
            Ok(BranchResult { name: b.name.clone(), theorem: b.theorem, d: b.d, min, at, growth_base: g.clone(), ordering })
        })
        .collect()
}

pub fn applicability_json(results: &[BranchResult]) -> Value {
    let branches: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "branch": r.name,
                "theorem": r.theorem.id(),
                "d": r.d,
                "min_base": r.min.to_string(),
                "at": r.at.to_string(),
                "growth_base": r.growth_base.to_string(),
                "verdict": r.verdict(),
            })
        })
        .collect();
    let all_blocked = results.iter().all(|r| r.ordering == Ordering::Greater);
    json!({"branches": branches, "overall": if all_blocked { "not immediately applicable" } else { "applicable on some branch" }})
}

pub fn applicability_text(results: &[BranchResult]) -> String {
    let mut s = String::new();
    for r in results {
        s += &format!(
            "{:<28} criterion {} (d = {}): min base {} at c = {} vs g = {}: {}\n",
            r.name,
            r.theorem,
            r.d,
            r.min,
            r.at,
            r.growth_base,
            r.verdict()
        );
    }
    s
}

/// The two-series family under the general criterion: the `c > −1` and `c ≤ −1` branches
/// in `Q(x)`, and the degree-4 floor when the scaling leaves `Q(x)`.
pub fn two_series_branches() -> Result<Vec<Branch>> {
    let e = |s: &str| -> Result<Option<BoundExpr>> { Ok(Some(s.parse()?)) };
    let y1 = "(2 - c/4)/(2 + c)";
    Ok(vec![
        Branch {
            name: "c > -1".into(),
            theorem: Theorem::General,
            d: 2,
            bounds: ExponentBounds {
                y1: e(y1)?,
                y2: e("(1 + c)/(2 + c)")?,
                beta: e("(1 + c)/(2 + c)")?,
                ..Default::default()
            },
            grid: "(-1,3]:1/10".parse()?,
        },
        Branch {
            name: "c <= -1".into(),
            theorem: Theorem::General,
            d: 2,
            bounds: ExponentBounds { y1: e(y1)?, y2: e("0")?, beta: e("0")?, ..Default::default() },
            grid: "(-19/10,-1]:1/10".parse()?,
        },
        Branch {
            name: "scaling outside Q(x), d = 4".into(),
            theorem: Theorem::General,
            d: 4,
            bounds: ExponentBounds { y1: e("1")?, y2: e("0")?, beta: e("0")?, ..Default::default() },
            grid: "0".parse()?,
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_series_branches_are_all_blocked() {
        let r = run_applicability(&two_series_branches().unwrap(), &rat(9)).unwrap();
        assert_eq!(r[0].min, ratio(103, 10));
        assert_eq!(r[1].min, rat(10));
        assert_eq!(r[2].min, rat(17));
        assert!(r.iter().all(|b| b.verdict() == "not immediately applicable"));
    }

    #[test]
    fn golden_power_run() {
        let run = run_example(ExampleId::GoldenPower, &ExampleOptions::default(), &RunSettings::default()).unwrap();
        assert_eq!(run.entries.len(), 3);
        assert!(run.entries.iter().all(|e| e.agrees), "{}", run.to_text());
        let scan = run.entries[2].scan.as_ref().unwrap();
        assert_eq!((scan.min.clone(), scan.growth_base.clone()), (rat(9), rat(7)));
    }
}
