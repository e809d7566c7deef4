//! JSON and text renderings of a verification report.

use serde_json::{json, Map, Value};

use super::{approx, Overall, VerificationReport};

/// Report as a JSON value.
pub fn report_value(r: &VerificationReport) -> Value {
    let hypotheses: Vec<Value> = r
        .hypotheses
        .iter()
        .map(|o| {
            json!({
                "label": o.label,
                "description": o.description,
                "verdict": o.verdict().as_str(),
                "verdicts": o.verdicts.iter().map(|(n, v)| json!({"n": n, "verdict": v.as_str()})).collect::<Vec<_>>(),
                "first_failure": o.first_failure(),
                "note": o.note,
            })
        })
        .collect();
    let mut bases = Map::new();
    let mut base_values = Map::new();
    let mut growth = Map::new();
    for (b, (_, g)) in r.bases.iter().zip(&r.growth) {
        bases.insert(b.name.clone(), Value::String(b.symbolic()));
        base_values.insert(b.name.clone(), json!({"exact": b.value.to_string(), "approx": approx(&b.value), "kind": b.kind}));
        growth.insert(b.name.clone(), Value::String(g.as_str().into()));
    }
    let reasons = match &r.overall {
        Overall::NotApplicable(v) => v.clone(),
        _ => vec![],
    };
    json!({
        "theorem": r.theorem.id(),
        "sequence": r.sequence,
        "n_range": [r.n_range.0, r.n_range.1],
        "hypotheses": hypotheses,
        "bases": bases,
        "base_values": base_values,
        "growth": r.growth_overall().map(|g| g.as_str()),
        "growth_by_base": growth,
        "growth_base": r.growth_base.to_string(),
        "overall": r.overall.name(),
        "reasons": reasons,
        "zeta": r.zeta,
        "index_convention": r.index_convention.map(|c| c.to_string()),
        "precision_bits": r.precision_bits,
        "delta": r.delta.to_string(),
    })
}

/// Pretty JSON with sorted keys, so equal reports serialise to identical bytes.
pub fn report_json(r: &VerificationReport) -> String {
    serde_json::to_string_pretty(&report_value(r)).expect("report values are always serialisable")
}

/// Human-readable summary.
pub fn report_text(r: &VerificationReport) -> String {
    let mut s = format!(
        "criterion {} on {} for n = {}..{} ({} bits)\n",
        r.theorem, r.sequence, r.n_range.0, r.n_range.1, r.precision_bits
    );
    if let Some(c) = r.index_convention {
        s += &format!("index convention: {c}\n");
    }
    for o in &r.hypotheses {
        s += &format!("  {:<14} {:<9} {}", o.label, o.verdict().as_str(), o.description);
        if let Some(n) = o.first_failure() {
            s += &format!("  [first failure n={n}]");
        }
        if let Some(note) = &o.note {
            s += &format!("  ({note})");
        }
        s.push('\n');
    }
    for (b, (_, g)) in r.bases.iter().zip(&r.growth) {
        s += &format!("  base {:<16} {:<10} = {:<10.6} vs g = {}: {}\n", b.name, b.symbolic(), approx(&b.value), r.growth_base, g.as_str());
    }
    s += &format!("overall: {}\n", r.overall.name());
    if let Overall::NotApplicable(reasons) = &r.overall {
        for x in reasons {
            s += &format!("  - {x}\n");
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;
    use crate::exactmath::Verdict;
    use crate::sequences::GrowthProfile;

    #[test]
    fn json_round_trip_is_stable() {
        let p = CriterionParams::new(Theorem::RationalA);
        let bases = required_bases(Theorem::RationalA, 2, &p).unwrap();
        let mut o = HypothesisOutcome::new("(2)", "growth");
        o.verdicts = vec![(1, Verdict::Holds), (2, Verdict::Fails)];
        let r = assemble_report(Theorem::RationalA, vec![o], bases, &GrowthProfile::pure(9, 1.0));
        let text = report_json(&r);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&v).unwrap(), text);
        assert_eq!(v["theorem"], "1.4");
        assert_eq!(v["overall"], "NotApplicable");
        assert_eq!(v["hypotheses"][0]["first_failure"], 2);
        assert_eq!(v["bases"]["transcendence"], "5");
        assert!(report_text(&r).contains("first failure n=2"));
    }
}
