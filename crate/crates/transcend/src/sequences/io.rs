//! JSON description of a sequence family.

use serde::{Deserialize, Serialize};

use super::{infer_profile, parse_seq, CSeq, DeclaredExponents, GrowthProfile, IndexConvention, SequenceSpec, Zeta};
use crate::numberfield::{parse_rat, FieldSpec, Literal};
use crate::numberfield::NumberField;
use crate::{BigRat, Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileSpec {
    pub g: Literal,
    #[serde(rename = "A", default)]
    pub a: f64,
    #[serde(rename = "A_L", default)]
    pub a_l: f64,
    #[serde(rename = "B", default)]
    pub b: f64,
    #[serde(rename = "C", default)]
    pub c: f64,
    #[serde(rename = "D", default)]
    pub d: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta2: Option<String>,
}

/// `ζ` as a field element (definition-language string) or a rational complex constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ZetaSpec {
    Element(String),
    Constant { re: String, #[serde(default = "zero_text")] im: String },
}

fn zero_text() -> String {
    "0".into()
}

/// Sequence file: `{"field", "a", "b", "c", "basis", "profile", "exponents", "zeta"}`.
/// The field defaults to `Q(√5)` and the basis to the field's declared basis;
/// a missing profile is inferred from measured growth.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SequenceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub a: String,
    pub b: String,
    #[serde(default = "free")]
    pub c: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileSpec>,
    #[serde(default)]
    pub exponents: ExponentSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<ZetaSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index_convention: Option<IndexConvention>,
}

fn free() -> String {
    "free".into()
}

fn opt_rat(s: &Option<String>) -> Result<Option<BigRat>> {
    s.as_deref().map(parse_rat).transpose()
}

impl SequenceFile {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Invalid(format!("sequence file: {e}")))
    }

    pub fn build(&self) -> Result<SequenceSpec> {
        let k = match &self.field {
            Some(f) => f.build()?,
            None => NumberField::golden(),
        };
        let placeholder = GrowthProfile::pure(2, 1.0);
        let mut spec = SequenceSpec::from_dsl(self.name.as_deref().unwrap_or("user"), &k, &self.a, &self.b, placeholder)?;
        if self.c != "free" {
            spec.c = CSeq::Expr(self.c.clone(), parse_seq(&self.c, &k)?);
        }
        if let Some(b) = &self.basis {
            spec.basis = b.iter().map(|s| parse_seq(s, &k)?.eval(1, &k)).collect::<Result<_>>()?;
            spec.basis_names = b.clone();
        }
        let e = &self.exponents;
        spec.exponents = DeclaredExponents {
            beta: opt_rat(&e.beta)?,
            y: opt_rat(&e.y)?,
            y1: opt_rat(&e.y1)?,
            y2: opt_rat(&e.y2)?,
            eta1: opt_rat(&e.eta1)?,
            eta2: opt_rat(&e.eta2)?,
        };
        spec.zeta = match &self.zeta {
            None => None,
            Some(ZetaSpec::Element(s)) => Some(Zeta::Element(parse_seq(s, &k)?.eval(1, &k)?)),
            Some(ZetaSpec::Constant { re, im }) => Some(Zeta::Constant { re: parse_rat(re)?, im: parse_rat(im)? }),
        };
        spec.convention = self.index_convention;
        spec.profile = match &self.profile {
            Some(p) => {
                let prof = GrowthProfile::new(p.g.to_rat()?, p.a, p.a_l, p.b, p.c, p.d)?;
                spec.profile = prof.clone();
                spec.validate_profile()?;
                prof
            }
            None => infer_profile(&spec)?,
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::rat;

    #[test]
    fn minimal_file() {
        let f = SequenceFile::from_json(r#"{"a": "F(10^n)*F(10^n+1)", "b": "F(10^n+1)*sqrt(5) + F(10^n)"}"#).unwrap();
        let s = f.build().unwrap();
        assert_eq!(s.profile.g, rat(10));
        assert_eq!(s.c, CSeq::Free);
        assert_eq!(s.basis.len(), 2);
    }

    #[test]
    fn full_file() {
        let json = r#"{
            "field": {"minpoly": [-1, -1, 1]},
            "a": "phi^(7^n)", "b": "1", "c": "n",
            "basis": ["1", "phi"],
            "profile": {"g": 7, "A": 0.48121182505960347},
            "exponents": {"beta": "0", "y": "1", "eta1": "0", "eta2": "1"},
            "zeta": {"re": "1"}
        }"#;
        let s = SequenceFile::from_json(json).unwrap().build().unwrap();
        assert_eq!(s.c_at(3).unwrap(), 3.into());
        assert_eq!(s.exponents.eta2, Some(rat(1)));
        assert_eq!(s.zeta, Some(Zeta::one()));
    }

    #[test]
    fn wrong_profile_is_rejected() {
        let json = r#"{"a": "phi^(7^n)", "b": "1", "profile": {"g": 7, "A": 0.9}}"#;
        assert!(matches!(SequenceFile::from_json(json).unwrap().build(), Err(Error::InvalidSequence(_))));
    }

    #[test]
    fn element_zeta() {
        let json = r#"{"a": "phi^(7^n)", "b": "1", "zeta": "phi - 1"}"#;
        let s = SequenceFile::from_json(json).unwrap().build().unwrap();
        assert!(matches!(s.zeta, Some(Zeta::Element(_))));
    }
}
