//! JSON description of a number field.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::NumberField;
use crate::{BigRat, Error, Result};

/// Integer or rational literal: a JSON number or a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    pub fn to_rat(&self) -> Result<BigRat> {
        match self {
            Literal::Int(i) => Ok(BigRat::from_integer((*i).into())),
            Literal::Text(s) => parse_rat(s),
        }
    }

    pub fn to_int(&self) -> Result<BigInt> {
        let r = self.to_rat()?;
        if r.is_integer() {
            Ok(r.to_integer())
        } else {
            Err(Error::Invalid(format!("expected an integer, got {r}")))
        }
    }
}

/// Parse `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let bad = || Error::Invalid(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRat::new(BigInt::from_str(p.trim()).map_err(|_| bad())?, q))
        }
        None => Ok(BigRat::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Field description file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub minpoly: Vec<Literal>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<Literal>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinguished_embedding: Option<usize>,
    #[serde(default)]
    pub assume_irreducible: bool,
}

impl FieldSpec {
    pub fn build(&self) -> Result<NumberField> {
        let minpoly = self.minpoly.iter().map(Literal::to_int).collect::<Result<Vec<_>>>()?;
        let basis = match &self.basis {
            None => None,
            Some(b) => Some(
                b.iter().map(|v| v.iter().map(Literal::to_rat).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?,
            ),
        };
        NumberField::new(minpoly, basis, self.distinguished_embedding, self.assume_irreducible)
    }

    pub fn from_field(k: &NumberField) -> Self {
        FieldSpec {
            minpoly: k.minpoly().coeffs().iter().map(|c| Literal::Text(c.to_string())).collect(),
            basis: (!k.is_power_basis())
                .then(|| k.basis_vectors().iter().map(|v| v.iter().map(|c| Literal::Text(c.to_string())).collect()).collect()),
            distinguished_embedding: Some(k.distinguished()),
            assume_irreducible: k.assumes_irreducible(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Invalid(format!("field file: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_from_json() {
        let spec = FieldSpec::from_json(r#"{"minpoly": [-1, -1, 1], "basis": [["1", "0"], ["-1/2", "1"]]}"#).unwrap();
        let k = spec.build().unwrap();
        assert_eq!(k.degree(), 2);
        assert!(!k.is_power_basis());
        let again = FieldSpec::from_field(&k).build().unwrap();
        assert_eq!(k, again);
    }

    #[test]
    fn rationals_parse() {
        assert_eq!(parse_rat(" -3/6 ").unwrap(), BigRat::new((-1).into(), 2.into()));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
