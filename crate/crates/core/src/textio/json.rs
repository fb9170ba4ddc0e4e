use serde::{Deserialize, Serialize};

use super::Polynomial;
use crate::coeff::FieldSpec;
use crate::cpoly::{CPoly, ExpVec};
use crate::error::{Error, Result};
use crate::ncpoly::{NcPoly, Word};
use crate::poly::{Alphabet, Monomial, Poly};

/// `"Q"` or `"GF(p)"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldJson(pub FieldSpec);

impl Serialize for FieldJson {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldJson {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_field_name(&s)
            .map(FieldJson)
            .map_err(serde::de::Error::custom)
    }
}

fn parse_field_name(s: &str) -> Result<FieldSpec> {
    if s == "Q" {
        return Ok(FieldSpec::rationals());
    }
    let p = s
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| Error::Json(format!("unknown field `{s}`")))?;
    FieldSpec::prime(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TermJson {
    Word { coeff: String, word: Vec<String> },
    Exps { coeff: String, exps: Vec<u32> },
}

/// Serialized polynomial; terms in descending monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub field: FieldJson,
    pub ring: String,
    pub generators: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl From<&NcPoly> for PolyJson {
    fn from(p: &NcPoly) -> Self {
        let names = p.alphabet().names();
        PolyJson {
            field: FieldJson(p.field()),
            ring: "free".into(),
            generators: names.to_vec(),
            terms: p
                .terms()
                .iter()
                .rev()
                .map(|(w, c)| TermJson::Word {
                    coeff: c.to_string(),
                    word: w.letters_iter().map(|l| names[l].clone()).collect(),
                })
                .collect(),
        }
    }
}

impl From<&CPoly> for PolyJson {
    fn from(p: &CPoly) -> Self {
        PolyJson {
            field: FieldJson(p.field()),
            ring: "comm".into(),
            generators: p.alphabet().names().to_vec(),
            terms: p
                .terms()
                .iter()
                .rev()
                .map(|(e, c)| TermJson::Exps {
                    coeff: c.to_string(),
                    exps: e.exponents().to_vec(),
                })
                .collect(),
        }
    }
}

impl From<&Polynomial> for PolyJson {
    fn from(p: &Polynomial) -> Self {
        match p {
            Polynomial::Free(p) => p.into(),
            Polynomial::Comm(p) => p.into(),
        }
    }
}

impl PolyJson {
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        let field = self.field.0;
        let alphabet = Alphabet::new(self.generators.iter().cloned())?;
        let bad = |msg: &str| Error::Json(msg.to_string());
        match self.ring.as_str() {
            "free" => {
                let mut terms = Vec::new();
                for t in &self.terms {
                    let TermJson::Word { coeff, word } = t else {
                        return Err(bad("free polynomial term without `word`"));
                    };
                    let letters = word
                        .iter()
                        .map(|g| alphabet.index_of(g))
                        .collect::<Result<Vec<_>>>()?;
                    terms.push((Word::new(letters), field.parse_scalar(coeff)?));
                }
                Ok(Polynomial::Free(canonical(field, alphabet, terms)?))
            }
            "comm" => {
                let mut terms = Vec::new();
                for t in &self.terms {
                    let TermJson::Exps { coeff, exps } = t else {
                        return Err(bad("commutative polynomial term without `exps`"));
                    };
                    if exps.len() != alphabet.len() {
                        return Err(bad("exponent vector length differs from generator count"));
                    }
                    terms.push((
                        ExpVec::new(exps.iter().copied()),
                        field.parse_scalar(coeff)?,
                    ));
                }
                Ok(Polynomial::Comm(canonical(field, alphabet, terms)?))
            }
            other => Err(Error::Json(format!("unknown ring `{other}`"))),
        }
    }
}

fn canonical<M: Monomial>(
    field: FieldSpec,
    alphabet: std::sync::Arc<Alphabet>,
    terms: Vec<(M, crate::coeff::Scalar)>,
) -> Result<Poly<M>> {
    let n = terms.len();
    let p = Poly::from_terms(field, alphabet, terms);
    if p.len() != n {
        return Err(Error::Json("repeated monomial or zero coefficient".into()));
    }
    Ok(p)
}
