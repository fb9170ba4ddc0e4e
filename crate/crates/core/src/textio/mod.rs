//! Text front end: sessions, parsing, canonical printing, JSON.

pub mod cli;
mod json;
mod parse;

use std::fmt;
use std::sync::Arc;

pub use json::{FieldJson, PolyJson, TermJson};
pub use parse::parse_poly;

use crate::coeff::FieldSpec;
use crate::cpoly::CPoly;
use crate::error::Result;
use crate::ncpoly::NcPoly;
use crate::poly::Alphabet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingMode {
    Free,
    Commutative,
}

/// Field, generators and ring flavor shared by all expressions of one
/// invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Session {
    pub field: FieldSpec,
    pub alphabet: Arc<Alphabet>,
    pub mode: RingMode,
}

impl Session {
    pub fn new(field: FieldSpec, alphabet: Arc<Alphabet>, mode: RingMode) -> Self {
        Session {
            field,
            alphabet,
            mode,
        }
    }

    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        Ok(match self.mode {
            RingMode::Free => Polynomial::Free(parse_poly(src, self.field, &self.alphabet)?),
            RingMode::Commutative => Polynomial::Comm(parse_poly(src, self.field, &self.alphabet)?),
        })
    }
}

/// A polynomial of either ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Polynomial {
    Free(NcPoly),
    Comm(CPoly),
}

impl Polynomial {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Polynomial> {
        let parsed: PolyJson =
            serde_json::from_str(text).map_err(|e| crate::error::Error::Json(e.to_string()))?;
        parsed.to_polynomial()
    }
}

impl From<NcPoly> for Polynomial {
    fn from(p: NcPoly) -> Self {
        Polynomial::Free(p)
    }
}

impl From<CPoly> for Polynomial {
    fn from(p: CPoly) -> Self {
        Polynomial::Comm(p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Polynomial::Free(p) => p.fmt(f),
            Polynomial::Comm(p) => p.fmt(f),
        }
    }
}
