//! The canonical JSON form of a [`LaurentPoly`]:
//! `{"arity":[m,n],"terms":[{"exp2":[..],"coeff":"<decimal>"}]}`, terms in
//! descending term order.

use serde::{Deserialize, Serialize};

use super::exponent::ExponentVector;
use super::int::Int;
use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Largest accepted absolute doubled exponent when decoding.
pub const MAX_DOUBLED_EXPONENT: i64 = 1 << 24;
/// Largest accepted arity component when decoding.
pub const MAX_ARITY: usize = 64;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    arity: [usize; 2],
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    exp2: Vec<i64>,
    coeff: String,
}

impl LaurentPoly {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_wire()).expect("plain data serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("plain data serializes")
    }

    fn to_wire(&self) -> PolyJson {
        PolyJson {
            arity: [self.m(), self.n()],
            terms: self
                .terms()
                .iter()
                .map(|(e, c)| TermJson { exp2: e.iter().map(i64::from).collect(), coeff: c.to_string() })
                .collect(),
        }
    }

    /// Decodes and canonicalizes: duplicate exponents merge, zeros drop.
    pub fn from_json(s: &str) -> Result<LaurentPoly> {
        let wire: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let [m, n] = wire.arity;
        if m > MAX_ARITY || n > MAX_ARITY {
            return Err(Error::Parse(format!("arity ({m}, {n}) too large")));
        }
        let mut terms = Vec::with_capacity(wire.terms.len());
        for t in wire.terms {
            if t.exp2.len() != m + n {
                return Err(Error::Parse(format!("exponent vector has length {}, expected {}", t.exp2.len(), m + n)));
            }
            if t.exp2.iter().any(|v| v.abs() > MAX_DOUBLED_EXPONENT) {
                return Err(Error::Parse("exponent out of range".into()));
            }
            let e: Vec<i32> = t.exp2.iter().map(|&v| v as i32).collect();
            let c: Int = t.coeff.trim().parse().map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.coeff)))?;
            terms.push((ExponentVector::from_doubled(&e), c));
        }
        Ok(LaurentPoly::from_terms(m, n, terms))
    }
}
