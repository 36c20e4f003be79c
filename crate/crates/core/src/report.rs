//! Uniform result records with a text and a JSON encoding.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{Error as _, Serializer};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::group::{relator_residual, GroupPresentation, Representation};

/// Witnesses attached to a report must satisfy their relators this closely.
pub const WITNESS_TOL: f64 = 1e-10;

/// A float printed with 17 significant digits in both encodings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real(pub f64);

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_finite() {
            write!(f, "{:.16e}", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_str(&self.to_string());
        }
        RawValue::from_string(self.to_string()).map_err(S::Error::custom)?.serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Extra {
    Bool(bool),
    Int(i64),
    Real(Real),
    Text(String),
    List(Vec<Extra>),
}

impl fmt::Display for Extra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extra::Bool(b) => write!(f, "{b}"),
            Extra::Int(n) => write!(f, "{n}"),
            Extra::Real(x) => write!(f, "{x}"),
            Extra::Text(s) => write!(f, "{s}"),
            Extra::List(items) => {
                let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

impl From<bool> for Extra {
    fn from(b: bool) -> Self {
        Extra::Bool(b)
    }
}

impl From<i64> for Extra {
    fn from(n: i64) -> Self {
        Extra::Int(n)
    }
}

impl From<usize> for Extra {
    fn from(n: usize) -> Self {
        Extra::Int(n as i64)
    }
}

impl From<u64> for Extra {
    fn from(n: u64) -> Self {
        Extra::Int(n as i64)
    }
}

impl From<f64> for Extra {
    fn from(x: f64) -> Self {
        Extra::Real(Real(x))
    }
}

impl From<String> for Extra {
    fn from(s: String) -> Self {
        Extra::Text(s)
    }
}

impl From<&str> for Extra {
    fn from(s: &str) -> Self {
        Extra::Text(s.to_string())
    }
}

impl<T: Into<Extra>> From<Vec<T>> for Extra {
    fn from(v: Vec<T>) -> Self {
        Extra::List(v.into_iter().map(Into::into).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessEntry {
    pub generator: String,
    pub image: [Real; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub verdict: String,
    pub certificate: Option<String>,
    pub witness: Option<Vec<WitnessEntry>>,
    pub residual: Option<Real>,
    pub extras: BTreeMap<String, Extra>,
}

impl Report {
    pub fn new(verdict: impl Into<String>) -> Self {
        Self { verdict: verdict.into(), certificate: None, witness: None, residual: None, extras: BTreeMap::new() }
    }

    pub fn certificate(mut self, c: impl fmt::Display) -> Self {
        self.certificate = Some(c.to_string());
        self
    }

    pub fn extra(mut self, key: &str, value: impl Into<Extra>) -> Self {
        self.extras.insert(key.to_string(), value.into());
        self
    }

    /// Attaches `rep` after re-checking it against `pres`.
    pub fn witness(mut self, pres: &GroupPresentation, rep: &Representation) -> Result<Self> {
        let residual = relator_residual(pres, rep)?;
        if !(residual < WITNESS_TOL) {
            return Err(Error::OutOfRange(format!("witness residual {residual:e} exceeds {WITNESS_TOL:e}")));
        }
        let entries = pres
            .generators
            .iter()
            .zip(&rep.images)
            .map(|(g, q)| WitnessEntry { generator: g.clone(), image: q.as_array().map(Real) })
            .collect();
        self.witness = Some(entries);
        self.residual = Some(Real(residual));
        Ok(self)
    }

    pub fn residual(mut self, r: f64) -> Self {
        self.residual = Some(Real(r));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report fields are always serializable")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report fields are always serializable")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", self.verdict)?;
        if let Some(c) = &self.certificate {
            writeln!(f, "certificate: {c}")?;
        }
        if let Some(r) = &self.residual {
            writeln!(f, "residual: {r}")?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "witness:")?;
            for e in w {
                let [a, b, c, d] = &e.image;
                writeln!(f, "  {} -> [{a}, {b}, {c}, {d}]", e.generator)?;
            }
        }
        for (k, v) in &self.extras {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}
