//! Machine-readable reports.
//!
//! Every command that computes something emits one [`Report`] as JSON.  Big
//! integers and polynomial coefficients are decimal strings; `q`-polynomials
//! are objects from exponent to coefficient; multivariate polynomials are
//! lists of `{ "exponents": [...], "coeff": "..." }` terms in lexicographic
//! order of the exponent vectors.  Nothing in a report depends on the
//! machine or the worker count except the optional `timing` block.

use std::collections::BTreeMap;
use std::fmt::Display;

use lepaths::{MultiPoly, MultiZPoly, QPoly, ZPoly};
use serde::Serialize;
use serde_json::{json, Value};

use crate::document::PosetDocument;

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Instance {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poset_hash: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_min: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<i64>,
    /// Scan parameters (mode, suite, bounds, seed).
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<String, Value>,
}

/// One tabulated statistic: `rows[i].value` is a count, a `q`-polynomial or
/// a multivariate polynomial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub name: String,
    pub rows: Vec<Row>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub k: i64,
    pub value: Value,
}

/// One checked assertion.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    pub holds: bool,
    pub detail: Value,
}

/// An equality instance with flat counts but neither midway property.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpecimenRecord {
    pub poset_hash: String,
    pub poset: PosetDocument,
    pub x: usize,
    pub y: usize,
    pub k: i64,
    /// `F(k - 1), F(k), F(k + 1)`.
    pub counts: [String; 3],
}

impl SpecimenRecord {
    /// One-line form used by golden files.
    pub fn compact_line(&self) -> String {
        let rel: Vec<String> = self
            .poset
            .relations
            .iter()
            .map(|[u, v]| format!("{u}<{v}"))
            .collect();
        format!(
            "n={} rel={} x={} y={} k={} F={}",
            self.poset.n,
            if rel.is_empty() {
                "-".to_string()
            } else {
                rel.join(",")
            },
            self.x,
            self.y,
            self.k,
            self.counts.join(",")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
    pub workers: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub instance: Instance,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<Table>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub specimens: Vec<SpecimenRecord>,
    pub summary: BTreeMap<String, Value>,
    /// Every verdict held.
    pub assertions_hold: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl Report {
    pub fn new(command: &str, instance: Instance) -> Report {
        Report {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            instance,
            tables: Vec::new(),
            verdicts: Vec::new(),
            specimens: Vec::new(),
            summary: BTreeMap::new(),
            assertions_hold: true,
            timing: None,
        }
    }

    pub fn push_verdict(&mut self, v: Verdict) {
        self.assertions_hold &= v.holds;
        self.verdicts.push(v);
    }

    pub fn summarize(&mut self, key: &str, value: impl Into<Value>) {
        self.summary.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}

/// Decimal string of any integer.
pub fn int(v: impl Display) -> Value {
    Value::String(v.to_string())
}

pub fn qpoly(p: &QPoly) -> Value {
    Value::Object(
        p.terms()
            .into_iter()
            .map(|(e, c)| (e.to_string(), int(c)))
            .collect(),
    )
}

pub fn zpoly(p: &ZPoly) -> Value {
    Value::Object(
        p.terms()
            .into_iter()
            .map(|(e, c)| (e.to_string(), int(c)))
            .collect(),
    )
}

pub fn multipoly(p: &MultiPoly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(e, c)| json!({ "exponents": e, "coeff": c.to_string() }))
            .collect(),
    )
}

pub fn multizpoly(p: &MultiZPoly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(e, c)| json!({ "exponents": e, "coeff": c.to_string() }))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_serialize_losslessly() {
        let m = QPoly::monomial(3, u64::MAX);
        let v = qpoly(&(&m * &m));
        assert_eq!(
            v["6"],
            Value::String((u64::MAX as u128 * u64::MAX as u128).to_string())
        );
        let z = &QPoly::monomial(26, 1u32).to_zpoly() - &QPoly::monomial(25, 1u32).to_zpoly();
        assert_eq!(zpoly(&z), json!({"25": "-1", "26": "1"}));
    }

    #[test]
    fn verdicts_accumulate_into_the_flag() {
        let mut r = Report::new("check", Instance::default());
        r.push_verdict(Verdict {
            check: "a".into(),
            k: Some(1),
            holds: true,
            detail: Value::Null,
        });
        assert!(r.assertions_hold);
        r.push_verdict(Verdict {
            check: "a".into(),
            k: Some(2),
            holds: false,
            detail: Value::Null,
        });
        assert!(!r.assertions_hold);
        assert!(r.to_json().ends_with("}\n"));
    }
}
