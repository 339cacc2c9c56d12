//! JSON document schemas: a thin versioned envelope around per-kind payloads.
//!
//! ```json
//! {"schemaVersion": "1", "kind": "semigroup", "payload": {"order": 2, "table": [[0,1],[1,0]]}}
//! ```

use serde::{Deserialize, Serialize};

use crate::brace::{make_weak_brace, WeakBrace};
use crate::construct::{
    validate_double_system, validate_matched_system, DoubleSystem, MatchedSystem,
};
use crate::error::{Error, Result};
use crate::inverse::ActionFamily;
use crate::table::CayleyTable;
use crate::ybe::PairMap;
use crate::Elem;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    #[serde(rename = "schemaVersion")]
    pub schema_version: String,
    #[serde(flatten)]
    pub body: Body,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "kebab-case")]
pub enum Body {
    Semigroup(TablePayload),
    WeakBrace(WeakBracePayload),
    PairMap(PairMapPayload),
    MatchedSystem(MatchedSystemPayload),
    DoubleSystem(DoubleSystemPayload),
}

impl Document {
    pub fn new(body: Body) -> Self {
        Document {
            schema_version: SCHEMA_VERSION.into(),
            body,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.body {
            Body::Semigroup(_) => "semigroup",
            Body::WeakBrace(_) => "weak-brace",
            Body::PairMap(_) => "pair-map",
            Body::MatchedSystem(_) => "matched-system",
            Body::DoubleSystem(_) => "double-system",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TablePayload {
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub table: Vec<Vec<Elem>>,
}

impl TablePayload {
    pub fn from_table(t: &CayleyTable) -> Self {
        TablePayload {
            order: t.order(),
            labels: t.labels().map(|l| l.to_vec()),
            table: t.rows(),
        }
    }

    pub fn to_table(&self) -> Result<CayleyTable> {
        if self.table.len() != self.order {
            return Err(Error::Malformed(format!(
                "declared order {} but {} rows",
                self.order,
                self.table.len()
            )));
        }
        CayleyTable::from_rows(self.table.clone(), self.labels.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeakBracePayload {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub add: Vec<Vec<Elem>>,
    pub mul: Vec<Vec<Elem>>,
}

impl WeakBracePayload {
    pub fn from_weak_brace(wb: &WeakBrace) -> Self {
        WeakBracePayload {
            labels: wb.labels().map(|l| l.to_vec()),
            add: wb.add_view().base().rows(),
            mul: wb.mul_view().base().rows(),
        }
    }

    /// Parses and fully re-validates the brace.
    pub fn to_weak_brace(&self) -> Result<WeakBrace> {
        let add = CayleyTable::from_rows(self.add.clone(), self.labels.clone())?;
        let mul = CayleyTable::from_rows(self.mul.clone(), None)?;
        make_weak_brace(&add, &mul)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairMapPayload {
    pub order: usize,
    /// Entry `a * order + b` is the image of `(a, b)`.
    pub map: Vec<(Elem, Elem)>,
}

impl PairMapPayload {
    pub fn from_pair_map(p: &PairMap) -> Self {
        PairMapPayload {
            order: p.order(),
            map: p.entries().to_vec(),
        }
    }

    pub fn to_pair_map(&self) -> Result<PairMap> {
        PairMap::new(self.order, self.map.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchedSystemPayload {
    #[serde(rename = "S")]
    pub s: WeakBracePayload,
    #[serde(rename = "T")]
    pub t: WeakBracePayload,
    /// Permutations of the S carrier, one per T element; omitted means all
    /// identity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Vec<Elem>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<Vec<Elem>>>,
}

impl MatchedSystemPayload {
    pub fn to_system(&self, cap: usize) -> Result<MatchedSystem> {
        let s = self.s.to_weak_brace()?;
        let t = self.t.to_weak_brace()?;
        let alpha = family_or_trivial(&self.alpha, t.order(), s.order());
        let beta = family_or_trivial(&self.beta, s.order(), t.order());
        validate_matched_system(s, t, alpha, beta, cap)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DoubleSystemPayload {
    #[serde(rename = "S")]
    pub s: WeakBracePayload,
    #[serde(rename = "T")]
    pub t: WeakBracePayload,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<Vec<Elem>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<Vec<Elem>>>,
}

impl DoubleSystemPayload {
    pub fn to_system(&self, cap: usize) -> Result<DoubleSystem> {
        let s = self.s.to_weak_brace()?;
        let t = self.t.to_weak_brace()?;
        let sigma = family_or_trivial(&self.sigma, t.order(), s.order());
        let delta = family_or_trivial(&self.delta, s.order(), t.order());
        validate_double_system(s, t, sigma, delta, cap)
    }
}

fn family_or_trivial(maps: &Option<Vec<Vec<Elem>>>, acting: usize, acted: usize) -> ActionFamily {
    match maps {
        Some(ms) => ActionFamily::raw(ms.clone(), acted),
        None => ActionFamily::trivial(acting, acted),
    }
}

pub fn parse_document(text: &str) -> Result<Document> {
    let doc: Document =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Malformed(format!(
            "unsupported schemaVersion {:?}",
            doc.schema_version
        )));
    }
    Ok(doc)
}

pub fn emit_document(doc: &Document) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table;

    #[test]
    fn round_trip_every_kind() {
        let t = table::symmetric(3).unwrap();
        let wb = make_weak_brace(&t, &t).unwrap();
        let docs = vec![
            Document::new(Body::Semigroup(TablePayload::from_table(&t))),
            Document::new(Body::WeakBrace(WeakBracePayload::from_weak_brace(&wb))),
            Document::new(Body::PairMap(PairMapPayload::from_pair_map(
                &PairMap::twist(4),
            ))),
            Document::new(Body::MatchedSystem(MatchedSystemPayload {
                s: WeakBracePayload::from_weak_brace(&wb),
                t: WeakBracePayload::from_weak_brace(&wb),
                alpha: None,
                beta: Some(vec![vec![0; 0]; 0]),
            })),
            Document::new(Body::DoubleSystem(DoubleSystemPayload {
                s: WeakBracePayload::from_weak_brace(&wb),
                t: WeakBracePayload::from_weak_brace(&wb),
                sigma: None,
                delta: None,
            })),
        ];
        for doc in docs {
            let text = emit_document(&doc);
            assert_eq!(parse_document(&text).unwrap(), doc);
        }
    }

    #[test]
    fn wrong_schema_version_is_rejected() {
        let text = r#"{"schemaVersion":"2","kind":"pair-map","payload":{"order":1,"map":[[0,0]]}}"#;
        assert!(matches!(parse_document(text), Err(Error::Malformed(_))));
    }

    #[test]
    fn malformed_json_is_rejected() {
        assert!(parse_document("{not json").is_err());
    }
}
