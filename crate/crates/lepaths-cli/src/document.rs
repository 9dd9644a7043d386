//! Poset documents: the JSON input format.
//!
//! ```json
//! { "n": 6,
//!   "relations": [[1, 2], [2, 3], [4, 5], [5, 6]],
//!   "chains": { "c1": [1, 2, 3], "c2": [4, 5, 6] },
//!   "labels": { "1": "a1", "4": "b1" } }
//! ```
//!
//! Ids are 1-based.  `relations` may be any generating set of the order; the
//! transitive closure is computed on load, and the canonical form lists the
//! cover relations in lexicographic order.

use std::collections::BTreeMap;

use lepaths::{ChainPartition, Poset};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Chains {
    pub c1: Vec<usize>,
    pub c2: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub n: usize,
    pub relations: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chains: Option<Chains>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<usize, String>,
}

impl PosetDocument {
    pub fn parse(text: &str) -> CliResult<PosetDocument> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn read(path: &str) -> CliResult<PosetDocument> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        })?;
        PosetDocument::parse(&text)
    }

    fn check_id(&self, u: usize, what: &str) -> CliResult<usize> {
        if u == 0 || u > self.n {
            return Err(CliError::Input(format!(
                "{what}: element {u} is not in 1..={}",
                self.n
            )));
        }
        Ok(u - 1)
    }

    /// The closed poset (0-based ids).
    pub fn poset(&self) -> CliResult<Poset> {
        let pairs = self
            .relations
            .iter()
            .map(|&[u, v]| {
                Ok((
                    self.check_id(u, "relations")?,
                    self.check_id(v, "relations")?,
                ))
            })
            .collect::<CliResult<Vec<_>>>()?;
        Ok(Poset::from_relations(self.n, &pairs)?)
    }

    /// The declared chain partition, validated against `p`; `None` when the
    /// document has no `chains`.
    pub fn chain_partition(&self, p: &Poset) -> CliResult<Option<ChainPartition>> {
        let Some(ch) = &self.chains else {
            return Ok(None);
        };
        let mut seen = vec![false; self.n];
        let mut convert = |ids: &[usize], name: &str| -> CliResult<Vec<usize>> {
            let mut out = Vec::with_capacity(ids.len());
            for &u in ids {
                let i = self.check_id(u, name)?;
                if std::mem::replace(&mut seen[i], true) {
                    return Err(CliError::Input(format!(
                        "chains: element {u} is listed twice"
                    )));
                }
                out.push(i);
            }
            for w in out.windows(2) {
                if !p.lt(w[0], w[1]) {
                    return Err(CliError::Input(format!(
                        "chains: {name} lists {} before {} but {} is not below {} in the poset",
                        w[0] + 1,
                        w[1] + 1,
                        w[0] + 1,
                        w[1] + 1
                    )));
                }
            }
            Ok(out)
        };
        let c1 = convert(&ch.c1, "c1")?;
        let c2 = convert(&ch.c2, "c2")?;
        if let Some(u) = seen.iter().position(|&s| !s) {
            return Err(CliError::Input(format!(
                "chains: element {} is in neither chain",
                u + 1
            )));
        }
        Ok(Some(ChainPartition::new(p, c1, c2)?))
    }

    /// The declared chain partition, or an error naming the command that
    /// needs it.
    pub fn require_chains(&self, p: &Poset, needed_by: &str) -> CliResult<ChainPartition> {
        self.chain_partition(p)?.ok_or_else(|| {
            CliError::Input(format!(
                "{needed_by} needs a chain partition: add \"chains\": {{\"c1\": [...], \"c2\": [...]}} to the document"
            ))
        })
    }

    /// Canonical document of a poset: sorted cover relations, chains and
    /// labels as given.
    pub fn from_poset(
        p: &Poset,
        cp: Option<&ChainPartition>,
        labels: BTreeMap<usize, String>,
    ) -> PosetDocument {
        let mut relations: Vec<[usize; 2]> = p
            .cover_relations()
            .into_iter()
            .map(|(u, v)| [u + 1, v + 1])
            .collect();
        relations.sort_unstable();
        let chains = cp.map(|cp| Chains {
            c1: cp.c1().iter().map(|u| u + 1).collect(),
            c2: cp.c2().iter().map(|u| u + 1).collect(),
        });
        PosetDocument {
            n: p.len(),
            relations,
            chains,
            labels,
        }
    }

    /// The canonical form of this document (validates it on the way).
    pub fn canonical(&self) -> CliResult<PosetDocument> {
        let p = self.poset()?;
        let cp = self.chain_partition(&p)?;
        Ok(PosetDocument::from_poset(
            &p,
            cp.as_ref(),
            self.labels.clone(),
        ))
    }

    /// Compact JSON of the document as it stands.
    pub fn to_compact_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    /// SHA-256 of the compact JSON of the canonical form, in hex.
    pub fn hash(&self) -> CliResult<String> {
        Ok(hash_canonical(&self.canonical()?))
    }

    /// Resolves an element reference: a label from the document or a 1-based
    /// id.  Returns the 0-based id.
    pub fn resolve(&self, s: &str) -> CliResult<usize> {
        if let Some((&id, _)) = self.labels.iter().find(|(_, l)| l.as_str() == s) {
            return self.check_id(id, "element");
        }
        let id: usize = s
            .parse()
            .map_err(|_| CliError::Input(format!("element {s:?} is neither a label nor an id")))?;
        self.check_id(id, "element")
    }
}

/// Hash of an already-canonical document.
pub fn hash_canonical(doc: &PosetDocument) -> String {
    hex::encode(Sha256::digest(doc.to_compact_json().as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const C3C3: &str = r#"{"n": 6, "relations": [[1,3],[1,2],[2,3],[4,5],[5,6]],
        "chains": {"c1": [1,2,3], "c2": [4,5,6]}, "labels": {"1": "a1", "6": "b3"}}"#;

    #[test]
    fn canonical_form_keeps_covers_only() {
        let doc = PosetDocument::parse(C3C3).unwrap();
        let c = doc.canonical().unwrap();
        assert_eq!(c.relations, vec![[1, 2], [2, 3], [4, 5], [5, 6]]);
        assert_eq!(c.chains, doc.chains);
        assert_eq!(c.canonical().unwrap(), c);
    }

    #[test]
    fn hash_ignores_the_generating_set() {
        let mut a = PosetDocument::parse(C3C3).unwrap();
        a.chains = None;
        let mut b = a.clone();
        b.relations = vec![[5, 6], [4, 5], [2, 3], [1, 2]];
        assert_eq!(a.hash().unwrap(), b.hash().unwrap());
        b.relations.pop();
        assert_ne!(a.hash().unwrap(), b.hash().unwrap());
    }

    #[test]
    fn labels_and_ids_resolve() {
        let doc = PosetDocument::parse(C3C3).unwrap();
        assert_eq!(doc.resolve("a1").unwrap(), 0);
        assert_eq!(doc.resolve("b3").unwrap(), 5);
        assert_eq!(doc.resolve("4").unwrap(), 3);
        assert!(doc.resolve("7").is_err());
        assert!(doc.resolve("0").is_err());
        assert!(doc.resolve("zz").is_err());
    }

    #[test]
    fn invalid_documents_are_refused() {
        let cyclic = r#"{"n": 2, "relations": [[1,2],[2,1]]}"#;
        assert!(PosetDocument::parse(cyclic).unwrap().poset().is_err());
        let out_of_range = r#"{"n": 2, "relations": [[1,3]]}"#;
        assert!(PosetDocument::parse(out_of_range).unwrap().poset().is_err());
        assert!(PosetDocument::parse(r#"{"n": 2}"#).is_err());
        assert!(PosetDocument::parse(r#"{"n": 2, "relations": [], "extra": 1}"#).is_err());
        let bad_chain = r#"{"n": 3, "relations": [[1,2]], "chains": {"c1": [2,1], "c2": [3]}}"#;
        let doc = PosetDocument::parse(bad_chain).unwrap();
        let err = doc
            .chain_partition(&doc.poset().unwrap())
            .unwrap_err()
            .to_string();
        assert!(err.contains("2 before 1"), "{err}");
        let missing = r#"{"n": 3, "relations": [[1,2]], "chains": {"c1": [1,2], "c2": []}}"#;
        let doc = PosetDocument::parse(missing).unwrap();
        assert!(doc.chain_partition(&doc.poset().unwrap()).is_err());
    }

    #[test]
    fn serialized_form_round_trips() {
        let c = PosetDocument::parse(C3C3).unwrap().canonical().unwrap();
        let text = serde_json::to_string_pretty(&c).unwrap();
        assert_eq!(PosetDocument::parse(&text).unwrap(), c);
    }
}
