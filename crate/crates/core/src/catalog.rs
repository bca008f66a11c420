//! JSON form of a catalog, fixture files, and set comparison between them.
//!
//! Fixtures use the same schema as `walls --format json` output. They may
//! omit `ranks`, `ch` and `walls`, and may carry per-candidate `actual`,
//! `source` and `note` annotations which are never computed here.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::chern::{ChernVector, TwistParameter};
use crate::conditions::TargetClass;
use crate::enumerate::{EnumerationOptions, WallCatalog};
use crate::error::WallError;
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ranks: Option<Vec<i64>>,
    pub c: Rat,
    pub d: Rat,
    pub e: Rat,
    pub alpha0_sq: Rat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ch: Option<Vec<ChernVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actual: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDocument {
    pub target: TargetClass,
    pub beta: TwistParameter,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub options: Option<EnumerationOptions>,
    pub candidates: Vec<CandidateRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub walls: Option<IndexMap<Rat, Vec<usize>>>,
}

impl CatalogDocument {
    pub fn from_catalog(catalog: &WallCatalog) -> Self {
        let candidates = catalog
            .candidates
            .iter()
            .map(|cand| CandidateRecord {
                ranks: Some(cand.ranks.clone()),
                c: cand.c.clone(),
                d: cand.d.clone(),
                e: cand.e.clone(),
                alpha0_sq: cand.alpha0_sq.clone(),
                ch: Some(cand.chern_untwisted.clone()),
                actual: None,
                source: None,
                note: None,
            })
            .collect();
        CatalogDocument {
            target: catalog.target,
            beta: catalog.twist,
            options: Some(catalog.options.clone()),
            candidates,
            walls: Some(catalog.walls.iter().cloned().collect()),
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("catalog serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, WallError> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Serialized catalog, as written by `walls --format json`.
pub fn catalog_json(catalog: &WallCatalog) -> String {
    CatalogDocument::from_catalog(catalog).to_json()
}

/// Hex SHA-256 of [`catalog_json`].
pub fn catalog_hash(catalog: &WallCatalog) -> String {
    hex::encode(Sha256::digest(catalog_json(catalog).as_bytes()))
}

pub fn load_fixture(path: &Path) -> Result<CatalogDocument, WallError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| WallError::Io { path: path.to_path_buf(), source })?;
    let doc = CatalogDocument::from_json(&text).map_err(|e| WallError::Fixture {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    validate(&doc).map_err(|message| WallError::Fixture { path: path.to_path_buf(), message })?;
    Ok(doc)
}

fn validate(doc: &CatalogDocument) -> Result<(), String> {
    TargetClass::new(doc.target.rank_deficit, doc.target.degree).map_err(|e| e.to_string())?;
    for (i, rec) in doc.candidates.iter().enumerate() {
        if !rec.c.is_positive() {
            return Err(format!("candidate {i}: c must be positive"));
        }
        if rec.ranks.as_ref().is_some_and(|r| r.is_empty()) {
            return Err(format!("candidate {i}: empty rank list"));
        }
    }
    if let Some(walls) = &doc.walls {
        for idx in walls.values().flatten() {
            if *idx >= doc.candidates.len() {
                return Err(format!("wall index {idx} out of range"));
            }
        }
    }
    Ok(())
}

/// A candidate group named by its `(c, d, e)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupKey {
    pub c: Rat,
    pub d: Rat,
    pub e: Rat,
}

impl fmt::Display for GroupKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(c, d, e) = ({}, {}, {})", self.c, self.d, self.e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Discrepancy {
    /// Computed, but missing from the fixture.
    NotInFixture { key: GroupKey, alpha0_sq: Rat },
    /// In the fixture, but not computed.
    NotComputed { key: GroupKey, alpha0_sq: Rat },
    RanksDiffer { key: GroupKey, expected: Vec<i64>, computed: Vec<i64> },
    Alpha0Differs { key: GroupKey, expected: Rat, computed: Rat },
    /// Target or twist of the fixture does not match the run.
    Header(String),
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Discrepancy::NotInFixture { key, alpha0_sq } => {
                write!(f, "missing from fixture  {key} alpha0^2 = {alpha0_sq}")
            }
            Discrepancy::NotComputed { key, alpha0_sq } => {
                write!(f, "not computed          {key} alpha0^2 = {alpha0_sq}")
            }
            Discrepancy::RanksDiffer { key, expected, computed } => {
                write!(f, "ranks differ          {key} fixture {expected:?} computed {computed:?}")
            }
            Discrepancy::Alpha0Differs { key, expected, computed } => {
                write!(f, "alpha0^2 differs      {key} fixture {expected} computed {computed}")
            }
            Discrepancy::Header(msg) => write!(f, "header                {msg}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub matched: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl VerifyReport {
    pub fn is_match(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_match() {
            return writeln!(f, "match: {} groups", self.matched);
        }
        writeln!(
            f,
            "mismatch: {} groups agree, {} discrepancies",
            self.matched,
            self.discrepancies.len()
        )?;
        for d in &self.discrepancies {
            writeln!(f, "  {d}")?;
        }
        Ok(())
    }
}

/// Compare a fixture against a computed catalog as sets of
/// `(ranks, c, d, e, α₀²)`. Ranks are compared only when the fixture lists them.
pub fn verify(fixture: &CatalogDocument, computed: &WallCatalog) -> VerifyReport {
    let mut report = VerifyReport::default();
    if fixture.target != computed.target {
        report.discrepancies.push(Discrepancy::Header(format!(
            "target R={} D={} in fixture, R={} D={} computed",
            fixture.target.rank_deficit,
            fixture.target.degree,
            computed.target.rank_deficit,
            computed.target.degree
        )));
    }
    if fixture.beta != computed.twist {
        report.discrepancies.push(Discrepancy::Header(format!(
            "beta {} in fixture, {} computed",
            fixture.beta, computed.twist
        )));
    }

    let mut expected: BTreeMap<GroupKey, &CandidateRecord> = BTreeMap::new();
    for rec in &fixture.candidates {
        let key = GroupKey { c: rec.c.clone(), d: rec.d.clone(), e: rec.e.clone() };
        expected.insert(key, rec);
    }
    let mut seen = BTreeMap::new();
    for cand in &computed.candidates {
        let key = GroupKey { c: cand.c.clone(), d: cand.d.clone(), e: cand.e.clone() };
        match expected.get(&key) {
            None => report.discrepancies.push(Discrepancy::NotInFixture {
                key: key.clone(),
                alpha0_sq: cand.alpha0_sq.clone(),
            }),
            Some(rec) => {
                let mut ok = true;
                if rec.alpha0_sq != cand.alpha0_sq {
                    ok = false;
                    report.discrepancies.push(Discrepancy::Alpha0Differs {
                        key: key.clone(),
                        expected: rec.alpha0_sq.clone(),
                        computed: cand.alpha0_sq.clone(),
                    });
                }
                if let Some(ranks) = &rec.ranks {
                    let mut sorted = ranks.clone();
                    sorted.sort_unstable();
                    if sorted != cand.ranks {
                        ok = false;
                        report.discrepancies.push(Discrepancy::RanksDiffer {
                            key: key.clone(),
                            expected: sorted,
                            computed: cand.ranks.clone(),
                        });
                    }
                }
                if ok {
                    report.matched += 1;
                }
            }
        }
        seen.insert(key, ());
    }
    for (key, rec) in &expected {
        if !seen.contains_key(key) {
            report.discrepancies.push(Discrepancy::NotComputed {
                key: key.clone(),
                alpha0_sq: rec.alpha0_sq.clone(),
            });
        }
    }
    report
}

/// Which walls a fixture marks as actual, by `α₀²`.
pub fn actual_walls(fixture: &CatalogDocument) -> Vec<Rat> {
    let mut out: Vec<Rat> = fixture
        .candidates
        .iter()
        .filter(|r| r.actual == Some(true))
        .map(|r| r.alpha0_sq.clone())
        .collect();
    out.sort();
    out.dedup();
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_walls;
    use crate::rat::q;

    fn d3() -> WallCatalog {
        enumerate_walls(&TargetClass::new(0, 3).unwrap(), &TwistParameter::Zero, &Default::default())
            .unwrap()
    }

    #[test]
    fn json_shape() {
        let json = catalog_json(&d3());
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["target"]["R"], 0);
        assert_eq!(v["target"]["D"], 3);
        assert_eq!(v["beta"], "0");
        assert!(v["options"].get("workers").is_none());
        assert_eq!(v["candidates"][0]["ranks"], serde_json::json!([-5, -4, -3, -2, -1, 0, 1]));
        assert_eq!(v["candidates"][0]["c"], "1");
        assert_eq!(v["candidates"][0]["d"], "1/2");
        assert_eq!(v["candidates"][0]["e"], "1/6");
        assert_eq!(v["candidates"][0]["alpha0_sq"], "1");
        assert_eq!(v["walls"].as_object().unwrap().len(), 3);
        let (i7, i1, i17) = (json.find("\"7\": ["), json.find("\"1\": ["), json.find("\"1/7\": ["));
        assert!(i7.unwrap() < i1.unwrap() && i1.unwrap() < i17.unwrap());
        assert!(json.ends_with("}\n"));
    }

    #[test]
    fn json_roundtrip_is_lossless() {
        let cat = d3();
        let json = catalog_json(&cat);
        let doc = CatalogDocument::from_json(&json).unwrap();
        assert_eq!(doc, CatalogDocument::from_catalog(&cat));
        assert_eq!(doc.to_json(), json);
        assert!(verify(&doc, &cat).is_match());
    }

    #[test]
    fn verify_reports_removed_rank() {
        let cat = d3();
        let mut doc = CatalogDocument::from_catalog(&cat);
        doc.candidates[2].ranks.as_mut().unwrap().pop();
        let report = verify(&doc, &cat);
        assert!(!report.is_match());
        assert_eq!(report.discrepancies.len(), 1);
        match &report.discrepancies[0] {
            Discrepancy::RanksDiffer { key, .. } => {
                assert_eq!(key.c, cat.candidates[2].c);
                assert_eq!(key.d, cat.candidates[2].d);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn verify_empty_fixture_lists_everything() {
        let cat = d3();
        let mut doc = CatalogDocument::from_catalog(&cat);
        doc.candidates.clear();
        doc.walls = None;
        let report = verify(&doc, &cat);
        assert_eq!(report.discrepancies.len(), cat.len());
        assert!(report
            .discrepancies
            .iter()
            .all(|d| matches!(d, Discrepancy::NotInFixture { .. })));
    }

    #[test]
    fn verify_missing_and_header() {
        let cat = d3();
        let mut doc = CatalogDocument::from_catalog(&cat);
        doc.candidates.push(CandidateRecord {
            ranks: None,
            c: Rat::int(9),
            d: q(1, 2),
            e: q(1, 6),
            alpha0_sq: q(1, 9),
            ch: None,
            actual: None,
            source: None,
            note: None,
        });
        doc.beta = TwistParameter::reciprocal(2).unwrap();
        let report = verify(&doc, &cat);
        assert_eq!(report.discrepancies.len(), 2);
        assert!(report.to_string().contains("not computed"));
        assert!(report.to_string().contains("header"));
    }

    #[test]
    fn minimal_fixture_parses() {
        let text = r#"{"target":{"R":0,"D":3},"beta":"0","candidates":[
            {"c":"1","d":"1/2","e":"1/6","alpha0_sq":"1","actual":true,"source":"listing"}]}"#;
        let doc = CatalogDocument::from_json(text).unwrap();
        assert_eq!(doc.candidates[0].ranks, None);
        assert_eq!(actual_walls(&doc), vec![Rat::one()]);
    }

    #[test]
    fn invalid_fixtures_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        std::fs::write(&path, r#"{"target":{"R":0,"D":3},"beta":"0.5","candidates":[]}"#).unwrap();
        assert!(matches!(load_fixture(&path), Err(WallError::Fixture { .. })));
        std::fs::write(
            &path,
            r#"{"target":{"R":0,"D":3},"beta":"0","candidates":[],"walls":{"1":[0]}}"#,
        )
        .unwrap();
        assert!(matches!(load_fixture(&path), Err(WallError::Fixture { .. })));
        assert!(matches!(load_fixture(&dir.path().join("none.json")), Err(WallError::Io { .. })));
    }

    #[test]
    fn hash_is_stable() {
        assert_eq!(catalog_hash(&d3()), catalog_hash(&d3()));
        assert_eq!(catalog_hash(&d3()).len(), 64);
    }
}
