//! Tableau data model: constraint sets, inputs, candidates, mappings, and the
//! difference vectors every decision procedure is built from.
//!
//! The canonical file format is a UTF-8 JSON document with top-level keys
//! `constraints`, `inputs`, and `metadata` (see `docs/FORMATS.md` for the
//! grammar). A tab-separated import/export is provided for legacy tableau
//! spreadsheets.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// Ordered list of distinct constraint names; index `k` identifies constraint `C_k`
/// for the life of an analysis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConstraintSet {
    names: Vec<String>,
}

impl ConstraintSet {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::schema("constraint set must be nonempty"));
        }
        let mut seen = BTreeSet::new();
        for n in &names {
            if !seen.insert(n.clone()) {
                return Err(Error::schema(format!("duplicate constraint name {n:?}")));
            }
        }
        Ok(ConstraintSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A candidate surface form with its violation profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateEntry {
    pub sr: String,
    pub violations: Vec<u32>,
    /// Corpus count annotation; never used by any symbolic decision.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frequency: Option<u64>,
}

/// An underlying representation with its finite candidate set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEntry {
    pub ur: String,
    pub candidates: Vec<CandidateEntry>,
}

/// A (UR, intended winner) pair; all other candidates of that UR are its losers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MappingId {
    pub ur: String,
    pub sr: String,
}

impl MappingId {
    pub fn new(ur: impl Into<String>, sr: impl Into<String>) -> Self {
        MappingId { ur: ur.into(), sr: sr.into() }
    }

    /// Parses the CLI notation `UR:SR` (the first `:` splits).
    pub fn parse(spec: &str) -> Result<Self> {
        match spec.split_once(':') {
            Some((ur, sr)) if !ur.is_empty() && !sr.is_empty() => Ok(MappingId::new(ur, sr)),
            _ => Err(Error::parse(format!("mapping spec {spec:?} is not of the form UR:SR"))),
        }
    }
}

impl fmt::Display for MappingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.ur, self.sr)
    }
}

/// Loser violations minus winner violations, one entry per constraint.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DifferenceVector(pub Vec<i64>);

impl DifferenceVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Entrywise nonnegative (the loser is harmonically bounded).
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn negated(&self) -> DifferenceVector {
        DifferenceVector(self.0.iter().map(|&x| -x).collect())
    }
}

/// A full tableau: a constraint set, the inputs with their candidates, and
/// free-form metadata (e.g. corpus percentages carried for display).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tableau {
    pub constraints: ConstraintSet,
    pub inputs: Vec<InputEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, serde_json::Value>,
}

/// A validation finding locating the offending ur/sr/constraint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ur: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sr: Option<String>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.ur, &self.sr) {
            (Some(ur), Some(sr)) => write!(f, "[{ur} -> {sr}] {}", self.message),
            (Some(ur), None) => write!(f, "[{ur}] {}", self.message),
            _ => write!(f, "{}", self.message),
        }
    }
}

impl Tableau {
    pub fn new(constraints: ConstraintSet, inputs: Vec<InputEntry>) -> Result<Self> {
        let t = Tableau { constraints, inputs, metadata: BTreeMap::new() };
        t.ensure_valid()?;
        Ok(t)
    }

    /// Parses the canonical tableau document from UTF-8 bytes.
    ///
    /// Syntax errors carry the line/column reported by the JSON parser;
    /// schema errors name the offending ur/sr.
    pub fn parse(source: &[u8]) -> Result<Tableau> {
        let text = std::str::from_utf8(source)
            .map_err(|e| Error::parse(format!("tableau is not valid UTF-8: {e}")))?;
        let t: Tableau = serde_json::from_str(text).map_err(|e| {
            Error::parse(format!("line {}, column {}: {e}", e.line(), e.column()))
        })?;
        t.ensure_valid()?;
        Ok(t)
    }

    /// Serializes to the canonical document (pretty JSON, trailing newline).
    /// `parse ∘ serialize` is the identity; key order is deterministic.
    pub fn serialize(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("tableau serialization");
        s.push('\n');
        s
    }

    /// Imports the secondary tab-separated format: a header row of constraint
    /// names (optionally preceded by `ur` and `sr` columns), then one row per
    /// candidate: ur, sr, violations.
    pub fn parse_tsv(source: &str) -> Result<Tableau> {
        let mut lines = source.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::parse("empty tab-separated tableau"))?;
        let mut cols: Vec<&str> = header.split('\t').map(str::trim).collect();
        if cols.len() >= 2 && cols[0].eq_ignore_ascii_case("ur") && cols[1].eq_ignore_ascii_case("sr") {
            cols.drain(..2);
        }
        let constraints = ConstraintSet::new(cols.iter().map(|s| s.to_string()).collect())?;
        let n = constraints.len();
        let mut inputs: Vec<InputEntry> = Vec::new();
        for (lineno, line) in lines {
            let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
            if fields.len() != n + 2 {
                return Err(Error::parse(format!(
                    "line {}: expected {} fields (ur, sr, {} violations), got {}",
                    lineno + 1,
                    n + 2,
                    n,
                    fields.len()
                )));
            }
            let ur = fields[0].to_string();
            let sr = fields[1].to_string();
            let violations = fields[2..]
                .iter()
                .map(|f| {
                    f.parse::<u32>().map_err(|_| {
                        Error::parse(format!("line {}: violation {f:?} is not a nonnegative integer", lineno + 1))
                    })
                })
                .collect::<Result<Vec<u32>>>()?;
            let cand = CandidateEntry { sr, violations, frequency: None };
            match inputs.iter_mut().find(|i| i.ur == ur) {
                Some(entry) => entry.candidates.push(cand),
                None => inputs.push(InputEntry { ur, candidates: vec![cand] }),
            }
        }
        Tableau::new(constraints, inputs)
    }

    /// Exports to the tab-separated format with explicit `ur`/`sr` columns.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("ur\tsr");
        for name in self.constraints.names() {
            out.push('\t');
            out.push_str(name);
        }
        out.push('\n');
        for input in &self.inputs {
            for cand in &input.candidates {
                out.push_str(&input.ur);
                out.push('\t');
                out.push_str(&cand.sr);
                for v in &cand.violations {
                    out.push('\t');
                    out.push_str(&v.to_string());
                }
                out.push('\n');
            }
        }
        out
    }

    /// Runs every invariant check; the empty list means the tableau is well formed.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let n = self.constraints.len();
        let mut out = Vec::new();
        let mut urs = BTreeSet::new();
        for input in &self.inputs {
            if !urs.insert(&input.ur) {
                out.push(Diagnostic {
                    message: "duplicate input label".into(),
                    ur: Some(input.ur.clone()),
                    sr: None,
                });
            }
            if input.candidates.is_empty() {
                out.push(Diagnostic {
                    message: "input has no candidates".into(),
                    ur: Some(input.ur.clone()),
                    sr: None,
                });
            }
            let mut srs = BTreeSet::new();
            for cand in &input.candidates {
                if !srs.insert(&cand.sr) {
                    out.push(Diagnostic {
                        message: "duplicate candidate label".into(),
                        ur: Some(input.ur.clone()),
                        sr: Some(cand.sr.clone()),
                    });
                }
                if cand.violations.len() != n {
                    out.push(Diagnostic {
                        message: format!(
                            "violation row has {} entries, constraint set has {}",
                            cand.violations.len(),
                            n
                        ),
                        ur: Some(input.ur.clone()),
                        sr: Some(cand.sr.clone()),
                    });
                }
            }
        }
        out
    }

    fn ensure_valid(&self) -> Result<()> {
        let diags = self.validate();
        match diags.first() {
            None => Ok(()),
            Some(d) => Err(Error::schema(d.to_string())),
        }
    }

    pub fn input(&self, ur: &str) -> Result<&InputEntry> {
        self.inputs
            .iter()
            .find(|i| i.ur == ur)
            .ok_or_else(|| Error::lookup(format!("no input {ur:?}")))
    }

    /// Resolves a mapping to its (input, winner candidate) pair.
    pub fn resolve(&self, mapping: &MappingId) -> Result<(&InputEntry, &CandidateEntry)> {
        let input = self.input(&mapping.ur)?;
        let cand = input
            .candidates
            .iter()
            .find(|c| c.sr == mapping.sr)
            .ok_or_else(|| Error::lookup(format!("no candidate {:?} for input {:?}", mapping.sr, mapping.ur)))?;
        Ok((input, cand))
    }

    /// Difference vectors of a mapping: one per loser, in candidate order;
    /// entry `k` is `C_k(loser) - C_k(winner)`.
    pub fn difference_vectors(&self, mapping: &MappingId) -> Result<Vec<(String, DifferenceVector)>> {
        let (input, winner) = self.resolve(mapping)?;
        Ok(input
            .candidates
            .iter()
            .filter(|c| c.sr != mapping.sr)
            .map(|loser| {
                let d = loser
                    .violations
                    .iter()
                    .zip(&winner.violations)
                    .map(|(&l, &w)| i64::from(l) - i64::from(w))
                    .collect();
                (loser.sr.clone(), DifferenceVector(d))
            })
            .collect())
    }

    /// The loser difference vectors alone, in candidate order.
    pub fn loser_diffs(&self, mapping: &MappingId) -> Result<Vec<DifferenceVector>> {
        Ok(self.difference_vectors(mapping)?.into_iter().map(|(_, d)| d).collect())
    }

    /// Every (ur, sr) pair of the tableau in file order.
    pub fn all_mappings(&self) -> Vec<MappingId> {
        self.inputs
            .iter()
            .flat_map(|i| i.candidates.iter().map(|c| MappingId::new(&i.ur, &c.sr)))
            .collect()
    }

    /// The default analysis mapping set: the `analysis.mappings` metadata key
    /// when present (a list of `UR:SR` strings), otherwise every mapping.
    pub fn analysis_mappings(&self) -> Result<Vec<MappingId>> {
        match self.metadata.get("analysis.mappings") {
            None => Ok(self.all_mappings()),
            Some(serde_json::Value::Array(items)) => {
                let mut out = Vec::new();
                for item in items {
                    let spec = item
                        .as_str()
                        .ok_or_else(|| Error::schema("analysis.mappings entries must be strings"))?;
                    let id = MappingId::parse(spec)?;
                    self.resolve(&id)?;
                    out.push(id);
                }
                Ok(out)
            }
            Some(_) => Err(Error::schema("analysis.mappings must be a list of UR:SR strings")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> Tableau {
        Tableau::parse(
            br#"{
                "constraints": ["C1"],
                "inputs": [{"ur": "x", "candidates": [{"sr": "y", "violations": [0]}]}],
                "metadata": {}
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn minimal_tableau_parses() {
        let t = tiny();
        assert_eq!(t.constraints.len(), 1);
        assert_eq!(t.inputs.len(), 1);
        assert!(t.validate().is_empty());
    }

    #[test]
    fn short_violation_row_is_schema_error() {
        let err = Tableau::parse(
            br#"{
                "constraints": ["C1", "C2"],
                "inputs": [{"ur": "x", "candidates": [{"sr": "y", "violations": [0]}]}]
            }"#,
        )
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("schema"), "{msg}");
        assert!(msg.contains('y'), "schema error should name the candidate: {msg}");
    }

    #[test]
    fn duplicate_sr_is_schema_error() {
        let err = Tableau::parse(
            br#"{
                "constraints": ["C1"],
                "inputs": [{"ur": "x", "candidates": [
                    {"sr": "y", "violations": [0]},
                    {"sr": "y", "violations": [1]}
                ]}]
            }"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("duplicate candidate label"));
    }

    #[test]
    fn malformed_syntax_reports_position() {
        let err = Tableau::parse(b"{ \"constraints\": [").unwrap_err();
        assert!(err.to_string().contains("line"), "{err}");
    }

    #[test]
    fn difference_vectors_follow_candidate_order() {
        let t = Tableau::parse(
            br#"{
                "constraints": ["A", "B"],
                "inputs": [{"ur": "x", "candidates": [
                    {"sr": "w", "violations": [0, 1]},
                    {"sr": "z1", "violations": [1, 0]},
                    {"sr": "z2", "violations": [0, 1]}
                ]}]
            }"#,
        )
        .unwrap();
        let diffs = t.difference_vectors(&MappingId::new("x", "w")).unwrap();
        assert_eq!(diffs.len(), 2);
        assert_eq!(diffs[0], ("z1".into(), DifferenceVector(vec![1, -1])));
        assert_eq!(diffs[1], ("z2".into(), DifferenceVector(vec![0, 0])));
    }

    #[test]
    fn winner_loser_swap_negates_difference() {
        let t = Tableau::parse(
            br#"{
                "constraints": ["A", "B"],
                "inputs": [{"ur": "x", "candidates": [
                    {"sr": "y", "violations": [0, 2]},
                    {"sr": "z", "violations": [3, 1]}
                ]}]
            }"#,
        )
        .unwrap();
        let d_y = t.loser_diffs(&MappingId::new("x", "y")).unwrap();
        let d_z = t.loser_diffs(&MappingId::new("x", "z")).unwrap();
        assert_eq!(d_y[0].negated(), d_z[0]);
    }

    #[test]
    fn unresolvable_mapping_is_lookup_error() {
        let t = tiny();
        assert!(matches!(
            t.difference_vectors(&MappingId::new("x", "nope")),
            Err(Error::Lookup(_))
        ));
    }

    #[test]
    fn serialize_round_trips() {
        let mut t = tiny();
        t.metadata.insert("note".into(), serde_json::json!("hello"));
        let again = Tableau::parse(t.serialize().as_bytes()).unwrap();
        assert_eq!(t, again);
        assert_eq!(t.serialize(), again.serialize());
    }

    #[test]
    fn tsv_round_trips() {
        let t = Tableau::parse_tsv("ur\tsr\tA\tB\nx\ty\t0\t1\nx\tz\t2\t0\n").unwrap();
        assert_eq!(t.constraints.names(), ["A", "B"]);
        assert_eq!(t.inputs[0].candidates.len(), 2);
        let again = Tableau::parse_tsv(&t.to_tsv()).unwrap();
        assert_eq!(t, again);
    }

    #[test]
    fn tsv_accepts_bare_header() {
        let t = Tableau::parse_tsv("A\tB\nx\ty\t0\t1\n").unwrap();
        assert_eq!(t.constraints.names(), ["A", "B"]);
    }
}
