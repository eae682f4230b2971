//! JSON input documents.
//!
//! A hypergraph document lists vertex labels, hyperedges as label lists and an
//! optional `morse` object keyed by canonical edge keys (`"v0,v1"`, labels in
//! declaration order) with rational strings or integers as values.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::{delta_closure, Hyperedge, Hypergraph, VertexSet};
use crate::morphisms::HypergraphMorphism;
use crate::morse::MorseFunction;

/// A Morse value as written in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MorseValue {
    Integer(i64),
    Text(String),
}

impl MorseValue {
    pub fn to_rational(&self) -> Result<BigRational> {
        match self {
            MorseValue::Integer(v) => Ok(BigRational::from_integer(BigInt::from(*v))),
            MorseValue::Text(s) => parse_rational(s),
        }
    }
}

/// Parses `"3/2"`, `"-1"` or `"0"` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("`{s}` is not a rational number"));
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDocument {
    pub vertices: Vec<String>,
    pub hyperedges: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morse: Option<BTreeMap<String, MorseValue>>,
}

/// A parsed hypergraph document.
#[derive(Debug, Clone)]
pub struct LoadedHypergraph {
    pub hypergraph: Hypergraph,
    /// Morse values keyed by cells of Δℋ.
    pub morse: Option<BTreeMap<Hyperedge, BigRational>>,
    pub warnings: Vec<String>,
}

impl LoadedHypergraph {
    /// The Morse values restricted to `host`, which must all be present.
    pub fn morse_on(&self, host: &Hypergraph) -> Result<MorseFunction> {
        let values = self.morse.as_ref().ok_or(Error::NoMorseBlock)?;
        let restricted = host
            .edges()
            .map(|e| values.get(e).map(|v| (e.clone(), v.clone())).ok_or_else(|| Error::MissingValue(host.label(e))))
            .collect::<Result<BTreeMap<_, _>>>()?;
        MorseFunction::new(host.clone(), restricted)
    }
}

fn edge_from_labels<S: AsRef<str>>(vs: &VertexSet, labels: &[S]) -> Result<Hyperedge> {
    let idx = labels
        .iter()
        .map(|l| vs.position(l.as_ref()).ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string())))
        .collect::<Result<Vec<_>>>()?;
    Hyperedge::new(idx)
}

impl HypergraphDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Validates labels, edges and Morse keys. Morse keys must name cells of Δℋ.
    pub fn load(&self) -> Result<LoadedHypergraph> {
        let vs = Arc::new(VertexSet::new(self.vertices.iter().cloned())?);
        let edges = self.hyperedges.iter().map(|e| edge_from_labels(&vs, e)).collect::<Result<Vec<_>>>()?;
        let (hypergraph, build_warnings) = Hypergraph::with_warnings(vs.clone(), edges)?;
        let warnings = build_warnings.iter().map(ToString::to_string).collect();
        let morse = match &self.morse {
            None => None,
            Some(raw) => {
                let delta = delta_closure(&hypergraph);
                let mut values = BTreeMap::new();
                for (key, value) in raw {
                    let labels: Vec<&str> = key.split(',').map(str::trim).collect();
                    let e = edge_from_labels(&vs, &labels)?;
                    if !delta.contains(&e) {
                        return Err(Error::ExtraValue(key.clone()));
                    }
                    if values.insert(e, value.to_rational()?).is_some() {
                        return Err(Error::Parse(format!("morse key `{key}` repeats an edge")));
                    }
                }
                Some(values)
            }
        };
        Ok(LoadedHypergraph { hypergraph, morse, warnings })
    }

    /// Canonical document: edges in canonical order, labels in declaration order.
    pub fn from_hypergraph(h: &Hypergraph, morse: Option<&BTreeMap<Hyperedge, BigRational>>) -> Self {
        let vs = h.vertex_set();
        let edge_labels = |e: &Hyperedge| e.vertices().iter().map(|&v| vs.name(v).to_string()).collect();
        HypergraphDocument {
            vertices: vs.names().to_vec(),
            hyperedges: h.edges().map(edge_labels).collect(),
            morse: morse.map(|m| m.iter().map(|(e, v)| (h.label(e), MorseValue::Text(v.to_string()))).collect()),
        }
    }
}

/// Where a morphism document finds its source or target hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DocumentRef {
    Path(String),
    Inline(HypergraphDocument),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDocument {
    pub source: DocumentRef,
    pub target: DocumentRef,
    pub map: BTreeMap<String, String>,
}

/// A parsed morphism with the raw bytes of every document read.
#[derive(Debug, Clone)]
pub struct LoadedMorphism {
    pub morphism: HypergraphMorphism,
    pub inputs: Vec<Vec<u8>>,
    pub warnings: Vec<String>,
}

/// Reads a file; I/O failures count as parse errors.
pub fn read_input(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn utf8(bytes: &[u8]) -> Result<&str> {
    std::str::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

/// Source, target, bytes of referenced files and build warnings.
pub type ResolvedMorphism = (Hypergraph, Hypergraph, Vec<Vec<u8>>, Vec<String>);

impl MorphismDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Resolves file references relative to `base`.
    pub fn load(&self, base: &Path) -> Result<ResolvedMorphism> {
        let mut inputs = Vec::new();
        let mut warnings = Vec::new();
        let mut resolve = |r: &DocumentRef| -> Result<Hypergraph> {
            let doc = match r {
                DocumentRef::Inline(d) => d.clone(),
                DocumentRef::Path(p) => {
                    let path: PathBuf = base.join(p);
                    let bytes = read_input(&path)?;
                    let doc = HypergraphDocument::from_json(utf8(&bytes)?)?;
                    inputs.push(bytes);
                    doc
                }
            };
            let loaded = doc.load()?;
            warnings.extend(loaded.warnings);
            Ok(loaded.hypergraph)
        };
        let source = resolve(&self.source)?;
        let target = resolve(&self.target)?;
        Ok((source, target, inputs, warnings))
    }
}

/// Parses hypergraph document bytes.
pub fn load_hypergraph(bytes: &[u8]) -> Result<LoadedHypergraph> {
    HypergraphDocument::from_json(utf8(bytes)?)?.load()
}

/// Parses a morphism file and the documents it references.
///
/// Returns the morphism-construction error (unknown or missing map labels) in
/// the inner result so it can be reported as an invalid morphism.
pub fn load_morphism(path: &Path) -> Result<Result<LoadedMorphism>> {
    let bytes = read_input(path)?;
    let doc = MorphismDocument::from_json(utf8(&bytes)?)?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let (source, target, referenced, warnings) = doc.load(base)?;
    let mut inputs = vec![bytes];
    inputs.extend(referenced);
    Ok(HypergraphMorphism::from_labels(source, target, &doc.map).map(|morphism| LoadedMorphism {
        morphism,
        inputs,
        warnings,
    }))
}
