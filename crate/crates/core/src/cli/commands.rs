//! Command implementations producing the `result` object of a report.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::chains::{
    homology_in, inf_complex, sup_complex, Chain, CoeffSpec, HomologyResult, HomologyTarget, Ring, SubChainComplex,
};
use crate::error::{Error, Result};
use crate::hypercore::{delta_closure, lower_complex, Hyperedge, Hypergraph};
use crate::morphisms::{check_commuting_diagram, induced_homology_map, HypergraphMorphism, InducedTarget};
use crate::morse::{
    critical_discrepancy, critical_set, critical_via_gradient, extension_obstruction, gradient, is_acyclic, is_morse,
    is_semi_proper, linear_map, proper_violation, satisfies_condition_c, search_extension, ExtensionConfig,
    MorseFunction,
};
use crate::with_ring;

use super::document::{HypergraphDocument, LoadedHypergraph};
use super::report::{CliError, ExitStatus};

/// Which complex `complex` emits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexMode {
    Assoc,
    Lower,
}

/// Which hypergraph a Morse function is read on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorseHost {
    Hyper,
    Assoc,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorseAction {
    Check,
    Critical,
    Gradient,
    Extend,
}

/// A command result plus the exit status it should end with.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub result: Value,
    pub status: ExitStatus,
}

impl From<Value> for Outcome {
    fn from(result: Value) -> Self {
        Outcome { result, status: ExitStatus::Ok }
    }
}

fn keys<'a>(h: &Hypergraph, edges: impl IntoIterator<Item = &'a Hyperedge>) -> Vec<String> {
    edges.into_iter().map(|e| h.label(e)).collect()
}

fn chain_value<R: Ring>(ring: &R, h: &Hypergraph, c: &Chain<R::Elem>) -> Value {
    Value::Object(c.iter().map(|(e, x)| (h.label(e), json!(ring.format(x)))).collect())
}

fn matrix_value<R: Ring>(ring: &R, m: &crate::chains::Matrix<R::Elem>) -> Value {
    json!(m.to_strings(ring))
}

pub fn complex(loaded: &LoadedHypergraph, mode: ComplexMode) -> Value {
    let k = match mode {
        ComplexMode::Assoc => delta_closure(&loaded.hypergraph),
        ComplexMode::Lower => lower_complex(&loaded.hypergraph),
    };
    let doc = HypergraphDocument::from_hypergraph(k.as_hypergraph(), None);
    json!({
        "mode": match mode { ComplexMode::Assoc => "assoc", ComplexMode::Lower => "lower" },
        "complex": serde_json::to_value(doc).expect("documents serialize"),
        "counts_by_dimension": k.counts_by_dimension(),
        "size": k.len(),
    })
}

fn target_name(t: HomologyTarget) -> &'static str {
    match t {
        HomologyTarget::Embedded => "embedded",
        HomologyTarget::Assoc => "assoc",
        HomologyTarget::Lower => "lower",
        HomologyTarget::Inf => "inf",
        HomologyTarget::Sup => "sup",
    }
}

fn homology_value(r: &HomologyResult) -> Value {
    let degrees: Vec<Value> = r
        .degrees
        .iter()
        .enumerate()
        .map(|(n, d)| {
            json!({
                "degree": n,
                "betti": d.betti,
                "torsion": d.torsion.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "bettis": r.bettis(), "degrees": degrees })
}

fn bases_value<R: Ring>(ring: &R, ambient: &Hypergraph, scc: &SubChainComplex<R>) -> Value {
    let degrees: Vec<Value> = (0..scc.num_degrees())
        .map(|n| {
            let basis: Vec<Value> = scc.basis_chains(n).iter().map(|c| chain_value(ring, ambient, c)).collect();
            json!({ "degree": n, "basis": basis })
        })
        .collect();
    Value::Array(degrees)
}

pub fn homology(h: &Hypergraph, coeff: CoeffSpec, which: HomologyTarget) -> Result<Value> {
    with_ring!(coeff, |ring| {
        let r = homology_in(&ring, h, which)?;
        let mut out = json!({ "which": target_name(which) });
        let body = homology_value(&r);
        let m = out.as_object_mut().expect("object");
        m.insert("bettis".into(), body["bettis"].clone());
        m.insert("degrees".into(), body["degrees"].clone());
        let delta = delta_closure(h);
        match which {
            HomologyTarget::Inf => {
                m.insert("bases".into(), bases_value(&ring, &delta, &inf_complex(&ring, h)?));
            }
            HomologyTarget::Sup => {
                m.insert("bases".into(), bases_value(&ring, &delta, &sup_complex(&ring, h)?));
            }
            _ => {}
        }
        Ok(out)
    })
}

fn host_of(h: &Hypergraph, on: MorseHost) -> Hypergraph {
    match on {
        MorseHost::Hyper => h.clone(),
        MorseHost::Assoc => delta_closure(h).into_hypergraph(),
        MorseHost::Lower => lower_complex(h).into_hypergraph(),
    }
}

fn host_name(on: MorseHost) -> &'static str {
    match on {
        MorseHost::Hyper => "hyper",
        MorseHost::Assoc => "assoc",
        MorseHost::Lower => "lower",
    }
}

fn values_value(f: &MorseFunction) -> Value {
    Value::Object(f.values().iter().map(|(e, v)| (f.host().label(e), json!(v.to_string()))).collect())
}

fn triple(h: &Hypergraph, t: &Option<(Hyperedge, Hyperedge, Hyperedge)>) -> Value {
    match t {
        Some((a, b, c)) => json!([h.label(a), h.label(b), h.label(c)]),
        None => Value::Null,
    }
}

fn morse_check(f: &MorseFunction) -> Value {
    let h = f.host();
    let check = is_morse(f);
    let violations: Vec<Value> = check
        .violations
        .iter()
        .map(|v| {
            json!({
                "edge": h.label(&v.alpha),
                "low_cofaces": keys(h, &v.low_cofaces),
                "high_faces": keys(h, &v.high_faces),
            })
        })
        .collect();
    json!({ "is_morse": check.is_valid(), "violations": violations })
}

fn morse_critical(f: &MorseFunction) -> Result<Value> {
    let h = f.host();
    let report = critical_set(f)?;
    let via_gradient = critical_via_gradient(f)?;
    let witnesses: Vec<Value> = report
        .witnesses
        .iter()
        .map(|(e, w)| {
            json!({
                "edge": h.label(e),
                "low_coface": w.low_coface.as_ref().map(|x| h.label(x)),
                "high_face": w.high_face.as_ref().map(|x| h.label(x)),
            })
        })
        .collect();
    Ok(json!({
        "critical": keys(h, &report.critical),
        "critical_count": report.critical.len(),
        "critical_via_gradient": keys(h, &via_gradient),
        "non_critical": witnesses,
    }))
}

fn morse_gradient(f: &MorseFunction) -> Result<Value> {
    let h = f.host();
    let v = gradient(f)?;
    let ring = crate::chains::Integers;
    let r = linear_map(&ring, &v);
    let semi = is_semi_proper(&v);
    let acyclic = is_acyclic(&v);
    let proper = proper_violation(&v);
    let matrices: Vec<Value> = (0..r.num_degrees())
        .filter(|&n| r.basis().dim(n) > 0 && r.basis().dim(n + 1) > 0)
        .map(|n| {
            json!({
                "from_degree": n,
                "columns": keys(h, r.basis().degree(n)),
                "rows": keys(h, r.basis().degree(n + 1)),
                "matrix": matrix_value(&ring, r.degree(n)),
            })
        })
        .collect();
    let pairs: Vec<Value> = v.pairs().iter().map(|(a, b)| json!([h.label(a), h.label(b)])).collect();
    Ok(json!({
        "pairs": pairs,
        "proper": proper.is_none(),
        "proper_violation": proper.map(|e| h.label(&e)),
        "semi_proper": semi.holds,
        "semi_proper_witness": triple(h, &semi.witness),
        "acyclic": acyclic.acyclic,
        "acyclic_witness": acyclic.witness.map(|w| keys(h, &w)),
        "r_matrices": matrices,
        "r_squared_zero": r.squares_to_zero(&ring),
    }))
}

fn morse_extend(f: &MorseFunction, config: &ExtensionConfig) -> Result<Outcome> {
    let h = f.host();
    let obstruction = extension_obstruction(f)?;
    let cond = satisfies_condition_c(h);
    let mut m = Map::new();
    m.insert("obstruction".into(), json!(keys(h, &obstruction)));
    m.insert("condition_c".into(), json!({ "holds": cond.holds, "witness": triple(h, &cond.witness) }));
    let unknowns = delta_closure(h).len() - h.len();
    m.insert("unknowns".into(), json!(unknowns));
    let mut status = ExitStatus::Ok;
    if !obstruction.is_empty() {
        m.insert("verdict".into(), json!("none"));
        m.insert("decided_by".into(), json!("obstruction"));
        m.insert("extension".into(), Value::Null);
    } else {
        m.insert("grid_levels".into(), json!(config.grid_levels.unwrap_or(unknowns)));
        m.insert("decided_by".into(), json!("search"));
        match search_extension(f, config) {
            Ok(Some(ext)) => {
                m.insert("verdict".into(), json!("extended"));
                m.insert("extension".into(), values_value(&ext));
            }
            Ok(None) => {
                m.insert("verdict".into(), json!("none"));
                m.insert("extension".into(), Value::Null);
            }
            Err(e @ Error::SizeCap { .. }) => {
                m.insert("verdict".into(), json!("size_capped"));
                m.insert("extension".into(), Value::Null);
                m.insert("detail".into(), json!(e.to_string()));
                status = ExitStatus::SizeCap;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Outcome { result: Value::Object(m), status })
}

pub fn morse(
    loaded: &LoadedHypergraph,
    action: MorseAction,
    on: MorseHost,
    config: &ExtensionConfig,
) -> Result<Outcome> {
    let h = &loaded.hypergraph;
    let host = if action == MorseAction::Extend { h.clone() } else { host_of(h, on) };
    let f = loaded.morse_on(&host)?;
    let body = match action {
        MorseAction::Check => Outcome::from(morse_check(&f)),
        MorseAction::Critical => Outcome::from(morse_critical(&f)?),
        MorseAction::Gradient => Outcome::from(morse_gradient(&f)?),
        MorseAction::Extend => morse_extend(&f, config)?,
    };
    let mut m = Map::new();
    m.insert("on".into(), json!(if action == MorseAction::Extend { "hyper" } else { host_name(on) }));
    m.insert("values".into(), values_value(&f));
    if let Value::Object(rest) = body.result {
        m.extend(rest);
    }
    Ok(Outcome { result: Value::Object(m), status: body.status })
}

pub fn discrepancy(loaded: &LoadedHypergraph) -> Result<Value> {
    let h = &loaded.hypergraph;
    let delta = delta_closure(h).into_hypergraph();
    let f_bar = loaded.morse_on(&delta)?;
    let r = critical_discrepancy(&f_bar, h)?;
    let cases: Vec<Value> =
        r.discrepancy.iter().map(|(e, c)| json!({ "edge": delta.label(e), "case": c.roman() })).collect();
    Ok(json!({
        "critical_bar": keys(&delta, &r.critical_bar),
        "critical": keys(&delta, &r.critical),
        "intersection": keys(&delta, &r.intersection),
        "discrepancy": cases,
    }))
}

fn induced_value<R: Ring>(ring: &R, phi: &HypergraphMorphism, which: InducedTarget) -> Result<Value> {
    let map = induced_homology_map(ring, phi, which)?;
    let (src_cells, tgt_cells) = (delta_closure(phi.source()), delta_closure(phi.target()));
    let degrees: Vec<Value> = (0..map.num_degrees())
        .map(|n| {
            json!({
                "degree": n,
                "source_betti": map.source_basis[n].len(),
                "target_betti": map.target_basis[n].len(),
                "matrix": matrix_value(ring, &map.matrices[n]),
                "source_basis": map.source_basis[n].iter().map(|c| chain_value(ring, &src_cells, c)).collect::<Vec<_>>(),
                "target_basis": map.target_basis[n].iter().map(|c| chain_value(ring, &tgt_cells, c)).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({ "which": which.name(), "degrees": degrees }))
}

pub fn map(
    phi: &HypergraphMorphism,
    induced: &[InducedTarget],
    coeff: CoeffSpec,
    check_diagram: bool,
) -> std::result::Result<Value, CliError> {
    if let Some(v) = crate::morphisms::validate_morphism(phi) {
        let err = Error::InvalidMorphism { edge: phi.source().label(&v.edge), image: phi.target().label(&v.image) };
        return Err(CliError::new(ExitStatus::InvalidMorphism, err));
    }
    let run = || -> Result<Value> {
        with_ring!(coeff, |ring| {
            if !ring.is_field() {
                return Err(Error::NonFieldCoefficients);
            }
            let vertex_map: BTreeMap<String, String> = phi
                .vertex_map()
                .iter()
                .enumerate()
                .map(|(i, &j)| {
                    (phi.source().vertex_set().name(i).to_string(), phi.target().vertex_set().name(j).to_string())
                })
                .collect();
            let maps = induced.iter().map(|&w| induced_value(&ring, phi, w)).collect::<Result<Vec<_>>>()?;
            let mut m = Map::new();
            m.insert("vertex_map".into(), json!(vertex_map));
            m.insert("induced".into(), Value::Array(maps));
            if check_diagram {
                let d = check_commuting_diagram(&ring, phi)?;
                let failure = d.failure.map(|(sq, n)| json!({ "square": sq.name(), "degree": n }));
                m.insert("diagram".into(), json!({ "commutes": d.commutes, "failure": failure }));
            }
            Ok(Value::Object(m))
        })
    };
    run().map_err(CliError::from)
}
