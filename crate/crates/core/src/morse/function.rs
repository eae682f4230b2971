use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::hypercore::{HasseDiagram, Hyperedge, Hypergraph};

/// An exact rational value on every hyperedge of a host hypergraph.
///
/// Whether the values satisfy the Morse conditions is checked by [`is_morse`],
/// not by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseFunction {
    host: Hypergraph,
    values: BTreeMap<Hyperedge, BigRational>,
}

impl MorseFunction {
    /// Fails if a host edge has no value or a value is given for a non-edge.
    pub fn new(host: Hypergraph, values: BTreeMap<Hyperedge, BigRational>) -> Result<Self> {
        if let Some(e) = values.keys().find(|e| !host.contains(e)) {
            return Err(Error::ExtraValue(host.label(e)));
        }
        if let Some(e) = host.edges().find(|e| !values.contains_key(e)) {
            return Err(Error::MissingValue(host.label(e)));
        }
        Ok(MorseFunction { host, values })
    }

    pub fn from_fn(host: Hypergraph, f: impl Fn(&Hyperedge) -> BigRational) -> Self {
        let values = host.edges().map(|e| (e.clone(), f(e))).collect();
        MorseFunction { host, values }
    }

    /// Convenience constructor from integer values listed in host order.
    pub fn from_integers(host: Hypergraph, values: &[i64]) -> Result<Self> {
        assert_eq!(values.len(), host.len(), "one value per host edge");
        let map = host.edges().cloned().zip(values.iter().map(|&v| int(v))).collect();
        MorseFunction::new(host, map)
    }

    pub fn host(&self) -> &Hypergraph {
        &self.host
    }

    pub fn value(&self, e: &Hyperedge) -> &BigRational {
        &self.values[e]
    }

    pub fn get(&self, e: &Hyperedge) -> Option<&BigRational> {
        self.values.get(e)
    }

    pub fn values(&self) -> &BTreeMap<Hyperedge, BigRational> {
        &self.values
    }
}

pub(crate) fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Low cofaces `β > α` with `f(β) ≤ f(α)` and high faces `γ < α` with `f(γ) ≥ f(α)`, inside the host.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Neighbours {
    pub low_cofaces: Vec<Hyperedge>,
    pub high_faces: Vec<Hyperedge>,
}

pub(crate) fn neighbours(f: &MorseFunction, hasse: &HasseDiagram, i: usize) -> Neighbours {
    let fa = f.value(hasse.cell(i));
    let low_cofaces = hasse.cofaces(i).iter().map(|&j| hasse.cell(j)).filter(|b| f.value(b) <= fa).cloned().collect();
    let high_faces = hasse.faces(i).iter().map(|&j| hasse.cell(j)).filter(|g| f.value(g) >= fa).cloned().collect();
    Neighbours { low_cofaces, high_faces }
}

/// A hyperedge with more than one low coface or more than one high face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseViolation {
    pub alpha: Hyperedge,
    pub low_cofaces: Vec<Hyperedge>,
    pub high_faces: Vec<Hyperedge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MorseCheck {
    pub violations: Vec<MorseViolation>,
}

impl MorseCheck {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn is_morse(f: &MorseFunction) -> MorseCheck {
    let hasse = HasseDiagram::new(f.host());
    let violations = (0..hasse.len())
        .filter_map(|i| {
            let n = neighbours(f, &hasse, i);
            (n.low_cofaces.len() > 1 || n.high_faces.len() > 1).then(|| MorseViolation {
                alpha: hasse.cell(i).clone(),
                low_cofaces: n.low_cofaces,
                high_faces: n.high_faces,
            })
        })
        .collect();
    MorseCheck { violations }
}

pub(crate) fn require_morse(f: &MorseFunction) -> Result<()> {
    match is_morse(f).violations.first() {
        None => Ok(()),
        Some(v) => Err(Error::NotMorse(f.host().label(&v.alpha))),
    }
}

/// Why a hyperedge is not critical: its low coface and/or high face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonCriticalWitness {
    pub low_coface: Option<Hyperedge>,
    pub high_face: Option<Hyperedge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalReport {
    pub critical: BTreeSet<Hyperedge>,
    pub witnesses: BTreeMap<Hyperedge, NonCriticalWitness>,
}

/// `M(f, host)`: hyperedges with no low coface and no high face.
pub fn critical_set(f: &MorseFunction) -> Result<CriticalReport> {
    require_morse(f)?;
    let hasse = HasseDiagram::new(f.host());
    let mut critical = BTreeSet::new();
    let mut witnesses = BTreeMap::new();
    for i in 0..hasse.len() {
        let n = neighbours(f, &hasse, i);
        let cell = hasse.cell(i).clone();
        if n.low_cofaces.is_empty() && n.high_faces.is_empty() {
            critical.insert(cell);
        } else {
            let w = NonCriticalWitness {
                low_coface: n.low_cofaces.first().cloned(),
                high_face: n.high_faces.first().cloned(),
            };
            witnesses.insert(cell, w);
        }
    }
    Ok(CriticalReport { critical, witnesses })
}

/// Restriction to `sub`, which must be contained in the host.
pub fn restrict(f: &MorseFunction, sub: &Hypergraph) -> Result<MorseFunction> {
    let sub = sub.reindex(f.host().vertex_set())?;
    if let Some(e) = sub.edges().find(|e| !f.host().contains(e)) {
        return Err(Error::NotSubhypergraph(sub.label(e)));
    }
    let values = sub.edges().map(|e| (e.clone(), f.value(e).clone())).collect();
    Ok(MorseFunction { host: sub, values })
}

/// `f(σ) = dim σ`, a Morse function with every hyperedge critical.
pub fn dim_function(h: &Hypergraph) -> MorseFunction {
    MorseFunction::from_fn(h.clone(), |e| int(e.dimension() as i64))
}

/// Outcome of the condition (C) check with the least violating triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionC {
    pub holds: bool,
    /// `(γ, α, β)` with `γ < α < β`, `γ, β ∈ ℋ` and no alternative middle cell in ℋ.
    pub witness: Option<(Hyperedge, Hyperedge, Hyperedge)>,
}

/// Condition (C): for every `γ^(n-1) < α^(n) < β^(n+1)` with `γ, β ∈ ℋ` (n ≥ 1)
/// there is `α̂ ∈ ℋ`, `α̂ ≠ α`, with `γ < α̂ < β`.
///
/// The middle cell ranges over Δℋ. Between `γ` and `β` there are exactly two
/// middle cells, so the condition says both of them lie in ℋ.
pub fn satisfies_condition_c(h: &Hypergraph) -> ConditionC {
    let mut best: Option<(Hyperedge, Hyperedge, Hyperedge)> = None;
    for beta in h.edges().filter(|b| b.dimension() >= 2) {
        let v = beta.vertices();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                let gamma: Vec<usize> =
                    v.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &x)| x).collect();
                let gamma = Hyperedge::new(gamma).expect("non-empty");
                if !h.contains(&gamma) {
                    continue;
                }
                let drop = |k: usize| {
                    Hyperedge::new(v.iter().enumerate().filter(|&(m, _)| m != k).map(|(_, &x)| x).collect())
                        .expect("non-empty")
                };
                let (a1, a2) = (drop(i), drop(j));
                for (alpha, alt) in [(&a1, &a2), (&a2, &a1)] {
                    if h.contains(alt) {
                        continue;
                    }
                    let cand = (gamma.clone(), alpha.clone(), beta.clone());
                    if best.as_ref().is_none_or(|b| cand < *b) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    ConditionC { holds: best.is_none(), witness: best }
}

/// Hyperedges satisfying both (A) "has a low coface" and (B) "has a high face"
/// inside the host. A non-empty result shows `f` has no Morse extension to Δℋ.
pub fn extension_obstruction(f: &MorseFunction) -> Result<BTreeSet<Hyperedge>> {
    require_morse(f)?;
    let hasse = HasseDiagram::new(f.host());
    Ok((0..hasse.len())
        .filter(|&i| {
            let n = neighbours(f, &hasse, i);
            !n.low_cofaces.is_empty() && !n.high_faces.is_empty()
        })
        .map(|i| hasse.cell(i).clone())
        .collect())
}
