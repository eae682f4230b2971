use std::collections::{BTreeMap, BTreeSet};

use crate::chains::{incidence, Chain, GradedBasis, Matrix, Ring};
use crate::error::{Error, Result};
use crate::hypercore::{translate_edge, Hyperedge, Hypergraph, SimplicialComplex};

use super::function::{require_morse, MorseFunction};

/// A set of pairs `α^(n) < β^(n+1)` of hyperedges of a host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradientField {
    host: Hypergraph,
    pairs: BTreeSet<(Hyperedge, Hyperedge)>,
}

impl GradientField {
    pub fn new(host: Hypergraph, pairs: impl IntoIterator<Item = (Hyperedge, Hyperedge)>) -> Result<Self> {
        let pairs: BTreeSet<_> = pairs.into_iter().collect();
        for (a, b) in &pairs {
            let reason = if !a.is_facet_of(b) {
                Some("not a codimension-one face pair")
            } else if !host.contains(a) || !host.contains(b) {
                Some("cell outside the host")
            } else {
                None
            };
            if let Some(reason) = reason {
                return Err(Error::InvalidPair {
                    alpha: host.label(a),
                    beta: host.label(b),
                    reason: reason.to_string(),
                });
            }
        }
        Ok(GradientField { host, pairs })
    }

    pub fn empty(host: Hypergraph) -> Self {
        GradientField { host, pairs: BTreeSet::new() }
    }

    pub fn host(&self) -> &Hypergraph {
        &self.host
    }

    /// Pairs `(α, β)` in canonical order.
    pub fn pairs(&self) -> &BTreeSet<(Hyperedge, Hyperedge)> {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, alpha: &Hyperedge, beta: &Hyperedge) -> bool {
        self.pairs.contains(&(alpha.clone(), beta.clone()))
    }

    /// All `β` paired with `alpha`.
    pub fn partners_up(&self, alpha: &Hyperedge) -> Vec<Hyperedge> {
        self.pairs.iter().filter(|(a, _)| a == alpha).map(|(_, b)| b.clone()).collect()
    }

    /// All `α` paired with `beta`.
    pub fn partners_down(&self, beta: &Hyperedge) -> Vec<Hyperedge> {
        self.pairs.iter().filter(|(_, b)| b == beta).map(|(a, _)| a.clone()).collect()
    }
}

/// `grad f`: all pairs `α < β` in the host with `f(β) ≤ f(α)`.
pub fn gradient(f: &MorseFunction) -> Result<GradientField> {
    require_morse(f)?;
    let host = f.host();
    let mut pairs = BTreeSet::new();
    for beta in host.edges() {
        for alpha in beta.facets() {
            if host.contains(&alpha) && f.value(beta) <= f.value(&alpha) {
                pairs.insert((alpha, beta.clone()));
            }
        }
    }
    Ok(GradientField { host: host.clone(), pairs })
}

/// Per-degree matrices `R(V)_n : R(host)_n → R(host)_{n+1}` in the canonical host bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedLinearMap<E> {
    basis: GradedBasis,
    maps: Vec<Matrix<E>>,
}

impl<E: Clone> GradedLinearMap<E> {
    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    /// Matrix from degree `n` to degree `n + 1`.
    pub fn degree(&self, n: usize) -> &Matrix<E> {
        &self.maps[n]
    }

    pub fn num_degrees(&self) -> usize {
        self.maps.len()
    }

    /// Image of a single cell as a chain.
    pub fn apply<R: Ring<Elem = E>>(&self, ring: &R, cell: &Hyperedge) -> Chain<E> {
        let n = cell.dimension();
        let Some(j) = self.basis.position(cell) else { return Chain::new() };
        let m = &self.maps[n];
        let targets = self.basis.degree(n + 1);
        (0..m.rows())
            .filter(|&i| !ring.is_zero(m.get(i, j)))
            .map(|i| (targets[i].clone(), m.get(i, j).clone()))
            .collect()
    }

    /// `R(V)_{n+1} ∘ R(V)_n` for every `n` where both exist.
    pub fn square<R: Ring<Elem = E>>(&self, ring: &R) -> Vec<Matrix<E>> {
        (0..self.maps.len().saturating_sub(1)).map(|n| self.maps[n + 1].mul(ring, &self.maps[n])).collect()
    }

    pub fn squares_to_zero<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        self.square(ring).iter().all(|m| m.is_zero(ring))
    }
}

/// `R(V)`: `α ↦ Σ −⟨∂β, α⟩ β` over the pairs `(α, β) ∈ V`.
pub fn linear_map<R: Ring>(ring: &R, v: &GradientField) -> GradedLinearMap<R::Elem> {
    let basis = GradedBasis::of(v.host());
    let degrees = basis.num_degrees();
    let mut maps: Vec<Matrix<R::Elem>> =
        (0..degrees).map(|n| Matrix::zeros(ring, basis.dim(n + 1), basis.dim(n))).collect();
    for (a, b) in v.pairs() {
        let n = a.dimension();
        let (i, j) = (basis.position(b).expect("host cell"), basis.position(a).expect("host cell"));
        let c = ring.from_i64(-incidence(b, a));
        let cur = ring.add(maps[n].get(i, j), &c);
        maps[n].set(i, j, cur);
    }
    GradedLinearMap { basis, maps }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiProperCheck {
    pub holds: bool,
    /// Least `(γ, α, β)` with `(γ, α)` and `(α, β)` both in V.
    pub witness: Option<(Hyperedge, Hyperedge, Hyperedge)>,
}

/// No `γ < α < β` with both `(γ, α)` and `(α, β)` in V.
pub fn is_semi_proper(v: &GradientField) -> SemiProperCheck {
    let mut ups: BTreeMap<&Hyperedge, Vec<&Hyperedge>> = BTreeMap::new();
    for (a, b) in v.pairs() {
        ups.entry(a).or_default().push(b);
    }
    let witness =
        v.pairs().iter().filter_map(|(g, a)| ups.get(a).map(|bs| (g.clone(), a.clone(), bs[0].clone()))).min();
    SemiProperCheck { holds: witness.is_none(), witness }
}

/// The least hyperedge occurring in more than one pair, if any.
pub fn proper_violation(v: &GradientField) -> Option<Hyperedge> {
    let mut count: BTreeMap<&Hyperedge, usize> = BTreeMap::new();
    for (a, b) in v.pairs() {
        *count.entry(a).or_default() += 1;
        *count.entry(b).or_default() += 1;
    }
    count.into_iter().find(|&(_, c)| c > 1).map(|(e, _)| e.clone())
}

/// Every hyperedge lies in at most one pair.
pub fn is_proper(v: &GradientField) -> bool {
    proper_violation(v).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcyclicCheck {
    pub acyclic: bool,
    /// A shortest closed path `α₀, β₀, α₁, …, β_r, α₀`.
    pub witness: Option<Vec<Hyperedge>>,
}

/// Searches for a non-trivial closed path `α₀, β₀, α₁, β₁, …, α_{r+1} = α₀` with
/// `(αᵢ, βᵢ) ∈ V`, `(αᵢ₊₁, βᵢ) ∈ V` and `αᵢ ≠ αᵢ₊₁`.
///
/// Each step needs two distinct α paired with the same β, and such a step can
/// be walked back, so a closed path exists exactly when some β has two
/// partners. The witness is the least `α₀, β, α₁, β, α₀`.
pub fn is_acyclic(v: &GradientField) -> AcyclicCheck {
    let mut downs: BTreeMap<&Hyperedge, Vec<&Hyperedge>> = BTreeMap::new();
    for (a, b) in v.pairs() {
        downs.entry(b).or_default().push(a);
    }
    let witness = v
        .pairs()
        .iter()
        .filter_map(|(a0, b)| {
            downs[b]
                .iter()
                .find(|&&a1| a1 != a0)
                .map(|&a1| vec![a0.clone(), b.clone(), a1.clone(), b.clone(), a0.clone()])
        })
        .min();
    AcyclicCheck { acyclic: witness.is_none(), witness }
}

/// Re-hosts a proper acyclic field on Δℋ; cells of Δℋ∖ℋ stay unmatched.
pub fn extend_gradient(v: &GradientField, delta: &SimplicialComplex) -> Result<GradientField> {
    if let Some(e) = proper_violation(v) {
        return Err(Error::NotProper(v.host().label(&e)));
    }
    if let Some(w) = is_acyclic(v).witness {
        return Err(Error::NotAcyclic(v.host().label(&w[0])));
    }
    let (from, to) = (v.host().vertex_set(), delta.vertex_set());
    let pairs = v
        .pairs()
        .iter()
        .map(|(a, b)| Ok((translate_edge(a, from, to)?, translate_edge(b, from, to)?)))
        .collect::<Result<Vec<_>>>()?;
    let host = v.host().reindex(to)?;
    if let Some(e) = host.edges().find(|e| !delta.contains(e)) {
        return Err(Error::NotSubhypergraph(host.label(e)));
    }
    GradientField::new(delta.as_hypergraph().clone(), pairs)
}
