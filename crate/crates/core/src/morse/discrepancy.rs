//! Critical cells read off the gradient map, and the cells that become
//! critical when a Morse function on Δℋ is restricted to ℋ.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::chains::Integers;
use crate::error::{Error, Result};
use crate::hypercore::{delta_closure, Hyperedge, Hypergraph};

use super::function::{critical_set, require_morse, restrict, MorseFunction};
use super::gradient::{gradient, linear_map, GradedLinearMap};

/// Cells of a graded map's domain whose image is `±` a single cell.
fn single_cell_image(r: &GradedLinearMap<BigInt>, cell: &Hyperedge) -> Option<Hyperedge> {
    let img = r.apply(&Integers, cell);
    if img.len() == 1 {
        let (eta, c) = img.into_iter().next().expect("one entry");
        c.abs().eq(&BigInt::from(1)).then_some(eta)
    } else {
        None
    }
}

/// For each cell `σ`, the cells `τ` with `R(τ) = ±σ`.
fn single_cell_preimages(r: &GradedLinearMap<BigInt>, cells: &[Hyperedge]) -> BTreeMap<Hyperedge, Vec<Hyperedge>> {
    let mut out: BTreeMap<Hyperedge, Vec<Hyperedge>> = BTreeMap::new();
    for tau in cells {
        if let Some(sigma) = single_cell_image(r, tau) {
            out.entry(sigma).or_default().push(tau.clone());
        }
    }
    out
}

/// `{σ : R(grad f)(σ) = 0 and σ is not ± the image of a cell}`.
pub fn critical_via_gradient(f: &MorseFunction) -> Result<BTreeSet<Hyperedge>> {
    require_morse(f)?;
    let r = linear_map(&Integers, &gradient(f)?);
    let cells: Vec<Hyperedge> = f.host().edges().cloned().collect();
    let hit = single_cell_preimages(&r, &cells);
    Ok(cells.into_iter().filter(|s| r.apply(&Integers, s).is_empty() && !hit.contains_key(s)).collect())
}

/// Which of the three possible reasons makes a cell of ℋ critical for `f` but not for `f̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiscrepancyCase {
    /// `R(V̄)(σ) = ±η` with `η ∉ ℋ`, and no cell maps onto `±σ`.
    ImageOutside,
    /// `R(V̄)(σ) = ±η` with `η ∉ ℋ`, and some `τ ∈ Δℋ∖ℋ` has `R(V̄)(τ) = ±σ`.
    ImageOutsideAndHit,
    /// `R(V̄)(σ) = 0`, and some `τ ∈ Δℋ∖ℋ` has `R(V̄)(τ) = ±σ`.
    HitFromOutside,
}

impl DiscrepancyCase {
    pub fn roman(&self) -> &'static str {
        match self {
            DiscrepancyCase::ImageOutside => "i",
            DiscrepancyCase::ImageOutsideAndHit => "ii",
            DiscrepancyCase::HitFromOutside => "iii",
        }
    }
}

impl fmt::Display for DiscrepancyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.roman())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    /// `M(f̄, Δℋ)`.
    pub critical_bar: BTreeSet<Hyperedge>,
    /// `M(f, ℋ)` for `f = f̄|ℋ`.
    pub critical: BTreeSet<Hyperedge>,
    /// `M(f̄, Δℋ) ∩ ℋ`.
    pub intersection: BTreeSet<Hyperedge>,
    /// `M(f, ℋ) ∖ (M(f̄, Δℋ) ∩ ℋ)` with the case each member falls under.
    pub discrepancy: BTreeMap<Hyperedge, DiscrepancyCase>,
}

/// Computes `M(f,ℋ) ∖ (M(f̄,Δℋ) ∩ ℋ)` from the definitions and again from
/// `R(grad f̄)`; the two must agree.
pub fn critical_discrepancy(f_bar: &MorseFunction, h: &Hypergraph) -> Result<DiscrepancyReport> {
    require_morse(f_bar)?;
    let h = h.reindex(f_bar.host().vertex_set())?;
    let delta = delta_closure(&h);
    if delta.as_hypergraph() != f_bar.host() {
        return Err(Error::HostMismatch);
    }
    let f = restrict(f_bar, &h)?;
    let critical_bar = critical_set(f_bar)?.critical;
    let critical = critical_set(&f)?.critical;
    let intersection: BTreeSet<Hyperedge> = critical_bar.iter().filter(|e| h.contains(e)).cloned().collect();
    let by_definition: BTreeSet<Hyperedge> = critical.difference(&intersection).cloned().collect();

    let r = linear_map(&Integers, &gradient(f_bar)?);
    let all: Vec<Hyperedge> = delta.edges().cloned().collect();
    let hit = single_cell_preimages(&r, &all);
    let mut discrepancy = BTreeMap::new();
    for sigma in h.edges() {
        let image = r.apply(&Integers, sigma);
        let image_outside = single_cell_image(&r, sigma).filter(|eta| !h.contains(eta)).is_some();
        let preimages = hit.get(sigma).map(Vec::as_slice).unwrap_or(&[]);
        let hit_from_outside = preimages.iter().any(|t| !h.contains(t));
        let case = if image_outside && preimages.is_empty() {
            Some(DiscrepancyCase::ImageOutside)
        } else if image_outside && hit_from_outside {
            Some(DiscrepancyCase::ImageOutsideAndHit)
        } else if image.is_empty() && hit_from_outside {
            Some(DiscrepancyCase::HitFromOutside)
        } else {
            None
        };
        if let Some(c) = case {
            discrepancy.insert(sigma.clone(), c);
        }
    }
    let by_case: BTreeSet<Hyperedge> = discrepancy.keys().cloned().collect();
    if let Some(e) = by_definition.symmetric_difference(&by_case).next() {
        return Err(Error::ClassificationMismatch(h.label(e)));
    }
    Ok(DiscrepancyReport { critical_bar, critical, intersection, discrepancy })
}
