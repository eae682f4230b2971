//! Exhaustive search for a Morse extension of `f` from ℋ to Δℋ.
//!
//! The Morse conditions only compare values of neighbouring cells, so a
//! solution exists iff one exists on a grid that realizes every weak order of
//! the `k` unknown cells relative to the distinct values `u₁ < … < u_m` of `f`:
//! the `uᵢ` themselves, `k` fresh levels inside every gap, and `k` levels below
//! `u₁` and above `u_m`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::hypercore::{delta_closure, HasseDiagram, Hyperedge};

use super::function::{require_morse, MorseFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtensionConfig {
    /// Fresh levels per gap; defaults to the number of unknown cells.
    pub grid_levels: Option<usize>,
    pub max_unknowns: usize,
    pub max_grid_levels: usize,
}

impl Default for ExtensionConfig {
    fn default() -> Self {
        ExtensionConfig { grid_levels: None, max_unknowns: 6, max_grid_levels: 64 }
    }
}

/// Candidate values in increasing order.
pub fn candidate_levels(fixed: &[BigRational], per_gap: usize) -> Vec<BigRational> {
    let mut u: Vec<BigRational> = fixed.to_vec();
    u.sort();
    u.dedup();
    let Some((first, last)) = u.first().cloned().zip(u.last().cloned()) else {
        return (0..per_gap).map(|j| BigRational::from_integer(BigInt::from(j))).collect();
    };
    let step = |j: usize| BigRational::from_integer(BigInt::from(j));
    let mut out: Vec<BigRational> = (1..=per_gap).rev().map(|j| &first - step(j)).collect();
    for w in u.windows(2) {
        out.push(w[0].clone());
        let width = &w[1] - &w[0];
        for j in 1..=per_gap {
            out.push(&w[0] + &width * BigRational::new(BigInt::from(j), BigInt::from(per_gap + 1)));
        }
    }
    out.push(last.clone());
    out.extend((1..=per_gap).map(|j| &last + step(j)));
    out
}

/// A Morse function on Δℋ agreeing with `f` on ℋ, or `None` if there is none.
/// The search is deterministic: unknown cells in canonical order, levels ascending.
pub fn search_extension(f: &MorseFunction, config: &ExtensionConfig) -> Result<Option<MorseFunction>> {
    require_morse(f)?;
    let delta = delta_closure(f.host()).into_hypergraph();
    let hasse = HasseDiagram::new(&delta);
    let unknowns: Vec<usize> = (0..hasse.len()).filter(|&i| !f.host().contains(hasse.cell(i))).collect();
    let k = unknowns.len();
    let per_gap = config.grid_levels.unwrap_or(k);
    if k > config.max_unknowns || per_gap > config.max_grid_levels {
        return Err(Error::SizeCap {
            unknowns: k,
            levels: per_gap,
            max_unknowns: config.max_unknowns,
            max_levels: config.max_grid_levels,
        });
    }
    if k == 0 {
        return Ok(Some(MorseFunction::new(delta, f.values().clone())?));
    }

    let fixed: Vec<BigRational> = f.values().values().cloned().collect();
    let levels = candidate_levels(&fixed, per_gap);
    let rank_of: BTreeMap<&BigRational, usize> = levels.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut assigned: Vec<Option<usize>> = (0..hasse.len()).map(|i| f.get(hasse.cell(i)).map(|v| rank_of[v])).collect();

    log::debug!("extension search: {k} unknowns over {} levels", levels.len());
    if !backtrack(&hasse, &unknowns, &levels, &mut assigned, 0) {
        return Ok(None);
    }
    let values: BTreeMap<Hyperedge, BigRational> = (0..hasse.len())
        .map(|i| (hasse.cell(i).clone(), levels[assigned[i].expect("all cells assigned")].clone()))
        .collect();
    Ok(Some(MorseFunction::new(delta, values)?))
}

fn locally_ok(hasse: &HasseDiagram, assigned: &[Option<usize>], i: usize) -> bool {
    let Some(v) = assigned[i] else { return true };
    let low = hasse.cofaces(i).iter().filter(|&&j| assigned[j].is_some_and(|w| w <= v)).count();
    let high = hasse.faces(i).iter().filter(|&&j| assigned[j].is_some_and(|w| w >= v)).count();
    low <= 1 && high <= 1
}

fn backtrack(
    hasse: &HasseDiagram,
    unknowns: &[usize],
    levels: &[BigRational],
    assigned: &mut [Option<usize>],
    depth: usize,
) -> bool {
    let Some(&cell) = unknowns.get(depth) else { return true };
    for level in 0..levels.len() {
        assigned[cell] = Some(level);
        // Counts only grow as more cells are assigned, so a local excess is final.
        let ok = locally_ok(hasse, assigned, cell)
            && hasse.faces(cell).iter().chain(hasse.cofaces(cell)).all(|&j| locally_ok(hasse, assigned, j));
        if ok && backtrack(hasse, unknowns, levels, assigned, depth + 1) {
            return true;
        }
    }
    assigned[cell] = None;
    false
}
