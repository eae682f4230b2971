//! Shared fixtures, random generators, oracles and property checks.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hypermorse::chains::{
    boundary_matrix, embedded_homology_in, homology_in, inf_complex, module_intersection, module_sum,
    subcomplex_homology, sup_complex, HomologyTarget, Integers, Matrix, PrimeField, Rationals, Submodule,
};
use hypermorse::cli::{load_hypergraph, LoadedHypergraph};
use hypermorse::hypercore::{delta_closure, lower_complex, Hyperedge, Hypergraph, SimplicialComplex, VertexSet};
use hypermorse::morphisms::{check_commuting_diagram, induced_homology_map, HypergraphMorphism, InducedTarget};
use hypermorse::morse::{
    critical_discrepancy, critical_set, critical_via_gradient, gradient, is_acyclic, is_morse, is_proper,
    is_semi_proper, linear_map, restrict, satisfies_condition_c, GradientField, MorseFunction,
};

pub type Check = Result<(), String>;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn fixture(name: &str) -> LoadedHypergraph {
    let bytes = std::fs::read(fixture_path(name)).expect("fixture exists");
    load_hypergraph(&bytes).expect("fixture loads")
}

pub fn e(vs: &[usize]) -> Hyperedge {
    Hyperedge::new(vs.to_vec()).expect("valid edge")
}

pub fn edge_set(edges: &[&[usize]]) -> BTreeSet<Hyperedge> {
    edges.iter().map(|v| e(v)).collect()
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_edge(rng: &mut ChaCha8Rng, n: usize, max_size: usize) -> Hyperedge {
    let size = rng.gen_range(1..=max_size.min(n));
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    e(&all[..size])
}

/// Random hypergraph on at most `max_vertices` vertices with at most `max_edges` edges.
pub fn random_hypergraph(rng: &mut ChaCha8Rng, max_vertices: usize, max_edges: usize) -> Hypergraph {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(1..=max_edges);
    let edges: Vec<Hyperedge> = (0..m).map(|_| random_edge(rng, n, 4)).collect();
    Hypergraph::new(Arc::new(VertexSet::numbered(n)), edges).expect("valid hypergraph")
}

/// Random simplicial complex with at most `max_simplices` simplices.
pub fn random_simplicial(rng: &mut ChaCha8Rng, max_vertices: usize, max_simplices: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let vs = Arc::new(VertexSet::numbered(n));
    let mut facets = vec![random_edge(rng, n, 2)];
    for _ in 0..6 {
        let mut next = facets.clone();
        next.push(random_edge(rng, n, 3));
        let h = Hypergraph::new(vs.clone(), next.clone()).expect("valid");
        if delta_closure(&h).as_hypergraph().len() > max_simplices {
            break;
        }
        facets = next;
    }
    delta_closure(&Hypergraph::new(vs, facets).expect("valid"))
}

/// Random sub-hypergraph keeping each edge with probability 1/2.
pub fn random_subhypergraph(rng: &mut ChaCha8Rng, h: &Hypergraph) -> Hypergraph {
    let kept: Vec<Hyperedge> = h.edges().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    Hypergraph::new(h.vertex_set().clone(), kept).expect("valid")
}

fn facet_pairs(h: &Hypergraph) -> Vec<(Hyperedge, Hyperedge)> {
    h.edges().flat_map(|b| b.facets().into_iter().filter(|a| h.contains(a)).map(move |a| (a, b.clone()))).collect()
}

/// A random matching of face/coface pairs, each cell used at most once.
fn random_matching(rng: &mut ChaCha8Rng, h: &Hypergraph) -> Vec<(Hyperedge, Hyperedge)> {
    let mut pairs = facet_pairs(h);
    pairs.shuffle(rng);
    let mut used = BTreeSet::new();
    let mut out = Vec::new();
    for (a, b) in pairs {
        if rng.gen_bool(0.6) && !used.contains(&a) && !used.contains(&b) {
            used.insert(a.clone());
            used.insert(b.clone());
            out.push((a, b));
        }
    }
    out
}

/// Values `2·dim` with each matched pair lifted to a shared level between its dimensions.
fn matching_function(rng: &mut ChaCha8Rng, h: &Hypergraph, pairs: &[(Hyperedge, Hyperedge)]) -> MorseFunction {
    let mut values: BTreeMap<Hyperedge, BigRational> =
        h.edges().map(|c| (c.clone(), int(2 * c.dimension() as i64))).collect();
    for (a, b) in pairs {
        let level = int(2 * a.dimension() as i64 + 1) + BigRational::new(rng.gen_range(0..8).into(), 8.into());
        values.insert(a.clone(), level.clone());
        values.insert(b.clone(), level);
    }
    MorseFunction::new(h.clone(), values).expect("values on host")
}

/// A random discrete Morse function on `h`.
///
/// Half the time small random integers are tried directly; otherwise a random
/// matching is realised as a function and pairs are dropped until it is Morse.
pub fn random_morse(rng: &mut ChaCha8Rng, h: &Hypergraph) -> MorseFunction {
    if rng.gen_bool(0.5) {
        for _ in 0..20 {
            let values = h.edges().map(|c| (c.clone(), int(c.dimension() as i64 + rng.gen_range(-1..=2)))).collect();
            let f = MorseFunction::new(h.clone(), values).expect("values on host");
            if is_morse(&f).is_valid() && !gradient(&f).expect("morse").is_empty() {
                return f;
            }
        }
    }
    let mut pairs = random_matching(rng, h);
    loop {
        let f = matching_function(rng, h, &pairs);
        if is_morse(&f).is_valid() {
            return f;
        }
        let i = rng.gen_range(0..pairs.len());
        pairs.remove(i);
    }
}

/// A random field in which every coface is paired with at most one face.
pub fn random_field(rng: &mut ChaCha8Rng, h: &Hypergraph) -> GradientField {
    let mut pairs = facet_pairs(h);
    pairs.shuffle(rng);
    let mut upper = BTreeSet::new();
    let chosen: Vec<_> = pairs.into_iter().filter(|(_, b)| rng.gen_bool(0.4) && upper.insert(b.clone())).collect();
    GradientField::new(h.clone(), chosen).expect("pairs lie in host")
}

/// A random morphism `source -> target` whose target contains every image edge.
pub fn random_morphism(rng: &mut ChaCha8Rng, max_vertices: usize, max_edges: usize) -> HypergraphMorphism {
    let source = random_hypergraph(rng, max_vertices, max_edges);
    let m = rng.gen_range(1..=max_vertices);
    let vertex_map: Vec<usize> = (0..source.vertex_set().len()).map(|_| rng.gen_range(0..m)).collect();
    target_for(rng, source, m, vertex_map, max_edges)
}

fn image_of(e: &Hyperedge, map: &[usize]) -> Hyperedge {
    let mut v: Vec<usize> = e.vertices().iter().map(|&x| map[x]).collect();
    v.sort_unstable();
    v.dedup();
    Hyperedge::new(v).expect("non-empty")
}

fn target_for(
    rng: &mut ChaCha8Rng,
    source: Hypergraph,
    m: usize,
    vertex_map: Vec<usize>,
    max_edges: usize,
) -> HypergraphMorphism {
    let mut edges: Vec<Hyperedge> = source.edges().map(|c| image_of(c, &vertex_map)).collect();
    for _ in 0..rng.gen_range(0..=max_edges / 2) {
        edges.push(random_edge(rng, m, 4));
    }
    let target = Hypergraph::new(Arc::new(VertexSet::numbered(m)), edges).expect("valid");
    HypergraphMorphism::new(source, target, vertex_map).expect("complete map")
}

/// Extends `phi` by a random morphism out of its target.
pub fn random_successor(rng: &mut ChaCha8Rng, phi: &HypergraphMorphism, max_vertices: usize) -> HypergraphMorphism {
    let m = rng.gen_range(1..=max_vertices);
    let vertex_map: Vec<usize> = (0..phi.target().vertex_set().len()).map(|_| rng.gen_range(0..m)).collect();
    target_for(rng, phi.target().clone(), m, vertex_map, 6)
}

// Oracles -------------------------------------------------------------------

fn subsets(n: usize) -> impl Iterator<Item = Hyperedge> {
    (1u32..1 << n).map(move |mask| e(&(0..n).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>()))
}

fn is_subset(a: &Hyperedge, b: &Hyperedge) -> bool {
    a.vertices().iter().all(|v| b.vertices().contains(v))
}

/// Subsets of the vertex set contained in some hyperedge.
pub fn delta_oracle(h: &Hypergraph) -> BTreeSet<Hyperedge> {
    subsets(h.vertex_set().len()).filter(|s| h.edges().any(|x| is_subset(s, x))).collect()
}

/// Hyperedges all of whose non-empty subsets are hyperedges.
pub fn lower_oracle(h: &Hypergraph) -> BTreeSet<Hyperedge> {
    let n = h.vertex_set().len();
    h.edges().filter(|x| subsets(n).filter(|s| is_subset(s, x)).all(|s| h.contains(&s))).cloned().collect()
}

/// Lattice points `Σ c_i g_i` with `|c_i| ≤ bound` that fall in the box `[-radius, radius]^d`.
pub fn lattice_points(generators: &[Vec<i64>], dim: usize, bound: i64, radius: i64) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    let mut coeffs = vec![-bound; generators.len()];
    loop {
        let mut p = vec![0i64; dim];
        for (c, g) in coeffs.iter().zip(generators) {
            for (x, y) in p.iter_mut().zip(g) {
                *x += c * y;
            }
        }
        if p.iter().all(|x| x.abs() <= radius) {
            out.insert(p);
        }
        let mut k = 0;
        loop {
            if k == coeffs.len() {
                return out;
            }
            if coeffs[k] < bound {
                coeffs[k] += 1;
                break;
            }
            coeffs[k] = -bound;
            k += 1;
        }
    }
}

pub fn box_points(dim: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out.into_iter().flat_map(|p| (-radius..=radius).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

pub fn span_of(generators: &[Vec<i64>], dim: usize) -> Submodule<BigInt> {
    let cols: Vec<Vec<BigInt>> = generators.iter().map(|g| g.iter().map(|&x| BigInt::from(x)).collect()).collect();
    Submodule::span(&Integers, &Matrix::from_columns(&cols, dim))
}

fn contains_point(m: &Submodule<BigInt>, p: &[i64]) -> bool {
    m.contains(&Integers, &p.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
}

fn random_generators(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Vec<i64>> {
    let k = rng.gen_range(1..=2);
    (0..k).map(|_| (0..dim).map(|_| rng.gen_range(-1..=1)).collect()).collect()
}

// Property checks -----------------------------------------------------------

pub const MAX_VERTICES: usize = 8;
pub const MAX_EDGES: usize = 20;

pub fn boundary_squares_to_zero(rng: &mut ChaCha8Rng) -> Check {
    let h = random_hypergraph(rng, MAX_VERTICES, MAX_EDGES);
    let delta = delta_closure(&h);
    let top = delta.as_hypergraph().top_dimension().unwrap_or(0);
    for n in 2..=top {
        let dd = boundary_matrix(&Integers, &delta, n - 1).mul(&Integers, &boundary_matrix(&Integers, &delta, n));
        ensure(dd.is_zero(&Integers), || format!("∂∂ ≠ 0 in degree {n} for {h:?}"))?;
    }
    Ok(())
}

pub fn inf_within_sup(rng: &mut ChaCha8Rng) -> Check {
    let h = random_hypergraph(rng, MAX_VERTICES, MAX_EDGES);
    let inf = inf_complex(&Integers, &h).map_err(|e| e.to_string())?;
    let sup = sup_complex(&Integers, &h).map_err(|e| e.to_string())?;
    for n in 0..inf.num_degrees() {
        let full = Submodule::full(&Integers, inf.ambient().dim(n));
        ensure(sup.module(n).contains_module(&Integers, inf.module(n)), || format!("Inf_{n} ⊄ Sup_{n} for {h:?}"))?;
        ensure(full.contains_module(&Integers, sup.module(n)), || format!("Sup_{n} ⊄ C_{n} for {h:?}"))?;
    }
    Ok(())
}

pub fn inf_sup_homology_agree(rng: &mut ChaCha8Rng) -> Check {
    let h = random_hypergraph(rng, MAX_VERTICES, MAX_EDGES);
    let a = subcomplex_homology(&inf_complex(&Integers, &h).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let b = subcomplex_homology(&sup_complex(&Integers, &h).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(a == b, || format!("H(Inf) = {a:?} but H(Sup) = {b:?} for {h:?}"))
}

pub fn embedded_matches_simplicial(rng: &mut ChaCha8Rng) -> Check {
    let k = random_simplicial(rng, MAX_VERTICES, MAX_EDGES).into_hypergraph();
    let a = embedded_homology_in(&Integers, &k).map_err(|e| e.to_string())?;
    let b = homology_in(&Integers, &k, HomologyTarget::Assoc).map_err(|e| e.to_string())?;
    ensure(a == b, || format!("embedded {a:?} ≠ simplicial {b:?} for {k:?}"))
}

pub fn restriction_stays_morse(rng: &mut ChaCha8Rng) -> Check {
    let h = random_hypergraph(rng, MAX_VERTICES, MAX_EDGES);
    let f = random_morse(rng, &h);
    let sub = random_subhypergraph(rng, &h);
    let g = restrict(&f, &sub).map_err(|e| e.to_string())?;
    ensure(is_morse(&g).is_valid(), || format!("restriction of {f:?} to {sub:?} is not Morse"))
}

pub fn critical_cells_survive_restriction(rng: &mut ChaCha8Rng) -> Check {
    let h = random_hypergraph(rng, MAX_VERTICES, MAX_EDGES);
    let f = random_morse(rng, &h);
    let sub = random_subhypergraph(rng, &h);
    let g = restrict(&f, &sub).map_err(|e| e.to_string())?;
    let big = critical_set(&f).map_err(|e| e.to_string())?.critical;
    let small = critical_set(&g).map_err(|e| e.to_string())?.critical;
    let lost: Vec<_> = big.iter().filter(|c| sub.contains(c) && !small.contains(c)).collect();
    ensure(lost.is_empty(), || format!("{lost:?} critical on {h:?} but not on {sub:?}"))
}

pub fn semi_proper_iff_square_zero(rng: &mut ChaCha8Rng) -> Check {
    let h = random_hypergraph(rng, MAX_VERTICES, MAX_EDGES);
    let v = if rng.gen_bool(0.5) { random_field(rng, &h) } else { gradient(&random_morse(rng, &h)).expect("morse") };
    let semi = is_semi_proper(&v).holds;
    let zero = linear_map(&Integers, &v).squares_to_zero(&Integers);
    ensure(semi == zero, || format!("semi-proper {semi} but R(V)² = 0 is {zero} for {:?}", v.pairs()))
}

pub fn gradients_are_acyclic(rng: &mut ChaCha8Rng) -> Check {
    let h = random_hypergraph(rng, MAX_VERTICES, MAX_EDGES);
    let f = random_morse(rng, &h);
    let v = gradient(&f).map_err(|e| e.to_string())?;
    let check = is_acyclic(&v);
    ensure(check.acyclic, || format!("gradient of {f:?} has closed V-path {:?}", check.witness))
}

/// A hypergraph satisfying condition (C): a simplicial complex or a filtered random hypergraph.
fn random_condition_c(rng: &mut ChaCha8Rng) -> Hypergraph {
    loop {
        let h = if rng.gen_bool(0.5) {
            random_simplicial(rng, MAX_VERTICES, MAX_EDGES).into_hypergraph()
        } else {
            random_hypergraph(rng, MAX_VERTICES, MAX_EDGES)
        };
        if satisfies_condition_c(&h).holds {
            return h;
        }
    }
}

pub fn condition_c_gives_proper_gradients(rng: &mut ChaCha8Rng) -> Check {
    let h = random_condition_c(rng);
    let f = random_morse(rng, &h);
    let v = gradient(&f).map_err(|e| e.to_string())?;
    ensure(is_proper(&v), || format!("gradient {:?} of {f:?} is not proper under (C)", v.pairs()))?;
    let direct = critical_set(&f).map_err(|e| e.to_string())?.critical;
    let via = critical_via_gradient(&f).map_err(|e| e.to_string())?;
    ensure(direct == via, || format!("critical {direct:?} ≠ unmatched {via:?} for {f:?}"))
}

pub fn discrepancy_classification_agrees(rng: &mut ChaCha8Rng) -> Check {
    let h = random_hypergraph(rng, MAX_VERTICES, MAX_EDGES);
    let delta = delta_closure(&h).into_hypergraph();
    let f_bar = random_morse(rng, &delta);
    let report = critical_discrepancy(&f_bar, &h).map_err(|e| e.to_string())?;
    let f = restrict(&f_bar, &h).map_err(|e| e.to_string())?;
    let on_h = critical_set(&f).map_err(|e| e.to_string())?.critical;
    let on_delta = critical_set(&f_bar).map_err(|e| e.to_string())?.critical;
    let expected: BTreeSet<_> = on_h.difference(&on_delta).cloned().collect();
    let got: BTreeSet<_> = report.discrepancy.keys().cloned().collect();
    ensure(expected == got, || format!("discrepancy {got:?} ≠ {expected:?} for {f_bar:?} on {h:?}"))
}

pub fn diagram_commutes(rng: &mut ChaCha8Rng) -> Check {
    let phi = random_morphism(rng, 6, 12);
    let ok = if rng.gen_bool(0.5) {
        check_commuting_diagram(&Rationals, &phi).map_err(|e| e.to_string())?
    } else {
        check_commuting_diagram(&PrimeField::new(2).expect("prime"), &phi).map_err(|e| e.to_string())?
    };
    ensure(ok.commutes, || format!("diagram fails at {:?} for {phi:?}", ok.failure))
}

pub fn induced_maps_compose(rng: &mut ChaCha8Rng) -> Check {
    let phi = random_morphism(rng, 5, 8);
    let psi = random_successor(rng, &phi, 5);
    let both = phi.then(&psi).map_err(|e| e.to_string())?;
    let r = Rationals;
    for which in InducedTarget::ALL {
        let a = induced_homology_map(&r, &phi, which).map_err(|e| e.to_string())?;
        let b = induced_homology_map(&r, &psi, which).map_err(|e| e.to_string())?;
        let c = induced_homology_map(&r, &both, which).map_err(|e| e.to_string())?;
        let top = a.num_degrees().min(b.num_degrees()).min(c.num_degrees());
        for n in 0..top {
            let product = b.matrices[n].mul(&r, &a.matrices[n]);
            ensure(product == c.matrices[n], || format!("{which} map of composite differs in degree {n}"))?;
        }
    }
    Ok(())
}

pub fn delta_and_lower_match_oracles(rng: &mut ChaCha8Rng) -> Check {
    let h = random_hypergraph(rng, 5, 12);
    let delta: BTreeSet<_> = delta_closure(&h).as_hypergraph().edge_set().clone();
    ensure(delta == delta_oracle(&h), || format!("Δ mismatch for {h:?}"))?;
    let lower: BTreeSet<_> = lower_complex(&h).as_hypergraph().edge_set().clone();
    ensure(lower == lower_oracle(&h), || format!("δ mismatch for {h:?}"))
}

fn det(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

/// Largest coefficient needed to write any lattice point of the box `[-radius, radius]^d`
/// in terms of linearly independent `generators`, or `None` if they are dependent.
///
/// With `M` a nonsingular square row-minor, the coefficients are `M⁻¹ x_S`, so
/// Cramer's rule bounds them by `radius · max_i Σ_j |adj(M)_ij| / |det M|`.
pub fn coefficient_bound(generators: &[Vec<i64>], dim: usize, radius: i64) -> Option<i64> {
    let k = generators.len();
    let rows: Vec<usize> = (0..dim).collect();
    let choose = |mask: u32| rows.iter().filter(|&&r| mask & (1 << r) != 0).copied().collect::<Vec<_>>();
    let pick = (0u32..1 << dim).filter(|m| m.count_ones() as usize == k).map(choose).find_map(|sel| {
        let m: Vec<Vec<i64>> = sel.iter().map(|&r| generators.iter().map(|g| g[r]).collect()).collect();
        let d = det(&m);
        (d != 0).then_some((m, d))
    })?;
    let (m, d) = pick;
    let cofactor = |i: usize, j: usize| {
        let minor: Vec<Vec<i64>> = m
            .iter()
            .enumerate()
            .filter(|&(r, _)| r != j)
            .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != i).map(|(_, &x)| x).collect())
            .collect();
        det(&minor).abs()
    };
    let worst = (0..k).map(|i| (0..k).map(|j| cofactor(i, j)).sum::<i64>()).max().unwrap_or(0);
    Some(radius * worst / d.abs())
}

/// Compares sum and intersection of two random lattices with enumerated lattice points in a small box.
///
/// Generator sets are redrawn until each of `A`, `B` and `A ∪ B` is independent and
/// small enough to enumerate, so the enumeration finds every box point exactly.
pub fn modules_match_lattice_oracle(rng: &mut ChaCha8Rng) -> Check {
    const RADIUS: i64 = 1;
    const BUDGET: i64 = 2_000_000;
    let fits = |g: &[Vec<i64>], dim: usize| {
        coefficient_bound(g, dim, RADIUS).filter(|b| (2 * b + 1).pow(g.len() as u32) <= BUDGET)
    };
    let (dim, ga, gb, bounds) = loop {
        let dim = rng.gen_range(1..=6);
        let ga = random_generators(rng, dim);
        let gb = random_generators(rng, dim);
        let all: Vec<Vec<i64>> = ga.iter().chain(&gb).cloned().collect();
        // A dependent union still gets an exact intersection check via A and B alone.
        let sum_bound = if all.len() <= dim { fits(&all, dim) } else { None };
        if let (Some(ba), Some(bb)) = (fits(&ga, dim), fits(&gb, dim)) {
            break (dim, ga, gb, (ba, bb, sum_bound));
        }
    };
    let (a, b) = (span_of(&ga, dim), span_of(&gb, dim));
    let sum = module_sum(&Integers, &a, &b);
    let meet = module_intersection(&Integers, &a, &b);
    let all: Vec<Vec<i64>> = ga.iter().chain(&gb).cloned().collect();
    let a_points = lattice_points(&ga, dim, bounds.0, RADIUS);
    let b_points = lattice_points(&gb, dim, bounds.1, RADIUS);
    let sum_points = bounds.2.map(|bound| lattice_points(&all, dim, bound, RADIUS));
    for p in box_points(dim, RADIUS) {
        let in_meet = a_points.contains(&p) && b_points.contains(&p);
        ensure(contains_point(&meet, &p) == in_meet, || format!("intersection disagrees at {p:?} for {ga:?}, {gb:?}"))?;
        match &sum_points {
            Some(points) => {
                let in_sum = points.contains(&p);
                ensure(contains_point(&sum, &p) == in_sum, || format!("sum disagrees at {p:?} for {ga:?} + {gb:?}"))?;
            }
            None => {
                // Dependent union: every point of A or B must lie in the sum.
                let in_part = a_points.contains(&p) || b_points.contains(&p);
                ensure(!in_part || contains_point(&sum, &p), || format!("sum misses {p:?} for {ga:?} + {gb:?}"))?;
            }
        }
    }
    ensure(sum.rank() <= a.rank() + b.rank() && meet.rank() <= a.rank().min(b.rank()), || "rank bounds".into())
}

/// Runs `check` on `count` seeded instances and reports the first failure.
pub fn run_seeded(name: &str, base: u64, count: u64, check: Property) -> Check {
    for i in 0..count {
        let seed = base.wrapping_mul(1_000_003).wrapping_add(i);
        check(&mut rng(seed)).map_err(|msg| format!("{name} (seed {seed}): {msg}"))?;
    }
    Ok(())
}

pub const INSTANCES: u64 = 200;

pub type Property = fn(&mut ChaCha8Rng) -> Check;

pub const PROPERTIES: &[(&str, Property)] = &[
    ("boundary squares to zero", boundary_squares_to_zero),
    ("Inf within Sup within C", inf_within_sup),
    ("H(Inf) equals H(Sup)", inf_sup_homology_agree),
    ("embedded equals simplicial homology on complexes", embedded_matches_simplicial),
    ("restriction of a Morse function is Morse", restriction_stays_morse),
    ("critical cells survive restriction", critical_cells_survive_restriction),
    ("semi-proper iff R(V) squares to zero", semi_proper_iff_square_zero),
    ("gradients are acyclic", gradients_are_acyclic),
    ("condition (C) gives proper gradients", condition_c_gives_proper_gradients),
    ("discrepancy classification agrees with definition", discrepancy_classification_agrees),
    ("morphism diagram commutes", diagram_commutes),
    ("induced maps compose", induced_maps_compose),
];

pub const ORACLES: &[(&str, Property)] = &[
    ("delta and lower closures match subset enumeration", delta_and_lower_match_oracles),
    ("module sum and intersection match lattice enumeration", modules_match_lattice_oracle),
];

pub mod criteria;
