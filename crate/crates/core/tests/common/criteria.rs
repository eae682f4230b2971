//! One check per acceptance criterion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use hypermorse::chains::{
    embedded_homology, homology, inf_complex, sup_complex, CoeffSpec, HomologyTarget, Integers, Matrix, Rationals,
    SubChainComplex, Submodule,
};
use hypermorse::cli::load_morphism;
use hypermorse::hypercore::{delta_closure, lower_complex, Hyperedge, Hypergraph};
use hypermorse::morphisms::{check_commuting_diagram, induced_homology_map, InducedTarget};
use hypermorse::morse::{
    critical_discrepancy, critical_set, extension_obstruction, gradient, is_morse, linear_map, restrict,
    satisfies_condition_c, search_extension, DiscrepancyCase, ExtensionConfig, GradientField,
};

use super::{e, edge_set, ensure, fixture, fixture_path, run_seeded, Check, INSTANCES, ORACLES, PROPERTIES};

fn err(e: hypermorse::Error) -> String {
    e.to_string()
}

fn edges(h: &Hypergraph) -> BTreeSet<Hyperedge> {
    h.edge_set().clone()
}

fn pairs(v: &GradientField) -> BTreeSet<(Hyperedge, Hyperedge)> {
    v.pairs().clone()
}

/// Module spanned by integer chains given as `(cell, coefficient)` lists, in the ambient basis of degree `n`.
fn span(scc: &SubChainComplex<Integers>, n: usize, chains: &[&[(&[usize], i64)]]) -> Submodule<BigInt> {
    let basis = scc.ambient();
    let rows = basis.dim(n);
    let cols: Vec<Vec<BigInt>> = chains
        .iter()
        .map(|terms| {
            let mut col = vec![BigInt::from(0); rows];
            for (cell, c) in terms.iter() {
                col[basis.position(&e(cell)).expect("cell in Δℋ")] = BigInt::from(*c);
            }
            col
        })
        .collect();
    Submodule::span(&Integers, &Matrix::from_columns(&cols, rows))
}

fn same_module(scc: &SubChainComplex<Integers>, n: usize, expected: &Submodule<BigInt>) -> bool {
    let got = scc.module(n);
    got.contains_module(&Integers, expected) && expected.contains_module(&Integers, got)
}

fn within(limit: Duration, start: Instant, what: &str) -> Check {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

/// Worked example on four vertices with a Morse function on Δℋ.
///
/// The lower complex is taken from its definition: the three edges on
/// `v0, v1, v3` have all their vertices in ℋ, so δℋ has seven cells and the
/// restricted gradient pairs `{v0}` with `{v0,v1}`.
pub fn criterion_1() -> Check {
    let start = Instant::now();
    let loaded = fixture("four_vertices.json");
    let h = &loaded.hypergraph;
    let bettis = embedded_homology(h, CoeffSpec::Integers).map_err(err)?.bettis();
    ensure(bettis == [2, 1, 0], || format!("embedded Betti {bettis:?}"))?;

    let inf = inf_complex(&Integers, h).map_err(err)?;
    let sup = sup_complex(&Integers, h).map_err(err)?;
    let vertices: [&[(&[usize], i64)]; 4] = [&[(&[0], 1)], &[(&[1], 1)], &[(&[2], 1)], &[(&[3], 1)]];
    let cycle_edges: [&[(&[usize], i64)]; 3] = [&[(&[0, 1], 1)], &[(&[0, 3], 1)], &[(&[1, 3], 1)]];
    let mut sup_edges = cycle_edges.to_vec();
    sup_edges.push(&[(&[1, 2], 1), (&[0, 2], -1)]);
    let expected = [
        (&inf, 0, span(&inf, 0, &vertices)),
        (&inf, 1, span(&inf, 1, &cycle_edges)),
        (&inf, 2, span(&inf, 2, &[])),
        (&sup, 0, span(&sup, 0, &vertices)),
        (&sup, 1, span(&sup, 1, &sup_edges)),
        (&sup, 2, span(&sup, 2, &[&[(&[0, 1, 2], 1)]])),
    ];
    for (i, (scc, n, module)) in expected.iter().enumerate() {
        let name = if i < 3 { "Inf" } else { "Sup" };
        ensure(same_module(scc, *n, module), || format!("{name}_{n} differs from the expected module"))?;
    }

    let delta = delta_closure(h).into_hypergraph();
    let mut expected_delta = edges(h);
    expected_delta.extend(edge_set(&[&[0, 2], &[1, 2]]));
    ensure(edges(&delta) == expected_delta, || format!("Δℋ = {delta:?}"))?;
    let lower = lower_complex(h).into_hypergraph();
    let expected_lower = edge_set(&[&[0], &[1], &[2], &[3], &[0, 1], &[0, 3], &[1, 3]]);
    ensure(edges(&lower) == expected_lower, || format!("δℋ = {lower:?}"))?;

    let f_bar = loaded.morse_on(&delta).map_err(err)?;
    let f = restrict(&f_bar, h).map_err(err)?;
    let crit_bar = critical_set(&f_bar).map_err(err)?.critical;
    let crit = critical_set(&f).map_err(err)?.critical;
    ensure(crit_bar == edge_set(&[&[1], &[2], &[3], &[0, 3], &[1, 2], &[1, 3]]), || {
        format!("M(f̄, Δℋ) = {crit_bar:?}")
    })?;
    ensure(crit == edge_set(&[&[1], &[2], &[3], &[0, 3], &[1, 3], &[0, 1, 2]]), || format!("M(f, ℋ) = {crit:?}"))?;

    let v_bar = pairs(&gradient(&f_bar).map_err(err)?);
    let expected_bar: BTreeSet<_> = [(e(&[0]), e(&[0, 1])), (e(&[0, 2]), e(&[0, 1, 2]))].into_iter().collect();
    ensure(v_bar == expected_bar, || format!("grad f̄ = {v_bar:?}"))?;
    let v = pairs(&gradient(&f).map_err(err)?);
    let expected_v: BTreeSet<_> = [(e(&[0]), e(&[0, 1]))].into_iter().collect();
    ensure(v == expected_v, || format!("grad f = {v:?}"))?;
    let f_low = restrict(&f, &lower).map_err(err)?;
    let v_low = pairs(&gradient(&f_low).map_err(err)?);
    ensure(v_low == expected_v, || format!("grad of f on δℋ = {v_low:?}"))?;

    let report = critical_discrepancy(&f_bar, h).map_err(err)?;
    let cases: Vec<_> = report.discrepancy.iter().map(|(c, k)| (c.clone(), *k)).collect();
    ensure(cases == [(e(&[0, 1, 2]), DiscrepancyCase::HitFromOutside)], || format!("discrepancy {cases:?}"))?;
    ensure(report.discrepancy[&e(&[0, 1, 2])].roman() == "iii", || "case label".into())?;
    within(Duration::from_secs(1), start, "criterion 1")
}

/// Solid tetrahedron plus a vertex, versus the tetrahedron with its whole 1-skeleton.
pub fn criterion_2() -> Check {
    let h = fixture("tetrahedron_with_vertex.json").hypergraph;
    let hp = fixture("tetrahedron_with_edges.json").hypergraph;
    let a = embedded_homology(&h, CoeffSpec::Integers).map_err(err)?;
    let b = embedded_homology(&hp, CoeffSpec::Integers).map_err(err)?;
    ensure(a.betti(1) == 0 && a.torsion(1).is_empty(), || format!("H1(ℋ) = {a:?}"))?;
    ensure(b.betti(1) == 3 && b.torsion(1).is_empty(), || format!("H1(ℋ′) = {b:?}"))?;
    for (name, g) in [("ℋ", &h), ("ℋ′", &hp)] {
        let delta = delta_closure(g).into_hypergraph();
        ensure(delta.len() == 15 && delta.counts_by_dimension() == [4, 6, 4, 1], || format!("Δ{name} = {delta:?}"))?;
        let lower = edges(&lower_complex(g).into_hypergraph());
        ensure(lower == edge_set(&[&[0]]), || format!("δ{name} = {lower:?}"))?;
    }
    Ok(())
}

/// Three triangles around a hole versus the same with the hole filled.
pub fn criterion_3() -> Check {
    let h = fixture("triangles_around_hole.json").hypergraph;
    let hp = fixture("triangles_filled.json").hypergraph;
    for (name, g) in [("ℋ", &h), ("ℋ′", &hp)] {
        let b = embedded_homology(g, CoeffSpec::Integers).map_err(err)?.bettis();
        ensure(b[0] == 6 && b[1..].iter().all(|&x| x == 0), || format!("embedded Betti of {name}: {b:?}"))?;
    }
    let a = homology(&h, CoeffSpec::Integers, HomologyTarget::Assoc).map_err(err)?;
    let b = homology(&hp, CoeffSpec::Integers, HomologyTarget::Assoc).map_err(err)?;
    ensure(a.betti(1) == 1 && a.torsion(1).is_empty(), || format!("H1(Δℋ) = {a:?}"))?;
    ensure(b.betti(1) == 0 && b.torsion(1).is_empty(), || format!("H1(Δℋ′) = {b:?}"))
}

/// Hollow triangle included into the filled triangle.
pub fn criterion_4() -> Check {
    let phi = load_morphism(&fixture_path("hollow_into_filled.json")).map_err(err)?.map_err(err)?.morphism;
    let src = embedded_homology(phi.source(), CoeffSpec::Integers).map_err(err)?;
    let tgt = embedded_homology(phi.target(), CoeffSpec::Integers).map_err(err)?;
    ensure(src.betti(0) == 0 && src.betti(1) == 1, || format!("H(ℋ) = {src:?}"))?;
    ensure(tgt.betti(0) == 0 && tgt.betti(1) == 0, || format!("H(ℋ′) = {tgt:?}"))?;

    let r = Rationals;
    let embedded = induced_homology_map(&r, &phi, InducedTarget::Embedded).map_err(err)?;
    ensure(embedded.matrices[1].cols() == 1 && embedded.is_zero(&r), || format!("φ* = {:?}", embedded.matrices))?;
    let assoc = induced_homology_map(&r, &phi, InducedTarget::Assoc).map_err(err)?;
    ensure(assoc.matrices[1].cols() == 1 && assoc.matrices[1].is_zero(&r), || "(Δφ)* nonzero on H1".into())?;
    ensure(assoc.matrices[0] == Matrix::identity(&r, 1), || format!("(Δφ)* on H0 = {:?}", assoc.matrices[0]))?;
    let diagram = check_commuting_diagram(&r, &phi).map_err(err)?;
    ensure(diagram.commutes, || format!("diagram fails at {:?}", diagram.failure))
}

/// A Morse function on a flag `{v0} < {v0,v1} < {v0,v1,v2}` with no Morse extension.
pub fn criterion_5() -> Check {
    let f = fixture("flag.json").morse_on(&fixture("flag.json").hypergraph).map_err(err)?;
    ensure(is_morse(&f).is_valid(), || "not Morse".into())?;
    let crit = critical_set(&f).map_err(err)?.critical;
    ensure(crit.is_empty(), || format!("M = {crit:?}"))?;
    let obstruction = extension_obstruction(&f).map_err(err)?;
    ensure(obstruction == edge_set(&[&[0, 1]]), || format!("obstruction {obstruction:?}"))?;
    let found = search_extension(&f, &ExtensionConfig::default()).map_err(err)?;
    ensure(found.is_none(), || format!("unexpected extension {found:?}"))?;
    let r = linear_map(&Integers, &gradient(&f).map_err(err)?);
    let once = r.apply(&Integers, &e(&[0]));
    let twice: Vec<_> =
        once.iter().flat_map(|(cell, c)| r.apply(&Integers, cell).into_iter().map(move |(t, d)| (t, c * d))).collect();
    ensure(twice == [(e(&[0, 1, 2]), BigInt::from(-1))], || format!("R(V)²{{v0}} = {twice:?}"))
}

/// Three vertices and the triangle, with the triangle lowest.
pub fn criterion_6() -> Check {
    let start = Instant::now();
    let loaded = fixture("triangle_over_vertices.json");
    let f = loaded.morse_on(&loaded.hypergraph).map_err(err)?;
    let crit = critical_set(&f).map_err(err)?.critical;
    ensure(crit == edges(&loaded.hypergraph), || format!("M = {crit:?}"))?;
    let c = satisfies_condition_c(&loaded.hypergraph);
    ensure(!c.holds && c.witness == Some((e(&[0]), e(&[0, 1]), e(&[0, 1, 2]))), || format!("(C) = {c:?}"))?;
    let obstruction = extension_obstruction(&f).map_err(err)?;
    ensure(obstruction.is_empty(), || format!("obstruction {obstruction:?}"))?;
    let delta = delta_closure(&loaded.hypergraph).into_hypergraph();
    let unknowns = delta.len() - loaded.hypergraph.len();
    ensure(unknowns == 3, || format!("{unknowns} unknown cells"))?;
    let found = search_extension(&f, &ExtensionConfig::default()).map_err(err)?;
    ensure(found.is_none(), || format!("unexpected extension {found:?}"))?;
    within(Duration::from_secs(5), start, "criterion 6")
}

pub fn criterion_7() -> Check {
    let start = Instant::now();
    for (i, (name, check)) in PROPERTIES.iter().enumerate() {
        run_seeded(name, 1 + i as u64, INSTANCES, *check)?;
    }
    within(Duration::from_secs(60), start, "property suite")
}

pub fn criterion_8() -> Check {
    for (i, (name, check)) in ORACLES.iter().enumerate() {
        run_seeded(name, 101 + i as u64, INSTANCES, *check)?;
    }
    Ok(())
}

pub type Criterion = fn() -> Check;

pub const CRITERIA: [(&str, Criterion); 8] = [
    ("worked example on four vertices", criterion_1),
    ("tetrahedron examples", criterion_2),
    ("three triangles around a hole", criterion_3),
    ("hollow into filled triangle", criterion_4),
    ("flag without Morse extension", criterion_5),
    ("triangle below its vertices", criterion_6),
    ("randomized property suite", criterion_7),
    ("brute-force oracles", criterion_8),
];
