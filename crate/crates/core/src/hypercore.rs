//! Hypergraphs on a totally ordered vertex set, together with their associated
//! complex (smallest simplicial complex containing every hyperedge) and their
//! lower-associated complex (largest simplicial complex made of hyperedges).
//!
//! Hyperedges are stored as strictly increasing index tuples into a shared
//! [`VertexSet`]. The order of a [`Hypergraph`]'s edge set is by dimension
//! first and lexicographic index order second, and every set-valued result in
//! the crate uses this order.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of distinct vertex labels. Declaration order is the vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VertexSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = Vec::new();
        let mut index = HashMap::new();
        for name in names {
            let name = name.into();
            if name.is_empty() || name.contains(',') {
                return Err(Error::InvalidLabel(name));
            }
            if index.insert(name.clone(), out.len()).is_some() {
                return Err(Error::DuplicateLabel(name));
            }
            out.push(name);
        }
        Ok(VertexSet { names: out, index })
    }

    /// `v0, v1, …, v{n-1}`; handy for fixtures.
    pub fn numbered(n: usize) -> Self {
        VertexSet::new((0..n).map(|i| format!("v{i}"))).expect("generated labels are distinct")
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

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }
}

/// A non-empty, strictly increasing tuple of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperedge(Vec<usize>);

impl Hyperedge {
    /// Sorts and deduplicates `vertices`; fails on an empty input.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.is_empty() {
            return Err(Error::EmptyHyperedge);
        }
        Ok(Hyperedge(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    /// Codimension-one faces, in the order of the omitted position
    /// (the face at position `i` omits `self.vertices()[i]`).
    pub fn facets(&self) -> Vec<Hyperedge> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|i| {
                let mut v = self.0.clone();
                v.remove(i);
                Hyperedge(v)
            })
            .collect()
    }

    pub fn is_face_of(&self, other: &Hyperedge) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().all(|v| other.0.binary_search(v).is_ok())
    }

    /// True iff `self` is a codimension-one face of `other`.
    pub fn is_facet_of(&self, other: &Hyperedge) -> bool {
        self.0.len() + 1 == other.0.len() && self.is_face_of(other)
    }

    /// All non-empty subsets, as a simplicial complex on `vertices`.
    pub fn power_set(&self) -> Vec<Hyperedge> {
        let n = self.0.len();
        assert!(n < usize::BITS as usize, "hyperedge too large to enumerate its subsets");
        (1usize..(1 << n))
            .map(|mask| Hyperedge((0..n).filter(|i| mask >> i & 1 == 1).map(|i| self.0[i]).collect()))
            .collect()
    }

    pub fn label(&self, vs: &VertexSet) -> String {
        self.0.iter().map(|&i| vs.name(i)).collect::<Vec<_>>().join(",")
    }
}

impl Ord for Hyperedge {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Hyperedge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "v{v}")?;
        }
        write!(f, "}}")
    }
}

/// Non-fatal observations made while building a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildWarning {
    DuplicateEdge(String),
    EmptyHypergraph,
}

impl fmt::Display for BuildWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildWarning::DuplicateEdge(e) => write!(f, "duplicate hyperedge {{{e}}} merged"),
            BuildWarning::EmptyHypergraph => write!(f, "hypergraph has no hyperedges"),
        }
    }
}

/// A set of hyperedges on a vertex set.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    vertices: Arc<VertexSet>,
    edges: BTreeSet<Hyperedge>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.vertices, &other.vertices) || self.vertices == other.vertices) && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    pub fn new(vertices: Arc<VertexSet>, edges: impl IntoIterator<Item = Hyperedge>) -> Result<Self> {
        let (h, warnings) = Self::with_warnings(vertices, edges)?;
        for w in &warnings {
            log::warn!("{w}");
        }
        Ok(h)
    }

    /// Like [`Hypergraph::new`] but hands duplicate/empty warnings back to the caller.
    pub fn with_warnings(
        vertices: Arc<VertexSet>,
        edges: impl IntoIterator<Item = Hyperedge>,
    ) -> Result<(Self, Vec<BuildWarning>)> {
        let mut set = BTreeSet::new();
        let mut warnings = Vec::new();
        for e in edges {
            if let Some(&bad) = e.vertices().iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::VertexOutOfRange(bad));
            }
            let label = e.label(&vertices);
            if !set.insert(e) {
                warnings.push(BuildWarning::DuplicateEdge(label));
            }
        }
        if set.is_empty() {
            warnings.push(BuildWarning::EmptyHypergraph);
        }
        Ok((Hypergraph { vertices, edges: set }, warnings))
    }

    /// Builds from label lists, e.g. `&[&["v0", "v1"], &["v2"]]`.
    pub fn from_labels<S: AsRef<str>>(vertices: Arc<VertexSet>, edges: &[&[S]]) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for e in edges {
            let idx = e
                .iter()
                .map(|l| vertices.position(l.as_ref()).ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string())))
                .collect::<Result<Vec<_>>>()?;
            out.push(Hyperedge::new(idx)?);
        }
        Hypergraph::new(vertices, out)
    }

    pub(crate) fn from_set(vertices: Arc<VertexSet>, edges: BTreeSet<Hyperedge>) -> Self {
        Hypergraph { vertices, edges }
    }

    pub fn vertex_set(&self) -> &Arc<VertexSet> {
        &self.vertices
    }

    pub fn edges(&self) -> std::collections::btree_set::Iter<'_, Hyperedge> {
        self.edges.iter()
    }

    pub fn edge_set(&self) -> &BTreeSet<Hyperedge> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &Hyperedge) -> bool {
        self.edges.contains(e)
    }

    /// Largest hyperedge dimension, `None` when there are no hyperedges.
    pub fn top_dimension(&self) -> Option<usize> {
        self.edges.iter().next_back().map(Hyperedge::dimension)
    }

    pub fn edges_of_dim(&self, n: usize) -> impl Iterator<Item = &Hyperedge> + '_ {
        self.edges.iter().filter(move |e| e.dimension() == n)
    }

    /// Number of hyperedges per dimension `0..=top`.
    pub fn counts_by_dimension(&self) -> Vec<usize> {
        let mut counts = vec![0; self.top_dimension().map_or(0, |t| t + 1)];
        for e in &self.edges {
            counts[e.dimension()] += 1;
        }
        counts
    }

    pub fn label(&self, e: &Hyperedge) -> String {
        e.label(&self.vertices)
    }

    /// Re-expresses this hypergraph's edges in `target`'s vertex indexing,
    /// matching labels by name.
    pub fn reindex(&self, target: &Arc<VertexSet>) -> Result<Hypergraph> {
        if Arc::ptr_eq(&self.vertices, target) || *self.vertices == **target {
            return Ok(Hypergraph { vertices: target.clone(), edges: self.edges.clone() });
        }
        let map = self.vertex_map_into(target)?;
        let edges = self.edges.iter().map(|e| map_edge(e, &map)).collect::<Result<BTreeSet<_>>>()?;
        Ok(Hypergraph { vertices: target.clone(), edges })
    }

    /// Index translation for labels used by some edge; unused labels map to `None`.
    fn vertex_map_into(&self, target: &VertexSet) -> Result<Vec<Option<usize>>> {
        let used: BTreeSet<usize> = self.edges.iter().flat_map(|e| e.vertices().iter().copied()).collect();
        let mut map = vec![None; self.vertices.len()];
        for v in used {
            let name = self.vertices.name(v);
            map[v] = Some(target.position(name).ok_or_else(|| Error::UnknownLabel(name.to_string()))?);
        }
        Ok(map)
    }
}

fn map_edge(e: &Hyperedge, map: &[Option<usize>]) -> Result<Hyperedge> {
    Hyperedge::new(e.vertices().iter().map(|&v| map[v].expect("mapped label")).collect())
}

/// Re-expresses one edge in another vertex indexing, matching labels by name.
pub fn translate_edge(e: &Hyperedge, from: &VertexSet, to: &VertexSet) -> Result<Hyperedge> {
    let idx = e
        .vertices()
        .iter()
        .map(|&v| to.position(from.name(v)).ok_or_else(|| Error::UnknownLabel(from.name(v).to_string())))
        .collect::<Result<Vec<_>>>()?;
    Hyperedge::new(idx)
}

/// A hypergraph that is closed under taking non-empty subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex(Hypergraph);

impl SimplicialComplex {
    pub fn new(h: Hypergraph) -> Result<Self> {
        match first_missing_face(&h) {
            None => Ok(SimplicialComplex(h)),
            Some((sigma, tau)) => Err(Error::NotSimplicial { simplex: h.label(&sigma), missing: h.label(&tau) }),
        }
    }

    pub fn empty(vertices: Arc<VertexSet>) -> Self {
        SimplicialComplex(Hypergraph::from_set(vertices, BTreeSet::new()))
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.0
    }
}

impl Deref for SimplicialComplex {
    type Target = Hypergraph;

    fn deref(&self) -> &Hypergraph {
        &self.0
    }
}

fn first_missing_face(h: &Hypergraph) -> Option<(Hyperedge, Hyperedge)> {
    // Checking facets suffices: closure under facets implies closure under subsets.
    h.edges().find_map(|s| s.facets().into_iter().find(|t| !h.contains(t)).map(|t| (s.clone(), t)))
}

pub fn dimension(edge: &Hyperedge) -> usize {
    edge.dimension()
}

/// Δσ: every non-empty subset of `edge`.
pub fn power_complex(vertices: Arc<VertexSet>, edge: &Hyperedge) -> SimplicialComplex {
    SimplicialComplex(Hypergraph::from_set(vertices, edge.power_set().into_iter().collect()))
}

/// Δℋ, the union of the power complexes of all hyperedges.
pub fn delta_closure(h: &Hypergraph) -> SimplicialComplex {
    let mut out: BTreeSet<Hyperedge> = BTreeSet::new();
    // Walk from the top so that faces already reached through a larger edge are skipped.
    for e in h.edges().rev() {
        if out.contains(e) {
            continue;
        }
        let mut stack = vec![e.clone()];
        while let Some(s) = stack.pop() {
            if out.contains(&s) {
                continue;
            }
            stack.extend(s.facets());
            out.insert(s);
        }
    }
    SimplicialComplex(Hypergraph::from_set(h.vertex_set().clone(), out))
}

/// δℋ = {σ ∈ ℋ : every non-empty subset of σ lies in ℋ}.
pub fn lower_complex(h: &Hypergraph) -> SimplicialComplex {
    // σ qualifies iff σ ∈ ℋ and each facet qualifies; edges come in increasing dimension.
    let mut out: BTreeSet<Hyperedge> = BTreeSet::new();
    for e in h.edges() {
        if e.facets().iter().all(|t| out.contains(t)) {
            out.insert(e.clone());
        }
    }
    SimplicialComplex(Hypergraph::from_set(h.vertex_set().clone(), out))
}

pub fn is_simplicial(h: &Hypergraph) -> bool {
    first_missing_face(h).is_none()
}

/// Whether every hyperedge of `inner` is a hyperedge of `outer`, matching vertex labels by name.
pub fn is_subhypergraph(inner: &Hypergraph, outer: &Hypergraph) -> Result<bool> {
    let inner = inner.reindex(outer.vertex_set())?;
    Ok(inner.edges().all(|e| outer.contains(e)))
}

/// Codimension-one incidences inside a fixed hypergraph.
///
/// Cells are numbered in the hypergraph's canonical order; `faces[i]` and
/// `cofaces[i]` hold the numbers of the codimension-one faces/cofaces of cell
/// `i` that are themselves in the hypergraph.
#[derive(Debug, Clone)]
pub struct HasseDiagram {
    cells: Vec<Hyperedge>,
    index: HashMap<Hyperedge, usize>,
    faces: Vec<Vec<usize>>,
    cofaces: Vec<Vec<usize>>,
}

impl HasseDiagram {
    pub fn new(h: &Hypergraph) -> Self {
        let cells: Vec<Hyperedge> = h.edges().cloned().collect();
        let index: HashMap<Hyperedge, usize> = cells.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut faces = vec![Vec::new(); cells.len()];
        let mut cofaces = vec![Vec::new(); cells.len()];
        for (i, c) in cells.iter().enumerate() {
            for t in c.facets() {
                if let Some(&j) = index.get(&t) {
                    faces[i].push(j);
                    cofaces[j].push(i);
                }
            }
        }
        for f in faces.iter_mut().chain(cofaces.iter_mut()) {
            f.sort_unstable();
        }
        HasseDiagram { cells, index, faces, cofaces }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell(&self, i: usize) -> &Hyperedge {
        &self.cells[i]
    }

    pub fn cells(&self) -> &[Hyperedge] {
        &self.cells
    }

    pub fn position(&self, e: &Hyperedge) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn faces(&self, i: usize) -> &[usize] {
        &self.faces[i]
    }

    pub fn cofaces(&self, i: usize) -> &[usize] {
        &self.cofaces[i]
    }
}
