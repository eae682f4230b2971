//! Hypergraph morphisms, the simplicial maps they induce on Δℋ and δℋ, and
//! the induced maps on lower, embedded and associated homology.
//!
//! Induced homology maps are computed over a field. Each homology group gets a
//! deterministic basis: representatives are picked greedily from the canonical
//! cycle basis, skipping anything already in the span of the boundaries and
//! the earlier representatives.

use std::collections::BTreeMap;
use std::fmt;

use crate::chains::{
    boundary_in_basis, column_echelon, hermite_basis, inf_complex, kernel, Chain, GradedBasis, Matrix, Ring, Submodule,
};
use crate::error::{Error, Result};
use crate::hypercore::{delta_closure, lower_complex, Hyperedge, Hypergraph, SimplicialComplex};

/// A vertex map `φ : V → V′` sending every hyperedge of `source` onto a hyperedge of `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergraphMorphism {
    source: Hypergraph,
    target: Hypergraph,
    vertex_map: Vec<usize>,
}

impl HypergraphMorphism {
    /// `vertex_map[i]` is the target index of source vertex `i`. Edge images are
    /// not checked here; see [`validate_morphism`].
    pub fn new(source: Hypergraph, target: Hypergraph, vertex_map: Vec<usize>) -> Result<Self> {
        let (n, m) = (source.vertex_set().len(), target.vertex_set().len());
        if vertex_map.len() < n {
            return Err(Error::IncompleteMorphism(source.vertex_set().name(vertex_map.len()).to_string()));
        }
        if vertex_map.len() > n {
            return Err(Error::VertexOutOfRange(n));
        }
        if let Some(&v) = vertex_map.iter().find(|&&v| v >= m) {
            return Err(Error::VertexOutOfRange(v));
        }
        Ok(HypergraphMorphism { source, target, vertex_map })
    }

    /// Builds the vertex map from source labels to target labels.
    pub fn from_labels(source: Hypergraph, target: Hypergraph, map: &BTreeMap<String, String>) -> Result<Self> {
        for key in map.keys() {
            if source.vertex_set().position(key).is_none() {
                return Err(Error::UnknownLabel(key.clone()));
            }
        }
        let vertex_map = source
            .vertex_set()
            .names()
            .iter()
            .map(|name| {
                let image = map.get(name).ok_or_else(|| Error::IncompleteMorphism(name.clone()))?;
                target.vertex_set().position(image).ok_or_else(|| Error::UnknownLabel(image.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        HypergraphMorphism::new(source, target, vertex_map)
    }

    pub fn identity(h: &Hypergraph) -> Self {
        let n = h.vertex_set().len();
        HypergraphMorphism { source: h.clone(), target: h.clone(), vertex_map: (0..n).collect() }
    }

    pub fn source(&self) -> &Hypergraph {
        &self.source
    }

    pub fn target(&self) -> &Hypergraph {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// `φ(σ)`, with repeated images collapsed.
    pub fn image(&self, e: &Hyperedge) -> Hyperedge {
        apply_vertex_map(&self.vertex_map, e)
    }

    /// `next ∘ self`. The source of `next` must equal the target of `self`.
    pub fn then(&self, next: &HypergraphMorphism) -> Result<Self> {
        if next.source != self.target {
            return Err(Error::HostMismatch);
        }
        let vertex_map = self.vertex_map.iter().map(|&v| next.vertex_map[v]).collect();
        Ok(HypergraphMorphism { source: self.source.clone(), target: next.target.clone(), vertex_map })
    }
}

fn apply_vertex_map(map: &[usize], e: &Hyperedge) -> Hyperedge {
    Hyperedge::new(e.vertices().iter().map(|&v| map[v]).collect()).expect("image of a non-empty edge")
}

/// An edge whose image is not a hyperedge of the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismViolation {
    pub edge: Hyperedge,
    pub image: Hyperedge,
}

/// The least edge of the source whose image is missing from the target, if any.
pub fn validate_morphism(phi: &HypergraphMorphism) -> Option<MorphismViolation> {
    phi.source.edges().find_map(|e| {
        let image = phi.image(e);
        (!phi.target.contains(&image)).then(|| MorphismViolation { edge: e.clone(), image })
    })
}

fn require_valid(phi: &HypergraphMorphism) -> Result<()> {
    match validate_morphism(phi) {
        None => Ok(()),
        Some(v) => Err(Error::InvalidMorphism { edge: phi.source.label(&v.edge), image: phi.target.label(&v.image) }),
    }
}

/// A simplicial map given by a vertex map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialComplex,
    target: SimplicialComplex,
    vertex_map: Vec<usize>,
}

impl SimplicialMap {
    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn image(&self, e: &Hyperedge) -> Hyperedge {
        apply_vertex_map(&self.vertex_map, e)
    }

    /// Every simplex of the source with its image, in canonical order.
    pub fn images(&self) -> Vec<(Hyperedge, Hyperedge)> {
        self.source.edges().map(|e| (e.clone(), self.image(e))).collect()
    }
}

/// `Δφ : Δℋ → Δℋ′`.
pub fn induced_assoc_map(phi: &HypergraphMorphism) -> Result<SimplicialMap> {
    require_valid(phi)?;
    Ok(SimplicialMap {
        source: delta_closure(&phi.source),
        target: delta_closure(&phi.target),
        vertex_map: phi.vertex_map.clone(),
    })
}

/// `δφ : δℋ → δℋ′`.
pub fn induced_lower_map(phi: &HypergraphMorphism) -> Result<SimplicialMap> {
    require_valid(phi)?;
    Ok(SimplicialMap {
        source: lower_complex(&phi.source),
        target: lower_complex(&phi.target),
        vertex_map: phi.vertex_map.clone(),
    })
}

/// Sign of the permutation that sorts `v`, or 0 if `v` has repeats.
fn sorting_sign(v: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            match v[i].cmp(&v[j]) {
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Greater => sign = -sign,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    sign
}

/// Matrices of a chain map, one per degree of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap<E> {
    pub source: GradedBasis,
    pub target: GradedBasis,
    /// Degree `n` has shape `target.dim(n) × source.dim(n)`.
    pub matrices: Vec<Matrix<E>>,
}

/// `f_#`: a simplex goes to `±` its image, or to 0 when two vertices collide.
/// Fails with [`Error::ChainMapViolation`] if the result does not commute with `∂`.
pub fn chain_map<R: Ring>(ring: &R, f: &SimplicialMap) -> Result<ChainMap<R::Elem>> {
    let source = GradedBasis::of(&f.source);
    let target = GradedBasis::of(&f.target);
    let mut matrices = Vec::with_capacity(source.num_degrees());
    for n in 0..source.num_degrees() {
        let mut m = Matrix::zeros(ring, target.dim(n), source.dim(n));
        for (j, sigma) in source.degree(n).iter().enumerate() {
            let raw: Vec<usize> = sigma.vertices().iter().map(|&v| f.vertex_map[v]).collect();
            let sign = sorting_sign(&raw);
            if sign == 0 {
                continue;
            }
            let i = target.position(&f.image(sigma)).expect("simplicial map lands in the target");
            m.set(i, j, ring.from_i64(sign));
        }
        matrices.push(m);
    }
    for n in 1..matrices.len() {
        let lhs = boundary_in_basis(ring, &target, n).mul(ring, &matrices[n]);
        let rhs = matrices[n - 1].mul(ring, &boundary_in_basis(ring, &source, n));
        if lhs != rhs {
            return Err(Error::ChainMapViolation { degree: n });
        }
    }
    Ok(ChainMap { source, target, matrices })
}

/// A chain complex of finite free modules, with each degree embedded in the
/// chains of some set of cells.
#[derive(Debug, Clone)]
struct EmbeddedComplex<E> {
    cells: Vec<Vec<Hyperedge>>,
    embed: Vec<Matrix<E>>,
    boundaries: Vec<Matrix<E>>,
}

impl<E: Clone> EmbeddedComplex<E> {
    fn num_degrees(&self) -> usize {
        self.embed.len()
    }

    fn dim(&self, n: usize) -> usize {
        self.embed.get(n).map_or(0, Matrix::cols)
    }

    /// Full chain complex of a simplicial complex, padded with zeros to `degrees`.
    fn of_complex<R: Ring<Elem = E>>(ring: &R, k: &SimplicialComplex, degrees: usize) -> Self {
        let basis = GradedBasis::of(k);
        let cells: Vec<Vec<Hyperedge>> = (0..degrees).map(|n| basis.degree(n).to_vec()).collect();
        let embed = (0..degrees).map(|n| Matrix::identity(ring, basis.dim(n))).collect();
        let boundaries = (0..degrees).map(|n| boundary_in_basis(ring, &basis, n)).collect();
        EmbeddedComplex { cells, embed, boundaries }
    }

    /// `Inf_*(ℋ)` inside `C_*(Δℋ)`, padded with zeros to `degrees`.
    fn infimum<R: Ring<Elem = E>>(ring: &R, h: &Hypergraph, degrees: usize) -> Result<Self> {
        let inf = inf_complex(ring, h)?;
        let mut cells = Vec::with_capacity(degrees);
        let mut embed = Vec::with_capacity(degrees);
        let mut boundaries = Vec::with_capacity(degrees);
        for n in 0..degrees {
            cells.push(inf.ambient().degree(n).to_vec());
            if n < inf.num_degrees() {
                embed.push(inf.module(n).basis().clone());
                boundaries.push(inf.restricted_boundary(n).clone());
            } else {
                embed.push(Matrix::zeros(ring, 0, 0));
                let rows = if n == 0 { 0 } else { embed[n - 1].cols() };
                boundaries.push(Matrix::zeros(ring, rows, 0));
            }
        }
        Ok(EmbeddedComplex { cells, embed, boundaries })
    }

    fn boundary<R: Ring<Elem = E>>(&self, ring: &R, n: usize) -> Matrix<E> {
        match self.boundaries.get(n) {
            Some(b) => b.clone(),
            None => Matrix::zeros(ring, self.dim(n.saturating_sub(1)), 0),
        }
    }

    fn to_chain<R: Ring<Elem = E>>(&self, ring: &R, n: usize, v: &[E]) -> Chain<E> {
        self.embed[n]
            .mul_vec(ring, v)
            .into_iter()
            .zip(&self.cells[n])
            .filter(|(x, _)| !ring.is_zero(x))
            .map(|(x, c)| (c.clone(), x))
            .collect()
    }
}

/// A basis of `H_n` of an [`EmbeddedComplex`] and a way to read off coordinates.
#[derive(Debug, Clone)]
struct HomologyBasis<E> {
    reps: Matrix<E>,
    boundary_rank: usize,
    span: Submodule<E>,
    transform: Matrix<E>,
}

impl<E: Clone> HomologyBasis<E> {
    fn new<R: Ring<Elem = E>>(ring: &R, c: &EmbeddedComplex<E>, n: usize) -> Self {
        let cycles = kernel(ring, &c.boundary(ring, n));
        let bounds = hermite_basis(ring, &c.boundary(ring, n + 1));
        let mut acc = bounds.clone();
        let mut reps: Vec<Vec<E>> = Vec::new();
        let mut span = Submodule::span(ring, &acc);
        for z in cycles.columns() {
            if !span.contains(ring, &z) {
                acc = acc.hcat(&Matrix::from_columns(std::slice::from_ref(&z), z.len()));
                span = Submodule::span(ring, &acc);
                reps.push(z);
            }
        }
        let transform = column_echelon(ring, &acc).transform;
        HomologyBasis { reps: Matrix::from_columns(&reps, c.dim(n)), boundary_rank: bounds.cols(), span, transform }
    }

    fn rank(&self) -> usize {
        self.reps.cols()
    }

    /// Coordinates of the class of the cycle `z`; `None` if `z` is not a cycle.
    fn coordinates<R: Ring<Elem = E>>(&self, ring: &R, z: &[E]) -> Option<Vec<E>> {
        let c = self.span.coordinates(ring, z)?;
        let x = self.transform.mul_vec(ring, &c);
        Some(x[self.boundary_rank..].to_vec())
    }
}

/// Matrices of a map between homology groups, with the bases used on each side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyMap<E> {
    /// Degree `n` has shape `target_basis[n].len() × source_basis[n].len()`.
    pub matrices: Vec<Matrix<E>>,
    /// Cycle representatives of the source basis, as chains on cells.
    pub source_basis: Vec<Vec<Chain<E>>>,
    pub target_basis: Vec<Vec<Chain<E>>>,
}

impl<E: Clone> HomologyMap<E> {
    pub fn num_degrees(&self) -> usize {
        self.matrices.len()
    }

    pub fn source_bettis(&self) -> Vec<usize> {
        self.source_basis.iter().map(Vec::len).collect()
    }

    pub fn target_bettis(&self) -> Vec<usize> {
        self.target_basis.iter().map(Vec::len).collect()
    }

    /// Whether `self` is the identity on equal bases in every degree.
    pub fn is_identity<R: Ring<Elem = E>>(&self, ring: &R) -> bool
    where
        E: PartialEq,
    {
        self.source_basis == self.target_basis
            && self.matrices.iter().all(|m| m.rows() == m.cols() && *m == Matrix::identity(ring, m.rows()))
    }

    pub fn is_zero<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        self.matrices.iter().all(|m| m.is_zero(ring))
    }
}

/// Induces the homology map from chain-level matrices `maps[n] : src_n → tgt_n`.
fn homology_map<R: Ring>(
    ring: &R,
    src: &EmbeddedComplex<R::Elem>,
    tgt: &EmbeddedComplex<R::Elem>,
    maps: &[Matrix<R::Elem>],
) -> Result<HomologyMap<R::Elem>> {
    let degrees = src.num_degrees();
    let mut matrices = Vec::with_capacity(degrees);
    let mut source_basis = Vec::with_capacity(degrees);
    let mut target_basis = Vec::with_capacity(degrees);
    for (n, map) in maps.iter().enumerate().take(degrees) {
        let hs = HomologyBasis::new(ring, src, n);
        let ht = HomologyBasis::new(ring, tgt, n);
        let mut m = Matrix::zeros(ring, ht.rank(), hs.rank());
        for (j, z) in hs.reps.columns().iter().enumerate() {
            let image = map.mul_vec(ring, z);
            let coords = ht.coordinates(ring, &image).ok_or(Error::ChainMapViolation { degree: n })?;
            for (i, x) in coords.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        matrices.push(m);
        source_basis.push(hs.reps.columns().iter().map(|z| src.to_chain(ring, n, z)).collect());
        target_basis.push(ht.reps.columns().iter().map(|z| tgt.to_chain(ring, n, z)).collect());
    }
    Ok(HomologyMap { matrices, source_basis, target_basis })
}

/// Which homology an induced map acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InducedTarget {
    /// `(δφ)_* : H_*(δℋ) → H_*(δℋ′)`.
    Lower,
    /// `φ_* : H_*(ℋ) → H_*(ℋ′)` on embedded homology.
    Embedded,
    /// `(Δφ)_* : H_*(Δℋ) → H_*(Δℋ′)`.
    Assoc,
}

impl InducedTarget {
    pub const ALL: [InducedTarget; 3] = [InducedTarget::Lower, InducedTarget::Embedded, InducedTarget::Assoc];

    pub fn name(&self) -> &'static str {
        match self {
            InducedTarget::Lower => "lower",
            InducedTarget::Embedded => "embedded",
            InducedTarget::Assoc => "assoc",
        }
    }
}

impl fmt::Display for InducedTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn require_field<R: Ring>(ring: &R) -> Result<()> {
    if ring.is_field() {
        Ok(())
    } else {
        Err(Error::NonFieldCoefficients)
    }
}

fn num_degrees(h: &Hypergraph) -> usize {
    h.top_dimension().map_or(0, |t| t + 1)
}

/// Pads chain-map matrices to `degrees`, as zero maps between the given dimensions.
fn padded<R: Ring>(
    ring: &R,
    mut maps: Vec<Matrix<R::Elem>>,
    src: &EmbeddedComplex<R::Elem>,
    tgt: &EmbeddedComplex<R::Elem>,
) -> Vec<Matrix<R::Elem>> {
    for n in maps.len()..src.num_degrees() {
        maps.push(Matrix::zeros(ring, tgt.dim(n), src.dim(n)));
    }
    maps
}

fn induced_with_degrees<R: Ring>(
    ring: &R,
    phi: &HypergraphMorphism,
    which: InducedTarget,
    degrees: usize,
) -> Result<HomologyMap<R::Elem>> {
    require_field(ring)?;
    match which {
        InducedTarget::Lower | InducedTarget::Assoc => {
            let f = if which == InducedTarget::Lower { induced_lower_map(phi)? } else { induced_assoc_map(phi)? };
            let src = EmbeddedComplex::of_complex(ring, &f.source, degrees);
            let tgt = EmbeddedComplex::of_complex(ring, &f.target, degrees);
            let maps = padded(ring, chain_map(ring, &f)?.matrices, &src, &tgt);
            homology_map(ring, &src, &tgt, &maps)
        }
        InducedTarget::Embedded => {
            let f = induced_assoc_map(phi)?;
            let delta_map = chain_map(ring, &f)?;
            let src = EmbeddedComplex::infimum(ring, &phi.source, degrees)?;
            let tgt_inf = inf_complex(ring, &phi.target)?;
            let tgt = EmbeddedComplex::infimum(ring, &phi.target, degrees)?;
            let mut maps = Vec::with_capacity(degrees);
            for n in 0..degrees {
                if src.dim(n) == 0 || tgt.dim(n) == 0 {
                    maps.push(Matrix::zeros(ring, tgt.dim(n), src.dim(n)));
                    continue;
                }
                let image = delta_map.matrices[n].mul(ring, &src.embed[n]);
                let coords =
                    tgt_inf.module(n).coordinate_matrix(ring, &image).ok_or(Error::NotContained { degree: n })?;
                maps.push(coords);
            }
            homology_map(ring, &src, &tgt, &maps)
        }
    }
}

/// The map induced by `phi` on the chosen homology, over a field.
pub fn induced_homology_map<R: Ring>(
    ring: &R,
    phi: &HypergraphMorphism,
    which: InducedTarget,
) -> Result<HomologyMap<R::Elem>> {
    let degrees = num_degrees(&delta_closure(&phi.source)).max(num_degrees(&delta_closure(&phi.target)));
    induced_with_degrees(ring, phi, which, degrees)
}

fn lower_inclusion_with_degrees<R: Ring>(ring: &R, h: &Hypergraph, degrees: usize) -> Result<HomologyMap<R::Elem>> {
    require_field(ring)?;
    let lower = lower_complex(h);
    let src = EmbeddedComplex::of_complex(ring, &lower, degrees);
    let inf = inf_complex(ring, h)?;
    let tgt = EmbeddedComplex::infimum(ring, h, degrees)?;
    let delta_basis = GradedBasis::of(&delta_closure(h));
    let mut maps = Vec::with_capacity(degrees);
    for n in 0..degrees {
        if src.dim(n) == 0 {
            maps.push(Matrix::zeros(ring, tgt.dim(n), 0));
            continue;
        }
        let mut unit = Matrix::zeros(ring, delta_basis.dim(n), src.dim(n));
        for (j, c) in src.cells[n].iter().enumerate() {
            unit.set(delta_basis.position(c).expect("δℋ ⊆ Δℋ"), j, ring.one());
        }
        maps.push(inf.module(n).coordinate_matrix(ring, &unit).ok_or(Error::NotContained { degree: n })?);
    }
    homology_map(ring, &src, &tgt, &maps)
}

fn assoc_inclusion_with_degrees<R: Ring>(ring: &R, h: &Hypergraph, degrees: usize) -> Result<HomologyMap<R::Elem>> {
    require_field(ring)?;
    let src = EmbeddedComplex::infimum(ring, h, degrees)?;
    let tgt = EmbeddedComplex::of_complex(ring, &delta_closure(h), degrees);
    let maps = (0..degrees)
        .map(|n| if src.dim(n) == 0 { Matrix::zeros(ring, tgt.dim(n), 0) } else { src.embed[n].clone() })
        .collect::<Vec<_>>();
    homology_map(ring, &src, &tgt, &maps)
}

/// `(ι^δ)_* : H_*(δℋ) → H_*(ℋ)`.
pub fn lower_inclusion_map<R: Ring>(ring: &R, h: &Hypergraph) -> Result<HomologyMap<R::Elem>> {
    lower_inclusion_with_degrees(ring, h, num_degrees(&delta_closure(h)))
}

/// `(ι^Δ)_* : H_*(ℋ) → H_*(Δℋ)`.
pub fn assoc_inclusion_map<R: Ring>(ring: &R, h: &Hypergraph) -> Result<HomologyMap<R::Elem>> {
    assoc_inclusion_with_degrees(ring, h, num_degrees(&delta_closure(h)))
}

/// One of the two squares relating the lower, embedded and associated maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Square {
    /// `(ι′^δ)_* ∘ (δφ)_* = φ_* ∘ (ι^δ)_*`.
    Lower,
    /// `(ι′^Δ)_* ∘ φ_* = (Δφ)_* ∘ (ι^Δ)_*`.
    Assoc,
}

impl Square {
    pub fn name(&self) -> &'static str {
        match self {
            Square::Lower => "lower",
            Square::Assoc => "assoc",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramCheck {
    pub commutes: bool,
    /// First failing square and degree.
    pub failure: Option<(Square, usize)>,
}

/// Checks both squares of the diagram in every degree.
pub fn check_commuting_diagram<R: Ring>(ring: &R, phi: &HypergraphMorphism) -> Result<DiagramCheck> {
    let degrees = num_degrees(&delta_closure(&phi.source)).max(num_degrees(&delta_closure(&phi.target)));
    let lower = induced_with_degrees(ring, phi, InducedTarget::Lower, degrees)?;
    let embedded = induced_with_degrees(ring, phi, InducedTarget::Embedded, degrees)?;
    let assoc = induced_with_degrees(ring, phi, InducedTarget::Assoc, degrees)?;
    let i_lower = lower_inclusion_with_degrees(ring, &phi.source, degrees)?;
    let i_lower_t = lower_inclusion_with_degrees(ring, &phi.target, degrees)?;
    let i_assoc = assoc_inclusion_with_degrees(ring, &phi.source, degrees)?;
    let i_assoc_t = assoc_inclusion_with_degrees(ring, &phi.target, degrees)?;
    for n in 0..degrees {
        let l = i_lower_t.matrices[n].mul(ring, &lower.matrices[n]);
        let r = embedded.matrices[n].mul(ring, &i_lower.matrices[n]);
        if l != r {
            return Ok(DiagramCheck { commutes: false, failure: Some((Square::Lower, n)) });
        }
        let l = i_assoc_t.matrices[n].mul(ring, &embedded.matrices[n]);
        let r = assoc.matrices[n].mul(ring, &i_assoc.matrices[n]);
        if l != r {
            return Ok(DiagramCheck { commutes: false, failure: Some((Square::Assoc, n)) });
        }
    }
    Ok(DiagramCheck { commutes: true, failure: None })
}
