//! Simplicial chains on Δℋ, the infimum and supremum sub-chain complexes
//! determined by a hypergraph, and their homology.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::One;

use super::matrix::Matrix;
use super::module::{image_module, module_intersection, module_sum, preimage_module, Submodule};
use super::normal_form::{integer_invariant_factors, rank};
use super::ring::{CoeffSpec, Ring};
use crate::error::{Error, Result};
use crate::hypercore::{delta_closure, lower_complex, Hyperedge, Hypergraph, SimplicialComplex};

/// A chain as a sparse map from cells to coefficients.
pub type Chain<E> = BTreeMap<Hyperedge, E>;

/// Cells of a hypergraph grouped by dimension, each degree in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    degrees: Vec<Vec<Hyperedge>>,
    index: HashMap<Hyperedge, usize>,
}

impl GradedBasis {
    pub fn of(h: &Hypergraph) -> Self {
        let mut degrees: Vec<Vec<Hyperedge>> = vec![Vec::new(); h.top_dimension().map_or(0, |t| t + 1)];
        let mut index = HashMap::new();
        for e in h.edges() {
            let d = &mut degrees[e.dimension()];
            index.insert(e.clone(), d.len());
            d.push(e.clone());
        }
        GradedBasis { degrees, index }
    }

    /// Number of tracked degrees (top dimension + 1, or 0 when empty).
    pub fn num_degrees(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, n: usize) -> &[Hyperedge] {
        self.degrees.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, n: usize) -> usize {
        self.degree(n).len()
    }

    /// Position of `e` inside its degree.
    pub fn position(&self, e: &Hyperedge) -> Option<usize> {
        self.index.get(e).copied()
    }
}

/// Coefficient of `alpha` in `∂beta`.
pub fn incidence(beta: &Hyperedge, alpha: &Hyperedge) -> i64 {
    if !alpha.is_facet_of(beta) {
        return 0;
    }
    let omitted = beta
        .vertices()
        .iter()
        .position(|v| alpha.vertices().binary_search(v).is_err())
        .expect("facet omits one vertex");
    if omitted % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `∂σ` as a chain.
pub fn boundary_chain<R: Ring>(ring: &R, sigma: &Hyperedge) -> Chain<R::Elem> {
    sigma
        .facets()
        .into_iter()
        .map(|f| {
            let c = incidence(sigma, &f);
            (f, ring.from_i64(c))
        })
        .collect()
}

/// Matrix of `∂_n : C_n → C_{n-1}` of a simplicial complex in its canonical bases.
pub fn boundary_matrix<R: Ring>(ring: &R, complex: &SimplicialComplex, n: usize) -> Matrix<R::Elem> {
    boundary_in_basis(ring, &GradedBasis::of(complex), n)
}

/// `∂_n` between degrees of a downward-closed graded basis.
pub(crate) fn boundary_in_basis<R: Ring>(ring: &R, basis: &GradedBasis, n: usize) -> Matrix<R::Elem> {
    let rows = if n == 0 { 0 } else { basis.dim(n - 1) };
    let mut m = Matrix::zeros(ring, rows, basis.dim(n));
    if n == 0 {
        return m;
    }
    for (j, sigma) in basis.degree(n).iter().enumerate() {
        for f in sigma.facets() {
            let i = basis.position(&f).expect("basis is closed under faces");
            m.set(i, j, ring.from_i64(incidence(sigma, &f)));
        }
    }
    m
}

/// A graded submodule of `C_*(Δℋ)` closed under `∂`, with the boundary
/// expressed in the submodule bases.
#[derive(Debug, Clone)]
pub struct SubChainComplex<R: Ring> {
    ring: R,
    ambient: GradedBasis,
    modules: Vec<Submodule<R::Elem>>,
    boundaries: Vec<Matrix<R::Elem>>,
}

impl<R: Ring> SubChainComplex<R> {
    /// Fails with [`Error::MalformedSubcomplex`] if `∂` leaves the given modules.
    pub fn new(ring: R, ambient: GradedBasis, modules: Vec<Submodule<R::Elem>>) -> Result<Self> {
        assert_eq!(modules.len(), ambient.num_degrees());
        let mut boundaries = Vec::with_capacity(modules.len());
        for n in 0..modules.len() {
            if n == 0 {
                boundaries.push(Matrix::zeros(&ring, 0, modules[0].rank()));
                continue;
            }
            let d = boundary_in_basis(&ring, &ambient, n);
            let image = d.mul(&ring, modules[n].basis());
            let restricted =
                modules[n - 1].coordinate_matrix(&ring, &image).ok_or(Error::MalformedSubcomplex { degree: n })?;
            boundaries.push(restricted);
        }
        Ok(SubChainComplex { ring, ambient, modules, boundaries })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn ambient(&self) -> &GradedBasis {
        &self.ambient
    }

    pub fn num_degrees(&self) -> usize {
        self.modules.len()
    }

    pub fn module(&self, n: usize) -> &Submodule<R::Elem> {
        &self.modules[n]
    }

    /// Matrix of `∂_n` from the degree-n basis to the degree-(n−1) basis.
    pub fn restricted_boundary(&self, n: usize) -> &Matrix<R::Elem> {
        &self.boundaries[n]
    }

    /// Basis vectors of degree `n` as sparse combinations of cells.
    pub fn basis_chains(&self, n: usize) -> Vec<Chain<R::Elem>> {
        let cells = self.ambient.degree(n);
        self.modules[n]
            .basis()
            .columns()
            .into_iter()
            .map(|col| {
                col.into_iter()
                    .enumerate()
                    .filter(|(_, x)| !self.ring.is_zero(x))
                    .map(|(i, x)| (cells[i].clone(), x))
                    .collect()
            })
            .collect()
    }
}

fn coordinate_modules<R: Ring>(ring: &R, ambient: &GradedBasis, cells: &Hypergraph) -> Vec<Submodule<R::Elem>> {
    (0..ambient.num_degrees())
        .map(|n| {
            let coords: Vec<usize> =
                cells.edges_of_dim(n).map(|e| ambient.position(e).expect("cell in ambient")).collect();
            Submodule::coordinate(ring, ambient.dim(n), &coords)
        })
        .collect()
}

/// `Inf_n = R(ℋ)_n ∩ ∂_n^{-1}(R(ℋ)_{n-1})`.
pub fn inf_complex<R: Ring>(ring: &R, h: &Hypergraph) -> Result<SubChainComplex<R>> {
    let ambient = GradedBasis::of(&delta_closure(h));
    let r = coordinate_modules(ring, &ambient, h);
    let mut modules = Vec::with_capacity(r.len());
    for n in 0..r.len() {
        if n == 0 {
            modules.push(r[0].clone());
            continue;
        }
        let d = boundary_in_basis(ring, &ambient, n);
        let pre = preimage_module(ring, &d, &r[n - 1]);
        modules.push(module_intersection(ring, &r[n], &pre));
    }
    SubChainComplex::new(ring.clone(), ambient, modules)
}

/// `Sup_n = R(ℋ)_n + ∂_{n+1}(R(ℋ)_{n+1})`.
pub fn sup_complex<R: Ring>(ring: &R, h: &Hypergraph) -> Result<SubChainComplex<R>> {
    let ambient = GradedBasis::of(&delta_closure(h));
    let r = coordinate_modules(ring, &ambient, h);
    let top = r.len();
    let mut modules = Vec::with_capacity(top);
    for n in 0..top {
        if n + 1 == top {
            modules.push(r[n].clone());
            continue;
        }
        let d = boundary_in_basis(ring, &ambient, n + 1);
        modules.push(module_sum(ring, &r[n], &image_module(ring, &d, &r[n + 1])));
    }
    SubChainComplex::new(ring.clone(), ambient, modules)
}

/// `C_*(cells)` inside `C_*(Δℋ)`, for a simplicial `cells ⊆ Δℋ` such as δℋ.
pub fn cells_complex<R: Ring>(
    ring: &R,
    delta: &SimplicialComplex,
    cells: &SimplicialComplex,
) -> Result<SubChainComplex<R>> {
    let ambient = GradedBasis::of(delta);
    let modules = coordinate_modules(ring, &ambient, cells);
    SubChainComplex::new(ring.clone(), ambient, modules)
}

/// Homology in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeHomology {
    pub betti: usize,
    /// Invariant factors greater than one (ℤ only).
    pub torsion: Vec<BigInt>,
}

/// Homology in degrees `0..=dim Δℋ`; all higher degrees vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    pub coeff: CoeffSpec,
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyResult {
    pub fn bettis(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }

    /// Betti number in degree `n` (zero above the tracked range).
    pub fn betti(&self, n: usize) -> usize {
        self.degrees.get(n).map_or(0, |d| d.betti)
    }

    pub fn torsion(&self, n: usize) -> &[BigInt] {
        self.degrees.get(n).map_or(&[], |d| d.torsion.as_slice())
    }
}

pub fn subcomplex_homology<R: Ring>(scc: &SubChainComplex<R>) -> Result<HomologyResult> {
    let ring = scc.ring();
    let top = scc.num_degrees();
    for n in 1..top {
        if n >= 2 && !scc.boundaries[n - 1].mul(ring, &scc.boundaries[n]).is_zero(ring) {
            return Err(Error::MalformedSubcomplex { degree: n });
        }
    }
    let ranks: Vec<usize> = (0..top).map(|n| rank(ring, &scc.boundaries[n])).collect();
    let degrees = (0..top)
        .map(|n| {
            let higher = ranks.get(n + 1).copied().unwrap_or(0);
            let betti = scc.modules[n].rank() - ranks[n] - higher;
            let torsion = if n + 1 < top {
                integer_invariant_factors(ring, &scc.boundaries[n + 1])
                    .unwrap_or_default()
                    .into_iter()
                    .filter(|x| !x.is_one())
                    .collect()
            } else {
                Vec::new()
            };
            DegreeHomology { betti, torsion }
        })
        .collect();
    Ok(HomologyResult { coeff: ring.spec(), degrees })
}

/// Embedded homology, computed on Inf and cross-checked against Sup.
pub fn embedded_homology(h: &Hypergraph, coeff: CoeffSpec) -> Result<HomologyResult> {
    crate::with_ring!(coeff, |ring| embedded_homology_in(&ring, h))
}

pub fn embedded_homology_in<R: Ring>(ring: &R, h: &Hypergraph) -> Result<HomologyResult> {
    let inf = subcomplex_homology(&inf_complex(ring, h)?)?;
    let sup = subcomplex_homology(&sup_complex(ring, h)?)?;
    if let Some(degree) = (0..inf.degrees.len()).find(|&n| inf.degrees[n] != sup.degrees[n]) {
        return Err(Error::InconsistentHomology { degree });
    }
    Ok(inf)
}

/// Which chain complex a homology computation runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomologyTarget {
    Embedded,
    Assoc,
    Lower,
    Inf,
    Sup,
}

pub fn homology(h: &Hypergraph, coeff: CoeffSpec, which: HomologyTarget) -> Result<HomologyResult> {
    crate::with_ring!(coeff, |ring| homology_in(&ring, h, which))
}

pub fn homology_in<R: Ring>(ring: &R, h: &Hypergraph, which: HomologyTarget) -> Result<HomologyResult> {
    match which {
        HomologyTarget::Embedded => embedded_homology_in(ring, h),
        HomologyTarget::Inf => subcomplex_homology(&inf_complex(ring, h)?),
        HomologyTarget::Sup => subcomplex_homology(&sup_complex(ring, h)?),
        HomologyTarget::Assoc => {
            let delta = delta_closure(h);
            subcomplex_homology(&cells_complex(ring, &delta, &delta)?)
        }
        HomologyTarget::Lower => {
            let delta = delta_closure(h);
            subcomplex_homology(&cells_complex(ring, &delta, &lower_complex(h))?)
        }
    }
}

/// Keeps the coefficients of cells in `sub` and drops the rest.
pub fn projection<E: Clone>(ambient: &Hypergraph, sub: &Hypergraph, chain: &Chain<E>) -> Result<Chain<E>> {
    if let Some(e) = sub.edges().find(|e| !ambient.contains(e)) {
        return Err(Error::NotSubhypergraph(sub.label(e)));
    }
    if let Some(e) = chain.keys().find(|e| !ambient.contains(e)) {
        return Err(Error::NotSubhypergraph(ambient.label(e)));
    }
    Ok(chain.iter().filter(|(e, _)| sub.contains(e)).map(|(e, c)| (e.clone(), c.clone())).collect())
}

/// Matrix of the projection from the span of `from` onto the span of `to`.
pub fn projection_matrix<R: Ring>(ring: &R, from: &[Hyperedge], to: &[Hyperedge]) -> Matrix<R::Elem> {
    inclusion_matrix(ring, to, from).transpose()
}

/// Matrix of the inclusion of the span of `from` into the span of `to`.
pub fn inclusion_matrix<R: Ring>(ring: &R, from: &[Hyperedge], to: &[Hyperedge]) -> Matrix<R::Elem> {
    let pos: HashMap<&Hyperedge, usize> = to.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut m = Matrix::zeros(ring, to.len(), from.len());
    for (j, e) in from.iter().enumerate() {
        if let Some(&i) = pos.get(e) {
            m.set(i, j, ring.one());
        }
    }
    m
}
