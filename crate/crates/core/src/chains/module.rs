//! Submodules of `R^n` held in canonical form.

use super::matrix::Matrix;
use super::normal_form::{column_echelon, kernel};
use super::ring::Ring;

/// A submodule of `R^ambient`, stored as its canonical echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule<E> {
    basis: Matrix<E>,
    pivot_rows: Vec<usize>,
}

impl<E: Clone> Submodule<E> {
    /// The submodule spanned by the columns of `generators`.
    pub fn span<R: Ring<Elem = E>>(ring: &R, generators: &Matrix<E>) -> Self {
        let ech = column_echelon(ring, generators);
        Submodule { basis: ech.basis(), pivot_rows: ech.pivot_rows }
    }

    pub fn zero<R: Ring<Elem = E>>(ring: &R, ambient: usize) -> Self {
        Submodule { basis: Matrix::zeros(ring, ambient, 0), pivot_rows: Vec::new() }
    }

    pub fn full<R: Ring<Elem = E>>(ring: &R, ambient: usize) -> Self {
        Submodule { basis: Matrix::identity(ring, ambient), pivot_rows: (0..ambient).collect() }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate<R: Ring<Elem = E>>(ring: &R, ambient: usize, coords: &[usize]) -> Self {
        let mut c = coords.to_vec();
        c.sort_unstable();
        c.dedup();
        let mut m = Matrix::zeros(ring, ambient, c.len());
        for (j, &i) in c.iter().enumerate() {
            m.set(i, j, ring.one());
        }
        Submodule { basis: m, pivot_rows: c }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Canonical basis, one column per generator.
    pub fn basis(&self) -> &Matrix<E> {
        &self.basis
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` is outside.
    pub fn coordinates<R: Ring<Elem = E>>(&self, ring: &R, v: &[E]) -> Option<Vec<E>> {
        assert_eq!(v.len(), self.ambient_dim());
        let mut residual = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (k, &r) in self.pivot_rows.iter().enumerate() {
            // Rows above this pivot are final; anything left there is outside the span.
            if residual[..r].iter().any(|x| !ring.is_zero(x)) {
                return None;
            }
            let c = ring.exact_div(&residual[r], self.basis.get(r, k))?;
            if !ring.is_zero(&c) {
                for (i, x) in residual.iter_mut().enumerate().skip(r) {
                    let b = self.basis.get(i, k);
                    if !ring.is_zero(b) {
                        *x = ring.sub(x, &ring.mul(&c, b));
                    }
                }
            }
            coords.push(c);
        }
        residual.iter().all(|x| ring.is_zero(x)).then_some(coords)
    }

    pub fn contains<R: Ring<Elem = E>>(&self, ring: &R, v: &[E]) -> bool {
        self.coordinates(ring, v).is_some()
    }

    pub fn contains_module<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> bool {
        other.basis.columns().iter().all(|c| self.contains(ring, c))
    }

    /// Coordinates of every column of `m`, as the columns of the result.
    pub fn coordinate_matrix<R: Ring<Elem = E>>(&self, ring: &R, m: &Matrix<E>) -> Option<Matrix<E>> {
        let cols = m.columns().iter().map(|c| self.coordinates(ring, c)).collect::<Option<Vec<_>>>()?;
        Some(Matrix::from_columns(&cols, self.rank()))
    }
}

/// `span(a) + span(b)`.
pub fn module_sum<R: Ring>(ring: &R, a: &Submodule<R::Elem>, b: &Submodule<R::Elem>) -> Submodule<R::Elem> {
    assert_eq!(a.ambient_dim(), b.ambient_dim(), "module_sum ambient mismatch");
    Submodule::span(ring, &a.basis.hcat(&b.basis))
}

/// `span(a) ∩ span(b)`, read off the kernel of `[A | -B]`.
pub fn module_intersection<R: Ring>(ring: &R, a: &Submodule<R::Elem>, b: &Submodule<R::Elem>) -> Submodule<R::Elem> {
    assert_eq!(a.ambient_dim(), b.ambient_dim(), "module_intersection ambient mismatch");
    let k = kernel(ring, &a.basis.hcat(&b.basis.neg(ring)));
    let x = k.select_rows(&(0..a.rank()).collect::<Vec<_>>());
    Submodule::span(ring, &a.basis.mul(ring, &x))
}

/// `{x ∈ R^source : map·x ∈ span(target)}`, read off the kernel of `[M | -T]`.
pub fn preimage_module<R: Ring>(ring: &R, map: &Matrix<R::Elem>, target: &Submodule<R::Elem>) -> Submodule<R::Elem> {
    assert_eq!(map.rows(), target.ambient_dim(), "preimage_module dimension mismatch");
    let k = kernel(ring, &map.hcat(&target.basis.neg(ring)));
    let x = k.select_rows(&(0..map.cols()).collect::<Vec<_>>());
    Submodule::span(ring, &x)
}

/// `map(span(source))`.
pub fn image_module<R: Ring>(ring: &R, map: &Matrix<R::Elem>, source: &Submodule<R::Elem>) -> Submodule<R::Elem> {
    Submodule::span(ring, &map.mul(ring, &source.basis))
}
