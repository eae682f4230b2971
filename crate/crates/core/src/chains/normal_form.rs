//! Column echelon (Hermite) form, kernels and Smith normal form.
//!
//! Over ℤ the column echelon form computed here is the column Hermite normal
//! form: pivots are positive and entries to the left of a pivot lie in
//! `[0, pivot)`. Over a field it is the reduced column echelon form. Either way
//! the non-zero columns are a canonical basis of the column span, so equality
//! of submodules is equality of matrices.

use num_bigint::BigInt;

use super::matrix::Matrix;
use super::ring::Ring;

/// `matrix · transform = form`, with `transform` invertible.
#[derive(Debug, Clone)]
pub struct ColumnEchelon<E> {
    pub form: Matrix<E>,
    pub transform: Matrix<E>,
    /// Pivot row of each of the first `rank` columns of `form`, strictly increasing.
    pub pivot_rows: Vec<usize>,
}

impl<E: Clone> ColumnEchelon<E> {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    /// The non-zero columns of the form.
    pub fn basis(&self) -> Matrix<E> {
        self.form.select_columns(&(0..self.rank()).collect::<Vec<_>>())
    }

    /// Columns of the transform spanning the kernel of the input.
    pub fn kernel(&self) -> Matrix<E> {
        self.transform.select_columns(&(self.rank()..self.transform.cols()).collect::<Vec<_>>())
    }
}

pub fn column_echelon<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> ColumnEchelon<R::Elem> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut e = m.clone();
    let mut t = Matrix::identity(ring, cols);
    let mut pivot_rows = Vec::new();
    let mut k = 0;
    for r in 0..rows {
        if k == cols {
            break;
        }
        let mut has_pivot = false;
        loop {
            let best = (k..cols)
                .filter(|&j| !ring.is_zero(e.get(r, j)))
                .min_by(|&a, &b| ring.norm(e.get(r, a)).cmp(&ring.norm(e.get(r, b))).then(a.cmp(&b)));
            let Some(best) = best else { break };
            e.swap_cols(k, best);
            t.swap_cols(k, best);
            let mut cleared = true;
            for j in k + 1..cols {
                if ring.is_zero(e.get(r, j)) {
                    continue;
                }
                let q = ring.neg(&ring.quo(e.get(r, j), e.get(r, k)));
                e.add_col_multiple(ring, j, &q, k);
                t.add_col_multiple(ring, j, &q, k);
                cleared &= ring.is_zero(e.get(r, j));
            }
            if cleared {
                has_pivot = true;
                break;
            }
        }
        if !has_pivot {
            continue;
        }
        let u = ring.normalizing_unit(e.get(r, k));
        e.scale_col(ring, k, &u);
        t.scale_col(ring, k, &u);
        for j in 0..k {
            if ring.is_zero(e.get(r, j)) {
                continue;
            }
            let q = ring.neg(&ring.quo(e.get(r, j), e.get(r, k)));
            e.add_col_multiple(ring, j, &q, k);
            t.add_col_multiple(ring, j, &q, k);
        }
        pivot_rows.push(r);
        k += 1;
    }
    ColumnEchelon { form: e, transform: t, pivot_rows }
}

/// Canonical basis of the column span (column HNF over ℤ), zero columns removed.
pub fn hermite_basis<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    column_echelon(ring, m).basis()
}

/// A basis of `{x : m·x = 0}` (a lattice basis over ℤ).
pub fn kernel<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    column_echelon(ring, m).kernel()
}

pub fn rank<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> usize {
    column_echelon(ring, m).rank()
}

/// `u · d · v = input` with `u`, `v` invertible and `d` diagonal, each
/// diagonal entry dividing the next.
#[derive(Debug, Clone)]
pub struct Smith<E> {
    pub u: Matrix<E>,
    pub d: Matrix<E>,
    pub v: Matrix<E>,
}

impl<E: Clone> Smith<E> {
    pub fn invariant_factors<R: Ring<Elem = E>>(&self, ring: &R) -> Vec<E> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !ring.is_zero(x))
            .collect()
    }
}

pub fn smith_normal_form<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Smith<R::Elem> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = Matrix::identity(ring, rows);
    let mut v = Matrix::identity(ring, cols);

    // Row op on d (row_i += c·row_j) is undone on u by col_j -= c·col_i;
    // column op on d (col_j += c·col_i) is undone on v by row_i -= c·row_j.
    let row_add = |d: &mut Matrix<R::Elem>, u: &mut Matrix<R::Elem>, i: usize, c: &R::Elem, j: usize| {
        d.add_row_multiple(ring, i, c, j);
        u.add_col_multiple(ring, j, &ring.neg(c), i);
    };
    let col_add = |d: &mut Matrix<R::Elem>, v: &mut Matrix<R::Elem>, j: usize, c: &R::Elem, i: usize| {
        d.add_col_multiple(ring, j, c, i);
        v.add_row_multiple(ring, i, &ring.neg(c), j);
    };

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_entry(ring, &d, t..rows, t..cols) else { break };
        d.swap_rows(t, pi);
        u.swap_cols(t, pi);
        d.swap_cols(t, pj);
        v.swap_rows(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !ring.is_zero(d.get(i, t)) {
                    let q = ring.neg(&ring.quo(d.get(i, t), d.get(t, t)));
                    row_add(&mut d, &mut u, i, &q, t);
                    dirty |= !ring.is_zero(d.get(i, t));
                }
            }
            for j in t + 1..cols {
                if !ring.is_zero(d.get(t, j)) {
                    let q = ring.neg(&ring.quo(d.get(t, j), d.get(t, t)));
                    col_add(&mut d, &mut v, j, &q, t);
                    dirty |= !ring.is_zero(d.get(t, j));
                }
            }
            if dirty {
                // A smaller remainder appeared in row or column t; move it to the pivot.
                let (pi, pj) = min_in_cross(ring, &d, t);
                d.swap_rows(t, pi);
                u.swap_cols(t, pi);
                d.swap_cols(t, pj);
                v.swap_rows(t, pj);
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| ring.exact_div(d.get(i, j), d.get(t, t)).is_none());
            match offender {
                Some((i, _)) => {
                    let one = ring.one();
                    row_add(&mut d, &mut u, t, &one, i);
                }
                None => break,
            }
        }
        let w = ring.normalizing_unit(d.get(t, t));
        d.scale_row(ring, t, &w);
        u.scale_col(ring, t, &ring.unit_inverse(&w));
    }
    Smith { u, d, v }
}

fn min_entry<R: Ring>(
    ring: &R,
    d: &Matrix<R::Elem>,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    rows.flat_map(|i| cols.clone().map(move |j| (i, j)))
        .filter(|&(i, j)| !ring.is_zero(d.get(i, j)))
        .min_by(|&a, &b| ring.norm(d.get(a.0, a.1)).cmp(&ring.norm(d.get(b.0, b.1))).then(a.cmp(&b)))
}

fn min_in_cross<R: Ring>(ring: &R, d: &Matrix<R::Elem>, t: usize) -> (usize, usize) {
    let col = (t..d.rows()).map(|i| (i, t));
    let row = (t + 1..d.cols()).map(|j| (t, j));
    col.chain(row)
        .filter(|&(i, j)| !ring.is_zero(d.get(i, j)))
        .min_by(|&a, &b| ring.norm(d.get(a.0, a.1)).cmp(&ring.norm(d.get(b.0, b.1))).then(a.cmp(&b)))
        .expect("pivot cross is non-zero")
}

/// Invariant factors of an integer matrix as integers; `None` over a field.
pub fn integer_invariant_factors<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Option<Vec<BigInt>> {
    if ring.is_field() {
        return None;
    }
    let s = smith_normal_form(ring, m);
    s.invariant_factors(ring).iter().map(|x| ring.as_integer(x)).collect()
}
