//! Dense exact linear algebra over the rationals.
//!
//! Row reduction runs on integer rows (denominators cleared per row) with
//! gcd-normalised fraction-free elimination, so numerators stay small even on
//! the factorially-sized evaluation matrices produced elsewhere in the crate.
//! Pivoting is deterministic (first nonzero in column order), and subspaces
//! are kept in reduced row-echelon form, which is a canonical representation:
//! two subspaces are equal iff their stored bases are identical.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

/// Errors from subspace operations on mismatched ambient spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    AmbientMismatch { expected: usize, got: usize },
}

impl core::fmt::Display for LinalgError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LinalgError::AmbientMismatch { expected, got } => {
                write!(f, "ambient dimension mismatch: expected {expected}, got {got}")
            }
        }
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from equal-length rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rat) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    /// Reduced row-echelon form and its pivot columns. The row space is
    /// preserved; pivots are 1 and are the only nonzero entries in their
    /// columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut basis = IntBasis::new(self.cols);
        for row in self.row_vecs() {
            basis.insert(scale_to_int(row));
        }
        basis.into_rref()
    }

    /// Rank over the rationals, exact.
    pub fn rank(&self) -> usize {
        let mut basis = IntBasis::new(self.cols);
        let mut rank = 0;
        for row in self.row_vecs() {
            if basis.insert(scale_to_int(row)) {
                rank += 1;
                if rank == self.cols {
                    break;
                }
            }
        }
        rank
    }

    /// The right null space: all `v` with `self · v = 0`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut free = Vec::new();
        let mut pivot_iter = pivots.iter().copied().peekable();
        for col in 0..self.cols {
            if pivot_iter.peek() == Some(&col) {
                pivot_iter.next();
            } else {
                free.push(col);
            }
        }
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(i, f).clone();
            }
            rows.push(v);
        }
        Subspace::from_rows(self.cols, rows)
    }
}

impl core::fmt::Display for Matrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A linear subspace of a coordinatised space, stored as a reduced
/// row-echelon basis. The representation is canonical, so `PartialEq` decides
/// subspace equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors, row-reduced.
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Rat>>) -> Self {
        let mut basis = IntBasis::new(ambient);
        for row in &rows {
            assert_eq!(row.len(), ambient, "row length != ambient dimension");
            basis.insert(scale_to_int(row));
        }
        let (b, pivots) = basis.into_rref();
        Subspace {
            ambient,
            basis: b,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivots
    }

    /// Exact membership test.
    pub fn contains(&self, v: &[Rat]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::AmbientMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let c = w[p].clone();
                for (wk, bk) in w.iter_mut().zip(self.basis.row(i)) {
                    *wk -= &c * bk;
                }
            }
        }
        Ok(w.iter().all(Zero::is_zero))
    }

    /// Inclusion `self ⊆ other`.
    pub fn leq(&self, other: &Subspace) -> Result<bool, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        if self.dim() > other.dim() {
            return Ok(false);
        }
        for row in self.basis.row_vecs() {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn from_int_basis(basis: IntBasis) -> Subspace {
        let ambient = basis.width();
        let (b, pivots) = basis.into_rref();
        Subspace {
            ambient,
            basis: b,
            pivots,
        }
    }

    /// Sum of subspaces.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        let rows = self
            .basis
            .row_vecs()
            .chain(other.basis.row_vecs())
            .map(<[Rat]>::to_vec)
            .collect();
        Ok(Subspace::from_rows(self.ambient, rows))
    }
}

/// Incremental integer row basis: the fraction-free elimination engine.
///
/// Rows are kept gcd-normalised with a positive leading entry, in echelon
/// order. Insertion reduces the incoming row against the basis and either
/// discards it (dependent) or adds it.
pub(crate) struct IntBasis {
    width: usize,
    rows: Vec<IntRow>,
}

struct IntRow {
    lead: usize,
    entries: Vec<BigInt>,
}

impl IntBasis {
    pub(crate) fn new(width: usize) -> Self {
        IntBasis {
            width,
            rows: Vec::new(),
        }
    }

    pub(crate) fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` against the basis; adds it if independent. Returns whether
    /// the dimension grew.
    pub(crate) fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        debug_assert_eq!(v.len(), self.width);
        let mut idx = 0;
        loop {
            let lead = match leading_index(&v) {
                Some(l) => l,
                None => return false,
            };
            // Advance to the first basis row whose lead is >= v's lead.
            while idx < self.rows.len() && self.rows[idx].lead < lead {
                idx += 1;
            }
            match self.rows.get(idx) {
                Some(row) if row.lead == lead => {
                    cross_eliminate(&mut v, &row.entries, lead);
                    normalize(&mut v);
                }
                _ => {
                    normalize(&mut v);
                    self.rows.insert(idx, IntRow { lead, entries: v });
                    return true;
                }
            }
        }
    }

    /// Back-substitutes to full reduction and converts to a rational RREF
    /// matrix with unit pivots.
    pub(crate) fn into_rref(mut self) -> (Matrix, Vec<usize>) {
        for i in (0..self.rows.len()).rev() {
            for j in i + 1..self.rows.len() {
                let lead_j = self.rows[j].lead;
                if !self.rows[i].entries[lead_j].is_zero() {
                    let (head, tail) = self.rows.split_at_mut(j);
                    cross_eliminate(&mut head[i].entries, &tail[0].entries, lead_j);
                    normalize(&mut head[i].entries);
                }
            }
        }
        let pivots: Vec<usize> = self.rows.iter().map(|r| r.lead).collect();
        let mut data = Vec::with_capacity(self.rows.len() * self.width);
        for row in &self.rows {
            let pivot = row.entries[row.lead].clone();
            for e in &row.entries {
                data.push(Rat::new(e.clone(), pivot.clone()));
            }
        }
        (
            Matrix {
                rows: self.rows.len(),
                cols: self.width,
                data,
            },
            pivots,
        )
    }
}

/// `v := p·v − c·b` where `p` is `b`'s leading entry and `c = v[lead]`,
/// with the common gcd of `p` and `c` divided out first.
fn cross_eliminate(v: &mut [BigInt], b: &[BigInt], lead: usize) {
    let p = &b[lead];
    let c = &v[lead];
    let g = p.gcd(c);
    let pf = p / &g;
    let cf = c / &g;
    for (vk, bk) in v.iter_mut().zip(b) {
        *vk = &*vk * &pf - bk * &cf;
    }
}

fn leading_index(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|e| !e.is_zero())
}

/// Divides by the gcd of all entries and makes the leading entry positive.
fn normalize(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for e in v.iter() {
        if !e.is_zero() {
            g = g.gcd(e);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    let lead_negative = v
        .iter()
        .find(|e| !e.is_zero())
        .map(Signed::is_negative)
        .unwrap_or(false);
    if lead_negative {
        g = -g;
    }
    if !g.is_one() {
        for e in v.iter_mut() {
            *e = &*e / &g;
        }
    }
}

/// Clears denominators: multiplies the row by the lcm of its denominators.
pub(crate) fn scale_to_int(row: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for e in row {
        lcm = lcm.lcm(e.denom());
    }
    row.iter()
        .map(|e| e.numer() * (&lcm / e.denom()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_dependent_rows() {
        let (r, pivots) = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, m(&[&[1, 2]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_zero_matrix() {
        let (r, pivots) = m(&[&[0, 0], &[0, 0]]).rref();
        assert_eq!(r.rows(), 0);
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_diagonal_normalises_pivots() {
        let (r, pivots) = m(&[&[2, 0], &[0, 3]]).rref();
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_with_fractions() {
        let mat = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(3, 2), rat(5, 7)],
        ]);
        let (r, pivots) = mat.rref();
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 1]]).rank(), 1);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let k = Matrix::identity(2).kernel();
        assert_eq!(k.dim(), 0);
        assert_eq!(k, Subspace::zero(2));
    }

    #[test]
    fn kernel_of_row() {
        let k = m(&[&[1, 1]]).kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[rat_int(1), rat_int(-1)]).unwrap());
        assert!(!k.contains(&[rat_int(1), rat_int(1)]).unwrap());
    }

    #[test]
    fn kernel_of_empty_matrix_is_full() {
        let k = Matrix::zero(0, 3).kernel();
        assert_eq!(k.dim(), 3);
    }

    #[test]
    fn subspace_basics() {
        let e1 = Subspace::from_rows(2, vec![vec![rat_int(1), rat_int(0)]]);
        let e2 = Subspace::from_rows(2, vec![vec![rat_int(0), rat_int(1)]]);
        assert!(Subspace::zero(2).leq(&e1).unwrap());
        assert!(!e1.contains(&[rat_int(1), rat_int(1)]).unwrap());
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(2));
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let e1 = Subspace::from_rows(2, vec![vec![rat_int(1), rat_int(0)]]);
        let bad = Subspace::zero(3);
        assert!(matches!(
            e1.leq(&bad),
            Err(LinalgError::AmbientMismatch { expected: 2, got: 3 })
        ));
        assert!(e1.contains(&[rat_int(1)]).is_err());
    }

    #[test]
    fn rank_nullity_on_a_rectangular_matrix() {
        let mat = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        assert_eq!(mat.rank() + mat.kernel().dim(), mat.cols());
    }
}
