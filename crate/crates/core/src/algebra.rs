//! Finite-dimensional unital algebras with a trace functional, given by
//! structure constants, and their structural analyses: trace space,
//! degeneracy of the trace form, Jacobson radical, trace-ideals, quotients
//! and trace-homomorphism checking.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::linalg::{Matrix, Subspace};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    ZeroDimension,
    BadShape(String),
    NotAssociative { i: usize, j: usize, k: usize },
    NotUnital { i: usize },
    TraceNotSymmetric { i: usize, j: usize },
    DimensionMismatch { expected: usize, got: usize },
    NotAnIdeal,
    TraceNotVanishingOnIdeal,
    MapShapeMismatch,
}

impl core::fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            AlgebraError::ZeroDimension => write!(f, "algebra dimension must be positive"),
            AlgebraError::BadShape(msg) => write!(f, "malformed structure data: {msg}"),
            AlgebraError::NotAssociative { i, j, k } => {
                write!(f, "(b{i}·b{j})·b{k} differs from b{i}·(b{j}·b{k})")
            }
            AlgebraError::NotUnital { i } => write!(f, "unit fails on basis element b{i}"),
            AlgebraError::TraceNotSymmetric { i, j } => {
                write!(f, "tr(b{i}·b{j}) differs from tr(b{j}·b{i})")
            }
            AlgebraError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            AlgebraError::NotAnIdeal => write!(f, "subspace is not a two-sided ideal"),
            AlgebraError::TraceNotVanishingOnIdeal => {
                write!(f, "trace does not vanish on the ideal")
            }
            AlgebraError::MapShapeMismatch => write!(f, "map shape does not match the algebras"),
        }
    }
}

/// A finite-dimensional unital associative algebra over the rationals with a
/// symmetric trace functional. `mult[(i·dim + j)·dim + k]` is the coefficient
/// of `b_k` in `b_i · b_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceAlgebra {
    dim: usize,
    basis_labels: Vec<String>,
    mult: Vec<Rat>,
    unit: Vec<Rat>,
    trace: Vec<Rat>,
}

impl TraceAlgebra {
    /// Validates associativity, the unit law and trace symmetry over all
    /// basis tuples before accepting the data.
    pub fn new(
        basis_labels: Vec<String>,
        mult: Vec<Rat>,
        unit: Vec<Rat>,
        trace: Vec<Rat>,
    ) -> Result<Self, AlgebraError> {
        let dim = basis_labels.len();
        if mult.len() != dim * dim * dim {
            return Err(AlgebraError::BadShape(format!(
                "mult has {} entries, expected {}",
                mult.len(),
                dim * dim * dim
            )));
        }
        if unit.len() != dim || trace.len() != dim {
            return Err(AlgebraError::BadShape(format!(
                "unit/trace must have length {dim}"
            )));
        }
        let a = TraceAlgebra {
            dim,
            basis_labels,
            mult,
            unit,
            trace,
        };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul(&self.product_row(i, j), &self.basis_element(k));
                    let right = self.mul(&self.basis_element(i), &self.product_row(j, k));
                    if left != right {
                        return Err(AlgebraError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            let e = self.basis_element(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(AlgebraError::NotUnital { i });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.trace_of(&self.product_row(i, j)) != self.trace_of(&self.product_row(j, i))
                {
                    return Err(AlgebraError::TraceNotSymmetric { i, j });
                }
            }
        }
        Ok(())
    }

    /// `M_n` with trace `α · (usual trace)`.
    pub fn full_matrix(n: usize, alpha: &Rat) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        let dim = n * n;
        let idx = |r: usize, c: usize| r * n + c;
        let mut mult = vec![Rat::zero(); dim * dim * dim];
        for r in 0..n {
            for c in 0..n {
                for t in 0..n {
                    // e_rc · e_ct = e_rt
                    mult[(idx(r, c) * dim + idx(c, t)) * dim + idx(r, t)] = Rat::one();
                }
            }
        }
        let mut unit = vec![Rat::zero(); dim];
        let mut trace = vec![Rat::zero(); dim];
        let mut labels = vec![String::new(); dim];
        for r in 0..n {
            unit[idx(r, r)] = Rat::one();
            trace[idx(r, r)] = alpha.clone();
        }
        for r in 0..n {
            for c in 0..n {
                labels[idx(r, c)] = format!("e{}{}", r + 1, c + 1);
            }
        }
        TraceAlgebra::new(labels, mult, unit, trace)
    }

    /// `D_n = F^n` with component-wise product and `tr(diag) = Σ αᵢ aᵢᵢ`.
    pub fn diagonal(alphas: &[Rat]) -> Result<Self, AlgebraError> {
        let dim = alphas.len();
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        let mut mult = vec![Rat::zero(); dim * dim * dim];
        for i in 0..dim {
            mult[(i * dim + i) * dim + i] = Rat::one();
        }
        let labels = (1..=dim).map(|i| format!("e{i}{i}")).collect();
        TraceAlgebra::new(labels, mult, vec![Rat::one(); dim], alphas.to_vec())
    }

    /// `C2 = span{1, u}` with `u² = 0`, `tr(1) = α`, `tr(u) = β` (the span of
    /// the 2×2 identity and `e12`, as matrices).
    pub fn c2(alpha: &Rat, beta: &Rat) -> Self {
        let mut mult = vec![Rat::zero(); 8];
        let mut set = |i: usize, j: usize, k: usize| mult[(i * 2 + j) * 2 + k] = Rat::one();
        set(0, 0, 0); // 1·1 = 1
        set(0, 1, 1); // 1·u = u
        set(1, 0, 1); // u·1 = u
        TraceAlgebra::new(
            vec![String::from("1"), String::from("u")],
            mult,
            vec![Rat::one(), Rat::zero()],
            vec![alpha.clone(), beta.clone()],
        )
        .expect("C2 is associative and unital")
    }

    /// Upper-triangular 2×2 matrices with the zero trace.
    pub fn ut2() -> Self {
        let labels = vec![
            String::from("e11"),
            String::from("e12"),
            String::from("e22"),
        ];
        // basis order: e11, e12, e22
        let mut mult = vec![Rat::zero(); 27];
        let mut set = |i: usize, j: usize, k: usize| mult[(i * 3 + j) * 3 + k] = Rat::one();
        set(0, 0, 0); // e11 e11 = e11
        set(0, 1, 1); // e11 e12 = e12
        set(1, 2, 1); // e12 e22 = e12
        set(2, 2, 2); // e22 e22 = e22
        TraceAlgebra::new(
            labels,
            mult,
            vec![Rat::one(), Rat::zero(), Rat::one()],
            vec![Rat::zero(); 3],
        )
        .expect("UT2 is associative and unital")
    }

    /// The zero-dimensional algebra.
    pub fn trivial() -> Self {
        TraceAlgebra {
            dim: 0,
            basis_labels: Vec::new(),
            mult: Vec::new(),
            unit: Vec::new(),
            trace: Vec::new(),
        }
    }

    /// Block-diagonal sum: unit `(1, 1)`, trace of `(x, y)` is
    /// `tr_a(x) + tr_b(y)`.
    pub fn direct_sum(a: &TraceAlgebra, b: &TraceAlgebra) -> Self {
        let dim = a.dim + b.dim;
        let mut mult = vec![Rat::zero(); dim * dim * dim];
        for i in 0..a.dim {
            for j in 0..a.dim {
                for k in 0..a.dim {
                    mult[(i * dim + j) * dim + k] = a.mult[(i * a.dim + j) * a.dim + k].clone();
                }
            }
        }
        for i in 0..b.dim {
            for j in 0..b.dim {
                for k in 0..b.dim {
                    mult[((a.dim + i) * dim + (a.dim + j)) * dim + (a.dim + k)] =
                        b.mult[(i * b.dim + j) * b.dim + k].clone();
                }
            }
        }
        let labels = a
            .basis_labels
            .iter()
            .map(|l| format!("l.{l}"))
            .chain(b.basis_labels.iter().map(|l| format!("r.{l}")))
            .collect();
        let unit = a.unit.iter().chain(&b.unit).cloned().collect();
        let trace = a.trace.iter().chain(&b.trace).cloned().collect();
        TraceAlgebra {
            dim,
            basis_labels: labels,
            mult,
            unit,
            trace,
        }
    }

    /// The same ring with the trace functional replaced by zero.
    pub fn with_zero_trace(&self) -> Self {
        let mut a = self.clone();
        a.trace = vec![Rat::zero(); self.dim];
        a
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn basis_index_of(&self, label: &str) -> Option<usize> {
        self.basis_labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &[Rat] {
        &self.unit
    }

    pub fn trace_vector(&self) -> &[Rat] {
        &self.trace
    }

    pub fn structure_constants(&self) -> &[Rat] {
        &self.mult
    }

    pub fn basis_element(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = Rat::one();
        v
    }

    /// Coefficient vector of `b_i · b_j`.
    fn product_row(&self, i: usize, j: usize) -> Vec<Rat> {
        let base = (i * self.dim + j) * self.dim;
        self.mult[base..base + self.dim].to_vec()
    }

    /// Product of two coordinate vectors via the structure constants.
    pub fn mul(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        debug_assert_eq!(a.len(), self.dim);
        debug_assert_eq!(b.len(), self.dim);
        let mut out = vec![Rat::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                let base = (i * self.dim + j) * self.dim;
                for (k, out_k) in out.iter_mut().enumerate() {
                    let s = &self.mult[base + k];
                    if !s.is_zero() {
                        *out_k += &c * s;
                    }
                }
            }
        }
        out
    }

    pub fn trace_of(&self, a: &[Rat]) -> Rat {
        debug_assert_eq!(a.len(), self.dim);
        a.iter()
            .zip(&self.trace)
            .map(|(x, t)| x * t)
            .fold(Rat::zero(), |acc, v| acc + v)
    }

    pub fn scale(&self, c: &Rat, a: &[Rat]) -> Vec<Rat> {
        a.iter().map(|x| c * x).collect()
    }

    /// The space of all symmetric functionals: `f` with `f(b_i b_j) =
    /// f(b_j b_i)` for all pairs, in functional coordinates. Every trace the
    /// algebra admits lives here.
    pub fn trace_space(&self) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let ij = self.product_row(i, j);
                let ji = self.product_row(j, i);
                let row: Vec<Rat> = ij.iter().zip(&ji).map(|(a, b)| a - b).collect();
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Subspace::full(self.dim);
        }
        Matrix::from_rows(rows).kernel()
    }

    /// True iff the bilinear form `(x, y) ↦ tr(xy)` is singular.
    pub fn is_trace_degenerate(&self) -> bool {
        self.gram_matrix().rank() < self.dim
    }

    fn gram_matrix(&self) -> Matrix {
        let mut g = Matrix::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                g.set(i, j, self.trace_of(&self.product_row(i, j)));
            }
        }
        g
    }

    /// The Jacobson radical, computed as the kernel of the regular
    /// representation's trace form `(x, y) ↦ tr_reg(L_{xy})` (valid in
    /// characteristic zero).
    pub fn jacobson_radical(&self) -> AlgebraIdeal {
        // tr_reg(L_{b_i}) = Σ_m c[i][m][m]
        let mut reg = vec![Rat::zero(); self.dim];
        for (i, reg_i) in reg.iter_mut().enumerate() {
            for m in 0..self.dim {
                *reg_i += &self.mult[(i * self.dim + m) * self.dim + m];
            }
        }
        let mut k = Matrix::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let prod = self.product_row(i, j);
                let val = prod
                    .iter()
                    .zip(&reg)
                    .map(|(c, r)| c * r)
                    .fold(Rat::zero(), |acc, v| acc + v);
                k.set(i, j, val);
            }
        }
        let subspace = k.kernel();
        AlgebraIdeal::new(self, subspace).expect("the radical is a two-sided ideal")
    }

    /// Two-sided ideal test.
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool, AlgebraError> {
        self.check_ambient(s)?;
        for row in s.basis().row_vecs() {
            for i in 0..self.dim {
                let e = self.basis_element(i);
                if !contains(s, &self.mul(&e, row)) || !contains(s, &self.mul(row, &e)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Trace-ideal test: a two-sided ideal with `tr(s)·1 ∈ S` for all its
    /// elements.
    pub fn is_trace_ideal(&self, s: &Subspace) -> Result<bool, AlgebraError> {
        if !self.is_ideal(s)? {
            return Ok(false);
        }
        for row in s.basis().row_vecs() {
            let t = self.trace_of(row);
            if !contains(s, &self.scale(&t, &self.unit)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The smallest two-sided ideal containing the given elements.
    pub fn ideal_generated_by(&self, elements: &[Vec<Rat>]) -> Result<Subspace, AlgebraError> {
        for e in elements {
            if e.len() != self.dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: self.dim,
                    got: e.len(),
                });
            }
        }
        let mut span = Subspace::from_rows(self.dim, elements.to_vec());
        loop {
            let mut grew = Vec::new();
            for row in span.basis().row_vecs() {
                for i in 0..self.dim {
                    let e = self.basis_element(i);
                    for prod in [self.mul(&e, row), self.mul(row, &e)] {
                        if !contains(&span, &prod) {
                            grew.push(prod);
                        }
                    }
                }
            }
            if grew.is_empty() {
                return Ok(span);
            }
            let mut rows: Vec<Vec<Rat>> = span.basis().row_vecs().map(<[Rat]>::to_vec).collect();
            rows.extend(grew);
            span = Subspace::from_rows(self.dim, rows);
        }
    }

    /// Quotient by an ideal on which the trace vanishes (otherwise the
    /// quotient trace would be ill-defined). Coordinates are the non-pivot
    /// columns of the ideal's reduced basis.
    pub fn quotient(&self, ideal: &AlgebraIdeal) -> Result<TraceAlgebra, AlgebraError> {
        let s = &ideal.subspace;
        self.check_ambient(s)?;
        for row in s.basis().row_vecs() {
            if !self.trace_of(row).is_zero() {
                return Err(AlgebraError::TraceNotVanishingOnIdeal);
            }
        }
        let pivots = s.pivot_cols();
        let free: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let q = free.len();
        let reduce = |x: &[Rat]| -> Vec<Rat> {
            let mut w = x.to_vec();
            for (r, &p) in pivots.iter().enumerate() {
                if !w[p].is_zero() {
                    let c = w[p].clone();
                    for (wk, bk) in w.iter_mut().zip(s.basis().row(r)) {
                        *wk -= &c * bk;
                    }
                }
            }
            free.iter().map(|&f| w[f].clone()).collect()
        };
        let mut mult = vec![Rat::zero(); q * q * q];
        for (a, &fa) in free.iter().enumerate() {
            for (b, &fb) in free.iter().enumerate() {
                let prod = reduce(&self.product_row(fa, fb));
                for (c, val) in prod.into_iter().enumerate() {
                    mult[(a * q + b) * q + c] = val;
                }
            }
        }
        let unit = reduce(&self.unit);
        let trace = free.iter().map(|&f| self.trace[f].clone()).collect();
        let labels = free.iter().map(|&f| self.basis_labels[f].clone()).collect();
        TraceAlgebra::new(labels, mult, unit, trace)
    }

    /// Span of pairwise products of two subspaces; `subspace_product(J, J)`
    /// is the square of an ideal.
    pub fn subspace_product(&self, s: &Subspace, t: &Subspace) -> Result<Subspace, AlgebraError> {
        self.check_ambient(s)?;
        self.check_ambient(t)?;
        let mut rows = Vec::new();
        for x in s.basis().row_vecs() {
            for y in t.basis().row_vecs() {
                rows.push(self.mul(x, y));
            }
        }
        Ok(Subspace::from_rows(self.dim, rows))
    }

    fn check_ambient(&self, s: &Subspace) -> Result<(), AlgebraError> {
        if s.ambient_dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                got: s.ambient_dim(),
            });
        }
        Ok(())
    }
}

/// A two-sided ideal of a trace algebra, validated at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraIdeal {
    subspace: Subspace,
}

impl AlgebraIdeal {
    pub fn new(algebra: &TraceAlgebra, subspace: Subspace) -> Result<Self, AlgebraError> {
        if !algebra.is_ideal(&subspace)? {
            return Err(AlgebraError::NotAnIdeal);
        }
        Ok(AlgebraIdeal { subspace })
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }
}

/// True iff `map` (a `dim(a) × dim(b)` matrix sending `b_i` to its row) is a
/// unital, multiplicative, trace-compatible linear map.
pub fn check_trace_hom(
    map: &Matrix,
    a: &TraceAlgebra,
    b: &TraceAlgebra,
) -> Result<bool, AlgebraError> {
    if map.rows() != a.dim() || map.cols() != b.dim() {
        return Err(AlgebraError::MapShapeMismatch);
    }
    let apply = |x: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); b.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (o, m) in out.iter_mut().zip(map.row(i)) {
                *o += xi * m;
            }
        }
        out
    };
    if apply(a.unit()) != b.unit() {
        return Ok(false);
    }
    for i in 0..a.dim() {
        let ei = a.basis_element(i);
        if a.trace_of(&ei) != b.trace_of(&apply(&ei)) {
            return Ok(false);
        }
        for j in 0..a.dim() {
            let ej = a.basis_element(j);
            let lhs = apply(&a.mul(&ei, &ej));
            let rhs = b.mul(&apply(&ei), &apply(&ej));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn contains(s: &Subspace, v: &[Rat]) -> bool {
    s.contains(v).expect("ambient checked by caller")
}
