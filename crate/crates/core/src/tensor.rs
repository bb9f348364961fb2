//! Tensors in `S²(gl(n))` and `gl(n)^{⊗k}` with exact rational entries.
//!
//! Index convention for [`SymTensor`]: `get(a, b, c, d)` is the chord weight
//! `R^{c,d}_{a,b}` where, for a chord `uv`, `a` colors the edge entering `u`, `b` the edge
//! entering `v`, `c` the edge leaving `u` and `d` the edge leaving `v`. A pure tensor
//! `X ⊗ Y` has `R^{c,d}_{a,b} = X[a][c] · Y[b][d]`, i.e. a matrix is read with the
//! incoming color as row and the outgoing color as column.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::rational::Q;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymTensor {
    n: usize,
    entries: Vec<Q>,
}

impl SymTensor {
    pub fn zero(n: usize) -> Self {
        SymTensor { n, entries: vec![Q::zero(); n.pow(4)] }
    }

    /// Wraps a dense array in `(a, b, c, d)` row-major order, checking symmetry.
    pub fn new(n: usize, entries: Vec<Q>) -> Result<Self> {
        if entries.len() != n.pow(4) {
            return Err(Error::ShapeMismatch(format!("expected {} entries, got {}", n.pow(4), entries.len())));
        }
        let t = SymTensor { n, entries };
        t.check_symmetric()?;
        Ok(t)
    }

    pub fn from_fn<F: FnMut(usize, usize, usize, usize) -> Q>(n: usize, mut f: F) -> Result<Self> {
        let mut entries = Vec::with_capacity(n.pow(4));
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        entries.push(f(a, b, c, d));
                    }
                }
            }
        }
        Self::new(n, entries)
    }

    /// Averages an arbitrary 4-index array with its chord-end swap.
    pub fn symmetrized(n: usize, raw: &[Q]) -> Result<Self> {
        if raw.len() != n.pow(4) {
            return Err(Error::ShapeMismatch(format!("expected {} entries, got {}", n.pow(4), raw.len())));
        }
        let idx = |a: usize, b: usize, c: usize, d: usize| ((a * n + b) * n + c) * n + d;
        let half = Q::new(1.into(), 2.into());
        Self::from_fn(n, |a, b, c, d| (&raw[idx(a, b, c, d)] + &raw[idx(b, a, d, c)]) * &half)
    }

    /// `Σ X_i ⊗ Y_i`. Fails unless the sum is symmetric.
    pub fn from_pairs(n: usize, pairs: &[(QMatrix, QMatrix)]) -> Result<Self> {
        for (x, y) in pairs {
            for m in [x, y] {
                if m.nrows() != n || m.ncols() != n {
                    return Err(Error::ShapeMismatch(format!(
                        "expected {n}x{n} matrix, got {}x{}",
                        m.nrows(),
                        m.ncols()
                    )));
                }
            }
        }
        let mut t = Self::zero(n);
        for (x, y) in pairs {
            t.add_pure(x, y, &Q::one());
        }
        t.check_symmetric()?;
        Ok(t)
    }

    pub(crate) fn add_pure(&mut self, x: &QMatrix, y: &QMatrix, coeff: &Q) {
        let n = self.n;
        for a in 0..n {
            for c in 0..n {
                let xv = &x[(a, c)];
                if xv.is_zero() {
                    continue;
                }
                let xv = xv * coeff;
                for b in 0..n {
                    for d in 0..n {
                        let yv = &y[(b, d)];
                        if !yv.is_zero() {
                            let i = self.idx(a, b, c, d);
                        self.entries[i] += &xv * yv;
                        }
                    }
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn idx(&self, a: usize, b: usize, c: usize, d: usize) -> usize {
        ((a * self.n + b) * self.n + c) * self.n + d
    }

    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> &Q {
        &self.entries[self.idx(a, b, c, d)]
    }

    pub fn entries(&self) -> &[Q] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Nonzero entries as `((a, b, c, d), value)`, in index order.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize, usize), &Q)> {
        let n = self.n;
        self.entries.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(i, v)| {
            ((i / (n * n * n), (i / (n * n)) % n, (i / n) % n, i % n), v)
        })
    }

    /// `R^{c,d}_{a,b} = R^{d,c}_{b,a}` for all indices.
    pub fn check_symmetric(&self) -> Result<()> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if self.get(a, b, c, d) != self.get(b, a, d, c) {
                            return Err(Error::NotSymmetric { a, b, c, d });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The `n² × n²` matrix with row `(a, c)` and column `(b, d)`.
    pub fn as_matrix(&self) -> QMatrix {
        let n = self.n;
        let mut m = QMatrix::zeros(n * n, n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        m[(a * n + c, b * n + d)] = self.get(a, b, c, d).clone();
                    }
                }
            }
        }
        m
    }

    /// `h · R`: conjugation `X ↦ h X h⁻¹` on both tensor factors.
    pub fn gl_action(&self, h: &QMatrix) -> Result<SymTensor> {
        let n = self.n;
        if h.nrows() != n || h.ncols() != n {
            return Err(Error::ShapeMismatch(format!("expected {n}x{n} matrix")));
        }
        let hinv = h.inverse()?;
        // Apply one mode at a time: rows of both factors by h, columns by h⁻¹.
        let mut cur = self.entries.clone();
        let strides = [n * n * n, n * n, n, 1];
        for (mode, &stride) in strides.iter().enumerate() {
            let mut next = vec![Q::zero(); cur.len()];
            for (i, slot) in next.iter_mut().enumerate() {
                let digit = (i / stride) % n;
                let base = i - digit * stride;
                let mut acc = Q::zero();
                for j in 0..n {
                    let coeff = if mode < 2 { &h[(digit, j)] } else { &hinv[(j, digit)] };
                    if coeff.is_zero() {
                        continue;
                    }
                    let v = &cur[base + j * stride];
                    if !v.is_zero() {
                        acc += coeff * v;
                    }
                }
                *slot = acc;
            }
            cur = next;
        }
        let out = SymTensor { n, entries: cur };
        debug_assert!(out.check_symmetric().is_ok());
        Ok(out)
    }

    /// Exact decomposition `R = Σ_α X_α ⊗ Y_α` with as many terms as the rank of
    /// [`as_matrix`](Self::as_matrix).
    ///
    /// With pivot columns `P` and reduced echelon rows `W` of the matrix `M`, one has
    /// `M = M[:, P] · W`; `X_α` is pivot column `α` and `Y_α` is row `α` of `W`.
    pub fn rank_factorize(&self) -> Vec<(QMatrix, QMatrix)> {
        let n = self.n;
        let m = self.as_matrix();
        let (pivots, rows) = m.rref_rows();
        pivots
            .iter()
            .zip(&rows)
            .map(|(&p, w)| {
                let mut x = QMatrix::zeros(n, n);
                let mut y = QMatrix::zeros(n, n);
                for a in 0..n {
                    for c in 0..n {
                        x[(a, c)] = m[(a * n + c, p)].clone();
                        y[(a, c)] = w[a * n + c].clone();
                    }
                }
                (x, y)
            })
            .collect()
    }
}

impl std::fmt::Debug for SymTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let nz: Vec<String> = self
            .nonzero()
            .map(|((a, b, c, d), v)| format!("[{},{},{},{}]={v}", a + 1, b + 1, c + 1, d + 1))
            .collect();
        write!(f, "SymTensor(n={}, {})", self.n, nz.join(" "))
    }
}

/// An element of `gl(n)^{⊗k}`.
///
/// Entries are stored row-major over `(r_1, c_1, …, r_k, c_k)`: strand `j` contributes the
/// matrix unit `E_{r_j}^{c_j}`. As an operator on `(ℚⁿ)^{⊗k}` the row multi-index is
/// `(r_1, …, r_k)` and the column multi-index `(c_1, …, c_k)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GlTensor {
    n: usize,
    k: usize,
    entries: Vec<Q>,
}

impl GlTensor {
    pub fn zero(n: usize, k: usize) -> Self {
        GlTensor { n, k, entries: vec![Q::zero(); n.pow(2 * k as u32)] }
    }

    pub fn scalar(n: usize, value: Q) -> Self {
        GlTensor { n, k: 0, entries: vec![value] }
    }

    pub fn identity(n: usize, k: usize) -> Self {
        let mut t = Self::zero(n, k);
        for i in 0..t.entries.len() {
            let idx = t.unflatten(i);
            if idx.chunks(2).all(|p| p[0] == p[1]) {
                t.entries[i] = Q::one();
            }
        }
        t
    }

    pub fn from_entries(n: usize, k: usize, entries: Vec<Q>) -> Result<Self> {
        if entries.len() != n.pow(2 * k as u32) {
            return Err(Error::ShapeMismatch(format!("expected n^(2k) = {} entries", n.pow(2 * k as u32))));
        }
        Ok(GlTensor { n, k, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[Q] {
        &self.entries
    }

    /// The single entry of a `k = 0` tensor.
    pub fn as_scalar(&self) -> Option<&Q> {
        (self.k == 0).then(|| &self.entries[0])
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), 2 * self.k);
        idx.iter().fold(0, |acc, &x| acc * self.n + x)
    }

    pub fn unflatten(&self, mut i: usize) -> Vec<usize> {
        let mut idx = vec![0; 2 * self.k];
        for slot in idx.iter_mut().rev() {
            *slot = i % self.n;
            i /= self.n;
        }
        idx
    }

    /// Entry at `(r_1, c_1, …, r_k, c_k)`.
    pub fn get(&self, idx: &[usize]) -> &Q {
        &self.entries[self.flatten(idx)]
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [Q] {
        &mut self.entries
    }

    pub fn add(&self, other: &GlTensor) -> Result<GlTensor> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(GlTensor { n: self.n, k: self.k, entries })
    }

    pub fn scale(&self, s: &Q) -> GlTensor {
        GlTensor { n: self.n, k: self.k, entries: self.entries.iter().map(|a| a * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn same_shape(&self, other: &GlTensor) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::ShapeMismatch(format!(
                "(n, k) = ({}, {}) vs ({}, {})",
                self.n, self.k, other.n, other.k
            )));
        }
        Ok(())
    }

    /// The `n^k × n^k` operator matrix.
    pub fn as_matrix(&self) -> QMatrix {
        let dim = self.n.pow(self.k as u32);
        let mut m = QMatrix::zeros(dim, dim);
        for (i, v) in self.entries.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let idx = self.unflatten(i);
            let (r, c) = split_pairs(&idx, self.n);
            m[(r, c)] = v.clone();
        }
        m
    }

    pub fn from_matrix(n: usize, k: usize, m: &QMatrix) -> Result<GlTensor> {
        let dim = n.pow(k as u32);
        if m.nrows() != dim || m.ncols() != dim {
            return Err(Error::ShapeMismatch(format!("expected {dim}x{dim} operator matrix")));
        }
        let mut t = Self::zero(n, k);
        for i in 0..t.entries.len() {
            let (r, c) = split_pairs(&t.unflatten(i), n);
            t.entries[i] = m[(r, c)].clone();
        }
        Ok(t)
    }

    /// Operator product `self ∘ other`.
    pub fn compose(&self, other: &GlTensor) -> Result<GlTensor> {
        self.same_shape(other)?;
        Self::from_matrix(self.n, self.k, &self.as_matrix().mul(&other.as_matrix()))
    }

    /// `self ⊗ other`, with the strands of `other` placed after those of `self`.
    pub fn tensor(&self, other: &GlTensor) -> Result<GlTensor> {
        if self.n != other.n {
            return Err(Error::ShapeMismatch(format!("n = {} vs {}", self.n, other.n)));
        }
        let mut entries = Vec::with_capacity(self.entries.len() * other.entries.len());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(a * b);
            }
        }
        Ok(GlTensor { n: self.n, k: self.k + other.k, entries })
    }
}

impl std::fmt::Debug for GlTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let nz: Vec<String> = self
            .entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| format!("{:?}={v}", self.unflatten(i)))
            .collect();
        write!(f, "GlTensor(n={}, k={}, {})", self.n, self.k, nz.join(" "))
    }
}

fn split_pairs(idx: &[usize], n: usize) -> (usize, usize) {
    let mut r = 0;
    let mut c = 0;
    for p in idx.chunks(2) {
        r = r * n + p[0];
        c = c * n + p[1];
    }
    (r, c)
}

/// `tr(x y)` on `End((ℚⁿ)^{⊗k})`: pairs the outgoing index of each strand of `x` with the
/// incoming index of the same strand of `y`, and vice versa.
pub fn trace_pair(x: &GlTensor, y: &GlTensor) -> Result<Q> {
    x.same_shape(y)?;
    let mut acc = Q::zero();
    for (i, xv) in x.entries.iter().enumerate() {
        if xv.is_zero() {
            continue;
        }
        let mut idx = x.unflatten(i);
        for p in idx.chunks_mut(2) {
            p.swap(0, 1);
        }
        let yv = y.get(&idx);
        if !yv.is_zero() {
            acc += xv * yv;
        }
    }
    Ok(acc)
}
