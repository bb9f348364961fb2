//! Metrized Lie algebras, their representations, and Casimir tensors.
//!
//! The Casimir tensor is built from the dual basis of the bilinear form,
//! `R = Σ_i ρ(b_i) ⊗ ρ(b^i)` with `b^i = Σ_j (G⁻¹)_{ij} b_j`. This equals
//! `Σ_j ρ(c_j) ⊗ ρ(c_j)` for any orthonormal basis `c`, when one exists, and stays
//! rational when it does not.

use num_traits::Zero;

use crate::checks::{f_of, PartitionOracle};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::rational::Q;
use crate::tensor::SymTensor;

/// Structure constants `[b_i, b_j] = Σ_l c[i][j][l] b_l` and a Gram matrix `⟨b_i, b_j⟩`.
///
/// Construction validates antisymmetry, the Jacobi identity, symmetry and
/// nondegeneracy of the form, and ad-invariance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetrizedLieAlgebra {
    dim: usize,
    structure: Vec<Q>,
    gram: QMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    n: usize,
    images: Vec<QMatrix>,
}

fn sidx(dim: usize, i: usize, j: usize, l: usize) -> usize {
    (i * dim + j) * dim + l
}

/// Checks the metrized Lie algebra axioms on raw data, reporting the first failing basis
/// indices (0-based).
pub fn check_metrized(dim: usize, structure: &[Q], gram: &QMatrix) -> Result<()> {
    if structure.len() != dim.pow(3) {
        return Err(Error::ShapeMismatch(format!("expected {} structure constants", dim.pow(3))));
    }
    if gram.nrows() != dim || gram.ncols() != dim {
        return Err(Error::ShapeMismatch(format!("expected {dim}x{dim} gram matrix")));
    }
    let c = |i: usize, j: usize, l: usize| &structure[sidx(dim, i, j, l)];

    for i in 0..dim {
        for j in 0..dim {
            for l in 0..dim {
                if c(i, j, l) != &-c(j, i, l) {
                    return Err(Error::NotAntisymmetric { i, j, l });
                }
            }
        }
    }

    // [b_i, [b_j, b_k]] + [b_j, [b_k, b_i]] + [b_k, [b_i, b_j]] = 0
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                for out in 0..dim {
                    let mut total = Q::zero();
                    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for l in 0..dim {
                            let inner = c(y, z, l);
                            if !inner.is_zero() {
                                total += inner * c(x, l, out);
                            }
                        }
                    }
                    if !total.is_zero() {
                        return Err(Error::JacobiFails { i, j, k });
                    }
                }
            }
        }
    }

    for i in 0..dim {
        for j in 0..dim {
            if gram[(i, j)] != gram[(j, i)] {
                return Err(Error::GramNotSymmetric { i, j });
            }
        }
    }
    if gram.determinant()?.is_zero() {
        return Err(Error::Degenerate);
    }

    // ⟨[b_i, b_j], b_k⟩ = ⟨b_i, [b_j, b_k]⟩
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let lhs: Q = (0..dim).map(|l| c(i, j, l) * &gram[(l, k)]).sum();
                let rhs: Q = (0..dim).map(|l| c(j, k, l) * &gram[(i, l)]).sum();
                if lhs != rhs {
                    return Err(Error::NotAdInvariant { i, j, k });
                }
            }
        }
    }
    Ok(())
}

impl MetrizedLieAlgebra {
    /// `structure[(i * dim + j) * dim + l]` is the coefficient of `b_l` in `[b_i, b_j]`.
    pub fn new(dim: usize, structure: Vec<Q>, gram: QMatrix) -> Result<Self> {
        check_metrized(dim, &structure, &gram)?;
        Ok(MetrizedLieAlgebra { dim, structure, gram })
    }

    /// The matrix Lie algebra spanned by `basis` with the trace form `⟨x, y⟩ = tr(xy)`,
    /// together with its defining representation.
    ///
    /// Fails with [`Error::NotClosed`] if the span is not closed under the commutator.
    pub fn from_matrix_basis(basis: &[QMatrix]) -> Result<(Self, Representation)> {
        let dim = basis.len();
        let n = basis.first().map_or(0, QMatrix::nrows);
        // Columns of `span` are the flattened basis matrices.
        let mut span = QMatrix::zeros(n * n, dim);
        for (l, b) in basis.iter().enumerate() {
            if b.nrows() != n || b.ncols() != n {
                return Err(Error::ShapeMismatch("basis matrices must share one square shape".into()));
            }
            for r in 0..n {
                for c in 0..n {
                    span[(r * n + c, l)] = b[(r, c)].clone();
                }
            }
        }
        if span.rank() != dim {
            return Err(Error::Degenerate);
        }
        let mut structure = vec![Q::zero(); dim.pow(3)];
        for i in 0..dim {
            for j in 0..dim {
                let br = basis[i].commutator(&basis[j]);
                let target: Vec<Q> = (0..n * n).map(|x| br[(x / n, x % n)].clone()).collect();
                let coeffs = span.solve(&target).ok_or(Error::NotClosed { i, j })?;
                for (l, v) in coeffs.into_iter().enumerate() {
                    structure[sidx(dim, i, j, l)] = v;
                }
            }
        }
        let mut gram = QMatrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                gram[(i, j)] = basis[i].mul(&basis[j]).trace();
            }
        }
        let g = Self::new(dim, structure, gram)?;
        let rho = Representation::new(&g, n, basis.to_vec())?;
        Ok((g, rho))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure(&self) -> &[Q] {
        &self.structure
    }

    pub fn bracket_coeff(&self, i: usize, j: usize, l: usize) -> &Q {
        &self.structure[sidx(self.dim, i, j, l)]
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    /// Re-expresses the algebra and a representation in the basis `b'_i = Σ_j P[i][j] b_j`.
    pub fn change_basis(&self, rho: &Representation, p: &QMatrix) -> Result<(Self, Representation)> {
        let d = self.dim;
        if p.nrows() != d || p.ncols() != d {
            return Err(Error::ShapeMismatch(format!("expected {d}x{d} change of basis")));
        }
        let pinv = p.inverse()?;
        let mut structure = vec![Q::zero(); d.pow(3)];
        for i in 0..d {
            for j in 0..d {
                // [b'_i, b'_j] in the old basis
                let mut old = vec![Q::zero(); d];
                for a in 0..d {
                    for b in 0..d {
                        let w = &p[(i, a)] * &p[(j, b)];
                        if w.is_zero() {
                            continue;
                        }
                        for (l, slot) in old.iter_mut().enumerate() {
                            *slot += &w * self.bracket_coeff(a, b, l);
                        }
                    }
                }
                for q in 0..d {
                    structure[sidx(d, i, j, q)] = (0..d).map(|l| &old[l] * &pinv[(l, q)]).sum();
                }
            }
        }
        let gram = p.mul(&self.gram).mul(&p.transpose());
        let images = (0..d)
            .map(|i| {
                (0..d).fold(QMatrix::zeros(rho.n, rho.n), |acc, j| acc.add(&rho.images[j].scale(&p[(i, j)])))
            })
            .collect();
        let g = Self::new(d, structure, gram)?;
        let r = Representation::new(&g, rho.n, images)?;
        Ok((g, r))
    }
}

impl Representation {
    /// Checks `ρ([b_i, b_j]) = [ρ(b_i), ρ(b_j)]` on all basis pairs.
    pub fn new(g: &MetrizedLieAlgebra, n: usize, images: Vec<QMatrix>) -> Result<Self> {
        if images.len() != g.dim {
            return Err(Error::ShapeMismatch(format!("expected {} images, got {}", g.dim, images.len())));
        }
        if images.iter().any(|m| m.nrows() != n || m.ncols() != n) {
            return Err(Error::ShapeMismatch(format!("images must be {n}x{n}")));
        }
        for i in 0..g.dim {
            for j in 0..g.dim {
                let lhs = (0..g.dim).fold(QMatrix::zeros(n, n), |acc, l| {
                    acc.add(&images[l].scale(g.bracket_coeff(i, j, l)))
                });
                if lhs != images[i].commutator(&images[j]) {
                    return Err(Error::NotARepresentation { i, j });
                }
            }
        }
        Ok(Representation { n, images })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[QMatrix] {
        &self.images
    }
}

/// `R(g, ρ) = Σ_{i,j} (G⁻¹)_{ij} ρ(b_i) ⊗ ρ(b_j)`.
pub fn casimir_tensor(g: &MetrizedLieAlgebra, rho: &Representation) -> Result<SymTensor> {
    if rho.images.len() != g.dim {
        return Err(Error::ShapeMismatch("representation does not match the algebra".into()));
    }
    let ginv = g.gram.inverse().map_err(|_| Error::Degenerate)?;
    let mut r = SymTensor::zero(rho.n);
    for i in 0..g.dim {
        for j in 0..g.dim {
            let w = &ginv[(i, j)];
            if !w.is_zero() {
                r.add_pure(&rho.images[i], &rho.images[j], w);
            }
        }
    }
    r.check_symmetric()?;
    Ok(r)
}

/// `φ_g^ρ = p_{R(g, ρ)}`.
pub fn weight_system(g: &MetrizedLieAlgebra, rho: &Representation) -> Result<PartitionOracle> {
    Ok(f_of(casimir_tensor(g, rho)?))
}

/// Names accepted by [`builtin`]: `gl<n>`, `sl2` and `abelian<d>`, optionally written
/// with parentheses as in `gl(3)`.
pub fn builtin(name: &str) -> Result<(MetrizedLieAlgebra, Representation)> {
    let key: String = name.chars().filter(|c| !matches!(c, '(' | ')' | ' ')).collect::<String>().to_lowercase();
    let unknown = || Error::UnknownName(name.to_string());
    let param = |prefix: &str| -> Option<usize> { key.strip_prefix(prefix)?.parse().ok().filter(|&n| n >= 1) };
    if key == "sl2" {
        let e = QMatrix::unit(2, 0, 1);
        let f = QMatrix::unit(2, 1, 0);
        let h = QMatrix::unit(2, 0, 0).sub(&QMatrix::unit(2, 1, 1));
        return MetrizedLieAlgebra::from_matrix_basis(&[e, f, h]);
    }
    if let Some(n) = param("gl") {
        let basis: Vec<QMatrix> =
            (0..n).flat_map(|i| (0..n).map(move |j| QMatrix::unit(n, i, j))).collect();
        return MetrizedLieAlgebra::from_matrix_basis(&basis);
    }
    if let Some(d) = param("abelian") {
        // Diagonal matrix units: a faithful representation on ℚ^d with the trace form.
        let basis: Vec<QMatrix> = (0..d).map(|i| QMatrix::unit(d, i, i)).collect();
        return MetrizedLieAlgebra::from_matrix_basis(&basis);
    }
    Err(unknown())
}

/// A zero-bracket algebra of dimension `d` with the identity form.
pub fn abelian_with_identity_form(d: usize) -> MetrizedLieAlgebra {
    MetrizedLieAlgebra { dim: d, structure: vec![Q::zero(); d.pow(3)], gram: QMatrix::identity(d) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn sl2_fixture() {
        let (g, rho) = builtin("sl2").unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(rho.n(), 2);
        // basis {E12, E21, E11 - E22}: tr pairs (e, f) = 1, (h, h) = 2
        assert_eq!(g.gram(), &QMatrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]));
        // [e, f] = h, [h, e] = 2e
        assert_eq!(g.bracket_coeff(0, 1, 2), &q(1));
        assert_eq!(g.bracket_coeff(2, 0, 0), &q(2));
    }

    #[test]
    fn other_fixtures() {
        assert_eq!(builtin("gl2").unwrap().0.dim(), 4);
        assert_eq!(builtin("gl(3)").unwrap().0.dim(), 9);
        let (a, _) = builtin("abelian(1)").unwrap();
        assert!(a.structure().iter().all(Zero::is_zero));
        assert!(matches!(builtin("e8"), Err(Error::UnknownName(_))));
        assert!(matches!(builtin("gl0"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn abelian_identity_form_is_metrized() {
        let a = abelian_with_identity_form(2);
        assert!(check_metrized(2, a.structure(), a.gram()).is_ok());
    }

    #[test]
    fn perturbed_sl2_gram_is_rejected_with_witness() {
        let (g, _) = builtin("sl2").unwrap();
        let mut gram = g.gram().clone();
        gram[(2, 2)] = q(3);
        let err = MetrizedLieAlgebra::new(3, g.structure().to_vec(), gram).unwrap_err();
        // ⟨[e, f], h⟩ = 3 but ⟨e, [f, h]⟩ = ⟨e, 2f⟩ = 2
        assert_eq!(err, Error::NotAdInvariant { i: 0, j: 1, k: 2 });

        let mut gram = g.gram().clone();
        gram[(0, 2)] = frac(1, 2);
        assert!(matches!(MetrizedLieAlgebra::new(3, g.structure().to_vec(), gram), Err(Error::GramNotSymmetric { .. })));
    }

    #[test]
    fn bad_structure_constants() {
        let mut s = vec![Q::zero(); 8];
        s[sidx(2, 0, 1, 0)] = q(1);
        assert_eq!(
            MetrizedLieAlgebra::new(2, s.clone(), QMatrix::identity(2)).unwrap_err(),
            Error::NotAntisymmetric { i: 0, j: 1, l: 0 }
        );
        // The 2-dimensional non-abelian algebra [x, y] = x has no invariant nondegenerate form.
        s[sidx(2, 1, 0, 0)] = q(-1);
        assert!(matches!(
            MetrizedLieAlgebra::new(2, s, QMatrix::identity(2)),
            Err(Error::NotAdInvariant { .. })
        ));
        assert_eq!(
            MetrizedLieAlgebra::new(1, vec![q(0)], QMatrix::zeros(1, 1)).unwrap_err(),
            Error::Degenerate
        );
    }

    #[test]
    fn jacobi_failure_is_detected() {
        // [b0, b1] = b2, [b1, b2] = b0, [b2, b0] = b2 violates Jacobi.
        let d = 3;
        let mut s = vec![Q::zero(); 27];
        let mut set = |i: usize, j: usize, l: usize, v: i64| {
            s[sidx(d, i, j, l)] = q(v);
            s[sidx(d, j, i, l)] = q(-v);
        };
        set(0, 1, 2, 1);
        set(1, 2, 0, 1);
        set(2, 0, 2, 1);
        assert!(matches!(MetrizedLieAlgebra::new(3, s, QMatrix::identity(3)), Err(Error::JacobiFails { .. })));
    }

    #[test]
    fn counterexample_matrices_do_not_span_a_lie_algebra() {
        let b1 = QMatrix::from_ints(&[&[1, 1], &[0, 0]]);
        let b2 = QMatrix::from_ints(&[&[0, 1], &[0, 1]]);
        assert_eq!(b1.commutator(&b2), QMatrix::from_ints(&[&[0, 2], &[0, 0]]));
        assert_eq!(MetrizedLieAlgebra::from_matrix_basis(&[b1, b2]).unwrap_err(), Error::NotClosed { i: 0, j: 1 });
    }

    #[test]
    fn gl_casimir_is_dual_basis_sum() {
        for n in 1..4 {
            let (g, rho) = builtin(&format!("gl{n}")).unwrap();
            let r = casimir_tensor(&g, &rho).unwrap();
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    // ⟨E_i^j, E_j^i⟩ = 1 and all other pairings vanish
                    assert_eq!(QMatrix::unit(n, i, j).mul(&QMatrix::unit(n, j, i)).trace(), q(1));
                    pairs.push((QMatrix::unit(n, i, j), QMatrix::unit(n, j, i)));
                }
            }
            assert_eq!(r, SymTensor::from_pairs(n, &pairs).unwrap());
        }
    }

    #[test]
    fn zero_representation_gives_zero_tensor() {
        let g = abelian_with_identity_form(1);
        let rho = Representation::new(&g, 2, vec![QMatrix::zeros(2, 2)]).unwrap();
        assert!(casimir_tensor(&g, &rho).unwrap().is_zero());
    }

    #[test]
    fn bad_representation_is_rejected() {
        let (g, _) = builtin("sl2").unwrap();
        let imgs = vec![QMatrix::unit(2, 0, 1), QMatrix::unit(2, 0, 1), QMatrix::zeros(2, 2)];
        assert!(matches!(Representation::new(&g, 2, imgs), Err(Error::NotARepresentation { .. })));
    }

    #[test]
    fn casimir_is_basis_independent() {
        for name in ["sl2", "gl2"] {
            let (g, rho) = builtin(name).unwrap();
            let d = g.dim();
            let mut p = QMatrix::identity(d);
            for i in 0..d {
                for j in 0..d {
                    p[(i, j)] += frac((i * 3 + j * 5 + 1) as i64 % 7 - 3, (j + 2) as i64);
                }
            }
            assert!(!p.determinant().unwrap().is_zero());
            let (g2, rho2) = g.change_basis(&rho, &p).unwrap();
            assert_ne!(rho2.images(), rho.images());
            assert_eq!(casimir_tensor(&g2, &rho2).unwrap(), casimir_tensor(&g, &rho).unwrap());
        }
    }

    #[test]
    fn sl2_casimir_operator_is_three_halves() {
        let (g, rho) = builtin("sl2").unwrap();
        let ginv = g.gram().inverse().unwrap();
        let mut c = QMatrix::zeros(2, 2);
        for i in 0..3 {
            for j in 0..3 {
                c = c.add(&rho.images()[i].mul(&rho.images()[j]).scale(&ginv[(i, j)]));
            }
        }
        assert_eq!(c, QMatrix::identity(2).scale(&frac(3, 2)));
    }
}
