use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("wiring is not a bijection: {0}")]
    NotABijection(String),
    #[error("label {label} is outside [1, {k}]")]
    DanglingLabel { label: usize, k: usize },
    #[error("label count mismatch: {left} vs {right}")]
    LabelMismatch { left: usize, right: usize },
    #[error("request exceeds size bound: {0}")]
    SizeBound(String),

    #[error("tensor is not symmetric at index ({a}, {b}, {c}, {d})")]
    NotSymmetric { a: usize, b: usize, c: usize, d: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("structure constants are not antisymmetric at (i, j, l) = ({i}, {j}, {l})")]
    NotAntisymmetric { i: usize, j: usize, l: usize },
    #[error("Jacobi identity fails for basis triple ({i}, {j}, {k})")]
    JacobiFails { i: usize, j: usize, k: usize },
    #[error("bilinear form is not symmetric at ({i}, {j})")]
    GramNotSymmetric { i: usize, j: usize },
    #[error("bilinear form is degenerate")]
    Degenerate,
    #[error("bilinear form is not ad-invariant for basis triple ({i}, {j}, {k})")]
    NotAdInvariant { i: usize, j: usize, k: usize },
    #[error("representation does not preserve the bracket of basis pair ({i}, {j})")]
    NotARepresentation { i: usize, j: usize },
    #[error("span of the given matrices is not closed under the bracket (pair ({i}, {j}))")]
    NotClosed { i: usize, j: usize },
    #[error("unknown builtin name {0:?}")]
    UnknownName(String),

    #[error("parse error: {0}")]
    Parse(String),
}
