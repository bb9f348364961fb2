//! Exact partition functions and Lie-algebra weight systems on multiloop chord diagrams
//! and k-tangles.
//!
//! All scalars are arbitrary-precision rationals ([`Q`]); nothing is rounded.

pub mod checks;
mod contract;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod lie;
pub mod linalg;
pub mod partition;
pub mod perm;
pub mod quantum;
pub mod rational;
pub mod tangle;
pub mod tensor;

pub use checks::{DiagramInvariant, PartitionOracle};
pub use error::{Error, Result};
pub use lie::{MetrizedLieAlgebra, Representation};
pub use linalg::QMatrix;
pub use perm::Perm;
pub use quantum::QuantumTangle;
pub use rational::Q;
pub use tangle::{ChordDiagram, Head, Tail, Tangle};
pub use tensor::{GlTensor, SymTensor};
