//! Finite-dimensional algebra over a [`Field`](crate::scalar::Field): sparse
//! tensors, structure constants, coproducts, duals and exact linear algebra.

mod contract;
mod dual;
mod linalg;
mod structure;
mod tensor;

use thiserror::Error;

pub use contract::{basis_family, contract, coproduct_leg, functional_leg, map_leg, Slot};
pub use dual::{convolution, left_harpoon, right_harpoon, HarpoonTables};
pub use linalg::{invert_map, solve_linear, LinearMap, LinearSolution, Matrix};
pub use structure::{to_dense, to_sparse, Coproduct, SparseVec, StructureConstants};
pub use tensor::SparseTensor;

pub(crate) use structure::{accumulate, mul_coef};
pub(crate) use tensor::advance as advance_counters;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("shape mismatch: (dim {}, degree {}) vs (dim {}, degree {})", left.0, left.1, right.0, right.1)]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("invalid legs {legs:?} for degree {degree}")]
    InvalidLegs { legs: Vec<usize>, degree: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear map is not invertible (rank {rank} of {dim})")]
    NotInvertible { rank: usize, dim: usize },
}
