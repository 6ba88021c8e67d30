//! Dense complex linear algebra for small qubit registers.

pub mod eig;
pub mod matrix;
pub mod state;

pub use eig::{eig_hermitian, eigenvalues_hermitian, Spectrum};
pub use matrix::CMatrix;
pub use state::{von_neumann_entropy, DensityMatrix, PureState, QubitState, MAX_QUBITS};

use crate::error::Result;

/// Kronecker product of two pure states.
pub fn tensor_product<T: crate::Real>(a: &PureState<T>, b: &PureState<T>) -> Result<PureState<T>> {
    a.tensor(b)
}

/// Partial trace keeping the listed 1-based qubits.
pub fn partial_trace<T: crate::Real>(
    rho: &DensityMatrix<T>,
    keep: &[usize],
) -> Result<DensityMatrix<T>> {
    rho.partial_trace(keep)
}
