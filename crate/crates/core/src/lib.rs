//! Marginal passive-state energies of multi-qubit states.
//!
//! With every qubit governed by `E |1><1|`, the energy of the passive state
//! reachable from a qubit marginal is its smallest eigenvalue. The vector of
//! these energies obeys polygon inequalities for pure states, fills class
//! dependent polytopes under SLOCC, and its polygon slack (`eta`) certifies
//! genuine tripartite entanglement.
//!
//! All numerics are generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix the scalar to `f64` or `f32`.

pub mod classify;
pub mod emps;
pub mod error;
pub mod io;
pub mod qcore;
pub mod random;
pub mod scalar;
pub mod spinchain;

pub use classify::{
    build_state, classify_three_qubit, discriminate_noisy, polytope_membership_3q,
    slocc_orbit_sample, ClassLabel, PolytopeClass, State, StateBuilderSpec, Verdict,
};
pub use emps::{
    emps, emps_vector, eta_indicator, passive_energy, polygon_check, total_emps, EmpsVector,
    PolygonReport,
};
pub use error::{Error, Result};
pub use io::StateFile;
pub use qcore::{
    eig_hermitian, partial_trace, tensor_product, von_neumann_entropy, CMatrix, DensityMatrix,
    PureState, QubitState, Spectrum,
};
pub use scalar::{Real, Tolerances};
pub use spinchain::{
    build_hamiltonian, entropy_criterion, ground_state, indicator_sweep, GroundStateResult,
    SpinChainSpec, SweepParameter, SweepRow,
};

pub type C64 = num_complex::Complex<f64>;
pub type C32 = num_complex::Complex<f32>;

pub type CMatrix64 = CMatrix<f64>;
pub type PureState64 = PureState<f64>;
pub type DensityMatrix64 = DensityMatrix<f64>;
pub type EmpsVector64 = EmpsVector<f64>;
pub type State64 = State<f64>;

pub type CMatrix32 = CMatrix<f32>;
pub type PureState32 = PureState<f32>;
pub type DensityMatrix32 = DensityMatrix<f32>;
pub type EmpsVector32 = EmpsVector<f32>;
pub type State32 = State<f32>;
