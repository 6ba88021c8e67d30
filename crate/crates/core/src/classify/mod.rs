//! SLOCC classification with marginal passive energies.

pub mod builders;
pub mod noisy;
pub mod orbit;
pub mod three_qubit;

pub use builders::{
    biseparable, build_state, dicke, generalized_dicke, ghz, noisy_ghz, noisy_w, w_state, State,
    StateBuilderSpec,
};
pub use noisy::{discriminate_noisy, NoisyFamily, NoisyReport};
pub use orbit::{slocc_orbit_sample, slocc_sample};
pub use three_qubit::{
    classify_emps, classify_three_qubit, polytope_membership_3q, ClassLabel, Evidence, Membership,
    PolytopeClass, Verdict,
};
