//! Separating depolarized W and GHZ states by total EMPS.
//!
//! `rho_W(v) = (1-v)|W><W| + v I/8` has qubit marginals with spectrum
//! `{(2+v)/6, (4-v)/6}`, hence total EMPS `(2+v)/2`, which stays below
//! `43/34` on the genuinely entangled range `v < 9/17`. Every marginal of
//! `rho_GHZ(v)` is maximally mixed, so its total is `3/2` for all `v`.

use serde::Serialize;

use crate::emps::emps_vector;
use crate::error::{Error, Result};
use crate::qcore::state::DensityMatrix;
use crate::scalar::{lit, Real};

/// Noise level below which noisy W is genuinely tripartite entangled.
pub const W_GME_THRESHOLD: f64 = 9.0 / 17.0;
/// Noise level below which noisy GHZ is genuinely tripartite entangled.
pub const GHZ_GME_THRESHOLD: f64 = 4.0 / 7.0;
/// Supremum of the noisy-W total EMPS over `v < 9/17`.
pub const W_TOTAL_BOUND: f64 = 43.0 / 34.0;
pub const GHZ_TOTAL: f64 = 1.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", content = "v", rename_all = "snake_case")]
pub enum NoisyFamily {
    W(f64),
    Ghz(f64),
}

impl NoisyFamily {
    pub fn noise(&self) -> f64 {
        match *self {
            NoisyFamily::W(v) | NoisyFamily::Ghz(v) => v,
        }
    }

    /// Closed-form total EMPS of the family member.
    pub fn predicted_total(&self) -> f64 {
        match *self {
            NoisyFamily::W(v) => (2.0 + v) / 2.0,
            NoisyFamily::Ghz(_) => GHZ_TOTAL,
        }
    }

    pub fn genuinely_entangled(&self) -> bool {
        match *self {
            NoisyFamily::W(v) => v < W_GME_THRESHOLD,
            NoisyFamily::Ghz(v) => v < GHZ_GME_THRESHOLD,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NoisyReport<T> {
    pub family: NoisyFamily,
    pub emps: Vec<T>,
    pub total: T,
    pub predicted_total: T,
    pub matches_prediction: bool,
    /// W only: total stays below 43/34 (meaningful when `v < 9/17`).
    pub below_w_bound: Option<bool>,
    /// Total differs from the GHZ value 3/2 beyond tolerance.
    pub separated_from_ghz: bool,
}

pub fn discriminate_noisy<T: Real>(
    rho: &DensityMatrix<T>,
    family: NoisyFamily,
) -> Result<NoisyReport<T>> {
    if rho.n() != 3 {
        return Err(Error::argument(format!(
            "noisy W/GHZ discrimination needs 3 qubits, got {}",
            rho.n()
        )));
    }
    let tol = T::tolerances().slack;
    let emps = emps_vector(rho)?;
    let total = emps.total();
    let predicted_total = lit::<T>(family.predicted_total());
    let below_w_bound = match family {
        NoisyFamily::W(_) => Some(total < lit(W_TOTAL_BOUND)),
        NoisyFamily::Ghz(_) => None,
    };
    Ok(NoisyReport {
        family,
        emps: emps.values().to_vec(),
        total,
        predicted_total,
        matches_prediction: (total - predicted_total).abs() <= tol,
        below_w_bound,
        separated_from_ghz: (lit::<T>(GHZ_TOTAL) - total).abs() > tol,
    })
}
