//! Passive-state energies.
//!
//! Every qubit carries the local Hamiltonian `E |1><1|` with `E = 1`, so all
//! energies returned here are dimensionless multiples of `E`. The marginal
//! passive energy (EMPS) of qubit `i` is the smallest eigenvalue of its
//! reduced density matrix. For mixed inputs the same definition is applied
//! to the qubit marginal ("marginal passive energy").

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qcore::eig::eigenvalues_hermitian;
use crate::qcore::matrix::CMatrix;
use crate::qcore::state::{DensityMatrix, QubitState};
use crate::scalar::{lit, to_f64, Real};

/// Local Hamiltonian `|1><1|` in units of `E`.
pub fn local_hamiltonian<T: Real>() -> CMatrix<T> {
    CMatrix::from_diagonal(&[T::zero(), T::one()])
}

/// Energy of the passive state unitarily reachable from `rho` under `h`:
/// state eigenvalues in descending order paired with energy levels in
/// ascending order.
pub fn passive_energy<T: Real>(rho: &DensityMatrix<T>, h: &CMatrix<T>) -> Result<T> {
    if h.rows() != rho.dim() || h.cols() != rho.dim() {
        return Err(Error::argument(format!(
            "Hamiltonian is {}x{} but the state has dimension {}",
            h.rows(),
            h.cols(),
            rho.dim()
        )));
    }
    let populations = rho.spectrum()?;
    let levels = eigenvalues_hermitian(h)?;
    Ok(populations
        .iter()
        .rev()
        .zip(&levels)
        .map(|(&p, &e)| p * e)
        .sum())
}

/// Marginal passive energy of qubit `i` (1-based).
pub fn emps<T: Real, S: QubitState<T> + ?Sized>(state: &S, i: usize) -> Result<T> {
    let marginal = state.reduced(&[i])?;
    let lambda_min = marginal.spectrum()?[0];
    let tol = T::tolerances();
    if lambda_min < -tol.psd {
        return Err(Error::validation(format!(
            "qubit {i} marginal has negative eigenvalue {:e}",
            to_f64(lambda_min)
        )));
    }
    Ok(lambda_min.max(T::zero()))
}

pub fn emps_vector<T: Real, S: QubitState<T> + ?Sized>(state: &S) -> Result<EmpsVector<T>> {
    let values = (1..=state.num_qubits())
        .map(|i| emps(state, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(EmpsVector { values })
}

/// `min_j (sum_{k != j} E_k - E_j)`; requires at least three qubits.
pub fn eta_indicator<T: Real, S: QubitState<T> + ?Sized>(state: &S) -> Result<T> {
    if state.num_qubits() < 3 {
        return Err(Error::argument(format!(
            "energy indicator needs at least 3 qubits, got {}",
            state.num_qubits()
        )));
    }
    emps_vector(state)?.eta()
}

pub fn polygon_check<T: Real>(v: &EmpsVector<T>) -> PolygonReport<T> {
    v.polygon()
}

pub fn total_emps<T: Real>(v: &EmpsVector<T>) -> T {
    v.total()
}

/// Total EMPS is at least twice every single-qubit EMPS.
pub fn total_bound_holds<T: Real>(v: &EmpsVector<T>) -> bool {
    let total = v.total();
    let tol = T::tolerances().slack;
    v.values.iter().all(|&e| total - (e + e) >= -tol)
}

/// Characteristic vector `(E_1, ..., E_n)` in units of `E`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct EmpsVector<T> {
    values: Vec<T>,
}

impl<T: Real> EmpsVector<T> {
    /// Validates `0 <= E_i <= 1/2` (with slack) for externally supplied points.
    pub fn new(values: Vec<T>) -> Result<Self> {
        let tol = T::tolerances().psd;
        let half = lit::<T>(0.5);
        if values.is_empty() {
            return Err(Error::validation("EMPS vector must be non-empty"));
        }
        for (k, &e) in values.iter().enumerate() {
            if !(e >= -tol && e <= half + tol) {
                return Err(Error::validation(format!(
                    "EMPS component {} = {} outside [0, 1/2]",
                    k + 1,
                    to_f64(e)
                )));
            }
        }
        Ok(EmpsVector { values })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn total(&self) -> T {
        self.values.iter().copied().sum()
    }

    /// Slack of each polygon inequality, `sum_{j != i} E_j - E_i`.
    pub fn polygon_slacks(&self) -> Vec<T> {
        (0..self.values.len())
            .map(|i| {
                let others: T = self
                    .values
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &e)| e)
                    .sum();
                others - self.values[i]
            })
            .collect()
    }

    pub fn polygon(&self) -> PolygonReport<T> {
        let slacks = self.polygon_slacks();
        let (worst_index, worst_slack) =
            slacks
                .iter()
                .copied()
                .enumerate()
                .fold(
                    (0, T::infinity()),
                    |best, (i, s)| if s < best.1 { (i, s) } else { best },
                );
        let satisfied = worst_slack >= -T::tolerances().slack;
        PolygonReport {
            satisfied,
            worst_slack,
            violating_index: (!satisfied).then_some(worst_index + 1),
        }
    }

    pub fn eta(&self) -> Result<T> {
        if self.n() < 3 {
            return Err(Error::argument(format!(
                "energy indicator needs at least 3 qubits, got {}",
                self.n()
            )));
        }
        Ok(self.polygon().worst_slack)
    }

    /// Geometric measure of each `i | rest` cut, taken as `2 E_i`.
    pub fn geometric_measures(&self) -> Vec<T> {
        self.values.iter().map(|&e| e + e).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolygonReport<T> {
    pub satisfied: bool,
    pub worst_slack: T,
    /// 1-based qubit of the most violated inequality, when violated.
    pub violating_index: Option<usize>,
}
