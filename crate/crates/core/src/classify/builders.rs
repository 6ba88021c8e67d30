//! Builders for the state families used throughout: generalized GHZ and W
//! states, (generalized) Dicke states, biseparable states and the
//! depolarized W/GHZ mixtures.

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::state::{check_qubit_count, DensityMatrix, PureState, QubitState};
use crate::scalar::{lit, re, Real};

/// Parametrized description of a state family, in the JSON shape
/// `{"builder": "...", "params": {...}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "builder", content = "params", rename_all = "snake_case")]
pub enum StateBuilderSpec {
    /// `cos(theta)|0...0> + sin(theta)|1...1>`, `theta` in `(0, pi/4]`.
    Ghz {
        n: usize,
        theta: f64,
    },
    /// `sum_i sqrt(a_i) |0..1_i..0>`, `a_i >= 0`, `sum a_i = 1`.
    W {
        coeffs: Vec<f64>,
    },
    Dicke {
        n: usize,
        l: usize,
    },
    /// Real amplitudes over the weight-`l` basis states in ascending
    /// basis-index order.
    GeneralizedDicke {
        n: usize,
        l: usize,
        coefficients: Vec<f64>,
    },
    /// `|0>` on `position`, `alpha|00> + beta|11>` on the other two qubits.
    Biseparable {
        alpha: f64,
        beta: f64,
        position: usize,
    },
    NoisyW {
        v: f64,
    },
    NoisyGhz {
        v: f64,
    },
}

/// Output of a builder.
#[derive(Debug, Clone, PartialEq)]
pub enum State<T> {
    Pure(PureState<T>),
    Mixed(DensityMatrix<T>),
}

impl<T: Real> State<T> {
    pub fn as_pure(&self) -> Option<&PureState<T>> {
        match self {
            State::Pure(p) => Some(p),
            State::Mixed(_) => None,
        }
    }

    pub fn as_mixed(&self) -> Option<&DensityMatrix<T>> {
        match self {
            State::Pure(_) => None,
            State::Mixed(m) => Some(m),
        }
    }

    pub fn into_density(self) -> DensityMatrix<T> {
        match self {
            State::Pure(p) => p.to_density(),
            State::Mixed(m) => m,
        }
    }
}

impl<T: Real> QubitState<T> for State<T> {
    fn num_qubits(&self) -> usize {
        match self {
            State::Pure(p) => p.n(),
            State::Mixed(m) => m.n(),
        }
    }

    fn reduced(&self, keep: &[usize]) -> Result<DensityMatrix<T>> {
        match self {
            State::Pure(p) => p.reduced(keep),
            State::Mixed(m) => m.reduced(keep),
        }
    }
}

impl<T> From<PureState<T>> for State<T> {
    fn from(p: PureState<T>) -> Self {
        State::Pure(p)
    }
}

impl<T> From<DensityMatrix<T>> for State<T> {
    fn from(m: DensityMatrix<T>) -> Self {
        State::Mixed(m)
    }
}

pub fn build_state<T: Real>(spec: &StateBuilderSpec) -> Result<State<T>> {
    Ok(match spec {
        StateBuilderSpec::Ghz { n, theta } => ghz(*n, *theta)?.into(),
        StateBuilderSpec::W { coeffs } => w_state(coeffs)?.into(),
        StateBuilderSpec::Dicke { n, l } => dicke(*n, *l)?.into(),
        StateBuilderSpec::GeneralizedDicke { n, l, coefficients } => {
            generalized_dicke(*n, *l, coefficients)?.into()
        }
        StateBuilderSpec::Biseparable {
            alpha,
            beta,
            position,
        } => biseparable(*alpha, *beta, *position)?.into(),
        StateBuilderSpec::NoisyW { v } => noisy_w(*v)?.into(),
        StateBuilderSpec::NoisyGhz { v } => noisy_ghz(*v)?.into(),
    })
}

const PARAM_TOL: f64 = 1e-9;

pub fn ghz<T: Real>(n: usize, theta: f64) -> Result<PureState<T>> {
    check_qubit_count(n)?;
    let quarter = std::f64::consts::FRAC_PI_4;
    if !(theta > 0.0 && theta <= quarter + PARAM_TOL) {
        return Err(Error::validation(format!(
            "GHZ angle theta = {theta} outside (0, pi/4]"
        )));
    }
    let mut amps = vec![Complex::zero(); 1 << n];
    let theta: T = lit(theta);
    amps[0] = re(theta.cos());
    amps[(1 << n) - 1] = re(theta.sin());
    PureState::new(n, amps)
}

/// Generalized W state; `coeffs[i]` is the weight of the excitation on qubit `i + 1`.
pub fn w_state<T: Real>(coeffs: &[f64]) -> Result<PureState<T>> {
    let n = coeffs.len();
    check_qubit_count(n)?;
    if let Some(a) = coeffs.iter().find(|a| a.is_nan() || **a < 0.0) {
        return Err(Error::validation(format!(
            "W coefficient {a} is negative (need a_i >= 0)"
        )));
    }
    let sum: f64 = coeffs.iter().sum();
    if (sum - 1.0).abs() > PARAM_TOL {
        return Err(Error::validation(format!(
            "W coefficients sum to {sum}, expected 1"
        )));
    }
    let mut amps = vec![Complex::zero(); 1 << n];
    for (i, &a) in coeffs.iter().enumerate() {
        amps[1 << (n - 1 - i)] = re(lit::<T>(a).sqrt());
    }
    PureState::normalized(n, amps)
}

fn check_excitations(n: usize, l: usize) -> Result<()> {
    check_qubit_count(n)?;
    if l < 1 || l + 1 > n {
        return Err(Error::validation(format!(
            "Dicke excitation count l = {l} outside 1..={}",
            n.saturating_sub(1)
        )));
    }
    Ok(())
}

/// Basis indices of Hamming weight `l`, ascending.
pub fn weight_l_indices(n: usize, l: usize) -> Vec<usize> {
    (0..1usize << n)
        .filter(|k| k.count_ones() as usize == l)
        .collect()
}

pub fn dicke<T: Real>(n: usize, l: usize) -> Result<PureState<T>> {
    check_excitations(n, l)?;
    let support = weight_l_indices(n, l);
    let amp = re(T::one() / lit::<T>(support.len() as f64).sqrt());
    let mut amps = vec![Complex::zero(); 1 << n];
    for k in support {
        amps[k] = amp;
    }
    PureState::normalized(n, amps)
}

pub fn generalized_dicke<T: Real>(
    n: usize,
    l: usize,
    coefficients: &[f64],
) -> Result<PureState<T>> {
    check_excitations(n, l)?;
    let support = weight_l_indices(n, l);
    if coefficients.len() != support.len() {
        return Err(Error::validation(format!(
            "generalized Dicke state ({n}, {l}) needs {} coefficients, got {}",
            support.len(),
            coefficients.len()
        )));
    }
    let norm2: f64 = coefficients.iter().map(|c| c * c).sum();
    if (norm2 - 1.0).abs() > PARAM_TOL {
        return Err(Error::validation(format!(
            "generalized Dicke coefficients are not normalized: sum c^2 = {norm2}"
        )));
    }
    let mut amps = vec![Complex::zero(); 1 << n];
    for (k, &c) in support.into_iter().zip(coefficients) {
        amps[k] = re(lit(c));
    }
    PureState::normalized(n, amps)
}

/// Three-qubit state with qubit `position` factored out as `|0>`.
pub fn biseparable<T: Real>(alpha: f64, beta: f64, position: usize) -> Result<PureState<T>> {
    if !(1..=3).contains(&position) {
        return Err(Error::validation(format!(
            "biseparable position {position} outside 1..=3"
        )));
    }
    let norm2 = alpha * alpha + beta * beta;
    if (norm2 - 1.0).abs() > PARAM_TOL {
        return Err(Error::validation(format!(
            "biseparable amplitudes not normalized: alpha^2 + beta^2 = {norm2}"
        )));
    }
    let pair: Vec<usize> = (1..=3).filter(|&q| q != position).collect();
    let both = (1usize << (3 - pair[0])) | (1usize << (3 - pair[1]));
    let mut amps = vec![Complex::zero(); 8];
    amps[0] = re(lit(alpha));
    amps[both] = re(lit(beta));
    PureState::normalized(3, amps)
}

fn check_noise(v: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::validation(format!(
            "noise weight v = {v} outside [0, 1]"
        )));
    }
    Ok(())
}

/// `(1 - v)|W><W| + v I/8` with the uniform three-qubit W state.
pub fn noisy_w<T: Real>(v: f64) -> Result<DensityMatrix<T>> {
    check_noise(v)?;
    DensityMatrix::depolarized(&dicke(3, 1)?, lit(v))
}

/// `(1 - v)|GHZ><GHZ| + v I/8` with `(|000> + |111>)/sqrt 2`.
pub fn noisy_ghz<T: Real>(v: f64) -> Result<DensityMatrix<T>> {
    check_noise(v)?;
    DensityMatrix::depolarized(&ghz(3, std::f64::consts::FRAC_PI_4)?, lit(v))
}
