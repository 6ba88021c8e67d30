//! JSON state descriptions.
//!
//! Three shapes are accepted:
//!
//! ```text
//! {"n": 3, "amps": [[re, im], ...]}                 pure state, 2^n amplitudes
//! {"dim": 4, "entries": [[re, im], ...]}            density matrix, row-major
//! {"builder": "ghz", "params": {"n": 3, "theta": 0.5}}
//! ```

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::classify::builders::{build_state, State, StateBuilderSpec};
use crate::error::Result;
use crate::qcore::matrix::CMatrix;
use crate::qcore::state::{DensityMatrix, PureState};
use crate::scalar::{lit, to_f64, Real};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateFile {
    Amplitudes { n: usize, amps: Vec<[f64; 2]> },
    Density { dim: usize, entries: Vec<[f64; 2]> },
    Builder(StateBuilderSpec),
}

fn to_complex<T: Real>(pairs: &[[f64; 2]]) -> Vec<Complex<T>> {
    pairs
        .iter()
        .map(|&[a, b]| Complex::new(lit(a), lit(b)))
        .collect()
}

fn to_pairs<T: Real>(zs: &[Complex<T>]) -> Vec<[f64; 2]> {
    zs.iter().map(|z| [to_f64(z.re), to_f64(z.im)]).collect()
}

impl StateFile {
    /// Validates and materializes the described state.
    pub fn into_state<T: Real>(&self) -> Result<State<T>> {
        match self {
            StateFile::Amplitudes { n, amps } => Ok(PureState::new(*n, to_complex(amps))?.into()),
            StateFile::Density { dim, entries } => {
                let m = CMatrix::from_row_major(*dim, *dim, to_complex(entries))?;
                Ok(DensityMatrix::new(m)?.into())
            }
            StateFile::Builder(spec) => build_state(spec),
        }
    }

    pub fn from_pure<T: Real>(psi: &PureState<T>) -> Self {
        StateFile::Amplitudes {
            n: psi.n(),
            amps: to_pairs(psi.amps()),
        }
    }

    pub fn from_density<T: Real>(rho: &DensityMatrix<T>) -> Self {
        StateFile::Density {
            dim: rho.dim(),
            entries: to_pairs(rho.matrix().as_slice()),
        }
    }

    pub fn from_state<T: Real>(state: &State<T>) -> Self {
        match state {
            State::Pure(p) => Self::from_pure(p),
            State::Mixed(m) => Self::from_density(m),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn parses_all_three_shapes() {
        let amps: StateFile =
            serde_json::from_str(r#"{"n": 1, "amps": [[0.6, 0], [0, 0.8]]}"#).unwrap();
        assert!(matches!(amps.into_state::<f64>().unwrap(), State::Pure(_)));

        let dm: StateFile =
            serde_json::from_str(r#"{"dim": 2, "entries": [[0.3,0],[0,0],[0,0],[0.7,0]]}"#)
                .unwrap();
        assert!(matches!(dm.into_state::<f64>().unwrap(), State::Mixed(_)));

        let b: StateFile =
            serde_json::from_str(r#"{"builder": "dicke", "params": {"n": 4, "l": 2}}"#).unwrap();
        assert_eq!(b.into_state::<f64>().unwrap().as_pure().unwrap().n(), 4);
    }

    #[test]
    fn unnormalized_amplitudes_are_rejected() {
        let f: StateFile = serde_json::from_str(r#"{"n": 1, "amps": [[1, 0], [1, 0]]}"#).unwrap();
        let err = f.into_state::<f64>().unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
        assert!(err.to_string().contains("normalized"));
    }

    #[test]
    fn round_trip_is_exact() {
        let psi = crate::random::haar_state::<f64, _>(3, &mut crate::random::seeded(5)).unwrap();
        let text = serde_json::to_string(&StateFile::from_pure(&psi)).unwrap();
        let back: StateFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_state::<f64>().unwrap().as_pure().unwrap(), &psi);
    }
}
