//! Scalar abstraction.
//!
//! Every numeric routine in the crate is generic over [`Real`], implemented
//! for `f32` and `f64`. Complex entries are `num_complex::Complex<T>`.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Numerical thresholds used for validation and verdicts.
///
/// The `f64` values are the reference ones; `f32` gets looser values scaled
/// to its precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances<T> {
    /// Max `|M - M^dagger|` entry accepted as Hermitian.
    pub hermitian: T,
    /// Allowed deviation of a norm or trace from 1.
    pub normalization: T,
    /// Eigenvalues down to `-psd` are accepted and clamped to zero.
    pub psd: T,
    /// Slack for inequality verdicts and zero tests on EMPS values.
    pub slack: T,
    /// Off-diagonal Frobenius norm at which Jacobi sweeps stop.
    pub jacobi: T,
    /// Spectral gap under which a ground state is flagged degenerate.
    pub degeneracy: T,
}

pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    fn tolerances() -> Tolerances<Self>;
}

impl Real for f64 {
    fn tolerances() -> Tolerances<f64> {
        Tolerances {
            hermitian: 1e-12,
            normalization: 1e-10,
            psd: 1e-10,
            slack: 1e-9,
            jacobi: 1e-12,
            degeneracy: 1e-8,
        }
    }
}

impl Real for f32 {
    fn tolerances() -> Tolerances<f32> {
        Tolerances {
            hermitian: 1e-5,
            normalization: 1e-5,
            psd: 1e-5,
            slack: 1e-4,
            jacobi: 1e-6,
            degeneracy: 1e-4,
        }
    }
}

/// Converts an `f64` literal into `T`.
#[inline]
pub(crate) fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 literal representable in scalar type")
}

#[inline]
pub(crate) fn re<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

#[inline]
pub(crate) fn to_f64<T: Real>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
