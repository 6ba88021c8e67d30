//! Seedable random states.
//!
//! Haar-random pure states are normalized vectors of i.i.d. standard
//! complex Gaussians (real and imaginary parts independent N(0, 1)).

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::Result;
use crate::qcore::state::{check_qubit_count, PureState};
use crate::scalar::{lit, Real};

pub const DEFAULT_SEED: u64 = 42;

pub type StdRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> StdRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complex_gaussian<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Complex<T> {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(lit(re), lit(im))
}

pub fn haar_state<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<PureState<T>> {
    check_qubit_count(n)?;
    let amps = (0..1usize << n).map(|_| complex_gaussian(rng)).collect();
    PureState::normalized(n, amps)
}

/// `count` Haar-random states; same seed gives the same sequence.
pub fn haar_batch<T: Real>(n: usize, count: usize, seed: u64) -> Result<Vec<PureState<T>>> {
    let mut rng = seeded(seed);
    (0..count).map(|_| haar_state(n, &mut rng)).collect()
}
