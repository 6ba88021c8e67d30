//! Empirical sampling of SLOCC orbits.
//!
//! Sample `k` applies `G = g_1 ⊗ ... ⊗ g_n` with every `g_i` a 2x2 matrix of
//! standard complex Gaussians (redrawn while `|det g_i| < 1e-6`), renormalizes
//! `G|psi>` and records its EMPS vector. Sample `k` uses the generator seeded
//! with `seed + k`, so results do not depend on evaluation order.

use num_complex::Complex;

use crate::emps::{emps_vector, EmpsVector};
use crate::error::{Error, Result};
use crate::qcore::state::PureState;
use crate::random::{complex_gaussian, seeded};
use crate::scalar::{lit, Real};

pub const DET_FLOOR: f64 = 1e-6;

fn local_invertible<T: Real, R: rand::Rng + ?Sized>(rng: &mut R) -> [[Complex<T>; 2]; 2] {
    let floor = lit::<T>(DET_FLOOR);
    loop {
        let g: [[Complex<T>; 2]; 2] = [
            [complex_gaussian(rng), complex_gaussian(rng)],
            [complex_gaussian(rng), complex_gaussian(rng)],
        ];
        let det: Complex<T> = g[0][0] * g[1][1] - g[0][1] * g[1][0];
        if det.norm() >= floor {
            return g;
        }
    }
}

/// One random point of the SLOCC orbit of `psi`.
pub fn slocc_sample<T: Real>(psi: &PureState<T>, seed: u64) -> Result<PureState<T>> {
    let mut rng = seeded(seed);
    let mut out = psi.clone();
    for q in 1..=psi.n() {
        let g = local_invertible::<T, _>(&mut rng);
        out.apply_local_unnormalized(q, &g);
    }
    let n = out.n();
    PureState::normalized(n, out.into_amps())
}

pub fn slocc_orbit_sample<T: Real>(
    psi: &PureState<T>,
    count: usize,
    seed: u64,
) -> Result<Vec<EmpsVector<T>>> {
    if count == 0 {
        return Err(Error::argument("orbit sample count must be at least 1"));
    }
    (0..count as u64)
        .map(|k| emps_vector(&slocc_sample(psi, seed.wrapping_add(k))?))
        .collect()
}
