//! Pure states and density matrices over `n` qubits.
//!
//! Qubits are labelled `1..=n`; qubit 1 is the most significant bit of the
//! basis index, so basis index `k` is the ket `|s_1 s_2 ... s_n>` with `k`
//! written in binary.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qcore::eig::{eig_hermitian, eigenvalues_hermitian};
use crate::qcore::matrix::CMatrix;
use crate::scalar::{lit, re, to_f64, Real};

pub const MAX_QUBITS: usize = 12;

/// Bit position (from the least significant end) of a 1-based qubit label.
#[inline]
pub(crate) fn bit_of(qubit: usize, n: usize) -> usize {
    n - qubit
}

pub(crate) fn check_qubit_count(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::argument("qubit count must be at least 1"));
    }
    if n > MAX_QUBITS {
        return Err(Error::Capacity(format!(
            "{n} qubits exceeds the supported maximum of {MAX_QUBITS}"
        )));
    }
    Ok(())
}

fn qubits_for_dim(dim: usize) -> Result<usize> {
    if dim < 2 || !dim.is_power_of_two() {
        return Err(Error::validation(format!(
            "dimension {dim} is not a power of two >= 2"
        )));
    }
    let n = dim.trailing_zeros() as usize;
    check_qubit_count(n)?;
    Ok(n)
}

/// Validated, ordered list of kept qubits plus the scatter tables mapping
/// kept/traced sub-indices to full basis offsets.
struct TraceLayout {
    kept_offsets: Vec<usize>,
    traced_offsets: Vec<usize>,
}

impl TraceLayout {
    fn new(n: usize, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::argument("keep set must be non-empty"));
        }
        let mut seen = vec![false; n + 1];
        for &q in keep {
            if q == 0 || q > n {
                return Err(Error::argument(format!(
                    "qubit index {q} out of range 1..={n}"
                )));
            }
            if seen[q] {
                return Err(Error::argument(format!("qubit index {q} repeated")));
            }
            seen[q] = true;
        }
        let traced: Vec<usize> = (1..=n).filter(|&q| !seen[q]).collect();
        Ok(TraceLayout {
            kept_offsets: scatter_table(n, keep),
            traced_offsets: scatter_table(n, &traced),
        })
    }
}

/// `table[r]` places the bits of `r` onto the listed qubits, first listed
/// qubit receiving the most significant bit of `r`.
fn scatter_table(n: usize, qubits: &[usize]) -> Vec<usize> {
    let k = qubits.len();
    (0..1usize << k)
        .map(|r| {
            qubits.iter().enumerate().fold(0, |acc, (m, &q)| {
                let bit = (r >> (k - 1 - m)) & 1;
                acc | (bit << bit_of(q, n))
            })
        })
        .collect()
}

/// Common surface of pure and mixed states used by the energy routines.
pub trait QubitState<T: Real> {
    fn num_qubits(&self) -> usize;

    /// Reduced density matrix on `keep` (1-based labels, order preserved).
    fn reduced(&self, keep: &[usize]) -> Result<DensityMatrix<T>>;
}

/// Normalized state vector over `n` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState<T> {
    n: usize,
    amps: Vec<Complex<T>>,
}

impl<T: Real> PureState<T> {
    /// Validates length `2^n` and unit norm.
    pub fn new(n: usize, amps: Vec<Complex<T>>) -> Result<Self> {
        check_qubit_count(n)?;
        if amps.len() != 1 << n {
            return Err(Error::validation(format!(
                "amplitude vector has length {}, expected 2^{n} = {}",
                amps.len(),
                1usize << n
            )));
        }
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::validation("amplitudes must be finite"));
        }
        let norm2: T = amps.iter().map(|z| z.norm_sqr()).sum();
        if (norm2 - T::one()).abs() > T::tolerances().normalization {
            return Err(Error::validation(format!(
                "state is not normalized: sum |amp|^2 = {}",
                to_f64(norm2)
            )));
        }
        Ok(PureState { n, amps })
    }

    /// Rescales to unit norm before validating.
    pub fn normalized(n: usize, mut amps: Vec<Complex<T>>) -> Result<Self> {
        let norm: T = amps.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        if norm.is_zero() || !norm.is_finite() {
            return Err(Error::validation(
                "cannot normalize a zero or non-finite vector",
            ));
        }
        for z in &mut amps {
            *z /= norm;
        }
        Self::new(n, amps)
    }

    /// Computational basis state `|index>`.
    pub fn basis(n: usize, index: usize) -> Result<Self> {
        check_qubit_count(n)?;
        if index >= 1 << n {
            return Err(Error::argument(format!(
                "basis index {index} out of range for {n} qubits"
            )));
        }
        let mut amps = vec![Complex::zero(); 1 << n];
        amps[index] = re(T::one());
        Ok(PureState { n, amps })
    }

    /// Basis state from a bit string such as `"010"` (qubit 1 first).
    pub fn from_bits(bits: &str) -> Result<Self> {
        let n = bits.len();
        let index = bits.chars().try_fold(0usize, |acc, ch| match ch {
            '0' => Ok(acc << 1),
            '1' => Ok((acc << 1) | 1),
            other => Err(Error::argument(format!(
                "invalid bit '{other}' in \"{bits}\""
            ))),
        })?;
        Self::basis(n, index)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        check_qubit_count(n)?;
        let mut amps = Vec::with_capacity(1 << n);
        for &a in &self.amps {
            amps.extend(other.amps.iter().map(|&b| a * b));
        }
        Ok(PureState { n, amps })
    }

    /// `|psi><psi|`.
    pub fn to_density(&self) -> DensityMatrix<T> {
        DensityMatrix {
            n: self.n,
            m: CMatrix::outer(&self.amps, &self.amps),
        }
    }

    /// Applies a 2x2 operator to one qubit in place (no renormalization).
    pub(crate) fn apply_local_unnormalized(&mut self, qubit: usize, g: &[[Complex<T>; 2]; 2]) {
        let stride = 1usize << bit_of(qubit, self.n);
        for base in 0..self.amps.len() {
            if base & stride != 0 {
                continue;
            }
            let a0 = self.amps[base];
            let a1 = self.amps[base | stride];
            self.amps[base] = g[0][0] * a0 + g[0][1] * a1;
            self.amps[base | stride] = g[1][0] * a0 + g[1][1] * a1;
        }
    }

    pub(crate) fn into_amps(self) -> Vec<Complex<T>> {
        self.amps
    }
}

impl<T: Real> QubitState<T> for PureState<T> {
    fn num_qubits(&self) -> usize {
        self.n
    }

    fn reduced(&self, keep: &[usize]) -> Result<DensityMatrix<T>> {
        let layout = TraceLayout::new(self.n, keep)?;
        let d = layout.kept_offsets.len();
        let mut m = CMatrix::zeros(d, d);
        for (r, &ro) in layout.kept_offsets.iter().enumerate() {
            for (c, &co) in layout.kept_offsets.iter().enumerate().skip(r) {
                let v: Complex<T> = layout
                    .traced_offsets
                    .iter()
                    .map(|&t| self.amps[ro | t] * self.amps[co | t].conj())
                    .sum();
                m[(r, c)] = v;
                m[(c, r)] = v.conj();
            }
            m[(r, r)] = re(m[(r, r)].re);
        }
        Ok(DensityMatrix { n: keep.len(), m })
    }
}

/// Hermitian, positive semidefinite, unit-trace matrix on `n` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T> {
    n: usize,
    m: CMatrix<T>,
}

impl<T: Real> DensityMatrix<T> {
    /// Validates hermiticity, unit trace and positivity.
    pub fn new(m: CMatrix<T>) -> Result<Self> {
        let tol = T::tolerances();
        if !m.is_square() {
            return Err(Error::validation(format!(
                "density matrix must be square, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let n = qubits_for_dim(m.rows())?;
        let defect = m.hermiticity_defect();
        if defect > tol.hermitian {
            return Err(Error::validation(format!(
                "density matrix is not Hermitian: max |M - M^dagger| = {:e}",
                to_f64(defect)
            )));
        }
        let tr = m.trace().re;
        if (tr - T::one()).abs() > tol.normalization {
            return Err(Error::validation(format!(
                "density matrix trace is {}, expected 1 (normalization)",
                to_f64(tr)
            )));
        }
        let lowest = eigenvalues_hermitian(&m)?[0];
        if lowest < -tol.psd {
            return Err(Error::validation(format!(
                "density matrix is not positive semidefinite: eigenvalue {:e}",
                to_f64(lowest)
            )));
        }
        Ok(DensityMatrix { n, m })
    }

    /// Maximally mixed state on `n` qubits.
    pub fn maximally_mixed(n: usize) -> Result<Self> {
        check_qubit_count(n)?;
        let dim = 1usize << n;
        let p = T::one() / lit::<T>(dim as f64);
        Ok(DensityMatrix {
            n,
            m: CMatrix::from_diagonal(&vec![p; dim]),
        })
    }

    /// `(1 - p) |psi><psi| + p I / 2^n`.
    pub fn depolarized(psi: &PureState<T>, p: T) -> Result<Self> {
        if !(p >= T::zero() && p <= T::one()) {
            return Err(Error::validation(format!(
                "noise weight {} outside [0, 1]",
                to_f64(p)
            )));
        }
        let pure = psi.to_density().m.scale(re(T::one() - p));
        let mixed = DensityMatrix::maximally_mixed(psi.n())?.m.scale(re(p));
        Ok(DensityMatrix {
            n: psi.n(),
            m: pure.add(&mixed)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.m
    }

    pub fn into_matrix(self) -> CMatrix<T> {
        self.m
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        check_qubit_count(n)?;
        Ok(DensityMatrix {
            n,
            m: self.m.kron(&other.m),
        })
    }

    /// Partial trace keeping `keep` (1-based labels, order preserved).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<Self> {
        let layout = TraceLayout::new(self.n, keep)?;
        let d = layout.kept_offsets.len();
        let mut out = CMatrix::zeros(d, d);
        for (r, &ro) in layout.kept_offsets.iter().enumerate() {
            for (c, &co) in layout.kept_offsets.iter().enumerate() {
                out[(r, c)] = layout
                    .traced_offsets
                    .iter()
                    .map(|&t| self.m[(ro | t, co | t)])
                    .sum();
            }
        }
        Ok(DensityMatrix {
            n: keep.len(),
            m: out,
        })
    }

    /// Eigenvalues, ascending.
    pub fn spectrum(&self) -> Result<Vec<T>> {
        eigenvalues_hermitian(&self.m)
    }

    /// Von Neumann entropy in bits.
    pub fn entropy(&self) -> Result<T> {
        von_neumann_entropy(self)
    }

    #[cfg(test)]
    pub(crate) fn from_matrix_unchecked(n: usize, m: CMatrix<T>) -> Self {
        DensityMatrix { n, m }
    }
}

impl<T: Real> QubitState<T> for DensityMatrix<T> {
    fn num_qubits(&self) -> usize {
        self.n
    }

    fn reduced(&self, keep: &[usize]) -> Result<DensityMatrix<T>> {
        self.partial_trace(keep)
    }
}

/// `-sum lambda log2 lambda`, with `0 log 0 = 0` and eigenvalues in
/// `[-psd, 0)` clamped to zero.
pub fn von_neumann_entropy<T: Real>(rho: &DensityMatrix<T>) -> Result<T> {
    let tol = T::tolerances();
    let spectrum = eig_hermitian(rho.matrix(), false)?.eigenvalues;
    let mut s = T::zero();
    for lambda in spectrum {
        if lambda < -tol.psd {
            return Err(Error::validation(format!(
                "negative eigenvalue {:e} in entropy input",
                to_f64(lambda)
            )));
        }
        if lambda > T::zero() {
            s -= lambda * lambda.log2();
        }
    }
    Ok(s.max(T::zero()))
}
