//! Exact diagonalization of open Ising chains with optional Pauli-string
//! couplings, and the two genuine-multipartite-entanglement indicators
//! evaluated on their ground states.
//!
//! `H = -J sum_{i<N} s^z_i s^z_{i+1} - h sum_i s^z_i + sum_k c_k P_k` with
//! `s^z = sigma^z / 2` and `P_k` arbitrary Pauli strings.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::emps::eta_indicator;
use crate::error::{Error, Result};
use crate::qcore::eig::eig_hermitian;
use crate::qcore::matrix::CMatrix;
use crate::qcore::state::{bit_of, PureState, QubitState, MAX_QUBITS};
use crate::scalar::{lit, re, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

/// Pauli string, site 1 first, e.g. `"IXXXI"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliString(Vec<Pauli>);

impl PauliString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ops(&self) -> &[Pauli] {
        &self.0
    }

    pub fn has_y(&self) -> bool {
        self.0.contains(&Pauli::Y)
    }

    /// Product of `X` on the listed 1-based sites of an `n`-site chain.
    pub fn x_on(n: usize, sites: &[usize]) -> Self {
        PauliString(
            (1..=n)
                .map(|s| {
                    if sites.contains(&s) {
                        Pauli::X
                    } else {
                        Pauli::I
                    }
                })
                .collect(),
        )
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c.to_ascii_uppercase() {
                'I' => Ok(Pauli::I),
                'X' => Ok(Pauli::X),
                'Y' => Ok(Pauli::Y),
                'Z' => Ok(Pauli::Z),
                other => Err(Error::validation(format!("invalid Pauli letter '{other}'"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(PauliString)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.0 {
            let c = match p {
                Pauli::I => 'I',
                Pauli::X => 'X',
                Pauli::Y => 'Y',
                Pauli::Z => 'Z',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for PauliString {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PauliString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PauliTerm {
    pub coefficient: f64,
    pub string: PauliString,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpinChainSpec {
    #[serde(rename = "N")]
    pub sites: usize,
    #[serde(rename = "J")]
    pub coupling: f64,
    #[serde(rename = "h")]
    pub field: f64,
    #[serde(default)]
    pub extra_terms: Vec<PauliTerm>,
}

impl SpinChainSpec {
    /// Nearest-neighbour Ising chain (diagonal in the computational basis).
    pub fn nearest_neighbour(sites: usize, coupling: f64, field: f64) -> Self {
        SpinChainSpec {
            sites,
            coupling,
            field,
            extra_terms: Vec::new(),
        }
    }

    /// Five-site chain plus the long-range terms
    /// `4 X2X3X4 + 3 X1X3X4X5 + 3 X1X2X4X5`.
    pub fn long_range(coupling: f64, field: f64) -> Self {
        let mut spec = Self::nearest_neighbour(5, coupling, field);
        spec.extra_terms = vec![
            PauliTerm {
                coefficient: 4.0,
                string: PauliString::x_on(5, &[2, 3, 4]),
            },
            PauliTerm {
                coefficient: 3.0,
                string: PauliString::x_on(5, &[1, 3, 4, 5]),
            },
            PauliTerm {
                coefficient: 3.0,
                string: PauliString::x_on(5, &[1, 2, 4, 5]),
            },
        ];
        spec
    }

    pub fn validate(&self) -> Result<()> {
        if !(2..=MAX_QUBITS).contains(&self.sites) {
            return Err(Error::validation(format!(
                "chain length N = {} outside 2..={MAX_QUBITS}",
                self.sites
            )));
        }
        if !self.coupling.is_finite() || !self.field.is_finite() {
            return Err(Error::validation("J and h must be finite"));
        }
        for term in &self.extra_terms {
            if term.string.len() != self.sites {
                return Err(Error::validation(format!(
                    "Pauli string {} has length {}, expected N = {}",
                    term.string,
                    term.string.len(),
                    self.sites
                )));
            }
            if !term.coefficient.is_finite() {
                return Err(Error::validation("Pauli coefficients must be finite"));
            }
        }
        Ok(())
    }
}

/// Dense `2^N x 2^N` Hamiltonian.
pub fn build_hamiltonian<T: Real>(spec: &SpinChainSpec) -> Result<CMatrix<T>> {
    spec.validate()?;
    let n = spec.sites;
    let dim = 1usize << n;
    let coupling: T = lit(spec.coupling);
    let field: T = lit(spec.field);
    let half: T = lit(0.5);
    let spin = |x: usize, site: usize| {
        if (x >> bit_of(site, n)) & 1 == 0 {
            half
        } else {
            -half
        }
    };

    let mut h = CMatrix::zeros(dim, dim);
    for x in 0..dim {
        let mut e = T::zero();
        for i in 1..n {
            e -= coupling * spin(x, i) * spin(x, i + 1);
        }
        for i in 1..=n {
            e -= field * spin(x, i);
        }
        h[(x, x)] = re(e);
    }

    for term in &spec.extra_terms {
        let c: T = lit(term.coefficient);
        for x in 0..dim {
            let mut y = x;
            let mut phase = Complex::new(T::one(), T::zero());
            for (k, op) in term.string.ops().iter().enumerate() {
                let bit = bit_of(k + 1, n);
                let up = (x >> bit) & 1 == 0;
                match op {
                    Pauli::I => {}
                    Pauli::X => y ^= 1 << bit,
                    Pauli::Y => {
                        y ^= 1 << bit;
                        // Y|0> = i|1>, Y|1> = -i|0>
                        phase *= if up { Complex::i() } else { -Complex::i() };
                    }
                    Pauli::Z => {
                        if !up {
                            phase = -phase;
                        }
                    }
                }
            }
            h[(y, x)] += phase * c;
        }
    }
    Ok(h)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroundStateResult<T> {
    pub energy: T,
    pub state: PureState<T>,
    /// `lambda_1 - lambda_0`.
    pub gap: T,
    pub degenerate: bool,
}

/// Lowest eigenpair. The eigenvector phase is fixed so that its
/// largest-modulus amplitude (first one on ties) is real and positive.
pub fn ground_state<T: Real>(h: &CMatrix<T>) -> Result<GroundStateResult<T>> {
    let dim = h.rows();
    if dim < 2 || !dim.is_power_of_two() {
        return Err(Error::argument(format!(
            "Hamiltonian dimension {dim} is not a power of two >= 2"
        )));
    }
    let spectrum = eig_hermitian(h, true)?;
    let vectors = spectrum
        .eigenvectors
        .as_ref()
        .expect("eigenvectors requested");
    let mut amps = vectors.column(0);

    let mut pivot = 0;
    for (k, a) in amps.iter().enumerate() {
        if a.norm() > amps[pivot].norm() {
            pivot = k;
        }
    }
    let p = amps[pivot];
    if !p.is_zero() {
        let rot = p.conj() / p.norm();
        for a in &mut amps {
            *a *= rot;
        }
        amps[pivot] = re(amps[pivot].norm());
    }

    let n = dim.trailing_zeros() as usize;
    let state = PureState::normalized(n, amps)?;
    let energy = spectrum.eigenvalues[0];
    let gap = spectrum.eigenvalues[1] - energy;
    Ok(GroundStateResult {
        energy,
        state,
        gap,
        degenerate: gap < T::tolerances().degeneracy,
    })
}

/// `min_{i<j} |S(rho_ij) - S(rho_i) - S(rho_j)|` in bits.
pub fn entropy_criterion<T: Real>(psi: &PureState<T>) -> Result<T> {
    let n = psi.n();
    if n < 3 {
        return Err(Error::argument(format!(
            "entropy criterion needs at least 3 qubits, got {n}"
        )));
    }
    let singles = (1..=n)
        .map(|i| psi.reduced(&[i])?.entropy())
        .collect::<Result<Vec<T>>>()?;
    let mut best = T::infinity();
    for i in 1..=n {
        for j in i + 1..=n {
            let pair = psi.reduced(&[i, j])?.entropy()?;
            best = best.min((pair - singles[i - 1] - singles[j - 1]).abs());
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepParameter {
    Coupling,
    Field,
    /// Coefficient of `extra_terms[index]`.
    Coefficient(usize),
}

impl FromStr for SweepParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "J" | "j" | "coupling" => Ok(SweepParameter::Coupling),
            "h" | "field" => Ok(SweepParameter::Field),
            other => other
                .strip_prefix("coeff:")
                .or_else(|| other.strip_prefix("coefficient:"))
                .and_then(|k| k.parse().ok())
                .map(SweepParameter::Coefficient)
                .ok_or_else(|| {
                    Error::argument(format!(
                        "unknown sweep parameter '{other}' (use J, h or coeff:<index>)"
                    ))
                }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow<T> {
    pub parameter: f64,
    pub ground_energy: T,
    pub gap: T,
    pub eta_over_e: T,
    pub entropy_criterion: T,
    /// Indicator values are not meaningful when set.
    pub degenerate: bool,
}

pub fn evaluate_chain<T: Real>(spec: &SpinChainSpec) -> Result<(GroundStateResult<T>, T, T)> {
    let h = build_hamiltonian::<T>(spec)?;
    let ground = ground_state(&h)?;
    let eta = eta_indicator(&ground.state)?;
    let entropy = entropy_criterion(&ground.state)?;
    Ok((ground, eta, entropy))
}

pub fn indicator_sweep<T: Real>(
    template: &SpinChainSpec,
    parameter: SweepParameter,
    values: &[f64],
) -> Result<Vec<SweepRow<T>>> {
    if let SweepParameter::Coefficient(k) = parameter {
        if k >= template.extra_terms.len() {
            return Err(Error::argument(format!(
                "coefficient index {k} out of range ({} extra terms)",
                template.extra_terms.len()
            )));
        }
    }
    values
        .iter()
        .map(|&value| {
            if !value.is_finite() {
                return Err(Error::argument(format!(
                    "sweep value {value} is not finite"
                )));
            }
            let mut spec = template.clone();
            match parameter {
                SweepParameter::Coupling => spec.coupling = value,
                SweepParameter::Field => spec.field = value,
                SweepParameter::Coefficient(k) => spec.extra_terms[k].coefficient = value,
            }
            let (ground, eta, entropy) = evaluate_chain::<T>(&spec)?;
            Ok(SweepRow {
                parameter: value,
                ground_energy: ground.energy,
                gap: ground.gap,
                eta_over_e: eta,
                entropy_criterion: entropy,
                degenerate: ground.degenerate,
            })
        })
        .collect()
}

/// Max `|(H psi - E psi)_k|`.
pub fn eigen_residual<T: Real>(h: &CMatrix<T>, ground: &GroundStateResult<T>) -> Result<T> {
    let hv = h.mul_vec(ground.state.amps())?;
    Ok(hv
        .iter()
        .zip(ground.state.amps())
        .map(|(&a, &b)| (a - b * ground.energy).norm())
        .fold(T::zero(), T::max))
}
