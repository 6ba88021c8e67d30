//! Three-qubit SLOCC classification from EMPS vectors.
//!
//! The GHZ polytope is `{0 <= E_i <= 1/2} ∩ {polygon inequalities}`; the W
//! polytope additionally satisfies `E_1 + E_2 + E_3 <= 1`. Inside the W
//! polytope with `eta > 0` the EMPS data cannot tell W from GHZ, so such
//! states are reported as "W-or-GHZ region" rather than as W.

use std::fmt;

use serde::Serialize;

use crate::emps::{emps_vector, EmpsVector};
use crate::error::{Error, Result};
use crate::qcore::state::PureState;
use crate::scalar::{lit, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    FullySeparable,
    /// Qubit `cut` factors out of a two-qubit entangled pair.
    Biseparable {
        cut: usize,
    },
    /// Genuinely entangled and compatible with the W polytope; GHZ states
    /// can also land here.
    WClass,
    /// Certified by violation of the W facet.
    GhzClass,
    Undetermined,
}

impl Verdict {
    pub fn is_genuinely_entangled(&self) -> bool {
        matches!(self, Verdict::WClass | Verdict::GhzClass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::FullySeparable => write!(f, "fully separable"),
            Verdict::Biseparable { cut } => write!(f, "biseparable (qubit {cut} factored)"),
            Verdict::WClass => write!(f, "W-or-GHZ region, genuinely entangled"),
            Verdict::GhzClass => write!(f, "GHZ class"),
            Verdict::Undetermined => write!(f, "undetermined"),
        }
    }
}

/// One inequality evaluated on an EMPS vector. `slack >= 0` means the
/// inequality as named holds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evidence<T> {
    pub facet: String,
    pub value: T,
    pub threshold: T,
    pub slack: T,
}

impl<T: Real> Evidence<T> {
    fn at_most(facet: impl Into<String>, value: T, threshold: T) -> Self {
        Evidence {
            facet: facet.into(),
            value,
            threshold,
            slack: threshold - value,
        }
    }

    fn at_least(facet: impl Into<String>, value: T, threshold: T) -> Self {
        Evidence {
            facet: facet.into(),
            value,
            threshold,
            slack: value - threshold,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassLabel<T> {
    pub verdict: Verdict,
    pub emps: EmpsVector<T>,
    pub total: T,
    pub eta: T,
    pub evidence: Vec<Evidence<T>>,
}

/// Classifies a pure three-qubit state from its EMPS vector.
pub fn classify_three_qubit<T: Real>(psi: &PureState<T>) -> Result<ClassLabel<T>> {
    if psi.n() != 3 {
        return Err(Error::argument(format!(
            "three-qubit classification needs n = 3, got {}",
            psi.n()
        )));
    }
    classify_emps(emps_vector(psi)?)
}

/// Verdict rules applied to a three-component EMPS vector.
pub fn classify_emps<T: Real>(emps: EmpsVector<T>) -> Result<ClassLabel<T>> {
    if emps.n() != 3 {
        return Err(Error::argument(format!(
            "three-qubit classification needs 3 EMPS values, got {}",
            emps.n()
        )));
    }
    let tol = T::tolerances().slack;
    let v = emps.values().to_vec();
    let total = emps.total();
    let eta = emps.eta()?;

    let mut evidence = vec![
        Evidence::at_most("w_facet: E1+E2+E3 <= 1", total, T::one()),
        Evidence::at_least("eta > 0", eta, T::zero()),
    ];
    for (i, &e) in v.iter().enumerate() {
        evidence.push(Evidence::at_most(format!("E{} = 0", i + 1), e, T::zero()));
    }

    let zeros: Vec<usize> = (0..3).filter(|&i| v[i] <= tol).collect();
    let verdict = if zeros.len() == 3 {
        Verdict::FullySeparable
    } else if eta > tol {
        if total > T::one() + tol {
            Verdict::GhzClass
        } else {
            Verdict::WClass
        }
    } else if zeros.len() == 1 {
        let cut = zeros[0];
        let others: Vec<usize> = (0..3).filter(|&j| j != cut).collect();
        let gap = (v[others[0]] - v[others[1]]).abs();
        evidence.push(Evidence::at_most(
            format!("E{} = E{}", others[0] + 1, others[1] + 1),
            gap,
            T::zero(),
        ));
        if gap <= tol {
            Verdict::Biseparable { cut: cut + 1 }
        } else {
            Verdict::Undetermined
        }
    } else {
        Verdict::Undetermined
    };

    Ok(ClassLabel {
        verdict,
        emps,
        total,
        eta,
        evidence,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PolytopeClass {
    W,
    Ghz,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Membership<T> {
    pub class: PolytopeClass,
    pub inside: bool,
    pub facets: Vec<Evidence<T>>,
}

impl<T: Real> Membership<T> {
    pub fn min_slack(&self) -> T {
        self.facets
            .iter()
            .map(|f| f.slack)
            .fold(T::infinity(), T::min)
    }
}

/// Facet-by-facet membership test of a three-qubit EMPS point.
pub fn polytope_membership_3q<T: Real>(
    v: &EmpsVector<T>,
    class: PolytopeClass,
) -> Result<Membership<T>> {
    if v.n() != 3 {
        return Err(Error::argument(format!(
            "polytope membership is defined for 3 qubits, got {}",
            v.n()
        )));
    }
    let half = lit::<T>(0.5);
    let e = v.values();
    let mut facets = Vec::with_capacity(10);
    for (i, &x) in e.iter().enumerate() {
        facets.push(Evidence::at_least(format!("E{} >= 0", i + 1), x, T::zero()));
        facets.push(Evidence::at_most(format!("E{} <= 1/2", i + 1), x, half));
    }
    for (i, slack) in v.polygon_slacks().into_iter().enumerate() {
        facets.push(Evidence {
            facet: format!("polygon: E{} <= sum of others", i + 1),
            value: e[i],
            threshold: e[i] + slack,
            slack,
        });
    }
    if class == PolytopeClass::W {
        facets.push(Evidence::at_most(
            "w_facet: E1+E2+E3 <= 1",
            v.total(),
            T::one(),
        ));
    }
    let tol = T::tolerances().slack;
    let inside = facets.iter().all(|f| f.slack >= -tol);
    Ok(Membership {
        class,
        inside,
        facets,
    })
}
