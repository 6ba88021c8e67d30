//! Cyclic Jacobi eigendecomposition for dense Hermitian matrices.
//!
//! Each pivot `(p, q)` is annihilated by a unitary `U = D R`, where
//! `D = diag(1, e^{-i phi})` rotates the phase of `a_pq` onto the real axis
//! and `R` is the classical real Jacobi rotation. Sweeps run over all
//! pivots in row order until the off-diagonal Frobenius norm falls below
//! `tol * max(1, ||M||_F)`.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qcore::matrix::CMatrix;
use crate::scalar::{re, to_f64, Real};

pub const MAX_SWEEPS: usize = 100;

/// Real spectrum of a Hermitian matrix, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    pub eigenvalues: Vec<T>,
    /// Unitary whose columns are the eigenvectors, in eigenvalue order.
    pub eigenvectors: Option<CMatrix<T>>,
    pub sweeps: usize,
}

impl<T: Real> Spectrum<T> {
    pub fn min(&self) -> T {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> T {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    pub fn sum(&self) -> T {
        self.eigenvalues.iter().copied().sum()
    }

    /// `||M - V diag(lambda) V^dagger||_max`, or `None` without eigenvectors.
    pub fn reconstruction_residual(&self, m: &CMatrix<T>) -> Option<T> {
        let v = self.eigenvectors.as_ref()?;
        let vl = CMatrix::from_fn(v.rows(), v.cols(), |i, j| v[(i, j)] * self.eigenvalues[j]);
        let rebuilt = vl.matmul(&v.adjoint()).ok()?;
        Some(m.max_abs_diff(&rebuilt))
    }
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn eig_hermitian<T: Real>(m: &CMatrix<T>, want_vectors: bool) -> Result<Spectrum<T>> {
    let tol = T::tolerances();
    if !m.is_square() || m.rows() == 0 {
        return Err(Error::argument(format!(
            "eigendecomposition needs a non-empty square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if m.as_slice()
        .iter()
        .any(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        return Err(Error::validation("matrix has non-finite entries"));
    }
    let defect = m.hermiticity_defect();
    if defect > tol.hermitian {
        return Err(Error::validation(format!(
            "matrix is not Hermitian: max |M - M^dagger| = {:e}",
            to_f64(defect)
        )));
    }

    let n = m.rows();
    let mut a = m.clone();
    for i in 0..n {
        a[(i, i)] = re(a[(i, i)].re);
    }
    let mut v = want_vectors.then(|| CMatrix::identity(n));
    let threshold = tol.jacobi * T::one().max(m.frobenius_norm());

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::Numeric {
                message: format!("Jacobi did not converge in {MAX_SWEEPS} sweeps"),
                residual: to_f64(off),
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, v.as_mut(), p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .re
            .partial_cmp(&a[(j, j)].re)
            .expect("finite diagonal")
    });
    let eigenvalues = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = v.map(|v| CMatrix::from_fn(n, n, |i, j| v[(i, order[j])]));
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
        sweeps,
    })
}

/// Eigenvalues only.
pub fn eigenvalues_hermitian<T: Real>(m: &CMatrix<T>) -> Result<Vec<T>> {
    eig_hermitian(m, false).map(|s| s.eigenvalues)
}

fn off_diagonal_norm<T: Real>(a: &CMatrix<T>) -> T {
    let n = a.rows();
    let mut acc = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn rotate<T: Real>(a: &mut CMatrix<T>, v: Option<&mut CMatrix<T>>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r.is_zero() {
        return;
    }
    let phase = apq / r;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let two = T::one() + T::one();

    let theta = (aqq - app) / (two * r);
    let t = if theta.is_infinite() {
        T::zero()
    } else {
        let t = T::one() / (theta.abs() + (theta * theta + T::one()).sqrt());
        if theta < T::zero() {
            -t
        } else {
            t
        }
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;

    // U restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
    let up_q = phase.conj();
    let u_qp = -up_q * s;
    let u_qq = up_q * c;
    let cc = re(c);
    let ss = re(s);

    let n = a.rows();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * cc + akq * u_qp;
        a[(k, q)] = akp * ss + akq * u_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * cc + aqk * u_qp.conj();
        a[(q, k)] = apk * ss + aqk * u_qq.conj();
    }
    a[(p, p)] = re(app - t * r);
    a[(q, q)] = re(aqq + t * r);
    a[(p, q)] = Complex::zero();
    a[(q, p)] = Complex::zero();

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[(k, p)];
            let vkq = v[(k, q)];
            v[(k, p)] = vkp * cc + vkq * u_qp;
            v[(k, q)] = vkp * ss + vkq * u_qq;
        }
    }
}
