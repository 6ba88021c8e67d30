//! Test-only oracles. None of these call into the routines they check.
#![allow(dead_code)]
// index loops mirror the textbook formulas
#![allow(clippy::needless_range_loop)]

use empskit::random::complex_gaussian;
use empskit::{CMatrix, DensityMatrix, C64};
use rand::Rng;

/// Brute-force partial trace: walks every `(i, j)` entry of the full matrix,
/// splits both indices into per-qubit bits and accumulates entries whose
/// traced bits agree.
pub fn partial_trace_oracle(full: &CMatrix<f64>, n: usize, keep: &[usize]) -> CMatrix<f64> {
    let dim = 1usize << n;
    let k = keep.len();
    let mut out = CMatrix::zeros(1 << k, 1 << k);
    let bits = |x: usize| -> Vec<usize> { (0..n).map(|q| (x >> (n - 1 - q)) & 1).collect() };
    for i in 0..dim {
        let bi = bits(i);
        for j in 0..dim {
            let bj = bits(j);
            let traced_agree = (1..=n)
                .filter(|q| !keep.contains(q))
                .all(|q| bi[q - 1] == bj[q - 1]);
            if !traced_agree {
                continue;
            }
            let mut r = 0;
            let mut c = 0;
            for &q in keep {
                r = (r << 1) | bi[q - 1];
                c = (c << 1) | bj[q - 1];
            }
            out[(r, c)] += full[(i, j)];
        }
    }
    out
}

/// Number of eigenvalues of Hermitian `m` strictly below `x`, from the
/// inertia of `m - x I` (Sylvester): count of negative pivots of an
/// unpivoted `LDL^H` elimination.
pub fn count_below(m: &CMatrix<f64>, x: f64) -> usize {
    let n = m.rows();
    let mut a: Vec<Vec<C64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    m[(i, j)]
                        - if i == j {
                            C64::new(x, 0.0)
                        } else {
                            C64::new(0.0, 0.0)
                        }
                })
                .collect()
        })
        .collect();
    let mut negatives = 0;
    for k in 0..n {
        let mut pivot = a[k][k].re;
        if pivot == 0.0 {
            pivot = -1e-300;
        }
        if pivot < 0.0 {
            negatives += 1;
        }
        for i in k + 1..n {
            let factor = a[i][k] / pivot;
            for j in k + 1..n {
                let akj = a[k][j];
                a[i][j] -= factor * akj;
            }
        }
    }
    negatives
}

/// All eigenvalues by bisection on the inertia count, ascending.
pub fn eigenvalues_by_bisection(m: &CMatrix<f64>) -> Vec<f64> {
    let n = m.rows();
    let radius = m.frobenius_norm() + 1.0;
    (0..n)
        .map(|k| {
            let (mut lo, mut hi) = (-radius, radius);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid == lo || mid == hi {
                    break;
                }
                if count_below(m, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

pub fn random_matrix<R: Rng>(dim: usize, rng: &mut R) -> CMatrix<f64> {
    CMatrix::from_fn(dim, dim, |_, _| complex_gaussian(rng))
}

/// `(A + A^H) / 2` of a complex Gaussian matrix.
pub fn random_hermitian<R: Rng>(dim: usize, rng: &mut R) -> CMatrix<f64> {
    let a = random_matrix(dim, rng);
    CMatrix::from_fn(dim, dim, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5)
}

/// `A A^H / tr` of a complex Gaussian matrix.
pub fn random_density<R: Rng>(n: usize, rng: &mut R) -> DensityMatrix<f64> {
    let dim = 1 << n;
    let a = random_matrix(dim, rng);
    let aa = a.matmul(&a.adjoint()).unwrap();
    let tr = aa.trace().re;
    let m = CMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            C64::new(aa[(i, i)].re / tr, 0.0)
        } else if i < j {
            aa[(i, j)] / tr
        } else {
            (aa[(j, i)] / tr).conj()
        }
    });
    DensityMatrix::new(m).unwrap()
}

/// Unitary from modified Gram-Schmidt on the columns of a Gaussian matrix.
pub fn random_unitary<R: Rng>(dim: usize, rng: &mut R) -> CMatrix<f64> {
    let a = random_matrix(dim, rng);
    let mut cols: Vec<Vec<C64>> = (0..dim).map(|j| a.column(j)).collect();
    for j in 0..dim {
        for k in 0..j {
            let proj: C64 = (0..dim).map(|i| cols[k][i].conj() * cols[j][i]).sum();
            for i in 0..dim {
                let v = cols[k][i];
                cols[j][i] -= proj * v;
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut cols[j] {
            *z /= norm;
        }
    }
    CMatrix::from_fn(dim, dim, |i, j| cols[j][i])
}

/// `Tr(U rho U^H H)` computed by explicit matrix products.
pub fn rotated_energy(rho: &CMatrix<f64>, h: &CMatrix<f64>, u: &CMatrix<f64>) -> f64 {
    let rotated = u.matmul(rho).unwrap().matmul(&u.adjoint()).unwrap();
    rotated.matmul(h).unwrap().trace().re
}

/// Binary entropy in bits.
pub fn binary_entropy(p: f64) -> f64 {
    let term = |x: f64| if x > 0.0 { -x * x.log2() } else { 0.0 };
    term(p) + term(1.0 - p)
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
