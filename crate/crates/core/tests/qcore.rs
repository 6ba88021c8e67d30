mod common;

use common::*;
use empskit::classify::{dicke, noisy_w};
use empskit::random::{haar_state, seeded};
use empskit::{
    eig_hermitian, partial_trace, von_neumann_entropy, CMatrix, DensityMatrix, PureState,
    QubitState,
};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn keep_first_two_of_random_four_qubit_state() {
    let mut rng = seeded(3);
    let psi = haar_state::<f64, _>(4, &mut rng).unwrap();
    let rho = psi.to_density();
    let expected = partial_trace_oracle(rho.matrix(), 4, &[1, 2]);
    let got = partial_trace(&rho, &[1, 2]).unwrap();
    assert!(got.matrix().max_abs_diff(&expected) < 1e-14);
    let via_pure = psi.reduced(&[1, 2]).unwrap();
    assert!(via_pure.matrix().max_abs_diff(&expected) < 1e-14);
}

#[test]
fn ghz_single_qubit_marginal_is_maximally_mixed() {
    let g = empskit::classify::ghz::<f64>(3, std::f64::consts::FRAC_PI_4).unwrap();
    let r = partial_trace(&g.to_density(), &[1]).unwrap();
    assert!(
        r.matrix()
            .max_abs_diff(&CMatrix::from_diagonal(&[0.5, 0.5]))
            < 1e-15
    );
}

#[test]
fn noisy_w_marginal_spectrum() {
    let v1 = 0.2;
    let r = noisy_w::<f64>(v1).unwrap().partial_trace(&[2]).unwrap();
    let s = eig_hermitian(r.matrix(), false).unwrap().eigenvalues;
    assert!(close(s[0], (2.0 + v1) / 6.0, 1e-12));
    assert!(close(s[1], (4.0 - v1) / 6.0, 1e-12));
    assert!(close(s[0], 0.366_666_666_666_666_7, 1e-12));
}

#[test]
fn eig_matches_bisection_oracle_on_random_hermitian() {
    let mut rng = seeded(11);
    for _ in 0..20 {
        let m = random_hermitian(8, &mut rng);
        let want = eigenvalues_by_bisection(&m);
        let got = eig_hermitian(&m, true).unwrap();
        for (g, w) in got.eigenvalues.iter().zip(&want) {
            assert!(close(*g, *w, 1e-8), "{g} vs {w}");
        }
        assert!(got.reconstruction_residual(&m).unwrap() < 1e-9);
    }
}

#[test]
fn w_marginal_entropy_is_binary_entropy_of_one_third() {
    let w = dicke::<f64>(3, 1).unwrap();
    let s = von_neumann_entropy(&w.reduced(&[1]).unwrap()).unwrap();
    let oracle = binary_entropy(1.0 / 3.0);
    assert!(close(s, oracle, 1e-12));
    assert!(close(s, 0.918296, 1e-6));
}

#[test]
fn eigenvectors_are_unitary() {
    let mut rng = seeded(2);
    let m = random_hermitian(6, &mut rng);
    let v = eig_hermitian(&m, true).unwrap().eigenvectors.unwrap();
    let id = v.adjoint().matmul(&v).unwrap();
    assert!(id.max_abs_diff(&CMatrix::identity(6)) < 1e-12);
}

fn subsets(n: usize, rng: &mut impl Rng) -> (Vec<usize>, Vec<usize>) {
    // two disjoint, non-exhaustive traced sets
    loop {
        let labels: Vec<u8> = (0..n).map(|_| rng.random_range(0..3)).collect();
        let s: Vec<usize> = (1..=n).filter(|&q| labels[q - 1] == 1).collect();
        let t: Vec<usize> = (1..=n).filter(|&q| labels[q - 1] == 2).collect();
        if !s.is_empty() && !t.is_empty() && s.len() + t.len() < n {
            return (s, t);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partial_trace_composes(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let rho = haar_state::<f64, _>(5, &mut rng).unwrap().to_density();
        let (s, t) = subsets(5, &mut rng);
        let keep_after_s: Vec<usize> = (1..=5).filter(|q| !s.contains(q)).collect();
        let first = rho.partial_trace(&keep_after_s).unwrap();
        // relabel: position in keep_after_s is the new 1-based label
        let keep_final: Vec<usize> = keep_after_s
            .iter()
            .enumerate()
            .filter(|(_, q)| !t.contains(q))
            .map(|(pos, _)| pos + 1)
            .collect();
        let two_step = first.partial_trace(&keep_final).unwrap();
        let direct_keep: Vec<usize> = (1..=5).filter(|q| !s.contains(q) && !t.contains(q)).collect();
        let direct = rho.partial_trace(&direct_keep).unwrap();
        prop_assert!(two_step.matrix().max_abs_diff(direct.matrix()) < 1e-12);
    }

    #[test]
    fn spectrum_sums_to_trace(seed in any::<u64>(), dim in 1usize..10) {
        let mut rng = seeded(seed);
        let m = random_hermitian(dim, &mut rng);
        let s = eig_hermitian(&m, true).unwrap();
        prop_assert!((s.sum() - m.trace().re).abs() < 1e-10);
        prop_assert!(s.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(s.reconstruction_residual(&m).unwrap() < 1e-9);
    }

    #[test]
    fn bipartition_marginals_share_nonzero_spectrum(seed in any::<u64>(), n in 2usize..6, cut in 1usize..5) {
        let cut = 1 + cut % (n - 1);
        let psi = haar_state::<f64, _>(n, &mut seeded(seed)).unwrap();
        let left: Vec<usize> = (1..=cut).collect();
        let right: Vec<usize> = (cut + 1..=n).collect();
        let mut a = psi.reduced(&left).unwrap().spectrum().unwrap();
        let mut b = psi.reduced(&right).unwrap().spectrum().unwrap();
        a.reverse();
        b.reverse();
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() < 1e-9);
        }
        // the longer spectrum's remainder vanishes
        for z in a.iter().skip(b.len()).chain(b.iter().skip(a.len())) {
            prop_assert!(z.abs() < 1e-9);
        }
    }

    #[test]
    fn entropy_is_additive_on_products(seed in any::<u64>(), na in 1usize..3, nb in 1usize..3) {
        let mut rng = seeded(seed);
        let a = random_density(na, &mut rng);
        let b = random_density(nb, &mut rng);
        let sa = von_neumann_entropy(&a).unwrap();
        let sb = von_neumann_entropy(&b).unwrap();
        let sab = von_neumann_entropy(&a.tensor(&b).unwrap()).unwrap();
        prop_assert!((sab - sa - sb).abs() < 1e-9);
    }
}

#[test]
fn single_precision_pipeline() {
    let psi = haar_state::<f32, _>(3, &mut seeded(1)).unwrap();
    let rho: DensityMatrix<f32> = psi.to_density();
    let r = rho.partial_trace(&[1, 3]).unwrap();
    assert!((r.matrix().trace().re - 1.0).abs() < 1e-5);
    assert!(von_neumann_entropy(&r).unwrap() >= 0.0);
    let _ = PureState::<f32>::from_bits("01").unwrap();
}
