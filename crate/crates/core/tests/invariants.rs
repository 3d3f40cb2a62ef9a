use ntangle::measures::{
    i_star, odd_invariant, r_tangle, residuals, tau, tau_even_with, tau_odd_with,
};
use ntangle::state::qsv;
use ntangle::state::random::{random_operator, random_state, rng_from_seed, OperatorKind};
use ntangle::{LocalOperator, QubitPermutation, StateVector, Strategy};
use num_complex::Complex64;
use proptest::prelude::*;

const TOL: f64 = 1e-9;

fn operators(n: usize, kind: OperatorKind, seed: u64) -> Vec<LocalOperator> {
    (0..n as u64)
        .map(|k| random_operator(kind, seed ^ (k << 32)))
        .collect()
}

fn det_product(ops: &[LocalOperator]) -> Complex64 {
    ops.iter().map(LocalOperator::det).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tau_lies_in_unit_interval(n in 2usize..=8, seed: u64) {
        let value = tau(&random_state(n, seed).unwrap()).unwrap().value;
        prop_assert!((-TOL..=1.0 + TOL).contains(&value), "tau = {value}");
    }

    #[test]
    fn tau_is_local_unitary_invariant(n in 2usize..=7, seed: u64) {
        let psi = random_state(n, seed).unwrap();
        let moved = psi.apply_local(&operators(n, OperatorKind::Unitary, seed)).unwrap();
        let (a, b) = (tau(&psi).unwrap().value, tau(&moved).unwrap().value);
        prop_assert!((a - b).abs() < TOL, "{a} vs {b}");
    }

    #[test]
    fn even_invariant_scales_by_determinants(half in 1usize..=4, seed: u64) {
        let n = 2 * half;
        let psi = random_state(n, seed).unwrap();
        let ops = operators(n, OperatorKind::General, seed.wrapping_add(1));
        let moved = psi.apply_local(&ops).unwrap();
        let predicted = det_product(&ops) * i_star(&psi).unwrap().value;
        let got = i_star(&moved).unwrap().value;
        let scale = predicted.norm().max(moved.norm_sqr());
        prop_assert!((got - predicted).norm() <= TOL * scale);
    }

    #[test]
    fn odd_invariant_scales_by_squared_determinants(half in 1usize..=3, seed: u64) {
        let n = 2 * half + 1;
        let psi = random_state(n, seed).unwrap();
        let ops = operators(n, OperatorKind::General, seed.wrapping_add(2));
        let moved = psi.apply_local(&ops).unwrap();
        let predicted = det_product(&ops).powi(2) * odd_invariant(&psi).unwrap();
        let got = odd_invariant(&moved).unwrap();
        let scale = predicted.norm().max(moved.norm_sqr().powi(2));
        prop_assert!((got - predicted).norm() <= TOL * scale);
    }

    #[test]
    fn even_tau_ignores_relabeling(half in 1usize..=4, seed: u64) {
        let n = 2 * half;
        let psi = random_state(n, seed).unwrap();
        let pi = QubitPermutation::random(n, &mut rng_from_seed(seed));
        let (a, b) = (tau(&psi).unwrap().value, tau(&psi.permute(&pi).unwrap()).unwrap().value);
        prop_assert!((a - b).abs() < TOL);
    }

    #[test]
    fn odd_tau_ignores_relabeling_that_fixes_qubit_1(half in 1usize..=3, seed: u64) {
        let n = 2 * half + 1;
        let psi = random_state(n, seed).unwrap();
        let pi = QubitPermutation::random_fixing(n, 1, &mut rng_from_seed(seed));
        let (a, b) = (tau(&psi).unwrap().value, tau(&psi.permute(&pi).unwrap()).unwrap().value);
        prop_assert!((a - b).abs() < TOL);
    }

    #[test]
    fn even_product_rule(l in 1usize..=5, m in 1usize..=5, seed: u64) {
        prop_assume!((l + m) % 2 == 0);
        let phi = random_state(l, seed).unwrap();
        let omega = random_state(m, seed.wrapping_add(1)).unwrap();
        let joint = tau(&phi.tensor(&omega).unwrap()).unwrap().value;
        let expected = if l % 2 == 0 {
            tau(&phi).unwrap().value * tau(&omega).unwrap().value
        } else {
            0.0
        };
        prop_assert!((joint - expected).abs() < TOL, "{joint} vs {expected}");
    }

    #[test]
    fn r_is_the_mean_residual(half in 1usize..=3, seed: u64) {
        let psi = random_state(2 * half + 1, seed).unwrap();
        let res = residuals(&psi).unwrap();
        let mean = res.iter().sum::<f64>() / res.len() as f64;
        prop_assert!((r_tangle(&psi).unwrap().value - mean).abs() < 1e-15);
    }

    #[test]
    fn qsv_round_trip_is_exact(n in 1usize..=6, seed: u64) {
        let psi = random_state(n, seed).unwrap();
        let back = qsv::parse(&qsv::to_string(&psi)).unwrap();
        prop_assert_eq!(psi.amps(), back.amps());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn strategies_agree_bit_for_bit(n in 14usize..=15, seed: u64) {
        let psi: StateVector = random_state(n, seed).unwrap();
        let pi = QubitPermutation::random(n, &mut rng_from_seed(seed));
        let seq = psi.permute_with(&pi, Strategy::Sequential).unwrap();
        let par = psi.permute_with(&pi, Strategy::Parallel).unwrap();
        prop_assert_eq!(seq.amps(), par.amps());
        let (a, b) = if n % 2 == 0 {
            (tau_even_with(&seq, Strategy::Sequential), tau_even_with(&seq, Strategy::Parallel))
        } else {
            (tau_odd_with(&seq, Strategy::Sequential), tau_odd_with(&seq, Strategy::Parallel))
        };
        prop_assert_eq!(a.unwrap().value.to_bits(), b.unwrap().value.to_bits());
    }
}
