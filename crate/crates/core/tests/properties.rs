//! Property tests over randomized inputs.

use dorder::fractional_operators::{gl_deriv, FracOrder, GridFunction};
use dorder::solvers::{solve_cauchy, CauchyProblem, DataFunction};
use dorder::special_functions::{eval_h_at, PowerBase};
use dorder::spectrum::{char_fn, char_fn_log, OrderInterval};
use dorder::{Complex64, QuadratureConfig};

use proptest::prelude::*;

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

#[test]
fn values_transfer_between_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<PowerBase>();
    assert_send_sync::<QuadratureConfig>();
    assert_send_sync::<GridFunction>();
    assert_send_sync::<dorder::solvers::SpectralSeries>();
    assert_send_sync::<dorder::solvers::DataFunction>();
    assert_send_sync::<dorder::spectrum::CharacteristicRoot>();
    assert_send_sync::<dorder::verification::VerificationReport>();

    // Concurrent evaluation of the same pure function agrees bitwise.
    let lambda = PowerBase::unit_circle(OrderInterval::default().root_argument(2));
    let handles: Vec<_> = (0..4)
        .map(|_| std::thread::spawn(move || eval_h_at(1.5, &lambda, &cfg()).unwrap().value))
        .collect();
    let values: Vec<Complex64> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    for v in &values[1..] {
        assert_eq!(*v, values[0]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// eval_h(x, conj λ) = conj eval_h(x, λ) for λ off the negative real axis.
    #[test]
    fn eval_h_conjugate_symmetry(
        x in 0.1f64..5.0,
        modulus in 0.2f64..2.5,
        argument in -3.0f64..3.0,
    ) {
        let lambda = PowerBase::from_polar(modulus, argument).unwrap();
        let direct = eval_h_at(x, &lambda, &cfg()).unwrap().value;
        let conjugated = eval_h_at(x, &lambda.conj(), &cfg()).unwrap().value;
        prop_assert!((conjugated - direct.conj()).norm() <= 2.0 * cfg().abs_tol);
    }

    /// Zero-order difference quotient returns the sample itself.
    #[test]
    fn gl_zero_order_identity(
        values in prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 8..40),
        step in 1e-3f64..0.5,
    ) {
        let complex: Vec<Complex64> = values.iter().map(|&(re, im)| Complex64::new(re, im)).collect();
        let grid = GridFunction::new(0.0, step, complex.clone()).unwrap();
        let at = complex.len() - 1;
        let d = gl_deriv(&grid, FracOrder::new(0.0).unwrap(), at).unwrap();
        prop_assert_eq!(d, complex[at]);
    }

    /// Scaling sampled data by a complex factor scales every coefficient.
    #[test]
    fn sampled_scaling_equivariance(
        scale_re in -2.0f64..2.0,
        scale_im in -2.0f64..2.0,
        seed_k in 1i32..3,
    ) {
        prop_assume!(scale_re.abs() + scale_im.abs() > 1e-3);
        let iv = OrderInterval::default();
        let beta = iv.beta();
        let nodes = 33;
        let alphas: Vec<f64> = (0..nodes).map(|j| beta * j as f64 / (nodes - 1) as f64).collect();
        let values: Vec<Complex64> = alphas
            .iter()
            .map(|&al| dorder::spectrum::mode_fn(seed_k, al, beta) + Complex64::new(0.3, 0.0))
            .collect();
        let factor = Complex64::new(scale_re, scale_im);
        let scaled_values: Vec<Complex64> = values.iter().map(|v| v * factor).collect();

        let base = solve_cauchy(&CauchyProblem::new(
            1.0,
            DataFunction::sampled(alphas.clone(), values),
            iv,
            3,
            cfg(),
        ).unwrap()).unwrap();
        let scaled = solve_cauchy(&CauchyProblem::new(
            1.0,
            DataFunction::sampled(alphas, scaled_values),
            iv,
            3,
            cfg(),
        ).unwrap()).unwrap();

        for (k, c) in base.coefficients() {
            let expected = c * factor;
            prop_assert!(
                (scaled.coefficient(k) - expected).norm() <= 1e-12 * (1.0 + expected.norm()),
                "k = {}", k
            );
        }
    }

    /// The closed characteristic form agrees with direct quadrature of
    /// ∫₀^β λ^α dα for positive real λ, including the removable point λ = 1.
    #[test]
    fn char_fn_matches_quadrature(lambda in 0.05f64..4.0, beta in 0.3f64..2.0) {
        let closed = char_fn(Complex64::new(lambda, 0.0), beta).unwrap();
        let quad = dorder::quadrature::integrate(
            |alpha| Complex64::new(lambda.powf(alpha), 0.0),
            0.0,
            beta,
            &cfg(),
        )
        .unwrap()
        .value;
        prop_assert!((closed - quad).norm() <= 1e-10 * (1.0 + quad.norm()));
    }

    /// Series vs direct form of F on the w-plane around the singularity.
    #[test]
    fn char_fn_log_series_consistency(w_im in -9e-5f64..9e-5, beta in 0.3f64..2.0) {
        // Just inside the series window vs just outside, compared through a
        // common midpoint scale.
        let inside = char_fn_log(Complex64::new(0.0, w_im), beta);
        let outside = char_fn_log(Complex64::new(0.0, w_im.signum() * 2e-4), beta);
        // F is smooth; the two evaluations differ by O(β²·1e-4).
        prop_assert!((inside - outside).norm() <= 4.0 * beta * beta * 2e-4);
    }
}
