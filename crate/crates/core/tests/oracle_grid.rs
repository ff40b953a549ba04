//! Brute-force oracle equivalence: the adaptive evaluator against frozen and
//! freshly recomputed composite-trapezoid references.

use dorder::special_functions::{eval_h_at, PowerBase};
use dorder::spectrum::OrderInterval;
use dorder::{Complex64, QuadratureConfig};

/// Trapezoid reference for h(1, 1): 10⁶ intervals on [−1, 50], recorded once.
/// The true value is the Fransén–Robinson constant 2.8077702420285193…; the
/// trapezoid discretization sits 2.2e−10 below it.
const H_1_1_TRAPEZOID: f64 = 2.807_770_241_811_766;

/// Trapezoid reference for h(2, λ₁), λ₁ = e^{i·2π/√2}: 4·10⁶ intervals on
/// [−1, 50] (finer, so the oracle's own error stays below the 1e−10
/// comparison).
const H_2_L1_TRAPEZOID: Complex64 = Complex64 {
    re: 2.322_284_630_994_590_4e-2,
    im: -2.032_428_612_020_901e-2,
};

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn root_base(k: i32) -> PowerBase {
    PowerBase::unit_circle(OrderInterval::default().root_argument(k))
}

#[test]
fn recorded_reference_real_case() {
    let lambda = PowerBase::principal(Complex64::new(1.0, 0.0)).unwrap();
    let value = eval_h_at(1.0, &lambda, &cfg()).unwrap().value;
    assert!(
        (value.re - H_1_1_TRAPEZOID).abs() <= 1e-9,
        "adaptive {} vs recorded {}",
        value.re,
        H_1_1_TRAPEZOID
    );
    assert_eq!(value.im, 0.0);
    // The adaptive value should also sit on the Fransén–Robinson constant,
    // which is far more accurate than the trapezoid reference.
    assert!((value.re - 2.807_770_242_028_519).abs() < 1e-13);
    // Freshness guard: recompute the recorded reference.
    let fresh = dorder_oracle::h_reference(1.0, 0.0, 0.0, 50.0, 1_000_001);
    assert!(
        (fresh.re - H_1_1_TRAPEZOID).abs() < 1e-14,
        "recorded constant is stale: fresh {}",
        fresh.re
    );
}

#[test]
fn recorded_reference_complex_case() {
    let lambda = root_base(1);
    let value = eval_h_at(2.0, &lambda, &cfg()).unwrap().value;
    assert!(
        (value - H_2_L1_TRAPEZOID).norm() <= 1e-10,
        "adaptive vs recorded differ by {}",
        (value - H_2_L1_TRAPEZOID).norm()
    );
    let fresh = dorder_oracle::h_reference(2.0, 0.0, lambda.argument(), 50.0, 4_000_001);
    assert!(
        (fresh - H_2_L1_TRAPEZOID).norm() < 1e-14,
        "recorded constant is stale: fresh {fresh}"
    );
}

#[test]
fn oracle_equivalence_grid() {
    // 5 × 5 grid of abscissas and bases; adaptive vs 2·10⁶-interval
    // trapezoid to 1e−9 absolute. |h(5, 2)| ≈ 2.2e4, so meeting an absolute
    // bound there needs rel_tol below 1e−9/|h|; the default 1e−12 would only
    // promise ~2e−8.
    let tight = QuadratureConfig {
        rel_tol: 1e-14,
        ..QuadratureConfig::default()
    };
    let xs = [0.5, 1.0, 2.0, 3.0, 5.0];
    let lambdas: Vec<(String, PowerBase)> = vec![
        (
            "0.5".into(),
            PowerBase::principal(Complex64::new(0.5, 0.0)).unwrap(),
        ),
        (
            "1".into(),
            PowerBase::principal(Complex64::new(1.0, 0.0)).unwrap(),
        ),
        (
            "2".into(),
            PowerBase::principal(Complex64::new(2.0, 0.0)).unwrap(),
        ),
        ("λ_1".into(), root_base(1)),
        ("λ_-2".into(), root_base(-2)),
    ];
    for &x in &xs {
        for (label, lambda) in &lambdas {
            let adaptive = eval_h_at(x, lambda, &tight).unwrap().value;
            let reference = dorder_oracle::h_reference(
                x,
                lambda.ln_modulus(),
                lambda.argument(),
                50.0,
                2_000_001,
            );
            let gap = (adaptive - reference).norm();
            assert!(
                gap <= 1e-9,
                "x = {x}, λ = {label}: |adaptive − trapezoid| = {gap:.3e}"
            );
        }
    }
}

#[test]
fn conjugate_symmetry_spot_grid() {
    for &x in &[0.5, 1.0, 2.0, 5.0] {
        for &(re, im) in &[(1.0, 0.5), (0.3, -0.8), (2.0, 1.0), (0.1, 0.1)] {
            let lambda = PowerBase::principal(Complex64::new(re, im)).unwrap();
            let direct = eval_h_at(x, &lambda, &cfg()).unwrap().value;
            let conjugated = eval_h_at(x, &lambda.conj(), &cfg()).unwrap().value;
            assert!(
                (conjugated - direct.conj()).norm() <= 2.0 * cfg().abs_tol,
                "x = {x}, λ = {re}+{im}i"
            );
        }
    }
}
