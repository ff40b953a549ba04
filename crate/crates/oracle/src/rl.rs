//! Riemann–Liouville derivative of a monomial by direct quadrature.
//!
//! For 0 < α < 1 and ν ≥ 0,
//!
//!   D^α x^ν = 1/Γ(1−α) · d/dx ∫_0^x (x−t)^{−α} t^ν dt
//!           = (ν − α + 1)/Γ(1−α) · x^{ν−α} · ∫_0^1 (1−s)^{−α} s^ν ds,
//!
//! where the x-differentiation of the homogeneous integral is elementary.
//! The remaining Beta-type integral is evaluated numerically after the
//! substitution w = (1−s)^{1−α}, which removes the endpoint singularity:
//!
//!   ∫_0^1 (1−s)^{−α} s^ν ds = 1/(1−α) · ∫_0^1 (1 − w^{1/(1−α)})^ν dw.

use crate::gamma::gamma;

/// D^α x^ν at `x`, by trapezoid quadrature with `nodes` points.
pub fn rl_monomial_deriv(nu: f64, alpha: f64, x: f64, nodes: usize) -> f64 {
    assert!((0.0..1.0).contains(&alpha) && alpha > 0.0);
    assert!(nu >= 0.0 && x > 0.0 && nodes >= 3);
    let inv_exp = 1.0 / (1.0 - alpha);
    let f = |w: f64| {
        if nu == 0.0 {
            1.0
        } else {
            (1.0 - w.powf(inv_exp)).max(0.0).powf(nu)
        }
    };
    let h = 1.0 / (nodes - 1) as f64;
    let mut sum = (f(0.0) + f(1.0)) * 0.5;
    for j in 1..nodes - 1 {
        sum += f(h * j as f64);
    }
    let beta_integral = sum * h * inv_exp;
    (nu - alpha + 1.0) / gamma(1.0 - alpha) * x.powf(nu - alpha) * beta_integral
}
