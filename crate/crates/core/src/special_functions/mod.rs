//! The reciprocal factorial kernel and the invariant function
//!
//! ```text
//! h₊₀(x, λ) = ∫_{−1}^{∞} x^ν λ^ν / ν! dν,      x > 0,  λ ≠ 0,
//! ```
//!
//! where `ν!` is Γ(ν+1) for ν > −1 and is taken as ∞ (so the kernel is 0) for
//! ν ≤ −1. This function plays the role of e^{λx} for derivatives of
//! arbitrary real order: D^α h₊₀(·, λ) = λ^α h₊₀(·, λ) termwise under the
//! kernel convention.
//!
//! Powers of λ are branch-sensitive: λ^ν = exp(ν (ln|λ| + iθ)) depends on the
//! choice of θ, and the characteristic roots of the distributed-order
//! equation need arguments far outside (−π, π]. [`PowerBase`] therefore fixes
//! the pair (ln|λ|, θ) once, at construction — from a plain complex number it
//! picks the principal branch, while lattice roots keep their unreduced
//! argument 2kπ/β.

mod gamma;

use num_complex::Complex64;
use thiserror::Error;

pub(crate) use gamma::lgamma_pos;

use crate::quadrature::{self, QuadError, QuadValue, QuadratureConfig};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SpecialError {
    #[error("λ must be nonzero, finite, and off the negative real axis (principal branch cut)")]
    BranchCut,
    #[error("invalid request: {0}")]
    InvalidInput(&'static str),
    #[error(transparent)]
    Quadrature(#[from] QuadError),
}

// ---------------------------------------------------------------------------
// Reciprocal gamma kernels
// ---------------------------------------------------------------------------

/// 1/ν! under the convention ν! = ∞ for ν ≤ −1.
///
/// For ν > −1 this is 1/Γ(ν+1); the two branches join continuously because
/// 1/Γ(z) → 0 as z → 0⁺. Total on all finite inputs.
pub fn reciprocal_factorial(v: f64) -> f64 {
    if v <= -1.0 {
        0.0
    } else {
        classical_reciprocal_gamma(v + 1.0)
    }
}

/// 1/Γ(z) without any convention: entire in z, exactly zero at z = 0, −1, −2…
/// and sign-alternating between the poles on the negative axis.
pub fn classical_reciprocal_gamma(z: f64) -> f64 {
    if z > 0.0 {
        (-lgamma_pos(z)).exp()
    } else if z == z.floor() {
        0.0
    } else {
        // Reflection: 1/Γ(z) = Γ(1−z) sin(πz)/π, with 1−z > 1.
        (std::f64::consts::PI * z).sin() * lgamma_pos(1.0 - z).exp() / std::f64::consts::PI
    }
}

// ---------------------------------------------------------------------------
// Branch-fixed power base
// ---------------------------------------------------------------------------

/// A nonzero complex base λ together with a fixed branch of its logarithm,
/// so that λ^ν := exp(ν (ln|λ| + iθ)) is unambiguous.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerBase {
    ln_modulus: f64,
    argument: f64,
}

impl PowerBase {
    /// Principal branch of a plain complex number: θ = Arg λ ∈ (−π, π).
    /// Zero, non-finite values, and the negative real axis are rejected.
    pub fn principal(lambda: Complex64) -> Result<Self, SpecialError> {
        if !lambda.re.is_finite() || !lambda.im.is_finite() {
            return Err(SpecialError::BranchCut);
        }
        if lambda.im == 0.0 && lambda.re <= 0.0 {
            return Err(SpecialError::BranchCut);
        }
        Ok(Self {
            ln_modulus: lambda.norm().ln(),
            argument: lambda.arg(),
        })
    }

    /// Base from modulus–argument form; the argument is kept as given, not
    /// reduced mod 2π, which is how the lattice roots e^{i·2kπ/β} retain
    /// their branch.
    pub fn from_polar(modulus: f64, argument: f64) -> Result<Self, SpecialError> {
        if !(modulus.is_finite() && modulus > 0.0 && argument.is_finite()) {
            return Err(SpecialError::InvalidInput(
                "modulus must be positive and finite, argument finite",
            ));
        }
        Ok(Self {
            ln_modulus: modulus.ln(),
            argument,
        })
    }

    /// Unit-modulus base e^{iθ} with unreduced argument.
    pub fn unit_circle(argument: f64) -> Self {
        Self {
            ln_modulus: 0.0,
            argument,
        }
    }

    pub fn ln_modulus(&self) -> f64 {
        self.ln_modulus
    }

    pub fn argument(&self) -> f64 {
        self.argument
    }

    /// The fixed logarithm ln|λ| + iθ.
    pub fn log(&self) -> Complex64 {
        Complex64::new(self.ln_modulus, self.argument)
    }

    /// The base itself as a complex point.
    pub fn value(&self) -> Complex64 {
        Complex64::from_polar(self.ln_modulus.exp(), self.argument)
    }

    /// λ^p on the fixed branch for a real exponent.
    pub fn pow(&self, p: f64) -> Complex64 {
        Complex64::from_polar((p * self.ln_modulus).exp(), p * self.argument)
    }

    /// Complex conjugate base (argument negated on the same sheet family).
    pub fn conj(&self) -> Self {
        Self {
            ln_modulus: self.ln_modulus,
            argument: -self.argument,
        }
    }
}

// ---------------------------------------------------------------------------
// The invariant function
// ---------------------------------------------------------------------------

/// Default lower terminal of the kernel integral.
pub const DEFAULT_H_LOWER: f64 = -1.0;

/// Product |x·λ| beyond which the integrand peak ~e^{|xλ|} leaves the f64
/// exponent range.
const MAX_SAFE_PRODUCT: f64 = 700.0;

/// The tail bound is clamped to at least this cutoff.
const MIN_TAIL_CUTOFF: f64 = 30.0;

/// One evaluation of h₊₀(x, λ).
#[derive(Debug, Clone, Copy)]
pub struct HEvalRequest {
    pub x: f64,
    pub lambda: PowerBase,
    /// Integration lower terminal in [−3, −1]. The kernel vanishes for
    /// ν ≤ −1, so shifted terminals do not change the value; the field exists
    /// so correction-style callers can state the terminal they mean.
    pub lower: f64,
    pub config: QuadratureConfig,
}

impl HEvalRequest {
    pub fn new(x: f64, lambda: PowerBase, config: QuadratureConfig) -> Result<Self, SpecialError> {
        if !(x.is_finite() && x > 0.0) {
            return Err(SpecialError::InvalidInput("x must be positive and finite"));
        }
        Ok(Self {
            x,
            lambda,
            lower: DEFAULT_H_LOWER,
            config,
        })
    }

    pub fn with_lower(mut self, lower: f64) -> Result<Self, SpecialError> {
        if !(-3.0..=-1.0).contains(&lower) {
            return Err(SpecialError::InvalidInput(
                "lower terminal must lie in [-3, -1]",
            ));
        }
        self.lower = lower;
        Ok(self)
    }
}

/// Smallest cutoff T ≥ 30 such that the discarded tail
/// ∫_T^∞ (x|λ|)^ν / Γ(ν+1) dν < tail_tol, using the geometric-ratio bound
/// (x|λ|)^T/Γ(T+1) · (1 − x|λ|/T)^{−1} once T > e·x|λ|.
pub(crate) fn tail_cutoff(growth_ln: f64, tail_tol: f64) -> Result<f64, QuadError> {
    let product = growth_ln.exp();
    if product > MAX_SAFE_PRODUCT {
        return Err(QuadError::Overflow { magnitude: product });
    }
    let ln_tail_tol = tail_tol.ln();
    let mut t = (std::f64::consts::E * product).ceil().max(MIN_TAIL_CUTOFF);
    loop {
        let bound = t * growth_ln - lgamma_pos(t + 1.0) - (1.0 - product / t).ln();
        if bound < ln_tail_tol {
            return Ok(t);
        }
        t = (t * 1.125).ceil();
        if t > 8192.0 {
            return Err(QuadError::Overflow { magnitude: product });
        }
    }
}

/// h₊₀(x, λ) = ∫_{lower}^{∞} x^ν λ^ν / ν! dν by adaptive quadrature.
///
/// The integrand is assembled in log form, exp(ν ln(x|λ|) − ln Γ(ν+1)) · cis(νθ),
/// so large intermediate powers never overflow on their own. The reported
/// error adds the tail bound to the panel-refinement estimate.
pub fn eval_h(req: &HEvalRequest) -> Result<QuadValue, SpecialError> {
    if !(req.x.is_finite() && req.x > 0.0) {
        return Err(SpecialError::InvalidInput("x must be positive and finite"));
    }
    if !(-3.0..=-1.0).contains(&req.lower) {
        return Err(SpecialError::InvalidInput(
            "lower terminal must lie in [-3, -1]",
        ));
    }
    req.config.validate()?;
    let growth_ln = req.x.ln() + req.lambda.ln_modulus();
    let theta = req.lambda.argument();
    let cutoff = tail_cutoff(growth_ln, req.config.tail_tol)?;
    // The kernel is identically zero on [lower, −1], so integration starts
    // at −1 regardless of the requested terminal.
    let f = |nu: f64| {
        let s = nu + 1.0;
        if s <= 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar((nu * growth_ln - lgamma_pos(s)).exp(), nu * theta)
    };
    let q = quadrature::integrate(f, -1.0, cutoff, &req.config)?;
    Ok(QuadValue {
        value: q.value,
        error: q.error + req.config.tail_tol,
    })
}

/// Convenience wrapper: h₊₀(x, λ) with the default lower terminal.
pub fn eval_h_at(
    x: f64,
    lambda: &PowerBase,
    config: &QuadratureConfig,
) -> Result<QuadValue, SpecialError> {
    eval_h(&HEvalRequest::new(x, *lambda, *config)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn reciprocal_factorial_convention() {
        assert_eq!(reciprocal_factorial(0.0), 1.0);
        assert_eq!(reciprocal_factorial(-1.0), 0.0);
        assert_eq!(reciprocal_factorial(-1.5), 0.0);
        assert_eq!(reciprocal_factorial(-250.0), 0.0);
        // 1/Γ(1.5) = 2/√π
        let expected = 2.0 / std::f64::consts::PI.sqrt();
        assert!((reciprocal_factorial(0.5) - expected).abs() < 1e-14);
    }

    #[test]
    fn reciprocal_factorial_smooth_limit() {
        // value → 0 as v → −1⁺
        let near = reciprocal_factorial(-1.0 + 1e-9);
        assert!(near > 0.0 && near < 2e-9);
    }

    #[test]
    fn classical_reciprocal_gamma_values() {
        assert_eq!(classical_reciprocal_gamma(1.0), 1.0);
        assert_eq!(classical_reciprocal_gamma(0.0), 0.0);
        assert_eq!(classical_reciprocal_gamma(-2.0), 0.0);
        // Γ(−0.5) = −2√π, so 1/Γ(−0.5) is negative.
        let v = classical_reciprocal_gamma(-0.5);
        let expected = -1.0 / (2.0 * std::f64::consts::PI.sqrt());
        assert!((v - expected).abs() < 1e-14, "got {v}");
    }

    #[test]
    fn gamma_paths_match_stirling_oracle() {
        // Production Lanczos vs the independent Stirling-series oracle.
        for i in 0..400 {
            let v = -0.95 + i as f64 * 0.12;
            let ours = reciprocal_factorial(v);
            let reference = dorder_oracle::rgamma(v + 1.0);
            assert!(
                (ours - reference).abs() <= 1e-13 * (1.0 + reference.abs()),
                "v = {v}: {ours} vs {reference}"
            );
        }
        for &z in &[-2.5, -1.3, -0.5, 0.25, 1.0, 7.77, 30.0] {
            let ours = classical_reciprocal_gamma(z);
            let reference = dorder_oracle::rgamma(z);
            assert!(
                (ours - reference).abs() <= 1e-13 * (1.0 + reference.abs()),
                "z = {z}"
            );
        }
    }

    #[test]
    fn convention_consistency() {
        for i in 0..200 {
            let v = -0.999 + i as f64 * 0.05;
            assert_eq!(
                reciprocal_factorial(v),
                classical_reciprocal_gamma(v + 1.0),
                "v = {v}"
            );
        }
    }

    #[test]
    fn power_base_branches() {
        let plain = PowerBase::principal(Complex64::new(0.0, 1.0)).unwrap();
        assert!((plain.argument() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!((plain.pow(2.0) - Complex64::new(-1.0, 0.0)).norm() < 1e-15);

        // Unreduced argument is preserved: the cube root of e^{i·3π} comes
        // out as e^{iπ} = −1, not the principal root e^{iπ/3} of the point.
        let wound = PowerBase::unit_circle(3.0 * std::f64::consts::PI);
        assert!((wound.pow(1.0 / 3.0) - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        let principal_of_point = PowerBase::principal(wound.value()).unwrap();
        assert!((principal_of_point.pow(1.0 / 3.0) - wound.pow(1.0 / 3.0)).norm() > 1.0);

        assert_eq!(
            PowerBase::principal(Complex64::new(-2.0, 0.0)),
            Err(SpecialError::BranchCut)
        );
        assert_eq!(
            PowerBase::principal(Complex64::new(0.0, 0.0)),
            Err(SpecialError::BranchCut)
        );
    }

    #[test]
    fn eval_h_rejects_bad_inputs() {
        let lambda = PowerBase::unit_circle(0.0);
        assert!(HEvalRequest::new(-1.0, lambda, cfg()).is_err());
        assert!(HEvalRequest::new(f64::NAN, lambda, cfg()).is_err());
        let req = HEvalRequest::new(1.0, lambda, cfg()).unwrap();
        assert!(req.with_lower(-4.0).is_err());
    }

    #[test]
    fn eval_h_overflow_guard() {
        let lambda = PowerBase::principal(Complex64::new(500.0, 0.0)).unwrap();
        let req = HEvalRequest::new(10.0, lambda, cfg()).unwrap();
        assert!(matches!(
            eval_h(&req),
            Err(SpecialError::Quadrature(QuadError::Overflow { .. }))
        ));
    }

    #[test]
    fn positivity_for_positive_real_lambda() {
        for &(x, l) in &[(0.5, 0.5), (1.0, 1.0), (2.0, 1.5), (5.0, 2.0)] {
            let lambda = PowerBase::principal(Complex64::new(l, 0.0)).unwrap();
            let q = eval_h_at(x, &lambda, &cfg()).unwrap();
            assert!(q.value.re > 0.0, "Re h({x}, {l}) = {}", q.value.re);
            assert!(q.value.im.abs() <= cfg().abs_tol, "Im = {}", q.value.im);
        }
    }

    #[test]
    fn shifted_terminal_is_inert() {
        // The convention zeroes the kernel below −1, so a terminal at −2.5
        // yields the same value as −1.
        let lambda = PowerBase::principal(Complex64::new(1.3, 0.4)).unwrap();
        let base = eval_h(&HEvalRequest::new(2.0, lambda, cfg()).unwrap()).unwrap();
        let shifted = eval_h(
            &HEvalRequest::new(2.0, lambda, cfg())
                .unwrap()
                .with_lower(-2.5)
                .unwrap(),
        )
        .unwrap();
        assert_eq!(base.value, shifted.value);
    }
}
