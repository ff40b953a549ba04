//! # dorder
//!
//! A numerical library for the distributed-order ordinary differential
//! equation
//!
//! ```text
//! ∫₀^β D^α y(x) dα = 0,      x > a > 0,      β ∈ (0, 2],
//! ```
//!
//! where `D^α` is the Riemann–Liouville derivative with lower terminal 0 and
//! the order α sweeps the whole interval `[0, β]` (default β = √2). The
//! solver works in closed spectral form:
//!
//! - [`special_functions`] evaluates the invariant kernel function
//!   h₊₀(x, λ) = ∫_{−1}^∞ x^ν λ^ν / ν! dν (with 1/ν! ≡ 0 for ν ≤ −1), the
//!   analogue of e^{λx} that every fractional derivative reproduces up to a
//!   factor λ^α;
//! - [`spectrum`] carries the characteristic function
//!   F(λ) = (λ^β − 1)/ln λ, its root lattice λ_k = e^{i·2kπ/β} (k ≠ 0), and
//!   the orthogonal exponential family λ_k^α on [0, β];
//! - [`solvers`] assembles truncated series y(x) = Σ_{k≠0} c_k h₊₀(x, λ_k)
//!   and determines the coefficients for Cauchy and two-point boundary data
//!   by Fourier projection;
//! - [`fractional_operators`] provides the order-α derivative of h by direct
//!   quadrature, the Grünwald–Letnikov difference oracle, the correction term
//!   separating the two derivative readings, and the distributed-order
//!   operator itself;
//! - [`verification`] re-checks every identity the solver relies on
//!   numerically and reports pass/fail against fixed tolerances.
//!
//! All arithmetic is complex (`num_complex::Complex64`); every operation is a
//! pure function of its arguments and safe to call concurrently.

pub mod fractional_operators;
pub mod quadrature;
pub mod solvers;
pub mod special_functions;
pub mod spectrum;
pub mod verification;

pub use num_complex::Complex64;

pub use quadrature::{QuadError, QuadValue, QuadratureConfig};
pub use special_functions::{
    classical_reciprocal_gamma, eval_h, reciprocal_factorial, HEvalRequest, PowerBase,
    SpecialError,
};
pub use spectrum::{char_fn, mode_fn, roots, CharacteristicRoot, OrderInterval, SpectrumError};
