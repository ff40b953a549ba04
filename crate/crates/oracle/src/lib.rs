//! Brute-force reference implementations ("oracles") for cross-checking the
//! `dorder` solver in tests.
//!
//! Everything in this crate is deliberately written with *different* methods
//! than the production library:
//!
//! - gamma via the Stirling asymptotic series with Bernoulli-number
//!   coefficients (the library uses a Lanczos approximation),
//! - integrals via fixed-step composite trapezoid sums (the library uses
//!   adaptive Gauss–Legendre panels),
//! - fractional monomial derivatives via direct quadrature of the
//!   Riemann–Liouville integral (the library uses closed forms).
//!
//! The implementations favour transparency over speed; test suites call them
//! with large node counts and compare against the fast production paths.

pub mod gamma;
pub mod rl;
pub mod trapezoid;

pub use gamma::{gamma, lgamma, rgamma};
pub use rl::rl_monomial_deriv;
pub use trapezoid::{h_reference, trapezoid_complex};
