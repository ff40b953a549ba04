//! Gamma function via the Stirling asymptotic series.
//!
//! ln Γ(z) = (z − ½) ln z − z + ½ ln 2π + Σ B₂ₙ / (2n(2n−1) z^{2n−1})
//!
//! with Bernoulli numbers B₂ through B₁₆. The series is applied for z ≥ 12
//! where the truncation error is below 2e−18; smaller arguments are shifted up
//! with Γ(z) = Γ(z + n) / (z (z+1) ⋯ (z+n−1)), and negative arguments go
//! through the reflection formula.

use std::f64::consts::PI;

/// B₂ₙ / (2n (2n−1)) for 2n = 2, 4, …, 16.
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,                    // B2 = 1/6
    -1.0 / 360.0,                  // B4 = -1/30
    1.0 / 1260.0,                  // B6 = 1/42
    -1.0 / 1680.0,                 // B8 = -1/30
    1.0 / 1188.0,                  // B10 = 5/66
    -691.0 / 360360.0,             // B12 = -691/2730
    1.0 / 156.0,                   // B14 = 7/6
    -3617.0 / 122400.0,            // B16 = -3617/510
];

#[allow(clippy::excessive_precision)]
const HALF_LN_TWO_PI: f64 = 0.918938533204672741780329736406;

/// Shift threshold: the Stirling tail at z = 12 is ~1.7e-18.
const STIRLING_MIN: f64 = 12.0;

/// ln Γ(z) for z > 0.
pub fn lgamma(z: f64) -> f64 {
    assert!(z > 0.0, "lgamma oracle requires a positive argument, got {z}");
    let mut shift = 0.0;
    let mut zz = z;
    while zz < STIRLING_MIN {
        shift += zz.ln();
        zz += 1.0;
    }
    let mut series = 0.0;
    let z2 = zz * zz;
    let mut power = zz;
    for c in STIRLING_COEFFS {
        series += c / power;
        power *= z2;
    }
    (zz - 0.5) * zz.ln() - zz + HALF_LN_TWO_PI + series - shift
}

/// Γ(z) for any real non-pole argument; returns ±∞ at the poles.
pub fn gamma(z: f64) -> f64 {
    if z > 0.0 {
        lgamma(z).exp()
    } else if z == z.floor() {
        f64::INFINITY
    } else {
        // Reflection: Γ(z) Γ(1−z) = π / sin(πz), with 1−z > 1 > 0.
        PI / ((PI * z).sin() * lgamma(1.0 - z).exp())
    }
}

/// 1/Γ(z) for any real argument; exactly zero at the poles of Γ.
pub fn rgamma(z: f64) -> f64 {
    if z > 0.0 {
        (-lgamma(z)).exp()
    } else if z == z.floor() {
        0.0
    } else {
        (PI * z).sin() * lgamma(1.0 - z).exp() / PI
    }
}
