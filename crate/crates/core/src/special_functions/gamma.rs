//! Production gamma path: Lanczos approximation (g = 7, n = 9) with the
//! Godfrey coefficients, evaluated in log form so arguments far beyond the
//! overflow point of Γ itself stay usable inside combined exponents.

const LANCZOS_G: f64 = 7.0;

#[allow(clippy::excessive_precision)] // published coefficients, kept verbatim
const LANCZOS_COEFFS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

#[allow(clippy::excessive_precision)]
const HALF_LN_TWO_PI: f64 = 0.918938533204672741780329736406;

/// ln Γ(z) for z > 0.
pub(crate) fn lgamma_pos(z: f64) -> f64 {
    debug_assert!(z > 0.0);
    if z < 0.5 {
        // Γ(z) = Γ(z+1)/z keeps the Lanczos argument away from 0.
        return lgamma_pos(z + 1.0) - z.ln();
    }
    let zm1 = z - 1.0;
    let mut series = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (zm1 + i as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    HALF_LN_TWO_PI + (zm1 + 0.5) * t.ln() - t + series.ln()
}
