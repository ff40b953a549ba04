//! Characteristic function of the distributed-order equation, its root
//! lattice, and the orthogonal exponential family used for projection.
//!
//! Substituting y = h₊₀(·, λ) into ∫₀^β D^α y dα = 0 leaves the scalar
//! equation ∫₀^β λ^α dα = 0, i.e.
//!
//! ```text
//! F(λ) = (λ^β − 1) / ln λ = 0.
//! ```
//!
//! In terms of the logarithm w = ln λ the zeros are w_k = i·2kπ/β, k ≠ 0, so
//! the roots λ_k = e^{i·2kπ/β} live on the unit circle but carry arguments
//! well outside (−π, π]: each root is a (point, branch) pair, which is why
//! [`CharacteristicRoot::base`] hands out a [`PowerBase`] with the unreduced
//! argument. Evaluating F at a root through its own branch
//! ([`char_fn_log`]) vanishes; forcing the principal branch on the bare
//! point ([`char_fn`]) does not, and for β ≤ 2 the principal branch has no
//! zeros at all.
//!
//! The mode family λ_k^α = e^{i·2kπα/β} is orthogonal on α ∈ [0, β] under the
//! conjugated pairing ∫₀^β λ_k^α conj(λ_n^α) dα = β δ_{kn}.

use num_complex::Complex64;
use thiserror::Error;

use crate::special_functions::PowerBase;

/// The order interval default: β = √2.
pub const DEFAULT_BETA: f64 = std::f64::consts::SQRT_2;

/// Two lattice points closer than this to λ = 1 collide with the excluded
/// k = 0 mode and the lattice is rejected as degenerate.
pub const DEGENERACY_TOL: f64 = 1e-12;

/// Threshold on |ln λ| under which F is evaluated by its Taylor series to
/// dodge the cancellation in (λ^β − 1)/ln λ.
const SERIES_THRESHOLD: f64 = 1e-4;

#[derive(Debug, Clone, Copy, Error, PartialEq)]
pub enum SpectrumError {
    #[error("order interval width must lie in (0, 2], got {beta}")]
    InvalidBeta { beta: f64 },
    #[error("λ must be nonzero and off the negative real axis (principal branch cut)")]
    BranchCut,
    #[error("degenerate lattice: λ_{k} coincides with 1, the excluded k = 0 mode")]
    DegenerateLattice { k: i32 },
}

/// The order range [0, β] with β ∈ (0, 2] and its root-lattice geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderInterval {
    beta: f64,
}

impl OrderInterval {
    pub fn new(beta: f64) -> Result<Self, SpectrumError> {
        if !(beta.is_finite() && beta > 0.0 && beta <= 2.0) {
            return Err(SpectrumError::InvalidBeta { beta });
        }
        Ok(Self { beta })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// The argument 2kπ/β of the k-th lattice root.
    pub fn root_argument(&self, k: i32) -> f64 {
        2.0 * std::f64::consts::PI * k as f64 / self.beta
    }
}

impl Default for OrderInterval {
    fn default() -> Self {
        Self { beta: DEFAULT_BETA }
    }
}

/// A root λ_k = e^{i·2kπ/β} of the characteristic equation, k ≠ 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacteristicRoot {
    k: i32,
    argument: f64,
    value: Complex64,
}

impl CharacteristicRoot {
    pub fn new(k: i32, interval: &OrderInterval) -> Result<Self, SpectrumError> {
        if k == 0 {
            return Err(SpectrumError::DegenerateLattice { k: 0 });
        }
        let argument = interval.root_argument(k);
        let value = Complex64::from_polar(1.0, argument);
        if (value - Complex64::new(1.0, 0.0)).norm() < DEGENERACY_TOL {
            return Err(SpectrumError::DegenerateLattice { k });
        }
        Ok(Self { k, argument, value })
    }

    pub fn k(&self) -> i32 {
        self.k
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    pub fn argument(&self) -> f64 {
        self.argument
    }

    /// The root with its own branch of the logarithm, i·2kπ/β.
    pub fn base(&self) -> PowerBase {
        PowerBase::unit_circle(self.argument)
    }

    /// |F(λ_k)| evaluated on the root's branch; ≤ 1e−12 for genuine roots.
    pub fn residual(&self, beta: f64) -> f64 {
        char_fn_log(Complex64::new(0.0, self.argument), beta).norm()
    }

    fn conjugate(&self) -> Self {
        Self {
            k: -self.k,
            argument: -self.argument,
            value: self.value.conj(),
        }
    }
}

/// F on the logarithm plane: (e^{βw} − 1)/w, extended by F(0) = β.
///
/// For |w| < 1e−4 the removable singularity is evaluated by the series
/// β (1 + βw/2 + (βw)²/6 + (βw)³/24 + (βw)⁴/120 + (βw)⁵/720); the direct
/// formula would lose ~|βw|⁻¹ digits to cancellation there.
pub fn char_fn_log(w: Complex64, beta: f64) -> Complex64 {
    if w.norm() < SERIES_THRESHOLD {
        let bw = w * beta;
        // Horner over the coefficients 1/(n+1)!, n = 5 .. 0.
        let mut acc = Complex64::new(1.0 / 720.0, 0.0);
        for fact in [120.0, 24.0, 6.0, 2.0, 1.0] {
            acc = acc * bw + 1.0 / fact;
        }
        acc * beta
    } else {
        ((w * beta).exp() - 1.0) / w
    }
}

/// The characteristic function F(λ) = (λ^β − 1)/ln λ on the principal branch
/// of the plain complex point λ.
pub fn char_fn(lambda: Complex64, beta: f64) -> Result<Complex64, SpectrumError> {
    if !lambda.re.is_finite() || !lambda.im.is_finite() {
        return Err(SpectrumError::BranchCut);
    }
    if lambda.im == 0.0 && lambda.re <= 0.0 {
        return Err(SpectrumError::BranchCut);
    }
    Ok(char_fn_log(lambda.ln(), beta))
}

/// The lattice {λ_k : 0 < |k| ≤ k_max}, ordered by k ascending.
///
/// Roots are enumerated from the closed form, never searched; conjugate
/// pairs are built by mirroring so λ_{−k} = conj(λ_k) holds exactly. Any
/// lattice point colliding with λ = 1 (β rational with small denominator)
/// aborts the whole enumeration.
pub fn roots(beta: f64, k_max: u32) -> Result<Vec<CharacteristicRoot>, SpectrumError> {
    let interval = OrderInterval::new(beta)?;
    if k_max == 0 {
        return Err(SpectrumError::DegenerateLattice { k: 0 });
    }
    let mut positive = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max as i32 {
        positive.push(CharacteristicRoot::new(k, &interval)?);
    }
    let mut all = Vec::with_capacity(2 * k_max as usize);
    for root in positive.iter().rev() {
        all.push(root.conjugate());
    }
    all.extend(positive);
    Ok(all)
}

/// λ_k^α = e^{i·2kπα/β}, the k-th projection mode at order α.
pub fn mode_fn(k: i32, alpha: f64, beta: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 * alpha / beta)
}

/// Closed form of ∫₀^β mode_fn(k, α) · conj(mode_fn(n, α)) dα:
/// β on the diagonal, 0 off it. Exact by construction, no quadrature.
pub fn mode_inner_product(k: i32, n: i32, beta: f64) -> Complex64 {
    if k == n {
        Complex64::new(beta, 0.0)
    } else {
        Complex64::new(0.0, 0.0)
    }
}
