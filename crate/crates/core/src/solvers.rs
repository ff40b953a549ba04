//! Series assembly and the Fourier-projection solvers for the Cauchy and
//! two-point boundary problems.
//!
//! The general solution of ∫₀^β D^α y dα = 0 is the spectral series
//!
//! ```text
//! y(x) = Σ_{k≠0} c_k h₊₀(x, λ_k),      λ_k = e^{i·2kπ/β},
//! ```
//!
//! truncated here at |k| ≤ k_max. Applying D^α and evaluating on the data
//! manifold turns the data condition into a Fourier problem in α: for Cauchy
//! data D^α y|_{x=a} = φ(α) the orthogonality of the modes λ_k^α on [0, β]
//! gives
//!
//! ```text
//! c_n = (1/(β h₊₀(a, λ_n))) ∫₀^β φ(α) conj(λ_n^α) dα,
//! ```
//!
//! and for two-point data a₀ D^α y|_a + b₀ D^α y|_b = φ(α) the denominator
//! becomes β [a₀ h₊₀(a, λ_n) + b₀ h₊₀(b, λ_n)], which must stay away from
//! zero (the non-degeneracy condition). Denominators at or below
//! [`DEGENERACY_FLOOR`] are typed errors rather than silent blow-ups.
//!
//! The mode family omits the constant k = 0 mode, so data with nonzero mean
//! (e.g. φ ≡ 1) projects to the zero series; solvers flag this in
//! [`SeriesDiagnostics::zero_projection`] and the verification suite carries
//! the corresponding expected-fail residual check.

use std::collections::BTreeMap;

use num_complex::Complex64;
use thiserror::Error;

use crate::fractional_operators::FracOrder;
use crate::quadrature::QuadratureConfig;
use crate::special_functions::{eval_h_at, SpecialError};
use crate::spectrum::{self, OrderInterval, SpectrumError};

/// Coefficient denominators at or below this magnitude are degenerate.
pub const DEGENERACY_FLOOR: f64 = 1e-12;

/// Sampled data needs at least this many (odd) points for composite Simpson.
pub const MIN_SAMPLED_POINTS: usize = 9;

/// Allowed deviation from exact uniformity in sampled grids.
const UNIFORMITY_TOL: f64 = 1e-12;

/// Residual grids for builtin data default to this many α points.
const RESIDUAL_POINTS: usize = 64;

/// Terms with |c_k| below this fraction of max |c| are skipped in series
/// evaluation.
const NEGLIGIBLE_COEFF: f64 = 1e-16;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SolveError {
    #[error("sampled data needs at least {MIN_SAMPLED_POINTS} points, got {got}")]
    GridTooCoarse { got: usize },
    #[error("invalid problem: {0}")]
    InvalidProblem(String),
    #[error("mode {n}: |h(a, λ_n)| = {magnitude:.3e} is at or below the degeneracy floor {DEGENERACY_FLOOR:.0e}; the coefficient formula divides by it")]
    DegenerateMode { n: i32, magnitude: f64 },
    #[error("mode {m}: |a0·h(a, λ_m) + b0·h(b, λ_m)| = {magnitude:.3e} violates the non-degeneracy condition (floor {DEGENERACY_FLOOR:.0e})")]
    NonDegeneracyViolated { m: i32, magnitude: f64 },
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

// ---------------------------------------------------------------------------
// Data functions
// ---------------------------------------------------------------------------

/// The data φ(α) of a Cauchy or boundary condition on α ∈ [0, β].
#[derive(Debug, Clone, PartialEq)]
pub struct DataFunction {
    kind: DataKind,
    scale: Complex64,
}

#[derive(Debug, Clone, PartialEq)]
enum DataKind {
    /// e^{i·2kπα/β}, k ≠ 0.
    Mode { k: i32 },
    /// cos(2kπα/β), k ≥ 1.
    Cosine { k: u32 },
    Constant { value: f64 },
    /// Uniform samples on [0, β]: odd count ≥ 9, first node 0, last node β.
    Sampled {
        alphas: Vec<f64>,
        values: Vec<Complex64>,
    },
}

impl DataFunction {
    pub fn mode(k: i32) -> Result<Self, SolveError> {
        if k == 0 {
            return Err(SolveError::InvalidProblem(
                "builtin mode index must be nonzero".into(),
            ));
        }
        Ok(Self {
            kind: DataKind::Mode { k },
            scale: Complex64::new(1.0, 0.0),
        })
    }

    pub fn cosine(k: u32) -> Result<Self, SolveError> {
        if k == 0 {
            return Err(SolveError::InvalidProblem(
                "builtin cosine index must be positive".into(),
            ));
        }
        Ok(Self {
            kind: DataKind::Cosine { k },
            scale: Complex64::new(1.0, 0.0),
        })
    }

    pub fn constant(value: f64) -> Self {
        Self {
            kind: DataKind::Constant { value },
            scale: Complex64::new(1.0, 0.0),
        }
    }

    pub fn sampled(alphas: Vec<f64>, values: Vec<Complex64>) -> Self {
        Self {
            kind: DataKind::Sampled { alphas, values },
            scale: Complex64::new(1.0, 0.0),
        }
    }

    pub fn sampled_real(alphas: Vec<f64>, values: Vec<f64>) -> Self {
        let values = values
            .into_iter()
            .map(|v| Complex64::new(v, 0.0))
            .collect();
        Self::sampled(alphas, values)
    }

    /// Multiplies the data by a complex factor. Closed-form projections of
    /// builtins scale exactly.
    pub fn scaled(mut self, factor: Complex64) -> Self {
        self.scale *= factor;
        self
    }

    /// Checks the sampled-grid invariants against the order interval.
    pub fn validate(&self, beta: f64) -> Result<(), SolveError> {
        let DataKind::Sampled { alphas, values } = &self.kind else {
            return Ok(());
        };
        if alphas.len() < MIN_SAMPLED_POINTS {
            return Err(SolveError::GridTooCoarse { got: alphas.len() });
        }
        if alphas.len() != values.len() {
            return Err(SolveError::InvalidProblem(format!(
                "{} abscissas vs {} values",
                alphas.len(),
                values.len()
            )));
        }
        if alphas.len() % 2 == 0 {
            return Err(SolveError::InvalidProblem(
                "sampled grid must have an odd number of points (composite Simpson)".into(),
            ));
        }
        if alphas[0].abs() > UNIFORMITY_TOL {
            return Err(SolveError::InvalidProblem(format!(
                "first sampled abscissa must be 0, got {}",
                alphas[0]
            )));
        }
        let last = *alphas.last().unwrap();
        if (last - beta).abs() > UNIFORMITY_TOL {
            return Err(SolveError::InvalidProblem(format!(
                "last sampled abscissa must equal β = {beta}, got {last}"
            )));
        }
        let step = beta / (alphas.len() - 1) as f64;
        for (j, pair) in alphas.windows(2).enumerate() {
            let gap = pair[1] - pair[0];
            if (gap - step).abs() > UNIFORMITY_TOL || gap <= 0.0 {
                return Err(SolveError::InvalidProblem(format!(
                    "sampled grid not uniform at index {j}: spacing {gap} vs {step}"
                )));
            }
        }
        Ok(())
    }

    /// φ(α). Sampled data is exact at its nodes and linearly interpolated
    /// between them.
    pub fn eval(&self, alpha: f64, beta: f64) -> Complex64 {
        let raw = match &self.kind {
            DataKind::Mode { k } => spectrum::mode_fn(*k, alpha, beta),
            DataKind::Cosine { k } => Complex64::new(
                (2.0 * std::f64::consts::PI * *k as f64 * alpha / beta).cos(),
                0.0,
            ),
            DataKind::Constant { value } => Complex64::new(*value, 0.0),
            DataKind::Sampled { alphas, values } => {
                let n = alphas.len();
                let step = beta / (n - 1) as f64;
                let t = (alpha / step).clamp(0.0, (n - 1) as f64);
                let i = (t.floor() as usize).min(n - 2);
                let frac = t - i as f64;
                values[i] * (1.0 - frac) + values[i + 1] * frac
            }
        };
        raw * self.scale
    }

    /// Max |φ| — closed form for builtins, max over samples otherwise.
    pub fn sup_norm(&self) -> f64 {
        let base = match &self.kind {
            DataKind::Mode { .. } | DataKind::Cosine { .. } => 1.0,
            DataKind::Constant { value } => value.abs(),
            DataKind::Sampled { values, .. } => {
                values.iter().map(|v| v.norm()).fold(0.0, f64::max)
            }
        };
        base * self.scale.norm()
    }

    /// The α grid residual checks compare on: the data's own nodes for
    /// sampled φ, a uniform grid otherwise.
    pub fn residual_alphas(&self, beta: f64, points: usize) -> Vec<f64> {
        match &self.kind {
            DataKind::Sampled { alphas, .. } => alphas.clone(),
            _ => {
                let n = points.max(2);
                (0..n)
                    .map(|i| beta * i as f64 / (n - 1) as f64)
                    .collect()
            }
        }
    }
}

/// ∫₀^β φ(α) conj(λ_n^α) dα — closed form for builtins (orthogonality),
/// composite Simpson on the data's own grid for samples.
pub fn project_coefficient(
    phi: &DataFunction,
    n: i32,
    interval: &OrderInterval,
    _config: &QuadratureConfig,
) -> Result<Complex64, SolveError> {
    if n == 0 {
        return Err(SolveError::InvalidProblem(
            "projection mode index must be nonzero".into(),
        ));
    }
    let beta = interval.beta();
    phi.validate(beta)?;
    let raw = match &phi.kind {
        DataKind::Mode { k } => {
            if *k == n {
                Complex64::new(beta, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }
        DataKind::Cosine { k } => {
            if n.unsigned_abs() == *k {
                Complex64::new(beta / 2.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }
        DataKind::Constant { .. } => Complex64::new(0.0, 0.0),
        DataKind::Sampled { alphas, values } => {
            let count = alphas.len();
            let step = beta / (count - 1) as f64;
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, (&alpha, &value)) in alphas.iter().zip(values).enumerate() {
                let w = if j == 0 || j == count - 1 {
                    1.0
                } else if j % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
                acc += value * spectrum::mode_fn(-n, alpha, beta) * w;
            }
            acc * (step / 3.0)
        }
    };
    Ok(raw * phi.scale)
}

// ---------------------------------------------------------------------------
// Problems
// ---------------------------------------------------------------------------

/// Cauchy data: D^α y(x)|_{x=a} = φ(α) on α ∈ [0, β].
#[derive(Debug, Clone)]
pub struct CauchyProblem {
    pub a: f64,
    pub phi: DataFunction,
    pub interval: OrderInterval,
    pub k_max: u32,
    pub config: QuadratureConfig,
}

impl CauchyProblem {
    pub fn new(
        a: f64,
        phi: DataFunction,
        interval: OrderInterval,
        k_max: u32,
        config: QuadratureConfig,
    ) -> Result<Self, SolveError> {
        if !(a.is_finite() && a > 0.0) {
            return Err(SolveError::InvalidProblem(format!(
                "initial abscissa must satisfy a > 0, got {a}"
            )));
        }
        if k_max == 0 {
            return Err(SolveError::InvalidProblem("k_max must be at least 1".into()));
        }
        config.validate().map_err(SpecialError::from)?;
        phi.validate(interval.beta())?;
        Ok(Self {
            a,
            phi,
            interval,
            k_max,
            config,
        })
    }
}

/// Two-point data: a₀ D^α y|_{x=a} + b₀ D^α y|_{x=b} = φ(α), 0 < a < b.
#[derive(Debug, Clone)]
pub struct BoundaryProblem {
    pub a: f64,
    pub b: f64,
    pub a0: f64,
    pub b0: f64,
    pub phi: DataFunction,
    pub interval: OrderInterval,
    pub k_max: u32,
    pub config: QuadratureConfig,
}

impl BoundaryProblem {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        a: f64,
        b: f64,
        a0: f64,
        b0: f64,
        phi: DataFunction,
        interval: OrderInterval,
        k_max: u32,
        config: QuadratureConfig,
    ) -> Result<Self, SolveError> {
        if !(a.is_finite() && b.is_finite() && a > 0.0 && b > a) {
            return Err(SolveError::InvalidProblem(format!(
                "boundary abscissas must satisfy 0 < a < b, got a = {a}, b = {b}"
            )));
        }
        if (a0 == 0.0 && b0 == 0.0) || !a0.is_finite() || !b0.is_finite() {
            return Err(SolveError::InvalidProblem(
                "boundary coefficients (a0, b0) must be finite and not both zero".into(),
            ));
        }
        if k_max == 0 {
            return Err(SolveError::InvalidProblem("k_max must be at least 1".into()));
        }
        config.validate().map_err(SpecialError::from)?;
        phi.validate(interval.beta())?;
        Ok(Self {
            a,
            b,
            a0,
            b0,
            phi,
            interval,
            k_max,
            config,
        })
    }
}

// ---------------------------------------------------------------------------
// Spectral series
// ---------------------------------------------------------------------------

/// Per-solve bookkeeping attached to the series.
#[derive(Debug, Clone, Default)]
pub struct SeriesDiagnostics {
    /// (k, |denominator|): |h(a, λ_k)| for Cauchy data,
    /// |a₀ h(a, λ_k) + b₀ h(b, λ_k)| for two-point data.
    pub denominators: Vec<(i32, f64)>,
    pub min_denominator: f64,
    /// |c_k · h(anchor, λ_k)| maximized over the outermost modes |k| = k_max:
    /// an empirical proxy for the size of the discarded tail.
    pub neglected_tail: f64,
    /// Every projection integral vanished at working precision. Data with
    /// nonzero mean does this because the mode family has no k = 0 member.
    pub zero_projection: bool,
    /// Sup |Σ c_k λ_k^α den_k − φ(α)| over the residual α grid (unnormalized),
    /// and sup |φ| on the same grid.
    pub data_residual: f64,
    pub data_sup: f64,
}

/// Truncated coefficient map {k ↦ c_k}, k ≠ 0, |k| ≤ k_max, with evaluation
/// of y(x) = Σ c_k h₊₀(x, λ_k). Immutable after construction.
#[derive(Debug, Clone)]
pub struct SpectralSeries {
    interval: OrderInterval,
    k_max: u32,
    coefficients: BTreeMap<i32, Complex64>,
    /// Cached h₊₀(point, λ_k) per anchor abscissa, filled by the solvers.
    basis_cache: Vec<(f64, BTreeMap<i32, Complex64>)>,
    diagnostics: SeriesDiagnostics,
}

impl SpectralSeries {
    /// A series from explicit coefficients; k = 0 entries are rejected.
    pub fn from_coefficients<I>(interval: OrderInterval, coeffs: I) -> Result<Self, SolveError>
    where
        I: IntoIterator<Item = (i32, Complex64)>,
    {
        let mut map = BTreeMap::new();
        for (k, c) in coeffs {
            if k == 0 {
                return Err(SolveError::InvalidProblem(
                    "series index k = 0 is excluded".into(),
                ));
            }
            map.insert(k, c);
        }
        let k_max = map.keys().map(|k| k.unsigned_abs()).max().unwrap_or(0);
        Ok(Self {
            interval,
            k_max,
            coefficients: map,
            basis_cache: Vec::new(),
            diagnostics: SeriesDiagnostics::default(),
        })
    }

    pub fn interval(&self) -> &OrderInterval {
        &self.interval
    }

    pub fn k_max(&self) -> u32 {
        self.k_max
    }

    pub fn coefficient(&self, k: i32) -> Complex64 {
        self.coefficients
            .get(&k)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Coefficients in ascending k order.
    pub fn coefficients(&self) -> impl Iterator<Item = (i32, Complex64)> + '_ {
        self.coefficients.iter().map(|(&k, &c)| (k, c))
    }

    pub fn diagnostics(&self) -> &SeriesDiagnostics {
        &self.diagnostics
    }

    fn max_coefficient(&self) -> f64 {
        self.coefficients
            .values()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// Modes that actually contribute (|c_k| ≥ 1e−16 · max |c|).
    fn active_modes(&self) -> Vec<i32> {
        let floor = NEGLIGIBLE_COEFF * self.max_coefficient();
        self.coefficients
            .iter()
            .filter(|(_, c)| c.norm() >= floor && c.norm() > 0.0)
            .map(|(&k, _)| k)
            .collect()
    }

    /// h₊₀(x, λ_k) for the requested modes, via the solver-filled cache when
    /// the abscissa matches an anchor point.
    fn basis_values(
        &self,
        x: f64,
        config: &QuadratureConfig,
        modes: &[i32],
    ) -> Result<BTreeMap<i32, Complex64>, SolveError> {
        if let Some((_, cached)) = self.basis_cache.iter().find(|(p, _)| *p == x) {
            if modes.iter().all(|k| cached.contains_key(k)) {
                return Ok(cached.clone());
            }
        }
        let mut map = BTreeMap::new();
        for &k in modes {
            let base =
                crate::special_functions::PowerBase::unit_circle(self.interval.root_argument(k));
            map.insert(k, eval_h_at(x, &base, config)?.value);
        }
        Ok(map)
    }

    /// y(x) = Σ c_k h₊₀(x, λ_k).
    pub fn evaluate(&self, x: f64, config: &QuadratureConfig) -> Result<Complex64, SolveError> {
        Ok(self.deriv_profile(x, config)?.eval(0.0))
    }

    /// D^α y(x) = Σ c_k λ_k^α h₊₀(x, λ_k), using the eigen-relation
    /// analytically. This is the solver-side representation; the
    /// quadrature-based `termwise_deriv` stays independent for verification.
    pub fn evaluate_deriv(
        &self,
        x: f64,
        alpha: FracOrder,
        config: &QuadratureConfig,
    ) -> Result<Complex64, SolveError> {
        Ok(self.deriv_profile(x, config)?.eval(alpha.alpha()))
    }

    /// The α profile of D^α y at fixed x with the h values evaluated once:
    /// repeated α evaluations (projection residuals, the distributed
    /// operator) cost one trigonometric pass each.
    pub fn deriv_profile(
        &self,
        x: f64,
        config: &QuadratureConfig,
    ) -> Result<DerivProfile, SolveError> {
        if !(x.is_finite() && x > 0.0) {
            return Err(SolveError::InvalidProblem(format!(
                "evaluation abscissa must be positive, got {x}"
            )));
        }
        let modes = self.active_modes();
        let basis = self.basis_values(x, config, &modes)?;
        let terms = modes
            .iter()
            .map(|&k| {
                let weight = self.coefficient(k) * basis[&k];
                (self.interval.root_argument(k), weight)
            })
            .collect();
        Ok(DerivProfile { terms })
    }
}

/// Σ_k w_k e^{iθ_k α} with w_k = c_k h₊₀(x, λ_k) precomputed at fixed x.
#[derive(Debug, Clone)]
pub struct DerivProfile {
    terms: Vec<(f64, Complex64)>,
}

impl DerivProfile {
    pub fn eval(&self, alpha: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &(argument, weight) in &self.terms {
            acc += weight * Complex64::from_polar(1.0, argument * alpha);
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

enum DataManifold {
    Initial { a: f64 },
    TwoPoint { a: f64, b: f64, a0: f64, b0: f64 },
}

/// c_n = ∫₀^β φ(α) conj(λ_n^α) dα / (β · den_n) for every 0 < |n| ≤ k_max,
/// where den_n is the data functional applied to h₊₀(·, λ_n).
fn assemble(
    phi: &DataFunction,
    interval: &OrderInterval,
    k_max: u32,
    config: &QuadratureConfig,
    manifold: &DataManifold,
) -> Result<SpectralSeries, SolveError> {
    let beta = interval.beta();
    let lattice = spectrum::roots(beta, k_max)?;

    // h at each anchor point, once per mode.
    let anchor_points: Vec<f64> = match manifold {
        DataManifold::Initial { a } => vec![*a],
        DataManifold::TwoPoint { a, b, .. } => vec![*a, *b],
    };
    let mut anchor_h: Vec<(f64, BTreeMap<i32, Complex64>)> = Vec::new();
    for &point in &anchor_points {
        let mut map = BTreeMap::new();
        for root in &lattice {
            map.insert(root.k(), eval_h_at(point, &root.base(), config)?.value);
        }
        anchor_h.push((point, map));
    }

    let mut coefficients = BTreeMap::new();
    let mut denominators = Vec::with_capacity(lattice.len());
    let mut min_denominator = f64::INFINITY;
    let mut max_projection = 0.0f64;
    let mut den_map = BTreeMap::new();

    for root in &lattice {
        let n = root.k();
        let den = match manifold {
            DataManifold::Initial { .. } => anchor_h[0].1[&n],
            DataManifold::TwoPoint { a0, b0, .. } => {
                anchor_h[0].1[&n] * *a0 + anchor_h[1].1[&n] * *b0
            }
        };
        let magnitude = den.norm();
        if magnitude <= DEGENERACY_FLOOR {
            return Err(match manifold {
                DataManifold::Initial { .. } => SolveError::DegenerateMode { n, magnitude },
                DataManifold::TwoPoint { .. } => {
                    SolveError::NonDegeneracyViolated { m: n, magnitude }
                }
            });
        }
        denominators.push((n, magnitude));
        min_denominator = min_denominator.min(magnitude);
        den_map.insert(n, den);

        let projection = project_coefficient(phi, n, interval, config)?;
        max_projection = max_projection.max(projection.norm());
        coefficients.insert(n, projection / (den * beta));
    }

    let zero_projection = max_projection <= 1e-12 * (1.0 + phi.sup_norm());

    // Outermost retained term as a tail proxy.
    let neglected_tail = [-(k_max as i32), k_max as i32]
        .iter()
        .map(|k| (coefficients[k] * den_map[k]).norm())
        .fold(0.0, f64::max);

    // Residual of the data condition on the α grid, using the precomputed
    // denominators: Σ c_k λ_k^α den_k is exactly the data functional of the
    // truncated series.
    let alphas = phi.residual_alphas(beta, RESIDUAL_POINTS);
    let mut data_residual = 0.0f64;
    let mut data_sup = 0.0f64;
    for &alpha in &alphas {
        let mut reconstructed = Complex64::new(0.0, 0.0);
        for root in &lattice {
            let k = root.k();
            reconstructed += coefficients[&k]
                * den_map[&k]
                * Complex64::from_polar(1.0, root.argument() * alpha);
        }
        let phi_value = phi.eval(alpha, beta);
        data_residual = data_residual.max((reconstructed - phi_value).norm());
        data_sup = data_sup.max(phi_value.norm());
    }

    Ok(SpectralSeries {
        interval: *interval,
        k_max,
        coefficients,
        basis_cache: anchor_h,
        diagnostics: SeriesDiagnostics {
            denominators,
            min_denominator,
            neglected_tail,
            zero_projection,
            data_residual,
            data_sup,
        },
    })
}

/// Solves the Cauchy problem D^α y|_{x=a} = φ(α) by Fourier projection.
pub fn solve_cauchy(problem: &CauchyProblem) -> Result<SpectralSeries, SolveError> {
    assemble(
        &problem.phi,
        &problem.interval,
        problem.k_max,
        &problem.config,
        &DataManifold::Initial { a: problem.a },
    )
}

/// Solves the two-point problem a₀ D^α y|_a + b₀ D^α y|_b = φ(α).
pub fn solve_bvp(problem: &BoundaryProblem) -> Result<SpectralSeries, SolveError> {
    assemble(
        &problem.phi,
        &problem.interval,
        problem.k_max,
        &problem.config,
        &DataManifold::TwoPoint {
            a: problem.a,
            b: problem.b,
            a0: problem.a0,
            b0: problem.b0,
        },
    )
}
