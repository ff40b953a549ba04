//! Independent numerical audit of the identities the solver is built on:
//! mode orthogonality, the root lattice, the eigen-relation, equation and
//! data residuals, the non-degeneracy scan, and the Grünwald–Letnikov
//! decomposition study.
//!
//! Every check compares two *independently computed* quantities and records
//! the achieved deviation against a fixed target. Checks are deterministic:
//! fixed grids, fixed node counts, no randomness. A check may be marked
//! `expected_fail` when it documents a known structural limit of the method
//! (the constant-mode gap in the projection basis, the logarithmic
//! Grünwald–Letnikov convergence against the terminal singularity); such
//! entries do not count as failures in suite verdicts.

use std::fmt;

use num_complex::Complex64;

use crate::fractional_operators::{
    correction_term, distributed_operator, gl_deriv, termwise_deriv, FracOrder, GridFunction,
};
use crate::quadrature::QuadratureConfig;
use crate::solvers::{
    solve_bvp, solve_cauchy, BoundaryProblem, CauchyProblem, DataFunction, SolveError,
    SpectralSeries, DEGENERACY_FLOOR,
};
use crate::special_functions::{eval_h_at, PowerBase};
use crate::spectrum::{self, CharacteristicRoot, OrderInterval, SpectrumError};

// Canonical targets, pinned once.
pub const ROOT_RESIDUAL_TARGET: f64 = 1e-12;
pub const ORTHOGONALITY_TARGET: f64 = 1e-10;
pub const EIGEN_RELATION_TARGET: f64 = 1e-8;
pub const EQUATION_RESIDUAL_TARGET: f64 = 1e-8;
pub const DATA_RESIDUAL_TARGET: f64 = 1e-7;
pub const ROUNDTRIP_TARGET: f64 = 1e-8;
pub const REALNESS_TARGET: f64 = 1e-10;
pub const REDUCTION_TARGET: f64 = 1e-12;
pub const CONSTANT_PROJECTION_TARGET: f64 = 1e-10;
pub const GL_ORDER_TARGET: f64 = 0.8;

/// One named measurement against a tolerance.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub target: f64,
    pub achieved: f64,
    pub pass: bool,
    pub expected_fail: bool,
    pub details: String,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, target: f64, achieved: f64, details: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            target,
            achieved,
            pass: achieved <= target,
            expected_fail: false,
            details: details.into(),
        }
    }

    fn expected(mut self, note: &str) -> Self {
        self.expected_fail = true;
        if !self.details.is_empty() {
            self.details.push_str("; ");
        }
        self.details.push_str(note);
        self
    }
}

/// An ordered collection of check results.
#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn record(
        &mut self,
        name: impl Into<String>,
        target: f64,
        achieved: f64,
        details: impl Into<String>,
    ) {
        self.checks.push(CheckResult::new(name, target, achieved, details));
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// True when every check that is not an expected failure passed.
    pub fn all_expected_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass || c.expected_fail)
    }

    pub fn unexpected_failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass && !c.expected_fail)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            let verdict = if check.pass {
                "PASS "
            } else if check.expected_fail {
                "XFAIL"
            } else {
                "FAIL "
            };
            writeln!(
                f,
                "[{verdict}] {:<34} achieved {:>12.4e}  target {:>9.2e}  {}",
                check.name, check.achieved, check.target, check.details
            )?;
        }
        let failures = self.unexpected_failures().count();
        let xfails = self
            .checks
            .iter()
            .filter(|c| !c.pass && c.expected_fail)
            .count();
        write!(
            f,
            "{} checks: {} passed, {} expected failures, {} unexpected failures",
            self.checks.len(),
            self.checks.iter().filter(|c| c.pass).count(),
            xfails,
            failures
        )
    }
}

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

/// Closed-form inner products vs composite-Simpson quadrature for every mode
/// pairing 0 < |k|, |n| ≤ k_range.
pub fn check_orthogonality(beta: f64, k_range: u32, quad_points: usize) -> VerificationReport {
    assert!(quad_points >= 65 && quad_points % 2 == 1, "odd node count >= 65");
    let h = beta / (quad_points - 1) as f64;
    let mut max_deviation = 0.0f64;
    let mut pairings = 0usize;
    let mut diagonals = 0usize;
    let indices: Vec<i32> = (-(k_range as i32)..=k_range as i32)
        .filter(|&k| k != 0)
        .collect();
    for &k in &indices {
        for &n in &indices {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..quad_points {
                let alpha = h * j as f64;
                let w = if j == 0 || j == quad_points - 1 {
                    1.0
                } else if j % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
                acc += spectrum::mode_fn(k, alpha, beta)
                    * spectrum::mode_fn(n, alpha, beta).conj()
                    * w;
            }
            acc *= h / 3.0;
            let deviation = (acc - spectrum::mode_inner_product(k, n, beta)).norm();
            max_deviation = max_deviation.max(deviation);
            pairings += 1;
            if k == n {
                diagonals += 1;
            }
        }
    }
    let mut report = VerificationReport::default();
    report.record(
        "orthogonality",
        ORTHOGONALITY_TARGET,
        max_deviation,
        format!("{pairings} pairings ({diagonals} diagonal), |k|,|n| ≤ {k_range}, {quad_points}-node Simpson vs closed form"),
    );
    report
}

/// Lattice residuals |F(λ_k)| on each root's branch, plus the limit value
/// F(1) = β confirming the k = 0 exclusion.
pub fn check_root_lattice(beta: f64, k_max: u32) -> Result<VerificationReport, SpectrumError> {
    let lattice = spectrum::roots(beta, k_max)?;
    let mut worst = 0.0f64;
    let mut worst_k = 0i32;
    for root in &lattice {
        let residual = root.residual(beta);
        if residual > worst {
            worst = residual;
            worst_k = root.k();
        }
    }
    let mut report = VerificationReport::default();
    report.record(
        "root-lattice-residual",
        ROOT_RESIDUAL_TARGET,
        worst,
        format!("{} roots, worst at k = {worst_k}", lattice.len()),
    );
    let at_one = spectrum::char_fn(Complex64::new(1.0, 0.0), beta)
        .expect("1 is off the branch cut")
        - Complex64::new(beta, 0.0);
    report.record(
        "char-fn-at-one",
        ROOT_RESIDUAL_TARGET,
        at_one.norm(),
        "F(1) = β, the k = 0 mode is excluded",
    );
    Ok(report)
}

/// |termwise_deriv(x, λ, α) − λ^α h(x, λ)| / (1 + |h|) over the pinned grid
/// x ∈ {1, 2, 5}, α ∈ {0.3, 0.7, 1.0, 1.37}, λ ∈ {λ₁, λ₋₁, λ₃, 0.5, 2}.
pub fn check_eigen_relation(
    beta: f64,
    config: &QuadratureConfig,
) -> Result<VerificationReport, SolveError> {
    let interval = OrderInterval::new(beta)?;
    let mut bases: Vec<(String, PowerBase)> = Vec::new();
    for k in [1, -1, 3] {
        bases.push((
            format!("λ_{k}"),
            CharacteristicRoot::new(k, &interval)?.base(),
        ));
    }
    for real in [0.5, 2.0] {
        bases.push((
            format!("{real}"),
            PowerBase::principal(Complex64::new(real, 0.0)).map_err(SolveError::Special)?,
        ));
    }
    let mut worst = 0.0f64;
    let mut worst_at = String::new();
    let mut count = 0usize;
    for &x in &[1.0, 2.0, 5.0] {
        for &alpha in &[0.3, 0.7, 1.0, 1.37] {
            let order = FracOrder::new(alpha)
                .map_err(|e| SolveError::InvalidProblem(e.to_string()))?;
            for (label, base) in &bases {
                let h = eval_h_at(x, base, config)?.value;
                let direct = termwise_deriv(x, base, order, config)?.value;
                let relation = base.pow(alpha) * h;
                let deviation = (direct - relation).norm() / (1.0 + h.norm());
                if deviation > worst {
                    worst = deviation;
                    worst_at = format!("x = {x}, α = {alpha}, λ = {label}");
                }
                count += 1;
            }
        }
    }
    let mut report = VerificationReport::default();
    report.record(
        "eigen-relation",
        EIGEN_RELATION_TARGET,
        worst,
        format!("{count} grid points, worst at {worst_at}"),
    );
    Ok(report)
}

/// max_x |∫₀^β D^α y(x) dα| / (1 + max_x |y(x)|) for a series y.
pub fn check_equation_residual(
    series: &SpectralSeries,
    x_grid: &[f64],
    config: &QuadratureConfig,
) -> Result<VerificationReport, SolveError> {
    assert!(!x_grid.is_empty(), "empty evaluation grid");
    let beta = series.interval().beta();
    let mut max_residual = 0.0f64;
    let mut max_y = 0.0f64;
    for &x in x_grid {
        let profile = series.deriv_profile(x, config)?;
        let residual = distributed_operator(|alpha| Ok(profile.eval(alpha)), beta, config)
            .map_err(SolveError::Special)?;
        max_residual = max_residual.max(residual.value.norm());
        max_y = max_y.max(profile.eval(0.0).norm());
    }
    let mut report = VerificationReport::default();
    report.record(
        "equation-residual",
        EQUATION_RESIDUAL_TARGET,
        max_residual / (1.0 + max_y),
        format!("{} abscissas, max |y| = {max_y:.3e}", x_grid.len()),
    );
    Ok(report)
}

/// Sup over the α grid of |D^α y|_{x=a} − φ(α)| (raw), with the target scaled
/// by 1 + sup |φ|.
pub fn check_initial_residual(
    series: &SpectralSeries,
    problem: &CauchyProblem,
    alpha_points: usize,
) -> Result<VerificationReport, SolveError> {
    assert!(alpha_points >= 16, "alpha grid must have at least 16 points");
    let beta = problem.interval.beta();
    let profile = series.deriv_profile(problem.a, &problem.config)?;
    let mut sup_residual = 0.0f64;
    let mut sup_phi = 0.0f64;
    for alpha in problem.phi.residual_alphas(beta, alpha_points) {
        let diff = (profile.eval(alpha) - problem.phi.eval(alpha, beta)).norm();
        sup_residual = sup_residual.max(diff);
        sup_phi = sup_phi.max(problem.phi.eval(alpha, beta).norm());
    }
    let mut report = VerificationReport::default();
    report.record(
        "initial-residual",
        DATA_RESIDUAL_TARGET * (1.0 + sup_phi),
        sup_residual,
        format!("sup |φ| = {sup_phi:.3e}"),
    );
    Ok(report)
}

/// Sup over the α grid of |a₀ D^α y|_a + b₀ D^α y|_b − φ(α)| (raw), target
/// scaled by 1 + sup |φ|.
pub fn check_boundary_residual(
    series: &SpectralSeries,
    problem: &BoundaryProblem,
    alpha_points: usize,
) -> Result<VerificationReport, SolveError> {
    assert!(alpha_points >= 16, "alpha grid must have at least 16 points");
    let beta = problem.interval.beta();
    let at_a = series.deriv_profile(problem.a, &problem.config)?;
    let at_b = series.deriv_profile(problem.b, &problem.config)?;
    let mut sup_residual = 0.0f64;
    let mut sup_phi = 0.0f64;
    for alpha in problem.phi.residual_alphas(beta, alpha_points) {
        let combined = at_a.eval(alpha) * problem.a0 + at_b.eval(alpha) * problem.b0;
        let diff = (combined - problem.phi.eval(alpha, beta)).norm();
        sup_residual = sup_residual.max(diff);
        sup_phi = sup_phi.max(problem.phi.eval(alpha, beta).norm());
    }
    let mut report = VerificationReport::default();
    report.record(
        "boundary-residual",
        DATA_RESIDUAL_TARGET * (1.0 + sup_phi),
        sup_residual,
        format!("sup |φ| = {sup_phi:.3e}"),
    );
    Ok(report)
}

/// Tabulates |a₀ h(a, λ_m) + b₀ h(b, λ_m)| for 0 < |m| ≤ k_max. The entry
/// passes when the smallest denominator clears the degeneracy floor; the
/// reported value is the margin ratio floor/min.
pub fn scan_nondegeneracy(
    a: f64,
    b: f64,
    a0: f64,
    b0: f64,
    beta: f64,
    k_max: u32,
    config: &QuadratureConfig,
) -> Result<VerificationReport, SolveError> {
    if !(a > 0.0 && b > a) {
        return Err(SolveError::InvalidProblem(format!(
            "scan needs 0 < a < b, got a = {a}, b = {b}"
        )));
    }
    let lattice = spectrum::roots(beta, k_max)?;
    let mut min_den = f64::INFINITY;
    let mut min_at = 0i32;
    for root in &lattice {
        let den = eval_h_at(a, &root.base(), config)?.value * a0
            + eval_h_at(b, &root.base(), config)?.value * b0;
        if den.norm() < min_den {
            min_den = den.norm();
            min_at = root.k();
        }
    }
    let mut report = VerificationReport::default();
    report.record(
        "nondegeneracy-scan",
        1.0,
        DEGENERACY_FLOOR / min_den,
        format!(
            "min |a₀h(a,λ_m) + b₀h(b,λ_m)| = {min_den:.6e} at m = {min_at}, {} modes",
            lattice.len()
        ),
    );
    Ok(report)
}

/// Grünwald–Letnikov decomposition study: samples of h(·, λ₁) on grids with
/// step ∈ {4e−3, 2e−3, 1e−3} over [step, 3], GL derivative of order 1/2 at
/// x = 2, compared against termwise_deriv + correction_term.
///
/// h(t, λ) grows like 1/(t ln²t) toward the terminal, so the GL sum misses an
/// integral strip whose size decays only logarithmically in the step; the
/// observed order sits near 0.1, far below the 0.8 target, and the last-step
/// error exceeds its bound. Both entries are kept as honest measurements and
/// the suites mark them expected failures.
pub fn check_gl_decomposition(
    beta: f64,
    config: &QuadratureConfig,
) -> Result<VerificationReport, SolveError> {
    let interval = OrderInterval::new(beta)?;
    let lambda = CharacteristicRoot::new(1, &interval)?.base();
    let alpha = FracOrder::new(0.5).expect("0.5 is a valid order");
    let x_eval = 2.0;
    let classical = termwise_deriv(x_eval, &lambda, alpha, config)?.value
        + correction_term(x_eval, &lambda, alpha, config)?.value;
    let h_scale = eval_h_at(x_eval, &lambda, config)?.value.norm();

    let steps = [4e-3f64, 2e-3, 1e-3];
    let mut errors = Vec::with_capacity(steps.len());
    for &step in &steps {
        let count = (3.0 / step).round() as usize;
        let mut values = Vec::with_capacity(count);
        for j in 1..=count {
            values.push(eval_h_at(j as f64 * step, &lambda, config)?.value);
        }
        let grid = GridFunction::new(step, step, values)
            .map_err(|e| SolveError::InvalidProblem(e.to_string()))?;
        let at_index = (x_eval / step).round() as usize - 1;
        let gl = gl_deriv(&grid, alpha, at_index)
            .map_err(|e| SolveError::InvalidProblem(e.to_string()))?;
        errors.push((gl - classical).norm());
    }
    let orders: Vec<f64> = errors
        .windows(2)
        .map(|pair| (pair[0] / pair[1]).log2())
        .collect();
    let min_order = orders.iter().copied().fold(f64::INFINITY, f64::min);

    let error_list = errors
        .iter()
        .map(|e| format!("{e:.4e}"))
        .collect::<Vec<_>>()
        .join(", ");
    let order_list = orders
        .iter()
        .map(|o| format!("{o:.3}"))
        .collect::<Vec<_>>()
        .join(", ");
    let mut report = VerificationReport::default();
    report.record(
        "gl-final-error",
        1e-2 * (1.0 + h_scale),
        *errors.last().unwrap(),
        format!("|gl − (termwise + correction)| at x = 2 for steps {steps:?}: [{error_list}]"),
    );
    report.record(
        "gl-convergence-order",
        0.0,
        GL_ORDER_TARGET - min_order,
        format!("observed orders [{order_list}] vs required ≥ {GL_ORDER_TARGET}"),
    );
    Ok(report)
}

// ---------------------------------------------------------------------------
// Manufactured problems
// ---------------------------------------------------------------------------

/// The manufactured coefficient scheme c*_k = 1/(1 + k²) for 0 < |k| ≤ k_star.
pub fn manufactured_coefficients(k_star: u32) -> Vec<(i32, Complex64)> {
    let mut coeffs = Vec::new();
    for k in -(k_star as i32)..=k_star as i32 {
        if k != 0 {
            coeffs.push((k, Complex64::new(1.0 / (1.0 + (k * k) as f64), 0.0)));
        }
    }
    coeffs
}

fn manufactured_samples(
    interval: &OrderInterval,
    coeffs: &[(i32, Complex64)],
    denominators: &[(i32, Complex64)],
    nodes: usize,
) -> DataFunction {
    let beta = interval.beta();
    let alphas: Vec<f64> = (0..nodes)
        .map(|j| beta * j as f64 / (nodes - 1) as f64)
        .collect();
    let values: Vec<f64> = alphas
        .iter()
        .map(|&alpha| {
            let mut acc = Complex64::new(0.0, 0.0);
            for &(k, c) in coeffs {
                let den = denominators
                    .iter()
                    .find(|(m, _)| *m == k)
                    .expect("denominator for every coefficient")
                    .1;
                acc += c * den * Complex64::from_polar(1.0, interval.root_argument(k) * alpha);
            }
            // Conjugate pairing makes φ real; drop the rounding dust.
            acc.re
        })
        .collect();
    DataFunction::sampled_real(alphas, values)
}

/// Builds φ(α) = Σ c*_k λ_k^α h(a, λ_k) as sampled data so that solving the
/// Cauchy problem must recover c*_k.
pub fn manufactured_cauchy(
    a: f64,
    interval: OrderInterval,
    k_star: u32,
    nodes: usize,
    k_max: u32,
    config: QuadratureConfig,
) -> Result<(CauchyProblem, Vec<(i32, Complex64)>), SolveError> {
    let coeffs = manufactured_coefficients(k_star);
    let lattice = spectrum::roots(interval.beta(), k_star)?;
    let mut denominators = Vec::new();
    for root in &lattice {
        denominators.push((root.k(), eval_h_at(a, &root.base(), &config)?.value));
    }
    let phi = manufactured_samples(&interval, &coeffs, &denominators, nodes);
    let problem = CauchyProblem::new(a, phi, interval, k_max, config)?;
    Ok((problem, coeffs))
}

/// Two-point analogue: φ(α) = Σ c*_k λ_k^α [a₀ h(a, λ_k) + b₀ h(b, λ_k)].
#[allow(clippy::too_many_arguments)]
pub fn manufactured_bvp(
    a: f64,
    b: f64,
    a0: f64,
    b0: f64,
    interval: OrderInterval,
    k_star: u32,
    nodes: usize,
    k_max: u32,
    config: QuadratureConfig,
) -> Result<(BoundaryProblem, Vec<(i32, Complex64)>), SolveError> {
    let coeffs = manufactured_coefficients(k_star);
    let lattice = spectrum::roots(interval.beta(), k_star)?;
    let mut denominators = Vec::new();
    for root in &lattice {
        let den = eval_h_at(a, &root.base(), &config)?.value * a0
            + eval_h_at(b, &root.base(), &config)?.value * b0;
        denominators.push((root.k(), den));
    }
    let phi = manufactured_samples(&interval, &coeffs, &denominators, nodes);
    let problem = BoundaryProblem::new(a, b, a0, b0, phi, interval, k_max, config)?;
    Ok((problem, coeffs))
}

/// Max coefficient recovery error of a solved series against the
/// manufactured scheme (missing entries count as zero).
pub fn coefficient_recovery_error(series: &SpectralSeries, expected: &[(i32, Complex64)]) -> f64 {
    let mut worst = 0.0f64;
    for (k, c) in series.coefficients() {
        let target = expected
            .iter()
            .find(|(m, _)| *m == k)
            .map(|(_, c)| *c)
            .unwrap_or(Complex64::new(0.0, 0.0));
        worst = worst.max((c - target).norm());
    }
    worst
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

const MANUFACTURED_K_STAR: u32 = 3;
const MANUFACTURED_NODES: usize = 513;
const MANUFACTURED_K_MAX: u32 = 8;

/// The default verification suite: every identity check at desk scale.
/// Exits clean (no unexpected failures) on a correct build; the
/// constant-data residual is the documented expected failure.
pub fn default_suite(beta: f64, config: &QuadratureConfig) -> Result<VerificationReport, SolveError> {
    let interval = OrderInterval::new(beta)?;
    let mut report = check_root_lattice(beta, 20)?;
    report.extend(check_orthogonality(beta, 5, 129));
    report.extend(check_eigen_relation(beta, config)?);

    // Equation residual for the pure partial solutions h(·, λ_k).
    for k in [1, -1, 2, -2] {
        let series =
            SpectralSeries::from_coefficients(interval, [(k, Complex64::new(1.0, 0.0))])?;
        let sub = check_equation_residual(&series, &[1.5, 2.5], config)?;
        for mut entry in sub.checks {
            entry.name = format!("equation-residual-mode({k})");
            report.checks.push(entry);
        }
    }

    // Manufactured Cauchy round trip.
    let (cauchy, expected) = manufactured_cauchy(
        1.0,
        interval,
        MANUFACTURED_K_STAR,
        MANUFACTURED_NODES,
        MANUFACTURED_K_MAX,
        *config,
    )?;
    let series = solve_cauchy(&cauchy)?;
    report.record(
        "cauchy-roundtrip-coefficients",
        ROUNDTRIP_TARGET,
        coefficient_recovery_error(&series, &expected),
        format!(
            "c*_k = 1/(1+k²), |k| ≤ {MANUFACTURED_K_STAR}, recovered with k_max = {MANUFACTURED_K_MAX} from {MANUFACTURED_NODES} samples"
        ),
    );
    for mut entry in check_initial_residual(&series, &cauchy, 64)?.checks {
        entry.name = "cauchy-initial-residual".into();
        report.checks.push(entry);
    }
    let mut max_imag_ratio = 0.0f64;
    for i in 0..7 {
        let x = 1.0 + 0.5 * i as f64;
        let y = series.evaluate(x, config)?;
        max_imag_ratio = max_imag_ratio.max(y.im.abs() / (1.0 + y.norm()));
    }
    report.record(
        "cauchy-imaginary-part",
        REALNESS_TARGET,
        max_imag_ratio,
        "real data ⇒ real series on x ∈ [1, 4]",
    );
    let manufactured_eq = check_equation_residual(&series, &[1.0, 1.5, 2.0, 2.5, 3.0], config)?;
    report.checks.push(CheckResult::new(
        "cauchy-equation-residual",
        DATA_RESIDUAL_TARGET,
        manufactured_eq.checks[0].achieved,
        manufactured_eq.checks[0].details.clone(),
    ));

    // Manufactured two-point round trip and the Cauchy reduction.
    let (bvp, bvp_expected) = manufactured_bvp(
        1.0,
        2.0,
        1.0,
        2.0,
        interval,
        MANUFACTURED_K_STAR,
        MANUFACTURED_NODES,
        MANUFACTURED_K_MAX,
        *config,
    )?;
    let bvp_series = solve_bvp(&bvp)?;
    report.record(
        "bvp-roundtrip-coefficients",
        ROUNDTRIP_TARGET,
        coefficient_recovery_error(&bvp_series, &bvp_expected),
        "a₀ = 1, b₀ = 2 on (a, b) = (1, 2)",
    );
    for mut entry in check_boundary_residual(&bvp_series, &bvp, 64)?.checks {
        entry.name = "bvp-boundary-residual".into();
        report.checks.push(entry);
    }
    let reduction_problem = BoundaryProblem::new(
        1.0,
        2.0,
        1.0,
        0.0,
        cauchy.phi.clone(),
        interval,
        MANUFACTURED_K_MAX,
        *config,
    )?;
    let reduced = solve_bvp(&reduction_problem)?;
    let mut reduction_gap = 0.0f64;
    for (k, c) in series.coefficients() {
        reduction_gap = reduction_gap.max((reduced.coefficient(k) - c).norm());
    }
    report.record(
        "bvp-cauchy-reduction",
        REDUCTION_TARGET,
        reduction_gap,
        "b₀ = 0 collapses the two-point solver onto the Cauchy solver",
    );
    report.extend(scan_nondegeneracy(1.0, 2.0, 1.0, 2.0, beta, MANUFACTURED_K_MAX, config)?);

    // Constant data: zero projection plus the documented expected failure.
    let constant_problem = CauchyProblem::new(
        1.0,
        DataFunction::constant(1.0),
        interval,
        MANUFACTURED_K_MAX,
        *config,
    )?;
    let constant_series = solve_cauchy(&constant_problem)?;
    let max_constant_coeff = constant_series
        .coefficients()
        .map(|(_, c)| c.norm())
        .fold(0.0, f64::max);
    report.record(
        "constant-data-projection",
        CONSTANT_PROJECTION_TARGET,
        max_constant_coeff,
        "φ ≡ 1 projects to the zero series",
    );
    for entry in check_initial_residual(&constant_series, &constant_problem, 64)?.checks {
        let mut entry = entry;
        entry.name = "constant-data-initial-residual".into();
        report.checks.push(entry.expected(
            "expected failure: the mode family {λ_k^α, k ≠ 0} has no constant member, so data with nonzero mean cannot be matched",
        ));
    }
    Ok(report)
}

/// The full suite: everything in the default suite plus the (slow)
/// Grünwald–Letnikov decomposition study, whose two entries are expected
/// failures against the terminal singularity of h.
pub fn full_suite(beta: f64, config: &QuadratureConfig) -> Result<VerificationReport, SolveError> {
    let mut report = default_suite(beta, config)?;
    for entry in check_gl_decomposition(beta, config)?.checks {
        report.checks.push(entry.expected(
            "expected failure: h ~ 1/(t ln²t) at the terminal caps the observed order near 0.1",
        ));
    }
    Ok(report)
}
