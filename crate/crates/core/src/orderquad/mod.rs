//! Improper integrals over the derivative order α ∈ (-∞, ∞).
//!
//! The integrands all have the shape sin(πα)·R(α) with rational decay
//! |R(α)| = O(|α|^-d). The integration scheme exploits that structure:
//!
//! * unit panels [m, m+1] with Gauss-Legendre nodes — sin(πα) vanishes at
//!   the panel boundaries, so each panel's contribution is single-signed
//!   and consecutive panels alternate;
//! * panels are taken in symmetric ± pairs about α = 0, which *is* the
//!   principal-value prescription for the conditionally convergent case;
//! * d = 1 (e.g. sinc): the per-period pair sums form an alternating
//!   series that is fed through the Euler-transform accelerator;
//! * d >= 2: absolute convergence; plain summation stops once two
//!   consecutive period sums drop below the tolerance, which bounds the
//!   alternating remainder by its first omitted term.
//!
//! Poles of R at integer α are never formed: the integrand evaluators in
//! this module are built from [`gen_binom`], whose rgamma products give
//! the cancelled sin·R value directly.

mod accel;

use crate::frac::PowerSeries;
use crate::gauss::GaussLegendre;
use crate::specfun::gen_binom;
use crate::{Error, Result};

/// Knobs for the order-integrator.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureConfig {
    /// Gauss-Legendre nodes per unit panel.
    pub panel_order: usize,
    /// Hard cap on period pairs before giving up.
    pub max_periods: usize,
    /// Periods handed to the accelerator in the first batch; the batch
    /// doubles until the error estimate meets `abs_tol`.
    pub accel_terms: usize,
    /// Absolute tolerance the error estimate must reach for convergence.
    pub abs_tol: f64,
    /// Add panels in symmetric ± pairs about the peak. Conditionally
    /// convergent integrands (decay 1) are always paired regardless —
    /// that is the principal-value contract.
    pub pv_symmetric: bool,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            panel_order: 16,
            max_periods: 10_000,
            accel_terms: 24,
            abs_tol: 1e-10,
            pv_symmetric: true,
        }
    }
}

impl QuadratureConfig {
    fn validate(&self) -> Result<()> {
        if self.panel_order < 4 {
            return Err(Error::InvalidConfig(format!(
                "panel_order must be at least 4, got {}",
                self.panel_order
            )));
        }
        if self.accel_terms < 4 {
            return Err(Error::InvalidConfig(format!(
                "accel_terms must be at least 4, got {}",
                self.accel_terms
            )));
        }
        if !(self.abs_tol > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "abs_tol must be positive, got {}",
                self.abs_tol
            )));
        }
        if self.max_periods == 0 {
            return Err(Error::InvalidConfig("max_periods must be at least 1".into()));
        }
        Ok(())
    }
}

/// Outcome of one order-integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderIntegralResult {
    pub value: f64,
    /// Absolute error estimate. When `converged` it is at or below the
    /// requested `abs_tol`.
    pub err_estimate: f64,
    /// Period pairs evaluated (largest |α| reached).
    pub periods_used: usize,
    pub converged: bool,
    pub used_acceleration: bool,
}

/// One Gauss-Legendre panel ∫_a^b g, exposed for diagnostics and raw
/// (unaccelerated) partial-sum studies.
pub fn gauss_panel<G: Fn(f64) -> f64>(g: G, a: f64, b: f64, order: usize) -> f64 {
    GaussLegendre::new(order).integrate(a, b, &g)
}

/// The alternating-series accelerator used for decay-1 integrands:
/// (accelerated value, error estimate) for Σ terms[k].
pub fn euler_transform(terms: &[f64]) -> (f64, f64) {
    accel::euler_accelerate(terms)
}

fn pair_term<G: Fn(f64) -> f64>(g: &G, rule: &GaussLegendre, k: usize) -> f64 {
    let a = k as f64;
    rule.integrate(a, a + 1.0, g) + rule.integrate(-(a + 1.0), -a, g)
}

/// Integrate g(α) = sin(πα)·R(α) over the whole real line.
///
/// `decay_exponent` is the caller's promise about |R|: O(|α|^-decay) at
/// infinity, with decay >= 1. It selects the summation strategy (see the
/// module docs). Exhausting `max_periods` is not an error: the result
/// comes back with `converged = false` and the best estimate so far.
pub fn integrate_order<G: Fn(f64) -> f64>(
    g: G,
    decay_exponent: u32,
    cfg: &QuadratureConfig,
) -> Result<OrderIntegralResult> {
    cfg.validate()?;
    if decay_exponent < 1 {
        return Err(Error::Domain(
            "decay_exponent must be at least 1 for a convergent order-integral".into(),
        ));
    }
    let rule = GaussLegendre::new(cfg.panel_order);
    if decay_exponent == 1 {
        Ok(integrate_accelerated(&g, cfg, &rule))
    } else if cfg.pv_symmetric {
        Ok(integrate_direct_paired(&g, decay_exponent, cfg, &rule))
    } else {
        Ok(integrate_direct_sides(&g, decay_exponent, cfg, &rule))
    }
}

/// Conditionally convergent case: symmetric pairs + Euler acceleration.
fn integrate_accelerated<G: Fn(f64) -> f64>(
    g: &G,
    cfg: &QuadratureConfig,
    rule: &GaussLegendre,
) -> OrderIntegralResult {
    let mut terms: Vec<f64> = Vec::new();
    let mut target = cfg.accel_terms.min(cfg.max_periods);
    let (mut value, mut err);
    loop {
        while terms.len() < target {
            terms.push(pair_term(g, rule, terms.len()));
        }
        (value, err) = accel::euler_accelerate(&terms);
        if err <= cfg.abs_tol {
            return OrderIntegralResult {
                value,
                err_estimate: err,
                periods_used: terms.len(),
                converged: true,
                used_acceleration: true,
            };
        }
        if terms.len() >= cfg.max_periods {
            break;
        }
        target = (target * 2).min(cfg.max_periods);
    }
    OrderIntegralResult {
        value,
        err_estimate: err,
        periods_used: terms.len(),
        converged: false,
        used_acceleration: true,
    }
}

/// Absolutely convergent case, symmetric pairing. Stops once two
/// consecutive period sums sit below abs_tol (past a warmup that covers
/// the central support where R has its poles and peak): the per-period
/// sums alternate from there on, so the remainder is bounded by the first
/// omitted term.
fn integrate_direct_paired<G: Fn(f64) -> f64>(
    g: &G,
    decay_exponent: u32,
    cfg: &QuadratureConfig,
    rule: &GaussLegendre,
) -> OrderIntegralResult {
    let warmup = (decay_exponent as usize + 2).max(4);
    let mut sum = 0.0;
    let mut prev_abs = f64::INFINITY;
    let mut last_abs = f64::INFINITY;
    for k in 0..cfg.max_periods {
        let t = pair_term(g, rule, k);
        sum += t;
        prev_abs = last_abs;
        last_abs = t.abs();
        if k + 1 >= warmup && last_abs <= cfg.abs_tol && prev_abs <= cfg.abs_tol {
            return OrderIntegralResult {
                value: sum,
                err_estimate: last_abs.max(prev_abs),
                periods_used: k + 1,
                converged: true,
                used_acceleration: false,
            };
        }
    }
    OrderIntegralResult {
        value: sum,
        err_estimate: last_abs.max(prev_abs),
        periods_used: cfg.max_periods,
        converged: false,
        used_acceleration: false,
    }
}

/// Absolutely convergent case without pairing: each half-line is summed
/// to its own tail criterion. Only meaningful for decay >= 2.
fn integrate_direct_sides<G: Fn(f64) -> f64>(
    g: &G,
    decay_exponent: u32,
    cfg: &QuadratureConfig,
    rule: &GaussLegendre,
) -> OrderIntegralResult {
    let warmup = (decay_exponent as usize + 2).max(4);
    let half_tol = 0.5 * cfg.abs_tol;
    let mut value = 0.0;
    let mut err = 0.0;
    let mut periods = 0;
    let mut converged = true;
    for positive in [true, false] {
        let mut sum = 0.0;
        let mut prev_abs = f64::INFINITY;
        let mut last_abs = f64::INFINITY;
        let mut side_ok = false;
        let mut k_used = cfg.max_periods;
        for k in 0..cfg.max_periods {
            let a = k as f64;
            let t = if positive {
                rule.integrate(a, a + 1.0, g)
            } else {
                rule.integrate(-(a + 1.0), -a, g)
            };
            sum += t;
            prev_abs = last_abs;
            last_abs = t.abs();
            if k + 1 >= warmup && last_abs <= half_tol && prev_abs <= half_tol {
                side_ok = true;
                k_used = k + 1;
                break;
            }
        }
        value += sum;
        err += last_abs.max(prev_abs);
        periods = periods.max(k_used);
        converged &= side_ok;
    }
    OrderIntegralResult {
        value,
        err_estimate: err,
        periods_used: periods,
        converged,
        used_acceleration: false,
    }
}

/// Integrand of the order-integral of D^α t^{n-1}:
///
/// ```text
/// t^α/Γ(α+1) · D^α t^{n-1} = t^α/Γ(α+1) · Γ(n)/Γ(n-α) t^{n-α-1}
///                          = t^{n-1} · C(n-1, α)
/// ```
///
/// The t^α · t^{n-α-1} cancellation is done algebraically, so the value is
/// computed through rgamma products (or the trig form far out) and never
/// through quantities that overflow at large |α|.
pub fn lemma_integrand(n: u32, t: f64, alpha: f64) -> f64 {
    assert!(n >= 1, "lemma integrand needs n >= 1");
    assert!(t > 0.0, "lemma integrand needs t > 0");
    t.powi(n as i32 - 1) * gen_binom(n - 1, alpha)
}

/// ∫ t^α/Γ(α+1) (D^α t^{n-1}) dα, which evaluates to (2t)^{n-1}.
pub fn lemma_integral(n: u32, t: f64, cfg: &QuadratureConfig) -> Result<OrderIntegralResult> {
    if n < 1 {
        return Err(Error::Domain("lemma integral needs n >= 1".into()));
    }
    if !(t > 0.0) {
        return Err(Error::Domain(format!("lemma integral needs t > 0, got {t}")));
    }
    integrate_order(|alpha| lemma_integrand(n, t, alpha), n, cfg)
}

/// ∫ C(n, α) dα, which evaluates to 2^n.
pub fn binom_integral(n: u32, cfg: &QuadratureConfig) -> Result<OrderIntegralResult> {
    if n < 1 {
        return Err(Error::Domain("binomial integral needs n >= 1".into()));
    }
    integrate_order(|alpha| gen_binom(n, alpha), n + 1, cfg)
}

/// ∫ t^α/Γ(α+1) D^α[f(·/2)](t) dα, which reproduces f(t) for
/// 0 <= t < radius.
///
/// The order-derivative acts on the rescaled function g(s) = f(s/2),
/// evaluated at s = t. That reading is forced by the term-wise algebra:
/// with f(s) = Σ c_k s^k, each term of g contributes
/// c_k 2^-k ∫ t^α/Γ(α+1) D^α s^k dα = c_k 2^-k (2t)^k = c_k t^k, summing
/// back to f(t). Reading the integrand as (D^α f)(t/2) instead would
/// scale each term by an extra 2^α, and the order-integral of
/// 2^α C(k, α) diverges — no identity survives that interpretation.
///
/// Computed as Σ_k c_k 2^-k t^k I_k with I_k = ∫ C(k, α) dα by
/// [`integrate_order`]; the k = 0 term has decay 1 (it is the sinc
/// integral) and rides the accelerated path. The error estimate combines
/// the weighted per-term quadrature estimates with a truncation bound
/// Σ_{k>K} |c_k| t^k obtained by geometric extrapolation of the trailing
/// coefficients at ratio t/radius (exact for geometric tails, a heuristic
/// otherwise).
///
/// Negative t is outside the contract: t^α is not real there for
/// non-integer α and no branch convention is adopted.
pub fn main_identity_eval(
    f: &PowerSeries,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<OrderIntegralResult> {
    cfg.validate()?;
    if !(t >= 0.0) {
        return Err(Error::Domain(format!(
            "main identity is evaluated on 0 <= t < radius, got t = {t}"
        )));
    }
    if t >= f.radius() {
        return Err(Error::Domain(format!(
            "t = {t} outside the series radius {}",
            f.radius()
        )));
    }
    let n_terms = f.coeffs().len();
    let mut value = 0.0;
    let mut err = 0.0;
    let mut periods = 0;
    let mut accelerated = false;
    for (k, &c) in f.coeffs().iter().enumerate() {
        let weight = c * 0.5f64.powi(k as i32) * t.powi(k as i32);
        if weight == 0.0 {
            continue;
        }
        // budget the tolerance so the weighted term errors sum below
        // abs_tol; a term that cannot reach its share within max_periods
        // still reports its honest estimate, which feeds `converged` below
        let mut per_term = cfg.clone();
        per_term.abs_tol = cfg.abs_tol / (2.0 * n_terms as f64 * weight.abs());
        let r = integrate_order(|alpha| gen_binom(k as u32, alpha), k as u32 + 1, &per_term)?;
        value += weight * r.value;
        err += weight.abs() * r.err_estimate;
        periods += r.periods_used;
        accelerated |= r.used_acceleration;
    }
    err += series_remainder_bound(f, t);
    Ok(OrderIntegralResult {
        value,
        err_estimate: err,
        periods_used: periods,
        converged: err <= cfg.abs_tol,
        used_acceleration: accelerated,
    })
}

/// Bound on Σ_{k>K} |c_k| t^k from the trailing coefficients: assumes the
/// terms keep decaying at least geometrically with ratio q = t/radius.
/// Scans the last few coefficients so interleaved zeros (sin, cos series)
/// do not fake a vanishing tail.
fn series_remainder_bound(f: &PowerSeries, t: f64) -> f64 {
    if t == 0.0 || f.radius().is_infinite() {
        return 0.0;
    }
    let q = t / f.radius();
    let k_last = f.coeffs().len() - 1;
    let lo = k_last.saturating_sub(3);
    let mut bound: f64 = 0.0;
    for j in lo..=k_last {
        let cj = f.coeffs()[j].abs();
        if cj == 0.0 {
            continue;
        }
        bound = bound.max(cj * t.powi(j as i32) * q.powi((k_last + 1 - j) as i32));
    }
    bound / (1.0 - q)
}
