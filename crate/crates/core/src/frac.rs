//! Riemann-Liouville fractional operators.
//!
//! Closed forms for shifted powers and power series, plus a deliberately
//! slow numeric route built straight from the defining integral
//!
//! ```text
//! J^α f(t) = 1/Γ(α) ∫_0^t (t-τ)^{α-1} f(τ) dτ
//! D^α f(t) = d^m/dt^m J^{m-α} f(t),   m-1 < α < m
//! ```
//!
//! The numeric route exists to cross-validate the closed forms, not to be
//! fast. The closed forms are extended to every real α through [`rgamma`]:
//! negative α is the fractional integral J^{-α}, and orders where Γ(β-α)
//! has a pole give an exact zero.

use crate::specfun::{gamma, rgamma};
use crate::{gauss, Error, Result};

/// The function t ↦ (t-a)^{β-1}, β > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftedPower {
    a: f64,
    beta: f64,
}

impl ShiftedPower {
    pub fn new(a: f64, beta: f64) -> Result<Self> {
        if !a.is_finite() || !beta.is_finite() {
            return Err(Error::Domain("shifted power parameters must be finite".into()));
        }
        if beta <= 0.0 {
            return Err(Error::Domain(format!(
                "shifted power exponent parameter must be positive, got beta = {beta}"
            )));
        }
        Ok(ShiftedPower { a, beta })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// Truncated power series Σ c_k t^k with a radius of convergence.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<f64>,
    radius: f64,
}

impl PowerSeries {
    /// `radius` may be `f64::INFINITY` for entire functions and
    /// polynomials.
    pub fn new(coeffs: Vec<f64>, radius: f64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("power series needs at least one coefficient".into()));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("power series coefficients must be finite".into()));
        }
        if !(radius > 0.0) {
            return Err(Error::Domain(format!(
                "power series radius must be positive, got {radius}"
            )));
        }
        Ok(PowerSeries { coeffs, radius })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Horner evaluation of the truncated series.
    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
    }
}

/// A fractional order α > 0, α ∉ ℕ, together with m = ⌈α⌉, as required by
/// the numeric derivative. Closed-form operations take a bare `f64` order
/// and accept any real value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracOrder {
    alpha: f64,
    m: u32,
}

impl FracOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::Domain(format!(
                "numeric derivative order must be positive, got {alpha}"
            )));
        }
        if (alpha - alpha.round()).abs() <= 1e-12 {
            return Err(Error::Domain(format!(
                "numeric derivative order must not be an integer, got {alpha}; \
                 use the closed forms for integer orders"
            )));
        }
        Ok(FracOrder {
            alpha,
            m: alpha.ceil() as u32,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Smallest integer m with m-1 < α < m.
    pub fn m(&self) -> u32 {
        self.m
    }
}

/// D^α (t-a)^{β-1} = Γ(β)/Γ(β-α) (t-a)^{β-α-1}, for any real α.
///
/// Exactly zero when β-α is a nonpositive integer (the Γ(β-α) pole kills
/// the term); this is what makes integer orders of polynomial pieces come
/// out right, e.g. D^1 of a constant.
pub fn rl_deriv_power(p: &ShiftedPower, alpha: f64, t: f64) -> Result<f64> {
    if !(t > p.a) {
        return Err(Error::Domain(format!(
            "evaluation point must lie right of the lower limit: t = {t}, a = {}",
            p.a
        )));
    }
    let g = gamma(p.beta)?; // beta > 0: no pole
    Ok(g * rgamma(p.beta - alpha) * (t - p.a).powf(p.beta - alpha - 1.0))
}

/// Term-wise D^α of a power series at 0 < t < radius:
/// Σ c_k Γ(k+1)/Γ(k+1-α) t^{k-α}.
pub fn rl_deriv_series(f: &PowerSeries, alpha: f64, t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("series derivative needs t > 0, got {t}")));
    }
    if t >= f.radius {
        return Err(Error::Domain(format!(
            "t = {t} outside the series radius {}",
            f.radius
        )));
    }
    let mut acc = 0.0;
    for (k, &c) in f.coeffs.iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        let kf = k as f64;
        acc += c * crate::specfun::factorial(k as u32) * rgamma(kf + 1.0 - alpha)
            * t.powf(kf - alpha);
    }
    Ok(acc)
}

/// J^α f(t) by adaptive quadrature of the definition, |error| <= tol.
///
/// For α < 1 the kernel (t-τ)^{α-1} is singular at τ = t; the substitution
/// τ = t - u^{1/α} absorbs it exactly, leaving ∫_0^{t^α} f(t - u^{1/α}) du
/// / Γ(1+α) with a bounded integrand. For α >= 1 the kernel is already
/// continuous and the integral is taken as written (the substitution would
/// manufacture a kink there instead of removing one).
pub fn rl_integral_numeric<F: Fn(f64) -> f64>(f: F, alpha: f64, t: f64, tol: f64) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!("integral order must be positive, got {alpha}")));
    }
    if !(t > 0.0) {
        return Err(Error::Domain(format!("integral needs t > 0, got {t}")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    const MAX_DEPTH: u32 = 48;
    if alpha < 1.0 {
        let scale = rgamma(1.0 + alpha);
        let inner = gauss::adaptive(
            &|u: f64| f(t - u.powf(1.0 / alpha)),
            0.0,
            t.powf(alpha),
            tol / scale,
            MAX_DEPTH,
        )?;
        Ok(scale * inner)
    } else {
        let scale = rgamma(alpha);
        let inner = gauss::adaptive(
            &|tau: f64| (t - tau).max(0.0).powf(alpha - 1.0) * f(tau),
            0.0,
            t,
            tol / scale,
            MAX_DEPTH,
        )?;
        Ok(scale * inner)
    }
}

/// Numeric D^α f(t): m-th central finite difference (step h) of
/// s ↦ J^{m-α} f(s). An oracle with accuracy O(h²) + O(tol / h^m); keep
/// tol several orders below the target agreement when m > 1.
pub fn rl_deriv_numeric<F: Fn(f64) -> f64>(
    f: F,
    order: FracOrder,
    t: f64,
    h: f64,
    tol: f64,
) -> Result<f64> {
    let m = order.m;
    if !(h > 0.0) {
        return Err(Error::Domain(format!("finite-difference step must be positive, got {h}")));
    }
    if !(t - m as f64 * h > 0.0) {
        return Err(Error::Domain(format!(
            "stencil leaves the domain: need t - m h > 0, got t = {t}, m = {m}, h = {h}"
        )));
    }
    let frac_int_order = m as f64 - order.alpha; // in (0, 1)
    let mut acc = 0.0;
    let mut binom = 1.0; // C(m, j)
    for j in 0..=m {
        let s = t + (0.5 * m as f64 - j as f64) * h;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * binom * rl_integral_numeric(&f, frac_int_order, s, tol)?;
        binom = binom * (m - j) as f64 / (j + 1) as f64;
    }
    Ok(acc / h.powi(m as i32))
}
