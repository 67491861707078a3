//! Cross-module identity and property suites: reflection, Pochhammer,
//! binomial symmetry/recurrence, operator cross-validation, and the
//! quadrature-vs-residue agreements.

use dalpha::frac::{
    rl_deriv_numeric, rl_deriv_power, rl_deriv_series, FracOrder, PowerSeries, ShiftedPower,
};
use dalpha::orderquad::{
    binom_integral, gauss_panel, integrate_order, lemma_integral, lemma_integrand,
    main_identity_eval, QuadratureConfig,
};
use dalpha::residue::indented_integral_value;
use dalpha::specfun::{gamma, gen_binom, pochhammer, rgamma, sin_pi, sinc};
use proptest::prelude::*;
use std::f64::consts::PI;

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

// ---------------------------------------------------------------------------
// specfun identities
// ---------------------------------------------------------------------------

#[test]
fn reflection_formula_on_grid() {
    // Γ(1+α) Γ(1-α) sinc(α) = 1 away from integers
    let mut checked = 0;
    for i in 0..=1000 {
        let alpha = -5.0 + i as f64 * 0.01;
        if (alpha - alpha.round()).abs() < 1e-6 {
            continue;
        }
        let p = gamma(1.0 + alpha).unwrap() * gamma(1.0 - alpha).unwrap() * sinc(alpha);
        assert!(rel_close(p, 1.0, 1e-10), "alpha={alpha}: product {p}");
        checked += 1;
    }
    assert!(checked > 900);
}

#[test]
fn reflection_formula_pole_safe_form() {
    // rgamma(1+α) rgamma(1-α) = sinc(α), valid through the integers
    for i in 0..=200 {
        let alpha = -5.0 + i as f64 * 0.05;
        let lhs = rgamma(1.0 + alpha) * rgamma(1.0 - alpha);
        let rhs = sinc(alpha);
        assert!(
            (lhs - rhs).abs() <= 1e-10 * rhs.abs().max(1.0),
            "alpha={alpha}: {lhs} vs {rhs}"
        );
    }
    // at integer |α| >= 1 both sides are exactly zero
    for k in 1..=5 {
        assert_eq!(rgamma(1.0 + k as f64) * rgamma(1.0 - k as f64), 0.0);
        assert_eq!(sinc(k as f64), 0.0);
    }
}

#[test]
fn pochhammer_gamma_identity() {
    // Γ(z+n) = (z)_n Γ(z)
    for z in [0.1, 0.5, 1.3, 2.7] {
        for n in 0..=10u32 {
            let lhs = gamma(z + n as f64).unwrap();
            let rhs = pochhammer(z, n) * gamma(z).unwrap();
            assert!(rel_close(lhs, rhs, 1e-10), "z={z} n={n}: {lhs} vs {rhs}");
        }
    }
}

proptest! {
    #[test]
    fn binomial_symmetry(n in 0u32..=10, alpha in -25.0f64..25.0) {
        let a = gen_binom(n, alpha);
        let b = gen_binom(n, n as f64 - alpha);
        prop_assert!(
            (a - b).abs() <= 1e-10 * (a.abs() + b.abs()) + 1e-280,
            "C({n},{alpha}) = {a} vs C({n},{}) = {b}", n as f64 - alpha
        );
    }

    #[test]
    fn binomial_recurrence(n in 1u32..=10, alpha in -20.0f64..20.0) {
        let whole = gen_binom(n, alpha);
        let left = gen_binom(n - 1, alpha);
        let right = gen_binom(n - 1, alpha - 1.0);
        let scale = whole.abs() + left.abs() + right.abs();
        prop_assert!(
            (whole - (left + right)).abs() <= 1e-10 * scale + 1e-280,
            "C({n},{alpha}): {whole} vs {left} + {right}"
        );
    }

    #[test]
    fn rgamma_is_reciprocal_of_gamma(x in -30.0f64..30.0) {
        // skip the pole windows where gamma refuses to evaluate
        prop_assume!(x > 0.0 || (x - x.round()).abs() > 1e-6);
        let p = rgamma(x) * gamma(x).unwrap();
        prop_assert!((p - 1.0).abs() <= 1e-12, "x={x}: {p}");
    }
}

// ---------------------------------------------------------------------------
// frac: closed forms vs the numeric route and each other
// ---------------------------------------------------------------------------

#[test]
fn operator_cross_validation_grid() {
    // numeric D^α t^{n-1} (quadrature + finite differences) against the
    // closed form, scaled tolerance 1e-3 (1 + |value|)
    for n in 1..=4u32 {
        let p = ShiftedPower::new(0.0, n as f64).unwrap();
        for alpha in [0.25, 0.5, 0.75, 1.5] {
            let order = FracOrder::new(alpha).unwrap();
            for t in [0.5, 1.0, 2.0] {
                let closed = rl_deriv_power(&p, alpha, t).unwrap();
                let numeric =
                    rl_deriv_numeric(|x| x.powi(n as i32 - 1), order, t, 1e-3, 1e-10).unwrap();
                let bound = 1e-3 * (1.0 + closed.abs());
                assert!(
                    (numeric - closed).abs() <= bound,
                    "n={n} α={alpha} t={t}: closed {closed}, numeric {numeric}"
                );
            }
        }
    }
}

#[test]
fn semigroup_on_powers() {
    // D^γ applied to the closed form of D^α (t)^{β-1} equals D^{α+γ}
    // directly, while every intermediate exponent parameter stays positive
    for beta in [2.5, 3.7, 5.2] {
        for alpha in [0.3, 1.1] {
            for gamma_ord in [0.45, 0.9] {
                for t in [0.7, 1.6] {
                    let p = ShiftedPower::new(0.0, beta).unwrap();
                    // D^α p = Γ(β) rgamma(β-α) (t)^{(β-α)-1}: a scaled power
                    let scale = gamma(beta).unwrap() * rgamma(beta - alpha);
                    let reduced = ShiftedPower::new(0.0, beta - alpha).unwrap();
                    let two_step = scale * rl_deriv_power(&reduced, gamma_ord, t).unwrap();
                    let one_step = rl_deriv_power(&p, alpha + gamma_ord, t).unwrap();
                    assert!(
                        rel_close(two_step, one_step, 1e-9),
                        "β={beta} α={alpha} γ={gamma_ord} t={t}: {two_step} vs {one_step}"
                    );
                }
            }
        }
    }
}

#[test]
fn integer_order_matches_analytic_derivative() {
    let coeffs = [2.0, -1.0, 0.5, 3.0, -0.25];
    let f = PowerSeries::new(coeffs.to_vec(), f64::INFINITY).unwrap();
    // analytic derivative: Σ k c_k t^{k-1}
    let deriv = |t: f64| {
        coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| k as f64 * c * t.powi(k as i32 - 1))
            .sum::<f64>()
    };
    for t in [0.3, 1.0, 2.2] {
        let got = rl_deriv_series(&f, 1.0, t).unwrap();
        assert!(rel_close(got, deriv(t), 1e-10), "t={t}: {got} vs {}", deriv(t));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn series_derivative_is_linear(
        fc in prop::collection::vec(-3.0f64..3.0, 1..6),
        gc in prop::collection::vec(-3.0f64..3.0, 1..6),
        c in -2.0f64..2.0,
        alpha in -1.5f64..1.9,
        t in 0.1f64..1.9,
    ) {
        let len = fc.len().max(gc.len());
        let pad = |v: &[f64]| {
            let mut out = v.to_vec();
            out.resize(len, 0.0);
            out
        };
        let combined: Vec<f64> = pad(&fc)
            .iter()
            .zip(pad(&gc).iter())
            .map(|(a, b)| c * a + b)
            .collect();
        let f = PowerSeries::new(fc.clone(), 2.0).unwrap();
        let g = PowerSeries::new(gc.clone(), 2.0).unwrap();
        let h = PowerSeries::new(combined, 2.0).unwrap();
        let lhs = rl_deriv_series(&h, alpha, t).unwrap();
        let rf = rl_deriv_series(&f, alpha, t).unwrap();
        let rg = rl_deriv_series(&g, alpha, t).unwrap();
        let rhs = c * rf + rg;
        let scale = (c * rf).abs() + rg.abs() + 1.0;
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale, "{lhs} vs {rhs}");
    }
}

// ---------------------------------------------------------------------------
// orderquad invariants
// ---------------------------------------------------------------------------

#[test]
fn lemma_integrand_t_independence() {
    // the t^α t^{n-α-1} cancellation: g(n, t, α)/t^{n-1} does not depend on t
    for n in 1..=6u32 {
        for i in 0..=100 {
            let alpha = -8.0 + 0.16 * i as f64;
            let norm = |t: f64| lemma_integrand(n, t, alpha) / t.powi(n as i32 - 1);
            let base = norm(1.0);
            for t in [0.5, 2.0] {
                let v = norm(t);
                assert!(
                    (v - base).abs() <= 1e-12 * base.abs().max(1e-30),
                    "n={n} α={alpha} t={t}: {v} vs {base}"
                );
            }
        }
    }
}

#[test]
fn lemma_reproduction_strict() {
    // |lemma_integral - (2t)^{n-1}| <= max(1e-8, 1e-8 (2t)^{n-1})
    for n in 1..=8u32 {
        for t in [0.25, 0.5, 1.0, 2.0] {
            let expected = (2.0 * t).powi(n as i32 - 1);
            let tol = 1e-8f64.max(1e-8 * expected);
            let cfg = QuadratureConfig { abs_tol: tol, ..Default::default() };
            let r = lemma_integral(n, t, &cfg).unwrap();
            assert!(r.converged, "n={n} t={t}: {} periods", r.periods_used);
            assert!(
                (r.value - expected).abs() <= tol,
                "n={n} t={t}: {} vs {expected} (diff {:e})",
                r.value,
                (r.value - expected).abs()
            );
        }
    }
}

#[test]
fn quadrature_matches_residue_oracle() {
    // ∫ sin(πα)/(α (1-α)_n) dα = π 2^n/n!, quadrature vs exact residues.
    // The integrand is evaluated in raw form: Gauss nodes never land on
    // the removable singularities at α = 0..n.
    for n in 1..=8u32 {
        let exact = indented_integral_value(n);
        let cfg = QuadratureConfig { abs_tol: 0.5e-8 * exact, ..Default::default() };
        let raw = |a: f64| sin_pi(a) / (a * pochhammer(1.0 - a, n));
        let r = integrate_order(raw, n + 1, &cfg).unwrap();
        assert!(r.converged, "n={n}: {} periods", r.periods_used);
        assert!(
            rel_close(r.value, exact, 1e-8),
            "n={n}: quadrature {} vs residues {exact}",
            r.value
        );
    }
}

#[test]
fn binomial_corollary() {
    for n in 1..=10u32 {
        let expected = 2.0f64.powi(n as i32);
        let cfg = QuadratureConfig { abs_tol: 0.5e-6 * expected, ..Default::default() };
        let r = binom_integral(n, &cfg).unwrap();
        assert!(r.converged, "n={n}");
        assert!(rel_close(r.value, expected, 1e-6), "n={n}: {}", r.value);
    }
}

#[test]
fn accelerator_is_load_bearing() {
    // raw symmetric truncation at A = 50 oscillates at Θ(1/A); the
    // accelerated estimate must beat it by at least a factor 100
    let mut raw = 0.0;
    for k in 0..50 {
        let a = k as f64;
        raw += gauss_panel(sinc, a, a + 1.0, 16) + gauss_panel(sinc, -(a + 1.0), -a, 16);
    }
    let raw_err = (raw - 1.0).abs();
    assert!(
        raw_err > 1e-4 && raw_err < 1e-1,
        "raw truncation error should be Θ(1/A), got {raw_err:e}"
    );
    let cfg = QuadratureConfig { abs_tol: 1e-9, ..Default::default() };
    let r = integrate_order(sinc, 1, &cfg).unwrap();
    let accel_err = (r.value - 1.0).abs();
    assert!(r.converged && r.used_acceleration);
    assert!(
        raw_err >= 100.0 * accel_err,
        "raw {raw_err:e} vs accelerated {accel_err:e}"
    );
}

#[test]
fn pv_pairing_cancels_odd_integrands() {
    let cfg = QuadratureConfig { abs_tol: 1e-10, ..Default::default() };
    let r = integrate_order(|a| a * sinc(a) * sinc(a), 1, &cfg).unwrap();
    assert!(r.converged);
    assert!(r.value.abs() <= 1e-10, "PV of odd integrand: {:e}", r.value);
}

#[test]
fn main_identity_linearity() {
    let fc = [1.0, 0.5, 0.25, 0.125];
    let gc = [0.0, 1.0, -0.5, 0.2];
    let c = 2.0;
    let combined: Vec<f64> = fc.iter().zip(gc.iter()).map(|(a, b)| c * a + b).collect();
    let f = PowerSeries::new(fc.to_vec(), 2.0).unwrap();
    let g = PowerSeries::new(gc.to_vec(), 2.0).unwrap();
    let h = PowerSeries::new(combined, 2.0).unwrap();
    let cfg = QuadratureConfig { abs_tol: 1e-8, ..Default::default() };
    for t in [0.0, 0.4, 1.1] {
        let rh = main_identity_eval(&h, t, &cfg).unwrap();
        let rf = main_identity_eval(&f, t, &cfg).unwrap();
        let rg = main_identity_eval(&g, t, &cfg).unwrap();
        let rhs = c * rf.value + rg.value;
        let budget = rh.err_estimate + c.abs() * rf.err_estimate + rg.err_estimate + 1e-12;
        assert!(
            (rh.value - rhs).abs() <= budget,
            "t={t}: {} vs {rhs} (budget {budget:e})",
            rh.value
        );
    }
}

#[test]
fn lemma_n1_case_is_sinc_normalization() {
    // the n = 1 integrand collapses to sinc(α) for every t
    for t in [0.5, 1.0, 7.0] {
        for alpha in [-2.3, 0.0, 0.5, 4.8] {
            assert!(
                (lemma_integrand(1, t, alpha) - sinc(alpha)).abs() < 1e-15,
                "t={t} α={alpha}"
            );
        }
    }
    let cfg = QuadratureConfig { abs_tol: 1e-9, ..Default::default() };
    let r = lemma_integral(1, 3.0, &cfg).unwrap();
    assert!((r.value - 1.0).abs() <= 1e-8, "∫ sinc = {}", r.value);
}

#[test]
fn indented_value_scales_binom_corollary() {
    // π 2^n/n! · n!/π = 2^n ties the two oracles together
    for n in 1..=8u32 {
        let coeff = indented_integral_value(n) / PI;
        let mut fact = 1.0;
        for k in 1..=n {
            fact *= k as f64;
        }
        assert!(rel_close(coeff * fact, 2.0f64.powi(n as i32), 1e-12), "n={n}");
    }
}
