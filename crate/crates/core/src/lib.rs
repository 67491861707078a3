//! Fractional differentiation integrated over the derivative's order.
//!
//! The Riemann-Liouville derivative D^α of an analytic function, weighted
//! by t^α/Γ(α+1) and integrated over every real order α, reproduces the
//! function at a doubled argument:
//!
//! ```text
//! ∫ t^α/Γ(α+1) · D^α[f(·/2)](t) dα = f(t)
//! ```
//!
//! This crate evaluates both sides of that identity — and the lemmas
//! behind it — by three mutually checking routes:
//!
//! * [`frac`]: closed-form Riemann-Liouville derivatives of powers and
//!   power series, plus a slow quadrature oracle built from the defining
//!   integral;
//! * [`orderquad`]: principal-value quadrature of the order-integrals,
//!   with Euler-transform acceleration for the conditionally convergent
//!   sinc case;
//! * [`residue`]: exact rational residue computation giving the contour
//!   value π·2^n/n! the quadrature must match.
//!
//! [`specfun`] supplies the shared kernel (Gamma, reciprocal Gamma, sinc,
//! Pochhammer, real-order binomials).
//!
//! # Example
//!
//! ```
//! use dalpha::orderquad::{lemma_integral, QuadratureConfig};
//!
//! let cfg = QuadratureConfig { abs_tol: 1e-8, ..Default::default() };
//! let r = lemma_integral(3, 0.5, &cfg).unwrap();
//! assert!(r.converged);
//! assert!((r.value - 1.0).abs() < 1e-7); // (2t)^{n-1} = 1
//! ```

mod error;
mod gauss;

pub mod frac;
pub mod orderquad;
pub mod residue;
pub mod specfun;

pub use error::{Error, Result};
