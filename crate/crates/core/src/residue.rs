//! Exact-rational oracle for the contour evaluation of
//!
//! ```text
//! P.V. ∫ sin(πα) / (α (1-α)(2-α)...(n-α)) dα
//! ```
//!
//! Q(z) = z(1-z)(2-z)...(n-z) has simple real zeros at 0..=n and nothing
//! in the upper half plane, so the principal value is π times the
//! imaginary part of i·Σ residues of e^{iπz}/Q(z) at the real poles. Each
//! residue is computed from the defining limit e^{iπj}/Q'(j) in exact
//! integer arithmetic — this module never quotes the closed form it is
//! used to verify, which is what makes it an independent oracle for the
//! quadrature route.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use std::f64::consts::PI;

/// Exact integer ratio (arbitrary precision, always reduced, positive
/// denominator).
pub type Rational = BigRational;

/// One pole of the integrand family with its residue.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidueTerm {
    /// Pole location j ∈ 0..=n.
    pub pole: u32,
    /// Residue of e^{iπz}/Q(z) at z = j; real for this family.
    pub value: Rational,
}

/// Residue of e^{iπz} / (z(1-z)(2-z)...(n-z)) at the simple pole z = j.
///
/// Assembled from the limit: the numerator contributes e^{iπj} = (-1)^j,
/// the denominator contributes Q'(j), built as an exact product over the
/// non-vanishing factors times the derivative of the vanishing one.
pub fn residue_at(n: u32, j: u32) -> Rational {
    assert!(n >= 1, "residue family needs n >= 1");
    assert!(j <= n, "pole index {j} out of range 0..={n}");
    // e^{iπj}
    let numerator = if j % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    // Q(z) = F_0(z) · Π_{i=1..n} F_i(z), F_0 = z, F_i = (i - z).
    // Q'(j) = F'_{v}(j) · Π_{i≠v} F_i(j), v the index of the factor
    // vanishing at j (F_0 for j = 0, else F_j with F'_j = -1).
    let mut qprime = BigInt::one();
    if j == 0 {
        // F_0' = 1; remaining factors are (i - 0) = i
        for i in 1..=n {
            qprime *= BigInt::from(i);
        }
    } else {
        // F_j' = -1; remaining factors are j and (i - j) for i ≠ j
        qprime = -BigInt::from(j);
        for i in 1..=n {
            if i != j {
                qprime *= BigInt::from(i as i64 - j as i64);
            }
        }
    }
    Rational::new(numerator, qprime)
}

/// All residues of the order-n family, by increasing pole location.
pub fn residues(n: u32) -> Vec<ResidueTerm> {
    (0..=n)
        .map(|j| ResidueTerm {
            pole: j,
            value: residue_at(n, j),
        })
        .collect()
}

/// Exact Σ_j res_{z=j}, the coefficient of π in the integral's value.
/// Summing the residues reproduces 2^n/n!.
pub fn closed_form_coeff(n: u32) -> Rational {
    assert!(n >= 1, "residue family needs n >= 1");
    let mut acc = Rational::from(BigInt::from(0));
    for j in 0..=n {
        acc += residue_at(n, j);
    }
    acc
}

/// The exact value of P.V. ∫ sin(πα)/(α(1-α)_n) dα as a float:
/// π × Σ residues.
pub fn indented_integral_value(n: u32) -> f64 {
    PI * closed_form_coeff(n)
        .to_f64()
        .expect("residue sum representable as f64")
}
