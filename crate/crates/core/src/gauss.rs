//! Gauss-Legendre quadrature rule with nodes computed by Newton iteration
//! on the Legendre recurrence.

use std::f64::consts::PI;

/// Legendre polynomial P_n(x) and its derivative.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let dp = if (x * x - 1.0).abs() < 1e-300 {
        // endpoints never reached by interior roots; keep a finite fallback
        0.5 * (n * (n + 1)) as f64 * x.signum()
    } else {
        (n as f64) * (x * p1 - p0) / (x * x - 1.0)
    };
    (p1, dp)
}

/// Nodes and weights on [-1, 1].
#[derive(Debug, Clone)]
pub(crate) struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Build an `n`-point rule (n >= 2). Roots are found to machine
    /// precision in a handful of Newton steps from the Chebyshev guess.
    pub(crate) fn new(n: usize) -> Self {
        assert!(n >= 2, "Gauss-Legendre rule needs at least 2 nodes");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..60 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 2.0 * f64::EPSILON * x.abs().max(1.0) {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = x;
            nodes[n - 1 - i] = -x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    /// Integrate `f` over [a, b] with this rule.
    pub(crate) fn integrate<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: &F) -> f64 {
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(c + h * x);
        }
        h * acc
    }
}

/// Adaptive bisection driven by comparing a low- and a high-order rule on
/// each panel. The tolerance budget is split between halves so the total
/// absolute error stays below `tol`.
pub(crate) fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: u32,
) -> crate::Result<f64> {
    let lo = GaussLegendre::new(10);
    let hi = GaussLegendre::new(20);
    adaptive_rec(f, a, b, tol, 0, max_depth, &lo, &hi)
}

fn adaptive_rec<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
    max_depth: u32,
    lo: &GaussLegendre,
    hi: &GaussLegendre,
) -> crate::Result<f64> {
    let coarse = lo.integrate(a, b, f);
    let fine = hi.integrate(a, b, f);
    if (fine - coarse).abs() <= tol {
        return Ok(fine);
    }
    if depth >= max_depth {
        return Err(crate::Error::QuadratureDepth { max_depth });
    }
    let mid = 0.5 * (a + b);
    let left = adaptive_rec(f, a, mid, 0.5 * tol, depth + 1, max_depth, lo, hi)?;
    let right = adaptive_rec(f, mid, b, 0.5 * tol, depth + 1, max_depth, lo, hi)?;
    Ok(left + right)
}
