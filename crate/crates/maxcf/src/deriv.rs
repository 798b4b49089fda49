//! One-sided numerical differentiation: forward differences over a
//! decreasing step schedule with Richardson extrapolation.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct DerivConfig {
    /// Decreasing forward-difference steps.
    pub steps: Vec<f64>,
    /// Richardson extrapolation order (columns of the tableau).
    pub order: usize,
    /// Convergence: the last two extrapolants must differ by less than this.
    pub tol: f64,
}

impl Default for DerivConfig {
    fn default() -> Self {
        Self {
            steps: vec![1e-2, 1e-3, 1e-4, 1e-5],
            order: 2,
            tol: 1e-7,
        }
    }
}

/// Right derivative of `g` at `t0` from forward differences
/// `(g(t0+h) - g(t0)) / h` extrapolated in powers of `h` (Neville scheme,
/// valid for any decreasing step schedule).
///
/// Fails with `NumericFailure` when the extrapolants do not settle within
/// the configured tolerance, which is the symptom of differentiating a
/// noisy or locally non-smooth function.
pub fn right_derivative<G>(g: G, t0: f64, cfg: &DerivConfig) -> Result<f64>
where
    G: Fn(f64) -> Result<f64>,
{
    let m = cfg.steps.len();
    if m < cfg.order + 1 {
        return Err(Error::InvalidParameter(
            "step schedule shorter than extrapolation order + 1".into(),
        ));
    }
    let g0 = g(t0)?;
    let mut tableau = vec![vec![f64::NAN; cfg.order + 1]; m];
    for (i, &h) in cfg.steps.iter().enumerate() {
        tableau[i][0] = (g(t0 + h)? - g0) / h;
    }
    // T[i][j] eliminates the O(h^j) error term using steps h_i .. h_{i+j}
    for j in 1..=cfg.order {
        for i in 0..m - j {
            let ratio = cfg.steps[i] / cfg.steps[i + j];
            tableau[i][j] =
                tableau[i + 1][j - 1] + (tableau[i + 1][j - 1] - tableau[i][j - 1]) / (ratio - 1.0);
        }
    }
    let col = cfg.order;
    let rows = m - col;
    let last = tableau[rows - 1][col];
    let prev = tableau[rows - 2][col];
    let achieved = (last - prev).abs();
    if achieved >= cfg.tol {
        return Err(Error::NumericFailure {
            what: "right-derivative extrapolation".into(),
            achieved,
            tolerance: cfg.tol,
        });
    }
    Ok(last)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_smooth_function() {
        let g = |t: f64| Ok(t * t * t + 2.0 * t);
        let d = right_derivative(g, 1.0, &DerivConfig::default()).unwrap();
        assert!((d - 5.0).abs() < 1e-9, "{d}");
    }

    #[test]
    fn derivative_of_exponential() {
        let g = |t: f64| Ok((2.0 * t).exp());
        let d = right_derivative(g, 0.5, &DerivConfig::default()).unwrap();
        assert!((d - 2.0 * 1.0f64.exp()).abs() < 1e-7, "{d}");
    }

    #[test]
    fn right_derivative_at_kink_uses_right_branch() {
        // g(t) = |t - 1| has right derivative +1 at t = 1
        let g = |t: f64| Ok((t - 1.0f64).abs());
        let d = right_derivative(g, 1.0, &DerivConfig::default()).unwrap();
        assert!((d - 1.0).abs() < 1e-10, "{d}");
    }

    #[test]
    fn noisy_function_is_rejected() {
        // deterministic high-frequency noise breaks the h-expansion
        let g = |t: f64| Ok(t + 1e-3 * (1e7 * t).sin());
        let err = right_derivative(g, 1.0, &DerivConfig::default());
        assert!(matches!(err, Err(Error::NumericFailure { .. })));
    }
}
