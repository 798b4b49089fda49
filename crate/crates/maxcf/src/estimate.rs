use serde::{Deserialize, Serialize};

/// Point estimate with a CLT standard error. Exact evaluations carry
/// `std_error = 0` and `n = 0`; Monte Carlo estimates record the sample
/// size and seed that produced them. The reported confidence band is
/// `value ± 4·std_error`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EstimateWithCi {
    pub value: f64,
    pub std_error: f64,
    pub n: usize,
    pub seed: u64,
}

/// Absolute slack added to every CI comparison so that exact-vs-exact
/// checks tolerate floating-point rounding.
pub const CI_FLOOR: f64 = 1e-9;

impl EstimateWithCi {
    pub fn exact(value: f64) -> Self {
        Self {
            value,
            std_error: 0.0,
            n: 0,
            seed: 0,
        }
    }

    pub fn monte_carlo(value: f64, std_error: f64, n: usize, seed: u64) -> Self {
        Self {
            value,
            std_error,
            n,
            seed,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.std_error == 0.0
    }

    pub fn half_width(&self) -> f64 {
        4.0 * self.std_error
    }

    pub fn lower(&self) -> f64 {
        self.value - self.half_width()
    }

    pub fn upper(&self) -> f64 {
        self.value + self.half_width()
    }

    /// True when `x` lies inside the 4-sigma band (plus the absolute floor).
    pub fn contains(&self, x: f64) -> bool {
        (x - self.value).abs() <= self.half_width() + CI_FLOOR
    }

    /// True when the 4-sigma bands of the two estimates intersect.
    pub fn overlaps(&self, other: &EstimateWithCi) -> bool {
        (self.value - other.value).abs() <= self.half_width() + other.half_width() + CI_FLOOR
    }

    /// True when the bands are disjoint, i.e. the values are statistically
    /// distinguishable at the 4-sigma level.
    pub fn separated_from(&self, other: &EstimateWithCi) -> bool {
        !self.overlaps(other)
    }
}

/// Sample mean and CLT standard error of a slice.
pub fn mean_and_se(values: &[f64]) -> (f64, f64) {
    let n = values.len();
    assert!(n > 0, "mean of empty slice");
    let mean = values.iter().sum::<f64>() / n as f64;
    if n == 1 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n as f64 - 1.0);
    (mean, (var / n as f64).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_estimate_has_zero_band() {
        let e = EstimateWithCi::exact(2.5);
        assert!(e.is_exact());
        assert_eq!(e.half_width(), 0.0);
        assert!(e.contains(2.5));
        assert!(!e.contains(2.5 + 1e-6));
    }

    #[test]
    fn overlap_uses_four_sigma() {
        let a = EstimateWithCi::monte_carlo(1.0, 0.1, 100, 7);
        let b = EstimateWithCi::monte_carlo(1.7, 0.1, 100, 8);
        assert!(a.overlaps(&b)); // gap 0.7 < 0.4 + 0.4
        let c = EstimateWithCi::monte_carlo(2.0, 0.1, 100, 9);
        assert!(a.separated_from(&c)); // gap 1.0 > 0.8
    }

    #[test]
    fn mean_and_se_matches_direct_computation() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let (m, se) = mean_and_se(&xs);
        assert!((m - 2.5).abs() < 1e-15);
        // sample variance 5/3, se = sqrt(5/12)
        assert!((se - (5.0f64 / 12.0).sqrt()).abs() < 1e-15);
    }
}
