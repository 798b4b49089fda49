//! Small special-function kit: the Gamma function via a Lanczos
//! approximation (g = 7, 9 terms), accurate to better than 1e-13 relative
//! error on the real line away from the poles.

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function for real arguments (poles at 0, -1, -2, ... return NaN).
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.5 {
        // reflection formula Γ(x)Γ(1-x) = π / sin(πx)
        let s = (std::f64::consts::PI * x).sin();
        if s == 0.0 {
            return f64::NAN;
        }
        return std::f64::consts::PI / (s * gamma(1.0 - x));
    }
    let z = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_err(got: f64, want: f64) -> f64 {
        ((got - want) / want).abs()
    }

    #[test]
    fn gamma_matches_reference_values() {
        // High-precision references (mpmath, 30 digits).
        let cases = [
            (0.1, 9.513_507_698_668_731_8),
            (0.25, 3.625_609_908_221_908_3),
            (0.5, 1.772_453_850_905_516_0), // sqrt(pi)
            (2.0 / 3.0, 1.354_117_939_426_400_4),
            (0.75, 1.225_416_702_465_177_6),
            (1.0, 1.0),
            (1.5, 0.886_226_925_452_758_0),
            (5.0, 24.0),
            (10.0, 362_880.0),
        ];
        for (x, want) in cases {
            assert!(
                rel_err(gamma(x), want) < 1e-12,
                "gamma({x}) = {} want {want}",
                gamma(x)
            );
        }
    }

    #[test]
    fn gamma_recurrence_holds() {
        for &x in &[0.3, 0.7, 1.3, 2.6, 4.9] {
            assert!(rel_err(gamma(x + 1.0), x * gamma(x)) < 1e-13);
        }
    }

    #[test]
    fn gamma_pole_is_nan() {
        assert!(gamma(0.0).is_nan());
        assert!(gamma(-1.0).is_nan());
    }
}
