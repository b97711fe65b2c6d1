//! Hurwitz zeta function ζ(s, q) = Σ_{k≥0} (q + k)^-s for real s > 1, q > 0,
//! together with its derivative in s, by Euler–Maclaurin summation.

const SHIFT: usize = 12;

/// B_{2j} / (2j)! for j = 1..=10.
const BERNOULLI_OVER_FACTORIAL: [f64; 10] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40_320.0,
    5.0 / 66.0 / 3_628_800.0,
    -691.0 / 2730.0 / 479_001_600.0,
    7.0 / 6.0 / 87_178_291_200.0,
    -3617.0 / 510.0 / 20_922_789_888_000.0,
    43_867.0 / 798.0 / 6_402_373_705_728_000.0,
    -174_611.0 / 330.0 / 2_432_902_008_176_640_000.0,
];

pub fn hurwitz_zeta(s: f64, q: f64) -> f64 {
    hurwitz_zeta_with_derivative(s, q).0
}

/// Returns `(ζ(s, q), ∂ζ/∂s (s, q))`.
pub fn hurwitz_zeta_with_derivative(s: f64, q: f64) -> (f64, f64) {
    debug_assert!(s > 1.0 && q > 0.0, "hurwitz zeta needs s > 1, q > 0 (s={s}, q={q})");
    let mut value = 0.0;
    let mut deriv = 0.0;
    for k in 0..SHIFT {
        let x = q + k as f64;
        let term = x.powf(-s);
        value += term;
        deriv -= x.ln() * term;
    }

    let a = q + SHIFT as f64;
    let ln_a = a.ln();
    let a_pow = a.powf(-s);

    // integral tail a^(1-s)/(s-1)
    let integral = a * a_pow / (s - 1.0);
    value += integral;
    deriv += -ln_a * integral - integral / (s - 1.0);

    // half endpoint term
    value += 0.5 * a_pow;
    deriv -= 0.5 * ln_a * a_pow;

    // Bernoulli corrections: B_{2j}/(2j)! · s(s+1)…(s+2j-2) · a^(-s-2j+1)
    let mut rising = s;
    let mut rising_log_deriv = 1.0 / s;
    let mut power = a_pow / a;
    for (j, coef) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        if j > 0 {
            let i = (2 * j - 1) as f64;
            rising *= (s + i) * (s + i + 1.0);
            rising_log_deriv += 1.0 / (s + i) + 1.0 / (s + i + 1.0);
            power /= a * a;
        }
        let term = coef * rising * power;
        value += term;
        deriv += term * (rising_log_deriv - ln_a);
    }
    (value, deriv)
}
