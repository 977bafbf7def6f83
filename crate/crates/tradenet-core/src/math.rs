//! Small numeric helpers shared by the fitting and metrics modules.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Bernoulli numbers B_2..B_12 divided by (2j)!, for Euler-Maclaurin tails.
const B2J_OVER_FACT: [f64; 6] = [
    1.0 / 12.0,                  // B2/2!
    -1.0 / 720.0,                // B4/4!
    1.0 / 30240.0,               // B6/6!
    -1.0 / 1209600.0,            // B8/8!
    1.0 / 47900160.0,            // B10/10!
    -691.0 / 1307674368000.0,    // B12/12!
];

/// Hurwitz zeta ζ(s, a) = Σ_{k≥0} (a+k)^-s for s > 1, a ≥ 1.
///
/// Euler-Maclaurin with the direct sum carried until a+k ≥ 16; absolute
/// error is far below 1e-10 over the exponent range used by the fitters.
pub fn hurwitz_zeta(s: f64, a: f64) -> f64 {
    debug_assert!(s > 1.0, "hurwitz_zeta requires s > 1");
    debug_assert!(a >= 1.0, "hurwitz_zeta requires a >= 1");
    let cut = 16.0f64.max(a);
    let mut sum = 0.0;
    let mut k = a;
    while k < cut {
        sum += k.powf(-s);
        k += 1.0;
    }
    // k == first point not summed directly; integrate the remainder.
    let inv = k.powf(-s);
    sum += k * inv / (s - 1.0); // k^(1-s)/(s-1)
    sum += 0.5 * inv;
    let mut deriv = s * inv / k; // s * k^(-s-1)
    let mut total = sum;
    for (j, coef) in B2J_OVER_FACT.iter().enumerate() {
        total += coef * deriv;
        // next odd derivative factor: multiply by (s+2j+1)(s+2j+2)/k^2
        let m = s + 2.0 * j as f64;
        deriv *= (m + 1.0) * (m + 2.0) / (k * k);
    }
    total
}

/// Maximize a unimodal function on [lo, hi] by golden-section search.
///
/// Returns the abscissa of the maximum to within `tol`.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a) > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Ordinary least squares for y = intercept + slope * x.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub sse: f64,
}

/// Fit a line by least squares. Requires at least 2 points; with fewer,
/// or with zero x-variance, returns `None`.
pub fn fit_line(xs: &[f64], ys: &[f64]) -> Option<LineFit> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    if n < 2 {
        return None;
    }
    let nf = n as f64;
    let mx = xs.iter().sum::<f64>() / nf;
    let my = ys.iter().sum::<f64>() / nf;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for i in 0..n {
        let dx = xs[i] - mx;
        sxx += dx * dx;
        sxy += dx * (ys[i] - my);
    }
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| {
            let r = y - (intercept + slope * x);
            r * r
        })
        .sum();
    Some(LineFit { slope, intercept, sse })
}

/// Deterministic per-task RNG: same (seed, stream) always yields the same
/// sequence, so parallel and serial schedules agree bit-exactly.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_matches_reference_values() {
        // Riemann zeta specials (a = 1).
        assert!((hurwitz_zeta(2.0, 1.0) - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
        assert!((hurwitz_zeta(3.0, 1.0) - 1.2020569031595943).abs() < 1e-12);
        assert!((hurwitz_zeta(1.5, 1.0) - 2.612375348685488).abs() < 1e-11);
        // Shift identity: ζ(s, a+1) = ζ(s, a) - a^-s.
        assert!((hurwitz_zeta(2.0, 2.0) - (hurwitz_zeta(2.0, 1.0) - 1.0)).abs() < 1e-13);
        let direct: f64 = (5..2_000_000).map(|k| (k as f64).powf(-2.5)).sum::<f64>();
        assert!((hurwitz_zeta(2.5, 5.0) - direct).abs() < 1e-9);
    }

    #[test]
    fn golden_section_finds_parabola_peak() {
        let x = golden_section_max(|x| -(x - 2.0) * (x - 2.0), 0.0, 5.0, 1e-9);
        assert!((x - 2.0).abs() < 1e-7);
    }

    #[test]
    fn line_fit_recovers_exact_line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x - 1.0).collect();
        let fit = fit_line(&xs, &ys).unwrap();
        assert!((fit.slope - 3.0).abs() < 1e-12);
        assert!((fit.intercept + 1.0).abs() < 1e-12);
        assert!(fit.sse < 1e-20);
    }

    #[test]
    fn line_fit_rejects_degenerate_input() {
        assert!(fit_line(&[1.0], &[2.0]).is_none());
        assert!(fit_line(&[2.0, 2.0], &[1.0, 3.0]).is_none());
    }

    #[test]
    fn stream_rng_is_reproducible_and_stream_separated() {
        use rand::RngCore;
        let mut r1 = stream_rng(7, 3);
        let mut r2 = stream_rng(7, 3);
        let mut r3 = stream_rng(7, 4);
        let x1: Vec<u64> = (0..8).map(|_| r1.next_u64()).collect();
        let x2: Vec<u64> = (0..8).map(|_| r2.next_u64()).collect();
        let x3: Vec<u64> = (0..8).map(|_| r3.next_u64()).collect();
        assert_eq!(x1, x2);
        assert_ne!(x1, x3);
    }
}
