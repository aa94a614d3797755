//! Shared numerical primitives: compensated summation, exact integer square
//! roots, bracketed root solving, adaptive quadrature and least-squares fits.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Kahan compensated accumulator for `f64`.
///
/// Summation order is chosen by the caller; with a fixed order the result is
/// bit-reproducible across runs and thread counts.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let y = value - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Compensated accumulator for complex values (componentwise Kahan).
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanComplex {
    re: KahanSum,
    im: KahanSum,
}

impl KahanComplex {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: Complex64) {
        self.re.add(value.re);
        self.im.add(value.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// e(t) = exp(2πit).
#[inline]
pub fn unit_phase(t: f64) -> Complex64 {
    let (s, c) = (2.0 * std::f64::consts::PI * t).sin_cos();
    Complex64::new(c, s)
}

/// Distance from `x` to the nearest integer, in [0, 1/2].
#[inline]
pub fn dist_to_int(x: f64) -> f64 {
    let frac = x - x.round();
    frac.abs()
}

/// Exact floor of sqrt(n) for u64, via a float seed and an integer
/// correction step. Never trusts the float rounding at the boundary.
#[inline]
pub fn isqrt_u64(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    // correct downward then upward; at most a couple of steps
    while x > 0 && x.saturating_mul(x) > n {
        x -= 1;
    }
    while (x + 1).saturating_mul(x + 1) <= n {
        x += 1;
    }
    x
}

/// Locate the root of a continuous increasing function by bisection.
///
/// Requires f(lo) <= 0 <= f(hi). The bracket is shrunk until its width is
/// below `tol * max(1, |hi|)`.
pub fn bisect_increasing<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    debug_assert!(lo <= hi);
    let scale = hi.abs().max(1.0);
    while hi - lo > tol * scale {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket exhausted at f64 resolution
        }
        if f(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Adaptive Simpson quadrature with a relative tolerance.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    rel_tol: f64,
    max_depth: u32,
) -> Result<f64> {
    fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
        h / 6.0 * (fa + 4.0 * fm + fb)
    }
    struct Ctx<'a, F> {
        f: &'a F,
        abs_tol: f64,
        max_depth: u32,
        failed: bool,
    }
    fn recurse<F: Fn(f64) -> f64>(
        ctx: &mut Ctx<'_, F>,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = (ctx.f)(lm);
        let frm = (ctx.f)(rm);
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol || (b - a) < 1e-15 {
            return left + right + delta / 15.0;
        }
        if depth >= ctx.max_depth {
            ctx.failed = true;
            return left + right;
        }
        recurse(ctx, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
            + recurse(ctx, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1)
    }

    if a == b {
        return Ok(0.0);
    }
    let fa = f(a);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(fa, fm, fb, b - a);
    let abs_tol = rel_tol * whole.abs().max(1e-300);
    let mut ctx = Ctx {
        f,
        abs_tol,
        max_depth,
        failed: false,
    };
    let v = recurse(&mut ctx, a, b, fa, fm, fb, whole, ctx.abs_tol, 0);
    if ctx.failed {
        return Err(Error::Quadrature(format!(
            "tolerance {rel_tol:.2e} unreachable on [{a}, {b}] at depth {max_depth}"
        )));
    }
    Ok(v)
}

/// Ordinary least-squares line fit y = slope*x + intercept.
///
/// Returns (slope, intercept, stderr of slope, rms residual).
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64, f64) {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    assert!(xs.len() >= 2, "need at least two points");
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let mut ss_res = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let r = y - (slope * x + intercept);
        ss_res += r * r;
    }
    let rms = (ss_res / n).sqrt();
    let stderr = if xs.len() > 2 {
        (ss_res / (n - 2.0) / sxx).sqrt()
    } else {
        0.0
    };
    (slope, intercept, stderr, rms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_matches_reference_on_small_values() {
        for n in 0u64..100_000 {
            let r = isqrt_u64(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n, "n={n}, r={r}");
        }
    }

    #[test]
    fn isqrt_near_perfect_squares() {
        for k in [3u64, 1 << 10, 94_906_265, 4_294_967_295] {
            for n in [k * k - 1, k * k, k * k + 1] {
                let r = isqrt_u64(n);
                assert!(r * r <= n && (r + 1).saturating_mul(r + 1) > n);
            }
        }
    }

    #[test]
    fn kahan_recovers_catastrophic_sum() {
        let mut k = KahanSum::new();
        k.add(1.0);
        for _ in 0..10_000 {
            k.add(1e-16);
        }
        assert!((k.value() - (1.0 + 1e-12)).abs() < 1e-15);
    }

    #[test]
    fn bisect_finds_cube_root() {
        let r = bisect_increasing(|x| x * x * x - 2.0, 0.0, 2.0, 1e-13);
        assert!((r - 2f64.powf(1.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn simpson_integrates_smooth_function() {
        let v = adaptive_simpson(&|x: f64| x.sin(), 0.0, std::f64::consts::PI, 1e-12, 40).unwrap();
        assert!((v - 2.0).abs() < 1e-10);
    }

    #[test]
    fn simpson_handles_sqrt_endpoint() {
        // integrand with infinite slope at the right endpoint
        let v = adaptive_simpson(&|x: f64| (1.0 - x).sqrt(), 0.0, 1.0, 1e-10, 50).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn linear_fit_exact_line() {
        let xs: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x - 1.0).collect();
        let (s, i, se, rms) = linear_fit(&xs, &ys);
        assert!((s - 3.0).abs() < 1e-12);
        assert!((i + 1.0).abs() < 1e-12);
        assert!(se < 1e-12 && rms < 1e-12);
    }

    #[test]
    fn dist_to_int_basics() {
        assert_eq!(dist_to_int(3.0), 0.0);
        assert!((dist_to_int(2.75) - 0.25).abs() < 1e-15);
        assert!((dist_to_int(-1.4) - 0.4).abs() < 1e-15);
        assert!((dist_to_int(0.5) - 0.5).abs() < 1e-15);
    }
}
