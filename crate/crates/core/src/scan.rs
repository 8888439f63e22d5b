//! One-dimensional machinery shared by the radius computations: a seeded
//! grid scan refined by golden-section search, and bracketing bisection.

/// Uniform grid size used to seed every minimization.
pub const GRID_POINTS: usize = 2048;
/// Argument tolerance of the golden-section refinement.
pub const GOLDEN_TOL: f64 = 1e-12;
/// Values closer than this are ties; the smaller argument wins.
pub const TIE_TOL: f64 = 1e-14;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanMin {
    pub x: f64,
    pub value: f64,
}

/// Minimizes `f` over `[lo, hi]`.
///
/// The grid minimum (smallest argument among ties) brackets a golden-section
/// search; the refined point only replaces the grid point if it is lower by
/// more than [`TIE_TOL`].
pub fn scan_minimize<F>(f: F, lo: f64, hi: f64) -> ScanMin
where
    F: Fn(f64) -> f64,
{
    debug_assert!(lo <= hi);
    let n = GRID_POINTS;
    let step = (hi - lo) / (n - 1) as f64;
    let grid_x = |i: usize| if i == n - 1 { hi } else { lo + step * i as f64 };

    let values: Vec<f64> = (0..n).map(|i| f(grid_x(i))).collect();
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let best = values.iter().position(|&v| v <= min + TIE_TOL).unwrap_or(0);

    let grid_best = ScanMin {
        x: grid_x(best),
        value: values[best],
    };
    if step == 0.0 {
        return grid_best;
    }

    let a = grid_x(best.saturating_sub(1));
    let b = grid_x((best + 1).min(n - 1));
    let refined = golden_section(&f, a, b, GOLDEN_TOL);
    if refined.value < grid_best.value - TIE_TOL {
        refined
    } else {
        grid_best
    }
}

/// Golden-section search for a minimum of `f` on `[a, b]`.
pub fn golden_section<F>(f: &F, mut a: f64, mut b: f64, tol: f64) -> ScanMin
where
    F: Fn(f64) -> f64,
{
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    // 200 iterations shrink any unit bracket far below f64 resolution.
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        if fc <= fd {
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
    let mut best = ScanMin { x: c, value: fc };
    for x in [d, a, b] {
        let v = f(x);
        if v < best.value {
            best = ScanMin { x, value: v };
        }
    }
    best
}

/// Root of a nondecreasing function with `f(lo) <= 0 <= f(hi)`.
pub fn bisect_increasing<F>(f: F, mut lo: f64, mut hi: f64, tol: f64, max_iter: usize) -> f64
where
    F: Fn(f64) -> f64,
{
    for _ in 0..max_iter {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_interior_minimum() {
        let m = scan_minimize(|x| (x - 0.3).powi(2) + 1.0, 0.0, 1.0);
        assert!((m.x - 0.3).abs() < 1e-6);
        assert!((m.value - 1.0).abs() < 1e-14);
    }

    #[test]
    fn endpoint_minimum_and_constant_tie_break() {
        let m = scan_minimize(|x| 1.0 / (1.0 + x), 0.0, 0.5);
        assert_eq!(m.x, 0.5);
        let c = scan_minimize(|_| 0.25, 0.1, 0.9);
        assert_eq!(c.x, 0.1);
    }

    #[test]
    fn escapes_local_minimum_trap() {
        // shallow local min near 0.2, global min near 0.8
        let f = |x: f64| {
            -(-((x - 0.2) / 0.05).powi(2)).exp() - 2.0 * (-((x - 0.8) / 0.01).powi(2)).exp()
        };
        let m = scan_minimize(f, 0.0, 1.0);
        assert!((m.x - 0.8).abs() < 1e-6);
    }

    #[test]
    fn bisection_solves_cubic() {
        let x = bisect_increasing(|x| x + x * x * x - 1.0, 0.0, 1.0, 1e-14, 200);
        assert!((x - 0.682_327_803_828_019_3).abs() < 1e-13);
    }
}
