//! Small numerical helpers shared by the physics modules.

use alloc::vec::Vec;
use num_complex::Complex64;

/// Bisection on a bracket `[lo, hi]` with `f(lo)` and `f(hi)` of opposite
/// sign (or one of them zero).
///
/// Stops once the bracket is no wider than `tol` or the midpoint is no
/// longer representable between the endpoints; `tol = 0.0` refines to full
/// `f64` precision. Returns `None` when the input is not a bracket.
pub fn bisect<F>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Option<f64>
where
    F: Fn(f64) -> f64,
{
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Some(lo);
    }
    if fhi == 0.0 {
        return Some(hi);
    }
    if flo.is_nan() || fhi.is_nan() || (flo > 0.0) == (fhi > 0.0) {
        return None;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return Some(mid);
        }
        if (fmid > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        if hi - lo <= tol {
            break;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Richardson extrapolation of a sequence sampled at step sizes
/// `h, h/q, h/q², …` whose error expands in integer powers of `h`.
///
/// `values[j]` is the estimate at step `h / q^j`. Returns the corner of
/// the Neville tableau, which cancels the first `values.len() - 1` error
/// orders.
pub fn richardson(values: &[Complex64], q: f64) -> Complex64 {
    let mut row: Vec<Complex64> = values.to_vec();
    let mut factor = 1.0;
    for level in 1..values.len() {
        factor *= q;
        for j in (level..values.len()).rev() {
            row[j] = (row[j] * factor - row[j - 1]) / (factor - 1.0);
        }
    }
    row[values.len() - 1]
}

/// Ordinary least-squares line through `(x, y)` pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

pub fn linear_fit(xs: &[f64], ys: &[f64]) -> LinearFit {
    let n = xs.len().min(ys.len()) as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    let slope = sxy / sxx;
    let r_squared = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    LinearFit {
        slope,
        intercept: my - slope * mx,
        r_squared,
    }
}

/// Determinant of a small dense complex matrix by Gaussian elimination
/// with partial pivoting.
pub fn determinant<const N: usize>(mut m: [[Complex64; N]; N]) -> Complex64 {
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..N {
        let pivot = (col..N)
            .max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))
            .unwrap_or(col);
        if m[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col];
        det *= p;
        for row in col + 1..N {
            let factor = m[row][col] / p;
            for c in col..N {
                let sub = factor * m[col][c];
                m[row][c] -= sub;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 0.0).unwrap();
        assert!((r - core::f64::consts::SQRT_2).abs() < 1e-15);
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-6).unwrap();
        assert!((r - core::f64::consts::SQRT_2).abs() < 1e-6);
    }

    #[test]
    fn bisect_rejects_non_bracket() {
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_none());
    }

    #[test]
    fn richardson_cancels_polynomial_error() {
        // g(h) = 3 + 2h - 5h² + h³ sampled at h, h/2, h/4, h/8 -> exact.
        let g = |h: f64| Complex64::new(3.0 + 2.0 * h - 5.0 * h * h + h * h * h, 0.0);
        let h = 0.1;
        let vals = [g(h), g(h / 2.0), g(h / 4.0), g(h / 8.0)];
        assert!((richardson(&vals, 2.0).re - 3.0).abs() < 1e-13);
    }

    #[test]
    fn fit_exact_line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys = [3.0, 5.0, 7.0, 9.0];
        let f = linear_fit(&xs, &ys);
        assert!((f.slope - 2.0).abs() < 1e-14);
        assert!((f.intercept - 1.0).abs() < 1e-14);
        assert!((f.r_squared - 1.0).abs() < 1e-14);
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let c = |re, im| Complex64::new(re, im);
        let m = [
            [c(1.0, 2.0), c(0.5, -1.0), c(3.0, 0.0)],
            [c(-2.0, 0.0), c(1.0, 1.0), c(0.0, 4.0)],
            [c(0.0, 1.0), c(2.0, 0.0), c(1.0, -1.0)],
        ];
        let cof = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        assert!((determinant(m) - cof).norm() < 1e-12);
    }
}
