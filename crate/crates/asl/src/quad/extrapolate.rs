//! Extrapolation of (1-s)-scaled estimates to the s → 1⁻ limit.

use crate::error::{AslError, Result};

/// Least-squares fit of `value(s) ≈ L + c·(1-s)` over the given points.
///
/// Returns `(L, c, max |residual|)`. The affine model is a modeling choice:
/// no convergence rate is asserted, and the reported residual is the misfit
/// signal. Requires at least three points with distinct s in (0,1).
pub fn extrapolate_limit(points: &[(f64, f64)]) -> Result<(f64, f64, f64)> {
    if points.len() < 3 {
        return Err(AslError::InvalidArgument(format!(
            "extrapolate_limit: need at least 3 points, got {}",
            points.len()
        )));
    }
    let mut ss: Vec<f64> = points.iter().map(|&(s, _)| s).collect();
    ss.sort_by(f64::total_cmp);
    if ss.windows(2).any(|w| w[0] == w[1]) {
        return Err(AslError::InvalidArgument("extrapolate_limit: s values must be distinct".into()));
    }
    if ss.iter().any(|&s| s <= 0.0 || s >= 1.0) {
        return Err(AslError::InvalidArgument("extrapolate_limit: s values must lie in (0,1)".into()));
    }
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(s, v) in points {
        let x = 1.0 - s;
        sx += x;
        sy += v;
        sxx += x * x;
        sxy += x * v;
    }
    let det = n * sxx - sx * sx;
    let slope = (n * sxy - sx * sy) / det;
    let limit = (sy - slope * sx) / n;
    let residual = points
        .iter()
        .map(|&(s, v)| (v - (limit + slope * (1.0 - s))).abs())
        .fold(0.0, f64::max);
    Ok((limit, slope, residual))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_affine_data() {
        let pts: Vec<(f64, f64)> =
            [0.9, 0.95, 0.99].iter().map(|&s| (s, 7.0 + 2.0 * (1.0 - s))).collect();
        let (l, c, r) = extrapolate_limit(&pts).unwrap();
        assert!((l - 7.0).abs() < 1e-12);
        assert!((c - 2.0).abs() < 1e-12);
        assert!(r < 1e-12);
    }

    #[test]
    fn constant_data() {
        let pts = vec![(0.8, 5.0), (0.9, 5.0), (0.95, 5.0), (0.99, 5.0)];
        let (l, c, r) = extrapolate_limit(&pts).unwrap();
        assert!((l - 5.0).abs() < 1e-12);
        assert!(c.abs() < 1e-12);
        assert!(r < 1e-12);
    }

    #[test]
    fn rejects_degenerate_input() {
        assert!(extrapolate_limit(&[(0.9, 1.0), (0.95, 1.0)]).is_err());
        assert!(extrapolate_limit(&[(0.9, 1.0), (0.9, 1.1), (0.95, 1.0)]).is_err());
        assert!(extrapolate_limit(&[(0.9, 1.0), (0.95, 1.0), (1.0, 1.0)]).is_err());
    }

    #[test]
    fn quadratic_misfit_shows_in_residual() {
        let pts: Vec<(f64, f64)> = [0.8, 0.9, 0.95, 0.99]
            .iter()
            .map(|&s| {
                let x: f64 = 1.0 - s;
                (s, 3.0 + x + 5.0 * x * x)
            })
            .collect();
        let (_, _, r) = extrapolate_limit(&pts).unwrap();
        assert!(r > 1e-4, "curved data must leave a visible residual, got {r}");
    }
}
