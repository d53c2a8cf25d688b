//! Gauss-Legendre rules by Newton iteration on the Legendre recurrence.

/// Nodes and weights of the m-point Gauss-Legendre rule on `[a, b]`.
///
/// Exact for polynomials of degree <= 2m-1. Panics if `m == 0` or `a >= b`.
pub fn gauss_legendre(m: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    assert!(m >= 1, "gauss_legendre: need at least one node");
    assert!(a < b, "gauss_legendre: empty interval");
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    // Symmetric rule: solve for the first half, mirror the rest.
    let half = (m + 1) / 2;
    for i in 0..half {
        // Tricomi-style initial guess for the i-th root of P_m.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_m(x) and P_m'(x) by the three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=m {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pm = if m == 1 { x } else { p1 };
            let pm1 = if m == 1 { 1.0 } else { p0 };
            dp = m as f64 * (pm1 - x * pm) / (1.0 - x * x);
            let dx = pm / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[m - 1 - i] = x;
        weights[i] = w;
        weights[m - 1 - i] = w;
    }
    let mid = 0.5 * (a + b);
    let hw = 0.5 * (b - a);
    for i in 0..m {
        nodes[i] = mid + hw * nodes[i];
        weights[i] *= hw;
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn integrate(m: usize, a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
        let (x, w) = gauss_legendre(m, a, b);
        x.iter().zip(&w).map(|(&xi, &wi)| wi * f(xi)).sum()
    }

    #[test]
    fn cubic_with_two_points() {
        assert!((integrate(2, 0.0, 1.0, |x| x * x * x) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn weights_sum_to_length() {
        let (_, w) = gauss_legendre(7, -1.0, 1.0);
        let total: f64 = w.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
    }

    #[test]
    fn degree_seven_with_four_points() {
        assert!((integrate(4, 0.0, 1.0, |x| x.powi(7)) - 0.125).abs() < 1e-14);
    }

    #[test]
    fn smooth_transcendental_converges() {
        let exact = 1.0 - (-1.0f64).exp();
        assert!((integrate(20, 0.0, 1.0, |x| (-x).exp()) - exact).abs() < 1e-14);
    }

    #[test]
    fn high_order_nodes_stay_sorted_and_inside() {
        let (x, w) = gauss_legendre(64, -1.0, 1.0);
        for i in 1..x.len() {
            assert!(x[i] > x[i - 1]);
        }
        assert!(x[0] > -1.0 && x[63] < 1.0);
        assert!(w.iter().all(|&wi| wi > 0.0));
    }
}
