//! Small dense vector/matrix helpers on `f64` slices.
//!
//! Dimensions here are tiny (n <= 4 in practice), so everything is plain
//! loops over slices; no linear-algebra dependency is warranted.

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn scaled(a: &[f64], c: f64) -> Vec<f64> {
    a.iter().map(|x| c * x).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `a + c*b`.
pub fn axpy(a: &[f64], c: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + c * y).collect()
}

pub fn negated(a: &[f64]) -> Vec<f64> {
    a.iter().map(|x| -x).collect()
}

/// Matrix-vector product for a dense row-major square matrix.
pub fn matvec(m: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    m.iter().map(|row| dot(row, x)).collect()
}

/// Sum in a fixed pairwise (binary-tree) order.
///
/// Every accumulation that feeds a reproducibility contract goes through
/// this, so results are bit-identical no matter how the terms were produced
/// (serially or from a parallel indexed collect).
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let half = n / 2;
            pairwise_sum(&xs[..half]) + pairwise_sum(&xs[half..])
        }
    }
}

/// Solve `M x = b` for a small dense system by partial-pivot elimination.
pub fn solve_dense(m: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let n = b.len();
    let mut a: Vec<Vec<f64>> = m
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        for row in 0..n {
            if row != col {
                let factor = a[row][col] / a[col][col];
                for k in col..=n {
                    a[row][k] -= factor * a[col][k];
                }
            }
        }
    }
    Some((0..n).map(|i| a[i][n] / a[i][i]).collect())
}

/// Cholesky factor L (lower triangular, row-major) of a symmetric
/// positive-definite matrix, or None if not SPD.
pub fn cholesky(m: &[Vec<f64>]) -> Option<Vec<Vec<f64>>> {
    let n = m.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut sum = m[i][j];
            for k in 0..j {
                sum -= l[i][k] * l[j][k];
            }
            if i == j {
                if sum <= 0.0 {
                    return None;
                }
                l[i][i] = sum.sqrt();
            } else {
                l[i][j] = sum / l[j][j];
            }
        }
    }
    Some(l)
}

/// Solve `L y = b` then `L^T x = y` (i.e. `M x = b` given M = L L^T).
pub fn cholesky_solve(l: &[Vec<f64>], b: &[f64]) -> Vec<f64> {
    let n = b.len();
    let mut y = vec![0.0; n];
    for i in 0..n {
        let mut sum = b[i];
        for k in 0..i {
            sum -= l[i][k] * y[k];
        }
        y[i] = sum / l[i][i];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut sum = y[i];
        for k in i + 1..n {
            sum -= l[k][i] * x[k];
        }
        x[i] = sum / l[i][i];
    }
    x
}

/// Solve `L^T x = b` for lower-triangular L.
pub fn solve_lt_transposed(l: &[Vec<f64>], b: &[f64]) -> Vec<f64> {
    let n = b.len();
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut sum = b[i];
        for k in i + 1..n {
            sum -= l[k][i] * x[k];
        }
        x[i] = sum / l[i][i];
    }
    x
}

/// `x^p` with the exact product chain for small integer p, `powf` otherwise.
///
/// The integer path keeps scaling identities like `(2d)^p = 2^p d^p` exact in
/// floating point (multiplications by powers of two commute with rounding),
/// which several deterministic-path contracts rely on.
pub fn pow_p(x: f64, p: f64) -> f64 {
    let pi = p.round();
    if (p - pi).abs() == 0.0 && (1.0..=32.0).contains(&pi) {
        let mut acc = 1.0;
        for _ in 0..pi as u32 {
            acc *= x;
        }
        acc
    } else {
        x.powf(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_matches_naive() {
        let xs: Vec<f64> = (0..1000).map(|i| (i as f64).sin()).collect();
        let naive: f64 = xs.iter().sum();
        assert!((pairwise_sum(&xs) - naive).abs() < 1e-10);
    }

    #[test]
    fn pairwise_is_split_invariant() {
        let xs: Vec<f64> = (0..777).map(|i| 1.0 / (1.0 + i as f64)).collect();
        let whole = pairwise_sum(&xs);
        let again = pairwise_sum(&xs);
        assert_eq!(whole.to_bits(), again.to_bits());
    }

    #[test]
    fn solve_small_system() {
        let m = vec![vec![2.0, 1.0], vec![1.0, 3.0]];
        let x = solve_dense(&m, &[5.0, 10.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12);
        assert!((x[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn cholesky_round_trip() {
        let m = vec![vec![4.0, 2.0], vec![2.0, 3.0]];
        let l = cholesky(&m).unwrap();
        let x = cholesky_solve(&l, &[8.0, 7.0]);
        assert!((2.0 * x[0] + 1.0 * x[1] - 4.0).abs() < 1e-12);
        assert!((matvec(&m, &x)[1] - 7.0).abs() < 1e-12);
    }

    #[test]
    fn pow_p_integer_scaling_is_exact() {
        let d = 0.1234567890123;
        for p in [1.0, 2.0, 3.0, 4.0] {
            let lhs = pow_p(2.0 * d, p);
            let rhs = pow_p(2.0, p) * pow_p(d, p);
            assert_eq!(lhs.to_bits(), rhs.to_bits());
        }
    }
}
