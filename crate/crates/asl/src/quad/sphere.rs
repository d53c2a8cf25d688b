//! Quadrature grids on the unit sphere S^{n-1}.

use crate::error::{AslError, Result};
use crate::special::sphere_surface_area;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::gauss::gauss_legendre;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridMode {
    Deterministic,
    Mc,
}

/// Nodes and weights integrating over S^{n-1} with the surface measure.
#[derive(Debug, Clone)]
pub struct SphereGrid {
    pub dim: usize,
    pub nodes: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
}

impl SphereGrid {
    pub fn integrate(&self, mut f: impl FnMut(&[f64]) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(u, &w)| w * f(u)).sum()
    }
}

/// Build a sphere grid.
///
/// Deterministic grids exist for n ∈ {2, 3}: uniform midpoint angles on S¹
/// (trigonometric degree `resolution - 1` exact), and product Gauss in cos θ
/// times uniform φ on S² (`resolution` polar nodes, `2·resolution` azimuthal,
/// exact for spherical polynomials of degree about `2·resolution - 1`). Both
/// are point-symmetric for even node counts. MC mode draws uniform directions
/// for any n >= 2 with equal weights summing to the surface measure.
pub fn sphere_grid(n: usize, resolution: usize, mode: GridMode, seed: u64) -> Result<SphereGrid> {
    if n < 2 {
        return Err(AslError::InvalidArgument(format!(
            "sphere_grid: dimension must be >= 2, got {n}"
        )));
    }
    if resolution == 0 {
        return Err(AslError::InvalidArgument("sphere_grid: resolution must be positive".into()));
    }
    match mode {
        GridMode::Deterministic => match n {
            2 => {
                let m = resolution;
                let w = 2.0 * std::f64::consts::PI / m as f64;
                let mut nodes = Vec::with_capacity(m);
                for k in 0..m {
                    let th = w * (k as f64 + 0.5);
                    nodes.push(vec![th.cos(), th.sin()]);
                }
                Ok(SphereGrid { dim: 2, nodes, weights: vec![w; m] })
            }
            3 => {
                let (t, wt) = gauss_legendre(resolution, -1.0, 1.0);
                let m_phi = 2 * resolution;
                let w_phi = 2.0 * std::f64::consts::PI / m_phi as f64;
                let mut nodes = Vec::with_capacity(resolution * m_phi);
                let mut weights = Vec::with_capacity(resolution * m_phi);
                for (ti, wti) in t.iter().zip(&wt) {
                    let sin_th = (1.0 - ti * ti).max(0.0).sqrt();
                    for k in 0..m_phi {
                        let phi = w_phi * (k as f64 + 0.5);
                        nodes.push(vec![sin_th * phi.cos(), sin_th * phi.sin(), *ti]);
                        weights.push(wti * w_phi);
                    }
                }
                Ok(SphereGrid { dim: 3, nodes, weights })
            }
            _ => Err(AslError::Unsupported(format!(
                "sphere_grid: deterministic grids cover n in {{2,3}}; use mc mode for n = {n}"
            ))),
        },
        GridMode::Mc => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let area = sphere_surface_area(n);
            let w = area / resolution as f64;
            let mut nodes = Vec::with_capacity(resolution);
            while nodes.len() < resolution {
                let mut u: Vec<f64> = (0..n).map(|_| standard_normal(&mut rng)).collect();
                let len = u.iter().map(|x| x * x).sum::<f64>().sqrt();
                if len > 1e-8 {
                    u.iter_mut().for_each(|x| *x /= len);
                    nodes.push(u);
                }
            }
            Ok(SphereGrid { dim: n, nodes, weights: vec![w; resolution] })
        }
    }
}

/// One standard normal draw via Box-Muller (deterministic per rng state).
pub(crate) fn standard_normal<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen::<f64>();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}
