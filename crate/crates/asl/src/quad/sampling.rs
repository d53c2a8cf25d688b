//! Power-law radial importance sampling.

use crate::error::{AslError, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Draw `count` i.i.d. radii with density ∝ r^η on (0, R₀], by the inverse
/// CDF r = R₀ · U^{1/(η+1)}. Returns the radii together with the normalizing
/// constant Z = R₀^{η+1}/(η+1), i.e. the density is q(r) = r^η / Z.
pub fn power_law_radius_sample(r0: f64, eta: f64, count: usize, seed: u64) -> Result<(Vec<f64>, f64)> {
    if !(eta > -1.0) {
        return Err(AslError::InvalidArgument(format!(
            "power_law_radius_sample: exponent must exceed -1 for normalizability, got {eta}"
        )));
    }
    if r0 <= 0.0 {
        return Err(AslError::InvalidArgument("power_law_radius_sample: R₀ must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inv = 1.0 / (eta + 1.0);
    let radii = (0..count)
        .map(|_| {
            // 1 - gen() lies in (0, 1], so radii stay strictly positive.
            let u = 1.0 - rng.gen::<f64>();
            r0 * u.powf(inv)
        })
        .collect();
    Ok((radii, r0.powf(eta + 1.0) * inv))
}
