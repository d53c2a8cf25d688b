//! Reusable numerical-integration primitives: Gauss rules, graded radial
//! meshes for the r → 0 kernel singularity, sphere grids, power-law radial
//! sampling, the mollifier kernel, and s → 1⁻ extrapolation.

mod extrapolate;
mod gauss;
mod radial;
mod sampling;
mod sphere;

pub use extrapolate::extrapolate_limit;
pub use gauss::gauss_legendre;
pub use radial::{graded_radial_rule, graded_radial_rule_with_breaks, mollifier_rho, RadialRule, RadialSpec};
pub use sampling::power_law_radius_sample;
pub use sphere::{sphere_grid, GridMode, SphereGrid};
