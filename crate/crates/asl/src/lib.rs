//! Numerics for asymmetric anisotropic fractional Sobolev seminorms.
//!
//! The library computes the one-sided Gagliardo functional
//! `∬_{x>y} (f(x)-f(y))_+^p / ‖x-y‖_K^{n+sp} dx dy` for compactly supported
//! test functions `f` and convex bodies `K` with the origin in the interior,
//! together with the polar asymmetric L_p moment-body norms
//! `‖v‖_{Z_p^{+,*}K}^p = (n+p) ∫_K (v·x)_+^p dx`, and verifies the limit
//! `lim_{s→1⁻} (1-s)·[seminorm] = (1/p) ∫ ‖∇f‖_{Z_p^{+,*}K}^p dx`
//! by two independent estimators (deterministic spherical decomposition and
//! importance-sampled pair Monte Carlo) plus extrapolation in `1-s`.
//!
//! Modules mirror the pipeline: [`quad`] (quadrature primitives), [`geom`]
//! (bodies, gauges, moment norms), [`fields`] (test functions and line
//! restrictions), [`seminorm`] (the estimators), [`limits`] (sweeps,
//! extrapolated limits, verification reports).

pub mod error;
pub mod fields;
pub mod geom;
pub mod limits;
pub mod quad;
pub mod seminorm;
mod special;
mod vec;

pub use error::{AslError, Result};
