//! Acceleration radiation in 1+1 dimensions: Unruh–Minkowski and Rindler modes,
//! first-order excitation spectra, Bogoliubov coefficients and the KMS temperature.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the aliases below fix `f64`.

pub mod error;
pub mod modes;
pub mod numerics;
pub mod perturbation;
pub mod real;
pub mod spacetime;
pub mod vacua;

pub use error::{LabError, Result};
pub use real::Real;

pub type Complex64 = num_complex::Complex<f64>;
pub type Params = spacetime::DimensionlessParams<f64>;
pub type QuadConfig = numerics::QuadratureConfig<f64>;
pub type Mode = modes::ModeSpec<f64>;
pub type Sampling = modes::SurfaceSampling<f64>;
pub type Record = perturbation::SpectrumRecord<f64>;
pub type Spectrum = perturbation::Spectrum<f64>;
pub type Scenario = perturbation::ScenarioSpec<f64>;
pub type Bogoliubov = vacua::BogoliubovPair<f64>;
