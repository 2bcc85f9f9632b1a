//! Minkowski and Rindler vacua: Bogoliubov coefficients, particle numbers and the
//! thermal periodicity of the Wightman function.

mod bogoliubov;
mod kms;

pub use bogoliubov::{
    alpha_numeric, beta_matrix, beta_numeric, beta_numeric_reverse, bogoliubov, bogoliubov_numeric,
    particle_number_foreign_vacuum, BetaMatrix, BogoliubovConvention, BogoliubovPair, NumberConvention,
    ProjectionGrid,
};
pub use kms::{
    kms_residual, kms_twist_residual, random_sample_pairs, rindler_interval, two_point_minkowski_invariant,
    wightman_minkowski, KmsReport, SamplePair,
};
