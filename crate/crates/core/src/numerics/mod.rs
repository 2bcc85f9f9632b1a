//! Complex gamma functions and quadrature kernels.

mod gamma;
mod incomplete;
mod oscillatory;
mod quad;

pub use gamma::{gamma_abs_sq_imag, gamma_complex, log_gamma_complex};
pub use incomplete::{lower_incomplete_gamma, upper_incomplete_gamma};
pub use oscillatory::{oscillatory_power_closed, oscillatory_power_integral, Sign};
pub use quad::{adaptive_finite_quad, gauss_legendre_panels, QuadResult, QuadratureConfig};
