use rayon::prelude::*;

use crate::error::{domain, LabError, Result};
use crate::modes::{kg_inner, ModeKind, ModeSpec, Mover, Surface, SurfaceSampling, Taper};
use crate::real::{bose, Real, C};
use crate::spacetime::Wedge;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BogoliubovConvention {
    /// `α = 1/√(1 − e^{−2πΩ})`, `β = e^{−πΩ} α`.
    Standard,
    /// `α = β = e^{−πΩ/2}/√(2 sinh πΩ)`, which is not unitary.
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BogoliubovPair<T> {
    pub omega: T,
    pub alpha: T,
    pub beta: T,
    /// `|α|² − |β|² − 1`.
    pub normalization_defect: T,
}

/// Coefficients of the Unruh mode `UM(Ω) = α φ^R_Ω + β (φ^L_Ω)*` for `Ω > 0`.
pub fn bogoliubov<T: Real>(omega: T, convention: BogoliubovConvention) -> Result<BogoliubovPair<T>> {
    if !(omega > T::zero()) || !omega.is_finite() {
        return Err(domain(format!("Bogoliubov coefficients need Ω > 0, got {omega}")));
    }
    let pi = T::PI();
    let one_minus = -(-T::two_pi() * omega).exp_m1();
    let (alpha, beta, defect) = match convention {
        BogoliubovConvention::Standard => {
            let a = one_minus.sqrt().recip();
            let b = (-pi * omega).exp() * a;
            (a, b, a * a - b * b - T::one())
        }
        BogoliubovConvention::Literal => {
            // e^{−πΩ/2}/√(2 sinh πΩ) = e^{−πΩ}/√(1 − e^{−2πΩ})
            let a = (-pi * omega).exp() / one_minus.sqrt();
            (a, a, -T::one())
        }
    };
    Ok(BogoliubovPair { omega, alpha, beta, normalization_defect: defect })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumberConvention {
    /// `⟨0_M| N_Ω |0_M⟩ = 1/(e^{2πΩ} − 1)`.
    Standard,
    /// Half the Planck factor.
    HalfPlanck,
}

impl NumberConvention {
    pub fn label(self) -> &'static str {
        match self {
            NumberConvention::Standard => "planck",
            NumberConvention::HalfPlanck => "half planck",
        }
    }
}

/// Rindler particle number per mode in the Minkowski vacuum.
pub fn particle_number_foreign_vacuum<T: Real>(omega: T, convention: NumberConvention) -> Result<T> {
    if !(omega > T::zero()) || !omega.is_finite() {
        return Err(domain(format!("particle number needs Ω > 0, got {omega}")));
    }
    let n = bose(T::two_pi() * omega);
    Ok(match convention {
        NumberConvention::Standard => n,
        NumberConvention::HalfPlanck => n / T::lit(2.0),
    })
}

/// Sampling of a log-null ray for the numerical projections.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectionGrid<T> {
    /// Half-width of the `σ` window.
    pub window: T,
    pub samples: usize,
}

impl<T: Real> ProjectionGrid<T> {
    pub fn new(window: T, samples: usize) -> Self {
        ProjectionGrid { window, samples }
    }

    fn on(&self, wedge: Wedge) -> SurfaceSampling<T> {
        SurfaceSampling::new(
            Surface::NullLog { wedge, mover: Mover::Right },
            T::zero(),
            self.window,
            self.samples,
            Taper::Gaussian,
        )
    }

    fn check(&self, omegas: &[T]) -> Result<()> {
        for &om in omegas {
            if !(om > T::zero()) {
                return Err(domain(format!("projections need Ω > 0, got {om}")));
            }
            let product = self.window * om;
            if product < T::lit(4.0) * T::PI() {
                return Err(LabError::Resolution { product: product.to_f64().unwrap_or(f64::NAN) });
            }
        }
        Ok(())
    }
}

impl Default for ProjectionGrid<f64> {
    fn default() -> Self {
        ProjectionGrid::new(40.0, 4096)
    }
}

fn um<T: Real>(omega: T) -> ModeSpec<T> {
    ModeSpec::new(ModeKind::UnruhMinkowski, omega)
}

/// `⟨UM_Ω, φ^R_Ω̄⟩` on the right wedge, divided by the windowed norm of `φ^R_Ω̄`.
/// Equals `α` at `Ω̄ = Ω`.
pub fn alpha_numeric<T: Real>(omega: T, omega_bar: T, grid: &ProjectionGrid<T>) -> Result<C<T>> {
    grid.check(&[omega, omega_bar])?;
    let s = grid.on(Wedge::Right);
    let r = ModeSpec::rindler(omega_bar, Wedge::Right, 1);
    Ok(kg_inner(&um(omega), &r, &s)? / kg_inner(&r, &r, &s)?.re)
}

/// `⟨UM_Ω, (φ^L_Ω̄)*⟩` on the left wedge, divided by the windowed norm of `(φ^L_Ω̄)*`.
/// Equals `β` at `Ω̄ = Ω`.
pub fn beta_numeric<T: Real>(omega: T, omega_bar: T, grid: &ProjectionGrid<T>) -> Result<C<T>> {
    grid.check(&[omega, omega_bar])?;
    let s = grid.on(Wedge::Left);
    let l = ModeSpec::rindler(omega_bar, Wedge::Left, 1).conjugated();
    Ok(kg_inner(&um(omega), &l, &s)? / kg_inner(&l, &l, &s)?.re)
}

/// `⟨UM_Ω*, φ^L_Ω̄⟩` with the same normalisation as [`beta_numeric`]; equals `−β*`.
pub fn beta_numeric_reverse<T: Real>(omega: T, omega_bar: T, grid: &ProjectionGrid<T>) -> Result<C<T>> {
    grid.check(&[omega, omega_bar])?;
    let s = grid.on(Wedge::Left);
    let l = ModeSpec::rindler(omega_bar, Wedge::Left, 1);
    Ok(kg_inner(&um(omega).conjugated(), &l, &s)? / kg_inner(&l.conjugated(), &l.conjugated(), &s)?.re)
}

/// Numerical `α`, `β` at coincident frequencies.
pub fn bogoliubov_numeric<T: Real>(omega: T, grid: &ProjectionGrid<T>) -> Result<(C<T>, C<T>, T)> {
    let a = alpha_numeric(omega, omega, grid)?;
    let b = beta_numeric(omega, omega, grid)?;
    Ok((a, b, a.norm_sqr() - b.norm_sqr() - T::one()))
}

/// `β(Ω_i, Ω̄_j)` over a frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaMatrix<T> {
    pub omegas: Vec<T>,
    /// Row `i` is `Ω_i` (Unruh), column `j` is `Ω̄_j` (Rindler).
    pub entries: Vec<Vec<C<T>>>,
}

impl<T: Real> BetaMatrix<T> {
    pub fn row_sums(&self) -> Vec<C<T>> {
        self.entries.iter().map(|r| r.iter().fold(C::new(T::zero(), T::zero()), |a, &b| a + b)).collect()
    }

    pub fn column_sums(&self) -> Vec<C<T>> {
        let n = self.omegas.len();
        (0..n)
            .map(|j| self.entries.iter().fold(C::new(T::zero(), T::zero()), |a, r| a + r[j]))
            .collect()
    }

    pub fn diagonal(&self) -> Vec<C<T>> {
        self.entries.iter().enumerate().map(|(i, r)| r[i]).collect()
    }
}

pub fn beta_matrix<T: Real>(omegas: &[T], grid: &ProjectionGrid<T>) -> Result<BetaMatrix<T>> {
    grid.check(omegas)?;
    let entries = omegas
        .par_iter()
        .map(|&om| omegas.iter().map(|&ob| beta_numeric(om, ob, grid)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(BetaMatrix { omegas: omegas.to_vec(), entries })
}
