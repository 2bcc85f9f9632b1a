//! Minkowski, Rindler and near-horizon coordinates, trajectories and temperatures.
//!
//! Natural units `c = ħ = k_B = 1` throughout; only [`temperatures`] knows about SI.

use crate::error::{domain, LabError, Result};
use crate::real::Real;

/// Model inputs in natural units. `ell` is the acceleration length `c²/α`; the
/// other fields keep their own dimension so that `omega_atom * ell`, `nu_field * ell`
/// and `omega_atom * z0` are the dimensionless combinations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessParams<T> {
    pub ell: T,
    pub omega_atom: T,
    pub nu_field: T,
    pub coupling_g: T,
    pub z0: T,
    pub v0: T,
    pub rg: T,
}

impl<T: Real> Default for DimensionlessParams<T> {
    fn default() -> Self {
        DimensionlessParams {
            ell: T::one(),
            omega_atom: T::one(),
            nu_field: T::one(),
            coupling_g: T::one(),
            z0: T::lit(50.0),
            v0: T::lit(0.1),
            rg: T::one(),
        }
    }
}

impl<T: Real> DimensionlessParams<T> {
    pub fn validate(&self) -> Result<()> {
        let all = [self.ell, self.omega_atom, self.nu_field, self.coupling_g, self.z0, self.v0, self.rg];
        if all.iter().any(|x| !x.is_finite()) {
            return Err(domain("parameters must be finite"));
        }
        if !(self.ell > T::zero()) {
            return Err(domain("ell must be positive"));
        }
        if self.coupling_g < T::zero() {
            return Err(domain("coupling g must be non-negative"));
        }
        if !(self.v0 < T::one()) {
            return Err(domain("v0 must be below 1"));
        }
        Ok(())
    }

    pub fn omega_ell(&self) -> T {
        self.omega_atom * self.ell
    }

    pub fn nu_ell(&self) -> T {
        self.nu_field * self.ell
    }

    pub fn omega_z0(&self) -> T {
        self.omega_atom * self.z0
    }

    /// Acceleration `α = 1/ℓ`.
    pub fn alpha(&self) -> T {
        self.ell.recip()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EventMinkowski<T> {
    pub t: T,
    pub z: T,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EventRindler<T> {
    pub tbar: T,
    pub zbar: T,
}

/// `u = (t − z)/ℓ`, `v = (t + z)/ℓ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullCoords<T> {
    pub u: T,
    pub v: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Wedge {
    Right,
    Left,
    Future,
    Past,
    Boundary,
}

/// Uniformly accelerated worldline at proper time `tau`.
pub fn rindler_trajectory<T: Real>(tau: T, params: &DimensionlessParams<T>) -> EventMinkowski<T> {
    rindler_to_minkowski(EventRindler { tbar: tau, zbar: T::zero() }, params.ell)
}

pub fn rindler_to_minkowski<T: Real>(e: EventRindler<T>, ell: T) -> EventMinkowski<T> {
    let r = ell * (e.zbar / ell).exp();
    let x = e.tbar / ell;
    EventMinkowski { t: r * x.sinh(), z: r * x.cosh() }
}

/// Inverse of [`rindler_to_minkowski`], defined on the right wedge only.
pub fn minkowski_to_rindler<T: Real>(e: EventMinkowski<T>, ell: T) -> Result<EventRindler<T>> {
    if !(e.z > e.t.abs()) {
        return Err(LabError::Wedge { t: e.t.to_f64().unwrap_or(f64::NAN), z: e.z.to_f64().unwrap_or(f64::NAN) });
    }
    let half = T::lit(0.5);
    let (p, m) = (e.z + e.t, e.z - e.t);
    Ok(EventRindler { tbar: half * ell * (p / m).ln(), zbar: half * ell * ((p / ell) * (m / ell)).ln() })
}

pub fn null_coords<T: Real>(e: EventMinkowski<T>, ell: T) -> NullCoords<T> {
    NullCoords { u: (e.t - e.z) / ell, v: (e.t + e.z) / ell }
}

pub fn wedge_of<T: Real>(e: EventMinkowski<T>) -> Wedge {
    if e.z > e.t.abs() {
        Wedge::Right
    } else if -e.z > e.t.abs() {
        Wedge::Left
    } else if e.t > e.z.abs() {
        Wedge::Future
    } else if -e.t > e.z.abs() {
        Wedge::Past
    } else {
        Wedge::Boundary
    }
}

/// Rindler velocity `dz̄/dt̄` of an atom held at Minkowski position `z0`.
pub fn static_atom_rindler_velocity<T: Real>(t: T, z0: T) -> T {
    -t / z0
}

/// One point of the near-horizon radial infall.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeFallPoint<T> {
    pub r: T,
    pub t: T,
    pub rbar: T,
    /// Set when `v0 > 0.1`, where the small-velocity solution is visibly approximate.
    pub warning: bool,
    /// `(dr/ds)² − (r_g/r − r_g/r(0))`: mismatch against the exact radial geodesic.
    pub approximation_error: T,
}

pub const FREEFALL_WARN_V0: f64 = 0.1;
pub const FREEFALL_MAX_V0: f64 = 0.3;

/// Near-horizon infall at proper time `s` with launch speed `v0`.
pub fn freefall_trajectory<T: Real>(s: T, params: &DimensionlessParams<T>) -> Result<FreeFallPoint<T>> {
    let (v0, rg) = (params.v0, params.rg);
    if !(rg > T::zero()) {
        return Err(domain("r_g must be positive"));
    }
    if !(v0 > T::zero()) || v0 > T::lit(FREEFALL_MAX_V0) {
        return Err(domain(format!("v0 = {v0} outside (0, {FREEFALL_MAX_V0}]")));
    }
    let two = T::lit(2.0);
    let b = two * rg * v0;
    if !(s.abs() < b) {
        return Err(domain(format!("|s| = {} reaches the horizon crossing at 2 r_g v0 = {b}", s.abs())));
    }
    let four_rg2 = T::lit(4.0) * rg * rg;
    let r = rg * (T::one() + v0 * v0 - s * s / four_rg2);
    let t = rg * ((b + s) / (b - s)).ln();
    let rbar = rg * ((b * b - s * s) / four_rg2).ln();
    let r0 = rg * (T::one() + v0 * v0);
    let drds = -s / (two * rg);
    let approximation_error = drds * drds - (rg / r - rg / r0);
    Ok(FreeFallPoint { r, t, rbar, warning: v0 > T::lit(FREEFALL_WARN_V0), approximation_error })
}

/// `α = 1/(2 r_g)`.
pub fn effective_acceleration<T: Real>(rg: T) -> Result<T> {
    if !(rg > T::zero()) || !rg.is_finite() {
        return Err(domain("r_g must be positive"));
    }
    Ok((T::lit(2.0) * rg).recip())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaticPosition<T> {
    pub z0: T,
    /// `v0 = 0` collapses the atom onto the horizon.
    pub degenerate: bool,
}

/// Position `z₀ = 2 v0 r_g` of the static atom equivalent to an infall from rest at `v0`.
pub fn equivalent_static_position<T: Real>(v0: T, rg: T) -> Result<StaticPosition<T>> {
    if !(rg > T::zero()) || v0 < T::zero() || !(v0 < T::one()) {
        return Err(domain("need 0 ≤ v0 < 1 and r_g > 0"));
    }
    Ok(StaticPosition { z0: T::lit(2.0) * v0 * rg, degenerate: v0 == T::zero() })
}

/// Mapping of the infall problem onto the static Rindler problem: `ℓ = 2 r_g`, `z₀ = 2 v0 r_g`.
pub fn freefall_as_static<T: Real>(params: &DimensionlessParams<T>) -> Result<DimensionlessParams<T>> {
    effective_acceleration(params.rg)?;
    let pos = equivalent_static_position(params.v0, params.rg)?;
    if pos.degenerate {
        return Err(domain("v0 = 0 puts the equivalent atom on the horizon"));
    }
    Ok(DimensionlessParams { ell: T::lit(2.0) * params.rg, z0: pos.z0, ..*params })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitSystem {
    Natural,
    Si,
}

/// Horizon described by mass `M` or by radius `r_g = 2M` (SI: `2GM/c²`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HorizonInput<T> {
    Mass(T),
    Radius(T),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Temperatures<T> {
    pub unruh: T,
    pub hawking: T,
    pub hbar: T,
    pub units: UnitSystem,
}

pub mod si {
    pub const HBAR: f64 = 1.054_571_817e-34;
    pub const C: f64 = 299_792_458.0;
    pub const G: f64 = 6.674_30e-11;
    pub const K_B: f64 = 1.380_649e-23;
}

/// Unruh temperature for acceleration `alpha`, Hawking temperature of the horizon,
/// and the infall (HBAR) temperature `1/(4π r_g)`.
pub fn temperatures<T: Real>(alpha: T, horizon: HorizonInput<T>, units: UnitSystem) -> Result<Temperatures<T>> {
    let h = match horizon {
        HorizonInput::Mass(m) | HorizonInput::Radius(m) => m,
    };
    if !(alpha > T::zero()) || !(h > T::zero()) || !alpha.is_finite() || !h.is_finite() {
        return Err(domain("temperatures need positive finite inputs"));
    }
    let two_pi = T::two_pi();
    let four_pi = two_pi * T::lit(2.0);
    let eight_pi = four_pi * T::lit(2.0);
    let out = match units {
        UnitSystem::Natural => {
            let (mass, rg) = match horizon {
                HorizonInput::Mass(m) => (m, T::lit(2.0) * m),
                HorizonInput::Radius(r) => (r / T::lit(2.0), r),
            };
            Temperatures {
                unruh: alpha / two_pi,
                hawking: (eight_pi * mass).recip(),
                hbar: (two_pi * T::lit(2.0) * rg).recip(),
                units,
            }
        }
        UnitSystem::Si => {
            let hbar = T::lit(si::HBAR);
            let c = T::lit(si::C);
            let g = T::lit(si::G);
            let kb = T::lit(si::K_B);
            let (mass, rg) = match horizon {
                HorizonInput::Mass(m) => (m, T::lit(2.0) * g * m / (c * c)),
                HorizonInput::Radius(r) => (r * c * c / (T::lit(2.0) * g), r),
            };
            Temperatures {
                unruh: hbar * alpha / (two_pi * c * kb),
                hawking: hbar * c * c * c / (eight_pi * g * mass * kb),
                hbar: hbar * c / (four_pi * rg * kb),
                units,
            }
        }
    };
    Ok(out)
}
