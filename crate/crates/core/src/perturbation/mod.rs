//! First-order transition probabilities for a two-level atom coupled to a massless scalar.

mod scenarios;

use rayon::prelude::*;

use crate::error::{domain, LabError, Result};
use crate::real::{Real, C};
use crate::spacetime::DimensionlessParams;

pub use scenarios::{
    absorption_emission_ratio, accel_atom_mirror_probability, accel_atom_probability, accel_mirror_mode_probability,
    finite_window_integral_closed, finite_window_integral_quad, freefall_absorption_emission_ratio,
    freefall_bh_probability, mirror_correlation_phase, mirror_family_amplitudes, static_atom_asymptotic,
    static_atom_rindler_probability, w_omega, w_omega_minus, AtomMirrorExcitation, ThermalityRatio,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    /// Uniformly accelerated atom, Minkowski vacuum.
    AccelAtom,
    /// Static atom at `z₀`, Rindler vacuum.
    StaticAtomRindlerVac,
    /// Accelerated atom, static mirror at `z = 0`.
    AccelAtomMirror,
    /// Accelerated mirror, static atom.
    AccelMirrorStaticAtom,
    /// Atom freely falling across a Schwarzschild horizon.
    FreeFallBH,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    Quadrature,
    /// Closed form, with the relative quadrature discrepancy as the error estimate.
    Both,
    /// Large-`ωz₀` thermal law where one exists; otherwise the closed form.
    Asymptotic,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed",
            Method::Quadrature => "quad",
            Method::Both => "both",
            Method::Asymptotic => "asymptotic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioSpec<T> {
    pub scenario: Scenario,
    pub params: DimensionlessParams<T>,
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumRecord<T> {
    /// Dimensionless frequency swept by the scenario, see [`spectrum_sweep`].
    pub freq: T,
    pub probability: T,
    pub amplitude: Option<C<T>>,
    pub method: Method,
    pub error_estimate: T,
    /// `P/P₀ − 1` against the asymptotic thermal law, static-type scenarios only.
    pub asymptote_deviation: Option<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    pub records: Vec<SpectrumRecord<T>>,
    pub scenario: ScenarioSpec<T>,
    pub fitted_temperature: Option<T>,
    pub fit_residual: Option<T>,
}

/// Evaluate one scenario at dimensionless frequency `freq`.
///
/// | scenario | `freq` |
/// |---|---|
/// | `AccelAtom`, `AccelAtomMirror` | `ωℓ` |
/// | `StaticAtomRindlerVac` | `νℓ` |
/// | `FreeFallBH` | `ν · 2r_g` |
/// | `AccelMirrorStaticAtom` | mode `Ω` |
pub fn evaluate_at<T: Real>(spec: &ScenarioSpec<T>, freq: T) -> Result<SpectrumRecord<T>> {
    let p = spec.params;
    let mut rec = match spec.scenario {
        Scenario::AccelAtom => accel_atom_probability(&DimensionlessParams { omega_atom: freq / p.ell, ..p }, spec.method)?,
        Scenario::StaticAtomRindlerVac => {
            static_atom_rindler_probability(&DimensionlessParams { nu_field: freq / p.ell, ..p }, spec.method)?
        }
        Scenario::FreeFallBH => {
            let ell = T::lit(2.0) * p.rg;
            freefall_bh_probability(&DimensionlessParams { nu_field: freq / ell, ..p }, spec.method)?
        }
        Scenario::AccelMirrorStaticAtom => accel_mirror_mode_probability(freq, &p)?,
        Scenario::AccelAtomMirror => {
            let e = accel_atom_mirror_probability(freq)?;
            SpectrumRecord {
                freq,
                probability: e.rate,
                amplitude: None,
                method: Method::ClosedForm,
                error_estimate: T::zero(),
                asymptote_deviation: None,
            }
        }
    };
    rec.freq = freq;
    Ok(rec)
}

/// Planck occupation number implied by a record: a thermal spectrum at temperature `T`
/// gives `n = 1/(e^{freq/(T L)} − 1)` with `L` from [`length_scale`].
pub fn occupation<T: Real>(spec: &ScenarioSpec<T>, rec: &SpectrumRecord<T>) -> Result<T> {
    let p = spec.params;
    let g2 = p.coupling_g * p.coupling_g;
    if !(g2 > T::zero()) {
        return Err(domain("occupation needs a nonzero coupling"));
    }
    let x = rec.freq;
    let n = match spec.scenario {
        // P = 2πg²ℓ²/(ωℓ) · n
        Scenario::AccelAtom => rec.probability * x / (T::two_pi() * g2 * p.ell * p.ell),
        // P = 2π(νℓ)g²/ω² · n
        Scenario::StaticAtomRindlerVac | Scenario::FreeFallBH => {
            rec.probability * p.omega_atom * p.omega_atom / (T::two_pi() * x * g2)
        }
        Scenario::AccelMirrorStaticAtom => T::lit(2.0) * rec.probability / g2,
        Scenario::AccelAtomMirror => rec.probability * T::two_pi() * x,
    };
    Ok(n)
}

/// Length that converts a record's dimensionless `freq` into a physical frequency:
/// `2 r_g` for free fall, `ℓ` otherwise.
pub fn length_scale<T: Real>(spec: &ScenarioSpec<T>) -> T {
    match spec.scenario {
        Scenario::FreeFallBH => T::lit(2.0) * spec.params.rg,
        _ => spec.params.ell,
    }
}

/// Least-squares fit of `ln(1 + 1/n) = x/T` through the origin.
///
/// Returns `(T, residual)` with the residual as relative RMS of the linearised data.
pub fn fit_temperature<T: Real>(points: &[(T, T)]) -> Result<(T, T)> {
    if points.len() < 4 {
        return Err(LabError::Fit(format!("need at least 4 points, got {}", points.len())));
    }
    let mut sxy = T::zero();
    let mut sxx = T::zero();
    let mut ys = Vec::with_capacity(points.len());
    for &(x, n) in points {
        if !(n > T::zero()) || !n.is_finite() || !x.is_finite() {
            return Err(LabError::Fit(format!("occupation {n} at x = {x} is not positive")));
        }
        let y = n.recip().ln_1p();
        sxy += x * y;
        sxx += x * x;
        ys.push(y);
    }
    if !(sxy > T::zero()) {
        return Err(LabError::Fit("no positive slope".into()));
    }
    let slope = sxy / sxx;
    let mut num = T::zero();
    let mut den = T::zero();
    for (&(x, _), &y) in points.iter().zip(&ys) {
        let r = y - slope * x;
        num += r * r;
        den += y * y;
    }
    Ok((slope.recip(), (num / den).sqrt()))
}

/// Evaluate a scenario over a strictly increasing frequency grid, in parallel, and fit a
/// temperature in natural units against `freq / length_scale`.
pub fn spectrum_sweep<T: Real>(spec: &ScenarioSpec<T>, grid: &[T]) -> Result<Spectrum<T>> {
    spec.params.validate()?;
    if grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(domain("frequency grid must be strictly increasing"));
    }
    let records = grid.par_iter().map(|&f| evaluate_at(spec, f)).collect::<Result<Vec<_>>>()?;
    let (fitted_temperature, fit_residual) = if records.is_empty() {
        (None, None)
    } else {
        let scale = length_scale(spec);
        let pts = records
            .iter()
            .map(|r| Ok((r.freq / scale, occupation(spec, r)?)))
            .collect::<Result<Vec<_>>>()?;
        let (t, res) = fit_temperature(&pts)?;
        (Some(t), Some(res))
    };
    Ok(Spectrum { records, scenario: *spec, fitted_temperature, fit_residual })
}
