use crate::error::{domain, Result};
use crate::numerics::{
    adaptive_finite_quad, lower_incomplete_gamma, oscillatory_power_closed, oscillatory_power_integral,
    QuadratureConfig, Sign,
};
use crate::perturbation::{Method, SpectrumRecord};
use crate::real::{bose, cimag, cis, cplx, creal, Real, C};
use crate::spacetime::{freefall_as_static, DimensionlessParams, FREEFALL_MAX_V0};

fn positive<T: Real>(x: T, what: &str) -> Result<()> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(domain(format!("{what} must be positive, got {x}")));
    }
    Ok(())
}

/// Error of `|A|²` given an absolute error `δ` on `A`.
fn sq_error<T: Real>(a: C<T>, delta: T) -> T {
    T::lit(2.0) * a.norm() * delta + delta * delta
}

fn rel_diff<T: Real>(a: T, b: T) -> T {
    (a - b).abs() / b.abs()
}

/// Accelerated atom in the Minkowski vacuum, per unit coupling squared times `g²`.
///
/// Closed form `P = 2π g² ℓ/ω · 1/(e^{2πωℓ} − 1)`; the quadrature path evaluates
/// `gℓ (νℓ)^{iωℓ} ∫₀^∞ e^{−ix} x^{−iωℓ−1} dx` on the rotated contour.
pub fn accel_atom_probability<T: Real>(params: &DimensionlessParams<T>, method: Method) -> Result<SpectrumRecord<T>> {
    params.validate()?;
    let wl = params.omega_ell();
    positive(wl, "ωℓ")?;
    let g = params.coupling_g;
    let ell = params.ell;
    let nu_l = params.nu_ell();
    let phase = if nu_l > T::zero() { cis(wl * nu_l.ln()) } else { creal(T::one()) };
    let pref = phase * (g * ell);
    let closed_p = g * g * ell * T::two_pi() / params.omega_atom * bose(T::two_pi() * wl);
    let closed_amp = || -> Result<C<T>> { Ok(pref * oscillatory_power_closed(-wl, -T::one(), Sign::Minus)?) };
    let quad = || oscillatory_power_integral(-wl, -T::one(), Sign::Minus, &QuadratureConfig::default());
    let freq = wl;
    match method {
        Method::ClosedForm | Method::Asymptotic => Ok(SpectrumRecord {
            freq,
            probability: closed_p,
            amplitude: Some(closed_amp()?),
            method: Method::ClosedForm,
            error_estimate: T::zero(),
            asymptote_deviation: None,
        }),
        Method::Quadrature => {
            let q = quad()?;
            let amp = pref * q.value;
            Ok(SpectrumRecord {
                freq,
                probability: amp.norm_sqr(),
                amplitude: Some(amp),
                method,
                error_estimate: sq_error(amp, q.error * pref.norm()),
                asymptote_deviation: None,
            })
        }
        Method::Both => {
            let q = quad()?;
            let pq = (pref * q.value).norm_sqr();
            Ok(SpectrumRecord {
                freq,
                probability: closed_p,
                amplitude: Some(closed_amp()?),
                method,
                error_estimate: rel_diff(pq, closed_p),
                asymptote_deviation: None,
            })
        }
    }
}

/// `∫₀^B e^{ix} x^{iν} dx = i e^{−πν/2} γ(1+iν, −iB)`.
pub fn finite_window_integral_closed<T: Real>(nu: T, b: T) -> Result<C<T>> {
    let g = lower_incomplete_gamma(cplx(T::one(), nu), cimag(-b))?;
    Ok(cimag(T::one()) * g * (-T::FRAC_PI_2() * nu).exp())
}

/// Same integral by direct adaptive quadrature.
pub fn finite_window_integral_quad<T: Real>(nu: T, b: T, cfg: &QuadratureConfig<T>) -> Result<(C<T>, T)> {
    let r = adaptive_finite_quad(|x: T| cis(x + nu * x.ln()), T::zero(), b, cfg)?;
    Ok((r.value, r.error))
}

fn static_inputs<T: Real>(params: &DimensionlessParams<T>) -> Result<(T, T, T)> {
    params.validate()?;
    let nu = params.nu_ell();
    positive(nu, "νℓ")?;
    positive(params.omega_atom, "ω")?;
    positive(params.z0, "z₀")?;
    Ok((nu, params.omega_atom, T::lit(2.0) * params.omega_z0()))
}

/// Asymptotic static-atom law `P ≈ (2πνℓ g²/ω²) / (e^{2πνℓ} − 1)`.
pub fn static_atom_asymptotic<T: Real>(params: &DimensionlessParams<T>) -> Result<T> {
    let (nu, w, _) = static_inputs(params)?;
    let g = params.coupling_g;
    Ok(T::two_pi() * nu * g * g / (w * w) * bose(T::two_pi() * nu))
}

/// Static atom at `z₀` in the Rindler vacuum.
///
/// Exact: `P = (g²/ω²) e^{−πνℓ} |γ(1+iνℓ, −2iωz₀)|²`. Quadrature integrates the finite
/// window `[0, 2ωz₀]` directly. The amplitude carries the phase `e^{iωz₀}(ωℓ)^{iνℓ}`.
pub fn static_atom_rindler_probability<T: Real>(params: &DimensionlessParams<T>, method: Method) -> Result<SpectrumRecord<T>> {
    let (nu, w, b) = static_inputs(params)?;
    let g = params.coupling_g;
    let p0 = static_atom_asymptotic(params)?;
    let phase = cis(params.omega_z0() + nu * params.omega_ell().ln()) * (g / w);
    let record = |amp: C<T>, method: Method, err: T| {
        let probability = amp.norm_sqr();
        SpectrumRecord {
            freq: nu,
            probability,
            amplitude: Some(amp),
            method,
            error_estimate: err,
            asymptote_deviation: Some(probability / p0 - T::one()),
        }
    };
    match method {
        Method::Asymptotic => Ok(SpectrumRecord {
            freq: nu,
            probability: p0,
            amplitude: None,
            method,
            error_estimate: T::zero(),
            asymptote_deviation: Some(T::zero()),
        }),
        Method::ClosedForm => Ok(record(phase * finite_window_integral_closed(nu, b)?.conj(), method, T::zero())),
        Method::Quadrature => {
            let (i, err) = finite_window_integral_quad(nu, b, &QuadratureConfig::default())?;
            let amp = phase * i.conj();
            Ok(record(amp, method, sq_error(amp, err * phase.norm())))
        }
        Method::Both => {
            let exact = phase * finite_window_integral_closed(nu, b)?.conj();
            let (i, _) = finite_window_integral_quad(nu, b, &QuadratureConfig::default())?;
            let pq = (phase * i).norm_sqr();
            Ok(record(exact, method, rel_diff(pq, exact.norm_sqr())))
        }
    }
}

/// Absorption over emission probability for the static atom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalityRatio<T> {
    pub ratio: T,
    /// `e^{2πνℓ}`.
    pub thermal: T,
    /// `ratio / thermal − 1`.
    pub deviation: T,
    pub method: Method,
    /// Relative difference to the quadrature path when `method` is `Both`.
    pub cross_check: Option<T>,
}

/// `P_abs/P_exc = e^{2πνℓ} |γ(1+iνℓ, 2iωz₀)|² / |γ(1+iνℓ, −2iωz₀)|²`, which tends to `e^{2πνℓ}`
/// only when `ωz₀ → ∞`.
pub fn absorption_emission_ratio<T: Real>(params: &DimensionlessParams<T>, method: Method) -> Result<ThermalityRatio<T>> {
    let (nu, _, b) = static_inputs(params)?;
    let thermal = (T::two_pi() * nu).exp();
    let closed = || -> Result<T> {
        let s = cplx(T::one(), nu);
        let up = lower_incomplete_gamma(s, cimag(b))?.norm_sqr();
        let down = lower_incomplete_gamma(s, cimag(-b))?.norm_sqr();
        Ok(thermal * up / down)
    };
    let quad = || -> Result<T> {
        let cfg = QuadratureConfig::default();
        let (abs, _) = finite_window_integral_quad(-nu, b, &cfg)?;
        let (exc, _) = finite_window_integral_quad(nu, b, &cfg)?;
        Ok(abs.norm_sqr() / exc.norm_sqr())
    };
    let (ratio, cross_check) = match method {
        Method::Asymptotic => (thermal, None),
        Method::ClosedForm => (closed()?, None),
        Method::Quadrature => (quad()?, None),
        Method::Both => {
            let c = closed()?;
            (c, Some(rel_diff(quad()?, c)))
        }
    };
    Ok(ThermalityRatio { ratio, thermal, deviation: ratio / thermal - T::one(), method, cross_check })
}

fn w_inputs<T: Real>(omega: T, omega_atom: T, ell: T) -> Result<()> {
    positive(omega, "Ω")?;
    positive(omega_atom, "ω")?;
    positive(ell, "ℓ")
}

/// `W_{Ω+} = ∫₀^∞ e^{iωt} ∂_t (t/ℓ)^{iΩ} dt = iΩ (ωℓ)^{−iΩ} e^{−πΩ/2} Γ(iΩ)`.
pub fn w_omega<T: Real>(omega: T, omega_atom: T, ell: T, method: Method) -> Result<C<T>> {
    w_inputs(omega, omega_atom, ell)?;
    let pref = cimag(omega) * cis(-omega * (omega_atom * ell).ln());
    let core = match method {
        Method::Quadrature => oscillatory_power_integral(omega, -T::one(), Sign::Plus, &QuadratureConfig::default())?.value,
        _ => oscillatory_power_closed(omega, -T::one(), Sign::Plus)?,
    };
    Ok(pref * core)
}

/// `W_{Ω−} = −∫₀^{−∞} e^{iωt} ∂_t (−t/ℓ)^{−iΩ} dt`, taken literally; equals `−W_{Ω+}*`.
pub fn w_omega_minus<T: Real>(omega: T, omega_atom: T, ell: T, method: Method) -> Result<C<T>> {
    w_inputs(omega, omega_atom, ell)?;
    let pref = cimag(omega) * cis(omega * (omega_atom * ell).ln());
    let core = match method {
        Method::Quadrature => oscillatory_power_integral(-omega, -T::one(), Sign::Minus, &QuadratureConfig::default())?.value,
        _ => oscillatory_power_closed(-omega, -T::one(), Sign::Minus)?,
    };
    Ok(pref * core)
}

/// Unit-modulus correlation phase `W_Ω/|W_Ω| = i (ωℓ)^{−iΩ} e^{iφ(Ω)}`.
pub fn mirror_correlation_phase<T: Real>(omega: T, omega_atom: T, ell: T) -> Result<C<T>> {
    let w = w_omega(omega, omega_atom, ell, Method::ClosedForm)?;
    Ok(w / w.norm())
}

/// Amplitudes `(g/√(4πΩ)) {W₋, W₊ − W₋, W₊}` for mode families 1, 2 and 3.
pub fn mirror_family_amplitudes<T: Real>(omega: T, params: &DimensionlessParams<T>, method: Method) -> Result<[C<T>; 3]> {
    params.validate()?;
    let wp = w_omega(omega, params.omega_atom, params.ell, method)?;
    let wm = w_omega_minus(omega, params.omega_atom, params.ell, method)?;
    let k = params.coupling_g / (T::lit(4.0) * T::PI() * omega).sqrt();
    Ok([wm * k, (wp - wm) * k, wp * k])
}

/// Emission probability into family-3 mode `Ω` (families 1 and 3 coincide):
/// `g²/(2(e^{2πΩ} − 1))`.
pub fn accel_mirror_mode_probability<T: Real>(omega: T, params: &DimensionlessParams<T>) -> Result<SpectrumRecord<T>> {
    let amps = mirror_family_amplitudes(omega, params, Method::ClosedForm)?;
    let g = params.coupling_g;
    let exact = g * g / T::lit(2.0) * bose(T::two_pi() * omega);
    Ok(SpectrumRecord {
        freq: omega,
        probability: exact,
        amplitude: Some(amps[2]),
        method: Method::ClosedForm,
        error_estimate: rel_diff(amps[2].norm_sqr(), exact.max(T::min_positive_value())),
        asymptote_deviation: None,
    })
}

/// Accelerated atom above a static mirror, per unit interaction time squared.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomMirrorExcitation<T> {
    /// Sum over the `±ω/a` modes: `1/(2π(ω/a)(e^{2πω/a} − 1))`.
    pub rate: T,
    /// `1/(e^{2πω/a} − 1)`.
    pub thermal_factor: T,
    /// Amplitude per mode, `e^{−πω/2a}/√(8π(ω/a) sinh(πω/a))`.
    pub mode_amplitude: T,
    /// Relative phase of the right- and left-moving emitted quanta.
    pub relative_phase: T,
}

pub fn accel_atom_mirror_probability<T: Real>(omega_over_a: T) -> Result<AtomMirrorExcitation<T>> {
    positive(omega_over_a, "ω/a")?;
    let x = omega_over_a;
    let thermal = bose(T::two_pi() * x);
    // e^{−πx}/(8πx sinh πx) = thermal/(4πx)
    let amp_sq = thermal / (T::lit(4.0) * T::PI() * x);
    Ok(AtomMirrorExcitation {
        rate: T::lit(2.0) * amp_sq,
        thermal_factor: thermal,
        mode_amplitude: amp_sq.sqrt(),
        relative_phase: -T::one(),
    })
}

fn freefall_mapped<T: Real>(params: &DimensionlessParams<T>) -> Result<DimensionlessParams<T>> {
    if !(params.v0 > T::zero()) || params.v0 > T::lit(FREEFALL_MAX_V0) {
        return Err(domain(format!("free fall needs v0 in (0, {FREEFALL_MAX_V0}]")));
    }
    positive(params.rg, "r_g")?;
    freefall_as_static(params)
}

/// Atom falling into the horizon, mapped onto the static Rindler problem with
/// `ℓ = 2 r_g` and `z₀ = 2 v0 r_g`.
pub fn freefall_bh_probability<T: Real>(params: &DimensionlessParams<T>, method: Method) -> Result<SpectrumRecord<T>> {
    static_atom_rindler_probability(&freefall_mapped(params)?, method)
}

pub fn freefall_absorption_emission_ratio<T: Real>(params: &DimensionlessParams<T>, method: Method) -> Result<ThermalityRatio<T>> {
    absorption_emission_ratio(&freefall_mapped(params)?, method)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn unit() -> DimensionlessParams<f64> {
        DimensionlessParams::default()
    }

    #[test]
    fn accel_atom_reference() {
        let oracle = [
            (0.1, 71.852_496_613_403_8),
            (0.5, 0.567_568_992_659_004_5),
            (1.0, 0.011_755_441_347_369_11),
            (2.0, 1.095_584_733_360_915_5e-5),
            (3.0, 1.363_956_417_139_821_6e-8),
        ];
        for (w, p) in oracle {
            let params = DimensionlessParams { omega_atom: w, ..unit() };
            let c = accel_atom_probability(&params, Method::ClosedForm).unwrap();
            assert_relative_eq!(c.probability, p, max_relative = 1e-12);
            assert_relative_eq!(c.amplitude.unwrap().norm_sqr(), p, max_relative = 1e-12);
            let q = accel_atom_probability(&params, Method::Quadrature).unwrap();
            assert_relative_eq!(q.probability, p, max_relative = 1e-8);
        }
    }

    #[test]
    fn static_atom_reference() {
        let p = DimensionlessParams { nu_field: 1.0, z0: 50.0, ..unit() };
        let r = static_atom_rindler_probability(&p, Method::ClosedForm).unwrap();
        assert_relative_eq!(r.probability, 1.062_934_482_209_387_2, max_relative = 1e-10);
        let a = static_atom_rindler_probability(&p, Method::Asymptotic).unwrap();
        assert_relative_eq!(a.probability, 0.011_755_441_347_369_11, max_relative = 1e-12);
        let p = DimensionlessParams { nu_field: 0.5, z0: 10.0, ..unit() };
        let r = static_atom_rindler_probability(&p, Method::ClosedForm).unwrap();
        assert_relative_eq!(r.probability, 1.806_494_759_831_211_7, max_relative = 1e-10);
        let q = static_atom_rindler_probability(&p, Method::Quadrature).unwrap();
        assert_relative_eq!(q.probability, r.probability, max_relative = 1e-9);
        assert_relative_eq!(
            static_atom_asymptotic(&p).unwrap(),
            0.141_892_248_164_751_14,
            max_relative = 1e-12
        );
    }

    #[test]
    fn ratio_reference() {
        let cases = [
            ((1.0, 50.0), 3.718_203_336_584_176_7),
            ((0.5, 10.0), 0.693_440_225_435_927_3),
            ((1.0, 1.0), 5.130_412_298_010_7),
            ((1.0, 2.0), 23.090_918_791_057_57),
            ((1.0, 100.0), 2.520_298_985_245_346),
        ];
        for ((nu, z0), expect) in cases {
            let p = DimensionlessParams { nu_field: nu, z0, ..unit() };
            let r = absorption_emission_ratio(&p, Method::ClosedForm).unwrap();
            assert_relative_eq!(r.ratio, expect, max_relative = 1e-9);
        }
        let p = DimensionlessParams { nu_field: 1e-9, z0: 3.0, ..unit() };
        assert_relative_eq!(absorption_emission_ratio(&p, Method::ClosedForm).unwrap().ratio, 1.0, max_relative = 1e-7);
        let p = DimensionlessParams { nu_field: 0.5, z0: 10.0, ..unit() };
        let b = absorption_emission_ratio(&p, Method::Both).unwrap();
        assert!(b.cross_check.unwrap() < 1e-8);
    }

    #[test]
    fn w_reference() {
        let cases = [
            (0.25, (0.635_927_157_276_486_8, -0.088_473_159_127_787_86)),
            (1.0, (0.103_527_286_104_485_5, -0.032_210_904_663_003_7)),
            (2.0, (0.006_564_367_155_322_783, 0.000_855_846_472_538_205_7)),
        ];
        for (om, (re, im)) in cases {
            let c = w_omega(om, 1.0, 1.0, Method::ClosedForm).unwrap();
            let q = w_omega(om, 1.0, 1.0, Method::Quadrature).unwrap();
            let o = cplx(re, im);
            assert!((c - o).norm() < 1e-12 * o.norm());
            assert!((q - o).norm() < 1e-9 * o.norm());
            let m = w_omega_minus(om, 1.0, 1.0, Method::Quadrature).unwrap();
            assert!((m + c.conj()).norm() < 1e-9 * o.norm());
        }
    }

    #[test]
    fn mirror_probabilities() {
        let p1 = accel_mirror_mode_probability(1.0, &unit()).unwrap();
        let p2 = accel_mirror_mode_probability(2.0, &unit()).unwrap();
        assert_relative_eq!(p2.probability / p1.probability, 0.001_863_961_889_625_027_9, max_relative = 1e-12);
        assert!(p1.error_estimate < 1e-12);
        let amps = mirror_family_amplitudes(1.0, &unit(), Method::ClosedForm).unwrap();
        assert_relative_eq!(amps[0].norm_sqr(), amps[2].norm_sqr(), max_relative = 1e-12);
        assert_relative_eq!(amps[1].re, 2.0 * amps[2].re, max_relative = 1e-12);
        assert!(amps[1].im.abs() < 1e-12 * amps[1].norm());
    }

    #[test]
    fn atom_mirror() {
        let e = accel_atom_mirror_probability(1.0f64).unwrap();
        assert_relative_eq!(e.thermal_factor, 0.001_870_936_598_660_644_1, max_relative = 1e-12);
        assert_eq!(e.relative_phase, -1.0);
        let small = accel_atom_mirror_probability(1e-7f64).unwrap();
        assert_relative_eq!(1e-7 * small.thermal_factor, 1.0 / std::f64::consts::TAU, max_relative = 1e-6);
        let direct = (-std::f64::consts::PI).exp() / (8.0 * std::f64::consts::PI * std::f64::consts::PI.sinh());
        assert_relative_eq!(e.mode_amplitude.powi(2), direct, max_relative = 1e-12);
        assert!(accel_atom_mirror_probability(0.0f64).is_err());
    }

    #[test]
    fn freefall_delegates_bitwise() {
        let ff = DimensionlessParams { v0: 0.1, rg: 1.0, nu_field: 0.5, omega_atom: 250.0, ..unit() };
        let st = DimensionlessParams { ell: 2.0, z0: 0.2, ..ff };
        for m in [Method::ClosedForm, Method::Asymptotic] {
            let a = freefall_bh_probability(&ff, m).unwrap();
            let b = static_atom_rindler_probability(&st, m).unwrap();
            assert_eq!(a.probability.to_bits(), b.probability.to_bits());
        }
        assert!(freefall_bh_probability(&DimensionlessParams { v0: 0.4, ..ff }, Method::ClosedForm).is_err());
    }
}
