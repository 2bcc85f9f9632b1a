use rustfft::{FftDirection, FftNum, FftPlanner};

use crate::error::{domain, LabError, Result};
use crate::modes::kg::{Surface, SurfaceSampling};
use crate::modes::{eval_mode, ModeSpec};
use crate::real::Real;

/// Share of windowed spectral power at positive and negative frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencySplit<T> {
    pub pos_fraction: T,
    pub neg_fraction: T,
}

/// Windowed Fourier analysis `F(ω) = Σ e^{iωt} w(t) f(t)` along a constant-`z` line.
///
/// Positive frequency means `e^{−iωt}` with `ω > 0`. Bins with `|ω| < 4/σ_w` are below the
/// window's resolution and are left out of both fractions.
pub fn positive_frequency_content<T>(spec: &ModeSpec<T>, grid: &SurfaceSampling<T>) -> Result<FrequencySplit<T>>
where
    T: Real + FftNum,
{
    grid.validate()?;
    let z = match grid.surface {
        Surface::ConstantPosition { z } => z,
        _ => return Err(domain("frequency content is taken along a constant-z line")),
    };
    let product = grid.window * spec.omega.abs();
    if product < T::lit(4.0) * T::PI() {
        return Err(LabError::Resolution { product: product.to_f64().unwrap_or(f64::NAN) });
    }
    let n = grid.samples;
    let dt = T::lit(2.0) * grid.window / T::of_usize(n);
    let t0 = grid.center - grid.window;
    let mut buf = Vec::with_capacity(n);
    for j in 0..n {
        let t = t0 + dt * (T::of_usize(j) + T::lit(0.5));
        let f = eval_mode(spec, t - z, t + z)?;
        buf.push(f * grid.taper_at(t));
    }
    // Inverse direction gives the e^{+iωt} kernel.
    let fft = FftPlanner::new().plan_fft(n, FftDirection::Inverse);
    fft.process(&mut buf);
    let dw = T::two_pi() / (dt * T::of_usize(n));
    let cut = T::lit(4.0) / grid.taper_width();
    let (mut pos, mut neg) = (T::zero(), T::zero());
    for (k, c) in buf.iter().enumerate() {
        if 2 * k == n {
            continue;
        }
        let w = if 2 * k < n { dw * T::of_usize(k) } else { -dw * T::of_usize(n - k) };
        if w.abs() < cut {
            continue;
        }
        if w > T::zero() {
            pos += c.norm_sqr();
        } else {
            neg += c.norm_sqr();
        }
    }
    let total = pos + neg;
    if !(total > T::zero()) {
        return Err(domain("no resolvable spectral power in the window"));
    }
    Ok(FrequencySplit { pos_fraction: pos / total, neg_fraction: neg / total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modes::{ModeKind, Taper};

    fn line(window: f64, samples: usize) -> SurfaceSampling<f64> {
        SurfaceSampling::new(Surface::ConstantPosition { z: 0.0 }, 0.0, window, samples, Taper::Gaussian)
    }

    #[test]
    fn plane_wave_single_sided() {
        let f = ModeSpec::new(ModeKind::PlaneWaveRight, 2.0);
        let s = positive_frequency_content(&f, &line(32.0, 4096)).unwrap();
        assert!(s.neg_fraction < 1e-6);
        assert!((s.pos_fraction + s.neg_fraction - 1.0).abs() < 1e-15);
    }

    #[test]
    fn unruh_mode_is_positive_frequency() {
        let f = ModeSpec::new(ModeKind::UnruhMinkowski, 1.0);
        let g = line(64.0, 1 << 16);
        let s = positive_frequency_content(&f, &g).unwrap();
        assert!(s.neg_fraction < 1e-3, "{s:?}");
        let c = positive_frequency_content(&f.conjugated(), &g).unwrap();
        assert!(c.pos_fraction < 1e-3, "{c:?}");
        let lower = ModeSpec::new(ModeKind::UnruhMinkowski, 1.0).with_branch(crate::modes::Branch::LowerCut);
        assert!(positive_frequency_content(&lower, &g).unwrap().neg_fraction > 0.5);
    }

    #[test]
    fn resolution_guard() {
        let f = ModeSpec::new(ModeKind::PlaneWaveRight, 0.1);
        assert!(matches!(positive_frequency_content(&f, &line(32.0, 1024)), Err(LabError::Resolution { .. })));
    }
}
