use crate::error::{domain, LabError, Result};
use crate::modes::{eval_mode, ModeSpec};
use crate::real::{cimag, Real, C};
use crate::spacetime::Wedge;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Taper {
    None,
    Gaussian,
}

/// Which null coordinate parametrises a [`Surface::NullLog`] ray.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mover {
    /// Carries right-movers: `u` varies, `v` fixed.
    Right,
    /// Carries left-movers: `v` varies, `u` fixed.
    Left,
}

/// Curve carrying the inner product. Coordinates are in units of `ℓ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Surface<T> {
    /// `t` fixed, parameter `z`, derivative `∂_t`.
    ConstantTime { t: T },
    /// `z` fixed, parameter `t`, derivative `∂_t`.
    ConstantPosition { z: T },
    /// Null ray in one wedge with logarithmic parameter `σ`:
    /// right wedge `u = −e^{−σ}` or `v = e^{σ}`, left wedge `u = e^{σ}` or `v = −e^{−σ}`.
    NullLog { wedge: Wedge, mover: Mover },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceSampling<T> {
    pub surface: Surface<T>,
    /// Midpoint of the sampled parameter range.
    pub center: T,
    /// Half-width of the sampled parameter range.
    pub window: T,
    pub samples: usize,
    pub taper: Taper,
}

/// Relative size of tapered tails that still counts as negligible.
const TAIL_TOL: f64 = 1e-12;

impl<T: Real> SurfaceSampling<T> {
    pub fn new(surface: Surface<T>, center: T, window: T, samples: usize, taper: Taper) -> Self {
        SurfaceSampling { surface, center, window, samples, taper }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples < 16 {
            return Err(domain(format!("need at least 16 samples, got {}", self.samples)));
        }
        if !(self.window > T::zero()) || !self.window.is_finite() || !self.center.is_finite() {
            return Err(domain("sampling window must be positive and finite"));
        }
        if let Surface::NullLog { wedge, .. } = self.surface {
            if !matches!(wedge, Wedge::Right | Wedge::Left) {
                return Err(domain("null-log surfaces live in the Right or Left wedge"));
            }
        }
        Ok(())
    }

    /// Spacing between samples.
    pub fn step(&self) -> T {
        T::lit(2.0) * self.window / T::of_usize(self.samples - 1)
    }

    pub fn parameter(&self, j: usize) -> T {
        self.center - self.window + self.step() * T::of_usize(j)
    }

    /// Gaussian width, one eighth of the half-window.
    pub fn taper_width(&self) -> T {
        self.window / T::lit(8.0)
    }

    pub(crate) fn taper_at(&self, p: T) -> T {
        match self.taper {
            Taper::None => T::one(),
            Taper::Gaussian => {
                let x = (p - self.center) / self.taper_width();
                (-x * x / T::lit(2.0)).exp()
            }
        }
    }

    /// Null coordinates at parameter `p`.
    fn point(&self, p: T) -> (T, T) {
        match self.surface {
            Surface::ConstantTime { t } => (t - p, t + p),
            Surface::ConstantPosition { z } => (p - z, p + z),
            Surface::NullLog { wedge, mover } => {
                let one = T::one();
                match (wedge, mover) {
                    (Wedge::Right, Mover::Right) => (-(-p).exp(), one),
                    (Wedge::Right, Mover::Left) => (-one, p.exp()),
                    (Wedge::Left, Mover::Right) => (p.exp(), -one),
                    _ => (one, -(-p).exp()),
                }
            }
        }
    }

    /// Value and derivative along the surface's time direction at parameter `p`.
    fn value_and_derivative(&self, spec: &ModeSpec<T>, p: T, h: T) -> Result<(C<T>, C<T>)> {
        let (u, v) = self.point(p);
        let f = eval_mode(spec, u, v)?;
        let (fp, fm) = match self.surface {
            // ∂_t shifts u and v together.
            Surface::ConstantTime { .. } | Surface::ConstantPosition { .. } => {
                (eval_mode(spec, u + h, v + h)?, eval_mode(spec, u - h, v - h)?)
            }
            Surface::NullLog { .. } => {
                let (up, vp) = self.point(p + h);
                let (um, vm) = self.point(p - h);
                (eval_mode(spec, up, vp)?, eval_mode(spec, um, vm)?)
            }
        };
        Ok((f, (fp - fm) / (h + h)))
    }
}

/// Klein–Gordon product `−(i/2) ∫ (f ∂g* − g* ∂f)` by the trapezoid rule, with a
/// central difference at one eighth of the sample spacing.
pub fn kg_inner<T: Real>(f: &ModeSpec<T>, g: &ModeSpec<T>, s: &SurfaceSampling<T>) -> Result<C<T>> {
    s.validate()?;
    let step = s.step();
    let h = step / T::lit(8.0);
    let mut acc = C::new(T::zero(), T::zero());
    let mut peak = T::zero();
    let mut edge = T::zero();
    for j in 0..s.samples {
        let p = s.parameter(j);
        let (fv, fd) = s.value_and_derivative(f, p, h)?;
        let (gv, gd) = s.value_and_derivative(g, p, h)?;
        let integrand = fv * gd.conj() - gv.conj() * fd;
        let w = s.taper_at(p);
        let mag = integrand.norm() * w;
        peak = peak.max(mag);
        if j == 0 || j + 1 == s.samples {
            edge = edge.max(mag);
        }
        let trap = if j == 0 || j + 1 == s.samples { step / T::lit(2.0) } else { step };
        acc += integrand * (w * trap);
    }
    if s.taper == Taper::Gaussian && edge > T::lit(TAIL_TOL) * peak {
        return Err(LabError::WindowTooSmall {
            tail: (edge / peak).to_f64().unwrap_or(f64::NAN),
            tol: TAIL_TOL,
        });
    }
    Ok(acc * cimag(-T::lit(0.5)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modes::ModeKind;

    fn box_sampling(period: f64) -> SurfaceSampling<f64> {
        SurfaceSampling::new(Surface::ConstantTime { t: 0.0 }, 0.0, period / 2.0, 4001, Taper::None)
    }

    #[test]
    fn plane_wave_box_norm_positive() {
        let om = 2.0;
        let f = ModeSpec::new(ModeKind::PlaneWaveRight, om);
        let n = kg_inner(&f, &f, &box_sampling(std::f64::consts::TAU / om)).unwrap();
        assert!(n.re > 0.0 && n.im.abs() < 1e-12 * n.re);
        let period = std::f64::consts::TAU / om;
        assert!((n.re - period / (4.0 * std::f64::consts::PI)).abs() < 1e-5 * n.re);
        let neg = ModeSpec::new(ModeKind::PlaneWaveRight, -om);
        assert!(kg_inner(&neg, &neg, &box_sampling(period)).unwrap().re < 0.0);
    }

    #[test]
    fn conjugation_identities() {
        let s = SurfaceSampling::new(Surface::ConstantTime { t: 0.3 }, 0.05, 6.0, 512, Taper::None);
        let f = ModeSpec::new(ModeKind::MirrorStatic, 0.8);
        let g = ModeSpec::new(ModeKind::PlaneWaveLeft, 1.3);
        let fg = kg_inner(&f, &g, &s).unwrap();
        let gf = kg_inner(&g, &f, &s).unwrap();
        assert!((fg - gf.conj()).norm() < 1e-12);
        let fcgc = kg_inner(&f.conjugated(), &g.conjugated(), &s).unwrap();
        assert!((fcgc + gf).norm() < 1e-12);
    }

    #[test]
    fn gaussian_tail_check() {
        let f = ModeSpec::new(ModeKind::PlaneWaveRight, 1.0);
        let s = SurfaceSampling::new(Surface::ConstantPosition { z: 0.0 }, 0.0, 40.0, 2048, Taper::Gaussian);
        assert!(kg_inner(&f, &f, &s).is_ok());
        // Window edge just outside the horizon, where ∂_t of the wedge mode grows like 1/z.
        let r = ModeSpec::rindler(1.0, Wedge::Right, 1);
        let s = SurfaceSampling::new(Surface::ConstantTime { t: 0.0 }, 4.0001, 4.0, 2048, Taper::Gaussian);
        assert!(matches!(kg_inner(&r, &r, &s), Err(LabError::WindowTooSmall { .. })));
    }

    #[test]
    fn log_surface_norm_is_window_length() {
        let om = 1.5;
        let f = ModeSpec::rindler(om, Wedge::Right, 1);
        let s = SurfaceSampling::new(Surface::NullLog { wedge: Wedge::Right, mover: Mover::Right }, 0.0, 10.0, 4000, Taper::None);
        let n = kg_inner(&f, &f, &s).unwrap();
        assert!((n.re - 20.0 / (4.0 * std::f64::consts::PI)).abs() < 1e-4);
    }

    #[test]
    fn bad_sampling() {
        let f = ModeSpec::new(ModeKind::PlaneWaveRight, 1.0);
        let s = SurfaceSampling::new(Surface::ConstantTime { t: 0.0 }, 0.0, 1.0, 8, Taper::None);
        assert!(kg_inner(&f, &f, &s).is_err());
    }
}
