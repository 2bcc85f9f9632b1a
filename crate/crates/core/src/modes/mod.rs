//! Mode families of the massless 1+1 field and their Klein–Gordon products.
//!
//! Modes are functions of the dimensionless null coordinates `u = (t − z)/ℓ`,
//! `v = (t + z)/ℓ`. Powers of negative arguments follow the `λ → 0⁺` limit of
//! `(x ∓ iλ)^{iΩ}` selected by [`Branch`]; points on a branch point are rejected.

mod kg;
mod spectral;

pub use kg::{kg_inner, Mover, Surface, SurfaceSampling, Taper};
pub use spectral::{positive_frequency_content, FrequencySplit};

use crate::error::{domain, LabError, Result};
use crate::real::{cis, creal, Real, C};
use crate::spacetime::Wedge;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModeKind {
    PlaneWaveRight,
    PlaneWaveLeft,
    RindlerWedge,
    UnruhMinkowski,
    MirrorStatic,
    MirrorFamily1,
    MirrorFamily2,
    MirrorFamily3,
    ExtendedRight,
    ExtendedLeft,
}

/// `UpperCut` is `(x − iλ)^{iΩ}`, so `(−1)^{iΩ} = e^{+πΩ}`; `LowerCut` is `(x + iλ)^{iΩ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    UpperCut,
    LowerCut,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeSpec<T> {
    pub kind: ModeKind,
    pub omega: T,
    /// Used by [`ModeKind::RindlerWedge`] only: `Right` or `Left`.
    pub wedge: Wedge,
    /// `+1` right-moving (function of `u`), `−1` left-moving (function of `v`).
    pub direction: i8,
    pub branch: Branch,
    /// Evaluate the complex conjugate of the mode.
    pub conjugate: bool,
}

impl<T: Real> ModeSpec<T> {
    pub fn new(kind: ModeKind, omega: T) -> Self {
        ModeSpec { kind, omega, wedge: Wedge::Right, direction: 1, branch: Branch::UpperCut, conjugate: false }
    }

    pub fn rindler(omega: T, wedge: Wedge, direction: i8) -> Self {
        ModeSpec { wedge, direction, ..Self::new(ModeKind::RindlerWedge, omega) }
    }

    pub fn with_branch(mut self, branch: Branch) -> Self {
        self.branch = branch;
        self
    }

    pub fn conjugated(mut self) -> Self {
        self.conjugate = !self.conjugate;
        self
    }

    /// Natural logarithm of the overall normalisation constant.
    pub fn log_normalization(&self) -> Result<T> {
        let om = self.omega;
        if !om.is_finite() {
            return Err(domain("mode frequency must be finite"));
        }
        if om == T::zero() {
            return Err(domain("normalised modes are undefined at Ω = 0"));
        }
        let pi = T::PI();
        let a = om.abs();
        let half = T::lit(0.5);
        let four_pi = T::lit(4.0) * pi;
        // ln √(4π|Ω|)
        let ln_rindler = half * (four_pi * a).ln();
        // ln √(1 − e^{−2π|Ω|}); |sinh πΩ| = e^{π|Ω|}(1 − e^{−2π|Ω|})/2
        let ln_shape = half * (-(-T::two_pi() * a).exp_m1()).ln();
        Ok(match self.kind {
            ModeKind::PlaneWaveRight
            | ModeKind::PlaneWaveLeft
            | ModeKind::RindlerWedge
            | ModeKind::MirrorFamily1
            | ModeKind::MirrorFamily2
            | ModeKind::MirrorFamily3 => -ln_rindler,
            // e^{−πΩ/2}/√(8πΩ sinh πΩ)
            ModeKind::UnruhMinkowski => -half * pi * om - half * pi * a - ln_rindler - ln_shape,
            // e^{−πΩ/2}/√(4Ω sinh πΩ)
            ModeKind::MirrorStatic => {
                -half * pi * om - half * pi * a - half * (T::lit(2.0) * a).ln() - ln_shape
            }
            // [2|sinh πΩ|]^{−1/2} times the Rindler constant; wedge weights applied pointwise
            ModeKind::ExtendedRight | ModeKind::ExtendedLeft => -half * pi * a - ln_shape - ln_rindler,
        })
    }
}

/// `x^{ia}` for `x > 0`.
fn pow_i<T: Real>(x: T, a: T) -> C<T> {
    cis(a * x.ln())
}

/// `(x ∓ iλ)^{iΩ}` in the `λ → 0⁺` limit, as `(log-weight, phase)`.
fn cut_power<T: Real>(x: T, omega: T, branch: Branch) -> Result<(T, C<T>)> {
    if x == T::zero() {
        return Err(LabError::Support("branch point x = 0".into()));
    }
    if x > T::zero() {
        return Ok((T::zero(), pow_i(x, omega)));
    }
    let w = match branch {
        Branch::UpperCut => T::PI() * omega,
        Branch::LowerCut => -T::PI() * omega,
    };
    Ok((w, pow_i(-x, omega)))
}

fn need_positive<T: Real>(spec: &ModeSpec<T>) -> Result<()> {
    if !(spec.omega > T::zero()) {
        return Err(domain(format!("{:?} modes need Ω > 0", spec.kind)));
    }
    Ok(())
}

fn nonzero<T: Real>(x: T, what: &str) -> Result<()> {
    if x == T::zero() {
        return Err(LabError::Support(format!("branch point {what} = 0")));
    }
    Ok(())
}

/// Value of the mode at null coordinates `(u, v)`. Region-restricted modes are exactly
/// zero outside their support.
pub fn eval_mode<T: Real>(spec: &ModeSpec<T>, u: T, v: T) -> Result<C<T>> {
    if !u.is_finite() || !v.is_finite() {
        return Err(domain("non-finite null coordinates"));
    }
    let ln_n = spec.log_normalization()?;
    let om = spec.omega;
    let zero = creal(T::zero());
    let half_pi_om = T::FRAC_PI_2() * om;
    let weighted = |w: T, z: C<T>| z * (ln_n + w).exp();
    let value = match spec.kind {
        ModeKind::PlaneWaveRight => weighted(T::zero(), cis(-om * u)),
        ModeKind::PlaneWaveLeft => weighted(T::zero(), cis(-om * v)),
        ModeKind::RindlerWedge => match (spec.wedge, spec.direction) {
            (Wedge::Right, 1) => {
                nonzero(u, "u")?;
                if u < T::zero() { weighted(T::zero(), pow_i(-u, om)) } else { zero }
            }
            (Wedge::Right, -1) => {
                nonzero(v, "v")?;
                if v > T::zero() { weighted(T::zero(), pow_i(v, -om)) } else { zero }
            }
            (Wedge::Left, 1) => {
                nonzero(u, "u")?;
                if u > T::zero() { weighted(T::zero(), pow_i(u, -om)) } else { zero }
            }
            (Wedge::Left, -1) => {
                nonzero(v, "v")?;
                if v < T::zero() { weighted(T::zero(), pow_i(-v, om)) } else { zero }
            }
            (w, d) => return Err(domain(format!("Rindler modes need wedge Right/Left and direction ±1, got {w:?}/{d}"))),
        },
        ModeKind::UnruhMinkowski => {
            let (w, z) = cut_power(u, om, spec.branch)?;
            weighted(w, z)
        }
        ModeKind::MirrorStatic => {
            let (wu, zu) = cut_power(u, om, spec.branch)?;
            let (wv, zv) = cut_power(v, om, spec.branch)?;
            weighted(T::zero(), zu * wu.exp() - zv * wv.exp())
        }
        ModeKind::MirrorFamily1 => {
            need_positive(spec)?;
            nonzero(v, "v")?;
            if v < T::zero() { weighted(T::zero(), pow_i(-v, om)) } else { zero }
        }
        ModeKind::MirrorFamily3 => {
            need_positive(spec)?;
            nonzero(u, "u")?;
            if u > T::zero() { weighted(T::zero(), pow_i(u, -om)) } else { zero }
        }
        ModeKind::MirrorFamily2 => {
            need_positive(spec)?;
            nonzero(u, "u")?;
            nonzero(v, "v")?;
            let outgoing = if v > T::zero() { pow_i(v, -om) } else { zero };
            let incoming = if u < T::zero() { pow_i(-u, om) } else { zero };
            weighted(T::zero(), outgoing - incoming)
        }
        ModeKind::ExtendedRight => {
            nonzero(u, "u")?;
            if u < T::zero() { weighted(half_pi_om, pow_i(-u, om)) } else { weighted(-half_pi_om, pow_i(u, om)) }
        }
        ModeKind::ExtendedLeft => {
            nonzero(u, "u")?;
            if u > T::zero() { weighted(half_pi_om, pow_i(u, -om)) } else { weighted(-half_pi_om, pow_i(-u, -om)) }
        }
    };
    Ok(if spec.conjugate { value.conj() } else { value })
}

/// Extended mode `φ^R` (`side = Right`) or `φ^L` (`side = Left`), a positive-norm
/// continuation of the wedge mode across both Rindler wedges.
pub fn extended_rindler_mode<T: Real>(omega: T, side: Wedge, u: T, v: T) -> Result<C<T>> {
    let kind = match side {
        Wedge::Right => ModeKind::ExtendedRight,
        Wedge::Left => ModeKind::ExtendedLeft,
        other => return Err(domain(format!("extended modes live on Right or Left, not {other:?}"))),
    };
    eval_mode(&ModeSpec::new(kind, omega), u, v)
}

/// Weights `(e^{+πΩ/2}, e^{−πΩ/2}) / √(2|sinh πΩ|)` of the extended modes on their home
/// and mirror wedges.
pub fn extended_weights<T: Real>(omega: T) -> Result<(T, T)> {
    if omega == T::zero() || !omega.is_finite() {
        return Err(domain("extended weights need finite Ω ≠ 0"));
    }
    let pi = T::PI();
    let a = omega.abs();
    let half = T::lit(0.5);
    let shape = (-(-T::two_pi() * a).exp_m1()).sqrt();
    Ok((((pi * omega - pi * a) * half).exp() / shape, ((-pi * omega - pi * a) * half).exp() / shape))
}
