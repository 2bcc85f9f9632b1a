use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{LabError, Result};
use crate::real::{cis, cplx, Real, C};
use crate::spacetime::{EventMinkowski, EventRindler};

/// Relative size below which an imaginary part is treated as rounding noise.
const SNAP: f64 = 64.0;

fn snap<T: Real>(z: C<T>, scale: T) -> C<T> {
    if z.im.abs() <= T::lit(SNAP) * T::epsilon() * scale {
        cplx(z.re, T::zero())
    } else {
        z
    }
}

/// `−(1/4π) ln(−Δs² + iε_t)` with `Δs² = Δt² − Δz²`. The sign of `ε_t` follows `Δt`
/// for the Wightman ordering and selects the branch for timelike separations.
pub fn two_point_minkowski_invariant<T: Real>(ds2: T, eps_t: T) -> Result<C<T>> {
    let arg = snap(cplx(-ds2, eps_t), ds2.abs());
    wightman_log(arg)
}

/// Wightman function `⟨0_M| φ(x) φ(x') |0_M⟩` with `Δt → Δt − iε`.
pub fn wightman_minkowski<T: Real>(x: EventMinkowski<T>, xp: EventMinkowski<T>, eps: T) -> Result<C<T>> {
    let dt = cplx(x.t - xp.t, -eps);
    let dz = x.z - xp.z;
    let arg = -dt * dt + dz * dz;
    wightman_log(snap(arg, dt.norm_sqr() + dz * dz))
}

fn wightman_log<T: Real>(arg: C<T>) -> Result<C<T>> {
    if arg.norm() == T::zero() {
        return Err(LabError::Coincidence);
    }
    Ok(arg.ln() * (-(T::lit(4.0) * T::PI()).recip()))
}

/// `−Δs²` between a right-wedge event with complex Rindler time `t̄ − i·shift` and a
/// real right-wedge event, in units of `ℓ²`.
pub fn rindler_interval<T: Real>(x: EventRindler<T>, shift: T, xp: EventRindler<T>, ell: T) -> C<T> {
    let rho = (x.zbar / ell).exp();
    let rho_p = (xp.zbar / ell).exp();
    let rot = cis(shift / ell);
    // u = −ρ e^{−t̄/ℓ}, v = ρ e^{t̄/ℓ}
    let u = rot * (-rho * (-x.tbar / ell).exp());
    let v = rot.conj() * (rho * (x.tbar / ell).exp());
    let up = -rho_p * (-xp.tbar / ell).exp();
    let vp = rho_p * (xp.tbar / ell).exp();
    let scale = (u.norm() + up.abs()) * (v.norm() + vp.abs());
    snap(-(u - up) * (v - vp), scale)
}

/// Pair of right-wedge events.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplePair<T> {
    pub x: EventRindler<T>,
    pub xp: EventRindler<T>,
}

/// Reproducible random pairs with `t̄, z̄` uniform in `[−2ℓ, 2ℓ]`.
pub fn random_sample_pairs<T: Real>(n: usize, seed: u64, ell: T) -> Vec<SamplePair<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || T::lit(rng.gen_range(-2.0..2.0)) * ell;
    (0..n)
        .map(|_| SamplePair {
            x: EventRindler { tbar: draw(), zbar: draw() },
            xp: EventRindler { tbar: draw(), zbar: draw() },
        })
        .collect()
}

/// Mean of `|G(t̄ − i·shift, z̄; x') − G(x'; t̄, z̄)|` over the pairs, both sides evaluated
/// with the same branch marker.
pub fn kms_twist_residual<T: Real>(pairs: &[SamplePair<T>], ell: T, shift: T) -> Result<T> {
    if pairs.is_empty() {
        return Err(LabError::DegenerateSamples("no sample pairs".into()));
    }
    let mut acc = T::zero();
    for p in pairs {
        let shifted = wightman_log(rindler_interval(p.x, shift, p.xp, ell))?;
        let swapped = wightman_log(rindler_interval(p.xp, T::zero(), p.x, ell))?;
        acc += (shifted - swapped).norm();
    }
    Ok(acc / T::of_usize(pairs.len()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KmsReport<T> {
    /// Recovered imaginary-time period `β`.
    pub period: T,
    /// `1/β`.
    pub temperature: T,
    /// `1/(2πℓ)`.
    pub expected: T,
    pub residual: T,
    /// Residual at half the expected period, as a contrast.
    pub residual_half_period: T,
}

const MIN_PAIRS: usize = 8;
const SCAN_POINTS: usize = 301;

/// Locate the imaginary-time shift that minimises the twist residual by a scan over
/// `[0.25, 1.75]·2πℓ` followed by golden-section refinement.
pub fn kms_residual<T: Real>(pairs: &[SamplePair<T>], ell: T) -> Result<KmsReport<T>> {
    if pairs.len() < MIN_PAIRS {
        return Err(LabError::DegenerateSamples(format!("need at least {MIN_PAIRS} pairs, got {}", pairs.len())));
    }
    if !(ell > T::zero()) || !ell.is_finite() {
        return Err(crate::error::domain("ℓ must be positive"));
    }
    let f = |s: T| kms_twist_residual(pairs, ell, s);
    let beta0 = T::two_pi() * ell;
    let (lo, hi) = (T::lit(0.25) * beta0, T::lit(1.75) * beta0);
    let ds = (hi - lo) / T::of_usize(SCAN_POINTS - 1);
    let mut best = (0, f(lo)?);
    for k in 1..SCAN_POINTS {
        let r = f(lo + ds * T::of_usize(k))?;
        if r < best.1 {
            best = (k, r);
        }
    }
    let k = best.0;
    let mut a = lo + ds * T::of_usize(k.saturating_sub(1));
    let mut b = lo + ds * T::of_usize((k + 1).min(SCAN_POINTS - 1));
    let inv_phi = T::lit(0.5) * (T::lit(5.0).sqrt() - T::one());
    let mut c = b - (b - a) * inv_phi;
    let mut d = a + (b - a) * inv_phi;
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    for _ in 0..200 {
        if (b - a).abs() <= T::epsilon() * beta0 {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * inv_phi;
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * inv_phi;
            fd = f(d)?;
        }
    }
    let (period, mut residual) = if fc <= fd { (c, fc) } else { (d, fd) };
    if best.1 < residual {
        residual = best.1;
    }
    Ok(KmsReport {
        period,
        temperature: period.recip(),
        expected: beta0.recip(),
        residual,
        residual_half_period: f(beta0 / T::lit(2.0))?,
    })
}
