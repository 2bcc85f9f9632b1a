use crate::error::{domain, LabError, Result};
use crate::numerics::gamma::gamma_complex;
use crate::numerics::quad::{adaptive_finite_quad, QuadResult, QuadratureConfig};
use crate::real::{cimag, cis, cplx, creal, Real, C};

/// Sign of the oscillating exponent `e^{±ix}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value<T: Real>(self) -> T {
        match self {
            Sign::Plus => T::one(),
            Sign::Minus => -T::one(),
        }
    }

    pub fn from_i32(s: i32) -> Result<Sign> {
        match s {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(domain(format!("sign must be ±1, got {s}"))),
        }
    }
}

/// Factor linking `∫₀^∞ e^{±ix} x^q dx` to `∫₀^∞ e^{−y} y^q dy` after `x = ±iy`.
fn rotation_factor<T: Real>(omega: T, p: T, sign: Sign) -> C<T> {
    let s = sign.value::<T>();
    let half_pi = T::FRAC_PI_2();
    cimag(s) * cis(s * half_pi * p) * (-s * half_pi * omega).exp()
}

fn exponent<T: Real>(omega: T, p: T) -> Result<C<T>> {
    if !omega.is_finite() || !p.is_finite() {
        return Err(domain("non-finite exponent"));
    }
    let q1 = cplx(p + T::one(), omega);
    if q1.im == T::zero() && q1.re <= T::zero() && q1.re == q1.re.round() {
        return Err(LabError::GammaPole(format!("Γ({q1})")));
    }
    Ok(cplx(p, omega))
}

/// Closed form `∫₀^∞ e^{±ix} x^{iΩ+p} dx = ±i e^{±iπp/2} e^{∓πΩ/2} Γ(1+iΩ+p)`.
pub fn oscillatory_power_closed<T: Real>(omega: T, p: T, sign: Sign) -> Result<C<T>> {
    let q = exponent(omega, p)?;
    Ok(rotation_factor(omega, p, sign) * gamma_complex(q + creal(T::one()))?)
}

/// `∫₀^∞ e^{±ix} x^{iΩ+p} dx`, evaluated on the rotated ray where the integrand decays as `e^{−y}`.
///
/// Exponents with `Re q < 0` are first raised by parts, `J(q) = J(q+1)/(q+1)`, which also
/// gives the regularised value at `p = −1`.
pub fn oscillatory_power_integral<T: Real>(
    omega: T,
    p: T,
    sign: Sign,
    cfg: &QuadratureConfig<T>,
) -> Result<QuadResult<T>> {
    cfg.validate()?;
    let q = exponent(omega, p)?;
    let one = creal(T::one());
    let mut shifted = q;
    let mut divisor = one;
    while shifted.re < T::zero() {
        shifted += one;
        divisor *= shifted;
    }
    let j = rotated_gamma_integral(shifted, cfg)?;
    let factor = rotation_factor(omega, p, sign) / divisor;
    Ok(QuadResult { value: j.value * factor, error: j.error * factor.norm(), intervals: j.intervals })
}

/// `∫₀^∞ e^{−y} y^q dy` in the log variable `y = e^w`, for `Re q ≥ 0`.
fn rotated_gamma_integral<T: Real>(q: C<T>, cfg: &QuadratureConfig<T>) -> Result<QuadResult<T>> {
    let a = q.re + T::one();
    let q1 = q + creal(T::one());
    let log_mag = |w: T| a * w - w.exp();
    let w_peak = a.ln();
    let peak = log_mag(w_peak);
    let cut = cfg.rotation_decay_cutoff.ln();
    let find = |step: T| -> Result<T> {
        let mut w = w_peak;
        for _ in 0..4000 {
            w += step;
            if log_mag(w) - peak < cut {
                return Ok(w);
            }
        }
        Err(LabError::Truncation(format!("integrand for q = {q} did not decay below the cutoff")))
    };
    let w_lo = find(-T::lit(0.5))?;
    let w_hi = find(T::lit(0.25))?;
    let f = |w: T| (q1 * w - creal(w.exp())).exp();
    // Split at the peak so the decaying flanks are resolved separately.
    let lo = adaptive_finite_quad(f, w_lo, w_peak, cfg)?;
    let hi = adaptive_finite_quad(f, w_peak, w_hi, cfg)?;
    let tail = (log_mag(w_lo)).exp() / a + log_mag(w_hi).exp();
    Ok(QuadResult {
        value: lo.value + hi.value,
        error: lo.error + hi.error + tail,
        intervals: lo.intervals + hi.intervals,
    })
}
