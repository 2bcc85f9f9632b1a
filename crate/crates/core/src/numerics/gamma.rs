use crate::error::{domain, LabError, Result};
use crate::real::{creal, Real, C};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Principal branch of `ln Γ(z)`, continuous off the negative real axis.
pub fn log_gamma_complex<T: Real>(z: C<T>) -> Result<C<T>> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(domain(format!("non-finite argument {z}")));
    }
    if z.im == T::zero() && z.re <= T::zero() && z.re == z.re.round() {
        return Err(LabError::GammaPole(format!("{z}")));
    }
    let half = T::lit(0.5);
    if z.re >= half {
        return Ok(lanczos(z));
    }
    // Shift right, then peel off ln(z + k) one factor at a time.
    let n = (half - z.re).ceil().to_usize().unwrap_or(0);
    let mut acc = lanczos(z + creal(T::of_usize(n)));
    for k in 0..n {
        acc -= (z + creal(T::of_usize(k))).ln();
    }
    Ok(acc)
}

fn lanczos<T: Real>(z: C<T>) -> C<T> {
    let zm = z - creal(T::one());
    let mut x = creal(T::lit(LANCZOS[0]));
    for (k, &p) in LANCZOS.iter().enumerate().skip(1) {
        x += creal(T::lit(p)) / (zm + creal(T::of_usize(k)));
    }
    let t = zm + creal(T::lit(LANCZOS_G + 0.5));
    let half_ln_2pi = T::lit(0.918_938_533_204_672_7);
    creal(half_ln_2pi) + (zm + creal(T::lit(0.5))) * t.ln() - t + x.ln()
}

/// `Γ(z)` as `exp(ln Γ(z))`.
pub fn gamma_complex<T: Real>(z: C<T>) -> Result<C<T>> {
    log_gamma_complex(z).map(|l| l.exp())
}

/// `|Γ(ix)|² = π / (x sinh πx)` for `x > 0`.
pub fn gamma_abs_sq_imag<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(domain(format!("|Γ(ix)|² needs x > 0, got {x}")));
    }
    let pi = T::PI();
    // π/(x sinh πx) = 2π e^{−πx} / (x (1 − e^{−2πx}))
    let two = T::lit(2.0);
    Ok(two * pi * (-pi * x).exp() / (x * -(-(two * pi * x)).exp_m1()))
}
