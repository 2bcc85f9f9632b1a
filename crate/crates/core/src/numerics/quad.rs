use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{domain, LabError, Result};
use crate::real::{is_finite_c, Real, C};

/// Tolerances and budgets for every quadrature in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig<T> {
    pub rel_tol: T,
    pub abs_tol: T,
    pub max_subdivisions: usize,
    /// Integrand magnitude, relative to its peak, below which a rotated
    /// improper integral is cut off.
    pub rotation_decay_cutoff: T,
}

impl<T: Real> Default for QuadratureConfig<T> {
    fn default() -> Self {
        let floor = T::epsilon() * T::lit(64.0);
        QuadratureConfig {
            rel_tol: T::lit(1e-10).max(floor),
            abs_tol: T::lit(1e-14),
            max_subdivisions: 2000,
            rotation_decay_cutoff: T::lit(1e-18).max(T::epsilon() * T::epsilon()),
        }
    }
}

impl<T: Real> QuadratureConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > T::zero()) || !(self.abs_tol > T::zero()) {
            return Err(domain("quadrature tolerances must be positive"));
        }
        if self.max_subdivisions < 1 {
            return Err(domain("max_subdivisions must be at least 1"));
        }
        if !(self.rotation_decay_cutoff > T::zero()) || self.rotation_decay_cutoff >= T::one() {
            return Err(domain("rotation_decay_cutoff must lie in (0, 1)"));
        }
        Ok(())
    }

    pub fn with_rel_tol(mut self, rel_tol: T) -> Self {
        self.rel_tol = rel_tol;
        self
    }
}

/// Integral estimate with its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T> {
    pub value: C<T>,
    pub error: T,
    pub intervals: usize,
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

struct Piece<T> {
    a: T,
    b: T,
    value: C<T>,
    error: T,
    abs: T,
}

impl<T: Real> PartialEq for Piece<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<T: Real> Eq for Piece<T> {}
impl<T: Real> PartialOrd for Piece<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Real> Ord for Piece<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.partial_cmp(&other.error).unwrap_or(Ordering::Equal)
    }
}

fn kronrod<T: Real, F: Fn(T) -> C<T>>(f: &F, a: T, b: T) -> Result<Piece<T>> {
    let half = T::lit(0.5);
    let c = (a + b) * half;
    let h = (b - a) * half;
    let mut k = C::new(T::zero(), T::zero());
    let mut g = k;
    let mut abs = T::zero();
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let dx = h * T::lit(x);
        let pts: &[T] = if j == 7 { &[T::zero()] } else { &[dx, -dx] };
        for &d in pts {
            let y = f(c + d);
            if !is_finite_c(y) {
                return Err(domain(format!("integrand not finite at x = {}", c + d)));
            }
            k += y * T::lit(w);
            abs += y.norm() * T::lit(w);
            if j % 2 == 1 {
                g += y * T::lit(WG[j / 2]);
            }
        }
    }
    let h_abs = h.abs();
    Ok(Piece { a, b, value: k * h, error: (k - g).norm() * h_abs, abs: abs * h_abs })
}

/// Global adaptive Gauss–Kronrod (7/15) quadrature of a complex integrand on `[a, b]`.
///
/// Endpoint power singularities are tolerated since endpoints are never sampled.
pub fn adaptive_finite_quad<T, F>(f: F, a: T, b: T, cfg: &QuadratureConfig<T>) -> Result<QuadResult<T>>
where
    T: Real,
    F: Fn(T) -> C<T>,
{
    cfg.validate()?;
    if !a.is_finite() || !b.is_finite() {
        return Err(domain("finite quadrature needs finite limits"));
    }
    if a == b {
        return Ok(QuadResult { value: C::new(T::zero(), T::zero()), error: T::zero(), intervals: 0 });
    }
    let first = kronrod(&f, a, b)?;
    let mut total = first.value;
    let mut err = first.error;
    let mut abs = first.abs;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let roundoff = T::epsilon() * T::lit(50.0);
    loop {
        let target = (cfg.rel_tol * total.norm()).max(cfg.abs_tol).max(roundoff * abs);
        if err <= target {
            break;
        }
        if heap.len() >= cfg.max_subdivisions {
            return Err(LabError::SubdivisionBudget {
                budget: cfg.max_subdivisions,
                error: err.to_f64().unwrap_or(f64::NAN),
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = (worst.a + worst.b) * T::lit(0.5);
        if mid == worst.a || mid == worst.b {
            // Interval cannot be split further in this precision.
            return Err(LabError::SubdivisionBudget {
                budget: cfg.max_subdivisions,
                error: err.to_f64().unwrap_or(f64::NAN),
            });
        }
        let left = kronrod(&f, worst.a, mid)?;
        let right = kronrod(&f, mid, worst.b)?;
        total += left.value + right.value - worst.value;
        abs += left.abs + right.abs - worst.abs;
        heap.push(left);
        heap.push(right);
        // Re-sum so error bookkeeping does not drift.
        err = heap.iter().fold(T::zero(), |s, p| s + p.error);
    }
    let intervals = heap.len();
    let value = heap.iter().fold(C::new(T::zero(), T::zero()), |s, p| s + p.value);
    Ok(QuadResult { value, error: err, intervals })
}

/// Fixed-order Gauss–Legendre rule on `[a, b]` split into `panels` equal pieces.
/// Used as a brute-force reference for long oscillatory ranges.
pub fn gauss_legendre_panels<T, F>(f: F, a: T, b: T, panels: usize) -> C<T>
where
    T: Real,
    F: Fn(T) -> C<T>,
{
    let h = (b - a) / T::of_usize(panels.max(1));
    let half = T::lit(0.5);
    let mut acc = C::new(T::zero(), T::zero());
    for p in 0..panels.max(1) {
        let lo = a + h * T::of_usize(p);
        let c = lo + h * half;
        let mut s = C::new(T::zero(), T::zero());
        for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).enumerate() {
            let dx = h * half * T::lit(x);
            if j == 7 {
                s += f(c) * T::lit(w);
            } else {
                s += (f(c + dx) + f(c - dx)) * T::lit(w);
            }
        }
        acc += s * (h * half);
    }
    acc
}
