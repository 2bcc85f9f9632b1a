use proptest::prelude::*;

use rindler_lab::modes::{kg_inner, ModeKind, ModeSpec, Surface, SurfaceSampling, Taper};
use rindler_lab::numerics::{gamma_abs_sq_imag, gamma_complex, lower_incomplete_gamma, upper_incomplete_gamma};
use rindler_lab::perturbation::{
    accel_atom_probability, freefall_bh_probability, spectrum_sweep, static_atom_rindler_probability, w_omega,
    w_omega_minus, Method, Scenario as Kind, ScenarioSpec,
};
use rindler_lab::spacetime::{minkowski_to_rindler, rindler_to_minkowski, EventRindler};
use rindler_lab::vacua::{bogoliubov, BogoliubovConvention};
use rindler_lab::{Complex64, Params};

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_recurrence(re in -4.5f64..6.0, im in -8.0f64..8.0) {
        prop_assume!(im.abs() > 1e-3 || (re - re.round()).abs() > 1e-3);
        let z = Complex64::new(re, im);
        let lhs = gamma_complex(z + 1.0).unwrap();
        let rhs = z * gamma_complex(z).unwrap();
        prop_assert!(close(lhs, rhs, 1e-11), "{lhs} vs {rhs}");
    }

    #[test]
    fn gamma_modulus_on_imaginary_axis(x in 1e-3f64..30.0) {
        let g = gamma_complex(Complex64::new(0.0, x)).unwrap().norm_sqr();
        let c = gamma_abs_sq_imag(x).unwrap();
        prop_assert!((g - c).abs() <= 1e-12 * c);
    }

    #[test]
    fn incomplete_gamma_sum(nu in 0.0f64..3.0, x in 0.1f64..60.0, phase in 0usize..3) {
        let s = Complex64::new(1.0, nu);
        let arg = match phase {
            0 => Complex64::new(x, 0.0),
            1 => Complex64::new(0.0, x),
            _ => Complex64::new(0.0, -x),
        };
        let lo = lower_incomplete_gamma(s, arg).unwrap();
        let up = upper_incomplete_gamma(s, arg).unwrap();
        let g = gamma_complex(s).unwrap();
        prop_assert!((lo + up - g).norm() <= 1e-10 * (lo.norm() + up.norm()).max(g.norm()));
    }

    #[test]
    fn rindler_round_trip(tb in -5.0f64..5.0, zb in -3.0f64..3.0, ell in 0.1f64..10.0) {
        let e = EventRindler { tbar: tb * ell, zbar: zb * ell };
        let back = minkowski_to_rindler(rindler_to_minkowski(e, ell), ell).unwrap();
        prop_assert!((back.tbar - e.tbar).abs() <= 1e-10 * ell);
        prop_assert!((back.zbar - e.zbar).abs() <= 1e-10 * ell);
    }

    #[test]
    fn kg_hermitian(om1 in 0.3f64..3.0, om2 in 0.3f64..3.0, t in -1.0f64..1.0) {
        let s = SurfaceSampling::new(Surface::ConstantTime { t }, 0.0, 12.0, 600, Taper::Gaussian);
        let f = ModeSpec::new(ModeKind::PlaneWaveRight, om1);
        let g = ModeSpec::new(ModeKind::PlaneWaveLeft, om2);
        let fg = kg_inner(&f, &g, &s).unwrap();
        let gf = kg_inner(&g, &f, &s).unwrap();
        prop_assert!((fg - gf.conj()).norm() < 1e-12);
        let ff = kg_inner(&f, &f, &s).unwrap();
        prop_assert!(ff.re > 0.0 && ff.im.abs() < 1e-10 * ff.re);
    }

    #[test]
    fn bogoliubov_unitary(om in 0.01f64..20.0) {
        let p = bogoliubov(om, BogoliubovConvention::Standard).unwrap();
        prop_assert!(p.normalization_defect.abs() < 1e-12 * p.alpha * p.alpha);
        prop_assert!((p.beta / p.alpha - (-std::f64::consts::PI * om).exp()).abs() < 1e-14);
    }

    #[test]
    fn probability_is_amplitude_squared(w in 0.05f64..5.0, nu in 0.0f64..2.0) {
        let p = Params { omega_atom: w, nu_field: nu, ..Params::default() };
        let r = accel_atom_probability(&p, Method::ClosedForm).unwrap();
        let a = r.amplitude.unwrap().norm_sqr();
        prop_assert!((a - r.probability).abs() <= 1e-12 * r.probability);
    }

    #[test]
    fn static_probability_is_amplitude_squared(nu in 0.05f64..3.0, z0 in 0.5f64..80.0) {
        let p = Params { nu_field: nu, z0, ..Params::default() };
        let r = static_atom_rindler_probability(&p, Method::ClosedForm).unwrap();
        prop_assert!((r.amplitude.unwrap().norm_sqr() - r.probability).abs() <= 1e-12 * r.probability);
    }

    #[test]
    fn w_minus_is_minus_conjugate(om in 0.1f64..4.0, w in 0.2f64..5.0) {
        let plus = w_omega(om, w, 1.0, Method::ClosedForm).unwrap();
        let minus = w_omega_minus(om, w, 1.0, Method::ClosedForm).unwrap();
        prop_assert!(close(minus, -plus.conj(), 1e-12));
    }

    #[test]
    fn freefall_is_static_problem(rg in 0.2f64..20.0, v0 in 0.01f64..0.1, nu in 0.1f64..2.0) {
        let ff = Params { rg, v0, nu_field: nu, ..Params::default() };
        let st = Params { ell: 2.0 * rg, z0: 2.0 * v0 * rg, ..ff };
        let a = freefall_bh_probability(&ff, Method::ClosedForm).unwrap().probability;
        let b = static_atom_rindler_probability(&st, Method::ClosedForm).unwrap().probability;
        prop_assert_eq!(a.to_bits(), b.to_bits());
    }
}

#[test]
fn single_precision_tracks_double() {
    let p32 = rindler_lab::spacetime::DimensionlessParams::<f32>::default();
    let r32 = accel_atom_probability(&p32, Method::ClosedForm).unwrap().probability;
    let r64 = accel_atom_probability(&Params::default(), Method::ClosedForm).unwrap().probability;
    assert!(((r32 as f64) - r64).abs() < 1e-5 * r64);
    let b32 = bogoliubov(1.0f32, BogoliubovConvention::Standard).unwrap();
    assert!((b32.beta as f64 - (-std::f64::consts::PI).exp() / (1.0 - (-std::f64::consts::TAU).exp()).sqrt()).abs() < 1e-6);
}

#[test]
fn sweeps_are_deterministic() {
    let spec = ScenarioSpec { scenario: Kind::AccelAtom, params: Params::default(), method: Method::Quadrature };
    let grid: Vec<f64> = (1..=24).map(|k| 0.125 * k as f64).collect();
    let a = spectrum_sweep(&spec, &grid).unwrap();
    let b = spectrum_sweep(&spec, &grid).unwrap();
    assert_eq!(a, b);
}
