use std::f64::consts::{PI, TAU};

use rindler_lab::modes::{kg_inner, ModeKind, ModeSpec, Surface, SurfaceSampling, Taper};
use rindler_lab::numerics::gamma_complex;
use rindler_lab::perturbation::{absorption_emission_ratio, accel_atom_probability, Method};
use rindler_lab::spacetime::{
    minkowski_to_rindler, rindler_to_minkowski, temperatures, EventRindler, HorizonInput, UnitSystem,
};
use rindler_lab::vacua::{bogoliubov, kms_twist_residual, random_sample_pairs, BogoliubovConvention};
use rindler_lab::{Complex64, LabError, Params};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub check_name: &'static str,
    pub status: Status,
    pub measured: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub details: String,
}

fn report(check_name: &'static str, measured: f64, expected: f64, tolerance: f64, details: String) -> VerificationReport {
    let ok = (measured - expected).abs() <= tolerance;
    VerificationReport { check_name, status: if ok { Status::Pass } else { Status::Fail }, measured, expected, tolerance, details }
}

type Check = fn() -> Result<VerificationReport, LabError>;

pub const CHECKS: &[(&str, Check)] = &[
    ("gamma-identity", gamma_identity),
    ("quad-vs-closed", quad_vs_closed),
    ("kms-twist", kms_twist),
    ("bogoliubov-norm", bogoliubov_norm),
    ("roundtrip-coords", roundtrip_coords),
    ("ratio-thermal", ratio_thermal),
    ("temperature-identity", temperature_identity),
    ("kg-conjugation", kg_conjugation),
];

pub fn names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Resolve names, rejecting unknown ones. An empty list selects every check.
pub fn select(requested: &[String]) -> Result<Vec<(&'static str, Check)>, String> {
    if requested.is_empty() {
        return Ok(CHECKS.to_vec());
    }
    requested
        .iter()
        .map(|r| {
            CHECKS
                .iter()
                .find(|(n, _)| n == r)
                .copied()
                .ok_or_else(|| format!("unknown check {r:?}; available: {}", names().join(", ")))
        })
        .collect()
}

fn gamma_identity() -> Result<VerificationReport, LabError> {
    let mut worst: f64 = 0.0;
    for k in 0..50 {
        let x = (1e-3f64.ln() + (30f64.ln() - 1e-3f64.ln()) * k as f64 / 49.0).exp();
        let g = gamma_complex(Complex64::new(0.0, x))?;
        worst = worst.max((g.norm_sqr() * x * (PI * x).sinh() / PI - 1.0).abs());
    }
    Ok(report("gamma-identity", worst, 0.0, 1e-12, "max rel err of |Γ(ix)|² x sinh πx / π over 50 log-spaced x in [1e-3, 30]".into()))
}

fn quad_vs_closed() -> Result<VerificationReport, LabError> {
    let p = Params::default();
    let c = accel_atom_probability(&p, Method::ClosedForm)?.probability;
    let q = accel_atom_probability(&p, Method::Quadrature)?.probability;
    Ok(report("quad-vs-closed", (q - c).abs() / c, 0.0, 1e-6, format!("accelerated atom at ωℓ = 1: closed {c:.12e}, quad {q:.12e}")))
}

fn kms_twist() -> Result<VerificationReport, LabError> {
    let pairs = random_sample_pairs(64, 2024, 1.0);
    let mut worst: f64 = 0.0;
    for p in pairs.chunks(1) {
        worst = worst.max(kms_twist_residual(p, 1.0, TAU)?);
    }
    Ok(report("kms-twist", worst, 0.0, 1e-10, "max twist residual at imaginary shift 2πℓ over 64 pairs".into()))
}

fn bogoliubov_norm() -> Result<VerificationReport, LabError> {
    let mut worst: f64 = 0.0;
    for om in [0.1_f64, 0.5, 1.0, 2.0, 5.0] {
        worst = worst.max(bogoliubov(om, BogoliubovConvention::Standard)?.normalization_defect.abs());
    }
    Ok(report("bogoliubov-norm", worst, 0.0, 1e-12, "max ||α|² − |β|² − 1| for Ω in {0.1, 0.5, 1, 2, 5}".into()))
}

fn roundtrip_coords() -> Result<VerificationReport, LabError> {
    let mut worst: f64 = 0.0;
    for i in 0..11 {
        for j in 0..9 {
            let e = EventRindler { tbar: -3.0 + 0.6 * i as f64, zbar: -2.0 + 0.5 * j as f64 };
            let b = minkowski_to_rindler(rindler_to_minkowski(e, 1.0), 1.0)?;
            worst = worst.max((b.tbar - e.tbar).abs().max((b.zbar - e.zbar).abs()));
        }
    }
    Ok(report("roundtrip-coords", worst, 0.0, 1e-6, "max Rindler → Minkowski → Rindler error on a 11×9 grid".into()))
}

fn ratio_thermal() -> Result<VerificationReport, LabError> {
    let r = absorption_emission_ratio(&Params { z0: 100.0, ..Params::default() }, Method::ClosedForm)?;
    Ok(report(
        "ratio-thermal",
        r.ratio / r.thermal,
        1.0,
        1e-2,
        format!("exact absorption/emission at ωz₀ = 100, νℓ = 1: {:.6e} vs e^{{2π}} = {:.6e}", r.ratio, r.thermal),
    ))
}

fn temperature_identity() -> Result<VerificationReport, LabError> {
    let t = temperatures(1.0, HorizonInput::Radius(1.0), UnitSystem::Natural)?;
    Ok(report("temperature-identity", t.hbar / t.hawking, 1.0, 1e-12, format!("T_HBAR {:.12e}, T_BH {:.12e} at r_g = 1", t.hbar, t.hawking)))
}

fn kg_conjugation() -> Result<VerificationReport, LabError> {
    let s = SurfaceSampling::new(Surface::ConstantTime { t: 0.3 }, 0.0, 12.0, 1024, Taper::Gaussian);
    let f = ModeSpec::new(ModeKind::PlaneWaveRight, 0.8);
    let g = ModeSpec::new(ModeKind::MirrorStatic, 1.3);
    let fg = kg_inner(&f, &g, &s)?;
    let gf = kg_inner(&g, &f, &s)?;
    Ok(report("kg-conjugation", (fg - gf.conj()).norm(), 0.0, 1e-12, "|⟨f,g⟩ − ⟨g,f⟩*| for a plane wave and a mirror mode".into()))
}
