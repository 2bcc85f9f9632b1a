use std::fmt;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use rindler_lab::perturbation::{Method, Scenario};
use rindler_lab::Params;

#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn bad(msg: impl Into<String>) -> ConfigError {
    ConfigError(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ScenarioName {
    #[serde(alias = "AccelAtom")]
    AccelAtom,
    #[serde(alias = "StaticAtomRindlerVac")]
    StaticAtom,
    #[serde(alias = "AccelAtomMirror")]
    AccelAtomMirror,
    #[serde(alias = "AccelMirrorStaticAtom")]
    AccelMirror,
    #[serde(alias = "FreeFallBH")]
    FreeFall,
}

impl ScenarioName {
    pub fn kind(self) -> Scenario {
        match self {
            ScenarioName::AccelAtom => Scenario::AccelAtom,
            ScenarioName::StaticAtom => Scenario::StaticAtomRindlerVac,
            ScenarioName::AccelAtomMirror => Scenario::AccelAtomMirror,
            ScenarioName::AccelMirror => Scenario::AccelMirrorStaticAtom,
            ScenarioName::FreeFall => Scenario::FreeFallBH,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum MethodName {
    Closed,
    Quad,
    Both,
    Asymptotic,
}

impl MethodName {
    pub fn method(self) -> Method {
        match self {
            MethodName::Closed => Method::ClosedForm,
            MethodName::Quad => Method::Quadrature,
            MethodName::Both => Method::Both,
            MethodName::Asymptotic => Method::Asymptotic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[serde(alias = "lin")]
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ParamsConfig {
    pub ell: f64,
    pub omega_atom: f64,
    pub nu_field: f64,
    pub coupling_g: f64,
    pub z0: f64,
    pub v0: f64,
    pub rg: f64,
}

impl Default for ParamsConfig {
    fn default() -> Self {
        let p = Params::default();
        ParamsConfig {
            ell: p.ell,
            omega_atom: p.omega_atom,
            nu_field: p.nu_field,
            coupling_g: p.coupling_g,
            z0: p.z0,
            v0: p.v0,
            rg: p.rg,
        }
    }
}

impl ParamsConfig {
    pub fn params(&self) -> Params {
        Params {
            ell: self.ell,
            omega_atom: self.omega_atom,
            nu_field: self.nu_field,
            coupling_g: self.coupling_g,
            z0: self.z0,
            v0: self.v0,
            rg: self.rg,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    #[serde(default = "linear")]
    pub spacing: Spacing,
}

fn linear() -> Spacing {
    Spacing::Linear
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig { start: 0.1, stop: 3.0, points: 30, spacing: Spacing::Log }
    }
}

impl GridConfig {
    /// `start:stop:points[:log|:lin]`.
    pub fn parse(s: &str) -> Result<Self, ConfigError> {
        let parts: Vec<&str> = s.split(':').collect();
        if !(3..=4).contains(&parts.len()) {
            return Err(bad(format!("--grid expects start:stop:points[:log], got {s:?}")));
        }
        let num = |x: &str, what: &str| x.trim().parse::<f64>().map_err(|_| bad(format!("--grid {what} {x:?} is not a number")));
        let start = num(parts[0], "start")?;
        let stop = num(parts[1], "stop")?;
        let points = parts[2]
            .trim()
            .parse::<usize>()
            .map_err(|_| bad(format!("--grid points {:?} is not a non-negative integer", parts[2])))?;
        let spacing = match parts.get(3).map(|x| x.trim()) {
            None | Some("lin") | Some("linear") => Spacing::Linear,
            Some("log") => Spacing::Log,
            Some(other) => return Err(bad(format!("--grid spacing must be lin or log, got {other:?}"))),
        };
        Ok(GridConfig { start, stop, points, spacing })
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.points == 0 {
            return Err(bad("freq_grid.points must be at least 1"));
        }
        if !self.start.is_finite() || !self.stop.is_finite() {
            return Err(bad("freq_grid bounds must be finite"));
        }
        if !(self.start < self.stop) {
            return Err(bad(format!("freq_grid needs start < stop, got {} and {}", self.start, self.stop)));
        }
        if self.spacing == Spacing::Log && !(self.start > 0.0) {
            return Err(bad("log spacing needs start > 0"));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        if n == 1 {
            return vec![self.start];
        }
        let frac = |k: usize| k as f64 / (n - 1) as f64;
        let mut v: Vec<f64> = match self.spacing {
            Spacing::Linear => (0..n).map(|k| self.start + (self.stop - self.start) * frac(k)).collect(),
            Spacing::Log => {
                let (a, b) = (self.start.ln(), self.stop.ln());
                (0..n).map(|k| (a + (b - a) * frac(k)).exp()).collect()
            }
        };
        v[0] = self.start;
        v[n - 1] = self.stop;
        v
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputConfig {
    pub path: Option<PathBuf>,
    pub format: Option<Format>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub scenario: ScenarioName,
    pub method: MethodName,
    pub params: ParamsConfig,
    #[serde(alias = "grid")]
    pub freq_grid: GridConfig,
    pub output: OutputConfig,
    pub checks: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            scenario: ScenarioName::AccelAtom,
            method: MethodName::Closed,
            params: ParamsConfig::default(),
            freq_grid: GridConfig::default(),
            output: OutputConfig::default(),
            checks: Vec::new(),
        }
    }
}

/// Flag values that override the file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub output: Option<PathBuf>,
    pub format: Option<Format>,
    pub method: Option<MethodName>,
    pub grid: Option<String>,
    pub scenario: Option<ScenarioName>,
}

impl RunConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, ConfigError> {
        let Some(path) = path else {
            return Ok(RunConfig::default());
        };
        let text =
            std::fs::read_to_string(path).map_err(|e| bad(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| bad(format!("config {}: {e}", path.display())))
    }

    pub fn apply(&mut self, o: &Overrides) -> Result<(), ConfigError> {
        if let Some(p) = &o.output {
            self.output.path = Some(p.clone());
        }
        if let Some(f) = o.format {
            self.output.format = Some(f);
        }
        if let Some(m) = o.method {
            self.method = m;
        }
        if let Some(g) = &o.grid {
            self.freq_grid = GridConfig::parse(g)?;
        }
        if let Some(s) = o.scenario {
            self.scenario = s;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        self.freq_grid.validate()?;
        self.params.params().validate().map_err(|e| bad(format!("params: {e}")))
    }

    /// Explicit format, else from the output extension, else CSV.
    pub fn format(&self) -> Format {
        if let Some(f) = self.output.format {
            return f;
        }
        match self.output.path.as_ref().and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some("json") => Format::Json,
            _ => Format::Csv,
        }
    }
}
