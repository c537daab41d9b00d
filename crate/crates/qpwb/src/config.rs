//! Run configuration: one record per subcommand, filled from a TOML file
//! and then from command-line flags, which win.
//!
//! Numbers are kept as the text the user gave so that nothing is rounded
//! before it reaches the extended-precision parser.

use std::path::{Path, PathBuf};

use clap::{Args, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;
use crate::value::parse_count;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    Siegel,
    Henon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProjectionKind {
    /// Two real coordinates, `--u` and `--v`.
    Coords,
    /// `(r_{n+lag}, r_n)` with `r_n = |z_n - center|`.
    RadiusDelay,
}

#[derive(Args, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimulateArgs {
    #[arg(long, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<MapKind>,
    /// Siegel rotation number in turns (default golden).
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z0: Option<String>,
    /// Hénon angle θ in radians.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<String>,
    /// Hénon angle φ in radians.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<String>,
    /// Hénon eigenvalue angle in turns, instead of θ and φ.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y0: Option<String>,
    /// Start at the Hénon fixed point plus these multiples of the two
    /// eigenvectors, instead of `--x0/--y0`.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset2: Option<String>,
    /// Number of stored points.
    #[arg(long, value_parser = parse_count)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[arg(long, value_parser = parse_count)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stride: Option<usize>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Args, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RotationArgs {
    /// Trajectory CSV.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projection: Option<ProjectionKind>,
    /// First planar coordinate, `re<c>` or `im<c>` (default re0).
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<String>,
    /// Second planar coordinate (default im0).
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<String>,
    /// Complex component for radius-delay.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub component: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lag: Option<usize>,
    /// Planar point the angle is measured about, `u,v` (default 0,0).
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_halfwidth: Option<String>,
    /// Known rate; enables the error column of the profile.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    /// Comma separated sample counts for the convergence profile.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checkpoints: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile_out: Option<PathBuf>,
    /// Lifted angle differences as CSV.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lift_out: Option<PathBuf>,
    /// Use only the first N points.
    #[arg(long, value_parser = parse_count)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncate: Option<usize>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub figure: Option<String>,
}

#[derive(Args, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FourierArgs {
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<PathBuf>,
    /// Rotation number; estimated from the trajectory when absent.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<String>,
    /// Reference point for the estimate, `u,v` in the (Re z, Im z) plane.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
    #[arg(long, value_parser = parse_count)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub floor: Option<String>,
    /// Spectrum file to write.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    /// Also print `|b_{-1}| ... |b_{-m}|`, which vanish for an analytic curve.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub negative: Option<usize>,
    #[arg(long, value_parser = parse_count)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncate: Option<usize>,
}

#[derive(Args, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConjugacyArgs {
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<PathBuf>,
    /// Use this R0 instead of fitting one.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r0: Option<String>,
    /// Table of `b_k` and `a_k`.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    /// Trajectory to rebuild from the spectrum; reports the largest error.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub replay: Option<PathBuf>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub figure: Option<String>,
}

#[derive(Args, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CurveArgs {
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<PathBuf>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r0: Option<String>,
    /// Radius in the linearizing disk (default 0.999).
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<String>,
    #[arg(long, value_parser = parse_count)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub figure: Option<String>,
}

#[derive(Args, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LengthArgs {
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<PathBuf>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r0: Option<String>,
    /// `lo..hi`, both inside `[0, 1)`.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
    /// Coefficient bound for the closed-form column (default 1).
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub figure: Option<String>,
}

#[derive(Args, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConvergenceArgs {
    /// Rotation number of the test signal `e^{i2πnρ}` (default golden).
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<String>,
    /// Comma separated weight kinds (default bump2,uniform).
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    /// Comma separated window lengths.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub figure: Option<String>,
}

#[derive(Subcommand, Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Iterate a map and write the trajectory.
    Simulate(SimulateArgs),
    /// Rotation rate of a projected trajectory.
    Rotation(RotationArgs),
    /// Fourier coefficients of an invariant curve.
    Fourier(FourierArgs),
    /// R0 fit and power-series coefficients from a spectrum.
    Conjugacy(ConjugacyArgs),
    /// Image of a circle under the conjugacy.
    Curve(CurveArgs),
    /// L2 length of the image circles over a range of radii.
    Length(LengthArgs),
    /// Weighted averages of `e^{i2πnρ}` for growing windows.
    Convergence(ConvergenceArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Simulate(_) => "simulate",
            Command::Rotation(_) => "rotation",
            Command::Fourier(_) => "fourier",
            Command::Conjugacy(_) => "conjugacy",
            Command::Curve(_) => "curve",
            Command::Length(_) => "length",
            Command::Convergence(_) => "convergence",
        }
    }
}

/// Everything that determines the output of one invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(default)]
    pub full_scale: bool,
    pub run: Command,
}

impl RunConfig {
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("run configs are plain tables")
    }

    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::usage(format!("bad run config: {e}")))
    }

    /// SHA-256 of the TOML form, in hex.
    pub fn sha256(&self) -> String {
        hex::encode(Sha256::digest(self.to_toml().as_bytes()))
    }

    /// Flags over the `[<command>]` table of a config file, with
    /// `full_scale` read from the top level of the file.
    pub fn merge(file: Option<&Path>, flags: Command, full_scale_flag: bool) -> Result<Self, CliError> {
        let Some(path) = file else {
            return Ok(Self { full_scale: full_scale_flag, run: flags });
        };
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let mut table: toml::Table = text.parse().map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
        for key in table.keys() {
            if key != "full_scale" && !COMMANDS.contains(&key.as_str()) {
                return Err(CliError::usage(format!("{}: unknown section `{key}`", path.display())));
            }
        }
        let full_scale = match table.get("full_scale") {
            None => false,
            Some(toml::Value::Boolean(b)) => *b,
            Some(_) => return Err(CliError::usage(format!("{}: full_scale must be true or false", path.display()))),
        } || full_scale_flag;
        let name = flags.name();
        let mut merged = match table.remove(name) {
            Some(toml::Value::Table(t)) => t,
            None => toml::Table::new(),
            Some(_) => return Err(CliError::usage(format!("{}: `{name}` must be a table", path.display()))),
        };
        let over = toml::Table::try_from(&flags).expect("flags serialize to a table");
        merged.extend(over.into_iter().filter(|(k, _)| k != "command"));
        merged.insert("command".into(), toml::Value::String(name.into()));
        let run: Command = toml::Value::Table(merged)
            .try_into()
            .map_err(|e| CliError::usage(format!("{}: [{name}]: {e}", path.display())))?;
        Ok(Self { full_scale, run })
    }
}

const COMMANDS: &[&str] = &["simulate", "rotation", "fourier", "conjugacy", "curve", "length", "convergence"];
