//! Trajectory, spectrum and table files.
//!
//! Trajectories are CSV (`n` then re/im columns per component) with a TOML
//! sidecar next to them describing the generator. Spectra are TOML. Numbers
//! are written at 36 significant digits everywhere.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use qpwb_core::maps::{Generator, HenonParams, SiegelMapParams, TrajectoryMeta};
use qpwb_core::{Spectrum, Trajectory, WeightKind, XComplex, XReal};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::value::{format_complex, parse_complex, parse_real};

pub fn sidecar_path(csv: &Path) -> PathBuf {
    csv.with_extension("toml")
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TrajectorySidecar {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<String>,
    /// Siegel rotation number, turns.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<String>,
    /// Hénon angles, radians.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<String>,
    pub dim: usize,
    pub len: usize,
    pub stride: usize,
    pub discarded: usize,
    pub initial: Vec<String>,
    #[serde(default)]
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config_sha256: Option<String>,
}

impl TrajectorySidecar {
    pub fn describe(traj: &Trajectory, config_sha256: Option<String>) -> Self {
        let meta = traj.meta();
        let mut s = Self {
            dim: traj.dim(),
            len: traj.len(),
            stride: meta.stride,
            discarded: meta.discarded,
            initial: meta.initial.iter().map(|&z| format_complex(z)).collect(),
            note: meta.note.clone(),
            config_sha256,
            ..Self::default()
        };
        match &meta.generator {
            Some(Generator::Siegel(p)) => {
                s.map = Some("siegel".into());
                s.rho = Some(p.rho().to_string());
            }
            Some(Generator::Henon(p)) => {
                s.map = Some("henon".into());
                s.theta = Some(p.theta().to_string());
                s.phi = Some(p.phi().to_string());
            }
            None => {}
        }
        s
    }

    fn generator(&self, path: &Path) -> Result<Option<Generator>, CliError> {
        let field = |v: &Option<String>, name: &str| -> Result<XReal, CliError> {
            let v = v.as_deref().ok_or_else(|| CliError::format(path, format!("missing `{name}`")))?;
            parse_real(v).map_err(|e| CliError::format(path, e.to_string()))
        };
        Ok(match self.map.as_deref() {
            None => None,
            Some("siegel") => Some(Generator::Siegel(SiegelMapParams::new(field(&self.rho, "rho")?)?)),
            Some("henon") => Some(Generator::Henon(HenonParams::new(field(&self.theta, "theta")?, field(&self.phi, "phi")?)?)),
            Some(other) => return Err(CliError::format(path, format!("unknown map `{other}`"))),
        })
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    File::create(path).map(BufWriter::new).map_err(|e| CliError::io(path, e))
}

fn component_names(dim: usize) -> Vec<String> {
    let names: &[&str] = if dim == 2 { &["x", "y"] } else { &["z"] };
    let mut cols = vec!["n".to_string()];
    for c in 0..dim {
        let name = names.get(c).map(|s| s.to_string()).unwrap_or_else(|| format!("z{c}"));
        cols.push(format!("{name}_re"));
        cols.push(format!("{name}_im"));
    }
    cols
}

/// Writes the CSV and its sidecar.
pub fn write_trajectory(path: &Path, traj: &Trajectory, config_sha256: Option<String>) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(create(path)?);
    let io = |e: csv::Error| CliError::format(path, e.to_string());
    w.write_record(component_names(traj.dim())).map_err(io)?;
    let mut row = Vec::with_capacity(1 + 2 * traj.dim());
    for (n, p) in traj.points().enumerate() {
        row.clear();
        row.push(n.to_string());
        for z in p {
            row.push(z.re.to_string());
            row.push(z.im.to_string());
        }
        w.write_record(&row).map_err(io)?;
    }
    w.flush().map_err(|e| CliError::io(path, e))?;
    let side = sidecar_path(path);
    let text = toml::to_string(&TrajectorySidecar::describe(traj, config_sha256))
        .map_err(|e| CliError::format(&side, e.to_string()))?;
    std::fs::write(&side, text).map_err(|e| CliError::io(&side, e))
}

/// Reads a trajectory CSV. The sidecar is optional; without it the
/// trajectory has no generator.
pub fn read_trajectory(path: &Path) -> Result<Trajectory, CliError> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(std::io::BufReader::new(file));
    let bad = |msg: String| CliError::format(path, msg);
    let ncols = r.headers().map_err(|e| bad(e.to_string()))?.len();
    if ncols < 3 || (ncols - 1) % 2 != 0 {
        return Err(bad(format!("expected `n` and re/im column pairs, found {ncols} columns")));
    }
    let dim = (ncols - 1) / 2;
    let mut points = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| bad(e.to_string()))?;
        for c in 0..dim {
            let re = parse_real(&rec[1 + 2 * c]).map_err(|e| bad(format!("row {i}: {e}")))?;
            let im = parse_real(&rec[2 + 2 * c]).map_err(|e| bad(format!("row {i}: {e}")))?;
            points.push(XComplex::new(re, im));
        }
    }
    let side = sidecar_path(path);
    let meta = if side.exists() {
        let text = std::fs::read_to_string(&side).map_err(|e| CliError::io(&side, e))?;
        let s: TrajectorySidecar = toml::from_str(&text).map_err(|e| CliError::format(&side, e.to_string()))?;
        if s.dim != dim {
            return Err(CliError::format(&side, format!("sidecar says dimension {}, file has {dim}", s.dim)));
        }
        TrajectoryMeta {
            generator: s.generator(&side)?,
            initial: s.initial.iter().map(|z| parse_complex(z)).collect::<Result<_, _>>()?,
            stride: s.stride,
            discarded: s.discarded,
            note: s.note,
        }
    } else {
        TrajectoryMeta {
            generator: None,
            initial: points.iter().take(dim).copied().collect(),
            stride: 1,
            discarded: 0,
            note: String::new(),
        }
    };
    Ok(Trajectory::from_points(dim, points, meta)?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumFile {
    pub rho: String,
    pub weight: String,
    pub n_samples: usize,
    pub noise_floor: String,
    pub k_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config_sha256: Option<String>,
    /// `[re, im]` of `b_0, b_1, ...`
    pub coeffs: Vec<[String; 2]>,
}

pub fn write_spectrum(path: &Path, spec: &Spectrum, config_sha256: Option<String>) -> Result<(), CliError> {
    let file = SpectrumFile {
        rho: spec.rho.to_string(),
        weight: spec.weight_kind.to_string(),
        n_samples: spec.n_samples,
        noise_floor: spec.noise_floor.to_string(),
        k_max: spec.k_max(),
        config_sha256,
        coeffs: spec.coeffs.iter().map(|b| [b.re.to_string(), b.im.to_string()]).collect(),
    };
    let text = toml::to_string(&file).map_err(|e| CliError::format(path, e.to_string()))?;
    let mut w = create(path)?;
    w.write_all(text.as_bytes()).and_then(|_| w.flush()).map_err(|e| CliError::io(path, e))
}

pub fn read_spectrum(path: &Path) -> Result<Spectrum, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let f: SpectrumFile = toml::from_str(&text).map_err(|e| CliError::format(path, e.to_string()))?;
    let num = |s: &str| parse_real(s).map_err(|e| CliError::format(path, e.to_string()));
    let weight_kind: WeightKind = f.weight.parse().map_err(|e: qpwb_core::Error| CliError::format(path, e.to_string()))?;
    let coeffs = f
        .coeffs
        .iter()
        .map(|[re, im]| Ok(XComplex::new(num(re)?, num(im)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Spectrum { rho: num(&f.rho)?, coeffs, n_samples: f.n_samples, weight_kind, noise_floor: num(&f.noise_floor)? })
}

/// Header lines of every table written by the command line tool.
#[derive(Clone, Debug, PartialEq)]
pub struct TableHeader {
    /// Which figure the table holds data for.
    pub figure: String,
    pub config_sha256: String,
}

/// CSV preceded by `# figure:` and `# config-sha256:` comment lines.
pub fn write_table<I>(path: &Path, header: &TableHeader, columns: &[&str], rows: I) -> Result<(), CliError>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut out = create(path)?;
    writeln!(out, "# figure: {}", header.figure)
        .and_then(|_| writeln!(out, "# config-sha256: {}", header.config_sha256))
        .map_err(|e| CliError::io(path, e))?;
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| CliError::format(path, e.to_string());
    w.write_record(columns).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    w.flush().map_err(|e| CliError::io(path, e))
}

/// Rows of a table written by [`write_table`], as text.
pub fn read_table(path: &Path) -> Result<(Vec<String>, Vec<Vec<String>>), CliError> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(file);
    let bad = |e: csv::Error| CliError::format(path, e.to_string());
    let cols = r.headers().map_err(bad)?.iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.map(|r| r.iter().map(String::from).collect()).map_err(bad))
        .collect::<Result<_, _>>()?;
    Ok((cols, rows))
}
