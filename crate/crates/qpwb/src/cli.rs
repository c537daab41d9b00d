//! The `qpwb` command-line tool.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Parser;
use qpwb_core::conjugacy::{self, fit_r0_detailed, power_series, ConjugacySeries};
use qpwb_core::maps::{iterate, Generator, HenonParams, SiegelMapParams};
use qpwb_core::rotation::{self, circle_distance, Coord, ProjectionSpec, RotationOptions};
use qpwb_core::wba::{build_weights, wb_average};
use qpwb_core::xprec::{exp_i2pi, golden};
use qpwb_core::{Spectrum, Trajectory, WeightKind, XComplex, XReal};

use crate::config::*;
use crate::error::{CliError, EXIT_USAGE};
use crate::io::{self as files, TableHeader};
use crate::parallel::{build_spectrum_par, reconstruction_error_par};
use crate::value::{format_complex, parse_complex, parse_counts, parse_range, parse_real};

/// Largest `N·K` mode-sample product a spectrum or replay may need without
/// `--full-scale`.
pub const DESK_WORK_LIMIT: f64 = 2e9;

#[derive(Parser, Debug)]
#[command(name = "qpwb", version, about = "Weighted Birkhoff rotation rates and conjugacies of quasiperiodic orbits")]
pub struct Cli {
    /// TOML file whose `[<command>]` table supplies any flag.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Allow spectrum and replay runs beyond desk scale.
    #[arg(long, global = true)]
    pub full_scale: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Parses, runs, prints, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    match run_cli(cli, &mut stdout.lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn run_cli(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = RunConfig::merge(cli.config.as_deref(), cli.command, cli.full_scale)?;
    run(&cfg, out)
}

pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let hash = cfg.sha256();
    let ctx = Ctx { full_scale: cfg.full_scale, hash };
    match &cfg.run {
        Command::Simulate(a) => simulate(&ctx, a, out),
        Command::Rotation(a) => rotation(&ctx, a, out),
        Command::Fourier(a) => fourier(&ctx, a, out),
        Command::Conjugacy(a) => conjugacy(&ctx, a, out),
        Command::Curve(a) => curve(&ctx, a, out),
        Command::Length(a) => length(&ctx, a, out),
        Command::Convergence(a) => convergence(&ctx, a, out),
    }
}

struct Ctx {
    full_scale: bool,
    hash: String,
}

impl Ctx {
    fn header(&self, figure: &Option<String>, default: &str) -> TableHeader {
        TableHeader { figure: figure.clone().unwrap_or_else(|| default.to_string()), config_sha256: self.hash.clone() }
    }

    fn check_work(&self, n: usize, k: usize, what: &str) -> Result<(), CliError> {
        let work = n as f64 * k as f64;
        if !self.full_scale && work > DESK_WORK_LIMIT {
            return Err(CliError::usage(format!(
                "{what} needs {work:.1e} mode-samples, above the desk limit {DESK_WORK_LIMIT:.0e}; pass --full-scale"
            )));
        }
        Ok(())
    }
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(|e| CliError::io("<stdout>", e))?
    };
}

fn required<'a, T>(v: &'a Option<T>, flag: &str) -> Result<&'a T, CliError> {
    v.as_ref().ok_or_else(|| CliError::usage(format!("missing --{flag}")))
}

fn real_or(v: &Option<String>, default: XReal) -> Result<XReal, CliError> {
    v.as_deref().map(parse_real).transpose().map(|x| x.unwrap_or(default))
}

fn weight(v: &Option<String>) -> Result<WeightKind, CliError> {
    match v {
        None => Ok(WeightKind::default()),
        Some(s) => s.parse().map_err(|e: qpwb_core::Error| CliError::usage(e.to_string())),
    }
}

fn pair(s: &str) -> Result<(XReal, XReal), CliError> {
    let (u, v) = s.split_once(',').ok_or_else(|| CliError::usage(format!("expected `u,v`, got {s:?}")))?;
    Ok((parse_real(u)?, parse_real(v)?))
}

fn coord(s: &str) -> Result<Coord, CliError> {
    let bad = || CliError::usage(format!("expected re<component> or im<component>, got {s:?}"));
    let (re, rest) = if let Some(r) = s.strip_prefix("re") {
        (true, r)
    } else {
        (false, s.strip_prefix("im").ok_or_else(bad)?)
    };
    let c: usize = if rest.is_empty() { 0 } else { rest.parse().map_err(|_| bad())? };
    Ok(if re { Coord::re(c) } else { Coord::im(c) })
}

fn read_traj(path: &Path, truncate: Option<usize>) -> Result<Trajectory, CliError> {
    let t = files::read_trajectory(path)?;
    Ok(match truncate {
        Some(n) => t.truncated(n),
        None => t,
    })
}

fn simulate(ctx: &Ctx, a: &SimulateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let n = *required(&a.n, "n")?;
    if n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let stride = a.stride.unwrap_or(1);
    if stride == 0 {
        return Err(CliError::usage("--stride must be at least 1"));
    }
    let path = required(&a.out, "out")?;
    let (generator, z0) = match required(&a.map, "map")? {
        MapKind::Siegel => {
            let p = SiegelMapParams::new(real_or(&a.rho, golden())?)?;
            let z0 = parse_complex(required(&a.z0, "z0")?)?;
            (Generator::Siegel(p), vec![z0])
        }
        MapKind::Henon => {
            let p = match (&a.theta, &a.phi, &a.rho1, &a.rho2) {
                (Some(t), Some(f), None, None) => HenonParams::new(parse_real(t)?, parse_real(f)?)?,
                (None, None, Some(r1), Some(r2)) => HenonParams::from_rotations(parse_real(r1)?, parse_real(r2)?)?,
                _ => return Err(CliError::usage("henon needs either --theta and --phi or --rho1 and --rho2")),
            };
            let z0 = match (&a.x0, &a.y0, &a.offset1, &a.offset2) {
                (Some(x), Some(y), None, None) => vec![parse_complex(x)?, parse_complex(y)?],
                (None, None, o1, o2) if o1.is_some() || o2.is_some() => {
                    let o = |v: &Option<String>| v.as_deref().map(parse_complex).transpose().map(|z| z.unwrap_or(XComplex::ZERO));
                    p.near_fixed_point(o(o1)?, o(o2)?).to_vec()
                }
                _ => return Err(CliError::usage("henon needs either --x0 and --y0 or --offset1/--offset2")),
            };
            (Generator::Henon(p), z0)
        }
    };
    let mut traj = iterate(&generator, &z0, n, stride)?;
    if let Some(note) = &a.note {
        let meta = qpwb_core::maps::TrajectoryMeta { note: note.clone(), ..traj.meta().clone() };
        traj = Trajectory::from_points(traj.dim(), traj.points().flatten().copied().collect(), meta)?;
    }
    files::write_trajectory(path, &traj, Some(ctx.hash.clone()))?;
    say!(out, "map        {}", generator.id());
    say!(out, "points     {}", traj.len());
    say!(out, "initial    {}", z0.iter().map(|&z| format_complex(z)).collect::<Vec<_>>().join(" "));
    say!(out, "written    {}", path.display());
    Ok(())
}

fn decades(n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = std::iter::successors(Some(100usize), |&k| k.checked_mul(10)).take_while(|&k| k < n).collect();
    v.push(n);
    v
}

fn rotation(ctx: &Ctx, a: &RotationArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let traj = read_traj(required(&a.input, "input")?, a.truncate)?;
    let reference = a.reference.as_deref().map(pair).transpose()?.unwrap_or((XReal::ZERO, XReal::ZERO));
    let spec = match a.projection.unwrap_or(ProjectionKind::Coords) {
        ProjectionKind::Coords => ProjectionSpec {
            planar: rotation::Planar::Coordinates {
                u: coord(a.u.as_deref().unwrap_or("re0"))?,
                v: coord(a.v.as_deref().unwrap_or("im0"))?,
            },
            reference,
        },
        ProjectionKind::RadiusDelay => ProjectionSpec::radius_delay(
            a.component.unwrap_or(0),
            a.center.as_deref().map(parse_complex).transpose()?.unwrap_or(XComplex::ZERO),
            a.lag.unwrap_or(1),
            reference,
        ),
    };
    let kind = weight(&a.weight)?;
    let max_halfwidth = real_or(&a.max_halfwidth, XReal::from_f64(rotation::DEFAULT_MAX_HALFWIDTH))?;
    let expected = a.expected.as_deref().map(parse_real).transpose()?;

    let angles = rotation::project_to_angles(&traj, &spec)?;
    let lift = rotation::lift_angle_differences_with(&angles, max_halfwidth)?;
    let n_used = lift.deltas.len();
    let checkpoints = match &a.checkpoints {
        Some(s) => parse_counts(s)?,
        None if expected.is_some() || a.profile_out.is_some() => decades(n_used),
        None => Vec::new(),
    };
    if checkpoints.iter().any(|&c| c > n_used || c < 2) {
        return Err(CliError::usage(format!("checkpoints must lie in [2, {n_used}]")));
    }
    let est = rotation::rate_from_lift(&lift, &RotationOptions { kind, max_halfwidth, checkpoints })?;

    say!(out, "rate               {}", est.rate);
    say!(out, "rate (centered)    {}", est.centered());
    say!(out, "weight             {}", est.weight_kind);
    say!(out, "differences        {}", est.n_used);
    say!(out, "branch center      {}", est.branch_center);
    say!(out, "branch half-width  {:.6}", est.branch_halfwidth.to_f64());
    if let Some(e) = expected {
        say!(out, "error              {:.3e}", circle_distance(est.rate, e).to_f64());
    }
    let profile = est.profile.clone().unwrap_or_default();
    if !profile.is_empty() {
        say!(out, "{:>10}  {:<44}{}", "N", "rate_N", if expected.is_some() { "err" } else { "" });
        for (n, r) in &profile {
            match expected {
                Some(e) => say!(out, "{n:>10}  {:<44}{:.3e}", r.to_string(), circle_distance(*r, e).to_f64()),
                None => say!(out, "{n:>10}  {r}"),
            }
        }
    }
    if let Some(p) = &a.profile_out {
        let rows = profile.iter().map(|(n, r)| {
            let mut row = vec![n.to_string(), r.to_string()];
            if let Some(e) = expected {
                row.push(circle_distance(*r, e).to_string());
            }
            row
        });
        let cols: &[&str] = if expected.is_some() { &["n", "rate", "err"] } else { &["n", "rate"] };
        files::write_table(p, &ctx.header(&a.figure, "rotation rate convergence"), cols, rows)?;
    }
    if let Some(p) = &a.lift_out {
        let rows = lift.deltas.iter().enumerate().map(|(n, d)| vec![n.to_string(), d.to_string()]);
        files::write_table(p, &ctx.header(&a.figure, "lifted angle differences"), &["n", "delta"], rows)?;
    }
    Ok(())
}

fn fourier(ctx: &Ctx, a: &FourierArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let traj = read_traj(required(&a.input, "input")?, a.truncate)?;
    let k_max = a.k_max.unwrap_or(400);
    if k_max == 0 {
        return Err(CliError::usage("--k-max must be at least 1"));
    }
    let path = required(&a.out, "out")?;
    ctx.check_work(traj.len(), k_max + 1, "spectrum")?;
    let kind = weight(&a.weight)?;
    let floor = real_or(&a.floor, XReal::from_f64(conjugacy::DEFAULT_FLOOR))?;
    let rho = match &a.rho {
        Some(r) => parse_real(r)?.frac(),
        None => {
            let reference = a.reference.as_deref().map(pair).transpose()?.unwrap_or((XReal::ZERO, XReal::ZERO));
            let est = rotation::rotation_rate(&traj, &ProjectionSpec::complex_component(0, reference), kind)?;
            say!(out, "rho estimated      {}", est.rate);
            est.rate
        }
    };
    let spec = build_spectrum_par(&traj, rho, k_max, kind, floor)?;
    files::write_spectrum(path, &spec, Some(ctx.hash.clone()))?;
    say!(out, "rho                {}", spec.rho);
    say!(out, "samples            {}", spec.n_samples);
    say!(out, "modes              {} (k = 0..{})", spec.coeffs.len(), spec.k_max());
    say!(out, "above floor        {}", spec.count_above_floor());
    if spec.k_max() < k_max {
        say!(out, "stopped early      {} consecutive modes below {}", conjugacy::EARLY_STOP_RUN, floor);
    }
    for m in 1..=a.negative.unwrap_or(0) as i64 {
        let b = conjugacy::fourier_coefficient(&traj, rho, -m, kind)?;
        say!(out, "|b_-{m}|             {:.3e}", b.abs().to_f64());
    }
    say!(out, "written            {}", path.display());
    Ok(())
}

fn series_of(spec: &Spectrum, r0: &Option<String>, out: &mut dyn Write) -> Result<ConjugacySeries, CliError> {
    let r0 = match r0 {
        Some(r) => parse_real(r)?,
        None => {
            let fit = fit_r0_detailed(spec)?;
            say!(out, "R0                 {:.6}", fit.r0.to_f64());
            say!(out, "fit residual std   {:.3}", fit.residual_std);
            say!(out, "fit range          k = {}..{} ({} modes)", fit.used[0], fit.used[fit.used.len() - 1], fit.used.len());
            fit.r0
        }
    };
    Ok(power_series(spec, r0)?)
}

fn conjugacy(ctx: &Ctx, a: &ConjugacyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = files::read_spectrum(required(&a.spectrum, "spectrum")?)?;
    let series = series_of(&spec, &a.r0, out)?;
    say!(out, "sup |a_k|, k >= 1  {:.6e}", series.a.iter().skip(1).map(|a| a.abs()).fold(XReal::ZERO, XReal::max).to_f64());
    if let Some(p) = &a.out {
        let rows = spec.coeffs.iter().zip(&series.a).enumerate().map(|(k, (b, c))| {
            vec![k.to_string(), b.re.to_string(), b.im.to_string(), b.abs().to_string(), c.re.to_string(), c.im.to_string(), c.abs().to_string()]
        });
        let cols = ["k", "b_re", "b_im", "b_abs", "a_re", "a_im", "a_abs"];
        files::write_table(p, &ctx.header(&a.figure, "Fourier and power-series coefficients"), &cols, rows)?;
    }
    if let Some(p) = &a.replay {
        let traj = files::read_trajectory(p)?;
        ctx.check_work(traj.len(), spec.coeffs.len(), "replay")?;
        let err = reconstruction_error_par(&traj, &spec)?;
        say!(out, "replay points      {}", traj.len());
        say!(out, "replay max error   {:.3e}", err.to_f64());
    }
    Ok(())
}

fn curve(ctx: &Ctx, a: &CurveArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = files::read_spectrum(required(&a.spectrum, "spectrum")?)?;
    let series = series_of(&spec, &a.r0, out)?;
    let r = real_or(&a.r, XReal::from_f64(0.999))?;
    let m = a.samples.unwrap_or(10_000);
    if m == 0 {
        return Err(CliError::usage("--samples must be at least 1"));
    }
    let path = required(&a.out, "out")?;
    let rows = (0..m)
        .map(|j| {
            let theta = XReal::from_u64(j as u64) / XReal::from_u64(m as u64);
            let z = conjugacy::evaluate_curve(&series, r, theta)?;
            Ok(vec![theta.to_string(), z.re.to_string(), z.im.to_string()])
        })
        .collect::<Result<Vec<_>, qpwb_core::Error>>()?;
    files::write_table(path, &ctx.header(&a.figure, "image of a circle under the conjugacy"), &["theta", "re", "im"], rows)?;
    say!(out, "curve points       {m} at r = {r}");
    say!(out, "written            {}", path.display());
    Ok(())
}

fn length(ctx: &Ctx, a: &LengthArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = files::read_spectrum(required(&a.spectrum, "spectrum")?)?;
    let series = series_of(&spec, &a.r0, out)?;
    let (lo, hi) = parse_range(a.r.as_deref().unwrap_or("0.5..0.999"))?;
    let steps = a.steps.unwrap_or(50);
    if steps < 2 || !(lo < hi) {
        return Err(CliError::usage("need lo < hi and at least 2 steps"));
    }
    let c = real_or(&a.c, XReal::ONE)?;
    let mut rows = Vec::with_capacity(steps);
    for j in 0..steps {
        let r = lo + (hi - lo) * XReal::from_u64(j as u64) / XReal::from_u64(steps as u64 - 1);
        let l = conjugacy::l2_length_direct(&series, r)?;
        let b = conjugacy::l2_length_bound(c, r)?;
        say!(out, "r {:.6}  length {:.6e}  bound {:.6e}", r.to_f64(), l.to_f64(), b.to_f64());
        rows.push(vec![r.to_string(), l.to_string(), b.to_string()]);
    }
    if let Some(p) = &a.out {
        files::write_table(p, &ctx.header(&a.figure, "L2 length of image circles"), &["r", "l2", "l2_bound"], rows)?;
    }
    Ok(())
}

fn convergence(ctx: &Ctx, a: &ConvergenceArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let rho = real_or(&a.rho, golden())?;
    let kinds = a
        .weight
        .as_deref()
        .unwrap_or("bump2,uniform")
        .split(',')
        .map(|s| weight(&Some(s.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let ns = parse_counts(a.n.as_deref().unwrap_or("1000,10000,100000"))?;
    let n_max = ns.iter().copied().max().unwrap_or(0);
    if ns.iter().any(|&n| n < 2) {
        return Err(CliError::usage("window lengths must be at least 2"));
    }
    let signal: Vec<XComplex> = (0..n_max as u64).map(|n| exp_i2pi(rho.mul_frac(n))).collect();
    let mut rows = Vec::new();
    for &kind in &kinds {
        for &n in &ns {
            let avg = wb_average(&signal[..n], &build_weights(kind, n)?)?.abs();
            say!(out, "{kind:<10} N {n:>10}  |WB_N| {:.3e}", avg.to_f64());
            rows.push(vec![kind.to_string(), n.to_string(), avg.to_string()]);
        }
    }
    if let Some(p) = &a.out {
        files::write_table(p, &ctx.header(&a.figure, "weighted average of a pure rotation"), &["weight", "n", "abs"], rows)?;
    }
    Ok(())
}

