//! Rotation rates from projected trajectories.
//!
//! A trajectory is mapped to planar points, each point to its angle about a
//! reference point (in turns), and consecutive angle differences are lifted
//! to real numbers inside one half-turn window before averaging.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::maps::Trajectory;
use crate::wba::{build_weights, profile_over, wb_average, WeightKind};
use crate::xprec::atan2_turns;
use crate::{XComplex, XReal};

/// Radii below this make a radius-delay angle meaningless.
pub const MIN_RADIUS: f64 = 1e-12;

/// Number of leading differences used to locate the branch center.
pub const BRANCH_SAMPLE: usize = 1000;

/// Branch half-width at which a projection is rejected. Projections that do
/// not wind around the reference spread their differences over almost the
/// whole circle (observed 0.4999+), valid ones stay well inside.
pub const DEFAULT_MAX_HALFWIDTH: f64 = 0.45;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Re,
    Im,
}

/// One real coordinate of a trajectory point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Coord {
    pub component: usize,
    pub part: Part,
}

impl Coord {
    pub fn re(component: usize) -> Self {
        Self { component, part: Part::Re }
    }

    pub fn im(component: usize) -> Self {
        Self { component, part: Part::Im }
    }

    fn of(&self, p: &[XComplex]) -> XReal {
        let z = p[self.component];
        match self.part {
            Part::Re => z.re,
            Part::Im => z.im,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Planar {
    /// `(u, v)` taken from two real coordinates; `(Re x, Im x)` is the usual choice.
    Coordinates { u: Coord, v: Coord },
    /// `(r_{n+lag}, r_n)` with `r_n = |z_n - center|` for one complex component.
    RadiusDelay { center: XComplex, component: usize, lag: usize },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjectionSpec {
    pub planar: Planar,
    /// Point the angles are measured about.
    pub reference: (XReal, XReal),
}

impl ProjectionSpec {
    /// `(Re z_c, Im z_c)` seen from `reference`.
    pub fn complex_component(component: usize, reference: (XReal, XReal)) -> Self {
        Self { planar: Planar::Coordinates { u: Coord::re(component), v: Coord::im(component) }, reference }
    }

    pub fn radius_delay(component: usize, center: XComplex, lag: usize, reference: (XReal, XReal)) -> Self {
        Self { planar: Planar::RadiusDelay { center, component, lag }, reference }
    }

    fn validate(&self, traj: &Trajectory) -> Result<()> {
        let dim = traj.dim();
        match self.planar {
            Planar::Coordinates { u, v } => {
                if u.component >= dim || v.component >= dim {
                    return Err(Error::invalid(format!("projection uses a component beyond dimension {dim}")));
                }
            }
            Planar::RadiusDelay { component, lag, .. } => {
                if component >= dim {
                    return Err(Error::invalid(format!("component {component} beyond dimension {dim}")));
                }
                if lag == 0 {
                    return Err(Error::invalid("radius-delay lag must be at least 1"));
                }
                if traj.len() < lag + 2 {
                    return Err(Error::invalid(format!(
                        "radius-delay with lag {lag} needs at least {} points",
                        lag + 2
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Planar images of the trajectory under the projection.
pub fn planar_points(traj: &Trajectory, spec: &ProjectionSpec) -> Result<Vec<(XReal, XReal)>> {
    spec.validate(traj)?;
    match spec.planar {
        Planar::Coordinates { u, v } => Ok(traj.points().map(|p| (u.of(p), v.of(p))).collect()),
        Planar::RadiusDelay { center, component, lag } => {
            let mut r = Vec::with_capacity(traj.len());
            for (n, z) in traj.component(component).enumerate() {
                let d = (z - center).abs();
                if d.to_f64() < MIN_RADIUS {
                    return Err(Error::DegenerateProjection { index: n, reason: "orbit passes through the radius center" });
                }
                r.push(d);
            }
            Ok((0..r.len() - lag).map(|n| (r[n + lag], r[n])).collect())
        }
    }
}

/// Angle of each planar point about the reference, in turns in `[0, 1)`.
pub fn project_to_angles(traj: &Trajectory, spec: &ProjectionSpec) -> Result<Vec<XReal>> {
    let (ru, rv) = spec.reference;
    planar_points(traj, spec)?
        .into_iter()
        .enumerate()
        .map(|(n, (u, v))| {
            atan2_turns(v - rv, u - ru)
                .map_err(|_| Error::DegenerateProjection { index: n, reason: "projected point equals the reference" })
        })
        .collect()
}

/// Lifted angle differences.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftedSeries {
    pub deltas: Vec<XReal>,
    /// Middle of the half-turn window every delta lies in.
    pub branch_center: XReal,
    /// `max |Δ̂_n - center|`.
    pub branch_halfwidth: XReal,
}

/// Lift with [`DEFAULT_MAX_HALFWIDTH`].
pub fn lift_angle_differences(angles: &[XReal]) -> Result<LiftedSeries> {
    lift_angle_differences_with(angles, XReal::from_f64(DEFAULT_MAX_HALFWIDTH))
}

/// Lift, rejecting the projection when the branch half-width reaches
/// `max_halfwidth` (at most one half).
pub fn lift_angle_differences_with(angles: &[XReal], max_halfwidth: XReal) -> Result<LiftedSeries> {
    if angles.len() < 2 {
        return Err(Error::invalid("need at least two angles to form a difference"));
    }
    if !(max_halfwidth > XReal::ZERO && max_halfwidth <= XReal::HALF) {
        return Err(Error::invalid("half-width threshold must lie in (0, 1/2]"));
    }
    let raw: Vec<XReal> = angles.windows(2).map(|w| (w[1] - w[0]).frac_centered()).collect();
    let mut head: Vec<XReal> = raw[..raw.len().min(BRANCH_SAMPLE)].to_vec();
    head.sort_unstable_by(XReal::total_cmp);
    let center = head[(head.len() - 1) / 2];

    let mut halfwidth = XReal::ZERO;
    let deltas: Vec<XReal> = raw
        .iter()
        .map(|&d| {
            let off = (d - center).frac_centered();
            halfwidth = halfwidth.max(off.abs());
            center + off
        })
        .collect();
    if halfwidth >= max_halfwidth {
        return Err(Error::NoLift { halfwidth: halfwidth.to_f64() });
    }
    Ok(LiftedSeries { deltas, branch_center: center, branch_halfwidth: halfwidth })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RotationEstimate {
    /// Representative in `[0, 1)`.
    pub rate: XReal,
    pub weight_kind: WeightKind,
    /// Number of lifted differences averaged.
    pub n_used: usize,
    pub branch_center: XReal,
    pub branch_halfwidth: XReal,
    /// `(N, rate_N)` when requested; rates reduced to `[0, 1)`.
    pub profile: Option<Vec<(usize, XReal)>>,
}

impl RotationEstimate {
    /// Representative in `(-1/2, 1/2]`.
    pub fn centered(&self) -> XReal {
        self.rate.frac_centered()
    }
}

/// Options for [`rotation_rate_with`].
#[derive(Clone, Debug, PartialEq)]
pub struct RotationOptions {
    pub kind: WeightKind,
    pub max_halfwidth: XReal,
    /// Strictly increasing sample counts for a convergence profile.
    pub checkpoints: Vec<usize>,
}

impl Default for RotationOptions {
    fn default() -> Self {
        Self { kind: WeightKind::default(), max_halfwidth: XReal::from_f64(DEFAULT_MAX_HALFWIDTH), checkpoints: Vec::new() }
    }
}

pub fn rotation_rate(traj: &Trajectory, spec: &ProjectionSpec, kind: WeightKind) -> Result<RotationEstimate> {
    rotation_rate_with(traj, spec, &RotationOptions { kind, ..RotationOptions::default() })
}

pub fn rotation_rate_with(traj: &Trajectory, spec: &ProjectionSpec, opts: &RotationOptions) -> Result<RotationEstimate> {
    let angles = project_to_angles(traj, spec)?;
    let lift = lift_angle_differences_with(&angles, opts.max_halfwidth)?;
    rate_from_lift(&lift, opts)
}

/// Average an already lifted series.
pub fn rate_from_lift(lift: &LiftedSeries, opts: &RotationOptions) -> Result<RotationEstimate> {
    let table = build_weights(opts.kind, lift.deltas.len())?;
    let avg = wb_average(&lift.deltas, &table)?;
    let profile = if opts.checkpoints.is_empty() {
        None
    } else {
        let p = profile_over(&lift.deltas, opts.kind, &opts.checkpoints)?;
        Some(p.into_iter().map(|(n, v)| (n, v.frac())).collect())
    };
    Ok(RotationEstimate {
        rate: avg.frac(),
        weight_kind: opts.kind,
        n_used: lift.deltas.len(),
        branch_center: lift.branch_center,
        branch_halfwidth: lift.branch_halfwidth,
        profile,
    })
}

/// Distance between two rates on the circle, in `[0, 1/2]`.
pub fn circle_distance(a: XReal, b: XReal) -> XReal {
    (a - b).frac_centered().abs()
}
