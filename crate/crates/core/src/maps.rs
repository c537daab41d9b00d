//! Example maps and trajectory generation.
//!
//! * Siegel map `z -> z^2 + e^{i2πρ} z` on ℂ.
//! * Complex Hénon map `(x, y) -> (y, β(y^2 + α) - β^2 x)` on ℂ², with
//!   `α = 2 cosθ cosφ - cos^2 φ` and `β = e^{iθ}`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::xprec::exp_i2pi;
use crate::{XComplex, XReal};

/// Orbits leaving this radius are reported as escaped.
pub const ESCAPE_RADIUS: f64 = 1e6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SiegelMapParams {
    rho: XReal,
    lambda: XComplex,
}

impl SiegelMapParams {
    /// `rho` in turns, strictly inside `(0, 1)`.
    pub fn new(rho: XReal) -> Result<Self> {
        if !(rho > XReal::ZERO && rho < XReal::ONE) {
            return Err(Error::invalid(format!("rotation number {rho} outside (0, 1)")));
        }
        Ok(Self { rho, lambda: exp_i2pi(rho) })
    }

    pub fn rho(&self) -> XReal {
        self.rho
    }

    /// Multiplier `e^{i2πρ}` of the fixed point at the origin.
    pub fn lambda(&self) -> XComplex {
        self.lambda
    }
}

pub fn siegel_step(params: &SiegelMapParams, z: XComplex) -> XComplex {
    z.sqr() + params.lambda * z
}

pub fn siegel_derivative(params: &SiegelMapParams, z: XComplex) -> XComplex {
    z * XReal::TWO + params.lambda
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HenonParams {
    theta: XReal,
    phi: XReal,
    cos_phi: XReal,
    alpha: XReal,
    beta: XComplex,
    beta_sq: XComplex,
}

impl HenonParams {
    /// Angles in radians.
    pub fn new(theta: XReal, phi: XReal) -> Result<Self> {
        if !theta.is_finite() || !phi.is_finite() {
            return Err(Error::invalid("Hénon angles must be finite"));
        }
        let cos_t = theta.cos();
        let cos_phi = phi.cos();
        let alpha = (cos_t * cos_phi).mul_f64(2.0) - cos_phi.sqr();
        let (s, c) = theta.sin_cos();
        let beta = XComplex::new(c, s);
        Ok(Self { theta, phi, cos_phi, alpha, beta, beta_sq: beta.sqr() })
    }

    /// Parameters whose fixed point has eigenvalue angles `ρ1` and `ρ2`
    /// turns: `θ = π(ρ1 + ρ2)`, `φ = π(ρ1 - ρ2)`.
    pub fn from_rotations(rho1: XReal, rho2: XReal) -> Result<Self> {
        Self::new(XReal::PI * (rho1 + rho2), XReal::PI * (rho1 - rho2))
    }

    pub fn theta(&self) -> XReal {
        self.theta
    }

    pub fn phi(&self) -> XReal {
        self.phi
    }

    pub fn alpha(&self) -> XReal {
        self.alpha
    }

    pub fn beta(&self) -> XComplex {
        self.beta
    }

    /// `(θ + φ) / 2π` and `(θ - φ) / 2π`, not reduced.
    pub fn rotation_turns(&self) -> (XReal, XReal) {
        (
            (self.theta + self.phi) * XReal::INV_TAU,
            (self.theta - self.phi) * XReal::INV_TAU,
        )
    }

    /// Eigenvectors `(e^{∓iφ}, e^{iθ})` for `e^{i(θ±φ)}`.
    pub fn eigenvectors(&self) -> ([XComplex; 2], [XComplex; 2]) {
        let (s, c) = self.phi.sin_cos();
        let mu = XComplex::new(c, s);
        ([mu.conj(), self.beta], [mu, self.beta])
    }

    /// Fixed point displaced by `a` along the `e^{i(θ+φ)}` eigenvector and
    /// by `b` along the `e^{i(θ-φ)}` one.
    pub fn near_fixed_point(&self, a: XComplex, b: XComplex) -> [XComplex; 2] {
        let (fx, fy) = henon_fixed_point(self);
        let (v1, v2) = self.eigenvectors();
        [fx + a * v1[0] + b * v2[0], fy + a * v1[1] + b * v2[1]]
    }
}

pub fn henon_step(params: &HenonParams, x: XComplex, y: XComplex) -> (XComplex, XComplex) {
    let y_new = params.beta * (y.sqr() + params.alpha) - params.beta_sq * x;
    (y, y_new)
}

/// `[[0, 1], [-β^2, 2βy]]`.
pub fn henon_jacobian(params: &HenonParams, _x: XComplex, y: XComplex) -> [[XComplex; 2]; 2] {
    [
        [XComplex::ZERO, XComplex::ONE],
        [-params.beta_sq, params.beta * y * XReal::TWO],
    ]
}

/// The fixed point on the branch `y* = cos φ`.
pub fn henon_fixed_point(params: &HenonParams) -> (XComplex, XComplex) {
    let c = XComplex::from_real(params.cos_phi);
    (c, c)
}

/// `(e^{i(θ+φ)}, e^{i(θ-φ)})`.
pub fn henon_eigenvalues(params: &HenonParams) -> (XComplex, XComplex) {
    let (s1, c1) = (params.theta + params.phi).sin_cos();
    let (s2, c2) = (params.theta - params.phi).sin_cos();
    (XComplex::new(c1, s1), XComplex::new(c2, s2))
}

#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    Siegel(SiegelMapParams),
    Henon(HenonParams),
}

impl Generator {
    pub fn dim(&self) -> usize {
        match self {
            Generator::Siegel(_) => 1,
            Generator::Henon(_) => 2,
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            Generator::Siegel(_) => "siegel",
            Generator::Henon(_) => "henon",
        }
    }

    #[inline]
    fn step(&self, p: [XComplex; 2]) -> [XComplex; 2] {
        match self {
            Generator::Siegel(s) => [siegel_step(s, p[0]), XComplex::ZERO],
            Generator::Henon(h) => {
                let (x, y) = henon_step(h, p[0], p[1]);
                [x, y]
            }
        }
    }
}

/// Where a trajectory came from.
#[derive(Clone, Debug, PartialEq)]
pub struct TrajectoryMeta {
    /// `None` for data supplied from outside.
    pub generator: Option<Generator>,
    pub initial: Vec<XComplex>,
    pub stride: usize,
    /// Transient iterates dropped before the first stored point (always 0
    /// for generated orbits).
    pub discarded: usize,
    pub note: String,
}

/// Points `z_0, z_s, z_2s, ...` stored flat, `dim` components each.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    dim: usize,
    points: Vec<XComplex>,
    meta: TrajectoryMeta,
}

impl Trajectory {
    pub fn from_points(dim: usize, points: Vec<XComplex>, meta: TrajectoryMeta) -> Result<Self> {
        if dim == 0 || !points.len().is_multiple_of(dim) {
            return Err(Error::invalid(format!("{} values do not split into points of dimension {dim}", points.len())));
        }
        if let Some(i) = points.iter().position(|p| !p.is_finite()) {
            return Err(Error::invalid(format!("non-finite point at index {}", i / dim)));
        }
        Ok(Self { dim, points, meta })
    }

    /// One-dimensional trajectory with no generator.
    pub fn from_samples(points: Vec<XComplex>) -> Result<Self> {
        let meta = TrajectoryMeta {
            generator: None,
            initial: points.first().copied().into_iter().collect(),
            stride: 1,
            discarded: 0,
            note: String::new(),
        };
        Self::from_points(1, points, meta)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn meta(&self) -> &TrajectoryMeta {
        &self.meta
    }

    pub fn point(&self, n: usize) -> &[XComplex] {
        &self.points[n * self.dim..(n + 1) * self.dim]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[XComplex]> + '_ {
        self.points.chunks_exact(self.dim)
    }

    /// Component `c` of every point.
    pub fn component(&self, c: usize) -> impl ExactSizeIterator<Item = XComplex> + '_ {
        assert!(c < self.dim, "component {c} of a {}-dimensional trajectory", self.dim);
        self.points.iter().skip(c).step_by(self.dim).copied()
    }

    /// Drop the first `k` points.
    pub fn skip(&self, k: usize) -> Self {
        let k = k.min(self.len());
        let mut meta = self.meta.clone();
        meta.discarded += k * meta.stride;
        Self { dim: self.dim, points: self.points[k * self.dim..].to_vec(), meta }
    }

    /// First `n` points.
    pub fn truncated(&self, n: usize) -> Self {
        let n = n.min(self.len());
        Self { dim: self.dim, points: self.points[..n * self.dim].to_vec(), meta: self.meta.clone() }
    }
}

/// Lazy orbit: yields `(stored index, point)` with unused components zero.
#[derive(Clone, Debug)]
pub struct Orbit {
    generator: Generator,
    state: [XComplex; 2],
    stride: usize,
    iterate: usize,
    stored: usize,
}

impl Orbit {
    pub fn new(generator: Generator, z0: &[XComplex], stride: usize) -> Result<Self> {
        if z0.len() != generator.dim() {
            return Err(Error::invalid(format!(
                "{} map needs a {}-component initial point, got {}",
                generator.id(),
                generator.dim(),
                z0.len()
            )));
        }
        if stride == 0 {
            return Err(Error::invalid("stride must be at least 1"));
        }
        let mut state = [XComplex::ZERO; 2];
        state[..z0.len()].copy_from_slice(z0);
        check(&state, 0)?;
        Ok(Self { generator, state, stride, iterate: 0, stored: 0 })
    }
}

fn check(p: &[XComplex; 2], index: usize) -> Result<()> {
    let m = p.iter().map(|c| c.norm_sqr().hi()).fold(0.0, |a: f64, b| if b.is_nan() { b } else { a.max(b) });
    if !(m <= ESCAPE_RADIUS * ESCAPE_RADIUS) {
        return Err(Error::Escaped { index, modulus: libm::sqrt(m) });
    }
    Ok(())
}

impl Iterator for Orbit {
    type Item = Result<(usize, [XComplex; 2])>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.stored > 0 {
            for _ in 0..self.stride {
                self.state = self.generator.step(self.state);
                self.iterate += 1;
                if let Err(e) = check(&self.state, self.iterate) {
                    // stay exhausted after an escape
                    self.stored = usize::MAX;
                    return Some(Err(e));
                }
            }
        }
        if self.stored == usize::MAX {
            return None;
        }
        let out = (self.stored, self.state);
        self.stored += 1;
        Some(Ok(out))
    }
}

/// `n` stored points sampled every `stride` iterates, starting with `z0`.
pub fn iterate(generator: &Generator, z0: &[XComplex], n: usize, stride: usize) -> Result<Trajectory> {
    if n == 0 {
        return Err(Error::invalid("trajectory length must be at least 1"));
    }
    let dim = generator.dim();
    let mut points = Vec::with_capacity(n * dim);
    for item in Orbit::new(generator.clone(), z0, stride)?.take(n) {
        let (_, p) = item?;
        points.extend_from_slice(&p[..dim]);
    }
    let meta = TrajectoryMeta {
        generator: Some(generator.clone()),
        initial: z0.to_vec(),
        stride,
        discarded: 0,
        note: String::new(),
    };
    Trajectory::from_points(dim, points, meta)
}
