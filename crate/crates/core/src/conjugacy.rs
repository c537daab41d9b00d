//! Fourier spectra of invariant curves and the power series they define.
//!
//! For an orbit on an invariant curve with rotation number `ρ`, the weighted
//! average of `z_n e^{-i2πk nρ}` converges to the curve's Fourier coefficient
//! `b_k`. Dividing by `R0^k`, with `R0` read off the exponential decay of
//! `|b_k|`, gives the Taylor coefficients of the linearizing map.

use alloc::format;
use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::maps::Trajectory;
use crate::sum::PairwiseSum;
use crate::wba::{build_weights, WeightKind, WeightTable};
use crate::xprec::exp_i2pi;
use crate::{XComplex, XReal};

pub const DEFAULT_FLOOR: f64 = 1e-30;

/// Consecutive coefficients below the floor that end a spectrum early.
pub const EARLY_STOP_RUN: usize = 50;

/// Modes advanced by repeated multiplication between exact restarts.
const BLOCK: u64 = 32;

/// Weighted samples and per-sample phase factors, shared by all modes.
#[derive(Clone, Debug)]
pub struct FourierEngine {
    rho: XReal,
    /// Index of the first sample with nonzero weight.
    first: u64,
    /// `ŵ_n z_n` over the weight support.
    wz: Vec<XComplex>,
    /// `e^{-i2π frac(nρ)}` over the same range.
    omega: Vec<XComplex>,
    n_samples: usize,
    kind: WeightKind,
}

impl FourierEngine {
    pub fn new(samples: &[XComplex], rho: XReal, table: &WeightTable) -> Result<Self> {
        if samples.len() != table.n_total() {
            return Err(Error::invalid(format!(
                "{} samples for a weight table of length {}",
                samples.len(),
                table.n_total()
            )));
        }
        if !(rho >= XReal::ZERO && rho < XReal::ONE) {
            return Err(Error::invalid(format!("rotation number {rho} not reduced to [0, 1)")));
        }
        let support = table.support();
        let w = &table.weights()[support.clone()];
        let wz = samples[support.clone()].iter().zip(w).map(|(&z, &w)| z * w).collect();
        let omega = support.clone().map(|n| exp_i2pi(rho.mul_frac(n as u64)).conj()).collect();
        Ok(Self { rho, first: support.start as u64, wz, omega, n_samples: samples.len(), kind: table.kind() })
    }

    pub fn rho(&self) -> XReal {
        self.rho
    }

    pub fn n_samples(&self) -> usize {
        self.n_samples
    }

    pub fn weight_kind(&self) -> WeightKind {
        self.kind
    }

    /// `b_k` for every `k` in the range.
    pub fn modes(&self, ks: Range<u64>) -> Vec<XComplex> {
        let mut out = Vec::with_capacity((ks.end.saturating_sub(ks.start)) as usize);
        let mut k0 = ks.start;
        while k0 < ks.end {
            let k1 = (k0 + BLOCK).min(ks.end);
            out.extend(self.block(k0, k1));
            k0 = k1;
        }
        out
    }

    fn block(&self, k0: u64, k1: u64) -> Vec<XComplex> {
        let m = (k1 - k0) as usize;
        let mut acc: Vec<PairwiseSum<XComplex>> = (0..m).map(|_| PairwiseSum::new()).collect();
        for (i, (&wz, &om)) in self.wz.iter().zip(&self.omega).enumerate() {
            let n = self.first + i as u64;
            // exact restart: phase frac(k0 n ρ) from the integer product
            let mut t = if k0 == 0 { wz } else { wz * exp_i2pi(self.rho.mul_frac(k0 * n)).conj() };
            for (j, a) in acc.iter_mut().enumerate() {
                a.push(t);
                if j + 1 < m {
                    t *= om;
                }
            }
        }
        acc.into_iter().map(|a| a.total().unwrap_or(XComplex::ZERO)).collect()
    }
}

/// Samples of one complex component of a trajectory.
pub fn component_samples(traj: &Trajectory, component: usize) -> Result<Vec<XComplex>> {
    if component >= traj.dim() {
        return Err(Error::invalid(format!("component {component} beyond dimension {}", traj.dim())));
    }
    Ok(traj.component(component).collect())
}

/// Single coefficient `b_k` of component 0; negative `k` is allowed as a
/// diagnostic.
pub fn fourier_coefficient(traj: &Trajectory, rho: XReal, k: i64, kind: WeightKind) -> Result<XComplex> {
    let samples = component_samples(traj, 0)?;
    let table = build_weights(kind, samples.len())?;
    if k >= 0 {
        let e = FourierEngine::new(&samples, rho, &table)?;
        Ok(e.modes(k as u64..k as u64 + 1)[0])
    } else {
        // b_{-k}(z) = conj(b_k(conj z))
        let conj: Vec<XComplex> = samples.iter().map(|z| z.conj()).collect();
        let e = FourierEngine::new(&conj, rho, &table)?;
        let m = k.unsigned_abs();
        Ok(e.modes(m..m + 1)[0].conj())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub rho: XReal,
    /// `b_0, b_1, ...`
    pub coeffs: Vec<XComplex>,
    pub n_samples: usize,
    pub weight_kind: WeightKind,
    pub noise_floor: XReal,
}

impl Spectrum {
    pub fn k_max(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn magnitudes(&self) -> Vec<f64> {
        self.coeffs.iter().map(|b| b.abs().to_f64()).collect()
    }

    pub fn count_above_floor(&self) -> usize {
        let f = self.noise_floor.to_f64();
        self.coeffs.iter().filter(|b| b.abs().to_f64() >= f).count()
    }

    /// `Σ b_k s^k e^{i2πkθ}`; `s = 1` is the observed curve.
    pub fn evaluate(&self, s: XReal, theta: XReal) -> Result<XComplex> {
        if !(s >= XReal::ZERO && s <= XReal::ONE) {
            return Err(Error::invalid(format!("relative radius {s} outside [0, 1]")));
        }
        Ok(horner(&self.coeffs, exp_i2pi(theta) * s))
    }
}

/// Batches of modes are computed by `modes`, which may run them in any
/// order or concurrently. The spectrum ends at the mode completing the quiet
/// run, whatever the batch size.
pub fn build_spectrum_with<F>(
    engine: &FourierEngine,
    k_max: usize,
    floor: XReal,
    batch: usize,
    mut modes: F,
) -> Result<Spectrum>
where
    F: FnMut(&FourierEngine, Range<u64>) -> Vec<XComplex>,
{
    if k_max < 1 {
        return Err(Error::invalid("k_max must be at least 1"));
    }
    let batch = batch.max(1) as u64;
    let end = k_max as u64 + 1;
    let f = floor.to_f64();
    let mut coeffs: Vec<XComplex> = Vec::with_capacity(end as usize);
    let mut run = 0usize;
    let mut k = 0u64;
    while k < end {
        let k1 = (k + batch).min(end);
        for b in modes(engine, k..k1) {
            run = if b.abs().to_f64() < f { run + 1 } else { 0 };
            coeffs.push(b);
            if run >= EARLY_STOP_RUN {
                break;
            }
        }
        k = k1;
        if run >= EARLY_STOP_RUN {
            break;
        }
    }
    Ok(Spectrum {
        rho: engine.rho(),
        coeffs,
        n_samples: engine.n_samples(),
        weight_kind: engine.weight_kind(),
        noise_floor: floor,
    })
}

/// Coefficients `b_0..=b_{k_max}` of component 0, stopping once
/// [`EARLY_STOP_RUN`] consecutive magnitudes fall below `floor`.
pub fn build_spectrum(traj: &Trajectory, rho: XReal, k_max: usize, kind: WeightKind, floor: XReal) -> Result<Spectrum> {
    if k_max < 1 {
        return Err(Error::invalid("k_max must be at least 1"));
    }
    let samples = component_samples(traj, 0)?;
    let table = build_weights(kind, samples.len())?;
    let engine = FourierEngine::new(&samples, rho, &table)?;
    build_spectrum_with(&engine, k_max, floor, BLOCK as usize, |e, ks| e.modes(ks))
}

/// Least-squares line through `(k, ln|b_k|)`.
#[derive(Clone, Debug, PartialEq)]
pub struct R0Fit {
    pub r0: XReal,
    pub slope: f64,
    pub intercept: f64,
    /// Standard deviation of the residuals of `ln|b_k|`.
    pub residual_std: f64,
    /// Indices used.
    pub used: Vec<usize>,
}

/// Coefficients with `k < SKIP_HEAD` are left out of the fit.
pub const SKIP_HEAD: usize = 5;

pub fn fit_r0(spec: &Spectrum) -> Result<XReal> {
    fit_r0_detailed(spec).map(|f| f.r0)
}

/// Fit over `k >= 5` with `|b_k|` more than 100 times the noise floor.
pub fn fit_r0_detailed(spec: &Spectrum) -> Result<R0Fit> {
    let mags = spec.magnitudes();
    let lo = spec.noise_floor.to_f64() * 1e2;
    let used: Vec<usize> = (SKIP_HEAD..mags.len()).filter(|&k| mags[k] > lo).collect();
    if used.len() < 10 {
        return Err(Error::Fit(format!("{} usable coefficients, need at least 10", used.len())));
    }
    let n = used.len() as f64;
    let (mut sx, mut sy) = (0.0, 0.0);
    for &k in &used {
        sx += k as f64;
        sy += libm::log(mags[k]);
    }
    let (mx, my) = (sx / n, sy / n);
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for &k in &used {
        let dx = k as f64 - mx;
        sxx += dx * dx;
        sxy += dx * (libm::log(mags[k]) - my);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss: f64 = used
        .iter()
        .map(|&k| {
            let r = libm::log(mags[k]) - (intercept + slope * k as f64);
            r * r
        })
        .sum();
    let residual_std = libm::sqrt(ss / n);
    let r0 = libm::exp(slope);
    if !(r0 > 0.0 && r0 < 1.0) {
        return Err(Error::Fit(format!("fitted decay rate {r0} is not inside (0, 1)")));
    }
    Ok(R0Fit { r0: XReal::from_f64(r0), slope, intercept, residual_std, used })
}

/// Taylor coefficients `a_k = b_k / R0^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugacySeries {
    pub r0: XReal,
    pub a: Vec<XComplex>,
}

/// Coefficients past the last `|b_k|` at or above the noise floor are
/// dropped: dividing rounding noise by `R0^k` would swamp the series.
pub fn power_series(spec: &Spectrum, r0: XReal) -> Result<ConjugacySeries> {
    if !(r0 > XReal::ZERO && r0 < XReal::ONE) {
        return Err(Error::invalid(format!("R0 = {r0} outside (0, 1)")));
    }
    let keep = spec.coeffs.iter().rposition(|b| b.abs() >= spec.noise_floor).map_or(0, |k| k + 1);
    let inv = r0.recip();
    let mut scale = XReal::ONE;
    let a = spec.coeffs[..keep]
        .iter()
        .map(|&b| {
            let v = b * scale;
            scale *= inv;
            v
        })
        .collect();
    Ok(ConjugacySeries { r0, a })
}

impl ConjugacySeries {
    pub fn sup_abs(&self) -> XReal {
        self.a.iter().map(|a| a.abs()).fold(XReal::ZERO, XReal::max)
    }
}

fn horner(c: &[XComplex], w: XComplex) -> XComplex {
    c.iter().rev().fold(XComplex::ZERO, |acc, &a| acc * w + a)
}

fn check_radius(r: XReal) -> Result<()> {
    if !(r >= XReal::ZERO && r < XReal::ONE) {
        return Err(Error::invalid(format!("radius {r} outside [0, 1)")));
    }
    Ok(())
}

/// `h(r e^{i2πθ}) = Σ a_k r^k e^{i2πkθ}`, truncated to the stored terms.
pub fn evaluate_curve(series: &ConjugacySeries, r: XReal, theta: XReal) -> Result<XComplex> {
    check_radius(r)?;
    Ok(horner(&series.a, exp_i2pi(theta) * r))
}

/// `ẑ_n = Σ b_k e^{i2πk nρ}` for `n = 0..n`.
pub fn reconstruct_trajectory(spec: &Spectrum, n: usize) -> Vec<XComplex> {
    (0..n as u64).map(|i| horner(&spec.coeffs, exp_i2pi(spec.rho.mul_frac(i)))).collect()
}

/// `max_n |z_n - ẑ_n|` over component 0 of the trajectory.
pub fn reconstruction_error(traj: &Trajectory, spec: &Spectrum) -> Result<XReal> {
    let z = component_samples(traj, 0)?;
    Ok(z.iter()
        .enumerate()
        .map(|(i, &zi)| (zi - horner(&spec.coeffs, exp_i2pi(spec.rho.mul_frac(i as u64)))).abs())
        .fold(XReal::ZERO, XReal::max))
}

/// `2π (Σ |k a_k r^k|^2)^{1/2}`.
pub fn l2_length_direct(series: &ConjugacySeries, r: XReal) -> Result<XReal> {
    check_radius(r)?;
    let mut acc = PairwiseSum::new();
    let mut rk = XReal::ONE;
    for (k, a) in series.a.iter().enumerate() {
        if k > 0 {
            let t = *a * (rk * XReal::from_u64(k as u64));
            acc.push(t.norm_sqr());
        }
        rk *= r;
    }
    Ok(XReal::TAU * acc.total().unwrap_or(XReal::ZERO).sqrt())
}

/// `2πc [r^2 (1 + r^2) / (1 - r^2)^3]^{1/2}`, an upper bound on the length
/// when every `|a_k| <= c`.
pub fn l2_length_bound(c: XReal, r: XReal) -> Result<XReal> {
    if !(c > XReal::ZERO) {
        return Err(Error::invalid(format!("bound constant {c} must be positive")));
    }
    check_radius(r)?;
    let psi = r.sqr();
    let d = XReal::ONE - psi;
    Ok(XReal::TAU * c * (psi * (XReal::ONE + psi) / (d * d * d)).sqrt())
}

/// `Σ_{k=1}^{K} k^2 ψ^k` in closed form.
pub fn sum_k2_psi(psi: XReal, k_max: u64) -> XReal {
    let k = XReal::from_u64(k_max);
    let q = psi.powi(k_max as i32);
    let d = XReal::ONE - psi;
    // numerator in powers of 1 - ψ; the expanded polynomial in ψ cancels
    // badly near ψ = 1
    let num = (XReal::ONE - q).mul_f64(2.0) - d * (XReal::ONE + q * (k.mul_f64(2.0) - XReal::ONE)) - q * (k * d).sqr();
    psi * num / (d * d * d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xprec::golden;

    fn rotation(n: usize, rho: XReal, modes: &[(i64, XComplex)]) -> Trajectory {
        Trajectory::from_samples(
            (0..n as u64)
                .map(|i| modes.iter().map(|&(k, c)| c * exp_i2pi(rho.mul_frac(i).mul_f64(k as f64).frac())).sum())
                .collect(),
        )
        .unwrap()
    }

    fn geometric(ratio: f64, k: usize) -> Spectrum {
        let mut b = XReal::ONE;
        let coeffs = (0..=k)
            .map(|_| {
                let c = XComplex::from_real(b);
                b *= ratio;
                c
            })
            .collect();
        Spectrum { rho: golden(), coeffs, n_samples: 0, weight_kind: WeightKind::Bump(2), noise_floor: XReal::from_f64(1e-30) }
    }

    #[test]
    fn single_mode_signal() {
        let rho = golden();
        let t = rotation(20_000, rho, &[(1, XComplex::from_f64(3.0, 0.0))]);
        let b1 = fourier_coefficient(&t, rho, 1, WeightKind::Bump(2)).unwrap();
        assert!((b1 - XComplex::from_f64(3.0, 0.0)).abs().to_f64() <= 1e-25);
        let b2 = fourier_coefficient(&t, rho, 2, WeightKind::Bump(2)).unwrap();
        assert!(b2.abs().to_f64() <= 1e-25);
        let bm = fourier_coefficient(&t, rho, -1, WeightKind::Bump(2)).unwrap();
        assert!(bm.abs().to_f64() <= 1e-25);
        let s = build_spectrum(&t, rho, 80, WeightKind::Bump(2), XReal::from_f64(1e-30)).unwrap();
        assert_eq!(s.count_above_floor(), 1);
        // b_2..=b_51 form the quiet run
        assert_eq!(s.coeffs.len(), 52);
    }

    #[test]
    fn blocks_agree_with_single_modes() {
        let rho = golden();
        let modes = [(0, XComplex::from_f64(0.1, 0.2)), (3, XComplex::from_f64(0.5, 0.0)), (40, XComplex::from_f64(0.0, 1e-3))];
        let t = rotation(5000, rho, &modes);
        let s = build_spectrum(&t, rho, 45, WeightKind::Bump(2), XReal::from_f64(1e-30)).unwrap();
        for (k, c) in modes {
            assert!((s.coeffs[k as usize] - c).abs().to_f64() <= 1e-25, "{k}");
            let single = fourier_coefficient(&t, rho, k, WeightKind::Bump(2)).unwrap();
            assert!((s.coeffs[k as usize] - single).abs().to_f64() <= 1e-30);
        }
    }

    #[test]
    fn reconstruction_round_trip() {
        let rho = golden();
        let modes = [(0, XComplex::from_f64(0.1, 0.2)), (1, XComplex::from_f64(0.5, 0.0)), (2, XComplex::from_f64(0.0, -0.25))];
        let t = rotation(5000, rho, &modes);
        let s = build_spectrum(&t, rho, 10, WeightKind::Bump(2), XReal::from_f64(1e-30)).unwrap();
        let z = reconstruct_trajectory(&s, 5000);
        for (i, p) in t.points().enumerate() {
            assert!((z[i] - p[0]).abs().to_f64() <= 1e-25);
        }
        assert!(reconstruction_error(&t, &s).unwrap().to_f64() <= 1e-25);
        let one = Spectrum { coeffs: alloc::vec![XComplex::ZERO, XComplex::ONE], ..s };
        let z = reconstruct_trajectory(&one, 50);
        for (i, zi) in z.iter().enumerate() {
            assert!((*zi - exp_i2pi(rho.mul_frac(i as u64))).abs().to_f64() <= 1e-31);
        }
    }

    #[test]
    fn geometric_fit_and_series() {
        let s = geometric(0.5, 60);
        let f = fit_r0_detailed(&s).unwrap();
        assert!((f.r0.to_f64() - 0.5).abs() <= 1e-6);
        assert!(f.residual_std < 1e-10);
        let series = power_series(&s, XReal::HALF).unwrap();
        assert!(series.a.iter().all(|a| (*a - XComplex::ONE).abs().to_f64() <= 1e-28));
        assert!(power_series(&s, XReal::ONE).is_err());
        let mut noisy = s.clone();
        noisy.coeffs.extend([XComplex::from_f64(1e-34, 0.0); 5]);
        assert_eq!(power_series(&noisy, XReal::HALF).unwrap().a.len(), 61);
        assert!(fit_r0(&geometric(0.5, 8)).is_err());
    }

    #[test]
    fn curve_evaluation() {
        let c = XComplex::from_f64(0.3, -0.1);
        let series = ConjugacySeries { r0: XReal::HALF, a: alloc::vec![c] };
        assert_eq!(evaluate_curve(&series, XReal::from_f64(0.9), XReal::from_f64(0.3)).unwrap(), c);
        assert!(evaluate_curve(&series, XReal::ONE, XReal::ZERO).is_err());
        let series = ConjugacySeries { r0: XReal::HALF, a: alloc::vec![c, XComplex::from_f64(2.0, 0.0), XComplex::ONE] };
        let r = XReal::from_f64(1e-6);
        let v = evaluate_curve(&series, r, XReal::from_f64(0.7)).unwrap();
        assert!((v - c).abs().to_f64() <= 2.0 * 1e-6 + 1e-11);
    }

    #[test]
    fn length_identities() {
        let unit = ConjugacySeries { r0: XReal::HALF, a: alloc::vec![XComplex::ZERO, XComplex::ONE] };
        for r in [0.1, 0.5, 0.9] {
            let r = XReal::from_f64(r);
            let l = l2_length_direct(&unit, r).unwrap();
            assert!((l - XReal::TAU * r).abs().to_f64() <= 1e-31);
        }
        let b = l2_length_bound(XReal::ONE, XReal::HALF).unwrap();
        let want = XReal::TAU * (XReal::from_f64(0.3125) / XReal::from_f64(0.421875)).sqrt();
        assert!((b - want).abs().to_f64() <= 1e-30);
        assert!(l2_length_bound(XReal::ZERO, XReal::HALF).is_err());
        assert!(l2_length_bound(XReal::ONE, XReal::ONE).is_err());
    }
}
