//! Spectra with modes spread over the rayon pool.

use std::ops::Range;

use qpwb_core::conjugacy::{build_spectrum_with, component_samples, FourierEngine};
use qpwb_core::wba::build_weights;
use qpwb_core::{Result, Spectrum, Trajectory, WeightKind, XComplex, XReal};
use rayon::prelude::*;

/// Modes per task; matches the restart interval of the engine.
const CHUNK: u64 = 32;

fn modes_par(engine: &FourierEngine, ks: Range<u64>) -> Vec<XComplex> {
    let starts: Vec<u64> = ks.clone().step_by(CHUNK as usize).collect();
    starts
        .into_par_iter()
        .map(|k0| engine.modes(k0..(k0 + CHUNK).min(ks.end)))
        .collect::<Vec<_>>()
        .concat()
}

/// Same result as the sequential `build_spectrum`: every mode is an
/// independent sum, so the split over threads does not change any value.
pub fn build_spectrum_par(
    traj: &Trajectory,
    rho: XReal,
    k_max: usize,
    kind: WeightKind,
    floor: XReal,
) -> Result<Spectrum> {
    let samples = component_samples(traj, 0)?;
    let table = build_weights(kind, samples.len())?;
    let engine = FourierEngine::new(&samples, rho, &table)?;
    // enough work per batch to keep every thread busy, small enough that the
    // early stop still saves time
    let batch = CHUNK as usize * rayon::current_num_threads().max(1) * 2;
    build_spectrum_with(&engine, k_max, floor, batch, modes_par)
}

/// `max_n |z_n - ẑ_n|` with the points split over the pool.
pub fn reconstruction_error_par(traj: &Trajectory, spec: &Spectrum) -> Result<XReal> {
    let z = component_samples(traj, 0)?;
    z.par_iter()
        .enumerate()
        .map(|(n, &zn)| Ok((zn - spec.evaluate(XReal::ONE, spec.rho.mul_frac(n as u64))?).abs()))
        .try_reduce(|| XReal::ZERO, |a, b| Ok(a.max(b)))
}
