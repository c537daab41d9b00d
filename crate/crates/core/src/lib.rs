//! Weighted Birkhoff averaging for quasiperiodic orbits in double-word
//! precision: rotation rates from projected trajectories, Fourier spectra of
//! invariant curves, and the linearizing power series they determine.
#![no_std]
// `!(x > y)` is used on purpose so that NaN lands in the rejecting branch
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod conjugacy;
pub mod error;
pub mod maps;
pub mod rotation;
pub mod sum;
pub mod wba;
pub mod xprec;

pub use error::{Error, ParseXRealError, Result, XprecError};
pub use xprec::{XComplex, XReal};
pub use wba::{WeightKind, WeightTable};
pub use maps::{Generator, Trajectory};
pub use rotation::{ProjectionSpec, RotationEstimate};
pub use conjugacy::{ConjugacySeries, Spectrum};
