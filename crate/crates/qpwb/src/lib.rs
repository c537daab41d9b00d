//! File formats, parallel spectra and the `qpwb` command-line tool on top of
//! `qpwb-core`.

// `!(x > y)` is used on purpose so that NaN lands in the rejecting branch
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod config;
pub mod error;
pub mod io;
pub mod parallel;
pub mod value;

pub use error::CliError;
