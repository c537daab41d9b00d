//! Double-word extended precision: ~32 significant decimal digits.

mod complex;
pub mod decimal;
mod eft;
mod func;
mod real;
mod table;

pub use complex::XComplex;
pub use func::{atan2_turns, exp_i2pi};
pub use real::XReal;

/// `(√5 − 1) / 2`, the golden-mean rotation number.
pub fn golden() -> XReal {
    (XReal::from_f64(5.0).sqrt() - XReal::ONE).ldexp(-1)
}

/// `√3 / 2`.
pub fn sqrt3_half() -> XReal {
    XReal::from_f64(3.0).sqrt().ldexp(-1)
}
