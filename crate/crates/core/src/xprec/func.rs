//! Elementary functions on [`XReal`].
//!
//! Trigonometry is organised around turns: angles are reduced modulo one
//! turn *before* any multiplication by 2π, then split against a 256-entry
//! table of `cos(2πj/256)` and finished with short Taylor kernels.

use super::eft::two_prod;
use super::table::COS_TABLE;
use super::{XComplex, XReal};
use crate::error::XprecError;

// Three-word constants for Cody-Waite style reductions.
const LN2_3: [f64; 3] = [core::f64::consts::LN_2, 2.3190468138462996e-17, 5.707708438416212e-34];
const PIO2_3: [f64; 3] = [core::f64::consts::FRAC_PI_2, 6.123233995736766e-17, -1.4973849048591698e-33];
const INV_TAU_3: [f64; 3] = [0.15915494309189535, -9.839338337591243e-18, -5.360718141446502e-34];

/// `x - k * c` for a small integer `k` and a three-word constant `c`,
/// carried out without rounding the large products.
fn reduce3(x: XReal, k: f64, c: &[f64; 3]) -> XReal {
    let (p0, e0) = two_prod(k, c[0]);
    let (p1, e1) = two_prod(k, c[1]);
    let r = x - XReal::new(p0, e0);
    let r = r - XReal::new(p1, e1);
    r - XReal::from_f64(k * c[2])
}

/// `x / 2π` with the reciprocal carried to three words.
fn to_turns(x: XReal) -> XReal {
    let a = x * XReal::from_parts(INV_TAU_3[0], INV_TAU_3[1]);
    a + XReal::from_f64(x.hi() * INV_TAU_3[2])
}

impl XReal {
    /// Square root; NaN for negative input (see [`XReal::checked_sqrt`]).
    pub fn sqrt(self) -> Self {
        if self.is_zero() {
            return Self::ZERO;
        }
        if self.is_sign_negative() {
            return Self::NAN;
        }
        let s = libm::sqrt(self.hi());
        let (p, e) = two_prod(s, s);
        let d = self - XReal::new(p, e);
        let x = XReal::new(s, d.hi() / (2.0 * s));
        // One more correction in full double-word arithmetic.
        x + (self - x.sqr()) / x.mul_f64(2.0)
    }

    pub fn checked_sqrt(self) -> Result<Self, XprecError> {
        if self.is_sign_negative() && !self.is_zero() {
            return Err(XprecError::Domain("sqrt of a negative number"));
        }
        Ok(self.sqrt())
    }

    /// `e^x - 1`, accurate in the relative sense for small `x`.
    pub fn exp_m1(self) -> Self {
        if self.hi().abs() > 0.5 {
            return self.exp() - Self::ONE;
        }
        expm1_small(self)
    }

    pub fn exp(self) -> Self {
        let x = self.hi();
        if x.is_nan() {
            return Self::NAN;
        }
        if x > 709.78 {
            return Self::INFINITY;
        }
        if x < -745.2 {
            return Self::ZERO;
        }
        let k = libm::round(x / LN2_3[0]);
        let r = reduce3(self, k, &LN2_3);
        (Self::ONE + expm1_small(r)).ldexp(k as i32)
    }

    /// Natural logarithm; NaN outside the domain (see [`XReal::checked_ln`]).
    pub fn ln(self) -> Self {
        if self.is_nan() || self.is_sign_negative() || self.is_zero() {
            return if self.is_zero() { -Self::INFINITY } else { Self::NAN };
        }
        if !self.is_finite() {
            return Self::INFINITY;
        }
        // self = m * 2^k with m in [1/sqrt2, sqrt2).
        let mut k = libm::ilogb(self.hi());
        let mut m = self.ldexp(-k);
        if m.hi() > core::f64::consts::SQRT_2 {
            m = m.ldexp(-1);
            k += 1;
        }
        let z = (m - Self::ONE) / (m + Self::ONE);
        let z2 = z.sqr();
        // ln m = 2 atanh z = 2 (z + z^3/3 + z^5/5 + ...)
        let mut term = z;
        let mut sum = z;
        let mut j = 3.0;
        loop {
            term *= z2;
            let t = term / j;
            sum += t;
            if t.hi().abs() <= 1e-36 * sum.hi().abs() {
                break;
            }
            j += 2.0;
        }
        let kf = k as f64;
        let (p0, e0) = two_prod(kf, LN2_3[0]);
        let (p1, e1) = two_prod(kf, LN2_3[1]);
        XReal::new(p0, e0) + (XReal::new(p1, e1) + (sum.mul_f64(2.0) + XReal::from_f64(kf * LN2_3[2])))
    }

    pub fn checked_ln(self) -> Result<Self, XprecError> {
        if self.is_nan() || self.is_sign_negative() || self.is_zero() {
            return Err(XprecError::Domain("ln of a non-positive number"));
        }
        Ok(self.ln())
    }

    /// `(sin 2πt, cos 2πt)` for an angle in turns.
    pub fn sincos_turns(self) -> (Self, Self) {
        if !self.is_finite() {
            return (Self::NAN, Self::NAN);
        }
        let f = self - self.round();
        let j = libm::round(f.hi() * 256.0);
        // Exact: j/256 is within 1/512 of f.
        let g = f - XReal::from_f64(j / 256.0);
        let (s, c) = sincos_kernel(g * Self::TAU);
        let idx = (j as i64).rem_euclid(256) as usize;
        let (ch, cl) = COS_TABLE[idx];
        let (sh, sl) = COS_TABLE[(idx + 192) % 256];
        let cj = XReal::from_parts(ch, cl);
        let sj = XReal::from_parts(sh, sl);
        (sj * c + cj * s, cj * c - sj * s)
    }

    pub fn sin(self) -> Self {
        self.sin_cos().0
    }

    pub fn cos(self) -> Self {
        self.sin_cos().1
    }

    /// `(sin x, cos x)` for `x` in radians.
    pub fn sin_cos(self) -> (Self, Self) {
        if !self.is_finite() {
            return (Self::NAN, Self::NAN);
        }
        let k = libm::round(self.hi() / PIO2_3[0]);
        let r = if k.abs() < 1e15 {
            reduce3(self, k, &PIO2_3)
        } else {
            // Out of the useful range for a 106-bit argument; reduce in turns.
            return to_turns(self).sincos_turns();
        };
        let (s, c) = to_turns(r).sincos_turns();
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    /// Angle of `(x, y)` measured in turns, in `[0, 1)`.
    pub fn atan2_turns(y: Self, x: Self) -> Result<Self, XprecError> {
        if x.is_zero() && y.is_zero() {
            return Err(XprecError::Domain("atan2 of the zero vector"));
        }
        if !x.is_finite() || !y.is_finite() {
            return Err(XprecError::Domain("atan2 of a non-finite vector"));
        }
        let t0 = XReal::from_f64(libm::atan2(y.hi(), x.hi()) / core::f64::consts::TAU);
        let (s, c) = t0.sincos_turns();
        // Rotate (x, y) back by t0; the residual angle is tiny.
        let u = x * c + y * s;
        let v = y * c - x * s;
        let q = v / u;
        let delta = q - q * q.sqr() / 3.0;
        let t = t0 + to_turns(delta);
        let t = if t.is_sign_negative() { t + Self::ONE } else { t };
        Ok(if t >= Self::ONE { t - Self::ONE } else { t })
    }
}

/// `e^{i 2π t}`; `t` is reduced mod 1 before any trigonometry.
pub fn exp_i2pi(t: XReal) -> XComplex {
    let (s, c) = t.sincos_turns();
    XComplex::new(c, s)
}

/// Angle of `(x, y)` in turns, in `[0, 1)`.
pub fn atan2_turns(y: XReal, x: XReal) -> Result<XReal, XprecError> {
    XReal::atan2_turns(y, x)
}

/// `1/k!` as double words.
const INV_FACT: [(f64, f64); 17] = [
    (1.0, 0.0),
    (1.0, 0.0),
    (0.5, 0.0),
    (0.16666666666666666, 9.25185853854297e-18),
    (0.041666666666666664, 2.3129646346357427e-18),
    (0.008333333333333333, 1.1564823173178714e-19),
    (0.001388888888888889, -5.300543954373577e-20),
    (0.0001984126984126984, 1.7209558293420705e-22),
    (2.48015873015873e-05, 2.1511947866775882e-23),
    (2.7557319223985893e-06, -1.858393274046472e-22),
    (2.755731922398589e-07, 2.3767714622250297e-23),
    (2.505210838544172e-08, -1.448814070935912e-24),
    (2.08767569878681e-09, -1.20734505911326e-25),
    (1.6059043836821613e-10, 1.2585294588752098e-26),
    (1.1470745597729725e-11, 2.0655512752830745e-28),
    (7.647163731819816e-13, 7.03872877733453e-30),
    (4.779477332387385e-14, 4.399205485834081e-31),
];

#[inline]
fn inv_fact(k: usize, negate: bool) -> XReal {
    let (h, l) = INV_FACT[k];
    if negate {
        XReal::from_parts(-h, -l)
    } else {
        XReal::from_parts(h, l)
    }
}

/// Horner in `y`: coefficients `(-1)^k / (2k + odd)!`, `k = 0..7`. Terms
/// from `k = 4` on are below 1e-20 for `|y| <= 2e-4` and run in `f64`.
fn alternating_series(y: XReal, odd: usize) -> XReal {
    let yh = y.hi();
    let mut tail = 0.0;
    for k in (4..7).rev() {
        let (c, _) = INV_FACT[2 * k + odd];
        tail = tail * yh + if k % 2 == 1 { -c } else { c };
    }
    let mut p = XReal::from_f64(tail);
    for k in (0..4).rev() {
        p = p * y + inv_fact(2 * k + odd, k % 2 == 1);
    }
    p
}

/// `e^r - 1` for `|r| <= ln2/2`: Taylor series at `r/16`, then undo the
/// scaling with the stable doubling `E(2s) = E(s) (E(s) + 2)`.
fn expm1_small(r: XReal) -> XReal {
    const SQUARINGS: i32 = 4;
    let s = r.ldexp(-SQUARINGS);
    // terms past s^8 are below 1e-18 relative and run in f64
    let sh = s.hi();
    let mut tail = 0.0;
    for k in (9..=16).rev() {
        tail = tail * sh + INV_FACT[k].0;
    }
    let mut p = XReal::from_f64(tail);
    for k in (1..=8).rev() {
        p = p * s + inv_fact(k, false);
    }
    let mut e = p * s;
    for _ in 0..SQUARINGS {
        e = e * (e + XReal::TWO);
    }
    e
}

/// `(sin x, cos x)` for `|x| <= π/256`.
fn sincos_kernel(x: XReal) -> (XReal, XReal) {
    if x.is_zero() {
        return (XReal::ZERO, XReal::ONE);
    }
    let y = x.sqr();
    (x * alternating_series(y, 1), alternating_series(y, 0))
}
