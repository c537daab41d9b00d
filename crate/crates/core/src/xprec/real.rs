use core::cmp::Ordering;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use super::eft::{quick_two_sum, two_prod, two_sum};
use crate::error::XprecError;

/// Double-word ("double-double") real: the unevaluated sum `hi + lo` with
/// `|lo| <= ulp(hi) / 2`, giving roughly 106 bits of significand.
#[derive(Clone, Copy, Default)]
pub struct XReal {
    hi: f64,
    lo: f64,
}

impl XReal {
    pub const ZERO: Self = Self::from_parts(0.0, 0.0);
    pub const ONE: Self = Self::from_parts(1.0, 0.0);
    pub const TWO: Self = Self::from_parts(2.0, 0.0);
    pub const HALF: Self = Self::from_parts(0.5, 0.0);
    pub const NAN: Self = Self::from_parts(f64::NAN, f64::NAN);
    pub const INFINITY: Self = Self::from_parts(f64::INFINITY, 0.0);

    pub const PI: Self = Self::from_parts(core::f64::consts::PI, 1.2246467991473532e-16);
    pub const TAU: Self = Self::from_parts(core::f64::consts::TAU, 2.4492935982947064e-16);
    pub const INV_TAU: Self = Self::from_parts(0.15915494309189535, -9.839338337591243e-18);
    pub const LN2: Self = Self::from_parts(core::f64::consts::LN_2, 2.3190468138462996e-17);
    pub const LN10: Self = Self::from_parts(core::f64::consts::LN_10, -2.1707562233822494e-16);

    /// Builds a value from an already normalized pair. No renormalization is
    /// performed, so `lo` must not exceed half an ulp of `hi`.
    #[inline]
    pub const fn from_parts(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    /// Builds a value from an arbitrary pair of doubles, renormalizing.
    #[inline]
    pub fn new(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        Self { hi, lo }
    }

    #[inline]
    pub const fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    /// Exact conversion of a 64-bit integer.
    pub fn from_i64(n: i64) -> Self {
        let hi = n as f64;
        // `hi` may round; the remainder always fits in an f64 exactly.
        let rem = (n as i128 - hi as i128) as f64;
        Self::new(hi, rem)
    }

    pub fn from_u64(n: u64) -> Self {
        let hi = n as f64;
        let rem = (n as i128 - hi as i128) as f64;
        Self::new(hi, rem)
    }

    #[inline]
    pub const fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    pub const fn lo(self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    #[inline]
    pub fn is_nan(self) -> bool {
        self.hi.is_nan() || self.lo.is_nan()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    #[inline]
    pub fn is_sign_negative(self) -> bool {
        self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0)
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.is_sign_negative() {
            -self
        } else {
            self
        }
    }

    /// Multiplies by an exact power of two.
    #[inline]
    pub fn ldexp(self, e: i32) -> Self {
        Self {
            hi: libm::scalbn(self.hi, e),
            lo: libm::scalbn(self.lo, e),
        }
    }

    pub fn floor(self) -> Self {
        let fh = libm::floor(self.hi);
        if fh == self.hi {
            let fl = libm::floor(self.lo);
            let (hi, lo) = quick_two_sum(fh, fl);
            Self { hi, lo }
        } else {
            Self { hi: fh, lo: 0.0 }
        }
    }

    pub fn ceil(self) -> Self {
        -(-self).floor()
    }

    /// Nearest integer, halves rounded up.
    pub fn round(self) -> Self {
        (self + Self::HALF).floor()
    }

    pub fn trunc(self) -> Self {
        if self.is_sign_negative() {
            self.ceil()
        } else {
            self.floor()
        }
    }

    /// Representative of `self mod 1` in `[0, 1)`.
    pub fn frac(self) -> Self {
        let f = self - self.floor();
        // Rounding in the subtraction can land exactly on 1 for tiny negatives.
        if f >= Self::ONE {
            f - Self::ONE
        } else {
            f
        }
    }

    /// `frac(n * self)` without forming the large product: both words are
    /// multiplied exactly and each partial product is reduced mod 1 on its own.
    /// `n` must be below 2^53.
    pub fn mul_frac(self, n: u64) -> Self {
        debug_assert!(n < 1 << 53);
        let nf = n as f64;
        let (p1, e1) = two_prod(nf, self.hi);
        let (p2, e2) = two_prod(nf, self.lo);
        let f1 = p1 - libm::round(p1);
        let f2 = p2 - libm::round(p2);
        (Self::from_f64(f1) + Self::from_f64(f2) + (Self::from_f64(e1) + Self::from_f64(e2))).frac()
    }

    /// Representative of `self mod 1` in `(-1/2, 1/2]`.
    pub fn frac_centered(self) -> Self {
        let f = self.frac();
        if f > Self::HALF {
            f - Self::ONE
        } else {
            f
        }
    }

    #[inline]
    pub fn sqr(self) -> Self {
        self * self
    }

    #[inline]
    pub fn recip(self) -> Self {
        Self::ONE / self
    }

    pub fn powi(self, n: i32) -> Self {
        if n == 0 {
            return Self::ONE;
        }
        let mut base = self;
        let mut e = n.unsigned_abs();
        let mut acc = Self::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    /// Product with a double, cheaper than a full double-word product.
    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }

    /// `self - b * q` with both partial products formed exactly.
    #[inline]
    fn sub_exact_product(self, b: Self, q: f64) -> Self {
        let (p0, e0) = two_prod(b.hi, q);
        let (p1, e1) = two_prod(b.lo, q);
        (self - Self::new(p0, e0)) - Self::new(p1, e1)
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self, XprecError> {
        if rhs.is_zero() {
            return Err(XprecError::DivisionByZero);
        }
        Ok(self / rhs)
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Total order on non-NaN values; NaN sorts last.
    pub fn total_cmp(&self, other: &Self) -> Ordering {
        match self.partial_cmp(other) {
            Some(o) => o,
            None => self.is_nan().cmp(&other.is_nan()),
        }
    }
}

impl fmt::Debug for XReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XReal({})", self)
    }
}

impl From<f64> for XReal {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl From<i32> for XReal {
    fn from(x: i32) -> Self {
        Self::from_f64(x as f64)
    }
}

impl From<u32> for XReal {
    fn from(x: u32) -> Self {
        Self::from_f64(x as f64)
    }
}

impl From<i64> for XReal {
    fn from(x: i64) -> Self {
        Self::from_i64(x)
    }
}

impl From<u64> for XReal {
    fn from(x: u64) -> Self {
        Self::from_u64(x)
    }
}

impl From<usize> for XReal {
    fn from(x: usize) -> Self {
        Self::from_u64(x as u64)
    }
}

impl PartialEq for XReal {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for XReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            o => Some(o),
        }
    }
}

impl Neg for XReal {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for XReal {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (e, g) = two_sum(e, t);
        let (s, e) = two_sum(s, e);
        let (hi, lo) = quick_two_sum(s, e + (g + f));
        Self { hi, lo }
    }
}

impl Sub for XReal {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for XReal {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        let (p0, e0) = two_prod(self.hi, b.hi);
        let (p1, e1) = two_prod(self.hi, b.lo);
        let (p2, e2) = two_prod(self.lo, b.hi);
        let (s, t) = two_sum(p1, p2);
        let (m, mm) = two_sum(e0, s);
        let tail = mm + t + e1 + e2 + self.lo * b.lo;
        let (r0, r1) = quick_two_sum(p0, m);
        let (hi, lo) = quick_two_sum(r0, r1 + tail);
        Self { hi, lo }
    }
}

impl Div for XReal {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        if b.hi == 0.0 {
            return Self::from_f64(self.hi / b.hi);
        }
        let q1 = self.hi / b.hi;
        let r = self.sub_exact_product(b, q1);
        let q2 = r.hi / b.hi;
        let r = r.sub_exact_product(b, q2);
        let q3 = r.hi / b.hi;
        let (s, e) = two_sum(q1, q2);
        let (hi, lo) = quick_two_sum(s, e + q3);
        Self { hi, lo }
    }
}

macro_rules! scalar_ops {
    ($($tr:ident $m:ident $atr:ident $am:ident),*) => {$(
        impl $tr<f64> for XReal {
            type Output = XReal;
            #[inline]
            fn $m(self, b: f64) -> XReal {
                $tr::$m(self, XReal::from_f64(b))
            }
        }
        impl $tr<XReal> for f64 {
            type Output = XReal;
            #[inline]
            fn $m(self, b: XReal) -> XReal {
                $tr::$m(XReal::from_f64(self), b)
            }
        }
        impl $atr for XReal {
            #[inline]
            fn $am(&mut self, b: XReal) {
                *self = $tr::$m(*self, b);
            }
        }
        impl $atr<f64> for XReal {
            #[inline]
            fn $am(&mut self, b: f64) {
                *self = $tr::$m(*self, XReal::from_f64(b));
            }
        }
    )*};
}

scalar_ops!(
    Add add AddAssign add_assign,
    Sub sub SubAssign sub_assign,
    Mul mul MulAssign mul_assign,
    Div div DivAssign div_assign
);

impl Sum for XReal {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |a, b| a + b)
    }
}

impl<'a> Sum<&'a XReal> for XReal {
    fn sum<I: Iterator<Item = &'a XReal>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |a, b| a + *b)
    }
}
