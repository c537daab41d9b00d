use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use super::XReal;
use crate::error::XprecError;

/// Complex number with [`XReal`] parts.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct XComplex {
    pub re: XReal,
    pub im: XReal,
}

impl XComplex {
    pub const ZERO: Self = Self::new(XReal::ZERO, XReal::ZERO);
    pub const ONE: Self = Self::new(XReal::ONE, XReal::ZERO);
    pub const I: Self = Self::new(XReal::ZERO, XReal::ONE);

    #[inline]
    pub const fn new(re: XReal, im: XReal) -> Self {
        Self { re, im }
    }

    #[inline]
    pub const fn from_real(re: XReal) -> Self {
        Self { re, im: XReal::ZERO }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Self::new(XReal::from_f64(re), XReal::from_f64(im))
    }

    #[inline]
    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    #[inline]
    pub fn norm_sqr(self) -> XReal {
        self.re.sqr() + self.im.sqr()
    }

    pub fn abs(self) -> XReal {
        self.norm_sqr().sqrt()
    }

    #[inline]
    pub fn scale(self, k: XReal) -> Self {
        Self::new(self.re * k, self.im * k)
    }

    #[inline]
    pub fn sqr(self) -> Self {
        let rr = self.re.sqr() - self.im.sqr();
        let ii = (self.re * self.im).ldexp(1);
        Self::new(rr, ii)
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_zero(self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Argument in turns, in `[0, 1)`.
    pub fn arg_turns(self) -> Result<XReal, XprecError> {
        XReal::atan2_turns(self.im, self.re)
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self, XprecError> {
        if rhs.is_zero() {
            return Err(XprecError::DivisionByZero);
        }
        Ok(self / rhs)
    }

    pub fn powu(self, n: u32) -> Self {
        let mut base = self;
        let mut e = n;
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
        acc
    }
}

impl From<XReal> for XComplex {
    fn from(re: XReal) -> Self {
        Self::from_real(re)
    }
}

impl Neg for XComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Add for XComplex {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        Self::new(self.re + b.re, self.im + b.im)
    }
}

impl Add<XReal> for XComplex {
    type Output = Self;
    #[inline]
    fn add(self, b: XReal) -> Self {
        Self::new(self.re + b, self.im)
    }
}

impl Sub for XComplex {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        Self::new(self.re - b.re, self.im - b.im)
    }
}

impl Mul for XComplex {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        Self::new(
            self.re * b.re - self.im * b.im,
            self.re * b.im + self.im * b.re,
        )
    }
}

impl Mul<XReal> for XComplex {
    type Output = Self;
    #[inline]
    fn mul(self, b: XReal) -> Self {
        self.scale(b)
    }
}

impl Div for XComplex {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let d = b.norm_sqr();
        let n = self * b.conj();
        Self::new(n.re / d, n.im / d)
    }
}

impl Div<XReal> for XComplex {
    type Output = Self;
    fn div(self, b: XReal) -> Self {
        Self::new(self.re / b, self.im / b)
    }
}

impl AddAssign for XComplex {
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl SubAssign for XComplex {
    fn sub_assign(&mut self, b: Self) {
        *self = *self - b;
    }
}

impl MulAssign for XComplex {
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}

impl Sum for XComplex {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared() {
        assert_eq!(XComplex::I * XComplex::I, -XComplex::ONE);
        assert_eq!(XComplex::I.sqr(), -XComplex::ONE);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = XComplex::from_f64(-0.5, 0.126);
        let b = XComplex::from_f64(-0.387, -0.163);
        let q = (a * b) / b;
        assert!((q - a).abs().to_f64() < 1e-31);
        assert!(a.checked_div(XComplex::ZERO).is_err());
    }

    #[test]
    fn powu_small() {
        let z = XComplex::from_f64(0.6, 0.8);
        let p = z.powu(5);
        let q = z * z * z * z * z;
        assert!((p - q).abs().to_f64() < 1e-31);
    }
}
