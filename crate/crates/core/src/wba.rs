//! Weighted Birkhoff averages.
//!
//! A weight kind is a function on `[0, 1]`; for a window of `N` samples the
//! weights are `w(n/N)` for `n = 0..N`, normalized to sum to one.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::sum::{pairwise_sum, PairwiseSum};
use crate::XReal;

/// Weight function family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightKind {
    /// `1` on `[0, 1)`: the plain Birkhoff average.
    Uniform,
    /// `exp(-[t(1-t)]^-p)` on `(0, 1)`.
    Bump(u32),
    /// `exp(-1/w)` with `w` the `p = 1` bump.
    IteratedBump,
}

impl Default for WeightKind {
    fn default() -> Self {
        WeightKind::Bump(2)
    }
}

impl WeightKind {
    /// `p = 1` converges faster up to about ten digits, `p = 2` beyond.
    pub fn for_target_digits(digits: u32) -> Self {
        if digits <= 10 {
            WeightKind::Bump(1)
        } else {
            WeightKind::Bump(2)
        }
    }

    pub fn validate(self) -> Result<Self> {
        match self {
            WeightKind::Bump(0) => Err(Error::invalid("bump exponent must be at least 1")),
            k => Ok(k),
        }
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightKind::Uniform => f.write_str("uniform"),
            WeightKind::Bump(p) => write!(f, "bump{p}"),
            WeightKind::IteratedBump => f.write_str("iterated"),
        }
    }
}

impl FromStr for WeightKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "uniform" | "plain" => Ok(WeightKind::Uniform),
            "iterated" | "iterated-bump" | "star" => Ok(WeightKind::IteratedBump),
            _ => {
                let p = s
                    .strip_prefix("bump")
                    .map(|r| r.trim_start_matches(['(', '-', '_']).trim_end_matches(')'))
                    .and_then(|r| r.parse::<u32>().ok())
                    .ok_or_else(|| Error::invalid(format!("unknown weight kind `{s}`")))?;
                WeightKind::Bump(p).validate()
            }
        }
    }
}

/// Exponents above this give weights below 1e-75; they are taken as zero.
fn cutoff() -> XReal {
    XReal::LN10.mul_f64(75.0)
}

fn exp_neg_capped(e: XReal) -> XReal {
    if e > cutoff() {
        XReal::ZERO
    } else {
        (-e).exp()
    }
}

/// `w(s)` written in terms of `s = t(1-t)`, for `t` strictly inside `(0, 1)`.
fn bump_of(kind: WeightKind, s: XReal) -> XReal {
    match kind {
        WeightKind::Uniform => XReal::ONE,
        WeightKind::Bump(p) => exp_neg_capped(s.powi(-(p as i32))),
        WeightKind::IteratedBump => {
            let w1 = exp_neg_capped(s.recip());
            if w1.is_zero() {
                XReal::ZERO
            } else {
                exp_neg_capped(w1.recip())
            }
        }
    }
}

/// Unnormalized weight at `t`.
pub fn weight_raw(kind: WeightKind, t: XReal) -> XReal {
    match kind {
        WeightKind::Uniform => {
            if t >= XReal::ZERO && t < XReal::ONE {
                XReal::ONE
            } else {
                XReal::ZERO
            }
        }
        _ => {
            if t <= XReal::ZERO || t >= XReal::ONE || !t.is_finite() {
                XReal::ZERO
            } else {
                bump_of(kind, t * (XReal::ONE - t))
            }
        }
    }
}

/// Normalized weights for one window length.
#[derive(Clone, Debug)]
pub struct WeightTable {
    kind: WeightKind,
    weights: Vec<XReal>,
}

impl WeightTable {
    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn n_total(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[XReal] {
        &self.weights
    }

    /// Index range outside which every weight is zero.
    pub fn support(&self) -> core::ops::Range<usize> {
        let first = self.weights.iter().position(|w| !w.is_zero()).unwrap_or(0);
        let last = self.weights.iter().rposition(|w| !w.is_zero()).map_or(0, |i| i + 1);
        first..last
    }
}

/// Build normalized weights `w(n/N) / Σ w(j/N)` for `n = 0..N`.
pub fn build_weights(kind: WeightKind, n_total: usize) -> Result<WeightTable> {
    let kind = kind.validate()?;
    if n_total < 2 {
        return Err(Error::invalid(format!("window length must be at least 2, got {n_total}")));
    }
    let raw: Vec<XReal> = match kind {
        WeightKind::Uniform => alloc::vec![XReal::ONE; n_total],
        _ => {
            // s = n(N-n)/N^2 is exact in the numerator and symmetric in n.
            let n2 = XReal::from_u64(n_total as u64).sqr();
            (0..n_total)
                .map(|n| {
                    if n == 0 {
                        XReal::ZERO
                    } else {
                        let num = XReal::from_u64(n as u64) * XReal::from_u64((n_total - n) as u64);
                        bump_of(kind, num / n2)
                    }
                })
                .collect()
        }
    };
    let total = pairwise_sum(raw.iter().copied());
    if total.is_zero() {
        return Err(Error::invalid("all weights vanish for this window length"));
    }
    let weights = raw
        .into_iter()
        .map(|w| if w.is_zero() { w } else { w / total })
        .collect();
    Ok(WeightTable { kind, weights })
}

/// `Σ ŵ_n x_n` over a sample window of the table's length.
pub fn wb_average<T>(samples: &[T], table: &WeightTable) -> Result<T>
where
    T: Copy + Default + Add<Output = T> + Mul<XReal, Output = T>,
{
    if samples.len() != table.n_total() {
        return Err(Error::invalid(format!(
            "{} samples for a weight table of length {}",
            samples.len(),
            table.n_total()
        )));
    }
    let mut acc = PairwiseSum::new();
    for (x, &w) in samples.iter().zip(&table.weights) {
        if !w.is_zero() {
            acc.push(*x * w);
        }
    }
    Ok(acc.total().unwrap_or_default())
}

/// One weighted average per checkpoint `N`, each over the first `N` samples
/// with its own weight table. The source is called once per index, in order.
pub fn convergence_profile<T, F>(
    mut source: F,
    kind: WeightKind,
    checkpoints: &[usize],
) -> Result<Vec<(usize, T)>>
where
    T: Copy + Default + Add<Output = T> + Mul<XReal, Output = T>,
    F: FnMut(usize) -> T,
{
    let Some(&last) = checkpoints.last() else {
        return Err(Error::invalid("no checkpoints"));
    };
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("checkpoints must be strictly increasing"));
    }
    let samples: Vec<T> = (0..last).map(&mut source).collect();
    profile_over(&samples, kind, checkpoints)
}

/// As [`convergence_profile`], over samples already in memory.
pub fn profile_over<T>(samples: &[T], kind: WeightKind, checkpoints: &[usize]) -> Result<Vec<(usize, T)>>
where
    T: Copy + Default + Add<Output = T> + Mul<XReal, Output = T>,
{
    if checkpoints.is_empty() {
        return Err(Error::invalid("no checkpoints"));
    }
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("checkpoints must be strictly increasing"));
    }
    checkpoints
        .iter()
        .map(|&n| {
            let prefix = samples
                .get(..n)
                .ok_or_else(|| Error::invalid(format!("checkpoint {n} exceeds {} samples", samples.len())))?;
            let table = build_weights(kind, n)?;
            Ok((n, wb_average(prefix, &table)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xprec::{exp_i2pi, golden};
    use crate::XComplex;
    use alloc::string::ToString;

    fn close(a: XReal, b: XReal, tol: f64) -> bool {
        (a - b).abs().to_f64() <= tol
    }

    #[test]
    fn raw_weight_values() {
        let half = XReal::HALF;
        assert_eq!(weight_raw(WeightKind::Bump(1), XReal::ZERO), XReal::ZERO);
        assert_eq!(weight_raw(WeightKind::Bump(1), XReal::ONE), XReal::ZERO);
        assert!(close(weight_raw(WeightKind::Bump(1), half), XReal::from_f64(-4.0).exp(), 1e-33));
        let e4: XReal = "0.018315638888734180293718021273241242211912".parse().unwrap();
        assert!(close(weight_raw(WeightKind::Bump(1), half), e4, 1e-33));
        assert!(close(weight_raw(WeightKind::Bump(2), half), XReal::from_f64(-16.0).exp(), 1e-38));
        assert_eq!(weight_raw(WeightKind::Uniform, XReal::ZERO), XReal::ONE);
        assert_eq!(weight_raw(WeightKind::Uniform, XReal::ONE), XReal::ZERO);
        assert_eq!(weight_raw(WeightKind::Bump(2), XReal::from_f64(-0.1)), XReal::ZERO);
        // exp(-1/e^-4) = exp(-e^4)
        let star = weight_raw(WeightKind::IteratedBump, half);
        assert!(close(star, (-XReal::from_f64(4.0).exp()).exp(), 1e-45));
    }

    #[test]
    fn cutoff_near_edges() {
        // [t(1-t)]^-2 at t = 0.01 is about 1.02e4, far beyond 75 ln 10
        assert_eq!(weight_raw(WeightKind::Bump(2), XReal::from_f64(0.01)), XReal::ZERO);
        assert!(weight_raw(WeightKind::Bump(1), XReal::from_f64(0.005)).is_zero());
        assert!(!weight_raw(WeightKind::Bump(1), XReal::from_f64(0.01)).is_zero());
        assert!(weight_raw(WeightKind::IteratedBump, XReal::from_f64(0.2)).is_zero());
    }

    #[test]
    fn small_tables() {
        let t = build_weights(WeightKind::Uniform, 4).unwrap();
        assert!(t.weights().iter().all(|&w| w == XReal::from_f64(0.25)));
        let t = build_weights(WeightKind::Bump(1), 2).unwrap();
        assert_eq!(t.weights(), &[XReal::ZERO, XReal::ONE]);
        assert!(build_weights(WeightKind::Bump(2), 1).is_err());
        assert!(build_weights(WeightKind::Bump(0), 10).is_err());
    }

    #[test]
    fn weight_ratio_matches_formula() {
        let t = build_weights(WeightKind::Bump(2), 100).unwrap();
        let ratio = t.weights()[50] / t.weights()[25];
        // t(1-t) = 1/4 and 3/16: exponents -16 and -256/9
        let expected = (XReal::from_f64(256.0) / XReal::from_f64(9.0) - XReal::from_f64(16.0)).exp();
        assert!(((ratio - expected) / expected).abs().to_f64() < 1e-30);
    }

    #[test]
    fn sums_to_one_and_symmetric() {
        for kind in [WeightKind::Uniform, WeightKind::Bump(1), WeightKind::Bump(2), WeightKind::IteratedBump] {
            for n in [10usize, 1000] {
                let Ok(t) = build_weights(kind, n) else {
                    // iterated bump has no support on a 10-point grid
                    assert!(kind == WeightKind::IteratedBump && n == 10);
                    continue;
                };
                let s = pairwise_sum(t.weights().iter().copied());
                assert!(close(s, XReal::ONE, 1e-30), "{kind} {n}");
                if kind != WeightKind::Uniform {
                    for i in 1..n {
                        assert_eq!(t.weights()[i], t.weights()[n - i]);
                    }
                }
            }
        }
    }

    #[test]
    fn constant_and_length_checks() {
        let t = build_weights(WeightKind::Bump(2), 500).unwrap();
        let c = XComplex::from_f64(0.25, -3.5);
        let avg = wb_average(&alloc::vec![c; 500], &t).unwrap();
        assert!((avg - c).abs().to_f64() <= 1e-30);
        assert!(wb_average(&alloc::vec![c; 499], &t).is_err());
    }

    #[test]
    fn uniform_is_plain_mean() {
        let rho = golden();
        let xs: Vec<XComplex> = (0..1000u64).map(|n| exp_i2pi((rho * XReal::from_u64(n)).frac())).collect();
        let t = build_weights(WeightKind::Uniform, 1000).unwrap();
        let avg = wb_average(&xs, &t).unwrap();
        let direct = xs.iter().copied().sum::<XComplex>() / XReal::from_f64(1000.0);
        assert!((avg - direct).abs().to_f64() <= 1e-30);
    }

    #[test]
    fn profile_checks() {
        let c = XReal::from_f64(0.75);
        let p = convergence_profile(|_| c, WeightKind::Bump(2), &[10, 100]).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.iter().all(|&(_, v)| close(v, c, 1e-30)));
        assert!(convergence_profile(|_| c, WeightKind::Bump(2), &[]).is_err());
        assert!(convergence_profile(|_| c, WeightKind::Bump(2), &[100, 10]).is_err());
    }

    #[test]
    fn kind_text() {
        for k in [WeightKind::Uniform, WeightKind::Bump(1), WeightKind::Bump(2), WeightKind::IteratedBump] {
            assert_eq!(k.to_string().parse::<WeightKind>().unwrap(), k);
        }
        assert_eq!("Bump(3)".parse::<WeightKind>().unwrap(), WeightKind::Bump(3));
        assert!("bump0".parse::<WeightKind>().is_err());
        assert!("hann".parse::<WeightKind>().is_err());
        assert_eq!(WeightKind::for_target_digits(8), WeightKind::Bump(1));
        assert_eq!(WeightKind::for_target_digits(30), WeightKind::Bump(2));
    }
}
