//! Text forms of extended-precision values on the command line and in files.

use qpwb_core::xprec::{golden, sqrt3_half};
use qpwb_core::{XComplex, XReal};

use crate::error::CliError;

/// Decimal literal, or one of the named constants `golden` (`(√5-1)/2`) and
/// `sqrt3half` (`√3/2`), optionally negated.
pub fn parse_real(s: &str) -> Result<XReal, CliError> {
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let v = match body {
        "golden" => golden(),
        "sqrt3half" => sqrt3_half(),
        _ => return t.parse().map_err(|e| CliError::usage(format!("cannot parse {s:?} as a number: {e}"))),
    };
    Ok(if neg { -v } else { v })
}

/// `a+bi`, `a-bi`, `bi`, `a`, or `a,b`.
pub fn parse_complex(s: &str) -> Result<XComplex, CliError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::usage(format!("cannot parse {s:?} as a complex number"));
    if let Some((re, im)) = t.split_once(',') {
        return Ok(XComplex::new(parse_real(re)?, parse_real(im)?));
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(XComplex::new(parse_real(&t)?, XReal::ZERO));
    };
    // split at the last sign that is neither leading nor part of an exponent
    let bytes = body.as_bytes();
    let cut = (1..bytes.len())
        .rev()
        .find(|&j| matches!(bytes[j], b'+' | b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    let (re, im) = match cut {
        Some(j) => (parse_real(&body[..j])?, &body[j..]),
        None => (XReal::ZERO, body),
    };
    let im = match im {
        "" | "+" => XReal::ONE,
        "-" => -XReal::ONE,
        other => parse_real(other)?,
    };
    if !re.is_finite() || !im.is_finite() {
        return Err(bad());
    }
    Ok(XComplex::new(re, im))
}

/// `re±imi` at full precision; [`parse_complex`] reads it back.
pub fn format_complex(z: XComplex) -> String {
    let im = z.im.to_string();
    match im.strip_prefix('-') {
        Some(mag) => format!("{}-{}i", z.re, mag),
        None => format!("{}+{}i", z.re, im),
    }
}

/// Comma separated list of reals.
pub fn parse_real_list(s: &str) -> Result<Vec<XReal>, CliError> {
    s.split(',').map(parse_real).collect()
}

/// `lo..hi`.
pub fn parse_range(s: &str) -> Result<(XReal, XReal), CliError> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| CliError::usage(format!("expected a range lo..hi, got {s:?}")))?;
    Ok((parse_real(lo)?, parse_real(hi)?))
}

/// Comma separated counts; `1e5` style exponents are accepted.
pub fn parse_counts(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',').map(parse_count).collect()
}

pub fn parse_count(s: &str) -> Result<usize, CliError> {
    let t = s.trim().replace('_', "");
    if let Ok(n) = t.parse::<usize>() {
        return Ok(n);
    }
    let bad = || CliError::usage(format!("cannot parse {s:?} as a count"));
    let (m, e) = t.split_once(['e', 'E']).ok_or_else(bad)?;
    let m: usize = m.parse().map_err(|_| bad())?;
    let e: u32 = e.parse().map_err(|_| bad())?;
    10usize.checked_pow(e).and_then(|p| p.checked_mul(m)).ok_or_else(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_constants() {
        assert_eq!(parse_real("golden").unwrap(), golden());
        assert_eq!(parse_real("-sqrt3half").unwrap(), -sqrt3_half());
        assert!(parse_real("gold").is_err());
    }

    #[test]
    fn complex_forms() {
        let z = parse_complex("-0.5+0.126i").unwrap();
        assert_eq!(z, XComplex::new(parse_real("-0.5").unwrap(), parse_real("0.126").unwrap()));
        let z = parse_complex("-0.387-0.163i").unwrap();
        assert_eq!(z.im, parse_real("-0.163").unwrap());
        assert_eq!(parse_complex("0.37").unwrap(), XComplex::new(parse_real("0.37").unwrap(), XReal::ZERO));
        assert_eq!(parse_complex("2.5e-3i").unwrap().im, parse_real("2.5e-3").unwrap());
        assert_eq!(parse_complex("1e-3-2e-4i").unwrap().re, parse_real("1e-3").unwrap());
        assert_eq!(parse_complex("-i").unwrap(), XComplex::new(XReal::ZERO, -XReal::ONE));
        assert_eq!(parse_complex("0.1,-0.2").unwrap().im, parse_real("-0.2").unwrap());
        assert!(parse_complex("1+xi").is_err());
    }

    #[test]
    fn complex_text_round_trip() {
        let z = XComplex::new(golden(), -sqrt3_half());
        let back = parse_complex(&format_complex(z)).unwrap();
        assert_eq!(format_complex(back), format_complex(z));
        assert!((back - z).abs().to_f64() <= 1e-35);
    }

    #[test]
    fn counts() {
        assert_eq!(parse_count("4e6").unwrap(), 4_000_000);
        assert_eq!(parse_count("1_000").unwrap(), 1000);
        assert_eq!(parse_counts("1e3,1e4").unwrap(), vec![1000, 10_000]);
        assert!(parse_count("-3").is_err());
    }
}
