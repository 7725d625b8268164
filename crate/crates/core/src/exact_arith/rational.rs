use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-size rational, always stored reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q`, `-p/q`, or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let err = || Error::Parse {
        pos: 0,
        msg: format!("not a rational: `{t}`"),
    };
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(n, d))
}

/// `p/q`, or `p` for integers.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rational_to_f64(x: &Rational) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Very large or small magnitudes: go through the bit lengths.
    let nb = x.numer().bits() as i64;
    let db = x.denom().bits() as i64;
    let shift = nb - db;
    let scaled = if shift > 0 {
        Rational::new(x.numer().clone(), x.denom().clone() << (shift as usize))
    } else {
        Rational::new(x.numer().clone() << ((-shift) as usize), x.denom().clone())
    };
    let m = scaled.to_f64().unwrap_or(0.0);
    let e = shift.clamp(-2000, 2000) as i32;
    if x.is_negative() && m > 0.0 {
        -libm_ldexp(m, e)
    } else {
        libm_ldexp(m, e)
    }
}

fn libm_ldexp(m: f64, e: i32) -> f64 {
    num_traits::Float::powi(2.0f64, e) * m
}

pub(crate) fn to_i64(x: &Rational) -> Option<i64> {
    if x.denom().is_one() {
        x.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3/4", "22/7", "-1"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("6/8").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("2/-4").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn canonical_zero() {
        let z = rat(0, 5);
        assert!(z.denom().is_one());
    }

    #[test]
    fn float_conversion_handles_extremes() {
        let big = Rational::new(BigInt::from(3) << 3000usize, BigInt::from(1) << 3001usize);
        assert!((rational_to_f64(&big) - 1.5).abs() < 1e-12);
        assert_eq!(rational_to_f64(&rat(-1, 4)), -0.25);
    }
}
