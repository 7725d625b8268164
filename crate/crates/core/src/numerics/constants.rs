//! Reference constants by arctangent and inverse hyperbolic tangent series.
//!
//! π = 16·atan(1/5) − 4·atan(1/239) and log 2 = 2·atanh(1/3), summed in
//! fixed point at `2^p` with every truncation counted in the error bound.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::bigfloat::{digits_to_bits, BigFloat, Enclosure};
use crate::error::{Error, Result};
use crate::exact_arith::{format_rational, parse_rational, Rational};

/// `atan(1/m)·2^p` or `atanh(1/m)·2^p` truncated, with an error bound in units.
fn inverse_series(m: u64, p: u64, alternating: bool) -> (BigInt, u64) {
    let m2 = BigInt::from(m) * BigInt::from(m);
    let mut power = (BigInt::one() << p) / BigInt::from(m);
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    loop {
        let term = &power / BigInt::from(2 * k + 1);
        if term.is_zero() {
            break;
        }
        if alternating && k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        power /= &m2;
        k += 1;
    }
    // each term is off by less than 3 units; the omitted tail is under 6
    (sum, 3 * k + 6)
}

/// `Σ c_i·f(1/m_i)` as an enclosure at `p` fractional bits.
pub(crate) fn machin(terms: &[(i64, u64)], p: u64, alternating: bool, prec: u32) -> Enclosure {
    let mut acc = BigInt::zero();
    let mut err = 0u64;
    for &(c, m) in terms {
        let (s, e) = inverse_series(m, p, alternating);
        acc += s * BigInt::from(c);
        err += e * c.unsigned_abs();
    }
    let lo = BigFloat::exact(&acc - BigInt::from(err), -(p as i64));
    let hi = BigFloat::exact(&acc + BigInt::from(err), -(p as i64));
    Enclosure::from_bounds(&lo, &hi, prec)
}

fn series_bits(digits: u32) -> (u64, u32) {
    let prec = digits_to_bits(digits);
    (prec as u64 + 40, prec)
}

/// π with radius ≤ `10^{−digits}`.
pub fn const_pi(digits: u32) -> Enclosure {
    let (p, prec) = series_bits(digits);
    machin(&[(16, 5), (-4, 239)], p, true, prec)
}

/// log 2 with radius ≤ `10^{−digits}`.
pub fn const_log2(digits: u32) -> Enclosure {
    let (p, prec) = series_bits(digits);
    machin(&[(2, 3)], p, false, prec)
}

/// `base^e` with radius ≤ `10^{−digits}` for moderate values.
pub fn const_root(base: i64, e: &Rational, digits: u32) -> Result<Enclosure> {
    if base < 0 {
        return Err(Error::NegativeBase);
    }
    if base == 0 {
        return if e.is_positive() {
            Ok(Enclosure::exact(BigFloat::zero()))
        } else {
            Err(Error::DegenerateArgument("zero to a non-positive power".into()))
        };
    }
    let prec = digits_to_bits(digits) + 8;
    Enclosure::from_rational(&Rational::from_integer(base.into()), prec).pow_rational(e)
}

/// `coeff · π^a · (log 2)^b · 2^c · 3^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub coeff: Rational,
    pub exp_pi: Rational,
    pub exp_log2: Rational,
    pub exp_2: Rational,
    pub exp_3: Rational,
}

impl ClosedForm {
    pub fn rational(coeff: Rational) -> Self {
        Self {
            coeff,
            exp_pi: Rational::zero(),
            exp_log2: Rational::zero(),
            exp_2: Rational::zero(),
            exp_3: Rational::zero(),
        }
    }
}

/// Text form `coeff*pi^a*log2^b*2^c*3^d`.
impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}*pi^{}*log2^{}*2^{}*3^{}",
            format_rational(&self.coeff),
            format_rational(&self.exp_pi),
            format_rational(&self.exp_log2),
            format_rational(&self.exp_2),
            format_rational(&self.exp_3)
        )
    }
}

fn cf_err(msg: &str) -> Error {
    Error::Parse {
        pos: 0,
        msg: String::from(msg),
    }
}

/// Reads the text form; factors may be omitted or reordered, and a bare base
/// means exponent 1. Repeated bases multiply.
pub fn parse_closed_form(text: &str) -> Result<ClosedForm> {
    let parts: Vec<&str> = text.trim().split('*').map(str::trim).collect();
    let coeff = parse_rational(parts[0]).map_err(|_| cf_err("bad coefficient"))?;
    if coeff.is_zero() {
        return Err(cf_err("zero coefficient"));
    }
    let mut cf = ClosedForm::rational(coeff);
    for part in &parts[1..] {
        let (base, e) = match part.split_once('^') {
            Some((b, e)) => (
                b,
                parse_rational(e.trim_start_matches('(').trim_end_matches(')'))
                    .map_err(|_| cf_err("bad exponent"))?,
            ),
            None => (*part, Rational::one()),
        };
        let slot = match base {
            "pi" => &mut cf.exp_pi,
            "log2" => &mut cf.exp_log2,
            "2" => &mut cf.exp_2,
            "3" => &mut cf.exp_3,
            _ => return Err(cf_err("unknown base")),
        };
        *slot += e;
    }
    Ok(cf)
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_closed_form(s)
    }
}

/// Product of constant enclosures at `digits + 10` digits.
pub fn closedform_eval(cf: &ClosedForm, digits: u32) -> Result<Enclosure> {
    let work = digits + 10;
    let prec = digits_to_bits(work);
    let mut acc = Enclosure::from_rational(&cf.coeff, prec);
    if !cf.exp_pi.is_zero() {
        acc = acc.mul(&const_pi(work).pow_rational(&cf.exp_pi)?);
    }
    if !cf.exp_log2.is_zero() {
        acc = acc.mul(&const_log2(work).pow_rational(&cf.exp_log2)?);
    }
    if !cf.exp_2.is_zero() {
        acc = acc.mul(&const_root(2, &cf.exp_2, work)?);
    }
    if !cf.exp_3.is_zero() {
        acc = acc.mul(&const_root(3, &cf.exp_3, work)?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;
    use crate::exact_arith::{int, rat};

    const PI_50: &str = "3.14159265358979323846264338327950288419716939937511";
    const LOG2_50: &str = "0.69314718055994530941723212145817656807550013436026";
    const SQRT2_50: &str = "1.41421356237309504880168872420969807856967187537695";
    const SQRT3_50: &str = "1.73205080756887729352744634150587236694280525381038";
    const CBRT2_50: &str = "1.25992104989487316476721060727822835057025146470151";

    fn dec(s: &str, prec: u32) -> Enclosure {
        let (ip, fp) = s.split_once('.').unwrap();
        let q = Rational::new(
            format!("{ip}{fp}").parse::<BigInt>().unwrap(),
            BigInt::from(10u32).pow(fp.len() as u32),
        );
        // digit strings are truncated, so allow one unit in the last place
        let ulp = Rational::new(BigInt::one(), BigInt::from(10u32).pow(fp.len() as u32));
        Enclosure::from_rational_ball(&q, &ulp, prec)
    }

    fn pinned(e: &Enclosure, s: &str) {
        assert!(e.radius_within(50), "radius {}", e.radius.to_sci_up(2));
        assert!(e.overlaps(&dec(s, 256)), "{} vs {s}", e.center.to_decimal(52));
    }

    #[test]
    fn fifty_digit_fixtures() {
        pinned(&const_pi(50), PI_50);
        pinned(&const_log2(50), LOG2_50);
        pinned(&const_root(2, &rat(1, 2), 50).unwrap(), SQRT2_50);
        pinned(&const_root(3, &rat(1, 2), 50).unwrap(), SQRT3_50);
        pinned(&const_root(2, &rat(1, 3), 50).unwrap(), CBRT2_50);
    }

    #[test]
    fn second_formulas_agree() {
        let p = series_bits(300).0;
        let prec = digits_to_bits(300);
        let pi2 = machin(&[(48, 18), (32, 57), (-20, 239)], p, true, prec);
        let l2 = machin(&[(18, 26), (-2, 4801), (8, 8749)], p, false, prec);
        assert!(pi2.overlaps(&const_pi(300)));
        assert!(l2.overlaps(&const_log2(300)));
        assert!(const_pi(300).radius_within(300));
    }

    #[test]
    fn small_precision_examples() {
        let pi = const_pi(20);
        assert!(pi.radius_within(20));
        assert!(pi.overlaps(&dec("3.14159265358979323846", 128)));
        let pi64 = const_pi(64);
        assert!(pi64.overlaps(&pi));
        assert!(pi.mul(&pi).overlaps(&dec("9.86960440108935861883", 128)));
        let l = const_log2(20);
        assert!(l.radius_within(20));
        assert!(l.overlaps(&dec("0.69314718055994530941", 128)));
        let r = const_root(2, &rat(1, 2), 30).unwrap();
        assert!(r.radius_within(30));
        assert!(r.mul(&r).contains_rational(&int(2)));
        assert!(r.overlaps(&dec("1.41421356237309504880168872420", 128)));
        let c = const_root(2, &rat(1, 3), 20).unwrap();
        assert!(c.mul(&c).mul(&c).contains_rational(&int(2)));
        assert_eq!(const_root(-2, &rat(1, 2), 20).unwrap_err(), Error::NegativeBase);
    }

    #[test]
    fn closed_form_examples() {
        let cf = parse_closed_form("5/4*pi^1*log2^0*2^0*3^-1/2").unwrap();
        assert_eq!(cf.to_string(), "5/4*pi^1*log2^0*2^0*3^-1/2");
        let v = closedform_eval(&cf, 20).unwrap();
        assert!(v.radius_within(19));
        assert!(v.overlaps(&dec("2.26724920529277231324", 128)));
        let thirty = closedform_eval(&ClosedForm::rational(int(30)), 20).unwrap();
        assert!(thirty.radius.is_zero());
        assert!(thirty.contains_rational(&int(30)));
        let v = closedform_eval(&parse_closed_form("3/4*pi^2").unwrap(), 20).unwrap();
        assert!(v.overlaps(&dec("7.40220330081701896412", 128)));
        assert!(parse_closed_form("0*pi").is_err());
        assert!(parse_closed_form("1*e^2").is_err());
    }

    #[test]
    fn refinement_is_nested() {
        let cf = parse_closed_form("9/2*pi^-1*2^-4/3*3^1/2").unwrap();
        let a = closedform_eval(&cf, 25).unwrap();
        let b = closedform_eval(&cf, 50).unwrap();
        assert!(a.contains(&b.center));
        assert!(const_pi(25).contains(&const_pi(50).center));
        assert!(const_log2(25).contains(&const_log2(50).center));
    }
}
