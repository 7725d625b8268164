//! Binary floating point over big integers, and outward-rounded enclosures.

use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

/// Smallest working precision in bits.
pub const MIN_PREC: u32 = 64;

/// Bits needed for `digits` decimal digits, plus guard bits.
pub fn digits_to_bits(digits: u32) -> u32 {
    let b = (digits as u64 * 3322).div_ceil(1000) + 16;
    (b as u32).max(MIN_PREC)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Round {
    Floor,
    Ceil,
}

/// `mant · 2^exp`, rounded to `prec` bits.
#[derive(Clone, Debug)]
pub struct BigFloat {
    pub mant: BigInt,
    pub exp: i64,
    pub prec: u32,
}

fn pow2(n: u64) -> BigInt {
    BigInt::one() << n
}

fn div_round(a: &BigInt, b: &BigInt, mode: Round) -> BigInt {
    match mode {
        Round::Floor => a.div_floor(b),
        Round::Ceil => -((-a).div_floor(b)),
    }
}

impl BigFloat {
    pub fn zero() -> Self {
        Self::exact(BigInt::zero(), 0)
    }

    /// Exact value `mant · 2^exp`, with the precision its mantissa needs.
    pub fn exact(mant: BigInt, exp: i64) -> Self {
        let prec = (mant.bits() as u32).max(MIN_PREC);
        Self { mant, exp, prec }
    }

    pub fn from_i64(x: i64) -> Self {
        Self::exact(x.into(), 0)
    }

    /// Exact value of a finite double; non-finite input maps to zero.
    pub fn from_f64(x: f64) -> Self {
        if !x.is_finite() || x == 0.0 {
            return Self::zero();
        }
        let bits = x.to_bits();
        let e = ((bits >> 52) & 0x7ff) as i64;
        let frac = (bits & ((1u64 << 52) - 1)) as i64;
        let (m, e) = if e == 0 { (frac, -1074) } else { (frac | (1 << 52), e - 1075) };
        let m = if x < 0.0 { -m } else { m };
        Self::exact(m.into(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self {
            mant: self.mant.abs(),
            ..self.clone()
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            mant: -&self.mant,
            ..self.clone()
        }
    }

    pub(crate) fn round(&self, prec: u32, mode: Round) -> Self {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return Self {
                mant: self.mant.clone(),
                exp: self.exp,
                prec,
            };
        }
        let sh = bits - prec as u64;
        Self {
            mant: div_round(&self.mant, &pow2(sh), mode),
            exp: self.exp + sh as i64,
            prec,
        }
    }

    pub(crate) fn add_exact(&self, o: &Self) -> Self {
        let e = self.exp.min(o.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &o.mant << (o.exp - e) as u64;
        Self::exact(a + b, e)
    }

    pub(crate) fn sub_exact(&self, o: &Self) -> Self {
        self.add_exact(&o.neg())
    }

    pub(crate) fn mul_exact(&self, o: &Self) -> Self {
        Self::exact(&self.mant * &o.mant, self.exp + o.exp)
    }

    /// `q` rounded to `prec` bits in direction `mode`.
    pub(crate) fn from_rational(q: &Rational, prec: u32, mode: Round) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let (n, d) = (q.numer(), q.denom());
        if d.is_one() && n.bits() <= prec as u64 {
            return Self::exact(n.clone(), 0).round(prec, mode);
        }
        let s = prec as i64 + 1 - (n.bits() as i64 - d.bits() as i64);
        let (sn, sd) = if s >= 0 {
            (n << s as u64, d.clone())
        } else {
            (n.clone(), d << (-s) as u64)
        };
        Self::exact(div_round(&sn, &sd, mode), -s).round(prec, mode)
    }

    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << self.exp as u64)
        } else {
            Rational::new(self.mant.clone(), pow2((-self.exp) as u64))
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let sh = (bits - 60).max(0);
        let top = (&self.mant >> sh as u64).to_f64().unwrap_or(0.0);
        let e = (self.exp + sh).clamp(-2000, 2000) as i32;
        top * libm_pow2(e)
    }

    /// `log10 |x|` to about double precision; `-inf` at zero.
    pub fn log10_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.mant.bits() as i64;
        let sh = (bits - 60).max(0);
        let top = (self.mant.abs() >> sh as u64).to_f64().unwrap_or(1.0);
        num_traits::Float::log10(top) + (self.exp + sh) as f64 * core::f64::consts::LOG10_2
    }

    pub fn cmp_value(&self, o: &Self) -> Ordering {
        let d = self.sub_exact(o);
        match d.mant.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    /// Fixed-point decimal with `digits` places, rounded to nearest.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scaled = self.to_rational() * Rational::from_integer(BigInt::from(10u32).pow(digits as u32));
        let r = scaled.round().to_integer();
        let neg = r.is_negative();
        let mut s = r.abs().to_str_radix(10);
        if s.len() <= digits {
            s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
        }
        let (ip, fp) = s.split_at(s.len() - digits);
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{ip}")
        } else {
            format!("{sign}{ip}.{fp}")
        }
    }

    /// Scientific notation with `sig` significant digits, rounded up in
    /// magnitude (used for radii).
    pub fn to_sci_up(&self, sig: u32) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let q = self.to_rational().abs();
        let mut e = num_traits::Float::floor(self.log10_abs()) as i64;
        let ten = BigInt::from(10u32);
        let lo = ten.pow(sig - 1);
        let hi = ten.pow(sig);
        loop {
            let p = sig as i64 - 1 - e;
            let scaled = if p >= 0 {
                &q * Rational::from_integer(ten.pow(p as u32))
            } else {
                &q / Rational::from_integer(ten.pow((-p) as u32))
            };
            let m = scaled.ceil().to_integer();
            if m >= hi {
                e += 1;
                continue;
            }
            if m < lo {
                e -= 1;
                continue;
            }
            let s = m.to_str_radix(10);
            let sign = if self.is_negative() { "-" } else { "" };
            return if sig == 1 {
                format!("{sign}{s}e{e}")
            } else {
                format!("{sign}{}.{}e{e}", &s[..1], &s[1..])
            };
        }
    }
}

fn libm_pow2(e: i32) -> f64 {
    num_traits::Float::powi(2.0f64, e)
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.prec as f64) * core::f64::consts::LOG10_2) as usize;
        f.write_str(&self.to_decimal(digits))
    }
}

/// `[center − radius, center + radius]`, guaranteed to contain the value.
#[derive(Clone, Debug)]
pub struct Enclosure {
    pub center: BigFloat,
    pub radius: BigFloat,
}

impl Enclosure {
    pub fn exact(x: BigFloat) -> Self {
        Self {
            center: x,
            radius: BigFloat::zero(),
        }
    }

    /// Encloses `[lo, hi]`, with the center rounded to `prec` bits.
    pub fn from_bounds(lo: &BigFloat, hi: &BigFloat, prec: u32) -> Self {
        let sum = lo.add_exact(hi);
        let mid = BigFloat::exact(sum.mant, sum.exp - 1);
        let c = mid.round(prec, Round::Floor);
        let half = hi.sub_exact(lo);
        let half = BigFloat::exact(half.mant, half.exp - 1);
        let r = half.add_exact(&mid.sub_exact(&c));
        Self {
            center: c,
            radius: r.round(MIN_PREC, Round::Ceil),
        }
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        let lo = BigFloat::from_rational(q, prec, Round::Floor);
        let hi = BigFloat::from_rational(q, prec, Round::Ceil);
        Self::from_bounds(&lo, &hi, prec)
    }

    /// `q ± tail`, with `tail ≥ 0`.
    pub fn from_rational_ball(q: &Rational, tail: &Rational, prec: u32) -> Self {
        let lo = BigFloat::from_rational(&(q - tail), prec, Round::Floor);
        let hi = BigFloat::from_rational(&(q + tail), prec, Round::Ceil);
        Self::from_bounds(&lo, &hi, prec)
    }

    pub fn lo(&self) -> BigFloat {
        self.center.sub_exact(&self.radius)
    }

    pub fn hi(&self) -> BigFloat {
        self.center.add_exact(&self.radius)
    }

    fn prec(&self) -> u32 {
        self.center.prec.max(MIN_PREC)
    }

    pub fn neg(&self) -> Self {
        Self {
            center: self.center.neg(),
            radius: self.radius.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        let lo = self.lo().add_exact(&o.lo()).round(p, Round::Floor);
        let hi = self.hi().add_exact(&o.hi()).round(p, Round::Ceil);
        Self::from_bounds(&lo, &hi, p)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        let (a, b, c, d) = (self.lo(), self.hi(), o.lo(), o.hi());
        let ps = [a.mul_exact(&c), a.mul_exact(&d), b.mul_exact(&c), b.mul_exact(&d)];
        let mut lo = &ps[0];
        let mut hi = &ps[0];
        for x in &ps[1..] {
            if x.cmp_value(lo) == Ordering::Less {
                lo = x;
            }
            if x.cmp_value(hi) == Ordering::Greater {
                hi = x;
            }
        }
        Self::from_bounds(&lo.round(p, Round::Floor), &hi.round(p, Round::Ceil), p)
    }

    /// `1/x`; fails when the enclosure contains zero.
    pub fn recip(&self) -> Result<Self> {
        let p = self.prec();
        let (lo, hi) = (self.lo(), self.hi());
        if lo.mant.sign() != hi.mant.sign() || lo.is_zero() || hi.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let inv = |x: &BigFloat, mode| BigFloat::from_rational(&x.to_rational().recip(), p, mode);
        Ok(Self::from_bounds(&inv(&hi, Round::Floor), &inv(&lo, Round::Ceil), p))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.recip()?))
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        let mut acc = Self::exact(BigFloat::from_i64(1));
        acc.center.prec = self.prec();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(self);
        }
        if e < 0 {
            acc = acc.recip()?;
        }
        Ok(acc)
    }

    /// Principal `q`-th root of a positive enclosure.
    pub fn root(&self, q: u32) -> Result<Self> {
        if q == 1 {
            return Ok(self.clone());
        }
        let (lo, hi) = (self.lo(), self.hi());
        if lo.is_negative() || lo.is_zero() {
            return Err(Error::NegativeBase);
        }
        let p = self.prec();
        Ok(Self::from_bounds(&root_of(&lo, q, p, Round::Floor), &root_of(&hi, q, p, Round::Ceil), p))
    }

    /// `x^e` for rational `e` and positive `x`.
    pub fn pow_rational(&self, e: &Rational) -> Result<Self> {
        if e.is_zero() {
            let mut one = Self::exact(BigFloat::from_i64(1));
            one.center.prec = self.prec();
            return Ok(one);
        }
        let q = e.denom().to_u32().ok_or(Error::DegenerateArgument("root index too large".into()))?;
        let p = e.numer().to_i64().ok_or(Error::DegenerateArgument("exponent too large".into()))?;
        self.root(q)?.powi(p)
    }

    pub fn contains(&self, x: &BigFloat) -> bool {
        self.lo().cmp_value(x) != Ordering::Greater && self.hi().cmp_value(x) != Ordering::Less
    }

    pub fn contains_rational(&self, x: &Rational) -> bool {
        self.lo().to_rational() <= *x && *x <= self.hi().to_rational()
    }

    pub fn overlaps(&self, o: &Self) -> bool {
        self.lo().cmp_value(&o.hi()) != Ordering::Greater && o.lo().cmp_value(&self.hi()) != Ordering::Greater
    }

    /// Whether `radius ≤ 10^{−digits}`.
    pub fn radius_within(&self, digits: u32) -> bool {
        self.radius.to_rational() * Rational::from_integer(BigInt::from(10u32).pow(digits)) <= Rational::one()
    }

    /// `center ± radius` with the center printed to `digits` places.
    pub fn format(&self, digits: usize) -> String {
        format!("{} ± {}", self.center.to_decimal(digits), self.radius.to_sci_up(2))
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = if self.radius.is_zero() {
            20
        } else {
            num_traits::Float::ceil(-self.radius.log10_abs()).max(0.0) as usize + 1
        };
        f.write_str(&self.format(digits))
    }
}

/// `x^{1/q}` rounded to about `prec` bits in direction `mode`, for `x > 0`.
fn root_of(x: &BigFloat, q: u32, prec: u32, mode: Round) -> BigFloat {
    let mag = x.mant.bits() as i64 + x.exp;
    let p = prec as i64 + 2 - Integer::div_floor(&mag, &(q as i64));
    let sh = x.exp + q as i64 * p;
    let n = if sh >= 0 {
        &x.mant << sh as u64
    } else {
        div_round(&x.mant, &pow2((-sh) as u64), mode)
    };
    let n: BigUint = n.to_biguint().unwrap_or_default();
    let mut r = n.nth_root(q);
    if mode == Round::Ceil && num_traits::pow::Pow::pow(&r, q) < n {
        r += 1u32;
    }
    BigFloat::exact(BigInt::from(r), -p).round(prec, mode)
}
