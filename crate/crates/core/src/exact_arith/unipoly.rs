use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
#[allow(unused_imports)] // inherent with std, needed without it
use num_traits::Float;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{format_rational, rational_to_f64, Rational};
use super::Var;
use crate::error::{Error, Result};

/// Dense univariate polynomial with ascending rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(var: Var, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { var, coeffs }
    }

    pub fn from_ints(var: Var, cs: &[i64]) -> Self {
        Self::new(var, cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero(var: Var) -> Self {
        Self { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::new(var, vec![c])
    }

    pub fn x(var: Var) -> Self {
        Self::new(var, vec![Rational::zero(), Rational::one()])
    }

    /// `c0 + c1·x`
    pub fn linear(var: Var, c0: Rational, c1: Rational) -> Self {
        Self::new(var, vec![c0, c1])
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rational_to_f64(c);
        }
        acc
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// `p(a·x + b)`
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let lin = Self::linear(self.var, b.clone(), a.clone());
        let mut acc = Self::zero(self.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(self.var, c.clone());
        }
        acc
    }

    /// `p(x + h)`
    pub fn shift(&self, h: &Rational) -> Self {
        self.compose_affine(&Rational::one(), h)
    }

    pub fn derivative(&self) -> Self {
        let cs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        Self::new(self.var, cs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.lc();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(self.var), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(self.var, q), Self::new(self.var, r))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc();
        self.scale(&lc.recip())
    }

    /// Splits into `content · primitive`, where the primitive part has
    /// coprime integer coefficients and a positive leading coefficient.
    pub fn primitive(&self) -> (Rational, Self) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let c = content(&self.coeffs, self.lc().is_negative());
        (c.clone(), self.scale(&c.recip()))
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive().1;
        let mut b = other.primitive().1;
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.primitive().1;
        }
        a.monic()
    }

    /// Resultant over Q.
    pub fn resultant(&self, other: &Self) -> Rational {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return Rational::zero();
        };
        if n == 0 {
            return pow_rat(&other.lc(), m);
        }
        if m < n {
            let r = other.resultant(self);
            return if (m * n) % 2 == 1 { -r } else { r };
        }
        let (_, r) = self.divrem(other);
        let Some(dr) = r.degree() else {
            return Rational::zero();
        };
        let s = if (m * n) % 2 == 1 { -Rational::one() } else { Rational::one() };
        s * pow_rat(&other.lc(), m - dr) * other.resultant(&r)
    }

    /// Newton interpolation through `(xs[i], ys[i])`.
    pub fn interpolate(var: Var, xs: &[Rational], ys: &[Rational]) -> Self {
        let n = xs.len();
        let mut dd: Vec<Rational> = ys.to_vec();
        for lvl in 1..n {
            for i in (lvl..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - lvl]);
            }
        }
        let mut acc = Self::zero(var);
        for i in (0..n).rev() {
            let lin = Self::linear(var, -xs[i].clone(), Rational::one());
            acc = &(&acc * &lin) + &Self::constant(var, dd[i].clone());
        }
        acc
    }

    /// Coefficient list `[c0,c1,...]`.
    pub fn format_coeffs(&self) -> String {
        let mut s = String::from("[");
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&format_rational(c));
        }
        if self.coeffs.is_empty() {
            s.push('0');
        }
        s.push(']');
        s
    }
}

fn pow_rat(x: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Positive rational `c` such that every `x/c` is an integer and the integers
/// are coprime; negated when `negate` is set.
pub(crate) fn content(xs: &[Rational], negate: bool) -> Rational {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for x in xs {
        g = g.gcd(x.numer());
        l = l.lcm(x.denom());
    }
    if g.is_zero() {
        return Rational::one();
    }
    let c = Rational::new(g, l);
    if negate {
        -c
    } else {
        c
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let cs = (0..n).map(|i| self.coeff(i) + o.coeff(i)).collect();
        UniPoly::new(self.var, cs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let cs = (0..n).map(|i| self.coeff(i) - o.coeff(i)).collect();
        UniPoly::new(self.var, cs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut cs = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                cs[i + j] += a * b;
            }
        }
        UniPoly::new(self.var, cs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{}", format_rational(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", format_rational(&a))?;
                    }
                    write!(f, "{}", self.var)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `p(x + h)`.
pub fn poly_shift(p: &UniPoly, h: &Rational) -> UniPoly {
    p.shift(h)
}

/// All rational roots of `p`, repeated by multiplicity, in ascending order.
///
/// Candidates come from floating-point approximations of the roots of the
/// square-free part; every accepted root is confirmed by exact division.
pub fn rational_roots(p: &UniPoly) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomialRoots);
    }
    let mut rest = p.primitive().1;
    let mut roots = Vec::new();
    loop {
        let Some(d) = rest.degree() else { break };
        if d == 0 {
            break;
        }
        if rest.coeffs[0].is_zero() {
            roots.push(Rational::zero());
            rest = UniPoly::new(rest.var, rest.coeffs[1..].to_vec());
            continue;
        }
        if d == 1 {
            roots.push(-&rest.coeffs[0] / &rest.coeffs[1]);
            break;
        }
        let sqf = match rest.exact_div(&rest.gcd(&rest.derivative())) {
            Some(q) => q.primitive().1,
            None => rest.clone(),
        };
        let Some(r) = find_one_rational_root(&sqf) else {
            break;
        };
        let lin = UniPoly::linear(rest.var, -r.clone(), Rational::one());
        while let Some(q) = rest.exact_div(&lin) {
            roots.push(r.clone());
            rest = q;
        }
    }
    roots.sort();
    Ok(roots)
}

fn find_one_rational_root(p: &UniPoly) -> Option<Rational> {
    let lc = p.lc().numer().abs();
    let dens = small_divisors(&lc);
    for (re, im) in complex_roots(p) {
        if im.abs() > 1e-6 * (1.0 + re.abs()) {
            continue;
        }
        let mut cands: Vec<Rational> = Vec::new();
        match &dens {
            Some(ds) => {
                for q in ds {
                    let c = (re * (*q as f64)).round();
                    if !c.is_finite() {
                        continue;
                    }
                    let c = c as i128;
                    for dc in -1..=1i128 {
                        cands.push(Rational::new(BigInt::from(c + dc), BigInt::from(*q)));
                    }
                }
            }
            None => cands.extend(convergents(re)),
        }
        for c in cands {
            if p.eval(&c).is_zero() {
                return Some(c);
            }
        }
    }
    None
}

/// Divisors of `n` when it is small enough to enumerate.
fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.to_u64()?;
    if n > 1u64 << 40 {
        return None;
    }
    let mut ds = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            ds.push(i);
            if i * i != n {
                ds.push(n / i);
            }
        }
        i += 1;
    }
    ds.sort_unstable();
    Some(ds)
}

fn convergents(x: f64) -> Vec<Rational> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut y = x;
    for _ in 0..30 {
        let a = y.floor();
        if !a.is_finite() || a.abs() > 1e15 {
            break;
        }
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        out.push(Rational::new(h2.clone(), k2.clone()));
        h0 = core::mem::replace(&mut h1, h2);
        k0 = core::mem::replace(&mut k1, k2);
        let frac = y - a;
        if frac.abs() < 1e-12 {
            break;
        }
        y = 1.0 / frac;
    }
    out
}

/// Durand-Kerner iteration on the monic float image of `p`.
fn complex_roots(p: &UniPoly) -> Vec<(f64, f64)> {
    let d = p.degree().unwrap_or(0);
    if d == 0 {
        return Vec::new();
    }
    let lc = p.lc();
    let a: Vec<f64> = p.coeffs.iter().map(|c| rational_to_f64(&(c / &lc))).collect();
    let bound = 1.0 + a[..d].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<(f64, f64)> = (0..d)
        .map(|i| {
            let t = 0.4 + 2.0 * core::f64::consts::PI * (i as f64) / (d as f64);
            (bound * 0.5 * t.cos(), bound * 0.5 * t.sin())
        })
        .collect();
    let eval = |x: (f64, f64)| {
        let mut acc = (0.0, 0.0);
        for c in a.iter().rev() {
            acc = cmul(acc, x);
            acc.0 += c;
        }
        acc
    };
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..d {
            let mut den = (1.0, 0.0);
            for j in 0..d {
                if i != j {
                    den = cmul(den, (z[i].0 - z[j].0, z[i].1 - z[j].1));
                }
            }
            let step = cdiv(eval(z[i]), den);
            if step.0.is_finite() && step.1.is_finite() {
                z[i].0 -= step.0;
                z[i].1 -= step.1;
                delta = delta.max(step.0.abs() + step.1.abs());
            }
        }
        if delta < 1e-15 * bound {
            break;
        }
    }
    z
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cdiv(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let m = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / m, (a.1 * b.0 - a.0 * b.1) / m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    fn j(cs: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::J, cs)
    }

    #[test]
    fn shift_examples() {
        assert_eq!(poly_shift(&j(&[0, 0, 1]), &rat(1, 1)), j(&[1, 2, 1]));
        assert_eq!(poly_shift(&j(&[17, 42, 27]), &rat(1, 1)), j(&[86, 96, 27]));
        assert_eq!(poly_shift(&j(&[5]), &rat(-7, 3)), j(&[5]));
    }

    #[test]
    fn roots_examples() {
        let p = &j(&[1, 1]) * &j(&[1, 3]);
        assert_eq!(rational_roots(&p).unwrap(), vec![rat(-1, 1), rat(-1, 3)]);
        assert!(rational_roots(&j(&[17, 42, 27])).unwrap().is_empty());
        assert_eq!(rational_roots(&j(&[0, 0, 0, 1])).unwrap(), vec![rat(0, 1); 3]);
        assert_eq!(rational_roots(&UniPoly::zero(Var::J)), Err(Error::ZeroPolynomialRoots));
    }

    #[test]
    fn roots_with_multiplicity_and_large_denominators() {
        let mut p = j(&[1]);
        for r in [rat(-2, 7), rat(-2, 7), rat(5, 12), rat(13, 8), rat(13, 8), rat(13, 8)] {
            p = &p * &UniPoly::linear(Var::J, -r, rat(1, 1));
        }
        p = &p * &j(&[3, 1, 1]);
        let got = rational_roots(&p).unwrap();
        assert_eq!(
            got,
            vec![rat(-2, 7), rat(-2, 7), rat(5, 12), rat(13, 8), rat(13, 8), rat(13, 8)]
        );
    }

    #[test]
    fn divrem_gcd_resultant() {
        let a = &j(&[1, 1]) * &j(&[2, 1]);
        let b = &j(&[1, 1]) * &j(&[3, 1]);
        assert_eq!(a.gcd(&b), j(&[1, 1]));
        let (q, r) = a.divrem(&j(&[1, 1]));
        assert_eq!(q, j(&[2, 1]));
        assert!(r.is_zero());
        // Res(x+1, x+3) = (-1) - (-3) evaluated: b(-1) = 2
        assert_eq!(j(&[1, 1]).resultant(&j(&[3, 1])), rat(2, 1));
        assert!(a.resultant(&b).is_zero());
        // Res(x^2+1, x^2-1) = prod over roots of x^2+1 of (x^2-1) = (-2)(-2) = 4
        assert_eq!(j(&[1, 0, 1]).resultant(&j(&[-1, 0, 1])), rat(4, 1));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = j(&[3, -1, 0, 2]);
        let xs: Vec<_> = (0..4).map(|i| rat(i, 1)).collect();
        let ys: Vec<_> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(UniPoly::interpolate(Var::J, &xs, &ys), p);
    }

    #[test]
    fn display_and_coeff_list() {
        let p = UniPoly::new(Var::J, vec![rat(17, 1), rat(-42, 1), rat(27, 2)]);
        assert_eq!(alloc::format!("{p}"), "27/2*j^2 - 42*j + 17");
        assert_eq!(p.format_coeffs(), "[17,-42,27/2]");
    }
}
