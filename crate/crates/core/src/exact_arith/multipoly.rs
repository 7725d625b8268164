use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use super::unipoly::{content, UniPoly};
use super::{Binding, Var, NVARS};
use crate::error::{Error, Result};

/// Exponent vector over the fixed variable universe, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub [u16; NVARS]);

impl Mono {
    pub fn one() -> Self {
        Mono([0; NVARS])
    }

    pub fn from_pairs(pairs: &[(Var, u16)]) -> Self {
        let mut m = Self::one();
        for (v, e) in pairs {
            m.0[v.index()] += e;
        }
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    fn mul(&self, o: &Mono) -> Mono {
        let mut m = *self;
        for i in 0..NVARS {
            m.0[i] += o.0[i];
        }
        m
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Sparse polynomial over Q in the variables a..f, n, k, j.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Mono, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Mono::one(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Rational::one(), Mono::from_pairs(&[(v, 1)]))
    }

    pub fn monomial(c: Rational, m: Mono) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `c0 + Σ ci·vi`
    pub fn affine(c0: Rational, lin: &[(Var, Rational)]) -> Self {
        let mut p = Self::constant(c0);
        for (v, c) in lin {
            p.add_term(Mono::from_pairs(&[(*v, 1)]), c.clone());
        }
        p
    }

    pub fn from_unipoly(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(Mono::from_pairs(&[(p.var(), i as u16)]), c.clone());
        }
        out
    }

    pub fn add_term(&mut self, m: Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Mono::one()).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Largest term in graded-lexicographic order.
    pub fn leading(&self) -> Option<(&Mono, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Rational content, signed so that the leading coefficient becomes positive.
    pub fn content(&self) -> Rational {
        let cs: Vec<Rational> = self.terms.values().cloned().collect();
        let neg = self.leading().is_some_and(|(_, c)| c.is_negative());
        content(&cs, neg)
    }

    /// Coefficients with respect to `v`: `self = Σ out[i]·v^i`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let mut out = vec![Self::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let mut m2 = *m;
            let e = m2.0[v.index()] as usize;
            m2.0[v.index()] = 0;
            out[e].add_term(m2, c.clone());
        }
        out
    }

    /// Substitutes `v := p`.
    pub fn subs(&self, v: Var, p: &MultiPoly) -> Self {
        if !self.uses(v) {
            return self.clone();
        }
        let cs = self.coeffs_in(v);
        let mut acc = Self::zero();
        for c in cs.iter().rev() {
            acc = &(&acc * p) + c;
        }
        acc
    }

    /// Substitutes `v := v + h`.
    pub fn shift(&self, v: Var, h: &Rational) -> Self {
        self.subs(v, &Self::affine(h.clone(), &[(v, Rational::one())]))
    }

    /// Substitutes every bound variable by its value.
    pub fn bind(&self, b: &Binding) -> Self {
        let mut pows: Vec<Vec<Rational>> = vec![vec![Rational::one()]; NVARS];
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut c = c.clone();
            let mut m2 = *m;
            for v in Var::ALL {
                let e = m.exp(v) as usize;
                if e == 0 {
                    continue;
                }
                if let Some(x) = b.get(v) {
                    let pv = &mut pows[v.index()];
                    while pv.len() <= e {
                        let next = pv.last().unwrap() * x;
                        pv.push(next);
                    }
                    c *= &pv[e];
                    m2.0[v.index()] = 0;
                }
            }
            out.add_term(m2, c);
        }
        out
    }

    pub fn eval(&self, b: &Binding) -> Result<Rational> {
        let p = self.bind(b);
        if let Some((m, _)) = p.leading() {
            if let Some(v) = Var::ALL.into_iter().find(|v| m.exp(*v) > 0) {
                return Err(Error::UnboundVariable(v));
            }
        }
        Ok(p.as_constant().unwrap_or_else(Rational::zero))
    }

    /// Univariate view when only `v` occurs.
    pub fn to_unipoly(&self, v: Var) -> Option<UniPoly> {
        let mut cs = vec![Rational::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            if m.degree() != m.exp(v) as u32 {
                return None;
            }
            cs[m.exp(v) as usize] = c.clone();
        }
        Some(UniPoly::new(v, cs))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        let (small, big) = if self.terms.len() <= o.terms.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut out = MultiPoly::zero();
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let mut parts = Vec::new();
            if !a.is_one() || m.degree() == 0 {
                parts.push(format_rational(&a));
            }
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => parts.push(alloc::string::String::from(v.name())),
                    e => parts.push(alloc::format!("{v}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, rat};

    fn v(x: Var) -> MultiPoly {
        MultiPoly::var(x)
    }

    #[test]
    fn difference_of_squares() {
        let n = v(Var::N);
        let k = v(Var::K);
        let lhs = &(&n - &k) * &(&n + &k);
        let rhs = &(&n * &n) - &(&k * &k);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn shift_and_subs() {
        let k = v(Var::K);
        let p = &(&k * &k) + &MultiPoly::constant(int(3));
        let q = p.shift(Var::K, &int(1));
        let expect = &(&(&k * &k) + &k.scale(&int(2))) + &MultiPoly::constant(int(4));
        assert_eq!(q, expect);
        assert_eq!(q.shift(Var::K, &int(-1)), p);
    }

    #[test]
    fn eval_and_unbound() {
        let p = &v(Var::N).scale(&rat(1, 2)) * &v(Var::K);
        let b = Binding::new().with(Var::N, int(3)).with(Var::K, int(2));
        assert_eq!(p.eval(&b).unwrap(), int(3));
        let b = Binding::new().with(Var::N, int(3));
        assert_eq!(p.eval(&b), Err(Error::UnboundVariable(Var::K)));
    }

    #[test]
    fn display_is_graded() {
        let n = v(Var::N);
        let p = &(&n.pow(4).scale(&int(4)) - &n.pow(3).scale(&int(2))) + &v(Var::A);
        assert_eq!(alloc::format!("{p}"), "4*n^4 - 2*n^3 + a");
    }
}
