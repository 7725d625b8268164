use core::fmt;

use num_traits::{One, Zero};

use super::rational::Rational;
use super::unipoly::UniPoly;
use super::Var;
use crate::error::{Error, Result};

/// Element of Q(x): numerator and monic denominator with trivial gcd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniRatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl UniRatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let var = num.var();
        if num.is_zero() {
            return Ok(Self::zero(var));
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap());
        let lc = d.lc();
        n = n.scale(&lc.recip());
        d = d.scale(&lc.recip());
        Ok(Self {
            num: n.with_var(var),
            den: d.with_var(var),
        })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        let var = p.var();
        Self {
            num: p,
            den: UniPoly::one(var),
        }
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(var, c))
    }

    pub fn zero(var: Var) -> Self {
        Self::from_poly(UniPoly::zero(var))
    }

    pub fn one(var: Var) -> Self {
        Self::from_poly(UniPoly::one(var))
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        Self::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .unwrap()
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.var());
        }
        // Cross-cancel before multiplying to keep degrees small.
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n = &self.num.exact_div(&g1).unwrap() * &o.num.exact_div(&g2).unwrap();
        let d = &self.den.exact_div(&g2).unwrap() * &o.den.exact_div(&g1).unwrap();
        let lc = d.lc();
        Self {
            num: n.scale(&lc.recip()),
            den: d.scale(&lc.recip()),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.var());
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(x) / d)
    }

    /// `f(a·x + b)`, renamed to `var`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational, var: Var) -> Self {
        Self::new(
            self.num.compose_affine(a, b).with_var(var),
            self.den.compose_affine(a, b).with_var(var),
        )
        .unwrap()
    }

    pub fn shift(&self, h: &Rational) -> Self {
        self.compose_affine(&Rational::one(), h, self.var())
    }

    /// Limit as x → ∞ when finite.
    pub fn limit_at_infinity(&self) -> Option<Rational> {
        if self.num.is_zero() {
            return Some(Rational::zero());
        }
        let (dn, dd) = (self.num.degree()?, self.den.degree()?);
        match dn.cmp(&dd) {
            core::cmp::Ordering::Less => Some(Rational::zero()),
            core::cmp::Ordering::Equal => Some(self.num.lc() / self.den.lc()),
            core::cmp::Ordering::Greater => None,
        }
    }
}

impl fmt::Display for UniRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    #[test]
    fn field_ops_reduce() {
        let x = UniPoly::x(Var::N);
        let one = UniPoly::one(Var::N);
        let a = UniRatFunc::new(&x * &x, &x + &one).unwrap();
        let b = UniRatFunc::new(&x + &one, x.clone()).unwrap();
        assert_eq!(a.mul(&b), UniRatFunc::from_poly(x.clone()));
        let s = a.add(&a.neg());
        assert!(s.is_zero());
        assert_eq!(a.eval(&rat(1, 1)).unwrap(), rat(1, 2));
        assert_eq!(b.eval(&rat(0, 1)), Err(Error::Pole));
        assert_eq!(b.limit_at_infinity(), Some(rat(1, 1)));
    }
}
