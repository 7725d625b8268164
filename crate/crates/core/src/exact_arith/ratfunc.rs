use core::fmt;

use num_traits::{One, Zero};

use super::multipoly::MultiPoly;
use super::rational::Rational;
use super::{Binding, Var};
use crate::error::{Error, Result};

/// Quotient of two [`MultiPoly`]s.
///
/// Only rational content is removed; no multivariate gcd is taken. The
/// denominator is scaled to coprime integer coefficients with a positive
/// leading term, and equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Self {
                num,
                den: MultiPoly::one(),
            };
        }
        if let Some(c) = den.as_constant() {
            return Self {
                num: num.scale(&c.recip()),
                den: MultiPoly::one(),
            };
        }
        let c = den.content().recip();
        Self {
            num: num.scale(&c),
            den: den.scale(&c),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::normalized(&self.num + &o.num, self.den.clone());
        }
        Self::normalized(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::normalized(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        Self::normalized(&self.num * p, self.den.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(&self.num * &o.den, &self.den * &o.num))
    }

    pub fn shift(&self, v: Var, h: &Rational) -> Self {
        Self::normalized(self.num.shift(v, h), self.den.shift(v, h))
    }

    pub fn subs(&self, v: Var, p: &MultiPoly) -> Result<Self> {
        Self::new(self.num.subs(v, p), self.den.subs(v, p))
    }

    /// Partial evaluation; fails if the denominator vanishes identically.
    pub fn bind(&self, b: &Binding) -> Result<Self> {
        let den = self.den.bind(b);
        if den.is_zero() {
            return Err(Error::Pole);
        }
        Ok(Self::normalized(self.num.bind(b), den))
    }

    pub fn eval(&self, b: &Binding) -> Result<Rational> {
        let d = self.den.eval(b)?;
        let n = self.num.eval(b)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(n / d)
    }

    /// Cross-multiplied difference `num·o.den − o.num·den`.
    pub fn cross_difference(&self, o: &Self) -> MultiPoly {
        &(&self.num * &o.den) - &(&o.num * &self.den)
    }

    pub fn equals(&self, o: &Self) -> bool {
        self.cross_difference(o).is_zero()
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &Self) -> bool {
        self.equals(o)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Canonical quotient; errors on a zero denominator.
pub fn ratfunc_normalize(num: MultiPoly, den: MultiPoly) -> Result<RatFunc> {
    RatFunc::new(num, den)
}

/// Exact value at a point binding every occurring variable.
pub fn ratfunc_eval(f: &RatFunc, point: &Binding) -> Result<Rational> {
    f.eval(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, rat};

    fn v(x: Var) -> MultiPoly {
        MultiPoly::var(x)
    }

    #[test]
    fn common_factor() {
        let n = v(Var::N);
        let f = ratfunc_normalize((&n * &n).scale(&int(2)), n.scale(&int(4))).unwrap();
        let g = RatFunc::from_poly(n.scale(&rat(1, 2)));
        assert_eq!(f, g);
        let at3 = Binding::new().with(Var::N, int(3));
        assert_eq!(ratfunc_eval(&g, &at3).unwrap(), rat(3, 2));
    }

    #[test]
    fn difference_of_squares_quotient() {
        let (n, k) = (v(Var::N), v(Var::K));
        let f = ratfunc_normalize(&(&n * &n) - &(&k * &k), &n - &k).unwrap();
        assert_eq!(f, RatFunc::from_poly(&n + &k));
    }

    #[test]
    fn errors() {
        assert_eq!(
            ratfunc_normalize(MultiPoly::one(), MultiPoly::zero()).unwrap_err(),
            Error::ZeroDenominator
        );
        let n = v(Var::N);
        let f = RatFunc::new(MultiPoly::one(), n).unwrap();
        assert_eq!(
            ratfunc_eval(&f, &Binding::new().with(Var::N, int(0))),
            Err(Error::Pole)
        );
        assert_eq!(
            ratfunc_eval(&f, &Binding::new()),
            Err(Error::UnboundVariable(Var::N))
        );
    }

    #[test]
    fn denominator_sign_canonical() {
        let n = v(Var::N);
        let f = RatFunc::new(MultiPoly::one(), (-&n).scale(&int(6))).unwrap();
        assert_eq!(f.den(), &n);
        assert_eq!(f.num(), &MultiPoly::constant(rat(-1, 6)));
    }
}
