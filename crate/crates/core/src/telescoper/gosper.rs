//! Indefinite hypergeometric summation.

use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::linalg;
use crate::error::{Error, Result};
use crate::exact_arith::{rational_roots, MultiPoly, RatFunc, Rational, UniPoly, Var};

/// Split of a term ratio as `a(k)/b(k) · c(k+1)/c(k)` with
/// `gcd(a(k), b(k+h)) = 1` for every integer `h ≥ 0`.
pub(crate) struct GosperForm {
    pub a: UniPoly,
    pub b: UniPoly,
    pub c: UniPoly,
}

pub(crate) fn gosper_form(num: &UniPoly, den: &UniPoly) -> Result<GosperForm> {
    let z = num.lc() / den.lc();
    let mut a = num.monic();
    let mut b = den.monic();
    let mut c = UniPoly::one(Var::K);
    for h in dispersion_set(&a, &b)? {
        let hq = Rational::from_integer(h.into());
        let g = a.gcd(&b.shift(&hq));
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        a = a.exact_div(&g).unwrap();
        b = b.exact_div(&g.shift(&-&hq)).unwrap();
        for i in 1..=h {
            c = &c * &g.shift(&-Rational::from_integer(i.into()));
        }
    }
    Ok(GosperForm { a: a.scale(&z), b, c })
}

/// Nonnegative integers `h` with `Res_k(a(k), b(k+h)) = 0`, ascending.
fn dispersion_set(a: &UniPoly, b: &UniPoly) -> Result<Vec<u64>> {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return Ok(Vec::new());
    };
    if da == 0 || db == 0 {
        return Ok(Vec::new());
    }
    let pts = da * db + 1;
    let xs: Vec<Rational> = (0..pts).map(|i| Rational::from_integer(i.into())).collect();
    let ys: Vec<Rational> = xs.iter().map(|h| a.resultant(&b.shift(h))).collect();
    let res = UniPoly::interpolate(Var::K, &xs, &ys);
    if res.is_zero() {
        return Ok(Vec::new());
    }
    let mut out: Vec<u64> = rational_roots(&res)?
        .into_iter()
        .filter(|h| h.denom().is_one() && !h.is_negative())
        .filter_map(|h| h.numer().to_u64())
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Candidate degree for `x` in `a(k)x(k+1) − b(k−1)x(k) = c(k)`, or `None`
/// when no polynomial solution can exist.
fn degree_bound(a: &UniPoly, b1: &UniPoly, c: &UniPoly) -> Option<usize> {
    let dc = c.degree()? as i64;
    let plus = a + b1;
    let minus = a - b1;
    let lp = plus.degree().map_or(-1, |d| d as i64);
    let lm = minus.degree().map_or(-1, |d| d as i64);
    let d = if lm >= lp {
        dc - lm
    } else {
        let d0 = dc - lp + 1;
        let l = -Rational::from_integer(2.into()) * minus.coeff((lp - 1) as usize) / plus.lc();
        match l.to_integer().to_i64() {
            Some(li) if l.denom().is_one() => d0.max(li),
            _ => d0,
        }
    };
    usize::try_from(d).ok()
}

/// Polynomial `x` of degree `d` solving `a(k)x(k+1) − b1(k)x(k) = c(k)`.
pub(crate) fn solve_polynomial(a: &UniPoly, b1: &UniPoly, c: &UniPoly, d: usize) -> Option<UniPoly> {
    let one = Rational::one();
    let cols: Vec<UniPoly> = (0..=d)
        .map(|j| {
            let kj = UniPoly::x(Var::K).pow(j as u32);
            &(a * &kj.shift(&one)) - &(b1 * &kj)
        })
        .collect();
    let rows = cols
        .iter()
        .chain(core::iter::once(c))
        .filter_map(|p| p.degree())
        .max()
        .unwrap_or(0)
        + 1;
    let m: Vec<Vec<Rational>> = (0..rows)
        .map(|i| cols.iter().map(|p| p.coeff(i)).collect())
        .collect();
    let rhs: Vec<Rational> = (0..rows).map(|i| c.coeff(i)).collect();
    let x = linalg::solve(m, rhs, d + 1, &Rational::zero())?;
    Some(UniPoly::new(Var::K, x))
}

/// Certificate `R(k)` with `R(k+1)·rho(k) − R(k) = 1`, so that `G = R·t`
/// is an antidifference of the term `t` with ratio `rho`; `None` when `t`
/// has no hypergeometric antidifference.
pub fn gosper(rho: &RatFunc) -> Result<Option<RatFunc>> {
    let univariate = |p: &MultiPoly| {
        p.to_unipoly(Var::K).ok_or_else(|| {
            let v = Var::ALL.iter().find(|v| **v != Var::K && p.uses(**v)).unwrap();
            Error::UnboundVariable(*v)
        })
    };
    let num = univariate(rho.num())?;
    let den = univariate(rho.den())?;
    if num.is_zero() {
        return Ok(None);
    }
    let GosperForm { a, b, c } = gosper_form(&num, &den)?;
    let b1 = b.shift(&-Rational::one());
    let Some(d) = degree_bound(&a, &b1, &c) else {
        return Ok(None);
    };
    let Some(x) = solve_polynomial(&a, &b1, &c, d) else {
        return Ok(None);
    };
    if x.is_zero() {
        return Ok(None);
    }
    let cert = RatFunc::new(
        MultiPoly::from_unipoly(&(&b1 * &x)),
        MultiPoly::from_unipoly(&c),
    )?;
    let lhs = cert.shift(Var::K, &Rational::one()).mul(rho).sub(&cert);
    Ok(if lhs == RatFunc::one() { Some(cert) } else { None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, Binding};

    fn k_poly(cs: &[i64]) -> MultiPoly {
        MultiPoly::from_unipoly(&UniPoly::from_ints(Var::K, cs))
    }

    fn at(f: &RatFunc, k: i64) -> Rational {
        f.eval(&Binding::new().with(Var::K, int(k))).unwrap()
    }

    #[test]
    fn k_times_factorial() {
        // rho = (k+1)^2 / k
        let rho = RatFunc::new(k_poly(&[1, 2, 1]), k_poly(&[0, 1])).unwrap();
        let r = gosper(&rho).unwrap().unwrap();
        // G(K+1) − G(1) = Σ_{k=1}^{K} k·k!, compared with (K+1)! − 1
        let fact = |n: i64| (1..=n).fold(int(1), |acc, i| acc * int(i));
        let g = |k: i64| at(&r, k) * int(k) * fact(k);
        for big_k in 1..=10 {
            let brute: Rational = (1..=big_k).map(|k| int(k) * fact(k)).sum();
            assert_eq!(g(big_k + 1) - g(1), brute);
            assert_eq!(brute, fact(big_k + 1) - int(1));
        }
    }

    #[test]
    fn constant_term() {
        let r = gosper(&RatFunc::one()).unwrap().unwrap();
        assert_eq!(r, RatFunc::from_poly(k_poly(&[0, 1])));
    }

    #[test]
    fn reciprocal_factorial_is_not_summable() {
        let rho = RatFunc::new(MultiPoly::one(), k_poly(&[1, 1])).unwrap();
        assert!(gosper(&rho).unwrap().is_none());
        // nor does x(k+1) − k·x(k) = 1 have a solution of degree ≤ 6
        let a = UniPoly::one(Var::K);
        let b1 = UniPoly::from_ints(Var::K, &[0, 1]);
        let c = UniPoly::one(Var::K);
        for d in 0..=6 {
            assert!(solve_polynomial(&a, &b1, &c, d).is_none());
        }
    }

    #[test]
    fn rejects_foreign_variable() {
        let rho = RatFunc::new(MultiPoly::var(Var::N), k_poly(&[1, 1])).unwrap();
        assert_eq!(gosper(&rho), Err(Error::UnboundVariable(Var::N)));
    }

    #[test]
    fn gosper_form_separates_shifts() {
        // (k+3)/(k) → a = 1, b = 1, c = k(k+1)(k+2)
        let num = UniPoly::from_ints(Var::K, &[3, 1]);
        let f = gosper_form(&num, &UniPoly::x(Var::K)).unwrap();
        assert_eq!(f.a, UniPoly::one(Var::K));
        assert_eq!(f.b, UniPoly::one(Var::K));
        assert_eq!(f.c, UniPoly::from_ints(Var::K, &[0, 2, 3, 1]));
    }
}
