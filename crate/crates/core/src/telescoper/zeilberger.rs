//! Creative telescoping for one numeric parameter instance.
//!
//! With `ρ_n,r = A/B`, the combined term `(p1·ρ_n,r + p2)·F` equals
//! `(p1·A + p2·B)·T` where `T = F/B`. The ratio of `T` splits into monic
//! factors `k + β(n)`, which are paired into a Gosper form, and the unknowns
//! `x_0..x_d, p1, p2` are found by fraction-free elimination over Q[n].

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{linalg, normalize, Recurrence};
use crate::error::{Error, Result};
use crate::exact_arith::{Mono, MultiPoly, RatFunc, Rational, UniPoly, UniRatFunc, Var};
use crate::hypergeom_terms::{FactoredRatio, HypTerm};

/// Monic factor `k + b0 + b1·n`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Lin {
    b0: Rational,
    b1: Rational,
}

impl Lin {
    fn shifted(&self, s: i64) -> Lin {
        Lin {
            b0: &self.b0 + Rational::from_integer(s.into()),
            b1: self.b1.clone(),
        }
    }

    fn beta(&self) -> UniPoly {
        UniPoly::linear(Var::N, self.b0.clone(), self.b1.clone())
    }

    fn to_kpoly(&self) -> KPoly {
        KPoly(vec![
            UniRatFunc::from_poly(self.beta()),
            UniRatFunc::one(Var::N),
        ])
    }
}

/// Polynomial in `k` with coefficients in Q(n), ascending.
#[derive(Clone, Debug)]
struct KPoly(Vec<UniRatFunc>);

impl KPoly {
    fn constant(c: UniRatFunc) -> Self {
        KPoly(vec![c])
    }

    fn one() -> Self {
        Self::constant(UniRatFunc::one(Var::N))
    }

    fn coeff(&self, i: usize) -> UniRatFunc {
        self.0.get(i).cloned().unwrap_or_else(|| UniRatFunc::zero(Var::N))
    }

    fn mul(&self, o: &Self) -> Self {
        let mut out = vec![UniRatFunc::zero(Var::N); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        KPoly(out)
    }

    fn sub(&self, o: &Self) -> Self {
        let len = self.0.len().max(o.0.len());
        KPoly((0..len).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }

    fn neg(&self) -> Self {
        KPoly(self.0.iter().map(|c| c.neg()).collect())
    }

    fn product(lins: &[Lin]) -> Self {
        lins.iter().fold(Self::one(), |acc, l| acc.mul(&l.to_kpoly()))
    }

    /// `k^j` and `(k+1)^j`.
    fn power(j: usize, shift_one: bool) -> Self {
        let base = KPoly(vec![
            UniRatFunc::constant(Var::N, if shift_one { Rational::one() } else { Rational::zero() }),
            UniRatFunc::one(Var::N),
        ]);
        (0..j).fold(Self::one(), |acc, _| acc.mul(&base))
    }

    /// Converts to a MultiPoly in (n, k); coefficients must be polynomials.
    fn to_multipoly(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (i, c) in self.0.iter().enumerate() {
            debug_assert!(c.den().degree() == Some(0));
            let cn = MultiPoly::from_unipoly(&c.num().scale(&c.den().lc().recip()));
            let ki = MultiPoly::monomial(Rational::one(), Mono::from_pairs(&[(Var::K, i as u16)]));
            out = &out + &(&cn * &ki);
        }
        out
    }
}

fn lcm(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let g = a.gcd(b);
    &a.exact_div(&g).unwrap() * b
}

/// Splits a factored ratio into a Q(n) constant and monic k-factors with
/// their exponent signs.
fn split(fr: &FactoredRatio) -> Result<(UniRatFunc, Vec<Lin>, Vec<Lin>)> {
    let mut cst = UniRatFunc::constant(Var::N, fr.constant.clone());
    let (mut num, mut den) = (Vec::new(), Vec::new());
    for (p, e) in &fr.factors {
        if let Some(v) = Var::ALL.iter().find(|v| !matches!(v, Var::N | Var::K) && p.uses(**v)) {
            return Err(Error::UnboundVariable(*v));
        }
        let w = p.coeff(&Mono::from_pairs(&[(Var::K, 1)]));
        let u = p.coeff(&Mono::from_pairs(&[(Var::N, 1)]));
        let c = p.coeff(&Mono::one());
        let f = if w.is_zero() {
            UniRatFunc::from_poly(UniPoly::linear(Var::N, c, u))
        } else {
            let l = Lin {
                b0: &c / &w,
                b1: &u / &w,
            };
            for _ in 0..e.unsigned_abs() {
                if *e > 0 {
                    num.push(l.clone());
                } else {
                    den.push(l.clone());
                }
            }
            UniRatFunc::constant(Var::N, w)
        };
        for _ in 0..e.unsigned_abs() {
            cst = if *e > 0 { cst.mul(&f) } else { cst.div(&f)? };
        }
    }
    cancel(&mut num, &mut den);
    Ok((cst, num, den))
}

fn cancel(num: &mut Vec<Lin>, den: &mut Vec<Lin>) {
    let mut i = 0;
    while i < num.len() {
        if let Some(j) = den.iter().position(|d| *d == num[i]) {
            num.swap_remove(i);
            den.swap_remove(j);
        } else {
            i += 1;
        }
    }
}

/// Greedy pairing of `k+α` over `k+β` with `α − β ∈ {0, 1, 2, ...}`.
fn pair_shifts(num: &mut Vec<Lin>, den: &mut Vec<Lin>) -> Vec<Lin> {
    let mut c = Vec::new();
    'outer: loop {
        for i in 0..num.len() {
            for j in 0..den.len() {
                if num[i].b1 != den[j].b1 {
                    continue;
                }
                let h = &num[i].b0 - &den[j].b0;
                if !h.denom().is_one() || h < Rational::zero() {
                    continue;
                }
                let h: i64 = i64::try_from(h.numer()).unwrap_or(i64::MAX);
                let fa = num.swap_remove(i);
                den.swap_remove(j);
                for t in 1..=h {
                    c.push(fa.shifted(-t));
                }
                continue 'outer;
            }
        }
        return c;
    }
}

/// Searches for `p1(n)·F(n+r,k) + p2(n)·F(n,k) = G(n,k+1) − G(n,k)` with the
/// certificate numerator polynomial in `k` of degree at most `max_deg`.
///
/// `t` must have numeric parameters; `n` and `k` stay symbolic. The result is
/// normalized (coprime integer content, `lc(p2) > 0`) and verified exactly.
pub fn zeilberger_two_term(t: &HypTerm, r: u32, max_deg: usize) -> Result<Option<Recurrence>> {
    let rk = t.k_shift_factors()?;
    let rn = t.n_shift_factors(r)?;
    let (cn, an, bn) = split(&rn)?;
    let (ck, mut num, mut den) = split(&rk)?;
    // ratio of F/B: ρ_k · B(k)/B(k+1)
    num.extend(bn.iter().cloned());
    den.extend(bn.iter().map(|l| l.shifted(1)));
    cancel(&mut num, &mut den);
    let c_lins = pair_shifts(&mut num, &mut den);

    let a = KPoly::product(&num).mul(&KPoly::constant(ck));
    let b1: Vec<Lin> = den.iter().map(|l| l.shifted(-1)).collect();
    let b1p = KPoly::product(&b1);
    let c0 = KPoly::product(&c_lins);
    let big_a = KPoly::product(&an).mul(&KPoly::constant(cn));
    let big_b = KPoly::product(&bn);
    let col_p1 = c0.mul(&big_a).neg();
    let col_p2 = c0.mul(&big_b).neg();

    for d in 0..=max_deg {
        let mut cols: Vec<KPoly> = (0..=d)
            .map(|j| a.mul(&KPoly::power(j, true)).sub(&b1p.mul(&KPoly::power(j, false))))
            .collect();
        cols.push(col_p1.clone());
        cols.push(col_p2.clone());
        let rows = cols.iter().map(|c| c.0.len()).max().unwrap_or(1);
        let ncols = cols.len();
        // scale each column to polynomial entries
        let scales: Vec<UniPoly> = cols
            .iter()
            .map(|c| c.0.iter().fold(UniPoly::one(Var::N), |acc, x| lcm(&acc, x.den())))
            .collect();
        let mut m: Vec<Vec<UniPoly>> = (0..rows)
            .map(|i| {
                cols.iter()
                    .zip(&scales)
                    .map(|(c, s)| {
                        let y = c.coeff(i).mul(&UniRatFunc::from_poly(s.clone()));
                        y.num().scale(&y.den().lc().recip())
                    })
                    .collect()
            })
            .collect();
        let pivots = linalg::bareiss(&mut m, ncols);
        // a vector with (p1, p2) ≠ 0 exists unless both p-columns are pivots
        if pivots.contains(&(ncols - 2)) && pivots.contains(&(ncols - 1)) {
            continue;
        }
        for v in linalg::echelon_nullspace(&m, &pivots, ncols) {
            let v: Vec<UniRatFunc> = v
                .iter()
                .zip(&scales)
                .map(|(x, s)| x.mul(&UniRatFunc::from_poly(s.clone())))
                .collect();
            let (p1, p2) = (&v[ncols - 2], &v[ncols - 1]);
            if p1.is_zero() || p2.is_zero() {
                continue;
            }
            let den_lcm = v.iter().fold(UniPoly::one(Var::N), |acc, x| lcm(&acc, x.den()));
            let scale = UniRatFunc::from_poly(den_lcm);
            let polys: Vec<UniPoly> = v
                .iter()
                .map(|x| {
                    let y = x.mul(&scale);
                    y.num().scale(&y.den().lc().recip())
                })
                .collect();
            let x = KPoly(
                polys[..=d]
                    .iter()
                    .map(|p| UniRatFunc::from_poly(p.clone()))
                    .collect(),
            );
            let cert_num = b1p.mul(&x).to_multipoly();
            let cert_den = &c0.to_multipoly() * &big_b.to_multipoly();
            let rec = normalize(Recurrence {
                r,
                p1: polys[d + 1].clone(),
                p2: polys[d + 2].clone(),
                cert: RatFunc::new(cert_num, cert_den)?,
            });
            if rec.verify(t)? {
                return Ok(Some(rec));
            }
        }
    }
    Ok(None)
}

/// Tries `r` if given, else `r = 1` then `r = 2`.
pub fn derive(t: &HypTerm, r: Option<u32>, max_deg: usize) -> Result<Option<Recurrence>> {
    let rs: &[u32] = match r {
        Some(1) => &[1],
        Some(2) => &[2],
        Some(_) => return Err(Error::NoRecurrence),
        None => &[1, 2],
    };
    for &r in rs {
        match zeilberger_two_term(t, r, max_deg) {
            Ok(Some(rec)) => return Ok(Some(rec)),
            Ok(None) | Err(Error::NotHypergeometricInN { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}
