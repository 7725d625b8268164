//! Accelerated series from a verified two-term recurrence.
//!
//! Iterating `𝓕(n) = g1(n) + g2(n)·𝓕(n+r)` from `n0` gives
//! `𝓕(n0) = Σ_j (Π_{i<j} g2(n_i)) · g1(n_j)` with `n_j = n0 + r·j`, where
//! `g1(n) = −R(n,0)·F(n,0)/p2(n)` and `g2(n) = −p1(n)/p2(n)`. Dividing by
//! `F(n0,0)` turns every term into an exact rational.

mod chu;

pub use chu::{chu_normalize, parse_series, stream_proportional, ChuSeries};

use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{rational_roots, rational_to_f64, Binding, Rational, UniPoly, UniRatFunc, Var};
use crate::hypergeom_terms::{FactoredRatio, HypTerm};
use crate::telescoper::{Recurrence, SymbolicRecurrence};

/// The normalized accelerated terms `t̂_j = t_j / F(n0,0)`.
#[derive(Clone, Debug)]
pub struct AccelStream {
    n0: Rational,
    r: u32,
    /// `−R(n,0)/p2(n)`.
    h: UniRatFunc,
    /// `g2(n) · F(n+r,0)/F(n,0)`.
    step: UniRatFunc,
    /// `t̂_{j+1}/t̂_j` in `j`.
    ratio: UniRatFunc,
}

impl AccelStream {
    pub fn n0(&self) -> &Rational {
        &self.n0
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn ratio(&self) -> &UniRatFunc {
        &self.ratio
    }

    fn point(&self, j: usize) -> Rational {
        &self.n0 + Rational::from_integer((self.r as u64 * j as u64).into())
    }

    /// `t̂_0 = −R(n0,0)/p2(n0)`.
    pub fn t0(&self) -> Result<Rational> {
        self.h.eval(&self.n0)
    }

    /// Terms `j = 0..count` from the product formula.
    pub fn terms(&self, count: usize) -> Result<Vec<Rational>> {
        let mut out = Vec::with_capacity(count);
        let mut prefix = Rational::one();
        for j in 0..count {
            let nj = self.point(j);
            out.push(&prefix * self.h.eval(&nj)?);
            if !prefix.is_zero() {
                prefix *= self.step.eval(&nj)?;
            }
        }
        Ok(out)
    }

    /// Terms `j = 0..count` by accumulating the closed-form ratio from `t̂_0`.
    pub fn terms_via_ratio(&self, count: usize) -> Result<Vec<Rational>> {
        let mut out = Vec::with_capacity(count);
        let mut t = self.t0()?;
        for j in 0..count {
            out.push(t.clone());
            if !t.is_zero() {
                t *= self.ratio.eval(&Rational::from_integer((j as i64).into()))?;
            }
        }
        Ok(out)
    }
}

fn unbound(p: &crate::exact_arith::MultiPoly) -> Error {
    let v = Var::ALL
        .iter()
        .find(|v| **v != Var::N && p.uses(**v))
        .copied()
        .unwrap_or(Var::N);
    Error::UnboundVariable(v)
}

/// `fr` at `k = 0` as a rational function of `n`.
fn at_k0(fr: &FactoredRatio) -> Result<UniRatFunc> {
    let b = Binding::new().with(Var::K, Rational::zero());
    let mut num = UniPoly::constant(Var::N, fr.constant.clone());
    let mut den = UniPoly::one(Var::N);
    for (p, e) in &fr.factors {
        let q = p.bind(&b);
        let u = q.to_unipoly(Var::N).ok_or_else(|| unbound(&q))?;
        for _ in 0..e.unsigned_abs() {
            if *e > 0 {
                num = &num * &u;
            } else {
                den = &den * &u;
            }
        }
    }
    UniRatFunc::new(num, den).map_err(|_| Error::Pole)
}

/// Index `j ≥ 0` with `p(n0 + r·j) = 0`, if any.
fn root_on_progression(p: &UniPoly, n0: &Rational, r: u32) -> Result<Option<u64>> {
    if p.is_zero() {
        return Ok(Some(0));
    }
    let rq = Rational::from_integer(r.into());
    for root in rational_roots(p)? {
        let j = (root - n0) / &rq;
        if j.denom().is_one() && !j.is_negative() {
            return Ok(Some(j.to_integer().to_u64().unwrap_or(u64::MAX)));
        }
    }
    Ok(None)
}

/// Builds the stream, rejecting a zero of `p2` on `n0 + r·j`. The vanishing
/// condition is not checked here; see [`accelerated_stream_checked`].
pub fn accelerated_stream(t: &HypTerm, rec: &Recurrence, n0: &Rational) -> Result<AccelStream> {
    if let Some(j) = root_on_progression(&rec.p2, n0, rec.r)? {
        return Err(Error::P2PoleOnProgression { j });
    }
    let r0 = rec.cert.bind(&Binding::new().with(Var::K, Rational::zero()))?;
    let rn = r0.num().to_unipoly(Var::N).ok_or_else(|| unbound(r0.num()))?;
    let rd = r0.den().to_unipoly(Var::N).ok_or_else(|| unbound(r0.den()))?;
    let h = UniRatFunc::new(-&rn, &rd * &rec.p2)?;
    if h.is_zero() {
        return Err(Error::DegenerateArgument("R(n,0) vanishes identically".into()));
    }
    let g2 = UniRatFunc::new(-&rec.p1, rec.p2.clone())?;
    let step = g2.mul(&at_k0(&t.n_shift_factors(rec.r)?)?);
    let rq = Rational::from_integer(rec.r.into());
    let ratio_n = step.mul(&h.shift(&rq)).div(&h)?;
    let ratio = ratio_n.compose_affine(&rq, n0, Var::J);
    Ok(AccelStream {
        n0: n0.clone(),
        r: rec.r,
        h,
        step,
        ratio,
    })
}

/// [`accelerated_stream`] followed by [`vanishing_check`].
pub fn accelerated_stream_checked(
    t: &HypTerm,
    rec: &Recurrence,
    n0: &Rational,
    m_max: usize,
) -> Result<AccelStream> {
    let s = accelerated_stream(t, rec, n0)?;
    if !vanishing_check(t, rec, n0, m_max)? {
        return Err(Error::RemainderDoesNotVanish);
    }
    Ok(s)
}

/// `lim g2(n) = −lc(p1)/lc(p2)`, or 0 when `deg p1 < deg p2`.
pub fn convergence_rate(rec: &Recurrence) -> Result<Rational> {
    rate_from_degrees(
        rec.p1.degree().map(|d| (d, rec.p1.lc())),
        rec.p2.degree().map(|d| (d, rec.p2.lc())),
    )
}

/// Rate of a symbolic recurrence; the leading coefficients in `n` must be
/// free of parameters.
pub fn symbolic_convergence_rate(rec: &SymbolicRecurrence) -> Result<Rational> {
    let lead = |p: &crate::exact_arith::MultiPoly| -> Result<Option<(usize, Rational)>> {
        if p.is_zero() {
            return Ok(None);
        }
        let cs = p.coeffs_in(Var::N);
        let top = cs.last().unwrap();
        let c = top.as_constant().ok_or_else(|| unbound(top))?;
        Ok(Some((cs.len() - 1, c)))
    };
    rate_from_degrees(lead(&rec.p1)?, lead(&rec.p2)?)
}

fn rate_from_degrees(p1: Option<(usize, Rational)>, p2: Option<(usize, Rational)>) -> Result<Rational> {
    let (d2, l2) = p2.ok_or(Error::DivergentAcceleration)?;
    match p1 {
        None => Ok(Rational::zero()),
        Some((d1, _)) if d1 < d2 => Ok(Rational::zero()),
        Some((d1, l1)) if d1 == d2 => Ok(-l1 / l2),
        Some(_) => Err(Error::DivergentAcceleration),
    }
}

/// Number of iterations worth probing for a given rate: enough for the
/// remainder to fall 40 orders of magnitude, and at least 200.
pub fn default_m_max(rate: &Rational) -> usize {
    let x = rational_to_f64(&rate.abs());
    if !(x > 0.0 && x < 1.0) {
        return 200;
    }
    let need = 40.0 / -num_traits::Float::log10(x);
    200usize.max(num_traits::Float::ceil(need) as usize)
}

/// Numeric check that `Π_{o≤m} g2(n_o) · 𝓕(n_{m+1}) / F(n0,0) → 0`.
///
/// Heuristic, in double precision: the logarithm of the remainder is tracked
/// for `m = 0..m_max`, with `𝓕(n)/F(n,0)` from the direct-summation oracle.
/// True once the remainder is below `1e-30` after ten decreasing samples.
pub fn vanishing_check(t: &HypTerm, rec: &Recurrence, n0: &Rational, m_max: usize) -> Result<bool> {
    let g2 = UniRatFunc::new(-&rec.p1, rec.p2.clone())?;
    let step = g2.mul(&at_k0(&t.n_shift_factors(rec.r)?)?);
    let kfac = t.k_shift_factors()?;
    let threshold = num_traits::Float::ln(1e-30f64);
    let mut log_prefix = 0.0f64;
    let mut recent: Vec<f64> = Vec::new();
    for m in 0..=m_max {
        let nm = n0 + Rational::from_integer((rec.r as u64 * m as u64).into());
        let s = step.eval(&nm)?;
        if s.is_zero() {
            return Ok(true);
        }
        log_prefix += ln_abs(&s);
        let next = &nm + Rational::from_integer(rec.r.into());
        let bound = kfac.bind(&Binding::new().with(Var::N, next));
        let (sum, _) = crate::numerics::direct_sum_f64(&bound)?;
        if sum == 0.0 {
            return Ok(true);
        }
        let lr = log_prefix + num_traits::Float::ln(num_traits::Float::abs(sum));
        recent.push(lr);
        if recent.len() > 10 {
            recent.remove(0);
        }
        if recent.len() == 10 && lr < threshold && recent.windows(2).all(|w| w[1] < w[0]) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn ln_abs(x: &Rational) -> f64 {
    let bits_n = x.numer().bits() as i64;
    let bits_d = x.denom().bits() as i64;
    // scale to avoid overflow before taking the logarithm
    let shift = bits_n - bits_d;
    let scaled = if shift > 0 {
        Rational::new(x.numer().clone(), x.denom().clone() << (shift as usize))
    } else {
        Rational::new(x.numer().clone() << ((-shift) as usize), x.denom().clone())
    };
    let m = num_traits::Float::abs(rational_to_f64(&scaled));
    num_traits::Float::ln(m) + shift as f64 * core::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, rat};
    use crate::hypergeom_terms::{family_instantiate, FamilyId};
    use crate::telescoper::{builtin_recurrence, zeilberger_two_term};

    fn example_one() -> (HypTerm, Recurrence) {
        let ps = [rat(1, 3), rat(1, 3), int(1), rat(1, 3), rat(1, 3), rat(2, 3)];
        let t = family_instantiate(FamilyId::Quarter, &ps, int(1)).unwrap();
        let rec = zeilberger_two_term(&t, 1, 8).unwrap().unwrap();
        (t, rec)
    }

    #[test]
    fn first_quarter_example_stream_matches_series() {
        let (t, rec) = example_one();
        let s = accelerated_stream_checked(&t, &rec, &int(1), 200).unwrap();
        let a = s.terms(60).unwrap();
        assert_eq!(a, s.terms_via_ratio(60).unwrap());
        let shown = parse_series("z=1/4 upper=[2/3] lower=[11/6] num=[17,42,27] den=[1,4,3]").unwrap();
        assert!(stream_proportional(&a, &shown.terms(60).unwrap(), 59).is_some());
        let r0 = rec.cert.eval(&Binding::new().with(Var::N, int(1)).with(Var::K, int(0))).unwrap();
        assert_eq!(a[0], -r0 / rec.p2.eval(&int(1)));
    }

    #[test]
    fn rates() {
        let (_, rec) = example_one();
        assert_eq!(convergence_rate(&rec).unwrap(), rat(1, 4));
        let q = builtin_recurrence(FamilyId::Quarter).unwrap();
        assert_eq!(symbolic_convergence_rate(&q).unwrap(), rat(1, 4));
        let n27 = builtin_recurrence(FamilyId::Neg27).unwrap();
        assert_eq!(symbolic_convergence_rate(&n27).unwrap(), rat(-1, 27));
        let mut zero = rec.clone();
        zero.p1 = UniPoly::zero(Var::N);
        assert_eq!(convergence_rate(&zero).unwrap(), int(0));
        let mut div = rec.clone();
        div.p1 = &div.p1 * &UniPoly::x(Var::N);
        assert_eq!(convergence_rate(&div), Err(Error::DivergentAcceleration));
    }

    #[test]
    fn growing_remainder_fails_vanishing() {
        let (t, rec) = example_one();
        let mut bad = rec.clone();
        bad.p1 = rec.p2.scale(&int(-2));
        assert!(!vanishing_check(&t, &bad, &int(1), 200).unwrap());
    }

    #[test]
    fn p2_zero_on_progression_is_reported() {
        let (t, rec) = example_one();
        let mut bad = rec.clone();
        // p2 vanishing at n = 3 = 1 + 2·1
        bad.p2 = UniPoly::from_ints(Var::N, &[-3, 1]);
        assert_eq!(
            accelerated_stream(&t, &bad, &int(1)).unwrap_err(),
            Error::P2PoleOnProgression { j: 2 }
        );
    }

    #[test]
    fn m_max_grows_for_slow_rates() {
        assert_eq!(default_m_max(&rat(1, 4)), 200);
        assert!(default_m_max(&rat(27, 32)) > 400);
    }
}
