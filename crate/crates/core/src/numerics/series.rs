//! Series evaluation: certified bracket-form sums and the direct-summation oracle.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::bigfloat::{digits_to_bits, BigFloat, Enclosure};
use crate::accelerator::ChuSeries;
use crate::error::{Error, Result};
use crate::exact_arith::{rational_roots, rational_to_f64, to_i64, Binding, Rational, UniPoly, Var};
use crate::hypergeom_terms::{FactoredRatio, HypTerm};

/// Outcome of a certified bracket-form evaluation.
#[derive(Clone, Debug)]
pub struct ChuEvaluation {
    pub enclosure: Enclosure,
    /// Terms summed, `j = 0..terms_used`.
    pub terms_used: usize,
    pub partial_sum: Rational,
    /// Certified bound on the omitted tail.
    pub tail: Rational,
}

/// Default term cap: `10·digits`, raised to 1.5 times the rate prediction for
/// slowly converging series.
pub fn default_term_cap(s: &ChuSeries, digits: u32) -> usize {
    let base = 10 * digits as usize;
    let z = rational_to_f64(&s.z.abs());
    if !(z > 0.0 && z < 1.0) {
        return base;
    }
    let predicted = digits as f64 / -num_traits::Float::log10(z);
    base.max(num_traits::Float::ceil(1.5 * predicted) as usize + 20)
}

/// Smallest nonnegative integer `m` with `−m` in `xs`.
fn first_nonpositive_integer(xs: &[Rational]) -> Option<u64> {
    xs.iter()
        .filter_map(to_i64)
        .filter(|m| *m <= 0)
        .map(|m| m.unsigned_abs())
        .min()
}

/// Index of the last nonzero term when the series terminates, after checking
/// for poles among the terms that are actually summed.
fn check_poles(s: &ChuSeries) -> Result<Option<u64>> {
    let stop = first_nonpositive_integer(&s.upper);
    if let Some(m) = first_nonpositive_integer(&s.lower) {
        // (A)_j vanishes from j = m+1 on
        if stop.is_none_or(|u| m < u) {
            return Err(Error::SeriesPole { j: m + 1 });
        }
    }
    for root in rational_roots(&s.den)? {
        if let Some(j) = to_i64(&root).filter(|j| *j >= 0) {
            if stop.is_none_or(|u| j as u64 <= u) {
                return Err(Error::SeriesPole { j: j as u64 });
            }
        }
    }
    Ok(stop)
}

/// `1 + max |c_i / lc|`, bounding every complex root of `p`.
fn cauchy_bound(p: &UniPoly) -> Rational {
    let lc = p.lc();
    let d = p.degree().unwrap_or(0);
    let m = p.coeffs()[..d]
        .iter()
        .map(|c| (c / &lc).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    m + Rational::one()
}

/// Ceiling of a rational as a `u64`, clamped at zero.
fn ceil_u64(x: &Rational) -> u64 {
    let c = x.ceil().to_integer();
    if c.is_negative() {
        0
    } else {
        u64::try_from(&c).unwrap_or(u64::MAX)
    }
}

/// Certified tail machinery: for `j ≥ start` the term ratio is bounded by
/// [`TailBound::rho`], nonincreasing in `j`.
struct TailBound {
    start: u64,
    z: Rational,
    pairs: Vec<(Rational, Rational)>,
    extra_lower: Vec<Rational>,
    num_bound: Rational,
    num_deg: u32,
}

impl TailBound {
    fn new(s: &ChuSeries) -> Self {
        let mut upper = s.upper.clone();
        let mut lower = s.lower.clone();
        upper.sort();
        lower.sort();
        let extra_lower = lower.split_off(upper.len().min(lower.len()));
        let pairs: Vec<_> = upper.into_iter().zip(lower).collect();
        let num_bound = cauchy_bound(&s.num);
        let den_bound = cauchy_bound(&s.den);
        // past every parameter, with j + A ≥ 1, and past the root bounds
        let mut start = ceil_u64(&(&num_bound + Rational::one())).max(ceil_u64(&den_bound) + 1);
        for a in s.upper.iter().chain(&s.lower) {
            start = start.max(ceil_u64(&(Rational::one() - a)));
        }
        Self {
            start,
            z: s.z.abs(),
            pairs,
            extra_lower,
            num_bound,
            num_deg: s.num.degree().unwrap_or(0) as u32,
        }
    }

    /// Bound on `|t_{j+1}/t_j|` valid for every index from `j` on.
    ///
    /// Each upper/lower pair contributes `max(1, (j+α)/(j+A))`, unpaired lower
    /// parameters `1/(j+A)`, the summand numerator `(1 + 1/(j − B))^deg` with
    /// `B` its root bound, and the denominator at most 1 once `j` exceeds its
    /// root bound. Every factor is nonincreasing in `j`.
    fn rho(&self, j: u64) -> Option<Rational> {
        if j < self.start {
            return None;
        }
        let jq = Rational::from_integer(j.into());
        let one = Rational::one();
        let mut r = self.z.clone();
        for (a, b) in &self.pairs {
            let q = (&jq + a) / (&jq + b);
            if q > one {
                r *= q;
            }
        }
        for b in &self.extra_lower {
            r /= &jq + b;
        }
        let step = &one + one.clone() / (&jq - &self.num_bound);
        for _ in 0..self.num_deg {
            r *= &step;
        }
        Some(r)
    }
}

/// Sums `s` exactly until a certified tail bound reaches `10^{−digits}/4`.
pub fn chu_eval_with_cap(s: &ChuSeries, digits: u32, cap: usize) -> Result<ChuEvaluation> {
    let prec = digits_to_bits(digits + 4);
    let stop = check_poles(s)?;
    if stop.is_none() && s.z.abs() >= Rational::one() {
        return Err(Error::NotConvergent);
    }
    if stop.is_none() && s.upper.len() > s.lower.len() && !s.z.is_zero() {
        return Err(Error::NotConvergent);
    }
    let eps = Rational::new(1.into(), num_bigint::BigInt::from(10u32).pow(digits) * 4);
    let bound = TailBound::new(s);
    let one = Rational::one();
    let mut sum = Rational::zero();
    let mut base = Rational::one();
    let mut j = 0u64;
    loop {
        if j as usize >= cap {
            return Err(Error::TermCapExceeded { cap });
        }
        let jq = Rational::from_integer(j.into());
        let t = &base * s.num.eval(&jq) / s.den.eval(&jq);
        sum += &t;
        let mut next = &base * &s.z;
        for a in &s.upper {
            next *= &jq + a;
        }
        if !next.is_zero() {
            for a in &s.lower {
                next /= &jq + a;
            }
        }
        let tail = if next.is_zero() || stop.is_some_and(|m| j >= m) || s.num.is_zero() {
            Some(Rational::zero())
        } else {
            match bound.rho(j) {
                Some(r) if r < one => {
                    let tb = t.abs() * &r / (&one - &r);
                    (tb <= eps).then_some(tb)
                }
                _ => None,
            }
        };
        if let Some(tail) = tail {
            return Ok(ChuEvaluation {
                enclosure: Enclosure::from_rational_ball(&sum, &tail, prec),
                terms_used: j as usize + 1,
                partial_sum: sum,
                tail,
            });
        }
        base = next;
        j += 1;
    }
}

/// Certified value of `s` with radius about `10^{−digits}`.
pub fn chu_eval(s: &ChuSeries, digits: u32) -> Result<Enclosure> {
    Ok(chu_eval_with_cap(s, digits, default_term_cap(s, digits))?.enclosure)
}

/// Certified enclosure from exactly `terms` terms, for nested-refinement
/// checks; `None` when no tail bound holds yet.
pub fn chu_enclosure_at(s: &ChuSeries, terms: usize, prec: u32) -> Result<Option<Enclosure>> {
    check_poles(s)?;
    if terms == 0 || s.z.abs() >= Rational::one() {
        return Ok(None);
    }
    let ts = s.terms(terms)?;
    let last = ts.last().unwrap();
    let sum: Rational = ts.iter().sum();
    let Some(r) = TailBound::new(s).rho(terms as u64 - 1) else {
        return Ok(None);
    };
    if r >= Rational::one() {
        return Ok(None);
    }
    let tail = last.abs() * &r / (Rational::one() - &r);
    Ok(Some(Enclosure::from_rational_ball(&sum, &tail, prec)))
}

/// Linear factor `c0 + c1·k` raised to `e`.
#[derive(Clone, Debug)]
struct KFactor {
    c0: Rational,
    c1: Rational,
    e: i32,
}

/// The k-ratio as linear factors with identical factors cancelled.
fn k_factors(ratio: &FactoredRatio) -> Result<(Rational, Vec<KFactor>)> {
    let mut constant = ratio.constant.clone();
    let mut out: Vec<KFactor> = Vec::new();
    for (p, e) in &ratio.factors {
        let u = p.to_unipoly(Var::K).ok_or_else(|| {
            let v = Var::ALL.iter().find(|v| **v != Var::K && p.uses(**v)).unwrap();
            Error::UnboundVariable(*v)
        })?;
        let (c0, c1) = (u.coeff(0), u.coeff(1));
        if c1.is_zero() {
            if c0.is_zero() {
                return Ok((Rational::zero(), Vec::new()));
            }
            for _ in 0..e.unsigned_abs() {
                if *e > 0 {
                    constant *= &c0;
                } else {
                    constant /= &c0;
                }
            }
            continue;
        }
        match out.iter_mut().find(|f| f.c0 == c0 && f.c1 == c1) {
            Some(f) => f.e += e,
            None => out.push(KFactor { c0, c1, e: *e }),
        }
    }
    out.retain(|f| f.e != 0);
    Ok((constant, out))
}

/// Nonnegative integer root of `c0 + c1·k`.
fn integer_root(f: &KFactor) -> Option<u64> {
    to_i64(&(-&f.c0 / &f.c1)).filter(|k| *k >= 0).map(|k| k as u64)
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Regime {
    /// Terms vanish after this index.
    Terminating(u64),
    /// Ratio tends to a limit of modulus below 1 (or to zero).
    Geometric,
    /// Ratio `1 − s/k + …` with `s > 1`.
    Algebraic(f64),
    /// Ratio `−1 + s/k + …` with `s > 0`.
    Alternating,
}

fn classify(constant: &Rational, fs: &[KFactor]) -> Result<Regime> {
    if constant.is_zero() {
        return Ok(Regime::Terminating(0));
    }
    let stop = fs.iter().filter(|f| f.e > 0).filter_map(integer_root).min();
    let pole = fs.iter().filter(|f| f.e < 0).filter_map(integer_root).min();
    if let Some(p) = pole {
        if stop.is_none_or(|m| p <= m) {
            return Err(Error::PoleAtK { k: p });
        }
    }
    if let Some(m) = stop {
        // the ratio at k = m vanishes, so terms stop after index m
        return Ok(Regime::Terminating(m));
    }
    let deg: i32 = fs.iter().map(|f| f.e).sum();
    let mut z = constant.clone();
    let mut s = Rational::zero();
    for f in fs {
        for _ in 0..f.e.unsigned_abs() {
            if f.e > 0 {
                z *= &f.c1;
            } else {
                z /= &f.c1;
            }
        }
        s -= Rational::from_integer(f.e.into()) * &f.c0 / &f.c1;
    }
    if deg < 0 || (deg == 0 && z.abs() < Rational::one()) {
        return Ok(Regime::Geometric);
    }
    if deg > 0 || z.abs() > Rational::one() {
        return Err(Error::OracleUnavailable);
    }
    let s = rational_to_f64(&s);
    if z.is_positive() && s > 1.0 {
        Ok(Regime::Algebraic(s))
    } else if z.is_negative() && s > 0.0 {
        Ok(Regime::Alternating)
    } else {
        Err(Error::OracleUnavailable)
    }
}

fn ratio_f64(constant: f64, fs: &[(f64, f64, i32)], k: f64) -> f64 {
    let mut r = constant;
    for &(c0, c1, e) in fs {
        r *= num_traits::Float::powi(c0 + c1 * k, e);
    }
    r
}

const ALGEBRAIC_TERMS: u64 = 200_000;
const ALTERNATING_TERMS: usize = 4_000;
const AVERAGING_LEVELS: usize = 24;
const GEOMETRIC_LIMIT: u64 = 1_000_000;

/// Double-precision value and error estimate of `Σ_k Π_{i<k} ratio(i)`,
/// the sum `𝓕(n)/F(n,0)` when `ratio` is the k-ratio bound at `n`.
pub(crate) fn direct_sum_f64(ratio: &FactoredRatio) -> Result<(f64, f64)> {
    let (constant, fs) = k_factors(ratio)?;
    let regime = classify(&constant, &fs)?;
    let c = rational_to_f64(&constant);
    let ff: Vec<(f64, f64, i32)> = fs
        .iter()
        .map(|f| (rational_to_f64(&f.c0), rational_to_f64(&f.c1), f.e))
        .collect();
    let rho = |k: u64| ratio_f64(c, &ff, k as f64);
    match regime {
        Regime::Terminating(m) => {
            let (mut s, mut t, mut mag) = (0.0f64, 1.0f64, 0.0f64);
            for k in 0..=m {
                s += t;
                mag += t.abs();
                t *= rho(k);
            }
            Ok((s, 1e-14 * mag))
        }
        Regime::Geometric => {
            let (mut s, mut t) = (0.0f64, 1.0f64);
            for k in 0..GEOMETRIC_LIMIT {
                s += t;
                let q = rho(k);
                t *= q;
                let qa = q.abs();
                if qa < 1.0 && k > 4 {
                    let tail = t.abs() / (1.0 - qa);
                    if tail <= 1e-17 * s.abs() || t == 0.0 {
                        return Ok((s, 2.0 * tail + 1e-14 * s.abs()));
                    }
                }
            }
            Err(Error::OracleUnavailable)
        }
        Regime::Algebraic(sx) => {
            let half = ALGEBRAIC_TERMS / 2;
            let (mut s, mut t) = (0.0f64, 1.0f64);
            let mut est_half = 0.0;
            for k in 0..=ALGEBRAIC_TERMS {
                s += t;
                if k == half || k == ALGEBRAIC_TERMS {
                    // Σ_{i>k} t_i ≈ t_k·(k/(s−1) − 1/2)
                    let est = s + t * (k as f64 / (sx - 1.0) - 0.5);
                    if k == half {
                        est_half = est;
                    } else {
                        return Ok((est, 4.0 * (est - est_half).abs() + 1e-13 * est.abs()));
                    }
                }
                t *= rho(k);
            }
            unreachable!()
        }
        Regime::Alternating => {
            let (mut s, mut t) = (0.0f64, 1.0f64);
            let mut partial = Vec::with_capacity(ALTERNATING_TERMS);
            for k in 0..ALTERNATING_TERMS as u64 {
                s += t;
                partial.push(s);
                t *= rho(k);
            }
            let mut level: Vec<f64> = partial[ALTERNATING_TERMS - AVERAGING_LEVELS - 1..].to_vec();
            let mut prev = level[level.len() - 1];
            while level.len() > 1 {
                prev = level[level.len() - 1];
                level = level.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
            }
            let v = level[0];
            Ok((v, 4.0 * (v - prev).abs() + 1e-13 * v.abs()))
        }
    }
}

/// `Σ_k F(n0,k)/F(n0,0)` by direct summation of the original series.
///
/// Terminating sums are exact. Otherwise the sum is taken in double precision
/// with a tail estimate from the ratio asymptotics, so the radius is an
/// estimate rather than a certificate; `target_digits` may not exceed 12.
pub fn direct_sum_eval(t: &HypTerm, n0: &Rational, target_digits: u32) -> Result<Enclosure> {
    if target_digits > 12 {
        return Err(Error::DegenerateArgument("direct summation supports at most 12 digits".into()));
    }
    let ratio = t.k_shift_factors()?.bind(&Binding::new().with(Var::N, n0.clone()));
    let (constant, fs) = k_factors(&ratio)?;
    let prec = digits_to_bits(target_digits + 20);
    if let Regime::Terminating(m) = classify(&constant, &fs)? {
        let mut sum = Rational::zero();
        let mut term = Rational::one();
        for k in 0..=m {
            sum += &term;
            let kq = Rational::from_integer(k.into());
            term *= &constant;
            for f in &fs {
                let x = &f.c0 + &f.c1 * &kq;
                for _ in 0..f.e.unsigned_abs() {
                    if f.e > 0 {
                        term *= &x;
                    } else {
                        term /= &x;
                    }
                }
            }
        }
        return Ok(Enclosure::from_rational_ball(&sum, &Rational::zero(), prec));
    }
    let (v, r) = direct_sum_f64(&ratio)?;
    let limit = num_traits::Float::powi(10.0f64, -(target_digits as i32));
    if !(r <= limit) || !v.is_finite() {
        return Err(Error::OracleUnavailable);
    }
    let center = BigFloat::from_f64(v).to_rational();
    let radius = BigFloat::from_f64(r).to_rational();
    Ok(Enclosure::from_rational_ball(&center, &radius, prec))
}
