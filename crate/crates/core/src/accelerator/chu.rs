//! Series in bracket form `Σ_j z^j · Π(α_i)_j / Π(A_i)_j · num(j)/den(j)`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{format_rational, parse_rational, rational_roots, Rational, UniPoly, UniRatFunc, Var};

/// Bracket-form series. `num` and `den` are polynomials in `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChuSeries {
    pub z: Rational,
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub num: UniPoly,
    pub den: UniPoly,
}

impl ChuSeries {
    pub fn new(
        z: Rational,
        upper: Vec<Rational>,
        lower: Vec<Rational>,
        num: UniPoly,
        den: UniPoly,
    ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self {
            z,
            upper,
            lower,
            num: num.with_var(Var::J),
            den: den.with_var(Var::J),
        })
    }

    /// Sorted parameter lists with equal upper/lower pairs cancelled.
    pub fn canonical(&self) -> ChuSeries {
        let mut upper = self.upper.clone();
        let mut lower = Vec::new();
        for a in &self.lower {
            if let Some(i) = upper.iter().position(|u| u == a) {
                upper.remove(i);
            } else {
                lower.push(a.clone());
            }
        }
        upper.sort();
        lower.sort();
        ChuSeries {
            z: self.z.clone(),
            upper,
            lower,
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }

    /// `term(j+1)/term(j)` as a rational function of `j`.
    pub fn term_ratio(&self) -> Result<UniRatFunc> {
        let one = Rational::one();
        let lin = |a: &Rational| UniPoly::linear(Var::J, a.clone(), one.clone());
        let mut n = UniPoly::constant(Var::J, self.z.clone());
        let mut d = UniPoly::one(Var::J);
        for a in &self.upper {
            n = &n * &lin(a);
        }
        for a in &self.lower {
            d = &d * &lin(a);
        }
        n = &(&n * &self.num.shift(&one)) * &self.den;
        d = &(&d * &self.num) * &self.den.shift(&one);
        UniRatFunc::new(n, d)
    }

    /// Exact terms `j = 0..count`.
    pub fn terms(&self, count: usize) -> Result<Vec<Rational>> {
        let mut out = Vec::with_capacity(count);
        let mut base = Rational::one();
        for j in 0..count {
            let jq = Rational::from_integer((j as i64).into());
            let d = self.den.eval(&jq);
            if d.is_zero() {
                return Err(Error::SeriesPole { j: j as u64 });
            }
            out.push(&base * self.num.eval(&jq) / d);
            let mut next = &base * &self.z;
            for a in &self.upper {
                next *= &jq + a;
            }
            for a in &self.lower {
                let x = &jq + a;
                if x.is_zero() {
                    if next.is_zero() {
                        break;
                    }
                    return Err(Error::SeriesPole { j: j as u64 + 1 });
                }
                next /= x;
            }
            base = next;
        }
        Ok(out)
    }
}

fn fmt_list(f: &mut fmt::Formatter<'_>, xs: &[Rational]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        f.write_str(&format_rational(x))?;
    }
    f.write_str("]")
}

/// Canonical text: `z=<q> upper=[q,...] lower=[q,...] num=[c0,...] den=[c0,...]`.
impl fmt::Display for ChuSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z={} upper=", format_rational(&self.z))?;
        fmt_list(f, &self.upper)?;
        f.write_str(" lower=")?;
        fmt_list(f, &self.lower)?;
        write!(f, " num={} den={}", self.num.format_coeffs(), self.den.format_coeffs())
    }
}

fn perr(pos: usize, msg: &str) -> Error {
    Error::Parse {
        pos,
        msg: String::from(msg),
    }
}

fn parse_list(s: &str, pos: usize) -> Result<Vec<Rational>> {
    let inner = s
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| perr(pos, "expected a bracketed list"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| parse_rational(x.trim()).map_err(|_| perr(pos, "bad rational in list")))
        .collect()
}

/// Reads the canonical text form; `den` defaults to `[1]`.
pub fn parse_series(text: &str) -> Result<ChuSeries> {
    let (mut z, mut upper, mut lower, mut num, mut den) = (None, None, None, None, None);
    let base = text.as_ptr() as usize;
    for tok in text.split_whitespace() {
        let pos = tok.as_ptr() as usize - base;
        let (key, val) = tok.split_once('=').ok_or_else(|| perr(pos, "expected key=value"))?;
        match key {
            "z" => z = Some(parse_rational(val).map_err(|_| perr(pos, "bad rational for z"))?),
            "upper" => upper = Some(parse_list(val, pos)?),
            "lower" => lower = Some(parse_list(val, pos)?),
            "num" => num = Some(UniPoly::new(Var::J, parse_list(val, pos)?)),
            "den" => den = Some(UniPoly::new(Var::J, parse_list(val, pos)?)),
            _ => return Err(perr(pos, "unknown key")),
        }
    }
    let z = z.ok_or_else(|| perr(text.len(), "missing z"))?;
    let num = num.ok_or_else(|| perr(text.len(), "missing num"))?;
    ChuSeries::new(
        z,
        upper.unwrap_or_default(),
        lower.unwrap_or_default(),
        num,
        den.unwrap_or_else(|| UniPoly::one(Var::J)),
    )
}

impl FromStr for ChuSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_series(s)
    }
}

/// Largest shift tried when matching rootless factors as `q(j+1)/q(j)`.
const MAX_SHIFT: i64 = 64;
/// Largest allowed degree of the summand polynomial.
const MAX_NUM_DEGREE: usize = 8;

/// Rewrites a term ratio in bracket form. Returns the series and the constant
/// `c` with `stream_j = c · series_term_j`, fixed by the first term `t0`.
pub fn chu_normalize(ratio: &UniRatFunc, t0: &Rational) -> Result<(ChuSeries, Rational)> {
    if ratio.is_zero() || t0.is_zero() {
        return Err(Error::NonChuNormalizable);
    }
    let ratio = ratio.compose_affine(&Rational::one(), &Rational::zero(), Var::J);
    let (n, d) = (ratio.num(), ratio.den());
    if n.degree() != d.degree() {
        return Err(Error::NonChuNormalizable);
    }
    let z = n.lc() / d.lc();
    let (upper, nr) = strip_rational_roots(n)?;
    let (lower, dr) = strip_rational_roots(d)?;
    let (mut nr, mut dr) = (nr.monic(), dr.monic());
    let mut q = UniPoly::one(Var::J);
    while nr.degree().unwrap_or(0) > 0 {
        let mut found = false;
        for h in 1..=MAX_SHIFT {
            let hq = Rational::from_integer(h.into());
            let g = nr.gcd(&dr.shift(&hq));
            if g.degree().unwrap_or(0) == 0 {
                continue;
            }
            nr = nr.exact_div(&g).unwrap();
            dr = dr.exact_div(&g.shift(&-&hq)).unwrap();
            for i in 0..h {
                q = &q * &g.shift(&Rational::from_integer((i - h).into()));
            }
            found = true;
            break;
        }
        if !found {
            return Err(Error::NonChuNormalizable);
        }
    }
    if dr.degree().unwrap_or(0) > 0 || q.degree().unwrap_or(0) > MAX_NUM_DEGREE {
        return Err(Error::NonChuNormalizable);
    }
    let num = q.primitive().1;
    let series = ChuSeries::new(z, upper, lower, num, UniPoly::one(Var::J))?;
    if series.term_ratio()? != ratio {
        return Err(Error::NonChuNormalizable);
    }
    let scale = t0 / series.num.eval(&Rational::zero());
    Ok((series, scale))
}

/// Removes all rational roots `-α`, returning the sorted `α`s and the rest.
fn strip_rational_roots(p: &UniPoly) -> Result<(Vec<Rational>, UniPoly)> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok((Vec::new(), p.clone()));
    }
    let roots = rational_roots(p)?;
    let mut rest = p.clone();
    let mut params = Vec::new();
    for r in roots {
        let lin = UniPoly::linear(Var::J, -r.clone(), Rational::one());
        rest = rest.exact_div(&lin).expect("verified root");
        params.push(-r);
    }
    params.sort();
    Ok((params, rest))
}

/// The constant `c` with `s1_j = c·s2_j` for every `j ≤ big_j`, if any.
pub fn stream_proportional(s1: &[Rational], s2: &[Rational], big_j: usize) -> Option<Rational> {
    if s1.len() <= big_j || s2.len() <= big_j {
        return None;
    }
    let mut c: Option<Rational> = None;
    for (a, b) in s1[..=big_j].iter().zip(&s2[..=big_j]) {
        if b.is_zero() {
            if !a.is_zero() {
                return None;
            }
            continue;
        }
        let q = a / b;
        match &c {
            None => c = Some(q),
            Some(c0) if *c0 == q => {}
            Some(_) => return None,
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use crate::exact_arith::{int, rat};

    fn q1_series() -> ChuSeries {
        parse_series("z=1/4 upper=[2/3] lower=[11/6] num=[17,42,27] den=[1,4,3]").unwrap()
    }

    #[test]
    fn text_round_trip() {
        let s = q1_series();
        let text = s.to_string();
        assert_eq!(text, "z=1/4 upper=[2/3] lower=[11/6] num=[17,42,27] den=[1,4,3]");
        assert_eq!(parse_series(&text).unwrap(), s);
        let g = parse_series("z=1/2 upper=[] lower=[] num=[1]").unwrap();
        assert_eq!(g.to_string(), "z=1/2 upper=[] lower=[] num=[1] den=[1]");
        assert!(parse_series("z=1/2 upper=[1,x] num=[1]").is_err());
        assert!(parse_series("upper=[1] num=[1]").is_err());
    }

    #[test]
    fn first_term_is_num_over_den() {
        let rt1 = parse_series("z=1/4 upper=[1/3,1,5/3] lower=[7/6,3/2,11/6] num=[2,3]").unwrap();
        assert_eq!(rt1.terms(1).unwrap()[0], int(2));
    }

    #[test]
    fn normalize_round_trip_and_scale() {
        let s = q1_series();
        let ratio = s.term_ratio().unwrap();
        let terms = s.terms(20).unwrap();
        let t0 = &terms[0] * rat(3, 7);
        let (n, c) = chu_normalize(&ratio, &t0).unwrap();
        assert_eq!(n.term_ratio().unwrap(), ratio);
        assert_eq!(n.num, UniPoly::from_ints(Var::J, &[17, 42, 27]));
        assert_eq!(n.upper, vec![rat(1, 3), rat(2, 3), int(1)]);
        assert_eq!(n.lower, vec![rat(4, 3), rat(11, 6), int(2)]);
        let scaled: Vec<Rational> = n.terms(20).unwrap().iter().map(|x| x * &c).collect();
        assert_eq!(stream_proportional(&scaled, &terms, 19), Some(rat(3, 7)));
    }

    #[test]
    fn geometric_ratio() {
        let ratio = UniRatFunc::constant(Var::J, rat(1, 3));
        let (s, c) = chu_normalize(&ratio, &int(1)).unwrap();
        assert!(s.upper.is_empty() && s.lower.is_empty());
        assert_eq!(s.num, UniPoly::one(Var::J));
        assert_eq!(c, int(1));
    }

    #[test]
    fn rootless_without_shift_partner_fails() {
        // (j^2+1)/(j^2+3) is not a shift quotient
        let r = UniRatFunc::new(
            UniPoly::from_ints(Var::J, &[1, 0, 1]),
            UniPoly::from_ints(Var::J, &[3, 0, 1]),
        )
        .unwrap();
        assert_eq!(chu_normalize(&r, &int(1)), Err(Error::NonChuNormalizable));
    }

    #[test]
    fn proportionality() {
        let a = [int(1), int(2), int(3)];
        let b = [int(2), int(4), int(6)];
        assert_eq!(stream_proportional(&a, &a, 2), Some(int(1)));
        assert_eq!(stream_proportional(&a, &b, 2), Some(rat(1, 2)));
        let c = [int(2), int(4), int(7)];
        assert_eq!(stream_proportional(&a, &c, 2), None);
        assert_eq!(stream_proportional(&a, &c, 5), None);
    }

    #[test]
    fn canonical_cancels_pairs() {
        let s = parse_series("z=1 upper=[1,1/2] lower=[1,3/2] num=[1]").unwrap();
        let c = s.canonical();
        assert_eq!(c.upper, vec![rat(1, 2)]);
        assert_eq!(c.lower, vec![rat(3, 2)]);
    }
}
