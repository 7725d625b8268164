//! Input families F(n,k) as products of Gamma factors with affine arguments.
//!
//! A Pochhammer symbol `(x)_{k+p}` is stored as the pair `Γ(x+k+p)^{+1} Γ(x)^{-1}`,
//! and `C(n,k)` as `Γ(n+1) Γ(k+1)^{-1} Γ(n-k+1)^{-1}`. Only ratios under integer
//! shifts are ever formed, so no Gamma value is computed.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{rational_to_f64, Binding, MultiPoly, RatFunc, Rational, Var};

/// `Γ(base + v·n + w·k)^exponent`, with `base` affine in the free parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaFactor {
    pub base: MultiPoly,
    pub v: Rational,
    pub w: Rational,
    pub exponent: i8,
}

impl GammaFactor {
    pub fn new(base: MultiPoly, v: Rational, w: Rational, exponent: i8) -> Self {
        Self { base, v, w, exponent }
    }

    pub fn argument(&self) -> MultiPoly {
        let lin = MultiPoly::affine(
            Rational::zero(),
            &[(Var::N, self.v.clone()), (Var::K, self.w.clone())],
        );
        &self.base + &lin
    }
}

/// A hypergeometric term `sign_base^k · Π Γ(arg_i)^{e_i}`.
#[derive(Clone, Debug)]
pub struct HypTerm {
    pub sign_base: Rational,
    pub factors: Vec<GammaFactor>,
    /// Bound free parameters (empty for a symbolic family).
    pub params: Binding,
    /// Start point when instantiated.
    pub n0: Option<Rational>,
}

/// Product `constant · Π poly_i^{e_i}` of linear factors.
#[derive(Clone, Debug)]
pub struct FactoredRatio {
    pub constant: Rational,
    pub factors: Vec<(MultiPoly, i32)>,
}

impl FactoredRatio {
    pub fn to_ratfunc(&self) -> RatFunc {
        let mut num = MultiPoly::constant(self.constant.clone());
        let mut den = MultiPoly::one();
        for (p, e) in &self.factors {
            if *e > 0 {
                num = &num * &p.pow(*e as u32);
            } else {
                den = &den * &p.pow((-*e) as u32);
            }
        }
        RatFunc::new(num, den).expect("linear factors are nonzero")
    }

    pub fn bind(&self, b: &Binding) -> FactoredRatio {
        FactoredRatio {
            constant: self.constant.clone(),
            factors: self.factors.iter().map(|(p, e)| (p.bind(b), *e)).collect(),
        }
    }
}

/// `Γ(x+m)/Γ(x)` as linear factors, for integer `m`.
fn gamma_shift(x: &MultiPoly, m: i64, sign: i8, out: &mut Vec<(MultiPoly, i32)>) {
    if m >= 0 {
        for i in 0..m {
            out.push((x + &MultiPoly::constant(Rational::from_integer(i.into())), sign as i32));
        }
    } else {
        for i in 1..=(-m) {
            out.push((x - &MultiPoly::constant(Rational::from_integer(i.into())), -(sign as i32)));
        }
    }
}

fn integer_of(x: &Rational) -> Option<i64> {
    if x.denom().is_one() {
        i64::try_from(x.numer()).ok()
    } else {
        None
    }
}

impl HypTerm {
    /// Builds a term, checking that every k-increment is an integer.
    pub fn new(sign_base: Rational, factors: Vec<GammaFactor>) -> Result<Self> {
        if factors.iter().any(|f| integer_of(&f.w).is_none()) {
            return Err(Error::NotHypergeometricInK);
        }
        Ok(Self {
            sign_base,
            factors,
            params: Binding::new(),
            n0: None,
        })
    }

    /// Binds free parameters and the start point, rejecting a net Gamma pole
    /// or zero at `(n0, 0)`.
    pub fn instantiate(&self, params: Binding, n0: Rational) -> Result<Self> {
        let factors: Vec<GammaFactor> = self
            .factors
            .iter()
            .map(|f| GammaFactor::new(f.base.bind(&params), f.v.clone(), f.w.clone(), f.exponent))
            .collect();
        let mut order = 0i32;
        for f in &factors {
            let arg = f
                .argument()
                .eval(&Binding::new().with(Var::N, n0.clone()).with(Var::K, Rational::zero()))?;
            if arg.denom().is_one() && !arg.is_positive() {
                order += f.exponent as i32;
            }
        }
        if order != 0 {
            return Err(Error::DegenerateArgument(format!(
                "F(n, 0) has a Gamma {} of order {} at n = {}",
                if order > 0 { "pole" } else { "zero" },
                order.abs(),
                n0
            )));
        }
        Ok(Self {
            sign_base: self.sign_base.clone(),
            factors,
            params,
            n0: Some(n0),
        })
    }

    /// `F(n,k+1)/F(n,k)` as linear factors.
    pub fn k_shift_factors(&self) -> Result<FactoredRatio> {
        let mut out = Vec::new();
        for f in &self.factors {
            let m = integer_of(&f.w).ok_or(Error::NotHypergeometricInK)?;
            gamma_shift(&f.argument(), m, f.exponent, &mut out);
        }
        Ok(FactoredRatio {
            constant: self.sign_base.clone(),
            factors: out,
        })
    }

    /// `F(n+r,k)/F(n,k)` as linear factors.
    pub fn n_shift_factors(&self, r: u32) -> Result<FactoredRatio> {
        let mut out = Vec::new();
        for f in &self.factors {
            let inc = &f.v * Rational::from_integer(r.into());
            let m = integer_of(&inc).ok_or(Error::NotHypergeometricInN { r })?;
            gamma_shift(&f.argument(), m, f.exponent, &mut out);
        }
        Ok(FactoredRatio {
            constant: Rational::one(),
            factors: out,
        })
    }

    /// Direct Pochhammer-product value of `F(n0,k)/F(n0,0)`, grouping each
    /// factor's own increments; used to cross-check the ratio path.
    pub fn direct_value(&self, k: u64) -> Result<Rational> {
        let n0 = self.n0.clone().ok_or(Error::UnboundVariable(Var::N))?;
        let mut acc = pow_q(&self.sign_base, k);
        for f in &self.factors {
            let x = f
                .argument()
                .eval(&Binding::new().with(Var::N, n0.clone()).with(Var::K, Rational::zero()))?;
            let m = integer_of(&f.w).ok_or(Error::NotHypergeometricInK)? * k as i64;
            // Γ(x+m)/Γ(x)
            let mut p = Rational::one();
            if m >= 0 {
                for i in 0..m {
                    p *= &x + Rational::from_integer(i.into());
                }
            } else {
                for i in 1..=(-m) {
                    p /= &x - Rational::from_integer(i.into());
                }
            }
            if f.exponent > 0 {
                acc *= p;
            } else {
                if p.is_zero() {
                    return Err(Error::PoleAtK { k });
                }
                acc /= p;
            }
        }
        Ok(acc)
    }
}

fn pow_q(x: &Rational, e: u64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// `ρ_k(n,k) = F(n,k+1)/F(n,k)`.
pub fn k_shift_ratio(t: &HypTerm) -> Result<RatFunc> {
    Ok(t.k_shift_factors()?.to_ratfunc())
}

/// `ρ_{n,r}(n,k) = F(n+r,k)/F(n,k)`.
pub fn n_shift_ratio(t: &HypTerm, r: u32) -> Result<RatFunc> {
    Ok(t.n_shift_factors(r)?.to_ratfunc())
}

/// Exact `F(n0,k)/F(n0,0)` as a product of k-shift ratios.
pub fn term_value_normalized(t: &HypTerm, k: u64) -> Result<Rational> {
    let mut it = NormalizedTerms::new(t)?;
    let mut v = Rational::one();
    for _ in 0..=k {
        v = it.next().unwrap()?;
    }
    Ok(v)
}

/// Iterator over `F(n0,k)/F(n0,0)` for k = 0, 1, 2, ...
pub struct NormalizedTerms {
    ratio: FactoredRatio,
    k: u64,
    current: Rational,
}

impl NormalizedTerms {
    pub fn new(t: &HypTerm) -> Result<Self> {
        let n0 = t.n0.clone().ok_or(Error::UnboundVariable(Var::N))?;
        let ratio = t.k_shift_factors()?.bind(&Binding::new().with(Var::N, n0));
        Ok(Self {
            ratio,
            k: 0,
            current: Rational::one(),
        })
    }

    /// `ρ_k(n0, k)` as a float, for asymptotic analysis.
    pub fn ratio_f64(&self, k: f64) -> f64 {
        let mut acc = rational_to_f64(&self.ratio.constant);
        for (p, e) in &self.ratio.factors {
            let cs = p.coeffs_in(Var::K);
            let c0 = cs.first().and_then(|c| c.as_constant()).unwrap_or_default();
            let c1 = cs.get(1).and_then(|c| c.as_constant()).unwrap_or_default();
            let x = rational_to_f64(&c0) + rational_to_f64(&c1) * k;
            acc *= if *e > 0 { x } else { 1.0 / x };
        }
        acc
    }

    pub fn ratio(&self) -> &FactoredRatio {
        &self.ratio
    }
}

impl Iterator for NormalizedTerms {
    type Item = Result<Rational>;

    fn next(&mut self) -> Option<Self::Item> {
        let out = self.current.clone();
        if out.is_zero() {
            self.k += 1;
            return Some(Ok(out));
        }
        let b = Binding::new().with(Var::K, Rational::from_integer(self.k.into()));
        let mut num = out.clone() * &self.ratio.constant;
        let mut den = Rational::one();
        for (p, e) in &self.ratio.factors {
            let x = match p.eval(&b) {
                Ok(x) => x,
                Err(err) => return Some(Err(err)),
            };
            if *e > 0 {
                num *= x;
            } else {
                den *= x;
            }
        }
        self.k += 1;
        // A vanishing numerator ends the series before any pole can matter.
        self.current = if num.is_zero() {
            num
        } else if den.is_zero() {
            return Some(Err(Error::PoleAtK { k: self.k }));
        } else {
            num / den
        };
        Some(Ok(out))
    }
}

/// The input families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// `(a)_{k+f}(b)_{k+e} / ((n)_{k+d}(n)_{k+c})`
    Quarter,
    /// `(-1)^k (a)_{k+c}(b)_{k+c} / ((a+n)_k (b+n)_k)`
    NegQuarter,
    /// `(a)_k (n)_{k+d} / ((2n)_{k+c}(2n)_{k+b})`
    Neg27,
    /// `(a)_k (b)_k / ((n)_k (2n)_{c+k})`
    Four27,
    /// `C(n,k) (1)_k / (3n+b)_{k+a}`
    Sixteen27A,
    /// `C(n,k) (2)_k / (3n+b)_{k+a}`
    Sixteen27B,
    /// `(a)_k (2n)_k / ((3n)_{b+k}(3n)_{c+k})`
    Sixty4A,
    /// `(n)_k (n)_{k+c} / ((2n)_{k+b}(2n)_{k+a})`
    Sixty4B,
    /// `(n)_k (2n)_k / ((4n)_{b+k}(a+n)_{c+k})`
    Twenty7_64,
    /// `(a)_k (n)_k / ((3n)_{b+k}(2n)_{c+k})`
    Neg64,
    /// `C(n,k) (1)_k / (2n+b)_{k+a}`
    Twenty7_32,
}

impl FamilyId {
    pub const ALL: [FamilyId; 11] = [
        FamilyId::Quarter,
        FamilyId::NegQuarter,
        FamilyId::Neg27,
        FamilyId::Four27,
        FamilyId::Sixteen27A,
        FamilyId::Sixteen27B,
        FamilyId::Sixty4A,
        FamilyId::Sixty4B,
        FamilyId::Twenty7_64,
        FamilyId::Neg64,
        FamilyId::Twenty7_32,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Quarter => "quarter",
            FamilyId::NegQuarter => "neg-quarter",
            FamilyId::Neg27 => "neg-27",
            FamilyId::Four27 => "four-27",
            FamilyId::Sixteen27A => "sixteen-27-a",
            FamilyId::Sixteen27B => "sixteen-27-b",
            FamilyId::Sixty4A => "sixty4-a",
            FamilyId::Sixty4B => "sixty4-b",
            FamilyId::Twenty7_64 => "twenty7-64",
            FamilyId::Neg64 => "neg-64",
            FamilyId::Twenty7_32 => "twenty7-32",
        }
    }

    /// Accepts the canonical name in any case, with `-` or `_` separators.
    pub fn parse(s: &str) -> Result<FamilyId> {
        let norm = |x: &str| {
            x.chars()
                .filter(|c| *c != '-' && *c != '_')
                .flat_map(|c| c.to_lowercase())
                .collect::<alloc::string::String>()
        };
        let want = norm(s);
        FamilyId::ALL
            .into_iter()
            .find(|f| norm(f.name()) == want)
            .ok_or_else(|| Error::UnknownFamily(s.into()))
    }

    /// Tuple length including `n`.
    pub fn arity(self) -> usize {
        self.param_count() + 1
    }

    /// Number of free parameters (tuple length without `n`).
    pub fn param_count(self) -> usize {
        match self {
            FamilyId::Quarter => 6,
            FamilyId::NegQuarter => 3,
            FamilyId::Neg27 => 4,
            FamilyId::Four27
            | FamilyId::Sixty4A
            | FamilyId::Sixty4B
            | FamilyId::Twenty7_64
            | FamilyId::Neg64 => 3,
            FamilyId::Sixteen27A | FamilyId::Sixteen27B | FamilyId::Twenty7_32 => 2,
        }
    }

    pub fn default_r(self) -> u32 {
        match self {
            FamilyId::NegQuarter => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn p(v: Var) -> MultiPoly {
    MultiPoly::var(v)
}

fn c(x: i64) -> MultiPoly {
    MultiPoly::constant(Rational::from_integer(x.into()))
}

fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// `(base + v·n)_{shift + k}` as a numerator (`sign = 1`) or denominator (`-1`) pair.
fn poch(out: &mut Vec<GammaFactor>, base: MultiPoly, v: i64, shift: MultiPoly, sign: i8) {
    out.push(GammaFactor::new(&base + &shift, q(v), q(1), sign));
    out.push(GammaFactor::new(base, q(v), q(0), -sign));
}

fn binomial_nk(out: &mut Vec<GammaFactor>) {
    out.push(GammaFactor::new(c(1), q(1), q(0), 1));
    out.push(GammaFactor::new(c(1), q(0), q(1), -1));
    out.push(GammaFactor::new(c(1), q(1), q(-1), -1));
}

/// The family with symbolic parameters a, b, c, ...
pub fn family_symbolic(id: FamilyId) -> HypTerm {
    use Var::*;
    let z = MultiPoly::zero;
    let mut fs = Vec::new();
    let mut sign = q(1);
    match id {
        FamilyId::Quarter => {
            poch(&mut fs, p(A), 0, p(F), 1);
            poch(&mut fs, p(B), 0, p(E), 1);
            poch(&mut fs, z(), 1, p(D), -1);
            poch(&mut fs, z(), 1, p(C), -1);
        }
        FamilyId::NegQuarter => {
            sign = q(-1);
            poch(&mut fs, p(A), 0, p(C), 1);
            poch(&mut fs, p(B), 0, p(C), 1);
            poch(&mut fs, p(A), 1, z(), -1);
            poch(&mut fs, p(B), 1, z(), -1);
        }
        FamilyId::Neg27 => {
            poch(&mut fs, p(A), 0, z(), 1);
            poch(&mut fs, z(), 1, p(D), 1);
            poch(&mut fs, z(), 2, p(C), -1);
            poch(&mut fs, z(), 2, p(B), -1);
        }
        FamilyId::Four27 => {
            poch(&mut fs, p(A), 0, z(), 1);
            poch(&mut fs, p(B), 0, z(), 1);
            poch(&mut fs, z(), 1, z(), -1);
            poch(&mut fs, z(), 2, p(C), -1);
        }
        FamilyId::Sixteen27A | FamilyId::Sixteen27B => {
            binomial_nk(&mut fs);
            let one_or_two = if id == FamilyId::Sixteen27A { 1 } else { 2 };
            poch(&mut fs, c(one_or_two), 0, z(), 1);
            poch(&mut fs, p(B), 3, p(A), -1);
        }
        FamilyId::Sixty4A => {
            poch(&mut fs, p(A), 0, z(), 1);
            poch(&mut fs, z(), 2, z(), 1);
            poch(&mut fs, z(), 3, p(B), -1);
            poch(&mut fs, z(), 3, p(C), -1);
        }
        FamilyId::Sixty4B => {
            poch(&mut fs, z(), 1, z(), 1);
            poch(&mut fs, z(), 1, p(C), 1);
            poch(&mut fs, z(), 2, p(B), -1);
            poch(&mut fs, z(), 2, p(A), -1);
        }
        FamilyId::Twenty7_64 => {
            poch(&mut fs, z(), 1, z(), 1);
            poch(&mut fs, z(), 2, z(), 1);
            poch(&mut fs, z(), 4, p(B), -1);
            poch(&mut fs, p(A), 1, p(C), -1);
        }
        FamilyId::Neg64 => {
            poch(&mut fs, p(A), 0, z(), 1);
            poch(&mut fs, z(), 1, z(), 1);
            poch(&mut fs, z(), 3, p(B), -1);
            poch(&mut fs, z(), 2, p(C), -1);
        }
        FamilyId::Twenty7_32 => {
            binomial_nk(&mut fs);
            poch(&mut fs, c(1), 0, z(), 1);
            poch(&mut fs, p(B), 2, p(A), -1);
        }
    }
    HypTerm::new(sign, fs).expect("family increments are integral")
}

/// Instantiates a family at numeric parameters (without `n`) and start point `n0`.
pub fn family_instantiate(id: FamilyId, params: &[Rational], n0: Rational) -> Result<HypTerm> {
    if params.len() != id.param_count() {
        return Err(Error::ArityMismatch {
            family: id.name(),
            expected: id.param_count(),
            got: params.len(),
        });
    }
    family_symbolic(id).instantiate(Binding::params(params), n0)
}

/// Instantiates from a full tuple whose last entry is `n`.
pub fn family_from_tuple(id: FamilyId, tuple: &[Rational]) -> Result<HypTerm> {
    if tuple.len() != id.arity() {
        return Err(Error::ArityMismatch {
            family: id.name(),
            expected: id.arity(),
            got: tuple.len(),
        });
    }
    let (n0, ps) = tuple.split_last().unwrap();
    family_instantiate(id, ps, n0.clone())
}

/// `(-1)^k (a)_k (b)_k / ((a+n)_{k+d} (b+n)_{k+c})`: the alternating family with
/// its shifts moved into the denominator.
pub fn shifted_neg_quarter_variant(
    a: Rational,
    b: Rational,
    c: Rational,
    d: Option<Rational>,
) -> HypTerm {
    let k = |x: Rational| MultiPoly::constant(x);
    let mut fs = Vec::new();
    poch(&mut fs, k(a.clone()), 0, MultiPoly::zero(), 1);
    poch(&mut fs, k(b.clone()), 0, MultiPoly::zero(), 1);
    poch(&mut fs, k(a), 1, k(d.unwrap_or_default()), -1);
    poch(&mut fs, k(b), 1, k(c), -1);
    HypTerm::new(q(-1), fs).expect("integral increments")
}

/// Convenience used by tests and examples: the `(1/k!)` term.
pub fn reciprocal_factorial() -> HypTerm {
    HypTerm::new(q(1), vec![GammaFactor::new(c(1), q(0), q(1), -1)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, parse_rational, rat};

    fn qs(s: &str) -> Vec<Rational> {
        s.split(',').map(|x| parse_rational(x).unwrap()).collect()
    }

    fn example_one() -> HypTerm {
        family_instantiate(FamilyId::Quarter, &qs("1/3,1/3,1,1/3,1/3,2/3"), int(1)).unwrap()
    }

    #[test]
    fn quarter_example_has_eight_factors() {
        let t = example_one();
        assert_eq!(t.factors.len(), 8);
        assert_eq!(t.sign_base, int(1));
    }

    #[test]
    fn reciprocal_factorial_ratio() {
        let r = k_shift_ratio(&reciprocal_factorial()).unwrap();
        let expect = RatFunc::new(MultiPoly::one(), &p(Var::K) + &c(1)).unwrap();
        assert_eq!(r, expect);
    }

    #[test]
    fn pochhammer_n_shift() {
        // (n)_k, r = 1 → (n+k)/n
        let mut fs = Vec::new();
        poch(&mut fs, MultiPoly::zero(), 1, MultiPoly::zero(), 1);
        let t = HypTerm::new(int(1), fs).unwrap();
        let r = n_shift_ratio(&t, 1).unwrap();
        let expect = RatFunc::new(&p(Var::N) + &p(Var::K), p(Var::N)).unwrap();
        assert_eq!(r, expect);
    }

    #[test]
    fn quarter_example_ratio_at_origin() {
        // F(1,k) = (1/3)_{k+2/3}(1/3)_{k+1/3} / ((1)_{k+1/3}(1)_{k+1}).
        // F(1,1)/F(1,0) = (1/3+2/3)(1/3+1/3) / ((1+1/3)(1+1)) = (2/3)/(8/3) = 1/4.
        let t = example_one();
        let r = k_shift_ratio(&t).unwrap();
        let at = Binding::new().with(Var::N, int(1)).with(Var::K, int(0));
        assert_eq!(r.eval(&at).unwrap(), rat(1, 4));
        assert_eq!(term_value_normalized(&t, 1).unwrap(), rat(1, 4));
        assert_eq!(term_value_normalized(&t, 0).unwrap(), int(1));
    }

    #[test]
    fn ratio_path_matches_pochhammer_products() {
        let t = example_one();
        for k in 0..8 {
            assert_eq!(term_value_normalized(&t, k).unwrap(), t.direct_value(k).unwrap());
        }
    }

    #[test]
    fn stride_two_increments() {
        // (2n)_{k+c}: argument moves by 2 under n → n+1.
        let t = family_symbolic(FamilyId::Neg27);
        let f = t.n_shift_factors(1).unwrap();
        assert_eq!(f.factors.len(), 2 + 4 + 4);
        let nq = family_symbolic(FamilyId::NegQuarter);
        assert_eq!(nq.n_shift_factors(2).unwrap().factors.len(), 8);
    }

    #[test]
    fn tripled_k_increment_of_printed_reading() {
        // Γ(3k+a+b) over Γ(2k+b): under k → k+1 the arguments move by 3 and 2.
        let fs = vec![
            GammaFactor::new(MultiPoly::constant(rat(3, 2)), int(0), int(3), 1),
            GammaFactor::new(MultiPoly::constant(rat(1, 2)), int(0), int(2), -1),
        ];
        let t = HypTerm::new(int(1), fs).unwrap();
        let r = t.k_shift_factors().unwrap();
        assert_eq!(r.factors.iter().filter(|(_, e)| *e > 0).count(), 3);
        assert_eq!(r.factors.iter().filter(|(_, e)| *e < 0).count(), 2);
    }

    #[test]
    fn non_integer_increments_rejected() {
        let fs = vec![GammaFactor::new(MultiPoly::zero(), rat(1, 2), int(1), 1)];
        let t = HypTerm::new(int(1), fs.clone()).unwrap();
        assert!(matches!(n_shift_ratio(&t, 1), Err(Error::NotHypergeometricInN { r: 1 })));
        assert!(n_shift_ratio(&t, 2).is_ok());
        let fs = vec![GammaFactor::new(MultiPoly::zero(), int(1), rat(1, 2), 1)];
        assert!(matches!(HypTerm::new(int(1), fs), Err(Error::NotHypergeometricInK)));
    }

    #[test]
    fn arity_and_degeneracy() {
        assert!(matches!(
            family_instantiate(FamilyId::Quarter, &qs("1,2"), int(1)),
            Err(Error::ArityMismatch { expected: 6, got: 2, .. })
        ));
        // (n)_k at n0 = 0 puts Γ(0) in a denominator position alone.
        assert!(matches!(
            family_instantiate(FamilyId::Four27, &qs("1/2,1/2,1/2"), int(0)),
            Err(Error::DegenerateArgument(_))
        ));
    }

    #[test]
    fn binomial_terminates() {
        let t = family_instantiate(FamilyId::Sixteen27A, &qs("1/2,1/2"), int(3)).unwrap();
        for k in 4..8 {
            assert!(term_value_normalized(&t, k).unwrap().is_zero());
        }
        assert!(!term_value_normalized(&t, 3).unwrap().is_zero());
    }

    #[test]
    fn family_names_round_trip() {
        for f in FamilyId::ALL {
            assert_eq!(FamilyId::parse(f.name()).unwrap(), f);
        }
        assert_eq!(FamilyId::parse("NEG_QUARTER").unwrap(), FamilyId::NegQuarter);
        assert_eq!(FamilyId::parse("twenty7_32").unwrap(), FamilyId::Twenty7_32);
    }
}
