//! Two-term recurrences `p1(n)·F(n+r,k) + p2(n)·F(n,k) = G(n,k+1) − G(n,k)`.
//!
//! Three symbolic recurrences are carried as printed text and checked as exact
//! identities over the free parameters. For numeric parameter tuples a
//! recurrence can also be derived from scratch by creative telescoping.

mod gosper;
mod linalg;
mod printed;
mod zeilberger;

use alloc::vec::Vec;
use core::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact_arith::parse::{parse_poly, parse_ratfunc};
use crate::exact_arith::{Binding, MultiPoly, RatFunc, Rational, UniPoly, UniRatFunc, Var};
use crate::hypergeom_terms::{FamilyId, HypTerm};

pub use gosper::gosper;
pub use zeilberger::{derive, zeilberger_two_term};

/// Default bound on the certificate polynomial degree searched by derivation.
pub const DEFAULT_MAX_DEG: usize = 8;

/// A recurrence for one parameter instance; `p1`, `p2` are in `n`.
#[derive(Clone, Debug)]
pub struct Recurrence {
    pub r: u32,
    pub p1: UniPoly,
    pub p2: UniPoly,
    pub cert: RatFunc,
}

impl Recurrence {
    /// Reduced `p1/p2`, the invariant that does not depend on scaling.
    pub fn ratio(&self) -> Result<UniRatFunc> {
        UniRatFunc::new(self.p1.clone(), self.p2.clone())
    }

    /// Checks the telescoping identity against `t`.
    pub fn verify(&self, t: &HypTerm) -> Result<bool> {
        let res = telescoping_residual(
            t,
            self.r,
            &MultiPoly::from_unipoly(&self.p1),
            &MultiPoly::from_unipoly(&self.p2),
            &self.cert,
        )?;
        Ok(res.is_zero())
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "r = {}", self.r)?;
        writeln!(f, "p1 = {}", self.p1.format_coeffs())?;
        writeln!(f, "p2 = {}", self.p2.format_coeffs())?;
        write!(f, "cert = {}", self.cert)
    }
}

/// A recurrence with the family parameters left symbolic.
#[derive(Clone, Debug)]
pub struct SymbolicRecurrence {
    pub family: FamilyId,
    pub r: u32,
    pub p1: MultiPoly,
    pub p2: MultiPoly,
    pub cert: RatFunc,
}

impl SymbolicRecurrence {
    /// Substitutes numeric parameters, leaving `n` and `k` free.
    pub fn specialize(&self, params: &Binding) -> Result<Recurrence> {
        let p1 = self.p1.bind(params);
        let p2 = self.p2.bind(params);
        let unbound = |p: &MultiPoly| {
            Var::PARAMS
                .iter()
                .find(|v| p.uses(**v))
                .map(|v| Error::UnboundVariable(*v))
        };
        let p1u = p1.to_unipoly(Var::N).ok_or_else(|| unbound(&p1).unwrap())?;
        let p2u = p2.to_unipoly(Var::N).ok_or_else(|| unbound(&p2).unwrap())?;
        Ok(Recurrence {
            r: self.r,
            p1: p1u,
            p2: p2u,
            cert: self.cert.bind(params)?,
        })
    }
}

/// Families that carry a printed symbolic recurrence.
pub const SYMBOLIC_FAMILIES: [FamilyId; 3] =
    [FamilyId::Quarter, FamilyId::NegQuarter, FamilyId::Neg27];

/// The printed recurrence for `id`, if it has one.
pub fn builtin_recurrence(id: FamilyId) -> Option<SymbolicRecurrence> {
    let (r, p1, p2, cert) = match id {
        FamilyId::Quarter => (1, printed::QUARTER_P1, printed::QUARTER_P2, printed::QUARTER_CERT),
        FamilyId::NegQuarter => (
            2,
            printed::NEG_QUARTER_P1,
            printed::NEG_QUARTER_P2,
            printed::NEG_QUARTER_CERT,
        ),
        FamilyId::Neg27 => (1, printed::NEG_27_P1, printed::NEG_27_P2, printed::NEG_27_CERT),
        _ => return None,
    };
    Some(SymbolicRecurrence {
        family: id,
        r,
        p1: parse_poly(p1).expect("printed p1 parses"),
        p2: parse_poly(p2).expect("printed p2 parses"),
        cert: parse_ratfunc(cert).expect("printed certificate parses"),
    })
}

/// All printed recurrences, keyed by family.
pub fn builtin_recurrences() -> Vec<(FamilyId, SymbolicRecurrence)> {
    SYMBOLIC_FAMILIES
        .iter()
        .map(|&id| (id, builtin_recurrence(id).unwrap()))
        .collect()
}

/// Numerator of `p1·ρ_n,r + p2 − (cert(k+1)·ρ_k − cert)` over a common
/// denominator; zero exactly when the identity holds.
pub fn telescoping_residual(
    t: &HypTerm,
    r: u32,
    p1: &MultiPoly,
    p2: &MultiPoly,
    cert: &RatFunc,
) -> Result<MultiPoly> {
    let rk = t.k_shift_factors()?.to_ratfunc();
    let rn = t.n_shift_factors(r)?.to_ratfunc();
    let (nn, dn) = (rn.num(), rn.den());
    let (nk, dk) = (rk.num(), rk.den());
    let (cn, cd) = (cert.num(), cert.den());
    let one = Rational::from_integer(1.into());
    let cn1 = cn.shift(Var::K, &one);
    let cd1 = cd.shift(Var::K, &one);
    // p1·nn/dn + p2 − cn1·nk/(cd1·dk) + cn/cd, times dn·dk·cd·cd1
    let cdcd1 = cd * &cd1;
    let dndk = dn * dk;
    let lhs = &(&(p1 * nn) + &(p2 * dn)) * &(dk * &cdcd1);
    let mid = &(&cn1 * nk) * &(dn * cd);
    let tail = &(cn * &dndk) * &cd1;
    Ok(&(&lhs - &mid) + &tail)
}

/// Checks a symbolic recurrence against its family with parameters left free.
pub fn verify_symbolic_recurrence(rec: &SymbolicRecurrence) -> Result<(bool, MultiPoly)> {
    let t = crate::hypergeom_terms::family_symbolic(rec.family);
    let res = telescoping_residual(&t, rec.r, &rec.p1, &rec.p2, &rec.cert)?;
    Ok((res.is_zero(), res))
}

/// Verifies the printed recurrence of `id`; `None` for families without one.
pub fn verify_symbolic(id: FamilyId) -> Option<(bool, MultiPoly)> {
    let rec = builtin_recurrence(id)?;
    Some(verify_symbolic_recurrence(&rec).expect("family ratios are well formed"))
}

/// Divides out `gcd(p1, p2)` and scales to coprime integer content with
/// `lc(p2) > 0`, adjusting the certificate to match.
pub(crate) fn normalize(rec: Recurrence) -> Recurrence {
    let g = rec.p1.gcd(&rec.p2);
    let (mut p1, mut p2, mut cert) = (rec.p1, rec.p2, rec.cert);
    if g.degree().is_some_and(|d| d > 0) {
        p1 = p1.exact_div(&g).unwrap();
        p2 = p2.exact_div(&g).unwrap();
        let den = cert.den() * &MultiPoly::from_unipoly(&g);
        cert = RatFunc::new(cert.num().clone(), den).unwrap();
    }
    let mut all: Vec<Rational> = p1.coeffs().to_vec();
    all.extend(p2.coeffs().iter().cloned());
    let lead = if p2.is_zero() { p1.lc() } else { p2.lc() };
    let c = crate::exact_arith::unipoly_content(&all, lead.is_negative());
    let s = c.recip();
    Recurrence {
        r: rec.r,
        p1: p1.scale(&s),
        p2: p2.scale(&s),
        cert: cert.mul(&RatFunc::constant(s)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, rat, Mono};
    use crate::hypergeom_terms::family_instantiate;

    #[test]
    fn printed_monomials() {
        let q = builtin_recurrence(FamilyId::Quarter).unwrap();
        assert_eq!(q.p2.coeff(&Mono::from_pairs(&[(Var::N, 4)])), int(4));
        assert_eq!(q.p1.coeff(&Mono::from_pairs(&[(Var::N, 4)])), int(-1));
        assert_eq!(builtin_recurrence(FamilyId::NegQuarter).unwrap().r, 2);
        assert!(builtin_recurrence(FamilyId::Four27).is_none());
    }

    #[test]
    fn symbolic_identities_hold() {
        for id in SYMBOLIC_FAMILIES {
            let (ok, res) = verify_symbolic(id).unwrap();
            assert!(ok, "{id}: residual has {} terms", res.num_terms());
        }
    }

    #[test]
    fn corrupted_coefficient_is_detected() {
        let mut q = builtin_recurrence(FamilyId::Quarter).unwrap();
        q.p2.add_term(Mono::from_pairs(&[(Var::N, 4)]), int(1));
        let (ok, res) = verify_symbolic_recurrence(&q).unwrap();
        assert!(!ok);
        assert!(!res.is_zero());
    }

    #[test]
    fn specialization_satisfies_instance_identity() {
        let q = builtin_recurrence(FamilyId::Quarter).unwrap();
        let ps = [rat(1, 3), rat(1, 3), int(1), rat(1, 3), rat(1, 3), rat(2, 3)];
        let rec = q.specialize(&Binding::params(&ps)).unwrap();
        let t = family_instantiate(FamilyId::Quarter, &ps, int(1)).unwrap();
        assert!(rec.verify(&t).unwrap());
        let mut bad = rec.clone();
        bad.p1 = bad.p1.scale(&int(2));
        assert!(!bad.verify(&t).unwrap());
    }

    #[test]
    fn normalize_fixes_sign_and_content() {
        let rec = Recurrence {
            r: 1,
            p1: UniPoly::from_ints(Var::N, &[2, 2]),
            p2: UniPoly::from_ints(Var::N, &[-4, -4, 0]),
            cert: RatFunc::constant(int(6)),
        };
        let n = normalize(rec);
        assert_eq!(n.p1, UniPoly::from_ints(Var::N, &[-1]));
        assert_eq!(n.p2, UniPoly::from_ints(Var::N, &[2]));
        let n1 = MultiPoly::affine(int(1), &[(Var::N, int(1))]);
        assert_eq!(n.cert, RatFunc::new(MultiPoly::constant(int(-3)), n1).unwrap());
    }
}
