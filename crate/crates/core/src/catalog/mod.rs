//! Identity records and their verification drivers.
//!
//! Each record pairs a bracket-form series with its closed form, a family
//! parameter tuple that produces it by acceleration, or both. Records without
//! a series are recovered tuples that only assert a recurrence and a rate.

mod data;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::accelerator::{
    accelerated_stream, chu_normalize, convergence_rate, parse_series, stream_proportional, ChuSeries,
};
use crate::error::{Error, Result};
use crate::exact_arith::{format_rational, parse_rational, Binding, Rational};
use crate::hypergeom_terms::{family_from_tuple, FamilyId, HypTerm};
use crate::numerics::{chu_eval_with_cap, closedform_eval, default_term_cap, parse_closed_form, ClosedForm, Enclosure};
use crate::telescoper::{builtin_recurrence, derive, Recurrence};

/// Number of terms compared when testing termwise proportionality.
pub const PROPORTIONALITY_TERMS: usize = 100;

/// Record groups, by convergence rate of the source family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    Quarter,
    NegQuarter,
    Neg27,
    Four27,
    Sixteen27,
    Sixty4,
    TwentySeven64,
    ExtraRate,
    Background,
}

impl Group {
    pub const ALL: [Group; 9] = [
        Group::Quarter,
        Group::NegQuarter,
        Group::Neg27,
        Group::Four27,
        Group::Sixteen27,
        Group::Sixty4,
        Group::TwentySeven64,
        Group::ExtraRate,
        Group::Background,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::Quarter => "quarter",
            Group::NegQuarter => "neg-quarter",
            Group::Neg27 => "neg-27",
            Group::Four27 => "four-27",
            Group::Sixteen27 => "sixteen-27",
            Group::Sixty4 => "sixty4",
            Group::TwentySeven64 => "twenty7-64",
            Group::ExtraRate => "extra-rate",
            Group::Background => "background",
        }
    }

    pub fn parse(s: &str) -> Result<Group> {
        Group::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unknown group `{s}`"),
            })
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) struct Raw {
    id: &'static str,
    group: Group,
    anchor: &'static str,
    series: Option<&'static str>,
    closed: Option<&'static str>,
    derivation: Option<&'static str>,
    rate: Option<&'static str>,
}

fn recovered(
    id: &'static str,
    group: Group,
    anchor: &'static str,
    derivation: &'static str,
    rate: &'static str,
) -> Raw {
    Raw {
        id,
        group,
        anchor,
        series: None,
        closed: None,
        derivation: Some(derivation),
        rate: Some(rate),
    }
}

/// A family instance: parameters, start point, and step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub family: FamilyId,
    pub params: Vec<Rational>,
    pub n0: Rational,
    pub r: u32,
}

impl Derivation {
    pub fn term(&self) -> Result<HypTerm> {
        let mut tuple = self.params.clone();
        tuple.push(self.n0.clone());
        family_from_tuple(self.family, &tuple)
    }
}

/// Text form `family: p1,...,pm,n`.
impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.family)?;
        for p in &self.params {
            write!(f, "{},", format_rational(p))?;
        }
        f.write_str(&format_rational(&self.n0))
    }
}

/// Reads `family: p1,...,pm,n`; the step is the family default.
pub fn parse_derivation(text: &str) -> Result<Derivation> {
    let (fam, tuple) = text.split_once(':').ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "expected `family: tuple`".into(),
    })?;
    let family = FamilyId::parse(fam.trim())?;
    let mut vals = tuple
        .split(',')
        .map(|x| parse_rational(x.trim()))
        .collect::<Result<Vec<_>>>()?;
    if vals.len() != family.arity() {
        return Err(Error::ArityMismatch {
            family: family.name(),
            expected: family.arity(),
            got: vals.len(),
        });
    }
    let n0 = vals.pop().unwrap();
    Ok(Derivation {
        family,
        params: vals,
        n0,
        r: family.default_r(),
    })
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub group: Group,
    pub chu: Option<ChuSeries>,
    pub closed: Option<ClosedForm>,
    pub derivation: Option<Derivation>,
    pub rate: Rational,
    pub anchor: String,
}

impl CatalogEntry {
    /// Builds a record, taking the rate from the series when present.
    pub fn new(
        id: String,
        group: Group,
        chu: Option<ChuSeries>,
        closed: Option<ClosedForm>,
        derivation: Option<Derivation>,
        rate: Option<Rational>,
        anchor: String,
    ) -> Result<Self> {
        let rate = match (&chu, rate) {
            (Some(s), _) => s.z.clone(),
            (None, Some(r)) => r,
            (None, None) => return Err(Error::NoSeries(id)),
        };
        if chu.is_none() && derivation.is_none() {
            return Err(Error::NoDerivation(id));
        }
        Ok(Self {
            id,
            group,
            chu,
            closed,
            derivation,
            rate,
            anchor,
        })
    }
}

fn from_raw(r: &Raw) -> CatalogEntry {
    let chu = r.series.map(|s| parse_series(s).expect("embedded series parses"));
    let closed = r.closed.map(|s| parse_closed_form(s).expect("embedded closed form parses"));
    let derivation = r
        .derivation
        .map(|s| parse_derivation(s).expect("embedded tuple parses"));
    let rate = r.rate.map(|s| parse_rational(s).expect("embedded rate parses"));
    CatalogEntry::new(r.id.into(), r.group, chu, closed, derivation, rate, r.anchor.into())
        .expect("embedded record is complete")
}

/// All records, in group order.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    data::rows().iter().map(from_raw).collect()
}

pub fn find_entry(id: &str) -> Result<CatalogEntry> {
    data::rows()
        .iter()
        .find(|r| r.id == id)
        .map(from_raw)
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

/// Outcome of comparing a series with its closed form.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub id: String,
    pub pass: bool,
    pub lhs: Enclosure,
    pub rhs: Enclosure,
    pub terms_used: usize,
}

/// Evaluates both sides; passes when the enclosures overlap and their
/// combined radius is at most `10^{−(digits−2)}`. `cap` overrides the
/// default term cap.
pub fn verify(entry: &CatalogEntry, digits: u32, cap: Option<usize>) -> Result<VerifyReport> {
    let s = entry.chu.as_ref().ok_or_else(|| Error::NoSeries(entry.id.clone()))?;
    let cf = entry.closed.as_ref().ok_or_else(|| Error::NoSeries(entry.id.clone()))?;
    let cap = cap.unwrap_or_else(|| default_term_cap(s, digits));
    let ev = chu_eval_with_cap(s, digits, cap)?;
    let rhs = closedform_eval(cf, digits)?;
    let lhs = ev.enclosure;
    let combined = Enclosure {
        center: lhs.center.clone(),
        radius: lhs.radius.add_exact(&rhs.radius),
    };
    let pass = lhs.overlaps(&rhs) && combined.radius_within(digits.saturating_sub(2));
    Ok(VerifyReport {
        id: entry.id.clone(),
        pass,
        lhs,
        rhs,
        terms_used: ev.terms_used,
    })
}

pub fn verify_entry(id: &str, digits: u32) -> Result<VerifyReport> {
    verify(&find_entry(id)?, digits, None)
}

/// Where a recurrence came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecurrenceSource {
    /// Specialization of a printed symbolic recurrence.
    Printed,
    /// Derived by creative telescoping.
    Derived,
}

#[derive(Clone, Debug)]
pub struct DeriveReport {
    pub id: String,
    pub recurrence: Option<Recurrence>,
    pub source: Option<RecurrenceSource>,
    pub rate: Option<Rational>,
    pub rate_matches: bool,
    /// `c` with `stream_j = c · series_j` for `j ≤ 100`, when the record
    /// has a series.
    pub proportional: Option<Rational>,
    /// The accelerated series in bracket form and its scale.
    pub normalized: Option<(ChuSeries, Rational)>,
}

impl DeriveReport {
    pub fn recurrence_found(&self) -> bool {
        self.recurrence.is_some()
    }
}

/// The printed recurrence specialized to `d`, when the family has one and it
/// verifies on the instance.
pub fn printed_recurrence(d: &Derivation, t: &HypTerm) -> Result<Option<Recurrence>> {
    let Some(sym) = builtin_recurrence(d.family) else {
        return Ok(None);
    };
    let rec = sym.specialize(&Binding::params(&d.params))?;
    Ok(if rec.verify(t)? { Some(rec) } else { None })
}

/// Finds a recurrence for the record's tuple, accelerates, and compares the
/// stream with the record's series.
pub fn derive_report(entry: &CatalogEntry, max_deg: usize) -> Result<DeriveReport> {
    let d = entry
        .derivation
        .as_ref()
        .ok_or_else(|| Error::NoDerivation(entry.id.clone()))?;
    let t = d.term()?;
    let (rec, source) = match printed_recurrence(d, &t)? {
        Some(rec) => (Some(rec), Some(RecurrenceSource::Printed)),
        None => match derive(&t, Some(d.r), max_deg)? {
            Some(rec) => (Some(rec), Some(RecurrenceSource::Derived)),
            None => (None, None),
        },
    };
    let Some(rec) = rec else {
        return Ok(DeriveReport {
            id: entry.id.clone(),
            recurrence: None,
            source: None,
            rate: None,
            rate_matches: false,
            proportional: None,
            normalized: None,
        });
    };
    let rate = convergence_rate(&rec)?;
    let stream = accelerated_stream(&t, &rec, &d.n0)?;
    let proportional = match &entry.chu {
        Some(s) => {
            let a = stream.terms(PROPORTIONALITY_TERMS + 1)?;
            let b = s.terms(PROPORTIONALITY_TERMS + 1)?;
            stream_proportional(&a, &b, PROPORTIONALITY_TERMS)
        }
        None => None,
    };
    let normalized = chu_normalize(stream.ratio(), &stream.t0()?).ok();
    Ok(DeriveReport {
        id: entry.id.clone(),
        rate_matches: rate == entry.rate,
        rate: Some(rate),
        recurrence: Some(rec),
        source,
        proportional,
        normalized,
    })
}

pub fn derive_entry(id: &str) -> Result<DeriveReport> {
    derive_report(&find_entry(id)?, crate::telescoper::DEFAULT_MAX_DEG)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, rat};
    use alloc::collections::BTreeSet;

    #[test]
    fn group_counts() {
        let es = catalog_entries();
        let count = |g: Group| es.iter().filter(|e| e.group == g && e.chu.is_some()).count();
        let got: Vec<usize> = Group::ALL.iter().map(|g| count(*g)).collect();
        assert_eq!(got, [18, 8, 12, 11, 4, 8, 3, 2, 11]);
        assert_eq!(es.iter().filter(|e| e.chu.is_none()).count(), 28);
    }

    #[test]
    fn ids_and_anchors_are_unique() {
        let es = catalog_entries();
        let ids: BTreeSet<&str> = es.iter().map(|e| e.id.as_str()).collect();
        let anchors: BTreeSet<&str> = es.iter().map(|e| e.anchor.as_str()).collect();
        assert_eq!(ids.len(), es.len());
        assert_eq!(anchors.len(), es.len());
        assert!(es.iter().all(|e| !e.anchor.is_empty()));
        for e in &es {
            if let Some(s) = &e.chu {
                assert_eq!(e.rate, s.z, "{}", e.id);
                assert!(e.closed.is_some(), "{}", e.id);
            }
        }
    }

    #[test]
    fn transcribed_examples() {
        let rt1 = find_entry("RT1").unwrap();
        assert_eq!(
            rt1.chu.unwrap().to_string(),
            "z=1/4 upper=[1/3,1,5/3] lower=[7/6,3/2,11/6] num=[2,3] den=[1]"
        );
        assert_eq!(rt1.closed.unwrap().to_string(), "5/4*pi^1*log2^0*2^0*3^-1/2");
        let nq = find_entry("NQ1").unwrap();
        assert_eq!(nq.closed.unwrap().exp_log2, int(1));
        let pm1 = find_entry("PM1").unwrap().chu.unwrap();
        assert_eq!(pm1.den, crate::exact_arith::UniPoly::from_ints(crate::exact_arith::Var::J, &[2, 9, 9]));
        assert_eq!(find_entry("F427-4").unwrap().rate, rat(4, 27));
        assert_eq!(find_entry("nope").unwrap_err(), Error::UnknownEntry("nope".into()));
    }

    #[test]
    fn verify_and_corruption() {
        let r = verify_entry("RT1", 50).unwrap();
        assert!(r.pass);
        let mut e = find_entry("RT1").unwrap();
        let s = e.chu.as_mut().unwrap();
        s.num = crate::exact_arith::UniPoly::from_ints(crate::exact_arith::Var::J, &[3, 3]);
        assert!(!verify(&e, 50, None).unwrap().pass);
        assert!(verify_entry("GUILLERA-QUARTER", 50).unwrap().pass);
    }

    #[test]
    fn derive_example_one() {
        let r = derive_entry("Q1").unwrap();
        assert!(r.recurrence_found());
        assert_eq!(r.rate, Some(rat(1, 4)));
        assert!(r.rate_matches);
        assert!(r.proportional.is_some());
    }

    #[test]
    fn derivation_text_round_trip() {
        let d = parse_derivation("neg-quarter: 1/4,1/2,1/4,1/2").unwrap();
        assert_eq!(d.r, 2);
        assert_eq!(d.to_string(), "neg-quarter: 1/4,1/2,1/4,1/2");
        assert!(parse_derivation("quarter: 1,2").is_err());
    }
}
