//! Command handlers.

use std::io::Write;

use hyperaccel::accelerator::{
    accelerated_stream_checked, chu_normalize, convergence_rate, default_m_max, parse_series,
    symbolic_convergence_rate, ChuSeries,
};
use hyperaccel::catalog::{catalog_entries, find_entry, verify, CatalogEntry, VerifyReport};
use hyperaccel::exact_arith::{format_rational, Binding, Rational};
use hyperaccel::hypergeom_terms::{family_instantiate, FamilyId, HypTerm};
use hyperaccel::numerics::{chu_eval_with_cap, default_term_cap};
use hyperaccel::telescoper::{
    builtin_recurrence, derive, verify_symbolic, Recurrence, SYMBOLIC_FAMILIES,
};
use rayon::prelude::*;

use crate::args::{CatalogAction, Cli, Command, Format, Instance, SeriesSource};
use crate::catalog_file::format_catalog;
use crate::{CliError, Settings, Status};

type Out<'a> = &'a mut dyn Write;

pub fn run_with(cli: &Cli, settings: &Settings, out: Out) -> Result<Status, CliError> {
    let tsv = cli.format == Format::Tsv;
    match &cli.command {
        Command::VerifySymbolic { family } => verify_symbolic_cmd(*family, tsv, out),
        Command::Derive { instance, r, max_deg } => derive_cmd(instance, *r, *max_deg, out),
        Command::Accelerate {
            instance,
            r,
            terms,
            chu,
        } => accelerate_cmd(instance, r.0, *terms, *chu, tsv, out),
        Command::Eval { source, digits } => eval_cmd(source, *digits, settings, tsv, out),
        Command::Check { id, digits } => {
            let e = find_entry(id)?;
            let report = verify(&e, *digits, settings.max_terms);
            let pass = write_check(&e.id, report, *digits, tsv, out)?;
            Ok(status(pass))
        }
        Command::CheckAll { digits, jobs } => check_all_cmd(*digits, *jobs, settings, tsv, out),
        Command::Catalog { action } => catalog_cmd(action, tsv, out),
        Command::Rate {
            family,
            params,
            n,
            id,
            series,
        } => rate_cmd(*family, params.as_deref(), n.as_ref(), id.as_deref(), series.as_deref(), out),
    }
}

fn status(pass: bool) -> Status {
    if pass {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn verify_symbolic_cmd(family: Option<FamilyId>, tsv: bool, out: Out) -> Result<Status, CliError> {
    let families: Vec<FamilyId> = match family {
        Some(f) => vec![f],
        None => SYMBOLIC_FAMILIES.to_vec(),
    };
    let mut all = true;
    for f in families {
        let (ok, residual) = verify_symbolic(f)
            .ok_or_else(|| CliError::Usage(format!("family {f} has no printed recurrence")))?;
        let r = builtin_recurrence(f).map_or(0, |rec| rec.r);
        all &= ok;
        if tsv {
            writeln!(out, "{f}\t{r}\t{}", residual.num_terms())?;
        } else if ok {
            writeln!(out, "{f}: r = {r}, residual = 0")?;
        } else {
            writeln!(out, "{f}: r = {r}, residual has {} nonzero terms", residual.num_terms())?;
        }
    }
    Ok(status(all))
}

fn instance_term(inst: &Instance) -> Result<HypTerm, CliError> {
    Ok(family_instantiate(inst.family, &inst.params, inst.n.clone())?)
}

fn derive_cmd(inst: &Instance, r: Option<u32>, max_deg: usize, out: Out) -> Result<Status, CliError> {
    let t = instance_term(inst)?;
    let rec = derive(&t, r, max_deg)?.ok_or(hyperaccel::Error::NoRecurrence)?;
    writeln!(out, "{rec}")?;
    writeln!(out, "rate = {}", format_rational(&convergence_rate(&rec)?))?;
    Ok(Status::Pass)
}

/// The printed recurrence when it applies to the instance, else a derived one.
fn instance_recurrence(inst: &Instance, t: &HypTerm, r: Option<u32>) -> Result<Recurrence, CliError> {
    if let Some(sym) = builtin_recurrence(inst.family) {
        if r.is_none_or(|r| r == sym.r) {
            let rec = sym.specialize(&Binding::params(&inst.params))?;
            if rec.verify(t)? {
                return Ok(rec);
            }
        }
    }
    let r = r.or(Some(inst.family.default_r()));
    Ok(derive(t, r, hyperaccel::telescoper::DEFAULT_MAX_DEG)?.ok_or(hyperaccel::Error::NoRecurrence)?)
}

fn accelerate_cmd(
    inst: &Instance,
    r: Option<u32>,
    terms: usize,
    chu: bool,
    tsv: bool,
    out: Out,
) -> Result<Status, CliError> {
    let t = instance_term(inst)?;
    let rec = instance_recurrence(inst, &t, r)?;
    let rate = convergence_rate(&rec)?;
    let stream = accelerated_stream_checked(&t, &rec, &inst.n, default_m_max(&rate))?;
    if chu {
        let (series, scale) = chu_normalize(stream.ratio(), &stream.t0()?)?;
        if tsv {
            writeln!(out, "{series}\t{}", format_rational(&scale))?;
        } else {
            writeln!(out, "{series}")?;
            writeln!(out, "scale = {}", format_rational(&scale))?;
        }
        return Ok(Status::Pass);
    }
    if !tsv {
        writeln!(out, "r = {}, rate = {}", rec.r, format_rational(&rate))?;
    }
    for (j, x) in stream.terms(terms)?.iter().enumerate() {
        if tsv {
            writeln!(out, "{j}\t{}", format_rational(x))?;
        } else {
            writeln!(out, "t_{j} = {}", format_rational(x))?;
        }
    }
    Ok(Status::Pass)
}

fn source_series(source: &SeriesSource) -> Result<ChuSeries, CliError> {
    match (&source.id, &source.series) {
        (Some(id), _) => {
            let e = find_entry(id)?;
            Ok(e.chu.ok_or(hyperaccel::Error::NoSeries(e.id))?)
        }
        (None, Some(text)) => Ok(parse_series(text)?),
        (None, None) => Err(CliError::Usage("one of --id or --series is required".into())),
    }
}

fn eval_cmd(source: &SeriesSource, digits: u32, settings: &Settings, tsv: bool, out: Out) -> Result<Status, CliError> {
    let s = source_series(source)?;
    let cap = settings.max_terms.unwrap_or_else(|| default_term_cap(&s, digits));
    let ev = chu_eval_with_cap(&s, digits, cap)?;
    let e = &ev.enclosure;
    if tsv {
        writeln!(
            out,
            "{}\t{}\t{}",
            e.center.to_decimal(digits as usize),
            e.radius.to_sci_up(2),
            ev.terms_used
        )?;
    } else {
        writeln!(out, "{}", e.format(digits as usize))?;
    }
    Ok(Status::Pass)
}

/// Writes one check line; returns whether it passed.
fn write_check(
    id: &str,
    report: hyperaccel::Result<VerifyReport>,
    digits: u32,
    tsv: bool,
    out: Out,
) -> Result<bool, CliError> {
    let d = digits as usize;
    match report {
        Ok(r) => {
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            if tsv {
                writeln!(out, "{id}\t{verdict}\t{}\t{}\t{}", r.terms_used, r.lhs.format(d), r.rhs.format(d))?;
            } else {
                writeln!(
                    out,
                    "{verdict} {id:<18} terms={:<5} lhs={}  rhs={}",
                    r.terms_used,
                    r.lhs.format(d),
                    r.rhs.format(d)
                )?;
            }
            Ok(r.pass)
        }
        Err(e) => {
            if tsv {
                writeln!(out, "{id}\tFAIL\t-\t{e}\t-")?;
            } else {
                writeln!(out, "FAIL {id:<18} {e}")?;
            }
            Ok(false)
        }
    }
}

fn check_all_cmd(
    digits: u32,
    jobs: Option<usize>,
    settings: &Settings,
    tsv: bool,
    out: Out,
) -> Result<Status, CliError> {
    if jobs == Some(0) {
        return Err(CliError::Usage("--jobs must be positive".into()));
    }
    let entries: Vec<CatalogEntry> = catalog_entries().into_iter().filter(|e| e.chu.is_some()).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let reports: Vec<_> = pool.install(|| {
        entries
            .par_iter()
            .map(|e| verify(e, digits, settings.max_terms))
            .collect()
    });
    let mut passed = 0;
    for (e, r) in entries.iter().zip(reports) {
        passed += usize::from(write_check(&e.id, r, digits, tsv, out)?);
    }
    if !tsv {
        writeln!(out, "passed {passed}/{}", entries.len())?;
    }
    Ok(status(passed == entries.len()))
}

fn kind(e: &CatalogEntry) -> &'static str {
    match (e.chu.is_some(), e.derivation.is_some()) {
        (true, true) => "series+tuple",
        (true, false) => "series",
        _ => "tuple",
    }
}

fn catalog_cmd(action: &CatalogAction, tsv: bool, out: Out) -> Result<Status, CliError> {
    let entries = catalog_entries();
    match action {
        CatalogAction::List => {
            for e in &entries {
                let rate = format_rational(&e.rate);
                if tsv {
                    writeln!(out, "{}\t{}\t{rate}\t{}\t{}", e.id, e.group, kind(e), e.anchor)?;
                } else {
                    writeln!(out, "{:<18} {:<12} {rate:<7} {:<12} {}", e.id, e.group.name(), kind(e), e.anchor)?;
                }
            }
        }
        CatalogAction::Export { out: path } => {
            std::fs::write(path, format_catalog(&entries))?;
            writeln!(out, "wrote {} entries to {}", entries.len(), path.display())?;
        }
    }
    Ok(Status::Pass)
}

fn rate_cmd(
    family: Option<FamilyId>,
    params: Option<&[Rational]>,
    n: Option<&Rational>,
    id: Option<&str>,
    series: Option<&str>,
    out: Out,
) -> Result<Status, CliError> {
    let rate = match (family, params, id, series) {
        (Some(f), Some(p), _, _) => {
            let inst = Instance {
                family: f,
                params: p.to_vec(),
                n: n.cloned().unwrap_or_else(|| Rational::from_integer(1.into())),
            };
            let t = instance_term(&inst)?;
            convergence_rate(&instance_recurrence(&inst, &t, None)?)?
        }
        (Some(f), None, _, _) => {
            let sym = builtin_recurrence(f).ok_or_else(|| {
                CliError::Usage(format!("family {f} has no printed recurrence; pass --params"))
            })?;
            symbolic_convergence_rate(&sym)?
        }
        (None, _, Some(id), _) => find_entry(id)?.rate,
        (None, _, None, Some(s)) => parse_series(s)?.z,
        _ => return Err(CliError::Usage("one of --family, --id or --series is required".into())),
    };
    writeln!(out, "{}", format_rational(&rate))?;
    Ok(Status::Pass)
}
