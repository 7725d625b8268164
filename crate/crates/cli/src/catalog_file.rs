//! Line-oriented catalog text: one tab-separated entry per line.
//!
//! Columns are `id group rate series closed derivation anchor`; an absent
//! field is written `-`. Lines starting with `#` and blank lines are skipped.

use std::fmt::Write as _;

use hyperaccel::accelerator::parse_series;
use hyperaccel::catalog::{parse_derivation, CatalogEntry, Group};
use hyperaccel::exact_arith::{format_rational, parse_rational};
use hyperaccel::numerics::parse_closed_form;

use crate::CliError;

pub const HEADER: &str = "# id\tgroup\trate\tseries\tclosed\tderivation\tanchor";

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

pub fn format_entry(e: &CatalogEntry) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
        e.id,
        e.group,
        format_rational(&e.rate),
        opt(&e.chu),
        opt(&e.closed),
        opt(&e.derivation),
        e.anchor
    )
}

pub fn format_catalog(entries: &[CatalogEntry]) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for e in entries {
        writeln!(out, "{}", format_entry(e)).unwrap();
    }
    out
}

fn field(s: &str) -> Option<&str> {
    (s != "-").then_some(s)
}

pub fn parse_entry(line: &str, lineno: usize) -> Result<CatalogEntry, CliError> {
    let bad = |msg: String| CliError::Format { line: lineno, msg };
    let cols: Vec<&str> = line.split('\t').collect();
    let [id, group, rate, series, closed, derivation, anchor] = cols[..] else {
        return Err(bad(format!("expected 7 columns, got {}", cols.len())));
    };
    let engine = |e: hyperaccel::Error| bad(e.to_string());
    let group = Group::parse(group).map_err(engine)?;
    let rate = parse_rational(rate).map_err(engine)?;
    let chu = field(series).map(parse_series).transpose().map_err(engine)?;
    let closed = field(closed).map(parse_closed_form).transpose().map_err(engine)?;
    let derivation = field(derivation).map(parse_derivation).transpose().map_err(engine)?;
    if let Some(s) = &chu {
        if s.z != rate {
            return Err(bad(format!("rate {} differs from series ratio {}", rate, s.z)));
        }
    }
    CatalogEntry::new(id.into(), group, chu, closed, derivation, Some(rate), anchor.into()).map_err(engine)
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| parse_entry(l, i + 1))
        .collect()
}
