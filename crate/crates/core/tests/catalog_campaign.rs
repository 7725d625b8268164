//! Whole-catalog campaigns: closed-form checks and derivation matching.

use hyperaccel::catalog::{catalog_entries, derive_report, verify};
use hyperaccel::telescoper::DEFAULT_MAX_DEG;

#[test]
fn every_series_matches_its_closed_form() {
    let mut failed = Vec::new();
    for e in catalog_entries().iter().filter(|e| e.chu.is_some()) {
        match verify(e, 50, None) {
            Ok(r) if r.pass => {}
            Ok(r) => failed.push(format!("{}: {} vs {}", e.id, r.lhs, r.rhs)),
            Err(err) => failed.push(format!("{}: {err}", e.id)),
        }
    }
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn every_tuple_reproduces_its_rate_and_series() {
    let mut failed = Vec::new();
    for e in catalog_entries().iter().filter(|e| e.derivation.is_some()) {
        let r = derive_report(e, DEFAULT_MAX_DEG).unwrap();
        if !r.recurrence_found() || !r.rate_matches {
            failed.push(format!("{}: rate {:?}", e.id, r.rate));
        }
        if e.chu.is_some() && r.proportional.is_none() {
            failed.push(format!("{}: not proportional", e.id));
        }
    }
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn equivalent_pair_is_not_termwise_proportional() {
    use hyperaccel::accelerator::stream_proportional;
    use hyperaccel::catalog::{find_entry, verify_entry};
    assert!(verify_entry("N27-PAIR-A", 50).unwrap().pass);
    assert!(verify_entry("N27-PAIR-B", 50).unwrap().pass);
    let a = find_entry("N27-PAIR-A").unwrap().chu.unwrap().terms(101).unwrap();
    let b = find_entry("N27-PAIR-B").unwrap().chu.unwrap().terms(101).unwrap();
    assert_eq!(stream_proportional(&a, &b, 100), None);
}

#[test]
fn recovered_tuples_assert_only_rates() {
    use hyperaccel::catalog::derive_entry;
    // the tuple (1/2,1/2,1/2,1/2,0,0,1) accelerates to the pi^2/4 series
    let r = derive_entry("GUILLERA-QUARTER").unwrap();
    assert!(r.recurrence_found());
    assert_eq!(r.rate, Some(hyperaccel::exact_arith::rat(1, 4)));
    assert!(r.proportional.is_some());
    for e in catalog_entries().iter().filter(|e| e.chu.is_none()) {
        assert!(e.closed.is_none(), "{}", e.id);
        assert!(e.derivation.is_some(), "{}", e.id);
    }
}
