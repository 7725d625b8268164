//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Parser;
use hyperaccel::accelerator::{accelerated_stream, chu_normalize, ChuSeries};
use hyperaccel::catalog::{
    catalog_entries, derive_report, find_entry, printed_recurrence, verify, CatalogEntry, Group,
};
use hyperaccel::exact_arith::{rat, Binding, Rational};
use hyperaccel::hypergeom_terms::{family_instantiate, shifted_neg_quarter_variant, FamilyId};
use hyperaccel::numerics::{chu_eval, direct_sum_eval, Enclosure};
use hyperaccel::telescoper::{
    builtin_recurrence, verify_symbolic_recurrence, zeilberger_two_term, DEFAULT_MAX_DEG,
    SYMBOLIC_FAMILIES,
};
use hyperaccel_cli::args::Cli;
use hyperaccel_cli::{run_with, Settings, Status};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn cli(args: &[&str]) -> (Status, String) {
    let parsed = Cli::try_parse_from(std::iter::once("hyperaccel").chain(args.iter().copied()))
        .expect("arguments parse");
    let mut out = Vec::new();
    let status = run_with(&parsed, &Settings::default(), &mut out).expect("command runs");
    (status, String::from_utf8(out).unwrap())
}

fn secs(d: Duration) -> String {
    format!("{:.1} s", d.as_secs_f64())
}

fn symbolic_verification() -> Outcome {
    let start = Instant::now();
    let (status, out) = cli(&["verify-symbolic"]);
    let elapsed = start.elapsed();
    let zeros = out.lines().filter(|l| l.ends_with("residual = 0")).count();
    if status != Status::Pass || zeros != SYMBOLIC_FAMILIES.len() {
        return Err(out);
    }
    if elapsed > Duration::from_secs(30) {
        return Err(format!("took {}", secs(elapsed)));
    }
    Ok(format!("{zeros} printed recurrences have zero residual in {}", secs(elapsed)))
}

fn numeric_identity_suite() -> Outcome {
    let start = Instant::now();
    let (status, out) = cli(&["check-all", "--digits", "50"]);
    let elapsed = start.elapsed();
    let expected = catalog_entries().iter().filter(|e| e.chu.is_some()).count();
    let passed = out.lines().filter(|l| l.starts_with("PASS ")).count();
    if status != Status::Pass || passed != expected {
        let failed: Vec<&str> = out.lines().filter(|l| l.starts_with("FAIL")).collect();
        return Err(format!("{passed}/{expected} passed: {failed:?}"));
    }
    if elapsed > Duration::from_secs(120) {
        return Err(format!("took {}", secs(elapsed)));
    }
    Ok(format!("{passed}/{expected} series match at 50 digits in {}", secs(elapsed)))
}

fn derivation_matching() -> Outcome {
    let mut counts = [0usize; 3];
    for e in catalog_entries() {
        let Some(d) = &e.derivation else { continue };
        let Some(slot) = SYMBOLIC_FAMILIES.iter().position(|f| *f == d.family) else {
            continue;
        };
        let t = d.term().map_err(|err| format!("{}: {err}", e.id))?;
        let derived = zeilberger_two_term(&t, d.family.default_r(), DEFAULT_MAX_DEG)
            .map_err(|err| format!("{}: {err}", e.id))?
            .ok_or_else(|| format!("{}: no recurrence derived", e.id))?;
        let printed = builtin_recurrence(d.family)
            .unwrap()
            .specialize(&Binding::params(&d.params))
            .map_err(|err| format!("{}: {err}", e.id))?;
        let (a, b) = (derived.ratio(), printed.ratio());
        match (a, b) {
            (Ok(a), Ok(b)) if a == b => counts[slot] += 1,
            _ => return Err(format!("{}: p1/p2 differs from the printed specialization", e.id)),
        }
    }
    if counts.iter().any(|c| *c == 0) {
        return Err(format!("a printed family has no tuples: {counts:?}"));
    }
    Ok(format!(
        "derived p1/p2 equals the printed one for {} quarter, {} neg-quarter and {} neg-27 tuples",
        counts[0], counts[1], counts[2]
    ))
}

fn stream_proportionality() -> Outcome {
    let mut matched = Vec::new();
    let mut groups = BTreeSet::new();
    for e in catalog_entries().iter().filter(|e| e.chu.is_some() && e.derivation.is_some()) {
        let r = derive_report(e, DEFAULT_MAX_DEG).map_err(|err| format!("{}: {err}", e.id))?;
        if r.proportional.is_none() {
            return Err(format!("{}: stream is not proportional to the series", e.id));
        }
        matched.push(e.id.clone());
        groups.insert(e.group);
    }
    for required in ["RT1", "RT5", "RT8", "PM1", "PM6", "PM9", "Q1", "NQ1", "FR-2"] {
        if !matched.iter().any(|id| id == required) {
            return Err(format!("{required} was not matched"));
        }
    }
    let spanned = Group::ALL.iter().filter(|g| **g != Group::Background).all(|g| groups.contains(g));
    if matched.len() < 15 || !spanned {
        return Err(format!("only {} entries over {} groups", matched.len(), groups.len()));
    }
    Ok(format!(
        "{} streams are termwise proportional for j = 0..100 across {} groups",
        matched.len(),
        groups.len()
    ))
}

fn random_param(rng: &mut StdRng) -> Rational {
    rat(rng.random_range(1..=9), rng.random_range(2..=11))
}

fn negative_control() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    let mut checked = 0;
    for with_d in [false, true] {
        for _ in 0..3 {
            let (a, b, c) = (random_param(&mut rng), random_param(&mut rng), random_param(&mut rng));
            let d = with_d.then(|| random_param(&mut rng));
            let t = shifted_neg_quarter_variant(a.clone(), b.clone(), c.clone(), d.clone())
                .instantiate(Binding::new(), Rational::from_integer(1.into()))
                .map_err(|e| e.to_string())?;
            let found = zeilberger_two_term(&t, 1, 8).map_err(|e| e.to_string())?;
            if found.is_some() {
                return Err(format!("recurrence found for a={a} b={b} c={c} d={d:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("no first-order recurrence for {checked} shifted samples at max_deg 8"))
}

fn log10(q: &Rational) -> f64 {
    Enclosure::from_rational(q, 128).center.log10_abs()
}

/// Digits gained per term between 20 and 120 terms, from partial-sum errors.
fn digits_per_term(s: &ChuSeries) -> Result<(f64, f64), String> {
    let expected = -log10(&s.z);
    let digits = (125.0 * expected).ceil() as u32 + 30;
    let value = chu_eval(s, digits).map_err(|e| e.to_string())?.center.to_rational();
    let terms = s.terms(121).map_err(|e| e.to_string())?;
    let err = |j: usize| log10(&(&value - terms[..j].iter().sum::<Rational>()));
    Ok(((err(20) - err(120)) / 100.0, expected))
}

fn rate_law() -> Outcome {
    let ids = ["RT1", "NQ1", "N27-3", "F427-5", "S1627-1", "PM1", "S2764-2", "FR-1", "FR-2"];
    let mut report = Vec::new();
    let mut bad = Vec::new();
    for id in ids {
        let e = find_entry(id).map_err(|e| e.to_string())?;
        let (measured, expected) = digits_per_term(e.chu.as_ref().unwrap())?;
        let rel = (measured / expected - 1.0).abs();
        let line = format!("{id} rate {} {measured:.4}/{expected:.4}", e.rate);
        if rel > 0.05 {
            bad.push(format!("{line} off by {:.1}%", 100.0 * rel));
        }
        report.push(line);
    }
    if bad.is_empty() {
        Ok(format!("digits per term within 5%: {}", report.join(", ")))
    } else {
        Err(bad.join("; "))
    }
}

/// `Σ_k F(n0, k)` by direct summation and through the accelerated stream.
fn oracle_pair(
    label: &str,
    t: &hyperaccel::hypergeom_terms::HypTerm,
    rec: &hyperaccel::telescoper::Recurrence,
    n0: &Rational,
) -> Result<f64, String> {
    let direct = direct_sum_eval(t, n0, 6).map_err(|e| format!("{label}: {e}"))?;
    let stream = accelerated_stream(t, rec, n0).map_err(|e| format!("{label}: {e}"))?;
    let (series, scale) = chu_normalize(stream.ratio(), &stream.t0().unwrap()).map_err(|e| format!("{label}: {e}"))?;
    let accel = chu_eval(&series, 20)
        .map_err(|e| format!("{label}: {e}"))?
        .mul(&Enclosure::from_rational(&scale, 128));
    Ok((direct.center.to_f64() - accel.center.to_f64()).abs())
}

fn oracle_equivalence() -> Outcome {
    let mut report = Vec::new();
    for id in ["Q1", "RT5", "PM1", "PM6"] {
        let e = find_entry(id).map_err(|e| e.to_string())?;
        let d = e.derivation.as_ref().unwrap();
        let t = d.term().map_err(|e| e.to_string())?;
        let rec = match printed_recurrence(d, &t).map_err(|e| e.to_string())? {
            Some(rec) => rec,
            None => zeilberger_two_term(&t, d.r, DEFAULT_MAX_DEG)
                .map_err(|e| e.to_string())?
                .ok_or("no recurrence")?,
        };
        report.push((id.to_string(), oracle_pair(id, &t, &rec, &d.n0)?));
    }
    let n0 = Rational::from_integer(2.into());
    let t = family_instantiate(FamilyId::Sixteen27A, &[rat(1, 2), rat(1, 2)], n0.clone()).map_err(|e| e.to_string())?;
    let rec = zeilberger_two_term(&t, 1, DEFAULT_MAX_DEG)
        .map_err(|e| e.to_string())?
        .ok_or("no recurrence for the binomial instance")?;
    report.push(("binomial".into(), oracle_pair("binomial", &t, &rec, &n0)?));
    let worst = report.iter().map(|(_, d)| *d).fold(0.0, f64::max);
    let text: Vec<String> = report.iter().map(|(id, d)| format!("{id} {d:.1e}")).collect();
    if worst <= 1e-3 {
        Ok(format!("direct and accelerated sums agree: {}", text.join(", ")))
    } else {
        Err(text.join(", "))
    }
}

fn perturbation_sensitivity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let printed = builtin_recurrence(FamilyId::Quarter).unwrap();
    let monos: Vec<_> = printed.p2.terms().map(|(m, _)| *m).collect();
    for _ in 0..5 {
        let mut rec = printed.clone();
        let m = monos[rng.random_range(0..monos.len())];
        let delta = Rational::from_integer(rng.random_range(1..=3).into());
        rec.p2.add_term(m, if rng.random_bool(0.5) { delta } else { -delta });
        let (ok, _) = verify_symbolic_recurrence(&rec).map_err(|e| e.to_string())?;
        if ok {
            return Err("a corrupted p2 still verifies".into());
        }
    }
    let entries: Vec<CatalogEntry> = catalog_entries().into_iter().filter(|e| e.chu.is_some()).collect();
    let mut hit = Vec::new();
    for _ in 0..5 {
        let mut e = entries[rng.random_range(0..entries.len())].clone();
        let s = e.chu.as_mut().unwrap();
        let mut coeffs = s.num.coeffs().to_vec();
        let i = rng.random_range(0..coeffs.len());
        coeffs[i] += Rational::from_integer(if rng.random_bool(0.5) { 1 } else { -1 }.into());
        if coeffs.iter().all(Zero::is_zero) {
            coeffs[i] += Rational::from_integer(2.into());
        }
        s.num = hyperaccel::exact_arith::UniPoly::new(s.num.var(), coeffs);
        if matches!(verify(&e, 50, None), Ok(r) if r.pass) {
            return Err(format!("{} still passes with num[{i}] changed", e.id));
        }
        hit.push(format!("{}[{i}]", e.id));
    }
    Ok(format!("5 p2 corruptions and 5 summand corruptions ({}) all fail", hit.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("symbolic verification", symbolic_verification),
        ("numeric identity suite", numeric_identity_suite),
        ("derivation matching", derivation_matching),
        ("stream proportionality", stream_proportionality),
        ("negative control", negative_control),
        ("rate law", rate_law),
        ("oracle equivalence", oracle_equivalence),
        ("perturbation sensitivity", perturbation_sensitivity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
