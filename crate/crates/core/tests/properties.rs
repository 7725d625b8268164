//! Randomized properties across the exact and numeric layers.

use hyperaccel::accelerator::{parse_series, ChuSeries};
use hyperaccel::exact_arith::{format_rational, parse_rational, rat, Binding, Rational, UniPoly, Var};
use hyperaccel::hypergeom_terms::{family_instantiate, FamilyId};
use hyperaccel::numerics::{parse_closed_form, ClosedForm, Enclosure};
use hyperaccel::telescoper::builtin_recurrence;
use num_traits::Zero;
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn positive_rat() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rat(), 1..5).prop_map(|cs| UniPoly::new(Var::J, cs))
}

proptest! {
    #[test]
    fn rational_text_round_trips(q in small_rat()) {
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn polynomial_division_is_exact(p in poly(), q in poly()) {
        prop_assume!(!q.is_zero());
        let (quo, rem) = p.divrem(&q);
        prop_assert_eq!(&(&quo * &q) + &rem, p.clone());
        prop_assert!(rem.is_zero() || rem.degree() < q.degree());
        let g = p.gcd(&q);
        prop_assert!(p.divrem(&g).1.is_zero());
        prop_assert!(q.divrem(&g).1.is_zero());
    }

    #[test]
    fn enclosure_arithmetic_contains_exact_results(a in small_rat(), b in small_rat()) {
        let ea = Enclosure::from_rational(&a, 64);
        let eb = Enclosure::from_rational(&b, 64);
        prop_assert!(ea.add(&eb).contains_rational(&(&a + &b)));
        prop_assert!(ea.sub(&eb).contains_rational(&(&a - &b)));
        prop_assert!(ea.mul(&eb).contains_rational(&(&a * &b)));
        if !b.is_zero() {
            prop_assert!(ea.div(&eb).unwrap().contains_rational(&(&a / &b)));
        }
    }

    #[test]
    fn roots_invert_powers(x in positive_rat(), q in 2u32..6) {
        let r = Enclosure::from_rational(&x, 128).root(q).unwrap();
        prop_assert!(r.powi(q as i64).unwrap().contains_rational(&x));
    }

    #[test]
    fn series_text_round_trips(
        z in small_rat(),
        upper in prop::collection::vec(positive_rat(), 0..4),
        lower in prop::collection::vec(positive_rat(), 0..4),
        num in prop::collection::vec(1i64..50, 1..4),
    ) {
        prop_assume!(!z.is_zero());
        let num = UniPoly::from_ints(Var::J, &num);
        let s = ChuSeries::new(z, upper, lower, num, UniPoly::one(Var::J));
        prop_assume!(s.is_ok());
        let s = s.unwrap();
        prop_assert_eq!(parse_series(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn closed_form_text_round_trips(c in small_rat(), a in small_rat(), b in small_rat(), d in small_rat()) {
        prop_assume!(!c.is_zero());
        let cf = ClosedForm { coeff: c, exp_pi: a, exp_log2: b.clone(), exp_2: d, exp_3: b };
        prop_assert_eq!(parse_closed_form(&cf.to_string()).unwrap(), cf);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The printed symbolic recurrence holds for every numeric instance.
    #[test]
    fn printed_quarter_recurrence_holds_on_instances(params in prop::collection::vec(positive_rat(), 6)) {
        let t = family_instantiate(FamilyId::Quarter, &params, Rational::from_integer(1.into()));
        prop_assume!(t.is_ok());
        let rec = builtin_recurrence(FamilyId::Quarter).unwrap().specialize(&Binding::params(&params)).unwrap();
        prop_assert!(rec.verify(&t.unwrap()).unwrap());
    }
}
