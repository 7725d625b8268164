//! Family instance to certified value, through every layer.

use hyperaccel::accelerator::{
    accelerated_stream_checked, chu_normalize, convergence_rate, default_m_max, stream_proportional,
};
use hyperaccel::catalog::find_entry;
use hyperaccel::exact_arith::{rat, Rational};
use hyperaccel::hypergeom_terms::{family_instantiate, FamilyId};
use hyperaccel::numerics::{chu_eval, closedform_eval, Enclosure};
use hyperaccel::telescoper::zeilberger_two_term;

#[test]
fn derived_acceleration_evaluates_to_the_closed_form() {
    // four-27 tuple (1/2, 1/2, -1/2) at n = 1
    let n0 = Rational::from_integer(1.into());
    let t = family_instantiate(FamilyId::Four27, &[rat(1, 2), rat(1, 2), rat(-1, 2)], n0.clone()).unwrap();
    let rec = zeilberger_two_term(&t, 1, 8).unwrap().expect("recurrence");
    assert!(rec.verify(&t).unwrap());
    let rate = convergence_rate(&rec).unwrap();
    assert_eq!(rate, rat(4, 27));
    let stream = accelerated_stream_checked(&t, &rec, &n0, default_m_max(&rate)).unwrap();
    let (series, scale) = chu_normalize(stream.ratio(), &stream.t0().unwrap()).unwrap();
    assert_eq!(series.z, rate);

    let pm6 = find_entry("PM6").unwrap();
    let target = pm6.chu.as_ref().unwrap();
    let c = stream_proportional(&stream.terms(101).unwrap(), &target.terms(101).unwrap(), 100)
        .expect("proportional to the displayed series");
    let ours = chu_eval(&series, 40).unwrap().mul(&Enclosure::from_rational(&scale, 160));
    let displayed = closedform_eval(pm6.closed.as_ref().unwrap(), 40)
        .unwrap()
        .mul(&Enclosure::from_rational(&c, 160));
    assert!(ours.overlaps(&displayed));
}
