//! Arbitrary-precision evaluation with error enclosures.
//!
//! Bracket-form series are summed in exact rationals and converted to
//! [`BigFloat`] only at the end; reference constants come from independent
//! arctangent-type series.

mod bigfloat;
mod constants;
mod series;

pub use bigfloat::{digits_to_bits, BigFloat, Enclosure, MIN_PREC};
pub use constants::{closedform_eval, const_log2, const_pi, const_root, parse_closed_form, ClosedForm};
pub use series::{
    chu_enclosure_at, chu_eval, chu_eval_with_cap, default_term_cap, direct_sum_eval, ChuEvaluation,
};
pub(crate) use series::direct_sum_f64;
