//! Root certificates for `phi(x_n, y)` on `y > 2`.
//!
//! A certificate is a bracket `(a, b)` with `2 < a < b` on which the
//! interval evaluations of `phi(x_n, .)` are sign-definite and opposite.
//! An inconclusive scan only means no such bracket turned up.

mod certificate;
mod enclosure;
mod search;
mod witness;

pub use certificate::{verify_certificate, RootCertificate, ScanParams, TOOL_VERSION};
pub use enclosure::{two_cos_le, two_cos_pi_frac, xn_enclosure};
pub use search::{certify_knot, find_root_gt2, lo_set, ScanReport, ScanStatus, SearchTrace};
pub use witness::{solve_lambda_witness, witness_plan, WitnessPlan, WitnessTarget};
