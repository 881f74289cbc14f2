use serde::{Deserialize, Serialize};

use super::enclosure::xn_enclosure;
use crate::error::{Error, Result};
use crate::interval::{Dyadic, DyadicInterval, Sign};
use crate::knots::Knot;
use crate::polyring::eval_interval;
use crate::riley::RileyPolynomial;

pub const TOOL_VERSION: &str = concat!("riley-lo ", env!("CARGO_PKG_VERSION"));

/// Search parameters. The grid step is `2^-grid_step_log2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanParams {
    pub precision: u32,
    pub y_max: u64,
    pub grid_step_log2: u32,
    pub y_max_cap: u64,
    pub precision_cap: u32,
}

impl Default for ScanParams {
    fn default() -> Self {
        ScanParams {
            precision: 128,
            y_max: 64,
            grid_step_log2: 3,
            y_max_cap: 1 << 16,
            precision_cap: 4096,
        }
    }
}

/// A bracket `(a, b)`, `2 < a < b`, on which `phi(x_n, .)` changes sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCertificate {
    pub knot: Option<Knot>,
    pub presentation: String,
    pub n: u32,
    pub a: Dyadic,
    pub b: Dyadic,
    pub sign_a: Sign,
    pub sign_b: Sign,
    pub precision: u32,
    pub y_max_searched: u64,
    pub poly_hash: String,
    pub tool_version: String,
    pub parameters: ScanParams,
}

impl RootCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Re-checks a certificate against `phi` from scratch: `2 < a < b`, and
/// `phi(x_n, a)`, `phi(x_n, b)` evaluated at the recorded precision are
/// sign-definite, opposite and equal to the recorded signs.
pub fn verify_certificate(cert: &RootCertificate, phi: &RileyPolynomial) -> Result<bool> {
    let actual = phi.poly().content_hash();
    if actual != cert.poly_hash {
        return Err(Error::HashMismatch {
            expected: cert.poly_hash.clone(),
            actual,
        });
    }
    if cert.n < 2 || cert.precision == 0 {
        return Ok(false);
    }
    if cert.a <= Dyadic::from_int(2) || cert.a >= cert.b {
        return Ok(false);
    }
    if cert.sign_a == cert.sign_b {
        return Ok(false);
    }
    let prec = cert.precision;
    let x = xn_enclosure(cert.n, prec);
    let at =
        |y: &Dyadic| eval_interval(phi.poly(), &x, &DyadicInterval::point(y.clone(), prec)).sign();
    Ok(at(&cert.a) == Some(cert.sign_a) && at(&cert.b) == Some(cert.sign_b))
}
