use serde::{Deserialize, Serialize};

use crate::numeric::ExtReal;
use crate::series_result::SeriesResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Mismatch,
    Error,
}

/// One line of machine-readable output.
///
/// Decimal strings carry enough digits to round-trip at the working
/// precision; error bounds are rounded upward. `lhs` and `rhs` are `null`
/// except on verification entries.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub query: String,
    pub value: String,
    pub error_bound: String,
    pub terms_used: usize,
    pub precision_bits: u32,
    pub status: Status,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

pub fn decimal(x: &ExtReal) -> String {
    x.to_decimal_exact()
}

pub fn decimal_bound(x: &ExtReal) -> String {
    let digits = (f64::from(x.precision_bits()) * std::f64::consts::LOG10_2).ceil() as usize + 1;
    x.to_decimal_up(digits)
}

impl Report {
    /// Report for a plain evaluation.
    pub fn evaluation(query: impl Into<String>, result: &SeriesResult) -> Self {
        Self {
            query: query.into(),
            value: decimal(&result.value),
            error_bound: decimal_bound(&result.error_bound),
            terms_used: result.terms_used,
            precision_bits: result.precision_bits,
            status: Status::Ok,
            lhs: None,
            rhs: None,
        }
    }

    /// Report for a check that could not be evaluated.
    pub fn failure(query: impl Into<String>, precision_bits: u32) -> Self {
        Self {
            query: query.into(),
            value: String::new(),
            error_bound: String::new(),
            terms_used: 0,
            precision_bits,
            status: Status::Error,
            lhs: None,
            rhs: None,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }
}
