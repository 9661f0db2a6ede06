use crate::error::{Error, Result};
use crate::numeric::{ExtReal, NumericContext};

/// Rounding allowance charged per arithmetic step, in units in the last
/// place of the result's magnitude.
pub const ULPS_PER_TERM: i64 = 16;

/// A computed value with a certified absolute error bound.
#[derive(Clone, Debug)]
pub struct SeriesResult {
    pub value: ExtReal,
    /// Absolute error bound; covers truncation plus rounding.
    pub error_bound: ExtReal,
    pub terms_used: usize,
    pub precision_bits: u32,
}

impl SeriesResult {
    pub fn new(value: ExtReal, error_bound: ExtReal, terms_used: usize) -> Result<Self> {
        if error_bound.is_sign_negative() {
            return Err(Error::NonFinite("negative error bound"));
        }
        let precision_bits = value.precision_bits();
        Ok(Self {
            value,
            error_bound,
            terms_used,
            precision_bits,
        })
    }

    /// A value known up to `ulps` rounding errors at its own magnitude.
    pub fn rounded(value: ExtReal, ulps: i64, terms_used: usize) -> Self {
        let error_bound = value.ulp().mul_int(ulps);
        let precision_bits = value.precision_bits();
        Self {
            value,
            error_bound,
            terms_used,
            precision_bits,
        }
    }

    pub fn contains(&self, x: &ExtReal) -> bool {
        (&self.value - x).abs() <= self.error_bound
    }

    /// `|self − other| ≤ bound(self) + bound(other)`.
    pub fn agrees_with(&self, other: &SeriesResult) -> bool {
        (&self.value - &other.value).abs() <= &self.error_bound + &other.error_bound
    }

    /// `k·self`, charging the rounding of the product.
    pub fn scale(&self, k: &ExtReal) -> SeriesResult {
        let value = &self.value * k;
        let error_bound = &self.error_bound * &k.abs() + value.ulp().mul_int(ULPS_PER_TERM);
        SeriesResult {
            value,
            error_bound,
            terms_used: self.terms_used,
            precision_bits: self.precision_bits,
        }
    }

    /// Linear combination `Σ cᵢ·rᵢ`; the bound is `Σ |cᵢ|·boundᵢ` plus a
    /// rounding allowance at the largest intermediate magnitude.
    pub fn combine(parts: &[(ExtReal, &SeriesResult)], ctx: &NumericContext) -> SeriesResult {
        let mut value = ctx.zero();
        let mut bound = ctx.zero();
        let mut magnitude = ctx.zero();
        let mut terms = 0;
        for (coeff, part) in parts {
            let term = coeff * &part.value;
            magnitude = magnitude.max(term.abs());
            value = value + &term;
            bound = bound + coeff.abs() * &part.error_bound;
            terms += part.terms_used;
        }
        magnitude = magnitude.max(value.abs());
        let ops = 2 * parts.len() as i64;
        bound = bound + magnitude.ulp().mul_int(ULPS_PER_TERM * ops);
        SeriesResult {
            value,
            error_bound: bound,
            terms_used: terms,
            precision_bits: ctx.precision_bits(),
        }
    }

    /// Adds an exactly known or already-rounded constant.
    pub fn offset(&self, c: &ExtReal) -> SeriesResult {
        let value = &self.value + c;
        let magnitude = value.abs().max(c.abs());
        let error_bound = &self.error_bound + magnitude.ulp().mul_int(ULPS_PER_TERM);
        SeriesResult {
            value,
            error_bound,
            terms_used: self.terms_used,
            precision_bits: self.precision_bits,
        }
    }
}
