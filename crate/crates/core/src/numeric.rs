//! Extended-precision scalars and the precision policy.
//!
//! Every quantity in the crate is an [`ExtReal`] (or an [`ExtComplex`] built
//! from two of them) produced under a [`NumericContext`]. The context fixes
//! the working mantissa precision: the bits needed for the requested number
//! of decimal digits plus a block of guard bits. Arithmetic is delegated to
//! MPFR through `rug`, which is deterministic for a fixed precision, so two
//! runs at the same precision are bit-identical.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::{Constant, Round};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};

/// Smallest accepted request; below this the acceptance tolerances
/// (10^-25 at 30 digits) cannot be met.
pub const MIN_DIGITS: u32 = 20;
/// Upper limit on requested digits, far beyond desk-scale use.
pub const MAX_DIGITS: u32 = 10_000;
pub const MIN_PRECISION_BITS: u32 = 64;
pub const DEFAULT_GUARD_BITS: u32 = 32;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Working precision shared by a family of computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NumericContext {
    precision_bits: u32,
    guard_bits: u32,
}

/// Builds the context for `decimal_digits` correct digits.
pub fn make_context(decimal_digits: u32) -> Result<NumericContext> {
    NumericContext::from_digits(decimal_digits)
}

pub fn const_pi(ctx: &NumericContext) -> ExtReal {
    ctx.pi()
}

pub fn const_euler_gamma(ctx: &NumericContext) -> ExtReal {
    ctx.euler_gamma()
}

impl NumericContext {
    pub fn from_digits(decimal_digits: u32) -> Result<Self> {
        if decimal_digits < MIN_DIGITS {
            return Err(Error::domain(format!(
                "at least {MIN_DIGITS} decimal digits are required, got {decimal_digits}"
            )));
        }
        if decimal_digits > MAX_DIGITS {
            return Err(Error::domain(format!(
                "at most {MAX_DIGITS} decimal digits are supported, got {decimal_digits}"
            )));
        }
        let requested = (f64::from(decimal_digits) * LOG2_10).ceil() as u32;
        Self::with_precision(requested + DEFAULT_GUARD_BITS, DEFAULT_GUARD_BITS)
    }

    pub fn with_precision(precision_bits: u32, guard_bits: u32) -> Result<Self> {
        if precision_bits < MIN_PRECISION_BITS {
            return Err(Error::domain(format!(
                "precision must be at least {MIN_PRECISION_BITS} bits, got {precision_bits}"
            )));
        }
        if guard_bits < DEFAULT_GUARD_BITS {
            return Err(Error::domain(format!(
                "guard bits must be at least {DEFAULT_GUARD_BITS}, got {guard_bits}"
            )));
        }
        if guard_bits >= precision_bits {
            return Err(Error::domain("guard bits must be smaller than the precision"));
        }
        Ok(Self {
            precision_bits,
            guard_bits,
        })
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn guard_bits(&self) -> u32 {
        self.guard_bits
    }

    /// Bits of accuracy promised to callers (precision minus guard).
    pub fn accuracy_bits(&self) -> u32 {
        self.precision_bits - self.guard_bits
    }

    /// Number of decimal digits the accuracy bits cover.
    pub fn decimal_digits(&self) -> u32 {
        (f64::from(self.accuracy_bits()) / LOG2_10).floor() as u32
    }

    /// Same guard bits, twice the working precision.
    pub fn doubled(&self) -> Self {
        Self {
            precision_bits: self.precision_bits * 2,
            guard_bits: self.guard_bits,
        }
    }

    /// Extra bits on top of the working precision, for internal steps
    /// that lose a bounded amount to cancellation.
    pub(crate) fn widened(&self, extra: u32) -> Self {
        Self {
            precision_bits: self.precision_bits + extra,
            guard_bits: self.guard_bits,
        }
    }

    pub fn pi(&self) -> ExtReal {
        ExtReal(Float::with_val(self.precision_bits, Constant::Pi))
    }

    pub fn ln2(&self) -> ExtReal {
        ExtReal(Float::with_val(self.precision_bits, Constant::Log2))
    }

    pub fn euler_gamma(&self) -> ExtReal {
        ExtReal(Float::with_val(self.precision_bits, Constant::Euler))
    }

    pub fn catalan(&self) -> ExtReal {
        ExtReal(Float::with_val(self.precision_bits, Constant::Catalan))
    }

    pub fn zero(&self) -> ExtReal {
        ExtReal(Float::new(self.precision_bits))
    }

    pub fn one(&self) -> ExtReal {
        self.int(1)
    }

    pub fn int(&self, value: i64) -> ExtReal {
        ExtReal(Float::with_val(self.precision_bits, value))
    }

    pub fn integer(&self, value: &Integer) -> ExtReal {
        ExtReal(Float::with_val(self.precision_bits, value))
    }

    pub fn rational(&self, value: &Rational) -> ExtReal {
        ExtReal(Float::with_val(self.precision_bits, value))
    }

    /// `2^exp`, exact.
    pub fn pow2(&self, exp: i32) -> ExtReal {
        let mut f = Float::with_val(self.precision_bits, 1);
        f <<= exp;
        ExtReal(f)
    }

    /// `2^-precision_bits`: one unit in the last place at scale 1.
    pub fn epsilon(&self) -> ExtReal {
        self.pow2(-(self.precision_bits as i32))
    }

    /// `10^-digits`.
    pub fn tolerance(&self, digits: u32) -> ExtReal {
        let ten = Float::with_val(self.precision_bits, 10);
        ExtReal(ten.pow(-(digits as i32)))
    }

    /// Parses a decimal or scientific literal at this precision.
    pub fn parse(&self, text: &str) -> Result<ExtReal> {
        let parsed = Float::parse(text.trim())
            .map_err(|e| Error::invalid(format!("cannot parse {text:?} as a real number: {e}")))?;
        ExtReal::checked(Float::with_val(self.precision_bits, parsed), "parse")
    }
}

/// Extended-precision real scalar.
///
/// Addition, subtraction and multiplication are exposed as operators;
/// everything that can leave the finite reals (division, logarithms,
/// reciprocal trigonometric functions, powers) returns a `Result`.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct ExtReal(Float);

impl ExtReal {
    pub(crate) fn checked(value: Float, op: &'static str) -> Result<Self> {
        if value.is_finite() {
            Ok(ExtReal(value))
        } else {
            Err(Error::NonFinite(op))
        }
    }

    pub fn from_float(value: Float) -> Result<Self> {
        Self::checked(value, "from_float")
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn precision_bits(&self) -> u32 {
        self.0.prec()
    }

    /// Same value re-rounded to `ctx`.
    pub fn at(&self, ctx: &NumericContext) -> ExtReal {
        ExtReal(Float::with_val(ctx.precision_bits(), &self.0))
    }

    fn prec(&self) -> u32 {
        self.0.prec()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> ExtReal {
        ExtReal(self.0.clone().abs())
    }

    pub fn square(&self) -> ExtReal {
        ExtReal(self.0.clone().square())
    }

    pub fn mul_int(&self, k: i64) -> ExtReal {
        ExtReal(self.0.clone() * k)
    }

    /// Division by a nonzero machine integer.
    pub fn div_int(&self, k: i64) -> ExtReal {
        assert!(k != 0, "division by zero integer");
        ExtReal(self.0.clone() / k)
    }

    pub fn mul_rational(&self, r: &Rational) -> ExtReal {
        ExtReal(self.0.clone() * r)
    }

    pub fn mul_integer(&self, k: &Integer) -> ExtReal {
        ExtReal(self.0.clone() * k)
    }

    /// Multiplication by `2^k`, exact.
    pub fn mul_pow2(&self, k: i32) -> ExtReal {
        let mut f = self.0.clone();
        f <<= k;
        ExtReal(f)
    }

    pub fn checked_div(&self, rhs: &ExtReal) -> Result<ExtReal> {
        if rhs.is_zero() {
            return Err(Error::NonFinite("division"));
        }
        Self::checked(Float::with_val(self.prec().max(rhs.prec()), &self.0 / &rhs.0), "division")
    }

    pub fn recip(&self) -> Result<ExtReal> {
        if self.is_zero() {
            return Err(Error::NonFinite("reciprocal"));
        }
        Self::checked(self.0.clone().recip(), "reciprocal")
    }

    pub fn sqrt(&self) -> Result<ExtReal> {
        if self.is_sign_negative() {
            return Err(Error::domain("square root of a negative number"));
        }
        Self::checked(self.0.clone().sqrt(), "sqrt")
    }

    pub fn ln(&self) -> Result<ExtReal> {
        if self.is_zero() || self.is_sign_negative() {
            return Err(Error::domain("logarithm of a non-positive number"));
        }
        Self::checked(self.0.clone().ln(), "ln")
    }

    pub fn exp(&self) -> Result<ExtReal> {
        Self::checked(self.0.clone().exp(), "exp")
    }

    /// `self^exponent` for a positive base or an integral exponent.
    pub fn pow(&self, exponent: &ExtReal) -> Result<ExtReal> {
        Self::checked(Float::with_val(self.prec(), (&self.0).pow(&exponent.0)), "pow")
    }

    pub fn powi(&self, exponent: i32) -> Result<ExtReal> {
        Self::checked(self.0.clone().pow(exponent), "powi")
    }

    pub fn sin(&self) -> ExtReal {
        ExtReal(self.0.clone().sin())
    }

    pub fn cos(&self) -> ExtReal {
        ExtReal(self.0.clone().cos())
    }

    pub fn tan(&self) -> Result<ExtReal> {
        Self::checked(self.0.clone().tan(), "tan")
    }

    pub fn cot(&self) -> Result<ExtReal> {
        if self.is_zero() {
            return Err(Error::domain("cotangent pole at 0"));
        }
        Self::checked(self.0.clone().cot(), "cot")
    }

    pub fn csc(&self) -> Result<ExtReal> {
        if self.is_zero() {
            return Err(Error::domain("cosecant pole at 0"));
        }
        Self::checked(self.0.clone().csc(), "csc")
    }

    pub fn max(self, other: ExtReal) -> ExtReal {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Unit in the last place of `self` at its own precision. For zero,
    /// the unit at scale 1.
    pub fn ulp(&self) -> ExtReal {
        let prec = self.prec();
        let exp = self.0.get_exp().unwrap_or(1);
        let mut f = Float::with_val(prec, 1);
        f <<= exp - prec as i32;
        ExtReal(f)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Rational value of the (finite) binary float, exact.
    pub fn to_rational(&self) -> Rational {
        self.0.to_rational().expect("ExtReal is always finite")
    }

    /// Scientific decimal rendering with `digits` significant digits,
    /// rounded to nearest.
    pub fn to_decimal(&self, digits: usize) -> String {
        self.0.to_string_radix_round(10, Some(digits), Round::Nearest)
    }

    /// Decimal rendering rounded away from zero, for error bounds that must
    /// stay upper bounds after printing.
    pub fn to_decimal_up(&self, digits: usize) -> String {
        self.0.to_string_radix_round(10, Some(digits), Round::Up)
    }

    /// Decimal rendering with enough digits to round-trip at this precision.
    pub fn to_decimal_exact(&self) -> String {
        let digits = (f64::from(self.prec()) / LOG2_10).ceil() as usize + 1;
        self.to_decimal(digits)
    }
}

impl fmt::Debug for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtReal({})", self.to_decimal(25))
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => f.write_str(&self.to_decimal(p.max(1))),
            None => f.write_str(&self.to_decimal_exact()),
        }
    }
}

impl PartialEq<i64> for ExtReal {
    fn eq(&self, other: &i64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<i64> for ExtReal {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&ExtReal> for &ExtReal {
            type Output = ExtReal;
            fn $method(self, rhs: &ExtReal) -> ExtReal {
                ExtReal(Float::with_val(self.prec().max(rhs.prec()), &self.0 $op &rhs.0))
            }
        }
        impl $trait<ExtReal> for &ExtReal {
            type Output = ExtReal;
            fn $method(self, rhs: ExtReal) -> ExtReal {
                self $op &rhs
            }
        }
        impl $trait<&ExtReal> for ExtReal {
            type Output = ExtReal;
            fn $method(self, rhs: &ExtReal) -> ExtReal {
                &self $op rhs
            }
        }
        impl $trait<ExtReal> for ExtReal {
            type Output = ExtReal;
            fn $method(self, rhs: ExtReal) -> ExtReal {
                &self $op &rhs
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Neg for ExtReal {
    type Output = ExtReal;
    fn neg(self) -> ExtReal {
        ExtReal(-self.0)
    }
}

impl Neg for &ExtReal {
    type Output = ExtReal;
    fn neg(self) -> ExtReal {
        ExtReal(-self.0.clone())
    }
}

impl std::iter::Sum for ExtReal {
    fn sum<I: Iterator<Item = ExtReal>>(mut iter: I) -> ExtReal {
        let first = iter.next().expect("sum of an empty ExtReal iterator");
        iter.fold(first, |acc, x| acc + x)
    }
}

/// Extended-precision complex scalar; only the arithmetic needed for
/// character values and L-function sums.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtComplex {
    pub re: ExtReal,
    pub im: ExtReal,
}

impl ExtComplex {
    pub fn new(re: ExtReal, im: ExtReal) -> Self {
        Self { re, im }
    }

    pub fn zero(ctx: &NumericContext) -> Self {
        Self::new(ctx.zero(), ctx.zero())
    }

    pub fn from_real(re: ExtReal, ctx: &NumericContext) -> Self {
        Self::new(re, ctx.zero())
    }

    /// `exp(2πi · numerator / denominator)`.
    pub fn root_of_unity(numerator: u64, denominator: u64, ctx: &NumericContext) -> Self {
        assert!(denominator > 0, "root of unity of order zero");
        let num = numerator % denominator;
        let one = ctx.one();
        let zero = ctx.zero();
        // Exact values at the quarter turns.
        if num == 0 {
            return Self::new(one, zero);
        }
        if 2 * num == denominator {
            return Self::new(-one, zero);
        }
        if 4 * num == denominator {
            return Self::new(zero, one);
        }
        if 4 * num == 3 * denominator {
            return Self::new(zero, -one);
        }
        let angle = ctx
            .pi()
            .mul_pow2(1)
            .mul_rational(&Rational::from((num, denominator)));
        Self::new(angle.cos(), angle.sin())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn scale(&self, k: &ExtReal) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    pub fn norm_sqr(&self) -> ExtReal {
        self.re.square() + self.im.square()
    }

    pub fn abs(&self) -> ExtReal {
        self.norm_sqr().sqrt().expect("norm is non-negative")
    }

    pub fn recip(&self) -> Result<Self> {
        let n = self.norm_sqr();
        Ok(Self::new(self.re.checked_div(&n)?, (-&self.im).checked_div(&n)?))
    }
}

impl Add<&ExtComplex> for &ExtComplex {
    type Output = ExtComplex;
    fn add(self, rhs: &ExtComplex) -> ExtComplex {
        ExtComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&ExtComplex> for &ExtComplex {
    type Output = ExtComplex;
    fn sub(self, rhs: &ExtComplex) -> ExtComplex {
        ExtComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&ExtComplex> for &ExtComplex {
    type Output = ExtComplex;
    fn mul(self, rhs: &ExtComplex) -> ExtComplex {
        ExtComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Parses `p/q`, an integer, or a decimal literal (`0.9`, `1e-3`) into an
/// exact rational. Decimal literals are converted without rounding.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::invalid("empty number"));
    }
    if t.contains('/') {
        return t
            .parse::<Rational>()
            .map_err(|e| Error::invalid(format!("cannot parse {t:?} as p/q: {e}")))
            .and_then(|r| {
                if t.split('/').nth(1).map(str::trim) == Some("0") {
                    Err(Error::invalid("zero denominator"))
                } else {
                    Ok(r)
                }
            });
    }
    parse_decimal(t)
}

fn parse_decimal(t: &str) -> Result<Rational> {
    let bad = || Error::invalid(format!("cannot parse {t:?} as a rational or decimal number"));
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if (int_part.is_empty() && frac_part.is_empty())
        || !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from(digits.parse::<Integer>().map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i32;
    let ten_pow = Integer::from(Integer::u_pow_u(10, scale.unsigned_abs()));
    if scale >= 0 {
        value *= ten_pow;
    } else {
        value /= ten_pow;
    }
    if neg {
        value = -value;
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_sizes() {
        let c30 = make_context(30).unwrap();
        assert!(c30.precision_bits() >= 100 + 32);
        let c20 = make_context(20).unwrap();
        assert!(c20.precision_bits() >= 67 + 32);
        assert!(c20.guard_bits() >= 32);
        assert!(matches!(make_context(10), Err(Error::Domain(_))));
        assert!(NumericContext::with_precision(63, 32).is_err());
        assert!(NumericContext::with_precision(128, 16).is_err());
    }

    #[test]
    fn pi_digits() {
        let ctx = make_context(50).unwrap();
        let pi = const_pi(&ctx);
        let reference = ctx
            .parse("3.14159265358979323846264338327950288419716939937510")
            .unwrap();
        assert!((&pi - &reference).abs() < ctx.tolerance(49));

        let low = const_pi(&make_context(20).unwrap());
        assert!((low.at(&ctx) - &pi).abs() < ctx.tolerance(20));

        let s = pi.sin();
        assert!(s.abs() <= pi.ulp().mul_int(4));
    }

    #[test]
    fn euler_gamma_digits() {
        let c30 = make_context(30).unwrap();
        let c60 = make_context(60).unwrap();
        let g = const_euler_gamma(&c30);
        let reference = c30.parse("0.577215664901532860606512090082").unwrap();
        assert!((&g - &reference).abs() < c30.tolerance(29));
        assert!(g > c30.parse("0.5").unwrap() && g < c30.parse("0.6").unwrap());
        let g60 = const_euler_gamma(&c60);
        assert!((g60 - g.at(&c60)).abs() < c30.tolerance(30).at(&c60));
    }

    #[test]
    fn trig_identities() {
        let ctx = make_context(30).unwrap();
        for k in 1..14 {
            let x = ctx.rational(&Rational::from((k, 10)));
            let prod = x.cot().unwrap() * x.tan().unwrap();
            assert!((prod - ctx.one()).abs() <= ctx.one().ulp().mul_int(8), "x={k}/10");
        }
        for k in 1..30 {
            let x = ctx.rational(&Rational::from((k, 10)));
            let d = x.csc().unwrap().square() - x.cot().unwrap().square();
            let scale = x.csc().unwrap().square();
            assert!((d - ctx.one()).abs() <= scale.ulp().mul_int(8), "x={k}/10");
        }
    }

    #[test]
    fn non_finite_is_an_error() {
        let ctx = make_context(20).unwrap();
        assert!(ctx.one().checked_div(&ctx.zero()).is_err());
        assert!(ctx.zero().ln().is_err());
        assert!(ctx.int(-1).sqrt().is_err());
        assert!(ctx.zero().cot().is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("1/4").unwrap(), Rational::from((1, 4)));
        assert_eq!(parse_rational(" 3 ").unwrap(), Rational::from(3));
        assert_eq!(parse_rational("0.9").unwrap(), Rational::from((9, 10)));
        assert_eq!(parse_rational("-2.5e-1").unwrap(), Rational::from((-1, 4)));
        assert_eq!(parse_rational("1.5E2").unwrap(), Rational::from(150));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn roots_of_unity() {
        let ctx = make_context(30).unwrap();
        let z = ExtComplex::root_of_unity(1, 3, &ctx);
        let cube = &(&z * &z) * &z;
        assert!((cube.re - ctx.one()).abs() < ctx.tolerance(35));
        assert!(cube.im.abs() < ctx.tolerance(35));
        assert_eq!(ExtComplex::root_of_unity(2, 4, &ctx).re, -1);
    }
}
