//! Derivative polynomials of the cotangent and cosecant.
//!
//! `d^n/dx^n cot x = (-1)^n P_n(cot x)` with `P_0(x) = x` and
//! `P_{n+1}(x) = (1+x²) P_n'(x)`; likewise
//! `d^n/dx^n csc x = (-1)^n Q_n(cot x) csc x` with `Q_0 = 1` and
//! `Q_{n+1}(x) = (1+x²) Q_n'(x) + x Q_n(x)`. Both families have
//! non-negative integer coefficients. They turn the partial-fraction sums
//! `Σ_k [(k+a)^-(n+1) ± (k+1-a)^-(n+1)]` and their alternating versions
//! into closed forms in `cot(πa)` and `csc(πa)`.

use std::fmt;
use std::sync::{Arc, RwLock};

use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};
use crate::numeric::{ExtReal, NumericContext};
use crate::series::paired_hurwitz;
use crate::series_result::{SeriesResult, ULPS_PER_TERM};
use crate::special::alt_hurwitz_zeta;

/// Largest derivative order accepted by the evaluators.
pub const MAX_ORDER: usize = 64;

static COT_POLYS: RwLock<Vec<Arc<IntPolynomial>>> = RwLock::new(Vec::new());
static CSC_POLYS: RwLock<Vec<Arc<IntPolynomial>>> = RwLock::new(Vec::new());

/// Dense polynomial with exact integer coefficients, constant term first.
/// Trailing zero coefficients are never stored; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coefficients: Vec<Integer>,
}

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<Integer>) -> Self {
        while coefficients.last().is_some_and(|c| *c == 0) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Integer::new(); k + 1];
        c[k] = Integer::from(1);
        Self::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn coefficients(&self) -> &[Integer] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> Integer {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn leading_coefficient(&self) -> Integer {
        self.coefficients.last().cloned().unwrap_or_default()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Integer::from(c * i as u64))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        Self::new((0..len).map(|k| self.coefficient(k) + other.coefficient(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        Self::new((0..len).map(|k| self.coefficient(k) - other.coefficient(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Integer::new(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += Integer::from(a * b);
            }
        }
        Self::new(out)
    }

    /// `P(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { Integer::from(-c) } else { c.clone() })
                .collect(),
        )
    }

    /// Coefficients in reverse order: `x^deg · P(1/x)`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coefficients.iter().rev().cloned().collect())
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(
            !divisor.is_zero() && divisor.leading_coefficient() == 1,
            "divisor must be monic"
        );
        let d = divisor.degree();
        let mut rem = self.coefficients.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Integer::new(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let lead = rem[k + d].clone();
            if lead == 0 {
                continue;
            }
            for (j, c) in divisor.coefficients.iter().enumerate() {
                rem[k + j] -= Integer::from(&lead * c);
            }
            quot[k] = lead;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    pub fn eval_integer(&self, x: &Integer) -> Integer {
        self.coefficients
            .iter()
            .rev()
            .fold(Integer::new(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::new(), |acc, c| acc * x + c)
    }

    /// Horner evaluation with the coefficients lifted to the argument's
    /// precision.
    pub fn eval(&self, x: &ExtReal) -> ExtReal {
        let prec = x.precision_bits();
        let mut acc = Float::new(prec);
        for c in self.coefficients.iter().rev() {
            acc *= x.as_float();
            acc += c;
        }
        ExtReal::from_float(acc).expect("polynomial of a finite value is finite")
    }

    /// `Σ |c_k| x^k` for `x ≥ 0`: dominates every partial Horner sum.
    fn eval_abs(&self, x: &ExtReal) -> ExtReal {
        Self::new(self.coefficients.iter().map(|c| c.clone().abs()).collect()).eval(x)
    }

    /// Value at `x` together with an absolute error bound covering Horner
    /// rounding and an input uncertainty `dx`.
    pub fn eval_with_bound(&self, x: &ExtReal, dx: &ExtReal) -> (ExtReal, ExtReal) {
        let value = self.eval(x);
        let ax = x.abs() + dx;
        let steps = 2 * (self.degree() as i64 + 1);
        let horner = self.eval_abs(&ax).ulp().mul_int(ULPS_PER_TERM * steps);
        let propagated = self.derivative().eval_abs(&ax) * dx;
        (value, horner + propagated)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial{:?}", self.coefficients)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if !first {
                f.write_str(if *c < 0 { " - " } else { " + " })?;
            } else if *c < 0 {
                f.write_str("-")?;
            }
            first = false;
            let mag = c.clone().abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ if mag == 1 => {}
                _ => write!(f, "{mag}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

fn cached(
    table: &RwLock<Vec<Arc<IntPolynomial>>>,
    n: usize,
    base: fn() -> IntPolynomial,
    step: fn(&IntPolynomial) -> IntPolynomial,
) -> Arc<IntPolynomial> {
    if let Some(p) = table.read().expect("polynomial cache poisoned").get(n) {
        return Arc::clone(p);
    }
    let mut polys = table.write().expect("polynomial cache poisoned");
    if polys.is_empty() {
        polys.push(Arc::new(base()));
    }
    while polys.len() <= n {
        let next = step(polys.last().expect("non-empty"));
        polys.push(Arc::new(next));
    }
    Arc::clone(&polys[n])
}

fn one_plus_x_squared() -> IntPolynomial {
    IntPolynomial::from_i64(&[1, 0, 1])
}

/// The cotangent derivative polynomial `P_n`.
pub fn cot_poly(n: usize) -> Arc<IntPolynomial> {
    cached(
        &COT_POLYS,
        n,
        || IntPolynomial::monomial(1),
        |p| one_plus_x_squared().mul(&p.derivative()),
    )
}

/// The cosecant derivative polynomial `Q_n`.
pub fn csc_poly(n: usize) -> Arc<IntPolynomial> {
    cached(
        &CSC_POLYS,
        n,
        || IntPolynomial::monomial(0),
        |q| one_plus_x_squared().mul(&q.derivative()).add(&IntPolynomial::monomial(1).mul(q)),
    )
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::domain(format!("derivative order {n} exceeds {MAX_ORDER}")));
    }
    Ok(())
}

/// `d^n/dx^n cot(πx) = (-1)^n π^n P_n(cot πx)`.
pub fn cot_derivative(n: usize, x: &ExtReal, ctx: &NumericContext) -> Result<ExtReal> {
    check_order(n)?;
    if x.is_integer() {
        return Err(Error::domain("cot(πx) has a pole at integer x"));
    }
    let pi = ctx.pi();
    let t = (&pi * &x.at(ctx)).cot()?;
    let value = pi.powi(n as i32)? * cot_poly(n).eval(&t);
    Ok(if n % 2 == 1 { -value } else { value })
}

/// `cot(πa)`, `csc(πa)` and bounds on their absolute errors.
struct TrigAt {
    cot: ExtReal,
    csc: ExtReal,
    cot_err: ExtReal,
    csc_err: ExtReal,
}

fn trig_at(a: &Rational, ctx: &NumericContext) -> Result<TrigAt> {
    let angle = ctx.pi().mul_rational(a);
    let cot = angle.cot()?;
    let csc = angle.csc()?;
    // |δangle| ≤ 2 ulp; cot' = −csc², csc' = −csc·cot.
    let d_angle = angle.ulp().mul_int(2);
    let cot_err = csc.square() * &d_angle.mul_int(2) + cot.ulp().mul_int(2);
    let csc_err = (&csc * &cot).abs() * d_angle.mul_int(2) + csc.ulp().mul_int(2);
    Ok(TrigAt {
        cot,
        csc,
        cot_err,
        csc_err,
    })
}

fn check_open_unit(a: &Rational) -> Result<()> {
    if *a > 0 && *a < 1 {
        Ok(())
    } else {
        Err(Error::domain(format!("a must satisfy 0 < a < 1 (got a = {a})")))
    }
}

/// Which factorial divides `π^{n+1}` in the closed forms. `n!` is correct;
/// `(n+1)!` is a wrong variant kept only to show that the checks reject it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    Factorial,
    ShiftedFactorial,
}

/// Which polynomial multiplies `csc(πa)` in the alternating closed form.
/// `Q_n` is correct; `P_n` gives a wrong variant, kept to show it fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlternatingPoly {
    Cosecant,
    Cotangent,
}

fn prefactor(n: usize, norm: Normalization, ctx: &NumericContext) -> Result<ExtReal> {
    let pi_pow = ctx.pi().powi(n as i32 + 1)?;
    let fact = match norm {
        Normalization::Factorial => Integer::from(Integer::factorial(n as u32)),
        Normalization::ShiftedFactorial => Integer::from(Integer::factorial(n as u32 + 1)),
    };
    pi_pow.checked_div(&ctx.integer(&fact))
}

/// `Σ_{k≥0}[(k+a)^-(n+1) + (-1)^{n+1}(k+1-a)^-(n+1)]`, via the paired
/// Hurwitz values (`(-1)^{n+1}` times `paired_hurwitz(n+1, a)`).
pub fn hoffman_sum_a(n: usize, a: &Rational, ctx: &NumericContext) -> Result<SeriesResult> {
    check_order(n)?;
    check_open_unit(a)?;
    let paired = paired_hurwitz(n + 1, a, ctx)?;
    Ok(if n % 2 == 0 {
        paired.scale(&ctx.int(-1))
    } else {
        paired
    })
}

/// `π^{n+1}/n! · P_n(cot πa)` (or with `(n+1)!`).
pub fn hoffman_rhs_a(
    n: usize,
    a: &Rational,
    norm: Normalization,
    ctx: &NumericContext,
) -> Result<SeriesResult> {
    check_order(n)?;
    check_open_unit(a)?;
    let trig = trig_at(a, ctx)?;
    let k = prefactor(n, norm, ctx)?;
    let (p, p_err) = cot_poly(n).eval_with_bound(&trig.cot, &trig.cot_err);
    let value = &k * &p;
    let bound = k.abs() * p_err + value.ulp().mul_int(ULPS_PER_TERM * (n as i64 + 4));
    SeriesResult::new(value, bound, n + 2)
}

/// `Σ(-1)^k (k+a)^-(n+1) + (-1)^n Σ(-1)^k (k+1-a)^-(n+1)`.
pub fn hoffman_sum_b(n: usize, a: &Rational, ctx: &NumericContext) -> Result<SeriesResult> {
    check_order(n)?;
    check_open_unit(a)?;
    let s = ctx.int(n as i64 + 1);
    let left = alt_hurwitz_zeta(&s, a, ctx)?;
    let right = alt_hurwitz_zeta(&s, &(1 - a.clone()), ctx)?;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    Ok(SeriesResult::combine(&[(ctx.one(), &left), (ctx.int(sign), &right)], ctx))
}

/// `π^{n+1}/n! · csc(πa) · Q_n(cot πa)` (or the wrong `P_n` variant).
pub fn hoffman_rhs_b(
    n: usize,
    a: &Rational,
    poly: AlternatingPoly,
    norm: Normalization,
    ctx: &NumericContext,
) -> Result<SeriesResult> {
    check_order(n)?;
    check_open_unit(a)?;
    let trig = trig_at(a, ctx)?;
    let k = prefactor(n, norm, ctx)?;
    let polynomial = match poly {
        AlternatingPoly::Cosecant => csc_poly(n),
        AlternatingPoly::Cotangent => cot_poly(n),
    };
    let (p, p_err) = polynomial.eval_with_bound(&trig.cot, &trig.cot_err);
    let value = &k * &trig.csc * &p;
    let bound = k.abs() * (p_err * trig.csc.abs() + p.abs() * &trig.csc_err)
        + value.ulp().mul_int(ULPS_PER_TERM * (n as i64 + 5));
    SeriesResult::new(value, bound, n + 2)
}
