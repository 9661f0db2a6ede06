//! Riemann, Hurwitz and alternating Hurwitz zeta values, Dirichlet beta,
//! and Bernoulli numbers/polynomials.
//!
//! The non-alternating sums are evaluated by Euler–Maclaurin summation with
//! a certified remainder: the partial sum up to a cutoff `N`, the tail
//! integral, the half boundary term and Bernoulli corrections until the next
//! correction drops below one ulp of the partial sum. For `f(x) = (x+b)^-s`
//! every derivative has constant sign on `[N, ∞)`, so the remainder after
//! `J` corrections is bounded by the first omitted correction; we store
//! twice that. Alternating sums at `s = 1` (and the Dirichlet beta function)
//! use the Cohen–Villegas–Zagier Chebyshev acceleration.

use std::collections::BTreeMap;
use std::sync::{Mutex, RwLock};

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};
use crate::numeric::{ExtReal, NumericContext};
use crate::series_result::{SeriesResult, ULPS_PER_TERM};

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());
static EVEN_ZETA: Mutex<BTreeMap<u32, Vec<SeriesResult>>> = Mutex::new(BTreeMap::new());

/// Attempts at doubling the Euler–Maclaurin cutoff before giving up.
const MAX_CUTOFF_DOUBLINGS: u32 = 6;

/// `B_n` with the convention `B_1 = -1/2`.
pub fn bernoulli_number(n: usize) -> Rational {
    {
        let table = BERNOULLI.read().expect("bernoulli table poisoned");
        if n < table.len() {
            return table[n].clone();
        }
    }
    let mut table = BERNOULLI.write().expect("bernoulli table poisoned");
    while table.len() <= n {
        let m = table.len();
        if m == 0 {
            table.push(Rational::from(1));
            continue;
        }
        // Σ_{k=0}^{m} C(m+1, k) B_k = 0
        let mut acc = Rational::new();
        let mut binom = Integer::from(1);
        for (k, b) in table.iter().enumerate() {
            acc += Rational::from(b * &binom);
            binom *= m + 1 - k;
            binom /= k + 1;
        }
        table.push(-acc / (m as u64 + 1));
    }
    table[n].clone()
}

/// Bernoulli polynomial `B_n(x) = Σ_k C(n,k) B_k x^(n-k)` with exact
/// rational coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliPoly {
    coefficients: Vec<Rational>,
}

impl BernoulliPoly {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::new(), |acc, c| acc * x + c)
    }

    /// Coefficients of `B_n'(x)`, constant term first.
    pub fn derivative(&self) -> Vec<Rational> {
        if self.coefficients.len() == 1 {
            return vec![Rational::new()];
        }
        self.coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| Rational::from(c * i as u64))
            .collect()
    }
}

pub fn bernoulli_poly(n: usize) -> BernoulliPoly {
    let mut coefficients = vec![Rational::new(); n + 1];
    let mut binom = Integer::from(1);
    for k in 0..=n {
        coefficients[n - k] = bernoulli_number(k) * &binom;
        binom *= n - k;
        binom /= k + 1;
    }
    BernoulliPoly { coefficients }
}

/// `ζ(-n; a) = -B_{n+1}(a)/(n+1)`, exact.
pub fn hurwitz_zeta_nonpos(n: usize, a: &Rational) -> Result<Rational> {
    check_shift_half_open(a)?;
    Ok(-bernoulli_poly(n + 1).eval(a) / (n as u64 + 1))
}

/// Order `s` of a power sum, split so integral orders use `pow_si`.
#[derive(Clone, Debug)]
enum Order {
    Int(i32),
    Real(Float),
}

impl Order {
    fn of(s: &ExtReal) -> Self {
        if s.is_integer() {
            if let Some(k) = s.as_float().to_i32_saturating() {
                if k.unsigned_abs() < (1 << 24) {
                    return Order::Int(k);
                }
            }
        }
        Order::Real(s.as_float().clone())
    }

    fn is_one(&self) -> bool {
        matches!(self, Order::Int(1))
    }

    /// `base^-s`.
    fn neg_pow(&self, base: Float) -> Float {
        match self {
            Order::Int(k) => base.pow(-k),
            Order::Real(s) => {
                let prec = base.prec();
                Float::with_val(prec, (&base).pow(&-s.clone()))
            }
        }
    }

    /// `base^s`.
    fn pos_pow(&self, base: Float) -> Float {
        match self {
            Order::Int(k) => base.pow(*k),
            Order::Real(s) => {
                let prec = base.prec();
                Float::with_val(prec, (&base).pow(s))
            }
        }
    }

    /// `s + k` at precision `prec`.
    fn plus(&self, k: i64, prec: u32) -> Float {
        match self {
            Order::Int(s) => Float::with_val(prec, i64::from(*s) + k),
            Order::Real(s) => Float::with_val(prec, s + k),
        }
    }
}

/// `2^-s`.
pub(crate) fn two_pow_neg(s: &ExtReal, ctx: &NumericContext) -> ExtReal {
    match Order::of(s) {
        Order::Int(k) => ctx.pow2(-k),
        order => ExtReal::from_float(order.neg_pow(Float::with_val(ctx.precision_bits(), 2)))
            .expect("2^-s is finite"),
    }
}

/// `x^-s` for a positive rational `x`.
pub(crate) fn rational_neg_pow(x: &Rational, s: &ExtReal, ctx: &NumericContext) -> Result<ExtReal> {
    let order = Order::of(s);
    let prec = ctx.precision_bits();
    let num = order.neg_pow(Float::with_val(prec, x.numer()));
    let den = order.pos_pow(Float::with_val(prec, x.denom()));
    ExtReal::from_float(num * den)
}

/// Euler–Maclaurin cutoff `N` for a context.
pub fn em_cutoff(ctx: &NumericContext) -> usize {
    let scaled = (f64::from(ctx.precision_bits()) * 0.7).ceil() as usize;
    scaled.max(20)
}

/// One shifted power sum `Σ_{k≥0} (k+b)^-s` split at the cutoff.
struct EmPiece {
    /// Partial sum plus tail integral (regularized to `-ln(N+b)` at `s=1`),
    /// boundary term and corrections.
    value: ExtReal,
    /// Partial sum alone; sets the scale for the correction stopping rule.
    head: ExtReal,
    remainder: ExtReal,
    terms: usize,
}

/// `None` means the asymptotic corrections started growing before reaching
/// the target; the caller retries with a larger cutoff.
fn em_piece(
    order: &Order,
    shift: &Rational,
    cutoff: usize,
    ctx: &NumericContext,
) -> Result<Option<EmPiece>> {
    let prec = ctx.precision_bits();
    let p = shift.numer();
    let q = shift.denom();
    let q_pow = order.pos_pow(Float::with_val(prec, q));

    let mut head = Float::new(prec);
    let mut node = Integer::from(p);
    for _ in 0..cutoff {
        head += order.neg_pow(Float::with_val(prec, &node));
        node += q;
    }
    head *= &q_pow;

    // x = N + b
    let x = Float::with_val(prec, &node) / Float::with_val(prec, q);
    let x_neg_s = order.neg_pow(x.clone());
    let integral = if order.is_one() {
        -x.clone().ln()
    } else {
        let s_minus_1 = order.plus(-1, prec);
        Float::with_val(prec, &x * &x_neg_s) / s_minus_1
    };
    let boundary = Float::with_val(prec, &x_neg_s) / 2u32;

    let head_ext = ExtReal::from_float(head.clone())?;
    let target = head_ext.ulp().into_float();

    let x_sq = Float::with_val(prec, x.square_ref());
    let mut derivative = Float::with_val(prec, &x_neg_s * &order.plus(0, prec)) / &x;
    let mut corrections = Float::new(prec);
    let mut previous: Option<Float> = None;
    let mut j = 1usize;
    let remainder = loop {
        let coeff = bernoulli_number(2 * j) / Integer::from(Integer::factorial(2 * j as u32));
        let term = Float::with_val(prec, &derivative * &coeff);
        let magnitude = Float::with_val(prec, term.abs_ref());
        if magnitude <= target {
            break magnitude * 2u32;
        }
        if let Some(prev) = &previous {
            if magnitude >= *prev {
                return Ok(None);
            }
        }
        corrections += &term;
        previous = Some(magnitude);
        let j2 = 2 * j as i64;
        derivative *= order.plus(j2 - 1, prec);
        derivative *= order.plus(j2, prec);
        derivative /= &x_sq;
        j += 1;
    };

    let value = head + integral + boundary + corrections;
    Ok(Some(EmPiece {
        value: ExtReal::from_float(value)?,
        head: head_ext,
        remainder: ExtReal::from_float(remainder)?,
        terms: cutoff + j + 1,
    }))
}

/// `Σ cᵢ Σ_{k≥0}(k+bᵢ)^-s` for positive rational shifts. At `s = 1` the
/// coefficients must sum to zero so the logarithmic divergences cancel.
pub(crate) fn hurwitz_combination(
    s: &ExtReal,
    parts: &[(i64, Rational)],
    ctx: &NumericContext,
) -> Result<SeriesResult> {
    let order = Order::of(s);
    if order.is_one() && parts.iter().map(|(c, _)| c).sum::<i64>() != 0 {
        return Err(Error::domain("ζ(1; a) diverges; only balanced combinations converge at s = 1"));
    }
    if *s < 1 {
        return Err(Error::domain("power sums need s ≥ 1"));
    }
    let mut cutoff = em_cutoff(ctx);
    'retry: for _ in 0..=MAX_CUTOFF_DOUBLINGS {
        let mut pieces = Vec::with_capacity(parts.len());
        for (_, shift) in parts {
            match em_piece(&order, shift, cutoff, ctx)? {
                Some(piece) => pieces.push(piece),
                None => {
                    cutoff *= 2;
                    continue 'retry;
                }
            }
        }
        let mut value = ctx.zero();
        let mut bound = ctx.zero();
        let mut magnitude = ctx.zero();
        let mut terms = 0;
        for ((c, _), piece) in parts.iter().zip(&pieces) {
            let term = piece.value.mul_int(*c);
            magnitude = magnitude.max(term.abs()).max(piece.head.abs().mul_int(c.abs()));
            value = value + term;
            bound = bound + piece.remainder.mul_int(c.abs());
            terms += piece.terms;
        }
        bound = bound + magnitude.ulp().mul_int(ULPS_PER_TERM * terms as i64);
        return SeriesResult::new(value, bound, terms);
    }
    Err(Error::NoConvergence {
        what: "Euler–Maclaurin correction series",
        limit: cutoff,
    })
}

fn check_order_gt_one(s: &ExtReal, what: &str) -> Result<()> {
    if *s > 1 {
        Ok(())
    } else {
        Err(Error::domain(format!("{what} requires s > 1 (got s = {})", s.to_decimal(10))))
    }
}

fn check_shift_half_open(a: &Rational) -> Result<()> {
    if *a > 0 && *a <= 1 {
        Ok(())
    } else {
        Err(Error::domain(format!("shift a must satisfy 0 < a ≤ 1 (got a = {a})")))
    }
}

fn check_shift_open(a: &Rational) -> Result<()> {
    if *a > 0 && *a < 1 {
        Ok(())
    } else {
        Err(Error::domain(format!("shift a must satisfy 0 < a < 1 (got a = {a})")))
    }
}

/// `ζ(s) = Σ n^-s` for `s > 1`.
///
/// Large orders, where a short direct sum already certifies the tail, are
/// summed directly; everything else goes through Euler–Maclaurin.
pub fn riemann_zeta(s: &ExtReal, ctx: &NumericContext) -> Result<SeriesResult> {
    check_order_gt_one(s, "riemann_zeta")?;
    let bits = f64::from(ctx.precision_bits()) + 2.0;
    let exponent = bits / (s.to_f64() - 1.0);
    if exponent <= (em_cutoff(ctx) as f64).log2() {
        let count = (2f64.powf(exponent).ceil() as usize).max(2);
        return riemann_zeta_direct(s, count, ctx);
    }
    hurwitz_combination(s, &[(1, Rational::from(1))], ctx)
}

/// `Σ_{k<K} k^-s` with tail `Σ_{k≥K} k^-s ≤ K^-s + K^(1-s)/(s-1)`.
fn riemann_zeta_direct(s: &ExtReal, count: usize, ctx: &NumericContext) -> Result<SeriesResult> {
    let order = Order::of(s);
    let prec = ctx.precision_bits();
    let mut sum = Float::new(prec);
    for k in 1..count {
        sum += order.neg_pow(Float::with_val(prec, k));
    }
    let k_neg_s = order.neg_pow(Float::with_val(prec, count));
    let tail = Float::with_val(prec, &k_neg_s * count) / order.plus(-1, prec) + &k_neg_s;
    let value = ExtReal::from_float(sum)?;
    let bound = ExtReal::from_float(tail)?.mul_int(2) + value.ulp().mul_int(ULPS_PER_TERM * count as i64);
    SeriesResult::new(value, bound, count)
}

/// `ζ(2n)` for `n ≥ 1`, memoized per precision.
pub fn riemann_zeta_even(n: usize, ctx: &NumericContext) -> Result<SeriesResult> {
    assert!(n >= 1, "ζ(0) is not a convergent series value");
    let mut cache = EVEN_ZETA.lock().expect("even zeta cache poisoned");
    let table = cache.entry(ctx.precision_bits()).or_default();
    while table.len() < n {
        let k = table.len() as i64 + 1;
        table.push(riemann_zeta(&ctx.int(2 * k), ctx)?);
    }
    Ok(table[n - 1].clone())
}

/// `ζ(s; a) = Σ_{k≥0} (k+a)^-s` for `s > 1`, `0 < a ≤ 1`.
pub fn hurwitz_zeta(s: &ExtReal, a: &Rational, ctx: &NumericContext) -> Result<SeriesResult> {
    check_order_gt_one(s, "hurwitz_zeta")?;
    check_shift_half_open(a)?;
    hurwitz_combination(s, &[(1, a.clone())], ctx)
}

/// `ζ(s; a+1)` obtained as `ζ(s; a) − a^-s`, checked against direct
/// Euler–Maclaurin evaluation at the shifted argument.
pub fn hurwitz_zeta_shift(s: &ExtReal, a: &Rational, ctx: &NumericContext) -> Result<SeriesResult> {
    let base = hurwitz_zeta(s, a, ctx)?;
    let first = rational_neg_pow(a, s, ctx)?;
    let shifted = base.offset(&-first);
    let direct = hurwitz_combination(s, &[(1, Rational::from(a + 1u32))], ctx)?;
    if !shifted.agrees_with(&direct) {
        return Err(Error::Inconsistent("ζ(s; a+1) = ζ(s; a) − a^-s".into()));
    }
    Ok(shifted)
}

/// `Σ_{k≥0} (-1)^k (k+a)^-s` for `s ≥ 1`, `0 < a < 1`.
///
/// For `s > 1` this is `2^-s [ζ(s; a/2) − ζ(s; (a+1)/2)]`; at `s = 1` the
/// accelerated alternating sum is used.
pub fn alt_hurwitz_zeta(s: &ExtReal, a: &Rational, ctx: &NumericContext) -> Result<SeriesResult> {
    check_shift_open(a)?;
    if *s < 1 {
        return Err(Error::domain("alt_hurwitz_zeta requires s ≥ 1"));
    }
    if *s == 1 {
        return alt_hurwitz_accelerated(s, a, ctx);
    }
    let half = Rational::from(a / 2u32);
    let upper = Rational::from(a + 1u32) / 2u32;
    let split = hurwitz_combination(s, &[(1, half), (-1, upper)], ctx)?;
    Ok(split.scale(&two_pow_neg(s, ctx)))
}

/// Cohen–Villegas–Zagier acceleration of `Σ_{k≥0} (-1)^k (k+a)^-s`.
///
/// `(k+a)^-s` are moments of a positive measure on `[0,1]`, so with `n`
/// terms the error is at most `2 a^-s / (3+√8)^n`.
pub fn alt_hurwitz_accelerated(s: &ExtReal, a: &Rational, ctx: &NumericContext) -> Result<SeriesResult> {
    if *s <= 0 {
        return Err(Error::domain("accelerated alternating sum requires s > 0"));
    }
    if *a <= 0 {
        return Err(Error::domain("accelerated alternating sum requires a > 0"));
    }
    let wide = ctx.widened(16);
    let prec = wide.precision_bits();
    let order = Order::of(s);
    let rate = 3.0 + 8f64.sqrt();
    let n = ((f64::from(prec) + 4.0) * std::f64::consts::LN_2 / rate.ln()).ceil() as i64;

    let sqrt8 = Float::with_val(prec, 8).sqrt();
    let d0 = Float::with_val(prec, sqrt8 + 3u32).pow(n as i32);
    let d = Float::with_val(prec, &d0 + Float::with_val(prec, d0.recip_ref())) / 2u32;

    let p = a.numer();
    let q = a.denom();
    let q_pow = order.pos_pow(Float::with_val(prec, q));
    let mut node = Integer::from(p);
    let mut b = Float::with_val(prec, -1);
    let mut c = Float::with_val(prec, -&d);
    let mut sum = Float::new(prec);
    let mut first = None;
    for k in 0..n {
        c = Float::with_val(prec, &b - &c);
        let term = order.neg_pow(Float::with_val(prec, &node)) * &q_pow;
        if first.is_none() {
            first = Some(term.clone());
        }
        sum += Float::with_val(prec, &c * &term);
        b *= 2 * (k + n) * (k - n);
        b /= (2 * k + 1) * (k + 1);
        node += q;
    }
    let value = ExtReal::from_float(sum / &d)?;
    let first = ExtReal::from_float(first.expect("at least one term"))?;
    let truncation = ExtReal::from_float(Float::with_val(prec, first.as_float() * 2u32) / &d0)?;
    let rounding = first.ulp().mul_int(ULPS_PER_TERM * n);
    let value = value.at(ctx);
    let bound = truncation + rounding + value.ulp();
    SeriesResult::new(value, bound.at(ctx), n as usize)
}

/// Dirichlet beta `β(s) = Σ_{n≥0} (-1)^n (2n+1)^-s` for `s ≥ 1`, by the
/// accelerated alternating sum (`β(s) = 2^-s Σ (-1)^k (k+1/2)^-s`).
pub fn dirichlet_beta(s: &ExtReal, ctx: &NumericContext) -> Result<SeriesResult> {
    if *s < 1 {
        return Err(Error::domain("dirichlet_beta requires s ≥ 1"));
    }
    let alt = alt_hurwitz_accelerated(s, &Rational::from((1, 2)), ctx)?;
    Ok(alt.scale(&two_pow_neg(s, ctx)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::make_context;

    fn r(p: i64, q: i64) -> Rational {
        Rational::from((p, q))
    }

    #[test]
    fn bernoulli_small() {
        assert_eq!(bernoulli_number(0), 1);
        assert_eq!(bernoulli_number(1), r(-1, 2));
        assert_eq!(bernoulli_number(2), r(1, 6));
        assert_eq!(bernoulli_number(3), 0);
        assert_eq!(bernoulli_number(4), r(-1, 30));
        assert_eq!(bernoulli_number(12), r(-691, 2730));
    }

    #[test]
    fn bernoulli_polys_by_hand() {
        assert_eq!(bernoulli_poly(0).coefficients(), &[r(1, 1)]);
        assert_eq!(bernoulli_poly(1).coefficients(), &[r(-1, 2), r(1, 1)]);
        assert_eq!(bernoulli_poly(2).coefficients(), &[r(1, 6), r(-1, 1), r(1, 1)]);
    }

    #[test]
    fn bernoulli_poly_derivative_and_endpoints() {
        for n in 1..=40 {
            let p = bernoulli_poly(n);
            let lower = bernoulli_poly(n - 1);
            let expected: Vec<Rational> = lower
                .coefficients()
                .iter()
                .map(|c| Rational::from(c * n as u64))
                .collect();
            assert_eq!(p.derivative(), expected, "n = {n}");
            let zero = p.eval(&Rational::new());
            assert_eq!(zero, bernoulli_number(n));
            if n != 1 {
                assert_eq!(p.eval(&Rational::from(1)), zero);
            }
        }
    }

    #[test]
    fn nonpositive_hurwitz_values() {
        for a in [r(1, 3), r(1, 2), r(3, 4), r(1, 1)] {
            let expected: Rational = r(1, 2) - &a;
            assert_eq!(hurwitz_zeta_nonpos(0, &a).unwrap(), expected);
        }
        assert_eq!(hurwitz_zeta_nonpos(1, &r(1, 2)).unwrap(), r(1, 24));
        assert_eq!(hurwitz_zeta_nonpos(0, &r(1, 2)).unwrap(), 0);
        assert!(hurwitz_zeta_nonpos(0, &r(0, 1)).is_err());
    }

    #[test]
    fn zeta_two_and_four() {
        let ctx = make_context(30).unwrap();
        let pi = ctx.pi();
        let z2 = riemann_zeta(&ctx.int(2), &ctx).unwrap();
        assert!(z2.contains(&(pi.square().div_int(6))));
        let z4 = riemann_zeta(&ctx.int(4), &ctx).unwrap();
        assert!(z4.contains(&(pi.powi(4).unwrap().div_int(90))));
        assert!(z2.error_bound < ctx.tolerance(35));
        assert!(riemann_zeta(&ctx.int(1), &ctx).is_err());
        assert!(riemann_zeta(&ctx.parse("0.5").unwrap(), &ctx).is_err());
    }

    #[test]
    fn zeta_direct_branch_matches_em() {
        let ctx = make_context(30).unwrap();
        for s in [40, 64, 101] {
            let s = ctx.int(s);
            let direct = riemann_zeta(&s, &ctx).unwrap();
            let em = hurwitz_combination(&s, &[(1, r(1, 1))], &ctx).unwrap();
            assert!(direct.agrees_with(&em));
        }
    }

    #[test]
    fn hurwitz_half_bisection() {
        let ctx = make_context(30).unwrap();
        for s in [2, 3, 5] {
            let sv = ctx.int(s);
            let h = hurwitz_zeta(&sv, &r(1, 2), &ctx).unwrap();
            let z = riemann_zeta(&sv, &ctx).unwrap();
            let expected = z.scale(&ctx.int((1 << s) - 1));
            assert!(h.agrees_with(&expected), "s = {s}");
        }
        let h1 = hurwitz_zeta(&ctx.int(3), &r(1, 1), &ctx).unwrap();
        assert!(h1.agrees_with(&riemann_zeta(&ctx.int(3), &ctx).unwrap()));
    }

    #[test]
    fn hurwitz_quarter_value() {
        // ζ(2; 1/4) = π² + 8G
        let ctx = make_context(30).unwrap();
        let h = hurwitz_zeta(&ctx.int(2), &r(1, 4), &ctx).unwrap();
        let expected = ctx.pi().square() + ctx.catalan().mul_int(8);
        assert!(h.contains(&expected));
        assert!((h.value.to_f64() - 17.197_329_154_507_11).abs() < 1e-12);
    }

    #[test]
    fn hurwitz_rejects_bad_arguments() {
        let ctx = make_context(20).unwrap();
        assert!(hurwitz_zeta(&ctx.int(1), &r(1, 2), &ctx).is_err());
        assert!(hurwitz_zeta(&ctx.int(2), &r(0, 1), &ctx).is_err());
        assert!(hurwitz_zeta(&ctx.int(2), &r(3, 2), &ctx).is_err());
    }

    #[test]
    fn hurwitz_real_order() {
        // ζ(5/2; 1/2) = (2^{5/2} − 1) ζ(5/2)
        let ctx = make_context(30).unwrap();
        let s = ctx.parse("2.5").unwrap();
        let h = hurwitz_zeta(&s, &r(1, 2), &ctx).unwrap();
        let z = riemann_zeta(&s, &ctx).unwrap();
        let factor = ctx.int(2).pow(&s).unwrap() - ctx.one();
        assert!(h.agrees_with(&z.scale(&factor)));
    }

    #[test]
    fn shift_identity() {
        let ctx = make_context(30).unwrap();
        let two = ctx.int(2);
        let got = hurwitz_zeta_shift(&two, &r(1, 2), &ctx).unwrap();
        let z2 = riemann_zeta(&two, &ctx).unwrap();
        assert!(got.agrees_with(&z2.scale(&ctx.int(3)).offset(&ctx.int(-4))));

        let got = hurwitz_zeta_shift(&ctx.int(3), &r(1, 1), &ctx).unwrap();
        let z3 = riemann_zeta(&ctx.int(3), &ctx).unwrap();
        assert!(got.agrees_with(&z3.offset(&ctx.int(-1))));

        let got = hurwitz_zeta_shift(&two, &r(1, 4), &ctx).unwrap();
        let h = hurwitz_zeta(&two, &r(1, 4), &ctx).unwrap();
        assert!(got.agrees_with(&h.offset(&ctx.int(-16))));
    }

    #[test]
    fn alternating_values() {
        let ctx = make_context(30).unwrap();
        let pi = ctx.pi();
        let one = alt_hurwitz_zeta(&ctx.int(1), &r(1, 2), &ctx).unwrap();
        assert!(one.contains(&pi.div_int(2)));
        let two = alt_hurwitz_zeta(&ctx.int(2), &r(1, 2), &ctx).unwrap();
        assert!(two.contains(&ctx.catalan().mul_int(4)));
        let split = alt_hurwitz_zeta(&ctx.int(3), &r(1, 3), &ctx).unwrap();
        let acc = alt_hurwitz_accelerated(&ctx.int(3), &r(1, 3), &ctx).unwrap();
        assert!(split.agrees_with(&acc));
        assert!(alt_hurwitz_zeta(&ctx.int(2), &r(1, 1), &ctx).is_err());
    }

    #[test]
    fn beta_values() {
        let ctx = make_context(30).unwrap();
        let b1 = dirichlet_beta(&ctx.int(1), &ctx).unwrap();
        assert!(b1.contains(&ctx.pi().div_int(4)));
        let b2 = dirichlet_beta(&ctx.int(2), &ctx).unwrap();
        assert!(b2.contains(&ctx.catalan()));
        let b3 = dirichlet_beta(&ctx.int(3), &ctx).unwrap();
        assert!(b3.contains(&ctx.pi().powi(3).unwrap().div_int(32)));
        let via_alt = alt_hurwitz_zeta(&ctx.int(3), &r(1, 2), &ctx)
            .unwrap()
            .scale(&ctx.pow2(-3));
        assert!(b3.agrees_with(&via_alt));
    }

    #[test]
    fn even_zeta_cache_consistent() {
        let ctx = make_context(25).unwrap();
        let cached = riemann_zeta_even(3, &ctx).unwrap();
        let direct = riemann_zeta(&ctx.int(6), &ctx).unwrap();
        assert_eq!(cached.value, direct.value);
    }
}
