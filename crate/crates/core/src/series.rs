//! Rational zeta series in `ζ(2n)` and their closed forms.
//!
//! The central object is
//!
//! ```text
//! g(a, m) = Σ_{n≥1} a^{2n} ζ(2n) C(2n, m) / n,      0 < a < 1, m ≥ 1,
//! ```
//!
//! evaluated two ways: by summing the series with a certified geometric
//! tail ([`binom_series_direct`]) and from the Hurwitz closed form
//! `a^m/m · ((-1)^m ζ(m; a) + ζ(m; 1-a)) + (-1)^{m-1}/m`
//! ([`binom_series_closed`]). The specialisations at `a = 1/2` and `a = 1/4`,
//! the `x·cot(πx)` and `log(πx / sin πx)` power series and a handful of
//! classical `ζ`-series live here too.

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};
use crate::numeric::{ExtReal, NumericContext};
use crate::series_result::{SeriesResult, ULPS_PER_TERM};
use crate::special::{dirichlet_beta, hurwitz_combination, riemann_zeta, riemann_zeta_even};

/// Hard cap on summed terms for any truncated series in this module.
pub const MAX_TERMS: usize = 200_000;

/// Default absolute target for truncated sums: eight bits below the
/// context's promised accuracy.
pub fn default_target(ctx: &NumericContext) -> ExtReal {
    ctx.pow2(-(ctx.accuracy_bits() as i32 + 8))
}

/// Parameters `(a, m)` of `g(a, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomSeriesQuery {
    a: Rational,
    m: u32,
}

impl BinomSeriesQuery {
    pub fn new(a: Rational, m: u32) -> Result<Self> {
        if a >= 1 {
            return Err(Error::domain(format!(
                "the series diverges for a ≥ 1 (got a = {a}); need 0 < a < 1"
            )));
        }
        if a <= 0 {
            return Err(Error::domain(format!("need 0 < a < 1 (got a = {a})")));
        }
        if m < 1 {
            return Err(Error::domain("binomial index m must be at least 1"));
        }
        Ok(Self { a, m })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

/// `(-1)^m ζ(m; a) + ζ(m; 1-a)`.
///
/// At `m = 1` the two Hurwitz values diverge individually; the balanced
/// combination `Σ_k [1/(k+1-a) − 1/(k+a)] = −π cot(πa)` is summed as one
/// convergent series.
pub fn paired_hurwitz(m: usize, a: &Rational, ctx: &NumericContext) -> Result<SeriesResult> {
    if m < 1 {
        return Err(Error::domain("paired_hurwitz requires m ≥ 1"));
    }
    if *a <= 0 || *a >= 1 {
        return Err(Error::domain(format!("paired_hurwitz requires 0 < a < 1 (got a = {a})")));
    }
    let sign = if m % 2 == 0 { 1 } else { -1 };
    let complement: Rational = 1 - a.clone();
    hurwitz_combination(&ctx.int(m as i64), &[(sign, a.clone()), (1, complement)], ctx)
}

/// `g(a, m)` by direct summation from `n = ⌈m/2⌉`.
///
/// With `t_n` the n-th term, `t_{n+1}/t_n = R_n · ζ(2n+2)/ζ(2n)` where
/// `R_n = a² (2n)(2n+1) / ((2n+2-m)(2n+1-m))` is non-increasing in `n` and
/// `ζ(2n+2) < ζ(2n)`. Once `R_n < 0.95` the tail is at most
/// `t_n R_n / (1 − R_n)`.
pub fn binom_series_direct(
    query: &BinomSeriesQuery,
    target_eps: &ExtReal,
    ctx: &NumericContext,
) -> Result<SeriesResult> {
    if target_eps.is_zero() || target_eps.is_sign_negative() {
        return Err(Error::domain("target_eps must be positive"));
    }
    let m = u64::from(query.m);
    let a2 = Rational::from(query.a.square_ref());
    let mut n = m.div_ceil(2).max(1);
    // a^{2n} C(2n, m) / n
    let mut coeff = a2.clone().pow(n as i32)
        * Integer::from(Integer::binomial_u(2 * n as u32, m as u32))
        / n;
    let cutoff_ratio = Rational::from((19, 20));
    let quarter_target = target_eps.div_int(4);

    let mut sum = ctx.zero();
    let mut zeta_err = ctx.zero();
    let mut rounding = ctx.zero();
    let mut terms = 0usize;
    loop {
        if terms >= MAX_TERMS {
            return Err(Error::NoConvergence {
                what: "binom_series_direct",
                limit: MAX_TERMS,
            });
        }
        let zeta = riemann_zeta_even(n as usize, ctx)?;
        let c = ctx.rational(&coeff);
        let term = &c * &zeta.value;
        let term_err = &c * &zeta.error_bound;
        sum = sum + &term;
        // term product and coefficient conversion, then the addition
        rounding = rounding + term.ulp().mul_int(ULPS_PER_TERM) + sum.ulp().mul_int(2);
        zeta_err = zeta_err + &term_err;
        terms += 1;

        let ratio = a2.clone() * (2 * n) * (2 * n + 1)
            / ((2 * n + 2 - m) * (2 * n + 1 - m));
        if ratio < cutoff_ratio && term < quarter_target {
            let r = ctx.rational(&ratio);
            let tail = (&term + &term_err) * &r;
            let tail = tail.checked_div(&(ctx.one() - &r))?;
            if tail < quarter_target {
                let tail = &tail + &tail.ulp().mul_int(4);
                return SeriesResult::new(sum, tail + zeta_err + rounding, terms);
            }
        }
        // coeff ← coeff · a² (2n+2)(2n+1) / ((2n+2-m)(2n+1-m)) · n/(n+1)
        coeff *= ratio;
        n += 1;
    }
}

/// `g(a, m)` from the Hurwitz closed form.
pub fn binom_series_closed(query: &BinomSeriesQuery, ctx: &NumericContext) -> Result<SeriesResult> {
    let m = query.m;
    let paired = paired_hurwitz(m as usize, &query.a, ctx)?;
    let scale = ctx.rational(&query.a.clone().pow(m as i32)).div_int(i64::from(m));
    let sign = if m % 2 == 1 { 1 } else { -1 };
    let constant = ctx.rational(&Rational::from((sign, i64::from(m))));
    Ok(paired.scale(&scale).offset(&constant))
}

fn positive_m(m: u32) -> Result<()> {
    if m < 1 {
        Err(Error::domain("binomial index m must be at least 1"))
    } else {
        Ok(())
    }
}

/// `(1/m)(c·ζ(m)(1 − 2^-m) − 1)` for even `m`.
fn even_branch(m: u32, c: i64, ctx: &NumericContext) -> Result<SeriesResult> {
    let zeta = riemann_zeta(&ctx.int(i64::from(m)), ctx)?;
    let factor = (ctx.one() - ctx.pow2(-(m as i32))).mul_int(c).div_int(i64::from(m));
    Ok(zeta.scale(&factor).offset(&ctx.rational(&Rational::from((-1, i64::from(m))))))
}

/// `Σ ζ(2n) C(2n,m) / (n 4^n)`: `1/m` for odd `m`, otherwise
/// `(1/m)(2ζ(m)(1 − 2^-m) − 1)`.
pub fn corollary_half(m: u32, ctx: &NumericContext) -> Result<SeriesResult> {
    positive_m(m)?;
    if m % 2 == 1 {
        let v = ctx.rational(&Rational::from((1, i64::from(m))));
        return Ok(SeriesResult::rounded(v, 1, 0));
    }
    even_branch(m, 2, ctx)
}

/// `Σ ζ(2n) C(2n,m) / (n 16^n)`: `(1/m)(1 − β(m))` for odd `m`, otherwise
/// `(1/m)(ζ(m)(1 − 2^-m) − 1)`.
pub fn corollary_quarter(m: u32, ctx: &NumericContext) -> Result<SeriesResult> {
    positive_m(m)?;
    if m % 2 == 1 {
        let beta = dirichlet_beta(&ctx.int(i64::from(m)), ctx)?;
        let inv_m = ctx.rational(&Rational::from((1, i64::from(m))));
        return Ok(beta.scale(&-inv_m.clone()).offset(&inv_m));
    }
    even_branch(m, 1, ctx)
}

/// Truncations of `Σ ζ(2n) x^{2n}` and `Σ ζ(2n) x^{2n} / n` for `0 < x < 1`.
///
/// Successive terms shrink by at least `x²`, so each tail after term `t` is
/// below `t·x²/(1−x²)`.
pub fn cot_expansion(x: &Rational, ctx: &NumericContext) -> Result<(SeriesResult, SeriesResult)> {
    cot_expansion_to(x, &default_target(ctx), ctx)
}

pub fn cot_expansion_to(
    x: &Rational,
    target_eps: &ExtReal,
    ctx: &NumericContext,
) -> Result<(SeriesResult, SeriesResult)> {
    if *x <= 0 || *x >= 1 {
        return Err(Error::domain(format!("cot_expansion requires 0 < x < 1 (got x = {x})")));
    }
    let x2 = Rational::from(x.square_ref());
    let ratio = ctx.rational(&x2);
    let ratio_tail = ratio.checked_div(&(ctx.one() - &ratio))?;
    let quarter_target = target_eps.div_int(4);

    let mut power = x2.clone();
    let (mut plain, mut weighted) = (ctx.zero(), ctx.zero());
    let (mut plain_err, mut weighted_err) = (ctx.zero(), ctx.zero());
    let mut n = 1usize;
    loop {
        if n > MAX_TERMS {
            return Err(Error::NoConvergence {
                what: "cot_expansion",
                limit: MAX_TERMS,
            });
        }
        let zeta = riemann_zeta_even(n, ctx)?;
        let p = ctx.rational(&power);
        let term = &p * &zeta.value;
        let term_w = term.div_int(n as i64);
        plain = plain + &term;
        weighted = weighted + &term_w;
        plain_err = plain_err + &p * &zeta.error_bound;
        weighted_err = weighted_err + (&p * &zeta.error_bound).div_int(n as i64);
        let tail = (&term + &p * &zeta.error_bound) * &ratio_tail;
        if tail < quarter_target {
            let tail = &tail + &tail.ulp().mul_int(4);
            let rounding = |v: &ExtReal| v.abs().max(ctx.one()).ulp().mul_int(ULPS_PER_TERM * 2 * n as i64);
            let pr = rounding(&plain);
            let wr = rounding(&weighted);
            return Ok((
                SeriesResult::new(plain, &tail + plain_err + pr, n)?,
                SeriesResult::new(weighted, tail + weighted_err + wr, n)?,
            ));
        }
        power *= &x2;
        n += 1;
    }
}

/// Closed forms `(1 − πx cot πx)/2` and `log(πx / sin πx)`, each with a
/// rounding allowance.
pub fn cot_expansion_closed(x: &Rational, ctx: &NumericContext) -> Result<(SeriesResult, SeriesResult)> {
    if *x <= 0 || *x >= 1 {
        return Err(Error::domain(format!("cot_expansion requires 0 < x < 1 (got x = {x})")));
    }
    let wide = ctx.widened(32);
    let angle = wide.pi().mul_rational(x);
    let first = (wide.one() - &angle * &angle.cot()?).div_int(2);
    let second = angle.checked_div(&angle.sin())?.ln()?;
    Ok((
        SeriesResult::rounded(first.at(ctx), 2, 0),
        SeriesResult::rounded(second.at(ctx), 2, 0),
    ))
}

/// Classical series in `ζ` with known sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassicId {
    /// `Σ_{n≥2} (ζ(n) − 1) = 1`
    Goldbach,
    /// `Σ_{n≥1} (ζ(2n) − 1)/n = log 2`
    Log2,
    /// `Σ_{n≥2} (ζ(n) − 1)/n = 1 − γ`
    OneMinusGamma,
    /// `Σ_{n≥1} ζ(2n) / (n (2n+1) 4^n) = log π − 1`
    TylerChernoff,
}

impl ClassicId {
    pub const ALL: [ClassicId; 4] = [
        ClassicId::Goldbach,
        ClassicId::Log2,
        ClassicId::OneMinusGamma,
        ClassicId::TylerChernoff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassicId::Goldbach => "goldbach",
            ClassicId::Log2 => "log2",
            ClassicId::OneMinusGamma => "one_minus_gamma",
            ClassicId::TylerChernoff => "tyler_chernoff",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.name() == name)
            .ok_or_else(|| {
                Error::invalid(format!(
                    "unknown classic identity {name:?} (expected goldbach, log2, one_minus_gamma or tyler_chernoff)"
                ))
            })
    }

    /// The known sum.
    pub fn closed_form(self, ctx: &NumericContext) -> Result<ExtReal> {
        Ok(match self {
            ClassicId::Goldbach => ctx.one(),
            ClassicId::Log2 => ctx.ln2(),
            ClassicId::OneMinusGamma => ctx.one() - ctx.euler_gamma(),
            ClassicId::TylerChernoff => ctx.pi().ln()? - ctx.one(),
        })
    }
}

/// Truncated left-hand side of a classical identity with certified tail.
pub fn classic_identity(id: ClassicId, ctx: &NumericContext) -> Result<SeriesResult> {
    let target = default_target(ctx).div_int(4);
    let prec = ctx.precision_bits();
    let mut sum = ctx.zero();
    let mut err = ctx.zero();
    let mut terms = 0usize;
    let mut n: u64 = match id {
        ClassicId::Goldbach | ClassicId::OneMinusGamma => 2,
        ClassicId::Log2 | ClassicId::TylerChernoff => 1,
    };
    loop {
        if terms >= MAX_TERMS {
            return Err(Error::NoConvergence {
                what: "classic_identity",
                limit: MAX_TERMS,
            });
        }
        let (term, term_err) = match id {
            ClassicId::Goldbach | ClassicId::OneMinusGamma => {
                let z = riemann_zeta(&ctx.int(n as i64), ctx)?;
                let t = z.value - ctx.one();
                let t = if id == ClassicId::OneMinusGamma { t.div_int(n as i64) } else { t };
                (t, z.error_bound)
            }
            ClassicId::Log2 => {
                let z = riemann_zeta_even(n as usize, ctx)?;
                ((z.value - ctx.one()).div_int(n as i64), z.error_bound)
            }
            ClassicId::TylerChernoff => {
                let z = riemann_zeta_even(n as usize, ctx)?;
                let w = Rational::from((1, n * (2 * n + 1))) >> (2 * n as u32);
                let w = ctx.rational(&w);
                (&z.value * &w, &z.error_bound * &w)
            }
        };
        sum = sum + &term;
        err = err + term_err;
        terms += 1;

        let nf = Float::with_val(prec, n);
        let tail = match id {
            // 2^-N (N+2)/N
            ClassicId::Goldbach => (Float::with_val(prec, &nf + 2u32) / &nf) >> n as u32,
            // 4^-N (2N+3) / (3 (2N+1)(N+1))
            ClassicId::Log2 => {
                (Float::with_val(prec, 2 * n + 3) / (Float::with_val(prec, 3 * (2 * n + 1)) * (n + 1)))
                    >> (2 * n) as u32
            }
            // 2^-N (N+2) / (N (N+1))
            ClassicId::OneMinusGamma => {
                (Float::with_val(prec, &nf + 2u32) / Float::with_val(prec, &nf * (n + 1))) >> n as u32
            }
            // 4^-N · 2 / (3 (N+1)(2N+3)), using ζ(2k) < 2
            ClassicId::TylerChernoff => {
                (Float::with_val(prec, 2) / (Float::with_val(prec, 3 * (n + 1)) * (2 * n + 3)))
                    >> (2 * n) as u32
            }
        };
        let tail = ExtReal::from_float(tail)?;
        if tail < target {
            let tail = &tail + &tail.ulp().mul_int(4);
            let rounding = sum.abs().max(ctx.one()).ulp().mul_int(ULPS_PER_TERM * 2 * terms as i64);
            return SeriesResult::new(sum, tail + err + rounding, terms);
        }
        n += 1;
    }
}

/// `2 ∫_0^{1/2} log(πx / sin πx) dx`, which equals the Tyler–Chernoff sum
/// by termwise integration of the log-sine power series.
///
/// Gauss–Legendre on `[0, 1/2]`; the integrand is analytic in the disc
/// `|x| < 1`, so the rule converges geometrically. The reported bound is
/// the gap between two rule sizes plus rounding.
pub fn tyler_chernoff_by_quadrature(ctx: &NumericContext) -> Result<SeriesResult> {
    let wide = ctx.widened(64);
    let coarse = log_sine_quadrature(48, &wide)?;
    let fine = log_sine_quadrature(64, &wide)?;
    let gap = (&fine - &coarse).abs();
    let value = fine.at(ctx);
    let bound = gap.at(ctx) + value.ulp().mul_int(ULPS_PER_TERM);
    SeriesResult::new(value, bound, 64)
}

fn log_sine_quadrature(points: usize, ctx: &NumericContext) -> Result<ExtReal> {
    let pi = ctx.pi();
    let quarter = ctx.rational(&Rational::from((1, 4)));
    let mut acc = ctx.zero();
    for (node, weight) in gauss_legendre(points, ctx)? {
        // map [-1, 1] → [0, 1/2]
        let x = &quarter * &(node + ctx.one());
        let angle = &pi * &x;
        let f = angle.checked_div(&angle.sin())?.ln()?;
        acc = acc + weight * f;
    }
    // 2 · (1/4) · Σ wᵢ f(xᵢ)
    Ok(acc.div_int(2))
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize, ctx: &NumericContext) -> Result<Vec<(ExtReal, ExtReal)>> {
    assert!(n >= 1);
    let prec = ctx.precision_bits();
    // (P_n(x), P_n'(x))
    let legendre = |x: &Float| -> (Float, Float) {
        let mut p0 = Float::with_val(prec, 1);
        let mut p1 = x.clone();
        for k in 2..=n {
            let k = k as u32;
            let p2 = (Float::with_val(prec, x * &p1) * (2 * k - 1) - Float::with_val(prec, &p0 * (k - 1))) / k;
            p0 = p1;
            p1 = p2;
        }
        let one_minus = Float::with_val(prec, 1u32 - Float::with_val(prec, x.square_ref()));
        let dp = Float::with_val(prec, Float::with_val(prec, x * &p1) - &p0) * n as u32 / one_minus;
        let dp = -dp;
        (p1, dp)
    };
    let mut out = Vec::with_capacity(n);
    let tol = Float::with_val(prec, 1) >> (prec - 4);
    for i in 1..=n {
        let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut x = Float::with_val(prec, guess);
        for _ in 0..100 {
            let (p, dp) = legendre(&x);
            let step = Float::with_val(prec, &p / &dp);
            x -= &step;
            if step.abs() <= tol {
                break;
            }
        }
        let (_, dp) = legendre(&x);
        let one_minus = Float::with_val(prec, 1u32 - Float::with_val(prec, x.square_ref()));
        let w = Float::with_val(prec, 2) / (one_minus * Float::with_val(prec, dp.square_ref()));
        out.push((ExtReal::from_float(x)?, ExtReal::from_float(w)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::make_context;

    fn r(p: i64, q: i64) -> Rational {
        Rational::from((p, q))
    }

    #[test]
    fn query_validation() {
        assert!(matches!(BinomSeriesQuery::new(r(3, 2), 2), Err(Error::Domain(_))));
        assert!(BinomSeriesQuery::new(r(1, 1), 2).is_err());
        assert!(BinomSeriesQuery::new(r(0, 1), 2).is_err());
        assert!(BinomSeriesQuery::new(r(1, 2), 0).is_err());
        assert!(BinomSeriesQuery::new(r(1, 2), 1).is_ok());
    }

    #[test]
    fn direct_half_m1_is_one() {
        let ctx = make_context(30).unwrap();
        let q = BinomSeriesQuery::new(r(1, 2), 1).unwrap();
        let eps = ctx.tolerance(28);
        let d = binom_series_direct(&q, &eps, &ctx).unwrap();
        assert!(d.contains(&ctx.one()));
        assert!(d.error_bound <= eps);
    }

    #[test]
    fn direct_half_m3_is_third() {
        let ctx = make_context(30).unwrap();
        let q = BinomSeriesQuery::new(r(1, 2), 3).unwrap();
        let d = binom_series_direct(&q, &ctx.tolerance(28), &ctx).unwrap();
        assert!(d.contains(&ctx.rational(&r(1, 3))));
    }

    #[test]
    fn direct_matches_closed_third_m4() {
        let ctx = make_context(30).unwrap();
        let q = BinomSeriesQuery::new(r(1, 3), 4).unwrap();
        let d = binom_series_direct(&q, &ctx.tolerance(28), &ctx).unwrap();
        let c = binom_series_closed(&q, &ctx).unwrap();
        assert!(d.agrees_with(&c));
    }

    #[test]
    fn paired_values() {
        let ctx = make_context(30).unwrap();
        let p1 = paired_hurwitz(1, &r(1, 4), &ctx).unwrap();
        assert!(p1.contains(&-ctx.pi()));
        let p2 = paired_hurwitz(2, &r(1, 2), &ctx).unwrap();
        assert!(p2.contains(&ctx.pi().square()));
        let p3 = paired_hurwitz(3, &r(1, 2), &ctx).unwrap();
        assert!(p3.contains(&ctx.zero()));
        assert!(paired_hurwitz(2, &r(1, 1), &ctx).is_err());
        assert!(paired_hurwitz(0, &r(1, 2), &ctx).is_err());
    }

    #[test]
    fn closed_form_corollary_branches() {
        let ctx = make_context(30).unwrap();
        let c = binom_series_closed(&BinomSeriesQuery::new(r(1, 2), 1).unwrap(), &ctx).unwrap();
        assert!(c.contains(&ctx.one()));
        for m in [2u32, 4, 6] {
            let c = binom_series_closed(&BinomSeriesQuery::new(r(1, 2), m).unwrap(), &ctx).unwrap();
            assert!(c.agrees_with(&corollary_half(m, &ctx).unwrap()), "m = {m}");
        }
        for m in [1u32, 3, 5] {
            let c = binom_series_closed(&BinomSeriesQuery::new(r(1, 4), m).unwrap(), &ctx).unwrap();
            assert!(c.agrees_with(&corollary_quarter(m, &ctx).unwrap()), "m = {m}");
        }
    }

    #[test]
    fn corollary_values() {
        let ctx = make_context(30).unwrap();
        let pi2 = ctx.pi().square();
        assert!(corollary_half(3, &ctx).unwrap().contains(&ctx.rational(&r(1, 3))));
        assert!(corollary_half(1, &ctx).unwrap().contains(&ctx.one()));
        let expected = pi2.div_int(8) - ctx.rational(&r(1, 2));
        assert!(corollary_half(2, &ctx).unwrap().contains(&expected));

        assert!(corollary_quarter(1, &ctx).unwrap().contains(&(ctx.one() - ctx.pi().div_int(4))));
        let expected = pi2.div_int(16) - ctx.rational(&r(1, 2));
        assert!(corollary_quarter(2, &ctx).unwrap().contains(&expected));
        let beta3 = ctx.pi().powi(3).unwrap().div_int(32);
        let expected = (ctx.one() - beta3).div_int(3);
        assert!(corollary_quarter(3, &ctx).unwrap().contains(&expected));
        assert!(corollary_half(0, &ctx).is_err());
    }

    #[test]
    fn expansions_at_half_and_quarter() {
        let ctx = make_context(30).unwrap();
        let pi = ctx.pi();
        let ln2 = ctx.ln2();
        let (s1, s3) = cot_expansion(&r(1, 2), &ctx).unwrap();
        assert!(s1.contains(&ctx.rational(&r(1, 2))));
        assert!(s3.contains(&(pi.ln().unwrap() - &ln2)));
        let (s2, s4) = cot_expansion(&r(1, 4), &ctx).unwrap();
        assert!(s2.contains(&(ctx.int(4) - &pi).div_int(8)));
        assert!(s4.contains(&(pi.ln().unwrap() - ln2.mul_int(3).div_int(2))));
        let (c1, c3) = cot_expansion_closed(&r(1, 2), &ctx).unwrap();
        assert!(s1.agrees_with(&c1) && s3.agrees_with(&c3));
    }

    #[test]
    fn expansion_small_x_leading_order() {
        let ctx = make_context(30).unwrap();
        let x = r(1, 64);
        let (s, w) = cot_expansion(&x, &ctx).unwrap();
        let lead = ctx.pi().square().div_int(6).mul_rational(&Rational::from(x.square_ref()));
        for v in [s.value, w.value] {
            let rel = ((v - &lead).abs().checked_div(&lead)).unwrap();
            assert!(rel < ctx.rational(&r(1, 10)));
        }
        assert!(cot_expansion(&r(1, 1), &ctx).is_err());
    }

    #[test]
    fn classic_values() {
        let ctx = make_context(30).unwrap();
        for id in ClassicId::ALL {
            let lhs = classic_identity(id, &ctx).unwrap();
            let rhs = id.closed_form(&ctx).unwrap();
            assert!(lhs.contains(&rhs), "{id:?}: {} vs {}", lhs.value, rhs);
            assert!(lhs.error_bound < ctx.tolerance(25));
        }
        let tc = ClassicId::TylerChernoff.closed_form(&ctx).unwrap();
        assert!((tc.to_f64() - 0.144_729_885_849).abs() < 1e-11);
        assert_eq!(ClassicId::parse("log2").unwrap(), ClassicId::Log2);
        assert!(ClassicId::parse("nope").is_err());
    }

    #[test]
    fn quadrature_cross_check() {
        let ctx = make_context(30).unwrap();
        let q = tyler_chernoff_by_quadrature(&ctx).unwrap();
        let rhs = ClassicId::TylerChernoff.closed_form(&ctx).unwrap();
        assert!((&q.value - &rhs).abs() < ctx.tolerance(25));
    }

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let ctx = make_context(30).unwrap();
        let rule = gauss_legendre(5, &ctx).unwrap();
        // ∫ x^8 = 2/9, exact for a 5-point rule
        let v: ExtReal = rule.iter().map(|(x, w)| w * &x.powi(8).unwrap()).sum();
        assert!((v - ctx.rational(&r(2, 9))).abs() < ctx.tolerance(35));
    }
}
