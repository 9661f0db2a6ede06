//! Named identity suites, each check evaluated at the working precision and
//! again at doubled precision.

use std::fmt;

use rayon::prelude::*;
use rug::{Float, Rational};

use crate::cotpoly::{
    hoffman_rhs_a, hoffman_rhs_b, hoffman_sum_a, hoffman_sum_b, AlternatingPoly, Normalization,
};
use crate::dirichlet::{characters_mod, euler_product_check, hurwitz_from_characters, l_function};
use crate::error::{Error, Result};
use crate::numeric::{ExtReal, NumericContext};
use crate::report::{decimal, decimal_bound, Report, Status};
use crate::series::{
    binom_series_closed, binom_series_direct, classic_identity, corollary_half, corollary_quarter,
    cot_expansion, default_target, tyler_chernoff_by_quadrature, BinomSeriesQuery, ClassicId,
};
use crate::series_result::{SeriesResult, ULPS_PER_TERM};
use crate::special::{dirichlet_beta, hurwitz_zeta, riemann_zeta};

pub const GRID_A: [(i64, i64); 10] = [
    (1, 6),
    (1, 5),
    (1, 4),
    (1, 3),
    (2, 5),
    (1, 2),
    (3, 5),
    (2, 3),
    (3, 4),
    (9, 10),
];
pub const GRID_M: std::ops::RangeInclusive<u32> = 1..=12;
pub const HOFFMAN_A: [(i64, i64); 8] = [(1, 6), (1, 5), (1, 4), (1, 3), (2, 5), (1, 2), (2, 3), (3, 4)];
pub const HOFFMAN_N: std::ops::RangeInclusive<usize> = 0..=10;
pub const DIRICHLET_Q: [i64; 8] = [2, 3, 4, 5, 7, 8, 9, 12];
pub const DIRICHLET_S: [i64; 3] = [2, 3, 4];
pub const EULER_PRIME_BOUND: u64 = 100_000;
/// Digits of slack between the working precision and the pass tolerance.
pub const TOLERANCE_MARGIN: u32 = 5;

/// `10^-(digits − 5)`.
pub fn suite_tolerance(ctx: &NumericContext) -> ExtReal {
    ctx.tolerance(ctx.decimal_digits().saturating_sub(TOLERANCE_MARGIN))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    /// Both sides agree within their bounds, and the bounds are below the
    /// suite tolerance.
    Agree,
    /// Both sides agree within their bounds, however large (truncated
    /// Euler products).
    AgreeWithinBound,
    /// The sides differ by more than their bounds and the tolerance; used
    /// for wrong variants of an identity.
    Reject,
}

type Evaluator = Box<dyn Fn(&NumericContext) -> Result<(SeriesResult, SeriesResult)> + Send + Sync>;

pub struct Check {
    pub query: String,
    pub expect: Expect,
    eval: Evaluator,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check")
            .field("query", &self.query)
            .field("expect", &self.expect)
            .finish_non_exhaustive()
    }
}

impl Check {
    pub fn new<F>(query: impl Into<String>, expect: Expect, eval: F) -> Self
    where
        F: Fn(&NumericContext) -> Result<(SeriesResult, SeriesResult)> + Send + Sync + 'static,
    {
        Self {
            query: query.into(),
            expect,
            eval: Box::new(eval),
        }
    }

    pub fn evaluate(&self, ctx: &NumericContext) -> Result<(SeriesResult, SeriesResult)> {
        (self.eval)(ctx)
    }

    pub fn run(&self, ctx: &NumericContext) -> Report {
        match self.outcome(ctx) {
            Ok(report) => report,
            Err(_) => Report::failure(&self.query, ctx.precision_bits()),
        }
    }

    fn outcome(&self, ctx: &NumericContext) -> Result<Report> {
        let (lhs, rhs) = self.evaluate(ctx)?;
        let (lhs2, rhs2) = self.evaluate(&ctx.doubled())?;
        let tol = suite_tolerance(ctx);
        let diff = &lhs.value - &rhs.value;
        let bound = &lhs.error_bound + &rhs.error_bound;
        let diff2 = (&lhs2.value - &rhs2.value).abs();
        let bound2 = &lhs2.error_bound + &rhs2.error_bound;
        let pass = match self.expect {
            Expect::Agree | Expect::AgreeWithinBound => {
                let tight = self.expect == Expect::AgreeWithinBound || bound <= tol;
                diff.abs() <= bound && diff2 <= bound2 && lhs.agrees_with(&lhs2) && rhs.agrees_with(&rhs2) && tight
            }
            Expect::Reject => {
                diff.abs() > bound && diff.abs() > tol && diff2 > bound2 && diff2 > tol
            }
        };
        Ok(Report {
            query: self.query.clone(),
            value: decimal(&diff),
            error_bound: decimal_bound(&bound),
            terms_used: lhs.terms_used + rhs.terms_used,
            precision_bits: ctx.precision_bits(),
            status: if pass { Status::Ok } else { Status::Mismatch },
            lhs: Some(decimal(&lhs.value)),
            rhs: Some(decimal(&rhs.value)),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    TheoremGrid,
    Hoffman,
    Corollaries,
    Classics,
    Dirichlet,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["theorem-grid", "hoffman", "corollaries", "classics", "dirichlet", "all"];

    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "theorem-grid" => Suite::TheoremGrid,
            "hoffman" => Suite::Hoffman,
            "corollaries" => Suite::Corollaries,
            "classics" => Suite::Classics,
            "dirichlet" => Suite::Dirichlet,
            "all" => Suite::All,
            _ => {
                return Err(Error::invalid(format!(
                    "unknown suite {name:?} (expected one of {})",
                    Self::NAMES.join(", ")
                )))
            }
        })
    }

    pub fn checks(self) -> Vec<Check> {
        match self {
            Suite::TheoremGrid => theorem_grid(),
            Suite::Hoffman => hoffman(),
            Suite::Corollaries => corollaries(),
            Suite::Classics => classics(),
            Suite::Dirichlet => dirichlet(),
            Suite::All => [
                Suite::TheoremGrid,
                Suite::Hoffman,
                Suite::Corollaries,
                Suite::Classics,
                Suite::Dirichlet,
            ]
            .into_iter()
            .flat_map(Suite::checks)
            .collect(),
        }
    }
}

/// Runs every check of a suite; the output order is the check order
/// whatever the number of workers.
pub fn run_suite(suite: Suite, ctx: &NumericContext, jobs: usize) -> Vec<Report> {
    run_checks(&suite.checks(), ctx, jobs)
}

pub fn run_checks(checks: &[Check], ctx: &NumericContext, jobs: usize) -> Vec<Report> {
    if jobs <= 1 {
        return checks.iter().map(|c| c.run(ctx)).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| checks.par_iter().map(|c| c.run(ctx)).collect()),
        Err(_) => checks.iter().map(|c| c.run(ctx)).collect(),
    }
}

fn ratio(p: i64, q: i64) -> Rational {
    Rational::from((p, q))
}

fn exact(value: ExtReal) -> SeriesResult {
    SeriesResult::rounded(value, 1, 0)
}

/// A closed form built from O(1) constants; cancellation can leave it much
/// smaller than its operands, so rounding is charged at unit scale.
fn constant(value: ExtReal) -> SeriesResult {
    let one = ExtReal::from_float(Float::with_val(value.precision_bits(), 1)).expect("one is finite");
    let bound = value.abs().max(one).ulp().mul_int(ULPS_PER_TERM);
    SeriesResult::new(value, bound, 0).expect("ulp is non-negative")
}

fn direct(a: &Rational, m: u32, ctx: &NumericContext) -> Result<SeriesResult> {
    binom_series_direct(&BinomSeriesQuery::new(a.clone(), m)?, &default_target(ctx), ctx)
}

fn closed(a: &Rational, m: u32, ctx: &NumericContext) -> Result<SeriesResult> {
    binom_series_closed(&BinomSeriesQuery::new(a.clone(), m)?, ctx)
}

fn theorem_grid() -> Vec<Check> {
    let mut checks = Vec::new();
    for (p, q) in GRID_A {
        for m in GRID_M {
            let a = ratio(p, q);
            checks.push(Check::new(format!("theorem a={p}/{q} m={m}"), Expect::Agree, move |ctx| {
                Ok((direct(&a, m, ctx)?, closed(&a, m, ctx)?))
            }));
        }
    }
    checks
}

fn hoffman() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in HOFFMAN_N {
        for (p, q) in HOFFMAN_A {
            let a = ratio(p, q);
            checks.push(Check::new(format!("hoffman-a n={n} a={p}/{q}"), Expect::Agree, move |ctx| {
                Ok((hoffman_sum_a(n, &a, ctx)?, hoffman_rhs_a(n, &a, Normalization::Factorial, ctx)?))
            }));
        }
    }
    for n in HOFFMAN_N {
        for (p, q) in HOFFMAN_A {
            let a = ratio(p, q);
            checks.push(Check::new(format!("hoffman-b n={n} a={p}/{q}"), Expect::Agree, move |ctx| {
                let rhs = hoffman_rhs_b(n, &a, AlternatingPoly::Cosecant, Normalization::Factorial, ctx)?;
                Ok((hoffman_sum_b(n, &a, ctx)?, rhs))
            }));
        }
    }
    // 0! = 1!, so the shifted normalization only separates from n = 1 on.
    let third = ratio(1, 3);
    let anchor = third.clone();
    checks.push(Check::new("hoffman-a (n+1)! n=0 a=1/3 coincides", Expect::Agree, move |ctx| {
        Ok((hoffman_sum_a(0, &anchor, ctx)?, hoffman_rhs_a(0, &anchor, Normalization::ShiftedFactorial, ctx)?))
    }));
    for n in 1..=*HOFFMAN_N.end() {
        let a = third.clone();
        checks.push(Check::new(format!("hoffman-a (n+1)! n={n} a=1/3 rejected"), Expect::Reject, move |ctx| {
            Ok((hoffman_sum_a(n, &a, ctx)?, hoffman_rhs_a(n, &a, Normalization::ShiftedFactorial, ctx)?))
        }));
    }
    for n in HOFFMAN_N {
        let a = third.clone();
        checks.push(Check::new(format!("hoffman-b with P_n n={n} a=1/3 rejected"), Expect::Reject, move |ctx| {
            let rhs = hoffman_rhs_b(n, &a, AlternatingPoly::Cotangent, Normalization::Factorial, ctx)?;
            Ok((hoffman_sum_b(n, &a, ctx)?, rhs))
        }));
    }
    checks
}

fn corollaries() -> Vec<Check> {
    let mut checks = Vec::new();
    let half = ratio(1, 2);
    let quarter = ratio(1, 4);
    for m in GRID_M {
        let a = half.clone();
        checks.push(Check::new(format!("corollary-half direct m={m}"), Expect::Agree, move |ctx| {
            Ok((direct(&a, m, ctx)?, corollary_half(m, ctx)?))
        }));
        let a = half.clone();
        checks.push(Check::new(format!("corollary-half closed m={m}"), Expect::Agree, move |ctx| {
            Ok((closed(&a, m, ctx)?, corollary_half(m, ctx)?))
        }));
    }
    for m in GRID_M {
        let a = quarter.clone();
        checks.push(Check::new(format!("corollary-quarter direct m={m}"), Expect::Agree, move |ctx| {
            Ok((direct(&a, m, ctx)?, corollary_quarter(m, ctx)?))
        }));
        let a = quarter.clone();
        checks.push(Check::new(format!("corollary-quarter closed m={m}"), Expect::Agree, move |ctx| {
            Ok((closed(&a, m, ctx)?, corollary_quarter(m, ctx)?))
        }));
    }
    checks.push(Check::new("corollary-quarter m=1 is 1-pi/4", Expect::Agree, |ctx| {
        let expected = ctx.one() - ctx.pi().div_int(4);
        Ok((corollary_quarter(1, ctx)?, constant(expected)))
    }));
    checks.push(Check::new("corollary-quarter m=3 is (1-pi^3/32)/3", Expect::Agree, |ctx| {
        let expected = (ctx.one() - ctx.pi().powi(3)?.div_int(32)).div_int(3);
        Ok((corollary_quarter(3, ctx)?, constant(expected)))
    }));
    checks.push(Check::new("beta(3) is pi^3/32", Expect::Agree, |ctx| {
        let beta = dirichlet_beta(&ctx.int(3), ctx)?;
        Ok((beta, constant(ctx.pi().powi(3)?.div_int(32))))
    }));
    for (p, q) in GRID_A {
        let a = ratio(p, q);
        checks.push(Check::new(format!("m=1 reduction a={p}/{q}"), Expect::Agree, move |ctx| {
            let angle = ctx.pi().mul_rational(&a);
            let expected = ctx.one() - &angle * &angle.cot()?;
            Ok((closed(&a, 1, ctx)?, constant(expected)))
        }));
    }
    checks
}

fn classics() -> Vec<Check> {
    let mut checks = Vec::new();
    checks.push(Check::new("sum zeta(2n)/4^n = 1/2", Expect::Agree, |ctx| {
        Ok((cot_expansion(&ratio(1, 2), ctx)?.0, exact(ctx.one().div_int(2))))
    }));
    checks.push(Check::new("sum zeta(2n)/16^n = (4-pi)/8", Expect::Agree, |ctx| {
        Ok((cot_expansion(&ratio(1, 4), ctx)?.0, constant((ctx.int(4) - ctx.pi()).div_int(8))))
    }));
    checks.push(Check::new("sum zeta(2n)/(n 4^n) = log pi - log 2", Expect::Agree, |ctx| {
        Ok((cot_expansion(&ratio(1, 2), ctx)?.1, constant(ctx.pi().ln()? - ctx.ln2())))
    }));
    checks.push(Check::new("sum zeta(2n)/(n 16^n) = log pi - 3/2 log 2", Expect::Agree, |ctx| {
        let expected = ctx.pi().ln()? - ctx.ln2().mul_rational(&ratio(3, 2));
        Ok((cot_expansion(&ratio(1, 4), ctx)?.1, constant(expected)))
    }));
    for id in [
        ClassicId::TylerChernoff,
        ClassicId::Goldbach,
        ClassicId::Log2,
        ClassicId::OneMinusGamma,
    ] {
        checks.push(Check::new(format!("classic {}", id.name()), Expect::Agree, move |ctx| {
            Ok((classic_identity(id, ctx)?, constant(id.closed_form(ctx)?)))
        }));
    }
    checks.push(Check::new("tyler_chernoff quadrature cross-check", Expect::Agree, |ctx| {
        Ok((tyler_chernoff_by_quadrature(ctx)?, classic_identity(ClassicId::TylerChernoff, ctx)?))
    }));
    checks
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exact orthogonality and multiplicativity of every character modulo `q`;
/// the left side counts violated relations.
fn character_relations(q: i64) -> Result<usize> {
    let group = characters_mod(q)?;
    let phi = group.phi as i64;
    let mut failures = 0;
    for (i, chi) in group.characters.iter().enumerate() {
        for (j, psi) in group.characters.iter().enumerate() {
            let inner = chi.inner_product(psi);
            let expected = if i == j { phi } else { 0 };
            let ok = if expected == 0 {
                inner.is_zero()
            } else {
                inner.degree() == 0 && inner.coefficient(0) == expected
            };
            failures += usize::from(!ok);
        }
        for m in 0..q {
            for n in 0..q {
                let product = match (chi.value_exponent(m), chi.value_exponent(n)) {
                    (Some(a), Some(b)) => Some((a + b) % group.phi),
                    _ => None,
                };
                failures += usize::from(product != chi.value_exponent(m * n));
            }
        }
    }
    Ok(failures)
}

fn real_part(value: &crate::dirichlet::ComplexResult) -> Result<SeriesResult> {
    SeriesResult::new(value.value.re.clone(), value.error_bound.clone(), value.terms_used)
}

fn imag_part(value: &crate::dirichlet::ComplexResult) -> Result<SeriesResult> {
    SeriesResult::new(value.value.im.clone(), value.error_bound.clone(), value.terms_used)
}

fn dirichlet() -> Vec<Check> {
    let mut checks = Vec::new();
    for q in DIRICHLET_Q {
        checks.push(Check::new(format!("characters q={q} exact relations"), Expect::Agree, move |ctx| {
            let failures = character_relations(q)?;
            Ok((exact(ctx.int(failures as i64)), exact(ctx.zero())))
        }));
    }
    for q in DIRICHLET_Q {
        for p in (1..q).filter(|&p| gcd(p, q) == 1) {
            for s in DIRICHLET_S {
                checks.push(Check::new(format!("decomposition s={s} p/q={p}/{q}"), Expect::Agree, move |ctx| {
                    let rebuilt = hurwitz_from_characters(&ctx.int(s), p, q, ctx)?;
                    let direct = hurwitz_zeta(&ctx.int(s), &ratio(p, q), ctx)?;
                    Ok((real_part(&rebuilt)?, direct))
                }));
                checks.push(Check::new(format!("decomposition s={s} p/q={p}/{q} imaginary"), Expect::Agree, move |ctx| {
                    let rebuilt = hurwitz_from_characters(&ctx.int(s), p, q, ctx)?;
                    Ok((imag_part(&rebuilt)?, exact(ctx.zero())))
                }));
            }
        }
    }
    checks.push(Check::new("L(2, chi_4) is Catalan", Expect::Agree, |ctx| {
        let chi = characters_mod(4)?.characters[1].clone();
        Ok((real_part(&l_function(&ctx.int(2), &chi, ctx)?)?, constant(ctx.catalan())))
    }));
    checks.push(Check::new("L(2, principal mod 2) is pi^2/8", Expect::Agree, |ctx| {
        let chi = characters_mod(2)?.characters[0].clone();
        Ok((real_part(&l_function(&ctx.int(2), &chi, ctx)?)?, constant(ctx.pi().square().div_int(8))))
    }));
    for (q, index, s) in [(1, 0, 2), (4, 1, 2), (3, 1, 2), (5, 2, 3)] {
        checks.push(Check::new(
            format!("euler product q={q} character={index} s={s} primes<=100000"),
            Expect::AgreeWithinBound,
            move |ctx| {
                let chi = characters_mod(q)?.characters[index].clone();
                let product = euler_product_check(&ctx.int(s), &chi, EULER_PRIME_BOUND, ctx)?;
                let reference = if q == 1 {
                    riemann_zeta(&ctx.int(s), ctx)?
                } else {
                    real_part(&l_function(&ctx.int(s), &chi, ctx)?)?
                };
                let lhs = SeriesResult::new(product.value.re, product.truncation_bound, product.primes_used)?;
                Ok((lhs, reference))
            },
        ));
    }
    checks
}
