//! Every certified result must contain the value recomputed at doubled
//! precision, which also pushes every truncation point further out.

use rug::Rational;
use zetakit::series::{
    binom_series_direct, classic_identity, cot_expansion, default_target, BinomSeriesQuery, ClassicId,
};
use zetakit::special::{alt_hurwitz_zeta, dirichlet_beta, hurwitz_zeta, riemann_zeta};
use zetakit::{make_context, NumericContext, Result, SeriesResult};

fn assert_honest(what: &str, f: impl Fn(&NumericContext) -> Result<SeriesResult>) {
    let ctx = make_context(30).unwrap();
    let coarse = f(&ctx).unwrap();
    let fine = f(&ctx.doubled()).unwrap();
    let diff = (&coarse.value - &fine.value).abs();
    assert!(
        diff <= coarse.error_bound,
        "{what}: moved by {diff:?}, bound {:?}",
        coarse.error_bound
    );
    assert!(fine.error_bound < coarse.error_bound, "{what}: bound did not shrink");
}

#[test]
fn direct_series() {
    for (p, q, m) in [(1, 6, 1), (1, 2, 5), (3, 4, 8), (9, 10, 12), (7, 8, 2)] {
        let a = Rational::from((p, q));
        assert_honest(&format!("direct a={p}/{q} m={m}"), |ctx| {
            let query = BinomSeriesQuery::new(a.clone(), m)?;
            binom_series_direct(&query, &default_target(ctx), ctx)
        });
    }
}

#[test]
fn direct_series_truncation_grows() {
    let ctx = make_context(30).unwrap();
    let query = BinomSeriesQuery::new(Rational::from((2, 3)), 4).unwrap();
    let coarse = binom_series_direct(&query, &default_target(&ctx), &ctx).unwrap();
    let fine = binom_series_direct(&query, &default_target(&ctx.doubled()), &ctx.doubled()).unwrap();
    assert!(2 * fine.terms_used >= 3 * coarse.terms_used);
}

#[test]
fn zeta_family() {
    for s in [2, 3, 7, 20] {
        assert_honest(&format!("zeta({s})"), |ctx| riemann_zeta(&ctx.int(s), ctx));
        assert_honest(&format!("beta({s})"), |ctx| dirichlet_beta(&ctx.int(s), ctx));
    }
    assert_honest("beta(1)", |ctx| dirichlet_beta(&ctx.one(), ctx));
    for (p, q) in [(1, 7), (1, 2), (5, 6)] {
        let a = Rational::from((p, q));
        assert_honest("hurwitz", |ctx| hurwitz_zeta(&ctx.int(3), &a, ctx));
        assert_honest("alternating", |ctx| alt_hurwitz_zeta(&ctx.int(2), &a, ctx));
        assert_honest("alternating s=1", |ctx| alt_hurwitz_zeta(&ctx.one(), &a, ctx));
    }
}

#[test]
fn classical_sums() {
    for id in ClassicId::ALL {
        assert_honest(id.name(), |ctx| classic_identity(id, ctx));
    }
    for (p, q) in [(1, 2), (1, 4), (7, 8), (1, 64)] {
        let x = Rational::from((p, q));
        assert_honest("cot expansion", |ctx| Ok(cot_expansion(&x, ctx)?.0));
        assert_honest("log-sine expansion", |ctx| Ok(cot_expansion(&x, ctx)?.1));
    }
}
