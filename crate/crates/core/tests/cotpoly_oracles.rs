use std::collections::BTreeMap;

use rug::{Integer, Rational};
use zetakit::cotpoly::{cot_derivative, cot_poly};
use zetakit::{make_context, ExtReal};

/// Differentiates `Σ c_i cos^i x · sin^-i x` term by term with
/// `d(cos^i sin^k) = -i cos^(i-1) sin^(k+1) + k cos^(i+1) sin^(k-1)`.
/// Every monomial keeps total degree zero, so it is `cot^i x`; the map
/// stores `i → c_i`.
fn symbolic_cot_derivative(n: usize) -> BTreeMap<usize, Integer> {
    let mut terms = BTreeMap::from([(1usize, Integer::from(1))]);
    for _ in 0..n {
        let mut next: BTreeMap<usize, Integer> = BTreeMap::new();
        for (&i, c) in &terms {
            let k = -(i as i64);
            if i > 0 {
                *next.entry(i - 1).or_default() -= Integer::from(i) * c;
            }
            *next.entry(i + 1).or_default() += Integer::from(k) * c;
        }
        next.retain(|_, c| *c != 0);
        terms = next;
    }
    terms
}

#[test]
fn matches_symbolic_differentiation() {
    for n in 0..=6 {
        let oracle = symbolic_cot_derivative(n);
        let p = cot_poly(n);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        for k in 0..=n + 1 {
            let expected = oracle.get(&k).cloned().unwrap_or_default();
            assert_eq!(p.coefficient(k) * sign, expected, "n = {n}, power {k}");
        }
    }
}

/// `Δ_h^n f(x) / h^n` with central nodes `x + (n/2 − j)h`.
fn central_difference(n: usize, x: &Rational, h: &Rational, f: impl Fn(&Rational) -> ExtReal) -> ExtReal {
    let mut acc: Option<ExtReal> = None;
    for j in 0..=n {
        let offset = Rational::from((n as i64 - 2 * j as i64, 2)) * h;
        let point = Rational::from(x + &offset);
        let weight = Integer::from(Integer::binomial_u(n as u32, j as u32));
        let weight = if j % 2 == 0 { weight } else { -weight };
        let term = f(&point).mul_integer(&weight);
        acc = Some(match acc {
            Some(a) => a + term,
            None => term,
        });
    }
    let scale = Rational::from(h.clone().recip_ref()).clone();
    let mut value = acc.expect("at least one node");
    for _ in 0..n {
        value = value.mul_rational(&scale);
    }
    value
}

#[test]
fn matches_finite_differences() {
    let ctx = make_context(120).unwrap();
    let h = Rational::from((1, 100_000_000));
    let pi = ctx.pi();
    let f = |t: &Rational| (&pi * &ctx.rational(t)).cot().unwrap();
    for x in [Rational::from((1, 5)), Rational::from((3, 10)), Rational::from((9, 20))] {
        for n in 0..=6 {
            let exact = cot_derivative(n, &ctx.rational(&x), &ctx).unwrap();
            let approx = central_difference(n, &x, &h, f);
            let rel = ((&exact - &approx).abs()).checked_div(&exact.abs().max(ctx.one())).unwrap();
            assert!(rel < ctx.tolerance(12), "n = {n}, x = {x}: {exact:?} vs {approx:?}");
        }
    }
}

#[test]
fn structure_up_to_twenty() {
    for n in 0..=20usize {
        let p = cot_poly(n);
        assert_eq!(p.degree(), n + 1);
        assert_eq!(p.leading_coefficient(), Integer::from(Integer::factorial(n as u32)));
        for (k, c) in p.coefficients().iter().enumerate() {
            if (k + n) % 2 == 0 {
                assert_eq!(*c, 0, "P_{n} has wrong parity at x^{k}");
            } else {
                assert!(*c > 0, "P_{n} has a non-positive coefficient at x^{k}");
            }
        }
    }
}
