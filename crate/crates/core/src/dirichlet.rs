//! Dirichlet characters modulo `q`, their L-functions and the
//! decomposition `ζ(s, p/q) = q^s/φ(q) · Σ_χ χ̄(p) L(s, χ)`.
//!
//! Characters are kept exact: `χ(n)` is stored as an exponent `e` with
//! `χ(n) = ω^e`, `ω = exp(2πi/φ(q))`, and only turned into floating
//! complex numbers when an L-value is evaluated. The unit group is split
//! into cyclic factors (a primitive root for each odd prime power, `{-1, 5}`
//! for `2^k`, `k ≥ 3`) glued together by the Chinese remainder theorem.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use rug::Rational;

use crate::cotpoly::IntPolynomial;
use crate::error::{Error, Result};
use crate::numeric::{ExtComplex, ExtReal, NumericContext};
use crate::series_result::{SeriesResult, ULPS_PER_TERM};
use crate::special::{hurwitz_zeta, rational_neg_pow};

pub const MAX_MODULUS: u64 = 1000;
/// Largest prime bound accepted by [`euler_product_check`].
pub const MAX_PRIME_BOUND: u64 = 10_000_000;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    a * b % m
}

fn multiplicative_order(g: u64, m: u64) -> u64 {
    let mut x = g % m;
    let mut k = 1;
    while x != 1 % m {
        x = mul_mod(x, g, m);
        k += 1;
    }
    k
}

/// Least primitive root modulo an odd prime power.
fn least_primitive_root(prime_power: u64, phi: u64) -> u64 {
    (2..prime_power)
        .find(|&g| gcd(g, prime_power) == 1 && multiplicative_order(g, prime_power) == phi)
        .expect("odd prime powers have primitive roots")
}

/// `x ≡ r (mod m)`, `x ≡ 1 (mod q/m)`.
fn crt_lift(r: u64, m: u64, q: u64) -> u64 {
    let rest = q / m;
    (0..m)
        .map(|k| 1 + k * rest)
        .find(|x| x % m == r % m)
        .expect("coprime moduli")
        % q
}

/// A generator of one cyclic factor of `(Z/qZ)^*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicFactor {
    pub generator: u64,
    pub order: u64,
}

/// Structure of `(Z/qZ)^*` and discrete logarithms with respect to it.
#[derive(Debug)]
struct UnitGroup {
    modulus: u64,
    phi: u64,
    factors: Vec<CyclicFactor>,
    /// residue → exponent vector; `None` for non-units.
    logs: Vec<Option<Vec<u64>>>,
}

impl UnitGroup {
    fn new(q: u64) -> Self {
        let phi = euler_phi(q);
        let mut factors = Vec::new();
        for (p, e) in factorize(q) {
            let pe = p.pow(e);
            let local: Vec<(u64, u64)> = if p == 2 {
                match e {
                    1 => vec![],
                    2 => vec![(3, 2)],
                    _ => vec![(pe - 1, 2), (5, pe / 8 * 2)],
                }
            } else {
                let local_phi = pe / p * (p - 1);
                vec![(least_primitive_root(pe, local_phi), local_phi)]
            };
            for (g, order) in local {
                factors.push(CyclicFactor {
                    generator: crt_lift(g, pe, q),
                    order,
                });
            }
        }

        let mut logs = vec![None; q as usize];
        let mut exps = vec![0u64; factors.len()];
        loop {
            let residue = factors
                .iter()
                .zip(&exps)
                .fold(1 % q, |acc, (f, &k)| {
                    (0..k).fold(acc, |x, _| mul_mod(x, f.generator, q))
                });
            debug_assert!(logs[residue as usize].is_none(), "generators are independent");
            logs[residue as usize] = Some(exps.clone());
            // odometer over the exponent box
            let mut i = 0;
            loop {
                if i == exps.len() {
                    return Self {
                        modulus: q,
                        phi,
                        factors,
                        logs,
                    };
                }
                exps[i] += 1;
                if exps[i] < factors[i].order {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }
}

/// One Dirichlet character modulo `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    phi: u64,
    factors: Arc<Vec<CyclicFactor>>,
    /// `χ(g_i) = exp(2πi · exponents[i] / order_i)`.
    exponents: Vec<u64>,
    /// residue → exponent of `ω = exp(2πi/φ)`, `None` for non-units.
    table: Vec<Option<u64>>,
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn phi(&self) -> u64 {
        self.phi
    }

    pub fn generators(&self) -> &[CyclicFactor] {
        &self.factors
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    fn residue(&self, n: i64) -> usize {
        n.rem_euclid(self.modulus as i64) as usize
    }

    /// `e` with `χ(n) = ω^e`, or `None` when `gcd(n, q) > 1`.
    pub fn value_exponent(&self, n: i64) -> Option<u64> {
        self.table[self.residue(n)]
    }

    /// `χ(n)` as a reduced fraction `num/den` of a full turn.
    pub fn value_fraction(&self, n: i64) -> Option<(u64, u64)> {
        self.value_exponent(n).map(|e| {
            let g = gcd(e, self.phi);
            (e / g, self.phi / g)
        })
    }

    pub fn value(&self, n: i64, ctx: &NumericContext) -> ExtComplex {
        match self.value_exponent(n) {
            Some(e) => ExtComplex::root_of_unity(e, self.phi, ctx),
            None => ExtComplex::zero(ctx),
        }
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// `χ(-1) = -1`.
    pub fn is_odd(&self) -> bool {
        self.value_exponent(-1).is_some_and(|e| 2 * e == self.phi)
    }

    pub fn conj(&self) -> DirichletCharacter {
        let neg = |e: u64, m: u64| (m - e % m) % m;
        DirichletCharacter {
            modulus: self.modulus,
            phi: self.phi,
            factors: Arc::clone(&self.factors),
            exponents: self
                .exponents
                .iter()
                .zip(self.factors.iter())
                .map(|(&e, f)| neg(e, f.order))
                .collect(),
            table: self.table.iter().map(|v| v.map(|e| neg(e, self.phi))).collect(),
        }
    }

    /// `Σ_{n mod q} χ(n) ψ̄(n)` computed exactly in `Z[ω]`, returned as the
    /// canonical representative modulo the cyclotomic polynomial `Φ_φ`.
    pub fn inner_product(&self, other: &DirichletCharacter) -> IntPolynomial {
        assert_eq!(self.modulus, other.modulus, "characters of different moduli");
        let phi = self.phi;
        let mut counts = vec![0i64; phi as usize];
        for (a, b) in self.table.iter().zip(&other.table) {
            if let (Some(a), Some(b)) = (a, b) {
                counts[((a + phi - b) % phi) as usize] += 1;
            }
        }
        IntPolynomial::from_i64(&counts)
            .div_rem_monic(&cyclotomic(phi))
            .1
    }
}

/// All characters modulo `q`.
#[derive(Clone, Debug)]
pub struct CharacterGroup {
    pub modulus: u64,
    pub phi: u64,
    pub generators: Vec<CyclicFactor>,
    pub characters: Vec<DirichletCharacter>,
}

impl CharacterGroup {
    pub fn principal(&self) -> &DirichletCharacter {
        &self.characters[0]
    }
}

/// Enumerates the `φ(q)` characters modulo `q`; the principal character
/// comes first.
pub fn characters_mod(q: i64) -> Result<CharacterGroup> {
    if q <= 0 {
        return Err(Error::domain(format!("modulus must be positive (got {q})")));
    }
    let q = q as u64;
    if q > MAX_MODULUS {
        return Err(Error::domain(format!("modulus {q} exceeds the supported maximum {MAX_MODULUS}")));
    }
    let group = UnitGroup::new(q);
    let factors = Arc::new(group.factors.clone());
    let phi = group.phi;

    let mut characters = Vec::with_capacity(phi as usize);
    let mut exps = vec![0u64; factors.len()];
    loop {
        let table = group
            .logs
            .iter()
            .map(|log| {
                log.as_ref().map(|log| {
                    log.iter()
                        .zip(&exps)
                        .zip(factors.iter())
                        .map(|((&n, &c), f)| n * c % f.order * (phi / f.order))
                        .sum::<u64>()
                        % phi
                })
            })
            .collect();
        characters.push(DirichletCharacter {
            modulus: q,
            phi,
            factors: Arc::clone(&factors),
            exponents: exps.clone(),
            table,
        });
        let mut i = 0;
        loop {
            if i == exps.len() {
                return Ok(CharacterGroup {
                    modulus: group.modulus,
                    phi,
                    generators: group.factors,
                    characters,
                });
            }
            exps[i] += 1;
            if exps[i] < factors[i].order {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

static CYCLOTOMIC: Mutex<BTreeMap<u64, IntPolynomial>> = Mutex::new(BTreeMap::new());

/// The cyclotomic polynomial `Φ_n`.
pub fn cyclotomic(n: u64) -> IntPolynomial {
    assert!(n >= 1);
    if let Some(p) = CYCLOTOMIC.lock().expect("cyclotomic cache poisoned").get(&n) {
        return p.clone();
    }
    // Φ_n = (x^n − 1) / Π_{d | n, d < n} Φ_d
    let mut numerator = IntPolynomial::monomial(n as usize).sub(&IntPolynomial::monomial(0));
    for d in (1..n).filter(|d| n % d == 0) {
        let (q, r) = numerator.div_rem_monic(&cyclotomic(d));
        debug_assert!(r.is_zero());
        numerator = q;
    }
    CYCLOTOMIC
        .lock()
        .expect("cyclotomic cache poisoned")
        .insert(n, numerator.clone());
    numerator
}

/// A complex value with an absolute error bound on each component.
#[derive(Clone, Debug)]
pub struct ComplexResult {
    pub value: ExtComplex,
    pub error_bound: ExtReal,
    pub terms_used: usize,
}

/// `ζ(s; r/q)` for every unit `r` modulo `q`.
#[derive(Clone, Debug)]
pub struct HurwitzTable {
    modulus: u64,
    s: ExtReal,
    values: Vec<Option<SeriesResult>>,
}

impl HurwitzTable {
    pub fn new(s: &ExtReal, q: u64, ctx: &NumericContext) -> Result<Self> {
        if *s <= 1 {
            return Err(Error::domain("L-functions are evaluated for s > 1"));
        }
        let values = (0..q)
            .map(|r| {
                let r = if r == 0 { q } else { r };
                if gcd(r, q) == 1 {
                    hurwitz_zeta(s, &Rational::from((r, q)), ctx).map(Some)
                } else {
                    Ok(None)
                }
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            modulus: q,
            s: s.clone(),
            values,
        })
    }

    pub fn get(&self, r: u64) -> Option<&SeriesResult> {
        self.values[(r % self.modulus) as usize].as_ref()
    }
}

/// `L(s, χ) = q^{-s} Σ_{r=1}^{q} χ(r) ζ(s; r/q)`.
pub fn l_function(s: &ExtReal, chi: &DirichletCharacter, ctx: &NumericContext) -> Result<ComplexResult> {
    let table = HurwitzTable::new(s, chi.modulus(), ctx)?;
    l_function_from_table(&table, chi, ctx)
}

pub fn l_function_from_table(
    table: &HurwitzTable,
    chi: &DirichletCharacter,
    ctx: &NumericContext,
) -> Result<ComplexResult> {
    assert_eq!(table.modulus, chi.modulus(), "table and character moduli differ");
    let q = chi.modulus();
    let mut sum = ExtComplex::zero(ctx);
    let mut bound = ctx.zero();
    let mut magnitude = ctx.zero();
    let mut terms = 0;
    for r in 1..=q {
        let Some(h) = table.get(r) else { continue };
        let term = chi.value(r as i64, ctx).scale(&h.value);
        sum = &sum + &term;
        bound = bound + &h.error_bound;
        magnitude = magnitude.max(h.value.abs());
        terms += h.terms_used;
    }
    let scale = rational_neg_pow(&Rational::from(q), &table.s, ctx)?;
    let value = sum.scale(&scale);
    let rounding = magnitude.ulp().mul_int(ULPS_PER_TERM * 2 * q as i64);
    let error_bound = (bound + rounding) * &scale;
    Ok(ComplexResult {
        value,
        error_bound,
        terms_used: terms,
    })
}

/// `q^s/φ(q) · Σ_χ χ̄(p) L(s, χ)`, which should reproduce `ζ(s; p/q)` with a
/// vanishing imaginary part.
pub fn hurwitz_from_characters(s: &ExtReal, p: i64, q: i64, ctx: &NumericContext) -> Result<ComplexResult> {
    if q <= 0 || p <= 0 || p >= q {
        return Err(Error::domain(format!("need 0 < p < q (got p = {p}, q = {q})")));
    }
    if gcd(p as u64, q as u64) != 1 {
        return Err(Error::domain(format!("need gcd(p, q) = 1 (got p = {p}, q = {q})")));
    }
    let group = characters_mod(q)?;
    let table = HurwitzTable::new(s, q as u64, ctx)?;
    let mut sum = ExtComplex::zero(ctx);
    let mut bound = ctx.zero();
    let mut magnitude = ctx.zero();
    let mut terms = 0;
    for chi in &group.characters {
        let l = l_function_from_table(&table, chi, ctx)?;
        let term = &chi.value(p, ctx).conj() * &l.value;
        magnitude = magnitude.max(l.value.abs());
        sum = &sum + &term;
        bound = bound + &l.error_bound;
        terms += l.terms_used;
    }
    let q_pow = rational_neg_pow(&Rational::from(q), s, ctx)?.recip()?;
    let scale = q_pow.div_int(group.phi as i64);
    let value = sum.scale(&scale);
    let rounding = magnitude.ulp().mul_int(ULPS_PER_TERM * 4 * group.phi as i64);
    Ok(ComplexResult {
        value,
        error_bound: (bound + rounding) * scale,
        terms_used: terms,
    })
}

/// Truncated Euler product together with its certified distance to
/// `L(s, χ)`.
#[derive(Clone, Debug)]
pub struct EulerProduct {
    pub value: ExtComplex,
    /// `Σ_{n > bound} n^{-s} ≤ B^{1-s}/(s-1)`, plus rounding.
    pub truncation_bound: ExtReal,
    pub primes_used: usize,
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
    }
    primes
}

/// `Π_{p ≤ B} (1 − χ(p) p^{-s})^{-1}`.
pub fn euler_product_check(
    s: &ExtReal,
    chi: &DirichletCharacter,
    prime_bound: u64,
    ctx: &NumericContext,
) -> Result<EulerProduct> {
    if *s <= 1 {
        return Err(Error::domain("the Euler product converges for s > 1"));
    }
    if prime_bound < 2 {
        return Err(Error::domain("prime bound must be at least 2"));
    }
    if prime_bound > MAX_PRIME_BOUND {
        return Err(Error::domain(format!("prime bound exceeds {MAX_PRIME_BOUND}")));
    }
    let roots: Vec<ExtComplex> = (0..chi.phi())
        .map(|e| ExtComplex::root_of_unity(e, chi.phi(), ctx))
        .collect();
    let one = ExtComplex::from_real(ctx.one(), ctx);
    let mut product = one.clone();
    let mut used = 0;
    for p in primes_up_to(prime_bound) {
        let Some(e) = chi.value_exponent(p as i64) else { continue };
        let p_neg_s = rational_neg_pow(&Rational::from(p), s, ctx)?;
        let factor = (&one - &roots[e as usize].scale(&p_neg_s)).recip()?;
        product = &product * &factor;
        used += 1;
    }
    let b = ctx.int(prime_bound as i64);
    let tail = (&b * &rational_neg_pow(&Rational::from(prime_bound), s, ctx)?)
        .checked_div(&(s - &ctx.one()))?;
    let rounding = product.abs().ulp().mul_int(ULPS_PER_TERM * 4 * used.max(1) as i64);
    Ok(EulerProduct {
        value: product,
        truncation_bound: tail + rounding,
        primes_used: used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::make_context;
    use crate::special::{dirichlet_beta, riemann_zeta};

    #[test]
    fn phi_and_factorization() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(997), 996);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
    }

    #[test]
    fn mod_four() {
        let g = characters_mod(4).unwrap();
        assert_eq!(g.characters.len(), 2);
        assert!(g.principal().is_principal());
        let odd = &g.characters[1];
        assert!(odd.is_odd());
        assert_eq!(odd.value_fraction(3), Some((1, 2)));
        assert_eq!(odd.value_exponent(2), None);
    }

    #[test]
    fn mod_eight_is_klein_four() {
        let g = characters_mod(8).unwrap();
        assert_eq!(g.characters.len(), 4);
        for chi in &g.characters {
            for n in [1, 3, 5, 7] {
                let (_, den) = chi.value_fraction(n).unwrap();
                assert!(den <= 2);
            }
        }
    }

    #[test]
    fn mod_five_quartic() {
        let g = characters_mod(5).unwrap();
        assert_eq!(g.generators, vec![CyclicFactor { generator: 2, order: 4 }]);
        let dens: Vec<u64> = g
            .characters
            .iter()
            .map(|c| c.value_fraction(2).unwrap().1)
            .collect();
        assert_eq!(dens, vec![1, 4, 2, 4]);
    }

    #[test]
    fn rejects_bad_modulus() {
        assert!(characters_mod(0).is_err());
        assert!(characters_mod(-3).is_err());
        assert!(characters_mod(1001).is_err());
        assert_eq!(characters_mod(1).unwrap().characters.len(), 1);
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(4), IntPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), IntPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPolynomial::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn conj_inverts_values() {
        let g = characters_mod(7).unwrap();
        for chi in &g.characters {
            let c = chi.conj();
            for n in 1..7 {
                let (a, b) = (chi.value_exponent(n).unwrap(), c.value_exponent(n).unwrap());
                assert_eq!((a + b) % chi.phi(), 0);
            }
        }
    }

    #[test]
    fn l_values() {
        let ctx = make_context(30).unwrap();
        let two = ctx.int(2);
        let odd4 = characters_mod(4).unwrap().characters[1].clone();
        let l = l_function(&two, &odd4, &ctx).unwrap();
        assert!((&l.value.re - &ctx.catalan()).abs() <= l.error_bound);
        assert!(l.value.im.abs() <= l.error_bound);

        let trivial = characters_mod(1).unwrap().characters[0].clone();
        let l = l_function(&ctx.int(3), &trivial, &ctx).unwrap();
        assert!(riemann_zeta(&ctx.int(3), &ctx).unwrap().contains(&l.value.re));

        let principal2 = characters_mod(2).unwrap().characters[0].clone();
        let l = l_function(&two, &principal2, &ctx).unwrap();
        let expected = ctx.pi().square().div_int(8);
        assert!((&l.value.re - &expected).abs() <= l.error_bound);
        assert!(l_function(&ctx.one(), &trivial, &ctx).is_err());

        let beta3 = dirichlet_beta(&ctx.int(3), &ctx).unwrap();
        let l = l_function(&ctx.int(3), &odd4, &ctx).unwrap();
        assert!((&l.value.re - &beta3.value).abs() <= &l.error_bound + &beta3.error_bound);
    }

    #[test]
    fn decomposition_small() {
        let ctx = make_context(30).unwrap();
        let v = hurwitz_from_characters(&ctx.int(2), 1, 2, &ctx).unwrap();
        let expected = ctx.pi().square().div_int(2);
        assert!((&v.value.re - &expected).abs() <= v.error_bound);
        assert!(hurwitz_from_characters(&ctx.int(2), 2, 4, &ctx).is_err());
        assert!(hurwitz_from_characters(&ctx.int(2), 5, 4, &ctx).is_err());
    }

    #[test]
    fn euler_product_single_factor() {
        let ctx = make_context(30).unwrap();
        let odd4 = characters_mod(4).unwrap().characters[1].clone();
        let e = euler_product_check(&ctx.int(2), &odd4, 2, &ctx).unwrap();
        // χ(2) = 0, so the product is empty
        assert_eq!(e.value.re, 1);
        let trivial = characters_mod(1).unwrap().characters[0].clone();
        let e = euler_product_check(&ctx.int(2), &trivial, 2, &ctx).unwrap();
        let expected = ctx.rational(&Rational::from((4, 3)));
        assert!((&e.value.re - &expected).abs() < ctx.tolerance(35));
        assert_eq!(e.primes_used, 1);
    }

    #[test]
    fn primes() {
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(primes_up_to(100_000).len(), 9592);
    }
}
