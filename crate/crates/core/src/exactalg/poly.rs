//! Dense univariate polynomials, coefficients stored lowest degree first.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::arith::divisors;
use super::field::Rational;

/// The `d`-th cyclotomic polynomial `Φ_d`, lowest degree coefficient first.
///
/// Built by dividing `x^d - 1` by `Φ_e` for every proper divisor `e` of `d`.
pub fn cyclotomic_polynomial(d: u64) -> Vec<BigInt> {
    assert!(d >= 1, "cyclotomic polynomial of order 0");
    let mut memo = BTreeMap::new();
    cyclotomic_memo(d, &mut memo)
}

fn cyclotomic_memo(d: u64, memo: &mut BTreeMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&d) {
        return p.clone();
    }
    let mut p = vec![BigInt::zero(); d as usize + 1];
    p[0] = -BigInt::one();
    p[d as usize] = BigInt::one();
    for e in divisors(d) {
        if e == d {
            continue;
        }
        let phi_e = cyclotomic_memo(e, memo);
        let (q, r) = divrem_monic(&p, &phi_e);
        debug_assert!(r.iter().all(Zero::is_zero));
        p = q;
    }
    memo.insert(d, p.clone());
    p
}

/// Long division by a monic integer polynomial.
fn divrem_monic(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return (vec![BigInt::zero()], rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for t in (dd..rem.len()).rev() {
        let c = std::mem::take(&mut rem[t]);
        if c.is_zero() {
            continue;
        }
        for (i, di) in den.iter().enumerate().take(dd) {
            rem[t - dd + i] -= &c * di;
        }
        quot[t - dd] = c;
    }
    rem.truncate(dd.max(1));
    (quot, rem)
}

pub(crate) fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn sub_scaled_shifted(a: &mut Vec<Rational>, b: &[Rational], c: &Rational, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, Rational::zero());
    }
    for (i, bi) in b.iter().enumerate() {
        a[i + shift] -= c * bi;
    }
}

fn divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    let lead = &den[dd];
    let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dd).max(1)];
    while rem.len() > dd {
        let t = rem.len() - 1;
        let c = &rem[t] / lead;
        sub_scaled_shifted(&mut rem, den, &c, t - dd);
        quot[t - dd] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo the irreducible polynomial `m`, by the extended
/// Euclidean algorithm. `a` must be nonzero modulo `m`.
pub(crate) fn invert_mod(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    // Invariant: s_i * a ≡ r_i (mod m).
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    assert!(!r1.is_empty(), "inverse of zero");
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while r1.len() > 1 {
        let (q, r) = divrem(&r0, &r1);
        let mut s2 = s0.clone();
        let qs1 = mul(&q, &s1);
        sub_scaled_shifted(&mut s2, &qs1, &Rational::one(), 0);
        trim(&mut s2);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        assert!(!r1.is_empty(), "polynomial not invertible modulo an irreducible");
    }
    let c = r1[0].clone();
    let mut inv: Vec<Rational> = s1.iter().map(|x| x / &c).collect();
    let (_, rem) = divrem(&inv, m);
    inv = rem;
    inv
}
