//! Rational numbers and the small amount of elementary number theory the
//! rest of the crate leans on.

use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Q = num_rational::BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`; the result is reduced.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => Some(Q::from_integer(BigInt::from_str(s).ok()?)),
    }
}

/// Always `"p/q"`, denominator positive, even for integers.
pub fn format_q(x: &Q) -> String {
    alloc::format!("{}/{}", x.numer(), x.denom())
}

pub fn is_positive(x: &Q) -> bool {
    x.is_positive()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorization as (prime, exponent) pairs in increasing order.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
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

pub fn primes_of(n: u64) -> Vec<u64> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factor(n) == [(n, 1)]
}

pub fn euler_phi(n: u64) -> u64 {
    factor(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn squarefree_part(n: u64) -> u64 {
    factor(n)
        .into_iter()
        .filter(|&(_, e)| e % 2 == 1)
        .map(|(p, _)| p)
        .product()
}

/// Returns the largest `k` with `p^k | n` and the cofactor.
pub fn valuation(x: &BigInt, p: u64) -> (u32, BigInt) {
    let p = BigInt::from(p);
    let mut x = x.clone();
    let mut k = 0;
    if x.is_zero() {
        return (0, x);
    }
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return (k, x);
        }
        x = q;
        k += 1;
    }
}

/// Whether `a` is a nonzero square modulo the odd prime `p`.
pub fn is_square_mod(a: u64, p: u64) -> bool {
    let a = a % p;
    a != 0 && (1..p).any(|x| x * x % p == a)
}

pub fn least_nonresidue(p: u64) -> u64 {
    (2..p).find(|&c| !is_square_mod(c, p)).unwrap_or(1)
}

/// Modular inverse of `a` modulo `m` (assumes `gcd(a, m) = 1`).
pub fn inv_mod(a: i64, m: i64) -> i64 {
    let g = a.rem_euclid(m).extended_gcd(&m);
    g.x.rem_euclid(m)
}

pub fn pow_q(x: &Q, mut e: u32) -> Q {
    let mut base = x.clone();
    let mut acc = Q::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}
