//! Exact arithmetic in cyclotomic fields.
//!
//! An element of Q(ζ_n) is stored by its coefficients in the power basis
//! 1, ζ_n, ..., ζ_n^{φ(n)-1} of Q[x]/Φ_n(x), always at the smallest
//! conductor that contains it. Conductors are never ≡ 2 (mod 4), since
//! Q(ζ_{2k}) = Q(ζ_k) for odd k.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{euler_phi, format_q, gcd, inv_mod, lcm, primes_of, Q};
use crate::{Error, Result};

/// The root of unity e^{2πi r}, stored as a reduced fraction r in [0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootExp {
    num: u64,
    den: u64,
}

impl RootExp {
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let n = (num as i128).rem_euclid(den as i128) as u64;
        let g = gcd(n, den);
        if n == 0 {
            return RootExp { num: 0, den: 1 };
        }
        RootExp {
            num: n / g,
            den: den / g,
        }
    }

    pub const fn zero() -> Self {
        RootExp { num: 0, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Multiplicative order of the root of unity.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn scale(&self, k: i64) -> Self {
        let n = (self.num as i128 * k as i128).rem_euclid(self.den as i128);
        RootExp::new(n as i64, self.den)
    }

    /// Parses `"a/b"` (or an integer), reducing modulo 1.
    pub fn parse(s: &str) -> Option<Self> {
        let q = crate::rational::parse_q(s)?;
        Self::from_q(&q)
    }

    pub fn from_q(q: &Q) -> Option<Self> {
        let den: u64 = q.denom().try_into().ok()?;
        let num = q.numer().mod_floor_u64(den)?;
        Some(RootExp::new(num as i64, den))
    }

    pub fn to_q(&self) -> Q {
        Q::new(BigInt::from(self.num), BigInt::from(self.den))
    }
}

trait ModFloor {
    fn mod_floor_u64(&self, m: u64) -> Option<u64>;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, m: u64) -> Option<u64> {
        use num_integer::Integer;
        self.mod_floor(&BigInt::from(m)).try_into().ok()
    }
}

impl fmt::Display for RootExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Add for RootExp {
    type Output = RootExp;
    fn add(self, o: RootExp) -> RootExp {
        let den = lcm(self.den, o.den);
        let n = self.num * (den / self.den) + o.num * (den / o.den);
        RootExp::new((n % den) as i64, den)
    }
}

impl Neg for RootExp {
    type Output = RootExp;
    fn neg(self) -> RootExp {
        RootExp::new(-(self.num as i64), self.den)
    }
}

impl Sub for RootExp {
    type Output = RootExp;
    fn sub(self, o: RootExp) -> RootExp {
        self + (-o)
    }
}

pub(crate) fn normal_conductor(n: u64) -> u64 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

// Φ_n via the Möbius product of x^d - 1, with integer coefficients.
fn cyclotomic_poly(n: u64) -> Vec<i64> {
    let mut num: Vec<i64> = vec![1];
    let mut dens: Vec<u64> = Vec::new();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        match mobius(n / d) {
            1 => {
                let mut out = vec![0i64; num.len() + d as usize];
                for (i, &c) in num.iter().enumerate() {
                    out[i + d as usize] += c;
                    out[i] -= c;
                }
                num = out;
            }
            -1 => dens.push(d),
            _ => {}
        }
    }
    for d in dens {
        // exact division by x^d - 1
        let d = d as usize;
        let deg = num.len() - 1;
        let mut q = vec![0i64; deg + 1 - d];
        let mut r = num.clone();
        for k in (d..=deg).rev() {
            let c = r[k];
            q[k - d] = c;
            r[k] -= c;
            r[k - d] += c;
        }
        num = q;
    }
    num
}

fn mobius(n: u64) -> i32 {
    let f = crate::rational::factor(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Q(ζ_n) with its reduction tables. Building one costs O(n·φ(n)).
#[derive(Clone, Debug)]
pub(crate) struct Field {
    n: u64,
    phi: usize,
    cyclo: Vec<i64>,
    powers: Vec<Vec<i64>>,
}

pub(crate) type Raw = Vec<Q>;
pub(crate) type ZRaw = Vec<i64>;

impl Field {
    pub fn new(n: u64) -> Self {
        let n = normal_conductor(n.max(1));
        let cyclo = cyclotomic_poly(n);
        let phi = cyclo.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        if phi == 1 {
            // Q: ζ_1 = 1
            cur[0] = 1;
        }
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
            for j in 0..phi {
                next[j] -= top * cyclo[j];
            }
            cur = next;
        }
        Field {
            n,
            phi,
            cyclo,
            powers,
        }
    }

    pub fn zero(&self) -> Raw {
        vec![Q::zero(); self.phi]
    }

    pub fn one(&self) -> Raw {
        let mut v = self.zero();
        v[0] = Q::one();
        v
    }

    pub fn is_zero(a: &Raw) -> bool {
        a.iter().all(Zero::is_zero)
    }

    fn add_power(&self, out: &mut Raw, e: u64, c: &Q) {
        for (o, &p) in out.iter_mut().zip(&self.powers[(e % self.n) as usize]) {
            match p {
                0 => {}
                1 => *o += c,
                -1 => *o -= c,
                _ => *o += c * Q::from_integer(BigInt::from(p)),
            }
        }
    }

    /// Σ c_e ζ_N^e for exponents modulo `big_n`, where the normalized
    /// conductor of `big_n` divides this field's conductor.
    pub fn from_exponents<'a, I>(&self, big_n: u64, terms: I) -> Raw
    where
        I: IntoIterator<Item = (u64, &'a Q)>,
    {
        let mut out = self.zero();
        let (m, fold) = if big_n % 4 == 2 {
            (big_n / 2, true)
        } else {
            (big_n, false)
        };
        assert!(self.n % m == 0, "exponent base {big_n} not in Q(ζ_{})", self.n);
        let step = self.n / m;
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let e = e % big_n;
            if fold {
                // ζ_{2m}^e = (-1)^e ζ_m^{e(m+1)/2}
                let e2 = (e * ((m + 1) / 2)) % m;
                if e % 2 == 1 {
                    self.add_power(&mut out, e2 * step, &-c);
                } else {
                    self.add_power(&mut out, e2 * step, c);
                }
            } else {
                self.add_power(&mut out, e * step, c);
            }
        }
        out
    }

    pub fn root(&self, r: RootExp) -> Raw {
        let one = Q::one();
        self.from_exponents(r.den(), [(r.num(), &one)])
    }

    /// Embeds an element of a subfield.
    pub fn embed(&self, sub: &Field, a: &Raw) -> Raw {
        if sub.n == self.n {
            return a.clone();
        }
        self.from_exponents(sub.n, a.iter().enumerate().map(|(j, c)| (j as u64, c)))
    }

    pub fn add(&self, a: &Raw, b: &Raw) -> Raw {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &Raw, b: &Raw) -> Raw {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(&self, a: &Raw, q: &Q) -> Raw {
        a.iter().map(|x| x * q).collect()
    }

    pub fn mul(&self, a: &Raw, b: &Raw) -> Raw {
        let phi = self.phi;
        let mut prod = vec![Q::zero(); 2 * phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    fn reduce(&self, mut prod: Vec<Q>) -> Raw {
        let phi = self.phi;
        for k in (phi..prod.len()).rev() {
            let t = core::mem::take(&mut prod[k]);
            if t.is_zero() {
                continue;
            }
            for j in 0..phi {
                match self.cyclo[j] {
                    0 => {}
                    1 => prod[k - phi + j] -= &t,
                    -1 => prod[k - phi + j] += &t,
                    c => prod[k - phi + j] -= &t * Q::from_integer(BigInt::from(c)),
                }
            }
        }
        prod.truncate(phi);
        prod.resize(phi, Q::zero());
        prod
    }

    /// The automorphism ζ ↦ ζ^k (k a unit mod n).
    pub fn galois(&self, a: &Raw, k: u64) -> Raw {
        self.from_exponents(
            self.n,
            a.iter()
                .enumerate()
                .map(|(j, c)| ((j as u64 * k) % self.n, c)),
        )
    }

    pub fn conj(&self, a: &Raw) -> Raw {
        self.galois(a, self.n - 1)
    }

    // Integer coefficient vectors: the ring Z[ζ_n], used where every
    // quantity is an algebraic integer and BigRational would be wasteful.

    /// `None` if some coefficient is not an integer or does not fit.
    pub fn to_z(a: &Raw) -> Option<ZRaw> {
        a.iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn from_z(a: &[i64]) -> Raw {
        a.iter().map(|&c| Q::from_integer(BigInt::from(c))).collect()
    }

    pub fn z_root(&self, r: RootExp) -> ZRaw {
        Self::to_z(&self.root(r)).expect("roots of unity are integral")
    }

    pub fn z_mul(&self, a: &[i64], b: &[i64]) -> ZRaw {
        let phi = self.phi;
        let mut prod = vec![0i64; 2 * phi - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let mut out = prod[..phi].to_vec();
        for (k, &t) in prod.iter().enumerate().skip(phi) {
            if t != 0 {
                for (o, &c) in out.iter_mut().zip(&self.powers[k % self.n as usize]) {
                    *o += t * c;
                }
            }
        }
        out
    }

    pub fn inv(&self, a: &Raw) -> Result<Raw> {
        if Self::is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        let modulus: Vec<Q> = self
            .cyclo
            .iter()
            .map(|&c| Q::from_integer(BigInt::from(c)))
            .collect();
        let (g, s) = poly_ext_gcd(modulus, a.clone());
        // g is a nonzero constant because Φ_n is irreducible
        if g.len() != 1 {
            return Err(Error::ClassificationBug(
                "cyclotomic polynomial has a nontrivial factor".into(),
            ));
        }
        let c = g[0].clone();
        let mut s: Vec<Q> = s.into_iter().map(|x| x / &c).collect();
        if s.len() < self.phi {
            s.resize(self.phi, Q::zero());
        }
        Ok(self.reduce(s))
    }

    // Tries to move the element into a prime-index subfield.
    fn descend(&self, a: &Raw) -> Option<(Field, Raw)> {
        let n = self.n;
        for p in primes_of(n) {
            let m0 = n / p;
            if n % (p * p) == 0 {
                if a
                    .iter()
                    .enumerate()
                    .any(|(j, c)| j as u64 % p != 0 && !c.is_zero())
                {
                    continue;
                }
                let sub = Field::new(m0);
                let terms: Vec<(u64, &Q)> = a
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j as u64 % p == 0)
                    .map(|(j, c)| (j as u64 / p, c))
                    .collect();
                let b = sub.from_exponents(m0, terms);
                return Some((sub, b));
            }
            // p exactly divides n and p is odd
            let m = m0;
            let alpha = if m == 1 {
                0
            } else {
                inv_mod((p % m) as i64, m as i64) as u64
            };
            let beta = inv_mod((m % p) as i64, p as i64) as u64;
            let mut t = vec![Q::zero(); m as usize];
            let pm1 = Q::from_integer(BigInt::from(p - 1));
            for (j, c) in a.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let j = j as u64;
                let u = (j * alpha) % m;
                let v = (j * beta) % p;
                if v == 0 {
                    t[u as usize] += c * &pm1;
                } else {
                    t[u as usize] -= c;
                }
            }
            let sub = Field::new(m);
            let b = sub.from_exponents(m, t.iter().enumerate().map(|(u, c)| (u as u64, c)));
            let b = sub.scale(&b, &(Q::one() / &pm1));
            if &self.embed(&sub, &b) == a {
                return Some((sub, b));
            }
        }
        None
    }

    /// Minimizes the conductor and wraps the result.
    pub fn to_num(&self, a: Raw) -> CycloNum {
        if a.iter().skip(1).all(Zero::is_zero) {
            return CycloNum {
                conductor: 1,
                coeffs: vec![a.into_iter().next().unwrap_or_else(Q::zero)],
            };
        }
        let mut field = self.clone();
        let mut a = a;
        while let Some((f, b)) = field.descend(&a) {
            field = f;
            a = b;
        }
        CycloNum {
            conductor: field.n,
            coeffs: a,
        }
    }

    /// Coefficients of `x` in this field (its conductor must divide ours).
    pub fn lift(&self, x: &CycloNum) -> Raw {
        assert!(
            self.n % x.conductor == 0,
            "Q(ζ_{}) does not contain Q(ζ_{})",
            self.n,
            x.conductor
        );
        if x.conductor == self.n {
            return x.coeffs.clone();
        }
        self.from_exponents(
            x.conductor,
            x.coeffs.iter().enumerate().map(|(j, c)| (j as u64, c)),
        )
    }
}

fn trim(p: &mut Vec<Q>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(Q::zero());
    }
}

fn poly_is_zero(p: &[Q]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn poly_divmod(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![Q::zero()], r);
    }
    let mut q = vec![Q::zero(); r.len() - db];
    for k in (db..r.len()).rev() {
        let c = &r[k] / &lead;
        if c.is_zero() {
            continue;
        }
        for j in 0..=db {
            let t = &c * &b[j];
            r[k - db + j] -= t;
        }
        q[k - db] = c;
    }
    r.truncate(db.max(1));
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let mut out: Vec<Q> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Q::zero);
            let y = b.get(i).cloned().unwrap_or_else(Q::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

// Returns (g, s) with s·b ≡ g (mod a).
fn poly_ext_gcd(a: Vec<Q>, b: Vec<Q>) -> (Vec<Q>, Vec<Q>) {
    let (mut r0, mut r1) = (a, b);
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![Q::zero()], vec![Q::one()]);
    while !poly_is_zero(&r1) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s2);
    }
    trim(&mut r0);
    (r0, s0)
}

/// An element of a cyclotomic field at its minimal conductor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloNum {
    conductor: u64,
    coeffs: Vec<Q>,
}

impl CycloNum {
    pub fn zero() -> Self {
        Self::from_q(Q::zero())
    }

    pub fn one() -> Self {
        Self::from_q(Q::one())
    }

    pub fn from_q(q: Q) -> Self {
        CycloNum {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_q(Q::from_integer(BigInt::from(n)))
    }

    /// The root of unity e^{2πi r}.
    pub fn root(r: RootExp) -> Self {
        Field::new(r.den()).to_num(Field::new(r.den()).root(r))
    }

    /// `Σ c_e ζ_N^e` over exponents `e` modulo `big_n`.
    pub fn from_exponent_sum(big_n: u64, terms: &[(u64, Q)]) -> Self {
        let f = Field::new(big_n);
        let raw = f.from_exponents(big_n, terms.iter().map(|(e, c)| (*e, c)));
        f.to_num(raw)
    }

    /// Builds from power-basis coefficients modulo Φ_n.
    pub fn from_coeffs(n: u64, coeffs: Vec<Q>) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParameter("conductor 0".into()));
        }
        let phi = euler_phi(n) as usize;
        if coeffs.len() != phi {
            return Err(Error::WrongArity {
                expected: phi,
                found: coeffs.len(),
            });
        }
        let f = Field::new(n);
        let raw = if normal_conductor(n) == n {
            coeffs
        } else {
            f.from_exponents(n, coeffs.iter().enumerate().map(|(j, c)| (j as u64, c)))
        };
        Ok(f.to_num(raw))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn common(&self, other: &CycloNum) -> (Field, Raw, Raw) {
        let f = Field::new(lcm(self.conductor, other.conductor));
        let a = f.lift(self);
        let b = f.lift(other);
        (f, a, b)
    }

    pub fn inv(&self) -> Result<CycloNum> {
        let f = Field::new(self.conductor);
        let r = f.inv(&self.coeffs)?;
        Ok(f.to_num(r))
    }

    pub fn div(&self, other: &CycloNum) -> Result<CycloNum> {
        Ok(self * &other.inv()?)
    }

    pub fn conj(&self) -> CycloNum {
        if self.conductor == 1 {
            return self.clone();
        }
        let f = Field::new(self.conductor);
        f.to_num(f.conj(&self.coeffs))
    }

    /// The Galois automorphism ζ_n ↦ ζ_n^k of Q(ζ_n) applied to `self`,
    /// where `n` is a multiple of the conductor and `k` is a unit mod `n`.
    pub fn galois(&self, n: u64, k: u64) -> CycloNum {
        let f = Field::new(lcm(n, self.conductor));
        let a = f.lift(self);
        f.to_num(f.galois(&a, k))
    }

    pub fn pow(&self, e: i64) -> Result<CycloNum> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycloNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn as_rational(&self) -> Option<Q> {
        (self.conductor == 1).then(|| self.coeffs[0].clone())
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// `Some(r)` iff `self = e^{2πi r}`.
    pub fn is_root_of_unity(&self) -> Option<RootExp> {
        if self.is_zero() {
            return None;
        }
        let f = Field::new(self.conductor);
        if f.mul(&self.coeffs, &f.conj(&self.coeffs)) != f.one() {
            return None;
        }
        let big = lcm(2, self.conductor);
        let one = Q::one();
        (0..big)
            .find(|&e| f.from_exponents(big, [(e, &one)]) == self.coeffs)
            .map(|e| RootExp::new(e as i64, big))
    }

    pub fn is_positive_rational(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_positive())
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = if c.is_integer() {
                alloc::format!("{}", c.numer())
            } else {
                format_q(c)
            };
            terms.push(match (j, cs.as_str()) {
                (0, _) => cs,
                (_, "1") => alloc::format!("E({})^{j}", self.conductor),
                (_, "-1") => alloc::format!("-E({})^{j}", self.conductor),
                _ => alloc::format!("{cs}*E({})^{j}", self.conductor),
            });
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (i, t) in terms.iter().enumerate() {
            if i > 0 {
                if let Some(rest) = t.strip_prefix('-') {
                    s.push_str(" - ");
                    s.push_str(rest);
                    continue;
                }
                s.push_str(" + ");
            }
            s.push_str(t);
        }
        write!(f, "{s}")
    }
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, o: &CycloNum) -> CycloNum {
        let (f, a, b) = self.common(o);
        f.to_num(f.add(&a, &b))
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, o: &CycloNum) -> CycloNum {
        let (f, a, b) = self.common(o);
        f.to_num(f.sub(&a, &b))
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, o: &CycloNum) -> CycloNum {
        if self.conductor == 1 && o.conductor == 1 {
            return CycloNum::from_q(&self.coeffs[0] * &o.coeffs[0]);
        }
        let (f, a, b) = self.common(o);
        f.to_num(f.mul(&a, &b))
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloNum {
            type Output = CycloNum;
            fn $m(self, o: CycloNum) -> CycloNum {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

/// The order-p generator used for the odd-prime part of the Gauss-sum
/// group: Σ_a ζ_p^{a²}, a square root of ±p.
pub fn quadratic_gauss_sum(p: u64) -> CycloNum {
    let one = Q::one();
    let terms: Vec<(u64, Q)> = (0..p).map(|a| ((a * a) % p, one.clone())).collect();
    CycloNum::from_exponent_sum(p, &terms)
}
