//! Smith normal form of relation lattices, used to put finite abelian groups
//! given by generators and relations into invariant-factor form.

use alloc::vec;
use alloc::vec::Vec;

/// `Z^d / L` where `L` is a full-rank lattice containing `modulus * Z^d`.
pub(crate) struct Presentation {
    pub invariants: Vec<u64>,
    keep: Vec<usize>,
    // y_t = sum_i c_i v[i][t]
    v: Vec<Vec<i128>>,
    modulus: i128,
}

impl Presentation {
    /// `modulus * e_j` must lie in the lattice spanned by `relations` for every
    /// `j`; it is added explicitly.
    pub fn new<I>(d: usize, relations: I, modulus: u64) -> Self
    where
        I: IntoIterator<Item = Vec<i64>>,
    {
        let m = modulus.max(1) as i128;
        let mut basis: Vec<Option<Vec<i128>>> = vec![None; d];
        for j in 0..d {
            let mut e = vec![0i128; d];
            e[j] = m;
            basis[j] = Some(e);
        }
        for r in relations {
            debug_assert_eq!(r.len(), d);
            insert(&mut basis, r.into_iter().map(i128::from).collect(), m);
        }
        let mut a: Vec<Vec<i128>> = basis
            .into_iter()
            .map(|r| r.expect("full rank by construction"))
            .collect();
        let mut v: Vec<Vec<i128>> = (0..d)
            .map(|i| (0..d).map(|j| i128::from(i == j)).collect())
            .collect();
        smith(&mut a, &mut v, m);
        let mut invariants = Vec::new();
        let mut keep = Vec::new();
        for t in 0..d {
            let g = gcd128(a[t][t].abs(), m);
            if g > 1 {
                invariants.push(g as u64);
                keep.push(t);
            }
        }
        Presentation {
            invariants,
            keep,
            v,
            modulus: m,
        }
    }

    pub fn project(&self, c: &[i64]) -> Vec<u64> {
        self.keep
            .iter()
            .zip(&self.invariants)
            .map(|(&t, &n)| {
                let mut s: i128 = 0;
                for (i, &ci) in c.iter().enumerate() {
                    s = (s + i128::from(ci) * self.v[i][t]).rem_euclid(self.modulus);
                }
                s.rem_euclid(n as i128) as u64
            })
            .collect()
    }
}

fn gcd128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

// Hermite-style insertion, entries kept reduced modulo m.
fn insert(basis: &mut [Option<Vec<i128>>], mut v: Vec<i128>, m: i128) {
    let d = v.len();
    for x in v.iter_mut() {
        *x = x.rem_euclid(m);
    }
    for col in 0..d {
        if v[col] == 0 {
            continue;
        }
        match basis[col].take() {
            None => {
                basis[col] = Some(v);
                return;
            }
            Some(b) => {
                let (g, s, t) = ext_gcd(b[col], v[col]);
                let (bq, vq) = (b[col] / g, v[col] / g);
                let mut nb = vec![0i128; d];
                let mut nv = vec![0i128; d];
                for j in col..d {
                    nb[j] = s * b[j] + t * v[j];
                    nv[j] = vq * b[j] - bq * v[j];
                    if j > col {
                        nb[j] = nb[j].rem_euclid(m);
                    }
                    nv[j] = nv[j].rem_euclid(m);
                }
                basis[col] = Some(nb);
                v = nv;
            }
        }
    }
}

fn smith(a: &mut [Vec<i128>], v: &mut [Vec<i128>], m: i128) {
    let d = a.len();
    let reduce = |a: &mut [Vec<i128>], v: &mut [Vec<i128>]| {
        for row in a.iter_mut().chain(v.iter_mut()) {
            for x in row.iter_mut() {
                if x.abs() >= m {
                    *x = x.rem_euclid(m);
                }
            }
        }
    };
    for t in 0..d {
        loop {
            let mut best: Option<(usize, usize, i128)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && best.is_none_or(|(_, _, b)| x.abs() < b) {
                        best = Some((i, j, x.abs()));
                    }
                }
            }
            let Some((pi, pj, _)) = best else { break };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut().chain(v.iter_mut()) {
                    row.swap(t, pj);
                }
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..d {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..d {
                        a[i][j] -= q * a[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..d {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().chain(v.iter_mut()) {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            reduce(a, v);
            if !clean || a[t][t] == 0 {
                continue;
            }
            let p = a[t][t];
            let bad = (t + 1..d).find(|&i| (t + 1..d).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..d {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
    }
}
