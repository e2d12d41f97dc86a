//! Brute-force oracles shared by the integration suites. None of these
//! call the library routine they are used to check.

#![allow(dead_code)]

use braidforge_core::abelian::FinAbGroup;
use braidforge_core::cyclotomic::{CycloNum, RootExp};
use braidforge_core::fusion::FusionRing;
use braidforge_core::premodular::{deligne_product, ising_datum, pointed_datum, PreModularDatum};
use braidforge_core::qform::{a_form, all_forms, form_from_params, groups_of_order, PreMetricGroup, Sign};
use braidforge_core::rational::gcd;
use rand::Rng;

/// `Σ_g e^{±2πi q(g)}`, one root of unity at a time.
pub fn gauss_oracle(m: &PreMetricGroup, sign: i64) -> CycloNum {
    m.values()
        .iter()
        .fold(CycloNum::zero(), |acc, r| &acc + &CycloNum::root(r.scale(sign)))
}

/// Whether some group isomorphism carries `q1` to `q2`, by trying every
/// assignment of images to the standard generators.
pub fn iso_oracle(m1: &PreMetricGroup, m2: &PreMetricGroup) -> bool {
    let (g1, g2) = (m1.group(), m2.group());
    if g1.order() != g2.order() {
        return false;
    }
    let mut sorted1 = m1.values().to_vec();
    let mut sorted2 = m2.values().to_vec();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return false;
    }
    let k = g1.rank();
    let n = g2.size();
    let mut imgs = vec![0usize; k];
    let image = |imgs: &[usize], x: usize| {
        let c = g1.coords(x);
        let mut acc = 0;
        for (j, &cj) in c.iter().enumerate() {
            acc = g2.add_idx(acc, g2.mul_idx(cj as i64, imgs[j]));
        }
        acc
    };
    loop {
        let well_defined = (0..k).all(|j| g2.mul_idx(g1.orders()[j] as i64, imgs[j]) == 0);
        if well_defined {
            let mut seen = vec![false; n];
            let mut ok = true;
            for x in 0..g1.size() {
                let y = image(&imgs, x);
                if seen[y] || m2.q_idx(y) != m1.q_idx(x) {
                    ok = false;
                    break;
                }
                seen[y] = true;
            }
            if ok {
                return true;
            }
        }
        let mut j = 0;
        loop {
            if j == k {
                return false;
            }
            imgs[j] += 1;
            if imgs[j] < n {
                break;
            }
            imgs[j] = 0;
            j += 1;
        }
    }
}

/// The subgroup generated by `base` and `x`, by repeated addition.
pub fn span_with(g: &FinAbGroup, base: &[usize], x: usize) -> Vec<usize> {
    let mut inside = vec![false; g.size()];
    let mut out = Vec::new();
    let mut stack: Vec<usize> = base.iter().copied().chain([0, x]).collect();
    while let Some(y) = stack.pop() {
        if inside[y] {
            continue;
        }
        inside[y] = true;
        out.push(y);
        for &z in base.iter().chain([&x]) {
            stack.push(g.add_idx(y, z));
        }
    }
    out.sort_unstable();
    out
}

/// A Lagrangian subgroup (isotropic of order `√|G|`), found by growing
/// isotropic subgroups one isotropic element at a time.
pub fn lagrangian_oracle(m: &PreMetricGroup) -> Option<Vec<usize>> {
    let g = m.group();
    let size = g.size();
    let k = (1..=size).find(|&k| k * k >= size)?;
    if k * k != size {
        return None;
    }
    let iso: Vec<usize> = (1..size).filter(|&x| m.q_idx(x).is_zero()).collect();
    let mut seen = std::collections::HashSet::new();
    fn grow(
        m: &PreMetricGroup,
        iso: &[usize],
        k: usize,
        h: Vec<usize>,
        seen: &mut std::collections::HashSet<Vec<usize>>,
    ) -> Option<Vec<usize>> {
        if h.len() == k {
            return Some(h);
        }
        for &x in iso {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let next = span_with(m.group(), &h, x);
            let isotropic = next.iter().all(|&y| m.q_idx(y).is_zero());
            if isotropic && next.len() <= k && seen.insert(next.clone()) {
                if let Some(found) = grow(m, iso, k, next, seen) {
                    return Some(found);
                }
            }
        }
        None
    }
    grow(m, &iso, k, vec![0], &mut seen)
}

/// All forms on all groups whose order is in `orders`.
pub fn forms_of_orders(orders: impl IntoIterator<Item = u64>) -> Vec<PreMetricGroup> {
    orders
        .into_iter()
        .flat_map(groups_of_order)
        .flat_map(|g| all_forms(&g).collect::<Vec<_>>())
        .collect()
}

/// A uniformly chosen form on a uniformly chosen group of order at most
/// `max_order`.
pub fn random_form<R: Rng>(rng: &mut R, max_order: u64) -> PreMetricGroup {
    let n = rng.random_range(1..=max_order);
    let groups = groups_of_order(n);
    let g = groups[rng.random_range(0..groups.len())].clone();
    let o = g.orders().to_vec();
    let diag: Vec<u64> = o
        .iter()
        .map(|&n| rng.random_range(0..if n % 2 == 0 { 2 * n } else { n }))
        .collect();
    let mut cross = Vec::new();
    for i in 0..o.len() {
        for j in i + 1..o.len() {
            cross.push(rng.random_range(0..gcd(o[i], o[j])));
        }
    }
    form_from_params(&g, &diag, &cross)
}

pub fn r(n: i64, d: u64) -> RootExp {
    RootExp::new(n, d)
}

/// The sixteen Ising parameters `(k/16, ε)` with `k` odd.
pub fn ising_params() -> Vec<(RootExp, i64)> {
    let mut out = Vec::new();
    for k in (1..16).step_by(2) {
        for eps in [1, -1] {
            out.push((r(k, 16), eps));
        }
    }
    out
}

/// `s_XY` recomputed from the balancing formula with plain cyclotomic
/// arithmetic, and every build identity checked against it.
pub fn datum_oracle(d: &PreModularDatum) -> Result<(), String> {
    let ring = d.ring();
    let rk = ring.rank();
    let th = |x: usize| e(d.twists()[x]);
    let thi = |x: usize| e(-d.twists()[x]);
    let dim = d.dims();
    let mut s = vec![vec![CycloNum::zero(); rk]; rk];
    for x in 0..rk {
        for y in 0..rk {
            let mut acc = CycloNum::zero();
            for z in 0..rk {
                let n = ring.n(x, y, z) as i64;
                if n != 0 {
                    acc = &acc + &(&c(n) * &(&th(z) * &dim[z]));
                }
            }
            s[x][y] = &(&thi(x) * &thi(y)) * &acc;
        }
    }
    ensure(s == d.s_matrix(), || "S differs from the balancing formula".into())?;
    for x in 0..rk {
        ensure(s[ring.unit()][x] == dim[x], || "s_1X ≠ d(X)".into())?;
        for y in 0..rk {
            ensure(s[x][y] == s[y][x] && s[ring.dual(x)][ring.dual(y)] == s[x][y], || "S symmetry".into())?;
            for z in 0..rk {
                let rhs = (0..rk).fold(CycloNum::zero(), |acc, w| {
                    &acc + &(&c(ring.n(y, z, w) as i64) * &s[x][w])
                });
                ensure(&s[x][y] * &s[x][z] == &dim[x] * &rhs, || format!("Verlinde at {x},{y},{z}"))?;
            }
        }
    }
    let tp = (0..rk).fold(CycloNum::zero(), |acc, x| &acc + &(&th(x) * &(&dim[x] * &dim[x])));
    for y in 0..rk {
        let lhs = (0..rk).fold(CycloNum::zero(), |acc, x| &acc + &(&(&th(x) * &dim[x]) * &s[x][y]));
        ensure(lhs == &(&dim[y] * &thi(y)) * &tp, || format!("twisted row sum at {y}"))?;
    }
    Ok(())
}

/// Every pre-modular datum the suites sweep: all Ising data, all pointed
/// data of order at most 8 (with every sign character on orders 2 and 4),
/// `Rep(S3)` and a few Deligne products.
pub fn corpus() -> Vec<(String, PreModularDatum)> {
    let mut out = Vec::new();
    for (z, eps) in ising_params() {
        out.push((format!("I({z},{eps})"), ising_datum(z, eps).unwrap()));
    }
    for m in forms_of_orders(1..=8) {
        out.push((format!("C({m})"), pointed_datum(&m, None).unwrap()));
    }
    for m in forms_of_orders([2, 4]) {
        for chi in sign_characters(m.group()).into_iter().skip(1) {
            if let Ok(d) = pointed_datum(&m, Some(&chi)) {
                out.push((format!("C({m}, χ = {chi:?})"), d));
            }
        }
    }
    let rep = PreModularDatum::build(
        FusionRing::s3_characters(),
        vec![RootExp::zero(); 3],
        vec![c(1), c(1), c(2)],
    )
    .unwrap();
    out.push(("Rep(S3)".into(), rep));
    let i1 = ising_datum(r(1, 16), 1).unwrap();
    for (z, eps) in [(r(1, 16), 1), (r(3, 16), -1), (r(15, 16), 1)] {
        let i2 = ising_datum(z, eps).unwrap();
        out.push((format!("I ⊠ I({z}, {eps})"), deligne_product(&i1, &i2).unwrap()));
    }
    let a = pointed_datum(&a_form(Sign::Plus), None).unwrap();
    out.push(("I ⊠ A".into(), deligne_product(&i1, &a).unwrap()));
    out
}

/// All characters `G → {±1}`, the trivial one first: products of
/// `x ↦ (-1)^{x_j}` over sets of even-order coordinates `j`.
pub fn sign_characters(g: &FinAbGroup) -> Vec<Vec<i64>> {
    let even: Vec<usize> = (0..g.rank()).filter(|&j| g.orders()[j] % 2 == 0).collect();
    (0u32..1 << even.len())
        .map(|bits| {
            (0..g.size())
                .map(|x| {
                    let c = g.coords(x);
                    let odd = (0..even.len()).filter(|&t| bits >> t & 1 == 1 && c[even[t]] % 2 == 1).count();
                    if odd % 2 == 0 { 1 } else { -1 }
                })
                .collect()
        })
        .collect()
}

pub fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn c(n: i64) -> CycloNum {
    CycloNum::from_int(n)
}

pub fn e(r: RootExp) -> CycloNum {
    CycloNum::root(r)
}

