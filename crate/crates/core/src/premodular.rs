//! Pre-modular data: a fusion ring with twists and dimensions, the
//! S-matrix they determine, and the identities relating them.
//!
//! Internally every datum lives in one cyclotomic field `Q(ζ_N)` with `N`
//! the least common conductor of its twists and dimensions. Valid
//! dimensions are characters of the fusion ring and hence algebraic
//! integers, so all sums below are computed with integer coefficients.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Roots;

use crate::abelian::{FinAbGroup, Subgroup};
use crate::cyclotomic::{CycloNum, Field, RootExp, ZRaw};
use crate::fusion::{
    adjoint_of, all_subrings, commutator, fp_dims, fp_square_grading, fp_squares, pointed_part,
    subring_generated, universal_grading, FPData, FusionRing, FusionSubring,
};
use crate::linalg::rank_in;
use crate::qform::{isotropic_subgroups, PreMetricGroup};
use crate::rational::{lcm, squarefree_part};
use crate::report::Check;
use crate::{Error, Limits, Result};

#[derive(Clone, Debug)]
pub struct PreModularDatum {
    ring: FusionRing,
    theta: Vec<RootExp>,
    dim: Vec<CycloNum>,
    field: Field,
    d: Vec<ZRaw>,
    th: Vec<ZRaw>,
    s: Vec<ZRaw>,
    dd: Vec<ZRaw>,
    pointed: Option<PreMetricGroup>,
}

impl PartialEq for PreModularDatum {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.theta == other.theta && self.dim == other.dim
    }
}

impl PreModularDatum {
    /// Derives `S` from `s_XY = θ_X^-1 θ_Y^-1 Σ_Z N_XY^Z θ_Z d(Z)` and checks,
    /// in this order: unit twist, unit dimension, nonzero dimensions,
    /// dimensions of duals, symmetry of `S`, and
    /// `s_XY s_XZ = d(X) Σ_W N_YZ^W s_XW`.
    pub fn build(ring: FusionRing, theta: Vec<RootExp>, dim: Vec<CycloNum>) -> Result<Self> {
        let r = ring.rank();
        for len in [theta.len(), dim.len()] {
            if len != r {
                return Err(Error::WrongArity { expected: r, found: len });
            }
        }
        let u = ring.unit();
        let l = |x: usize| String::from(ring.label(x));
        if !theta[u].is_zero() {
            return Err(Error::UnitTwistFail);
        }
        if dim[u] != CycloNum::one() {
            return Err(Error::UnitDimFail);
        }
        if let Some(x) = (0..r).find(|&x| dim[x].is_zero()) {
            return Err(Error::ZeroDim(l(x)));
        }
        if let Some(x) = (0..r).find(|&x| dim[ring.dual(x)] != dim[x].conj()) {
            return Err(Error::DualDimFail(format!(
                "d({}*) = {} but the conjugate of d({}) is {}",
                l(x),
                dim[ring.dual(x)],
                l(x),
                dim[x].conj()
            )));
        }
        let n = theta
            .iter()
            .map(RootExp::den)
            .chain(dim.iter().map(CycloNum::conductor))
            .fold(1, lcm);
        let field = Field::new(n);
        let d: Vec<ZRaw> = match dim.iter().map(|x| Field::to_z(&field.lift(x))).collect() {
            Some(d) => d,
            None => return Err(character_failure(&ring, &dim)),
        };
        let th: Vec<ZRaw> = theta.iter().map(|&t| field.z_root(t)).collect();
        let th_inv: Vec<ZRaw> = theta.iter().map(|&t| field.z_root(-t)).collect();
        let td: Vec<ZRaw> = (0..r).map(|z| field.z_mul(&th[z], &d[z])).collect();
        let phi = d[0].len();
        let mut s = Vec::with_capacity(r * r);
        for x in 0..r {
            for y in 0..r {
                let mut acc = vec![0i64; phi];
                for z in ring.constituents(x, y) {
                    let k = ring.n(x, y, z) as i64;
                    acc.iter_mut().zip(&td[z]).for_each(|(a, b)| *a += k * b);
                }
                let t = field.z_mul(&th_inv[x], &th_inv[y]);
                s.push(field.z_mul(&t, &acc));
            }
        }
        let at = |x: usize, y: usize| &s[x * r + y];
        for x in 0..r {
            for y in 0..r {
                if at(x, y) != at(y, x) || at(ring.dual(x), ring.dual(y)) != at(x, y) {
                    return Err(Error::SymmetryFail(format!("s[{}][{}]", l(x), l(y))));
                }
            }
        }
        for x in 0..r {
            for y in 0..r {
                for z in y..r {
                    let lhs = field.z_mul(at(x, y), at(x, z));
                    let mut acc = vec![0i64; phi];
                    for w in ring.constituents(y, z) {
                        let k = ring.n(y, z, w) as i64;
                        acc.iter_mut().zip(at(x, w)).for_each(|(a, b)| *a += k * b);
                    }
                    if lhs != field.z_mul(&d[x], &acc) {
                        return Err(Error::VerlindeFail(l(x), l(y), l(z)));
                    }
                }
            }
        }
        let mut dd = Vec::with_capacity(r * r);
        for x in 0..r {
            for y in 0..r {
                dd.push(field.z_mul(&d[x], &d[y]));
            }
        }
        Ok(PreModularDatum {
            ring,
            theta,
            dim,
            field,
            d,
            th,
            s,
            dd,
            pointed: None,
        })
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    pub fn twists(&self) -> &[RootExp] {
        &self.theta
    }

    pub fn dims(&self) -> &[CycloNum] {
        &self.dim
    }

    /// The form `g ↦ c_{g,g}` when the datum came from a pre-metric group.
    pub fn pointed_form(&self) -> Option<&PreMetricGroup> {
        self.pointed.as_ref()
    }

    fn num(&self, a: &[i64]) -> CycloNum {
        self.field.to_num(Field::from_z(a))
    }

    fn s_z(&self, x: usize, y: usize) -> &ZRaw {
        &self.s[x * self.rank() + y]
    }

    pub fn s(&self, x: usize, y: usize) -> CycloNum {
        self.num(self.s_z(x, y))
    }

    pub fn s_tilde(&self, x: usize, y: usize) -> CycloNum {
        self.s(x, y)
            .div(&(&self.dim[x] * &self.dim[y]))
            .expect("dimensions are nonzero")
    }

    pub fn s_matrix(&self) -> Vec<Vec<CycloNum>> {
        let r = self.rank();
        (0..r).map(|x| (0..r).map(|y| self.s(x, y)).collect()).collect()
    }

    pub fn s_tilde_matrix(&self) -> Vec<Vec<CycloNum>> {
        let r = self.rank();
        (0..r).map(|x| (0..r).map(|y| self.s_tilde(x, y)).collect()).collect()
    }

    /// `s̃_XY = 1`, i.e. `s_XY = d(X) d(Y)`.
    pub fn centralizes(&self, x: usize, y: usize) -> bool {
        self.s_z(x, y) == &self.dd[x * self.rank() + y]
    }

    fn z_sum<I: IntoIterator<Item = ZRaw>>(&self, terms: I) -> ZRaw {
        let mut acc = vec![0i64; self.d[0].len()];
        for t in terms {
            acc.iter_mut().zip(&t).for_each(|(a, b)| *a += b);
        }
        acc
    }

    fn z_dim(&self, k: &FusionSubring) -> ZRaw {
        self.z_sum(k.indices().iter().map(|&x| self.dd[x * self.rank() + x].clone()))
    }

    /// `Σ_{X∈K} d(X)²`.
    pub fn dim_of(&self, k: &FusionSubring) -> CycloNum {
        self.num(&self.z_dim(k))
    }

    fn z_tau(&self, k: &FusionSubring, sign: i64) -> ZRaw {
        self.z_sum(k.indices().iter().map(|&x| {
            let t = self.field.z_root(self.theta[x].scale(sign));
            self.field.z_mul(&t, &self.dd[x * self.rank() + x])
        }))
    }

    /// `Σ_{X∈K} θ_X^{±1} d(X)²`.
    pub fn tau_of(&self, k: &FusionSubring, sign: i64) -> CycloNum {
        self.num(&self.z_tau(k, sign))
    }

    pub fn whole(&self) -> FusionSubring {
        FusionSubring::whole(&self.ring)
    }
}

// Dimensions with non-integral coordinates are not a character of the
// ring; find the product `d(Y) d(Z) = Σ N_YZ^W d(W)` that shows it.
fn character_failure(ring: &FusionRing, dim: &[CycloNum]) -> Error {
    let r = ring.rank();
    let u = ring.label(ring.unit());
    for y in 0..r {
        for z in 0..r {
            let rhs = ring.constituents(y, z).fold(CycloNum::zero(), |acc, w| {
                &acc + &(&CycloNum::from_int(ring.n(y, z, w) as i64) * &dim[w])
            });
            if &dim[y] * &dim[z] != rhs {
                return Error::VerlindeFail(u.into(), ring.label(y).into(), ring.label(z).into());
            }
        }
    }
    Error::ClassificationBug("a character of the ring has non-integral values".into())
}

pub fn trivial_datum() -> PreModularDatum {
    pointed_datum(&PreMetricGroup::trivial(), None).expect("trivial datum is valid")
}

/// `C(G, q, χ)`: the group ring with `θ_g = q(g) χ(g)` and `d(g) = χ(g)`.
/// `chi` lists `±1` in element order; `None` means `χ ≡ 1`.
pub fn pointed_datum(m: &PreMetricGroup, chi: Option<&[i64]>) -> Result<PreModularDatum> {
    let g = m.group();
    let chi: Vec<i64> = match chi {
        None => vec![1; g.size()],
        Some(c) => c.to_vec(),
    };
    check_character(g, &chi)?;
    let half = RootExp::new(1, 2);
    let theta = (0..g.size())
        .map(|i| if chi[i] == 1 { m.q_idx(i) } else { m.q_idx(i) + half })
        .collect();
    let dim = chi.iter().map(|&c| CycloNum::from_int(c)).collect();
    let mut datum = PreModularDatum::build(FusionRing::group_ring(g), theta, dim)?;
    datum.pointed = Some(m.clone());
    Ok(datum)
}

pub fn check_character(g: &FinAbGroup, chi: &[i64]) -> Result<()> {
    if chi.len() != g.size() {
        return Err(Error::WrongArity {
            expected: g.size(),
            found: chi.len(),
        });
    }
    if let Some(i) = (0..g.size()).find(|&i| chi[i] != 1 && chi[i] != -1) {
        return Err(Error::NotCharacter(format!("χ{} = {}", g.element(i), chi[i])));
    }
    for a in 0..g.size() {
        for b in 0..g.size() {
            if chi[g.add_idx(a, b)] != chi[a] * chi[b] {
                return Err(Error::NotCharacter(format!(
                    "χ{} ≠ χ{}·χ{}",
                    g.element(g.add_idx(a, b)),
                    g.element(a),
                    g.element(b)
                )));
            }
        }
    }
    Ok(())
}

/// `I_{ζ,ε}` for `ζ = e^{2πi k/16}` with `k` odd: `θ = (1, -1, εζ^-1)` and
/// `d = (1, 1, ε(ζ² + ζ^-2))`.
pub fn ising_datum(zeta: RootExp, eps: i64) -> Result<PreModularDatum> {
    if zeta.scale(8) != RootExp::new(1, 2) {
        return Err(Error::BadParameter(format!("ζ = e(2πi·{zeta}) is not a root of ζ^8 = -1")));
    }
    if eps != 1 && eps != -1 {
        return Err(Error::BadParameter(format!("ε = {eps}")));
    }
    let half = RootExp::new(1, 2);
    let theta_x = if eps == 1 { -zeta } else { -zeta + half };
    let theta = vec![RootExp::zero(), half, theta_x];
    let dx = &CycloNum::from_int(eps) * &ising_dim(zeta);
    PreModularDatum::build(
        FusionRing::ising(),
        theta,
        vec![CycloNum::one(), CycloNum::one(), dx],
    )
}

/// `ζ² + ζ^-2`.
pub fn ising_dim(zeta: RootExp) -> CycloNum {
    &CycloNum::root(zeta.scale(2)) + &CycloNum::root(zeta.scale(-2))
}

/// `ζ^-1 (ζ² + ζ^-2)`.
pub fn ising_f(zeta: RootExp) -> CycloNum {
    &CycloNum::root(-zeta) * &ising_dim(zeta)
}

/// Basis of pairs, twists adding and dimensions multiplying.
pub fn deligne_product(a: &PreModularDatum, b: &PreModularDatum) -> Result<PreModularDatum> {
    let ring = FusionRing::product(&a.ring, &b.ring);
    let rb = b.rank();
    let r = ring.rank();
    let theta = (0..r).map(|x| a.theta[x / rb] + b.theta[x % rb]).collect();
    let dim = (0..r).map(|x| &a.dim[x / rb] * &b.dim[x % rb]).collect();
    let d = PreModularDatum::build(ring, theta, dim)?;
    for sign in [1, -1] {
        let (ta, tb) = (a.tau_of(&a.whole(), sign), b.tau_of(&b.whole(), sign));
        let t = d.tau_of(&d.whole(), sign);
        if t != &ta * &tb {
            return Err(Error::ClassificationBug(format!("τ of the product is {t}, not {ta}·{tb}")));
        }
    }
    Ok(d)
}

/// `K' = {V : s̃_YV = 1 for all Y ∈ K}`.
pub fn centralizer_set(d: &PreModularDatum, k: &FusionSubring) -> FusionSubring {
    let members: Vec<usize> = (0..d.rank())
        .filter(|&v| k.indices().iter().all(|&y| d.centralizes(y, v)))
        .collect();
    FusionSubring::from_indices(&d.ring, &members).expect("centralizers are subrings")
}

/// Classes of "`Y` occurs in `Z ⊗ W` for some `W ∈ K'`".
pub fn components(d: &PreModularDatum, k_prime: &FusionSubring) -> Vec<Vec<usize>> {
    let r = d.rank();
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for z in 0..r {
        for &w in k_prime.indices() {
            for y in d.ring.constituents(z, w).collect::<Vec<_>>() {
                let (a, b) = (find(&mut parent, y), find(&mut parent, z));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for x in 0..r {
        let root = find(&mut parent, x);
        match roots.iter().position(|&c| c == root) {
            Some(i) => classes[i].push(x),
            None => {
                roots.push(root);
                classes.push(vec![x]);
            }
        }
    }
    classes
}

/// Rank of the rows of `S̃` indexed by `rows` (equal to the rank of the
/// same rows of `S`, since `S̃` is `S` rescaled by nonzero dimensions).
pub fn s_tilde_rank(d: &PreModularDatum, rows: &[usize]) -> usize {
    let m = rows
        .iter()
        .map(|&x| (0..d.rank()).map(|y| Field::from_z(d.s_z(x, y))).collect())
        .collect();
    rank_in(&d.field, m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerReport {
    pub subring: FusionSubring,
    pub centralizer: FusionSubring,
    pub components: Vec<Vec<usize>>,
    pub rank_s_tilde: usize,
}

/// The centralizer of `K` with its components, checking that their number
/// is the rank of `S̃` restricted to the rows of `K`.
pub fn centralizer(d: &PreModularDatum, k: &FusionSubring) -> Result<CentralizerReport> {
    let c = centralizer_set(d, k);
    let comps = components(d, &c);
    let rank = s_tilde_rank(d, k.indices());
    if rank != comps.len() {
        return Err(Error::ClassificationBug(format!(
            "rank of S̃ on {:?} is {rank} but there are {} components",
            k.indices(),
            comps.len()
        )));
    }
    Ok(CentralizerReport {
        subring: k.clone(),
        centralizer: c,
        components: comps,
        rank_s_tilde: rank,
    })
}

/// Invertibility of `S̃` and triviality of the centralizer of everything,
/// which must agree.
pub fn is_nondegenerate(d: &PreModularDatum) -> Result<bool> {
    let full = s_tilde_rank(d, &(0..d.rank()).collect::<Vec<_>>()) == d.rank();
    let trivial = centralizer_set(d, &d.whole()).len() == 1;
    if full != trivial {
        return Err(Error::ClassificationBug(format!(
            "S̃ invertible: {full}, trivial centralizer: {trivial}"
        )));
    }
    Ok(full)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomyReport {
    /// `V` with `s̃_YV = 1` for every `Y ∈ K`.
    pub centralizing: Vec<usize>,
    /// `V` with `Σ_{Y∈K} d(Y)² s̃_YV = 0`.
    pub vanishing: Vec<usize>,
    /// `V` in neither (or both) branches.
    pub violations: Vec<usize>,
}

pub fn dichotomy_check(d: &PreModularDatum, k: &FusionSubring) -> DichotomyReport {
    let mut rep = DichotomyReport {
        centralizing: Vec::new(),
        vanishing: Vec::new(),
        violations: Vec::new(),
    };
    for v in 0..d.rank() {
        let first = k.indices().iter().all(|&y| d.centralizes(y, v));
        // d(Y)² s̃_YV = d(Y) s_YV / d(V), so the sum vanishes iff Σ d(Y) s_YV does
        let sum = d.z_sum(k.indices().iter().map(|&y| d.field.z_mul(&d.d[y], d.s_z(y, v))));
        let second = sum.iter().all(|&c| c == 0);
        match (first, second) {
            (true, false) => rep.centralizing.push(v),
            (false, true) => rep.vanishing.push(v),
            _ => rep.violations.push(v),
        }
    }
    rep
}

fn join(d: &PreModularDatum, a: &FusionSubring, b: &FusionSubring) -> FusionSubring {
    let mut u = a.indices().to_vec();
    u.extend_from_slice(b.indices());
    subring_generated(&d.ring, &u).expect("union of subrings")
}

fn z_eq_check(d: &PreModularDatum, name: &str, anchor: &str, lhs: ZRaw, rhs: ZRaw) -> Check {
    let (l, r) = (d.num(&lhs), d.num(&rhs));
    let ok = l == r;
    Check::new(name, anchor, ok, format!("{l} vs {r}"))
}

/// The dimension identities for the pair `(K, B)` of subrings: categorical
/// dimensions exactly, FP dimensions within `fp.tolerance`.
pub fn mueger_report(
    d: &PreModularDatum,
    k: &FusionSubring,
    b: &FusionSubring,
    fp: &FPData,
) -> Vec<Check> {
    let f = &d.field;
    let whole = d.whole();
    let kp = centralizer_set(d, k);
    let bp = centralizer_set(d, b);
    let cp = centralizer_set(d, &whole);
    let dim = |s: &FusionSubring| d.z_dim(s);
    let mut out = Vec::new();
    out.push(z_eq_check(
        d,
        "centralizer_exchange",
        "dim(B ∩ D')·dim(D) = dim(D ∩ B')·dim(B)",
        f.z_mul(&dim(&b.intersection(&kp)), &dim(k)),
        f.z_mul(&dim(&k.intersection(&bp)), &dim(b)),
    ));
    out.push(z_eq_check(
        d,
        "centralizer_dimension",
        "dim(D)·dim(D') = dim(C)·dim(D ∩ C')",
        f.z_mul(&dim(k), &dim(&kp)),
        f.z_mul(&dim(&whole), &dim(&k.intersection(&cp))),
    ));
    let kpp = centralizer_set(d, &kp);
    let kc = join(d, k, &cp);
    out.push(Check::new(
        "double_centralizer",
        "D'' = D ∨ C'",
        kpp == kc,
        format!("{:?} vs {:?}", kpp.indices(), kc.indices()),
    ));
    out.push(z_eq_check(
        d,
        "diamond",
        "dim(A)·dim(B) = dim(A ∨ B)·dim(A ∩ B)",
        f.z_mul(&dim(k), &dim(b)),
        f.z_mul(&dim(&join(d, k, b)), &dim(&k.intersection(b))),
    ));
    let (lhs, rhs) = (
        fp.of(k) * fp.of(&kp),
        fp.total * fp.of(&k.intersection(&cp)),
    );
    out.push(Check::new(
        "fp_centralizer_dimension",
        "FPdim(D)·FPdim(D') = FPdim(C)·FPdim(D ∩ C')",
        (lhs - rhs).abs() <= fp.tolerance * rhs.max(1.0),
        format!("{lhs} vs {rhs}"),
    ));
    let anchor = "D non-degenerate ⇒ D ∩ D' = 1 and dim(D)·dim(D') = dim(C)";
    if s_tilde_rank_square(d, k) == k.len() {
        let meet = k.intersection(&kp);
        let prod_ok = f.z_mul(&dim(k), &dim(&kp)) == dim(&whole);
        out.push(Check::new(
            "nondegenerate_factor",
            anchor,
            meet.len() == 1 && prod_ok,
            format!("D ∩ D' = {:?}", meet.indices()),
        ));
    } else {
        out.push(Check::skipped("nondegenerate_factor", anchor, "D is degenerate"));
    }
    out
}

// Rank of `S̃` restricted to `K × K`, the S-matrix of `K` itself.
fn s_tilde_rank_square(d: &PreModularDatum, k: &FusionSubring) -> usize {
    let m = k
        .indices()
        .iter()
        .map(|&x| k.indices().iter().map(|&y| Field::from_z(d.s_z(x, y))).collect())
        .collect();
    rank_in(&d.field, m)
}

/// Objects centralizing every constituent of `Y ⊗ Y*` for `Y ∈ K`, that
/// is, the centralizer of the adjoint subring of `K`. Also checks that it
/// equals the commutator of `K'`.
pub fn projective_centralizer(d: &PreModularDatum, k: &FusionSubring) -> Result<FusionSubring> {
    let kad = adjoint_of(&d.ring, k)?;
    let pc = centralizer_set(d, &kad);
    let co = commutator(&d.ring, &centralizer_set(d, k))?;
    if pc != co {
        return Err(Error::ClassificationBug(format!(
            "(K_ad)' = {:?} but (K')^co = {:?}",
            pc.indices(),
            co.indices()
        )));
    }
    Ok(pc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub symmetric: bool,
    pub isotropic: bool,
    /// For pointed data: Lagrangian subgroups of the underlying pre-metric
    /// group lying in `K`, as sorted element indices.
    pub lagrangian_pointed: Option<Vec<Vec<usize>>>,
}

pub fn symmetric_and_isotropic(
    d: &PreModularDatum,
    k: &FusionSubring,
    limits: &Limits,
) -> Result<SymmetryReport> {
    let idx = k.indices();
    let symmetric = idx.iter().all(|&x| idx.iter().all(|&y| d.centralizes(x, y)));
    let isotropic = symmetric && idx.iter().all(|&x| d.theta[x].is_zero());
    let lagrangian_pointed = match &d.pointed {
        None => None,
        Some(m) => Some(
            isotropic_subgroups(m, limits)?
                .into_iter()
                .filter(|s| s.lagrangian && s.subgroup.indices().iter().all(|&i| k.contains(i)))
                .map(|s| s.subgroup.indices().to_vec())
                .collect(),
        ),
    };
    Ok(SymmetryReport {
        symmetric,
        isotropic,
        lagrangian_pointed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub tau_plus: CycloNum,
    pub tau_minus: CycloNum,
    /// `τ+/τ-`, absent when `τ- = 0`.
    pub charge_sq: Option<CycloNum>,
    pub dim_total: CycloNum,
    pub nondegenerate: bool,
    pub checks: Vec<Check>,
}

/// Gauss sums and the identities they satisfy, the subring ones over the
/// whole subring lattice.
pub fn gauss_and_charge(d: &PreModularDatum, limits: &Limits) -> Result<InvariantReport> {
    let f = &d.field;
    let r = d.rank();
    let whole = d.whole();
    let tp = d.z_tau(&whole, 1);
    let tm = d.z_tau(&whole, -1);
    let dim_total = d.dim_of(&whole);
    let (tau_plus, tau_minus) = (d.num(&tp), d.num(&tm));
    let charge_sq = tau_plus.div(&tau_minus).ok();
    let nondegenerate = is_nondegenerate(d)?;
    let mut checks = Vec::new();

    checks.push(Check::new(
        "conjugate_gauss_sums",
        "τ- = conj(τ+)",
        tau_minus == tau_plus.conj(),
        format!("τ+ = {tau_plus}, τ- = {tau_minus}"),
    ));
    for y in 0..r {
        let lhs = d.z_sum((0..r).map(|x| {
            let t = f.z_mul(&d.th[x], &d.d[x]);
            f.z_mul(&t, d.s_z(x, y))
        }));
        let t = f.z_mul(&d.d[y], &f.z_root(-d.theta[y]));
        let rhs = f.z_mul(&t, &tp);
        checks.push(z_eq_check(
            d,
            &format!("twisted_row_sum[{}]", d.ring.label(y)),
            "Σ_X θ_X d(X) s_XY = d(Y) θ_Y^-1 τ+",
            lhs,
            rhs,
        ));
    }
    let lattice = all_subrings(&d.ring, limits)?;
    for k in &lattice.subrings {
        let kp = centralizer_set(d, k);
        for (sign, name) in [(1i64, "+"), (-1, "-")] {
            let lhs = f.z_mul(&d.z_tau(&whole, sign), &d.z_tau(k, -sign));
            let rhs = f.z_mul(&d.z_dim(k), &d.z_tau(&kp, sign));
            checks.push(z_eq_check(
                d,
                &format!("gauss_multiplicativity{name}{:?}", k.indices()),
                "τ±(C)·τ∓(D) = dim(D)·τ±(D')",
                lhs,
                rhs,
            ));
        }
    }
    if nondegenerate {
        checks.push(Check::new(
            "gauss_norm",
            "τ+·τ- = dim(C)",
            &tau_plus * &tau_minus == dim_total,
            format!("{} vs {}", &tau_plus * &tau_minus, dim_total),
        ));
        let root = charge_sq.as_ref().and_then(CycloNum::is_root_of_unity);
        checks.push(Check::new(
            "central_charge_root_of_unity",
            "τ+/τ- is a root of unity",
            root.is_some(),
            match (&charge_sq, root) {
                (Some(c), Some(r)) => format!("τ+/τ- = {c} = e(2πi·{r})"),
                (Some(c), None) => format!("τ+/τ- = {c}"),
                (None, _) => "τ- = 0".into(),
            },
        ));
        for k in &lattice.subrings {
            if !symmetric_and_isotropic(d, k, limits)?.isotropic {
                continue;
            }
            let kp = centralizer_set(d, k);
            for sign in [1i64, -1] {
                checks.push(z_eq_check(
                    d,
                    &format!("isotropic_centralizer_gauss{:?}", k.indices()),
                    "τ±(E') = τ±(C) for isotropic E",
                    d.z_tau(&kp, sign),
                    d.z_tau(&whole, sign),
                ));
            }
        }
    }
    Ok(InvariantReport {
        tau_plus,
        tau_minus,
        charge_sq,
        dim_total,
        nondegenerate,
        checks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfpReport {
    /// Square-free representative of `x_C`.
    pub x_class: u64,
    pub t_plus: CycloNum,
    pub t_minus: CycloNum,
    /// Basis elements in the `x_C` component with their integer weights
    /// `FPdim(X)/√n`.
    pub weights: Vec<(usize, u64)>,
}

/// The class `x_C` and the Gauss-Frobenius-Perron sums
/// `T± = Σ (FPdim(X)/√n) θ_X^{±1} d(X)` over `X` with `FPdim(X)² ∈ n·Z²`.
///
/// `x_C` solves `<a, x> = θ_a d(a)` for `a` in the centralizer of the
/// integral part, with `<a, deg X> = s̃_aX`.
pub fn gfp_invariants(d: &PreModularDatum, tolerance: f64) -> Result<GfpReport> {
    if !is_nondegenerate(d)? {
        return Err(Error::Degenerate);
    }
    let ring = &d.ring;
    let fp = fp_dims(ring, tolerance)?;
    let squares = fp_squares(ring, &fp)?;
    let grading = fp_square_grading(ring, &fp)?;
    let a = centralizer_set(d, &grading.trivial_component());
    let mut chi = Vec::new();
    for &x in a.indices() {
        let c = &CycloNum::root(d.theta[x]) * &d.dim[x];
        match c.as_integer() {
            Some(v) if v == 1.into() || v == (-1).into() => chi.push(c),
            _ => {
                return Err(Error::ClassificationBug(format!(
                    "θ d = {c} at {} is not ±1",
                    ring.label(x)
                )))
            }
        }
    }
    let classes: BTreeSet<usize> = grading.deg.iter().copied().collect();
    let mut solutions = Vec::new();
    for &gamma in &classes {
        let members: Vec<usize> = (0..d.rank()).filter(|&x| grading.deg[x] == gamma).collect();
        let mut ok = true;
        for (i, &x) in a.indices().iter().enumerate() {
            let first = d.s_tilde(x, members[0]);
            if members.iter().any(|&y| d.s_tilde(x, y) != first) {
                return Err(Error::ClassificationBug(format!(
                    "{} pairs inconsistently with a square class",
                    ring.label(x)
                )));
            }
            ok &= first == chi[i];
        }
        if ok {
            solutions.push(members[0]);
        }
    }
    let [rep] = solutions[..] else {
        return Err(Error::ClassificationBug(format!(
            "{} solutions for x_C",
            solutions.len()
        )));
    };
    let n = squarefree_part(squares[rep]);
    let mut weights = Vec::new();
    for x in 0..d.rank() {
        if squarefree_part(squares[x]) == n {
            weights.push((x, (squares[x] / n).sqrt()));
        }
    }
    let t = |sign: i64| {
        weights.iter().fold(CycloNum::zero(), |acc, &(x, w)| {
            let term = &CycloNum::root(d.theta[x].scale(sign)) * &d.dim[x];
            &acc + &(&CycloNum::from_int(w as i64) * &term)
        })
    };
    let (t_plus, t_minus) = (t(1), t(-1));
    if t_minus != t_plus.conj() {
        return Err(Error::ClassificationBug(format!(
            "T- = {t_minus} is not the conjugate of T+ = {t_plus}"
        )));
    }
    Ok(GfpReport {
        x_class: n,
        t_plus,
        t_minus,
        weights,
    })
}

/// Whether `a ↦ (s̃_{a,X_c})_c`, with `X_c` a representative of each
/// component `c` of the universal grading, is injective on invertibles.
pub fn pairing_is_injective(d: &PreModularDatum, limits: &Limits) -> Result<bool> {
    let grading = universal_grading(&d.ring, limits)?;
    let mut reps: Vec<usize> = Vec::new();
    let mut seen = BTreeSet::new();
    for x in 0..d.rank() {
        if seen.insert(grading.deg[x]) {
            reps.push(x);
        }
    }
    let rows: Vec<Vec<CycloNum>> = pointed_part(&d.ring)
        .indices()
        .iter()
        .map(|&a| reps.iter().map(|&x| d.s_tilde(a, x)).collect())
        .collect();
    Ok((0..rows.len()).all(|i| (0..i).all(|j| rows[i] != rows[j])))
}

/// The subring of the group ring attached to a subgroup.
pub fn subgroup_subring(d: &PreModularDatum, h: &Subgroup) -> Result<FusionSubring> {
    FusionSubring::from_indices(&d.ring, h.indices())
}
