//! Fusion rings: based rings with non-negative structure constants.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::{from_cayley_table, FinAbGroup, GroupElement};
use crate::rational::{factor, squarefree_part};
use crate::{Error, Limits, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FusionRing {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    n: Vec<u32>,
}

impl FusionRing {
    /// `N[i][j][k]` is the multiplicity of `X_k` in `X_i ⊗ X_j`.
    pub fn validate(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        table: Vec<Vec<Vec<u32>>>,
    ) -> Result<Self> {
        let r = labels.len();
        let arity = |found: usize| Error::WrongArity { expected: r, found };
        if r == 0 {
            return Err(Error::InvalidPresentation("empty basis".into()));
        }
        if unit >= r {
            return Err(Error::UnitFail(format!("unit index {unit} out of range")));
        }
        if dual.len() != r {
            return Err(arity(dual.len()));
        }
        if table.len() != r {
            return Err(arity(table.len()));
        }
        let mut n = Vec::with_capacity(r * r * r);
        for row in &table {
            if row.len() != r {
                return Err(arity(row.len()));
            }
            for col in row {
                if col.len() != r {
                    return Err(arity(col.len()));
                }
                n.extend_from_slice(col);
            }
        }
        let ring = FusionRing { labels, unit, dual, n };
        ring.check_axioms()?;
        Ok(ring)
    }

    fn check_axioms(&self) -> Result<()> {
        let r = self.rank();
        let l = |i: usize| self.labels[i].as_str();
        let u = self.unit;
        for j in 0..r {
            for k in 0..r {
                let want = u32::from(j == k);
                if self.n(u, j, k) != want || self.n(j, u, k) != want {
                    return Err(Error::UnitFail(format!("1 ⊗ {0} or {0} ⊗ 1 at {1}", l(j), l(k))));
                }
            }
        }
        for x in 0..r {
            let d = self.dual[x];
            if d >= r || self.dual[d] != x {
                return Err(Error::DualityFail(format!("dual of {} is not an involution", l(x))));
            }
            for y in 0..r {
                if self.n(x, y, u) != u32::from(y == d) {
                    return Err(Error::DualityFail(format!("N[{}][{}][1]", l(x), l(y))));
                }
            }
        }
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    for v in 0..r {
                        let lhs: u64 = (0..r)
                            .map(|w| self.n(x, y, w) as u64 * self.n(w, z, v) as u64)
                            .sum();
                        let rhs: u64 = (0..r)
                            .map(|w| self.n(y, z, w) as u64 * self.n(x, w, v) as u64)
                            .sum();
                        if lhs != rhs {
                            return Err(Error::AssociativityFail(format!(
                                "({0} ⊗ {1}) ⊗ {2} has {4} copies of {3}, {0} ⊗ ({1} ⊗ {2}) has {5}",
                                l(x),
                                l(y),
                                l(z),
                                l(v),
                                lhs,
                                rhs
                            )));
                        }
                    }
                }
            }
        }
        let dl = &self.dual;
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    let a = self.n(x, y, z);
                    if a != self.n(dl[z], x, dl[y]) || a != self.n(y, dl[z], dl[x]) {
                        return Err(Error::FrobeniusFail(format!(
                            "N[{}][{}][{}]",
                            l(x),
                            l(y),
                            l(z)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The group ring of `G`, labelled by element coordinates.
    pub fn group_ring(g: &FinAbGroup) -> Self {
        let r = g.size();
        let mut n = vec![0; r * r * r];
        for a in 0..r {
            for b in 0..r {
                n[(a * r + b) * r + g.add_idx(a, b)] = 1;
            }
        }
        FusionRing {
            labels: (0..r).map(|i| g.element(i).to_string()).collect(),
            unit: 0,
            dual: (0..r).map(|i| g.neg_idx(i)).collect(),
            n,
        }
    }

    /// Basis `1, δ, X` with `δ⊗δ = 1`, `δ⊗X = X`, `X⊗X = 1 ⊕ δ`.
    pub fn ising() -> Self {
        let mut t = vec![vec![vec![0u32; 3]; 3]; 3];
        for j in 0..3 {
            t[0][j][j] = 1;
            t[j][0][j] = 1;
        }
        t[1][1][0] = 1;
        t[1][2][2] = 1;
        t[2][1][2] = 1;
        t[2][2][0] = 1;
        t[2][2][1] = 1;
        Self::validate(
            vec!["1".into(), "δ".into(), "X".into()],
            0,
            vec![0, 1, 2],
            t,
        )
        .expect("Ising fusion rules are valid")
    }

    /// The representation ring of `S_3`: `1`, `sgn`, `V` with `V⊗V = 1 ⊕ sgn ⊕ V`.
    pub fn s3_characters() -> Self {
        let mut t = vec![vec![vec![0u32; 3]; 3]; 3];
        for j in 0..3 {
            t[0][j][j] = 1;
            t[j][0][j] = 1;
        }
        t[1][1][0] = 1;
        t[1][2][2] = 1;
        t[2][1][2] = 1;
        t[2][2] = vec![1, 1, 1];
        Self::validate(
            vec!["1".into(), "sgn".into(), "V".into()],
            0,
            vec![0, 1, 2],
            t,
        )
        .expect("S3 character ring is valid")
    }

    /// Basis of pairs `(i, j)` at index `i·rank(b) + j`.
    pub fn product(a: &FusionRing, b: &FusionRing) -> Self {
        let (ra, rb) = (a.rank(), b.rank());
        let r = ra * rb;
        let mut n = vec![0; r * r * r];
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    n[(x * r + y) * r + z] =
                        a.n(x / rb, y / rb, z / rb) * b.n(x % rb, y % rb, z % rb);
                }
            }
        }
        let mut labels = Vec::with_capacity(r);
        for la in &a.labels {
            for lb in &b.labels {
                labels.push(format!("{la}⊠{lb}"));
            }
        }
        FusionRing {
            labels,
            unit: a.unit * rb + b.unit,
            dual: (0..r).map(|x| a.dual[x / rb] * rb + b.dual[x % rb]).collect(),
            n,
        }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        let r = self.rank();
        self.n[(i * r + j) * r + k]
    }

    pub fn table(&self) -> Vec<Vec<Vec<u32>>> {
        let r = self.rank();
        (0..r)
            .map(|i| (0..r).map(|j| (0..r).map(|k| self.n(i, j, k)).collect()).collect())
            .collect()
    }

    /// Basis elements occurring in `X_i ⊗ X_j`.
    pub fn constituents(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&k| self.n(i, j, k) > 0)
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| (0..r).all(|j| (0..r).all(|k| self.n(i, j, k) == self.n(j, i, k))))
    }

    pub fn is_invertible(&self, x: usize) -> bool {
        (0..self.rank()).all(|k| self.n(x, self.dual[x], k) == u32::from(k == self.unit))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FPData {
    pub fpdim: Vec<f64>,
    pub total: f64,
    pub tolerance: f64,
}

impl FPData {
    pub fn of(&self, s: &FusionSubring) -> f64 {
        s.indices.iter().map(|&i| self.fpdim[i] * self.fpdim[i]).sum()
    }
}

const POWER_TOL: f64 = 1e-12;
const POWER_CAP: usize = 100_000;

/// Perron eigenvalue of `v ↦ Σ_Y N[x][Y][·] v_Y` by power iteration on the
/// shifted matrix `M_x + I` from the all-ones vector, in the max norm.
fn perron(ring: &FusionRing, x: usize) -> Result<f64> {
    let r = ring.rank();
    let mut v = vec![1.0f64; r];
    let mut lambda = 0.0;
    for _ in 0..POWER_CAP {
        let mut w = v.clone();
        for y in 0..r {
            if v[y] == 0.0 {
                continue;
            }
            for z in 0..r {
                w[z] += ring.n(x, y, z) as f64 * v[y];
            }
        }
        let norm = w.iter().fold(0.0f64, |m, a| m.max(a.abs()));
        let next: Vec<f64> = w.iter().map(|a| a / norm).collect();
        let delta = next
            .iter()
            .zip(&v)
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        let settled = (norm - lambda).abs() < POWER_TOL && delta < POWER_TOL;
        lambda = norm;
        v = next;
        if settled {
            return Ok(lambda - 1.0);
        }
    }
    Err(Error::NumericalFail(format!(
        "power iteration for {} did not settle in {POWER_CAP} steps",
        ring.label(x)
    )))
}

pub fn fp_dims(ring: &FusionRing, tolerance: f64) -> Result<FPData> {
    let r = ring.rank();
    let fpdim = (0..r).map(|x| perron(ring, x)).collect::<Result<Vec<_>>>()?;
    for x in 0..r {
        if (fpdim[x] - fpdim[ring.dual(x)]).abs() > tolerance {
            return Err(Error::NumericalFail(format!("FPdim of {} and its dual", ring.label(x))));
        }
        for y in 0..r {
            let rhs: f64 = (0..r).map(|z| ring.n(x, y, z) as f64 * fpdim[z]).sum();
            if (fpdim[x] * fpdim[y] - rhs).abs() > tolerance * rhs.max(1.0) {
                return Err(Error::NumericalFail(format!(
                    "FPdim is not multiplicative on {} ⊗ {}",
                    ring.label(x),
                    ring.label(y)
                )));
            }
        }
    }
    let total = fpdim.iter().map(|d| d * d).sum();
    Ok(FPData {
        fpdim,
        total,
        tolerance,
    })
}

/// A fusion subring, as a sorted set of basis indices of its parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FusionSubring {
    indices: Vec<usize>,
}

impl FusionSubring {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &FusionSubring) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }

    pub fn intersection(&self, other: &FusionSubring) -> FusionSubring {
        FusionSubring {
            indices: self.indices.iter().copied().filter(|&i| other.contains(i)).collect(),
        }
    }

    pub fn whole(ring: &FusionRing) -> Self {
        FusionSubring {
            indices: (0..ring.rank()).collect(),
        }
    }

    pub fn trivial(ring: &FusionRing) -> Self {
        FusionSubring {
            indices: vec![ring.unit()],
        }
    }

    /// Checks that `indices` is a dual-closed subring.
    pub fn from_indices(ring: &FusionRing, indices: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = indices.iter().copied().collect();
        if set.iter().any(|&i| i >= ring.rank()) {
            return Err(Error::NotASubring("index out of range".into()));
        }
        let s = FusionSubring {
            indices: set.into_iter().collect(),
        };
        if subring_generated(ring, &s.indices)? != s {
            return Err(Error::NotASubring(format!("{:?} is not closed", s.indices)));
        }
        Ok(s)
    }
}

/// The smallest subring containing `gens`.
pub fn subring_generated(ring: &FusionRing, gens: &[usize]) -> Result<FusionSubring> {
    let mut set: BTreeSet<usize> = gens.iter().copied().collect();
    set.insert(ring.unit());
    if set.iter().any(|&i| i >= ring.rank()) {
        return Err(Error::NotASubring("index out of range".into()));
    }
    loop {
        let cur: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &x in &cur {
            for &y in &cur {
                set.extend(ring.constituents(x, y));
            }
        }
        if set.len() == before {
            break;
        }
    }
    if let Some(&x) = set.iter().find(|&&x| !set.contains(&ring.dual(x))) {
        return Err(Error::ClassificationBug(format!(
            "tensor closure is not closed under duals at {}",
            ring.label(x)
        )));
    }
    Ok(FusionSubring {
        indices: set.into_iter().collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubringLattice {
    /// Sorted by size, then indices.
    pub subrings: Vec<FusionSubring>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    /// Whether the modular law held on every triple; `None` for
    /// noncommutative rings, where it is not expected.
    pub modular: Option<bool>,
}

impl SubringLattice {
    pub fn position(&self, s: &FusionSubring) -> Option<usize> {
        self.subrings.iter().position(|t| t == s)
    }

    /// Triples `a ≤ c` with `a ∨ (b ∧ c) ≠ (a ∨ b) ∧ c`.
    pub fn modular_violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.subrings.len();
        let mut out = Vec::new();
        for a in 0..n {
            for c in 0..n {
                if !self.subrings[a].is_subset_of(&self.subrings[c]) {
                    continue;
                }
                for b in 0..n {
                    if self.join[a][self.meet[b][c]] != self.meet[self.join[a][b]][c] {
                        out.push((a, b, c));
                    }
                }
            }
        }
        out
    }
}

pub fn all_subrings(ring: &FusionRing, limits: &Limits) -> Result<SubringLattice> {
    if ring.rank() > limits.rank_guard {
        return Err(Error::EnumerationLimit {
            what: "subring enumeration",
            size: ring.rank() as u64,
            limit: limits.rank_guard as u64,
        });
    }
    let mut found: BTreeSet<FusionSubring> = BTreeSet::new();
    let start = FusionSubring::trivial(ring);
    found.insert(start.clone());
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for x in 0..ring.rank() {
                if s.contains(x) {
                    continue;
                }
                let mut gens = s.indices.clone();
                gens.push(x);
                let t = subring_generated(ring, &gens)?;
                if found.insert(t.clone()) {
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    let mut subrings: Vec<FusionSubring> = found.into_iter().collect();
    subrings.sort_by(|a, b| (a.len(), &a.indices).cmp(&(b.len(), &b.indices)));
    let index: BTreeMap<&FusionSubring, usize> =
        subrings.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let n = subrings.len();
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            meet[a][b] = index[&subrings[a].intersection(&subrings[b])];
            let mut u = subrings[a].indices.clone();
            u.extend_from_slice(&subrings[b].indices);
            join[a][b] = index[&subring_generated(ring, &u)?];
        }
    }
    let mut lattice = SubringLattice {
        subrings,
        meet,
        join,
        modular: None,
    };
    if ring.is_commutative() {
        lattice.modular = Some(lattice.modular_violations().is_empty());
    }
    Ok(lattice)
}

/// Generated by the constituents of `X ⊗ X*` over all `X` in `within`.
pub fn adjoint_of(ring: &FusionRing, within: &FusionSubring) -> Result<FusionSubring> {
    let gens: BTreeSet<usize> = within
        .indices()
        .iter()
        .flat_map(|&x| ring.constituents(x, ring.dual(x)))
        .collect();
    subring_generated(ring, &gens.into_iter().collect::<Vec<_>>())
}

pub fn adjoint_subring(ring: &FusionRing) -> Result<FusionSubring> {
    adjoint_of(ring, &FusionSubring::whole(ring))
}

/// `{X : X ⊗ X* ∈ K}` and the subring it generates.
pub fn commutator(ring: &FusionRing, k: &FusionSubring) -> Result<FusionSubring> {
    let gens: Vec<usize> = (0..ring.rank())
        .filter(|&x| ring.constituents(x, ring.dual(x)).all(|z| k.contains(z)))
        .collect();
    subring_generated(ring, &gens)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub group: FinAbGroup,
    /// Element index of the degree of each basis element.
    pub deg: Vec<usize>,
}

impl Grading {
    pub fn degree(&self, x: usize) -> GroupElement {
        self.group.element(self.deg[x])
    }

    pub fn is_faithful(&self) -> bool {
        let hit: BTreeSet<usize> = self.deg.iter().copied().collect();
        hit.len() == self.group.size()
    }

    /// Basis elements of degree zero.
    pub fn trivial_component(&self) -> FusionSubring {
        FusionSubring {
            indices: (0..self.deg.len()).filter(|&x| self.deg[x] == 0).collect(),
        }
    }

    /// A basis triple with `N > 0` whose degrees do not add up.
    pub fn violation(&self, ring: &FusionRing) -> Option<(usize, usize, usize)> {
        let r = ring.rank();
        for x in 0..r {
            for y in 0..r {
                for z in ring.constituents(x, y) {
                    if self.deg[z] != self.group.add_idx(self.deg[x], self.deg[y]) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }
}

/// Components are the classes of "`Y` occurs in `X ⊗ A` for some `A` in
/// the adjoint subring"; the group is their multiplication table.
pub fn universal_grading(ring: &FusionRing, limits: &Limits) -> Result<Grading> {
    if !ring.is_commutative() {
        return Err(Error::Unsupported(
            "universal grading of a noncommutative ring".into(),
        ));
    }
    if ring.rank() > limits.rank_guard {
        return Err(Error::EnumerationLimit {
            what: "universal grading",
            size: ring.rank() as u64,
            limit: limits.rank_guard as u64,
        });
    }
    let r = ring.rank();
    let ad = adjoint_subring(ring)?;
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for y in 0..r {
        for &a in ad.indices() {
            for z in ring.constituents(y, a).collect::<Vec<_>>() {
                let (ry, rz) = (find(&mut parent, y), find(&mut parent, z));
                if ry != rz {
                    parent[ry.max(rz)] = ry.min(rz);
                }
            }
        }
    }
    let mut class_of = vec![0; r];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..r {
        let root = find(&mut parent, x);
        match reps.iter().position(|&c| c == root) {
            Some(c) => class_of[x] = c,
            None => {
                class_of[x] = reps.len();
                reps.push(root);
            }
        }
    }
    let k = reps.len();
    let mut table = vec![vec![usize::MAX; k]; k];
    for x in 0..r {
        for y in 0..r {
            for z in ring.constituents(x, y) {
                let (cx, cy, cz) = (class_of[x], class_of[y], class_of[z]);
                if table[cx][cy] == usize::MAX {
                    table[cx][cy] = cz;
                } else if table[cx][cy] != cz {
                    return Err(Error::ClassificationBug(format!(
                        "{} ⊗ {} meets two components",
                        ring.label(x),
                        ring.label(y)
                    )));
                }
            }
        }
    }
    let (group, map) = from_cayley_table(&table, class_of[ring.unit()])
        .map_err(|e| Error::ClassificationBug(format!("components do not form a group: {e}")))?;
    let grading = Grading {
        group,
        deg: (0..r).map(|x| map[class_of[x]]).collect(),
    };
    if grading.trivial_component() != ad {
        return Err(Error::ClassificationBug(
            "trivial component differs from the adjoint subring".into(),
        ));
    }
    Ok(grading)
}

/// Invertible basis elements.
pub fn pointed_part(ring: &FusionRing) -> FusionSubring {
    FusionSubring {
        indices: (0..ring.rank()).filter(|&x| ring.is_invertible(x)).collect(),
    }
}

fn round_nonneg(x: f64) -> u64 {
    (x + 0.5) as u64
}

/// `round(FPdim(X)²)` for every `X`, after checking weak integrality.
pub fn fp_squares(ring: &FusionRing, fp: &FPData) -> Result<Vec<u64>> {
    let t = fp.tolerance;
    if (fp.total - round_nonneg(fp.total) as f64).abs() > t {
        return Err(Error::NotWeaklyIntegral(format!("FPdim = {}", fp.total)));
    }
    (0..ring.rank())
        .map(|x| {
            let sq = fp.fpdim[x] * fp.fpdim[x];
            let n = round_nonneg(sq);
            if (sq - n as f64).abs() > t {
                Err(Error::NumericalFail(format!(
                    "FPdim({})² = {sq} is not within {t} of an integer",
                    ring.label(x)
                )))
            } else {
                Ok(n)
            }
        })
        .collect()
}

/// Grading by the square-free part of `FPdim(X)²`, in the elementary
/// abelian 2-group with one factor per prime that occurs.
pub fn fp_square_grading(ring: &FusionRing, fp: &FPData) -> Result<Grading> {
    let parts: Vec<u64> = fp_squares(ring, fp)?
        .into_iter()
        .map(squarefree_part)
        .collect();
    let primes: Vec<u64> = parts
        .iter()
        .flat_map(|&s| factor(s).into_iter().map(|(p, _)| p))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let group = if primes.is_empty() {
        FinAbGroup::trivial()
    } else {
        FinAbGroup::new(vec![2; primes.len()])?
    };
    let deg = parts
        .iter()
        .map(|&s| {
            let c: Vec<u64> = primes.iter().map(|&p| u64::from(s % p == 0)).collect();
            group.index_of(&c)
        })
        .collect();
    let grading = Grading { group, deg };
    if let Some((x, y, z)) = grading.violation(ring) {
        return Err(Error::ClassificationBug(format!(
            "square classes do not grade {} ⊗ {} ∋ {}",
            ring.label(x),
            ring.label(y),
            ring.label(z)
        )));
    }
    Ok(grading)
}

/// Basis elements with integer FP dimension.
pub fn integral_part(ring: &FusionRing, fp: &FPData) -> Result<FusionSubring> {
    Ok(fp_square_grading(ring, fp)?.trivial_component())
}

/// The square-free integer labelling a degree of [`fp_square_grading`].
pub fn square_class_value(ring: &FusionRing, fp: &FPData, x: usize) -> Result<u64> {
    Ok(squarefree_part(fp_squares(ring, fp)?[x]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn validation_examples() {
        let ising = FusionRing::ising();
        assert_eq!(ising.rank(), 3);
        let z3 = FusionRing::group_ring(&FinAbGroup::cyclic(3));
        assert_eq!(z3.dual(1), 2);
        let mut t = ising.table();
        t[2][2][1] = 2;
        let err = FusionRing::validate(ising.labels().to_vec(), 0, vec![0, 1, 2], t).unwrap_err();
        assert!(matches!(err, Error::AssociativityFail(_)), "{err}");
        let mut t = ising.table();
        t[1][1][0] = 0;
        let err = FusionRing::validate(ising.labels().to_vec(), 0, vec![0, 1, 2], t).unwrap_err();
        assert!(matches!(err, Error::DualityFail(_)), "{err}");
        let err = FusionRing::validate(ising.labels().to_vec(), 1, vec![0, 1, 2], ising.table()).unwrap_err();
        assert!(matches!(err, Error::UnitFail(_)), "{err}");
    }

    #[test]
    fn fp_dimension_examples() {
        let fp = fp_dims(&FusionRing::ising(), 1e-6).unwrap();
        assert!((fp.fpdim[2] - 2f64.sqrt()).abs() < 1e-9);
        assert!((fp.total - 4.0).abs() < 1e-9);
        let fp = fp_dims(&FusionRing::s3_characters(), 1e-6).unwrap();
        assert!((fp.fpdim[2] - 2.0).abs() < 1e-9);
        assert!((fp.total - 6.0).abs() < 1e-9);
        let g = FinAbGroup::new(vec![2, 4]).unwrap();
        let fp = fp_dims(&FusionRing::group_ring(&g), 1e-6).unwrap();
        assert!(fp.fpdim.iter().all(|d| (d - 1.0).abs() < 1e-9));
    }

    #[test]
    fn subrings() {
        let ising = FusionRing::ising();
        assert_eq!(subring_generated(&ising, &[1]).unwrap().indices(), &[0, 1]);
        assert_eq!(subring_generated(&ising, &[2]).unwrap().len(), 3);
        assert_eq!(subring_generated(&ising, &[]).unwrap().indices(), &[0]);
        let l = all_subrings(&ising, &lim()).unwrap();
        assert_eq!(l.subrings.len(), 3);
        assert_eq!(l.modular, Some(true));
        let g = FinAbGroup::new(vec![2, 4]).unwrap();
        let l = all_subrings(&FusionRing::group_ring(&g), &lim()).unwrap();
        assert_eq!(l.subrings.len(), crate::abelian::subgroups(&g, &lim()).unwrap().len());
        assert_eq!(adjoint_subring(&ising).unwrap().indices(), &[0, 1]);
        assert_eq!(adjoint_subring(&FusionRing::s3_characters()).unwrap().len(), 3);
    }

    #[test]
    fn gradings() {
        let ising = FusionRing::ising();
        let u = universal_grading(&ising, &lim()).unwrap();
        assert_eq!(u.group.orders(), &[2]);
        assert_eq!(u.deg, vec![0, 0, 1]);
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let u = universal_grading(&FusionRing::group_ring(&g), &lim()).unwrap();
        assert_eq!(u.group, g);
        assert!(u.is_faithful());
        let u = universal_grading(&FusionRing::s3_characters(), &lim()).unwrap();
        assert!(u.group.is_trivial());

        let fp = fp_dims(&ising, 1e-6).unwrap();
        assert_eq!(pointed_part(&ising).indices(), &[0, 1]);
        assert_eq!(integral_part(&ising, &fp).unwrap().indices(), &[0, 1]);
        assert_eq!(square_class_value(&ising, &fp, 2).unwrap(), 2);
        let ii = FusionRing::product(&ising, &ising);
        let fp = fp_dims(&ii, 1e-6).unwrap();
        let int = integral_part(&ii, &fp).unwrap();
        assert_eq!(int.len(), 5);
        assert!((fp.of(&int) - 8.0).abs() < 1e-9);
    }
}
