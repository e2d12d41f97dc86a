//! Finite abelian groups in invariant-factor form, their elements,
//! subgroups, quotients and automorphisms.
//!
//! Elements are residue vectors. Each group fixes a mixed-radix indexing
//! with the last coordinate varying fastest, so index order is the
//! lexicographic order on coordinates and most algorithms run on indices.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::rational::lcm;
use crate::snf::Presentation;
use crate::{Error, Limits, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbGroup {
    orders: Vec<u64>,
    order: u64,
    strides: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<u64>);

impl GroupElement {
    pub fn new(coords: Vec<u64>) -> Self {
        GroupElement(coords)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FinAbGroup {
    /// Accepts only invariant-factor form; use [`canonical_form`] for other
    /// presentations.
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if let Some(&n) = orders.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidPresentation(format!("cyclic factor of order {n}")));
        }
        if orders.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidPresentation(format!(
                "{orders:?} is not a divisibility chain"
            )));
        }
        Ok(Self::from_chain(orders))
    }

    fn from_chain(orders: Vec<u64>) -> Self {
        let mut strides = vec![1u64; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1];
        }
        let order = orders.iter().product();
        FinAbGroup {
            orders,
            order,
            strides,
        }
    }

    pub fn trivial() -> Self {
        Self::from_chain(Vec::new())
    }

    pub fn cyclic(n: u64) -> Self {
        if n <= 1 {
            Self::trivial()
        } else {
            Self::from_chain(vec![n])
        }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn size(&self) -> usize {
        self.order as usize
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    pub fn is_element(&self, g: &GroupElement) -> bool {
        g.0.len() == self.rank() && g.0.iter().zip(&self.orders).all(|(c, n)| c < n)
    }

    pub fn index(&self, g: &GroupElement) -> usize {
        self.index_of(&g.0)
    }

    pub fn index_of(&self, coords: &[u64]) -> usize {
        coords
            .iter()
            .zip(&self.strides)
            .map(|(c, s)| c * s)
            .sum::<u64>() as usize
    }

    pub fn coords(&self, idx: usize) -> Vec<u64> {
        let idx = idx as u64;
        self.orders
            .iter()
            .zip(&self.strides)
            .map(|(n, s)| (idx / s) % n)
            .collect()
    }

    pub fn element(&self, idx: usize) -> GroupElement {
        GroupElement(self.coords(idx))
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.size()).map(|i| self.element(i))
    }

    /// Index of the `j`-th standard generator.
    pub fn generator(&self, j: usize) -> usize {
        self.strides[j] as usize
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((x, y), n)| (x + y) % n)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&self.orders)
                .map(|(x, n)| (n - x) % n)
                .collect(),
        )
    }

    pub fn mul(&self, k: i64, a: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&self.orders)
                .map(|(&x, &n)| (k.rem_euclid(n as i64) as u64 * x) % n)
                .collect(),
        )
    }

    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        let (a, b) = (a as u64, b as u64);
        let mut out = 0;
        for (n, s) in self.orders.iter().zip(&self.strides) {
            out += ((a / s + b / s) % n) * s;
        }
        out as usize
    }

    pub fn neg_idx(&self, a: usize) -> usize {
        let a = a as u64;
        let mut out = 0;
        for (n, s) in self.orders.iter().zip(&self.strides) {
            out += ((n - (a / s) % n) % n) * s;
        }
        out as usize
    }

    pub fn sub_idx(&self, a: usize, b: usize) -> usize {
        self.add_idx(a, self.neg_idx(b))
    }

    pub fn mul_idx(&self, k: i64, a: usize) -> usize {
        let a = a as u64;
        let mut out = 0;
        for (&n, s) in self.orders.iter().zip(&self.strides) {
            out += ((k.rem_euclid(n as i64) as u64 * ((a / s) % n)) % n) * s;
        }
        out as usize
    }

    pub fn order_of_idx(&self, a: usize) -> u64 {
        self.coords(a)
            .iter()
            .zip(&self.orders)
            .map(|(&c, &n)| n / crate::rational::gcd(c, n))
            .fold(1, lcm)
    }

    pub fn order_of(&self, g: &GroupElement) -> u64 {
        self.order_of_idx(self.index(g))
    }

    /// Elements annihilated by some power of `p`.
    pub fn sylow(&self, p: u64) -> Subgroup {
        let mut pk = 1;
        while self.exponent() % (pk * p) == 0 {
            pk *= p;
        }
        let members = (0..self.size())
            .filter(|&i| pk % self.order_of_idx(i) == 0)
            .collect();
        Subgroup::from_sorted(self.clone(), members)
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "0");
        }
        for (i, n) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z/{n}")?;
        }
        Ok(())
    }
}

/// A subgroup, stored as the sorted list of member indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent: FinAbGroup,
    members: Vec<usize>,
    generators: Vec<usize>,
}

// Adds the cyclic group generated by `g` to the sorted set `members`.
fn join_cyclic(g: &FinAbGroup, members: &[usize], x: usize, mark: &mut [bool]) -> Vec<usize> {
    for &m in members {
        mark[m] = true;
    }
    let mut out = members.to_vec();
    let mut shift = x;
    while !mark[shift] {
        for &m in members {
            let y = g.add_idx(m, shift);
            mark[y] = true;
            out.push(y);
        }
        shift = g.add_idx(shift, x);
    }
    for &m in &out {
        mark[m] = false;
    }
    out.sort_unstable();
    out
}

fn minimal_generators(g: &FinAbGroup, members: &[usize]) -> Vec<usize> {
    let mut mark = vec![false; g.size()];
    let mut span = vec![0usize];
    let mut gens = Vec::new();
    while span.len() < members.len() {
        for &m in &span {
            mark[m] = true;
        }
        let mut best = (0u64, usize::MAX);
        for &x in members {
            let mut k = 1;
            let mut y = x;
            while !mark[y] {
                y = g.add_idx(y, x);
                k += 1;
            }
            if k > best.0 {
                best = (k, x);
            }
        }
        for &m in &span {
            mark[m] = false;
        }
        gens.push(best.1);
        span = join_cyclic(g, &span, best.1, &mut mark);
    }
    gens
}

impl Subgroup {
    fn from_sorted(parent: FinAbGroup, members: Vec<usize>) -> Self {
        let generators = minimal_generators(&parent, &members);
        Subgroup {
            parent,
            members,
            generators,
        }
    }

    pub fn trivial(g: &FinAbGroup) -> Self {
        Subgroup {
            parent: g.clone(),
            members: vec![0],
            generators: Vec::new(),
        }
    }

    pub fn full(g: &FinAbGroup) -> Self {
        Self::from_sorted(g.clone(), (0..g.size()).collect())
    }

    /// Subgroup generated by the given element indices.
    pub fn generated_by(g: &FinAbGroup, gens: &[usize]) -> Self {
        let mut mark = vec![false; g.size()];
        let mut members = vec![0];
        for &x in gens {
            if members.binary_search(&x).is_err() {
                members = join_cyclic(g, &members, x, &mut mark);
            }
        }
        Self::from_sorted(g.clone(), members)
    }

    pub fn generated(g: &FinAbGroup, gens: &[GroupElement]) -> Self {
        let idx: Vec<usize> = gens.iter().map(|x| g.index(x)).collect();
        Self::generated_by(g, &idx)
    }

    /// Validates that the indices form a subgroup.
    pub fn from_indices(g: &FinAbGroup, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) {
            return Err(Error::NotASubgroup("missing zero".into()));
        }
        if let Some(&bad) = members.iter().find(|&&m| m >= g.size()) {
            return Err(Error::NotASubgroup(format!("index {bad} out of range")));
        }
        for &a in &members {
            for &b in &members {
                if members.binary_search(&g.sub_idx(a, b)).is_err() {
                    return Err(Error::NotASubgroup(format!(
                        "{} - {} not in the set",
                        g.element(a),
                        g.element(b)
                    )));
                }
            }
        }
        Ok(Self::from_sorted(g.clone(), members))
    }

    pub fn parent(&self) -> &FinAbGroup {
        &self.parent
    }

    pub fn indices(&self) -> &[usize] {
        &self.members
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        self.members.iter().map(|&i| self.parent.element(i)).collect()
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        self.generators
            .iter()
            .map(|&i| self.parent.element(i))
            .collect()
    }

    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains_idx(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.parent.is_element(g) && self.contains_idx(self.parent.index(g))
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains_idx(m))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&m| other.contains_idx(m))
            .collect();
        Self::from_sorted(self.parent.clone(), members)
    }

    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(&other.generators);
        Self::generated_by(&self.parent, &gens)
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Size first, then the sorted element list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.members.len(), &self.members).cmp(&(other.members.len(), &other.members))
    }
}

/// All subgroups, sorted by size and then by element list.
pub fn subgroups(g: &FinAbGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    if g.order() > limits.enum_guard {
        return Err(Error::EnumerationLimit {
            what: "subgroup enumeration",
            size: g.order(),
            limit: limits.enum_guard,
        });
    }
    let mut mark = vec![false; g.size()];
    let mut cyclic: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut seen_cyclic = BTreeSet::new();
    for x in 0..g.size() {
        let c = join_cyclic(g, &[0], x, &mut mark);
        if seen_cyclic.insert(c.clone()) {
            cyclic.push((x, c));
        }
    }
    let mut all: BTreeSet<Vec<usize>> = seen_cyclic;
    let mut frontier: Vec<Vec<usize>> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for (x, _) in &cyclic {
                if h.binary_search(x).is_ok() {
                    continue;
                }
                let j = join_cyclic(g, h, *x, &mut mark);
                if all.insert(j.clone()) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subgroup> = all
        .into_iter()
        .map(|m| Subgroup::from_sorted(g.clone(), m))
        .collect();
    out.sort();
    Ok(out)
}

/// A homomorphism out of `Z/n_1 x ... x Z/n_k` (the source presentation),
/// given by the images of the standard generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHom {
    source: Vec<u64>,
    target: FinAbGroup,
    images: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: Vec<u64>, target: FinAbGroup, images: Vec<GroupElement>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::WrongArity {
                expected: source.len(),
                found: images.len(),
            });
        }
        let mut idx = Vec::with_capacity(images.len());
        for (&n, x) in source.iter().zip(&images) {
            if !target.is_element(x) {
                return Err(Error::InvalidPresentation(format!("{x} is not in {target}")));
            }
            if target.mul(n as i64, x) != target.zero() {
                return Err(Error::InvalidPresentation(format!(
                    "image {x} of a generator of order {n} is not killed by {n}"
                )));
            }
            idx.push(target.index(x));
        }
        Ok(GroupHom {
            source,
            target,
            images: idx,
        })
    }

    pub(crate) fn from_indices(source: Vec<u64>, target: FinAbGroup, images: Vec<usize>) -> Self {
        GroupHom {
            source,
            target,
            images,
        }
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        GroupHom {
            source: g.orders.clone(),
            target: g.clone(),
            images: (0..g.rank()).map(|j| g.generator(j)).collect(),
        }
    }

    pub fn source_orders(&self) -> &[u64] {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn images(&self) -> Vec<GroupElement> {
        self.images.iter().map(|&i| self.target.element(i)).collect()
    }

    pub fn image_indices(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, coords: &[u64]) -> GroupElement {
        self.target.element(self.apply_coords(coords))
    }

    pub fn apply_coords(&self, coords: &[u64]) -> usize {
        let mut acc = 0;
        for (&c, &img) in coords.iter().zip(&self.images) {
            acc = self.target.add_idx(acc, self.target.mul_idx(c as i64, img));
        }
        acc
    }

    /// Applies the map to an element of `source`, which must have the
    /// source presentation's orders.
    pub fn apply_idx(&self, source: &FinAbGroup, i: usize) -> usize {
        self.apply_coords(&source.coords(i))
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom> {
        if first.target.orders != self.source {
            return Err(Error::InvalidPresentation(
                "composition of incompatible maps".into(),
            ));
        }
        let images = first
            .images
            .iter()
            .map(|&i| self.apply_idx(&first.target, i))
            .collect();
        Ok(GroupHom {
            source: first.source.clone(),
            target: self.target.clone(),
            images,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target.orders
            && self
                .images
                .iter()
                .enumerate()
                .all(|(j, &i)| i == self.target.generator(j))
    }

    /// Full table of images for a source given in invariant form.
    pub fn table(&self, source: &FinAbGroup) -> Vec<usize> {
        (0..source.size()).map(|i| self.apply_idx(source, i)).collect()
    }
}

/// Invariant-factor form of `Z/a_1 x ... x Z/a_k`, with the isomorphism
/// from the given presentation.
pub fn canonical_form(orders: &[u64]) -> Result<(FinAbGroup, GroupHom)> {
    if let Some(&n) = orders.iter().find(|&&n| n < 2) {
        return Err(Error::InvalidPresentation(format!("cyclic factor of order {n}")));
    }
    let k = orders.len();
    let rels = (0..k).map(|j| {
        let mut r = vec![0i64; k];
        r[j] = orders[j] as i64;
        r
    });
    let modulus = orders.iter().copied().fold(1, lcm);
    let p = Presentation::new(k, rels, modulus);
    let target = FinAbGroup::from_chain(p.invariants.clone());
    let images = (0..k)
        .map(|j| {
            let mut e = vec![0i64; k];
            e[j] = 1;
            target.index_of(&p.project(&e))
        })
        .collect();
    Ok((
        target.clone(),
        GroupHom::from_indices(orders.to_vec(), target, images),
    ))
}

/// `G/H` in canonical form with the projection.
pub fn quotient(g: &FinAbGroup, h: &Subgroup) -> Result<(FinAbGroup, GroupHom)> {
    if h.parent() != g {
        return Err(Error::NotASubgroup("subgroup of a different group".into()));
    }
    let k = g.rank();
    let mut rels: Vec<Vec<i64>> = (0..k)
        .map(|j| {
            let mut r = vec![0i64; k];
            r[j] = g.orders[j] as i64;
            r
        })
        .collect();
    for &x in h.generator_indices() {
        rels.push(g.coords(x).into_iter().map(|c| c as i64).collect());
    }
    let p = Presentation::new(k, rels, g.exponent());
    let target = FinAbGroup::from_chain(p.invariants.clone());
    let images = (0..k)
        .map(|j| {
            let mut e = vec![0i64; k];
            e[j] = 1;
            target.index_of(&p.project(&e))
        })
        .collect();
    Ok((
        target.clone(),
        GroupHom::from_indices(g.orders.clone(), target, images),
    ))
}

/// Recognizes a finite abelian group given by its Cayley table on
/// `0..n`, returning the group and where each element goes.
pub fn from_cayley_table(table: &[Vec<usize>], identity: usize) -> Result<(FinAbGroup, Vec<usize>)> {
    let n = table.len();
    let bad = |what: String| Err(Error::InvalidPresentation(what));
    if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return bad("Cayley table is not square".into());
    }
    for a in 0..n {
        if table[identity][a] != a {
            return bad(format!("{identity} is not an identity"));
        }
        if !(0..n).any(|b| table[a][b] == identity) {
            return bad(format!("{a} has no inverse"));
        }
        for b in 0..n {
            if table[a][b] != table[b][a] {
                return bad(format!("{a} and {b} do not commute"));
            }
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return bad(format!("({a}{b}){c} differs from {a}({b}{c})"));
                }
            }
        }
    }
    let mut rels = Vec::new();
    let mut unit = vec![0i64; n];
    unit[identity] = 1;
    rels.push(unit);
    for a in 0..n {
        for b in a..n {
            let mut r = vec![0i64; n];
            r[a] += 1;
            r[b] += 1;
            r[table[a][b]] -= 1;
            rels.push(r);
        }
    }
    let p = Presentation::new(n, rels, n as u64);
    let target = FinAbGroup::from_chain(p.invariants.clone());
    let map: Vec<usize> = (0..n)
        .map(|a| {
            let mut e = vec![0i64; n];
            e[a] = 1;
            target.index_of(&p.project(&e))
        })
        .collect();
    debug_assert_eq!(target.size(), n);
    Ok((target, map))
}

/// `K/H` for subgroups `H <= K` of `G`, in canonical form.
///
/// The returned table sends each index of `G` lying in `K` to its class in
/// the quotient and everything else to `usize::MAX`.
pub fn subquotient(k: &Subgroup, h: &Subgroup) -> Result<(FinAbGroup, Vec<usize>)> {
    let g = k.parent();
    if h.parent() != g || !h.is_subset_of(k) {
        return Err(Error::NotASubgroup("H is not contained in K".into()));
    }
    let gens = k.generator_indices();
    let d = gens.len();
    let ords: Vec<u64> = gens.iter().map(|&x| g.order_of_idx(x)).collect();
    let mut rels: Vec<Vec<i64>> = (0..d)
        .map(|j| {
            let mut r = vec![0i64; d];
            r[j] = ords[j] as i64;
            r
        })
        .collect();
    let mut coeff: Vec<Option<Vec<i64>>> = vec![None; g.size()];
    // Walk the coefficient box in mixed radix, tracking the running sum.
    let mut c = vec![0u64; d];
    let mut x = 0usize;
    loop {
        // dependent generators contribute relations that land on zero
        if h.contains_idx(x) && c.iter().any(|&v| v != 0) {
            rels.push(c.iter().map(|&v| v as i64).collect());
        }
        if coeff[x].is_none() {
            coeff[x] = Some(c.iter().map(|&v| v as i64).collect());
        }
        let mut j = d;
        loop {
            if j == 0 {
                break;
            }
            j -= 1;
            c[j] += 1;
            x = g.add_idx(x, gens[j]);
            if c[j] < ords[j] {
                break;
            }
            c[j] = 0;
            if j == 0 {
                j = usize::MAX;
                break;
            }
        }
        if j == usize::MAX || d == 0 {
            break;
        }
    }
    let modulus = ords.iter().copied().fold(1, lcm);
    let p = Presentation::new(d, rels, modulus);
    let target = FinAbGroup::from_chain(p.invariants.clone());
    let mut table = vec![usize::MAX; g.size()];
    for &m in k.indices() {
        let cm = coeff[m]
            .as_ref()
            .ok_or_else(|| Error::ClassificationBug("generator box missed an element".into()))?;
        table[m] = target.index_of(&p.project(cm));
    }
    Ok((target, table))
}

// Backtracking over images of the standard generators of `source`.
pub(crate) fn search_isomorphisms<F>(
    source: &FinAbGroup,
    target: &FinAbGroup,
    first_only: bool,
    mut accept: F,
) -> Vec<Vec<usize>>
where
    F: FnMut(usize, usize, &[usize]) -> bool,
{
    let mut found = Vec::new();
    if source.orders != target.orders {
        return found;
    }
    let k = source.rank();
    let by_order: Vec<Vec<usize>> = source
        .orders
        .iter()
        .map(|&n| {
            (0..target.size())
                .filter(|&x| target.order_of_idx(x) == n)
                .collect()
        })
        .collect();
    let mut mark = vec![false; target.size()];
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    let mut spans: Vec<Vec<usize>> = vec![vec![0]];
    let mut cursor: Vec<usize> = vec![0];
    let mut expected = vec![1u64; k + 1];
    for j in 0..k {
        expected[j + 1] = expected[j] * source.orders[j];
    }
    if k == 0 {
        found.push(Vec::new());
        return found;
    }
    loop {
        let depth = chosen.len();
        if depth == k {
            found.push(chosen.clone());
            if first_only {
                return found;
            }
            chosen.pop();
            spans.pop();
            cursor.pop();
            continue;
        }
        let cands = &by_order[depth];
        let mut advanced = false;
        while cursor[depth] < cands.len() {
            let x = cands[cursor[depth]];
            cursor[depth] += 1;
            if spans[depth].binary_search(&x).is_ok() {
                continue;
            }
            if !accept(depth, x, &chosen) {
                continue;
            }
            let s = join_cyclic(target, &spans[depth], x, &mut mark);
            if s.len() as u64 != expected[depth + 1] {
                continue;
            }
            chosen.push(x);
            spans.push(s);
            cursor.push(0);
            advanced = true;
            break;
        }
        if !advanced {
            if depth == 0 {
                return found;
            }
            chosen.pop();
            spans.pop();
            cursor.pop();
        }
    }
}

pub fn automorphisms(g: &FinAbGroup, limits: &Limits) -> Result<Vec<GroupHom>> {
    if g.order() > limits.aut_guard {
        return Err(Error::EnumerationLimit {
            what: "automorphism enumeration",
            size: g.order(),
            limit: limits.aut_guard,
        });
    }
    Ok(search_isomorphisms(g, g, false, |_, _, _| true)
        .into_iter()
        .map(|imgs| GroupHom::from_indices(g.orders.clone(), g.clone(), imgs))
        .collect())
}

/// Checks that a set of automorphisms is closed under composition and
/// inverses; returns a description of the first failure.
pub fn check_group_closure(g: &FinAbGroup, auts: &[GroupHom]) -> Option<String> {
    let set: BTreeSet<&[usize]> = auts.iter().map(|a| a.image_indices()).collect();
    if !auts.iter().any(GroupHom::is_identity) {
        return Some("identity missing".into());
    }
    for a in auts {
        let mut has_inverse = false;
        for b in auts {
            let ab = a.compose(b).ok()?;
            if !set.contains(ab.image_indices()) {
                return Some(format!("composite {:?} missing", ab.image_indices()));
            }
            has_inverse |= ab.is_identity();
        }
        if !has_inverse {
            return Some(format!("inverse of {:?} missing", a.image_indices()));
        }
    }
    let _ = g;
    None
}
