//! Pre-metric groups: finite abelian groups with a quadratic form valued in
//! Q/Z, stored additively (the value r stands for e^{2πi r}).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::abelian::{
    canonical_form, search_isomorphisms, subgroups, subquotient, FinAbGroup, GroupElement,
    GroupHom, Subgroup,
};
use crate::cyclotomic::RootExp;
use crate::rational::{gcd, is_square_mod, least_nonresidue, primes_of};
use crate::{Error, Limits, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PreMetricGroup {
    group: FinAbGroup,
    q: Vec<RootExp>,
}

impl PreMetricGroup {
    /// Checks normalization, evenness and biadditivity of the polarization.
    pub fn validate(group: FinAbGroup, values: Vec<RootExp>) -> Result<Self> {
        if values.len() != group.size() {
            return Err(Error::WrongArity {
                expected: group.size(),
                found: values.len(),
            });
        }
        if !values[0].is_zero() {
            return Err(Error::NotNormalized(values[0].to_string()));
        }
        for i in 0..group.size() {
            if values[group.neg_idx(i)] != values[i] {
                return Err(Error::NotEven(group.element(i).to_string()));
            }
        }
        let m = PreMetricGroup { group, q: values };
        let g = &m.group;
        for j in 0..g.rank() {
            let e = g.generator(j);
            for x in 0..g.size() {
                let xe = g.add_idx(x, e);
                for y in 0..g.size() {
                    if m.b_idx(xe, y) != m.b_idx(x, y) + m.b_idx(e, y) {
                        return Err(Error::NotQuadratic(format!(
                            "b({} + {}, {})",
                            g.element(x),
                            g.element(e),
                            g.element(y)
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn from_fn<F: Fn(&[u64]) -> RootExp>(group: FinAbGroup, f: F) -> Result<Self> {
        let values = (0..group.size()).map(|i| f(&group.coords(i))).collect();
        Self::validate(group, values)
    }

    pub(crate) fn new_unchecked(group: FinAbGroup, q: Vec<RootExp>) -> Self {
        PreMetricGroup { group, q }
    }

    pub fn trivial() -> Self {
        PreMetricGroup {
            group: FinAbGroup::trivial(),
            q: vec![RootExp::zero()],
        }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    /// Value table in lexicographic element order.
    pub fn values(&self) -> &[RootExp] {
        &self.q
    }

    pub fn q(&self, g: &GroupElement) -> RootExp {
        self.q[self.group.index(g)]
    }

    pub fn q_idx(&self, i: usize) -> RootExp {
        self.q[i]
    }

    pub fn b_idx(&self, i: usize, j: usize) -> RootExp {
        self.q[self.group.add_idx(i, j)] - self.q[i] - self.q[j]
    }

    pub fn b(&self, g: &GroupElement, h: &GroupElement) -> RootExp {
        self.b_idx(self.group.index(g), self.group.index(h))
    }

    pub fn negate(&self) -> Self {
        PreMetricGroup {
            group: self.group.clone(),
            q: self.q.iter().map(|&r| -r).collect(),
        }
    }

    pub fn is_metric(&self) -> bool {
        radical(self).is_trivial()
    }

    pub fn is_anisotropic(&self) -> bool {
        self.q.iter().skip(1).all(|r| !r.is_zero())
    }

    pub fn is_isotropic(&self, h: &Subgroup) -> bool {
        h.indices().iter().all(|&i| self.q[i].is_zero())
    }
}

impl fmt::Display for PreMetricGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, [", self.group)?;
        for (i, r) in self.q.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "])")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    group: FinAbGroup,
    table: Vec<RootExp>,
}

impl Bicharacter {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn get(&self, i: usize, j: usize) -> RootExp {
        self.table[i * self.group.size() + j]
    }

    pub fn value(&self, g: &GroupElement, h: &GroupElement) -> RootExp {
        self.get(self.group.index(g), self.group.index(h))
    }
}

pub fn bicharacter(m: &PreMetricGroup) -> Bicharacter {
    let n = m.group.size();
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(m.b_idx(i, j));
        }
    }
    Bicharacter {
        group: m.group.clone(),
        table,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DegeneracyTag {
    Nondegenerate,
    SlightlyDegenerate,
    DegenerateOther,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyClass {
    pub tag: DegeneracyTag,
    pub radical: Subgroup,
}

pub fn radical(m: &PreMetricGroup) -> Subgroup {
    orthogonal_complement(m, &Subgroup::full(&m.group))
}

pub fn degeneracy(m: &PreMetricGroup) -> DegeneracyClass {
    let radical = radical(m);
    let half = RootExp::new(1, 2);
    let tag = match radical.order() {
        1 => DegeneracyTag::Nondegenerate,
        2 if m.q[radical.indices()[1]] == half => DegeneracyTag::SlightlyDegenerate,
        _ => DegeneracyTag::DegenerateOther,
    };
    DegeneracyClass { tag, radical }
}

/// `{g : b(g, h) = 0 for all h in H}`.
pub fn orthogonal_complement(m: &PreMetricGroup, h: &Subgroup) -> Subgroup {
    let g = &m.group;
    let gens = h.generator_indices();
    let members: Vec<usize> = (0..g.size())
        .filter(|&x| gens.iter().all(|&y| m.b_idx(x, y).is_zero()))
        .collect();
    Subgroup::from_indices(g, members).expect("orthogonal complement is a subgroup")
}

/// `q` restricted to `H`, transported to the invariant-factor form of `H`.
/// The table sends indices of `G` in `H` to indices of the new group.
pub fn restrict_with_map(m: &PreMetricGroup, h: &Subgroup) -> (PreMetricGroup, Vec<usize>) {
    let zero = Subgroup::trivial(&m.group);
    let (grp, table) = subquotient(h, &zero).expect("trivial subgroup lies in H");
    let mut q = vec![RootExp::zero(); grp.size()];
    for &x in h.indices() {
        q[table[x]] = m.q[x];
    }
    (PreMetricGroup::new_unchecked(grp, q), table)
}

pub fn restrict(m: &PreMetricGroup, h: &Subgroup) -> PreMetricGroup {
    restrict_with_map(m, h).0
}

/// Orthogonal direct sum.
pub fn direct_sum(m1: &PreMetricGroup, m2: &PreMetricGroup) -> PreMetricGroup {
    let mut pres: Vec<u64> = m1.group.orders().to_vec();
    pres.extend_from_slice(m2.group.orders());
    let (grp, hom) = canonical_form(&pres).expect("orders of valid groups are >= 2");
    let mut q = vec![RootExp::zero(); grp.size()];
    for a in 0..m1.group.size() {
        let ca = m1.group.coords(a);
        for b in 0..m2.group.size() {
            let mut c = ca.clone();
            c.extend(m2.group.coords(b));
            q[hom.apply_coords(&c)] = m1.q[a] + m2.q[b];
        }
    }
    PreMetricGroup::new_unchecked(grp, q)
}

/// The sum of `k` copies of `m`.
pub fn direct_power(m: &PreMetricGroup, k: usize) -> PreMetricGroup {
    (0..k).fold(PreMetricGroup::trivial(), |acc, _| direct_sum(&acc, m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropicSubgroup {
    pub subgroup: Subgroup,
    pub maximal: bool,
    pub lagrangian: bool,
}

/// All isotropic subgroups, sorted like [`subgroups`].
///
/// Isotropic subgroups are generated by isotropic elements, so the layered
/// closure only ever joins isotropic cyclic subgroups.
pub fn isotropic_subgroups(m: &PreMetricGroup, limits: &Limits) -> Result<Vec<IsotropicSubgroup>> {
    let g = &m.group;
    if g.order() > limits.enum_guard {
        return Err(Error::EnumerationLimit {
            what: "isotropic subgroup enumeration",
            size: g.order(),
            limit: limits.enum_guard,
        });
    }
    let iso_elems: Vec<usize> = (1..g.size()).filter(|&x| m.q[x].is_zero()).collect();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    found.insert(vec![0]);
    let mut frontier: Vec<Subgroup> = vec![Subgroup::trivial(g)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for &x in &iso_elems {
                if h.contains_idx(x) {
                    continue;
                }
                // <H, x> is isotropic iff x is orthogonal to H
                if !h.generator_indices().iter().all(|&y| m.b_idx(x, y).is_zero()) {
                    continue;
                }
                let mut gens = h.generator_indices().to_vec();
                gens.push(x);
                let j = Subgroup::generated_by(g, &gens);
                if found.insert(j.indices().to_vec()) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut subs: Vec<Subgroup> = found
        .into_iter()
        .map(|s| Subgroup::from_indices(g, s).expect("closure of isotropic elements"))
        .collect();
    subs.sort();
    let mut out = Vec::with_capacity(subs.len());
    for (i, h) in subs.iter().enumerate() {
        let maximal = !subs[i + 1..]
            .iter()
            .any(|k| k.order() > h.order() && h.is_subset_of(k));
        let lagrangian = orthogonal_complement(m, h).indices() == h.indices();
        out.push(IsotropicSubgroup {
            subgroup: h.clone(),
            maximal,
            lagrangian,
        });
    }
    Ok(out)
}

/// `q` on `H^⊥/H` together with the class map from `G` (entries outside
/// `H^⊥` are `usize::MAX`).
pub fn quotient_form_with_map(
    m: &PreMetricGroup,
    h: &Subgroup,
) -> Result<(PreMetricGroup, Vec<usize>)> {
    if !m.is_isotropic(h) {
        return Err(Error::NotIsotropic);
    }
    let perp = orthogonal_complement(m, h);
    let (grp, table) = subquotient(&perp, h)?;
    let mut q: Vec<Option<RootExp>> = vec![None; grp.size()];
    for &x in perp.indices() {
        let c = table[x];
        match q[c] {
            None => q[c] = Some(m.q[x]),
            Some(v) if v == m.q[x] => {}
            Some(_) => {
                return Err(Error::ClassificationBug(
                    "form not constant on cosets of an isotropic subgroup".into(),
                ))
            }
        }
    }
    let q = q
        .into_iter()
        .map(|v| v.expect("projection is onto"))
        .collect();
    Ok((PreMetricGroup::new_unchecked(grp, q), table))
}

pub fn quotient_form(m: &PreMetricGroup, h: &Subgroup) -> Result<PreMetricGroup> {
    Ok(quotient_form_with_map(m, h)?.0)
}

/// Form-preserving automorphisms, found by backtracking over generator
/// images with the values of `q` and `b` on generators as constraints.
pub fn form_automorphisms(m: &PreMetricGroup, limits: &Limits) -> Result<Vec<GroupHom>> {
    let g = &m.group;
    if g.order() > limits.aut_guard {
        return Err(Error::EnumerationLimit {
            what: "automorphism enumeration",
            size: g.order(),
            limit: limits.aut_guard,
        });
    }
    Ok(matching_maps(m, m, false)
        .into_iter()
        .map(|imgs| GroupHom::new(g.orders().to_vec(), g.clone(), imgs.iter().map(|&i| g.element(i)).collect()))
        .collect::<Result<Vec<_>>>()?)
}

fn matching_maps(m1: &PreMetricGroup, m2: &PreMetricGroup, first_only: bool) -> Vec<Vec<usize>> {
    let g1 = &m1.group;
    let gens: Vec<usize> = (0..g1.rank()).map(|j| g1.generator(j)).collect();
    search_isomorphisms(g1, &m2.group, first_only, |depth, x, chosen| {
        m2.q[x] == m1.q[gens[depth]]
            && chosen
                .iter()
                .enumerate()
                .all(|(j, &y)| m2.b_idx(x, y) == m1.b_idx(gens[depth], gens[j]))
    })
}

/// A form-preserving isomorphism `M1 → M2`, the first one in
/// lexicographic order of generator images.
pub fn isomorphic(
    m1: &PreMetricGroup,
    m2: &PreMetricGroup,
    limits: &Limits,
) -> Result<Option<GroupHom>> {
    for m in [m1, m2] {
        if m.order() > limits.aut_guard {
            return Err(Error::EnumerationLimit {
                what: "isomorphism search",
                size: m.order(),
                limit: limits.aut_guard,
            });
        }
    }
    if m1.group != m2.group || sorted_values(m1) != sorted_values(m2) {
        return Ok(None);
    }
    let g2 = &m2.group;
    Ok(matching_maps(m1, m2, true).into_iter().next().map(|imgs| {
        GroupHom::new(
            m1.group.orders().to_vec(),
            g2.clone(),
            imgs.iter().map(|&i| g2.element(i)).collect(),
        )
        .expect("search only returns homomorphisms")
    }))
}

fn sorted_values(m: &PreMetricGroup) -> Vec<RootExp> {
    let mut v = m.q.clone();
    v.sort();
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Core {
    pub form: PreMetricGroup,
    pub subgroup: Subgroup,
    /// Image of the stabilizer of `subgroup` in `Aut(form)`.
    pub gamma: Vec<GroupHom>,
}

/// `H^⊥/H` for the lexicographically least maximal isotropic `H`.
pub fn core(m: &PreMetricGroup, limits: &Limits) -> Result<Core> {
    let h = isotropic_subgroups(m, limits)?
        .into_iter()
        .filter(|s| s.maximal)
        .map(|s| s.subgroup)
        .min_by(|a, b| a.indices().cmp(b.indices()))
        .expect("some isotropic subgroup is maximal");
    core_relative(m, &h, limits)
}

/// `H^⊥/H` for a given isotropic `H`, with the automorphisms of the
/// quotient induced by automorphisms of `M` that preserve `H`.
pub fn core_relative(m: &PreMetricGroup, h: &Subgroup, limits: &Limits) -> Result<Core> {
    let (form, table) = quotient_form_with_map(m, h)?;
    let g = &m.group;
    let qg = form.group.clone();
    let lifts: Vec<usize> = (0..qg.rank())
        .map(|j| {
            let target = qg.generator(j);
            (0..g.size())
                .find(|&x| table[x] == target)
                .expect("projection is onto")
        })
        .collect();
    let mut seen = BTreeSet::new();
    let mut gamma = Vec::new();
    for phi in form_automorphisms(m, limits)? {
        let moved = phi.table(g);
        if !h.indices().iter().all(|&x| h.contains_idx(moved[x])) {
            continue;
        }
        let images: Vec<usize> = lifts.iter().map(|&x| table[moved[x]]).collect();
        if seen.insert(images.clone()) {
            gamma.push(GroupHom::new(
                qg.orders().to_vec(),
                qg.clone(),
                images.iter().map(|&i| qg.element(i)).collect(),
            )?);
        }
    }
    gamma.sort_by(|a, b| a.image_indices().cmp(b.image_indices()));
    Ok(Core {
        form,
        subgroup: h.clone(),
        gamma,
    })
}

/// Repeatedly passes to `<x>^⊥/<x>` for an isotropic `x` of prime order
/// until nothing isotropic is left. The result is Witt-equivalent to `M`
/// and, for metric `M`, isomorphic to its core.
pub fn anisotropic_reduction(m: &PreMetricGroup) -> PreMetricGroup {
    let mut cur = m.clone();
    loop {
        let g = &cur.group;
        let x = (1..g.size()).find(|&x| cur.q[x].is_zero());
        let Some(x) = x else { return cur };
        let ord = g.order_of_idx(x);
        let p = primes_of(ord)[0];
        let y = g.mul_idx((ord / p) as i64, x);
        let h = Subgroup::generated_by(g, &[y]);
        cur = quotient_form(&cur, &h).expect("prime-order isotropic subgroup");
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `1/4` for `+i`, `3/4` for `-i`.
    pub fn quarter(self) -> RootExp {
        match self {
            Sign::Plus => RootExp::new(1, 4),
            Sign::Minus => RootExp::new(3, 4),
        }
    }
}

/// Isomorphism types of anisotropic pre-metric groups of prime-power order.
///
/// `MplusA` and `SlightDeg4` are always reported with `i_sign = Plus`:
/// the `Minus` variants are isomorphic to a `Plus` one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnisotropicLabel {
    Trivial,
    /// `F_p` with `q(a) = c a²/p`; `square` says whether `c` is a square mod `p`.
    OddRank1 { p: u64, square: bool },
    /// `F_p²` with the norm form of `F_{p²}`.
    OddNorm { p: u64 },
    /// `Z/2` with `q(1) = ±1/4`.
    A { i_sign: Sign },
    /// The order-4 group with `q(u) = 1/2`, `q(v) = q(u+v) = ξ`, `ξ ≠ 0`.
    M { xi: RootExp },
    MplusA { xi: RootExp, i_sign: Sign },
    /// `Z/2` with `q(1) = 1/2`.
    SlightDeg2,
    /// `(Z/2)²` with `q(m, n) = ±m/4 + n/2`.
    SlightDeg4 { i_sign: Sign },
}

impl AnisotropicLabel {
    pub fn prime(&self) -> Option<u64> {
        match *self {
            AnisotropicLabel::Trivial => None,
            AnisotropicLabel::OddRank1 { p, .. } | AnisotropicLabel::OddNorm { p } => Some(p),
            _ => Some(2),
        }
    }

    pub fn is_metric(&self) -> bool {
        !matches!(
            self,
            AnisotropicLabel::SlightDeg2 | AnisotropicLabel::SlightDeg4 { .. }
        )
    }

    pub fn build(&self) -> PreMetricGroup {
        match *self {
            AnisotropicLabel::Trivial => PreMetricGroup::trivial(),
            AnisotropicLabel::OddRank1 { p, square } => {
                let c = if square { 1 } else { least_nonresidue(p) };
                cyclic_form(p, |a| RootExp::new((c * a * a % p) as i64, p))
            }
            AnisotropicLabel::OddNorm { p } => norm_form(p),
            AnisotropicLabel::A { i_sign } => a_form(i_sign),
            AnisotropicLabel::M { xi } => m_xi(xi),
            AnisotropicLabel::MplusA { xi, i_sign } => direct_sum(&m_xi(xi), &a_form(i_sign)),
            AnisotropicLabel::SlightDeg2 => cyclic_form(2, |a| RootExp::new(a as i64, 2)),
            AnisotropicLabel::SlightDeg4 { i_sign } => {
                let g = FinAbGroup::new(vec![2, 2]).expect("valid");
                PreMetricGroup::from_fn(g, |c| i_sign.quarter().scale(c[0] as i64) + RootExp::new(c[1] as i64, 2))
                    .expect("valid form")
            }
        }
    }

    /// Every anisotropic label at `p`, metric and degenerate, with the
    /// `i_sign` normalization above.
    pub fn catalog_at(p: u64) -> Vec<AnisotropicLabel> {
        let mut out = vec![AnisotropicLabel::Trivial];
        if p == 2 {
            for s in [Sign::Plus, Sign::Minus] {
                out.push(AnisotropicLabel::A { i_sign: s });
            }
            for k in 1..8 {
                out.push(AnisotropicLabel::M {
                    xi: RootExp::new(k, 8),
                });
            }
            for k in 0..8 {
                let xi = RootExp::new(k, 8);
                if xi != RootExp::zero() && xi != RootExp::new(3, 4) {
                    out.push(AnisotropicLabel::MplusA {
                        xi,
                        i_sign: Sign::Plus,
                    });
                }
            }
            out.push(AnisotropicLabel::SlightDeg2);
            out.push(AnisotropicLabel::SlightDeg4 { i_sign: Sign::Plus });
        } else {
            out.push(AnisotropicLabel::OddRank1 { p, square: true });
            out.push(AnisotropicLabel::OddRank1 { p, square: false });
            out.push(AnisotropicLabel::OddNorm { p });
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.build().order()
    }
}

impl fmt::Display for AnisotropicLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |s: Sign| if s == Sign::Plus { "+i" } else { "-i" };
        match *self {
            AnisotropicLabel::Trivial => write!(f, "Trivial"),
            AnisotropicLabel::OddRank1 { p, square } => {
                write!(f, "OddRank1({p},{})", if square { "square" } else { "nonsquare" })
            }
            AnisotropicLabel::OddNorm { p } => write!(f, "OddNorm({p})"),
            AnisotropicLabel::A { i_sign } => write!(f, "A({})", s(i_sign)),
            AnisotropicLabel::M { xi } => write!(f, "M({xi})"),
            AnisotropicLabel::MplusA { xi, i_sign } => write!(f, "MplusA({xi},{})", s(i_sign)),
            AnisotropicLabel::SlightDeg2 => write!(f, "SlightDeg2"),
            AnisotropicLabel::SlightDeg4 { i_sign } => write!(f, "SlightDeg4({})", s(i_sign)),
        }
    }
}

fn cyclic_form<F: Fn(u64) -> RootExp>(n: u64, f: F) -> PreMetricGroup {
    PreMetricGroup::from_fn(FinAbGroup::cyclic(n), |c| f(c[0])).expect("valid form")
}

/// `A_{±i}`: `Z/2` with `q(1) = ±1/4`.
pub fn a_form(i_sign: Sign) -> PreMetricGroup {
    cyclic_form(2, |a| i_sign.quarter().scale(a as i64))
}

/// `M_ξ` from its value table: `q(u) = 1/2`, `q(v) = q(u+v) = ξ`, where
/// `ξ` is an 8th root of unity. The group is `(Z/2)²` when `ξ⁴ = 1` and
/// `Z/4` (with `u = 2v`) when `ξ⁴ = -1`.
pub fn m_xi(xi: RootExp) -> PreMetricGroup {
    assert!(8 % xi.den() == 0, "ξ must be an 8th root of unity");
    if xi.scale(4).is_zero() {
        let g = FinAbGroup::new(vec![2, 2]).expect("valid");
        // coordinates (a, b) stand for a·u + b·v
        PreMetricGroup::from_fn(g, |c| {
            RootExp::new((c[0] + c[0] * c[1]) as i64, 2) + xi.scale(c[1] as i64)
        })
        .expect("valid form")
    } else {
        cyclic_form(4, |n| xi.scale((n * n) as i64))
    }
}

/// `F_p²` with `q(x, y) = xy/p`.
pub fn hyperbolic(p: u64) -> PreMetricGroup {
    let g = FinAbGroup::new(vec![p, p]).expect("valid");
    PreMetricGroup::from_fn(g, |c| RootExp::new((c[0] * c[1] % p) as i64, p)).expect("valid form")
}

/// The norm form of `F_{p²}` over `F_p`, divided by `p`.
pub fn norm_form(p: u64) -> PreMetricGroup {
    let g = FinAbGroup::new(vec![p, p]).expect("valid");
    if p == 2 {
        // x² + xy + y²
        return PreMetricGroup::from_fn(g, |c| {
            RootExp::new((c[0] * c[0] + c[0] * c[1] + c[1] * c[1]) as i64, 2)
        })
        .expect("valid form");
    }
    let c = least_nonresidue(p);
    PreMetricGroup::from_fn(g, |v| {
        let n = (v[0] * v[0] + (p - c) * v[1] % p * v[1]) % p;
        RootExp::new(n as i64, p)
    })
    .expect("valid form")
}

/// Labels of the Sylow components of an anisotropic form, by increasing
/// prime; `[Trivial]` for the trivial group.
pub fn classify_anisotropic(m: &PreMetricGroup) -> Result<Vec<AnisotropicLabel>> {
    if let Some(x) = (1..m.group.size()).find(|&x| m.q[x].is_zero()) {
        return Err(Error::NotAnisotropic(m.group.element(x).to_string()));
    }
    if m.group.is_trivial() {
        return Ok(vec![AnisotropicLabel::Trivial]);
    }
    let mut out = Vec::new();
    for p in primes_of(m.order()) {
        let part = restrict(m, &m.group.sylow(p));
        let label = classify_p_part(&part, p)?;
        let loose = Limits {
            aut_guard: u64::MAX,
            ..Limits::default()
        };
        if isomorphic(&part, &label.build(), &loose)?.is_none() {
            return Err(Error::ClassificationBug(format!(
                "{part} does not match its label {label}"
            )));
        }
        out.push(label);
    }
    Ok(out)
}

fn classify_p_part(m: &PreMetricGroup, p: u64) -> Result<AnisotropicLabel> {
    let g = &m.group;
    let bug = || Error::ClassificationBug(format!("anisotropic {m} is outside the classification"));
    let metric = m.is_metric();
    if p != 2 {
        return match g.orders() {
            [n] if *n == p => {
                let c = m.q[1].num() * (p / m.q[1].den());
                Ok(AnisotropicLabel::OddRank1 {
                    p,
                    square: is_square_mod(c, p),
                })
            }
            [a, b] if *a == p && *b == p && metric => Ok(AnisotropicLabel::OddNorm { p }),
            _ => Err(bug()),
        };
    }
    let half = RootExp::new(1, 2);
    match g.order() {
        2 => match m.q[1] {
            r if r == half => Ok(AnisotropicLabel::SlightDeg2),
            r if r == Sign::Plus.quarter() => Ok(AnisotropicLabel::A { i_sign: Sign::Plus }),
            r if r == Sign::Minus.quarter() => Ok(AnisotropicLabel::A { i_sign: Sign::Minus }),
            _ => Err(bug()),
        },
        4 if !metric => Ok(AnisotropicLabel::SlightDeg4 { i_sign: Sign::Plus }),
        4 => Ok(AnisotropicLabel::M { xi: read_xi(m).ok_or_else(bug)? }),
        8 if metric => {
            for s in [Sign::Plus, Sign::Minus] {
                let w = (1..g.size()).find(|&w| g.order_of_idx(w) == 2 && m.q[w] == s.quarter());
                if let Some(w) = w {
                    let line = Subgroup::generated_by(g, &[w]);
                    let rest = restrict(m, &orthogonal_complement(m, &line));
                    let xi = read_xi(&rest).ok_or_else(bug)?;
                    // M_ξ ⊕ A_{-i} ≅ M_{ξ/i} ⊕ A_{i}
                    let xi = if s == Sign::Plus { xi } else { xi - RootExp::new(1, 4) };
                    return Ok(AnisotropicLabel::MplusA {
                        xi,
                        i_sign: Sign::Plus,
                    });
                }
            }
            Err(bug())
        }
        _ => Err(bug()),
    }
}

// ξ for an order-4 metric anisotropic 2-group: u is the least element of
// order 2 with q(u) = 1/2 and ξ is q at the least element outside {0, u}.
fn read_xi(m: &PreMetricGroup) -> Option<RootExp> {
    let g = &m.group;
    if g.order() != 4 {
        return None;
    }
    let half = RootExp::new(1, 2);
    let u = (1..4).find(|&x| g.order_of_idx(x) == 2 && m.q[x] == half)?;
    let w = (1..4).find(|&x| x != u)?;
    Some(m.q[w])
}

/// Condition (ii) of weak anisotropy: a splitting into hyperbolic planes
/// `F_p²` (with `xy/p`) and an anisotropic group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WapDecomposition {
    pub hyperbolic: BTreeMap<u64, usize>,
    pub anisotropic: PreMetricGroup,
}

impl WapDecomposition {
    pub fn reassemble(&self) -> PreMetricGroup {
        self.hyperbolic
            .iter()
            .fold(self.anisotropic.clone(), |acc, (&p, &k)| {
                direct_sum(&acc, &direct_power(&hyperbolic(p), k))
            })
    }
}

/// Weak anisotropy by definition: no nonzero isotropic subgroup is stable
/// under every form-preserving automorphism.
pub fn is_weakly_anisotropic(m: &PreMetricGroup, limits: &Limits) -> Result<bool> {
    let iso = isotropic_subgroups(m, limits)?;
    if iso.len() == 1 {
        return Ok(true);
    }
    let auts = form_automorphisms(m, limits)?;
    let tables: Vec<Vec<usize>> = auts.iter().map(|a| a.table(&m.group)).collect();
    Ok(!iso.iter().skip(1).any(|h| {
        let h = &h.subgroup;
        tables
            .iter()
            .all(|t| h.generator_indices().iter().all(|&x| h.contains_idx(t[x])))
    }))
}

/// Searches each Sylow component for a splitting into hyperbolic planes and
/// an anisotropic remainder.
pub fn wap_decompose(m: &PreMetricGroup) -> Option<WapDecomposition> {
    let mut hyperbolic = BTreeMap::new();
    let mut anisotropic = PreMetricGroup::trivial();
    for p in primes_of(m.order()) {
        let part = restrict(m, &m.group.sylow(p));
        let (k, rest) = split_planes(&part, p)?;
        if k > 0 {
            hyperbolic.insert(p, k);
        }
        anisotropic = direct_sum(&anisotropic, &rest);
    }
    Some(WapDecomposition {
        hyperbolic,
        anisotropic,
    })
}

fn split_planes(m: &PreMetricGroup, p: u64) -> Option<(usize, PreMetricGroup)> {
    if m.is_anisotropic() {
        return Some((0, m.clone()));
    }
    let g = &m.group;
    let iso: Vec<usize> = (1..g.size())
        .filter(|&x| m.q[x].is_zero() && g.order_of_idx(x) == p)
        .collect();
    let unit = RootExp::new(1, p);
    let mut tried = BTreeSet::new();
    for &x in &iso {
        for &y in &iso {
            if m.b_idx(x, y) != unit {
                continue;
            }
            let plane = Subgroup::generated_by(g, &[x, y]);
            if !tried.insert(plane.indices().to_vec()) {
                continue;
            }
            let rest = restrict(m, &orthogonal_complement(m, &plane));
            if let Some((k, an)) = split_planes(&rest, p) {
                return Some((k + 1, an));
            }
        }
    }
    None
}

/// Condition (iii): every isotropic `A` has an isotropic `B` with
/// `A × B → Q/Z` non-degenerate.
pub fn isotropic_pairing_condition(m: &PreMetricGroup, limits: &Limits) -> Result<bool> {
    let iso: Vec<Subgroup> = isotropic_subgroups(m, limits)?
        .into_iter()
        .map(|s| s.subgroup)
        .collect();
    let pairs = |a: &Subgroup, b: &Subgroup| {
        a.order() == b.order()
            && a.indices()
                .iter()
                .skip(1)
                .all(|&x| b.generator_indices().iter().any(|&y| !m.b_idx(x, y).is_zero()))
            && b.indices()
                .iter()
                .skip(1)
                .all(|&y| a.generator_indices().iter().any(|&x| !m.b_idx(x, y).is_zero()))
    };
    Ok(iso.iter().all(|a| iso.iter().any(|b| pairs(a, b))))
}

/// Condition (iv) for odd `p`: `pG = 0` and `q` non-degenerate.
pub fn odd_prime_condition(m: &PreMetricGroup) -> bool {
    let g = &m.group;
    let p_kills = g.orders().iter().all(|&n| crate::rational::is_prime(n));
    p_kills && m.is_metric()
}

/// Number of quadratic forms on `G` (see [`form_from_params`]).
pub fn form_count(g: &FinAbGroup) -> u64 {
    let o = g.orders();
    let diag: u64 = o.iter().map(|&n| if n % 2 == 0 { 2 * n } else { n }).product();
    let mut cross = 1;
    for i in 0..o.len() {
        for j in i + 1..o.len() {
            cross *= gcd(o[i], o[j]);
        }
    }
    diag * cross
}

/// The quadratic form with `q(e_i) = t_i/(2n_i)` (or `t_i/n_i` for odd
/// `n_i`) and `b(e_i, e_j) = c_ij / gcd(n_i, n_j)`. Every form on `G`
/// arises exactly once as `t_i`, `c_ij` range over their residues.
pub fn form_from_params(g: &FinAbGroup, diag: &[u64], cross: &[u64]) -> PreMetricGroup {
    let o = g.orders();
    let den = 2 * g.exponent();
    let mut pair = Vec::new();
    for i in 0..o.len() {
        for j in i + 1..o.len() {
            pair.push((i, j));
        }
    }
    let q = (0..g.size())
        .map(|idx| {
            let c = g.coords(idx);
            let mut acc: u128 = 0;
            for (i, &n) in o.iter().enumerate() {
                let qi = if n % 2 == 0 {
                    diag[i] as u128 * (den / (2 * n)) as u128
                } else {
                    diag[i] as u128 * (den / n) as u128
                };
                acc += qi * (c[i] as u128) * (c[i] as u128);
            }
            for (k, &(i, j)) in pair.iter().enumerate() {
                let d = gcd(o[i], o[j]);
                acc += cross[k] as u128 * (den / d) as u128 * c[i] as u128 * c[j] as u128;
            }
            RootExp::new((acc % den as u128) as i64, den)
        })
        .collect();
    PreMetricGroup::new_unchecked(g.clone(), q)
}

/// Every quadratic form on `G`, each exactly once.
pub fn all_forms(g: &FinAbGroup) -> impl Iterator<Item = PreMetricGroup> + '_ {
    let o = g.orders().to_vec();
    let mut radices: Vec<u64> = o.iter().map(|&n| if n % 2 == 0 { 2 * n } else { n }).collect();
    let k = o.len();
    for i in 0..k {
        for j in i + 1..k {
            radices.push(gcd(o[i], o[j]));
        }
    }
    let total = form_count(g);
    (0..total).map(move |mut t| {
        let mut digits = Vec::with_capacity(radices.len());
        for &r in &radices {
            digits.push(t % r);
            t /= r;
        }
        form_from_params(g, &digits[..k], &digits[k..])
    })
}

/// All groups (in invariant-factor form) of the given order.
pub fn groups_of_order(n: u64) -> Vec<FinAbGroup> {
    fn chains(n: u64, min: u64) -> Vec<Vec<u64>> {
        // chains d_1 | d_2 | ... with product n and d_1 >= 2, built from the top
        let mut out = Vec::new();
        if n == 1 {
            out.push(Vec::new());
            return out;
        }
        for d in 2..=n {
            if n % d != 0 || d % min != 0 {
                continue;
            }
            // d is the smallest factor; the rest must be multiples of d
            for mut rest in chains(n / d, d) {
                if rest.iter().all(|&x| x % d == 0) {
                    rest.insert(0, d);
                    out.push(rest);
                }
            }
        }
        out
    }
    let mut gs: Vec<FinAbGroup> = chains(n, 1)
        .into_iter()
        .filter_map(|c| FinAbGroup::new(c).ok())
        .collect();
    gs.sort();
    gs.dedup();
    gs
}

/// All subgroups of a pre-metric group's underlying group.
pub fn all_subgroups(m: &PreMetricGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    subgroups(&m.group, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(o: &[u64]) -> FinAbGroup {
        FinAbGroup::new(o.to_vec()).unwrap()
    }

    fn r(n: i64, d: u64) -> RootExp {
        RootExp::new(n, d)
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn validation_examples() {
        assert!(PreMetricGroup::from_fn(grp(&[4]), |c| r((c[0] * c[0]) as i64, 8)).is_ok());
        assert!(PreMetricGroup::from_fn(grp(&[2]), |c| r((c[0] * c[0]) as i64, 4)).is_ok());
        assert!(matches!(
            PreMetricGroup::from_fn(grp(&[4]), |c| r(c[0] as i64, 4)),
            Err(Error::NotEven(_))
        ));
        assert!(matches!(
            PreMetricGroup::validate(grp(&[2]), vec![r(1, 2), r(1, 4)]),
            Err(Error::NotNormalized(_))
        ));
        // q(n) = n/2 on Z/4 is even but b is not biadditive
        assert!(matches!(
            PreMetricGroup::validate(grp(&[4]), vec![r(0, 1), r(1, 3), r(0, 1), r(1, 3)]),
            Err(Error::NotQuadratic(_))
        ));
        assert!(matches!(
            PreMetricGroup::validate(grp(&[2]), vec![r(0, 1)]),
            Err(Error::WrongArity { .. })
        ));
    }

    #[test]
    fn bicharacter_examples() {
        let a = a_form(Sign::Plus);
        assert_eq!(bicharacter(&a).get(1, 1), r(1, 2));
        let h = hyperbolic(3);
        let g = h.group();
        let e1 = g.index_of(&[1, 0]);
        let e2 = g.index_of(&[0, 1]);
        assert_eq!(bicharacter(&h).get(e1, e2), r(1, 3));
        let z = PreMetricGroup::from_fn(grp(&[2, 2]), |_| RootExp::zero()).unwrap();
        assert!(bicharacter(&z).table.iter().all(RootExp::is_zero));
    }

    #[test]
    fn degeneracy_examples() {
        let s = AnisotropicLabel::SlightDeg2.build();
        assert_eq!(degeneracy(&s).tag, DegeneracyTag::SlightlyDegenerate);
        assert_eq!(degeneracy(&hyperbolic(2)).tag, DegeneracyTag::Nondegenerate);
        let z = PreMetricGroup::from_fn(grp(&[2]), |_| RootExp::zero()).unwrap();
        let d = degeneracy(&z);
        assert_eq!(d.tag, DegeneracyTag::DegenerateOther);
        assert_eq!(d.radical.order(), 2);
    }

    #[test]
    fn complements() {
        let h = hyperbolic(2);
        let line = Subgroup::generated(h.group(), &[GroupElement::new(vec![1, 0])]);
        assert_eq!(orthogonal_complement(&h, &line), line);
        let zero = Subgroup::trivial(h.group());
        assert_eq!(orthogonal_complement(&h, &zero).order(), 4);
        let aa = direct_sum(&a_form(Sign::Plus), &a_form(Sign::Minus));
        let diag = Subgroup::generated_by(aa.group(), &[3]);
        assert!(aa.is_isotropic(&diag));
        assert_eq!(orthogonal_complement(&aa, &diag), diag);
        assert!(quotient_form(&aa, &diag).unwrap().group().is_trivial());
    }

    #[test]
    fn isotropic_enumeration() {
        let h = hyperbolic(2);
        let iso = isotropic_subgroups(&h, &lim()).unwrap();
        assert_eq!(iso.len(), 3);
        assert_eq!(iso.iter().filter(|s| s.lagrangian).count(), 2);
        assert!(iso.iter().skip(1).all(|s| s.maximal));
        let an = norm_form(3);
        assert_eq!(isotropic_subgroups(&an, &lim()).unwrap().len(), 1);
        assert!(isotropic_subgroups(&m_xi(RootExp::zero()), &lim())
            .unwrap()
            .iter()
            .any(|s| s.lagrangian));
    }

    // Brute-force oracle: filter all subgroups by q vanishing on them.
    #[test]
    fn isotropic_enumeration_matches_subgroup_filter() {
        for g in [grp(&[2, 2]), grp(&[2, 4]), grp(&[3, 3]), grp(&[2, 2, 2])] {
            let subs = subgroups(&g, &lim()).unwrap();
            for m in all_forms(&g).step_by(7) {
                let want: Vec<Subgroup> = subs.iter().filter(|h| m.is_isotropic(h)).cloned().collect();
                let got: Vec<Subgroup> = isotropic_subgroups(&m, &lim())
                    .unwrap()
                    .into_iter()
                    .map(|s| s.subgroup)
                    .collect();
                assert_eq!(got, want, "{m}");
            }
        }
    }

    #[test]
    fn quotient_form_examples() {
        let h = hyperbolic(2);
        let zero = Subgroup::trivial(h.group());
        assert_eq!(quotient_form(&h, &zero).unwrap(), h);
        let line = Subgroup::generated(h.group(), &[GroupElement::new(vec![1, 0])]);
        assert!(quotient_form(&h, &line).unwrap().group().is_trivial());
        let a = a_form(Sign::Plus);
        assert!(matches!(
            quotient_form(&a, &Subgroup::full(a.group())),
            Err(Error::NotIsotropic)
        ));
    }

    #[test]
    fn core_examples() {
        for p in [2, 3, 5] {
            let c = core(&hyperbolic(p), &lim()).unwrap();
            assert!(c.form.group().is_trivial());
        }
        let an = norm_form(3);
        let c = core(&an, &lim()).unwrap();
        assert_eq!(c.form, an);
        assert_eq!(c.gamma.len(), form_automorphisms(&an, &lim()).unwrap().len());
    }

    #[test]
    fn isomorphism_examples() {
        let l = lim();
        for k in 0..8 {
            let xi = r(k, 8);
            let lhs = direct_sum(&m_xi(xi), &a_form(Sign::Plus));
            let rhs = direct_sum(&m_xi(xi + r(1, 4)), &a_form(Sign::Minus));
            assert!(isomorphic(&lhs, &rhs, &l).unwrap().is_some(), "ξ = {xi}");
        }
        assert!(isomorphic(&a_form(Sign::Plus), &a_form(Sign::Minus), &l)
            .unwrap()
            .is_none());
        let m = norm_form(3);
        let phi = isomorphic(&m, &m, &l).unwrap().unwrap();
        let t = phi.table(m.group());
        assert!((0..9).all(|x| m.q_idx(t[x]) == m.q_idx(x)));
    }

    #[test]
    fn classification_examples() {
        let f = cyclic_form(3, |a| r((a * a) as i64, 3));
        assert_eq!(
            classify_anisotropic(&f).unwrap(),
            vec![AnisotropicLabel::OddRank1 { p: 3, square: true }]
        );
        assert_eq!(
            classify_anisotropic(&norm_form(2)).unwrap(),
            vec![AnisotropicLabel::M { xi: r(1, 2) }]
        );
        let s = PreMetricGroup::from_fn(grp(&[2, 2]), |c| r(c[0] as i64, 4) + r(c[1] as i64, 2)).unwrap();
        assert_eq!(
            classify_anisotropic(&s).unwrap(),
            vec![AnisotropicLabel::SlightDeg4 { i_sign: Sign::Plus }]
        );
        assert!(matches!(
            classify_anisotropic(&hyperbolic(2)),
            Err(Error::NotAnisotropic(_))
        ));
        let mixed = direct_sum(&a_form(Sign::Minus), &norm_form(5));
        assert_eq!(
            classify_anisotropic(&mixed).unwrap(),
            vec![AnisotropicLabel::A { i_sign: Sign::Minus }, AnisotropicLabel::OddNorm { p: 5 }]
        );
    }

    #[test]
    fn labels_round_trip() {
        for p in [2, 3, 5, 7] {
            for label in AnisotropicLabel::catalog_at(p) {
                let m = label.build();
                assert!(m.is_anisotropic(), "{label}");
                assert_eq!(classify_anisotropic(&m).unwrap(), vec![label]);
            }
        }
    }

    #[test]
    fn weak_anisotropy_examples() {
        let l = lim();
        let h = hyperbolic(3);
        assert!(is_weakly_anisotropic(&h, &l).unwrap());
        let d = wap_decompose(&h).unwrap();
        assert_eq!(d.hyperbolic.get(&3), Some(&1));
        assert!(d.anisotropic.group().is_trivial());
        let z9 = cyclic_form(9, |a| r((a * a) as i64, 9));
        assert!(!is_weakly_anisotropic(&z9, &l).unwrap());
        assert!(wap_decompose(&z9).is_none());
        let aa = direct_sum(&a_form(Sign::Plus), &a_form(Sign::Plus));
        assert!(is_weakly_anisotropic(&aa, &l).unwrap());
    }

    #[test]
    fn form_parametrization_matches_brute_force() {
        // Count valid value tables with values in (1/(2·exp))Z directly.
        for o in [vec![2], vec![3], vec![4], vec![2, 2], vec![6], vec![5]] {
            let g = grp(&o);
            let den = 2 * g.exponent();
            let n = g.size();
            let mut count = 0;
            let total = (den as usize).pow((n - 1) as u32);
            for mut t in 0..total {
                let mut vals = vec![RootExp::zero()];
                for _ in 1..n {
                    vals.push(r((t % den as usize) as i64, den));
                    t /= den as usize;
                }
                if PreMetricGroup::validate(g.clone(), vals).is_ok() {
                    count += 1;
                }
            }
            assert_eq!(count, form_count(&g), "{o:?}");
            let forms: BTreeSet<Vec<RootExp>> = all_forms(&g).map(|m| m.values().to_vec()).collect();
            assert_eq!(forms.len() as u64, form_count(&g));
        }
    }

    #[test]
    fn enumerated_forms_are_valid() {
        for g in [grp(&[2, 4]), grp(&[3, 3]), grp(&[2, 2, 2]), grp(&[12])] {
            for m in all_forms(&g) {
                PreMetricGroup::validate(g.clone(), m.values().to_vec()).unwrap();
            }
        }
    }

    #[test]
    fn groups_by_order() {
        let counts: Vec<usize> = (1..=16).map(|n| groups_of_order(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]);
    }
}
