//! Gauss sums of pre-metric groups and the Witt group of metric groups.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::abelian::Subgroup;
use crate::cyclotomic::{quadratic_gauss_sum, CycloNum, RootExp};
use crate::qform::{
    anisotropic_reduction, classify_anisotropic, direct_sum, isotropic_subgroups, AnisotropicLabel,
    PreMetricGroup,
};
use crate::rational::{lcm, Q};
use crate::{Error, Limits, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussReport {
    pub tau_plus: CycloNum,
    pub tau_minus: CycloNum,
    /// Whether `τ+·τ- = |G|`; always true for metric groups.
    pub norm_check: bool,
    /// `τ+` when it is rational.
    pub positivity: Option<Q>,
}

/// `Σ_g e^{2πi q(g)}` over the value table, scaled by `sign`.
pub fn gauss_sum_signed(values: &[RootExp], sign: i64) -> CycloNum {
    let n = values.iter().fold(1, |acc, r| lcm(acc, r.den()));
    let mut counts: BTreeMap<u64, i64> = BTreeMap::new();
    for r in values {
        *counts.entry(r.scale(sign).num() * (n / r.den())).or_default() += 1;
    }
    let terms: Vec<(u64, Q)> = counts
        .into_iter()
        .map(|(e, c)| (e, Q::from_integer(BigInt::from(c))))
        .collect();
    CycloNum::from_exponent_sum(n, &terms)
}

pub fn tau_plus(m: &PreMetricGroup) -> CycloNum {
    gauss_sum_signed(m.values(), 1)
}

pub fn gauss_sum(m: &PreMetricGroup) -> GaussReport {
    let tau_plus = tau_plus(m);
    let tau_minus = gauss_sum_signed(m.values(), -1);
    let norm_check = &tau_plus * &tau_minus == CycloNum::from_int(m.order() as i64);
    let positivity = tau_plus.as_rational();
    GaussReport {
        tau_plus,
        tau_minus,
        norm_check,
        positivity,
    }
}

/// A Lagrangian subgroup, if there is one.
pub fn is_hyperbolic(m: &PreMetricGroup, limits: &Limits) -> Result<Option<Subgroup>> {
    Ok(isotropic_subgroups(m, limits)?
        .into_iter()
        .find(|s| s.lagrangian)
        .map(|s| s.subgroup))
}

/// A Witt class as its anisotropic representative, one label per prime.
/// Primes where the class vanishes are absent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WittClass {
    pub parts: BTreeMap<u64, AnisotropicLabel>,
}

impl WittClass {
    pub fn zero() -> Self {
        WittClass::default()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn of_label(label: AnisotropicLabel) -> Self {
        let mut parts = BTreeMap::new();
        if let Some(p) = label.prime() {
            parts.insert(p, label);
        }
        WittClass { parts }
    }

    pub fn part(&self, p: u64) -> AnisotropicLabel {
        self.parts.get(&p).copied().unwrap_or(AnisotropicLabel::Trivial)
    }

    /// The anisotropic metric group of the class.
    pub fn representative(&self) -> PreMetricGroup {
        self.parts
            .values()
            .fold(PreMetricGroup::trivial(), |acc, l| direct_sum(&acc, &l.build()))
    }
}

impl fmt::Display for WittClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, l) in self.parts.values().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Reduces to an anisotropic subquotient and labels its Sylow parts.
pub fn witt_class(m: &PreMetricGroup) -> Result<WittClass> {
    if !m.is_metric() {
        return Err(Error::NotMetric);
    }
    let an = anisotropic_reduction(m);
    let mut parts = BTreeMap::new();
    for label in classify_anisotropic(&an)? {
        if let Some(p) = label.prime() {
            parts.insert(p, label);
        }
    }
    Ok(WittClass { parts })
}

pub fn witt_add(c1: &WittClass, c2: &WittClass) -> WittClass {
    witt_class(&direct_sum(&c1.representative(), &c2.representative()))
        .expect("sums of anisotropic metric groups are metric")
}

pub fn witt_neg(c: &WittClass) -> WittClass {
    witt_class(&c.representative().negate()).expect("negation keeps the form metric")
}

pub fn witt_mul(k: u64, c: &WittClass) -> WittClass {
    (0..k).fold(WittClass::zero(), |acc, _| witt_add(&acc, c))
}

/// Smallest `k ≥ 1` with `k·c = 0`.
pub fn witt_order(c: &WittClass) -> u64 {
    let mut acc = c.clone();
    let mut k = 1;
    while !acc.is_zero() {
        acc = witt_add(&acc, c);
        k += 1;
    }
    k
}

/// The class of `τ+` in `C_p/p^Z`: `τ+ = r · ω · g^radical` with `r`
/// a positive rational, `ω` a root of unity (`±1` for odd `p`, `μ_8` for
/// `p = 2`) and `g` the quadratic Gauss sum of `F_p` (`1+i` for `p = 2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TauLabel {
    pub root: RootExp,
    pub radical: u8,
}

impl TauLabel {
    pub fn identity() -> Self {
        TauLabel {
            root: RootExp::zero(),
            radical: 0,
        }
    }
}

impl fmt::Display for TauLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({})", self.root)?;
        if self.radical == 1 {
            write!(f, "*g")?;
        }
        Ok(())
    }
}

pub fn radical_generator(p: u64) -> CycloNum {
    if p == 2 {
        &CycloNum::one() + &CycloNum::root(RootExp::new(1, 4))
    } else {
        quadratic_gauss_sum(p)
    }
}

/// Reads off the `C_p/p^Z` label of a nonzero cyclotomic number.
pub fn tau_label(tau: &CycloNum, p: u64) -> Result<TauLabel> {
    let roots = if p == 2 { 8 } else { 2 };
    let g = radical_generator(p);
    let mut x = tau.clone();
    for radical in 0..2u8 {
        for k in 0..roots {
            let root = RootExp::new(k, roots as u64);
            let y = &x * &CycloNum::root(-root);
            if y.is_positive_rational() {
                return Ok(TauLabel { root, radical });
            }
        }
        x = x.div(&g)?;
    }
    Err(Error::ClassificationBug(alloc::format!(
        "{tau} is not in C_{p} modulo positive rationals"
    )))
}

pub fn tau_image(c: &WittClass, p: u64) -> Result<TauLabel> {
    match c.parts.get(&p) {
        None => Ok(TauLabel::identity()),
        Some(l) => tau_label(&tau_plus(&l.build()), p),
    }
}
