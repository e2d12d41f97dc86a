mod common;

use braidforge_core::abelian::{subgroups, FinAbGroup, Subgroup};
use braidforge_core::cyclotomic::RootExp;
use braidforge_core::qform::{
    all_forms, all_subgroups, core_relative, degeneracy, direct_sum, form_count, groups_of_order,
    is_weakly_anisotropic, isomorphic, isotropic_pairing_condition, isotropic_subgroups,
    odd_prime_condition, orthogonal_complement, quotient_form, restrict, wap_decompose,
    AnisotropicLabel, DegeneracyTag, PreMetricGroup,
};
use braidforge_core::Limits;
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lim() -> Limits {
    Limits::default()
}

/// `q(-g) = q(g)`, `q(0) = 0` and `b` biadditive, checked on every pair.
fn is_quadratic(g: &FinAbGroup, q: &[RootExp]) -> bool {
    let b = |x: usize, y: usize| q[g.add_idx(x, y)] - q[x] - q[y];
    q[0].is_zero()
        && (0..g.size()).all(|x| q[g.neg_idx(x)] == q[x])
        && (0..g.size()).all(|x| {
            (0..g.size()).all(|y| (0..g.size()).all(|z| b(g.add_idx(x, y), z) == b(x, z) + b(y, z)))
        })
}

fn forms_up_to(max: u64) -> Vec<PreMetricGroup> {
    forms_of_orders(1..=max)
}

#[test]
fn validation_and_enumeration_agree_with_brute_force() {
    for orders in [vec![2u64], vec![3], vec![4], vec![2, 2], vec![5], vec![6], vec![2, 4]] {
        let g = FinAbGroup::new(orders).unwrap();
        let den = 2 * g.exponent();
        let n = g.size();
        let mut accepted = 0u64;
        let mut table = vec![0i64; n];
        loop {
            let q: Vec<RootExp> = table.iter().map(|&k| RootExp::new(k, den)).collect();
            let oracle = is_quadratic(&g, &q);
            let lib = PreMetricGroup::validate(g.clone(), q);
            assert_eq!(lib.is_ok(), oracle, "{g}: {table:?}");
            accepted += oracle as u64;
            // odometer over the nonzero elements
            let mut j = 1;
            while j < n {
                table[j] += 1;
                if table[j] < den as i64 {
                    break;
                }
                table[j] = 0;
                j += 1;
            }
            if j == n {
                break;
            }
        }
        assert_eq!(accepted, form_count(&g), "{g}");
        assert_eq!(all_forms(&g).count() as u64, accepted, "{g}");
    }
}

#[test]
fn every_enumerated_form_is_quadratic_and_distinct() {
    for n in 1..=16 {
        for g in groups_of_order(n) {
            let forms: Vec<PreMetricGroup> = all_forms(&g).collect();
            let mut tables: Vec<&[RootExp]> = forms.iter().map(|m| m.values()).collect();
            tables.sort();
            tables.dedup();
            assert_eq!(tables.len(), forms.len(), "{g}");
            if n <= 8 {
                assert!(forms.iter().all(|m| is_quadratic(&g, m.values())));
            }
        }
    }
}

#[test]
fn quadratic_scaling_on_all_small_forms() {
    for m in forms_up_to(12) {
        let g = m.group();
        for x in 0..g.size() {
            for n in 0..=(2 * g.exponent() as i64) {
                assert_eq!(m.q_idx(g.mul_idx(n, x)), m.q_idx(x).scale(n * n), "{m}");
            }
            assert_eq!(m.b_idx(x, x), m.q_idx(x).scale(2));
        }
    }
}

#[test]
fn complements_of_subgroups() {
    for m in forms_up_to(16) {
        let metric = m.is_metric();
        for h in all_subgroups(&m, &lim()).unwrap() {
            let perp = orthogonal_complement(&m, &h);
            if m.is_isotropic(&h) {
                assert!(h.is_subset_of(&perp), "{m}");
            }
            if metric {
                assert_eq!(orthogonal_complement(&m, &perp), h, "{m}");
                assert_eq!(h.order() * perp.order(), m.order(), "{m}");
            }
        }
    }
}

#[test]
fn degeneracy_tags_match_the_radical() {
    for m in forms_up_to(16) {
        let g = m.group();
        let rad: Vec<usize> = (0..g.size())
            .filter(|&x| (0..g.size()).all(|y| m.b_idx(x, y).is_zero()))
            .collect();
        let d = degeneracy(&m);
        assert_eq!(d.radical.indices(), rad);
        let want = match rad.len() {
            1 => DegeneracyTag::Nondegenerate,
            2 if m.q_idx(rad[1]) == RootExp::new(1, 2) => DegeneracyTag::SlightlyDegenerate,
            _ => DegeneracyTag::DegenerateOther,
        };
        assert_eq!(d.tag, want, "{m}");
    }
}

/// A complement `K` of the radical with `q|K` metric, and the check that
/// `M ≅ (K, q|K) ⊕ (Z/2, 1/2)`.
fn check_slight_split(m: &PreMetricGroup, use_oracle: bool) {
    let rad = degeneracy(m).radical;
    let k = subgroups(m.group(), &lim())
        .unwrap()
        .into_iter()
        .find(|k| k.order() * 2 == m.order() && k.intersection(&rad).is_trivial())
        .unwrap_or_else(|| panic!("{m}: radical has no complement"));
    let mk = restrict(m, &k);
    assert!(mk.is_metric(), "{m}");
    let split = direct_sum(&mk, &AnisotropicLabel::SlightDeg2.build());
    assert!(isomorphic(m, &split, &lim()).unwrap().is_some(), "{m}");
    if use_oracle {
        assert!(iso_oracle(m, &split), "{m}");
    }
}

#[test]
fn slightly_degenerate_forms_split_off_the_radical() {
    let mut count = 0;
    for m in forms_up_to(16) {
        if degeneracy(&m).tag == DegeneracyTag::SlightlyDegenerate {
            check_slight_split(&m, m.order() <= 8);
            count += 1;
        }
    }
    assert!(count > 100);
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let mut sampled = 0;
    while sampled < 40 {
        let m = random_form(&mut rng, 32);
        if m.order() > 16 && degeneracy(&m).tag == DegeneracyTag::SlightlyDegenerate {
            check_slight_split(&m, false);
            sampled += 1;
        }
    }
}

#[test]
fn weak_anisotropy_conditions_on_sampled_forms_of_order_32() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let groups = groups_of_order(32);
    let mut checked = 0;
    while checked < 24 {
        let g = &groups[rand::Rng::random_range(&mut rng, 0..groups.len())];
        let m = loop {
            let c = random_form(&mut rng, 32);
            if c.group() == g {
                break c;
            }
        };
        let i = is_weakly_anisotropic(&m, &lim()).unwrap();
        let ii = wap_decompose(&m);
        let iii = isotropic_pairing_condition(&m, &lim()).unwrap();
        assert_eq!(i, ii.is_some(), "{m}");
        assert_eq!(i, iii, "{m}");
        if let Some(d) = ii {
            assert!(isomorphic(&d.reassemble(), &m, &lim()).unwrap().is_some());
        }
        checked += 1;
    }
}

#[test]
fn odd_condition_on_all_forms_on_rank_two_groups_of_order_81() {
    let lim = Limits {
        aut_guard: 81,
        ..lim()
    };
    for g in groups_of_order(81).into_iter().filter(|g| g.rank() <= 2) {
        for m in all_forms(&g) {
            assert_eq!(
                is_weakly_anisotropic(&m, &lim).unwrap(),
                odd_prime_condition(&m),
                "{m}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scaling_on_random_forms(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_form(&mut rng, 36);
        let g = m.group();
        for x in 0..g.size() {
            for n in [-3i64, -1, 2, 3, 5, 7] {
                prop_assert_eq!(m.q_idx(g.mul_idx(n, x)), m.q_idx(x).scale(n * n));
            }
        }
    }

    #[test]
    fn cores_agree_across_maximal_isotropic_subgroups(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_form(&mut rng, 36);
        let maximal: Vec<Subgroup> = isotropic_subgroups(&m, &lim())
            .unwrap()
            .into_iter()
            .filter(|h| h.maximal)
            .map(|h| h.subgroup)
            .collect();
        let first = quotient_form(&m, &maximal[0]).unwrap();
        for h in &maximal[1..] {
            let other = quotient_form(&m, h).unwrap();
            prop_assert!(isomorphic(&first, &other, &lim()).unwrap().is_some(), "{}", m);
            prop_assert!(first.is_anisotropic());
            let c = core_relative(&m, h, &lim()).unwrap();
            prop_assert_eq!(&c.form, &other);
        }
    }

    #[test]
    fn direct_sums_of_metric_forms_are_metric(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_form(&mut rng, 12);
        let b = random_form(&mut rng, 12);
        let s = direct_sum(&a, &b);
        prop_assert_eq!(s.order(), a.order() * b.order());
        prop_assert_eq!(s.is_metric(), a.is_metric() && b.is_metric());
        let mut want: Vec<RootExp> = a
            .values()
            .iter()
            .flat_map(|&x| b.values().iter().map(move |&y| x + y))
            .collect();
        let mut got = s.values().to_vec();
        want.sort();
        got.sort();
        prop_assert_eq!(got, want);
    }
}
