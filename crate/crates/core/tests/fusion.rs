use braidforge_core::abelian::FinAbGroup;
use braidforge_core::fusion::{
    adjoint_subring, all_subrings, fp_dims, fp_square_grading, fp_squares, subring_generated,
    universal_grading, FusionRing, FusionSubring,
};
use braidforge_core::qform::groups_of_order;
use braidforge_core::Limits;
use proptest::prelude::*;
use std::collections::BTreeSet;

fn rings() -> Vec<(String, FusionRing)> {
    let mut out: Vec<(String, FusionRing)> = (1..=12)
        .flat_map(groups_of_order)
        .map(|g| (format!("Z[{g}]"), FusionRing::group_ring(&g)))
        .collect();
    let ising = FusionRing::ising();
    let s3 = FusionRing::s3_characters();
    let z2 = FusionRing::group_ring(&FinAbGroup::cyclic(2));
    let z3 = FusionRing::group_ring(&FinAbGroup::cyclic(3));
    out.push(("Ising".into(), ising.clone()));
    out.push(("Rep(S3)".into(), s3.clone()));
    out.push(("Ising ⊠ Ising".into(), FusionRing::product(&ising, &ising)));
    out.push(("Ising ⊠ Rep(S3)".into(), FusionRing::product(&ising, &s3)));
    out.push(("Rep(S3) ⊠ Z/2".into(), FusionRing::product(&s3, &z2)));
    out.push(("Ising ⊠ Z/3".into(), FusionRing::product(&ising, &z3)));
    out
}

/// The axioms a fusion ring must satisfy, straight from the table.
fn ring_axioms_hold(r: &FusionRing) -> bool {
    let n = r.rank();
    let (u, d) = (r.unit(), |x| r.dual(x));
    let idx = 0..n;
    idx.clone().all(|x| {
        idx.clone().all(|y| {
            r.n(u, x, y) == (x == y) as u32
                && r.n(x, u, y) == (x == y) as u32
                && r.n(x, y, u) == (y == d(x)) as u32
                && idx.clone().all(|z| {
                    r.n(x, y, z) == r.n(d(z), x, d(y))
                        && r.n(x, y, z) == r.n(y, d(z), d(x))
                        && idx.clone().all(|v| {
                            let left: u32 = (0..n).map(|w| r.n(x, y, w) * r.n(w, z, v)).sum();
                            let right: u32 = (0..n).map(|w| r.n(y, z, w) * r.n(x, w, v)).sum();
                            left == right
                        })
                })
        })
    })
}

/// Subsets containing the unit that are closed under products and duals.
fn subrings_oracle(r: &FusionRing) -> BTreeSet<Vec<usize>> {
    let n = r.rank();
    let others: Vec<usize> = (0..n).filter(|&x| x != r.unit()).collect();
    (0u32..1 << others.len())
        .map(|bits| {
            let mut s: Vec<usize> = (0..others.len())
                .filter(|&t| bits >> t & 1 == 1)
                .map(|t| others[t])
                .chain([r.unit()])
                .collect();
            s.sort_unstable();
            s
        })
        .filter(|s| {
            s.iter().all(|&x| {
                s.contains(&r.dual(x))
                    && s.iter().all(|&y| (0..n).all(|z| r.n(x, y, z) == 0 || s.contains(&z)))
            })
        })
        .collect()
}

#[test]
fn corpus_rings_satisfy_the_axioms() {
    for (name, r) in rings() {
        assert!(ring_axioms_hold(&r), "{name}");
        let again = FusionRing::validate(r.labels().to_vec(), r.unit(), r.duals().to_vec(), r.table());
        assert_eq!(again.as_ref(), Ok(&r), "{name}");
    }
}

#[test]
fn fp_dimensions_are_characters() {
    for (name, r) in rings() {
        let fp = fp_dims(&r, 1e-9).unwrap();
        let n = r.rank();
        assert!((fp.fpdim[r.unit()] - 1.0).abs() < 1e-9, "{name}");
        for x in 0..n {
            assert!(fp.fpdim[x] >= 1.0 - 1e-9, "{name}");
            assert!((fp.fpdim[x] - fp.fpdim[r.dual(x)]).abs() < 1e-6, "{name}");
            for y in 0..n {
                let rhs: f64 = (0..n).map(|z| r.n(x, y, z) as f64 * fp.fpdim[z]).sum();
                assert!((fp.fpdim[x] * fp.fpdim[y] - rhs).abs() < 1e-6, "{name}");
            }
        }
        let total: f64 = fp.fpdim.iter().map(|d| d * d).sum();
        assert!((fp.total - total).abs() < 1e-6, "{name}");
    }
}

#[test]
fn known_fp_dimensions() {
    let s3 = fp_dims(&FusionRing::s3_characters(), 1e-9).unwrap();
    assert!(s3.fpdim.iter().zip([1.0, 1.0, 2.0]).all(|(a, b)| (a - b).abs() < 1e-9));
    for g in (1..=12).flat_map(groups_of_order) {
        let fp = fp_dims(&FusionRing::group_ring(&g), 1e-9).unwrap();
        assert!(fp.fpdim.iter().all(|d| (d - 1.0).abs() < 1e-9));
        assert!((fp.total - g.order() as f64).abs() < 1e-9);
    }
}

#[test]
fn subring_lattices_match_brute_force() {
    let lim = Limits::default();
    for (name, r) in rings() {
        let lat = all_subrings(&r, &lim).unwrap();
        let got: BTreeSet<Vec<usize>> = lat.subrings.iter().map(|s| s.indices().to_vec()).collect();
        assert_eq!(got, subrings_oracle(&r), "{name}");
        assert_eq!(got.len(), lat.subrings.len(), "{name}");
        // the modular law, with join computed as the generated subring
        let join = |a: &FusionSubring, b: &FusionSubring| {
            let gens: Vec<usize> = a.indices().iter().chain(b.indices()).copied().collect();
            subring_generated(&r, &gens).unwrap()
        };
        for a in &lat.subrings {
            for c in lat.subrings.iter().filter(|c| a.is_subset_of(c)) {
                for b in &lat.subrings {
                    assert_eq!(join(a, &b.intersection(c)), join(a, b).intersection(c), "{name}");
                }
            }
        }
        assert_eq!(lat.modular, Some(true), "{name}");
        assert!(lat.modular_violations().is_empty());
    }
}

#[test]
fn generated_subrings_are_closed_fixed_points() {
    for (name, r) in rings() {
        let n = r.rank();
        for x in 0..n {
            for y in x..n {
                let s = subring_generated(&r, &[x, y]).unwrap();
                assert!(s.contains(x) && s.contains(y));
                assert_eq!(subring_generated(&r, s.indices()).unwrap(), s, "{name}");
                assert!(subrings_oracle(&r).contains(s.indices()), "{name}");
            }
        }
    }
}

#[test]
fn universal_gradings() {
    let lim = Limits::default();
    for (name, r) in rings() {
        let gr = universal_grading(&r, &lim).unwrap();
        assert!(gr.is_faithful(), "{name}");
        assert_eq!(gr.violation(&r), None, "{name}");
        assert_eq!(gr.trivial_component(), adjoint_subring(&r).unwrap(), "{name}");
        for x in 0..r.rank() {
            for y in 0..r.rank() {
                for z in (0..r.rank()).filter(|&z| r.n(x, y, z) > 0) {
                    assert_eq!(gr.deg[z], gr.group.add_idx(gr.deg[x], gr.deg[y]), "{name}");
                }
            }
        }
        // a group ring is graded by its group
        if name.starts_with("Z[") {
            assert_eq!(gr.group.order() as usize, r.rank(), "{name}");
        }
    }
    let order = |r: &FusionRing| universal_grading(r, &lim).unwrap().group.order();
    assert_eq!(order(&FusionRing::ising()), 2);
    assert_eq!(order(&FusionRing::s3_characters()), 1);
    assert_eq!(order(&FusionRing::product(&FusionRing::ising(), &FusionRing::ising())), 4);
}

#[test]
fn fp_square_classes() {
    for (name, r) in rings() {
        let fp = fp_dims(&r, 1e-9).unwrap();
        let squares = fp_squares(&r, &fp).unwrap();
        for x in 0..r.rank() {
            assert!((fp.fpdim[x].powi(2) - squares[x] as f64).abs() < 1e-6, "{name}");
        }
        let gr = fp_square_grading(&r, &fp).unwrap();
        assert_eq!(gr.violation(&r), None, "{name}");
        // X and Y in the same component have FPdim(X)FPdim(Y) rational
        for x in 0..r.rank() {
            for y in 0..r.rank() {
                let prod = (squares[x] * squares[y]) as f64;
                let is_square = (prod.sqrt().round().powi(2) - prod).abs() < 1e-9;
                assert_eq!(gr.deg[x] == gr.deg[y], is_square, "{name}: {x} {y}");
            }
        }
    }
}

#[test]
fn fibonacci_is_a_bumped_group_ring() {
    // X ⊗ X = 1 + X
    let mut t = FusionRing::group_ring(&FinAbGroup::cyclic(2)).table();
    t[1][1][1] = 1;
    let fib = FusionRing::validate(vec!["1".into(), "X".into()], 0, vec![0, 1], t).unwrap();
    assert!(ring_axioms_hold(&fib));
    let fp = fp_dims(&fib, 1e-9).unwrap();
    assert!((fp.fpdim[1] - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);
    assert_eq!(subrings_oracle(&fib).len(), 2);
    assert!(fp_squares(&fib, &fp).is_err());
}

proptest! {
    #[test]
    fn perturbed_tables_are_judged_by_the_axioms(which in 0usize..1000, entry in 0usize..10_000, bump in 1u32..3) {
        let all = rings();
        let (_, r) = &all[which % all.len()];
        let n = r.rank();
        let mut t = r.table();
        let (x, y, z) = (entry % n, entry / n % n, entry / (n * n) % n);
        t[x][y][z] += bump;
        let got = FusionRing::validate(r.labels().to_vec(), r.unit(), r.duals().to_vec(), t.clone());
        let oracle = FusionRing::validate(r.labels().to_vec(), r.unit(), r.duals().to_vec(), t)
            .map(|s| ring_axioms_hold(&s))
            .unwrap_or(false);
        prop_assert_eq!(got.is_ok(), oracle);
    }
}
