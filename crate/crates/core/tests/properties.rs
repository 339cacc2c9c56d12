//! Exhaustive and property-based invariant checks across the fixture corpus.

mod common;

use proptest::prelude::*;

use common::*;
use ybrace_core::brace::{check_semibrace_form, make_weak_brace, structural_report};
use ybrace_core::enumerate::{
    are_isomorphic, enumerate_weak_braces, weak_brace_canonical_form,
};
use ybrace_core::inverse::as_inverse_semigroup;
use ybrace_core::table::{cyclic, direct_product, CayleyTable};
use ybrace_core::ybe::{
    are_equivalent, check_braid, check_componentwise, classify, compose, idempotent_companion,
    op_solution, power, power_closed_form, regularity_report, solution_of, PairMap,
};
use ybrace_core::{perm, Elem};

/// Table validation agrees with the brute-force inverse-assignment oracle on
/// every table of order <= 3.
#[test]
fn inverse_semigroup_check_agrees_with_assignment_oracle_up_to_order_3() {
    for n in 1..=3 {
        for rows in all_rows(n) {
            let by_oracle = rows_is_inverse_semigroup(&rows);
            let t = CayleyTable::from_rows(rows, None).unwrap();
            let by_library = as_inverse_semigroup(&t).is_ok();
            assert_eq!(by_library, by_oracle, "table {:?}", t.rows());
        }
    }
}

#[test]
fn view_invariants_hold_on_all_small_inverse_semigroups() {
    for n in 1..=3 {
        for rows in all_rows(n) {
            let t = CayleyTable::from_rows(rows, None).unwrap();
            let Ok(v) = as_inverse_semigroup(&t) else {
                continue;
            };
            for a in 0..n {
                assert_eq!(v.inv(v.inv(a)), a, "inv is an involution");
                for b in 0..n {
                    assert_eq!(
                        v.inv(v.op(a, b)),
                        v.op(v.inv(b), v.inv(a)),
                        "inv reverses products"
                    );
                }
            }
            for &e in v.idempotents() {
                assert_eq!(v.inv(e), e, "idempotents are self-inverse");
                for &f in v.idempotents() {
                    assert_eq!(v.op(e, f), v.op(f, e), "idempotents commute");
                    assert!(
                        v.idempotents().contains(&v.op(e, f)),
                        "idempotents are closed"
                    );
                }
            }
        }
    }
}

#[test]
fn direct_product_of_inverse_semigroups_has_componentwise_inverses() {
    let b2 = as_inverse_semigroup(&brandt_b2()).unwrap();
    let c3 = as_inverse_semigroup(&cyclic(3).unwrap()).unwrap();
    let prod = as_inverse_semigroup(&direct_product(b2.base(), c3.base())).unwrap();
    let n2 = c3.order();
    for a in 0..b2.order() {
        for u in 0..n2 {
            assert_eq!(prod.inv(a * n2 + u), b2.inv(a) * n2 + c3.inv(u));
        }
    }
}

/// The whole corpus satisfies the weak-brace identity toolbox, the
/// equivalent axiom form, and the componentwise braid conditions.
#[test]
fn corpus_satisfies_identity_toolbox() {
    for wb in corpus() {
        let report = structural_report(&wb);
        assert!(
            report.all_hold(),
            "failed identities: {:?}",
            report
                .checks
                .iter()
                .filter(|c| !c.holds)
                .map(|c| c.name)
                .collect::<Vec<_>>()
        );
        assert!(check_semibrace_form(&wb).all_hold());
        assert!(check_componentwise(&wb).all_hold());
    }
}

#[test]
fn corpus_solutions_pass_braid_and_the_independent_evaluator() {
    for wb in corpus() {
        let r = solution_of(&wb);
        assert!(check_braid(&r));
        assert!(braid_holds(&r), "independent braid evaluator disagrees");
    }
}

#[test]
fn corpus_complete_regularity() {
    for wb in corpus() {
        assert!(regularity_report(&wb).unwrap().all_hold());
    }
}

#[test]
fn corpus_power_laws_and_closed_form() {
    for wb in corpus() {
        let r = solution_of(&wb);
        let n = wb.order();
        if wb.add_view().base().is_commutative() {
            assert_eq!(power(&r, 3), r, "commutative addition forces r^3 = r");
        }
        if wb.add_view().idempotents().len() == n {
            assert_eq!(power(&r, 3), power(&r, 2), "band addition forces r^3 = r^2");
        }
        for k in 1..=6 {
            let rk = power(&r, k);
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(power_closed_form(&wb, k, a, b), rk.apply(a, b));
                }
            }
        }
    }
}

#[test]
fn corpus_opposite_is_an_involution_and_stays_isomorphic_to_the_list() {
    for n in 1..=3 {
        let reps = enumerate_weak_braces(n, 4).unwrap().reps;
        for wb in &reps {
            assert_eq!(wb.opposite().opposite(), *wb);
            let opp = wb.opposite();
            assert!(
                reps.iter().any(|other| are_isomorphic(&opp, other).is_some()),
                "opposite of an order-{n} brace must appear in the list"
            );
        }
    }
}

#[test]
fn equivalence_witnesses_invert() {
    let show = ybrace_core::factor::sym3_showcase().unwrap();
    let pairs = [
        (solution_of(&c2_trivial()), PairMap::twist(2)),
        (show.r_circ.clone(), show.r_circ.clone()),
        (show.r_bullet.clone(), show.r_bullet.clone()),
    ];
    for (p, q) in &pairs {
        if let Some(f) = are_equivalent(p, q, 8).unwrap() {
            let g = perm::inverse(&f);
            let n = p.order();
            for a in 0..n {
                for b in 0..n {
                    let (x, y) = q.apply(a, b);
                    assert_eq!((g[x], g[y]), p.apply(g[a], g[b]));
                }
            }
        } else {
            panic!("expected a witness");
        }
    }
}

#[test]
fn twist_maps_of_equal_order_are_equivalent_via_the_identity() {
    // trivial braces over the two groups of order 4 share the twist solution
    let z4 = cyclic(4).unwrap();
    let klein = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap());
    let r1 = solution_of(&make_weak_brace(&z4, &z4).unwrap());
    let r2 = solution_of(&make_weak_brace(&klein, &klein).unwrap());
    assert_eq!(r1, PairMap::twist(4));
    assert_eq!(r2, PairMap::twist(4));
    assert_eq!(
        are_equivalent(&r1, &r2, 8).unwrap(),
        Some(vec![0, 1, 2, 3])
    );
}

#[test]
fn involutive_implies_bijective_on_corpus_profiles() {
    for wb in corpus() {
        let profile = classify(&solution_of(&wb));
        if profile.involutive {
            assert!(profile.bijective);
        }
    }
}

#[test]
fn trivial_brace_solutions_on_commutative_clifford_are_cubic() {
    // commutative Clifford carrier: trivial and almost-trivial coincide and
    // the solution is cubic
    let t = ybrace_core::table::join_semilattice(3, &[(1, 0), (2, 0)]).unwrap();
    let wb = make_weak_brace(&t, &t).unwrap();
    let profile = classify(&solution_of(&wb));
    assert!(profile.satisfies_ybe);
    assert!(profile.cubic);
}

#[test]
fn idempotent_companion_works_on_non_clifford_carriers() {
    let v = as_inverse_semigroup(&brandt_b2()).unwrap();
    let s = idempotent_companion(&v);
    assert!(check_braid(&s));
    assert!(braid_holds(&s));
    assert_eq!(compose(&s, &s).unwrap(), s);
}

#[test]
fn op_solution_equals_inverse_on_skew_braces() {
    let show = ybrace_core::factor::sym3_showcase().unwrap();
    for wb in [&show.circ, &show.bullet] {
        let r = solution_of(wb);
        let rop = op_solution(wb).unwrap();
        assert!(r.is_bijective());
        assert!(compose(&r, &rop).unwrap().is_identity());
        assert!(compose(&rop, &r).unwrap().is_identity());
    }
}

proptest! {
    /// Random small tables agree with the assignment oracle (redundant with
    /// the exhaustive order-3 scan, but also exercises order 4).
    #[test]
    fn random_order4_tables_agree_with_oracle(cells in proptest::collection::vec(0usize..4, 16)) {
        let rows: Vec<Vec<Elem>> = cells.chunks(4).map(|c| c.to_vec()).collect();
        let by_oracle = rows_is_inverse_semigroup(&rows);
        let t = CayleyTable::from_rows(rows, None).unwrap();
        prop_assert_eq!(as_inverse_semigroup(&t).is_ok(), by_oracle);
    }

    /// Canonical forms are invariant under relabeling.
    #[test]
    fn canonical_form_is_permutation_invariant(rank in 0usize..720) {
        let show = ybrace_core::factor::sym3_showcase().unwrap();
        let p = perm::unrank(6, rank);
        prop_assert_eq!(
            weak_brace_canonical_form(&show.circ.permuted(&p)),
            weak_brace_canonical_form(&show.circ)
        );
    }

    /// Composition power agrees with naive repeated application.
    #[test]
    fn power_is_iterated_composition(k in 0usize..6) {
        let wb = chain2_trivial();
        let r = solution_of(&wb);
        let mut naive = PairMap::identity(2);
        for _ in 0..k {
            naive = compose(&r, &naive).unwrap();
        }
        prop_assert_eq!(power(&r, k), naive);
    }
}
