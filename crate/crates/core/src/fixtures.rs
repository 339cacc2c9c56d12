//! Canonical example documents, one per worked example. The repository
//! ships them under `fixtures/`; a test regenerates them from here so the
//! files can never go stale.

use crate::brace::make_weak_brace;
use crate::construct::{matched_product, semidirect_3x3_system, trivial_wb};
use crate::doc::{
    Body, Document, DoubleSystemPayload, MatchedSystemPayload, PairMapPayload, TablePayload,
    WeakBracePayload,
};
use crate::factor::{circ_brace, exact_factorization};
use crate::inverse::as_inverse_semigroup;
use crate::table::{cyclic, join_semilattice, symmetric, CayleyTable};
use crate::ybe::{solution_of, PairMap};
use crate::Elem;

/// The five-element combinatorial Brandt semigroup: four matrix units and a
/// zero. The smallest inverse semigroup that is not Clifford.
pub fn brandt_b2() -> CayleyTable {
    CayleyTable::from_rows(
        vec![
            vec![0, 1, 4, 4, 4],
            vec![4, 4, 0, 1, 4],
            vec![2, 3, 4, 4, 4],
            vec![4, 4, 2, 3, 4],
            vec![4, 4, 4, 4, 4],
        ],
        Some(
            ["e11", "e12", "e21", "e22", "0"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        ),
    )
    .expect("well-formed table")
}

fn weak_brace_doc(wb: &crate::brace::WeakBrace) -> Document {
    Document::new(Body::WeakBrace(WeakBracePayload::from_weak_brace(wb)))
}

fn pair_map_doc(p: &PairMap) -> Document {
    Document::new(Body::PairMap(PairMapPayload::from_pair_map(p)))
}

/// Every shipped fixture as `(file name, document)`.
pub fn all() -> Vec<(&'static str, Document)> {
    let c2 = cyclic(2).expect("cyclic group");
    let chain2 = join_semilattice(2, &[(0, 1)]).expect("two-chain");
    let sym3 = symmetric(3).expect("symmetric group");
    let sym3_view = as_inverse_semigroup(&sym3).expect("group");
    let factorization =
        exact_factorization(&sym3_view, vec![0, 2], vec![0, 3, 4]).expect("exact");
    let circ = circ_brace(&factorization).expect("factorization brace");
    let bullet = crate::factor::bullet_brace(&factorization).expect("factorization brace");
    let sys = semidirect_3x3_system().expect("semidirect system");
    let semidirect = matched_product(&sys);

    let matched_c2 = MatchedSystemPayload {
        s: WeakBracePayload::from_weak_brace(&make_weak_brace(&c2, &c2).expect("trivial")),
        t: WeakBracePayload::from_weak_brace(&make_weak_brace(&c2, &c2).expect("trivial")),
        alpha: None,
        beta: None,
    };
    let matched_semidirect = MatchedSystemPayload {
        s: WeakBracePayload::from_weak_brace(sys.s()),
        t: WeakBracePayload::from_weak_brace(sys.t()),
        alpha: Some(sys.alpha().maps().to_vec()),
        beta: None,
    };

    // double system realizing the factorization brace: the trivial brace on
    // <(12)>, the almost-trivial brace on the normal factor <(123)>, sigma
    // trivial, delta the conjugation action
    let u_table = sym3.subtable(&[0, 2]).expect("subgroup");
    let v_table = sym3.subtable(&[0, 3, 4]).expect("subgroup");
    let s_brace = trivial_wb(&as_inverse_semigroup(&u_table).expect("group")).expect("trivial");
    let t_brace = crate::construct::almost_trivial_wb(
        &as_inverse_semigroup(&v_table).expect("group"),
    )
    .expect("almost trivial");
    let v_elems = [0usize, 3, 4];
    let delta: Vec<Vec<Elem>> = [0usize, 2]
        .iter()
        .map(|&b| {
            v_elems
                .iter()
                .map(|&v| {
                    let conj = sym3.op(sym3.op(sym3_view.inv(b), v), b);
                    v_elems.iter().position(|&x| x == conj).expect("normal factor")
                })
                .collect()
        })
        .collect();
    let double_sym3 = DoubleSystemPayload {
        s: WeakBracePayload::from_weak_brace(&s_brace),
        t: WeakBracePayload::from_weak_brace(&t_brace),
        sigma: None,
        delta: Some(delta),
    };

    vec![
        (
            "c2_trivial.json",
            weak_brace_doc(&make_weak_brace(&c2, &c2).expect("trivial")),
        ),
        (
            "chain2_trivial.json",
            weak_brace_doc(&make_weak_brace(&chain2, &chain2).expect("trivial")),
        ),
        (
            "sym3.json",
            Document::new(Body::Semigroup(TablePayload::from_table(&sym3))),
        ),
        (
            "brandt_b2.json",
            Document::new(Body::Semigroup(TablePayload::from_table(&brandt_b2()))),
        ),
        ("sym3_circ.json", weak_brace_doc(&circ)),
        ("sym3_bullet.json", weak_brace_doc(&bullet)),
        ("sym3_rcirc.json", pair_map_doc(&solution_of(&circ))),
        ("sym3_rbullet.json", pair_map_doc(&solution_of(&bullet))),
        ("twist4.json", pair_map_doc(&PairMap::twist(4))),
        ("semidirect_3x3.json", weak_brace_doc(&semidirect)),
        (
            "matched_c2_trivial.json",
            Document::new(Body::MatchedSystem(matched_c2)),
        ),
        (
            "matched_semidirect_3x3.json",
            Document::new(Body::MatchedSystem(matched_semidirect)),
        ),
        (
            "double_sym3.json",
            Document::new(Body::DoubleSystem(double_sym3)),
        ),
    ]
}
