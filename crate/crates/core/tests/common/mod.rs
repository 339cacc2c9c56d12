//! Shared fixtures and independent oracles for the integration suites.
//!
//! The oracles here deliberately avoid the library's own validation and
//! enumeration paths: they work on raw row tables with their own loops, so
//! that agreement with the crate is evidence rather than tautology.

#![allow(dead_code)]

use itertools::Itertools;

use ybrace_core::brace::{make_weak_brace, WeakBrace};
use ybrace_core::construct::{matched_product, semidirect_3x3_system, trivial_wb};
use ybrace_core::factor::sym3_showcase;
use ybrace_core::inverse::as_inverse_semigroup;
use ybrace_core::table::{cyclic, join_semilattice, symmetric, CayleyTable};
use ybrace_core::ybe::PairMap;

pub type Rows = Vec<Vec<usize>>;

pub fn rows_associative(t: &Rows) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
}

/// Inverse assignments a la brute force: every vector `inv` with
/// `a inv[a] a = a` and `inv[a] a inv[a] = inv[a]`. The table is an inverse
/// semigroup exactly when it is associative and exactly one assignment
/// exists.
pub fn rows_inverse_assignments(t: &Rows) -> Vec<Vec<usize>> {
    let n = t.len();
    let per_element: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .filter(|&x| t[t[a][x]][a] == a && t[t[x][a]][x] == x)
                .collect()
        })
        .collect();
    per_element
        .into_iter()
        .multi_cartesian_product()
        .collect()
}

pub fn rows_is_inverse_semigroup(t: &Rows) -> bool {
    rows_associative(t) && rows_inverse_assignments(t).len() == 1
}

/// All tables of the given order, by full scan over all n^(n^2) fillings.
pub fn all_rows(n: usize) -> impl Iterator<Item = Rows> {
    let cells = n * n;
    (0..n.pow(cells as u32)).map(move |mut code| {
        let mut rows = vec![vec![0; n]; n];
        for i in 0..cells {
            rows[i / n][i % n] = code % n;
            code /= n;
        }
        rows
    })
}

/// Minimal flattened relabeling of one or two tables, computed with its own
/// permutation loop.
pub fn rows_canonical(tables: &[&Rows]) -> Vec<usize> {
    let n = tables[0].len();
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut q = vec![0; n];
            for (i, &x) in p.iter().enumerate() {
                q[x] = i;
            }
            let mut flat = Vec::with_capacity(tables.len() * n * n);
            for t in tables {
                for i in 0..n {
                    for j in 0..n {
                        flat.push(p[t[q[i]][q[j]]]);
                    }
                }
            }
            flat
        })
        .min()
        .unwrap()
}

/// Raw weak-brace axiom check on a pair of row tables, given their unique
/// inverse assignments.
pub fn rows_weak_brace(add: &Rows, mul: &Rows) -> bool {
    if !rows_is_inverse_semigroup(add) || !rows_is_inverse_semigroup(mul) {
        return false;
    }
    let neg = &rows_inverse_assignments(add)[0];
    let minv = &rows_inverse_assignments(mul)[0];
    let n = add.len();
    let distributive = (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| mul[a][add[b][c]] == add[add[mul[a][b]][neg[a]]][mul[a][c]])
        })
    });
    distributive && (0..n).all(|a| mul[a][minv[a]] == add[neg[a]][a])
}

/// Independent braid evaluator: both sides composed explicitly on triples.
pub fn braid_holds(p: &PairMap) -> bool {
    let n = p.order();
    let r = |(a, b): (usize, usize)| p.apply(a, b);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                // left side: positions (1,2), (2,3), (1,2)
                let (x1, y1) = r((a, b));
                let (y2, z2) = r((y1, c));
                let (x3, y3) = r((x1, y2));
                let lhs = (x3, y3, z2);
                // right side: positions (2,3), (1,2), (2,3)
                let (u1, v1) = r((b, c));
                let (w2, u2) = r((a, u1));
                let (u3, v3) = r((u2, v1));
                let rhs = (w2, u3, v3);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

pub fn brandt_b2() -> CayleyTable {
    CayleyTable::from_rows(
        vec![
            vec![0, 1, 4, 4, 4],
            vec![4, 4, 0, 1, 4],
            vec![2, 3, 4, 4, 4],
            vec![4, 4, 2, 3, 4],
            vec![4, 4, 4, 4, 4],
        ],
        None,
    )
    .unwrap()
}

pub fn c2_trivial() -> WeakBrace {
    let t = cyclic(2).unwrap();
    make_weak_brace(&t, &t).unwrap()
}

pub fn chain2_trivial() -> WeakBrace {
    let t = join_semilattice(2, &[(0, 1)]).unwrap();
    make_weak_brace(&t, &t).unwrap()
}

/// Every weak brace the acceptance criteria call "the corpus": all braces
/// enumerated at orders 1..=3 plus the named fixtures.
pub fn corpus() -> Vec<WeakBrace> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.extend(
            ybrace_core::enumerate::enumerate_weak_braces(n, 4)
                .unwrap()
                .reps,
        );
    }
    let sym3 = as_inverse_semigroup(&symmetric(3).unwrap()).unwrap();
    out.push(c2_trivial());
    out.push(c2_trivial().opposite());
    out.push(chain2_trivial());
    out.push(chain2_trivial().opposite());
    out.push(trivial_wb(&sym3).unwrap());
    out.push(ybrace_core::construct::almost_trivial_wb(&sym3).unwrap());
    out.push(matched_product(&semidirect_3x3_system().unwrap()));
    let show = sym3_showcase().unwrap();
    out.push(show.circ);
    out.push(show.bullet);
    out
}
