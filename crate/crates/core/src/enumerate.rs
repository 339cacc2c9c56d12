//! Exhaustive generation of inverse semigroups and weak braces of small
//! order, up to isomorphism, by backtracking table fill with incremental
//! associativity and inverse-feasibility pruning.

use crate::brace::{make_weak_brace, WeakBrace};
use crate::error::{Error, Result};
use crate::perm;
use crate::table::CayleyTable;
use crate::Elem;

/// Default order cap: order-4 backtracking is tractable, order-5 pairs
/// explode combinatorially.
pub const DEFAULT_ENUM_CAP: usize = 4;

const UNSET: Elem = usize::MAX;

/// Lexicographically minimal flattened table bytes over all relabelings.
/// Two structures have equal canonical forms exactly when one bijection is
/// simultaneously an isomorphism of every listed operation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u8>);

fn relabeled_bytes(tables: &[&CayleyTable], p: &[Elem]) -> Vec<u8> {
    let n = p.len();
    let q = perm::inverse(p);
    let mut out = Vec::with_capacity(tables.len() * n * n);
    for t in tables {
        for i in 0..n {
            for j in 0..n {
                out.push(p[t.op(q[i], q[j])] as u8);
            }
        }
    }
    out
}

pub fn table_canonical_form(t: &CayleyTable) -> CanonicalForm {
    let n = t.order();
    CanonicalForm(
        perm::all(n)
            .map(|p| relabeled_bytes(&[t], &p))
            .min()
            .expect("at least the identity relabeling"),
    )
}

pub fn weak_brace_canonical_form(wb: &WeakBrace) -> CanonicalForm {
    let tables = [wb.add_view().base(), wb.mul_view().base()];
    let n = wb.order();
    CanonicalForm(
        perm::all(n)
            .map(|p| relabeled_bytes(&tables, &p))
            .min()
            .expect("at least the identity relabeling"),
    )
}

struct Fill {
    n: usize,
    cells: Vec<Elem>,
    out: Vec<CayleyTable>,
}

impl Fill {
    #[inline]
    fn get(&self, a: Elem, b: Elem) -> Elem {
        self.cells[a * self.n + b]
    }

    /// True while no fully determined triple violates associativity.
    fn associativity_consistent(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let abc = self.get(ab, c);
                    if abc == UNSET {
                        continue;
                    }
                    let bc = self.get(b, c);
                    if bc == UNSET {
                        continue;
                    }
                    let abc2 = self.get(a, bc);
                    if abc2 != UNSET && abc != abc2 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True while every element still has a candidate inverse and no element
    /// already has two confirmed inverses.
    fn inverses_feasible(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            let mut possible = 0;
            let mut confirmed = 0;
            for x in 0..n {
                let status = self.inverse_status(a, x);
                if status != Status::RuledOut {
                    possible += 1;
                }
                if status == Status::Confirmed {
                    confirmed += 1;
                }
            }
            if possible == 0 || confirmed > 1 {
                return false;
            }
        }
        true
    }

    fn inverse_status(&self, a: Elem, x: Elem) -> Status {
        // a x a = a and x a x = x, evaluated as far as the table is filled
        let mut all_known = true;
        for (p, q, want) in [(a, x, a), (x, a, x)] {
            let pq = self.get(p, q);
            if pq == UNSET {
                all_known = false;
                continue;
            }
            let pqp = self.get(pq, p);
            if pqp == UNSET {
                all_known = false;
            } else if pqp != want {
                return Status::RuledOut;
            }
        }
        if all_known {
            Status::Confirmed
        } else {
            Status::Open
        }
    }

    fn unique_inverses(&self) -> bool {
        (0..self.n).all(|a| {
            (0..self.n)
                .filter(|&x| self.inverse_status(a, x) == Status::Confirmed)
                .count()
                == 1
        })
    }

    fn recurse(&mut self, idx: usize) {
        if idx == self.n * self.n {
            if self.unique_inverses() {
                let rows = (0..self.n)
                    .map(|a| self.cells[a * self.n..(a + 1) * self.n].to_vec())
                    .collect();
                self.out
                    .push(CayleyTable::from_rows(rows, None).expect("filled table"));
            }
            return;
        }
        for v in 0..self.n {
            self.cells[idx] = v;
            if self.associativity_consistent() && self.inverses_feasible() {
                self.recurse(idx + 1);
            }
        }
        self.cells[idx] = UNSET;
    }
}

#[derive(PartialEq, Eq, Clone, Copy)]
enum Status {
    Confirmed,
    Open,
    RuledOut,
}

/// All labeled inverse-semigroup tables on `0..n-1`, in lexicographic order
/// of their flattened cells, plus canonical representatives.
#[derive(Debug, Clone)]
pub struct TableEnumeration {
    pub labeled: Vec<CayleyTable>,
    pub reps: Vec<CayleyTable>,
}

pub fn enumerate_inverse_semigroups(n: usize, cap: usize) -> Result<TableEnumeration> {
    if n == 0 || n > cap {
        return Err(Error::OrderTooLarge { order: n, cap });
    }
    let mut fill = Fill {
        n,
        cells: vec![UNSET; n * n],
        out: Vec::new(),
    };
    fill.recurse(0);
    let labeled = fill.out;
    let reps = dedup_by_canonical(labeled.iter().map(|t| (table_canonical_form(t), t.clone())));
    Ok(TableEnumeration { labeled, reps })
}

fn dedup_by_canonical<T>(items: impl Iterator<Item = (CanonicalForm, T)>) -> Vec<T> {
    let mut map = std::collections::BTreeMap::new();
    for (form, item) in items {
        map.entry(form).or_insert(item);
    }
    map.into_values().collect()
}

/// All weak braces on `0..n-1`, labeled and up to isomorphism.
///
/// Pairs are drawn from the labeled inverse-semigroup tables; the second
/// table is only paired when its idempotent set matches the first's, which
/// can never exclude a valid brace because the two idempotent sets of a weak
/// brace coincide. A test compares this against the unpruned pairing.
#[derive(Debug, Clone)]
pub struct BraceEnumeration {
    pub labeled: Vec<WeakBrace>,
    pub reps: Vec<WeakBrace>,
}

pub fn enumerate_weak_braces(n: usize, cap: usize) -> Result<BraceEnumeration> {
    let tables = enumerate_inverse_semigroups(n, cap)?.labeled;
    let idempotent_sets: Vec<Vec<Elem>> = tables
        .iter()
        .map(|t| (0..n).filter(|&e| t.op(e, e) == e).collect())
        .collect();
    let mut labeled = Vec::new();
    let mut canon = Vec::new();
    for (i, add) in tables.iter().enumerate() {
        for (j, mul) in tables.iter().enumerate() {
            if idempotent_sets[i] != idempotent_sets[j] {
                continue;
            }
            if let Ok(wb) = make_weak_brace(add, mul) {
                canon.push((weak_brace_canonical_form(&wb), wb.clone()));
                labeled.push(wb);
            }
        }
    }
    let reps = dedup_by_canonical(canon.into_iter());
    Ok(BraceEnumeration { labeled, reps })
}

/// First bijection (in lexicographic order) that is simultaneously an
/// isomorphism of both operations, or `None`.
pub fn are_isomorphic(wb1: &WeakBrace, wb2: &WeakBrace) -> Option<Vec<Elem>> {
    if wb1.order() != wb2.order() {
        return None;
    }
    let n = wb1.order();
    perm::all(n).find(|p| {
        (0..n).all(|a| {
            (0..n).all(|b| {
                p[wb1.add(a, b)] == wb2.add(p[a], p[b])
                    && p[wb1.mul(a, b)] == wb2.mul(p[a], p[b])
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table;

    #[test]
    fn order_one_enumerations() {
        let ts = enumerate_inverse_semigroups(1, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(ts.labeled.len(), 1);
        assert_eq!(ts.reps.len(), 1);
        let bs = enumerate_weak_braces(1, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(bs.labeled.len(), 1);
        assert_eq!(bs.reps.len(), 1);
    }

    #[test]
    fn order_two_has_the_group_and_the_chain() {
        let ts = enumerate_inverse_semigroups(2, DEFAULT_ENUM_CAP).unwrap();
        // two labelings of the cyclic group, two of the chain semilattice
        assert_eq!(ts.labeled.len(), 4);
        assert_eq!(ts.reps.len(), 2);
        let bs = enumerate_weak_braces(2, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(bs.reps.len(), 2);
    }

    #[test]
    fn idempotent_pruning_matches_unpruned_pairing() {
        for n in 1..=3 {
            let tables = enumerate_inverse_semigroups(n, DEFAULT_ENUM_CAP)
                .unwrap()
                .labeled;
            let mut unpruned = 0;
            for add in &tables {
                for mul in &tables {
                    if make_weak_brace(add, mul).is_ok() {
                        unpruned += 1;
                    }
                }
            }
            let pruned = enumerate_weak_braces(n, DEFAULT_ENUM_CAP).unwrap();
            assert_eq!(pruned.labeled.len(), unpruned, "order {n}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_inverse_semigroups(5, 4),
            Err(Error::OrderTooLarge { order: 5, cap: 4 })
        ));
    }

    #[test]
    fn isomorphism_finds_the_identity_on_equal_braces() {
        let t = table::cyclic(3).unwrap();
        let wb = make_weak_brace(&t, &t).unwrap();
        assert_eq!(are_isomorphic(&wb, &wb), Some(vec![0, 1, 2]));
    }

    #[test]
    fn meet_and_join_chains_are_isomorphic_braces() {
        let and = CayleyTable::from_rows(vec![vec![0, 0], vec![0, 1]], None).unwrap();
        let or = CayleyTable::from_rows(vec![vec![0, 1], vec![1, 1]], None).unwrap();
        let wb1 = make_weak_brace(&and, &and).unwrap();
        let wb2 = make_weak_brace(&or, &or).unwrap();
        assert_eq!(are_isomorphic(&wb1, &wb2), Some(vec![1, 0]));
        assert_eq!(
            weak_brace_canonical_form(&wb1),
            weak_brace_canonical_form(&wb2)
        );
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let t = table::symmetric(3).unwrap();
        let wb = make_weak_brace(&t, &t).unwrap();
        let base = weak_brace_canonical_form(&wb);
        for rank in [1, 37, 240, 719] {
            let p = perm::unrank(6, rank);
            assert_eq!(weak_brace_canonical_form(&wb.permuted(&p)), base);
        }
    }
}
