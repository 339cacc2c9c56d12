//! Inverse-semigroup views over Cayley tables.
//!
//! A semigroup is inverse when every element `a` has a unique `x` with
//! `a x a = a` and `x a x = x`. The view caches that inverse map and the
//! idempotent set; it cannot exist unvalidated, so downstream code may rely
//! on both.

use crate::error::{Error, Result};
use crate::perm;
use crate::table::CayleyTable;
use crate::Elem;

/// A validated inverse semigroup: the table, its inverse map and its
/// sorted idempotent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSemigroupView {
    base: CayleyTable,
    inv: Vec<Elem>,
    idempotents: Vec<Elem>,
}

impl InverseSemigroupView {
    pub fn base(&self) -> &CayleyTable {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    #[inline]
    pub fn op(&self, a: Elem, b: Elem) -> Elem {
        self.base.op(a, b)
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    pub fn inv_map(&self) -> &[Elem] {
        &self.inv
    }

    pub fn idempotents(&self) -> &[Elem] {
        &self.idempotents
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.base.op(a, a) == a
    }

    /// First pair `(e, a)` where an idempotent fails to be central, `None`
    /// when the semigroup is Clifford.
    pub fn clifford_counterexample(&self) -> Option<(Elem, Elem)> {
        let n = self.order();
        for &e in &self.idempotents {
            for a in 0..n {
                if self.op(e, a) != self.op(a, e) {
                    return Some((e, a));
                }
            }
        }
        None
    }

    pub fn is_clifford(&self) -> bool {
        self.clifford_counterexample().is_none()
    }

    /// Basic classification: group, monoid (with its unit), commutative, band.
    pub fn predicates(&self) -> Predicates {
        let n = self.order();
        let monoid_unit =
            (0..n).find(|&e| (0..n).all(|a| self.op(e, a) == a && self.op(a, e) == a));
        Predicates {
            is_group: self.idempotents.len() == 1,
            monoid_unit,
            is_commutative: self.base.is_commutative(),
            is_band: self.idempotents.len() == n,
        }
    }

    /// The view of the transposed table. Inverses and idempotents are
    /// unchanged, so no re-validation is needed.
    pub fn transposed(&self) -> InverseSemigroupView {
        InverseSemigroupView {
            base: self.base.transposed(),
            inv: self.inv.clone(),
            idempotents: self.idempotents.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Predicates {
    pub is_group: bool,
    pub monoid_unit: Option<Elem>,
    pub is_commutative: bool,
    pub is_band: bool,
}

/// Validates a table as an inverse semigroup.
///
/// Fails with the lexicographically first associativity counterexample, or
/// with the first element lacking a unique inverse.
pub fn as_inverse_semigroup(t: &CayleyTable) -> Result<InverseSemigroupView> {
    if let Some((a, b, c)) = t.associativity_counterexample() {
        return Err(Error::NotAssociative { a, b, c });
    }
    let n = t.order();
    let mut inv = Vec::with_capacity(n);
    for a in 0..n {
        let mut found = None;
        for x in 0..n {
            if t.op(t.op(a, x), a) == a && t.op(t.op(x, a), x) == x {
                match found {
                    None => found = Some(x),
                    Some(first) => {
                        return Err(Error::NonUniqueInverse {
                            elem: a,
                            first,
                            second: x,
                        })
                    }
                }
            }
        }
        match found {
            Some(x) => inv.push(x),
            None => return Err(Error::NoInverse { elem: a }),
        }
    }
    let idempotents = (0..n).filter(|&e| t.op(e, e) == e).collect();
    Ok(InverseSemigroupView {
        base: t.clone(),
        inv,
        idempotents,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomKind {
    Homomorphism,
    AntiHomomorphism,
}

/// A validated (anti-)homomorphism from an inverse semigroup into a target
/// magma, witnessed by its value table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomWitness {
    pub kind: HomKind,
    pub map: Vec<Elem>,
}

/// Checks `map[a * b] = map[a] * map[b]` (or the reversed right-hand side for
/// an anti-homomorphism) on all pairs; returns the first failing pair.
pub fn check_hom(
    map: &[Elem],
    source: &InverseSemigroupView,
    target: &CayleyTable,
    kind: HomKind,
) -> std::result::Result<HomWitness, (Elem, Elem)> {
    let n = source.order();
    assert_eq!(map.len(), n, "map must be total on the source carrier");
    for a in 0..n {
        for b in 0..n {
            let lhs = map[source.op(a, b)];
            let rhs = match kind {
                HomKind::Homomorphism => target.op(map[a], map[b]),
                HomKind::AntiHomomorphism => target.op(map[b], map[a]),
            };
            if lhs != rhs {
                return Err((a, b));
            }
        }
    }
    Ok(HomWitness {
        kind,
        map: map.to_vec(),
    })
}

/// An element-indexed family of bijections of another carrier, each required
/// to be an automorphism of the acted table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionFamily {
    maps: Vec<Vec<Elem>>,
    acted_order: usize,
}

impl ActionFamily {
    /// Validates that each map is a bijection of the acted carrier and
    /// preserves its operation.
    pub fn new(maps: Vec<Vec<Elem>>, acted: &CayleyTable) -> Result<Self> {
        let n = acted.order();
        for (u, map) in maps.iter().enumerate() {
            if !perm::is_permutation(map, n) {
                return Err(Error::ActionNotBijective { index: u });
            }
            for a in 0..n {
                for b in 0..n {
                    if map[acted.op(a, b)] != acted.op(map[a], map[b]) {
                        return Err(Error::ActionNotAutomorphism { index: u, a, b });
                    }
                }
            }
        }
        Ok(ActionFamily {
            maps,
            acted_order: n,
        })
    }

    /// The all-identity family, valid for any table of the right order.
    pub fn trivial(acting_order: usize, acted_order: usize) -> Self {
        ActionFamily {
            maps: vec![perm::identity(acted_order); acting_order],
            acted_order,
        }
    }

    /// Wraps maps without checking them against any table. Parsers use this;
    /// every consumer re-validates through [`ActionFamily::new`] before use.
    pub fn raw(maps: Vec<Vec<Elem>>, acted_order: usize) -> Self {
        ActionFamily { maps, acted_order }
    }

    pub fn acting_order(&self) -> usize {
        self.maps.len()
    }

    pub fn acted_order(&self) -> usize {
        self.acted_order
    }

    #[inline]
    pub fn apply(&self, u: Elem, a: Elem) -> Elem {
        self.maps[u][a]
    }

    pub fn map(&self, u: Elem) -> &[Elem] {
        &self.maps[u]
    }

    pub fn maps(&self) -> &[Vec<Elem>] {
        &self.maps
    }

    /// Inverse bijections of every member, as a plain table of maps.
    pub fn inverses(&self) -> Vec<Vec<Elem>> {
        self.maps.iter().map(|m| perm::inverse(m)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table;

    fn chain2() -> CayleyTable {
        table::join_semilattice(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn chain_semilattice_view() {
        let v = as_inverse_semigroup(&chain2()).unwrap();
        assert_eq!(v.inv_map(), &[0, 1]);
        assert_eq!(v.idempotents(), &[0, 1]);
        assert!(v.is_clifford());
    }

    #[test]
    fn left_zero_semigroup_has_non_unique_inverses() {
        let t = CayleyTable::from_rows(vec![vec![0, 0], vec![1, 1]], None).unwrap();
        assert_eq!(
            as_inverse_semigroup(&t),
            Err(Error::NonUniqueInverse {
                elem: 0,
                first: 0,
                second: 1
            })
        );
    }

    #[test]
    fn non_associative_table_is_rejected_first() {
        let t = CayleyTable::from_rows(vec![vec![0, 1], vec![0, 0]], None).unwrap();
        assert_eq!(
            as_inverse_semigroup(&t),
            Err(Error::NotAssociative { a: 1, b: 0, c: 1 })
        );
    }

    #[test]
    fn cyclic_group_predicates() {
        let v = as_inverse_semigroup(&table::cyclic(2).unwrap()).unwrap();
        let p = v.predicates();
        assert!(p.is_group);
        assert_eq!(p.monoid_unit, Some(0));
        assert!(p.is_commutative);
        assert!(!p.is_band);
    }

    #[test]
    fn chain_predicates() {
        let v = as_inverse_semigroup(&chain2()).unwrap();
        let p = v.predicates();
        assert!(!p.is_group);
        // the join identity is the bottom of the chain
        assert_eq!(p.monoid_unit, Some(0));
        assert!(p.is_commutative);
        assert!(p.is_band);
    }

    #[test]
    fn sym3_is_clifford_as_a_group() {
        let v = as_inverse_semigroup(&table::symmetric(3).unwrap()).unwrap();
        assert!(v.is_clifford());
        assert!(v.predicates().is_group);
    }

    #[test]
    fn identity_map_is_a_homomorphism() {
        let v = as_inverse_semigroup(&table::cyclic(2).unwrap()).unwrap();
        let t = table::cyclic(2).unwrap();
        assert!(check_hom(&[0, 1], &v, &t, HomKind::Homomorphism).is_ok());
    }

    #[test]
    fn inversion_on_sym3_is_not_a_homomorphism() {
        let t = table::symmetric(3).unwrap();
        let v = as_inverse_semigroup(&t).unwrap();
        let inv_map = v.inv_map().to_vec();
        let err = check_hom(&inv_map, &v, &t, HomKind::Homomorphism).unwrap_err();
        // first failing pair is lexicographically least; inversion is an
        // anti-automorphism so some non-commuting pair must fail
        assert_eq!(err, (1, 2));
        assert!(check_hom(&inv_map, &v, &t, HomKind::AntiHomomorphism).is_ok());
    }
}
