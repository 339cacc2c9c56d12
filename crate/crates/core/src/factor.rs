//! Exact factorizations of Clifford semigroups and the weak braces they
//! induce: `a o b = u_a + b + v_a` where `a = u_a + v_a` is the unique
//! decomposition into the two factors.

use crate::brace::{make_weak_brace, WeakBrace};
use crate::error::{Error, Result};
use crate::inverse::{as_inverse_semigroup, InverseSemigroupView};
use crate::table;
use crate::ybe::{self, PairMap};
use crate::Elem;

/// Default cap on the ambient carrier for the subsemigroup pair scan.
pub const DEFAULT_FACTOR_CAP: usize = 12;

/// An exact factorization of an inverse semigroup into two Clifford
/// subsemigroups: every element decomposes uniquely as `u + v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactFactorization {
    ambient: InverseSemigroupView,
    u: Vec<Elem>,
    v: Vec<Elem>,
    factor_of: Vec<(Elem, Elem)>,
}

impl ExactFactorization {
    pub fn ambient(&self) -> &InverseSemigroupView {
        &self.ambient
    }

    pub fn u(&self) -> &[Elem] {
        &self.u
    }

    pub fn v(&self) -> &[Elem] {
        &self.v
    }

    /// The unique `(u_a, v_a)` with `a = u_a + v_a`.
    pub fn decompose(&self, a: Elem) -> (Elem, Elem) {
        self.factor_of[a]
    }
}

/// Closure of a subset under the table operation.
fn close(t: &InverseSemigroupView, seed: &[Elem]) -> Vec<Elem> {
    let n = t.order();
    let mut in_set = vec![false; n];
    let mut stack: Vec<Elem> = seed.to_vec();
    for &x in seed {
        in_set[x] = true;
    }
    while let Some(x) = stack.pop() {
        for y in 0..n {
            if in_set[y] {
                for z in [t.op(x, y), t.op(y, x)] {
                    if !in_set[z] {
                        in_set[z] = true;
                        stack.push(z);
                    }
                }
            }
        }
    }
    (0..n).filter(|&i| in_set[i]).collect()
}

/// All nonempty closed subsets, generated by closure completion from
/// generator sets rather than a raw power-set scan.
fn all_subsemigroups(t: &InverseSemigroupView) -> Vec<Vec<Elem>> {
    let n = t.order();
    let mut seen = std::collections::BTreeSet::new();
    let mut queue: Vec<Vec<Elem>> = Vec::new();
    for a in 0..n {
        let c = close(t, &[a]);
        if seen.insert(c.clone()) {
            queue.push(c);
        }
    }
    while let Some(current) = queue.pop() {
        for a in 0..n {
            if current.binary_search(&a).is_err() {
                let mut seed = current.clone();
                seed.push(a);
                let c = close(t, &seed);
                if seen.insert(c.clone()) {
                    queue.push(c);
                }
            }
        }
    }
    seen.into_iter().collect()
}

fn is_clifford_standalone(t: &InverseSemigroupView, elems: &[Elem]) -> bool {
    match t.base().subtable(elems) {
        Ok(sub) => as_inverse_semigroup(&sub).map(|v| v.is_clifford()).unwrap_or(false),
        Err(_) => false,
    }
}

fn try_exact(
    ambient: &InverseSemigroupView,
    u: &[Elem],
    v: &[Elem],
) -> Option<Vec<(Elem, Elem)>> {
    let n = ambient.order();
    let mut factor_of: Vec<Option<(Elem, Elem)>> = vec![None; n];
    for &x in u {
        for &y in v {
            let a = ambient.op(x, y);
            match factor_of[a] {
                None => factor_of[a] = Some((x, y)),
                Some(_) => return None,
            }
        }
    }
    factor_of.into_iter().collect()
}

/// Enumerates all exact factorizations of `ambient` into two Clifford
/// subsemigroups, ordered by the `U` element list and then by `V`.
pub fn find_exact_factorizations(
    ambient: &InverseSemigroupView,
    cap: usize,
) -> Result<Vec<ExactFactorization>> {
    let n = ambient.order();
    if n > cap {
        return Err(Error::CarrierTooLarge { order: n, cap });
    }
    let subs: Vec<Vec<Elem>> = all_subsemigroups(ambient)
        .into_iter()
        .filter(|s| is_clifford_standalone(ambient, s))
        .collect();
    let mut out = Vec::new();
    for u in &subs {
        for v in &subs {
            // orders must multiply out to the ambient order
            if u.len() * v.len() != n {
                continue;
            }
            if let Some(factor_of) = try_exact(ambient, u, v) {
                out.push(ExactFactorization {
                    ambient: ambient.clone(),
                    u: u.clone(),
                    v: v.clone(),
                    factor_of,
                });
            }
        }
    }
    Ok(out)
}

/// Builds an `ExactFactorization` from explicitly given factors.
pub fn exact_factorization(
    ambient: &InverseSemigroupView,
    u: Vec<Elem>,
    v: Vec<Elem>,
) -> Result<ExactFactorization> {
    for set in [&u, &v] {
        if close(ambient, set) != *set {
            return Err(Error::Malformed("factor is not a closed subset".into()));
        }
        if !is_clifford_standalone(ambient, set) {
            return Err(Error::FactorNotClifford);
        }
    }
    match try_exact(ambient, &u, &v) {
        Some(factor_of) => Ok(ExactFactorization {
            ambient: ambient.clone(),
            u,
            v,
            factor_of,
        }),
        None => Err(Error::SwappedNotExact {
            detail: "decomposition is not unique or not total".into(),
        }),
    }
}

/// The weak brace `(S, +, o)` with `a o b = u_a + b + v_a`.
///
/// Also asserts the structural facts that come with the construction:
/// `a^- = -u_a - v_a`, and `eta(u, v) = u - v` is an isomorphism from the
/// additive direct product `U x V` onto `(S, o)`.
pub fn circ_brace(f: &ExactFactorization) -> Result<WeakBrace> {
    let s = &f.ambient;
    let n = s.order();
    let rows = (0..n)
        .map(|a| {
            let (ua, va) = f.factor_of[a];
            (0..n).map(|b| s.op(s.op(ua, b), va)).collect()
        })
        .collect();
    let mul = table::CayleyTable::from_rows(rows, s.base().labels().map(|l| l.to_vec()))?;
    let wb = make_weak_brace(s.base(), &mul)?;
    for a in 0..n {
        let (ua, va) = f.factor_of[a];
        assert_eq!(
            wb.minv(a),
            s.op(s.inv(ua), s.inv(va)),
            "multiplicative inverse must be -u_a - v_a"
        );
    }
    // eta is a bijection carrying the componentwise sum to the product
    let mut image = vec![false; n];
    for &u in &f.u {
        for &v in &f.v {
            let e = s.op(u, s.inv(v));
            assert!(!image[e], "eta must be injective");
            image[e] = true;
            for &u2 in &f.u {
                for &v2 in &f.v {
                    let lhs = s.op(s.op(u, u2), s.inv(s.op(v, v2)));
                    let rhs = wb.mul(e, s.op(u2, s.inv(v2)));
                    assert_eq!(lhs, rhs, "eta must carry the sum to the product");
                }
            }
        }
    }
    Ok(wb)
}

/// The companion brace built from the swapped decomposition `a = v_a' + u_a'`
/// with `a o b = v_a' + b + u_a'`. Exactness of the swapped pair is checked;
/// it is not automatic for semigroups.
pub fn bullet_brace(f: &ExactFactorization) -> Result<WeakBrace> {
    let swapped = exact_factorization(&f.ambient, f.v.clone(), f.u.clone())?;
    circ_brace(&swapped)
}

/// Everything the symmetric-group showcase produces.
#[derive(Debug, Clone)]
pub struct Sym3Showcase {
    pub circ: WeakBrace,
    pub bullet: WeakBrace,
    pub r_circ: PairMap,
    pub r_bullet: PairMap,
    /// Result of the exhaustive 720-bijection equivalence search.
    pub equivalence: Option<Vec<Elem>>,
    /// Result of the simultaneous-isomorphism search between the two braces.
    pub isomorphism: Option<Vec<Elem>>,
}

/// Expected lambda/rho tables of the two braces built on the symmetric group
/// of degree 3 from the factorization (<(12)>, <(123)>). Element indices are
/// the lexicographic one-line order: id, (23), (12), (123), (132), (13).
///
/// One published assignment is corrected here: a lambda map is a
/// homomorphism of the multiplicative group, so its fibers are kernel
/// cosets of equal size; that forces the map at (132) to coincide with the
/// map at (23), fibers {id, (12)}, {(23), (132)}, {(123), (13)}.
pub const SYM3_LAMBDA_CIRC: [[Elem; 6]; 6] = [
    [0, 1, 2, 3, 4, 5],
    [0, 2, 5, 3, 4, 1],
    [0, 1, 2, 3, 4, 5],
    [0, 5, 1, 3, 4, 2],
    [0, 2, 5, 3, 4, 1],
    [0, 5, 1, 3, 4, 2],
];
pub const SYM3_RHO_CIRC: [[Elem; 6]; 6] = [
    [0, 1, 2, 3, 4, 5],
    [0, 5, 2, 4, 3, 1],
    [0, 5, 2, 4, 3, 1],
    [0, 1, 2, 3, 4, 5],
    [0, 1, 2, 3, 4, 5],
    [0, 5, 2, 4, 3, 1],
];
pub const SYM3_LAMBDA_BULLET: [[Elem; 6]; 6] = [
    [0, 1, 2, 3, 4, 5],
    [0, 5, 2, 4, 3, 1],
    [0, 5, 2, 4, 3, 1],
    [0, 1, 2, 3, 4, 5],
    [0, 1, 2, 3, 4, 5],
    [0, 5, 2, 4, 3, 1],
];
pub const SYM3_RHO_BULLET: [[Elem; 6]; 6] = [
    [0, 1, 2, 3, 4, 5],
    [0, 2, 5, 3, 4, 1],
    [0, 1, 2, 3, 4, 5],
    [0, 2, 5, 3, 4, 1],
    [0, 5, 1, 3, 4, 2],
    [0, 5, 1, 3, 4, 2],
];

/// Builds both braces on the symmetric group of degree 3 from the exact
/// factorization (<(12)>, <(123)>), asserts every expected lambda/rho
/// assignment, and runs the equivalence and isomorphism searches (both must
/// come back empty).
pub fn sym3_showcase() -> Result<Sym3Showcase> {
    let g = table::symmetric(3)?;
    let view = as_inverse_semigroup(&g)?;
    // <(12)> = {id, (12)}, <(123)> = {id, (123), (132)}
    let f = exact_factorization(&view, vec![0, 2], vec![0, 3, 4])?;
    let circ = circ_brace(&f)?;
    let bullet = bullet_brace(&f)?;
    for a in 0..6 {
        assert_eq!(circ.lambda_map(a), SYM3_LAMBDA_CIRC[a], "lambda_circ at {a}");
        assert_eq!(circ.rho_map(a), SYM3_RHO_CIRC[a], "rho_circ at {a}");
        assert_eq!(
            bullet.lambda_map(a),
            SYM3_LAMBDA_BULLET[a],
            "lambda_bullet at {a}"
        );
        assert_eq!(bullet.rho_map(a), SYM3_RHO_BULLET[a], "rho_bullet at {a}");
    }
    let r_circ = ybe::solution_of(&circ);
    let r_bullet = ybe::solution_of(&bullet);
    let equivalence = ybe::are_equivalent(&r_circ, &r_bullet, 8)?;
    let isomorphism = crate::enumerate::are_isomorphic(&circ, &bullet);
    Ok(Sym3Showcase {
        circ,
        bullet,
        r_circ,
        r_bullet,
        equivalence,
        isomorphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{cyclic, join_semilattice, symmetric, CayleyTable};

    #[test]
    fn c2_has_only_the_trivial_factorizations() {
        let v = as_inverse_semigroup(&cyclic(2).unwrap()).unwrap();
        let fs = find_exact_factorizations(&v, DEFAULT_FACTOR_CAP).unwrap();
        let pairs: Vec<(Vec<Elem>, Vec<Elem>)> =
            fs.iter().map(|f| (f.u.clone(), f.v.clone())).collect();
        assert_eq!(pairs, vec![(vec![0], vec![0, 1]), (vec![0, 1], vec![0])]);
    }

    #[test]
    fn z4_has_no_proper_factorization() {
        let v = as_inverse_semigroup(&cyclic(4).unwrap()).unwrap();
        let fs = find_exact_factorizations(&v, DEFAULT_FACTOR_CAP).unwrap();
        for f in fs {
            assert!(f.u.len() == 1 || f.v.len() == 1);
        }
    }

    #[test]
    fn sym3_factorizations_include_the_transposition_cycle_pair() {
        let v = as_inverse_semigroup(&symmetric(3).unwrap()).unwrap();
        let fs = find_exact_factorizations(&v, DEFAULT_FACTOR_CAP).unwrap();
        let pairs: Vec<(Vec<Elem>, Vec<Elem>)> =
            fs.iter().map(|f| (f.u.clone(), f.v.clone())).collect();
        assert!(pairs.contains(&(vec![0, 2], vec![0, 3, 4])));
        assert!(pairs.contains(&(vec![0, 3, 4], vec![0, 2])));
    }

    #[test]
    fn abelian_direct_product_gives_the_trivial_brace() {
        let v = as_inverse_semigroup(&cyclic(4).unwrap()).unwrap();
        let f = exact_factorization(&v, vec![0], (0..4).collect()).unwrap();
        let wb = circ_brace(&f).unwrap();
        assert!(wb.add_view().base().same_op(wb.mul_view().base()));
    }

    #[test]
    fn factorization_cap_is_enforced(){
        let v = as_inverse_semigroup(&symmetric(4).unwrap()).unwrap();
        assert!(matches!(
            find_exact_factorizations(&v, 12),
            Err(Error::CarrierTooLarge { order: 24, cap: 12 })
        ));
    }

    #[test]
    fn showcase_matches_the_published_tables() {
        let show = sym3_showcase().unwrap();
        assert_eq!(show.equivalence, None);
        assert_eq!(show.isomorphism, None);
        // both multiplicative groups are cyclic of order 6, generated by (13)
        for wb in [&show.circ, &show.bullet] {
            let mut x = 5;
            let mut seen = std::collections::BTreeSet::from([x]);
            for _ in 0..5 {
                x = wb.mul(x, 5);
                seen.insert(x);
            }
            assert_eq!(seen.len(), 6);
        }
    }

    #[test]
    fn semidirect_clifford_semigroup_factorizes_exactly() {
        // group part acted on by a Clifford monoid: the canonical example of
        // an exactly factorizable Clifford semigroup that is not a group
        let s = cyclic(3).unwrap();
        let t_rows = vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 1]];
        let t = CayleyTable::from_rows(t_rows, None).unwrap();
        let action = vec![vec![0, 1, 2], vec![0, 1, 2], vec![0, 2, 1]];
        let st = crate::table::semidirect(&s, &t, &action).unwrap();
        let v = as_inverse_semigroup(&st).unwrap();
        assert!(v.is_clifford());
        // factors: S x {identity of T} and {identity of S} x T
        let u: Vec<Elem> = (0..3).map(|a| a * 3).collect();
        let w: Vec<Elem> = (0..3).collect();
        let f = exact_factorization(&v, u, w).unwrap();
        let wb = circ_brace(&f).unwrap();
        assert!(crate::brace::structural_report(&wb).all_hold());
    }

    #[test]
    fn join_semilattice_factorizations_are_found() {
        let v = as_inverse_semigroup(&join_semilattice(2, &[(0, 1)]).unwrap()).unwrap();
        let fs = find_exact_factorizations(&v, DEFAULT_FACTOR_CAP).unwrap();
        assert!(!fs.is_empty());
        for f in &fs {
            let wb = circ_brace(f).unwrap();
            assert!(crate::ybe::check_braid(&crate::ybe::solution_of(&wb)));
        }
    }
}
