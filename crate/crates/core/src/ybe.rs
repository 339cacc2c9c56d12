//! Pair maps on `S x S`: the solution associated to a weak brace, braid
//! checking, composition and powers, complete-regularity identities,
//! classification and equivalence search.

use rayon::prelude::*;

use crate::brace::WeakBrace;
use crate::error::{Error, Result};
use crate::inverse::InverseSemigroupView;
use crate::perm;
use crate::Elem;

/// Default cap on the carrier size for the `n!` equivalence search.
pub const DEFAULT_EQUIV_CAP: usize = 8;

/// A total map `S x S -> S x S` stored as a flat table of `n^2` pairs,
/// indexed by `a * n + b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairMap {
    order: usize,
    forward: Vec<(Elem, Elem)>,
}

impl PairMap {
    pub fn new(order: usize, forward: Vec<(Elem, Elem)>) -> Result<Self> {
        if forward.len() != order * order {
            return Err(Error::Malformed(format!(
                "pair map has {} entries for order {order}",
                forward.len()
            )));
        }
        if let Some((x, y)) = forward.iter().find(|(x, y)| *x >= order || *y >= order) {
            return Err(Error::Malformed(format!("entry ({x}, {y}) out of range")));
        }
        Ok(PairMap { order, forward })
    }

    pub fn from_fn(order: usize, f: impl Fn(Elem, Elem) -> (Elem, Elem)) -> Self {
        let mut forward = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                forward.push(f(a, b));
            }
        }
        PairMap { order, forward }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn apply(&self, a: Elem, b: Elem) -> (Elem, Elem) {
        self.forward[a * self.order + b]
    }

    pub fn entries(&self) -> &[(Elem, Elem)] {
        &self.forward
    }

    /// The identity map on `S x S`.
    pub fn identity(order: usize) -> Self {
        PairMap::from_fn(order, |a, b| (a, b))
    }

    /// The twist `(a, b) -> (b, a)`.
    pub fn twist(order: usize) -> Self {
        PairMap::from_fn(order, |a, b| (b, a))
    }

    pub fn is_identity(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.apply(a, b) == (a, b)))
    }

    /// Number of distinct output pairs; the map is a bijection exactly when
    /// this equals `n^2`.
    pub fn image_size(&self) -> usize {
        let mut seen = vec![false; self.order * self.order];
        for &(x, y) in &self.forward {
            seen[x * self.order + y] = true;
        }
        seen.iter().filter(|&&b| b).count()
    }

    pub fn is_bijective(&self) -> bool {
        self.image_size() == self.order * self.order
    }
}

/// `compose(p, q)` applies `q` first, then `p`.
pub fn compose(p: &PairMap, q: &PairMap) -> Result<PairMap> {
    if p.order != q.order {
        return Err(Error::OrderMismatch {
            left: p.order,
            right: q.order,
        });
    }
    Ok(PairMap::from_fn(p.order, |a, b| {
        let (x, y) = q.apply(a, b);
        p.apply(x, y)
    }))
}

/// `k`-fold composition of `p` with itself; `power(p, 0)` is the identity.
pub fn power(p: &PairMap, k: usize) -> PairMap {
    let mut out = PairMap::identity(p.order);
    for _ in 0..k {
        out = compose(p, &out).expect("orders agree");
    }
    out
}

/// The solution associated to a weak brace:
/// `r(a, b) = (lambda_a(b), rho_b(a))`.
pub fn solution_of(wb: &WeakBrace) -> PairMap {
    PairMap::from_fn(wb.order(), |a, b| (wb.lambda(a, b), wb.rho(b, a)))
}

/// The idempotent companion `s(a, b) = (a b b^-, a^- a b)` of an arbitrary
/// inverse semigroup. For a weak brace this is `r r^op`.
pub fn idempotent_companion(v: &InverseSemigroupView) -> PairMap {
    PairMap::from_fn(v.order(), |a, b| {
        (v.op(v.op(a, b), v.inv(b)), v.op(v.op(v.inv(a), a), b))
    })
}

fn apply_left(p: &PairMap, t: (Elem, Elem, Elem)) -> (Elem, Elem, Elem) {
    let (x, y) = p.apply(t.0, t.1);
    (x, y, t.2)
}

fn apply_right(p: &PairMap, t: (Elem, Elem, Elem)) -> (Elem, Elem, Elem) {
    let (x, y) = p.apply(t.1, t.2);
    (t.0, x, y)
}

/// Checks the braid relation
/// `(r x id)(id x r)(r x id) = (id x r)(r x id)(id x r)`
/// on all `n^3` triples; returns the lexicographically first failing triple.
pub fn braid_counterexample(p: &PairMap) -> Option<(Elem, Elem, Elem)> {
    let n = p.order;
    (0..n)
        .into_par_iter()
        .filter_map(|a| {
            for b in 0..n {
                for c in 0..n {
                    let lhs = apply_left(p, apply_right(p, apply_left(p, (a, b, c))));
                    let rhs = apply_right(p, apply_left(p, apply_right(p, (a, b, c))));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
        .min()
}

pub fn check_braid(p: &PairMap) -> bool {
    braid_counterexample(p).is_none()
}

/// The three componentwise conditions equivalent to the braid relation for a
/// map of the shape `r(a, b) = (lambda_a(b), rho_b(a))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentwiseReport {
    /// `l_a l_b (c) = l_{l_a(b)} l_{r_b(a)} (c)`
    pub first: Option<(Elem, Elem, Elem)>,
    /// `l_{r_{l_b(c)}(a)} r_c(b) = r_{l_{r_b(a)}(c)} l_a(b)`
    pub second: Option<(Elem, Elem, Elem)>,
    /// `r_c r_b (a) = r_{r_c(b)} r_{l_b(c)} (a)`
    pub third: Option<(Elem, Elem, Elem)>,
}

impl ComponentwiseReport {
    pub fn all_hold(&self) -> bool {
        self.first.is_none() && self.second.is_none() && self.third.is_none()
    }
}

/// Verifies the three conditions on all triples, reporting the first witness
/// of each failure. Agrees with `check_braid(solution_of(wb))` by
/// construction of the equivalence.
pub fn check_componentwise(wb: &WeakBrace) -> ComponentwiseReport {
    let n = wb.order();
    let mut first = None;
    let mut second = None;
    let mut third = None;
    'outer1: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if wb.lambda(a, wb.lambda(b, c))
                    != wb.lambda(wb.lambda(a, b), wb.lambda(wb.rho(b, a), c))
                {
                    first = Some((a, b, c));
                    break 'outer1;
                }
            }
        }
    }
    'outer2: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = wb.lambda(wb.rho(wb.lambda(b, c), a), wb.rho(c, b));
                let rhs = wb.rho(wb.lambda(wb.rho(b, a), c), wb.lambda(a, b));
                if lhs != rhs {
                    second = Some((a, b, c));
                    break 'outer2;
                }
            }
        }
    }
    'outer3: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if wb.rho(c, wb.rho(b, a)) != wb.rho(wb.rho(c, b), wb.rho(wb.lambda(b, c), a)) {
                    third = Some((a, b, c));
                    break 'outer3;
                }
            }
        }
    }
    ComponentwiseReport {
        first,
        second,
        third,
    }
}

/// The solution of the opposite weak brace, computed by the closed formula
/// `r^op(a, b) = (a o b - a, (a o b - a)^- o a o b)` and cross-checked
/// against `solution_of(wb.opposite())` entry by entry.
pub fn op_solution(wb: &WeakBrace) -> Result<PairMap> {
    let formula = PairMap::from_fn(wb.order(), |a, b| {
        let x = wb.add(wb.mul(a, b), wb.neg(a));
        (x, wb.mul(wb.mul(wb.minv(x), a), b))
    });
    let from_opposite = solution_of(&wb.opposite());
    for a in 0..wb.order() {
        for b in 0..wb.order() {
            if formula.apply(a, b) != from_opposite.apply(a, b) {
                return Err(Error::MismatchWithOpposite { a, b });
            }
        }
    }
    Ok(formula)
}

/// Complete-regularity report for the solution of a weak brace: `r` together
/// with `r^op` forms a commuting inverse pair, and their product is the
/// idempotent companion map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularityReport {
    pub r_rop_r_eq_r: bool,
    pub rop_r_rop_eq_rop: bool,
    pub commute: bool,
    /// `r r^op (a, b) = (a o b o b^-, a^- o a o b)` entrywise.
    pub companion_matches_formula: bool,
    pub companion_is_solution: bool,
    pub companion_idempotent: bool,
}

impl RegularityReport {
    pub fn all_hold(&self) -> bool {
        self.r_rop_r_eq_r
            && self.rop_r_rop_eq_rop
            && self.commute
            && self.companion_matches_formula
            && self.companion_is_solution
            && self.companion_idempotent
    }
}

pub fn regularity_report(wb: &WeakBrace) -> Result<RegularityReport> {
    let r = solution_of(wb);
    let rop = op_solution(wb)?;
    let r_rop = compose(&r, &rop)?;
    let rop_r = compose(&rop, &r)?;
    let companion = PairMap::from_fn(wb.order(), |a, b| {
        (
            wb.mul(wb.mul(a, b), wb.minv(b)),
            wb.mul(wb.mul(wb.minv(a), a), b),
        )
    });
    Ok(RegularityReport {
        r_rop_r_eq_r: compose(&r_rop, &r)? == r,
        rop_r_rop_eq_rop: compose(&rop, &r_rop)? == rop,
        commute: r_rop == rop_r,
        companion_matches_formula: r_rop == companion,
        companion_is_solution: check_braid(&r_rop),
        companion_idempotent: compose(&r_rop, &r_rop)? == r_rop,
    })
}

/// Evaluates the closed form of `r^k` at `(a, b)`:
///
/// ```text
/// r^{2m}  (a,b) = (-m(ab) + a + m(ab),        [first]^- o a o b)
/// r^{2m+1}(a,b) = (-m(ab) - a + (m+1)(ab),    [first]^- o a o b)
/// ```
///
/// where `m(x)` is the `m`-fold sum `x + ... + x`. Requires `k >= 1`.
pub fn power_closed_form(wb: &WeakBrace, k: usize, a: Elem, b: Elem) -> (Elem, Elem) {
    assert!(k >= 1, "closed form is stated for k >= 1");
    let ab = wb.mul(a, b);
    let neg_ab = wb.neg(ab);
    let mut terms = Vec::new();
    if k % 2 == 0 {
        let m = k / 2;
        terms.extend(std::iter::repeat(neg_ab).take(m));
        terms.push(a);
        terms.extend(std::iter::repeat(ab).take(m));
    } else {
        let m = (k - 1) / 2;
        terms.extend(std::iter::repeat(neg_ab).take(m));
        terms.push(wb.neg(a));
        terms.extend(std::iter::repeat(ab).take(m + 1));
    }
    let first = wb.sum(&terms);
    (first, wb.mul(wb.mul(wb.minv(first), a), b))
}

/// Classification flags of a pair map, each computed by explicit composition
/// or image counting, never inferred from the others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionProfile {
    pub satisfies_ybe: bool,
    pub involutive: bool,
    pub idempotent: bool,
    pub cubic: bool,
    pub cube_equals_square: bool,
    pub bijective: bool,
    /// A witness partner `q` with `pqp = p`, `qpq = q`, `pq = qp`, when one
    /// is known (the op-solution, for maps arising from a weak brace).
    pub completely_regular_with: Option<PairMap>,
}

pub fn classify(p: &PairMap) -> SolutionProfile {
    let p2 = power(p, 2);
    let p3 = power(p, 3);
    SolutionProfile {
        satisfies_ybe: check_braid(p),
        involutive: p2.is_identity(),
        idempotent: p2 == *p,
        cubic: p3 == *p,
        cube_equals_square: p3 == p2,
        bijective: p.is_bijective(),
        completely_regular_with: None,
    }
}

/// Classifies the solution of a weak brace and attaches its op-solution as
/// the complete-regularity partner.
pub fn classify_brace_solution(wb: &WeakBrace) -> Result<SolutionProfile> {
    let mut profile = classify(&solution_of(wb));
    profile.completely_regular_with = Some(op_solution(wb)?);
    Ok(profile)
}

/// Relabeling-invariant fingerprint used to prune the equivalence search.
/// Two equivalent maps must have equal fingerprints.
fn fingerprint(p: &PairMap) -> Vec<(usize, usize, usize, usize, usize, usize)> {
    let n = p.order;
    let mut rows = Vec::with_capacity(n);
    for a in 0..n {
        let mut first_row = vec![false; n];
        let mut first_col = vec![false; n];
        let mut second_row = vec![false; n];
        let mut second_col = vec![false; n];
        let mut fixed_first = 0;
        let mut fixed_second = 0;
        for b in 0..n {
            let (x, y) = p.apply(a, b);
            first_row[x] = true;
            second_row[y] = true;
            if x == a {
                fixed_first += 1;
            }
            let (x2, y2) = p.apply(b, a);
            first_col[x2] = true;
            second_col[y2] = true;
            if y2 == a {
                fixed_second += 1;
            }
        }
        let count = |v: &[bool]| v.iter().filter(|&&t| t).count();
        rows.push((
            count(&first_row),
            count(&first_col),
            count(&second_row),
            count(&second_col),
            fixed_first,
            fixed_second,
        ));
    }
    rows.sort();
    rows
}

fn is_equivalence(f: &[Elem], p: &PairMap, q: &PairMap) -> bool {
    let n = p.order;
    for a in 0..n {
        for b in 0..n {
            let (x, y) = p.apply(a, b);
            if (f[x], f[y]) != q.apply(f[a], f[b]) {
                return false;
            }
        }
    }
    true
}

/// Searches for a bijection `f` with `(f x f) p = q (f x f)`, exhaustively
/// over all `n!` bijections in lexicographic order; returns the first
/// witness. Different orders yield `None` immediately; orders above `cap`
/// are refused.
///
/// A relabeling-invariant fingerprint comparison runs first: it can only
/// rule out provably inequivalent maps, so the outcome is unchanged.
pub fn are_equivalent(p: &PairMap, q: &PairMap, cap: usize) -> Result<Option<Vec<Elem>>> {
    if p.order != q.order {
        return Ok(None);
    }
    let n = p.order;
    if n > cap {
        return Err(Error::OrderTooLarge { order: n, cap });
    }
    if fingerprint(p) != fingerprint(q) {
        return Ok(None);
    }
    let total = perm::factorial(n);
    let found = (0..total)
        .into_par_iter()
        .find_first(|&rank| is_equivalence(&perm::unrank(n, rank), p, q));
    Ok(found.map(|rank| perm::unrank(n, rank)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::make_weak_brace;
    use crate::table;

    fn trivial_c2() -> WeakBrace {
        let t = table::cyclic(2).unwrap();
        make_weak_brace(&t, &t).unwrap()
    }

    #[test]
    fn trivial_brace_solution_is_the_twist() {
        let r = solution_of(&trivial_c2());
        assert_eq!(r, PairMap::twist(2));
        assert!(check_braid(&r));
    }

    #[test]
    fn twist_composed_with_itself_is_the_identity() {
        let tw = PairMap::twist(4);
        assert_eq!(compose(&tw, &tw).unwrap(), PairMap::identity(4));
        assert!(check_braid(&tw));
    }

    #[test]
    fn meet_join_map_profile_matches_the_frozen_oracle() {
        // (a, b) -> (a AND b, a OR b) on {0, 1}; expected flags were fixed by
        // an independent exhaustive braid evaluation over all 8 triples.
        let p = PairMap::new(2, vec![(0, 0), (0, 1), (0, 1), (1, 1)]).unwrap();
        let profile = classify(&p);
        assert!(profile.satisfies_ybe);
        assert!(profile.idempotent);
        assert!(profile.cubic);
        assert!(!profile.involutive);
        assert!(!profile.bijective);
    }

    #[test]
    fn op_solution_agrees_on_commutative_brace() {
        let wb = trivial_c2();
        let rop = op_solution(&wb).unwrap();
        assert_eq!(rop, solution_of(&wb));
    }

    #[test]
    fn regularity_on_chain_semilattice() {
        let t = table::join_semilattice(2, &[(0, 1)]).unwrap();
        let wb = make_weak_brace(&t, &t).unwrap();
        let rep = regularity_report(&wb).unwrap();
        assert!(rep.all_hold());
    }

    #[test]
    fn closed_form_matches_iteration_for_small_powers() {
        let t = table::join_semilattice(2, &[(0, 1)]).unwrap();
        let wb = make_weak_brace(&t, &t).unwrap();
        let r = solution_of(&wb);
        for k in 1..=6 {
            let rk = power(&r, k);
            for a in 0..2 {
                for b in 0..2 {
                    assert_eq!(power_closed_form(&wb, k, a, b), rk.apply(a, b));
                }
            }
        }
    }

    #[test]
    fn equivalence_finds_identity_for_equal_maps() {
        let tw = PairMap::twist(4);
        let f = are_equivalent(&tw, &tw, DEFAULT_EQUIV_CAP).unwrap();
        assert_eq!(f, Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn equivalence_cap_is_enforced() {
        let tw = PairMap::twist(9);
        assert_eq!(
            are_equivalent(&tw, &tw, 8),
            Err(Error::OrderTooLarge { order: 9, cap: 8 })
        );
    }

    #[test]
    fn different_orders_are_never_equivalent() {
        let a = PairMap::twist(2);
        let b = PairMap::twist(3);
        assert_eq!(are_equivalent(&a, &b, 8).unwrap(), None);
    }

    #[test]
    fn componentwise_conditions_hold_on_valid_braces() {
        let wb = trivial_c2();
        assert!(check_componentwise(&wb).all_hold());
    }

    #[test]
    fn idempotent_companion_is_an_idempotent_solution() {
        let t = table::symmetric(3).unwrap();
        let v = crate::inverse::as_inverse_semigroup(&t).unwrap();
        let s = idempotent_companion(&v);
        assert!(check_braid(&s));
        assert_eq!(compose(&s, &s).unwrap(), s);
    }
}
