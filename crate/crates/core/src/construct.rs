//! Product constructions of weak braces: trivial and almost-trivial braces
//! over a Clifford semigroup, the three twisted direct products, matched
//! product systems and their solutions, and double semidirect products.
//!
//! Every system is validated before any product table is built: the
//! construction theorems hold exactly under the stated conditions, and a
//! product assembled from an unvalidated system is garbage.

use crate::brace::{make_weak_brace, WeakBrace};
use crate::error::{Error, Result};
use crate::inverse::{ActionFamily, InverseSemigroupView};
use crate::perm;
use crate::table::CayleyTable;
use crate::ybe::{solution_of, PairMap};
use crate::Elem;

/// Default cap on the order of a product carrier; the double-system
/// condition scan is O(n^5) per factor combination.
pub const DEFAULT_PRODUCT_CAP: usize = 81;

/// Pair `(a, u)` as a single index, `u` varying fastest.
#[inline]
pub fn encode_pair(a: Elem, u: Elem, second_order: usize) -> Elem {
    a * second_order + u
}

fn require_clifford(v: &InverseSemigroupView) -> Result<()> {
    match v.clifford_counterexample() {
        None => Ok(()),
        Some((idempotent, witness)) => Err(Error::NotClifford {
            idempotent,
            witness,
        }),
    }
}

/// The trivial weak brace on a Clifford semigroup: `a + b = a o b`.
pub fn trivial_wb(v: &InverseSemigroupView) -> Result<WeakBrace> {
    require_clifford(v)?;
    make_weak_brace(v.base(), v.base())
}

/// The almost-trivial weak brace on a Clifford semigroup: `a + b = b o a`.
pub fn almost_trivial_wb(v: &InverseSemigroupView) -> Result<WeakBrace> {
    require_clifford(v)?;
    make_weak_brace(&v.base().transposed(), v.base())
}

/// Checks that `hom[a . b] = hom[a] after hom[b]` for the given one-sided
/// operation, i.e. that the family is a homomorphism into map composition.
fn family_is_hom(family: &ActionFamily, source: &CayleyTable) -> std::result::Result<(), (Elem, Elem)> {
    let m = source.order();
    for a in 0..m {
        for b in 0..m {
            let lhs = family.map(source.op(a, b));
            let rhs = perm::compose(family.map(a), family.map(b));
            if lhs != rhs.as_slice() {
                return Err((a, b));
            }
        }
    }
    Ok(())
}

fn family_is_antihom(
    family: &ActionFamily,
    source: &CayleyTable,
) -> std::result::Result<(), (Elem, Elem)> {
    let m = source.order();
    for a in 0..m {
        for b in 0..m {
            let lhs = family.map(source.op(a, b));
            let rhs = perm::compose(family.map(b), family.map(a));
            if lhs != rhs.as_slice() {
                return Err((a, b));
            }
        }
    }
    Ok(())
}

/// The three twisted direct products of Clifford semigroups.
///
/// * kind 1: `(a,u)+(b,v) = (ab, vu)`, `(a,u)o(b,v) = (ab, uv)`;
///   `s` and `t` Clifford.
/// * kind 2: `(a,u)+(b,v) = (ab, u a_a(v))`, `(a,u)o(b,v) = (ab, uv)`;
///   `s` commutative inverse, `t` a group, `hom: s -> Aut(t)`.
/// * kind 3: `(a,u)+(b,v) = (ab, uv)`, `(a,u)o(b,v) = (ab, u b_a(v))`;
///   `s` and `t` Clifford, `hom: s -> Aut(t)`.
pub fn example_product(
    kind: u8,
    s: &InverseSemigroupView,
    t: &InverseSemigroupView,
    hom: Option<&ActionFamily>,
) -> Result<WeakBrace> {
    let fail = |detail: String| Error::PreconditionFailed { kind, detail };
    let (ns, nt) = (s.order(), t.order());
    let trivial = ActionFamily::trivial(ns, nt);
    let family = hom.unwrap_or(&trivial);
    match kind {
        1 => {
            require_clifford(s).map_err(|_| fail("first factor is not Clifford".into()))?;
            require_clifford(t).map_err(|_| fail("second factor is not Clifford".into()))?;
        }
        2 => {
            if !s.base().is_commutative() {
                return Err(fail("first factor must be commutative".into()));
            }
            if t.idempotents().len() != 1 {
                return Err(fail("second factor must be a group".into()));
            }
        }
        3 => {
            require_clifford(s).map_err(|_| fail("first factor is not Clifford".into()))?;
            require_clifford(t).map_err(|_| fail("second factor is not Clifford".into()))?;
        }
        other => return Err(Error::UnsupportedKind(format!("product kind {other}"))),
    }
    if kind != 1 {
        if family.acting_order() != ns || family.acted_order() != nt {
            return Err(fail("homomorphism family has wrong shape".into()));
        }
        family_is_hom(family, s.base())
            .map_err(|(a, b)| fail(format!("family is not a homomorphism at ({a}, {b})")))?;
        ActionFamily::new(family.maps().to_vec(), t.base())
            .map_err(|e| fail(format!("family member is not an automorphism: {e}")))?;
    }
    // second components of the sum and the product
    let add_twist = |a: Elem, u: Elem, v: Elem| match kind {
        1 => t.op(v, u),
        2 => t.op(u, family.apply(a, v)),
        _ => t.op(u, v),
    };
    let mul_twist = |a: Elem, u: Elem, v: Elem| match kind {
        3 => t.op(u, family.apply(a, v)),
        _ => t.op(u, v),
    };
    let n = ns * nt;
    let mut add_rows = Vec::with_capacity(n);
    let mut mul_rows = Vec::with_capacity(n);
    for i in 0..n {
        let (a, u) = (i / nt, i % nt);
        let mut add_row = Vec::with_capacity(n);
        let mut mul_row = Vec::with_capacity(n);
        for j in 0..n {
            let (b, v) = (j / nt, j % nt);
            add_row.push(encode_pair(s.op(a, b), add_twist(a, u, v), nt));
            mul_row.push(encode_pair(s.op(a, b), mul_twist(a, u, v), nt));
        }
        add_rows.push(add_row);
        mul_rows.push(mul_row);
    }
    let add = CayleyTable::from_rows(add_rows, None)?;
    let mul = CayleyTable::from_rows(mul_rows, None)?;
    make_weak_brace(&add, &mul)
}

/// A validated matched product system: two weak braces acting on each
/// other's additive structures through multiplicative homomorphisms that
/// satisfy the compatibility and idempotent conditions.
#[derive(Debug, Clone)]
pub struct MatchedSystem {
    s: WeakBrace,
    t: WeakBrace,
    alpha: ActionFamily,
    beta: ActionFamily,
    alpha_inv: Vec<Vec<Elem>>,
    beta_inv: Vec<Vec<Elem>>,
}

impl MatchedSystem {
    pub fn s(&self) -> &WeakBrace {
        &self.s
    }

    pub fn t(&self) -> &WeakBrace {
        &self.t
    }

    pub fn alpha(&self) -> &ActionFamily {
        &self.alpha
    }

    pub fn beta(&self) -> &ActionFamily {
        &self.beta
    }
}

/// Validates hom laws, both compatibility conditions on all quadruples, and
/// the idempotent implication on all pairs. The inverse `a_u^{-1}` is the
/// inverse bijection of `a_u`; it coincides with `a_{u^-}` because the
/// family is a homomorphism into a group, and both readings are compared.
pub fn validate_matched_system(
    s: WeakBrace,
    t: WeakBrace,
    alpha: ActionFamily,
    beta: ActionFamily,
    cap: usize,
) -> Result<MatchedSystem> {
    let (ns, nt) = (s.order(), t.order());
    if ns * nt > cap {
        return Err(Error::CarrierTooLarge {
            order: ns * nt,
            cap,
        });
    }
    if alpha.acting_order() != nt || alpha.acted_order() != ns {
        return Err(Error::Malformed("alpha family has wrong shape".into()));
    }
    if beta.acting_order() != ns || beta.acted_order() != nt {
        return Err(Error::Malformed("beta family has wrong shape".into()));
    }
    // automorphisms of the additive structures
    let alpha = ActionFamily::new(alpha.maps().to_vec(), s.add_view().base())?;
    let beta = ActionFamily::new(beta.maps().to_vec(), t.add_view().base())?;
    // homomorphisms of the multiplicative structures into Aut(+)
    family_is_hom(&alpha, t.mul_view().base()).map_err(|(a, b)| Error::HomLawFails { a, b })?;
    family_is_hom(&beta, s.mul_view().base()).map_err(|(a, b)| Error::HomLawFails { a, b })?;
    let alpha_inv = alpha.inverses();
    let beta_inv = beta.inverses();
    for u in 0..nt {
        assert_eq!(
            alpha_inv[u],
            alpha.map(t.minv(u)),
            "inverse bijection must agree with the map of the inverse element"
        );
    }
    for a in 0..ns {
        assert_eq!(beta_inv[a], beta.map(s.minv(a)), "same for beta");
    }
    // compatibility conditions
    for a in 0..ns {
        for u in 0..nt {
            for b in 0..ns {
                let lhs = alpha.apply(u, s.mul(alpha_inv[u][a], b));
                let rhs = s.mul(a, alpha.apply(beta_inv[a][u], b));
                if lhs != rhs {
                    return Err(Error::CompatibilityFails { side: 1, a, u, x: b });
                }
            }
            for v in 0..nt {
                let lhs = beta.apply(a, t.mul(beta_inv[a][u], v));
                let rhs = t.mul(u, beta.apply(alpha_inv[u][a], v));
                if lhs != rhs {
                    return Err(Error::CompatibilityFails { side: 2, a, u, x: v });
                }
            }
        }
    }
    // idempotent implication
    for a in 0..ns {
        for u in 0..nt {
            let premise = alpha.apply(u, s.mul(alpha_inv[u][a], a)) == a
                && beta.apply(a, t.mul(beta_inv[a][u], u)) == u;
            if premise && !(alpha.apply(u, a) == a && beta.apply(a, u) == u) {
                return Err(Error::IdempotentConditionFails { a, u });
            }
        }
    }
    Ok(MatchedSystem {
        s,
        t,
        alpha,
        beta,
        alpha_inv,
        beta_inv,
    })
}

/// A matched system with `beta` trivial; the multiplicative structure of the
/// product is then the semidirect product of the factors.
pub fn semidirect_system(s: WeakBrace, t: WeakBrace, alpha: ActionFamily, cap: usize) -> Result<MatchedSystem> {
    let beta = ActionFamily::trivial(s.order(), t.order());
    validate_matched_system(s, t, alpha, beta, cap)
}

/// The 9-element semidirect showcase: the trivial weak brace on the
/// three-element join semilattice `{1, x, y}` (x, y incomparable with join
/// 1) acted on by the trivial weak brace on the commutative inverse monoid
/// `{1, x, y}` (`x o x = y o y = x`, `x o y = y`) through the swap
/// `sigma(y) = (x y)`. Its lambda maps at `a o a^-` and `a^- o a` differ,
/// which no group-carrier brace can exhibit.
pub fn semidirect_3x3_system() -> Result<MatchedSystem> {
    let labels: Vec<String> = ["1", "x", "y"].iter().map(|s| s.to_string()).collect();
    let mut s_table = crate::table::join_semilattice(3, &[(1, 0), (2, 0)])?;
    s_table.set_labels(Some(labels.clone()))?;
    let t_table = CayleyTable::from_rows(
        vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 1]],
        Some(labels),
    )?;
    let s = make_weak_brace(&s_table, &s_table)?;
    let t = make_weak_brace(&t_table, &t_table)?;
    let sigma = ActionFamily::new(
        vec![vec![0, 1, 2], vec![0, 1, 2], vec![0, 2, 1]],
        s.add_view().base(),
    )?;
    semidirect_system(s, t, sigma, DEFAULT_PRODUCT_CAP)
}

fn product_labels(s: &WeakBrace, t: &WeakBrace) -> Option<Vec<String>> {
    match (s.labels(), t.labels()) {
        (Some(ls), Some(lt)) => Some(
            ls.iter()
                .flat_map(|a| lt.iter().map(move |u| format!("({a},{u})")))
                .collect(),
        ),
        _ => None,
    }
}

/// The matched product `S x T`: componentwise sum and the twisted product
/// `(a,u) o (b,v) = (a_u(a_u^{-1}(a) o b), b_a(b_a^{-1}(u) o v))`.
/// Always validates on a valid system.
pub fn matched_product(sys: &MatchedSystem) -> WeakBrace {
    let (s, t) = (&sys.s, &sys.t);
    let (ns, nt) = (s.order(), t.order());
    let n = ns * nt;
    let mut add_rows = Vec::with_capacity(n);
    let mut mul_rows = Vec::with_capacity(n);
    for i in 0..n {
        let (a, u) = (i / nt, i % nt);
        let mut add_row = Vec::with_capacity(n);
        let mut mul_row = Vec::with_capacity(n);
        for j in 0..n {
            let (b, v) = (j / nt, j % nt);
            add_row.push(encode_pair(s.add(a, b), t.add(u, v), nt));
            mul_row.push(encode_pair(
                sys.alpha.apply(u, s.mul(sys.alpha_inv[u][a], b)),
                sys.beta.apply(a, t.mul(sys.beta_inv[a][u], v)),
                nt,
            ));
        }
        add_rows.push(add_row);
        mul_rows.push(mul_row);
    }
    let mut add = CayleyTable::from_rows(add_rows, None).expect("well-formed add table");
    add.set_labels(product_labels(s, t)).expect("label count");
    let mul = CayleyTable::from_rows(mul_rows, None).expect("well-formed mul table");
    make_weak_brace(&add, &mul).expect("matched product of a valid system is a weak brace")
}

/// The solution of a matched product, written directly in terms of the
/// factor solutions and the two actions.
pub fn matched_solution_formula(sys: &MatchedSystem) -> PairMap {
    let (s, t) = (&sys.s, &sys.t);
    let nt = t.order();
    let n = s.order() * nt;
    PairMap::from_fn(n, |i, j| {
        let (a, u) = (i / nt, i % nt);
        let (b, v) = (j / nt, j % nt);
        let a_bar = sys.alpha_inv[u][a];
        let u_bar = sys.beta_inv[a][u];
        let big_a = sys.alpha.apply(u, s.lambda(a_bar, b));
        let big_u = sys.beta.apply(a, t.lambda(u_bar, v));
        let a_bar2 = perm::inverse(sys.alpha.map(big_u))[big_a];
        let u_bar2 = perm::inverse(sys.beta.map(big_a))[big_u];
        let first = encode_pair(big_a, big_u, nt);
        let second = encode_pair(
            perm::inverse(sys.alpha.map(u_bar2))[s.rho(sys.alpha.apply(u_bar, b), a)],
            perm::inverse(sys.beta.map(a_bar2))[t.rho(sys.beta.apply(a_bar, v), u)],
            nt,
        );
        (first, second)
    })
}

/// Asserts that the displayed matched-solution formula equals
/// `solution_of(matched_product(sys))` on every pair of pairs.
pub fn matched_solution_check(sys: &MatchedSystem) -> Result<PairMap> {
    let formula = matched_solution_formula(sys);
    let direct = solution_of(&matched_product(sys));
    for i in 0..formula.order() * formula.order() {
        let (x, y) = (i / formula.order(), i % formula.order());
        if formula.apply(x, y) != direct.apply(x, y) {
            return Err(Error::SolutionFormulaMismatch { x, y });
        }
    }
    Ok(formula)
}

/// A validated double semidirect system: `sigma` a homomorphism from
/// `(T, o)` into the automorphism group of the weak brace `S`, `delta` an
/// anti-homomorphism from `(S, +)` into `Aut(T, +)`, subject to the two
/// displayed conditions.
#[derive(Debug, Clone)]
pub struct DoubleSystem {
    s: WeakBrace,
    t: WeakBrace,
    sigma: ActionFamily,
    delta: ActionFamily,
}

impl DoubleSystem {
    pub fn s(&self) -> &WeakBrace {
        &self.s
    }

    pub fn t(&self) -> &WeakBrace {
        &self.t
    }

    pub fn sigma(&self) -> &ActionFamily {
        &self.sigma
    }

    pub fn delta(&self) -> &ActionFamily {
        &self.delta
    }
}

pub fn validate_double_system(
    s: WeakBrace,
    t: WeakBrace,
    sigma: ActionFamily,
    delta: ActionFamily,
    cap: usize,
) -> Result<DoubleSystem> {
    let (ns, nt) = (s.order(), t.order());
    if ns * nt > cap {
        return Err(Error::CarrierTooLarge {
            order: ns * nt,
            cap,
        });
    }
    if sigma.acting_order() != nt || sigma.acted_order() != ns {
        return Err(Error::Malformed("sigma family has wrong shape".into()));
    }
    if delta.acting_order() != ns || delta.acted_order() != nt {
        return Err(Error::Malformed("delta family has wrong shape".into()));
    }
    // sigma: automorphisms of the weak brace S (both operations)
    let sigma = ActionFamily::new(sigma.maps().to_vec(), s.add_view().base())?;
    ActionFamily::new(sigma.maps().to_vec(), s.mul_view().base())?;
    family_is_hom(&sigma, t.mul_view().base()).map_err(|(a, b)| Error::HomLawFails { a, b })?;
    // delta: automorphisms of (T, +), anti-homomorphism from (S, +)
    let delta = ActionFamily::new(delta.maps().to_vec(), t.add_view().base())?;
    family_is_antihom(&delta, s.add_view().base())
        .map_err(|(a, b)| Error::HomLawFails { a, b })?;
    // (u - u)^a = u - u
    for a in 0..ns {
        for u in 0..nt {
            let e = t.add(u, t.neg(u));
            if delta.apply(a, e) != e {
                return Err(Error::DoubleFixesPartialUnits { a, u });
            }
        }
    }
    // (u o v)^{l_a(^u b)} + u o ((u^-)^b + w) = u o (v^b + w)
    for a in 0..ns {
        for b in 0..ns {
            for u in 0..nt {
                let ub = sigma.apply(u, b);
                let exponent = s.lambda(a, ub);
                for v in 0..nt {
                    let head = delta.apply(exponent, t.mul(u, v));
                    for w in 0..nt {
                        let lhs = t.add(
                            head,
                            t.mul(u, t.add(delta.apply(b, t.minv(u)), w)),
                        );
                        let rhs = t.mul(u, t.add(delta.apply(b, v), w));
                        if lhs != rhs {
                            return Err(Error::DoubleCompatibilityFails { a, b, u, v, w });
                        }
                    }
                }
            }
        }
    }
    Ok(DoubleSystem { s, t, sigma, delta })
}

/// The double semidirect product `S x T`:
/// `(a,u)+(b,v) = (a+b, u^b+v)` and `(a,u)o(b,v) = (a o ^u b, u o v)`.
pub fn double_semidirect(sys: &DoubleSystem) -> WeakBrace {
    let (s, t) = (&sys.s, &sys.t);
    let (ns, nt) = (s.order(), t.order());
    let n = ns * nt;
    let mut add_rows = Vec::with_capacity(n);
    let mut mul_rows = Vec::with_capacity(n);
    for i in 0..n {
        let (a, u) = (i / nt, i % nt);
        let mut add_row = Vec::with_capacity(n);
        let mut mul_row = Vec::with_capacity(n);
        for j in 0..n {
            let (b, v) = (j / nt, j % nt);
            add_row.push(encode_pair(
                s.add(a, b),
                t.add(sys.delta.apply(b, u), v),
                nt,
            ));
            mul_row.push(encode_pair(s.mul(a, sys.sigma.apply(u, b)), t.mul(u, v), nt));
        }
        add_rows.push(add_row);
        mul_rows.push(mul_row);
    }
    let mut add = CayleyTable::from_rows(add_rows, None).expect("well-formed add table");
    add.set_labels(product_labels(s, t)).expect("label count");
    let mul = CayleyTable::from_rows(mul_rows, None).expect("well-formed mul table");
    make_weak_brace(&add, &mul).expect("double semidirect product of a valid system is a weak brace")
}

/// The solution of a double semidirect product via the displayed
/// `Omega^a_{u,v} = (u^-)^a + v` formula.
pub fn double_solution_formula(sys: &DoubleSystem) -> PairMap {
    let (s, t) = (&sys.s, &sys.t);
    let nt = t.order();
    let n = s.order() * nt;
    PairMap::from_fn(n, |i, j| {
        let (a, u) = (i / nt, i % nt);
        let (b, v) = (j / nt, j % nt);
        let ub = sys.sigma.apply(u, b);
        let omega = t.add(sys.delta.apply(b, t.minv(u)), v);
        let first = encode_pair(s.lambda(a, ub), t.mul(u, omega), nt);
        let exponent = t.mul(t.minv(omega), t.minv(u));
        let second = encode_pair(
            sys.sigma.apply(exponent, s.rho(ub, a)),
            t.mul(t.minv(omega), v),
            nt,
        );
        (first, second)
    })
}

/// Asserts that the `Omega` formula equals the solution of the constructed
/// product on all pairs.
pub fn double_solution_check(sys: &DoubleSystem) -> Result<PairMap> {
    let formula = double_solution_formula(sys);
    let direct = solution_of(&double_semidirect(sys));
    for i in 0..formula.order() * formula.order() {
        let (x, y) = (i / formula.order(), i % formula.order());
        if formula.apply(x, y) != direct.apply(x, y) {
            return Err(Error::SolutionFormulaMismatch { x, y });
        }
    }
    Ok(formula)
}
