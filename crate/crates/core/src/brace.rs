//! Weak braces: a carrier with two inverse-semigroup operations `+` and `o`
//! satisfying
//!
//! ```text
//! a o (b + c) = a o b - a + a o c        a o a^- = -a + a
//! ```
//!
//! where `-a` is the additive inverse and `a^-` the multiplicative one.
//! Multiplication binds tighter than addition and sums associate left.
//!
//! Validation is eager: a `WeakBrace` cannot exist without both views and
//! both axioms having been checked, and the lambda/rho tables are
//! precomputed because they dominate every downstream Yang-Baxter check.

use crate::error::{Error, Result};
use crate::inverse::{self, InverseSemigroupView};
use crate::table::CayleyTable;
use crate::Elem;

/// A validated weak brace with cached `lambda`/`rho` tables.
///
/// `lambda[a][b] = -a + a o b` and `rho[b][a] = (a^- + b)^- o b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakBrace {
    add: InverseSemigroupView,
    mul: InverseSemigroupView,
    lambda: Vec<Vec<Elem>>,
    rho: Vec<Vec<Elem>>,
}

impl WeakBrace {
    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn add_view(&self) -> &InverseSemigroupView {
        &self.add
    }

    pub fn mul_view(&self) -> &InverseSemigroupView {
        &self.mul
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add.op(a, b)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul.op(a, b)
    }

    /// Additive inverse `-a`.
    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.add.inv(a)
    }

    /// Multiplicative inverse `a^-`.
    #[inline]
    pub fn minv(&self, a: Elem) -> Elem {
        self.mul.inv(a)
    }

    /// Left fold of a sum `x1 + x2 + ... + xk`.
    pub fn sum(&self, terms: &[Elem]) -> Elem {
        let mut it = terms.iter().copied();
        let first = it.next().expect("sum of at least one term");
        it.fold(first, |acc, x| self.add(acc, x))
    }

    #[inline]
    pub fn lambda(&self, a: Elem, b: Elem) -> Elem {
        self.lambda[a][b]
    }

    #[inline]
    pub fn rho(&self, b: Elem, a: Elem) -> Elem {
        self.rho[b][a]
    }

    pub fn lambda_map(&self, a: Elem) -> &[Elem] {
        &self.lambda[a]
    }

    pub fn rho_map(&self, b: Elem) -> &[Elem] {
        &self.rho[b]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.add.base().labels()
    }

    pub fn label(&self, a: Elem) -> String {
        self.add.base().label(a)
    }

    /// The weak brace `(S, +^op, o)` with `a +^op b = b + a`: the additive
    /// table is transposed, the multiplication kept. Always valid.
    pub fn opposite(&self) -> WeakBrace {
        let add = self.add.base().transposed();
        let mul = self.mul.base().clone();
        make_weak_brace(&add, &mul).expect("the opposite of a weak brace is a weak brace")
    }

    /// Relabels both operations along the same bijection.
    pub fn permuted(&self, p: &[Elem]) -> WeakBrace {
        make_weak_brace(&self.add.base().permuted(p), &self.mul.base().permuted(p))
            .expect("relabeling preserves the axioms")
    }
}

/// Validates the pair of tables as a weak brace.
///
/// Order of checks mirrors the definition: additive inverse semigroup,
/// multiplicative inverse semigroup, distributivity over all triples, then
/// the inverse link over all elements. First failure wins.
pub fn make_weak_brace(add_t: &CayleyTable, mul_t: &CayleyTable) -> Result<WeakBrace> {
    if add_t.order() != mul_t.order() {
        return Err(Error::OrderMismatch {
            left: add_t.order(),
            right: mul_t.order(),
        });
    }
    let add = inverse::as_inverse_semigroup(add_t).map_err(|e| Error::AddNotInverse(Box::new(e)))?;
    let mul = inverse::as_inverse_semigroup(mul_t).map_err(|e| Error::MulNotInverse(Box::new(e)))?;
    let n = add.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = mul.op(a, add.op(b, c));
                let rhs = add.op(add.op(mul.op(a, b), add.inv(a)), mul.op(a, c));
                if lhs != rhs {
                    return Err(Error::DistributivityFails { a, b, c });
                }
            }
        }
    }
    for a in 0..n {
        if mul.op(a, mul.inv(a)) != add.op(add.inv(a), a) {
            return Err(Error::InverseLinkFails { a });
        }
    }
    let lambda = (0..n)
        .map(|a| (0..n).map(|b| add.op(add.inv(a), mul.op(a, b))).collect())
        .collect();
    let rho = (0..n)
        .map(|b| {
            (0..n)
                .map(|a| mul.op(mul.inv(add.op(mul.inv(a), b)), b))
                .collect()
        })
        .collect();
    Ok(WeakBrace {
        add,
        mul,
        lambda,
        rho,
    })
}

/// Report of the equivalent axiom pair
/// `a o (b + c) = a o b + a o (a^- + c)` and `a o (a^- + b) = -a + a o b`.
/// Both must hold on any valid weak brace; a failure is an implementation
/// bug, not a property of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemibraceFormReport {
    /// The inverse-semi-brace law in isolation.
    pub semibrace_law: bool,
    /// `a o (a^- + b) = -a + a o b`, i.e. the two lambda expressions agree.
    pub lambda_link: bool,
}

impl SemibraceFormReport {
    pub fn all_hold(&self) -> bool {
        self.semibrace_law && self.lambda_link
    }
}

pub fn check_semibrace_form(wb: &WeakBrace) -> SemibraceFormReport {
    let n = wb.order();
    let semibrace_law = (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                wb.mul(a, wb.add(b, c))
                    == wb.add(wb.mul(a, b), wb.mul(a, wb.add(wb.minv(a), c)))
            })
        })
    });
    let lambda_link = (0..n).all(|a| {
        (0..n).all(|b| {
            wb.mul(a, wb.add(wb.minv(a), b)) == wb.add(wb.neg(a), wb.mul(a, b))
        })
    });
    SemibraceFormReport {
        semibrace_law,
        lambda_link,
    }
}

/// Structural classification flags of a weak brace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureClass {
    /// Both operations are groups.
    pub is_skew_brace: bool,
    /// Skew brace with commutative addition.
    pub is_brace: bool,
    /// Skew brace where the roles of the operations can be reversed:
    /// `a + b o c = (a + b) o a^- o (a + c)` for all triples.
    pub is_bi_skew: bool,
    /// `a o b = a + b` everywhere.
    pub is_trivial: bool,
    /// `a o b = b + a` everywhere.
    pub is_almost_trivial: bool,
    pub add_commutative: bool,
    pub add_band: bool,
    pub mul_clifford: bool,
}

/// One named identity verified exhaustively over the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// Classification flags plus the exhaustive identity checklist. Every
/// checklist entry must pass on a valid weak brace; failures signal bugs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralReport {
    pub class: StructureClass,
    pub checks: Vec<IdentityCheck>,
}

impl StructuralReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Verifies the whole toolbox of structural identities of a weak brace and
/// computes its classification flags.
pub fn structural_report(wb: &WeakBrace) -> StructuralReport {
    let n = wb.order();
    let mut checks = Vec::new();
    let mut push = |name: &'static str, holds: bool| checks.push(IdentityCheck { name, holds });
    let pairs = || (0..n).flat_map(|a| (0..n).map(move |b| (a, b)));
    let triples =
        || (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))));

    push(
        "lambda_add_morphism: l_a(b + c) = l_a(b) + l_a(c)",
        triples().all(|(a, b, c)| {
            wb.lambda(a, wb.add(b, c)) == wb.add(wb.lambda(a, b), wb.lambda(a, c))
        }),
    );
    push(
        "lambda_neg: l_a(-b) = -l_a(b)",
        pairs().all(|(a, b)| wb.lambda(a, wb.neg(b)) == wb.neg(wb.lambda(a, b))),
    );
    push(
        "lambda_hom: l_{a o b} = l_a l_b",
        pairs().all(|(a, b)| {
            (0..n).all(|c| wb.lambda(wb.mul(a, b), c) == wb.lambda(a, wb.lambda(b, c)))
        }),
    );
    push(
        "rho_antihom: r_{b o c} = r_c r_b",
        pairs().all(|(b, c)| {
            (0..n).all(|a| wb.rho(wb.mul(b, c), a) == wb.rho(c, wb.rho(b, a)))
        }),
    );
    push(
        "mul_via_lambda: a o b = a + l_a(b)",
        pairs().all(|(a, b)| wb.mul(a, b) == wb.add(a, wb.lambda(a, b))),
    );
    push(
        "mul_of_neg: a o (-b) = a - a o b + a",
        pairs().all(|(a, b)| {
            wb.mul(a, wb.neg(b)) == wb.sum(&[a, wb.neg(wb.mul(a, b)), a])
        }),
    );
    push(
        "lambda_of_minv: l_a(a^-) = -a",
        (0..n).all(|a| wb.lambda(a, wb.minv(a)) == wb.neg(a)),
    );
    push(
        "rho_of_minv: r_{a^-}(a)^- = -a",
        (0..n).all(|a| wb.minv(wb.rho(wb.minv(a), a)) == wb.neg(a)),
    );
    push(
        "lambda_formula: l_a(b) = -(a o b o b^-) + a o b",
        pairs().all(|(a, b)| {
            let abb = wb.mul(wb.mul(a, b), wb.minv(b));
            wb.lambda(a, b) == wb.add(wb.neg(abb), wb.mul(a, b))
        }),
    );
    push(
        "lambda_formula: l_a(b) = a o b o r_b(a)^-",
        pairs().all(|(a, b)| {
            wb.lambda(a, b) == wb.mul(wb.mul(a, b), wb.minv(wb.rho(b, a)))
        }),
    );
    push(
        "rho_formula: r_b(a)^- = b^- o a^- - b^-",
        pairs().all(|(a, b)| {
            wb.minv(wb.rho(b, a)) == wb.add(wb.mul(wb.minv(b), wb.minv(a)), wb.neg(wb.minv(b)))
        }),
    );
    push(
        "rho_formula: r_b(a) = l_a(b)^- o a o b",
        pairs().all(|(a, b)| {
            wb.rho(b, a) == wb.mul(wb.mul(wb.minv(wb.lambda(a, b)), a), b)
        }),
    );
    push(
        "lambda_formula: l_a(b) = a o b o b^- o (a^- + b)",
        pairs().all(|(a, b)| {
            let lhs = wb.mul(wb.mul(wb.mul(a, b), wb.minv(b)), wb.add(wb.minv(a), b));
            wb.lambda(a, b) == lhs
        }),
    );
    push(
        "rho_formula: r_b(a) = (a^- + b)^- o a^- o a o b",
        pairs().all(|(a, b)| {
            let lhs = wb.mul(
                wb.mul(wb.mul(wb.minv(wb.add(wb.minv(a), b)), wb.minv(a)), a),
                b,
            );
            wb.rho(b, a) == lhs
        }),
    );
    push(
        "idempotent_split: l_{a o a^-} = l_a l_{a^-}",
        (0..n).all(|a| {
            (0..n).all(|b| {
                wb.lambda(wb.mul(a, wb.minv(a)), b) == wb.lambda(a, wb.lambda(wb.minv(a), b))
            })
        }),
    );
    push(
        "idempotent_split: l_{a o b o b^-} = l_{a o b} l_{b^-}",
        pairs().all(|(a, b)| {
            let ab = wb.mul(a, b);
            (0..n).all(|c| {
                wb.lambda(wb.mul(ab, wb.minv(b)), c) == wb.lambda(ab, wb.lambda(wb.minv(b), c))
            })
        }),
    );
    push(
        "shift: a o l_{a^-}(b) = a + l_{a o a^-}(b)",
        pairs().all(|(a, b)| {
            wb.mul(a, wb.lambda(wb.minv(a), b))
                == wb.add(a, wb.lambda(wb.mul(a, wb.minv(a)), b))
        }),
    );
    push(
        "shift: a + l_a(b) = a o (a^- o a + b)",
        pairs().all(|(a, b)| {
            wb.add(a, wb.lambda(a, b)) == wb.mul(a, wb.add(wb.mul(wb.minv(a), a), b))
        }),
    );
    push(
        "regular: l_a l_{a^-} l_a = l_a",
        pairs().all(|(a, b)| {
            wb.lambda(a, wb.lambda(wb.minv(a), wb.lambda(a, b))) == wb.lambda(a, b)
        }),
    );
    push(
        "regular: r_b r_{b^-} r_b = r_b",
        pairs().all(|(b, a)| {
            wb.rho(b, wb.rho(wb.minv(b), wb.rho(b, a))) == wb.rho(b, a)
        }),
    );
    push(
        "weak_identity: l_a(b)^- o l_a(b) o r_b(a) = l_a(b)^- o a o b",
        pairs().all(|(a, b)| {
            let l = wb.lambda(a, b);
            wb.mul(wb.mul(wb.minv(l), l), wb.rho(b, a))
                == wb.mul(wb.mul(wb.minv(l), a), b)
        }),
    );
    push(
        "weak_identity: l_a(b) o r_b(a) o r_b(a)^- = a o b o r_b(a)^-",
        pairs().all(|(a, b)| {
            let r = wb.rho(b, a);
            wb.mul(wb.mul(wb.lambda(a, b), r), wb.minv(r))
                == wb.mul(wb.mul(a, b), wb.minv(r))
        }),
    );
    push(
        "product_split: a o b = l_a(b) o r_b(a)",
        pairs().all(|(a, b)| wb.mul(a, b) == wb.mul(wb.lambda(a, b), wb.rho(b, a))),
    );
    push(
        "rho_via_lambda: r_b(a) = l_{l_a(b)^-}(-(a o b) + a + a o b)",
        pairs().all(|(a, b)| {
            let ab = wb.mul(a, b);
            let arg = wb.sum(&[wb.neg(ab), a, ab]);
            wb.rho(b, a) == wb.lambda(wb.minv(wb.lambda(a, b)), arg)
        }),
    );
    push(
        "idempotent_sets_coincide: E(+) = E(o)",
        wb.add.idempotents() == wb.mul.idempotents(),
    );
    push(
        "add_clifford: idempotents of (S, +) are central",
        wb.add.is_clifford(),
    );
    push(
        "add_completely_regular: a - a = -a + a",
        (0..n).all(|a| wb.add(a, wb.neg(a)) == wb.add(wb.neg(a), a)),
    );
    let add_pred = wb.add.predicates();
    let mul_pred = wb.mul.predicates();
    push(
        "group_iff_group",
        add_pred.is_group == mul_pred.is_group,
    );
    push("band_iff_band", add_pred.is_band == mul_pred.is_band);
    push(
        "monoid_units_agree",
        add_pred.monoid_unit == mul_pred.monoid_unit,
    );

    let is_skew_brace = add_pred.is_group && mul_pred.is_group;
    let bi_skew_law = triples().all(|(a, b, c)| {
        wb.add(a, wb.mul(b, c))
            == wb.mul(wb.mul(wb.add(a, b), wb.minv(a)), wb.add(a, c))
    });
    let class = StructureClass {
        is_skew_brace,
        is_brace: is_skew_brace && add_pred.is_commutative,
        is_bi_skew: is_skew_brace && bi_skew_law,
        is_trivial: pairs().all(|(a, b)| wb.mul(a, b) == wb.add(a, b)),
        is_almost_trivial: pairs().all(|(a, b)| wb.mul(a, b) == wb.add(b, a)),
        add_commutative: add_pred.is_commutative,
        add_band: add_pred.is_band,
        mul_clifford: wb.mul.is_clifford(),
    };
    StructuralReport { class, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table;

    fn c2() -> CayleyTable {
        table::cyclic(2).unwrap()
    }

    fn chain2() -> CayleyTable {
        table::join_semilattice(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn trivial_brace_on_c2_is_valid() {
        let wb = make_weak_brace(&c2(), &c2()).unwrap();
        assert_eq!(wb.order(), 2);
        // lambda is the identity on a trivial brace over an abelian group
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(wb.lambda(a, b), b);
            }
        }
    }

    #[test]
    fn shifted_multiplication_on_z2_fails_distributivity_first_at_origin() {
        // a o b = a + b + 1 over Z2
        let mul = CayleyTable::from_rows(vec![vec![1, 0], vec![0, 1]], None).unwrap();
        assert_eq!(
            make_weak_brace(&c2(), &mul),
            Err(Error::DistributivityFails { a: 0, b: 0, c: 0 })
        );
    }

    #[test]
    fn and_semilattice_trivial_weak_brace_is_valid() {
        let and = CayleyTable::from_rows(vec![vec![0, 0], vec![0, 1]], None).unwrap();
        let wb = make_weak_brace(&and, &and).unwrap();
        assert!(check_semibrace_form(&wb).all_hold());
        let report = structural_report(&wb);
        assert!(report.all_hold());
        assert!(report.class.add_band);
        assert!(report.class.mul_clifford);
        assert!(!report.class.is_skew_brace);
    }

    #[test]
    fn mixed_semilattice_pair_violates_distributivity() {
        let and = CayleyTable::from_rows(vec![vec![0, 0], vec![0, 1]], None).unwrap();
        let or = CayleyTable::from_rows(vec![vec![0, 1], vec![1, 1]], None).unwrap();
        assert_eq!(
            make_weak_brace(&and, &or),
            Err(Error::DistributivityFails { a: 0, b: 1, c: 1 })
        );
    }

    #[test]
    fn opposite_is_an_involution() {
        let wb = make_weak_brace(&chain2(), &chain2()).unwrap();
        assert_eq!(wb.opposite().opposite(), wb);
        // commutative addition: the opposite is the brace itself
        let triv = make_weak_brace(&c2(), &c2()).unwrap();
        assert_eq!(triv.opposite(), triv);
    }

    #[test]
    fn structural_report_holds_on_trivial_brace() {
        let wb = make_weak_brace(&c2(), &c2()).unwrap();
        let report = structural_report(&wb);
        assert!(report.all_hold(), "failed: {:?}", report
            .checks
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.name)
            .collect::<Vec<_>>());
        assert!(report.class.is_skew_brace);
        assert!(report.class.is_brace);
        assert!(report.class.is_trivial);
        assert!(report.class.is_bi_skew);
    }
}
