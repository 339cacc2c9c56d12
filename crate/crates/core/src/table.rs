//! Finite magmas as Cayley tables over canonical element indices `0..n-1`.
//!
//! Labels are presentation-only: every algorithm works on indices, so tables,
//! maps and isomorphism search stay uniform.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm;
use crate::Elem;

/// An `n x n` operation table over element indices, the universal
/// representation of a finite magma.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    order: usize,
    cells: Vec<Elem>,
    labels: Option<Vec<String>>,
}

impl CayleyTable {
    /// Builds a table from rows, checking well-formedness: every entry in
    /// `0..n-1`, square shape, and labels (if any) `n` distinct strings.
    pub fn from_rows(rows: Vec<Vec<Elem>>, labels: Option<Vec<String>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::Malformed("table must have positive order".into()));
        }
        let mut cells = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Malformed(format!(
                    "row {i} has length {} but order is {order}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= order {
                    return Err(Error::Malformed(format!(
                        "entry {x} out of range in row {i}"
                    )));
                }
                cells.push(x);
            }
        }
        if let Some(ls) = &labels {
            if ls.len() != order {
                return Err(Error::Malformed(format!(
                    "{} labels for order {order}",
                    ls.len()
                )));
            }
            let mut sorted = ls.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != order {
                return Err(Error::Malformed("labels are not distinct".into()));
            }
        }
        Ok(CayleyTable {
            order,
            cells,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: Elem, b: Elem) -> Elem {
        self.cells[a * self.order + b]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        (0..self.order)
            .map(|a| self.cells[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }

    pub fn cells(&self) -> &[Elem] {
        &self.cells
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Option<Vec<String>>) -> Result<()> {
        if let Some(ls) = &labels {
            if ls.len() != self.order {
                return Err(Error::Malformed(format!(
                    "{} labels for order {}",
                    ls.len(),
                    self.order
                )));
            }
        }
        self.labels = labels;
        Ok(())
    }

    /// Display name of an element: its label if present, else its index.
    pub fn label(&self, a: Elem) -> String {
        match &self.labels {
            Some(ls) => ls[a].clone(),
            None => a.to_string(),
        }
    }

    /// True when the two tables define the same operation, ignoring labels.
    pub fn same_op(&self, other: &CayleyTable) -> bool {
        self.order == other.order && self.cells == other.cells
    }

    /// Lexicographically first triple `(a, b, c)` with `(ab)c != a(bc)`,
    /// or `None` when the operation is associative.
    pub fn associativity_counterexample(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.order;
        (0..n)
            .into_par_iter()
            .filter_map(|a| {
                for b in 0..n {
                    for c in 0..n {
                        if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                            return Some((a, b, c));
                        }
                    }
                }
                None
            })
            .min()
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_counterexample().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// The table with both arguments swapped: `t'(a, b) = t(b, a)`.
    pub fn transposed(&self) -> CayleyTable {
        let n = self.order;
        let mut cells = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[a * n + b] = self.op(b, a);
            }
        }
        CayleyTable {
            order: n,
            cells,
            labels: self.labels.clone(),
        }
    }

    /// Relabels the carrier along `p`: `t'(p(a), p(b)) = p(t(a, b))`.
    pub fn permuted(&self, p: &[Elem]) -> CayleyTable {
        let n = self.order;
        debug_assert!(perm::is_permutation(p, n));
        let q = perm::inverse(p);
        let mut cells = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                cells[i * n + j] = p[self.op(q[i], q[j])];
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|ls| (0..n).map(|i| ls[q[i]].clone()).collect());
        CayleyTable {
            order: n,
            cells,
            labels,
        }
    }

    /// Restricts the operation to a sorted subset that must be closed under it.
    /// Element `elems[i]` of the ambient table becomes index `i`.
    pub fn subtable(&self, elems: &[Elem]) -> Result<CayleyTable> {
        let pos = |x: Elem| elems.binary_search(&x).ok();
        let mut rows = Vec::with_capacity(elems.len());
        for &a in elems {
            let mut row = Vec::with_capacity(elems.len());
            for &b in elems {
                match pos(self.op(a, b)) {
                    Some(i) => row.push(i),
                    None => {
                        return Err(Error::Malformed(format!(
                            "subset is not closed: {a} * {b} = {} escapes",
                            self.op(a, b)
                        )))
                    }
                }
            }
            rows.push(row);
        }
        let labels = self
            .labels
            .as_ref()
            .map(|ls| elems.iter().map(|&e| ls[e].clone()).collect());
        CayleyTable::from_rows(rows, labels)
    }

    /// All automorphisms of the table, in lexicographic one-line order.
    pub fn automorphisms(&self) -> Vec<Vec<Elem>> {
        let n = self.order;
        perm::all(n)
            .filter(|p| {
                (0..n).all(|a| (0..n).all(|b| p[self.op(a, b)] == self.op(p[a], p[b])))
            })
            .collect()
    }
}

/// Cyclic group of order `n` under addition mod `n`.
pub fn cyclic(n: usize) -> Result<CayleyTable> {
    if n == 0 {
        return Err(Error::Malformed("cyclic group needs positive order".into()));
    }
    let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    CayleyTable::from_rows(rows, None)
}

/// Symmetric group on `n` letters. Elements are the permutations of `0..n-1`
/// in lexicographic one-line order, so indices are stable across runs, and
/// `table[a][b]` is "apply `a`, then `b`". Labels use 1-based cycle notation.
pub fn symmetric(n: usize) -> Result<CayleyTable> {
    if n == 0 || n > 5 {
        return Err(Error::UnsupportedKind(format!(
            "symmetric({n}) outside supported range 1..=5"
        )));
    }
    let perms: Vec<Vec<Elem>> = perm::all(n).collect();
    let index_of = |p: &[Elem]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    let rows = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                // "p then q" sends x to q[p[x]]
                .map(|q| index_of(&perm::compose(q, p)))
                .collect()
        })
        .collect();
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    CayleyTable::from_rows(rows, Some(labels))
}

/// 1-based cycle notation for a permutation, `"id"` for the identity.
pub fn cycle_notation(p: &[Elem]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        out.push('(');
        for (i, c) in cycle.iter().enumerate() {
            if i > 0 && n > 9 {
                out.push(' ');
            }
            out.push_str(&(c + 1).to_string());
        }
        out.push(')');
    }
    if out.is_empty() {
        "id".into()
    } else {
        out
    }
}

/// Join semilattice generated by a partial order on `0..n-1`.
///
/// `leq` lists generating pairs `(x, y)` meaning `x <= y`; the reflexive
/// transitive closure is taken. Fails if the closure is not antisymmetric or
/// some pair has no least upper bound.
pub fn join_semilattice(n: usize, leq: &[(Elem, Elem)]) -> Result<CayleyTable> {
    if n == 0 {
        return Err(Error::Malformed("semilattice needs positive order".into()));
    }
    let mut le = vec![vec![false; n]; n];
    for i in 0..n {
        le[i][i] = true;
    }
    for &(x, y) in leq {
        if x >= n || y >= n {
            return Err(Error::Malformed(format!("pair ({x}, {y}) out of range")));
        }
        le[x][y] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && le[i][j] && le[j][i] {
                return Err(Error::Malformed(format!(
                    "order is not antisymmetric at ({i}, {j})"
                )));
            }
        }
    }
    let mut rows = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let uppers: Vec<Elem> = (0..n).filter(|&c| le[a][c] && le[b][c]).collect();
            let join = uppers
                .iter()
                .copied()
                .find(|&c| uppers.iter().all(|&d| le[c][d]));
            match join {
                Some(c) => rows[a][b] = c,
                None => {
                    return Err(Error::Malformed(format!(
                        "elements {a} and {b} have no join"
                    )))
                }
            }
        }
    }
    CayleyTable::from_rows(rows, None)
}

fn pair_labels(t1: &CayleyTable, t2: &CayleyTable) -> Option<Vec<String>> {
    match (t1.labels(), t2.labels()) {
        (Some(l1), Some(l2)) => Some(
            l1.iter()
                .flat_map(|a| l2.iter().map(move |u| format!("({a},{u})")))
                .collect(),
        ),
        _ => None,
    }
}

/// Direct product; the pair `(a, u)` becomes index `a * t2.order() + u`.
pub fn direct_product(t1: &CayleyTable, t2: &CayleyTable) -> CayleyTable {
    let (n1, n2) = (t1.order(), t2.order());
    let rows = (0..n1 * n2)
        .map(|i| {
            let (a, u) = (i / n2, i % n2);
            (0..n1 * n2)
                .map(|j| {
                    let (b, v) = (j / n2, j % n2);
                    t1.op(a, b) * n2 + t2.op(u, v)
                })
                .collect()
        })
        .collect();
    CayleyTable::from_rows(rows, pair_labels(t1, t2)).expect("product table is well-formed")
}

/// Semidirect product: `(a, u)(b, v) = (a * action[u](b), u * v)` where each
/// `action[u]` must be an automorphism of `t1`.
pub fn semidirect(t1: &CayleyTable, t2: &CayleyTable, action: &[Vec<Elem>]) -> Result<CayleyTable> {
    let (n1, n2) = (t1.order(), t2.order());
    if action.len() != n2 {
        return Err(Error::Malformed(format!(
            "action family has {} maps for acting order {n2}",
            action.len()
        )));
    }
    for (u, map) in action.iter().enumerate() {
        if !perm::is_permutation(map, n1) {
            return Err(Error::ActionNotBijective { index: u });
        }
        for a in 0..n1 {
            for b in 0..n1 {
                if map[t1.op(a, b)] != t1.op(map[a], map[b]) {
                    return Err(Error::ActionNotAutomorphism { index: u, a, b });
                }
            }
        }
    }
    let rows = (0..n1 * n2)
        .map(|i| {
            let (a, u) = (i / n2, i % n2);
            (0..n1 * n2)
                .map(|j| {
                    let (b, v) = (j / n2, j % n2);
                    t1.op(a, action[u][b]) * n2 + t2.op(u, v)
                })
                .collect()
        })
        .collect();
    CayleyTable::from_rows(rows, pair_labels(t1, t2))
}
