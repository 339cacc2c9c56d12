//! Small permutation helpers used throughout the crate.
//!
//! A permutation of `0..n` is stored in one-line notation as a `Vec<Elem>`:
//! `p[i]` is the image of `i`.

use crate::Elem;

/// `compose(f, g)` is the map `x -> f(g(x))`, i.e. `g` acts first.
pub fn compose(f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    g.iter().map(|&x| f[x]).collect()
}

pub fn inverse(p: &[Elem]) -> Vec<Elem> {
    let mut q = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        q[x] = i;
    }
    q
}

pub fn identity(n: usize) -> Vec<Elem> {
    (0..n).collect()
}

pub fn is_permutation(p: &[Elem], n: usize) -> bool {
    if p.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// All permutations of `0..n` in lexicographic order of their one-line form.
pub fn all(n: usize) -> impl Iterator<Item = Vec<Elem>> {
    let total = factorial(n);
    (0..total).map(move |rank| unrank(n, rank))
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// The `rank`-th permutation of `0..n` in lexicographic order
/// (factorial number system).
pub fn unrank(n: usize, mut rank: usize) -> Vec<Elem> {
    let mut pool: Vec<Elem> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i);
        let idx = rank / f;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unrank_is_lexicographic() {
        let got: Vec<_> = all(3).collect();
        let want = vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn inverse_round_trip() {
        for p in all(4) {
            assert_eq!(compose(&p, &inverse(&p)), identity(4));
            assert_eq!(compose(&inverse(&p), &p), identity(4));
        }
    }
}
