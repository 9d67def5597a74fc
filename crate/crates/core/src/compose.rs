//! Composition of interval-posets and the recursive generation it induces.
//!
//! `compose(I1, I2)` glues `I1` (vertices `1..=k1`), a new vertex
//! `k = k1 + 1` and `I2` shifted by `k`. Every vertex of `I1` precedes `k`,
//! `k` precedes nothing above it, and `k` may absorb any prefix of the roots
//! of the decreasing forest of the shifted `I2`. Every interval-poset arises
//! from exactly one pair, which gives `Φ = B(Φ, Φ) + 1` combinatorially.

use crate::error::{Error, Result};
use crate::interval_poset::{inc_forest, IntervalPoset};
use crate::tree::BinaryTree;

/// Largest size accepted by [`enumerate_interval_posets`].
pub const MAX_ENUMERATION_SIZE: usize = 9;

/// The formal sum `𝔹(first, second)` as a list, ordered by the number of
/// absorbed decreasing roots (0 first).
pub fn compose(first: &IntervalPoset, second: &IntervalPoset) -> Vec<IntervalPoset> {
    let k1 = first.n();
    let k = k1 + 1;
    let n = k1 + second.n() + 1;
    let roots: Vec<usize> = second
        .decreasing_roots()
        .into_iter()
        .map(|v| v + k)
        .collect();
    let mut extra: Vec<(usize, usize)> = (1..=k1).map(|i| (i, k)).collect();
    let mut out = Vec::with_capacity(roots.len() + 1);
    out.push(IntervalPoset::assemble(
        n,
        &[(first, 0), (second, k)],
        &extra,
    ));
    for &v in &roots {
        extra.push((v, k));
        out.push(IntervalPoset::assemble(
            n,
            &[(first, 0), (second, k)],
            &extra,
        ));
    }
    out
}

/// The split vertex: the largest `k` such that every `i < k` precedes `k`.
pub fn split_vertex(p: &IntervalPoset) -> Option<usize> {
    (1..=p.n())
        .rev()
        .find(|&k| (1..k).all(|i| p.precedes(i, k)))
}

/// The unique pair `(I1, I2)` with `p ∈ compose(I1, I2)`.
pub fn decompose(p: &IntervalPoset) -> Result<(IntervalPoset, IntervalPoset)> {
    let k = split_vertex(p)
        .ok_or_else(|| Error::Input("cannot decompose the empty interval-poset".into()))?;
    Ok((p.restrict(1, k - 1), p.restrict(k + 1, p.n())))
}

/// All interval-posets of each size `0..=max_n`, generated recursively by
/// composition and sorted canonically within each size.
pub fn enumerate_interval_posets_upto(max_n: usize) -> Result<Vec<Vec<IntervalPoset>>> {
    Error::check_capacity("interval-poset enumeration", max_n, MAX_ENUMERATION_SIZE)?;
    Ok(enumerate_interval_posets_uncapped(max_n))
}

/// [`enumerate_interval_posets_upto`] without the size check. Memory grows
/// like the number of intervals.
pub fn enumerate_interval_posets_uncapped(max_n: usize) -> Vec<Vec<IntervalPoset>> {
    let mut by_size: Vec<Vec<IntervalPoset>> = vec![vec![IntervalPoset::without_relations(0)]];
    for size in 1..=max_n {
        let mut level = Vec::new();
        for k1 in 0..size {
            let k2 = size - 1 - k1;
            for a in &by_size[k1] {
                for b in &by_size[k2] {
                    level.extend(compose(a, b));
                }
            }
        }
        level.sort();
        by_size.push(level);
    }
    by_size
}

/// All interval-posets of size `n`.
pub fn enumerate_interval_posets(n: usize) -> Result<Vec<IntervalPoset>> {
    Ok(enumerate_interval_posets_upto(n)?.swap_remove(n))
}

/// All intervals `[t', tree]` with `t' ≤ tree`, built recursively by
/// composing the initial intervals of the two subtrees.
pub fn initial_interval_sum(tree: &BinaryTree) -> Vec<IntervalPoset> {
    match tree.children() {
        None => vec![IntervalPoset::without_relations(0)],
        Some((l, r)) => {
            let left = initial_interval_sum(l);
            let right = initial_interval_sum(r);
            let out: Vec<_> = left
                .iter()
                .flat_map(|a| right.iter().flat_map(move |b| compose(a, b)))
                .collect();
            debug_assert!(out.iter().all(|p| p.increasing_part() == inc_forest(tree)));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval_poset::stat_monomial;
    use crate::poly::{bilinear_b, Polynomial};

    fn poset(s: &str) -> IntervalPoset {
        s.parse().unwrap()
    }

    #[test]
    fn composition_example() {
        let i1 = poset("n=3\n3<2");
        let i2 = poset("n=3\n1<2,3<2");
        let out = compose(&i1, &i2);
        let expected = [
            "n=7\n1<4,2<4,3<2,5<6,7<6",
            "n=7\n1<4,2<4,3<2,5<4,5<6,7<6",
            "n=7\n1<4,2<4,3<2,5<6,6<4,7<6",
        ];
        let got: Vec<String> = out.iter().map(|p| p.to_string()).collect();
        assert_eq!(got, expected);
        let sum: Polynomial = out.iter().map(stat_monomial).sum();
        let m = stat_monomial(&i1).at_b_one();
        assert_eq!(sum.at_b_one(), bilinear_b(&m, &m));
        for p in &out {
            assert_eq!(decompose(p).unwrap(), (i1.clone(), i2.clone()));
        }
    }

    #[test]
    fn trivial_composition() {
        let e = IntervalPoset::without_relations(0);
        assert_eq!(compose(&e, &e), vec![IntervalPoset::without_relations(1)]);
        assert_eq!(
            decompose(&IntervalPoset::without_relations(1)).unwrap(),
            (e.clone(), e)
        );
        assert!(decompose(&IntervalPoset::without_relations(0)).is_err());
    }

    #[test]
    fn small_counts() {
        let sizes: Vec<usize> = enumerate_interval_posets_upto(4)
            .unwrap()
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(sizes, [1, 1, 3, 13, 68]);
        assert!(enumerate_interval_posets(MAX_ENUMERATION_SIZE + 1).is_err());
    }

    #[test]
    fn no_crossing_relations() {
        let all = enumerate_interval_posets_upto(4).unwrap();
        for k1 in 0..=4 {
            for k2 in 0..=(4 - k1) {
                for a in &all[k1] {
                    for b in &all[k2] {
                        for p in compose(a, b) {
                            p.check_axioms().unwrap();
                            let n = p.n();
                            for i in 1..=k1 {
                                for j in k1 + 2..=n {
                                    assert!(!p.precedes(i, j) && !p.precedes(j, i));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn initial_intervals_of_single_node() {
        assert_eq!(
            initial_interval_sum(&BinaryTree::leaf_node()),
            vec![IntervalPoset::without_relations(1)]
        );
    }
}
