//! Brute-force oracles: permutations and the weak order, sylvester classes,
//! and the Tamari order by breadth-first closure of right rotations.
//!
//! Everything here is deliberately naive. These functions exist to check
//! the interval-poset and polynomial routes, not to scale.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tree::{enumerate_trees, reachable, BinaryTree};

/// Largest tree size accepted by the BFS-based oracles.
pub const MAX_ORACLE_TREE_SIZE: usize = 8;
/// Largest permutation size accepted by full permutation enumeration.
pub const MAX_ORACLE_PERMUTATION_SIZE: usize = 7;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Input(format!(
                    "{word:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Position (0-based) of each value; `positions()[v]` for `v` in `1..=n`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.len() + 1];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Co-inversions: pairs `(p(i), p(j))` with `i < j` and `p(i) > p(j)`.
    pub fn coinv(&self) -> BTreeSet<(usize, usize)> {
        let w = &self.0;
        let mut out = BTreeSet::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    out.insert((w[i], w[j]));
                }
            }
        }
        out
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Result<Vec<Permutation>> {
        Error::check_capacity("permutation enumeration", n, MAX_ORACLE_PERMUTATION_SIZE)?;
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(word.clone()));
            // next lexicographic permutation
            let Some(i) = (1..word.len()).rev().find(|&i| word[i - 1] < word[i]) else {
                break;
            };
            let j = (i..word.len())
                .rev()
                .find(|&j| word[j] > word[i - 1])
                .unwrap();
            word.swap(i - 1, j);
            word[i..].reverse();
        }
        Ok(out)
    }
}

/// Right weak order: `coinv(p) ⊆ coinv(q)`.
pub fn weak_leq(p: &Permutation, q: &Permutation) -> Result<bool> {
    Error::check_size(p.len(), q.len())?;
    Ok(p.coinv().is_subset(&q.coinv()))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Input(e.to_string()))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .enumerate()
                .map(|(i, c)| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::parse(i, format!("unexpected character {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

/// The sylvester class of `tree`: permutations in which every node appears
/// after all of its descendants. Enumerates all `n!` permutations.
pub fn sylvester_class(tree: &BinaryTree) -> Result<BTreeSet<Permutation>> {
    let n = tree.size();
    Error::check_capacity(
        "sylvester class enumeration",
        n,
        MAX_ORACLE_PERMUTATION_SIZE,
    )?;
    let mut spans = Vec::new();
    tree.for_each_span(|s| spans.push(s));
    Ok(Permutation::all(n)?
        .into_iter()
        .filter(|p| {
            let pos = p.positions();
            spans
                .iter()
                .all(|s| (s.start..=s.end).all(|d| pos[d] <= pos[s.label]))
        })
        .collect())
}

/// `lower ≤ upper` in the Tamari order, by breadth-first search over right
/// rotations starting at `lower`.
pub fn tamari_leq_oracle(lower: &BinaryTree, upper: &BinaryTree) -> Result<bool> {
    Error::check_size(lower.size(), upper.size())?;
    Error::check_capacity("Tamari BFS oracle", lower.size(), MAX_ORACLE_TREE_SIZE)?;
    Ok(reachable(lower, true).contains(upper))
}

/// All trees `u` with `tree ≤ u`, sorted canonically.
pub fn trees_above(tree: &BinaryTree) -> Result<Vec<BinaryTree>> {
    Error::check_capacity("Tamari BFS oracle", tree.size(), MAX_ORACLE_TREE_SIZE)?;
    let mut v: Vec<_> = reachable(tree, true).into_iter().collect();
    v.sort();
    Ok(v)
}

/// All trees `u` with `u ≤ tree`, sorted canonically.
pub fn trees_below(tree: &BinaryTree) -> Result<Vec<BinaryTree>> {
    Error::check_capacity("Tamari BFS oracle", tree.size(), MAX_ORACLE_TREE_SIZE)?;
    let mut v: Vec<_> = reachable(tree, false).into_iter().collect();
    v.sort();
    Ok(v)
}

/// Number of pairs `t ≤ u` among trees of size `n`, by one upward BFS per
/// lower tree.
pub fn count_intervals_bruteforce(n: usize) -> Result<u64> {
    Error::check_capacity("brute-force interval count", n, MAX_ORACLE_TREE_SIZE)?;
    Ok(count_intervals_bruteforce_uncapped(n))
}

/// [`count_intervals_bruteforce`] without the size check. Time grows like
/// the number of intervals.
pub fn count_intervals_bruteforce_uncapped(n: usize) -> u64 {
    enumerate_trees(n)
        .iter()
        .map(|t| reachable(t, true).len() as u64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn tree(s: &str) -> BinaryTree {
        s.parse().unwrap()
    }

    #[test]
    fn coinversions() {
        assert!(Permutation::identity(5).coinv().is_empty());
        assert_eq!(perm("312").coinv(), BTreeSet::from([(3, 1), (3, 2)]));
        assert_eq!(
            perm("4231").coinv(),
            BTreeSet::from([(4, 2), (4, 3), (4, 1), (2, 1), (3, 1)])
        );
    }

    #[test]
    fn weak_order() {
        assert!(weak_leq(&perm("2134"), &perm("4231")).unwrap());
        assert!(weak_leq(&perm("4231"), &perm("4231")).unwrap());
        assert!(!weak_leq(&perm("321"), &perm("123")).unwrap());
        assert!(matches!(
            weak_leq(&perm("21"), &perm("123")),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn permutation_parsing() {
        assert!("112".parse::<Permutation>().is_err());
        assert!("13".parse::<Permutation>().is_err());
        let long = Permutation::new((1..=10).rev().collect()).unwrap();
        assert_eq!(long.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
        assert_eq!(Permutation::all(4).unwrap().len(), 24);
        assert!(Permutation::all(8).is_err());
    }

    #[test]
    fn sylvester_class_of_five_node_tree() {
        let class = sylvester_class(&tree("[[_,_],[_,_]]")).unwrap();
        assert_eq!(class, BTreeSet::from([perm("132"), perm("312")]));

        let five = tree("[[[_,_],[_,_]],[_,_]]");
        let expected: BTreeSet<_> = [
            "13254", "31254", "13524", "31524", "15324", "35124", "51324", "53124",
        ]
        .iter()
        .map(|s| perm(s))
        .collect();
        assert_eq!(sylvester_class(&five).unwrap(), expected);

        assert_eq!(
            sylvester_class(&BinaryTree::leaf_node()).unwrap(),
            BTreeSet::from([perm("1")])
        );
        assert!(sylvester_class(&BinaryTree::left_comb(8)).is_err());
    }

    #[test]
    fn sylvester_classes_partition() {
        for n in 0..=6 {
            let mut all = BTreeSet::new();
            let mut total = 0;
            for t in enumerate_trees(n) {
                let class = sylvester_class(&t).unwrap();
                total += class.len();
                all.extend(class);
            }
            assert_eq!(total, all.len());
            assert_eq!(all.len(), Permutation::all(n).unwrap().len());
        }
    }

    #[test]
    fn sylvester_classes_are_weak_intervals() {
        for n in 1..=5 {
            let perms = Permutation::all(n).unwrap();
            for t in enumerate_trees(n) {
                let class = sylvester_class(&t).unwrap();
                let min = class.iter().min_by_key(|p| p.coinv().len()).unwrap();
                let max = class.iter().max_by_key(|p| p.coinv().len()).unwrap();
                let interval: BTreeSet<_> = perms
                    .iter()
                    .filter(|p| weak_leq(min, p).unwrap() && weak_leq(p, max).unwrap())
                    .cloned()
                    .collect();
                assert_eq!(interval, class, "tree {t}");
            }
        }
    }

    #[test]
    fn tamari_oracle() {
        let lc = BinaryTree::left_comb(4);
        let rc = BinaryTree::right_comb(4);
        assert!(tamari_leq_oracle(&lc, &rc).unwrap());
        assert!(!tamari_leq_oracle(&rc, &lc).unwrap());
        assert!(tamari_leq_oracle(&rc, &rc).unwrap());
        assert!(tamari_leq_oracle(&lc, &BinaryTree::left_comb(3)).is_err());
        let trees = enumerate_trees(3);
        let pairs = trees
            .iter()
            .flat_map(|a| trees.iter().map(move |b| (a, b)))
            .filter(|(a, b)| tamari_leq_oracle(a, b).unwrap())
            .count();
        assert_eq!(pairs, 13);
    }

    #[test]
    fn tamari_oracle_is_a_partial_order() {
        for n in 0..=5 {
            let trees = enumerate_trees(n);
            let leq: Vec<Vec<bool>> = trees
                .iter()
                .map(|a| {
                    trees
                        .iter()
                        .map(|b| tamari_leq_oracle(a, b).unwrap())
                        .collect()
                })
                .collect();
            let m = trees.len();
            for i in 0..m {
                assert!(leq[i][i]);
                for j in 0..m {
                    if i != j {
                        assert!(!(leq[i][j] && leq[j][i]));
                    }
                    for k in 0..m {
                        if leq[i][j] && leq[j][k] {
                            assert!(leq[i][k]);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn brute_force_counts() {
        let expected = [1, 1, 3, 13, 68, 399];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(count_intervals_bruteforce(n).unwrap(), c);
        }
        assert!(count_intervals_bruteforce(9).is_err());
    }

    #[test]
    fn up_and_down_sets_agree() {
        let trees = enumerate_trees(4);
        for t in &trees {
            for u in trees_above(t).unwrap() {
                assert!(trees_below(&u).unwrap().contains(t));
            }
        }
    }
}
