//! Interval-posets: posets on `1..=n` encoding Tamari intervals.
//!
//! A binary search tree `T` read as a poset has two kinds of relations: `a ≺ b`
//! with `a < b` when `a` sits in the left subtree of `b` (increasing), and
//! `b ≺ a` with `b > a` when `b` sits in the right subtree of `a`
//! (decreasing). The interval `[T, T']` is encoded by the union of the
//! decreasing relations of `T` and the increasing relations of `T'`.
//!
//! A poset is an interval-poset iff, for all `a < b < c`,
//!
//! * `a ≺ c` implies `b ≺ c`, and
//! * `c ≺ a` implies `b ≺ a`.
//!
//! Relations are stored transitively closed as one bitset row per vertex.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::order::{tamari_leq_oracle, trees_above, Permutation, MAX_ORACLE_TREE_SIZE};
use crate::poly::Polynomial;
use crate::tree::BinaryTree;

/// Upper bound on the number of linear extensions [`IntervalPoset::linear_extensions`]
/// will materialise.
pub const MAX_LINEAR_EXTENSIONS: usize = 1 << 22;

/// First axiom violated by a candidate relation set.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("relation {a}<{b} mentions a vertex outside 1..={n}")]
    OutOfRange { a: usize, b: usize, n: usize },
    #[error("relations {a}<{b} and {b}<{a} form a cycle")]
    Cycle { a: usize, b: usize },
    #[error("increasing closure: {a}<{c} requires {b}<{c}")]
    IncreasingClosure { a: usize, b: usize, c: usize },
    #[error("decreasing closure: {c}<{a} requires {b}<{a}")]
    DecreasingClosure { a: usize, b: usize, c: usize },
}

/// A transitively closed interval-poset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalPoset {
    n: usize,
    words: usize,
    /// Row `a - 1` holds the set of `b` with `a ≺ b`.
    bits: Vec<u64>,
}

impl IntervalPoset {
    fn blank(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        IntervalPoset {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// The poset on `1..=n` with no relations: the interval `[min, max]`.
    pub fn without_relations(n: usize) -> Self {
        Self::blank(n)
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.bits[(a - 1) * self.words..a * self.words]
    }

    fn set(&mut self, a: usize, b: usize) {
        let i = b - 1;
        self.bits[(a - 1) * self.words + i / 64] |= 1 << (i % 64);
    }

    fn close(&mut self) {
        let (n, w) = (self.n, self.words);
        for k in 1..=n {
            for i in 1..=n {
                if self.precedes(i, k) {
                    for j in 0..w {
                        let v = self.bits[(k - 1) * w + j];
                        self.bits[(i - 1) * w + j] |= v;
                    }
                }
            }
        }
    }

    fn from_pairs_closed(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut p = Self::blank(n);
        for (a, b) in pairs {
            p.set(a, b);
        }
        p.close();
        p
    }

    fn union_closed(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (x, y) in p.bits.iter_mut().zip(&other.bits) {
            *x |= *y;
        }
        p.close();
        p
    }

    /// Builds the closure of `relations` on `1..=n` and checks the
    /// interval-poset axioms, reporting the first violation with a witness.
    pub fn validate(
        n: usize,
        relations: &[(usize, usize)],
    ) -> std::result::Result<Self, Violation> {
        for &(a, b) in relations {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Violation::OutOfRange { a, b, n });
            }
        }
        let p = Self::from_pairs_closed(n, relations.iter().copied());
        p.check_axioms()?;
        Ok(p)
    }

    /// Checks antisymmetry and both closure axioms on the stored relation.
    pub fn check_axioms(&self) -> std::result::Result<(), Violation> {
        let n = self.n;
        for a in 1..=n {
            for b in a..=n {
                if self.precedes(a, b) && self.precedes(b, a) {
                    return Err(Violation::Cycle { a, b });
                }
            }
        }
        for a in 1..=n {
            for c in a + 1..=n {
                if self.precedes(a, c) {
                    if let Some(b) = (a + 1..c).find(|&b| !self.precedes(b, c)) {
                        return Err(Violation::IncreasingClosure { a, b, c });
                    }
                }
                if self.precedes(c, a) {
                    if let Some(b) = (a + 1..c).find(|&b| !self.precedes(b, a)) {
                        return Err(Violation::DecreasingClosure { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a ≺ b` in the poset.
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        let i = b - 1;
        self.row(a)[i / 64] >> (i % 64) & 1 == 1
    }

    /// All relations `(a, b)` meaning `a ≺ b`, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (1..=n)
            .flat_map(|a| (1..=n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.precedes(a, b))
            .collect()
    }

    /// Transitive reduction, sorted by `(a, b)`.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(a, b)| !(1..=self.n).any(|c| self.precedes(a, c) && self.precedes(c, b)))
            .collect()
    }

    pub fn relation_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn filtered(&self, keep: impl Fn(usize, usize) -> bool) -> Self {
        let mut p = Self::blank(self.n);
        for (a, b) in self.relations() {
            if keep(a, b) {
                p.set(a, b);
            }
        }
        p
    }

    /// Only the relations `a ≺ b` with `a < b`.
    pub fn increasing_part(&self) -> Self {
        self.filtered(|a, b| a < b)
    }

    /// Only the relations `b ≺ a` with `b > a`.
    pub fn decreasing_part(&self) -> Self {
        self.filtered(|a, b| a > b)
    }

    /// Vertices with no outgoing decreasing relation, increasing. These are
    /// the roots (minimal labels) of the trees of the decreasing forest.
    pub fn decreasing_roots(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&a| !(1..a).any(|c| self.precedes(a, c)))
            .collect()
    }

    /// Number of trees in the decreasing forest.
    pub fn decreasing_tree_count(&self) -> usize {
        self.decreasing_roots().len()
    }

    /// Number of vertices `a` with at least one `b ≺ a`, `b > a`.
    pub fn decreasing_target_count(&self) -> usize {
        (1..=self.n)
            .filter(|&a| (a + 1..=self.n).any(|b| self.precedes(b, a)))
            .count()
    }

    /// Sub-poset on `lo..=hi`, relabelled to `1..=hi-lo+1`.
    pub fn restrict(&self, lo: usize, hi: usize) -> Self {
        if hi < lo {
            return Self::blank(0);
        }
        let m = hi - lo + 1;
        let mut p = Self::blank(m);
        for a in lo..=hi {
            for b in lo..=hi {
                if self.precedes(a, b) {
                    p.set(a - lo + 1, b - lo + 1);
                }
            }
        }
        p
    }

    /// Builds a poset of size `n` from pieces placed at offsets, plus extra
    /// relations, and closes it. Used by composition.
    pub(crate) fn assemble(
        n: usize,
        parts: &[(&IntervalPoset, usize)],
        extra: &[(usize, usize)],
    ) -> Self {
        let mut p = Self::blank(n);
        for (part, offset) in parts {
            for (a, b) in part.relations() {
                p.set(a + offset, b + offset);
            }
        }
        for &(a, b) in extra {
            p.set(a, b);
        }
        p.close();
        p
    }

    /// The tree whose decreasing forest is the decreasing part of `self`.
    pub fn lower_tree(&self) -> BinaryTree {
        fn build(p: &IntervalPoset, lo: usize, hi: usize) -> BinaryTree {
            if lo > hi {
                return BinaryTree::Empty;
            }
            let root = (lo..=hi)
                .find(|&r| (r + 1..=hi).all(|j| p.precedes(j, r)))
                .expect("hi always qualifies");
            BinaryTree::node(build(p, lo, root - 1), build(p, root + 1, hi))
        }
        build(self, 1, self.n)
    }

    /// The tree whose increasing forest is the increasing part of `self`.
    pub fn upper_tree(&self) -> BinaryTree {
        fn build(p: &IntervalPoset, lo: usize, hi: usize) -> BinaryTree {
            if lo > hi {
                return BinaryTree::Empty;
            }
            let root = (lo..=hi)
                .rev()
                .find(|&r| (lo..r).all(|i| p.precedes(i, r)))
                .expect("lo always qualifies");
            BinaryTree::node(build(p, lo, root - 1), build(p, root + 1, hi))
        }
        build(self, 1, self.n)
    }

    /// Predecessor sets as bit masks; only meaningful for `n ≤ 64`.
    fn predecessor_masks(&self) -> Vec<u64> {
        (1..=self.n)
            .map(|b| {
                (1..=self.n)
                    .filter(|&a| self.precedes(a, b))
                    .fold(0u64, |m, a| m | 1 << (a - 1))
            })
            .collect()
    }

    /// All permutations in which `a` comes before `b` whenever `a ≺ b`.
    ///
    /// Fails with a capacity error once more than [`MAX_LINEAR_EXTENSIONS`]
    /// extensions have been produced.
    pub fn linear_extensions(&self) -> Result<BTreeSet<Permutation>> {
        Error::check_capacity("linear extensions poset size", self.n, 64)?;
        let preds = self.predecessor_masks();
        let mut out = BTreeSet::new();
        let mut word = Vec::with_capacity(self.n);
        let mut overflow = false;
        extend(&preds, 0, &mut word, &mut out, &mut overflow);
        if overflow {
            return Err(Error::Capacity {
                what: "linear extension count",
                requested: MAX_LINEAR_EXTENSIONS + 1,
                max: MAX_LINEAR_EXTENSIONS,
            });
        }
        Ok(out)
    }

    fn greedy_extension(&self, largest: bool) -> Permutation {
        let preds = self.predecessor_masks();
        let mut placed = 0u64;
        let mut word = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let avail =
                (1..=self.n).filter(|&v| placed >> (v - 1) & 1 == 0 && preds[v - 1] & !placed == 0);
            let v = if largest { avail.max() } else { avail.min() }.expect("acyclic");
            placed |= 1 << (v - 1);
            word.push(v);
        }
        Permutation::new(word).expect("greedy output is a permutation")
    }

    /// Linear extension with the fewest co-inversions (smallest available
    /// vertex first).
    pub fn min_linear_extension(&self) -> Permutation {
        self.greedy_extension(false)
    }

    /// Linear extension with the most co-inversions (largest available
    /// vertex first).
    pub fn max_linear_extension(&self) -> Permutation {
        self.greedy_extension(true)
    }

    fn relation_tokens(&self) -> Vec<String> {
        self.cover_relations()
            .iter()
            .map(|(a, b)| format!("{a}<{b}"))
            .collect()
    }
}

fn extend(
    preds: &[u64],
    placed: u64,
    word: &mut Vec<usize>,
    out: &mut BTreeSet<Permutation>,
    overflow: &mut bool,
) {
    if *overflow {
        return;
    }
    let n = preds.len();
    if word.len() == n {
        out.insert(Permutation::new(word.clone()).expect("extension is a permutation"));
        if out.len() > MAX_LINEAR_EXTENSIONS {
            *overflow = true;
        }
        return;
    }
    for v in 1..=n {
        if placed >> (v - 1) & 1 == 0 && preds[v - 1] & !placed == 0 {
            word.push(v);
            extend(preds, placed | 1 << (v - 1), word, out, overflow);
            word.pop();
        }
    }
}

/// Increasing forest of `tree`: `a ≺ b` iff `a` lies in the left subtree of `b`.
pub fn inc_forest(tree: &BinaryTree) -> IntervalPoset {
    let mut p = IntervalPoset::blank(tree.size());
    tree.for_each_span(|s| {
        for a in s.start..s.label {
            p.set(a, s.label);
        }
    });
    p
}

/// Decreasing forest of `tree`: `b ≺ a` iff `b` lies in the right subtree of `a`.
pub fn dec_forest(tree: &BinaryTree) -> IntervalPoset {
    let mut p = IntervalPoset::blank(tree.size());
    tree.for_each_span(|s| {
        for b in s.label + 1..=s.end {
            p.set(b, s.label);
        }
    });
    p
}

/// The interval-poset of `[lower, upper]`, or `None` when `lower ≰ upper`.
pub fn make_interval(lower: &BinaryTree, upper: &BinaryTree) -> Result<Option<IntervalPoset>> {
    Error::check_size(lower.size(), upper.size())?;
    let dec = dec_forest(lower);
    let inc = inc_forest(upper);
    let p = dec.union_closed(&inc);
    if p.check_axioms().is_err() {
        return Ok(None);
    }
    if p.decreasing_part() != dec || p.increasing_part() != inc {
        return Ok(None);
    }
    Ok(Some(p))
}

/// Intersection of two intervals: the closure of both relation sets, or
/// `None` when it is not a poset (empty intersection).
pub fn intersect(first: &IntervalPoset, second: &IntervalPoset) -> Result<Option<IntervalPoset>> {
    Error::check_size(first.n, second.n)?;
    let p = first.union_closed(second);
    Ok(p.check_axioms().ok().map(|_| p))
}

/// `inner ⊆ outer` as intervals. The contained interval carries more
/// relations, so this tests `rel(outer) ⊆ rel(inner)`.
pub fn interval_contains(outer: &IntervalPoset, inner: &IntervalPoset) -> Result<bool> {
    Error::check_size(outer.n, inner.n)?;
    Ok(outer.bits.iter().zip(&inner.bits).all(|(o, i)| o & !i == 0))
}

fn is_refinement(
    base: &IntervalPoset,
    refined: &IntervalPoset,
    new_ok: impl Fn(usize, usize) -> bool,
) -> Result<bool> {
    if !interval_contains(base, refined)? {
        return Ok(false);
    }
    Ok(refined
        .relations()
        .into_iter()
        .filter(|&(a, b)| !base.precedes(a, b))
        .all(|(a, b)| new_ok(a, b)))
}

/// `refined` adds only decreasing relations to `base`: same upper tree,
/// larger lower tree.
pub fn is_decreasing_refinement(base: &IntervalPoset, refined: &IntervalPoset) -> Result<bool> {
    is_refinement(base, refined, |a, b| a > b)
}

/// `refined` adds only increasing relations to `base`: same lower tree,
/// smaller upper tree.
pub fn is_increasing_refinement(base: &IntervalPoset, refined: &IntervalPoset) -> Result<bool> {
    is_refinement(base, refined, |a, b| a < b)
}

/// Trees `t` with `lower_tree(p) ≤ t ≤ upper_tree(p)`, using the BFS oracle.
pub fn trees_in_interval(p: &IntervalPoset) -> Result<Vec<BinaryTree>> {
    Error::check_capacity("trees_in_interval size", p.n, MAX_ORACLE_TREE_SIZE)?;
    let upper = p.upper_tree();
    let mut out = Vec::new();
    for t in trees_above(&p.lower_tree())? {
        if tamari_leq_oracle(&t, &upper)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// `x^(decreasing trees) · y^n · b^(vertices receiving a decreasing relation)`.
pub fn stat_monomial(p: &IntervalPoset) -> Polynomial {
    Polynomial::monomial(
        1,
        p.decreasing_tree_count() as u32,
        p.n as u32,
        p.decreasing_target_count() as u32,
    )
}

impl fmt::Display for IntervalPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}\n{}", self.n, self.relation_tokens().join(","))
    }
}

impl fmt::Debug for IntervalPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IntervalPoset(n={}; {})",
            self.n,
            self.relation_tokens().join(",")
        )
    }
}

impl FromStr for IntervalPoset {
    type Err = Error;

    /// Parses `n=<int>` followed by an optional line of `a<b` tokens.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let header = lines.next().unwrap_or("").trim();
        let n = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::parse(0, "expected header n=<int>"))?;
        let mut pairs = Vec::new();
        let body = lines.next().unwrap_or("").trim();
        if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
            return Err(Error::Input(format!("unexpected trailing line {extra:?}")));
        }
        if !body.is_empty() {
            for token in body.split(',') {
                let token = token.trim();
                let (a, b) = token
                    .split_once('<')
                    .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                    .ok_or_else(|| Error::Input(format!("malformed relation {token:?}")))?;
                pairs.push((a, b));
            }
        }
        Ok(IntervalPoset::validate(n, &pairs)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{sylvester_class, weak_leq};
    use crate::tree::enumerate_trees;

    fn tree(s: &str) -> BinaryTree {
        s.parse().unwrap()
    }

    fn poset(s: &str) -> IntervalPoset {
        s.parse().unwrap()
    }

    const PAIR_LOWER: &str = "[[[_,[_,_]],_],_]";
    const PAIR_UPPER: &str = "[_,[[_,_],[_,_]]]";
    const TEN_NODES: &str = "[[_,[[_,_],[_,_]]],[[_,_],[[_,_],[_,_]]]]";
    const ELEVEN_NODES: &str = "[[[_,_],[[_,_],[_,_]]],[_,[[_,_],[_,[_,_]]]]]";

    #[test]
    fn validate_examples() {
        let p = IntervalPoset::validate(4, &[(2, 1), (2, 3)]).unwrap();
        assert_eq!(p.cover_relations(), vec![(2, 1), (2, 3)]);
        assert_eq!(
            IntervalPoset::validate(3, &[(1, 3)]),
            Err(Violation::IncreasingClosure { a: 1, b: 2, c: 3 })
        );
        assert_eq!(
            IntervalPoset::validate(3, &[(3, 1)]),
            Err(Violation::DecreasingClosure { a: 1, b: 2, c: 3 })
        );
        assert_eq!(
            IntervalPoset::validate(2, &[(1, 2), (2, 1)]),
            Err(Violation::Cycle { a: 1, b: 1 })
        );
        assert_eq!(
            IntervalPoset::validate(2, &[(1, 3)]),
            Err(Violation::OutOfRange { a: 1, b: 3, n: 2 })
        );
        assert_eq!(IntervalPoset::validate(0, &[]).unwrap().n(), 0);
    }

    #[test]
    fn forests_of_ten_node_tree() {
        let t = tree(TEN_NODES);
        assert_eq!(
            inc_forest(&t).cover_relations(),
            vec![(1, 5), (2, 3), (3, 5), (4, 5), (6, 7), (8, 9)]
        );
        assert_eq!(
            dec_forest(&t).cover_relations(),
            vec![
                (2, 1),
                (3, 1),
                (4, 3),
                (6, 5),
                (7, 5),
                (8, 7),
                (9, 7),
                (10, 9)
            ]
        );
    }

    #[test]
    fn forests_of_eleven_node_tree() {
        let t = tree(ELEVEN_NODES);
        let inc = inc_forest(&t);
        assert_eq!(
            inc.cover_relations(),
            vec![(1, 2), (2, 6), (3, 4), (4, 6), (5, 6), (8, 9)]
        );
        assert_eq!(
            inc.max_linear_extension().as_slice(),
            &[11, 10, 8, 9, 7, 5, 3, 4, 1, 2, 6]
        );
        let full = make_interval(&t, &t).unwrap().unwrap();
        assert_eq!(full.max_linear_extension(), inc.max_linear_extension());
    }

    #[test]
    fn trivial_forests() {
        let one = BinaryTree::leaf_node();
        assert_eq!(inc_forest(&one).relation_count(), 0);
        assert_eq!(dec_forest(&one).relation_count(), 0);
        assert_eq!(dec_forest(&BinaryTree::left_comb(4)).relation_count(), 0);
        assert_eq!(inc_forest(&BinaryTree::right_comb(4)).relation_count(), 0);
        assert_eq!(
            dec_forest(&tree(PAIR_LOWER)).cover_relations(),
            vec![(2, 1)]
        );
    }

    #[test]
    fn sample_interval() {
        let p = make_interval(&tree(PAIR_LOWER), &tree(PAIR_UPPER))
            .unwrap()
            .unwrap();
        assert_eq!(p.to_string(), "n=4\n2<1,2<3");
        assert_eq!(p.lower_tree(), tree(PAIR_LOWER));
        assert_eq!(p.upper_tree(), tree(PAIR_UPPER));
        let ext = p.linear_extensions().unwrap();
        let lo: Permutation = "2134".parse().unwrap();
        let hi: Permutation = "4231".parse().unwrap();
        let expected: BTreeSet<_> = Permutation::all(4)
            .unwrap()
            .into_iter()
            .filter(|q| weak_leq(&lo, q).unwrap() && weak_leq(q, &hi).unwrap())
            .collect();
        assert_eq!(ext, expected);
        assert_eq!(p.min_linear_extension(), lo);
        assert_eq!(p.max_linear_extension(), hi);
    }

    #[test]
    fn make_interval_edge_cases() {
        let t = tree(PAIR_LOWER);
        let full = make_interval(&t, &t).unwrap().unwrap();
        let bst: Vec<_> = {
            let mut v = Vec::new();
            t.for_each_span(|s| {
                for d in s.start..=s.end {
                    if d != s.label {
                        v.push((d, s.label));
                    }
                }
            });
            v.sort();
            v
        };
        assert_eq!(full.relations(), bst);
        assert_eq!(
            make_interval(&BinaryTree::right_comb(3), &BinaryTree::left_comb(3)).unwrap(),
            None
        );
        assert!(make_interval(&t, &BinaryTree::leaf_node()).is_err());
    }

    #[test]
    fn empty_poset_bounds() {
        let p = IntervalPoset::without_relations(3);
        assert_eq!(p.lower_tree(), BinaryTree::left_comb(3));
        assert_eq!(p.upper_tree(), BinaryTree::right_comb(3));
        assert_eq!(p.linear_extensions().unwrap().len(), 6);
    }

    #[test]
    fn comparability_matches_oracle() {
        for n in 0..=5 {
            let trees = enumerate_trees(n);
            for t in &trees {
                for u in &trees {
                    let ip = make_interval(t, u).unwrap();
                    assert_eq!(ip.is_some(), tamari_leq_oracle(t, u).unwrap(), "{t} {u}");
                    if let Some(p) = ip {
                        assert_eq!(&p.lower_tree(), t);
                        assert_eq!(&p.upper_tree(), u);
                    }
                }
            }
        }
    }

    #[test]
    fn forests_are_valid_one_sided_posets() {
        for n in 0..=6 {
            for t in enumerate_trees(n) {
                let inc = inc_forest(&t);
                let dec = dec_forest(&t);
                inc.check_axioms().unwrap();
                dec.check_axioms().unwrap();
                assert_eq!(inc.decreasing_part().relation_count(), 0);
                assert_eq!(dec.increasing_part().relation_count(), 0);
                assert_eq!(dec.decreasing_tree_count(), t.left_border_count());
                assert_eq!(IntervalPoset::blank(n).union_closed(&dec).lower_tree(), t);
            }
        }
    }

    #[test]
    fn intersection() {
        let trees = enumerate_trees(3);
        let p = make_interval(&BinaryTree::left_comb(3), &tree("[[_,_],[_,_]]"))
            .unwrap()
            .unwrap();
        assert_eq!(intersect(&p, &p).unwrap(), Some(p.clone()));
        let a = make_interval(&trees[0], &trees[0]).unwrap().unwrap();
        let b = make_interval(&trees[4], &trees[4]).unwrap().unwrap();
        assert_eq!(intersect(&a, &b).unwrap(), None);
        assert!(intersect(&a, &IntervalPoset::without_relations(2)).is_err());
    }

    #[test]
    fn intersect_top_and_bottom_halves() {
        for n in 0..=5 {
            for t in enumerate_trees(n) {
                let up = make_interval(&t, &BinaryTree::right_comb(n))
                    .unwrap()
                    .unwrap();
                let down = make_interval(&BinaryTree::left_comb(n), &t)
                    .unwrap()
                    .unwrap();
                let both = intersect(&up, &down).unwrap().unwrap();
                assert_eq!(both.lower_tree(), t);
                assert_eq!(both.upper_tree(), t);
            }
        }
    }

    #[test]
    fn refinement_of_composition_inputs() {
        let base = poset("n=7\n1<4,2<4,3<2,5<6,7<6");
        let refined = poset("n=7\n1<4,2<4,3<2,5<6,6<4,7<6");
        assert!(is_decreasing_refinement(&base, &refined).unwrap());
        assert!(!is_increasing_refinement(&base, &refined).unwrap());
        assert!(!is_decreasing_refinement(&refined, &base).unwrap());
        assert!(is_decreasing_refinement(&base, &base).unwrap());
    }

    #[test]
    fn stat_monomials() {
        let i1 = poset("n=3\n3<2");
        let i2 = poset("n=3\n1<2,3<2");
        let m = Polynomial::monomial(1, 2, 3, 1);
        assert_eq!(stat_monomial(&i1), m);
        assert_eq!(stat_monomial(&i2), m);
        assert_eq!(
            stat_monomial(&IntervalPoset::without_relations(0)),
            Polynomial::one()
        );
    }

    #[test]
    fn linear_extensions_of_five_node_tree() {
        let t = tree("[[[_,_],[_,_]],[_,_]]");
        let p = make_interval(&t, &t).unwrap().unwrap();
        assert_eq!(p.linear_extensions().unwrap(), sylvester_class(&t).unwrap());
        assert_eq!(p.max_linear_extension().to_string(), "53124");
    }

    #[test]
    fn linear_extension_capacity() {
        let p = IntervalPoset::without_relations(11);
        assert!(matches!(p.linear_extensions(), Err(Error::Capacity { .. })));
    }

    #[test]
    fn text_format() {
        assert_eq!(IntervalPoset::without_relations(3).to_string(), "n=3\n");
        assert_eq!(poset("n=3"), IntervalPoset::without_relations(3));
        assert_eq!(poset("n=4\n2<1, 2<3").to_string(), "n=4\n2<1,2<3");
        assert!("m=3".parse::<IntervalPoset>().is_err());
        assert!("n=3\n1-2".parse::<IntervalPoset>().is_err());
        assert!(matches!(
            "n=3\n1<3".parse::<IntervalPoset>(),
            Err(Error::InvalidPoset(Violation::IncreasingClosure { .. }))
        ));
    }
}
