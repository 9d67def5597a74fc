//! m-ballot paths, the m-Tamari rotation, prefix reading into (m+1)-ary
//! trees and the multilinear form behind the m-Tamari series.
//!
//! An m-ballot path of size `n` has `n` north and `m·n` east steps and every
//! prefix with `i` norths and `j` easts satisfies `j ≤ m·i`. For `m = 1`
//! these are Dyck paths.
//!
//! Reading a path in prefix order (root first, children right to left, `N`
//! for a node, `E` for a leaf, final leaf dropped) gives a tree with `n`
//! nodes of arity `m + 1`. Evaluating that tree with `x` at leaves and
//!
//! ```text
//! node(c0, …, cm) = x y · c0 · Δ(c1 · Δ(… Δ(cm)))
//! ```
//!
//! at nodes gives a polynomial whose value at `x = y = 1` counts the paths
//! below the original one in the m-Tamari order.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{delta, Polynomial};
use crate::tree::{parse_steps, steps_to_string, BinaryTree, Step};

/// Largest size accepted by the BFS-based path oracles.
pub const MAX_PATH_ORACLE_SIZE: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BallotPath {
    m: usize,
    steps: Vec<Step>,
}

impl BallotPath {
    pub fn new(m: usize, steps: Vec<Step>) -> Result<Self> {
        if m == 0 {
            return Err(Error::Input("slope m must be at least 1".into()));
        }
        let (mut norths, mut easts) = (0usize, 0usize);
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::N => norths += 1,
                Step::E => easts += 1,
            }
            if easts > m * norths {
                return Err(Error::parse(i, format!("path crosses the line x = {m}y")));
            }
        }
        if easts != m * norths {
            return Err(Error::parse(
                steps.len(),
                format!("path must end at ({}, {norths})", m * norths),
            ));
        }
        Ok(BallotPath { m, steps })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of north steps.
    pub fn size(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::N).count()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn word(&self) -> String {
        steps_to_string(&self.steps)
    }

    /// For `m = 1`: the binary tree with this Dyck word under the postfix
    /// reading.
    pub fn to_binary_tree(&self) -> Result<BinaryTree> {
        if self.m != 1 {
            return Err(Error::Input(format!(
                "postfix tree bijection needs m = 1, got m = {}",
                self.m
            )));
        }
        BinaryTree::from_dyck(&self.steps)
    }

    pub fn from_binary_tree(tree: &BinaryTree) -> Self {
        BallotPath {
            m: 1,
            steps: tree.to_dyck(),
        }
    }

    /// Paths one rotation above `self`. For every `E` immediately followed
    /// by `N`, the `E` is swapped with the shortest factor starting at that
    /// `N` which returns to its starting height (height = `m·#N − #E`).
    pub fn rotation_covers(&self) -> Vec<BallotPath> {
        let w = &self.steps;
        let mut out = BTreeSet::new();
        for k in 0..w.len().saturating_sub(1) {
            if w[k] != Step::E || w[k + 1] != Step::N {
                continue;
            }
            let mut height = 0isize;
            let mut end = k + 1;
            for (e, s) in w.iter().enumerate().skip(k + 1) {
                height += match s {
                    Step::N => self.m as isize,
                    Step::E => -1,
                };
                if height == 0 {
                    end = e;
                    break;
                }
            }
            let mut steps = Vec::with_capacity(w.len());
            steps.extend_from_slice(&w[..k]);
            steps.extend_from_slice(&w[k + 1..=end]);
            steps.push(Step::E);
            steps.extend_from_slice(&w[end + 1..]);
            debug_assert!(BallotPath::new(self.m, steps.clone()).is_ok());
            out.insert(BallotPath { m: self.m, steps });
        }
        out.into_iter().collect()
    }
}

impl fmt::Display for BallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}\n{}", self.m, self.word())
    }
}

impl fmt::Debug for BallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BallotPath(m={}; {})", self.m, self.word())
    }
}

impl FromStr for BallotPath {
    type Err = Error;

    /// Parses `m=<int>` on the first line and the step word on the second.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let m = lines
            .next()
            .and_then(|h| h.trim().strip_prefix("m="))
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::parse(0, "expected header m=<int>"))?;
        let steps = parse_steps(lines.next().unwrap_or(""))?;
        BallotPath::new(m, steps)
    }
}

/// All m-ballot paths of size `n`, in lexicographic order with `N < E`.
pub fn enumerate_ballot_paths(m: usize, n: usize) -> Result<Vec<BallotPath>> {
    if m == 0 {
        return Err(Error::Input("slope m must be at least 1".into()));
    }
    fn walk(
        m: usize,
        n: usize,
        norths: usize,
        easts: usize,
        word: &mut Vec<Step>,
        out: &mut Vec<BallotPath>,
    ) {
        if norths == n && easts == m * n {
            out.push(BallotPath {
                m,
                steps: word.clone(),
            });
            return;
        }
        if norths < n {
            word.push(Step::N);
            walk(m, n, norths + 1, easts, word, out);
            word.pop();
        }
        if easts < m * norths {
            word.push(Step::E);
            walk(m, n, norths, easts + 1, word, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    walk(m, n, 0, 0, &mut Vec::new(), &mut out);
    Ok(out)
}

fn reachable(path: &BallotPath) -> HashSet<BallotPath> {
    let mut seen = HashSet::from([path.clone()]);
    let mut queue = VecDeque::from([path.clone()]);
    while let Some(p) = queue.pop_front() {
        for q in p.rotation_covers() {
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

/// `lower ≤ upper` in the m-Tamari order, by breadth-first search.
pub fn path_leq(lower: &BallotPath, upper: &BallotPath) -> Result<bool> {
    if lower.m != upper.m {
        return Err(Error::Input(format!(
            "slope mismatch: m = {} vs m = {}",
            lower.m, upper.m
        )));
    }
    Error::check_size(lower.size(), upper.size())?;
    Error::check_capacity("m-Tamari BFS oracle", lower.size(), MAX_PATH_ORACLE_SIZE)?;
    Ok(reachable(lower).contains(upper))
}

/// For every path of size `n`, the number of paths weakly below it.
pub fn count_paths_below(m: usize, n: usize) -> Result<Vec<(BallotPath, u64)>> {
    Error::check_capacity("m-Tamari BFS oracle", n, MAX_PATH_ORACLE_SIZE)?;
    count_paths_below_uncapped(m, n)
}

/// [`count_paths_below`] without the size check.
pub fn count_paths_below_uncapped(m: usize, n: usize) -> Result<Vec<(BallotPath, u64)>> {
    let paths = enumerate_ballot_paths(m, n)?;
    let mut below: HashMap<&BallotPath, u64> = paths.iter().map(|p| (p, 0)).collect();
    for p in &paths {
        for q in reachable(p) {
            *below
                .get_mut(&q)
                .expect("rotation stays among enumerated paths") += 1;
        }
    }
    Ok(paths.iter().map(|p| (p.clone(), below[p])).collect())
}

/// Number of m-Tamari intervals of size `n`, by brute force.
pub fn count_path_intervals(m: usize, n: usize) -> Result<u64> {
    Ok(count_paths_below(m, n)?.iter().map(|(_, c)| c).sum())
}

/// A planar tree whose internal nodes all have the same number of children.
/// Children are stored left to right.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum MAryTree {
    Leaf,
    Node(Vec<MAryTree>),
}

impl MAryTree {
    pub fn node_count(&self) -> usize {
        match self {
            MAryTree::Leaf => 0,
            MAryTree::Node(cs) => 1 + cs.iter().map(MAryTree::node_count).sum::<usize>(),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            MAryTree::Leaf => 1,
            MAryTree::Node(cs) => cs.iter().map(MAryTree::leaf_count).sum(),
        }
    }

    /// For arity 2, the corresponding binary tree (leaves become empty
    /// subtrees).
    pub fn to_binary_tree(&self) -> Option<BinaryTree> {
        match self {
            MAryTree::Leaf => Some(BinaryTree::Empty),
            MAryTree::Node(cs) if cs.len() == 2 => Some(BinaryTree::node(
                cs[0].to_binary_tree()?,
                cs[1].to_binary_tree()?,
            )),
            MAryTree::Node(_) => None,
        }
    }
}

impl fmt::Display for MAryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MAryTree::Leaf => f.write_str("_"),
            MAryTree::Node(cs) => {
                f.write_str("[")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl fmt::Debug for MAryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The (m+1)-ary tree whose right-to-left prefix reading is `path`.
pub fn path_to_mary_prefix(path: &BallotPath) -> MAryTree {
    fn read(steps: &mut impl Iterator<Item = Step>, arity: usize) -> MAryTree {
        match steps.next().unwrap_or(Step::E) {
            Step::E => MAryTree::Leaf,
            Step::N => {
                let mut children: Vec<MAryTree> = (0..arity).map(|_| read(steps, arity)).collect();
                children.reverse();
                MAryTree::Node(children)
            }
        }
    }
    // the dropped final leaf is supplied by `unwrap_or(Step::E)`
    let mut it = path.steps.iter().copied();
    let tree = read(&mut it, path.m + 1);
    debug_assert!(it.next().is_none());
    tree
}

/// Inverse of [`path_to_mary_prefix`]. Every node must have `m + 1` children.
pub fn mary_to_path_prefix(m: usize, tree: &MAryTree) -> Result<BallotPath> {
    fn write(t: &MAryTree, arity: usize, out: &mut Vec<Step>) -> Result<()> {
        match t {
            MAryTree::Leaf => out.push(Step::E),
            MAryTree::Node(cs) => {
                if cs.len() != arity {
                    return Err(Error::Input(format!(
                        "node with {} children, expected {arity}",
                        cs.len()
                    )));
                }
                out.push(Step::N);
                for c in cs.iter().rev() {
                    write(c, arity, out)?;
                }
            }
        }
        Ok(())
    }
    if m == 0 {
        return Err(Error::Input("slope m must be at least 1".into()));
    }
    let mut steps = Vec::new();
    write(tree, m + 1, &mut steps)?;
    steps.pop();
    BallotPath::new(m, steps)
}

/// `x y f1 Δ(f2 Δ(… Δ(fk)))` for `k = fs.len() ≥ 1` arguments.
pub fn multilinear_form(fs: &[Polynomial]) -> Result<Polynomial> {
    multilinear_form_truncated(fs, u32::MAX)
}

fn multilinear_form_truncated(fs: &[Polynomial], max_y: u32) -> Result<Polynomial> {
    let (last, rest) = fs
        .split_last()
        .ok_or_else(|| Error::Input("multilinear form needs at least one argument".into()))?;
    let inner_max = max_y.saturating_sub(1);
    let mut acc = last.truncate_y(inner_max);
    for f in rest.iter().rev() {
        acc = f.mul_truncated(&delta(&acc), inner_max);
    }
    if max_y == 0 {
        return Ok(Polynomial::zero());
    }
    Ok(acc.shift(1, 1, 0))
}

/// The node form of the m-Tamari series: [`multilinear_form`] on exactly
/// `m + 1` arguments.
pub fn mtamari_form(m: usize, fs: &[Polynomial]) -> Result<Polynomial> {
    if m == 0 || fs.len() != m + 1 {
        return Err(Error::Input(format!(
            "m-Tamari form with m = {m} takes {} arguments, got {}",
            m + 1,
            fs.len()
        )));
    }
    multilinear_form(fs)
}

/// `Φ_m(x, y) = x + B(Φ_m, …, Φ_m)` with `m + 1` arguments, truncated after
/// `y^max_y`.
pub fn phi_m_series(m: usize, max_y: u32) -> Result<Polynomial> {
    if m == 0 {
        return Err(Error::Input("slope m must be at least 1".into()));
    }
    let mut phi = Polynomial::x();
    for _ in 0..=max_y {
        let args = vec![phi.clone(); m + 1];
        phi = Polynomial::x() + multilinear_form_truncated(&args, max_y)?;
    }
    Ok(phi)
}

/// Leaves evaluate to `x`, nodes to [`multilinear_form`] of their children
/// in left-to-right order.
pub fn mary_tamari_poly(tree: &MAryTree) -> Polynomial {
    match tree {
        MAryTree::Leaf => Polynomial::x(),
        MAryTree::Node(cs) => {
            let polys: Vec<_> = cs.iter().map(mary_tamari_poly).collect();
            multilinear_form(&polys).expect("nodes have at least one child")
        }
    }
}

/// One line of the path-counting check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCheck {
    pub path: BallotPath,
    pub polynomial_at_one: BigInt,
    pub paths_below: u64,
}

impl PathCheck {
    pub fn passed(&self) -> bool {
        self.polynomial_at_one == BigInt::from(self.paths_below)
    }
}

/// For each m-ballot path `D` of size `n`, compares the prefix-tree
/// polynomial at `x = y = 1` with the brute-force number of paths `≤ D`.
pub fn verify_path_counts(m: usize, n: usize) -> Result<Vec<PathCheck>> {
    Error::check_capacity("m-Tamari BFS oracle", n, MAX_PATH_ORACLE_SIZE)?;
    verify_path_counts_uncapped(m, n)
}

/// [`verify_path_counts`] without the size check.
pub fn verify_path_counts_uncapped(m: usize, n: usize) -> Result<Vec<PathCheck>> {
    Ok(count_paths_below_uncapped(m, n)?
        .into_iter()
        .map(|(path, paths_below)| PathCheck {
            polynomial_at_one: mary_tamari_poly(&path_to_mary_prefix(&path)).eval_at_one(),
            path,
            paths_below,
        })
        .collect())
}
