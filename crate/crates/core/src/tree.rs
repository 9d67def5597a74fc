//! Planar binary trees, right rotations and the Dyck-word encoding.
//!
//! Trees carry no labels. A node's label is its 1-based position in in-order
//! traversal, which is the unique labelling turning the tree into a binary
//! search tree. All node addressing (rotation sites, forests) goes through
//! these labels.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One step of a lattice path: north (up) or east (right).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    N,
    E,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
        }
    }
}

/// Renders a step word as a string over `{N, E}`.
pub fn steps_to_string(steps: &[Step]) -> String {
    steps.iter().map(|s| s.as_char()).collect()
}

/// Parses a step word. Commas and whitespace are ignored so that both
/// `NNEE` and `N,N,E,E` are accepted.
pub fn parse_steps(text: &str) -> Result<Vec<Step>> {
    let mut steps = Vec::with_capacity(text.len());
    for (i, c) in text.char_indices() {
        match c {
            'N' | 'n' => steps.push(Step::N),
            'E' | 'e' => steps.push(Step::E),
            ',' => {}
            c if c.is_whitespace() => {}
            c => {
                return Err(Error::parse(
                    i,
                    format!("unexpected character {c:?} in step word"),
                ))
            }
        }
    }
    Ok(steps)
}

/// True when every prefix has at least as many `N` as `E` and the totals match.
pub fn is_dyck_word(steps: &[Step]) -> bool {
    dyck_height(steps) == Some(0)
}

fn dyck_height(steps: &[Step]) -> Option<usize> {
    let mut height = 0usize;
    for s in steps {
        match s {
            Step::N => height += 1,
            Step::E => height = height.checked_sub(1)?,
        }
    }
    Some(height)
}

/// A rooted planar binary tree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub enum BinaryTree {
    #[default]
    Empty,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

/// Label range of a node and its two subtrees, in in-order labels.
///
/// The subtree rooted at `label` covers `start..=end`; its left subtree is
/// `start..label` and its right subtree `label+1..=end`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct NodeSpan {
    pub label: usize,
    pub start: usize,
    pub end: usize,
}

impl BinaryTree {
    pub fn empty() -> Self {
        BinaryTree::Empty
    }

    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaf_node() -> Self {
        Self::node(BinaryTree::Empty, BinaryTree::Empty)
    }

    /// The tree of size `n` where every child is a left child. This is the
    /// minimum of the Tamari lattice.
    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Empty, |acc, _| {
            Self::node(acc, BinaryTree::Empty)
        })
    }

    /// The tree of size `n` where every child is a right child (the maximum).
    pub fn right_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Empty, |acc, _| {
            Self::node(BinaryTree::Empty, acc)
        })
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, BinaryTree::Empty)
    }

    pub fn children(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        match self {
            BinaryTree::Empty => None,
            BinaryTree::Node(l, r) => Some((l, r)),
        }
    }

    pub fn left(&self) -> Option<&BinaryTree> {
        self.children().map(|(l, _)| l)
    }

    pub fn right(&self) -> Option<&BinaryTree> {
        self.children().map(|(_, r)| r)
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node(l, r) => l.size() + r.size() + 1,
        }
    }

    /// In-order label of the root, or `None` for the empty tree.
    pub fn root_label(&self) -> Option<usize> {
        self.left().map(|l| l.size() + 1)
    }

    /// Number of nodes on the leftmost spine.
    pub fn left_border_count(&self) -> usize {
        let mut count = 0;
        let mut cur = self;
        while let BinaryTree::Node(l, _) = cur {
            count += 1;
            cur = l;
        }
        count
    }

    /// Number of nodes on the rightmost spine.
    pub fn right_border_count(&self) -> usize {
        let mut count = 0;
        let mut cur = self;
        while let BinaryTree::Node(_, r) = cur {
            count += 1;
            cur = r;
        }
        count
    }

    /// Number of nodes whose right subtree is non-empty.
    pub fn right_subtree_count(&self) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node(l, r) => {
                l.right_subtree_count() + r.right_subtree_count() + usize::from(!r.is_empty())
            }
        }
    }

    /// Left/right mirror image.
    pub fn mirror(&self) -> BinaryTree {
        match self {
            BinaryTree::Empty => BinaryTree::Empty,
            BinaryTree::Node(l, r) => Self::node(r.mirror(), l.mirror()),
        }
    }

    /// In-order labels `1..=n`, paired with the depth of each node. Mostly
    /// useful to check that rotations keep the label sequence intact.
    pub fn in_order_depths(&self) -> Vec<(usize, usize)> {
        fn walk(t: &BinaryTree, depth: usize, out: &mut Vec<(usize, usize)>) {
            if let BinaryTree::Node(l, r) = t {
                walk(l, depth + 1, out);
                out.push((out.len() + 1, depth));
                walk(r, depth + 1, out);
            }
        }
        let mut out = Vec::new();
        walk(self, 0, &mut out);
        out
    }

    /// Visits every node in pre-order with its label span.
    pub(crate) fn for_each_span(&self, mut f: impl FnMut(NodeSpan)) {
        fn walk(t: &BinaryTree, offset: usize, f: &mut impl FnMut(NodeSpan)) -> usize {
            match t {
                BinaryTree::Empty => 0,
                BinaryTree::Node(l, r) => {
                    let ls = l.size();
                    let rs = r.size();
                    let label = offset + ls + 1;
                    f(NodeSpan {
                        label,
                        start: offset + 1,
                        end: label + rs,
                    });
                    walk(l, offset, f);
                    walk(r, label, f);
                    ls + rs + 1
                }
            }
        }
        walk(self, 0, &mut f);
    }

    fn check_label(&self, label: usize) -> Result<()> {
        let n = self.size();
        if label == 0 || label > n {
            Err(Error::Input(format!("node label {label} outside 1..={n}")))
        } else {
            Ok(())
        }
    }

    /// Right rotation at the node with in-order label `label`:
    /// `y(x(A,B),C)` becomes `x(A,y(B,C))`. Returns `None` when that node has
    /// no left child.
    pub fn rotate_right_at(&self, label: usize) -> Result<Option<BinaryTree>> {
        self.check_label(label)?;
        Ok(self.rewrite_at(label, &|l, r| match l {
            BinaryTree::Node(a, b) => Some(Self::node(
                (**a).clone(),
                Self::node((**b).clone(), r.clone()),
            )),
            BinaryTree::Empty => None,
        }))
    }

    /// Left rotation at `label`, the inverse of [`rotate_right_at`]:
    /// `x(A,y(B,C))` becomes `y(x(A,B),C)`.
    ///
    /// [`rotate_right_at`]: BinaryTree::rotate_right_at
    pub fn rotate_left_at(&self, label: usize) -> Result<Option<BinaryTree>> {
        self.check_label(label)?;
        Ok(self.rewrite_at(label, &|l, r| match r {
            BinaryTree::Node(b, c) => Some(Self::node(
                Self::node(l.clone(), (**b).clone()),
                (**c).clone(),
            )),
            BinaryTree::Empty => None,
        }))
    }

    fn rewrite_at(
        &self,
        label: usize,
        rewrite: &dyn Fn(&BinaryTree, &BinaryTree) -> Option<BinaryTree>,
    ) -> Option<BinaryTree> {
        let BinaryTree::Node(l, r) = self else {
            return None;
        };
        let own = l.size() + 1;
        match label.cmp(&own) {
            Ordering::Equal => rewrite(l, r),
            Ordering::Less => l
                .rewrite_at(label, rewrite)
                .map(|nl| Self::node(nl, (**r).clone())),
            Ordering::Greater => r
                .rewrite_at(label - own, rewrite)
                .map(|nr| Self::node((**l).clone(), nr)),
        }
    }

    /// Trees covering `self` in the Tamari order (one right rotation away),
    /// sorted canonically.
    pub fn tamari_covers_up(&self) -> Vec<BinaryTree> {
        let n = self.size();
        let set: BTreeSet<_> = (1..=n)
            .filter_map(|k| self.rotate_right_at(k).expect("label in range"))
            .collect();
        set.into_iter().collect()
    }

    /// Trees covered by `self` (one left rotation away), sorted canonically.
    pub fn tamari_covers_down(&self) -> Vec<BinaryTree> {
        let n = self.size();
        let set: BTreeSet<_> = (1..=n)
            .filter_map(|k| self.rotate_left_at(k).expect("label in range"))
            .collect();
        set.into_iter().collect()
    }

    /// Postfix reading: each empty subtree gives `N`, each node gives `E`,
    /// and the very first `N` is dropped. The result is a Dyck word with
    /// `size()` east steps.
    pub fn to_dyck(&self) -> Vec<Step> {
        fn walk(t: &BinaryTree, out: &mut Vec<Step>) {
            match t {
                BinaryTree::Empty => out.push(Step::N),
                BinaryTree::Node(l, r) => {
                    walk(l, out);
                    walk(r, out);
                    out.push(Step::E);
                }
            }
        }
        let mut out = Vec::with_capacity(2 * self.size() + 1);
        walk(self, &mut out);
        out.remove(0);
        out
    }

    /// Inverse of [`to_dyck`](BinaryTree::to_dyck).
    pub fn from_dyck(steps: &[Step]) -> Result<BinaryTree> {
        let mut height = 0usize;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::N => height += 1,
                Step::E => {
                    height = height
                        .checked_sub(1)
                        .ok_or_else(|| Error::parse(i, "path goes below the diagonal"))?
                }
            }
        }
        if height != 0 {
            return Err(Error::parse(
                steps.len(),
                "path does not end on the diagonal",
            ));
        }
        let mut stack = vec![BinaryTree::Empty];
        for s in steps {
            match s {
                Step::N => stack.push(BinaryTree::Empty),
                Step::E => {
                    let r = stack.pop().expect("dyck prefix");
                    let l = stack.pop().expect("dyck prefix");
                    stack.push(Self::node(l, r));
                }
            }
        }
        debug_assert_eq!(stack.len(), 1);
        Ok(stack.pop().unwrap())
    }
}

/// All binary trees with `n` nodes, sorted by Dyck word (`N < E`).
pub fn enumerate_trees(n: usize) -> Vec<BinaryTree> {
    let mut by_size: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Empty]];
    for size in 1..=n {
        let mut trees = Vec::new();
        for ls in 0..size {
            let rs = size - 1 - ls;
            for l in &by_size[ls] {
                for r in &by_size[rs] {
                    trees.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(trees);
    }
    let mut out = by_size.swap_remove(n);
    out.sort();
    out
}

/// Every tree reachable from `tree` by right rotations (including itself).
pub(crate) fn reachable(tree: &BinaryTree, up: bool) -> HashSet<BinaryTree> {
    let mut seen = HashSet::new();
    seen.insert(tree.clone());
    let mut queue = std::collections::VecDeque::from([tree.clone()]);
    while let Some(t) = queue.pop_front() {
        let next = if up {
            t.tamari_covers_up()
        } else {
            t.tamari_covers_down()
        };
        for u in next {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    seen
}

impl Ord for BinaryTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.to_dyck().cmp(&other.to_dyck()))
    }
}

impl PartialOrd for BinaryTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Empty => f.write_str("_"),
            BinaryTree::Node(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct LiteralParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl LiteralParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn tree(&mut self) -> Result<BinaryTree> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            Some(b'_') => {
                self.pos += 1;
                Ok(BinaryTree::Empty)
            }
            Some(b'[') => {
                self.pos += 1;
                let l = self.tree()?;
                self.expect(b',')?;
                let r = self.tree()?;
                self.expect(b']')?;
                Ok(BinaryTree::node(l, r))
            }
            Some(_) => Err(Error::parse(self.pos, "expected '_' or '['")),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    /// Accepts the literal grammar `tree := "_" | "[" tree "," tree "]"` or a
    /// Dyck word over `{N, E}`.
    fn from_str(s: &str) -> Result<Self> {
        let first = s.trim_start().bytes().next();
        if matches!(first, Some(b'_') | Some(b'[')) {
            let mut p = LiteralParser {
                bytes: s.as_bytes(),
                pos: 0,
            };
            let t = p.tree()?;
            p.skip_ws();
            if p.pos != s.len() {
                return Err(Error::parse(p.pos, "trailing input after tree literal"));
            }
            Ok(t)
        } else {
            BinaryTree::from_dyck(&parse_steps(s)?)
        }
    }
}
