//! Ordered trees of height `H + 1` with `n + 1` nodes versus `n`-element
//! semiorders of length `H`.
//!
//! Depth `i` of the tree becomes level `i` of the semiorder, node for element:
//! the `j`-th node at depth `i` (left to right) is the `j`-th element on level
//! `i` in canonical vector order. The child counts between consecutive depths
//! are turned into suffix sums, which are exactly how many elements of the
//! next level sit below each element. Deeper levels are below everything on
//! the level in question, so each vector entry is a suffix sum plus the sizes
//! of all levels at least two steps down.
//!
//! The single-node tree corresponds to the empty semiorder.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::semiorder::Semiorder;
use crate::tree::{DyckPath, OrderedTree};

/// Connection data between consecutive depths of an ordered tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelLinkage {
    /// `level_sizes[i - 1]` is the number of nodes at depth `i`.
    pub level_sizes: Vec<usize>,
    /// `child_counts[i - 1][j]`: children of the `j`-th node at depth `i - 1`.
    pub child_counts: Vec<Vec<usize>>,
    /// Suffix sums of each row of `child_counts`.
    pub suffix_sums: Vec<Vec<usize>>,
}

impl LevelLinkage {
    pub fn of_tree(tree: &OrderedTree) -> Self {
        let mut level_sizes = Vec::new();
        let mut child_counts = Vec::new();
        let mut level: Vec<&OrderedTree> = vec![tree];
        loop {
            let counts: Vec<usize> = level.iter().map(|t| t.children().len()).collect();
            let next: Vec<&OrderedTree> = level.iter().flat_map(|t| t.children()).collect();
            if next.is_empty() {
                break;
            }
            level_sizes.push(next.len());
            child_counts.push(counts);
            level = next;
        }
        let suffix_sums = child_counts.iter().map(|s| suffix_sums(s)).collect();
        LevelLinkage {
            level_sizes,
            child_counts,
            suffix_sums,
        }
    }
}

fn suffix_sums(s: &[usize]) -> Vec<usize> {
    let mut u = vec![0; s.len()];
    let mut acc = 0;
    for j in (0..s.len()).rev() {
        acc += s[j];
        u[j] = acc;
    }
    u
}

/// The stage-by-stage construction of a semiorder from a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub linkage: LevelLinkage,
    /// `stages[i - 1]` describes the first `i` levels; the last stage is the result.
    pub stages: Vec<Vec<usize>>,
}

impl Construction {
    pub fn run(tree: &OrderedTree) -> Self {
        let linkage = LevelLinkage::of_tree(tree);
        let x = &linkage.level_sizes;
        let mut stages: Vec<Vec<usize>> = Vec::with_capacity(x.len());
        if let Some(&first) = x.first() {
            stages.push(vec![0; first]);
        }
        // Elements before `settled` are on levels two or more above the new one.
        let mut settled = 0;
        for i in 1..x.len() {
            let prev = stages.last().unwrap();
            let added = x[i];
            let u = &linkage.suffix_sums[i];
            let mut next = Vec::with_capacity(prev.len() + added);
            next.extend(prev[..settled].iter().map(|r| r + added));
            next.extend(prev[settled..].iter().zip(u).map(|(r, uj)| r + uj));
            next.extend(std::iter::repeat_n(0, added));
            settled += x[i - 1];
            stages.push(next);
        }
        Construction { linkage, stages }
    }

    pub fn result(&self) -> Semiorder {
        Semiorder::from_rho_unchecked(self.stages.last().cloned().unwrap_or_default())
    }
}

pub fn tree_to_semiorder(tree: &OrderedTree) -> Semiorder {
    Construction::run(tree).result()
}

pub fn semiorder_to_tree(s: &Semiorder) -> OrderedTree {
    if s.is_empty() {
        return OrderedTree::leaf();
    }
    let profile = s.level_profile().expect("nonempty");
    let x = &profile.sizes;
    let levels = x.len();
    // tail[l] = sizes of levels l+1, l+2, ... (0-based l).
    let mut tail = vec![0usize; levels + 1];
    for l in (0..levels).rev() {
        tail[l] = tail[l + 1] + x[l];
    }

    // child_counts[d]: children of each node at depth d.
    let mut child_counts: Vec<Vec<usize>> = Vec::with_capacity(levels + 1);
    child_counts.push(vec![x[0]]);
    for level in 1..=levels {
        let deeper = if level + 1 < levels {
            tail[level + 1]
        } else {
            0
        };
        let u: Vec<usize> = profile
            .elements_on(level)
            .map(|e| s.rho()[e] - deeper)
            .collect();
        let counts = (0..u.len())
            .map(|j| u[j] - u.get(j + 1).copied().unwrap_or(0))
            .collect();
        child_counts.push(counts);
    }

    let mut below: Vec<OrderedTree> = Vec::new();
    for counts in child_counts.iter().rev() {
        let mut pool = below.into_iter();
        below = counts
            .iter()
            .map(|&c| OrderedTree::with_children(pool.by_ref().take(c).collect()))
            .collect();
        debug_assert!(pool.next().is_none());
    }
    debug_assert_eq!(below.len(), 1);
    below.pop().unwrap()
}

pub fn dyck_to_semiorder(path: &DyckPath) -> Semiorder {
    tree_to_semiorder(&OrderedTree::from_dyck(path))
}

pub fn semiorder_to_dyck(s: &Semiorder) -> DyckPath {
    semiorder_to_tree(s).to_dyck()
}

/// Length-at-most-one semiorder from an arrangement of `a_1..a_n` on two levels.
///
/// `a_1` and the members of `upper` (a subset of `2..=n`) go on the upper
/// level; `a_i > a_j` exactly when `i < j`, `a_i` is upper and `a_j` is lower.
pub fn arrangement_to_semiorder(n: usize, upper: &BTreeSet<usize>) -> Result<Semiorder> {
    if n == 0 {
        return Err(Error::InvalidParameters("arrangement needs n >= 1".into()));
    }
    if let Some(&bad) = upper.iter().find(|&&i| i < 2 || i > n) {
        return Err(Error::IndexOutOfRange(bad));
    }
    let is_upper = |i: usize| i == 1 || upper.contains(&i);
    let mut lower_after = 0;
    let mut rho = Vec::with_capacity(n);
    for i in (1..=n).rev() {
        if is_upper(i) {
            rho.push(lower_after);
        } else {
            lower_after += 1;
            rho.push(0);
        }
    }
    rho.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Semiorder::from_rho_unchecked(rho))
}

/// Inverse of [`arrangement_to_semiorder`]: the upper indices other than 1.
pub fn semiorder_to_arrangement(s: &Semiorder) -> Result<BTreeSet<usize>> {
    let profile = s.level_profile()?;
    if profile.length > 1 {
        return Err(Error::LengthTooLarge(profile.length));
    }
    let r = s.rho();
    let top = profile.sizes[0];
    Ok((2..=top).map(|i| r[0] - r[i - 1] + i).collect())
}
