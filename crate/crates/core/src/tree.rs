//! Ordered (plane) trees and Dyck paths.
//!
//! Trees are written as balanced parentheses, one `(`...`)` pair per node with
//! the root included: `()` is a single node and `((())(()()))` is the six-node
//! tree whose root has a one-child node followed by a two-leaf node.
//! Dyck words use the ASCII letters `U` and `D` with no separators.
//!
//! The tree/path correspondence is the depth-first walk: visiting children
//! left to right, emit `U` on entering a child and `D` on returning.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OrderedTree {
    children: Vec<OrderedTree>,
}

impl OrderedTree {
    pub fn leaf() -> Self {
        OrderedTree::default()
    }

    pub fn with_children(children: Vec<OrderedTree>) -> Self {
        OrderedTree { children }
    }

    /// Root with `n` leaf children.
    pub fn star(n: usize) -> Self {
        OrderedTree::with_children(vec![OrderedTree::leaf(); n])
    }

    /// A path of `nodes` nodes hanging from the root.
    pub fn path(nodes: usize) -> Self {
        assert!(nodes >= 1);
        (1..nodes).fold(OrderedTree::leaf(), |t, _| {
            OrderedTree::with_children(vec![t])
        })
    }

    pub fn children(&self) -> &[OrderedTree] {
        &self.children
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(OrderedTree::node_count)
            .sum::<usize>()
    }

    /// Edges on a longest root-to-leaf path.
    pub fn height(&self) -> usize {
        self.children
            .iter()
            .map(|c| c.height() + 1)
            .max()
            .unwrap_or(0)
    }

    /// Number of nodes at each depth, starting with the root's depth 0.
    pub fn depth_profile(&self) -> Vec<usize> {
        let mut profile = Vec::new();
        let mut level: Vec<&OrderedTree> = vec![self];
        while !level.is_empty() {
            profile.push(level.len());
            level = level.iter().flat_map(|t| t.children.iter()).collect();
        }
        profile
    }

    /// Depth-first walk.
    pub fn to_dyck(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(2 * (self.node_count() - 1));
        // Stack of child iterators avoids recursion on deep trees.
        let mut stack = vec![self.children.iter()];
        while let Some(top) = stack.last_mut() {
            match top.next() {
                Some(child) => {
                    steps.push(Step::Up);
                    stack.push(child.children.iter());
                }
                None => {
                    stack.pop();
                    if !stack.is_empty() {
                        steps.push(Step::Down);
                    }
                }
            }
        }
        DyckPath { steps }
    }

    pub fn from_dyck(path: &DyckPath) -> OrderedTree {
        let mut stack: Vec<Vec<OrderedTree>> = vec![Vec::new()];
        for step in &path.steps {
            match step {
                Step::Up => stack.push(Vec::new()),
                Step::Down => {
                    let children = stack.pop().expect("validated Dyck word");
                    stack
                        .last_mut()
                        .expect("validated Dyck word")
                        .push(OrderedTree { children });
                }
            }
        }
        debug_assert_eq!(stack.len(), 1);
        OrderedTree {
            children: stack.pop().unwrap(),
        }
    }

    /// All trees with `nodes` nodes, in the order of their Dyck words.
    pub fn all_with_nodes(nodes: usize) -> Vec<OrderedTree> {
        assert!(nodes >= 1);
        DyckPath::all(nodes - 1)
            .iter()
            .map(OrderedTree::from_dyck)
            .collect()
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedTree{self}")
    }
}

impl FromStr for OrderedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        if bytes.first() != Some(&b'(') {
            return Err(Error::UnbalancedParens(0));
        }
        let mut stack: Vec<Vec<OrderedTree>> = Vec::new();
        for (pos, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => {
                    if stack.is_empty() && pos > 0 {
                        return Err(Error::TrailingInput(pos));
                    }
                    stack.push(Vec::new());
                }
                b')' => {
                    let children = stack.pop().ok_or(Error::TrailingInput(pos))?;
                    let node = OrderedTree { children };
                    match stack.last_mut() {
                        Some(parent) => parent.push(node),
                        None if pos + 1 == bytes.len() => return Ok(node),
                        None => return Err(Error::TrailingInput(pos + 1)),
                    }
                }
                _ => {
                    return Err(if stack.is_empty() {
                        Error::TrailingInput(pos)
                    } else {
                        Error::UnbalancedParens(pos)
                    })
                }
            }
        }
        Err(Error::UnbalancedParens(bytes.len()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut altitude: usize = 0;
        for (pos, s) in steps.iter().enumerate() {
            match s {
                Step::Up => altitude += 1,
                Step::Down => {
                    altitude = altitude
                        .checked_sub(1)
                        .ok_or(Error::MalformedDyckWord(pos))?;
                }
            }
        }
        if altitude != 0 {
            return Err(Error::MalformedDyckWord(steps.len()));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn height(&self) -> usize {
        let mut alt = 0i64;
        let mut best = 0i64;
        for s in &self.steps {
            alt += if *s == Step::Up { 1 } else { -1 };
            best = best.max(alt);
        }
        best as usize
    }

    /// Indices `i` with `steps[i] = U` and `steps[i + 1] = D`.
    pub fn peaks(&self) -> Vec<usize> {
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::Up && w[1] == Step::Down)
            .map(|(i, _)| i)
            .collect()
    }

    /// Every Dyck word of the given semilength, in lexicographic order with `D < U`.
    pub fn all(semilength: usize) -> Vec<DyckPath> {
        fn go(ups: usize, downs: usize, n: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
            if cur.len() == 2 * n {
                out.push(DyckPath { steps: cur.clone() });
                return;
            }
            if downs < ups {
                cur.push(Step::Down);
                go(ups, downs + 1, n, cur, out);
                cur.pop();
            }
            if ups < n {
                cur.push(Step::Up);
                go(ups + 1, downs, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(
            0,
            0,
            semilength,
            &mut Vec::with_capacity(2 * semilength),
            &mut out,
        );
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .bytes()
            .enumerate()
            .map(|(pos, b)| match b {
                b'U' => Ok(Step::Up),
                b'D' => Ok(Step::Down),
                _ => Err(Error::MalformedDyckWord(pos)),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}
