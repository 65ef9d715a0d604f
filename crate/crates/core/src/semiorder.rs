//! Canonical semiorders and their level structure.
//!
//! An unlabeled semiorder on `n` elements is stored as its canonical vector
//! `rho = (r_1, ..., r_n)`: nonincreasing, with `r_i <= n - i`. Entry `r_i`
//! counts the elements below element `i`, and those elements are always the
//! `r_i` rightmost ones. Two semiorders are isomorphic exactly when their
//! vectors are equal.
//!
//! Elements are addressed by 0-based index into `rho`. Levels are 1-based:
//! an element is on level `i` when the longest chain strictly above it has
//! `i - 1` elements.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::relation::ComparabilityMatrix;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Semiorder {
    rho: Vec<usize>,
}

/// Per-element levels of a nonempty semiorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelProfile {
    /// 1-based level of each element, nondecreasing in element index.
    pub level_of: Vec<usize>,
    /// `sizes[i]` is the number of elements on level `i + 1`.
    pub sizes: Vec<usize>,
    /// Edges in a longest chain; `sizes.len() - 1`.
    pub length: usize,
}

impl LevelProfile {
    /// Element indices on `level` (1-based). Levels occupy contiguous index ranges.
    pub fn elements_on(&self, level: usize) -> Range<usize> {
        assert!(
            level >= 1 && level <= self.sizes.len(),
            "level {level} out of range"
        );
        let start: usize = self.sizes[..level - 1].iter().sum();
        start..start + self.sizes[level - 1]
    }

    pub fn levels(&self) -> usize {
        self.sizes.len()
    }

    /// Elements on the last level.
    pub fn good_elements(&self) -> Range<usize> {
        self.elements_on(self.sizes.len())
    }
}

/// A level holding a bad element, with one representative.
///
/// Bad elements on the same level are equivalent, so only the level matters
/// for counting; `element` is the first such element in index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BadElement {
    pub level: usize,
    pub element: usize,
}

/// Decomposition of a nonempty semiorder around its rightmost top element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    /// Induced semiorder on the elements not reachable from the pivot.
    pub rest: Semiorder,
    /// Induced semiorder on the pivot's descendants, pivot removed.
    pub below: Semiorder,
}

/// Equivalence-class contraction of a semiorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub seed: Semiorder,
    /// Class sizes, in the seed's element order.
    pub multiplicities: Vec<usize>,
    /// Element indices of each class in the original semiorder.
    pub classes: Vec<Range<usize>>,
}

impl Semiorder {
    /// Validates an arbitrary integer sequence.
    ///
    /// The first offending entry (1-based) is reported.
    pub fn from_vector(v: &[i64]) -> Result<Self> {
        let n = v.len();
        let mut rho = Vec::with_capacity(n);
        for (idx, &x) in v.iter().enumerate() {
            let pos = idx + 1;
            if x < 0 {
                return Err(Error::NegativeEntry(pos));
            }
            if idx > 0 && x > v[idx - 1] {
                return Err(Error::NotNonincreasing(pos));
            }
            if x as u64 > (n - pos) as u64 {
                return Err(Error::EntryTooLarge(pos));
            }
            rho.push(x as usize);
        }
        Ok(Semiorder { rho })
    }

    pub fn new(rho: Vec<usize>) -> Result<Self> {
        let n = rho.len();
        for (idx, &x) in rho.iter().enumerate() {
            let pos = idx + 1;
            if idx > 0 && x > rho[idx - 1] {
                return Err(Error::NotNonincreasing(pos));
            }
            if x > n - pos {
                return Err(Error::EntryTooLarge(pos));
            }
        }
        Ok(Semiorder { rho })
    }

    pub(crate) fn from_rho_unchecked(rho: Vec<usize>) -> Self {
        debug_assert!(Semiorder::new(rho.clone()).is_ok(), "bad rho {rho:?}");
        Semiorder { rho }
    }

    pub fn empty() -> Self {
        Semiorder { rho: Vec::new() }
    }

    pub fn antichain(n: usize) -> Self {
        Semiorder { rho: vec![0; n] }
    }

    /// The `n`-element chain `(n-1, ..., 1, 0)`.
    pub fn chain(n: usize) -> Self {
        Semiorder {
            rho: (0..n).rev().collect(),
        }
    }

    pub fn rho(&self) -> &[usize] {
        &self.rho
    }

    pub fn into_rho(self) -> Vec<usize> {
        self.rho
    }

    pub fn len(&self) -> usize {
        self.rho.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rho.is_empty()
    }

    /// Whether element `i` is above element `j`.
    #[inline]
    pub fn is_greater(&self, i: usize, j: usize) -> bool {
        j + self.rho[i] >= self.rho.len()
    }

    /// Number of elements above `j`; those are exactly `0..up_count(j)`.
    pub fn up_count(&self, j: usize) -> usize {
        let n = self.rho.len();
        self.rho.partition_point(|&r| j + r >= n)
    }

    pub fn comparability(&self) -> ComparabilityMatrix {
        ComparabilityMatrix::from_fn(self.len(), |i, j| self.is_greater(i, j))
    }

    /// Canonical vector of a relation, failing unless it is a semiorder.
    ///
    /// Elements are ranked by down-set size (descending), ties broken by
    /// up-set size (ascending); the relation must then follow the suffix rule.
    pub fn from_relation(m: &ComparabilityMatrix) -> Result<Self> {
        Semiorder::canonical_labeling(m).map(|(s, _)| s)
    }

    /// Like [`Semiorder::from_relation`], also returning `order` where
    /// `order[i]` is the original element placed at canonical index `i`.
    pub fn canonical_labeling(m: &ComparabilityMatrix) -> Result<(Self, Vec<usize>)> {
        let n = m.len();
        let keyed: Vec<(usize, usize)> = (0..n).map(|i| (m.down_count(i), m.up_count(i))).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            keyed[b]
                .0
                .cmp(&keyed[a].0)
                .then(keyed[a].1.cmp(&keyed[b].1))
        });
        let rho: Vec<usize> = order.iter().map(|&i| keyed[i].0).collect();
        let s = Semiorder::new(rho).map_err(|_| Error::NotASemiorder)?;
        for a in 0..n {
            for b in 0..n {
                if m.greater(order[a], order[b]) != s.is_greater(a, b) {
                    return Err(Error::NotASemiorder);
                }
            }
        }
        Ok((s, order))
    }

    pub fn level_profile(&self) -> Result<LevelProfile> {
        if self.is_empty() {
            return Err(Error::EmptySemiorder);
        }
        let n = self.len();
        let mut level_of = vec![0usize; n];
        for j in 0..n {
            // Elements above j form the prefix 0..up; their levels are
            // nondecreasing, so the last one is the deepest.
            let up = self.up_count(j);
            level_of[j] = if up == 0 { 1 } else { level_of[up - 1] + 1 };
        }
        let levels = *level_of.last().unwrap();
        let mut sizes = vec![0usize; levels];
        for &l in &level_of {
            sizes[l - 1] += 1;
        }
        Ok(LevelProfile {
            level_of,
            sizes,
            length: levels - 1,
        })
    }

    /// Edges in a longest chain.
    pub fn length(&self) -> Result<usize> {
        self.level_profile().map(|p| p.length)
    }

    /// Levels carrying a bad element, in increasing order.
    ///
    /// An element is bad when it is on the first level or below every element
    /// of the level above, and it is on the last level or above no element of
    /// the level below.
    pub fn bad_elements(&self) -> Result<Vec<BadElement>> {
        let profile = self.level_profile()?;
        let last = profile.levels();
        let mut out = Vec::new();
        for level in 1..=last {
            let found = profile.elements_on(level).find(|&e| {
                let under_all_above = level == 1
                    || profile
                        .elements_on(level - 1)
                        .all(|a| self.is_greater(a, e));
                let over_none_below = level == last
                    || profile
                        .elements_on(level + 1)
                        .all(|b| !self.is_greater(e, b));
                under_all_above && over_none_below
            });
            if let Some(element) = found {
                out.push(BadElement { level, element });
            }
        }
        Ok(out)
    }

    /// Induced semiorder on `elements`, which must be strictly increasing.
    pub fn induced(&self, elements: &[usize]) -> Semiorder {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let n = self.len();
        let rho = elements
            .iter()
            .map(|&i| {
                let first_below = n - self.rho[i];
                elements.len() - elements.partition_point(|&j| j < first_below)
            })
            .collect();
        Semiorder::from_rho_unchecked(rho)
    }

    /// Splits off the rightmost first-level element together with everything
    /// reachable from it level by level.
    ///
    /// Starting from `{a}` for the rightmost top element `a`, each next set is
    /// the elements on the following level below some member of the current
    /// set. The union of these sets minus `a` induces `below`; the remaining
    /// elements induce `rest`.
    pub fn split(&self) -> Result<Split> {
        let profile = self.level_profile()?;
        let pivot = profile.elements_on(1).end - 1;
        let mut in_tree = vec![false; self.len()];
        in_tree[pivot] = true;
        let mut frontier = vec![pivot];
        for level in 2..=profile.levels() {
            frontier = profile
                .elements_on(level)
                .filter(|&e| frontier.iter().any(|&t| self.is_greater(t, e)))
                .collect();
            if frontier.is_empty() {
                break;
            }
            for &e in &frontier {
                in_tree[e] = true;
            }
        }
        let rest: Vec<usize> = (0..self.len()).filter(|&e| !in_tree[e]).collect();
        let below: Vec<usize> = (0..self.len())
            .filter(|&e| in_tree[e] && e != pivot)
            .collect();
        Ok(Split {
            rest: self.induced(&rest),
            below: self.induced(&below),
        })
    }

    /// Inverse of [`Semiorder::split`].
    ///
    /// A new top element is placed above all of `below`, and the result is
    /// merged level by level with `rest`: a level-`p` element of `rest` is above
    /// the pivot side's levels `p + 1` and deeper, and a level-`p` element on the
    /// pivot side is above `rest`'s levels `p + 2` and deeper.
    pub fn join(rest: &Semiorder, below: &Semiorder) -> Semiorder {
        let mut pivot_rho = Vec::with_capacity(below.len() + 1);
        pivot_rho.push(below.len());
        pivot_rho.extend_from_slice(below.rho());
        let pivot_side = Semiorder::from_rho_unchecked(pivot_rho);
        if rest.is_empty() {
            return pivot_side;
        }

        let rest_levels = rest.level_profile().expect("nonempty").level_of;
        let pivot_levels = pivot_side.level_profile().expect("nonempty").level_of;
        let t = rest.len();
        let n = t + pivot_side.len();
        let m = ComparabilityMatrix::from_fn(n, |i, j| match (i < t, j < t) {
            (true, true) => rest.is_greater(i, j),
            (false, false) => pivot_side.is_greater(i - t, j - t),
            (true, false) => pivot_levels[j - t] > rest_levels[i],
            (false, true) => rest_levels[j] >= pivot_levels[i - t] + 2,
        });
        Semiorder::from_relation(&m).expect("joining two semiorders yields a semiorder")
    }

    /// Collapses each class of equivalent elements to a single element.
    pub fn contraction(&self) -> Result<Contraction> {
        if self.is_empty() {
            return Err(Error::EmptySemiorder);
        }
        // Equivalent elements share both the down-set (a suffix of length r)
        // and the up-set (a prefix); classes are contiguous.
        let key = |i: usize| (self.rho[i], self.up_count(i));
        let mut classes: Vec<Range<usize>> = Vec::new();
        let mut start = 0;
        for i in 1..=self.len() {
            if i == self.len() || key(i) != key(start) {
                classes.push(start..i);
                start = i;
            }
        }
        let reps: Vec<usize> = classes.iter().map(|c| c.start).collect();
        Ok(Contraction {
            seed: self.induced(&reps),
            multiplicities: classes.iter().map(|c| c.len()).collect(),
            classes,
        })
    }

    /// Replaces each seed element by `multiplicities[i]` equivalent copies.
    pub fn expand(seed: &Semiorder, multiplicities: &[usize]) -> Result<Semiorder> {
        if multiplicities.len() != seed.len() {
            return Err(Error::InvalidParameters(format!(
                "{} multiplicities for a {}-element seed",
                multiplicities.len(),
                seed.len()
            )));
        }
        if let Some(pos) = multiplicities.iter().position(|&m| m == 0) {
            return Err(Error::InvalidParameters(format!(
                "multiplicity {} is zero",
                pos + 1
            )));
        }
        let k = seed.len();
        let mut rho = Vec::with_capacity(multiplicities.iter().sum());
        for (i, &mult) in multiplicities.iter().enumerate() {
            let below: usize = multiplicities[k - seed.rho[i]..].iter().sum();
            rho.extend(std::iter::repeat_n(below, mult));
        }
        Ok(Semiorder::from_rho_unchecked(rho))
    }
}

impl fmt::Display for Semiorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rho.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Semiorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Semiorder({self})")
    }
}

impl FromStr for Semiorder {
    type Err = Error;

    /// Comma-separated decimal integers without spaces; `""` is the empty semiorder.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Semiorder::empty());
        }
        let v = s
            .split(',')
            .map(|t| {
                t.parse::<i64>().map_err(|e| Error::Parse {
                    what: "vector",
                    detail: format!("{t:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Semiorder::from_vector(&v)
    }
}
