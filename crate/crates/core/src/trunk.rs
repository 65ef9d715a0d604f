//! Trunk trees of length-at-most-one semiorders.
//!
//! Given a semiorder `S` of length at most one with `m` upper elements
//! `s_1, ..., s_m` and a permutation `sigma` of `1..=m`, the upper elements are
//! stacked into a chain (the trunk) in the order `s_sigma(1)` on top down to
//! `s_sigma(m)`. Each lower element covered by `s_1, ..., s_t` hangs as a leaf
//! from the lowest of those on the trunk. The resulting shape is recorded as
//! the number of leaves at each trunk position.
//!
//! Leaves can only land on right-to-left minima of `sigma`, and when the
//! upper elements have distinct down-set sizes the shape determines the
//! minima. The minima sets are in bijection with Dyck paths through their
//! peaks, so there are `C_m` trunk trees, `N(m, k)` of them with `k` minima.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::semiorder::Semiorder;
use crate::tree::{DyckPath, Step};
use crate::unlabeled::{binomial, catalan};

/// Upper bound on `m` for the exhaustive sweep over `S_m`.
pub const MAX_TRUNK: usize = 10;

pub fn check_permutation(sigma: &[usize]) -> Result<()> {
    let mut seen = vec![false; sigma.len() + 1];
    for (i, &v) in sigma.iter().enumerate() {
        if v == 0 || v > sigma.len() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotAPermutation(i + 1));
        }
    }
    Ok(())
}

/// All permutations of `1..=m` in lexicographic order.
pub fn permutations(m: usize) -> Permutations {
    Permutations {
        next: Some((1..=m).collect()),
    }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut p = cur.clone();
        if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            self.next = Some(p);
        }
        Some(cur)
    }
}

/// Positions and values of the right-to-left minima, `(a_i, b_i)` for
/// `i = 1..=k`, both 1-based.
///
/// Valid sets have `a_1 < ... < a_k = m`, `1 = b_1 < ... < b_k` and
/// `b_(i+1) <= a_i + 1`; these are exactly the sets arising from
/// permutations of `1..=m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RtlmSet {
    m: usize,
    pairs: Vec<(usize, usize)>,
}

impl RtlmSet {
    pub fn new(m: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let bad = |why: String| Err(Error::InvalidRtlmSet(why));
        if m == 0 {
            return if pairs.is_empty() {
                Ok(RtlmSet { m, pairs })
            } else {
                bad("pairs given for m = 0".into())
            };
        }
        let (Some(first), Some(last)) = (pairs.first(), pairs.last()) else {
            return bad("no pairs".into());
        };
        if first.1 != 1 {
            return bad(format!("first value is {}, not 1", first.1));
        }
        if last.0 != m {
            return bad(format!("last position is {}, not {m}", last.0));
        }
        for w in pairs.windows(2) {
            let ((a0, b0), (a1, b1)) = (w[0], w[1]);
            if a0 == 0 || a0 >= a1 || b0 >= b1 {
                return bad(format!("({a0},{b0}) then ({a1},{b1}) is not increasing"));
            }
            if b1 > a0 + 1 {
                return bad(format!("value {b1} needs more than {a0} earlier entries"));
            }
        }
        if last.1 > m {
            return bad(format!("value {} exceeds {m}", last.1));
        }
        Ok(RtlmSet { m, pairs })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl fmt::Display for RtlmSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{b})")?;
        }
        f.write_str("}")
    }
}

pub fn rtl_minima(sigma: &[usize]) -> Result<RtlmSet> {
    check_permutation(sigma)?;
    let mut pairs = Vec::new();
    let mut min = usize::MAX;
    for (i, &v) in sigma.iter().enumerate().rev() {
        if v < min {
            min = v;
            pairs.push((i + 1, v));
        }
    }
    pairs.reverse();
    Ok(RtlmSet {
        m: sigma.len(),
        pairs,
    })
}

/// Leaf counts per trunk position, top of the trunk first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TrunkTree {
    leaves: Vec<usize>,
}

impl TrunkTree {
    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    pub fn trunk_len(&self) -> usize {
        self.leaves.len()
    }

    pub fn leaf_total(&self) -> usize {
        self.leaves.iter().sum()
    }
}

impl fmt::Display for TrunkTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.leaves.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Number of upper elements, failing unless the length is at most one.
fn upper_count(s: &Semiorder) -> Result<usize> {
    let p = s.level_profile()?;
    if p.length > 1 {
        return Err(Error::LengthTooLarge(p.length));
    }
    Ok(p.sizes[0])
}

pub fn trunk_tree(s: &Semiorder, sigma: &[usize]) -> Result<TrunkTree> {
    let m = upper_count(s)?;
    check_permutation(sigma)?;
    if sigma.len() != m {
        return Err(Error::NotAPermutation(sigma.len().min(m) + 1));
    }
    let mut position = vec![0; m + 1];
    for (p, &v) in sigma.iter().enumerate() {
        position[v] = p;
    }
    // lowest[t]: trunk position of the lowest among s_1..s_t.
    let mut lowest = vec![0; m + 1];
    for t in 1..=m {
        lowest[t] = lowest[t - 1].max(position[t]);
    }
    let mut leaves = vec![0; m];
    for e in m..s.len() {
        leaves[lowest[s.up_count(e)]] += 1;
    }
    Ok(TrunkTree { leaves })
}

/// The same tree read off the minima: position `a_i` carries
/// `r_(b_i) - r_(b_(i+1))` leaves, with `r_(b_(k+1)) = 0`.
pub fn trunk_tree_from_minima(s: &Semiorder, minima: &RtlmSet) -> Result<TrunkTree> {
    let m = upper_count(s)?;
    if minima.m != m {
        return Err(Error::InvalidRtlmSet(format!(
            "minima over {} positions for {m} upper elements",
            minima.m
        )));
    }
    let r = s.rho();
    let mut leaves = vec![0; m];
    for (i, &(a, b)) in minima.pairs.iter().enumerate() {
        let next = minima.pairs.get(i + 1).map_or(0, |&(_, b1)| r[b1 - 1]);
        leaves[a - 1] = r[b - 1] - next;
    }
    Ok(TrunkTree { leaves })
}

/// Walk up `a_1`, down `b_2 - b_1`, up `a_2 - a_1`, ..., down `m + 1 - b_k`.
pub fn rtlm_to_dyck(r: &RtlmSet) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * r.m);
    let mut prev_a = 0;
    for (i, &(a, b)) in r.pairs.iter().enumerate() {
        let next_b = r.pairs.get(i + 1).map_or(r.m + 1, |p| p.1);
        steps.extend(std::iter::repeat_n(Step::Up, a - prev_a));
        steps.extend(std::iter::repeat_n(Step::Down, next_b - b));
        prev_a = a;
    }
    DyckPath::new(steps).expect("valid minima give a Dyck path")
}

/// Peak coordinates: the index of the peak's up step among all up steps and
/// of its down step among all down steps.
pub fn dyck_to_rtlm(d: &DyckPath) -> Result<RtlmSet> {
    let steps = d.steps();
    let mut ups = 0;
    let mut downs = 0;
    let mut pairs = Vec::new();
    for (i, s) in steps.iter().enumerate() {
        match s {
            Step::Up => ups += 1,
            Step::Down => {
                downs += 1;
                if i > 0 && steps[i - 1] == Step::Up {
                    pairs.push((ups, downs));
                }
            }
        }
    }
    RtlmSet::new(d.semilength(), pairs)
}

pub fn narayana(m: usize, k: usize) -> BigUint {
    if m == 0 || k == 0 || k > m {
        return BigUint::from(u32::from(m == 0 && k == 0));
    }
    binomial(m, k) * binomial(m, k - 1) / BigUint::from(m)
}

/// Distinct trunk trees over all of `S_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrunkCount {
    pub trees: BTreeSet<TrunkTree>,
    /// Whether the upper elements have pairwise distinct down-set sizes, the
    /// condition under which the count is `C_m`.
    pub hypothesis_holds: bool,
    pub upper: usize,
}

impl TrunkCount {
    pub fn count(&self) -> usize {
        self.trees.len()
    }

    pub fn expected(&self) -> BigUint {
        catalan(self.upper)
    }
}

pub fn count_trunk_trees(s: &Semiorder) -> Result<TrunkCount> {
    let m = upper_count(s)?;
    if m > MAX_TRUNK {
        return Err(Error::BoundExceeded {
            n: m,
            bound: MAX_TRUNK,
        });
    }
    let r = s.rho();
    let hypothesis_holds = r[..m].windows(2).all(|w| w[0] > w[1]);
    let trees = permutations(m)
        .map(|sigma| trunk_tree(s, &sigma))
        .collect::<Result<BTreeSet<_>>>()?;
    Ok(TrunkCount {
        trees,
        hypothesis_holds,
        upper: m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn twelve() -> Semiorder {
        "7,5,4,2,1,0,0,0,0,0,0,0".parse().unwrap()
    }

    #[test]
    fn minima_examples() {
        let r = rtl_minima(&[1, 5, 3, 2, 4]).unwrap();
        assert_eq!(r.pairs(), &[(1, 1), (4, 2), (5, 4)]);
        let r = rtl_minima(&[2, 5, 1, 3, 6, 4, 7]).unwrap();
        assert_eq!(r.pairs(), &[(3, 1), (4, 3), (6, 4), (7, 7)]);
        assert_eq!(r.to_string(), "{(3,1),(4,3),(6,4),(7,7)}");
        let id = rtl_minima(&[1, 2, 3, 4]).unwrap();
        assert_eq!(id.len(), 4);
        assert_eq!(rtl_minima(&[1, 1]), Err(Error::NotAPermutation(2)));
        assert_eq!(rtl_minima(&[0]), Err(Error::NotAPermutation(1)));
    }

    #[test]
    fn twelve_element_example() {
        let s = twelve();
        let sigma = [1, 5, 3, 2, 4];
        let t = trunk_tree(&s, &sigma).unwrap();
        assert_eq!(t.leaves(), &[2, 0, 0, 3, 2]);
        assert_eq!(t.leaf_total(), 7);
        let r = rtl_minima(&sigma).unwrap();
        assert_eq!(trunk_tree_from_minima(&s, &r).unwrap(), t);
    }

    #[test]
    fn caterpillar() {
        for m in 1..6 {
            let mut rho: Vec<usize> = (1..=m).rev().collect();
            rho.resize(2 * m, 0);
            let s = Semiorder::new(rho).unwrap();
            let id: Vec<usize> = (1..=m).collect();
            assert_eq!(trunk_tree(&s, &id).unwrap().leaves(), vec![1; m].as_slice());
        }
    }

    #[test]
    fn trunk_errors() {
        assert_eq!(
            trunk_tree(&Semiorder::chain(3), &[1]),
            Err(Error::LengthTooLarge(2))
        );
        assert!(trunk_tree(&twelve(), &[1, 2, 3]).is_err());
        assert_eq!(
            trunk_tree(&Semiorder::empty(), &[]),
            Err(Error::EmptySemiorder)
        );
    }

    #[test]
    fn peaks_example() {
        let r = RtlmSet::new(7, vec![(3, 1), (4, 3), (6, 4), (7, 7)]).unwrap();
        let d = rtlm_to_dyck(&r);
        assert_eq!(d.to_string(), "UUUDDUDUUDDDUD");
        assert_eq!(d.peaks().len(), 4);
        assert_eq!(dyck_to_rtlm(&d).unwrap(), r);
        let one = RtlmSet::new(4, vec![(4, 1)]).unwrap();
        assert_eq!(rtlm_to_dyck(&one).to_string(), "UUUUDDDD");
    }

    #[test]
    fn rtlm_validation() {
        assert!(RtlmSet::new(3, vec![(3, 2)]).is_err());
        assert!(RtlmSet::new(3, vec![(2, 1)]).is_err());
        assert!(RtlmSet::new(3, vec![(1, 1), (3, 3)]).is_err());
        assert!(RtlmSet::new(3, vec![(2, 1), (3, 3)]).is_ok());
        assert!(RtlmSet::new(3, vec![(2, 1), (2, 2), (3, 3)]).is_err());
        assert!(RtlmSet::new(0, vec![]).is_ok());
        assert!(RtlmSet::new(2, vec![]).is_err());
    }

    #[test]
    fn narayana_values() {
        assert_eq!(narayana(3, 2), BigUint::from(3u32));
        for m in 1..=12 {
            let total: BigUint = (1..=m).map(|k| narayana(m, k)).sum();
            assert_eq!(total, catalan(m));
        }
    }

    #[test]
    fn permutation_order() {
        let all: Vec<Vec<usize>> = permutations(3).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![1, 2, 3]);
        assert_eq!(all[5], vec![3, 2, 1]);
        assert_eq!(permutations(0).count(), 1);
    }

    #[test]
    fn catalan_many_trunk_trees() {
        let c = count_trunk_trees(&twelve()).unwrap();
        assert!(c.hypothesis_holds);
        assert_eq!(c.count(), 42);
        assert_eq!(c.expected().to_usize(), Some(42));
    }

    #[test]
    fn repeated_down_sets_collapse() {
        let c = count_trunk_trees(&"2,2,0,0".parse().unwrap()).unwrap();
        assert!(!c.hypothesis_holds);
        assert_eq!(c.count(), 1);
    }
}
