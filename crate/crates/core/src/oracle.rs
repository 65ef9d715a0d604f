//! Brute-force ground truth.
//!
//! Two independent generators: every canonical vector of a given size, and
//! every strict partial order on a tiny ground set (labeled, or reduced to
//! isomorphism classes by trying all relabelings). Semiorders are picked out
//! of the general posets purely by the forbidden induced patterns, and
//! lengths come from longest-path search on the relation, so nothing here
//! relies on the level machinery being tested.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::relation::ComparabilityMatrix;
use crate::semiorder::Semiorder;
use crate::trunk::permutations;

/// Largest `n` accepted by [`enumerate_semiorders`].
pub const MAX_VECTOR_N: usize = 14;
/// Largest `n` accepted by the general poset generators.
pub const MAX_POSET_N: usize = 5;

/// Canonical vectors of size `n` in lexicographic order.
pub fn enumerate_semiorders(n: usize) -> Result<SemiorderIter> {
    if n > MAX_VECTOR_N {
        return Err(Error::BoundExceeded {
            n,
            bound: MAX_VECTOR_N,
        });
    }
    Ok(enumerate_semiorders_unbounded(n))
}

/// [`enumerate_semiorders`] without the size guard.
pub fn enumerate_semiorders_unbounded(n: usize) -> SemiorderIter {
    SemiorderIter {
        next: Some(vec![0; n]),
    }
}

pub struct SemiorderIter {
    next: Option<Vec<usize>>,
}

impl Iterator for SemiorderIter {
    type Item = Semiorder;

    fn next(&mut self) -> Option<Semiorder> {
        let cur = self.next.take()?;
        let n = cur.len();
        // Bump the rightmost entry that can grow and zero everything after it.
        let bump = (0..n)
            .rev()
            .find(|&i| cur[i] < n - 1 - i && (i == 0 || cur[i] < cur[i - 1]));
        if let Some(i) = bump {
            let mut succ = cur.clone();
            succ[i] += 1;
            succ[i + 1..].fill(0);
            self.next = Some(succ);
        }
        Some(Semiorder::new(cur).expect("generator stays canonical"))
    }
}

/// A strict partial order on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GenericPoset {
    relation: ComparabilityMatrix,
}

impl GenericPoset {
    pub fn new(relation: ComparabilityMatrix) -> Result<Self> {
        if !relation.is_strict_order() {
            return Err(Error::NotAPartialOrder);
        }
        Ok(GenericPoset { relation })
    }

    pub fn relation(&self) -> &ComparabilityMatrix {
        &self.relation
    }

    pub fn len(&self) -> usize {
        self.relation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relation.is_empty()
    }

    /// Edges in a longest chain; `None` when empty.
    pub fn length(&self) -> Option<usize> {
        self.relation.longest_chain()
    }

    pub fn is_semiorder(&self) -> bool {
        !has_pattern(self, PatternKind::TwoPlusTwo) && !has_pattern(self, PatternKind::ThreePlusOne)
    }

    /// Smallest relabeled cell vector, a complete isomorphism invariant.
    pub fn canonical_form(&self) -> Vec<bool> {
        permutations(self.len())
            .map(|p| {
                let perm: Vec<usize> = p.iter().map(|v| v - 1).collect();
                self.relation.relabeled(&perm).cells().to_vec()
            })
            .min()
            .unwrap_or_default()
    }
}

impl From<&Semiorder> for GenericPoset {
    fn from(s: &Semiorder) -> Self {
        GenericPoset {
            relation: s.comparability(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternKind {
    /// Two disjoint 2-chains.
    TwoPlusTwo,
    /// A 3-chain and an incomparable point.
    ThreePlusOne,
}

/// Whether some four distinct elements induce the pattern exactly.
pub fn has_pattern(p: &GenericPoset, kind: PatternKind) -> bool {
    let m = &p.relation;
    let n = m.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    let mut degree = [0usize; 4];
                    let mut pairs = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if m.comparable(q[i], q[j]) {
                                degree[i] += 1;
                                degree[j] += 1;
                                pairs += 1;
                            }
                        }
                    }
                    // In a poset, three mutually comparable elements form a chain.
                    let hit = match kind {
                        PatternKind::TwoPlusTwo => pairs == 2 && degree.iter().all(|&d| d == 1),
                        PatternKind::ThreePlusOne => pairs == 3 && degree.contains(&0),
                    };
                    if hit {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Every strict partial order on `0..n`, labeled.
///
/// Built by inserting one element at a time: the newcomer goes above a
/// down-closed set `D` and below an up-closed set `U` with all of `D` already
/// below all of `U`. Removing the newest element recovers the smaller order,
/// so each order appears exactly once.
pub fn labeled_posets(n: usize) -> Result<Vec<ComparabilityMatrix>> {
    if n > MAX_POSET_N {
        return Err(Error::BoundExceeded {
            n,
            bound: MAX_POSET_N,
        });
    }
    let mut layer = vec![ComparabilityMatrix::new(0)];
    for k in 0..n {
        let mut next = Vec::new();
        for m in &layer {
            let below =
                |x: usize, mask: u32| (0..k).all(|y| !m.greater(x, y) || mask >> y & 1 == 1);
            let above =
                |x: usize, mask: u32| (0..k).all(|y| !m.greater(y, x) || mask >> y & 1 == 1);
            let members = |mask: u32| (0..k).filter(move |&x| mask >> x & 1 == 1);
            for down in 0u32..1 << k {
                if !members(down).all(|x| below(x, down)) {
                    continue;
                }
                for up in 0u32..1 << k {
                    if up & down != 0
                        || !members(up).all(|x| above(x, up))
                        || !members(down).all(|d| members(up).all(|u| m.greater(u, d)))
                    {
                        continue;
                    }
                    next.push(ComparabilityMatrix::from_fn(k + 1, |i, j| {
                        if i < k && j < k {
                            m.greater(i, j)
                        } else if i == k && j < k {
                            down >> j & 1 == 1
                        } else if j == k && i < k {
                            up >> i & 1 == 1
                        } else {
                            false
                        }
                    }));
                }
            }
        }
        layer = next;
    }
    Ok(layer)
}

/// One representative per isomorphism class of strict partial orders on `0..n`.
pub fn enumerate_posets(n: usize) -> Result<Vec<GenericPoset>> {
    let mut classes: BTreeMap<Vec<bool>, GenericPoset> = BTreeMap::new();
    for m in labeled_posets(n)? {
        let p = GenericPoset { relation: m };
        classes.entry(p.canonical_form()).or_insert(p);
    }
    Ok(classes.into_values().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// Canonical vectors.
    Vectors,
    /// Pattern-free isomorphism classes of general posets.
    Posets,
}

/// Number of semiorder isomorphism classes on `n` elements by length.
///
/// Empty for `n = 0`, which has no length.
pub fn oracle_counts(n: usize, route: Route) -> Result<BTreeMap<usize, u64>> {
    let mut counts = BTreeMap::new();
    let lengths: Vec<Option<usize>> = match route {
        Route::Vectors => enumerate_semiorders(n)?
            .map(|s| s.comparability().longest_chain())
            .collect(),
        Route::Posets => enumerate_posets(n)?
            .into_iter()
            .filter(GenericPoset::is_semiorder)
            .map(|p| p.length())
            .collect(),
    };
    for h in lengths.into_iter().flatten() {
        *counts.entry(h).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Number of semiorders on the labels `0..n` by length, from all labeled posets.
pub fn labeled_oracle_counts(n: usize) -> Result<BTreeMap<usize, u64>> {
    let mut counts = BTreeMap::new();
    for m in labeled_posets(n)? {
        let p = GenericPoset { relation: m };
        if let (true, Some(h)) = (p.is_semiorder(), p.length()) {
            *counts.entry(h).or_insert(0) += 1;
        }
    }
    Ok(counts)
}

/// Cell vectors of all labeled semiorders of length at most one on `0..n`.
pub fn labeled_short_semiorders(n: usize) -> Result<BTreeSet<Vec<bool>>> {
    Ok(labeled_posets(n)?
        .into_iter()
        .map(|relation| GenericPoset { relation })
        .filter(|p| p.is_semiorder() && p.length().unwrap_or(0) <= 1)
        .map(|p| p.relation.cells().to_vec())
        .collect())
}
