use std::fmt;

/// Dense `n x n` "strictly greater" relation.
///
/// `greater(i, j)` reads as "element `i` is above element `j`". Elements are
/// 0-based. Nothing about the relation is enforced on construction; use
/// [`ComparabilityMatrix::is_strict_order`] when the input is untrusted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComparabilityMatrix {
    n: usize,
    cells: Vec<bool>,
}

impl ComparabilityMatrix {
    /// The empty relation on `n` elements.
    pub fn new(n: usize) -> Self {
        ComparabilityMatrix {
            n,
            cells: vec![false; n * n],
        }
    }

    pub fn from_fn(n: usize, mut greater: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::new(n);
        for i in 0..n {
            for j in 0..n {
                m.cells[i * n + j] = greater(i, j);
            }
        }
        m
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn greater(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.cells[i * self.n + j] = value;
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.greater(i, j) || self.greater(j, i)
    }

    /// Number of elements strictly below `i`.
    pub fn down_count(&self, i: usize) -> usize {
        (0..self.n).filter(|&j| self.greater(i, j)).count()
    }

    /// Number of elements strictly above `i`.
    pub fn up_count(&self, i: usize) -> usize {
        (0..self.n).filter(|&j| self.greater(j, i)).count()
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.n).all(|i| !self.greater(i, i))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| !(self.greater(i, j) && self.greater(j, i))))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                if !self.greater(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.greater(j, k) && !self.greater(i, k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_strict_order(&self) -> bool {
        self.is_irreflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    /// Warshall closure, in place.
    pub fn close_transitively(&mut self) {
        let n = self.n;
        for k in 0..n {
            for i in 0..n {
                if !self.greater(i, k) {
                    continue;
                }
                for j in 0..n {
                    if self.greater(k, j) {
                        self.set(i, j, true);
                    }
                }
            }
        }
    }

    /// Number of edges in a longest chain, or `None` for the empty relation.
    ///
    /// Requires an acyclic relation.
    pub fn longest_chain(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        // depth[i]: edges in the longest chain starting at i and going down.
        let mut depth: Vec<Option<usize>> = vec![None; self.n];
        fn visit(m: &ComparabilityMatrix, i: usize, depth: &mut [Option<usize>]) -> usize {
            if let Some(d) = depth[i] {
                return d;
            }
            let mut best = 0;
            for j in 0..m.n {
                if m.greater(i, j) {
                    best = best.max(1 + visit(m, j, depth));
                }
            }
            depth[i] = Some(best);
            best
        }
        (0..self.n).map(|i| visit(self, i, &mut depth)).max()
    }

    /// The relation obtained by renaming element `i` to `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut m = Self::new(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if self.greater(i, j) {
                    m.set(perm[i], perm[j], true);
                }
            }
        }
        m
    }

    /// Restriction to `elements`, renumbered in the given order.
    pub fn induced(&self, elements: &[usize]) -> Self {
        Self::from_fn(elements.len(), |a, b| {
            self.greater(elements[a], elements[b])
        })
    }

    pub(crate) fn cells(&self) -> &[bool] {
        &self.cells
    }
}

impl fmt::Debug for ComparabilityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComparabilityMatrix({})", self.n)?;
        for i in 0..self.n {
            let row: String = (0..self.n)
                .map(|j| if self.greater(i, j) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}
