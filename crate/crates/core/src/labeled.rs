//! Labeled semiorders.
//!
//! If `F(x)` is the ordinary generating function of an unlabeled semiorder
//! family closed under contraction and expansion, the exponential generating
//! function of its labeled members is `F(1 - e^{-x})`. On truncated series the
//! substitution is the signed Stirling transform
//! `g_n = sum_k f_k (-1)^(n-k) k! S(n, k)`.
//!
//! Labeled semiorders of length at most one are in bijection with ordered set
//! partitions: block `i` becomes the `i`-th class of the staircase seed
//! `(m, m-1, ..., 1, 0, ..., 0)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::relation::ComparabilityMatrix;
use crate::semiorder::Semiorder;
use crate::series::IntegerSeries;
use crate::unlabeled::{binomial, catalan, series_exact, series_leq};

/// Exponential generating function coefficients `g_0..g_N`; `g_n` is the
/// coefficient of `x^n / n!`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EgfSeries {
    coeffs: Vec<BigInt>,
}

impl EgfSeries {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }
}

impl fmt::Display for EgfSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Stirling numbers of the second kind, `table[n][k]` for `0 <= k <= n <= max_n`.
pub fn stirling2_table(max_n: usize) -> Vec<Vec<BigUint>> {
    let mut t: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
    t.push(vec![BigUint::one()]);
    for n in 1..=max_n {
        let prev = &t[n - 1];
        let row = (0..=n)
            .map(|k| {
                let stay = if k < n {
                    prev[k].clone() * k
                } else {
                    BigUint::zero()
                };
                let fresh = if k > 0 {
                    prev[k - 1].clone()
                } else {
                    BigUint::zero()
                };
                stay + fresh
            })
            .collect();
        t.push(row);
    }
    t
}

/// `F(1 - e^{-x})` through `x^order`.
///
/// # Panics
///
/// If `f` is truncated below `order`.
pub fn substitute_one_minus_exp(f: &IntegerSeries, order: usize) -> EgfSeries {
    assert!(
        f.order() >= order,
        "series truncated at {} < {order}",
        f.order()
    );
    let s = stirling2_table(order);
    let mut fact = vec![BigInt::one()];
    for k in 1..=order {
        let next = &fact[k - 1] * BigInt::from(k);
        fact.push(next);
    }
    let coeffs = (0..=order)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let term = f.coeff(k) * &fact[k] * BigInt::from(s[n][k].clone());
                    if (n - k) % 2 == 1 {
                        -term
                    } else {
                        term
                    }
                })
                .sum()
        })
        .collect();
    EgfSeries { coeffs }
}

/// Labeled counts `g_{<=h}(0..=order)`.
pub fn labeled_series_leq(h: usize, order: usize) -> EgfSeries {
    substitute_one_minus_exp(&series_leq(h, order), order)
}

/// Labeled counts of length exactly `h`, `g_h(0..=order)`.
pub fn labeled_series_exact(h: usize, order: usize) -> EgfSeries {
    substitute_one_minus_exp(&series_exact(h, order), order)
}

/// Labeled counts of all semiorders, from the Catalan generating function.
pub fn labeled_series_all(order: usize) -> EgfSeries {
    let f = IntegerSeries::from_fn(order, |k| BigInt::from(catalan(k)));
    substitute_one_minus_exp(&f, order)
}

fn nonnegative(v: &BigInt) -> BigUint {
    v.to_biguint().expect("labeled counts are nonnegative")
}

pub fn count_labeled_leq(n: usize, h: usize) -> BigUint {
    nonnegative(labeled_series_leq(h, n).coeff(n))
}

pub fn count_labeled_exact(n: usize, h: usize) -> BigUint {
    nonnegative(labeled_series_exact(h, n).coeff(n))
}

/// Ordered Bell (Fubini) numbers from `a(n) = sum_{k>=1} C(n, k) a(n - k)`.
pub fn ordered_bell(n: usize) -> BigUint {
    let mut a: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..=n {
        let v = (1..=m).map(|k| binomial(m, k) * &a[m - k]).sum();
        a.push(v);
    }
    a.pop().unwrap()
}

/// Blocks `(A_1, ..., A_k)` of `{1, ..., n}` in a fixed order.
///
/// Text form lists the blocks in order, each as braces around
/// comma-separated labels: `{1,4}{2,6,8}{7}{3,5}`. Labels within a block are
/// kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        let mut sorted = Vec::with_capacity(blocks.len());
        for (i, mut block) in blocks.into_iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {} is empty", i + 1)));
            }
            for &label in &block {
                if label == 0 || label > n {
                    return Err(Error::InvalidPartition(format!(
                        "label {label} outside 1..={n}"
                    )));
                }
                if std::mem::replace(&mut seen[label], true) {
                    return Err(Error::InvalidPartition(format!("label {label} repeated")));
                }
            }
            block.sort_unstable();
            sorted.push(block);
        }
        Ok(OrderedSetPartition { blocks: sorted })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Every ordered set partition of `{1, ..., n}`.
    pub fn all(n: usize) -> Vec<OrderedSetPartition> {
        fn go(
            remaining: u32,
            n: usize,
            cur: &mut Vec<Vec<usize>>,
            out: &mut Vec<OrderedSetPartition>,
        ) {
            if remaining == 0 {
                out.push(OrderedSetPartition {
                    blocks: cur.clone(),
                });
                return;
            }
            // Nonempty submasks of `remaining`.
            let mut sub = remaining;
            while sub != 0 {
                let block = (0..n)
                    .filter(|b| sub >> b & 1 == 1)
                    .map(|b| b + 1)
                    .collect();
                cur.push(block);
                go(remaining & !sub, n, cur, out);
                cur.pop();
                sub = (sub - 1) & remaining;
            }
        }
        assert!(n < 32, "ground set too large");
        let mut out = Vec::new();
        go(((1u64 << n) - 1) as u32, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            f.write_str("{")?;
            for (i, label) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{label}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedSetPartition({self})")
    }
}

impl FromStr for OrderedSetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |detail: String| Error::Parse {
            what: "ordered partition",
            detail,
        };
        let mut blocks = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('{')
                .ok_or_else(|| bad(format!("expected '{{' at {:?}", rest)))?;
            let close = body
                .find('}')
                .ok_or_else(|| bad("unclosed block".to_string()))?;
            let inner = &body[..close];
            let block = if inner.is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|t| t.parse::<usize>().map_err(|e| bad(format!("{t:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()?
            };
            blocks.push(block);
            rest = &body[close + 1..];
        }
        OrderedSetPartition::new(blocks)
    }
}

/// A semiorder on the labels `1..=n`, stored as its seed, the class sizes and
/// the labels of each class.
///
/// Classes follow the seed's canonical element order and labels within a
/// class are sorted, so equal labeled relations have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LabeledSemiorder {
    seed: Semiorder,
    blocks: Vec<Vec<usize>>,
}

impl LabeledSemiorder {
    /// `seed` must have no two equivalent elements and `blocks` must be a
    /// set partition of `1..=n` with one block per seed element.
    pub fn new(seed: Semiorder, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if seed.len() != blocks.len() {
            return Err(Error::InvalidPartition(format!(
                "{} blocks for a {}-element seed",
                blocks.len(),
                seed.len()
            )));
        }
        if !seed.is_empty() && seed.contraction()?.seed != seed {
            return Err(Error::InvalidPartition(format!(
                "{seed} has equivalent elements"
            )));
        }
        let blocks = OrderedSetPartition::new(blocks)?.blocks;
        Ok(LabeledSemiorder { seed, blocks })
    }

    /// Labeled semiorder whose element `i` carries label `i + 1`.
    pub fn from_relation(m: &ComparabilityMatrix) -> Result<Self> {
        let (s, order) = Semiorder::canonical_labeling(m)?;
        if s.is_empty() {
            return Ok(LabeledSemiorder {
                seed: s,
                blocks: Vec::new(),
            });
        }
        let c = s.contraction()?;
        let blocks = c
            .classes
            .iter()
            .map(|range| {
                let mut b: Vec<usize> = range.clone().map(|i| order[i] + 1).collect();
                b.sort_unstable();
                b
            })
            .collect();
        Ok(LabeledSemiorder {
            seed: c.seed,
            blocks,
        })
    }

    pub fn seed(&self) -> &Semiorder {
        &self.seed
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The underlying unlabeled semiorder.
    pub fn semiorder(&self) -> Semiorder {
        Semiorder::expand(&self.seed, &self.multiplicities()).expect("validated")
    }

    /// Relation on labels; row and column `label - 1`.
    pub fn relation(&self) -> ComparabilityMatrix {
        let mut class_of = vec![0; self.len()];
        for (c, block) in self.blocks.iter().enumerate() {
            for &label in block {
                class_of[label - 1] = c;
            }
        }
        ComparabilityMatrix::from_fn(self.len(), |a, b| {
            self.seed.is_greater(class_of[a], class_of[b])
        })
    }
}

/// `(m, m-1, ..., 1, 0, ..., 0)` with `m = floor(k/2)` and `ceil(k/2)` zeros.
pub fn staircase_seed(k: usize) -> Semiorder {
    let m = k / 2;
    let mut rho: Vec<usize> = (1..=m).rev().collect();
    rho.resize(k, 0);
    Semiorder::new(rho).expect("staircase is canonical")
}

pub fn partition_to_labeled_semiorder(p: &OrderedSetPartition) -> LabeledSemiorder {
    LabeledSemiorder {
        seed: staircase_seed(p.blocks.len()),
        blocks: p.blocks.clone(),
    }
}

pub fn labeled_semiorder_to_partition(s: &LabeledSemiorder) -> Result<OrderedSetPartition> {
    if s.is_empty() {
        return Ok(OrderedSetPartition { blocks: Vec::new() });
    }
    let length = s.seed.length()?;
    if length > 1 {
        return Err(Error::LengthTooLarge(length));
    }
    if s.seed != staircase_seed(s.blocks.len()) {
        return Err(Error::InvalidPartition(format!(
            "seed {} is not a staircase",
            s.seed
        )));
    }
    Ok(OrderedSetPartition {
        blocks: s.blocks.clone(),
    })
}

/// Distinct label sets of the length-at-most-one labeled semiorders hit by
/// the partition map on `{1, ..., n}`, as relations.
pub fn partition_images(n: usize) -> BTreeSet<Vec<bool>> {
    OrderedSetPartition::all(n)
        .iter()
        .map(|p| {
            partition_to_labeled_semiorder(p)
                .relation()
                .cells()
                .to_vec()
        })
        .collect()
}
