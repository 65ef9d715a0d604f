//! Counting unlabeled semiorders by length.
//!
//! `f_{<=h}(n)` counts `n`-element semiorders of length at most `h` up to
//! isomorphism and `f_h(n)` those of length exactly `h`. Through the tree
//! bijection these are also counts of ordered trees of bounded height, so
//! several independent routes are available:
//!
//! * **convolution**: `f_{<=h}(n) = sum_t f_{<=h}(t) * f_{<=h-1}(n-1-t)`,
//!   from splitting off the rightmost top element;
//! * **alternating**: a linear recurrence of order `floor((h+2)/2)` whose
//!   coefficients are `(-1)^(k-1) * C(h+2-k, k)`;
//! * **series**: coefficients of `p_h(x) / p_{h+1}(x)` with `p_0 = 1`,
//!   `p_1 = 1 - x`, `p_{h+1} = p_h - x * p_{h-1}`;
//! * **trig**: a finite sum of `4^(n+1) sin^2 cos^(2n)` terms evaluated in
//!   high-precision floating point and rounded;
//! * **closed**: `2^(n-1)` for `h = 1` and `(3^(n-1) + 1) / 2` for `h = 3`.

use std::fmt;
use std::str::FromStr;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::{IntegerPolynomial, IntegerSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Convolution,
    Alternating,
    Series,
    Trig,
    Closed,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Convolution,
        Method::Alternating,
        Method::Series,
        Method::Trig,
        Method::Closed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Convolution => "convolution",
            Method::Alternating => "alternating",
            Method::Series => "series",
            Method::Trig => "trig",
            Method::Closed => "closed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "method",
                detail: s.to_string(),
            })
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// Three-parameter table `t(n, h, k)`: `(n+1)`-node ordered trees of height
/// `h + 1` with exactly `k` nodes at depth `h + 1`, equivalently `n`-element
/// semiorders of length `h` with `k` elements on the last level.
///
/// Built eagerly for `1 <= n <= max_n`, `0 <= h <= max_h`.
#[derive(Debug, Clone)]
pub struct CountTable {
    max_n: usize,
    max_h: usize,
    // cells[h][n][k], with unused n = 0 and k = 0 slots.
    cells: Vec<Vec<Vec<BigUint>>>,
}

impl CountTable {
    pub fn new(max_n: usize, max_h: usize) -> Self {
        let pascal = pascal(2 * max_n + 1);
        let mut cells: Vec<Vec<Vec<BigUint>>> = Vec::with_capacity(max_h + 1);
        let base = (0..=max_n)
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        if n >= 1 && k == n {
                            BigUint::one()
                        } else {
                            BigUint::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        cells.push(base);
        for h in 1..=max_h {
            let prev = &cells[h - 1];
            let layer = (0..=max_n)
                .map(|n| {
                    (0..=n)
                        .map(|k| {
                            if k == 0 {
                                return BigUint::zero();
                            }
                            (1..=n - k)
                                .map(|m| &pascal[m + k - 1][m - 1] * &prev[n - k][m])
                                .sum()
                        })
                        .collect()
                })
                .collect();
            cells.push(layer);
        }
        CountTable {
            max_n,
            max_h,
            cells,
        }
    }

    pub fn get(&self, n: usize, h: usize, k: usize) -> Result<&BigUint> {
        if n == 0 || k == 0 || k > n {
            return Err(Error::InvalidParameters(format!(
                "t(n, h, k) needs 1 <= k <= n, got n={n}, k={k}"
            )));
        }
        if n > self.max_n || h > self.max_h {
            return Err(Error::InvalidParameters(format!(
                "({n}, {h}) outside the table bounds ({}, {})",
                self.max_n, self.max_h
            )));
        }
        Ok(&self.cells[h][n][k])
    }
}

fn pascal(rows: usize) -> Vec<Vec<BigUint>> {
    let mut p: Vec<Vec<BigUint>> = Vec::with_capacity(rows);
    for n in 0..rows {
        let mut row = vec![BigUint::one(); n + 1];
        for k in 1..n {
            row[k] = &p[n - 1][k - 1] + &p[n - 1][k];
        }
        p.push(row);
    }
    p
}

/// Single value of `t(n, h, k)`.
pub fn t_fnk(n: usize, h: usize, k: usize) -> Result<BigUint> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::InvalidParameters(format!(
            "t(n, h, k) needs 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    CountTable::new(n, h).get(n, h, k).cloned()
}

/// `p_h(x)`.
pub fn p_polynomial(h: usize) -> IntegerPolynomial {
    let mut prev = IntegerPolynomial::one();
    if h == 0 {
        return prev;
    }
    let mut cur = IntegerPolynomial::from_i64(&[1, -1]);
    for _ in 1..h {
        let next = cur.sub(&prev.shift());
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Ordinary generating function of `f_{<=h}` through `x^order`.
pub fn series_leq(h: usize, order: usize) -> IntegerSeries {
    IntegerSeries::quotient(&p_polynomial(h), &p_polynomial(h + 1), order)
}

/// Ordinary generating function of `f_h`, `x^(h+1) / (p_{h+1} p_h)`, through `x^order`.
pub fn series_exact(h: usize, order: usize) -> IntegerSeries {
    let den = p_polynomial(h + 1).mul(&p_polynomial(h));
    IntegerSeries::quotient(&IntegerPolynomial::monomial(h + 1), &den, order)
}

/// `f_{<=h}(n)` by the chosen method.
pub fn count_leq(n: usize, h: usize, method: Method) -> Result<BigUint> {
    match method {
        Method::Trig => trig_count(n, h),
        Method::Closed => closed_form(n, h),
        _ => Ok(count_leq_upto(n, h, method)?.pop().unwrap()),
    }
}

/// `f_{<=h}(0..=max_n)` by the chosen method.
pub fn count_leq_upto(max_n: usize, h: usize, method: Method) -> Result<Vec<BigUint>> {
    match method {
        Method::Convolution => Ok(convolution_rows(max_n, h).pop().unwrap()),
        Method::Alternating => Ok(alternating(max_n, h)),
        Method::Series => Ok(series_leq(h, max_n)
            .coeffs()
            .iter()
            .map(|c| c.to_biguint().expect("counts are nonnegative"))
            .collect()),
        Method::Trig => (0..=max_n).map(|n| trig_count(n, h)).collect(),
        Method::Closed => (0..=max_n).map(|n| closed_form(n, h)).collect(),
    }
}

/// Rows `f_{<=g}(0..=max_n)` for `g = 0..=h`.
fn convolution_rows(max_n: usize, h: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one(); max_n + 1]];
    for g in 1..=h {
        let lower = &rows[g - 1];
        let mut row: Vec<BigUint> = Vec::with_capacity(max_n + 1);
        row.push(BigUint::one());
        for n in 1..=max_n {
            let v = (0..n).map(|t| &row[t] * &lower[n - 1 - t]).sum();
            row.push(v);
        }
        rows.push(row);
    }
    rows
}

/// Linear recurrence with characteristic polynomial `p_{h+1}`.
///
/// It is exact once `n` exceeds `deg p_h = floor((h+1)/2)`. Below that every
/// semiorder has length at most `h` anyway, so the seeds are Catalan numbers.
fn alternating(max_n: usize, h: usize) -> Vec<BigUint> {
    let seeds = h.div_ceil(2).max(1);
    let order = (h + 2) / 2;
    let coeffs: Vec<BigInt> = (1..=order)
        .map(|k| {
            let c = BigInt::from(binomial(h + 2 - k, k));
            if k % 2 == 1 {
                c
            } else {
                -c
            }
        })
        .collect();
    let mut f: Vec<BigInt> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        if n <= seeds {
            f.push(BigInt::from(catalan(n)));
            continue;
        }
        let v = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * &f[n - 1 - i])
            .sum();
        f.push(v);
    }
    f.into_iter()
        .map(|v| v.to_biguint().expect("counts are nonnegative"))
        .collect()
}

fn closed_form(n: usize, h: usize) -> Result<BigUint> {
    if h != 1 && h != 3 {
        return Err(Error::ClosedFormUnavailable(h));
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    let e = (n - 1) as u32;
    Ok(match h {
        1 => BigUint::from(2u32).pow(e),
        _ => (BigUint::from(3u32).pow(e) + 1u32) / 2u32,
    })
}

/// `f_h(n)`, the number with length exactly `h`. Zero for `n = 0`.
pub fn count_exact(n: usize, h: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    if h == 0 {
        return BigUint::one();
    }
    let rows = convolution_rows(n, h);
    &rows[h][n] - &rows[h - 1][n]
}

/// All `f_h(n)` for `h = 0..n`; they sum to the Catalan number `C_n`.
pub fn length_distribution(n: usize) -> Vec<BigUint> {
    if n == 0 {
        return Vec::new();
    }
    let rows = convolution_rows(n, n - 1);
    (0..n)
        .map(|h| {
            if h == 0 {
                BigUint::one()
            } else {
                &rows[h][n] - &rows[h - 1][n]
            }
        })
        .collect()
}

/// A rounded high-precision evaluation of the trigonometric sum.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigEvaluation {
    pub nearest: BigUint,
    /// Distance between the evaluated sum and `nearest`.
    pub residue: f64,
}

/// Rounding residues above this are treated as a loss of precision.
pub const TRIG_RESIDUE_LIMIT: f64 = 0.25;

/// Evaluates `(h+3)^-1 * sum_{1 <= j <= (h+2)/2} 4^(n+1) sin^2(j pi/(h+3)) cos^(2n)(j pi/(h+3))`
/// for any `n`, without the small-`n` special cases.
///
/// The working precision grows with `n` so that the `4^(n+1)` scale never
/// eats the fractional part.
pub fn trig_formula(n: usize, h: usize) -> TrigEvaluation {
    let p = 2 * n + 192;
    let rm = RoundingMode::ToEven;
    let mut cc = Consts::new().expect("constant cache");
    let int = |v: usize| BigFloat::from_u64(v as u64, p);
    let pi = cc.pi(p, rm);
    let denom = int(h + 3);
    let mut sum = int(0);
    for j in 1..=(h + 2) / 2 {
        let theta = pi.mul(&int(j), p, rm).div(&denom, p, rm);
        let s = theta.sin(p, rm, &mut cc);
        let c = theta.cos(p, rm, &mut cc);
        let term = s.mul(&s, p, rm).mul(&c.powi(2 * n, p, rm), p, rm);
        sum = sum.add(&term, p, rm);
    }
    let value = sum
        .mul(&int(4).powi(n + 1, p, rm), p, rm)
        .div(&denom, p, rm);
    let nearest = value.round(0, rm);
    let residue = to_f64(&nearest.sub(&value, p, rm));
    TrigEvaluation {
        nearest: to_biguint(&nearest),
        residue: residue.abs(),
    }
}

fn trig_count(n: usize, h: usize) -> Result<BigUint> {
    if n <= 1 {
        return Ok(BigUint::one());
    }
    let eval = trig_formula(n, h);
    if eval.residue > TRIG_RESIDUE_LIMIT {
        return Err(Error::TrigPrecisionLoss {
            n,
            h,
            residue: eval.residue,
        });
    }
    Ok(eval.nearest)
}

fn to_f64(x: &BigFloat) -> f64 {
    match x.as_raw_parts() {
        Some((words, _, sign, exp, _)) if !x.is_zero() => {
            let top = *words.last().unwrap() as f64;
            let v = top * 2f64.powi(exp - 64);
            if sign == Sign::Neg {
                -v
            } else {
                v
            }
        }
        _ => 0.0,
    }
}

/// Integer-valued, nonnegative float to an exact integer.
fn to_biguint(x: &BigFloat) -> BigUint {
    if x.is_zero() {
        return BigUint::zero();
    }
    let (words, _, sign, exp, _) = x.as_raw_parts().expect("finite value");
    assert_eq!(sign, Sign::Pos, "negative count");
    let digits: Vec<u32> = words
        .iter()
        .flat_map(|&w| {
            // Word is u32 on 32-bit targets.
            #[allow(clippy::unnecessary_cast)]
            let w = w as u64;
            [w as u32, (w >> 32) as u32]
        })
        .collect();
    let mantissa = BigUint::from_slice(&digits);
    let shift = exp as i64 - 64 * words.len() as i64;
    if shift >= 0 {
        mantissa << shift as usize
    } else {
        mantissa >> (-shift) as usize
    }
}

/// Convenience for tests and callers holding small counts.
pub fn to_u128(v: &BigUint) -> Option<u128> {
    v.to_u128()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(v: BigUint) -> u64 {
        v.to_u64().unwrap()
    }

    #[test]
    fn t_base_and_small_values() {
        for n in 1..6 {
            for k in 1..=n {
                assert_eq!(small(t_fnk(n, 0, k).unwrap()), u64::from(n == k));
            }
        }
        // Six-node trees of height two by number of depth-two nodes.
        let row: Vec<u64> = (1..=5).map(|k| small(t_fnk(5, 1, k).unwrap())).collect();
        assert_eq!(row, vec![4, 6, 4, 1, 0]);
        assert!(t_fnk(0, 0, 0).is_err());
        assert!(t_fnk(3, 1, 4).is_err());
    }

    #[test]
    fn p_polynomials() {
        assert_eq!(p_polynomial(0).to_string(), "1");
        assert_eq!(p_polynomial(1).to_string(), "1 - x");
        assert_eq!(p_polynomial(2).to_string(), "1 - 2*x");
        assert_eq!(p_polynomial(3).to_string(), "1 - 3*x + x^2");
        assert_eq!(p_polynomial(5).to_string(), "1 - 5*x + 6*x^2 - x^3");
    }

    #[test]
    fn series_values() {
        assert_eq!(series_leq(1, 5).to_string(), "1,1,2,4,8,16");
        assert_eq!(series_leq(3, 6).to_string(), "1,1,2,5,14,41,122");
        let e = series_exact(3, 8);
        for n in 0..4 {
            assert!(e.coeff(n).is_zero());
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(small(count_leq(10, 1, Method::Closed).unwrap()), 512);
        let h3: Vec<u64> = (0..=6)
            .map(|n| small(count_leq(n, 3, Method::Closed).unwrap()))
            .collect();
        assert_eq!(h3, vec![1, 1, 2, 5, 14, 41, 122]);
        assert_eq!(
            count_leq(4, 2, Method::Closed),
            Err(Error::ClosedFormUnavailable(2))
        );
    }

    #[test]
    fn height_two_fibonacci_like() {
        for m in Method::ALL.into_iter().filter(|&m| m != Method::Closed) {
            let v: Vec<u64> = (1..=5)
                .map(|n| small(count_leq(n, 2, m).unwrap()))
                .collect();
            assert_eq!(v, vec![1, 2, 5, 13, 34], "{m}");
        }
    }

    #[test]
    fn bases_for_every_method() {
        for h in 0..6 {
            for m in Method::ALL.into_iter().filter(|&m| m != Method::Closed) {
                assert_eq!(small(count_leq(0, h, m).unwrap()), 1);
                assert_eq!(small(count_leq(1, h, m).unwrap()), 1);
            }
        }
    }

    #[test]
    fn exact_counts_for_three() {
        let v: Vec<u64> = (0..3).map(|h| small(count_exact(3, h))).collect();
        assert_eq!(v, vec![1, 3, 1]);
        assert!(count_exact(4, 4).is_zero());
        assert!(count_exact(0, 0).is_zero());
    }

    #[test]
    fn trig_formula_at_one_element() {
        for h in 0..=10 {
            let e = trig_formula(1, h);
            assert_eq!(small(e.nearest), 1, "h={h}");
            assert!(e.residue < 1e-30);
        }
    }

    #[test]
    fn two_seeds_are_not_enough_from_height_three() {
        // Starting the recurrence at n = 2 from f(0) = f(1) = 1 would give
        // 4 - 3 = 1 for two elements, but both 2-element semiorders qualify.
        assert_eq!(small(count_leq(2, 3, Method::Alternating).unwrap()), 2);
        for h in 0..12 {
            let a = count_leq_upto(25, h, Method::Alternating).unwrap();
            let c = count_leq_upto(25, h, Method::Convolution).unwrap();
            assert_eq!(a, c, "h={h}");
        }
    }

    #[test]
    fn trig_at_larger_sizes() {
        for (n, h) in [(120, 10), (200, 4), (64, 30)] {
            let t = count_leq(n, h, Method::Trig).unwrap();
            assert_eq!(t, count_leq(n, h, Method::Series).unwrap(), "n={n} h={h}");
        }
    }

    #[test]
    fn float_conversion() {
        let p = 128;
        let x = BigFloat::from_u64(123_456_789_012_345, p);
        assert_eq!(to_biguint(&x), BigUint::from(123_456_789_012_345u64));
        let half = BigFloat::from_u64(1, p).div(&BigFloat::from_u64(4, p), p, RoundingMode::ToEven);
        assert_eq!(to_f64(&half), 0.25);
        assert_eq!(to_f64(&half.neg()), -0.25);
    }

    #[test]
    fn method_names_roundtrip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("fast".parse::<Method>().is_err());
    }
}
