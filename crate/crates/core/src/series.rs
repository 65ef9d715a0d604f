//! Exact integer polynomials and truncated power series.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntegerPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiplication by `x`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        IntegerPolynomial { coeffs }
    }
}

impl fmt::Display for IntegerPolynomial {
    /// Ascending form such as `1 - 3*x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    f.write_str("x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerPolynomial({self})")
    }
}

/// Power series truncated after the coefficient of `x^order`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntegerSeries {
    coeffs: Vec<BigInt>,
}

impl IntegerSeries {
    /// Takes exactly `order + 1` coefficients, padding with zeros.
    pub fn new(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        IntegerSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> BigInt) -> Self {
        IntegerSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// Expansion of `num / den` through `x^order`.
    ///
    /// The constant term of `den` must be `1` or `-1`, which keeps every
    /// coefficient integral.
    pub fn quotient(num: &IntegerPolynomial, den: &IntegerPolynomial, order: usize) -> Self {
        let d0 = den.coeff(0);
        assert!(
            d0.abs().is_one(),
            "denominator constant term must be a unit, got {d0}"
        );
        let dens = den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = num.coeff(n);
            for (k, dk) in dens.iter().enumerate().skip(1).take(n) {
                acc -= dk * &out[n - k];
            }
            let (q, r) = acc.div_rem(&d0);
            debug_assert!(r.is_zero());
            out.push(q);
        }
        IntegerSeries { coeffs: out }
    }
}

impl fmt::Display for IntegerSeries {
    /// Comma-separated coefficients.
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

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &IntegerSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn display() {
        assert_eq!(
            IntegerPolynomial::from_i64(&[1, -3, 1]).to_string(),
            "1 - 3*x + x^2"
        );
        assert_eq!(IntegerPolynomial::from_i64(&[1, -1]).to_string(), "1 - x");
        assert_eq!(
            IntegerPolynomial::from_i64(&[0, -2, 0, 5]).to_string(),
            "-2*x + 5*x^3"
        );
        assert_eq!(IntegerPolynomial::zero().to_string(), "0");
        assert_eq!(IntegerPolynomial::from_i64(&[1, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn geometric_quotient() {
        let s = IntegerSeries::quotient(
            &IntegerPolynomial::one(),
            &IntegerPolynomial::from_i64(&[1, -1]),
            4,
        );
        assert_eq!(ints(&s), vec![1, 1, 1, 1, 1]);
        assert_eq!(s.to_string(), "1,1,1,1,1");
    }

    #[test]
    fn quotient_times_denominator_recovers_numerator() {
        let num = IntegerPolynomial::from_i64(&[1, -3, 1]);
        let den = IntegerPolynomial::from_i64(&[1, -4, 3]);
        let q = IntegerSeries::quotient(&num, &den, 10);
        let back = IntegerPolynomial::new(q.coeffs().to_vec()).mul(&den);
        for k in 0..=10 {
            assert_eq!(back.coeff(k), num.coeff(k), "x^{k}");
        }
    }

    #[test]
    fn arithmetic() {
        let a = IntegerPolynomial::from_i64(&[1, -1]);
        assert_eq!(a.mul(&a), IntegerPolynomial::from_i64(&[1, -2, 1]));
        assert_eq!(a.shift(), IntegerPolynomial::from_i64(&[0, 1, -1]));
        assert!(a.sub(&a).is_zero());
        assert_eq!(
            IntegerPolynomial::monomial(2),
            IntegerPolynomial::from_i64(&[0, 0, 1])
        );
    }
}
