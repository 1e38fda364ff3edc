//! Integer-coefficient polynomials in the formal variable `q`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

/// A polynomial in `q` with arbitrary-precision integer coefficients, stored
/// from degree 0 with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        QPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `q^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        QPolynomial { coeffs }
    }

    /// `1 + q + ... + q^{j-1}` (`j` terms; the empty sum for `j = 0`).
    pub fn bracket(j: usize) -> Self {
        QPolynomial {
            coeffs: vec![BigInt::one(); j],
        }
    }

    /// `1 + q + ... + q^j` (`j + 1` terms), the bracket as printed in the
    /// source text; kept for the convention adjudication.
    pub fn bracket_inclusive(j: usize) -> Self {
        QPolynomial {
            coeffs: vec![BigInt::one(); j + 1],
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Multiplies by `q^t`.
    pub fn shift_up(&self, t: usize) -> QPolynomial {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); t];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Divides by `q^t` exactly; `None` when some low coefficient is nonzero.
    pub fn shift_down(&self, t: usize) -> Option<QPolynomial> {
        if self.is_zero() {
            return Some(QPolynomial::zero());
        }
        if self.coeffs.len() < t || self.coeffs[..t].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(QPolynomial {
            coeffs: self.coeffs[t..].to_vec(),
        })
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    pub fn eval_u64(&self, q: u64) -> BigInt {
        self.eval(&BigInt::from(q))
    }

    pub fn add_monomial(&mut self, d: usize) {
        if self.coeffs.len() <= d {
            self.coeffs.resize(d + 1, BigInt::zero());
        }
        self.coeffs[d] += 1;
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        *self = &*self + rhs;
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPolynomial {
    /// Canonical form, ascending in degree: `6 + 8*q + 7*q^2 + 3*q^3 + q^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, abs) = if c < &BigInt::zero() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let unit = abs.is_one();
            match (d, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}*q")?,
                (_, true) => write!(f, "q^{d}")?,
                (_, false) => write!(f, "{abs}*q^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_canonical_form() {
        let p = QPolynomial::from_i64_coeffs(&[6, 8, 7, 3, 1]);
        assert_eq!(p.to_string(), "6 + 8*q + 7*q^2 + 3*q^3 + q^4");
        assert_eq!(QPolynomial::zero().to_string(), "0");
        assert_eq!(QPolynomial::from_i64_coeffs(&[0, 1]).to_string(), "q");
        assert_eq!(
            QPolynomial::from_i64_coeffs(&[2, 0, -1]).to_string(),
            "2 - q^2"
        );
    }

    #[test]
    fn ring_operations() {
        let a = QPolynomial::from_i64_coeffs(&[1, 1]);
        let b = QPolynomial::from_i64_coeffs(&[1, 0, 1]);
        assert_eq!(&a * &b, QPolynomial::from_i64_coeffs(&[1, 1, 1, 1]));
        assert_eq!(&a + &b, QPolynomial::from_i64_coeffs(&[2, 1, 1]));
        assert_eq!(a.eval_u64(3), BigInt::from(4));
        assert_eq!(
            QPolynomial::bracket(3),
            QPolynomial::from_i64_coeffs(&[1, 1, 1])
        );
        assert_eq!(QPolynomial::bracket(0), QPolynomial::zero());
        assert_eq!(
            QPolynomial::bracket_inclusive(2),
            QPolynomial::from_i64_coeffs(&[1, 1, 1])
        );
    }

    #[test]
    fn shifts_are_exact() {
        let p = QPolynomial::from_i64_coeffs(&[0, 0, 2, 1]);
        assert_eq!(
            p.shift_down(2).unwrap(),
            QPolynomial::from_i64_coeffs(&[2, 1])
        );
        assert!(p.shift_down(3).is_none());
        assert_eq!(p.shift_down(2).unwrap().shift_up(2), p);
    }
}
