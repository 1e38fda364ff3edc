//! Exact field arithmetic for closure-membership reasoning: the rationals and
//! prime fields, plus the little linear algebra the crate needs (ranks of
//! small matrices, coordinate-subspace intersections).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub trait ExactField: Clone {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn embed(&self, x: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

/// The field of rational numbers with arbitrary precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rationals;

impl ExactField for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn embed(&self, x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// The prime field `F_p` with `p` small enough that products fit in `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 31), "prime out of supported range");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        base %= self.p;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl ExactField for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn embed(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a % self.p != 0, "division by zero");
        self.pow(*a, self.p - 2)
    }
    fn is_zero(&self, a: &u64) -> bool {
        a % self.p == 0
    }
}

/// Rank of a small dense matrix given as rows, by Gaussian elimination.
pub fn matrix_rank<F: ExactField>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut rows: Vec<Vec<F::Elem>> = rows.to_vec();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(&rows[rank][col]);
        for c in col..ncols {
            rows[rank][c] = field.mul(&rows[rank][c], &inv);
        }
        for r in 0..rows.len() {
            if r != rank && !field.is_zero(&rows[r][col]) {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = field.mul(&factor, &rows[rank][c]);
                    rows[r][c] = field.sub(&rows[r][c], &delta);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Dimension of `rowspace(rows) ∩ span{e_1, ..., e_t}` inside an `n`-space.
/// Equals `#rows_independent + t - rank(rows stacked on the first t unit
/// vectors)`.
pub fn intersection_with_prefix<F: ExactField>(
    field: &F,
    rows: &[Vec<F::Elem>],
    t: usize,
) -> usize {
    let n = rows.first().map_or(0, |r| r.len());
    let row_rank = matrix_rank(field, rows);
    let mut stacked = rows.to_vec();
    for i in 0..t.min(n) {
        let mut unit = vec![field.zero(); n];
        unit[i] = field.one();
        stacked.push(unit);
    }
    row_rank + t - matrix_rank(field, &stacked)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7);
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), 5);
        assert_eq!(f.sub(&1, &5), 3);
    }

    #[test]
    fn ranks_over_both_fields() {
        let q = Rationals;
        let rows = vec![
            vec![q.embed(1), q.embed(2), q.embed(3)],
            vec![q.embed(2), q.embed(4), q.embed(6)],
            vec![q.embed(0), q.embed(1), q.embed(0)],
        ];
        assert_eq!(matrix_rank(&q, &rows), 2);

        let f = PrimeField::new(5);
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6 % 5], vec![0, 1, 0]];
        assert_eq!(matrix_rank(&f, &rows), 2);
    }

    #[test]
    fn prefix_intersection() {
        let f = PrimeField::new(101);
        // span{e1 + e2, e3} meets span{e1, e2} in dimension 1.
        let rows = vec![vec![1, 1, 0], vec![0, 0, 1]];
        assert_eq!(intersection_with_prefix(&f, &rows, 2), 1);
        assert_eq!(intersection_with_prefix(&f, &rows, 3), 2);
        assert_eq!(intersection_with_prefix(&f, &rows, 1), 0);
    }
}
