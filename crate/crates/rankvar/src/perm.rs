//! Partial permutations indexing Schubert varieties of partial flag varieties
//! `Fl(k_1, ..., k_m; n)`.
//!
//! A partial permutation is a list of `k_m` distinct values in `[1, n]` that
//! ascends except possibly at the block boundaries `k_1, ..., k_{m-1}`.  Entry
//! `i` carries a color `c_i` (the block it sits in) and a multi-index
//! `(s_1^i, ..., s_m^i)` with `s_j^i = #{u_l <= u_i : c_l <= j}`; both are
//! fixed at construction time and never change afterwards.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// The shape `(k_1, ..., k_m; n)` of a partial flag variety.
///
/// `k_m = n` is allowed so that the degenerate point variety `G(n, n)` (all
/// intervals singletons) stays in scope.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlagShape {
    n: usize,
    ks: Vec<usize>,
}

impl FlagShape {
    pub fn new(ks: Vec<usize>, n: usize) -> Result<Self> {
        if ks.is_empty() {
            return Err(Error::InvalidShape("no block sizes given".into()));
        }
        if n == 0 {
            return Err(Error::InvalidShape(
                "ambient dimension must be positive".into(),
            ));
        }
        let mut prev = 0;
        for &k in &ks {
            if k <= prev {
                return Err(Error::InvalidShape(format!(
                    "block boundaries must be strictly increasing, got {ks:?}"
                )));
            }
            prev = k;
        }
        if prev > n {
            return Err(Error::InvalidShape(format!("k_m = {prev} exceeds n = {n}")));
        }
        Ok(FlagShape { n, ks })
    }

    pub fn grassmannian(k: usize, n: usize) -> Result<Self> {
        FlagShape::new(vec![k], n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    /// Number of blocks `m`.
    pub fn levels(&self) -> usize {
        self.ks.len()
    }

    pub fn k_top(&self) -> usize {
        *self.ks.last().unwrap()
    }

    pub fn is_grassmannian(&self) -> bool {
        self.ks.len() == 1
    }

    /// Color of position `i` (1-based): the unique `l` with `k_{l-1} < i <= k_l`.
    pub fn color_of_position(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.k_top() {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.k_top(),
            });
        }
        Ok(self.ks.iter().position(|&k| i <= k).unwrap() + 1)
    }

    /// Sizes of the blocks `k_1, k_2 - k_1, ..., n - k_m`.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = Vec::with_capacity(self.ks.len() + 1);
        let mut prev = 0;
        for &k in &self.ks {
            sizes.push(k - prev);
            prev = k;
        }
        sizes.push(self.n - prev);
        sizes
    }

    /// Dimension of the flag variety: sum of products of distinct block sizes.
    pub fn dimension(&self) -> usize {
        let sizes = self.block_sizes();
        let mut dim = 0;
        for i in 0..sizes.len() {
            for j in i + 1..sizes.len() {
                dim += sizes[i] * sizes[j];
            }
        }
        dim
    }

    /// Number of T-fixed points, i.e. cosets of the shape.
    pub fn coset_count(&self) -> u128 {
        let mut count: u128 = 1;
        let mut remaining = self.n as u128;
        for b in self.block_sizes() {
            count *= binomial_u128(remaining, b as u128);
            remaining -= b as u128;
        }
        count
    }
}

fn binomial_u128(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A partial permutation with cached colors and multi-indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPermutation {
    shape: FlagShape,
    entries: Vec<usize>,
    colors: Vec<usize>,
    multi: Vec<Vec<usize>>,
}

impl PartialPermutation {
    /// Validates and builds a partial permutation for `shape`.
    pub fn new(shape: FlagShape, entries: Vec<usize>) -> Result<Self> {
        let k_top = shape.k_top();
        if entries.len() != k_top {
            return Err(Error::EntryCount {
                expected: k_top,
                got: entries.len(),
            });
        }
        let mut seen = vec![false; shape.n() + 1];
        for &e in &entries {
            if e == 0 || e > shape.n() {
                return Err(Error::EntryOutOfRange {
                    value: e,
                    n: shape.n(),
                });
            }
            if seen[e] {
                return Err(Error::DuplicateEntry { value: e });
            }
            seen[e] = true;
        }
        for pos in 1..k_top {
            let boundary = shape.ks().contains(&pos);
            if !boundary && entries[pos - 1] > entries[pos] {
                return Err(Error::MissingAscent { position: pos });
            }
        }
        let colors: Vec<usize> = (1..=k_top)
            .map(|i| shape.color_of_position(i).unwrap())
            .collect();
        let m = shape.levels();
        let multi = (0..k_top)
            .map(|i| {
                (1..=m)
                    .map(|j| {
                        entries
                            .iter()
                            .zip(&colors)
                            .filter(|&(&e, &c)| e <= entries[i] && c <= j)
                            .count()
                    })
                    .collect()
            })
            .collect();
        Ok(PartialPermutation {
            shape,
            entries,
            colors,
            multi,
        })
    }

    pub fn shape(&self) -> &FlagShape {
        &self.shape
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Color of entry `i` (1-based position).
    pub fn color(&self, i: usize) -> Result<usize> {
        self.check_index(i)?;
        Ok(self.colors[i - 1])
    }

    /// Multi-index `(s_1^i, ..., s_m^i)` of entry `i` (1-based position).
    pub fn multi_index(&self, i: usize) -> Result<&[usize]> {
        self.check_index(i)?;
        Ok(&self.multi[i - 1])
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.entries.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.entries.len(),
            });
        }
        Ok(())
    }

    /// Position (1-based) of a value, if present.
    pub fn position_of(&self, value: usize) -> Option<usize> {
        self.entries.iter().position(|&e| e == value).map(|p| p + 1)
    }

    /// Quotient Bruhat order via sorted-prefix dominance on every level.
    pub fn bruhat_leq(&self, other: &PartialPermutation) -> Result<bool> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch);
        }
        for &k in self.shape.ks() {
            let mut a: Vec<usize> = self.entries[..k].to_vec();
            let mut b: Vec<usize> = other.entries[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Truncation to the first `k_s` entries on the shape `(k_1, ..., k_s; n)`.
    pub fn truncate(&self, s: usize) -> Result<PartialPermutation> {
        let m = self.shape.levels();
        if s == 0 || s > m {
            return Err(Error::LevelOutOfRange {
                level: s,
                levels: m,
            });
        }
        let shape = FlagShape::new(self.shape.ks()[..s].to_vec(), self.shape.n())?;
        let entries = self.entries[..shape.k_top()].to_vec();
        PartialPermutation::new(shape, entries)
    }

    /// Image under the basis reversal `e_i -> e_{n+1-i}`, blocks re-sorted
    /// ascending.  An involution; identifies the opposite Schubert variety
    /// `X^v` with a standard one.
    pub fn reverse_basis(&self) -> PartialPermutation {
        let n = self.shape.n();
        let mut entries: Vec<usize> = self.entries.iter().map(|&e| n + 1 - e).collect();
        let mut start = 0;
        for &k in self.shape.ks() {
            entries[start..k].sort_unstable();
            start = k;
        }
        PartialPermutation::new(self.shape.clone(), entries).expect("reversal preserves validity")
    }

    /// Length of the coset, i.e. the dimension of the Schubert variety `X_u`:
    /// inversions among the entries plus, for every entry, the number of
    /// smaller values not used by the permutation.
    pub fn length(&self) -> usize {
        let mut used = vec![false; self.shape.n() + 1];
        for &e in &self.entries {
            used[e] = true;
        }
        let mut len = 0;
        for i in 0..self.entries.len() {
            for j in i + 1..self.entries.len() {
                if self.entries[i] > self.entries[j] {
                    len += 1;
                }
            }
            len += (1..self.entries[i]).filter(|&x| !used[x]).count();
        }
        len
    }

    /// Sorted value sets of the prefixes at each level, `S_1 ⊂ ... ⊂ S_m`.
    pub fn sorted_prefixes(&self) -> Vec<Vec<usize>> {
        self.shape
            .ks()
            .iter()
            .map(|&k| {
                let mut s = self.entries[..k].to_vec();
                s.sort_unstable();
                s
            })
            .collect()
    }

    /// Canonical (block-sorted) representative of the same coset.
    pub fn canonicalize(&self) -> PartialPermutation {
        let mut entries = self.entries.clone();
        let mut start = 0;
        for &k in self.shape.ks() {
            entries[start..k].sort_unstable();
            start = k;
        }
        PartialPermutation::new(self.shape.clone(), entries).expect("sorting preserves validity")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(ks: &[usize], n: usize) -> FlagShape {
        FlagShape::new(ks.to_vec(), n).unwrap()
    }

    fn pp(ks: &[usize], n: usize, entries: &[usize]) -> PartialPermutation {
        PartialPermutation::new(shape(ks, n), entries.to_vec()).unwrap()
    }

    #[test]
    fn seven_entry_example_is_valid() {
        let u = pp(&[3, 5, 7], 9, &[1, 4, 8, 3, 9, 2, 7]);
        assert_eq!(u.entries(), &[1, 4, 8, 3, 9, 2, 7]);
    }

    #[test]
    fn identity_coset_is_valid() {
        let u = pp(&[3], 8, &[1, 2, 3]);
        assert_eq!(u.length(), 0);
    }

    #[test]
    fn descent_inside_block_rejected() {
        let err = PartialPermutation::new(shape(&[2, 4], 7), vec![4, 6, 7, 2]).unwrap_err();
        assert_eq!(err, Error::MissingAscent { position: 3 });
    }

    #[test]
    fn duplicate_and_out_of_range_rejected() {
        assert_eq!(
            PartialPermutation::new(shape(&[2], 5), vec![3, 3]).unwrap_err(),
            Error::DuplicateEntry { value: 3 }
        );
        assert_eq!(
            PartialPermutation::new(shape(&[2], 5), vec![1, 6]).unwrap_err(),
            Error::EntryOutOfRange { value: 6, n: 5 }
        );
        assert_eq!(
            PartialPermutation::new(shape(&[2], 5), vec![1]).unwrap_err(),
            Error::EntryCount {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn exhaustive_validity_for_shape_2_4_in_7() {
        // Oracle: a sequence is valid iff its entries are distinct, in range,
        // and ascend at every position except possibly position 2.
        let sh = shape(&[2, 4], 7);
        let mut valid = 0;
        for a in 1..=7 {
            for b in 1..=7 {
                for c in 1..=7 {
                    for d in 1..=7 {
                        let seq = [a, b, c, d];
                        let distinct = (1..4).all(|i| !seq[i..].contains(&seq[i - 1]));
                        let ascends = a < b && c < d;
                        let expected = distinct && ascends;
                        let got = PartialPermutation::new(sh.clone(), seq.to_vec()).is_ok();
                        assert_eq!(got, expected, "sequence {seq:?}");
                        if got {
                            valid += 1;
                        }
                    }
                }
            }
        }
        // C(7,2) * C(5,2) pairs of ordered blocks with free interleaving:
        // choose 2 values for block one, 2 of the remaining 5 for block two.
        assert_eq!(valid, 21 * 10);
    }

    #[test]
    fn colors_match_worked_examples() {
        let u = pp(&[3, 5, 7], 9, &[1, 4, 8, 3, 9, 2, 7]);
        let colors: Vec<usize> = (1..=7).map(|i| u.color(i).unwrap()).collect();
        assert_eq!(colors, vec![1, 1, 1, 2, 2, 3, 3]);

        let u2 = pp(&[2, 4], 7, &[4, 6, 2, 7]);
        let colors2: Vec<usize> = (1..=4).map(|i| u2.color(i).unwrap()).collect();
        assert_eq!(colors2, vec![1, 1, 2, 2]);

        let g = pp(&[3], 8, &[4, 6, 8]);
        assert!((1..=3).all(|i| g.color(i).unwrap() == 1));

        assert_eq!(
            u.color(8),
            Err(Error::IndexOutOfRange { index: 8, bound: 7 })
        );
    }

    #[test]
    fn multi_indices_match_worked_examples() {
        let u = pp(&[3, 5, 7], 9, &[1, 4, 8, 3, 9, 2, 7]);
        let expected: [&[usize]; 7] = [
            &[1, 1, 1],
            &[2, 3, 4],
            &[3, 4, 6],
            &[1, 2, 3],
            &[3, 5, 7],
            &[1, 1, 2],
            &[2, 3, 5],
        ];
        for (i, want) in expected.iter().enumerate() {
            assert_eq!(u.multi_index(i + 1).unwrap(), *want);
        }

        let v = pp(&[2, 4], 7, &[4, 6, 2, 7]);
        assert_eq!(v.multi_index(4).unwrap(), &[2, 4]);

        // The position of the smallest entry of color 1 always gets (1,...,1).
        let i = (1..=7)
            .filter(|&i| u.color(i).unwrap() == 1)
            .min_by_key(|&i| u.entries()[i - 1])
            .unwrap();
        assert_eq!(u.multi_index(i).unwrap(), &[1, 1, 1]);
    }

    #[test]
    fn bruhat_examples() {
        let id = pp(&[3], 8, &[1, 2, 3]);
        let a = pp(&[3], 8, &[3, 4, 8]);
        let b = pp(&[3], 8, &[4, 6, 8]);
        assert!(id.bruhat_leq(&a).unwrap());
        assert!(id.bruhat_leq(&b).unwrap());
        assert!(a.bruhat_leq(&b).unwrap());
        assert!(!b.bruhat_leq(&a).unwrap());
        let other = pp(&[3], 9, &[3, 4, 8]);
        assert_eq!(a.bruhat_leq(&other), Err(Error::ShapeMismatch));
    }

    #[test]
    fn truncate_takes_block_prefixes() {
        let u = pp(&[3, 5, 7], 9, &[1, 4, 8, 3, 9, 2, 7]);
        let t2 = u.truncate(2).unwrap();
        assert_eq!(t2.shape().ks(), &[3, 5]);
        assert_eq!(t2.entries(), &[1, 4, 8, 3, 9]);
        assert_eq!(u.truncate(3).unwrap(), u);
        assert_eq!(
            u.truncate(4),
            Err(Error::LevelOutOfRange {
                level: 4,
                levels: 3
            })
        );

        let w = pp(&[2, 4], 7, &[4, 6, 2, 7]);
        let t1 = w.truncate(1).unwrap();
        assert_eq!(t1.entries(), &[4, 6]);
        // Colors agree with the original restricted to the prefix.
        for i in 1..=2 {
            assert_eq!(t1.color(i).unwrap(), w.color(i).unwrap());
        }
    }

    #[test]
    fn reverse_basis_examples() {
        let a = pp(&[3], 8, &[4, 6, 8]);
        assert_eq!(a.reverse_basis().entries(), &[1, 3, 5]);
        assert_eq!(a.reverse_basis().reverse_basis(), a);

        let b = pp(&[2, 4], 7, &[2, 7, 3, 5]);
        assert_eq!(b.reverse_basis().entries(), &[1, 6, 3, 5]);
        assert_eq!(b.reverse_basis().reverse_basis(), b);
    }

    #[test]
    fn length_counts_inversions_and_complement() {
        assert_eq!(pp(&[2, 4], 7, &[4, 6, 2, 7]).length(), 11);
        assert_eq!(pp(&[2, 3, 5], 8, &[4, 5, 6, 7, 8]).length(), 15);
        assert_eq!(pp(&[3], 8, &[4, 6, 8]).length(), 3 + 4 + 5);
        assert_eq!(pp(&[3], 8, &[6, 7, 8]).length(), shape(&[3], 8).dimension());
    }

    #[test]
    fn shape_dimension_and_rejects() {
        assert_eq!(shape(&[2, 4], 7).dimension(), 2 * 2 + 2 * 3 + 2 * 3);
        assert_eq!(shape(&[3], 8).dimension(), 15);
        assert!(FlagShape::new(vec![4, 2], 7).is_err());
        assert!(FlagShape::new(vec![0, 2], 7).is_err());
        assert!(FlagShape::new(vec![8], 7).is_err());
        assert!(FlagShape::new(vec![7], 7).is_ok());
    }
}
