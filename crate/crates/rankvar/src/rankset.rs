//! Rank sets: `k` intervals of consecutive basis indices in `[1, n]` with
//! pairwise-distinct left endpoints and pairwise-distinct right endpoints.
//!
//! A rank set `M` determines the rank variety `X(M)`, the closure of the set
//! of `k`-planes spanned by one vector from each interval.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A basis-spanned interval `[e_l, ..., e_r]`, 1-based and inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub l: usize,
    pub r: usize,
}

impl Interval {
    pub fn new(l: usize, r: usize) -> Result<Self> {
        if l == 0 || l > r {
            return Err(Error::InvalidInterval { l, r });
        }
        Ok(Interval { l, r })
    }

    pub fn len(&self) -> usize {
        self.r - self.l + 1
    }

    pub fn is_singleton(&self) -> bool {
        self.l == self.r
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.l <= other.l && other.r <= self.r
    }

    pub fn strictly_contains(&self, other: &Interval) -> bool {
        self.contains(other) && self != other
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let l = self.l.max(other.l);
        let r = self.r.min(other.r);
        (l <= r).then_some(Interval { l, r })
    }

    pub fn span(&self, other: &Interval) -> Interval {
        Interval {
            l: self.l.min(other.l),
            r: self.r.max(other.r),
        }
    }

    /// Bitmask of the indices covered by the interval.
    pub fn mask(&self) -> u64 {
        ((1u64 << (self.r - self.l + 1)) - 1) << (self.l - 1)
    }

    pub fn reversed(&self, n: usize) -> Interval {
        Interval {
            l: n + 1 - self.r,
            r: n + 1 - self.l,
        }
    }
}

/// A validated rank set, stored canonically sorted by left endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankSet {
    n: usize,
    intervals: Vec<Interval>,
}

impl RankSet {
    pub fn new(n: usize, intervals: Vec<(usize, usize)>) -> Result<Self> {
        let intervals = intervals
            .into_iter()
            .map(|(l, r)| Interval::new(l, r))
            .collect::<Result<Vec<_>>>()?;
        RankSet::from_intervals(n, intervals)
    }

    pub fn from_intervals(n: usize, mut intervals: Vec<Interval>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::EmptyRankSet);
        }
        for iv in &intervals {
            if iv.r > n {
                return Err(Error::IntervalOutOfRange {
                    l: iv.l,
                    r: iv.r,
                    n,
                });
            }
        }
        intervals.sort_unstable();
        for pair in intervals.windows(2) {
            if pair[0].l == pair[1].l {
                return Err(Error::DuplicateLeftEndpoint(pair[0].l));
            }
        }
        let mut rights: Vec<usize> = intervals.iter().map(|iv| iv.r).collect();
        rights.sort_unstable();
        for pair in rights.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateRightEndpoint(pair[0]));
            }
        }
        Ok(RankSet { n, intervals })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of intervals, the `k` of the ambient Grassmannian.
    pub fn k(&self) -> usize {
        self.intervals.len()
    }

    /// Intervals sorted by left endpoint.
    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// `dim X(M) = sum dim(W_i) - sum #{W_j : W_j ⊆ W_i}` (each interval
    /// counts itself).
    pub fn dimension(&self) -> usize {
        let total: usize = self.intervals.iter().map(|iv| iv.len()).sum();
        let nested: usize = self
            .intervals
            .iter()
            .map(|outer| {
                self.intervals
                    .iter()
                    .filter(|inner| outer.contains(inner))
                    .count()
            })
            .sum();
        total - nested
    }

    /// Number of intervals whose index set lies inside `S`; this is the
    /// generic dimension of the intersection of a point of `X(M)` with the
    /// coordinate subspace spanned by `{e_s : s in S}`.
    pub fn generic_rank(&self, subset: &[usize]) -> usize {
        let mut mask: u64 = 0;
        for &s in subset {
            if s >= 1 && s <= self.n {
                mask |= 1 << (s - 1);
            }
        }
        self.generic_rank_mask(mask)
    }

    pub fn generic_rank_mask(&self, mask: u64) -> usize {
        self.intervals
            .iter()
            .filter(|iv| iv.mask() & !mask == 0)
            .count()
    }

    /// Whether `X(self) ⊆ X(other)`, certified by `generic_rank(self, S) >=
    /// generic_rank(other, S)` for every coordinate index subset `S`.
    /// Exhaustive over `2^n` subsets, so the ambient dimension is capped.
    pub fn is_contained_in(&self, other: &RankSet) -> Result<bool> {
        if self.n != other.n || self.k() != other.k() {
            return Err(Error::ShapeMismatch);
        }
        let n = self.n;
        if n > 14 {
            return Err(Error::CapabilityExceeded(format!(
                "the containment test enumerates 2^n subsets and refuses n = {n} > 14"
            )));
        }
        for mask in 0..(1u64 << n) {
            if self.generic_rank_mask(mask) < other.generic_rank_mask(mask) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image under the basis reversal `e_i -> e_{n+1-i}`.
    pub fn reversed(&self) -> RankSet {
        let intervals = self
            .intervals
            .iter()
            .map(|iv| iv.reversed(self.n))
            .collect();
        RankSet::from_intervals(self.n, intervals).expect("reversal preserves validity")
    }
}

/// A rank set with the colors of Algorithm `rich` Step 1: `c_i = m - m_i + 1`
/// where `m_i` is the length of the longest containment chain in `M`
/// descending to `W_i` and `m` the longest chain overall.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredRankSet {
    base: RankSet,
    colors: Vec<usize>,
    m: usize,
}

impl ColoredRankSet {
    pub fn base(&self) -> &RankSet {
        &self.base
    }

    /// Colors aligned with `base().intervals()`.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of colors, the length of the longest containment chain.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn color_of(&self, index: usize) -> usize {
        self.colors[index]
    }

    /// `k_j = #{intervals of color <= j}`, strictly increasing in `j`.
    pub fn ks(&self) -> Vec<usize> {
        (1..=self.m)
            .map(|j| self.colors.iter().filter(|&&c| c <= j).count())
            .collect()
    }

    /// Indices (into `base().intervals()`) of the intervals of one color.
    pub fn indices_of_color(&self, color: usize) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&i| self.colors[i] == color)
            .collect()
    }
}

/// Assigns chain-depth colors to a rank set.
pub fn assign_colors(set: &RankSet) -> ColoredRankSet {
    let intervals = set.intervals();
    let k = intervals.len();
    // Longest chain ending at W_i: supersets first, so process by decreasing
    // length (a strict superset is strictly longer).
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_unstable_by_key(|&i| std::cmp::Reverse(intervals[i].len()));
    let mut depth = vec![1usize; k];
    for &i in &order {
        let best = (0..k)
            .filter(|&j| intervals[j].strictly_contains(&intervals[i]))
            .map(|j| depth[j])
            .max()
            .unwrap_or(0);
        depth[i] = best + 1;
    }
    let m = *depth.iter().max().unwrap();
    let colors = depth.iter().map(|&d| m - d + 1).collect();
    ColoredRankSet {
        base: set.clone(),
        colors,
        m,
    }
}

/// Result of normalizing a multiset of intervals: either a rank set or the
/// empty set (some interval shrank to nothing).
pub type Normalized = Option<RankSet>;

/// Order in which `normalize` picks among several violating pairs.  The
/// result varieties are isomorphic either way; the oracle suite probes this
/// with point counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    SmallestFirst,
    LargestFirst,
}

/// Normalization of a collection of intervals that may violate the rank-set
/// conditions.  While some pair `W_1 ⊆ W_2` shares its right endpoint, shrink
/// `W_2` from the right; once no such pair remains, do the same on the left.
/// Ties are broken by smallest right endpoint, then smallest left endpoint.
pub fn normalize(n: usize, intervals: &[Interval]) -> Result<Normalized> {
    normalize_with(n, intervals, TieBreak::SmallestFirst)
}

pub fn normalize_with(n: usize, intervals: &[Interval], tie: TieBreak) -> Result<Normalized> {
    for iv in intervals {
        if iv.l == 0 || iv.l > iv.r {
            return Err(Error::InvalidInterval { l: iv.l, r: iv.r });
        }
        if iv.r > n {
            return Err(Error::IntervalOutOfRange {
                l: iv.l,
                r: iv.r,
                n,
            });
        }
    }
    if intervals.is_empty() {
        return Err(Error::EmptyRankSet);
    }
    let mut work: Vec<Interval> = intervals.to_vec();
    work.sort_unstable();

    let pick = |pairs: Vec<(usize, usize, (usize, usize, usize, usize, usize))>| match tie {
        TieBreak::SmallestFirst => pairs.into_iter().min_by_key(|&(_, _, key)| key),
        TieBreak::LargestFirst => pairs.into_iter().max_by_key(|&(_, _, key)| key),
    };

    // Right phase.  A pair shares a right endpoint only when one interval
    // contains the other, so exhausting these also removes duplicate rights.
    loop {
        let pairs: Vec<_> = (0..work.len())
            .flat_map(|a| (0..work.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && work[b].contains(&work[a]) && work[a].r == work[b].r)
            .map(|(a, b)| (a, b, (work[b].r, work[b].l, work[a].l, b, a)))
            .collect();
        match pick(pairs) {
            None => break,
            Some((_, b, _)) => {
                if work[b].l == work[b].r {
                    return Ok(None);
                }
                work[b].r -= 1;
            }
        }
    }
    // Left phase.  Shrinking from the left cannot reintroduce a shared right
    // endpoint: any such pair would have violated the right phase already.
    loop {
        let pairs: Vec<_> = (0..work.len())
            .flat_map(|a| (0..work.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && work[b].contains(&work[a]) && work[a].l == work[b].l)
            .map(|(a, b)| (a, b, (work[b].r, work[b].l, work[a].r, b, a)))
            .collect();
        match pick(pairs) {
            None => break,
            Some((_, b, _)) => {
                if work[b].l == work[b].r {
                    return Ok(None);
                }
                work[b].l += 1;
            }
        }
    }
    Ok(Some(
        RankSet::from_intervals(n, work).expect("normalization yields a rank set"),
    ))
}
