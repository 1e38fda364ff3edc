//! Enumeration of rank sets by dimension, the generating polynomial `g[k,n]`,
//! and q-Stirling numbers of the second kind.
//!
//! The recurrences use the bracket `[j] = 1 + q + ... + q^{j-1}` (`j` terms)
//! together with `g[0,n] = 1` for every `n >= 0`: the empty rank set is the
//! unique rank set of the point `G(0,n)`.  This is the unique convention under
//! which the recurrence reproduces the direct sum over rank sets; see
//! [`adjudicate_bracket_convention`] for the check that settles it.

use crate::error::{Error, Result};
use crate::qpoly::QPolynomial;
use crate::rankset::{Interval, RankSet};

/// Visits every rank set of `G(k,n)` exactly once, as a sorted interval
/// slice, without materializing the family.
///
/// Recursive scheme: a rank set either lies in `[1, top-1]`, or it contains
/// the unique interval with right endpoint `top`; removing that interval
/// leaves a rank set for `G(k-1, top-1)` whose left endpoints avoid the
/// removed one.  The two branches are disjoint, so the recursion does
/// proportional work per emitted set.
pub fn for_each_rank_set<F: FnMut(&[Interval])>(k: usize, n: usize, mut visit: F) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::CapabilityExceeded(format!(
            "rank sets exist only for 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    fn rec<F: FnMut(&[Interval])>(
        k: usize,
        top: usize,
        used_left: &mut Vec<bool>,
        acc: &mut Vec<Interval>,
        visit: &mut F,
    ) {
        if k == 0 {
            visit(acc);
            return;
        }
        if k > top {
            return;
        }
        rec(k, top - 1, used_left, acc, visit);
        for l in 1..=top {
            if used_left[l] {
                continue;
            }
            used_left[l] = true;
            acc.push(Interval::new(l, top).unwrap());
            rec(k - 1, top - 1, used_left, acc, visit);
            acc.pop();
            used_left[l] = false;
        }
    }
    let mut used_left = vec![false; n + 1];
    let mut acc = Vec::with_capacity(k);
    rec(k, n, &mut used_left, &mut acc, &mut visit);
    Ok(())
}

/// All rank sets for `G(k,n)` in lexicographic order of their sorted `(l, r)`
/// interval lists.
pub fn all_rank_sets(k: usize, n: usize) -> Result<Vec<RankSet>> {
    let mut sets = Vec::new();
    for_each_rank_set(k, n, |ivs| {
        sets.push(RankSet::from_intervals(n, ivs.to_vec()).expect("enumeration emits rank sets"));
    })?;
    sets.sort_unstable();
    Ok(sets)
}

/// `g[k,n] = sum over rank sets M of q^{dim X(M)}`, computed directly.
pub fn g_poly_direct(k: usize, n: usize) -> Result<QPolynomial> {
    let mut poly = QPolynomial::zero();
    for_each_rank_set(k, n, |ivs| {
        let total: usize = ivs.iter().map(|iv| iv.len()).sum();
        let nested: usize = ivs
            .iter()
            .map(|outer| ivs.iter().filter(|inner| outer.contains(inner)).count())
            .sum();
        poly.add_monomial(total - nested);
    })?;
    Ok(poly)
}

/// Bracket conventions whose fit against the direct count is adjudicated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketConvention {
    /// `[j] = 1 + q + ... + q^{j-1}` with `g[0,n] = 1` for all `n`.
    Adjudicated,
    /// `[j] = 1 + q + ... + q^j` with `g[0,n] = 0` for `n > 0`, as printed.
    PrintedLiteral,
}

fn bracket(convention: BracketConvention, j: usize) -> QPolynomial {
    match convention {
        BracketConvention::Adjudicated => QPolynomial::bracket(j),
        BracketConvention::PrintedLiteral => QPolynomial::bracket_inclusive(j),
    }
}

/// `g[k,n]` via the recurrence `g[k,n] = g[k,n-1] + [n-k+1] g[k-1,n-1]`.
pub fn g_poly_recurrence(k: usize, n: usize) -> Result<QPolynomial> {
    if k == 0 || k > n {
        return Err(Error::CapabilityExceeded(format!(
            "the recurrence covers 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    Ok(g_poly_recurrence_with(BracketConvention::Adjudicated, k, n))
}

fn g_poly_recurrence_with(convention: BracketConvention, k: usize, n: usize) -> QPolynomial {
    let mut table: Vec<Vec<QPolynomial>> = vec![vec![QPolynomial::zero(); n + 1]; k + 1];
    for nn in 0..=n {
        table[0][nn] = match convention {
            BracketConvention::Adjudicated => QPolynomial::one(),
            BracketConvention::PrintedLiteral => {
                if nn == 0 {
                    QPolynomial::one()
                } else {
                    QPolynomial::zero()
                }
            }
        };
    }
    for kk in 1..=k {
        for nn in kk..=n {
            let peel = &bracket(convention, nn - kk + 1) * &table[kk - 1][nn - 1];
            table[kk][nn] = &table[kk][nn - 1] + &peel;
        }
    }
    table[k][n].clone()
}

/// The q-Stirling number `S[n,k]` defined by
/// `S[n,k] = q^{k-1} S[n-1,k-1] + [k] S[n-1,k]` with `S[0,0] = 1`,
/// `S[n,0] = 0` for `n > 0` and `S[n,k] = 0` for `k > n`.
pub fn q_stirling(n: usize, k: usize) -> QPolynomial {
    if k > n {
        return QPolynomial::zero();
    }
    let mut table: Vec<Vec<QPolynomial>> = vec![vec![QPolynomial::zero(); k + 1]; n + 1];
    table[0][0] = QPolynomial::one();
    for nn in 1..=n {
        for kk in 1..=k.min(nn) {
            let carry = table[nn - 1][kk - 1].shift_up(kk - 1);
            let stay = &QPolynomial::bracket(kk) * &table[nn - 1][kk];
            table[nn][kk] = &carry + &stay;
        }
    }
    table[n][k].clone()
}

/// Checks `g[k,n] = S[n+1, n-k+1] * q^{-C(n-k+1, 2)}` with the direct count
/// on the left, i.e. `g_direct * q^{C(n-k+1,2)} == S[n+1, n-k+1]`.
pub fn verify_stirling_identity(k: usize, n: usize) -> Result<bool> {
    let g = g_poly_direct(k, n)?;
    let j = n - k + 1;
    let shift = j * (j - 1) / 2;
    Ok(g.shift_up(shift) == q_stirling(n + 1, j))
}

/// Outcome of checking one bracket convention against the direct count.
#[derive(Debug, Clone)]
pub struct AdjudicationEntry {
    pub convention: BracketConvention,
    pub description: &'static str,
    pub agrees: bool,
    pub first_mismatch: Option<(usize, usize)>,
}

/// Compares both candidate readings of the bracket against `g_poly_direct`
/// for all `1 <= k <= n <= max_n`.  Exactly one survives.
pub fn adjudicate_bracket_convention(max_n: usize) -> Vec<AdjudicationEntry> {
    let candidates = [
        (
            BracketConvention::Adjudicated,
            "[j] = 1 + q + ... + q^(j-1), g[0,n] = 1 for all n",
        ),
        (
            BracketConvention::PrintedLiteral,
            "[j] = 1 + q + ... + q^j, g[0,n] = 0 for n > 0",
        ),
    ];
    candidates
        .into_iter()
        .map(|(convention, description)| {
            let mut first_mismatch = None;
            'outer: for n in 1..=max_n {
                for k in 1..=n {
                    let direct = g_poly_direct(k, n).unwrap();
                    if g_poly_recurrence_with(convention, k, n) != direct {
                        first_mismatch = Some((k, n));
                        break 'outer;
                    }
                }
            }
            AdjudicationEntry {
                convention,
                description,
                agrees: first_mismatch.is_none(),
                first_mismatch,
            }
        })
        .collect()
}
