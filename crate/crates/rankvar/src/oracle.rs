//! Independent brute-force validators: finite-field point counting over
//! echelon forms, polynomial degree fitting for dimensions, Hall-condition
//! T-fixed membership, Schubert-condition checking for explicit flags, and
//! the exhaustive cross-check suite.

use crate::bridge::roundtrip_rank_set;
use crate::enumerate::all_rank_sets;
use crate::error::{Error, Result};
use crate::field::{intersection_with_prefix, matrix_rank, ExactField};
use crate::perm::PartialPermutation;
use crate::rankset::{RankSet, TieBreak};
use crate::singular::{is_smooth_rank, rank_singular_locus};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// Hard ceiling on the ambient dimension for point counting; `RANKVAR_MAX_N`
/// raises it (slower, not less exact).
pub fn oracle_max_n() -> usize {
    std::env::var("RANKVAR_MAX_N")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(6)
}

const ORACLE_MAX_Q: u64 = 11;

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A full-rank reduced row echelon matrix over `F_q`; these biject with the
/// points of `G(k,n)` over the field with `q` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonSubspace {
    pub q: u64,
    pub k: usize,
    pub n: usize,
    pub rows: Vec<Vec<u64>>,
}

/// Enumerates every echelon subspace, pivot pattern by pivot pattern,
/// invoking the visitor with a flattened row-major `k x n` matrix.
fn for_each_echelon<FN: FnMut(&[u64])>(k: usize, n: usize, q: u64, mut visit: FN) {
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        visit_pattern(k, n, q, &pivots, &mut visit);
        // next k-subset of 0..n in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < n - (k - i) {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn pivot_patterns(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        out.push(pick.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pick[i] < n - (k - i) {
                pick[i] += 1;
                for j in i + 1..k {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn visit_pattern<FN: FnMut(&[u64])>(k: usize, n: usize, q: u64, pivots: &[usize], visit: &mut FN) {
    visit_pattern_chunk(k, n, q, pivots, None, visit)
}

/// Enumerates one pivot pattern; with `fixed`, only the matrices whose last
/// free cell carries that value (the unit of parallel work).
fn visit_pattern_chunk<FN: FnMut(&[u64])>(
    k: usize,
    n: usize,
    q: u64,
    pivots: &[usize],
    fixed: Option<u64>,
    visit: &mut FN,
) {
    let mut mat = vec![0u64; k * n];
    for (row, &p) in pivots.iter().enumerate() {
        mat[row * n + p] = 1;
    }
    // Free cells: to the right of the row's pivot, in non-pivot columns.
    let mut free: Vec<(usize, usize)> = (0..k)
        .flat_map(|row| {
            let pivots = pivots.to_vec();
            (pivots[row] + 1..n)
                .filter(move |c| !pivots.contains(c))
                .map(move |c| (row, c))
        })
        .collect();
    if let Some(value) = fixed {
        let Some((r, c)) = free.pop() else {
            if value == 0 {
                visit(&mat);
            }
            return;
        };
        mat[r * n + c] = value;
    }
    let mut odometer = vec![0u64; free.len()];
    loop {
        visit(&mat);
        let mut i = 0;
        loop {
            if i == free.len() {
                return;
            }
            odometer[i] += 1;
            if odometer[i] < q {
                let (r, c) = free[i];
                mat[r * n + c] = odometer[i];
                break;
            }
            odometer[i] = 0;
            let (r, c) = free[i];
            mat[r * n + c] = 0;
            i += 1;
        }
    }
}

/// Collects every echelon subspace; only sensible for tiny parameters.
pub fn collect_echelon_subspaces(k: usize, n: usize, q: u64) -> Vec<EchelonSubspace> {
    let mut out = Vec::new();
    for_each_echelon(k, n, q, |mat| {
        let rows = (0..k).map(|r| mat[r * n..(r + 1) * n].to_vec()).collect();
        out.push(EchelonSubspace { q, k, n, rows });
    });
    out
}

/// The Gaussian binomial `[n choose k]_q`, the number of `k`-subspaces of an
/// `n`-space over `F_q`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let qb = BigInt::from(q);
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 1..=k {
        num *= qb.pow((n - k + i) as u32) - 1;
        den *= qb.pow(i as u32) - 1;
    }
    num / den
}

/// Rank conditions of `M` as `(subset mask, required dimension)` pairs over
/// unions of subfamilies of intervals.  Conditions over arbitrary coordinate
/// subsets `S` reduce to these: replacing `S` by the union of the intervals
/// it contains keeps the requirement and can only shrink the intersection.
fn rank_conditions(set: &RankSet) -> Vec<(u32, usize)> {
    let k = set.k();
    let n = set.n();
    let masks: Vec<u32> = set.intervals().iter().map(|iv| iv.mask() as u32).collect();
    let mut by_mask: BTreeMap<u32, usize> = BTreeMap::new();
    for family in 1u32..(1 << k) {
        let union = (0..k)
            .filter(|i| family & (1 << i) != 0)
            .fold(0u32, |m, i| m | masks[i]);
        let req = set.generic_rank_mask(union as u64);
        by_mask.insert(union, req);
    }
    let items: Vec<(u32, usize)> = by_mask.into_iter().collect();
    let mut kept: Vec<(u32, usize)> = items
        .iter()
        .copied()
        .filter(|&(mask, req)| {
            // Vacuous: the complement has too few columns to push the
            // intersection below the requirement.
            let complement = n - mask.count_ones() as usize;
            if k - complement.min(k) >= req {
                return false;
            }
            !items.iter().any(|&(other, oreq)| {
                (other, oreq) != (mask, req) && other & !mask == 0 && oreq >= req
            })
        })
        .collect();
    // Cheapest checks first: rank cost grows with the complement size.
    kept.sort_by_key(|&(mask, req)| (std::cmp::Reverse(mask.count_ones()), std::cmp::Reverse(req)));
    kept
}

const MAX_K: usize = 8;
const MAX_N: usize = 16;

/// Incremental column-space ranks for all `2^n` column subsets of one matrix.
/// `ranks[mask]` is the rank of the columns selected by `mask`.
fn column_rank_table(mat: &[u64], k: usize, n: usize, q: u64, ranks: &mut [u8], ech: &mut [u64]) {
    let mut col = [0u64; MAX_K];
    ranks[0] = 0;
    for mask in 1usize..(1 << n) {
        let j = mask.trailing_zeros() as usize;
        let prev = mask & (mask - 1);
        let prev_rank = ranks[prev] as usize;
        // Copy the echelon basis of `prev` and try to insert column j.
        let src = prev * k * k;
        let dst = mask * k * k;
        ech.copy_within(src..src + prev_rank * k, dst);
        for r in 0..k {
            col[r] = mat[r * n + j];
        }
        for b in 0..prev_rank {
            let lead = (0..k).find(|&t| ech[dst + b * k + t] != 0).unwrap();
            if col[lead] != 0 {
                // col -= col[lead]/basis[lead] * basis
                let inv = mod_inv(ech[dst + b * k + lead], q);
                let factor = col[lead] * inv % q;
                for t in 0..k {
                    col[t] = (col[t] + q * q - factor * ech[dst + b * k + t] % q) % q;
                }
            }
        }
        if col[..k].iter().any(|&x| x != 0) {
            ech[dst + prev_rank * k..dst + prev_rank * k + k].copy_from_slice(&col[..k]);
            ranks[mask] = prev_rank as u8 + 1;
        } else {
            ranks[mask] = prev_rank as u8;
        }
    }
}

fn mod_inv(a: u64, q: u64) -> u64 {
    // q is prime and a nonzero mod q
    let mut result = 1u64;
    let mut base = a % q;
    let mut exp = q - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    result
}

/// Rank of the selected columns, allocation-free; stops early at full rank.
fn column_rank_direct(mat: &[u64], k: usize, n: usize, q: u64, col_mask: u32) -> usize {
    let mut rows = [[0u64; MAX_N]; MAX_K];
    let mut ncols = 0;
    for c in 0..n {
        if col_mask & (1 << c) != 0 {
            for r in 0..k {
                rows[r][ncols] = mat[r * n + c];
            }
            ncols += 1;
        }
    }
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..k).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = mod_inv(rows[rank][col], q);
        for c in col..ncols {
            rows[rank][c] = rows[rank][c] * inv % q;
        }
        for r in 0..k {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in col..ncols {
                    rows[r][c] = (rows[r][c] + q * q - f * rows[rank][c] % q) % q;
                }
            }
        }
        rank += 1;
        if rank == k {
            break;
        }
    }
    rank
}

/// Counts, for each rank set of one family sharing `(k, n)`, the echelon
/// subspaces over `F_q` satisfying all its rank conditions.  One shared
/// enumeration pass, parallel over pivot-pattern chunks.
fn count_family(sets: &[RankSet], q: u64) -> Result<Vec<u64>> {
    let Some(first) = sets.first() else {
        return Ok(Vec::new());
    };
    let (k, n) = (first.k(), first.n());
    if sets.iter().any(|s| s.k() != k || s.n() != n) {
        return Err(Error::ShapeMismatch);
    }
    if !is_prime(q) {
        return Err(Error::Parse(format!("{q} is not prime")));
    }
    if k > MAX_K || n > MAX_N {
        return Err(Error::CapabilityExceeded(format!(
            "point counting supports k <= {MAX_K}, n <= {MAX_N}"
        )));
    }
    let jobs: Vec<Vec<(u32, usize)>> = sets.iter().map(rank_conditions).collect();
    let full: u32 = (1u32 << n) - 1;
    let use_table = sets.len() > 8;

    // Work units: one per (pivot pattern, value of the last free cell), so
    // the dominant pattern still spreads across threads.
    let chunks: Vec<(Vec<usize>, Option<u64>)> = pivot_patterns(k, n)
        .into_iter()
        .flat_map(|pat| (0..q).map(move |v| (pat.clone(), Some(v))))
        .collect();
    let totals = chunks
        .par_iter()
        .map(|(pat, fixed)| {
            let mut counts = vec![0u64; sets.len()];
            let mut ranks = vec![0u8; 1 << n];
            let mut ech = vec![0u64; (1 << n) * k * k];
            visit_pattern_chunk(k, n, q, pat, *fixed, &mut |mat: &[u64]| {
                if use_table {
                    column_rank_table(mat, k, n, q, &mut ranks, &mut ech);
                    for (ji, job) in jobs.iter().enumerate() {
                        let ok = job
                            .iter()
                            .all(|&(mask, req)| k - ranks[(full & !mask) as usize] as usize >= req);
                        if ok {
                            counts[ji] += 1;
                        }
                    }
                } else {
                    for (ji, job) in jobs.iter().enumerate() {
                        let ok = job.iter().all(|&(mask, req)| {
                            k - column_rank_direct(mat, k, n, q, full & !mask) >= req
                        });
                        if ok {
                            counts[ji] += 1;
                        }
                    }
                }
            });
            counts
        })
        .reduce(
            || vec![0u64; sets.len()],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(totals)
}

/// Number of `F_q`-points of the rank-condition locus of `M`:
/// echelon subspaces meeting every coordinate subspace in at least the
/// generic dimension.  Guarded to `q <= 11` and `n <= 6` (the latter
/// overridable through `RANKVAR_MAX_N`).
pub fn count_points(set: &RankSet, q: u64) -> Result<u64> {
    if q > ORACLE_MAX_Q {
        return Err(Error::CapabilityExceeded(format!(
            "count_points is guarded to primes <= {ORACLE_MAX_Q}, got {q}"
        )));
    }
    if set.n() > oracle_max_n() {
        return Err(Error::CapabilityExceeded(format!(
            "count_points is guarded to n <= {} (RANKVAR_MAX_N overrides), got {}",
            oracle_max_n(),
            set.n()
        )));
    }
    Ok(count_family(std::slice::from_ref(set), q)?[0])
}

/// A sampled count profile with its fitted degree.
#[derive(Debug, Clone, Serialize)]
pub struct PointCountProfile {
    pub samples: Vec<(u64, u64)>,
    pub degree: usize,
}

fn divided_difference_degree(samples: &[(u64, u64)]) -> usize {
    let xs: Vec<BigRational> = samples
        .iter()
        .map(|&(x, _)| BigRational::from_integer(BigInt::from(x)))
        .collect();
    let mut layer: Vec<BigRational> = samples
        .iter()
        .map(|&(_, y)| BigRational::from_integer(BigInt::from(y)))
        .collect();
    let mut degree = 0;
    for order in 1..samples.len() {
        let mut next = Vec::with_capacity(layer.len() - 1);
        for i in 0..layer.len() - 1 {
            let num = &layer[i + 1] - &layer[i];
            let den = &xs[i + order] - &xs[i];
            next.push(num / den);
        }
        if next.iter().any(|c| !c.is_zero()) {
            degree = order;
        }
        layer = next;
    }
    degree
}

fn next_prime_after(q: u64) -> u64 {
    let mut c = q + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

/// Degree of the count polynomial of `M`, fitted by exact interpolation over
/// the sampled primes; the contract is `degree = dim X(M)`.
///
/// The degree is accepted once either the interpolant is confirmed by a
/// spare sample (adding a point did not raise the degree) or the sample
/// count reaches the ambient bound `k(n-k) + 1`, under which any polynomial
/// count of a subvariety is pinned exactly.  When the given primes do not
/// reach that state the sampling automatically extends to further primes
/// (beyond the interactive `count_points` guard; same arithmetic, more time).
pub fn fit_dimension(set: &RankSet, primes: &[u64]) -> Result<usize> {
    Ok(point_count_profile(set, primes)?.degree)
}

pub fn point_count_profile(set: &RankSet, primes: &[u64]) -> Result<PointCountProfile> {
    if primes.len() < 2 {
        return Err(Error::InsufficientSamples(
            "need at least two primes".into(),
        ));
    }
    let mut samples: Vec<(u64, u64)> = Vec::new();
    for &q in primes {
        samples.push((q, count_points(set, q)?));
    }
    samples.sort_unstable();
    samples.dedup();
    let bound = set.k() * (set.n() - set.k());
    loop {
        let degree = divided_difference_degree(&samples);
        if samples.len() >= (degree + 2).min(bound + 1) {
            return Ok(PointCountProfile { samples, degree });
        }
        let q = next_prime_after(samples.last().unwrap().0);
        if BigInt::from(q).pow(bound as u32) > BigInt::from(4_000_000_000u64) {
            return Err(Error::InsufficientSamples(format!(
                "degree unconfirmed after {} samples and extension to {q} is infeasible",
                samples.len()
            )));
        }
        let count = count_family(std::slice::from_ref(set), q)?[0];
        samples.push((q, count));
    }
}

/// Batched [`fit_dimension`] across a whole family sharing `(k, n)`, reusing
/// one enumeration pass per prime.
pub fn fit_dimensions_family(sets: &[RankSet], primes: &[u64]) -> Result<Vec<usize>> {
    if primes.len() < 2 {
        return Err(Error::InsufficientSamples(
            "need at least two primes".into(),
        ));
    }
    let Some(first) = sets.first() else {
        return Ok(Vec::new());
    };
    if first.n() > oracle_max_n() {
        return Err(Error::CapabilityExceeded(format!(
            "point counting is guarded to n <= {} (RANKVAR_MAX_N overrides)",
            oracle_max_n()
        )));
    }
    let bound = first.k() * (first.n() - first.k());
    let mut qs: Vec<u64> = primes.to_vec();
    qs.sort_unstable();
    qs.dedup();
    let mut samples: Vec<Vec<(u64, u64)>> = vec![Vec::new(); sets.len()];
    for &q in &qs {
        let counts = count_family(sets, q)?;
        for (sample, count) in samples.iter_mut().zip(counts) {
            sample.push((q, count));
        }
    }
    let mut degrees = vec![0usize; sets.len()];
    let mut open: Vec<usize> = (0..sets.len()).collect();
    let mut q = *qs.last().unwrap();
    loop {
        open.retain(|&i| {
            degrees[i] = divided_difference_degree(&samples[i]);
            samples[i].len() < (degrees[i] + 2).min(bound + 1)
        });
        if open.is_empty() {
            return Ok(degrees);
        }
        q = next_prime_after(q);
        if BigInt::from(q).pow(bound as u32) > BigInt::from(4_000_000_000u64) {
            return Err(Error::InsufficientSamples(format!(
                "degrees unconfirmed and extension to {q} is infeasible"
            )));
        }
        let pending: Vec<RankSet> = open.iter().map(|&i| sets[i].clone()).collect();
        let counts = count_family(&pending, q)?;
        for (&i, count) in open.iter().zip(counts) {
            samples[i].push((q, count));
        }
    }
}

/// Hall-condition membership test for a T-fixed point: the subset contains a
/// system of distinct representatives for the intervals exactly when every
/// subfamily of intervals covers at least as many subset indices as its size.
pub fn tfixed_member(set: &RankSet, subset: &[usize]) -> Result<bool> {
    if subset.len() != set.k() {
        return Err(Error::WrongSubsetSize {
            expected: set.k(),
            got: subset.len(),
        });
    }
    let k = set.k();
    for family in 1u32..(1 << k) {
        let members = (0..k).filter(|&i| family & (1 << i) != 0);
        let mut covered = 0;
        for &idx in subset {
            if members
                .clone()
                .any(|i| set.intervals()[i].l <= idx && idx <= set.intervals()[i].r)
            {
                covered += 1;
            }
        }
        if covered < family.count_ones() as usize {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks every defining inequality `dim(V_j ∩ F_{u_i}) >= s_j^i` of
/// `X_u(F)` against an explicit flag of row vectors.
pub fn schubert_member<F: ExactField>(
    field: &F,
    p: &PartialPermutation,
    levels: &[Vec<Vec<F::Elem>>],
) -> Result<bool> {
    let shape = p.shape();
    if levels.len() != shape.levels() {
        return Err(Error::ShapeMismatch);
    }
    for (j, level) in levels.iter().enumerate() {
        if level.len() != shape.ks()[j] || level.iter().any(|v| v.len() != shape.n()) {
            return Err(Error::ShapeMismatch);
        }
        if matrix_rank(field, level) != shape.ks()[j] {
            return Err(Error::DegenerateLift(format!(
                "level {} rows are dependent",
                j + 1
            )));
        }
        for i in 1..=shape.k_top() {
            let required = p.multi_index(i)?[j];
            if required == 0 {
                continue;
            }
            let t = p.entries()[i - 1];
            if intersection_with_prefix(field, level, t) < required {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Membership in the opposite Schubert variety `X^v(G)`, via the basis
/// reversal that swaps `G_i` into `F_i`.
pub fn opposite_schubert_member<F: ExactField>(
    field: &F,
    v: &PartialPermutation,
    levels: &[Vec<Vec<F::Elem>>],
) -> Result<bool> {
    let reversed: Vec<Vec<Vec<F::Elem>>> = levels
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|vec| vec.iter().rev().cloned().collect())
                .collect()
        })
        .collect();
    schubert_member(field, v, &reversed)
}

/// One named check of the exhaustive suite.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub scope: String,
    pub pass: bool,
    pub checked: usize,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

/// Cross-checks over every enumerated rank set: roundtrip identity,
/// dimension versus finite-field degree, smoothness-classifier agreement,
/// and normalization order-independence.  Failures are data, not errors.
pub fn exhaustive_suite(k_max: usize, n_max: usize) -> Result<SuiteReport> {
    let n_limit = oracle_max_n().max(8);
    if n_max > n_limit || k_max > n_max {
        return Err(Error::CapabilityExceeded(format!(
            "suite guarded to k_max <= n_max <= {n_limit}"
        )));
    }
    let mut checks = Vec::new();

    // Roundtrip: rank_of(rich(M)) = M.
    {
        let mut checked = 0;
        let mut counterexample = None;
        'outer: for n in 1..=n_max {
            for k in 1..=k_max.min(n) {
                for set in all_rank_sets(k, n)? {
                    checked += 1;
                    if roundtrip_rank_set(&set) != Ok(set.clone()) {
                        counterexample = Some(format!("{set:?}"));
                        break 'outer;
                    }
                }
            }
        }
        checks.push(CheckResult {
            name: "roundtrip".into(),
            scope: format!("all rank sets, k <= {k_max}, n <= {n_max}"),
            pass: counterexample.is_none(),
            checked,
            counterexample,
        });
    }

    // Dimension formula against the finite-field degree fit.
    {
        let primes = [2u64, 3, 5, 7, 11];
        let n_cap = n_max.min(5);
        let mut checked = 0;
        let mut counterexample = None;
        for n in 1..=n_cap {
            for k in 1..=k_max.min(n) {
                let sets = all_rank_sets(k, n)?;
                let degrees = fit_dimensions_family(&sets, &primes)?;
                checked += sets.len();
                for (set, degree) in sets.iter().zip(degrees) {
                    if degree != set.dimension() {
                        counterexample.get_or_insert(format!(
                            "{set:?}: fitted {degree}, formula {}",
                            set.dimension()
                        ));
                    }
                }
            }
        }
        checks.push(CheckResult {
            name: "dimension-fit".into(),
            scope: format!("all rank sets, k <= {k_max}, n <= {n_cap}, primes {primes:?}"),
            pass: counterexample.is_none(),
            checked,
            counterexample,
        });
    }

    // Smoothness: block-product classifier versus empty singular locus.
    {
        let n_cap = n_max.min(7);
        let mut checked = 0;
        let mut counterexample = None;
        for n in 1..=n_cap {
            for k in 1..=k_max.min(n) {
                for set in all_rank_sets(k, n)? {
                    checked += 1;
                    let classified = is_smooth_rank(&set);
                    let by_locus = rank_singular_locus(&set)?.is_smooth();
                    if classified != by_locus {
                        counterexample.get_or_insert(format!(
                            "{set:?}: classifier {classified}, locus empty {by_locus}"
                        ));
                    }
                }
            }
        }
        checks.push(CheckResult {
            name: "smoothness-equivalence".into(),
            scope: format!("all rank sets, k <= {k_max}, n <= {n_cap}"),
            pass: counterexample.is_none(),
            checked,
            counterexample,
        });
    }

    // Normalization order-independence, probed by point counts.
    {
        let n_cap = n_max.min(6);
        let mut checked = 0;
        let mut counterexample = None;
        for n in 2..=n_cap {
            for k in 1..=k_max.min(n) {
                for set in all_rank_sets(k, n)? {
                    for multiset in crate::singular::raw_stratum_multisets(&set) {
                        checked += 1;
                        let a =
                            crate::rankset::normalize_with(n, &multiset, TieBreak::SmallestFirst)?;
                        let b =
                            crate::rankset::normalize_with(n, &multiset, TieBreak::LargestFirst)?;
                        let agree = match (&a, &b) {
                            (None, None) => true,
                            (Some(x), Some(y)) => {
                                x.dimension() == y.dimension()
                                    && [2u64, 3].iter().all(|&q| {
                                        count_points(x, q).unwrap() == count_points(y, q).unwrap()
                                    })
                            }
                            _ => false,
                        };
                        if !agree {
                            counterexample
                                .get_or_insert(format!("multiset {multiset:?}: {a:?} vs {b:?}"));
                        }
                    }
                }
            }
        }
        checks.push(CheckResult {
            name: "normalization-order-independence".into(),
            scope: format!("stratum multisets, k <= {k_max}, n <= {n_cap}, counts at q in {{2,3}}"),
            pass: counterexample.is_none(),
            checked,
            counterexample,
        });
    }

    let pass = checks.iter().all(|c| c.pass);
    Ok(SuiteReport { pass, checks })
}
