//! Smoothness and singular loci: the hook rule for Grassmannian Schubert
//! varieties, tangent-space dimensions at T-fixed points, Richardson singular
//! loci, exceptional strata of the projection from the minimal Richardson
//! variety, the full singular locus of a rank variety, and the block-product
//! smoothness classifier.

use crate::bridge::{rank_of, rich, RichardsonDatum};
use crate::error::{Error, Result};
use crate::perm::{FlagShape, PartialPermutation};
use crate::rankset::{assign_colors, normalize, Interval, RankSet};
use std::collections::BTreeSet;

/// Provenance of a singular-locus component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ProvenanceTag {
    /// Locus of positive-dimensional fibers of the projection.
    ExceptionalFiber,
    /// Projection of a singular component of the minimal Richardson variety.
    SingularPreimage,
    /// Component of `X_u^{sing} ∩ X^v` inside a Richardson variety.
    SchubertHookU,
    /// Component of `X_u ∩ X^v_{sing}` inside a Richardson variety.
    SchubertHookV,
}

impl ProvenanceTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProvenanceTag::ExceptionalFiber => "EXCEPTIONAL_FIBER",
            ProvenanceTag::SingularPreimage => "SINGULAR_PREIMAGE",
            ProvenanceTag::SchubertHookU => "SCHUBERT_HOOK_U",
            ProvenanceTag::SchubertHookV => "SCHUBERT_HOOK_V",
        }
    }
}

/// One irreducible component of a singular locus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentData {
    RankSet(RankSet),
    Richardson(RichardsonDatum),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub data: ComponentData,
    pub tag: ProvenanceTag,
    pub dim: usize,
}

/// The ambient variety of a singular-locus computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ambient {
    RankSet(RankSet),
    Richardson(RichardsonDatum),
}

/// A pruned list of maximal singular-locus components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularLocusReport {
    pub ambient: Ambient,
    pub ambient_dim: usize,
    pub components: Vec<Component>,
}

impl SingularLocusReport {
    pub fn is_smooth(&self) -> bool {
        self.components.is_empty()
    }
}

// ---------------------------------------------------------------------------
// Coset chains: T-fixed points of a partial flag variety as nested bitmasks.

type Chain = Vec<u32>;

fn chain_of(p: &PartialPermutation) -> Chain {
    p.shape()
        .ks()
        .iter()
        .map(|&k| p.entries()[..k].iter().fold(0u32, |m, &e| m | 1 << (e - 1)))
        .collect()
}

fn perm_of_chain(shape: &FlagShape, chain: &Chain) -> PartialPermutation {
    let mut entries = Vec::with_capacity(shape.k_top());
    let mut prev = 0u32;
    for &mask in chain {
        let mut added: Vec<usize> = (0..shape.n())
            .filter(|&b| mask & !prev & (1 << b) != 0)
            .map(|b| b + 1)
            .collect();
        added.sort_unstable();
        entries.extend(added);
        prev = mask;
    }
    PartialPermutation::new(shape.clone(), entries).expect("chain yields a valid permutation")
}

fn mask_values(mask: u32, n: usize) -> Vec<usize> {
    (0..n)
        .filter(|&b| mask & (1 << b) != 0)
        .map(|b| b + 1)
        .collect()
}

/// Componentwise dominance of the sorted values of `mask` by `bound`.
fn mask_dominated(mask: u32, n: usize, bound: &[usize]) -> bool {
    let mut i = 0;
    for b in 0..n {
        if mask & (1 << b) != 0 {
            if b + 1 > bound[i] {
                return false;
            }
            i += 1;
        }
    }
    true
}

fn chain_leq(a: &Chain, b: &Chain, n: usize) -> bool {
    a.iter()
        .zip(b)
        .all(|(&ma, &mb)| mask_dominated(ma, n, &mask_values(mb, n)))
}

/// All cosets `w <= u`, as chains, via levelwise extension with dominance
/// pruning.  Guarded by the total coset count of the shape.
fn cosets_below(u: &PartialPermutation) -> Result<Vec<Chain>> {
    let shape = u.shape();
    let n = shape.n();
    if n > 31 || shape.coset_count() > 5_000_000 {
        return Err(Error::CapabilityExceeded(format!(
            "coset enumeration for shape with {} fixed points refused",
            shape.coset_count()
        )));
    }
    let bounds = u.sorted_prefixes();
    let mut out = Vec::new();
    let mut chain: Chain = Vec::new();

    fn extend(
        level: usize,
        prev: u32,
        shape: &FlagShape,
        bounds: &[Vec<usize>],
        chain: &mut Chain,
        out: &mut Vec<Chain>,
    ) {
        let n = shape.n();
        if level == shape.levels() {
            out.push(chain.clone());
            return;
        }
        let add = shape.ks()[level] - if level == 0 { 0 } else { shape.ks()[level - 1] };
        let free: Vec<usize> = (0..n).filter(|&b| prev & (1 << b) == 0).collect();
        let mut pick = vec![0usize; add];

        fn choose(
            depth: usize,
            start: usize,
            free: &[usize],
            pick: &mut Vec<usize>,
            level: usize,
            prev: u32,
            shape: &FlagShape,
            bounds: &[Vec<usize>],
            chain: &mut Chain,
            out: &mut Vec<Chain>,
        ) {
            if depth == pick.len() {
                let mask = pick.iter().fold(prev, |m, &b| m | 1 << free[b]);
                if mask_dominated(mask, shape.n(), &bounds[level]) {
                    chain.push(mask);
                    extend(level + 1, mask, shape, bounds, chain, out);
                    chain.pop();
                }
                return;
            }
            for i in start..free.len() {
                pick[depth] = i;
                choose(
                    depth + 1,
                    i + 1,
                    free,
                    pick,
                    level,
                    prev,
                    shape,
                    bounds,
                    chain,
                    out,
                );
            }
        }
        choose(
            0, 0, &free, &mut pick, level, prev, shape, bounds, chain, out,
        );
    }
    extend(0, 0, shape, &bounds, &mut chain, &mut out);
    Ok(out)
}

fn tangent_count(chain: &Chain, n: usize, bounds: &[Vec<usize>]) -> usize {
    let mut count = 0;
    for x in 0..n {
        for y in x + 1..n {
            let (bx, by) = (1u32 << x, 1u32 << y);
            let mut moved = false;
            let mut inside = true;
            for (level, &mask) in chain.iter().enumerate() {
                let has_x = mask & bx != 0;
                let has_y = mask & by != 0;
                let new_mask = if has_x != has_y { mask ^ bx ^ by } else { mask };
                moved |= new_mask != mask;
                if !mask_dominated(new_mask, n, &bounds[level]) {
                    inside = false;
                    break;
                }
            }
            if moved && inside {
                count += 1;
            }
        }
    }
    count
}

// ---------------------------------------------------------------------------
// Tangent spaces and Schubert singular loci.

/// Dimension of the Zariski tangent space to `X_u` at the T-fixed point
/// `e_w`: the number of transpositions `t` with `t.w != w` and `t.w <= u` in
/// the quotient Bruhat order.  Equals `l(u)` exactly at smooth points.
pub fn tangent_dim_tfixed(u: &PartialPermutation, w: &PartialPermutation) -> Result<usize> {
    if u.shape() != w.shape() {
        return Err(Error::ShapeMismatch);
    }
    if u.shape().n() > 31 {
        return Err(Error::CapabilityExceeded(
            "tangent counting uses 32-bit masks".into(),
        ));
    }
    if !w.bruhat_leq(u)? {
        return Err(Error::NotBruhatBelow);
    }
    Ok(tangent_count(
        &chain_of(w),
        u.shape().n(),
        &u.sorted_prefixes(),
    ))
}

/// Maximal `w < u` whose T-fixed points are singular in `X_u`; the components
/// of `X_u^{sing}` for any partial flag shape, by exhaustive tangent counting.
pub fn schubert_singular_components(u: &PartialPermutation) -> Result<Vec<PartialPermutation>> {
    let n = u.shape().n();
    let bounds = u.sorted_prefixes();
    let l_u = u.length();
    let singular: Vec<Chain> = cosets_below(u)?
        .into_iter()
        .filter(|chain| tangent_count(chain, n, &bounds) > l_u)
        .collect();
    let mut maximal: Vec<Chain> = Vec::new();
    for cand in &singular {
        if singular
            .iter()
            .any(|other| other != cand && chain_leq(cand, other, n))
        {
            continue;
        }
        maximal.push(cand.clone());
    }
    let mut out: Vec<PartialPermutation> = maximal
        .iter()
        .map(|c| perm_of_chain(u.shape(), c))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Components of `X_u^{sing}` for a Grassmannian Schubert variety, by the
/// hook rule on partitions.  With `lambda_i = u_{k+1-i} - (k+1-i)` (so that
/// `|lambda| = dim X_u`, complementary to the codimension shape that grows
/// by a maximal hook), each adjacent pair of part-runs `(a^p, b^q)` with
/// `b >= 1` contributes the component replacing the pair with
/// `(a^{p-1}, (b-1)^{q+1})`: one row of the upper run falls to `b - 1`
/// together with the whole lower run.  Empty exactly for linearly embedded
/// sub-Grassmannians.
pub fn schubert_singular_grassmannian(u: &PartialPermutation) -> Result<Vec<PartialPermutation>> {
    if !u.shape().is_grassmannian() {
        return Err(Error::NonGrassmannian);
    }
    let k = u.shape().k_top();
    let lambda: Vec<usize> = (0..k).map(|i| u.entries()[k - 1 - i] - (k - i)).collect();
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for &part in &lambda {
        match runs.last_mut() {
            Some((value, count)) if *value == part => *count += 1,
            _ => runs.push((part, 1)),
        }
    }
    let mut out = Vec::new();
    for t in 0..runs.len().saturating_sub(1) {
        let (va, ca) = runs[t];
        let (vb, cb) = runs[t + 1];
        if vb == 0 {
            continue;
        }
        let mut new_runs = runs.clone();
        if ca == 1 {
            new_runs.splice(t..=t + 1, [(vb - 1, cb + 1)]);
        } else {
            new_runs.splice(t..=t + 1, [(va, ca - 1), (vb - 1, cb + 1)]);
        }
        let mut new_lambda = Vec::with_capacity(k);
        for (value, count) in new_runs {
            new_lambda.extend(std::iter::repeat(value).take(count));
        }
        let entries: Vec<usize> = (1..=k).map(|j| new_lambda[k - j] + j).collect();
        out.push(PartialPermutation::new(u.shape().clone(), entries)?);
    }
    out.sort_unstable();
    Ok(out)
}

/// Non-emptiness of a Grassmannian Richardson variety:
/// `u_i + v_{k+1-i} >= n + 1` for all `i`, equivalently `u >= w_0 v`.
pub fn richardson_nonempty(u: &PartialPermutation, v: &PartialPermutation) -> Result<bool> {
    if u.shape() != v.shape() {
        return Err(Error::ShapeMismatch);
    }
    if !u.shape().is_grassmannian() {
        return Err(Error::NonGrassmannian);
    }
    let k = u.shape().k_top();
    let n = u.shape().n();
    Ok((0..k).all(|i| u.entries()[i] + v.entries()[k - 1 - i] >= n + 1))
}

fn schubert_components_any_shape(u: &PartialPermutation) -> Result<Vec<PartialPermutation>> {
    if u.shape().is_grassmannian() {
        schubert_singular_grassmannian(u)
    } else {
        schubert_singular_components(u)
    }
}

/// `R(u,v)^{sing} = (X_u^{sing} ∩ X^v) ∪ (X_u ∩ X^v_{sing})`: candidates are
/// `R(w, v)` over singular components `w` of `X_u` and `R(u, w')` over
/// singular components `w'` of `X_v` (the opposite side rides on the same
/// standard-position computation through the basis reversal), filtered for
/// non-emptiness and pruned to maximal pairs.
pub fn richardson_singular_locus(datum: &RichardsonDatum) -> Result<SingularLocusReport> {
    if !datum.is_nonempty() {
        return Err(Error::EmptyRichardson);
    }
    let mut candidates: Vec<(PartialPermutation, PartialPermutation, ProvenanceTag)> = Vec::new();
    for w in schubert_components_any_shape(datum.u())? {
        candidates.push((w, datum.v().clone(), ProvenanceTag::SchubertHookU));
    }
    for w in schubert_components_any_shape(datum.v())? {
        candidates.push((datum.u().clone(), w, ProvenanceTag::SchubertHookV));
    }
    candidates.retain(|(a, b, _)| b.reverse_basis().bruhat_leq(a).unwrap());

    // Maximality in the pair order: R(a,b) ⊆ R(a',b') when a <= a', b <= b'.
    let mut keep = vec![true; candidates.len()];
    for i in 0..candidates.len() {
        for j in 0..candidates.len() {
            if i == j || !keep[i] {
                continue;
            }
            let (ai, bi, _) = &candidates[i];
            let (aj, bj, _) = &candidates[j];
            let duplicate = (ai, bi) == (aj, bj) && i > j;
            let absorbed =
                (ai, bi) != (aj, bj) && ai.bruhat_leq(aj).unwrap() && bi.bruhat_leq(bj).unwrap();
            if duplicate || absorbed {
                keep[i] = false;
            }
        }
    }
    let mut components: Vec<Component> = candidates
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|((a, b, tag), _)| {
            let comp = RichardsonDatum::new(a, b).unwrap();
            let dim = comp.dimension();
            Component {
                data: ComponentData::Richardson(comp),
                tag,
                dim,
            }
        })
        .collect();
    components.sort_by(|x, y| {
        let key = |c: &Component| match &c.data {
            ComponentData::Richardson(r) => {
                (c.tag, r.u().entries().to_vec(), r.v().entries().to_vec())
            }
            ComponentData::RankSet(_) => unreachable!(),
        };
        key(x).cmp(&key(y))
    });
    Ok(SingularLocusReport {
        ambient: Ambient::Richardson(datum.clone()),
        ambient_dim: datum.dimension(),
        components,
    })
}

/// `R(u,v)` is smooth exactly when every candidate singular component is
/// empty.
pub fn richardson_smooth_grassmannian(
    u: &PartialPermutation,
    v: &PartialPermutation,
) -> Result<bool> {
    if !richardson_nonempty(u, v)? {
        return Err(Error::EmptyRichardson);
    }
    let datum = RichardsonDatum::new(u.clone(), v.clone())?;
    Ok(richardson_singular_locus(&datum)?.is_smooth())
}

// ---------------------------------------------------------------------------
// Exceptional strata of the projection from the minimal Richardson variety.

/// One stratum construction step: for intervals `W_i` of color `c` and `W_j`
/// of color `c+1` with non-empty intersection, cut `W_j' = W_i ∩ W_j`, then
/// replace the color-`(c+1)` intervals `W_1, ..., W_r` containing `W_j'`
/// (ordered by left endpoint) with `W_j'` and the consecutive spans
/// `span(W_1, W_2), ..., span(W_{r-1}, W_r)`.
fn stratum_candidate(set: &RankSet, colors: &[usize], i: usize, j: usize) -> Option<Vec<Interval>> {
    let ivs = set.intervals();
    let cut = ivs[i].intersect(&ivs[j])?;
    let color_above = colors[j];
    let group: Vec<usize> = (0..ivs.len())
        .filter(|&t| colors[t] == color_above && ivs[t].contains(&cut))
        .collect();
    // Canonical order is by left endpoint already.
    let mut result: Vec<Interval> = (0..ivs.len())
        .filter(|t| !group.contains(t))
        .map(|t| ivs[t])
        .collect();
    result.push(cut);
    for pair in group.windows(2) {
        result.push(ivs[pair[0]].span(&ivs[pair[1]]));
    }
    Some(result)
}

/// Raw interval multisets produced by single stratification steps, before
/// normalization; probe material for the order-independence check.
pub(crate) fn raw_stratum_multisets(set: &RankSet) -> Vec<Vec<Interval>> {
    let colored = assign_colors(set);
    let colors = colored.colors().to_vec();
    let len = set.intervals().len();
    let mut out = Vec::new();
    for i in 0..len {
        for j in 0..len {
            if i != j && colors[j] == colors[i] + 1 {
                if let Some(candidate) = stratum_candidate(set, &colors, i, j) {
                    out.push(candidate);
                }
            }
        }
    }
    out
}

/// Rank sets of the loci where the projection from the minimal Richardson
/// variety has positive-dimensional fibers, closed under repeated
/// stratification and pruned to containment-maximal elements.
pub fn exceptional_strata(set: &RankSet) -> Result<Vec<RankSet>> {
    let mut seen: BTreeSet<RankSet> = BTreeSet::new();
    let mut frontier = vec![set.clone()];
    for _ in 0..set.k() {
        let mut next = Vec::new();
        for current in &frontier {
            let colored = assign_colors(current);
            let colors = colored.colors().to_vec();
            let ivs_len = current.intervals().len();
            for i in 0..ivs_len {
                for j in 0..ivs_len {
                    if i == j || colors[j] != colors[i] + 1 {
                        continue;
                    }
                    let Some(candidate) = stratum_candidate(current, &colors, i, j) else {
                        continue;
                    };
                    if let Some(stratum) = normalize(current.n(), &candidate)? {
                        if seen.insert(stratum.clone()) {
                            next.push(stratum);
                        }
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    prune_to_maximal(seen.into_iter().collect())
}

fn prune_to_maximal(sets: Vec<RankSet>) -> Result<Vec<RankSet>> {
    let mut keep = vec![true; sets.len()];
    for i in 0..sets.len() {
        for j in 0..sets.len() {
            if i != j && keep[i] && sets[i] != sets[j] && sets[i].is_contained_in(&sets[j])? {
                keep[i] = false;
            }
        }
    }
    let mut out: Vec<RankSet> = sets
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(s, _)| s)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// The singular locus of a rank variety: exceptional strata united with the
/// projections of the singular components of the minimal Richardson variety,
/// pruned to maximal components.  Empty exactly when `X(M)` is smooth.
pub fn rank_singular_locus(set: &RankSet) -> Result<SingularLocusReport> {
    let mut tagged: Vec<(RankSet, ProvenanceTag)> = exceptional_strata(set)?
        .into_iter()
        .map(|s| (s, ProvenanceTag::ExceptionalFiber))
        .collect();
    let datum = rich(set);
    for component in richardson_singular_locus(&datum)?.components {
        let ComponentData::Richardson(r) = component.data else {
            continue;
        };
        tagged.push((rank_of(&r)?, ProvenanceTag::SingularPreimage));
    }
    // Dedupe identical rank sets, preferring the exceptional-fiber tag.
    tagged.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    tagged.dedup_by(|a, b| a.0 == b.0);
    let keep_sets = prune_to_maximal(tagged.iter().map(|(s, _)| s.clone()).collect())?;
    let mut components: Vec<Component> = tagged
        .into_iter()
        .filter(|(s, _)| keep_sets.contains(s))
        .map(|(s, tag)| {
            let dim = s.dimension();
            Component {
                data: ComponentData::RankSet(s),
                tag,
                dim,
            }
        })
        .collect();
    components.sort_by(|x, y| {
        let key = |c: &Component| match &c.data {
            ComponentData::RankSet(s) => (c.tag, s.intervals().to_vec()),
            ComponentData::Richardson(_) => unreachable!(),
        };
        key(x).cmp(&key(y))
    });
    Ok(SingularLocusReport {
        ambient: Ambient::RankSet(set.clone()),
        ambient_dim: set.dimension(),
        components,
    })
}

// ---------------------------------------------------------------------------
// Smoothness classification: block products of staircases.

/// A linearly embedded sub-Grassmannian factor `G(j, m)` occupying one
/// contiguous index range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegreBlock {
    pub range: Interval,
    pub j: usize,
    pub m: usize,
}

/// Witness that a rank set is a union of singletons and disjoint staircase
/// blocks, i.e. that `X(M)` is a product of linearly embedded
/// sub-Grassmannians.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegreDecomposition {
    pub quotient_singletons: Vec<Interval>,
    pub blocks: Vec<SegreBlock>,
}

/// Strips singleton intervals, groups the rest into overlap-connected blocks
/// (their ranges are automatically disjoint and contiguous), and checks that
/// each block becomes a full staircase once the singleton indices inside it
/// are compressed away.
pub fn segre_decomposition(set: &RankSet) -> Option<SegreDecomposition> {
    let singles: Vec<Interval> = set
        .intervals()
        .iter()
        .filter(|iv| iv.is_singleton())
        .copied()
        .collect();
    let single_indices: Vec<usize> = singles.iter().map(|iv| iv.l).collect();
    let rest: Vec<Interval> = set
        .intervals()
        .iter()
        .filter(|iv| !iv.is_singleton())
        .copied()
        .collect();

    let mut blocks = Vec::new();
    let mut start = 0;
    while start < rest.len() {
        let mut end = start + 1;
        let mut max_r = rest[start].r;
        while end < rest.len() && rest[end].l <= max_r {
            max_r = max_r.max(rest[end].r);
            end += 1;
        }
        let group = &rest[start..end];
        let a = group[0].l;
        let b = max_r;
        let inside: Vec<usize> = single_indices
            .iter()
            .copied()
            .filter(|&q| a < q && q < b)
            .collect();
        let compressed_len = (b - a + 1) - inside.len();
        let j = group.len();
        if compressed_len < j {
            return None;
        }
        for (t, iv) in group.iter().enumerate() {
            let l = (iv.l - a + 1) - inside.iter().filter(|&&q| q < iv.l).count();
            let r = (iv.r - a + 1) - inside.iter().filter(|&&q| q < iv.r).count();
            if l != t + 1 || r != compressed_len - j + t + 1 {
                return None;
            }
        }
        blocks.push(SegreBlock {
            range: Interval { l: a, r: b },
            j,
            m: compressed_len,
        });
        start = end;
    }
    Some(SegreDecomposition {
        quotient_singletons: singles,
        blocks,
    })
}

/// Whether `X(M)` is smooth, by the block-product classification.
pub fn is_smooth_rank(set: &RankSet) -> bool {
    segre_decomposition(set).is_some()
}

// ---------------------------------------------------------------------------
// T-fixed points.

/// Augmenting-path bipartite matching: can the `k` intervals be matched to
/// distinct indices of `subset`, each index inside its interval?
fn has_perfect_matching(intervals: &[Interval], subset: &[usize]) -> bool {
    let k = intervals.len();
    if subset.len() != k {
        return false;
    }
    let mut assigned: Vec<Option<usize>> = vec![None; subset.len()];
    fn augment(
        iv: usize,
        intervals: &[Interval],
        subset: &[usize],
        assigned: &mut Vec<Option<usize>>,
        visited: &mut Vec<bool>,
    ) -> bool {
        for (s, &idx) in subset.iter().enumerate() {
            if visited[s] || idx < intervals[iv].l || idx > intervals[iv].r {
                continue;
            }
            visited[s] = true;
            if assigned[s].is_none()
                || augment(assigned[s].unwrap(), intervals, subset, assigned, visited)
            {
                assigned[s] = Some(iv);
                return true;
            }
        }
        false
    }
    for iv in 0..k {
        let mut visited = vec![false; subset.len()];
        if !augment(iv, intervals, subset, &mut assigned, &mut visited) {
            return false;
        }
    }
    true
}

/// All T-fixed points of `X(M)`: the `k`-subsets `{i_1 < ... < i_k}` that
/// admit a perfect matching `i_{sigma(j)} ∈ W_j`.
pub fn tfixed_points(set: &RankSet) -> Result<Vec<Vec<usize>>> {
    let n = set.n();
    let k = set.k();
    if n > 24 {
        return Err(Error::CapabilityExceeded(format!(
            "T-fixed enumeration over C({n},{k}) subsets refused for n > 24"
        )));
    }
    let mut out = Vec::new();
    let mut subset = Vec::with_capacity(k);
    fn rec(
        start: usize,
        n: usize,
        k: usize,
        set: &RankSet,
        subset: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if subset.len() == k {
            if has_perfect_matching(set.intervals(), subset) {
                out.push(subset.clone());
            }
            return;
        }
        for idx in start..=n {
            subset.push(idx);
            rec(idx + 1, n, k, set, subset, out);
            subset.pop();
        }
    }
    rec(1, n, k, set, &mut subset, &mut out);
    Ok(out)
}

/// T-fixed points in the smooth locus of `X(M)` for an all-color-one rank
/// set, intervals ordered by left endpoint: `i_j ∈ W_j` with
/// (1) `l(W_{j+1}) > l(W_j) + 1` forcing `i_j ∉ W_{j+1}`, and
/// (2) `r(W_{j-1}) < r(W_j) - 1` forcing `i_j ∉ W_{j-1}`.
pub fn smooth_tfixed_points(set: &RankSet) -> Result<Vec<Vec<usize>>> {
    let colored = assign_colors(set);
    if colored.m() != 1 {
        return Err(Error::ColorPrecondition);
    }
    let ivs = set.intervals();
    let k = ivs.len();
    let mut out = Vec::new();
    for point in tfixed_points(set)? {
        let aligned = point.iter().zip(ivs).all(|(&i, iv)| iv.l <= i && i <= iv.r);
        if !aligned {
            continue;
        }
        let smooth = (0..k).all(|j| {
            let i = point[j];
            let forward = j + 1 >= k
                || ivs[j + 1].l <= ivs[j].l + 1
                || !(ivs[j + 1].l <= i && i <= ivs[j + 1].r);
            let backward =
                j == 0 || ivs[j - 1].r + 1 >= ivs[j].r || !(ivs[j - 1].l <= i && i <= ivs[j - 1].r);
            forward && backward
        });
        if smooth {
            out.push(point);
        }
    }
    Ok(out)
}

/// The Schubert data of the block-diagonal product
/// `G(k_1,n_1) x ... x G(k_r,n_r)` inside `G(sum k_i, n)`; a smooth
/// Richardson variety.
pub fn segre_richardson_permutations(
    factors: &[(usize, usize)],
    n: usize,
) -> Result<(PartialPermutation, PartialPermutation)> {
    let total_k: usize = factors.iter().map(|&(k, _)| k).sum();
    let total_n: usize = factors.iter().map(|&(_, m)| m).sum();
    if factors.is_empty() || total_n > n || factors.iter().any(|&(k, m)| k == 0 || k > m) {
        return Err(Error::InvalidShape(
            "factors must satisfy 0 < k_i <= n_i, sum n_i <= n".into(),
        ));
    }
    let shape = FlagShape::grassmannian(total_k, n)?;
    let mut u_entries = Vec::with_capacity(total_k);
    let mut prefix = 0;
    for &(k, m) in factors {
        prefix += m;
        u_entries.extend(prefix - k + 1..=prefix);
    }
    let mut v_entries = Vec::with_capacity(total_k);
    let mut before = total_n;
    for &(k, m) in factors.iter().rev() {
        before -= m;
        let top = n - before;
        v_entries.extend(top - k + 1..=top);
    }
    Ok((
        PartialPermutation::new(shape.clone(), u_entries)?,
        PartialPermutation::new(shape, v_entries)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(n: usize, pairs: &[(usize, usize)]) -> RankSet {
        RankSet::new(n, pairs.to_vec()).unwrap()
    }

    fn pp(ks: &[usize], n: usize, entries: &[usize]) -> PartialPermutation {
        PartialPermutation::new(FlagShape::new(ks.to_vec(), n).unwrap(), entries.to_vec()).unwrap()
    }

    fn grass(k: usize, n: usize, entries: &[usize]) -> PartialPermutation {
        pp(&[k], n, entries)
    }

    #[test]
    fn hook_rule_matches_the_g38_example() {
        let u = grass(3, 8, &[4, 6, 8]);
        let sing = schubert_singular_grassmannian(&u).unwrap();
        let entries: Vec<&[usize]> = sing.iter().map(|w| w.entries()).collect();
        assert_eq!(entries, vec![&[3, 4, 8][..], &[4, 5, 6][..]]);
    }

    #[test]
    fn hook_rule_smooth_cases() {
        // The full Grassmannian.
        assert!(schubert_singular_grassmannian(&grass(3, 8, &[6, 7, 8]))
            .unwrap()
            .is_empty());
        // Linearly embedded sub-Grassmannian patterns (1,...,j, then a tail).
        assert!(schubert_singular_grassmannian(&grass(3, 8, &[1, 7, 8]))
            .unwrap()
            .is_empty());
        assert!(schubert_singular_grassmannian(&grass(3, 8, &[1, 2, 8]))
            .unwrap()
            .is_empty());
        assert!(schubert_singular_grassmannian(&grass(2, 4, &[2, 3]))
            .unwrap()
            .is_empty());
        // The divisor in G(2,4) is a cone, singular at one point.
        let sing = schubert_singular_grassmannian(&grass(2, 4, &[2, 4])).unwrap();
        assert_eq!(sing.len(), 1);
        assert_eq!(sing[0].entries(), &[1, 2]);
        assert!(schubert_singular_grassmannian(&pp(&[1, 2], 4, &[1, 2])).is_err());
    }

    #[test]
    fn tangent_dim_at_the_top_is_the_length() {
        for u in [
            grass(3, 8, &[4, 6, 8]),
            grass(2, 5, &[3, 5]),
            pp(&[2, 4], 7, &[4, 6, 2, 7]),
        ] {
            assert_eq!(tangent_dim_tfixed(&u, &u).unwrap(), u.length());
        }
    }

    #[test]
    fn tangent_detects_hook_singularities() {
        let u = grass(3, 8, &[4, 6, 8]);
        let w = grass(3, 8, &[3, 4, 8]);
        assert!(tangent_dim_tfixed(&u, &w).unwrap() > u.length());
        let smooth_w = grass(3, 8, &[4, 6, 7]);
        assert_eq!(tangent_dim_tfixed(&u, &smooth_w).unwrap(), u.length());
        let above = grass(3, 8, &[5, 7, 8]);
        assert_eq!(tangent_dim_tfixed(&u, &above), Err(Error::NotBruhatBelow));
    }

    #[test]
    fn tangent_agrees_with_hooks_on_small_grassmannians() {
        for (k, n) in [(2, 4), (2, 5), (3, 5), (3, 6)] {
            let shape = FlagShape::grassmannian(k, n).unwrap();
            let mut subsets = Vec::new();
            fn rec(
                start: usize,
                n: usize,
                k: usize,
                cur: &mut Vec<usize>,
                out: &mut Vec<Vec<usize>>,
            ) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for i in start..=n {
                    cur.push(i);
                    rec(i + 1, n, k, cur, out);
                    cur.pop();
                }
            }
            rec(1, n, k, &mut Vec::new(), &mut subsets);
            for entries in &subsets {
                let u = PartialPermutation::new(shape.clone(), entries.clone()).unwrap();
                let hooks = schubert_singular_grassmannian(&u).unwrap();
                for w_entries in &subsets {
                    let w = PartialPermutation::new(shape.clone(), w_entries.clone()).unwrap();
                    if !w.bruhat_leq(&u).unwrap() {
                        continue;
                    }
                    let singular = tangent_dim_tfixed(&u, &w).unwrap() > u.length();
                    let below_hook = hooks.iter().any(|h| w.bruhat_leq(h).unwrap());
                    assert_eq!(singular, below_hook, "u={entries:?} w={w_entries:?}");
                }
            }
        }
    }

    #[test]
    fn richardson_nonempty_examples() {
        let full = grass(2, 4, &[3, 4]);
        assert!(richardson_nonempty(&full, &full).unwrap());
        let u = grass(3, 8, &[4, 6, 8]);
        assert!(richardson_nonempty(&u, &u).unwrap());
        let low = grass(2, 4, &[1, 2]);
        assert!(!richardson_nonempty(&low, &low).unwrap());
    }

    #[test]
    fn g38_richardson_singular_locus() {
        let u = grass(3, 8, &[4, 6, 8]);
        let datum = RichardsonDatum::new(u.clone(), u.clone()).unwrap();
        let report = richardson_singular_locus(&datum).unwrap();
        assert_eq!(report.components.len(), 4);
        for c in &report.components {
            assert!(c.dim < report.ambient_dim);
        }
        assert!(!richardson_smooth_grassmannian(&u, &u).unwrap());
    }

    #[test]
    fn segre_products_are_smooth() {
        let (u, v) = segre_richardson_permutations(&[(2, 4), (1, 3)], 8).unwrap();
        assert_eq!(u.entries(), &[3, 4, 7]);
        assert_eq!(v.entries(), &[4, 7, 8]);
        assert!(richardson_nonempty(&u, &v).unwrap());
        assert!(richardson_smooth_grassmannian(&u, &v).unwrap());

        // The whole Grassmannian as R(full, full).
        let full = grass(3, 8, &[6, 7, 8]);
        assert!(richardson_smooth_grassmannian(&full, &full).unwrap());
    }

    #[test]
    fn exceptional_strata_of_the_g410_example() {
        let m = rs(10, &[(1, 6), (3, 4), (5, 10), (7, 8)]);
        let strata = exceptional_strata(&m).unwrap();
        assert_eq!(
            strata,
            vec![
                rs(10, &[(1, 6), (3, 4), (7, 7), (8, 8)]),
                rs(10, &[(3, 3), (4, 4), (5, 10), (7, 8)]),
            ]
        );
    }

    #[test]
    fn all_color_one_has_no_strata() {
        let m = rs(8, &[(1, 4), (3, 6), (5, 8)]);
        assert!(exceptional_strata(&m).unwrap().is_empty());
    }

    #[test]
    fn g58_strata_obey_the_codimension_bound() {
        let m = rs(8, &[(1, 7), (2, 6), (3, 4), (4, 5), (6, 8)]);
        let dim = m.dimension();
        let strata = exceptional_strata(&m).unwrap();
        assert!(!strata.is_empty());
        for s in &strata {
            assert!(s.dimension() + 3 <= dim, "stratum {s:?} too large");
        }
    }

    #[test]
    fn rank_singular_locus_of_the_g410_example() {
        let m = rs(10, &[(1, 6), (3, 4), (5, 10), (7, 8)]);
        let report = rank_singular_locus(&m).unwrap();
        let got: Vec<(ProvenanceTag, RankSet)> = report
            .components
            .iter()
            .map(|c| match &c.data {
                ComponentData::RankSet(s) => (c.tag, s.clone()),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(
            got,
            vec![
                (
                    ProvenanceTag::ExceptionalFiber,
                    rs(10, &[(1, 6), (3, 4), (7, 7), (8, 8)])
                ),
                (
                    ProvenanceTag::ExceptionalFiber,
                    rs(10, &[(3, 3), (4, 4), (5, 10), (7, 8)])
                ),
                (
                    ProvenanceTag::SingularPreimage,
                    rs(10, &[(1, 5), (3, 4), (5, 6), (7, 8)])
                ),
                (
                    ProvenanceTag::SingularPreimage,
                    rs(10, &[(3, 4), (5, 6), (6, 10), (7, 8)])
                ),
            ]
        );
    }

    #[test]
    fn smooth_rank_varieties_have_empty_locus() {
        let staircase = rs(4, &[(1, 3), (2, 4)]);
        assert!(rank_singular_locus(&staircase).unwrap().is_smooth());
        let g712 = rs(
            12,
            &[(1, 5), (2, 6), (3, 7), (4, 4), (8, 10), (9, 11), (12, 12)],
        );
        assert!(rank_singular_locus(&g712).unwrap().is_smooth());
    }

    #[test]
    fn segre_decomposition_examples() {
        let g712 = rs(
            12,
            &[(1, 5), (2, 6), (3, 7), (4, 4), (8, 10), (9, 11), (12, 12)],
        );
        let d = segre_decomposition(&g712).unwrap();
        assert_eq!(d.quotient_singletons.len(), 2);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!((d.blocks[0].j, d.blocks[0].m), (3, 6));
        assert_eq!((d.blocks[1].j, d.blocks[1].m), (2, 4));

        assert!(segre_decomposition(&rs(4, &[(1, 3), (2, 4)])).is_some());
        assert!(segre_decomposition(&rs(10, &[(1, 6), (3, 4), (5, 10), (7, 8)])).is_none());
    }

    #[test]
    fn tfixed_points_examples() {
        // The G(3,8) example: no smooth torus fixed points at all.
        let m = rs(8, &[(1, 4), (3, 6), (5, 8)]);
        let fixed = tfixed_points(&m).unwrap();
        assert!(!fixed.is_empty());
        assert!(smooth_tfixed_points(&m).unwrap().is_empty());

        // The full staircase of G(2,4): all six coordinate planes, all smooth.
        let staircase = rs(4, &[(1, 3), (2, 4)]);
        let fixed = tfixed_points(&staircase).unwrap();
        assert_eq!(fixed.len(), 6);
        assert_eq!(smooth_tfixed_points(&staircase).unwrap().len(), 6);

        // Disjoint intervals force one index per interval.
        let disjoint = rs(6, &[(1, 2), (4, 6)]);
        assert_eq!(tfixed_points(&disjoint).unwrap().len(), 6);

        // Color precondition.
        let nested = rs(6, &[(1, 4), (2, 3)]);
        assert_eq!(smooth_tfixed_points(&nested), Err(Error::ColorPrecondition));
    }

    #[test]
    fn g25_smooth_tfixed_cross_check() {
        let m = rs(5, &[(1, 3), (3, 5)]);
        let fixed = tfixed_points(&m).unwrap();
        let smooth = smooth_tfixed_points(&m).unwrap();
        for s in &smooth {
            assert!(fixed.contains(s));
        }
        // Cross-check each verdict against the tangent dimension on rich(M):
        // e_w smooth in R(u,v) iff tangent dims match at both Schubert sides.
        let datum = rich(&m);
        let (u, v) = (datum.u(), datum.v());
        for point in &fixed {
            let w = grass(2, 5, point);
            let in_sing_u = tangent_dim_tfixed(u, &w).unwrap() > u.length();
            let wr = w.reverse_basis();
            let vr = v.clone();
            let in_sing_v = tangent_dim_tfixed(&vr, &wr).unwrap() > vr.length();
            let smooth_here = !in_sing_u && !in_sing_v;
            assert_eq!(smooth.contains(point), smooth_here, "point {point:?}");
        }
    }
}
