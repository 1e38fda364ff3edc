//! The two conversions between rank sets and Richardson data: `rich` builds
//! the minimal Richardson variety `R(u,v)(M)` of a rank set, `rank_of`
//! recovers the rank set `M(R(u,v))` of a Richardson variety, and
//! `lift_point` realizes the point-lifting construction showing the
//! projection is onto.
//!
//! Flag conventions: `F_i` is the span of the first `i` basis vectors, `G_i`
//! the span of the last `i`, and `R(u,v) = X_u(F) ∩ X_v(G)`.

use crate::error::{Error, Result};
use crate::field::{matrix_rank, ExactField};
use crate::perm::{FlagShape, PartialPermutation};
use crate::rankset::{assign_colors, Interval, RankSet};

/// A Richardson variety `R(u,v) = X_u(F) ∩ X_v(G)` in a partial flag variety.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RichardsonDatum {
    u: PartialPermutation,
    v: PartialPermutation,
}

impl RichardsonDatum {
    pub fn new(u: PartialPermutation, v: PartialPermutation) -> Result<Self> {
        if u.shape() != v.shape() {
            return Err(Error::ShapeMismatch);
        }
        Ok(RichardsonDatum { u, v })
    }

    pub fn shape(&self) -> &FlagShape {
        self.u.shape()
    }

    pub fn u(&self) -> &PartialPermutation {
        &self.u
    }

    pub fn v(&self) -> &PartialPermutation {
        &self.v
    }

    /// `R(u,v)` is non-empty exactly when `w_0 v <= u`, i.e. when the
    /// basis-reversal of `v` lies below `u` in the quotient Bruhat order.
    pub fn is_nonempty(&self) -> bool {
        self.v.reverse_basis().bruhat_leq(&self.u).unwrap()
    }

    /// `dim R(u,v) = l(u) - l(w_0 v)`; only meaningful when non-empty.
    pub fn dimension(&self) -> usize {
        self.u.length() - self.v.reverse_basis().length()
    }
}

/// Algorithm associating the minimal Richardson variety to a rank set:
/// color the intervals by chain depth, let `k_j` count intervals of color at
/// most `j`, and list right endpoints (for `u`) and reflected left endpoints
/// `n - l + 1` (for `v`) color-major, ascending within each color.
pub fn rich(set: &RankSet) -> RichardsonDatum {
    let colored = assign_colors(set);
    let n = set.n();
    let shape = FlagShape::new(colored.ks(), n).expect("colors yield a valid shape");
    let mut u_entries = Vec::with_capacity(set.k());
    let mut v_entries = Vec::with_capacity(set.k());
    for color in 1..=colored.m() {
        let mut rights: Vec<usize> = colored
            .indices_of_color(color)
            .iter()
            .map(|&i| set.intervals()[i].r)
            .collect();
        rights.sort_unstable();
        u_entries.extend(rights);
        let mut lefts: Vec<usize> = colored
            .indices_of_color(color)
            .iter()
            .map(|&i| n - set.intervals()[i].l + 1)
            .collect();
        lefts.sort_unstable();
        v_entries.extend(lefts);
    }
    let u = PartialPermutation::new(shape.clone(), u_entries)
        .expect("distinct right endpoints give a valid permutation");
    let v = PartialPermutation::new(shape, v_entries)
        .expect("distinct left endpoints give a valid permutation");
    RichardsonDatum { u, v }
}

/// Algorithm associating a rank set to a Richardson variety.
///
/// Each step takes `alpha`, the smallest remaining `u`-entry of color `c`,
/// and for every `d >= c` the largest remaining `v`-entry `beta^d` of color
/// at most `d`; `beta` is the smallest qualifying `beta^d`, where `d`
/// qualifies when `t_d^{v^{-1}(beta^d)} >= k_d - s_d^{u^{-1}(alpha)} + 1`.
/// The emitted interval is `F_alpha ∩ G_beta = [n - beta + 1, alpha]`.
///
/// The qualification test is applied at every step including the first; at
/// the first step `d = m` always qualifies, so this refines rather than
/// changes the stated initial step.
pub fn rank_of(datum: &RichardsonDatum) -> Result<RankSet> {
    let u = datum.u();
    let v = datum.v();
    let shape = datum.shape();
    let n = shape.n();
    let m = shape.levels();
    let ks = shape.ks();
    let k_top = shape.k_top();

    let mut u_left = vec![true; k_top];
    let mut v_left = vec![true; k_top];
    let mut intervals = Vec::with_capacity(k_top);

    for step in 0..k_top {
        let (alpha_pos, alpha) = (0..k_top)
            .filter(|&i| u_left[i])
            .map(|i| (i, u.entries()[i]))
            .min_by_key(|&(_, e)| e)
            .expect("u pool is non-empty");
        let c = u.color(alpha_pos + 1)?;
        let s_alpha = u.multi_index(alpha_pos + 1)?;

        let mut beta: Option<(usize, usize)> = None;
        for d in c..=m {
            let candidate = (0..k_top)
                .filter(|&i| v_left[i] && v.color(i + 1).unwrap() <= d)
                .map(|i| (i, v.entries()[i]))
                .max_by_key(|&(_, e)| e);
            let Some((beta_pos, beta_d)) = candidate else {
                continue;
            };
            let t_beta = v.multi_index(beta_pos + 1)?;
            if t_beta[d - 1] >= ks[d - 1] - s_alpha[d - 1] + 1 {
                match beta {
                    Some((_, b)) if b <= beta_d => {}
                    _ => beta = Some((beta_pos, beta_d)),
                }
            }
        }
        let Some((beta_pos, beta_val)) = beta else {
            return Err(Error::NoQualifyingBeta { step: step + 1 });
        };
        if n - beta_val + 1 > alpha {
            // F_alpha ∩ G_beta = 0: the Richardson input is empty.
            return Err(Error::EmptyRichardson);
        }
        u_left[alpha_pos] = false;
        v_left[beta_pos] = false;
        intervals.push(Interval::new(n - beta_val + 1, alpha)?);
    }

    RankSet::from_intervals(n, intervals)
}

/// `rank_of(rich(M))`; contracted to return `M` itself.
pub fn roundtrip_rank_set(set: &RankSet) -> Result<RankSet> {
    rank_of(&rich(set))
}

/// A nested flag of explicit coordinate vectors over an exact field.
#[derive(Debug, Clone)]
pub struct LiftedFlag<F: ExactField> {
    n: usize,
    levels: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: ExactField> LiftedFlag<F> {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Basis vectors of `V_1, ..., V_m`, innermost first.
    pub fn levels(&self) -> &[Vec<Vec<F::Elem>>] {
        &self.levels
    }
}

fn support_in_interval<F: ExactField>(field: &F, vector: &[F::Elem], iv: &Interval) -> bool {
    vector
        .iter()
        .enumerate()
        .all(|(idx, x)| field.is_zero(x) || (iv.l <= idx + 1 && idx + 1 <= iv.r))
}

/// Point lifting: given one spanning vector `b_i` per
/// interval, build the flag `V_1 ⊂ ... ⊂ V_m` through `V_m = span(b_i)` by
/// summing, at each lower level `s`, the level-`s+1` vectors lying in each
/// interval of the truncated rank set; the truncated rank sets come from
/// running `rank_of` on the truncations of `rich(M)`.
///
/// `basis` is aligned with `set.intervals()`.  Each `b_i` must be non-zero,
/// supported on its interval, and the family independent; degeneracies at
/// lower levels (possible for non-generic choices) are reported as errors.
pub fn lift_point<F: ExactField>(
    field: &F,
    set: &RankSet,
    basis: &[Vec<F::Elem>],
) -> Result<LiftedFlag<F>> {
    let n = set.n();
    let k = set.k();
    if basis.len() != k {
        return Err(Error::DegenerateLift(format!(
            "need one vector per interval: got {} for k = {k}",
            basis.len()
        )));
    }
    for (b, iv) in basis.iter().zip(set.intervals()) {
        if b.len() != n {
            return Err(Error::DegenerateLift(format!(
                "vector length {} does not match n = {n}",
                b.len()
            )));
        }
        if b.iter().all(|x| field.is_zero(x)) {
            return Err(Error::DegenerateLift(format!(
                "zero vector for interval {}-{}",
                iv.l, iv.r
            )));
        }
        if !support_in_interval(field, b, iv) {
            return Err(Error::DegenerateLift(format!(
                "vector support leaves interval {}-{}",
                iv.l, iv.r
            )));
        }
    }
    if matrix_rank(field, basis) != k {
        return Err(Error::DegenerateLift("chosen vectors are dependent".into()));
    }

    let datum = rich(set);
    let m = datum.shape().levels();
    // Rank sets of the truncated Richardson varieties, levels 1..m.  The top
    // level reproduces the input rank set.
    let mut level_sets = Vec::with_capacity(m);
    for s in 1..=m {
        let truncated = RichardsonDatum::new(datum.u().truncate(s)?, datum.v().truncate(s)?)?;
        level_sets.push(rank_of(&truncated)?);
    }
    debug_assert_eq!(level_sets[m - 1], *set);

    let mut levels: Vec<Vec<Vec<F::Elem>>> = vec![Vec::new(); m];
    levels[m - 1] = basis.to_vec();
    for s in (0..m.saturating_sub(1)).rev() {
        let mut vectors = Vec::with_capacity(level_sets[s].k());
        for iv in level_sets[s].intervals() {
            let mut acc = vec![field.zero(); n];
            let mut used = 0;
            for b in &levels[s + 1] {
                if support_in_interval(field, b, iv) {
                    for (slot, x) in acc.iter_mut().zip(b) {
                        *slot = field.add(slot, x);
                    }
                    used += 1;
                }
            }
            if used == 0 {
                return Err(Error::DegenerateLift(format!(
                    "no level-{} vector lies in interval {}-{}",
                    s + 2,
                    iv.l,
                    iv.r
                )));
            }
            vectors.push(acc);
        }
        if matrix_rank(field, &vectors) != level_sets[s].k() {
            return Err(Error::DegenerateLift(format!(
                "level {} vectors are dependent",
                s + 1
            )));
        }
        levels[s] = vectors;
    }
    Ok(LiftedFlag { n, levels })
}
