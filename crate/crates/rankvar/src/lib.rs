//! Exact computation with rank sets, projection varieties, and Richardson
//! varieties in type-A Grassmannians and partial flag varieties: conversions
//! between rank sets and minimal Richardson data, dimension and
//! singular-locus computation, smoothness classification, and enumeration by
//! dimension with q-Stirling verification, cross-checked by brute-force
//! finite-field oracles.

pub mod bridge;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod io;
pub mod oracle;
pub mod perm;
pub mod qpoly;
pub mod rankset;
pub mod singular;

pub use bridge::{lift_point, rank_of, rich, roundtrip_rank_set, LiftedFlag, RichardsonDatum};
pub use error::{Error, Result};
pub use perm::{FlagShape, PartialPermutation};
pub use qpoly::QPolynomial;
pub use rankset::{assign_colors, normalize, ColoredRankSet, Interval, RankSet};
pub use singular::{
    exceptional_strata, is_smooth_rank, rank_singular_locus, richardson_nonempty,
    richardson_singular_locus, richardson_smooth_grassmannian, schubert_singular_grassmannian,
    segre_decomposition, smooth_tfixed_points, tangent_dim_tfixed, tfixed_points,
    SingularLocusReport,
};
