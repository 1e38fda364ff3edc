//! Text and JSON forms for the domain types.
//!
//! Rank sets: `n=8 k=5 : 1-7 2-6 3-4 4-5 6-8`, JSON
//! `{"n":8,"intervals":[[1,7],...]}`, and the compact table notation
//! `n=4 (2 3,1)` with each parenthesized group a consecutive run of basis
//! indices, groups listed by descending left endpoint.  The empty result of
//! a normalization renders as the literal `EMPTY`.
//!
//! Partial permutations: `4 6 | 2 7` (blocks separated by `|`; the shape
//! supplies `n`), JSON `{"n":7,"ks":[2,4],"entries":[4,6,2,7]}`.

use crate::bridge::RichardsonDatum;
use crate::error::{Error, Result};
use crate::perm::{FlagShape, PartialPermutation};
use crate::rankset::{Interval, RankSet};
use crate::singular::{Ambient, Component, ComponentData, SingularLocusReport};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.l, self.r)
    }
}

impl fmt::Display for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} k={} :", self.n(), self.k())?;
        for iv in self.intervals() {
            write!(f, " {iv}")?;
        }
        Ok(())
    }
}

/// The compact table notation: groups by descending left endpoint, each
/// group the full run of indices of one interval.
pub fn paper_notation(set: &RankSet) -> String {
    let mut groups: Vec<&Interval> = set.intervals().iter().collect();
    groups.sort_by_key(|iv| std::cmp::Reverse(iv.l));
    let body = groups
        .iter()
        .map(|iv| {
            (iv.l..=iv.r)
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(",");
    format!("({body})")
}

fn parse_paper_notation(n: usize, body: &str) -> Result<RankSet> {
    let inner = body
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected parenthesized groups, got {body:?}")))?;
    let mut pairs = Vec::new();
    for group in inner.split(',') {
        let indices: Vec<usize> = group
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad index {t:?}")))
            })
            .collect::<Result<_>>()?;
        if indices.is_empty() {
            return Err(Error::Parse("empty group".into()));
        }
        for w in indices.windows(2) {
            if w[1] != w[0] + 1 {
                return Err(Error::Parse(format!(
                    "group {group:?} is not a consecutive run of indices"
                )));
            }
        }
        pairs.push((indices[0], *indices.last().unwrap()));
    }
    RankSet::new(n, pairs)
}

impl FromStr for RankSet {
    type Err = Error;

    /// Accepts the standard text form, JSON, and the `n=... (...)` table
    /// notation.
    fn from_str(s: &str) -> Result<RankSet> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
        }
        let Some(rest) = s.strip_prefix("n=") else {
            return Err(Error::Parse(format!(
                "expected `n=... k=... : l-r ...`, JSON, or `n=... (...)`, got {s:?}"
            )));
        };
        let (n_str, tail) = rest
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::Parse("missing intervals after n=".into()))?;
        let n: usize = n_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad n {n_str:?}")))?;
        let tail = tail.trim();
        if tail.starts_with('(')
            || tail
                .strip_prefix(':')
                .map(str::trim)
                .is_some_and(|t| t.starts_with('('))
        {
            let body = tail.strip_prefix(':').map(str::trim).unwrap_or(tail);
            return parse_paper_notation(n, body);
        }
        // `k=... :` is informative only; the interval list is authoritative.
        let after_k = match tail.strip_prefix("k=") {
            Some(t) => t
                .split_once(':')
                .map(|(_, ivs)| ivs)
                .ok_or_else(|| Error::Parse("missing `:` after k=".into()))?,
            None => tail.strip_prefix(':').unwrap_or(tail),
        };
        let mut pairs = Vec::new();
        for token in after_k.split_whitespace() {
            let (l, r) = token
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("expected l-r, got {token:?}")))?;
            pairs.push((
                l.parse()
                    .map_err(|_| Error::Parse(format!("bad endpoint {l:?}")))?,
                r.parse()
                    .map_err(|_| Error::Parse(format!("bad endpoint {r:?}")))?,
            ));
        }
        RankSet::new(n, pairs)
    }
}

#[derive(Serialize, Deserialize)]
struct RankSetWire {
    n: usize,
    intervals: Vec<(usize, usize)>,
}

impl Serialize for RankSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RankSetWire {
            n: self.n(),
            intervals: self.intervals().iter().map(|iv| (iv.l, iv.r)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RankSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = RankSetWire::deserialize(deserializer)?;
        RankSet::new(wire.n, wire.intervals).map_err(D::Error::custom)
    }
}

impl fmt::Display for FlagShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks = self
            .ks()
            .iter()
            .map(|k| k.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{ks};{}", self.n())
    }
}

impl FromStr for FlagShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<FlagShape> {
        let (ks_str, n_str) = s
            .trim()
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected k1,k2,...;n, got {s:?}")))?;
        let ks = ks_str
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad k {t:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        let n = n_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad n {n_str:?}")))?;
        FlagShape::new(ks, n)
    }
}

impl fmt::Display for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut start = 0;
        let mut blocks = Vec::new();
        for &k in self.shape().ks() {
            blocks.push(
                self.entries()[start..k]
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            start = k;
        }
        write!(f, "{}", blocks.join(" | "))
    }
}

/// Parses the `4 6 | 2 7` block form against an explicit shape.
pub fn parse_permutation(shape: &FlagShape, text: &str) -> Result<PartialPermutation> {
    let text = text.trim();
    if text.starts_with('{') {
        let p: PartialPermutation =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if p.shape() != shape {
            return Err(Error::ShapeMismatch);
        }
        return Ok(p);
    }
    let mut entries = Vec::new();
    let mut block_sizes = Vec::new();
    for block in text.split('|') {
        let vals: Vec<usize> = block
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?}")))
            })
            .collect::<Result<_>>()?;
        block_sizes.push(vals.len());
        entries.extend(vals);
    }
    let expected: Vec<usize> = {
        let mut prev = 0;
        shape
            .ks()
            .iter()
            .map(|&k| {
                let size = k - prev;
                prev = k;
                size
            })
            .collect()
    };
    if block_sizes != expected {
        return Err(Error::Parse(format!(
            "block sizes {block_sizes:?} do not match shape {shape}"
        )));
    }
    PartialPermutation::new(shape.clone(), entries)
}

#[derive(Serialize, Deserialize)]
struct PermWire {
    n: usize,
    ks: Vec<usize>,
    entries: Vec<usize>,
}

impl Serialize for PartialPermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PermWire {
            n: self.shape().n(),
            ks: self.shape().ks().to_vec(),
            entries: self.entries().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PartialPermutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = PermWire::deserialize(deserializer)?;
        let shape = FlagShape::new(wire.ks, wire.n).map_err(D::Error::custom)?;
        PartialPermutation::new(shape, wire.entries).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RichardsonWire {
    shape: ShapeWire,
    u: Vec<usize>,
    v: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ShapeWire {
    n: usize,
    ks: Vec<usize>,
}

impl Serialize for RichardsonDatum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RichardsonWire {
            shape: ShapeWire {
                n: self.shape().n(),
                ks: self.shape().ks().to_vec(),
            },
            u: self.u().entries().to_vec(),
            v: self.v().entries().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RichardsonDatum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = RichardsonWire::deserialize(deserializer)?;
        let shape = FlagShape::new(wire.shape.ks, wire.shape.n).map_err(D::Error::custom)?;
        let u = PartialPermutation::new(shape.clone(), wire.u).map_err(D::Error::custom)?;
        let v = PartialPermutation::new(shape, wire.v).map_err(D::Error::custom)?;
        RichardsonDatum::new(u, v).map_err(D::Error::custom)
    }
}

#[derive(Serialize)]
struct TaggedWire<'a, T: Serialize> {
    kind: &'a str,
    data: T,
}

impl Serialize for Ambient {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Ambient::RankSet(s) => TaggedWire {
                kind: "rank_set",
                data: s,
            }
            .serialize(serializer),
            Ambient::Richardson(r) => TaggedWire {
                kind: "richardson",
                data: r,
            }
            .serialize(serializer),
        }
    }
}

#[derive(Serialize)]
struct ComponentWire<'a> {
    kind: &'a str,
    data: serde_json::Value,
    tag: &'a str,
    dim: usize,
}

impl Serialize for Component {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (kind, data) = match &self.data {
            ComponentData::RankSet(s) => ("rank_set", serde_json::to_value(s)),
            ComponentData::Richardson(r) => ("richardson", serde_json::to_value(r)),
        };
        ComponentWire {
            kind,
            data: data.map_err(serde::ser::Error::custom)?,
            tag: self.tag.as_str(),
            dim: self.dim,
        }
        .serialize(serializer)
    }
}

impl Serialize for SingularLocusReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct ReportWire<'a> {
            ambient: &'a Ambient,
            ambient_dim: usize,
            components: &'a [Component],
        }
        ReportWire {
            ambient: &self.ambient,
            ambient_dim: self.ambient_dim,
            components: &self.components,
        }
        .serialize(serializer)
    }
}

/// Renders a normalization result; the empty outcome is the literal `EMPTY`.
pub fn render_normalized(value: &Option<RankSet>) -> String {
    match value {
        None => "EMPTY".to_string(),
        Some(set) => set.to_string(),
    }
}

/// Parses either a rank set or the literal `EMPTY`.
pub fn parse_normalized(text: &str) -> Result<Option<RankSet>> {
    let text = text.trim();
    if text == "EMPTY" {
        return Ok(None);
    }
    text.parse().map(Some)
}

/// Text rendering of a singular-locus report, one component per line.
pub fn render_report(report: &SingularLocusReport, paper: bool) -> String {
    let mut out = String::new();
    match &report.ambient {
        Ambient::RankSet(s) => {
            let shown = if paper {
                format!("n={} {}", s.n(), paper_notation(s))
            } else {
                s.to_string()
            };
            out.push_str(&format!("ambient: {shown} (dim {})\n", report.ambient_dim));
        }
        Ambient::Richardson(r) => {
            out.push_str(&format!(
                "ambient: shape {} u: {} v: {} (dim {})\n",
                r.shape(),
                r.u(),
                r.v(),
                report.ambient_dim
            ));
        }
    }
    if report.components.is_empty() {
        out.push_str("smooth: no singular components\n");
        return out;
    }
    out.push_str("singular locus components:\n");
    for c in &report.components {
        match &c.data {
            ComponentData::RankSet(s) => {
                let shown = if paper {
                    format!("n={} {}", s.n(), paper_notation(s))
                } else {
                    s.to_string()
                };
                out.push_str(&format!("  {:<18} dim={} {shown}\n", c.tag.as_str(), c.dim));
            }
            ComponentData::Richardson(r) => {
                out.push_str(&format!(
                    "  {:<18} dim={} shape {} u: {} v: {}\n",
                    c.tag.as_str(),
                    c.dim,
                    r.shape(),
                    r.u(),
                    r.v()
                ));
            }
        }
    }
    out
}
