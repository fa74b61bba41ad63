//! Open quipus, closed quipus and daggers: parameter descriptors, realization,
//! canonical forms, recognition, screening and enumeration.
//!
//! Notation follows `P_(k0,...,k_{r+1})^(m0,...,m_r)` for open quipus (`ks` is the
//! subscript list, `ms` the superscript list) and `C_(k1,...,k_r)^(m1,...,m_r)`
//! for closed ones.

mod canonical;
mod classify;
mod enumerate;
mod family;
mod screen;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::QuipuError;
use crate::graph::Graph;

pub use classify::classify;
pub use enumerate::{enumerate_quipus, Kinds};
pub use family::{
    boundary_closed_quipu, closed_equal_radius_quipu, exceptional_comparator, exceptional_specs,
    losing_closed_quipu, spider, theorem_family,
};
pub use screen::{diameter_bound_ok, screen, ScreenReport};

/// Open quipu: backbone `k0` pendant vertices, branch `b0`, `k1` internal
/// vertices, `b1`, ..., `b_r`, `k_{r+1}` pendant vertices; `b_i` carries a
/// pendant path of length `m_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OpenQuipu {
    ks: Vec<usize>,
    ms: Vec<usize>,
}

/// Closed quipu: cycle `b1`, `k1` internal vertices, `b2`, ..., `b_r`, `k_r`
/// internal vertices back to `b1`; `b_i` carries a pendant path of length `m_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClosedQuipu {
    ks: Vec<usize>,
    ms: Vec<usize>,
}

/// Star of order four with a pendant path of length `tail` at its center.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Dagger {
    pub tail: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum QuipuSpec {
    Open(OpenQuipu),
    Closed(ClosedQuipu),
    Dagger(Dagger),
}

impl OpenQuipu {
    pub fn new(ks: Vec<usize>, ms: Vec<usize>) -> Result<Self, QuipuError> {
        if ms.is_empty() || ks.len() != ms.len() + 1 {
            return Err(QuipuError::Shape(format!(
                "open quipu needs |ks| = |ms| + 1 >= 2, got {} and {}",
                ks.len(),
                ms.len()
            )));
        }
        Ok(OpenQuipu { ks, ms })
    }

    /// Shorthand for tests and tables; panics on a malformed shape.
    pub fn of(ks: &[usize], ms: &[usize]) -> Self {
        OpenQuipu::new(ks.to_vec(), ms.to_vec()).expect("well-formed open quipu")
    }

    /// The path on `n ≥ 1` vertices.
    pub fn path(n: usize) -> Self {
        OpenQuipu::of(&[0, n.saturating_sub(1)], &[0])
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    pub fn ms(&self) -> &[usize] {
        &self.ms
    }

    pub fn r(&self) -> usize {
        self.ms.len() - 1
    }

    pub fn order(&self) -> usize {
        self.ks.iter().sum::<usize>() + self.ms.iter().sum::<usize>() + self.r() + 1
    }

    /// Edges from the `k0` end to the `k_{r+1}` end.
    pub fn backbone_length(&self) -> usize {
        self.ks.iter().sum::<usize>() + self.r()
    }

    /// Vertex at the `k_{r+1}` end of the backbone in `realize`.
    pub fn right_end(&self) -> usize {
        self.backbone_length()
    }

    pub fn realize(&self) -> Graph {
        let r = self.r();
        let mut edges = Vec::with_capacity(self.order());
        let mut next = 0usize;
        let mut branches = Vec::with_capacity(r + 1);
        let mut prev: Option<usize> = None;
        let mut chain = |count: usize, prev: &mut Option<usize>, edges: &mut Vec<(usize, usize)>| {
            for _ in 0..count {
                let v = next;
                next += 1;
                if let Some(p) = *prev {
                    edges.push((p, v));
                }
                *prev = Some(v);
            }
        };
        for i in 0..=r {
            chain(self.ks[i], &mut prev, &mut edges);
            chain(1, &mut prev, &mut edges);
            branches.push(prev.expect("branch vertex just placed"));
        }
        chain(self.ks[r + 1], &mut prev, &mut edges);
        for (i, &b) in branches.iter().enumerate() {
            let mut at = Some(b);
            chain(self.ms[i], &mut at, &mut edges);
        }
        Graph::new(next, &edges).expect("quipu edges are in range")
    }

    pub fn canonicalize(&self) -> OpenQuipu {
        canonical::canonical_open(self)
    }

    /// The mirror image: `ks` and `ms` reversed.
    pub fn reversed(&self) -> OpenQuipu {
        OpenQuipu {
            ks: self.ks.iter().rev().copied().collect(),
            ms: self.ms.iter().rev().copied().collect(),
        }
    }
}

impl ClosedQuipu {
    pub fn new(ks: Vec<usize>, ms: Vec<usize>) -> Result<Self, QuipuError> {
        if ks.is_empty() || ks.len() != ms.len() {
            return Err(QuipuError::Shape(format!(
                "closed quipu needs |ks| = |ms| >= 1, got {} and {}",
                ks.len(),
                ms.len()
            )));
        }
        let cycle = ks.iter().sum::<usize>() + ks.len();
        if cycle < 3 {
            return Err(QuipuError::CycleTooShort(cycle));
        }
        Ok(ClosedQuipu { ks, ms })
    }

    pub fn of(ks: &[usize], ms: &[usize]) -> Self {
        ClosedQuipu::new(ks.to_vec(), ms.to_vec()).expect("well-formed closed quipu")
    }

    /// The cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Self {
        ClosedQuipu::of(&[n - 1], &[0])
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    pub fn ms(&self) -> &[usize] {
        &self.ms
    }

    pub fn r(&self) -> usize {
        self.ms.len()
    }

    pub fn cycle_length(&self) -> usize {
        self.ks.iter().sum::<usize>() + self.r()
    }

    pub fn order(&self) -> usize {
        self.cycle_length() + self.ms.iter().sum::<usize>()
    }

    pub fn realize(&self) -> Graph {
        let c = self.cycle_length();
        let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
        let mut next = c;
        let mut at = 0;
        for (i, &m) in self.ms.iter().enumerate() {
            let mut prev = at;
            for _ in 0..m {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            at += self.ks[i] + 1;
        }
        Graph::new(next, &edges).expect("quipu edges are in range")
    }

    pub fn canonicalize(&self) -> ClosedQuipu {
        canonical::canonical_closed(self)
    }
}

impl Dagger {
    pub fn order(&self) -> usize {
        self.tail + 4
    }

    /// Center 0, leaves 1..=3, tail 4..; the tail tip is the last vertex.
    pub fn realize(&self) -> Graph {
        let (g, _) = Graph::star(3).with_pendant_path(0, self.tail);
        g
    }
}

impl QuipuSpec {
    pub fn order(&self) -> usize {
        match self {
            QuipuSpec::Open(q) => q.order(),
            QuipuSpec::Closed(q) => q.order(),
            QuipuSpec::Dagger(q) => q.order(),
        }
    }

    pub fn realize(&self) -> Graph {
        match self {
            QuipuSpec::Open(q) => q.realize(),
            QuipuSpec::Closed(q) => q.realize(),
            QuipuSpec::Dagger(q) => q.realize(),
        }
    }

    /// Canonical representative of the same graph; a zero-tail dagger is the
    /// spider with three unit legs.
    pub fn canonicalize(&self) -> QuipuSpec {
        match self {
            QuipuSpec::Open(q) => QuipuSpec::Open(q.canonicalize()),
            QuipuSpec::Closed(q) => QuipuSpec::Closed(q.canonicalize()),
            QuipuSpec::Dagger(Dagger { tail: 0 }) => QuipuSpec::Open(OpenQuipu::of(&[1, 1], &[1])),
            QuipuSpec::Dagger(d) => QuipuSpec::Dagger(*d),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            QuipuSpec::Open(_) => "open",
            QuipuSpec::Closed(_) => "closed",
            QuipuSpec::Dagger(_) => "dagger",
        }
    }
}

impl From<OpenQuipu> for QuipuSpec {
    fn from(q: OpenQuipu) -> Self {
        QuipuSpec::Open(q)
    }
}

impl From<ClosedQuipu> for QuipuSpec {
    fn from(q: ClosedQuipu) -> Self {
        QuipuSpec::Closed(q)
    }
}

impl From<Dagger> for QuipuSpec {
    fn from(q: Dagger) -> Self {
        QuipuSpec::Dagger(q)
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for OpenQuipu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "open:ks={};ms={}", join(&self.ks), join(&self.ms))
    }
}

impl fmt::Display for ClosedQuipu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "closed:ks={};ms={}", join(&self.ks), join(&self.ms))
    }
}

impl fmt::Display for Dagger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dagger:t={}", self.tail)
    }
}

impl fmt::Display for QuipuSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuipuSpec::Open(q) => q.fmt(f),
            QuipuSpec::Closed(q) => q.fmt(f),
            QuipuSpec::Dagger(q) => q.fmt(f),
        }
    }
}

fn parse_list(text: &str) -> Result<Vec<usize>, QuipuError> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| QuipuError::Literal(format!("not a nonnegative integer: {t:?}")))
        })
        .collect()
}

fn parse_fields<'a>(body: &'a str, names: &[&str]) -> Result<Vec<&'a str>, QuipuError> {
    let parts: Vec<&str> = body.split(';').map(str::trim).collect();
    if parts.len() != names.len() {
        return Err(QuipuError::Literal(format!("expected fields {}", names.join(";"))));
    }
    parts
        .iter()
        .zip(names)
        .map(|(part, name)| {
            part.strip_prefix(name)
                .and_then(|rest| rest.trim_start().strip_prefix('='))
                .map(str::trim)
                .ok_or_else(|| QuipuError::Literal(format!("expected {name}=... in {part:?}")))
        })
        .collect()
}

impl FromStr for QuipuSpec {
    type Err = QuipuError;

    /// `open:ks=1,1,1;ms=1,1`, `closed:ks=2,2;ms=1,1` or `dagger:t=3`,
    /// optionally prefixed by `spec:`.
    fn from_str(text: &str) -> Result<Self, QuipuError> {
        let text = text.trim();
        let text = text.strip_prefix("spec:").unwrap_or(text);
        let (kind, body) = text
            .split_once(':')
            .ok_or_else(|| QuipuError::Literal(format!("missing kind in {text:?}")))?;
        match kind.trim() {
            "open" => {
                let f = parse_fields(body, &["ks", "ms"])?;
                Ok(OpenQuipu::new(parse_list(f[0])?, parse_list(f[1])?)?.into())
            }
            "closed" => {
                let f = parse_fields(body, &["ks", "ms"])?;
                Ok(ClosedQuipu::new(parse_list(f[0])?, parse_list(f[1])?)?.into())
            }
            "dagger" => {
                let f = parse_fields(body, &["t"])?;
                let tail = f[0]
                    .parse()
                    .map_err(|_| QuipuError::Literal(format!("bad tail {:?}", f[0])))?;
                Ok(Dagger { tail }.into())
            }
            other => Err(QuipuError::Literal(format!("unknown kind {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn open_realization_counts() {
        let q = OpenQuipu::of(&[1, 1, 1], &[1, 1]);
        let g = q.realize();
        assert_eq!(g.order(), 7);
        assert_eq!(q.order(), 7);
        assert!(g.is_tree());
        assert_eq!(g.diameter().unwrap().finite(), Some(4));
    }

    #[test]
    fn degenerate_open_is_path() {
        assert_eq!(OpenQuipu::of(&[0, 0], &[0]).realize(), Graph::path(1));
        assert_eq!(OpenQuipu::of(&[2, 3], &[0]).realize(), Graph::path(6));
        assert_eq!(OpenQuipu::path(5).realize(), Graph::path(5));
    }

    #[test]
    fn closed_realization() {
        let q = ClosedQuipu::of(&[2, 2], &[1, 1]);
        let g = q.realize();
        assert_eq!(g.order(), 8);
        assert!(g.is_unicyclic());
        assert_eq!(g.max_degree(), 3);
        assert_eq!(ClosedQuipu::cycle(5).realize(), Graph::cycle(5));
        assert_eq!(ClosedQuipu::new(vec![0], vec![3]), Err(QuipuError::CycleTooShort(1)));
    }

    #[test]
    fn dagger_shape() {
        let g = Dagger { tail: 3 }.realize();
        assert_eq!(g.order(), 7);
        assert_eq!(g.diameter().unwrap().finite(), Some(4));
        assert_eq!(g.max_degree(), 4);
    }

    #[test]
    fn literals_round_trip() {
        for text in ["open:ks=1,1,1;ms=1,1", "closed:ks=2,2;ms=1,1", "dagger:t=3"] {
            let spec: QuipuSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        let spec: QuipuSpec = "spec:open:ks=2,2;ms=2".parse().unwrap();
        assert_eq!(spec, QuipuSpec::Open(OpenQuipu::of(&[2, 2], &[2])));
        assert!("open:ks=1,2;ms=1,2".parse::<QuipuSpec>().is_err());
        assert!("open:ks=a;ms=1".parse::<QuipuSpec>().is_err());
        assert!("ring:ks=1;ms=1".parse::<QuipuSpec>().is_err());
    }
}
