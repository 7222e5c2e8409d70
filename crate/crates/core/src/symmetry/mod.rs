//! Combinatorial automorphisms, self-dualities and self-polarities.

mod group;
mod polarity;
mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use serde::Serialize;

use crate::incidence::{Configuration, Element};

pub use group::{classify_group, classify_profile, AutGroup};
pub use polarity::{is_self_polarity, polarity_check, PolarityCheck, TopologicalData};
pub use search::automorphism_group;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymmetryError {
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("label {0:?} names both a point and a line")]
    AmbiguousLabel(String),
    #[error("label {0:?} appears twice")]
    RepeatedLabel(String),
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
    #[error("map sends some points to points and others to lines")]
    MixedKind,
    #[error("a duality needs as many points as lines")]
    UnequalSizes,
    #[error("the point permutation does not map lines to lines")]
    NoInducedLineMap,
    #[error("expected a {expected:?} correspondence")]
    WrongKind { expected: Kind },
    #[error("group of order {0} is not supported")]
    UnsupportedOrder(usize),
    #[error("order {order} profile {profile:?} does not determine the group")]
    AmbiguousProfile {
        order: usize,
        profile: BTreeMap<usize, usize>,
    },
    #[error("cyclic data inconsistent with incidences: {0}")]
    InconsistentTopology(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Preserving,
    Duality,
}

/// A bijection of `P ⊔ L`, stored as a permutation of Levi-graph nodes
/// (points `0..p`, lines `p..p+l`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Correspondence {
    kind: Kind,
    num_points: usize,
    image: Vec<usize>,
}

impl Correspondence {
    /// Wraps a node permutation; fails if it mixes kinds.
    pub fn from_node_images(num_points: usize, image: Vec<usize>) -> Result<Self, SymmetryError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &w in &image {
            if w >= n || seen[w] {
                return Err(SymmetryError::Malformed("not a permutation".into()));
            }
            seen[w] = true;
        }
        let to_points = (0..num_points).filter(|&v| image[v] < num_points).count();
        let kind = if to_points == num_points {
            Kind::Preserving
        } else if to_points == 0 && num_points * 2 == n {
            Kind::Duality
        } else {
            return Err(SymmetryError::MixedKind);
        };
        Ok(Correspondence {
            kind,
            num_points,
            image,
        })
    }

    pub fn identity(c: &Configuration) -> Self {
        Correspondence {
            kind: Kind::Preserving,
            num_points: c.num_points(),
            image: (0..c.num_elements()).collect(),
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn node_images(&self) -> &[usize] {
        &self.image
    }

    fn element(&self, v: usize) -> Element {
        if v < self.num_points {
            Element::Point(v)
        } else {
            Element::Line(v - self.num_points)
        }
    }

    fn node(&self, e: Element) -> usize {
        match e {
            Element::Point(p) => p,
            Element::Line(l) => self.num_points + l,
        }
    }

    pub fn apply(&self, e: Element) -> Element {
        self.element(self.image[self.node(e)])
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Correspondence) -> Correspondence {
        let image: Vec<usize> = other.image.iter().map(|&v| self.image[v]).collect();
        let kind = if self.kind == other.kind {
            Kind::Preserving
        } else {
            Kind::Duality
        };
        Correspondence {
            kind,
            num_points: self.num_points,
            image,
        }
    }

    pub fn inverse(&self) -> Correspondence {
        let mut image = vec![0; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            image[w] = v;
        }
        Correspondence {
            kind: self.kind,
            num_points: self.num_points,
            image,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| v == w)
    }

    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.image.len()];
        let mut ord = 1usize;
        for s in 0..self.image.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                v = self.image[v];
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    /// `p ∈ ℓ ⟺ σ(p) ∈ σ(ℓ)` for every point-line pair.
    pub fn preserves_incidence(&self, c: &Configuration) -> bool {
        if self.image.len() != c.num_elements() || self.num_points != c.num_points() {
            return false;
        }
        for p in 0..c.num_points() {
            for l in 0..c.num_lines() {
                let a = self.apply(Element::Point(p));
                let b = self.apply(Element::Line(l));
                if c.incident(p, l) != c.are_incident(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Cycle notation with every cycle listed, fixed elements included,
    /// starting from the smallest point then the smallest line.
    pub fn to_cycle_notation(&self, c: &Configuration) -> String {
        let mut out = String::new();
        let mut seen = vec![false; self.image.len()];
        for s in 0..self.image.len() {
            if seen[s] {
                continue;
            }
            out.push('(');
            let mut v = s;
            let mut first = true;
            while !seen[v] {
                seen[v] = true;
                if !first {
                    out.push(',');
                }
                first = false;
                write!(out, "{}", c.label(self.element(v))).unwrap();
                v = self.image[v];
            }
            out.push(')');
        }
        out
    }

    /// Parses cycle notation such as `(A)(B,C)(a,b)` or `(A,a)(B,b)`.
    /// Unlisted elements are fixed. A label that names both a point and a
    /// line is rejected.
    pub fn parse(c: &Configuration, text: &str) -> Result<Self, SymmetryError> {
        let np = c.num_points();
        let mut image: Vec<usize> = (0..c.num_elements()).collect();
        let mut mentioned = BTreeSet::new();
        for cycle in parse_cycles(text)? {
            let nodes = cycle
                .iter()
                .map(|label| {
                    let v = lookup(c, label)?;
                    if !mentioned.insert(v) {
                        return Err(SymmetryError::RepeatedLabel(label.clone()));
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<_>, _>>()?;
            for (i, &v) in nodes.iter().enumerate() {
                image[v] = nodes[(i + 1) % nodes.len()];
            }
        }
        Correspondence::from_node_images(np, image)
    }

    /// Extends a permutation of the points to lines, if every line is
    /// mapped onto a line.
    pub fn from_point_permutation(c: &Configuration, text: &str) -> Result<Self, SymmetryError> {
        let np = c.num_points();
        let mut image: Vec<usize> = (0..np).collect();
        let mut mentioned = BTreeSet::new();
        for cycle in parse_cycles(text)? {
            let pts = cycle
                .iter()
                .map(|label| {
                    let p = c
                        .point_index(label)
                        .ok_or_else(|| SymmetryError::UnknownLabel(label.clone()))?;
                    if !mentioned.insert(p) {
                        return Err(SymmetryError::RepeatedLabel(label.clone()));
                    }
                    Ok(p)
                })
                .collect::<Result<Vec<_>, _>>()?;
            for (i, &p) in pts.iter().enumerate() {
                image[p] = pts[(i + 1) % pts.len()];
            }
        }
        let by_set: BTreeMap<Vec<usize>, usize> = (0..c.num_lines())
            .map(|l| {
                let mut s = c.points_on(l).to_vec();
                s.sort_unstable();
                (s, l)
            })
            .collect();
        for l in 0..c.num_lines() {
            let mut s: Vec<usize> = c.points_on(l).iter().map(|&p| image[p]).collect();
            s.sort_unstable();
            let m = by_set.get(&s).ok_or(SymmetryError::NoInducedLineMap)?;
            image.push(np + m);
        }
        Correspondence::from_node_images(np, image)
    }

    /// The involution `(A,a)(B,b)…` pairing point labels with lines
    /// through `pair`.
    pub fn pairing(c: &Configuration, pair: impl Fn(&str) -> String) -> Result<Self, SymmetryError> {
        let np = c.num_points();
        if np != c.num_lines() {
            return Err(SymmetryError::UnequalSizes);
        }
        let mut image = vec![usize::MAX; c.num_elements()];
        for p in 0..np {
            let target = pair(c.point_label(p));
            let l = c.line_index(&target).ok_or(SymmetryError::UnknownLabel(target))?;
            if image[np + l] != usize::MAX {
                return Err(SymmetryError::RepeatedLabel(c.line_label(l).to_string()));
            }
            image[p] = np + l;
            image[np + l] = p;
        }
        Correspondence::from_node_images(np, image)
    }
}

fn lookup(c: &Configuration, label: &str) -> Result<usize, SymmetryError> {
    match (c.point_index(label), c.line_index(label)) {
        (Some(p), None) => Ok(p),
        (None, Some(l)) => Ok(c.num_points() + l),
        (Some(_), Some(_)) => Err(SymmetryError::AmbiguousLabel(label.to_string())),
        (None, None) => Err(SymmetryError::UnknownLabel(label.to_string())),
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<String>>, SymmetryError> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| SymmetryError::Malformed(rest.to_string()))?;
        let end = body
            .find(')')
            .ok_or_else(|| SymmetryError::Malformed(rest.to_string()))?;
        let cycle: Vec<String> = body[..end].split(',').map(|s| s.trim().to_string()).collect();
        if cycle.iter().any(String::is_empty) {
            return Err(SymmetryError::Malformed(rest.to_string()));
        }
        out.push(cycle);
        rest = body[end + 1..].trim_start();
    }
    Ok(out)
}

/// True iff `sigma` is a duality that preserves incidence.
pub fn is_self_duality(c: &Configuration, sigma: &Correspondence) -> Result<bool, SymmetryError> {
    if sigma.kind() != Kind::Duality {
        return Err(SymmetryError::WrongKind {
            expected: Kind::Duality,
        });
    }
    if sigma.node_images().len() != c.num_elements() {
        return Err(SymmetryError::Malformed("size does not match configuration".into()));
    }
    Ok(sigma.preserves_incidence(c))
}

/// Upper-case point label to lower-case line label, as in `(A,a)(B,b)…`.
pub fn case_pairing(c: &Configuration) -> Result<Correspondence, SymmetryError> {
    Correspondence::pairing(c, |p| p.to_lowercase())
}
