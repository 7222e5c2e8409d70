//! Abstract point-line incidence structures.
//!
//! A [`Configuration`] holds labeled points and lines together with the
//! incidence relation. Points and lines live in separate label
//! namespaces and are always kept sorted by label; the order of points
//! within a line is preserved from the input.

mod format;
mod levi;
mod validate;

use std::collections::BTreeSet;

use serde::Serialize;

pub use format::{parse_configuration, parse_document, to_text, Document};
pub use levi::LeviGraph;
pub use validate::{validate, ValidationReport, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("line {0}: malformed header {1:?} (expected `config <n> <k>` or `structure`)")]
    MalformedHeader(usize, String),
    #[error("line {0}: malformed row {1:?}")]
    MalformedRow(usize, String),
    #[error("duplicate line label {0:?}")]
    DuplicateLine(String),
    #[error("duplicate point label {0:?} in points row")]
    DuplicatePoint(String),
    #[error("point {point:?} listed twice on line {line:?}")]
    RepeatedPoint { line: String, point: String },
    #[error("unknown point {0:?}")]
    UnknownPoint(String),
    #[error("unknown line {0:?}")]
    UnknownLine(String),
    #[error("non-incidence pin {point:?}-{line:?} contradicts an incidence")]
    PinnedIncidence { point: String, line: String },
    #[error("missing header")]
    MissingHeader,
}

/// What the document header claims about the structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// `config <n> <k>`
    Configuration { n: usize, k: usize },
    /// `structure`: an arbitrary incidence structure, e.g. a search pattern.
    Structure,
}

/// Element of `P ⊔ L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum Element {
    Point(usize),
    Line(usize),
}

impl Element {
    pub fn is_point(self) -> bool {
        matches!(self, Element::Point(_))
    }

    pub fn index(self) -> usize {
        match self {
            Element::Point(i) | Element::Line(i) => i,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    points: Vec<String>,
    lines: Vec<String>,
    line_points: Vec<Vec<usize>>,
    point_lines: Vec<Vec<usize>>,
    incidence: Vec<Vec<bool>>,
    nonincidences: Vec<(usize, usize)>,
    claim: Claim,
}

impl Configuration {
    /// Builds a structure from line rows. Points are the union of the
    /// `extra_points` and everything listed on a line.
    pub fn new<S: AsRef<str>>(
        claim: Claim,
        extra_points: &[S],
        rows: &[(S, Vec<S>)],
        pins: &[(S, S)],
    ) -> Result<Self, ConfigError> {
        let mut point_set = BTreeSet::new();
        for p in extra_points {
            if !point_set.insert(p.as_ref().to_string()) {
                return Err(ConfigError::DuplicatePoint(p.as_ref().to_string()));
            }
        }
        let mut line_set = BTreeSet::new();
        for (l, ps) in rows {
            if !line_set.insert(l.as_ref().to_string()) {
                return Err(ConfigError::DuplicateLine(l.as_ref().to_string()));
            }
            let mut seen = BTreeSet::new();
            for p in ps {
                if !seen.insert(p.as_ref()) {
                    return Err(ConfigError::RepeatedPoint {
                        line: l.as_ref().to_string(),
                        point: p.as_ref().to_string(),
                    });
                }
                point_set.insert(p.as_ref().to_string());
            }
        }
        let points: Vec<String> = point_set.into_iter().collect();
        let lines: Vec<String> = line_set.into_iter().collect();
        let mut line_points = vec![Vec::new(); lines.len()];
        for (l, ps) in rows {
            let li = lines.binary_search_by(|x| x.as_str().cmp(l.as_ref())).unwrap();
            line_points[li] = ps
                .iter()
                .map(|p| points.binary_search_by(|x| x.as_str().cmp(p.as_ref())).unwrap())
                .collect();
        }
        let mut c = Configuration::from_indices(claim, points, lines, line_points, Vec::new());
        let mut nonincidences = Vec::new();
        for (p, l) in pins {
            let pi = c
                .point_index(p.as_ref())
                .ok_or_else(|| ConfigError::UnknownPoint(p.as_ref().to_string()))?;
            let li = c
                .line_index(l.as_ref())
                .ok_or_else(|| ConfigError::UnknownLine(l.as_ref().to_string()))?;
            if c.incident(pi, li) {
                return Err(ConfigError::PinnedIncidence {
                    point: p.as_ref().to_string(),
                    line: l.as_ref().to_string(),
                });
            }
            nonincidences.push((pi, li));
        }
        nonincidences.sort_unstable();
        nonincidences.dedup();
        c.nonincidences = nonincidences;
        Ok(c)
    }

    /// Builds from already sorted, unique labels and index lists.
    pub(crate) fn from_indices(
        claim: Claim,
        points: Vec<String>,
        lines: Vec<String>,
        line_points: Vec<Vec<usize>>,
        nonincidences: Vec<(usize, usize)>,
    ) -> Self {
        let mut incidence = vec![vec![false; lines.len()]; points.len()];
        let mut point_lines = vec![Vec::new(); points.len()];
        for (l, ps) in line_points.iter().enumerate() {
            for &p in ps {
                incidence[p][l] = true;
                point_lines[p].push(l);
            }
        }
        Configuration {
            points,
            lines,
            line_points,
            point_lines,
            incidence,
            nonincidences,
            claim,
        }
    }

    pub fn claim(&self) -> Claim {
        self.claim
    }

    pub fn with_claim(mut self, claim: Claim) -> Self {
        self.claim = claim;
        self
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn num_elements(&self) -> usize {
        self.points.len() + self.lines.len()
    }

    pub fn point_labels(&self) -> &[String] {
        &self.points
    }

    pub fn line_labels(&self) -> &[String] {
        &self.lines
    }

    pub fn point_label(&self, p: usize) -> &str {
        &self.points[p]
    }

    pub fn line_label(&self, l: usize) -> &str {
        &self.lines[l]
    }

    pub fn label(&self, e: Element) -> &str {
        match e {
            Element::Point(p) => self.point_label(p),
            Element::Line(l) => self.line_label(l),
        }
    }

    pub fn point_index(&self, label: &str) -> Option<usize> {
        self.points.binary_search_by(|x| x.as_str().cmp(label)).ok()
    }

    pub fn line_index(&self, label: &str) -> Option<usize> {
        self.lines.binary_search_by(|x| x.as_str().cmp(label)).ok()
    }

    /// Points of a line in input order.
    pub fn points_on(&self, l: usize) -> &[usize] {
        &self.line_points[l]
    }

    /// Lines through a point, in label order.
    pub fn lines_through(&self, p: usize) -> &[usize] {
        &self.point_lines[p]
    }

    pub fn incident(&self, p: usize, l: usize) -> bool {
        self.incidence[p][l]
    }

    /// Elements incident to `e` (lines for a point, points for a line).
    pub fn neighbors(&self, e: Element) -> Vec<Element> {
        match e {
            Element::Point(p) => self.point_lines[p].iter().map(|&l| Element::Line(l)).collect(),
            Element::Line(l) => {
                let mut ps = self.line_points[l].clone();
                ps.sort_unstable();
                ps.into_iter().map(Element::Point).collect()
            }
        }
    }

    pub fn are_incident(&self, a: Element, b: Element) -> bool {
        match (a, b) {
            (Element::Point(p), Element::Line(l)) | (Element::Line(l), Element::Point(p)) => self.incident(p, l),
            _ => false,
        }
    }

    /// Explicitly required non-incidences `(point, line)`.
    pub fn nonincidences(&self) -> &[(usize, usize)] {
        &self.nonincidences
    }

    pub fn num_incidences(&self) -> usize {
        self.line_points.iter().map(Vec::len).sum()
    }

    /// The common line of two points, if any.
    pub fn join(&self, p: usize, q: usize) -> Option<usize> {
        self.point_lines[p].iter().copied().find(|&l| self.incidence[q][l])
    }

    /// The common point of two lines, if any.
    pub fn meet(&self, l: usize, m: usize) -> Option<usize> {
        self.point_lines
            .iter()
            .enumerate()
            .find(|(p, _)| self.incidence[*p][l] && self.incidence[*p][m])
            .map(|(p, _)| p)
    }

    /// Points and lines exchanged, incidence transposed. Each new line
    /// lists its points in label order.
    pub fn dual(&self) -> Configuration {
        let line_points = self.point_lines.clone();
        let pins = self.nonincidences.iter().map(|&(p, l)| (l, p)).collect::<Vec<_>>();
        let mut pins = pins;
        pins.sort_unstable();
        Configuration::from_indices(self.claim, self.lines.clone(), self.points.clone(), line_points, pins)
    }

    /// Same incidence relation, ignoring point order within lines.
    pub fn same_incidences(&self, other: &Configuration) -> bool {
        self.points == other.points
            && self.lines == other.lines
            && self.incidence == other.incidence
            && self.nonincidences == other.nonincidences
    }

    /// Degree of every point is `k` and of every line is `k`.
    pub fn uniform_degree(&self) -> Option<usize> {
        let k = self.line_points.first()?.len();
        let ok = self.line_points.iter().all(|ps| ps.len() == k) && self.point_lines.iter().all(|ls| ls.len() == k);
        ok.then_some(k)
    }

    pub fn levi_graph(&self) -> LeviGraph {
        LeviGraph::new(self)
    }

    /// Relabels points and lines; label maps must be injective.
    pub fn relabeled(
        &self,
        point_map: impl Fn(&str) -> String,
        line_map: impl Fn(&str) -> String,
    ) -> Result<Configuration, ConfigError> {
        let rows: Vec<(String, Vec<String>)> = (0..self.num_lines())
            .map(|l| {
                (
                    line_map(&self.lines[l]),
                    self.line_points[l]
                        .iter()
                        .map(|&p| point_map(&self.points[p]))
                        .collect(),
                )
            })
            .collect();
        let extra: Vec<String> = self.points.iter().map(|p| point_map(p)).collect();
        let pins: Vec<(String, String)> = self
            .nonincidences
            .iter()
            .map(|&(p, l)| (point_map(&self.points[p]), line_map(&self.lines[l])))
            .collect();
        Configuration::new(self.claim, &extra, &rows, &pins)
    }
}

/// JSON view of a configuration with stable key order.
#[derive(Serialize)]
pub struct ConfigurationJson<'a> {
    pub claim: Claim,
    pub points: &'a [String],
    pub lines: Vec<LineJson<'a>>,
    pub nonincidences: Vec<(&'a str, &'a str)>,
}

#[derive(Serialize)]
pub struct LineJson<'a> {
    pub label: &'a str,
    pub points: Vec<&'a str>,
}

impl Configuration {
    pub fn to_json(&self) -> ConfigurationJson<'_> {
        ConfigurationJson {
            claim: self.claim,
            points: &self.points,
            lines: (0..self.num_lines())
                .map(|l| LineJson {
                    label: &self.lines[l],
                    points: self.line_points[l].iter().map(|&p| self.points[p].as_str()).collect(),
                })
                .collect(),
            nonincidences: self
                .nonincidences
                .iter()
                .map(|&(p, l)| (self.points[p].as_str(), self.lines[l].as_str()))
                .collect(),
        }
    }
}
