//! Plain-text incidence tables.
//!
//! ```text
//! # comment
//! config 19 4
//! a: B C E D
//! nonincidence: P a
//! cyclic line a: B C E D
//! cyclic point A: a b c d
//! ```
//!
//! The row labels `points`, `nonincidence` and `cyclic` are reserved.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::{Claim, ConfigError, Configuration};

/// A parsed file: the structure plus any cyclic-order rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub config: Configuration,
    /// Line label to the cyclic order of its points.
    pub cyclic_lines: BTreeMap<String, Vec<String>>,
    /// Point label to the cyclic order of its lines.
    pub cyclic_points: BTreeMap<String, Vec<String>>,
}

pub fn parse_configuration(text: &str) -> Result<Configuration, ConfigError> {
    parse_document(text).map(|d| d.config)
}

pub fn parse_document(text: &str) -> Result<Document, ConfigError> {
    let mut claim = None;
    let mut extra: Vec<String> = Vec::new();
    let mut rows: Vec<(String, Vec<String>)> = Vec::new();
    let mut pins: Vec<(String, String)> = Vec::new();
    let mut cyclic_lines = BTreeMap::new();
    let mut cyclic_points = BTreeMap::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if claim.is_none() {
            claim = Some(parse_header(lineno, content)?);
            continue;
        }
        let malformed = || ConfigError::MalformedRow(lineno, raw.to_string());
        let (head, tail) = content.split_once(':').ok_or_else(malformed)?;
        let head: Vec<&str> = head.split_whitespace().collect();
        let tail: Vec<String> = tail.split_whitespace().map(str::to_string).collect();
        match head.as_slice() {
            ["points"] => {
                for p in tail {
                    if extra.contains(&p) {
                        return Err(ConfigError::DuplicatePoint(p));
                    }
                    extra.push(p);
                }
            }
            ["nonincidence"] => match tail.as_slice() {
                [p, l] => pins.push((p.clone(), l.clone())),
                _ => return Err(malformed()),
            },
            ["cyclic", "line", l] => {
                if cyclic_lines.insert(l.to_string(), tail).is_some() {
                    return Err(malformed());
                }
            }
            ["cyclic", "point", p] => {
                if cyclic_points.insert(p.to_string(), tail).is_some() {
                    return Err(malformed());
                }
            }
            [label] if !label.contains(':') => rows.push((label.to_string(), tail)),
            _ => return Err(malformed()),
        }
    }
    let claim = claim.ok_or(ConfigError::MissingHeader)?;
    let config = Configuration::new(claim, &extra, &rows, &pins)?;
    Ok(Document {
        config,
        cyclic_lines,
        cyclic_points,
    })
}

fn parse_header(lineno: usize, content: &str) -> Result<Claim, ConfigError> {
    let bad = || ConfigError::MalformedHeader(lineno, content.to_string());
    let words: Vec<&str> = content.split_whitespace().collect();
    match words.as_slice() {
        ["structure"] => Ok(Claim::Structure),
        ["config", n, k] => {
            let n = n.parse().map_err(|_| bad())?;
            let k = k.parse().map_err(|_| bad())?;
            if k == 0 {
                return Err(bad());
            }
            Ok(Claim::Configuration { n, k })
        }
        _ => Err(bad()),
    }
}

/// Canonical serialization: lines in label order, points in their stored
/// order, then pins and cyclic rows in label order.
pub fn to_text(doc: &Document) -> String {
    let c = &doc.config;
    let mut out = String::new();
    match c.claim() {
        Claim::Configuration { n, k } => writeln!(out, "config {n} {k}").unwrap(),
        Claim::Structure => out.push_str("structure\n"),
    }
    let isolated = (0..c.num_points()).any(|p| c.lines_through(p).is_empty());
    if isolated {
        out.push_str("points:");
        for p in c.point_labels() {
            write!(out, " {p}").unwrap();
        }
        out.push('\n');
    }
    for l in 0..c.num_lines() {
        out.push_str(c.line_label(l));
        out.push(':');
        for &p in c.points_on(l) {
            write!(out, " {}", c.point_label(p)).unwrap();
        }
        out.push('\n');
    }
    for &(p, l) in c.nonincidences() {
        writeln!(out, "nonincidence: {} {}", c.point_label(p), c.line_label(l)).unwrap();
    }
    for (l, ps) in &doc.cyclic_lines {
        writeln!(out, "cyclic line {l}: {}", ps.join(" ")).unwrap();
    }
    for (p, ls) in &doc.cyclic_points {
        writeln!(out, "cyclic point {p}: {}", ls.join(" ")).unwrap();
    }
    out
}

impl Configuration {
    pub fn to_text(&self) -> String {
        to_text(&Document {
            config: self.clone(),
            cyclic_lines: BTreeMap::new(),
            cyclic_points: BTreeMap::new(),
        })
    }
}
