//! Cyclic orders of topological configurations and self-polarity checks.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{is_self_duality, Correspondence, SymmetryError};
use crate::incidence::{Configuration, Document, Element};
use crate::polyalg::Rational;

/// Cyclic order of the points along every line and of the lines around
/// every point, as indices into the configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologicalData {
    pub line_orders: Vec<Vec<usize>>,
    pub point_orders: Vec<Vec<usize>>,
}

impl TopologicalData {
    /// Reads the `cyclic line` / `cyclic point` rows of a document. Every
    /// point and line needs a row.
    pub fn from_document(doc: &Document) -> Result<Self, SymmetryError> {
        let c = &doc.config;
        let mut line_orders = Vec::with_capacity(c.num_lines());
        for l in 0..c.num_lines() {
            let label = c.line_label(l);
            let row = doc
                .cyclic_lines
                .get(label)
                .ok_or_else(|| SymmetryError::InconsistentTopology(format!("no cyclic order for line {label}")))?;
            let idx = row
                .iter()
                .map(|p| c.point_index(p).ok_or_else(|| SymmetryError::UnknownLabel(p.clone())))
                .collect::<Result<Vec<_>, _>>()?;
            line_orders.push(idx);
        }
        let mut point_orders = Vec::with_capacity(c.num_points());
        for p in 0..c.num_points() {
            let label = c.point_label(p);
            let row = doc
                .cyclic_points
                .get(label)
                .ok_or_else(|| SymmetryError::InconsistentTopology(format!("no cyclic order for point {label}")))?;
            let idx = row
                .iter()
                .map(|l| c.line_index(l).ok_or_else(|| SymmetryError::UnknownLabel(l.clone())))
                .collect::<Result<Vec<_>, _>>()?;
            point_orders.push(idx);
        }
        let t = TopologicalData {
            line_orders,
            point_orders,
        };
        t.check(c)?;
        Ok(t)
    }

    /// Each cyclic sequence must list exactly the incident elements.
    pub fn check(&self, c: &Configuration) -> Result<(), SymmetryError> {
        if self.line_orders.len() != c.num_lines() || self.point_orders.len() != c.num_points() {
            return Err(SymmetryError::InconsistentTopology("wrong number of rows".into()));
        }
        for (l, ord) in self.line_orders.iter().enumerate() {
            let want: BTreeSet<usize> = c.points_on(l).iter().copied().collect();
            let got: BTreeSet<usize> = ord.iter().copied().collect();
            if want != got || ord.len() != want.len() {
                return Err(SymmetryError::InconsistentTopology(format!(
                    "line {} order is not a permutation of its points",
                    c.line_label(l)
                )));
            }
        }
        for (p, ord) in self.point_orders.iter().enumerate() {
            let want: BTreeSet<usize> = c.lines_through(p).iter().copied().collect();
            let got: BTreeSet<usize> = ord.iter().copied().collect();
            if want != got || ord.len() != want.len() {
                return Err(SymmetryError::InconsistentTopology(format!(
                    "point {} order is not a permutation of its lines",
                    c.point_label(p)
                )));
            }
        }
        Ok(())
    }

    /// Cyclic orders read off exact homogeneous coordinates: the elements
    /// on a line (through a point) are sorted by their direction in a
    /// plane chart of that line's (point's) orthogonal complement.
    pub fn from_coordinates(
        c: &Configuration,
        points: &[[Rational; 3]],
        lines: &[[Rational; 3]],
    ) -> Result<Self, SymmetryError> {
        let line_orders = (0..c.num_lines())
            .map(|l| {
                let mut ps = c.points_on(l).to_vec();
                ps.sort_unstable();
                sort_projectively(&lines[l], ps, points)
            })
            .collect();
        let point_orders = (0..c.num_points())
            .map(|p| sort_projectively(&points[p], c.lines_through(p).to_vec(), lines))
            .collect();
        let t = TopologicalData {
            line_orders,
            point_orders,
        };
        t.check(c)?;
        Ok(t)
    }

    /// Rows in the text format, for appending to a configuration file.
    pub fn to_rows(&self, c: &Configuration) -> String {
        let mut out = String::new();
        for (l, ord) in self.line_orders.iter().enumerate() {
            let names: Vec<&str> = ord.iter().map(|&p| c.point_label(p)).collect();
            out += &format!("cyclic line {}: {}\n", c.line_label(l), names.join(" "));
        }
        for (p, ord) in self.point_orders.iter().enumerate() {
            let names: Vec<&str> = ord.iter().map(|&l| c.line_label(l)).collect();
            out += &format!("cyclic point {}: {}\n", c.point_label(p), names.join(" "));
        }
        out
    }
}

fn sort_projectively(axis: &[Rational; 3], mut items: Vec<usize>, coords: &[[Rational; 3]]) -> Vec<usize> {
    // drop a coordinate in which the axis is nonzero; that projection is
    // injective on the orthogonal plane
    let drop = (0..3).rev().find(|&i| !axis[i].is_zero()).unwrap_or(2);
    let keep: Vec<usize> = (0..3).filter(|&i| i != drop).collect();
    let chart = |v: &[Rational; 3]| -> (Rational, Rational) {
        let (a, b) = (v[keep[0]].clone(), v[keep[1]].clone());
        if b.is_negative() || (b.is_zero() && a.is_negative()) {
            (-a, -b)
        } else {
            (a, b)
        }
    };
    items.sort_by(|&x, &y| {
        let (ax, bx) = chart(&coords[x]);
        let (ay, by) = chart(&coords[y]);
        let cross = &ax * &by - &bx * &ay;
        if cross.is_positive() {
            Ordering::Less
        } else if cross.is_negative() {
            Ordering::Greater
        } else {
            x.cmp(&y)
        }
    });
    items
}

/// Outcome of comparing cyclic orders under a duality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolarityCheck {
    /// Every image sequence matches up to rotation.
    pub strict: bool,
    /// Every image sequence matches up to rotation and reversal.
    pub tolerant: bool,
    /// First element whose image order fails the tolerant test.
    pub first_failure: Option<String>,
}

fn matches_rotation(seq: &[usize], target: &[usize]) -> bool {
    if seq.len() != target.len() {
        return false;
    }
    if seq.is_empty() {
        return true;
    }
    let Some(r) = target.iter().position(|&x| x == seq[0]) else {
        return false;
    };
    (0..seq.len()).all(|i| seq[i] == target[(i + r) % target.len()])
}

fn matches_dihedral(seq: &[usize], target: &[usize]) -> bool {
    let rev: Vec<usize> = seq.iter().rev().copied().collect();
    matches_rotation(seq, target) || matches_rotation(&rev, target)
}

/// Compares every cyclic order with the order of its images.
pub fn polarity_check(
    c: &Configuration,
    t: &TopologicalData,
    sigma: &Correspondence,
) -> Result<PolarityCheck, SymmetryError> {
    t.check(c)?;
    if !is_self_duality(c, sigma)? {
        return Ok(PolarityCheck {
            strict: false,
            tolerant: false,
            first_failure: Some("not a self-duality".into()),
        });
    }
    let mut strict = true;
    let mut first_failure = None;
    let mut compare = |seq: Vec<usize>, target: &[usize], what: String| {
        strict &= matches_rotation(&seq, target);
        if first_failure.is_none() && !matches_dihedral(&seq, target) {
            first_failure = Some(what);
        }
    };
    for (l, ord) in t.line_orders.iter().enumerate() {
        let centre = sigma.apply(Element::Line(l)).index();
        let seq = ord.iter().map(|&p| sigma.apply(Element::Point(p)).index()).collect();
        compare(seq, &t.point_orders[centre], format!("line {}", c.line_label(l)));
    }
    for (p, ord) in t.point_orders.iter().enumerate() {
        let axis = sigma.apply(Element::Point(p)).index();
        let seq = ord.iter().map(|&l| sigma.apply(Element::Line(l)).index()).collect();
        compare(seq, &t.line_orders[axis], format!("point {}", c.point_label(p)));
    }
    let tolerant = first_failure.is_none();
    Ok(PolarityCheck {
        strict: strict && tolerant,
        tolerant,
        first_failure,
    })
}

/// Rotation- and reversal-tolerant self-polarity test.
pub fn is_self_polarity(c: &Configuration, t: &TopologicalData, sigma: &Correspondence) -> Result<bool, SymmetryError> {
    polarity_check(c, t, sigma).map(|r| r.tolerant)
}
