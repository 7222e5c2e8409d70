//! Axiom checks for (n_k) configurations.

use serde::Serialize;

use super::Configuration;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    PointCount {
        expected: usize,
        found: usize,
    },
    LineCount {
        expected: usize,
        found: usize,
    },
    LineDegree {
        line: String,
        expected: usize,
        found: usize,
    },
    PointDegree {
        point: String,
        expected: usize,
        found: usize,
    },
    /// Two points sharing two lines.
    Digon {
        points: (String, String),
        lines: (String, String),
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub n: usize,
    pub k: usize,
    pub certified: bool,
    pub violations: Vec<Violation>,
}

/// Checks the counts, regularity and the no-digon axiom. Every violation
/// is listed; a digon is reported once per pair of lines, naming the two
/// smallest shared points.
pub fn validate(c: &Configuration, n: usize, k: usize) -> ValidationReport {
    let mut violations = Vec::new();
    if c.num_points() != n {
        violations.push(Violation::PointCount {
            expected: n,
            found: c.num_points(),
        });
    }
    if c.num_lines() != n {
        violations.push(Violation::LineCount {
            expected: n,
            found: c.num_lines(),
        });
    }
    for l in 0..c.num_lines() {
        let d = c.points_on(l).len();
        if d != k {
            violations.push(Violation::LineDegree {
                line: c.line_label(l).to_string(),
                expected: k,
                found: d,
            });
        }
    }
    for p in 0..c.num_points() {
        let d = c.lines_through(p).len();
        if d != k {
            violations.push(Violation::PointDegree {
                point: c.point_label(p).to_string(),
                expected: k,
                found: d,
            });
        }
    }
    violations.extend(digons(c));
    ValidationReport {
        n,
        k,
        certified: violations.is_empty(),
        violations,
    }
}

/// Every pair of lines meeting in two or more points.
pub(crate) fn digons(c: &Configuration) -> Vec<Violation> {
    let mut out = Vec::new();
    for a in 0..c.num_lines() {
        for b in a + 1..c.num_lines() {
            let shared: Vec<usize> = (0..c.num_points())
                .filter(|&p| c.incident(p, a) && c.incident(p, b))
                .collect();
            if shared.len() >= 2 {
                out.push(Violation::Digon {
                    points: (
                        c.point_label(shared[0]).to_string(),
                        c.point_label(shared[1]).to_string(),
                    ),
                    lines: (c.line_label(a).to_string(), c.line_label(b).to_string()),
                });
            }
        }
    }
    out
}

impl Configuration {
    /// True when no two points share two lines.
    pub fn is_linear(&self) -> bool {
        digons(self).is_empty()
    }
}
