//! Construction sequences: text form and independent step checking.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{is_projective_base, ProjectiveBase, State};
use crate::incidence::{Configuration, Element};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    /// The four base points.
    Base,
    /// Everything incident to two or more placed elements.
    Determined,
    /// One element with exactly one placed incidence.
    Free,
    /// One element with no placed incidence, starting a new component.
    Restart,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub kind: StepKind,
    pub elements: Vec<Element>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionSequence {
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("empty sequence")]
    Empty,
    #[error("first group is not a projective base")]
    BadBase,
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("step {step}: {element} placed twice")]
    Repeated { step: usize, element: String },
    #[error("step {step}: expected determined group {expected:?}, found {found:?}")]
    NotMaximal {
        step: usize,
        expected: Vec<String>,
        found: Vec<String>,
    },
    #[error("step {step}: free step while elements are determined")]
    FreeWhileDetermined { step: usize },
    #[error("step {step}: {element} does not have exactly one placed incidence")]
    BadFreeElement { step: usize, element: String },
    #[error("step {step}: free element has the wrong kind although a matching one exists")]
    Parity { step: usize },
    #[error("step {step}: restart while a free element is available")]
    NeedlessRestart { step: usize },
    #[error("sequence leaves {0} elements unplaced")]
    Incomplete(usize),
}

impl ConstructionSequence {
    pub fn base(&self) -> Option<ProjectiveBase> {
        let first = self.steps.first()?;
        if first.kind != StepKind::Base || first.elements.len() != 4 {
            return None;
        }
        let mut pts = [0; 4];
        for (i, e) in first.elements.iter().enumerate() {
            match e {
                Element::Point(p) => pts[i] = *p,
                Element::Line(_) => return None,
            }
        }
        pts.sort_unstable();
        Some(ProjectiveBase(pts))
    }

    /// Free and restart steps.
    pub fn free_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s.kind, StepKind::Free | StepKind::Restart))
            .count()
    }

    /// Elements of the free steps in order.
    pub fn free_elements(&self) -> Vec<Element> {
        self.steps
            .iter()
            .filter(|s| matches!(s.kind, StepKind::Free | StepKind::Restart))
            .flat_map(|s| s.elements.iter().copied())
            .collect()
    }

    /// Dash-separated groups, free steps in brackets. Labels are
    /// concatenated when every label of the structure is one character,
    /// otherwise separated by spaces.
    pub fn to_text(&self, c: &Configuration) -> String {
        let compact = single_char_labels(c);
        self.steps
            .iter()
            .map(|s| {
                let labels: Vec<&str> = s.elements.iter().map(|&e| c.label(e)).collect();
                let body = if compact { labels.concat() } else { labels.join(" ") };
                match s.kind {
                    StepKind::Free | StepKind::Restart => format!("[{body}]"),
                    _ => body,
                }
            })
            .collect::<Vec<_>>()
            .join(" - ")
    }

    /// Parses the text form. Group kinds are read from the brackets and
    /// the group position (the first group is the base). Labels are
    /// resolved as points in even positions and lines in odd ones,
    /// falling back to the other namespace. A bracketed element with no
    /// placed incidence is a restart.
    pub fn parse(c: &Configuration, text: &str) -> Result<Self, SequenceError> {
        let compact = single_char_labels(c);
        let mut steps = Vec::new();
        let mut state = State::new(c);
        let mut want_points = true;
        for (i, raw) in text.split(" - ").enumerate() {
            let raw = raw.trim();
            let (body, bracketed) = match raw.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
                Some(b) => (b.trim(), true),
                None => (raw, false),
            };
            let tokens: Vec<String> = if body.contains(char::is_whitespace) || !compact {
                body.split_whitespace().map(str::to_string).collect()
            } else {
                body.chars().map(|ch| ch.to_string()).collect()
            };
            if tokens.is_empty() {
                return Err(SequenceError::Empty);
            }
            let elements = tokens
                .iter()
                .map(|t| resolve(c, t, want_points))
                .collect::<Result<Vec<_>, _>>()?;
            let kind = if i == 0 {
                StepKind::Base
            } else if bracketed {
                if state.placed_count(elements[0]) == 0 {
                    StepKind::Restart
                } else {
                    StepKind::Free
                }
            } else {
                StepKind::Determined
            };
            for &e in &elements {
                if state.is_placed(e) {
                    return Err(SequenceError::Repeated {
                        step: i,
                        element: c.label(e).to_string(),
                    });
                }
                state.place(e);
            }
            want_points = !elements[0].is_point();
            steps.push(Step { kind, elements });
        }
        Ok(ConstructionSequence { steps })
    }
}

fn single_char_labels(c: &Configuration) -> bool {
    c.point_labels()
        .iter()
        .chain(c.line_labels())
        .all(|l| l.chars().count() == 1)
}

fn resolve(c: &Configuration, t: &str, want_points: bool) -> Result<Element, SequenceError> {
    let p = c.point_index(t).map(Element::Point);
    let l = c.line_index(t).map(Element::Line);
    let (first, second) = if want_points { (p, l) } else { (l, p) };
    first
        .or(second)
        .ok_or_else(|| SequenceError::UnknownLabel(t.to_string()))
}

/// Replays `s` step by step and re-derives every rule: base condition,
/// maximal determined groups, free steps only when nothing is
/// determined, parity preference for free elements, full coverage.
pub fn check_sequence(c: &Configuration, s: &ConstructionSequence) -> Result<(), SequenceError> {
    let base = s.base().ok_or(SequenceError::BadBase)?;
    if !is_projective_base(c, &base.0) {
        return Err(SequenceError::BadBase);
    }
    let names = |v: &[Element]| -> Vec<String> { v.iter().map(|&e| c.label(e).to_string()).collect() };
    let mut state = State::new(c);
    let mut want_points = true;
    for (i, step) in s.steps.iter().enumerate() {
        if i > 0 {
            let det = state.determined();
            match step.kind {
                StepKind::Base => return Err(SequenceError::BadBase),
                StepKind::Determined => {
                    let found: BTreeSet<Element> = step.elements.iter().copied().collect();
                    let expected: BTreeSet<Element> = det.iter().copied().collect();
                    if det.is_empty() || found != expected || found.len() != step.elements.len() {
                        return Err(SequenceError::NotMaximal {
                            step: i,
                            expected: names(&det),
                            found: names(&step.elements),
                        });
                    }
                }
                StepKind::Free | StepKind::Restart => {
                    if !det.is_empty() {
                        return Err(SequenceError::FreeWhileDetermined { step: i });
                    }
                    let [e] = step.elements[..] else {
                        return Err(SequenceError::BadFreeElement {
                            step: i,
                            element: names(&step.elements).join(" "),
                        });
                    };
                    let (cands, kind) = state.free_candidates(want_points);
                    if kind != step.kind {
                        return Err(if step.kind == StepKind::Restart {
                            SequenceError::NeedlessRestart { step: i }
                        } else {
                            SequenceError::BadFreeElement {
                                step: i,
                                element: c.label(e).to_string(),
                            }
                        });
                    }
                    if !cands.contains(&e) {
                        let wanted = if kind == StepKind::Free { 1 } else { 0 };
                        return Err(if state.placed_count(e) == wanted {
                            SequenceError::Parity { step: i }
                        } else {
                            SequenceError::BadFreeElement {
                                step: i,
                                element: c.label(e).to_string(),
                            }
                        });
                    }
                }
            }
        }
        for &e in &step.elements {
            if state.is_placed(e) {
                return Err(SequenceError::Repeated {
                    step: i,
                    element: c.label(e).to_string(),
                });
            }
            state.place(e);
        }
        want_points = !step.elements[0].is_point();
    }
    if state.remaining > 0 {
        return Err(SequenceError::Incomplete(state.remaining));
    }
    Ok(())
}
