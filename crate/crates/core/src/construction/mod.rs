//! Projective bases and construction sequences.
//!
//! A construction sequence starts from a projective base and repeatedly
//! places every element incident to at least two placed elements. When
//! nothing is determined, a single element with exactly one placed
//! incidence is placed freely; each such step costs one real parameter
//! in a realization.

mod plan;
mod sequence;

use serde::Serialize;

use crate::incidence::{Configuration, Element};

pub use plan::{plan_from_base, plan_min_free, Plan};
pub use sequence::{check_sequence, ConstructionSequence, SequenceError, Step, StepKind};

/// Four points such that every three of them have a line through exactly
/// two. Stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ProjectiveBase(pub [usize; 4]);

impl ProjectiveBase {
    pub fn new(c: &Configuration, mut points: [usize; 4]) -> Option<Self> {
        points.sort_unstable();
        if points.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        is_projective_base(c, &points).then_some(ProjectiveBase(points))
    }

    pub fn points(&self) -> [usize; 4] {
        self.0
    }

    pub fn labels<'a>(&self, c: &'a Configuration) -> Vec<&'a str> {
        self.0.iter().map(|&p| c.point_label(p)).collect()
    }
}

/// The triple condition for four distinct points.
pub fn is_projective_base(c: &Configuration, pts: &[usize; 4]) -> bool {
    for skip in 0..4 {
        let t: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| pts[i]).collect();
        let ok = (0..c.num_lines()).any(|l| t.iter().filter(|&&p| c.incident(p, l)).count() == 2);
        if !ok {
            return false;
        }
    }
    true
}

/// All projective bases, lexicographic in point label order.
pub fn find_projective_bases(c: &Configuration) -> Vec<ProjectiveBase> {
    let n = c.num_points();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                for e in d + 1..n {
                    let pts = [a, b, d, e];
                    if is_projective_base(c, &pts) {
                        out.push(ProjectiveBase(pts));
                    }
                }
            }
        }
    }
    out
}

/// How to pick the element at a free step.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum FreeChoice {
    /// Most newly determined elements over the next two rounds, ties by
    /// label.
    #[default]
    Lookahead,
    /// Smallest label.
    Lexicographic,
    /// These labels in order at the successive free steps, then
    /// lookahead.
    Given(Vec<String>),
}

/// Placement state over Levi-graph nodes (points first, then lines).
#[derive(Debug, Clone)]
pub(crate) struct State<'a> {
    pub c: &'a Configuration,
    pub placed: Vec<bool>,
    /// Placed incident elements per node.
    pub count: Vec<usize>,
    pub remaining: usize,
}

impl<'a> State<'a> {
    pub fn new(c: &'a Configuration) -> Self {
        State {
            c,
            placed: vec![false; c.num_elements()],
            count: vec![0; c.num_elements()],
            remaining: c.num_elements(),
        }
    }

    pub fn node(&self, e: Element) -> usize {
        match e {
            Element::Point(p) => p,
            Element::Line(l) => self.c.num_points() + l,
        }
    }

    pub fn element(&self, v: usize) -> Element {
        let np = self.c.num_points();
        if v < np {
            Element::Point(v)
        } else {
            Element::Line(v - np)
        }
    }

    pub fn place(&mut self, e: Element) {
        let v = self.node(e);
        debug_assert!(!self.placed[v]);
        self.placed[v] = true;
        self.remaining -= 1;
        for w in self.c.neighbors(e) {
            let u = self.node(w);
            self.count[u] += 1;
        }
    }

    pub fn placed_count(&self, e: Element) -> usize {
        self.count[self.node(e)]
    }

    pub fn is_placed(&self, e: Element) -> bool {
        self.placed[self.node(e)]
    }

    /// Unplaced elements with at least two placed incidences, sorted.
    pub fn determined(&self) -> Vec<Element> {
        (0..self.placed.len())
            .filter(|&v| !self.placed[v] && self.count[v] >= 2)
            .map(|v| self.element(v))
            .collect()
    }

    /// Unplaced elements with exactly `k` placed incidences.
    pub fn with_count(&self, k: usize) -> Vec<Element> {
        (0..self.placed.len())
            .filter(|&v| !self.placed[v] && self.count[v] == k)
            .map(|v| self.element(v))
            .collect()
    }

    /// Elements determined over the next two rounds after placing `e`.
    pub fn lookahead_score(&self, e: Element) -> usize {
        let mut s = self.clone();
        s.place(e);
        let d1 = s.determined();
        for &x in &d1 {
            s.place(x);
        }
        d1.len() + s.determined().len()
    }

    /// Candidates for a free step, by parity preference, then fallback
    /// to the other kind, each sorted by the policy.
    pub fn free_candidates(&self, want_points: bool) -> (Vec<Element>, StepKind) {
        let ones = self.with_count(1);
        let preferred: Vec<Element> = ones.iter().copied().filter(|e| e.is_point() == want_points).collect();
        if !preferred.is_empty() {
            return (preferred, StepKind::Free);
        }
        if !ones.is_empty() {
            return (ones, StepKind::Free);
        }
        let zeros = self.with_count(0);
        let preferred: Vec<Element> = zeros.iter().copied().filter(|e| e.is_point() == want_points).collect();
        if !preferred.is_empty() {
            (preferred, StepKind::Restart)
        } else {
            (zeros, StepKind::Restart)
        }
    }

    /// Orders candidates best first: highest lookahead, then label.
    pub fn rank_lookahead(&self, mut cands: Vec<Element>) -> Vec<Element> {
        let mut scored: Vec<(usize, Element)> = cands.drain(..).map(|e| (self.lookahead_score(e), e)).collect();
        scored.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        scored.into_iter().map(|(_, e)| e).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("the structure has no projective base")]
    NoProjectiveBase,
    #[error("{0:?} is not a projective base")]
    NotABase(Vec<String>),
    #[error("{label:?} is not a valid free choice here")]
    InvalidFreeChoice { label: String },
}

/// Builds the sequence from base `b`. Determined steps are forced; free
/// steps follow `policy`.
pub fn build_sequence(
    c: &Configuration,
    b: ProjectiveBase,
    policy: &FreeChoice,
) -> Result<ConstructionSequence, ConstructionError> {
    if !is_projective_base(c, &b.0) {
        return Err(ConstructionError::NotABase(
            b.labels(c).into_iter().map(str::to_string).collect(),
        ));
    }
    let mut state = State::new(c);
    let mut steps = vec![Step {
        kind: StepKind::Base,
        elements: b.0.iter().map(|&p| Element::Point(p)).collect(),
    }];
    for &p in &b.0 {
        state.place(Element::Point(p));
    }
    let mut given = match policy {
        FreeChoice::Given(v) => v.iter().cloned().collect::<std::collections::VecDeque<_>>(),
        _ => Default::default(),
    };
    let mut want_points = false;
    while state.remaining > 0 {
        let det = state.determined();
        if !det.is_empty() {
            for &e in &det {
                state.place(e);
            }
            want_points = !det[0].is_point();
            steps.push(Step {
                kind: StepKind::Determined,
                elements: det,
            });
            continue;
        }
        let (cands, kind) = state.free_candidates(want_points);
        let chosen = if let Some(label) = given.pop_front() {
            *cands
                .iter()
                .find(|e| c.label(**e) == label)
                .ok_or(ConstructionError::InvalidFreeChoice { label })?
        } else if matches!(policy, FreeChoice::Lexicographic) {
            *cands
                .iter()
                .min_by(|a, b| c.label(**a).cmp(c.label(**b)).then(a.cmp(b)))
                .unwrap()
        } else {
            state.rank_lookahead(cands)[0]
        };
        state.place(chosen);
        want_points = !chosen.is_point();
        steps.push(Step {
            kind,
            elements: vec![chosen],
        });
    }
    Ok(ConstructionSequence { steps })
}
