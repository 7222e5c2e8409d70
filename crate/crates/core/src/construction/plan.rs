//! Search for a construction sequence with the fewest free steps.

use serde::Serialize;

use super::{find_projective_bases, ConstructionError, ConstructionSequence, ProjectiveBase, State, Step, StepKind};
use crate::incidence::{Configuration, Element};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Plan {
    pub base: ProjectiveBase,
    pub sequence: ConstructionSequence,
    pub free_count: usize,
    /// Search nodes visited.
    pub explored: u64,
    /// The budget ran out before the search finished; the plan is the
    /// best found so far.
    pub exhausted: bool,
}

/// Branch-and-bound over all bases (lexicographic) and all free choices
/// (best lookahead first). Ties keep the first sequence found, so the
/// result is deterministic. `budget` caps the number of free-step
/// branches explored.
pub fn plan_min_free(c: &Configuration, budget: u64) -> Result<Plan, ConstructionError> {
    let bases = find_projective_bases(c);
    if bases.is_empty() {
        return Err(ConstructionError::NoProjectiveBase);
    }
    Ok(plan_over(c, bases, budget))
}

/// The same search with the base fixed.
pub fn plan_from_base(c: &Configuration, base: ProjectiveBase, budget: u64) -> Plan {
    plan_over(c, vec![base], budget)
}

fn plan_over(c: &Configuration, bases: Vec<ProjectiveBase>, budget: u64) -> Plan {
    let mut search = Search {
        budget,
        explored: 0,
        exhausted: false,
        best: None,
    };
    for b in bases {
        if search.best.as_ref().is_some_and(|(f, _)| *f == 0) {
            break;
        }
        let mut state = State::new(c);
        for &p in &b.0 {
            state.place(Element::Point(p));
        }
        let steps = vec![Step {
            kind: StepKind::Base,
            elements: b.0.iter().map(|&p| Element::Point(p)).collect(),
        }];
        search.explore(state, steps, false, 0);
        if search.exhausted && search.best.is_some() {
            break;
        }
    }
    let (free_count, sequence) = search.best.expect("every base yields a sequence");
    Plan {
        base: sequence.base().expect("sequence starts with a base"),
        sequence,
        free_count,
        explored: search.explored,
        exhausted: search.exhausted,
    }
}

struct Search {
    budget: u64,
    explored: u64,
    exhausted: bool,
    best: Option<(usize, ConstructionSequence)>,
}

impl Search {
    fn bound(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, |(f, _)| *f)
    }

    fn explore(&mut self, mut state: State<'_>, mut steps: Vec<Step>, mut want_points: bool, free: usize) {
        loop {
            if state.remaining == 0 {
                if free < self.bound() {
                    self.best = Some((free, ConstructionSequence { steps }));
                }
                return;
            }
            let det = state.determined();
            if det.is_empty() {
                break;
            }
            for &e in &det {
                state.place(e);
            }
            want_points = !det[0].is_point();
            steps.push(Step {
                kind: StepKind::Determined,
                elements: det,
            });
        }
        if free + 1 >= self.bound() {
            return;
        }
        let (cands, kind) = state.free_candidates(want_points);
        for e in state.rank_lookahead(cands) {
            if self.explored >= self.budget && self.best.is_some() {
                self.exhausted = true;
                return;
            }
            self.explored += 1;
            let mut next = state.clone();
            next.place(e);
            let mut s = steps.clone();
            s.push(Step {
                kind,
                elements: vec![e],
            });
            self.explore(next, s, !e.is_point(), free + 1);
            if free + 1 >= self.bound() {
                return;
            }
        }
    }
}
