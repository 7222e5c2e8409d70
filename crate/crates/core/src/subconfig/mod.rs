//! Induced subconfigurations and the Pappus/Desargues filters.
//!
//! Embeddings are found by replaying a construction sequence of the
//! pattern inside the host from every ordered projective base of the
//! host. Constructing a line from two placed points and a point from two
//! placed lines is the same operation on Levi-graph nodes (the common
//! neighbour of two placed images), so one routine serves both roles.

mod patterns;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::construction::{find_projective_bases, plan_min_free, ConstructionSequence, StepKind};
use crate::incidence::{Configuration, Element};

pub use patterns::PatternLibrary;

/// An injective map of pattern points to host points and pattern lines
/// to host lines.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Embedding {
    pub points: Vec<usize>,
    pub lines: Vec<usize>,
}

impl Embedding {
    pub fn image(&self, e: Element) -> Element {
        match e {
            Element::Point(p) => Element::Point(self.points[p]),
            Element::Line(l) => Element::Line(self.lines[l]),
        }
    }

    /// `P1→A, …, a→x` with points first.
    pub fn to_text(&self, pattern: &Configuration, host: &Configuration) -> String {
        let pts = self
            .points
            .iter()
            .enumerate()
            .map(|(p, &h)| format!("{}→{}", pattern.point_label(p), host.point_label(h)));
        let lns = self
            .lines
            .iter()
            .enumerate()
            .map(|(l, &h)| format!("{}→{}", pattern.line_label(l), host.line_label(h)));
        pts.chain(lns).collect::<Vec<_>>().join(", ")
    }

    /// Independent check over every pattern point-line pair, injectivity
    /// and the pinned non-incidences.
    pub fn is_induced(&self, pattern: &Configuration, host: &Configuration) -> bool {
        if self.points.len() != pattern.num_points() || self.lines.len() != pattern.num_lines() {
            return false;
        }
        let distinct = |v: &[usize]| v.iter().collect::<BTreeSet<_>>().len() == v.len();
        if !distinct(&self.points) || !distinct(&self.lines) {
            return false;
        }
        for p in 0..pattern.num_points() {
            for l in 0..pattern.num_lines() {
                if pattern.incident(p, l) != host.incident(self.points[p], self.lines[l]) {
                    return false;
                }
            }
        }
        pattern
            .nonincidences()
            .iter()
            .all(|&(p, l)| !host.incident(self.points[p], self.lines[l]))
    }
}

/// Which search produced the embeddings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMethod {
    ConstructionSequence,
    Backtracking,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingSearch {
    pub method: SearchMethod,
    pub embeddings: Vec<Embedding>,
    /// The limit stopped the search early.
    pub truncated: bool,
}

/// All induced embeddings of `pattern` into `host`, sorted, at most
/// `limit` of them.
pub fn enumerate_embeddings(pattern: &Configuration, host: &Configuration, limit: Option<usize>) -> EmbeddingSearch {
    let limit = limit.unwrap_or(usize::MAX);
    let (method, mut found, truncated) = match plan_min_free(pattern, 100_000) {
        Ok(plan) => {
            let (f, t) = by_sequence(pattern, host, &plan.sequence, limit);
            (SearchMethod::ConstructionSequence, f, t)
        }
        Err(_) => {
            let (f, t) = by_backtracking(pattern, host, limit);
            (SearchMethod::Backtracking, f, t)
        }
    };
    found.sort();
    found.dedup();
    EmbeddingSearch {
        method,
        embeddings: found,
        truncated,
    }
}

/// Host elements are Levi nodes: points `0..p`, lines `p..`.
struct Matcher<'a> {
    pattern: &'a Configuration,
    host: &'a Configuration,
    steps: Vec<(StepKind, Vec<Element>)>,
    /// Pattern node to host node.
    phi: Vec<Option<Element>>,
    used_points: Vec<bool>,
    used_lines: Vec<bool>,
    placed: Vec<Element>,
    found: Vec<Embedding>,
    limit: usize,
}

impl<'a> Matcher<'a> {
    fn node(&self, e: Element) -> usize {
        match e {
            Element::Point(p) => p,
            Element::Line(l) => self.pattern.num_points() + l,
        }
    }

    fn used(&self, h: Element) -> bool {
        match h {
            Element::Point(p) => self.used_points[p],
            Element::Line(l) => self.used_lines[l],
        }
    }

    fn set_used(&mut self, h: Element, v: bool) {
        match h {
            Element::Point(p) => self.used_points[p] = v,
            Element::Line(l) => self.used_lines[l] = v,
        }
    }

    fn image(&self, e: Element) -> Element {
        self.phi[self.node(e)].expect("placed")
    }

    /// `q ∈ ℓ ⟺ φ(q) ∈ φ(ℓ)` between `e` and every placed element of the
    /// other kind.
    fn iff_check(&self, e: Element, h: Element) -> bool {
        self.placed.iter().all(|&x| {
            x.is_point() == e.is_point() || self.pattern.are_incident(e, x) == self.host.are_incident(h, self.image(x))
        })
    }

    fn assign(&mut self, e: Element, h: Element) {
        let v = self.node(e);
        self.phi[v] = Some(h);
        self.set_used(h, true);
        self.placed.push(e);
    }

    fn unassign(&mut self, e: Element) {
        let v = self.node(e);
        let h = self.phi[v].take().expect("placed");
        self.set_used(h, false);
        self.placed.pop();
    }

    fn placed_neighbors(&self, e: Element) -> Vec<Element> {
        self.pattern
            .neighbors(e)
            .into_iter()
            .filter(|&x| self.phi[self.node(x)].is_some())
            .collect()
    }

    /// The host element joining (meeting) the images of two placed
    /// elements: the common Levi neighbour.
    fn construct(&self, a: Element, b: Element) -> Option<Element> {
        match (self.image(a), self.image(b)) {
            (Element::Point(p), Element::Point(q)) => self.host.join(p, q).map(Element::Line),
            (Element::Line(l), Element::Line(m)) => self.host.meet(l, m).map(Element::Point),
            _ => None,
        }
    }

    fn run(&mut self, step: usize) -> bool {
        if self.found.len() >= self.limit {
            return false;
        }
        if step == self.steps.len() {
            let mut points = vec![0; self.pattern.num_points()];
            let mut lines = vec![0; self.pattern.num_lines()];
            for p in 0..self.pattern.num_points() {
                points[p] = self.image(Element::Point(p)).index();
            }
            for l in 0..self.pattern.num_lines() {
                lines[l] = self.image(Element::Line(l)).index();
            }
            let emb = Embedding { points, lines };
            if emb.is_induced(self.pattern, self.host) {
                self.found.push(emb);
            }
            return true;
        }
        let (kind, group) = self.steps[step].clone();
        match kind {
            StepKind::Base => unreachable!("base handled by caller"),
            StepKind::Determined => {
                let mut done = Vec::new();
                let mut ok = true;
                for &e in &group {
                    let nb = self.placed_neighbors(e);
                    let h = match self.construct(nb[0], nb[1]) {
                        Some(h) if !self.used(h) && self.iff_check(e, h) => h,
                        _ => {
                            ok = false;
                            break;
                        }
                    };
                    self.assign(e, h);
                    done.push(e);
                }
                let keep_going = if ok { self.run(step + 1) } else { true };
                for e in done.into_iter().rev() {
                    self.unassign(e);
                }
                keep_going
            }
            StepKind::Free | StepKind::Restart => {
                let e = group[0];
                let nb = self.placed_neighbors(e);
                let candidates: Vec<Element> = match nb.first() {
                    Some(&x) => self.host.neighbors(self.image(x)),
                    None if e.is_point() => (0..self.host.num_points()).map(Element::Point).collect(),
                    None => (0..self.host.num_lines()).map(Element::Line).collect(),
                };
                for h in candidates {
                    if self.used(h) || !self.iff_check(e, h) {
                        continue;
                    }
                    self.assign(e, h);
                    let go = self.run(step + 1);
                    self.unassign(e);
                    if !go {
                        return false;
                    }
                }
                true
            }
        }
    }
}

fn by_sequence(
    pattern: &Configuration,
    host: &Configuration,
    seq: &ConstructionSequence,
    limit: usize,
) -> (Vec<Embedding>, bool) {
    let base: Vec<usize> = seq.steps[0].elements.iter().map(|e| e.index()).collect();
    let mut m = Matcher {
        pattern,
        host,
        steps: seq.steps.iter().map(|s| (s.kind, s.elements.clone())).collect(),
        phi: vec![None; pattern.num_elements()],
        used_points: vec![false; host.num_points()],
        used_lines: vec![false; host.num_lines()],
        placed: Vec::new(),
        found: Vec::new(),
        limit,
    };
    let degree = |c: &Configuration, p: usize| c.lines_through(p).len();
    'outer: for hb in find_projective_bases(host) {
        for order in permutations4() {
            let pi: Vec<usize> = order.iter().map(|&i| hb.0[i]).collect();
            if (0..4).any(|i| degree(host, pi[i]) < degree(pattern, base[i])) {
                continue;
            }
            let mut ok = true;
            for i in 0..4 {
                let (e, h) = (Element::Point(base[i]), Element::Point(pi[i]));
                if !m.iff_check(e, h) {
                    ok = false;
                }
                m.assign(e, h);
            }
            let go = if ok { m.run(1) } else { true };
            for i in (0..4).rev() {
                m.unassign(Element::Point(base[i]));
            }
            if !go {
                break 'outer;
            }
        }
    }
    let truncated = m.found.len() >= limit;
    (m.found, truncated)
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let v = [a, b, c, d];
                    if (0..4).all(|i| v.contains(&i)) {
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

/// Plain backtracking over pattern Levi nodes in breadth-first order,
/// for patterns without a projective base.
fn by_backtracking(pattern: &Configuration, host: &Configuration, limit: usize) -> (Vec<Embedding>, bool) {
    let np = pattern.num_points();
    let elem = |v: usize| {
        if v < np {
            Element::Point(v)
        } else {
            Element::Line(v - np)
        }
    };
    let g = pattern.levi_graph();
    let mut order = Vec::new();
    let mut seen = vec![false; g.num_nodes()];
    for s in 0..g.num_nodes() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(elem(v));
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    // every node after a component root has exactly its BFS parent placed
    // among earlier nodes at least, so a free step generates candidates
    let steps = order.iter().map(|&e| (StepKind::Free, vec![e])).collect::<Vec<_>>();
    let mut m = Matcher {
        pattern,
        host,
        steps,
        phi: vec![None; pattern.num_elements()],
        used_points: vec![false; host.num_points()],
        used_lines: vec![false; host.num_lines()],
        placed: Vec::new(),
        found: Vec::new(),
        limit,
    };
    m.run(0);
    let truncated = m.found.len() >= limit;
    (m.found, truncated)
}

/// Result of the theorem filters on a host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub pappus: bool,
    pub desargues: bool,
    /// A non-Pappus embedding when `pappus` is false.
    pub pappus_violation: Option<Embedding>,
    /// A non-Desargues embedding when `desargues` is false.
    pub desargues_violation: Option<Embedding>,
}

/// A host is compatible with Pappus' (Desargues') theorem when it has no
/// induced non-Pappus (non-Desargues) subconfiguration.
pub fn theorem_compatible(host: &Configuration) -> TheoremReport {
    let lib = PatternLibrary::new();
    let first = |pat: &Configuration| enumerate_embeddings(pat, host, Some(1)).embeddings.into_iter().next();
    let pv = first(&lib.non_pappus);
    let dv = first(&lib.non_desargues);
    TheoremReport {
        pappus: pv.is_none(),
        desargues: dv.is_none(),
        pappus_violation: pv,
        desargues_violation: dv,
    }
}
