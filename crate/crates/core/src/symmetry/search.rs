//! Levi-graph automorphism search by backtracking.
//!
//! Nodes are assigned in breadth-first order, so after the first node of
//! each component every node has an already-assigned neighbour and its
//! candidates come from that neighbour's image. Candidates must also
//! match the distance profile and all distances to assigned nodes.

use std::collections::VecDeque;

use super::group::AutGroup;
use super::Correspondence;
use crate::incidence::{Configuration, LeviGraph};

/// All automorphisms of the Levi graph of `c`, split into preserving
/// automorphisms and dualities, sorted.
pub fn automorphism_group(c: &Configuration) -> AutGroup {
    let g = c.levi_graph();
    let mut s = Searcher::new(&g);
    s.run();
    let mut elements: Vec<Correspondence> = s
        .found
        .into_iter()
        .filter_map(|img| Correspondence::from_node_images(c.num_points(), img).ok())
        .collect();
    elements.sort();
    AutGroup::new(elements)
}

struct Searcher<'a> {
    g: &'a LeviGraph,
    dist: Vec<Vec<usize>>,
    profile: Vec<Vec<usize>>,
    order: Vec<usize>,
    /// Assigned neighbour used to generate candidates, per position.
    anchor: Vec<Option<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Vec<usize>>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a LeviGraph) -> Self {
        let n = g.num_nodes();
        let dist = g.distance_matrix();
        let profile = dist
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.sort_unstable();
                r
            })
            .collect();
        let mut order = Vec::with_capacity(n);
        let mut anchor = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([(s, None)]);
            while let Some((v, a)) = queue.pop_front() {
                order.push(v);
                anchor.push(a);
                for &w in g.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back((w, Some(v)));
                    }
                }
            }
        }
        Searcher {
            g,
            dist,
            profile,
            order,
            anchor,
            image: vec![usize::MAX; n],
            used: vec![false; n],
            found: Vec::new(),
        }
    }

    fn run(&mut self) {
        self.extend(0);
    }

    fn extend(&mut self, pos: usize) {
        if pos == self.order.len() {
            self.found.push(self.image.clone());
            return;
        }
        let v = self.order[pos];
        let candidates: Vec<usize> = match self.anchor[pos] {
            Some(a) => self.g.neighbors(self.image[a]).to_vec(),
            None => (0..self.g.num_nodes()).collect(),
        };
        for w in candidates {
            if self.used[w] || self.profile[v] != self.profile[w] {
                continue;
            }
            let consistent = self.order[..pos]
                .iter()
                .all(|&u| self.dist[v][u] == self.dist[w][self.image[u]]);
            if !consistent {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            self.extend(pos + 1);
            self.used[w] = false;
            self.image[v] = usize::MAX;
        }
    }
}
