//! Levi (incidence) graphs.

use std::collections::VecDeque;

use serde::Serialize;

use super::{Configuration, Element};

/// Bipartite incidence graph. Nodes `0..p` are points, `p..p+l` lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviGraph {
    num_points: usize,
    labels: Vec<String>,
    adjacency: Vec<Vec<usize>>,
}

impl LeviGraph {
    pub fn new(c: &Configuration) -> Self {
        let np = c.num_points();
        let mut adjacency = vec![Vec::new(); c.num_elements()];
        for p in 0..np {
            for &l in c.lines_through(p) {
                adjacency[p].push(np + l);
                adjacency[np + l].push(p);
            }
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        let labels = c.point_labels().iter().chain(c.line_labels()).cloned().collect();
        LeviGraph {
            num_points: np,
            labels,
            adjacency,
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn is_point(&self, v: usize) -> bool {
        v < self.num_points
    }

    pub fn element(&self, v: usize) -> Element {
        if v < self.num_points {
            Element::Point(v)
        } else {
            Element::Line(v - self.num_points)
        }
    }

    pub fn node(&self, e: Element) -> usize {
        match e {
            Element::Point(p) => p,
            Element::Line(l) => self.num_points + l,
        }
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Edges as `(point node, line node)` pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.num_points)
            .flat_map(|p| self.adjacency[p].iter().map(move |&l| (p, l)))
            .collect()
    }

    /// Breadth-first distances from `s`; unreachable nodes get `usize::MAX`.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.num_nodes()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.num_nodes()).map(|s| self.distances_from(s)).collect()
    }

    /// Length of a shortest cycle, `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.num_nodes() {
            let mut dist = vec![usize::MAX; self.num_nodes()];
            let mut parent = vec![usize::MAX; self.num_nodes()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn to_json(&self) -> LeviJson<'_> {
        LeviJson {
            nodes: (0..self.num_nodes())
                .map(|v| NodeJson {
                    label: &self.labels[v],
                    kind: if self.is_point(v) { "point" } else { "line" },
                })
                .collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|(p, l)| (self.labels[p].as_str(), self.labels[l].as_str()))
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct LeviJson<'a> {
    pub nodes: Vec<NodeJson<'a>>,
    pub edges: Vec<(&'a str, &'a str)>,
}

#[derive(Serialize)]
pub struct NodeJson<'a> {
    pub label: &'a str,
    pub kind: &'static str,
}
