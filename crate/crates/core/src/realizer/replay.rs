//! Replays a construction sequence with symbolic coordinates.
//!
//! Each free step forks into the affine part of the pencil (one new
//! variable) and its excluded line at infinity. A pencil whose pivot
//! coordinate is a nonconstant polynomial forks once more on whether the
//! pivot vanishes.

use crate::construction::{ConstructionSequence, StepKind};
use crate::incidence::{Configuration, Element};
use crate::polyalg::Poly;

use super::certificate::CertStep;
use super::system::{Constraint, ConstraintSystem, Provenance};
use super::vector::{cross, dot, pencil_basis, pencil_member, pivot_coordinate, Normalization, SymbolicVector};

/// One line of the case split produced by the replay.
#[derive(Debug, Clone)]
pub struct Branch {
    /// Choices made at free steps, e.g. `f: finite`.
    pub choices: Vec<String>,
    /// Coordinates per Levi node (points first, then lines).
    pub vectors: Vec<Option<SymbolicVector>>,
    pub system: ConstraintSystem,
    /// Set when a join or meet degenerated during the replay.
    pub closed: Option<CertStep>,
}

impl Branch {
    pub fn label(&self) -> String {
        if self.choices.is_empty() {
            "main".to_string()
        } else {
            self.choices.join(", ")
        }
    }

    pub fn vector(&self, c: &Configuration, e: Element) -> Option<&SymbolicVector> {
        self.vectors[node(c, e)].as_ref()
    }
}

fn node(c: &Configuration, e: Element) -> usize {
    match e {
        Element::Point(p) => p,
        Element::Line(l) => c.num_points() + l,
    }
}

/// The fixed frame for the four base points, in the order listed by the
/// base step.
pub const FRAME: [[i64; 3]; 4] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];

struct Replayer<'a> {
    c: &'a Configuration,
    seq: &'a ConstructionSequence,
    norm: Normalization,
    out: Vec<Branch>,
}

pub fn replay(c: &Configuration, seq: &ConstructionSequence, norm: Normalization) -> Vec<Branch> {
    let mut r = Replayer {
        c,
        seq,
        norm,
        out: Vec::new(),
    };
    let mut b = Branch {
        choices: Vec::new(),
        vectors: vec![None; c.num_elements()],
        system: ConstraintSystem::default(),
        closed: None,
    };
    for (i, &e) in seq.steps[0].elements.iter().enumerate() {
        b.vectors[node(c, e)] = Some(SymbolicVector::from_ints(FRAME[i]));
    }
    r.go(b, 1, 0);
    r.out
}

impl Replayer<'_> {
    /// Continues the replay at element `k` of step `s`.
    fn go(&mut self, mut b: Branch, mut s: usize, mut k: usize) {
        let c = self.c;
        while s < self.seq.steps.len() {
            let step = &self.seq.steps[s];
            if k >= step.elements.len() {
                s += 1;
                k = 0;
                continue;
            }
            let x = step.elements[k];
            let placed: Vec<Element> = c
                .neighbors(x)
                .into_iter()
                .filter(|&y| b.vectors[node(c, y)].is_some())
                .collect();
            match step.kind {
                StepKind::Base | StepKind::Determined => {
                    let u = b.vectors[node(c, placed[0])].clone().expect("placed");
                    let v = b.vectors[node(c, placed[1])].clone().expect("placed");
                    let w = cross(&u, &v);
                    if w.is_zero() {
                        b.closed = Some(CertStep::Coincidence {
                            element: c.label(x).to_string(),
                            from: [c.label(placed[0]).to_string(), c.label(placed[1]).to_string()],
                        });
                        self.out.push(b);
                        return;
                    }
                    self.store(&mut b, x, w);
                }
                StepKind::Free => {
                    let p = b.vectors[node(c, placed[0])].clone().expect("placed");
                    self.free_step(b, s, k, x, p, 0);
                    return;
                }
                StepKind::Restart => {
                    self.restart(b, s, k, x);
                    return;
                }
            }
            k += 1;
        }
        self.out.push(b);
    }

    /// Stores the vector of `x` (normalized, with any stripped factor
    /// recorded as nonzero) and emits its constraints against every
    /// placed element of the other kind.
    fn store(&self, b: &mut Branch, x: Element, w: SymbolicVector) {
        let c = self.c;
        let (g, reduced) = w.normalize().expect("nonzero vector");
        if !g.is_constant() {
            b.system.inequalities.push(Constraint::new(
                g,
                Provenance::Degenerate {
                    element: c.label(x).to_string(),
                },
            ));
        }
        let v = match self.norm {
            Normalization::Reduced => reduced,
            Normalization::Raw => w,
        };
        let others: Vec<Element> = match x {
            Element::Point(_) => (0..c.num_lines()).map(Element::Line).collect(),
            Element::Line(_) => (0..c.num_points()).map(Element::Point).collect(),
        };
        for y in others {
            let Some(u) = b.vectors[node(c, y)].as_ref() else {
                continue;
            };
            let (p, l) = match (x, y) {
                (Element::Point(p), Element::Line(l)) | (Element::Line(l), Element::Point(p)) => (p, l),
                _ => unreachable!("other kind"),
            };
            let point = c.point_label(p).to_string();
            let line = c.line_label(l).to_string();
            let poly = dot(&v, u);
            if c.incident(p, l) {
                b.system
                    .equalities
                    .push(Constraint::new(poly, Provenance::Incidence { point, line }));
            } else {
                b.system
                    .inequalities
                    .push(Constraint::new(poly, Provenance::NonIncidence { point, line }));
            }
        }
        b.vectors[node(c, x)] = Some(v);
    }

    /// Pencil through `p` using pivot formula `pivot`; forks on symbolic
    /// pivots and then on the parameter at infinity.
    fn free_step(&mut self, b: Branch, s: usize, k: usize, x: Element, p: SymbolicVector, pivot: usize) {
        let c = self.c;
        let label = c.label(x).to_string();
        let coord = pivot_coordinate(&p, pivot).clone();
        let last = (pivot + 1..3).all(|q| pivot_coordinate(&p, q).is_zero());
        if coord.is_zero() {
            self.free_step(b, s, k, x, p, pivot + 1);
            return;
        }
        let pivot_prov = || Provenance::Pivot { element: label.clone() };
        if !coord.is_constant() && !last {
            let mut zero = b.clone();
            zero.choices.push(format!("{label}: pivot {} = 0", pivot_name(pivot)));
            zero.system
                .equalities
                .push(Constraint::new(coord.clone(), pivot_prov()));
            self.free_step(zero, s, k, x, p.clone(), pivot + 1);
        }
        let mut b = b;
        if !coord.is_constant() {
            b.system.inequalities.push(Constraint::new(coord, pivot_prov()));
        }
        let (l0, l1) = pencil_basis(&p, pivot);

        let mut finite = b.clone();
        let t = finite.system.add_variable();
        finite.choices.push(format!("{label}: finite"));
        self.store(&mut finite, x, pencil_member(&l0, &l1, t));
        self.go(finite, s, k + 1);

        let mut infinite = b;
        infinite.choices.push(format!("{label}: at infinity"));
        self.store(&mut infinite, x, l1);
        self.go(infinite, s, k + 1);
    }

    /// An element with no placed incidence: affine chart, then the line
    /// at infinity of the chart, then its last point.
    fn restart(&mut self, b: Branch, s: usize, k: usize, x: Element) {
        let label = self.c.label(x).to_string();
        let mut affine = b.clone();
        let t1 = affine.system.add_variable();
        let t2 = affine.system.add_variable();
        affine.choices.push(format!("{label}: affine"));
        let v = SymbolicVector([Poly::var(t1), Poly::var(t2), Poly::one()]);
        self.store(&mut affine, x, v);
        self.go(affine, s, k + 1);

        let mut at_inf = b.clone();
        let t = at_inf.system.add_variable();
        at_inf.choices.push(format!("{label}: at infinity"));
        let v = SymbolicVector([Poly::var(t), Poly::one(), Poly::zero()]);
        self.store(&mut at_inf, x, v);
        self.go(at_inf, s, k + 1);

        let mut corner = b;
        corner.choices.push(format!("{label}: corner"));
        self.store(&mut corner, x, SymbolicVector::from_ints([1, 0, 0]));
        self.go(corner, s, k + 1);
    }
}

fn pivot_name(pivot: usize) -> &'static str {
    ["y", "z", "x"][pivot]
}
