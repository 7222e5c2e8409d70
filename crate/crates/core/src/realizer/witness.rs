//! Concrete coordinates from a satisfying assignment, their independent
//! verification, and an SVG drawing.

use std::fmt::Write as _;

use num_traits::Zero;
use serde_json::{json, Value as Json};

use crate::incidence::Configuration;
use crate::polyalg::poly::format_rational;
use crate::polyalg::univariate::sign;
use crate::polyalg::{sign_at_root, Rational, RealRoot, UPoly};

use super::certificate::root_text;
use super::solve::{Assignment, Value};
use super::vector::SymbolicVector;

/// Coordinates of every point and line, as polynomials in one real
/// algebraic number or as rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// The algebraic parameter and its variable name, if any.
    pub root: Option<(String, RealRoot)>,
    /// Parameter values as text.
    pub parameters: Vec<(String, String)>,
    /// Per Levi node (points first), coordinates as polynomials in the
    /// algebraic parameter.
    pub coords: Vec<[UPoly; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("{0} has the zero vector")]
    ZeroVector(String),
    #[error("{point} and {line} should be incident")]
    MissingIncidence { point: String, line: String },
    #[error("{point} and {line} should not be incident")]
    ExtraIncidence { point: String, line: String },
    #[error("{0} and {1} coincide")]
    Coincide(String, String),
    #[error("missing coordinates")]
    Incomplete,
}

impl Witness {
    pub(crate) fn build(vectors: &[Option<SymbolicVector>], a: &Assignment, names: &[&str]) -> Option<Witness> {
        let rv = a.root.as_ref().map(|(v, _)| *v);
        let mut coords = Vec::with_capacity(vectors.len());
        for v in vectors {
            coords.push(reduce_vector(v.as_ref()?, a)?);
        }
        let name = |v: usize| names.get(v).map_or_else(|| format!("x{v}"), |s| s.to_string());
        let mut parameters = Vec::new();
        if let Some((v, r)) = &a.root {
            parameters.push((name(*v), root_text(r, *v, names)));
        }
        for (&v, val) in &a.values {
            let text = match val {
                Value::Rational(q) => format_rational(q),
                Value::Function { num, den } => {
                    let rv = rv.expect("functions need a root");
                    format!(
                        "({}) / ({})",
                        num.to_poly(rv).display_with(names),
                        den.to_poly(rv).display_with(names)
                    )
                }
            };
            parameters.push((name(v), text));
        }
        let mut w = Witness {
            root: a.root.as_ref().map(|(v, r)| (name(*v), r.clone())),
            parameters,
            coords,
        };
        w.simplify();
        Some(w)
    }

    /// Scales rational vectors to coprime integers.
    fn simplify(&mut self) {
        if self.root.is_some() {
            return;
        }
        for v in &mut self.coords {
            let vals: Vec<Rational> = v.iter().map(|u| u.eval(&Rational::zero())).collect();
            let ints = primitive_integers(&vals);
            *v = ints.map(|x| UPoly::new(vec![x]));
        }
    }

    pub fn is_rational(&self) -> bool {
        self.root.is_none()
    }

    /// Exact rational coordinates per node, when there is no algebraic
    /// parameter.
    pub fn rational_coords(&self) -> Option<Vec<[Rational; 3]>> {
        if self.root.is_some() {
            return None;
        }
        Some(
            self.coords
                .iter()
                .map(|v| [0, 1, 2].map(|i| v[i].eval(&Rational::zero())))
                .collect(),
        )
    }

    pub fn point_coords(&self, c: &Configuration) -> Option<Vec<[Rational; 3]>> {
        self.rational_coords().map(|v| v[..c.num_points()].to_vec())
    }

    pub fn line_coords(&self, c: &Configuration) -> Option<Vec<[Rational; 3]>> {
        self.rational_coords().map(|v| v[c.num_points()..].to_vec())
    }

    fn sign(&self, u: &UPoly) -> i8 {
        match &self.root {
            Some((_, r)) => sign_at_root(u, r),
            None => sign(&u.eval(&Rational::zero())),
        }
    }

    /// Floating-point coordinates per node.
    pub fn approx(&self) -> Vec<[f64; 3]> {
        let x = self.root.as_ref().map_or(0.0, |(_, r)| r.approx());
        self.coords
            .iter()
            .map(|v| [0, 1, 2].map(|i| v[i].eval_f64(x)))
            .collect()
    }

    fn coord_text(&self, u: &UPoly) -> String {
        match &self.root {
            None => format_rational(&u.eval(&Rational::zero())),
            Some((name, _)) => {
                let names = [name.as_str()];
                u.to_poly(0).display_with(&names).to_string()
            }
        }
    }

    pub fn to_json(&self, c: &Configuration) -> Json {
        let np = c.num_points();
        let rows = |range: std::ops::Range<usize>, label: &dyn Fn(usize) -> String| -> Json {
            let mut m = serde_json::Map::new();
            for i in range {
                let v = &self.coords[i];
                m.insert(
                    label(i),
                    Json::Array([0, 1, 2].map(|k| Json::String(self.coord_text(&v[k]))).to_vec()),
                );
            }
            Json::Object(m)
        };
        let params: serde_json::Map<String, Json> = self
            .parameters
            .iter()
            .map(|(k, v)| (k.clone(), Json::String(v.clone())))
            .collect();
        json!({
            "exact": self.is_rational(),
            "parameters": params,
            "points": rows(0..np, &|i| c.point_label(i).to_string()),
            "lines": rows(np..c.num_elements(), &|i| c.line_label(i - np).to_string()),
        })
    }
}

/// Independent check against the incidence matrix: every vector is
/// nonzero, no two points or two lines coincide, and every point-line
/// pair is orthogonal exactly when incident.
pub fn verify_witness(c: &Configuration, w: &Witness) -> Result<(), WitnessError> {
    let np = c.num_points();
    if w.coords.len() != c.num_elements() {
        return Err(WitnessError::Incomplete);
    }
    let label = |i: usize| {
        if i < np {
            c.point_label(i).to_string()
        } else {
            c.line_label(i - np).to_string()
        }
    };
    for (i, v) in w.coords.iter().enumerate() {
        if v.iter().all(|u| w.sign(u) == 0) {
            return Err(WitnessError::ZeroVector(label(i)));
        }
    }
    for range in [0..np, np..c.num_elements()] {
        for i in range.clone() {
            for j in range.clone().filter(|&j| j > i) {
                let (a, b) = (&w.coords[i], &w.coords[j]);
                let cr = [
                    &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
                    &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
                    &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
                ];
                if cr.iter().all(|u| w.sign(u) == 0) {
                    return Err(WitnessError::Coincide(label(i), label(j)));
                }
            }
        }
    }
    for p in 0..np {
        for l in 0..c.num_lines() {
            let a = &w.coords[p];
            let b = &w.coords[np + l];
            let d = &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2]);
            let on = w.sign(&d) == 0;
            let (point, line) = (c.point_label(p).to_string(), c.line_label(l).to_string());
            match (c.incident(p, l), on) {
                (true, false) => return Err(WitnessError::MissingIncidence { point, line }),
                (false, true) => return Err(WitnessError::ExtraIncidence { point, line }),
                _ => {}
            }
        }
    }
    Ok(())
}

fn reduce_vector(v: &SymbolicVector, a: &Assignment) -> Option<[UPoly; 3]> {
    // substitute rational-function values with a common power of the
    // denominator so the three coordinates stay proportional
    let mut coords = v.0.clone();
    for (&var, val) in &a.values {
        if let (Value::Function { num, den }, Some((rv, _))) = (val, &a.root) {
            let d = coords.iter().map(|x| x.degree_in(var)).max().unwrap_or(0);
            let (n, dd) = (num.to_poly(*rv), den.to_poly(*rv));
            coords = coords.map(|x| {
                let (q, e) = x.subst_rational_function(var, &n, &dd).expect("nonzero denominator");
                &q * &dd.pow(d - e)
            });
        }
    }
    let mut out = Vec::with_capacity(3);
    for x in &coords {
        out.push(a.reduce(x)?);
    }
    Some([out[0].clone(), out[1].clone(), out[2].clone()])
}

fn primitive_integers(v: &[Rational]) -> [Rational; 3] {
    use num_integer::Integer;
    let mut den = num_bigint::BigInt::from(1);
    for x in v {
        den = den.lcm(x.denom());
    }
    let ints: Vec<num_bigint::BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let mut g = num_bigint::BigInt::from(0);
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        g = 1.into();
    }
    [0, 1, 2].map(|i| Rational::from_integer(&ints[i] / &g))
}

/// Points as dots and lines as chords of a disk around the points, in an
/// affine chart that keeps every point finite.
pub fn to_svg(c: &Configuration, w: &Witness) -> String {
    let np = c.num_points();
    let approx = w.approx();
    let unit = |v: [f64; 3]| {
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        v.map(|x| x / n)
    };
    let dotf = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    let points: Vec<[f64; 3]> = approx[..np].iter().map(|&v| unit(v)).collect();
    let lines: Vec<[f64; 3]> = approx[np..].iter().map(|&v| unit(v)).collect();

    // line at infinity: the candidate farthest from every point
    let candidates: [[f64; 3]; 7] = [
        [0.0, 0.0, 1.0],
        [1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [1.0, 1.0, 1.0],
        [1.0, 2.0, 3.0],
        [3.0, -1.0, 2.0],
        [-2.0, 3.0, 1.0],
    ];
    let inf = candidates
        .iter()
        .map(|&z| unit(z))
        .max_by(|a, b| {
            let score = |z: [f64; 3]| points.iter().map(|&p| dotf(p, z).abs()).fold(f64::INFINITY, f64::min);
            score(*a).total_cmp(&score(*b))
        })
        .expect("candidates");
    // orthonormal basis of the complement of `inf`
    let seed = if inf[0].abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    let s = dotf(seed, inf);
    let u1 = unit([seed[0] - s * inf[0], seed[1] - s * inf[1], seed[2] - s * inf[2]]);
    let u2 = [
        inf[1] * u1[2] - inf[2] * u1[1],
        inf[2] * u1[0] - inf[0] * u1[2],
        inf[0] * u1[1] - inf[1] * u1[0],
    ];
    let chart = |p: [f64; 3]| {
        let h = dotf(p, inf);
        (dotf(p, u1) / h, dotf(p, u2) / h)
    };
    let xy: Vec<(f64, f64)> = points.iter().map(|&p| chart(p)).collect();
    let n = xy.len().max(1) as f64;
    let cx = xy.iter().map(|p| p.0).sum::<f64>() / n;
    let cy = xy.iter().map(|p| p.1).sum::<f64>() / n;
    let r = xy
        .iter()
        .map(|p| ((p.0 - cx).powi(2) + (p.1 - cy).powi(2)).sqrt())
        .fold(0.0, f64::max)
        .max(1e-9)
        * 1.15;
    let size = 600.0;
    let scale = size / 2.0 / r * 0.95;
    let tx = |x: f64| size / 2.0 + (x - cx) * scale;
    let ty = |y: f64| size / 2.0 - (y - cy) * scale;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
    );
    let _ = writeln!(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
    for (l, &lv) in lines.iter().enumerate() {
        // a*s + b*t + c0 = 0 in chart coordinates
        let a = dotf(lv, u1);
        let b = dotf(lv, u2);
        let c0 = dotf(lv, inf);
        let norm = (a * a + b * b).sqrt();
        if norm < 1e-12 {
            continue;
        }
        let dist = (a * cx + b * cy + c0) / norm;
        if dist.abs() >= r {
            continue;
        }
        let (fx, fy) = (cx - a / norm * dist, cy - b / norm * dist);
        let half = (r * r - dist * dist).sqrt();
        let (dx, dy) = (-b / norm, a / norm);
        let _ = writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#4477aa\" stroke-width=\"1\"><title>{}</title></line>",
            tx(fx - dx * half),
            ty(fy - dy * half),
            tx(fx + dx * half),
            ty(fy + dy * half),
            c.line_label(l)
        );
    }
    for (p, &(x, y)) in xy.iter().enumerate() {
        let _ = writeln!(
            out,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"black\"/><text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\">{}</text>",
            tx(x),
            ty(y),
            tx(x) + 5.0,
            ty(y) - 5.0,
            c.point_label(p)
        );
    }
    out.push_str("</svg>\n");
    out
}
