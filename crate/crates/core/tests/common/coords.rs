//! Coordinate and witness checks shared by the realizer tests.

use nkconfig::construction::ConstructionSequence;
use nkconfig::polyalg::{parse_poly, Poly, Rational, VAR_NAMES};
use nkconfig::realizer::{Branch, Witness};
use nkconfig::{Configuration, Element};
use num_traits::Zero;

use super::{load, SEQUENCES};

pub fn p(s: &str) -> Poly {
    parse_poly(s, &VAR_NAMES).unwrap()
}

pub fn printed(name: &str) -> (Configuration, ConstructionSequence) {
    let (_, text, _, _) = SEQUENCES.iter().find(|s| s.0 == name).unwrap();
    let c = load(name);
    let s = ConstructionSequence::parse(&c, text).unwrap();
    (c, s)
}

pub fn element(c: &Configuration, label: &str) -> Element {
    match c.point_index(label) {
        Some(i) => Element::Point(i),
        None => Element::Line(c.line_index(label).unwrap()),
    }
}

/// All 2x2 minors vanish and both are nonzero.
pub fn proportional(a: &[Poly; 3], b: &[Poly; 3]) -> bool {
    let nonzero = |v: &[Poly; 3]| v.iter().any(|x| !x.is_zero());
    let minors_vanish = (0..3).all(|i| (i + 1..3).all(|j| (&(&a[i] * &b[j]) - &(&a[j] * &b[i])).is_zero()));
    nonzero(a) && nonzero(b) && minors_vanish
}

/// Each listed element's vector is proportional to the expected one.
pub fn check_coordinates(c: &Configuration, b: &Branch, expected: &[(&str, [&str; 3])]) -> Result<(), String> {
    for (label, coords) in expected {
        let want = coords.map(p);
        let got = b
            .vector(c, element(c, label))
            .ok_or_else(|| format!("{label} unplaced"))?;
        if !proportional(&got.0, &want) {
            return Err(format!("{label}: got {}", got.display_with(&VAR_NAMES)));
        }
    }
    Ok(())
}

pub fn branch<'a>(bs: &'a [Branch], label: &str) -> &'a Branch {
    bs.iter().find(|b| b.label() == label).unwrap()
}

pub fn same_up_to_sign(a: &Poly, b: &Poly) -> bool {
    a == b || *a == -b
}

/// Coefficients in vartheta, lowest first.
pub fn quadratic_coeffs(q: &Poly) -> [Poly; 3] {
    let cs = q.coeffs_in(1);
    assert_eq!(cs.len(), 3);
    [cs[0].clone(), cs[1].clone(), cs[2].clone()]
}

/// Exact incidences and distinctness, computed here from scratch.
pub fn check_rational_witness(
    c: &Configuration,
    w: &Witness,
) -> Result<(Vec<[Rational; 3]>, Vec<[Rational; 3]>), String> {
    let pts = w.point_coords(c).ok_or("witness is not rational")?;
    let lns = w.line_coords(c).ok_or("witness is not rational")?;
    let dot = |a: &[Rational; 3], b: &[Rational; 3]| (0..3).fold(Rational::zero(), |s, i| s + &a[i] * &b[i]);
    let distinct =
        |a: &[Rational; 3], b: &[Rational; 3]| (0..3).any(|i| (i + 1..3).any(|j| &a[i] * &b[j] != &a[j] * &b[i]));
    for (p, x) in pts.iter().enumerate() {
        if x.iter().all(|v| v.is_zero()) {
            return Err(format!("point {} is zero", c.point_label(p)));
        }
        for (l, y) in lns.iter().enumerate() {
            if dot(x, y).is_zero() != c.incident(p, l) {
                return Err(format!("wrong incidence {}-{}", c.point_label(p), c.line_label(l)));
            }
        }
        if pts[p + 1..].iter().any(|y| !distinct(x, y)) {
            return Err(format!("point {} repeats", c.point_label(p)));
        }
    }
    for (l, y) in lns.iter().enumerate() {
        if lns[l + 1..].iter().any(|z| !distinct(y, z)) {
            return Err(format!("line {} repeats", c.line_label(l)));
        }
    }
    Ok((pts, lns))
}
