//! Homogeneous coordinate vectors with polynomial entries.

use num_traits::{One, Signed};

use crate::polyalg::{gcd, Poly, Rational};

/// Representative of a point or a line of the real projective plane.
/// Incidence is orthogonality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicVector(pub [Poly; 3]);

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("the vector is identically zero")]
pub struct ZeroVector;

/// How a freshly computed vector is stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    /// Divide out the rational content and the polynomial gcd of the
    /// coordinates.
    #[default]
    Reduced,
    /// Keep the cross product as computed.
    Raw,
}

impl SymbolicVector {
    pub fn from_ints(v: [i64; 3]) -> Self {
        SymbolicVector(v.map(Poly::from_int))
    }

    pub fn from_rationals(v: &[Rational; 3]) -> Self {
        SymbolicVector([0, 1, 2].map(|i| Poly::constant(v[i].clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Poly::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(Poly::is_constant)
    }

    pub fn coords(&self) -> &[Poly; 3] {
        &self.0
    }

    pub fn scale(&self, c: &Poly) -> Self {
        SymbolicVector([0, 1, 2].map(|i| &self.0[i] * c))
    }

    /// `(g, v / g)` where `g` is the primitive gcd of the coordinates.
    /// Then a positive rational content is divided out, so the sign
    /// pattern of the input survives.
    pub fn normalize(&self) -> Result<(Poly, SymbolicVector), ZeroVector> {
        if self.is_zero() {
            return Err(ZeroVector);
        }
        let g = self.0.iter().fold(Poly::zero(), |acc, x| gcd(&acc, x));
        let mut v = self.0.clone().map(|x| x.exact_div(&g).expect("gcd divides"));
        let content = v
            .iter()
            .filter(|x| !x.is_zero())
            .map(|x| x.content().expect("nonzero").abs())
            .reduce(|a, b| rational_gcd(&a, &b))
            .expect("some coordinate is nonzero");
        if !content.is_one() {
            let inv = content.recip();
            v = v.map(|x| x.scale(&inv));
        }
        Ok((g, SymbolicVector(v)))
    }

    pub fn eval(&self, point: &[Rational]) -> [Rational; 3] {
        [0, 1, 2].map(|i| self.0[i].eval(point))
    }

    pub fn display_with(&self, names: &[&str]) -> String {
        let parts: Vec<String> = self.0.iter().map(|x| x.display_with(names).to_string()).collect();
        format!("[{}]", parts.join(", "))
    }
}

fn rational_gcd(a: &Rational, b: &Rational) -> Rational {
    use num_integer::Integer;
    Rational::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom()))
}

pub fn cross(u: &SymbolicVector, v: &SymbolicVector) -> SymbolicVector {
    let [a0, a1, a2] = &u.0;
    let [b0, b1, b2] = &v.0;
    SymbolicVector([
        &(a1 * b2) - &(a2 * b1),
        &(a2 * b0) - &(a0 * b2),
        &(a0 * b1) - &(a1 * b0),
    ])
}

pub fn dot(u: &SymbolicVector, v: &SymbolicVector) -> Poly {
    let mut acc = Poly::zero();
    for i in 0..3 {
        acc = &acc + &(&u.0[i] * &v.0[i]);
    }
    acc
}

/// Two independent vectors orthogonal to `p`, chosen by the first
/// nonzero of the pivots `y`, `z`, `x`.
///
/// Both returned vectors are orthogonal to `p` for every choice of
/// pivot; the pivot only has to be nonzero for them to be independent.
/// `pivot` selects the formula (0: `y`, 1: `z`, 2: `x`).
pub fn pencil_basis(p: &SymbolicVector, pivot: usize) -> (SymbolicVector, SymbolicVector) {
    let [x, y, z] = &p.0;
    let zero = Poly::zero();
    match pivot {
        0 => (
            SymbolicVector([y.clone(), -x, zero.clone()]),
            SymbolicVector([zero, -z, y.clone()]),
        ),
        1 => (
            SymbolicVector([z.clone(), zero.clone(), -x]),
            SymbolicVector([zero, z.clone(), -y]),
        ),
        _ => (
            SymbolicVector([-y, x.clone(), zero.clone()]),
            SymbolicVector([-z, zero, x.clone()]),
        ),
    }
}

/// The pivot coordinate used by [`pencil_basis`].
pub fn pivot_coordinate(p: &SymbolicVector, pivot: usize) -> &Poly {
    match pivot {
        0 => &p.0[1],
        1 => &p.0[2],
        _ => &p.0[0],
    }
}

/// First pivot whose coordinate is not identically zero.
pub fn default_pivot(p: &SymbolicVector) -> Option<usize> {
    (0..3).find(|&k| !pivot_coordinate(p, k).is_zero())
}

/// `l0 + x_var * l1`.
pub fn pencil_member(l0: &SymbolicVector, l1: &SymbolicVector, var: usize) -> SymbolicVector {
    let t = Poly::var(var);
    SymbolicVector([0, 1, 2].map(|i| &l0.0[i] + &(&t * &l1.0[i])))
}
