//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{Monomial, Poly};
use super::{PolyError, Rational};

/// Coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        UPoly::default()
    }

    pub fn one() -> Self {
        UPoly::new(vec![Rational::one()])
    }

    /// `x - r`
    pub fn linear_root(r: &Rational) -> Self {
        UPoly::new(vec![-r.clone(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign(&self.eval(x))
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn div_rem(&self, divisor: &UPoly) -> Result<(UPoly, UPoly), PolyError> {
        let db = divisor.degree().ok_or(PolyError::ZeroPolynomial)?;
        let lb = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + db] / &lb;
            if !q.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * c;
                }
            }
            quot[i] = q;
        }
        rem.truncate(db);
        Ok((UPoly::new(quot), UPoly::new(rem)))
    }

    pub fn rem(&self, divisor: &UPoly) -> Result<UPoly, PolyError> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    pub fn exact_div(&self, divisor: &UPoly) -> Option<UPoly> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor by Euclid's algorithm.
    /// `gcd(0, 0)` is zero.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = if r.is_zero() { r } else { r.monic() };
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Result<UPoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.exact_div(&g).expect("gcd divides").monic())
    }

    pub fn pow(&self, e: u32) -> UPoly {
        (0..e).fold(UPoly::one(), |acc, _| &acc * self)
    }

    pub fn to_poly(&self, var: usize) -> Poly {
        Poly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (c.clone(), Monomial::var(var, i as u32).exps().to_vec())),
        )
    }

    /// Converts a multivariate polynomial that involves no variable other
    /// than `var`.
    pub fn from_poly(p: &Poly, var: usize) -> Option<UPoly> {
        if p.variables().iter().any(|&v| v != var) {
            return None;
        }
        let mut coeffs = vec![Rational::zero(); p.degree_in(var) as usize + 1];
        for (m, c) in p.terms() {
            coeffs[m.exp(var) as usize] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }
}

pub fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly(0))
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = Rational::zero();
        UPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        self + &(-rhs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}
