//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are identified by index. Monomials are stored with trailing
//! zero exponents trimmed, so polynomials over different numbers of
//! variables mix freely. Terms are kept in graded lexicographic order
//! with `x0 > x1 > ...`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{PolyError, Rational};

/// Exponent vector of a monomial, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    /// The monomial `x_var^exp`.
    pub fn var(var: usize, exp: u32) -> Self {
        let mut exps = vec![0; var + 1];
        exps[var] = exp;
        Monomial::new(exps)
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let exps = (0..n).map(|i| self.exp(i) + other.exp(i)).collect();
        Monomial::new(exps)
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut exps = Vec::with_capacity(self.0.len());
        for i in 0..self.0.len() {
            let (a, b) = (self.exp(i), other.exp(i));
            if b > a {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial::new(exps))
    }

    fn without(&self, var: usize) -> Monomial {
        let mut exps = self.0.clone();
        if var < exps.len() {
            exps[var] = 0;
        }
        Monomial::new(exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `Q[x0, x1, ...]`. Never stores zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn from_int(c: i64) -> Self {
        Poly::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// The polynomial `x_var`.
    pub fn var(var: usize) -> Self {
        Poly::monomial(Monomial::var(var, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Vec<u32>)>,
    {
        let mut p = Poly::zero();
        for (c, e) in terms {
            p.add_term(Monomial::new(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// Degree in one variable; zero polynomial has degree 0.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    /// Sorted indices of the variables that actually occur.
    pub fn variables(&self) -> Vec<usize> {
        let n = self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0);
        (0..n).filter(|&v| self.involves(v)).collect()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(mm, v)| (mm.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a full point; missing trailing values count as zero.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    let x = point.get(i).cloned().unwrap_or_else(Rational::zero);
                    t *= num_traits::pow(x, e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Replaces `x_var` by a rational constant.
    pub fn subst_value(&self, var: usize, value: &Rational) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let c = if e == 0 {
                c.clone()
            } else {
                c * num_traits::pow(value.clone(), e as usize)
            };
            out.add_term(m.without(var), c);
        }
        out
    }

    /// Replaces `x_var` by a polynomial.
    pub fn subst_poly(&self, var: usize, value: &Poly) -> Poly {
        let coeffs = self.coeffs_in(var);
        // Horner in var
        let mut acc = Poly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Substitutes `x_var = num / den` and clears denominators.
    ///
    /// Returns the numerator `den^d * p(num/den)` together with `d`, the
    /// degree of `p` in `x_var`. The caller is responsible for recording
    /// `den != 0`.
    pub fn subst_rational_function(&self, var: usize, num: &Poly, den: &Poly) -> Result<(Poly, u32), PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        let coeffs = self.coeffs_in(var);
        let d = coeffs.len().saturating_sub(1) as u32;
        let mut out = Poly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = &(c * &num.pow(i as u32)) * &den.pow(d - i as u32);
            out = &out + &t;
        }
        Ok((out, d))
    }

    /// Coefficients with respect to `x_var`, lowest power first. Each
    /// coefficient is free of `x_var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<Poly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![Poly::zero(); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            out[m.exp(var) as usize].add_term(m.without(var), c.clone());
        }
        out
    }

    /// Inverse of [`Poly::coeffs_in`].
    pub fn from_coeffs_in(var: usize, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let m = Monomial::var(var, i as u32);
            for (mm, v) in &c.terms {
                out.add_term(mm.mul(&m), v.clone());
            }
        }
        out
    }

    pub fn leading_coeff_in(&self, var: usize) -> Poly {
        self.coeffs_in(var).pop().unwrap_or_default()
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.add_term(Monomial::new(exps), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Rational content `c` such that `self / c` has coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn content(&self) -> Result<Rational, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        Ok(content)
    }

    /// `(content, primitive)` with `content * primitive == self`.
    pub fn content_and_primitive(&self) -> Result<(Rational, Poly), PolyError> {
        let c = self.content()?;
        let p = self.scale(&c.recip());
        Ok((c, p))
    }

    /// Primitive part; the zero polynomial maps to itself.
    pub fn primitive(&self) -> Poly {
        match self.content_and_primitive() {
            Ok((_, p)) => p,
            Err(_) => Poly::zero(),
        }
    }

    /// Exact division. Returns `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lm)?;
            let qc = c / &lc;
            rem = &rem - &divisor.mul_term(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.exact_div(self).is_some()
    }

    /// Pseudo-remainder of `self` by `divisor` as polynomials in `x_var`:
    /// some `lc(divisor)^e * self mod divisor`.
    pub fn pseudo_rem(&self, divisor: &Poly, var: usize) -> Poly {
        let db = divisor.degree_in(var);
        let lb = divisor.leading_coeff_in(var);
        let mut r = self.clone();
        while !r.is_zero() && r.involves(var) && r.degree_in(var) >= db {
            let dr = r.degree_in(var);
            let lr = r.leading_coeff_in(var);
            let shift = Poly::monomial(Monomial::var(var, dr - db), Rational::one());
            r = &(&lb * &r) - &(&(&lr * &shift) * divisor);
        }
        if db == 0 {
            return Poly::zero();
        }
        r
    }

    /// Renders with the given variable names (`x{i}` for missing names).
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Default variable names used by the realizer.
pub const VAR_NAMES: [&str; 2] = ["theta", "vartheta"];

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    names: &'a [&'a str],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut parts = Vec::new();
            if m.is_one() || !abs.is_one() {
                parts.push(format_rational(&abs));
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = self
                    .names
                    .get(v)
                    .map(|s| s.to_string())
                    .unwrap_or_else(|| format!("x{v}"));
                if e == 1 {
                    parts.push(name);
                } else {
                    parts.push(format!("{name}^{e}"));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&VAR_NAMES))
    }
}

/// Parses the sparse text form, e.g. `3/2*theta^2*vartheta - theta + 1`.
pub fn parse_poly(text: &str, names: &[&str]) -> Result<Poly, PolyError> {
    let bad = |msg: &str| PolyError::Parse(format!("{msg} in {text:?}"));
    let mut out = Poly::zero();
    let s: String = text.split_whitespace().collect();
    if s.is_empty() {
        return Err(bad("empty polynomial"));
    }
    let mut chunks = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' && bytes[i - 1] != b'*' {
            chunks.push(&s[start..i]);
            start = i;
        }
    }
    chunks.push(&s[start..]);
    for chunk in chunks {
        let (sign, body) = match chunk.as_bytes()[0] {
            b'-' => (-1, &chunk[1..]),
            b'+' => (1, &chunk[1..]),
            _ => (1, chunk),
        };
        if body.is_empty() {
            return Err(bad("dangling sign"));
        }
        let mut coeff = Rational::from_integer(BigInt::from(sign));
        let mut exps: Vec<u32> = Vec::new();
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(bad("empty factor"));
            }
            if factor.as_bytes()[0].is_ascii_digit() {
                coeff *= parse_rational(factor).ok_or_else(|| bad("bad coefficient"))?;
                continue;
            }
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                None => (factor, 1),
            };
            let v = names
                .iter()
                .position(|n| *n == name)
                .or_else(|| name.strip_prefix('x').and_then(|i| i.parse().ok()))
                .ok_or_else(|| bad(&format!("unknown variable {name}")))?;
            if exps.len() <= v {
                exps.resize(v + 1, 0);
            }
            exps[v] += e;
        }
        out.add_term(Monomial::new(exps), coeff);
    }
    Ok(out)
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
