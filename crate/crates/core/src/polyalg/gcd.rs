//! Multivariate gcd over `Q` by recursive primitive remainder sequences,
//! and the factor-cancellation helper used by the realizability solver.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::poly::Poly;
use super::univariate::UPoly;
use super::Rational;

/// Greatest common divisor, normalized to be primitive with a positive
/// leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let vars: Vec<usize> = a.variables().into_iter().chain(b.variables()).collect();
    let main = match vars.iter().max() {
        Some(&v) => v,
        None => return Poly::one(),
    };
    if vars.iter().all(|&v| v == main) {
        let ua = UPoly::from_poly(a, main).expect("univariate");
        let ub = UPoly::from_poly(b, main).expect("univariate");
        return ua.gcd(&ub).to_poly(main).primitive();
    }
    let ca = content_in(a, main);
    let cb = content_in(b, main);
    let c = gcd(&ca, &cb);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let g = primitive_prs(pa, pb, main);
    (&c * &g).primitive()
}

/// gcd of the coefficients of `p` viewed as a polynomial in `x_var`.
pub fn content_in(p: &Poly, var: usize) -> Poly {
    let mut acc = Poly::zero();
    for c in p.coeffs_in(var) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc.is_constant() {
            return Poly::one();
        }
    }
    acc
}

fn primitive_part_in(p: &Poly, var: usize) -> Poly {
    let c = content_in(p, var);
    p.exact_div(&c).expect("content divides").primitive()
}

fn primitive_prs(a: Poly, b: Poly, var: usize) -> Poly {
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    loop {
        if b.degree_in(var) == 0 {
            // b is primitive in var, so it is a unit here
            return Poly::one();
        }
        let r = a.pseudo_rem(&b, var);
        if r.is_zero() {
            return b.primitive();
        }
        a = b;
        b = primitive_part_in(&r, var);
    }
}

/// Divides out of `p` every factor it shares with `q`, with multiplicity.
/// Returns the reduced polynomial and the product of removed factors.
pub fn strip_common_factors(p: &Poly, q: &Poly) -> (Poly, Poly) {
    let mut p = p.clone();
    let mut removed = Poly::one();
    if p.is_zero() || q.is_zero() {
        return (p, removed);
    }
    loop {
        if certainly_coprime(&p, q) {
            return (p, removed);
        }
        let g = gcd(&p, q);
        if g.is_constant() {
            return (p, removed);
        }
        p = p.exact_div(&g).expect("gcd divides");
        removed = &removed * &g;
    }
}

const P: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn residue(c: &Rational) -> Option<u64> {
    let p = BigInt::from(P);
    let n = c.numer().mod_floor(&p).to_u64()?;
    let d = c.denom().mod_floor(&p).to_u64()?;
    (d != 0).then(|| mul_mod(n, pow_mod(d, P - 2)))
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Image of `p` in `GF(P)[x_var]` with every other variable set by `at`.
fn image(p: &Poly, var: usize, at: &dyn Fn(usize) -> u64) -> Option<Vec<u64>> {
    let mut out = vec![0u64; p.degree_in(var) as usize + 1];
    for (m, c) in p.terms() {
        let mut t = residue(c)?;
        for (v, &e) in m.exps().iter().enumerate() {
            if v != var && e > 0 {
                t = mul_mod(t, pow_mod(at(v), e as u64));
            }
        }
        let k = m.exp(var) as usize;
        out[k] = (out[k] + t) % P;
    }
    trim(&mut out);
    Some(out)
}

fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    while !b.is_empty() {
        let inv = pow_mod(*b.last().expect("nonempty"), P - 2);
        while a.len() >= b.len() {
            let f = mul_mod(*a.last().expect("nonempty"), inv);
            let shift = a.len() - b.len();
            for (i, &x) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + P - mul_mod(f, x)) % P;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// `true` only when `a` and `b` provably have no common factor of
/// positive degree. A common factor involving `x` keeps its degree in `x`
/// under any specialization of the other variables modulo a prime that
/// preserves both leading coefficients in `x`.
pub fn certainly_coprime(a: &Poly, b: &Poly) -> bool {
    if a.is_zero() || b.is_zero() {
        return false;
    }
    let vb = b.variables();
    for x in a.variables().into_iter().filter(|v| vb.contains(v)) {
        let mut decided = false;
        for attempt in 0..8u64 {
            let at = |v: usize| 3 + 7919 * attempt + 104_729 * v as u64;
            let (Some(ua), Some(ub)) = (image(a, x, &at), image(b, x, &at)) else {
                return false;
            };
            if ua.len() != a.degree_in(x) as usize + 1 || ub.len() != b.degree_in(x) as usize + 1 {
                continue;
            }
            if gcd_degree_mod(ua, ub) > 0 {
                return false;
            }
            decided = true;
            break;
        }
        if !decided {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::poly::{parse_poly, VAR_NAMES};

    fn p(s: &str) -> Poly {
        parse_poly(s, &VAR_NAMES).unwrap()
    }

    #[test]
    fn bivariate_gcd_recovers_planted_factor() {
        let f = p("theta*vartheta + vartheta - 1");
        let a = &f * &p("theta^2 - vartheta");
        let b = &f * &p("vartheta^2 + 3*theta + 1");
        assert_eq!(gcd(&a, &b), f);
        assert_eq!(
            gcd(&p("theta^2 - vartheta"), &p("vartheta^2 + 3*theta + 1")),
            Poly::one()
        );
    }

    #[test]
    fn gcd_with_repeated_factor() {
        let a = &p("vartheta - 1").pow(3) * &p("theta^2*vartheta");
        let b = &p("vartheta - 1").pow(2) * &p("theta");
        assert_eq!(gcd(&a, &b), &p("vartheta - 1").pow(2) * &p("theta"));
    }

    #[test]
    fn stripping_the_two_variable_contradiction() {
        // theta^2 vartheta (vartheta-1)^3 against the side conditions
        let e = &p("theta^2*vartheta") * &p("vartheta - 1").pow(3);
        let mut rest = e.clone();
        for h in ["theta", "vartheta", "vartheta - 1"] {
            rest = strip_common_factors(&rest, &p(h)).0;
        }
        assert!(rest.is_constant() && !rest.is_zero());
    }
}
