//! Real-root isolation by Sturm sequences and exact sign determination at
//! real algebraic numbers.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::univariate::{sign, UPoly};
use super::{PolyError, Rational};

/// Signed remainder chain `p, p', -rem(p, p'), ...`.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<UPoly>,
}

impl SturmChain {
    pub fn new(p: &UPoly) -> Self {
        let mut chain = vec![p.clone()];
        if p.is_zero() {
            return SturmChain { chain };
        }
        let mut a = p.clone();
        let mut b = p.derivative();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            chain.push(b.clone());
            a = b;
            b = -&r;
        }
        SturmChain { chain }
    }

    /// Number of sign changes at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for q in &self.chain {
            let s = q.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }

    /// Distinct real roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        let n = self.count_half_open(a, b);
        if self.chain[0].sign_at(b) == 0 {
            n - 1
        } else {
            n
        }
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        let b = cauchy_bound(&self.chain[0]);
        self.count_half_open(&-b.clone(), &b)
    }
}

/// Strict upper bound on the absolute value of every root.
pub fn cauchy_bound(p: &UPoly) -> Rational {
    let lc = p.leading_coeff().abs();
    let m = p
        .coeffs()
        .iter()
        .take(p.coeffs().len().saturating_sub(1))
        .map(|c| c.abs() / &lc)
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    m + Rational::one()
}

/// A real root of a squarefree polynomial: either exactly rational
/// (`lo == hi`) or the unique root in the open interval `(lo, hi)` with
/// `poly(lo), poly(hi)` nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealRoot {
    #[serde(serialize_with = "ser_upoly")]
    pub poly: UPoly,
    #[serde(serialize_with = "ser_rational")]
    pub lo: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub hi: Rational,
}

fn ser_upoly<S: serde::Serializer>(p: &UPoly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&super::poly::format_rational(r))
}

impl RealRoot {
    pub fn exact(poly: UPoly, value: Rational) -> Self {
        RealRoot {
            poly,
            lo: value.clone(),
            hi: value,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Halves the isolating interval, possibly landing on the root.
    pub fn bisect(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = (&self.lo + &self.hi) / Rational::from_integer(2.into());
        let sm = self.poly.sign_at(&mid);
        if sm == 0 {
            self.lo = mid.clone();
            self.hi = mid;
        } else if sm == self.poly.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Refines until the interval is narrower than `width`.
    pub fn refine_to(&mut self, width: &Rational) {
        while self.width() >= *width && self.lo != self.hi {
            self.bisect();
        }
    }

    pub fn approx(&self) -> f64 {
        let mut r = self.clone();
        r.refine_to(&Rational::new(1.into(), (1u64 << 52).into()));
        ((&r.lo + &r.hi) / Rational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

impl fmt::Display for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use super::poly::format_rational;
        match self.as_rational() {
            Some(r) => write!(f, "{}", format_rational(r)),
            None => write!(
                f,
                "root of {} in ({}, {})",
                self.poly,
                format_rational(&self.lo),
                format_rational(&self.hi)
            ),
        }
    }
}

/// Isolates every distinct real root of `p`, in increasing order.
pub fn isolate_real_roots(p: &UPoly) -> Result<Vec<RealRoot>, PolyError> {
    let sf = p.squarefree_part()?;
    if sf.is_constant() {
        return Ok(Vec::new());
    }
    let sturm = SturmChain::new(&sf);
    let b = cauchy_bound(&sf);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = sturm.count_open(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(RealRoot {
                poly: sf.clone(),
                lo,
                hi,
            });
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        if sf.sign_at(&mid) == 0 {
            out.push(RealRoot::exact(sf.clone(), mid.clone()));
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    for r in &mut out {
        // rational roots are pinned down exactly when the interval is tight
        tighten_rational(r);
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Collapses the interval when the root is rational.
///
/// A rational root `p/q` of the integer-primitive polynomial has `q`
/// dividing the leading coefficient `N`. Once the interval is narrower
/// than `1/N^2` it holds at most one fraction with denominator `<= N`,
/// and that fraction is the simplest rational in the interval.
fn tighten_rational(r: &mut RealRoot) {
    if r.lo == r.hi {
        return;
    }
    let prim = r.poly.to_poly(0).primitive();
    let n = prim.leading_coeff().numer().abs();
    let n = Rational::from_integer(n);
    let width = (&n * &n).recip();
    let mut t = r.clone();
    t.refine_to(&width);
    if t.lo == t.hi {
        *r = t;
        return;
    }
    let s = simplest_between(&t.lo, &t.hi);
    if r.poly.sign_at(&s) == 0 {
        *r = RealRoot::exact(r.poly.clone(), s);
    }
}

/// The rational with the smallest denominator in the open interval
/// `(a, b)`, `a < b`.
pub fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    if a.is_negative() && b.is_positive() {
        return Rational::zero();
    }
    if !a.is_negative() {
        return simplest_positive(a, b);
    }
    -simplest_positive(&-b.clone(), &-a.clone())
}

fn simplest_positive(a: &Rational, b: &Rational) -> Rational {
    let fl = a.floor();
    let next = &fl + Rational::one();
    if next < *b {
        return next;
    }
    // a and b share the integer part fl, and b > fl since b > a >= fl
    let lo_frac = a - &fl;
    let hi_frac = b - &fl;
    let inner = if lo_frac.is_zero() {
        (hi_frac.recip()).floor() + Rational::one()
    } else {
        simplest_positive(&hi_frac.recip(), &lo_frac.recip())
    };
    fl + inner.recip()
}

/// Exact sign of `h` at the real root `root`.
///
/// Zero is detected through `gcd(root.poly, h)`; otherwise the interval is
/// refined until `h` has no root inside it.
pub fn sign_at_root(h: &UPoly, root: &RealRoot) -> i8 {
    if let Some(v) = root.as_rational() {
        return sign(&h.eval(v));
    }
    if h.is_zero() {
        return 0;
    }
    let g = root.poly.gcd(h);
    if !g.is_constant() {
        let sg = SturmChain::new(&g.squarefree_part().expect("nonzero"));
        if sg.count_open(&root.lo, &root.hi) > 0 {
            return 0;
        }
    }
    let hs = SturmChain::new(&h.squarefree_part().expect("nonzero"));
    let mut r = root.clone();
    loop {
        if r.lo == r.hi {
            return sign(&h.eval(&r.lo));
        }
        if hs.count_open(&r.lo, &r.hi) == 0 {
            let mid = (&r.lo + &r.hi) / Rational::from_integer(2.into());
            return sign(&h.eval(&mid));
        }
        r.bisect();
    }
}
