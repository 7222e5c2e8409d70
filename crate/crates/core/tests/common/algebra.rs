//! Random polynomials with known structure and independent evaluators.

use nkconfig::polyalg::{gcd, isolate_real_roots, resultant, Poly, Rational, SturmChain, UPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

// Degree <= 6 polynomials with a planted root structure. Rational roots sit
// on the half-integer grid, irrational ones are +-sqrt(m), and the remaining
// quadratic factors have no real roots.
pub fn planted(rng: &mut ChaCha8Rng) -> (UPoly, usize) {
    let mut p = UPoly::from_ints(&[rng.gen_range(1..5) * if rng.gen_bool(0.5) { 1 } else { -1 }]);
    let mut degree = 0;
    let mut rationals: Vec<i64> = Vec::new();
    let mut surds: Vec<i64> = Vec::new();
    let target = rng.gen_range(0..=6);
    while degree < target {
        let room = target - degree;
        match rng.gen_range(0..3) {
            0 => {
                let r = rng.gen_range(-10..=10);
                let mult = rng.gen_range(1..=room.min(3));
                if !rationals.contains(&r) {
                    rationals.push(r);
                }
                let factor = UPoly::new(vec![q(-r, 2), Rational::one()]);
                p = &p * &factor.pow(mult as u32);
                degree += mult;
            }
            1 if room >= 2 => {
                let m = [2, 3, 5, 6, 7][rng.gen_range(0..5)];
                if surds.contains(&m) {
                    continue;
                }
                surds.push(m);
                p = &p * &UPoly::from_ints(&[-m, 0, 1]);
                degree += 2;
            }
            2 if room >= 2 => {
                let a = rng.gen_range(-4..=4);
                let b = a * a / 4 + rng.gen_range(1..5);
                p = &p * &UPoly::from_ints(&[b, a, 1]);
                degree += 2;
            }
            _ => {}
        }
    }
    (p, rationals.len() + 2 * surds.len())
}

pub const STEP: i64 = 32;
pub const SPAN: i64 = 8 * STEP;

pub fn grid(i: i64) -> Rational {
    q(i, STEP)
}

/// Signs of `p` at the grid points `-SPAN..=SPAN`, exactly, in scaled
/// integer arithmetic.
pub fn grid_signs(p: &UPoly) -> Vec<i8> {
    let den = p.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<i128> = p
        .coeffs()
        .iter()
        .map(|c| {
            (c * Rational::from_integer(den.clone()))
                .to_integer()
                .to_i128()
                .unwrap()
        })
        .collect();
    let d = ints.len() as u32;
    (-SPAN..=SPAN)
        .map(|i| {
            // STEP^d * p(i / STEP)
            let v: i128 = ints
                .iter()
                .enumerate()
                .map(|(k, c)| c * (i as i128).pow(k as u32) * (STEP as i128).pow(d - k as u32))
                .sum();
            v.signum() as i8
        })
        .collect()
}

/// Distinct real roots strictly between the first and last of `signs`, taken
/// on consecutive grid points: zeros at interior grid points plus
/// sign changes between nonzero neighbours.
pub fn grid_count(signs: &[i8]) -> usize {
    let zeros = signs[1..signs.len() - 1].iter().filter(|&&s| s == 0).count();
    let changes = signs.windows(2).filter(|w| w[0] * w[1] < 0).count();
    zeros + changes
}

pub fn bivariate(rng: &mut ChaCha8Rng, max_deg: u32) -> Poly {
    let n = rng.gen_range(1..5);
    Poly::from_terms((0..n).map(|_| {
        (
            q(rng.gen_range(-6..=6), 1),
            vec![rng.gen_range(0..=max_deg), rng.gen_range(0..=2)],
        )
    }))
}

/// Determinant by fraction-field Gaussian elimination.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if r != c {
            m.swap(r, c);
            d = -d;
        }
        d *= m[c][c].clone();
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    d
}

/// Resultant of two univariate polynomials (coefficients lowest first) from
/// their Sylvester matrix.
pub fn sylvester_det(f: &[Rational], g: &[Rational]) -> Rational {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = Vec::new();
    for i in 0..n {
        let mut row = vec![Rational::zero(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Rational::zero(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    det(rows)
}

/// Sturm counts on the whole line and on random grid intervals, and the
/// number of isolated roots, against the grid oracle for `n` planted
/// polynomials. Returns the number of polynomials checked.
pub fn sturm_trial(seed: u64, n: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..n {
        let (p, planted_count) = planted(&mut rng);
        if p.degree().unwrap_or(0) > 6 {
            return Err(format!("degree of {p} exceeds 6"));
        }
        let signs = grid_signs(&p);
        let oracle = grid_count(&signs);
        if oracle != planted_count {
            return Err(format!(
                "grid oracle finds {oracle} roots of {p}, {planted_count} were planted"
            ));
        }
        let chain = SturmChain::new(&p);
        let isolated = isolate_real_roots(&p).map_err(|e| e.to_string())?.len();
        if chain.count_all() != oracle || isolated != oracle {
            return Err(format!(
                "{p}: Sturm {}, isolated {isolated}, grid {oracle}",
                chain.count_all()
            ));
        }
        for _ in 0..4 {
            let a = rng.gen_range(-SPAN..SPAN - 1);
            let b = rng.gen_range(a + 2..=SPAN);
            let want = grid_count(&signs[(a + SPAN) as usize..=(b + SPAN) as usize]);
            let got = chain.count_open(&grid(a), &grid(b));
            if got != want {
                return Err(format!("{p} on ({a}, {b})/{STEP}: Sturm {got}, grid {want}"));
            }
        }
    }
    Ok(n)
}

#[derive(Debug)]
pub struct ResultantTrial {
    pub pairs: usize,
    /// Pairs whose gcd has positive degree in the eliminated variable.
    pub shared: usize,
    /// Specializations compared with a Sylvester determinant.
    pub evaluations: usize,
}

/// `n` bivariate pairs, every other one with a planted common factor:
/// the resultant vanishes exactly when the gcd is nonconstant in the
/// eliminated variable, and it specializes to the Sylvester determinant
/// wherever both leading coefficients survive.
pub fn resultant_trial(seed: u64, n: usize) -> Result<ResultantTrial, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = ResultantTrial {
        pairs: 0,
        shared: 0,
        evaluations: 0,
    };
    for k in 0..n {
        let (mut f, mut g) = (bivariate(&mut rng, 3), bivariate(&mut rng, 3));
        if k % 2 == 0 {
            let c = bivariate(&mut rng, 1);
            f = &f * &c;
            g = &g * &c;
        }
        if f.degree_in(0) == 0 || g.degree_in(0) == 0 {
            continue;
        }
        t.pairs += 1;
        let r = resultant(&f, &g, 0).map_err(|e| e.to_string())?;
        if r.involves(0) {
            return Err(format!("resultant of {f} and {g} still involves the variable"));
        }
        let common = gcd(&f, &g).degree_in(0) > 0;
        t.shared += common as usize;
        if r.is_zero() != common {
            return Err(format!("resultant of {f} and {g} is {r}, common factor: {common}"));
        }
        let (lf, lg) = (f.leading_coeff_in(0), g.leading_coeff_in(0));
        for y in -3..=3 {
            let at = [Rational::zero(), q(y, 1)];
            if lf.eval(&at).is_zero() || lg.eval(&at).is_zero() {
                continue;
            }
            let coeffs = |p: &Poly| -> Vec<Rational> { p.coeffs_in(0).iter().map(|c| c.eval(&at)).collect() };
            if r.eval(&at) != sylvester_det(&coeffs(&f), &coeffs(&g)) {
                return Err(format!("{f}, {g} at {y}: resultant and Sylvester determinant differ"));
            }
            t.evaluations += 1;
        }
    }
    Ok(t)
}
