//! Sylvester resultants with polynomial entries.

use super::poly::Poly;
use super::PolyError;

/// Sylvester matrix of `p` and `q` with respect to `x_var`.
pub fn sylvester_matrix(p: &Poly, q: &Poly, var: usize) -> Vec<Vec<Poly>> {
    let a = p.coeffs_in(var);
    let b = q.coeffs_in(var);
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Poly::zero(); size];
        for (j, c) in a.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Poly::zero(); size];
        for (j, c) in b.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Resultant of `p` and `q` with respect to `x_var`.
pub fn resultant(p: &Poly, q: &Poly, var: usize) -> Result<Poly, PolyError> {
    if p.degree_in(var) == 0 || q.degree_in(var) == 0 {
        return Err(PolyError::DegreeZero(var));
    }
    Ok(determinant(sylvester_matrix(p, q, var)))
}
