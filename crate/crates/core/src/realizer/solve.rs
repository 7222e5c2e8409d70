//! Decision pipeline for systems in at most two variables.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::polyalg::univariate::sign;
use crate::polyalg::{
    certainly_coprime, isolate_real_roots, resultant, sign_at_root, strip_common_factors, Poly, Rational, RealRoot,
    UPoly,
};

use super::certificate::{coefficients_over, excludes, gcd_at_root, vanishes_at_solution, CertStep};
use super::system::{Constraint, ConstraintSystem, Provenance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Realizable,
    NotRealizable,
    Undecided,
}

/// Value of a parameter in a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Rational(Rational),
    /// `num(r) / den(r)` for the algebraic parameter `r` of the assignment.
    Function {
        num: UPoly,
        den: UPoly,
    },
}

/// Parameter values: every parameter is rational or a rational function
/// of at most one real algebraic parameter.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment {
    pub root: Option<(usize, RealRoot)>,
    pub values: BTreeMap<usize, Value>,
}

impl Assignment {
    /// `p` with every parameter replaced, as a polynomial in the algebraic
    /// parameter (a constant when there is none). Rational-function values
    /// are substituted with cleared denominators, which does not change
    /// whether the result vanishes.
    pub fn reduce(&self, p: &Poly) -> Option<UPoly> {
        let rv = self.root.as_ref().map(|(v, _)| *v);
        let mut q = p.clone();
        for (&v, val) in &self.values {
            if let Value::Rational(r) = val {
                q = q.subst_value(v, r);
            }
        }
        for (&v, val) in &self.values {
            if let (Value::Function { num, den }, Some(rv)) = (val, rv) {
                q = q.subst_rational_function(v, &num.to_poly(rv), &den.to_poly(rv)).ok()?.0;
            }
        }
        match rv {
            Some(rv) => UPoly::from_poly(&q, rv),
            None => q.as_constant().map(|c| UPoly::new(vec![c])),
        }
    }

    /// Sign of `p` under the assignment, `None` when some variable is
    /// unassigned.
    pub fn sign_of(&self, p: &Poly) -> Option<i8> {
        let u = self.reduce(p)?;
        Some(match &self.root {
            Some((_, r)) => sign_at_root(&u, r),
            None => sign(&u.eval(&Rational::zero())),
        })
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: Status,
    pub certificate: Vec<CertStep>,
    pub assignment: Option<Assignment>,
    pub reason: Option<String>,
}

enum Res {
    Sat(Assignment),
    Unsat,
    Unknown(String),
}

const MAX_DEPTH: usize = 8;
const GRID_HEIGHT: i64 = 12;
const MAX_SAMPLES: usize = 200_000;

/// Runs the pipeline: constant contradictions, cancellation of factors
/// shared with inequalities, then sampling, univariate root isolation or
/// elimination of one of two variables. `max_vars` bounds the number of
/// variables occurring in equalities for a decisive answer.
pub fn solve_system(s: &ConstraintSystem, max_vars: usize) -> Outcome {
    let mut solver = Solver {
        max_vars,
        cert: Vec::new(),
    };
    let res = solver.solve(s.equalities.clone(), s.inequalities.clone(), 0);
    let (status, assignment, reason) = match res {
        Res::Sat(mut a) => {
            for v in 0..s.variables.len() {
                let rooted = a.root.as_ref().is_some_and(|(r, _)| *r == v);
                if !rooted {
                    a.values.entry(v).or_insert_with(|| Value::Rational(Rational::zero()));
                }
            }
            (Status::Realizable, Some(a), None)
        }
        Res::Unsat => (Status::NotRealizable, None, None),
        Res::Unknown(r) => (Status::Undecided, None, Some(r)),
    };
    Outcome {
        status,
        certificate: if status == Status::NotRealizable {
            solver.cert
        } else {
            Vec::new()
        },
        assignment,
        reason,
    }
}

struct Solver {
    max_vars: usize,
    cert: Vec<CertStep>,
}

fn vars_of(cs: &[Constraint]) -> BTreeSet<usize> {
    cs.iter().flat_map(|c| c.poly.variables()).collect()
}

impl Solver {
    fn solve(&mut self, mut eqs: Vec<Constraint>, mut ineqs: Vec<Constraint>, depth: usize) -> Res {
        if depth > MAX_DEPTH {
            return Res::Unknown("elimination depth exceeded".into());
        }
        // (a) constant contradictions, all of them
        let mut closed = false;
        for e in &eqs {
            if e.poly.is_constant() && !e.poly.is_zero() {
                self.cert.push(CertStep::NonzeroEquality {
                    provenance: e.provenance.clone(),
                    poly: e.poly.clone(),
                });
                closed = true;
            }
        }
        for i in &ineqs {
            if i.poly.is_zero() {
                self.cert.push(CertStep::ZeroInequality {
                    provenance: i.provenance.clone(),
                    poly: i.poly.clone(),
                });
                closed = true;
            }
        }
        if closed {
            return Res::Unsat;
        }
        eqs.retain(|e| !e.poly.is_zero());
        ineqs.retain(|i| !i.poly.is_constant());
        let mut seen: Vec<Poly> = Vec::new();
        ineqs.retain(|i| {
            let p = i.poly.primitive();
            let fresh = !seen.contains(&p);
            if fresh {
                seen.push(p);
            }
            fresh
        });

        // (b) cancel factors shared with inequalities
        for e in eqs.iter_mut() {
            for i in &ineqs {
                if certainly_coprime(&e.poly, &i.poly) {
                    continue;
                }
                let (after, factor) = strip_common_factors(&e.poly, &i.poly);
                if factor.is_constant() {
                    continue;
                }
                self.cert.push(CertStep::Cancel {
                    provenance: e.provenance.clone(),
                    before: e.poly.clone(),
                    factor,
                    after: after.clone(),
                    by: i.provenance.clone(),
                    by_poly: i.poly.clone(),
                });
                e.poly = after;
            }
            if e.poly.is_constant() {
                self.cert.push(CertStep::NonzeroEquality {
                    provenance: e.provenance.clone(),
                    poly: e.poly.clone(),
                });
                closed = true;
            }
        }
        if closed {
            return Res::Unsat;
        }
        let mut seen: Vec<Poly> = Vec::new();
        eqs.retain(|e| {
            let p = e.poly.primitive();
            let fresh = !seen.contains(&p);
            seen.push(p);
            fresh
        });

        let var_eq = vars_of(&eqs);
        if eqs.is_empty() {
            let free: Vec<usize> = vars_of(&ineqs).into_iter().collect();
            return match sample(&free, &ineqs, None) {
                Some(values) => Res::Sat(Assignment { root: None, values }),
                None => Res::Unknown("no sample point avoids the inequalities".into()),
            };
        }
        if var_eq.len() > self.max_vars {
            return Res::Unknown(format!(
                "{} variables in the equalities exceed the limit of {}",
                var_eq.len(),
                self.max_vars
            ));
        }
        let vars: Vec<usize> = var_eq.into_iter().collect();
        match vars.len() {
            1 => self.one_variable(vars[0], &eqs, &ineqs),
            2 => self.two_variables(&vars, eqs, ineqs, depth),
            n => Res::Unknown(format!("{n} variables in the equalities")),
        }
    }

    /// Roots of the gcd of the equalities, each tested against the
    /// inequalities. Variables occurring only in inequalities are sampled.
    fn one_variable(&mut self, v: usize, eqs: &[Constraint], ineqs: &[Constraint]) -> Res {
        let polys: Vec<Poly> = eqs.iter().map(|e| e.poly.clone()).collect();
        let g = polys.iter().fold(UPoly::zero(), |acc, p| {
            acc.gcd(&UPoly::from_poly(p, v).expect("univariate"))
        });
        if g.is_constant() {
            self.cert.push(CertStep::NoCommonRoot { variable: v, polys });
            return Res::Unsat;
        }
        self.roots_against(v, g, polys, &[], ineqs)
    }

    /// Shared tail of the univariate cases: `g` is the gcd of the
    /// univariate equalities `polys`; `rest` are equalities that also
    /// involve other variables.
    fn roots_against(
        &mut self,
        v: usize,
        g: UPoly,
        polys: Vec<Poly>,
        rest: &[Constraint],
        ineqs: &[Constraint],
    ) -> Res {
        let sf = g.squarefree_part().expect("nonconstant");
        let roots = isolate_real_roots(&sf).expect("nonzero");
        self.cert.push(CertStep::RealRoots {
            variable: v,
            polys,
            squarefree: sf.to_poly(v),
            count: roots.len(),
        });
        let mut unknown = None;
        for root in roots {
            if let Some(i) = ineqs.iter().find(|i| excludes(&i.poly, v, &root, false)) {
                self.cert.push(CertStep::RootExcluded {
                    variable: v,
                    root,
                    by: i.provenance.clone(),
                    poly: i.poly.clone(),
                    equality: false,
                });
                continue;
            }
            if let Some(e) = rest.iter().find(|e| excludes(&e.poly, v, &root, true)) {
                self.cert.push(CertStep::RootExcluded {
                    variable: v,
                    root,
                    by: e.provenance.clone(),
                    poly: e.poly.clone(),
                    equality: true,
                });
                continue;
            }
            let live: Vec<&Constraint> = rest
                .iter()
                .filter(|e| {
                    coefficients_over(&e.poly, v)
                        .iter()
                        .any(|c| sign_at_root(c, &root) != 0)
                })
                .collect();
            if !live.is_empty() {
                if let Some(step) = separated(v, &root, &live) {
                    self.cert.push(step);
                    continue;
                }
                match self.at_root(v, &root, &live, ineqs) {
                    AtRoot::Excluded => continue,
                    AtRoot::Sat(a) => return Res::Sat(a),
                    AtRoot::Unknown(r) => {
                        unknown = Some(r);
                        continue;
                    }
                }
            }
            let free: Vec<usize> = vars_of(ineqs).into_iter().filter(|&w| w != v).collect();
            match sample(&free, ineqs, Some((v, &root))) {
                Some(mut values) => {
                    let root = match root.as_rational() {
                        Some(r) => {
                            values.insert(v, Value::Rational(r.clone()));
                            None
                        }
                        None => Some((v, root)),
                    };
                    return Res::Sat(Assignment { root, values });
                }
                None => unknown = Some("no sample point avoids the inequalities at a root".into()),
            }
        }
        match unknown {
            Some(r) => Res::Unknown(r),
            None => Res::Unsat,
        }
    }

    /// The equalities `live` still involve a second variable at the root
    /// of `v`; their gcd over the field of the root decides.
    fn at_root(&mut self, v: usize, root: &RealRoot, live: &[&Constraint], ineqs: &[Constraint]) -> AtRoot {
        let unknown = || AtRoot::Unknown("a root leaves equations with algebraic coefficients".into());
        let Some(w) = other_variable(&live[0].poly, v) else {
            return unknown();
        };
        let polys: Vec<Poly> = live.iter().map(|e| e.poly.clone()).collect();
        let Some(g) = gcd_at_root(&polys, v, w, root) else {
            return unknown();
        };
        match g.len() {
            0 => unknown(),
            1 => {
                self.cert.push(CertStep::RootNoCommon {
                    variable: v,
                    root: root.clone(),
                    other: w,
                    provenances: live.iter().map(|e| e.provenance.clone()).collect(),
                    polys,
                });
                AtRoot::Excluded
            }
            2 => {
                let (num, den) = (-&g[0], g[1].clone());
                if let Some(i) = ineqs
                    .iter()
                    .find(|i| vanishes_at_solution(&i.poly, v, w, &num, &den, root))
                {
                    self.cert.push(CertStep::SolutionExcluded {
                        variable: v,
                        root: root.clone(),
                        other: w,
                        polys,
                        by: i.provenance.clone(),
                        poly: i.poly.clone(),
                    });
                    return AtRoot::Excluded;
                }
                match extend_at_root(v, w, root, num, den, ineqs) {
                    Some(a) => AtRoot::Sat(a),
                    None => AtRoot::Unknown("no sample point avoids the inequalities at a root".into()),
                }
            }
            _ => {
                let Some(r) = root.as_rational() else {
                    return unknown();
                };
                let at = |c: &Constraint| Constraint::new(c.poly.subst_value(v, r), c.provenance.clone());
                let mut sub = Solver {
                    max_vars: self.max_vars,
                    cert: Vec::new(),
                };
                match sub.solve(live.iter().map(|e| at(e)).collect(), ineqs.iter().map(at).collect(), 0) {
                    Res::Sat(mut a) => {
                        a.values.insert(v, Value::Rational(r.clone()));
                        AtRoot::Sat(a)
                    }
                    Res::Unsat => {
                        self.cert.push(CertStep::RootCase {
                            variable: v,
                            value: r.clone(),
                            steps: sub.cert,
                        });
                        AtRoot::Excluded
                    }
                    Res::Unknown(reason) => AtRoot::Unknown(reason),
                }
            }
        }
    }

    fn two_variables(&mut self, vars: &[usize], eqs: Vec<Constraint>, ineqs: Vec<Constraint>, depth: usize) -> Res {
        // univariate equalities pin one variable first
        for &u in vars {
            let (uni, rest): (Vec<Constraint>, Vec<Constraint>) =
                eqs.iter().cloned().partition(|e| e.poly.variables() == [u]);
            if uni.is_empty() {
                continue;
            }
            let polys: Vec<Poly> = uni.iter().map(|e| e.poly.clone()).collect();
            let g = polys.iter().fold(UPoly::zero(), |acc, p| {
                acc.gcd(&UPoly::from_poly(p, u).expect("univariate"))
            });
            if g.is_constant() {
                self.cert.push(CertStep::NoCommonRoot { variable: u, polys });
                return Res::Unsat;
            }
            return self.roots_against(u, g, polys, &rest, &ineqs);
        }

        // an equality linear in one variable
        for &v in vars.iter().rev() {
            if let Some(k) = eqs.iter().position(|e| e.poly.degree_in(v) == 1) {
                return self.eliminate_linear(v, k, eqs, ineqs, depth);
            }
        }

        // two quadratics combine to a linear equality
        for &v in vars.iter().rev() {
            let quad: Vec<&Constraint> = eqs.iter().filter(|e| e.poly.degree_in(v) == 2).collect();
            for a in 0..quad.len() {
                for b in a + 1..quad.len() {
                    let (f, g) = (&quad[a].poly, &quad[b].poly);
                    let h = combine(f, g, v);
                    if h.is_zero() || is_known(&eqs, &h) {
                        continue;
                    }
                    self.cert.push(CertStep::Combine {
                        variable: v,
                        first: f.clone(),
                        second: g.clone(),
                        result: h.clone(),
                    });
                    let description = format!("combination of {} and {}", quad[a].label(), quad[b].label());
                    let mut next = eqs.clone();
                    next.push(Constraint::new(h, Provenance::Derived { description }));
                    return self.solve(next, ineqs, depth + 1);
                }
            }
        }

        // resultant of the pair of lowest degree
        for &v in vars.iter().rev() {
            let mut pairs: Vec<(u32, usize, usize)> = Vec::new();
            for a in 0..eqs.len() {
                for b in a + 1..eqs.len() {
                    let (da, db) = (eqs[a].poly.degree_in(v), eqs[b].poly.degree_in(v));
                    if da > 0 && db > 0 {
                        pairs.push((da + db, a, b));
                    }
                }
            }
            pairs.sort();
            for (_, a, b) in pairs {
                let r = resultant(&eqs[a].poly, &eqs[b].poly, v).expect("positive degrees");
                if r.is_zero() || is_known(&eqs, &r) {
                    continue;
                }
                self.cert.push(CertStep::Resultant {
                    variable: v,
                    first: eqs[a].poly.clone(),
                    second: eqs[b].poly.clone(),
                    result: r.clone(),
                });
                let description = format!("resultant of {} and {}", eqs[a].label(), eqs[b].label());
                let mut next = eqs.clone();
                next.push(Constraint::new(r, Provenance::Derived { description }));
                return self.solve(next, ineqs, depth + 1);
            }
        }

        match sample_curve(vars, &eqs, &ineqs) {
            Some(a) => Res::Sat(a),
            None => Res::Unknown("no elimination applies and no sampled point lies on the curve".into()),
        }
    }

    fn eliminate_linear(
        &mut self,
        v: usize,
        k: usize,
        eqs: Vec<Constraint>,
        ineqs: Vec<Constraint>,
        depth: usize,
    ) -> Res {
        let e = &eqs[k];
        let cs = e.poly.coeffs_in(v);
        let num = -&cs[0];
        let den = cs[1].clone();
        self.cert.push(CertStep::Eliminate {
            variable: v,
            from: e.provenance.clone(),
            poly: e.poly.clone(),
            numerator: num.clone(),
            denominator: den.clone(),
        });
        let subst = |c: &Constraint| {
            let (p, _) = c
                .poly
                .subst_rational_function(v, &num, &den)
                .expect("nonzero denominator");
            Constraint::new(p, c.provenance.clone())
        };
        let others: Vec<Constraint> = eqs
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, c)| c.clone())
            .collect();
        let mut sub_eqs: Vec<Constraint> = others.iter().map(subst).collect();
        let mut sub_ineqs: Vec<Constraint> = ineqs.iter().map(subst).collect();
        let varname = super::system::variable_name(v);
        if !den.is_constant() {
            sub_ineqs.push(Constraint::new(
                den.clone(),
                Provenance::Denominator {
                    variable: varname.clone(),
                },
            ));
        }
        sub_eqs.retain(|c| !c.poly.is_zero());
        let main = self.solve(sub_eqs, sub_ineqs, depth + 1);
        let main = match main {
            Res::Sat(a) => match extend(a, v, &num, &den) {
                Some(a) => return Res::Sat(a),
                None => Res::Unknown("cannot express the eliminated variable".into()),
            },
            other => other,
        };
        if den.is_constant() {
            return main;
        }
        // degenerate case: both coefficients vanish
        self.cert.push(CertStep::Branch { condition: den.clone() });
        let mut deg = others;
        deg.push(Constraint::new(
            den,
            Provenance::Derived {
                description: format!("leading coefficient of {varname} in {}", e.label()),
            },
        ));
        deg.push(Constraint::new(
            num,
            Provenance::Derived {
                description: format!("constant coefficient of {varname} in {}", e.label()),
            },
        ));
        let side = self.solve(deg, ineqs, depth + 1);
        match (main, side) {
            (_, Res::Sat(a)) => Res::Sat(a),
            (Res::Unsat, Res::Unsat) => Res::Unsat,
            (Res::Unknown(r), _) | (_, Res::Unknown(r)) => Res::Unknown(r),
            (Res::Sat(_), _) => unreachable!("returned above"),
        }
    }
}

fn is_known(eqs: &[Constraint], p: &Poly) -> bool {
    let q = p.primitive();
    eqs.iter().any(|e| e.poly.primitive() == q)
}

/// The other variable of a bivariate equality in `v`.
fn other_variable(p: &Poly, v: usize) -> Option<usize> {
    p.variables().into_iter().find(|&w| w != v)
}

/// Two equalities with no common solution in the other variable at the
/// root: the first keeps its leading coefficient and their resultant does
/// not vanish there.
fn separated(v: usize, root: &RealRoot, live: &[&Constraint]) -> Option<CertStep> {
    for f in live {
        let w = other_variable(&f.poly, v)?;
        let lc = UPoly::from_poly(&f.poly.leading_coeff_in(w), v)?;
        if sign_at_root(&lc, root) == 0 {
            continue;
        }
        for g in live {
            if std::ptr::eq(*f, *g) || g.poly.degree_in(w) == 0 {
                continue;
            }
            let r = resultant(&f.poly, &g.poly, w).ok()?;
            let ur = UPoly::from_poly(&r, v)?;
            if sign_at_root(&ur, root) != 0 {
                return Some(CertStep::RootSeparated {
                    variable: v,
                    root: root.clone(),
                    other: w,
                    first: f.provenance.clone(),
                    first_poly: f.poly.clone(),
                    second: g.provenance.clone(),
                    second_poly: g.poly.clone(),
                    resultant: r,
                });
            }
        }
    }
    None
}

/// Fixes `w = num(root) / den(root)` and samples the remaining free
/// variables of the inequalities.
fn extend_at_root(
    v: usize,
    w: usize,
    root: &RealRoot,
    num: UPoly,
    den: UPoly,
    ineqs: &[Constraint],
) -> Option<Assignment> {
    let (pn, pd) = (num.to_poly(v), den.to_poly(v));
    let sub: Vec<Constraint> = ineqs
        .iter()
        .map(|i| {
            let q = i
                .poly
                .subst_rational_function(w, &pn, &pd)
                .expect("nonzero denominator")
                .0;
            Constraint::new(q, i.provenance.clone())
        })
        .collect();
    let free: Vec<usize> = vars_of(&sub).into_iter().filter(|&x| x != v).collect();
    let mut values = sample(&free, &sub, Some((v, root)))?;
    Some(match root.as_rational() {
        Some(r) => {
            values.insert(v, Value::Rational(r.clone()));
            values.insert(w, Value::Rational(num.eval(r) / den.eval(r)));
            Assignment { root: None, values }
        }
        None => {
            values.insert(w, Value::Function { num, den });
            Assignment {
                root: Some((v, root.clone())),
                values,
            }
        }
    })
}

enum AtRoot {
    Excluded,
    Sat(Assignment),
    Unknown(String),
}

/// Witness search on the solution curve: fix the first variable at grid
/// values and solve the equalities for the second.
fn sample_curve(vars: &[usize], eqs: &[Constraint], ineqs: &[Constraint]) -> Option<Assignment> {
    let (u, v) = (vars[0], vars[1]);
    for x in rational_grid(4) {
        let g = eqs.iter().try_fold(UPoly::zero(), |acc, e| {
            Some(acc.gcd(&UPoly::from_poly(&e.poly.subst_value(u, &x), v)?))
        })?;
        if g.is_zero() || g.is_constant() {
            continue;
        }
        let sf = g.squarefree_part().ok()?;
        for root in isolate_real_roots(&sf).ok()? {
            let sub: Vec<Constraint> = ineqs
                .iter()
                .map(|i| Constraint::new(i.poly.subst_value(u, &x), i.provenance.clone()))
                .collect();
            let free: Vec<usize> = vars_of(&sub).into_iter().filter(|&w| w != v).collect();
            if let Some(mut values) = sample(&free, &sub, Some((v, &root))) {
                values.insert(u, Value::Rational(x.clone()));
                let root = match root.as_rational() {
                    Some(r) => {
                        values.insert(v, Value::Rational(r.clone()));
                        None
                    }
                    None => Some((v, root)),
                };
                return Some(Assignment { root, values });
            }
        }
    }
    None
}

/// `lc(g) * f - lc(f) * g` in `v`, of lower degree in `v`.
pub fn combine(f: &Poly, g: &Poly, v: usize) -> Poly {
    let a = f.leading_coeff_in(v);
    let b = g.leading_coeff_in(v);
    &(&b * f) - &(&a * g)
}

/// Adds `v = num / den` to an assignment of the other variables.
fn extend(mut a: Assignment, v: usize, num: &Poly, den: &Poly) -> Option<Assignment> {
    let uses_function = |p: &Poly| {
        a.values
            .iter()
            .any(|(w, x)| matches!(x, Value::Function { .. }) && p.involves(*w))
    };
    if uses_function(num) || uses_function(den) {
        return None;
    }
    let n = a.reduce(num)?;
    let d = a.reduce(den)?;
    let value = match &a.root {
        None => Value::Rational(n.eval(&Rational::zero()) / d.eval(&Rational::zero())),
        Some(_) => Value::Function { num: n, den: d },
    };
    a.values.insert(v, value);
    Some(a)
}

/// Rationals ordered by height `max(|p|, q)`, then denominator, then
/// absolute value, positive first.
pub fn rational_grid(max_height: i64) -> Vec<Rational> {
    let mut out = vec![Rational::zero()];
    for h in 1..=max_height {
        let mut level: Vec<(i64, i64)> = Vec::new();
        for q in 1..=h {
            for p in 1..=h {
                if p.max(q) != h || p.gcd(&q) != 1 {
                    continue;
                }
                level.push((p, q));
                level.push((-p, q));
            }
        }
        level.sort_by_key(|&(p, q)| (q, p.abs(), p < 0));
        level.dedup();
        out.extend(level.into_iter().map(|(p, q)| Rational::new(p.into(), q.into())));
    }
    out
}

/// First tuple of grid values (by increasing largest index, then
/// lexicographic) at which every inequality is nonzero, optionally at a
/// fixed algebraic value of another variable.
fn sample(free: &[usize], ineqs: &[Constraint], fixed: Option<(usize, &RealRoot)>) -> Option<BTreeMap<usize, Value>> {
    let grid = rational_grid(GRID_HEIGHT);
    let ok = |values: &[usize]| -> bool {
        ineqs.iter().all(|i| {
            let mut p = i.poly.clone();
            for (k, &w) in free.iter().enumerate() {
                p = p.subst_value(w, &grid[values[k]]);
            }
            match fixed {
                Some((v, root)) => match UPoly::from_poly(&p, v) {
                    Some(u) => sign_at_root(&u, root) != 0,
                    None => false,
                },
                None => p.as_constant().is_some_and(|c| !c.is_zero()),
            }
        })
    };
    let k = free.len();
    if k == 0 {
        return ok(&[]).then(BTreeMap::new);
    }
    let mut tried = 0usize;
    for m in 0..grid.len() {
        // tuples over 0..=m that use m at least once
        let mut idx = vec![0usize; k];
        loop {
            if idx.contains(&m) {
                tried += 1;
                if ok(&idx) {
                    return Some(
                        free.iter()
                            .zip(&idx)
                            .map(|(&w, &x)| (w, Value::Rational(grid[x].clone())))
                            .collect(),
                    );
                }
                if tried > MAX_SAMPLES {
                    return None;
                }
            }
            if !advance(&mut idx, m) {
                break;
            }
        }
    }
    None
}

fn advance(idx: &mut [usize], m: usize) -> bool {
    for pos in (0..idx.len()).rev() {
        if idx[pos] < m {
            idx[pos] += 1;
            for x in &mut idx[pos + 1..] {
                *x = 0;
            }
            return true;
        }
    }
    false
}
