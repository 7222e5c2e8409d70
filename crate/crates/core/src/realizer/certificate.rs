//! Deduction logs for closed branches and their independent checker.
//!
//! Every step carries the polynomials it talks about, so each one can be
//! re-checked on its own: constants are constants, claimed factors
//! divide, Sturm counts match and excluded roots are roots.

use serde_json::{json, Value};

use crate::polyalg::poly::format_rational;
use crate::polyalg::roots::SturmChain;
use crate::polyalg::{gcd, resultant, sign_at_root, Poly, Rational, RealRoot, UPoly};

use super::system::Provenance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertStep {
    /// An equality whose polynomial is a nonzero constant.
    NonzeroEquality { provenance: Provenance, poly: Poly },
    /// An inequality whose polynomial is identically zero.
    ZeroInequality { provenance: Provenance, poly: Poly },
    /// Two constructed elements coincide, so a join or meet is undefined.
    Coincidence { element: String, from: [String; 2] },
    /// `factor` was divided out of an equality; every irreducible factor
    /// of it divides the inequality `by_poly`.
    Cancel {
        provenance: Provenance,
        before: Poly,
        factor: Poly,
        after: Poly,
        by: Provenance,
        by_poly: Poly,
    },
    /// `result = lc(second) * first - lc(first) * second` in `variable`.
    Combine {
        variable: usize,
        first: Poly,
        second: Poly,
        result: Poly,
    },
    /// `result` is the resultant of two equalities with respect to
    /// `variable`.
    Resultant {
        variable: usize,
        first: Poly,
        second: Poly,
        result: Poly,
    },
    /// `variable = numerator / denominator` from an equality linear in it.
    Eliminate {
        variable: usize,
        from: Provenance,
        poly: Poly,
        numerator: Poly,
        denominator: Poly,
    },
    /// Start of the degenerate case `condition = 0` of an elimination.
    Branch { condition: Poly },
    /// The univariate equalities have constant gcd.
    NoCommonRoot { variable: usize, polys: Vec<Poly> },
    /// The squarefree gcd of the univariate equalities has `count` real
    /// roots.
    RealRoots {
        variable: usize,
        polys: Vec<Poly>,
        squarefree: Poly,
        count: usize,
    },
    /// A constraint rules out the root: an inequality vanishing there, or
    /// an equality that becomes a nonzero constant there.
    RootExcluded {
        variable: usize,
        root: RealRoot,
        by: Provenance,
        poly: Poly,
        equality: bool,
    },
    /// At the root, two equalities have no common solution in `other`:
    /// the leading coefficient of the first in `other` and their
    /// resultant are both nonzero there.
    RootSeparated {
        variable: usize,
        root: RealRoot,
        other: usize,
        first: Provenance,
        first_poly: Poly,
        second: Provenance,
        second_poly: Poly,
        resultant: Poly,
    },
    /// At the root, the equalities have no common solution in `other`:
    /// their gcd over the field generated by the root is constant.
    RootNoCommon {
        variable: usize,
        root: RealRoot,
        other: usize,
        provenances: Vec<Provenance>,
        polys: Vec<Poly>,
    },
    /// At a rational root, the system with the value substituted is closed
    /// by `steps`.
    RootCase {
        variable: usize,
        value: Rational,
        steps: Vec<CertStep>,
    },
    /// At the root, the gcd of the equalities is linear in `other`, and the
    /// inequality vanishes at the only common solution.
    SolutionExcluded {
        variable: usize,
        root: RealRoot,
        other: usize,
        polys: Vec<Poly>,
        by: Provenance,
        poly: Poly,
    },
}

impl CertStep {
    pub fn describe(&self, names: &[&str]) -> String {
        let show = |p: &Poly| p.display_with(names).to_string();
        let var = |v: &usize| names.get(*v).map_or_else(|| format!("x{v}"), |s| s.to_string());
        match self {
            CertStep::NonzeroEquality { provenance, poly } => match provenance {
                Provenance::Incidence { .. } => format!("{provenance} missing ({} != 0)", show(poly)),
                _ => format!("{provenance} reduces to {} != 0", show(poly)),
            },
            CertStep::ZeroInequality { provenance, .. } => match provenance {
                Provenance::NonIncidence { .. } => format!("{provenance} forced (0 != 0)"),
                _ => format!("{provenance} vanishes identically (0 != 0)"),
            },
            CertStep::Coincidence { element, from } => {
                format!("{element} undefined: {} and {} coincide", from[0], from[1])
            }
            CertStep::Cancel {
                provenance,
                factor,
                after,
                by,
                ..
            } => format!(
                "{provenance}: cancel {} (divides {by}), leaving {}",
                show(factor),
                show(after)
            ),
            CertStep::Combine { variable, result, .. } => {
                format!(
                    "combine two equalities quadratic in {}: {} = 0",
                    var(variable),
                    show(result)
                )
            }
            CertStep::Resultant { variable, result, .. } => {
                format!("eliminate {} by a resultant: {} = 0", var(variable), show(result))
            }
            CertStep::RootSeparated {
                variable,
                root,
                other,
                first,
                second,
                ..
            } => format!(
                "{} = {} excluded: {first} and {second} have no common {}",
                var(variable),
                root_text(root, *variable, names),
                var(other)
            ),
            CertStep::RootNoCommon {
                variable,
                root,
                other,
                provenances,
                ..
            } => format!(
                "{} = {} excluded: {} have no common {}",
                var(variable),
                root_text(root, *variable, names),
                join(provenances),
                var(other)
            ),
            CertStep::RootCase { variable, value, steps } => {
                let inner: Vec<String> = steps.iter().map(|st| st.describe(names)).collect();
                format!("{} = {}: {}", var(variable), format_rational(value), inner.join("; "))
            }
            CertStep::SolutionExcluded {
                variable,
                root,
                other,
                by,
                ..
            } => format!(
                "{} = {} excluded: the equalities fix {} and {by} vanishes there",
                var(variable),
                root_text(root, *variable, names),
                var(other)
            ),
            CertStep::Eliminate {
                variable,
                from,
                numerator,
                denominator,
                ..
            } => format!(
                "from {from}: {} = ({}) / ({})",
                var(variable),
                show(numerator),
                show(denominator)
            ),
            CertStep::Branch { condition } => format!("case {} = 0", show(condition)),
            CertStep::NoCommonRoot { variable, .. } => {
                format!("equalities in {} have no common root", var(variable))
            }
            CertStep::RealRoots {
                variable,
                squarefree,
                count,
                ..
            } => format!("{} = 0 has {count} real roots in {}", show(squarefree), var(variable)),
            CertStep::RootExcluded {
                variable,
                root,
                by,
                equality,
                ..
            } => {
                let what = if *equality { "fails" } else { "vanishes" };
                format!("{} = {}: {by} {what}", var(variable), root_text(root, *variable, names))
            }
        }
    }

    pub fn to_json(&self, names: &[&str]) -> Value {
        let show = |p: &Poly| p.display_with(names).to_string();
        let mut v = match self {
            CertStep::NonzeroEquality { provenance, poly } => json!({
                "step": "nonzero_equality", "constraint": provenance.to_string(), "value": show(poly)
            }),
            CertStep::ZeroInequality { provenance, .. } => json!({
                "step": "zero_inequality", "constraint": provenance.to_string()
            }),
            CertStep::Coincidence { element, from } => json!({
                "step": "coincidence", "element": element, "from": from
            }),
            CertStep::Cancel {
                provenance,
                before,
                factor,
                after,
                by,
                ..
            } => json!({
                "step": "cancel", "constraint": provenance.to_string(), "before": show(before),
                "factor": show(factor), "after": show(after), "by": by.to_string()
            }),
            CertStep::Combine {
                first, second, result, ..
            } => json!({
                "step": "combine", "first": show(first), "second": show(second), "result": show(result)
            }),
            CertStep::Resultant {
                variable,
                first,
                second,
                result,
            } => json!({
                "step": "resultant", "variable": names.get(*variable),
                "first": show(first), "second": show(second), "result": show(result)
            }),
            CertStep::RootSeparated {
                variable,
                root,
                other,
                first,
                second,
                resultant,
                ..
            } => json!({
                "step": "root_separated", "variable": names.get(*variable),
                "root": root_text(root, *variable, names), "other": names.get(*other),
                "first": first.to_string(), "second": second.to_string(), "resultant": show(resultant)
            }),
            CertStep::RootNoCommon {
                variable,
                root,
                other,
                provenances,
                ..
            } => json!({
                "step": "root_no_common", "variable": names.get(*variable),
                "root": root_text(root, *variable, names), "other": names.get(*other),
                "equalities": provenances.iter().map(|p| p.to_string()).collect::<Vec<_>>()
            }),
            CertStep::RootCase { variable, value, steps } => json!({
                "step": "root_case", "variable": names.get(*variable), "value": format_rational(value),
                "steps": steps.iter().map(|st| st.to_json(names)).collect::<Vec<_>>()
            }),
            CertStep::SolutionExcluded {
                variable,
                root,
                other,
                by,
                ..
            } => json!({
                "step": "solution_excluded", "variable": names.get(*variable),
                "root": root_text(root, *variable, names), "other": names.get(*other), "by": by.to_string()
            }),
            CertStep::Eliminate {
                variable,
                from,
                numerator,
                denominator,
                ..
            } => json!({
                "step": "eliminate", "variable": names.get(*variable), "from": from.to_string(),
                "numerator": show(numerator), "denominator": show(denominator)
            }),
            CertStep::Branch { condition } => json!({"step": "branch", "condition": show(condition)}),
            CertStep::NoCommonRoot { variable, polys } => json!({
                "step": "no_common_root", "variable": names.get(*variable),
                "polys": polys.iter().map(show).collect::<Vec<_>>()
            }),
            CertStep::RealRoots {
                variable,
                squarefree,
                count,
                ..
            } => json!({
                "step": "real_roots", "variable": names.get(*variable), "poly": show(squarefree), "count": count
            }),
            CertStep::RootExcluded { variable, root, by, .. } => json!({
                "step": "root_excluded", "variable": names.get(*variable),
                "root": root_text(root, *variable, names), "by": by.to_string()
            }),
        };
        v["text"] = Value::String(self.describe(names));
        v
    }

    fn excludes_a_root(&self) -> bool {
        matches!(
            self,
            CertStep::RootExcluded { .. }
                | CertStep::RootSeparated { .. }
                | CertStep::RootNoCommon { .. }
                | CertStep::RootCase { .. }
                | CertStep::SolutionExcluded { .. }
        )
    }

    /// Whether the step closes a line of reasoning by itself.
    pub fn is_terminal(&self) -> bool {
        matches!(
            self,
            CertStep::NonzeroEquality { .. }
                | CertStep::ZeroInequality { .. }
                | CertStep::Coincidence { .. }
                | CertStep::NoCommonRoot { .. }
        ) || matches!(self, CertStep::RealRoots { count: 0, .. })
    }
}

pub fn root_text(root: &RealRoot, var: usize, names: &[&str]) -> String {
    match root.as_rational() {
        Some(r) => format_rational(r),
        None => format!(
            "root of {} in ({}, {})",
            root.poly.to_poly(var).display_with(names),
            format_rational(&root.lo),
            format_rational(&root.hi)
        ),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error("step {0}: claimed constant is not a nonzero constant")]
    NotNonzeroConstant(usize),
    #[error("step {0}: claimed zero polynomial is nonzero")]
    NotZero(usize),
    #[error("step {0}: cancelled factor does not divide the equality")]
    BadDivision(usize),
    #[error("step {0}: cancelled factor has a factor not dividing the inequality")]
    ForeignFactor(usize),
    #[error("step {0}: combination does not recompute")]
    BadCombination(usize),
    #[error("step {0}: resultant does not recompute")]
    BadResultant(usize),
    #[error("step {0}: elimination does not match a linear equality")]
    BadElimination(usize),
    #[error("step {0}: gcd is not constant")]
    CommonRoot(usize),
    #[error("step {0}: root count does not match the Sturm count")]
    BadRootCount(usize),
    #[error("step {0}: excluded root is not isolated or not a root")]
    BadRoot(usize),
    #[error("step {0}: constraint does not exclude the root")]
    NotExcluded(usize),
    #[error("step {0}: polynomial is not univariate")]
    NotUnivariate(usize),
    #[error("root list has {claimed} roots but {excluded} were excluded")]
    RootsLeft { claimed: usize, excluded: usize },
    #[error("step {0}: case split does not match an elimination")]
    BadBranch(usize),
    #[error("the certificate has no closing step")]
    Open,
}

/// Re-checks every step of a closed branch's certificate.
///
/// An elimination with a nonconstant denominator splits the rest of the
/// steps at its matching `Branch`: the main case before it and the
/// degenerate case after it, both of which must close.
pub fn check_certificate(steps: &[CertStep]) -> Result<(), CertificateError> {
    if check_proof(steps, 0)? {
        Ok(())
    } else {
        Err(CertificateError::Open)
    }
}

/// Roots of a `RealRoots` step still waiting to be excluded.
struct RootList {
    variable: usize,
    squarefree: UPoly,
    claimed: usize,
    seen: Vec<(Rational, Rational)>,
}

enum Root<'a> {
    Isolated(&'a RealRoot),
    Point(&'a Rational),
}

/// Ends the pending root list; true if it excluded at least one root and
/// thereby closed the case.
fn settle(pending: &mut Option<RootList>) -> Result<bool, CertificateError> {
    match pending.take() {
        None => Ok(false),
        Some(l) if l.claimed != l.seen.len() => Err(CertificateError::RootsLeft {
            claimed: l.claimed,
            excluded: l.seen.len(),
        }),
        Some(l) => Ok(l.claimed > 0),
    }
}

/// Records one excluded root. It has to be a root of the listed squarefree
/// polynomial and differ from the roots excluded so far.
fn admit(pending: &mut Option<RootList>, i: usize, variable: usize, root: Root) -> Result<(), CertificateError> {
    let list = pending
        .as_mut()
        .filter(|l| l.variable == variable)
        .ok_or(CertificateError::BadRoot(i))?;
    let zero = Rational::from_integer(0.into());
    let (lo, hi, is_root) = match root {
        Root::Point(r) => (r.clone(), r.clone(), list.squarefree.eval(r) == zero),
        Root::Isolated(r) => {
            let ok = match r.as_rational() {
                Some(x) => list.squarefree.eval(x) == zero,
                None => r.poly.monic() == list.squarefree.monic(),
            };
            (r.lo.clone(), r.hi.clone(), ok)
        }
    };
    let same = |(a, b): &(Rational, Rational)| match (lo == hi, a == b) {
        (true, true) => lo == *a,
        (true, false) => *a < lo && lo < *b,
        (false, true) => lo < *a && *a < hi,
        (false, false) => lo < *b && *a < hi,
    };
    if !is_root || list.seen.iter().any(same) {
        return Err(CertificateError::BadRoot(i));
    }
    list.seen.push((lo, hi));
    Ok(())
}

/// Checks `steps` (the first at index `offset`) and reports whether they
/// close their case.
fn check_proof(steps: &[CertStep], offset: usize) -> Result<bool, CertificateError> {
    let mut closed = false;
    let mut pending: Option<RootList> = None;
    for (k, step) in steps.iter().enumerate() {
        let i = offset + k;
        if !step.excludes_a_root() {
            closed |= settle(&mut pending)?;
        }
        check_step(i, step, &mut pending)?;
        closed |= step.is_terminal();
        if let CertStep::Eliminate { denominator, .. } = step {
            let rest = &steps[k + 1..];
            if denominator.is_constant() {
                return Ok(check_proof(rest, i + 1)? || closed);
            }
            let j = matching_branch(rest).ok_or(CertificateError::BadBranch(i))?;
            match &rest[j] {
                CertStep::Branch { condition } if condition == denominator => {}
                _ => return Err(CertificateError::BadBranch(i + 1 + j)),
            }
            let main = check_proof(&rest[..j], i + 1)?;
            let side = check_proof(&rest[j + 1..], i + 2 + j)?;
            return Ok((main && side) || closed);
        }
    }
    Ok(settle(&mut pending)? || closed)
}

fn matching_branch(steps: &[CertStep]) -> Option<usize> {
    let mut depth = 0usize;
    for (j, step) in steps.iter().enumerate() {
        match step {
            CertStep::Eliminate { denominator, .. } if !denominator.is_constant() => depth += 1,
            CertStep::Branch { .. } if depth == 0 => return Some(j),
            CertStep::Branch { .. } => depth -= 1,
            _ => {}
        }
    }
    None
}

fn check_step(i: usize, step: &CertStep, pending: &mut Option<RootList>) -> Result<(), CertificateError> {
    match step {
        CertStep::NonzeroEquality { poly, .. } => {
            if !poly
                .as_constant()
                .is_some_and(|c| c != Rational::from_integer(0.into()))
            {
                return Err(CertificateError::NotNonzeroConstant(i));
            }
        }
        CertStep::ZeroInequality { poly, .. } => {
            if !poly.is_zero() {
                return Err(CertificateError::NotZero(i));
            }
        }
        CertStep::Coincidence { .. } => {}
        CertStep::Branch { .. } => return Err(CertificateError::BadBranch(i)),
        CertStep::Cancel {
            before,
            factor,
            after,
            by_poly,
            ..
        } => {
            if factor * after != *before {
                return Err(CertificateError::BadDivision(i));
            }
            let mut rest = factor.clone();
            loop {
                let g = gcd(&rest, by_poly);
                if g.is_constant() {
                    break;
                }
                rest = rest.exact_div(&g).ok_or(CertificateError::ForeignFactor(i))?;
            }
            if !rest.is_constant() {
                return Err(CertificateError::ForeignFactor(i));
            }
        }
        CertStep::Combine {
            variable,
            first,
            second,
            result,
        } => {
            let a = first.leading_coeff_in(*variable);
            let b = second.leading_coeff_in(*variable);
            if &(&b * first) - &(&a * second) != *result || result.degree_in(*variable) >= first.degree_in(*variable) {
                return Err(CertificateError::BadCombination(i));
            }
        }
        CertStep::Eliminate {
            variable,
            poly,
            numerator,
            denominator,
            ..
        } => {
            let cs = poly.coeffs_in(*variable);
            if cs.len() != 2 || cs[1] != *denominator || -&cs[0] != *numerator {
                return Err(CertificateError::BadElimination(i));
            }
        }
        CertStep::Resultant {
            variable,
            first,
            second,
            result,
        } => {
            if resultant(first, second, *variable).ok().as_ref() != Some(result) || result.involves(*variable) {
                return Err(CertificateError::BadResultant(i));
            }
        }
        CertStep::NoCommonRoot { variable, polys } => {
            let g = univariate_gcd(polys, *variable).ok_or(CertificateError::NotUnivariate(i))?;
            if !g.is_constant() {
                return Err(CertificateError::CommonRoot(i));
            }
        }
        CertStep::RealRoots {
            variable,
            polys,
            squarefree,
            count,
        } => {
            let g = univariate_gcd(polys, *variable).ok_or(CertificateError::NotUnivariate(i))?;
            let sf = UPoly::from_poly(squarefree, *variable).ok_or(CertificateError::NotUnivariate(i))?;
            let expected = g.squarefree_part().map_err(|_| CertificateError::BadRootCount(i))?;
            if sf.monic() != expected.monic() || SturmChain::new(&sf).count_all() != *count {
                return Err(CertificateError::BadRootCount(i));
            }
            *pending = Some(RootList {
                variable: *variable,
                squarefree: sf,
                claimed: *count,
                seen: Vec::new(),
            });
        }
        CertStep::RootExcluded {
            variable,
            root,
            poly,
            equality,
            ..
        } => {
            if !is_isolated(root) {
                return Err(CertificateError::BadRoot(i));
            }
            if !excludes(poly, *variable, root, *equality) {
                return Err(CertificateError::NotExcluded(i));
            }
            admit(pending, i, *variable, Root::Isolated(root))?;
        }
        CertStep::RootSeparated {
            variable,
            root,
            other,
            first_poly,
            second_poly,
            resultant: r,
            ..
        } => {
            if !is_isolated(root) {
                return Err(CertificateError::BadRoot(i));
            }
            let at_root = |p: &Poly| UPoly::from_poly(p, *variable).map(|u| sign_at_root(&u, root));
            let recomputed = resultant(first_poly, second_poly, *other).ok();
            let bivariate = |p: &Poly| p.variables().iter().all(|w| w == variable || w == other);
            if recomputed.as_ref() != Some(r)
                || !bivariate(first_poly)
                || !bivariate(second_poly)
                || at_root(&first_poly.leading_coeff_in(*other)).unwrap_or(0) == 0
                || at_root(r).unwrap_or(0) == 0
            {
                return Err(CertificateError::NotExcluded(i));
            }
            admit(pending, i, *variable, Root::Isolated(root))?;
        }
        CertStep::RootNoCommon {
            variable,
            root,
            other,
            polys,
            ..
        } => {
            let g = gcd_at_root(polys, *variable, *other, root);
            if !is_isolated(root) || g.map(|g| g.len()) != Some(1) {
                return Err(CertificateError::NotExcluded(i));
            }
            admit(pending, i, *variable, Root::Isolated(root))?;
        }
        CertStep::RootCase { variable, value, steps } => {
            check_certificate(steps)?;
            admit(pending, i, *variable, Root::Point(value))?;
        }
        CertStep::SolutionExcluded {
            variable,
            root,
            other,
            polys,
            poly,
            ..
        } => {
            let ok = is_isolated(root)
                && match gcd_at_root(polys, *variable, *other, root) {
                    Some(g) if g.len() == 2 => vanishes_at_solution(poly, *variable, *other, &-&g[0], &g[1], root),
                    _ => false,
                };
            if !ok {
                return Err(CertificateError::NotExcluded(i));
            }
            admit(pending, i, *variable, Root::Isolated(root))?;
        }
    }
    Ok(())
}

fn join(ps: &[Provenance]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

/// gcd in `other` of `polys` at the root of `variable`, as coefficients
/// (lowest first) that are polynomials in `variable` reduced modulo the
/// root's defining polynomial. Coefficients vanishing at the root are
/// dropped from the top, so the leading one is nonzero there. Euclid runs
/// on pseudo-remainders and never divides. `None` if some polynomial
/// involves a third variable; an empty result means every polynomial
/// vanishes identically at the root.
pub(crate) fn gcd_at_root(polys: &[Poly], variable: usize, other: usize, root: &RealRoot) -> Option<Vec<UPoly>> {
    let m = &root.poly;
    let trim = |mut v: Vec<UPoly>| {
        while v.last().is_some_and(|c| sign_at_root(c, root) == 0) {
            v.pop();
        }
        v
    };
    let reduce = |c: &UPoly| c.rem(m).expect("nonzero modulus");
    let mut g: Vec<UPoly> = Vec::new();
    for p in polys {
        let lifted: Option<Vec<UPoly>> = p
            .coeffs_in(other)
            .iter()
            .map(|c| UPoly::from_poly(c, variable).map(|u| reduce(&u)))
            .collect();
        let (mut a, mut b) = (g, trim(lifted?));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let lb = b.last().expect("nonempty").clone();
            while a.len() >= b.len() {
                let la = a.last().expect("nonempty").clone();
                let shift = a.len() - b.len();
                for c in a.iter_mut() {
                    *c = reduce(&(&*c * &lb));
                }
                for (k, bc) in b.iter().enumerate() {
                    a[shift + k] = reduce(&(&a[shift + k] - &(&la * bc)));
                }
                a = trim(a);
            }
            std::mem::swap(&mut a, &mut b);
        }
        g = a;
    }
    Some(g)
}

/// Whether `poly` vanishes identically at `variable = root`,
/// `other = num(root) / den(root)`.
pub(crate) fn vanishes_at_solution(
    poly: &Poly,
    variable: usize,
    other: usize,
    num: &UPoly,
    den: &UPoly,
    root: &RealRoot,
) -> bool {
    match poly.subst_rational_function(other, &num.to_poly(variable), &den.to_poly(variable)) {
        Ok((q, _)) => coefficients_over(&q, variable)
            .iter()
            .all(|c| sign_at_root(c, root) == 0),
        Err(_) => false,
    }
}

fn is_isolated(root: &RealRoot) -> bool {
    match root.as_rational() {
        Some(r) => root.poly.eval(r) == Rational::from_integer(0.into()),
        None => SturmChain::new(&root.poly).count_open(&root.lo, &root.hi) == 1,
    }
}

fn univariate_gcd(polys: &[Poly], var: usize) -> Option<UPoly> {
    let mut g = UPoly::zero();
    for p in polys {
        g = g.gcd(&UPoly::from_poly(p, var)?);
    }
    Some(g)
}

/// Coefficients of `p` with respect to every variable except `var`, each
/// univariate in `var`.
pub(crate) fn coefficients_over(p: &Poly, var: usize) -> Vec<UPoly> {
    match p.variables().into_iter().find(|&w| w != var) {
        None => vec![UPoly::from_poly(p, var).expect("univariate")],
        Some(w) => p
            .coeffs_in(w)
            .iter()
            .filter(|c| !c.is_zero())
            .flat_map(|c| coefficients_over(c, var))
            .collect(),
    }
}

/// An inequality excludes the root when it vanishes identically there;
/// an equality when its part of positive degree in the other variables
/// vanishes but its constant part does not.
pub(crate) fn excludes(poly: &Poly, var: usize, root: &RealRoot, equality: bool) -> bool {
    if !equality {
        return coefficients_over(poly, var).iter().all(|c| sign_at_root(c, root) == 0);
    }
    let others: Vec<usize> = poly.variables().into_iter().filter(|&w| w != var).collect();
    let mut constant = poly.clone();
    for &w in &others {
        constant = constant.subst_value(w, &Rational::from_integer(0.into()));
    }
    let rest = poly - &constant;
    let c = UPoly::from_poly(&constant, var).expect("univariate");
    sign_at_root(&c, root) != 0 && coefficients_over(&rest, var).iter().all(|c| sign_at_root(c, root) == 0)
}
