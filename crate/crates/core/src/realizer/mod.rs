//! Geometric realizability in the real projective plane.
//!
//! A construction sequence is replayed with homogeneous coordinates: the
//! base goes to a fixed frame, determined elements are cross products of
//! their two smallest placed neighbours, and free elements run through a
//! pencil with one new variable. Every placed point-line pair yields an
//! equality (incident) or an inequality (not incident); the resulting
//! system is then decided branch by branch.

mod certificate;
mod replay;
mod solve;
mod system;
mod vector;
mod witness;

use serde_json::{json, Value as Json};

use crate::construction::{
    check_sequence, plan_from_base, plan_min_free, ConstructionError, ConstructionSequence, ProjectiveBase,
    SequenceError,
};
use crate::incidence::Configuration;

pub use certificate::{check_certificate, CertStep, CertificateError};
pub use replay::{replay, Branch, FRAME};
pub use solve::{combine, rational_grid, solve_system, Assignment, Outcome, Status, Value};
pub use system::{variable_name, Constraint, ConstraintSystem, Provenance};
pub use vector::{cross, default_pivot, dot, pencil_basis, pencil_member, Normalization, SymbolicVector, ZeroVector};
pub use witness::{to_svg, verify_witness, Witness, WitnessError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealizeOptions {
    pub normalization: Normalization,
    /// Largest number of variables in the equalities the solver decides.
    pub max_vars: usize,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        RealizeOptions {
            normalization: Normalization::Reduced,
            max_vars: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealizeError {
    #[error("invalid construction sequence: {0}")]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Debug, Clone)]
pub struct BranchVerdict {
    pub label: String,
    pub variables: Vec<String>,
    /// Equalities that are not identically zero.
    pub equalities: usize,
    pub inequalities: usize,
    pub status: Status,
    pub certificate: Vec<CertStep>,
    pub reason: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub status: Status,
    pub sequence: String,
    /// Free steps of the sequence.
    pub variables: usize,
    pub branches: Vec<BranchVerdict>,
    pub witness: Option<Witness>,
    pub reason: Option<String>,
}

impl Verdict {
    pub fn to_json(&self, c: &Configuration) -> Json {
        let branches: Vec<Json> = self
            .branches
            .iter()
            .map(|b| {
                let names: Vec<&str> = b.variables.iter().map(String::as_str).collect();
                json!({
                    "branch": b.label,
                    "variables": b.variables,
                    "equalities": b.equalities,
                    "inequalities": b.inequalities,
                    "status": b.status,
                    "certificate": b.certificate.iter().map(|s| s.to_json(&names)).collect::<Vec<_>>(),
                    "reason": b.reason,
                })
            })
            .collect();
        json!({
            "status": self.status,
            "sequence": self.sequence,
            "variables": self.variables,
            "branches": branches,
            "witness": self.witness.as_ref().map(|w| w.to_json(c)),
            "reason": self.reason,
        })
    }
}

/// Replays `seq` and decides every branch. REALIZABLE needs one branch
/// with a verified witness, NOT_REALIZABLE needs every branch closed by a
/// checked certificate.
pub fn realize(c: &Configuration, seq: &ConstructionSequence, opts: RealizeOptions) -> Result<Verdict, RealizeError> {
    check_sequence(c, seq)?;
    let mut branches = Vec::new();
    let mut witness = None;
    for b in replay(c, seq, opts.normalization) {
        let names = b.system.names();
        let mut v = BranchVerdict {
            label: b.label(),
            variables: b.system.variables.clone(),
            equalities: b.system.nontrivial_equalities(),
            inequalities: b.system.inequalities.len(),
            status: Status::NotRealizable,
            certificate: Vec::new(),
            reason: None,
        };
        if let Some(step) = &b.closed {
            v.certificate.push(step.clone());
            branches.push(v);
            continue;
        }
        let out = solve_system(&b.system, opts.max_vars);
        v.status = out.status;
        v.reason = out.reason;
        match out.status {
            Status::Realizable => {
                let a = out.assignment.expect("realizable outcomes carry an assignment");
                match Witness::build(&b.vectors, &a, &names).map(|w| (verify_witness(c, &w), w)) {
                    Some((Ok(()), w)) => {
                        if witness.is_none() {
                            witness = Some(w);
                        }
                    }
                    Some((Err(e), _)) => {
                        v.status = Status::Undecided;
                        v.reason = Some(format!("witness rejected: {e}"));
                    }
                    None => {
                        v.status = Status::Undecided;
                        v.reason = Some("witness could not be evaluated".into());
                    }
                }
            }
            Status::NotRealizable => {
                if let Err(e) = check_certificate(&out.certificate) {
                    v.status = Status::Undecided;
                    v.reason = Some(format!("certificate rejected: {e}"));
                }
                v.certificate = out.certificate;
            }
            Status::Undecided => {}
        }
        branches.push(v);
    }
    let status = if branches.iter().any(|b| b.status == Status::Realizable) {
        Status::Realizable
    } else if branches.iter().all(|b| b.status == Status::NotRealizable) {
        Status::NotRealizable
    } else {
        Status::Undecided
    };
    let reason = (status == Status::Undecided).then(|| {
        branches
            .iter()
            .filter_map(|b| b.reason.as_ref().map(|r| format!("{}: {r}", b.label)))
            .collect::<Vec<_>>()
            .join("; ")
    });
    Ok(Verdict {
        status,
        sequence: seq.to_text(c),
        variables: seq.free_count(),
        branches,
        witness,
        reason,
    })
}

/// Plans a sequence with the fewest free steps, then realizes it.
pub fn realize_planned(c: &Configuration, budget: u64, opts: RealizeOptions) -> Result<Verdict, RealizeError> {
    let plan = plan_min_free(c, budget)?;
    realize(c, &plan.sequence, opts)
}

/// Plans the sequence with the fewest free steps from a given base, then
/// realizes it.
pub fn realize_from_base(
    c: &Configuration,
    base: ProjectiveBase,
    budget: u64,
    opts: RealizeOptions,
) -> Result<Verdict, RealizeError> {
    let plan = plan_from_base(c, base, budget);
    realize(c, &plan.sequence, opts)
}
