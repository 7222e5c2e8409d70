//! Polynomial constraint systems produced by replaying a construction
//! sequence.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::polyalg::{Poly, VAR_NAMES};

/// Where a constraint came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// Required incidence of a point and a line.
    Incidence { point: String, line: String },
    /// Required non-incidence of a point and a line.
    NonIncidence { point: String, line: String },
    /// Common factor divided out of a constructed vector.
    Degenerate { element: String },
    /// Pivot coordinate of the pencil through `element`.
    Pivot { element: String },
    /// Denominator of an eliminated variable.
    Denominator { variable: String },
    /// Consequence of other equalities.
    Derived { description: String },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Incidence { point, line } | Provenance::NonIncidence { point, line } => {
                write!(f, "{point}-{line}")
            }
            Provenance::Degenerate { element } => write!(f, "common factor of {element}"),
            Provenance::Pivot { element } => write!(f, "pencil pivot at {element}"),
            Provenance::Denominator { variable } => write!(f, "denominator of {variable}"),
            Provenance::Derived { description } => f.write_str(description),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub poly: Poly,
    pub provenance: Provenance,
}

impl Constraint {
    pub fn new(poly: Poly, provenance: Provenance) -> Self {
        Constraint { poly, provenance }
    }

    pub fn label(&self) -> String {
        self.provenance.to_string()
    }
}

/// Equalities `= 0` and inequalities `!= 0` over the variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub variables: Vec<String>,
    pub equalities: Vec<Constraint>,
    pub inequalities: Vec<Constraint>,
}

/// Name of the `i`-th variable: `theta`, `vartheta`, then `x2`, `x3`, ...
pub fn variable_name(i: usize) -> String {
    VAR_NAMES.get(i).map_or_else(|| format!("x{i}"), |s| s.to_string())
}

impl ConstraintSystem {
    pub fn with_variables(n: usize) -> Self {
        ConstraintSystem {
            variables: (0..n).map(variable_name).collect(),
            ..Default::default()
        }
    }

    pub fn add_variable(&mut self) -> usize {
        let i = self.variables.len();
        self.variables.push(variable_name(i));
        i
    }

    pub fn names(&self) -> Vec<&str> {
        self.variables.iter().map(String::as_str).collect()
    }

    /// Variables occurring in some constraint.
    pub fn used_variables(&self) -> BTreeSet<usize> {
        self.equalities
            .iter()
            .chain(&self.inequalities)
            .flat_map(|c| c.poly.variables())
            .collect()
    }

    /// Equalities that are not identically zero.
    pub fn nontrivial_equalities(&self) -> usize {
        self.equalities.iter().filter(|c| !c.poly.is_zero()).count()
    }

    pub fn find(&self, label: &str) -> Option<&Constraint> {
        self.equalities
            .iter()
            .chain(&self.inequalities)
            .find(|c| c.label() == label)
    }
}
