//! Built-in search patterns.

use crate::incidence::{parse_configuration, Configuration};

const PAPPUS: &str = include_str!("../../fixtures/pappus.conf");
const NON_PAPPUS: &str = include_str!("../../fixtures/non_pappus.conf");
const DESARGUES: &str = include_str!("../../fixtures/desargues.conf");
const NON_DESARGUES: &str = include_str!("../../fixtures/non_desargues.conf");

/// Pappus (9_3), Desargues (10_3), and each with one incidence deleted
/// and pinned as a non-incidence.
#[derive(Debug, Clone)]
pub struct PatternLibrary {
    pub pappus: Configuration,
    pub non_pappus: Configuration,
    pub desargues: Configuration,
    pub non_desargues: Configuration,
}

impl PatternLibrary {
    pub fn new() -> Self {
        let parse = |t| parse_configuration(t).expect("built-in pattern parses");
        PatternLibrary {
            pappus: parse(PAPPUS),
            non_pappus: parse(NON_PAPPUS),
            desargues: parse(DESARGUES),
            non_desargues: parse(NON_DESARGUES),
        }
    }

    pub fn get(&self, name: &str) -> Option<&Configuration> {
        match name {
            "pappus" => Some(&self.pappus),
            "non_pappus" | "non-pappus" => Some(&self.non_pappus),
            "desargues" => Some(&self.desargues),
            "non_desargues" | "non-desargues" => Some(&self.non_desargues),
            _ => None,
        }
    }

    pub const NAMES: [&'static str; 4] = ["pappus", "non_pappus", "desargues", "non_desargues"];
}

impl Default for PatternLibrary {
    fn default() -> Self {
        Self::new()
    }
}
