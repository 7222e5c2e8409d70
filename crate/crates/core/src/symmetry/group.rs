//! Automorphism groups and their identification by element orders.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{Correspondence, Kind, SymmetryError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    elements: Vec<Correspondence>,
    profile: BTreeMap<usize, usize>,
}

impl AutGroup {
    /// `elements` must be closed under composition; they are sorted
    /// (preserving first, identity leading).
    pub fn new(mut elements: Vec<Correspondence>) -> Self {
        elements.sort();
        let mut profile = BTreeMap::new();
        for e in &elements {
            *profile.entry(e.order()).or_insert(0) += 1;
        }
        AutGroup { elements, profile }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Correspondence] {
        &self.elements
    }

    /// Element order to number of elements of that order.
    pub fn element_order_profile(&self) -> &BTreeMap<usize, usize> {
        &self.profile
    }

    pub fn preserving(&self) -> impl Iterator<Item = &Correspondence> {
        self.elements.iter().filter(|e| e.kind() == Kind::Preserving)
    }

    pub fn dualities(&self) -> impl Iterator<Item = &Correspondence> {
        self.elements.iter().filter(|e| e.kind() == Kind::Duality)
    }

    pub fn preserving_subgroup(&self) -> AutGroup {
        AutGroup::new(self.preserving().cloned().collect())
    }

    pub fn contains(&self, e: &Correspondence) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements
            .iter()
            .all(|a| self.elements.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Closure under composition and inverses.
    pub fn is_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|a| self.contains(&a.inverse()) && self.elements.iter().all(|b| self.contains(&a.compose(b))))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub preserving_order: usize,
    pub element_orders: BTreeMap<usize, usize>,
    pub name: Option<String>,
}

impl AutGroup {
    pub fn summary(&self) -> GroupSummary {
        GroupSummary {
            order: self.order(),
            preserving_order: self.preserving().count(),
            element_orders: self.profile.clone(),
            name: classify_group(self).ok(),
        }
    }
}

/// Names the isomorphism type of a group of order at most 16.
pub fn classify_group(g: &AutGroup) -> Result<String, SymmetryError> {
    if g.order() > 16 {
        return Err(SymmetryError::UnsupportedOrder(g.order()));
    }
    classify_profile(g.order(), g.element_order_profile(), Some(g.is_abelian()))
}

/// Identification from the order and the element-order multiset, with an
/// optional commutativity flag to split order-16 profiles shared by an
/// abelian and a non-abelian group. This separates every group of order
/// at most 15.
pub fn classify_profile(
    order: usize,
    profile: &BTreeMap<usize, usize>,
    abelian: Option<bool>,
) -> Result<String, SymmetryError> {
    if order > 16 {
        return Err(SymmetryError::UnsupportedOrder(order));
    }
    let total: usize = profile.values().sum();
    let ambiguous = || SymmetryError::AmbiguousProfile {
        order,
        profile: profile.clone(),
    };
    if total != order || profile.get(&1) != Some(&1) {
        return Err(ambiguous());
    }
    let key: Vec<(usize, usize)> = profile.iter().map(|(&a, &b)| (a, b)).collect();
    let name = match (order, key.as_slice()) {
        (1, _) => "1",
        (p, _) if [2, 3, 5, 7, 11, 13].contains(&p) => return Ok(format!("Z{p}")),
        (4, [_, (2, 1), (4, 2)]) => "Z4",
        (4, [_, (2, 3)]) => "Z2^2",
        (6, [_, (2, 1), (3, 2), (6, 2)]) => "Z6",
        (6, [_, (2, 3), (3, 2)]) => "S3",
        (8, [_, (2, 1), (4, 2), (8, 4)]) => "Z8",
        (8, [_, (2, 3), (4, 4)]) => "Z4xZ2",
        (8, [_, (2, 7)]) => "Z2^3",
        (8, [_, (2, 5), (4, 2)]) => "D8",
        (8, [_, (2, 1), (4, 6)]) => "Q8",
        (9, [_, (3, 2), (9, 6)]) => "Z9",
        (9, [_, (3, 8)]) => "Z3^2",
        (10, [_, (2, 1), (5, 4), (10, 4)]) => "Z10",
        (10, [_, (2, 5), (5, 4)]) => "D10",
        (12, [_, (2, 1), (3, 2), (4, 2), (6, 2), (12, 4)]) => "Z12",
        (12, [_, (2, 3), (3, 2), (6, 6)]) => "Z6xZ2",
        (12, [_, (2, 3), (3, 8)]) => "A4",
        (12, [_, (2, 7), (3, 2), (6, 2)]) => "D12",
        (12, [_, (2, 1), (3, 2), (4, 6), (6, 2)]) => "Dic12",
        (14, [_, (2, 1), (7, 6), (14, 6)]) => "Z14",
        (14, [_, (2, 7), (7, 6)]) => "D14",
        (15, [_, (3, 2), (5, 4), (15, 8)]) => "Z15",
        (16, [_, (2, 1), (4, 2), (8, 4), (16, 8)]) => "Z16",
        (16, [_, (2, 15)]) => "Z2^4",
        (16, [_, (2, 9), (4, 2), (8, 4)]) => "D16",
        (16, [_, (2, 1), (4, 10), (8, 4)]) => "Q16",
        (16, [_, (2, 5), (4, 6), (8, 4)]) => "SD16",
        (16, [_, (2, 11), (4, 4)]) => "Z2xD8",
        (16, [_, (2, 3), (4, 4), (8, 8)]) => match abelian {
            Some(true) => "Z8xZ2",
            Some(false) => "M16",
            None => return Err(ambiguous()),
        },
        (16, [_, (2, 3), (4, 12)]) => match abelian {
            Some(true) => "Z4^2",
            _ => return Err(ambiguous()),
        },
        (16, [_, (2, 7), (4, 8)]) => match abelian {
            Some(true) => "Z4xZ2^2",
            _ => return Err(ambiguous()),
        },
        _ => return Err(ambiguous()),
    };
    Ok(name.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prof(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn small_profiles() {
        assert_eq!(classify_profile(8, &prof(&[(1, 1), (2, 7)]), None).unwrap(), "Z2^3");
        assert_eq!(
            classify_profile(8, &prof(&[(1, 1), (2, 5), (4, 2)]), None).unwrap(),
            "D8"
        );
        assert_eq!(classify_profile(1, &prof(&[(1, 1)]), None).unwrap(), "1");
        assert_eq!(classify_profile(2, &prof(&[(1, 1), (2, 1)]), None).unwrap(), "Z2");
        assert!(classify_profile(24, &prof(&[(1, 1)]), None).is_err());
        assert!(classify_profile(8, &prof(&[(1, 1), (2, 6)]), None).is_err());
        assert!(classify_profile(16, &prof(&[(1, 1), (2, 3), (4, 12)]), Some(false)).is_err());
    }
}
