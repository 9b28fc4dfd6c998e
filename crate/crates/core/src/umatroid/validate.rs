use std::fmt;

use crate::lattice::{DistLattice, Subset};

/// The axioms of a U-matroid rank function, in reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Calibration,
    Monotonicity,
    Submodularity,
    Integrality,
    UnitIncrease,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::Calibration,
        Axiom::Monotonicity,
        Axiom::Submodularity,
        Axiom::Integrality,
        Axiom::UnitIncrease,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Calibration => "calibration",
            Axiom::Monotonicity => "monotonicity",
            Axiom::Submodularity => "submodularity",
            Axiom::Integrality => "integrality",
            Axiom::UnitIncrease => "unit-increase",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A failed axiom with its witness.
///
/// * calibration: `a = b = ∅`;
/// * monotonicity, unit-increase: a covering pair `a ⋖ b`;
/// * submodularity: an incomparable pair with `ρ(a)+ρ(b) < ρ(a∪b)+ρ(a∩b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub a: Subset,
    pub b: Subset,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} / {}", self.axiom, self.a, self.b)
    }
}

/// At most one violation per axiom, each the first in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    pub fn passes(&self, axiom: Axiom) -> bool {
        self.violation(axiom).is_none()
    }

    pub fn is_umatroid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Calibration, monotonicity and submodularity.
    pub fn is_submodular_system(&self) -> bool {
        self.passes(Axiom::Calibration)
            && self.passes(Axiom::Monotonicity)
            && self.passes(Axiom::Submodularity)
    }
}

/// Checks `values` (aligned with `d.sets()`) against every axiom.
///
/// Monotonicity and unit increase only need covering pairs, since every
/// interval of an accessible lattice is joined by a saturated chain.
/// Submodularity is decided on diamonds `A, A∪a, A∪b, A∪ab`; a distributive
/// lattice tiles every interval `[A∩B, A∪B]` by such diamonds, so a global
/// failure forces a local one. Only then is the (quadratic) scan for the
/// first failing pair run.
///
/// Integrality holds by construction: values are stored as integers.
///
/// # Panics
/// If `values.len() != d.len()`.
pub fn validate(d: &DistLattice, values: &[i64]) -> ValidationReport {
    assert_eq!(values.len(), d.len(), "one value per lattice member");
    let rho = |s: Subset| values[d.index_of(s).expect("member")];
    let mut violations = Vec::new();

    if values[0] != 0 {
        violations.push(Violation {
            axiom: Axiom::Calibration,
            a: Subset::EMPTY,
            b: Subset::EMPTY,
        });
    }

    let mut mono = None;
    let mut unit = None;
    let mut diamond_fails = false;
    for (k, a) in d.iter().enumerate() {
        let ra = values[k];
        let covers: Vec<(Subset, i64)> = d.upper_covers(a).map(|(_, b)| (b, rho(b))).collect();
        for &(b, rb) in &covers {
            if mono.is_none() && rb < ra {
                mono = Some((a, b));
            }
            if unit.is_none() && rb > ra + 1 {
                unit = Some((a, b));
            }
        }
        if !diamond_fails {
            'pairs: for (i, &(b1, r1)) in covers.iter().enumerate() {
                for &(b2, r2) in &covers[i + 1..] {
                    if r1 + r2 < ra + rho(b1.union(b2)) {
                        diamond_fails = true;
                        break 'pairs;
                    }
                }
            }
        }
    }
    if let Some((a, b)) = mono {
        violations.push(Violation {
            axiom: Axiom::Monotonicity,
            a,
            b,
        });
    }
    if diamond_fails {
        let (a, b) =
            first_submodular_failure(d, values).expect("a failing diamond is a failing pair");
        violations.push(Violation {
            axiom: Axiom::Submodularity,
            a,
            b,
        });
    }
    if let Some((a, b)) = unit {
        violations.push(Violation {
            axiom: Axiom::UnitIncrease,
            a,
            b,
        });
    }
    ValidationReport { violations }
}

fn first_submodular_failure(d: &DistLattice, values: &[i64]) -> Option<(Subset, Subset)> {
    let sets = d.sets();
    let rho = |s: Subset| values[d.index_of(s).expect("member")];
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate().skip(i + 1) {
            if a.is_subset(b) || b.is_subset(a) {
                continue;
            }
            if values[i] + values[j] < rho(a.union(b)) + rho(a.intersection(b)) {
                return Some((a, b));
            }
        }
    }
    None
}
