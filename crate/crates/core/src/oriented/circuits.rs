//! The signed-circuit axioms (OC0)–(OC3) and strong elimination (OC3').

use std::fmt;

use crate::error::{Error, Result};
use crate::matroid::Matroid;

use super::{SignedCircuitSet, SignedSet};

/// Which pairs `X, Y` the elimination axioms are checked on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum EliminationMode {
    /// All pairs.
    #[default]
    Full,
    /// Only pairs whose supports form a modular pair in the underlying
    /// matroid, `r(X) + r(Y) = r(X ∪ Y) + r(X ∩ Y)`.
    ModularPairs,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CircuitAxiomFailure {
    /// (OC0): the empty signed set is a circuit.
    Empty,
    /// (OC1): `-x` is missing.
    MissingNegation { x: SignedSet },
    /// (OC2): `supp(x) ⊆ supp(y)` with `y ∉ {x, -x}`.
    Comparable { x: SignedSet, y: SignedSet },
    /// (OC3): no `Z` eliminates `e` from `x` and `y`.
    Elimination {
        x: SignedSet,
        y: SignedSet,
        e: usize,
    },
    /// (OC3'): no `Z` eliminates `e` while keeping `f`.
    StrongElimination {
        x: SignedSet,
        y: SignedSet,
        e: usize,
        f: usize,
    },
    /// (OC3) and (OC3') disagree although (OC0)–(OC2) hold.
    EliminationDisagreement { weak: bool, strong: bool },
    /// The supports are not the circuits of a matroid, so modular pairs are
    /// undefined.
    UnderlyingNotMatroid,
}

impl CircuitAxiomFailure {
    pub fn axiom(&self) -> &'static str {
        match self {
            CircuitAxiomFailure::Empty => "OC0",
            CircuitAxiomFailure::MissingNegation { .. } => "OC1",
            CircuitAxiomFailure::Comparable { .. } => "OC2",
            CircuitAxiomFailure::Elimination { .. } | CircuitAxiomFailure::UnderlyingNotMatroid => {
                "OC3"
            }
            CircuitAxiomFailure::StrongElimination { .. } => "OC3'",
            CircuitAxiomFailure::EliminationDisagreement { .. } => "OC3/OC3'",
        }
    }
}

impl fmt::Display for CircuitAxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.axiom())?;
        match self {
            CircuitAxiomFailure::Empty => f.write_str("empty signed set"),
            CircuitAxiomFailure::MissingNegation { x } => write!(f, "{x} without its negation"),
            CircuitAxiomFailure::Comparable { x, y } => {
                write!(f, "support of {x} inside support of {y}")
            }
            CircuitAxiomFailure::Elimination { x, y, e } => {
                write!(f, "cannot eliminate {} from {x} and {y}", e + 1)
            }
            CircuitAxiomFailure::StrongElimination { x, y, e, f: g } => {
                write!(
                    f,
                    "cannot eliminate {} from {x} and {y} keeping {}",
                    e + 1,
                    g + 1
                )
            }
            CircuitAxiomFailure::EliminationDisagreement { weak, strong } => {
                write!(
                    f,
                    "elimination holds: {weak}, strong elimination holds: {strong}"
                )
            }
            CircuitAxiomFailure::UnderlyingNotMatroid => {
                f.write_str("supports are not the circuits of a matroid")
            }
        }
    }
}

/// Checks (OC0)–(OC3) on all pairs. Empty iff `c` is the set of signed
/// circuits of an oriented matroid.
pub fn check_circuit_axioms(c: &SignedCircuitSet) -> Vec<CircuitAxiomFailure> {
    check_circuit_axioms_with(c, EliminationMode::Full)
}

/// Checks (OC0)–(OC3), then (OC3') as a second pass. Elimination failures
/// are only reported once (OC0)–(OC2) hold.
pub fn check_circuit_axioms_with(
    c: &SignedCircuitSet,
    mode: EliminationMode,
) -> Vec<CircuitAxiomFailure> {
    let mut out = Vec::new();
    let circuits: Vec<SignedSet> = c.iter().copied().collect();
    if circuits.iter().any(|x| x.is_empty()) {
        out.push(CircuitAxiomFailure::Empty);
    }
    for &x in &circuits {
        if !c.contains(&-x) {
            out.push(CircuitAxiomFailure::MissingNegation { x });
        }
    }
    for &x in &circuits {
        for &y in &circuits {
            if y != x && y != -x && x.support().is_subset(y.support()) {
                out.push(CircuitAxiomFailure::Comparable { x, y });
            }
        }
    }
    if !out.is_empty() {
        return out;
    }

    let pairs: Vec<(SignedSet, SignedSet)> = match mode {
        EliminationMode::Full => circuits
            .iter()
            .flat_map(|&x| circuits.iter().map(move |&y| (x, y)))
            .collect(),
        EliminationMode::ModularPairs => {
            let Ok(m) = Matroid::from_circuits(c.ground(), circuits.iter().map(|x| x.support()))
            else {
                out.push(CircuitAxiomFailure::UnderlyingNotMatroid);
                return out;
            };
            circuits
                .iter()
                .flat_map(|&x| circuits.iter().map(move |&y| (x, y)))
                .filter(|(x, y)| {
                    let (a, b) = (x.support(), y.support());
                    m.rank(a) + m.rank(b) == m.rank(a.union(b)) + m.rank(a.intersection(b))
                })
                .collect()
        }
    };

    let weak_before = out.len();
    for &(x, y) in &pairs {
        if x == -y {
            continue;
        }
        for e in x.positive().intersection(y.negative()) {
            if !circuits.iter().any(|z| eliminates(z, &x, &y, e)) {
                out.push(CircuitAxiomFailure::Elimination { x, y, e });
            }
        }
    }
    let weak = out.len() == weak_before;

    let mut strong = true;
    let mut strong_failures = Vec::new();
    for &(x, y) in &pairs {
        for e in x.positive().intersection(y.negative()) {
            let keep = x
                .positive()
                .difference(y.negative())
                .union(x.negative().difference(y.positive()));
            for f in keep {
                if !circuits
                    .iter()
                    .any(|z| eliminates(z, &x, &y, e) && z.support().contains(f))
                {
                    strong = false;
                    strong_failures.push(CircuitAxiomFailure::StrongElimination { x, y, e, f });
                }
            }
        }
    }
    if weak != strong {
        out.extend(strong_failures);
        out.push(CircuitAxiomFailure::EliminationDisagreement { weak, strong });
    }
    out
}

/// `Z+ ⊆ (X+ ∪ Y+) \ e` and `Z- ⊆ (X- ∪ Y-) \ e`.
fn eliminates(z: &SignedSet, x: &SignedSet, y: &SignedSet, e: usize) -> bool {
    z.positive()
        .is_subset(x.positive().union(y.positive()).without(e))
        && z.negative()
            .is_subset(x.negative().union(y.negative()).without(e))
}

/// The matroid whose circuits are the supports of `c`.
pub fn underlying_matroid(c: &SignedCircuitSet) -> Result<Matroid> {
    if let Some(f) = check_circuit_axioms(c).into_iter().next() {
        return Err(Error::Axiom {
            axiom: f.axiom(),
            witness: f.to_string(),
        });
    }
    let supports: std::collections::BTreeSet<_> = c.iter().map(|x| x.support()).collect();
    Matroid::from_circuits(c.ground(), supports)
}
