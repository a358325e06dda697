//! The oriented CI-structure of an oriented matroid, the (OCI1)–(OCI5)
//! axioms, and recovery of signed circuits from it.

use std::fmt;

use crate::axioms::is_matroid_ci;
use crate::error::{Error, Result};
use crate::matroid::{ci_of_matroid, rank_from_ci, Matroid};
use crate::set::ElementSet;
use crate::statement::CIStatement;

use super::circuits::{check_circuit_axioms, underlying_matroid};
use super::{OrientedCIStructure, Sign, SignedCircuitSet, SignedSet};

/// `σ(ij|K) = 0` if `(ij|K)` is in the CI-structure of the underlying
/// matroid, and `X(i)X(j)` for a signed circuit `X` with
/// `ij ⊆ supp(X) ⊆ ijK` otherwise.
///
/// Every such circuit is consulted; if two give different signs, or none
/// exists for a dependent statement, [`Error::Inconsistent`] is returned.
pub fn sigma_of_oriented_matroid(c: &SignedCircuitSet) -> Result<OrientedCIStructure> {
    let m = underlying_matroid(c)?;
    let zero = ci_of_matroid(&m)?;
    let circuits: Vec<SignedSet> = c.iter().copied().collect();
    OrientedCIStructure::from_fn(c.ground(), |s| {
        if zero.contains(s) {
            return Ok(Sign::Zero);
        }
        let (i, j) = (s.i(), s.j());
        let (pair, support) = (s.pair(), s.support());
        let mut found: Option<Sign> = None;
        for x in circuits
            .iter()
            .filter(|x| pair.is_subset(x.support()) && x.support().is_subset(support))
        {
            let v = x.sign(i) * x.sign(j);
            match found {
                None => found = Some(v),
                Some(w) if w != v => {
                    return Err(Error::Inconsistent(format!(
                        "circuits disagree on the sign of {s}"
                    )))
                }
                _ => {}
            }
        }
        found.ok_or_else(|| {
            Error::Inconsistent(format!("no circuit witnesses the dependent statement {s}"))
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OciAxiom {
    Oci1,
    Oci2,
    Oci3,
    Oci4,
    Oci5,
}

impl OciAxiom {
    pub const ALL: [OciAxiom; 5] = [
        OciAxiom::Oci1,
        OciAxiom::Oci2,
        OciAxiom::Oci3,
        OciAxiom::Oci4,
        OciAxiom::Oci5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OciAxiom::Oci1 => "OCI1",
            OciAxiom::Oci2 => "OCI2",
            OciAxiom::Oci3 => "OCI3",
            OciAxiom::Oci4 => "OCI4",
            OciAxiom::Oci5 => "OCI5",
        }
    }
}

/// A violated instance, with the signs of the statements involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OciFailure {
    pub axiom: OciAxiom,
    pub values: Vec<(CIStatement, Sign)>,
}

impl OciFailure {
    /// `OCI3 (1 2 |)=+1 (1 2 | 3)=-1`
    pub fn line(&self) -> String {
        let mut out = self.axiom.name().to_string();
        for (s, v) in &self.values {
            out.push_str(&format!(" {s}={v}"));
        }
        out
    }
}

impl fmt::Display for OciFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

/// Checks (OCI1)–(OCI5) over all instantiations:
///
/// * (OCI1) `σ(ij|K) ≠ 0 ⇒ σ(iℓ|jKL) = 0`;
/// * (OCI2) `σ(ij|K) = σ(iℓ|jK) = 0 ⇒ σ(ij|ℓK) = σ(iℓ|K) = 0`;
/// * (OCI3) `σ(ij|L) ∈ {0, σ(ij|K)}` whenever `σ(ij|K) ≠ 0` and `L`, `K`
///   are comparable;
/// * (OCI4) `σ(iℓ|K) σ(ij|K) σ(jℓ|K) ≤ 0`;
/// * (OCI5) `σ(iℓ|jK) σ(ij|ℓK) σ(jℓ|iK) ≥ 0`.
pub fn check_oci(sigma: &OrientedCIStructure) -> Vec<OciFailure> {
    let mut out = Vec::new();
    let n = sigma.n();
    let all = sigma.ground().all();
    let st = |i: usize, j: usize, k: ElementSet| {
        let s = CIStatement::new_unchecked(i, j, k);
        (s, sigma.sign(&s))
    };

    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            for l in (0..n).filter(|&l| l != i && l != j) {
                let rest = all.without(i).without(j).without(l);
                for k in rest.subsets() {
                    let a = st(i, j, k);
                    if !a.1.is_zero() {
                        for extra in rest.difference(k).subsets() {
                            let b = st(i, l, k.union(extra).with(j));
                            if !b.1.is_zero() {
                                out.push(OciFailure {
                                    axiom: OciAxiom::Oci1,
                                    values: vec![a, b],
                                });
                            }
                        }
                    }
                    let b = st(i, l, k.with(j));
                    if a.1.is_zero() && b.1.is_zero() {
                        let c = st(i, j, k.with(l));
                        let d = st(i, l, k);
                        if !c.1.is_zero() || !d.1.is_zero() {
                            out.push(OciFailure {
                                axiom: OciAxiom::Oci2,
                                values: vec![a, b, c, d],
                            });
                        }
                    }
                }
            }
        }
    }

    for i in 0..n {
        for j in i + 1..n {
            let rest = all.without(i).without(j);
            for k in rest.subsets() {
                let a = st(i, j, k);
                if a.1.is_zero() {
                    continue;
                }
                // each comparable pair once, with L a proper subset of K
                for l in k.subsets().filter(|&l| l != k) {
                    let b = st(i, j, l);
                    if !b.1.is_zero() && b.1 != a.1 {
                        out.push(OciFailure {
                            axiom: OciAxiom::Oci3,
                            values: vec![b, a],
                        });
                    }
                }
            }
        }
    }

    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                let rest = all.without(i).without(j).without(l);
                for k in rest.subsets() {
                    let vals = vec![st(i, l, k), st(i, j, k), st(j, l, k)];
                    if vals.iter().fold(Sign::Positive, |p, v| p * v.1) == Sign::Positive {
                        out.push(OciFailure {
                            axiom: OciAxiom::Oci4,
                            values: vals,
                        });
                    }
                    let vals = vec![
                        st(i, l, k.with(j)),
                        st(i, j, k.with(l)),
                        st(j, l, k.with(i)),
                    ];
                    if vals.iter().fold(Sign::Positive, |p, v| p * v.1) == Sign::Negative {
                        out.push(OciFailure {
                            axiom: OciAxiom::Oci5,
                            values: vals,
                        });
                    }
                }
            }
        }
    }
    out.sort_by_key(|f| f.axiom);
    out
}

/// Recovers the signed circuits from an oriented CI-structure.
///
/// The underlying matroid comes from `σ^{-1}(0)`. For each of its circuits
/// `C` and each `c0 ∈ C`, the signed set
/// `({c0} ∪ {c : σ(c c0 | C \ c c0) = +1}, {c : σ(c c0 | C \ c c0) = -1})`
/// is formed; all choices of `c0` must agree up to sign. The result is
/// checked against (OC0)–(OC3) and mapped back to `σ`.
pub fn oriented_matroid_from_sigma(sigma: &OrientedCIStructure) -> Result<SignedCircuitSet> {
    if let Some(f) = check_oci(sigma).into_iter().next() {
        return Err(Error::Axiom {
            axiom: f.axiom.name(),
            witness: f.line(),
        });
    }
    let zero = sigma.zero_set();
    let m = Matroid::from_rank(rank_from_ci(&zero)?)?;
    debug_assert!(is_matroid_ci(&zero));

    let mut reps = Vec::with_capacity(m.circuits().len());
    for &circuit in m.circuits() {
        let mut chosen: Option<SignedSet> = None;
        for c0 in circuit {
            let x = signature(sigma, circuit, c0)?;
            match chosen {
                None => chosen = Some(x),
                Some(y) if y != x && y != -x => {
                    return Err(Error::Inconsistent(format!(
                        "circuit {circuit}: signatures {y} and {x} depend on the base element"
                    )))
                }
                _ => {}
            }
        }
        if let Some(x) = chosen {
            reps.push(x);
        }
    }
    let c = SignedCircuitSet::from_representatives(sigma.ground(), reps)?;
    if let Some(f) = check_circuit_axioms(&c).into_iter().next() {
        return Err(Error::Inconsistent(format!("recovered circuits fail {f}")));
    }
    let back = sigma_of_oriented_matroid(&c)?;
    if let Some((s, a, b)) = back.diff(sigma).into_iter().next() {
        return Err(Error::Inconsistent(format!(
            "recovered circuits give sign {a} at {s}, expected {b}"
        )));
    }
    Ok(c)
}

fn signature(sigma: &OrientedCIStructure, circuit: ElementSet, c0: usize) -> Result<SignedSet> {
    let mut pos = ElementSet::singleton(c0);
    let mut neg = ElementSet::EMPTY;
    for c in circuit.without(c0) {
        let k = circuit.without(c).without(c0);
        match sigma.sign_of(c.min(c0), c.max(c0), k) {
            Sign::Positive => pos = pos.with(c),
            Sign::Negative => neg = neg.with(c),
            Sign::Zero => {
                return Err(Error::Inconsistent(format!(
                    "circuit {circuit} has a zero statement at {}",
                    CIStatement::new_unchecked(c, c0, k)
                )))
            }
        }
    }
    SignedSet::new(pos, neg)
}
