//! Inference-rule axioms for CI-structures: the semigraphoid rule (SG), the
//! matroid rule (MCI), and the gaussoid rules (Int), (Comp), (WT).
//!
//! Every axiom is a schema over tuples of pairwise distinct elements and
//! pairwise disjoint sets. [`for_each_instance`] enumerates the ground
//! instances of a schema on `[n]`; the checkers below evaluate them and
//! report each failing instance as a [`ViolationWitness`].

use std::fmt;
use std::ops::ControlFlow;

use crate::set::{ElementSet, GroundSet};
use crate::statement::{CIStatement, StatementIndex};
use crate::structure::CIStructure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `(ij|K), (iℓ|jK) ∈ G ⇒ (iℓ|K), (ij|ℓK) ∈ G`
    Sg,
    /// `(ij|K) ∉ G ⇒ (iℓ|jKL) ∈ G`
    Mci,
    /// `(ij|kL), (ik|jL) ∈ G ⇒ (ij|L), (ik|L) ∈ G`
    Int,
    /// `(ij|L), (ik|L) ∈ G ⇒ (ij|kL), (ik|jL) ∈ G`
    Comp,
    /// `(ij|L), (ij|kL) ∈ G ⇒ (ik|L) ∈ G or (jk|L) ∈ G`
    Wt,
}

impl Axiom {
    pub const GAUSSOID: [Axiom; 4] = [Axiom::Sg, Axiom::Int, Axiom::Comp, Axiom::Wt];
    pub const MATROID: [Axiom; 2] = [Axiom::Sg, Axiom::Mci];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Sg => "SG",
            Axiom::Mci => "MCI",
            Axiom::Int => "Int",
            Axiom::Comp => "Comp",
            Axiom::Wt => "WT",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A membership assertion `s ∈ G` (or `s ∉ G` when `member` is false).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub statement: CIStatement,
    pub member: bool,
}

impl Literal {
    fn inn(statement: CIStatement) -> Self {
        Literal {
            statement,
            member: true,
        }
    }

    fn out(statement: CIStatement) -> Self {
        Literal {
            statement,
            member: false,
        }
    }

    #[inline]
    pub fn holds(&self, g: &CIStructure) -> bool {
        g.contains(&self.statement) == self.member
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.member { "∈" } else { "∉" };
        write!(f, "{} {rel} G", self.statement)
    }
}

/// One ground instance of an axiom schema: premises imply a conjunction of
/// conclusions (or, for (WT), a disjunction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub axiom: Axiom,
    /// `(i, j, ℓ)`; the gaussoid rules name the third element `k`.
    pub elements: [usize; 3],
    /// The conditioning sets `(K, L)`; for the gaussoid rules `K` is empty.
    pub sets: (ElementSet, ElementSet),
    pub premises: Vec<Literal>,
    pub conclusions: Vec<Literal>,
    pub disjunctive: bool,
}

impl Instance {
    fn conclusion_holds(&self, g: &CIStructure) -> bool {
        if self.disjunctive {
            self.conclusions.iter().any(|c| c.holds(g))
        } else {
            self.conclusions.iter().all(|c| c.holds(g))
        }
    }

    pub fn is_violated_by(&self, g: &CIStructure) -> bool {
        self.premises.iter().all(|p| p.holds(g)) && !self.conclusion_holds(g)
    }
}

/// A failing axiom instance together with the literals that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationWitness {
    pub axiom: Axiom,
    pub elements: [usize; 3],
    pub sets: (ElementSet, ElementSet),
    /// Premises of the rule; all of them hold in the structure.
    pub premises: Vec<Literal>,
    /// Conclusion literals that do not hold.
    pub failed: Vec<Literal>,
}

impl ViolationWitness {
    fn from_instance(inst: Instance, g: &CIStructure) -> Self {
        let failed = inst
            .conclusions
            .iter()
            .filter(|c| !c.holds(g))
            .copied()
            .collect();
        ViolationWitness {
            axiom: inst.axiom,
            elements: inst.elements,
            sets: inst.sets,
            premises: inst.premises,
            failed,
        }
    }

    /// Re-evaluates the witness against `g`: true iff every premise holds and
    /// every recorded failing conclusion still fails.
    pub fn replay(&self, g: &CIStructure) -> bool {
        !self.failed.is_empty()
            && self.premises.iter().all(|p| p.holds(g))
            && self.failed.iter().all(|c| !c.holds(g))
    }

    fn sort_key(
        &self,
        index: &StatementIndex,
    ) -> (usize, Axiom, [usize; 3], (ElementSet, ElementSet)) {
        let first = self
            .failed
            .iter()
            .map(|c| index.index_of(&c.statement))
            .min()
            .unwrap_or(usize::MAX);
        (first, self.axiom, self.elements, self.sets)
    }

    /// The machine-readable form `AXIOM i j l | K ; L` (1-based).
    pub fn line(&self) -> String {
        let [i, j, l] = self.elements;
        let mut out = format!("{} {} {} {} |", self.axiom, i + 1, j + 1, l + 1);
        for e in self.sets.0.iter() {
            out.push_str(&format!(" {}", e + 1));
        }
        out.push_str(" ;");
        for e in self.sets.1.iter() {
            out.push_str(&format!(" {}", e + 1));
        }
        out
    }
}

impl fmt::Display for ViolationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.axiom)?;
        for (k, p) in self.premises.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(" but ")?;
        for (k, c) in self.failed.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{} ∉ G", c.statement)?;
        }
        Ok(())
    }
}

#[inline]
fn stmt(i: usize, j: usize, k: ElementSet) -> CIStatement {
    CIStatement::new_unchecked(i, j, k)
}

/// Calls `visit` on every ground instance of `axiom` over `ground`, stopping
/// early if `visit` breaks.
pub fn for_each_instance<B>(
    ground: GroundSet,
    axiom: Axiom,
    mut visit: impl FnMut(Instance) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let n = ground.size();
    let all = ground.all();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                if i == j || j == l || i == l {
                    continue;
                }
                let rest = all.without(i).without(j).without(l);
                let sj = ElementSet::singleton(j);
                let sl = ElementSet::singleton(l);
                match axiom {
                    Axiom::Sg => {
                        for k in rest.subsets() {
                            visit(Instance {
                                axiom,
                                elements: [i, j, l],
                                sets: (k, ElementSet::EMPTY),
                                premises: vec![
                                    Literal::inn(stmt(i, j, k)),
                                    Literal::inn(stmt(i, l, k.union(sj))),
                                ],
                                conclusions: vec![
                                    Literal::inn(stmt(i, l, k)),
                                    Literal::inn(stmt(i, j, k.union(sl))),
                                ],
                                disjunctive: false,
                            })?;
                        }
                    }
                    Axiom::Mci => {
                        for k in rest.subsets() {
                            for extra in rest.difference(k).subsets() {
                                visit(Instance {
                                    axiom,
                                    elements: [i, j, l],
                                    sets: (k, extra),
                                    premises: vec![Literal::out(stmt(i, j, k))],
                                    conclusions: vec![Literal::inn(stmt(
                                        i,
                                        l,
                                        k.union(extra).union(sj),
                                    ))],
                                    disjunctive: false,
                                })?;
                            }
                        }
                    }
                    Axiom::Int | Axiom::Comp | Axiom::Wt => {
                        // the third element is called k in these rules
                        let k = l;
                        let sk = sl;
                        for cond in rest.subsets() {
                            let (premises, conclusions, disjunctive) = match axiom {
                                Axiom::Int => (
                                    vec![
                                        Literal::inn(stmt(i, j, cond.union(sk))),
                                        Literal::inn(stmt(i, k, cond.union(sj))),
                                    ],
                                    vec![
                                        Literal::inn(stmt(i, j, cond)),
                                        Literal::inn(stmt(i, k, cond)),
                                    ],
                                    false,
                                ),
                                Axiom::Comp => (
                                    vec![
                                        Literal::inn(stmt(i, j, cond)),
                                        Literal::inn(stmt(i, k, cond)),
                                    ],
                                    vec![
                                        Literal::inn(stmt(i, j, cond.union(sk))),
                                        Literal::inn(stmt(i, k, cond.union(sj))),
                                    ],
                                    false,
                                ),
                                _ => (
                                    vec![
                                        Literal::inn(stmt(i, j, cond)),
                                        Literal::inn(stmt(i, j, cond.union(sk))),
                                    ],
                                    vec![
                                        Literal::inn(stmt(i, k, cond)),
                                        Literal::inn(stmt(j, k, cond)),
                                    ],
                                    true,
                                ),
                            };
                            visit(Instance {
                                axiom,
                                elements: [i, j, k],
                                sets: (ElementSet::EMPTY, cond),
                                premises,
                                conclusions,
                                disjunctive,
                            })?;
                        }
                    }
                }
            }
        }
    }
    ControlFlow::Continue(())
}

/// All violations of the given axioms, sorted by the statement index of the
/// first failing conclusion.
pub fn check(g: &CIStructure, axioms: &[Axiom]) -> Vec<ViolationWitness> {
    let mut out = Vec::new();
    for &axiom in axioms {
        let _ = for_each_instance::<()>(g.ground(), axiom, |inst| {
            if inst.is_violated_by(g) {
                out.push(ViolationWitness::from_instance(inst, g));
            }
            ControlFlow::Continue(())
        });
    }
    let index = g.index();
    out.sort_by_cached_key(|w| w.sort_key(&index));
    out
}

/// True iff no instance of any of `axioms` fails. Stops at the first failure.
pub fn satisfies(g: &CIStructure, axioms: &[Axiom]) -> bool {
    axioms.iter().all(|&axiom| {
        for_each_instance(g.ground(), axiom, |inst| {
            if inst.is_violated_by(g) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .is_continue()
    })
}

pub fn check_semigraphoid(g: &CIStructure) -> Vec<ViolationWitness> {
    check(g, &[Axiom::Sg])
}

pub fn check_mci(g: &CIStructure) -> Vec<ViolationWitness> {
    check(g, &[Axiom::Mci])
}

/// (SG), (Int), (Comp) and (WT).
pub fn check_gaussoid(g: &CIStructure) -> Vec<ViolationWitness> {
    check(g, &Axiom::GAUSSOID)
}

/// Whether `g` is the CI-structure of a loopless matroid, i.e. satisfies
/// (SG) and (MCI).
pub fn is_matroid_ci(g: &CIStructure) -> bool {
    satisfies(g, &Axiom::MATROID)
}

pub fn is_gaussoid(g: &CIStructure) -> bool {
    satisfies(g, &Axiom::GAUSSOID)
}

/// Axiom instances compiled to statement indices, for evaluating the same
/// axioms against many structures on one ground set.
#[derive(Clone, Debug)]
pub struct AxiomTable {
    ground: GroundSet,
    rules: Vec<CompiledRule>,
}

#[derive(Clone, Debug)]
struct CompiledRule {
    premises: Vec<(usize, bool)>,
    conclusions: Vec<(usize, bool)>,
    disjunctive: bool,
    masks: Option<RuleMasks>,
}

/// Bit-pattern form of a rule, available when `|A_n| <= 64`.
#[derive(Clone, Copy, Debug)]
struct RuleMasks {
    prem_in: u64,
    prem_out: u64,
    conc_in: u64,
    conc_out: u64,
}

impl AxiomTable {
    pub fn new(ground: GroundSet, axioms: &[Axiom]) -> Self {
        let index = StatementIndex::new(ground);
        let small = index.len() <= 64;
        let mut rules = Vec::new();
        for &axiom in axioms {
            let _ = for_each_instance::<()>(ground, axiom, |inst| {
                let lit = |l: &Literal| (index.index_of(&l.statement), l.member);
                let premises: Vec<_> = inst.premises.iter().map(lit).collect();
                let conclusions: Vec<_> = inst.conclusions.iter().map(lit).collect();
                let masks = small.then(|| {
                    let fold = |lits: &[(usize, bool)], want: bool| {
                        lits.iter()
                            .filter(|l| l.1 == want)
                            .fold(0u64, |m, l| m | 1 << l.0)
                    };
                    RuleMasks {
                        prem_in: fold(&premises, true),
                        prem_out: fold(&premises, false),
                        conc_in: fold(&conclusions, true),
                        conc_out: fold(&conclusions, false),
                    }
                });
                rules.push(CompiledRule {
                    premises,
                    conclusions,
                    disjunctive: inst.disjunctive,
                    masks,
                });
                ControlFlow::Continue(())
            });
        }
        AxiomTable { ground, rules }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Early-exit evaluation on a structure over the same ground set.
    pub fn satisfied_by(&self, g: &CIStructure) -> bool {
        debug_assert_eq!(g.ground(), self.ground);
        let holds = |&(x, want): &(usize, bool)| g.contains_index(x) == want;
        self.rules.iter().all(|r| {
            !r.premises.iter().all(holds)
                || if r.disjunctive {
                    r.conclusions.iter().any(holds)
                } else {
                    r.conclusions.iter().all(holds)
                }
        })
    }

    /// Early-exit evaluation on a structure given as a bit pattern over
    /// statement indices. Requires `|A_n| <= 64`.
    pub fn satisfied_by_mask(&self, m: u64) -> bool {
        self.rules.iter().all(|r| {
            let k = r.masks.expect("statement count exceeds 64");
            let premise = m & k.prem_in == k.prem_in && m & k.prem_out == 0;
            if !premise {
                return true;
            }
            if r.disjunctive {
                // disjunctive rules only have positive conclusions
                m & k.conc_in != 0
            } else {
                m & k.conc_in == k.conc_in && m & k.conc_out == 0
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn st(i: usize, j: usize, k: &[usize]) -> CIStatement {
        CIStatement::new(i - 1, j - 1, k.iter().map(|e| e - 1).collect()).unwrap()
    }

    fn ci(n: usize, stmts: &[CIStatement]) -> CIStructure {
        CIStructure::from_statements(ground(n), stmts.iter().copied()).unwrap()
    }

    fn u23() -> CIStructure {
        ci(3, &[st(1, 2, &[]), st(1, 3, &[]), st(2, 3, &[])])
    }

    #[test]
    fn full_and_empty_are_semigraphoids() {
        for n in 2..=5 {
            assert!(check_semigraphoid(&CIStructure::full(ground(n))).is_empty());
            assert!(check_semigraphoid(&CIStructure::empty(ground(n))).is_empty());
        }
    }

    #[test]
    fn semigraphoid_violation_example() {
        let g = ci(3, &[st(1, 2, &[]), st(1, 3, &[2])]);
        let w = check_semigraphoid(&g);
        let hit = w
            .iter()
            .find(|w| w.elements == [0, 1, 2] && w.sets.0.is_empty())
            .expect("witness at (1,2,3,∅)");
        assert!(hit.failed.iter().any(|c| c.statement == st(1, 3, &[])));
        assert!(w.iter().all(|w| w.replay(&g)));
    }

    #[test]
    fn mci_examples() {
        for n in 2..=5 {
            assert!(check_mci(&CIStructure::full(ground(n))).is_empty());
        }
        assert!(check_mci(&u23()).is_empty());
        assert!(is_matroid_ci(&u23()));
        assert!(is_matroid_ci(&CIStructure::empty(ground(2))));
    }

    #[test]
    fn gaussoid_examples() {
        assert!(check_gaussoid(&CIStructure::full(ground(4))).is_empty());
        let w = check_gaussoid(&u23());
        assert!(!w.is_empty());
        // (12|),(13|) ∈ G but (12|3) ∉ G
        assert!(w.iter().any(|w| w.axiom == Axiom::Comp));
        assert!(w.iter().all(|w| w.replay(&u23())));
        // U_{1,2} on {1,2} plus a coloop 3
        let g = ci(
            3,
            &[st(1, 3, &[]), st(1, 3, &[2]), st(2, 3, &[]), st(2, 3, &[1])],
        );
        assert!(check_gaussoid(&g).is_empty());
    }

    #[test]
    fn witness_line_format() {
        let g = ci(4, &[]);
        let w = check_mci(&g);
        assert!(w.iter().any(|w| w.line() == "MCI 1 2 3 | ; 4"));
    }

    #[test]
    fn witnesses_sorted_by_failing_conclusion() {
        let g = ci(4, &[st(1, 2, &[]), st(1, 3, &[2]), st(2, 4, &[1, 3])]);
        let w = check(&g, &[Axiom::Sg, Axiom::Mci]);
        let index = g.index();
        let keys: Vec<_> = w.iter().map(|w| w.sort_key(&index)).collect();
        assert!(keys.windows(2).all(|p| p[0] <= p[1]));
    }

    #[test]
    fn instance_counts() {
        // SG: ordered triples times subsets of the rest
        let count = |n: usize, a: Axiom| {
            let mut c = 0;
            let _ = for_each_instance::<()>(ground(n), a, |_| {
                c += 1;
                ControlFlow::Continue(())
            });
            c
        };
        assert_eq!(count(4, Axiom::Sg), 24 * 2);
        assert_eq!(count(4, Axiom::Mci), 24 * 3);
        assert_eq!(count(5, Axiom::Mci), 60 * 9);
        assert_eq!(count(2, Axiom::Sg), 0);
    }
}
