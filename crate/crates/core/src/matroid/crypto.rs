//! Translations between loopless matroids and CI-structures satisfying
//! (SG) and (MCI).

use crate::axioms::{check, Axiom};
use crate::error::{Error, Result};
use crate::set::{ElementSet, GroundSet, MAX_ELEMENTS};
use crate::statement::CIStatement;
use crate::structure::CIStructure;

use super::{Matroid, RankFunction, SetFamily};

/// `[[M]] = {(ij|K) : r(iK) + r(jK) = r(ijK) + r(K)}`.
///
/// Matroids with loops are rejected; pass them through
/// [`Matroid::normalize_loopless`] first.
pub fn ci_of_matroid(m: &Matroid) -> Result<CIStructure> {
    if let Some(element) = m.loops().min() {
        return Err(Error::Loop { element });
    }
    Ok(modular_statements(m.rank_function()))
}

pub(crate) fn modular_statements(r: &RankFunction) -> CIStructure {
    CIStructure::from_fn(r.ground(), |s| {
        let k = s.conditioning();
        r.rank(k.with(s.i())) + r.rank(k.with(s.j())) == r.rank(s.support()) + r.rank(k)
    })
}

/// Recovers the rank function of the loopless matroid defined by `g`.
///
/// `g` must satisfy (SG) and (MCI); otherwise the first violation is
/// returned as [`Error::Axiom`].
pub fn rank_from_ci(g: &CIStructure) -> Result<RankFunction> {
    if let Some(w) = check(g, &Axiom::MATROID).into_iter().next() {
        return Err(Error::Axiom {
            axiom: w.axiom.name(),
            witness: w.to_string(),
        });
    }
    rank_from_ci_unchecked(g)
}

/// The rank recursion without the axiom precondition.
///
/// `r(∅) = 0`, `r(x) = 1`, and for `|ijK| >= 2`
/// `r(ijK) = r(iK) + r(jK) - r(K) - [(ij|K) ∉ g]`. Every decomposition of
/// each set as `ijK` is evaluated; if two of them disagree, or the result is
/// not a matroid rank function, [`Error::Inconsistent`] is returned. On
/// structures satisfying (SG) and (MCI) neither can happen.
pub fn rank_from_ci_unchecked(g: &CIStructure) -> Result<RankFunction> {
    let ground = g.ground();
    let mut values = vec![0u32; ground.subset_count()];
    // S \ x < S as bit patterns, so increasing order visits subsets first
    for s in ground.subsets() {
        let v = match s.len() {
            0 => 0,
            1 => 1,
            _ => {
                let mut agreed: Option<i64> = None;
                for i in s {
                    for j in s {
                        if j <= i {
                            continue;
                        }
                        let k = s.without(i).without(j);
                        let at = |t: ElementSet| values[t.bits() as usize] as i64;
                        let dependent = !g.holds(i, j, k) as i64;
                        let v = at(k.with(i)) + at(k.with(j)) - at(k) - dependent;
                        match agreed {
                            None => agreed = Some(v),
                            Some(prev) if prev != v => {
                                return Err(Error::Inconsistent(format!(
                                    "rank of {s} is {prev} by one decomposition and {v} via {}",
                                    CIStatement::new_unchecked(i, j, k)
                                )));
                            }
                            _ => {}
                        }
                    }
                }
                let v = agreed.expect("at least one decomposition");
                if v < 0 {
                    return Err(Error::Inconsistent(format!("negative rank {v} for {s}")));
                }
                v as u32
            }
        };
        values[s.bits() as usize] = v;
    }
    let r = RankFunction::new(ground, values)?;
    if let Some(f) = r.validate().first() {
        return Err(Error::Inconsistent(format!(
            "recovered function is not a rank function: {f}"
        )));
    }
    Ok(r)
}

/// `{S : A_S ⊆ g}`: the sets all of whose CI-statements lie in `g`.
pub fn independent_sets_from_ci(g: &CIStructure) -> SetFamily {
    let ground = g.ground();
    let mut family = SetFamily::new(ground);
    for s in ground.subsets() {
        // A_S is the union of A_{S \ x} and the statements supported on all of S
        let ok = s.len() <= 1
            || (s.iter().all(|x| family.contains(s.without(x)))
                && s.iter().all(|i| {
                    s.iter()
                        .filter(|&j| j > i)
                        .all(|j| g.holds(i, j, s.without(i).without(j)))
                }));
        if ok {
            family.insert(s);
        }
    }
    family
}

/// The circuit characterization of `(ij|K) ∉ [[M]]`: some circuit `C` has
/// `ij ⊆ C ⊆ ijK`, and every circuit inside `ijK` contains both or neither
/// of `i, j`.
pub fn dependent_via_circuits(m: &Matroid, s: &CIStatement) -> bool {
    let support = s.support();
    let pair = s.pair();
    let inside: Vec<_> = m
        .circuits()
        .iter()
        .filter(|c| c.is_subset(support))
        .collect();
    inside.iter().any(|c| pair.is_subset(**c))
        && inside.iter().all(|c| c.intersection(pair).len() != 1)
}

/// Six characterizations of the conditional dependence `(ij|K) ∉ [[M]]`,
/// each evaluated independently. On a loopless matroid they agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DependenceProfile {
    /// `r(iK) + r(jK) > r(ijK) + r(K)`
    pub strict_inequality: bool,
    /// `r(iK) = r(jK) = r(ijK) = r(K) + 1`
    pub rank_equalities: bool,
    /// see [`dependent_via_circuits`]
    pub circuit_condition: bool,
    /// `ij` is a cocircuit of the restriction of `M` to `ijK`
    pub cocircuit: bool,
    /// for every basis `B` of `K`, `iB` and `jB` are bases of `ijK`
    pub all_bases: bool,
    /// for some basis `B` of `K`, `iB` and `jB` are bases of `ijK`
    pub some_basis: bool,
}

impl DependenceProfile {
    pub fn as_array(&self) -> [bool; 6] {
        [
            self.strict_inequality,
            self.rank_equalities,
            self.circuit_condition,
            self.cocircuit,
            self.all_bases,
            self.some_basis,
        ]
    }

    pub fn consistent(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&b| b == a[0])
    }
}

pub fn dependence_profile(m: &Matroid, s: &CIStatement) -> Result<DependenceProfile> {
    let (i, j, k) = (s.i(), s.j(), s.conditioning());
    let support = s.support();
    m.ground().check(support)?;
    let r = |t: ElementSet| m.rank(t);
    let (rik, rjk, rijk, rk) = (r(k.with(i)), r(k.with(j)), r(support), r(k));

    let restricted = m.delete(support.complement(m.n()))?;
    let local_pair = s.pair().compress(support);
    let cocircuit = restricted.cocircuits().contains(&local_pair);

    let bases_of_k: Vec<ElementSet> = k
        .subsets()
        .filter(|&b| m.is_independent(b) && b.len() as u32 == rk)
        .collect();
    let extends = |b: ElementSet| {
        [b.with(i), b.with(j)]
            .iter()
            .all(|&t| m.is_independent(t) && t.len() as u32 == rijk)
    };

    Ok(DependenceProfile {
        strict_inequality: rik + rjk > rijk + rk,
        rank_equalities: rik == rk + 1 && rjk == rk + 1 && rijk == rk + 1,
        circuit_condition: dependent_via_circuits(m, s),
        cocircuit,
        all_bases: bases_of_k.iter().all(|&b| extends(b)),
        some_basis: bases_of_k.iter().any(|&b| extends(b)),
    })
}

/// `G_m = A_m \ ({(12|)} ∪ {(ij|K) : ijK = [m]})` for `4 <= m <= 16`.
pub fn g_family(m: usize) -> Result<CIStructure> {
    if m < 4 {
        return Err(Error::Range {
            what: "g_family",
            value: m,
            expected: ">= 4",
        });
    }
    if m > MAX_ELEMENTS {
        return Err(Error::Capacity {
            what: "g_family",
            n: m,
            max: MAX_ELEMENTS,
        });
    }
    let ground = GroundSet::new(m)?;
    let all = ground.all();
    Ok(CIStructure::from_fn(ground, |s| {
        !(s.support() == all || (s.i() == 0 && s.j() == 1 && s.conditioning().is_empty()))
    }))
}

/// Decides whether `M ≅ U_{1,1}^a ⊕ U_{1,2}^b` by its circuits: every
/// circuit has two elements and no two circuits meet.
pub fn gaussoid_matroid_decision(m: &Matroid) -> bool {
    let circuits = m.circuits();
    circuits.iter().all(|c| c.len() == 2)
        && circuits
            .iter()
            .enumerate()
            .all(|(x, c)| circuits[x + 1..].iter().all(|d| c.is_disjoint(*d)))
}
