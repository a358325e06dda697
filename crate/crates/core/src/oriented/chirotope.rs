//! Chirotopes and the oriented CI-structure they define.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matroid::{ci_of_matroid, Matroid};
use crate::set::{subsets_of_size, ElementSet, GroundSet};
use crate::statement::CIStatement;

use super::{OrientedCIStructure, Sign};

/// An alternating map `χ: [n]^r -> {-1, 0, +1}`, stored by its nonzero
/// values on increasing tuples.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chirotope {
    ground: GroundSet,
    rank: usize,
    signs: BTreeMap<ElementSet, Sign>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChirotopeFailure {
    IdenticallyZero,
    /// No `y ∈ b2 \ b1` makes `b1 - x + y` a basis.
    Exchange {
        b1: ElementSet,
        b2: ElementSet,
        x: usize,
    },
}

impl fmt::Display for ChirotopeFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChirotopeFailure::IdenticallyZero => f.write_str("chirotope is identically zero"),
            ChirotopeFailure::Exchange { b1, b2, x } => {
                write!(f, "no exchange for {} from {b1} into {b2}", x + 1)
            }
        }
    }
}

impl Chirotope {
    /// Builds a chirotope from values on increasing tuples given as sets.
    /// Zero entries are dropped; repeated sets are rejected.
    pub fn new<I>(ground: GroundSet, rank: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ElementSet, Sign)>,
    {
        if rank > ground.size() {
            return Err(Error::Chirotope(format!(
                "rank {rank} exceeds ground set size {}",
                ground.size()
            )));
        }
        let mut signs = BTreeMap::new();
        for (set, sign) in entries {
            ground.check(set)?;
            if set.len() != rank {
                return Err(Error::Chirotope(format!(
                    "tuple {set} does not have {rank} elements"
                )));
            }
            if signs.insert(set, sign).is_some() {
                return Err(Error::Chirotope(format!("tuple {set} given twice")));
            }
        }
        signs.retain(|_, s| !s.is_zero());
        Ok(Chirotope {
            ground,
            rank,
            signs,
        })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.size()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Value on the increasing tuple with elements `set`.
    pub fn value(&self, set: ElementSet) -> Sign {
        self.signs.get(&set).copied().unwrap_or(Sign::Zero)
    }

    /// Value on an arbitrary tuple: zero on repeats, otherwise the sorted
    /// value times the sign of the sorting permutation.
    pub fn eval(&self, tuple: &[usize]) -> Sign {
        if tuple.len() != self.rank {
            return Sign::Zero;
        }
        let set: ElementSet = tuple.iter().copied().collect();
        if set.len() != tuple.len() {
            return Sign::Zero;
        }
        let inversions = (0..tuple.len())
            .flat_map(|a| (a + 1..tuple.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| tuple[a] > tuple[b])
            .count();
        let v = self.value(set);
        if inversions % 2 == 1 {
            -v
        } else {
            v
        }
    }

    /// Nonzero increasing tuples as sets, in bit order.
    pub fn bases(&self) -> impl Iterator<Item = (ElementSet, Sign)> + '_ {
        self.signs.iter().map(|(&s, &v)| (s, v))
    }

    pub fn negated(&self) -> Chirotope {
        Chirotope {
            ground: self.ground,
            rank: self.rank,
            signs: self.signs.iter().map(|(&s, &v)| (s, -v)).collect(),
        }
    }

    /// The matroid whose bases are the supports of the nonzero values.
    pub fn underlying_matroid(&self) -> Result<Matroid> {
        if let Some(f) = chirotope_validate(self).into_iter().next() {
            return Err(Error::Chirotope(f.to_string()));
        }
        Matroid::from_bases(self.ground, self.signs.keys().copied())
    }
}

impl fmt::Debug for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chirotope(n={}, r={}; ", self.n(), self.rank)?;
        f.debug_map().entries(self.signs.iter()).finish()?;
        f.write_str(")")
    }
}

/// Checks that `χ` is not identically zero and that its nonzero tuples
/// satisfy basis exchange. Necessary, not sufficient, for a chirotope.
pub fn chirotope_validate(chi: &Chirotope) -> Vec<ChirotopeFailure> {
    if chi.signs.is_empty() {
        return vec![ChirotopeFailure::IdenticallyZero];
    }
    let mut out = Vec::new();
    for &b1 in chi.signs.keys() {
        for &b2 in chi.signs.keys() {
            for x in b1.difference(b2) {
                let base = b1.without(x);
                if !b2
                    .difference(b1)
                    .iter()
                    .any(|y| chi.signs.contains_key(&base.with(y)))
                {
                    out.push(ChirotopeFailure::Exchange { b1, b2, x });
                }
            }
        }
    }
    out
}

/// The oriented CI-structure of a chirotope.
///
/// `σ(ij|K) = 0` exactly when `(ij|K)` is in the CI-structure of the
/// underlying matroid. Otherwise
/// `σ(ij|K) = -χ(i, b, a) χ(j, b, a)` for a basis `b` of `K` and a set
/// `a ⊆ [n] \ ijK` of size `r - |b| - 1` with `χ(i, b, a) ≠ 0`. All such
/// choices are evaluated and must agree.
pub fn sigma_from_chirotope(chi: &Chirotope) -> Result<OrientedCIStructure> {
    let m = chi.underlying_matroid()?;
    let zero = ci_of_matroid(&m)?;
    OrientedCIStructure::from_fn(chi.ground, |s| {
        if zero.contains(s) {
            return Ok(Sign::Zero);
        }
        let mut found: Option<Sign> = None;
        for b in bases_of(&m, s.conditioning()) {
            for (ti, tj) in completions(chi, s, b) {
                let v = -(ti * tj);
                match found {
                    None => found = Some(v),
                    Some(w) if w != v => {
                        return Err(Error::Inconsistent(format!(
                            "sign of {s} depends on the choice of basis and completion"
                        )))
                    }
                    _ => {}
                }
            }
        }
        found.ok_or_else(|| Error::Inconsistent(format!("no completion witnesses {s}")))
    })
}

/// The product formula taken at face value: the first basis `b` of `K`,
/// the first completion `a` with `χ(i, b, a) ≠ 0`, and sign zero when there
/// is none. This disagrees with [`sigma_from_chirotope`] on statements that
/// hold in the underlying matroid but still admit a completion, e.g.
/// `(12|)` for the vectors `e1, e2, e1 + e2`.
pub fn sigma_from_chirotope_literal(chi: &Chirotope) -> Result<OrientedCIStructure> {
    let m = chi.underlying_matroid()?;
    OrientedCIStructure::from_fn(chi.ground, |s| {
        let b = bases_of(&m, s.conditioning())
            .next()
            .unwrap_or(ElementSet::EMPTY);
        Ok(completions(chi, s, b)
            .next()
            .map(|(ti, tj)| -(ti * tj))
            .unwrap_or(Sign::Zero))
    })
}

fn bases_of(m: &Matroid, k: ElementSet) -> impl Iterator<Item = ElementSet> + '_ {
    let r = m.rank(k) as usize;
    subsets_of_size(k, r).filter(move |&b| m.is_independent(b))
}

/// `(χ(i, b, a), χ(j, b, a))` for every completion `a` with `χ(i, b, a) ≠ 0`.
fn completions<'a>(
    chi: &'a Chirotope,
    s: &CIStatement,
    b: ElementSet,
) -> impl Iterator<Item = (Sign, Sign)> + 'a {
    let (i, j) = (s.i(), s.j());
    let free = chi.ground.all().difference(s.support());
    let size = (chi.rank + 1).checked_sub(b.len() + 2);
    let prefix: Vec<usize> = b.iter().collect();
    size.into_iter()
        .flat_map(move |size| subsets_of_size(free, size))
        .filter_map(move |a| {
            let tail: Vec<usize> = prefix.iter().copied().chain(a.iter()).collect();
            let with = |x: usize| {
                let mut t = Vec::with_capacity(tail.len() + 1);
                t.push(x);
                t.extend_from_slice(&tail);
                chi.eval(&t)
            };
            let ti = with(i);
            (!ti.is_zero()).then(|| (ti, with(j)))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(es: &[usize]) -> ElementSet {
        es.iter().map(|e| e - 1).collect()
    }

    fn stmt(i: usize, j: usize, k: &[usize]) -> CIStatement {
        CIStatement::new(i - 1, j - 1, set(k)).unwrap()
    }

    /// Vectors e1, e2, e1 + e2.
    fn u23() -> Chirotope {
        let g = GroundSet::new(3).unwrap();
        Chirotope::new(
            g,
            2,
            [
                (set(&[1, 2]), Sign::Positive),
                (set(&[1, 3]), Sign::Positive),
                (set(&[2, 3]), Sign::Negative),
            ],
        )
        .unwrap()
    }

    /// Vectors (1), (1), (-1).
    fn rank_one() -> Chirotope {
        let g = GroundSet::new(3).unwrap();
        Chirotope::new(
            g,
            1,
            [
                (set(&[1]), Sign::Positive),
                (set(&[2]), Sign::Positive),
                (set(&[3]), Sign::Negative),
            ],
        )
        .unwrap()
    }

    #[test]
    fn alternating_evaluation() {
        let chi = u23();
        assert_eq!(chi.eval(&[0, 1]), Sign::Positive);
        assert_eq!(chi.eval(&[1, 0]), Sign::Negative);
        assert_eq!(chi.eval(&[2, 1]), Sign::Positive);
        assert_eq!(chi.eval(&[1, 1]), Sign::Zero);
    }

    #[test]
    fn validation() {
        assert!(chirotope_validate(&u23()).is_empty());
        let g = GroundSet::new(4).unwrap();
        let zero = Chirotope::new(g, 2, []).unwrap();
        assert_eq!(
            chirotope_validate(&zero),
            vec![ChirotopeFailure::IdenticallyZero]
        );
        let split = Chirotope::new(
            g,
            2,
            [
                (set(&[1, 2]), Sign::Positive),
                (set(&[3, 4]), Sign::Positive),
            ],
        )
        .unwrap();
        let f = chirotope_validate(&split);
        assert!(f.contains(&ChirotopeFailure::Exchange {
            b1: set(&[1, 2]),
            b2: set(&[3, 4]),
            x: 0
        }));
        assert!(Chirotope::new(g, 2, [(set(&[1]), Sign::Positive)]).is_err());
    }

    #[test]
    fn sigma_on_three_vectors_in_the_plane() {
        let sigma = sigma_from_chirotope(&u23()).unwrap();
        assert_eq!(sigma.sign(&stmt(1, 2, &[3])), Sign::Positive);
        assert_eq!(sigma.sign(&stmt(1, 3, &[2])), Sign::Negative);
        assert_eq!(sigma.sign(&stmt(2, 3, &[1])), Sign::Negative);
        assert_eq!(sigma.sign(&stmt(1, 2, &[])), Sign::Zero);
        assert_eq!(sigma.nonzero().count(), 3);
    }

    #[test]
    fn literal_zero_clause_differs_on_independent_pair() {
        let literal = sigma_from_chirotope_literal(&u23()).unwrap();
        assert_eq!(literal.sign(&stmt(1, 2, &[])), Sign::Positive);
        let sigma = sigma_from_chirotope(&u23()).unwrap();
        assert_eq!(sigma.sign(&stmt(1, 2, &[])), Sign::Zero);
    }

    #[test]
    fn rank_one_signs() {
        let sigma = sigma_from_chirotope(&rank_one()).unwrap();
        assert_eq!(sigma.sign(&stmt(1, 2, &[])), Sign::Negative);
        assert_eq!(sigma.sign(&stmt(1, 3, &[])), Sign::Positive);
        assert_eq!(sigma.sign(&stmt(2, 3, &[])), Sign::Positive);
        assert_eq!(sigma.nonzero().count(), 3);
    }

    #[test]
    fn global_negation_is_invisible() {
        for chi in [u23(), rank_one()] {
            assert_eq!(
                sigma_from_chirotope(&chi).unwrap(),
                sigma_from_chirotope(&chi.negated()).unwrap()
            );
        }
    }
}
