//! Matroids given by rank functions, and their conversions to and from
//! CI-structures.

mod crypto;
mod enumerate;
mod setfn;

use std::fmt;

use fixedbitset::FixedBitSet;

pub use crypto::{
    ci_of_matroid, dependence_profile, dependent_via_circuits, g_family, gaussoid_matroid_decision,
    independent_sets_from_ci, rank_from_ci, rank_from_ci_unchecked, DependenceProfile,
};
pub use enumerate::{
    enumerate_loopless_matroids, enumerate_loopless_matroids_with, MAX_ENUMERATION,
};
pub use setfn::{
    check_submodular, check_submodular_pairwise, semimatroid_of_set_function, SetFunction,
    SubmodularFailure,
};

use crate::error::{Error, Result};
use crate::set::{ElementSet, GroundSet};

/// A function `2^[n] -> N`, stored as a table indexed by subset bit pattern.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RankFunction {
    ground: GroundSet,
    values: Vec<u32>,
}

/// A violated rank-function axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankAxiomFailure {
    /// `r(∅) != 0`
    EmptySet { value: u32 },
    /// `r(A ∪ x) < r(A)`
    Monotone { set: ElementSet, element: usize },
    /// `r(A ∪ x) > r(A) + 1`
    UnitIncrease { set: ElementSet, element: usize },
    /// `r(A) + r(B) < r(A ∩ B) + r(A ∪ B)`
    Submodular { a: ElementSet, b: ElementSet },
}

impl fmt::Display for RankAxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RankAxiomFailure::EmptySet { value } => write!(f, "r(∅) = {value}"),
            RankAxiomFailure::Monotone { set, element } => {
                write!(f, "r({set} + {}) < r({set})", element + 1)
            }
            RankAxiomFailure::UnitIncrease { set, element } => {
                write!(f, "r({set} + {}) > r({set}) + 1", element + 1)
            }
            RankAxiomFailure::Submodular { a, b } => {
                write!(f, "r({a}) + r({b}) < r({a} ∩ {b}) + r({a} ∪ {b})")
            }
        }
    }
}

impl RankFunction {
    /// Wraps a value table; `values[S]` is the rank of the subset with bit
    /// pattern `S`. No axioms are checked here, see [`validate`](Self::validate).
    pub fn new(ground: GroundSet, values: Vec<u32>) -> Result<Self> {
        if values.len() != ground.subset_count() {
            return Err(Error::Dimension(format!(
                "rank table has {} entries, expected {}",
                values.len(),
                ground.subset_count()
            )));
        }
        Ok(RankFunction { ground, values })
    }

    pub fn from_fn(ground: GroundSet, f: impl Fn(ElementSet) -> u32) -> Self {
        RankFunction {
            ground,
            values: ground.subsets().map(f).collect(),
        }
    }

    #[inline]
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    #[inline]
    pub fn rank(&self, s: ElementSet) -> u32 {
        self.values[s.bits() as usize]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Checks normalization, unit increase, monotonicity and submodularity.
    ///
    /// Submodularity is checked in its local form
    /// `r(Ai) + r(Aj) >= r(Aij) + r(A)`, which is equivalent to the
    /// all-pairs form; failures are reported as the pair `(Ai, Aj)`.
    pub fn validate(&self) -> Vec<RankAxiomFailure> {
        let mut out = Vec::new();
        let n = self.ground.size();
        if self.rank(ElementSet::EMPTY) != 0 {
            out.push(RankAxiomFailure::EmptySet {
                value: self.rank(ElementSet::EMPTY),
            });
        }
        for a in self.ground.subsets() {
            let ra = self.rank(a);
            for x in a.complement(n) {
                let rx = self.rank(a.with(x));
                if rx < ra {
                    out.push(RankAxiomFailure::Monotone { set: a, element: x });
                } else if rx > ra + 1 {
                    out.push(RankAxiomFailure::UnitIncrease { set: a, element: x });
                }
            }
            let rest = a.complement(n);
            for i in rest {
                for j in rest {
                    if j <= i {
                        continue;
                    }
                    let (ai, aj) = (a.with(i), a.with(j));
                    if self.rank(ai) + self.rank(aj) < self.rank(ai.with(j)) + ra {
                        out.push(RankAxiomFailure::Submodular { a: ai, b: aj });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for RankFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.ground.subsets().map(|s| (s, self.rank(s))))
            .finish()
    }
}

/// A family of subsets of a ground set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    ground: GroundSet,
    members: FixedBitSet,
}

impl SetFamily {
    pub fn new(ground: GroundSet) -> Self {
        SetFamily {
            ground,
            members: FixedBitSet::with_capacity(ground.subset_count()),
        }
    }

    pub fn from_sets<I: IntoIterator<Item = ElementSet>>(
        ground: GroundSet,
        sets: I,
    ) -> Result<Self> {
        let mut f = Self::new(ground);
        for s in sets {
            ground.check(s)?;
            f.insert(s);
        }
        Ok(f)
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn insert(&mut self, s: ElementSet) {
        self.members.insert(s.bits() as usize);
    }

    #[inline]
    pub fn contains(&self, s: ElementSet) -> bool {
        self.members.contains(s.bits() as usize)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    /// Members in increasing bit-pattern order.
    pub fn iter(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.members.ones().map(|x| ElementSet::from_bits(x as u32))
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A matroid on `[n]` given by its rank function, with circuits, bases and
/// independent sets computed at construction.
#[derive(Clone)]
pub struct Matroid {
    rank: RankFunction,
    independent: SetFamily,
    circuits: Vec<ElementSet>,
    bases: Vec<ElementSet>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
    }
}

impl Eq for Matroid {}

impl std::hash::Hash for Matroid {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rank.hash(state)
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n())
            .field("rank", &self.full_rank())
            .field("bases", &self.bases)
            .finish()
    }
}

impl Matroid {
    /// Validates `rank` and builds the matroid.
    pub fn from_rank(rank: RankFunction) -> Result<Self> {
        let failures = rank.validate();
        if let Some(f) = failures.first() {
            return Err(Error::NotMatroid(f.to_string()));
        }
        Ok(Self::from_valid_rank(rank))
    }

    fn from_valid_rank(rank: RankFunction) -> Self {
        let ground = rank.ground();
        let mut independent = SetFamily::new(ground);
        for s in ground.subsets() {
            if rank.rank(s) as usize == s.len() {
                independent.insert(s);
            }
        }
        let circuits = ground
            .subsets()
            .filter(|&s| {
                !independent.contains(s) && s.iter().all(|x| independent.contains(s.without(x)))
            })
            .collect();
        let full = rank.rank(ground.all()) as usize;
        let bases = independent.iter().filter(|b| b.len() == full).collect();
        Matroid {
            rank,
            independent,
            circuits,
            bases,
        }
    }

    /// The matroid whose independent sets are the subsets of the given bases.
    pub fn from_bases<I: IntoIterator<Item = ElementSet>>(
        ground: GroundSet,
        bases: I,
    ) -> Result<Self> {
        let bases: Vec<ElementSet> = bases.into_iter().collect();
        if bases.is_empty() {
            return Err(Error::NotMatroid("no bases given".into()));
        }
        for b in &bases {
            ground.check(*b)?;
        }
        let rank = RankFunction::from_fn(ground, |s| {
            bases
                .iter()
                .map(|b| b.intersection(s).len())
                .max()
                .unwrap_or(0) as u32
        });
        let m = Self::from_rank(rank)?;
        let mut given = bases.clone();
        given.sort();
        given.dedup();
        if given != m.bases {
            return Err(Error::NotMatroid(
                "basis family violates the exchange axiom".into(),
            ));
        }
        Ok(m)
    }

    /// The matroid whose independent sets are exactly `family`, which must be
    /// nonempty, closed under subsets and satisfy augmentation.
    pub fn from_independent_sets(family: &SetFamily) -> Result<Self> {
        let ground = family.ground();
        if !family.contains(ElementSet::EMPTY) {
            return Err(Error::NotMatroid("empty set is not independent".into()));
        }
        // r(S) = max |I| over independent I ⊆ S, by dynamic programming
        let mut values = vec![0u32; ground.subset_count()];
        for s in ground.subsets() {
            values[s.bits() as usize] = if family.contains(s) {
                s.len() as u32
            } else {
                s.iter()
                    .map(|x| values[s.without(x).bits() as usize])
                    .max()
                    .unwrap_or(0)
            };
        }
        let m = Self::from_rank(RankFunction::new(ground, values)?)?;
        if m.independent != *family {
            return Err(Error::NotMatroid(
                "family is not the independent-set family of a matroid".into(),
            ));
        }
        Ok(m)
    }

    /// The matroid whose circuits are exactly `circuits` (an antichain
    /// satisfying circuit elimination).
    pub fn from_circuits<I: IntoIterator<Item = ElementSet>>(
        ground: GroundSet,
        circuits: I,
    ) -> Result<Self> {
        let circuits: Vec<ElementSet> = circuits.into_iter().collect();
        for c in &circuits {
            ground.check(*c)?;
        }
        let mut family = SetFamily::new(ground);
        for s in ground.subsets() {
            if !circuits.iter().any(|c| c.is_subset(s)) {
                family.insert(s);
            }
        }
        let m = Self::from_independent_sets(&family)?;
        let mut given = circuits;
        given.sort();
        given.dedup();
        if given != m.circuits {
            return Err(Error::NotMatroid(
                "sets are not the circuits of a matroid".into(),
            ));
        }
        Ok(m)
    }

    /// `U_{r,n}`: every set of size at most `r` is independent.
    pub fn uniform(rank: usize, n: usize) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        if rank > n {
            return Err(Error::Range {
                what: "uniform matroid rank",
                value: rank,
                expected: "0..=n",
            });
        }
        Ok(Self::from_valid_rank(RankFunction::from_fn(ground, |s| {
            s.len().min(rank) as u32
        })))
    }

    /// The free matroid `U_{n,n}`.
    pub fn free(n: usize) -> Result<Self> {
        Self::uniform(n, n)
    }

    #[inline]
    pub fn ground(&self) -> GroundSet {
        self.rank.ground()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.ground().size()
    }

    #[inline]
    pub fn rank(&self, s: ElementSet) -> u32 {
        self.rank.rank(s)
    }

    pub fn rank_function(&self) -> &RankFunction {
        &self.rank
    }

    pub fn full_rank(&self) -> u32 {
        self.rank(self.ground().all())
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        self.independent.contains(s)
    }

    pub fn independent_sets(&self) -> &SetFamily {
        &self.independent
    }

    /// Minimal dependent sets, in increasing bit-pattern order.
    pub fn circuits(&self) -> &[ElementSet] {
        &self.circuits
    }

    /// Maximal independent sets, in increasing bit-pattern order.
    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    /// `cl(S) = {x : r(S ∪ x) = r(S)}`.
    pub fn closure(&self, s: ElementSet) -> ElementSet {
        let rs = self.rank(s);
        self.ground()
            .all()
            .iter()
            .filter(|&x| self.rank(s.with(x)) == rs)
            .collect()
    }

    /// Circuits of the dual matroid: the minimal sets meeting every basis.
    pub fn cocircuits(&self) -> Vec<ElementSet> {
        let meets_all = |s: ElementSet| self.bases.iter().all(|b| !b.is_disjoint(s));
        self.ground()
            .subsets()
            .filter(|&s| {
                !s.is_empty() && meets_all(s) && s.iter().all(|x| !meets_all(s.without(x)))
            })
            .collect()
    }

    /// Elements of rank zero.
    pub fn loops(&self) -> ElementSet {
        self.ground()
            .all()
            .iter()
            .filter(|&x| self.rank(ElementSet::singleton(x)) == 0)
            .collect()
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    /// Elements contained in every basis.
    pub fn coloops(&self) -> ElementSet {
        self.bases
            .iter()
            .fold(self.ground().all(), |acc, b| acc.intersection(*b))
    }

    /// `M \ A`, the restriction to `[n] \ A`, relabeled onto `[n - |A|]`.
    pub fn delete(&self, a: ElementSet) -> Result<Matroid> {
        self.ground().check(a)?;
        let kept = a.complement(self.n());
        let ground = GroundSet::new(kept.len())?;
        Ok(Self::from_valid_rank(RankFunction::from_fn(ground, |s| {
            self.rank(s.expand(kept))
        })))
    }

    /// `M / A` with rank `r'(S) = r(S ∪ A) - r(A)`, relabeled onto
    /// `[n - |A|]`. The result may have loops.
    pub fn contract(&self, a: ElementSet) -> Result<Matroid> {
        self.ground().check(a)?;
        let kept = a.complement(self.n());
        let ground = GroundSet::new(kept.len())?;
        let ra = self.rank(a);
        Ok(Self::from_valid_rank(RankFunction::from_fn(ground, |s| {
            self.rank(s.expand(kept).union(a)) - ra
        })))
    }

    /// `M*` with `r*(S) = |S| + r([n] \ S) - r([n])`.
    pub fn dual(&self) -> Matroid {
        let n = self.n();
        let total = self.full_rank();
        Self::from_valid_rank(RankFunction::from_fn(self.ground(), |s| {
            s.len() as u32 + self.rank(s.complement(n)) - total
        }))
    }

    /// `M1 ⊕ M2`, with the elements of `other` placed after those of `self`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n1 = self.n();
        let ground = GroundSet::new(n1 + other.n())?;
        let first = self.ground().all();
        Ok(Self::from_valid_rank(RankFunction::from_fn(ground, |s| {
            self.rank(s.intersection(first)) + other.rank(ElementSet::from_bits(s.bits() >> n1))
        })))
    }

    /// Replaces every loop by a coloop: `r'(S) = r(S \ L) + |S ∩ L|` for the
    /// loop set `L`. The CI-structure is unchanged by this.
    pub fn normalize_loopless(&self) -> Matroid {
        let loops = self.loops();
        if loops.is_empty() {
            return self.clone();
        }
        Self::from_valid_rank(RankFunction::from_fn(self.ground(), |s| {
            self.rank(s.difference(loops)) + s.intersection(loops).len() as u32
        }))
    }

    /// Applies the relabeling `e -> perm[e]`.
    pub fn permuted(&self, perm: &[usize]) -> Matroid {
        debug_assert!(crate::structure::is_permutation(perm, self.n()));
        let mut inverse = vec![0; perm.len()];
        for (e, &p) in perm.iter().enumerate() {
            inverse[p] = e;
        }
        Self::from_valid_rank(RankFunction::from_fn(self.ground(), |s| {
            self.rank(s.iter().map(|e| inverse[e]).collect())
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(es: &[usize]) -> ElementSet {
        es.iter().map(|e| e - 1).collect()
    }

    #[test]
    fn validate_examples() {
        let g3 = GroundSet::new(3).unwrap();
        let u = RankFunction::from_fn(g3, |s| s.len().min(2) as u32);
        assert!(u.validate().is_empty());

        let shifted = RankFunction::from_fn(g3, |s| s.len().min(2) as u32 + 1);
        assert!(shifted
            .validate()
            .contains(&RankAxiomFailure::EmptySet { value: 1 }));

        let g2 = GroundSet::new(2).unwrap();
        let square = RankFunction::from_fn(g2, |s| (s.len() * s.len()) as u32);
        assert!(square.validate().contains(&RankAxiomFailure::Submodular {
            a: set(&[1]),
            b: set(&[2]),
        }));
    }

    #[test]
    fn uniform_examples() {
        let free = Matroid::uniform(3, 3).unwrap();
        assert_eq!(free.independent_sets().len(), 8);
        assert!(free.circuits().is_empty());
        assert_eq!(free.bases(), &[set(&[1, 2, 3])]);

        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.circuits(), &[set(&[1, 2, 3])]);
        assert_eq!(u23.bases(), &[set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]);

        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(u12.circuits(), &[set(&[1, 2])]);

        assert!(Matroid::uniform(4, 3).is_err());
    }

    #[test]
    fn closure_and_cocircuits() {
        let u13 = Matroid::uniform(1, 3).unwrap();
        assert_eq!(u13.closure(set(&[1])), set(&[1, 2, 3]));
        // cocircuits of U_{1,3} are the circuits of U_{2,3}
        assert_eq!(u13.cocircuits(), vec![set(&[1, 2, 3])]);
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.cocircuits(), Matroid::uniform(1, 3).unwrap().circuits());
    }

    #[test]
    fn operation_examples() {
        assert_eq!(
            Matroid::uniform(1, 3).unwrap().dual(),
            Matroid::uniform(2, 3).unwrap()
        );
        assert_eq!(
            Matroid::uniform(2, 3).unwrap().contract(set(&[3])).unwrap(),
            Matroid::uniform(1, 2).unwrap()
        );
        let u11 = Matroid::uniform(1, 1).unwrap();
        assert_eq!(
            u11.direct_sum(&u11).unwrap(),
            Matroid::uniform(2, 2).unwrap()
        );
        assert_eq!(
            Matroid::uniform(2, 3).unwrap().delete(set(&[2])).unwrap(),
            Matroid::uniform(2, 2).unwrap()
        );
    }

    #[test]
    fn loop_normalization() {
        // contracting a point of U_{1,2} makes the other one a loop
        let m = Matroid::uniform(1, 2).unwrap().contract(set(&[1])).unwrap();
        assert_eq!(m.loops(), set(&[1]));
        let fixed = m.normalize_loopless();
        assert!(fixed.is_loopless());
        assert_eq!(fixed, Matroid::free(1).unwrap());
    }

    #[test]
    fn alternative_constructors_agree() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        let g = u23.ground();
        assert_eq!(Matroid::from_bases(g, u23.bases().to_vec()).unwrap(), u23);
        assert_eq!(
            Matroid::from_circuits(g, u23.circuits().to_vec()).unwrap(),
            u23
        );
        assert_eq!(
            Matroid::from_independent_sets(u23.independent_sets()).unwrap(),
            u23
        );
        // {12} and {34} alone violate basis exchange
        let bad = Matroid::from_bases(GroundSet::new(4).unwrap(), [set(&[1, 2]), set(&[3, 4])]);
        assert!(bad.is_err());
    }

    #[test]
    fn coloops_and_permutation() {
        let m = Matroid::uniform(1, 2)
            .unwrap()
            .direct_sum(&Matroid::free(1).unwrap())
            .unwrap();
        assert_eq!(m.coloops(), set(&[3]));
        let p = m.permuted(&[2, 1, 0]);
        assert_eq!(p.coloops(), set(&[1]));
    }
}
