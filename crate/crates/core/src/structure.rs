//! CI-structures and the structural operations on them: deletion,
//! contraction, duality, direct sums, minors and isomorphism.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::set::{ElementSet, GroundSet};
use crate::statement::{CIStatement, StatementIndex};

/// Upper bound on `n` for [`CIStructure::minors`] and [`CIStructure::isomorphism_to`].
pub const MAX_EXHAUSTIVE: usize = 10;

/// A set of CI-statements over a ground set, stored as a membership table
/// indexed by [`StatementIndex`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CIStructure {
    ground: GroundSet,
    members: FixedBitSet,
}

/// Maps the elements of a reduced ground set back to the original labels:
/// `original[new] = old`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    pub original: Vec<usize>,
}

impl Relabeling {
    fn keeping(kept: ElementSet) -> Self {
        Relabeling {
            original: kept.iter().collect(),
        }
    }
}

/// One entry of [`CIStructure::minors`]: the minor `G \ deleted / contracted`.
#[derive(Clone, Debug)]
pub struct Minor {
    pub structure: CIStructure,
    pub deleted: ElementSet,
    pub contracted: ElementSet,
}

impl Minor {
    pub fn is_proper(&self) -> bool {
        !self.deleted.union(self.contracted).is_empty()
    }
}

impl CIStructure {
    pub fn empty(ground: GroundSet) -> Self {
        let len = StatementIndex::new(ground).len();
        CIStructure {
            ground,
            members: FixedBitSet::with_capacity(len),
        }
    }

    /// The structure containing every statement of `A_n`.
    pub fn full(ground: GroundSet) -> Self {
        let mut g = Self::empty(ground);
        g.members.insert_range(..);
        g
    }

    pub fn from_statements<I>(ground: GroundSet, statements: I) -> Result<Self>
    where
        I: IntoIterator<Item = CIStatement>,
    {
        let mut g = Self::empty(ground);
        for s in statements {
            g.insert(s)?;
        }
        Ok(g)
    }

    /// Builds a structure from a membership predicate evaluated on every
    /// statement of `A_n`.
    pub fn from_fn(ground: GroundSet, mut member: impl FnMut(&CIStatement) -> bool) -> Self {
        let index = StatementIndex::new(ground);
        let mut g = Self::empty(ground);
        for x in 0..index.len() {
            if member(&index.statement_at(x)) {
                g.members.insert(x);
            }
        }
        g
    }

    /// Builds a structure on `n <= 6` elements from a bit pattern over
    /// statement indices (bit `x` set means statement `x` is a member).
    pub fn from_mask(ground: GroundSet, mask: u64) -> Self {
        let mut g = Self::empty(ground);
        let len = g.members.len();
        debug_assert!(len <= 64);
        for x in 0..len {
            if mask >> x & 1 == 1 {
                g.members.insert(x);
            }
        }
        g
    }

    #[inline]
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.ground.size()
    }

    #[inline]
    pub fn index(&self) -> StatementIndex {
        StatementIndex::new(self.ground)
    }

    fn check_statement(&self, s: &CIStatement) -> Result<()> {
        if s.support().is_subset(self.ground.all()) {
            Ok(())
        } else {
            Err(Error::InvalidStatement(format!(
                "{s} is not a statement on [{}]",
                self.n()
            )))
        }
    }

    pub fn insert(&mut self, s: CIStatement) -> Result<bool> {
        self.check_statement(&s)?;
        let x = self.index().index_of(&s);
        Ok(!self.members.put(x))
    }

    pub fn remove(&mut self, s: &CIStatement) -> Result<bool> {
        self.check_statement(s)?;
        let x = self.index().index_of(s);
        let was = self.members.contains(x);
        self.members.set(x, false);
        Ok(was)
    }

    /// Membership test. Statements outside `A_n` are never members.
    #[inline]
    pub fn contains(&self, s: &CIStatement) -> bool {
        s.support().is_subset(self.ground.all()) && self.members.contains(self.index().index_of(s))
    }

    /// Membership test by `(i, j, K)` with unchecked construction; callers
    /// guarantee a well-formed statement on this ground set.
    #[inline]
    pub(crate) fn holds(&self, i: usize, j: usize, k: ElementSet) -> bool {
        self.members
            .contains(self.index().index_of(&CIStatement::new_unchecked(i, j, k)))
    }

    #[inline]
    pub fn contains_index(&self, index: usize) -> bool {
        self.members.contains(index)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    /// Member statements in canonical order.
    pub fn members(&self) -> impl Iterator<Item = CIStatement> + '_ {
        let index = self.index();
        self.members.ones().map(move |x| index.statement_at(x))
    }

    pub fn membership(&self) -> &FixedBitSet {
        &self.members
    }

    /// `A_n \ G`.
    pub fn complement(&self) -> CIStructure {
        let mut g = self.clone();
        g.members.toggle_range(..);
        g
    }

    pub fn is_subset(&self, other: &CIStructure) -> bool {
        self.ground == other.ground && self.members.is_subset(&other.members)
    }

    /// `G \ A = {(ij|K) in G : ijK ⊆ [n] \ A}`, relabeled onto `[n - |A|]`.
    pub fn delete(&self, a: ElementSet) -> Result<(CIStructure, Relabeling)> {
        self.ground.check(a)?;
        let kept = a.complement(self.n());
        let ground = GroundSet::new(kept.len())?;
        let g = CIStructure::from_fn(ground, |s| {
            let (i, j) = (nth(kept, s.i()), nth(kept, s.j()));
            self.holds(i, j, s.conditioning().expand(kept))
        });
        Ok((g, Relabeling::keeping(kept)))
    }

    /// `G / A = {(ij|K) in A_{[n] \ A} : (ij|KA) in G}`, relabeled onto `[n - |A|]`.
    pub fn contract(&self, a: ElementSet) -> Result<(CIStructure, Relabeling)> {
        self.ground.check(a)?;
        let kept = a.complement(self.n());
        let ground = GroundSet::new(kept.len())?;
        let g = CIStructure::from_fn(ground, |s| {
            let (i, j) = (nth(kept, s.i()), nth(kept, s.j()));
            self.holds(i, j, s.conditioning().expand(kept).union(a))
        });
        Ok((g, Relabeling::keeping(kept)))
    }

    /// `G* = {(ij | [n] \ ijK) : (ij|K) in G}`.
    pub fn dual(&self) -> CIStructure {
        let all = self.ground.all();
        let mut g = CIStructure::empty(self.ground);
        let index = self.index();
        for s in self.members() {
            let k = all.difference(s.support());
            g.members
                .insert(index.index_of(&CIStatement::new_unchecked(s.i(), s.j(), k)));
        }
        g
    }

    /// `G1 ⊕ G2` on `E1 E2`, with the elements of `other` placed after those
    /// of `self`.
    pub fn direct_sum(&self, other: &CIStructure) -> Result<CIStructure> {
        let n1 = self.n();
        let ground = GroundSet::new(n1 + other.n())?;
        let first = self.ground.all();
        Ok(CIStructure::from_fn(ground, |s| {
            let (i, j) = (s.i(), s.j());
            match (i < n1, j < n1) {
                (true, true) => self.holds(i, j, s.conditioning().intersection(first)),
                (false, false) => {
                    let k = ElementSet::from_bits(s.conditioning().bits() >> n1);
                    other.holds(i - n1, j - n1, k)
                }
                _ => true,
            }
        }))
    }

    /// All minors `G \ A / B` for disjoint `A, B ⊆ [n]`, i.e. `3^n` entries,
    /// ordered by `(A, B)` bit patterns.
    pub fn minors(&self) -> Result<Vec<Minor>> {
        let n = self.n();
        if n > MAX_EXHAUSTIVE {
            return Err(Error::Capacity {
                what: "minors",
                n,
                max: MAX_EXHAUSTIVE,
            });
        }
        let mut out = Vec::new();
        for deleted in self.ground.subsets() {
            let (restricted, map) = self.delete(deleted)?;
            let rest = deleted.complement(n);
            for contracted in rest.subsets() {
                let local = contracted.compress(rest);
                debug_assert_eq!(map.original.len(), rest.len());
                let (structure, _) = restricted.contract(local)?;
                out.push(Minor {
                    structure,
                    deleted,
                    contracted,
                });
            }
        }
        Ok(out)
    }

    /// The structure `π(G) = {(π(i)π(j)|π(K)) : (ij|K) in G}`, where
    /// `perm[e]` is the image of `e`.
    pub fn permuted(&self, perm: &[usize]) -> CIStructure {
        debug_assert!(is_permutation(perm, self.n()));
        let index = self.index();
        let mut g = CIStructure::empty(self.ground);
        for s in self.members() {
            g.members.insert(index.index_of(&s.permuted(perm)));
        }
        g
    }

    /// Number of members with `|K| = k`, for `k = 0..=n-2`. This profile is
    /// invariant under relabeling.
    pub fn size_profile(&self) -> Vec<usize> {
        let mut profile = vec![0; self.n().saturating_sub(1)];
        for s in self.members() {
            profile[s.conditioning().len()] += 1;
        }
        profile
    }

    /// Finds `perm` with `self.permuted(perm) == *other`, if one exists.
    ///
    /// Elements are assigned in increasing order; each partial assignment is
    /// rejected as soon as some statement supported on the assigned elements
    /// disagrees with its image. This visits every permutation the prefilter
    /// and the partial checks cannot rule out.
    pub fn isomorphism_to(&self, other: &CIStructure) -> Result<Option<Vec<usize>>> {
        let n = self.n();
        if n != other.n() {
            return Err(Error::GroundMismatch {
                left: n,
                right: other.n(),
            });
        }
        if n > MAX_EXHAUSTIVE {
            return Err(Error::Capacity {
                what: "isomorphism",
                n,
                max: MAX_EXHAUSTIVE,
            });
        }
        if self.size_profile() != other.size_profile() {
            return Ok(None);
        }
        // statements grouped by their largest element
        let index = self.index();
        let mut by_top: Vec<Vec<CIStatement>> = vec![Vec::new(); n];
        for s in index.statements() {
            by_top[s.support().max().unwrap_or(0)].push(s);
        }
        let mut perm = vec![usize::MAX; n];
        let mut used = ElementSet::EMPTY;
        Ok(self
            .extend_isomorphism(other, &by_top, 0, &mut perm, &mut used)
            .then_some(perm))
    }

    fn extend_isomorphism(
        &self,
        other: &CIStructure,
        by_top: &[Vec<CIStatement>],
        e: usize,
        perm: &mut Vec<usize>,
        used: &mut ElementSet,
    ) -> bool {
        let n = self.n();
        if e == n {
            return true;
        }
        for image in 0..n {
            if used.contains(image) {
                continue;
            }
            perm[e] = image;
            let consistent = by_top[e]
                .iter()
                .all(|s| self.contains(s) == other.contains(&s.permuted(perm)));
            if consistent {
                *used = used.with(image);
                if self.extend_isomorphism(other, by_top, e + 1, perm, used) {
                    return true;
                }
                *used = used.without(image);
            }
        }
        perm[e] = usize::MAX;
        false
    }

    pub fn is_isomorphic(&self, other: &CIStructure) -> Result<bool> {
        Ok(self.isomorphism_to(other)?.is_some())
    }
}

/// The `k`-th smallest element of `set`.
fn nth(set: ElementSet, k: usize) -> usize {
    set.iter().nth(k).expect("index within set")
}

pub(crate) fn is_permutation(perm: &[usize], n: usize) -> bool {
    perm.len() == n && {
        let img: ElementSet = perm.iter().copied().collect();
        img == ElementSet::full(n)
    }
}

impl fmt::Debug for CIStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CIStructure(n={}; ", self.n())?;
        f.debug_list().entries(self.members()).finish()?;
        f.write_str(")")
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

    fn set(es: &[usize]) -> ElementSet {
        es.iter().map(|e| e - 1).collect()
    }

    fn ci(n: usize, stmts: &[CIStatement]) -> CIStructure {
        CIStructure::from_statements(ground(n), stmts.iter().copied()).unwrap()
    }

    #[test]
    fn delete_examples() {
        let full3 = CIStructure::full(ground(3));
        assert_eq!(
            full3.delete(set(&[3])).unwrap().0,
            CIStructure::full(ground(2))
        );

        let u23 = ci(3, &[st(1, 2, &[]), st(1, 3, &[]), st(2, 3, &[])]);
        let (d, map) = u23.delete(set(&[3])).unwrap();
        assert_eq!(d, ci(2, &[st(1, 2, &[])]));
        assert_eq!(map.original, vec![0, 1]);

        let empty = CIStructure::empty(ground(3));
        let (d, map) = empty.delete(set(&[1])).unwrap();
        assert_eq!(d, CIStructure::empty(ground(2)));
        assert_eq!(map.original, vec![1, 2]);
    }

    #[test]
    fn contract_examples() {
        let g = ci(3, &[st(1, 2, &[3])]);
        assert_eq!(g.contract(set(&[3])).unwrap().0, ci(2, &[st(1, 2, &[])]));
        let g = ci(3, &[st(1, 2, &[])]);
        assert_eq!(
            g.contract(set(&[3])).unwrap().0,
            CIStructure::empty(ground(2))
        );
        let full3 = CIStructure::full(ground(3));
        assert_eq!(full3.contract(ElementSet::EMPTY).unwrap().0, full3);
    }

    #[test]
    fn contract_relabels() {
        // (13|2) on [3] contracted by {2} is (12|) on the relabeled [2]
        let g = ci(3, &[st(1, 3, &[2])]);
        let (c, map) = g.contract(set(&[2])).unwrap();
        assert_eq!(c, ci(2, &[st(1, 2, &[])]));
        assert_eq!(map.original, vec![0, 2]);
    }

    #[test]
    fn dual_examples() {
        let g = ci(3, &[st(1, 2, &[3]), st(1, 3, &[2])]);
        assert_eq!(g.dual().dual(), g);
        let u13 = ci(3, &[st(1, 2, &[3]), st(1, 3, &[2]), st(2, 3, &[1])]);
        let u23 = ci(3, &[st(1, 2, &[]), st(1, 3, &[]), st(2, 3, &[])]);
        assert_eq!(u13.dual(), u23);
        let empty = CIStructure::empty(ground(3));
        assert_eq!(empty.dual(), empty);
    }

    #[test]
    fn direct_sum_examples() {
        let one = CIStructure::empty(ground(1));
        assert_eq!(one.direct_sum(&one).unwrap(), ci(2, &[st(1, 2, &[])]));

        let u12 = CIStructure::empty(ground(2));
        let s = u12.direct_sum(&u12).unwrap();
        for k in set(&[2, 4]).subsets() {
            assert!(s.contains(&CIStatement::new(0, 2, k).unwrap()));
        }
        for k in set(&[3, 4]).subsets() {
            assert!(!s.contains(&CIStatement::new(0, 1, k).unwrap()));
        }

        let f2 = CIStructure::full(ground(2));
        assert_eq!(f2.direct_sum(&f2).unwrap(), CIStructure::full(ground(4)));
    }

    #[test]
    fn minors_count_and_full() {
        let g = ci(2, &[st(1, 2, &[])]);
        let minors = g.minors().unwrap();
        assert_eq!(minors.len(), 9);
        assert_eq!(minors.iter().filter(|m| !m.is_proper()).count(), 1);

        let full3 = CIStructure::full(ground(3));
        for m in full3.minors().unwrap() {
            assert_eq!(m.structure, CIStructure::full(m.structure.ground()));
        }
        assert!(CIStructure::empty(ground(11)).minors().is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let g1 = ci(3, &[st(1, 2, &[])]);
        let g2 = ci(3, &[st(1, 3, &[])]);
        let perm = g1.isomorphism_to(&g2).unwrap().unwrap();
        assert_eq!(perm, vec![0, 2, 1]);
        assert_eq!(g1.permuted(&perm), g2);

        let id = g1.isomorphism_to(&g1).unwrap().unwrap();
        assert_eq!(id, vec![0, 1, 2]);

        let u13 = ci(3, &[st(1, 2, &[3]), st(1, 3, &[2]), st(2, 3, &[1])]);
        let u23 = ci(3, &[st(1, 2, &[]), st(1, 3, &[]), st(2, 3, &[])]);
        assert_eq!(u13.isomorphism_to(&u23).unwrap(), None);
    }

    #[test]
    fn out_of_range_statement_rejected() {
        let mut g = CIStructure::empty(ground(2));
        assert!(g.insert(st(1, 3, &[])).is_err());
        assert!(!g.contains(&st(1, 3, &[])));
    }
}
