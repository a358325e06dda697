//! Oriented matroids: signed circuits, chirotopes, and their sign-valued
//! CI-structures.

mod chirotope;
mod circuits;
mod sigma;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Mul, Neg};

use fixedbitset::FixedBitSet;

pub use chirotope::{
    chirotope_validate, sigma_from_chirotope, sigma_from_chirotope_literal, Chirotope,
    ChirotopeFailure,
};
pub use circuits::{
    check_circuit_axioms, check_circuit_axioms_with, underlying_matroid, CircuitAxiomFailure,
    EliminationMode,
};
pub use sigma::{
    check_oci, oriented_matroid_from_sigma, sigma_of_oriented_matroid, OciAxiom, OciFailure,
};

use crate::error::{Error, Result};
use crate::set::{ElementSet, GroundSet};
use crate::statement::{CIStatement, StatementIndex};
use crate::structure::CIStructure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Sign {
    Negative,
    #[default]
    Zero,
    Positive,
}

impl Sign {
    pub fn of_i32(v: i32) -> Sign {
        match v.signum() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Negative => '-',
            Sign::Zero => '0',
            Sign::Positive => '+',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::of_i32(self.as_i32() * rhs.as_i32())
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        Sign::of_i32(-self.as_i32())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Negative => f.write_str("-1"),
            Sign::Zero => f.write_str("0"),
            Sign::Positive => f.write_str("+1"),
        }
    }
}

/// A map `X: [n] -> {-1, 0, +1}`, stored as its positive and negative parts.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedSet {
    positive: ElementSet,
    negative: ElementSet,
}

impl SignedSet {
    pub fn new(positive: ElementSet, negative: ElementSet) -> Result<Self> {
        if !positive.is_disjoint(negative) {
            return Err(Error::InvalidStatement(format!(
                "signed set with overlapping parts {positive} and {negative}"
            )));
        }
        Ok(SignedSet { positive, negative })
    }

    pub fn positive(&self) -> ElementSet {
        self.positive
    }

    pub fn negative(&self) -> ElementSet {
        self.negative
    }

    pub fn support(&self) -> ElementSet {
        self.positive.union(self.negative)
    }

    pub fn is_empty(&self) -> bool {
        self.support().is_empty()
    }

    pub fn sign(&self, e: usize) -> Sign {
        if self.positive.contains(e) {
            Sign::Positive
        } else if self.negative.contains(e) {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    /// The representative of `{X, -X}` whose smallest element is positive.
    pub fn normalized(&self) -> SignedSet {
        match self.support().min() {
            Some(e) if self.negative.contains(e) => -*self,
            _ => *self,
        }
    }

    pub fn shift(&self, offset: usize) -> SignedSet {
        SignedSet {
            positive: self.positive.shift(offset),
            negative: self.negative.shift(offset),
        }
    }
}

impl Neg for SignedSet {
    type Output = SignedSet;

    fn neg(self) -> SignedSet {
        SignedSet {
            positive: self.negative,
            negative: self.positive,
        }
    }
}

impl fmt::Debug for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints `(+{1,2} -{3})`.
impl fmt::Display for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(+{} -{})", self.positive, self.negative)
    }
}

/// A collection of signed subsets of `[n]`; a candidate set of signed
/// circuits of an oriented matroid.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedCircuitSet {
    ground: GroundSet,
    circuits: BTreeSet<SignedSet>,
}

impl SignedCircuitSet {
    /// Takes the signed sets as given, without adding negatives.
    pub fn new<I: IntoIterator<Item = SignedSet>>(ground: GroundSet, sets: I) -> Result<Self> {
        let circuits: BTreeSet<SignedSet> = sets.into_iter().collect();
        for x in &circuits {
            ground.check(x.support())?;
        }
        Ok(SignedCircuitSet { ground, circuits })
    }

    /// Adds `-X` for every given `X`.
    pub fn from_representatives<I: IntoIterator<Item = SignedSet>>(
        ground: GroundSet,
        reps: I,
    ) -> Result<Self> {
        Self::new(ground, reps.into_iter().flat_map(|x| [x, -x]))
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.size()
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn contains(&self, x: &SignedSet) -> bool {
        self.circuits.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = &SignedSet> + '_ {
        self.circuits.iter()
    }

    /// One signed set per `±` pair, normalized and sorted.
    pub fn representatives(&self) -> Vec<SignedSet> {
        let reps: BTreeSet<SignedSet> = self.circuits.iter().map(|x| x.normalized()).collect();
        let mut out: Vec<_> = reps.into_iter().collect();
        out.sort_by_key(|x| (x.support().len(), x.support().bits(), x.negative().bits()));
        out
    }

    pub fn direct_sum(&self, other: &SignedCircuitSet) -> Result<SignedCircuitSet> {
        let offset = self.n();
        let ground = GroundSet::new(offset + other.n())?;
        Self::new(
            ground,
            self.iter()
                .copied()
                .chain(other.iter().map(|x| x.shift(offset))),
        )
    }
}

impl fmt::Debug for SignedCircuitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedCircuitSet(n={}; ", self.n())?;
        f.debug_set().entries(self.circuits.iter()).finish()?;
        f.write_str(")")
    }
}

/// A map `σ: A_n -> {-1, 0, +1}`, stored as two disjoint membership tables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedCIStructure {
    ground: GroundSet,
    plus: FixedBitSet,
    minus: FixedBitSet,
}

impl OrientedCIStructure {
    /// The map sending every statement to zero.
    pub fn zero(ground: GroundSet) -> Self {
        let len = StatementIndex::new(ground).len();
        OrientedCIStructure {
            ground,
            plus: FixedBitSet::with_capacity(len),
            minus: FixedBitSet::with_capacity(len),
        }
    }

    pub fn from_fn(
        ground: GroundSet,
        mut sign: impl FnMut(&CIStatement) -> Result<Sign>,
    ) -> Result<Self> {
        let mut out = Self::zero(ground);
        let index = StatementIndex::new(ground);
        for x in 0..index.len() {
            match sign(&index.statement_at(x))? {
                Sign::Positive => out.plus.insert(x),
                Sign::Negative => out.minus.insert(x),
                Sign::Zero => {}
            }
        }
        Ok(out)
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.size()
    }

    pub fn index(&self) -> StatementIndex {
        StatementIndex::new(self.ground)
    }

    pub fn set(&mut self, s: &CIStatement, sign: Sign) -> Result<()> {
        if !s.support().is_subset(self.ground.all()) {
            return Err(Error::InvalidStatement(format!(
                "{s} is not a statement on [{}]",
                self.n()
            )));
        }
        let x = self.index().index_of(s);
        self.plus.set(x, sign == Sign::Positive);
        self.minus.set(x, sign == Sign::Negative);
        Ok(())
    }

    #[inline]
    pub fn sign(&self, s: &CIStatement) -> Sign {
        self.sign_at(self.index().index_of(s))
    }

    #[inline]
    pub fn sign_at(&self, index: usize) -> Sign {
        if self.plus.contains(index) {
            Sign::Positive
        } else if self.minus.contains(index) {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    #[inline]
    pub(crate) fn sign_of(&self, i: usize, j: usize, k: ElementSet) -> Sign {
        self.sign(&CIStatement::new_unchecked(i, j, k))
    }

    /// `σ^{-1}(0)` as a CI-structure.
    pub fn zero_set(&self) -> CIStructure {
        let ground = self.ground;
        CIStructure::from_fn(ground, |s| self.sign(s).is_zero())
    }

    /// Statements with nonzero sign, in canonical order.
    pub fn nonzero(&self) -> impl Iterator<Item = (CIStatement, Sign)> + '_ {
        let index = self.index();
        (0..index.len()).filter_map(move |x| {
            let s = self.sign_at(x);
            (!s.is_zero()).then(|| (index.statement_at(x), s))
        })
    }

    /// Statements where `self` and `other` differ, with both signs.
    pub fn diff(&self, other: &OrientedCIStructure) -> Vec<(CIStatement, Sign, Sign)> {
        let index = self.index();
        (0..index.len())
            .filter_map(|x| {
                let (a, b) = (self.sign_at(x), other.sign_at(x));
                (a != b).then(|| (index.statement_at(x), a, b))
            })
            .collect()
    }
}

impl fmt::Debug for OrientedCIStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedCIStructure(n={}; ", self.n())?;
        f.debug_map().entries(self.nonzero()).finish()?;
        f.write_str(")")
    }
}
