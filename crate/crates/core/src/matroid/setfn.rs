//! Rational set functions, submodularity, and semimatroids `[[h]]`.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::set::{ElementSet, GroundSet};
use crate::structure::CIStructure;

use super::RankFunction;

/// A function `2^[n] -> Q`, stored as a table indexed by subset bit pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFunction {
    ground: GroundSet,
    values: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubmodularFailure {
    /// `h(∅) != 0`
    EmptySet(BigRational),
    /// `h(A) + h(B) < h(A ∩ B) + h(A ∪ B)`
    Pair { a: ElementSet, b: ElementSet },
}

impl fmt::Display for SubmodularFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubmodularFailure::EmptySet(v) => write!(f, "h(∅) = {v}"),
            SubmodularFailure::Pair { a, b } => {
                write!(f, "h({a}) + h({b}) < h({a} ∩ {b}) + h({a} ∪ {b})")
            }
        }
    }
}

impl SetFunction {
    pub fn new(ground: GroundSet, values: Vec<BigRational>) -> Result<Self> {
        if values.len() != ground.subset_count() {
            return Err(Error::Dimension(format!(
                "set function has {} values, expected {}",
                values.len(),
                ground.subset_count()
            )));
        }
        Ok(SetFunction { ground, values })
    }

    pub fn from_fn(ground: GroundSet, f: impl Fn(ElementSet) -> BigRational) -> Self {
        SetFunction {
            ground,
            values: ground.subsets().map(f).collect(),
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    #[inline]
    pub fn value(&self, s: ElementSet) -> &BigRational {
        &self.values[s.bits() as usize]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Pointwise sum; both functions must live on the same ground set.
    pub fn sum(&self, other: &SetFunction) -> Result<SetFunction> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch {
                left: self.ground.size(),
                right: other.ground.size(),
            });
        }
        Ok(SetFunction::from_fn(self.ground, |s| {
            self.value(s) + other.value(s)
        }))
    }
}

impl From<&RankFunction> for SetFunction {
    fn from(r: &RankFunction) -> Self {
        SetFunction::from_fn(r.ground(), |s| BigRational::from_integer(r.rank(s).into()))
    }
}

/// Checks `h(∅) = 0` and submodularity in the exchange form
/// `h(Ai) + h(Aj) >= h(Aij) + h(A)`, which implies the general form.
/// Failures are reported as the pair `(Ai, Aj)`.
pub fn check_submodular(h: &SetFunction) -> Vec<SubmodularFailure> {
    let mut out = empty_failure(h);
    let n = h.ground.size();
    for a in h.ground.subsets() {
        let rest = a.complement(n);
        for i in rest {
            for j in rest.iter().filter(|&j| j > i) {
                let (ai, aj) = (a.with(i), a.with(j));
                if h.value(ai) + h.value(aj) < h.value(ai.with(j)) + h.value(a) {
                    out.push(SubmodularFailure::Pair { a: ai, b: aj });
                }
            }
        }
    }
    out
}

/// Checks submodularity over all `4^n` pairs `(A, B)`.
pub fn check_submodular_pairwise(h: &SetFunction) -> Vec<SubmodularFailure> {
    let mut out = empty_failure(h);
    for a in h.ground.subsets() {
        for b in h.ground.subsets().filter(|&b| b > a) {
            if h.value(a) + h.value(b) < h.value(a.intersection(b)) + h.value(a.union(b)) {
                out.push(SubmodularFailure::Pair { a, b });
            }
        }
    }
    out
}

fn empty_failure(h: &SetFunction) -> Vec<SubmodularFailure> {
    let e = h.value(ElementSet::EMPTY);
    if e.is_zero() {
        Vec::new()
    } else {
        vec![SubmodularFailure::EmptySet(e.clone())]
    }
}

/// `[[h]] = {(ij|K) : h(iK) + h(jK) = h(ijK) + h(K)}` for a submodular `h`.
pub fn semimatroid_of_set_function(h: &SetFunction) -> Result<CIStructure> {
    if let Some(f) = check_submodular(h).into_iter().next() {
        return Err(Error::NotSubmodular(f.to_string()));
    }
    Ok(CIStructure::from_fn(h.ground, |s| {
        let k = s.conditioning();
        h.value(k.with(s.i())) + h.value(k.with(s.j())) == h.value(s.support()) + h.value(k)
    }))
}
