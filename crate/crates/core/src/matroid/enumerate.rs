//! Brute-force enumeration of all loopless matroids on a small ground set.
//!
//! Candidates are the downward-closed families of subsets of `[n]` that
//! contain every singleton; the ones satisfying independence augmentation
//! are the independent-set families of loopless matroids.

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::set::{ElementSet, GroundSet};

use super::{Matroid, SetFamily};

/// Largest `n` accepted by [`enumerate_loopless_matroids`].
pub const MAX_ENUMERATION: usize = 5;

/// Every loopless matroid on `[n]`, `n <= 5`, ordered by the bit pattern of
/// its independent-set family.
pub fn enumerate_loopless_matroids(n: usize) -> Result<Vec<Matroid>> {
    enumerate_loopless_matroids_with(n, Execution::default())
}

pub fn enumerate_loopless_matroids_with(n: usize, exec: Execution) -> Result<Vec<Matroid>> {
    if n > MAX_ENUMERATION {
        return Err(Error::Capacity {
            what: "matroid enumeration",
            n,
            max: MAX_ENUMERATION,
        });
    }
    let ground = GroundSet::new(n)?;
    let families = downward_closed_families(ground);
    let matroids = par::filter_map(exec, &families, |&fam| {
        augmentation_holds(fam).then(|| {
            let mut family = SetFamily::new(ground);
            for s in ground.subsets().filter(|s| fam >> s.bits() & 1 == 1) {
                family.insert(s);
            }
            Matroid::from_independent_sets(&family)
        })
    });
    let mut out = matroids.into_iter().collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|m| family_bits(m.independent_sets()));
    Ok(out)
}

fn family_bits(f: &SetFamily) -> u32 {
    f.iter().fold(0u32, |acc, s| acc | 1 << s.bits())
}

/// All downward-closed families containing `∅` and every singleton, as bit
/// patterns over the `2^n <= 32` subsets.
fn downward_closed_families(ground: GroundSet) -> Vec<u32> {
    let mut order: Vec<ElementSet> = ground.subsets().filter(|s| s.len() >= 2).collect();
    order.sort_by_key(|s| (s.len(), s.bits()));
    let base = ground
        .subsets()
        .filter(|s| s.len() <= 1)
        .fold(0u32, |acc, s| acc | 1 << s.bits());
    let mut out = Vec::new();
    extend_family(&order, 0, base, &mut out);
    out
}

fn extend_family(order: &[ElementSet], at: usize, family: u32, out: &mut Vec<u32>) {
    let Some(&s) = order.get(at) else {
        out.push(family);
        return;
    };
    extend_family(order, at + 1, family, out);
    // all subsets one smaller were decided earlier in the size order
    if s.iter().all(|x| family >> s.without(x).bits() & 1 == 1) {
        extend_family(order, at + 1, family | 1 << s.bits(), out);
    }
}

/// `|A| < |B|` for members `A, B` implies `A ∪ x` is a member for some
/// `x ∈ B \ A`.
fn augmentation_holds(family: u32) -> bool {
    let members: Vec<ElementSet> = (0..32u32)
        .filter(|&b| family >> b & 1 == 1)
        .map(ElementSet::from_bits)
        .collect();
    members.iter().all(|&a| {
        members.iter().filter(|b| b.len() > a.len()).all(|&b| {
            b.difference(a)
                .iter()
                .any(|x| family >> a.with(x).bits() & 1 == 1)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_loopless_matroids(1).unwrap().len(), 1);
        let two = enumerate_loopless_matroids(2).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.contains(&Matroid::uniform(1, 2).unwrap()));
        assert!(two.contains(&Matroid::uniform(2, 2).unwrap()));
        // U33, U23, U13 and three labelings of U12 + U11
        assert_eq!(enumerate_loopless_matroids(3).unwrap().len(), 6);
        assert!(enumerate_loopless_matroids(6).is_err());
    }

    #[test]
    fn all_loopless_and_distinct() {
        let ms = enumerate_loopless_matroids(4).unwrap();
        assert!(ms.iter().all(|m| m.is_loopless()));
        let mut ranks: Vec<_> = ms
            .iter()
            .map(|m| m.rank_function().values().to_vec())
            .collect();
        ranks.sort();
        ranks.dedup();
        assert_eq!(ranks.len(), ms.len());
    }

    #[test]
    fn execution_modes_agree() {
        let a = enumerate_loopless_matroids_with(4, Execution::Sequential).unwrap();
        let b = enumerate_loopless_matroids_with(4, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
