//! Exhaustive censuses on small ground sets.
//!
//! [`matroid_ci_scan`] walks every CI-structure on `[n]`, `n <= 4`, and keeps
//! those satisfying (SG) and (MCI). Together with
//! [`enumerate_loopless_matroids`] it gives two independent routes to the
//! same family.

use crate::axioms::{is_gaussoid, Axiom, AxiomTable};
use crate::error::{Error, Result};
use crate::matroid::{
    ci_of_matroid, enumerate_loopless_matroids_with, gaussoid_matroid_decision, Matroid,
};
use crate::par::{self, Execution};
use crate::set::GroundSet;
use crate::statement::StatementIndex;
use crate::structure::CIStructure;

/// Largest `n` for which every CI-structure can be visited.
pub const MAX_SCAN: usize = 4;

/// All CI-structures on `[n]` satisfying (SG) and (MCI), ordered by their
/// bit pattern over statement indices.
pub fn matroid_ci_scan(n: usize, exec: Execution) -> Result<Vec<CIStructure>> {
    let ground = scan_ground(n)?;
    Ok(matroid_ci_masks(ground, exec)
        .into_iter()
        .map(|m| CIStructure::from_mask(ground, m))
        .collect())
}

/// The bit patterns of [`matroid_ci_scan`].
pub fn matroid_ci_masks(ground: GroundSet, exec: Execution) -> Vec<u64> {
    let table = AxiomTable::new(ground, &Axiom::MATROID);
    let len = StatementIndex::new(ground).len();
    par::filter_range(exec, 1u64 << len, |m| table.satisfied_by_mask(m))
}

fn scan_ground(n: usize) -> Result<GroundSet> {
    if n > MAX_SCAN {
        return Err(Error::Capacity {
            what: "CI-structure scan",
            n,
            max: MAX_SCAN,
        });
    }
    if n < 2 {
        return Err(Error::Range {
            what: "CI-structure scan",
            value: n,
            expected: "2..=4",
        });
    }
    GroundSet::new(n)
}

/// Loopless matroids on `[n]`, `n <= 4`, whose CI-structure is a gaussoid.
///
/// The axiom check on `[[M]]` is compared with the structural test of
/// [`gaussoid_matroid_decision`] for every matroid; a disagreement is
/// reported as [`Error::Inconsistent`].
pub fn gaussoid_matroids(n: usize, exec: Execution) -> Result<Vec<Matroid>> {
    if n > MAX_SCAN {
        return Err(Error::Capacity {
            what: "gaussoid matroid census",
            n,
            max: MAX_SCAN,
        });
    }
    let matroids = enumerate_loopless_matroids_with(n, exec)?;
    let verdicts = par::map(exec, &matroids, |m| -> Result<(bool, bool)> {
        Ok((
            is_gaussoid(&ci_of_matroid(m)?),
            gaussoid_matroid_decision(m),
        ))
    });
    let mut out = Vec::new();
    for (m, v) in matroids.into_iter().zip(verdicts) {
        let (by_axioms, by_structure) = v?;
        if by_axioms != by_structure {
            return Err(Error::Inconsistent(format!(
                "{m:?}: gaussoid axioms say {by_axioms}, circuit structure says {by_structure}"
            )));
        }
        if by_axioms {
            out.push(m);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::enumerate_loopless_matroids;

    #[test]
    fn scan_on_three_elements_matches_enumeration() {
        let scanned = matroid_ci_scan(3, Execution::Sequential).unwrap();
        let mut from_matroids: Vec<CIStructure> = enumerate_loopless_matroids(3)
            .unwrap()
            .iter()
            .map(|m| ci_of_matroid(m).unwrap())
            .collect();
        let key = |g: &CIStructure| g.members().map(|s| s.to_string()).collect::<Vec<_>>();
        from_matroids.sort_by_key(key);
        let mut s = scanned.clone();
        s.sort_by_key(key);
        assert_eq!(s, from_matroids);
    }

    #[test]
    fn scan_bounds() {
        assert!(matroid_ci_scan(5, Execution::Parallel).is_err());
        assert!(matroid_ci_scan(1, Execution::Parallel).is_err());
        assert_eq!(matroid_ci_scan(2, Execution::Parallel).unwrap().len(), 2);
    }

    #[test]
    fn gaussoid_matroids_on_three_elements() {
        // U11^3 and the three labelings of U12 + U11
        let ms = gaussoid_matroids(3, Execution::Sequential).unwrap();
        assert_eq!(ms.len(), 4);
        assert!(ms.contains(&Matroid::free(3).unwrap()));
    }
}
