//! Exact rational models: vector configurations and Gaussian covariance
//! matrices.

mod matrix;

pub use matrix::RationalMatrix;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matroid::{Matroid, RankFunction};
use crate::oriented::{Chirotope, Sign, SignedCircuitSet, SignedSet};
use crate::set::{subsets_of_size, ElementSet, GroundSet};
use crate::structure::CIStructure;

/// `n` labeled vectors in `Q^d`, the columns of a `d x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorConfiguration {
    matrix: RationalMatrix,
    ground: GroundSet,
}

impl VectorConfiguration {
    pub fn new(matrix: RationalMatrix) -> Result<Self> {
        let ground = GroundSet::new(matrix.cols())?;
        Ok(VectorConfiguration { matrix, ground })
    }

    pub fn from_integer_columns(d: usize, columns: &[Vec<i64>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != d) {
            return Err(Error::Dimension(format!(
                "every column must have {d} entries"
            )));
        }
        let n = columns.len();
        let flat: Vec<i64> = (0..d * n).map(|x| columns[x % n][x / n]).collect();
        Self::new(RationalMatrix::from_integers(d, n, &flat)?)
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn dimension(&self) -> usize {
        self.matrix.rows()
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.size()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Rank of the columns in `s`.
    pub fn column_rank(&self, s: ElementSet) -> usize {
        if s.is_empty() {
            return 0;
        }
        let rows: Vec<usize> = (0..self.dimension()).collect();
        let cols: Vec<usize> = s.iter().collect();
        self.matrix.submatrix(&rows, &cols).rank()
    }

    /// The matroid of linear dependences among the columns.
    pub fn linear_matroid(&self) -> Result<Matroid> {
        let rank = RankFunction::from_fn(self.ground, |s| self.column_rank(s) as u32);
        Matroid::from_rank(rank)
    }

    /// Rows chosen greedily, first to last, each raising the rank.
    fn row_basis(&self) -> Vec<usize> {
        let cols: Vec<usize> = (0..self.n()).collect();
        let mut chosen: Vec<usize> = Vec::new();
        for r in 0..self.dimension() {
            chosen.push(r);
            if self.matrix.submatrix(&chosen, &cols).rank() < chosen.len() {
                chosen.pop();
            }
        }
        chosen
    }
}

/// `χ(t) = sign det` of the columns `t` restricted to a fixed row basis.
pub fn chirotope_from_vectors(v: &VectorConfiguration) -> Result<Chirotope> {
    let rows = v.row_basis();
    let r = rows.len();
    if r == 0 {
        return Err(Error::ZeroRank);
    }
    let mut entries = Vec::new();
    for t in subsets_of_size(v.ground.all(), r) {
        let cols: Vec<usize> = t.iter().collect();
        let det = v.matrix.submatrix(&rows, &cols).det()?;
        entries.push((t, sign_of(&det)));
    }
    Chirotope::new(v.ground, r, entries)
}

/// For each circuit `C` of the linear matroid, the unique (up to scaling)
/// dependence `Σ λ_c v_c = 0` over `C`, as `±({λ > 0}, {λ < 0})`.
pub fn signed_circuits_from_vectors(v: &VectorConfiguration) -> Result<SignedCircuitSet> {
    if v.rank() == 0 {
        return Err(Error::ZeroRank);
    }
    let m = v.linear_matroid()?;
    let rows: Vec<usize> = (0..v.dimension()).collect();
    let mut reps = Vec::with_capacity(m.circuits().len());
    for &c in m.circuits() {
        let cols: Vec<usize> = c.iter().collect();
        let kernel = v.matrix.submatrix(&rows, &cols).kernel();
        let [lambda] = kernel.as_slice() else {
            return Err(Error::Inconsistent(format!(
                "circuit {c} has a kernel of dimension {}",
                kernel.len()
            )));
        };
        let mut pos = ElementSet::EMPTY;
        let mut neg = ElementSet::EMPTY;
        for (&e, l) in cols.iter().zip(lambda) {
            match sign_of(l) {
                Sign::Positive => pos = pos.with(e),
                Sign::Negative => neg = neg.with(e),
                Sign::Zero => {
                    return Err(Error::Inconsistent(format!(
                        "dependence over circuit {c} vanishes at {}",
                        e + 1
                    )))
                }
            }
        }
        reps.push(SignedSet::new(pos, neg)?);
    }
    SignedCircuitSet::from_representatives(v.ground, reps)
}

/// `[[Σ]] = {(ij|K) : det Σ_{iK,jK} = 0}` for a symmetric positive definite
/// `Σ`, with rows `i, K` and columns `j, K` in that order.
pub fn gaussian_ci(sigma: &RationalMatrix) -> Result<CIStructure> {
    sigma.check_positive_definite()?;
    let ground = GroundSet::new(sigma.rows())?;
    let mut err = None;
    let g = CIStructure::from_fn(ground, |s| {
        let k: Vec<usize> = s.conditioning().iter().collect();
        let rows: Vec<usize> = std::iter::once(s.i()).chain(k.iter().copied()).collect();
        let cols: Vec<usize> = std::iter::once(s.j()).chain(k.iter().copied()).collect();
        match sigma.submatrix(&rows, &cols).det() {
            Ok(d) => d.is_zero(),
            Err(e) => {
                err.get_or_insert(e);
                false
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(g),
    }
}

/// `AᵀA + I`, positive definite for every rational `A`.
pub fn covariance_from_factor(a: &RationalMatrix) -> Result<RationalMatrix> {
    a.transpose()
        .mul(a)?
        .add(&RationalMatrix::identity(a.cols())?)
}

fn sign_of(v: &BigRational) -> Sign {
    if v.is_positive() {
        Sign::Positive
    } else if v.is_negative() {
        Sign::Negative
    } else {
        Sign::Zero
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oriented::sigma_from_chirotope;
    use crate::oriented::sigma_of_oriented_matroid;
    use crate::statement::CIStatement;

    fn set(es: &[usize]) -> ElementSet {
        es.iter().map(|e| e - 1).collect()
    }

    fn ss(pos: &[usize], neg: &[usize]) -> SignedSet {
        SignedSet::new(set(pos), set(neg)).unwrap()
    }

    fn plane() -> VectorConfiguration {
        VectorConfiguration::from_integer_columns(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
    }

    fn line() -> VectorConfiguration {
        VectorConfiguration::from_integer_columns(1, &[vec![1], vec![1], vec![-1]]).unwrap()
    }

    #[test]
    fn chirotopes_of_small_configurations() {
        let chi = chirotope_from_vectors(&plane()).unwrap();
        assert_eq!(chi.rank(), 2);
        assert_eq!(chi.value(set(&[1, 2])), Sign::Positive);
        assert_eq!(chi.value(set(&[1, 3])), Sign::Positive);
        assert_eq!(chi.value(set(&[2, 3])), Sign::Negative);

        let basis =
            VectorConfiguration::from_integer_columns(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let chi = chirotope_from_vectors(&basis).unwrap();
        assert_eq!(
            chi.bases().collect::<Vec<_>>(),
            vec![(set(&[1, 2]), Sign::Positive)]
        );

        let chi = chirotope_from_vectors(&line()).unwrap();
        assert_eq!(
            chi.bases().map(|(_, v)| v).collect::<Vec<_>>(),
            vec![Sign::Positive, Sign::Positive, Sign::Negative]
        );

        let zero = VectorConfiguration::from_integer_columns(2, &[vec![0, 0]]).unwrap();
        assert_eq!(chirotope_from_vectors(&zero), Err(Error::ZeroRank));
    }

    #[test]
    fn redundant_rows_are_skipped() {
        let v = VectorConfiguration::from_integer_columns(
            3,
            &[vec![1, 2, 0], vec![2, 4, 0], vec![0, 0, 1]],
        )
        .unwrap();
        let chi = chirotope_from_vectors(&v).unwrap();
        assert_eq!(chi.rank(), 2);
        assert_eq!(chi.value(set(&[1, 2])), Sign::Zero);
        assert_eq!(chi.value(set(&[1, 3])), Sign::Positive);
    }

    #[test]
    fn signed_circuits_of_small_configurations() {
        let c = signed_circuits_from_vectors(&plane()).unwrap();
        assert_eq!(c.representatives(), vec![ss(&[1, 2], &[3])]);
        let basis =
            VectorConfiguration::from_integer_columns(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(signed_circuits_from_vectors(&basis).unwrap().is_empty());
        let c = signed_circuits_from_vectors(&line()).unwrap();
        assert_eq!(
            c.representatives(),
            vec![ss(&[1], &[2]), ss(&[1, 3], &[]), ss(&[2, 3], &[])]
        );
    }

    #[test]
    fn both_routes_agree_on_small_configurations() {
        for v in [plane(), line()] {
            let a = sigma_from_chirotope(&chirotope_from_vectors(&v).unwrap()).unwrap();
            let b = sigma_of_oriented_matroid(&signed_circuits_from_vectors(&v).unwrap()).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn identity_covariance_is_full() {
        let g = gaussian_ci(&RationalMatrix::identity(3).unwrap()).unwrap();
        assert_eq!(g, CIStructure::full(GroundSet::new(3).unwrap()));
    }

    #[test]
    fn correlated_pair_is_empty_and_blocks_sum() {
        let tenth = BigRational::new(1.into(), 10.into());
        let one = BigRational::from_integer(1.into());
        let s = RationalMatrix::new(2, 2, vec![one.clone(), tenth.clone(), tenth, one]).unwrap();
        let g = gaussian_ci(&s).unwrap();
        assert!(g.is_empty());
        let block = gaussian_ci(&s.block_diagonal(&s)).unwrap();
        assert_eq!(block, g.direct_sum(&g).unwrap());
        assert!(block.contains(&CIStatement::new(0, 2, ElementSet::EMPTY).unwrap()));
    }

    #[test]
    fn rejects_indefinite_input() {
        let s = RationalMatrix::from_integers(2, 2, &[1, 2, 2, 1]).unwrap();
        assert!(matches!(
            gaussian_ci(&s),
            Err(Error::NotPositiveDefinite { order: 2, .. })
        ));
    }

    #[test]
    fn factor_covariance_is_positive_definite() {
        let a = RationalMatrix::from_integers(2, 3, &[1, -2, 0, 2, 1, -1]).unwrap();
        let s = covariance_from_factor(&a).unwrap();
        assert!(s.check_positive_definite().is_ok());
        assert_eq!(s.get(0, 0), &BigRational::from_integer(6.into()));
    }
}
