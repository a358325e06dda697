//! CI-statements `(ij|K)` and their dense indexing.

use std::fmt;

use crate::error::{Error, Result};
use crate::set::{ElementSet, GroundSet, MAX_ELEMENTS};

/// A conditional-independence statement `(ij|K)`.
///
/// Stored with `i < j`; `K` never contains `i` or `j`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CIStatement {
    i: u8,
    j: u8,
    k: ElementSet,
}

impl CIStatement {
    /// Builds `(ij|K)`, swapping `i` and `j` if needed.
    pub fn new(i: usize, j: usize, k: ElementSet) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidStatement(format!(
                "i = j = {} in ({}{}|{})",
                i + 1,
                i + 1,
                j + 1,
                k
            )));
        }
        if k.contains(i) || k.contains(j) {
            return Err(Error::InvalidStatement(format!(
                "conditioning set {k} meets {{{},{}}}",
                i + 1,
                j + 1
            )));
        }
        if i.max(j) >= MAX_ELEMENTS || !k.is_subset(ElementSet::full(MAX_ELEMENTS)) {
            return Err(Error::InvalidStatement(format!(
                "element beyond {MAX_ELEMENTS}"
            )));
        }
        Ok(Self::new_unchecked(i, j, k))
    }

    /// Like [`new`](Self::new) without validation. `i != j` and `K ∩ {i,j} = ∅`
    /// must hold.
    #[inline]
    pub(crate) fn new_unchecked(i: usize, j: usize, k: ElementSet) -> Self {
        debug_assert!(i != j && !k.contains(i) && !k.contains(j));
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        CIStatement {
            i: i as u8,
            j: j as u8,
            k,
        }
    }

    #[inline]
    pub fn i(&self) -> usize {
        self.i as usize
    }

    #[inline]
    pub fn j(&self) -> usize {
        self.j as usize
    }

    #[inline]
    pub fn conditioning(&self) -> ElementSet {
        self.k
    }

    #[inline]
    pub fn pair(&self) -> ElementSet {
        ElementSet::singleton(self.i()).with(self.j())
    }

    /// `ijK`, all elements the statement mentions.
    #[inline]
    pub fn support(&self) -> ElementSet {
        self.k.with(self.i()).with(self.j())
    }

    /// Applies an element relabeling `e -> perm[e]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let k = self.k.iter().map(|e| perm[e]).collect();
        Self::new_unchecked(perm[self.i()], perm[self.j()], k)
    }
}

impl fmt::Debug for CIStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints `(1 2 | 3 4)`; an empty conditioning set prints as `(1 2 | )`.
impl fmt::Display for CIStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} |", self.i + 1, self.j + 1)?;
        for e in self.k.iter() {
            write!(f, " {}", e + 1)?;
        }
        f.write_str(")")
    }
}

/// Number of CI-statements on `[n]`, `C(n,2) * 2^(n-2)`.
pub fn statement_count(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::Range {
            what: "statement_count",
            value: n,
            expected: "2..=16",
        });
    }
    if n > MAX_ELEMENTS {
        return Err(Error::Capacity {
            what: "statement_count",
            n,
            max: MAX_ELEMENTS,
        });
    }
    Ok(n * (n - 1) / 2 * (1 << (n - 2)))
}

/// The canonical total order on the statements over a ground set.
///
/// Pairs `(i,j)` are ordered lexicographically; within a pair, `K` is read as
/// an `(n-2)`-bit integer over `[n] \ {i,j}` in increasing element order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StatementIndex {
    n: usize,
}

impl StatementIndex {
    pub fn new(ground: GroundSet) -> Self {
        StatementIndex { n: ground.size() }
    }

    pub fn len(&self) -> usize {
        if self.n < 2 {
            0
        } else {
            self.n * (self.n - 1) / 2 * (1 << (self.n - 2))
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    fn pair_rank(&self, i: usize, j: usize) -> usize {
        // pairs (0,1), (0,2), .., (0,n-1), (1,2), ..
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    /// Dense rank of `s`. The statement must live on this ground set.
    #[inline]
    pub fn index_of(&self, s: &CIStatement) -> usize {
        let (i, j) = (s.i(), s.j());
        debug_assert!(j < self.n && s.k.is_subset(ElementSet::full(self.n)));
        let k = s.k.bits();
        let lo = k & ((1 << i) - 1);
        let mid = (k >> (i + 1)) & ((1 << (j - i - 1)) - 1);
        let hi = k >> (j + 1);
        let code = lo | mid << i | hi << (j - 1);
        (self.pair_rank(i, j) << (self.n - 2)) | code as usize
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn statement_at(&self, index: usize) -> CIStatement {
        debug_assert!(index < self.len());
        let mut pair = index >> (self.n - 2);
        let code = (index & ((1 << (self.n - 2)) - 1)) as u32;
        let mut i = 0;
        while pair >= self.n - 1 - i {
            pair -= self.n - 1 - i;
            i += 1;
        }
        let j = i + 1 + pair;
        let lo = code & ((1 << i) - 1);
        let mid = (code >> i) & ((1 << (j - i - 1)) - 1);
        let hi = code >> (j - 1);
        let k = lo | mid << (i + 1) | hi << (j + 1);
        CIStatement::new_unchecked(i, j, ElementSet::from_bits(k))
    }

    /// All statements in index order.
    pub fn statements(&self) -> impl Iterator<Item = CIStatement> + '_ {
        (0..self.len()).map(move |x| self.statement_at(x))
    }
}
