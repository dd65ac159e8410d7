//! Hermitian matrices over `Q(i)` and their principal minors.

mod bareiss;
pub mod elimination;
pub mod io;
mod minors;

use std::fmt;

use thiserror::Error;

use crate::exact::{GaussianRational, Rational};
use bareiss::ScaledMatrix;

pub use minors::{k_subsets, PrincipalMinors};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix must have order at least 1")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    Ragged { row: usize, len: usize, n: usize },
    #[error("entry ({row},{col}) is not the conjugate of entry ({col},{row})")]
    NotHermitian { row: usize, col: usize },
    #[error("index {index} out of range for order {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("index set must be nonempty and strictly increasing")]
    MalformedIndexSet,
    #[error("order {k} out of range 1..={n}")]
    InvalidOrder { k: usize, n: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("not a permutation of 0..{n}")]
    InvalidPermutation { n: usize },
}

/// A nonempty, strictly increasing set of 0-based indices into `0..n`.
/// Displayed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self, MatrixError> {
        if indices.is_empty() || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(MatrixError::MalformedIndexSet);
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(MatrixError::IndexOutOfRange { index: bad, n });
        }
        Ok(IndexSet(indices))
    }

    /// Builds from the 1-based indices used in mathematical notation.
    pub fn from_one_based(indices: &[usize], n: usize) -> Result<Self, MatrixError> {
        if indices.contains(&0) {
            return Err(MatrixError::MalformedIndexSet);
        }
        IndexSet::new(indices.iter().map(|i| i - 1).collect(), n)
    }

    pub fn full(n: usize) -> Self {
        IndexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        IndexSet((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &i| m | 1 << i)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Square matrix over `Q(i)` equal to its conjugate transpose.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HermitianMatrix {
    n: usize,
    rows: Vec<Vec<GaussianRational>>,
}

impl HermitianMatrix {
    pub fn new(rows: Vec<Vec<GaussianRational>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::Ragged { row: i, len: row.len(), n });
            }
        }
        for i in 0..n {
            for j in i..n {
                if rows[i][j] != rows[j][i].conj() {
                    return Err(MatrixError::NotHermitian { row: i, col: j });
                }
            }
        }
        Ok(HermitianMatrix { n, rows })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> GaussianRational) -> Result<Self, MatrixError> {
        HermitianMatrix::new((0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect())
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        HermitianMatrix::new(rows.iter().map(|r| r.iter().map(|&x| GaussianRational::from(x)).collect()).collect())
    }

    pub fn diagonal(d: &[Rational]) -> Result<Self, MatrixError> {
        HermitianMatrix::from_fn(d.len(), |i, j| {
            if i == j {
                GaussianRational::real(d[i].clone())
            } else {
                GaussianRational::zero()
            }
        })
    }

    pub fn zero(n: usize) -> Result<Self, MatrixError> {
        HermitianMatrix::from_fn(n, |_, _| GaussianRational::zero())
    }

    pub fn identity(n: usize) -> Result<Self, MatrixError> {
        HermitianMatrix::from_fn(n, |i, j| if i == j { GaussianRational::one() } else { GaussianRational::zero() })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &GaussianRational {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<GaussianRational>] {
        &self.rows
    }

    pub fn is_real(&self) -> bool {
        self.rows.iter().flatten().all(GaussianRational::is_real)
    }

    pub fn principal_submatrix(&self, alpha: &IndexSet) -> Result<HermitianMatrix, MatrixError> {
        let idx = alpha.indices();
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.n) {
            return Err(MatrixError::IndexOutOfRange { index: bad, n: self.n });
        }
        Ok(HermitianMatrix {
            n: idx.len(),
            rows: idx.iter().map(|&i| idx.iter().map(|&j| self.rows[i][j].clone()).collect()).collect(),
        })
    }

    /// Arbitrary (not necessarily principal) submatrix.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<GaussianRational>> {
        rows.iter().map(|&i| cols.iter().map(|&j| self.rows[i][j].clone()).collect()).collect()
    }

    pub(crate) fn scaled(&self) -> ScaledMatrix {
        ScaledMatrix::new(&self.rows)
    }

    /// Exact determinant; real because the matrix is Hermitian.
    pub fn determinant(&self) -> Rational {
        let all: Vec<usize> = (0..self.n).collect();
        self.scaled().principal_minor(&all)
    }

    /// Every principal minor, indexed by subset bitmask.
    pub fn principal_minors(&self) -> PrincipalMinors {
        PrincipalMinors::compute(self)
    }

    /// The `C(n,k)` order-`k` principal minors in lexicographic subset order.
    pub fn all_principal_minors(&self, k: usize) -> Result<Vec<(IndexSet, Rational)>, MatrixError> {
        if k == 0 || k > self.n {
            return Err(MatrixError::InvalidOrder { k, n: self.n });
        }
        let scaled = self.scaled();
        Ok(k_subsets(self.n, k)
            .into_iter()
            .map(|s| {
                let value = scaled.principal_minor(&s);
                (IndexSet(s), value)
            })
            .collect())
    }

    /// Rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let all: Vec<usize> = (0..self.n).collect();
        self.scaled().rank(&all, &all)
    }

    /// Rank of the (not necessarily principal) submatrix `B[rows, cols]`.
    pub fn submatrix_rank(&self, rows: &[usize], cols: &[usize]) -> usize {
        self.scaled().rank(rows, cols)
    }

    pub fn inverse(&self) -> Result<HermitianMatrix, MatrixError> {
        let inv = elimination::inverse(&self.rows).ok_or(MatrixError::Singular)?;
        HermitianMatrix::new(inv)
    }

    pub fn negate(&self) -> HermitianMatrix {
        HermitianMatrix { n: self.n, rows: self.rows.iter().map(|r| r.iter().map(|x| -x).collect()).collect() }
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &HermitianMatrix) -> HermitianMatrix {
        let n = self.n + other.n;
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match (i < self.n, j < self.n) {
                        (true, true) => self.rows[i][j].clone(),
                        (false, false) => other.rows[i - self.n][j - self.n].clone(),
                        _ => GaussianRational::zero(),
                    })
                    .collect()
            })
            .collect();
        HermitianMatrix { n, rows }
    }

    /// `P B P^T` with row `i` of the result taken from row `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<HermitianMatrix, MatrixError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(MatrixError::InvalidPermutation { n: self.n });
        }
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(MatrixError::InvalidPermutation { n: self.n });
            }
        }
        Ok(HermitianMatrix { n: self.n, rows: self.submatrix(perm, perm) })
    }

    /// Borders the matrix with a copy of its last column, the conjugate of
    /// that column as a new row, and the last diagonal entry in the corner.
    pub fn duplicate_last(&self) -> HermitianMatrix {
        let n = self.n;
        let mut rows: Vec<Vec<GaussianRational>> = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.push(r[n - 1].clone());
                r
            })
            .collect();
        let mut last: Vec<GaussianRational> = (0..n).map(|j| self.rows[j][n - 1].conj()).collect();
        last.push(self.rows[n - 1][n - 1].clone());
        rows.push(last);
        HermitianMatrix { n: n + 1, rows }
    }
}

impl fmt::Debug for HermitianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}

impl fmt::Display for HermitianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
