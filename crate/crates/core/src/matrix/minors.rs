use crate::exact::{Rational, Sign};

use super::{HermitianMatrix, IndexSet};

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn extend(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let remaining = k - cur.len();
        for i in start..=n - remaining {
            cur.push(i);
            extend(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        extend(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Table of every principal minor of one matrix, indexed by the bitmask of
/// its index set. The empty minor is 1.
///
/// Minors of a principal submatrix `B[alpha]` are exactly the entries whose
/// mask is contained in `alpha`, so sequences of submatrices are read off
/// this table without further elimination.
#[derive(Debug, Clone)]
pub struct PrincipalMinors {
    n: usize,
    values: Vec<Rational>,
    signs: Vec<Sign>,
}

impl PrincipalMinors {
    pub fn compute(b: &HermitianMatrix) -> Self {
        let n = b.order();
        assert!(n < 32, "principal minor table limited to order < 32");
        let scaled = b.scaled();
        let mut values = Vec::with_capacity(1 << n);
        values.push(Rational::one());
        let mut idx = Vec::with_capacity(n);
        for mask in 1u64..1 << n {
            idx.clear();
            idx.extend((0..n).filter(|i| mask >> i & 1 == 1));
            values.push(scaled.principal_minor(&idx));
        }
        let signs = values.iter().map(Rational::sign).collect();
        PrincipalMinors { n, values, signs }
    }

    /// Builds a table from already computed values (`values[0]` must be 1).
    pub fn from_values(n: usize, values: Vec<Rational>) -> Self {
        assert_eq!(values.len(), 1 << n);
        let signs = values.iter().map(Rational::sign).collect();
        PrincipalMinors { n, values, signs }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn value(&self, mask: u64) -> &Rational {
        &self.values[mask as usize]
    }

    pub fn sign(&self, mask: u64) -> Sign {
        self.signs[mask as usize]
    }

    /// Order-`k` minors in lexicographic subset order.
    pub fn of_order(&self, k: usize) -> Vec<(IndexSet, Rational)> {
        k_subsets(self.n, k)
            .into_iter()
            .map(|s| {
                let set = IndexSet(s);
                let v = self.values[set.mask() as usize].clone();
                (set, v)
            })
            .collect()
    }

    /// Masks of the order-`k` principal minors of the submatrix on `within`.
    pub fn masks_of_order_within(&self, k: usize, within: u64) -> impl Iterator<Item = u64> + '_ {
        let mut sub = within;
        let mut done = false;
        std::iter::from_fn(move || {
            while !done {
                let cur = sub;
                if sub == 0 {
                    done = true;
                } else {
                    sub = (sub - 1) & within;
                }
                if cur.count_ones() as usize == k {
                    return Some(cur);
                }
            }
            None
        })
    }

    /// Signs of the order-`k` principal minors of the submatrix on `within`.
    pub fn signs_of_order_within(&self, k: usize, within: u64) -> impl Iterator<Item = Sign> + '_ {
        self.masks_of_order_within(k, within).map(move |m| self.signs[m as usize])
    }

    /// Largest order of a nonsingular principal submatrix of `B[within]`
    /// (0 if there is none).
    pub fn max_nonsingular_order_within(&self, within: u64) -> usize {
        self.masks_of_order_within_any(within)
            .filter(|&m| self.signs[m as usize] != Sign::Zero)
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn masks_of_order_within_any(&self, within: u64) -> impl Iterator<Item = u64> {
        let mut sub = within;
        let mut done = within == 0;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = sub;
            sub = (sub - 1) & within;
            if sub == 0 {
                done = true;
            }
            Some(cur)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_subsets() {
        assert_eq!(k_subsets(4, 2).len(), 6);
        assert_eq!(k_subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(k_subsets(3, 3), vec![vec![0, 1, 2]]);
        assert!(k_subsets(2, 3).is_empty());
        assert_eq!(k_subsets(6, 3).len(), 20);
    }

    #[test]
    fn submask_enumeration() {
        let b = HermitianMatrix::identity(4).unwrap();
        let t = b.principal_minors();
        let mut got: Vec<u64> = t.masks_of_order_within(2, 0b1011).collect();
        got.sort();
        assert_eq!(got, vec![0b0011, 0b1001, 0b1010]);
        assert_eq!(t.masks_of_order_within(0, 0b11).collect::<Vec<_>>(), vec![0]);
        assert_eq!(t.max_nonsingular_order_within(0b1011), 3);
        assert_eq!(t.max_nonsingular_order_within(0), 0);
    }
}
