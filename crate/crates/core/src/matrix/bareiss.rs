//! Fraction-free elimination over the Gaussian integers `Z[i]`.
//!
//! A Hermitian matrix over `Q(i)` is brought into `Z[i]` by scaling each row
//! by the lcm of its denominators. Bareiss elimination then runs in machine
//! words (`i128`, every operation checked) and is retried over `BigInt` when
//! a word overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::exact::{GaussianRational, Rational};

pub(crate) trait Word: Clone + PartialEq + Sized {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Caller guarantees exact divisibility.
    fn div_exact(&self, o: &Self) -> Self;
    fn to_big(&self) -> BigInt;
}

impl Word for i128 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert_eq!(self % o, 0);
        self / o
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Word for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % o)));
        self / o
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

#[derive(Clone, PartialEq, Debug)]
pub(crate) struct GaussInt<W> {
    pub re: W,
    pub im: W,
}

impl<W: Word> GaussInt<W> {
    fn zero() -> Self {
        GaussInt { re: W::nil(), im: W::nil() }
    }

    fn one() -> Self {
        GaussInt { re: W::unit(), im: W::nil() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_nil() && self.im.is_nil()
    }

    fn add(&self, o: &Self) -> Option<Self> {
        Some(GaussInt { re: self.re.add(&o.re)?, im: self.im.add(&o.im)? })
    }

    fn sub(&self, o: &Self) -> Option<Self> {
        Some(GaussInt { re: self.re.sub(&o.re)?, im: self.im.sub(&o.im)? })
    }

    fn neg(&self) -> Option<Self> {
        Some(GaussInt { re: self.re.neg()?, im: self.im.neg()? })
    }

    fn mul(&self, o: &Self) -> Option<Self> {
        let re = self.re.mul(&o.re)?.sub(&self.im.mul(&o.im)?)?;
        let im = self.re.mul(&o.im)?.add(&self.im.mul(&o.re)?)?;
        Some(GaussInt { re, im })
    }

    /// Exact quotient in `Z[i]`.
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.im.is_nil() {
            return Some(GaussInt { re: self.re.div_exact(&d.re), im: self.im.div_exact(&d.re) });
        }
        let conj = GaussInt { re: d.re.clone(), im: d.im.neg()? };
        let num = self.mul(&conj)?;
        let norm = d.re.mul(&d.re)?.add(&d.im.mul(&d.im)?)?;
        Some(GaussInt { re: num.re.div_exact(&norm), im: num.im.div_exact(&norm) })
    }

    pub fn to_big(&self) -> GaussInt<BigInt> {
        GaussInt { re: self.re.to_big(), im: self.im.to_big() }
    }
}

/// Row-scaled integer image of a matrix over `Q(i)`.
#[derive(Clone, Debug)]
pub(crate) struct ScaledMatrix {
    pub big: Vec<Vec<GaussInt<BigInt>>>,
    pub small: Option<Vec<Vec<GaussInt<i128>>>>,
    /// Positive row multipliers.
    pub scales: Vec<BigInt>,
}

/// Entries beyond this magnitude are not attempted in machine words.
const SMALL_LIMIT: i128 = 1 << 40;

impl ScaledMatrix {
    pub fn new(rows: &[Vec<GaussianRational>]) -> Self {
        let mut big = Vec::with_capacity(rows.len());
        let mut scales = Vec::with_capacity(rows.len());
        for row in rows {
            let scale = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.re.denom()).lcm(x.im.denom()));
            let scaled_row: Vec<GaussInt<BigInt>> = row
                .iter()
                .map(|x| GaussInt {
                    re: x.re.numer() * (&scale / x.re.denom()),
                    im: x.im.numer() * (&scale / x.im.denom()),
                })
                .collect();
            big.push(scaled_row);
            scales.push(scale);
        }
        let small = big
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let re = x.re.to_i128().filter(|v| v.abs() < SMALL_LIMIT)?;
                        let im = x.im.to_i128().filter(|v| v.abs() < SMALL_LIMIT)?;
                        Some(GaussInt { re, im })
                    })
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>();
        ScaledMatrix { big, small, scales }
    }

    /// Determinant of the submatrix on `rows` x `cols` (equal lengths) of the
    /// scaled matrix. Does not undo the scaling.
    pub fn scaled_det(&self, rows: &[usize], cols: &[usize]) -> GaussInt<BigInt> {
        if let Some(small) = &self.small {
            let sub = gather(small, rows, cols);
            if let Some(d) = det(sub) {
                return d.to_big();
            }
        }
        det(gather(&self.big, rows, cols)).expect("BigInt arithmetic cannot overflow")
    }

    /// Rank of the submatrix on `rows` x `cols`; row scaling preserves rank.
    pub fn rank(&self, rows: &[usize], cols: &[usize]) -> usize {
        if let Some(small) = &self.small {
            if let Some(r) = rank(gather(small, rows, cols)) {
                return r;
            }
        }
        rank(gather(&self.big, rows, cols)).expect("BigInt arithmetic cannot overflow")
    }

    /// Exact determinant of the original (unscaled) principal submatrix on
    /// `indices`; panics if the result is not real.
    pub fn principal_minor(&self, indices: &[usize]) -> Rational {
        let d = self.scaled_det(indices, indices);
        assert!(Zero::is_zero(&d.im), "principal minor with nonzero imaginary part: Hermitian invariant violated");
        let denom = indices.iter().fold(BigInt::one(), |acc, &i| acc * &self.scales[i]);
        Rational::new(d.re, denom).expect("row scales are positive")
    }
}

fn gather<W: Clone>(m: &[Vec<GaussInt<W>>], rows: &[usize], cols: &[usize]) -> Vec<Vec<GaussInt<W>>> {
    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect()
}

/// Determinant in `Z[i]`: cofactor formulas up to order 3, Bareiss beyond.
/// `None` on word overflow.
pub(crate) fn det<W: Word>(mut m: Vec<Vec<GaussInt<W>>>) -> Option<GaussInt<W>> {
    let n = m.len();
    match n {
        0 => return Some(GaussInt::one()),
        1 => return Some(m[0][0].clone()),
        2 => return m[0][0].mul(&m[1][1])?.sub(&m[0][1].mul(&m[1][0])?),
        3 => {
            let minor = |a: usize, b: usize, c: usize, d: usize| -> Option<GaussInt<W>> {
                m[1][a].mul(&m[2][b])?.sub(&m[1][c].mul(&m[2][d])?)
            };
            let t0 = m[0][0].mul(&minor(1, 2, 2, 1)?)?;
            let t1 = m[0][1].mul(&minor(0, 2, 2, 0)?)?;
            let t2 = m[0][2].mul(&minor(0, 1, 1, 0)?)?;
            return t0.sub(&t1)?.add(&t2);
        }
        _ => {}
    }
    let mut negate = false;
    let mut prev = GaussInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Some(GaussInt::zero());
            };
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j])?.sub(&m[i][k].mul(&m[k][j])?)?;
                m[i][j] = t.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        Some(d)
    }
}

/// Fraction-free row echelon rank. `None` on word overflow.
pub(crate) fn rank<W: Word>(mut m: Vec<Vec<GaussInt<W>>>) -> Option<usize> {
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = GaussInt::one();
    for col in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        for i in r + 1..n_rows {
            for j in col + 1..n_cols {
                let t = m[r][col].mul(&m[i][j])?.sub(&m[i][col].mul(&m[r][j])?)?;
                m[i][j] = t.div_exact(&prev)?;
            }
            m[i][col] = GaussInt::zero();
        }
        prev = m[r][col].clone();
        r += 1;
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(rows: &[&[(i128, i128)]]) -> Vec<Vec<GaussInt<i128>>> {
        rows.iter().map(|r| r.iter().map(|&(re, im)| GaussInt { re, im }).collect()).collect()
    }

    #[test]
    fn bareiss_matches_small_cases() {
        // [[0, i], [-i, 0]] has determinant -1.
        let m = gi(&[&[(0, 0), (0, 1)], &[(0, -1), (0, 0)]]);
        assert_eq!(det(m), Some(GaussInt { re: -1, im: 0 }));
        // 4x4 needing a pivot swap: permutation matrix of (1 2)(3 4) has det +1.
        let p = gi(&[
            &[(0, 0), (1, 0), (0, 0), (0, 0)],
            &[(1, 0), (0, 0), (0, 0), (0, 0)],
            &[(0, 0), (0, 0), (0, 0), (1, 0)],
            &[(0, 0), (0, 0), (1, 0), (0, 0)],
        ]);
        assert_eq!(det(p), Some(GaussInt { re: 1, im: 0 }));
    }

    #[test]
    fn overflow_is_reported_not_wrapped() {
        let huge = i128::MAX / 2;
        let m = gi(&[&[(huge, 0), (1, 0)], &[(1, 0), (huge, 0)]]);
        assert_eq!(det(m), None);
    }

    #[test]
    fn echelon_rank() {
        let m = gi(&[&[(1, 0), (2, 0), (3, 0)], &[(2, 0), (4, 0), (6, 0)], &[(0, 1), (0, 0), (1, 0)]]);
        assert_eq!(rank(m), Some(2));
    }
}
