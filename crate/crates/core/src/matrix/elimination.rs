//! Gaussian elimination over any exact field.

use crate::exact::FieldScalar;

/// Determinant by partial-pivot elimination (first nonzero pivot).
pub fn determinant<T: FieldScalar>(rows: &[Vec<T>]) -> T {
    let n = rows.len();
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let mut det = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return T::zero();
        };
        if p != k {
            m.swap(p, k);
            det = det.neg();
        }
        let pivot = m[k][k].clone();
        det = det.mul(&pivot);
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].checked_div(&pivot).expect("pivot is nonzero");
            for j in k + 1..n {
                let t = factor.mul(&m[k][j]);
                m[i][j] = m[i][j].sub(&t);
            }
        }
    }
    det
}

/// Rank of a rectangular matrix.
pub fn rank<T: FieldScalar>(rows: &[Vec<T>]) -> usize {
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let pivot = m[r][col].clone();
        for i in r + 1..n_rows {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = m[i][col].checked_div(&pivot).expect("pivot is nonzero");
            for j in col..n_cols {
                let t = factor.mul(&m[r][j]);
                m[i][j] = m[i][j].sub(&t);
            }
        }
        r += 1;
    }
    r
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn inverse<T: FieldScalar>(rows: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let n = rows.len();
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let mut inv: Vec<Vec<T>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect()).collect();
    for k in 0..n {
        let p = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(p, k);
        inv.swap(p, k);
        let pivot = m[k][k].clone();
        for j in 0..n {
            m[k][j] = m[k][j].checked_div(&pivot).expect("pivot is nonzero");
            inv[k][j] = inv[k][j].checked_div(&pivot).expect("pivot is nonzero");
        }
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].clone();
            for j in 0..n {
                let t = factor.mul(&m[k][j]);
                m[i][j] = m[i][j].sub(&t);
                let t = factor.mul(&inv[k][j]);
                inv[i][j] = inv[i][j].sub(&t);
            }
        }
    }
    Some(inv)
}

pub fn multiply<T: FieldScalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).fold(T::zero(), |acc, k| acc.add(&row[k].mul(&b[k][j])))).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&q(&[&[0, 1], &[1, 0]])), Rational::from(-1));
        assert_eq!(determinant(&q(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]])), Rational::from(24));
        assert_eq!(determinant(&q(&[&[1, 2], &[2, 4]])), Rational::zero());
    }

    #[test]
    fn rank_of_rectangular() {
        assert_eq!(rank(&q(&[&[1, 2, 3], &[2, 4, 6]])), 1);
        assert_eq!(rank(&q(&[&[0, 0, 1], &[0, 1, 0]])), 2);
        assert_eq!(rank(&q(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn inverse_product_is_identity() {
        let a = q(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(multiply(&a, &inv), q(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert!(inverse(&q(&[&[1, 1], &[1, 1]])).is_none());
    }
}
