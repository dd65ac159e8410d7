//! Shared oracles and generators for the integration tests.

#![allow(dead_code)]

use proptest::prelude::*;
use sepr::exact::{GaussianRational, Rational};
use sepr::matrix::HermitianMatrix;

/// Cofactor expansion along the first row. Exponential, fine for n <= 6.
pub fn laplace_det(rows: &[Vec<GaussianRational>]) -> GaussianRational {
    let n = rows.len();
    if n == 0 {
        return GaussianRational::one();
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut total = GaussianRational::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<GaussianRational>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &rows[0][j] * &laplace_det(&minor);
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// Every k-element subset of `0..n`, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn select(rows: &[Vec<GaussianRational>], r: &[usize], c: &[usize]) -> Vec<Vec<GaussianRational>> {
    r.iter().map(|&i| c.iter().map(|&j| rows[i][j].clone()).collect()).collect()
}

/// Rank as the largest order of a nonzero minor, principal or not.
pub fn minor_rank(rows: &[Vec<GaussianRational>]) -> usize {
    let n = rows.len();
    (1..=n)
        .rev()
        .find(|&k| {
            let sets = subsets(n, k);
            sets.iter().any(|r| sets.iter().any(|c| !laplace_det(&select(rows, r, c)).is_zero()))
        })
        .unwrap_or(0)
}

/// Principal minor over `alpha` via the Laplace oracle; always real.
pub fn laplace_principal(b: &HermitianMatrix, alpha: &[usize]) -> Rational {
    let d = laplace_det(&select(b.rows(), alpha, alpha));
    assert!(d.is_real(), "principal minor of a Hermitian matrix must be real");
    d.re
}

pub fn multiply(a: &[Vec<GaussianRational>], b: &[Vec<GaussianRational>]) -> Vec<Vec<GaussianRational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n).map(|j| (0..n).fold(GaussianRational::zero(), |acc, k| &acc + &(&a[i][k] * &b[k][j]))).collect()
        })
        .collect()
}

fn from_upper(n: usize, diag: &[i64], upper: &[(i64, i64)]) -> HermitianMatrix {
    let mut rows = vec![vec![GaussianRational::zero(); n]; n];
    let mut k = 0;
    for i in 0..n {
        rows[i][i] = GaussianRational::from(diag[i]);
        for j in i + 1..n {
            let z = GaussianRational::from_integers(upper[k].0, upper[k].1);
            rows[j][i] = z.conj();
            rows[i][j] = z;
            k += 1;
        }
    }
    HermitianMatrix::new(rows).expect("conjugate symmetric by construction")
}

/// Sum of `r` signed rank-one terms `±x x*`, so singular matrices are common.
fn low_rank(n: usize, vectors: &[Vec<(i64, i64)>], signs: &[bool]) -> HermitianMatrix {
    HermitianMatrix::from_fn(n, |i, j| {
        vectors.iter().zip(signs).fold(GaussianRational::zero(), |acc, (x, &plus)| {
            let xi = GaussianRational::from_integers(x[i].0, x[i].1);
            let xj = GaussianRational::from_integers(x[j].0, x[j].1);
            let t = &xi * &xj.conj();
            if plus {
                &acc + &t
            } else {
                &acc - &t
            }
        })
    })
    .expect("sum of Hermitian terms")
}

fn entries(n: usize, real: bool) -> impl Strategy<Value = HermitianMatrix> {
    let m = n * (n - 1) / 2;
    let im = if real { 0..=0i64 } else { -2..=2i64 };
    let entry = prop_oneof![3 => Just((0i64, 0i64)), 7 => (-2..=2i64, im)];
    (proptest::collection::vec(prop_oneof![1 => Just(0i64), 3 => -2..=2i64], n), proptest::collection::vec(entry, m))
        .prop_map(move |(d, u)| from_upper(n, &d, &u))
}

fn rank_deficient(n: usize, real: bool) -> impl Strategy<Value = HermitianMatrix> {
    let im = if real { 0..=0i64 } else { -1..=1i64 };
    (1..n.max(2)).prop_flat_map(move |r| {
        (
            proptest::collection::vec(proptest::collection::vec((-1..=1i64, im.clone()), n), r),
            proptest::collection::vec(any::<bool>(), r),
        )
            .prop_map(move |(v, s)| low_rank(n, &v, &s))
    })
}

/// Hermitian matrices of order `lo..=hi` with small Gaussian integer entries.
pub fn hermitian(lo: usize, hi: usize) -> impl Strategy<Value = HermitianMatrix> {
    (lo..=hi).prop_flat_map(|n| prop_oneof![2 => entries(n, false), 1 => rank_deficient(n, false)])
}

/// Real symmetric matrices of order `lo..=hi`.
pub fn real_symmetric(lo: usize, hi: usize) -> impl Strategy<Value = HermitianMatrix> {
    (lo..=hi).prop_flat_map(|n| prop_oneof![2 => entries(n, true), 1 => rank_deficient(n, true)])
}

/// Either field, tagged with whether it is real.
pub fn any_matrix(lo: usize, hi: usize) -> impl Strategy<Value = HermitianMatrix> {
    prop_oneof![hermitian(lo, hi), real_symmetric(lo, hi)]
}
