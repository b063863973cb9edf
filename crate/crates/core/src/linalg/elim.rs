#![allow(clippy::needless_range_loop)]

//! Exact elimination: rank, right nullspace, inverse.
//!
//! Everything here works on a dense copy of the input. Rows are first scaled
//! to Gaussian integers and then reduced with the Bareiss update
//! `row_i ← (p·row_i − a·row_r) / p_prev`, which keeps intermediate entries
//! integral.

use crate::error::{Error, Result};
use crate::linalg::sparse::{SparseMat, Vector};
use crate::scalar::Scalar;

struct Echelon {
    rows: Vec<Vec<Scalar>>,
    /// `(row, col)` of each pivot, in increasing column order.
    pivots: Vec<(usize, usize)>,
    ncols: usize,
}

fn integral_rows(a: &SparseMat) -> Vec<Vec<Scalar>> {
    a.to_dense()
        .into_iter()
        .map(|row| {
            let lcm = row
                .iter()
                .filter(|v| !v.is_zero())
                .fold(num_bigint::BigInt::from(1), |acc, v| num_integer::Integer::lcm(&acc, &v.denom_lcm()));
            let s = Scalar::from(num_rational::BigRational::from_integer(lcm));
            row.iter().map(|v| v * &s).collect()
        })
        .collect()
}

fn bareiss(a: &SparseMat) -> Echelon {
    let mut m = integral_rows(a);
    let (nrows, ncols) = a.shape();
    let mut prev = Scalar::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(i) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, i);
        let p = m[r][c].clone();
        for i in r + 1..nrows {
            if m[i][c].is_zero() {
                if !prev.is_one() {
                    // keep the Bareiss invariant: untouched rows are scaled too
                    for j in c + 1..ncols {
                        if !m[i][j].is_zero() {
                            m[i][j] = &(&p * &m[i][j]) / &prev;
                        }
                    }
                } else if !p.is_one() {
                    for j in c + 1..ncols {
                        if !m[i][j].is_zero() {
                            m[i][j] = &p * &m[i][j];
                        }
                    }
                }
                continue;
            }
            let a_ic = std::mem::take(&mut m[i][c]);
            for j in c + 1..ncols {
                let v = &(&p * &m[i][j]) - &(&a_ic * &m[r][j]);
                m[i][j] = if prev.is_one() { v } else { &v / &prev };
            }
        }
        prev = p;
        pivots.push((r, c));
        r += 1;
    }
    Echelon { rows: m, pivots, ncols }
}

/// Exact rank.
pub fn rank(a: &SparseMat) -> usize {
    bareiss(a).pivots.len()
}

/// Basis of `{v : A v = 0}`. One vector per free column, in increasing
/// column order; each has a 1 in its free column and zeros in the other free
/// columns.
pub fn kernel_basis(a: &SparseMat) -> Vec<Vector> {
    let Echelon { mut rows, pivots, ncols } = bareiss(a);
    // Back substitution to reduced row echelon form over Q(i).
    for (idx, &(r, c)) in pivots.iter().enumerate().rev() {
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for j in c..ncols {
            if !rows[r][j].is_zero() {
                rows[r][j] = &rows[r][j] * &inv;
            }
        }
        for &(r2, _) in &pivots[..idx] {
            let f = rows[r2][c].clone();
            if f.is_zero() {
                continue;
            }
            for j in c..ncols {
                if !rows[r][j].is_zero() {
                    let d = &f * &rows[r][j];
                    rows[r2][j] -= &d;
                }
            }
        }
    }
    let mut is_pivot = vec![false; ncols];
    for &(_, c) in &pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = Vector::zeros(ncols);
            v.0[f] = Scalar::one();
            for &(r, c) in &pivots {
                v.0[c] = -&rows[r][f];
            }
            v
        })
        .collect()
}

/// Exact inverse by Gauss–Jordan elimination.
pub fn inverse(a: &SparseMat) -> Result<SparseMat> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch { op: "inverse", left: a.shape(), right: a.shape() });
    }
    let n = a.nrows();
    if a.is_diagonal() {
        let mut diag = Vec::with_capacity(n);
        for i in 0..n {
            match a.get(i, i).inv() {
                Some(v) => diag.push(v),
                None => {
                    return Err(Error::Singular { rank: rank(a), dim: n });
                }
            }
        }
        return Ok(SparseMat::diagonal(&diag));
    }
    let mut m = a.to_dense();
    let mut inv: Vec<Vec<Scalar>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Err(Error::Singular { rank: rank(a), dim: n });
        };
        m.swap(c, p);
        inv.swap(c, p);
        let pinv = m[c][c].inv().expect("nonzero pivot");
        for j in 0..n {
            m[c][j] = &m[c][j] * &pinv;
            inv[c][j] = &inv[c][j] * &pinv;
        }
        for i in 0..n {
            if i == c || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in 0..n {
                if !m[c][j].is_zero() {
                    let d = &f * &m[c][j];
                    m[i][j] -= &d;
                }
                if !inv[c][j].is_zero() {
                    let d = &f * &inv[c][j];
                    inv[i][j] -= &d;
                }
            }
        }
    }
    Ok(SparseMat::from_scalar_rows(&inv))
}

/// Rank of the matrix whose columns are `vectors`.
pub fn rank_of_vectors(vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&SparseMat::from_columns(vectors))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force rank for tiny integer matrices: the largest k with a
    /// nonzero k×k minor, minors by cofactor expansion.
    fn det(m: &[Vec<Scalar>]) -> Scalar {
        let n = m.len();
        if n == 0 {
            return Scalar::one();
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<Scalar>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                Scalar::sign_pow(j as i64) * &m[0][j] * det(&minor)
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }

    fn brute_rank(a: &SparseMat) -> usize {
        let d = a.to_dense();
        let (r, c) = a.shape();
        (1..=r.min(c))
            .rev()
            .find(|&k| {
                subsets(r, k).iter().any(|rs| {
                    subsets(c, k).iter().any(|cs| {
                        let minor: Vec<Vec<Scalar>> =
                            rs.iter().map(|&i| cs.iter().map(|&j| d[i][j].clone()).collect()).collect();
                        !det(&minor).is_zero()
                    })
                })
            })
            .unwrap_or(0)
    }

    fn swap4() -> SparseMat {
        SparseMat::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&SparseMat::identity(5)), 5);
        assert_eq!(rank(&SparseMat::zeros(3, 3)), 0);
        let d = &swap4() - &SparseMat::identity(4);
        assert_eq!(brute_rank(&d), 1);
        assert_eq!(rank(&d), 1);
    }

    #[test]
    fn rank_matches_minor_oracle() {
        let cases = [
            SparseMat::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]),
            SparseMat::from_int_rows(&[&[0, 0, 0], &[0, 0, 5], &[0, 3, 0]]),
            SparseMat::from_int_rows(&[&[2, -1, 0, 1], &[4, -2, 0, 2], &[0, 0, 0, 0]]),
            SparseMat::from_int_rows(&[&[1, 1], &[1, -1], &[2, 0]]),
        ];
        for a in &cases {
            assert_eq!(rank(a), brute_rank(a), "{a:?}");
        }
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&SparseMat::identity(3)).is_empty());
        let k = kernel_basis(&SparseMat::elementary(2, 1, 1));
        assert_eq!(k, vec![Vector::basis(2, 1)]);
    }

    #[test]
    fn kernel_vectors_annihilate_and_are_independent() {
        let a = SparseMat::from_int_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 4 - rank(&a));
        for v in &k {
            assert!(a.apply(v).is_zero());
        }
        assert_eq!(rank_of_vectors(&k), k.len());
    }

    #[test]
    fn complex_kernel() {
        // [[1, i], [i, -1]] has rank 1, kernel spanned by (-i, 1).
        let a = SparseMat::from_scalar_rows(&[vec![Scalar::one(), Scalar::i()], vec![Scalar::i(), -Scalar::one()]]);
        let k = kernel_basis(&a);
        assert_eq!(k, vec![Vector(vec![-Scalar::i(), Scalar::one()])]);
    }

    #[test]
    fn inverse_round_trip() {
        let a = SparseMat::from_scalar_rows(&[
            vec![Scalar::from(2), Scalar::ratio(1, 3), Scalar::zero()],
            vec![Scalar::zero(), Scalar::one(), Scalar::i()],
            vec![Scalar::one(), Scalar::zero(), Scalar::from(-1)],
        ]);
        let inv = inverse(&a).unwrap();
        assert!((&a * &inv).is_identity());
        assert!((&inv * &a).is_identity());
    }

    #[test]
    fn singular_inverse_reports_rank() {
        let a = SparseMat::from_int_rows(&[&[1, 2], &[2, 4]]);
        match inverse(&a) {
            Err(Error::Singular { rank, dim }) => assert_eq!((rank, dim), (1, 2)),
            other => panic!("expected singular error, got {other:?}"),
        }
    }
}
