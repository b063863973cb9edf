use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sparse matrix over [`Scalar`], stored row-wise with columns sorted and no
/// explicit zeros. Two matrices are equal iff their shapes and entries agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseMat {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMat { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar_identity(n, &Scalar::one())
    }

    pub fn scalar_identity(n: usize, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zeros(n, n);
        }
        let rows = (0..n).map(|i| vec![(i, c.clone())]).collect();
        SparseMat { nrows: n, ncols: n, rows }
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triplets<I>(nrows: usize, ncols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nrows];
        for (r, c, v) in triplets {
            if r >= nrows || c >= ncols {
                return Err(Error::IndexOutOfRange {
                    what: "matrix entry",
                    index: vec![r, c],
                    bound: vec![nrows, ncols],
                });
            }
            rows[r].push((c, v));
        }
        for row in &mut rows {
            row.sort_by_key(|(c, _)| *c);
            let mut merged: Vec<(usize, Scalar)> = Vec::with_capacity(row.len());
            for (c, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv += &v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *row = merged;
        }
        Ok(SparseMat { nrows, ncols, rows })
    }

    /// Dense integer literal, row-major.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let triplets = rows.iter().enumerate().flat_map(|(i, r)| {
            assert_eq!(r.len(), ncols, "ragged literal");
            r.iter().enumerate().map(move |(j, &v)| (i, j, Scalar::from(v)))
        });
        Self::from_triplets(nrows, ncols, triplets).expect("literal in range")
    }

    pub fn from_scalar_rows(rows: &[Vec<Scalar>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let triplets =
            rows.iter().enumerate().flat_map(|(i, r)| r.iter().enumerate().map(move |(j, v)| (i, j, v.clone())));
        Self::from_triplets(nrows, ncols, triplets).expect("literal in range")
    }

    /// The elementary matrix `e_{x,y}` of size `n`, with 1-based `x`, `y`.
    pub fn elementary(n: usize, x: usize, y: usize) -> Self {
        assert!((1..=n).contains(&x) && (1..=n).contains(&y), "e_{{{x},{y}}} outside [1,{n}]");
        let mut m = Self::zeros(n, n);
        m.rows[x - 1].push((y - 1, Scalar::one()));
        m
    }

    pub fn diagonal(diag: &[Scalar]) -> Self {
        let n = diag.len();
        Self::from_triplets(n, n, diag.iter().enumerate().map(|(i, v)| (i, i, v.clone()))).expect("diagonal in range")
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn row(&self, r: usize) -> &[(usize, Scalar)] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.rows[r].binary_search_by_key(&c, |(col, _)| *col).map(|i| self.rows[r][i].1.clone()).unwrap_or_default()
    }

    /// Nonzero entries in `(row, col)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.rows.iter().enumerate().all(|(i, row)| row.len() == 1 && row[0].0 == i && row[0].1.is_one())
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(r, c, _)| r == c)
    }

    pub fn canonical(&self) -> Self {
        Self::from_triplets(self.nrows, self.ncols, self.entries().map(|(r, c, v)| (r, c, v.canonical())))
            .expect("entries already in range")
    }

    pub fn try_mul(&self, other: &SparseMat) -> Result<SparseMat> {
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch { op: "mat_mul", left: self.shape(), right: other.shape() });
        }
        let mut acc: Vec<Scalar> = vec![Scalar::zero(); other.ncols];
        let mut touched: Vec<usize> = Vec::new();
        let mut seen = vec![false; other.ncols];
        let mut rows = Vec::with_capacity(self.nrows);
        for arow in &self.rows {
            for (k, a) in arow {
                for (c, b) in &other.rows[*k] {
                    if !seen[*c] {
                        seen[*c] = true;
                        touched.push(*c);
                    }
                    acc[*c] += &(a * b);
                }
            }
            touched.sort_unstable();
            let mut row = Vec::with_capacity(touched.len());
            for &c in &touched {
                seen[c] = false;
                let v = std::mem::take(&mut acc[c]);
                if !v.is_zero() {
                    row.push((c, v));
                }
            }
            touched.clear();
            rows.push(row);
        }
        Ok(SparseMat { nrows: self.nrows, ncols: other.ncols, rows })
    }

    fn zip_rows(&self, other: &SparseMat, op: &'static str, sign: bool) -> Result<SparseMat> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch { op, left: self.shape(), right: other.shape() });
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
                    let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
                    if take_a {
                        out.push(a[i].clone());
                        i += 1;
                    } else if take_b {
                        let v = if sign { b[j].1.clone() } else { -&b[j].1 };
                        out.push((b[j].0, v));
                        j += 1;
                    } else {
                        let v = if sign { &a[i].1 + &b[j].1 } else { &a[i].1 - &b[j].1 };
                        if !v.is_zero() {
                            out.push((a[i].0, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                out
            })
            .collect();
        Ok(SparseMat { nrows: self.nrows, ncols: self.ncols, rows })
    }

    pub fn try_add(&self, other: &SparseMat) -> Result<SparseMat> {
        self.zip_rows(other, "mat_add", true)
    }

    pub fn try_sub(&self, other: &SparseMat) -> Result<SparseMat> {
        self.zip_rows(other, "mat_sub", false)
    }

    pub fn scale(&self, c: &Scalar) -> SparseMat {
        if c.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        let rows = self.rows.iter().map(|row| row.iter().map(|(j, v)| (*j, v * c)).collect()).collect();
        SparseMat { nrows: self.nrows, ncols: self.ncols, rows }
    }

    /// Kronecker product; the left factor indexes the most significant block.
    pub fn kron(&self, other: &SparseMat) -> SparseMat {
        let nrows = self.nrows * other.nrows;
        let ncols = self.ncols * other.ncols;
        let mut rows = Vec::with_capacity(nrows);
        for arow in &self.rows {
            for brow in &other.rows {
                let mut row = Vec::with_capacity(arow.len() * brow.len());
                for (ac, av) in arow {
                    for (bc, bv) in brow {
                        row.push((ac * other.ncols + bc, av * bv));
                    }
                }
                rows.push(row);
            }
        }
        SparseMat { nrows, ncols, rows }
    }

    pub fn transpose(&self) -> SparseMat {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.ncols];
        for (r, c, v) in self.entries() {
            rows[c].push((r, v.clone()));
        }
        SparseMat { nrows: self.ncols, ncols: self.nrows, rows }
    }

    pub fn conj_transpose(&self) -> SparseMat {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.ncols];
        for (r, c, v) in self.entries() {
            rows[c].push((r, v.conj()));
        }
        SparseMat { nrows: self.ncols, ncols: self.nrows, rows }
    }

    pub fn pow(&self, e: u32) -> SparseMat {
        assert!(self.is_square());
        (0..e).fold(Self::identity(self.nrows), |acc, _| &acc * self)
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &SparseMat) -> SparseMat {
        &(self * other) - &(other * self)
    }

    /// `[[A, B]] = AB + BA`.
    pub fn anticommutator(&self, other: &SparseMat) -> SparseMat {
        &(self * other) + &(other * self)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.nrows.min(self.ncols)).map(|i| self.get(i, i)).sum()
    }

    pub fn try_apply(&self, v: &Vector) -> Result<Vector> {
        if self.ncols != v.len() {
            return Err(Error::DimensionMismatch { op: "mat_vec", left: self.shape(), right: (v.len(), 1) });
        }
        let out = self
            .rows
            .iter()
            .map(|row| {
                row.iter().filter(|(c, _)| !v.0[*c].is_zero()).fold(Scalar::zero(), |mut acc, (c, a)| {
                    acc += &(a * &v.0[*c]);
                    acc
                })
            })
            .collect();
        Ok(Vector(out))
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.try_apply(v).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Restriction to the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SparseMat {
        let mut col_pos = vec![usize::MAX; self.ncols];
        for (i, &c) in cols.iter().enumerate() {
            col_pos[c] = i;
        }
        let rows_out = rows
            .iter()
            .map(|&r| {
                let mut row: Vec<(usize, Scalar)> = self.rows[r]
                    .iter()
                    .filter(|(c, _)| col_pos[*c] != usize::MAX)
                    .map(|(c, v)| (col_pos[*c], v.clone()))
                    .collect();
                row.sort_by_key(|(c, _)| *c);
                row
            })
            .collect();
        SparseMat { nrows: rows.len(), ncols: cols.len(), rows: rows_out }
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(); self.ncols]; self.nrows];
        for (r, c, v) in self.entries() {
            out[r][c] = v.clone();
        }
        out
    }

    /// Column `c` as a dense vector.
    pub fn column(&self, c: usize) -> Vector {
        Vector((0..self.nrows).map(|r| self.get(r, c)).collect())
    }

    pub fn from_columns(columns: &[Vector]) -> SparseMat {
        let nrows = columns.first().map_or(0, Vector::len);
        let triplets = columns.iter().enumerate().flat_map(|(c, v)| v.nonzeros().map(move |(r, x)| (r, c, x.clone())));
        Self::from_triplets(nrows, columns.len(), triplets).expect("columns share length")
    }

    /// Positions where `self` and `other` differ, with both values.
    pub fn diff_entries(&self, other: &SparseMat) -> Vec<(usize, usize, Scalar, Scalar)> {
        assert_eq!(self.shape(), other.shape());
        let d = self - other;
        d.entries().map(|(r, c, _)| (r, c, self.get(r, c), other.get(r, c))).collect()
    }
}

/// Sum of Kronecker products `a_1 ⊗ a_2 ⊗ … ⊗ a_N`.
pub fn kron_all<'a, I: IntoIterator<Item = &'a SparseMat>>(factors: I) -> SparseMat {
    factors.into_iter().fold(SparseMat::identity(1), |acc, f| acc.kron(f))
}

macro_rules! mat_op {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&SparseMat> for &SparseMat {
            type Output = SparseMat;
            fn $method(self, rhs: &SparseMat) -> SparseMat {
                self.$inner(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<SparseMat> for SparseMat {
            type Output = SparseMat;
            fn $method(self, rhs: SparseMat) -> SparseMat {
                (&self).$method(&rhs)
            }
        }
    };
}

mat_op!(Mul, mul, try_mul);
mat_op!(Add, add, try_add);
mat_op!(Sub, sub, try_sub);

impl Neg for &SparseMat {
    type Output = SparseMat;
    fn neg(self) -> SparseMat {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Debug for SparseMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMat {}x{} [", self.nrows, self.ncols)?;
        for (r, c, v) in self.entries() {
            writeln!(f, "  ({r},{c}) = {v}")?;
        }
        write!(f, "]")
    }
}

/// Dense exact column vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.0.iter().enumerate().filter(|(_, v)| !v.is_zero())
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|v| v * c).collect())
    }

    pub fn kron(&self, other: &Vector) -> Vector {
        let mut out = Vec::with_capacity(self.len() * other.len());
        for a in &self.0 {
            for b in &other.0 {
                out.push(a * b);
            }
        }
        Vector(out)
    }

    /// `⟨self, other⟩ = self† · other`.
    pub fn inner(&self, other: &Vector) -> Scalar {
        assert_eq!(self.len(), other.len());
        self.nonzeros().filter(|(i, _)| !other.0[*i].is_zero()).map(|(i, a)| a.conj() * &other.0[i]).sum()
    }

    /// `Some(c)` when `self = c · other` (with `other ≠ 0`).
    pub fn multiple_of(&self, other: &Vector) -> Option<Scalar> {
        let (pivot, pv) = other.nonzeros().next()?;
        let c = &self.0[pivot] / pv;
        (*self == other.scale(&c)).then_some(c)
    }

    /// Componentwise differences `(index, expected = other, actual = self)`.
    pub fn diff_entries(&self, expected: &Vector) -> Vec<(usize, Scalar, Scalar)> {
        assert_eq!(self.len(), expected.len());
        self.0
            .iter()
            .zip(&expected.0)
            .enumerate()
            .filter(|(_, (a, e))| a != e)
            .map(|(i, (a, e))| (i, e.clone(), a.clone()))
            .collect()
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vector[")?;
        let mut first = true;
        for (i, v) in self.nonzeros() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{i}: {v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn identity_times_a() {
        let a = SparseMat::from_int_rows(&[&[1, 2, 0, 0], &[0, 0, 3, 0], &[4, 0, 0, 5], &[0, 6, 0, 0]]);
        assert_eq!(&SparseMat::identity(4) * &a, a);
    }

    #[test]
    fn elementary_products() {
        let e12 = SparseMat::elementary(2, 1, 2);
        let e21 = SparseMat::elementary(2, 2, 1);
        assert_eq!(&e12 * &e21, SparseMat::elementary(2, 1, 1));
        assert!((&e21 * &e21).is_zero());
    }

    #[test]
    fn hand_multiplication() {
        let a = SparseMat::from_scalar_rows(&[vec![q(1, 2), q(0, 1)], vec![q(1, 1), q(-1, 1)]]);
        let b = SparseMat::from_int_rows(&[&[2, 0], &[0, 3]]);
        assert_eq!(&a * &b, SparseMat::from_int_rows(&[&[1, 0], &[2, -3]]));
    }

    #[test]
    fn mismatch_names_both_shapes() {
        let a = SparseMat::zeros(2, 3);
        let b = SparseMat::zeros(2, 3);
        let err = a.try_mul(&b).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("2x3") && msg.contains("mat_mul"), "{msg}");
    }

    #[test]
    fn kron_identities() {
        assert_eq!(SparseMat::identity(2).kron(&SparseMat::identity(2)), SparseMat::identity(4));
        let k = SparseMat::elementary(2, 1, 1).kron(&SparseMat::elementary(2, 2, 2));
        assert_eq!(k.nnz(), 1);
        assert!(k.get(1, 1).is_one());
    }

    #[test]
    fn swap_from_elementary_sum() {
        let mut p = SparseMat::zeros(4, 4);
        for x in 1..=2 {
            for y in 1..=2 {
                p = &p + &SparseMat::elementary(2, x, y).kron(&SparseMat::elementary(2, y, x));
            }
        }
        let swap = SparseMat::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        assert_eq!(p, swap);
    }

    #[test]
    fn cancellation_leaves_no_zero_entries() {
        let a = SparseMat::from_int_rows(&[&[1, 1], &[0, 1]]);
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.nnz(), 0);
        assert_eq!(d, SparseMat::zeros(2, 2));
    }

    #[test]
    fn vector_multiple_detection() {
        let v = Vector(vec![Scalar::from(2), Scalar::zero(), Scalar::from(-4)]);
        let w = Vector(vec![Scalar::from(-1), Scalar::zero(), Scalar::from(2)]);
        assert_eq!(v.multiple_of(&w), Some(Scalar::from(-2)));
        let u = Vector(vec![Scalar::from(1), Scalar::one(), Scalar::from(2)]);
        assert_eq!(v.multiple_of(&u), None);
        assert_eq!(v.multiple_of(&Vector::zeros(3)), None);
    }

    #[test]
    fn inner_product_conjugates_left() {
        let v = Vector(vec![Scalar::i(), Scalar::one()]);
        assert_eq!(v.inner(&v), Scalar::from(2));
    }
}
