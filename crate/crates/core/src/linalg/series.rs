use crate::error::{Error, Result};
use crate::linalg::elim;
use crate::linalg::sparse::SparseMat;
use crate::scalar::Scalar;

/// Truncated power series `Σ_{p ≤ K} u^p S_p` with square matrix coefficients
/// of a common size. Products discard degrees above `K` and nothing else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatSeries {
    coeffs: Vec<SparseMat>,
}

impl MatSeries {
    /// Pads or truncates `coeffs` to `order + 1` terms.
    pub fn new(order: usize, mut coeffs: Vec<SparseMat>) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return Err(Error::InvalidParams("series needs at least one coefficient".into()));
        };
        let shape = first.shape();
        if let Some(bad) = coeffs.iter().find(|c| c.shape() != shape) {
            return Err(Error::DimensionMismatch { op: "series", left: shape, right: bad.shape() });
        }
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, SparseMat::zeros(shape.0, shape.1));
        Ok(MatSeries { coeffs })
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        MatSeries::new(order, vec![SparseMat::identity(dim)]).expect("one coefficient")
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.coeffs[0].nrows()
    }

    pub fn coeff(&self, p: usize) -> &SparseMat {
        &self.coeffs[p]
    }

    pub fn coeffs(&self) -> &[SparseMat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<SparseMat> {
        self.coeffs
    }

    pub fn try_mul(&self, other: &MatSeries) -> Result<MatSeries> {
        if self.order() != other.order() {
            return Err(Error::InvalidParams(format!("series orders differ: {} vs {}", self.order(), other.order())));
        }
        let k = self.order();
        let mut out = Vec::with_capacity(k + 1);
        for p in 0..=k {
            let mut acc = SparseMat::zeros(self.dim(), other.coeffs[0].ncols());
            for q in 0..=p {
                let (a, b) = (&self.coeffs[q], &other.coeffs[p - q]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = &acc + &a.try_mul(b)?;
            }
            out.push(acc);
        }
        Ok(MatSeries { coeffs: out })
    }

    /// `S(−u)`: flips the sign of odd coefficients.
    pub fn negate_parameter(&self) -> MatSeries {
        let coeffs = self.coeffs.iter().enumerate().map(|(p, c)| if p % 2 == 1 { -c } else { c.clone() }).collect();
        MatSeries { coeffs }
    }

    pub fn map(&self, f: impl Fn(&SparseMat) -> SparseMat) -> MatSeries {
        let coeffs: Vec<SparseMat> = self.coeffs.iter().map(f).collect();
        MatSeries::new(self.order(), coeffs).expect("map preserves a common shape")
    }

    /// Two-sided inverse up to the truncation order: `T_0 = S_0^{-1}` and
    /// `T_p = −S_0^{-1} Σ_{q=1..p} S_q T_{p−q}`.
    pub fn inverse(&self) -> Result<MatSeries> {
        let s0_inv = elim::inverse(&self.coeffs[0]).map_err(|e| match e {
            Error::Singular { rank, dim } => Error::SingularLeading { rank, dim },
            other => other,
        })?;
        let mut t: Vec<SparseMat> = vec![s0_inv.clone()];
        let minus = -Scalar::one();
        for p in 1..=self.order() {
            let mut acc = SparseMat::zeros(self.dim(), self.dim());
            for q in 1..=p {
                if self.coeffs[q].is_zero() || t[p - q].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[q] * &t[p - q]);
            }
            t.push((&s0_inv * &acc).scale(&minus));
        }
        Ok(MatSeries { coeffs: t })
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs[0].is_identity() && self.coeffs[1..].iter().all(SparseMat::is_zero)
    }
}

/// Exact product of two series of equal order.
pub fn series_mul(a: &MatSeries, b: &MatSeries) -> Result<MatSeries> {
    a.try_mul(b)
}

pub fn series_inverse(s: &MatSeries) -> Result<MatSeries> {
    s.inverse()
}
