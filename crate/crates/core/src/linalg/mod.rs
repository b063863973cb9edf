//! Exact sparse linear algebra over Gaussian rationals.

pub mod elim;
pub mod series;
pub mod sparse;

pub use elim::{inverse, kernel_basis, rank, rank_of_vectors};
pub use series::{series_inverse, series_mul, MatSeries};
pub use sparse::{kron_all, SparseMat, Vector};

use crate::error::{Error, Result};

/// `id^{⊗(site−1)} ⊗ A ⊗ id^{⊗(sites − site − span + 1)}` where `A` acts on
/// `span` adjacent factors of dimension `local_dim`. Sites are 1-based and
/// site 1 is the most significant tensor factor.
pub fn embed_at_site(a: &SparseMat, site: usize, local_dim: usize, sites: usize) -> Result<SparseMat> {
    let span = span_of(a, local_dim)?;
    if site == 0 || site + span - 1 > sites {
        return Err(Error::SiteRange { site, span, sites });
    }
    let left = local_dim.pow((site - 1) as u32);
    let right = local_dim.pow((sites + 1 - site - span) as u32);
    Ok(SparseMat::identity(left).kron(a).kron(&SparseMat::identity(right)))
}

fn span_of(a: &SparseMat, local_dim: usize) -> Result<usize> {
    if !a.is_square() || local_dim < 1 {
        return Err(Error::InvalidParams(format!("embedded operator must be square, got {}x{}", a.nrows(), a.ncols())));
    }
    let mut span = 0;
    let mut d = 1;
    while d < a.nrows() {
        d *= local_dim;
        span += 1;
        if local_dim == 1 {
            break;
        }
    }
    if d != a.nrows() || (span == 0 && local_dim != 1) {
        return Err(Error::InvalidParams(format!("operator dimension {} is not a power of {local_dim}", a.nrows())));
    }
    Ok(span.max(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embed_identity_anywhere() {
        for site in 1..=2 {
            let e = embed_at_site(&SparseMat::identity(4), site, 2, 3).unwrap();
            assert!(e.is_identity());
            assert_eq!(e.nrows(), 8);
        }
    }

    #[test]
    fn embed_at_first_site_is_left_kron() {
        let a = SparseMat::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, -1]]);
        let e = embed_at_site(&a, 1, 2, 3).unwrap();
        assert_eq!(e, a.kron(&SparseMat::identity(2)));
    }

    #[test]
    fn embed_rejects_bad_sites() {
        let a = SparseMat::identity(4);
        assert!(matches!(embed_at_site(&a, 0, 2, 3), Err(Error::SiteRange { .. })));
        assert!(matches!(embed_at_site(&a, 3, 2, 3), Err(Error::SiteRange { .. })));
        assert!(embed_at_site(&SparseMat::identity(3), 1, 2, 3).is_err());
    }
}
