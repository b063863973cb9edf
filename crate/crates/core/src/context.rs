//! Parameter records: the alphabet split and site count, plus the braid
//! deformation parameter.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `n = k + m` letters, letters `1..=k` bosonic and `k+1..=n` fermionic,
/// acting on `sites` tensor factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepContext {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub sites: usize,
}

impl RepContext {
    pub fn new(n: usize, k: usize, sites: usize) -> Result<Self> {
        if n == 0 || k > n || sites == 0 {
            return Err(Error::InvalidParams(format!(
                "need n >= 1, 0 <= k <= n, sites >= 1; got n={n}, k={k}, sites={sites}"
            )));
        }
        Ok(RepContext { n, k, m: n - k, sites })
    }

    pub fn from_km(k: usize, m: usize, sites: usize) -> Result<Self> {
        RepContext::new(k + m, k, sites)
    }

    pub fn with_sites(&self, sites: usize) -> Result<Self> {
        RepContext::new(self.n, self.k, sites)
    }

    /// `n^sites`.
    pub fn dim(&self) -> usize {
        self.n.pow(self.sites as u32)
    }

    /// Letter `x` (1-based) lies in `{k+1, …, n}`.
    pub fn is_fermionic(&self, x: usize) -> bool {
        x > self.k
    }

    /// `+1` on bosonic letters, `−1` on fermionic ones.
    pub fn theta(&self, x: usize) -> i64 {
        if self.is_fermionic(x) {
            -1
        } else {
            1
        }
    }

    pub fn check_letter(&self, x: usize) -> Result<()> {
        if x == 0 || x > self.n {
            return Err(Error::IndexOutOfRange { what: "letter", index: vec![x], bound: vec![self.n] });
        }
        Ok(())
    }

    /// Row index of `e_{x_1}⊗…⊗e_{x_N}`: `Σ (x_j − 1)·n^{N−j}`, letters 1-based.
    pub fn encode(&self, word: &[usize]) -> Result<usize> {
        if word.len() != self.sites {
            return Err(Error::InvalidParams(format!("word of length {} for {} sites", word.len(), self.sites)));
        }
        let mut idx = 0;
        for &x in word {
            self.check_letter(x)?;
            idx = idx * self.n + (x - 1);
        }
        Ok(idx)
    }

    /// Inverse of [`RepContext::encode`].
    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let mut word = vec![0; self.sites];
        for slot in word.iter_mut().rev() {
            *slot = idx % self.n + 1;
            idx /= self.n;
        }
        word
    }

    /// Occupation numbers `(m_1, …, m_n)` of a basis index.
    pub fn occupation(&self, idx: usize) -> Vec<usize> {
        let mut occ = vec![0; self.n];
        for x in self.decode(idx) {
            occ[x - 1] += 1;
        }
        occ
    }
}

/// `n`, `k` and the integer deformation `alpha` of `D = id − 2α Σ_{x>k} e_xx⊗e_xx`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidParams {
    pub n: usize,
    pub k: usize,
    pub alpha: i64,
}

impl BraidParams {
    pub fn new(n: usize, k: usize, alpha: i64) -> Result<Self> {
        if n == 0 || k > n {
            return Err(Error::InvalidParams(format!("need n >= 1 and k <= n; got n={n}, k={k}")));
        }
        Ok(BraidParams { n, k, alpha })
    }

    pub fn m(&self) -> usize {
        self.n - self.k
    }

    pub fn is_fermionic(&self, x: usize) -> bool {
        x > self.k
    }

    pub fn of_context(ctx: &RepContext, alpha: i64) -> Self {
        BraidParams { n: ctx.n, k: ctx.k, alpha }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn encode_is_most_significant_first() {
        let ctx = RepContext::new(3, 1, 2).unwrap();
        assert_eq!(ctx.encode(&[1, 3]).unwrap(), 2);
        assert_eq!(ctx.encode(&[3, 1]).unwrap(), 6);
        assert!(ctx.encode(&[4, 1]).is_err());
        assert!(ctx.encode(&[1]).is_err());
    }

    #[test]
    fn rejects_bad_split() {
        assert!(RepContext::new(2, 3, 1).is_err());
        assert!(RepContext::new(2, 1, 0).is_err());
        assert!(BraidParams::new(0, 0, 1).is_err());
    }

    proptest! {
        #[test]
        fn decode_inverts_encode(n in 1usize..5, sites in 1usize..5, seed in 0usize..10_000) {
            let ctx = RepContext::new(n, 0, sites).unwrap();
            let idx = seed % ctx.dim();
            prop_assert_eq!(ctx.encode(&ctx.decode(idx)).unwrap(), idx);
        }
    }
}
