//! Representations of 𝔤𝔩_{k,m} on `(C^n)^{⊗N}` built from the fundamental
//! representation and the iterated coproduct, plus the relation, Lax and
//! Casimir checks run on them.

mod coproduct;
pub mod lax;
pub mod relations;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::context::RepContext;
use crate::error::{Error, Result};
use crate::linalg::SparseMat;
use crate::scalar::Scalar;

pub use coproduct::{closed_form_t, coassociativity, counit_check, delta_terms, terms_matrix, Atom, Term};
pub use lax::{
    antipode_series, aux_block, aux_transpose, check_antipode, check_lax_rtt, check_monodromy_rtt,
    check_monodromy_vs_lax, lax_two_term, monodromy, tau_series, CasimirData,
};
pub use relations::{verify_centralizer, verify_centralizer_with, verify_gl_relations, verify_hatted, verify_serre};

/// Generator symbols. `H(x)` is `h_x`, `L1(x, y)` is `L^{(1)}_{x,y}`;
/// `E`, `F`, `Eps` are the aliases `L1(x,x+1)`, `L1(x+1,x)`, `L1(x,x)`;
/// the `Hat*` variants are the rescaled generators `h_x e_x`, `h_{x+1} f_x`
/// and `ε̂_x` (`ε_x` on bosonic letters, `−h_x ε_x` on fermionic ones).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenSymbol {
    H(usize),
    L1(usize, usize),
    E(usize),
    F(usize),
    Eps(usize),
    HatE(usize),
    HatF(usize),
    HatEps(usize),
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSymbol::H(x) => write!(f, "h{x}"),
            GenSymbol::L1(x, y) => write!(f, "t{x},{y}"),
            GenSymbol::E(x) => write!(f, "e{x}"),
            GenSymbol::F(x) => write!(f, "f{x}"),
            GenSymbol::Eps(x) => write!(f, "eps{x}"),
            GenSymbol::HatE(x) => write!(f, "ê{x}"),
            GenSymbol::HatF(x) => write!(f, "f̂{x}"),
            GenSymbol::HatEps(x) => write!(f, "ε̂{x}"),
        }
    }
}

/// Which tensor slot of `Δ(L_{x,y})` carries `h_x`.
///
/// `Standard`: `Δ(L_xy) = L_xy ⊗ h_x + h_y ⊗ L_xy`, so the N-site image is
/// `Σ_j π(h_y)^{⊗(j−1)} ⊗ e_yx ⊗ π(h_x)^{⊗(N−j)}`. This is the ordering
/// produced by the monodromy `R_{0N}…R_{01}` and it is the default.
/// `Swapped` is the opposite coproduct `h_x ⊗ L_xy + L_xy ⊗ h_y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    #[default]
    Standard,
    Swapped,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Standard => "standard",
            Convention::Swapped => "swapped",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Convention::Standard),
            "swapped" => Ok(Convention::Swapped),
            other => Err(Error::InvalidParams(format!("unknown convention {other:?}"))),
        }
    }
}

/// `π(h_x)`: the identity on bosonic letters, `id − 2e_xx` on fermionic ones.
pub fn fund_h(x: usize, n: usize, k: usize) -> SparseMat {
    if x <= k {
        SparseMat::identity(n)
    } else {
        &SparseMat::identity(n) - &SparseMat::elementary(n, x, x).scale(&Scalar::from(2))
    }
}

/// Fundamental representation: `L1(x,y) ↦ e_yx`, `h_x ↦ π(h_x)`.
pub fn fund_matrix(g: GenSymbol, n: usize, k: usize) -> Result<SparseMat> {
    let ctx = RepContext::new(n, k, 1)?;
    Rep::new(ctx, Convention::Standard)?.matrix(g)
}

/// All `𝔥_x = π^{⊗N}Δ^{(N)}(h_x)` and `𝔱_xy = π^{⊗N}Δ^{(N)}(L1(x,y))`.
#[derive(Clone, Debug)]
pub struct Rep {
    pub ctx: RepContext,
    pub convention: Convention,
    h: Vec<SparseMat>,
    t: Vec<SparseMat>,
}

impl Rep {
    pub fn new(ctx: RepContext, convention: Convention) -> Result<Self> {
        let n = ctx.n;
        let h = (1..=n)
            .map(|x| terms_matrix(&delta_terms(Atom::H(x), ctx.sites, convention), &ctx))
            .collect::<Result<Vec<_>>>()?;
        let mut t = Vec::with_capacity(n * n);
        for x in 1..=n {
            for y in 1..=n {
                t.push(terms_matrix(&delta_terms(Atom::L(x, y), ctx.sites, convention), &ctx)?);
            }
        }
        Ok(Rep { ctx, convention, h, t })
    }

    pub fn n(&self) -> usize {
        self.ctx.n
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim()
    }

    pub fn h(&self, x: usize) -> &SparseMat {
        &self.h[x - 1]
    }

    pub fn t(&self, x: usize, y: usize) -> &SparseMat {
        &self.t[(x - 1) * self.ctx.n + (y - 1)]
    }

    pub fn e(&self, x: usize) -> &SparseMat {
        self.t(x, x + 1)
    }

    pub fn f(&self, x: usize) -> &SparseMat {
        self.t(x + 1, x)
    }

    pub fn eps(&self, x: usize) -> &SparseMat {
        self.t(x, x)
    }

    pub fn hat_e(&self, x: usize) -> SparseMat {
        self.h(x) * self.e(x)
    }

    pub fn hat_f(&self, x: usize) -> SparseMat {
        self.h(x + 1) * self.f(x)
    }

    pub fn hat_eps(&self, x: usize) -> SparseMat {
        if self.ctx.is_fermionic(x) {
            -&(self.h(x) * self.eps(x))
        } else {
            self.eps(x).clone()
        }
    }

    pub fn identity(&self) -> SparseMat {
        SparseMat::identity(self.dim())
    }

    fn check_symbol(&self, g: GenSymbol) -> Result<()> {
        let n = self.ctx.n;
        let bad = |idx: Vec<usize>| Err(Error::IndexOutOfRange { what: "generator", index: idx, bound: vec![n] });
        match g {
            GenSymbol::H(x) | GenSymbol::Eps(x) | GenSymbol::HatEps(x) if x == 0 || x > n => bad(vec![x]),
            GenSymbol::L1(x, y) if x == 0 || y == 0 || x > n || y > n => bad(vec![x, y]),
            GenSymbol::E(x) | GenSymbol::F(x) | GenSymbol::HatE(x) | GenSymbol::HatF(x) if x == 0 || x >= n => {
                bad(vec![x])
            }
            _ => Ok(()),
        }
    }

    /// Matrix of any generator symbol in this representation.
    pub fn matrix(&self, g: GenSymbol) -> Result<SparseMat> {
        self.check_symbol(g)?;
        Ok(match g {
            GenSymbol::H(x) => self.h(x).clone(),
            GenSymbol::L1(x, y) => self.t(x, y).clone(),
            GenSymbol::E(x) => self.e(x).clone(),
            GenSymbol::F(x) => self.f(x).clone(),
            GenSymbol::Eps(x) => self.eps(x).clone(),
            GenSymbol::HatE(x) => self.hat_e(x),
            GenSymbol::HatF(x) => self.hat_f(x),
            GenSymbol::HatEps(x) => self.hat_eps(x),
        })
    }

    /// Every `h_x` and `L1(x, y)` in canonical order.
    pub fn generators(&self) -> Vec<(GenSymbol, &SparseMat)> {
        let n = self.ctx.n;
        let mut out: Vec<(GenSymbol, &SparseMat)> = (1..=n).map(|x| (GenSymbol::H(x), self.h(x))).collect();
        for x in 1..=n {
            for y in 1..=n {
                out.push((GenSymbol::L1(x, y), self.t(x, y)));
            }
        }
        out
    }
}

/// `π^{⊗N}Δ^{(N)}(g)`.
pub fn coproduct_matrix(g: GenSymbol, ctx: &RepContext, convention: Convention) -> Result<SparseMat> {
    Rep::new(*ctx, convention)?.matrix(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_examples() {
        assert_eq!(fund_matrix(GenSymbol::L1(1, 2), 2, 1).unwrap(), SparseMat::elementary(2, 2, 1));
        assert_eq!(fund_matrix(GenSymbol::H(2), 2, 1).unwrap(), SparseMat::from_int_rows(&[&[1, 0], &[0, -1]]));
        assert!(fund_matrix(GenSymbol::H(1), 2, 1).unwrap().is_identity());
        assert!(fund_matrix(GenSymbol::H(3), 2, 1).is_err());
        assert!(fund_matrix(GenSymbol::E(2), 2, 1).is_err());
    }

    #[test]
    fn two_site_coproduct_example() {
        let ctx = RepContext::new(2, 1, 2).unwrap();
        let t = coproduct_matrix(GenSymbol::L1(1, 2), &ctx, Convention::Standard).unwrap();
        let e21 = SparseMat::elementary(2, 2, 1);
        let d2 = SparseMat::from_int_rows(&[&[1, 0], &[0, -1]]);
        assert_eq!(t, &e21.kron(&SparseMat::identity(2)) + &d2.kron(&e21));
    }

    #[test]
    fn group_like_coproduct() {
        let ctx = RepContext::new(2, 1, 3).unwrap();
        let d2 = SparseMat::from_int_rows(&[&[1, 0], &[0, -1]]);
        let h = coproduct_matrix(GenSymbol::H(2), &ctx, Convention::Standard).unwrap();
        assert_eq!(h, d2.kron(&d2).kron(&d2));
    }

    #[test]
    fn one_site_is_fundamental() {
        let ctx = RepContext::new(3, 1, 1).unwrap();
        for conv in [Convention::Standard, Convention::Swapped] {
            let rep = Rep::new(ctx, conv).unwrap();
            for x in 1..=3 {
                for y in 1..=3 {
                    assert_eq!(rep.t(x, y), &SparseMat::elementary(3, y, x));
                }
            }
        }
    }

    #[test]
    fn convention_round_trip() {
        for c in [Convention::Standard, Convention::Swapped] {
            assert_eq!(c.to_string().parse::<Convention>().unwrap(), c);
        }
        assert!("sideways".parse::<Convention>().is_err());
    }
}
