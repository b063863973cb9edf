//! Word-level coproduct on the generators `h_x`, `L1(x,y)` and its image
//! under `π^{⊗N}`.

use std::collections::BTreeMap;

use crate::context::RepContext;
use crate::error::Result;
use crate::linalg::{kron_all, SparseMat};
use crate::report::{CheckReport, Checker};
use crate::scalar::Scalar;

use super::{fund_h, Convention};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// `h_x` (the unit when `x` is bosonic).
    H(usize),
    /// `L^{(1)}_{x,y}`.
    L(usize, usize),
}

/// `coef · a_1 ⊗ … ⊗ a_N`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Term {
    pub coef: i64,
    pub atoms: Vec<Atom>,
}

fn delta_atom(a: Atom, conv: Convention) -> [(Atom, Atom); 2] {
    match a {
        Atom::H(x) => [(Atom::H(x), Atom::H(x)), (Atom::H(x), Atom::H(x))],
        Atom::L(x, y) => match conv {
            Convention::Standard => [(Atom::L(x, y), Atom::H(x)), (Atom::H(y), Atom::L(x, y))],
            Convention::Swapped => [(Atom::H(x), Atom::L(x, y)), (Atom::L(x, y), Atom::H(y))],
        },
    }
}

/// Applies `Δ` to tensor slot `slot` of every term.
pub fn delta_at(terms: &[Term], slot: usize, conv: Convention) -> Vec<Term> {
    let mut out = Vec::new();
    for t in terms {
        let a = t.atoms[slot];
        let pieces = delta_atom(a, conv);
        let count = if matches!(a, Atom::H(_)) { 1 } else { 2 };
        for &(l, r) in &pieces[..count] {
            let mut atoms = t.atoms.clone();
            atoms.splice(slot..=slot, [l, r]);
            out.push(Term { coef: t.coef, atoms });
        }
    }
    normalize(out)
}

/// Merges equal words and drops zero coefficients, sorted.
pub fn normalize(terms: Vec<Term>) -> Vec<Term> {
    let mut acc: BTreeMap<Vec<Atom>, i64> = BTreeMap::new();
    for t in terms {
        *acc.entry(t.atoms).or_insert(0) += t.coef;
    }
    acc.into_iter().filter(|(_, c)| *c != 0).map(|(atoms, coef)| Term { coef, atoms }).collect()
}

/// `Δ^{(N)}(a)`, built as `(id^{⊗(N−2)} ⊗ Δ)∘…∘Δ`.
pub fn delta_terms(a: Atom, sites: usize, conv: Convention) -> Vec<Term> {
    let mut terms = vec![Term { coef: 1, atoms: vec![a] }];
    for s in 1..sites {
        terms = delta_at(&terms, s - 1, conv);
    }
    terms
}

/// Same as [`delta_terms`] but always splitting the first slot.
fn delta_terms_left(a: Atom, sites: usize, conv: Convention) -> Vec<Term> {
    let mut terms = vec![Term { coef: 1, atoms: vec![a] }];
    for _ in 1..sites {
        terms = delta_at(&terms, 0, conv);
    }
    terms
}

fn fund_atom(a: Atom, ctx: &RepContext) -> SparseMat {
    match a {
        Atom::H(x) => fund_h(x, ctx.n, ctx.k),
        Atom::L(x, y) => SparseMat::elementary(ctx.n, y, x),
    }
}

/// `Σ coef · π(a_1) ⊗ … ⊗ π(a_N)`.
pub fn terms_matrix(terms: &[Term], ctx: &RepContext) -> Result<SparseMat> {
    let d = ctx.dim();
    let mut acc = SparseMat::zeros(d, d);
    for t in terms {
        if t.atoms.len() != ctx.sites {
            return Err(crate::error::Error::InvalidParams(format!(
                "term of length {} for {} sites",
                t.atoms.len(),
                ctx.sites
            )));
        }
        let factors: Vec<SparseMat> = t.atoms.iter().map(|&a| fund_atom(a, ctx)).collect();
        acc = &acc + &kron_all(&factors).scale(&Scalar::from(t.coef));
    }
    Ok(acc)
}

/// Closed form of `π^{⊗N}Δ^{(N)}(L1(x,y))`, written out without iterating.
pub fn closed_form_t(x: usize, y: usize, ctx: &RepContext, conv: Convention) -> SparseMat {
    let (left, right) = match conv {
        Convention::Standard => (fund_h(y, ctx.n, ctx.k), fund_h(x, ctx.n, ctx.k)),
        Convention::Swapped => (fund_h(x, ctx.n, ctx.k), fund_h(y, ctx.n, ctx.k)),
    };
    let e = SparseMat::elementary(ctx.n, y, x);
    let d = ctx.dim();
    let mut acc = SparseMat::zeros(d, d);
    for j in 1..=ctx.sites {
        let mut factors = vec![left.clone(); j - 1];
        factors.push(e.clone());
        factors.extend(std::iter::repeat_n(right.clone(), ctx.sites - j));
        acc = &acc + &kron_all(&factors);
    }
    acc
}

fn all_atoms(n: usize) -> Vec<Atom> {
    let mut v: Vec<Atom> = (1..=n).map(Atom::H).collect();
    for x in 1..=n {
        for y in 1..=n {
            v.push(Atom::L(x, y));
        }
    }
    v
}

/// `(Δ⊗id)Δ = (id⊗Δ)Δ` on every generator: once on words for three
/// factors, and as matrices for `ctx.sites` factors (splitting always the
/// first slot versus always the last).
pub fn coassociativity(ctx: &RepContext, conv: Convention) -> Result<CheckReport> {
    let mut c = Checker::new("coassociativity");
    for a in all_atoms(ctx.n) {
        let once = delta_terms(a, 2, conv);
        let left = delta_at(&once, 0, conv);
        let right = delta_at(&once, 1, conv);
        c.expect(format!("{a:?}: (Δ⊗id)Δ = (id⊗Δ)Δ on words"), left == right);
        let l = terms_matrix(&delta_terms_left(a, ctx.sites, conv), ctx)?;
        let r = terms_matrix(&delta_terms(a, ctx.sites, conv), ctx)?;
        c.mat_eq(format!("{a:?}: N-fold coproduct"), &l, &r);
    }
    Ok(c.finish())
}

/// `(ε⊗id)Δ(a) = (id⊗ε)Δ(a) = a` with `ε(h) = 1`, `ε(L1) = 0`, checked on
/// the images in `ctx`.
pub fn counit_check(ctx: &RepContext, conv: Convention) -> Result<CheckReport> {
    let mut c = Checker::new("counit");
    let counit = |a: Atom| -> i64 {
        match a {
            Atom::H(_) => 1,
            Atom::L(..) => 0,
        }
    };
    for a in all_atoms(ctx.n) {
        let target = terms_matrix(&delta_terms(a, ctx.sites, conv), ctx)?;
        let bigger = delta_terms(a, ctx.sites + 1, conv);
        for side in [0usize, ctx.sites] {
            let reduced: Vec<Term> = bigger
                .iter()
                .map(|t| {
                    let mut atoms = t.atoms.clone();
                    let removed = atoms.remove(side);
                    Term { coef: t.coef * counit(removed), atoms }
                })
                .collect();
            let m = terms_matrix(&normalize(reduced), ctx)?;
            let label = if side == 0 { "(ε⊗id)Δ" } else { "(id⊗ε)Δ" };
            c.mat_eq(format!("{a:?}: {label}"), &m, &target);
        }
    }
    Ok(c.finish())
}
