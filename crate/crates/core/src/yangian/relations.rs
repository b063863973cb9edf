//! Defining relations, Chevalley–Serre type relations, hatted relations and
//! the centralizer property, all checked as exact matrix identities.

use crate::braid::{braid_generators, build_rcheck};
use crate::context::{BraidParams, RepContext};
use crate::error::{Error, Result};
use crate::linalg::SparseMat;
use crate::report::{CheckReport, Checker};
use crate::scalar::Scalar;

use super::{Convention, Rep};

fn comm(a: &SparseMat, b: &SparseMat) -> SparseMat {
    a.commutator(b)
}

fn acomm(a: &SparseMat, b: &SparseMat) -> SparseMat {
    a.anticommutator(b)
}

fn two() -> Scalar {
    Scalar::from(2)
}

fn label(rep: &Rep) -> String {
    format!("n={}, k={}, N={}", rep.ctx.n, rep.ctx.k, rep.ctx.sites)
}

/// The quadratic relations of 𝔤𝔩_{k,m} among `h_z` (z fermionic) and all
/// `L1(x,y)`, nilpotency of mixed generators, and the iteration rule
/// `[L_xy, L_yz] = −h_y L_xz` for monotone `x, y, z`.
pub fn verify_gl_relations(rep: &Rep) -> CheckReport {
    let n = rep.n();
    let ctx = rep.ctx;
    let fermi = |x: usize| ctx.is_fermionic(x);
    let zero = SparseMat::zeros(rep.dim(), rep.dim());
    let mut c = Checker::new(format!("quadratic({})", label(rep)));

    for x in (1..=n).filter(|&x| fermi(x)) {
        for y in (1..=n).filter(|&y| fermi(y)) {
            c.mat_zero(format!("[h{x}, h{y}]"), &comm(rep.h(x), rep.h(y)));
        }
    }
    for x in 1..=n {
        for y in 1..=n {
            let t = rep.t(x, y);
            for z in (1..=n).filter(|&z| fermi(z)) {
                let mut rhs = zero.clone();
                if z == x {
                    rhs = &rhs + &(t * rep.h(x)).scale(&two());
                }
                if z == y {
                    rhs = &rhs - &(rep.h(y) * t).scale(&two());
                }
                c.mat_eq(format!("[t{x}{y}, h{z}]"), &comm(t, rep.h(z)), &rhs);
            }
        }
    }
    for x in 1..=n {
        for y in 1..=n {
            for z in 1..=n {
                for w in 1..=n {
                    let mut lhs = comm(rep.t(x, y), rep.t(z, w));
                    if x == z && fermi(x) {
                        lhs = &lhs - &(rep.t(x, y) * rep.t(x, w)).scale(&two());
                    }
                    if y == w && fermi(y) {
                        lhs = &lhs + &(rep.t(z, y) * rep.t(x, y)).scale(&two());
                    }
                    let mut rhs = zero.clone();
                    if x == w {
                        rhs = &rhs + &(rep.t(z, y) * rep.h(x));
                    }
                    if y == z {
                        rhs = &rhs - &(rep.h(y) * rep.t(x, w));
                    }
                    c.mat_eq(format!("[t{x}{y}, t{z}{w}]"), &lhs, &rhs);
                }
            }
        }
    }
    for x in 1..=n {
        for y in 1..=n {
            if fermi(x) != fermi(y) {
                c.mat_zero(format!("t{x}{y}²"), &(rep.t(x, y) * rep.t(x, y)));
            }
        }
    }
    for x in 1..=n {
        for y in 1..=n {
            for z in 1..=n {
                if (x < y && y < z) || (x > y && y > z) {
                    c.mat_eq(
                        format!("[t{x}{y}, t{y}{z}] = −h{y} t{x}{z}"),
                        &comm(rep.t(x, y), rep.t(y, z)),
                        &-&(rep.h(y) * rep.t(x, z)),
                    );
                }
            }
        }
    }
    c.finish()
}

/// `ξ_{y} ξ_x² + ξ_x² ξ_y − 2c ξ_x ξ_y ξ_x`.
fn cubic(xi_x: &SparseMat, xi_y: &SparseMat, c: i64) -> SparseMat {
    let sq = xi_x * xi_x;
    let mid = &(xi_x * xi_y) * xi_x;
    &(&(xi_y * &sq) + &(&sq * xi_y)) - &mid.scale(&Scalar::from(2 * c))
}

/// The cubic relations for `x ≠ k` and the quartic relation at `x = k`
/// (applicable when `2 ≤ k ≤ n − 2`, so that `ξ_{k−1}` and `ξ_{k+1}` exist).
fn serre_higher(rep: &Rep, c: &mut Checker, hatted: bool) {
    let n = rep.n();
    let k = rep.ctx.k;
    let xi = |kind: char, x: usize| -> SparseMat {
        match (kind, hatted) {
            ('e', false) => rep.e(x).clone(),
            ('f', false) => rep.f(x).clone(),
            ('e', true) => rep.hat_e(x),
            _ => rep.hat_f(x),
        }
    };
    let prefix = if hatted { "hat " } else { "" };
    for kind in ['e', 'f'] {
        for x in (1..n).filter(|&x| x != k) {
            let coeff = if hatted && rep.ctx.is_fermionic(x) { -1 } else { 1 };
            for y in [x.wrapping_sub(1), x + 1] {
                if y == 0 || y >= n {
                    continue;
                }
                c.mat_zero(format!("{prefix}cubic {kind}: x={x}, x±1={y}"), &cubic(&xi(kind, x), &xi(kind, y), coeff));
            }
        }
        if (1..n).contains(&k) {
            let xk = xi(kind, k);
            c.mat_zero(format!("{prefix}{kind}{k}²"), &(&xk * &xk));
        }
        if !hatted {
            if k >= 2 && k + 2 <= n {
                let a = comm(&xi(kind, k + 1), &xi(kind, k));
                let b = comm(&xi(kind, k), &xi(kind, k - 1));
                c.mat_zero(format!("quartic {kind}"), &acomm(&a, &b));
            } else {
                c.note(format!("quartic {kind}: not-applicable (needs 2 <= k <= n-2)"));
            }
        }
    }
}

/// The Chevalley–Serre type list for `e_x, f_x, ε_x, h_x`, with the cubic
/// and quartic relations.
pub fn verify_serre(rep: &Rep) -> CheckReport {
    let n = rep.n();
    let ctx = rep.ctx;
    let fermi = |x: usize| ctx.is_fermionic(x);
    let bos = |x: usize| !ctx.is_fermionic(x);
    let mut c = Checker::new(format!("serre({})", label(rep)));

    for x in (1..=n).filter(|&x| fermi(x)) {
        for y in (1..=n).filter(|&y| fermi(y)) {
            c.mat_zero(format!("[h{x}, h{y}]"), &comm(rep.h(x), rep.h(y)));
        }
    }
    for z in 1..=n {
        for x in 1..=n {
            c.mat_zero(format!("[ε{z}, h{x}]"), &comm(rep.eps(z), rep.h(x)));
        }
    }
    for x in 1..n {
        for z in (1..=n).filter(|&z| z != x && z != x + 1) {
            c.mat_zero(format!("[e{x}, h{z}]"), &comm(rep.e(x), rep.h(z)));
            c.mat_zero(format!("[f{x}, h{z}]"), &comm(rep.f(x), rep.h(z)));
        }
        if fermi(x) && fermi(x + 1) {
            for (name, xi) in [("e", rep.e(x)), ("f", rep.f(x))] {
                c.mat_zero(format!("[[{name}{x}, h{x}]]"), &acomm(xi, rep.h(x)));
                c.mat_zero(format!("[[{name}{x}, h{}]]", x + 1), &acomm(xi, rep.h(x + 1)));
            }
        }
        for y in (1..=n).filter(|&y| y != x && y != x + 1) {
            c.mat_zero(format!("[ε{y}, e{x}]"), &comm(rep.eps(y), rep.e(x)));
            c.mat_zero(format!("[ε{y}, f{x}]"), &comm(rep.eps(y), rep.f(x)));
        }
        let (e, f) = (rep.e(x), rep.f(x));
        if bos(x) {
            c.mat_eq(format!("[ε{x}, e{x}] = −e{x}"), &comm(rep.eps(x), e), &-e);
            c.mat_eq(format!("[ε{x}, f{x}] = f{x}"), &comm(rep.eps(x), f), f);
        } else {
            c.mat_eq(format!("[[ε{x}, e{x}]] = h{x}e{x}"), &acomm(rep.eps(x), e), &(rep.h(x) * e));
            c.mat_eq(format!("[[ε{x}, f{x}]] = −h{x}f{x}"), &acomm(rep.eps(x), f), &-&(rep.h(x) * f));
        }
        let x1 = x + 1;
        if bos(x1) {
            c.mat_eq(format!("[ε{x1}, e{x}] = e{x}"), &comm(rep.eps(x1), e), e);
            c.mat_eq(format!("[ε{x1}, f{x}] = −f{x}"), &comm(rep.eps(x1), f), &-f);
        } else {
            c.mat_eq(format!("[[ε{x1}, e{x}]] = −h{x1}e{x}"), &acomm(rep.eps(x1), e), &-&(rep.h(x1) * e));
            c.mat_eq(format!("[[ε{x1}, f{x}]] = h{x1}f{x}"), &acomm(rep.eps(x1), f), &(rep.h(x1) * f));
        }
        let rhs = &(rep.eps(x) * rep.h(x1)) - &(rep.eps(x1) * rep.h(x));
        c.mat_eq(format!("[f{x}, e{x}] = ε{x}h{x1} − ε{x1}h{x}"), &comm(f, e), &rhs);
        // Off-diagonal pairs: the anticommutator vanishes for the two
        // neighbours listed with a fermionic letter, the commutator otherwise.
        for y in (1..n).filter(|&y| y != x) {
            let anti = (y == x + 1 && fermi(x + 1)) || (y + 1 == x && fermi(x));
            if anti {
                c.mat_zero(format!("[[f{x}, e{y}]]"), &acomm(f, rep.e(y)));
            } else {
                c.mat_zero(format!("[f{x}, e{y}]"), &comm(f, rep.e(y)));
            }
        }
    }
    serre_higher(rep, &mut c, false);
    c.finish()
}

/// Relations among `ê_x = h_x e_x`, `f̂_x = h_{x+1} f_x`, `ε̂_x`, together
/// with their coproduct form `Δ(ξ̂) = ξ̂⊗1 + h_x h_{x+1}⊗ξ̂` and
/// `Δ(ε̂) = ε̂⊗1 + 1⊗ε̂` (checked against the one-site representation).
/// Requires `h_x² = 1`.
pub fn verify_hatted(rep: &Rep) -> Result<CheckReport> {
    let n = rep.n();
    let k = rep.ctx.k;
    let fermi = |x: usize| rep.ctx.is_fermionic(x);
    let id = rep.identity();

    let mut pre = Checker::new("h_x² = id");
    for x in 1..=n {
        pre.mat_eq(format!("h{x}²"), &(rep.h(x) * rep.h(x)), &id);
    }
    let pre = pre.finish();
    if !pre.passed {
        return Err(Error::Precondition(Box::new(pre)));
    }

    let mut c = Checker::new(format!("hatted({})", label(rep)));
    let he: Vec<SparseMat> = (1..n).map(|x| rep.hat_e(x)).collect();
    let hf: Vec<SparseMat> = (1..n).map(|x| rep.hat_f(x)).collect();
    let heps: Vec<SparseMat> = (1..=n).map(|x| rep.hat_eps(x)).collect();
    let (e, f, eps) = (|x: usize| &he[x - 1], |x: usize| &hf[x - 1], |x: usize| &heps[x - 1]);

    for x in 1..n {
        if fermi(x) && fermi(x + 1) {
            for (name, xi) in [("ê", e(x)), ("f̂", f(x))] {
                c.mat_zero(format!("[[{name}{x}, h{x}]]"), &acomm(xi, rep.h(x)));
                c.mat_zero(format!("[[{name}{x}, h{}]]", x + 1), &acomm(xi, rep.h(x + 1)));
            }
        }
        c.mat_eq(format!("[ε̂{x}, ê{x}] = −ê{x}"), &comm(eps(x), e(x)), &-e(x));
        c.mat_eq(format!("[ε̂{x}, f̂{x}] = f̂{x}"), &comm(eps(x), f(x)), f(x));
        c.mat_eq(format!("[ε̂{}, ê{x}] = ê{x}", x + 1), &comm(eps(x + 1), e(x)), e(x));
        c.mat_eq(format!("[ε̂{}, f̂{x}] = −f̂{x}", x + 1), &comm(eps(x + 1), f(x)), &-f(x));
        if x == k {
            c.mat_eq(format!("[[f̂{k}, ê{k}]] = ε̂{k} + ε̂{}", k + 1), &acomm(f(x), e(x)), &(eps(x) + eps(x + 1)));
        } else {
            c.mat_eq(format!("[f̂{x}, ê{x}] = ε̂{x} − ε̂{}", x + 1), &comm(f(x), e(x)), &(eps(x) - eps(x + 1)));
        }
        if x + 1 < n && fermi(x + 1) {
            c.mat_zero(format!("[[f̂{x}, ê{}]]", x + 1), &acomm(f(x), e(x + 1)));
        }
        if x >= 2 && fermi(x) {
            c.mat_zero(format!("[[f̂{x}, ê{}]]", x - 1), &acomm(f(x), e(x - 1)));
        }
    }
    serre_higher(rep, &mut c, true);

    if rep.ctx.sites >= 2 {
        let one = rep.ctx.with_sites(1)?;
        let rest = rep.ctx.with_sites(rep.ctx.sites - 1)?;
        let r1 = Rep::new(one, rep.convention)?;
        let rr = Rep::new(rest, rep.convention)?;
        let id1 = r1.identity();
        let idr = rr.identity();
        for x in 1..n {
            let hh = &(rr.h(x) * rr.h(x + 1));
            let (lhs_e, lhs_f) = match rep.convention {
                Convention::Standard => {
                    (&rr.hat_e(x).kron(&id1) + &hh.kron(&r1.hat_e(x)), &rr.hat_f(x).kron(&id1) + &hh.kron(&r1.hat_f(x)))
                }
                Convention::Swapped => {
                    let hh1 = r1.h(x) * r1.h(x + 1);
                    (
                        &idr.kron(&r1.hat_e(x)) + &rr.hat_e(x).kron(&hh1),
                        &idr.kron(&r1.hat_f(x)) + &rr.hat_f(x).kron(&hh1),
                    )
                }
            };
            c.mat_eq(format!("Δ(ê{x})"), &lhs_e, e(x));
            c.mat_eq(format!("Δ(f̂{x})"), &lhs_f, f(x));
        }
        for x in 1..=n {
            let lhs = &rr.hat_eps(x).kron(&id1) + &idr.kron(&r1.hat_eps(x));
            c.mat_eq(format!("Δ(ε̂{x})"), &lhs, eps(x));
        }
    }
    Ok(c.finish())
}

/// `[ř_j, 𝔤] = 0` and `[ℋ, 𝔤] = 0` for every generator image, with ř
/// given explicitly.
pub fn verify_centralizer_with(rep: &Rep, rcheck: &SparseMat, name: String) -> Result<CheckReport> {
    let mut c = Checker::new(name);
    if rep.ctx.sites < 2 {
        return Err(Error::InvalidParams("centralizer check needs at least 2 sites".into()));
    }
    let gens = braid_generators(&rep.ctx, rcheck)?;
    let d = rep.dim();
    let ham = gens.iter().fold(SparseMat::zeros(d, d), |acc, g| &acc + g);
    for (sym, g) in rep.generators() {
        for (j, r) in gens.iter().enumerate() {
            c.mat_zero(format!("[ř{}, {sym}]", j + 1), &comm(r, g));
        }
        c.mat_zero(format!("[H, {sym}]"), &comm(&ham, g));
    }
    Ok(c.finish())
}

/// Centralizer check pairing the 𝔤𝔩_{k,m} coproducts with `ř(α)`. With
/// `α = 0` and `k < n` this is the negative control and must fail.
pub fn verify_centralizer(ctx: &RepContext, alpha: i64, conv: Convention) -> Result<CheckReport> {
    let rep = Rep::new(*ctx, conv)?;
    let r = build_rcheck(&BraidParams::of_context(ctx, alpha));
    verify_centralizer_with(&rep, &r, format!("centralizer(n={}, k={}, N={}, α={alpha})", ctx.n, ctx.k, ctx.sites))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(n: usize, k: usize, sites: usize) -> Rep {
        Rep::new(RepContext::new(n, k, sites).unwrap(), Convention::Standard).unwrap()
    }

    fn assert_pass(r: &CheckReport) {
        assert!(r.passed, "{} failed: {:#?}", r.name, r.witnesses);
    }

    #[test]
    fn gl_relations_small() {
        assert_pass(&verify_gl_relations(&rep(2, 1, 1)));
        assert_pass(&verify_gl_relations(&rep(3, 2, 2)));
        for sites in 1..=5 {
            let r = rep(2, 1, sites);
            assert!((r.t(1, 2) * r.t(1, 2)).is_zero());
        }
    }

    #[test]
    fn serre_small() {
        assert_pass(&verify_serre(&rep(2, 1, 2)));
        assert_pass(&verify_serre(&rep(3, 1, 2)));
        assert_pass(&verify_serre(&rep(3, 2, 1)));
    }

    #[test]
    fn quartic_applies_for_four_letters() {
        let r = verify_serre(&rep(4, 2, 2));
        assert_pass(&r);
        assert!(r.witnesses.is_empty() && !r.notes.iter().any(|n| n.contains("quartic")));
        let r3 = verify_serre(&rep(3, 2, 1));
        assert!(r3.notes.iter().any(|n| n.contains("quartic e: not-applicable")));
    }

    #[test]
    fn hatted_small() {
        assert_pass(&verify_hatted(&rep(2, 1, 1)).unwrap());
        assert_pass(&verify_hatted(&rep(2, 1, 2)).unwrap());
        assert_pass(&verify_hatted(&rep(3, 2, 2)).unwrap());
    }

    #[test]
    fn centralizer_and_negative_control() {
        let ctx = RepContext::new(2, 1, 2).unwrap();
        assert_pass(&verify_centralizer(&ctx, 1, Convention::Standard).unwrap());
        assert!(!verify_centralizer(&ctx, 0, Convention::Standard).unwrap().passed);
        let ctx = RepContext::new(3, 1, 4).unwrap();
        assert_pass(&verify_centralizer(&ctx, 1, Convention::Standard).unwrap());
    }
}
