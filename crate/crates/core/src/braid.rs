//! Deformed flip solutions `ř = DP`, their Baxterization `R(λ) = λ·Př + P`,
//! N-site generators and the Hamiltonian `ℋ = Σ_j ř_j`.

use serde::{Deserialize, Serialize};

use crate::context::{BraidParams, RepContext};
use crate::error::{Error, Result};
use crate::linalg::{embed_at_site, SparseMat};
use crate::report::{CheckReport, Checker};
use crate::scalar::Scalar;

/// `P = Σ_{x,y} e_xy ⊗ e_yx` on `C^n ⊗ C^n`.
pub fn build_permutation(n: usize) -> SparseMat {
    let trip = (0..n).flat_map(|x| (0..n).map(move |y| (x * n + y, y * n + x, Scalar::one())));
    SparseMat::from_triplets(n * n, n * n, trip).expect("indices in range")
}

/// `D = id − 2α Σ_{x>k} e_xx ⊗ e_xx`.
pub fn build_deformation(p: &BraidParams) -> SparseMat {
    let n = p.n;
    let fermi = Scalar::from(1 - 2 * p.alpha);
    let diag: Vec<Scalar> = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n + 1, i % n + 1);
            if x == y && p.is_fermionic(x) {
                fermi.clone()
            } else {
                Scalar::one()
            }
        })
        .collect();
    SparseMat::diagonal(&diag)
}

pub fn build_rcheck(p: &BraidParams) -> SparseMat {
    &build_deformation(p) * &build_permutation(p.n)
}

/// `ř(e_x ⊗ e_y) = e_{y+1} ⊗ e_{x−1}`, letters taken cyclically in `[n]`.
pub fn lyubashenko(n: usize) -> SparseMat {
    let trip = (0..n).flat_map(|x| {
        (0..n).map(move |y| {
            let (a, b) = ((y + 1) % n, (x + n - 1) % n);
            (a * n + b, x * n + y, Scalar::one())
        })
    });
    SparseMat::from_triplets(n * n, n * n, trip).expect("indices in range")
}

/// Local dimension `n` of an operator on `C^n ⊗ C^n`.
pub fn local_dim(m: &SparseMat) -> Result<usize> {
    let d = m.nrows();
    let n = (d as f64).sqrt().round() as usize;
    if !m.is_square() || n * n != d {
        return Err(Error::InvalidParams(format!(
            "expected an operator on C^n ⊗ C^n, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(n)
}

/// `(ř⊗id)(id⊗ř)(ř⊗id) = (id⊗ř)(ř⊗id)(id⊗ř)`.
pub fn check_braid(m: &SparseMat) -> Result<CheckReport> {
    let n = local_dim(m)?;
    let id = SparseMat::identity(n);
    let a = m.kron(&id);
    let b = id.kron(m);
    let lhs = &(&a * &b) * &a;
    let rhs = &(&b * &a) * &b;
    let mut c = Checker::new("braid");
    c.mat_eq("(ř⊗1)(1⊗ř)(ř⊗1) vs (1⊗ř)(ř⊗1)(1⊗ř)", &lhs, &rhs);
    Ok(c.finish())
}

pub fn check_involutive(m: &SparseMat) -> Result<CheckReport> {
    if !m.is_square() {
        return Err(Error::InvalidParams(format!(
            "involutivity needs a square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let mut c = Checker::new("involutive");
    c.mat_eq("ř²", &(m * m), &SparseMat::identity(m.nrows()));
    Ok(c.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Combinatorial,
    NonCombinatorial,
    NotBasisPreserving,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::Combinatorial => "combinatorial",
            Classification::NonCombinatorial => "non-combinatorial",
            Classification::NotBasisPreserving => "not-basis-preserving",
        })
    }
}

/// Classifies an involutive braid solution by its coefficients in the tensor
/// basis. Fails with [`Error::Precondition`] when `m` is not one.
pub fn classify(m: &SparseMat) -> Result<Classification> {
    let parts = vec![check_braid(m)?, check_involutive(m)?];
    let pre = CheckReport::combine("involutive braid solution", parts);
    if !pre.passed {
        return Err(Error::Precondition(Box::new(pre)));
    }
    let t = m.transpose();
    let mut all_unit = true;
    for col in 0..t.nrows() {
        match t.row(col) {
            [(_, v)] if v.is_one() => {}
            [(_, v)] if (-v).is_one() => all_unit = false,
            _ => return Ok(Classification::NotBasisPreserving),
        }
    }
    Ok(if all_unit { Classification::Combinatorial } else { Classification::NonCombinatorial })
}

/// `R(λ) = λ·(P ř) + P`.
pub fn baxterize(rcheck: &SparseMat, lambda: &Scalar) -> Result<SparseMat> {
    let p = build_permutation(local_dim(rcheck)?);
    let r = &p * rcheck;
    Ok(&r.scale(lambda) + &p)
}

pub fn r_matrix(p: &BraidParams, lambda: &Scalar) -> SparseMat {
    baxterize(&build_rcheck(p), lambda).expect("ř is n²×n²")
}

/// `R_12(λ1−λ2) R_13(λ1) R_23(λ2) = R_23(λ2) R_13(λ1) R_12(λ1−λ2)`.
pub fn check_ybe_parametric(p: &BraidParams, l1: &Scalar, l2: &Scalar) -> CheckReport {
    let n = p.n;
    let id = SparseMat::identity(n);
    let p23 = id.kron(&build_permutation(n));
    let delta = l1 - l2;
    let r12 = r_matrix(p, &delta).kron(&id);
    let r13 = &(&p23 * &r_matrix(p, l1).kron(&id)) * &p23;
    let r23 = id.kron(&r_matrix(p, l2));
    let lhs = &(&r12 * &r13) * &r23;
    let rhs = &(&r23 * &r13) * &r12;
    let mut c = Checker::new(format!("ybe(λ1={l1}, λ2={l2})"));
    c.mat_eq("R12 R13 R23 vs R23 R13 R12", &lhs, &rhs);
    c.finish()
}

/// `R_12(λ) R_21(−λ) = (1 − λ²) id` with `R_21 = P R_12 P`.
pub fn check_unitarity(p: &BraidParams, lambda: &Scalar) -> CheckReport {
    let perm = build_permutation(p.n);
    let r = r_matrix(p, lambda);
    let r21 = &(&perm * &r_matrix(p, &-lambda)) * &perm;
    let scalar = &Scalar::one() - &(lambda * lambda);
    let mut c = Checker::new(format!("unitarity(λ={lambda})"));
    c.mat_eq("R12(λ)R21(−λ) vs (1−λ²)id", &(&r * &r21), &SparseMat::scalar_identity(p.n * p.n, &scalar));
    c.finish()
}

/// `ř_j`, `j = 1..N−1`, embedded at sites `(j, j+1)`.
pub fn braid_generators(ctx: &RepContext, rcheck: &SparseMat) -> Result<Vec<SparseMat>> {
    (1..ctx.sites).map(|j| embed_at_site(rcheck, j, ctx.n, ctx.sites)).collect()
}

pub fn build_hamiltonian(ctx: &RepContext, alpha: i64) -> Result<SparseMat> {
    if ctx.sites < 2 {
        return Err(Error::InvalidParams("the Hamiltonian needs at least 2 sites".into()));
    }
    let r = build_rcheck(&BraidParams::of_context(ctx, alpha));
    let gens = braid_generators(ctx, &r)?;
    let d = ctx.dim();
    Ok(gens.iter().fold(SparseMat::zeros(d, d), |acc, g| &acc + g))
}

/// Braid and involutivity for the deformation at `p`.
pub fn check_solution(p: &BraidParams) -> CheckReport {
    let r = build_rcheck(p);
    let parts = vec![check_braid(&r).expect("square"), check_involutive(&r).expect("square")];
    CheckReport::combine(format!("solution(n={}, k={}, α={})", p.n, p.k, p.alpha), parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vector;

    fn bp(n: usize, k: usize, alpha: i64) -> BraidParams {
        BraidParams::new(n, k, alpha).unwrap()
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(build_permutation(1), SparseMat::identity(1));
        let p2 = SparseMat::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        assert_eq!(build_permutation(2), p2);
        let e13 = Vector::basis(9, 2);
        assert_eq!(build_permutation(3).apply(&e13), Vector::basis(9, 6));
    }

    #[test]
    fn permutation_from_elementary_sum() {
        let n = 3;
        let mut sum = SparseMat::zeros(9, 9);
        for x in 1..=n {
            for y in 1..=n {
                sum = &sum + &SparseMat::elementary(n, x, y).kron(&SparseMat::elementary(n, y, x));
            }
        }
        assert_eq!(sum, build_permutation(n));
    }

    #[test]
    fn deformation_examples() {
        assert!(build_deformation(&bp(3, 1, 0)).is_identity());
        let d = build_deformation(&bp(2, 1, 1));
        assert_eq!(d, SparseMat::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]));
    }

    #[test]
    fn deformation_square() {
        // D² = id + 4α(α−1) Σ_{x>k} e_xx⊗e_xx
        for alpha in 0..=2 {
            let p = bp(3, 1, alpha);
            let d = build_deformation(&p);
            let mut proj = SparseMat::zeros(9, 9);
            for x in 2..=3 {
                proj = &proj + &SparseMat::elementary(3, x, x).kron(&SparseMat::elementary(3, x, x));
            }
            let expected = &SparseMat::identity(9) + &proj.scale(&Scalar::from(4 * alpha * (alpha - 1)));
            assert_eq!(&d * &d, expected, "α={alpha}");
        }
    }

    #[test]
    fn rcheck_action_on_basis() {
        for (n, k, alpha) in [(2, 1, 1), (3, 1, 1), (3, 2, 2), (4, 2, 1)] {
            let p = bp(n, k, alpha);
            let r = build_rcheck(&p);
            for x in 1..=n {
                for y in 1..=n {
                    let v = r.apply(&Vector::basis(n * n, (x - 1) * n + y - 1));
                    let target = Vector::basis(n * n, (y - 1) * n + x - 1);
                    let coeff = if x == y && x > k { Scalar::from(1 - 2 * alpha) } else { Scalar::one() };
                    assert_eq!(v, target.scale(&coeff), "n={n} k={k} α={alpha} x={x} y={y}");
                }
            }
        }
        assert_eq!(build_rcheck(&bp(3, 1, 0)), build_permutation(3));
    }

    #[test]
    fn pd_equals_dp() {
        let p = bp(3, 1, 2);
        let (d, perm) = (build_deformation(&p), build_permutation(3));
        assert_eq!(&perm * &d, &d * &perm);
    }

    #[test]
    fn braid_iff_alpha_in_zero_one() {
        for n in 2..=4 {
            for k in 1..n {
                for alpha in 0..=1 {
                    assert!(check_solution(&bp(n, k, alpha)).passed, "n={n} k={k} α={alpha}");
                }
                assert!(!check_solution(&bp(n, k, 2)).passed, "n={n} k={k} α=2");
            }
        }
    }

    #[test]
    fn lyubashenko_is_combinatorial() {
        let l = lyubashenko(3);
        assert!(check_braid(&l).unwrap().passed);
        assert_eq!(classify(&l).unwrap(), Classification::Combinatorial);
    }

    #[test]
    fn classification() {
        assert_eq!(classify(&build_permutation(3)).unwrap(), Classification::Combinatorial);
        assert_eq!(classify(&build_rcheck(&bp(2, 1, 1))).unwrap(), Classification::NonCombinatorial);
        match classify(&build_rcheck(&bp(2, 1, 2))) {
            Err(Error::Precondition(r)) => assert!(!r.passed),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn baxterize_examples() {
        let p = build_permutation(2);
        let r = build_rcheck(&bp(2, 1, 0));
        assert_eq!(baxterize(&r, &Scalar::zero()).unwrap(), p);
        assert_eq!(baxterize(&r, &Scalar::one()).unwrap(), &SparseMat::identity(4) + &p);
    }

    #[test]
    fn ybe_examples() {
        assert!(check_ybe_parametric(&bp(2, 1, 1), &Scalar::zero(), &Scalar::zero()).passed);
        assert!(check_ybe_parametric(&bp(2, 1, 1), &Scalar::one(), &Scalar::ratio(1, 2)).passed);
        assert!(check_ybe_parametric(&bp(3, 2, 1), &Scalar::ratio(2, 3), &Scalar::ratio(1, 5)).passed);
        assert!(!check_ybe_parametric(&bp(2, 1, 2), &Scalar::one(), &Scalar::ratio(1, 2)).passed);
    }

    #[test]
    fn unitarity_examples() {
        let p = bp(2, 1, 1);
        for l in [Scalar::zero(), Scalar::ratio(1, 2), Scalar::one(), Scalar::ratio(-7, 3)] {
            assert!(check_unitarity(&p, &l).passed, "λ={l}");
        }
        let r = r_matrix(&p, &Scalar::ratio(1, 2));
        let perm = build_permutation(2);
        let prod = &r * &(&(&perm * &r_matrix(&p, &Scalar::ratio(-1, 2))) * &perm);
        assert_eq!(prod, SparseMat::scalar_identity(4, &Scalar::ratio(3, 4)));
    }

    #[test]
    fn hamiltonian_examples() {
        let ctx = RepContext::new(2, 1, 2).unwrap();
        assert_eq!(build_hamiltonian(&ctx, 1).unwrap(), build_rcheck(&bp(2, 1, 1)));
        let ctx = RepContext::new(2, 1, 3).unwrap();
        let h = build_hamiltonian(&ctx, 1).unwrap();
        let e111 = Vector::basis(8, 0);
        let e222 = Vector::basis(8, 7);
        assert_eq!(h.apply(&e111), e111.scale(&Scalar::from(2)));
        assert_eq!(h.apply(&e222), e222.scale(&Scalar::from(-2)));
        assert!(build_hamiltonian(&ctx.with_sites(1).unwrap(), 1).is_err());
    }

    #[test]
    fn embedded_generator_acts_with_sign() {
        let ctx = RepContext::new(2, 1, 3).unwrap();
        let gens = braid_generators(&ctx, &build_rcheck(&bp(2, 1, 1))).unwrap();
        let e222 = Vector::basis(8, 7);
        assert_eq!(gens[1].apply(&e222), e222.scale(&Scalar::from(-1)));
    }
}
