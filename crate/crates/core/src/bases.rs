//! Combinatorial basis vectors `𝔲^±_{m_1…m_n}`, the generator action on
//! them, and the two-site spectral decomposition with its transition graphs.

use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::braid::{build_hamiltonian, build_rcheck};
use crate::context::{BraidParams, RepContext};
use crate::error::{Error, Result};
use crate::linalg::{rank_of_vectors, Vector};
use crate::report::{CheckReport, Checker};
use crate::scalar::Scalar;
use crate::yangian::{Convention, Rep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Occupation numbers labelling `𝔲^±_{m_1…m_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex {
    pub sign: Sign,
    pub m: Vec<usize>,
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.m.iter().map(|v| v.to_string()).collect();
        write!(f, "u{}_({})", self.sign, parts.join(","))
    }
}

impl MultiIndex {
    pub fn new(sign: Sign, m: Vec<usize>) -> Self {
        MultiIndex { sign, m }
    }

    /// Letters whose occupation is capped at 1: fermionic ones for `+`,
    /// bosonic ones for `−`.
    pub fn is_restricted(&self, ctx: &RepContext, x: usize) -> bool {
        match self.sign {
            Sign::Plus => ctx.is_fermionic(x),
            Sign::Minus => !ctx.is_fermionic(x),
        }
    }

    pub fn is_admissible(&self, ctx: &RepContext) -> bool {
        self.m.len() == ctx.n
            && self.m.iter().sum::<usize>() == ctx.sites
            && (1..=ctx.n).all(|x| !self.is_restricted(ctx, x) || self.m[x - 1] <= 1)
    }

    /// `m` with `m_from − 1` and `m_to + 1`, or `None` if it would go negative.
    pub fn shifted(&self, from: usize, to: usize) -> Option<MultiIndex> {
        if self.m[from - 1] == 0 {
            return None;
        }
        let mut m = self.m.clone();
        m[from - 1] -= 1;
        m[to - 1] += 1;
        Some(MultiIndex { sign: self.sign, m })
    }
}

/// The families need both a bosonic and a fermionic letter.
fn require_mixed(ctx: &RepContext) -> Result<()> {
    if ctx.k == 0 || ctx.k >= ctx.n {
        return Err(Error::InvalidParams(format!("basis families need 1 <= k <= n-1, got n={}, k={}", ctx.n, ctx.k)));
    }
    Ok(())
}

/// A basis vector with its label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledVector {
    pub index: MultiIndex,
    pub vec: Vector,
}

fn compositions(total: usize, parts: usize, caps: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == parts {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    let cap = caps[prefix.len()].min(total);
    for v in 0..=cap {
        prefix.push(v);
        compositions(total - v, parts, caps, prefix, out);
        prefix.pop();
    }
}

/// All admissible multi-indices, highest vector first: descending
/// lexicographic for `+` (starting at `(N,0,…)`) and ascending for `−`
/// (starting at `(…,0,N)`).
pub fn enumerate_admissible(ctx: &RepContext, sign: Sign) -> Vec<MultiIndex> {
    let probe = MultiIndex::new(sign, vec![]);
    let caps: Vec<usize> = (1..=ctx.n).map(|x| if probe.is_restricted(ctx, x) { 1 } else { ctx.sites }).collect();
    let mut out = Vec::new();
    compositions(ctx.sites, ctx.n, &caps, &mut Vec::new(), &mut out);
    if sign == Sign::Plus {
        out.reverse();
    }
    out.into_iter().map(|m| MultiIndex::new(sign, m)).collect()
}

/// `𝔲^+ = e_1^{⊗N}` or `𝔲^- = e_n^{⊗N}`, with the annihilation check
/// `𝔣_x 𝔲^+ = 0` (resp. `𝔢_x 𝔲^- = 0`).
pub fn highest_vector(rep: &Rep, sign: Sign) -> (LabeledVector, CheckReport) {
    let ctx = rep.ctx;
    let letter = if sign == Sign::Plus { 1 } else { ctx.n };
    let idx = ctx.encode(&vec![letter; ctx.sites]).expect("valid letter");
    let vec = Vector::basis(ctx.dim(), idx);
    let mut m = vec![0; ctx.n];
    m[letter - 1] = ctx.sites;
    let mut c = Checker::new(format!("highest vector u{sign}"));
    for x in 1..ctx.n {
        let (name, op) = if sign == Sign::Plus { ("f", rep.f(x)) } else { ("e", rep.e(x)) };
        c.vec_eq(format!("{name}{x} u{sign}"), &op.apply(&vec), &Vector::zeros(ctx.dim()));
    }
    (LabeledVector { index: MultiIndex::new(sign, m), vec }, c.finish())
}

/// Ordered product of coproduct matrices applied to the highest vector:
/// `𝔱_{1,n}^{m_n} ⋯ 𝔱_{1,2}^{m_2} 𝔲^+` or `𝔱_{n,n−1}^{m_{n−1}} ⋯ 𝔱_{n,1}^{m_1} 𝔲^-`.
pub fn build_u_vector(rep: &Rep, idx: &MultiIndex) -> Result<LabeledVector> {
    let ctx = rep.ctx;
    require_mixed(&ctx)?;
    if !idx.is_admissible(&ctx) {
        return Err(Error::Inadmissible(format!("{idx} for n={}, k={}, N={}", ctx.n, ctx.k, ctx.sites)));
    }
    let (hv, _) = highest_vector(rep, idx.sign);
    let mut v = hv.vec;
    let n = ctx.n;
    match idx.sign {
        Sign::Plus => {
            for y in 2..=n {
                for _ in 0..idx.m[y - 1] {
                    v = rep.t(1, y).apply(&v);
                }
            }
        }
        Sign::Minus => {
            for y in 1..n {
                for _ in 0..idx.m[y - 1] {
                    v = rep.t(n, y).apply(&v);
                }
            }
        }
    }
    Ok(LabeledVector { index: idx.clone(), vec: v })
}

/// `ℋ v = ±(N−1) v` for every admissible vector of both families, plus
/// linear independence of each family.
pub fn check_hamiltonian_eigen(rep: &Rep) -> Result<CheckReport> {
    let ctx = rep.ctx;
    require_mixed(&ctx)?;
    let ham = build_hamiltonian(&ctx, 1)?;
    let mut c = Checker::new(format!("hamiltonian eigenvectors(n={}, k={}, N={})", ctx.n, ctx.k, ctx.sites));
    for sign in [Sign::Plus, Sign::Minus] {
        let mut vecs = Vec::new();
        for idx in enumerate_admissible(&ctx, sign) {
            let u = build_u_vector(rep, &idx)?;
            c.expect(format!("{idx} is nonzero"), !u.vec.is_zero());
            let lambda = Scalar::from(sign.value() * (ctx.sites as i64 - 1));
            c.vec_eq(format!("H {idx}"), &ham.apply(&u.vec), &u.vec.scale(&lambda));
            vecs.push(u.vec);
        }
        c.count_eq(format!("rank of the u{sign} family"), rank_of_vectors(&vecs), vecs.len());
    }
    Ok(c.finish())
}

/// One predicted transition: generator name, coefficient, target (None
/// when the target is outside the admissible set, predicting zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub generator: String,
    pub coefficient: Scalar,
    pub target: Option<MultiIndex>,
}

fn sgn(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The coefficient table for `𝔢_x`, `𝔣_x` acting on `idx`. On restricted
/// letters the occupation `m + 1` in a coefficient is read mod 2.
pub fn predict_raise_lower(ctx: &RepContext, idx: &MultiIndex, x: usize) -> [Prediction; 2] {
    let n = ctx.n;
    let m = |y: usize| idx.m[y - 1] as i64;
    let plus1 = |y: usize| if idx.is_restricted(ctx, y) { (m(y) + 1) % 2 } else { m(y) + 1 };
    let x1 = x + 1;
    let (b, c) = match idx.sign {
        Sign::Plus => {
            if x == 1 {
                (1, plus1(1) * m(2))
            } else if !ctx.is_fermionic(x1) {
                (m(x), m(x1))
            } else {
                (sgn(m(x1)) * m(x), m(x1))
            }
        }
        Sign::Minus => {
            if x == n - 1 {
                (sgn(m(n) + m(n - 1) - 1) * m(n - 1) * plus1(n), 1)
            } else if !ctx.is_fermionic(x1) {
                (m(x), m(x1))
            } else {
                (sgn(m(x1) + m(x) - 1) * m(x), m(x1))
            }
        }
    };
    let admissible = |t: Option<MultiIndex>| t.filter(|t| t.is_admissible(ctx));
    [
        Prediction { generator: format!("e{x}"), coefficient: Scalar::from(b), target: admissible(idx.shifted(x, x1)) },
        Prediction { generator: format!("f{x}"), coefficient: Scalar::from(c), target: admissible(idx.shifted(x1, x)) },
    ]
}

/// The diagonal part of the action: `𝔥_x` (fermionic x) and `ℰ_x`.
pub fn predict_diagonal(ctx: &RepContext, idx: &MultiIndex) -> Vec<(String, Scalar)> {
    let mut out = Vec::new();
    for x in 1..=ctx.n {
        let mx = idx.m[x - 1] as i64;
        if ctx.is_fermionic(x) {
            out.push((format!("h{x}"), Scalar::from(sgn(mx))));
            out.push((format!("E{x}"), Scalar::from(mx * sgn(mx - 1))));
        } else {
            out.push((format!("E{x}"), Scalar::from(mx)));
        }
    }
    out
}

/// Checks the full action table on one basis vector. A nonzero actual
/// vector that is a multiple of the predicted target with a different
/// coefficient is reported as a convention mismatch.
pub fn check_action(rep: &Rep, idx: &MultiIndex) -> Result<CheckReport> {
    let ctx = rep.ctx;
    let u = build_u_vector(rep, idx)?;
    let mut c = Checker::new(format!("action on {idx}"));
    for (name, lambda) in predict_diagonal(&ctx, idx) {
        let x: usize = name[1..].parse().expect("generator index");
        let op = if name.starts_with('h') { rep.h(x) } else { rep.eps(x) };
        c.vec_eq(format!("{name} {idx}"), &op.apply(&u.vec), &u.vec.scale(&lambda));
    }
    for x in 1..ctx.n {
        for (pred, op) in predict_raise_lower(&ctx, idx, x).into_iter().zip([rep.e(x), rep.f(x)]) {
            let actual = op.apply(&u.vec);
            let (expected, target_vec) = match &pred.target {
                Some(t) => {
                    let tv = build_u_vector(rep, t)?.vec;
                    (tv.scale(&pred.coefficient), Some(tv))
                }
                None => (Vector::zeros(ctx.dim()), None),
            };
            if actual == expected {
                c.expect(format!("{} {idx}", pred.generator), true);
                continue;
            }
            let target_name = pred.target.as_ref().map(|t| t.to_string()).unwrap_or_else(|| "0".into());
            match target_vec.as_ref().and_then(|tv| actual.multiple_of(tv)) {
                Some(coef) => {
                    c.scalar_eq(
                        format!("convention-mismatch: {} {idx} -> {target_name}", pred.generator),
                        vec![],
                        &coef,
                        &pred.coefficient,
                    );
                }
                None => {
                    c.vec_eq(format!("{} {idx} -> {target_name}", pred.generator), &actual, &expected);
                }
            }
        }
    }
    Ok(c.finish())
}

/// Action tables over every admissible index of both families.
pub fn check_all_actions(rep: &Rep) -> Result<CheckReport> {
    let ctx = rep.ctx;
    let mut parts = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for idx in enumerate_admissible(&ctx, sign) {
            parts.push(check_action(rep, &idx)?);
        }
    }
    Ok(CheckReport::combine(
        format!("action tables(n={}, k={}, N={}, {})", ctx.n, ctx.k, ctx.sites, rep.convention),
        parts,
    ))
}

/// Pair label `(i, j)`, `i ≤ j`, of a two-site basis vector.
pub fn pair_label(idx: &MultiIndex) -> (usize, usize) {
    let letters: Vec<usize> = idx.m.iter().enumerate().flat_map(|(x, &c)| std::iter::repeat_n(x + 1, c)).collect();
    (letters[0], letters[1])
}

pub fn pair_name(sign: Sign, (i, j): (usize, usize)) -> String {
    format!("u{sign}_({i},{j})")
}

/// Two-site eigenvectors of `ř`, as displayed for each family.
#[derive(Clone, Debug)]
pub struct Spectrum2 {
    pub n: usize,
    pub k: usize,
    pub plus: Vec<((usize, usize), Vector)>,
    pub minus: Vec<((usize, usize), Vector)>,
    pub report: CheckReport,
}

fn e2(n: usize, i: usize, j: usize) -> Vector {
    Vector::basis(n * n, (i - 1) * n + (j - 1))
}

/// The vectors written out in coordinates, independent of the generator
/// construction.
fn displayed_vector(n: usize, k: usize, sign: Sign, (i, j): (usize, usize)) -> Vector {
    let two = Scalar::from(2);
    match sign {
        Sign::Plus if i == j && i == 1 => e2(n, 1, 1),
        Sign::Plus if i == j => e2(n, i, i).scale(&two),
        Sign::Plus => &e2(n, i, j) + &e2(n, j, i),
        Sign::Minus if i == j && i == n => e2(n, n, n),
        Sign::Minus if i == j => {
            debug_assert!(i > k);
            e2(n, i, i).scale(&two)
        }
        // u^-_{i,n} = e_n⊗e_i − e_i⊗e_n and u^-_{i,j} = e_j⊗e_i − e_i⊗e_j
        Sign::Minus => &e2(n, j, i) - &e2(n, i, j),
    }
}

pub fn spectral_decomposition_n2(n: usize, k: usize, conv: Convention) -> Result<Spectrum2> {
    let ctx = RepContext::new(n, k, 2)?;
    require_mixed(&ctx)?;
    let rep = Rep::new(ctx, conv)?;
    let r = build_rcheck(&BraidParams::of_context(&ctx, 1));
    let mut c = Checker::new(format!("spectrum N=2(n={n}, k={k})"));
    let mut fams = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        let mut fam = Vec::new();
        for idx in enumerate_admissible(&ctx, sign) {
            let u = build_u_vector(&rep, &idx)?;
            let label = pair_label(&idx);
            let name = pair_name(sign, label);
            c.vec_eq(format!("{name} as displayed"), &u.vec, &displayed_vector(n, k, sign, label));
            c.vec_eq(format!("ř {name}"), &r.apply(&u.vec), &u.vec.scale(&Scalar::from(sign.value())));
            fam.push((label, u.vec));
        }
        fam.sort_by_key(|(l, _)| *l);
        let vecs: Vec<Vector> = fam.iter().map(|(_, v)| v.clone()).collect();
        c.count_eq(format!("rank u{sign}"), rank_of_vectors(&vecs), vecs.len());
        fams.push(fam);
    }
    let (plus, minus) = (fams.remove(0), fams.remove(0));
    c.count_eq("multiplicity of +1 is n(n−1)/2 + k", plus.len(), n * (n - 1) / 2 + k);
    c.count_eq("multiplicity of −1 is n(n+1)/2 − k", minus.len(), n * (n + 1) / 2 - k);
    let all: Vec<Vector> = plus.iter().chain(minus.iter()).map(|(_, v)| v.clone()).collect();
    c.count_eq("both families span C^n ⊗ C^n", rank_of_vectors(&all), n * n);
    Ok(Spectrum2 { n, k, plus, minus, report: c.finish() })
}

/// `(from, to, generator)` between two-site basis labels.
pub type Edge = ((usize, usize), (usize, usize), String);

/// Directed edges of the transition graph.
pub fn action_edges(spectrum: &Spectrum2, sign: Sign, conv: Convention) -> Result<Vec<Edge>> {
    let ctx = RepContext::new(spectrum.n, spectrum.k, 2)?;
    let rep = Rep::new(ctx, conv)?;
    let fam = if sign == Sign::Plus { &spectrum.plus } else { &spectrum.minus };
    let mut edges = Vec::new();
    for (label, v) in fam {
        for x in 1..spectrum.n {
            for (name, op) in [(format!("e{x}"), rep.e(x)), (format!("f{x}"), rep.f(x))] {
                let w = op.apply(v);
                if w.is_zero() {
                    continue;
                }
                let hit = fam.iter().find(|(_, u)| w.multiple_of(u).is_some());
                match hit {
                    Some((to, _)) => edges.push((*label, *to, name)),
                    None => {
                        return Err(Error::InvalidParams(format!(
                            "{name} maps {} outside the labelled basis",
                            pair_name(sign, *label)
                        )))
                    }
                }
            }
        }
    }
    Ok(edges)
}

/// Graphviz rendering: nodes in label order, a `zeta` loop on every node
/// (the diagonal generators), then the `e`/`f` edges.
pub fn action_graph_dot(n: usize, k: usize, sign: Sign, conv: Convention) -> Result<String> {
    if n > 4 {
        return Err(Error::InvalidParams("transition graphs are drawn for n <= 4".into()));
    }
    let spectrum = spectral_decomposition_n2(n, k, conv)?;
    let edges = action_edges(&spectrum, sign, conv)?;
    let fam = if sign == Sign::Plus { &spectrum.plus } else { &spectrum.minus };
    let mut out = String::new();
    let family = if sign == Sign::Plus { "plus" } else { "minus" };
    writeln!(out, "digraph gl_{k}_{}_{family} {{", n - k).unwrap();
    for (label, _) in fam {
        writeln!(out, "  \"{}\";", pair_name(sign, *label)).unwrap();
    }
    for (label, _) in fam {
        let name = pair_name(sign, *label);
        writeln!(out, "  \"{name}\" -> \"{name}\" [label=\"zeta\"];").unwrap();
    }
    for (from, to, g) in &edges {
        writeln!(out, "  \"{}\" -> \"{}\" [label=\"{g}\"];", pair_name(sign, *from), pair_name(sign, *to)).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
