//! The acceptance matrix: eleven grouped checks, each with a wall-clock
//! bound. Shared by the `acceptance` test target and `glkm report-all`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bases::{
    action_edges, action_graph_dot, check_all_actions, check_hamiltonian_eigen, pair_name, spectral_decomposition_n2,
    Sign,
};
use crate::braid::{
    build_rcheck, check_solution, check_unitarity, check_ybe_parametric, classify, lyubashenko, Classification,
};
use crate::context::{BraidParams, RepContext};
use crate::error::Result;
use crate::gl11::{
    enumerate_ssyt, highest_weight_kernel, hook_shape, hw_module_suite, kernel_dimension_check, ssyt_bijection,
    tensor_decompose, verify_fund1, verify_orthogonality, xx_hamiltonian_check,
};
use crate::linalg::SparseMat;
use crate::report::{CheckReport, Checker};
use crate::scalar::Scalar;
use crate::yangian::{
    check_antipode, check_lax_rtt, check_monodromy_rtt, check_monodromy_vs_lax, tau_series, verify_centralizer,
    verify_gl_relations, verify_hatted, verify_serre, Convention, Rep,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    pub bound: Duration,
}

pub const CRITERIA: [Criterion; 11] = [
    Criterion { id: 1, title: "braid iff alpha in {0,1}", bound: Duration::from_secs(1) },
    Criterion { id: 2, title: "classification", bound: Duration::from_secs(1) },
    Criterion { id: 3, title: "parametric YBE and unitarity", bound: Duration::from_secs(5) },
    Criterion { id: 4, title: "relation suites", bound: Duration::from_secs(60) },
    Criterion { id: 5, title: "centralizer", bound: Duration::from_secs(60) },
    Criterion { id: 6, title: "RTT relations", bound: Duration::from_secs(30) },
    Criterion { id: 7, title: "Casimir elements", bound: Duration::from_secs(60) },
    Criterion { id: 8, title: "antipode", bound: Duration::from_secs(10) },
    Criterion { id: 9, title: "basis vectors and action tables", bound: Duration::from_secs(120) },
    Criterion { id: 10, title: "two-site spectrum and graphs", bound: Duration::from_secs(10) },
    Criterion { id: 11, title: "gl(1,1) modules and tableaux", bound: Duration::from_secs(60) },
];

/// Outcome of one criterion: its combined report and the measured time.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub criterion: Criterion,
    pub report: CheckReport,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn within_bound(&self) -> bool {
        self.elapsed <= self.criterion.bound
    }

    pub fn passed(&self) -> bool {
        self.report.passed && self.within_bound()
    }

    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} [{}] {} ({} identities, {:.3} s, bound {} s)",
            self.criterion.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.criterion.title,
            self.report.identities,
            self.elapsed.as_secs_f64(),
            self.criterion.bound.as_secs()
        )
    }
}

pub fn run(id: usize) -> Outcome {
    let criterion = CRITERIA[id - 1];
    let start = Instant::now();
    let result = match id {
        1 => braid_gate(),
        2 => classification(),
        3 => parametric(),
        4 => relations(),
        5 => centralizer(),
        6 => rtt(),
        7 => casimir(),
        8 => antipode(),
        9 => basis_families(),
        10 => spectrum_and_graphs(),
        11 => gl11_suite(),
        _ => unreachable!("criteria are numbered 1..=11"),
    };
    let name = format!("criterion {id}: {}", criterion.title);
    let report = match result {
        Ok(parts) => CheckReport::combine(name, parts),
        Err(e) => {
            let mut c = Checker::new(name);
            c.expect(format!("error: {e}"), false);
            c.finish()
        }
    };
    Outcome { criterion, report, elapsed: start.elapsed() }
}

pub fn run_all() -> Vec<Outcome> {
    (1..=CRITERIA.len()).map(run).collect()
}

fn mixed_pairs(ns: impl IntoIterator<Item = usize>) -> Vec<(usize, usize)> {
    ns.into_iter().flat_map(|n| (1..n).map(move |k| (n, k))).collect()
}

fn contexts(ns: impl IntoIterator<Item = usize>, sites: impl IntoIterator<Item = usize> + Clone) -> Vec<RepContext> {
    mixed_pairs(ns)
        .into_iter()
        .flat_map(|(n, k)| sites.clone().into_iter().map(move |s| RepContext::new(n, k, s).expect("valid grid")))
        .collect()
}

fn par<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<CheckReport> + Sync + Send) -> Result<Vec<CheckReport>> {
    items.par_iter().map(f).collect()
}

/// Rational spectral-parameter pairs for the parametric checks.
pub fn sample_pairs() -> Vec<(Scalar, Scalar)> {
    vec![
        (Scalar::ratio(1, 3), Scalar::ratio(1, 7)),
        (Scalar::from(2), Scalar::ratio(-1, 2)),
        (Scalar::ratio(5, 4), Scalar::from(3)),
        (Scalar::ratio(-2, 3), Scalar::ratio(1, 5)),
    ]
}

fn braid_gate() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for (n, k) in mixed_pairs(2..=4) {
        for alpha in [0, 1] {
            out.push(check_solution(&BraidParams::new(n, k, alpha)?));
        }
        let bad = check_solution(&BraidParams::new(n, k, 2)?);
        let mut c = Checker::new(format!("α=2 rejected(n={n}, k={k})"));
        c.expect("braid or involutivity fails", !bad.passed);
        out.push(c.finish());
    }
    Ok(out)
}

fn classification() -> Result<Vec<CheckReport>> {
    let mut c = Checker::new("classify");
    for n in 2..=4 {
        c.expect(
            format!("lyubashenko(n={n}) combinatorial"),
            classify(&lyubashenko(n))? == Classification::Combinatorial,
        );
        for k in 1..n {
            let zero = classify(&build_rcheck(&BraidParams::new(n, k, 0)?))?;
            let one = classify(&build_rcheck(&BraidParams::new(n, k, 1)?))?;
            c.expect(format!("α=0 combinatorial(n={n}, k={k})"), zero == Classification::Combinatorial);
            c.expect(format!("α=1 non-combinatorial(n={n}, k={k})"), one == Classification::NonCombinatorial);
        }
    }
    Ok(vec![c.finish()])
}

fn parametric() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for (n, k) in mixed_pairs(2..=3) {
        for alpha in [0, 1] {
            let p = BraidParams::new(n, k, alpha)?;
            for (l1, l2) in sample_pairs() {
                out.push(check_ybe_parametric(&p, &l1, &l2));
                out.push(check_unitarity(&p, &l1));
            }
        }
    }
    Ok(out)
}

fn relations() -> Result<Vec<CheckReport>> {
    let mut ctxs = contexts(2..=3, 1..=3);
    // the smallest case where the quartic relation applies
    ctxs.push(RepContext::new(4, 2, 1)?);
    let parts = par(&ctxs, |ctx| {
        let rep = Rep::new(*ctx, Convention::Standard)?;
        Ok(CheckReport::combine(
            format!("relations(n={}, k={}, N={})", ctx.n, ctx.k, ctx.sites),
            vec![verify_gl_relations(&rep), verify_serre(&rep), verify_hatted(&rep)?],
        ))
    })?;
    Ok(parts)
}

fn centralizer() -> Result<Vec<CheckReport>> {
    let ctxs = contexts(2..=3, 2..=5);
    let mut out = par(&ctxs, |ctx| verify_centralizer(ctx, 1, Convention::Standard))?;
    for ctx in [RepContext::new(2, 1, 2)?, RepContext::new(3, 2, 3)?] {
        let neg = verify_centralizer(&ctx, 0, Convention::Standard)?;
        let mut c = Checker::new(format!("negative control(n={}, k={}, N={})", ctx.n, ctx.k, ctx.sites));
        c.expect("α=0 braid matrix does not commute", !neg.passed);
        out.push(c.finish());
    }
    Ok(out)
}

fn rtt() -> Result<Vec<CheckReport>> {
    let ctxs = contexts(2..=3, 1..=3);
    par(&ctxs, |ctx| {
        let rep = Rep::new(*ctx, Convention::Standard)?;
        Ok(CheckReport::combine(
            format!("rtt(n={}, k={}, N={})", ctx.n, ctx.k, ctx.sites),
            vec![
                check_monodromy_rtt(ctx, 1, &sample_pairs())?,
                check_lax_rtt(&rep, &sample_pairs())?,
                check_monodromy_vs_lax(&rep)?,
            ],
        ))
    })
}

fn casimir() -> Result<Vec<CheckReport>> {
    let ctxs = contexts(2..=3, 1..=3);
    let mut out = par(&ctxs, |ctx| {
        let rep = Rep::new(*ctx, Convention::Standard)?;
        Ok(tau_series(&rep, 2 * ctx.sites + 2)?.report)
    })?;
    for (n, k) in mixed_pairs(2..=3) {
        let rep = Rep::new(RepContext::new(n, k, 1)?, Convention::Standard)?;
        let data = tau_series(&rep, 4)?;
        let mut c = Checker::new(format!("fundamental τ1(n={n}, k={k})"));
        c.mat_eq("τ1 = 2 id", &data.tau[1], &SparseMat::scalar_identity(n, &Scalar::from(2)));
        out.push(c.finish());
    }
    Ok(out)
}

fn antipode() -> Result<Vec<CheckReport>> {
    let ctxs = contexts(2..=3, 1..=2);
    par(&ctxs, |ctx| check_antipode(&Rep::new(*ctx, Convention::Standard)?, 4))
}

fn basis_families() -> Result<Vec<CheckReport>> {
    let ctxs = contexts(2..=3, 1..=6);
    par(&ctxs, |ctx| {
        let rep = Rep::new(*ctx, Convention::Standard)?;
        let mut parts = vec![check_all_actions(&rep)?];
        if ctx.sites >= 2 {
            parts.push(check_hamiltonian_eigen(&rep)?);
        }
        Ok(CheckReport::combine(format!("basis(n={}, k={}, N={})", ctx.n, ctx.k, ctx.sites), parts))
    })
}

type Edge = (&'static str, &'static str, &'static str);

/// Reference transition diagrams for (n, k) = (2, 1) and (3, 2).
pub const REFERENCE_GRAPHS: [(usize, usize, Sign, &[Edge]); 4] = [
    (2, 1, Sign::Plus, &[("u+_(1,1)", "u+_(1,2)", "e1"), ("u+_(1,2)", "u+_(1,1)", "f1")]),
    (2, 1, Sign::Minus, &[("u-_(2,2)", "u-_(1,2)", "f1"), ("u-_(1,2)", "u-_(2,2)", "e1")]),
    (
        3,
        2,
        Sign::Plus,
        &[
            ("u+_(1,1)", "u+_(1,2)", "e1"),
            ("u+_(1,2)", "u+_(1,1)", "f1"),
            ("u+_(2,2)", "u+_(1,2)", "f1"),
            ("u+_(1,2)", "u+_(2,2)", "e1"),
            ("u+_(2,2)", "u+_(2,3)", "e2"),
            ("u+_(2,3)", "u+_(2,2)", "f2"),
            ("u+_(1,2)", "u+_(1,3)", "e2"),
            ("u+_(1,3)", "u+_(1,2)", "f2"),
            ("u+_(2,3)", "u+_(1,3)", "f1"),
            ("u+_(1,3)", "u+_(2,3)", "e1"),
        ],
    ),
    (
        3,
        2,
        Sign::Minus,
        &[
            ("u-_(3,3)", "u-_(2,3)", "f2"),
            ("u-_(2,3)", "u-_(3,3)", "e2"),
            ("u-_(2,3)", "u-_(1,3)", "f1"),
            ("u-_(1,3)", "u-_(2,3)", "e1"),
            ("u-_(1,3)", "u-_(1,2)", "f2"),
            ("u-_(1,2)", "u-_(1,3)", "e2"),
        ],
    ),
];

/// Byte-exact DOT renderings kept under version control.
pub const GOLDEN_DOT: [(usize, usize, Sign, &str); 4] = [
    (2, 1, Sign::Plus, include_str!("../tests/golden/graph_n2_k1_plus.dot")),
    (2, 1, Sign::Minus, include_str!("../tests/golden/graph_n2_k1_minus.dot")),
    (3, 2, Sign::Plus, include_str!("../tests/golden/graph_n3_k2_plus.dot")),
    (3, 2, Sign::Minus, include_str!("../tests/golden/graph_n3_k2_minus.dot")),
];

pub const GOLDEN_SSYT: [(usize, usize, &str); 4] = [
    (3, 1, include_str!("../tests/golden/ssyt_N3_p1.txt")),
    (2, 0, include_str!("../tests/golden/ssyt_N2_p0.txt")),
    (4, 3, include_str!("../tests/golden/ssyt_N4_p3.txt")),
    (5, 2, include_str!("../tests/golden/ssyt_N5_p2.txt")),
];

fn spectrum_and_graphs() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for (n, k) in mixed_pairs(2..=4) {
        out.push(spectral_decomposition_n2(n, k, Convention::Standard)?.report);
    }
    let mut c = Checker::new("transition graphs");
    for (n, k, sign, edges) in REFERENCE_GRAPHS {
        let spectrum = spectral_decomposition_n2(n, k, Convention::Standard)?;
        let got: BTreeSet<(String, String, String)> = action_edges(&spectrum, sign, Convention::Standard)?
            .into_iter()
            .map(|(a, b, g)| (pair_name(sign, a), pair_name(sign, b), g))
            .collect();
        let want: BTreeSet<(String, String, String)> =
            edges.iter().map(|(a, b, g)| (a.to_string(), b.to_string(), g.to_string())).collect();
        c.expect(format!("edges(n={n}, k={k}, {sign})"), got == want);
        let nodes = if sign == Sign::Plus { spectrum.plus.len() } else { spectrum.minus.len() };
        let drawn: BTreeSet<&str> = edges.iter().flat_map(|(a, b, _)| [*a, *b]).collect();
        c.count_eq(format!("nodes(n={n}, k={k}, {sign})"), nodes, drawn.len());
    }
    for (n, k, sign, golden) in GOLDEN_DOT {
        c.expect(
            format!("dot golden(n={n}, k={k}, {sign})"),
            action_graph_dot(n, k, sign, Convention::Standard)? == golden,
        );
    }
    out.push(c.finish());
    Ok(out)
}

fn gl11_suite() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for sites in 2..=6 {
        out.push(xx_hamiltonian_check(sites)?);
    }
    out.push(hw_module_suite(20, 2024));
    let sizes: Vec<usize> = (1..=6).collect();
    out.extend(par(&sizes, |&sites| {
        let mut parts = vec![kernel_dimension_check(sites)?];
        for p in 0..sites {
            for w in highest_weight_kernel(sites, p)? {
                parts.push(verify_fund1(&w)?);
            }
            if p + 2 <= sites {
                parts.push(verify_orthogonality(sites, p)?);
            }
        }
        Ok(CheckReport::combine(format!("kernel modules(N={sites})"), parts))
    })?);
    for (n1, n2) in [(1, 1), (2, 1), (2, 2)] {
        let mut parts = Vec::new();
        for p1 in 0..n1 {
            for p2 in 0..n2 {
                for a in highest_weight_kernel(n1, p1)? {
                    for b in highest_weight_kernel(n2, p2)? {
                        parts.push(tensor_decompose(&a, &b)?.report);
                    }
                }
            }
        }
        out.push(CheckReport::combine(format!("decomposition(N1={n1}, N2={n2})"), parts));
    }
    let mut c = Checker::new("tableaux");
    for sites in 1..=8 {
        for p in 0..sites {
            c.count_eq(format!("|SSYT({sites},{p})|"), enumerate_ssyt(2, 1, &hook_shape(sites, p))?.len(), 2);
            c.absorb(ssyt_bijection(sites, p)?.report);
        }
    }
    for (sites, p, golden) in GOLDEN_SSYT {
        c.expect(format!("ssyt golden(N={sites}, p={p})"), ssyt_bijection(sites, p)?.to_ascii() == golden);
    }
    out.push(c.finish());
    Ok(out)
}
