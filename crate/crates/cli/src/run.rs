use std::collections::BTreeMap;
use std::time::Instant;

use glkm::bases::{
    action_graph_dot, build_u_vector, check_all_actions, check_hamiltonian_eigen, enumerate_admissible, pair_name,
    spectral_decomposition_n2, Sign,
};
use glkm::braid::{build_rcheck, check_solution, check_unitarity, check_ybe_parametric, classify, lyubashenko};
use glkm::gl11::{
    highest_weight_kernel, hw_module_suite, kernel_dimension_check, ssyt_bijection, tensor_decompose, verify_fund1,
    verify_orthogonality, xx_hamiltonian_check,
};
use glkm::yangian::lax::{check_antipode, check_lax_rtt, check_monodromy_rtt, check_monodromy_vs_lax, tau_series};
use glkm::yangian::relations::{verify_centralizer, verify_gl_relations, verify_hatted, verify_serre};
use glkm::yangian::{Convention, Rep};
use glkm::{criteria, BraidParams, CheckReport, Checker, Error, RepContext, Scalar, SuiteReport, Vector};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::args::{Basis, Chain, Cli, Command, Dims, Gl11, SignArg, Suite, Verify};

/// Largest state space a command will build.
pub const MAX_DIM: usize = 4096;

/// What gets printed: the suite report plus command-specific data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CliOutput {
    #[serde(flatten)]
    pub report: SuiteReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

/// Result of one command before rendering.
pub struct Outcome {
    pub output: CliOutput,
    /// Extra text appended after the report in text mode.
    pub text: Option<String>,
    /// Replaces the report entirely in text mode (DOT graphs).
    pub raw: Option<String>,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Config = BTreeMap<String, String>;

struct Parts {
    checks: Vec<CheckReport>,
    data: Option<Value>,
    text: Option<String>,
    raw: Option<String>,
}

impl Parts {
    fn checks(checks: Vec<CheckReport>) -> Self {
        Parts { checks, data: None, text: None, raw: None }
    }
}

fn resolve(d: &Dims) -> Result<(usize, usize), Failure> {
    let (n, k) = match (d.n, d.k, d.m) {
        (None, None, None) => (2, 1),
        (Some(n), Some(k), Some(m)) => {
            if k + m != n {
                return Err(Failure::Usage(format!("k + m must equal n, got {k} + {m} != {n}")));
            }
            (n, k)
        }
        (Some(n), Some(k), None) => (n, k),
        (None, Some(k), Some(m)) => (k + m, k),
        (Some(n), None, Some(m)) => {
            if m > n {
                return Err(Failure::Usage(format!("m = {m} exceeds n = {n}")));
            }
            (n, n - m)
        }
        _ => return Err(Failure::Usage("give two of --n, --k, --m".into())),
    };
    if n == 0 || k > n {
        return Err(Failure::Usage(format!("need n >= 1 and k <= n, got n={n}, k={k}")));
    }
    Ok((n, k))
}

fn context(chain: &Chain, cfg: &mut Config) -> Result<RepContext, Failure> {
    let (n, k) = resolve(&chain.dims)?;
    let dim = (n as u32).checked_pow(chain.sites as u32).map(|d| d as usize);
    if !matches!(dim, Some(d) if d <= MAX_DIM) {
        return Err(Failure::Usage(format!("n^sites = {n}^{} exceeds {MAX_DIM}", chain.sites)));
    }
    let ctx = RepContext::new(n, k, chain.sites)?;
    echo_dims(cfg, n, k);
    cfg.insert("sites".into(), chain.sites.to_string());
    Ok(ctx)
}

fn echo_dims(cfg: &mut Config, n: usize, k: usize) {
    cfg.insert("n".into(), n.to_string());
    cfg.insert("k".into(), k.to_string());
    cfg.insert("m".into(), (n - k).to_string());
}

fn braid_params(d: &Dims, alpha: i64, cfg: &mut Config) -> Result<BraidParams, Failure> {
    let (n, k) = resolve(d)?;
    echo_dims(cfg, n, k);
    cfg.insert("alpha".into(), alpha.to_string());
    Ok(BraidParams::new(n, k, alpha)?)
}

fn lambda_pairs(lambda: &[Scalar]) -> Result<Vec<(Scalar, Scalar)>, Failure> {
    if lambda.is_empty() {
        return Ok(criteria::sample_pairs());
    }
    if !lambda.len().is_multiple_of(2) {
        return Err(Failure::Usage("--lambda takes values in pairs".into()));
    }
    Ok(lambda.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect())
}

fn signs(s: SignArg) -> Vec<Sign> {
    match s {
        SignArg::Plus => vec![Sign::Plus],
        SignArg::Minus => vec![Sign::Minus],
        SignArg::Both => vec![Sign::Plus, Sign::Minus],
    }
}

fn sign_key(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "plus",
        Sign::Minus => "minus",
    }
}

fn word(i: usize, n: usize, sites: usize) -> Vec<usize> {
    let mut word = vec![0; sites];
    let mut idx = i;
    for slot in word.iter_mut().rev() {
        *slot = idx % n + 1;
        idx /= n;
    }
    word
}

/// Nonzero coordinates as `{word, coeff}` with 1-based letters.
fn vector_json(v: &Vector, n: usize, sites: usize) -> Value {
    let entries = v.nonzeros().map(|(i, c)| json!({ "word": word(i, n, sites), "coeff": c.to_string() }));
    Value::Array(entries.collect())
}

/// `(c)·e_{x1}⊗…⊗e_{xN}` terms joined by ` + `.
fn vector_text(v: &Vector, n: usize, sites: usize) -> String {
    let terms: Vec<String> = v
        .nonzeros()
        .map(|(i, c)| {
            let basis: Vec<String> = word(i, n, sites).iter().map(|x| format!("e{x}")).collect();
            format!("({c})·{}", basis.join("⊗"))
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn info(name: &str, notes: Vec<String>) -> CheckReport {
    let mut c = Checker::new(name);
    for n in notes {
        c.note(n);
    }
    c.finish()
}

pub fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let conv: Convention = cli.convention.into();
    let mut cfg = Config::new();
    cfg.insert("convention".into(), conv.to_string());
    let start = Instant::now();
    let mut parts = match dispatch(&cli.command, conv, &mut cfg) {
        Ok(p) => p,
        // A failed precondition is a verification result, not a usage error.
        Err(Failure::Core(Error::Precondition(report))) => Parts::checks(vec![*report]),
        Err(e) => return Err(e),
    };
    if cli.no_timings && matches!(cli.command, Command::ReportAll) {
        // The per-criterion lines carry wall times.
        parts.text = None;
    }
    let mut report = SuiteReport::new(cfg, parts.checks, start.elapsed().as_secs_f64() * 1e3);
    if cli.no_timings {
        report = report.without_timing();
    }
    Ok(Outcome { output: CliOutput { report, data: parts.data }, text: parts.text, raw: parts.raw })
}

fn dispatch(cmd: &Command, conv: Convention, cfg: &mut Config) -> Result<Parts, Failure> {
    match cmd {
        Command::Verify(v) => verify(v, conv, cfg),
        Command::Classify { dims, alpha, lyubashenko: lyu } => {
            cfg.insert("command".into(), "classify".into());
            let r = if *lyu {
                let n = match (dims.n, dims.k, dims.m) {
                    (Some(n), None, None) => n,
                    _ => resolve(dims)?.0,
                };
                cfg.insert("n".into(), n.to_string());
                cfg.insert("solution".into(), "lyubashenko".into());
                lyubashenko(n)
            } else {
                build_rcheck(&braid_params(dims, *alpha, cfg)?)
            };
            let class = classify(&r)?;
            let mut parts = Parts::checks(vec![info("classification", vec![format!("class: {class}")])]);
            parts.data = Some(json!({ "classification": class }));
            Ok(parts)
        }
        Command::Basis(Basis::Enumerate { chain, sign }) => {
            cfg.insert("command".into(), "basis enumerate".into());
            let ctx = context(chain, cfg)?;
            let rep = Rep::new(ctx, conv)?;
            let mut data = serde_json::Map::new();
            let mut text = String::new();
            let mut c = Checker::new("admissible multi-indices");
            for s in signs(*sign) {
                let list = enumerate_admissible(&ctx, s);
                let mut entries = Vec::new();
                for idx in &list {
                    let u = build_u_vector(&rep, idx)?;
                    c.expect(format!("{idx} is nonzero"), !u.vec.is_zero());
                    text.push_str(&format!("{idx}\n"));
                    entries.push(json!({ "label": idx.to_string(), "m": idx.m, "vector": vector_json(&u.vec, ctx.n, ctx.sites) }));
                }
                c.note(format!("{}: {} indices", sign_key(s), list.len()));
                data.insert(sign_key(s).into(), Value::Array(entries));
            }
            Ok(Parts { checks: vec![c.finish()], data: Some(Value::Object(data)), text: Some(text), raw: None })
        }
        Command::Spectrum2 { dims, dot, sign } => {
            cfg.insert("command".into(), "spectrum2".into());
            let (n, k) = resolve(dims)?;
            echo_dims(cfg, n, k);
            if *dot {
                if n > 4 {
                    return Err(Failure::Usage(format!("graphs are drawn for n <= 4, got n={n}")));
                }
                let mut graphs = serde_json::Map::new();
                let mut raw = String::new();
                for s in signs(*sign) {
                    let g = action_graph_dot(n, k, s, conv)?;
                    raw.push_str(&g);
                    graphs.insert(sign_key(s).into(), Value::String(g));
                }
                let spectrum = spectral_decomposition_n2(n, k, conv)?;
                return Ok(Parts {
                    checks: vec![spectrum.report],
                    data: Some(Value::Object(graphs)),
                    text: None,
                    raw: Some(raw),
                });
            }
            let spectrum = spectral_decomposition_n2(n, k, conv)?;
            let mut text = String::new();
            let mut data = serde_json::Map::new();
            for (s, family) in [(Sign::Plus, &spectrum.plus), (Sign::Minus, &spectrum.minus)] {
                let mut entries = Vec::new();
                for (pair, v) in family {
                    let name = pair_name(s, *pair);
                    text.push_str(&format!("{name} = {}\n", vector_text(v, n, 2)));
                    entries.push(json!({ "label": name, "vector": vector_json(v, n, 2) }));
                }
                data.insert(sign_key(s).into(), Value::Array(entries));
            }
            Ok(Parts { checks: vec![spectrum.report], data: Some(Value::Object(data)), text: Some(text), raw: None })
        }
        Command::Gl11(g) => gl11(g, cfg),
        Command::ReportAll => {
            cfg.insert("command".into(), "report-all".into());
            let outcomes = criteria::run_all();
            let mut text = String::new();
            let mut checks = Vec::new();
            for o in outcomes {
                text.push_str(&o.line());
                text.push('\n');
                let mut r = o.report.clone();
                if !o.within_bound() {
                    r.passed = false;
                    r.notes.push(format!("exceeded the {} s runtime bound", o.criterion.bound.as_secs()));
                }
                checks.push(r);
            }
            Ok(Parts { checks, data: None, text: Some(text), raw: None })
        }
    }
}

fn verify(v: &Verify, conv: Convention, cfg: &mut Config) -> Result<Parts, Failure> {
    match v {
        Verify::Braid { dims, alpha } => {
            cfg.insert("command".into(), "verify braid".into());
            let p = braid_params(dims, *alpha, cfg)?;
            Ok(Parts::checks(vec![check_solution(&p)]))
        }
        Verify::Ybe { dims, alpha, lambda } => {
            cfg.insert("command".into(), "verify ybe".into());
            let p = braid_params(dims, *alpha, cfg)?;
            let checks = lambda_pairs(lambda)?.iter().map(|(a, b)| check_ybe_parametric(&p, a, b)).collect();
            Ok(Parts::checks(checks))
        }
        Verify::Unitarity { dims, alpha, lambda } => {
            cfg.insert("command".into(), "verify unitarity".into());
            let p = braid_params(dims, *alpha, cfg)?;
            let values: Vec<Scalar> = if lambda.is_empty() {
                criteria::sample_pairs().into_iter().flat_map(|(a, b)| [a, b]).collect()
            } else {
                lambda.clone()
            };
            Ok(Parts::checks(values.iter().map(|l| check_unitarity(&p, l)).collect()))
        }
        Verify::Relations { chain, suite, alpha } => {
            cfg.insert("command".into(), "verify relations".into());
            let ctx = context(chain, cfg)?;
            let rep = Rep::new(ctx, conv)?;
            let want = |s: Suite| *suite == s || *suite == Suite::All;
            let mut checks = Vec::new();
            if want(Suite::Quadratic) {
                checks.push(verify_gl_relations(&rep));
            }
            if want(Suite::Serre) {
                checks.push(verify_serre(&rep));
            }
            if want(Suite::Hatted) {
                checks.push(verify_hatted(&rep)?);
            }
            if want(Suite::Rtt) {
                cfg.insert("alpha".into(), alpha.to_string());
                let pairs = criteria::sample_pairs();
                checks.push(check_monodromy_rtt(&ctx, *alpha, &pairs)?);
                checks.push(check_lax_rtt(&rep, &pairs)?);
                checks.push(check_monodromy_vs_lax(&rep)?);
            }
            if want(Suite::Centralizer) {
                cfg.insert("alpha".into(), alpha.to_string());
                checks.push(verify_centralizer(&ctx, *alpha, conv)?);
            }
            Ok(Parts::checks(checks))
        }
        Verify::Casimir { chain, order } => {
            cfg.insert("command".into(), "verify casimir".into());
            let ctx = context(chain, cfg)?;
            let order = order.unwrap_or(2 * ctx.sites + 2);
            cfg.insert("order".into(), order.to_string());
            let rep = Rep::new(ctx, conv)?;
            Ok(Parts::checks(vec![tau_series(&rep, order)?.report]))
        }
        Verify::Antipode { chain, order } => {
            cfg.insert("command".into(), "verify antipode".into());
            let ctx = context(chain, cfg)?;
            cfg.insert("order".into(), order.to_string());
            let rep = Rep::new(ctx, conv)?;
            Ok(Parts::checks(vec![check_antipode(&rep, *order)?]))
        }
        Verify::Action { chain } => {
            cfg.insert("command".into(), "verify action".into());
            let ctx = context(chain, cfg)?;
            let rep = Rep::new(ctx, conv)?;
            Ok(Parts::checks(vec![check_hamiltonian_eigen(&rep)?, check_all_actions(&rep)?]))
        }
    }
}

fn gl11(g: &Gl11, cfg: &mut Config) -> Result<Parts, Failure> {
    let max_sites = MAX_DIM.trailing_zeros() as usize;
    let sites_ok = |s: usize| {
        if s == 0 || s > max_sites {
            Err(Failure::Usage(format!("sites must be in 1..={max_sites}, got {s}")))
        } else {
            Ok(())
        }
    };
    match g {
        Gl11::Xx { sites } => {
            cfg.insert("command".into(), "gl11 xx".into());
            cfg.insert("sites".into(), sites.to_string());
            sites_ok(*sites)?;
            Ok(Parts::checks(vec![xx_hamiltonian_check(*sites)?]))
        }
        Gl11::Modules { sites, samples, seed } => {
            cfg.insert("command".into(), "gl11 modules".into());
            cfg.insert("sites".into(), sites.to_string());
            cfg.insert("samples".into(), samples.to_string());
            cfg.insert("seed".into(), seed.to_string());
            sites_ok(*sites)?;
            let mut checks = vec![hw_module_suite(*samples, *seed), kernel_dimension_check(*sites)?];
            let mut data = serde_json::Map::new();
            for p in 0..*sites {
                let kernel = highest_weight_kernel(*sites, p)?;
                let vecs: Vec<Value> = kernel.iter().map(|w| vector_json(&w.vec, 2, *sites)).collect();
                data.insert(format!("p={p}"), Value::Array(vecs));
                for w in &kernel {
                    checks.push(verify_fund1(w)?);
                }
                if p + 2 <= *sites {
                    checks.push(verify_orthogonality(*sites, p)?);
                }
            }
            Ok(Parts { checks, data: Some(json!({ "kernels": data })), text: None, raw: None })
        }
        Gl11::Tensor { n1, p1, n2, p2 } => {
            cfg.insert("command".into(), "gl11 tensor".into());
            for (key, v) in [("n1", n1), ("p1", p1), ("n2", n2), ("p2", p2)] {
                cfg.insert(key.into(), v.to_string());
            }
            sites_ok(n1 + n2)?;
            let left = highest_weight_kernel(*n1, *p1)?;
            let right = highest_weight_kernel(*n2, *p2)?;
            let mut checks = Vec::new();
            for a in &left {
                for b in &right {
                    checks.push(tensor_decompose(a, b)?.report);
                }
            }
            Ok(Parts::checks(checks))
        }
        Gl11::Ssyt { sites, p } => {
            cfg.insert("command".into(), "gl11 ssyt".into());
            cfg.insert("sites".into(), sites.to_string());
            cfg.insert("p".into(), p.to_string());
            sites_ok(*sites)?;
            let pairing = ssyt_bijection(*sites, *p)?;
            let tableaux: Vec<Value> = pairing
                .pairs
                .iter()
                .map(|(label, t, _)| json!({ "label": label, "shape": t.shape, "rows": t.rows }))
                .collect();
            let text = format!("{}\n", pairing.to_ascii());
            Ok(Parts {
                checks: vec![pairing.report],
                data: Some(json!({ "shape": pairing.shape, "tableaux": tableaux })),
                text: Some(text),
                raw: None,
            })
        }
    }
}
