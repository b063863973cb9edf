//! Check reports: pass/fail plus a bounded list of entry-level witnesses.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::linalg::{SparseMat, Vector};
use crate::scalar::Scalar;

/// Witnesses kept per check; the total is still counted.
pub const WITNESS_CAP: usize = 10;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// Which identity, generator or vector the mismatch belongs to.
    pub context: String,
    pub index: Vec<usize>,
    pub expected: Scalar,
    pub actual: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// Every residual compared by this check was the exact zero matrix/vector.
    pub residual_norm_zero: bool,
    pub witnesses: Vec<Witness>,
    pub witness_count: usize,
    /// Number of individual identities evaluated.
    pub identities: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub duration_ms: f64,
}

impl CheckReport {
    /// Merges sub-reports into one named report.
    pub fn combine(name: impl Into<String>, parts: Vec<CheckReport>) -> CheckReport {
        let mut c = Checker::new(name);
        for p in parts {
            c.absorb(p);
        }
        c.finish()
    }

    pub fn without_timing(mut self) -> Self {
        self.duration_ms = 0.0;
        self
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    /// Marker used by checks that do not apply to the given parameters.
    pub fn not_applicable(name: impl Into<String>, why: impl Into<String>) -> CheckReport {
        let mut c = Checker::new(name);
        c.note(format!("not-applicable: {}", why.into()));
        c.finish()
    }

    pub fn is_not_applicable(&self) -> bool {
        self.notes.iter().any(|n| n.starts_with("not-applicable"))
    }
}

/// Accumulates identity checks into a [`CheckReport`].
pub struct Checker {
    name: String,
    witnesses: Vec<Witness>,
    count: usize,
    identities: usize,
    notes: Vec<String>,
    start: Instant,
}

impl Checker {
    pub fn new(name: impl Into<String>) -> Self {
        Checker {
            name: name.into(),
            witnesses: Vec::new(),
            count: 0,
            identities: 0,
            notes: Vec::new(),
            start: Instant::now(),
        }
    }

    fn push(&mut self, w: Witness) {
        self.count += 1;
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(w);
        }
    }

    pub fn fail(&mut self, context: impl Into<String>, index: Vec<usize>, expected: Scalar, actual: Scalar) {
        self.push(Witness { context: context.into(), index, expected, actual });
    }

    /// Counts one identity; records a failure with no numeric entry when `ok` is false.
    pub fn expect(&mut self, context: impl Into<String>, ok: bool) -> bool {
        self.identities += 1;
        if !ok {
            self.fail(context, vec![], Scalar::one(), Scalar::zero());
        }
        ok
    }

    pub fn count_eq(&mut self, context: impl Into<String>, actual: usize, expected: usize) -> bool {
        self.identities += 1;
        if actual != expected {
            self.fail(context, vec![], Scalar::from(expected as i64), Scalar::from(actual as i64));
        }
        actual == expected
    }

    pub fn scalar_eq(
        &mut self,
        context: impl Into<String>,
        index: Vec<usize>,
        actual: &Scalar,
        expected: &Scalar,
    ) -> bool {
        self.identities += 1;
        if actual != expected {
            self.fail(context, index, expected.clone(), actual.clone());
            return false;
        }
        true
    }

    pub fn mat_eq(&mut self, context: impl AsRef<str>, actual: &SparseMat, expected: &SparseMat) -> bool {
        self.identities += 1;
        if actual.shape() != expected.shape() {
            self.fail(
                format!("{}: shape", context.as_ref()),
                vec![actual.nrows(), actual.ncols()],
                Scalar::from(expected.nrows() as i64),
                Scalar::from(actual.nrows() as i64),
            );
            return false;
        }
        if actual == expected {
            return true;
        }
        for (r, c, a, e) in actual.diff_entries(expected) {
            self.push(Witness { context: context.as_ref().to_string(), index: vec![r, c], expected: e, actual: a });
        }
        false
    }

    pub fn mat_zero(&mut self, context: impl AsRef<str>, actual: &SparseMat) -> bool {
        self.identities += 1;
        if actual.is_zero() {
            return true;
        }
        let ctx = context.as_ref().to_string();
        for (r, c, v) in actual.entries() {
            self.push(Witness { context: ctx.clone(), index: vec![r, c], expected: Scalar::zero(), actual: v.clone() });
        }
        false
    }

    pub fn vec_eq(&mut self, context: impl AsRef<str>, actual: &Vector, expected: &Vector) -> bool {
        self.identities += 1;
        if actual == expected {
            return true;
        }
        for (i, e, a) in actual.diff_entries(expected) {
            self.push(Witness { context: context.as_ref().to_string(), index: vec![i], expected: e, actual: a });
        }
        false
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Folds a sub-report in, prefixing its witness contexts with its name.
    pub fn absorb(&mut self, part: CheckReport) {
        self.identities += part.identities;
        let extra = part.witness_count.saturating_sub(part.witnesses.len());
        for mut w in part.witnesses {
            w.context = format!("{}: {}", part.name, w.context);
            self.push(w);
        }
        self.count += extra;
        for n in part.notes {
            self.notes.push(format!("{}: {n}", part.name));
        }
    }

    pub fn passed(&self) -> bool {
        self.count == 0
    }

    pub fn finish(self) -> CheckReport {
        let passed = self.count == 0;
        CheckReport {
            name: self.name,
            passed,
            residual_norm_zero: passed,
            witnesses: self.witnesses,
            witness_count: self.count,
            identities: self.identities,
            notes: self.notes,
            duration_ms: (self.start.elapsed().as_secs_f64() * 1e6).round() / 1e3,
        }
    }
}

/// Top-level report: a tool version, the configuration echo and every check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub version: String,
    pub config: BTreeMap<String, String>,
    pub checks: Vec<CheckReport>,
    pub passed: bool,
    pub duration_ms: f64,
}

impl SuiteReport {
    pub fn new(config: BTreeMap<String, String>, checks: Vec<CheckReport>, duration_ms: f64) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        SuiteReport { version: crate::VERSION.to_string(), config, checks, passed, duration_ms }
    }

    pub fn without_timing(mut self) -> Self {
        self.duration_ms = 0.0;
        self.checks = self.checks.into_iter().map(CheckReport::without_timing).collect();
        self
    }

    /// Plain-text rendering, one line per check plus its witnesses.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("glkm {}\n", self.version));
        for (k, v) in &self.config {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        for c in &self.checks {
            let status = if c.is_not_applicable() {
                "N/A "
            } else if c.passed {
                "PASS"
            } else {
                "FAIL"
            };
            out.push_str(&format!("[{status}] {} ({} identities, {:.3} ms)\n", c.name, c.identities, c.duration_ms));
            for w in &c.witnesses {
                out.push_str(&format!(
                    "    {} at {:?}: expected {}, got {}\n",
                    w.context, w.index, w.expected, w.actual
                ));
            }
            if c.witness_count > c.witnesses.len() {
                out.push_str(&format!("    ... {} mismatches in total\n", c.witness_count));
            }
            for n in &c.notes {
                out.push_str(&format!("    note: {n}\n"));
            }
        }
        out.push_str(&format!("overall: {} ({:.3} ms)\n", if self.passed { "PASS" } else { "FAIL" }, self.duration_ms));
        out
    }
}
