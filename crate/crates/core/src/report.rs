//! Verification reports shared by the axiom checker and the structure checks.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// How a passing item was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PassMode {
    ExactIdentity,
    CoboundaryWitness,
}

/// A cochain quoted in a counterexample, scalars in canonical string form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotedCochain {
    pub label: String,
    pub degree: usize,
    pub coefficients: String,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub inputs: Vec<QuotedCochain>,
    /// Basis indices of the first failing evaluation point.
    pub tuple: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub cases: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<PassMode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// A representative certificate, e.g. a coboundary preimage.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<QuotedCochain>,
}

impl CheckItem {
    pub fn new(name: impl Into<String>, mode: PassMode) -> Self {
        CheckItem {
            name: name.into(),
            cases: 0,
            verdict: Verdict::Pass,
            mode: Some(mode),
            counterexample: None,
            witness: None,
        }
    }

    /// Keeps the first failure only.
    pub fn fail(&mut self, cex: Counterexample) {
        if self.verdict == Verdict::Pass {
            self.verdict = Verdict::Fail;
            self.mode = None;
            self.counterexample = Some(cex);
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CheckParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fault: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub algebra: String,
    pub field: String,
    pub params: CheckParams,
    pub verdict: Verdict,
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new(check: &str, algebra: &str, field: String, params: CheckParams) -> Self {
        CheckReport {
            check: check.to_string(),
            algebra: algebra.to_string(),
            field,
            params,
            verdict: Verdict::Pass,
            items: Vec::new(),
        }
    }

    pub fn push(&mut self, item: CheckItem) {
        if item.verdict == Verdict::Fail {
            self.verdict = Verdict::Fail;
        }
        self.items.push(item);
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = |v: Verdict| match v {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        };
        writeln!(
            f,
            "{} on {} over {}: {}",
            self.check,
            self.algebra,
            self.field,
            verdict(self.verdict)
        )?;
        let p = &self.params;
        let mut ps = Vec::new();
        if let Some(v) = p.p {
            ps.push(format!("p={v}"));
        }
        if let Some(v) = p.q {
            ps.push(format!("q={v}"));
        }
        if let Some(v) = p.max_degree {
            ps.push(format!("max_degree={v}"));
        }
        if let Some(v) = p.trials {
            ps.push(format!("trials={v}"));
        }
        if let Some(v) = p.seed {
            ps.push(format!("seed={v}"));
        }
        if let Some(v) = &p.fault {
            ps.push(format!("fault={v}"));
        }
        if !ps.is_empty() {
            writeln!(f, "  params: {}", ps.join(" "))?;
        }
        let width = self.items.iter().map(|i| i.name.len()).max().unwrap_or(0);
        for item in &self.items {
            let mode = match item.mode {
                Some(PassMode::ExactIdentity) => "exact identity",
                Some(PassMode::CoboundaryWitness) => "coboundary witness",
                None => "",
            };
            writeln!(
                f,
                "  {:<width$}  {}  {:>6} cases  {}",
                item.name,
                verdict(item.verdict),
                item.cases,
                mode
            )?;
            if let Some(w) = &item.witness {
                let shown = w
                    .values
                    .iter()
                    .take(12)
                    .cloned()
                    .collect::<Vec<_>>()
                    .join(" ");
                let more = if w.values.len() > 12 { " ..." } else { "" };
                writeln!(f, "    {} of degree {}: [{shown}{more}]", w.label, w.degree)?;
            }
            if let Some(cex) = &item.counterexample {
                writeln!(
                    f,
                    "    counterexample at {:?}: lhs = {}, rhs = {}",
                    cex.tuple, cex.lhs, cex.rhs
                )?;
                for input in &cex.inputs {
                    writeln!(
                        f,
                        "      input {} (degree {}, {})",
                        input.label, input.degree, input.coefficients
                    )?;
                }
            }
        }
        Ok(())
    }
}
