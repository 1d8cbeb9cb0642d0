//! Exhaustive verification over all small inputs.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bijections::{check_theorem, Theorem};
use crate::diagram::Partition;
use crate::enumerate::{class_b, partitions};
use crate::projective::{check_projective, ClassBPartition};

/// Largest `k` accepted for class-B sweeps, which grow as `2^k`.
pub const MAX_PROJECTIVE_K: usize = 16;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
    #[error("cannot write report to {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    pub max_k: usize,
    pub theorems: BTreeSet<Theorem>,
    pub output: Option<PathBuf>,
    pub jobs: usize,
}

impl SweepConfig {
    pub fn new(max_k: usize, max_n: usize, theorems: impl IntoIterator<Item = Theorem>) -> Self {
        SweepConfig {
            max_n,
            max_k,
            theorems: theorems.into_iter().collect(),
            output: None,
            jobs: 1,
        }
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        let bad = |msg: &str| Err(SweepError::InvalidConfig(msg.to_string()));
        if self.max_n == 0 || self.max_k == 0 {
            return bad("max-n and max-k must be at least 1");
        }
        if self.theorems.is_empty() {
            return bad("no theorems selected");
        }
        if self.jobs == 0 {
            return bad("jobs must be at least 1");
        }
        if self.theorems.contains(&Theorem::Projective) && self.max_k > MAX_PROJECTIVE_K {
            return bad("projective sweeps are limited to max-k <= 16");
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub theorem: Theorem,
    pub k: usize,
    pub n: usize,
    pub alpha: Vec<usize>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct ConfigEcho {
    max_k: usize,
    max_n: usize,
    theorems: Vec<Theorem>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepReport {
    config: ConfigEcho,
    pub verdict: Verdict,
    /// Cases checked per theorem tag.
    pub counts: BTreeMap<String, usize>,
    pub first_counterexample: Option<CaseResult>,
    pub cases: Vec<CaseResult>,
    /// Kept out of the JSON so identical sweeps give identical files.
    #[serde(skip)]
    pub duration: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn total(&self) -> usize {
        self.cases.len()
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

enum Input {
    Plain(Partition, Theorem),
    ClassB(ClassBPartition),
}

fn inputs(cfg: &SweepConfig) -> Vec<Input> {
    let mut out = Vec::new();
    let plain: Vec<Theorem> = cfg
        .theorems
        .iter()
        .copied()
        .filter(|&t| t != Theorem::Projective)
        .collect();
    if !plain.is_empty() {
        for k in 1..=cfg.max_k {
            for n in 1..=cfg.max_n {
                for p in partitions(k, n) {
                    for &t in &plain {
                        out.push(Input::Plain(p.clone(), t));
                    }
                }
            }
        }
    }
    if cfg.theorems.contains(&Theorem::Projective) {
        for k in 1..=cfg.max_k {
            out.extend(class_b(k).map(Input::ClassB));
        }
    }
    out
}

fn run_case(input: &Input) -> CaseResult {
    match input {
        Input::Plain(p, t) => {
            let report = check_theorem(p, *t);
            let detail = report.first_problem();
            CaseResult {
                theorem: *t,
                k: p.k(),
                n: p.n(),
                alpha: p.parts().to_vec(),
                verdict: if detail.is_none() { Verdict::Pass } else { Verdict::Fail },
                detail,
            }
        }
        Input::ClassB(b) => {
            let detail = check_projective(b).first_problem();
            CaseResult {
                theorem: Theorem::Projective,
                k: b.k(),
                n: b.k() + 1,
                alpha: b.alpha().parts().to_vec(),
                verdict: if detail.is_none() { Verdict::Pass } else { Verdict::Fail },
                detail,
            }
        }
    }
}

/// Runs every selected check; results are listed in enumeration order
/// regardless of the worker count. Writes the report when an output path
/// is configured.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport, SweepError> {
    cfg.validate()?;
    let started = Instant::now();
    let inputs = inputs(cfg);
    let cases: Vec<CaseResult> = if cfg.jobs == 1 {
        inputs.iter().map(run_case).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| SweepError::InvalidConfig(format!("cannot start workers: {e}")))?;
        pool.install(|| inputs.par_iter().map(run_case).collect())
    };

    let mut counts = BTreeMap::new();
    for t in &cfg.theorems {
        counts.insert(t.tag().to_string(), 0);
    }
    for c in &cases {
        *counts.entry(c.theorem.tag().to_string()).or_insert(0) += 1;
    }
    let first_counterexample = cases.iter().find(|c| c.verdict == Verdict::Fail).cloned();
    let report = SweepReport {
        config: ConfigEcho {
            max_k: cfg.max_k,
            max_n: cfg.max_n,
            theorems: cfg.theorems.iter().copied().collect(),
        },
        verdict: if first_counterexample.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        counts,
        first_counterexample,
        cases,
        duration: started.elapsed(),
    };

    if let Some(path) = &cfg.output {
        std::fs::write(path, report.to_json()).map_err(|source| SweepError::Io {
            path: path.clone(),
            source,
        })?;
    }
    Ok(report)
}
