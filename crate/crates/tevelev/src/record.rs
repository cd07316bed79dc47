//! One evaluated problem, in the shape emitted by the CLI.

use std::time::Instant;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use tevelev_core::{tev_closed, tev_schubert, RecursionEngine, TevelevProblem};

use crate::profile_spec::format_profiles;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum EngineChoice {
    Closed,
    Recursion,
    Schubert,
    #[default]
    All,
}

impl EngineChoice {
    fn runs(self, which: EngineChoice) -> bool {
        self == EngineChoice::All || self == which
    }
}

/// Per-engine values as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct EngineValues {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recursion: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schubert: Option<String>,
}

impl EngineValues {
    fn present(&self) -> impl Iterator<Item = &String> {
        [&self.closed, &self.recursion, &self.schubert]
            .into_iter()
            .flatten()
    }

    pub fn choice(&self) -> EngineChoice {
        match (&self.closed, &self.recursion, &self.schubert) {
            (Some(_), None, None) => EngineChoice::Closed,
            (None, Some(_), None) => EngineChoice::Recursion,
            (None, None, Some(_)) => EngineChoice::Schubert,
            _ => EngineChoice::All,
        }
    }
}

/// Wall time per engine in microseconds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct EngineTimings {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recursion: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schubert: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub g: u32,
    pub ell: i64,
    pub profiles: Vec<Vec<u32>>,
    pub d: i64,
    pub n: i64,
    pub b: i64,
    pub dim: i64,
    pub valid: bool,
    pub violated: Vec<String>,
    pub value: String,
    pub engines: EngineValues,
    pub agree: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_us: Option<EngineTimings>,
}

impl Record {
    pub fn problem(&self) -> Result<TevelevProblem, tevelev_core::Error> {
        TevelevProblem::new(self.g, self.ell, self.profiles.clone())
    }

    pub fn profile_spec(&self) -> String {
        format_profiles(&self.profiles)
    }
}

/// Evaluates problems while keeping one recursion memo table.
#[derive(Debug, Default)]
pub struct Evaluator {
    recursion: RecursionEngine,
    pub timings: bool,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_micros() as u64)
}

impl Evaluator {
    pub fn new(timings: bool) -> Self {
        Evaluator {
            recursion: RecursionEngine::default(),
            timings,
        }
    }

    pub fn evaluate(&mut self, problem: &TevelevProblem, engine: EngineChoice) -> Record {
        let params = problem.derive();
        let mut values = EngineValues::default();
        let mut times = EngineTimings::default();

        if engine.runs(EngineChoice::Closed) {
            let (v, t) = timed(|| tev_closed(problem).value);
            values.closed = Some(v.to_string());
            times.closed = Some(t);
        }
        if engine.runs(EngineChoice::Recursion) {
            let (v, t) = timed(|| self.recursion.tev(problem).value);
            values.recursion = Some(v.to_string());
            times.recursion = Some(t);
        }
        if engine.runs(EngineChoice::Schubert) {
            let (v, t) = timed(|| tev_schubert(problem).value);
            values.schubert = Some(v.to_string());
            times.schubert = Some(t);
        }

        let (value, agree) = {
            let mut present = values.present();
            let value = present.next().cloned().unwrap_or_default();
            let agree = present.all(|v| *v == value);
            (value, agree)
        };

        Record {
            g: problem.g,
            ell: problem.ell,
            profiles: problem
                .profiles()
                .iter()
                .map(|p| p.entries().to_vec())
                .collect(),
            d: params.d,
            n: params.n,
            b: params.b,
            dim: params.dim,
            valid: params.valid,
            violated: params
                .violated
                .iter()
                .map(|c| c.as_str().to_string())
                .collect(),
            value,
            engines: values,
            agree,
            timings_us: self.timings.then_some(times),
        }
    }
}

pub fn compute(problem: &TevelevProblem, engine: EngineChoice) -> Record {
    Evaluator::default().evaluate(problem, engine)
}
