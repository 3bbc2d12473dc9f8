//! Brute-force oracles and the seeded sweep driver that checks every closed
//! form against them.

pub mod oracle;
pub mod random;
mod suites;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::algebra::matrix::ExactMatrix;
use crate::algebra::poly::Polynomial;
use crate::algebra::ratfunc::RationalFunction;
use crate::algebra::scalar::{self, Scalar};
use crate::corona::CoronaKind;
use crate::digraph::{Digraph, MatrixKind};
use crate::error::{Error, Result};

pub use oracle::{oracle_charpoly, oracle_coronal, oracle_strongly_connected, CORONAL_ORACLE_CAP};
pub use random::random_digraph;
pub use suites::{suites, COVERED_OPS};

/// Environment variable capping the number of verification threads.
pub const THREADS_ENV: &str = "CORONA_SPECTRA_THREADS";

/// Largest corona the corona suites build.
pub const CORONA_VERTEX_CAP: usize = 10;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub seed: u64,
    pub trials: usize,
    /// Vertex budget per factor.
    pub max_n: usize,
    /// Random digraphs draw their arc density uniformly from this range.
    pub density: (f64, f64),
    /// Suite names; `"all"` selects every suite.
    pub suites: Vec<String>,
    /// Enumerate every admissible instance instead of sampling `trials`.
    pub exhaustive: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            trials: 25,
            max_n: 8,
            density: (0.2, 0.8),
            suites: vec!["all".into()],
            exhaustive: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Domain("trials must be positive".into()));
        }
        if self.max_n == 0 {
            return Err(Error::Domain("vertex budget must be at least 1".into()));
        }
        let (lo, hi) = self.density;
        if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo > hi {
            return Err(Error::Domain(format!("bad density range [{lo}, {hi}]")));
        }
        let known = suites();
        for name in &self.suites {
            if name != "all" && !known.iter().any(|s| s.name == name) {
                return Err(Error::Domain(format!("unknown suite {name:?}")));
            }
        }
        Ok(())
    }

    fn selects(&self, name: &str) -> bool {
        self.suites.iter().any(|s| s == "all" || s == name)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Polynomial(Polynomial),
    RationalFunction(RationalFunction),
    Bool(bool),
    #[serde(serialize_with = "scalar_text")]
    Scalar(Scalar),
    Matrix(ExactMatrix),
}

fn scalar_text<S: Serializer>(s: &Scalar, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&scalar::to_text(s))
}

impl From<Polynomial> for Value {
    fn from(p: Polynomial) -> Self {
        Value::Polynomial(p)
    }
}

impl From<RationalFunction> for Value {
    fn from(r: RationalFunction) -> Self {
        Value::RationalFunction(r)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<Scalar> for Value {
    fn from(s: Scalar) -> Self {
        Value::Scalar(s)
    }
}

impl From<ExactMatrix> for Value {
    fn from(m: ExactMatrix) -> Self {
        Value::Matrix(m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    HypothesisViolated,
    Skipped,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct InstanceDescriptor {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d1: Option<Digraph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d2: Option<Digraph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corona: Option<CoronaKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<MatrixKind>,
}

impl InstanceDescriptor {
    pub fn new(label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            ..Self::default()
        }
    }

    pub fn factors(mut self, d1: &Digraph, d2: Option<&Digraph>) -> Self {
        self.d1 = Some(d1.clone());
        self.d2 = d2.cloned();
        self
    }

    pub fn corona(mut self, kind: CoronaKind) -> Self {
        self.corona = Some(kind);
        self
    }

    pub fn kind(mut self, kind: MatrixKind) -> Self {
        self.kind = Some(kind);
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub instance: InstanceDescriptor,
    pub expected: Option<Value>,
    pub actual: Option<Value>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// What a single check produced.
pub enum Check {
    Compare {
        expected: Result<Value>,
        actual: Result<Value>,
    },
    HypothesisViolated(String),
    Skipped(String),
}

impl Check {
    pub fn compare<E: Into<Value>, A: Into<Value>>(expected: Result<E>, actual: Result<A>) -> Self {
        Check::Compare {
            expected: expected.map(Into::into),
            actual: actual.map(Into::into),
        }
    }
}

type CheckFn = Box<dyn Fn() -> Check + Send + Sync>;

pub struct Task {
    pub instance: InstanceDescriptor,
    pub check: CheckFn,
}

impl Task {
    pub fn new(instance: InstanceDescriptor, check: impl Fn() -> Check + Send + Sync + 'static) -> Self {
        Self {
            instance,
            check: Box::new(check),
        }
    }
}

type BuildFn = fn(&SweepConfig, &mut ChaCha8Rng) -> Vec<Task>;

pub struct Suite {
    pub name: &'static str,
    /// Library operations this suite exercises.
    pub covers: &'static [&'static str],
    pub build: BuildFn,
}

/// Runs every selected suite. Mismatches are reported, not returned as
/// errors; only an invalid configuration fails.
pub fn run_suite(config: &SweepConfig) -> Result<Vec<VerificationReport>> {
    config.validate()?;
    let pool = thread_pool();
    Ok(suites()
        .iter()
        .filter(|s| config.selects(s.name))
        .flat_map(|s| run_in(&pool, s, config))
        .collect())
}

/// Runs one suite, registered or not, under `config`.
pub fn run_custom_suite(suite: &Suite, config: &SweepConfig) -> Vec<VerificationReport> {
    run_in(&thread_pool(), suite, config)
}

fn run_in(pool: &rayon::ThreadPool, suite: &Suite, config: &SweepConfig) -> Vec<VerificationReport> {
    let mut rng = suite_rng(config.seed, suite.name);
    let tasks = (suite.build)(config, &mut rng);
    pool.install(|| {
        tasks
            .into_par_iter()
            .map(|task| evaluate(suite.name, task))
            .collect()
    })
}

fn thread_pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        builder = builder.num_threads(n);
    }
    builder.build().expect("thread pool")
}

/// A generator per suite: the seed picks the key, the suite name's FNV-1a
/// hash picks the stream.
fn suite_rng(seed: u64, name: &str) -> ChaCha8Rng {
    let stream = name
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn evaluate(suite: &str, task: Task) -> VerificationReport {
    let start = Instant::now();
    let check = (task.check)();
    let elapsed = start.elapsed();
    let mut report = VerificationReport {
        suite: suite.to_string(),
        instance: task.instance,
        expected: None,
        actual: None,
        verdict: Verdict::Match,
        detail: None,
        elapsed,
    };
    match check {
        Check::Skipped(why) => {
            report.verdict = Verdict::Skipped;
            report.detail = Some(why);
        }
        Check::HypothesisViolated(why) => {
            report.verdict = Verdict::HypothesisViolated;
            report.detail = Some(why);
        }
        Check::Compare { expected, actual } => match (expected, actual) {
            (Err(e @ Error::OverBudget { .. }), _) => {
                report.verdict = Verdict::Skipped;
                report.detail = Some(e.to_string());
            }
            (_, Err(Error::Hypothesis(why))) => {
                report.verdict = Verdict::HypothesisViolated;
                report.detail = Some(why);
            }
            (Err(e), actual) => {
                report.verdict = Verdict::Mismatch;
                report.actual = actual.ok();
                report.detail = Some(format!("oracle failed: {e}"));
            }
            (Ok(e), Err(a)) => {
                report.verdict = Verdict::Mismatch;
                report.expected = Some(e);
                report.detail = Some(a.to_string());
            }
            (Ok(e), Ok(a)) => {
                report.verdict = if e == a { Verdict::Match } else { Verdict::Mismatch };
                report.expected = Some(e);
                report.actual = Some(a);
            }
        },
    }
    report
}

/// Counts of each verdict.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub matched: usize,
    pub mismatched: usize,
    pub hypothesis_violated: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut t = Self::default();
        for r in reports {
            match r.verdict {
                Verdict::Match => t.matched += 1,
                Verdict::Mismatch => t.mismatched += 1,
                Verdict::HypothesisViolated => t.hypothesis_violated += 1,
                Verdict::Skipped => t.skipped += 1,
            }
        }
        t
    }

    pub fn all_match(&self) -> bool {
        self.mismatched == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(SweepConfig::default().validate().is_ok());
        let bad = [
            SweepConfig { trials: 0, ..SweepConfig::default() },
            SweepConfig { max_n: 0, ..SweepConfig::default() },
            SweepConfig { density: (0.9, 0.1), ..SweepConfig::default() },
            SweepConfig { suites: vec!["nope".into()], ..SweepConfig::default() },
        ];
        for c in bad {
            assert!(run_suite(&c).is_err());
        }
    }

    #[test]
    fn corrupted_formula_is_a_mismatch() {
        fn build(_: &SweepConfig, _: &mut ChaCha8Rng) -> Vec<Task> {
            vec![Task::new(InstanceDescriptor::new("C_3"), || {
                let m = Digraph::cycle(3).adjacency();
                let wrong = crate::algebra::charpoly(&m).map(|f| &f + &Polynomial::one());
                Check::compare(oracle_charpoly(&m), wrong)
            })]
        }
        let suite = Suite { name: "corrupted", covers: &[], build };
        let reports = run_custom_suite(&suite, &SweepConfig::default());
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].verdict, Verdict::Mismatch);
        assert!(!Tally::of(&reports).all_match());
    }

    #[test]
    fn verdict_mapping() {
        let task = |check: fn() -> Check| evaluate("t", Task::new(InstanceDescriptor::new("x"), check)).verdict;
        assert_eq!(task(|| Check::compare(Ok(true), Ok(true))), Verdict::Match);
        assert_eq!(
            task(|| Check::compare::<bool, bool>(Err(Error::OverBudget { size: 10, cap: 9 }), Ok(true))),
            Verdict::Skipped
        );
        assert_eq!(
            task(|| Check::compare::<bool, bool>(Ok(true), Err(Error::Hypothesis("no".into())))),
            Verdict::HypothesisViolated
        );
        assert_eq!(task(|| Check::compare::<bool, bool>(Ok(true), Err(Error::Singular))), Verdict::Mismatch);
    }

    #[test]
    fn timing_is_not_serialised() {
        let r = evaluate("t", Task::new(InstanceDescriptor::new("x"), || Check::compare(Ok(true), Ok(true))));
        let json = serde_json::to_string(&r).unwrap();
        assert!(!json.contains("elapsed"));
        assert_eq!(json, r#"{"suite":"t","instance":{"label":"x"},"expected":true,"actual":true,"verdict":"match"}"#);
    }
}
