//! Named verification suites. Each suite checks one family of properties
//! exhaustively on a bounded universe or on seeded random samples, and
//! reports every failure with a shrunk counterexample.

mod gen;
mod ordinal_suites;
mod tree_suites;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use gen::{random_labeled_tree, random_term};

/// The available suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    OrderAxioms,
    ThetaCriterion,
    CoeffLemmas,
    GMonotone,
    EncodeMonotone,
    HigmanOracle,
    TleqFixpoint,
    GapOracle,
    Iso,
    QuasiEmbedding,
    XstarstarCases,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::OrderAxioms,
        Suite::ThetaCriterion,
        Suite::CoeffLemmas,
        Suite::GMonotone,
        Suite::EncodeMonotone,
        Suite::HigmanOracle,
        Suite::TleqFixpoint,
        Suite::GapOracle,
        Suite::Iso,
        Suite::QuasiEmbedding,
        Suite::XstarstarCases,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OrderAxioms => "order-axioms",
            Suite::ThetaCriterion => "theta-criterion",
            Suite::CoeffLemmas => "coeff-lemmas",
            Suite::GMonotone => "g-monotone",
            Suite::EncodeMonotone => "encode-monotone",
            Suite::HigmanOracle => "higman-oracle",
            Suite::TleqFixpoint => "tleq-fixpoint",
            Suite::GapOracle => "gap-oracle",
            Suite::Iso => "iso",
            Suite::QuasiEmbedding => "quasi-embedding",
            Suite::XstarstarCases => "xstarstar-cases",
        }
    }

    /// The size parameter used when none is given: a complexity bound for
    /// the ordinal suites, a term size for the tree suites, a node count for
    /// gap trees and a sequence length for Higman's order.
    pub fn default_size(self) -> usize {
        match self {
            Suite::OrderAxioms | Suite::ThetaCriterion | Suite::QuasiEmbedding => 3,
            Suite::GMonotone | Suite::EncodeMonotone => 4,
            Suite::CoeffLemmas => 5,
            Suite::HigmanOracle | Suite::TleqFixpoint => 5,
            Suite::GapOracle => 7,
            Suite::Iso => 8,
            Suite::XstarstarCases => 6,
        }
    }

    /// The number of random samples used when none is given; zero for the
    /// purely exhaustive suites.
    pub fn default_samples(self) -> usize {
        match self {
            Suite::CoeffLemmas | Suite::QuasiEmbedding => 10_000,
            Suite::GapOracle => 20_000,
            _ => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Parameters of a run; `None` selects the suite's default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Config {
    pub size: Option<usize>,
    pub samples: Option<usize>,
    pub seed: u64,
}

/// The parameters actually used, as reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Params {
    pub size: usize,
    pub seed: u64,
    pub samples: usize,
}

/// One failed check: the inputs, what the property demanded and what was
/// computed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub inputs: Vec<String>,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: Params,
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Params {
            size,
            seed,
            samples,
        } = self.params;
        writeln!(
            f,
            "{}: size {size}, seed {seed}, samples {samples}: {} checked, {} failures",
            self.suite,
            self.checked,
            self.failures.len()
        )?;
        for fail in &self.failures {
            writeln!(
                f,
                "  {}: expected {}, got {}",
                fail.inputs.join(" | "),
                fail.expected,
                fail.got
            )?;
        }
        Ok(())
    }
}

/// Runs a suite.
pub fn run_suite(suite: Suite, cfg: &Config) -> SuiteReport {
    let params = Params {
        size: cfg.size.unwrap_or(suite.default_size()),
        seed: cfg.seed,
        samples: cfg.samples.unwrap_or(suite.default_samples()),
    };
    let mut tally = Tally::default();
    match suite {
        Suite::OrderAxioms => ordinal_suites::order_axioms(&params, &mut tally),
        Suite::ThetaCriterion => ordinal_suites::theta_criterion(&params, &mut tally),
        Suite::CoeffLemmas => ordinal_suites::coeff_lemmas(&params, &mut tally),
        Suite::GMonotone => ordinal_suites::g_monotone(&params, &mut tally),
        Suite::EncodeMonotone => ordinal_suites::encode_monotone(&params, &mut tally),
        Suite::QuasiEmbedding => ordinal_suites::quasi_embedding(&params, &mut tally),
        Suite::HigmanOracle => tree_suites::higman_oracle(&params, &mut tally),
        Suite::TleqFixpoint => tree_suites::tleq_fixpoint(&params, &mut tally),
        Suite::GapOracle => tree_suites::gap_oracle(&params, &mut tally),
        Suite::Iso => tree_suites::iso(&params, &mut tally),
        Suite::XstarstarCases => tree_suites::xstarstar_cases(&params, &mut tally),
    }
    let mut failures = tally.failures;
    failures.sort();
    failures.dedup();
    SuiteReport {
        suite: suite.name().to_string(),
        params,
        checked: tally.checked,
        failures,
    }
}

/// Running count of checks and the failures found so far.
#[derive(Debug, Default)]
struct Tally {
    checked: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.checked += 1;
        if !ok {
            self.failures.push(failure());
        }
    }
}

fn failure(
    inputs: &[&dyn fmt::Display],
    expected: impl fmt::Display,
    got: impl fmt::Display,
) -> Failure {
    Failure {
        inputs: inputs.iter().map(|x| x.to_string()).collect(),
        expected: expected.to_string(),
        got: got.to_string(),
    }
}

/// Greedily replaces inputs by smaller candidates, largest first, while the
/// property still fails.
fn shrink<T: Clone>(
    mut inputs: Vec<T>,
    fails: impl Fn(&[T]) -> bool,
    smaller: impl Fn(&T) -> Vec<T>,
) -> Vec<T> {
    'outer: loop {
        for i in 0..inputs.len() {
            for cand in smaller(&inputs[i]) {
                let mut trial = inputs.clone();
                trial[i] = cand;
                if fails(&trial) {
                    inputs = trial;
                    continue 'outer;
                }
            }
        }
        return inputs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn shrink_finds_a_small_witness() {
        // Property "x < 10" fails on 37; candidates halve or decrement.
        let got = shrink(vec![37u32], |xs| xs[0] >= 10, |&x| vec![x / 2, x - 1]);
        assert_eq!(got, vec![10]);
    }
}
