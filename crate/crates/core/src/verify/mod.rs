//! Identity suites: each enumerates a grid of weights or partitions, checks
//! one family of exact identities, and reports the failing cases.

mod grid;
pub(crate) mod suites;

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

pub use grid::{Grid, GridSpec, Range};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Rho,
    SplitClassical,
    SplitSuper,
    IsolateY,
    CompositeSchur,
    JtVsOracle,
    Structural,
    RaiseOracle,
    PhiRoundtrip,
    GlM1,
    All,
}

impl Suite {
    pub const EACH: [Suite; 10] = [
        Suite::Rho,
        Suite::SplitClassical,
        Suite::SplitSuper,
        Suite::IsolateY,
        Suite::CompositeSchur,
        Suite::JtVsOracle,
        Suite::Structural,
        Suite::RaiseOracle,
        Suite::PhiRoundtrip,
        Suite::GlM1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Rho => "rho",
            Suite::SplitClassical => "split-classical",
            Suite::SplitSuper => "split-super",
            Suite::IsolateY => "isolate-y",
            Suite::CompositeSchur => "composite-schur",
            Suite::JtVsOracle => "jt-vs-oracle",
            Suite::Structural => "structural",
            Suite::RaiseOracle => "raise-oracle",
            Suite::PhiRoundtrip => "phi-roundtrip",
            Suite::GlM1 => "glm1",
            Suite::All => "all",
        }
    }

    /// The grid used when no override is given.
    pub fn default_grid(self) -> Grid {
        let g = |m: (usize, usize), n: (usize, usize), entry: i64| Grid {
            m: Range::new(m.0, m.1),
            n: Range::new(n.0, n.1),
            entry,
            samples: None,
        };
        match self {
            Suite::Rho => g((1, 4), (0, 3), 0),
            Suite::SplitClassical | Suite::CompositeSchur => g((1, 4), (0, 0), 3),
            Suite::SplitSuper => g((1, 4), (0, 2), 2),
            Suite::IsolateY => g((1, 3), (1, 2), 2),
            Suite::JtVsOracle => g((1, 3), (1, 2), 3),
            Suite::Structural => g((1, 3), (1, 2), 2),
            Suite::RaiseOracle => Grid { samples: Some(500), ..g((1, 4), (1, 3), 3) },
            Suite::PhiRoundtrip => g((1, 3), (1, 2), 3),
            Suite::GlM1 => g((2, 3), (1, 1), 3),
            Suite::All => g((1, 3), (1, 2), 2),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// `{suite, cases, failures}` with failures sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `suite` on its default grid overridden by `spec`. With
/// [`Suite::All`] the overrides apply to every suite and failures are
/// prefixed by the suite name.
pub fn run(suite: Suite, spec: &GridSpec, seed: u64) -> Report {
    if suite == Suite::All {
        let mut cases = 0;
        let mut failures = Vec::new();
        for s in Suite::EACH {
            let r = run(s, spec, seed);
            cases += r.cases;
            failures.extend(r.failures.into_iter().map(|f| format!("{s}: {f}")));
        }
        failures.sort();
        return Report { suite: suite.name().into(), cases, failures };
    }
    let grid = spec.resolve(suite.default_grid());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = suites::run(suite, &grid, &mut rng);
    outcome.failures.sort();
    Report { suite: suite.name().into(), cases: outcome.cases, failures: outcome.failures }
}

pub(crate) struct Outcome {
    cases: usize,
    failures: Vec<String>,
}

/// Checks every case, or a seeded sample of `grid.samples` of them.
pub(crate) fn check_all<T, F>(cases: Vec<T>, grid: &Grid, rng: &mut ChaCha8Rng, check: F) -> Outcome
where
    F: Fn(&T) -> std::result::Result<(), String>,
{
    let mut chosen: Vec<usize> = (0..cases.len()).collect();
    if let Some(s) = grid.samples.filter(|&s| s < cases.len()) {
        chosen.shuffle(rng);
        chosen.truncate(s);
        chosen.sort_unstable();
    }
    let failures = chosen.iter().filter_map(|&i| check(&cases[i]).err()).collect();
    Outcome { cases: chosen.len(), failures }
}
