//! Named end-to-end reproductions. Every suite computes a quantity with the
//! gfkit engines and compares it with an enumeration in [`oracles`].

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub mod oracles;
pub mod properties;
mod series;
mod suites;

/// How far each suite pushes its bounds. `Default` uses the published bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Small,
    Default,
}

impl Scale {
    /// `full` at default scale, `small` otherwise.
    pub fn pick(self, small: usize, full: usize) -> usize {
        match self {
            Scale::Small => small,
            Scale::Default => full,
        }
    }
}

impl FromStr for Scale {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "small" => Ok(Scale::Small),
            "default" => Ok(Scale::Default),
            _ => Err(format!("unknown scale '{s}' (expected small or default)")),
        }
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scale::Small => "small",
            Scale::Default => "default",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub description: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub scale: Scale,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite '{}'", self.0)
    }
}

impl std::error::Error for UnknownSuite {}

/// Compact rendering of compared values: numbers as `p/q`, sequences comma-separated.
pub(crate) trait Show {
    fn show(&self) -> String;
}

macro_rules! show_display {
    ($($t:ty),*) => {
        $(impl Show for $t {
            fn show(&self) -> String {
                self.to_string()
            }
        })*
    };
}

show_display!(u64, i64, i32, usize, bool, String, gfkit_core::arith::Rat, gfkit_core::arith::MPoly, num_bigint::BigInt);

impl<T: Show> Show for Vec<T> {
    fn show(&self) -> String {
        let parts: Vec<String> = self.iter().map(Show::show).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl<T: Show> Show for Option<T> {
    fn show(&self) -> String {
        self.as_ref().map_or("none".into(), Show::show)
    }
}

impl<C: gfkit_core::arith::Coeff> Show for gfkit_core::arith::TSeries<C> {
    fn show(&self) -> String {
        self.to_string()
    }
}

impl Show for gfkit_core::algebraic::NormalForm {
    fn show(&self) -> String {
        format!("{self:?}")
    }
}

impl<A: Show, B: Show> Show for (A, B) {
    fn show(&self) -> String {
        format!("({}, {})", self.0.show(), self.1.show())
    }
}

/// Collects checks; engine errors become failed checks instead of aborting the suite.
#[derive(Default)]
pub(crate) struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    pub fn check(&mut self, description: impl Into<String>, expected: impl fmt::Display, computed: impl fmt::Display, pass: bool) {
        self.checks.push(Check {
            description: description.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
        });
    }

    pub fn eq<T: PartialEq + Show>(&mut self, description: impl Into<String>, expected: T, computed: T) {
        let pass = expected == computed;
        self.check(description, expected.show(), computed.show(), pass);
    }

    /// Unwraps an engine result, recording a failure when it is an error.
    pub fn ok<T, E: fmt::Display>(&mut self, description: &str, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(description, "success", format!("error: {e}"), false);
                None
            }
        }
    }
}

type SuiteFn = fn(Scale, &mut Recorder);

/// The registry, sorted by name.
const SUITES: &[(&str, SuiteFn)] = &[
    ("cc_polyominoes", suites::rational::cc_polyominoes),
    ("directed_animals", suites::heaps::directed_animals),
    ("dyck_area", suites::walks::dyck_area),
    ("embedded_trees", suites::trees::embedded_trees),
    ("hypergeometric", suites::hypergeometric::hypergeometric),
    ("interval_parts", suites::rational::interval_parts),
    ("kreweras", suites::walks::kreweras),
    ("lecture_hall", suites::rational::lecture_hall),
    ("planar_maps", suites::maps::planar_maps),
    ("slit_plane", suites::walks::slit_plane),
    ("triangulations", suites::maps::triangulations),
];

pub fn list_suites() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

pub fn run_suite(name: &str, scale: Scale) -> Result<SuiteReport, UnknownSuite> {
    let (_, f) = SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| UnknownSuite(name.to_string()))?;
    Ok(timed(name, scale, *f))
}

pub(crate) fn timed(name: &str, scale: Scale, f: impl FnOnce(Scale, &mut Recorder)) -> SuiteReport {
    let start = Instant::now();
    let mut rec = Recorder::default();
    f(scale, &mut rec);
    SuiteReport {
        suite: name.to_string(),
        scale,
        checks: rec.checks,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs every suite, one thread per suite; reports come back in name order.
pub fn run_all(scale: Scale) -> Vec<SuiteReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = SUITES
            .iter()
            .map(|(name, f)| s.spawn(move || timed(name, scale, *f)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    })
}
