//! Serializable verification records shared by the verifiers and the CLI.

use serde::Serialize;

use crate::ratcore::{decimal_approx, format_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Confirmed,
    Refuted,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Confirmed
        } else {
            Verdict::Refuted
        }
    }

    pub fn is_confirmed(self) -> bool {
        self == Verdict::Confirmed
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
        })
    }
}

/// One comparison at one abscissa. Values are canonical `p/q` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleRecord {
    pub u: String,
    pub expected: String,
    pub computed: String,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_approx: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed_approx: Option<String>,
}

impl SampleRecord {
    pub fn new(u: &Rational, expected: &Rational, computed: &Rational) -> Self {
        Self {
            u: format_rational(u),
            expected: format_rational(expected),
            computed: format_rational(computed),
            matches: expected == computed,
            expected_approx: Some(decimal_approx(expected, 20)),
            computed_approx: Some(decimal_approx(computed, 20)),
        }
    }

    /// A sample whose values are not single rationals (breakpoints, supports).
    pub fn textual(u: &Rational, expected: String, computed: String) -> Self {
        Self {
            u: format_rational(u),
            matches: expected == computed,
            expected,
            computed,
            expected_approx: None,
            computed_approx: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureOutcome {
    pub id: String,
    pub paper_location: String,
    pub samples: Vec<SampleRecord>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl FixtureOutcome {
    pub fn from_samples(id: String, paper_location: String, samples: Vec<SampleRecord>) -> Self {
        let verdict = Verdict::from_bool(!samples.is_empty() && samples.iter().all(|s| s.matches));
        Self {
            id,
            paper_location,
            samples,
            verdict,
            note: None,
        }
    }
}

/// A structural check that is not a sampled closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gate {
    pub id: String,
    pub paper_location: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

impl Gate {
    pub fn new(id: impl Into<String>, location: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            paper_location: location.into(),
            passed,
            detail: detail.into(),
            value: None,
        }
    }

    pub fn with_value(mut self, v: &Rational) -> Self {
        self.value = Some(format_rational(v));
        self
    }
}
