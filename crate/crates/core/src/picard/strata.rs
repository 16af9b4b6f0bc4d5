use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::SurfaceConfig;
use crate::error::{Error, Result};
use crate::ratcore::{serde_rational, Rational};

/// Position of a point, recorded as the set of negative curves through it.
/// The empty set is a point off every negative curve.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PointStratum(BTreeSet<String>);

impl PointStratum {
    pub fn new<I, S>(curves: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self(curves.into_iter().map(Into::into).collect())
    }

    pub fn generic() -> Self {
        Self::default()
    }

    pub fn curves(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn contains(&self, curve: &str) -> bool {
        self.0.contains(curve)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks the stratum can exist on `cfg`: at most two curves, all known,
    /// and a pair must actually meet.
    pub fn validate(&self, cfg: &SurfaceConfig) -> Result<()> {
        if self.len() > 2 {
            return Err(Error::InvalidStratum(format!("{self}: more than two curves")));
        }
        for c in self.curves() {
            cfg.curve(c)?;
        }
        if let [a, b] = self.0.iter().collect::<Vec<_>>()[..] {
            if cfg.adjacency(a, b) < 1 {
                return Err(Error::InvalidStratum(format!("{a} and {b} are disjoint")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for PointStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("generic");
        }
        let names: Vec<&str> = self.curves().collect();
        f.write_str(&names.join("∩"))
    }
}

/// Membership pattern used by the reference delta tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "curves", rename_all = "snake_case")]
pub enum Pattern {
    /// On at least one of the curves.
    OnAny(Vec<String>),
    /// On at least two of the curves.
    OnTwo(Vec<String>),
    /// On a curve from the first list and a curve from the second.
    OnBoth(Vec<String>, Vec<String>),
    Union(Vec<Pattern>),
    Otherwise,
}

impl Pattern {
    pub fn matches(&self, s: &PointStratum) -> bool {
        let hits = |names: &[String]| names.iter().filter(|n| s.contains(n)).count();
        match self {
            Pattern::OnAny(c) => hits(c) >= 1,
            Pattern::OnTwo(c) => hits(c) >= 2,
            Pattern::OnBoth(a, b) => hits(a) >= 1 && hits(b) >= 1,
            Pattern::Union(ps) => ps.iter().any(|p| p.matches(s)),
            Pattern::Otherwise => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaEntry {
    pub pattern: Pattern,
    #[serde(with = "serde_rational")]
    pub value: Rational,
}

/// Value of the first pattern in the reference table that matches.
pub fn delta_reference(cfg: &SurfaceConfig, stratum: &PointStratum) -> Result<Rational> {
    stratum.validate(cfg)?;
    cfg.delta_table
        .iter()
        .find(|e| e.pattern.matches(stratum))
        .map(|e| e.value.clone())
        .ok_or_else(|| Error::InvalidStratum(format!("{stratum}: no table entry matches")))
}

/// Every stratum the configuration admits: the generic point, a general
/// point of each curve, and each intersection point of two curves.
pub fn enumerate_strata(cfg: &SurfaceConfig) -> Vec<PointStratum> {
    let names: Vec<&str> = cfg.curves.iter().map(|c| c.name.as_str()).collect();
    let mut out = vec![PointStratum::generic()];
    out.extend(names.iter().map(|n| PointStratum::new([*n])));
    for (i, a) in names.iter().enumerate() {
        for b in &names[i + 1..] {
            if cfg.adjacency(a, b) >= 1 {
                out.push(PointStratum::new([*a, *b]));
            }
        }
    }
    out
}
