use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::lattice::{DivClass, Lattice};
use super::strata::{DeltaEntry, Pattern};
use crate::error::{Error, Result};
use crate::ratcore::linalg::{is_negative_definite, Matrix};
use crate::ratcore::{int, rat, Rational};

/// Singularity content of the fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ConfigKind {
    #[serde(rename = "a1")]
    A1,
    #[serde(rename = "2a1")]
    TwoA1,
    #[serde(rename = "a2")]
    A2,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 3] = [ConfigKind::A1, ConfigKind::TwoA1, ConfigKind::A2];

    pub fn as_str(self) -> &'static str {
        match self {
            ConfigKind::A1 => "a1",
            ConfigKind::TwoA1 => "2a1",
            ConfigKind::A2 => "a2",
        }
    }

    /// Number of (-2)-curves on the minimal resolution.
    pub fn minus_two_count(self) -> usize {
        match self {
            ConfigKind::A1 => 1,
            ConfigKind::TwoA1 | ConfigKind::A2 => 2,
        }
    }
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConfigKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a1" => Ok(ConfigKind::A1),
            "2a1" | "twoa1" => Ok(ConfigKind::TwoA1),
            "a2" => Ok(ConfigKind::A2),
            other => Err(Error::Parse(format!("unknown configuration {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativeCurve {
    pub name: String,
    pub class: DivClass,
}

/// A weak del Pezzo surface of degree 4, described by its negative curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceConfig {
    pub kind: ConfigKind,
    pub lattice: Lattice,
    pub canonical: DivClass,
    pub curves: Vec<NegativeCurve>,
    /// Transcribed dual graph; keys are ordered name pairs, missing pairs are 0.
    pub adjacency: BTreeMap<(String, String), i64>,
    pub delta_table: Vec<DeltaEntry>,
}

fn edge_key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

impl SurfaceConfig {
    pub fn curve(&self, name: &str) -> Result<&NegativeCurve> {
        self.curves
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::UnknownCurve(name.to_string()))
    }

    pub fn curve_index(&self, name: &str) -> Result<usize> {
        self.curves
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::UnknownCurve(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.curves.iter().map(|c| c.name.as_str())
    }

    /// Dual-graph entry for a pair of distinct curves.
    pub fn adjacency(&self, a: &str, b: &str) -> i64 {
        self.adjacency.get(&edge_key(a, b)).copied().unwrap_or(0)
    }

    /// Intersection pairing. Panics if a class has the wrong rank, which
    /// cannot happen for classes built from this configuration.
    pub fn dot(&self, a: &DivClass, b: &DivClass) -> Rational {
        self.lattice
            .intersect(a, b)
            .expect("divisor class rank matches the lattice")
    }

    pub fn anticanonical(&self) -> DivClass {
        -&self.canonical
    }

    /// `D(u) = -K - (u-1) C2` for `u >= 1`, and `-K` for `u <= 1`.
    pub fn polarization(&self, u: &Rational) -> Result<DivClass> {
        let ak = self.anticanonical();
        if *u <= Rational::one() {
            return Ok(ak);
        }
        let c2 = &self.curve("C2")?.class;
        Ok(ak.add_scaled(c2, &-(u - Rational::one())))
    }

    pub fn is_minus_two(&self, name: &str) -> Result<bool> {
        let c = &self.curve(name)?.class;
        Ok(self.dot(c, c) == int(-2))
    }

    pub fn to_file(&self) -> ConfigFile {
        let ints = |c: &DivClass| c.to_ints().expect("configuration classes are integral");
        ConfigFile {
            kind: self.kind,
            gram: self.lattice.gram().to_vec(),
            canonical: ints(&self.canonical),
            curves: self
                .curves
                .iter()
                .map(|c| CurveEntry {
                    name: c.name.clone(),
                    class: ints(&c.class),
                })
                .collect(),
            adjacency: self
                .adjacency
                .iter()
                .map(|((a, b), &value)| EdgeEntry {
                    a: a.clone(),
                    b: b.clone(),
                    value,
                })
                .collect(),
            delta_table: self.delta_table.clone(),
        }
    }

    pub fn from_file(file: ConfigFile) -> Result<Self> {
        let lattice = Lattice::new(file.gram)?;
        let rank = lattice.rank();
        let class = |v: &[i64]| {
            if v.len() == rank {
                Ok(DivClass::from_ints(v))
            } else {
                Err(Error::DimensionMismatch {
                    left: rank,
                    right: v.len(),
                })
            }
        };
        let canonical = class(&file.canonical)?;
        let curves = file
            .curves
            .iter()
            .map(|c| {
                Ok(NegativeCurve {
                    name: c.name.clone(),
                    class: class(&c.class)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let adjacency = file
            .adjacency
            .iter()
            .map(|e| (edge_key(&e.a, &e.b), e.value))
            .collect();
        Ok(Self {
            kind: file.kind,
            lattice,
            canonical,
            curves,
            adjacency,
            delta_table: file.delta_table,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_file())?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_file(serde_json::from_str(text)?)
    }
}

/// Serialized form of a configuration, with integer coordinate vectors in the
/// basis `l, e1, ..., e5`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigFile {
    pub kind: ConfigKind,
    pub gram: Vec<Vec<i64>>,
    pub canonical: Vec<i64>,
    pub curves: Vec<CurveEntry>,
    pub adjacency: Vec<EdgeEntry>,
    pub delta_table: Vec<DeltaEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveEntry {
    pub name: String,
    pub class: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEntry {
    pub a: String,
    pub b: String,
    pub value: i64,
}

/// One failed check from [`validate_config`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

fn e(i: usize) -> [i64; 6] {
    let mut v = [0; 6];
    v[i] = 1;
    v
}

fn chain(i: usize, j: usize) -> [i64; 6] {
    let mut v = e(i);
    v[j] = -1;
    v
}

fn line(i: usize, j: usize) -> [i64; 6] {
    let mut v = [1, 0, 0, 0, 0, 0];
    v[i] = -1;
    v[j] = -1;
    v
}

const CONIC: [i64; 6] = [2, -1, -1, -1, -1, -1];
const CANONICAL: [i64; 6] = [-3, 1, 1, 1, 1, 1];

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn curve_list(kind: ConfigKind) -> Vec<(&'static str, [i64; 6])> {
    match kind {
        ConfigKind::A1 => vec![
            ("E1", e(1)),
            ("E2", e(2)),
            ("E3", e(3)),
            ("E4", chain(4, 5)),
            ("E5", e(5)),
            ("L12", line(1, 2)),
            ("L13", line(1, 3)),
            ("L14", line(1, 4)),
            ("L23", line(2, 3)),
            ("L24", line(2, 4)),
            ("L34", line(3, 4)),
            ("L45", line(4, 5)),
            ("C2", CONIC),
        ],
        ConfigKind::TwoA1 => vec![
            ("E1", e(1)),
            ("E2", chain(2, 3)),
            ("E3", e(3)),
            ("E4", chain(4, 5)),
            ("E5", e(5)),
            ("L12", line(1, 2)),
            ("L14", line(1, 4)),
            ("L24", line(2, 4)),
            ("L23", line(2, 3)),
            ("L45", line(4, 5)),
            ("C2", CONIC),
        ],
        ConfigKind::A2 => vec![
            ("E1", e(1)),
            ("E2", e(2)),
            ("E3", chain(3, 4)),
            ("E4", chain(4, 5)),
            ("E5", e(5)),
            ("L12", line(1, 2)),
            ("L13", line(1, 3)),
            ("L23", line(2, 3)),
            ("L34", line(3, 4)),
            ("C2", CONIC),
        ],
    }
}

/// Dual graph edges, all simple.
fn edge_list(kind: ConfigKind) -> &'static [(&'static str, &'static str)] {
    match kind {
        ConfigKind::A1 => &[
            ("E1", "L12"),
            ("E1", "L13"),
            ("E1", "L14"),
            ("E1", "C2"),
            ("E2", "L12"),
            ("E2", "L23"),
            ("E2", "L24"),
            ("E2", "C2"),
            ("E3", "L13"),
            ("E3", "L23"),
            ("E3", "L34"),
            ("E3", "C2"),
            ("E4", "E5"),
            ("E4", "L14"),
            ("E4", "L24"),
            ("E4", "L34"),
            ("E5", "L45"),
            ("E5", "C2"),
            ("L12", "L34"),
            ("L12", "L45"),
            ("L13", "L24"),
            ("L13", "L45"),
            ("L14", "L23"),
            ("L23", "L45"),
        ],
        ConfigKind::TwoA1 => &[
            ("E1", "L12"),
            ("E1", "L14"),
            ("E1", "C2"),
            ("E2", "E3"),
            ("E2", "L12"),
            ("E2", "L24"),
            ("E3", "L23"),
            ("E3", "C2"),
            ("E4", "E5"),
            ("E4", "L14"),
            ("E4", "L24"),
            ("E5", "L45"),
            ("E5", "C2"),
            ("L12", "L45"),
            ("L14", "L23"),
            ("L23", "L45"),
        ],
        ConfigKind::A2 => &[
            ("E1", "L12"),
            ("E1", "L13"),
            ("E1", "C2"),
            ("E2", "L12"),
            ("E2", "L23"),
            ("E2", "C2"),
            ("E3", "E4"),
            ("E3", "L13"),
            ("E3", "L23"),
            ("E4", "E5"),
            ("E4", "L34"),
            ("E5", "C2"),
            ("L12", "L34"),
        ],
    }
}

fn delta_table(kind: ConfigKind) -> Vec<DeltaEntry> {
    use Pattern::*;
    let entry = |pattern, value| DeltaEntry { pattern, value };
    match kind {
        ConfigKind::A1 => {
            let special = names(&["E1", "E2", "E3", "L12", "L13", "L23", "L45", "C2"]);
            vec![
                entry(OnAny(names(&["E4"])), int(1)),
                entry(OnAny(names(&["L14", "L24", "L34", "E5"])), rat(6, 5)),
                entry(OnTwo(special.clone()), rat(4, 3)),
                entry(OnAny(special), rat(18, 13)),
                entry(Otherwise, rat(3, 2)),
            ]
        }
        ConfigKind::TwoA1 => vec![
            entry(OnAny(names(&["E2", "E4", "L24"])), int(1)),
            entry(OnAny(names(&["E3", "E5", "L12", "L14"])), rat(6, 5)),
            entry(
                Union(vec![
                    OnBoth(names(&["C2"]), names(&["E1"])),
                    OnBoth(names(&["L23"]), names(&["L45"])),
                ]),
                rat(4, 3),
            ),
            entry(OnAny(names(&["C2", "E1", "L23", "L45"])), rat(18, 13)),
            entry(Otherwise, rat(3, 2)),
        ],
        ConfigKind::A2 => vec![
            entry(OnAny(names(&["E3", "E4"])), rat(6, 7)),
            entry(OnAny(names(&["L13", "L23", "L34", "E5"])), rat(8, 7)),
            entry(OnBoth(names(&["L12", "C2"]), names(&["E1", "E2"])), rat(4, 3)),
            entry(OnAny(names(&["L12", "C2", "E1", "E2"])), rat(18, 13)),
            entry(Otherwise, rat(3, 2)),
        ],
    }
}

/// The configuration with its derived curve classes and transcribed dual graph.
pub fn build_config(kind: ConfigKind) -> SurfaceConfig {
    let curves = curve_list(kind)
        .into_iter()
        .map(|(name, v)| NegativeCurve {
            name: name.to_string(),
            class: DivClass::from_ints(&v),
        })
        .collect();
    let adjacency = edge_list(kind)
        .iter()
        .map(|(a, b)| (edge_key(a, b), 1))
        .collect();
    SurfaceConfig {
        kind,
        lattice: Lattice::blowup_of_plane(5),
        canonical: DivClass::from_ints(&CANONICAL),
        curves,
        adjacency,
        delta_table: delta_table(kind),
    }
}

/// Checks the curve classes against the dual graph and the weak del Pezzo
/// axioms. An empty list means the configuration is consistent.
pub fn validate_config(cfg: &SurfaceConfig) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut fail = |check, detail: String| out.push(Violation { check, detail });
    let rank = cfg.lattice.rank();

    let sig = cfg.lattice.signature();
    if sig != (1, rank - 1, 0) {
        fail("signature", format!("expected (1, {}, 0), got {sig:?}", rank - 1));
    }
    for c in std::iter::once(&cfg.canonical).chain(cfg.curves.iter().map(|c| &c.class)) {
        if c.rank() != rank {
            fail("rank", format!("class {c} has rank {}, lattice {rank}", c.rank()));
            return out;
        }
    }
    let ak = cfg.anticanonical();
    let k2 = cfg.dot(&ak, &ak);
    if k2 != int(4) {
        fail("degree", format!("(-K)^2 = {k2}, expected 4"));
    }

    let mut seen = std::collections::BTreeSet::new();
    let mut minus_two = Vec::new();
    for c in &cfg.curves {
        if !seen.insert(c.name.as_str()) {
            fail("names", format!("duplicate curve {}", c.name));
        }
        if c.class.to_ints().is_none() {
            fail("integrality", format!("{} = {} is not integral", c.name, c.class));
        }
        let sq = cfg.dot(&c.class, &c.class);
        let deg = cfg.dot(&c.class, &ak);
        if sq == int(-1) {
            if deg != Rational::one() {
                fail("anticanonical degree", format!("(-1)-curve {} has -K.C = {deg}", c.name));
            }
        } else if sq == int(-2) {
            minus_two.push(c);
            if !deg.is_zero() {
                fail("anticanonical degree", format!("(-2)-curve {} has -K.C = {deg}", c.name));
            }
        } else {
            fail("self-intersection", format!("{}^2 = {sq}", c.name));
        }
        if deg < Rational::zero() {
            fail("nef", format!("-K.{} = {deg} < 0", c.name));
        }
        let adj = &sq - &deg;
        if adj != int(-2) {
            fail("adjunction", format!("{}: C^2 + C.K = {adj}", c.name));
        }
    }
    if minus_two.len() != cfg.kind.minus_two_count() {
        fail(
            "singularities",
            format!(
                "{} (-2)-curves, expected {} for {}",
                minus_two.len(),
                cfg.kind.minus_two_count(),
                cfg.kind
            ),
        );
    }
    let gram: Matrix = minus_two
        .iter()
        .map(|a| minus_two.iter().map(|b| cfg.dot(&a.class, &b.class)).collect())
        .collect();
    if !gram.is_empty() && !is_negative_definite(&gram) {
        fail("negative definite", "Gram matrix of (-2)-curves".to_string());
    }

    for (i, a) in cfg.curves.iter().enumerate() {
        for b in &cfg.curves[i + 1..] {
            let computed = cfg.dot(&a.class, &b.class);
            let listed = cfg.adjacency(&a.name, &b.name);
            if computed < Rational::zero() {
                fail("effective pair", format!("{}.{} = {computed}", a.name, b.name));
            }
            if computed != int(listed) {
                fail(
                    "dual graph",
                    format!("{}.{} = {computed}, dual graph says {listed}", a.name, b.name),
                );
            }
        }
    }
    for (a, b) in cfg.adjacency.keys() {
        if a == b || cfg.curve(a).is_err() || cfg.curve(b).is_err() {
            fail("dual graph", format!("edge {a}-{b} does not join two listed curves"));
        }
    }

    match cfg.curve("C2") {
        Ok(c2) => {
            if cfg.dot(&c2.class, &c2.class) != int(-1) || cfg.dot(&c2.class, &ak) != Rational::one() {
                fail("conic", "C2 must be a (-1)-curve".to_string());
            }
        }
        Err(_) => fail("conic", "no curve named C2".to_string()),
    }
    out
}
