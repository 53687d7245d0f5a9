//! Labeled edge paths in the clique-cube complex, geodesy certificates and
//! hyperplane type bookkeeping.
//!
//! A path is a base vertex `g A_T` plus a sequence of up/down steps. An
//! up-step through `s` goes `g A_T -> g A_{T + {s}}`; a down-step through
//! `s` leaves the subgroup coset by multiplying the ambient word,
//! `g A_T -> (g s) A_{T - {s}}`. Axes of loxodromic words are exactly
//! alternating up/down sequences under this convention.
//!
//! Geodesy certificates are sound-only: a corner passes when its two edge
//! labels are equal or non-adjacent in the graph, the two cases in which the
//! edges cannot span a common square and the link angle is at least pi. A
//! corner with distinct adjacent labels is conservatively rejected.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Clique, DefiningGraph};
use crate::word::{parse_word, Letter, Word, WordParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

/// One step of an edge path: the edge label and the travel direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub label: usize,
    pub dir: Direction,
}

/// A labeled edge path with explicit directions, checkable without solving
/// any word problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePath {
    pub base_word: Word,
    pub base_clique: Clique,
    pub steps: Vec<Step>,
    /// Marks one period of a translation axis; the wraparound corner is then
    /// part of the certificate.
    pub periodic: bool,
}

/// A vertex along a path: ambient word and clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathVertex {
    pub word: Word,
    pub clique: Clique,
}

impl PathVertex {
    pub fn display(&self, g: &DefiningGraph) -> String {
        format!(
            "{}.A{}",
            self.word.display(g.names()),
            self.clique.display(g)
        )
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("step {index}: up-step label `{label}` is already in the clique")]
    UpLabelInClique { index: usize, label: String },
    #[error("step {index}: `{label}` is not joined to every member of the current clique")]
    UpNotAClique { index: usize, label: String },
    #[error("step {index}: down-step label `{label}` is not in the current clique")]
    DownLabelNotInClique { index: usize, label: String },
    #[error("{0}")]
    Word(#[from] WordParseError),
}

impl EdgePath {
    pub fn new(base_word: Word, base_clique: Clique, steps: Vec<Step>, periodic: bool) -> Self {
        EdgePath {
            base_word,
            base_clique,
            steps,
            periodic,
        }
    }

    /// The vertex sequence, validating every step. Returns one vertex more
    /// than there are steps.
    pub fn vertices(&self, g: &DefiningGraph) -> Result<Vec<PathVertex>, PathError> {
        let mut out = vec![PathVertex {
            word: self.base_word.clone(),
            clique: self.base_clique.clone(),
        }];
        for (index, step) in self.steps.iter().enumerate() {
            let cur = out.last().expect("nonempty");
            let label = g.name(step.label).to_string();
            let next = match step.dir {
                Direction::Up => {
                    if cur.clique.contains(step.label) {
                        return Err(PathError::UpLabelInClique { index, label });
                    }
                    if !cur
                        .clique
                        .members()
                        .iter()
                        .all(|&t| g.adjacent(t, step.label))
                    {
                        return Err(PathError::UpNotAClique { index, label });
                    }
                    PathVertex {
                        word: cur.word.clone(),
                        clique: cur.clique.with(step.label),
                    }
                }
                Direction::Down => {
                    if !cur.clique.contains(step.label) {
                        return Err(PathError::DownLabelNotInClique { index, label });
                    }
                    let mut word = cur.word.clone();
                    word.push(Letter::positive(step.label));
                    PathVertex {
                        word,
                        clique: cur.clique.without(step.label),
                    }
                }
            };
            out.push(next);
        }
        Ok(out)
    }

    pub fn validate(&self, g: &DefiningGraph) -> Result<(), PathError> {
        self.vertices(g).map(|_| ())
    }

    pub fn to_spec(&self, g: &DefiningGraph) -> PathSpec {
        PathSpec {
            base_word: self.base_word.tokens(g.names()),
            base_clique: self.base_clique.names(g),
            periodic: self.periodic,
            steps: self
                .steps
                .iter()
                .map(|s| StepSpec {
                    label: g.name(s.label).to_string(),
                    dir: s.dir,
                })
                .collect(),
        }
    }

    pub fn from_spec(g: &DefiningGraph, spec: &PathSpec) -> Result<Self, SpecError> {
        let base_word = parse_word(&spec.base_word, g.names())?;
        let clique_names: Vec<&str> = spec.base_clique.iter().map(String::as_str).collect();
        let base_clique =
            Clique::from_names(g, &clique_names).map_err(|e| SpecError::Clique(e.to_string()))?;
        let mut steps = Vec::new();
        for s in &spec.steps {
            let label = g
                .index_of(&s.label)
                .ok_or_else(|| SpecError::Word(WordParseError::UnknownGenerator(s.label.clone())))?;
            steps.push(Step {
                label,
                dir: s.dir,
            });
        }
        Ok(EdgePath::new(base_word, base_clique, steps, spec.periodic))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("{0}")]
    Word(#[from] WordParseError),
    #[error("base clique: {0}")]
    Clique(String),
}

/// Serialized form of a path: letter tokens and `{label, dir}` steps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSpec {
    #[serde(default)]
    pub base_word: Vec<String>,
    #[serde(default)]
    pub base_clique: Vec<String>,
    #[serde(default)]
    pub periodic: bool,
    pub steps: Vec<StepSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepSpec {
    pub label: String,
    pub dir: Direction,
}

/// Accepts either a bare JSON array of steps (based at `A_empty`) or a full
/// path object.
pub fn parse_path_json(text: &str) -> Result<PathSpec, serde_json::Error> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.is_array() {
        let steps: Vec<StepSpec> = serde_json::from_value(value)?;
        Ok(PathSpec {
            base_word: Vec::new(),
            base_clique: Vec::new(),
            periodic: false,
            steps,
        })
    } else {
        serde_json::from_value(value)
    }
}

/// Hyperplane types: one per generator; the hyperplane dual to an edge
/// labeled `s` has type `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HyperplaneType(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CornerStatus {
    /// Both edges carry the same label; they can never lie in one cube.
    RepeatedLabel,
    /// Distinct labels that are non-adjacent in the graph; no common square.
    NonAdjacentLabels,
    /// Distinct adjacent labels; the edges may span a square, so the
    /// certificate conservatively rejects the corner.
    AdjacentLabels,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerReport {
    /// Index of the vertex between steps `index` and `index + 1` (modulo the
    /// period for the wraparound corner).
    pub index: usize,
    pub labels: (String, String),
    pub status: CornerStatus,
    pub passes: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Certified,
    NotCertified,
}

/// Certificate for local geodesy of an edge path. `Certified` is sound:
/// every corner angle is at least pi, so the path is a geodesic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeodesyCertificate {
    pub verdict: Verdict,
    pub corners: Vec<CornerReport>,
}

impl GeodesyCertificate {
    pub fn certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }
}

/// Checks every interior corner of the path (plus the wraparound corner for
/// periodic paths) against the link-angle criterion.
pub fn certify_geodesic(g: &DefiningGraph, p: &EdgePath) -> Result<GeodesyCertificate, PathError> {
    p.validate(g)?;
    let mut corners = Vec::new();
    let count = if p.periodic && p.steps.len() >= 2 {
        p.steps.len()
    } else {
        p.steps.len().saturating_sub(1)
    };
    for k in 0..count {
        let a = p.steps[k].label;
        let b = p.steps[(k + 1) % p.steps.len()].label;
        let status = if a == b {
            CornerStatus::RepeatedLabel
        } else if !g.adjacent(a, b) {
            CornerStatus::NonAdjacentLabels
        } else {
            CornerStatus::AdjacentLabels
        };
        corners.push(CornerReport {
            index: k + 1,
            labels: (g.name(a).to_string(), g.name(b).to_string()),
            status,
            passes: status != CornerStatus::AdjacentLabels,
        });
    }
    let verdict = if corners.iter().all(|c| c.passes) {
        Verdict::Certified
    } else {
        Verdict::NotCertified
    };
    Ok(GeodesyCertificate { verdict, corners })
}

/// The hyperplane type crossed by each step, in order.
pub fn hyperplane_sequence(
    g: &DefiningGraph,
    p: &EdgePath,
) -> Result<Vec<HyperplaneType>, PathError> {
    p.validate(g)?;
    Ok(p.steps.iter().map(|s| HyperplaneType(s.label)).collect())
}

/// Necessary condition for two hyperplanes to cross: distinct types whose
/// generators are adjacent in the graph.
pub fn may_cross(g: &DefiningGraph, s: HyperplaneType, t: HyperplaneType) -> bool {
    s != t && g.adjacent(s.0, t.0)
}

/// Label-level certificate that no two hyperplanes of the sequence
/// intersect: `may_cross` fails for every pair.
pub fn pairwise_noncrossing(g: &DefiningGraph, seq: &[HyperplaneType]) -> bool {
    seq.iter()
        .enumerate()
        .all(|(k, &s)| seq[k + 1..].iter().all(|&t| !may_cross(g, s, t)))
}

/// The weaker consecutive-only form, optionally closing the sequence into a
/// cycle.
pub fn consecutive_noncrossing(g: &DefiningGraph, seq: &[HyperplaneType], cyclic: bool) -> bool {
    if seq.len() < 2 {
        return true;
    }
    let pairs = if cyclic { seq.len() } else { seq.len() - 1 };
    (0..pairs).all(|k| !may_cross(g, seq[k], seq[(k + 1) % seq.len()]))
}

/// Every generator of the graph appears in the sequence.
pub fn covers_all_types(g: &DefiningGraph, seq: &[HyperplaneType]) -> bool {
    (0..g.vertex_count()).all(|s| seq.iter().any(|&t| t.0 == s))
}
