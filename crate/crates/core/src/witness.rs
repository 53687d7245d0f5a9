//! Explicit loxodromic witnesses and the acylindricity witness package.
//!
//! A sequence of generators that are cyclically non-adjacent in the graph
//! spells a loxodromic element whose axis is the alternating up/down edge
//! path through `A_empty`; the certificate machinery of [`crate::paths`]
//! verifies geodesy corner by corner. For a graph that is not a join, the
//! complement is connected, and doubling a DFS spanning tree of it produces
//! a closed walk through every vertex; the resulting word witnesses an
//! essential, non-elementary action, and prepending its first letter gives
//! the companion element whose axis shares a segment and then diverges.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Clique, DefiningGraph, SimpleGraph};
use crate::paths::{
    certify_geodesic, consecutive_noncrossing, covers_all_types, hyperplane_sequence,
    pairwise_noncrossing, Direction, EdgePath, PathSpec, PathVertex, Step,
};
use crate::word::{Letter, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("the graph is a clique: no loxodromic witness of this form exists (the action has a global fixed point)")]
    CliqueGraph,
    #[error("the graph is a join: its complement is disconnected")]
    JoinGraph,
    #[error("the graph has fewer than two vertices")]
    TooFewVertices,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// A shortest cyclically non-adjacent letter sequence.
    Loxodromic,
    /// A closed complement walk covering every generator.
    FullCover,
}

/// A witness word `s_1 ... s_k` with its one-period axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessWord {
    pub letters: Vec<usize>,
    pub kind: WitnessKind,
    /// One period of the axis, from `A_empty` to `g A_empty`, periodic.
    pub axis: EdgePath,
}

impl WitnessWord {
    pub fn word(&self) -> Word {
        Word::from_letters(self.letters.iter().map(|&s| Letter::positive(s)))
    }

    pub fn letter_names(&self, g: &DefiningGraph) -> Vec<String> {
        self.letters.iter().map(|&s| g.name(s).to_string()).collect()
    }
}

/// A position along the periodic axis, in signed step indices relative to
/// the base period, together with the hyperplane type crossed there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRef {
    pub step_index: i64,
    pub hyperplane_type: String,
}

/// The recorded endpoint-divergence fact: at `y = A_{s_1}` the positive rays
/// of the two axes leave through distinct edges that carry the same label,
/// hence span no cube and form a bi-infinite geodesic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivergenceNote {
    pub at: PathVertex,
    pub label: usize,
    pub g_ray_first_vertex: PathVertex,
    pub h_ray_first_vertex: PathVertex,
    pub edges_span_cube: bool,
}

/// Certificate outcomes re-run on a witness axis. The consecutive check is
/// the one the construction guarantees; the full pairwise check is reported
/// as observed and not required.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub axis_certified: bool,
    pub consecutive_noncrossing: bool,
    pub pairwise_noncrossing: bool,
    pub covers_all_types: bool,
    pub common_link_empty: bool,
}

/// The full witness package for acylindrical hyperbolicity: the covering
/// word `g`, the companion `h = s_1 g`, the divergence note, and a pair of
/// hyperplanes on opposite sides of one period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcylWitness {
    pub word: WitnessWord,
    pub h_letters: Vec<usize>,
    pub h_axis: EdgePath,
    pub divergence: DivergenceNote,
    pub hyperplane_pair: (StepRef, StepRef),
    pub g_summary: CertificateSummary,
    pub h_summary: CertificateSummary,
}

/// The alternating up/down axis of the letter word, one period from
/// `A_empty` to `g A_empty`.
fn axis_for_letters(letters: &[usize]) -> EdgePath {
    let steps = letters
        .iter()
        .flat_map(|&s| {
            [
                Step {
                    label: s,
                    dir: Direction::Up,
                },
                Step {
                    label: s,
                    dir: Direction::Down,
                },
            ]
        })
        .collect();
    EdgePath::new(Word::identity(), Clique::empty(), steps, true)
}

fn summarize(g: &DefiningGraph, letters: &[usize], axis: &EdgePath) -> CertificateSummary {
    let cert = certify_geodesic(g, axis).expect("witness axes are valid paths");
    let seq = hyperplane_sequence(g, axis).expect("witness axes are valid paths");
    let common_link_empty = (0..g.vertex_count()).all(|v| {
        !letters.iter().all(|&s| g.adjacent(v, s))
    });
    CertificateSummary {
        axis_certified: cert.certified(),
        consecutive_noncrossing: consecutive_noncrossing(g, &seq, axis.periodic),
        pairwise_noncrossing: pairwise_noncrossing(g, &seq),
        covers_all_types: covers_all_types(g, &seq),
        common_link_empty,
    }
}

/// A shortest loxodromic witness: the least non-adjacent generator pair in
/// declaration order. Fails exactly when the graph is a clique.
pub fn loxodromic_word(g: &DefiningGraph) -> Result<WitnessWord, WitnessError> {
    let n = g.vertex_count();
    let mut pair = None;
    'scan: for i in 0..n {
        for j in (i + 1)..n {
            if !g.adjacent(i, j) {
                pair = Some((i, j));
                break 'scan;
            }
        }
    }
    let (i, j) = pair.ok_or(WitnessError::CliqueGraph)?;
    let letters = vec![i, j];
    let axis = axis_for_letters(&letters);
    debug_assert!(certify_geodesic(g, &axis).unwrap().certified());
    Ok(WitnessWord {
        letters,
        kind: WitnessKind::Loxodromic,
        axis,
    })
}

/// Closed walk through every vertex of a connected graph: depth-first
/// traversal of a spanning tree from the least vertex, each tree edge walked
/// down and back up. Consecutive walk vertices (including the wraparound)
/// are always edges of the tree.
fn closed_cover_walk(comp: &SimpleGraph) -> Vec<usize> {
    let n = comp.vertex_count();
    let mut visited = vec![false; n];
    let mut walk = Vec::new();
    fn dfs(comp: &SimpleGraph, v: usize, visited: &mut [bool], walk: &mut Vec<usize>) {
        visited[v] = true;
        walk.push(v);
        for u in comp.neighbors(v) {
            if !visited[u] {
                dfs(comp, u, visited, walk);
                walk.push(v);
            }
        }
    }
    dfs(comp, 0, &mut visited, &mut walk);
    // The walk ends where it started; drop the final return so that the
    // wraparound pair is the tree edge back to the root.
    if walk.len() > 1 {
        walk.pop();
    }
    walk
}

/// A covering witness word: a closed walk in the complement graph visiting
/// every vertex. Requires a non-join graph with at least two vertices.
pub fn full_cover_word(g: &DefiningGraph) -> Result<WitnessWord, WitnessError> {
    if g.vertex_count() < 2 {
        return Err(WitnessError::TooFewVertices);
    }
    let comp = g.complement();
    if !comp.is_connected() {
        return Err(WitnessError::JoinGraph);
    }
    let letters = closed_cover_walk(&comp);
    let axis = axis_for_letters(&letters);
    let summary = summarize(g, &letters, &axis);
    assert!(summary.axis_certified, "cover walk axis must certify");
    assert!(summary.covers_all_types, "cover walk must visit every type");
    assert!(summary.common_link_empty, "non-join leaves no common link");
    Ok(WitnessWord {
        letters,
        kind: WitnessKind::FullCover,
        axis,
    })
}

/// Builds the acylindricity witness package from the covering word.
pub fn acyl_witness(g: &DefiningGraph) -> Result<AcylWitness, WitnessError> {
    let word = full_cover_word(g)?;
    let s1 = word.letters[0];
    let mut h_letters = Vec::with_capacity(word.letters.len() + 1);
    h_letters.push(s1);
    h_letters.extend_from_slice(&word.letters);
    let h_axis = axis_for_letters(&h_letters);

    // y = A_{s_1}; the positive rays of the two axes continue to s_1
    // A_empty and s_1^2 A_empty through edges that both carry label s_1.
    let y = PathVertex {
        word: Word::identity(),
        clique: Clique::new(g, &[s1]).expect("singleton cliques always exist"),
    };
    let g_next = PathVertex {
        word: Word::from_letters([Letter::positive(s1)]),
        clique: Clique::empty(),
    };
    let h_next = PathVertex {
        word: Word::from_letters([Letter::positive(s1), Letter::positive(s1)]),
        clique: Clique::empty(),
    };
    assert_ne!(g_next.word, h_next.word);
    let divergence = DivergenceNote {
        at: y,
        label: s1,
        g_ray_first_vertex: g_next,
        h_ray_first_vertex: h_next,
        edges_span_cube: false,
    };

    // Two hyperplanes on opposite sides of the segment [x, gx]: the last
    // crossing of the previous period and the first crossing of the next.
    let period = word.axis.steps.len() as i64;
    let s_last = *word.letters.last().expect("nonempty witness");
    let hyperplane_pair = (
        StepRef {
            step_index: -1,
            hyperplane_type: g.name(s_last).to_string(),
        },
        StepRef {
            step_index: period,
            hyperplane_type: g.name(s1).to_string(),
        },
    );

    let g_summary = summarize(g, &word.letters, &word.axis);
    let h_summary = summarize(g, &h_letters, &h_axis);
    assert!(h_summary.axis_certified);
    Ok(AcylWitness {
        word,
        h_letters,
        h_axis,
        divergence,
        hyperplane_pair,
        g_summary,
        h_summary,
    })
}

// --- serialized forms -------------------------------------------------------

/// Name-based form of a witness word for reports and the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessWordJson {
    pub kind: WitnessKind,
    pub letters: Vec<String>,
    pub axis: PathSpec,
    pub summary: CertificateSummary,
}

impl WitnessWordJson {
    pub fn of(g: &DefiningGraph, w: &WitnessWord) -> Self {
        WitnessWordJson {
            kind: w.kind,
            letters: w.letter_names(g),
            axis: w.axis.to_spec(g),
            summary: summarize(g, &w.letters, &w.axis),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivergenceJson {
    pub at_word: Vec<String>,
    pub at_clique: Vec<String>,
    pub label: String,
    pub g_ray_first_vertex: Vec<String>,
    pub h_ray_first_vertex: Vec<String>,
    pub edges_span_cube: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcylWitnessJson {
    pub g: WitnessWordJson,
    pub h_letters: Vec<String>,
    pub h_axis: PathSpec,
    pub h_summary: CertificateSummary,
    pub divergence: DivergenceJson,
    pub hyperplane_before_x: StepRef,
    pub hyperplane_after_gx: StepRef,
}

impl AcylWitnessJson {
    pub fn of(g: &DefiningGraph, w: &AcylWitness) -> Self {
        AcylWitnessJson {
            g: WitnessWordJson::of(g, &w.word),
            h_letters: w.h_letters.iter().map(|&s| g.name(s).to_string()).collect(),
            h_axis: w.h_axis.to_spec(g),
            h_summary: w.h_summary.clone(),
            divergence: DivergenceJson {
                at_word: w.divergence.at.word.tokens(g.names()),
                at_clique: w.divergence.at.clique.names(g),
                label: g.name(w.divergence.label).to_string(),
                g_ray_first_vertex: w.divergence.g_ray_first_vertex.word.tokens(g.names()),
                h_ray_first_vertex: w.divergence.h_ray_first_vertex.word.tokens(g.names()),
                edges_span_cube: w.divergence.edges_span_cube,
            },
            hyperplane_before_x: w.hyperplane_pair.0.clone(),
            hyperplane_after_gx: w.hyperplane_pair.1.clone(),
        }
    }
}
