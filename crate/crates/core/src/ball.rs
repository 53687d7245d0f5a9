//! Explicit finite balls of the clique-cube complex, exact in the
//! right-angled case.
//!
//! Right-angled graphs (every label 2) have a solvable word problem with
//! canonical forms: commute adjacent generators, cancel freely, and take the
//! lexicographically least shuffle. Cosets `g A_T` then get canonical
//! minimal representatives by stripping strippable `T`-letters off the right
//! end. The ball of budget `r` collects every vertex whose canonical
//! representative length plus clique size is at most `r`, plus all cubes
//! whose corners survive; the budget truncates the infinite-valence vertices
//! deterministically. Non-right-angled input is a hard error.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::is_finite_type;
use crate::flag::SimplicialComplex;
use crate::graph::{Clique, DefiningGraph};
use crate::word::{Letter, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BallError {
    #[error("graph is not right-angled: edge `{0}-{1}` has label {2}")]
    NotRightAngled(String, String, u32),
}

fn require_right_angled(g: &DefiningGraph) -> Result<(), BallError> {
    match g.edges().find(|&(_, _, m)| m != 2) {
        None => Ok(()),
        Some((i, j, m)) => Err(BallError::NotRightAngled(
            g.name(i).to_string(),
            g.name(j).to_string(),
            m,
        )),
    }
}

/// Letters commute when their generators are equal or joined by an edge.
fn commutes(g: &DefiningGraph, a: usize, b: usize) -> bool {
    a == b || g.adjacent(a, b)
}

/// Independent letters in the shuffle sense: distinct commuting generators.
fn independent(g: &DefiningGraph, a: usize, b: usize) -> bool {
    a != b && g.adjacent(a, b)
}

/// Deletes every cancellable pair: inverse letters on the same generator
/// with everything in between commuting past them.
fn fully_reduce(g: &DefiningGraph, word: &Word) -> Vec<Letter> {
    let mut letters: Vec<Letter> = word.letters().to_vec();
    'restart: loop {
        for i in 0..letters.len() {
            for j in (i + 1)..letters.len() {
                if letters[j].gen == letters[i].gen
                    && letters[j].inv != letters[i].inv
                        && letters[i + 1..j]
                            .iter()
                            .all(|l| commutes(g, l.gen, letters[i].gen))
                    {
                        letters.remove(j);
                        letters.remove(i);
                        continue 'restart;
                    }
            }
        }
        return letters;
    }
}

/// Greedy front extraction of the lexicographically least shuffle of a
/// reduced word.
fn lex_least_shuffle(g: &DefiningGraph, mut letters: Vec<Letter>) -> Word {
    let mut out = Vec::with_capacity(letters.len());
    while !letters.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..letters.len() {
            if letters[..i]
                .iter()
                .all(|l| independent(g, l.gen, letters[i].gen))
                && best.is_none_or(|b| letters[i] < letters[b]) {
                    best = Some(i);
                }
        }
        let i = best.expect("the first letter is always movable");
        out.push(letters.remove(i));
    }
    Word::from_letters(out)
}

/// Canonical form of a word in the right-angled Artin group: freely and
/// commutation-reduced, then the lexicographically least shuffle. Equal
/// group elements yield identical canonical words.
pub fn normal_form_raag(g: &DefiningGraph, word: &Word) -> Result<Word, BallError> {
    require_right_angled(g)?;
    Ok(lex_least_shuffle(g, fully_reduce(g, word)))
}

/// A vertex `g A_T` of the clique-cube complex with its canonical minimal
/// coset representative. Two values are equal iff their fields are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CosetVertex {
    pub rep: Word,
    pub clique: Clique,
}

impl CosetVertex {
    pub fn base() -> Self {
        CosetVertex {
            rep: Word::identity(),
            clique: Clique::empty(),
        }
    }

    /// Representative length plus clique size; the ball budget.
    pub fn weight(&self) -> usize {
        self.rep.len() + self.clique.len()
    }

    pub fn display(&self, g: &DefiningGraph) -> String {
        format!(
            "{}.A{}",
            self.rep.display(g.names()),
            self.clique.display(g)
        )
    }
}

impl Ord for CosetVertex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rep.len(), self.rep.letters(), self.clique.len(), self.clique.members()).cmp(&(
            other.rep.len(),
            other.rep.letters(),
            other.clique.len(),
            other.clique.members(),
        ))
    }
}

impl PartialOrd for CosetVertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical representative of the coset `word * A_t`: normal form, then
/// repeatedly strip the rightmost letter that lies in `t` and commutes to
/// the right end, re-normalizing after each strip.
pub fn canonical_coset(
    g: &DefiningGraph,
    word: &Word,
    t: &Clique,
) -> Result<CosetVertex, BallError> {
    let mut rep = normal_form_raag(g, word)?;
    'strip: loop {
        let letters = rep.letters();
        for i in (0..letters.len()).rev() {
            if t.contains(letters[i].gen)
                && letters[i + 1..]
                    .iter()
                    .all(|l| commutes(g, l.gen, letters[i].gen))
            {
                let mut next: Vec<Letter> = letters.to_vec();
                next.remove(i);
                rep = lex_least_shuffle(g, fully_reduce(g, &Word::from_letters(next)));
                continue 'strip;
            }
        }
        break;
    }
    Ok(CosetVertex {
        rep,
        clique: t.clone(),
    })
}

/// A cube of the ball, recorded by its interval: minimal vertex, maximal
/// vertex, and the direction set `T' minus T`. Dimension >= 1; dimension-1
/// cubes are the edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cube {
    pub base: CosetVertex,
    pub top: CosetVertex,
    pub directions: Vec<usize>,
}

impl Cube {
    pub fn dimension(&self) -> usize {
        self.directions.len()
    }
}

/// A finite piece of the clique-cube complex around `A_empty`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeBall {
    pub radius: usize,
    /// Canonically ordered vertex list.
    pub vertices: Vec<CosetVertex>,
    /// Deligne subcomplex flags, parallel to `vertices`: whether the
    /// vertex's clique is finite type.
    pub deligne: Vec<bool>,
    /// All cubes of dimension >= 1, sorted by (dimension, base, top).
    pub cubes: Vec<Cube>,
}

impl CubeBall {
    pub fn vertex_index(&self, v: &CosetVertex) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn contains(&self, v: &CosetVertex) -> bool {
        self.vertex_index(v).is_some()
    }

    pub fn cubes_of_dim(&self, d: usize) -> impl Iterator<Item = &Cube> {
        self.cubes.iter().filter(move |c| c.dimension() == d)
    }

    pub fn edge_count(&self) -> usize {
        self.cubes_of_dim(1).count()
    }

    pub fn max_dimension(&self) -> usize {
        self.cubes.iter().map(|c| c.dimension()).max().unwrap_or(0)
    }

    /// Vertices of the form `g A_empty`.
    pub fn group_element_vertices(&self) -> impl Iterator<Item = &CosetVertex> {
        self.vertices.iter().filter(|v| v.clique.is_empty())
    }

    /// All 2^d corner vertices of a cube.
    pub fn cube_corners(&self, g: &DefiningGraph, cube: &Cube) -> Vec<CosetVertex> {
        interval_corners(g, &cube.base, &cube.directions)
            .expect("stored cubes are right-angled intervals")
    }
}

fn interval_corners(
    g: &DefiningGraph,
    base: &CosetVertex,
    directions: &[usize],
) -> Result<Vec<CosetVertex>, BallError> {
    let d = directions.len();
    let mut out = Vec::with_capacity(1 << d);
    for mask in 0..(1u32 << d) {
        let mut clique = base.clique.clone();
        for (k, &s) in directions.iter().enumerate() {
            if mask >> k & 1 == 1 {
                clique = clique.with(s);
            }
        }
        out.push(canonical_coset(g, &base.rep, &clique)?);
    }
    Ok(out)
}

/// Builds the ball of the given budget: every vertex `g A_T` with
/// `|g| + |T| <= radius`, found by breadth-first closure over the up moves
/// `g A_T -> g A_{T + {s}}` and the down moves
/// `g A_T -> (g s^n) A_{T - {s}}`, then interval cube-filling.
pub fn build_ball(g: &DefiningGraph, radius: usize) -> Result<CubeBall, BallError> {
    require_right_angled(g)?;
    let start = CosetVertex::base();
    let mut seen: BTreeSet<CosetVertex> = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    let n_bound = 2 * radius as i64 + 2;
    while let Some(v) = queue.pop_front() {
        let push = |w: CosetVertex, seen: &mut BTreeSet<CosetVertex>, queue: &mut VecDeque<CosetVertex>| {
            if w.weight() <= radius && !seen.contains(&w) {
                seen.insert(w.clone());
                queue.push_back(w);
            }
        };
        for s in 0..g.vertex_count() {
            if !v.clique.contains(s)
                && v.clique.members().iter().all(|&t| g.adjacent(t, s))
            {
                let up = canonical_coset(g, &v.rep, &v.clique.with(s))?;
                push(up, &mut seen, &mut queue);
            }
        }
        for &s in v.clique.members() {
            let residue = v.clique.without(s);
            for n in -n_bound..=n_bound {
                let mut word = v.rep.clone();
                for _ in 0..n.abs() {
                    word.push(Letter::new(s, n < 0));
                }
                let down = canonical_coset(g, &word, &residue)?;
                push(down, &mut seen, &mut queue);
            }
        }
    }

    let vertices: Vec<CosetVertex> = seen.into_iter().collect();
    let vertex_set: BTreeSet<&CosetVertex> = vertices.iter().collect();

    // Interval cube-filling: each cube is recorded once, at its minimal
    // vertex, by the set of directions it extends into.
    let mut cubes = Vec::new();
    for v in &vertices {
        let extensions: Vec<usize> = (0..g.vertex_count())
            .filter(|&s| {
                !v.clique.contains(s) && v.clique.members().iter().all(|&t| g.adjacent(t, s))
            })
            .collect();
        for mask in 1u32..(1 << extensions.len()) {
            let directions: Vec<usize> = extensions
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &s)| s)
                .collect();
            let pairwise = directions
                .iter()
                .enumerate()
                .all(|(k, &a)| directions[k + 1..].iter().all(|&b| g.adjacent(a, b)));
            if !pairwise {
                continue;
            }
            let corners = interval_corners(g, v, &directions)?;
            if corners.iter().all(|c| vertex_set.contains(c)) {
                let top = corners.last().expect("nonempty corner list").clone();
                cubes.push(Cube {
                    base: v.clone(),
                    top,
                    directions,
                });
            }
        }
    }
    cubes.sort_by(|a, b| {
        (a.dimension(), &a.base, &a.top).cmp(&(b.dimension(), &b.base, &b.top))
    });

    let deligne = vertices
        .iter()
        .map(|v| is_finite_type(g, &v.clique).finite)
        .collect();
    Ok(CubeBall {
        radius,
        vertices,
        deligne,
        cubes,
    })
}

/// Recomputes the Deligne subcomplex flags through the Coxeter classifier:
/// a vertex is flagged iff its clique is finite type.
pub fn mark_deligne(g: &DefiningGraph, mut ball: CubeBall) -> CubeBall {
    ball.deligne = ball
        .vertices
        .iter()
        .map(|v| is_finite_type(g, &v.clique).finite)
        .collect();
    ball
}

/// Outcome of matching the link of `A_empty` inside the ball against the
/// flag complex of the defining graph, by generator labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkBaseReport {
    pub isomorphic: bool,
    /// Flag-complex simplices with no matching cube at the base vertex.
    pub missing: Vec<Vec<String>>,
    /// Cubes at the base vertex with no matching flag-complex simplex.
    pub extra: Vec<Vec<String>>,
    pub link_simplex_count: usize,
}

/// Reconstructs the link of `A_empty` from the cubes that contain it and
/// compares it with the flag complex of the graph.
pub fn verify_link_base(g: &DefiningGraph, ball: &CubeBall) -> LinkBaseReport {
    let base = CosetVertex::base();
    let link_simplices: BTreeSet<Vec<usize>> = ball
        .cubes
        .iter()
        .filter(|c| c.base == base)
        .map(|c| c.directions.clone())
        .collect();
    let flag: BTreeSet<Vec<usize>> = crate::flag::flag_complex(g)
        .simplices()
        .iter()
        .cloned()
        .collect();
    let to_names = |s: &Vec<usize>| -> Vec<String> {
        s.iter().map(|&v| g.name(v).to_string()).collect()
    };
    let missing: Vec<Vec<String>> = flag.difference(&link_simplices).map(to_names).collect();
    let extra: Vec<Vec<String>> = link_simplices.difference(&flag).map(to_names).collect();
    LinkBaseReport {
        isomorphic: missing.is_empty() && extra.is_empty(),
        missing,
        extra,
        link_simplex_count: link_simplices.len(),
    }
}

/// The link of `A_empty` as a simplicial complex over generator labels.
pub fn link_of_base(g: &DefiningGraph, ball: &CubeBall) -> SimplicialComplex {
    let base = CosetVertex::base();
    let simplices: BTreeSet<Vec<usize>> = ball
        .cubes
        .iter()
        .filter(|c| c.base == base)
        .map(|c| c.directions.clone())
        .collect();
    SimplicialComplex::new(g.names().to_vec(), simplices)
}

// --- serialized forms --------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BallVertexJson {
    pub rep: String,
    pub clique: Vec<String>,
    pub deligne: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BallCubeJson {
    pub base: String,
    pub top: String,
    pub dimension: usize,
    pub directions: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BallJson {
    pub schema_version: u32,
    pub radius: usize,
    pub vertex_count: usize,
    pub vertices: Vec<BallVertexJson>,
    pub cubes: Vec<BallCubeJson>,
}

pub fn ball_json(g: &DefiningGraph, ball: &CubeBall) -> BallJson {
    BallJson {
        schema_version: 1,
        radius: ball.radius,
        vertex_count: ball.vertices.len(),
        vertices: ball
            .vertices
            .iter()
            .zip(&ball.deligne)
            .map(|(v, &d)| BallVertexJson {
                rep: v.rep.display(g.names()),
                clique: v.clique.names(g),
                deligne: d,
            })
            .collect(),
        cubes: ball
            .cubes
            .iter()
            .map(|c| BallCubeJson {
                base: c.base.display(g),
                top: c.top.display(g),
                dimension: c.dimension(),
                directions: c.directions.iter().map(|&s| g.name(s).to_string()).collect(),
            })
            .collect(),
    }
}

/// DOT rendering of the ball's 1-skeleton with edge labels.
pub fn ball_dot(g: &DefiningGraph, ball: &CubeBall) -> String {
    let mut out = String::from("graph cube_ball {\n  node [shape=box];\n");
    for v in &ball.vertices {
        out.push_str(&format!("  \"{}\";\n", v.display(g)));
    }
    for c in ball.cubes_of_dim(1) {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
            c.base.display(g),
            c.top.display(g),
            g.name(c.directions[0]),
        ));
    }
    out.push_str("}\n");
    out
}
