//! Flag complexes and the piecewise-spherical link metric.
//!
//! The flag complex of a defining graph has the graph as 1-skeleton and a
//! simplex for every nonempty clique. With every edge given length pi/2,
//! vertex distances are exact quarter-turn multiples of the graph distance,
//! so distances are stored as integer quarter-turn counts and never as
//! floats.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::graph::{Clique, DefiningGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlagError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("the empty clique has no link partition")]
    EmptyClique,
}

/// A finite simplicial complex over labeled vertices, stored as the
/// downward-closed set of nonempty simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    names: Vec<String>,
    simplices: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn new(names: Vec<String>, simplices: BTreeSet<Vec<usize>>) -> Self {
        SimplicialComplex { names, simplices }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// All simplices (sorted vertex lists), smallest first.
    pub fn simplices(&self) -> &BTreeSet<Vec<usize>> {
        &self.simplices
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.simplices.contains(simplex)
    }

    /// Number of simplices per dimension (index 0 = vertices).
    pub fn counts_by_dim(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for s in &self.simplices {
            let d = s.len() - 1;
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        counts
    }

    pub fn vertex_indices(&self) -> Vec<usize> {
        self.simplices
            .iter()
            .filter(|s| s.len() == 1)
            .map(|s| s[0])
            .collect()
    }

    pub fn has_edge(&self, v: usize, w: usize) -> bool {
        let mut e = vec![v, w];
        e.sort_unstable();
        self.simplices.contains(&e)
    }

    /// Every subset of a simplex is a simplex.
    pub fn is_downward_closed(&self) -> bool {
        self.simplices.iter().all(|s| {
            (0..s.len()).all(|k| {
                let mut face = s.clone();
                face.remove(k);
                face.is_empty() || self.simplices.contains(&face)
            })
        })
    }

    /// Every pairwise-joined vertex set spans a simplex.
    pub fn is_flag(&self) -> bool {
        let verts = self.vertex_indices();
        let n = verts.len();
        // Desk scale: enumerate vertex subsets directly.
        for mask in 1u64..(1 << n) {
            let set: Vec<usize> = (0..n)
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| verts[k])
                .collect();
            let pairwise = set
                .iter()
                .enumerate()
                .all(|(k, &v)| set[k + 1..].iter().all(|&w| self.has_edge(v, w)));
            if pairwise && !self.simplices.contains(&set) {
                return false;
            }
        }
        true
    }

    fn bfs_distances(&self, from: usize) -> Vec<Option<usize>> {
        let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); self.names.len()];
        for s in &self.simplices {
            if let [v, w] = s.as_slice() {
                neighbors[*v].push(*w);
                neighbors[*w].push(*v);
            }
        }
        let mut dist = vec![None; self.names.len()];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].expect("queued vertices have distances");
            for &s in &neighbors[v] {
                if dist[s].is_none() {
                    dist[s] = Some(d + 1);
                    queue.push_back(s);
                }
            }
        }
        dist
    }
}

/// The flag complex of the defining graph: one simplex per nonempty clique.
pub fn flag_complex(g: &DefiningGraph) -> SimplicialComplex {
    let simplices: BTreeSet<Vec<usize>> = g
        .enumerate_cliques()
        .into_iter()
        .filter(|info| !info.clique.is_empty())
        .map(|info| info.clique.members().to_vec())
        .collect();
    SimplicialComplex {
        names: g.names().to_vec(),
        simplices,
    }
}

/// An exact multiple of pi/2, or infinity for disconnected pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum QuarterTurns {
    Finite(usize),
    Infinite,
}

impl QuarterTurns {
    pub fn radians(self) -> f64 {
        match self {
            QuarterTurns::Finite(k) => k as f64 * std::f64::consts::FRAC_PI_2,
            QuarterTurns::Infinite => f64::INFINITY,
        }
    }
}

impl fmt::Display for QuarterTurns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuarterTurns::Finite(0) => write!(f, "0"),
            QuarterTurns::Finite(1) => write!(f, "pi/2"),
            QuarterTurns::Finite(2) => write!(f, "pi"),
            QuarterTurns::Finite(k) => write!(f, "{k}*pi/2"),
            QuarterTurns::Infinite => write!(f, "infinity"),
        }
    }
}

/// The complex together with the edge-length-pi/2 spherical metric.
pub struct SphericalMetricView<'a> {
    complex: &'a SimplicialComplex,
}

impl<'a> SphericalMetricView<'a> {
    pub fn new(complex: &'a SimplicialComplex) -> Self {
        SphericalMetricView { complex }
    }

    /// Distance between two vertices: pi/2 times the 1-skeleton distance.
    pub fn vertex_distance(&self, v: &str, w: &str) -> Result<QuarterTurns, FlagError> {
        let find = |name: &str| {
            self.complex
                .names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| FlagError::UnknownVertex(name.to_string()))
        };
        Ok(self.vertex_distance_idx(find(v)?, find(w)?))
    }

    pub fn vertex_distance_idx(&self, v: usize, w: usize) -> QuarterTurns {
        self.distances_from(v)[w]
    }

    /// One BFS row: distances from `v` to every vertex.
    pub fn distances_from(&self, v: usize) -> Vec<QuarterTurns> {
        self.complex
            .bfs_distances(v)
            .into_iter()
            .map(|d| match d {
                Some(d) => QuarterTurns::Finite(d),
                None => QuarterTurns::Infinite,
            })
            .collect()
    }

    /// Lower bound for the distance between points of two simplices:
    /// pi/2 times the minimum pairwise 1-skeleton distance.
    pub fn simplex_separation_lower_bound(&self, t1: &[usize], t2: &[usize]) -> QuarterTurns {
        let mut best = QuarterTurns::Infinite;
        for &v in t1 {
            let dist = self.complex.bfs_distances(v);
            for &w in t2 {
                if let Some(d) = dist[w] {
                    let qt = QuarterTurns::Finite(d);
                    if qt < best {
                        best = qt;
                    }
                }
            }
        }
        best
    }
}

/// One family in the link partition at a vertex `A_T`: the link vertices of
/// the form `g A_{T minus {s}}`, hung off a fixed generator `s` of `T`.
///
/// Two vertices of the same family never span a cube, and each family is
/// infinite: the cosets `s^n A_{T minus {s}}` are pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkFamily {
    pub generator: usize,
    pub residue: Clique,
}

/// Symbolic description of the link partition at `A_T` for a nonempty
/// clique `T`: one family per generator, in declaration order. Families are
/// infinite, so they are described rather than enumerated; finite pieces of
/// links are materialized by the ball builder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkPartition {
    pub at: Clique,
    pub families: Vec<LinkFamily>,
}

pub fn link_partition_at(_g: &DefiningGraph, t: &Clique) -> Result<LinkPartition, FlagError> {
    if t.is_empty() {
        return Err(FlagError::EmptyClique);
    }
    let families = t
        .members()
        .iter()
        .map(|&s| LinkFamily {
            generator: s,
            residue: t.without(s),
        })
        .collect();
    Ok(LinkPartition {
        at: t.clone(),
        families,
    })
}

/// DOT rendering of the flag complex 1-skeleton. Triangles (2-simplices)
/// are listed in a trailing comment block since DOT has no native face
/// shading.
pub fn flag_complex_dot(g: &DefiningGraph) -> String {
    let complex = flag_complex(g);
    let mut out = String::from("graph flag_complex {\n  node [shape=circle];\n");
    for name in g.names() {
        out.push_str(&format!("  \"{name}\";\n"));
    }
    for (i, j, _) in g.edges() {
        out.push_str(&format!("  \"{}\" -- \"{}\";\n", g.name(i), g.name(j)));
    }
    let triangles: Vec<&Vec<usize>> = complex
        .simplices()
        .iter()
        .filter(|s| s.len() == 3)
        .collect();
    if !triangles.is_empty() {
        out.push_str("  // shaded 2-simplices:\n");
        for t in triangles {
            let names: Vec<&str> = t.iter().map(|&v| g.name(v)).collect();
            out.push_str(&format!("  // triangle {}\n", names.join(" ")));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> DefiningGraph {
        DefiningGraph::parse("vertices: a b c d\nedge: a-b:3 b-c:3 a-c:3 c-d:2\n").unwrap()
    }

    #[test]
    fn flag_complex_of_paw() {
        let c = flag_complex(&paw());
        assert_eq!(c.counts_by_dim(), vec![4, 4, 1]);
        assert!(c.contains(&[0, 1, 2]));
        assert!(c.is_downward_closed());
        assert!(c.is_flag());
    }

    #[test]
    fn flag_complex_of_single_vertex_and_c4() {
        let single = DefiningGraph::parse("vertices: s\n").unwrap();
        assert_eq!(flag_complex(&single).counts_by_dim(), vec![1]);

        let c4 =
            DefiningGraph::parse("vertices: a b c d\nedge: a-b:2 b-c:2 c-d:2 a-d:2\n").unwrap();
        let complex = flag_complex(&c4);
        assert_eq!(complex.counts_by_dim(), vec![4, 4]);
        assert!(complex.is_flag());
    }

    #[test]
    fn one_skeleton_matches_graph_and_simplices_match_cliques() {
        let g = paw();
        let c = flag_complex(&g);
        for i in 0..4 {
            for j in (i + 1)..4 {
                assert_eq!(c.has_edge(i, j), g.adjacent(i, j));
            }
        }
        let nonempty_cliques = g.enumerate_cliques().len() - 1;
        assert_eq!(c.simplices().len(), nonempty_cliques);
    }

    #[test]
    fn vertex_distances() {
        let g = paw();
        let c = flag_complex(&g);
        let metric = SphericalMetricView::new(&c);
        assert_eq!(metric.vertex_distance("a", "a").unwrap(), QuarterTurns::Finite(0));
        assert_eq!(metric.vertex_distance("a", "b").unwrap(), QuarterTurns::Finite(1));
        // a-c-d is the shortest route: distance pi.
        assert_eq!(metric.vertex_distance("a", "d").unwrap(), QuarterTurns::Finite(2));
        assert!(metric.vertex_distance("a", "z").is_err());

        let split = DefiningGraph::parse("vertices: s t\n").unwrap();
        let c = flag_complex(&split);
        let metric = SphericalMetricView::new(&c);
        assert_eq!(metric.vertex_distance("s", "t").unwrap(), QuarterTurns::Infinite);
    }

    #[test]
    fn simplex_separation_examples() {
        let g = paw();
        let c = flag_complex(&g);
        let metric = SphericalMetricView::new(&c);
        // Overlapping simplices: bound 0.
        assert_eq!(
            metric.simplex_separation_lower_bound(&[0, 1], &[1, 2]),
            QuarterTurns::Finite(0)
        );
        // {a,b} vs {d}: min of d(a,d)=2, d(b,d)=2 gives pi.
        assert_eq!(
            metric.simplex_separation_lower_bound(&[0, 1], &[3]),
            QuarterTurns::Finite(2)
        );

        let split = DefiningGraph::parse("vertices: s t\n").unwrap();
        let c = flag_complex(&split);
        let metric = SphericalMetricView::new(&c);
        assert_eq!(
            metric.simplex_separation_lower_bound(&[0], &[1]),
            QuarterTurns::Infinite
        );
    }

    /// Exhaustive up to 6 vertices: symmetry and the triangle inequality.
    #[test]
    fn spherical_distance_is_a_metric() {
        for n in 1..=6usize {
            let pairs = n * (n - 1) / 2;
            for mask in 0..(1u32 << pairs) {
                let mut edges = Vec::new();
                let mut bit = 0;
                for i in 0..n {
                    for j in (i + 1)..n {
                        if mask >> bit & 1 == 1 {
                            edges.push((i, j, 2u32));
                        }
                        bit += 1;
                    }
                }
                let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
                let g = DefiningGraph::from_indexed(names, &edges).unwrap();
                let c = flag_complex(&g);
                let metric = SphericalMetricView::new(&c);
                let rows: Vec<Vec<QuarterTurns>> =
                    (0..n).map(|v| metric.distances_from(v)).collect();
                for v in 0..n {
                    for w in 0..n {
                        assert_eq!(rows[v][w], rows[w][v]);
                        for u in 0..n {
                            if let (QuarterTurns::Finite(a), QuarterTurns::Finite(b)) =
                                (rows[v][u], rows[u][w])
                            {
                                match rows[v][w] {
                                    QuarterTurns::Finite(d) => assert!(d <= a + b),
                                    QuarterTurns::Infinite => {
                                        panic!("finite legs with infinite total")
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn link_partition_families() {
        let g = paw();
        let pair = Clique::from_names(&g, &["a", "b"]).unwrap();
        let p = link_partition_at(&g, &pair).unwrap();
        assert_eq!(p.families.len(), 2);
        assert_eq!(p.families[0].generator, 0);
        assert_eq!(p.families[0].residue.members(), &[1]);
        assert_eq!(p.families[1].generator, 1);
        assert_eq!(p.families[1].residue.members(), &[0]);

        let single = Clique::from_names(&g, &["d"]).unwrap();
        assert_eq!(link_partition_at(&g, &single).unwrap().families.len(), 1);

        let triangle = Clique::from_names(&g, &["a", "b", "c"]).unwrap();
        assert_eq!(link_partition_at(&g, &triangle).unwrap().families.len(), 3);

        assert_eq!(
            link_partition_at(&g, &Clique::empty()),
            Err(FlagError::EmptyClique)
        );
    }

    #[test]
    fn dot_output_lists_triangles() {
        let dot = flag_complex_dot(&paw());
        assert!(dot.starts_with("graph flag_complex {"));
        assert!(dot.contains("\"a\" -- \"b\";"));
        assert!(dot.contains("// triangle a b c"));
    }
}
