//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its tally once every assertion holds. Oracles (brute-force bipartition
//! search, positive-definiteness via leading principal minors, union-find
//! word enumeration) live here, independent of the library code they check.

use std::collections::BTreeMap;

use artin_cube::ball::{build_ball, verify_link_base, CosetVertex};
use artin_cube::coxeter::{cosine_matrix, is_finite_type};
use artin_cube::graph::{Clique, DefiningGraph};
use artin_cube::paths::certify_geodesic;
use artin_cube::report::{analyze, emit_json, AnalysisReport};
use artin_cube::witness::{full_cover_word, loxodromic_word, WitnessError};
use artin_cube::word::Letter;

/// All graphs on `n` fixed vertices with the given constant label, one per
/// edge-subset mask.
fn graph_from_mask(n: usize, mask: u64, label: u32) -> DefiningGraph {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j, label));
            }
            bit += 1;
        }
    }
    DefiningGraph::from_indexed(names, &edges).unwrap()
}

// --- criterion 1: classification oracle equivalence -------------------------

fn is_join_brute_force(g: &DefiningGraph) -> bool {
    let n = g.vertex_count();
    for mask in 1u64..(1 << n) - 1 {
        let a: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let b: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        if a.iter().all(|&x| b.iter().all(|&y| g.adjacent(x, y))) {
            return true;
        }
    }
    false
}

#[test]
fn acceptance_1_classification_oracle_equivalence() {
    let mut graphs = 0u64;
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0..(1u64 << pairs) {
            let g = graph_from_mask(n, mask, 2);
            let c = g.classify();

            let join_bf = is_join_brute_force(&g);
            assert_eq!(
                c.join_factors.is_some(),
                join_bf,
                "join mismatch: n={n} mask={mask}"
            );
            if let Some((a, b)) = &c.join_factors {
                assert!(!a.is_empty() && !b.is_empty());
                assert_eq!(a.len() + b.len(), n);
                assert!(a.iter().all(|&x| b.iter().all(|&y| g.adjacent(x, y))));
            }

            let star_bf = (0..n).find(|&s| (0..n).all(|t| t == s || g.adjacent(s, t)));
            assert_eq!(c.star_center, star_bf, "star mismatch: n={n} mask={mask}");

            let clique_bf = (0..n).all(|i| (i + 1..n).all(|j| g.adjacent(i, j)));
            assert_eq!(c.is_clique, clique_bf, "clique mismatch: n={n} mask={mask}");

            // A non-join on >= 2 vertices is never a star: the acylindrical
            // hyperbolicity hypothesis implies the trivial-center one.
            if c.join_factors.is_none() && n >= 2 {
                assert_eq!(c.star_center, None, "n={n} mask={mask}");
            }
            graphs += 1;
        }
    }
    println!("PASS criterion 1: classification agrees with brute force on {graphs} graphs");
}

// --- criterion 2: Coxeter finiteness vs positive definiteness ---------------

/// Leading principal minors by Gaussian elimination with partial pivoting,
/// one fresh elimination per minor.
fn leading_principal_minors(m: &[Vec<f64>]) -> Vec<f64> {
    let n = m.len();
    let mut minors = Vec::with_capacity(n);
    for k in 1..=n {
        let mut a = [[0.0f64; 5]; 5];
        for r in 0..k {
            for c in 0..k {
                a[r][c] = m[r][c];
            }
        }
        let mut det = 1.0;
        for col in 0..k {
            let mut pivot = col;
            for r in (col + 1)..k {
                if a[r][col].abs() > a[pivot][col].abs() {
                    pivot = r;
                }
            }
            if a[pivot][col] == 0.0 {
                det = 0.0;
                break;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= a[col][col];
            for r in (col + 1)..k {
                let f = a[r][col] / a[col][col];
                for c in col..k {
                    a[r][c] -= f * a[col][c];
                }
            }
        }
        minors.push(det);
    }
    minors
}

fn positive_definite_oracle(g: &DefiningGraph, t: &Clique) -> bool {
    leading_principal_minors(&cosine_matrix(g, t))
        .iter()
        .all(|&m| m > 1e-9)
}

#[test]
fn acceptance_2_coxeter_finiteness_cross_check() {
    // Pinned boundary cases first.
    let triangle = |labels: [u32; 3]| -> (DefiningGraph, Clique) {
        let g = DefiningGraph::from_indexed(
            vec!["a", "b", "c"],
            &[(0, 1, labels[0]), (0, 2, labels[1]), (1, 2, labels[2])],
        )
        .unwrap();
        let t = Clique::new(&g, &[0, 1, 2]).unwrap();
        (g, t)
    };
    for (labels, expected_finite) in [
        ([3u32, 3, 3], false),
        ([2, 3, 3], true),
        ([2, 3, 5], true),
        ([2, 3, 6], false),
    ] {
        let (g, t) = triangle(labels);
        assert_eq!(is_finite_type(&g, &t).finite, expected_finite, "{labels:?}");
        assert_eq!(positive_definite_oracle(&g, &t), expected_finite, "{labels:?}");
    }

    // Exhaustive sweep: cliques of size <= 5, labels in {2,...,6}.
    let mut checked = 0u64;
    for k in 0..=5usize {
        let names: Vec<String> = (0..k.max(1)).map(|i| format!("v{i}")).collect();
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| ((i + 1)..k).map(move |j| (i, j)))
            .collect();
        let assignments = 5u64.pow(pairs.len() as u32);
        for code in 0..assignments {
            let mut c = code;
            let mut edges = Vec::with_capacity(pairs.len());
            for &(i, j) in &pairs {
                edges.push((i, j, 2 + (c % 5) as u32));
                c /= 5;
            }
            let g = DefiningGraph::from_indexed(names.clone(), &edges).unwrap();
            let members: Vec<usize> = (0..k).collect();
            let t = Clique::new(&g, &members).unwrap();
            let exact = is_finite_type(&g, &t).finite;
            let numeric = positive_definite_oracle(&g, &t);
            assert_eq!(exact, numeric, "mismatch at k={k} code={code} edges={edges:?}");
            checked += 1;
        }
    }
    println!("PASS criterion 2: exact classification matches the PD oracle on {checked} cliques");
}

// --- criterion 3: link of the base vertex realizes the flag complex ---------

#[test]
fn acceptance_3_base_link_realizes_flag_complex() {
    let graphs: Vec<(&str, &str)> = vec![
        ("single vertex", "vertices: s\n"),
        ("single edge", "vertices: s t\nedge: s-t:2\n"),
        ("triangle", "vertices: a b c\nedge: a-b:2 b-c:2 a-c:2\n"),
        ("two isolated", "vertices: s t\n"),
        ("three isolated", "vertices: a b c\n"),
        ("paw shape", "vertices: a b c d\nedge: a-b:2 b-c:2 a-c:2 c-d:2\n"),
        ("C4", "vertices: a b c d\nedge: a-b:2 b-c:2 c-d:2 a-d:2\n"),
        ("P4", "vertices: a b c d\nedge: a-b:2 b-c:2 c-d:2\n"),
        ("claw", "vertices: a b c d\nedge: a-b:2 a-c:2 a-d:2\n"),
        ("P5", "vertices: a b c d e\nedge: a-b:2 b-c:2 c-d:2 d-e:2\n"),
        ("C5", "vertices: a b c d e\nedge: a-b:2 b-c:2 c-d:2 d-e:2 a-e:2\n"),
    ];
    assert!(graphs.len() >= 10);
    for (name, text) in &graphs {
        let g = DefiningGraph::parse(text).unwrap();
        let ball = build_ball(&g, 3).unwrap();
        let report = verify_link_base(&g, &ball);
        assert!(
            report.isomorphic,
            "{name}: missing {:?}, extra {:?}",
            report.missing, report.extra
        );
    }
    println!(
        "PASS criterion 3: base link isomorphic to the flag complex on {} right-angled graphs",
        graphs.len()
    );
}

// --- criterion 4: witness validity on all small non-join graphs -------------

#[test]
fn acceptance_4_witness_validity_exhaustive() {
    let mut witnesses = 0u64;
    for n in 2..=6usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0..(1u64 << pairs) {
            let g = graph_from_mask(n, mask, 2);
            // Loxodromic witnesses certify on every non-clique graph.
            if let Ok(w) = loxodromic_word(&g) {
                assert!(certify_geodesic(&g, &w.axis).unwrap().certified());
            }
            match full_cover_word(&g) {
                Err(WitnessError::JoinGraph) => {
                    assert!(!g.complement().is_connected());
                    continue;
                }
                Err(e) => panic!("unexpected witness error {e:?}"),
                Ok(w) => {
                    assert!(g.complement().is_connected());
                    let k = w.letters.len();
                    // Consecutive and wraparound pairs non-adjacent.
                    for idx in 0..k {
                        let (a, b) = (w.letters[idx], w.letters[(idx + 1) % k]);
                        assert_ne!(a, b, "n={n} mask={mask}");
                        assert!(!g.adjacent(a, b), "n={n} mask={mask}");
                    }
                    // Full cover.
                    for v in 0..n {
                        assert!(w.letters.contains(&v), "n={n} mask={mask}");
                    }
                    // Empty common link.
                    for v in 0..n {
                        assert!(
                            !w.letters.iter().all(|&s| g.adjacent(v, s)),
                            "n={n} mask={mask}"
                        );
                    }
                    // Axis certified.
                    let cert = certify_geodesic(&g, &w.axis).unwrap();
                    assert!(cert.certified(), "n={n} mask={mask}");
                    witnesses += 1;
                }
            }
        }
    }
    println!("PASS criterion 4: all predicates hold for {witnesses} covering witnesses");
}

// --- criterion 5: ball exactness against the union-find word oracle ---------

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Number of group elements of word length <= max_len in the right-angled
/// Artin group of `g`: enumerate all words, close under commutation moves
/// and free reduction with a union-find, and count the classes.
fn element_count_oracle(g: &DefiningGraph, max_len: usize) -> usize {
    let n = g.vertex_count();
    let letters: Vec<Letter> = (0..n)
        .flat_map(|v| [Letter::new(v, false), Letter::new(v, true)])
        .collect();
    let mut words: Vec<Vec<Letter>> = vec![vec![]];
    let mut frontier = words.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                let mut lw = w.clone();
                lw.push(l);
                next.push(lw);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let index: BTreeMap<Vec<Letter>, usize> = words
        .iter()
        .enumerate()
        .map(|(k, w)| (w.clone(), k))
        .collect();
    let mut uf = UnionFind::new(words.len());
    for (k, w) in words.iter().enumerate() {
        for i in 0..w.len().saturating_sub(1) {
            // Adjacent commuting swap.
            if w[i].gen != w[i + 1].gen && g.adjacent(w[i].gen, w[i + 1].gen) {
                let mut s = w.clone();
                s.swap(i, i + 1);
                uf.union(k, index[&s]);
            }
            // Free cancellation.
            if w[i + 1].gen == w[i].gen && w[i + 1].inv != w[i].inv {
                let mut s = w.clone();
                s.drain(i..=i + 1);
                uf.union(k, index[&s]);
            }
        }
    }
    let mut roots: Vec<usize> = (0..words.len()).map(|k| uf.find(k)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

#[test]
fn acceptance_5_raag_ball_exactness() {
    let mut checks = 0u64;
    for n in 1..=4usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0..(1u64 << pairs) {
            let g = graph_from_mask(n, mask, 2);
            for radius in 0..=3usize {
                let ball = build_ball(&g, radius).unwrap();
                let in_ball: Vec<&CosetVertex> = ball.group_element_vertices().collect();
                let expected = element_count_oracle(&g, radius);
                assert_eq!(
                    in_ball.len(),
                    expected,
                    "n={n} mask={mask} radius={radius}"
                );
                // The canonical representatives are pairwise distinct and
                // within budget, so equal counts give a bijection.
                for v in &in_ball {
                    assert!(v.rep.len() <= radius);
                }
                checks += 1;
            }
        }
    }
    println!("PASS criterion 5: ball group-element counts match the union-find oracle in {checks} cases");
}

// --- criterion 6: figure reproduction ----------------------------------------

#[test]
fn acceptance_6_figure_reproduction() {
    // Single vertex: a star around A_{s}; every s^n A_empty for |n| within
    // the budget hangs off it by an s-labeled edge, and there are no squares.
    let single = DefiningGraph::parse("vertices: s\n").unwrap();
    for radius in 1..=3usize {
        let ball = build_ball(&single, radius).unwrap();
        let a_s = CosetVertex {
            rep: artin_cube::word::Word::identity(),
            clique: Clique::new(&single, &[0]).unwrap(),
        };
        assert!(ball.contains(&a_s));
        let translates: Vec<&CosetVertex> = ball
            .group_element_vertices()
            .filter(|v| !v.rep.is_empty())
            .collect();
        // s^n for 0 < |n| <= radius.
        assert_eq!(translates.len(), 2 * radius);
        for v in translates {
            let adjacent = ball
                .cubes_of_dim(1)
                .any(|c| (&c.base == v && c.top == a_s) || (c.base == a_s && &c.top == v));
            assert!(adjacent, "translate not adjacent to A_s at radius {radius}");
        }
        assert_eq!(ball.max_dimension(), 1, "no squares over one generator");
        assert_eq!(ball.vertices.len(), 2 * radius + 2);
    }

    // Paw shape with all labels 2: the fundamental domain (identity-coset
    // vertices) of the radius-3 ball is exactly the ten cosets A_T.
    let paw_ra =
        DefiningGraph::parse("vertices: a b c d\nedge: a-b:2 b-c:2 a-c:2 c-d:2\n").unwrap();
    let ball = build_ball(&paw_ra, 3).unwrap();
    let domain: Vec<Vec<usize>> = ball
        .vertices
        .iter()
        .filter(|v| v.rep.is_empty())
        .map(|v| v.clique.members().to_vec())
        .collect();
    let expected: Vec<Vec<usize>> = vec![
        vec![],
        vec![0],
        vec![1],
        vec![2],
        vec![3],
        vec![0, 1],
        vec![0, 2],
        vec![1, 2],
        vec![2, 3],
        vec![0, 1, 2],
    ];
    let mut domain_sorted = domain.clone();
    domain_sorted.sort_by_key(|c| (c.len(), c.clone()));
    assert_eq!(domain_sorted, expected);
    println!("PASS criterion 6: figure-level structures reproduced (star of translates; 10-coset fundamental domain)");
}

// --- criterion 7: golden report regression -----------------------------------

#[test]
fn acceptance_7_report_regression_suite() {
    let cases: Vec<(&str, &str, &str)> = vec![
        ("single vertex", "vertices: s\n", include_str!("golden/single_vertex.json")),
        ("single edge", "vertices: s t\nedge: s-t:3\n", include_str!("golden/single_edge.json")),
        (
            "triangle",
            "vertices: a b c\nedge: a-b:3 b-c:3 a-c:3\n",
            include_str!("golden/triangle.json"),
        ),
        (
            "P4",
            "vertices: a b c d\nedge: a-b:3 b-c:3 c-d:3\n",
            include_str!("golden/p4.json"),
        ),
        (
            "C4",
            "vertices: a b c d\nedge: a-b:2 b-c:2 c-d:2 a-d:2\n",
            include_str!("golden/c4.json"),
        ),
        (
            "paw",
            "vertices: a b c d\nedge: a-b:3 b-c:3 a-c:3 c-d:2\n",
            include_str!("golden/paw.json"),
        ),
    ];
    for (name, text, golden) in &cases {
        let g = DefiningGraph::parse(text).unwrap();
        let report = analyze(&g);
        let expected: AnalysisReport =
            serde_json::from_str(golden).unwrap_or_else(|e| panic!("golden {name}: {e}"));
        assert_eq!(report, expected, "report regression for {name}");
        // And the JSON form itself round-trips.
        let back: AnalysisReport = serde_json::from_str(&emit_json(&report)).unwrap();
        assert_eq!(back, report);
    }
    println!("PASS criterion 7: analysis reports match the committed goldens for {} graphs", cases.len());
}
