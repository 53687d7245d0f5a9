//! Finite-type detection for the Coxeter groups of cliques.
//!
//! A clique `T` of the defining graph gives a Coxeter system on `T` with the
//! clique's edge labels. The group is finite exactly when every connected
//! component of its Coxeter diagram (edges labeled 2 are omitted, per the
//! usual diagram convention) matches an entry of the finite catalog:
//! `A_n`, `B_n` (n >= 2), `D_n` (n >= 4), `E6`, `E7`, `E8`, `F4`, `H3`,
//! `H4`, `I2(m)`.
//!
//! The trusted decision procedure is this exact shape-and-label match; no
//! floating point is involved. The cosine-matrix oracle below exists so test
//! code can cross-check the catalog against positive definiteness.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{Clique, DefiningGraph};

/// Tags for irreducible finite Coxeter components, plus `Infinite`.
///
/// Low-rank coincidences are resolved by a fixed priority: a single edge
/// labeled 3 is `A2`, labeled 4 is `B2`, and only labels >= 5 produce
/// `I2(m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
    Infinite,
}

impl CoxeterType {
    pub fn is_finite(self) -> bool {
        self != CoxeterType::Infinite
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E6 => write!(f, "E6"),
            CoxeterType::E7 => write!(f, "E7"),
            CoxeterType::E8 => write!(f, "E8"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
            CoxeterType::Infinite => write!(f, "INFINITE"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_rank = |rest: &str| rest.parse::<usize>().map_err(|e| e.to_string());
        match s {
            "E6" => return Ok(CoxeterType::E6),
            "E7" => return Ok(CoxeterType::E7),
            "E8" => return Ok(CoxeterType::E8),
            "F4" => return Ok(CoxeterType::F4),
            "H3" => return Ok(CoxeterType::H3),
            "H4" => return Ok(CoxeterType::H4),
            "INFINITE" => return Ok(CoxeterType::Infinite),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            return rest
                .parse::<u32>()
                .map(CoxeterType::I2)
                .map_err(|e| e.to_string());
        }
        if let Some(rest) = s.strip_prefix('A') {
            return parse_rank(rest).map(CoxeterType::A);
        }
        if let Some(rest) = s.strip_prefix('B') {
            return parse_rank(rest).map(CoxeterType::B);
        }
        if let Some(rest) = s.strip_prefix('D') {
            return parse_rank(rest).map(CoxeterType::D);
        }
        Err(format!("unknown Coxeter type tag `{s}`"))
    }
}

impl Serialize for CoxeterType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CoxeterType {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The Coxeter diagram of a clique: its members, with only the edges whose
/// label is at least 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterDiagram {
    members: Vec<usize>,
    edges: Vec<(usize, usize, u32)>,
}

impl CoxeterDiagram {
    pub fn of_clique(g: &DefiningGraph, t: &Clique) -> Self {
        let members = t.members().to_vec();
        let mut edges = Vec::new();
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                let m = g.label(i, j).expect("clique members are pairwise joined");
                if m >= 3 {
                    edges.push((i, j, m));
                }
            }
        }
        CoxeterDiagram { members, edges }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    fn neighbors(&self, v: usize) -> Vec<(usize, u32)> {
        self.edges
            .iter()
            .filter_map(|&(a, b, m)| {
                if a == v {
                    Some((b, m))
                } else if b == v {
                    Some((a, m))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Connected components, ordered by least member.
    fn components(&self) -> Vec<CoxeterDiagram> {
        let mut remaining: Vec<usize> = self.members.clone();
        let mut out = Vec::new();
        while let Some(&start) = remaining.first() {
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for (u, _) in self.neighbors(v) {
                    if !comp.contains(&u) {
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            remaining.retain(|v| !comp.contains(v));
            let edges = self
                .edges
                .iter()
                .copied()
                .filter(|&(a, _, _)| comp.contains(&a))
                .collect();
            out.push(CoxeterDiagram {
                members: comp,
                edges,
            });
        }
        out
    }

    /// Matches one connected diagram against the finite catalog.
    fn classify_component(&self) -> CoxeterType {
        let n = self.members.len();
        if n == 1 {
            return CoxeterType::A(1);
        }
        if self.edges.len() != n - 1 {
            // A connected diagram with extra edges contains a cycle.
            return CoxeterType::Infinite;
        }
        let degrees: Vec<usize> = self
            .members
            .iter()
            .map(|&v| self.neighbors(v).len())
            .collect();
        if degrees.iter().any(|&d| d >= 4) {
            return CoxeterType::Infinite;
        }
        let branches: Vec<usize> = self
            .members
            .iter()
            .copied()
            .filter(|&v| self.neighbors(v).len() == 3)
            .collect();
        match branches.len() {
            0 => self.classify_path(),
            1 => self.classify_fork(branches[0]),
            _ => CoxeterType::Infinite,
        }
    }

    /// A tree with exactly one degree-3 vertex: D_n or E6/E7/E8.
    fn classify_fork(&self, branch: usize) -> CoxeterType {
        if self.edges.iter().any(|&(_, _, m)| m != 3) {
            return CoxeterType::Infinite;
        }
        let mut legs = Vec::new();
        for (first, _) in self.neighbors(branch) {
            let mut len = 1;
            let mut prev = branch;
            let mut cur = first;
            loop {
                let next: Vec<usize> = self
                    .neighbors(cur)
                    .into_iter()
                    .map(|(u, _)| u)
                    .filter(|&u| u != prev)
                    .collect();
                match next.as_slice() {
                    [] => break,
                    [u] => {
                        prev = cur;
                        cur = *u;
                        len += 1;
                    }
                    _ => unreachable!("only one branch vertex"),
                }
            }
            legs.push(len);
        }
        legs.sort_unstable();
        match legs.as_slice() {
            [1, 1, k] => CoxeterType::D(k + 3),
            [1, 2, 2] => CoxeterType::E6,
            [1, 2, 3] => CoxeterType::E7,
            [1, 2, 4] => CoxeterType::E8,
            _ => CoxeterType::Infinite,
        }
    }

    /// A path: read off the label sequence and match it.
    fn classify_path(&self) -> CoxeterType {
        let n = self.members.len();
        let start = self
            .members
            .iter()
            .copied()
            .find(|&v| self.neighbors(v).len() == 1)
            .expect("a tree path has endpoints");
        let mut labels = Vec::new();
        let mut prev = None;
        let mut cur = start;
        while labels.len() < n - 1 {
            let (next, m) = self
                .neighbors(cur)
                .into_iter()
                .find(|&(u, _)| Some(u) != prev)
                .expect("path continues");
            labels.push(m);
            prev = Some(cur);
            cur = next;
        }
        if labels.iter().all(|&m| m == 3) {
            return CoxeterType::A(n);
        }
        if n == 2 {
            let m = labels[0];
            return if m == 4 {
                CoxeterType::B(2)
            } else {
                CoxeterType::I2(m)
            };
        }
        let non3: Vec<(usize, u32)> = labels
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, m)| m != 3)
            .collect();
        if non3.len() != 1 {
            return CoxeterType::Infinite;
        }
        let (pos, m) = non3[0];
        let at_end = pos == 0 || pos == n - 2;
        match (m, at_end, n) {
            (4, true, _) => CoxeterType::B(n),
            (4, false, 4) => CoxeterType::F4,
            (5, true, 3) => CoxeterType::H3,
            (5, true, 4) => CoxeterType::H4,
            _ => CoxeterType::Infinite,
        }
    }
}

/// One irreducible component of a clique's Coxeter diagram with its tag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramComponent {
    pub members: Vec<usize>,
    pub coxeter_type: CoxeterType,
}

/// Verdict of [`is_finite_type`]: finite iff no component is `INFINITE`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitenessVerdict {
    pub finite: bool,
    pub components: Vec<DiagramComponent>,
}

/// Decides whether the Coxeter group of clique `t` is finite, by exact
/// classification of each diagram component.
pub fn is_finite_type(g: &DefiningGraph, t: &Clique) -> FinitenessVerdict {
    let diagram = CoxeterDiagram::of_clique(g, t);
    let components: Vec<DiagramComponent> = diagram
        .components()
        .into_iter()
        .map(|c| DiagramComponent {
            coxeter_type: c.classify_component(),
            members: c.members,
        })
        .collect();
    FinitenessVerdict {
        finite: components.iter().all(|c| c.coxeter_type.is_finite()),
        components,
    }
}

/// The cosine matrix of a clique: `B_ii = 1`, `B_ij = -cos(pi / m_ij)`.
///
/// This is the numeric side of the finiteness story (the group is finite
/// iff this matrix is positive definite); the trusted classifier never
/// consults it, test oracles do.
pub fn cosine_matrix(g: &DefiningGraph, t: &Clique) -> Vec<Vec<f64>> {
    let members = t.members();
    let k = members.len();
    let mut b = vec![vec![0.0; k]; k];
    for (r, &i) in members.iter().enumerate() {
        for (c, &j) in members.iter().enumerate() {
            b[r][c] = if r == c {
                1.0
            } else {
                let m = g.label(i, j).expect("clique members are pairwise joined");
                -(std::f64::consts::PI / m as f64).cos()
            };
        }
    }
    b
}

/// FC-type verdict: every clique of the graph generates a finite Coxeter
/// group. `offending` lists the cliques that fail, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FcVerdict {
    pub fc: bool,
    pub offending: Vec<Clique>,
}

pub fn is_fc_type(g: &DefiningGraph) -> FcVerdict {
    let offending: Vec<Clique> = g
        .enumerate_cliques()
        .into_iter()
        .filter(|info| !is_finite_type(g, &info.clique).finite)
        .map(|info| info.clique)
        .collect();
    FcVerdict {
        fc: offending.is_empty(),
        offending,
    }
}


#[cfg(test)]
mod prop_tests {
    use super::*;
    use crate::graph::{Clique, DefiningGraph};
    use proptest::prelude::*;

    proptest! {
        /// Verdicts do not depend on how the generators are named or ordered.
        #[test]
        fn invariant_under_relabeling(
            labels in proptest::collection::vec(2u32..=6, 10),
            perm_seed in 0usize..24,
        ) {
            let names = vec!["a", "b", "c", "d", "e"];
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..5usize {
                for j in (i + 1)..5 {
                    edges.push((i, j, labels[k]));
                    k += 1;
                }
            }
            let g = DefiningGraph::from_indexed(names.clone(), &edges).unwrap();
            let t = Clique::new(&g, &[0, 1, 2, 3, 4]).unwrap();
            let base = is_finite_type(&g, &t);

            // Apply a permutation of the first four vertices.
            let mut perm = [0usize, 1, 2, 3];
            let mut seed = perm_seed;
            for i in (1..4).rev() {
                perm.swap(i, seed % (i + 1));
                seed /= i + 1;
            }
            let full_perm = [perm[0], perm[1], perm[2], perm[3], 4];
            let mapped: Vec<(usize, usize, u32)> = edges
                .iter()
                .map(|&(i, j, m)| (full_perm[i], full_perm[j], m))
                .collect();
            let g2 = DefiningGraph::from_indexed(names, &mapped).unwrap();
            let t2 = Clique::new(&g2, &[0, 1, 2, 3, 4]).unwrap();
            let relabeled = is_finite_type(&g2, &t2);

            prop_assert_eq!(base.finite, relabeled.finite);
            let mut tags_a: Vec<CoxeterType> =
                base.components.iter().map(|c| c.coxeter_type).collect();
            let mut tags_b: Vec<CoxeterType> =
                relabeled.components.iter().map(|c| c.coxeter_type).collect();
            tags_a.sort_unstable();
            tags_b.sort_unstable();
            prop_assert_eq!(tags_a, tags_b);
        }
    }
}
