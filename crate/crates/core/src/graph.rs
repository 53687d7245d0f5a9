//! Labeled defining graphs: parsing, validation, classification and clique
//! enumeration.
//!
//! A defining graph is a finite simplicial graph whose vertices are generator
//! names and whose edges carry integer labels `m >= 2`. An absent edge means
//! `m = infinity` and is never stored; the parser rejects explicit infinite
//! labels so that each graph has exactly one encoding.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Programmatic construction errors.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("invalid vertex name `{0}`")]
    InvalidName(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}-{1}`")]
    DuplicateEdge(String, String),
    #[error("edge label {2} on `{0}-{1}` must be an integer >= 2")]
    LabelTooSmall(String, String, i64),
    #[error("`{0}` and `{1}` are not joined by an edge")]
    NotAClique(String, String),
}

/// A diagnostic tied to an input line.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("invalid vertex name `{0}`")]
    InvalidName(String),
    #[error("edge label `{0}` is not an integer")]
    NonIntegerLabel(String),
    #[error("edge label {0} must be at least 2")]
    LabelTooSmall(i64),
    #[error("explicit infinite label: omit the edge instead")]
    ExplicitInfinity,
    #[error("unknown endpoint `{0}`")]
    UnknownEndpoint(String),
    #[error("self-loop `{0}-{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}-{1}`")]
    DuplicateEdge(String, String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("duplicate `vertices:` statement")]
    DuplicateVertexStatement,
    #[error("malformed statement: {0}")]
    Malformed(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// JSON form of a defining graph: `{"vertices": [...], "edges": [{a, b, m}]}`.
#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<EdgeJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeJson {
    a: String,
    b: String,
    m: serde_json::Value,
}

/// A labeled simplicial graph over named generators.
///
/// Vertex order is declaration order and drives every tie-break in the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningGraph {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    adj: Vec<Vec<Option<u32>>>,
}

impl DefiningGraph {
    /// Builds a graph from named vertices and labeled edges.
    pub fn new<S: Into<String>>(
        names: Vec<S>,
        edges: Vec<(String, String, u32)>,
    ) -> Result<Self, GraphError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        let mut index = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(GraphError::InvalidName(n.clone()));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(n.clone()));
            }
        }
        let mut g = DefiningGraph {
            adj: vec![vec![None; names.len()]; names.len()],
            names,
            index,
        };
        for (a, b, m) in edges {
            let i = g
                .index_of(&a)
                .ok_or_else(|| GraphError::UnknownVertex(a.clone()))?;
            let j = g
                .index_of(&b)
                .ok_or_else(|| GraphError::UnknownVertex(b.clone()))?;
            g.insert_edge(i, j, m)?;
        }
        Ok(g)
    }

    /// Builds a graph from index pairs; handy for generated sweeps.
    pub fn from_indexed<S: Into<String>>(
        names: Vec<S>,
        edges: &[(usize, usize, u32)],
    ) -> Result<Self, GraphError> {
        let mut g = DefiningGraph::new(names, Vec::new())?;
        for &(i, j, m) in edges {
            if i >= g.names.len() || j >= g.names.len() {
                return Err(GraphError::UnknownVertex(format!("#{}", i.max(j))));
            }
            g.insert_edge(i, j, m)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, i: usize, j: usize, m: u32) -> Result<(), GraphError> {
        if i == j {
            return Err(GraphError::SelfLoop(self.names[i].clone()));
        }
        if self.adj[i][j].is_some() {
            return Err(GraphError::DuplicateEdge(
                self.names[i.min(j)].clone(),
                self.names[i.max(j)].clone(),
            ));
        }
        if m < 2 {
            return Err(GraphError::LabelTooSmall(
                self.names[i.min(j)].clone(),
                self.names[i.max(j)].clone(),
                m as i64,
            ));
        }
        self.adj[i][j] = Some(m);
        self.adj[j][i] = Some(m);
        Ok(())
    }

    /// Parses the line-oriented text format or the JSON object format.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        if text.trim_start().starts_with('{') {
            return Self::parse_json(text);
        }
        Self::parse_text(text)
    }

    fn parse_json(text: &str) -> Result<Self, ParseError> {
        let doc: GraphJson = serde_json::from_str(text).map_err(|e| ParseError {
            line: e.line().max(1),
            kind: ParseErrorKind::Json(e.to_string()),
        })?;
        let at = |kind| ParseError { line: 1, kind };
        if doc.vertices.is_empty() {
            return Err(at(ParseErrorKind::EmptyGraph));
        }
        let mut g = match DefiningGraph::new(doc.vertices, Vec::new()) {
            Ok(g) => g,
            Err(GraphError::DuplicateVertex(n)) => {
                return Err(at(ParseErrorKind::DuplicateVertex(n)))
            }
            Err(GraphError::InvalidName(n)) => return Err(at(ParseErrorKind::InvalidName(n))),
            Err(_) => return Err(at(ParseErrorKind::EmptyGraph)),
        };
        for e in doc.edges {
            let m = parse_label_json(&e.m).map_err(at)?;
            let i = g
                .index_of(&e.a)
                .ok_or_else(|| at(ParseErrorKind::UnknownEndpoint(e.a.clone())))?;
            let j = g
                .index_of(&e.b)
                .ok_or_else(|| at(ParseErrorKind::UnknownEndpoint(e.b.clone())))?;
            g.insert_edge(i, j, m).map_err(|err| at(graph_err_to_kind(err)))?;
        }
        Ok(g)
    }

    fn parse_text(text: &str) -> Result<Self, ParseError> {
        let mut graph: Option<DefiningGraph> = None;
        let mut vertices_line = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let at = |kind| ParseError { line, kind };
            let stmt = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if stmt.is_empty() {
                continue;
            }
            if let Some(rest) = stmt.strip_prefix("vertices:") {
                if graph.is_some() {
                    return Err(at(ParseErrorKind::DuplicateVertexStatement));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                if names.is_empty() {
                    return Err(at(ParseErrorKind::EmptyGraph));
                }
                match DefiningGraph::new(names, Vec::new()) {
                    Ok(g) => {
                        graph = Some(g);
                        vertices_line = Some(line);
                    }
                    Err(GraphError::DuplicateVertex(n)) => {
                        return Err(at(ParseErrorKind::DuplicateVertex(n)))
                    }
                    Err(GraphError::InvalidName(n)) => {
                        return Err(at(ParseErrorKind::InvalidName(n)))
                    }
                    Err(_) => return Err(at(ParseErrorKind::EmptyGraph)),
                }
            } else if let Some(rest) = stmt
                .strip_prefix("edges:")
                .or_else(|| stmt.strip_prefix("edge:"))
            {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| at(ParseErrorKind::Malformed("edges before vertices".into())))?;
                for token in rest.split_whitespace() {
                    let (pair, label) = token
                        .split_once(':')
                        .ok_or_else(|| at(ParseErrorKind::Malformed(token.to_string())))?;
                    let (a, b) = pair
                        .split_once('-')
                        .ok_or_else(|| at(ParseErrorKind::Malformed(token.to_string())))?;
                    let m = parse_label_text(label).map_err(at)?;
                    let i = g
                        .index_of(a)
                        .ok_or_else(|| at(ParseErrorKind::UnknownEndpoint(a.to_string())))?;
                    let j = g
                        .index_of(b)
                        .ok_or_else(|| at(ParseErrorKind::UnknownEndpoint(b.to_string())))?;
                    g.insert_edge(i, j, m).map_err(|e| at(graph_err_to_kind(e)))?;
                }
            } else {
                return Err(at(ParseErrorKind::Malformed(stmt.to_string())));
            }
        }
        graph.ok_or(ParseError {
            line: vertices_line.unwrap_or(1),
            kind: ParseErrorKind::EmptyGraph,
        })
    }

    /// Emits the canonical text encoding; `parse` round-trips it.
    pub fn emit_text(&self) -> String {
        let mut out = format!("vertices: {}\n", self.names.join(" "));
        for (i, j, m) in self.edges() {
            out.push_str(&format!("edge: {}-{}:{}\n", self.names[i], self.names[j], m));
        }
        out
    }

    /// Emits the JSON encoding; `parse` round-trips it.
    pub fn emit_json(&self) -> String {
        let doc = GraphJson {
            vertices: self.names.clone(),
            edges: self
                .edges()
                .map(|(i, j, m)| EdgeJson {
                    a: self.names[i].clone(),
                    b: self.names[j].clone(),
                    m: serde_json::Value::from(m),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("graph serialization cannot fail")
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn label(&self, i: usize, j: usize) -> Option<u32> {
        self.adj[i][j]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.adj[i][j].is_some()
    }

    /// Edges as `(i, j, m)` with `i < j`, ordered lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.names.len();
        (0..n).flat_map(move |i| {
            (i + 1..n).filter_map(move |j| self.adj[i][j].map(|m| (i, j, m)))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// Neighbors of vertex `s`, in declaration order.
    pub fn link_idx(&self, s: usize) -> Vec<usize> {
        (0..self.names.len()).filter(|&t| self.adjacent(s, t)).collect()
    }

    /// Neighbors of a named vertex.
    pub fn link(&self, name: &str) -> Result<Vec<&str>, GraphError> {
        let s = self
            .index_of(name)
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))?;
        Ok(self.link_idx(s).into_iter().map(|t| self.name(t)).collect())
    }

    /// All labels equal 2 (or no edges at all): the right-angled case.
    pub fn is_right_angled(&self) -> bool {
        self.edges().all(|(_, _, m)| m == 2)
    }

    /// The complement graph on the same vertex set, labels dropped.
    pub fn complement(&self) -> SimpleGraph {
        let n = self.names.len();
        let mut adj = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                adj[i][j] = i != j && !self.adjacent(i, j);
            }
        }
        SimpleGraph {
            names: self.names.clone(),
            adj,
        }
    }

    /// Clique / star-of-a-vertex / join classification.
    ///
    /// Join detection looks only at the underlying graph (labels ignored):
    /// the graph is a join exactly when its complement is disconnected. The
    /// reported pair is (smallest complement component, everything else),
    /// with component ties broken by least declared vertex.
    pub fn classify(&self) -> Classification {
        let n = self.names.len();
        let is_clique =
            (0..n).all(|i| (i + 1..n).all(|j| self.adjacent(i, j)));
        let star_center = (0..n).find(|&s| self.link_idx(s).len() == n - 1);
        let comp = self.complement();
        let components = comp.components();
        let join_factors = if components.len() >= 2 {
            let first = components
                .iter()
                .min_by_key(|c| (c.len(), c[0]))
                .expect("at least two components")
                .clone();
            let in_first: BTreeSet<usize> = first.iter().copied().collect();
            let rest: Vec<usize> = (0..n).filter(|v| !in_first.contains(v)).collect();
            Some((first, rest))
        } else {
            None
        };
        Classification {
            is_clique,
            star_center,
            join_factors,
        }
    }

    /// All cliques, including the empty one, in canonical order (size, then
    /// lexicographic by vertex index), with maximal cliques flagged.
    pub fn enumerate_cliques(&self) -> Vec<CliqueInfo> {
        let maximal = self.maximal_cliques();
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for m in &maximal {
            for mask in 0..(1u64 << m.len()) {
                let subset: Vec<usize> = m
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                all.insert(subset);
            }
        }
        all.insert(Vec::new());
        let maximal: BTreeSet<Vec<usize>> = maximal.into_iter().collect();
        let mut out: Vec<CliqueInfo> = all
            .into_iter()
            .map(|members| CliqueInfo {
                maximal: maximal.contains(&members),
                clique: Clique { members },
            })
            .collect();
        out.sort_by(|a, b| {
            (a.clique.len(), &a.clique.members).cmp(&(b.clique.len(), &b.clique.members))
        });
        out
    }

    /// Maximal cliques via Bron-Kerbosch with pivoting; deterministic order.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let n = self.names.len();
        let mut out = Vec::new();
        let mut r = Vec::new();
        let p: Vec<usize> = (0..n).collect();
        self.bron_kerbosch(&mut r, p, Vec::new(), &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort_by_key(|c| (c.len(), c.clone()));
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        // Pivot: vertex of P union X with most neighbors in P, least index wins.
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| {
                let deg = p.iter().filter(|&&v| self.adjacent(u, v)).count();
                (deg, usize::MAX - u)
            })
            .expect("p or x nonempty");
        let candidates: Vec<usize> = p
            .iter()
            .copied()
            .filter(|&v| !self.adjacent(pivot, v))
            .collect();
        let mut p = p;
        let mut x = x;
        for v in candidates {
            let np: Vec<usize> = p.iter().copied().filter(|&u| self.adjacent(v, u)).collect();
            let nx: Vec<usize> = x.iter().copied().filter(|&u| self.adjacent(v, u)).collect();
            r.push(v);
            self.bron_kerbosch(r, np, nx, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }

    /// Renders a set of vertex indices as `{a, b, c}`.
    pub fn set_display(&self, members: &[usize]) -> String {
        let names: Vec<&str> = members.iter().map(|&v| self.name(v)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

fn graph_err_to_kind(e: GraphError) -> ParseErrorKind {
    match e {
        GraphError::SelfLoop(n) => ParseErrorKind::SelfLoop(n),
        GraphError::DuplicateEdge(a, b) => ParseErrorKind::DuplicateEdge(a, b),
        GraphError::LabelTooSmall(_, _, m) => ParseErrorKind::LabelTooSmall(m),
        GraphError::UnknownVertex(n) => ParseErrorKind::UnknownEndpoint(n),
        GraphError::DuplicateVertex(n) => ParseErrorKind::DuplicateVertex(n),
        GraphError::InvalidName(n) => ParseErrorKind::InvalidName(n),
        _ => ParseErrorKind::Malformed(e.to_string()),
    }
}

fn parse_label_text(label: &str) -> Result<u32, ParseErrorKind> {
    let lower = label.to_ascii_lowercase();
    if matches!(lower.as_str(), "inf" | "infinity" | "oo") {
        return Err(ParseErrorKind::ExplicitInfinity);
    }
    match label.parse::<i64>() {
        Ok(m) if m >= 2 && m <= u32::MAX as i64 => Ok(m as u32),
        Ok(m) => Err(ParseErrorKind::LabelTooSmall(m)),
        Err(_) => Err(ParseErrorKind::NonIntegerLabel(label.to_string())),
    }
}

fn parse_label_json(value: &serde_json::Value) -> Result<u32, ParseErrorKind> {
    match value {
        serde_json::Value::Number(n) => match n.as_i64() {
            Some(m) if m >= 2 && m <= u32::MAX as i64 => Ok(m as u32),
            Some(m) => Err(ParseErrorKind::LabelTooSmall(m)),
            None => Err(ParseErrorKind::NonIntegerLabel(n.to_string())),
        },
        serde_json::Value::String(s) => parse_label_text(s),
        other => Err(ParseErrorKind::NonIntegerLabel(other.to_string())),
    }
}

/// An unlabeled graph; the output type of [`DefiningGraph::complement`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    names: Vec<String>,
    adj: Vec<Vec<bool>>,
}

impl SimpleGraph {
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.names.len();
        (0..n)
            .flat_map(|i| (i + 1..n).filter(move |&j| self.adj[i][j]).map(move |j| (i, j)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.names.len()).filter(|&u| self.adj[v][u]).collect()
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.names.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// Result of [`DefiningGraph::classify`], all fields by vertex index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_clique: bool,
    pub star_center: Option<usize>,
    pub join_factors: Option<(Vec<usize>, Vec<usize>)>,
}

/// A set of pairwise-joined vertices (possibly empty), canonically sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique {
    members: Vec<usize>,
}

impl Clique {
    pub fn empty() -> Self {
        Clique::default()
    }

    /// Validates pairwise adjacency against the owning graph.
    pub fn new(g: &DefiningGraph, members: &[usize]) -> Result<Self, GraphError> {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        let members: Vec<usize> = set.into_iter().collect();
        for &v in &members {
            if v >= g.vertex_count() {
                return Err(GraphError::UnknownVertex(format!("#{v}")));
            }
        }
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                if !g.adjacent(i, j) {
                    return Err(GraphError::NotAClique(
                        g.name(i).to_string(),
                        g.name(j).to_string(),
                    ));
                }
            }
        }
        Ok(Clique { members })
    }

    pub fn from_names(g: &DefiningGraph, names: &[&str]) -> Result<Self, GraphError> {
        let mut members = Vec::new();
        for n in names {
            members.push(
                g.index_of(n)
                    .ok_or_else(|| GraphError::UnknownVertex(n.to_string()))?,
            );
        }
        Clique::new(g, &members)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// This clique with `v` added (caller guarantees cliqueness).
    pub fn with(&self, v: usize) -> Clique {
        let mut members = self.members.clone();
        if let Err(pos) = members.binary_search(&v) {
            members.insert(pos, v);
        }
        Clique { members }
    }

    /// This clique with `v` removed.
    pub fn without(&self, v: usize) -> Clique {
        Clique {
            members: self.members.iter().copied().filter(|&u| u != v).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &Clique) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    pub fn display(&self, g: &DefiningGraph) -> String {
        g.set_display(&self.members)
    }

    pub fn names(&self, g: &DefiningGraph) -> Vec<String> {
        self.members.iter().map(|&v| g.name(v).to_string()).collect()
    }
}

/// A clique together with its maximality flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueInfo {
    pub clique: Clique,
    pub maximal: bool,
}
