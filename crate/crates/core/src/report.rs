//! Analysis pipeline: classify the graph, test finite type, and report which
//! of the supported structural theorems apply.
//!
//! Every verdict is one-directional. The checked theorems give sufficient
//! conditions, so a failed hypothesis reports "not decided", never "no".

use serde::{Deserialize, Serialize};

use crate::coxeter::{is_fc_type, is_finite_type, DiagramComponent};
use crate::graph::DefiningGraph;
use crate::witness::{acyl_witness, loxodromic_word, AcylWitnessJson, WitnessWordJson};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub a: String,
    pub b: String,
    pub m: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub is_clique: bool,
    pub star_center: Option<String>,
    pub join_factors: Option<(Vec<String>, Vec<String>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub members: Vec<String>,
    pub coxeter_type: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalCliqueReport {
    pub members: Vec<String>,
    pub finite: bool,
    pub components: Vec<ComponentReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FcReport {
    pub fc: bool,
    pub offending_cliques: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum CenterVerdict {
    /// The graph is not the star of a vertex.
    Yes,
    NotDecidedByPaper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum AcylVerdict {
    /// The graph is not a join and has at least two vertices.
    Yes,
    NotDecidedByPaper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "cliques")]
pub enum TorsionFreeVerdict {
    YesViaFiniteTypeCliques,
    ReducedToCliques(Vec<Vec<String>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "cliques")]
pub enum KPi1Verdict {
    AllCliquesFiniteTypeFC,
    ReducedToCliques(Vec<Vec<String>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdicts {
    pub center_trivial: CenterVerdict,
    pub acyl_hyperbolic: AcylVerdict,
    pub torsion_free: TorsionFreeVerdict,
    pub k_pi_1: KPi1Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub loxodromic: Option<WitnessWordJson>,
    pub acylindricity: Option<AcylWitnessJson>,
}

/// The full analysis output; serializes to versioned JSON with stable field
/// order and parses back to an equal value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub graph: GraphSummary,
    pub classification: ClassificationReport,
    pub fc_type: FcReport,
    pub maximal_cliques: Vec<MaximalCliqueReport>,
    pub theorems: TheoremVerdicts,
    pub witnesses: WitnessReport,
    pub notes: Vec<String>,
}

fn component_report(g: &DefiningGraph, c: &DiagramComponent) -> ComponentReport {
    ComponentReport {
        members: c.members.iter().map(|&v| g.name(v).to_string()).collect(),
        coxeter_type: c.coxeter_type.to_string(),
    }
}

/// Runs the whole pipeline on a parsed graph. Deterministic; a pure
/// function of the graph.
pub fn analyze(g: &DefiningGraph) -> AnalysisReport {
    let classification = g.classify();
    let fc = is_fc_type(g);
    let cliques = g.enumerate_cliques();
    let maximal: Vec<MaximalCliqueReport> = cliques
        .iter()
        .filter(|info| info.maximal)
        .map(|info| {
            let verdict = is_finite_type(g, &info.clique);
            MaximalCliqueReport {
                members: info.clique.names(g),
                finite: verdict.finite,
                components: verdict
                    .components
                    .iter()
                    .map(|c| component_report(g, c))
                    .collect(),
            }
        })
        .collect();
    let maximal_names: Vec<Vec<String>> = maximal.iter().map(|m| m.members.clone()).collect();

    let center_trivial = if classification.star_center.is_none() {
        CenterVerdict::Yes
    } else {
        CenterVerdict::NotDecidedByPaper
    };
    let acyl_applies = classification.join_factors.is_none() && g.vertex_count() >= 2;
    let acylindricity = if acyl_applies {
        acyl_witness(g).ok().map(|w| AcylWitnessJson::of(g, &w))
    } else {
        None
    };
    let acyl_hyperbolic = if acylindricity.is_some() {
        AcylVerdict::Yes
    } else {
        AcylVerdict::NotDecidedByPaper
    };
    let torsion_free = if fc.fc {
        TorsionFreeVerdict::YesViaFiniteTypeCliques
    } else {
        TorsionFreeVerdict::ReducedToCliques(maximal_names.clone())
    };
    let k_pi_1 = if fc.fc {
        KPi1Verdict::AllCliquesFiniteTypeFC
    } else {
        KPi1Verdict::ReducedToCliques(maximal_names)
    };

    let mut notes = vec![
        "verdicts are one-directional: a failed hypothesis yields NOT DECIDED, never NO".into(),
    ];
    if classification.star_center.is_some() {
        notes.push(
            "the graph is the star of a vertex; irreducible finite-type Artin groups are known \
             to have infinite cyclic center, but no converse is claimed here"
                .into(),
        );
    }

    AnalysisReport {
        schema_version: REPORT_SCHEMA_VERSION,
        graph: GraphSummary {
            vertices: g.names().to_vec(),
            edges: g
                .edges()
                .map(|(i, j, m)| EdgeRecord {
                    a: g.name(i).to_string(),
                    b: g.name(j).to_string(),
                    m,
                })
                .collect(),
        },
        classification: ClassificationReport {
            is_clique: classification.is_clique,
            star_center: classification.star_center.map(|s| g.name(s).to_string()),
            join_factors: classification.join_factors.map(|(a, b)| {
                (
                    a.iter().map(|&v| g.name(v).to_string()).collect(),
                    b.iter().map(|&v| g.name(v).to_string()).collect(),
                )
            }),
        },
        fc_type: FcReport {
            fc: fc.fc,
            offending_cliques: fc.offending.iter().map(|c| c.names(g)).collect(),
        },
        maximal_cliques: maximal,
        theorems: TheoremVerdicts {
            center_trivial,
            acyl_hyperbolic,
            torsion_free,
            k_pi_1,
        },
        witnesses: WitnessReport {
            loxodromic: loxodromic_word(g).ok().map(|w| WitnessWordJson::of(g, &w)),
            acylindricity,
        },
        notes,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

pub fn emit(report: &AnalysisReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => emit_json(report),
        ReportFormat::Text => emit_text(report),
    }
}

pub fn emit_json(report: &AnalysisReport) -> String {
    serde_json::to_string_pretty(report).expect("report serialization cannot fail")
}

fn set_text(names: &[String]) -> String {
    format!("{{{}}}", names.join(", "))
}

pub fn emit_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let g = &report.graph;
    out.push_str(&format!(
        "graph: {} vertices, {} edges\n",
        g.vertices.len(),
        g.edges.len()
    ));
    out.push_str(&format!("vertices: {}\n", g.vertices.join(" ")));
    if !g.edges.is_empty() {
        let edges: Vec<String> = g
            .edges
            .iter()
            .map(|e| format!("{}-{}:{}", e.a, e.b, e.m))
            .collect();
        out.push_str(&format!("edges: {}\n", edges.join(" ")));
    }
    out.push('\n');

    let c = &report.classification;
    out.push_str("classification:\n");
    out.push_str(&format!(
        "  clique: {}\n",
        if c.is_clique { "yes" } else { "no" }
    ));
    match &c.star_center {
        Some(s) => out.push_str(&format!("  star of vertex: {s}\n")),
        None => out.push_str("  star of vertex: none\n"),
    }
    match &c.join_factors {
        Some((a, b)) => out.push_str(&format!("  join: {} * {}\n", set_text(a), set_text(b))),
        None => out.push_str("  join: none\n"),
    }
    out.push('\n');

    out.push_str("finite-type analysis:\n");
    out.push_str(&format!(
        "  FC type: {}\n",
        if report.fc_type.fc { "yes" } else { "no" }
    ));
    if !report.fc_type.offending_cliques.is_empty() {
        let offenders: Vec<String> = report
            .fc_type
            .offending_cliques
            .iter()
            .map(|c| set_text(c))
            .collect();
        out.push_str(&format!("  offending cliques: {}\n", offenders.join(", ")));
    }
    for m in &report.maximal_cliques {
        let components: Vec<String> = m
            .components
            .iter()
            .map(|c| format!("{}:{}", set_text(&c.members), c.coxeter_type))
            .collect();
        out.push_str(&format!(
            "  maximal clique {}: {} [{}]\n",
            set_text(&m.members),
            if m.finite { "finite type" } else { "infinite type" },
            components.join(", ")
        ));
    }
    out.push('\n');

    out.push_str("theorem verdicts:\n");
    match report.theorems.center_trivial {
        CenterVerdict::Yes => out.push_str("  trivial center: YES (Theorem 3.3)\n"),
        CenterVerdict::NotDecidedByPaper => {
            out.push_str("  trivial center: NOT DECIDED (the graph is the star of a vertex)\n")
        }
    }
    match report.theorems.acyl_hyperbolic {
        AcylVerdict::Yes => {
            out.push_str("  acylindrically hyperbolic: YES (Theorem 4.3)\n")
        }
        AcylVerdict::NotDecidedByPaper => out.push_str(
            "  acylindrically hyperbolic: NOT DECIDED (the graph is a join or has one vertex)\n",
        ),
    }
    match &report.theorems.torsion_free {
        TorsionFreeVerdict::YesViaFiniteTypeCliques => {
            out.push_str("  torsion-free: YES via finite-type cliques (Theorem 5.1)\n")
        }
        TorsionFreeVerdict::ReducedToCliques(cliques) => {
            let list: Vec<String> = cliques.iter().map(|c| set_text(c)).collect();
            out.push_str(&format!(
                "  torsion-free: reduced to the cliques {} (Theorem 5.1)\n",
                list.join(", ")
            ));
        }
    }
    match &report.theorems.k_pi_1 {
        KPi1Verdict::AllCliquesFiniteTypeFC => {
            out.push_str("  K(pi,1) conjecture: HOLDS (all cliques finite type: FC case)\n")
        }
        KPi1Verdict::ReducedToCliques(cliques) => {
            let list: Vec<String> = cliques.iter().map(|c| set_text(c)).collect();
            out.push_str(&format!(
                "  K(pi,1) conjecture: reduced to the cliques {} (Theorem 5.2)\n",
                list.join(", ")
            ));
        }
    }
    out.push('\n');

    if report.witnesses.loxodromic.is_some() || report.witnesses.acylindricity.is_some() {
        out.push_str("witnesses:\n");
        if let Some(w) = &report.witnesses.loxodromic {
            out.push_str(&format!(
                "  loxodromic word: {} (axis certified: {})\n",
                w.letters.join(" "),
                w.summary.axis_certified
            ));
        }
        if let Some(w) = &report.witnesses.acylindricity {
            out.push_str(&format!(
                "  covering word g: {} (axis certified: {})\n",
                w.g.letters.join(" "),
                w.g.summary.axis_certified
            ));
            out.push_str(&format!(
                "  companion h = s1*g: {} (axis certified: {})\n",
                w.h_letters.join(" "),
                w.h_summary.axis_certified
            ));
            out.push_str(&format!(
                "  hyperplane pair: type {} at step {}, type {} at step {}\n",
                w.hyperplane_before_x.hyperplane_type,
                w.hyperplane_before_x.step_index,
                w.hyperplane_after_gx.hyperplane_type,
                w.hyperplane_after_gx.step_index
            ));
        }
        out.push('\n');
    }

    out.push_str("notes:\n");
    for n in &report.notes {
        out.push_str(&format!("  - {n}\n"));
    }
    out
}
