//! Structural analysis of Artin groups through their defining graphs.
//!
//! An Artin group is presented by a finite simplicial graph with integer
//! edge labels `m >= 2`: generators are the vertices, and each edge imposes
//! the braid relation of its label (an absent edge imposes none). The group
//! acts on its clique-cube complex, the CAT(0) cube complex whose vertices
//! are the cosets `g A_T` over cliques `T` of the graph. This crate works
//! with the finite, combinatorial shadow of that action:
//!
//! - [`graph`]: parse and validate defining graphs, classify them
//!   (clique / star of a vertex / join), enumerate cliques.
//! - [`coxeter`]: exact finite-type classification of clique Coxeter
//!   groups, and FC-type detection.
//! - [`flag`]: the flag complex, quarter-turn spherical link distances, and
//!   link partitions at clique vertices.
//! - [`paths`]: labeled edge paths in the cube complex with sound geodesy
//!   certificates and hyperplane crossing predicates.
//! - [`witness`]: explicit loxodromic elements and the witness package
//!   behind the acylindrical hyperbolicity criterion.
//! - [`ball`]: exact finite balls of the cube complex for right-angled
//!   graphs, with canonical coset representatives and the Deligne
//!   subcomplex marked.
//! - [`report`]: the analysis pipeline and its text/JSON reports.

pub mod ball;
pub mod coxeter;
pub mod flag;
pub mod graph;
pub mod paths;
pub mod report;
pub mod witness;
pub mod word;

pub use ball::{build_ball, canonical_coset, normal_form_raag, CosetVertex, CubeBall};
pub use coxeter::{cosine_matrix, is_fc_type, is_finite_type, CoxeterType, FinitenessVerdict};
pub use flag::{flag_complex, link_partition_at, QuarterTurns, SimplicialComplex};
pub use graph::{Classification, Clique, DefiningGraph, ParseError};
pub use paths::{certify_geodesic, hyperplane_sequence, may_cross, EdgePath, GeodesyCertificate};
pub use report::{analyze, emit, AnalysisReport, ReportFormat};
pub use witness::{acyl_witness, full_cover_word, loxodromic_word, WitnessWord};
pub use word::{Letter, Word};
