//! Executable constructions around 1-subdivisions in tournaments.
//!
//! * [`tournament`], [`aux_graph`], [`embedding`]: tournaments stored as bit
//!   rows, the `P₂` path-count statistic, auxiliary "few short paths" graphs
//!   with their balls, and a verifier for subdivision embeddings.
//! * [`generators`]: random, transitive, rotational, and blow-up tournaments.
//! * [`connector`]: internally disjoint length-2 connections for a batch of
//!   pairs (greedy plus exact matching).
//! * [`finder_hk`], [`finder_kk`]: find 1-subdivisions of transitive
//!   tournaments and of complete digraphs.
//! * [`oracle`]: exact containment decisions and exhaustive or sampled
//!   scans over tournaments of a fixed size.
//! * [`cli`]: the command-line front end.

pub mod aux_graph;
pub mod bits;
pub mod cli;
pub mod connector;
pub mod embedding;
pub mod error;
pub mod finder_hk;
pub mod finder_kk;
pub mod format;
pub mod generators;
mod matching;
pub mod oracle;
pub mod tournament;

pub use aux_graph::{ball, build_aux_graph, AuxGraph};
pub use bits::VertexSet;
pub use connector::{connect_pairs, Assignment, ConnectError};
pub use embedding::{verify_embedding, Pattern, SubdivisionEmbedding, Violation};
pub use error::{Error, Result};
pub use finder_hk::{find_hk, FindError, FinderConfig, Mode};
pub use finder_kk::find_kk;
pub use oracle::{oracle_contains, ramsey_scan, OracleAnswer, ScanMode, ScanReport};
pub use tournament::{degree_spread, p2, p2_by_paths, PartitionThirds, Tournament};
