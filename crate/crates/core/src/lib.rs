//! Clique complexes of graph powers.
//!
//! Graphs and their powers, clique and independence complexes, discrete
//! Morse matchings and collapses, exact integer homology, the graph
//! families built from circular complete graphs, and validators that check
//! homotopy-type predictions for these complexes at the homology level.

pub mod checks;
pub mod cliques;
pub mod complex;
pub mod error;
pub mod families;
pub mod graph;
pub mod homology;
pub mod limits;
pub mod morse;

pub use complex::{SimplicialComplex, VertexLabelledComplex};
pub use error::{Error, Result};
pub use graph::{Distance, DistanceTable, FoldSequence, Graph};
pub use homology::{HomologyProfile, WedgePrediction};

pub use limits::Limits;
pub use morse::Matching;

/// Version stamped into every JSON document this crate emits.
pub const SCHEMA_VERSION: u32 = 1;
