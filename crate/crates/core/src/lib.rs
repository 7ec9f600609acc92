//! Configuration spaces of graphs, computationally: exact word calculus in
//! free and theta-graph groups, discrete particle moves and exchange loops,
//! binary partitions of particles over essential vertices, verification of
//! the induced product-group homomorphism patterns, discretized
//! configuration-space homology over the rationals, and sequential
//! topological-complexity values and bounds assembled from those pieces.

pub mod complex;
pub mod error;
pub mod graph;
pub mod library;
pub mod moves;
pub mod partitions;
pub mod tc;
pub mod verifier;
pub mod words;

pub use complex::{
    cell_cap, certify_nonvanishing, nonvanishing_certificate, BettiVector, CubeComplex,
    NonvanishingCertificate, SparseMatrix, CELL_CAP_ENV, DEFAULT_CELL_CAP,
};
pub use error::{Error, Result};
pub use graph::{Arm, Graph, HalfEdge, StarEmbedding};
pub use moves::{
    apply, build_base_path, build_epsilon, build_phi_lambda, q_project, reverse_moves,
    DiscreteConfiguration, LoopSpec, Move, PhiLambda,
};
pub use partitions::BinaryWPartition;
pub use tc::{evaluate, explain, TCCertificates, TCQuery, TCResult, TCStatus};
pub use verifier::{
    component_word, verify_all, verify_proposition, EntryCase, MatrixEntry, VerificationReport,
    VerifySummary, DEFAULT_VERIFY_ALL_LIMIT,
};
pub use words::{FreeLetter, FreeWord, ProductWord, ThetaLetter, ThetaWord};
