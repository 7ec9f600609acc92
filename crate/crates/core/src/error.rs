//! Error type shared by all modules.

use thiserror::Error;

/// Errors reported by graph, word, loop, complex, and calculator operations.
///
/// `ResourceGuard` is the only variant that signals "the computation was
/// refused for size reasons" rather than a domain error; callers that map
/// errors to exit codes should treat it separately.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("vertex `{0}` is not essential (valence < 3)")]
    NotEssential(String),

    #[error("star arms at `{0}` are not disjoint ({1}); subdivide the graph first")]
    ArmsNotDisjoint(String, String),

    #[error("particle index {particle} out of range 1..={count}")]
    ParticleOutOfRange { particle: usize, count: usize },

    #[error("particle {particle} is at `{at}`, not at move source `{from}`")]
    ParticleNotAtSource {
        particle: usize,
        at: String,
        from: String,
    },

    #[error("collision: vertex `{0}` is already occupied")]
    Collision(String),

    #[error("edge `{edge}` does not join `{from}` and `{to}`")]
    EdgeNotIncident {
        edge: String,
        from: String,
        to: String,
    },

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("move sequence is not a loop: final configuration differs from the base")]
    NotALoop,

    #[error("loop precondition violated: {0}")]
    LoopPrecondition(String),

    #[error("no path between the two configurations in the discrete model (insufficient subdivision?)")]
    Unreachable,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("closed stars of `{0}` and `{1}` overlap; apply the star-separating subdivision first")]
    StarOverlap(String, String),

    #[error("projection precondition violated: {0}")]
    ProjectionPrecondition(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("insufficient subdivision for {particles} particles: {reason}")]
    InsufficientSubdivision { particles: usize, reason: String },

    #[error("resource guard: {what} ({size} exceeds cap {cap})")]
    ResourceGuard {
        what: String,
        size: usize,
        cap: usize,
    },
}

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
