//! Minimum skew rank of powers and strict powers of paths.
//!
//! The minimum skew rank of a simple graph `G` on `n` vertices is the smallest
//! rank among real skew-symmetric `n x n` matrices whose off-diagonal support
//! is exactly the edge set of `G`. For powers `P_n^r` (edge whenever a walk of
//! length at most `r` joins two vertices of the path) and strict powers
//! `P_n^(r)` (walk of length exactly `r`) this quantity has a closed form, and
//! this crate computes it three independent ways:
//!
//! * [`formula`] evaluates the closed-form values case by case,
//! * [`witness`] builds explicit skew-symmetric rational matrices with the
//!   right support whose exact rank ([`matrix::SkewMatrixQ::rank`]) attains
//!   each value,
//! * [`certificate`] derives matching structural lower bounds (triangular
//!   blocks, parity, component sums), so every value is pinned from both
//!   sides.
//!
//! [`oracle`] adds a randomized feasibility search that knows nothing about
//! the closed forms and serves as an independent cross-check on small
//! instances. [`verify`] bundles the whole sweep into reproducible check
//! suites used by the CLI and the acceptance tests.
//!
//! All arithmetic is over exact rationals: the rank of a rational matrix is
//! the same over the rationals and over the reals, so a rational witness
//! certifies a real minimum-rank upper bound with no tolerance policy.
//!
//! Vertices are numbered `1..=n` throughout, matching the usual labeling of a
//! path with pendant vertices `1` and `n`.

pub mod certificate;
pub mod formula;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod power;
pub mod verify;
pub mod witness;

pub use certificate::{
    certify, lower_bound_certificate, lower_bound_for, BlockWindow, LowerBoundCertificate,
    LowerBoundKind, RankCertificate,
};
pub use formula::{
    equality_with_symmetric_power, equality_with_symmetric_strict, mrs_is_two, mrs_path,
    mrs_path_power, mrs_path_strict, mrs_spec, CaseTag, FormulaVerdict,
};
pub use graph::{find_isomorphism, has_induced, Graph, IsoMapping};
pub use matrix::SkewMatrixQ;
pub use oracle::{oracle_ladder_value, oracle_search, OracleOutcome, DEFAULT_SEED};
pub use power::{path_power_edge, power, split_strict_even, strict_power, PowerSpec};
pub use verify::{run_check, CheckId, CheckLine, CheckReport};
pub use witness::{
    overlay, witness_multipartite, witness_partition, witness_path, witness_path_power,
    witness_path_strict, witness_spec,
};

use std::fmt;

/// Errors for operations with rejectable inputs. Internal consistency
/// failures (a witness whose rank disagrees with the closed form, an overlay
/// that cannot avoid cancellation) are bugs and panic instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A graph or matrix order of zero was requested.
    EmptyOrder,
    /// A vertex index outside `1..=n`.
    VertexOutOfRange { vertex: usize, order: usize },
    /// An edge or matrix entry with both endpoints equal.
    LoopEdge { vertex: usize },
    /// A vertex repeated in a selection that must be duplicate-free.
    DuplicateVertex { vertex: usize },
    /// An empty vertex selection or partition.
    EmptySelection,
    /// A multipartite part or partition class with no vertices.
    EmptyPart,
    /// Two graphs or matrices that must share an order do not.
    OrderMismatch { left: usize, right: usize },
    /// A partition into classes does not cover `1..=n` exactly once.
    InvalidPartition,
    /// A rank-2 multipartite witness needs at least two classes.
    SinglePart,
    /// The operation requires a connected graph.
    Disconnected,
    /// The operation requires at least this many vertices.
    TooSmall { minimum: usize },
    /// Power or strict-power parameters out of range.
    BadPowerSpec { n: usize, r: usize },
    /// The triangular-block bound only exists for `1 <= r <= n-3`.
    BlockOutOfRegime { n: usize, r: usize },
    /// Skew rank is even; odd search targets are rejected.
    OddTarget { target: usize },
    /// A search target above the matrix order is unreachable.
    TargetTooLarge { target: usize, order: usize },
    /// Overlay preconditions: the two summand patterns must cover the target.
    PatternNotCovered,
    /// Upper-triangle entry lists require `i < j`.
    NotUpperTriangle { i: usize, j: usize },
    /// Malformed JSON input.
    Json(String),
    /// Malformed rational literal in a matrix file.
    BadRational(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyOrder => write!(f, "order must be at least 1"),
            Error::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range 1..={order}")
            }
            Error::LoopEdge { vertex } => write!(f, "loop at vertex {vertex} not allowed"),
            Error::DuplicateVertex { vertex } => write!(f, "vertex {vertex} repeated"),
            Error::EmptySelection => write!(f, "selection must be nonempty"),
            Error::EmptyPart => write!(f, "every part must have at least one vertex"),
            Error::OrderMismatch { left, right } => {
                write!(f, "orders differ: {left} vs {right}")
            }
            Error::InvalidPartition => write!(f, "classes must partition 1..=n"),
            Error::SinglePart => write!(f, "need at least two classes"),
            Error::Disconnected => write!(f, "graph must be connected"),
            Error::TooSmall { minimum } => write!(f, "need at least {minimum} vertices"),
            Error::BadPowerSpec { n, r } => write!(f, "invalid power spec n={n} r={r}"),
            Error::BlockOutOfRegime { n, r } => {
                write!(f, "triangular block needs 1 <= r <= n-3, got n={n} r={r}")
            }
            Error::OddTarget { target } => {
                write!(f, "target rank {target} is odd; skew ranks are even")
            }
            Error::TargetTooLarge { target, order } => {
                write!(f, "target rank {target} exceeds order {order}")
            }
            Error::PatternNotCovered => {
                write!(f, "summand patterns do not cover the target pattern")
            }
            Error::NotUpperTriangle { i, j } => {
                write!(f, "upper-triangle entries need i < j, got ({i}, {j})")
            }
            Error::Json(msg) => write!(f, "json: {msg}"),
            Error::BadRational(s) => write!(f, "bad rational literal: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
