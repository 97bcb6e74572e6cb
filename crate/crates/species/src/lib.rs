//! Exact-arithmetic cycle-index calculus for combinatorial species.
//!
//! The library is organized around a small tower of algebraic kernels and two
//! enumeration pipelines built on top of them:
//!
//! - [`partitions`]: integer partitions, the `z` centralizer weight, partition
//!   powers and multiset splits.
//! - [`powerseries`]: truncated univariate series over exact rationals.
//! - [`cycleindex`]: sparse truncated multisort cycle-index series in the
//!   power-sum basis, with sum/product/plethysm/derivative/pointing and the
//!   plethystic compositional inverse.
//! - [`gammaspecies`]: per-group-element families of cycle indices, their
//!   plethysm, and the Burnside quotient.
//! - [`bipartite`]: bicolored graphs, connected components, the color-swap
//!   quotient to bipartite graphs, and the block equations for nonseparable
//!   bipartite graphs.
//! - [`ktrees`]: the coding-tree recursions for unlabeled k-trees, both the
//!   one-variable generating-function path and the full two-sort cycle-index
//!   path.
//! - [`oracle`]: independent brute-force enumerators at desk scale, used to
//!   validate everything else.
//! - [`verify`]: named check suites over the above, shared by the CLI and the
//!   acceptance tests.

pub mod bipartite;
pub mod cycleindex;
pub mod error;
pub mod gammaspecies;
pub mod ktrees;
pub mod oracle;
pub mod partitions;
pub mod powerseries;
pub mod verify;

pub use error::Error;
pub use partitions::Partition;
pub use powerseries::{PowerSeries, Rational};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
