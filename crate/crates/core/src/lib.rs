//! Constructive machinery for string rewriting systems and the cellular
//! complexes they generate.
//!
//! The crate is organized bottom-up:
//!
//! - [`words`]: alphabets, free-monoid words, free-group reduction, and the
//!   length-lexicographic order.
//! - [`rewriting`]: rewriting systems, single-step reduction, Thue
//!   congruence search, critical pairs, and Knuth–Bendix completion.
//! - [`graph`], [`cells`], [`truncation`]: the derivation graph of a system,
//!   its square/loop 2-cells and 3-cells with exact integer boundary maps,
//!   and finite length-truncated slices of the whole complex.
//! - [`intmat`], [`snf`], [`homology`]: exact sparse integer linear algebra,
//!   Smith normal form, and (relative) homology with boundary witnesses.
//! - [`pride`]: group presentations, the associated monoid system on
//!   generators and formal inverses, the q/t loop cells, and a truncated
//!   asphericity probe.
//! - [`peiffer`]: Y-sequences, Peiffer operations, bounded equivalence
//!   search, and relation-module images.
//! - [`actions`]: finite monoids, tensor products over a submonoid, Isbell
//!   dominions, and universal enveloping group presentations.
//! - [`files`]: the presentation, monoid-table, Y-sequence, and cycle file
//!   formats used by the command-line front end.

pub mod actions;
pub mod cells;
pub mod chains;
pub mod files;
pub mod graph;
pub mod homology;
pub mod intmat;
pub mod peiffer;
pub mod pride;
pub mod rewriting;
pub mod snf;
pub mod truncation;
pub mod words;

pub use chains::FormalSum;
pub use graph::{Edge, Path, Sign};
pub use rewriting::{RewritingSystem, Rule, RuleId};
pub use truncation::TruncatedComplex;
pub use words::{Alphabet, Word};
