//! Tournament and oriented-graph tilings by transitive tournaments.
//!
//! The crate decides and certifies perfect and fractional `T_k`-tilings
//! (partitions of the vertex set into k-sets each inducing the transitive
//! tournament on k vertices), with exact-rational LP duality certificates,
//! isomorph-free exhaustive generation of small tournaments, and generators
//! for the known extremal constructions.
//!
//! Module map:
//! - [`graph`]: dense bitset oriented graphs and tournaments, the
//!   upper-triangle wire format, transitivity tests, blow-ups.
//! - [`iso`]: canonical forms and isomorphism testing (n <= 16).
//! - [`enumerate`]: isomorph-free generation and predicate searches
//!   (oriented Ramsey values, tiling thresholds, free catalogs).
//! - [`tiling`]: exact integral tilings, maximum tilings, linking sets,
//!   and validation of the bundled 12-vertex catalog.
//! - [`fractional`]: the tiling hypergraph, exact-rational `nu*`/`tau*`
//!   with primal-dual certificates, link hypergraphs, sweeps.
//! - [`constructions`]: extremal generators and closed-form bound sheets.
//! - [`reproduce`]: the end-to-end verification checklist.

pub mod constructions;
pub mod enumerate;
pub mod exec;
pub mod fractional;
pub mod graph;
pub mod iso;
pub mod rational;
pub mod reproduce;
pub mod simplex;
pub mod tiling;

pub use graph::{
    DegreeReport, GraphError, InnerPolicy, NeighborhoodSplit, OrientedGraph, Tournament, VertexSet,
};
pub use iso::{are_isomorphic, canonical_form, pairwise_distinct, CanonicalForm};
pub use rational::Rational;
