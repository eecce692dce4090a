//! Catalan pairs: pairs `(S, R)` of strict order relations on a finite ground
//! set that are jointly total, disjoint after symmetrization, and satisfy
//! `S∘R ⊆ R`.
//!
//! The crate provides:
//!
//! - [`relcore`] — finite binary relation algebra (the shared vocabulary);
//! - [`pairs`] — the axioms, the recursive composition/decomposition, and
//!   exact enumeration of all pairs of a given size;
//! - [`encodings`] — bidirectional codecs between pairs and five classical
//!   Catalan families (noncrossing matchings, Dyck paths, pattern-restricted
//!   permutations, plane trees, noncrossing partitions);
//! - [`posets`] — order-theoretic analysis of the two components: similarity
//!   classes, reconstruction of `S` from `R`, forbidden-subposet detection,
//!   connectivity/lattice/distributivity classification, and the rooted-forest
//!   structure of `S`;
//! - [`general`] — relaxations of the axioms: factorial pairs, `comp(h,k)`
//!   pairs, and the reflexivity-relaxed unrestricted, Grand-Dyck and Schröder
//!   families;
//! - [`oracle`] — independent brute-force enumeration used as ground truth for
//!   everything above.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to share across threads.

pub mod encodings;
pub mod general;
pub mod oracle;
pub mod pairs;
pub mod posets;
pub mod relcore;

#[cfg(test)]
pub(crate) mod testutil;
