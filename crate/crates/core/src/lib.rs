//! Quasi-orderings on concrete unital rings.
//!
//! A quasi-ordering is a total preorder on a ring compatible with addition and
//! multiplication in the sense of the axioms QR1-QR4; ring orderings and
//! valuations are exactly its two kinds. This crate provides exact arithmetic
//! on the integers, `Q[X]` and `Q[X,Y]`, a catalog of closed-form
//! quasi-orderings, exhaustive axiom checks over finite element universes, the
//! coarsening relation with its posets and trees, and structure predicates
//! (special, Manis, dependency, Kaplansky properties).

pub mod ring;
pub mod qo;
pub mod verify;
pub mod poset;
pub mod structure;
