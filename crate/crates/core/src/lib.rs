//! Linear bases, normal forms and dimension series for partially commutative
//! Lie algebras.
//!
//! A commutation graph `G` on a totally ordered alphabet defines the Lie
//! algebra `L(G)` with generators the vertices and relations `(x,y) = 0` for
//! every edge `{x,y}`. This crate computes its Gröbner–Shirshov basis `S(G)`,
//! the basis of Lyndon–Shirshov words avoiding `S(G)`, normal forms for the
//! word problem, and cross-checks all of it against brute-force oracles.

pub mod error;
pub mod expr;
pub mod graph;
pub mod gsb;
pub mod lie;
pub mod oracle;
pub mod poly;
pub mod serial;
pub mod words;

pub use error::{Error, Result};
pub use graph::CommutationGraph;
pub use gsb::RelationSet;
pub use lie::{expand, ExpandStrategy};
pub use poly::{Coeff, LiePolynomial};
pub use words::{Alphabet, Letter, NWord, Order, Word};
