//! Exact-arithmetic calculus of nonsymmetric operads with multiplication.
//!
//! A nonsymmetric operad is a graded family of spaces `P_n` with partial
//! compositions `f ∘_i g` and a unit `𝟙 ∈ P_1`. An arity-2 element `π` with
//! `π ∘_1 π = π ∘_2 π` is a multiplication; on the endomorphism operad of a
//! based algebra this is exactly an associative product. From one
//! multiplication the crate derives the whole zoo of graded structures:
//!
//! * the Gerstenhaber–Voronov bracket and the Hochschild-style differential
//!   `δ_π`, including coefficients in a representation `(π^l, π^r)`;
//! * the cup product, the cup bracket, the maps `θ`, `D` and `d_λ`;
//! * the Frölicher–Nijenhuis and derived brackets, together with the
//!   semidirect-product bracket they embed into;
//! * Maurer–Cartan classification of arity-1 elements as multiplication
//!   preserving, Nijenhuis, Rota–Baxter of weight `λ`, or averaging, with
//!   the induced deformed multiplications, representations and towers;
//! * the planar-binary-tree operad `Q` carrying the averaging derived
//!   bracket `⟦ , ⟧_D`;
//! * cohomology of every induced cochain complex, over `ℚ` and with no
//!   rounding anywhere.
//!
//! Four concrete operad realizations are provided: the endomorphism operad
//! of a finite-dimensional based algebra, the colored operad whose
//! multiplications are dendriform algebras, the `α`-twisted operad whose
//! multiplications are Hom-associative algebras, and the tree operad `Q`
//! over any of the former.
//!
//! All scalars are arbitrary-precision rationals; every equality in the
//! crate is exact. The crate is `no_std` (it requires `alloc`); IO, file
//! formats and the command-line front end live in the companion `opcal`
//! binary crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod brackets;
pub mod cohomology;
pub mod dendriform;
pub mod endo;
pub mod error;
pub mod hom;
pub mod matrix;
pub mod multimap;
pub mod operad;
pub mod operators;
pub mod ops;
pub mod rational;
pub mod rng;
pub mod selftest;
pub mod tree;
pub mod treeop;

pub use error::{Error, Result};
pub use operad::{Element, Operad};
pub use rational::Rat;
