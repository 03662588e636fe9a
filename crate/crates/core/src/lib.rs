//! Exact computations with Rota-Baxter Lie algebras, factorizable Lie
//! bialgebras, matched pairs and Manin triples, plus a floating-point
//! realization of Rota-Baxter operators on matrix groups.
//!
//! All algebraic objects live over the rationals and are described by
//! structure constants in a fixed basis. Linear maps are matrices acting on
//! coordinate columns. The dual space `g*` always carries the dual basis of
//! the chosen basis of `g`, so a map `g* -> g` is a plain square matrix.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(rustdoc::broken_intra_doc_links)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bialgebra;
pub mod catalog;
pub mod error;
pub mod group;
pub mod manin;
pub mod matched;
pub mod matrix;
pub mod realify;
pub mod report;
pub mod rota_baxter;
pub mod scalar;

pub use algebra::{BilinearForm, LieAlgebra, Representation, StructureConstants};
pub use bialgebra::{LieBialgebra, RMatrix, RbLieBialgebra};
pub use error::{Error, Result};
pub use manin::{ManinTriple, RbManinTriple};
pub use matched::{MatchedPair, RbMatchedPair};
pub use matrix::{LinearMap, Matrix};
pub use report::{CheckReport, Residual, Witness};
pub use rota_baxter::{QuadraticRotaBaxter, RbRepresentation, RotaBaxter};
pub use scalar::Scalar;
