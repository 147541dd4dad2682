//! Exact computation with two-dimensional evolution algebras.
//!
//! An evolution algebra is a commutative algebra with a basis `{e1, e2}`
//! (a *natural* basis) such that `e1 * e2 = 0`; it is described completely
//! by its structure matrix `omega`, whose column `j` holds the coordinates
//! of `e_j^2`.  This crate provides, over the rationals, prime fields and
//! rational-function fields:
//!
//! * exact field and small linear algebra ([`field`], [`linalg`], [`radical`]),
//! * the algebra operations, power subspaces and ideals ([`algebra`]),
//! * the pseudo-square / square invariant ([`square`]),
//! * classification to canonical form and isomorphism testing ([`classify`]),
//! * automorphism groups and derivation spaces ([`morph`]),
//! * multilinear identities of degree 3 and 4 ([`identity`]),
//! * commutative Gröbner bases with involution ([`poly`]),
//! * truncated noncommutative Gröbner bases ([`freealg`]),
//! * associative representations and their (non)existence ([`reps`]).
//!
//! The crate is `no_std` (with `alloc`); the companion `evoalg-cli` crate
//! carries IO, JSON and DOT output.

#![cfg_attr(not(any(test, feature = "diag")), no_std)]

#[macro_use]
extern crate alloc;

pub mod algebra;
pub mod classify;
pub mod error;
pub mod field;
pub mod freealg;
pub mod identity;
pub mod limits;
pub mod linalg;
pub mod morph;
mod mpoly;
mod parse;
pub mod poly;
pub mod radical;
pub mod reps;
pub mod square;

pub use error::{Error, Result};
pub use field::{Elem, Field};
pub use linalg::Matrix;
