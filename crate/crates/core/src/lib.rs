//! Invariants of minimal-nilpotent Hessenberg varieties in Lie type A.
//!
//! A Hessenberg function h on {1..n} (weakly increasing, h(j) >= j) picks
//! out a subvariety of the flag variety; this crate works with the member
//! of the family attached to a minimal nilpotent matrix.  Everything about
//! it turns out to be combinatorial, and everything here is computed two
//! ways where feasible: a closed form and a brute-force enumeration that
//! the tests compare.
//!
//! What is on offer, module by module:
//!
//! * [`hess`] — Hessenberg functions, their staircase diagrams, the
//!   modified function and its corners, enumeration and sampling.
//! * [`symgroup`] / [`rootsys`] — permutations, Bruhat order, and type A
//!   root bookkeeping.
//! * [`betti`] — fixed points, Poincaré polynomials, dimension, Euler
//!   numbers.
//! * [`components`] — irreducible components via corner permutations.
//! * [`gkm`] — moment graphs, cochain validity, and kernel dimensions of
//!   the equivariant cohomology presentation.
//! * [`cohom`] — Schubert polynomials, the coinvariant algebra, and the
//!   cohomology ring presented on the fixed-point basis.
//! * [`verify`] — the per-function bundle of every formula/oracle pair.
//! * [`poly`] — the exact (BigRational) polynomial arithmetic underneath.
//!
//! The `minhess` binary exposes the same calculations as subcommands; see
//! the crate README for a tour.

pub mod error;
pub mod poly;
pub mod hess;
pub mod rootsys;
pub mod symgroup;
pub mod report;
pub mod betti;
pub mod components;
pub mod gkm;
pub mod cohom;
pub mod verify;

pub use error::{Error, Result};
pub use hess::{HessFn, ENUMERATION_GUARD};
pub use symgroup::Permutation;
