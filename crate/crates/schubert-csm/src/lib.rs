//! Exact Chern-Schwartz-MacPherson (CSM) classes of Schubert cells in
//! generalized flag manifolds G/B, for all simple Lie types.
//!
//! Classes are generated by Demazure-Lusztig-type operators T_k = d_k - s_k
//! (BGG divided difference minus the right Weyl action) applied along
//! reduced words, starting from the class of a point. The crate also
//! computes torus-equivariant classes (coefficients become integer
//! polynomials in the simple roots), push-forwards to partial flag
//! manifolds G/P, and runs positivity and operator-identity sweeps.
//!
//! # Conventions
//!
//! * Simple roots are numbered 1..=rank in the Bourbaki convention.
//! * Roots are stored in simple-root coordinates, coroots in simple-coroot
//!   coordinates, weights in fundamental-weight coordinates; every pairing
//!   is then an integer dot product.
//! * The Cartan matrix entry `a_ij` is `<alpha_j, alpha_i^vee>`.
//! * Weyl elements act on simple-root coordinates; the flattened action
//!   matrix is the element's identity.
//! * Positive roots are listed by height, then lexicographically; every
//!   "sum over positive roots" iterates in that order.
//! * Class vectors print and serialize sorted by length, then by canonical
//!   reduced word (the word from greedily stripping smallest descents).
//!
//! See `docs/conventions.md` in the repository for the full statement.

pub mod coeff;
pub mod csm;
pub mod error;
pub mod output;
pub mod rootsys;
pub mod schubop;
pub mod verify;
pub mod weyl;

pub mod cli;

pub use coeff::SparsePoly;
pub use csm::{csm_cell, csm_cell_equiv, csm_variety, pushforward_gp};
pub use error::{Error, Result};
pub use rootsys::{Coroot, LieType, Root, RootSystem, Weight};
pub use schubop::ClassVector;
pub use weyl::{
    bruhat_leq, enumerate, longest_element, parse_element, ParabolicSubset, WeylElement, Word,
};
