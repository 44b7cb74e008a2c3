//! Exact linear algebra over residue rings `R / mR` of Euclidean domains.
//!
//! - [`euclid`]: the [`EuclideanDomain`](euclid::EuclideanDomain) trait,
//!   arbitrary-precision integers and polynomials over `F_p`.
//! - [`residue`]: residues, unit decompositions and annihilators.
//! - [`linsolve`]: generating solutions of `a x = b`.
//! - [`matrix`]: matrices over `R_m`, divisor chains and Smith normal form.
//! - [`zelisko`]: membership, witnesses, oracle and sampler for `G_Phi`.
//! - [`symdet`]: symbolic determinant identities.
//! - [`format`]: JSON encodings.
//! - [`verify`]: the verification batteries.
//!
//! ```
//! use zelisko::euclid::Integer;
//! use zelisko::linsolve::solution_coset;
//! use zelisko::residue::Modulus;
//!
//! let z36 = Modulus::new(Integer::from(36)).unwrap();
//! let coset = solution_coset(&z36.from_i64(33), &z36.from_i64(30)).unwrap();
//! assert_eq!(coset.enumerate(100).unwrap().len(), 3);
//! ```

pub mod error;
pub mod euclid;
pub mod format;
pub mod linsolve;
pub mod matrix;
pub mod residue;
pub mod symdet;
pub mod verify;
pub mod zelisko;

pub use error::{Error, Result};
pub use euclid::{EuclideanDomain, Integer, Poly};
pub use matrix::{DivisorChainPhi, MatrixRm};
pub use residue::{Modulus, Residue};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/residue-rings.md")]
    mod residue_rings {}
    #[doc = include_str!("../../../book/src/linear-equations.md")]
    mod linear_equations {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/zelisko-groups.md")]
    mod zelisko_groups {}
    #[doc = include_str!("../../../book/src/symbolic-determinants.md")]
    mod symbolic_determinants {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
