//! Monomial ideals, k-clean decisions and k-decomposable simplicial complexes, with
//! certificates that can be checked independently of the search that produced them.

pub mod certificate;
pub mod classes;
pub mod clean;
pub mod corpus;
pub mod decomp;
mod error;
pub mod homology;
mod ideal;
mod monomial;
pub mod parse;
pub mod polarize;
pub mod primes;
mod ring;
pub mod search;
pub mod simplicial;
mod varset;

pub use error::{Error, Result};
pub use ideal::{MonomialIdeal, VariablePrime};
pub use monomial::{DisplayMonomial, Monomial};
pub use ring::{RingContext, DEFAULT_MAX_EXPONENT};
pub use varset::{maximal_sets, minimal_sets, minimal_transversals, VarSet, MAX_VARS};
