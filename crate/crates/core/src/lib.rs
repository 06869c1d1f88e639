//! Finite-dimensional algebras with exact arithmetic: radicals, heredity
//! chains, quasi-hereditary structures and Reedy decompositions.

pub mod algebra;
pub mod constructors;
pub mod corpus;
pub mod error;
pub mod io;
pub mod linalg;
pub mod qh;
pub mod reedy;

pub use error::{Error, Result};
