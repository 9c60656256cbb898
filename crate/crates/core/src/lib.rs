//! Exact singularity invariants and GIT stability tests for holomorphic
//! foliations on the complex projective plane, restricted to rational data.

pub mod error;
pub mod families;
pub mod git;
pub mod foliation;
pub mod localgeom;
pub mod poly;

pub use error::{Error, Result};
