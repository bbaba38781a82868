//! Finite subgroups of SU(2), the McKay correspondence between affine ADE
//! diagrams and irreducible representations, and the dual correspondence between
//! diagram vertices and non-trivial conjugacy classes, all built and checked with
//! exact arithmetic where it matters.

#![allow(clippy::needless_range_loop)]

pub mod characters;
pub mod cyclotomic;
pub mod dual;
pub mod dynkin;
pub mod error;
pub mod fourier;
pub mod isomorphism;
pub mod linalg;
pub mod mckay;
pub mod oracle;
pub mod su2group;
pub mod verify;

pub use cyclotomic::CyclotomicNumber;
pub use dynkin::{CartanData, Diagram, DiagramType, Family};
pub use error::{Error, Result};
