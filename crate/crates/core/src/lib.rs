//! Exact local algebra for isolated hypersurface singularities.
//!
//! Everything here is pure computation over `alloc`: sparse rational
//! polynomials, local standard bases, Milnor numbers and Milnor sequences,
//! Du Val and compound Du Val classification, and equisingularity checks
//! for one-parameter families with declared singular sections.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod family;
pub mod local;
pub mod milnor;
pub mod polynomial;

mod linalg;
