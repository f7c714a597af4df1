//! Exact weighted cosystole and 3-cosystole invariants of binary matroids.

pub mod catalog;
pub mod cosystole;
pub mod exactnum;
pub mod gf2;
pub mod graphs;
pub mod lp;
pub mod matroid;
pub mod par;

pub use exactnum::Rational;
pub use gf2::Gf2Matrix;
pub use matroid::{BinaryMatroid, ElementSet};
