//! Weights, formal characters and convex hulls of highest weight modules
//! over complex semisimple Lie algebras, in exact rational arithmetic.
//!
//! Weights are given in the basis of fundamental weights; offsets below a
//! highest weight and all polyhedra use simple-root coordinates.

pub mod character;
pub mod error;
pub mod hwmodule;
pub mod linalg;
pub mod lp;
pub mod oracle;
pub mod polyhedron;
pub mod rational;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};
pub use hwmodule::{HWModule, ModuleClass, Offset, TruncatedWeightSet};
pub use rational::Rational;
pub use rootsys::{IndexSet, RootSystem, RootSystemSpec, Weight};
pub use weyl::{WeylElement, WeylGroup};
