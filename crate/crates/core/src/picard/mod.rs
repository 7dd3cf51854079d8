//! Intersection pairing on the supported surfaces and the lower bounds for
//! the dual minimum distance built on it.

mod bounds;
mod lattice;

pub use bounds::{
    bound_basic, bound_improved, default_classes, delta_of, isqrt, sections_dimension, theta_upper, BoundReport,
    ClassEntry, InterpolationCheck, InterpolationRule, Theorem,
};
pub use lattice::{DivisorClass, LatticeKind, PicardLattice};
