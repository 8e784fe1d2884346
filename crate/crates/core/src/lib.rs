//! Realizability of interval and rectangle Euler diagrams via order dimension.
//!
//! A formal context (objects, attributes, incidence) can be drawn with one
//! interval per attribute and one point per object exactly when its Euler-poset
//! has order dimension at most two. It can be drawn with axis-aligned
//! rectangles exactly when its extended Euler-poset has order dimension four.
//! This crate builds those posets, computes the realizers and turns them into
//! diagrams with integer coordinates.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is off.
//! File formats, rendering and the command-line tool live in the `eulerdim`
//! companion crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod bits;
pub mod context;
pub mod dimension;
mod error;
pub mod euler1d;
pub mod euler2d;
pub mod poset;

pub use bits::BitSet;
pub use context::{ClarifiedContext, FormalConcept, FormalContext};
pub use dimension::{
    brute_force_dimension, k_realizer, transitive_orientation, two_dim_realizer, BruteForce,
    ConflictGraph, DimensionWitness, Orientation, SearchOptions, UndirectedGraph, Verdict,
    DEFAULT_BUDGET,
};
pub use error::{Error, Result};
pub use euler1d::{euler1d, euler_from_linear_extensions, EulerDiagram1D, Interval, OneDimOutcome};
pub use euler2d::{combine_1d, euler2d, synthesize_four_extensions, EulerDiagram2D, TwoDimOutcome};
pub use poset::{ElementKind, LinearExtension, Poset, Realizer};
