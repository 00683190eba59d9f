//! Embedded graphs with rings, 3-coloring precoloring extension, the
//! face-weight calculus and small exhaustive searches for girth-5 graphs
//! on surfaces.
//!
//! Everything here is `no_std` + `alloc`; IO, file formats and the command
//! line live in the `girth5` crate.

#![no_std]

extern crate alloc;

pub mod canon;
pub mod catalog;
pub mod coloring;
pub mod cycles;
pub mod enumerate;
pub mod expansion;
pub mod map;
pub mod plane;
pub mod props;
pub mod regions;
pub mod shortcycles;
pub mod unionfind;
pub mod weight;

pub use map::{CornerRef, Dart, EmbeddedGraph, EmbeddingError, FaceRecord, GraphSpec, Ring, RingSpec, State};
pub use weight::Rational;
