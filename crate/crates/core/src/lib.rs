//! Exact b-chromatic number of graphs with girth at least 9.
//!
//! A *b-coloring* is a proper coloring in which every color class has a
//! vertex adjacent to all other classes. Its largest possible number of
//! colors, the b-chromatic number, never exceeds `m(G)` (see [`density`]).
//! On graphs of girth at least 9, including all forests, it is either `m(G)`
//! or `m(G) - 1`, and which one is decided by the existence of a good set
//! ([`goodset`]). When a good set exists, [`bcolor`] builds a b-coloring
//! with `m(G)` colors from it. [`oracle`] provides exhaustive ground truth
//! for small graphs and [`pipeline`] ties everything together.
//!
//! ```
//! use bchromatic::{graph::named, pipeline::{b_chromatic, Method}};
//!
//! let outcome = b_chromatic(&named::path(5), Default::default()).unwrap();
//! assert_eq!(outcome.chi_b, Some(3));
//! assert_eq!(outcome.method, Method::Construction);
//! ```

pub mod bcolor;
pub mod cli;
pub mod density;
mod error;
pub mod goodset;
pub mod graph;
pub mod oracle;
pub mod pipeline;

pub use error::{Error, Result};

/// Dense internal vertex id in `0..n`.
pub type Vertex = usize;

/// Colors are numbered from 1.
pub type Color = usize;
