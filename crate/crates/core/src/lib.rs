//! Locating colorings of trees.
//!
//! A proper coloring is locating when every vertex is identified by its
//! vector of distances to the color classes. The crate builds palms
//! (subdivided stars) and olive trees, colors them with explicit
//! constructions, verifies colorings, computes the locating chromatic number
//! exactly for small trees, and evaluates the closed-form values and bounds.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod experiments;
pub mod io;
pub mod locating;
pub mod tree;

pub use bounds::{bounds_report, chi_olive, delta_lower_bound, BoundsReport};
pub use constructions::{color_tree, Method};
pub use error::{Error, Result};
pub use exact::{exact_chi_l, ExactOptions, ExactResult};
pub use locating::{verify, Coloring, VerifyReport};
pub use tree::{PalmSpec, Tree};
