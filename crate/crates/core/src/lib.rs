//! Exact search and verification for colorful (b-)colorings and
//! semi-locally-surjective graph homomorphisms, with Kneser graph
//! constructions.
//!
//! ```
//! use colorful_core::coloring::{b_spectrum, SearchOptions};
//! use colorful_core::fixtures::q3;
//!
//! let report = b_spectrum(&q3(), &SearchOptions::default()).unwrap();
//! assert_eq!(report.spectrum().into_iter().collect::<Vec<_>>(), vec![2, 4]);
//! ```

pub mod bitset;
pub mod coloring;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod homlift;
pub mod io;
pub mod kneser;

pub use error::{Error, Result};
pub use graph::{Girth, Graph};
