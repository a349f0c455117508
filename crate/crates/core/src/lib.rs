//! A bijection between two-color partitions of n and partitions whose parts
//! in odd positions sum to n.
//!
//! Write s(n) for the number of partitions a₁ ≥ a₂ ≥ a₃ ≥ ⋯ with
//! a₁ + a₃ + a₅ + ⋯ = n, and t(n) for the number of partitions of n whose
//! parts are each colored red or green. Then s(n) = t(n), and [`phi`] is an
//! explicit bijection realizing it:
//!
//! ```
//! use schmidt::{phi, phi_inverse, TwoColorPartition};
//!
//! let lambda: TwoColorPartition = "2g+1r".parse().unwrap();
//! let gamma = phi(&lambda);
//! assert_eq!(gamma.to_string(), "3+1");
//! assert_eq!(gamma.alternating_sum(), lambda.weight());
//! assert_eq!(phi_inverse(&gamma), lambda);
//! ```
//!
//! The crate is organized as:
//!
//! - [`partition`]: the partition types and their text grammar,
//! - [`enumerate`]: exhaustive enumerators for both sides, plus the
//!   four-statistic refinement,
//! - [`bijection`]: each step of φ and its inverse,
//! - [`series`]: a power-series oracle for t(n),
//! - [`harness`]: the verification reports used by the `schmidt` binary.
//!
//! The guide under `book/` walks through the construction; its code samples
//! are compiled as doc-tests of this crate.

pub mod bijection;
pub mod enumerate;
pub mod error;
pub mod harness;
pub mod partition;
pub mod series;

pub use bijection::{
    add_staircase, gamma_from_mu, hook_compose, hook_decompose, mu_from_gamma, pad_colors, phi,
    phi_inverse, remove_staircase, trace, try_phi, try_phi_inverse, wright_build, wright_split,
    DistinctPair, HookVector, PaddedPair, PaddingCase, Shape, Trace,
};
pub use enumerate::{
    count_schmidt, count_two_color, enumerate_schmidt, enumerate_schmidt_refined_literal,
    enumerate_two_color, enumerate_two_color_refined, BoundedVector, RefinedQuery,
};
pub use error::{BijectionError, ParseError, QueryError, SeriesError};
pub use partition::{Color, Partition, TwoColorPartition};
pub use series::{series_mul, series_recip, two_color_coefficients, TruncatedSeries};

// The guide's code samples run as doc-tests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/construction.md")]
    mod construction {}
    #[doc = include_str!("../../../book/src/hooks.md")]
    mod hooks {}
    #[doc = include_str!("../../../book/src/inverse.md")]
    mod inverse {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/refinement.md")]
    mod refinement {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
