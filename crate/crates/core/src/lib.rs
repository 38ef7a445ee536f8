//! Exact arithmetic for Euler numbers of the second kind and their relatives.
//!
//! The crate computes Euler numbers, complementary Euler numbers (the EGF
//! coefficients of `t/sinh t`), poly-Bernoulli numbers, poly-Euler numbers of
//! both kinds and hypergeometric Euler numbers of both kinds. Every family is
//! available through at least two independent routes:
//!
//! - [`series`]: truncated power series over the rationals, used as a
//!   generating-function oracle;
//! - [`sequences`]: closed forms, recurrences and Hessenberg determinants.
//!
//! [`verify`] sweeps the known identities between these families and returns
//! a [`verify::VerifyReport`] for each, and [`table`] renders grids of values.

pub mod error;
pub mod rational;
pub mod sequences;
pub mod series;
pub mod table;
pub mod verify;

mod memo;

pub use error::{Error, Result};
pub use rational::ExactRational;
pub use sequences::{Convention, SeqFamily};
pub use series::TruncSeries;
