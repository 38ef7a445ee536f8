//! Closed forms, recurrences and determinants for every number family.
//!
//! Each family here has at least one route that does not go through a
//! generating function, so it can be checked against [`crate::series`].
//! Indices are capped at [`MAX_N`] and polylogarithm orders at
//! `|k| <= MAX_ABS_K`; larger requests return an error instead of starting a
//! huge computation.

mod combinatorics;
mod euler;
mod hessenberg;
mod hyper;
mod poly;
mod primes;

pub use combinatorics::{binomial, stirling2};
pub use euler::{
    bernoulli, bernoulli_polynomial_at, comp_euler, euler_number, CompEulerMethod, Convention,
};
pub use hessenberg::{
    bernoulli_by_det, comp_euler_by_det, euler_by_det, hessenberg_det, hyper_euler2_by_det,
    hyper_euler_by_det,
};
pub use hyper::{hyper_euler, hyper_euler2};
pub use poly::{poly_bernoulli, poly_euler, poly_euler2, PolyEuler2Method};
pub use primes::{denominator_product, odd_primes_up_to};

use crate::error::{Error, Result};
use crate::rational::{self, ExactRational};

pub const MAX_N: usize = 512;
pub const MAX_ABS_K: i64 = 64;
pub const MAX_LEVEL: u32 = 64;

pub(crate) fn check_index(n: usize) -> Result<()> {
    if n > MAX_N {
        return Err(Error::IndexOutOfRange { n, max: MAX_N });
    }
    Ok(())
}

pub(crate) fn check_k(k: i64) -> Result<()> {
    if k.abs() > MAX_ABS_K {
        return Err(Error::ParameterOutOfRange { k, max: MAX_ABS_K });
    }
    Ok(())
}

pub(crate) fn check_level(level: u32) -> Result<()> {
    if level > MAX_LEVEL {
        return Err(Error::LevelOutOfRange { level, max: MAX_LEVEL });
    }
    Ok(())
}

/// A number family together with its integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqFamily {
    /// `1/cosh t`
    Euler,
    /// `t/sinh t`
    CompEuler,
    /// `t/(e^t - 1)`, `B_1 = -1/2`
    BernoulliMinus,
    /// `t/(1 - e^{-t})`, `B_1 = +1/2`
    BernoulliPlus,
    /// `Li_k(1 - e^{-t}) / (1 - e^{-t})`
    PolyBernoulli { k: i64 },
    /// `Li_k(1 - e^{-4t}) / (4t cosh t)`
    PolyEuler { k: i64 },
    /// `Li_k(1 - e^{-4t}) / (4 sinh t)`
    PolyEuler2 { k: i64 },
    /// `(t^{2N}/(2N)!) / (cosh t - sum_{n<N} t^{2n}/(2n)!)`
    HyperEuler { level: u32 },
    /// `(t^{2N+1}/(2N+1)!) / (sinh t - sum_{n<N} t^{2n+1}/(2n+1)!)`
    HyperEuler2 { level: u32 },
}

impl SeqFamily {
    pub fn check_params(&self) -> Result<()> {
        match *self {
            SeqFamily::PolyBernoulli { k } | SeqFamily::PolyEuler { k } | SeqFamily::PolyEuler2 { k } => {
                check_k(k)
            }
            SeqFamily::HyperEuler { level } | SeqFamily::HyperEuler2 { level } => check_level(level),
            _ => Ok(()),
        }
    }

    /// Whether every odd-index term is zero.
    pub fn is_even(&self) -> bool {
        matches!(
            self,
            SeqFamily::Euler | SeqFamily::CompEuler | SeqFamily::HyperEuler { .. } | SeqFamily::HyperEuler2 { .. }
        )
    }

    /// The n-th term by the family's primary closed form or recurrence.
    pub fn value(&self, n: usize) -> Result<ExactRational> {
        match *self {
            SeqFamily::Euler => euler_number(n).map(rational::from_big),
            SeqFamily::CompEuler => comp_euler(n, CompEulerMethod::Recurrence),
            SeqFamily::BernoulliMinus => bernoulli(n, Convention::Minus),
            SeqFamily::BernoulliPlus => bernoulli(n, Convention::Plus),
            SeqFamily::PolyBernoulli { k } => poly_bernoulli(n, k),
            SeqFamily::PolyEuler { k } => poly_euler(n, k),
            SeqFamily::PolyEuler2 { k } if k <= 0 => poly_euler2(n, k, PolyEuler2Method::StirlingNeg),
            SeqFamily::PolyEuler2 { k } => poly_euler2(n, k, PolyEuler2Method::ViaPolyBernoulli),
            SeqFamily::HyperEuler { level } => hyper_euler(level, n),
            SeqFamily::HyperEuler2 { level } => hyper_euler2(level, n),
        }
    }
}
