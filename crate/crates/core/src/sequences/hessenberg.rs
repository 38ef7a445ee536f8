//! Lower Hessenberg determinants with a unit superdiagonal and Toeplitz
//! lower part:
//!
//! ```text
//! | a1  1            |
//! | a2  a1  1        |
//! | ..      ..  1    |
//! | am  ..  a2  a1   |
//! ```
//!
//! Expanding along the last row gives `d_m = sum_{i=1}^{m} (-1)^{i-1} a_i d_{m-i}`
//! with `d_0 = 1`, so no matrix is ever formed.

use num_traits::{One, Zero};

use super::{check_index, check_level};
use crate::error::{Error, Result};
use crate::rational::{self, ExactRational};

pub fn hessenberg_det(first_column: &[ExactRational], size: usize) -> Result<ExactRational> {
    if size > first_column.len() {
        return Err(Error::SizeExceedsColumn { size, len: first_column.len() });
    }
    if size == 0 {
        return Err(Error::InvalidArgument("determinant size must be at least 1".into()));
    }
    let mut dets = vec![ExactRational::one()];
    for m in 1..=size {
        let mut d = ExactRational::zero();
        for i in 1..=m {
            let term = &first_column[i - 1] * &dets[m - i];
            if i % 2 == 1 {
                d += term;
            } else {
                d -= term;
            }
        }
        dets.push(d);
    }
    Ok(dets.pop().expect("nonempty"))
}

fn fact(n: usize) -> ExactRational {
    rational::from_big(rational::factorial(n))
}

/// `(-1)^m (scale)! det` of the size-m matrix whose column is `entry(1..=m)`.
fn signed_det(m: usize, scale: usize, entry: impl Fn(usize) -> ExactRational) -> Result<ExactRational> {
    let column: Vec<_> = (1..=m).map(entry).collect();
    let det = hessenberg_det(&column, m)?;
    let signed = if m % 2 == 0 { det } else { -det };
    Ok(signed * fact(scale))
}

fn even_index(n: usize, det: impl FnOnce(usize) -> Result<ExactRational>) -> Result<ExactRational> {
    check_index(n)?;
    match n {
        0 => Ok(ExactRational::one()),
        _ if n % 2 == 1 => Ok(ExactRational::zero()),
        _ => det(n / 2),
    }
}

/// `E_{2m} = (-1)^m (2m)! det[1/(2i)!]`
pub fn euler_by_det(n: usize) -> Result<ExactRational> {
    even_index(n, |m| signed_det(m, n, |i| fact(2 * i).recip()))
}

/// `Ê_{2m} = (-1)^m (2m)! det[1/(2i+1)!]`
pub fn comp_euler_by_det(n: usize) -> Result<ExactRational> {
    even_index(n, |m| signed_det(m, n, |i| fact(2 * i + 1).recip()))
}

/// `B_n = (-1)^n n! det[1/(i+1)!]`, with `B_1 = -1/2`.
pub fn bernoulli_by_det(n: usize) -> Result<ExactRational> {
    check_index(n)?;
    if n == 0 {
        return Ok(ExactRational::one());
    }
    signed_det(n, n, |i| fact(i + 1).recip())
}

/// `E_{N,2m} = (-1)^m (2m)! det[(2N)!/(2N+2i)!]`
pub fn hyper_euler_by_det(level: u32, n: usize) -> Result<ExactRational> {
    check_level(level)?;
    let base = 2 * level as usize;
    even_index(n, |m| signed_det(m, n, |i| fact(base) / fact(base + 2 * i)))
}

/// `Ê_{N,2m} = (-1)^m (2m)! det[(2N+1)!/(2N+2i+1)!]`
pub fn hyper_euler2_by_det(level: u32, n: usize) -> Result<ExactRational> {
    check_level(level)?;
    let base = 2 * level as usize + 1;
    even_index(n, |m| signed_det(m, n, |i| fact(base) / fact(base + 2 * i)))
}
