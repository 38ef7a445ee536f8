use num_traits::{One, Zero};

use super::{check_index, check_level};
use crate::error::Result;
use crate::rational::{self, ExactRational};

fn fact(n: usize) -> ExactRational {
    rational::from_big(rational::factorial(n))
}

/// Even-index terms `a_0, a_2, ..., a_{2m}` of the sequence defined by
/// `sum_{i=0}^{j} a_{2i} / ((offset + 2j - 2i)! (2i)!) = 0` for `j >= 1`,
/// `a_0 = 1`.
fn even_terms(offset: usize, m: usize) -> Vec<ExactRational> {
    let lead = fact(offset);
    let mut terms = vec![ExactRational::one()];
    for j in 1..=m {
        let sum = terms.iter().enumerate().fold(ExactRational::zero(), |acc, (i, a)| {
            acc + a / (fact(offset + 2 * j - 2 * i) * fact(2 * i))
        });
        terms.push(-sum * fact(2 * j) * &lead);
    }
    terms
}

/// Hypergeometric Euler numbers `E_{N,n}`; `E_{0,n}` are the Euler numbers.
pub fn hyper_euler(level: u32, n: usize) -> Result<ExactRational> {
    check_index(n)?;
    check_level(level)?;
    if n % 2 == 1 {
        return Ok(ExactRational::zero());
    }
    Ok(even_terms(2 * level as usize, n / 2).pop().expect("nonempty"))
}

/// Hypergeometric Euler numbers of the second kind `Ê_{N,n}`;
/// `Ê_{0,n}` are the Euler numbers of the second kind.
pub fn hyper_euler2(level: u32, n: usize) -> Result<ExactRational> {
    check_index(n)?;
    check_level(level)?;
    if n % 2 == 1 {
        return Ok(ExactRational::zero());
    }
    Ok(even_terms(2 * level as usize + 1, n / 2).pop().expect("nonempty"))
}
