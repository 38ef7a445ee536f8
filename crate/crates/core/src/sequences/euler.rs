use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{binomial, check_index};
use crate::error::Result;
use crate::memo::Memo;
use crate::rational::{self, ExactRational};

/// Which sign `B_1` carries. The two conventions agree at every other index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `t/(e^t - 1)`, `B_1 = -1/2`
    #[default]
    Minus,
    /// `t/(1 - e^{-t})`, `B_1 = +1/2`
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompEulerMethod {
    /// `sum_{j=0}^{n} C(2n+1, 2j) Ê_{2j} = 0`
    Recurrence,
    /// `Ê_n = (2 - 2^n) B_n`
    BernoulliIdentity,
}

static BERNOULLI_MINUS: Memo<ExactRational> = Memo::new();
// index i holds E_{2i}
static EULER_EVEN: Memo<BigInt> = Memo::new();
// index i holds Ê_{2i}
static COMP_EULER_EVEN: Memo<ExactRational> = Memo::new();

pub fn bernoulli(n: usize, conv: Convention) -> Result<ExactRational> {
    check_index(n)?;
    if n == 1 && conv == Convention::Plus {
        return Ok(rational::ratio(1, 2));
    }
    Ok(BERNOULLI_MINUS.get(n, |prev| {
        let m = prev.len();
        if m == 0 {
            return ExactRational::one();
        }
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        let sum = prev
            .iter()
            .enumerate()
            .fold(ExactRational::zero(), |acc, (j, b)| acc + b * rational::from_big(binomial(m + 1, j)));
        -sum / rational::int(m as i64 + 1)
    }))
}

/// `B_n(x) = sum_j C(n, j) B_j x^{n-j}` with `B_1 = -1/2`.
pub fn bernoulli_polynomial_at(n: usize, x: &ExactRational) -> Result<ExactRational> {
    check_index(n)?;
    let mut sum = ExactRational::zero();
    let mut xpow = ExactRational::one();
    // walk j downwards so x^{n-j} grows by one factor per step
    for j in (0..=n).rev() {
        sum += bernoulli(j, Convention::Minus)? * rational::from_big(binomial(n, j)) * &xpow;
        xpow *= x;
    }
    Ok(sum)
}

/// Euler numbers, `1/cosh t = sum E_n t^n/n!`.
pub fn euler_number(n: usize) -> Result<BigInt> {
    check_index(n)?;
    if n % 2 == 1 {
        return Ok(BigInt::zero());
    }
    Ok(EULER_EVEN.get(n / 2, |prev| {
        let m = prev.len();
        if m == 0 {
            return BigInt::one();
        }
        // sum_{j=0}^{m} C(2m, 2j) E_{2j} = 0
        let sum: BigInt = prev.iter().enumerate().map(|(j, e)| binomial(2 * m, 2 * j) * e).sum();
        -sum
    }))
}

/// Euler numbers of the second kind, `t/sinh t = sum Ê_n t^n/n!`.
pub fn comp_euler(n: usize, method: CompEulerMethod) -> Result<ExactRational> {
    check_index(n)?;
    if n % 2 == 1 {
        return Ok(ExactRational::zero());
    }
    match method {
        CompEulerMethod::Recurrence => Ok(COMP_EULER_EVEN.get(n / 2, |prev| {
            let m = prev.len();
            if m == 0 {
                return ExactRational::one();
            }
            // C(2m+1, 2m) = 2m+1 multiplies the unknown
            let sum = prev
                .iter()
                .enumerate()
                .fold(ExactRational::zero(), |acc, (j, e)| {
                    acc + e * rational::from_big(binomial(2 * m + 1, 2 * j))
                });
            -sum / rational::int(2 * m as i64 + 1)
        })),
        CompEulerMethod::BernoulliIdentity => {
            if n == 0 {
                return Ok(ExactRational::one());
            }
            let factor = rational::from_big(BigInt::from(2) - rational::pow_int(2, n));
            Ok(factor * bernoulli(n, Convention::Minus)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::rational::{int, ratio};
    use crate::series::sequence_by_gf;
    use crate::sequences::SeqFamily;

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(1, Convention::Minus).unwrap(), ratio(-1, 2));
        assert_eq!(bernoulli(1, Convention::Plus).unwrap(), ratio(1, 2));
        let oracle = sequence_by_gf(&SeqFamily::BernoulliMinus, 8).unwrap();
        assert_eq!(oracle[8], ratio(-1, 30));
        assert_eq!(bernoulli(8, Convention::Minus).unwrap(), oracle[8]);
        assert_eq!(bernoulli(8, Convention::Plus).unwrap(), ratio(-1, 30));
        assert_eq!(bernoulli(0, Convention::default()).unwrap(), int(1));
    }

    #[test]
    fn bernoulli_matches_gf_both_conventions() {
        let minus = sequence_by_gf(&SeqFamily::BernoulliMinus, 30).unwrap();
        let plus = sequence_by_gf(&SeqFamily::BernoulliPlus, 30).unwrap();
        for n in 0..=30 {
            assert_eq!(bernoulli(n, Convention::Minus).unwrap(), minus[n]);
            assert_eq!(bernoulli(n, Convention::Plus).unwrap(), plus[n]);
        }
    }

    #[test]
    fn bernoulli_polynomial_examples() {
        for n in 0..10 {
            assert_eq!(
                bernoulli_polynomial_at(n, &int(0)).unwrap(),
                bernoulli(n, Convention::Minus).unwrap()
            );
        }
        // B_2(x) = x^2 - x + 1/6
        assert_eq!(bernoulli_polynomial_at(2, &ratio(1, 2)).unwrap(), ratio(-1, 12));
        let scaled = bernoulli_polynomial_at(4, &ratio(1, 2)).unwrap() * int(16);
        assert_eq!(scaled, ratio(7, 15));
    }

    #[test]
    fn half_argument_identity() {
        // 2^n B_n(1/2) = (2 - 2^n) B_n = Ê_n
        for n in 1..=24 {
            let lhs = bernoulli_polynomial_at(n, &ratio(1, 2)).unwrap() * rational::from_big(rational::pow_int(2, n));
            assert_eq!(lhs, comp_euler(n, CompEulerMethod::BernoulliIdentity).unwrap());
            assert_eq!(lhs, comp_euler(n, CompEulerMethod::Recurrence).unwrap());
        }
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_number(0).unwrap(), BigInt::one());
        assert_eq!(euler_number(3).unwrap(), BigInt::zero());
        let oracle = sequence_by_gf(&SeqFamily::Euler, 6).unwrap();
        assert_eq!(oracle[6], int(-61));
        assert_eq!(rational::from_big(euler_number(6).unwrap()), oracle[6]);
    }

    #[test]
    fn comp_euler_examples() {
        for method in [CompEulerMethod::Recurrence, CompEulerMethod::BernoulliIdentity] {
            assert_eq!(comp_euler(0, method).unwrap(), int(1));
            assert_eq!(comp_euler(2, method).unwrap(), ratio(-1, 3));
            assert_eq!(comp_euler(7, method).unwrap(), int(0));
            assert_eq!(
                comp_euler(24, method).unwrap().to_string(),
                "1982765468311237/1365"
            );
            assert_eq!(comp_euler(26, method).unwrap().to_string(), "-286994504449393/3");
        }
    }

    #[test]
    fn comp_euler_methods_and_gf_agree() {
        let gf = sequence_by_gf(&SeqFamily::CompEuler, 30).unwrap();
        for (n, g) in gf.iter().enumerate() {
            assert_eq!(&comp_euler(n, CompEulerMethod::Recurrence).unwrap(), g, "n={n}");
            assert_eq!(&comp_euler(n, CompEulerMethod::BernoulliIdentity).unwrap(), g, "n={n}");
        }
    }

    #[test]
    fn index_cap() {
        assert_eq!(euler_number(513), Err(Error::IndexOutOfRange { n: 513, max: 512 }));
        assert!(comp_euler(600, CompEulerMethod::Recurrence).is_err());
        assert!(bernoulli(513, Convention::Minus).is_err());
    }
}
