//! The exact scalar used everywhere in the crate.
//!
//! `ExactRational` is `num_rational::BigRational`, which is kept in lowest
//! terms with a positive denominator (zero is `0/1`). Its `Display` already
//! renders the canonical `p/q` form with `/1` suppressed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type ExactRational = num_rational::BigRational;

pub fn int(v: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_big(v: BigInt) -> ExactRational {
    ExactRational::from_integer(v)
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse(s: &str) -> Option<ExactRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().ok()?;
            let q: BigInt = q.parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(ExactRational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(from_big),
    }
}

pub fn render(r: &ExactRational) -> String {
    r.to_string()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn pow_int(base: i64, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

/// `r^e` for any integer exponent; `r` must be nonzero when `e < 0`.
pub fn pow_rational(r: &ExactRational, e: i64) -> ExactRational {
    let p = num_traits::pow(r.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Least nonnegative residue of an integer-valued rational modulo `m`.
/// Returns `None` if `r` is not an integer.
pub fn residue(r: &ExactRational, m: u64) -> Option<u64> {
    if !r.is_integer() {
        return None;
    }
    let m = BigInt::from(m);
    let res = r.numer().mod_floor(&m);
    debug_assert!(!res.is_negative());
    Some(res.try_into().expect("residue fits in u64"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rendering() {
        assert_eq!(render(&ratio(6, -4)), "-3/2");
        assert_eq!(render(&ratio(4, 2)), "2");
        assert_eq!(render(&ratio(0, 7)), "0");
        assert_eq!(ratio(0, -7).denom(), &BigInt::one());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-5", "1982765468311237/1365", "-286994504449393/3"] {
            assert_eq!(render(&parse(s).unwrap()), s);
        }
        assert_eq!(parse("2/4").unwrap(), ratio(1, 2));
        assert!(parse("1/0").is_none());
        assert!(parse("x").is_none());
    }

    #[test]
    fn residues() {
        assert_eq!(residue(&int(-1), 3), Some(2));
        assert_eq!(residue(&int(41809933 - 613), 5), Some(0));
        assert_eq!(residue(&ratio(1, 2), 3), None);
    }
}
