use num_bigint::BigInt;

/// Odd primes `p <= limit`, by trial division.
pub fn odd_primes_up_to(limit: u64) -> Vec<u64> {
    (3..=limit)
        .step_by(2)
        .filter(|&p| (3..).step_by(2).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .collect()
}

/// Product of the odd primes `p` with `(p - 1) | 2n`.
///
/// Since `p - 1 <= 2n`, only primes up to `2n + 1` can qualify.
pub fn denominator_product(n: u64) -> BigInt {
    assert!(n >= 1, "denominator_product needs n >= 1");
    odd_primes_up_to(2 * n + 1)
        .into_iter()
        .filter(|p| (2 * n) % (p - 1) == 0)
        .map(BigInt::from)
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert_eq!(odd_primes_up_to(30), [3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(odd_primes_up_to(2).is_empty());
    }

    #[test]
    fn examples() {
        assert_eq!(denominator_product(12), BigInt::from(3 * 5 * 7 * 13));
        assert_eq!(denominator_product(13), BigInt::from(3));
        assert_eq!(denominator_product(1), BigInt::from(3));
    }
}
