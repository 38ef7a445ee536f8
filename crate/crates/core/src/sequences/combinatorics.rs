use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::memo::Memo;

static PASCAL: Memo<Vec<BigInt>> = Memo::new();
static STIRLING2: Memo<Vec<BigInt>> = Memo::new();

/// `C(n, k)` read from a cached Pascal triangle; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let row = PASCAL.get(n, |rows| match rows.last() {
        None => vec![BigInt::one()],
        Some(prev) => {
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigInt::one());
            row.extend(prev.windows(2).map(|w| &w[0] + &w[1]));
            row.push(BigInt::one());
            row
        }
    });
    row[k].clone()
}

/// Stirling numbers of the second kind from
/// `S(n, j) = j S(n-1, j) + S(n-1, j-1)`, `S(0, 0) = 1`.
pub fn stirling2(n: usize, j: usize) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    let row = STIRLING2.get(n, |rows| match rows.last() {
        None => vec![BigInt::one()],
        Some(prev) => {
            let m = prev.len();
            (0..=m)
                .map(|j| {
                    let stay = if j < m { prev[j].clone() * BigInt::from(j) } else { BigInt::zero() };
                    let join = if j > 0 { prev[j - 1].clone() } else { BigInt::zero() };
                    stay + join
                })
                .collect()
        }
    });
    row[j].clone()
}
