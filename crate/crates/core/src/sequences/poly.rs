use num_bigint::BigInt;
use num_traits::Zero;

use super::{binomial, check_index, check_k, stirling2};
use crate::error::{Error, Result};
use crate::rational::{self, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolyEuler2Method {
    /// `½ sum_m C(n,m) 4^m ((-1)^{n-m} + (-3)^{n-m}) B_m^{(k)}`, any `k`.
    ViaPolyBernoulli,
    /// `((-1)^K/2) sum_l (-1)^l l! S(K,l) ((4l+3)^n + (4l+1)^n)` with `K = -k`.
    StirlingNeg,
    /// `(-1)^K sum_l (-1)^l l! S(K,l) sum_m C(n,2m) (4l+2)^{n-2m}` with `K = -k`.
    StirlingNegFloor,
}

impl PolyEuler2Method {
    pub const ALL: [PolyEuler2Method; 3] = [
        PolyEuler2Method::ViaPolyBernoulli,
        PolyEuler2Method::StirlingNeg,
        PolyEuler2Method::StirlingNegFloor,
    ];

    pub fn applies_to(self, k: i64) -> bool {
        self == PolyEuler2Method::ViaPolyBernoulli || k <= 0
    }

    fn name(self) -> &'static str {
        match self {
            PolyEuler2Method::ViaPolyBernoulli => "via_pb",
            PolyEuler2Method::StirlingNeg => "stirling_neg",
            PolyEuler2Method::StirlingNegFloor => "stirling_neg2",
        }
    }
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Poly-Bernoulli numbers, `B_n^{(k)} = sum_j (-1)^{n-j} j! S(n,j) / (j+1)^k`.
pub fn poly_bernoulli(n: usize, k: i64) -> Result<ExactRational> {
    check_index(n)?;
    check_k(k)?;
    let mut sum = ExactRational::zero();
    let mut fact = BigInt::from(1);
    for j in 0..=n {
        if j > 0 {
            fact *= j;
        }
        let term = rational::from_big(BigInt::from(sign(n - j)) * &fact * stirling2(n, j));
        sum += term * rational::pow_rational(&rational::int(j as i64 + 1), -k);
    }
    Ok(sum)
}

/// Poly-Euler numbers of the second kind `Ê_n^{(k)}`.
pub fn poly_euler2(n: usize, k: i64, method: PolyEuler2Method) -> Result<ExactRational> {
    check_index(n)?;
    check_k(k)?;
    if !method.applies_to(k) {
        return Err(Error::MethodRequiresNonpositiveK { method: method.name(), k });
    }
    match method {
        PolyEuler2Method::ViaPolyBernoulli => {
            let mut sum = ExactRational::zero();
            for m in 0..=n {
                let weight = binomial(n, m)
                    * rational::pow_int(4, m)
                    * (rational::pow_int(-1, n - m) + rational::pow_int(-3, n - m));
                sum += rational::from_big(weight) * poly_bernoulli(m, k)?;
            }
            Ok(sum / rational::int(2))
        }
        PolyEuler2Method::StirlingNeg => {
            let big_k = k.unsigned_abs() as usize;
            let sum: BigInt = stirling_weights(big_k)
                .map(|(l, w)| {
                    let l = l as i64;
                    w * (rational::pow_int(4 * l + 3, n) + rational::pow_int(4 * l + 1, n))
                })
                .sum();
            Ok(ExactRational::new(BigInt::from(sign(big_k)) * sum, BigInt::from(2)))
        }
        PolyEuler2Method::StirlingNegFloor => {
            let big_k = k.unsigned_abs() as usize;
            let sum: BigInt = stirling_weights(big_k)
                .map(|(l, w)| {
                    let inner: BigInt = (0..=n / 2)
                        .map(|m| binomial(n, 2 * m) * rational::pow_int(4 * l as i64 + 2, n - 2 * m))
                        .sum();
                    w * inner
                })
                .sum();
            Ok(rational::from_big(BigInt::from(sign(big_k)) * sum))
        }
    }
}

/// `(l, (-1)^l l! S(K, l))` for `l = 0..=K`.
fn stirling_weights(big_k: usize) -> impl Iterator<Item = (usize, BigInt)> {
    (0..=big_k).map(move |l| {
        let w = BigInt::from(sign(l)) * rational::factorial(l) * stirling2(big_k, l);
        (l, w)
    })
}

/// Poly-Euler numbers of the first kind `E_n^{(k)}`, from poly-Bernoulli numbers.
///
/// Writing `(1 - e^{-4t})/(4t cosh t) = (e^{-t} - e^{-3t})/(2t)` gives
/// `E_n^{(k)} = sum_m C(n,m) 4^m B_m^{(k)} c_{n-m}` with
/// `c_i = ((-1)^{i+1} - (-3)^{i+1}) / (2(i+1))`.
pub fn poly_euler(n: usize, k: i64) -> Result<ExactRational> {
    check_index(n)?;
    check_k(k)?;
    let mut sum = ExactRational::zero();
    for m in 0..=n {
        let i = n - m;
        let c = ExactRational::new(
            rational::pow_int(-1, i + 1) - rational::pow_int(-3, i + 1),
            BigInt::from(2 * (i + 1)),
        );
        let weight = rational::from_big(binomial(n, m) * rational::pow_int(4, m));
        sum += weight * c * poly_bernoulli(m, k)?;
    }
    Ok(sum)
}
