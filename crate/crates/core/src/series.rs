//! Truncated power series with exact rational coefficients.
//!
//! A [`TruncSeries`] of order `n` knows the coefficients of `t^0..=t^n` and
//! nothing beyond. Binary operations shrink to the smaller order instead of
//! failing, so a pipeline started at a fixed order degrades predictably.
//!
//! [`sequence_by_gf`] builds the defining generating function of each
//! [`SeqFamily`] and reads off its EGF coefficients. It is the oracle every
//! closed form in [`crate::sequences`] is checked against.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, ExactRational};
use crate::sequences::{self, SeqFamily};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<ExactRational>,
}

impl TruncSeries {
    /// Panics if `coeffs` is empty: a series always knows at least `t^0`.
    pub fn new(coeffs: Vec<ExactRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs order >= 0");
        TruncSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![ExactRational::zero(); order + 1])
    }

    pub fn constant(c: ExactRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * t^power`, truncated at `order`.
    pub fn monomial(c: ExactRational, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> Result<&ExactRational> {
        self.coeffs.get(index).ok_or(Error::IndexBeyondOrder {
            index,
            order: self.order(),
        })
    }

    /// Index of the first nonzero coefficient, `None` if zero through the order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self::new(self.coeffs[..=order].to_vec())
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new((0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new((0..=order).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect())
    }

    /// Drops the first `by` coefficients (division by `t^by`).
    fn shift_down(&self, by: usize) -> Option<Self> {
        if by > self.order() {
            return None;
        }
        Some(Self::new(self.coeffs[by..].to_vec()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elementary {
    Exp,
    Sinh,
    Cosh,
}

/// `exp(scale t)`, `sinh(scale t)` or `cosh(scale t)` up to `t^order`.
pub fn elementary_series(kind: Elementary, scale: &ExactRational, order: usize) -> TruncSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = ExactRational::one();
    for n in 0..=order {
        if n > 0 {
            term = term * scale / rational::int(n as i64);
        }
        let keep = match kind {
            Elementary::Exp => true,
            Elementary::Sinh => n % 2 == 1,
            Elementary::Cosh => n % 2 == 0,
        };
        coeffs.push(if keep { term.clone() } else { ExactRational::zero() });
    }
    TruncSeries::new(coeffs)
}

/// Cauchy product, truncated to the smaller order.
pub fn series_mul(a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
    let order = a.order().min(b.order());
    let coeffs = (0..=order)
        .map(|n| {
            (0..=n)
                .filter(|&i| !a.coeffs[i].is_zero() && !b.coeffs[n - i].is_zero())
                .fold(ExactRational::zero(), |acc, i| acc + &a.coeffs[i] * &b.coeffs[n - i])
        })
        .collect();
    TruncSeries::new(coeffs)
}

/// `num / den`, after cancelling the common power of `t` carried by `den`.
///
/// The result has order `min(num.order, den.order) - valuation(den)`.
pub fn series_div(num: &TruncSeries, den: &TruncSeries) -> Result<TruncSeries> {
    let shift = den
        .valuation()
        .ok_or_else(|| Error::DivisionByNonUnit("divisor is zero through its order".into()))?;
    if let Some(v) = num.valuation() {
        if v < shift {
            return Err(Error::DivisionByNonUnit(format!(
                "numerator valuation {v} is below divisor valuation {shift}"
            )));
        }
    }
    let order = num.order().min(den.order());
    let (num, den) = match (num.truncate(order).shift_down(shift), den.truncate(order).shift_down(shift)) {
        (Some(n), Some(d)) => (n, d),
        _ => {
            return Err(Error::DivisionByNonUnit(format!(
                "order {order} leaves nothing after removing t^{shift}"
            )))
        }
    };

    let lead = den.coeffs[0].recip();
    let mut quot: Vec<ExactRational> = Vec::with_capacity(num.coeffs.len());
    for n in 0..num.coeffs.len() {
        let mut acc = num.coeffs[n].clone();
        for i in 1..=n {
            if !den.coeffs[i].is_zero() {
                acc -= &den.coeffs[i] * &quot[n - i];
            }
        }
        quot.push(acc * &lead);
    }
    Ok(TruncSeries::new(quot))
}

/// `Li_k(u) = sum_{m>=1} u^m / m^k` truncated at `order`.
///
/// Requires `u(0) = 0`, so `u^m` starts at `t^m` and the sum stops at
/// `m = order`. For `k <= 0` the weight `1/m^k` is the integer `m^|k|`.
pub fn polylog_of(k: i64, u: &TruncSeries, order: usize) -> Result<TruncSeries> {
    if !u.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let u = u.truncate(order);
    let order = u.order();
    let mut sum = TruncSeries::zero(order);
    let mut power = u.clone();
    for m in 1..=order {
        if m > 1 {
            power = series_mul(&power, &u);
        }
        let weight = rational::pow_rational(&rational::int(m as i64), -k);
        sum = sum.add(&power.scale(&weight));
    }
    Ok(sum)
}

/// Reads `a_n` from `s = sum a_n t^n / n!`.
pub fn egf_extract(s: &TruncSeries, n: usize) -> Result<ExactRational> {
    Ok(s.coeff(n)? * rational::from_big(rational::factorial(n)))
}

/// EGF coefficients `a_0..=a_nmax` of the family's defining generating function.
pub fn sequence_by_gf(family: &SeqFamily, nmax: usize) -> Result<Vec<ExactRational>> {
    family.check_params()?;
    let one = ExactRational::one();
    let series = match *family {
        SeqFamily::Euler => {
            let cosh = elementary_series(Elementary::Cosh, &one, nmax);
            series_div(&TruncSeries::constant(one, nmax), &cosh)?
        }
        SeqFamily::CompEuler => {
            let order = nmax + 1;
            let t = TruncSeries::monomial(one.clone(), 1, order);
            series_div(&t, &elementary_series(Elementary::Sinh, &one, order))?
        }
        SeqFamily::BernoulliMinus | SeqFamily::BernoulliPlus => {
            // t/(e^t - 1), or t/(1 - e^{-t}) for the plus convention
            let order = nmax + 1;
            let sign = if *family == SeqFamily::BernoulliMinus { 1 } else { -1 };
            let exp = elementary_series(Elementary::Exp, &rational::int(sign), order);
            let den = exp.sub(&TruncSeries::constant(one.clone(), order)).scale(&rational::int(sign));
            series_div(&TruncSeries::monomial(one, 1, order), &den)?
        }
        SeqFamily::PolyBernoulli { k } => {
            let order = nmax + 1;
            let u = one_minus_exp(-1, order);
            series_div(&polylog_of(k, &u, order)?, &u)?
        }
        SeqFamily::PolyEuler { k } => {
            let order = nmax + 1;
            let u = one_minus_exp(-4, order);
            let four_t = TruncSeries::monomial(rational::int(4), 1, order);
            let den = series_mul(&four_t, &elementary_series(Elementary::Cosh, &one, order));
            series_div(&polylog_of(k, &u, order)?, &den)?
        }
        SeqFamily::PolyEuler2 { k } => {
            let order = nmax + 1;
            let u = one_minus_exp(-4, order);
            let den = elementary_series(Elementary::Sinh, &one, order).scale(&rational::int(4));
            series_div(&polylog_of(k, &u, order)?, &den)?
        }
        SeqFamily::HyperEuler { level } => {
            let lead = 2 * level as usize;
            let order = nmax + lead;
            let num = TruncSeries::monomial(rational::from_big(rational::factorial(lead)).recip(), lead, order);
            let tail = drop_leading_terms(elementary_series(Elementary::Cosh, &one, order), lead);
            series_div(&num, &tail)?
        }
        SeqFamily::HyperEuler2 { level } => {
            let lead = 2 * level as usize + 1;
            let order = nmax + lead;
            let num = TruncSeries::monomial(rational::from_big(rational::factorial(lead)).recip(), lead, order);
            let tail = drop_leading_terms(elementary_series(Elementary::Sinh, &one, order), lead);
            series_div(&num, &tail)?
        }
    };
    debug_assert_eq!(series.order(), nmax);
    (0..=nmax).map(|n| egf_extract(&series, n)).collect()
}

/// `1 - e^{scale t}`
fn one_minus_exp(scale: i64, order: usize) -> TruncSeries {
    let exp = elementary_series(Elementary::Exp, &rational::int(scale), order);
    TruncSeries::constant(ExactRational::one(), order).sub(&exp)
}

/// Zeroes the coefficients of `t^0..t^count`, i.e. subtracts the leading partial sum.
fn drop_leading_terms(mut s: TruncSeries, count: usize) -> TruncSeries {
    for c in s.coeffs.iter_mut().take(count) {
        *c = ExactRational::zero();
    }
    s
}

/// The family's value at `n` through the generating function alone.
pub fn value_by_gf(family: &SeqFamily, n: usize) -> Result<ExactRational> {
    sequences::check_index(n)?;
    Ok(sequence_by_gf(family, n)?.pop().expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn s(c: &[(i64, i64)]) -> TruncSeries {
        TruncSeries::new(c.iter().map(|&(p, q)| ratio(p, q)).collect())
    }

    // Euler numbers from sum_j C(2n,2j) E_2j = 0, in plain integers.
    fn euler_oracle(nmax: usize) -> Vec<i128> {
        let binom = |n: usize, k: usize| -> i128 {
            (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
        };
        let mut even = vec![1i128];
        for n in 1..=nmax / 2 {
            let s: i128 = (0..n).map(|j| binom(2 * n, 2 * j) * even[j]).sum();
            even.push(-s);
        }
        (0..=nmax).map(|i| if i % 2 == 0 { even[i / 2] } else { 0 }).collect()
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(
            elementary_series(Elementary::Exp, &int(-4), 2),
            TruncSeries::from_ints(&[1, -4, 8])
        );
        assert_eq!(
            elementary_series(Elementary::Sinh, &int(1), 3),
            s(&[(0, 1), (1, 1), (0, 1), (1, 6)])
        );
        assert_eq!(
            elementary_series(Elementary::Cosh, &int(1), 4),
            s(&[(1, 1), (0, 1), (1, 2), (0, 1), (1, 24)])
        );
    }

    #[test]
    fn mul_examples() {
        let sinh = elementary_series(Elementary::Sinh, &int(1), 3);
        let t_over_sinh = s(&[(1, 1), (0, 1), (-1, 6), (0, 1)]);
        assert_eq!(series_mul(&sinh, &t_over_sinh), TruncSeries::from_ints(&[0, 1, 0, 0]));

        let one_plus_t = TruncSeries::from_ints(&[1, 1]);
        assert_eq!(series_mul(&one_plus_t, &one_plus_t), TruncSeries::from_ints(&[1, 2]));

        let e = euler_oracle(4);
        let sech = TruncSeries::new(
            (0..=4).map(|n| ratio(e[n] as i64, rational::factorial(n).try_into().unwrap())).collect(),
        );
        assert_eq!(sech, s(&[(1, 1), (0, 1), (-1, 2), (0, 1), (5, 24)]));
        let cosh = elementary_series(Elementary::Cosh, &int(1), 4);
        assert_eq!(series_mul(&cosh, &sech), TruncSeries::from_ints(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn mul_shrinks_to_min_order() {
        let a = TruncSeries::from_ints(&[1, 2, 3, 4]);
        let b = TruncSeries::from_ints(&[1, 1]);
        assert_eq!(series_mul(&a, &b).order(), 1);
    }

    #[test]
    fn div_examples() {
        let t = TruncSeries::from_ints(&[0, 1, 0, 0, 0]);
        let sinh = elementary_series(Elementary::Sinh, &int(1), 4);
        let q = series_div(&t, &sinh).unwrap();
        assert_eq!(q.order(), 3);
        assert_eq!(q, s(&[(1, 1), (0, 1), (-1, 6), (0, 1)]));
        // one more order recovers the t^4 coefficient 7/360, i.e. 7/15 after * 4!
        let t = TruncSeries::monomial(int(1), 1, 5);
        let q = series_div(&t, &elementary_series(Elementary::Sinh, &int(1), 5)).unwrap();
        assert_eq!(q, s(&[(1, 1), (0, 1), (-1, 6), (0, 1), (7, 360)]));
        assert_eq!(egf_extract(&q, 2).unwrap(), ratio(-1, 3));
        assert_eq!(egf_extract(&q, 4).unwrap(), ratio(7, 15));

        assert_eq!(
            series_div(&TruncSeries::from_ints(&[0, 2, 4]), &TruncSeries::from_ints(&[0, 1, 0])).unwrap(),
            TruncSeries::from_ints(&[2, 4])
        );

        let cosh = elementary_series(Elementary::Cosh, &int(1), 6);
        let sech = series_div(&TruncSeries::constant(int(1), 6), &cosh).unwrap();
        let egf: Vec<_> = (0..=6).map(|n| egf_extract(&sech, n).unwrap()).collect();
        let oracle: Vec<_> = euler_oracle(6).into_iter().map(|v| int(v as i64)).collect();
        assert_eq!(egf, oracle);
        assert_eq!(egf, [1, 0, -1, 0, 5, 0, -61].map(int));
    }

    #[test]
    fn div_errors() {
        let err = series_div(&TruncSeries::from_ints(&[1, 1]), &TruncSeries::from_ints(&[0, 1]));
        assert!(matches!(err, Err(Error::DivisionByNonUnit(_))));
        let err = series_div(&TruncSeries::from_ints(&[1, 1]), &TruncSeries::zero(3));
        assert!(matches!(err, Err(Error::DivisionByNonUnit(_))));
        let err = series_div(&TruncSeries::zero(1), &TruncSeries::from_ints(&[0, 0, 1]));
        assert!(matches!(err, Err(Error::DivisionByNonUnit(_))));
    }

    #[test]
    fn polylog_examples() {
        let u = one_minus_exp(-1, 3);
        assert_eq!(polylog_of(1, &u, 3).unwrap(), TruncSeries::from_ints(&[0, 1, 0, 0]));

        let z = TruncSeries::from_ints(&[0, 1]);
        assert_eq!(polylog_of(0, &z, 1).unwrap(), TruncSeries::from_ints(&[0, 1]));

        // Li_{-1}(1 - e^{-4t}) / (4 sinh t): dividing by sinh costs one order
        let u = one_minus_exp(-4, 3);
        let li = polylog_of(-1, &u, 3).unwrap();
        let den = elementary_series(Elementary::Sinh, &int(1), 3).scale(&int(4));
        let q = series_div(&li, &den).unwrap();
        assert_eq!(egf_extract(&q, 1).unwrap(), int(6));
        assert_eq!(egf_extract(&q, 2).unwrap(), int(37));

        assert_eq!(
            polylog_of(2, &TruncSeries::from_ints(&[1, 1]), 2),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn li1_of_one_minus_exp_is_t() {
        for order in [1, 5, 12] {
            let li = polylog_of(1, &one_minus_exp(-1, order), order).unwrap();
            assert_eq!(li, TruncSeries::monomial(int(1), 1, order));
        }
    }

    #[test]
    fn extract_examples() {
        let t = TruncSeries::monomial(int(1), 1, 7);
        let q = series_div(&t, &elementary_series(Elementary::Sinh, &int(1), 7)).unwrap();
        assert_eq!(egf_extract(&q, 6).unwrap(), ratio(-31, 21));
        assert_eq!(egf_extract(&q, 0).unwrap(), int(1));
        assert_eq!(
            egf_extract(&q, 7),
            Err(Error::IndexBeyondOrder { index: 7, order: 6 })
        );
        let sech = series_div(
            &TruncSeries::constant(int(1), 4),
            &elementary_series(Elementary::Cosh, &int(1), 4),
        )
        .unwrap();
        assert_eq!(egf_extract(&sech, 4).unwrap(), int(5));
    }

    #[test]
    fn sequence_examples() {
        let pe2 = sequence_by_gf(&SeqFamily::PolyEuler2 { k: 2 }, 3).unwrap();
        assert_eq!(pe2[1..], [int(-1), ratio(5, 9), int(1)]);
        assert_eq!(sequence_by_gf(&SeqFamily::PolyEuler2 { k: 0 }, 2).unwrap(), [1, 2, 5].map(int));
        assert_eq!(
            sequence_by_gf(&SeqFamily::HyperEuler2 { level: 1 }, 2).unwrap(),
            [int(1), int(0), ratio(-1, 10)]
        );
        assert_eq!(
            sequence_by_gf(&SeqFamily::HyperEuler { level: 1 }, 2).unwrap(),
            [int(1), int(0), ratio(-1, 6)]
        );
        assert_eq!(
            sequence_by_gf(&SeqFamily::BernoulliMinus, 2).unwrap(),
            [int(1), ratio(-1, 2), ratio(1, 6)]
        );
        assert_eq!(
            sequence_by_gf(&SeqFamily::BernoulliPlus, 2).unwrap(),
            [int(1), ratio(1, 2), ratio(1, 6)]
        );
        // poly-Euler of the first kind at k = 1 is the Euler sequence
        assert_eq!(
            sequence_by_gf(&SeqFamily::PolyEuler { k: 1 }, 8).unwrap(),
            sequence_by_gf(&SeqFamily::Euler, 8).unwrap()
        );
    }

    #[test]
    fn even_families_vanish_at_odd_index() {
        let families = [
            SeqFamily::Euler,
            SeqFamily::CompEuler,
            SeqFamily::HyperEuler { level: 2 },
            SeqFamily::HyperEuler2 { level: 3 },
        ];
        for f in &families {
            let seq = sequence_by_gf(f, 15).unwrap();
            assert!(seq.iter().skip(1).step_by(2).all(Zero::is_zero), "{f:?}");
        }
    }

    #[test]
    fn rejects_out_of_range_k() {
        assert!(matches!(
            sequence_by_gf(&SeqFamily::PolyEuler2 { k: 65 }, 3),
            Err(Error::ParameterOutOfRange { .. })
        ));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_series(len: usize) -> impl Strategy<Value = TruncSeries> {
            prop::collection::vec((-9i64..=9, 1i64..=5), len)
                .prop_map(|c| TruncSeries::new(c.into_iter().map(|(p, q)| ratio(p, q)).collect()))
        }

        proptest! {
            #[test]
            fn division_undoes_multiplication(
                a in small_series(7),
                b in small_series(7),
                shift in 0usize..3,
            ) {
                prop_assume!(!b.coeffs()[0].is_zero());
                // give b a valuation of `shift`
                let mut bc = vec![ExactRational::zero(); shift];
                bc.extend(b.coeffs().iter().cloned());
                let b = TruncSeries::new(bc);
                let prod = series_mul(&a.truncate(b.order()), &b);
                let q = series_div(&prod, &b).unwrap();
                prop_assert_eq!(q.order(), prod.order() - shift);
                prop_assert_eq!(q, a.truncate(prod.order() - shift));
            }
        }
    }
}
