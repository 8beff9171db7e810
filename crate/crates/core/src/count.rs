//! Exact, overflow-checked counting arithmetic.

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exact subgraph count.
pub type Count = u128;

/// Exact ratio of counts, always kept in lowest terms.
pub type Rational = Ratio<u128>;

#[inline]
pub(crate) fn add(a: Count, b: Count, what: &'static str) -> Result<Count> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

#[inline]
pub(crate) fn mul(a: Count, b: Count, what: &'static str) -> Result<Count> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

#[inline]
pub(crate) fn sub(a: Count, b: Count, what: &'static str) -> Result<Count> {
    a.checked_sub(b).ok_or(Error::NegativeCount(what))
}

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: Count, k: u32) -> Result<Count> {
    let k = Count::from(k);
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: Count = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = mul(acc, n - i, "binomial coefficient")? / (i + 1);
    }
    Ok(acc)
}

/// `base^exp` with overflow checking.
pub fn pow(base: Count, exp: u32) -> Result<Count> {
    base.checked_pow(exp).ok_or(Error::Overflow("integer power"))
}

pub(crate) fn sum<I>(items: I, what: &'static str) -> Result<Count>
where
    I: IntoIterator<Item = Result<Count>>,
{
    items.into_iter().try_fold(0, |acc, x| add(acc, x?, what))
}

/// Decimal rendering of an exact ratio.
pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(4, 3).unwrap(), 4);
        assert_eq!(binomial(3, 4).unwrap(), 0);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(60, 30).unwrap(), 118_264_581_564_861_424);
    }

    #[test]
    fn checked_ops_report_overflow() {
        assert_eq!(mul(u128::MAX, 2, "x"), Err(Error::Overflow("x")));
        assert_eq!(add(u128::MAX, 1, "y"), Err(Error::Overflow("y")));
        assert_eq!(sub(1, 2, "z"), Err(Error::NegativeCount("z")));
        assert!(pow(10, 39).is_err());
        assert_eq!(pow(5, 3).unwrap(), 125);
    }
}
