//! Small shared helpers.

use crate::error::{Error, Result};
use crate::scale::ExpScale;
use crate::series::Series;

/// binomial(n, 2) = n(n-1)/2, valid for any integer n.
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Run a builder that takes a natural-units order and make sure the result
/// is sound to `order_q` on `scale`, retrying with a larger request when an
/// assembly (shifts, negative-exponent factors) ate into the sound order.
pub fn ensure_order<F>(scale: ExpScale, order_q: i64, mut build: F) -> Result<Series>
where
    F: FnMut(i64) -> Result<Series>,
{
    let want = order_q
        .checked_mul(scale.denominator())
        .ok_or_else(|| Error::Overflow("requested order".into()))?;
    let mut req = order_q;
    for _ in 0..6 {
        let s = build(req)?;
        if s.order_scaled() >= want {
            return Ok(s.truncated(want));
        }
        let deficit = want - s.order_scaled();
        let bump = (deficit + scale.denominator() - 1) / scale.denominator();
        req += bump.max(1);
    }
    Err(Error::NonTruncatable(format!(
        "builder kept falling short of the requested order q^{order_q}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom2_negative_arguments() {
        assert_eq!(binom2(-1), 1);
        assert_eq!(binom2(-2), 3);
        assert_eq!(binom2(0), 0);
        assert_eq!(binom2(3), 3);
    }

    #[test]
    fn ensure_order_retries() {
        let s = ExpScale::unit();
        // A builder that always delivers two orders less than asked.
        let got = ensure_order(s, 10, |n| Ok(Series::one(s, n - 2))).unwrap();
        assert_eq!(got.order_scaled(), 10);
    }
}
