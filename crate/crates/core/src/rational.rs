//! Exact rationals and their `p/q` text form.

use num_rational::Rational64;
use num_traits::{Signed, Zero};

/// Exact rational used for every charge value and `t²`.
pub type Q = Rational64;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn int(n: i64) -> Q {
    Q::from_integer(n)
}

/// Lowest-terms `p/q` with `q > 0`, always including the denominator.
pub fn format_ratio(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRatioError {
    #[error("empty rational")]
    Empty,
    #[error("malformed integer in rational {0:?}")]
    BadInteger(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_ratio(text: &str) -> Result<Q, ParseRatioError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseRatioError::Empty);
    }
    let bad = || ParseRatioError::BadInteger(text.to_string());
    match text.split_once('/') {
        None => text.parse::<i64>().map(int).map_err(|_| bad()),
        Some((n, d)) => {
            let n = n.trim().parse::<i64>().map_err(|_| bad())?;
            let d = d.trim().parse::<i64>().map_err(|_| bad())?;
            if d == 0 {
                return Err(ParseRatioError::ZeroDenominator(text.to_string()));
            }
            Ok(Q::new(n, d))
        }
    }
}

pub fn to_f64(x: &Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Decimal `√x` for display; negative inputs render as NaN.
pub fn sqrt_decimal(x: &Q, digits: usize) -> String {
    if x.is_negative() {
        return "NaN".to_string();
    }
    format!("{:.*}", digits, to_f64(x).sqrt())
}

pub fn floor_int(x: &Q) -> i64 {
    x.floor().to_integer()
}

pub fn ceil_int(x: &Q) -> i64 {
    x.ceil().to_integer()
}

/// Largest integer strictly below `x`.
pub fn largest_int_below(x: &Q) -> i64 {
    ceil_int(x) - 1
}

pub fn is_positive(x: &Q) -> bool {
    !x.is_zero() && !x.is_negative()
}
