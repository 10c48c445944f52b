//! Exact rationals and their `"a/b"` text encoding.

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Q = Rational64;

/// Parses `"a/b"`, `"-a/b"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::MalformedRational(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => t.parse::<i64>().map(Q::from_integer).map_err(|_| bad()),
    }
}

/// Parses a comma separated list of rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<Q>> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(parse_rational)
        .collect()
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Representative of `q mod 1` in `[0, 1)`.
pub fn frac(q: Q) -> Q {
    q - q.floor()
}

pub fn is_half_open_unit(q: &Q) -> bool {
    !(*q < Q::zero()) && *q < Q::one()
}
