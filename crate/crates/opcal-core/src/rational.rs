//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Rat`]: a reduced fraction of
//! arbitrary-precision integers with a positive denominator (zero is `0/1`).
//! The textual form is `p/q`, or just `p` when the denominator is one, with
//! an optional leading minus sign.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number. `num_rational::Ratio` keeps the
/// invariants this crate needs: always reduced, denominator always positive.
pub type Rat = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics if `q == 0`; use [`parse_rat`] for untrusted input.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// `(-1)^k` as a sign flag: true means negative.
pub fn parity(k: usize) -> bool {
    k % 2 == 1
}

/// Renders as `p/q`, or `p` when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Parses `p`, `p/q`, `-p/q`. A Unicode minus sign is accepted as well.
/// Rejects a zero denominator and empty parts.
pub fn parse_rat(input: &str) -> Result<Rat> {
    let s = input.trim();
    let bad = || Error::BadRational(input.to_string());
    let (neg, body) = if let Some(rest) = s.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = s.strip_prefix('\u{2212}') {
        (true, rest)
    } else {
        (false, s)
    };
    let (num_str, den_str) = match body.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (body, None),
    };
    let numer: BigInt = num_str.parse().map_err(|_| bad())?;
    let denom: BigInt = match den_str {
        Some(q) => q.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    let value = Rat::new(numer, denom);
    Ok(if neg { -value } else { value })
}

/// True when the reduced form of `r` satisfies the stored invariants.
/// `Ratio` maintains them by construction; this is the oracle used in tests.
pub fn is_normalized(r: &Rat) -> bool {
    use num_integer::Integer;
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
        || (r.numer().is_zero() && r.denom().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formatting() {
        assert_eq!(format_rat(&rat(5)), "5");
        assert_eq!(format_rat(&rat(-5)), "-5");
        assert_eq!(format_rat(&ratio(2, 4)), "1/2");
        assert_eq!(format_rat(&ratio(3, -6)), "-1/2");
        assert_eq!(format_rat(&rat(0)), "0");
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rat("5").unwrap(), rat(5));
        assert_eq!(parse_rat("-7/3").unwrap(), ratio(-7, 3));
        assert_eq!(parse_rat("\u{2212}7/3").unwrap(), ratio(-7, 3));
        assert_eq!(parse_rat(" 4/6 ").unwrap(), ratio(2, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1/").is_err());
    }

    proptest! {
        #[test]
        fn field_axioms(p in -1000i64..1000, q in 1i64..60, r in -1000i64..1000, s in 1i64..60) {
            let a = ratio(p, q);
            let b = ratio(r, s);
            prop_assert!(is_normalized(&a));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a + (-&a), rat(0));
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip(), rat(1));
            }
            prop_assert_eq!(&a * (&b + rat(1)), &a * &b + &a);
        }

        #[test]
        fn round_trip(p in -100000i64..100000, q in 1i64..1000) {
            let a = ratio(p, q);
            prop_assert_eq!(parse_rat(&format_rat(&a)).unwrap(), a);
        }
    }
}
