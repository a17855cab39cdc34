//! Coefficient fields.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The coefficient field homology is taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    /// The rationals; ranks are computed exactly.
    #[default]
    Rational,
    /// The prime field with `p` elements.
    Prime(u32),
}

impl Field {
    /// Builds `𝔽_p`, rejecting non-primes.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p > u64::from(u32::MAX) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    /// Re-checks a `Field::Prime` built by hand.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Field::Rational => Ok(()),
            Field::Prime(p) if is_prime(u64::from(p)) => Ok(()),
            Field::Prime(p) => Err(Error::NotPrime(u64::from(p))),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        match s.strip_prefix("Fp:").map(str::parse::<u64>) {
            Some(Ok(p)) => Field::prime(p),
            _ => Err(Error::UnknownField(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_descriptors() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("Fp:2".parse::<Field>().unwrap(), Field::Prime(2));
        assert_eq!("Fp:7".parse::<Field>().unwrap().to_string(), "Fp:7");
        assert_eq!("Fp:9".parse::<Field>(), Err(Error::NotPrime(9)));
        assert_eq!("Fp:1".parse::<Field>(), Err(Error::NotPrime(1)));
        assert!(matches!("R".parse::<Field>(), Err(Error::UnknownField(_))));
        assert!(matches!("Fp:x".parse::<Field>(), Err(Error::UnknownField(_))));
    }

    #[test]
    fn hand_built_prime_is_validated() {
        assert!(Field::Prime(4).validate().is_err());
        assert!(Field::Prime(65_521).validate().is_ok());
    }
}
