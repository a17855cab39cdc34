//! Hilbert–Poincaré series: polynomials in `t` with nonnegative integer
//! coefficients, one coefficient per homological degree.
//!
//! Wedge of spaces adds reduced series, smash product multiplies them, and
//! suspension shifts degrees. The same type holds reduced and unreduced
//! series; callers keep track of which one they have.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplicial::BettiVector;

/// A finitely supported map from degree to a positive coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GradedSeries {
    // invariant: no zero values
    coeffs: BTreeMap<u32, BigUint>,
}

impl GradedSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1u32)
    }

    /// `coeff · t^degree`.
    pub fn monomial(degree: u32, coeff: impl Into<BigUint>) -> Self {
        let mut s = Self::zero();
        s.add_term(degree, coeff.into());
        s
    }

    /// `t^degree`.
    pub fn t(degree: u32) -> Self {
        Self::monomial(degree, 1u32)
    }

    /// Series from `(degree, coefficient)` pairs; repeated degrees add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigUint>,
    {
        let mut s = Self::zero();
        for (d, c) in terms {
            s.add_term(d, c.into());
        }
        s
    }

    fn add_term(&mut self, degree: u32, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.coeffs.entry(degree).or_default() += coeff;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, degree: u32) -> BigUint {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigUint)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &GradedSeries) -> GradedSeries {
        let mut out = self.clone();
        out += other;
        out
    }

    /// Polynomial product.
    pub fn mul(&self, other: &GradedSeries) -> GradedSeries {
        let mut out = GradedSeries::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &other.coeffs {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }

    /// Multiplication by `t^d`, the series of a `d`-fold suspension.
    pub fn shift(&self, d: u32) -> GradedSeries {
        GradedSeries { coeffs: self.coeffs.iter().map(|(k, c)| (k + d, c.clone())).collect() }
    }

    /// Product of a sequence of series (the empty product is `1`).
    pub fn product<'a, I: IntoIterator<Item = &'a GradedSeries>>(factors: I) -> GradedSeries {
        factors.into_iter().fold(GradedSeries::one(), |acc, f| acc.mul(f))
    }

    /// Reduced series `Σ b̃_q t^q` of a Betti vector. A class in degree −1
    /// (the empty space) has no place in a series and is rejected.
    pub fn from_betti(b: &BettiVector) -> Result<GradedSeries> {
        if b.get(-1) != 0 {
            return Err(Error::NegativeDegreeBetti);
        }
        Ok(GradedSeries::from_terms(b.nonzero().map(|(q, v)| (q as u32, BigUint::from(v)))))
    }

    /// `Σ (−1)^n c_n`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, (d, c)| {
            let c = BigInt::from(c.clone());
            if d % 2 == 0 {
                acc + c
            } else {
                acc - c
            }
        })
    }

    /// Degrees where `self` and `other` have different coefficients.
    pub fn differing_degrees(&self, other: &GradedSeries) -> Vec<u32> {
        let mut ds: Vec<u32> = self.coeffs.keys().chain(other.coeffs.keys()).copied().collect();
        ds.sort_unstable();
        ds.dedup();
        ds.retain(|&d| self.coeff(d) != other.coeff(d));
        ds
    }
}

impl AddAssign<&GradedSeries> for GradedSeries {
    fn add_assign(&mut self, rhs: &GradedSeries) {
        for (d, c) in &rhs.coeffs {
            self.add_term(*d, c.clone());
        }
    }
}

impl Add for &GradedSeries {
    type Output = GradedSeries;

    fn add(self, rhs: &GradedSeries) -> GradedSeries {
        GradedSeries::add(self, rhs)
    }
}

impl Mul for &GradedSeries {
    type Output = GradedSeries;

    fn mul(self, rhs: &GradedSeries) -> GradedSeries {
        GradedSeries::mul(self, rhs)
    }
}

impl std::iter::Sum for GradedSeries {
    fn sum<I: Iterator<Item = GradedSeries>>(iter: I) -> Self {
        iter.fold(GradedSeries::zero(), |mut acc, s| {
            acc += &s;
            acc
        })
    }
}

impl fmt::Display for GradedSeries {
    /// `t^9+t^11+3t^12`: ascending degree, unit coefficients omitted, the
    /// constant term printed bare and `t^1` printed as `t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            let unit = c.is_one();
            match d {
                0 => write!(f, "{c}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{c}t")?,
                _ if unit => write!(f, "t^{d}")?,
                _ => write!(f, "{c}t^{d}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for GradedSeries {
    type Err = Error;

    /// Parses the display form. Also accepts `*` between coefficient and
    /// `t`, whitespace, and repeated degrees.
    fn from_str(text: &str) -> Result<Self> {
        let fail = |reason: &str| Error::SeriesParse { text: text.to_string(), reason: reason.to_string() };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(fail("empty input"));
        }
        if compact == "0" {
            return Ok(GradedSeries::zero());
        }
        let mut out = GradedSeries::zero();
        for term in compact.split('+') {
            if term.is_empty() {
                return Err(fail("empty term"));
            }
            let (coeff_text, power) = match term.find('t') {
                None => (term, None),
                Some(pos) => (&term[..pos], Some(&term[pos + 1..])),
            };
            let coeff_text = coeff_text.strip_suffix('*').unwrap_or(coeff_text);
            let coeff = if coeff_text.is_empty() {
                if power.is_none() {
                    return Err(fail("empty term"));
                }
                BigUint::one()
            } else {
                coeff_text.parse::<BigUint>().map_err(|_| fail("bad coefficient"))?
            };
            let degree = match power {
                None => 0,
                Some("") => 1,
                Some(p) => p
                    .strip_prefix('^')
                    .ok_or_else(|| fail("expected '^' after 't'"))?
                    .parse::<u32>()
                    .map_err(|_| fail("bad exponent"))?,
            };
            out.add_term(degree, coeff);
        }
        Ok(out)
    }
}

impl Serialize for GradedSeries {
    /// `{"coeffs": {"<degree>": "<decimal coefficient>"}}`.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a BTreeMap<u32, BigUint>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (d, c) in self.0 {
                    map.serialize_entry(&d.to_string(), &c.to_string())?;
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("coeffs", &Coeffs(&self.coeffs))?;
        map.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Text(String),
    Number(u64),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SeriesRepr {
    Text(String),
    Object { coeffs: BTreeMap<String, CoeffRepr> },
}

impl<'de> Deserialize<'de> for GradedSeries {
    /// Accepts the JSON object form or the display text form.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match SeriesRepr::deserialize(deserializer)? {
            SeriesRepr::Text(s) => s.parse().map_err(de::Error::custom),
            SeriesRepr::Object { coeffs } => {
                let mut out = GradedSeries::zero();
                for (d, c) in coeffs {
                    let degree = d
                        .parse::<u32>()
                        .map_err(|_| de::Error::custom(format!("degree {d:?} is not a nonnegative integer")))?;
                    let coeff = match c {
                        CoeffRepr::Number(n) => BigUint::from(n),
                        CoeffRepr::Text(s) => s.parse::<BigUint>().map_err(|_| {
                            de::Error::custom(format!("coefficient {s:?} is not a nonnegative integer"))
                        })?,
                    };
                    out.add_term(degree, coeff);
                }
                Ok(out)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use proptest::prelude::*;

    fn s(text: &str) -> GradedSeries {
        text.parse().unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(s("t^4").add(&s("t^6")), s("t^4+t^6"));
        assert_eq!(s("t^4+t^6").add(&GradedSeries::zero()), s("t^4+t^6"));
        assert_eq!(s("t^2+t^4").add(&s("t^4")).to_string(), "t^2+2t^4");
    }

    #[test]
    fn multiplication() {
        assert_eq!(s("t^2").mul(&s("t^2")), s("t^4"));
        assert_eq!(s("t^2+3t^5").mul(&GradedSeries::one()), s("t^2+3t^5"));
        assert_eq!(s("1+t^3").mul(&s("1+t^3")).to_string(), "1+2t^3+t^6");
        assert!(s("t").mul(&GradedSeries::zero()).is_zero());
    }

    #[test]
    fn shifting() {
        assert_eq!(s("t").shift(4), s("t^5"));
        assert_eq!(s("1+t").shift(0), s("1+t"));
        assert_eq!(s("1+t").shift(2).to_string(), "t^2+t^3");
    }

    #[test]
    fn from_betti_vectors() {
        let circle = BettiVector::from_values(Field::Rational, vec![0, 0, 1]);
        assert_eq!(GradedSeries::from_betti(&circle).unwrap(), s("t"));
        let zero = BettiVector::from_values(Field::Rational, vec![]);
        assert!(GradedSeries::from_betti(&zero).unwrap().is_zero());
        let two_points = BettiVector::from_values(Field::Rational, vec![0, 1]);
        assert_eq!(GradedSeries::from_betti(&two_points).unwrap(), GradedSeries::one());
        let void = BettiVector::from_values(Field::Rational, vec![1]);
        assert_eq!(GradedSeries::from_betti(&void), Err(Error::NegativeDegreeBetti));
    }

    #[test]
    fn text_format() {
        assert_eq!(s("t^9+t^11+3t^12+5t^14+2t^16").to_string(), "t^9+t^11+3t^12+5t^14+2t^16");
        assert_eq!(s("t^5 + 1").to_string(), "1+t^5");
        assert_eq!(s("2 + 3*t + t^1 + 0t^7").to_string(), "2+4t");
        assert_eq!(GradedSeries::zero().to_string(), "0");
        for bad in ["", "t^", "x", "1++t", "t^-1", "-1"] {
            assert!(bad.parse::<GradedSeries>().is_err(), "{bad:?} parsed");
        }
    }

    #[test]
    fn json_format() {
        let v = s("t^9+3t^12");
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"coeffs":{"9":"1","12":"3"}}"#);
        let back: GradedSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        let from_numbers: GradedSeries = serde_json::from_str(r#"{"coeffs":{"9":1,"12":3}}"#).unwrap();
        assert_eq!(from_numbers, v);
        let from_text: GradedSeries = serde_json::from_str(r#""t^9+3t^12""#).unwrap();
        assert_eq!(from_text, v);
        assert!(serde_json::from_str::<GradedSeries>(r#"{"coeffs":{"a":"1"}}"#).is_err());
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let x = GradedSeries::monomial(1, u64::MAX);
        let sq = x.mul(&x);
        assert_eq!(sq.coeff(2), BigUint::from(u64::MAX) * BigUint::from(u64::MAX));
        let text = sq.to_string();
        assert_eq!(text.parse::<GradedSeries>().unwrap(), sq);
    }

    fn series() -> impl Strategy<Value = GradedSeries> {
        proptest::collection::vec((0u32..8, 0u32..5), 0..5).prop_map(GradedSeries::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(a in series(), b in series(), c in series()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn shift_is_multiplication_by_a_power(a in series(), d in 0u32..6) {
            prop_assert_eq!(a.shift(d), a.mul(&GradedSeries::t(d)));
        }

        #[test]
        fn betti_direct_sums(u in proptest::collection::vec(0usize..4, 0..5), v in proptest::collection::vec(0usize..4, 0..5)) {
            let pad = |mut x: Vec<usize>| { x.insert(0, 0); x };
            let n = u.len().max(v.len());
            let sum: Vec<usize> = (0..n).map(|i| u.get(i).unwrap_or(&0) + v.get(i).unwrap_or(&0)).collect();
            let bu = BettiVector::from_values(Field::Rational, pad(u));
            let bv = BettiVector::from_values(Field::Rational, pad(v));
            let bs = BettiVector::from_values(Field::Rational, pad(sum));
            prop_assert_eq!(
                GradedSeries::from_betti(&bs).unwrap(),
                GradedSeries::from_betti(&bu).unwrap().add(&GradedSeries::from_betti(&bv).unwrap())
            );
        }

        #[test]
        fn text_and_json_round_trip(a in series()) {
            prop_assert_eq!(a.to_string().parse::<GradedSeries>().unwrap(), a.clone());
            let json = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<GradedSeries>(&json).unwrap(), a);
        }
    }
}
