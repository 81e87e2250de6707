//! Exact ordered-field scalars.
//!
//! Every geometric routine in this crate is written against [`Scalar`], an
//! exact rational type. Floating point types are deliberately not admitted:
//! the constructions compare values for equality and sign, and a single
//! rounding error changes the combinatorics.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational number type.
///
/// Implementors must keep values in lowest terms with a positive denominator,
/// which both `num_rational` ratio types already guarantee.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Ord
    + Hash
    + Signed
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    fn numer_big(&self) -> BigInt;
    fn denom_big(&self) -> BigInt;

    /// Builds `numer / denom`. Panics when `denom` is zero or the value does
    /// not fit the representation.
    fn from_big(numer: BigInt, denom: BigInt) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits scalar")
    }

    fn to_rat(&self) -> BigRational {
        BigRational::new(self.numer_big(), self.denom_big())
    }

    fn from_rat(r: &BigRational) -> Self {
        Self::from_big(r.numer().clone(), r.denom().clone())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(&self.to_rat()).unwrap_or(f64::NAN)
    }
}

impl Scalar for BigRational {
    fn numer_big(&self) -> BigInt {
        self.numer().clone()
    }

    fn denom_big(&self) -> BigInt {
        self.denom().clone()
    }

    fn from_big(numer: BigInt, denom: BigInt) -> Self {
        BigRational::new(numer, denom)
    }

    fn to_rat(&self) -> BigRational {
        self.clone()
    }

    fn from_rat(r: &BigRational) -> Self {
        r.clone()
    }
}

impl Scalar for Ratio<i64> {
    fn numer_big(&self) -> BigInt {
        BigInt::from(*self.numer())
    }

    fn denom_big(&self) -> BigInt {
        BigInt::from(*self.denom())
    }

    fn from_big(numer: BigInt, denom: BigInt) -> Self {
        let g = numer.gcd(&denom);
        let (n, d) = (numer / &g, denom / &g);
        Ratio::new(
            n.to_i64().expect("numerator overflows i64"),
            d.to_i64().expect("denominator overflows i64"),
        )
    }
}

/// Parses the shared rational literal syntax `p/q` or `p` with optional sign.
pub fn parse_scalar<S: Scalar>(text: &str) -> Result<S> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational literal `{text}`"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num.trim_start_matches('+')).map_err(|_| bad())?;
    let den = BigInt::from_str(den.trim_start_matches('+')).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(S::from_big(num, den))
}

/// Formats a scalar as `p/q`, or `p` when the denominator is one.
pub fn format_scalar<S: Scalar>(value: &S) -> String {
    let d = value.denom_big();
    if d.is_one() {
        value.numer_big().to_string()
    } else {
        format!("{}/{}", value.numer_big(), d)
    }
}

pub(crate) fn big_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

/// Positive factor turning `values` into coprime integers, or `None` when all
/// values are zero.
pub(crate) fn primitive_factor<S: Scalar>(values: &[S]) -> Option<S> {
    let mut lcm = BigInt::one();
    let mut any = false;
    for v in values {
        if !v.is_zero() {
            any = true;
            lcm = big_lcm(&lcm, &v.denom_big());
        }
    }
    if !any {
        return None;
    }
    let mut gcd = BigInt::zero();
    for v in values {
        if !v.is_zero() {
            let scaled = v.numer_big() * (&lcm / v.denom_big());
            gcd = gcd.gcd(&scaled);
        }
    }
    Some(S::from_big(lcm, gcd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn parses_literals() {
        let half: Rat = parse_scalar("1/2").unwrap();
        assert_eq!(half, Rat::new(1.into(), 2.into()));
        let neg: Rat = parse_scalar("-6/4").unwrap();
        assert_eq!(format_scalar(&neg), "-3/2");
        let int: Rat = parse_scalar("+7").unwrap();
        assert_eq!(format_scalar(&int), "7");
        assert!(parse_scalar::<Rat>("1/0").is_err());
        assert!(parse_scalar::<Rat>("x").is_err());
    }

    #[test]
    fn small_ratio_round_trips() {
        let v: Ratio<i64> = parse_scalar("-10/4").unwrap();
        assert_eq!(v, Ratio::new(-5, 2));
        assert_eq!(format_scalar(&v), "-5/2");
    }

    #[test]
    fn primitive_factor_clears_denominators() {
        let vals: Vec<Rat> = vec![parse_scalar("1/2").unwrap(), parse_scalar("-3/4").unwrap()];
        let f = primitive_factor(&vals).unwrap();
        let scaled: Vec<String> = vals.iter().map(|v| format_scalar(&(v * &f))).collect();
        assert_eq!(scaled, vec!["2", "-3"]);
    }
}
