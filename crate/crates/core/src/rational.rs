//! Exact rational helpers on top of [`BigRational`].
//!
//! Values are always kept reduced with a positive denominator, which
//! `num-rational` guarantees for every constructor we use.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational as Rational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats as `numerator/denominator`, including a denominator of 1.
pub fn fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Wrapper that displays a rational as `num/den`.
pub struct Fraction<'a>(pub &'a Rational);

impl fmt::Display for Fraction<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// Parses `n`, `-n` or `n/d`.
pub fn parse_fraction(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    HalfAwayFromZero,
    /// Toward positive infinity.
    Up,
}

/// Renders `r` with exactly `places` decimals.
pub fn to_decimal(r: &Rational, places: u32, mode: Rounding) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = r * Rational::from_integer(scale.clone());
    let q = match mode {
        Rounding::HalfAwayFromZero => scaled.round(),
        Rounding::Up => scaled.ceil(),
    }
    .to_integer();

    let negative = q.sign() == Sign::Minus;
    let (int_part, frac_part) = q.abs().div_rem(&scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if places > 0 {
        out.push('.');
        out.push_str(&format!("{:0>width$}", frac_part.to_string(), width = places as usize));
    }
    out
}

/// Exact rendering of an `f64` (taken at its binary value).
pub fn f64_to_decimal(x: f64, places: u32, mode: Rounding) -> String {
    let r = Rational::from_float(x).expect("finite value");
    to_decimal(&r, places, mode)
}

pub fn to_f64(r: &Rational) -> f64 {
    // numer/denom may individually overflow f64 for large d
    let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000) as usize;
    let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}
