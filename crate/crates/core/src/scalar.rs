//! Exact Gaussian rationals `a + b i` with `a, b ∈ Q`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A Gaussian rational. Both parts are kept in lowest terms with positive
/// denominators, so structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        // BigRational::new reduces; values built through arithmetic are already reduced.
        Scalar { re, im }
    }

    pub fn from_int(v: i64) -> Self {
        Scalar::new(BigRational::from_integer(BigInt::from(v)), BigRational::zero())
    }

    /// `num / den`; panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::new(BigRational::new(BigInt::from(num), BigInt::from(den)), BigRational::zero())
    }

    pub fn complex(re: Scalar, im: Scalar) -> Self {
        debug_assert!(re.im.is_zero() && im.im.is_zero());
        Scalar::new(re.re, im.re)
    }

    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|²`, a non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Scalar::new(&self.re / &n, -(&self.im / &n)))
    }

    /// `(-1)^e` for a possibly negative exponent.
    pub fn sign_pow(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denom_lcm(&self) -> BigInt {
        num_integer::Integer::lcm(self.re.denom(), self.im.denom())
    }

    /// Re-reduce both parts. Arithmetic already returns canonical values, so
    /// this is the identity on anything built through the public API.
    pub fn canonical(&self) -> Self {
        Scalar::new(
            BigRational::new(self.re.numer().clone(), self.re.denom().clone()),
            BigRational::new(self.im.numer().clone(), self.im.denom().clone()),
        )
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::new(v, BigRational::zero())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| Scalar::new(&a.re + &b.re, &a.im + &b.im));
forward_binop!(Sub, sub, |a, b| Scalar::new(&a.re - &b.re, &a.im - &b.im));
forward_binop!(Mul, mul, |a, b| {
    if a.im.is_zero() && b.im.is_zero() {
        return Scalar::new(&a.re * &b.re, BigRational::zero());
    }
    Scalar::new(&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re)
});
forward_binop!(Div, div, |a, b| {
    let inv = b.inv().expect("division by zero scalar");
    a * &inv
});

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// `3/4`, `-2i`, `1/2+3i`, `1-1/3i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}i", fmt_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, thiserror::Error)]
#[error("cannot parse Gaussian rational from {0:?}")]
pub struct ParseScalarError(pub String);

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(err());
        }
        let Some(body) = t.strip_suffix('i') else {
            return parse_rational(t).map(Scalar::from).ok_or_else(err);
        };
        // Split at the last sign that is not the leading one.
        let split = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i).last();
        let (re, im) = match split {
            Some(i) => (parse_rational(&body[..i]).ok_or_else(err)?, &body[i..]),
            None => (BigRational::zero(), body),
        };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other)).ok_or_else(err)?,
        };
        Ok(Scalar::new(re, im))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn canonical_form_of_ratio() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(-3, -6), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Scalar::i() * &Scalar::i(), -Scalar::one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(q(3, 4).to_string(), "3/4");
        assert_eq!((Scalar::i() * Scalar::from(-2)).to_string(), "-2i");
        assert_eq!((q(1, 2) + Scalar::i() * Scalar::from(3)).to_string(), "1/2+3i");
        assert_eq!((Scalar::one() - Scalar::i() * q(1, 3)).to_string(), "1-1/3i");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn parse_unit_imaginary() {
        assert_eq!("i".parse::<Scalar>().unwrap(), Scalar::i());
        assert_eq!("-i".parse::<Scalar>().unwrap(), -Scalar::i());
        assert_eq!("2-i".parse::<Scalar>().unwrap(), Scalar::from(2) - Scalar::i());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| Scalar::complex(q(a, b), q(c, d)))
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(z in arb_scalar()) {
            let back: Scalar = z.to_string().parse().unwrap();
            prop_assert_eq!(back, z);
        }

        #[test]
        fn canonical_is_idempotent(z in arb_scalar()) {
            prop_assert_eq!(z.canonical(), z.clone());
            prop_assert_eq!(z.canonical().canonical(), z);
        }

        #[test]
        fn inverse_is_two_sided(z in arb_scalar()) {
            prop_assume!(!z.is_zero());
            let inv = z.inv().unwrap();
            prop_assert!((&z * &inv).is_one());
            prop_assert!((&inv * &z).is_one());
        }
    }
}
