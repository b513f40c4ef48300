//! Exact reduced fractions used for every probability and bound.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExactRatio(BigRational);

impl ExactRatio {
    /// Builds `num / den`. Panics if `den == 0`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "zero denominator");
        ExactRatio(BigRational::new(num.into(), den))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRatio(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRatio(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRatio(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn recip(&self) -> Self {
        ExactRatio(self.0.recip())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering rounded half-up to `places` digits.
    pub fn to_decimal(&self, places: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10), places);
        let neg = self.0.is_negative();
        let abs = self.0.abs();
        let two = BigInt::from(2);
        let scaled: BigInt = abs.numer() * &scale * &two + abs.denom();
        let rounded: BigInt = scaled / (abs.denom() * &two);
        let int_part = &rounded / &scale;
        let frac_part = &rounded % &scale;
        let sign = if neg && !rounded.is_zero() { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = places)
        }
    }

    /// The shared shape of every two-parameter bound:
    /// `(1/n)(1 + (n - 1)/index)`.
    pub fn class_bound(n: u64, index: u64) -> Self {
        assert!(n > 0 && index > 0);
        let n = BigInt::from(n);
        let index = BigInt::from(index);
        // (index + n - 1) / (n * index)
        ExactRatio::new(&index + &n - 1, n * index)
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl std::str::FromStr for ExactRatio {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let d: BigInt = d.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(ExactRatio::new(n, d))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRatio {
            type Output = ExactRatio;
            fn $method(self, rhs: ExactRatio) -> ExactRatio {
                ExactRatio(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactRatio> for &'a ExactRatio {
            type Output = ExactRatio;
            fn $method(self, rhs: &'a ExactRatio) -> ExactRatio {
                ExactRatio((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl std::iter::Sum for ExactRatio {
    fn sum<I: Iterator<Item = ExactRatio>>(iter: I) -> Self {
        iter.fold(ExactRatio::zero(), |acc, x| acc + x)
    }
}

// JSON shape: {"num": 5, "den": 8}. Integers that overflow i64 are emitted
// as decimal strings.
#[derive(Serialize, Deserialize)]
struct RatioRepr {
    num: IntRepr,
    den: IntRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    fn from_big(n: &BigInt) -> Self {
        n.to_i64().map(IntRepr::Small).unwrap_or_else(|| IntRepr::Big(n.to_string()))
    }

    fn to_big(&self) -> Result<BigInt, String> {
        match self {
            IntRepr::Small(n) => Ok(BigInt::from(*n)),
            IntRepr::Big(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        }
    }
}

impl Serialize for ExactRatio {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RatioRepr { num: IntRepr::from_big(self.numer()), den: IntRepr::from_big(self.denom()) }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactRatio {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = RatioRepr::deserialize(deserializer)?;
        let num = repr.num.to_big().map_err(D::Error::custom)?;
        let den = repr.den.to_big().map_err(D::Error::custom)?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(ExactRatio::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_on_construction() {
        let r = ExactRatio::new(40, 64);
        assert_eq!(r.to_string(), "5/8");
        assert_eq!(ExactRatio::new(3, -6).to_string(), "-1/2");
        assert_eq!(ExactRatio::new(4, 2).to_string(), "2");
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(ExactRatio::new(5, 8).to_decimal(6), "0.625000");
        assert_eq!(ExactRatio::new(1, 12).to_decimal(6), "0.083333");
        assert_eq!(ExactRatio::new(2, 3).to_decimal(6), "0.666667");
        assert_eq!(ExactRatio::new(1, 1).to_decimal(2), "1.00");
        assert_eq!(ExactRatio::new(-1, 3).to_decimal(3), "-0.333");
    }

    #[test]
    fn class_bound_shape() {
        // (1/2)(1 + 1/4)
        assert_eq!(ExactRatio::class_bound(2, 4), ExactRatio::new(5, 8));
        // (1/3)(1 + 2/6)
        assert_eq!(ExactRatio::class_bound(3, 6), ExactRatio::new(4, 9));
        assert_eq!(ExactRatio::class_bound(1, 7), ExactRatio::one());
    }

    #[test]
    fn json_shape() {
        let r = ExactRatio::new(5, 8);
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"num":5,"den":8}"#);
        let big = ExactRatio::new(BigInt::from(u64::MAX) * 3, 7);
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<ExactRatio>(&s).unwrap(), big);
    }

    proptest! {
        #[test]
        fn parse_display_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
            let r = ExactRatio::new(n, d);
            prop_assert_eq!(r.to_string().parse::<ExactRatio>().unwrap(), r.clone());
            let back: ExactRatio = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
            prop_assert_eq!(back, r);
        }
    }
}
